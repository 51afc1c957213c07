"""Exception hierarchy shared by every module.

Each error maps onto one CLI exit code, see ``dessinlab.cli``.
"""


class DessinLabError(Exception):
    """Base class for all library errors."""


class PreconditionError(DessinLabError, ValueError):
    """An argument violates a documented precondition."""


class CapExceeded(DessinLabError):
    """An enumeration grew beyond the configured element cap."""

    def __init__(self, cap, what="enumeration"):
        super().__init__(f"{what} exceeded the cap of {cap} elements")
        self.cap = cap


class NotGenerating(PreconditionError):
    """A pair does not generate the ambient group."""

    def __init__(self, closure_size, group_order):
        super().__init__(
            f"pair generates a subgroup of order {closure_size}, not {group_order}"
        )
        self.closure_size = closure_size
        self.group_order = group_order


class NotNormal(PreconditionError):
    """A subgroup is not normal; carries a witness (n, g) with g^-1 n g outside."""

    def __init__(self, n, g):
        super().__init__(f"conjugate of {n!r} by {g!r} leaves the subgroup")
        self.witness = (n, g)


class NotAHomomorphism(DessinLabError):
    """Generator-map extension hit a conflicting assignment."""


class NotBijective(DessinLabError):
    """Generator-map extension produced a non-bijective map."""


class SearchExhausted(DessinLabError):
    """A search that a theorem guarantees to succeed found nothing."""


class OutOfScope(DessinLabError):
    """A request falls outside what the library models."""


class ParseError(DessinLabError, ValueError):
    """Malformed textual input; ``offset`` is the 0-based position of the fault."""

    def __init__(self, message, text="", offset=0):
        super().__init__(f"{message} at offset {offset} in {text!r}")
        self.text = text
        self.offset = offset
