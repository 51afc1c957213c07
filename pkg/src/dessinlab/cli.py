"""Command-line interface: ``dessinlab <group> <command> [options]``.

Output is JSON (default) or CSV on stdout, or in ``--out``. Numbers are exact
integers or "a/b" strings. Errors print a JSON object on stderr and exit with
2 (parse), 3 (precondition), 4 (cap exceeded) or 5 (verification failure).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import acceptance, constructions, sl2, unicellular
from .covering import classify_covering, verify_quotient_theorem
from .dessin import make_dessin
from .errors import (CapExceeded, DessinLabError, NotAHomomorphism, NotBijective, ParseError,
                     PreconditionError, SearchExhausted)
from .groups.base import DEFAULT_CAP
from .groups.models import AffineGroup, WreathGroup
from .groups.ops import (center, cyclic_normal_subgroup, translation_subgroup, trivial_subgroup,
                         whole_group, wreath_base)
from .parse import parse_element, parse_group_spec

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_CAP, EXIT_VERIFY = 0, 2, 3, 4, 5


class VerificationFailed(DessinLabError):
    def __init__(self, message, result):
        super().__init__(message)
        self.result = result


def jsonable(value):
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return [jsonable(v) for v in sorted(value)]
    if isinstance(value, float):
        raise TypeError(f"refusing to emit float {value!r}")
    if hasattr(value, "item"):  # numpy scalar
        return jsonable(value.item())
    return str(value)


def parse_int_list(text: str) -> list[int]:
    """``7``, ``5,7,11`` or ``5-97`` (inclusive)."""
    out = []
    for part in text.split(","):
        part = part.strip()
        lo, dash, hi = part.partition("-")
        try:
            if dash and lo:
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise ParseError("expected integers, comma lists or ranges a-b", text,
                             text.find(part)) from None
    return out


def parse_triple(text: str) -> tuple[int, int, int]:
    values = parse_int_list(text)
    if len(values) != 3:
        raise ParseError("expected three integers l,m,n", text, 0)
    return tuple(values)


def parallel_map(func, items, jobs: int) -> list:
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items))


# dessin / quotient

def _dessin_from_args(args):
    spec = parse_group_spec(args.group)
    G = spec.group
    b = parse_element(G, args.b)
    w = parse_element(G, args.w)
    return make_dessin(G, b, w, args.cap)


def cmd_dessin_info(args):
    D = _dessin_from_args(args)
    out = D.report()
    if args.faces:
        faces = D.face_set()
        out["faces"] = [[D.group.format_element(e) for e in f.edges] for f in faces]
    return out


def _subgroup(D, by: str, cap: int):
    G = D.group
    if by == "center":
        return center(G, cap)
    if by == "trivial":
        return trivial_subgroup(G)
    if by == "whole":
        return whole_group(G, cap)
    if by == "base":
        if not isinstance(G, WreathGroup):
            raise PreconditionError("--by base needs a wreath group")
        return wreath_base(G)
    if by == "translations":
        if not isinstance(G, AffineGroup):
            raise PreconditionError("--by translations needs an agl1 group")
        return translation_subgroup(G)
    if by.startswith("cyclic:"):
        return cyclic_normal_subgroup(G, parse_element(G, by[len("cyclic:"):]))
    raise ParseError("expected center, trivial, whole, base, translations or cyclic:<elem>",
                     by, 0)


def cmd_quotient_classify(args):
    D = _dessin_from_args(args)
    N = _subgroup(D, args.by, args.cap)
    report = classify_covering(D, N, args.cap)
    out = {"dessin": D.report(), "subgroup_order": N.order, "covering": report.to_json()}
    if D.order <= args.cap and not args.no_geometric:
        out["quotient_theorem"] = verify_quotient_theorem(D, N, args.cap)
    return out


# unicellular

def _enumerate_rows(ell: int) -> list[dict]:
    return [d.as_row() for d in unicellular.enumerate_unicellular(ell)]


def cmd_unicellular(args):
    ells = parse_int_list(args.ell)
    if any(ell < 1 for ell in ells):
        raise PreconditionError("ell must be positive")
    func = {"enumerate": _enumerate_rows, "count": unicellular.counting_report,
            "identity": unicellular.decomposition_identity}[args.action]
    results = parallel_map(func, ells, args.jobs)
    if args.action == "enumerate":
        return [row for rows in results for row in rows]
    return results[0] if len(results) == 1 else results


# constructions

def cmd_construct(args):
    if args.family == "ha":
        params = constructions.HAParams(args.p, args.d, args.ell, args.i, args.j, args.x)
        return constructions.ha_report(params, args.cap)
    T, s, t = constructions.default_a5_pair()
    if args.family == "tw":
        return constructions.tw_report(T, args.k, s, t)
    if args.family == "pa":
        a = parse_element(T, args.a)
        D, info = constructions.construct_pa(T, args.k, a, s, t, args.cap)
        return {"family": "PA", "k": args.k, "a": T.format_element(a),
                "dessin": D.report(), "checks": info}
    return constructions.as_report(args.r, args.verify_closure, args.cap)


# sl2

def _smooth_row(p: int) -> dict:
    idx = sl2.smooth_indices(p)
    return {"p": p, "count": len(idx), "formula": sl2.smooth_count_formula(p), "indices": idx}


def _fibonacci_row(p: int) -> dict:
    return sl2.fibonacci_smooth_verdicts([p])[0]


def cmd_sl2(args):
    action = args.action
    if action == "orders":
        rows = parallel_map(sl2.smooth_index_table, parse_int_list(args.p), args.jobs)
        return [row for table in rows for row in table]
    if action == "smooth":
        rows = parallel_map(_smooth_row, parse_int_list(args.p), args.jobs)
        return rows[0] if len(rows) == 1 else rows
    if action == "psi":
        return sl2.psi_report(args.n, args.p_max)
    if action == "fibonacci":
        return parallel_map(_fibonacci_row, parse_int_list(args.p), args.jobs)
    l, m, n = parse_triple(args.triple)
    if action == "criterion":
        out = {"q": args.q, "triple": [l, m, n], "projective": args.projective,
               "criterion": sl2.lmn_group_criterion(args.q, l, m, n, args.projective)}
        if args.oracle:
            out["oracle"] = sl2.brute_force_lmn(args.q, l, m, n, args.projective) is not None
            if out["oracle"] != out["criterion"]:
                raise VerificationFailed("criterion disagrees with exhaustive search", out)
        return out
    return {"q": args.q, "triple": [l, m, n],
            "smooth_cover_exists": sl2.schur_smooth_exists(args.q, l, m, n)}


# verify

def _run_one(cid: int) -> dict:
    return acceptance.CRITERIA[cid]().to_json()


def cmd_verify(args):
    ids = args.id or sorted(acceptance.CRITERIA)
    unknown = [i for i in ids if i not in acceptance.CRITERIA]
    if unknown:
        raise PreconditionError(f"unknown criterion ids {unknown}")
    results = parallel_map(_run_one, ids, args.jobs)
    summary = {"passed": all(r["passed"] for r in results), "criteria": results}
    if not summary["passed"]:
        raise VerificationFailed("acceptance criteria failed", summary)
    return summary


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP)
    common.add_argument("--out")

    parser = argparse.ArgumentParser(prog="dessinlab", description="Regular dessins and their quotients.")
    top = parser.add_subparsers(dest="topic", required=True)

    def sub(parent, name, func, **kw):
        p = parent.add_parser(name, parents=[common], **kw)
        p.set_defaults(func=func)
        return p

    def dessin_args(p):
        p.add_argument("--group", required=True, help="group spec, e.g. quaternion:8")
        p.add_argument("--b", required=True)
        p.add_argument("--w", required=True)

    dessin = top.add_parser("dessin").add_subparsers(dest="action", required=True)
    p = sub(dessin, "info", cmd_dessin_info)
    dessin_args(p)
    p.add_argument("--faces", action="store_true")

    quotient = top.add_parser("quotient").add_subparsers(dest="action", required=True)
    p = sub(quotient, "classify", cmd_quotient_classify)
    dessin_args(p)
    p.add_argument("--by", default="center")
    p.add_argument("--no-geometric", action="store_true",
                   help="skip the geometric quotient comparison")

    uni = top.add_parser("unicellular").add_subparsers(dest="action", required=True)
    for name in ("enumerate", "count", "identity"):
        p = sub(uni, name, cmd_unicellular)
        p.add_argument("--ell", required=True, help="N, a list N,M or a range A-B")

    cons = top.add_parser("construct").add_subparsers(dest="family", required=True)
    p = sub(cons, "ha", cmd_construct)
    for flag in ("--p", "--d", "--ell", "--i", "--j"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--x", type=int, default=1)
    p = sub(cons, "tw", cmd_construct)
    p.add_argument("--k", type=int, required=True)
    p = sub(cons, "pa", cmd_construct)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", default="(0,1,2)", help="cycle word in A5 on points 0..4")
    p = sub(cons, "as", cmd_construct)
    p.add_argument("--r", type=int, default=5)
    p.add_argument("--verify-closure", action="store_true")

    s = top.add_parser("sl2").add_subparsers(dest="action", required=True)
    p = sub(s, "orders", cmd_sl2)
    p.add_argument("--p", required=True)
    p = sub(s, "smooth", cmd_sl2)
    p.add_argument("--p", required=True)
    p = sub(s, "psi", cmd_sl2)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p-max", type=int, default=19)
    p = sub(s, "fibonacci", cmd_sl2)
    p.add_argument("--p", required=True)
    p = sub(s, "criterion", cmd_sl2)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--triple", required=True, help="l,m,n")
    p.add_argument("--projective", action="store_true")
    p.add_argument("--oracle", action="store_true", help="also run the exhaustive search")
    p = sub(s, "schur", cmd_sl2)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--triple", required=True)

    verify = top.add_parser("verify").add_subparsers(dest="action", required=True)
    p = sub(verify, "all", cmd_verify)
    p.add_argument("--id", type=int, action="append")
    return parser


def _csv_rows(result) -> list[dict]:
    if isinstance(result, dict):
        result = [result]
    rows = []
    for item in result:
        row = {}
        for key, value in item.items():
            if isinstance(value, bool):
                row[key] = "true" if value else "false"
            elif isinstance(value, (int, str)) or value is None:
                row[key] = value
            else:
                row[key] = json.dumps(value, sort_keys=True)
        rows.append(row)
    return rows


def render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    rows = _csv_rows(payload["result"])
    buf = io.StringIO()
    fields = list(dict.fromkeys(k for row in rows for k in row))
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, ParseError):
        return EXIT_PARSE
    if isinstance(exc, CapExceeded):
        return EXIT_CAP
    if isinstance(exc, (VerificationFailed, SearchExhausted, NotAHomomorphism, NotBijective)):
        return EXIT_VERIFY
    return EXIT_PRECONDITION


def _command_name(args) -> str:
    second = getattr(args, "action", None) or getattr(args, "family", None)
    return f"{args.topic} {second}"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = _command_name(args)
    try:
        result = args.func(args)
        code = EXIT_OK
        payload = {"command": command, "result": jsonable(result)}
    except DessinLabError as exc:
        code = _exit_code(exc)
        error = {"command": command, "error": {"type": type(exc).__name__, "message": str(exc),
                                               "exit_code": code}}
        if isinstance(exc, ParseError):
            error["error"]["offset"] = exc.offset
        if isinstance(exc, VerificationFailed):
            error["result"] = jsonable(exc.result)
        sys.stderr.write(json.dumps(error, indent=2, sort_keys=True) + "\n")
        return code
    text = render(payload, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
