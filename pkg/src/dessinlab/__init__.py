"""Regular dessins as coset geometries: quotients, coverings and constructions."""

__version__ = "0.1.0"
