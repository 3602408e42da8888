"""Error hierarchy shared by the library, the CLI and the HTTP service.

Every error carries a machine-readable payload so front ends can emit
structured JSON without string-scraping exception messages.
"""

from __future__ import annotations

from typing import Any


class SuturedPolyError(Exception):
    """Base class; ``code`` is a stable machine-readable identifier."""

    code = "error"

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def payload(self) -> dict[str, Any]:
        out: dict[str, Any] = {"code": self.code, "message": self.message}
        if self.details:
            out["details"] = self.details
        return out


class DomainError(SuturedPolyError):
    """Input is well-formed but mathematically inadmissible for the operation."""

    code = "domain_error"


class DimensionMismatch(DomainError):
    code = "dimension_mismatch"


class NotFullDimensional(DomainError):
    """Facet enumeration requires a full-dimensional polytope.

    Carries the actual affine dimension so callers can decide to project.
    """

    code = "not_full_dimensional"

    def __init__(self, message: str, affine_dim: int, ambient_dim: int):
        super().__init__(message, affine_dim=affine_dim, ambient_dim=ambient_dim)
        self.affine_dim = affine_dim
        self.ambient_dim = ambient_dim


class ParseError(SuturedPolyError):
    """Malformed input file or literal."""

    code = "parse_error"
