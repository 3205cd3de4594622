"""
Exception hierarchy for indeco.

ALL exceptions MUST inherit from IndecoError.
NO bare Exception raises allowed.
"""

from typing import Any


class IndecoError(Exception):
    """Base exception for all indeco errors."""

    def __init__(
        self,
        message: str,
        *,
        code: str | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message)
        self.message = message
        self.code = code or self.__class__.__name__
        self.details = details or {}

    def __str__(self) -> str:
        if self.details:
            return f"{self.message} (details: {self.details})"
        return self.message


# =============================================================================
# Poset Errors
# =============================================================================


class PosetError(IndecoError):
    """Invalid poset construction or query."""

    pass


class CycleError(PosetError):
    """Relations would violate irreflexivity after closure."""

    def __init__(self, element: int) -> None:
        super().__init__(
            f"Relations contain a cycle through element {element}",
            details={"element": element},
        )
        self.element = element


class ElementIndexError(PosetError, IndexError):
    """Element index outside 0..n-1."""

    def __init__(self, index: int, n: int) -> None:
        super().__init__(
            f"Element {index} out of range for poset of size {n}",
            details={"index": index, "n": n},
        )


class EmptyPoset(PosetError):
    """Posets with zero elements are not constructed."""

    pass


class EmptySelection(PosetError):
    """Operation requires a nonempty subset."""

    pass


class NotAChain(PosetError):
    """Pinned elements are expected to form a 2-chain a < b."""

    def __init__(self, a: int, b: int) -> None:
        super().__init__(
            f"Elements {a} and {b} do not satisfy {a} < {b}",
            details={"a": a, "b": b},
        )


# =============================================================================
# Bound Errors
# =============================================================================


class BoundError(IndecoError):
    """Errors from enumeration and search bounds."""

    pass


class SizeBound(BoundError):
    """Requested size is outside the supported range."""

    def __init__(self, what: str, value: int, low: int, high: int) -> None:
        super().__init__(
            f"{what}={value} outside supported range {low}..{high}",
            details={"what": what, "value": value, "low": low, "high": high},
        )
        self.value = value


# =============================================================================
# Catalog Errors
# =============================================================================


class CatalogError(IndecoError):
    """Errors in catalog construction or recognition."""

    pass


class UnknownName(CatalogError):
    """Catalog name does not exist."""

    def __init__(self, name: str, known: list[str]) -> None:
        super().__init__(
            f"Unknown catalog name '{name}'",
            details={"name": name, "known": known},
        )


class KindMismatch(CatalogError):
    """Entry or pin configuration has the wrong kind for the operation."""

    pass


class BadLength(CatalogError):
    """Fence or V-cover length outside the allowed range."""

    def __init__(self, length: int, minimum: int) -> None:
        super().__init__(
            f"Length {length} below minimum {minimum}",
            details={"length": length, "minimum": minimum},
        )


# =============================================================================
# Search Errors
# =============================================================================


class SearchError(IndecoError):
    """Errors in superset searches."""

    pass


class SeedNotIndecomposable(SearchError):
    """Seed subset does not induce an indecomposable subposet."""

    pass


class NoSuperset(SearchError):
    """No indecomposable proper superset of the seed exists."""

    pass


class PreconditionViolated(SearchError):
    """Inputs do not satisfy the operation's precondition."""

    pass


class TheoremFalsified(SearchError):
    """
    A searched-for witness does not exist.

    Raised when an exhaustive search fails where a theorem guarantees
    success. Never swallowed: verify records it as a violation.
    """

    def __init__(self, claim: str, details: dict[str, Any]) -> None:
        super().__init__(f"No witness found for claim '{claim}'", details=details)
        self.claim = claim


# =============================================================================
# Format Errors
# =============================================================================


class FormatError(IndecoError):
    """Errors reading or writing poset files."""

    pass


class ParseError(FormatError):
    """Poset file could not be parsed."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(
            f"line {line}: {message}",
            details={"line": line},
        )
        self.line = line


class UnreadableFile(FormatError):
    """Poset file could not be read as UTF-8 text."""

    def __init__(self, path: str, reason: str) -> None:
        super().__init__(f"cannot read {path}: {reason}", details={"path": path})
        self.path = path


class DuplicatePin(FormatError):
    """The same pin is declared twice."""

    def __init__(self, line: int, pin: str) -> None:
        super().__init__(
            f"line {line}: pin '{pin}' declared more than once",
            details={"line": line, "pin": pin},
        )
        self.line = line
