"""
Poset text files.

    # comment
    poset <n>          first non-comment line
    rel <i> <j>        i < j; the transitive closure is taken
    pin a <i>
    pin b <i>

Indices are 0-based. Blank lines are ignored.
"""

from __future__ import annotations

from collections.abc import Iterable

from pydantic import Field

from indeco.core.poset import PinnedTriple, Poset, from_relations
from indeco.exceptions import DuplicatePin, ParseError
from indeco.schemas.base import StrictModel


class PosetFile(StrictModel):
    """A parsed poset file with closed, sorted relations."""

    n: int = Field(..., ge=1)
    relations: list[tuple[int, int]] = Field(default_factory=list)
    a: int | None = None
    b: int | None = None
    comments: list[str] = Field(default_factory=list)

    def to_poset(self) -> Poset:
        return from_relations(self.n, self.relations)

    def to_triple(self) -> PinnedTriple | None:
        """The pinned triple, or None unless both pins are declared."""
        if self.a is None or self.b is None:
            return None
        return PinnedTriple(self.to_poset(), self.a, self.b)


def _int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line, f"expected an integer, got '{token}'") from None


def _index(token: str, line: int, n: int) -> int:
    value = _int(token, line)
    if not 0 <= value < n:
        raise ParseError(line, f"element {value} outside 0..{n - 1}")
    return value


def parse_poset_file(text: str) -> PosetFile:
    """
    Parse a poset file.

    Raises:
        ParseError: On malformed lines, with the 1-based line number
        CycleError: If the relations are not a strict order
        DuplicatePin: If a pin is declared twice
    """
    n: int | None = None
    pairs: list[tuple[int, int]] = []
    pins: dict[str, int] = {}
    pin_lines: dict[str, int] = {}
    comments: list[str] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue

        words = line.split()
        if n is None:
            if words[0] != "poset" or len(words) != 2:
                raise ParseError(number, "expected 'poset <n>' first")
            n = _int(words[1], number)
            if n < 1:
                raise ParseError(number, "poset needs at least one element")
            continue

        match words:
            case ["rel", x, y]:
                pairs.append((_index(x, number, n), _index(y, number, n)))
            case ["pin", ("a" | "b") as pin, x]:
                if pin in pins:
                    raise DuplicatePin(number, pin)
                pins[pin] = _index(x, number, n)
                pin_lines[pin] = number
            case ["poset", *_]:
                raise ParseError(number, "duplicate 'poset' line")
            case _:
                raise ParseError(number, f"unrecognized line '{line}'")

    if n is None:
        raise ParseError(1, "missing 'poset <n>' line")
    if "a" in pins and pins["a"] == pins.get("b"):
        raise ParseError(max(pin_lines.values()), "pins a and b must differ")

    poset = from_relations(n, pairs)
    return PosetFile(
        n=n,
        relations=poset.relations(),
        a=pins.get("a"),
        b=pins.get("b"),
        comments=comments,
    )


def serialize_poset_file(
    p: Poset,
    pins: tuple[int, int] | None = None,
    comments: Iterable[str] = (),
) -> str:
    """Text form of ``p``; relations are written closed."""
    lines = [f"# {c}" if c else "#" for c in comments]
    lines.append(f"poset {p.n}")
    lines.extend(f"rel {x} {y}" for x, y in p.relations())
    if pins is not None:
        lines.extend([f"pin a {pins[0]}", f"pin b {pins[1]}"])
    return "\n".join(lines) + "\n"


def serialize_triple(t: PinnedTriple, comments: Iterable[str] = ()) -> str:
    """Text form of a pinned triple."""
    return serialize_poset_file(t.poset, (t.a, t.b), comments)
