"""Catalog entry values shared by every family."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from indeco.core.poset import PinnedTriple, hasse_covers


class Extension(str, Enum):
    """One step of building a family-X member from the base N."""

    BOTTOM = "bottom"
    TOP = "top"


@dataclass(frozen=True, slots=True, order=True)
class Identity:
    """A catalog name together with its flags."""

    name: str
    dual: bool = False
    bx_swapped: bool = False

    def __str__(self) -> str:
        flags = [f for f, on in (("dual", self.dual), ("bx", self.bx_swapped)) if on]
        return f"{self.name} ({', '.join(flags)})" if flags else self.name


@dataclass(frozen=True, slots=True)
class VCoverAnchors:
    """The distinguished elements of a V-cover."""

    ell: int
    d: int
    h: int
    fence: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class CatalogEntry:
    """
    A labeled, pinned member of one of the characterized families.

    ``peel`` is the extension sequence of a family-X member starting from
    the base. ``fence_length`` and ``anchors`` describe fences and
    V-covers. ``aliases`` lists further identities that are
    pinned-isomorphic to this entry.
    """

    identity: Identity
    triple: PinnedTriple
    labels: tuple[str, ...]
    peel: tuple[Extension, ...] = ()
    fence_length: int | None = None
    anchors: VCoverAnchors | None = None
    aliases: tuple[Identity, ...] = ()

    @property
    def name(self) -> str:
        return self.identity.name

    @property
    def size(self) -> int:
        return self.triple.poset.n

    def describe(self) -> str:
        """Display name including flags and peel sequence."""
        if self.peel:
            return f"{self.identity} [{' '.join(e.value for e in self.peel)}]"
        if self.fence_length is not None:
            return f"{self.identity} [{self.fence_length}]"
        return str(self.identity)

    def cover_relations(self) -> list[tuple[str, str]]:
        """Hasse covers by label."""
        return [
            (self.labels[x], self.labels[y]) for x, y in hasse_covers(self.triple.poset)
        ]
