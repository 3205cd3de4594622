"""Exhaustive verification of the characterizations."""

from indeco.verification.claims import (
    DEFAULT_MAX_FENCE,
    verify_2aclem,
    verify_2chfinal,
    verify_adjacent,
    verify_all,
    verify_corollary,
    verify_nonadjacent,
    verify_rigidity,
    verify_st_growth,
    verify_vcover,
    verify_x_equiv,
)

__all__ = [
    "DEFAULT_MAX_FENCE",
    "verify_2aclem",
    "verify_2chfinal",
    "verify_adjacent",
    "verify_all",
    "verify_corollary",
    "verify_nonadjacent",
    "verify_rigidity",
    "verify_st_growth",
    "verify_vcover",
    "verify_x_equiv",
]
