"""
Utility functions and helpers.
"""

from indeco.utils.bits import full_mask, iter_bits, mask_of, popcount, submasks_containing

__all__ = [
    "full_mask",
    "iter_bits",
    "mask_of",
    "popcount",
    "submasks_containing",
]
