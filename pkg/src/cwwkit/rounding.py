"""Common rounding used by the index-based aggregation methods."""

import math


def round_half_away(x: float) -> int:
    """Round to the nearest integer with halves rounded away from zero.

    Python's built-in round() rounds halves to even, which would send
    0.5 to 0; the aggregation recursions need 0.5 -> 1.
    """
    if x >= 0:
        return math.floor(x + 0.5)
    return -math.floor(-x + 0.5)
