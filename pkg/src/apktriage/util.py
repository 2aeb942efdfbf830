"""Small shared helpers."""

from decimal import ROUND_HALF_UP, Decimal


def round_half_up(value: float, places: int) -> float:
    """Decimal half-up rounding, matching the precision used in reports."""
    q = Decimal(1).scaleb(-places)
    return float(Decimal(repr(value)).quantize(q, rounding=ROUND_HALF_UP))


def pct(numerator: int, denominator: int, places: int = 2) -> float:
    if denominator == 0:
        return 0.0
    return round_half_up(100.0 * numerator / denominator, places)
