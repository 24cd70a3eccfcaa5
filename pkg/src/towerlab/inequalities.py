"""Margin functions for the logarithmic inequalities behind the tower bounds.

Each inequality is exposed as a signed margin (lhs - rhs of the strict
inequality), positive exactly where the inequality holds, plus a seeded
sweep harness that samples a domain and reports the observed minimum.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "Inequality",
    "MarginReport",
    "lemma3_margin",
    "witness_g",
    "lemma4a_margin",
    "lemma4b_margin",
    "sweep",
]

# exp overflows double precision just above 709; by z ~ 30 the inequalities
# are already astronomically slack, so capping at 700 loses nothing.
_EXP_CAP = 700.0


class Inequality(enum.Enum):
    """Identifiers for the swept inequalities; values are the CLI tokens."""

    LEMMA3 = "lemma3"
    LEMMA4A = "lemma4a"
    LEMMA4B = "lemma4b"
    WITNESS_G = "witness-g"


@dataclass(frozen=True)
class MarginReport:
    """Result of one seeded margin sweep."""

    inequality_id: Inequality
    samples: int
    domain_lo: float
    domain_hi: float
    min_margin: float
    argmin: float
    all_positive: bool
    seed: int


def lemma3_margin(z: float) -> float:
    """Margin of e^z > z + ln(z), i.e. e^z - z - ln(z), for 0 < z <= 700."""
    if not (0.0 < z <= _EXP_CAP):
        raise DomainError("z must satisfy 0 < z <= 700")
    return math.exp(z) - z - math.log(z)


def witness_g(z: float) -> float:
    """The increasing witness z*e^z - z - 1 for z <= 700.

    Negative on part of (0, 1) (g(0) = -1) and strictly increasing past
    z = 1, where g(1) = e - 2 > 0.
    """
    if not math.isfinite(z):
        raise DomainError("z must be finite")
    if z > _EXP_CAP:
        raise DomainError("z must be at most 700")
    return z * math.exp(z) - z - 1.0


def lemma4a_margin(x: float) -> float:
    """Margin of x < x*ln(x) + ln(ln(x)), strict domain e < x <= 700.

    Tends to 0 as x decreases to e (ln ln e = 0), which is why the domain
    is strict at e.
    """
    if not (math.e < x <= _EXP_CAP):
        raise DomainError("x must satisfy e < x <= 700")
    lx = math.log(x)
    return x * lx + math.log(lx) - x


def lemma4b_margin(x: float) -> float:
    """Margin of x > ln(x*ln(x) + ln(ln(x))), strict domain e < x <= 700."""
    if not (math.e < x <= _EXP_CAP):
        raise DomainError("x must satisfy e < x <= 700")
    lx = math.log(x)
    return x - math.log(x * lx + math.log(lx))


# (margin function, open lower domain bound or None) per inequality.
_MARGINS = {
    Inequality.LEMMA3: (lemma3_margin, 0.0),
    Inequality.LEMMA4A: (lemma4a_margin, math.e),
    Inequality.LEMMA4B: (lemma4b_margin, math.e),
    Inequality.WITNESS_G: (witness_g, None),
}


def sweep(
    inequality_id: Inequality,
    domain_lo: float,
    domain_hi: float,
    samples: int,
    seed: int,
) -> MarginReport:
    """Evaluate a margin at seeded uniform samples plus both endpoints.

    Draws `samples` points uniformly from (domain_lo, domain_hi) with
    random.Random(seed); both endpoints are force-included after clamping
    into the margin's valid domain (one representable step inside an open
    boundary, capped at 700). Ties on the minimum resolve to the lowest
    argument, so the report is independent of evaluation order.
    Deterministic given identical arguments.
    """
    if samples < 1:
        raise DomainError("samples must be at least 1")
    if not (math.isfinite(domain_lo) and math.isfinite(domain_hi)):
        raise DomainError("domain bounds must be finite")
    if not (domain_lo < domain_hi):
        raise DomainError("domain_lo must be less than domain_hi")

    margin, open_lo = _MARGINS[inequality_id]

    def clamp(v: float) -> float:
        if v > _EXP_CAP:
            v = _EXP_CAP
        if open_lo is not None and v <= open_lo:
            v = math.nextafter(open_lo, math.inf)
        return v

    if not (clamp(domain_lo) < clamp(domain_hi)):
        raise DomainError("domain does not intersect the inequality's valid range")

    min_margin = math.inf
    argmin = math.nan
    rng = random.Random(seed)

    points = [clamp(domain_lo), clamp(domain_hi)]
    for _ in range(samples):
        points.append(clamp(rng.uniform(domain_lo, domain_hi)))

    for v in points:
        m = margin(v)
        if m < min_margin or (m == min_margin and v < argmin):
            min_margin = m
            argmin = v

    return MarginReport(
        inequality_id=inequality_id,
        samples=samples,
        domain_lo=domain_lo,
        domain_hi=domain_hi,
        min_margin=min_margin,
        argmin=argmin,
        all_positive=min_margin > 0.0,
        seed=seed,
    )
