"""Power-tower equation solver working entirely in log space.

Solves x^x = y (height 1) and x^{x^x} = y (height 2) for y > 1. The target
is carried as L = ln(y), so towers far beyond double-precision range (for
example y = 10^(10^6), entered as log_y = 10^6 * ln 10) stay representable.

The root is isolated first by a certified bracket: for large targets the
bracket endpoints are the logarithmic bounds

    height 1, L > e:     ln(L)     < x < L
    height 2, ln(L) > e: ln(ln(L)) < x < ln(L)

and for small targets a sign-checked fallback interval is used. Every
bracket is verified to satisfy residual(lo) < 0 < residual(hi) before the
iteration starts. The solve itself is a safeguarded Newton iteration that
can never leave the bracket (rejected steps bisect instead), so it inherits
the bracket's containment guarantee.
"""

from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "Provenance",
    "TowerEquation",
    "Bracket",
    "SolveResult",
    "tower_residual",
    "bracket_tower",
    "solve_tower",
    "lambert_w0",
    "solve_via_lambert",
]

# Relative nudge for strict-inequality endpoints (2^-40 ~ 9.1e-13).
_EPS_REL = 2.0 ** -40
# Theorem-branch gate: slightly above e so that endpoint residual signs are
# strict even after rounding. Targets in the sliver (e, e*(1+2^-40)] take
# the fallback path, which sign-checks its endpoints explicitly.
_E_NUDGED = math.e * (1.0 + _EPS_REL)
_ONE_NUDGED = 1.0 + _EPS_REL

_MACHEPS = sys.float_info.epsilon


class Provenance(enum.Enum):
    """How a bracket was certified."""

    THEOREM2 = "theorem2"
    THEOREM3 = "theorem3"
    FALLBACK = "fallback"


@dataclass(frozen=True)
class TowerEquation:
    """A tower equation: height (1 or 2) and the target in log space.

    ``log_y`` is L = ln(y) in natural-log units; the supported domain is
    y > 1, i.e. log_y > 0.
    """

    height: int
    log_y: float

    def __post_init__(self):
        if self.height not in (1, 2):
            raise DomainError("height must be 1 or 2")
        if not math.isfinite(self.log_y):
            raise DomainError("log_y must be finite")
        if self.log_y <= 0.0:
            raise DomainError("log_y must be positive (y must exceed 1)")

    @classmethod
    def from_target(cls, height: int, y: float) -> "TowerEquation":
        """Build an equation from y itself rather than ln(y)."""
        if not math.isfinite(y):
            raise DomainError("y must be finite")
        if y <= 1.0:
            raise DomainError("y must exceed 1")
        return cls(height, math.log(y))


@dataclass(frozen=True)
class Bracket:
    """A certified open interval (lo, hi) containing the root.

    Certification means residual(lo) < 0 < residual(hi) was verified at
    construction time for the associated equation.
    """

    lo: float
    hi: float
    provenance: Provenance


@dataclass(frozen=True)
class SolveResult:
    x: float
    residual: float
    iterations: int
    converged: bool
    bracket: Bracket


def tower_residual(x: float, height: int, log_y: float) -> float:
    """Signed log-space residual; zero exactly at the tower root.

    height 1: r = x*ln(x) - log_y              (domain x > 0)
    height 2: r = x*ln(x) + ln(ln(x)) - ln(log_y)   (domain x > 1, log_y > 0)

    Height 2 uses the reduction ln(ln(y)) = x*ln(x) + ln(ln(x)), valid for
    x > 1, so x^x is never evaluated and huge targets cannot overflow.
    Strictly increasing in x on its domain for either height.
    """
    if not math.isfinite(log_y):
        raise DomainError("log_y must be finite")
    if height == 1:
        if x <= 0.0:
            raise DomainError("x must be positive for height 1")
        return x * math.log(x) - log_y
    if height == 2:
        if x <= 1.0:
            raise DomainError("x must exceed 1 for height 2")
        if log_y <= 0.0:
            raise DomainError("log_y must be positive for height 2")
        return x * math.log(x) + math.log(math.log(x)) - math.log(log_y)
    raise DomainError("height must be 1 or 2")


def _residual_slope(x: float, height: int) -> float:
    # d/dx of the residual; positive on the bracket interior for both heights.
    if height == 1:
        return math.log(x) + 1.0
    lx = math.log(x)
    return lx + 1.0 + 1.0 / (x * lx)


def _certify(lo: float, hi: float, height: int, log_y: float, provenance: Provenance) -> Bracket:
    # Verify the sign-bracketing invariant before handing the interval out.
    if not (lo < hi) or not math.isfinite(lo) or not math.isfinite(hi):
        raise DomainError("bracket endpoints must be finite with lo < hi")
    r_lo = tower_residual(lo, height, log_y)
    r_hi = tower_residual(hi, height, log_y)
    if not (r_lo < 0.0 < r_hi):
        raise DomainError(
            "bracket certification failed: residual signs are "
            f"{r_lo:+.3e} / {r_hi:+.3e} at ({lo!r}, {hi!r})"
        )
    return Bracket(lo, hi, provenance)


def _fallback_lo_h1(log_y: float) -> float:
    # Start below any possible root and halve until the residual is negative.
    lo = min(1.0, log_y) / 2.0
    for _ in range(64):
        if lo * math.log(lo) - log_y < 0.0:
            return lo
        lo /= 2.0
    raise DomainError("no height-1 fallback endpoint found below the root")


def _fallback_lo_h2(log_y: float) -> float:
    # The root sits just above 1 for small targets; shrink 1+delta until the
    # residual goes negative. Representability limit: delta cannot drop below
    # one ulp of 1, so targets with roots closer to 1 than that are rejected.
    delta = _EPS_REL
    floor = math.nextafter(1.0, 2.0)
    for _ in range(64):
        lo = 1.0 + delta
        if lo <= floor:
            break
        if tower_residual(lo, 2, log_y) < 0.0:
            return lo
        delta /= 2.0
    if tower_residual(floor, 2, log_y) < 0.0:
        return floor
    raise DomainError(
        "target is too close to 1: the height-2 root is not separable from 1 "
        "in double precision"
    )


def bracket_tower(height: int, log_y: float) -> Bracket:
    """Certified open bracket around the tower root for the given target.

    Large targets get the logarithmic theorem bounds (provenance "theorem2"
    for height 1, "theorem3" for height 2); everything else gets a
    sign-checked fallback interval below e*(1+2^-40). Raises DomainError if
    log_y <= 0 or no representable bracket exists.
    """
    eq = TowerEquation(height, log_y)  # validates height and log_y
    log_y = eq.log_y

    if height == 1:
        if log_y > _E_NUDGED:
            lo = max(1.0, math.log(log_y))
            return _certify(lo, log_y, 1, log_y, Provenance.THEOREM2)
        # y <= e^e: the root is at most e; nudge hi above e to keep the
        # residual sign strict when log_y is exactly at the boundary.
        lo = _fallback_lo_h1(log_y)
        return _certify(lo, _E_NUDGED, 1, log_y, Provenance.FALLBACK)

    log_L = math.log(log_y)
    if log_L > _E_NUDGED:
        lo = max(_ONE_NUDGED, math.log(log_L))
        return _certify(lo, log_L, 2, log_y, Provenance.THEOREM3)
    lo = _fallback_lo_h2(log_y)
    return _certify(lo, _E_NUDGED, 2, log_y, Provenance.FALLBACK)


def solve_tower(eq: TowerEquation, tol: float = 1e-12, max_iter: int = 200) -> SolveResult:
    """Solve the tower equation by safeguarded Newton inside a certified bracket.

    Convergence is declared on the log-space residual: |r| <= tol. A Newton
    step is accepted only if it lands strictly inside the current bracket and
    reduces |r|; otherwise the step is a bisection, so the iterate can never
    escape the bracket. Deterministic: identical inputs give bit-identical
    results.

    Returns converged=False with the best iterate when max_iter is exhausted
    or when the bracket has collapsed to adjacent floats (for very large
    log_y the height-1 residual cannot be driven below ~eps*log_y; pick tol
    accordingly, e.g. tol = 1e-12 * max(1, log_y)).
    """
    if not (tol > 0.0):
        raise DomainError("tol must be positive")
    if max_iter < 1:
        raise DomainError("max_iter must be at least 1")

    bracket = bracket_tower(eq.height, eq.log_y)
    height, log_y = eq.height, eq.log_y
    lo, hi = bracket.lo, bracket.hi

    x = 0.5 * (lo + hi)
    r = tower_residual(x, height, log_y)
    iterations = 1
    best_x, best_r = x, r

    while abs(r) > tol and iterations < max_iter:
        if r > 0.0:
            hi = x
        else:
            lo = x

        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):
            break  # no representable interior point left

        step = r / _residual_slope(x, height)
        candidate = x - step
        accepted = False
        if lo < candidate < hi:
            r_candidate = tower_residual(candidate, height, log_y)
            if abs(r_candidate) < abs(r):
                x, r = candidate, r_candidate
                accepted = True
        if not accepted:
            x = mid
            r = tower_residual(x, height, log_y)
        iterations += 1

        if abs(r) < abs(best_r):
            best_x, best_r = x, r

    return SolveResult(
        x=best_x,
        residual=best_r,
        iterations=iterations,
        converged=abs(best_r) <= tol,
        bracket=bracket,
    )


# Lower edge of the Lambert W0 domain in floats. The true branch point is
# -1/e; -exp(-1) rounds a hair below it, and inputs equal to the rounded
# value are answered with the branch-point value -1.
_LAMBERT_MIN = -math.exp(-1.0)


def lambert_w0(z: float) -> float:
    """Principal branch of the Lambert W function (inverse of w*e^w).

    Halley iteration from the classical initial guess ln(1+z) for z >= 0 and
    z*e on the branch segment -1/e < z < 0; capped at 50 iterations, which
    the tested domain never comes close to needing. The defining identity
    w*e^w = z holds to within a few ulp of z (the best any double w can do,
    since one ulp of w moves w*e^w by about eps*z*(w+1)).
    """
    if not math.isfinite(z):
        raise DomainError("z must be finite")
    if z < _LAMBERT_MIN:
        raise DomainError("z must be at least -1/e")
    if z == _LAMBERT_MIN:
        return -1.0
    if z == 0.0:
        return 0.0

    w = math.log1p(z) if z > 0.0 else z * math.e
    for _ in range(50):
        ew = math.exp(w)
        f = w * ew - z
        if f == 0.0:
            break
        wp1 = w + 1.0
        # Halley update: f / (f'(w) - f*f''(w) / (2 f'(w))).
        step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w -= step
        if abs(step) <= 4.0 * _MACHEPS * (1.0 + abs(w)):
            break
    return w if w >= -1.0 else -1.0


def solve_via_lambert(log_y: float) -> float:
    """Closed-form height-1 root x = exp(W(log_y)); cross-check for solve_tower."""
    if not math.isfinite(log_y):
        raise DomainError("log_y must be finite")
    if log_y <= 0.0:
        raise DomainError("log_y must be positive (y must exceed 1)")
    return math.exp(lambert_w0(log_y))
