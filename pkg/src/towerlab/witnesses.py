"""Constructive witnesses of irrational powers with rational values, and the
rational/irrational classifier for x^x = y over rational targets.

Three constructions are exposed:

* square-root-of-a-prime pairs (a, b) = (sqrt(p), log_sqrt(p)(m/n)) whose
  power a^b is the rational m/n, certified irrational in both components
  when p is prime, m != n, and p divides neither m nor n;
* log-based pairs over a fixed base catalog {e, pi, sqrt:k} with
  b = log_a(c) for a positive rational c;
* the triple power ((sqrt n)^sqrt n)^sqrt n = n^(n/2), evaluated exactly.

The classifier decides, for a rational y in the covered interval, whether
the real solution of x^x = y is rational (exactly the targets y = n^n) or
irrational.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConditionViolated, DomainError, OutOfInterval
from .solver import lambert_w0

__all__ = [
    "is_prime",
    "parse_rational",
    "BaseKind",
    "PowerPair",
    "lord_pair",
    "log_construction_pair",
    "verify_pair",
    "TriplePower",
    "triple_sqrt_power",
    "ClassificationKind",
    "Classification",
    "classify_xx_target",
    "thin_set_member",
]

_PRIME_LIMIT = 2 ** 32
_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def is_prime(p: int) -> bool:
    """Deterministic trial-division primality test for p < 2^32."""
    if p >= _PRIME_LIMIT:
        raise DomainError("primality testing is limited to p < 2^32")
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def parse_rational(text: str) -> Fraction:
    """Parse 'a/b' or an integer literal into an exact reduced Fraction.

    No decimal or scientific notation: exactness is required downstream, so
    nothing is inferred from floating-point syntax.
    """
    if not _RATIONAL_RE.match(text):
        raise DomainError(
            f"not a rational literal: {text!r} (expected an integer or 'a/b')"
        )
    num, _, den = text.partition("/")
    if den:
        if int(den) == 0:
            raise DomainError("denominator must not be zero")
        return Fraction(int(num), int(den))
    return Fraction(int(num))


class BaseKind(enum.Enum):
    SQRT_PRIME = "SQRT_PRIME"
    SQRT_NONSQUARE = "SQRT_NONSQUARE"
    NAMED_CONSTANT = "NAMED_CONSTANT"


@dataclass(frozen=True)
class PowerPair:
    """A witness (a, b) with a^b equal to the rational target.

    base_param is the prime/nonsquare k for sqrt bases or the tag "e"/"pi".
    exponent_value is log_a(target) in double precision.
    certified_irrational is True when the construction's hypotheses certify
    that both a and b are irrational; pairs that fail the hypotheses are
    still returned by the log construction but flagged False.
    """

    base_kind: BaseKind
    base_param: int | str
    target: Fraction
    base_value: float
    exponent_value: float
    certified_irrational: bool


def _ln_fraction(q: Fraction) -> float:
    # math.log takes arbitrary-size ints, so this stays accurate for huge q.
    return math.log(q.numerator) - math.log(q.denominator)


def lord_pair(p: int, m: int, n: int) -> PowerPair:
    """Certified pair a = sqrt(p), b = log_sqrt(p)(m/n) with a^b = m/n.

    Requires p prime, m and n positive, m != n, and p dividing neither m
    nor n (conditions checked on the raw inputs, before m/n is reduced);
    violations raise ConditionViolated naming the failed condition.
    """
    if m < 1 or n < 1:
        raise DomainError("m and n must be positive integers")
    if not is_prime(p):
        raise ConditionViolated(f"p is not prime (p={p})", "not-prime")
    if m == n:
        raise ConditionViolated(f"m equals n (m=n={m})", "m-equals-n")
    if m % p == 0:
        raise ConditionViolated(f"p divides m (p={p}, m={m})", "p-divides-m")
    if n % p == 0:
        raise ConditionViolated(f"p divides n (p={p}, n={n})", "p-divides-n")
    target = Fraction(m, n)
    exponent = (math.log(m) - math.log(n)) / (0.5 * math.log(p))
    return PowerPair(
        base_kind=BaseKind.SQRT_PRIME,
        base_param=p,
        target=target,
        base_value=math.sqrt(p),
        exponent_value=exponent,
        certified_irrational=True,
    )


def log_construction_pair(base: str, c) -> PowerPair:
    """Pair (a, log_a(c)) for a in the catalog {e, pi, sqrt:<k>} and rational c > 0.

    For the named transcendental bases the exponent is certified irrational
    outright. For sqrt bases the certificate holds only when k is prime and
    the reduced c = m/n satisfies m != n, k not dividing m or n; otherwise
    the pair is returned with certified_irrational=False.
    """
    if isinstance(c, str):
        c = parse_rational(c)
    c = Fraction(c)
    if c <= 0:
        raise DomainError("c must be positive")

    if base == "e":
        kind, param, base_value, ln_a = BaseKind.NAMED_CONSTANT, "e", math.e, 1.0
        certified = True
    elif base == "pi":
        kind, param, base_value = BaseKind.NAMED_CONSTANT, "pi", math.pi
        ln_a = math.log(math.pi)
        certified = True
    elif base.startswith("sqrt:"):
        try:
            k = int(base[5:])
        except ValueError:
            raise DomainError(f"invalid sqrt base parameter in {base!r}") from None
        if k < 2:
            raise DomainError("sqrt base requires an integer k >= 2")
        if math.isqrt(k) ** 2 == k:
            raise DomainError(f"{k} is a perfect square, so sqrt({k}) is rational")
        prime = is_prime(k)
        kind = BaseKind.SQRT_PRIME if prime else BaseKind.SQRT_NONSQUARE
        param, base_value, ln_a = k, math.sqrt(k), 0.5 * math.log(k)
        m, n = c.numerator, c.denominator
        certified = prime and m != n and m % k != 0 and n % k != 0
    else:
        raise DomainError(f"unknown base {base!r} (expected 'e', 'pi', or 'sqrt:<k>')")

    exponent = _ln_fraction(c) / ln_a
    return PowerPair(
        base_kind=kind,
        base_param=param,
        target=c,
        base_value=base_value,
        exponent_value=exponent,
        certified_irrational=certified,
    )


def verify_pair(pair: PowerPair) -> float:
    """Relative residual |a^b - c| / c, computed as |exp(b*ln(a) - ln(c)) - 1|."""
    ln_c = _ln_fraction(pair.target)
    return abs(math.exp(pair.exponent_value * math.log(pair.base_value) - ln_c) - 1.0)


@dataclass(frozen=True)
class TriplePower:
    """Exact value of ((sqrt n)^sqrt n)^sqrt n = n^(n/2).

    Even n: exact_value holds the integer n^(n/2). Odd n: the value is the
    radical form coefficient * sqrt(radicand) with coefficient = n^((n-1)/2)
    and radicand = n. approx is the double-precision value (inf if it
    exceeds double range).
    """

    n: int
    is_rational: bool
    exact_value: int | None
    coefficient: int | None
    radicand: int | None
    approx: float


def _to_float(k: int) -> float:
    try:
        return float(k)
    except OverflowError:
        return math.inf


def triple_sqrt_power(n: int) -> TriplePower:
    """Evaluate ((sqrt n)^sqrt n)^sqrt n exactly as n^(n/2) for n >= 1.

    The rationality flag follows the parity rule of the identity: even n
    collapses to the integer n^(n/2) and is reported rational; odd n is
    reported in radical form and flagged irrational. (The flag tracks
    parity, the documented contract, rather than simplifying radical forms
    of odd squares any further.)
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    if n % 2 == 0:
        exact = n ** (n // 2)
        return TriplePower(
            n=n,
            is_rational=True,
            exact_value=exact,
            coefficient=None,
            radicand=None,
            approx=_to_float(exact),
        )
    coefficient = n ** ((n - 1) // 2)
    return TriplePower(
        n=n,
        is_rational=False,
        exact_value=None,
        coefficient=coefficient,
        radicand=n,
        approx=_to_float(coefficient) * math.sqrt(n),
    )


class ClassificationKind(enum.Enum):
    RATIONAL_SOLUTION = "RATIONAL_SOLUTION"
    IRRATIONAL_SOLUTION = "IRRATIONAL_SOLUTION"


@dataclass(frozen=True)
class Classification:
    """Dichotomy verdict for x^x = y over a rational y in the covered interval."""

    kind: ClassificationKind
    y: Fraction
    n: int | None = None


# exp(-1/e) = 0.69220062755534635386542... (one-time 50-digit evaluation,
# frozen in the test suite). The two fractions below pin it between exact
# rationals: _INTERVAL_LO < exp(-1/e) < _INTERVAL_HI, so y <= _INTERVAL_LO is
# certainly outside the covered open interval (exp(-1/e), inf), while
# y >= _INTERVAL_HI is certainly inside. The sliver between the guards is
# conservatively rejected rather than risking a wrong membership call.
_INTERVAL_LO = Fraction(6922, 10000)
_INTERVAL_HI = Fraction(6923, 10000)


def classify_xx_target(y) -> Classification:
    """Classify the real solution of x^x = y for rational y > exp(-1/e).

    Returns RATIONAL_SOLUTION(n) exactly when y is the integer n^n (checked
    in exact arbitrary-size arithmetic); every other rational y in the
    interval yields IRRATIONAL_SOLUTION. Raises OutOfInterval for targets
    at or below the rational guard band around exp(-1/e).
    """
    if isinstance(y, str):
        y = parse_rational(y)
    y = Fraction(y)
    if y <= _INTERVAL_LO:
        raise OutOfInterval(
            f"y = {y} is at most 6922/10000, below the covered interval"
        )
    if y < _INTERVAL_HI:
        raise OutOfInterval(
            f"y = {y} falls in the guard band (6922/10000, 6923/10000) around "
            "the interval boundary and is conservatively rejected"
        )
    if y.denominator == 1:
        n = thin_set_member(y.numerator)
        if n is not None:
            return Classification(ClassificationKind.RATIONAL_SOLUTION, y, n)
    return Classification(ClassificationKind.IRRATIONAL_SOLUTION, y)


def thin_set_member(k: int) -> int | None:
    """Return n with n^n = k exactly, or None if k is not of that form.

    The candidate n comes from the float estimate exp(W(ln k)); the two
    neighbouring integers on each side are confirmed (or ruled out) by exact
    arbitrary-size exponentiation, so the answer is exact for any size of k.
    """
    if k < 1:
        raise DomainError("k must be at least 1")
    if k == 1:
        return 1
    estimate = math.exp(lambert_w0(math.log(k)))
    lo = max(1, math.floor(estimate) - 1)
    for n in range(lo, math.ceil(estimate) + 2):
        if n ** n == k:
            return n
    return None
