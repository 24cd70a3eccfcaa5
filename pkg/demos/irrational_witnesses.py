"""Constructive witnesses: irrational^irrational landing on exact rationals.

Three constructions, all verified numerically and (where possible) certified
by exact integer arithmetic. Run:

    python3 demos/irrational_witnesses.py
"""

from fractions import Fraction

from towerlab import (
    ConditionViolated,
    OutOfInterval,
    classify_xx_target,
    log_construction_pair,
    lord_pair,
    thin_set_member,
    triple_sqrt_power,
    verify_pair,
)

print("== Lord pairs: sqrt(p) ^ log_sqrt(p)(m/n) = m/n exactly ==")
for p, m, n in ((2, 3, 1), (5, 7, 3), (97, 9973, 12)):
    pair = lord_pair(p, m, n)
    print(f"  sqrt({p}) ^ {pair.exponent_value:.15f} = {pair.target}  "
          f"(residual {verify_pair(pair):.2e}, certified={pair.certified_irrational})")
print()

print("== The certification is a real gate, not a formality ==")
for p, m, n in ((4, 3, 1), (2, 5, 5), (2, 4, 1), (2, 5, 4)):
    try:
        lord_pair(p, m, n)
    except ConditionViolated as exc:
        print(f"  lord_pair({p}, {m}, {n}) rejected: {exc.condition}: {exc}")
print()

print("== Catalog bases: e, pi, and sqrt(k) for non-square k ==")
for base, c in (("e", Fraction(3)), ("pi", Fraction(7, 2)), ("sqrt:6", Fraction(5))):
    pair = log_construction_pair(base, c)
    print(f"  {base:7s} ^ {pair.exponent_value:.15f} = {pair.target}  "
          f"(residual {verify_pair(pair):.2e}, certified={pair.certified_irrational})")
print("  (sqrt:6 is not certified: 6 is composite, so irrationality of the")
print("   exponent is not established by the prime-based criterion)")
print()

print("== Triple powers: sqrt(n) ^ sqrt(n) ^ sqrt(n) ... as n^(n/2) ==")
for n in (2, 3, 4, 5, 16):
    t = triple_sqrt_power(n)
    if t.is_rational:
        print(f"  n={n:2d}: rational, exactly {t.exact_value}")
    else:
        print(f"  n={n:2d}: irrational, {t.coefficient}*sqrt({t.radicand})"
              f" ~= {t.approx:.12f}")
print("  Parity decides: even n gives the integer n^(n/2); odd n leaves one")
print("  sqrt(n) uncancelled, so the value is irrational.")
print()

print("== Thin-set classifier: which rational y make x^x = y rational? ==")
for y in (1, 4, 27, 256, 2, 5, Fraction(7, 2), 100):
    cls = classify_xx_target(y)
    if cls.n is not None:
        print(f"  y = {y}: {cls.kind.value} (x = {cls.n})")
    else:
        print(f"  y = {y}: {cls.kind.value}")
print()

print("== The classifier's domain guard is conservative near its boundary ==")
for y in (Fraction(1, 2), Fraction(69225, 100000), Fraction(6923, 10000)):
    try:
        cls = classify_xx_target(y)
        print(f"  y = {y}: accepted, {cls.kind.value}")
    except OutOfInterval as exc:
        print(f"  y = {y}: rejected ({exc})")
print("  The interval floor (1/e)^(1/e) = 0.6922006... is irrational, so a")
print("  sliver around it is refused outright instead of being guessed at.")
print()

print("== Thin-set membership by exact integer arithmetic ==")
for k in (1, 4, 27, 256, 3125, 46656, 100):
    n = thin_set_member(k)
    print(f"  {k} = n^n?  ->  {('n = ' + str(n)) if n else 'no'}")
