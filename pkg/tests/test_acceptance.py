"""Acceptance gate: one test per contract criterion, budgets enforced.

Run with `pytest -v tests/test_acceptance.py` to get one pass/fail line per
criterion. Each heavy criterion times its own core loop with perf_counter and
asserts the stated budget; the final criterion checks the accumulated total
and determinism under fixed seeds.
"""

import math
import random
import time
from fractions import Fraction

import pytest

from towerlab import (
    ConditionViolated,
    Inequality,
    OutOfInterval,
    TowerEquation,
    classify_xx_target,
    lemma3_margin,
    lemma4a_margin,
    lemma4b_margin,
    lord_pair,
    solve_tower,
    solve_via_lambert,
    sweep,
    thin_set_member,
    triple_sqrt_power,
    verify_pair,
    witness_g,
)

ELAPSED: dict[str, float] = {}

SAMPLE_SEED = 20260814


def record(name: str, t0: float) -> float:
    dt = time.perf_counter() - t0
    ELAPSED[name] = dt
    return dt


def theorem2_samples(count: int = 10_000) -> list[float]:
    rng = random.Random(SAMPLE_SEED)
    return [rng.uniform(math.e, 1e6) for _ in range(count)]


def scaled_tol(log_y: float) -> float:
    # Absolute residual tolerance, scaled to the noise floor of x*ln(x) - L.
    return 1e-12 * max(1.0, abs(log_y))


def first_primes(count: int) -> list[int]:
    primes, candidate = [], 2
    while len(primes) < count:
        if all(candidate % p for p in primes):
            primes.append(candidate)
        candidate += 1
    return primes


def test_c01_theorem2_containment_10k_samples_under_2s():
    samples = theorem2_samples()
    t0 = time.perf_counter()
    for log_y in samples:
        result = solve_tower(TowerEquation(1, log_y), tol=scaled_tol(log_y))
        assert result.converged
        assert math.log(log_y) < result.x < log_y
    dt = record("theorem2", t0)
    assert dt < 2.0, f"theorem-2 containment took {dt:.3f} s (budget 2 s)"


def test_c02_theorem3_containment_10k_samples_under_2s():
    rng = random.Random(SAMPLE_SEED + 1)
    inner = [rng.uniform(math.e, 20.0) for _ in range(10_000)]
    t0 = time.perf_counter()
    for u in inner:
        log_y = math.exp(u)  # ln(log_y) = u lies in (e, 20)
        result = solve_tower(TowerEquation(2, log_y), tol=1e-12)
        assert result.converged
        assert math.log(u) < result.x < u
    dt = record("theorem3", t0)
    assert dt < 2.0, f"theorem-3 containment took {dt:.3f} s (budget 2 s)"


def test_c03_exact_anchors_within_1e10():
    cases = [
        (TowerEquation.from_target(1, 4.0), 2.0),
        (TowerEquation.from_target(1, 27.0), 3.0),
        (TowerEquation.from_target(1, 256.0), 4.0),
        (TowerEquation.from_target(2, 16.0), 2.0),
        (TowerEquation(2, 27.0 * math.log(3.0)), 3.0),
    ]
    for eq, expected in cases:
        result = solve_tower(eq)
        assert result.converged
        assert abs(result.x - expected) <= 1e-10, (eq, result.x)


def test_c04_height1_agrees_with_lambert_closed_form():
    for log_y in theorem2_samples():
        x_newton = solve_tower(TowerEquation(1, log_y), tol=scaled_tol(log_y)).x
        x_lambert = solve_via_lambert(log_y)
        assert abs(x_newton - x_lambert) <= 1e-10 * max(1.0, abs(x_lambert))


def test_c05_margin_sweeps_positive_and_witness_monotone_under_3s():
    t0 = time.perf_counter()
    reports = [
        sweep(Inequality.LEMMA3, 0.001, 700.0, 100_000, seed=11),
        sweep(Inequality.LEMMA4A, math.e + 1e-9, 700.0, 100_000, seed=12),
        sweep(Inequality.LEMMA4B, math.e + 1e-9, 700.0, 100_000, seed=13),
    ]
    for report in reports:
        assert report.all_positive, report
        assert report.min_margin > 0.0, report

    rng = random.Random(14)
    for _ in range(10_000):
        a = rng.uniform(1.0, 30.0)
        b = rng.uniform(1.0, 30.0)
        while not (a > 1.0 and b > 1.0 and a != b):
            a = rng.uniform(1.0, 30.0)
            b = rng.uniform(1.0, 30.0)
        lo, hi = min(a, b), max(a, b)
        assert witness_g(lo) < witness_g(hi)
    dt = record("sweeps", t0)
    assert dt < 3.0, f"sweeps took {dt:.3f} s (budget 3 s)"


def test_c06_lord_identity_random_triples_and_rejections():
    canonical = lord_pair(2, 3, 1)  # sqrt(2) raised to log_sqrt2(3) equals 3
    assert verify_pair(canonical) <= 1e-12
    assert canonical.certified_irrational

    primes = first_primes(50)
    rng = random.Random(SAMPLE_SEED + 6)
    checked = 0
    while checked < 1000:
        p = rng.choice(primes)
        m = rng.randint(2, 10_000)
        n = rng.randint(1, m - 1)
        if m % p == 0 or n % p == 0:
            continue
        pair = lord_pair(p, m, n)
        assert verify_pair(pair) <= 1e-10
        assert pair.certified_irrational
        checked += 1

    rejections = [
        ((4, 3, 1), "not-prime"),
        ((2, 5, 5), "m-equals-n"),
        ((2, 4, 1), "p-divides-m"),
        ((2, 5, 4), "p-divides-n"),
    ]
    for (p, m, n), condition in rejections:
        with pytest.raises(ConditionViolated) as excinfo:
            lord_pair(p, m, n)
        assert excinfo.value.condition == condition


def test_c07_triple_power_examples_and_parity_law():
    four = triple_sqrt_power(4)
    assert four.is_rational and four.exact_value == 16

    five = triple_sqrt_power(5)
    assert not five.is_rational
    assert five.coefficient == 25 and five.radicand == 5
    assert abs(five.approx - 55.90169943749474) <= 1e-9

    for n in range(1, 61):
        t = triple_sqrt_power(n)
        assert t.is_rational == (n % 2 == 0)
        if t.is_rational:
            assert t.exact_value == n ** (n // 2)  # exact integer, no floats
        else:
            assert t.coefficient**2 * t.radicand == n**n


def test_c08_thin_set_classifier_and_round_trip():
    for y, n in ((1, 1), (4, 2), (27, 3), (256, 4)):
        cls = classify_xx_target(y)
        assert cls.kind.value == "RATIONAL_SOLUTION"
        assert cls.n == n

    for y in (2, 5, Fraction(7, 2), 100):
        cls = classify_xx_target(y)
        assert cls.kind.value == "IRRATIONAL_SOLUTION"
        assert cls.n is None

    for n in range(1, 21):
        assert thin_set_member(n**n) == n  # exact integer round-trip


def log_spaced(lo: float, hi: float, count: int) -> list[float]:
    a, b = math.log(lo), math.log(hi)
    return [math.exp(a + (b - a) * i / (count - 1)) for i in range(count)]


def test_c09_monotonicity_1000_sorted_targets_each_height():
    previous = 0.0
    for log_y in log_spaced(1e-3, 1e6, 1000):
        x = solve_tower(TowerEquation(1, log_y), tol=scaled_tol(log_y)).x
        assert x > previous
        previous = x

    previous = 1.0
    for log_y in log_spaced(0.05, math.exp(20.0), 1000):
        x = solve_tower(TowerEquation(2, log_y), tol=1e-12).x
        assert x > previous
        previous = x


def test_c10_determinism_and_runtime_budget():
    eq = TowerEquation(1, 12345.6789)
    a = solve_tower(eq, tol=scaled_tol(eq.log_y))
    b = solve_tower(eq, tol=scaled_tol(eq.log_y))
    assert a == b  # bit-identical floats, same iteration count

    r1 = sweep(Inequality.LEMMA3, 0.001, 700.0, 5000, seed=99)
    r2 = sweep(Inequality.LEMMA3, 0.001, 700.0, 5000, seed=99)
    assert r1 == r2
    r3 = sweep(Inequality.LEMMA3, 0.001, 700.0, 5000, seed=100)
    assert r3 != r1  # the seed is honoured, not ignored

    assert verify_pair(lord_pair(97, 9973, 12)) == verify_pair(lord_pair(97, 9973, 12))
    assert lemma3_margin(0.5) == lemma3_margin(0.5)
    assert lemma4a_margin(10.0) == lemma4a_margin(10.0)
    assert lemma4b_margin(10.0) == lemma4b_margin(10.0)

    with pytest.raises(OutOfInterval):
        classify_xx_target(Fraction(1, 2))

    total = sum(ELAPSED.values())
    assert total < 10.0, f"acceptance hot loops took {total:.3f} s (budget 10 s)"
