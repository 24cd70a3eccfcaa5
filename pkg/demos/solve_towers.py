"""Solving power-tower equations x^x = y and x^(x^x) = y in log space.

Everything works on L = ln(y), so targets like 10**(10**6) — far beyond any
float — are entered directly as their logarithm. Run:

    python3 demos/solve_towers.py
"""

import math

from towerlab import TowerEquation, bracket_tower, solve_tower, solve_via_lambert


def show(result):
    b = result.bracket
    print(f"  x         = {result.x!r}")
    print(f"  residual  = {result.residual:.3e}  after {result.iterations} iterations"
          f" (converged={result.converged})")
    print(f"  bracket   = ({b.lo!r}, {b.hi!r})  via {b.provenance.value}")


print("== Height 1: x^x = 27 ==")
eq = TowerEquation.from_target(1, 27.0)
result = solve_tower(eq)
show(result)
print(f"  check     : 3^3 = {3.0 ** 3.0}")
print(f"  Lambert W : exp(W(ln 27)) = {solve_via_lambert(eq.log_y)!r}")
print()

print("== Height 2: x^(x^x) = 16 ==")
result = solve_tower(TowerEquation.from_target(2, 16.0))
show(result)
print(f"  check     : 2^(2^2) = {2.0 ** (2.0 ** 2.0)}")
print()

print("== Height 2, log-space target: ln(y) = 27*ln(3), i.e. y = 3^27 ==")
result = solve_tower(TowerEquation(2, 27.0 * math.log(3.0)))
show(result)
print()

print("== A target no float can hold: y = 10^(10^6) ==")
log_y = 1e6 * math.log(10.0)
print(f"  ln(y) = 1e6 * ln(10) = {log_y!r}")
b = bracket_tower(1, log_y)
print(f"  certified bracket ({b.provenance.value}): ({b.lo!r}, {b.hi!r})")
# The residual x*ln(x) - ln(y) carries float noise of order eps*ln(y), so the
# meaningful tolerance scales with the target.
result = solve_tower(TowerEquation(1, log_y), tol=1e-12 * log_y)
show(result)
x = result.x
print(f"  back-substitution: x*ln(x) = {x * math.log(x)!r}  vs  ln(y) = {log_y!r}")
print(f"  closed form agrees: {abs(solve_via_lambert(log_y) - x) <= 1e-10 * x}")
print()

print("== Monotonicity: bigger targets give bigger roots ==")
for log_y in (2.0, 20.0, 200.0, 2000.0):
    r = solve_tower(TowerEquation(1, log_y), tol=1e-12 * max(1.0, log_y))
    print(f"  ln(y) = {log_y:8.1f}  ->  x = {r.x:.12f}  ({r.bracket.provenance.value})")
