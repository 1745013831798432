"""A system that breaks every hypothesis: the single prime {2}.

Its integers are the powers of two, so N(x) ~ log2(x) and no positive
density exists.  Declaring a = 1 anyway makes each diagnostic fail in its
own characteristic way, which is the contrapositive reading of the
Chebyshev-estimate theorem: when the conclusion collapses, some hypothesis
had to give.
"""

from beurling import (
    PrimeSystemSpec,
    build_table_from_system,
    chebyshev_verdict,
    l1_condition,
    little_o_trend,
    materialize,
)

BOUND = 2.0**20

primes = materialize(PrimeSystemSpec.single(2.0), BOUND)
table = build_table_from_system(primes, BOUND, 1.0)
print(f"integers below 2^20: {table.total_count} (just the powers of two)")

rep = l1_condition(table)
print("\nDiamond integral partials (growing by about log 10 per decade):")
for x, p in rep.checkpoints[::12]:
    print(f"  X = {x:>12g}   integral = {p:.3f}")
print(f"  verdict: {rep.verdict}")

trend = little_o_trend(table)
print(f"\nlittle-o trend of log(x)|N - x|/x: {trend.verdict}")
print("  window sups over the last dyadic windows:")
for lo, hi, s in trend.window_sups[-3:]:
    print(f"    ({lo:10.0f}, {hi:10.0f}]   sup = {s:.2f}")

cheb = chebyshev_verdict(table, 2.0, BOUND)
print(f"\npsi(x)/x over [2, 2^20]: min = {cheb.ratio_min:.2e}, max = {cheb.ratio_max:.2f}")
print("the liminf is numerically indistinguishable from zero: no Chebyshev bound")
