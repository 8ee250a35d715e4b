#!/usr/bin/env python3
"""Ground truth at toy sizes: enumerate every coloring.

For instances small enough that k^C(n,2) fits the state budget, the
branch-and-bound enumerator returns the exact minimum and its first witness.
The local search can then be checked against the truth: it must never do
better, and with a modest budget it does exactly as well.
"""

from ramsey333 import SearchParams, census, exhaustive_min, minimize

print(f"{'n':>3} {'k':>3} {'exact min':>10} {'search':>7}   witness")
for n, k in ((4, 2), (5, 2), (6, 2), (7, 2), (4, 3), (5, 3), (6, 3)):
    minimum, witness = exhaustive_min(n, k)
    searched = minimize(SearchParams(n=n, k=k, seed=9, restarts=10,
                                     steps_per_restart=500, sideways_limit=30))
    assert searched.best_count >= minimum
    assert census(witness).total_mono == minimum
    print(f"{n:>3} {k:>3} {minimum:>10} {searched.best_count:>7}   {witness.color_string()}")

print()
print("n=6, k=2 is the classic squeeze: every 2-coloring of K6 has at least")
print("two monochromatic triangles, and the pentagon/pentagram split of K5")
print("shows the count is zero one vertex earlier.")
