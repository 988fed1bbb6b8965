#!/usr/bin/env python3
"""Tour of the built-in function families.

Each constructor returns a value oracle over label vectors; tabulate() turns
any of them into an explicit lookup table for exhaustive work.
"""

import numpy as np

from ksubmax import (
    Dims,
    GraphInstance,
    coverage_gamma,
    make_coverage_tight,
    make_det_greedy_tight,
    make_indicator,
    make_layer_layout,
    make_max_k_cut,
    random_ksubmodular,
    sum_combine,
    tabulate,
)

print("== max-k-cut on a triangle, k=3 ==")
f = make_max_k_cut(GraphInstance(3, ((0, 1), (1, 2), (0, 2))), 3)
for x in [(1, 2, 3), (1, 1, 2), (1, 0, 0), (0, 0, 0)]:
    print(f"  f{x} = {f(x)}")
print("  (an edge with exactly one assigned endpoint counts as cut)")
print()

print("== layered layout of a directed edge, k=4 ==")
g = make_layer_layout(GraphInstance(2, ((0, 1),), directed=True), 4)
print("  forward edge   f(1,2) =", g((1, 2)))
print("  backward edge  f(3,2) =", g((3, 2)))
print("  half-assigned  f(1,0) =", g((1, 0)), " f(0,3) =", g((0, 3)))
print()

print("== two-element greedy-tight instance (k=3, r=2) ==")
t = make_det_greedy_tight(3, 2)
print("  every first move looks worth", t((1, 0)), "but only avoiding label 1")
print("  unlocks the jackpot: f(2,2) =", t((2, 2)), " f(1,1) =", t((1, 1)))
print()

print("== weighted coverage instance, k=5 ==")
c = make_coverage_tight(5)
print("  shared-item weight gamma =", coverage_gamma(5))
print("  f(1,1) =", c((1, 1)), " f(2,1) =", c((2, 1)), " f(1,0) =", c((1, 0)))
print()

print("== combinators ==")
ind1 = make_indicator(2, 1)
ind2 = make_indicator(2, 2)
mix = sum_combine([ind1, ind2], [2.0, 5.0])
print("  2*[x=1] + 5*[x=2]:", [mix((x,)) for x in range(3)])
print()

print("== seeded random k-submodular tables ==")
table = random_ksubmodular(Dims(2, 3), atoms=6, seed=7)
print("  16 values, n=2, k=3, seed 7:")
print(" ", np.round(table.values, 3))
again = random_ksubmodular(Dims(2, 3), atoms=6, seed=7)
print("  reproducible:", np.array_equal(table.values, again.values))
print()

print("== tabulation ==")
small = tabulate(make_indicator(2, 1))
print("  indicator table (index order):", small.values.tolist())
