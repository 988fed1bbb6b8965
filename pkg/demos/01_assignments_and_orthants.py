#!/usr/bin/env python3
"""Tour of the solution representation.

A solution assigns each ground-set element a label in {0, ..., k}: label 0
means "unassigned", labels 1..k name the k parts of a partition.  A vector
with no zeros is an orthant (a partition of everything).  Two lattice-style
operations drive the whole theory: coordinates where two solutions disagree
on nonzero labels collapse to 0, otherwise min/max act normally.
"""

from ksubmax import (
    Dims,
    GraphInstance,
    all_orthants,
    extend_to_orthant,
    id0,
    is_orthant,
    make_max_k_cut,
    marginal,
    max0,
    min0,
    restrict,
)

s = (1, 2, 0, 2)
t = (1, 1, 2, 0)
print("s          =", s)
print("t          =", t)
print("min0(s, t) =", min0(s, t), " # disagreeing nonzero labels vanish")
print("max0(s, t) =", max0(s, t))
print("id0(s, t)  =", id0(s, t), " # keeps only exact agreements")
print()

print("restrict(s, {0, 3}) =", restrict(s, {0, 3}), " # forget the rest")
print("is_orthant(s) =", is_orthant(s), "   is_orthant((1,2,1,2)) =",
      is_orthant((1, 2, 1, 2)))
print()

# On orthant pairs the three operations coincide:
dims = Dims(2, 2)
for a in all_orthants(dims):
    for b in all_orthants(dims):
        assert min0(a, b) == max0(a, b) == id0(a, b)
print("on orthant pairs min0 = max0 = id0 (checked exhaustively for n=2, k=2)")
print()

# Marginal values ask: what does labeling one more element buy?
f = make_max_k_cut(GraphInstance(2, ((0, 1),)), 2)
print("edge-cut oracle, k=2:")
print("  gain of giving element 0 label 1 at (0,0):",
      marginal(f, 1, 0, (0, 0)))
print("  gain of giving element 1 label 2 at (2,0):",
      marginal(f, 2, 1, (2, 0)), " # closes the half-open edge")
print()

# Greedy extension: hand every unassigned element its best label.
partial = (2, 0)
full = extend_to_orthant(f, partial)
print(f"extend_to_orthant({partial}) = {full}, value {f(full)}")
print("oracle evaluations so far:", f.calls)
