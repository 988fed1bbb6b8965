"""Concrete k-set function families.

Graph objectives (max-k-cut, layered layout), the two-element instances on
which the greedy guarantees are met with equality, nonnegative combinations,
the embedding of set functions into the k=2 world, and seeded random
generators.  Every constructor returns a :class:`~ksubmax.core.ValueOracle`;
:func:`tabulate` materializes any oracle into a :class:`TabularFunction` for
exhaustive checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .core import (
    DEFAULT_MAX_STATES,
    Dims,
    InputError,
    OracleRangeError,
    ValueOracle,
    all_assignments,
    index_of,
)


@lru_cache(maxsize=32)
def digit_matrix(n: int, k: int) -> np.ndarray:
    """(k+1)^n x n matrix whose row i holds the labels of assignment i."""
    idx = np.arange((k + 1) ** n, dtype=np.int64)
    pows = (k + 1) ** np.arange(n, dtype=np.int64)
    return (idx[:, None] // pows[None, :]) % (k + 1)


class TabularFunction(ValueOracle):
    """Fully materialized k-set function: one value per assignment, stored
    in mixed-radix index order (element 0 least significant).

    This is the ground truth the checkers and brute-force oracles operate
    on.  Construction validates shape and nonnegativity.
    """

    def __init__(self, dims: Dims, values, name: str = "table") -> None:
        values = np.ascontiguousarray(values, dtype=float)
        if values.shape != (dims.num_assignments,):
            raise InputError(
                f"table needs {dims.num_assignments} values for n={dims.n}, "
                f"k={dims.k}, got shape {values.shape}"
            )
        if values.size and float(values.min()) < 0.0:
            bad = int(np.argmin(values))
            raise OracleRangeError(
                f"negative table entry {values[bad]} at index {bad}"
            )
        self.values = values
        super().__init__(dims, self._lookup, name)

    def _lookup(self, x: tuple) -> float:
        return float(self.values[index_of(x, self.dims.k)])


@dataclass(frozen=True)
class GraphInstance:
    """Edge list over vertices 0..n_vertices-1 with nonnegative weights."""

    n_vertices: int
    edges: tuple
    directed: bool = False
    weights: tuple | None = None

    def __post_init__(self) -> None:
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        for u, v in edges:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise InputError(
                    f"edge ({u},{v}) out of range for n_vertices={self.n_vertices}"
                )
            if u == v:
                raise InputError(f"self-loop ({u},{v}) not allowed")
        if self.weights is None:
            object.__setattr__(self, "weights", (1.0,) * len(edges))
        else:
            weights = tuple(float(w) for w in self.weights)
            if len(weights) != len(edges):
                raise InputError(
                    f"{len(weights)} weights for {len(edges)} edges"
                )
            if any(w < 0 for w in weights):
                raise InputError("edge weights must be nonnegative")
            object.__setattr__(self, "weights", weights)


def make_max_k_cut(graph: GraphInstance, k: int) -> ValueOracle:
    """Weighted max-k-cut objective: an edge counts when its endpoints carry
    different labels, including when exactly one endpoint is unassigned.

    On orthants this is exactly the k-cut value.  As a function of partial
    assignments it is submodular in every orthant but not pairwise monotone
    (assigning an endpoint can close an edge that was counted while open),
    so it is not k-submodular for k >= 2; the checkers report the
    counterexample.
    """
    if graph.directed:
        raise InputError("max-k-cut expects an undirected graph")
    dims = Dims(graph.n_vertices, k)
    edges, weights = graph.edges, graph.weights

    def fn(x: tuple) -> float:
        return sum((w for (u, v), w in zip(edges, weights) if x[u] != x[v]), 0.0)

    return ValueOracle(dims, fn, name=f"max_{k}_cut")


def make_layer_layout(graph: GraphInstance, k: int) -> ValueOracle:
    """Layered layout objective on a directed graph.

    Per edge (u, v): 1 when both endpoints are assigned and u sits on a
    strictly lower layer than v; with one endpoint unassigned, the
    probability that a uniform random layer for it would make the edge
    forward, i.e. (k - x_u)/k or (x_v - 1)/k; 0 when both are unassigned.
    Submodular in every orthant and k-wise monotone, but not k-submodular
    for k >= 3.
    """
    if not graph.directed:
        raise InputError("layer layout expects a directed graph")
    if k < 2:
        raise InputError(f"layer layout needs k >= 2, got {k}")
    dims = Dims(graph.n_vertices, k, r=k)
    edges, weights = graph.edges, graph.weights

    def edge_value(xu: int, xv: int) -> float:
        if xu == 0 and xv == 0:
            return 0.0
        if xv == 0:
            return (k - xu) / k
        if xu == 0:
            return (xv - 1) / k
        return 1.0 if xu < xv else 0.0

    def fn(x: tuple) -> float:
        return sum(
            (w * edge_value(x[u], x[v]) for (u, v), w in zip(edges, weights)), 0.0
        )

    return ValueOracle(dims, fn, name=f"layer_layout_{k}")


def make_det_greedy_tight(k: int, r: int) -> ValueOracle:
    """Two-element instance on which the deterministic greedy achieves
    exactly 1/(r+1) of the optimum.

    f(x_u, x_v) = 1/(r+1) when x_u is assigned, plus r/(r+1) when x_u is
    anything but label 1 and x_v is label 2.  Submodular in every orthant
    and r-wise monotone but not (r-1)-wise monotone.
    """
    if k < 2:
        raise InputError(f"need k >= 2, got {k}")
    if not 1 <= r <= k:
        raise InputError(f"r must be in [1, k={k}], got {r}")
    dims = Dims(2, k, r=r)
    lo = 1.0 / (r + 1)
    hi = r / (r + 1)

    def fn(x: tuple) -> float:
        xu, xv = x
        value = lo if xu != 0 else 0.0
        if xu != 1 and xv == 2:
            value += hi
        return value

    return ValueOracle(dims, fn, name=f"det_greedy_tight_k{k}_r{r}")


def coverage_gamma(k: int) -> float:
    """Weight of the shared element in the two-element coverage instance."""
    if k < 2:
        raise InputError(f"need k >= 2, got {k}")
    return 1.0 / math.sqrt(k - 1)


def make_coverage_tight(k: int) -> ValueOracle:
    """Weighted set-coverage instance on two elements.

    Element u picks a set (label 1 covers item a of weight 1, every other
    label covers item b of weight gamma = 1/sqrt(k-1)); element v always
    covers item b.  All marginals are nonnegative, so the function is r-wise
    monotone for every r, yet the randomized greedy's expected ratio on it
    drops below 1/3 once k >= 21.
    """
    gamma = coverage_gamma(k)
    dims = Dims(2, k, r=k)

    def fn(x: tuple) -> float:
        xu, xv = x
        covers_a = xu == 1
        covers_b = xu >= 2 or xv >= 1
        return (1.0 if covers_a else 0.0) + (gamma if covers_b else 0.0)

    oracle = ValueOracle(dims, fn, name=f"coverage_tight_k{k}")
    oracle.gamma = gamma
    return oracle


def make_indicator(k: int, target_label: int) -> ValueOracle:
    """Single-element function worth 1 exactly when the element carries the
    target label.  A uniform random orthant hits it with probability 1/k."""
    if not 1 <= target_label <= k:
        raise InputError(f"target label {target_label} out of range [1, k={k}]")
    dims = Dims(1, k)

    def fn(x: tuple) -> float:
        return 1.0 if x[0] == target_label else 0.0

    return ValueOracle(dims, fn, name=f"indicator_k{k}_t{target_label}")


def sum_combine(
    fs: Sequence[ValueOracle], weights: Sequence[float] | None = None
) -> ValueOracle:
    """Pointwise nonnegative combination of oracles over the same (n, k)."""
    if not fs:
        raise InputError("sum_combine needs at least one oracle")
    if weights is None:
        weights = [1.0] * len(fs)
    if len(weights) != len(fs):
        raise InputError(f"{len(weights)} weights for {len(fs)} oracles")
    ws = [float(w) for w in weights]
    if any(w < 0 for w in ws):
        raise InputError("combination weights must be nonnegative")
    dims = fs[0].dims
    for f in fs[1:]:
        if not f.dims.same_shape(dims):
            raise InputError(
                f"oracle dims mismatch: {f.dims} vs {dims} (need equal n and k)"
            )
    terms = list(zip(fs, ws))

    def fn(x: tuple) -> float:
        return sum((w * f(x) for f, w in terms), 0.0)

    return ValueOracle(Dims(dims.n, dims.k), fn, name="sum")


class EmbeddedBisubmodular(ValueOracle):
    """k=2 view of a set function g: the assignment encodes a disjoint pair
    (S, T) via labels 1 and 2, and the value is g(S) + g(U \\ T) - g(U).

    The formula is implemented verbatim; for some nonnegative submodular g
    it goes negative, which surfaces as an :class:`OracleRangeError` at
    tabulation or check time rather than being clamped here.  g(U) is
    evaluated once at construction; each evaluation then makes exactly two
    further g-calls.
    """

    def __init__(self, base: ValueOracle) -> None:
        if base.dims.k != 1:
            raise InputError(
                f"embedding needs a set-function oracle (k=1), got k={base.dims.k}"
            )
        self.base = base
        n = base.dims.n
        self._ground_value = base((1,) * n)
        super().__init__(Dims(n, 2), self._eval, name=f"embed({base.name})")

    def _eval(self, x: tuple) -> float:
        first = tuple(1 if v == 1 else 0 for v in x)
        co_second = tuple(0 if v == 2 else 1 for v in x)
        return self.base(first) + self.base(co_second) - self._ground_value


def embed_submodular(g: ValueOracle) -> EmbeddedBisubmodular:
    """Lift a set-function oracle (k=1) to the pair world (k=2)."""
    return EmbeddedBisubmodular(g)


def random_ksubmodular(
    dims: Dims,
    atoms: int,
    seed: int,
    max_states: int = DEFAULT_MAX_STATES,
) -> TabularFunction:
    """Seeded random k-submodular table: a nonnegative combination of
    half-weight cut terms and single-element indicator terms.

    A half-weight cut term scores an edge 1 when both endpoints are assigned
    different labels and 1/2 when exactly one endpoint is assigned; unlike
    the plain cut indicator, that extension is k-submodular for every k
    (checkable exhaustively), and k-submodularity is closed under lifting
    to more elements and under nonnegative combination, so the output is
    k-submodular by construction rather than by rejection sampling.
    """
    if atoms < 0:
        raise InputError(f"atoms must be >= 0, got {atoms}")
    size = dims.num_assignments
    if size > max_states:
        raise InputError(f"table would hold {size} values, cap is {max_states}")
    rng = np.random.default_rng(seed)
    digits = digit_matrix(dims.n, dims.k)
    values = np.zeros(size)
    for _ in range(atoms):
        weight = rng.random()
        if dims.n >= 2 and rng.random() < 0.5:
            u, v = rng.choice(dims.n, size=2, replace=False)
            au, av = digits[:, u], digits[:, v]
            cut = (au != av) & (au != 0) & (av != 0)
            half = (au == 0) ^ (av == 0)
            values += weight * (1.0 * cut + 0.5 * half)
        else:
            e = int(rng.integers(dims.n))
            p = int(rng.integers(1, dims.k + 1))
            values += weight * (digits[:, e] == p)
    return TabularFunction(dims, values, name=f"random_ksub_s{seed}")


def random_table(
    dims: Dims,
    seed: int,
    max_states: int = DEFAULT_MAX_STATES,
) -> TabularFunction:
    """Uniform random nonnegative table, with no structure imposed.  Almost
    surely not k-submodular; useful as checker fodder."""
    size = dims.num_assignments
    if size > max_states:
        raise InputError(f"table would hold {size} values, cap is {max_states}")
    rng = np.random.default_rng(seed)
    return TabularFunction(dims, rng.random(size), name=f"random_table_s{seed}")


def tabulate(f: ValueOracle, max_states: int = DEFAULT_MAX_STATES) -> TabularFunction:
    """Materialize an oracle into a table by evaluating every assignment in
    index order.  Idempotent: tables pass through unchanged with no calls.
    Raises :class:`OracleRangeError` on the first negative value met."""
    if isinstance(f, TabularFunction):
        return f
    size = f.dims.num_assignments
    if size > max_states:
        raise InputError(f"tabulation needs {size} values, cap is {max_states}")
    values = np.empty(size)
    for i, x in enumerate(all_assignments(f.dims)):
        v = f(x)
        if v < 0:
            raise OracleRangeError(f"oracle {f.name} is negative at {x}: {v}")
        values[i] = v
    return TabularFunction(f.dims, values, name=f.name)
