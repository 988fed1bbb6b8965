"""Solution vectors, label-lattice operations, and the counted value oracle.

A solution over a ground set of ``n`` elements is a plain tuple of ints in
``{0, ..., k}``: label 0 means "unassigned", labels ``1..k`` name the parts
of the partition.  A vector with no zero entry is an *orthant* (a partition
of the whole ground set).  Everything downstream (function families,
property checkers, maximizers) consumes this one representation through
:class:`ValueOracle`, which counts evaluations so query complexity can be
audited.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

#: Default tolerance for float comparisons.  Inequality ``A >= B`` is taken
#: to hold when ``A >= B - EPS``.
EPS = 1e-9

#: Default cap on the number of enumerated assignments (tabulation, brute
#: force, exact expectations).
DEFAULT_MAX_STATES = 10**6

#: Default cap on the number of enumerated assignment pairs (checkers).
DEFAULT_MAX_PAIRS = 10**8

Assignment = Sequence  # length-n sequence of ints in {0, ..., k}; tuples preferred


class InputError(ValueError):
    """Bad arguments: size mismatch, out-of-range field, exceeded cap."""


class PreconditionError(ValueError):
    """An operation was applied to a state it is not defined for."""


class OracleRangeError(ValueError):
    """A value oracle produced a negative value; the codomain is R+."""


@dataclass(frozen=True)
class Dims:
    """Problem dimensions: ground-set size n, number of parts k, and an
    optional declared monotonicity arity r for instances that carry one."""

    n: int
    k: int
    r: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InputError(f"n must be >= 1, got {self.n}")
        if self.k < 1:
            raise InputError(f"k must be >= 1, got {self.k}")
        if self.r is not None and not 1 <= self.r <= self.k:
            raise InputError(f"r must be in [1, k={self.k}], got {self.r}")

    @property
    def num_assignments(self) -> int:
        return (self.k + 1) ** self.n

    @property
    def num_orthants(self) -> int:
        return self.k**self.n

    def same_shape(self, other: "Dims") -> bool:
        return self.n == other.n and self.k == other.k


def _require_same_length(a: Assignment, b: Assignment) -> None:
    if len(a) != len(b):
        raise InputError(f"assignments differ in length: {len(a)} vs {len(b)}")


def min0(a: Assignment, b: Assignment) -> tuple:
    """Coordinate-wise meet: 0 where the labels are distinct and both
    nonzero, otherwise ``min``."""
    _require_same_length(a, b)
    return tuple(
        0 if (x != y and x != 0 and y != 0) else min(x, y) for x, y in zip(a, b)
    )


def max0(a: Assignment, b: Assignment) -> tuple:
    """Coordinate-wise join: 0 where the labels are distinct and both
    nonzero, otherwise ``max``."""
    _require_same_length(a, b)
    return tuple(
        0 if (x != y and x != 0 and y != 0) else max(x, y) for x, y in zip(a, b)
    )


def id0(a: Assignment, b: Assignment) -> tuple:
    """Coordinate-wise agreement: the common label where a and b agree, 0
    elsewhere.  On orthant pairs this coincides with min0 and max0."""
    _require_same_length(a, b)
    return tuple(x if x == y else 0 for x, y in zip(a, b))


def restrict(x: Assignment, keep: Iterable[int]) -> tuple:
    """Forget the labels of all elements outside ``keep`` (set them to 0).

    The output keeps the full length n; this is not a projection.
    """
    keep = set(keep)
    n = len(x)
    for e in keep:
        if not 0 <= e < n:
            raise InputError(f"element index {e} out of range for n={n}")
    return tuple(v if e in keep else 0 for e, v in enumerate(x))


def is_orthant(x: Assignment) -> bool:
    """True when every element carries a nonzero label."""
    return all(v != 0 for v in x)


def support(x: Assignment) -> tuple:
    """Indices of the elements that carry a nonzero label."""
    return tuple(e for e, v in enumerate(x) if v != 0)


def with_label(x: Assignment, e: int, label: int) -> tuple:
    """Copy of x with element e set to ``label``."""
    return tuple(x[:e]) + (label,) + tuple(x[e + 1 :])


def index_of(x: Assignment, k: int) -> int:
    """Mixed-radix code of an assignment, element 0 least significant."""
    idx = 0
    for v in reversed(tuple(x)):
        idx = idx * (k + 1) + v
    return idx


def assignment_of(idx: int, dims: Dims) -> tuple:
    """Inverse of :func:`index_of` for the given dimensions."""
    base = dims.k + 1
    labels = []
    for _ in range(dims.n):
        labels.append(idx % base)
        idx //= base
    return tuple(labels)


def all_assignments(dims: Dims) -> Iterator[tuple]:
    """All (k+1)^n assignments in increasing index order."""
    for combo in itertools.product(range(dims.k + 1), repeat=dims.n):
        yield combo[::-1]


def all_orthants(dims: Dims) -> Iterator[tuple]:
    """All k^n orthants in increasing index order."""
    for combo in itertools.product(range(1, dims.k + 1), repeat=dims.n):
        yield combo[::-1]


class ValueOracle:
    """Counted evaluator for a k-set function on label vectors.

    Wraps a deterministic map from assignments to nonnegative reals.  The
    ``calls`` counter is the only mutable state; it increases by one per
    evaluation.  Nonnegativity is a contract, not enforced here: consumers
    that materialize or verify values raise :class:`OracleRangeError` when
    they meet a negative one.  For parallel use, give each worker its own
    oracle instance; the counter is not synchronized.
    """

    def __init__(
        self,
        dims: Dims,
        fn: Callable[[tuple], float],
        name: str = "f",
    ) -> None:
        self.dims = dims
        self.name = name
        self.calls = 0
        self._fn = fn

    def __call__(self, x: Assignment) -> float:
        n, k = self.dims.n, self.dims.k
        if len(x) != n:
            raise InputError(f"assignment has length {len(x)}, expected n={n}")
        for v in x:
            if not 0 <= v <= k:
                raise InputError(f"label {v} out of range [0, k={k}]")
        self.calls += 1
        return self._fn(tuple(x))

    def __repr__(self) -> str:
        d = self.dims
        return f"{type(self).__name__}({self.name}, n={d.n}, k={d.k})"


@dataclass(frozen=True)
class GreedyTrace:
    """Audit record for one greedy step: the element considered, the k
    marginal values seen, the probability normalizer (randomized variant
    only, None otherwise), and the chosen label."""

    element: int
    marginals: tuple
    beta: float | None
    chosen: int

    def to_json(self) -> dict:
        return {
            "element": self.element,
            "marginals": list(self.marginals),
            "beta": self.beta,
            "chosen": self.chosen,
        }


def marginal(f: ValueOracle, label: int, e: int, s: Assignment) -> float:
    """Gain from assigning ``label`` to the unassigned element e in s.

    Makes exactly two oracle calls.  Callers that sweep all k labels of one
    element should cache f(s) themselves instead of calling this in a loop.
    """
    if not 1 <= label <= f.dims.k:
        raise InputError(f"label {label} out of range [1, k={f.dims.k}]")
    if not 0 <= e < f.dims.n:
        raise InputError(f"element index {e} out of range for n={f.dims.n}")
    if s[e] != 0:
        raise PreconditionError(f"element {e} already assigned label {s[e]}")
    return f(with_label(s, e, label)) - f(s)


def smallest_max_label(ys: Sequence[float], eps: float = EPS) -> int:
    """Smallest label (1-based) whose value is within eps of the maximum."""
    top = max(ys)
    for i, y in enumerate(ys, start=1):
        if y >= top - eps:
            return i
    return len(ys)  # unreachable; max is always within eps of itself


def extend_to_orthant(f: ValueOracle, s: Assignment, eps: float = EPS) -> tuple:
    """Assign every unassigned element the label of maximal marginal gain.

    Elements are visited in index order; marginal ties within eps are broken
    toward the smallest label.  For r-wise monotone f this never decreases
    the value (some marginal in any size-r label set is nonnegative, so the
    best one is); that precondition is the caller's responsibility.
    """
    cur = tuple(s)
    if is_orthant(cur):
        return cur
    value = f(cur)
    k = f.dims.k
    for e in range(f.dims.n):
        if cur[e] != 0:
            continue
        gains = [f(with_label(cur, e, i)) - value for i in range(1, k + 1)]
        q = smallest_max_label(gains, eps)
        cur = with_label(cur, e, q)
        value += gains[q - 1]
    return cur
