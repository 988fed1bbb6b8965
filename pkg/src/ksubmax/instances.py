"""JSON instance format: parsing, validation, and oracle construction.

An instance is a JSON object with a "kind" field naming the family, common
fields "n" and "k", and kind-specific payload.  Validation happens before
any oracle is built and diagnostics name the offending field.

kinds and their extra fields:
  tabular            values (dense array in index order, nonnegative)
  max_k_cut          edges [[u,v],...], directed (false), weights (optional)
  layer_layout       edges [[u,v],...], directed (true), weights (optional)
  det_greedy_tight   r (1..k; n must be 2)
  coverage_tight     (n must be 2, k >= 2)
  indicator          target (1..k; n must be 1)
  sum                terms (array of instances, same n and k), weights (optional)
  embedding          base (a k=1 tabular instance with the same n; k must be 2)
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import Dims, InputError, ValueOracle
from .zoo import (
    GraphInstance,
    TabularFunction,
    embed_submodular,
    make_coverage_tight,
    make_det_greedy_tight,
    make_indicator,
    make_layer_layout,
    make_max_k_cut,
    sum_combine,
)

KINDS = (
    "tabular",
    "max_k_cut",
    "layer_layout",
    "det_greedy_tight",
    "coverage_tight",
    "indicator",
    "sum",
    "embedding",
)


@dataclass(frozen=True)
class InstanceSpec:
    """Validated description of one function-family instance."""

    kind: str
    dims: Dims
    payload: dict

    def build(self) -> ValueOracle:
        """Construct the value oracle this spec describes."""
        return _BUILDERS[self.kind](self)


def parse_instance(text: str) -> InstanceSpec:
    """Parse and validate a JSON instance document."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"instance is not valid JSON: {exc}") from exc
    return instance_from_dict(obj)


def instance_from_dict(obj, path: str = "instance") -> InstanceSpec:
    """Validate an already-decoded instance object (used recursively for
    nested terms)."""
    if not isinstance(obj, dict):
        raise InputError(f"{path}: expected a JSON object")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise InputError(f"{path}.kind: unknown kind {kind!r}; expected one of {KINDS}")
    n = _int_field(obj, "n", path, minimum=1)
    k = _int_field(obj, "k", path, minimum=1)
    dims = Dims(n, k)
    payload = _VALIDATORS[kind](obj, dims, path)
    return InstanceSpec(kind, dims, payload)


def _int_field(obj: dict, key: str, path: str, minimum: int | None = None) -> int:
    if key not in obj:
        raise InputError(f"{path}.{key}: missing required field")
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{path}.{key}: expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise InputError(f"{path}.{key}: must be >= {minimum}, got {value}")
    return value


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InputError(f"{where}: expected a number, got {value!r}")
    return float(value)


def _validate_tabular(obj: dict, dims: Dims, path: str) -> dict:
    values = obj.get("values")
    if not isinstance(values, list):
        raise InputError(f"{path}.values: missing or not an array")
    if len(values) != dims.num_assignments:
        raise InputError(
            f"{path}.values: need {dims.num_assignments} entries for "
            f"n={dims.n}, k={dims.k}, got {len(values)}"
        )
    out = []
    for i, v in enumerate(values):
        x = _number(v, f"{path}.values[{i}]")
        if x < 0:
            raise InputError(f"{path}.values[{i}]: must be >= 0, got {x}")
        out.append(x)
    return {"values": out}


def _validate_graph(obj: dict, dims: Dims, path: str) -> dict:
    edges = obj.get("edges")
    if not isinstance(edges, list):
        raise InputError(f"{path}.edges: missing or not an array")
    parsed = []
    for i, edge in enumerate(edges):
        if (
            not isinstance(edge, list)
            or len(edge) != 2
            or any(isinstance(v, bool) or not isinstance(v, int) for v in edge)
        ):
            raise InputError(f"{path}.edges[{i}]: expected a pair [u, v] of integers")
        u, v = edge
        if not (0 <= u < dims.n and 0 <= v < dims.n):
            raise InputError(
                f"{path}.edges[{i}]: endpoint out of range for n={dims.n}"
            )
        if u == v:
            raise InputError(f"{path}.edges[{i}]: self-loop not allowed")
        parsed.append((u, v))
    directed = obj.get("directed", False)
    if not isinstance(directed, bool):
        raise InputError(f"{path}.directed: expected a boolean")
    weights = obj.get("weights")
    if weights is not None:
        if not isinstance(weights, list) or len(weights) != len(parsed):
            raise InputError(
                f"{path}.weights: expected an array of {len(parsed)} numbers"
            )
        ws = []
        for i, w in enumerate(weights):
            x = _number(w, f"{path}.weights[{i}]")
            if x < 0:
                raise InputError(f"{path}.weights[{i}]: must be >= 0, got {x}")
            ws.append(x)
        weights = ws
    return {"edges": parsed, "directed": directed, "weights": weights}


def _validate_max_k_cut(obj: dict, dims: Dims, path: str) -> dict:
    payload = _validate_graph(obj, dims, path)
    if payload["directed"]:
        raise InputError(f"{path}.directed: max_k_cut requires an undirected graph")
    return payload


def _validate_layer_layout(obj: dict, dims: Dims, path: str) -> dict:
    if dims.k < 2:
        raise InputError(f"{path}.k: layer_layout needs k >= 2, got {dims.k}")
    payload = _validate_graph(obj, dims, path)
    if not payload["directed"]:
        raise InputError(f"{path}.directed: layer_layout requires a directed graph")
    return payload


def _validate_det_greedy_tight(obj: dict, dims: Dims, path: str) -> dict:
    if dims.n != 2:
        raise InputError(f"{path}.n: det_greedy_tight is a 2-element family, got n={dims.n}")
    if dims.k < 2:
        raise InputError(f"{path}.k: det_greedy_tight needs k >= 2, got {dims.k}")
    r = _int_field(obj, "r", path, minimum=1)
    if r > dims.k:
        raise InputError(f"{path}.r: must be in [1, k={dims.k}], got {r}")
    return {"r": r}


def _validate_coverage_tight(obj: dict, dims: Dims, path: str) -> dict:
    if dims.n != 2:
        raise InputError(f"{path}.n: coverage_tight is a 2-element family, got n={dims.n}")
    if dims.k < 2:
        raise InputError(f"{path}.k: coverage_tight needs k >= 2, got {dims.k}")
    return {}


def _validate_indicator(obj: dict, dims: Dims, path: str) -> dict:
    if dims.n != 1:
        raise InputError(f"{path}.n: indicator is a 1-element family, got n={dims.n}")
    target = _int_field(obj, "target", path, minimum=1)
    if target > dims.k:
        raise InputError(f"{path}.target: must be in [1, k={dims.k}], got {target}")
    return {"target": target}


def _validate_sum(obj: dict, dims: Dims, path: str) -> dict:
    terms = obj.get("terms")
    if not isinstance(terms, list) or not terms:
        raise InputError(f"{path}.terms: expected a non-empty array of instances")
    specs = []
    for i, term in enumerate(terms):
        spec = instance_from_dict(term, f"{path}.terms[{i}]")
        if spec.dims.n != dims.n or spec.dims.k != dims.k:
            raise InputError(
                f"{path}.terms[{i}]: dims (n={spec.dims.n}, k={spec.dims.k}) "
                f"differ from parent (n={dims.n}, k={dims.k})"
            )
        specs.append(spec)
    weights = obj.get("weights")
    if weights is not None:
        if not isinstance(weights, list) or len(weights) != len(specs):
            raise InputError(
                f"{path}.weights: expected an array of {len(specs)} numbers"
            )
        ws = []
        for i, w in enumerate(weights):
            x = _number(w, f"{path}.weights[{i}]")
            if x < 0:
                raise InputError(f"{path}.weights[{i}]: must be >= 0, got {x}")
            ws.append(x)
        weights = ws
    return {"terms": specs, "weights": weights}


def _validate_embedding(obj: dict, dims: Dims, path: str) -> dict:
    if dims.k != 2:
        raise InputError(f"{path}.k: embedding produces a k=2 function, got k={dims.k}")
    base = obj.get("base")
    if base is None:
        raise InputError(f"{path}.base: missing required field")
    spec = instance_from_dict(base, f"{path}.base")
    if spec.kind != "tabular":
        raise InputError(f"{path}.base.kind: expected 'tabular', got {spec.kind!r}")
    if spec.dims.k != 1:
        raise InputError(f"{path}.base.k: expected 1, got {spec.dims.k}")
    if spec.dims.n != dims.n:
        raise InputError(
            f"{path}.base.n: expected {dims.n} to match the embedding, got {spec.dims.n}"
        )
    return {"base": spec}


_VALIDATORS = {
    "tabular": _validate_tabular,
    "max_k_cut": _validate_max_k_cut,
    "layer_layout": _validate_layer_layout,
    "det_greedy_tight": _validate_det_greedy_tight,
    "coverage_tight": _validate_coverage_tight,
    "indicator": _validate_indicator,
    "sum": _validate_sum,
    "embedding": _validate_embedding,
}


def _build_tabular(spec: InstanceSpec) -> ValueOracle:
    return TabularFunction(spec.dims, spec.payload["values"])


def _build_graph(spec: InstanceSpec) -> GraphInstance:
    payload = spec.payload
    return GraphInstance(
        n_vertices=spec.dims.n,
        edges=tuple(payload["edges"]),
        directed=payload["directed"],
        weights=None if payload["weights"] is None else tuple(payload["weights"]),
    )


_BUILDERS = {
    "tabular": _build_tabular,
    "max_k_cut": lambda spec: make_max_k_cut(_build_graph(spec), spec.dims.k),
    "layer_layout": lambda spec: make_layer_layout(_build_graph(spec), spec.dims.k),
    "det_greedy_tight": lambda spec: make_det_greedy_tight(
        spec.dims.k, spec.payload["r"]
    ),
    "coverage_tight": lambda spec: make_coverage_tight(spec.dims.k),
    "indicator": lambda spec: make_indicator(spec.dims.k, spec.payload["target"]),
    "sum": lambda spec: sum_combine(
        [term.build() for term in spec.payload["terms"]], spec.payload["weights"]
    ),
    "embedding": lambda spec: embed_submodular(spec.payload["base"].build()),
}
