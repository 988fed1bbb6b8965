"""Property checkers: worked instances, counterexample soundness, and
agreement with the independent loop-based references."""

import json

import pytest
from hypothesis import given, settings, strategies as st

from ksubmax import (
    Dims,
    InputError,
    OracleRangeError,
    PreconditionError,
    TabularFunction,
    all_orthants,
    check_characterization,
    check_k_submodular,
    check_orthant_pair_inequality,
    check_orthant_submodular,
    check_r_wise_monotone,
    induced_set_function,
    make_coverage_tight,
    make_det_greedy_tight,
    make_layer_layout,
    make_max_k_cut,
    random_ksubmodular,
    random_table,
    tabulate,
)

import oracles
from factories import single_edge


def layout_table(k):
    return tabulate(make_layer_layout(single_edge(directed=True), k))


def any_table(seed, n, k):
    """Half the seeds give structured tables, half unstructured ones."""
    dims = Dims(n, k)
    if seed % 2 == 0:
        return random_ksubmodular(dims, atoms=5, seed=seed)
    return random_table(dims, seed=seed)


class TestKSubmodular:
    def test_constant_holds(self):
        table = TabularFunction(Dims(2, 2), [3.0] * 9)
        report = check_k_submodular(table)
        assert report.holds
        assert report.counterexample is None
        assert report.evals_used == 4 * 81

    def test_layer_layout_k3_fails_with_concrete_pair(self):
        report = check_k_submodular(layout_table(3))
        assert not report.holds
        margin = oracles.violation_margin(layout_table(3), report.counterexample)
        assert margin > 1e-9

    def test_single_edge_cut_fails(self):
        # counting half-open edges breaks the defining inequality
        table = tabulate(make_max_k_cut(single_edge(), 3))
        assert not check_k_submodular(table).holds

    def test_random_ksubmodular_holds(self):
        table = random_ksubmodular(Dims(2, 3), atoms=5, seed=11)
        assert check_k_submodular(table).holds

    @settings(max_examples=30)
    @given(seed=st.integers(0, 10**6), n=st.integers(1, 3), k=st.integers(1, 3))
    def test_agrees_with_loop_reference(self, seed, n, k):
        table = any_table(seed, n, k)
        assert check_k_submodular(table).holds == oracles.is_k_submodular(
            table, n, k, 1e-9
        )

    def test_first_counterexample_is_smallest_pair(self):
        table = layout_table(3)
        report = check_k_submodular(table)
        found = tuple(report.counterexample["s"]), tuple(report.counterexample["t"])
        # scan in index order and stop at the first violation
        from ksubmax import all_assignments

        for s in all_assignments(table.dims):
            for t in all_assignments(table.dims):
                lhs = table(s) + table(t)
                rhs = table(oracles.vec_min0(s, t)) + table(oracles.vec_max0(s, t))
                if lhs < rhs - 1e-9:
                    assert (s, t) == found
                    return
        pytest.fail("reference scan found no violation")

    def test_negative_entry_rejected(self):
        table = TabularFunction(Dims(1, 1), [0.0, 1.0])
        table.values[1] = -2.0
        with pytest.raises(OracleRangeError):
            check_k_submodular(table)

    def test_pair_cap(self):
        table = random_ksubmodular(Dims(2, 2), atoms=2, seed=1)
        with pytest.raises(InputError):
            check_k_submodular(table, max_pairs=10)


class TestOrthantSubmodular:
    def test_layer_layout_holds(self):
        assert check_orthant_submodular(layout_table(3)).holds

    @pytest.mark.parametrize("k,r", [(2, 1), (3, 2), (4, 4)])
    def test_det_greedy_tight_holds(self, k, r):
        assert check_orthant_submodular(tabulate(make_det_greedy_tight(k, r))).holds

    def test_modular_holds(self):
        # additive tables are submodular with equality in every orthant
        import numpy as np

        from ksubmax import all_assignments

        rng = np.random.default_rng(3)
        dims = Dims(3, 2)
        per_element = rng.random((3, 3))
        per_element[:, 0] = 0.0
        values = [
            sum(per_element[e][x[e]] for e in range(3))
            for x in all_assignments(dims)
        ]
        assert check_orthant_submodular(TabularFunction(dims, values)).holds

    @settings(max_examples=25)
    @given(seed=st.integers(0, 10**6), n=st.integers(1, 3), k=st.integers(1, 3))
    def test_agrees_with_loop_reference(self, seed, n, k):
        table = any_table(seed, n, k)
        assert check_orthant_submodular(table).holds == oracles.is_orthant_submodular(
            table, n, k, 1e-9
        )

    @settings(max_examples=15)
    @given(seed=st.integers(0, 10**6))
    def test_agrees_with_induced_set_function_route(self, seed):
        # checking each orthant's induced set function for classical
        # submodularity is an equivalent formulation
        table = any_table(seed, 2, 3)
        via_induced = all(
            oracles.is_submodular_set_function(
                induced_set_function(table, x), table.dims.n, 1e-9
            )
            for x in all_orthants(table.dims)
        )
        assert check_orthant_submodular(table).holds == via_induced

    def test_counterexample_lives_in_one_orthant(self):
        bad = random_table(Dims(2, 2), seed=13)
        report = check_orthant_submodular(bad)
        if report.holds:
            pytest.skip("seed happened to be orthant-submodular")
        cx = report.counterexample
        s, t = tuple(cx["s"]), tuple(cx["t"])
        orthant = tuple(cx["orthant"])
        assert all(a in (0, o) for a, o in zip(s, orthant))
        assert all(b in (0, o) for b, o in zip(t, orthant))
        lhs = bad(s) + bad(t)
        rhs = bad(oracles.vec_min0(s, t)) + bad(oracles.vec_max0(s, t))
        assert lhs < rhs - 1e-9


class TestInducedSetFunction:
    def test_max_2_cut_values(self):
        f = make_max_k_cut(single_edge(), 2)
        h = induced_set_function(f, (1, 2))
        assert h((0, 0)) == 0.0
        assert h((1, 0)) == 1.0  # f(1, 0) under the literal cut convention
        assert h((1, 1)) == 1.0

    def test_boundary_values(self):
        f = make_coverage_tight(3)
        h = induced_set_function(f, (2, 3))
        assert h((0, 0)) == f((0, 0))
        assert h((1, 1)) == f((2, 3))

    def test_requires_orthant(self):
        f = make_coverage_tight(3)
        with pytest.raises(PreconditionError):
            induced_set_function(f, (0, 2))


class TestRWiseMonotone:
    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_layer_layout_k_wise_holds(self, k):
        assert check_r_wise_monotone(layout_table(k), k).holds

    @pytest.mark.parametrize("k,r", [(2, 2), (3, 2), (4, 3), (5, 5)])
    def test_det_greedy_tight_threshold(self, k, r):
        table = tabulate(make_det_greedy_tight(k, r))
        assert check_r_wise_monotone(table, r).holds
        report = check_r_wise_monotone(table, r - 1) if r >= 2 else None
        if report is not None:
            assert not report.holds
            margin = oracles.monotone_violation_margin(table, report.counterexample)
            assert margin > 1e-9
            # the violating sum is exactly -1/(r+1)
            assert abs(report.counterexample["lhs"] + 1 / (r + 1)) < 1e-12

    def test_nonneg_marginals_hold_for_every_r(self):
        table = tabulate(make_coverage_tight(4))
        for r in range(1, 5):
            assert check_r_wise_monotone(table, r).holds

    def test_r_out_of_range(self):
        table = random_ksubmodular(Dims(2, 2), atoms=2, seed=0)
        with pytest.raises(InputError):
            check_r_wise_monotone(table, 3)
        with pytest.raises(InputError):
            check_r_wise_monotone(table, 0)

    @settings(max_examples=30)
    @given(
        seed=st.integers(0, 10**6),
        n=st.integers(1, 3),
        k=st.integers(1, 3),
        r=st.integers(1, 3),
    )
    def test_agrees_with_loop_reference(self, seed, n, k, r):
        if r > k:
            r = k
        table = any_table(seed, n, k)
        assert check_r_wise_monotone(table, r).holds == oracles.is_r_wise_monotone(
            table, n, k, r, 1e-9
        )


class TestCharacterization:
    def test_random_ksubmodular_agrees_with_both_true(self):
        table = random_ksubmodular(Dims(2, 3), atoms=5, seed=8)
        assert check_k_submodular(table).holds
        assert check_orthant_submodular(table).holds
        assert check_r_wise_monotone(table, 2).holds
        assert check_characterization(table).holds

    def test_layer_layout_k3_agrees_with_both_false(self):
        table = layout_table(3)
        assert not check_k_submodular(table).holds
        assert check_orthant_submodular(table).holds
        assert not check_r_wise_monotone(table, 2).holds
        assert check_characterization(table).holds

    @settings(max_examples=40)
    @given(seed=st.integers(0, 10**6), k=st.integers(2, 4))
    def test_agreement_on_arbitrary_tables(self, seed, k):
        assert check_characterization(any_table(seed, 2, k)).holds

    def test_mutation_keeps_sides_in_step(self):
        table = random_ksubmodular(Dims(2, 3), atoms=5, seed=21)
        perturbed = TabularFunction(
            table.dims, table.values.copy(), name="perturbed"
        )
        perturbed.values[7] += 0.5
        assert check_characterization(perturbed).holds

    def test_requires_k_at_least_2(self):
        with pytest.raises(InputError):
            check_characterization(random_ksubmodular(Dims(2, 1), atoms=2, seed=0))

    def test_agreement_stable_under_loose_eps(self):
        # with one tolerance shared by all sides, loosening it never breaks
        # the equivalence (everything collapses toward both-true)
        table = layout_table(3)
        assert check_characterization(table, eps=10.0).holds

    def test_disagreement_reported_with_witness(self, monkeypatch):
        # the disagreement branch only fires on an implementation bug, so
        # simulate one side misreporting
        import ksubmax.checks as checks_mod

        table = layout_table(3)
        real = check_k_submodular(table)
        assert not real.holds
        fake = checks_mod.CheckReport("k_submodular", True, None, real.evals_used)
        monkeypatch.setattr(checks_mod, "check_k_submodular", lambda *a, **kw: fake)
        report = checks_mod.check_characterization(table)
        assert not report.holds
        cx = report.counterexample
        assert cx["k_submodular_holds"] is True
        assert cx["pairwise_monotone_holds"] is False
        assert cx["witness"] is not None


class TestOrthantPairInequality:
    def test_holds_on_k_submodular(self):
        table = random_ksubmodular(Dims(2, 3), atoms=5, seed=2)
        assert check_orthant_pair_inequality(table).holds

    def test_equality_on_identical_orthants(self):
        table = random_ksubmodular(Dims(2, 2), atoms=4, seed=6)
        for x in all_orthants(table.dims):
            assert abs(2 * table(x) - 2 * table(oracles.vec_id0(x, x))) < 1e-12

    def test_layer_layout_k3_fails(self):
        report = check_orthant_pair_inequality(layout_table(3))
        assert not report.holds
        margin = oracles.violation_margin(layout_table(3), report.counterexample)
        assert margin > 1e-9


class TestCheckReport:
    def test_json_shape(self):
        report = check_k_submodular(layout_table(3))
        doc = json.loads(json.dumps(report.to_json()))
        assert set(doc) == {"property", "holds", "counterexample", "evals"}
        assert doc["holds"] is False
        assert doc["evals"] > 0
        assert set(doc["counterexample"]) == {"inequality", "s", "t", "lhs", "rhs"}

    def test_holding_report_has_no_counterexample(self):
        report = check_orthant_submodular(layout_table(3))
        assert report.holds and report.counterexample is None
