"""Breadth profiles, the structural breadth predictor, and verdicts."""

import numpy as np
import pytest

from conftest import random_invertible
from nilword import catalog
from nilword.classify import (breadth, breadth_profile, classify_breadth,
                              theorem_verdict)
from nilword.gfp import PrimeField
from nilword.liecore import LieAlgebra, change_basis, direct_sum

EXPECTED_TYPES_P3 = {
    "heis(1)": (0, 1), "heis(2)": (0, 1), "abelian(3)": (0,),
    "free2step(3)": (0, 2), "G53": (0, 2), "L6_21(0)": (0, 1, 2, 3),
    "L6_21(1)": (0, 1, 2, 3), "B013": (0, 1, 2, 3), "K22": (0, 2, 3),
    "B03(2)": (0, 3), "T7": (0, 1, 2, 3), "B013xheis": (0, 1, 2, 3),
    "T7xheis": (0, 1, 2, 3), "T7+ab2": (0, 1, 2, 3),
}


def test_breadth_values(p3):
    L = catalog.heisenberg(p3, 1)
    assert breadth(L, [1, 0, 0]) == 1
    assert breadth(L, [0, 0, 1]) == 0  # central
    assert breadth(L, [0, 0, 0]) == 0
    assert breadth(catalog.t7(p3), [1, 0, 0, 0, 0, 0, 0]) == 3
    assert breadth(catalog.l6_21(p3, 0), [1, 0, 0, 0, 0, 0]) == 3


def test_breadth_scale_and_central_shift_invariance(p3):
    L = catalog.l6_21(p3, 0)
    rng = np.random.default_rng(3)
    centre = L.center().enumerate()
    for _ in range(30):
        x = rng.integers(0, 3, size=6, dtype=np.int64)
        b = breadth(L, x)
        for c in (1, 2):
            for z in centre:
                assert breadth(L, (c * x + z) % 3) == b


def test_profile_counts_and_types(entries3):
    for entry in entries3:
        L = entry.algebra
        prof = breadth_profile(L)
        assert prof.type_set == EXPECTED_TYPES_P3[L.name]
        assert sum(prof.counts.values()) == prof.line_total
        assert prof.line_total == (3 ** L.dim - 1) // 2
        assert prof.b_max == max(prof.type_set)


def test_breadth_invariance_exhaustive_small_dims(p3):
    from conftest import exhaustive_breadth_invariance

    for entry in catalog.default_entries(p3):
        if entry.algebra.dim <= 7:
            exhaustive_breadth_invariance(entry.algebra)


def test_b03_type_at_five_with_explicit_nonsquare(p5):
    L = catalog.b03(p5, r=2)  # 2 is not a square mod 5
    assert breadth_profile(L).type_set == (0, 3)


def test_profile_invariant_under_change_basis(p3):
    rng = np.random.default_rng(17)
    for key in ("g53", "l6_21", "k22"):
        L = catalog.build(key, p3).algebra
        M = change_basis(L, random_invertible(rng, L.dim, 3))
        assert breadth_profile(M) == breadth_profile(L)


def test_profile_under_abelian_direct_sum(p3):
    for key in ("g53", "t7"):
        L = catalog.build(key, p3).algebra
        S = direct_sum(L, catalog.abelian(p3, 2))
        pl, ps = breadth_profile(L), breadth_profile(S)
        assert ps.type_set == pl.type_set
        assert ps.b_max == pl.b_max


def test_derived_dim_four_forces_breadth_three_or_four(p3):
    for entry in catalog.default_entries(p3):
        L = entry.algebra
        if L.derived_subalgebra().dim == 4:
            assert {3, 4} & set(breadth_profile(L).type_set)
    for seed in range(10):
        L = catalog.random_2step(4, 4, seed, p3)
        assert {3, 4} & set(breadth_profile(L).type_set)


@pytest.mark.parametrize("prime", [3, 5])
def test_classify_breadth_consistent_on_catalog(prime):
    field = PrimeField(prime)
    for entry in catalog.default_entries(field):
        got = classify_breadth(entry.algebra)
        assert got.consistent, entry.algebra.name
        if got.predicted_b is not None:
            assert got.measured_b == got.predicted_b
            assert got.clauses


def test_central_line_clause_witness(p3):
    got = classify_breadth(catalog.l6_21(p3, 0))
    assert got.measured_b == 3
    assert any("central line" in c for c in got.clauses)
    assert got.witness_ideal is not None
    # the witnessing line is the last nonzero lower central term <u6>
    assert got.witness_ideal.basis.tolist() == [[0, 0, 0, 0, 0, 1]]


EXPECTED_RULES_P3 = {
    "heis(1)": "small-derived", "heis(2)": "small-derived",
    "abelian(3)": "small-derived", "free2step(3)": "small-derived",
    "G53": "small-derived", "L6_21(0)": "four-step", "L6_21(1)": "four-step",
    "B013": "two-step", "K22": "two-step", "B03(2)": "two-step",
    "T7": "three-step", "B013xheis": "two-step", "T7xheis": "three-step",
    "T7+ab2": "three-step",
}


def test_verdict_rules_and_agreement(entries3):
    for entry in entries3:
        v = theorem_verdict(entry.algebra)
        assert v.applicable_rule == EXPECTED_RULES_P3[entry.algebra.name]
        assert v.agree, entry.algebra.name
        assert v.predicted_w_neq == v.computed_w_neq


def test_verdict_exceptional_cases(p3):
    v = theorem_verdict(catalog.l6_21(p3, 0))
    assert v.predicted_w_neq is True and v.computed_w_neq is True
    v = theorem_verdict(catalog.t7_plus_abelian2(p3))
    assert v.predicted_w_neq is True  # stem part is T7
    assert v.branch_evidence["split_abelian_dim"] == 2
    v = theorem_verdict(catalog.b013(p3))
    assert v.predicted_w_neq is True
    v = theorem_verdict(catalog.k22(p3))
    assert v.predicted_w_neq is False  # commuting quad exists
    assert v.branch_evidence.get("commuting_quad") == "found"


def test_verdict_out_of_scope(p3):
    L = catalog.free_two_step(p3, 4)  # derived dim 6
    v = theorem_verdict(L)
    assert v.applicable_rule == "out-of-scope"
    assert v.predicted_w_neq is None
    assert v.agree


def test_verdict_breadth_four_shortcut(p3):
    L = catalog.random_2step(5, 4, 0, p3)
    assert breadth_profile(L).b_max == 4
    v = theorem_verdict(L)
    assert v.applicable_rule == "breadth-four"
    assert v.predicted_w_neq is False and v.agree
    # a 5-step algebra with derived dimension 4 also lands here
    fil = LieAlgebra.from_brackets(
        p3, 6, {(0, 1): {2: 1}, (0, 2): {3: 1}, (0, 3): {4: 1}, (0, 4): {5: 1}},
        name="chain6")
    v = theorem_verdict(fil)
    assert v.applicable_rule == "breadth-four"
    assert v.agree and v.computed_w_neq is False


def test_verdict_random_2step_sample(p3):
    for seed in range(25):
        v = theorem_verdict(catalog.random_2step(4, 4, seed, p3))
        assert v.agree, f"seed {seed}"
