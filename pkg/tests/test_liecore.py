"""Structure-constant algebras: series, quotients, products, stem reduction."""

import numpy as np
import pytest

from conftest import random_invertible
from nilword import catalog
from nilword.gfp import PrimeField
from nilword.liecore import (LieAlgebra, bracket_span, central_product,
                             change_basis, check_z_cap_maximality, direct_sum,
                             heisenberg_normal_form, is_ideal, quotient,
                             stem_reduce, structure_report)
from nilword.linalg import span, subspace_intersect


def test_from_brackets_antisymmetric_closure(p3):
    L = LieAlgebra.from_brackets(p3, 3, {(0, 1): {2: 1}})
    assert L.sc[0, 1].tolist() == [0, 0, 1]
    assert L.sc[1, 0].tolist() == [0, 0, 2]  # -1 mod 3
    assert not L.sc[0, 2].any() and not L.sc[2, 2].any()


def test_bracket_bilinear_and_ad(p5):
    L = catalog.l6_21(p5, 1)
    rng = np.random.default_rng(0)
    for _ in range(20):
        x, y, z = rng.integers(0, 5, size=(3, 6), dtype=np.int64)
        assert np.array_equal(L.bracket(x, y), (-L.bracket(y, x)) % 5)
        assert np.array_equal(L.bracket((x + z) % 5, y),
                              (L.bracket(x, y) + L.bracket(z, y)) % 5)
        assert np.array_equal(L.ad(x) @ y % 5, L.bracket(x, y))


def test_validate_catches_violations(p3):
    good = catalog.g53(p3).sc.copy()
    bad = good.copy()
    bad[0, 1, 2] = 2  # breaks antisymmetry against sc[1, 0]
    msgs = LieAlgebra(p3, bad).validate()
    assert any("antisymmetry" in m for m in msgs)
    # [e0, e1] = e1 with [e1, e2] = e0 breaks Jacobi
    L = LieAlgebra.from_brackets(p3, 3, {(0, 1): {1: 1}, (1, 2): {0: 1}})
    assert any("Jacobi" in m for m in L.validate())
    assert catalog.g53(p3).validate() == []


def test_series_and_center_knowns(p3):
    rep = structure_report(catalog.g53(p3))
    assert (rep.dim, rep.nilpotency_class, rep.derived_dim, rep.center_dim) \
        == (5, 3, 3, 2)
    assert rep.lcs_dims == (5, 3, 2, 0)
    rep = structure_report(catalog.l6_21(p3, 0))
    assert rep.lcs_dims == (6, 4, 3, 1, 0)
    assert rep.is_stem and rep.min_generators == 2
    rep = structure_report(catalog.heisenberg(p3, 2))
    assert (rep.dim, rep.derived_dim, rep.center_dim) == (5, 1, 1)


def test_non_nilpotent_detected(p3):
    L = LieAlgebra.from_brackets(p3, 2, {(0, 1): {1: 1}})  # [x, y] = y
    assert not L.is_nilpotent()
    assert L.nilpotency_class() is None
    assert structure_report(L).is_nilpotent is False


def test_centralizer(p3):
    L = catalog.heisenberg(p3, 1)
    c = L.centralizer(span([[1, 0, 0]], 3, p3))
    assert c == span([[1, 0, 0], [0, 0, 1]], 3, p3)
    assert L.centralizer(L.center()) == span(np.eye(3, dtype=np.int64), 3, p3)


def test_ideals_and_quotient_homomorphism(p3):
    L = catalog.l6_21(p3, 0)
    assert is_ideal(L, L.derived_subalgebra())
    assert is_ideal(L, L.center())
    assert not is_ideal(L, span([[1, 0, 0, 0, 0, 0]], 6, p3))
    with pytest.raises(ValueError, match="not an ideal"):
        quotient(L, span([[1, 0, 0, 0, 0, 0]], 6, p3))
    Q, proj = quotient(L, L.center())
    assert Q.dim == 4
    assert Q.validate() == []
    rng = np.random.default_rng(1)
    for _ in range(20):
        x, y = rng.integers(0, 3, size=(2, 6), dtype=np.int64)
        assert np.array_equal(proj @ L.bracket(x, y) % 3,
                              Q.bracket(proj @ x % 3, proj @ y % 3))


def test_bracket_span_lcs_consistency(p3):
    L = catalog.t7(p3)
    full = span(np.eye(7, dtype=np.int64), 7, p3)
    series = L.lower_central_series()
    for i in range(1, len(series)):
        assert bracket_span(L, full, series[i - 1]) == series[i]


def test_change_basis_is_isomorphism(p5):
    rng = np.random.default_rng(2)
    for builder in (lambda: catalog.t7(p5), lambda: catalog.k22(p5)):
        L = builder()
        T = random_invertible(rng, L.dim, 5)
        M = change_basis(L, T)
        assert M.validate() == []
        # new-coordinate vectors u, w map to u @ T, w @ T in old coordinates
        for _ in range(10):
            u, w = rng.integers(0, 5, size=(2, L.dim), dtype=np.int64)
            lhs = M.bracket(u, w) @ T % 5
            rhs = L.bracket(u @ T % 5, w @ T % 5)
            assert np.array_equal(lhs, rhs)
        old, new = structure_report(L), structure_report(M)
        assert old.lcs_dims == new.lcs_dims
        assert old.center_dim == new.center_dim
        assert old.min_generators == new.min_generators


def test_direct_sum_blocks(p3):
    A, B = catalog.heisenberg(p3, 1), catalog.g53(p3)
    S = direct_sum(A, B)
    assert S.dim == 8
    assert S.validate() == []
    ra, rb, rs = structure_report(A), structure_report(B), structure_report(S)
    assert rs.derived_dim == ra.derived_dim + rb.derived_dim
    assert rs.center_dim == ra.center_dim + rb.center_dim
    assert rs.nilpotency_class == max(ra.nilpotency_class, rb.nilpotency_class)


def test_central_product_dims_and_glue(p3):
    A, B = catalog.b013(p3), catalog.heisenberg(p3, 1)
    glue1 = span([np.eye(8, dtype=np.int64)[7]], 8, p3)
    glue2 = B.center()
    P = central_product(A, B, glue1, glue2)
    assert P.dim == 8 + 3 - 1
    assert P.validate() == []
    with pytest.raises(ValueError):
        central_product(A, B, span([np.eye(8, dtype=np.int64)[0]], 8, p3), glue2)
    with pytest.raises(ValueError):
        central_product(A, B, A.center(), glue2)  # 4-dim vs 1-dim glue


@pytest.mark.parametrize("prime", [3, 5])
def test_stem_reduce_all_catalog(prime):
    field = PrimeField(prime)
    for entry in catalog.default_entries(field):
        L = entry.algebra
        S, extra = stem_reduce(L)
        assert S.validate() == []
        assert S.dim + extra == L.dim
        # stem condition: Z(S) inside S'
        assert S.center().is_subspace_of(S.derived_subalgebra())
        assert S.derived_subalgebra().dim == L.derived_subalgebra().dim
        ls, ss = structure_report(L), structure_report(S)
        nontrivial = lambda dims: tuple(d for d in dims[1:] if d)
        assert nontrivial(ls.lcs_dims) == nontrivial(ss.lcs_dims)
        assert ss.center_dim == ls.center_dim - extra
        if ls.is_stem:
            assert extra == 0


def test_stem_reduce_strips_abelian_split(p3):
    L = catalog.t7_plus_abelian2(p3)
    S, extra = stem_reduce(L)
    assert extra == 2 and S.dim == 7
    assert structure_report(S).is_stem


def test_heisenberg_normal_form(p3, p5):
    assert heisenberg_normal_form(catalog.heisenberg(p3, 2)).m == 2
    got = heisenberg_normal_form(direct_sum(catalog.heisenberg(p3, 1),
                                            catalog.abelian(p3, 2)))
    assert got.m == 1 and got.extra_central_dim == 2
    # survives an arbitrary basis change
    rng = np.random.default_rng(4)
    L = change_basis(catalog.heisenberg(p5, 2), random_invertible(rng, 5, 5))
    got = heisenberg_normal_form(L)
    assert got is not None and got.m == 2 and got.extra_central_dim == 0
    assert heisenberg_normal_form(catalog.g53(p3)) is None
    assert heisenberg_normal_form(catalog.abelian(p3, 3)) is None


def test_check_z_cap_maximality(p3):
    assert check_z_cap_maximality(catalog.g53(p3)) is None  # class 3
    got = check_z_cap_maximality(catalog.l6_21(p3, 0))  # class 4
    w = subspace_intersect(catalog.l6_21(p3, 0).center(),
                           catalog.l6_21(p3, 0).derived_subalgebra())
    assert got.codim_in_derived == 4 - w.dim
    assert got.consistent


def test_generates_and_min_generators(p3):
    L = catalog.l6_21(p3, 0)
    e = np.eye(6, dtype=np.int64)
    assert L.generates([e[0], e[1]])
    assert not L.generates([e[0]])
    assert not L.generates([e[2], e[3]])  # inside L'
    assert structure_report(L).min_generators == 2
