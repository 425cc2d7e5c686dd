"""Named benchmark algebras with their expected invariants, plus random 2-step sampling.

Every expected field carries a provenance source: "paper" for values asserted
by the theorems the suite reproduces, "trivial" for values immediate from the
construction, and "derived" for values measured once by the brute-force
oracle and frozen here. Tests check expectations; nothing here is assumed by
the computation paths themselves.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

import numpy as np

from .gfp import PrimeField
from .liecore import LieAlgebra, central_product, direct_sum, quotient
from .linalg import span


@dataclass(frozen=True)
class Expected:
    value: object
    source: str  # "paper" | "trivial" | "derived"

    def __post_init__(self):
        if self.source not in ("paper", "trivial", "derived"):
            raise ValueError(f"unknown provenance source {self.source!r}")


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    params: dict = dc_field(compare=False)
    algebra: LieAlgebra = dc_field(compare=False)
    expected: dict = dc_field(compare=False)  # field name -> Expected


def heisenberg(field: PrimeField, m: int = 1) -> LieAlgebra:
    """x_1, y_1, ..., x_m, y_m, z with [x_i, y_i] = z."""
    if m < 1:
        raise ValueError("heisenberg requires m >= 1")
    dim = 2 * m + 1
    brackets = {(2 * i, 2 * i + 1): {dim - 1: 1} for i in range(m)}
    return LieAlgebra.from_brackets(field, dim, brackets, name=f"heis({m})")


def abelian(field: PrimeField, d: int = 1) -> LieAlgebra:
    if d < 1:
        raise ValueError("abelian requires d >= 1")
    return LieAlgebra(field, np.zeros((d, d, d), np.int64), name=f"abelian({d})")


def free_two_step(field: PrimeField, g: int = 3) -> LieAlgebra:
    """Free 2-step algebra on g generators: basis e_1..e_g then e_ij (i<j, lex)."""
    if g < 2:
        raise ValueError("free_two_step requires g >= 2")
    pair_index = {}
    for i in range(g):
        for j in range(i + 1, g):
            pair_index[(i, j)] = g + len(pair_index)
    brackets = {(i, j): {pos: 1} for (i, j), pos in pair_index.items()}
    dim = g + len(pair_index)
    return LieAlgebra.from_brackets(field, dim, brackets, name=f"free2step({g})")


def g53(field: PrimeField) -> LieAlgebra:
    """5-dim, 2-generator, class 3: x, y, a=[x,y], b=[x,a], c=[y,a]."""
    brackets = {(0, 1): {2: 1}, (0, 2): {3: 1}, (1, 2): {4: 1}}
    return LieAlgebra.from_brackets(field, 5, brackets, name="G53")


def l6_21(field: PrimeField, eps: int = 0) -> LieAlgebra:
    """The 6-dim class-4 family u_1..u_6; eps = 0 is the w(L) != L' member.

    [u1,u2]=u3, [u1,u3]=u4, [u1,u4]=u6, [u2,u3]=u5, [u2,u5]=eps*u6.
    """
    eps = field.element(eps)
    brackets = {(0, 1): {2: 1}, (0, 2): {3: 1}, (0, 3): {5: 1},
                (1, 2): {4: 1}, (1, 4): {5: eps}}
    return LieAlgebra.from_brackets(field, 6, brackets, name=f"L6_21({eps})")


def b013(field: PrimeField) -> LieAlgebra:
    """8-dim 2-step with a breadth-1 generator: only [z,w] survives against w.

    Basis x,y,z,w then [x,y],[x,z],[y,z],[z,w]; here [x,w] = [y,w] = 0.
    """
    brackets = {(0, 1): {4: 1}, (0, 2): {5: 1}, (1, 2): {6: 1}, (2, 3): {7: 1}}
    return LieAlgebra.from_brackets(field, 8, brackets, name="B013")


def k22(field: PrimeField) -> LieAlgebra:
    """8-dim 2-step with two commuting generator pairs: [u1,u2] = 0 = [u3,u4].

    Basis u1..u4 then [u1,u3],[u1,u4],[u2,u3],[u2,u4].
    """
    brackets = {(0, 2): {4: 1}, (0, 3): {5: 1}, (1, 2): {6: 1}, (1, 3): {7: 1}}
    return LieAlgebra.from_brackets(field, 8, brackets, name="K22")


def b03(field: PrimeField, r: int | None = None) -> LieAlgebra:
    """8-dim 2-step of breadth type (0,3): [z,w] = -[x,y], [x,z] = -r[y,w].

    r must be a non-square; defaults to the smallest one. Basis x,y,z,w then
    [x,y],[y,z],[y,w],[x,w].
    """
    if r is None:
        r = field.find_nonsquare()
    r = field.element(r)
    if field.is_square(r):
        raise ValueError(f"r must be a non-square in F_{field.p}, got {r}")
    brackets = {(0, 1): {4: 1}, (1, 2): {5: 1}, (1, 3): {6: 1}, (0, 3): {7: 1},
                (2, 3): {4: field.neg(1)}, (0, 2): {6: field.neg(r)}}
    return LieAlgebra.from_brackets(field, 8, brackets, name=f"B03({r})")


def t7(field: PrimeField) -> LieAlgebra:
    """7-dim 3-step with 3-dim center: x,y,z,a=[x,y],b=[x,z],c=[y,z],d=[x,a]."""
    brackets = {(0, 1): {3: 1}, (0, 2): {4: 1}, (1, 2): {5: 1}, (0, 3): {6: 1}}
    return LieAlgebra.from_brackets(field, 7, brackets, name="T7")


def b013_x_heis(field: PrimeField) -> LieAlgebra:
    """Central product of B013 with heis(1), glued along [z,w] ~ z. Dim 10, 2-step."""
    left = b013(field)
    right = heisenberg(field, 1)
    eye8 = np.eye(8, dtype=np.int64)
    eye3 = np.eye(3, dtype=np.int64)
    out = central_product(left, right, span([eye8[7]], 8, field),
                          span([eye3[2]], 3, field))
    out.name = "B013xheis"
    return out


def t7_x_heis(field: PrimeField) -> LieAlgebra:
    """Central product of T7 with heis(1), glued along [x,[x,y]] ~ z. Dim 9, 3-step."""
    left = t7(field)
    right = heisenberg(field, 1)
    eye7 = np.eye(7, dtype=np.int64)
    eye3 = np.eye(3, dtype=np.int64)
    out = central_product(left, right, span([eye7[6]], 7, field),
                          span([eye3[2]], 3, field))
    out.name = "T7xheis"
    return out


def t7_plus_abelian2(field: PrimeField) -> LieAlgebra:
    out = direct_sum(t7(field), abelian(field, 2))
    out.name = "T7+ab2"
    return out


def random_2step(g: int, d: int, seed: int, field: PrimeField) -> LieAlgebra:
    """Seeded uniform-ish 2-step algebra: free_two_step(g) modulo a random
    codim-d subspace of its derived part.

    The relation matrix is rejection-sampled until it has full rank, which
    makes the relation subspace uniform (every subspace of the right
    dimension has the same number of spanning tuples). Jacobi is automatic:
    the quotient is 2-step, so all double brackets vanish.
    """
    m = g * (g - 1) // 2
    if not 1 <= d <= m:
        raise ValueError(f"derived dimension must be in [1, {m}], got {d}")
    free = free_two_step(field, g)
    c = m - d
    name = f"random_2step(g={g},d={d},seed={seed})"
    if c == 0:
        out = LieAlgebra(field, free.sc, name=name)
        return out
    rng = random.Random(seed)
    p = field.p
    while True:
        rows = np.array([[rng.randrange(p) for _ in range(m)] for _ in range(c)],
                        dtype=np.int64)
        embedded = np.zeros((c, g + m), dtype=np.int64)
        embedded[:, g:] = rows
        rel = span(embedded, g + m, field)
        if rel.dim == c:
            break
    out, _ = quotient(free, rel)
    out.name = name
    return out


_BUILDERS = {
    "heis": heisenberg,
    "abelian": abelian,
    "free2step": free_two_step,
    "g53": g53,
    "l6_21": l6_21,
    "b013": b013,
    "k22": k22,
    "b03": b03,
    "t7": t7,
    "b013xheis": b013_x_heis,
    "t7xheis": t7_x_heis,
    "t7+ab2": t7_plus_abelian2,
}


def catalog_keys() -> list[str]:
    return list(_BUILDERS)


def _expected_for(key: str, field: PrimeField, params: dict) -> dict:
    p = field.p
    E = Expected
    if key == "heis":
        m = params.get("m", 1)
        return {"dim": E(2 * m + 1, "trivial"), "class": E(2, "trivial"),
                "derived_dim": E(1, "trivial"), "center_dim": E(1, "trivial"),
                "breadth_type": E((0, 1), "paper"),
                "w_equals_derived": E(True, "paper"), "sum_depth": E(1, "trivial")}
    if key == "abelian":
        d = params.get("d", 1)
        return {"dim": E(d, "trivial"), "class": E(1, "trivial"),
                "derived_dim": E(0, "trivial"), "center_dim": E(d, "trivial"),
                "breadth_type": E((0,), "trivial"),
                "w_equals_derived": E(True, "trivial"), "sum_depth": E(1, "trivial")}
    if key == "free2step":
        g = params.get("g", 3)
        m = g * (g - 1) // 2
        out = {"dim": E(g + m, "trivial"), "class": E(2, "trivial"),
               "derived_dim": E(m, "trivial"), "center_dim": E(m, "trivial")}
        if m <= 3:
            out["w_equals_derived"] = E(True, "paper")
            out["sum_depth"] = E(1, "paper")
        if g == 3:
            out["breadth_type"] = E((0, 2), "derived")
        return out
    if key == "g53":
        return {"dim": E(5, "trivial"), "class": E(3, "derived"),
                "derived_dim": E(3, "derived"), "center_dim": E(2, "derived"),
                "breadth_type": E((0, 2), "derived"),
                "w_equals_derived": E(True, "paper"), "sum_depth": E(1, "paper")}
    if key == "l6_21":
        eps = field.element(params.get("eps", 0))
        base = {"dim": E(6, "trivial"), "class": E(4, "paper"),
                "derived_dim": E(4, "paper")}
        if eps == 0:
            base.update({"center_dim": E(2, "paper"),
                         "breadth_type": E((0, 1, 2, 3), "derived"),
                         "w_equals_derived": E(False, "paper"),
                         "sum_depth": E(2, "paper")})
        else:
            base.update({"center_dim": E(1, "paper"),
                         "breadth_type": E((0, 1, 2, 3), "derived"),
                         "w_equals_derived": E(True, "paper"),
                         "sum_depth": E(1, "paper")})
        return base
    if key == "b013":
        return {"dim": E(8, "trivial"), "class": E(2, "trivial"),
                "derived_dim": E(4, "paper"), "center_dim": E(4, "paper"),
                "breadth_type": E((0, 1, 2, 3), "derived"),
                "w_equals_derived": E(False, "paper"), "sum_depth": E(2, "paper"),
                "commuting_quad": E("none", "derived")}
    if key == "k22":
        return {"dim": E(8, "trivial"), "class": E(2, "trivial"),
                "derived_dim": E(4, "paper"), "center_dim": E(4, "paper"),
                "breadth_type": E((0, 2, 3), "derived"),
                "w_equals_derived": E(True, "paper"), "sum_depth": E(1, "paper"),
                "commuting_quad": E("found", "paper")}
    if key == "b03":
        return {"dim": E(8, "trivial"), "class": E(2, "trivial"),
                "derived_dim": E(4, "paper"), "center_dim": E(4, "paper"),
                "breadth_type": E((0, 3), "paper"),
                "w_equals_derived": E(True, "paper"), "sum_depth": E(1, "paper")}
    if key == "t7":
        return {"dim": E(7, "trivial"), "class": E(3, "derived"),
                "derived_dim": E(4, "derived"), "center_dim": E(3, "derived"),
                "breadth_type": E((0, 1, 2, 3), "derived"),
                "w_equals_derived": E(False, "paper"), "sum_depth": E(2, "paper")}
    if key == "b013xheis":
        return {"dim": E(10, "trivial"), "class": E(2, "trivial"),
                "derived_dim": E(4, "derived"), "center_dim": E(4, "derived"),
                "breadth_type": E((0, 1, 2, 3), "derived"),
                "w_equals_derived": E(True, "paper"), "sum_depth": E(1, "paper")}
    if key == "t7xheis":
        return {"dim": E(9, "trivial"), "class": E(3, "derived"),
                "derived_dim": E(4, "derived"), "center_dim": E(3, "derived"),
                "breadth_type": E((0, 1, 2, 3), "derived"),
                "w_equals_derived": E(True, "paper"), "sum_depth": E(1, "paper")}
    if key == "t7+ab2":
        return {"dim": E(9, "trivial"), "class": E(3, "derived"),
                "derived_dim": E(4, "derived"), "center_dim": E(5, "derived"),
                "breadth_type": E((0, 1, 2, 3), "derived"),
                "w_equals_derived": E(False, "paper"), "sum_depth": E(2, "paper")}
    return {}


def build(key: str, field: PrimeField, **params) -> CatalogEntry:
    """Construct a catalog entry by key; unknown keys raise KeyError."""
    k = key.lower()
    if k not in _BUILDERS:
        raise KeyError(f"unknown catalog key {key!r}; known: {', '.join(_BUILDERS)}")
    algebra = _BUILDERS[k](field, **params)
    problems = algebra.validate()
    if problems:
        raise AssertionError(f"catalog entry {key} failed validation: {problems[0]}")
    return CatalogEntry(key=k, params=dict(params), algebra=algebra,
                        expected=_expected_for(k, field, params))


def default_entries(field: PrimeField) -> list[CatalogEntry]:
    """The canonical verification set, in a fixed order."""
    specs = [("heis", {"m": 1}), ("heis", {"m": 2}), ("abelian", {"d": 3}),
             ("free2step", {"g": 3}), ("g53", {}),
             ("l6_21", {"eps": 0}), ("l6_21", {"eps": 1}),
             ("b013", {}), ("k22", {}), ("b03", {}),
             ("t7", {}), ("b013xheis", {}), ("t7xheis", {}), ("t7+ab2", {})]
    return [build(k, field, **ps) for k, ps in specs]
