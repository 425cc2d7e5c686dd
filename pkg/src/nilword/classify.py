"""Breadth invariants and the structural prediction of whether w(L) = L'.

breadth(x) is the rank of ad(x); the breadth type of L is the set of values
it attains. For nilpotent algebras with dim L' <= 4 the equality w(L) = L'
is decided by dimension, class, center and breadth-type data alone, after
splitting off the abelian direct factor; theorem_verdict runs that decision
and then checks it against the exact image computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .budgets import DEFAULT_IMAGE_POINTS, BudgetExceededError
from .image import (_center_complement_lines, commuting_generating_quad,
                    projective_points, word_image)
from .liecore import LieAlgebra, quotient, stem_reduce, structure_report
from .linalg import Subspace, span


def breadth(L: LieAlgebra, x) -> int:
    """b(x) = rank of ad(x) = dim [x, L]."""
    return linalg.rank(L.ad(x), L.p)


@dataclass(frozen=True)
class BreadthProfile:
    """Distribution of breadth over the lines (projective points) of L."""
    b_max: int
    type_set: tuple[int, ...]
    counts: dict[int, int] = field(compare=False)

    @property
    def line_total(self) -> int:
        return sum(self.counts.values())


def breadth_profile(L: LieAlgebra,
                    budget: int = DEFAULT_IMAGE_POINTS) -> BreadthProfile:
    """Exact breadth counts, swept over a complement of the center.

    Lines inside Z(L) have breadth 0; every other line is a central shift of
    a unique complement line with the same breadth, which contributes a
    factor p^dim Z to its count.
    """
    p = L.p
    z = L.center()
    counts: dict[int, int] = {}
    if z.dim > 0:
        counts[0] = (p ** z.dim - 1) // (p - 1)
    raw: dict[int, int] = {}
    for x in _center_complement_lines(L, budget):
        b = breadth(L, x)
        raw[b] = raw.get(b, 0) + 1
    for b, c in raw.items():
        counts[b] = counts.get(b, 0) + c * p ** z.dim
    type_set = tuple(sorted(counts))
    return BreadthProfile(b_max=max(type_set, default=0), type_set=type_set,
                          counts=counts)


@dataclass(frozen=True)
class BreadthClassification:
    """Dimension-based prediction of b(L) for b <= 3, checked against measurement.

    clauses lists every satisfied clause of the classification (several can
    hold at once); predicted_b is None when the dimension data only says
    b(L) >= 4.
    """
    measured_b: int
    predicted_b: int | None
    clauses: tuple[str, ...]
    witness_ideal: Subspace | None
    consistent: bool


def _predict_breadth(L: LieAlgebra) -> tuple[int | None, tuple[str, ...],
                                             Subspace | None]:
    lp_dim = L.derived_subalgebra().dim
    codim_z = L.dim - L.center().dim
    if lp_dim == 0:
        return 0, ("abelian",), None
    if lp_dim == 1:
        return 1, ("derived dim 1",), None
    if lp_dim == 2:
        return 2, ("derived dim 2",), None
    if lp_dim == 3 and codim_z == 3:
        return 2, ("derived dim 3 with center codim 3",), None
    clauses: list[str] = []
    witness = None
    if lp_dim == 3:
        clauses.append("derived dim 3 with center codim >= 4")
    if lp_dim >= 4 and codim_z == 4:
        clauses.append("derived dim >= 4 with center codim 4")
    if lp_dim == 4:
        # remaining breadth-3 clause: some central line I makes Z(L/I) codim 3
        z = L.center()
        for row in projective_points(L.p, z.dim) @ z.basis % L.p:
            ideal = span([row], L.dim, L.field)
            q, _ = quotient(L, ideal)
            if q.dim - q.center().dim == 3:
                clauses.append("central line with quotient center codim 3")
                witness = ideal
                break
    if clauses:
        return 3, tuple(clauses), witness
    return None, ("no breadth <= 3 clause applies",), None


def classify_breadth(L: LieAlgebra,
                     budget: int = DEFAULT_IMAGE_POINTS) -> BreadthClassification:
    """Predict b(L) from dimensions (valid for nilpotent L, p odd) and verify."""
    if not L.is_nilpotent():
        raise ValueError("breadth classification requires a nilpotent algebra")
    predicted, clauses, witness = _predict_breadth(L)
    measured = breadth_profile(L, budget=budget).b_max
    consistent = (measured >= 4) if predicted is None else (measured == predicted)
    return BreadthClassification(measured_b=measured, predicted_b=predicted,
                                 clauses=clauses, witness_ideal=witness,
                                 consistent=consistent)


@dataclass(frozen=True)
class TheoremVerdict:
    """Side-by-side structural prediction and exact computation of w(L) != L'.

    predicted_w_neq is None when dim L' >= 5 (outside the decided range); in
    that case agree is vacuously True. branch_evidence records the data the
    prediction used; consistency_notes flags impossible combinations.
    """
    applicable_rule: str
    predicted_w_neq: bool | None
    computed_w_neq: bool
    agree: bool
    branch_evidence: dict = field(compare=False)
    consistency_notes: tuple[str, ...] = ()


def theorem_verdict(L: LieAlgebra,
                    budget: int = DEFAULT_IMAGE_POINTS) -> TheoremVerdict:
    """Decide w(L) = L' structurally, then verify against the exact image.

    The structural rules assume nothing about L beyond nilpotency and odd p:
    dim L' <= 3 always gives w(L) = L'; for dim L' = 4 the split-off
    stem part S decides via (class, dim S, dim Z(S)) and, for 2-step stems of
    dimension 8, the breadth type plus the commuting-quad search.
    """
    rep = structure_report(L)
    if not rep.is_nilpotent:
        raise ValueError("verdict requires a nilpotent algebra")
    d = rep.derived_dim
    evidence: dict = {"dim": rep.dim, "class": rep.nilpotency_class,
                      "derived_dim": d, "center_dim": rep.center_dim}
    notes: list[str] = []
    predicted: bool | None
    if d >= 5:
        rule = "out-of-scope"
        predicted = None
    elif d <= 3:
        rule = "small-derived"
        predicted = False
    else:
        S, abelian_dim = stem_reduce(L)
        srep = structure_report(S)
        profile = breadth_profile(S, budget=budget)
        evidence.update({"stem_dim": S.dim, "stem_center_dim": srep.center_dim,
                         "split_abelian_dim": abelian_dim,
                         "stem_breadth_type": profile.type_set,
                         "stem_class": srep.nilpotency_class})
        if profile.b_max < 3:
            notes.append("derived dim 4 forces breadth >= 3, measured "
                         f"{profile.b_max}")
        cls = srep.nilpotency_class
        if profile.b_max == 4:
            rule = "breadth-four"
            predicted = False
            if cls is not None and cls >= 6:
                notes.append(f"class {cls} exceeds the maximum for derived dim 4")
        elif cls == 2:
            rule = "two-step"
            if S.dim < 8:
                notes.append(f"2-step stem with derived dim 4 has dim >= 8, got {S.dim}")
                predicted = False
            elif S.dim == 8:
                t = profile.type_set
                if t in ((0, 1, 3), (0, 1, 2, 3)):
                    predicted = True
                elif t == (0, 2, 3):
                    quad = commuting_generating_quad(S)
                    evidence["commuting_quad"] = "found" if quad else "none"
                    predicted = quad is None
                else:
                    if t != (0, 3):
                        notes.append(f"unexpected breadth type {t} for a "
                                     "2-step dim-8 stem with breadth 3")
                    predicted = False
            else:
                predicted = False
        elif cls == 3:
            rule = "three-step"
            predicted = (S.dim == 7 and srep.center_dim == 3)
        elif cls == 4:
            rule = "four-step"
            predicted = (S.dim == 6 and srep.center_dim == 2)
        elif cls == 5:
            rule = "five-step"
            predicted = False
            notes.append("5-step stem with derived dim 4 must have breadth 4, "
                         f"measured {profile.b_max}")
        else:
            rule = "derived-dim-four"
            predicted = False
            notes.append(f"unexpected class {cls} for derived dim 4")
    img = word_image(L, budget=budget)
    computed = not img.is_full
    agree = True if predicted is None else (predicted == computed)
    return TheoremVerdict(applicable_rule=rule, predicted_w_neq=predicted,
                          computed_w_neq=computed, agree=agree,
                          branch_evidence=evidence,
                          consistency_notes=tuple(notes))
