"""Exact image of the degree-2 bracket word map w(L) = {[x, y]} and its analyses.

The image is a scale-closed subset of the derived subalgebra L'; it is stored
as a membership table over L' indexed by base-p point codes. Two independent
routes compute it: word_image sweeps one representative per line of a fixed
complement of the center (complete, since [x + z, y] = [x, y] for central z
and Im ad(cx) = Im ad(x) for c != 0), while word_image_bruteforce sweeps all
ordered pairs. The two must agree; keeping both is the point.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from . import linalg
from .budgets import (DEFAULT_IMAGE_POINTS, DEFAULT_ORACLE_PAIRS,
                      BudgetExceededError)
from .liecore import LieAlgebra
from .linalg import Subspace


def projective_points(p: int, m: int) -> np.ndarray:
    """One representative per line of F_p^m: first nonzero coordinate is 1.

    Rows are ordered by leading position, then lexicographically; the array
    has (p^m - 1)/(p - 1) rows.
    """
    if m == 0:
        return np.zeros((0, 0), dtype=np.int64)
    blocks = []
    for lead in range(m):
        tail = linalg.coefficient_grid(p, m - lead - 1)
        block = np.zeros((tail.shape[0], m), dtype=np.int64)
        block[:, lead] = 1
        if m - lead - 1:
            block[:, lead + 1:] = tail
        blocks.append(block)
    return np.vstack(blocks)


def point_codes(coords: np.ndarray, p: int) -> np.ndarray:
    """Base-p code of each coordinate row: sum_i row[i] * p^i."""
    d = coords.shape[-1]
    return coords @ (p ** np.arange(d, dtype=np.int64))


def code_points(codes: np.ndarray, p: int, d: int) -> np.ndarray:
    """Inverse of point_codes: decode codes into (len, d) coordinate rows."""
    codes = np.asarray(codes, dtype=np.int64)
    cols = [(codes // p ** i) % p for i in range(d)]
    return np.stack(cols, axis=1) if d else np.zeros((len(codes), 0), np.int64)


@dataclass
class ElementSet:
    """A subset of a subspace, as a membership table over its point codes."""

    base: Subspace
    members: np.ndarray  # bool, length p^dim(base)

    def __post_init__(self):
        if self.members.shape != (self.base.p ** self.base.dim,):
            raise ValueError("membership table length must be p^dim")
        self.members.flags.writeable = False

    @property
    def count(self) -> int:
        return int(self.members.sum())

    @property
    def is_full(self) -> bool:
        return self.count == self.members.size

    def codes(self) -> np.ndarray:
        return np.flatnonzero(self.members)

    def coord_points(self) -> np.ndarray:
        return code_points(self.codes(), self.base.p, self.base.dim)

    def vectors(self) -> np.ndarray:
        """Members as ambient vectors, in code order."""
        return self.coord_points() @ self.base.basis % self.base.p

    def contains(self, v) -> bool:
        w = linalg.as_vector(v, self.base.p)
        if not self.base.contains(w):
            return False
        code = int(point_codes(self.base.coords(w)[None, :], self.base.p)[0])
        return bool(self.members[code])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.base == other.base and np.array_equal(self.members, other.members)


def _center_complement_lines(L: LieAlgebra, budget: int) -> np.ndarray:
    """Projective representatives of a complement of Z(L), as ambient rows."""
    comp = L.center().complement_indices
    m = len(comp)
    npts = (L.p ** m - 1) // (L.p - 1)
    if npts > budget:
        raise BudgetExceededError(
            f"image sweep too large: {npts} lines exceed budget {budget}")
    pts = projective_points(L.p, m)
    amb = np.zeros((pts.shape[0], L.dim), dtype=np.int64)
    if m:
        amb[:, list(comp)] = pts
    return amb


def word_image(L: LieAlgebra, budget: int = DEFAULT_IMAGE_POINTS) -> ElementSet:
    """w(L) = {[x, y] : x, y in L}, exactly, as a subset of L'.

    Sweeps ad(x) over one representative per line of a complement of the
    center and unions the image subspaces; this loses nothing because the
    bracket is unchanged by central shifts of x and the image of ad(x) is
    scale-invariant.
    """
    p = L.p
    lp = L.derived_subalgebra()
    d = lp.dim
    if p ** d > budget:
        raise BudgetExceededError(
            f"image table too large: {p}^{d} points exceed budget {budget}")
    table = np.zeros(p ** d, dtype=bool)
    table[0] = True  # [x, x] = 0
    piv = list(lp.pivots)
    grids: dict[int, np.ndarray] = {}
    for x in _center_complement_lines(L, budget):
        adx = L.ad(x)
        R, _, rk = linalg.rref(adx.T, p)  # row space of ad(x)^T = Im ad(x)
        rows = R[:rk]
        coords = rows[:, piv]  # Im ad(x) <= L', so pivot coords are exact
        if rk not in grids:
            grids[rk] = linalg.coefficient_grid(p, rk)
        pts = grids[rk] @ coords % p
        table[point_codes(pts, p)] = True
    return ElementSet(base=lp, members=table)


def word_image_bruteforce(L: LieAlgebra,
                          budget: int = DEFAULT_ORACLE_PAIRS) -> ElementSet:
    """Oracle route: sweep every ordered pair (x, y) and record [x, y].

    Kept deliberately independent of word_image's line reduction; the pair
    loop is blocked and vectorized but per-pair in meaning.
    """
    p, n = L.p, L.dim
    pairs = p ** (2 * n)
    if pairs > budget:
        raise BudgetExceededError(
            f"oracle sweep too large: {p}^{2 * n} pairs exceed budget {budget}")
    lp = L.derived_subalgebra()
    table = np.zeros(p ** lp.dim, dtype=bool)
    piv = list(lp.pivots)
    pw = p ** np.arange(lp.dim, dtype=np.int64)
    all_vecs = linalg.coefficient_grid(p, n)
    block = max(1, 2_000_000 // max(1, all_vecs.shape[0]))
    for start in range(0, all_vecs.shape[0], block):
        xs = all_vecs[start:start + block]
        # ads[b, j, k]: k-component of [x_b, e_j]
        ads = np.einsum("bi,ijk->bjk", xs, L.sc) % p
        prods = np.matmul(all_vecs, ads) % p  # (b, y, k)
        table[(prods[..., piv] @ pw).ravel()] = True
    return ElementSet(base=lp, members=table)


@dataclass(frozen=True)
class SumDepthResult:
    """k = least number of image elements whose sums give all of L'."""
    k: int
    decomposition: list | None  # ambient vectors summing to the target


def sum_depth(L: LieAlgebra, image: ElementSet | None = None, target=None,
              budget: int = DEFAULT_IMAGE_POINTS) -> SumDepthResult:
    """Least k with L' = w(L) + ... + w(L) (k summands), by exact sumset growth.

    Since 0 is in w(L) the k-fold sumsets are nested, so this is a breadth
    first search over L' point codes. w(L) spans L' and is scale-closed, so k
    never exceeds dim L'; failure to stabilize by then is an internal error.
    When target is given, also returns a certified decomposition of it into
    depth-many image elements.
    """
    img = image if image is not None else word_image(L, budget=budget)
    p, d = img.base.p, img.base.dim
    depth = np.zeros(p ** d, dtype=np.int32)
    depth[img.codes()] = 1
    gen = img.coord_points()
    frontier = img.codes()
    k = 1
    while (depth == 0).any():
        if k > max(d, 1):
            raise AssertionError("sumset failed to stabilize within dim L' rounds")
        fro = code_points(frontier, p, d)
        hits = []
        for start in range(0, fro.shape[0], 512):
            sums = (fro[start:start + 512, None, :] + gen[None, :, :]) % p
            codes = point_codes(sums.reshape(-1, d), p)
            fresh = codes[depth[codes] == 0]
            depth[fresh] = k + 1
            hits.append(fresh)
        frontier = np.unique(np.concatenate(hits)) if hits else np.array([], np.int64)
        k += 1
    result_k = int(depth.max()) if depth.size else 1
    decomposition = None
    if target is not None:
        tgt = linalg.as_vector(target, p)
        if not img.base.contains(tgt):
            raise ValueError("target is outside the derived subalgebra")
        cur = img.base.coords(tgt)
        need = int(depth[int(point_codes(cur[None, :], p)[0])])
        parts = []
        for step in range(need, 1, -1):
            diffs = (cur[None, :] - gen) % p
            codes = point_codes(diffs, p)
            idx = int(np.flatnonzero(depth[codes] == step - 1)[0])
            parts.append(gen[idx] @ img.base.basis % p)
            cur = diffs[idx]
        parts.append(cur @ img.base.basis % p)
        decomposition = parts
    return SumDepthResult(k=result_k, decomposition=decomposition)


@dataclass(frozen=True)
class CoverCertificate:
    """Elements u_1..u_r with L' equal to the union of the Im ad(u_i)."""
    elements: tuple
    size: int
    minimal: bool  # True when found by exhaustive search over smaller sizes


def cover_certificate(L: LieAlgebra, max_size: int = 4,
                      image: ElementSet | None = None,
                      budget: int = DEFAULT_IMAGE_POINTS,
                      search_budget: int = 2_000_000) -> CoverCertificate | None:
    """Small covers of L' by ad-images, when w(L) = L' (None otherwise).

    Candidates are the center-complement lines (their images exhaust w(L)).
    Exhaustive search runs in increasing size while the combination count
    stays within search_budget, so a hit there is genuinely minimal; beyond
    that a greedy cover is returned flagged minimal=False.
    """
    img = image if image is not None else word_image(L, budget=budget)
    if not img.is_full:
        return None
    p = L.p
    lp = img.base
    piv = list(lp.pivots)
    grids: dict[int, np.ndarray] = {}
    masks: list[int] = []
    elems: list[np.ndarray] = []
    for x in _center_complement_lines(L, budget):
        R, _, rk = linalg.rref(L.ad(x).T, p)
        coords = R[:rk, piv]
        if rk not in grids:
            grids[rk] = linalg.coefficient_grid(p, rk)
        codes = point_codes(grids[rk] @ coords % p, p)
        mask = 0
        for c in codes:
            mask |= 1 << int(c)
        masks.append(mask)
        elems.append(x)
    # dedupe and drop dominated candidates; any minimal cover survives this
    order = sorted(range(len(masks)), key=lambda i: (-bin(masks[i]).count("1"), i))
    keep: list[int] = []
    for i in order:
        if any(masks[i] | masks[j] == masks[j] for j in keep):
            continue
        keep.append(i)
    keep.sort()
    masks = [masks[i] for i in keep]
    elems = [elems[i] for i in keep]
    full = (1 << lp.p ** lp.dim) - 1
    exhaustive_ok = True
    for r in range(1, max_size + 1):
        if comb(len(masks), r) > search_budget:
            exhaustive_ok = False
            break
        for combo in combinations(range(len(masks)), r):
            acc = 0
            for i in combo:
                acc |= masks[i]
            if acc == full:
                return CoverCertificate(tuple(elems[i] for i in combo), r, True)
    if exhaustive_ok:
        return None
    covered, chosen = 0, []
    while covered != full and len(chosen) < max_size:
        best = max(range(len(masks)),
                   key=lambda i: (bin(masks[i] | covered).count("1"), -i))
        chosen.append(best)
        covered |= masks[best]
    if covered != full:
        return None
    return CoverCertificate(tuple(elems[i] for i in chosen), len(chosen), False)


def commuting_generating_quad(L: LieAlgebra):
    """Generators u_1..u_4 of L with [u_1, u_2] = 0 = [u_3, u_4], or None.

    Requires dim L/L' = 4. Candidates are lines of the standard complement of
    L'; for class-2 algebras this loses nothing (brackets and generation only
    depend on cosets mod L', and each u_i may be scaled freely), so None is a
    proof of nonexistence there. For higher class the search is the same
    candidate-restricted one and a returned quad is always verified.
    """
    if not L.is_nilpotent():
        raise ValueError("quad search requires a nilpotent algebra")
    p, n = L.p, L.dim
    lp = L.derived_subalgebra()
    if L.dim - lp.dim != 4:
        raise ValueError("quad search requires dim L/L' = 4")
    comp = list(lp.complement_indices)
    pts = projective_points(p, 4)
    amb = np.zeros((pts.shape[0], n), dtype=np.int64)
    amb[:, comp] = pts
    # group commuting candidate pairs by the plane they span (in a class-2
    # algebra commuting is a property of the plane)
    planes: dict[bytes, tuple[int, int, np.ndarray]] = {}
    for a in range(pts.shape[0]):
        prods = amb @ L.ad(amb[a]).T % p  # row b: [amb[a], amb[b]]... sign-free zero test
        zero = ~prods.any(axis=1)
        for b in np.flatnonzero(zero):
            if b <= a:
                continue
            R, _, rk = linalg.rref(pts[[a, int(b)]], p)
            key = R[:rk].tobytes()
            if key not in planes:
                planes[key] = (a, int(b), R[:rk])
    reps = list(planes.values())
    for i in range(len(reps)):
        rows_i = reps[i][2]
        stacked = [np.vstack([rows_i, reps[j][2]]) for j in range(i + 1, len(reps))]
        for off, m4 in enumerate(stacked):
            if linalg.rank(m4, p) == 4:
                j = i + 1 + off
                quad = (amb[reps[i][0]], amb[reps[i][1]],
                        amb[reps[j][0]], amb[reps[j][1]])
                if (L.bracket(quad[0], quad[1]).any()
                        or L.bracket(quad[2], quad[3]).any()
                        or not L.generates(list(quad))):
                    raise AssertionError("quad candidate failed verification")
                return quad
    return None


@dataclass(frozen=True)
class ImageReport:
    """Summary of w(L) inside L'."""
    image_size: int
    derived_size: int
    equals_derived: bool
    sum_depth: int
    witness_missing: tuple | None  # ambient coords of a missing element


def image_report(L: LieAlgebra, budget: int = DEFAULT_IMAGE_POINTS) -> ImageReport:
    img = word_image(L, budget=budget)
    depth = sum_depth(L, image=img, budget=budget)
    witness = None
    if not img.is_full:
        first = int(np.flatnonzero(~img.members)[0])
        vec = code_points(np.array([first]), L.p, img.base.dim)[0] @ img.base.basis % L.p
        witness = tuple(int(v) for v in vec)
    return ImageReport(image_size=img.count,
                       derived_size=int(img.members.size),
                       equals_derived=img.is_full,
                       sum_depth=depth.k,
                       witness_missing=witness)
