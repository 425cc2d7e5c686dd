"""Finite-dimensional Lie algebras over F_p as structure-constant tensors.

The tensor convention is [e_i, e_j] = sum_k sc[i][j][k] e_k, with antisymmetry
stored redundantly (both orders present) and checked by validate(). All
derived objects (center, lower central series, quotients, stem parts) are
computed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .gfp import PrimeField
from .linalg import Subspace, span, subspace_sum, subspace_intersect


class LieAlgebra:
    """An algebra with a fixed basis; immutable once constructed."""

    __slots__ = ("field", "sc", "name", "_memo")

    def __init__(self, field: PrimeField, sc, name: str | None = None):
        tensor = np.array(sc, dtype=np.int64) % field.p
        if tensor.ndim != 3 or len(set(tensor.shape)) > 1:
            raise ValueError("structure tensor must have shape (n, n, n)")
        tensor.flags.writeable = False
        self.field = field
        self.sc = tensor
        self.name = name or f"algebra(dim {tensor.shape[0]}, p {field.p})"
        self._memo: dict = {}

    @classmethod
    def from_brackets(cls, field: PrimeField, dim: int, brackets,
                      name: str | None = None) -> "LieAlgebra":
        """Build from a sparse table {(i, j): {k: coeff}} with i < j.

        Unlisted pairs are zero brackets; the antisymmetric counterpart of
        every listed pair is filled in automatically.
        """
        sc = np.zeros((dim, dim, dim), dtype=np.int64)
        for (i, j), row in brackets.items():
            if not (0 <= i < j < dim):
                raise ValueError(f"bracket pair ({i}, {j}) must satisfy 0 <= i < j < dim")
            for k, coeff in row.items():
                if not (0 <= k < dim):
                    raise ValueError(f"bracket target index {k} out of range")
                sc[i, j, k] = coeff % field.p
                sc[j, i, k] = -coeff % field.p
        return cls(field, sc, name=name)

    @property
    def dim(self) -> int:
        return self.sc.shape[0]

    @property
    def p(self) -> int:
        return self.field.p

    def __repr__(self) -> str:
        return f"<LieAlgebra {self.name!r}: dim {self.dim} over F_{self.p}>"

    def bracket(self, x, y) -> np.ndarray:
        x = linalg.as_vector(x, self.p)
        y = linalg.as_vector(y, self.p)
        return np.einsum("i,j,ijk->k", x, y, self.sc) % self.p

    def ad(self, x) -> np.ndarray:
        """Matrix of ad x, acting on column vectors: ad(x) @ y = [x, y]."""
        x = linalg.as_vector(x, self.p)
        return (np.einsum("i,ijk->jk", x, self.sc) % self.p).T

    def validate(self) -> list[str]:
        """All antisymmetry and Jacobi violations, as human-readable strings.

        An empty list means the tensor defines a Lie algebra (p odd, so
        antisymmetry already gives [x, x] = 0).
        """
        p, sc = self.p, self.sc
        problems: list[str] = []
        anti = (sc + sc.transpose(1, 0, 2)) % p
        for i, j in sorted({(min(i, j), max(i, j))
                            for i, j in np.argwhere(anti.any(axis=2))}):
            problems.append(f"antisymmetry violated at basis pair (i={i}, j={j})")
        # [[e_i,e_j],e_l] has k-component sum_m sc[i,j,m] sc[m,l,k]
        t = np.einsum("ijm,mlk->ijlk", sc, sc)
        jac = (t + t.transpose(1, 2, 0, 3) + t.transpose(2, 0, 1, 3)) % p
        bad = np.argwhere(jac.any(axis=3))
        seen = sorted({tuple(sorted(row)) for row in bad if len(set(row)) == 3})
        for i, j, l in seen:
            problems.append(f"Jacobi violated at basis triple (i={i}, j={j}, l={l})")
        # with broken antisymmetry the cyclic sum can fail on repeated indices
        for row in bad:
            if len(set(row)) < 3 and not problems:
                problems.append(
                    f"Jacobi violated at basis triple {tuple(int(v) for v in row)}")
                break
        return problems

    # -- memoized structural invariants ------------------------------------

    def derived_subalgebra(self) -> Subspace:
        if "derived" not in self._memo:
            iu, ju = np.triu_indices(self.dim, k=1)
            self._memo["derived"] = span(self.sc[iu, ju], self.dim, self.field)
        return self._memo["derived"]

    def lower_central_series(self) -> tuple[Subspace, ...]:
        """L = L^0 >= L^1 = [L, L] >= L^2 = [L, L^1] >= ... until stable.

        Ends with the zero subspace exactly when L is nilpotent; otherwise
        ends at the first repeated term.
        """
        if "lcs" not in self._memo:
            full = span(np.eye(self.dim, dtype=np.int64), self.dim, self.field)
            terms = [full]
            while True:
                nxt = bracket_span(self, full, terms[-1])
                if nxt.dim == terms[-1].dim:
                    break
                terms.append(nxt)
                if nxt.dim == 0:
                    break
            self._memo["lcs"] = tuple(terms)
        return self._memo["lcs"]

    def is_nilpotent(self) -> bool:
        return self.lower_central_series()[-1].dim == 0

    def nilpotency_class(self) -> int | None:
        """Smallest c with L^c = 0, or None when L is not nilpotent."""
        if not self.is_nilpotent():
            return None
        return len(self.lower_central_series()) - 1

    def center(self) -> Subspace:
        if "center" not in self._memo:
            n = self.dim
            # x central iff sum_i x_i sc[i,j,k] = 0 for all (j, k)
            m = self.sc.transpose(1, 2, 0).reshape(n * n, n)
            self._memo["center"] = linalg.nullspace(m, self.p)
        return self._memo["center"]

    def centralizer(self, s: Subspace) -> Subspace:
        """C_L(S) = {x : [x, v] = 0 for all v in S}."""
        n = self.dim
        if s.ambient_dim != n:
            raise ValueError("subspace has wrong ambient dimension")
        if s.dim == 0:
            return span(np.eye(n, dtype=np.int64), n, self.field)
        # for basis row b: [x, b]_k = sum_i x_i (sum_j sc[i,j,k] b_j)
        blocks = [np.einsum("ijk,j->ki", self.sc, row) % self.p for row in s.basis]
        return linalg.nullspace(np.vstack(blocks), self.p)

    def frattini(self) -> Subspace:
        """Frattini subalgebra; equals L' for nilpotent L."""
        if not self.is_nilpotent():
            raise ValueError("Frattini computation implemented for nilpotent algebras only")
        return self.derived_subalgebra()

    def generates(self, vectors) -> bool:
        """Do the vectors generate L as an algebra? (nilpotent L only)"""
        if not self.is_nilpotent():
            raise ValueError("generation test implemented for nilpotent algebras only")
        s = span(vectors, self.dim, self.field)
        return subspace_sum(s, self.derived_subalgebra()).dim == self.dim


def bracket_span(L: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    """[A, B] = span of brackets of basis pairs (bilinearity makes this exact)."""
    if a.dim == 0 or b.dim == 0:
        return span([], L.dim, L.field)
    prods = np.einsum("ai,bj,ijk->abk", a.basis, b.basis, L.sc) % L.p
    return span(prods.reshape(-1, L.dim), L.dim, L.field)


def is_ideal(L: LieAlgebra, s: Subspace) -> bool:
    if s.dim == 0:
        return True
    return bracket_span(L, span(np.eye(L.dim, dtype=np.int64), L.dim, L.field),
                        s).is_subspace_of(s)


def quotient(L: LieAlgebra, ideal: Subspace) -> tuple[LieAlgebra, np.ndarray]:
    """Quotient L/I with the coordinate projection.

    Returns (Q, proj) where proj has shape (dim Q, dim L) and proj @ v gives
    the quotient coordinates of v's class. The quotient basis is the classes
    of the standard basis vectors at I's non-pivot coordinates.
    """
    if not is_ideal(L, ideal):
        raise ValueError("cannot quotient: subspace is not an ideal")
    p, n = L.p, L.dim
    comp = ideal.complement_indices
    q = len(comp)
    proj = np.zeros((q, n), dtype=np.int64)
    for a, cidx in enumerate(comp):
        proj[a, cidx] = 1
    for r, pc in enumerate(ideal.pivots):
        proj[:, pc] = -ideal.basis[r, list(comp)] % p
    sub = L.sc[np.ix_(comp, comp)]  # (q, q, n) brackets of coset representatives
    sc_q = np.einsum("abk,mk->abm", sub, proj) % p
    Q = LieAlgebra(L.field, sc_q, name=f"{L.name}/I")
    return Q, proj


def change_basis(L: LieAlgebra, new_basis) -> LieAlgebra:
    """Rewrite L in a new basis given as the rows of an invertible matrix.

    Row a of new_basis is the a-th new basis vector in old coordinates.
    """
    p = L.p
    T = linalg.as_matrix(new_basis, p)
    if T.shape != (L.dim, L.dim):
        raise ValueError("basis matrix must be square of the algebra's dimension")
    Tinv = linalg.inverse(T, p)  # raises if singular
    sc_new = np.einsum("ai,bj,ijk,km->abm", T, T, L.sc, Tinv) % p
    return LieAlgebra(L.field, sc_new, name=f"{L.name}@basis")


def direct_sum(L1: LieAlgebra, L2: LieAlgebra) -> LieAlgebra:
    if L1.field != L2.field:
        raise ValueError("direct sum requires the same field")
    n1, n2 = L1.dim, L2.dim
    sc = np.zeros((n1 + n2,) * 3, dtype=np.int64)
    sc[:n1, :n1, :n1] = L1.sc
    sc[n1:, n1:, n1:] = L2.sc
    return LieAlgebra(L1.field, sc, name=f"{L1.name}+{L2.name}")


def central_product(L1: LieAlgebra, L2: LieAlgebra, glue1: Subspace,
                    glue2: Subspace, iso=None) -> LieAlgebra:
    """Central product: direct sum modulo the graph of an isomorphism glue1 -> glue2.

    Both glued subspaces must be central and of equal dimension; iso is a
    d x d invertible matrix sending glue1's canonical basis to glue2
    coordinates (identity by default).
    """
    if L1.field != L2.field:
        raise ValueError("central product requires the same field")
    p = L1.p
    if glue1.dim != glue2.dim:
        raise ValueError("glued subspaces must have equal dimension")
    if not glue1.is_subspace_of(L1.center()):
        raise ValueError("glued subspace of the first factor is not central")
    if not glue2.is_subspace_of(L2.center()):
        raise ValueError("glued subspace of the second factor is not central")
    d = glue1.dim
    iso_m = np.eye(d, dtype=np.int64) if iso is None else linalg.as_matrix(iso, p)
    if iso_m.shape != (d, d):
        raise ValueError("iso must be square of the glue dimension")
    linalg.inverse(iso_m, p)  # invertibility check
    big = direct_sum(L1, L2)
    image_rows = iso_m @ glue2.basis % p if d else np.zeros((0, L2.dim), np.int64)
    graph = [np.concatenate([g1, -img % p])
             for g1, img in zip(glue1.basis, image_rows)]
    ideal = span(graph, big.dim, big.field)
    Q, _ = quotient(big, ideal)
    Q.name = f"{L1.name}*{L2.name}"
    return Q


def stem_reduce(L: LieAlgebra) -> tuple[LieAlgebra, int]:
    """Split a nilpotent L as (stem part) + (abelian part).

    Returns (S, a) with L isomorphic to the direct sum of S and an abelian
    algebra of dimension a, where Z(S) <= S' (S is stem). S carries the
    basis (greedy generators, then the canonical basis of L').
    """
    if not L.is_nilpotent():
        raise ValueError("stem reduction requires a nilpotent algebra")
    p, n = L.p, L.dim
    z = L.center()
    lp = L.derived_subalgebra()
    w = subspace_intersect(z, lp)
    # abelian complement of Z n L' inside Z
    a_rows: list[np.ndarray] = []
    t = w
    for row in z.basis:
        if not t.contains(row):
            a_rows.append(row)
            t = subspace_sum(t, span([row], n, L.field))
    # generators: extend L' + A to all of L by standard basis vectors
    t = subspace_sum(lp, span(a_rows, n, L.field))
    gens: list[np.ndarray] = []
    eye = np.eye(n, dtype=np.int64)
    for i in range(n):
        if not t.contains(eye[i]):
            gens.append(eye[i])
            t = subspace_sum(t, span([eye[i]], n, L.field))
    rows = gens + list(lp.basis)
    s_dim = len(rows)
    if s_dim + len(a_rows) != n:
        raise AssertionError("stem/abelian split does not fill the algebra")
    if s_dim == 0:
        return LieAlgebra(L.field, np.zeros((0, 0, 0), np.int64),
                          name=f"stem({L.name})"), len(a_rows)
    basis = np.stack(rows)
    prods = np.einsum("ai,bj,ijk->abk", basis, basis, L.sc) % p
    lp_part = prods[..., list(lp.pivots)]
    if not np.array_equal(lp_part @ lp.basis % p, prods):
        raise AssertionError("bracket landed outside the derived subalgebra")
    sc_s = np.zeros((s_dim, s_dim, s_dim), dtype=np.int64)
    sc_s[:, :, len(gens):] = lp_part
    S = LieAlgebra(L.field, sc_s, name=f"stem({L.name})")
    return S, len(a_rows)


@dataclass(frozen=True)
class HeisenbergBasis:
    """Certificate basis x_1, y_1, ..., x_m, y_m, z_1, ..., z_c (rows, old coords).

    In this basis [x_i, y_i] = z_1 and every other basis bracket vanishes.
    """
    m: int
    basis: np.ndarray

    @property
    def extra_central_dim(self) -> int:
        return self.basis.shape[0] - 2 * self.m - 1


def heisenberg_normal_form(L: LieAlgebra) -> HeisenbergBasis | None:
    """Normal form for nilpotent algebras with 1-dimensional derived algebra.

    Such an algebra is a Heisenberg algebra plus an abelian part; this finds
    a certifying basis by symplectic elimination of the induced alternating
    form. Returns None when dim L' != 1 or L is not nilpotent.
    """
    if not L.is_nilpotent():
        return None
    lp = L.derived_subalgebra()
    if lp.dim != 1:
        return None
    p, n = L.p, L.dim
    z_gen = lp.basis[0]
    gram = L.sc[:, :, lp.pivots[0]]  # [e_i, e_j] = gram[i, j] * z_gen
    vecs = [v for v in np.eye(n, dtype=np.int64)]
    pairs: list[tuple[np.ndarray, np.ndarray]] = []
    while True:
        hit = None
        for i in range(len(vecs)):
            for j in range(i + 1, len(vecs)):
                if vecs[i] @ gram @ vecs[j] % p:
                    hit = (i, j)
                    break
            if hit:
                break
        if hit is None:
            break
        i, j = hit
        u = vecs[i]
        val = int(u @ gram @ vecs[j] % p)
        v = vecs[j] * pow(val, -1, p) % p
        rest = [vecs[k] for k in range(len(vecs)) if k not in (i, j)]
        # make the rest orthogonal to the hyperbolic pair (u, v)
        vecs = [(w - (w @ gram @ v % p) * u - (u @ gram @ w % p) * v) % p
                for w in rest]
        pairs.append((u, v))
    m = len(pairs)
    zbasis = [z_gen]
    t = span([z_gen], n, L.field)
    for w in vecs:
        if not t.contains(w):
            zbasis.append(w)
            t = subspace_sum(t, span([w], n, L.field))
    rows = [r for pair in pairs for r in pair] + zbasis
    basis = np.stack(rows)
    # certify: [x_i, y_i] = z_1, all other basis brackets zero
    prods = np.einsum("ai,bj,ijk->abk", basis, basis, L.sc) % p
    want = np.zeros_like(prods)
    for i in range(m):
        want[2 * i, 2 * i + 1] = z_gen
        want[2 * i + 1, 2 * i] = -z_gen % p
    if basis.shape[0] != n or not np.array_equal(prods, want):
        raise AssertionError("symplectic elimination failed to certify")
    return HeisenbergBasis(m=m, basis=basis)


@dataclass(frozen=True)
class CenterDerivedCheck:
    """Codimension of Z(L) n L' inside L', with the class >= 4 sanity flag."""
    codim_in_derived: int
    consistent: bool


def check_z_cap_maximality(L: LieAlgebra) -> CenterDerivedCheck | None:
    """For class >= 4: Z(L) n L' cannot be maximal in L' (codim 1 would be).

    Returns None below class 4; raises for non-nilpotent input.
    """
    cls = L.nilpotency_class()
    if cls is None:
        raise ValueError("check requires a nilpotent algebra")
    if cls < 4:
        return None
    w = subspace_intersect(L.center(), L.derived_subalgebra())
    codim = L.derived_subalgebra().dim - w.dim
    return CenterDerivedCheck(codim_in_derived=codim, consistent=codim != 1)


@dataclass(frozen=True)
class StructureReport:
    name: str
    dim: int
    is_nilpotent: bool
    nilpotency_class: int | None
    lcs_dims: tuple[int, ...]
    derived_dim: int
    center_dim: int
    is_stem: bool
    min_generators: int | None


def structure_report(L: LieAlgebra) -> StructureReport:
    """One-stop summary of the standard structural invariants."""
    if "structure_report" in L._memo:
        return L._memo["structure_report"]
    series = L.lower_central_series()
    nilp = L.is_nilpotent()
    z = L.center()
    lp = L.derived_subalgebra()
    rep = StructureReport(
        name=L.name,
        dim=L.dim,
        is_nilpotent=nilp,
        nilpotency_class=L.nilpotency_class(),
        lcs_dims=tuple(s.dim for s in series),
        derived_dim=lp.dim,
        center_dim=z.dim,
        is_stem=nilp and z.is_subspace_of(lp),
        min_generators=(L.dim - lp.dim) if nilp else None,
    )
    L._memo["structure_report"] = rep
    return rep
