"""Exact dense linear algebra over F_p and canonical subspace representations.

Matrices and vectors are numpy int64 arrays with entries reduced to [0, p).
A Subspace is stored as its reduced row echelon basis (zero rows stripped),
which makes equality of subspaces a structural comparison.
"""

from __future__ import annotations

import numpy as np

from .budgets import DEFAULT_ENUM_POINTS, BudgetExceededError
from .gfp import PrimeField


def as_matrix(m, p: int) -> np.ndarray:
    """Copy m into a 2-D int64 array reduced mod p."""
    arr = np.array(m, dtype=np.int64) % p
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={arr.ndim}")
    return arr


def as_vector(v, p: int) -> np.ndarray:
    arr = np.array(v, dtype=np.int64) % p
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got ndim={arr.ndim}")
    return arr


def rref(m, p: int) -> tuple[np.ndarray, tuple[int, ...], int]:
    """Reduced row echelon form of m over F_p.

    Returns (R, pivots, rank) where R has the same shape as m, pivot entries
    are 1 and pivot columns are zero elsewhere.
    """
    R = as_matrix(m, p).copy()
    nrows, ncols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = -1
        for rr in range(r, nrows):
            if R[rr, c]:
                pr = rr
                break
        if pr < 0:
            continue
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        R[r] = R[r] * pow(int(R[r, c]), -1, p) % p
        col = R[:, c].copy()
        col[r] = 0
        R = (R - np.outer(col, R[r])) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return R, tuple(pivots), r


def rank(m, p: int) -> int:
    return rref(m, p)[2]


def inverse(m, p: int) -> np.ndarray:
    """Inverse of a square matrix over F_p; ValueError if singular."""
    M = as_matrix(m, p)
    n, ncols = M.shape
    if n != ncols:
        raise ValueError("inverse requires a square matrix")
    aug = np.hstack([M, np.eye(n, dtype=np.int64)])
    R, _, rk = rref(aug, p)
    if rk < n or not np.array_equal(R[:, :n], np.eye(n, dtype=np.int64)):
        raise ValueError("matrix is singular over F_p")
    return R[:, n:]


class Subspace:
    """A subspace of F_p^n in canonical (RREF basis) form.

    Two Subspace objects are equal iff they are the same subspace of the same
    ambient space, because the RREF basis of a subspace is unique.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: PrimeField, ambient_dim: int, basis: np.ndarray,
                 pivots: tuple[int, ...]):
        # internal: callers go through span()/nullspace(); basis must already
        # be RREF with zero rows stripped and pivots matching
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots
        basis.flags.writeable = False

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def complement_indices(self) -> tuple[int, ...]:
        """Standard coordinates not used as pivots; they span a complement."""
        pivset = set(self.pivots)
        return tuple(i for i in range(self.ambient_dim) if i not in pivset)

    def __repr__(self) -> str:
        return f"<Subspace dim {self.dim} of F_{self.p}^{self.ambient_dim}>"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field
                and self.ambient_dim == other.ambient_dim
                and self.pivots == other.pivots
                and np.array_equal(self.basis, other.basis))

    def __hash__(self) -> int:
        return hash((self.field, self.ambient_dim, self.pivots,
                     self.basis.tobytes()))

    def contains(self, v) -> bool:
        w = as_vector(v, self.p)
        if w.shape[0] != self.ambient_dim:
            raise ValueError("vector has wrong ambient dimension")
        if self.dim == 0:
            return not w.any()
        # RREF basis: membership iff reconstruction from pivot coords matches
        return np.array_equal(w[list(self.pivots)] @ self.basis % self.p, w)

    def coords(self, v) -> np.ndarray:
        """Coordinates of v in the canonical basis; ValueError if v is outside."""
        w = as_vector(v, self.p)
        if not self.contains(w):
            raise ValueError("vector is not in the subspace")
        return w[list(self.pivots)]

    def is_subspace_of(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim or self.field != other.field:
            raise ValueError("ambient spaces differ")
        return all(other.contains(row) for row in self.basis)

    def enumerate(self, budget: int = DEFAULT_ENUM_POINTS) -> np.ndarray:
        """All p^dim vectors of the subspace, as a (p^dim, ambient_dim) array.

        Row order is fixed: coefficient tuples in lexicographic order with the
        first basis coefficient slowest.
        """
        count = self.p ** self.dim
        if count > budget:
            raise BudgetExceededError(
                f"enumeration too large: {self.p}^{self.dim} points exceed budget {budget}")
        if self.dim == 0:
            return np.zeros((1, self.ambient_dim), dtype=np.int64)
        grid = coefficient_grid(self.p, self.dim)
        return grid @ self.basis % self.p


def coefficient_grid(p: int, r: int) -> np.ndarray:
    """All p^r coefficient rows over F_p, lexicographic, first coordinate slowest."""
    if r == 0:
        return np.zeros((1, 0), dtype=np.int64)
    codes = np.arange(p ** r, dtype=np.int64)
    cols = [(codes // p ** (r - 1 - j)) % p for j in range(r)]
    return np.stack(cols, axis=1)


def span(vectors, ambient_dim: int, field: PrimeField) -> Subspace:
    """Canonical subspace spanned by the given vectors (possibly none)."""
    rows = [as_vector(v, field.p) for v in vectors]
    if not rows:
        return Subspace(field, ambient_dim,
                        np.zeros((0, ambient_dim), dtype=np.int64), ())
    M = np.stack(rows)
    if M.shape[1] != ambient_dim:
        raise ValueError("vector length does not match ambient dimension")
    R, piv, rk = rref(M, field.p)
    return Subspace(field, ambient_dim, R[:rk].copy(), piv)


def subspace_sum(A: Subspace, B: Subspace) -> Subspace:
    if A.ambient_dim != B.ambient_dim or A.field != B.field:
        raise ValueError("ambient spaces differ")
    return span(list(A.basis) + list(B.basis), A.ambient_dim, A.field)


def subspace_intersect(A: Subspace, B: Subspace) -> Subspace:
    """Intersection via the Zassenhaus block construction."""
    if A.ambient_dim != B.ambient_dim or A.field != B.field:
        raise ValueError("ambient spaces differ")
    n, p = A.ambient_dim, A.p
    if A.dim == 0 or B.dim == 0:
        return span([], n, A.field)
    top = np.hstack([A.basis, A.basis])
    bot = np.hstack([B.basis, np.zeros_like(B.basis)])
    R, _, rk = rref(np.vstack([top, bot]), p)
    rows = [R[i, n:] for i in range(rk) if not R[i, :n].any()]
    return span(rows, n, A.field)


def nullspace(m, p: int) -> Subspace:
    """Right kernel {x : m @ x = 0} as a canonical subspace."""
    M = as_matrix(m, p)
    field = PrimeField(p)
    ncols = M.shape[1]
    R, piv, rk = rref(M, p)
    free = [c for c in range(ncols) if c not in piv]
    rows = []
    for f in free:
        v = np.zeros(ncols, dtype=np.int64)
        v[f] = 1
        for r_i, c in enumerate(piv):
            v[c] = -R[r_i, f] % p
        rows.append(v)
    return span(rows, ncols, field)


def solve(m, v, p: int) -> np.ndarray | None:
    """One solution x of m @ x = v, or None when the system is inconsistent."""
    M = as_matrix(m, p)
    b = as_vector(v, p)
    aug = np.hstack([M, b[:, None]])
    R, piv, rk = rref(aug, p)
    if M.shape[1] in piv:
        return None
    x = np.zeros(M.shape[1], dtype=np.int64)
    for r_i, c in enumerate(piv):
        x[c] = R[r_i, -1]
    return x
