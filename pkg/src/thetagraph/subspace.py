"""Linear algebra over F_q: matrices, RREF, subspaces and q-binomials.

Vectors and matrix rows are tuples of field indices.  A subspace is stored
by the reduced row echelon form of any spanning set, so two subspaces are
equal exactly when their bases are identical.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .gf import FieldSpec

Row = tuple[int, ...]


def _rref_rows(rows, ncols: int, F: FieldSpec):
    """Return (rref rows without zero rows, pivot columns)."""
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(mat)
    add, mul = F.add, F.mul
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        lead_inv = F.inv(mat[r][c])
        if lead_inv != 1:
            mat[r] = [mul(lead_inv, x) for x in mat[r]]
        prow = mat[r]
        for i in range(nrows):
            if i != r and mat[i][c]:
                f = F.neg(mat[i][c])
                mat[i] = [add(x, mul(f, y)) for x, y in zip(mat[i], prow)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in mat[:r]], pivots


@dataclass(frozen=True)
class Matrix:
    """Dense matrix over F_q in row-major order."""

    field: FieldSpec
    rows: tuple[Row, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    @classmethod
    def from_rows(cls, F: FieldSpec, rows) -> "Matrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix")
        for r in rows:
            for x in r:
                if not 0 <= x < F.q:
                    raise ValueError(f"entry {x} not in F_{F.q}")
        return cls(F, rows)

    @classmethod
    def zeros(cls, F: FieldSpec, nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        return cls(F, tuple((0,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, F: FieldSpec, n: int) -> "Matrix":
        return cls(F, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def transpose(self) -> "Matrix":
        return Matrix(self.field, tuple(zip(*self.rows)))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise ValueError("matrices over different fields")
        F = self.field
        cols = list(zip(*other.rows))
        if self.shape[1] != len(other.rows):
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for r in self.rows:
            out.append(tuple(_dot(F, r, c) for c in cols))
        return Matrix(F, tuple(out))

    def apply(self, vec: Row) -> Row:
        """The product M @ vec for a column vector given as a tuple."""
        return tuple(_dot(self.field, r, vec) for r in self.rows)

    def conjugate(self, sigma) -> "Matrix":
        """Apply a field automorphism (index permutation) entrywise."""
        return Matrix(self.field, tuple(tuple(sigma[x] for x in r) for r in self.rows))

    def rank(self) -> int:
        return rref(self)[1]

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def is_invertible(self) -> bool:
        n, m = self.shape
        return n == m and self.rank() == n

    def inverse(self) -> "Matrix":
        n, m = self.shape
        if n != m:
            raise ValueError("only square matrices can be inverted")
        F = self.field
        aug = [r + tuple(int(i == j) for j in range(n)) for i, r in enumerate(self.rows)]
        red, pivots = _rref_rows(aug, 2 * n, F)
        if pivots[:n] != list(range(n)) or len(red) < n:
            raise ZeroDivisionError("matrix is singular")
        return Matrix(F, tuple(r[n:] for r in red))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def _dot(F: FieldSpec, a, b) -> int:
    s = 0
    for x, y in zip(a, b):
        if x and y:
            s = F.add(s, F.mul(x, y))
    return s


def rref(M: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form of ``M`` (same shape) and its rank."""
    nrows, ncols = M.shape
    red, pivots = _rref_rows(M.rows, ncols, M.field)
    pad = tuple((0,) * ncols for _ in range(nrows - len(red)))
    return Matrix(M.field, tuple(red) + pad), len(pivots)


@dataclass(frozen=True)
class Subspace:
    """Subspace of F_q^n stored by its canonical RREF basis."""

    field: FieldSpec
    n: int
    basis: tuple[Row, ...]

    @classmethod
    def span(cls, F: FieldSpec, n: int, vectors) -> "Subspace":
        vecs = [tuple(int(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != n:
                raise ValueError(f"vector {v} is not in F^{n}")
        red, _ = _rref_rows(vecs, n, F)
        return cls(F, n, tuple(red))

    @classmethod
    def zero(cls, F: FieldSpec, n: int) -> "Subspace":
        return cls(F, n, ())

    @classmethod
    def full(cls, F: FieldSpec, n: int) -> "Subspace":
        return cls(F, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.basis)

    def reduce(self, vec: Row) -> Row:
        """Remainder of ``vec`` after clearing this basis' pivot columns."""
        F = self.field
        v = list(vec)
        for r, c in zip(self.basis, self.pivots):
            if v[c]:
                f = F.neg(v[c])
                v = [F.add(x, F.mul(f, y)) for x, y in zip(v, r)]
        return tuple(v)

    def __contains__(self, vec) -> bool:
        return not any(self.reduce(tuple(vec)))

    def vectors(self):
        """Iterate over all q**dim vectors of the subspace."""
        F = self.field
        for coeffs in itertools.product(range(F.q), repeat=self.dim):
            v = [0] * self.n
            for c, r in zip(coeffs, self.basis):
                if c:
                    v = [F.add(x, F.mul(c, y)) for x, y in zip(v, r)]
            yield tuple(v)

    def map(self, A: Matrix, sigma=None) -> "Subspace":
        """Image of the subspace under x -> A x^sigma."""
        vecs = self.basis
        if sigma is not None:
            vecs = [tuple(sigma[x] for x in v) for v in vecs]
        return Subspace.span(self.field, self.n, [A.apply(v) for v in vecs])

    def as_matrix(self) -> Matrix:
        return Matrix(self.field, self.basis)

    def to_json(self) -> dict:
        return {"n": self.n, "basis": [list(r) for r in self.basis]}

    @classmethod
    def from_json(cls, F: FieldSpec, data: dict) -> "Subspace":
        return cls.span(F, int(data["n"]), data["basis"])

    def __repr__(self):
        return f"Subspace(n={self.n}, basis={[list(r) for r in self.basis]})"


def _same_ambient(A: Subspace, B: Subspace):
    if A.n != B.n or A.field != B.field:
        raise ValueError("subspaces live in different ambient spaces")


def contains(A: Subspace, B: Subspace) -> bool:
    """True when B is a subspace of A."""
    _same_ambient(A, B)
    if B.dim > A.dim:
        return False
    return all(not any(A.reduce(r)) for r in B.basis)


def subspace_sum(A: Subspace, B: Subspace) -> Subspace:
    _same_ambient(A, B)
    return Subspace.span(A.field, A.n, A.basis + B.basis)


def intersect(A: Subspace, B: Subspace) -> Subspace:
    """Zassenhaus: reduce [[A | A], [B | 0]]; rows with zero left half span A ∩ B."""
    _same_ambient(A, B)
    n = A.n
    zero = (0,) * n
    rows = [a + a for a in A.basis] + [b + zero for b in B.basis]
    red, _ = _rref_rows(rows, 2 * n, A.field)
    inter = [r[n:] for r in red if not any(r[:n])]
    return Subspace.span(A.field, n, inter)


def image(M: Matrix) -> Subspace:
    """Column space of ``M``."""
    return Subspace.span(M.field, M.shape[0], M.transpose().rows)


def kernel(M: Matrix) -> Subspace:
    """Null space of x -> M x."""
    F = M.field
    ncols = M.shape[1]
    red, pivots = _rref_rows(M.rows, ncols, F)
    free = [c for c in range(ncols) if c not in pivots]
    vecs = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for r, c in zip(red, pivots):
            v[c] = F.neg(r[f])
        vecs.append(tuple(v))
    return Subspace.span(F, ncols, vecs)


def enumerate_subspaces(n: int, k: int, F: FieldSpec) -> list[Subspace]:
    """All k-dimensional subspaces of F^n, each exactly once.

    Order: pivot patterns in lexicographic order of column tuples; within a
    pattern, free entries (row-major) run as an odometer whose last entry
    turns fastest.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    out = []
    for pivots in itertools.combinations(range(n), k):
        pset = set(pivots)
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in pset]
        for vals in itertools.product(range(F.q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), x in zip(free, vals):
                rows[i][j] = x
            out.append(Subspace(F, n, tuple(tuple(r) for r in rows)))
    return out


def all_subspaces(n: int, F: FieldSpec) -> list[Subspace]:
    """Every subspace of F^n, by dimension and then enumeration order."""
    return [S for k in range(n + 1) for S in enumerate_subspaces(n, k, F)]


def q_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n (exact integer)."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q**n - q**i
        den *= q**k - q**i
    value, rem = divmod(num, den)
    assert rem == 0
    return value
