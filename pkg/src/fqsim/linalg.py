"""Dense exact linear algebra over GF(q).

Vectors are row vectors (tuples of integer-encoded elements); a matrix acts
on the right, ``v -> v @ M``.  Subspaces are kept in reduced row echelon
form so that equal subspaces compare and hash equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import AmbientMismatch, BadDimensions, InconsistentMap, NotNested, SingularS
from .field import FieldSpec

Row = tuple[int, ...]


# -- low level row operations ---------------------------------------------------

def echelon(F: FieldSpec, rows: Iterable[Sequence[int]], npiv: int | None = None):
    """Gauss-Jordan elimination pivoting only in the first *npiv* columns.

    Row operations act on the full row width, so trailing columns can carry
    an augmented block.  Returns ``(rows, pivots)``: the first
    ``len(pivots)`` rows are the pivot rows, the remainder are zero in the
    pivot range.
    """
    a = [list(r) for r in rows]
    if not a:
        return a, []
    if npiv is None:
        npiv = len(a[0])
    m = len(a)
    pivots = []
    r = 0
    for c in range(npiv):
        if r == m:
            break
        i = r
        while i < m and a[i][c] == 0:
            i += 1
        if i == m:
            continue
        a[r], a[i] = a[i], a[r]
        if a[r][c] != 1:
            a[r] = F.scale(F.inv(a[r][c]), a[r])
        pr = a[r]
        for j in range(m):
            if j != r:
                x = a[j][c]
                if x:
                    a[j] = F.axpy(F.neg(x), pr, a[j])
        pivots.append(c)
        r += 1
    return a, pivots


def left_kernel(F: FieldSpec, rows: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Basis (in RREF) of ``{c : c @ rows = 0}``."""
    m = len(rows)
    if m == 0:
        return []
    aug = [list(r) + [1 if j == i else 0 for j in range(m)] for i, r in enumerate(rows)]
    a, piv = echelon(F, aug, ncols)
    kern = [r[ncols:] for r in a[len(piv):]]
    kern, kp = echelon(F, kern)
    return kern[: len(kp)]


def vec_mat(F: FieldSpec, v: Sequence[int], M: Sequence[Sequence[int]], ncols: int) -> list[int]:
    out = [0] * ncols
    for c, row in zip(v, M):
        if c:
            out = F.axpy(c, row, out)
    return out


def mat_mul(F: FieldSpec, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    return [vec_mat(F, r, B, ncols) for r in A]


def residual(F: FieldSpec, v: Sequence[int], basis: Sequence[Sequence[int]], pivots: Sequence[int]) -> list[int]:
    """Reduce v modulo an RREF basis; zero iff v lies in its span."""
    r = list(v)
    for row, p in zip(basis, pivots):
        c = r[p]
        if c:
            r = F.axpy(F.neg(c), row, r)
    return r


# -- matrices -----------------------------------------------------------------------

@dataclass(frozen=True)
class Matrix:
    field: FieldSpec
    rows: tuple[Row, ...]
    ncols: int

    @classmethod
    def from_rows(cls, F: FieldSpec, rows: Iterable[Sequence[int]], ncols: int | None = None) -> Matrix:
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise BadDimensions("ragged matrix")
        if any(not 0 <= x < F.q for r in rows for x in r):
            raise ValueError(f"matrix entry outside {F}")
        return cls(F, rows, ncols)

    @classmethod
    def identity(cls, F: FieldSpec, n: int) -> Matrix:
        return cls(F, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, F: FieldSpec, m: int, n: int) -> Matrix:
        return cls(F, tuple((0,) * n for _ in range(m)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def entries(self) -> list[int]:
        return [x for r in self.rows for x in r]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise BadDimensions("shape mismatch in product")
        F = self.field
        return Matrix(F, tuple(tuple(r) for r in mat_mul(F, self.rows, other.rows, other.ncols)), other.ncols)

    def transpose(self) -> Matrix:
        return Matrix(self.field, tuple(zip(*self.rows)) if self.rows else tuple(() for _ in range(self.ncols)), self.nrows)

    def inverse(self) -> Matrix:
        """Inverse of a square matrix; raises SingularS if singular."""
        n = self.nrows
        if not self.is_square():
            raise BadDimensions("inverse of a non-square matrix")
        aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self.rows)]
        a, piv = echelon(self.field, aug, n)
        if len(piv) != n:
            raise SingularS("matrix is singular")
        return Matrix(self.field, tuple(tuple(r[n:]) for r in a), n)

    def rank(self) -> int:
        return len(echelon(self.field, self.rows, self.ncols)[1])


def rref(M: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form (same shape, zero rows last) and rank."""
    a, piv = echelon(M.field, M.rows, M.ncols)
    return Matrix(M.field, tuple(tuple(r) for r in a), M.ncols), len(piv)


# -- subspaces ----------------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """Subspace of GF(q)^n held by its canonical RREF basis."""

    field: FieldSpec
    n: int
    basis: tuple[Row, ...]
    pivots: tuple[int, ...] = dc_field(compare=False, default=())

    @classmethod
    def span(cls, F: FieldSpec, n: int, vectors: Iterable[Sequence[int]]) -> Subspace:
        vecs = [list(v) for v in vectors]
        if any(len(v) != n for v in vecs):
            raise AmbientMismatch(f"vectors are not in GF({F.q})^{n}")
        a, piv = echelon(F, vecs, n)
        return cls(F, n, tuple(tuple(r) for r in a[: len(piv)]), tuple(piv))

    @classmethod
    def _from_rref(cls, F: FieldSpec, n: int, rows: Sequence[Sequence[int]], pivots: Sequence[int]) -> Subspace:
        return cls(F, n, tuple(tuple(r) for r in rows), tuple(pivots))

    @classmethod
    def zero(cls, F: FieldSpec, n: int) -> Subspace:
        return cls(F, n, (), ())

    @classmethod
    def full(cls, F: FieldSpec, n: int) -> Subspace:
        return _full_space(F, n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> Matrix:
        return Matrix(self.field, self.basis, self.n)

    def residual(self, v: Sequence[int]) -> list[int]:
        return residual(self.field, v, self.basis, self.pivots)

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.residual(v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def coordinates(self, v: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of v in the RREF basis; v must lie in the subspace."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def issubspace(self, other: Subspace) -> bool:
        _compatible(self, other)
        return all(other.contains(r) for r in self.basis)

    def __le__(self, other: Subspace) -> bool:
        return self.issubspace(other)

    def vectors(self):
        """Every vector of the subspace (q^dim of them)."""
        F = self.field
        for coeffs in product(range(F.q), repeat=self.dim):
            yield tuple(vec_mat(F, coeffs, self.basis, self.n))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.basis]


@lru_cache(maxsize=None)
def _full_space(F: FieldSpec, n: int) -> Subspace:
    return Subspace(F, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), tuple(range(n)))


def _compatible(A: Subspace, B: Subspace):
    if A.n != B.n or A.field != B.field:
        raise AmbientMismatch("subspaces live in different ambient spaces")


def subspace_sum(A: Subspace, B: Subspace) -> Subspace:
    _compatible(A, B)
    return Subspace.span(A.field, A.n, A.basis + B.basis)


def subspace_intersection(A: Subspace, B: Subspace) -> Subspace:
    """A ∩ B from the left kernel of the stacked bases."""
    _compatible(A, B)
    F = A.field
    if not A.dim or not B.dim:
        return Subspace.zero(F, A.n)
    kern = left_kernel(F, A.basis + B.basis, A.n)
    return Subspace.span(F, A.n, (vec_mat(F, c[: A.dim], A.basis, A.n) for c in kern))


# -- quotients ----------------------------------------------------------------------

class QuotientCoordinates:
    """Coordinates on W/U for nested subspaces U ⊆ W.

    ``complement`` holds vectors of W that extend the basis of U to a basis
    of W; ``project`` sends w in W to its coordinate vector in W/U with
    respect to the classes of the complement vectors.
    """

    def __init__(self, U: Subspace, W: Subspace):
        _compatible(U, W)
        if not U.issubspace(W):
            raise NotNested("U is not contained in W")
        self.U = U
        self.W = W
        F = U.field
        res = [U.residual(w) for w in W.basis]
        a, piv = echelon(F, res, W.n)
        self.complement: tuple[Row, ...] = tuple(tuple(r) for r in a[: len(piv)])
        self.pivots: tuple[int, ...] = tuple(piv)

    @property
    def dim(self) -> int:
        return len(self.complement)

    def project(self, w: Sequence[int]) -> tuple[int, ...]:
        if not self.W.contains(w):
            raise ValueError("vector is not in W")
        return self.project_unchecked(w)

    def project_unchecked(self, w: Sequence[int]) -> tuple[int, ...]:
        r = self.U.residual(w)
        return tuple(r[p] for p in self.pivots)

    def lift(self, coords: Sequence[int]) -> tuple[int, ...]:
        """The representative of a class built from the complement vectors."""
        return tuple(vec_mat(self.U.field, coords, self.complement, self.W.n))


def quotient_coordinates(U: Subspace, W: Subspace) -> QuotientCoordinates:
    return QuotientCoordinates(U, W)


# -- enumeration --------------------------------------------------------------------

def enumerate_subspaces(n: int, k: int, F: FieldSpec):
    """All k-dimensional subspaces of GF(q)^n, generated by RREF shape.

    Order: pivot column sets in lexicographic order, then free entries in
    lexicographic order (row-major over free positions).
    """
    if not 0 <= k <= n:
        raise BadDimensions(f"need 0 <= k <= n, got k={k}, n={n}")
    for pivots in combinations(range(n), k):
        pset = set(pivots)
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in pset]
        for vals in product(range(F.q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), v in zip(free, vals):
                rows[i][j] = v
            yield Subspace._from_rref(F, n, rows, pivots)


# -- partial linear maps ------------------------------------------------------------

@dataclass(frozen=True)
class PartialLinearMap:
    """Linear map T: W -> V = GF(q)^n.

    ``action[i]`` is the image of ``domain.basis[i]``.  Both are canonical,
    so dataclass equality is structural equality of maps.
    """

    field: FieldSpec
    n: int
    domain: Subspace
    action: tuple[Row, ...]

    @classmethod
    def from_vectors(cls, F: FieldSpec, n: int, domain_vectors: Sequence[Sequence[int]],
                     images: Sequence[Sequence[int]]) -> PartialLinearMap:
        """Build the map sending each domain vector to its image.

        The domain vectors are reduced to RREF and the images transformed
        the same way.  Dependent domain vectors are allowed only when the
        images satisfy the same relations.
        """
        if len(domain_vectors) != len(images):
            raise BadDimensions("need one image per domain vector")
        if any(len(v) != n for v in domain_vectors) or any(len(v) != n for v in images):
            raise AmbientMismatch(f"vectors are not in GF({F.q})^{n}")
        if any(not 0 <= x < F.q for v in list(domain_vectors) + list(images) for x in v):
            raise ValueError(f"entry outside {F}")
        return cls._canonical(F, n, domain_vectors, images)

    @classmethod
    def _canonical(cls, F: FieldSpec, n: int, domain_vectors, images) -> PartialLinearMap:
        aug = [list(d) + list(y) for d, y in zip(domain_vectors, images)]
        a, piv = echelon(F, aug, n)
        if any(any(r) for r in a[len(piv):]):
            raise InconsistentMap("images violate a linear relation among the domain vectors")
        k = len(piv)
        dom = Subspace._from_rref(F, n, [r[:n] for r in a[:k]], piv)
        return cls(F, n, dom, tuple(tuple(r[n:]) for r in a[:k]))

    @property
    def k(self) -> int:
        return self.domain.dim

    def __call__(self, w: Sequence[int]) -> tuple[int, ...]:
        return tuple(vec_mat(self.field, self.domain.coordinates(w), self.action, self.n))

    def restrict(self, S: Subspace) -> PartialLinearMap:
        """T restricted to a subspace S of its domain."""
        if not S.issubspace(self.domain):
            raise NotNested("restriction target is not inside the domain")
        F = self.field
        imgs = [vec_mat(F, [r[p] for p in self.domain.pivots], self.action, self.n) for r in S.basis]
        return PartialLinearMap(F, self.n, S, tuple(tuple(v) for v in imgs))

    def key(self) -> tuple:
        return (self.domain.basis, self.action)

    def to_json(self) -> dict:
        return {
            "q": self.field.q,
            "n": self.n,
            "domain_basis": [list(r) for r in self.domain.basis],
            "images": [list(r) for r in self.action],
        }


def preimage(T: PartialLinearMap, S: Subspace) -> Subspace:
    """{w in domain(T) : T w in S}."""
    if T.n != S.n or T.field != S.field:
        raise AmbientMismatch("map and subspace live in different spaces")
    F = T.field
    res = [residual(F, y, S.basis, S.pivots) for y in T.action]
    kern = left_kernel(F, res, T.n)
    return Subspace.span(F, T.n, mat_mul(F, kern, T.domain.basis, T.n))
