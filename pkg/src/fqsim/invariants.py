"""Similarity invariants of linear maps defined on a subspace of GF(q)^n.

For T: W -> V the subspace chain is W_0 = V, W_1 = W and
W_{i+1} = {w in W_i : T w in W_i}.  It stabilizes at the maximal
T-invariant subspace U.  The successive dimension drops form the partition
of defect dimensions, and together with the invariant factors of T on U
they determine T up to similarity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import AmbientMismatch, BadArguments, InvalidChain, NotSquare, SingularS
from .field import FieldSpec, make_field
from .linalg import (
    Matrix,
    PartialLinearMap,
    Subspace,
    left_kernel,
    mat_mul,
    quotient_coordinates,
    residual,
)
from .poly import Poly, PolyMatrix, parse_poly, smith_normal_form
from .qanalogs import Partition

__all__ = [
    "ChainReport",
    "InvariantFactors",
    "PartialLinearMap",
    "SimilarityLabel",
    "are_similar",
    "conjugate_map",
    "defect_dimensions",
    "invariant_factors",
    "map_from_json",
    "maximal_invariant_subspace",
    "operator_part",
    "similarity_label",
    "simple_part",
    "subspace_chain",
]


class InvariantFactors(tuple):
    """Monic polynomials of degree >= 1, each dividing the next."""

    def __new__(cls, polys: Iterable[Poly] = ()):
        polys = tuple(polys)
        for p in polys:
            if p.degree < 1 or not p.is_monic():
                raise InvalidChain(f"{p} is not a monic nonconstant polynomial")
        for a, b in zip(polys, polys[1:]):
            if a.field != b.field:
                raise InvalidChain("invariant factors over different fields")
            if not (b % a).is_zero():
                raise InvalidChain(f"{a} does not divide {b}")
        return super().__new__(cls, polys)

    @classmethod
    def parse(cls, text: str, F: FieldSpec) -> InvariantFactors:
        """Semicolon-joined polynomials; the empty string means no factors."""
        text = text.strip()
        if not text:
            return cls()
        return cls(parse_poly(t, F) for t in text.split(";"))

    @property
    def degree(self) -> int:
        return sum(p.degree for p in self)

    def __str__(self) -> str:
        return ";".join(str(p) for p in self)

    def __repr__(self) -> str:
        return f"InvariantFactors({str(self)!r})"


@dataclass(frozen=True)
class SimilarityLabel:
    lam: Partition
    inv_factors: InvariantFactors
    n: int

    def __post_init__(self):
        if self.lam.size + self.inv_factors.degree != self.n:
            raise BadArguments(
                f"|lambda| + deg I = {self.lam.size} + {self.inv_factors.degree} != n = {self.n}")

    @property
    def d(self) -> int:
        return self.inv_factors.degree

    @property
    def k(self) -> int:
        """Dimension of the domain of every map in the class."""
        return self.n - (self.lam[0] if self.lam else 0)

    def key(self) -> str:
        return f"{self.lam}|{self.inv_factors}"

    def __str__(self) -> str:
        return f"(({self.lam}), ({self.inv_factors}))"


@dataclass(frozen=True)
class ChainReport:
    subspaces: tuple[Subspace, ...]
    dims: tuple[int, ...]
    ell: int


# -- the chain ------------------------------------------------------------------------

def _shrink(T: PartialLinearMap) -> PartialLinearMap:
    """T restricted to {w in W : T w in W}."""
    F, n = T.field, T.n
    dom = T.domain
    res = [residual(F, y, dom.basis, dom.pivots) for y in T.action]
    kern = left_kernel(F, res, n)
    return PartialLinearMap._canonical(F, n, mat_mul(F, kern, dom.basis, n), mat_mul(F, kern, T.action, n))


def _walk(T: PartialLinearMap) -> tuple[list[Subspace], PartialLinearMap]:
    """Chain W_0..W_ell and the restriction of T to W_ell."""
    full = Subspace.full(T.field, T.n)
    if T.domain.dim == T.n:
        return [full], T
    chain = [full, T.domain]
    cur = T
    while True:
        nxt = _shrink(cur)
        if nxt.domain.dim == cur.domain.dim:
            return chain, cur
        chain.append(nxt.domain)
        cur = nxt


def subspace_chain(T: PartialLinearMap) -> ChainReport:
    chain, _ = _walk(T)
    return ChainReport(tuple(chain), tuple(S.dim for S in chain), len(chain) - 1)


def defect_dimensions(T: PartialLinearMap) -> Partition:
    dims = subspace_chain(T).dims
    return Partition(a - b for a, b in zip(dims, dims[1:]))


def maximal_invariant_subspace(T: PartialLinearMap) -> Subspace:
    return _walk(T)[0][-1]


def _operator_matrix(R: PartialLinearMap) -> Matrix:
    piv = R.domain.pivots
    return Matrix(R.field, tuple(tuple(y[p] for p in piv) for y in R.action), len(piv))


def operator_part(T: PartialLinearMap) -> Matrix:
    """Matrix of T on its maximal invariant subspace U, in the RREF basis of U.

    Row i holds the coordinates of T(u_i).
    """
    return _operator_matrix(_walk(T)[1])


def simple_part(T: PartialLinearMap) -> PartialLinearMap:
    """The induced map W/U -> V/U in quotient coordinates of V/U."""
    F, n = T.field, T.n
    U = maximal_invariant_subspace(T)
    on_v = quotient_coordinates(U, Subspace.full(F, n))
    on_w = quotient_coordinates(U, T.domain)
    dom = [on_v.project_unchecked(c) for c in on_w.complement]
    img = [on_v.project_unchecked(T(c)) for c in on_w.complement]
    return PartialLinearMap.from_vectors(F, n - U.dim, dom, img)


@lru_cache(maxsize=1 << 18)
def _invariant_factors_cached(F: FieldSpec, rows: tuple) -> InvariantFactors:
    diag = smith_normal_form(PolyMatrix.char_matrix(F, rows))
    return InvariantFactors(p for p in diag if p.degree >= 1)


def invariant_factors(A: Matrix) -> InvariantFactors:
    """Nonunit Smith normal form entries of xI - A, in divisibility order."""
    if not A.is_square():
        raise NotSquare(f"{A.nrows}x{A.ncols} matrix is not square")
    return _invariant_factors_cached(A.field, A.rows)


def similarity_label(T: PartialLinearMap) -> SimilarityLabel:
    chain, R = _walk(T)
    dims = [S.dim for S in chain]
    lam = Partition(a - b for a, b in zip(dims, dims[1:]))
    return SimilarityLabel(lam, invariant_factors(_operator_matrix(R)), T.n)


def are_similar(T1: PartialLinearMap, T2: PartialLinearMap) -> bool:
    if T1.field != T2.field or T1.n != T2.n:
        raise AmbientMismatch("maps live in different ambient spaces")
    return similarity_label(T1) == similarity_label(T2)


def conjugate_map(T: PartialLinearMap, S: Matrix) -> PartialLinearMap:
    """The map S T S^-1 on S(W), with S acting on row vectors by v -> v @ S."""
    F, n = T.field, T.n
    if S.field != F or S.nrows != n or S.ncols != n:
        raise AmbientMismatch("S must be an n x n matrix over the same field")
    if S.rank() != n:
        raise SingularS("S is not invertible")
    return PartialLinearMap.from_vectors(
        F, n, mat_mul(F, T.domain.basis, S.rows, n), mat_mul(F, T.action, S.rows, n))


def conjugate_unchecked(T: PartialLinearMap, S_rows: Sequence[Sequence[int]]) -> PartialLinearMap:
    """conjugate_map without validating S; for the enumeration loops."""
    F, n = T.field, T.n
    return PartialLinearMap._canonical(
        F, n, mat_mul(F, T.domain.basis, S_rows, n), mat_mul(F, T.action, S_rows, n))


def map_from_json(obj: dict) -> PartialLinearMap:
    """Read ``{"q", "n", "domain_basis", "images"}`` into a canonical map."""
    F = make_field(int(obj["q"]))
    n = int(obj["n"])
    dom = [list(map(int, r)) for r in obj.get("domain_basis", [])]
    imgs = [list(map(int, r)) for r in obj.get("images", [])]
    return PartialLinearMap.from_vectors(F, n, dom, imgs)


def report_json(T: PartialLinearMap) -> dict:
    chain, R = _walk(T)
    dims = [S.dim for S in chain]
    lam = Partition(a - b for a, b in zip(dims, dims[1:]))
    return {
        "lambda": list(lam),
        "invariant_factors": [str(p) for p in invariant_factors(_operator_matrix(R))],
        "max_invariant_subspace": [list(r) for r in chain[-1].basis],
        "ell": len(chain) - 1,
        "dims": dims,
    }

