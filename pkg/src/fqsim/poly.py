"""Univariate polynomials over GF(q), factorization and Smith normal form."""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .errors import BothZero, DivisionByZero, NotMonic, NotSquare, ZeroOrConstant
from .field import FieldSpec


class Poly:
    """Polynomial with little-endian integer-encoded coefficients.

    The zero polynomial has ``coeffs == ()`` and degree -1, which is smaller
    than every genuine degree and never produced otherwise.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (self.field, self.coeffs))

    @classmethod
    def x(cls, field: FieldSpec) -> Poly:
        return cls(field, (0, 1))

    @classmethod
    def const(cls, field: FieldSpec, c: int) -> Poly:
        return cls(field, (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def is_unit(self) -> bool:
        return self.degree == 0

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs and self.field == other.field

    def __hash__(self):
        return hash((self.field.q, self.coeffs))

    def __repr__(self):
        return f"Poly({self}, {self.field})"

    def __str__(self):
        return format_poly(self)

    def sort_key(self):
        """Order by degree, then coefficients from the leading term down."""
        return (self.degree, tuple(reversed(self.coeffs)))

    def _check(self, other: Poly):
        if self.field is not other.field and self.field != other.field:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(F, [F.add(x, y) for x, y in zip(a, b)] + list(a[len(b):]))

    def __neg__(self) -> Poly:
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, out)

    def scale(self, c: int) -> Poly:
        return Poly(self.field, self.field.scale(c, self.coeffs))

    def __pow__(self, k: int) -> Poly:
        result = Poly.const(self.field, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        F = self.field
        r = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        inv_lc = F.inv(b[-1])
        if len(r) <= db:
            return Poly(F), self
        quo = [0] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if c:
                t = F.mul(c, inv_lc)
                quo[i - db] = t
                nt = F.neg(t)
                for j in range(db + 1):
                    r[i - db + j] = F.add(r[i - db + j], F.mul(nt, b[j]))
        return Poly(F, quo), Poly(F, r[:db])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lc))

    def __call__(self, a: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, a), c)
        return acc

    def to_ints(self) -> list[int]:
        return list(self.coeffs)


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    return divmod(a, b)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd of a and b."""
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


# -- text format --------------------------------------------------------------

def format_poly(f: Poly) -> str:
    """Render as e.g. ``x^2+2*x+1`` with coefficients as integer encodings."""
    if f.is_zero():
        return "0"
    terms = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = "x" if i == 1 else f"x^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms)


_TERM = re.compile(r"^(?:(\d+)\*?)?(x(?:\^(\d+))?)?$")


def parse_poly(text: str, F: FieldSpec) -> Poly:
    """Parse the human syntax produced by :func:`format_poly`.

    Whitespace is ignored.  Repeated degrees are summed.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, int] = {}
    for term in s.split("+"):
        m = _TERM.match(term)
        if not term or m is None or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"cannot parse term {term!r} in {text!r}")
        c = int(m.group(1)) if m.group(1) is not None else 1
        if c >= F.q:
            raise ValueError(f"coefficient {c} is not an element of {F}")
        if m.group(2) is None:
            deg = 0
        else:
            deg = int(m.group(3)) if m.group(3) is not None else 1
        coeffs[deg] = F.add(coeffs.get(deg, 0), c)
    top = max(coeffs)
    return Poly(F, [coeffs.get(i, 0) for i in range(top + 1)])


# -- irreducibles and factorization ---------------------------------------------

def monic_polys(F: FieldSpec, degree: int):
    """All monic polynomials of the given degree, in lexicographic order."""
    for low in product(range(F.q), repeat=degree):
        yield Poly(F, tuple(reversed(low)) + (1,))


@lru_cache(maxsize=None)
def _irreducibles_of_degree(F: FieldSpec, m: int) -> tuple[Poly, ...]:
    smaller = [g for d in range(1, m // 2 + 1) for g in _irreducibles_of_degree(F, d)]
    out = []
    for f in monic_polys(F, m):
        if all(not (f % g).is_zero() for g in smaller):
            out.append(f)
    out.sort(key=lambda f: f.coeffs)
    return tuple(out)


def enumerate_monic_irreducibles(F: FieldSpec, max_degree: int) -> list[Poly]:
    """Monic irreducibles of degree 1..max_degree, sorted by (degree, coefficients)."""
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    out = []
    for m in range(1, max_degree + 1):
        out.extend(_irreducibles_of_degree(F, m))
    return out


def factor(f: Poly) -> list[tuple[Poly, int]]:
    """Factor a monic polynomial into (monic irreducible, multiplicity) pairs."""
    if f.is_zero() or f.degree < 1:
        raise ZeroOrConstant("factor needs a polynomial of degree >= 1")
    if not f.is_monic():
        raise NotMonic(f"{f} is not monic")
    F = f.field
    out = []
    rest = f
    m = 1
    while 2 * m <= rest.degree:
        for g in _irreducibles_of_degree(F, m):
            mult = 0
            while True:
                quo, rem = divmod(rest, g)
                if not rem.is_zero():
                    break
                rest = quo
                mult += 1
            if mult:
                out.append((g, mult))
        m += 1
    if rest.degree >= 1:
        out.append((rest, 1))
    out.sort(key=lambda t: t[0].sort_key())
    return out


# -- polynomial matrices ------------------------------------------------------------

class PolyMatrix:
    """Dense matrix over GF(q)[x], stored row-major."""

    def __init__(self, field: FieldSpec, rows: Sequence[Sequence[Poly]]):
        self.field = field
        self.entries = [list(r) for r in rows]
        self.nrows = len(self.entries)
        self.ncols = len(self.entries[0]) if self.entries else 0
        if any(len(r) != self.ncols for r in self.entries):
            raise ValueError("ragged polynomial matrix")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @classmethod
    def char_matrix(cls, field: FieldSpec, A: Sequence[Sequence[int]]) -> PolyMatrix:
        """Build xI - A from a square matrix of field elements."""
        n = len(A)
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                c = field.neg(A[i][j])
                row.append(Poly(field, (c, 1) if i == j else (c,)))
            rows.append(row)
        return cls(field, rows)


def smith_normal_form(M: PolyMatrix) -> list[Poly]:
    """Diagonal of the Smith normal form of a square matrix over GF(q)[x].

    Entries are monic (units become the constant 1) or zero and form a
    divisibility chain.  The pivot at each stage is the nonzero entry of
    least degree in the remaining block, first in row-major order.
    """
    if M.nrows != M.ncols:
        raise NotSquare(f"{M.nrows}x{M.ncols} matrix is not square")
    F = M.field
    n = M.nrows
    a = [list(r) for r in M.entries]
    zero = Poly(F)
    diag = []
    for t in range(n):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    e = a[i][j]
                    if e.coeffs and (best is None or e.degree < best[0]):
                        best = (e.degree, i, j)
                        if e.degree == 0:
                            break
                if best is not None and best[0] == 0:
                    break
            if best is None:
                # remaining block is zero
                diag.extend([zero] * (n - t))
                return diag
            _, i, j = best
            a[t], a[i] = a[i], a[t]
            for r in a:
                r[t], r[j] = r[j], r[t]
            piv = a[t][t]
            dirty = False
            prow = a[t]
            for i in range(t + 1, n):
                if a[i][t].coeffs:
                    quo, rem = divmod(a[i][t], piv)
                    row = a[i]
                    for j in range(t, n):
                        if prow[j].coeffs:
                            row[j] = row[j] - quo * prow[j]
                    dirty = dirty or bool(rem.coeffs)
            for j in range(t + 1, n):
                if prow[j].coeffs:
                    quo, rem = divmod(prow[j], piv)
                    for row in a:
                        if row[t].coeffs:
                            row[j] = row[j] - quo * row[t]
                    dirty = dirty or bool(rem.coeffs)
            if dirty:
                continue
            # row and column are clear; the pivot must divide the rest
            bad = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if a[i][j].coeffs and (a[i][j] % piv).coeffs:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                diag.append(piv.monic())
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
    return diag


def poly_det(M: PolyMatrix) -> Poly:
    """Determinant by cofactor expansion along the first row (small sizes only)."""
    if M.nrows != M.ncols:
        raise NotSquare("determinant of a non-square matrix")
    F = M.field

    def det(rows: list[list[Poly]]) -> Poly:
        if not rows:
            return Poly.const(F, 1)
        total = Poly(F)
        for j, e in enumerate(rows[0]):
            if e.is_zero():
                continue
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            term = e * det(minor)
            total = total - term if j % 2 else total + term
        return total

    return det(M.entries)
