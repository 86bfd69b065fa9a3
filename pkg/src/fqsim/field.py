"""Arithmetic in GF(q) for prime powers q = p^e.

Elements are plain ints in ``[0, q)``: the base-p digits of the value are the
coefficients of the element in the polynomial basis ``1, x, ..., x^(e-1)``,
least-significant digit first.  The extension is built on the
lexicographically smallest monic irreducible of degree e over GF(p), with
coefficient tuples compared from the constant term upward.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .errors import DivisionByZero, NotAPrimePower

FieldElement = int

# Full add/mul tables are built for fields up to this size.
TABLE_LIMIT = 256


def _prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise NotAPrimePower(f"q={q} is not a prime power")
    p = None
    d = 2
    while d * d <= q:
        if q % d == 0:
            p = d
            break
        d += 1
    if p is None:
        return q, 1
    e = 0
    m = q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise NotAPrimePower(f"q={q} has more than one prime divisor")
    return p, e


# -- polynomials over the prime field, as little-endian int lists ------------

def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial b over GF(p)."""
    r = list(a)
    db = len(b) - 1
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] % p
        if c:
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % p
    return _fp_trim([c % p for c in r[:db]] if db > 0 else [])


def _fp_is_irreducible(f: Sequence[int], p: int) -> bool:
    e = len(f) - 1
    for deg in range(1, e // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if not _fp_mod(f, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e over GF(p)."""
    for low in itertools.product(range(p), repeat=e):
        f = list(low) + [1]
        if low[0] == 0 and e > 1:
            continue  # divisible by x
        if _fp_is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("unreachable: irreducibles exist in every degree")


@dataclass(frozen=True)
class FieldSpec:
    p: int
    e: int
    q: int
    modulus: tuple[int, ...] | None = None
    _add: tuple | None = field(default=None, compare=False, repr=False)
    _mul: tuple | None = field(default=None, compare=False, repr=False)
    _neg: tuple | None = field(default=None, compare=False, repr=False)
    _inv: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.q <= TABLE_LIMIT:
            q = self.q
            add = tuple(tuple(self._raw_add(a, b) for b in range(q)) for a in range(q))
            mul = tuple(tuple(self._raw_mul(a, b) for b in range(q)) for a in range(q))
            neg = tuple(self._raw_neg(a) for a in range(q))
            inv = [0] * q
            for a in range(1, q):
                for b in range(1, q):
                    if mul[a][b] == 1:
                        inv[a] = b
                        break
            object.__setattr__(self, "_add", add)
            object.__setattr__(self, "_mul", mul)
            object.__setattr__(self, "_neg", neg)
            object.__setattr__(self, "_inv", tuple(inv))

    def __hash__(self):
        return hash((self.p, self.e))

    def __str__(self):
        return f"GF({self.q})"

    # -- digit encoding --

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            a, d = divmod(a, self.p)
            out.append(d)
        return out

    def from_digits(self, ds: Sequence[int]) -> int:
        v = 0
        for d in reversed(ds):
            v = v * self.p + d
        return v

    # -- table-free arithmetic --

    def _raw_add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        return self.from_digits([(x + y) % p for x, y in zip(self.digits(a), self.digits(b))])

    def _raw_neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        return self.from_digits([(-x) % self.p for x in self.digits(a)])

    def _raw_mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        p = self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        r = _fp_mod(prod, self.modulus, p)
        return self.from_digits(r + [0] * (self.e - len(r)))

    # -- public arithmetic --

    def add(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a][b]
        return self._raw_add(a, b)

    def neg(self, a: int) -> int:
        if self._neg is not None:
            return self._neg[a]
        return self._raw_neg(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul is not None:
            return self._mul[a][b]
        return self._raw_mul(a, b)

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self._inv is not None:
            return self._inv[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def elements(self) -> list[int]:
        return list(range(self.q))

    def primitive_element(self) -> int:
        """Smallest generator of the multiplicative group."""
        order = self.q - 1
        primes = [d for d in range(2, order + 1) if order % d == 0 and all(d % r for r in range(2, d))]
        for g in range(1, self.q):
            if all(self.pow(g, order // r) != 1 for r in primes):
                return g
        raise AssertionError("unreachable")

    # -- row-vector helpers used by the elimination code --

    def axpy(self, c: int, x: Sequence[int], y: Sequence[int]) -> list[int]:
        """Return y + c*x elementwise."""
        if self._mul is not None:
            m = self._mul[c]
            add = self._add
            return [add[b][m[a]] for a, b in zip(x, y)]
        return [self.add(b, self.mul(c, a)) for a, b in zip(x, y)]

    def scale(self, c: int, x: Sequence[int]) -> list[int]:
        if self._mul is not None:
            m = self._mul[c]
            return [m[a] for a in x]
        return [self.mul(c, a) for a in x]


@lru_cache(maxsize=None)
def make_field(q: int) -> FieldSpec:
    p, e = _prime_power(q)
    modulus = smallest_irreducible(p, e) if e > 1 else None
    return FieldSpec(p=p, e=e, q=q, modulus=modulus)


def add(a: int, b: int, F: FieldSpec) -> int:
    return F.add(a, b)


def mul(a: int, b: int, F: FieldSpec) -> int:
    return F.mul(a, b)


def neg(a: int, F: FieldSpec) -> int:
    return F.neg(a)


def inv(a: int, F: FieldSpec) -> int:
    return F.inv(a)


def pow(a: int, k: int, F: FieldSpec) -> int:  # noqa: A001 - mirrors the field op name
    return F.pow(a, k)


def enumerate_elements(F: FieldSpec) -> list[int]:
    return F.elements()
