"""Integer partitions and q-analogs as exact integer polynomials in q."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .errors import BadArguments


class Partition(tuple):
    """Weakly decreasing tuple of positive ints; ``Partition()`` is empty."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise BadArguments(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise BadArguments(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Comma-joined parts; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(t) for t in text.split(","))
        except ValueError as exc:
            raise BadArguments(f"bad partition {text!r}") from exc

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """1-based part lambda_i, zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def durfee_rank(self) -> int:
        r = 0
        for i, p in enumerate(self, start=1):
            if p >= i:
                r = i
        return r

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out


def conjugate(lam: Sequence[int]) -> Partition:
    return Partition(lam).conjugate()


def durfee_rank(lam: Sequence[int]) -> int:
    return Partition(lam).durfee_rank()


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of n in lexicographically decreasing order."""
    if n < 0:
        raise BadArguments("n must be nonnegative")
    if max_part is None:
        max_part = n

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return [Partition(p) for p in gen(n, max_part)]


def partitions_with_first_part(n: int, m: int) -> list[Partition]:
    if not 1 <= m <= n:
        raise BadArguments(f"need 1 <= m <= n, got m={m}, n={n}")
    return [Partition((m,) + tuple(p)) for p in partitions_of(n - m, m)]


# -- polynomials in q ---------------------------------------------------------------

class QPolynomial:
    """Polynomial in the formal variable q with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> QPolynomial:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPolynomial([other])
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = QPolynomial([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPolynomial([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPolynomial([other])
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = QPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def exact_div(self, other: QPolynomial) -> QPolynomial:
        """Quotient by a polynomial that divides self exactly over Z."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        if len(r) - 1 < db:
            if any(r):
                raise ArithmeticError("division is not exact")
            return QPolynomial()
        quo = [0] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c, rem = divmod(r[i], b[-1])
            if rem:
                raise ArithmeticError("division is not exact")
            quo[i - db] = c
            if c:
                for j in range(db + 1):
                    r[i - db + j] -= c * b[j]
        if any(r):
            raise ArithmeticError("division is not exact")
        return QPolynomial(quo)

    def __call__(self, q: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mono = "q" if i == 1 else f"q^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


ZERO = QPolynomial()
ONE = QPolynomial([1])


@lru_cache(maxsize=None)
def q_int(n: int) -> QPolynomial:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise BadArguments("q_int needs n >= 0")
    return QPolynomial([1] * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPolynomial:
    if n < 0:
        raise BadArguments("q_factorial needs n >= 0")
    out = ONE
    for i in range(1, n + 1):
        out = out * q_int(i)
    return out


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPolynomial:
    """Gaussian binomial via [n,k] = [n-1,k-1] + q^k [n-1,k]."""
    if not 0 <= k <= n:
        raise BadArguments(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + QPolynomial.monomial(k) * q_binomial(n - 1, k)


def q_binomial_at(n: int, k: int, q: int) -> int:
    """[n, k]_q evaluated at q; zero outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return q_binomial(n, k)(q)


def q_multinomial(n: int, parts: Sequence[int]) -> QPolynomial:
    """[n; n_1, ..., n_r]_q as a telescoping product of q-binomials."""
    parts = list(parts)
    if any(p < 0 for p in parts) or sum(parts) != n:
        raise BadArguments(f"parts {parts} must be nonnegative and sum to {n}")
    out = ONE
    rest = n
    for p in parts:
        out = out * q_binomial(rest, p)
        rest -= p
    return out


@lru_cache(maxsize=None)
def gamma_q(k: int) -> QPolynomial:
    """|GL_k(F_q)| = prod_{i<k} (q^k - q^i) as a polynomial in q."""
    if k < 0:
        raise BadArguments("gamma_q needs k >= 0")
    out = ONE
    for i in range(k):
        out = out * (QPolynomial.monomial(k) - QPolynomial.monomial(i))
    return out


def gamma(k: int, q: int) -> int:
    out = 1
    for i in range(k):
        out *= q ** k - q ** i
    return out


# -- box partitions and the two identities --------------------------------------

def _box_partitions(r: int, s: int):
    """Partitions with at most r parts, each at most s, as r-tuples padded with 0."""
    for combo in combinations_with_replacement(range(s, -1, -1), r):
        yield combo


def p_box(m: int, r: int, s: int) -> int:
    """Number of partitions of m fitting in an r-by-s box."""
    if min(m, r, s) < 0:
        raise BadArguments("p_box arguments must be nonnegative")
    return sum(1 for lam in _box_partitions(r, s) if sum(lam) == m)


def box_generating_polynomial(r: int, s: int) -> QPolynomial:
    counts = [0] * (r * s + 1)
    for lam in _box_partitions(r, s):
        counts[sum(lam)] += 1
    return QPolynomial(counts)


def verify_box_identity(r: int, s: int) -> bool:
    if r < 0 or s < 0:
        raise BadArguments("r and s must be nonnegative")
    return q_binomial(r + s, s) == box_generating_polynomial(r, s)


def durfee_term(lam: Sequence[int]) -> QPolynomial:
    """q^(sum lambda_i^2) * prod_i [lambda_i, lambda_{i+1}]_q."""
    parts = list(lam) + [0]
    out = QPolynomial.monomial(sum(p * p for p in lam))
    for a, b in zip(parts, parts[1:]):
        out = out * q_binomial(a, b)
    return out


def verify_durfee_identity(m: int, n: int) -> bool:
    if not 1 <= m <= n:
        raise BadArguments(f"need 1 <= m <= n, got m={m}, n={n}")
    lhs = ZERO
    for lam in partitions_with_first_part(n, m):
        lhs = lhs + durfee_term(lam)
    rhs = QPolynomial.monomial(m * m + n - m) * q_binomial(n - 1, m - 1)
    return lhs == rhs
