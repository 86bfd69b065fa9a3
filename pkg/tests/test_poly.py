import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fqsim.errors import BothZero, NotMonic, ZeroOrConstant
from fqsim.field import make_field
from fqsim.poly import (
    Poly,
    PolyMatrix,
    enumerate_monic_irreducibles,
    factor,
    format_poly,
    monic_polys,
    parse_poly,
    poly_det,
    poly_divmod,
    poly_gcd,
    poly_mul,
    smith_normal_form,
)


def P(F, text):
    return parse_poly(text, F)


def test_divmod_examples(F2, F3):
    q, r = poly_divmod(P(F2, "x^2+1"), P(F2, "x+1"))
    assert (q, r) == (P(F2, "x+1"), Poly(F2))
    q, r = poly_divmod(P(F3, "x^2"), P(F3, "x+1"))
    assert (q, r) == (P(F3, "x+2"), P(F3, "1"))
    assert poly_mul(P(F3, "x+2"), Poly(F3)).is_zero()


def test_zero_degree(F2):
    assert Poly(F2).degree == -1
    assert Poly(F2, [0, 0]).is_zero()


def test_divide_by_zero(F2):
    with pytest.raises(ZeroDivisionError):
        divmod(P(F2, "x"), Poly(F2))


def test_gcd_examples(F2):
    assert poly_gcd(P(F2, "x^2+1"), P(F2, "x+1")) == P(F2, "x+1")
    assert poly_gcd(P(F2, "x^3+x"), P(F2, "1")) == P(F2, "1")
    assert poly_gcd(P(F2, "x^2+x+1"), P(F2, "x^3+1")) == P(F2, "x^2+x+1")
    with pytest.raises(BothZero):
        poly_gcd(Poly(F2), Poly(F2))


def test_irreducible_examples(F2, F3):
    assert enumerate_monic_irreducibles(F2, 2) == [P(F2, "x"), P(F2, "x+1"), P(F2, "x^2+x+1")]
    assert sum(1 for f in enumerate_monic_irreducibles(F2, 3) if f.degree == 3) == 2
    assert enumerate_monic_irreducibles(F3, 1) == [P(F3, "x"), P(F3, "x+1"), P(F3, "x+2")]


def _mobius(n):
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    return -out if m > 1 else out


@pytest.mark.parametrize("q,maxdeg", [(2, 8), (3, 5), (4, 4), (5, 3), (9, 2)])
def test_irreducible_counts_match_necklace_formula(q, maxdeg):
    F = make_field(q)
    irr = enumerate_monic_irreducibles(F, maxdeg)
    for m in range(1, maxdeg + 1):
        expected = sum(_mobius(d) * q ** (m // d) for d in range(1, m + 1) if m % d == 0) // m
        assert sum(1 for f in irr if f.degree == m) == expected


def test_factor_examples(F2):
    assert factor(P(F2, "x^2+1")) == [(P(F2, "x+1"), 2)]
    assert factor(P(F2, "x^2+x+1")) == [(P(F2, "x^2+x+1"), 1)]
    assert factor(P(F2, "x^3+1")) == [(P(F2, "x+1"), 1), (P(F2, "x^2+x+1"), 1)]


def test_factor_errors(F3):
    with pytest.raises(NotMonic):
        factor(P(F3, "2*x+1"))
    with pytest.raises(ZeroOrConstant):
        factor(P(F3, "1"))
    with pytest.raises(ZeroOrConstant):
        factor(Poly(F3))


@pytest.mark.parametrize("q,maxdeg", [(2, 6), (3, 4), (4, 3)])
def test_factor_recombines_exhaustively(q, maxdeg):
    F = make_field(q)
    irr = set(enumerate_monic_irreducibles(F, maxdeg))
    for d in range(1, maxdeg + 1):
        for f in monic_polys(F, d):
            parts = factor(f)
            prod = Poly.const(F, 1)
            for g, e in parts:
                assert g in irr and e >= 1
                prod = prod * g ** e
            assert prod == f
            assert len({g for g, _ in parts}) == len(parts)


def test_format_parse_examples(F3):
    f = Poly(F3, [1, 2, 1])
    assert format_poly(f) == "x^2+2*x+1"
    assert parse_poly(" x ^ 2 + 2 * x + 1 ", F3) == f
    assert parse_poly("x+x", F3) == Poly(F3, [0, 2])
    with pytest.raises(ValueError):
        parse_poly("3*x", F3)
    with pytest.raises(ValueError):
        parse_poly("x^", F3)


@given(st.sampled_from([2, 3, 4, 5, 9]), st.lists(st.integers(0, 100), max_size=7))
def test_format_parse_round_trip(q, raw):
    F = make_field(q)
    f = Poly(F, [c % q for c in raw])
    if f.is_zero():
        return
    assert parse_poly(format_poly(f), F) == f


@settings(max_examples=200)
@given(st.sampled_from([2, 3, 4, 8]), st.lists(st.integers(0, 100), max_size=6),
       st.lists(st.integers(0, 100), min_size=1, max_size=5))
def test_division_algorithm(q, a_raw, b_raw):
    F = make_field(q)
    a = Poly(F, [c % q for c in a_raw])
    b = Poly(F, [c % q for c in b_raw])
    if b.is_zero():
        return
    quo, rem = divmod(a, b)
    assert quo * b + rem == a
    assert rem.degree < b.degree
    g = poly_gcd(a, b)
    assert g.is_monic()
    assert (a % g).is_zero() and (b % g).is_zero()


def diag(F, texts):
    n = len(texts)
    rows = [[P(F, texts[i]) if i == j else Poly(F) for j in range(n)] for i in range(n)]
    return PolyMatrix(F, rows)


def test_snf_examples(F2):
    assert smith_normal_form(diag(F2, ["x", "x"])) == [P(F2, "x"), P(F2, "x")]
    nil = PolyMatrix.char_matrix(F2, [[0, 1], [0, 0]])
    assert smith_normal_form(nil) == [P(F2, "1"), P(F2, "x^2")]
    ident = PolyMatrix.char_matrix(F2, [[1, 0], [0, 1]])
    assert smith_normal_form(ident) == [P(F2, "x+1"), P(F2, "x+1")]


def test_snf_reorders_coprime_diagonal(F2):
    # diag(x, x+1) is equivalent to diag(1, x^2+x)
    assert smith_normal_form(diag(F2, ["x", "x+1"])) == [P(F2, "1"), P(F2, "x^2+x")]


@pytest.mark.parametrize("q,n", [(2, 4), (3, 3), (4, 3), (5, 2)])
def test_snf_of_char_matrix_properties(q, n):
    F = make_field(q)
    rng = random.Random(1000 * q + n)
    for _ in range(25):
        A = [[rng.randrange(q) for _ in range(n)] for _ in range(n)]
        M = PolyMatrix.char_matrix(F, A)
        d = smith_normal_form(M)
        assert len(d) == n
        assert all(p.is_monic() for p in d)
        for a, b in zip(d, d[1:]):
            assert (b % a).is_zero()
        prod = Poly.const(F, 1)
        for p in d:
            prod = prod * p
        assert prod == poly_det(M)
        assert prod.degree == n


def test_snf_singular_block(F3):
    zero = PolyMatrix(F3, [[Poly(F3), Poly(F3)], [Poly(F3), P(F3, "x")]])
    assert smith_normal_form(zero) == [P(F3, "x"), Poly(F3)]


def test_poly_is_immutable(F2):
    f = P(F2, "x+1")
    with pytest.raises(AttributeError):
        f.coeffs = (1,)


def test_evaluation():
    F = make_field(5)
    f = P(F, "x^2+2*x+3")
    for a in range(5):
        assert f(a) == (a * a + 2 * a + 3) % 5


def test_all_pairs_small_products():
    # deg(fg) = deg f + deg g over a field
    F = make_field(4)
    polys = [Poly(F, c) for c in product(range(4), repeat=3)]
    for f in polys[::7]:
        for g in polys[::5]:
            prod = f * g
            if f.is_zero() or g.is_zero():
                assert prod.is_zero()
            else:
                assert prod.degree == f.degree + g.degree
