import json
import random

import pytest

from fqsim.census import enumerate_gl, enumerate_partial_maps
from fqsim.errors import AmbientMismatch, InvalidChain, NotSquare, SingularS
from fqsim.field import make_field
from fqsim.invariants import (
    InvariantFactors,
    are_similar,
    conjugate_map,
    defect_dimensions,
    invariant_factors,
    map_from_json,
    maximal_invariant_subspace,
    operator_part,
    report_json,
    similarity_label,
    simple_part,
    subspace_chain,
)
from fqsim.linalg import Matrix, PartialLinearMap, Subspace, enumerate_subspaces
from fqsim.poly import parse_poly
from fqsim.qanalogs import Partition


def e(i, n):
    return [1 if j == i else 0 for j in range(n)]


def pmap(F, n, dom, img):
    return PartialLinearMap.from_vectors(F, n, dom, img)


@pytest.fixture
def shift(F2):
    """Te1 = e2, Te2 = e3 on span{e1, e2} in F_2^3."""
    return pmap(F2, 3, [e(0, 3), e(1, 3)], [e(1, 3), e(2, 3)])


@pytest.fixture
def fix_then_shift(F2):
    """Te1 = e1, Te2 = e3 on span{e1, e2} in F_2^3."""
    return pmap(F2, 3, [e(0, 3), e(1, 3)], [e(0, 3), e(2, 3)])


def I(F, *texts):
    return InvariantFactors(parse_poly(t, F) for t in texts)


def test_chain_everywhere_defined(F2):
    T = pmap(F2, 2, [e(0, 2), e(1, 2)], [e(1, 2), e(0, 2)])
    rep = subspace_chain(T)
    assert rep.dims == (2,) and rep.ell == 0
    assert defect_dimensions(T) == Partition()
    U = maximal_invariant_subspace(T)
    assert U == Subspace.full(F2, 2)


def test_chain_empty_domain(F2):
    T = pmap(F2, 3, [], [])
    rep = subspace_chain(T)
    assert rep.dims == (3, 0) and rep.ell == 1


def test_chain_shift(shift):
    rep = subspace_chain(shift)
    assert rep.dims == (3, 2, 1, 0) and rep.ell == 3
    assert rep.subspaces[2] == Subspace.span(shift.field, 3, [e(0, 3)])
    assert defect_dimensions(shift) == Partition((1, 1, 1))
    assert maximal_invariant_subspace(shift).dim == 0


def test_fix_then_shift(F2, fix_then_shift):
    T = fix_then_shift
    assert defect_dimensions(T) == Partition((1, 1))
    assert maximal_invariant_subspace(T) == Subspace.span(F2, 3, [e(0, 3)])
    assert operator_part(T) == Matrix.from_rows(F2, [[1]])
    S = simple_part(T)
    # V/span{e1} has coordinates for e2, e3
    assert S.n == 2 and S.domain.basis == ((1, 0),) and S.action == ((0, 1),)
    assert defect_dimensions(S) == Partition((1, 1))


def test_operator_part_identity(F2):
    T = pmap(F2, 2, [e(0, 2), e(1, 2)], [e(0, 2), e(1, 2)])
    assert operator_part(T) == Matrix.identity(F2, 2)
    S = simple_part(T)
    assert S.n == 0 and S.k == 0


def test_operator_part_empty(shift):
    assert operator_part(shift).nrows == 0
    assert simple_part(shift) == shift


def test_invariant_factor_examples(F2):
    assert invariant_factors(Matrix.zeros(F2, 0, 0)) == InvariantFactors()
    assert invariant_factors(Matrix.from_rows(F2, [[0, 1], [0, 0]])) == I(F2, "x^2")
    assert invariant_factors(Matrix.zeros(F2, 2, 2)) == I(F2, "x", "x")
    with pytest.raises(NotSquare):
        invariant_factors(Matrix.zeros(F2, 2, 3))


def test_invariant_factors_validation(F2):
    with pytest.raises(InvalidChain):
        I(F2, "x+1", "x^2")
    with pytest.raises(InvalidChain):
        I(F2, "1")
    assert InvariantFactors.parse("x;x^2+x", F2) == I(F2, "x", "x^2+x")


def test_label_examples(F2, shift):
    assert similarity_label(pmap(F2, 2, [], [])).lam == Partition((2,))
    lab = similarity_label(pmap(F2, 2, [e(0, 2)], [[0, 0]]))
    assert (lab.lam, lab.inv_factors) == (Partition((1,)), I(F2, "x"))
    lab = similarity_label(shift)
    assert (lab.lam, lab.inv_factors) == (Partition((1, 1, 1)), InvariantFactors())


def test_are_similar_examples(F2, shift):
    z1 = pmap(F2, 2, [e(0, 2)], [[0, 0]])
    z2 = pmap(F2, 2, [e(1, 2)], [[0, 0]])
    id1 = pmap(F2, 2, [e(0, 2)], [e(0, 2)])
    assert are_similar(shift, shift)
    assert are_similar(z1, z2)
    assert not are_similar(z1, id1)
    with pytest.raises(AmbientMismatch):
        are_similar(z1, shift)


def test_conjugate_examples(F2):
    z1 = pmap(F2, 2, [e(0, 2)], [[0, 0]])
    swap = Matrix.from_rows(F2, [[0, 1], [1, 0]])
    assert conjugate_map(z1, Matrix.identity(F2, 2)) == z1
    assert conjugate_map(z1, swap) == pmap(F2, 2, [e(1, 2)], [[0, 0]])
    with pytest.raises(SingularS):
        conjugate_map(z1, Matrix.from_rows(F2, [[1, 1], [1, 1]]))


@pytest.mark.parametrize("q,n", [(2, 3), (3, 2), (4, 2)])
def test_conjugation_round_trip_and_invariance(q, n):
    F = make_field(q)
    rng = random.Random(q + 17 * n)
    group = list(enumerate_gl(n, F))
    for T in enumerate_partial_maps(n, q):
        S = rng.choice(group)
        T2 = conjugate_map(T, S)
        assert conjugate_map(T2, S.inverse()) == T
        assert similarity_label(T2) == similarity_label(T)


def _brute_max_invariant(T):
    best = Subspace.zero(T.field, T.n)
    for k in range(T.k + 1):
        for S in enumerate_subspaces(T.n, k, T.field):
            if S <= T.domain and all(S.contains(T(v)) for v in S.basis):
                best = S
    return best


@pytest.mark.parametrize("q,n", [(2, 1), (2, 2), (2, 3), (3, 2)])
def test_structure_exhaustively(q, n):
    for T in enumerate_partial_maps(n, q):
        rep = subspace_chain(T)
        dims = rep.dims
        # strictly decreasing until the fixed point
        assert all(a > b for a, b in zip(dims, dims[1:]))
        lam = defect_dimensions(T)
        assert list(lam) == sorted(lam, reverse=True)
        U = maximal_invariant_subspace(T)
        lab = similarity_label(T)
        assert lab.lam.size + lab.inv_factors.degree == n
        assert lab.inv_factors.degree == U.dim == dims[-1]
        assert all(U.contains(T(v)) for v in U.basis)
        assert U == _brute_max_invariant(T)
        # the chain is W_{i+1} = {w in W_i : T w in W_i}
        for i in range(1, len(rep.subspaces) - 1):
            Wi, nxt = rep.subspaces[i], rep.subspaces[i + 1]
            assert set(nxt.vectors()) == {w for w in Wi.vectors() if Wi.contains(T(w))}
        S = simple_part(T)
        assert maximal_invariant_subspace(S).dim == 0
        assert defect_dimensions(S) == lam
        assert subspace_chain(S).dims == tuple(x - dims[-1] for x in dims)
        # simple maps are injective
        assert Subspace.span(S.field, S.n, S.action).dim == S.k


def test_json_io(shift, tmp_path):
    obj = shift.to_json()
    assert map_from_json(json.loads(json.dumps(obj))) == shift
    rep = report_json(shift)
    assert rep["lambda"] == [1, 1, 1] and rep["invariant_factors"] == []
    assert rep["dims"] == [3, 2, 1, 0] and rep["ell"] == 3
