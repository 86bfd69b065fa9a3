import pytest

from fqsim.counting import (
    count_class,
    count_class_fixed_domain,
    count_extensions,
    count_flags,
    count_operator_part_class,
    count_simple_class,
    count_simple_fixed_domain,
    count_subspaces_with_intersection,
    count_with_fixed_invariant_subspace,
    enumerate_invariant_factor_chains,
    enumerate_labels,
    frobenius_to_invariant_factors,
    hall_class_size,
    invariant_factors_to_frobenius,
    sigma,
    total_partial_maps,
)
from fqsim.errors import BadDimensions, BadLabel
from fqsim.field import make_field
from fqsim.invariants import InvariantFactors
from fqsim.poly import parse_poly
from fqsim.qanalogs import Partition, gamma, partitions_of, partitions_with_first_part, q_binomial_at


def I(F, *texts):
    return InvariantFactors(parse_poly(t, F) for t in texts)


def P(F, t):
    return parse_poly(t, F)


def test_frobenius_examples(F2):
    assert invariant_factors_to_frobenius(I(F2, "x^2")) == {P(F2, "x"): Partition((2,))}
    assert invariant_factors_to_frobenius(I(F2, "x", "x")) == {P(F2, "x"): Partition((1, 1))}
    big = P(F2, "x+1") * P(F2, "x^2+x+1")
    data = invariant_factors_to_frobenius(I(F2, "x+1", str(big)))
    assert data == {P(F2, "x+1"): Partition((1, 1)), P(F2, "x^2+x+1"): Partition((1,))}


@pytest.mark.parametrize("q,d", [(2, 4), (3, 3), (4, 2)])
def test_frobenius_round_trip(q, d):
    F = make_field(q)
    for chain in enumerate_invariant_factor_chains(F, d):
        assert frobenius_to_invariant_factors(invariant_factors_to_frobenius(chain), F) == chain


def test_hall_examples(F2):
    assert hall_class_size(I(F2, "x", "x"), 2) == 1
    assert hall_class_size(I(F2, "x^2"), 2) == 3
    assert hall_class_size(I(F2, "x^2+x+1"), 2) == 2
    assert hall_class_size(InvariantFactors(), 2) == 1


@pytest.mark.parametrize("q,d", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (4, 2), (5, 2)])
def test_hall_sizes_partition_the_matrix_algebra(q, d):
    F = make_field(q)
    sizes = [hall_class_size(c, q) for c in enumerate_invariant_factor_chains(F, d)]
    assert sum(sizes) == q ** (d * d)
    assert all(gamma(d, q) % s == 0 for s in sizes)


def test_hall_field_mismatch(F2):
    with pytest.raises(Exception):
        hall_class_size(I(F2, "x"), 3)


def test_sigma_examples():
    assert sigma((), 3, 2) == 1
    assert sigma((1, 1), 2, 2) == 2
    assert sigma((2,), 2, 2) == 1
    with pytest.raises(BadLabel):
        sigma((1,), 2, 2)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_simple_sums(q):
    for n in range(1, 8):
        for k in range(n):
            total = sum(sigma(lam, n, q) for lam in partitions_with_first_part(n, n - k))
            assert total == count_simple_fixed_domain(n, k, q)


def test_simple_class_examples():
    assert count_simple_class((3,), 3, 2) == 1
    assert count_simple_class((1, 1), 2, 2) == 6
    assert count_simple_class((1, 1, 1), 3, 2) == 168


@pytest.mark.parametrize("q", [2, 3])
def test_simple_class_multinomial_matches_sigma(q):
    for n in range(1, 7):
        for lam in partitions_of(n):
            k = n - lam[0]
            assert count_simple_class(lam, n, q) == q_binomial_at(n, k, q) * sigma(lam, n, q)


def test_fixed_domain_examples(F2):
    for chain in enumerate_invariant_factor_chains(F2, 2):
        assert count_class_fixed_domain((), chain, 2, 2, 2) == hall_class_size(chain, 2)
    assert count_class_fixed_domain((1,), I(F2, "x"), 2, 1, 2) == 1
    assert count_class_fixed_domain((1, 1), (), 2, 1, 2) == 2


def test_count_class_examples(F2):
    assert count_class((1,), I(F2, "x"), 2, 2) == 3
    assert count_class((1, 1), (), 2, 2) == 6
    assert count_class((2,), (), 2, 2) == 1


def test_with_fixed_invariant_subspace_examples(F2):
    assert count_with_fixed_invariant_subspace((1,), I(F2, "x"), 2, 1, 2) == 1
    assert count_with_fixed_invariant_subspace((1, 1), (), 2, 1, 2) == sigma((1, 1), 2, 2)
    with pytest.raises(BadLabel):
        count_with_fixed_invariant_subspace((1,), I(F2, "x"), 2, 2, 2)


def test_bad_labels(F2):
    with pytest.raises(BadLabel):
        count_class((1,), (), 2, 2)
    with pytest.raises(BadLabel):
        count_class((1, 2), (), 3, 2)
    with pytest.raises(BadLabel):
        # k must be n - lambda_1
        count_class_fixed_domain((2,), I(F2, "x^2"), 4, 3, 2)


def test_extensions_examples():
    assert count_extensions(0, 3, 2) == count_extensions(3, 3, 2) == 1
    assert count_extensions(1, 2, 2) == 2
    assert count_extensions(2, 3, 3) == 9
    with pytest.raises(BadDimensions):
        count_extensions(3, 2, 2)


def test_simple_fixed_domain_examples():
    assert count_simple_fixed_domain(2, 1, 2) == 2
    assert count_simple_fixed_domain(3, 2, 2) == 24
    assert count_simple_fixed_domain(5, 0, 3) == 1
    with pytest.raises(BadDimensions):
        count_simple_fixed_domain(2, 2, 2)


def test_operator_part_class_examples(F2):
    assert count_operator_part_class((), 3, 2, 2) == count_simple_fixed_domain(3, 2, 2)
    assert count_operator_part_class(I(F2, "x"), 2, 1, 2) == 1
    assert count_operator_part_class(I(F2, "x", "x"), 2, 2, 2) == 1


@pytest.mark.parametrize("q", [2, 3])
def test_operator_part_classes_cover_fixed_domain(q):
    # summing over all I gives every map on a fixed k-dim domain: q^(nk)
    F = make_field(q)
    for n in range(1, 5):
        for k in range(n + 1):
            total = sum(count_operator_part_class(c, n, k, q)
                        for d in range(k + 1) for c in enumerate_invariant_factor_chains(F, d))
            assert total == q ** (n * k)


def test_operator_part_class_is_sum_over_lambda(F2):
    for n in range(1, 5):
        for k in range(n):
            for d in range(k + 1):
                for c in enumerate_invariant_factor_chains(F2, d):
                    by_lam = sum(count_class_fixed_domain(lam, c, n, k, 2)
                                 for lam in partitions_with_first_part(n - d, n - k))
                    assert by_lam == count_operator_part_class(c, n, k, 2)


def test_intersection_and_flag_examples():
    assert count_subspaces_with_intersection(4, 2, 2, 2) == 1
    assert count_subspaces_with_intersection(4, 2, 1, 2) == 6
    assert count_subspaces_with_intersection(2, 1, 0, 2) == 2
    assert count_flags(3, (3,), 2) == 1
    assert count_flags(3, (1, 1, 1), 2) == 21
    assert count_flags(2, (1, 1), 2) == 3
    with pytest.raises(BadDimensions):
        count_flags(3, (1, 1), 2)


def test_enumerate_labels_examples(F2):
    labels = list(enumerate_labels(1, 2))
    assert [(lab.lam, lab.inv_factors) for lab in labels] == [
        (Partition((1,)), InvariantFactors()),
        (Partition(), I(F2, "x")),
        (Partition(), I(F2, "x+1")),
    ]
    assert len(list(enumerate_labels(0, 2))) == 1
    # settled by the census: 10 buckets for n = 2, q = 2
    assert len(list(enumerate_labels(2, 2))) == 10


def test_total_partial_maps():
    assert total_partial_maps(0, 2) == 1
    assert total_partial_maps(2, 2) == 29
    assert total_partial_maps(3, 2) == 1017
    assert total_partial_maps(4, 2) == 136177


@pytest.mark.parametrize("q", [2, 3])
def test_partition_of_unity_small(q):
    for n in range(4):
        assert sum(count_class(lab.lam, lab.inv_factors, n, q)
                   for lab in enumerate_labels(n, q)) == total_partial_maps(n, q)
