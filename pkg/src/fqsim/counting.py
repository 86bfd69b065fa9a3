"""Closed-form sizes of similarity classes of partial linear maps.

All counts are exact Python ints.  Labels are pairs (lambda, I) with
``|lambda| + deg I = n``; a map in the class has a domain of dimension
``k = n - lambda_1`` and a maximal invariant subspace of dimension
``d = deg I``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import BadDimensions, BadLabel, InvalidChain
from .field import FieldSpec, make_field
from .invariants import InvariantFactors, SimilarityLabel
from .poly import Poly, enumerate_monic_irreducibles, factor
from .qanalogs import Partition, gamma, partitions_of, q_binomial_at, q_multinomial

FrobeniusData = dict  # monic irreducible Poly -> nonempty Partition


# -- invariant factors <-> per-irreducible partitions ---------------------------

def _as_chain(I) -> InvariantFactors:
    return I if isinstance(I, InvariantFactors) else InvariantFactors(I)


def invariant_factors_to_frobenius(I: Sequence[Poly]) -> FrobeniusData:
    """Map each irreducible factor to the decreasing exponents it carries in I."""
    I = _as_chain(I)
    exps: dict[Poly, list[int]] = {}
    for p in I:
        for phi, e in factor(p):
            exps.setdefault(phi, []).append(e)
    return {phi: Partition(sorted(es, reverse=True)) for phi, es in
            sorted(exps.items(), key=lambda t: t[0].sort_key())}


def frobenius_to_invariant_factors(data: FrobeniusData, F: FieldSpec | None = None) -> InvariantFactors:
    if not data:
        return InvariantFactors()
    r = max(len(mu) for mu in data.values())
    if any(not mu for mu in data.values()):
        raise InvalidChain("empty partition in Frobenius data")
    F = F or next(iter(data)).field
    polys = []
    for j in range(r - 1, -1, -1):
        p = Poly.const(F, 1)
        for phi, mu in data.items():
            if j < len(mu):
                p = p * phi ** mu[j]
        polys.append(p)
    return InvariantFactors(polys)


# -- Hall's formula -----------------------------------------------------------------

def _b_mu(mu: Partition, Q: int) -> Fraction:
    """Q^(sum mu'_i^2) * prod_i prod_{k=1}^{m_i} (1 - Q^-k)."""
    out = Fraction(Q ** sum(c * c for c in mu.conjugate()))
    for m in mu.multiplicities().values():
        for k in range(1, m + 1):
            out *= 1 - Fraction(1, Q ** k)
    return out


def hall_class_size(I: Sequence[Poly], q: int) -> int:
    """Number of d x d matrices over GF(q) with invariant factors I.

    The empty chain (d = 0) counts the single empty operator.
    """
    I = _as_chain(I)
    if I and I[0].field.q != q:
        raise InvalidChain(f"invariant factors are over GF({I[0].field.q}), not GF({q})")
    if not I:
        return 1
    centralizer = Fraction(1)
    for phi, mu in invariant_factors_to_frobenius(I).items():
        centralizer *= _b_mu(mu, q ** phi.degree)
    size = Fraction(gamma(I.degree, q)) / centralizer
    assert size.denominator == 1, "Hall formula produced a non-integer"
    return int(size)


# -- label validation ---------------------------------------------------------------

def validate_label(lam, I, n: int, k: int | None = None):
    """Shared preconditions; returns (lambda, I, d, k)."""
    try:
        lam = Partition(lam)
        I = _as_chain(I)
    except (ValueError, TypeError) as exc:
        raise BadLabel(str(exc)) from exc
    d = I.degree
    if n < 0 or lam.size + d != n:
        raise BadLabel(f"|lambda| + deg I = {lam.size} + {d} != n = {n}")
    k_label = n - lam.part(1)
    if k is not None and k != k_label:
        raise BadLabel(f"lambda_1 = {lam.part(1)} but n - k = {n - k}")
    if d > k_label:
        raise BadLabel(f"deg I = {d} exceeds the domain dimension {k_label}")
    return lam, I, d, k_label


# -- simple maps --------------------------------------------------------------------

def sigma(lam: Sequence[int], n: int, q: int) -> int:
    """Simple maps with defect dimensions lam on a fixed domain of dim n - lam_1."""
    lam = Partition(lam)
    if not lam:
        return 1
    if lam.size != n:
        raise BadLabel(f"sigma needs a partition of n={n}, got {lam}")
    out = q ** sum(p * p for p in lam[1:]) * gamma(n - lam[0], q)
    parts = list(lam) + [0]
    for a, b in zip(parts, parts[1:]):
        out *= q_binomial_at(a, b, q)
    return out


def count_simple_class(lam: Sequence[int], n: int, q: int) -> int:
    """|C(lam, ∅)| over all domains, from the q-multinomial form."""
    lam = Partition(lam)
    if lam.size != n:
        raise BadLabel(f"need a partition of n={n}, got {lam}")
    if not lam:
        return 1
    parts = [n - lam[0]] + [a - b for a, b in zip(lam, lam[1:])] + [lam[-1]]
    return q ** sum(p * p for p in lam[1:]) * q_multinomial(n, parts)(q) * gamma(n - lam[0], q)


def count_simple_fixed_domain(n: int, k: int, q: int) -> int:
    """Simple maps on a fixed proper k-dimensional subspace: prod_{i=1}^k (q^n - q^i)."""
    if not 0 <= k < n:
        raise BadDimensions(f"need 0 <= k < n, got k={k}, n={n}")
    out = 1
    for i in range(1, k + 1):
        out *= q ** n - q ** i
    return out


# -- general maps ---------------------------------------------------------------------

def count_extensions(d: int, k: int, q: int) -> int:
    """Maps on a k-dim domain with prescribed operator part (dim d) and simple part."""
    if not 0 <= d <= k:
        raise BadDimensions(f"need 0 <= d <= k, got d={d}, k={k}")
    return q ** (d * (k - d))


def count_with_fixed_invariant_subspace(lam, I, n: int, k: int, q: int) -> int:
    lam, I, d, k = validate_label(lam, I, n, k)
    return q ** (d * (k - d)) * hall_class_size(I, q) * sigma(lam, n - d, q)


def count_class_fixed_domain(lam, I, n: int, k: int, q: int) -> int:
    lam, I, d, k = validate_label(lam, I, n, k)
    return q_binomial_at(k, d, q) * count_with_fixed_invariant_subspace(lam, I, n, k, q)


def count_class(lam, I, n: int, q: int) -> int:
    """Total size of the similarity class (lam, I) among all maps on subspaces of GF(q)^n."""
    lam, I, d, k = validate_label(lam, I, n)
    return q_binomial_at(n, k, q) * count_class_fixed_domain(lam, I, n, k, q)


def count_label(label: SimilarityLabel, q: int) -> int:
    return count_class(label.lam, label.inv_factors, label.n, q)


def count_operator_part_class(I, n: int, k: int, q: int) -> int:
    """Maps on a fixed k-dim domain whose operator part has invariant factors I."""
    I = _as_chain(I)
    d = I.degree
    if not 0 <= d <= k <= n:
        raise BadLabel(f"need deg I <= k <= n, got d={d}, k={k}, n={n}")
    out = q_binomial_at(k, d, q) * hall_class_size(I, q)
    for i in range(d + 1, k + 1):
        out *= q ** n - q ** i
    return out


# -- subspace combinatorics -----------------------------------------------------------

def count_subspaces_with_intersection(n: int, k: int, d: int, q: int) -> int:
    """k-dim subspaces meeting a fixed k-dim W exactly in a fixed d-dim U ⊆ W."""
    if not 0 <= d <= k <= n:
        raise BadDimensions(f"need 0 <= d <= k <= n, got n={n}, k={k}, d={d}")
    return q_binomial_at(n - k, k - d, q) * q ** ((k - d) ** 2)


def count_flags(n: int, dims: Sequence[int], q: int) -> int:
    """Flags 0 ⊂ W_1 ⊂ ... ⊂ W_r = V with dim W_i - dim W_{i-1} = dims[i-1]."""
    dims = list(dims)
    if not dims or any(m < 1 for m in dims) or sum(dims) != n:
        raise BadDimensions(f"flag steps {dims} must be positive and sum to {n}")
    return q_multinomial(n, dims)(q)


def total_partial_maps(n: int, q: int) -> int:
    """|union of L(W, V)| = sum_k [n, k]_q q^(nk)."""
    return sum(q_binomial_at(n, k, q) * q ** (n * k) for k in range(n + 1))


# -- label enumeration --------------------------------------------------------------

def _frobenius_assignments(irreds: Sequence[Poly], degree: int) -> Iterator[dict]:
    if degree == 0:
        yield {}
        return
    if not irreds:
        return
    phi, rest = irreds[0], irreds[1:]
    if phi.degree > degree:
        # irreducibles are sorted by degree
        return
    for size in range(degree // phi.degree, -1, -1):
        for mu in (partitions_of(size) if size else [Partition()]):
            for tail in _frobenius_assignments(rest, degree - size * phi.degree):
                if mu:
                    yield {phi: mu, **tail}
                else:
                    yield tail


def enumerate_invariant_factor_chains(F: FieldSpec, d: int) -> list[InvariantFactors]:
    """Every divisibility chain of total degree d over F."""
    if d == 0:
        return [InvariantFactors()]
    irreds = enumerate_monic_irreducibles(F, d)
    return [frobenius_to_invariant_factors(a, F) for a in _frobenius_assignments(irreds, d)]


def enumerate_labels(n: int, q: int) -> Iterator[SimilarityLabel]:
    """All similarity labels for GF(q)^n, by increasing d = deg I."""
    F = make_field(q)
    for d in range(n + 1):
        chains = enumerate_invariant_factor_chains(F, d)
        for lam in partitions_of(n - d):
            for I in chains:
                yield SimilarityLabel(lam, I, n)


def labels_with_sizes(n: int, q: int) -> Iterable[tuple[SimilarityLabel, int]]:
    for label in enumerate_labels(n, q):
        yield label, count_label(label, q)
