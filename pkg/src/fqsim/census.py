"""Brute-force ground truth for the class-size formulas.

Every partial linear map on GF(q)^n is enumerated, labelled and bucketed;
the bucket sizes are compared against :func:`fqsim.counting.count_class`.
GL_n-orbits are computed directly to check that the label is a complete
invariant.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Sequence

from .counting import count_label, enumerate_labels, total_partial_maps
from .errors import BadDimensions, TooLarge
from .field import FieldSpec, make_field
from .invariants import InvariantFactors, SimilarityLabel, conjugate_unchecked, similarity_label
from .linalg import Matrix, PartialLinearMap, Subspace, enumerate_subspaces, mat_mul, subspace_intersection
from .poly import Poly
from .qanalogs import Partition, gamma, q_binomial_at

DEFAULT_BUDGET = 10 ** 7
# Above this group order orbits are closed under generators instead.
FULL_GROUP_LIMIT = 10 ** 4


def default_budget() -> int:
    env = os.environ.get("FQSIM_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _check_budget(size: int, budget: int | None, what: str):
    budget = default_budget() if budget is None else budget
    if size > budget:
        raise TooLarge(f"{what} needs {size} steps, budget is {budget}")


# -- enumeration ----------------------------------------------------------------------

def _maps_on(F: FieldSpec, n: int, W: Subspace) -> Iterator[PartialLinearMap]:
    k = W.dim
    for flat in product(range(F.q), repeat=n * k):
        action = tuple(flat[i * n:(i + 1) * n] for i in range(k))
        yield PartialLinearMap(F, n, W, action)


def enumerate_partial_maps(n: int, q: int, budget: int | None = None) -> Iterator[PartialLinearMap]:
    """Every map W -> GF(q)^n, for every subspace W, exactly once."""
    _check_budget(total_partial_maps(n, q), budget, f"enumerating maps on GF({q})^{n}")
    F = make_field(q)
    for k in range(n + 1):
        for W in enumerate_subspaces(n, k, F):
            yield from _maps_on(F, n, W)


def enumerate_gl(n: int, F: FieldSpec) -> Iterator[Matrix]:
    """All invertible n x n matrices, row by row avoiding the span so far."""
    def rows_from(prefix):
        if len(prefix) == n:
            yield prefix
            return
        span = Subspace.span(F, n, prefix)
        for v in product(range(F.q), repeat=n):
            if not span.contains(v):
                yield from rows_from(prefix + [v])

    for rows in rows_from([]):
        yield Matrix(F, tuple(tuple(r) for r in rows), n)


def gl_generators(n: int, F: FieldSpec) -> list[Matrix]:
    """Elementary transvections and one diagonal matrix carrying a primitive element."""
    gens = []
    for i in range(n):
        for j in range(n):
            if i != j:
                for a in range(1, F.q):
                    rows = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
                    rows[i][j] = a
                    gens.append(Matrix(F, tuple(map(tuple, rows)), n))
    if F.q > 2 and n > 0:
        rows = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
        rows[0][0] = F.primitive_element()
        gens.append(Matrix(F, tuple(map(tuple, rows)), n))
    return gens


# -- census ----------------------------------------------------------------------------

@dataclass
class CensusReport:
    n: int
    q: int
    buckets: dict = field(default_factory=dict)
    predicted: dict = field(default_factory=dict)
    total_observed: int = 0
    total_predicted: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.total_observed == self.total_predicted == total_partial_maps(self.n, self.q)

    def entries(self):
        """(label, predicted, observed) for every predicted or observed label."""
        labels = list(self.predicted) + [lab for lab in self.buckets if lab not in self.predicted]
        for lab in labels:
            yield lab, self.predicted.get(lab, 0), self.buckets.get(lab, 0)

    def rows(self):
        """CSV rows: lambda, inv_factors, k, d, predicted, observed, match."""
        for lab, pred, obs in self.entries():
            yield (str(lab.lam), str(lab.inv_factors), lab.k, lab.d, pred, obs, pred == obs)


def _label_key(label: SimilarityLabel):
    return (tuple(label.lam), tuple(p.coeffs for p in label.inv_factors))


def _census_unit(args) -> Counter:
    q, n, basis, pivots = args
    F = make_field(q)
    W = Subspace(F, n, basis, pivots)
    counts: Counter = Counter()
    for T in _maps_on(F, n, W):
        counts[_label_key(similarity_label(T))] += 1
    return counts


def run_census(n: int, q: int, budget: int | None = None, workers: int = 1) -> CensusReport:
    """Bucket every partial map by label and compare with the predicted sizes.

    Work is split into (k, W) units; per-unit tables are summed, so the
    result does not depend on scheduling.
    """
    _check_budget(total_partial_maps(n, q), budget, f"census of GF({q})^{n}")
    F = make_field(q)
    units = [(q, n, W.basis, W.pivots) for k in range(n + 1) for W in enumerate_subspaces(n, k, F)]
    total: Counter = Counter()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for c in pool.map(_census_unit, units, chunksize=max(1, len(units) // (4 * workers))):
                total.update(c)
    else:
        for u in units:
            total.update(_census_unit(u))

    report = CensusReport(n, q)
    for label in enumerate_labels(n, q):
        report.predicted[label] = count_label(label, q)
    order = {_label_key(lab): lab for lab in report.predicted}
    for key in sorted(total, key=lambda k: (k not in order, str(k))):
        lab = order.get(key)
        if lab is None:
            lam, coeffs = key
            lab = SimilarityLabel(Partition(lam), InvariantFactors(Poly(F, c) for c in coeffs), n)
        report.buckets[lab] = total[key]
    report.total_observed = sum(report.buckets.values())
    report.total_predicted = sum(report.predicted.values())
    report.mismatches = [(lab, obs, pred) for lab, pred, obs in report.entries() if pred != obs]
    return report


# -- orbits -------------------------------------------------------------------------------

def _orbit_full(T: PartialLinearMap, group: Sequence[Matrix]) -> set:
    return {conjugate_unchecked(T, S.rows).key() for S in group}


def _orbit_closure(start, step, gens) -> set:
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = step(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def orbit_check(n: int, q: int, budget: int | None = None) -> bool:
    """True iff every GL_n-orbit of partial maps is exactly one label bucket."""
    F = make_field(q)
    order = gamma(n, q)
    _check_budget(order * total_partial_maps(n, q), budget, f"orbit check on GF({q})^{n}")
    maps = {}
    buckets: dict[SimilarityLabel, set] = {}
    for T in enumerate_partial_maps(n, q, budget=budget):
        lab = similarity_label(T)
        maps[T.key()] = (T, lab)
        buckets.setdefault(lab, set()).add(T.key())

    if order <= FULL_GROUP_LIMIT:
        group = list(enumerate_gl(n, F))

        def orbit(T):
            return _orbit_full(T, group)
    else:
        gens = [g.rows for g in gl_generators(n, F)]

        def orbit(T):
            def step(key, g):
                return conjugate_unchecked(maps[key][0], g).key()
            return _orbit_closure(T.key(), step, gens)

    covered: set = set()
    for key, (T, lab) in maps.items():
        if key in covered:
            continue
        orb = orbit(T)
        if orb != buckets[lab]:
            return False
        covered |= orb
    return len(covered) == len(maps)


def brute_conjugacy_class_size(A: Matrix, budget: int | None = None) -> int:
    """Size of {S A S^-1 : S in GL_n} by direct orbit computation."""
    if not A.is_square():
        raise BadDimensions("conjugacy class of a non-square matrix")
    F, n = A.field, A.nrows
    order = gamma(n, F.q)
    _check_budget(order, budget, "conjugacy orbit")
    if order <= FULL_GROUP_LIMIT:
        return len({(S @ A @ S.inverse()).rows for S in enumerate_gl(n, F)})
    pairs = [(g.rows, g.inverse().rows) for g in gl_generators(n, F)]

    def step(rows, gp):
        g, ginv = gp
        return tuple(tuple(r) for r in mat_mul(F, mat_mul(F, g, rows, n), ginv, n))

    return len(_orbit_closure(A.rows, step, pairs))


# -- subspace lemmas by exhaustion -------------------------------------------------

def _coordinate_subspace(F: FieldSpec, n: int, k: int) -> Subspace:
    return Subspace.span(F, n, [[1 if j == i else 0 for j in range(n)] for i in range(k)])


def brute_intersection_count(n: int, k: int, d: int, q: int, budget: int | None = None) -> int:
    """Scan k-dim subspaces W' with W ∩ W' = U for W = <e_1..e_k>, U = <e_1..e_d>."""
    if not 0 <= d <= k <= n:
        raise BadDimensions(f"need 0 <= d <= k <= n, got n={n}, k={k}, d={d}")
    _check_budget(q_binomial_at(n, k, q), budget, "intersection scan")
    F = make_field(q)
    W = _coordinate_subspace(F, n, k)
    U = _coordinate_subspace(F, n, d)
    return sum(1 for W2 in enumerate_subspaces(n, k, F) if subspace_intersection(W, W2) == U)


def brute_flag_count(n: int, dims: Sequence[int], q: int, budget: int | None = None) -> int:
    """Count flags with the given successive dimension steps by chaining subspaces."""
    dims = list(dims)
    if not dims or any(m < 1 for m in dims) or sum(dims) != n:
        raise BadDimensions(f"flag steps {dims} must be positive and sum to {n}")
    F = make_field(q)
    _check_budget(sum(q_binomial_at(n, k, q) for k in range(n + 1)), budget, "flag scan")
    cum = []
    s = 0
    for m in dims:
        s += m
        cum.append(s)
    counts = {Subspace.zero(F, n): 1}
    for c in cum:
        layer = list(enumerate_subspaces(n, c, F))
        counts = {S: sum(v for P, v in counts.items() if P.issubspace(S)) for S in layer}
    return sum(counts.values())

