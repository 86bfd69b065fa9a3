"""Similarity classes of linear maps defined on subspaces of GF(q)^n."""

from .census import CensusReport, orbit_check, run_census
from .counting import (
    count_class,
    count_class_fixed_domain,
    enumerate_labels,
    hall_class_size,
    sigma,
    total_partial_maps,
)
from .field import FieldSpec, make_field
from .invariants import (
    InvariantFactors,
    SimilarityLabel,
    are_similar,
    conjugate_map,
    similarity_label,
    subspace_chain,
)
from .linalg import Matrix, PartialLinearMap, Subspace
from .poly import Poly, parse_poly
from .qanalogs import Partition, QPolynomial, q_binomial

__version__ = "0.1.0"
