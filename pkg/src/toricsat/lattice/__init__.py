"""Exact lattice, cone and semigroup computations over the rationals."""

from .linalg import det_bareiss, hnf, hnf_basis, rank
from .membership import (
    SemigroupSolver,
    cone_membership,
    lattice_membership,
    reduce_to_independent_support,
    semigroup_membership,
)
from .saturation import SaturationEngine, SaturationVerdict, enumerate_parallelepiped_points, is_saturated
from .vectors import CombinationCertificate, GeneratorSet, QVector

__all__ = [
    "CombinationCertificate",
    "GeneratorSet",
    "QVector",
    "SaturationEngine",
    "SaturationVerdict",
    "SemigroupSolver",
    "cone_membership",
    "det_bareiss",
    "enumerate_parallelepiped_points",
    "hnf",
    "hnf_basis",
    "is_saturated",
    "lattice_membership",
    "rank",
    "reduce_to_independent_support",
    "semigroup_membership",
]
