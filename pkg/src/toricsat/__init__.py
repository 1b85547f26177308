"""Exact saturation tests and normality of torus orbit closures in SL(n)-modules."""

from __future__ import annotations

from .certificate import DiscriminatingFunction, EnssCertificate
from .classifier import ClassificationVerdict, check_all_subsets, classify, verify_main_theorem
from .errors import CertificateError, InputError, ResourceLimitError, RoutingError, SaturatedCase, ToricSatError
from .lattice import GeneratorSet, QVector, is_saturated
from .weights import QuasiWeight, UsualWeight, fundamental_weight, weight_system

__version__ = "0.1.0"

__all__ = [
    "CertificateError",
    "ClassificationVerdict",
    "DiscriminatingFunction",
    "EnssCertificate",
    "GeneratorSet",
    "InputError",
    "QVector",
    "QuasiWeight",
    "ResourceLimitError",
    "RoutingError",
    "SaturatedCase",
    "ToricSatError",
    "UsualWeight",
    "check_all_subsets",
    "classify",
    "fundamental_weight",
    "is_saturated",
    "verify_main_theorem",
    "weight_system",
]
