"""Construction and verification of non-saturation certificates."""

from .examples import example_enss
from .fundamental import fundamental_enss, is_positive_fundamental, multiply_enss, negate_enss, step_enss
from .nonfundamental import find_special_point, fractional_coordinate_enss, good_triple, integer_coordinate_enss
from .verify import VerificationResult, check_discriminating_function, coin_representable, verify_enss

__all__ = [
    "VerificationResult",
    "check_discriminating_function",
    "coin_representable",
    "example_enss",
    "find_special_point",
    "fractional_coordinate_enss",
    "fundamental_enss",
    "good_triple",
    "integer_coordinate_enss",
    "is_positive_fundamental",
    "multiply_enss",
    "negate_enss",
    "step_enss",
    "verify_enss",
]
