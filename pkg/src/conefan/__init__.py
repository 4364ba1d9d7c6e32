"""Exact fans, B-maps and freeness decisions for l-group terms."""

from .arith import primitive, smith_normal_form, extreme_rays, solve_linear
from .terms import parse_term, print_term, eval_term, linear_pieces, LGroupPresentation
from .fan import (
    Cone,
    Fan,
    cone_new,
    faces,
    membership,
    fan_from_max_cones,
    fan_validate,
    is_regular,
    stellar_subdivide,
    desingularize,
    triangulate_union,
    support_covers_space,
    witness_outside_support,
    parse_fan,
    format_fan,
)
from .bmap import BMap, linearizing_fan, bmap_eval, zeroset_fan, image_fan, compose
from .combinat import (
    abstract_complex,
    complex_isomorphic,
    synthesize_bhomeo,
    verify_bhomeo,
    decide_free,
    check_free_basis,
    search_certificate,
    BUDGET_EXHAUSTED,
)

__version__ = "0.1.0"

__all__ = [
    "primitive", "smith_normal_form", "extreme_rays", "solve_linear",
    "parse_term", "print_term", "eval_term", "linear_pieces", "LGroupPresentation",
    "Cone", "Fan", "cone_new", "faces", "membership", "fan_from_max_cones", "fan_validate",
    "is_regular", "stellar_subdivide", "desingularize", "triangulate_union",
    "support_covers_space", "witness_outside_support", "parse_fan", "format_fan",
    "BMap", "linearizing_fan", "bmap_eval", "zeroset_fan", "image_fan", "compose",
    "abstract_complex", "complex_isomorphic", "synthesize_bhomeo", "verify_bhomeo",
    "decide_free", "check_free_basis", "search_certificate", "BUDGET_EXHAUSTED",
]
