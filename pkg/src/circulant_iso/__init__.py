"""Exact-arithmetic toolkit for Type-1/Type-2 isomorphism of circulant graphs."""

from .circulant import (CirculantGraph, JumpSet, build, gcd_signature,
                        mirror_class_check, periodic_cycles, symmetric, to_dot)
from .census import (CensusReport, MinimalCensus, enumerate_jump_sets, load,
                     minimal_census, persist, run_census)
from .families import (FamilyPair, corollary_2n, family_42, family_43,
                       necessary_conditions_48, shift_identities_check)
from .modarith import cube_divisors, reflexive_reduce, symmetric_closure, units
from .oracle import brute_force_isomorphic, verify_map
from .render import frame_svg, render_frames
from .type1 import compose_check, is_type1_pair, multiply, type1_orbit
from .type2 import (Classification, ThetaParams, classify_pair, mu_affine,
                    theta_affine, theta_map, theta_multi, theta_point,
                    theta_set, type2_set, v_set)

__all__ = [
    "CensusReport", "CirculantGraph", "Classification", "FamilyPair",
    "JumpSet", "ThetaParams", "brute_force_isomorphic", "build",
    "classify_pair", "compose_check", "corollary_2n", "cube_divisors",
    "enumerate_jump_sets", "family_42", "family_43", "frame_svg",
    "gcd_signature", "is_type1_pair", "load", "minimal_census",
    "mirror_class_check", "MinimalCensus",
    "mu_affine", "multiply", "necessary_conditions_48", "periodic_cycles",
    "persist", "reflexive_reduce", "render_frames", "run_census",
    "shift_identities_check", "symmetric", "symmetric_closure", "theta_affine",
    "theta_map", "theta_multi", "theta_point", "theta_set", "to_dot",
    "type1_orbit", "type2_set", "units", "v_set", "verify_map",
]

__version__ = "0.1.0"
