"""Coincidence engine: structures, isometry handles, indices, enumeration."""

from .classify import CSLOrbit, classify_csls, point_group_actions
from .enumeration import RotationRecord, enumerate_rotations, parse_resume_token, rotation_counts
from .handles import IsometryHandle, Irrational, parse_isometry_matrix, parse_quotient
from .sigma import (INFINITE, CoincidenceResult, action_matrix, cayley_inverse, csl_model_basis,
                    csl_of_action, denominator, icosian_gcd_sigma, is_coincidence, module_dual_check,
                    pair_from_rotation, reflection_sigma, sigma, sigma_closed_form, sigma_of_action,
                    sigma_oracle)
from .structures import STRUCTURES, StructureSpec, get_structure, rotation_group

__all__ = [
    "CSLOrbit", "classify_csls", "point_group_actions",
    "RotationRecord", "enumerate_rotations", "parse_resume_token", "rotation_counts",
    "IsometryHandle", "Irrational", "parse_isometry_matrix", "parse_quotient",
    "INFINITE", "CoincidenceResult", "action_matrix", "cayley_inverse", "csl_model_basis",
    "csl_of_action", "denominator", "icosian_gcd_sigma", "is_coincidence", "module_dual_check",
    "pair_from_rotation", "reflection_sigma", "sigma", "sigma_closed_form", "sigma_of_action",
    "sigma_oracle", "STRUCTURES", "StructureSpec", "get_structure", "rotation_group",
]
