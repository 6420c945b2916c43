"""Fusion systems, stable sets and characteristic bisets for finite p-groups."""

from .bisets import (
    Biset,
    OrbitType,
    biset_of_group,
    brute_fixed_count,
    canonical_orbit_type,
    decompose_biset,
    is_characteristic,
    is_semicharacteristic,
    lambda_f,
    minimal_characteristic_biset,
    n_phi_psi,
    omega_basis_element,
    orbit_fixed_count,
    twisted_conjugate,
)
from .centric import centric_minimal, is_centric, nonextendable_classes, truncate_centric
from .constructions import build_group, cyclic, dihedral, direct_product, quaternion, semidirect_product
from .constructions import alternating, permutation_group, symmetric
from .errors import (
    CapExceeded,
    FusebisetError,
    GroupSpecError,
    InternalCheckFailed,
    NegativeCoefficient,
    NonIntegerCoefficient,
    NotAHomomorphism,
    NotInFusionSystem,
    NotSemicharacteristic,
    NotStable,
    StabilizationError,
)
from .fusion import (
    FusionSystem,
    extender,
    f_classes,
    fusion_isomorphism,
    fusion_of_group,
    generate_fusion,
    is_saturated,
    normalizer_map_check,
)
from .groups import FiniteGroup, GroupMap, Subgroup, all_subgroups, sylow_p
from .knorm import (
    AutSubgroup,
    PointBiset,
    is_fully_k_normalized,
    k_normalizer_fusion,
    n_omega_k,
    n_s_k,
    verify_k_normalizer_theorems,
)
from .models import is_constrained, is_model, op_fusion, verify_model_theorem
from .stable import SSet, basis_element, decompose, is_f_stable, orbit_fixed_points

__version__ = "0.1.0"

__all__ = [
    "AutSubgroup",
    "Biset",
    "CapExceeded",
    "FiniteGroup",
    "FusebisetError",
    "FusionSystem",
    "GroupMap",
    "GroupSpecError",
    "InternalCheckFailed",
    "NegativeCoefficient",
    "NonIntegerCoefficient",
    "NotAHomomorphism",
    "NotInFusionSystem",
    "NotSemicharacteristic",
    "NotStable",
    "OrbitType",
    "PointBiset",
    "SSet",
    "StabilizationError",
    "Subgroup",
    "all_subgroups",
    "alternating",
    "basis_element",
    "biset_of_group",
    "brute_fixed_count",
    "build_group",
    "canonical_orbit_type",
    "centric_minimal",
    "cyclic",
    "decompose",
    "decompose_biset",
    "dihedral",
    "direct_product",
    "extender",
    "f_classes",
    "fusion_isomorphism",
    "fusion_of_group",
    "generate_fusion",
    "is_centric",
    "is_characteristic",
    "is_constrained",
    "is_f_stable",
    "is_fully_k_normalized",
    "is_model",
    "is_saturated",
    "is_semicharacteristic",
    "k_normalizer_fusion",
    "lambda_f",
    "minimal_characteristic_biset",
    "n_omega_k",
    "n_phi_psi",
    "n_s_k",
    "nonextendable_classes",
    "normalizer_map_check",
    "omega_basis_element",
    "op_fusion",
    "orbit_fixed_count",
    "orbit_fixed_points",
    "permutation_group",
    "quaternion",
    "semidirect_product",
    "sylow_p",
    "symmetric",
    "truncate_centric",
    "twisted_conjugate",
    "verify_k_normalizer_theorems",
    "verify_model_theorem",
]
