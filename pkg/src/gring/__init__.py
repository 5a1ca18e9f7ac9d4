"""gring: decomposition of modular group rings Z_nG (gcd(n, |G|) = 1) into
matrix rings over Galois rings, with explicit unit-group generators."""

from .closure import backend_name
from .decomp import (
    Component,
    Decomposition,
    abelian_decompose,
    component_embed,
    crt_split,
    decompose,
    decompose_all,
    decomposition_report,
    symmetric_decompose,
    verify_decomposition,
)
from .galois import GaloisRing, GrElem, canonical_ring
from .groups import FiniteGroup, Subgroup, build_group
from .groupring import GroupRing, GroupRingElem, nilpotency_index, unit_order
from .modring import NotAUnit, Poly, PrimePower, find_basic_irreducible
from .shoda import NotStronglyMonomial, ShodaData, strong_shoda_pairs
from .units import (
    MatrixUnitKit,
    UnitGenerator,
    unit_group_generators,
    z2r_c5_fixture,
)

__version__ = "0.1.0"

__all__ = [
    "Component",
    "Decomposition",
    "FiniteGroup",
    "GaloisRing",
    "GrElem",
    "GroupRing",
    "GroupRingElem",
    "MatrixUnitKit",
    "NotAUnit",
    "NotStronglyMonomial",
    "Poly",
    "PrimePower",
    "ShodaData",
    "Subgroup",
    "UnitGenerator",
    "abelian_decompose",
    "backend_name",
    "build_group",
    "canonical_ring",
    "component_embed",
    "crt_split",
    "decompose",
    "decompose_all",
    "decomposition_report",
    "find_basic_irreducible",
    "nilpotency_index",
    "strong_shoda_pairs",
    "symmetric_decompose",
    "unit_group_generators",
    "unit_order",
    "verify_decomposition",
    "z2r_c5_fixture",
]
