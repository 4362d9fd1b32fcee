"""Adams operations on twisted K-theory of compact Lie groups, via Verlinde algebras."""

from .adams import adams_coefficient, adams_equivariant, forgetful, negative_twist_iso
from .koszul import (
    KoszulContext,
    adams_on_generators,
    eta_basis,
    express_in_ideal,
    koszul_homology,
    lift_chain_map,
)
from .repring import RepRingElement, multiply, tensor_decompose, weight_multiplicities, weyl_dimension
from .rootsys import LieType, RootSystem, build_root_system, dominant_reduce_shifted, dual_weight, inner
from .torus import TorusClass, canonical_coset, invert_restrict, restrict, torus_adams
from .verlinde import (
    TwistedContext,
    VerlindeClass,
    alcove_reduce,
    c_invariant,
    fusion_multiply,
    ideal_generators,
    level_weights,
    pushforward,
)

__version__ = "0.1.0"
