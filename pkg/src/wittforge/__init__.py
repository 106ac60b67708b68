"""Witt groups of metric groups, central charges and fusion-ring dimensions."""
from .abelian import FiniteAbelianGroup, GroupMap, Subgroup, quotient, smith_normal_form, subgroup_generated
from .affine import (
    LevelledAlgebra,
    SimpleLieType,
    central_charge,
    parse_algebra,
    parse_relation,
    plus_sector_charge,
    relation_charge,
    virasoro_charge,
)
from .charge import CentralCharge, additive_charge, gauss_sum, multiplicative_charge
from .errors import (
    ArgumentError,
    InconsistentRingError,
    NotAQuadraticFormError,
    ParseError,
    PreconditionError,
    TooLargeError,
    WittForgeError,
)
from .fusionring import FusionRing, fibonacci, fpdims, ising, pointed_ring, product_ring, verlinde_sl2
from .qform import PreMetricGroup, cyclic, direct_sum, from_gram, from_table, isometric, m_subquotient
from .suite import sl2_suite
from .tables import verify_all, verify_coset, verify_embedding
from .witt import WittClass, generated_subgroup, reduce_anisotropic, witt_class

__version__ = "0.1.0"
