"""Exact counting of necklaces, bracelets and decimation classes of
density vectors over finite abelian groups."""

from .adjacency import (
    AdjacencyMatrix,
    adjacency_matrix,
    circulant_invertible,
    dilation_matrix,
    integer_determinant,
    is_invertible,
    translation_matrix,
)
from .counting import (
    CountReport,
    EvenOrderWarning,
    SubgroupTally,
    bracelet_count,
    count_decimation_classes,
    cyclic_symmetric_necklace_count,
    necklace_count,
    symmetric_necklace_count,
)
from .errors import (
    DecicountError,
    EmptyMultiset,
    GroupMismatch,
    InternalConsistencyError,
    InvalidGroupSpec,
    InvalidVectorLiteral,
    NotAMultiplier,
    NotAUnit,
    NotCyclic,
    PeriodicInput,
    TooLarge,
    UnsupportedParameters,
)
from .groups import Group, GroupElement, solve_linear
from .multipliers import (
    MultiplierWitness,
    fixed_translates,
    is_translate_fixing,
    multiplier_group,
    subgroup_fixed_translates,
    translate_witness,
)
from .multisets import GroupMultiset
from .oracle import OracleReport, enumerate_multisets, orbit_census
from .orbits import OrbitProfile, count_sum_solutions, multiset_coeff, unit_orbits
from .units import (
    SubgroupLattice,
    UnitSubgroup,
    subgroup_lattice,
    totient,
    unit_group_rank,
    unit_offset_gcd,
    units,
)

__version__ = "0.1.0"

__all__ = [
    "AdjacencyMatrix",
    "CountReport",
    "DecicountError",
    "EmptyMultiset",
    "EvenOrderWarning",
    "Group",
    "GroupElement",
    "GroupMismatch",
    "GroupMultiset",
    "InternalConsistencyError",
    "InvalidGroupSpec",
    "InvalidVectorLiteral",
    "MultiplierWitness",
    "NotAMultiplier",
    "NotAUnit",
    "NotCyclic",
    "OracleReport",
    "OrbitProfile",
    "PeriodicInput",
    "SubgroupLattice",
    "SubgroupTally",
    "TooLarge",
    "UnitSubgroup",
    "UnsupportedParameters",
    "adjacency_matrix",
    "bracelet_count",
    "circulant_invertible",
    "count_decimation_classes",
    "count_sum_solutions",
    "cyclic_symmetric_necklace_count",
    "dilation_matrix",
    "enumerate_multisets",
    "fixed_translates",
    "integer_determinant",
    "is_invertible",
    "is_translate_fixing",
    "multiplier_group",
    "multiset_coeff",
    "necklace_count",
    "orbit_census",
    "solve_linear",
    "subgroup_fixed_translates",
    "subgroup_lattice",
    "symmetric_necklace_count",
    "totient",
    "translate_witness",
    "translation_matrix",
    "unit_group_rank",
    "unit_offset_gcd",
    "unit_orbits",
    "units",
]
