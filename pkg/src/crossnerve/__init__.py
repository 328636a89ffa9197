"""Crossed simplicial group nerves, bar constructions and their verification."""
from .analysis import HomologyGroup, burnside_count, homology, smith_normal_form
from .constructions import (
    bar_construction,
    classical_nerve,
    cyclic_nerve,
    dihedral_nerve,
    one_object_nerve,
    twisted_bar,
    twisted_categorical_nerve,
)
from .crossed import (
    CrossedMorphism,
    act_on_monotone,
    compose_crossed,
    derive_operator_exchange,
    enumerate_hom,
)
from .finite import (
    DaggerCategory,
    FinGroup,
    PreconditionError,
    center,
    check_unitarity,
    element_order,
    groupoid_from_group,
    validate_dagger,
    validate_group,
)
from .gset import TruncatedCrossedSet, orbit_set, underlying_simplicial, validate_truncation
from .simplex import MonotoneMap, compose_monotone, degeneracy, epi_mono_factor, face
from .weyl import Family, SignedPerm, closure_order, compose, generator, generator_word, inverse, member

__version__ = "0.1.0"
