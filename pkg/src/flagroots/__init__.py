"""Exact-arithmetic T-root systems of flag manifolds.

Painted Dynkin diagrams, projection to T-root systems, classification
invariants, isomorphism testing, and reproduction of the classification
tables for the exceptional groups.
"""

from .rootsys import (CartanType, ClassicalTRootSpec, RootSystem,
                      cartan_matrix, classical_troot_system, positive_roots)
from .painted import (IsotropyDescriptor, PaintedDiagram, enumerate_paintings,
                      format_isotropy, isotropy_descriptor, parse_painting)
from .troots import TRootSystem, g_of, module_dimension, positive_part, project
from .invariants import (ExtendedInvariants, InvariantTuple, count_chambers,
                         doubling_vertices, extended_invariants, hull_vertices,
                         invariant_tuple, proportionality_profile,
                         rank2_area_invariant)
from .isomorph import (IsomorphismWitness, SubsystemView, UndecidedBySearch,
                       b3_plus_v, complete_subsystems, find_isomorphism,
                       has_extension_property, is_closed_symmetric,
                       is_complete, is_irreducible, match_classical)
from .classify import (ClassRecord, FamilyRecord, classify_group,
                       cross_group_families, emit_table, verify_paper_claims)

__version__ = "0.1.0"

__all__ = [
    "CartanType", "ClassicalTRootSpec", "RootSystem", "cartan_matrix",
    "classical_troot_system", "positive_roots",
    "IsotropyDescriptor", "PaintedDiagram", "enumerate_paintings",
    "format_isotropy", "isotropy_descriptor", "parse_painting",
    "TRootSystem", "g_of", "module_dimension", "positive_part", "project",
    "ExtendedInvariants", "InvariantTuple", "count_chambers",
    "doubling_vertices", "extended_invariants", "hull_vertices",
    "invariant_tuple", "proportionality_profile", "rank2_area_invariant",
    "IsomorphismWitness", "SubsystemView", "UndecidedBySearch", "b3_plus_v",
    "complete_subsystems", "find_isomorphism", "has_extension_property",
    "is_closed_symmetric", "is_complete", "is_irreducible", "match_classical",
    "ClassRecord", "FamilyRecord", "classify_group", "cross_group_families",
    "emit_table", "verify_paper_claims",
]
