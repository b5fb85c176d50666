"""grouforge: finite group presentations, permutation machinery, and a
verification harness for a catalog of small-group constructions."""

from .words import Word
from .parser import Presentation, parse_presentation, serialize
from .coset import CapacityExceeded, CosetTable, NotFaithful, enumerate_cosets, realize, to_perm_group
from .perm import Permutation, PermGroup
from .structure import ClassOrderStructure, class_order_structure, conjugacy_classes, center, fingerprint
from .constructors import (ActionSpec, CentralSubstitution, GF2Matrix, OrderCollapse,
                           direct_product, matrix_action_extension, nonsplit_extension,
                           split_extension)
from .autos import (AutBoundExceeded, AutGroup, Automorphism, TowerReport,
                    automorphism_group, automorphism_tower, inner_automorphisms,
                    is_complete, odd_order_automorphisms, outer_order)
from .iso import IsoVerdict, dedup, is_isomorphic

__all__ = [
    "Word", "Presentation", "parse_presentation", "serialize",
    "CapacityExceeded", "NotFaithful", "CosetTable", "enumerate_cosets",
    "realize", "to_perm_group", "Permutation", "PermGroup",
    "ClassOrderStructure", "class_order_structure", "conjugacy_classes",
    "center", "fingerprint",
    "ActionSpec", "CentralSubstitution", "GF2Matrix", "OrderCollapse",
    "direct_product", "matrix_action_extension", "nonsplit_extension",
    "split_extension",
    "AutBoundExceeded", "AutGroup", "Automorphism", "TowerReport",
    "automorphism_group", "automorphism_tower", "inner_automorphisms",
    "is_complete", "odd_order_automorphisms", "outer_order",
    "IsoVerdict", "dedup", "is_isomorphic",
]

__version__ = "0.1.0"
