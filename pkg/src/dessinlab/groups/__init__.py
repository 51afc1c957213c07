from .base import DEFAULT_CAP, Group
from .indexed import IndexedGroup
from .matrix import ProjectiveSL2Group, SigmaL2Group, SL2Group, sl2_from_q
from .models import (AffineGroup, CyclicGroup, DirectProductGroup, PermutationGroup,
                     QuaternionGroup, WreathGroup, alternating_group_a5,
                     perm_from_cycles)
from .ops import (ElementSet, NormalSubgroup, QuotientGroup, center, conjugacy_class,
                  conjugacy_class_reps, cyclic_intersection_size, cyclic_normal_subgroup,
                  cyclic_subgroup, element_order, extend_generator_map,
                  generated_subgroup, intersection_size_with, is_generating_pair,
                  is_minimal_normal, normal_closure, normal_subgroup, quotient_group,
                  translation_subgroup, trivial_subgroup, whole_group, wreath_base)

__all__ = [
    "DEFAULT_CAP", "Group", "IndexedGroup",
    "SL2Group", "ProjectiveSL2Group", "SigmaL2Group", "sl2_from_q",
    "AffineGroup", "CyclicGroup", "DirectProductGroup", "PermutationGroup",
    "QuaternionGroup", "WreathGroup", "alternating_group_a5", "perm_from_cycles",
    "ElementSet", "NormalSubgroup", "QuotientGroup", "center", "conjugacy_class",
    "conjugacy_class_reps", "cyclic_intersection_size", "cyclic_normal_subgroup",
    "cyclic_subgroup", "element_order", "extend_generator_map", "generated_subgroup",
    "intersection_size_with", "is_generating_pair", "is_minimal_normal",
    "normal_closure", "normal_subgroup", "quotient_group", "translation_subgroup",
    "trivial_subgroup", "whole_group", "wreath_base",
]
