"""Hurwitz orbits of Nielsen tuples for finite permutation groups.

Classifies topological types of Galois covers of the line with a given
group and number of branch points, and computes the braid-orbit data that
governs families of such covers: stabilizer indices, the induced map to
``Aut G``, minimal extensions for centerless groups, and joins.
"""

from .classify import TypeReport, classify_types, enumerate_data, type_of
from .datum import (BranchSignature, Datum, aut_canonical, branch_signature, genus,
                    inn_canonical, parse_entries, validate)
from .errors import CapExceeded, HurwitzError, HypothesisViolation, InvalidDatum, ParseError
from .extension import (ExtensionHandle, ExtensionReport, MinimalExtension, abelian_certificate,
                        centerless_minimum, dominates, extension_report, handle, join)
from .hurwitz import BraidWord, PureGen, apply_sigma, apply_word, parse_word, pure_generators
from .kernels import BACKEND
from .orbits import (CosetAction, Mover, Orbit, SchreierGenerator, coset_action, enumerate_orbit,
                     intersect_actions, pure_movers, schreier_generators, sigma_movers)
from .perm import (GroupAutomorphism, Perm, PermGroup, automorphism_group, center, compose,
                   inner_automorphism, load_group, named_group)

__all__ = [
    "BACKEND", "BraidWord", "BranchSignature", "CapExceeded", "CosetAction", "Datum",
    "ExtensionHandle", "ExtensionReport", "GroupAutomorphism", "HurwitzError",
    "HypothesisViolation", "InvalidDatum", "MinimalExtension", "Mover", "Orbit", "ParseError",
    "Perm", "PermGroup", "PureGen", "SchreierGenerator", "TypeReport", "abelian_certificate",
    "apply_sigma", "apply_word", "aut_canonical", "automorphism_group", "branch_signature",
    "center", "centerless_minimum", "classify_types", "compose", "coset_action", "dominates",
    "enumerate_data", "enumerate_orbit", "extension_report", "genus", "handle",
    "inn_canonical", "inner_automorphism", "intersect_actions", "join", "load_group",
    "named_group", "parse_entries", "parse_word", "pure_generators", "pure_movers",
    "schreier_generators", "sigma_movers", "type_of", "validate",
]
