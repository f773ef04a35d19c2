"""Tree-pair arithmetic in Thompson's groups F and T, Jones' subgroup, and 2-cores."""
from .dyadic import DyadicRational, parse_dyadic
from .words import GroupWord, WordSyntaxError
from .treepair import (
    ArityMismatch,
    Tree,
    TreePair,
    enumerate_elements,
    equal,
    evaluate,
    from_word,
    generator,
    invert,
    multiply,
    normal_form,
    order,
    reduce,
)
from .jones import ParityClass, factorize, is_member, member_vect_bipartite, member_vect_parity
from .core2 import accepts, build_core, core_presentation
from .presentation import DihedralElement, dihedral_alpha, relation_suite, symbolic_standard_form
from .t3 import leaf_parity_report, search_torsion

__version__ = "0.1.0"
