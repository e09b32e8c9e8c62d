"""Finite matroids as independence oracles, their unions via exchange chains,
symbolic countable families seen through windows, and base packing/covering."""

from .axioms import AxiomReport, SetSystem, check_matroid, is_matroid
from .core import (
    GroundSet,
    Matroid,
    contract,
    direct_sum,
    dual,
    make_circuit_matroid,
    make_free,
    make_graphic,
    make_loops,
    make_uniform,
    restrict,
    same_family,
)
from .descriptors import SchemaError, matroid_from_descriptor
from .infinitary import (
    SymbolicFamily,
    demo_growth_chain,
    finitarize,
    ladder_demo,
    make_Mk,
    nearly_finitary_gap,
    window,
)
from .packing import cover_independent, forest_cover, g_c, in_I_Nkc, pack_bases, tree_pack
from .union import (
    ExchangeChain,
    Representation,
    apply_chain,
    augment,
    cochain_augment,
    k_fold_union,
    reachability,
    union_base,
    union_membership,
    validate_chain,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport", "ExchangeChain", "GroundSet", "Matroid", "Representation", "SchemaError",
    "SetSystem", "SymbolicFamily", "apply_chain", "augment", "check_matroid", "cochain_augment",
    "contract", "cover_independent", "demo_growth_chain", "direct_sum", "dual", "finitarize",
    "forest_cover", "g_c", "in_I_Nkc", "is_matroid", "k_fold_union", "ladder_demo",
    "make_Mk", "make_circuit_matroid", "make_free", "make_graphic", "make_loops", "make_uniform",
    "matroid_from_descriptor", "nearly_finitary_gap", "pack_bases", "reachability", "restrict",
    "same_family", "tree_pack", "union_base", "union_membership", "validate_chain", "window",
]
