"""
Knotoid diagrams on the sphere: invariants, moves, operations and heights
"""
__version__ = "0.1.0"

from .diagram import KnotoidMap, ShortcutMap, MultiShortcutMap, KnotMap, MapBuilder, parse, serialize, load
from .errors import (KnotoidGenericError, KnotoidParseError, KnotoidValidationError, KnotoidArityError,
                     KnotoidMoveError, KnotoidBudgetError, KnotoidConsistencyError)
from .laurent import Laurent1, Laurent2
from .seqcalc import SignSequence
from .invariants import (index_polynomial, affine_index_polynomial, n_writhes, bracket, normalized_bracket,
                         turaev_polynomial, normalized_turaev, height_lower_bounds, invariant_report)
from .moves import enumerate_moves, apply_move, explore, certify_heights
from .ops import involution, product, closure, lift_cover, stabilize
from .fixtures import load_fixture, fixture_names

__all__ = [
    "KnotoidMap",
    "ShortcutMap",
    "MultiShortcutMap",
    "KnotMap",
    "MapBuilder",
    "parse",
    "serialize",
    "load",
    "KnotoidGenericError",
    "KnotoidParseError",
    "KnotoidValidationError",
    "KnotoidArityError",
    "KnotoidMoveError",
    "KnotoidBudgetError",
    "KnotoidConsistencyError",
    "Laurent1",
    "Laurent2",
    "SignSequence",
    "index_polynomial",
    "affine_index_polynomial",
    "n_writhes",
    "bracket",
    "normalized_bracket",
    "turaev_polynomial",
    "normalized_turaev",
    "height_lower_bounds",
    "invariant_report",
    "enumerate_moves",
    "apply_move",
    "explore",
    "certify_heights",
    "involution",
    "product",
    "closure",
    "lift_cover",
    "stabilize",
    "load_fixture",
    "fixture_names",
]
