"""Characters, filtrations and explicit realizations of sl2[t]-modules."""

from .filtration import Basis, FiltMultiplicity, peel, tensor_weyl_mult
from .gradedchar import (
    GradedChar,
    gchar_dual,
    gchar_tau,
    gchar_tensor,
    gchar_tilting,
    gchar_wedge_w1,
    gchar_weyl_global,
    gchar_weyl_local,
)
from .qseries import TruncSeries, WindowError, poch_inv, poch_poly, q_binom, q_int
from .sl2char import NotACharacter, Sl2Char, decompose

__all__ = [
    "Basis", "FiltMultiplicity", "GradedChar", "NotACharacter", "Sl2Char",
    "TruncSeries", "WindowError", "decompose", "gchar_dual", "gchar_tau",
    "gchar_tensor", "gchar_tilting", "gchar_wedge_w1", "gchar_weyl_global",
    "gchar_weyl_local", "peel", "poch_inv", "poch_poly", "q_binom", "q_int",
    "tensor_weyl_mult",
]
