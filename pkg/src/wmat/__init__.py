"""Exact computations in the Hopf algebra of packed words."""

from .algebra import (
    ONE,
    ZERO,
    Element,
    Tensor,
    antipode,
    basis,
    convolve_antipode_check,
    coproduct,
    coproduct_left,
    coproduct_right,
    counit,
    delta_plus,
    mul,
    tensor_mul2,
)
from .words import factor_irreducible, is_irreducible, is_packed, pack, star

__version__ = "0.1.0"
