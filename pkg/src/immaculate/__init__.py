"""Exact NSym/QSym computations with immaculate and dual immaculate bases."""

from .compositions import (
    Composition,
    DescentSet,
    IntVector,
    comp,
    compositions_of,
    descent_set,
    neg,
    refines,
    sgn,
    sort_to_partition,
    subset_to_composition,
    tail,
)
from .config import DegreeCapError, settings
from .kernel import BasisElement, LinComb
from .nsym import H, Imm, H_to_immaculate, immaculate_to_H, TransitionCache
from .pieri import (
    coeff,
    dual_pieri,
    enumerate_Z,
    enumerate_Z_gamma,
    is_in_Z,
    left_pieri,
    partition_skew,
    skew_fundamental,
    skew_pieri_raw,
    transfer_check,
)
from .qsym import F, M, dual_immaculate_to_M, M_to_dual_immaculate

__version__ = "0.1.0"
