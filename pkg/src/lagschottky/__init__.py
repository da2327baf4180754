"""Schottky groups on the Lagrangian Grassmannian of R^{2n}.

The partial cyclic order on Lag(2n) given by the Maslov index, ping-pong
validation of Schottky data, limit maps with contraction bounds, and explicit
fundamental domains in RP^{2n-1}.
"""

from .backend import USING_NUMBA
from .numkit import Signature, rank, signature, sym_eig
from .pco import (
    PcoModel,
    axiom_check,
    circle_model,
    integer_wrap_model,
    interval_contains,
    is_cycle,
    is_increasing_sequence,
    torus_model,
    triple,
)
from .symplectic import (
    Lagrangian,
    SymplecticMap,
    bform,
    chart_to_lagrangian,
    complete_positive_line,
    cyclic_lag,
    grassmann_gap,
    interval_distance,
    is_transverse,
    lagrangian_from_matrix,
    lagrangian_to_chart,
    maslov,
    maslov_via_chart,
    omega,
    reflection,
)
from .schottky import (
    CircleModel,
    ReducedWord,
    SchottkyData,
    act,
    basepoint,
    contraction_constant,
    embed_diagonal_sl2,
    enumerate_words,
    eta,
    limit_set,
    ping_pong_check,
    sp4_schottky_example,
    validate,
    word_interval,
    xi_endpoints,
)
from .domains import (
    FundamentalDomain,
    Halfspace,
    classify,
    descend,
    fundamental_domain,
    halfspace,
    halfspace_contains,
    legendrian_export,
    quadric_export,
)

__version__ = "0.1.0"
