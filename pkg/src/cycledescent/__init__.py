"""
Cycle-descent statistics on permutations, their sign-reversing
involutions, and the bijection with Callan perfect matchings — every
closed form and recurrence here is backed by exhaustive brute-force
checks at desk scale (see :mod:`cycledescent.verify` and the CLI).
"""

from .bijections import (
    BlockSeq,
    SignedPermutation,
    blocks,
    enumerate_negative_cdes,
    format_signed,
    gamma,
    gamma_inv,
    is_negative_cdes,
    parse_signed,
    theta,
    theta_inv,
)
from .involutions import (
    InvolutionOutcome,
    last_top_descent,
    m_index,
    phi_map,
    psi,
    psi_fixed_set,
    varphi,
    varphi_fixed_point,
)
from .matchings import (
    MatchStats,
    MVertex,
    PerfectMatching,
    components,
    edge_class,
    enumerate_matchings,
    is_callan,
    match_stats,
    mk_matching,
)
from .perms import (
    CycleDecomposition,
    Permutation,
    StatRecord,
    cycle_string,
    enumerate_permutations,
    hat,
    inverse,
    parse_permutation,
    red,
    standard_cycles,
    statistics,
)
from .poly import ONE, Q, T, X, Y, ZERO, MultiPoly
from .statpolys import (
    IDENTITY_IDS,
    IdentityReport,
    PolyTable,
    alternating_closed_form,
    b20_count,
    cdes_distribution_brute,
    cdes_distribution_rec,
    identity_check,
    klazar_count,
    recurrence_table,
    statistic_poly,
)
from .verify import VerificationSummary, run_verification

__version__ = "0.1.0"
