"""Exact q-series computations for k-rank moments, their mock Eisenstein
series, and the formal identities tying them together."""

from .bernoulli import bernoulli, bernoulli_poly
from .functions import (
    MomentSeries,
    crank_moment,
    divisor_like_sum,
    eisenstein,
    krank_count_series,
    multisum_count_table,
    rank_moment,
    theta_deriv,
    theta_series,
)
from .mock import (
    MockFamily,
    crank_trace_residuals,
    eisenstein_members,
    integrality_check,
    leading_pattern_check,
    mock_eisenstein_family,
    partition_trace,
    phi_weight,
    psi_weight,
    trace_identity_residuals,
)
from .partitions import (
    PARTITION_CEILING,
    CountTable,
    count_table,
    crank,
    durfee_sizes,
    k_rank,
    partitions_of,
    rank,
)
from .pde import appell5_jet, heat_operator, pde_residual, theta_ode_residual
from .qseries import QSeries, euler_product, partition_series, q_pochhammer
from .wjets import WJet, build_jet, jet_exp, jet_log

__version__ = "0.1.0"
