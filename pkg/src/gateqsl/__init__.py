"""Quantum speed-limit bounds for unitary gates.

Lower bounds on the time needed to enact a unitary, parameterized only
by the trace modulus of the gate and gross statistics of the generating
energy spectrum, together with the exact minimal-time machinery
(eigenphase branch enumeration) used to verify them.
"""

from .bounds import (
    ML_TRACE_FACTOR,
    BoundSet,
    TraceInput,
    UndefinedBoundError,
    bound_set,
    dual_ml_bound,
    ml_bound,
    ml_product,
    mt_bound,
    mt_product,
    state_pair_bound,
    width_bounds,
)
from .catalog import (
    MubFamily,
    QubitParams,
    QutritMubParams,
    fourier,
    gauss_trace,
    grover,
    hadamard_power,
    mub_trace_cap,
    permutation,
    prior_mub_bound,
    qubit_exact_time,
    qubit_unitary,
    qutrit_mub,
    qutrit_phase_reduce,
)
from .harness import (
    CurvePoint,
    VerificationReport,
    figure_qubit,
    figure_qubit_mub,
    figure_qutrit,
    run_random_campaign,
)
from .linalg import (
    TOL,
    ConvergenceError,
    EigenDecomposition,
    complex_matrix,
    eig_hermitian,
    eig_unitary,
    expm_hermitian_scaled,
    is_hermitian,
    is_unitary,
    matmul,
    random_unitary,
    trace_abs,
)
from .minimal_time import (
    ExactTimeProfile,
    PhaseVector,
    VerificationRecord,
    eigenphases,
    enumerate_rotations,
    verify_dominance,
)
from .spectrum import EnergySpectrum, EnergyStats, compute_stats, shift

__version__ = "0.1.0"
