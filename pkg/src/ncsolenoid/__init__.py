"""Exact invariants of noncommutative solenoids C*(Z[1/p]^2, Psi_alpha)."""

from .classify import Isomorphic, NotIsomorphic, Unknown, isomorphic, verify_witness
from .ktheory import (
    K0Element,
    k0_add,
    k0_neg,
    k0_trace,
    k0_zero,
    k1_descriptor,
    range_contains,
    schur_cohomologous,
    trace_range,
    xi_J,
)
from .morita import (
    LatticeSpec,
    MPoint,
    PerpSpec,
    eta,
    induced_alpha,
    iota,
    perp,
    perp_beta,
    perp_element,
    rho,
    trace_scaling_check,
    winding_pi,
)
from .solenoid import Full, TraceCount, Trivial, is_simple, psi, symmetrizer, trace_count
from .xi import Aperiodic, Periodic, XiSequence, detect_periodicity, from_values, reflect

__version__ = "0.1.0"
