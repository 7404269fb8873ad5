"""Quasi-1D wire reduction: the particle-count inequality and its regimes.

For a wire so thin that the momentum measure collapses to d^3p = sigma dp,
the fermionic particle count per particle reads

    R = (nu sigma / h^3) integral n(p) dp  ~  nu sigma z / lambda^3,

and self-consistency demands R > 1.  With a vanishing cross-section the
inequality fails, which is the contradiction the classifier turns into a
regime label.  sigma is kept dimensionless as sigma_tilde = sigma
(lambda/h)^2, which reproduces the displayed bound exactly.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from scipy.special import expit

from .errors import DomainError
from .specfun import (
    QuantumIntegralOrder,
    Statistics,
    quad_checked,
    quantum_integral,
    thermal_wavelength,
)

__all__ = [
    "WireGeometry",
    "Regime",
    "RegimeThresholds",
    "RegimeReport",
    "rhs_eq3",
    "number_integral_quasi1d",
    "classify_regime",
    "sigma_critical",
]


@dataclass(frozen=True)
class WireGeometry:
    """Dimensionless transverse cross-section; length only aids box checks."""

    sigma_tilde: float
    length_L: Optional[float] = None

    def __post_init__(self):
        if not self.sigma_tilde > 0.0:
            raise DomainError("sigma_tilde must be positive, got %r" % (self.sigma_tilde,))
        if self.length_L is not None and not self.length_L > 0.0:
            raise DomainError("length_L must be positive, got %r" % (self.length_L,))


class Regime(Enum):
    BOSONIZED = "Bosonized"
    BOSONIZED_CLASSICAL = "BosonizedClassical"
    DEGENERATE_SUB_FERMI = "DegenerateSubFermi"
    BOLTZMANN_CONVERGED = "BoltzmannConverged"


@dataclass(frozen=True)
class RegimeThresholds:
    """Classifier cut points; the defaults quantify the qualitative << and >>."""

    z_degenerate: float = 100.0
    deg_classical: float = 0.01
    sigma_thin: float = 0.1

    def __post_init__(self):
        if not (self.z_degenerate > 1.0 > self.deg_classical > 0.0):
            raise DomainError(
                "thresholds must satisfy z_degenerate > 1 > deg_classical > 0"
            )
        if not self.sigma_thin > 0.0:
            raise DomainError("sigma_thin must be positive")


@dataclass(frozen=True)
class RegimeReport:
    rhs_approx: float
    rhs_exact: float
    inequality_holds: bool
    regime: Regime
    thresholds_used: RegimeThresholds


def rhs_eq3(state, wire):
    """Approximate count bound nu*sigma*z/lambda^3 = sigma_tilde*z/(lambda^3/nu)."""
    return wire.sigma_tilde * state.z / state.degeneracy


def _occupation_of_scaled_momentum(stat, log_z):
    # occupation as a function of q with beta*eps = pi q^2 (p = (h/lambda) q)
    if stat is Statistics.FERMI_DIRAC:
        return lambda q: float(expit(log_z - math.pi * q * q))
    if stat is Statistics.BOSE_EINSTEIN:
        return lambda q: 1.0 / math.expm1(math.pi * q * q - log_z)
    return lambda q: math.exp(log_z - math.pi * q * q)


def number_integral_quasi1d(stat, state, wire):
    """Exact per-particle quasi-1D count (nu sigma/h^3) integral n(p) dp.

    Evaluated by adaptive quadrature in the scaled momentum q = p lambda/h,
    where beta eps = pi q^2; the analytic reductions are R(MB) = rhs_eq3 and
    R(FD) = nu sigma_tilde f_{1/2}(z)/lambda^3.
    """
    log_z = math.log(state.z)
    if stat is Statistics.BOSE_EINSTEIN and not state.z < 1.0:
        raise DomainError("Bose wire integral needs z < 1, got z = %r" % (state.z,))
    occ = _occupation_of_scaled_momentum(stat, log_z)
    q_max = math.sqrt((max(log_z, 0.0) + 60.0) / math.pi)

    points = None
    if stat is Statistics.FERMI_DIRAC and log_z > 45.0:
        points = [
            math.sqrt((log_z - 45.0) / math.pi),
            math.sqrt(log_z / math.pi),
            math.sqrt((log_z + 45.0) / math.pi),
        ]
    elif stat is Statistics.FERMI_DIRAC and log_z > 0.0:
        points = [math.sqrt(log_z / math.pi)]
    elif stat is Statistics.BOSE_EINSTEIN:
        scale = math.sqrt(-log_z / math.pi)
        points = [p for p in (scale, 10.0 * scale) if 0.0 < p < q_max] or None

    value, _ = quad_checked(occ, 0.0, q_max, points=points)
    return 2.0 * value * wire.sigma_tilde / state.degeneracy


def classify_regime(params, state, wire, thresholds=None):
    """Classify the wire state into one of the four regimes.

    The decision cascade, honouring the boundary-tie priority
    DegenerateSubFermi > BoltzmannConverged > BosonizedClassical >
    Bosonized:

      1. z >= z_degenerate               -> DEGENERATE_SUB_FERMI
      2. degeneracy <= deg_classical and
         rhs_approx >= 1                 -> BOLTZMANN_CONVERGED
      3. degeneracy <= deg_classical     -> BOSONIZED_CLASSICAL
      4. otherwise                       -> BOSONIZED

    params must describe the same state (wavelength and degeneracy agree to
    1e-9 relative), which guards against mixed-up inputs.
    """
    lam = thermal_wavelength(params.m, params.T, params.unit_system)
    if abs(lam - state.lam) > 1e-9 * lam:
        raise DomainError(
            "state wavelength %g inconsistent with parameters (%g)"
            % (state.lam, lam)
        )
    degeneracy = lam ** 3 / params.nu
    if abs(degeneracy - state.degeneracy) > 1e-9 * degeneracy:
        raise DomainError(
            "state degeneracy %g inconsistent with parameters (%g)"
            % (state.degeneracy, degeneracy)
        )
    if thresholds is None:
        thresholds = RegimeThresholds()

    rhs_approx = rhs_eq3(state, wire)
    rhs_exact = number_integral_quasi1d(Statistics.FERMI_DIRAC, state, wire)

    if state.z >= thresholds.z_degenerate:
        regime = Regime.DEGENERATE_SUB_FERMI
    elif state.degeneracy <= thresholds.deg_classical and rhs_approx >= 1.0:
        regime = Regime.BOLTZMANN_CONVERGED
    elif state.degeneracy <= thresholds.deg_classical:
        regime = Regime.BOSONIZED_CLASSICAL
    else:
        regime = Regime.BOSONIZED

    return RegimeReport(
        rhs_approx=rhs_approx,
        rhs_exact=rhs_exact,
        inequality_holds=rhs_approx > 1.0,
        regime=regime,
        thresholds_used=thresholds,
    )


def sigma_critical(state, stat=None):
    """Cross-section at which the count bound crosses 1.

    With the approximate bound this is lambda^3/(nu z); passing a
    Statistics instead uses the exact integral, e.g. the Fermi-Dirac value
    lambda^3/(nu f_{1/2}(z)).
    """
    if stat is None:
        return state.degeneracy / state.z
    denom = quantum_integral(stat, QuantumIntegralOrder.ONE_HALF, state.z)
    return state.degeneracy / denom
