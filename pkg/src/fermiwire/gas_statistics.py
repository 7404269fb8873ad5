"""Occupation numbers, fugacity inversion, and the bulk Fermi scale.

The density constraint of the uniform gas is lambda^3/nu = F_{3/2}(z) with
F the statistics-appropriate occupation integral; this module inverts that
relation and exposes the zero-temperature Fermi momentum/energy built from
the same spinless mode counting, eps_F = (hbar^2/2m)(6 pi^2/nu)^(2/3).

Note the counting convention: no spin degeneracy factor is applied, so the
Fermi energy carries (6 pi^2/nu)^(2/3) rather than the electron-gas
textbook (3 pi^2 n)^(2/3).  See README for the comparison.
"""

import math
from dataclasses import dataclass, field

from scipy.special import expit

from .constants import UnitSystem, constants_for
from .errors import (
    CondensationError,
    ConvergenceError,
    DomainError,
    SingularityError,
)
from .specfun import (
    LOG_SPACE_THRESHOLD,
    QuantumIntegralOrder,
    Statistics,
    quantum_integral,
    thermal_wavelength,
)

__all__ = [
    "GasParameters",
    "ThermalState",
    "occupation",
    "solve_fugacity",
    "solve_log_fugacity",
    "solve_thermal_state",
    "fermi_momentum",
    "fermi_energy",
    "fermi_temperature",
    "ZETA_THREE_HALVES",
]

# zeta(3/2): the Bose degeneracy parameter cannot exceed this.
ZETA_THREE_HALVES = 2.612375348685488
# Sommerfeld leading coefficient 4/(3 sqrt(pi)) for the degenerate seed.
_SOMMERFELD_COEFF = 0.7522527780636751

_REL_TOL = 1e-12
_MAX_ITER = 80


@dataclass(frozen=True)
class GasParameters:
    """Thermodynamic input state: mass, temperature, specific volume V/N."""

    m: float
    T: float
    nu: float
    unit_system: UnitSystem = UnitSystem.REDUCED

    def __post_init__(self):
        for name in ("m", "T", "nu"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and value > 0.0 and math.isfinite(value)):
                raise DomainError("%s must be a positive finite number, got %r" % (name, value))

    @property
    def beta(self):
        """Inverse thermal energy 1/(k_B T); derived, never stored."""
        return 1.0 / (constants_for(self.unit_system).k_B * self.T)


@dataclass(frozen=True)
class ThermalState:
    """Solved equilibrium state: fugacity, wavelength, degeneracy lambda^3/nu."""

    z: float
    lam: float
    degeneracy: float

    def __post_init__(self):
        for name in ("z", "lam", "degeneracy"):
            value = getattr(self, name)
            if not (value > 0.0 and math.isfinite(value)):
                raise DomainError("%s must be a positive finite number, got %r" % (name, value))


def occupation(stat, z, beta, eps):
    """Mean occupation number of a level at energy eps.

    Parameters
    ----------
    stat : Statistics
    z : float
        Fugacity, > 0.
    beta : float
        Inverse thermal energy, >= 0.
    eps : float
        Level energy, >= 0.

    Returns
    -------
    float
        1/(e^w + 1), 1/(e^w - 1) or e^(-w) with w = beta*eps - ln z; the
        Fermi-Dirac value lies in (0, 1).

    Raises
    ------
    SingularityError
        For Bose-Einstein statistics with z*e^(-beta*eps) >= 1, where the
        occupation diverges (or is negative).
    """
    if not z > 0.0:
        raise DomainError("fugacity must be positive, got %r" % (z,))
    if beta < 0.0:
        raise DomainError("beta must be non-negative, got %r" % (beta,))
    if eps < 0.0:
        raise DomainError("energy must be non-negative, got %r" % (eps,))
    w = beta * eps - math.log(z)
    if stat is Statistics.FERMI_DIRAC:
        return float(expit(-w))
    if stat is Statistics.BOSE_EINSTEIN:
        if w <= 0.0:
            raise SingularityError(
                "Bose occupation pole: beta*eps - ln z = %g <= 0" % w
            )
        return 1.0 / math.expm1(w)
    if stat is Statistics.MAXWELL_BOLTZMANN:
        return math.exp(-w)
    raise DomainError("stat must be a Statistics member, got %r" % (stat,))


def _objective(stat, y):
    # F_{3/2} evaluated at ln z = y, in log-space for numerical range.
    return quantum_integral(stat, QuantumIntegralOrder.THREE_HALVES, log_z=y)


def _derivative(stat, y):
    # d/dy F_{3/2}(e^y) = F_{1/2}(e^y) for both FD and BE.
    return quantum_integral(stat, QuantumIntegralOrder.ONE_HALF, log_z=y)


def _solve_fd_log(x):
    """ln z solving f_{3/2}(e^y) = x by bracketed Newton in y."""
    if x <= 0.7:
        y = math.log(x)
    else:
        y = (x / _SOMMERFELD_COEFF) ** (2.0 / 3.0)

    lo = hi = y
    flo = fhi = _objective(Statistics.FERMI_DIRAC, y) - x
    step = 1.0
    for _ in range(200):
        if flo > 0.0:
            lo -= step
            flo = _objective(Statistics.FERMI_DIRAC, lo) - x
        elif fhi < 0.0:
            hi += step
            fhi = _objective(Statistics.FERMI_DIRAC, hi) - x
        else:
            break
        step *= 2.0
    if flo > 0.0 or fhi < 0.0:
        raise ConvergenceError(
            "failed to bracket fugacity for degeneracy %g" % x,
            bracket=((lo, flo), (hi, fhi)),
        )

    y = 0.5 * (lo + hi)
    for _ in range(_MAX_ITER):
        f = _objective(Statistics.FERMI_DIRAC, y) - x
        if abs(f) <= _REL_TOL * x:
            return y
        if f > 0.0:
            hi = y
        else:
            lo = y
        slope = _derivative(Statistics.FERMI_DIRAC, y)
        y_next = y - f / slope
        if not lo < y_next < hi:
            y_next = 0.5 * (lo + hi)
        if y_next == y:
            return y
        y = y_next
    raise ConvergenceError(
        "fugacity iteration stalled at degeneracy %g" % x,
        bracket=((lo, 0.0), (hi, 0.0)),
    )


def _solve_be_alpha(x):
    """alpha = -ln z solving g_{3/2}(e^-alpha) = x; decreasing objective."""
    gap = ZETA_THREE_HALVES - x
    if x <= 0.7:
        alpha = -math.log(x)
    elif gap < 0.1:
        alpha = (gap / (2.0 * math.sqrt(math.pi))) ** 2
    else:
        alpha = 1.0
    alpha = max(alpha, 5e-324)

    lo, hi = alpha, alpha  # g(lo) >= x >= g(hi) wanted, g decreasing
    glo = ghi = _objective(Statistics.BOSE_EINSTEIN, -alpha) - x
    for _ in range(200):
        if glo < 0.0:
            lo *= 0.25
            glo = _objective(Statistics.BOSE_EINSTEIN, -lo) - x
        elif ghi > 0.0:
            hi *= 4.0
            ghi = _objective(Statistics.BOSE_EINSTEIN, -hi) - x
        else:
            break
    if glo < 0.0 or ghi > 0.0:
        raise ConvergenceError(
            "failed to bracket Bose fugacity for degeneracy %g" % x,
            bracket=((lo, glo), (hi, ghi)),
        )

    alpha = math.sqrt(lo * hi) if lo > 0.0 else 0.5 * (lo + hi)
    for _ in range(_MAX_ITER):
        g = _objective(Statistics.BOSE_EINSTEIN, -alpha) - x
        if abs(g) <= _REL_TOL * x:
            return alpha
        if g > 0.0:
            lo = alpha
        else:
            hi = alpha
        slope = _derivative(Statistics.BOSE_EINSTEIN, -alpha)
        alpha_next = alpha + g / slope
        if not lo < alpha_next < hi:
            alpha_next = math.sqrt(lo * hi) if lo > 0.0 else 0.5 * (lo + hi)
        if alpha_next == alpha:
            return alpha
        alpha = alpha_next
    raise ConvergenceError(
        "Bose fugacity iteration stalled at degeneracy %g" % x,
        bracket=((lo, 0.0), (hi, 0.0)),
    )


def solve_log_fugacity(stat, degeneracy):
    """ln z solving F_{3/2}(z) = degeneracy; exact far into degeneracy."""
    if not degeneracy > 0.0:
        raise DomainError("degeneracy must be positive, got %r" % (degeneracy,))
    if stat is Statistics.MAXWELL_BOLTZMANN:
        return math.log(degeneracy)
    if stat is Statistics.FERMI_DIRAC:
        return _solve_fd_log(degeneracy)
    if stat is Statistics.BOSE_EINSTEIN:
        if degeneracy > ZETA_THREE_HALVES:
            raise CondensationError(
                "degeneracy %.17g exceeds zeta(3/2) = %.16g: condensed phase"
                % (degeneracy, ZETA_THREE_HALVES)
            )
        if degeneracy == ZETA_THREE_HALVES:
            return 0.0
        return -_solve_be_alpha(degeneracy)
    raise DomainError("stat must be a Statistics member, got %r" % (stat,))


def solve_fugacity(stat, degeneracy):
    """Fugacity z solving F_{3/2}(z) = degeneracy.

    Parameters
    ----------
    stat : Statistics
    degeneracy : float
        Target lambda^3/nu, > 0.  Bose-Einstein requires
        degeneracy <= zeta(3/2) = 2.612375348685488.

    Returns
    -------
    float
        The fugacity, satisfying |F_{3/2}(z) - degeneracy| <= 1e-10 *
        degeneracy.  Deeply degenerate Fermi solutions with ln z > 300 are
        returned in log-space, i.e. the return value is ln z there (use
        solve_log_fugacity for a uniform representation).

    Raises
    ------
    CondensationError
        Bose-Einstein degeneracy above zeta(3/2).
    ConvergenceError
        Bracketing or iteration failure (carries the bracket state).
    """
    y = solve_log_fugacity(stat, degeneracy)
    if stat is Statistics.FERMI_DIRAC and y > LOG_SPACE_THRESHOLD:
        return y
    z = math.exp(y)
    if stat is Statistics.BOSE_EINSTEIN and -y < 1e-8:
        # One ulp of z moves g_{3/2} by ~sqrt(pi/alpha)*eps near z = 1;
        # return whichever neighbouring float has the smallest residual.
        candidates = (math.nextafter(z, 0.0), z, math.nextafter(z, 2.0))
        z = min(
            (c for c in candidates if c <= 1.0),
            key=lambda c: abs(
                quantum_integral(stat, QuantumIntegralOrder.THREE_HALVES, c)
                - degeneracy
            ),
        )
    return z


def solve_thermal_state(params, stat=Statistics.FERMI_DIRAC):
    """Build the ThermalState for GasParameters under the given statistics."""
    lam = thermal_wavelength(params.m, params.T, params.unit_system)
    degeneracy = lam ** 3 / params.nu
    y = solve_log_fugacity(stat, degeneracy)
    if y > 709.0:
        raise DomainError(
            "state too degenerate for a plain fugacity (ln z = %g); "
            "use solve_log_fugacity directly" % y
        )
    return ThermalState(z=math.exp(y), lam=lam, degeneracy=degeneracy)


def fermi_momentum(params):
    """Fermi momentum p_F = hbar (6 pi^2 / nu)^(1/3) (spinless counting)."""
    consts = constants_for(params.unit_system)
    return consts.hbar * (6.0 * math.pi ** 2 / params.nu) ** (1.0 / 3.0)


def fermi_energy(params):
    """Fermi energy eps_F = p_F^2 / (2m), computed from fermi_momentum."""
    p_f = fermi_momentum(params)
    return p_f * p_f / (2.0 * params.m)


def fermi_temperature(params):
    """Fermi temperature T_F = eps_F / k_B."""
    return fermi_energy(params) / constants_for(params.unit_system).k_B
