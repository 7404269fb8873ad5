"""Brute-force spectral oracle: a finite periodic box summed level by level.

A wire is modelled as an L x a x a box with periodic boundary conditions,
momenta p_i = h n_i / L_i.  Summing occupations over the enumerated
spectrum gives particle counts with no continuum approximation at all,
which is what every integral in the package is checked against.  All
reductions are numpy pairwise sums over a deterministically ordered level
array, so repeated runs agree bit for bit.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np
from scipy.special import erfc, expit

from .constants import UnitSystem, constants_for
from .errors import CondensationError, DomainError, ResourceLimitError, TruncationError
from .specfun import QuantumIntegralOrder, Statistics, quantum_integral

__all__ = [
    "Boundary",
    "BoxSpectrum",
    "ContinuumComparison",
    "enumerate_levels",
    "direct_number_sum",
    "truncation_bound",
    "compare_continuum",
]

# Default per-axis truncation: keep levels up to beta*eps = 45 (tail e^-45).
BETA_EPS_CUTOFF = 45.0
MAX_LEVELS_DEFAULT = 10 ** 8


class Boundary(Enum):
    PERIODIC = "periodic"


@dataclass(frozen=True)
class BoxSpectrum:
    """Complete single-particle spectrum of a periodic box.

    levels holds all (2c_x+1)(2c_y+1)(2c_z+1) energies sorted ascending;
    levels_transverse_ground is the subset with n_y = n_z = 0, used for
    mode freeze-out diagnostics.
    """

    L_long: float
    a_transverse: float
    m: float
    boundary: Boundary
    cutoff: Tuple[int, int, int]
    levels: np.ndarray
    levels_transverse_ground: np.ndarray
    unit_system: UnitSystem = UnitSystem.REDUCED

    @property
    def level_count(self):
        return int(self.levels.size)

    @property
    def edge_lengths(self):
        return (self.L_long, self.a_transverse, self.a_transverse)


def _axis_cutoff(length, m, beta, h):
    # smallest c with beta * (h c / L)^2 / (2m) >= BETA_EPS_CUTOFF
    return max(1, math.ceil(length * math.sqrt(2.0 * m * BETA_EPS_CUTOFF / beta) / h))


def enumerate_levels(
    L_long,
    a_transverse,
    m,
    cutoff=None,
    *,
    beta=None,
    max_levels=MAX_LEVELS_DEFAULT,
    unit_system=UnitSystem.REDUCED,
):
    """Enumerate all box levels with |n_i| <= cutoff_i, sorted by energy.

    cutoff may be a single integer (applied to every axis), a 3-tuple, or
    None, in which case the per-axis default keeps everything below
    beta*eps = 45 and beta must be supplied.

    Raises ResourceLimitError when the level count would exceed max_levels.
    """
    if not (L_long > 0.0 and a_transverse > 0.0 and m > 0.0):
        raise DomainError("box lengths and mass must be positive")
    h = constants_for(unit_system).h
    lengths = (L_long, a_transverse, a_transverse)
    if cutoff is None:
        if beta is None:
            raise DomainError("default cutoff rule needs beta")
        cutoffs = tuple(_axis_cutoff(L, m, beta, h) for L in lengths)
    elif isinstance(cutoff, (tuple, list)):
        cutoffs = tuple(int(c) for c in cutoff)
    else:
        cutoffs = (int(cutoff),) * 3
    if len(cutoffs) != 3 or any(c < 1 for c in cutoffs):
        raise DomainError("cutoff must be a positive integer or 3 of them")

    count = 1
    for c in cutoffs:
        count *= 2 * c + 1
    if count > max_levels:
        raise ResourceLimitError(
            "spectrum would hold %d levels, above the limit %d" % (count, max_levels)
        )

    axis_energies = []
    for L, c in zip(lengths, cutoffs):
        n = np.arange(-c, c + 1, dtype=np.float64)
        axis_energies.append((h * n / L) ** 2 / (2.0 * m))
    ex, ey, ez = axis_energies
    levels = (ex[:, None, None] + ey[None, :, None] + ez[None, None, :]).ravel()
    return BoxSpectrum(
        L_long=L_long,
        a_transverse=a_transverse,
        m=m,
        boundary=Boundary.PERIODIC,
        cutoff=cutoffs,
        levels=np.sort(levels),
        levels_transverse_ground=np.sort(ex),
        unit_system=unit_system,
    )


def _occupations(levels, stat, z, beta):
    w = beta * levels - math.log(z)
    if stat is Statistics.FERMI_DIRAC:
        return expit(-w)
    if stat is Statistics.BOSE_EINSTEIN:
        if not z < 1.0:
            raise CondensationError(
                "Bose box sum needs z < 1 (ground level at eps = 0), got %r" % (z,)
            )
        return 1.0 / np.expm1(w)
    if stat is Statistics.MAXWELL_BOLTZMANN:
        return z * np.exp(-beta * levels)
    raise DomainError("stat must be a Statistics member, got %r" % (stat,))


def truncation_bound(spec, z, beta):
    """Upper estimate of the occupation weight lost beyond the cutoffs.

    Per axis the discarded Boltzmann weight is below the Gaussian integral
    tail sqrt(pi/s) * erfc(sqrt(s) c) with s = beta h^2/(2 m L^2); the
    bound is the product defect of the per-axis theta sums.  Exact for
    Maxwell-Boltzmann as an upper bound; Fermi-Dirac occupations are
    smaller still.  For Bose-Einstein it underestimates by at most
    1/(1 - z e^(-beta eps_cut)), which is ~1 whenever the cutoff is sane.
    """
    h = constants_for(spec.unit_system).h
    thetas = []
    tails = []
    for L, c in zip(spec.edge_lengths, spec.cutoff):
        s = beta * h * h / (2.0 * spec.m * L * L)
        thetas.append(math.fsum(math.exp(-s * n * n) for n in range(-c, c + 1)))
        tails.append(math.sqrt(math.pi / s) * float(erfc(math.sqrt(s) * c)))
    # expand prod(theta + tail) - prod(theta) term by term; the direct
    # subtraction cancels to zero once the tails drop below one ulp
    defect = 0.0
    for i, tail in enumerate(tails):
        term = tail
        for j, theta in enumerate(thetas):
            if j < i:
                term *= theta
            elif j > i:
                term *= theta + tails[j]
        defect += term
    return z * defect


def direct_number_sum(spec, stat, z, beta, tail_tolerance=None):
    """Sum occupations over every enumerated level.

    tail_tolerance, if given, is the highest acceptable ratio of the
    truncation bound to the returned sum; exceeding it raises
    TruncationError rather than silently undercounting.
    """
    if not z > 0.0:
        raise DomainError("fugacity must be positive, got %r" % (z,))
    if not beta > 0.0:
        raise DomainError("beta must be positive, got %r" % (beta,))
    total = float(np.sum(_occupations(spec.levels, stat, z, beta)))
    if tail_tolerance is not None:
        bound = truncation_bound(spec, z, beta)
        if bound > tail_tolerance * total:
            raise TruncationError(
                "truncation bound %g exceeds %g of the sum %g"
                % (bound, tail_tolerance, total)
            )
    return total


@dataclass(frozen=True)
class ContinuumComparison:
    N_discrete: float
    N_continuum_3d: float
    N_continuum_quasi1d: float
    rel_err_3d: float
    rel_err_quasi1d: float
    ground_mode_fraction: float
    sigma_tilde_fitted: float
    truncation_bound: float


def compare_continuum(spec, stat, z, beta, wire_convention=None):
    """Discrete sum against both continuum replacements of it.

    N_continuum_3d is (V/h^3) integral d^3p n(p) = V F_{3/2}(z)/lambda^3;
    the quasi-1D variant uses sigma_tilde from wire_convention, or the
    freeze-out value (lambda/a)^2 when none is given, under which it is
    the pure 1D count (L/lambda) F_{1/2}(z).  Relative errors are against
    N_discrete; ground_mode_fraction is the occupation share of levels
    with no transverse excitation.
    """
    h = constants_for(spec.unit_system).h
    lam = h * math.sqrt(beta / (2.0 * math.pi * spec.m))
    volume = spec.L_long * spec.a_transverse ** 2

    n_disc = direct_number_sum(spec, stat, z, beta)
    f32 = quantum_integral(stat, QuantumIntegralOrder.THREE_HALVES, z)
    f12 = quantum_integral(stat, QuantumIntegralOrder.ONE_HALF, z)
    n_3d = volume * f32 / lam ** 3

    sigma_tilde = (
        wire_convention.sigma_tilde
        if wire_convention is not None
        else (lam / spec.a_transverse) ** 2
    )
    n_q1d = volume * sigma_tilde * f12 / lam ** 3

    ground = float(np.sum(_occupations(spec.levels_transverse_ground, stat, z, beta)))
    return ContinuumComparison(
        N_discrete=n_disc,
        N_continuum_3d=n_3d,
        N_continuum_quasi1d=n_q1d,
        rel_err_3d=abs(n_disc - n_3d) / n_disc,
        rel_err_quasi1d=abs(n_disc - n_q1d) / n_disc,
        ground_mode_fraction=ground / n_disc,
        sigma_tilde_fitted=n_disc * lam ** 3 / (volume * f12),
        truncation_bound=truncation_bound(spec, z, beta),
    )
