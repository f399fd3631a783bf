"""Single-mode field environment for the clock (Jaynes-Cummings coupling).

The interaction conserves excitation number, so the joint Hilbert space
splits into 2x2 sectors spanned by {|1,p>, |0,p+1>} plus the uncoupled
ground level |0,0>.  That structure gives closed-form visibilities: the
T=0 expression built from the p=0 dressed pair, and a thermal sum of
per-sector overlaps weighted by Boltzmann factors.  The truncated-ladder
Hamiltonian matrix is also built here for the brute-force cross-checks.

Branch convention: the T=0 closed form evaluates the mixing angle as the
principal branch of arctan(lambda/delta), delta = delta_e - omega, with
the resonance limit arctan -> pi/2 at delta = 0.  For negative detuning
(omega > delta_e) this convention assigns the dressed-state weights
opposite to the exact eigenvectors of the Hamiltonian, so the closed form
then deviates from exact diagonalization; the reference curves this
package reproduces use exactly this convention.  The thermal sectors
n >= 1 use the branch-safe mixing angle and match exact diagonalization
everywhere; the n = 0 summand is the T=0 closed form.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, ValidationError

THERMAL_SECTOR_LIMIT = 100_000


def _finite(x, name):
    try:
        val = float(x)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"{name} must be a real number") from exc
    if not math.isfinite(val):
        raise ValidationError(f"{name} must be finite")
    return val


@dataclass(frozen=True)
class JcParams:
    """Clock gap delta_e, field frequency omega, interaction strength
    coupling (the lambda in (lambda/2)(a sigma+ + a+ sigma-)), and the Fock
    truncation used when the Hamiltonian matrix is materialized.

    The closed forms ignore n_cutoff; excitation conservation makes
    n_cutoff = 1 already exact for a field starting in |0>.
    """

    delta_e: float
    omega: float
    coupling: float
    n_cutoff: int = 2

    def __post_init__(self):
        object.__setattr__(self, "delta_e", _finite(self.delta_e, "delta_e"))
        object.__setattr__(self, "omega", _finite(self.omega, "omega"))
        object.__setattr__(self, "coupling", _finite(self.coupling, "coupling"))
        if self.delta_e < 0:
            raise ValidationError("delta_e must be >= 0")
        if self.omega < 0:
            raise ValidationError("omega must be >= 0")
        if not isinstance(self.n_cutoff, (int, np.integer)):
            raise ValidationError("n_cutoff must be an integer")
        object.__setattr__(self, "n_cutoff", int(self.n_cutoff))
        if self.n_cutoff < 0:
            raise ValidationError("n_cutoff must be >= 0")
        if self.coupling != 0.0 and self.n_cutoff < 1:
            raise ValidationError("n_cutoff must be >= 1 when the coupling is nonzero")

    @property
    def detuning(self) -> float:
        return self.delta_e - self.omega


@dataclass(frozen=True)
class ThermalParams:
    """Field temperature in energy units (k_B = 1) and the Boltzmann tail
    weight at which the Fock sum is truncated."""

    temperature: float
    tail_epsilon: float = 1e-12

    def __post_init__(self):
        object.__setattr__(self, "temperature", _finite(self.temperature, "temperature"))
        object.__setattr__(self, "tail_epsilon", _finite(self.tail_epsilon, "tail_epsilon"))
        if self.temperature <= 0:
            raise ValidationError("temperature must be > 0")
        if self.tail_epsilon <= 0:
            raise ValidationError("tail_epsilon must be > 0")

    def cutoff(self, omega: float) -> int:
        return thermal_cutoff(omega, self.temperature, self.tail_epsilon)


@dataclass(frozen=True)
class JcDressedLevel:
    """Dressed pair of excitation sector p, spanned by {|1,p>, |0,p+1>}.

    theta_p is the mixing angle: the upper eigenvector (energy e2) is
    sin(theta_p)|1,p> + cos(theta_p)|0,p+1>.  e1 is the energy of the
    uncoupled joint ground level |0,0>.
    """

    p: int
    theta_p: float
    omega_p: float
    delta_p: float
    e1: float
    e2: float
    e3: float


def dressed_level(params: JcParams, p: int) -> JcDressedLevel:
    """Mixing angle and eigenenergies of excitation sector p >= 0."""
    if not isinstance(p, (int, np.integer)) or p < 0:
        raise ValidationError(f"sector index must be a non-negative integer, got {p!r}")
    delta = params.detuning
    omega_p = params.coupling * math.sqrt(p + 1.0)
    delta_p = math.hypot(delta, omega_p)
    if omega_p == 0.0:
        # uncoupled sector: the upper level is |1,p> when delta > 0
        theta = math.pi / 2 if delta > 0 else 0.0
    else:
        theta = math.atan2(abs(omega_p), delta_p - delta)
        if omega_p < 0:
            theta = -theta
    center = (p + 0.5) * params.omega
    return JcDressedLevel(
        p=int(p),
        theta_p=theta,
        omega_p=omega_p,
        delta_p=delta_p,
        e1=-0.5 * params.delta_e,
        e2=center + 0.5 * delta_p,
        e3=center - 0.5 * delta_p,
    )


def build_jc_hamiltonian(params: JcParams) -> np.ndarray:
    """Matrix of (delta_e/2)sigma_z + omega a+a + (coupling/2)(a sigma+ + a+ sigma-)
    on the truncated Fock ladder.

    Basis index = clock*(n_cutoff+1) + n; the clock ground state carries
    -delta_e/2, so |0,0> sits at energy -delta_e/2.
    """
    dim_f = params.n_cutoff + 1
    dim = 2 * dim_f
    h = np.zeros((dim, dim), dtype=np.complex128)
    for clock in (0, 1):
        level = -0.5 * params.delta_e if clock == 0 else 0.5 * params.delta_e
        for n in range(dim_f):
            i = clock * dim_f + n
            h[i, i] = level + params.omega * n
    half = 0.5 * params.coupling
    for n in range(dim_f - 1):
        # a sigma+ maps |0,n+1> -> sqrt(n+1) |1,n>
        upper = 1 * dim_f + n
        lower = 0 * dim_f + (n + 1)
        h[upper, lower] = half * math.sqrt(n + 1.0)
        h[lower, upper] = half * math.sqrt(n + 1.0)
    return h


def jc_initial_state(params: JcParams) -> np.ndarray:
    """Balanced clock (|0>+|1>)/sqrt(2) with the field in Fock |0>, in the
    basis layout of build_jc_hamiltonian."""
    dim_f = params.n_cutoff + 1
    state = np.zeros(2 * dim_f, dtype=np.complex128)
    state[0] = state[dim_f] = 1.0 / math.sqrt(2.0)
    return state


def jc_overlap_analytic(params: JcParams, delta_tau: float) -> complex:
    """Closed-form overlap for a balanced clock with the field in |0>:

        kappa = (1/2)[ e^{+i delta_e tau/2}
                       + e^{-i (omega+lambda0) tau/2} cos^2(alpha0/2)
                       + e^{-i (omega-lambda0) tau/2} sin^2(alpha0/2) ]

    with lambda0 = sqrt(delta^2 + lambda^2) and alpha0 the principal-branch
    arctan(lambda/delta) (pi/2 at resonance).  See the module docstring for
    the negative-detuning behavior of this convention.
    """
    delta_tau = _finite(delta_tau, "delta_tau")
    delta = params.detuning
    lam = params.coupling
    lambda0 = math.hypot(delta, lam)
    if delta == 0.0:
        alpha0 = math.pi / 2
    else:
        alpha0 = math.atan(lam / delta)
    c2 = math.cos(alpha0 / 2) ** 2
    s2 = math.sin(alpha0 / 2) ** 2
    return 0.5 * (
        cmath.exp(0.5j * params.delta_e * delta_tau)
        + cmath.exp(-0.5j * (params.omega + lambda0) * delta_tau) * c2
        + cmath.exp(-0.5j * (params.omega - lambda0) * delta_tau) * s2
    )


def jc_visibility_analytic(params: JcParams, delta_tau: float) -> float:
    """Visibility |kappa| of the T=0 closed form."""
    return abs(jc_overlap_analytic(params, delta_tau))


def thermal_cutoff(omega: float, temperature: float, tail_epsilon: float) -> int:
    """Smallest n_max whose residual Boltzmann tail e^{-(n_max+1) omega/T}
    is <= tail_epsilon, clamped to >= 1."""
    omega = _finite(omega, "omega")
    temperature = _finite(temperature, "temperature")
    tail_epsilon = _finite(tail_epsilon, "tail_epsilon")
    if omega <= 0:
        raise ValidationError("omega must be > 0 for a thermal field")
    if temperature <= 0:
        raise ValidationError("temperature must be > 0")
    if tail_epsilon <= 0:
        raise ValidationError("tail_epsilon must be > 0")
    beta_omega = omega / temperature
    n = math.ceil(math.log(1.0 / tail_epsilon) / beta_omega) - 1
    return max(1, n)


def thermal_weight(n: int, beta_omega: float) -> float:
    """Normalized Boltzmann weight P(n) = e^{-n beta omega}(1 - e^{-beta omega})."""
    return math.exp(-n * beta_omega) * (1.0 - math.exp(-beta_omega))


def sector_overlap(params: JcParams, n: int, delta_tau: float) -> complex:
    """Overlap of (|0,n> + |1,n>)/sqrt(2) with its time-evolved self.

    n = 0 is the T=0 closed-form summand; n >= 1 averages the four dressed
    phases of sectors n-1 and n:

        kappa_n = (1/2)[ e^{-i E2_{n-1} tau} cos^2(theta_{n-1})
                         + e^{-i E2_n tau} sin^2(theta_n)
                         + e^{-i E3_{n-1} tau} sin^2(theta_{n-1})
                         + e^{-i E3_n tau} cos^2(theta_n) ]
    """
    if not isinstance(n, (int, np.integer)) or n < 0:
        raise ValidationError(f"sector index must be a non-negative integer, got {n!r}")
    if n == 0:
        return jc_overlap_analytic(params, delta_tau)
    delta_tau = _finite(delta_tau, "delta_tau")
    below = dressed_level(params, n - 1)
    here = dressed_level(params, n)
    cb, sb = math.cos(below.theta_p), math.sin(below.theta_p)
    ch, sh = math.cos(here.theta_p), math.sin(here.theta_p)
    return 0.5 * (
        cmath.exp(-1j * below.e2 * delta_tau) * cb * cb
        + cmath.exp(-1j * here.e2 * delta_tau) * sh * sh
        + cmath.exp(-1j * below.e3 * delta_tau) * sb * sb
        + cmath.exp(-1j * here.e3 * delta_tau) * ch * ch
    )


def _sector_overlaps_vectorized(params: JcParams, n_max: int, delta_tau: float) -> np.ndarray:
    """kappa_n for n = 0..n_max as one array (same math as sector_overlap)."""
    delta = params.detuning
    p = np.arange(n_max + 1, dtype=float)
    omega_p = params.coupling * np.sqrt(p + 1.0)
    delta_p = np.hypot(delta, omega_p)
    theta = np.arctan2(np.abs(omega_p), delta_p - delta)
    theta = np.where(omega_p < 0, -theta, theta)
    if params.coupling == 0.0 and delta > 0:
        theta = np.full_like(theta, math.pi / 2)
    center = (p + 0.5) * params.omega
    e2 = center + 0.5 * delta_p
    e3 = center - 0.5 * delta_p
    c2 = np.cos(theta) ** 2
    s2 = np.sin(theta) ** 2
    ph2 = np.exp(-1j * e2 * delta_tau)
    ph3 = np.exp(-1j * e3 * delta_tau)
    out = np.empty(n_max + 1, dtype=np.complex128)
    out[0] = jc_overlap_analytic(params, delta_tau)
    if n_max >= 1:
        lo = np.arange(0, n_max)   # sector n-1
        hi = np.arange(1, n_max + 1)  # sector n
        out[1:] = 0.5 * (
            ph2[lo] * c2[lo] + ph2[hi] * s2[hi] + ph3[lo] * s2[lo] + ph3[hi] * c2[hi]
        )
    return out


def jc_thermal_overlap(params: JcParams, thermal: ThermalParams, delta_tau: float) -> complex:
    """Boltzmann-weighted overlap sum over Fock sectors.

    The truncation n_max comes from thermal_cutoff; the sum runs in
    ascending n so results are bit-stable across runs and worker counts.
    """
    delta_tau = _finite(delta_tau, "delta_tau")
    n_max = thermal.cutoff(params.omega)
    if n_max > THERMAL_SECTOR_LIMIT:
        raise ConvergenceError(
            f"thermal sum needs {n_max} sectors to reach tail weight "
            f"{thermal.tail_epsilon:g}; limit is {THERMAL_SECTOR_LIMIT}"
        )
    beta_omega = params.omega / thermal.temperature
    overlaps = _sector_overlaps_vectorized(params, n_max, delta_tau)
    weights = np.exp(-beta_omega * np.arange(n_max + 1)) * (1.0 - math.exp(-beta_omega))
    kappa = 0.0 + 0.0j
    for n in range(n_max + 1):
        kappa += weights[n] * overlaps[n]
    return complex(kappa)


def jc_thermal_visibility(params: JcParams, thermal: ThermalParams, delta_tau: float) -> float:
    """Visibility |kappa| of the thermal Fock mixture."""
    return abs(jc_thermal_overlap(params, thermal, delta_tau))
