"""Channel-style noise via minimal unitary dilations.

Three noise processes act on the clock through a small environment:
amplitude damping (qubit environment), phase damping (qutrit), and
depolarizing (4-level).  Each comes in two verbatim forms that are kept
deliberately separate:

  * finite_time_unitary: the one-shot dilation unitary parameterized by
    the transition probability p,
  * build_channel_hamiltonian: the generator whose exponential drives the
    continuous two-arm evolution, parameterized by the coupling lambda.

The two forms are related by p = sin^2(theta), lambda = theta/tau*, but
their written normalizations disagree by constant factors (the generators
flip populations at rate 2*lambda for AD/PD and 12*lambda for DP, not
lambda).  effective_transition_probability measures the actual
correspondence instead of silently rescaling either form.
"""

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .interferometer import (ArmConfig, ClockSpec, VisibilityResult,
                             extended_initial_state, overlap_visibility)
from .numerics import evolution_operator

_BALANCE_TOL = 1e-9


class ChannelKind(enum.Enum):
    """Noise channel taxonomy; the value names the minimal environment."""

    AD = "ad"
    PD = "pd"
    DP = "dp"

    @property
    def env_dim(self) -> int:
        return {ChannelKind.AD: 2, ChannelKind.PD: 3, ChannelKind.DP: 4}[self]

    @property
    def dim(self) -> int:
        return 2 * self.env_dim


def channel_kind(value) -> ChannelKind:
    """Coerce a ChannelKind or its string name ('ad'/'pd'/'dp')."""
    if isinstance(value, ChannelKind):
        return value
    try:
        return ChannelKind(str(value).lower())
    except ValueError as exc:
        names = ", ".join(k.value for k in ChannelKind)
        raise ValidationError(f"unknown channel kind {value!r}; expected one of {names}") from exc


def _finite(x, name):
    try:
        val = float(x)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"{name} must be a real number") from exc
    if not math.isfinite(val):
        raise ValidationError(f"{name} must be finite")
    return val


@dataclass(frozen=True)
class ChannelParams:
    """A channel kind with its coupling (energy units)."""

    kind: ChannelKind
    coupling: float

    def __post_init__(self):
        object.__setattr__(self, "kind", channel_kind(self.kind))
        object.__setattr__(self, "coupling", _finite(self.coupling, "coupling"))

    @classmethod
    def from_probability(cls, kind, p: float, tau_star: float) -> "ChannelParams":
        """Map a transition probability to a coupling via
        lambda = arcsin(sqrt(p))/tau*."""
        return cls(kind, coupling_from_probability(p, tau_star))


def coupling_from_probability(p: float, tau_star: float) -> float:
    """lambda = arcsin(sqrt(p))/tau* for p in [0,1] and tau* > 0."""
    p = _finite(p, "p")
    tau_star = _finite(tau_star, "tau_star")
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"p must lie in [0, 1], got {p}")
    if tau_star <= 0:
        raise ValidationError("tau_star must be > 0")
    return math.asin(math.sqrt(p)) / tau_star


def finite_time_unitary(kind, p: float) -> np.ndarray:
    """One-shot dilation unitary U(tau*) with transition probability p.

    Dim 4 (AD), 6 (PD), or 8 (DP); entries are the sqrt(p)/sqrt(1-p)
    patterns of the respective dilation, and p=0 gives the exact identity.
    """
    kind = channel_kind(kind)
    p = _finite(p, "p")
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"p must lie in [0, 1], got {p}")
    q = math.sqrt(1.0 - p)
    s = math.sqrt(p)
    if kind is ChannelKind.AD:
        u = np.array([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, q, s, 0.0],
            [0.0, -s, q, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ], dtype=np.complex128)
    elif kind is ChannelKind.PD:
        u = np.zeros((6, 6), dtype=np.complex128)
        u[0, 0] = q
        u[0, 1] = -s
        u[1, 0] = s
        u[1, 1] = q
        u[2, 2] = 1.0
        u[3, 3] = q
        u[3, 5] = -s
        u[5, 3] = s
        u[5, 5] = q
        u[4, 4] = 1.0
    else:
        t = math.sqrt(p / 3.0)
        it = 1j * t
        u = np.array([
            [q,   0.0, 0.0, it,  0.0, it,  t,   0.0],
            [0.0, q,   it,  0.0, it,  0.0, 0.0, t],
            [0.0, it,  q,   0.0, t,   0.0, 0.0, it],
            [it,  0.0, 0.0, q,   0.0, t,   it,  0.0],
            [0.0, it,  -t,  0.0, q,   0.0, 0.0, -it],
            [it,  0.0, 0.0, -t,  0.0, q,   -it, 0.0],
            [-t,  0.0, 0.0, it,  0.0, -it, q,   0.0],
            [0.0, -t,  it,  0.0, -it, 0.0, 0.0, q],
        ], dtype=np.complex128)
    return u


def build_channel_hamiltonian(kind, coupling: float, clock: ClockSpec) -> np.ndarray:
    """H_int = H0 (x) I_env + H_noise with the verbatim generator entries.

    Basis index = clock*env_dim + env (environment starts at |0>_E).
    AD couples |01><10| with +/-2i*lambda; PD couples |00><01| and
    |10><12| blocks with +/-2i*lambda; DP carries the +/-4*sqrt(3)*lambda
    and +/-4i*sqrt(3)*lambda pattern on its 8x8 space.
    """
    kind = channel_kind(kind)
    lam = _finite(coupling, "coupling")
    d_env = kind.env_dim
    dim = 2 * d_env
    h = np.zeros((dim, dim), dtype=np.complex128)
    for clock_index, energy in ((0, clock.e0), (1, clock.e1)):
        for env in range(d_env):
            i = clock_index * d_env + env
            h[i, i] = energy
    if kind is ChannelKind.AD:
        # 2i*lambda (|10><01| - |01><10|); |01> = 1, |10> = 2
        h[2, 1] += 2j * lam
        h[1, 2] += -2j * lam
    elif kind is ChannelKind.PD:
        # 2i*lambda (|00><01| - |01><00|) and 2i*lambda (|10><12| - |12><10|)
        h[0, 1] += 2j * lam
        h[1, 0] += -2j * lam
        h[3, 5] += 2j * lam
        h[5, 3] += -2j * lam
    else:
        k = 4.0 * math.sqrt(3.0) * lam
        ik = 1j * k
        for i, j in ((0, 3), (0, 5), (1, 2), (1, 4)):
            h[i, j] += k
            h[j, i] += k
        h[0, 6] += -ik
        h[6, 0] += ik
        h[1, 7] += -ik
        h[7, 1] += ik
    return h


@dataclass(frozen=True)
class AdSpectrum:
    """Eigenstructure of the AD Hamiltonian: the mixing ratio
    y = delta_e/sqrt(delta_e^2 + 16 lambda^2), the level sum e_plus = e0+e1,
    and the four eigenvalues (e0, e1, (e_plus-r)/2, (e_plus+r)/2) with
    r = sqrt(delta_e^2 + 16 lambda^2)."""

    y: float
    e_plus: float
    eigenvalues: tuple


def ad_spectrum(clock: ClockSpec, coupling: float) -> AdSpectrum:
    lam = _finite(coupling, "coupling")
    de = clock.delta_e
    r = math.hypot(de, 4.0 * lam)
    y = de / r if r > 0 else 1.0
    e_plus = clock.e0 + clock.e1
    return AdSpectrum(
        y=y,
        e_plus=e_plus,
        eigenvalues=(clock.e0, clock.e1, 0.5 * (e_plus - r), 0.5 * (e_plus + r)),
    )


def _require_balanced(clock: ClockSpec, op_name: str):
    if not clock.is_balanced(_BALANCE_TOL):
        raise ValidationError(f"{op_name} requires a balanced clock superposition")


def ad_overlap_analytic(clock: ClockSpec, coupling: float, tau1: float, tau2: float) -> complex:
    """Closed-form overlap for amplitude damping with equal couplings:

        kappa = (1/2) e^{-i e0 dt} + (1/4)(1-y) e^{-i e3 dt}
                + (1/4)(1+y) e^{-i e4 dt},   dt = tau2 - tau1,

    with e3/e4 = (e_plus -/+ r)/2 from ad_spectrum.  The fully degenerate
    point delta_e = 0, lambda = 0 returns the bare phase (visibility 1).
    """
    _require_balanced(clock, "ad_overlap_analytic")
    lam = _finite(coupling, "coupling")
    tau1 = _finite(tau1, "tau1")
    tau2 = _finite(tau2, "tau2")
    dt = tau2 - tau1
    if clock.delta_e == 0.0 and lam == 0.0:
        return cmath.exp(-1j * clock.e0 * dt)
    spec = ad_spectrum(clock, lam)
    e3, e4 = spec.eigenvalues[2], spec.eigenvalues[3]
    return (0.5 * cmath.exp(-1j * clock.e0 * dt)
            + 0.25 * (1.0 - spec.y) * cmath.exp(-1j * e3 * dt)
            + 0.25 * (1.0 + spec.y) * cmath.exp(-1j * e4 * dt))


def ad_visibility_analytic(clock: ClockSpec, coupling: float, tau1: float, tau2: float) -> float:
    return abs(ad_overlap_analytic(clock, coupling, tau1, tau2))


def pd_overlap_analytic(clock: ClockSpec, coupling: float, tau1: float, tau2: float) -> complex:
    """Closed-form overlap for phase damping with equal couplings: the
    equal-weight average of the four dressed phases e0 -/+ 2 lambda and
    e1 -/+ 2 lambda, which factorizes as
    cos(2 lambda dt) * (e^{-i e0 dt} + e^{-i e1 dt})/2."""
    _require_balanced(clock, "pd_overlap_analytic")
    lam = _finite(coupling, "coupling")
    tau1 = _finite(tau1, "tau1")
    tau2 = _finite(tau2, "tau2")
    dt = tau2 - tau1
    return 0.25 * (
        cmath.exp(-1j * (clock.e0 - 2.0 * lam) * dt)
        + cmath.exp(-1j * (clock.e1 - 2.0 * lam) * dt)
        + cmath.exp(-1j * (clock.e0 + 2.0 * lam) * dt)
        + cmath.exp(-1j * (clock.e1 + 2.0 * lam) * dt)
    )


def pd_visibility_analytic(clock: ClockSpec, coupling: float, tau1: float, tau2: float) -> float:
    return abs(pd_overlap_analytic(clock, coupling, tau1, tau2))


def dp_visibility_numeric(clock: ClockSpec, lambda1: float, lambda2: float,
                          tau1: float, tau2: float) -> float:
    """Depolarizing-channel visibility by direct evolution on the 8x8 space
    (no closed form is used for this kind)."""
    result = two_arm_visibility(
        clock, ChannelKind.DP,
        ArmConfig(tau=tau1, lambda_arm=lambda1),
        ArmConfig(tau=tau2, lambda_arm=lambda2),
    )
    return result.v


def two_arm_visibility(clock: ClockSpec, kind, arm1: ArmConfig, arm2: ArmConfig) -> VisibilityResult:
    """Evolve the same clock (x) |0>_E state under H_int(lambda_i) for tau_i
    along each arm and overlap the two branches.

    Both branches live in one shared environment space, so the overlap is
    well-defined for unequal couplings.
    """
    kind = channel_kind(kind)
    state = extended_initial_state(clock, kind.env_dim)
    u1 = evolution_operator(build_channel_hamiltonian(kind, arm1.lambda_arm, clock), arm1.tau)
    u2 = evolution_operator(build_channel_hamiltonian(kind, arm2.lambda_arm, clock), arm2.tau)
    return overlap_visibility(u1 @ state, u2 @ state)


def effective_transition_probability(kind, coupling: float, tau_star: float) -> float:
    """Transition probability actually produced by exp(-i H_noise tau*).

    AD: |<01|U|10>|^2, PD: |<01|U|00>|^2, DP: 1-|<00|U|00>|^2.  Compare
    against p = sin^2(lambda tau*) to see the generators' rate factors
    (2 lambda for AD/PD, 12 lambda for DP).
    """
    kind = channel_kind(kind)
    lam = _finite(coupling, "coupling")
    tau_star = _finite(tau_star, "tau_star")
    if lam < 0:
        raise ValidationError("coupling must be >= 0")
    if tau_star <= 0:
        raise ValidationError("tau_star must be > 0")
    h_noise = build_channel_hamiltonian(kind, lam, ClockSpec(e0=0.0, e1=0.0))
    u = evolution_operator(h_noise, tau_star)
    if kind is ChannelKind.AD:
        return float(abs(u[1, 2]) ** 2)
    if kind is ChannelKind.PD:
        return float(abs(u[1, 0]) ** 2)
    return float(1.0 - abs(u[0, 0]) ** 2)
