"""Mach-Zehnder interferometry of a two-level clock.

The quantity of interest everywhere is the complex overlap kappa between
the states evolved along the two interferometer arms.  Its modulus is the
fringe visibility, its argument shifts the fringe pattern.  This module
holds the clock/arm descriptions, the overlap -> visibility bookkeeping,
the detection-port probabilities, and the phase-scan definition of
visibility used to cross-check |kappa|.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import StructuralError, ValidationError
from .numerics import inner_product, state_vector

NORM_TOL = 1e-12

# maximum allowed chi step in a fringe scan: 0.1 degree. Discretization bias
# of the extrema on such a grid is <= |kappa|*step^2/8 ~ 4e-7, below the 1e-6
# agreement contract with |kappa|.
MAX_SCAN_STEP = math.radians(0.1)
DEFAULT_SCAN_POINTS = 3601

_BALANCED = 1.0 / math.sqrt(2.0)


def _finite(x, name):
    try:
        val = float(x)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"{name} must be a real number") from exc
    if not math.isfinite(val):
        raise ValidationError(f"{name} must be finite")
    return val


@dataclass(frozen=True)
class ClockSpec:
    """Two-level internal clock: energies e0 <= e1 and initial amplitudes.

    Default is the balanced superposition (|0> + |1>)/sqrt(2) with e0=0,
    e1=1, i.e. unit level splitting.
    """

    e0: float = 0.0
    e1: float = 1.0
    c0: complex = _BALANCED
    c1: complex = _BALANCED

    def __post_init__(self):
        object.__setattr__(self, "e0", _finite(self.e0, "e0"))
        object.__setattr__(self, "e1", _finite(self.e1, "e1"))
        try:
            object.__setattr__(self, "c0", complex(self.c0))
            object.__setattr__(self, "c1", complex(self.c1))
        except (TypeError, ValueError) as exc:
            raise ValidationError("clock amplitudes must be complex numbers") from exc
        norm = abs(self.c0) ** 2 + abs(self.c1) ** 2
        if abs(norm - 1.0) > NORM_TOL:
            raise ValidationError(
                f"clock amplitudes must satisfy |c0|^2+|c1|^2 = 1, got {norm!r}"
            )
        if self.e1 < self.e0:
            raise ValidationError("clock requires e1 >= e0")

    @property
    def delta_e(self) -> float:
        return self.e1 - self.e0

    @classmethod
    def balanced(cls, delta_e: float, e0: float = 0.0) -> "ClockSpec":
        """Balanced clock with level splitting delta_e on top of offset e0."""
        return cls(e0=e0, e1=e0 + float(delta_e))

    def is_balanced(self, tol: float = 1e-9) -> bool:
        return abs(abs(self.c0) ** 2 - 0.5) <= tol


@dataclass(frozen=True)
class ArmConfig:
    """One interferometer arm: proper time, noise coupling, and the
    controllable phase picked up on that arm."""

    tau: float
    lambda_arm: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "tau", _finite(self.tau, "tau"))
        object.__setattr__(self, "lambda_arm", _finite(self.lambda_arm, "lambda_arm"))
        object.__setattr__(self, "phi", _finite(self.phi, "phi"))
        if self.tau < 0:
            raise ValidationError(f"tau must be >= 0, got {self.tau}")


@dataclass(frozen=True)
class VisibilityResult:
    """Overlap kappa = |kappa| e^{i upsilon} between the arm-evolved states.

    v is the visibility |kappa|; upsilon is arg(kappa) in (-pi, pi].
    """

    kappa: complex
    v: float
    upsilon: float

    def __post_init__(self):
        if abs(self.v - abs(self.kappa)) > 1e-9:
            raise StructuralError("v must equal |kappa|")
        if abs(math.remainder(self.upsilon - cmath.phase(self.kappa), 2 * math.pi)) > 1e-9:
            raise StructuralError("upsilon must equal arg(kappa)")
        if self.v > 1.0 + 1e-12:
            raise StructuralError(f"visibility {self.v!r} exceeds 1")

    @classmethod
    def from_kappa(cls, kappa: complex) -> "VisibilityResult":
        kappa = complex(kappa)
        return cls(kappa=kappa, v=abs(kappa), upsilon=cmath.phase(kappa))


def extended_initial_state(clock: ClockSpec, env_dim: int) -> np.ndarray:
    """Product state |clock> (x) |0>_E with basis index = clock*env_dim + env."""
    if not isinstance(env_dim, (int, np.integer)) or env_dim < 1:
        raise ValidationError(f"env_dim must be a positive integer, got {env_dim!r}")
    state = np.zeros(2 * env_dim, dtype=np.complex128)
    state[0] = clock.c0
    state[env_dim] = clock.c1
    return state


def overlap_visibility(state1, state2) -> VisibilityResult:
    """kappa = <state1|state2> for two normalized equal-dimension states."""
    v1 = state_vector(state1, "state1")
    v2 = state_vector(state2, "state2")
    if v1.shape != v2.shape:
        raise StructuralError(
            f"dimension mismatch: {v1.shape[0]} vs {v2.shape[0]}"
        )
    for name, v in (("state1", v1), ("state2", v2)):
        norm = float(np.linalg.norm(v))
        if abs(norm - 1.0) > 1e-9:
            raise StructuralError(f"{name} is not normalized (norm {norm!r})")
    return VisibilityResult.from_kappa(inner_product(v1, v2))


def detection_probability(result: VisibilityResult, delta_phi: float, chi: float,
                          sign: int = +1) -> float:
    """Port probability (1/2)[1 +/- |kappa| sin(delta_phi + chi + upsilon)].

    The two output ports correspond to sign=+1 and sign=-1 and sum to 1
    exactly.
    """
    if sign not in (+1, -1):
        raise ValidationError("sign must be +1 or -1")
    delta_phi = _finite(delta_phi, "delta_phi")
    chi = _finite(chi, "chi")
    return 0.5 * (1.0 + sign * result.v * math.sin(delta_phi + chi + result.upsilon))


def scan_probabilities(result: VisibilityResult, delta_phi: float = 0.0,
                       points: int = DEFAULT_SCAN_POINTS, sign: int = +1):
    """Synthesize a full-period chi scan of the detection probability.

    Returns a list of (chi, P) pairs on a uniform grid over [0, 2*pi],
    suitable for visibility_from_scan.
    """
    if points < 2:
        raise ValidationError("a scan needs at least 2 points")
    grid = np.linspace(0.0, 2.0 * math.pi, points)
    return [(float(chi), detection_probability(result, delta_phi, float(chi), sign))
            for chi in grid]


def visibility_from_scan(probabilities) -> float:
    """Fringe contrast (max-min)/(max+min) over a uniform chi scan.

    The grid must cover a full 2*pi period at a uniform step of at most
    0.1 degree; anything sparser or shorter raises ValidationError.
    """
    pairs = list(probabilities)
    if len(pairs) == 0:
        raise ValidationError("empty scan")
    if len(pairs) < 2:
        raise ValidationError("scan has fewer than 2 points")
    arr = np.asarray(pairs, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValidationError("scan must be a sequence of (chi, probability) pairs")
    if not np.all(np.isfinite(arr)):
        raise ValidationError("scan contains non-finite values")
    chi = arr[:, 0]
    p = arr[:, 1]
    steps = np.diff(chi)
    if np.any(steps <= 0):
        raise ValidationError("chi grid must be strictly increasing")
    step = float(steps[0])
    if float(np.max(np.abs(steps - step))) > 1e-9 * max(step, 1e-30):
        raise ValidationError("chi grid must be uniform")
    if step > MAX_SCAN_STEP * (1 + 1e-9):
        raise ValidationError(
            f"chi step {step:.6g} rad exceeds the 0.1 degree maximum"
        )
    span = float(chi[-1] - chi[0])
    if span + step < 2 * math.pi - 1e-9:
        raise ValidationError("chi grid does not cover a full 2*pi period")
    if np.any(p < -1e-9) or np.any(p > 1 + 1e-9):
        raise ValidationError("probabilities must lie in [0, 1]")
    pmax = float(np.max(p))
    pmin = float(np.min(p))
    if pmax + pmin <= 0:
        raise ValidationError("probabilities sum to zero over the scan")
    return (pmax - pmin) / (pmax + pmin)


def proper_time_difference(g: float, delta_x: float, t_lab: float, c: float) -> float:
    """Proper-time difference g*delta_x*t_lab/c^2 between two arms separated
    by height delta_x in a uniform gravitational field g, after lab time t_lab.
    """
    g = _finite(g, "g")
    delta_x = _finite(delta_x, "delta_x")
    t_lab = _finite(t_lab, "t_lab")
    c = _finite(c, "c")
    if c <= 0:
        raise ValidationError("c must be positive")
    return g * delta_x * t_lab / (c * c)


def noiseless_overlap(clock: ClockSpec, delta_tau: float) -> complex:
    """<psi| e^{-i H0 delta_tau} |psi> for the bare clock (no environment)."""
    delta_tau = _finite(delta_tau, "delta_tau")
    return (abs(clock.c0) ** 2 * cmath.exp(-1j * clock.e0 * delta_tau)
            + abs(clock.c1) ** 2 * cmath.exp(-1j * clock.e1 * delta_tau))


def noiseless_visibility(clock: ClockSpec, delta_tau: float) -> float:
    """|cos(delta_e*delta_tau/2)| for a balanced clock; general amplitudes
    give the modulus of the two-phase average."""
    return abs(noiseless_overlap(clock, delta_tau))
