"""Brute-force reference pipeline.

Build any interaction Hamiltonian, exponentiate it, evolve the joint
initial state along both arms, and overlap the branches.  Nothing here
touches the closed forms in jaynes_cummings or channels, so agreement
between this route and those formulas is evidence, not tautology.
"""

from dataclasses import dataclass

import numpy as np

from .errors import StructuralError
from .interferometer import VisibilityResult, overlap_visibility
from .numerics import (HERMITICITY_TOL, _real_scalar, _square_complex,
                       evolution_operator, state_vector)


@dataclass(frozen=True)
class OracleJob:
    """Two arm Hamiltonians (equal dimension, Hermitian), the shared joint
    initial state, and the two proper times."""

    hamiltonian_arm1: np.ndarray
    hamiltonian_arm2: np.ndarray
    initial_state: np.ndarray
    tau1: float
    tau2: float

    def __post_init__(self):
        h1 = _square_complex(self.hamiltonian_arm1, "hamiltonian_arm1")
        h2 = _square_complex(self.hamiltonian_arm2, "hamiltonian_arm2")
        for name, h in (("hamiltonian_arm1", h1), ("hamiltonian_arm2", h2)):
            if float(np.max(np.abs(h - h.conj().T))) > HERMITICITY_TOL:
                raise StructuralError(f"{name} is not Hermitian")
        if h1.shape != h2.shape:
            raise StructuralError(
                f"arm Hamiltonians differ in dimension: {h1.shape[0]} vs {h2.shape[0]}"
            )
        state = state_vector(self.initial_state, "initial_state")
        if state.shape[0] != h1.shape[0]:
            raise StructuralError(
                f"initial_state dimension {state.shape[0]} does not match "
                f"Hamiltonian dimension {h1.shape[0]}"
            )
        norm = float(np.linalg.norm(state))
        if abs(norm - 1.0) > 1e-9:
            raise StructuralError(f"initial_state is not normalized (norm {norm!r})")
        object.__setattr__(self, "hamiltonian_arm1", h1)
        object.__setattr__(self, "hamiltonian_arm2", h2)
        object.__setattr__(self, "initial_state", state)
        object.__setattr__(self, "tau1", _real_scalar(self.tau1, "tau1"))
        object.__setattr__(self, "tau2", _real_scalar(self.tau2, "tau2"))


def evolve_state(h, state, t) -> np.ndarray:
    """exp(-i*h*t) applied to state."""
    u = evolution_operator(h, t)
    v = state_vector(state)
    if v.shape[0] != u.shape[0]:
        raise StructuralError(
            f"state dimension {v.shape[0]} does not match Hamiltonian "
            f"dimension {u.shape[0]}"
        )
    return u @ v


def oracle_visibility(job: OracleJob) -> VisibilityResult:
    """Overlap of the two arm-evolved branches of job.initial_state."""
    branch1 = evolve_state(job.hamiltonian_arm1, job.initial_state, job.tau1)
    branch2 = evolve_state(job.hamiltonian_arm2, job.initial_state, job.tau2)
    return overlap_visibility(branch1, branch2)
