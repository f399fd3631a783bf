"""Deterministic dense Hermitian linear algebra.

Everything downstream (Hamiltonian diagnostics, the brute-force overlap
oracle, channel propagators) funnels through the three primitives here.
The matrices are tiny (dim <= 2*(n_cutoff+1), typically well under 100),
so robustness and bit-stable determinism take priority over speed.

Conventions:
  * eigenvalues are reported in ascending order,
  * degenerate eigenvalues are ordered lexicographically by eigenvector
    components,
  * each eigenvector's global phase is fixed so its first significant
    component is real and positive,
so repeated calls on the same matrix return identical arrays.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import StructuralError

HERMITICITY_TOL = 1e-12

# component magnitude below which an entry is ignored when picking the
# phase-fixing pivot (normalized columns always have a component >= 1/sqrt(dim))
_PHASE_CUTOFF = 1e-9
_TIE_TOL = 1e-12


@dataclass(frozen=True)
class Spectrum:
    """Eigendecomposition of a Hermitian matrix.

    eigenvalues: (n,) real array, ascending.
    eigenvectors: (n, n) complex array; column k belongs to eigenvalues[k].
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def state_vector(s, name="state"):
    """Coerce to a finite 1-D complex amplitude vector."""
    try:
        v = np.asarray(s, dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise StructuralError(f"{name} is not a numeric vector") from exc
    if v.ndim != 1 or v.size == 0:
        raise StructuralError(f"{name} must be a non-empty 1-D amplitude vector")
    if not np.all(np.isfinite(v.real)) or not np.all(np.isfinite(v.imag)):
        raise StructuralError(f"{name} contains non-finite amplitudes")
    return v


def _square_complex(h, name="matrix"):
    try:
        a = np.asarray(h, dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise StructuralError(f"{name} is not a numeric matrix") from exc
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise StructuralError(f"{name} must be square, got shape {a.shape}")
    if a.shape[0] == 0:
        raise StructuralError(f"{name} must be non-empty")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise StructuralError(f"{name} contains non-finite entries")
    return a


def _real_scalar(x, name):
    try:
        val = float(x)
    except (TypeError, ValueError) as exc:
        raise StructuralError(f"{name} must be a real number") from exc
    if not math.isfinite(val):
        raise StructuralError(f"{name} must be finite")
    return val


def _fix_phases(v):
    v = v.copy()
    for k in range(v.shape[1]):
        col = v[:, k]
        sig = np.flatnonzero(np.abs(col) > _PHASE_CUTOFF)
        pivot = col[sig[0]] if sig.size else col[int(np.argmax(np.abs(col)))]
        v[:, k] = col * (pivot.conjugate() / abs(pivot))
    return v


def _lex_key(col):
    r = np.round(col.real, 12) + 0.0  # normalize -0.0
    im = np.round(col.imag, 12) + 0.0
    return tuple(np.stack([r, im], axis=1).ravel())


def _tie_break_order(w, v):
    scale = max(1.0, float(np.max(np.abs(w))))
    order = list(range(len(w)))
    i = 0
    while i < len(w):
        j = i
        while j + 1 < len(w) and w[j + 1] - w[j] <= _TIE_TOL * scale:
            j += 1
        if j > i:
            block = order[i : j + 1]
            block.sort(key=lambda k: _lex_key(v[:, k]))
            order[i : j + 1] = block
        i = j + 1
    return np.asarray(order)


def hermitian_eig(h) -> Spectrum:
    """Diagonalize a Hermitian matrix with deterministic ordering and phases.

    Raises StructuralError if the input is not square, not finite, or not
    Hermitian to within 1e-12 (absolute, entrywise).
    """
    a = _square_complex(h)
    if float(np.max(np.abs(a - a.conj().T))) > HERMITICITY_TOL:
        raise StructuralError(f"matrix is not Hermitian within {HERMITICITY_TOL:g}")
    w, v = np.linalg.eigh(a)
    v = _fix_phases(v)
    order = _tie_break_order(w, v)
    return Spectrum(
        eigenvalues=np.ascontiguousarray(w[order]),
        eigenvectors=np.ascontiguousarray(v[:, order]),
    )


def evolution_operator(h, t) -> np.ndarray:
    """Unitary propagator exp(-i*h*t), synthesized from the spectrum.

    Equivalent to a matrix exponential; exact unitarity holds to round-off
    because the eigenbasis of a Hermitian matrix is orthonormal.
    """
    t = _real_scalar(t, "time")
    spec = hermitian_eig(h)
    phases = np.exp(-1j * spec.eigenvalues * t)
    return (spec.eigenvectors * phases) @ spec.eigenvectors.conj().T


def inner_product(a, b) -> complex:
    """Hermitian inner product <a|b>; conjugates the first argument."""
    va = state_vector(a, "state a")
    vb = state_vector(b, "state b")
    if va.shape != vb.shape:
        raise StructuralError(
            f"dimension mismatch: {va.shape[0]} vs {vb.shape[0]}"
        )
    return complex(np.vdot(va, vb))
