"""Concentration kernel for joint phase/number precision and its spectrum.

The kernel is the real symmetric Toeplitz matrix whose (n, m) entry is
``sin((n-m)*dalpha/2) / (pi*(n-m))`` with the n -> m limit ``dalpha/(2*pi)``
on the diagonal.  Its largest eigenvalue is the least upper bound on the
probability of a successful phase measurement at precision ``dalpha`` after a
number measurement at precision ``dk``; the top eigenvector is the state that
attains it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailureError, DomainError
from .states import TWO_PI, FockState


def check_domain(delta_alpha: float, delta_k: int) -> None:
    """Reject parameters outside 0 <= dalpha <= 2*pi, integer dk >= 0."""
    if not np.isfinite(delta_alpha):
        raise DomainError("dalpha must be finite")
    if not 0.0 <= delta_alpha <= TWO_PI:
        raise DomainError(f"dalpha {delta_alpha} outside [0, 2*pi]")
    if not isinstance(delta_k, (int, np.integer)):
        raise DomainError("dk must be an integer")
    if delta_k < 0:
        raise DomainError(f"dk {delta_k} < 0")


def kernel_column(delta_alpha: float, size: int) -> np.ndarray:
    """First column of the Toeplitz kernel for a support of ``size`` indices."""
    if size < 1:
        raise DomainError(f"size {size} < 1")
    col = np.empty(size)
    col[0] = delta_alpha / TWO_PI
    if size > 1:
        if delta_alpha == TWO_PI:
            # sin(pi*d) is exactly zero for integer d; avoid rounding noise
            col[1:] = 0.0
        else:
            d = np.arange(1, size)
            col[1:] = np.sin(0.5 * delta_alpha * d) / (np.pi * d)
    return col


def toeplitz_from_column(col: np.ndarray) -> np.ndarray:
    n = col.size
    idx = np.abs(np.arange(n)[:, None] - np.arange(n)[None, :])
    return col[idx]


@dataclass(frozen=True)
class ConcentrationKernel:
    """Built kernel matrix together with its parameters."""

    delta_alpha: float
    delta_k: int
    entries: np.ndarray

    @property
    def dim(self) -> int:
        return self.delta_k + 1

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries))


@dataclass(frozen=True)
class SpectrumDiagnostics:
    max_residual: float
    orthogonality_defect: float
    top_gap: float  # lambda_0 - lambda_1 (inf for 1x1)
    min_gap: float  # smallest consecutive gap (inf for 1x1)


@dataclass(frozen=True)
class SpectrumResult:
    """Full spectrum, eigenvalues descending, eigenvectors as matching columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    diagnostics: SpectrumDiagnostics


def build_kernel(delta_alpha: float, delta_k: int) -> ConcentrationKernel:
    """Assemble the (dk+1) x (dk+1) concentration kernel."""
    check_domain(delta_alpha, delta_k)
    entries = toeplitz_from_column(kernel_column(float(delta_alpha), delta_k + 1))
    entries.flags.writeable = False
    return ConcentrationKernel(float(delta_alpha), int(delta_k), entries)


def fix_signs(vectors: np.ndarray) -> np.ndarray:
    """Flip each column so its largest-magnitude component is positive."""
    lead = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[lead, np.arange(vectors.shape[1])])
    signs[signs == 0] = 1.0
    return vectors * signs


def eigensystem(kernel: ConcentrationKernel) -> SpectrumResult:
    """Full symmetric eigendecomposition, eigenvalues descending.

    Raises ConvergenceFailureError when the residual target
    ``1e-12 * (dk+1)`` is missed.
    """
    g = kernel.entries
    vals, vecs = np.linalg.eigh(g)
    order = np.argsort(-vals, kind="stable")
    vals = vals[order]
    vecs = fix_signs(vecs[:, order])

    residual = float(np.max(np.linalg.norm(g @ vecs - vecs * vals, axis=0)))
    orth = float(np.max(np.abs(vecs.T @ vecs - np.eye(kernel.dim))))
    if kernel.dim > 1:
        gaps = -np.diff(vals)
        diag = SpectrumDiagnostics(residual, orth, float(gaps[0]), float(gaps.min()))
    else:
        diag = SpectrumDiagnostics(residual, orth, np.inf, np.inf)

    if residual > 1e-12 * kernel.dim:
        raise ConvergenceFailureError(
            f"eigensolve residual {residual:.3e} exceeds {1e-12 * kernel.dim:.3e}",
            diagnostics=diag,
        )
    vals.flags.writeable = False
    vecs.flags.writeable = False
    return SpectrumResult(vals, vecs, diag)


def least_upper_bound(delta_alpha: float, delta_k: int) -> tuple[float, FockState]:
    """Largest eigenvalue of the kernel and the state attaining it.

    The optimal state lives on photon numbers {0, ..., dk}.  For dalpha == 0
    the bound is 0 and the vacuum state is returned by convention.
    """
    check_domain(delta_alpha, delta_k)
    if delta_alpha == 0.0:
        vacuum = np.zeros(delta_k + 1, dtype=np.complex128)
        vacuum[0] = 1.0
        return 0.0, FockState(vacuum, offset=0)
    spectrum = eigensystem(build_kernel(delta_alpha, delta_k))
    top = spectrum.eigenvectors[:, 0].astype(np.complex128)
    return float(spectrum.eigenvalues[0]), FockState(top, offset=0)


def cauchy_bound(delta_alpha: float, delta_k: int) -> float:
    """Precision-product bound ``min(1, dalpha*(dk+1)/(2*pi))``.

    Dominates every achievable measurement probability, hence also the
    least upper bound.
    """
    check_domain(delta_alpha, delta_k)
    return min(1.0, delta_alpha * (delta_k + 1) / TWO_PI)
