"""Infinite number-precision limit of the concentration problem.

Rescaling the support {0..dk} onto [-1, 1] and letting dk grow turns the
matrix eigenproblem into a homogeneous Fredholm integral equation with the
sinc kernel ``sin(pi*xi*(z-z')/2) / (pi*(z-z'))``; its eigenvalues depend
only on the concentration parameter ``xi = dalpha*(dk+1)/(2*pi)``.  The
operator is discretized here with a Gauss-Legendre Nystrom rule, which
converges spectrally because the kernel is entire; doubling the node count
supplies an a posteriori error estimate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NoConvergenceError
from .kernel import check_domain, fix_signs, least_upper_bound
from .states import TWO_PI

_REFINE_TOL = 1e-10
_FAIL_TOL = 1e-8
_START_NODES = 32
_MAX_NODES = 4096


def concentration_parameter(delta_alpha: float, delta_k: int) -> float:
    """Product of the two precisions, ``dalpha*(dk+1)/(2*pi)``."""
    check_domain(delta_alpha, delta_k)
    return delta_alpha * (delta_k + 1) / TWO_PI


@dataclass(frozen=True)
class AsymptoticProblem:
    """Sinc-kernel integral eigenproblem on [-1, 1] at a given resolution."""

    xi: float
    nodes: int

    def __post_init__(self) -> None:
        if not np.isfinite(self.xi) or self.xi < 0.0:
            raise DomainError(f"xi {self.xi} must be finite and >= 0")
        if not isinstance(self.nodes, (int, np.integer)) or self.nodes < 2:
            raise DomainError(f"nodes {self.nodes} must be an integer >= 2")
        object.__setattr__(self, "xi", float(self.xi))
        object.__setattr__(self, "nodes", int(self.nodes))

    def kernel(self, z: np.ndarray, zp: np.ndarray) -> np.ndarray:
        """Evaluate the kernel; broadcasts over the arguments."""
        return _sinc_kernel(self.xi, np.asarray(z, float), np.asarray(zp, float))


def _sinc_kernel(xi: float, z: np.ndarray, zp: np.ndarray) -> np.ndarray:
    c = 0.5 * np.pi * xi
    d = z - zp
    x = c * d
    small = np.abs(x) < 1e-4
    x2 = x * x
    series = (c / np.pi) * (1.0 - x2 / 6.0 + x2 * x2 / 120.0 - x2 * x2 * x2 / 5040.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = np.sin(x) / (np.pi * np.where(small, 1.0, d))
    return np.where(small, series, direct)


@dataclass(frozen=True)
class AsymptoticSpectrum:
    """Nystrom spectrum: eigenvalues descending, eigenfunction samples as
    matching columns at the quadrature nodes."""

    eigenvalues: np.ndarray
    eigenfunction_samples: np.ndarray
    nodes: np.ndarray
    weights: np.ndarray
    node_count: int
    error_estimates: np.ndarray


def _nystrom_eigs(xi: float, nodes: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    z, w = np.polynomial.legendre.leggauss(nodes)
    k = _sinc_kernel(xi, z[:, None], z[None, :])
    sw = np.sqrt(w)
    a = sw[:, None] * k * sw[None, :]
    a = 0.5 * (a + a.T)
    vals, vecs = np.linalg.eigh(a)
    order = np.argsort(-vals, kind="stable")
    return vals[order], vecs[:, order], z, w


def nystrom_spectrum(
    problem: AsymptoticProblem, estimate_errors: bool = True
) -> AsymptoticSpectrum:
    """Solve the discretized eigenproblem at the problem's resolution.

    The symmetrized matrix ``sqrt(w_i) K(z_i, z_j) sqrt(w_j)`` shares the
    operator's spectrum up to quadrature error; eigenfunction samples are
    recovered as ``v_i / sqrt(w_i)``.  With ``estimate_errors`` a companion
    solve at half the nodes provides per-eigenvalue error estimates.
    """
    vals, vecs, z, w = _nystrom_eigs(problem.xi, problem.nodes)
    samples = fix_signs(vecs) / np.sqrt(w)[:, None]

    errors = np.full(problem.nodes, np.nan)
    if estimate_errors and problem.nodes >= 4:
        half_vals, _, _, _ = _nystrom_eigs(problem.xi, problem.nodes // 2)
        shared = half_vals.size
        errors[:shared] = np.abs(vals[:shared] - half_vals)

    for arr in (vals, samples, z, w, errors):
        arr.flags.writeable = False
    return AsymptoticSpectrum(vals, samples, z, w, problem.nodes, errors)


def asymptotic_least_upper_bound(xi: float) -> tuple[float, float]:
    """Largest eigenvalue of the limiting operator, with an error estimate.

    Doubles the node count from 32 until two successive values agree to
    1e-10, capping at 4096 nodes.  Raises NoConvergenceError when the cap is
    reached and the last refinement still moved by 1e-8 or more.
    """
    if not np.isfinite(xi) or xi < 0.0:
        raise DomainError(f"xi {xi} must be finite and >= 0")
    if xi == 0.0:
        return 0.0, 0.0

    nodes = _START_NODES
    prev = None
    diff = np.inf
    lam = 0.0
    while nodes <= _MAX_NODES:
        lam = float(_nystrom_eigs(float(xi), nodes)[0][0])
        if prev is not None:
            diff = abs(lam - prev)
            if diff < _REFINE_TOL:
                return lam, diff
        prev = lam
        nodes *= 2
    if diff >= _FAIL_TOL:
        raise NoConvergenceError(
            f"top eigenvalue still moving by {diff:.3e} at {_MAX_NODES} nodes"
        )
    return lam, float(diff)


@dataclass(frozen=True)
class ComparisonReport:
    """Finite-support bound against its infinite-precision limit."""

    xi: float
    delta_k: int
    delta_alpha: float
    lambda0_discrete: float
    lambda0_asymptotic: float
    asymptotic_error: float
    difference: float  # signed, discrete - asymptotic


def compare_discrete_to_asymptotic(xi: float, delta_k: int) -> ComparisonReport:
    """Solve both discretizations of the same operator at fixed ``xi``.

    Sets ``dalpha = 2*pi*xi/(dk+1)``; raises DomainError when that exceeds
    2*pi (i.e. xi > dk+1).
    """
    if not np.isfinite(xi) or xi <= 0.0:
        raise DomainError(f"xi {xi} must be finite and > 0")
    if not isinstance(delta_k, (int, np.integer)) or delta_k < 0:
        raise DomainError(f"dk {delta_k} must be an integer >= 0")
    delta_alpha = TWO_PI * xi / (delta_k + 1)
    if delta_alpha > TWO_PI:
        raise DomainError(
            f"xi {xi} with dk {delta_k} implies dalpha {delta_alpha} > 2*pi"
        )
    lam_disc, _ = least_upper_bound(delta_alpha, int(delta_k))
    lam_asym, err = asymptotic_least_upper_bound(xi)
    return ComparisonReport(
        xi=float(xi),
        delta_k=int(delta_k),
        delta_alpha=float(delta_alpha),
        lambda0_discrete=lam_disc,
        lambda0_asymptotic=lam_asym,
        asymptotic_error=err,
        difference=lam_disc - lam_asym,
    )
