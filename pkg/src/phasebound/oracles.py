"""Independent brute-force checks for the closed-form machinery.

Nothing here shares a method with the production paths: window probabilities
are integrated with composite Simpson on a pointwise-evaluated density, the
top eigenvalue is re-derived by power iteration, and the variational bound is
probed with seeded random states.  Agreement between these and the closed
forms is what the test suite leans on.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .kernel import ConcentrationKernel, build_kernel, check_domain
from .states import TWO_PI, FockState, PhaseWindow


@dataclass(frozen=True)
class OracleConfig:
    """Knobs for the brute-force checks; defaults suit the test suite."""

    quadrature_points: int = 4096  # Simpson subintervals per full circle
    trials: int = 1000
    seed: int = 0
    power_tolerance: float = 1e-12
    max_iterations: int = 100_000

    def __post_init__(self) -> None:
        if self.quadrature_points <= 0 or self.trials <= 0 or self.max_iterations <= 0:
            raise ValueError("counts must be positive")
        if not 0.0 < self.power_tolerance <= 1e-6:
            raise ValueError("power_tolerance must lie in (0, 1e-6]")


def quadrature_probability(
    state: FockState, window: PhaseWindow, cfg: OracleConfig = OracleConfig()
) -> float:
    """Composite-Simpson integral of the canonical phase density over the window.

    The density is evaluated directly from the Fourier sum so this path stays
    independent of the kernel quadratic form.
    """
    if window.width == 0.0:
        return 0.0
    lo, hi = window.bounds
    nsub = int(round(cfg.quadrature_points * window.width / TWO_PI))
    nsub = max(2, nsub + (nsub % 2))
    phi = np.linspace(lo, hi, nsub + 1)
    j = np.arange(state.size)
    amp = np.exp(-1j * np.outer(phi, j)) @ state.amplitudes
    dens = np.abs(amp) ** 2 / TWO_PI
    h = window.width / nsub
    weights = np.ones(nsub + 1)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    return float(h / 3.0 * np.dot(weights, dens))


@dataclass(frozen=True)
class PowerIterationResult:
    value: float
    vector: np.ndarray
    iterations: int
    residual: float
    converged: bool
    gap_degenerate: bool


def power_iteration(
    kernel: ConcentrationKernel, cfg: OracleConfig = OracleConfig()
) -> PowerIterationResult:
    """Dominant eigenpair by repeated multiplication from a seeded start.

    Convergence means residual ``||G x - lambda x|| <= power_tolerance``.
    A multi-dimensional kernel that converges on the very first step can only
    have handed the random start an eigenvector, so the result is flagged
    ``gap_degenerate``; running out of iterations flags ``converged=False``.
    Neither condition raises: callers use the flags to skip comparisons.
    """
    g = kernel.entries
    if not np.any(g):
        raise DomainError("power iteration needs a nonzero kernel")
    rng = np.random.default_rng(cfg.seed)
    x = rng.standard_normal(kernel.dim)
    x /= np.linalg.norm(x)

    lam = 0.0
    residual = np.inf
    iterations = 0
    for iterations in range(1, cfg.max_iterations + 1):
        y = g @ x
        lam = float(x @ y)
        residual = float(np.linalg.norm(y - lam * x))
        if residual <= cfg.power_tolerance:
            return PowerIterationResult(
                value=lam,
                vector=x,
                iterations=iterations,
                residual=residual,
                converged=True,
                gap_degenerate=(kernel.dim > 1 and iterations == 1),
            )
        ynorm = np.linalg.norm(y)
        if ynorm == 0.0:  # start landed in the kernel's null space
            x = rng.standard_normal(kernel.dim)
            x /= np.linalg.norm(x)
            continue
        x = y / ynorm
    return PowerIterationResult(
        value=lam,
        vector=x,
        iterations=iterations,
        residual=residual,
        converged=False,
        gap_degenerate=False,
    )


def random_state_search(
    delta_alpha: float, delta_k: int, cfg: OracleConfig = OracleConfig()
) -> float:
    """Best quadratic-form value over seeded random normalized states.

    States are drawn with complex Gaussian amplitudes on {0..dk} (the
    rotation-invariant distribution on the sphere), one child seed
    ``seed + trial`` per trial so runs are reproducible and trials could be
    farmed out without changing the result.
    """
    check_domain(delta_alpha, delta_k)
    g = build_kernel(delta_alpha, delta_k).entries
    dim = delta_k + 1
    states = np.empty((cfg.trials, dim), dtype=np.complex128)
    for t in range(cfg.trials):
        z = np.random.default_rng(cfg.seed + t).standard_normal(2 * dim)
        states[t] = z[:dim] + 1j * z[dim:]
    norms = np.linalg.norm(states, axis=1)
    norms[norms == 0.0] = 1.0  # measure-zero guard; value 0 cannot win
    states /= norms[:, None]
    values = np.einsum("td,de,te->t", states.conj(), g, states).real
    return float(values.max())
