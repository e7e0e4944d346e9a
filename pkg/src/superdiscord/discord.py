"""Correlation measures: conditional entropies, discord, super discord, and
the post-measurement resurrection check.

The basis minimization is a two-phase scheme: exhaustive evaluation on a
(gamma, delta) lattice, then Nelder-Mead refinement from the best lattice
point. Lattice evaluation is vectorized over all grid points at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize as _nm_minimize

from . import measure, qstate
from .errors import NoConvergence
from .measure import INFINITY, QubitBasis
from .qstate import DensityMatrix


@dataclass(frozen=True)
class OptimizerConfig:
    grid_gamma: int = 64
    grid_delta: int = 64
    refine_tol: float = 1e-8
    max_refine_iters: int = 500


DEFAULT_CONFIG = OptimizerConfig()


def quantum_conditional_entropy(rho: DensityMatrix) -> float:
    """S(A|B) = S(AB) - S(B); may be negative for entangled states."""
    return qstate.von_neumann_entropy(rho.entries) - qstate.von_neumann_entropy(
        qstate.partial_trace_a(rho)
    )


def strong_conditional_entropy(rho: DensityMatrix, basis: QubitBasis) -> float:
    """Measured conditional entropy Σ p_i S(ρ^A_i) for projectors in `basis`."""
    outcomes = measure.projective_outcomes(rho, basis)
    return sum(
        o.probability * qstate.von_neumann_entropy(o.conditional_state)
        for o in outcomes
        if not o.degenerate
    )


def weak_conditional_entropy(rho: DensityMatrix, basis: QubitBasis, x: float) -> float:
    """p(x) S(ρ_{A|P(x)}) + p(-x) S(ρ_{A|P(-x)}) for the weak pair in `basis`."""
    outcomes = measure.weak_outcomes(rho, measure.weak_pair(basis, x))
    return sum(
        o.probability * qstate.von_neumann_entropy(o.conditional_state)
        for o in outcomes
        if not o.degenerate
    )


def _batched_weak_ce(rho4: np.ndarray, x: float, gammas: np.ndarray, deltas: np.ndarray) -> np.ndarray:
    """Weak conditional entropy for a flat batch of (gamma, delta) bases."""
    t = math.tanh(x) if math.isfinite(x) else 1.0
    ap = math.sqrt((1.0 - t) / 2.0)
    am = math.sqrt((1.0 + t) / 2.0)
    kets = np.stack(
        [np.cos(gammas / 2), np.exp(1j * deltas) * np.sin(gammas / 2)], axis=-1
    )
    proj = kets[:, :, None] * kets.conj()[:, None, :]
    eye = np.eye(2)
    vals = np.zeros(len(gammas))
    for c_phi, c_bar in ((ap, am), (am, ap)):
        ops = c_bar * eye + (c_phi - c_bar) * proj
        m = np.einsum("gab,ibjc,gca->gij", ops, rho4, ops, optimize=True)
        p = np.real(np.einsum("gii->g", m))
        lam = np.linalg.eigvalsh(m)
        live = p > measure.DEGENERATE_PROB
        lam = np.where(live[:, None], lam / np.maximum(p, 1e-300)[:, None], 0.0)
        lam = np.clip(lam, 0.0, 1.0)
        with np.errstate(divide="ignore", invalid="ignore"):
            terms = np.where(lam > 0.0, lam * np.log2(lam), 0.0)
        vals += np.where(live, -p * terms.sum(axis=-1), 0.0)
    return vals


@dataclass(frozen=True)
class MinimizationResult:
    basis: QubitBasis
    value: float
    grid_spread: float


def _minimize(rho: DensityMatrix, x: float, cfg: OptimizerConfig) -> MinimizationResult:
    rho4 = rho.as_tensor()
    gammas = np.linspace(0.0, math.pi, cfg.grid_gamma)
    deltas = np.linspace(0.0, 2 * math.pi, cfg.grid_delta, endpoint=False)
    gg, dd = np.meshgrid(gammas, deltas, indexing="ij")
    gg, dd = gg.ravel(), dd.ravel()
    vals = _batched_weak_ce(rho4, x, gg, dd)
    vmin = float(vals.min())
    spread = float(vals.max()) - vmin
    # ties broken toward smallest gamma, then delta (row-major, gamma outer)
    idx = int(np.flatnonzero(vals <= vmin + cfg.refine_tol)[0])
    if spread < cfg.refine_tol:
        # flat landscape: nothing to refine, and Nelder-Mead cycles on exact ties
        basis = measure.basis_from_ket(QubitBasis(float(gg[idx]), float(dd[idx])).ket())
        return MinimizationResult(basis, float(vals[idx]), spread)

    def objective(p):
        return float(_batched_weak_ce(rho4, x, np.array([p[0]]), np.array([p[1]]))[0])

    res = _nm_minimize(
        objective,
        [gg[idx], dd[idx]],
        method="Nelder-Mead",
        options={
            "fatol": cfg.refine_tol,
            "xatol": 1e-8,
            "maxiter": cfg.max_refine_iters,
            "maxfev": 4 * cfg.max_refine_iters,
        },
    )
    if not res.success:
        raise NoConvergence(
            f"basis refinement stopped before reaching tol {cfg.refine_tol:g} "
            f"(best value {min(res.fun, vmin):.9g})",
            best_value=float(min(res.fun, vmin)),
        )
    if res.fun <= vmin:
        g_best, d_best, v_best = float(res.x[0]), float(res.x[1]), float(res.fun)
    else:
        jmin = int(np.flatnonzero(vals <= vmin)[0])
        g_best, d_best, v_best = float(gg[jmin]), float(dd[jmin]), vmin
    # fold arbitrary refined angles back into canonical ranges
    basis = measure.basis_from_ket(QubitBasis(g_best, d_best).ket())
    return MinimizationResult(basis, v_best, spread)


def minimize_conditional_entropy(
    rho: DensityMatrix, x: float, cfg: OptimizerConfig = DEFAULT_CONFIG
) -> tuple[QubitBasis, float]:
    """Basis minimizing the weak (or, at x = INFINITY, strong) conditional entropy."""
    res = _minimize(rho, x, cfg)
    return res.basis, res.value


def normal_discord(
    rho: DensityMatrix, cfg: OptimizerConfig = DEFAULT_CONFIG
) -> tuple[float, QubitBasis]:
    """D_s = min_basis S(A|{Pi}) - S(A|B)."""
    res = _minimize(rho, INFINITY, cfg)
    return res.value - quantum_conditional_entropy(rho), res.basis


def super_discord(
    rho: DensityMatrix, x: float, cfg: OptimizerConfig = DEFAULT_CONFIG
) -> tuple[float, QubitBasis]:
    """D_w = min_basis S_w(A|{P(x)}) - S(A|B)."""
    res = _minimize(rho, x, cfg)
    return res.value - quantum_conditional_entropy(rho), res.basis


def extra_correlation(
    rho: DensityMatrix, x: float, cfg: OptimizerConfig = DEFAULT_CONFIG
) -> float:
    """Δ = D_w - D_s, the correlation seen by weak but not projective measurement."""
    dw, _ = super_discord(rho, x, cfg)
    ds, _ = normal_discord(rho, cfg)
    return dw - ds


@dataclass(frozen=True)
class DiscordReport:
    conditional_entropy_qq: float
    mutual_info: float
    discord: float
    super_discord: float
    delta: float
    strong_basis: QubitBasis
    weak_basis: QubitBasis
    strength: float


def analyze(
    rho: DensityMatrix, x: float, cfg: OptimizerConfig = DEFAULT_CONFIG
) -> DiscordReport:
    """All correlation measures of one state at one strength, bundled."""
    cond_qq = quantum_conditional_entropy(rho)
    strong = _minimize(rho, INFINITY, cfg)
    weak = _minimize(rho, x, cfg)
    ds = strong.value - cond_qq
    dw = weak.value - cond_qq
    return DiscordReport(
        conditional_entropy_qq=cond_qq,
        mutual_info=qstate.mutual_information(rho),
        discord=ds,
        super_discord=dw,
        delta=dw - ds,
        strong_basis=strong.basis,
        weak_basis=weak.basis,
        strength=x,
    )


@dataclass(frozen=True)
class ResurrectionRecord:
    delta: float
    post_super_discord: float
    gap: float
    strong_basis: QubitBasis
    post_weak_basis: QubitBasis
    ambiguous_minimizer: bool
    coincidence: bool


def verify_resurrection(
    rho: DensityMatrix, x: float, cfg: OptimizerConfig = DEFAULT_CONFIG
) -> ResurrectionRecord:
    """Check that Δ(ρ, x) equals the super discord of the projectively measured state.

    The projection basis is the strong-conditional-entropy minimizer. When the
    strong landscape is flat over the whole grid the minimizer is ambiguous;
    we then fall back to the weak-entropy minimizer (the basis whose strong
    limit the flat landscape leaves undetermined), and to the computational
    basis when that landscape is flat as well (e.g. Werner states).
    """
    if not (math.isfinite(x) and x > 0):
        raise ValueError(f"resurrection check needs finite x > 0, got {x}")
    cond_qq = quantum_conditional_entropy(rho)
    strong = _minimize(rho, INFINITY, cfg)
    weak = _minimize(rho, x, cfg)
    delta = weak.value - strong.value
    ambiguous = strong.grid_spread < cfg.refine_tol
    if not ambiguous:
        proj_basis = strong.basis
    elif weak.grid_spread >= cfg.refine_tol:
        proj_basis = weak.basis
    else:
        proj_basis = measure.COMPUTATIONAL
    post = measure.project_state(rho, proj_basis)
    post_weak = _minimize(post, x, cfg)
    post_dw = post_weak.value - quantum_conditional_entropy(post)
    return ResurrectionRecord(
        delta=delta,
        post_super_discord=post_dw,
        gap=abs(delta - post_dw),
        strong_basis=proj_basis,
        post_weak_basis=post_weak.basis,
        ambiguous_minimizer=ambiguous,
        coincidence=measure.same_basis(proj_basis, post_weak.basis),
    )
