"""Projective and weak two-outcome measurements on the qubit subsystem B."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import qstate
from .errors import NegativeStrength
from .qstate import DensityMatrix

INFINITY = math.inf

DEGENERATE_PROB = 1e-12


@dataclass(frozen=True)
class QubitBasis:
    """Orthonormal qubit basis parametrized by polar angle gamma and phase delta.

    |phi>    = cos(gamma/2)|0> + e^{i delta} sin(gamma/2)|1>
    |phibar> = cos(gamma/2)|1> - e^{-i delta} sin(gamma/2)|0>
    """

    gamma: float
    delta: float

    def ket(self) -> np.ndarray:
        c, s = np.cos(self.gamma / 2), np.sin(self.gamma / 2)
        return np.array([c, np.exp(1j * self.delta) * s])

    def ket_bar(self) -> np.ndarray:
        c, s = np.cos(self.gamma / 2), np.sin(self.gamma / 2)
        return np.array([-np.exp(-1j * self.delta) * s, c])


COMPUTATIONAL = QubitBasis(0.0, 0.0)


def basis_from_ket(v) -> QubitBasis:
    """Canonical (gamma, delta) for a unit ket, modulo global phase."""
    v = np.asarray(v, dtype=complex)
    v = v / np.linalg.norm(v)
    if abs(v[0]) < 1e-12:
        return QubitBasis(math.pi, 0.0)
    v = v * (v[0].conjugate() / abs(v[0]))
    gamma = 2.0 * math.atan2(abs(v[1]), v[0].real)
    delta = float(np.angle(v[1])) % (2 * math.pi) if abs(v[1]) > 1e-12 else 0.0
    return QubitBasis(gamma, delta)


def projectors(basis: QubitBasis) -> tuple[np.ndarray, np.ndarray]:
    """Rank-1 projectors onto |phi> and |phibar>."""
    k, kb = basis.ket(), basis.ket_bar()
    return np.outer(k, k.conj()), np.outer(kb, kb.conj())


def same_basis(b1: QubitBasis, b2: QubitBasis, tol: float = 1e-4) -> bool:
    """Whether two bases agree as unordered projector pairs, up to phase."""
    overlap = abs(np.vdot(b1.ket(), b2.ket())) ** 2
    return bool(overlap >= 1.0 - tol or overlap <= tol)


@dataclass(frozen=True)
class WeakOperatorPair:
    """The operators P(x), P(-x) built from a basis and a strength x >= 0."""

    basis: QubitBasis
    strength: float
    amp_plus: float
    amp_minus: float
    op_plus: np.ndarray
    op_minus: np.ndarray


def weak_pair(basis: QubitBasis, x: float) -> WeakOperatorPair:
    """Build P(x) = a(x) Pi_phi + a(-x) Pi_phibar and its partner P(-x).

    a(±x) = sqrt((1 ∓ tanh x)/2); x = INFINITY yields the projective limit
    P(-x) = Pi_phi, P(x) = Pi_phibar exactly (tanh(inf) = 1).
    """
    if x < 0:
        raise NegativeStrength(f"strength must be >= 0, got {x}")
    t = math.tanh(x) if math.isfinite(x) else 1.0
    ap = math.sqrt((1.0 - t) / 2.0)
    am = math.sqrt((1.0 + t) / 2.0)
    pi, pib = projectors(basis)
    return WeakOperatorPair(basis, x, ap, am, ap * pi + am * pib, am * pi + ap * pib)


@dataclass(frozen=True)
class MeasurementOutcome:
    conditional_state: np.ndarray
    probability: float
    degenerate: bool = False


def _outcome(rho: DensityMatrix, op: np.ndarray) -> MeasurementOutcome:
    t = rho.as_tensor()
    m = np.einsum("ab,ibjc,ca->ij", op, t, op)
    p = float(np.trace(m).real)
    if p < DEGENERATE_PROB:
        # zero-weight branch: placeholder state, unobservable under 0*log0 = 0
        return MeasurementOutcome(np.eye(rho.dim_a) / rho.dim_a, 0.0, degenerate=True)
    return MeasurementOutcome(m / p, p)


def weak_outcomes(
    rho: DensityMatrix, pair: WeakOperatorPair
) -> tuple[MeasurementOutcome, MeasurementOutcome]:
    """Conditional states and probabilities for outcomes P(x), P(-x), in that order."""
    return _outcome(rho, pair.op_plus), _outcome(rho, pair.op_minus)


def projective_outcomes(
    rho: DensityMatrix, basis: QubitBasis
) -> tuple[MeasurementOutcome, MeasurementOutcome]:
    """Conditional states and probabilities for Pi_phi, Pi_phibar, in that order."""
    pi, pib = projectors(basis)
    return _outcome(rho, pi), _outcome(rho, pib)


def project_state(rho: DensityMatrix, basis: QubitBasis) -> DensityMatrix:
    """Fully decohered state after a projective measurement of B in `basis`."""
    eye_a = np.eye(rho.dim_a)
    acc = np.zeros_like(rho.entries)
    for pi in projectors(basis):
        big = np.kron(eye_a, pi)
        acc += big @ rho.entries @ big
    return qstate.validate(acc, rho.dim_a, rho.dim_b)
