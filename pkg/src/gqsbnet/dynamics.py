"""Simulation and outcome classification for the dominance-scaled flow.

Opinions follow the linear flow x' = -L x with the scaled Laplacian.  The
gauge-weighted total opinion is conserved exactly by the integrator, so the
flow's limit, when it exists, is the projection of the start state onto the
stationary direction along that functional.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import BadStep, DimensionMismatch, NotPolarizing
from .operators import OperatorBundle
from .signed_graph import Bipartition
from .spectral import Verdict, certify, sym_eigen

DIVERGENCE_LIMIT = 1e12


class Termination(str, enum.Enum):
    CONVERGED = "Converged"
    MAX_TIME = "MaxTime"
    DIVERGED = "Diverged"


class OutcomeKind(str, enum.Enum):
    ASYMMETRIC_POLARIZATION = "AsymmetricPolarization"
    SYMMETRIC_POLARIZATION = "SymmetricPolarization"
    NEUTRAL_CONSENSUS = "NeutralConsensus"
    CONSENSUS = "Consensus"
    DIVERGENCE = "Divergence"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class Trajectory:
    """Sampled states of one integration run; rows of ``states`` pair with
    ``times``, the last row being the state at termination."""

    times: np.ndarray
    states: np.ndarray
    terminated: Termination


@dataclass(frozen=True)
class OutcomeReport:
    """Final-state classification against the split-limit pattern.

    ``defect`` is the worst residual of that pattern: spread inside either
    subset, or the amplified cross-subset sum.  ``ratio`` is the side-one
    to side-two mean ratio, None when side two sits at zero.
    """

    kind: OutcomeKind
    v1_value: float
    v2_value: float
    ratio: float | None
    defect: float


def _state_vector(bundle: OperatorBundle, x0) -> np.ndarray:
    x = np.asarray(x0, dtype=float).reshape(-1)
    if x.shape[0] != bundle.n:
        raise DimensionMismatch(f"expected {bundle.n} entries, got {x.shape[0]}")
    return x


def default_step(bundle: OperatorBundle) -> float:
    """Conservative default step: 1e-3 over the spectral radius of the
    gauge partner Laplacian (1e-3 outright for an edgeless network)."""
    w = sym_eigen(bundle.z_laplacian).eigenvalues
    radius = float(np.max(np.abs(w))) if w.size else 0.0
    return 1e-3 / radius if radius > 0 else 1e-3


def integrate(
    bundle: OperatorBundle,
    x0,
    dt: float | None = None,
    t_max: float = 1000.0,
    stop_tol: float = 1e-10,
    record_every: int | None = None,
) -> Trajectory:
    """Fixed-step fourth-order Runge-Kutta run of x' = -L x.

    Stops when the flow velocity drops below ``stop_tol`` (Converged), the
    state magnitude passes 1e12 (Diverged), or time runs out (MaxTime).
    States are recorded every ``record_every`` accepted steps (auto-chosen
    to keep a few thousand samples when omitted); the initial and final
    states are always recorded.
    """
    x = _state_vector(bundle, x0)
    if dt is None:
        dt = default_step(bundle)
    dt = float(dt)
    if not dt > 0 or not np.isfinite(dt):
        raise BadStep(f"step size must be a positive real, got {dt}")
    # scale down a hair so t_max/dt landing a rounding error above an
    # integer does not buy a whole extra step
    steps = max(1, int(np.ceil((t_max / dt) * (1.0 - 1e-14))))
    if record_every is None:
        record_every = max(1, steps // 2048)
    lap = bundle.laplacian

    times = [0.0]
    states = [x.copy()]
    status = Termination.MAX_TIME
    done = 0
    for k in range(steps):
        velocity = lap @ x
        if float(np.max(np.abs(velocity))) <= stop_tol:
            status = Termination.CONVERGED
            break
        k1 = -dt * velocity
        k2 = -dt * (lap @ (x + 0.5 * k1))
        k3 = -dt * (lap @ (x + 0.5 * k2))
        k4 = -dt * (lap @ (x + k3))
        x = x + (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0
        done = k + 1
        if float(np.max(np.abs(x))) > DIVERGENCE_LIMIT:
            status = Termination.DIVERGED
            break
        if done % record_every == 0:
            times.append(done * dt)
            states.append(x.copy())
    if times[-1] != done * dt:
        times.append(done * dt)
        states.append(x.copy())
    t_arr = np.array(times)
    s_arr = np.vstack(states)
    t_arr.setflags(write=False)
    s_arr.setflags(write=False)
    return Trajectory(t_arr, s_arr, status)


def closed_form_state(bundle: OperatorBundle, x0, t: float) -> np.ndarray:
    """Exact state at time t via the gauge partner's eigendecomposition.

    The flow is gauge-similar to a symmetric one, so the matrix exponential
    factors through that spectrum.
    """
    x = _state_vector(bundle, x0)
    dec = sym_eigen(bundle.z_laplacian)
    gauged = bundle.coord_gauge * x
    coeff = dec.eigenvectors.T @ gauged
    evolved = dec.eigenvectors @ (np.exp(-dec.eigenvalues * float(t)) * coeff)
    return evolved / bundle.coord_gauge


def predict_final(bundle: OperatorBundle, x0) -> np.ndarray:
    """Steady state the flow settles into, without integrating.

    Only defined when the certificate clears the scenario (asymmetric
    polarization, or the coefficient-1 consensus case); otherwise raises
    NotPolarizing.  The limit scales the stationary direction by the
    conserved gauge-weighted mean of the start state: side one lands at
    -gamma times the side-two value.
    """
    x = _state_vector(bundle, x0)
    cert = certify(bundle.graph, bundle.partition, bundle.gamma)
    if cert.verdict not in (Verdict.ASYMMETRIC_POLARIZATION, Verdict.CONSENSUS):
        raise NotPolarizing(f"certificate verdict is {cert.verdict.value}")
    c = float(bundle.coord_gauge @ x) / bundle.n
    return np.where(bundle.partition.mask(), -bundle.gamma * c, c)


def assess(
    traj: Trajectory,
    b: Bipartition,
    gamma: float,
    tol: float = 1e-6,
) -> OutcomeReport:
    """Classify a finished trajectory's final state.

    Checks agreement inside each subset and the amplified cross-subset
    cancellation; with coefficient 1 the matching split is symmetric.
    Divergence passes through from the integrator.  A final state near zero
    is neutral consensus, a uniform nonzero state is consensus, and
    anything else (a truncated run, say) is undetermined.
    """
    x = traj.states[-1]
    mask = b.mask()
    side1 = x[mask]
    side2 = x[~mask]
    v1 = float(side1.mean())
    v2 = float(side2.mean())
    spread = max(
        float(np.ptp(side1)) if side1.size else 0.0,
        float(np.ptp(side2)) if side2.size else 0.0,
    )
    cross = max(
        abs(float(a) + gamma * float(c))
        for a in (side1.min(), side1.max())
        for c in (side2.min(), side2.max())
    )
    defect = max(spread, cross)
    ratio = v1 / v2 if v2 != 0.0 else None

    if traj.terminated is Termination.DIVERGED:
        kind = OutcomeKind.DIVERGENCE
    elif float(np.max(np.abs(x))) <= tol:
        kind = OutcomeKind.NEUTRAL_CONSENSUS
    elif float(np.ptp(x)) <= tol:
        kind = OutcomeKind.CONSENSUS
    elif spread <= tol and cross <= tol * max(1.0, abs(v1)):
        if gamma == 1.0:
            kind = OutcomeKind.SYMMETRIC_POLARIZATION
        else:
            kind = OutcomeKind.ASYMMETRIC_POLARIZATION
    else:
        kind = OutcomeKind.UNDETERMINED
    return OutcomeReport(kind=kind, v1_value=v1, v2_value=v2, ratio=ratio, defect=defect)
