"""Wootters concurrence, frame-to-frame entanglement changes and their slopes."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .qcore import (
    NEGATIVE_CLAMP,
    SY,
    ContractViolation,
    RejectedInput,
    as_density,
    dagger,
    hermitian_eigen,
    tensor,
)
from .states import (
    ScenarioKind,
    ScenarioSpec,
    boost_scenario,
    momentum_density,
    reduced_momentum,
    reduced_spin,
    spin_density,
)

YY = tensor(SY, SY)
PIPELINE_TOL = 1e-9
FD_STEP = 1e-5
STATIONARY_TOL = 1e-8
WHICH = ("spin", "momentum")


@dataclass(frozen=True)
class ConcurrenceReport:
    lambdas: tuple
    concurrence: float
    closed_form: float | None = None

    @property
    def residual(self) -> float | None:
        if self.closed_form is None:
            return None
        return abs(self.concurrence - self.closed_form)


@dataclass(frozen=True)
class VariationReport:
    parameter: float
    phi: float
    c_rest: float
    c_boosted: float

    @property
    def delta(self) -> float:
        return self.c_rest - self.c_boosted


def spin_flip(rho):
    """``(σy⊗σy) ρ* (σy⊗σy)``."""
    rho = np.asarray(rho, dtype=complex)
    return YY @ np.conj(rho) @ YY


def wootters_lambdas(rho):
    """Square roots of the eigenvalues of ``ρ ρ̃``, descending.

    They are the singular values of ``√ρ √ρ̃``; these are read off as the
    non-negative eigenvalues of the Hermitian matrix ``[[0, A], [A^H, 0]]``
    so that vanishing λ's are not inflated by taking square roots of
    roundoff.
    """
    rho = as_density(rho)
    if rho.shape != (4, 4):
        raise RejectedInput(f"concurrence expects a 4x4 density matrix, got {rho.shape}")
    w, v = hermitian_eigen(rho)
    if w.min() < -NEGATIVE_CLAMP:
        raise RejectedInput(f"density matrix is not positive semidefinite (eigenvalue {w.min():.3e})")
    root = (v * np.sqrt(np.clip(w, 0.0, None))) @ dagger(v)
    # √ρ̃ = Y (√ρ)* Y exactly, so no second square root is needed
    a = root @ YY @ np.conj(root) @ YY
    embed = np.zeros((8, 8), dtype=complex)
    embed[:4, 4:] = a
    embed[4:, :4] = dagger(a)
    sv = hermitian_eigen(embed)[0][:4]
    if sv.min() < -NEGATIVE_CLAMP:
        raise ContractViolation(f"negative Wootters lambda {sv.min():.3e}")
    return np.clip(sv, 0.0, None)


def concurrence(rho, closed_form: float | None = None) -> ConcurrenceReport:
    lam = wootters_lambdas(rho)
    raw = lam[0] - lam[1] - lam[2] - lam[3]
    if raw > 1.0 + NEGATIVE_CLAMP:
        raise ContractViolation(f"concurrence {raw!r} exceeds 1")
    value = min(max(raw, 0.0), 1.0)
    return ConcurrenceReport(lambdas=tuple(float(x) for x in lam), concurrence=float(value),
                             closed_form=closed_form)


def closed_form_concurrence(spec: ScenarioSpec, which: str, phi: float) -> float:
    """Boosted-frame concurrence from the analytic expressions (rest frame at phi=0)."""
    if which not in WHICH:
        raise RejectedInput(f"which must be 'spin' or 'momentum', got {which!r}")
    x, c2, s2 = spec.parameter, math.cos(2.0 * phi), math.sin(2.0 * phi)
    if spec.kind is ScenarioKind.ETA:
        return abs((1.0 - 2.0 * x) * c2)
    q = 4.0 * x * (1.0 - x)
    if which == "spin":
        return math.sqrt(q) * abs(c2)
    return math.sqrt(max(0.0, 1.0 - q * s2 * s2))


def frame_reports(spec: ScenarioSpec, phi: float) -> dict:
    """Concurrence reports for spin and momentum in the rest and boosted frames."""
    pair = boost_scenario(spec, phi)
    return {
        "spin_rest": concurrence(spin_density(pair.rest_state),
                                 closed_form_concurrence(spec, "spin", 0.0)),
        "mom_rest": concurrence(momentum_density(pair.rest_state),
                                closed_form_concurrence(spec, "momentum", 0.0)),
        "spin_boosted": concurrence(reduced_spin(pair),
                                    closed_form_concurrence(spec, "spin", phi)),
        "mom_boosted": concurrence(reduced_momentum(pair),
                                   closed_form_concurrence(spec, "momentum", phi)),
    }


def frame_concurrences(spec: ScenarioSpec, phi: float) -> dict:
    """The six sweep quantities computed through the numeric pipeline."""
    r = frame_reports(spec, phi)
    out = {
        "c_spin_rest": r["spin_rest"].concurrence,
        "c_spin_boosted": r["spin_boosted"].concurrence,
        "c_mom_rest": r["mom_rest"].concurrence,
        "c_mom_boosted": r["mom_boosted"].concurrence,
    }
    out["delta_spin"] = out["c_spin_rest"] - out["c_spin_boosted"]
    out["delta_mom"] = out["c_mom_rest"] - out["c_mom_boosted"]
    return out


def _pipeline_pair(spec: ScenarioSpec, which: str, phi: float):
    pair = boost_scenario(spec, phi)
    if which == "spin":
        return (concurrence(spin_density(pair.rest_state)).concurrence,
                concurrence(reduced_spin(pair)).concurrence)
    return (concurrence(momentum_density(pair.rest_state)).concurrence,
            concurrence(reduced_momentum(pair)).concurrence)


def variation(spec: ScenarioSpec, which: str, phi: float,
              tol: float = PIPELINE_TOL) -> VariationReport:
    """Entanglement lost between the rest frame and the boosted frame.

    Raises ContractViolation when the pipeline disagrees with the closed
    forms by more than ``tol``.
    """
    if which not in WHICH:
        raise RejectedInput(f"which must be 'spin' or 'momentum', got {which!r}")
    c_rest, c_boosted = _pipeline_pair(spec, which, phi)
    for got, ref in ((c_rest, closed_form_concurrence(spec, which, 0.0)),
                     (c_boosted, closed_form_concurrence(spec, which, phi))):
        if abs(got - ref) > tol:
            raise ContractViolation(
                f"{which} concurrence {got!r} differs from closed form {ref!r} "
                f"for {spec} at phi={phi!r}"
            )
    return VariationReport(parameter=spec.parameter, phi=float(phi),
                           c_rest=c_rest, c_boosted=c_boosted)


def delta_c(kind, which: str, parameter: float, phi: float, sign: str = "plus",
            method: str = "pipeline") -> float:
    spec = ScenarioSpec(kind, parameter, sign)
    if method == "closed_form":
        return (closed_form_concurrence(spec, which, 0.0)
                - closed_form_concurrence(spec, which, phi))
    c_rest, c_boosted = _pipeline_pair(spec, which, phi)
    return c_rest - c_boosted


def delta_derivative(kind, which: str, direction: str, parameter: float, phi: float,
                     h: float = FD_STEP, sign: str = "plus", method: str = "pipeline") -> float:
    """Central-difference slope of ΔC along ``direction`` ('parameter' or 'phi')."""
    if h <= 0:
        raise RejectedInput("finite-difference step must be positive")
    if direction == "parameter":
        hi = delta_c(kind, which, parameter + h, phi, sign, method)
        lo = delta_c(kind, which, parameter - h, phi, sign, method)
    elif direction == "phi":
        hi = delta_c(kind, which, parameter, phi + h, sign, method)
        lo = delta_c(kind, which, parameter, phi - h, sign, method)
    else:
        raise RejectedInput(f"direction must be 'parameter' or 'phi', got {direction!r}")
    return (hi - lo) / (2.0 * h)


@dataclass
class SignTable:
    """Slopes of ΔC_spin and ΔC_momentum on a (parameter × phi) lattice."""

    parameters: np.ndarray
    phis: np.ndarray
    direction: str
    d_spin: np.ndarray
    d_mom: np.ndarray
    threshold: float = STATIONARY_TOL
    sign_spin: np.ndarray = field(init=False)
    sign_mom: np.ndarray = field(init=False)
    excluded: np.ndarray = field(init=False)

    def __post_init__(self):
        self.sign_spin = np.sign(self.d_spin).astype(int)
        self.sign_mom = np.sign(self.d_mom).astype(int)
        self.excluded = (np.abs(self.d_spin) < self.threshold) | (
            np.abs(self.d_mom) < self.threshold
        )

    @property
    def agree(self) -> np.ndarray:
        return (self.sign_spin == self.sign_mom) | self.excluded

    @property
    def all_agree(self) -> bool:
        return bool(np.all(self.agree))


def sign_grid_analysis(kind, direction: str, parameters, phis, h: float = FD_STEP,
                       sign: str = "plus", method: str = "pipeline",
                       threshold: float = STATIONARY_TOL) -> SignTable:
    parameters = np.atleast_1d(np.asarray(parameters, dtype=float))
    phis = np.atleast_1d(np.asarray(phis, dtype=float))
    shape = (parameters.size, phis.size)
    d_spin = np.empty(shape)
    d_mom = np.empty(shape)
    for i, x in enumerate(parameters):
        for j, p in enumerate(phis):
            d_spin[i, j] = delta_derivative(kind, "spin", direction, x, p, h, sign, method)
            d_mom[i, j] = delta_derivative(kind, "momentum", direction, x, p, h, sign, method)
    return SignTable(parameters=parameters, phis=phis, direction=direction,
                     d_spin=d_spin, d_mom=d_mom, threshold=threshold)


def degradation_rate(spec: ScenarioSpec, which: str, phi: float, h: float = FD_STEP) -> float:
    """|dC'/dφ| of the boosted-frame concurrence by central differences."""
    if which not in WHICH:
        raise RejectedInput(f"which must be 'spin' or 'momentum', got {which!r}")
    hi = _pipeline_pair(spec, which, phi + h)[1]
    lo = _pipeline_pair(spec, which, phi - h)[1]
    return abs(hi - lo) / (2.0 * h)
