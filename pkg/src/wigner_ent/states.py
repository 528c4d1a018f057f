"""Two-particle momentum/spin states, their boosts and reduced density matrices.

Each particle carries a momentum qubit (two sharply concentrated, orthogonal
momentum values) and a spin qubit. A boost leaves the momentum-qubit labels
alone and rotates each spin about z by the Wigner angle ``phi``, with the
sense of rotation fixed by which momentum value the particle carries.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .qcore import (
    I2,
    SX,
    SY,
    SZ,
    RejectedInput,
    dagger,
    density_from_ket,
    partial_trace,
    tensor,
)

NORM_TOL = 1e-12
BASIS_ORDER = ("momA", "momB", "spinA", "spinB")


class ScenarioKind(str, enum.Enum):
    ETA = "eta"  # indistinguishable pair, eta-family
    XI = "xi"  # distinguishable pair, xi-family
    APPENDIX_D = "appendix-d"  # distinguishable pair, alternative momentum layout


@dataclass(frozen=True)
class ScenarioSpec:
    kind: ScenarioKind
    parameter: float
    sign: str = "plus"

    def __post_init__(self):
        object.__setattr__(self, "kind", ScenarioKind(self.kind))
        if self.sign not in ("plus", "minus"):
            raise RejectedInput(f"sign must be 'plus' or 'minus', got {self.sign!r}")
        p = float(self.parameter)
        if not math.isfinite(p):
            raise RejectedInput("parameter must be finite")
        if self.kind is ScenarioKind.ETA:
            if not 0.0 <= p <= 1.0:
                raise RejectedInput(f"eta must lie in [0, 1], got {p!r}")
        elif not 0.0 < p < 1.0:
            raise RejectedInput(f"xi must lie in (0, 1), got {p!r}")
        object.__setattr__(self, "parameter", p)

    @property
    def sign_value(self) -> int:
        return 1 if self.sign == "plus" else -1


@dataclass(frozen=True)
class MomentumBasisMap:
    """Momentum-qubit value (0 or 1) carried by each labelled momentum."""

    A1: int
    A2: int
    B1: int
    B2: int

    def label_a(self, qubit: int) -> str:
        return "A1" if qubit == self.A1 else "A2"

    def label_b(self, qubit: int) -> str:
        return "B1" if qubit == self.B1 else "B2"

    def index(self, a_label: str, b_label: str) -> int:
        return 2 * getattr(self, a_label) + getattr(self, b_label)


# The (p_A1, p_B1) branch sits on |10> and (p_A2, p_B2) on |01>, as in the
# explicit kets written for these two layouts.
OPPOSED_MAP = MomentumBasisMap(A1=1, A2=0, B1=0, B2=1)
# p_A1, p_B1 -> |0>, p_A2, p_B2 -> |1>, so the branches sit on |00> and |11>.
ALIGNED_MAP = MomentumBasisMap(A1=0, A2=1, B1=0, B2=1)


def basis_map(kind) -> MomentumBasisMap:
    return ALIGNED_MAP if ScenarioKind(kind) is ScenarioKind.XI else OPPOSED_MAP


@dataclass(frozen=True)
class BoostedPair:
    rest_state: np.ndarray
    boosted_state: np.ndarray
    phi: float


def ket(*amplitudes):
    return np.array(amplitudes, dtype=complex)


UP_DOWN = ket(0, 1, 0, 0)
DOWN_UP = ket(0, 0, 1, 0)
PHI_PLUS = (UP_DOWN + DOWN_UP) / math.sqrt(2.0)
PHI_MINUS = (UP_DOWN - DOWN_UP) / math.sqrt(2.0)


def psi_xi(xi: float, sign: str = "plus"):
    """``sqrt(1-xi)|↑↓> ± sqrt(xi)|↓↑>``."""
    s = 1.0 if sign == "plus" else -1.0
    return math.sqrt(1.0 - xi) * UP_DOWN + s * math.sqrt(xi) * DOWN_UP


def _branches(spec: ScenarioSpec):
    """The two (coefficient, spin ket) pairs attached to (A1,B1) and (A2,B2)."""
    r = 1.0 / math.sqrt(2.0)
    x = spec.parameter
    if spec.kind is ScenarioKind.ETA:
        a, b = math.sqrt(x), math.sqrt(1.0 - x)
        return (r, a * PHI_MINUS + b * PHI_PLUS), (r, a * PHI_MINUS - b * PHI_PLUS)
    spin = psi_xi(x, spec.sign)
    if spec.kind is ScenarioKind.XI:
        return (r, spin), (r, spin)
    return (r, spin), (-spec.sign_value * r, spin)


def momentum_ket(index: int):
    out = np.zeros(4, dtype=complex)
    out[index] = 1.0
    return out


def build_state(spec: ScenarioSpec):
    """Rest-frame 16-component amplitude vector over (momA, momB, spinA, spinB)."""
    bmap = basis_map(spec.kind)
    (c1, s1), (c2, s2) = _branches(spec)
    psi = c1 * tensor(momentum_ket(bmap.index("A1", "B1")), s1) + c2 * tensor(
        momentum_ket(bmap.index("A2", "B2")), s2
    )
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > NORM_TOL:
        raise AssertionError(f"constructed state has norm {norm!r}")
    return psi


def d_operators(phi: float):
    """Spin rotations ``(D_A(p_A1), D_B(p_B1), D_A(p_A2), D_B(p_B2))``."""
    c, s = math.cos(0.5 * phi), math.sin(0.5 * phi)
    minus = c * I2 - 1j * s * SZ
    plus = c * I2 + 1j * s * SZ
    return minus, plus, plus, minus


def _d_by_label(phi: float):
    da1, db1, da2, db2 = d_operators(phi)
    return {"A1": da1, "B1": db1, "A2": da2, "B2": db2}


def boost_operator(phi: float, bmap: MomentumBasisMap):
    """16x16 unitary: spin rotation conditioned on the momentum qubits."""
    d = _d_by_label(phi)
    u = np.zeros((16, 16), dtype=complex)
    for a in (0, 1):
        for b in (0, 1):
            proj = np.zeros((4, 4), dtype=complex)
            proj[2 * a + b, 2 * a + b] = 1.0
            spin_rot = tensor(d[bmap.label_a(a)], d[bmap.label_b(b)])
            u += tensor(proj, spin_rot)
    return u


def apply_boost(state, phi: float, bmap: MomentumBasisMap) -> BoostedPair:
    state = np.asarray(state, dtype=complex).reshape(-1)
    if state.shape != (16,):
        raise RejectedInput(f"two-particle state must have 16 amplitudes, got {state.shape}")
    if abs(np.linalg.norm(state) - 1.0) > NORM_TOL:
        raise RejectedInput("two-particle state must have unit norm")
    boosted = boost_operator(phi, bmap) @ state
    return BoostedPair(rest_state=state, boosted_state=boosted, phi=float(phi))


def boost_scenario(spec: ScenarioSpec, phi: float) -> BoostedPair:
    return apply_boost(build_state(spec), phi, basis_map(spec.kind))


def spin_density(state):
    return partial_trace(density_from_ket(state), "momentum")


def momentum_density(state):
    return partial_trace(density_from_ket(state), "spin")


def reduced_spin(pair: BoostedPair):
    return spin_density(pair.boosted_state)


def reduced_momentum(pair: BoostedPair):
    return momentum_density(pair.boosted_state)


def inner_products_12_21(spec: ScenarioSpec, phi: float):
    """Overlaps ``(<1|2>, <2|1>)`` of the two boosted spin branches."""
    if spec.kind is not ScenarioKind.XI:
        raise RejectedInput("inner_products_12_21 is defined for the xi scenario only")
    da1, db1, da2, db2 = d_operators(phi)
    spin = psi_xi(spec.parameter, spec.sign)
    one = tensor(da1, db1) @ spin
    two = tensor(da2, db2) @ spin
    return complex(np.vdot(one, two)), complex(np.vdot(two, one))


def _block(diag, off, where):
    m = np.zeros((4, 4), dtype=complex)
    i, j = where
    m[i, i], m[j, j] = diag
    m[i, j] = off
    m[j, i] = np.conj(off)
    return m


def closed_form_spin(spec: ScenarioSpec, phi: float):
    """Reduced spin matrix in the boosted frame, written out entry by entry."""
    x, c2 = spec.parameter, math.cos(2.0 * phi)
    if spec.kind is ScenarioKind.ETA:
        return _block((0.5, 0.5), 0.5 * (1.0 - 2.0 * x) * c2, (1, 2))
    off = spec.sign_value * math.sqrt(x * (1.0 - x)) * c2
    return _block((1.0 - x, x), off, (1, 2))


def closed_form_momentum(spec: ScenarioSpec, phi: float):
    """Reduced momentum matrix in the boosted frame, written out entry by entry."""
    x, c2, s2 = spec.parameter, math.cos(2.0 * phi), math.sin(2.0 * phi)
    if spec.kind is ScenarioKind.ETA:
        return _block((0.5, 0.5), 0.5 * (2.0 * x - 1.0) * c2, (1, 2))
    if spec.kind is ScenarioKind.XI:
        return _block((0.5, 0.5), 0.5 * complex(c2, -(1.0 - 2.0 * x) * s2), (0, 3))
    return _block((0.5, 0.5), -0.5 * spec.sign_value * complex(c2, (1.0 - 2.0 * x) * s2), (1, 2))


def conjugation_identities(phi: float):
    """``D σ D^†`` rules for the four spin rotations, as (name, lhs, rhs) triples."""
    d = _d_by_label(phi)
    c, s = math.cos(phi), math.sin(phi)
    expected = {
        ("A1", "x"): c * SX + s * SY,
        ("B1", "x"): c * SX - s * SY,
        ("A1", "y"): -s * SX + c * SY,
        ("B1", "y"): s * SX + c * SY,
        ("A2", "x"): c * SX - s * SY,
        ("B2", "x"): c * SX + s * SY,
        ("A2", "y"): s * SX + c * SY,
        ("B2", "y"): -s * SX + c * SY,
    }
    paulis = {"x": SX, "y": SY}
    return [
        (f"D_{label} s{axis} D_{label}^+", d[label] @ paulis[axis] @ dagger(d[label]), rhs)
        for (label, axis), rhs in expected.items()
    ]


def momentum_ket_transforms(phi: float):
    """Transformed momentum-qubit kets ``|p>^Λ`` for the aligned layout."""
    d = _d_by_label(phi)
    zero, one = ket(1, 0), ket(0, 1)
    return {
        "A1": d["A1"] @ zero,
        "A2": d["A2"] @ one,
        "B1": d["B1"] @ zero,
        "B2": d["B2"] @ one,
    }


def projector_identities(phi: float):
    """Outer products of transformed momentum kets against Pauli expressions."""
    k = momentum_ket_transforms(phi)
    out = []
    for p in ("A", "B"):
        one, two = k[p + "1"], k[p + "2"]
        out += [
            (f"|{p}1><{p}1|", np.outer(one, one.conj()), 0.5 * (I2 + SZ)),
            (f"|{p}2><{p}2|", np.outer(two, two.conj()), 0.5 * (I2 - SZ)),
            (f"|{p}1><{p}2|", np.outer(one, two.conj()), 0.5 * (SX + 1j * SY)),
            (f"|{p}2><{p}1|", np.outer(two, one.conj()), 0.5 * (SX - 1j * SY)),
        ]
    return out
