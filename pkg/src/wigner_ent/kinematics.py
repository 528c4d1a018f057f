"""Rapidities, Wigner rotations and momentum matching for massive spin-1/2 particles.

Units have c = 1, so speeds are the dimensionless ratios v/c in [0, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qcore import I2, PAULIS, RejectedInput

UNIT_TOL = 1e-12
# m_e / m_mu, used only where a concrete mass ratio is required
ELECTRON_MUON_MASS_RATIO = 1.0 / 206.7682830
Z_AXIS = (0.0, 0.0, 1.0)


def _check_speed(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value) or value < 0.0 or value >= 1.0:
        raise RejectedInput(f"{name} must lie in [0, 1) (c = 1), got {value!r}")
    return value


def _unit(vec, name: str) -> np.ndarray:
    arr = np.asarray(vec, dtype=float).reshape(-1)
    if arr.shape != (3,) or not np.all(np.isfinite(arr)):
        raise RejectedInput(f"{name} must be a finite 3-vector")
    if abs(np.linalg.norm(arr) - 1.0) > UNIT_TOL:
        raise RejectedInput(f"{name} must be a unit vector, |{name}| = {np.linalg.norm(arr)!r}")
    return arr


@dataclass(frozen=True)
class BoostConfig:
    """A boost of speed ``beta_boost`` along ``boost_axis`` seen by a particle
    moving with ``particle_speed`` along ``particle_axis``."""

    beta_boost: float
    boost_axis: tuple = (0.0, 1.0, 0.0)
    particle_speed: float = 0.0
    particle_axis: tuple = (1.0, 0.0, 0.0)

    def __post_init__(self):
        _check_speed(self.beta_boost, "beta_boost")
        _check_speed(self.particle_speed, "particle_speed")
        object.__setattr__(self, "boost_axis", tuple(map(float, _unit(self.boost_axis, "boost_axis"))))
        object.__setattr__(
            self, "particle_axis", tuple(map(float, _unit(self.particle_axis, "particle_axis")))
        )


@dataclass(frozen=True)
class Rapidities:
    alpha: float  # boost
    delta: float  # particle


@dataclass(frozen=True)
class WignerRotation:
    """Rotation by ``angle`` radians about the unit vector ``axis``."""

    angle: float
    axis: tuple = Z_AXIS

    def spin_matrix(self):
        """The spin-1/2 representation ``cos(angle/2) + i sin(angle/2) axis·σ``."""
        n_sigma = sum(c * s for c, s in zip(self.axis, PAULIS))
        half = 0.5 * self.angle
        return math.cos(half) * I2 + 1j * math.sin(half) * n_sigma


@dataclass(frozen=True)
class MomentumMatching:
    m_e: float
    m_mu: float
    a: float

    @classmethod
    def from_masses(cls, m_e: float, m_mu: float) -> "MomentumMatching":
        if not (m_e > 0 and m_mu > 0):
            raise RejectedInput("masses must be positive")
        return cls(m_e=float(m_e), m_mu=float(m_mu), a=float(m_e) / float(m_mu))


def rapidity(speed: float) -> float:
    return math.atanh(_check_speed(speed, "speed"))


def rapidities_from(config: BoostConfig) -> Rapidities:
    return Rapidities(alpha=rapidity(config.beta_boost), delta=rapidity(config.particle_speed))


def wigner_rotation_general(config: BoostConfig) -> WignerRotation:
    """Wigner rotation for an arbitrary boost direction and particle momentum.

    Collinear boost and momentum (or either speed zero) give angle 0 with the
    axis reported as +z by convention.
    """
    rap = rapidities_from(config)
    e = np.array(config.boost_axis)
    p = np.array(config.particle_axis)
    ep = float(np.dot(e, p))
    cross = np.cross(e, p)

    ca, sa = math.cosh(rap.alpha), math.sinh(rap.alpha)
    cd, sd = math.cosh(rap.delta), math.sinh(rap.delta)
    ca2, sa2 = math.cosh(0.5 * rap.alpha), math.sinh(0.5 * rap.alpha)
    cd2, sd2 = math.cosh(0.5 * rap.delta), math.sinh(0.5 * rap.delta)

    norm = math.sqrt(0.5 + 0.5 * ca * cd + 0.5 * ep * sa * sd)
    cos_half = (ca2 * cd2 + sa2 * sd2 * ep) / norm
    n_sin_half = sa2 * sd2 * cross / norm
    sin_half = float(np.linalg.norm(n_sin_half))
    if sin_half == 0.0:
        return WignerRotation(angle=0.0, axis=Z_AXIS)
    angle = 2.0 * math.atan2(sin_half, cos_half)
    return WignerRotation(angle=angle, axis=tuple(map(float, n_sin_half / sin_half)))


def wigner_angle_perpendicular(beta_boost: float, particle_speed: float) -> float:
    """Wigner angle when the boost is perpendicular to the particle momentum.

    ``tan(angle) = sinh(a) sinh(d) / (cosh(a) + cosh(d))`` with ``a``, ``d`` the
    boost and particle rapidities.
    """
    alpha = rapidity(beta_boost)
    delta = rapidity(particle_speed)
    return math.atan2(
        math.sinh(alpha) * math.sinh(delta), math.cosh(alpha) + math.cosh(delta)
    )


def matching_coefficient(m_e: float, m_mu: float) -> float:
    """Momentum ratio ``a`` that makes both particles see the same Wigner angle."""
    return MomentumMatching.from_masses(m_e, m_mu).a


def matched_speed(a: float, m_e: float, m_mu: float, v_B2: float) -> float:
    """Speed of particle A whose momentum magnitude is ``a`` times that of B.

    Solves ``m_e v_A / sqrt(1 - v_A^2) = a m_mu v_B / sqrt(1 - v_B^2)`` for v_A.
    """
    if not (m_e > 0 and m_mu > 0):
        raise RejectedInput("masses must be positive")
    v = _check_speed(v_B2, "v_B2")
    k = (a * a * m_mu * m_mu - m_e * m_e) / (m_e * m_e)
    return a * (m_mu / m_e) * v / math.sqrt(1.0 + k * v * v)
