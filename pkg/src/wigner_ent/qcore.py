"""Small dense complex linear algebra for two-qubit and two-particle systems.

Matrices are plain ``numpy`` complex arrays. The 16-dimensional two-particle
space is ordered as (momA, momB, spinA, spinB) with the momentum indices
varying slowest, so a joint state is ``kron(momentum_part, spin_part)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
EIGEN_HERMITIAN_TOL = 1e-10
NEGATIVE_CLAMP = 1e-10
NEGATIVE_REJECT = 1e-8
JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100


class RejectedInput(ValueError):
    """Input violates an operation's precondition."""


class ContractViolation(RuntimeError):
    """A numerical result broke a documented contract."""


I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SX, SY, SZ)
I4 = np.eye(4, dtype=complex)


def tensor(a, b):
    """Kronecker product ``a ⊗ b``."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def dagger(m):
    return np.conj(np.asarray(m)).T


def hermiticity_error(m) -> float:
    m = np.asarray(m)
    return float(np.max(np.abs(m - dagger(m)))) if m.size else 0.0


def as_density(m, tol: float = HERMITIAN_TOL):
    """Validate ``m`` as a density matrix and return its symmetrized copy.

    Raises RejectedInput when ``m`` is not square, not Hermitian within
    ``tol`` or not unit-trace within ``TRACE_TOL``.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise RejectedInput(f"density matrix must be square, got shape {m.shape}")
    if hermiticity_error(m) > tol:
        raise RejectedInput(
            f"matrix is not Hermitian (max |m - m^H| = {hermiticity_error(m):.3e})"
        )
    tr = np.trace(m)
    if abs(tr - 1.0) > TRACE_TOL:
        raise RejectedInput(f"density matrix trace is {tr.real:.15g}, expected 1")
    return 0.5 * (m + dagger(m))


def density_from_ket(psi):
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    return np.outer(psi, np.conj(psi))


def partial_trace(rho, subsystem: str):
    """Trace a 16x16 two-particle density matrix over one degree of freedom.

    ``subsystem`` names what is traced *out*: ``"momentum"`` leaves the 4x4
    spin-spin matrix, ``"spin"`` leaves the 4x4 momentum-momentum matrix.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (16, 16):
        raise RejectedInput(f"partial_trace expects a 16x16 matrix, got {rho.shape}")
    rho = as_density(rho)
    # axes: (mom, spin, mom', spin')
    r = rho.reshape(4, 4, 4, 4)
    if subsystem == "momentum":
        out = np.einsum("aiaj->ij", r)
    elif subsystem == "spin":
        out = np.einsum("iaja->ij", r)
    else:
        raise RejectedInput(f"unknown subsystem {subsystem!r}; use 'momentum' or 'spin'")
    return 0.5 * (out + dagger(out))


def _jacobi_block(a, p: int, q: int):
    """2x2 unitary G such that rotating rows/columns p, q by G zeroes a[p, q]."""
    apq = a[p, q]
    r = abs(apq)
    # the phase on column q makes the pivot real; a real symmetric Schur
    # rotation then annihilates it
    phase = np.conj(apq / r)
    tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
    t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c
    return np.array([[c, s], [-s * phase, c * phase]], dtype=complex)


def hermitian_eigen(h, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvalues real and sorted in
    descending order and eigenvectors as the columns of a unitary matrix, so
    that ``h @ v == v @ diag(w)``.
    """
    a = np.array(h, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise RejectedInput(f"hermitian_eigen expects a square matrix, got {a.shape}")
    if hermiticity_error(a) > EIGEN_HERMITIAN_TOL:
        raise RejectedInput(
            f"matrix is not Hermitian (max |h - h^H| = {hermiticity_error(a):.3e})"
        )
    n = a.shape[0]
    a = 0.5 * (a + dagger(a))
    v = np.eye(n, dtype=complex)
    scale = max(1.0, float(np.linalg.norm(a)))
    offdiag = ~np.eye(n, dtype=bool)
    # pivots this small cannot move the off-diagonal norm across the threshold
    negligible = 1e-3 * tol * scale / n
    for _ in range(max_sweeps):
        if np.linalg.norm(a[offdiag]) < tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) <= negligible:
                    continue
                (g00, g01), (g10, g11) = _jacobi_block(a, p, q)
                for m in (a, v):
                    cp, cq = m[:, p].copy(), m[:, q]
                    m[:, p] = cp * g00 + cq * g10
                    m[:, q] = cp * g01 + cq * g11
                rp, rq = a[p, :].copy(), a[q, :]
                a[p, :] = np.conj(g00) * rp + np.conj(g10) * rq
                a[q, :] = np.conj(g01) * rp + np.conj(g11) * rq
                a[p, q] = a[q, p] = 0.0
    else:
        raise ContractViolation(f"Jacobi eigensolver did not converge in {max_sweeps} sweeps")
    w = np.real(np.diag(a))
    order = np.argsort(-w, kind="stable")
    return w[order], v[:, order]


def matrix_sqrt_psd(h):
    """Principal square root of a Hermitian positive semidefinite matrix.

    Eigenvalues in [-1e-8, 0) are treated as roundoff and clamped to zero.
    """
    w, v = hermitian_eigen(h)
    if w.min() < -NEGATIVE_REJECT:
        raise RejectedInput(f"matrix is not positive semidefinite (eigenvalue {w.min():.3e})")
    root = np.sqrt(np.clip(w, 0.0, None))
    s = (v * root) @ dagger(v)
    return 0.5 * (s + dagger(s))


@dataclass(frozen=True)
class PauliCoefficients:
    """Real coefficients of a two-qubit operator in the Pauli basis.

    ``rho = 1/4 [I⊗I + c·σ⊗I + I⊗d·σ + Σ gamma[j,k] σ_j⊗σ_k]``
    """

    c: np.ndarray
    d: np.ndarray
    gamma: np.ndarray

    def to_matrix(self):
        m = tensor(I2, I2)
        for i, s in enumerate(PAULIS):
            m = m + self.c[i] * tensor(s, I2) + self.d[i] * tensor(I2, s)
            for k, t in enumerate(PAULIS):
                m = m + self.gamma[i, k] * tensor(s, t)
        return m / 4.0


def pauli_decompose(rho) -> PauliCoefficients:
    rho = as_density(np.asarray(rho, dtype=complex))
    if rho.shape != (4, 4):
        raise RejectedInput(f"pauli_decompose expects a 4x4 matrix, got {rho.shape}")

    def coeff(op):
        val = np.trace(rho @ op)
        if abs(val.imag) > HERMITIAN_TOL:
            raise ContractViolation(f"Pauli coefficient has imaginary part {val.imag:.3e}")
        return val.real

    c = np.array([coeff(tensor(s, I2)) for s in PAULIS])
    d = np.array([coeff(tensor(I2, s)) for s in PAULIS])
    gamma = np.array([[coeff(tensor(s, t)) for t in PAULIS] for s in PAULIS])
    return PauliCoefficients(c=c, d=d, gamma=gamma)


def diagonal_parametrization(a, b, c):
    """Two-qubit matrix with only diagonal σ_i⊗σ_i correlations.

    This is the local-unitary normal form ``1/4 [I + a·σ⊗I + I⊗b·σ + Σ c_i σ_i⊗σ_i]``.
    """
    return PauliCoefficients(
        c=np.asarray(a, dtype=float),
        d=np.asarray(b, dtype=float),
        gamma=np.diag(np.asarray(c, dtype=float)),
    ).to_matrix()
