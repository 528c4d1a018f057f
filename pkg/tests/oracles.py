"""Independent reference computations used only by the tests.

Nothing here imports the package: each oracle re-derives its quantity by a
different route (explicit loops, Lorentz 4-matrices, the X-state concurrence
formula, hand-written boosted kets).
"""

import math

import numpy as np

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
I2 = np.eye(2, dtype=complex)


def kron_loops(a, b):
    a, b = np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)
    (m, n), (p, q) = a.shape, b.shape
    out = np.zeros((m * p, n * q), dtype=complex)
    for i in range(m):
        for j in range(n):
            for k in range(p):
                for l in range(q):
                    out[i * p + k, j * q + l] = a[i, j] * b[k, l]
    return out


def ptrace_loops(rho, keep):
    """Reduce a 16x16 (mom ⊗ spin) matrix to the 4x4 block named by ``keep``."""
    out = np.zeros((4, 4), dtype=complex)
    for i in range(4):
        for j in range(4):
            for k in range(4):
                if keep == "spin":
                    out[i, j] += rho[4 * k + i, 4 * k + j]
                else:
                    out[i, j] += rho[4 * i + k, 4 * j + k]
    return out


def x_state_concurrence(rho):
    """Concurrence of a two-qubit X-shaped matrix (only diagonal and anti-diagonal entries)."""
    rho = np.asarray(rho)
    mask = np.eye(4, dtype=bool) | np.eye(4, dtype=bool)[::-1]
    assert np.max(np.abs(rho[~mask])) < 1e-14, "not an X state"
    r = rho.real
    a = abs(rho[1, 2]) - math.sqrt(max(r[0, 0] * r[3, 3], 0.0))
    b = abs(rho[0, 3]) - math.sqrt(max(r[1, 1] * r[2, 2], 0.0))
    return 2.0 * max(0.0, a, b)


def wootters_eigvals(rho):
    """Eigenvalues of the non-Hermitian product ρ·ρ̃, by the general solver."""
    yy = np.kron(SY, SY)
    return np.linalg.eigvals(rho @ yy @ rho.conj() @ yy)


def boost4(velocity):
    """4x4 pure boost matrix for a 3-velocity (c = 1), acting on (t, x, y, z)."""
    v = np.asarray(velocity, dtype=float)
    b2 = float(v @ v)
    if b2 == 0.0:
        return np.eye(4)
    g = 1.0 / math.sqrt(1.0 - b2)
    out = np.eye(4)
    out[0, 0] = g
    out[0, 1:] = out[1:, 0] = g * v
    out[1:, 1:] += (g - 1.0) * np.outer(v, v) / b2
    return out


def wigner_rotation_4x4(beta, e_hat, speed, p_hat):
    """Spatial rotation W = L(Λp)⁻¹ Λ L(p) from explicit Lorentz matrices.

    Returns (angle in [0, π], unit axis or None).
    """
    lam = boost4(beta * np.asarray(e_hat, dtype=float))
    l_p = boost4(speed * np.asarray(p_hat, dtype=float))
    four_p = l_p @ np.array([1.0, 0.0, 0.0, 0.0])
    p_new = lam @ four_p
    l_new = boost4(p_new[1:] / p_new[0])
    w = np.linalg.inv(l_new) @ lam @ l_p
    r = w[1:, 1:]
    angle = math.acos(max(-1.0, min(1.0, 0.5 * (np.trace(r) - 1.0))))
    axis = np.array([r[2, 1] - r[1, 2], r[0, 2] - r[2, 0], r[1, 0] - r[0, 1]])
    n = np.linalg.norm(axis)
    return angle, (axis / n if n > 1e-15 else None), w


def perpendicular_angle_from_velocities(beta, speed):
    """tan φ = sinh α sinh δ / (cosh α + cosh δ), written with Lorentz factors."""
    ga, gd = 1.0 / math.sqrt(1 - beta**2), 1.0 / math.sqrt(1 - speed**2)
    return math.atan((ga * beta) * (gd * speed) / (ga + gd))


def ket2(amp_ud, amp_du):
    """a|↑↓> + b|↓↑> as a 4-vector in the (↑↑, ↑↓, ↓↑, ↓↓) basis."""
    return np.array([0, amp_ud, amp_du, 0], dtype=complex)


def xi_boosted_spin_branches(xi, phi, sign=1):
    """Boosted branch spin kets written out by hand: phases e^{∓iφ} on the two terms."""
    a, b = math.sqrt(1 - xi), sign * math.sqrt(xi)
    one = ket2(a * np.exp(-1j * phi), b * np.exp(1j * phi))
    two = ket2(a * np.exp(1j * phi), b * np.exp(-1j * phi))
    return one, two


def rho_psi(xi, sign=1):
    psi = ket2(math.sqrt(1 - xi), sign * math.sqrt(xi))
    return np.outer(psi, psi.conj())


def pauli_form(c, d, gamma):
    paulis = (SX, SY, SZ)
    m = np.kron(I2, I2)
    for i in range(3):
        m = m + c[i] * np.kron(paulis[i], I2) + d[i] * np.kron(I2, paulis[i])
        for k in range(3):
            m = m + gamma[i][k] * np.kron(paulis[i], paulis[k])
    return m / 4


def momentum_matrix_pauli_xi(xi, phi):
    """Boosted momentum matrix of the xi pair in momentum-qubit Pauli operators.

    ρ = ¼[I⊗I + σ̃z⊗σ̃z + cos2φ (σ̃x⊗σ̃x − σ̃y⊗σ̃y) + (1−2ξ) sin2φ (σ̃x⊗σ̃y + σ̃y⊗σ̃x)]
    """
    c2, s2 = math.cos(2 * phi), math.sin(2 * phi)
    g = np.zeros((3, 3))
    g[2, 2] = 1.0
    g[0, 0], g[1, 1] = c2, -c2
    g[0, 1] = g[1, 0] = (1 - 2 * xi) * s2
    return pauli_form(np.zeros(3), np.zeros(3), g)
