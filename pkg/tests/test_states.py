import math

import numpy as np
import pytest

from oracles import (
    I2,
    SX,
    SY,
    SZ,
    momentum_matrix_pauli_xi,
    ptrace_loops,
    rho_psi,
    xi_boosted_spin_branches,
)
from wigner_ent.qcore import RejectedInput, density_from_ket, tensor
from wigner_ent.states import (
    ALIGNED_MAP,
    OPPOSED_MAP,
    PHI_MINUS,
    PHI_PLUS,
    ScenarioKind,
    ScenarioSpec,
    apply_boost,
    boost_operator,
    boost_scenario,
    build_state,
    closed_form_momentum,
    closed_form_spin,
    conjugation_identities,
    d_operators,
    inner_products_12_21,
    momentum_density,
    momentum_ket,
    projector_identities,
    reduced_momentum,
    reduced_spin,
    spin_density,
)

R2 = 1 / math.sqrt(2)
PHIS = np.linspace(0.0, 1.0, 21)
ETAS = np.linspace(0.0, 1.0, 21)
XIS = np.linspace(0.001, 0.999, 21)


def mom(label):
    return momentum_ket(int(label, 2))


def all_specs():
    for eta in ETAS:
        yield ScenarioSpec("eta", eta)
    for kind in ("xi", "appendix-d"):
        for sign in ("plus", "minus"):
            for xi in XIS:
                yield ScenarioSpec(kind, xi, sign)


# --- rest-frame states ------------------------------------------------------


def test_eta_one_state():
    expected = R2 * tensor(mom("10"), PHI_MINUS) + R2 * tensor(mom("01"), PHI_MINUS)
    assert np.allclose(build_state(ScenarioSpec("eta", 1.0)), expected, atol=1e-15)


def test_eta_zero_state():
    expected = R2 * tensor(mom("10"), PHI_PLUS) - R2 * tensor(mom("01"), PHI_PLUS)
    assert np.allclose(build_state(ScenarioSpec("eta", 0.0)), expected, atol=1e-15)


def test_xi_half_state():
    momentum = R2 * (mom("00") + mom("11"))
    assert np.allclose(build_state(ScenarioSpec("xi", 0.5)), tensor(momentum, PHI_PLUS),
                       atol=1e-15)


@pytest.mark.parametrize("sign,spin,s", [("plus", PHI_PLUS, 1), ("minus", PHI_MINUS, -1)])
def test_appendix_d_half_state(sign, spin, s):
    expected = R2 * tensor(mom("10"), spin) - s * R2 * tensor(mom("01"), spin)
    assert np.allclose(build_state(ScenarioSpec("appendix-d", 0.5, sign)), expected,
                       atol=1e-15)


@pytest.mark.parametrize("kind,value", [("eta", -0.1), ("eta", 1.1), ("xi", 0.0),
                                        ("xi", 1.0), ("appendix-d", 1.2)])
def test_parameter_out_of_range(kind, value):
    with pytest.raises(RejectedInput):
        ScenarioSpec(kind, value)


def test_bad_sign_and_kind():
    with pytest.raises(RejectedInput):
        ScenarioSpec("xi", 0.3, "both")
    with pytest.raises(ValueError):
        ScenarioSpec("zeta", 0.3)


def test_states_are_normalized():
    for spec in all_specs():
        assert abs(np.linalg.norm(build_state(spec)) - 1) < 1e-12


def test_basis_maps():
    assert (OPPOSED_MAP.A1, OPPOSED_MAP.A2, OPPOSED_MAP.B1, OPPOSED_MAP.B2) == (1, 0, 0, 1)
    assert ALIGNED_MAP.index("A1", "B1") == 0 and ALIGNED_MAP.index("A2", "B2") == 3
    assert OPPOSED_MAP.index("A1", "B1") == 2 and OPPOSED_MAP.index("A2", "B2") == 1


# --- D operators and the boost ------------------------------------------------


def test_d_operators_identity_at_zero():
    for d in d_operators(0.0):
        assert np.array_equal(d, I2)


def test_d_operator_at_pi():
    assert np.allclose(d_operators(math.pi)[0], -1j * SZ, atol=1e-15)


def test_d_operators_unitary_and_inverse_pairs():
    for phi in np.linspace(-3, 3, 13):
        da1, db1, da2, db2 = d_operators(phi)
        for d in (da1, db1, da2, db2):
            assert np.allclose(d @ d.conj().T, I2, atol=1e-12)
        assert np.allclose(da1 @ da2, I2, atol=1e-15)
        assert np.allclose(db1 @ db2, I2, atol=1e-15)


@pytest.mark.parametrize("bmap", [OPPOSED_MAP, ALIGNED_MAP])
def test_boost_operator_unitary(bmap):
    for phi in (0.1, 0.7, 2.5):
        u = boost_operator(phi, bmap)
        assert np.max(np.abs(u.conj().T @ u - np.eye(16))) < 1e-12


def test_identity_boost_and_norm():
    for spec in all_specs():
        pair = boost_scenario(spec, 0.0)
        assert np.allclose(pair.boosted_state, pair.rest_state, atol=1e-15)
        for phi in (0.3, 0.9):
            assert abs(np.linalg.norm(boost_scenario(spec, phi).boosted_state) - 1) < 1e-12


def test_apply_boost_rejects():
    with pytest.raises(RejectedInput):
        apply_boost(np.ones(16), 0.1, ALIGNED_MAP)
    with pytest.raises(RejectedInput):
        apply_boost(np.ones(4) / 2, 0.1, ALIGNED_MAP)


@pytest.mark.parametrize("sign,s", [("plus", 1), ("minus", -1)])
def test_boosted_xi_state_against_hand_kets(sign, s):
    for xi in (0.1, 0.25, 0.6):
        for phi in (0.2, math.pi / 8, 0.9):
            one, two = xi_boosted_spin_branches(xi, phi, s)
            expected = R2 * (tensor(mom("00"), one) + tensor(mom("11"), two))
            got = boost_scenario(ScenarioSpec("xi", xi, sign), phi).boosted_state
            assert np.allclose(got, expected, atol=1e-15)


# --- reduced matrices -------------------------------------------------------


def test_reduced_matrices_match_closed_forms_on_grid():
    worst = 0.0
    for spec in all_specs():
        for phi in PHIS:
            pair = boost_scenario(spec, phi)
            worst = max(worst,
                        np.max(np.abs(reduced_spin(pair) - closed_form_spin(spec, phi))),
                        np.max(np.abs(reduced_momentum(pair) - closed_form_momentum(spec, phi))))
    assert worst < 1e-12


def test_reduced_matrices_match_loop_partial_trace():
    for spec in (ScenarioSpec("eta", 0.3), ScenarioSpec("xi", 0.2, "minus"),
                 ScenarioSpec("appendix-d", 0.7)):
        rho = density_from_ket(boost_scenario(spec, 0.4).boosted_state)
        pair = boost_scenario(spec, 0.4)
        assert np.allclose(reduced_spin(pair), ptrace_loops(rho, "spin"), atol=1e-15)
        assert np.allclose(reduced_momentum(pair), ptrace_loops(rho, "momentum"), atol=1e-15)


def test_rest_frame_recovery():
    for spec in all_specs():
        pair = boost_scenario(spec, 0.0)
        assert np.allclose(reduced_spin(pair), spin_density(pair.rest_state), atol=1e-15)
        assert np.allclose(reduced_momentum(pair), momentum_density(pair.rest_state), atol=1e-15)


def test_eta_zero_spin_block():
    m = reduced_spin(boost_scenario(ScenarioSpec("eta", 0.0), 0.0))
    expected = np.zeros((4, 4))
    expected[1:3, 1:3] = 0.5
    assert np.max(np.abs(m - expected)) < 1e-12


def test_xi_half_spin_is_bell_projector():
    m = reduced_spin(boost_scenario(ScenarioSpec("xi", 0.5), 0.0))
    assert np.max(np.abs(m - density_from_ket(PHI_PLUS))) < 1e-12


def test_xi_spin_entry_value():
    m = reduced_spin(boost_scenario(ScenarioSpec("xi", 0.25), math.pi / 8))
    assert abs(m[1, 2] - math.sqrt(3 / 16) * math.cos(math.pi / 4)) < 1e-12
    assert abs(m[1, 2] - 0.306186) < 1e-6


def test_xi_spin_off_diagonal_vanishes_at_pi_4():
    for xi in XIS:
        m = reduced_spin(boost_scenario(ScenarioSpec("xi", xi), math.pi / 4))
        assert abs(m[1, 2]) < 1e-12


def test_xi_momentum_rest_is_bell_projector():
    m = reduced_momentum(boost_scenario(ScenarioSpec("xi", 0.3), 0.0))
    expected = np.zeros((4, 4))
    expected[np.ix_([0, 3], [0, 3])] = 0.5
    assert np.max(np.abs(m - expected)) < 1e-12


def test_xi_half_momentum_corner_is_real():
    for phi in PHIS:
        m = reduced_momentum(boost_scenario(ScenarioSpec("xi", 0.5), phi))
        assert abs(m[0, 3] - 0.5 * math.cos(2 * phi)) < 1e-12


def test_appendix_d_momentum_entry():
    m = reduced_momentum(boost_scenario(ScenarioSpec("appendix-d", 0.25), math.pi / 8))
    c = math.cos(math.pi / 4)
    expected = -0.5 * complex(c, 0.5 * c)
    assert abs(m[1, 2] - expected) < 1e-12


def test_spin_matrix_pauli_mixture():
    for sign, s in (("plus", 1), ("minus", -1)):
        for xi in XIS:
            for phi in PHIS:
                m = reduced_spin(boost_scenario(ScenarioSpec("xi", xi, sign), phi))
                mix = math.cos(phi) ** 2 * rho_psi(xi, s) + math.sin(phi) ** 2 * rho_psi(xi, -s)
                assert np.max(np.abs(m - mix)) < 1e-12


def test_momentum_matrix_pauli_form():
    for xi in XIS:
        for phi in PHIS:
            m = reduced_momentum(boost_scenario(ScenarioSpec("xi", xi), phi))
            assert np.max(np.abs(m - momentum_matrix_pauli_xi(xi, phi))) < 1e-12


def test_eta_momentum_mirrors_spin_with_flipped_coherence():
    for eta in ETAS:
        for phi in PHIS:
            pair = boost_scenario(ScenarioSpec("eta", eta), phi)
            s, p = reduced_spin(pair), reduced_momentum(pair)
            assert abs(s[1, 2] - 0.5 * (1 - 2 * eta) * math.cos(2 * phi)) < 1e-12
            assert abs(p[1, 2] + s[1, 2]) < 1e-12


def test_sign_independence_of_xi_moduli():
    for xi in (0.2, 0.7):
        for phi in (0.3, 0.8):
            a = reduced_momentum(boost_scenario(ScenarioSpec("xi", xi, "plus"), phi))
            b = reduced_momentum(boost_scenario(ScenarioSpec("xi", xi, "minus"), phi))
            assert np.allclose(a, b, atol=1e-15)


# --- branch overlaps ----------------------------------------------------------


def test_inner_products_trivial():
    one_two, two_one = inner_products_12_21(ScenarioSpec("xi", 0.3), 0.0)
    assert abs(one_two - 1) < 1e-15 and abs(two_one - 1) < 1e-15


def test_inner_products_half():
    for phi in PHIS:
        a, b = inner_products_12_21(ScenarioSpec("xi", 0.5), phi)
        assert abs(a - math.cos(2 * phi)) < 1e-15 and abs(b - math.cos(2 * phi)) < 1e-15


def test_inner_products_value():
    a, b = inner_products_12_21(ScenarioSpec("xi", 0.25), math.pi / 8)
    h = math.sqrt(2) / 2
    assert abs(a - complex(h, 0.5 * h)) < 1e-15
    assert abs(b - a.conjugate()) < 1e-15


def test_inner_products_general():
    for sign in ("plus", "minus"):
        for xi in XIS:
            for phi in PHIS:
                a, b = inner_products_12_21(ScenarioSpec("xi", xi, sign), phi)
                c, s = math.cos(2 * phi), math.sin(2 * phi)
                assert abs(a - complex(c, -(2 * xi - 1) * s)) < 1e-14
                assert abs(b - complex(c, (2 * xi - 1) * s)) < 1e-14


def test_inner_products_reject_other_scenarios():
    with pytest.raises(RejectedInput):
        inner_products_12_21(ScenarioSpec("eta", 0.3), 0.1)


# --- conjugation and projector identities ------------------------------------


def test_conjugation_rules_cover_eight_cases():
    triples = conjugation_identities(0.3)
    assert len(triples) == 8
    c, s = math.cos(0.3), math.sin(0.3)
    name, lhs, rhs = triples[0]
    assert np.allclose(rhs, c * SX + s * SY)


@pytest.mark.parametrize("phi", np.linspace(-1.5, 1.5, 25))
def test_conjugation_rules(phi):
    for name, lhs, rhs in conjugation_identities(phi):
        assert np.max(np.abs(lhs - rhs)) < 1e-12, name


@pytest.mark.parametrize("phi", np.linspace(-1.5, 1.5, 25))
def test_projector_identities(phi):
    triples = projector_identities(phi)
    assert len(triples) == 8
    for name, lhs, rhs in triples:
        assert np.max(np.abs(lhs - rhs)) < 1e-12, name


def test_kind_enum_values():
    assert [k.value for k in ScenarioKind] == ["eta", "xi", "appendix-d"]
