"""Special functions, spinor components, grids and normalization."""

import math

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import eval_jacobi

from diracbound import (
    DomainError,
    NoEigenvalueError,
    QuantumNumbers,
    SingularCouplingError,
    SymmetryLimit,
    WaveContext,
    count_nodes,
    default_grid,
    hyp2f1_terminating,
    jacobi_p,
    jacobi_rodrigues,
    lower_g_pseudo,
    lower_g_spin,
    norm_constant,
    solve_wavefunction,
    upper_f_pseudo,
    upper_f_spin,
    wave_context,
)
from diracbound.spectra import aux_pseudo, aux_spin, radial_poly_degree


def test_jacobi_polynomial_against_scipy_reference():
    rng = np.random.default_rng(7)
    x = np.linspace(-1.0, 1.0, 41)
    for _ in range(25):
        n = int(rng.integers(0, 7))
        a = float(rng.uniform(-0.9, 6.0))
        b = float(rng.uniform(-0.9, 6.0))
        ours = jacobi_p(n, a, b, x)
        ref = eval_jacobi(n, a, b, x)
        assert np.allclose(ours, ref, rtol=1e-10, atol=1e-12)


def test_jacobi_rodrigues_matches_series_form():
    rng = np.random.default_rng(11)
    x = np.linspace(-0.99, 0.99, 21)
    for _ in range(25):
        n = int(rng.integers(0, 7))
        a = float(rng.uniform(-0.9, 6.0))
        b = float(rng.uniform(-0.9, 6.0))
        assert np.allclose(jacobi_rodrigues(n, a, b, x), jacobi_p(n, a, b, x),
                           rtol=1e-9, atol=1e-11)


def test_jacobi_value_at_unit_argument():
    # P_n^{(a,b)}(1) = Gamma(n+a+1) / (Gamma(a+1) n!)
    for n, a, b in ((0, 0.5, 1.0), (3, 0.5, 2.5), (5, 2.0, 0.1)):
        expected = math.gamma(n + a + 1.0) / (math.gamma(a + 1.0)
                                              * math.factorial(n))
        assert jacobi_p(n, a, b, 1.0) == pytest.approx(expected, rel=1e-12)


def test_terminating_hypergeometric_equals_jacobi():
    # 2F1(-m, m+a+b+1; a+1; s) relates to P_m^{(a,b)}(1-2s) by the binomial
    # prefactor; both code paths must agree.
    s = np.linspace(0.0, 1.0, 31)
    for m, a, b in ((0, 1.2, 0.7), (2, 0.4, 3.0), (5, 2.5, 1.5)):
        lhs = hyp2f1_terminating(m, m + a + b + 1.0, a + 1.0, s)
        binom = math.gamma(m + a + 1.0) / (math.gamma(a + 1.0)
                                           * math.factorial(m))
        rhs = jacobi_p(m, a, b, 1.0 - 2.0 * s) / binom
        assert np.allclose(lhs, rhs, rtol=1e-11, atol=1e-13)


def test_count_nodes_on_synthetic_samples():
    r = np.linspace(0.0, 1.0, 501)
    assert count_nodes(np.sin(3.0 * math.pi * r)) == 2
    assert count_nodes(np.ones(10)) == 0
    # A touch of zero without a sign change is not a node.
    assert count_nodes(np.array([1.0, 0.5, 0.0, 0.5, 1.0])) == 0
    # An exact zero at a crossing counts once.
    assert count_nodes(np.array([1.0, 0.5, 0.0, -0.5, -1.0])) == 1
    with pytest.raises(DomainError):
        count_nodes(np.ones((3, 3)))


def test_wave_context_exponents_and_coupling(params_h5, spin_sym, pseudo_sym):
    qn = QuantumNumbers(0, 1)
    E = 0.26229015
    ctx = wave_context(qn, spin_sym, params_h5, E)
    aux = aux_spin(E, params_h5, spin_sym.constant, qn)
    lam = aux.eta * (aux.eta + 1.0)
    assert ctx.beta == pytest.approx(math.sqrt(aux.beta2), rel=1e-12)
    assert (2.0 * ctx.xi - 1.0) ** 2 == pytest.approx(
        1.0 + 4.0 * (aux.gamma2 + lam), rel=1e-12)
    assert ctx.coupling == pytest.approx(params_h5.M + E - spin_sym.constant)
    assert ctx.degree == radial_poly_degree(qn, "spin")

    qn = QuantumNumbers(0, 2)
    E = -0.28786907
    ctx = wave_context(qn, pseudo_sym, params_h5, E)
    aux = aux_pseudo(E, params_h5, pseudo_sym.constant, qn)
    lam = aux.eta * (aux.eta - 1.0)
    assert ctx.beta == pytest.approx(math.sqrt(aux.beta2), rel=1e-12)
    assert (2.0 * ctx.xi - 1.0) ** 2 == pytest.approx(
        1.0 + 4.0 * (aux.gamma2 + lam), rel=1e-12)
    assert ctx.coupling == pytest.approx(params_h5.M - E + pseudo_sym.constant)
    assert ctx.degree == radial_poly_degree(qn, "pseudospin")


def test_solve_wavefunction_solves_energy_and_samples(params_h5, spin_sym):
    qn = QuantumNumbers(0, 1)
    sol = solve_wavefunction(qn, spin_sym, params_h5)
    assert sol.E == pytest.approx(0.26229015, abs=1e-6)
    r, F, G = sol.samples[:, 0], sol.samples[:, 1], sol.samples[:, 2]
    assert sol.samples.shape[1] == 3
    assert np.all(np.diff(r) > 0.0)
    # Boundary behavior: the solved component vanishes at both ends.
    fmax = np.max(np.abs(F))
    assert abs(F[0]) <= 1e-6 * fmax
    assert abs(F[-1]) <= 1e-6 * fmax
    # The sampling grid integrates the solved component close to unit norm.
    assert np.trapezoid(F ** 2, r) == pytest.approx(1.0, abs=1e-4)


def test_closed_form_norm_constant_against_quadrature(params_h5, spin_sym,
                                                      pseudo_sym):
    for sym, qn in ((spin_sym, QuantumNumbers(1, 1)),
                    (pseudo_sym, QuantumNumbers(1, 2))):
        sol = solve_wavefunction(qn, sym, params_h5)
        ctx = wave_context(qn, sym, params_h5, sol.E)
        nc = norm_constant(ctx)
        assert nc == pytest.approx(sol.norm_const, rel=1e-12)
        solved = (upper_f_spin if sym.is_spin else lower_g_pseudo)
        upper = 40.0 / (2.0 * params_h5.delta * ctx.beta)
        norm, err = quad(lambda rr: solved(rr, ctx, nc) ** 2, 0.0, upper,
                         limit=300)
        assert err < 1e-8
        assert norm == pytest.approx(1.0, abs=1e-6)


def test_constructed_component_uses_first_order_relation(params_h5, spin_sym):
    # G = [F' + (eta/r) F] / (M + E - C): check against a numeric
    # derivative of the solved component.
    qn = QuantumNumbers(0, 1)
    sol = solve_wavefunction(qn, spin_sym, params_h5)
    ctx = wave_context(qn, spin_sym, params_h5, sol.E)
    nc = norm_constant(ctx)
    eta = qn.kappa + params_h5.H
    h = 1e-4
    for r0 in (0.7, 2.0, 6.0, 12.0):
        df = (upper_f_spin(r0 + h, ctx, nc)
              - upper_f_spin(r0 - h, ctx, nc)) / (2.0 * h)
        expected = (df + (eta / r0) * upper_f_spin(r0, ctx, nc)) / ctx.coupling
        got = lower_g_spin(np.array([r0]), ctx, nc)[0]
        assert got == pytest.approx(expected, rel=1e-6)


def test_singular_coupling_raises(params_h0, spin_sym):
    # With C = M + E the envelope exponent collapses together with the
    # first-order coupling, so the context builder itself refuses.
    qn = QuantumNumbers(0, -2)
    E = 0.5
    with pytest.raises(DomainError):
        wave_context(qn, SymmetryLimit.spin(params_h0.M + E), params_h0, E)
    # A context forced to zero coupling trips the dedicated error in the
    # constructed component.
    base = wave_context(qn, spin_sym, params_h0, 0.24181258)
    forced = WaveContext(qn=base.qn, symmetry=base.symmetry, E=base.E,
                         p=base.p, beta=base.beta, xi=base.xi,
                         degree=base.degree, coupling=0.0)
    with pytest.raises(SingularCouplingError):
        lower_g_spin(np.array([1.0]), forced)


def test_default_grid_covers_the_tail(params_h5, pseudo_sym):
    qn = QuantumNumbers(0, 2)
    sol = solve_wavefunction(qn, pseudo_sym, params_h5)
    ctx = wave_context(qn, pseudo_sym, params_h5, sol.E)
    r = default_grid(ctx)
    assert r[0] > 0.0
    assert r[-1] >= 30.0
    solved = lower_g_pseudo(r, ctx, norm_constant(ctx))
    assert abs(solved[-1]) <= 1e-6 * np.max(np.abs(solved))


def test_solve_wavefunction_unbound_state_raises(params_h0):
    with pytest.raises(NoEigenvalueError):
        solve_wavefunction(QuantumNumbers(0, -2), SymmetryLimit.spin(0.0),
                           params_h0)


def test_solve_wavefunction_accepts_explicit_energy(params_h5, spin_sym):
    qn = QuantumNumbers(0, 1)
    sol = solve_wavefunction(qn, spin_sym, params_h5, E=0.26229015)
    assert sol.E == 0.26229015


def test_pseudospin_constructed_component(params_h5, pseudo_sym):
    # F = [G' - (eta/r) G] / (M - E + C) for the pseudospin reduction.
    qn = QuantumNumbers(0, 2)
    sol = solve_wavefunction(qn, pseudo_sym, params_h5)
    ctx = wave_context(qn, pseudo_sym, params_h5, sol.E)
    nc = norm_constant(ctx)
    eta = qn.kappa + params_h5.H
    h = 1e-4
    for r0 in (0.7, 2.0, 6.0):
        dg = (lower_g_pseudo(r0 + h, ctx, nc)
              - lower_g_pseudo(r0 - h, ctx, nc)) / (2.0 * h)
        expected = (dg - (eta / r0) * lower_g_pseudo(r0, ctx, nc)) \
            / ctx.coupling
        got = upper_f_pseudo(np.array([r0]), ctx, nc)[0]
        assert got == pytest.approx(expected, rel=1e-6)
