"""Shooting-method integrator against closed-form eigenvalues."""

import math

import numpy as np
import pytest

from diracbound import (
    DomainError,
    NoEigenvalueError,
    NonRelParams,
    OracleConfig,
    QuantumNumbers,
    SymmetryLimit,
    benchmark_params,
    dirac_eigenvalue,
    nonrel_energy_hulthen,
    numerov_integrate,
    schrodinger_eigenvalue,
    solve_levels,
)


def test_numerov_reproduces_sine_solution():
    r = np.linspace(0.0, math.pi, 2001)
    Q = -np.ones_like(r)
    u = numerov_integrate(r, Q, 0.0, math.sin(r[1]))
    assert np.max(np.abs(u - np.sin(r))) < 1e-9


def test_numerov_rescaling_keeps_proportionality():
    # A strongly growing solution triggers the overflow guard; the output
    # must stay proportional to cosh(5 r).
    r = np.linspace(0.0, 60.0, 6001)
    Q = 25.0 * np.ones_like(r)
    u = numerov_integrate(r, Q, 1.0, math.cosh(5.0 * r[1]))
    ref = np.cosh(5.0 * r)
    i, j = 3000, 5500
    assert np.all(np.isfinite(u))
    assert u[j] / u[i] == pytest.approx(ref[j] / ref[i], rel=1e-5)


def test_numerov_rejects_bad_grids():
    with pytest.raises(DomainError):
        numerov_integrate(np.array([0.0, 1.0, 3.0]), np.zeros(3), 0.0, 1.0)
    with pytest.raises(DomainError):
        numerov_integrate(np.array([0.0, 1.0]), np.zeros(2), 0.0, 1.0)


def test_inner_solver_on_coulomb_levels():
    cfg = OracleConfig(r_max=60.0, num_points=12000)

    def coulomb(r):
        return -2.0 / r

    eps, nodes = schrodinger_eigenvalue(coulomb, 0, cfg)
    assert nodes == 0
    assert eps == pytest.approx(-1.0, abs=1e-4)
    eps, nodes = schrodinger_eigenvalue(coulomb, 1, cfg)
    assert nodes == 1
    assert eps == pytest.approx(-0.25, abs=1e-4)


def test_inner_solver_on_screened_coulomb_closed_form():
    delta, v0 = 0.05, 0.1
    cfg = OracleConfig(r_max=60.0, num_points=12000)

    def screened(r):
        s = np.exp(-2.0 * delta * r)
        return -2.0 * v0 * s / (1.0 - s)

    nrp = NonRelParams(m=1.0, l=0, Ze2=v0 / (2.0 * delta), A=0.0, B=0.0,
                       delta=delta)
    target = 2.0 * nonrel_energy_hulthen(nrp, 0)
    eps, nodes = schrodinger_eigenvalue(screened, 0, cfg)
    assert nodes == 0
    assert eps == pytest.approx(target, abs=1e-4)


def test_inner_solver_reports_missing_level():
    cfg = OracleConfig(r_max=40.0, num_points=6000)

    def shallow(r):
        return -0.05 * np.exp(-r)

    with pytest.raises(NoEigenvalueError):
        schrodinger_eigenvalue(shallow, 3, cfg)


def test_dirac_oracle_agrees_with_principal_branch_root(params_h0, spin_sym):
    # The self-consistent shooting solve lands on the analytic root of the
    # positive quantization branch to far better than its own tolerance.
    qn = QuantumNumbers(0, -2)
    roots = [r for r in solve_levels(qn, spin_sym, params_h0)
             if r.nu_branch > 0 and r.sqrt_domain_ok and r.C_bound_ok
             and abs(r.E) < params_h0.M]
    assert roots, "no principal-branch bound root for the spot state"
    result = dirac_eigenvalue(qn, spin_sym, params_h0)
    assert result.converged
    assert result.node_count == 0
    assert result.E == pytest.approx(roots[0].E, abs=1e-6)


def test_dirac_oracle_raises_when_no_bound_state(params_h0, pseudo_sym):
    with pytest.raises(NoEigenvalueError):
        dirac_eigenvalue(QuantumNumbers(1, -1), pseudo_sym, params_h0)
