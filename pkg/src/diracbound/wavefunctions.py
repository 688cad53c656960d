"""Closed-form spinor components, normalization constants and node counts.

The solved radial component of a bound state is

    chi(r) = C * s^beta (1-s)^xi * (2beta+1)_m / m! * 2F1(-m, 2beta+2xi+m; 1+2beta; s)

with s = e^(-2 delta r), where the polynomial degree m, the decay exponent
beta and the barrier exponent xi follow from the solved energy.  The spin
limit solves the upper component F and constructs G from the first-order
relation G = [F' + (eta/r) F] / (M + E - C); the pseudospin limit solves the
lower component G and constructs F = [G' - (eta/r) G] / (M - E + C).  The
normalization constant has a closed Gamma-function form, evaluated in
log-Gamma space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import (DomainError, NoEigenvalueError, PoleError,
                     SingularCouplingError)
from .potentials import PotentialParams, SymmetryLimit
from .spectra import (QuantumNumbers, SearchConfig, aux_pseudo, aux_spin,
                      radial_poly_degree, select_table_root, solve_levels)

__all__ = [
    "WaveContext",
    "SpinorSolution",
    "hyp2f1_terminating",
    "jacobi_p",
    "jacobi_rodrigues",
    "wave_context",
    "upper_f_spin",
    "lower_g_spin",
    "lower_g_pseudo",
    "upper_f_pseudo",
    "norm_constant",
    "count_nodes",
    "default_grid",
    "solve_wavefunction",
]


def hyp2f1_terminating(n: int, b: float, c: float, s):
    """Terminating hypergeometric series 2F1(-n, b; c; s).

    The first parameter is the nonpositive integer -n, so the series has
    exactly n+1 terms.  Scalar or array s.  Raises PoleError when the
    Pochhammer factor (c)_k vanishes before the series terminates.
    """
    if n < 0 or n != int(n):
        raise DomainError(f"n must be a nonnegative integer, got {n}")
    s = np.asarray(s, dtype=float)
    total = np.ones_like(s)
    term = np.ones_like(s)
    for k in range(int(n)):
        ck = c + k
        if ck == 0.0:
            raise PoleError(
                f"2F1(-{n}, {b}; {c}; s) hits a pole: (c)_{k + 1} = 0")
        term = term * ((-n + k) * (b + k)) / (ck * (k + 1)) * s
        total = total + term
    if total.ndim == 0:
        return float(total)
    return total


def _hyp2f1_deriv(n: int, b: float, c: float, s):
    """d/ds of 2F1(-n, b; c; s); zero for n = 0."""
    if n == 0:
        s = np.asarray(s, dtype=float)
        return float(0.0) if s.ndim == 0 else np.zeros_like(s)
    if c == 0.0:
        raise PoleError(f"derivative of 2F1 undefined: c = 0")
    return (-n) * b / c * hyp2f1_terminating(n - 1, b + 1.0, c + 1.0, s)


def jacobi_p(n: int, a: float, b: float, x):
    """Jacobi polynomial P_n^(a,b)(x) by the three-term recurrence."""
    if n < 0:
        raise DomainError(f"degree must be >= 0, got {n}")
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if n == 0:
        return float(p_prev) if x.ndim == 0 else p_prev
    p_cur = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0
    for k in range(2, n + 1):
        c1 = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0)
        c2 = (2.0 * k + a + b - 1.0) * (a * a - b * b)
        c3 = (2.0 * k + a + b - 2.0) * (2.0 * k + a + b - 1.0) \
            * (2.0 * k + a + b)
        c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b)
        p_prev, p_cur = p_cur, ((c2 + c3 * x) * p_cur - c4 * p_prev) / c1
    return float(p_cur) if x.ndim == 0 else p_cur


def _falling(z: float, k: int) -> float:
    out = 1.0
    for i in range(k):
        out *= z - i
    return out


def jacobi_rodrigues(n: int, a: float, b: float, x):
    """Jacobi polynomial from the expanded Rodrigues representation.

    The n-th derivative in the Rodrigues formula is expanded by the Leibniz
    rule into a finite sum, so the evaluation is exact up to rounding and
    independent of the recurrence in jacobi_p.
    """
    if n < 0:
        raise DomainError(f"degree must be >= 0, got {n}")
    x = np.asarray(x, dtype=float)
    total = np.zeros_like(x)
    for k in range(n + 1):
        coeff = math.comb(n, k) * ((-1.0) ** k) \
            * _falling(a + n, k) * _falling(b + n, n - k)
        total = total + coeff * (1.0 - x) ** (n - k) * (1.0 + x) ** k
    total = total * ((-1.0) ** n) / (2.0 ** n * math.factorial(n))
    return float(total) if x.ndim == 0 else total


@dataclass(frozen=True)
class WaveContext:
    """Exponents and constants of one solved bound state.

    beta is the dimensionless decay exponent (positive square root), xi the
    barrier exponent, degree the polynomial degree of the solved component,
    coupling the first-order factor M+E-C (spin) or M-E+C (pseudospin).
    """

    qn: QuantumNumbers
    symmetry: SymmetryLimit
    E: float
    p: PotentialParams
    beta: float
    xi: float
    degree: int
    coupling: float

    @property
    def beta_dim(self) -> float:
        """Physical decay rate 2*delta*beta in fm^-1."""
        return 2.0 * self.p.delta * self.beta


def wave_context(qn: QuantumNumbers, sym: SymmetryLimit, p: PotentialParams,
                 E: float) -> WaveContext:
    """Build the evaluation context for a solved energy.

    Raises DomainError when the energy does not correspond to a bound state
    (non-positive beta^2) or the barrier discriminant is negative.
    """
    if sym.is_spin:
        aux = aux_spin(E, p, sym.constant, qn)
        lam = aux.eta * (aux.eta + 1.0)
        coupling = p.M + E - sym.constant
    else:
        aux = aux_pseudo(E, p, sym.constant, qn)
        lam = aux.eta * (aux.eta - 1.0)
        coupling = p.M - E + sym.constant
    if aux.beta2 <= 0.0:
        raise DomainError(
            f"E={E:.8f} is not a bound state (beta^2={aux.beta2:.6g} <= 0)")
    disc = 0.25 + aux.gamma2 + lam
    if disc < 0.0:
        raise DomainError(
            f"barrier discriminant negative ({disc:.6g}) at E={E:.8f}")
    return WaveContext(
        qn=qn, symmetry=sym, E=float(E), p=p,
        beta=math.sqrt(aux.beta2),
        xi=0.5 + math.sqrt(disc),
        degree=radial_poly_degree(qn, sym.kind),
        coupling=float(coupling),
    )


def _s_vars(r, delta: float):
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0.0):
        raise DomainError("r must be positive")
    s = np.exp(-2.0 * delta * r)
    one_minus_s = -np.expm1(-2.0 * delta * r)
    return r, s, one_minus_s


def _poly_prefactor(ctx: WaveContext) -> float:
    """(2beta+1)_m / m! in the hypergeometric form of the solved component."""
    m, tb = ctx.degree, 2.0 * ctx.beta
    return math.exp(math.lgamma(m + tb + 1.0) - math.lgamma(tb + 1.0)
                    - math.lgamma(m + 1.0))


def _solved_component(r, ctx: WaveContext, norm: float):
    """norm * s^beta (1-s)^xi * prefac * 2F1(-m, 2b+2x+m; 1+2b; s)."""
    r, s, oms = _s_vars(r, ctx.p.delta)
    m, tb = ctx.degree, 2.0 * ctx.beta
    y = hyp2f1_terminating(m, tb + 2.0 * ctx.xi + m, 1.0 + tb, s)
    out = norm * _poly_prefactor(ctx) \
        * s ** ctx.beta * oms ** ctx.xi * y
    return float(out) if out.ndim == 0 else out


def _solved_component_deriv(r, ctx: WaveContext, norm: float):
    """Analytic d/dr of the solved component (chain rule, ds/dr = -2 delta s)."""
    r, s, oms = _s_vars(r, ctx.p.delta)
    d, m = ctx.p.delta, ctx.degree
    tb = 2.0 * ctx.beta
    b_arg = tb + 2.0 * ctx.xi + m
    y = hyp2f1_terminating(m, b_arg, 1.0 + tb, s)
    dy = _hyp2f1_deriv(m, b_arg, 1.0 + tb, s)
    pre = norm * _poly_prefactor(ctx) * s ** ctx.beta * oms ** ctx.xi
    out = pre * (2.0 * d * (ctx.xi * s / oms - ctx.beta) * y
                 - 2.0 * d * s * dy)
    return float(out) if out.ndim == 0 else out


def _constructed_component(r, ctx: WaveContext, norm: float, sign: float):
    """[chi' + sign*(eta/r)*chi] / coupling for the paired component."""
    if ctx.coupling == 0.0:
        raise SingularCouplingError(
            "first-order coupling factor vanishes (exact-symmetry "
            "singular case); the paired component is undefined")
    r = np.asarray(r, dtype=float)
    eta = ctx.qn.kappa + ctx.p.H
    chi = _solved_component(r, ctx, norm)
    dchi = _solved_component_deriv(r, ctx, norm)
    out = (dchi + sign * (eta / r) * chi) / ctx.coupling
    return float(out) if np.ndim(out) == 0 else out


def upper_f_spin(r, ctx: WaveContext, norm: float = 1.0):
    """Upper component F of a spin-limit state (the solved component)."""
    if not ctx.symmetry.is_spin:
        raise DomainError("upper_f_spin needs a spin-limit context")
    return _solved_component(r, ctx, norm)


def lower_g_spin(r, ctx: WaveContext, norm: float = 1.0):
    """Lower component G of a spin-limit state.

    Constructed from the first-order relation G = [F' + (eta/r)F]/(M+E-C).
    Raises SingularCouplingError when M+E-C = 0.
    """
    if not ctx.symmetry.is_spin:
        raise DomainError("lower_g_spin needs a spin-limit context")
    return _constructed_component(r, ctx, norm, +1.0)


def lower_g_pseudo(r, ctx: WaveContext, norm: float = 1.0):
    """Lower component G of a pseudospin-limit state (the solved component)."""
    if ctx.symmetry.is_spin:
        raise DomainError("lower_g_pseudo needs a pseudospin-limit context")
    return _solved_component(r, ctx, norm)


def upper_f_pseudo(r, ctx: WaveContext, norm: float = 1.0):
    """Upper component F of a pseudospin-limit state.

    Constructed from the first-order relation F = [G' - (eta/r)G]/(M-E+C).
    Raises SingularCouplingError when M-E+C = 0.
    """
    if ctx.symmetry.is_spin:
        raise DomainError("upper_f_pseudo needs a pseudospin-limit context")
    return _constructed_component(r, ctx, norm, -1.0)


def norm_constant(ctx: WaveContext) -> float:
    """Closed-form L2 normalization constant of the solved component.

    C = sqrt( 2 delta m! (m+xi+beta) Gamma(2beta+1) Gamma(m+2beta+2xi)
              / [ (m+xi) Gamma(2beta) Gamma(m+2beta+1) Gamma(m+2xi) ] )

    evaluated in log-Gamma space.  Raises DomainError if any Gamma argument
    or algebraic factor is non-positive.
    """
    m, beta, xi = ctx.degree, ctx.beta, ctx.xi
    args = (2.0 * beta, 2.0 * beta + 1.0, m + 2.0 * beta + 1.0,
            m + 2.0 * beta + 2.0 * xi, m + 2.0 * xi)
    if any(a <= 0.0 for a in args) or (m + xi) <= 0.0 \
            or (m + xi + beta) <= 0.0:
        raise DomainError("normalization Gamma argument <= 0; "
                          "state is not normalizable")
    log_c2 = (math.log(2.0 * ctx.p.delta) + math.lgamma(m + 1.0)
              + math.log(m + xi + beta) + math.lgamma(2.0 * beta + 1.0)
              + math.lgamma(m + 2.0 * beta + 2.0 * xi)
              - math.log(m + xi) - math.lgamma(2.0 * beta)
              - math.lgamma(m + 2.0 * beta + 1.0)
              - math.lgamma(m + 2.0 * xi))
    return math.exp(0.5 * log_c2)


def count_nodes(samples) -> int:
    """Strict sign changes of a sampled component, endpoints excluded.

    Exact zeros are skipped so that a tangential touch does not count
    twice and a sampled zero crossing counts once.
    """
    v = np.asarray(samples, dtype=float)
    if v.ndim != 1 or v.size < 2:
        raise DomainError("need a 1-d array of at least 2 samples")
    interior = v[1:-1]
    nz = interior[interior != 0.0]
    if nz.size < 2:
        return 0
    return int(np.count_nonzero(np.signbit(nz[1:]) != np.signbit(nz[:-1])))


def default_grid(ctx: WaveContext, num_points: int = 2000) -> np.ndarray:
    """Log-spaced sampling grid covering the rise and the decaying tail.

    Starts from the physical decay scale (outer radius max(30, 18/beta_dim)
    fm) and extends until the sampled solved component has fallen below
    1e-7 of its peak, so the tail criterion |chi(r_max)| < 1e-6 max|chi|
    holds with margin even when the normalization constant is large.  The
    inner radius 1e-6 fm resolves the r -> 0 boundary behavior.
    """
    r_max = max(30.0, 18.0 / ctx.beta_dim)
    for _ in range(40):
        r = np.geomspace(1e-6, r_max, num_points)
        chi = _solved_component(r, ctx, 1.0)
        if abs(chi[-1]) < 1e-7 * np.max(np.abs(chi)):
            return r
        r_max *= 1.4
    return r


@dataclass(frozen=True)
class SpinorSolution:
    """A solved bound state with both spinor components sampled on a grid.

    samples has one row (r, F, G) per grid point; norm_const normalizes the
    solved component (F in the spin limit, G in the pseudospin limit) to
    unit L2 norm, and the paired component is constructed from the same
    normalized solution.
    """

    qn: QuantumNumbers
    symmetry: SymmetryLimit
    E: float
    beta_exp: float
    xi_exp: float
    norm_const: float
    samples: np.ndarray


def solve_wavefunction(qn: QuantumNumbers, sym: SymmetryLimit,
                       p: PotentialParams, E: Optional[float] = None,
                       r_grid: Optional[np.ndarray] = None,
                       search: Optional[SearchConfig] = None) -> SpinorSolution:
    """Solve (or accept) a bound-state energy and sample both components.

    When E is omitted the tabulation-convention root is solved first;
    NoEigenvalueError is raised when the state is unbound.
    """
    if E is None:
        root = select_table_root(solve_levels(qn, sym, p, search))
        if root is None:
            raise NoEigenvalueError(
                f"no bound state for {qn.label} in the {sym.kind} limit")
        E = root.E
    ctx = wave_context(qn, sym, p, float(E))
    norm = norm_constant(ctx)
    r = default_grid(ctx) if r_grid is None else np.asarray(r_grid, float)
    if sym.is_spin:
        F = upper_f_spin(r, ctx, norm)
        G = lower_g_spin(r, ctx, norm)
    else:
        G = lower_g_pseudo(r, ctx, norm)
        F = upper_f_pseudo(r, ctx, norm)
    return SpinorSolution(
        qn=qn, symmetry=sym, E=float(E), beta_exp=ctx.beta, xi_exp=ctx.xi,
        norm_const=norm, samples=np.column_stack([r, F, G]),
    )
