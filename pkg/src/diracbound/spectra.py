"""Closed-form eigenvalue residuals and bound-state root finding.

For each symmetry limit the quantization condition of the reduced radial
problem is a transcendental relation between the energy E and the potential
parameters.  It is expressed here as a residual g(E) whose zeros are the
closed-form eigenvalues.  Both sides of the underlying relation depend on E,
so roots are extracted by scanning an energy window, bracketing sign changes
and bisecting.

The residual is built from the squared form of the quantization relation.
That form admits two root families, distinguished by the sign of the
intermediate quantity Q (see `nu_branch` on EnergyRoot): Q > 0 corresponds to
the normalizable-exponent branch of the derivation, Q < 0 to the extension
introduced by squaring.  Both families are genuine zeros of the residual and
both are returned, flagged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DomainError
from .potentials import PotentialParams, SymmetryLimit

__all__ = [
    "QuantumNumbers",
    "AuxiliaryParams",
    "EnergyRoot",
    "SearchConfig",
    "SPECTROSCOPIC_LETTERS",
    "radial_poly_degree",
    "aux_spin",
    "aux_pseudo",
    "nu_residual_spin",
    "nu_residual_pseudo",
    "solve_levels",
    "select_table_root",
    "doublet_partner",
    "sweep_delta",
    "scan_v0_c",
]

SPECTROSCOPIC_LETTERS = "spdfghik"


@dataclass(frozen=True)
class QuantumNumbers:
    """Radial quantum number n >= 0 and spin-orbit quantum number kappa != 0."""

    n: int
    kappa: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"n must be >= 0, got {self.n}")
        if self.kappa == 0:
            raise DomainError("kappa must be a nonzero integer")

    @property
    def l(self) -> int:
        """Orbital angular momentum of the upper component."""
        return int(abs(self.kappa + 0.5) - 0.5)

    @property
    def l_tilde(self) -> int:
        """Orbital angular momentum of the lower component."""
        return int(abs(self.kappa - 0.5) - 0.5)

    @property
    def j(self) -> float:
        """Total angular momentum."""
        return abs(self.kappa) - 0.5

    @property
    def label(self) -> str:
        """Spectroscopic label, e.g. (0, -2) -> '0p3/2'."""
        if self.l < len(SPECTROSCOPIC_LETTERS):
            letter = SPECTROSCOPIC_LETTERS[self.l]
        else:
            letter = f"[l={self.l}]"
        return f"{self.n}{letter}{2 * abs(self.kappa) - 1}/2"


@dataclass(frozen=True)
class AuxiliaryParams:
    """Energy-dependent combinations entering the quantization relation."""

    alpha2: float
    beta2: float
    gamma2: float
    eta: float


@dataclass(frozen=True)
class EnergyRoot:
    """A solved energy with validity classification.

    Flags are recomputed from the energy when the root is built:
        sqrt_domain_ok: the discriminant under the square root is >= 0.
        M_bound_ok: |E| < M.
        C_bound_ok: the coupling factor (M+E-C spin, M-E+C pseudospin) is > 0.
        sign_ok: the root is on the physically selected side (positive
            energy for spin, negative energy away from E = M + C for
            pseudospin).
        nu_branch: +1 if the intermediate quantity Q is positive at the root
            (normalizable-exponent branch), -1 otherwise.
    """

    E: float
    symmetry: SymmetryLimit
    qn: QuantumNumbers
    residual: float
    sqrt_domain_ok: bool
    M_bound_ok: bool
    C_bound_ok: bool
    sign_ok: bool
    nu_branch: int


@dataclass(frozen=True)
class SearchConfig:
    """Energy window and refinement settings for the root scan."""

    e_min: Optional[float] = None
    e_max: Optional[float] = None
    step: float = 1e-3
    tol: float = 1e-12


def radial_poly_degree(qn: QuantumNumbers, kind: str) -> int:
    """Degree of the polynomial factor of the solved radial component.

    The spin reduction solves for the upper component, whose node count (and
    polynomial degree) equals the radial label n.  The pseudospin reduction
    solves for the lower component, which carries one extra node when
    kappa > 0, so its polynomial degree is n + 1 there.
    """
    if kind == "pseudospin" and qn.kappa > 0:
        return qn.n + 1
    return qn.n


def aux_spin(E: float, p: PotentialParams, C_S: float,
             qn: QuantumNumbers) -> AuxiliaryParams:
    """Auxiliary combinations for the spin-limit quantization relation."""
    coupling = p.M + E - C_S
    four_d2 = 4.0 * p.delta ** 2
    return AuxiliaryParams(
        alpha2=(p.V0 + p.v0_prime) * coupling / four_d2,
        beta2=(p.M ** 2 - E ** 2 - C_S * (p.M - E)) / four_d2,
        gamma2=-p.b_prime * coupling / four_d2,
        eta=qn.kappa + p.H,
    )


def aux_pseudo(E: float, p: PotentialParams, C_PS: float,
               qn: QuantumNumbers) -> AuxiliaryParams:
    """Auxiliary combinations for the pseudospin-limit relation."""
    coupling = p.M - E + C_PS
    four_d2 = 4.0 * p.delta ** 2
    return AuxiliaryParams(
        alpha2=-(p.V0 + p.v0_prime) * coupling / four_d2,
        beta2=(p.M ** 2 - E ** 2 + C_PS * (p.M + E)) / four_d2,
        gamma2=p.b_prime * coupling / four_d2,
        eta=qn.kappa + p.H,
    )


def _parts(E, p: PotentialParams, C: float, qn: QuantumNumbers, kind: str):
    """Vectorized pieces of the residual: (lhs, Q, D) as arrays over E."""
    E = np.asarray(E, dtype=float)
    eta = qn.kappa + p.H
    four_d2 = 4.0 * p.delta ** 2
    if kind == "spin":
        coupling = p.M + E - C
        lhs = p.M ** 2 - E ** 2 - C * (p.M - E)
        alpha2 = (p.V0 + p.v0_prime) * coupling / four_d2
        gamma2 = -p.b_prime * coupling / four_d2
        lam = eta * (eta + 1.0)
    else:
        coupling = p.M - E + C
        lhs = p.M ** 2 - E ** 2 + C * (p.M + E)
        alpha2 = -(p.V0 + p.v0_prime) * coupling / four_d2
        gamma2 = p.b_prime * coupling / four_d2
        lam = eta * (eta - 1.0)
    m = radial_poly_degree(qn, kind)
    D = 0.25 + gamma2 + lam
    sqrtD = np.sqrt(np.where(D >= 0.0, D, np.nan))
    Q = (alpha2 - lam - 0.5 - m * (m + 1.0) - (2.0 * m + 1.0) * sqrtD) \
        / (m + 0.5 + sqrtD)
    return lhs, Q, D


def _residual(E, p, C, qn, kind):
    lhs, Q, D = _parts(E, p, C, qn, kind)
    g = lhs - p.delta ** 2 * Q ** 2
    if np.ndim(E) == 0:
        if not np.isfinite(g):
            raise DomainError(
                f"quantization relation undefined at E={float(E)} "
                f"(discriminant {float(D):.6g} < 0)")
        return float(g)
    return g


def nu_residual_spin(E, p: PotentialParams, C_S: float, qn: QuantumNumbers):
    """Spin-limit quantization residual g(E); zero at the eigenvalues.

    Scalar E raises DomainError where the square-root discriminant is
    negative (no bound-state relation there); array E returns NaN at such
    points so window scans can skip domain holes.
    """
    return _residual(E, p, C_S, qn, "spin")


def nu_residual_pseudo(E, p: PotentialParams, C_PS: float, qn: QuantumNumbers):
    """Pseudospin-limit quantization residual; conventions as nu_residual_spin."""
    return _residual(E, p, C_PS, qn, "pseudospin")


def residual_for(sym: SymmetryLimit):
    """The residual function matching a symmetry limit."""
    return nu_residual_spin if sym.is_spin else nu_residual_pseudo


def classify_root(E: float, p: PotentialParams, sym: SymmetryLimit,
                  qn: QuantumNumbers) -> EnergyRoot:
    """Build an EnergyRoot with freshly computed validity flags."""
    lhs, Q, D = _parts(E, p, sym.constant, qn, sym.kind)
    residual = float(lhs - p.delta ** 2 * Q ** 2) if np.isfinite(Q) else math.nan
    if sym.is_spin:
        coupling = p.M + E - sym.constant
        sign_ok = E > 0.0
    else:
        coupling = p.M - E + sym.constant
        threshold = p.M + sym.constant
        sign_ok = E < 0.0 and abs(E - threshold) > 1e-9
    return EnergyRoot(
        E=float(E),
        symmetry=sym,
        qn=qn,
        residual=residual,
        sqrt_domain_ok=bool(D >= 0.0),
        M_bound_ok=bool(abs(E) < p.M),
        C_bound_ok=bool(coupling > 0.0),
        sign_ok=bool(sign_ok),
        nu_branch=+1 if Q > 0.0 else -1,
    )


def _bisect(f, lo: float, hi: float, f_lo: float, f_hi: float,
            tol: float) -> float:
    """Bisection on a bracketed sign change; unconditionally convergent."""
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_lo < 0.0) == (f_mid < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    return 0.5 * (lo + hi)


def solve_levels(qn: QuantumNumbers, sym: SymmetryLimit, p: PotentialParams,
                 search: Optional[SearchConfig] = None) -> list[EnergyRoot]:
    """All real zeros of the quantization residual in the energy window.

    Scans the window on a uniform grid, skips sub-intervals where the
    residual is undefined (negative discriminant), brackets every sign
    change and refines each bracket by bisection.  Returns roots ordered by
    energy, each with recomputed validity flags; an empty list means no
    bound state in the window.
    """
    cfg = search or SearchConfig()
    pad = p.M + abs(sym.constant) + 1.0
    e_lo = cfg.e_min if cfg.e_min is not None else -pad
    e_hi = cfg.e_max if cfg.e_max is not None else pad
    if e_hi <= e_lo:
        raise DomainError("empty energy window")

    grid = np.arange(e_lo, e_hi + 0.5 * cfg.step, cfg.step)
    g = _residual(grid, p, sym.constant, qn, sym.kind)
    finite = np.isfinite(g)

    def scalar_residual(E):
        return _residual(float(E), p, sym.constant, qn, sym.kind)

    roots: list[float] = []
    sign_change = (finite[:-1] & finite[1:]
                   & (np.sign(g[:-1]) * np.sign(g[1:]) < 0))
    for i in np.nonzero(sign_change)[0]:
        roots.append(_bisect(scalar_residual, float(grid[i]),
                             float(grid[i + 1]), float(g[i]),
                             float(g[i + 1]), cfg.tol))
    exact = np.nonzero(finite & (g == 0.0))[0]
    roots.extend(float(grid[i]) for i in exact)

    roots.sort()
    deduped: list[float] = []
    for r in roots:
        if not deduped or abs(r - deduped[-1]) > 10.0 * cfg.tol:
            deduped.append(r)
    return [classify_root(r, p, sym, qn) for r in deduped]


def select_table_root(roots: list[EnergyRoot]) -> Optional[EnergyRoot]:
    """Tabulation convention: the smallest-|E| root flagged sign_ok."""
    valid = [r for r in roots if r.sign_ok]
    if not valid:
        return None
    return min(valid, key=lambda r: abs(r.E))


def doublet_partner(qn: QuantumNumbers, sym: SymmetryLimit) -> QuantumNumbers:
    """The degeneracy partner of a state in the given symmetry limit.

    Spin limit: (n, kappa) pairs with (n, -kappa-1), same n.  Pseudospin
    limit: (n, kappa<0) pairs with (n-1, 1-kappa) and vice versa.  Raises
    DomainError where no partner exists (spin kappa=-1, pseudospin kappa=1,
    and pseudospin n=0 with kappa<0).
    """
    if sym.is_spin:
        partner_kappa = -qn.kappa - 1
        if partner_kappa == 0:
            raise DomainError(f"{qn.label} has no spin doublet partner")
        return QuantumNumbers(qn.n, partner_kappa)
    if qn.kappa < 0:
        if qn.n == 0:
            raise DomainError(
                f"{qn.label} has no pseudospin partner (n would be negative)")
        return QuantumNumbers(qn.n - 1, 1 - qn.kappa)
    if qn.kappa == 1:
        raise DomainError(f"{qn.label} has no pseudospin doublet partner")
    return QuantumNumbers(qn.n + 1, 1 - qn.kappa)


def sweep_delta(states: list[QuantumNumbers], sym: SymmetryLimit,
                p: PotentialParams, deltas,
                search: Optional[SearchConfig] = None) -> list[dict]:
    """Tabulated energy of each state as the screening parameter varies.

    Returns one dict per delta value with key "delta" plus one key per state
    label holding the selected bound-state energy, or None where the state
    is unbound or the parameter point is out of domain (delta <= 0).
    """
    rows = []
    for d in np.asarray(deltas, dtype=float):
        row: dict = {"delta": float(d)}
        for qn in states:
            if d <= 0.0:
                row[qn.label] = None
                continue
            pd = PotentialParams(V0=p.V0, A=p.A, B=p.B, delta=float(d),
                                 H=p.H, M=p.M)
            root = select_table_root(solve_levels(qn, sym, pd, search))
            row[qn.label] = None if root is None else root.E
        rows.append(row)
    return rows


def scan_v0_c(qn: QuantumNumbers, sym_kind: str, p: PotentialParams,
              v0_values, c_values,
              search: Optional[SearchConfig] = None) -> np.ndarray:
    """Selected energy over a (V0, C) grid with V0 = A = B tied.

    Returns an array of shape (len(c_values), len(v0_values)); entries are
    the selected bound-state energy or NaN where no bound state exists.
    """
    v0_values = np.asarray(v0_values, dtype=float)
    c_values = np.asarray(c_values, dtype=float)
    out = np.full((c_values.size, v0_values.size), np.nan)
    for i, c in enumerate(c_values):
        sym = SymmetryLimit(sym_kind, float(c))
        for k, v0 in enumerate(v0_values):
            pv = PotentialParams(V0=float(v0), A=float(v0), B=float(v0),
                                 delta=p.delta, H=p.H, M=p.M)
            root = select_table_root(solve_levels(qn, sym, pv, search))
            if root is not None:
                out[i, k] = root.E
    return out
