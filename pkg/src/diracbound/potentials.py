"""Potential evaluators for the combined screened Coulomb interaction.

The model interaction is a Hulthen term plus a Yukawa term plus an inversely
quadratic Yukawa term, with a Coulomb-like tensor coupling of strength H that
enters the radial problem only through the shifted spin-orbit parameter
eta = kappa + H.  All radial quantities use fm and fm^-1 units.

Two forms of the potential are provided: the exact sum of the three terms,
and the approximated form obtained by replacing 1/r and 1/r^2 with their
screened counterparts, which is the form the closed-form spectrum is built
on.  Both are needed: the gap between them is itself a quantity of interest,
and the numerical oracle can solve either form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "PotentialParams",
    "SymmetryLimit",
    "benchmark_params",
    "BENCHMARK_C_SPIN",
    "BENCHMARK_C_PSEUDO",
    "exact_potential",
    "approx_potential",
    "centrifugal_approx",
    "centrifugal_exact",
    "spin_orbit_strength",
    "effective_potential",
    "target_eigenvalue",
]


@dataclass(frozen=True)
class PotentialParams:
    """Physical inputs of the interaction.

    Attributes:
        V0: Hulthen strength (fm^-1), used as-is in the approximated form.
        A: Yukawa strength (fm^-1 convention of the -A e^{-delta r}/r term).
        B: inversely quadratic Yukawa strength (-B e^{-2 delta r}/r^2 term).
        delta: screening parameter (fm^-1), must be positive.
        H: tensor coupling strength (dimensionless), shifts kappa to kappa+H.
        M: fermion mass (fm^-1), must be positive.
    """

    V0: float
    A: float
    B: float
    delta: float
    H: float
    M: float

    def __post_init__(self):
        for name in ("V0", "A", "B", "delta", "H", "M"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise DomainError(f"{name} must be finite, got {value!r}")
        if self.delta <= 0:
            raise DomainError(f"delta must be positive, got {self.delta}")
        if self.M <= 0:
            raise DomainError(f"M must be positive, got {self.M}")

    @property
    def v0_prime(self) -> float:
        """Effective addition to the Hulthen strength, 2*A*delta."""
        return 2.0 * self.A * self.delta

    @property
    def b_prime(self) -> float:
        """Effective strength of the squared screening term, 4*B*delta^2."""
        return 4.0 * self.B * self.delta ** 2


@dataclass(frozen=True)
class SymmetryLimit:
    """Which reduction of the coupled radial system is in force.

    kind is "spin" (difference potential constant, Delta = C) or
    "pseudospin" (sum potential constant, Sigma = C).  `constant` is that
    constant in fm^-1.
    """

    kind: str
    constant: float

    def __post_init__(self):
        if self.kind not in ("spin", "pseudospin"):
            raise DomainError(
                f"kind must be 'spin' or 'pseudospin', got {self.kind!r}")
        if not math.isfinite(self.constant):
            raise DomainError("symmetry constant must be finite")

    @property
    def is_spin(self) -> bool:
        return self.kind == "spin"

    @classmethod
    def spin(cls, constant: float) -> "SymmetryLimit":
        return cls("spin", constant)

    @classmethod
    def pseudospin(cls, constant: float) -> "SymmetryLimit":
        return cls("pseudospin", constant)


BENCHMARK_C_SPIN = 5.0
BENCHMARK_C_PSEUDO = -5.0


def benchmark_params(H: float = 0.0) -> PotentialParams:
    """Reference benchmark parameter set (V0=2, A=B=1, delta=0.05, M=4.76)."""
    return PotentialParams(V0=2.0, A=1.0, B=1.0, delta=0.05, H=H, M=4.76)


def _check_r(r):
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0.0):
        raise DomainError("r must be positive")
    return r


def _maybe_scalar(values, r):
    if np.isscalar(r) or np.ndim(r) == 0:
        return float(values)
    return values


def exact_potential(r, p: PotentialParams):
    """Exact combined potential at radius r (fm^-1).

    Sum of the Hulthen term (screening rate 2*delta), the Yukawa term and
    the inversely quadratic Yukawa term:

        V(r) = -V0 s/(1-s) - A e^{-delta r}/r - B e^{-2 delta r}/r^2

    with s = e^{-2 delta r}.  Accepts scalars or arrays, r > 0.
    """
    rr = _check_r(r)
    s = np.exp(-2.0 * p.delta * rr)
    hulthen = -p.V0 * s / (1.0 - s)
    yukawa = -p.A * np.exp(-p.delta * rr) / rr
    iq_yukawa = -p.B * s / rr ** 2
    return _maybe_scalar(hulthen + yukawa + iq_yukawa, r)


def approx_potential(r, p: PotentialParams):
    """Approximated combined potential at radius r (fm^-1).

    The 1/r and 1/r^2 factors of the Yukawa terms are replaced by their
    screened counterparts, collapsing the interaction to

        V'(r) = -(V0 + 2 A delta) s/(1-s) - 4 B delta^2 s^2/(1-s)^2

    with s = e^{-2 delta r}.  This is the form the closed-form spectrum
    solves exactly.
    """
    rr = _check_r(r)
    s = np.exp(-2.0 * p.delta * rr)
    u = s / (1.0 - s)
    return _maybe_scalar(-(p.V0 + p.v0_prime) * u - p.b_prime * u ** 2, r)


def centrifugal_approx(r, delta: float):
    """Screened stand-in for 1/r^2: 4 delta^2 s/(1-s)^2, s = e^{-2 delta r}."""
    rr = _check_r(r)
    s = np.exp(-2.0 * delta * rr)
    return _maybe_scalar(4.0 * delta ** 2 * s / (1.0 - s) ** 2, r)


def centrifugal_exact(r):
    """The exact centrifugal radial factor 1/r^2."""
    rr = _check_r(r)
    return _maybe_scalar(1.0 / rr ** 2, r)


def spin_orbit_strength(kappa: float, H: float, kind: str) -> float:
    """Strength of the centrifugal-like term in the reduced radial equation.

    With eta = kappa + H this is eta*(eta+1) for the spin reduction (upper
    component) and eta*(eta-1) for the pseudospin reduction (lower
    component).  At H=0 these collapse to l(l+1) and ltilde(ltilde+1).
    """
    eta = kappa + H
    if kind == "spin":
        return eta * (eta + 1.0)
    if kind == "pseudospin":
        return eta * (eta - 1.0)
    raise DomainError(f"kind must be 'spin' or 'pseudospin', got {kind!r}")


def target_eigenvalue(E: float, sym: SymmetryLimit, M: float) -> float:
    """Eigenvalue of the reduced radial operator implied by energy E.

    The second-order radial equation reads u'' = [U_eff(r; E) - eps] u, and
    this returns eps:

        eps = E^2 - M^2 + C_S (M - E)   (spin)
        eps = E^2 - M^2 - C_PS (M + E)  (pseudospin)

    Bound states need eps < 0 (exponential decay at large r).
    """
    if sym.is_spin:
        return E * E - M * M + sym.constant * (M - E)
    return E * E - M * M - sym.constant * (M + E)


def effective_potential(r, E: float, p: PotentialParams, sym: SymmetryLimit,
                        qn, mode: str = "approximated"):
    """Effective potential U_eff(r; E) of the reduced radial equation.

    The eliminated component obeys u'' = [U_eff(r; E) - eps(E)] u with eps
    from target_eigenvalue.  For the spin reduction

        U_eff = eta(eta+1) c(r) + (M + E - C_S) V(r)

    and for the pseudospin reduction

        U_eff = eta(eta-1) c(r) - (M - E + C_PS) V(r)

    where c(r) is the centrifugal factor and V the combined potential, both
    in their approximated or exact form according to `mode`.

    Args:
        r: radius or array of radii (fm), positive.
        E: trial energy (fm^-1).
        p: potential parameters.
        sym: symmetry limit in force.
        qn: quantum numbers (only kappa is used here).
        mode: "approximated" (screened centrifugal + approximated potential)
            or "exact" (1/r^2 centrifugal + exact potential).
    """
    if mode not in ("approximated", "exact"):
        raise DomainError(f"mode must be 'approximated' or 'exact', got {mode!r}")
    lam = spin_orbit_strength(qn.kappa, p.H, sym.kind)
    if mode == "approximated":
        cent = centrifugal_approx(r, p.delta)
        pot = approx_potential(r, p)
    else:
        cent = centrifugal_exact(r)
        pot = exact_potential(r, p)
    if sym.is_spin:
        coupling = p.M + E - sym.constant
        return lam * cent + coupling * pot
    coupling = p.M - E + sym.constant
    return lam * cent - coupling * pot
