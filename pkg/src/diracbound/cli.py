"""Command-line interface: tables, sweeps, scans, wavefunctions, verify.

The ``spectra`` entry point reproduces every numeric artifact of the solver
as CSV or JSON files and exposes a self-verification suite.  Exit codes:
0 success, 1 usage or configuration error, 2 solver failure (missing root
or non-convergence), 3 verification failure.
"""

from __future__ import annotations

import argparse
import configparser
import io
import json
import math
import os
import sys
from dataclasses import dataclass, fields, replace

import numpy as np

from .errors import (DomainError, NoEigenvalueError, NotConvergedError,
                     PoleError)
from .limits import (NonRelParams, coulomb_energy, hulthen_residual,
                     kratzer_fues_residual, nonrel_energy_coulomb,
                     nonrel_energy_hulthen)
from .oracle import OracleConfig, dirac_eigenvalue, schrodinger_eigenvalue
from .potentials import PotentialParams, SymmetryLimit
from .spectra import (QuantumNumbers, doublet_partner, nu_residual_pseudo,
                      nu_residual_spin, select_table_root, solve_levels,
                      sweep_delta)
from .susyqm import susy_residual_pseudo, susy_residual_spin
from .wavefunctions import solve_wavefunction

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SOLVER = 2
EXIT_VERIFY = 3

PRESET_NAME = "paper-benchmark"

_TABLE_H_PAIR_DEFAULT = 5.0


# ---------------------------------------------------------------------------
# Run configuration
# ---------------------------------------------------------------------------

@dataclass
class RunConfig:
    """Every knob of a CLI run; serializes to flat INI-style text."""

    V0: float = 2.0
    A: float = 1.0
    B: float = 1.0
    delta: float = 0.05
    M: float = 4.76
    H: float = 0.0
    symmetry: str = "spin"
    C: float = 0.0
    states: str = "default"
    delta_start: float = 0.0
    delta_stop: float = 0.30
    delta_step: float = 0.01
    v0_start: float = 0.0
    v0_stop: float = 20.0
    v0_step: float = 0.5
    c_start: float = -20.0
    c_stop: float = 20.0
    c_step: float = 0.5
    out: str = "."
    format: str = "csv"
    oracle: str = "on"

    _SECTIONS = (
        ("potential", ("V0", "A", "B", "delta", "M", "H")),
        ("symmetry", ("symmetry", "C")),
        ("states", ("states",)),
        ("sweep", ("delta_start", "delta_stop", "delta_step")),
        ("scan", ("v0_start", "v0_stop", "v0_step",
                  "c_start", "c_stop", "c_step")),
        ("output", ("out", "format", "oracle")),
    )

    def to_ini(self) -> str:
        parser = configparser.ConfigParser()
        parser.optionxform = str
        for section, keys in self._SECTIONS:
            parser[section] = {}
            for key in keys:
                value = getattr(self, key)
                parser[section][key] = (repr(value)
                                        if isinstance(value, float)
                                        else str(value))
        buf = io.StringIO()
        parser.write(buf)
        return buf.getvalue()

    @classmethod
    def from_ini(cls, text: str) -> "RunConfig":
        parser = configparser.ConfigParser()
        parser.optionxform = str
        try:
            parser.read_string(text)
        except configparser.Error as exc:
            raise DomainError(f"bad config file: {exc}") from exc
        float_fields = {f.name for f in fields(cls)
                        if f.type in ("float", float)}
        known = {key: section for section, keys in cls._SECTIONS
                 for key in keys}
        values: dict = {}
        for section in parser.sections():
            for key, raw in parser[section].items():
                if key not in known:
                    raise DomainError(f"unknown config key {key!r}")
                if key in float_fields:
                    try:
                        values[key] = float(raw)
                    except ValueError as exc:
                        raise DomainError(
                            f"config key {key!r}: not a number: {raw!r}"
                        ) from exc
                else:
                    values[key] = raw
        return cls(**values)

    def validate(self) -> None:
        if self.symmetry not in ("spin", "pseudospin"):
            raise DomainError(
                f"symmetry must be spin or pseudospin, got {self.symmetry!r}")
        if self.format not in ("csv", "json"):
            raise DomainError(f"format must be csv or json, got {self.format!r}")
        if self.oracle not in ("on", "off"):
            raise DomainError(f"oracle must be on or off, got {self.oracle!r}")
        for name in ("V0", "A", "B", "delta", "M", "H", "C"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if self.delta <= 0:
            raise DomainError(f"delta must be positive, got {self.delta}")
        if self.M <= 0:
            raise DomainError(f"M must be positive, got {self.M}")
        for name in ("delta_step", "v0_step", "c_step"):
            if getattr(self, name) <= 0:
                raise DomainError(f"{name} must be positive")

    def potential(self, H: float | None = None) -> PotentialParams:
        return PotentialParams(V0=self.V0, A=self.A, B=self.B,
                               delta=self.delta,
                               H=self.H if H is None else H, M=self.M)

    def symmetry_limit(self) -> SymmetryLimit:
        return SymmetryLimit(self.symmetry, self.C)


def apply_preset(cfg: RunConfig, name: str) -> RunConfig:
    """The named benchmark parameter set; C is signed by the symmetry kind."""
    if name != PRESET_NAME:
        raise DomainError(f"unknown preset {name!r}")
    return replace(
        cfg, V0=2.0, A=1.0, B=1.0, delta=0.05, M=4.76, H=5.0,
        C=5.0 if cfg.symmetry == "spin" else -5.0,
        delta_start=0.0, delta_stop=0.30, delta_step=0.01,
        v0_start=0.0, v0_stop=20.0, v0_step=0.5,
        c_start=-20.0, c_stop=20.0, c_step=0.5,
    )


# ---------------------------------------------------------------------------
# Default state sets per command
# ---------------------------------------------------------------------------

def default_table_states(kind: str) -> list[QuantumNumbers]:
    """The 32 tabulated states: four orbital blocks, four radial levels."""
    states = []
    if kind == "spin":
        for l in (1, 2, 3, 4):
            for n in range(4):
                states.append(QuantumNumbers(n, -(l + 1)))
                states.append(QuantumNumbers(n, l))
    else:
        for lt in (1, 2, 3, 4):
            for i in range(4):
                states.append(QuantumNumbers(i + 1, -lt))
                states.append(QuantumNumbers(i, lt + 1))
    return states


def default_sweep_states(kind: str) -> list[QuantumNumbers]:
    kappas = (1, 2, 3, 4) if kind == "spin" else (2, 3, 4, 5)
    return [QuantumNumbers(n, k) for n in (0, 1) for k in kappas]


def default_scan_states(kind: str) -> list[QuantumNumbers]:
    if kind == "spin":
        return [QuantumNumbers(0, -2), QuantumNumbers(0, 1)]
    return [QuantumNumbers(0, -1), QuantumNumbers(0, 2)]


def default_wavefunction_states(kind: str) -> list[QuantumNumbers]:
    kappa = 1 if kind == "spin" else 2
    return [QuantumNumbers(n, kappa) for n in (0, 1, 2)]


def parse_states(spec: str, kind: str, command: str) -> list[QuantumNumbers]:
    """Parse the states config value: 'default', 'none', or 'n,kappa;...'."""
    spec = spec.strip()
    if spec == "default":
        chooser = {
            "table": default_table_states,
            "sweep": default_sweep_states,
            "scan": default_scan_states,
            "wavefunction": default_wavefunction_states,
        }.get(command)
        return chooser(kind) if chooser else []
    if spec in ("", "none"):
        return []
    states = []
    for item in spec.split(";"):
        item = item.strip()
        if not item:
            continue
        parts = item.split(",")
        if len(parts) != 2:
            raise DomainError(
                f"bad state {item!r}: expected 'n,kappa' pairs separated "
                f"by ';'")
        try:
            n, kappa = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise DomainError(f"bad state {item!r}: {exc}") from exc
        states.append(QuantumNumbers(n, kappa))
    return states


# ---------------------------------------------------------------------------
# Output writers
# ---------------------------------------------------------------------------

def format_cell(cell) -> str:
    if cell is None:
        return "NA"
    if isinstance(cell, str):
        return cell
    if isinstance(cell, (int, np.integer)):
        return str(int(cell))
    value = float(cell)
    if math.isnan(value):
        return "NA"
    text = f"{value:.8f}"
    if text == "-0.00000000":
        return "0.00000000"
    return text


def _csv_quote(text: str) -> str:
    if any(ch in text for ch in ',"\r\n'):
        return '"' + text.replace('"', '""') + '"'
    return text


def write_csv(path: str, header: list[str], rows: list[list]) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(",".join(_csv_quote(h) for h in header) + "\r\n")
        for row in rows:
            fh.write(",".join(_csv_quote(format_cell(c)) for c in row)
                     + "\r\n")


def _json_cell(cell):
    if cell is None:
        return None
    if isinstance(cell, str):
        return cell
    if isinstance(cell, (int, np.integer)):
        return int(cell)
    value = float(cell)
    if math.isnan(value):
        return None
    return float(format_cell(value))


def write_json(path: str, header: list[str], rows: list[list],
               units: dict) -> None:
    payload = {
        "header": header,
        "units": units,
        "rows": [[_json_cell(c) for c in row] for row in rows],
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
        fh.write("\n")


def write_rows(cfg: RunConfig, stem: str, header: list[str],
               rows: list[list], units: dict) -> str:
    os.makedirs(cfg.out, exist_ok=True)
    path = os.path.join(cfg.out, f"{stem}.{cfg.format}")
    if cfg.format == "csv":
        write_csv(path, header, rows)
    else:
        write_json(path, header, rows, units)
    return path


def _safe_label(qn: QuantumNumbers) -> str:
    return qn.label.replace("/", "-")


def _grid(start: float, stop: float, step: float) -> list[float]:
    count = int(round((stop - start) / step))
    return [round(start + i * step, 10) for i in range(count + 1)]


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_table(cfg: RunConfig) -> int:
    """Benchmark-layout energy table: E without and with the tensor term."""
    states = parse_states(cfg.states, cfg.symmetry, "table")
    sym = cfg.symmetry_limit()
    h_pair = (0.0, cfg.H if cfg.H != 0.0 else _TABLE_H_PAIR_DEFAULT)
    l_col = "l" if sym.is_spin else "l_tilde"
    header = [l_col, "n", "kappa", "label",
              f"E_H{h_pair[0]:g}", f"E_H{h_pair[1]:g}"]
    rows = []
    for qn in states:
        energies = []
        for h in h_pair:
            root = select_table_root(
                solve_levels(qn, sym, cfg.potential(H=h)))
            if root is None:
                print(f"error: no bound state for {qn.label} in the "
                      f"{sym.kind} limit at H={h:g}", file=sys.stderr)
                return EXIT_SOLVER
            energies.append(root.E)
        l_value = qn.l if sym.is_spin else qn.l_tilde
        rows.append([l_value, qn.n, qn.kappa, qn.label,
                     energies[0], energies[1]])
    path = write_rows(cfg, f"table_{cfg.symmetry}", header, rows,
                      units={f"E_H{h_pair[0]:g}": "fm^-1",
                             f"E_H{h_pair[1]:g}": "fm^-1"})
    print(f"wrote {path} ({len(rows)} states)")
    return EXIT_OK


def cmd_sweep(cfg: RunConfig) -> int:
    """Energy of each state as the screening parameter delta varies."""
    states = parse_states(cfg.states, cfg.symmetry, "sweep")
    sym = cfg.symmetry_limit()
    deltas = _grid(cfg.delta_start, cfg.delta_stop, cfg.delta_step)
    rows_raw = sweep_delta(states, sym, cfg.potential(), deltas)
    header = ["delta"] + [qn.label for qn in states]
    rows = [[row["delta"]] + [row[qn.label] for qn in states]
            for row in rows_raw]
    units = {"delta": "fm^-1"}
    units.update({qn.label: "fm^-1" for qn in states})
    path = write_rows(cfg, f"sweep_{cfg.symmetry}", header, rows, units)
    print(f"wrote {path} ({len(rows)} delta values x {len(states)} states)")
    return EXIT_OK


def cmd_scan(cfg: RunConfig) -> int:
    """Bound-or-not energy matrix over the (V0, C) plane, V0 = A = B tied."""
    states = parse_states(cfg.states, cfg.symmetry, "scan")
    v0_values = _grid(cfg.v0_start, cfg.v0_stop, cfg.v0_step)
    c_values = _grid(cfg.c_start, cfg.c_stop, cfg.c_step)
    header = ["C"] + [f"{v0:.8f}" for v0 in v0_values]
    paths = []
    for qn in states:
        rows = []
        for c in c_values:
            sym = SymmetryLimit(cfg.symmetry, c)
            row: list = [c]
            for v0 in v0_values:
                if v0 == 0.0:
                    row.append(None)
                    continue
                p = PotentialParams(V0=v0, A=v0, B=v0, delta=cfg.delta,
                                    H=cfg.H, M=cfg.M)
                root = select_table_root(solve_levels(qn, sym, p))
                row.append(None if root is None else root.E)
            rows.append(row)
        units = {"C": "fm^-1", "cells": "fm^-1 (columns are V0 in fm^-1)"}
        path = write_rows(cfg, f"scan_{cfg.symmetry}_{_safe_label(qn)}",
                          header, rows, units)
        paths.append(path)
        print(f"wrote {path} ({len(c_values)} x {len(v0_values)} grid)")
    return EXIT_OK


def cmd_wavefunction(cfg: RunConfig) -> int:
    """Normalized spinor components (r, F, G) sampled per state."""
    states = parse_states(cfg.states, cfg.symmetry, "wavefunction")
    sym = cfg.symmetry_limit()
    p = cfg.potential()
    header = ["r", "F", "G"]
    units = {"r": "fm", "F": "fm^-1/2", "G": "fm^-1/2"}
    for qn in states:
        try:
            solution = solve_wavefunction(qn, sym, p)
        except NoEigenvalueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_SOLVER
        rows = [list(sample) for sample in solution.samples]
        path = write_rows(cfg, f"wavefunction_{cfg.symmetry}"
                          f"_{_safe_label(qn)}", header, rows, units)
        print(f"wrote {path} (E = {solution.E:.8f}, "
              f"{len(rows)} grid points)")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Verification suite
# ---------------------------------------------------------------------------

def _verify_equivalence(cfg: RunConfig) -> tuple[str, str]:
    """Quantization residual from the two derivation routes must agree."""
    rng = np.random.default_rng(20260817)
    worst = 0.0
    checked = 0
    while checked < 50:
        p = PotentialParams(V0=rng.uniform(0.5, 4.0),
                            A=rng.uniform(0.0, 2.0),
                            B=rng.uniform(0.0, 2.0),
                            delta=rng.uniform(0.01, 0.2),
                            H=rng.uniform(0.0, 6.0),
                            M=rng.uniform(1.0, 8.0))
        C = rng.uniform(-8.0, 8.0)
        qn = QuantumNumbers(int(rng.integers(0, 5)),
                            int(rng.choice([-4, -3, -2, -1, 1, 2, 3])))
        E = rng.uniform(-0.95, 0.95) * p.M
        try:
            nu_s = nu_residual_spin(E, p, C, qn)
            susy_s = susy_residual_spin(E, p, C, qn)
            nu_p = nu_residual_pseudo(E, p, C, qn)
            susy_p = susy_residual_pseudo(E, p, C, qn)
        except DomainError:
            continue
        worst = max(worst,
                    abs(nu_s - susy_s) / (1.0 + abs(nu_s)),
                    abs(nu_p - susy_p) / (1.0 + abs(nu_p)))
        checked += 1
    status = "PASS" if worst <= 1e-9 else "FAIL"
    return status, f"max relative gap {worst:.2e} over {checked} draws"


def _verify_degeneracy(cfg: RunConfig) -> tuple[str, str]:
    """H=0 doublet partners coincide; the tensor term must split them."""
    worst_h0 = 0.0
    min_split = math.inf
    pairs = (("spin", 5.0, QuantumNumbers(0, -2)),
             ("spin", 5.0, QuantumNumbers(1, -3)),
             ("pseudospin", -5.0, QuantumNumbers(1, -1)),
             ("pseudospin", -5.0, QuantumNumbers(2, -2)))
    for kind, c, qn in pairs:
        sym = SymmetryLimit(kind, c)
        partner = doublet_partner(qn, sym)
        for h, collect_split in ((0.0, False), (5.0, True)):
            p = PotentialParams(V0=cfg.V0, A=cfg.A, B=cfg.B,
                                delta=cfg.delta, H=h, M=cfg.M)
            e1 = select_table_root(solve_levels(qn, sym, p))
            e2 = select_table_root(solve_levels(partner, sym, p))
            if e1 is None or e2 is None:
                return "FAIL", f"missing root for {qn.label} pair at H={h:g}"
            gap = abs(e1.E - e2.E)
            if collect_split:
                min_split = min(min_split, gap)
            else:
                worst_h0 = max(worst_h0, gap)
    ok = worst_h0 <= 1e-10 and min_split > 1e-3
    return ("PASS" if ok else "FAIL",
            f"H=0 max gap {worst_h0:.2e}, H=5 min split {min_split:.2e}")


def _roots_of(f, e_lo: float, e_hi: float, step: float = 1e-3,
              tol: float = 1e-12) -> list[float]:
    """Scan-and-bisect root finder for an arbitrary scalar residual."""
    grid = np.arange(e_lo, e_hi, step)
    values = np.full(grid.shape, np.nan)
    for i, e in enumerate(grid):
        try:
            values[i] = f(float(e))
        except (DomainError, ZeroDivisionError):
            pass
    roots = []
    for i in range(len(grid) - 1):
        a, b = values[i], values[i + 1]
        if not (np.isfinite(a) and np.isfinite(b) and a * b < 0):
            continue
        lo, hi, f_lo = float(grid[i]), float(grid[i + 1]), float(a)
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            f_mid = f(mid)
            if f_mid == 0.0:
                lo = hi = mid
                break
            if (f_lo < 0.0) == (f_mid < 0.0):
                lo, f_lo = mid, f_mid
            else:
                hi = mid
        roots.append(0.5 * (lo + hi))
    return roots


def _verify_dual_path(cfg: RunConfig) -> tuple[str, str]:
    """Specialized closed forms against the general solver."""
    problems = []
    # Pure Hulthen, spin limit, branch eta + 1/2 > 0.
    p = PotentialParams(V0=2.0, A=0.0, B=0.0, delta=0.05, H=0.0, M=4.76)
    sym = SymmetryLimit.spin(5.0)
    qn = QuantumNumbers(0, 1)
    general = sorted(r.E for r in solve_levels(qn, sym, p))
    special = _roots_of(lambda e: hulthen_residual(e, p, sym, qn),
                        -p.M - 6.0, p.M + 6.0)
    if (len(general) != len(special)
            or any(abs(a - b) > 1e-10 for a, b in zip(general, special))):
        problems.append("hulthen root mismatch")
    # Coulomb closed form vs Kratzer-Fues at B=0.
    e_coul = coulomb_energy("spin", qn, 1.3, 4.0, 4.76, 0.0)
    if abs(kratzer_fues_residual(e_coul, "spin", qn, 1.3, 0.0, 4.0,
                                 4.76, 0.0)) > 1e-10:
        problems.append("coulomb/kratzer-fues mismatch")
    # Nonrelativistic hydrogen ground state.
    nrp = NonRelParams(m=1.0, l=0, Ze2=1.0, A=0.0, B=0.0, delta=1e-6)
    if abs(nonrel_energy_coulomb(nrp, 0) + 0.5) > 1e-12:
        problems.append("hydrogen closed form mismatch")
    if problems:
        return "FAIL", "; ".join(problems)
    return "PASS", "hulthen roots, coulomb reduction, hydrogen all agree"


def _verify_oracle(cfg: RunConfig) -> tuple[str, str]:
    """Independent shooting solver health on known eigenvalues."""
    if cfg.oracle == "off":
        return "SKIPPED", "oracle disabled (--oracle off)"
    # Hydrogen 1s in the inner solver.
    ocfg = OracleConfig(r_max=60.0, num_points=12000)

    def hydrogen(r):
        return -2.0 / r

    eps, nodes = schrodinger_eigenvalue(hydrogen, 0, ocfg)
    if abs(eps + 1.0) > 1e-4 or nodes != 0:
        return "FAIL", f"hydrogen 1s: eps={eps:.6f}, nodes={nodes}"
    # Nonrelativistic screened potential against the closed form.
    m_mass, v0, delta = 1.0, 0.1, 0.05

    def hulthen_u(r):
        s = np.exp(-2.0 * delta * r)
        return -2.0 * m_mass * v0 * s / (1.0 - s)

    target = 2.0 * m_mass * nonrel_energy_hulthen(
        NonRelParams(m=m_mass, l=0, Ze2=v0 / (2.0 * delta), A=0.0, B=0.0,
                     delta=delta), 0)
    eps, nodes = schrodinger_eigenvalue(hulthen_u, 0, ocfg)
    if abs(eps - target) > 1e-4:
        return "FAIL", (f"screened s-wave: eps={eps:.8f} vs closed "
                        f"{target:.8f}")
    # One relativistic spin-limit state against the analytic root.
    p = PotentialParams(V0=2.0, A=1.0, B=1.0, delta=0.05, H=0.0, M=4.76)
    sym = SymmetryLimit.spin(5.0)
    qn = QuantumNumbers(0, -2)
    roots = [r for r in solve_levels(qn, sym, p)
             if r.nu_branch > 0 and r.sqrt_domain_ok and r.C_bound_ok
             and abs(r.E) < p.M]
    if not roots:
        return "FAIL", "no analytic bound root for the spot state"
    analytic = roots[0].E
    result = dirac_eigenvalue(qn, sym, p)
    if not result.converged or abs(result.E - analytic) > 1e-4:
        return "FAIL", (f"dirac spot check: oracle {result.E:.8f} vs "
                        f"analytic {analytic:.8f}")
    return "PASS", (f"hydrogen, screened s-wave, dirac spot state all "
                    f"within 1e-4 (spot gap "
                    f"{abs(result.E - analytic):.1e})")


def _verify_normalization(cfg: RunConfig) -> tuple[str, str]:
    """Solved components integrate to unit norm on the sampling grid."""
    p = PotentialParams(V0=2.0, A=1.0, B=1.0, delta=0.05, H=5.0, M=4.76)
    worst = 0.0
    for kind, c, qn in (("spin", 5.0, QuantumNumbers(0, 1)),
                        ("pseudospin", -5.0, QuantumNumbers(0, 2))):
        sym = SymmetryLimit(kind, c)
        try:
            solution = solve_wavefunction(qn, sym, p)
        except NoEigenvalueError as exc:
            return "FAIL", str(exc)
        r = solution.samples[:, 0]
        solved = solution.samples[:, 1 if kind == "spin" else 2]
        norm = np.trapezoid(solved ** 2, r)
        worst = max(worst, abs(norm - 1.0))
    status = "PASS" if worst <= 1e-4 else "FAIL"
    return status, f"max |norm - 1| = {worst:.2e} (trapezoid quadrature)"


def cmd_verify(cfg: RunConfig) -> int:
    """Run the self-check suites; exit 0 only when none fails."""
    suites = (
        ("quantization-equivalence", _verify_equivalence),
        ("degeneracy", _verify_degeneracy),
        ("dual-path", _verify_dual_path),
        ("oracle-health", _verify_oracle),
        ("normalization", _verify_normalization),
    )
    failed = False
    for name, runner in suites:
        try:
            status, detail = runner(cfg)
        except (DomainError, NoEigenvalueError, NotConvergedError,
                PoleError) as exc:
            status, detail = "FAIL", f"{type(exc).__name__}: {exc}"
        print(f"{name}: {status} ({detail})")
        failed = failed or status == "FAIL"
    print(f"verify: {'FAIL' if failed else 'PASS'}")
    return EXIT_VERIFY if failed else EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing and dispatch
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    """argparse variant whose usage failures exit with code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


_EPILOG = """\
configuration precedence (lowest to highest):
  built-in defaults < --config FILE < --preset < explicit flags

config file format: INI sections [potential] V0 A B delta M H,
[symmetry] symmetry C, [states] states, [sweep] delta_start delta_stop
delta_step, [scan] v0_start v0_stop v0_step c_start c_stop c_step,
[output] out format oracle.  --save-config writes the effective
configuration of the run in that format.

states syntax: 'default' (per-command set), 'none', or 'n,kappa;n,kappa;...'
"""


def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--preset", choices=[PRESET_NAME],
                        help="named benchmark parameter set")
    common.add_argument("--config", metavar="FILE",
                        help="INI config file to load")
    common.add_argument("--save-config", metavar="FILE",
                        help="write the effective run configuration")
    common.add_argument("--out", help="output directory (default: .)")
    common.add_argument("--format", choices=["csv", "json"],
                        help="output file format (default: csv)")
    common.add_argument("--oracle", choices=["on", "off"],
                        help="enable the shooting-method cross-check")
    common.add_argument("--symmetry", choices=["spin", "pseudospin"],
                        help="which symmetry limit (default: spin)")
    common.add_argument("--C", type=float,
                        help="symmetry constant C (fm^-1)")
    common.add_argument("--H", type=float, help="tensor strength")
    common.add_argument("--V0", type=float, help="Hulthen strength (fm^-1)")
    common.add_argument("--A", type=float, help="Yukawa strength (fm^-1)")
    common.add_argument("--B", type=float,
                        help="inversely quadratic strength")
    common.add_argument("--delta", type=float,
                        help="screening parameter (fm^-1)")
    common.add_argument("--M", type=float, help="mass (fm^-1)")
    common.add_argument("--states",
                        help="state list: 'default', 'none' or "
                             "'n,kappa;n,kappa;...'")

    parser = _Parser(
        prog="spectra",
        description="Relativistic bound-state spectra and wavefunctions "
                    "for a screened Coulomb potential family with tensor "
                    "coupling.",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="command")
    sub.add_parser("table", parents=[common],
                   help="energy table without and with the tensor term")
    sweep = sub.add_parser("sweep", parents=[common],
                           help="energies versus the screening parameter")
    sweep.add_argument("--delta-start", type=float, dest="delta_start")
    sweep.add_argument("--delta-stop", type=float, dest="delta_stop")
    sweep.add_argument("--delta-step", type=float, dest="delta_step")
    scan = sub.add_parser("scan", parents=[common],
                          help="bound-state map over the (V0, C) plane")
    scan.add_argument("--v0-start", type=float, dest="v0_start")
    scan.add_argument("--v0-stop", type=float, dest="v0_stop")
    scan.add_argument("--v0-step", type=float, dest="v0_step")
    scan.add_argument("--c-start", type=float, dest="c_start")
    scan.add_argument("--c-stop", type=float, dest="c_stop")
    scan.add_argument("--c-step", type=float, dest="c_step")
    sub.add_parser("wavefunction", parents=[common],
                   help="normalized spinor components per state")
    sub.add_parser("verify", parents=[common],
                   help="run the self-verification suites")
    return parser


_FLAG_FIELDS = ("out", "format", "oracle", "symmetry", "C", "H", "V0", "A",
                "B", "delta", "M", "states", "delta_start", "delta_stop",
                "delta_step", "v0_start", "v0_stop", "v0_step", "c_start",
                "c_stop", "c_step")


def build_config(args: argparse.Namespace) -> RunConfig:
    """Assemble the effective RunConfig from defaults, file, preset, flags."""
    cfg = RunConfig()
    if args.config is not None:
        try:
            with open(args.config) as fh:
                text = fh.read()
        except OSError as exc:
            raise DomainError(f"cannot read config file: {exc}") from exc
        cfg = RunConfig.from_ini(text)
    if getattr(args, "symmetry", None) is not None:
        cfg.symmetry = args.symmetry
    if args.preset is not None:
        cfg = apply_preset(cfg, args.preset)
    for name in _FLAG_FIELDS:
        value = getattr(args, name, None)
        if value is not None:
            setattr(cfg, name, value)
    cfg.validate()
    parse_states(cfg.states, cfg.symmetry, args.command)
    return cfg


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_config(args)
    except DomainError as exc:
        print(f"spectra: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.save_config:
        with open(args.save_config, "w") as fh:
            fh.write(cfg.to_ini())
        print(f"wrote {args.save_config}")
    dispatch = {
        "table": cmd_table,
        "sweep": cmd_sweep,
        "scan": cmd_scan,
        "wavefunction": cmd_wavefunction,
        "verify": cmd_verify,
    }
    try:
        return dispatch[args.command](cfg)
    except (DomainError, NoEigenvalueError, NotConvergedError,
            PoleError) as exc:
        print(f"spectra: solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
