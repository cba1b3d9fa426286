"""Batch verification harness and table emitter.

Two subcommands:

* ``verify <suite>`` runs a named check suite over a parameter grid and
  streams one flat record per parameter tuple (JSON lines or CSV), exiting
  0 iff every record passes, 1 on any failure, 2 on usage errors.
* ``table <kind>`` emits deterministic value tables (operator blocks, irrep
  blocks, basis radial values, orthogonality profiles).

Integer grids accept inclusive ranges ``a..b``; real grids accept comma
lists.  The default truncation dimension comes from ``--dim`` or the
``E2FOCK_DIM`` environment variable.  Identical configurations (including
``--seed``) produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys

import numpy as np

from . import identities as ident
from .e2group import GroupElement, IrrepLabel, irrep_element, u_matrix
from .fock import annihilator, safe_block
from .identities import CheckReport
from .repk import (
    algebra_function,
    adjoint_p,
    basis_d,
    eigen_residuals,
    inner_product,
    op_h,
    op_p,
    op_pbar,
)
from .specfun import kummer_phi_seq

SUITE_NAMES = [
    "unitarity",
    "intertwining",
    "recurrence",
    "eigen",
    "lie-algebra",
    "addition",
    "identity-a",
    "identity-b",
    "hille-hardy",
    "orthogonality",
    "classical-limit",
    "kummer-limit",
]
TABLE_KINDS = ["u-matrix", "irrep", "basis", "profile"]

# truncation-defect decay reaches float rounding by dim ~ 64; below this the
# dim-doubling sequence is treated as floored rather than strictly decreasing
_DEFECT_FLOOR = 1e-13

_DEFAULT_ANGLES = {"psi": [0.7], "phi": [0.3]}


class RunConfig:
    """Verification run parameters: dim, tolerance overrides, grids, format, seed."""

    def __init__(self, dim=64, tol_overrides=None, grid=None, format="json", seed=1234, dim_explicit=False):
        if dim < 2:
            raise ValueError("dim must be >= 2")
        if format not in ("json", "csv"):
            raise ValueError("format must be json or csv")
        self.dim = dim
        self.dim_explicit = bool(dim_explicit)
        self.tol_overrides = dict(tol_overrides or {})
        self.grid = {k: list(v) for k, v in (grid or {}).items()}
        self.format = format
        self.seed = int(seed)

    def values(self, name, default):
        return self.grid.get(name, list(default))

    def tol(self, name, default):
        return float(self.tol_overrides.get(name, default))


def _g(cfg, r, psi=None, phi=None):
    psi = cfg.values("psi", _DEFAULT_ANGLES["psi"])[0] if psi is None else psi
    phi = cfg.values("phi", _DEFAULT_ANGLES["phi"])[0] if phi is None else phi
    return GroupElement(r, psi, phi)


def _report(name, equation, params, residual, tol, detail=None):
    return CheckReport.from_residual(name, equation, params, residual, tol, detail)


def _error_report(name, equation, params, tol, exc):
    return CheckReport(name, equation, dict(params), math.inf, tol, False, f"error: {exc}")


def _guard(fn, name, equation, params, tol):
    try:
        return fn()
    except (ValueError, OverflowError) as exc:
        return _error_report(name, equation, params, tol, exc)


def suite_unitarity(cfg):
    tol = cfg.tol("unitarity", 1e-8)
    reports = []
    for r in cfg.values("r", [0.5, 1.0, 1.5, 2.0]):
        for psi in cfg.values("psi", _DEFAULT_ANGLES["psi"]):
            for phi in cfg.values("phi", _DEFAULT_ANGLES["phi"]):
                params = {"dim": cfg.dim, "r": r, "psi": psi, "phi": phi}

                def run(r=r, psi=psi, phi=phi, params=params):
                    U = u_matrix(GroupElement(r, psi, phi), cfg.dim)
                    b = max(safe_block(cfg.dim, r), min(cfg.dim, 4))
                    defect = np.linalg.norm((U.conj().T @ U - np.eye(cfg.dim))[:b, :b])
                    return _report("unitarity", "unitarity", params, defect, tol)

                reports.append(_guard(run, "unitarity", "unitarity", params, tol))

    # fixed-block truncation defect under dim doubling; strictly decreasing
    # until the float floor, non-increasing beyond it
    r = cfg.values("r", [1.5])[-1]
    dims = [32, 64, 128]
    block = safe_block(dims[0], r)
    if block >= 2:
        defects = []
        for dim in dims:
            U = u_matrix(_g(cfg, r), dim)
            defects.append(float(np.linalg.norm((U.conj().T @ U - np.eye(dim))[:block, :block])))
        worst_step = max(d2 - max(d1, _DEFECT_FLOOR) for d1, d2 in zip(defects, defects[1:]))
        reports.append(
            _report(
                "unitarity-monotone",
                "unitarity",
                {"r": r, "dims": "32..128", "block": block},
                worst_step,
                cfg.tol("unitarity-monotone", 0.0),
                detail="defects " + ", ".join(repr(d) for d in defects) + f" (floor {_DEFECT_FLOOR})",
            )
        )
    return reports


def suite_intertwining(cfg):
    tol = cfg.tol("intertwining", 1e-8)
    reports = []
    for r in cfg.values("r", [0.5, 1.0, 1.5, 2.0]):
        for psi in cfg.values("psi", _DEFAULT_ANGLES["psi"]):
            for phi in cfg.values("phi", _DEFAULT_ANGLES["phi"]):
                params = {"dim": cfg.dim, "r": r, "psi": psi, "phi": phi}

                def run(r=r, psi=psi, phi=phi, params=params):
                    g = GroupElement(r, psi, phi)
                    U = u_matrix(g, cfg.dim)
                    a = annihilator(cfg.dim)
                    target = np.exp(1j * g.phi) * a + g.w * np.eye(cfg.dim)
                    b = max(safe_block(cfg.dim, r), min(cfg.dim, 4))
                    resid = np.max(np.abs((U @ a @ U.conj().T - target)[:b, :b]))
                    return _report("intertwining", "intertwining", params, resid, tol)

                reports.append(_guard(run, "intertwining", "intertwining", params, tol))
    return reports


def suite_recurrence(cfg):
    tol = cfg.tol("recurrence", 1e-10)
    zmax = int(cfg.values("zmax", [200])[0])
    reports = []
    for k in cfg.values("k", range(0, 21)):
        b = 1 + int(k)
        for c in cfg.values("x", [0.25, 1.0, 4.0, 16.0]):
            params = {"k": int(k), "c": c, "zmax": zmax}

            def run(b=b, c=c, params=params):
                phis = kummer_phi_seq(zmax + 1, b, c)
                worst = 0.0
                for zeta in range(1, zmax + 1):
                    a = -zeta
                    t1 = a * phis[zeta - 1]
                    t2 = (a - b) * phis[zeta + 1]
                    t3 = (b - 2 * a - c) * phis[zeta]
                    scale = max(abs(t1), abs(t2), abs(t3))
                    worst = max(worst, abs(t1 + t2 + t3) / scale)
                return _report("recurrence", "kummer-recurrence", params, worst, tol)

            reports.append(_guard(run, "recurrence", "kummer-recurrence", params, tol))
    return reports


def suite_eigen(cfg):
    tol_c1 = cfg.tol("eigen", 1e-10)
    zmax = int(cfg.values("zmax", [200])[0])
    reports = []
    for lam in cfg.values("lam", [1.0, 4.0, 8.0]):
        for k in cfg.values("k", [-20, -5, 0, 5, 20]):
            params = {"lam": lam, "k": int(k), "zmax": zmax}

            def run(lam=lam, k=int(k), params=params):
                c1, c2 = eigen_residuals(IrrepLabel(lam, k), zmax)
                detail = "p p* = p* p (commuting translations); both orderings evaluated"
                return [
                    _report("eigen-casimir", "eigen-casimir", params, c1, tol_c1, detail),
                    _report("eigen-grading", "eigen-grading", params, c2, cfg.tol("eigen-grading", 0.0)),
                ]

            got = _guard(run, "eigen-casimir", "eigen-casimir", params, tol_c1)
            reports.extend(got if isinstance(got, list) else [got])
    return reports


def _random_algebra_function(rng, zmax, windings, integer=False):
    terms = {}
    for w in windings:
        if integer:
            coeffs = rng.integers(-5, 6, size=zmax + 1).astype(complex)
        else:
            coeffs = rng.standard_normal(zmax + 1) + 1j * rng.standard_normal(zmax + 1)
        terms[int(w)] = coeffs
    return algebra_function(terms, zmax)


def suite_lie_algebra(cfg):
    tol_exact = cfg.tol("lie-algebra", 0.0)
    tol_pair = cfg.tol("lie-algebra-adjoint", 1e-10)
    rng = np.random.default_rng(cfg.seed)
    reports = []
    for trial in range(4):
        windings = sorted(rng.choice(np.arange(-6, 7), size=3, replace=False))
        F = _random_algebra_function(rng, 20, windings, integer=True)
        # [h, p] = p and [h, pbar] = -pbar, exact on integer coefficients
        hp = op_h(op_p(F)) + op_p(op_h(F)).scaled(-1.0)
        comm_p = hp + op_p(F).scaled(-1.0)
        hpb = op_h(op_pbar(F)) + op_pbar(op_h(F)).scaled(-1.0)
        comm_pb = hpb + op_pbar(F)
        resid = max(
            max((float(np.max(np.abs(c))) for c in comm_p.terms.values()), default=0.0),
            max((float(np.max(np.abs(c))) for c in comm_pb.terms.values()), default=0.0),
        )
        params = {"trial": trial, "windings": ",".join(str(w) for w in windings), "seed": cfg.seed}
        reports.append(_report("lie-bracket", "lie-brackets", params, resid, tol_exact))
    for trial in range(4):
        F = _random_algebra_function(rng, 20, [-3, 0, 2])
        G = _random_algebra_function(rng, 20, [-4, -1, 1])
        lhs = inner_product(op_p(F), G)
        rhs = inner_product(F, adjoint_p(G))
        h_lhs = inner_product(op_h(F), G)
        h_rhs = inner_product(F, op_h(G))
        scale = max(abs(lhs), abs(rhs), abs(h_lhs), abs(h_rhs), 1e-300)
        resid = max(abs(lhs - rhs), abs(h_lhs - h_rhs)) / scale
        params = {"trial": trial, "zmax": 20, "seed": cfg.seed}
        reports.append(_report("adjoint-pairing", "adjoint-structure", params, resid, tol_pair))
    return reports


def suite_addition(cfg):
    tol = cfg.tol("addition", 1e-7)
    tol_vac = cfg.tol("addition-vacuum", 1e-9)
    dim = cfg.dim if cfg.dim_explicit else max(cfg.dim, 96)
    reports = []
    for lam in cfg.values("lam", [1.0, 2.0]):
        for r in cfg.values("r", [0.5, 1.0, 2.0]):
            if lam * r > 6.0:
                continue
            g = _g(cfg, r)
            for k in cfg.values("k", [-4, -2, 0, 1, 3, 4]):
                params = {"lam": lam, "k": int(k), "r": r, "psi": g.psi, "phi": g.phi, "dim": dim}
                reports.append(
                    _guard(
                        lambda lam=lam, k=int(k), g=g: ident.addition_residual(
                            g, IrrepLabel(lam, k), k, dim=dim, tolerance=tol
                        ),
                        "addition",
                        "addition-theorem",
                        params,
                        tol,
                    )
                )
            for k in cfg.values("k", [0, 2, 4]):
                if k < 0:
                    continue
                params = {"lam": lam, "k": int(k), "r": r, "psi": g.psi, "phi": g.phi, "dim": dim}
                reports.append(
                    _guard(
                        lambda lam=lam, k=int(k), g=g: ident.addition_vacuum_crosscheck(
                            g, IrrepLabel(lam, k), k, dim=dim, tolerance=tol_vac
                        ),
                        "addition-vacuum",
                        "addition-vacuum-element",
                        params,
                        tol_vac,
                    )
                )
    return reports


def suite_identity_a(cfg):
    tol = cfg.tol("identity-a", 1e-10)
    reports = []
    for k in cfg.values("k", range(0, 11)):
        for x in cfg.values("x", [0.25, 0.5, 1.0, 2.0]):
            for r in cfg.values("r", [0.5, 1.0, 2.0]):
                params = {"k": int(k), "x": x, "r": r}
                reports.append(
                    _guard(
                        lambda k=int(k), x=x, r=r: ident.identity_a(k, x, r, tolerance=tol),
                        "identity-a",
                        "sandwich-identity-a",
                        params,
                        tol,
                    )
                )
    return reports


def suite_identity_b(cfg):
    tol = cfg.tol("identity-b", 1e-9)
    reports = []
    for m in cfg.values("m", range(0, 11)):
        for k in cfg.values("k", range(0, 7)):
            for x in cfg.values("x", [0.5, 1.0, 2.0]):
                for r in cfg.values("r", [0.5, 1.0, 1.5]):
                    params = {"m": int(m), "k": int(k), "x": x, "r": r}
                    reports.append(
                        _guard(
                            lambda m=int(m), k=int(k), x=x, r=r: ident.identity_b(m, k, x, r, tolerance=tol),
                            "identity-b",
                            "sandwich-identity-b",
                            params,
                            tol,
                        )
                    )
    return reports


def suite_hille_hardy(cfg):
    tol = cfg.tol("hille-hardy", 1e-8)
    reports = []
    for k in cfg.values("k", range(0, 7)):
        for x in cfg.values("x", [0.5, 2.0, 4.0]):
            for y in cfg.values("y", [0.5, 2.0, 4.0]):
                for zq in cfg.values("zq", [0.5, 0.9]):
                    params = {"k": int(k), "x": x, "y": y, "zq": zq}
                    reports.append(
                        _guard(
                            lambda k=int(k), x=x, y=y, zq=zq: ident.hille_hardy_residual(
                                k, x, y, zq, tolerance=tol
                            ),
                            "hille-hardy",
                            "laguerre-bilinear-sum",
                            params,
                            tol,
                        )
                    )
    return reports


# off-diagonal weight pairs whose first oscillation peak falls well inside the
# zeta <= 100 window (boundedness margins verified >= 3%)
_PROFILE_PAIRS = [(0, 1.0, 3.0), (2, 1.0, 2.5), (3, 2.5, 5.0), (0, 2.0, 4.5)]


def suite_orthogonality(cfg):
    reports = []
    tol_zero = cfg.tol("orthogonality-grading", 0.0)
    # the growth/boundedness checkpoints sit at zeta = 100/400/1000
    zmax = max(int(cfg.values("zmax", [1000])[0]), 1001)
    for k1, k2 in [(-2, 0), (0, 1), (1, 3), (-2, 3)]:
        d1 = basis_d(IrrepLabel(2.0, k1), 60).coefficients
        d2 = basis_d(IrrepLabel(3.0, k2), 60).coefficients
        val = abs(inner_product(d1, d2))
        params = {"k1": k1, "k2": k2, "lam1": 2.0, "lam2": 3.0}
        reports.append(_report("orthogonality-grading", "orthogonality-grading", params, val, tol_zero))
    for lam in cfg.values("lam", [1.0, 2.0, 4.0]):
        for k in cfg.values("k", [0, 1]):
            params = {"k": int(k), "lam1": lam, "lam2": lam, "zmax": zmax}

            def run(lam=lam, k=int(k), params=params):
                curve = ident.orthogonality_profile_curve(k, lam, lam, zmax)
                checkpoints = [curve[100], curve[400], curve[min(zmax, 1000) - 1]]
                worst = max(a - b for a, b in zip(checkpoints, checkpoints[1:]))
                detail = "diagonal profile " + ", ".join(repr(float(c)) for c in checkpoints)
                return _report(
                    "orthogonality-diagonal-growth",
                    "orthogonality-profile",
                    params,
                    worst,
                    cfg.tol("orthogonality-diagonal-growth", 0.0),
                    detail,
                )

            reports.append(_guard(run, "orthogonality-diagonal-growth", "orthogonality-profile", params, 0.0))
    for k, lam1, lam2 in _PROFILE_PAIRS:
        params = {"k": k, "lam1": lam1, "lam2": lam2, "zmax": zmax}

        def run(k=k, lam1=lam1, lam2=lam2, params=params):
            curve = ident.orthogonality_profile_curve(k, lam1, lam2, zmax)
            head = float(np.max(np.abs(curve[:101])))
            tail = float(np.max(np.abs(curve[101:])))
            return _report(
                "orthogonality-offdiagonal-bounded",
                "orthogonality-profile",
                params,
                (tail - head) / head,
                cfg.tol("orthogonality-offdiagonal-bounded", 0.0),
                detail=f"running max to 100: {head!r}; max beyond: {tail!r}",
            )

        reports.append(_guard(run, "orthogonality-offdiagonal-bounded", "orthogonality-profile", params, 0.0))
    return reports


_SIGMA_LADDER = (1e-1, 1e-2, 1e-3, 1e-4)


def suite_classical_limit(cfg):
    tol_err = cfg.tol("classical-limit", 1e-2)
    tol_mono = cfg.tol("classical-limit-monotone", 0.0)
    psi = cfg.values("psi", _DEFAULT_ANGLES["psi"])[0]
    reports = []
    for lam in cfg.values("lam", [1.0, 2.0, 4.0]):
        for k in cfg.values("k", [0, 2, 5, 8]):
            for r in cfg.values("r", [0.8, 1.0, 2.0]):
                sigmas = tuple(cfg.values("sigma", _SIGMA_LADDER))
                params = {"lam": lam, "k": int(k), "r": r, "sigma": sigmas[-1]}

                def run(lam=lam, k=int(k), r=r, sigmas=sigmas, params=params):
                    errs = ident.classical_limit_errors(IrrepLabel(lam, k), r, psi, sigmas)
                    mono = max(b - a for a, b in zip(errs, errs[1:]))
                    detail = "errors " + ", ".join(repr(e) for e in errs)
                    return [
                        _report("classical-limit", "classical-limit", params, errs[-1], tol_err, detail),
                        _report(
                            "classical-limit-monotone",
                            "classical-limit",
                            {**params, "sigmas": "1e-1..1e-4"},
                            mono,
                            tol_mono,
                        ),
                    ]

                got = _guard(run, "classical-limit", "classical-limit", params, tol_err)
                reports.extend(got if isinstance(got, list) else [got])
    return reports


def suite_kummer_limit(cfg):
    tol_err = cfg.tol("kummer-limit", 1e-2)
    tol_mono = cfg.tol("kummer-limit-monotone", 0.0)
    ns = [int(v) for v in cfg.values("n", [100, 1000, 10000])]
    reports = []
    for b in cfg.values("m", [1, 2, 3, 10]):
        for c in cfg.values("x", [0.5, 4.0, 9.0]):
            params = {"b": int(b), "c": c, "n": ns[-1]}

            def run(b=int(b), c=c, params=params):
                resids = [ident.kummer_bessel_limit_residual(n, b, c) for n in ns]
                mono = max(r2 - r1 for r1, r2 in zip(resids, resids[1:]))
                detail = (
                    "evaluated as Phi(-n, b; -c/n); residuals "
                    + ", ".join(repr(r) for r in resids)
                )
                return [
                    _report("kummer-limit", "kummer-bessel-limit", params, resids[-1], tol_err, detail),
                    _report(
                        "kummer-limit-monotone",
                        "kummer-bessel-limit",
                        {**params, "n": "100,1000,10000"},
                        mono,
                        tol_mono,
                    ),
                ]

            got = _guard(run, "kummer-limit", "kummer-bessel-limit", params, tol_err)
            reports.extend(got if isinstance(got, list) else [got])
    return reports


SUITES = {
    "unitarity": suite_unitarity,
    "intertwining": suite_intertwining,
    "recurrence": suite_recurrence,
    "eigen": suite_eigen,
    "lie-algebra": suite_lie_algebra,
    "addition": suite_addition,
    "identity-a": suite_identity_a,
    "identity-b": suite_identity_b,
    "hille-hardy": suite_hille_hardy,
    "orthogonality": suite_orthogonality,
    "classical-limit": suite_classical_limit,
    "kummer-limit": suite_kummer_limit,
}


def run_verify(suite: str, cfg: RunConfig, stream) -> int:
    """Run one suite (or 'all'); stream records; return the exit code."""
    if not 8 <= cfg.dim <= 512:
        raise ValueError("verify requires dim in [8, 512]")
    names = SUITE_NAMES if suite == "all" else [suite]
    reports = []
    for name in names:
        reports.extend(SUITES[name](cfg))
    _emit_reports(reports, cfg.format, stream)
    return 0 if all(r.passed for r in reports) else 1


def _record_dict(r: CheckReport) -> dict:
    # error records carry residual = inf, which is not valid strict JSON
    return {
        "name": r.name,
        "equation": r.equation,
        "params": r.params,
        "residual": r.residual if math.isfinite(r.residual) else None,
        "tolerance": r.tolerance,
        "pass": r.passed,
        "detail": r.detail,
    }


def _params_str(params: dict) -> str:
    return ";".join(f"{k}={v!r}" if isinstance(v, float) else f"{k}={v}" for k, v in params.items())


def _emit_reports(reports, fmt, stream):
    if fmt == "json":
        for r in reports:
            stream.write(json.dumps(_record_dict(r), sort_keys=True, default=repr) + "\n")
    else:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["name", "equation", "params", "residual", "tolerance", "pass", "detail"])
        for r in reports:
            writer.writerow(
                [
                    r.name,
                    r.equation,
                    _params_str(r.params),
                    repr(r.residual),
                    repr(r.tolerance),
                    "true" if r.passed else "false",
                    r.detail or "",
                ]
            )


def _table_rows(kind: str, cfg: RunConfig):
    if kind == "u-matrix":
        r = cfg.values("r", [1.0])[0]
        g = GroupElement(r, cfg.values("psi", [0.0])[0], cfg.values("phi", [0.0])[0])
        dim = cfg.dim
        U = u_matrix(g, dim)
        for m in range(dim):
            for n in range(dim):
                yield {
                    "equation": "u-matrix-element",
                    "r": r,
                    "psi": g.psi,
                    "phi": g.phi,
                    "m": m,
                    "n": n,
                    "re": U[m, n].real,
                    "im": U[m, n].imag,
                }
    elif kind == "irrep":
        lam = cfg.values("lam", [1.0])[0]
        r = cfg.values("r", [1.0])[0]
        g = GroupElement(r, cfg.values("psi", [0.0])[0], cfg.values("phi", [0.0])[0])
        ks = [int(v) for v in cfg.values("k", range(-3, 4))]
        ns = [int(v) for v in cfg.values("n", range(-3, 4))]
        label = IrrepLabel(lam, 0)
        for k in ks:
            for n in ns:
                t = irrep_element(label, k, n, g)
                yield {
                    "equation": "irrep-element",
                    "lam": lam,
                    "r": r,
                    "psi": g.psi,
                    "phi": g.phi,
                    "k": k,
                    "n": n,
                    "re": t.real,
                    "im": t.imag,
                }
    elif kind == "basis":
        lam = cfg.values("lam", [1.0])[0]
        k = int(cfg.values("k", [0])[0])
        zmax = int(cfg.values("zmax", [20])[0])
        radial = basis_d(IrrepLabel(lam, k), zmax).radial
        for zeta, val in enumerate(radial):
            yield {
                "equation": "basis-radial",
                "lam": lam,
                "k": k,
                "zeta": zeta,
                "re": val.real,
                "im": val.imag,
            }
    elif kind == "profile":
        k = int(cfg.values("k", [0])[0])
        lam1 = cfg.values("lam", [2.0])[0]
        lam2 = cfg.values("lam2", [3.0])[0]
        zmaxes = [int(v) for v in cfg.values("zmax", [100, 400, 1000])]
        curve = ident.orthogonality_profile_curve(k, lam1, lam2, max(zmaxes))
        for zm in zmaxes:
            yield {
                "equation": "orthogonality-profile",
                "k": k,
                "lam1": lam1,
                "lam2": lam2,
                "zmax": zm,
                "value": float(curve[zm]),
            }


def run_table(kind: str, cfg: RunConfig, stream) -> int:
    rows = list(_table_rows(kind, cfg))
    if cfg.format == "json":
        for row in rows:
            stream.write(json.dumps(row, sort_keys=True) + "\n")
    else:
        writer = csv.writer(stream, lineterminator="\n")
        header = list(rows[0].keys()) if rows else ["equation"]
        writer.writerow(header)
        for row in rows:
            writer.writerow([repr(v) if isinstance(v, float) else v for v in (row[h] for h in header)])
    return 0


def _parse_value_token(tok: str):
    if ".." in tok:
        lo, hi = tok.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    try:
        return [int(tok)]
    except ValueError:
        return [float(tok)]


def _parse_values(text: str):
    vals = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok:
            vals.extend(_parse_value_token(tok))
    return vals


_PARAM_FLAGS = ["k", "m", "n", "x", "y", "r", "psi", "phi", "lambda", "lambda2", "zmax", "sigma", "zq"]
_FLAG_DEST = {"lambda": "lam", "lambda2": "lam2"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="e2fock",
        description="Verify the E(2)-on-Heisenberg special-function identities and emit value tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--dim", type=int, default=None, help="Fock truncation dimension (default 64 or $E2FOCK_DIM)")
        p.add_argument("--tol", action="append", default=[], metavar="NAME=VAL", help="tolerance override")
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--seed", type=int, default=1234)
        for flag in _PARAM_FLAGS:
            p.add_argument(
                f"--{flag}",
                dest=_FLAG_DEST.get(flag, flag),
                type=str,
                default=None,
                help=f"grid for {flag} (a..b ints or comma list)",
            )

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("suite", choices=SUITE_NAMES + ["all"])
    add_common(pv)

    pt = sub.add_parser("table", help="emit a value table")
    pt.add_argument("kind", choices=TABLE_KINDS)
    add_common(pt)
    return parser


def _config_from_args(args) -> RunConfig:
    dim = args.dim
    dim_explicit = dim is not None
    if dim is None:
        dim = int(os.environ.get("E2FOCK_DIM", "64"))
    tols = {}
    for override in args.tol:
        if "=" not in override:
            raise ValueError(f"bad --tol {override!r}: expected NAME=VAL")
        name, val = override.split("=", 1)
        tols[name.strip()] = float(val)
    grid = {}
    for flag in _PARAM_FLAGS:
        dest = _FLAG_DEST.get(flag, flag)
        raw = getattr(args, dest)
        if raw is not None:
            grid[dest] = _parse_values(raw)
    return RunConfig(
        dim=dim,
        tol_overrides=tols,
        grid=grid,
        format=args.format,
        seed=args.seed,
        dim_explicit=dim_explicit,
    )


def _merge_negative_values(argv):
    # argparse mistakes "-3..3" / "-5,0,5" for option strings; fold such
    # values into their flag as --k=-3..3
    flags = {f"--{flag}" for flag in _PARAM_FLAGS}
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if tok in flags and nxt is not None and nxt.startswith("-") and any(c.isdigit() for c in nxt):
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None, stream=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_merge_negative_values(list(argv)))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    stream = stream if stream is not None else sys.stdout
    try:
        cfg = _config_from_args(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.command == "verify":
            return run_verify(args.suite, cfg, stream)
        return run_table(args.kind, cfg, stream)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
