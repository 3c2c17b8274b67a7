"""Command-line front end: reproduction runs, fits, predictions and checks,
each emitting one CSV/JSON artifact with fixed 6-decimal float formatting.

Exit codes: 0 artifact written and the command's consistency checks passed;
1 artifact written but a check failed (details in the artifact / stderr
JSON); 2 bad input.

FRACSPEC_DATA overrides the bundled dataset path.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

import numpy as np

from . import angular, charmfit, spectra, su3fact
from .fraccalc import (
    AlphaContext,
    DegenerateNorm,
    PrecisionLoss,
    domain_of_validity,
    frac_cos,
    frac_exp,
    frac_sin,
    mittag_leffler,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2


class DomainExceeded(ValueError):
    """Requested sample points fall outside the certified validity domain."""


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.6f}"
    return str(x)


def _write_atomic(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".fracspec-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit_table(path: str, header: list[str], rows: list[tuple],
                fmt: str) -> None:
    if fmt == "csv":
        lines = [",".join(header)]
        lines += [",".join(_fmt(v) for v in row) for row in rows]
        _write_atomic(path, "\n".join(lines) + "\n")
    else:
        payload = [dict(zip(header, row)) for row in rows]
        _write_atomic(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _fail(path: str, message: str, **extra) -> int:
    payload = {"error": message, **extra}
    text = json.dumps(payload, indent=2, sort_keys=True)
    if path:
        _write_atomic(path, text + "\n")
    print(text, file=sys.stderr)
    return EXIT_CHECK_FAILED


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _dataset(args) -> list:
    if getattr(args, "dataset", None):
        return charmfit.load_dataset(args.dataset)
    return charmfit.default_dataset()


# ----------------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------------


def cmd_special(args) -> int:
    fns = {"exp": frac_exp, "cos": frac_cos, "sin": frac_sin}
    xs = np.arange(args.x_min, args.x_max + 0.5 * args.step, args.step)
    if args.name == "mlf":
        beta = args.beta if args.beta is not None else 1.0
        bound = domain_of_validity(args.alpha, beta, args.tol)
        zmax = float(np.max(np.abs(xs))) if len(xs) else 0.0
        if zmax > bound:
            raise DomainExceeded(
                f"|z| up to {zmax:g} exceeds the certified bound {bound:g} "
                f"for E_({args.alpha:g},{beta:g}) at tol {args.tol:g}"
            )
        ys = mittag_leffler(args.alpha, beta, xs, tol=args.tol)
    else:
        beta = 1.0 if args.name in ("exp", "cos") else 1.0 + args.alpha
        bound = domain_of_validity(2.0 * args.alpha, beta, args.tol)
        zmax = float(np.max(np.abs(xs)) ** (2.0 * args.alpha)) if len(xs) else 0.0
        if zmax > bound:
            x_bound = bound ** (1.0 / (2.0 * args.alpha))
            raise DomainExceeded(
                f"|x| up to {np.max(np.abs(xs)):g} exceeds the certified "
                f"bound |x| <= {x_bound:g} for {args.name}(alpha={args.alpha:g}) "
                f"at tol {args.tol:g}"
            )
        ys = fns[args.name](args.alpha, xs, tol=args.tol)
    rows = [(float(x), float(y)) for x, y in zip(xs, ys)]
    _emit_table(args.out, ["x", "value"], rows, args.format)
    return EXIT_OK


def cmd_zeros(args) -> int:
    rows = []
    alphas = np.arange(args.alpha_min, args.alpha_max + 0.5 * args.alpha_step,
                       args.alpha_step)
    for a in alphas:
        for kind in ("cos", "sin"):
            try:
                scan = spectra.find_zeros(kind, float(a), args.count,
                                          args.x_max)
            except spectra.NoZeros:
                rows.append((float(a), kind, None, "no_zeros"))
                continue
            for i, r in enumerate(scan.roots):
                rows.append((float(a), kind, i, float(r)))
    _emit_table(args.out, ["alpha", "kind", "root_index", "root"],
                rows, args.format)
    return EXIT_OK


def cmd_table1(args) -> int:
    rows = angular.table1_report()
    cols = ["n", "lz_1", "lz_23", "lz_068", "j2c0_1", "j2c0_23", "j2c0_068",
            "j2c1_065", "j2c1_065_printed", "j2c1_065_dev",
            "j2c2_065", "j2c2_065_printed", "j2c2_065_dev"]
    table = [tuple(r[c] for c in cols) for r in rows]
    _emit_table(args.out, cols, table, args.format)
    clean = ["lz_23", "lz_068", "j2c0_1", "j2c0_23", "j2c0_068"]
    worst = max(abs(r[f"{c}_dev"]) for r in rows for c in clean)
    if worst > 1e-4:
        return _fail(None, "reference eigenvalue columns deviate beyond 1e-4",
                     worst_deviation=worst)
    return EXIT_OK


def cmd_fit(args) -> int:
    cfg = _load_config(args.config)
    c_model = args.c_model or cfg.get("c_model", "c0")
    alpha = args.alpha if args.alpha is not None else cfg.get("alpha", "scan")
    ds = _dataset(args)
    result = charmfit.fit(ds, alpha if alpha == "scan" else float(alpha),
                          c_model)
    _write_atomic(args.out, result.to_json() + "\n")
    return EXIT_OK


def cmd_masses(args) -> int:
    report = charmfit.table3_report(dataset=_dataset(args))
    cols = ["j", "m", "symbol", "m_exp"]
    for i in range(4):
        cols += [f"set{i}_m_th", f"set{i}_printed", f"set{i}_dev_printed",
                 f"set{i}_dev_refined"]
    rows = [tuple(r[c] for c in cols) for r in report]
    _emit_table(args.out, cols, rows, args.format)
    worst = max(abs(r[f"set{i}_dev_printed"]) for r in report for i in range(4))
    if worst > 0.5:
        worst_ref = max(abs(r[f"set{i}_dev_refined"])
                        for r in report for i in range(4))
        return _fail(
            None,
            "published masses not reproduced at printed-parameter precision",
            worst_deviation_mev=worst,
            worst_deviation_alpha_refined_mev=worst_ref,
            note="published table used more alpha digits than printed",
        )
    return EXIT_OK


def cmd_predict(args) -> int:
    ds = _dataset(args)
    by = {(s.j, s.m): s for s in ds}
    alpha_chi = charmfit.alpha_from_multiplet(
        by[(2, 0)].mass_exp, by[(2, 1)].mass_exp, by[(2, 2)].mass_exp)
    # the two-state solve and interpolation run at the published-precision
    # extraction (default 0.680) so the band checks mirror the publication;
    # the raw extraction is reported alongside
    alpha = args.alpha if args.alpha is not None else 0.680
    m0c2, kappa = charmfit.two_state_solve(
        by[(1, 0)].mass_exp, by[(2, 0)].mass_exp, alpha)
    p0 = charmfit.FitParams(m0c2, kappa, 0, 0, 0, 0, alpha=alpha)
    m33, e33 = charmfit.predict(p0, 3, 3, dataset=ds, with_interval=True)
    preds = {"alpha_chi_extracted": alpha_chi, "alpha_used": alpha,
             "m0c2": m0c2, "kappa": kappa, "m33": m33, "m33_err": e33}
    for row, label in ((charmfit.TABLE2_ROWS[2], "c1"),
                       (charmfit.TABLE2_ROWS[3], "c2")):
        preds[f"m50_{label}"] = charmfit.predict(row, 5, 0)
    _write_atomic(args.out, json.dumps(preds, indent=2, sort_keys=True) + "\n")
    checks_ok = (abs(m33 - 4268.0) <= 22.0
                 and abs(m0c2 - 2455.0) <= 3.0
                 and abs(kappa - 262.4) <= 0.9)
    if not checks_ok:
        return _fail(None, "prediction outside the published bands",
                     **preds)
    return EXIT_OK


def cmd_radius(args) -> int:
    cfg = _load_config(args.config)
    qm = cfg.get("quark_masses", {})
    quarks = charmfit.QuarkMasses(
        m_d_c2=float(qm.get("m_d_c2", 300.0)),
        m_c_c2=float(qm.get("m_c_c2", 1400.0)),
    )
    alpha = float(args.alpha if args.alpha is not None
                  else cfg.get("alpha", 2.0 / 3.0))
    hbar_c = float(cfg.get("hbar_c", charmfit.HBARC_MEV_FM))
    ctx = AlphaContext(alpha=alpha, hbar_c=hbar_c, mc2=quarks.m_c_c2)
    try:
        a_fm, r_box = charmfit.radius_box(args.sigma_mass, quarks, alpha, ctx)
        r0_fm, r_sph = charmfit.radius_sphere(args.sigma_mass, quarks, alpha,
                                              ctx)
    except charmfit.NegativeZeroPoint as e:
        print(json.dumps({"error": str(e)}), file=sys.stderr)
        return EXIT_BAD_INPUT
    payload = {"sigma_mass_mev": args.sigma_mass, "alpha": alpha,
               "a_fm": a_fm, "r_mean_box_fm": r_box,
               "r0_fm": r0_fm, "r_mean_sphere_fm": r_sph}
    _write_atomic(args.out, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    pub_ok = (abs(a_fm - 0.81) <= 0.01 and abs(r_box - 0.32) <= 0.01
              and abs(r0_fm - 1.08) <= 0.01 and abs(r_sph - 0.33) <= 0.01)
    if not pub_ok:
        return _fail(None, "radius chain deviates from the published values",
                     **payload)
    return EXIT_OK


def cmd_potential(args) -> int:
    grid = np.linspace(-args.grid_half_width, args.grid_half_width,
                       args.grid_points)
    try:
        pairs = spectra.equivalent_potential(args.alpha, args.temperature,
                                             args.n_states, grid)
    except (spectra.CutoffTooSmall, spectra.NoZeros) as e:
        print(json.dumps({"error": str(e)}), file=sys.stderr)
        return EXIT_BAD_INPUT
    _emit_table(args.out, ["x", "v_over_t"],
                [(x, v) for x, v in pairs], args.format)
    return EXIT_OK


def cmd_factorcheck(args) -> int:
    clifford = [r.as_dict() for r in su3fact.clifford_check()]
    triple = su3fact.triple_product_check()
    s2 = su3fact.s2_structure()
    payload = {
        "clifford": clifford,
        "triple_product": triple,
        "s2": s2,
        "all_pass": (all(r["pass"] for r in clifford)
                     and triple["pass"] and s2["pass"]),
    }
    _write_atomic(args.out, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return EXIT_OK if payload["all_pass"] else _fail(
        None, "factorization checks failed")


# ----------------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------------


def _add_common(sp, default_out):
    sp.add_argument("--out", default=default_out, help="output artifact path")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--tol", type=float, default=1e-9,
                    help="evaluation tolerance where applicable")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="fracspec",
        description="Fractional Schroedinger toolkit: reproduction runs, "
                    "fits, predictions, checks.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("special", help="sample a fractional special function")
    sp.add_argument("--name", choices=("exp", "cos", "sin", "mlf"),
                    required=True)
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--beta", type=float, default=None,
                    help="second ML parameter (mlf only)")
    sp.add_argument("--x-min", type=float, default=-10.0)
    sp.add_argument("--x-max", type=float, default=10.0)
    sp.add_argument("--step", type=float, default=0.05)
    _add_common(sp, "special.csv")
    sp.set_defaults(func=cmd_special)

    sp = sub.add_parser("zeros", help="zero locations of cos/sin eigenfunctions")
    sp.add_argument("--alpha-min", type=float, default=0.55)
    sp.add_argument("--alpha-max", type=float, default=1.2)
    sp.add_argument("--alpha-step", type=float, default=0.05)
    sp.add_argument("--count", type=int, default=6)
    sp.add_argument("--x-max", type=float, default=16.0)
    _add_common(sp, "zeros.csv")
    sp.set_defaults(func=cmd_zeros)

    sp = sub.add_parser("table1", help="angular-momentum eigenvalue table")
    _add_common(sp, "table1.csv")
    sp.set_defaults(func=cmd_table1)

    sp = sub.add_parser("fit", help="least-squares mass-formula fit")
    sp.add_argument("--alpha", default=None,
                    help="fixed alpha value or 'scan'")
    sp.add_argument("--c-model", choices=("c0", "c1", "c2"), default=None)
    sp.add_argument("--dataset", default=None)
    sp.add_argument("--config", default=None)
    _add_common(sp, "fit.json")
    sp.set_defaults(func=cmd_fit)

    sp = sub.add_parser("masses", help="mass table for the published "
                                       "parameter sets")
    sp.add_argument("--dataset", default=None)
    _add_common(sp, "masses.csv")
    sp.set_defaults(func=cmd_masses)

    sp = sub.add_parser("predict", help="alpha extraction, two-state solve, "
                                        "<33>/<50> predictions")
    sp.add_argument("--dataset", default=None)
    sp.add_argument("--alpha", type=float, default=None,
                    help="order used for the solve (default: published "
                         "extraction 0.680)")
    _add_common(sp, "predict.json")
    sp.set_defaults(func=cmd_predict)

    sp = sub.add_parser("radius", help="box and sphere size estimates")
    sp.add_argument("--sigma-mass", type=float, default=2452.2)
    sp.add_argument("--alpha", type=float, default=None)
    sp.add_argument("--config", default=None)
    _add_common(sp, "radius.json")
    sp.set_defaults(func=cmd_radius)

    sp = sub.add_parser("potential", help="equivalent-potential dataset")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--temperature", type=float, required=True)
    sp.add_argument("--n-states", type=int, required=True)
    sp.add_argument("--grid-points", type=int, default=161)
    sp.add_argument("--grid-half-width", type=float, default=0.95)
    _add_common(sp, "potential.csv")
    sp.set_defaults(func=cmd_potential)

    sp = sub.add_parser("factorcheck", help="Clifford and factorization checks")
    _add_common(sp, "factorcheck.json")
    sp.set_defaults(func=cmd_factorcheck)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except DomainExceeded as e:
        print(json.dumps({"error": str(e)}), file=sys.stderr)
        return EXIT_BAD_INPUT
    except (charmfit.ParseError, charmfit.DuplicateState,
            charmfit.OutOfRange, charmfit.RankDeficient,
            FileNotFoundError, ValueError) as e:
        print(json.dumps({"error": f"{type(e).__name__}: {e}"}),
              file=sys.stderr)
        return EXIT_BAD_INPUT
    except (PrecisionLoss, DegenerateNorm) as e:
        print(json.dumps({"error": f"{type(e).__name__}: {e}"}),
              file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
