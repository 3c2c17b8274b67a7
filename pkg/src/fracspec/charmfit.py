"""Charmonium application: dataset handling, the mass formula

    m(j, m) = kappa J^2(alpha, j, c)/hbar^2 + B_j L_z(alpha, m)/hbar
              + m0 c^2 + delta_{j,3} Delta_tau,

alpha extraction from multiplet spacings, linear least-squares fits with an
alpha scan, mass predictions, and the size estimate for the <00> state in a
box and a sphere.

Fit conventions (decoded from the published tables and verified row by row):
the least squares runs over all loaded states (negative-m states are
excluded by construction of the dataset); the published error figures are
MEAN-ABSOLUTE deviations, with "Delta m_m=0" taken over the m = 0 subset
and "Delta m_all" over all states EXCEPT the <33> prediction row.  Both
those and the plain RMS/mean-abs over every state are reported.

Radius expectation values integrate over the positive octant cube with the
ordinary volume element; the fractional structure enters through the wave
functions and the radius operator
r = (hbar/mc)^(1-alpha) (1/Gamma(1+alpha)) sqrt(sum_i x_i^(2 alpha)).
That convention reproduces the published box value (0.32 fm); the
endpoint-anchored fractional measure is also available for comparison via
measure="rl".  Both coincide at alpha = 1.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, replace
from importlib import resources

import numpy as np

from .angular import CModel, euler_eigenvalue, j2_eigenvalue, lz_eigenvalue
from .fraccalc import AlphaContext, HBARC_MEV_FM, _check_alpha, gamma, rl_nodes
from .fraccalc import frac_cos
from .spectra import find_zeros, radial_ground, HALF_PI

__all__ = [
    "ParseError",
    "DuplicateState",
    "MissingB",
    "OutOfRange",
    "RankDeficient",
    "NegativeZeroPoint",
    "CharmState",
    "FitParams",
    "QuarkMasses",
    "FitResult",
    "load_dataset",
    "default_dataset",
    "mass_model",
    "alpha_from_multiplet",
    "two_state_solve",
    "fit",
    "predict",
    "radius_box",
    "radius_sphere",
    "table3_report",
    "TABLE2_ROWS",
    "TABLE3_PRINTED",
    "DATA_ENV_VAR",
]

DATA_ENV_VAR = "FRACSPEC_DATA"


class ParseError(ValueError):
    """Dataset file failed to parse or validate (carries line/record info)."""


class DuplicateState(ValueError):
    """Two dataset records share the same (j, m)."""


class MissingB(KeyError):
    """A rotational coefficient B_j is required but not available."""


class OutOfRange(ValueError):
    """Target ratio unattainable on the requested alpha bracket."""


class RankDeficient(ValueError):
    """A fit parameter has no supporting state in the dataset."""


class NegativeZeroPoint(ValueError):
    """Composite mass lies below the summed constituent masses."""


@dataclass(frozen=True)
class CharmState:
    """One labeled state <jm> with its measured mass (MeV)."""

    name: str
    j: int
    m: int
    mass_exp: float
    mass_err: float | None = None

    def __post_init__(self):
        if self.j < 0 or not 0 <= self.m <= self.j:
            raise ParseError(
                f"state {self.name!r}: need j >= 0 and 0 <= m <= j "
                f"(got j={self.j}, m={self.m})"
            )
        if self.mass_exp <= 0:
            raise ParseError(f"state {self.name!r}: mass must be positive")


@dataclass(frozen=True)
class FitParams:
    """Mass-formula parameter vector (MeV) plus the model choice."""

    m0c2: float
    kappa: float
    B1: float
    B2: float
    B3: float
    delta_tau: float
    alpha: float
    c_model: str = "c0"

    def __post_init__(self):
        _check_alpha(self.alpha)
        if self.c_model not in ("c0", "c1", "c2"):
            raise ValueError("c_model must be 'c0', 'c1' or 'c2'")

    def b_for(self, j: int) -> float | None:
        return {1: self.B1, 2: self.B2, 3: self.B3}.get(j)


@dataclass(frozen=True)
class QuarkMasses:
    """Constituent rest-mass energies in MeV (d and c quarks)."""

    m_d_c2: float = 300.0
    m_c_c2: float = 1400.0

    def __post_init__(self):
        if self.m_d_c2 <= 0 or self.m_c_c2 <= 0:
            raise ValueError("quark masses must be positive")


def load_dataset(path) -> list[CharmState]:
    """Load a JSON list of {name, j, m, mass_mev, err_mev} records.

    An empty (whitespace-only) file is a valid empty dataset.  Raises
    ParseError with position info on malformed input and DuplicateState on a
    repeated (j, m) label.
    """
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if not text.strip():
        return []
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: line {e.lineno}, col {e.colno}: {e.msg}") from e
    if not isinstance(raw, list):
        raise ParseError(f"{path}: expected a top-level JSON list of records")
    states = []
    seen = {}
    for i, rec in enumerate(raw):
        try:
            st = CharmState(
                name=str(rec["name"]),
                j=int(rec["j"]),
                m=int(rec["m"]),
                mass_exp=float(rec["mass_mev"]),
                mass_err=(float(rec["err_mev"])
                          if rec.get("err_mev") is not None else None),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"{path}: record {i}: {e}") from e
        key = (st.j, st.m)
        if key in seen:
            raise DuplicateState(
                f"{path}: record {i}: <{st.j}{st.m}> already defined by "
                f"{seen[key]!r}"
            )
        seen[key] = st.name
        states.append(st)
    return states


def default_dataset() -> list[CharmState]:
    """Bundled dataset; overridable through the FRACSPEC_DATA env var."""
    override = os.environ.get(DATA_ENV_VAR)
    if override:
        return load_dataset(override)
    with resources.as_file(
        resources.files("fracspec.data") / "charmonium.json"
    ) as p:
        return load_dataset(p)


def _states_by_jm(states):
    return {(s.j, s.m): s for s in states}


def mass_model(p: FitParams, j: int, m: int, b_extra: dict | None = None) -> float:
    """Model mass in MeV for the <jm> state under parameter vector p.

    B_j exists for j in {1, 2, 3}; other j with m > 0 need an explicit entry
    in b_extra, otherwise MissingB is raised.  (m = 0 states have L_z = 0,
    so no B enters.)
    """
    if j < 0 or not 0 <= m <= j:
        raise ValueError("need j >= 0 and 0 <= m <= j")
    model = CModel(p.c_model, alpha=p.alpha, j=max(j, 1))
    val = p.m0c2 + p.kappa * j2_eigenvalue(p.alpha, j, model)
    if m > 0:
        b = p.b_for(j)
        if b is None and b_extra is not None:
            b = b_extra.get(j)
        if b is None:
            raise MissingB(f"no B_{j} available for a j={j}, m={m} state")
        val += b * lz_eigenvalue(p.alpha, m)
    if j == 3:
        val += p.delta_tau
    return val


def alpha_from_multiplet(m0: float, m1: float, m2: float,
                         alpha_lo: float = 0.4, alpha_hi: float = 1.4) -> float:
    """Solve L_z(alpha, 2) = (m2 - m0)/(m1 - m0) for alpha by bisection.

    The ratio l(alpha, 2) = Gamma(1+2a)/Gamma(1+a)^2 is strictly increasing
    on the bracket; OutOfRange is raised when the target is unattainable.
    """
    if m1 == m0:
        raise ValueError("m1 must differ from m0")
    target = (m2 - m0) / (m1 - m0)
    lo, hi = alpha_lo, alpha_hi
    f_lo = euler_eigenvalue(lo, 2) - target
    f_hi = euler_eigenvalue(hi, 2) - target
    if f_lo * f_hi > 0:
        raise OutOfRange(
            f"ratio {target:.4f} outside [{euler_eigenvalue(lo, 2):.4f}, "
            f"{euler_eigenvalue(hi, 2):.4f}] attainable on the bracket"
        )
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if (euler_eigenvalue(mid, 2) - target) * f_lo <= 0:
            hi = mid
        else:
            lo = mid
            f_lo = euler_eigenvalue(lo, 2) - target
        if hi - lo < 1e-12:
            break
    return 0.5 * (lo + hi)


def two_state_solve(eta_c: float, chi0: float, alpha: float) -> tuple[float, float]:
    """(m0c2, kappa) from the two lowest m = 0 states (j = 1 and j = 2, c0):
    m0 + J2(alpha,1) kappa = eta_c;  m0 + J2(alpha,2) kappa = chi0."""
    j2_1 = j2_eigenvalue(alpha, 1, CModel("c0"))
    j2_2 = j2_eigenvalue(alpha, 2, CModel("c0"))
    kappa = (chi0 - eta_c) / (j2_2 - j2_1)
    m0c2 = eta_c - j2_1 * kappa
    return m0c2, kappa


_PARAM_NAMES = ("m0c2", "kappa", "B1", "B2", "B3", "delta_tau")


def _design_matrix(states, alpha: float, c_model: str) -> np.ndarray:
    rows = []
    for s in states:
        model = CModel(c_model, alpha=alpha, j=max(s.j, 1))
        rows.append([
            1.0,
            j2_eigenvalue(alpha, s.j, model),
            lz_eigenvalue(alpha, s.m) if (s.j == 1 and s.m > 0) else 0.0,
            lz_eigenvalue(alpha, s.m) if (s.j == 2 and s.m > 0) else 0.0,
            lz_eigenvalue(alpha, s.m) if (s.j == 3 and s.m > 0) else 0.0,
            1.0 if s.j == 3 else 0.0,
        ])
    return np.asarray(rows)


@dataclass(frozen=True)
class FitResult:
    params: FitParams
    residuals: dict           # (j, m) -> model - experiment, MeV
    diagnostics: dict         # error metrics, see fit()

    def to_json(self) -> str:
        payload = {
            "params": {
                "m0c2": self.params.m0c2, "kappa": self.params.kappa,
                "B1": self.params.B1, "B2": self.params.B2,
                "B3": self.params.B3, "delta_tau": self.params.delta_tau,
                "alpha": self.params.alpha, "c_model": self.params.c_model,
            },
            "residuals": {f"{j}{m}": v for (j, m), v in self.residuals.items()},
            "diagnostics": self.diagnostics,
        }
        return json.dumps(payload, indent=2, sort_keys=True)


def _metrics(states, res) -> dict:
    absres = np.abs(res)
    m0_mask = np.array([s.m == 0 for s in states])
    # the published "all" figure excludes the <33> prediction row
    pub_mask = np.array([(s.j, s.m) != (3, 3) for s in states])

    def rms(mask):
        sel = res[mask]
        return float(np.sqrt(np.mean(sel**2))) if len(sel) else math.nan

    def mabs(mask):
        sel = absres[mask]
        return float(np.mean(sel)) if len(sel) else math.nan

    full = np.ones(len(states), bool)
    return {
        "dm_m0_rms": rms(m0_mask), "dm_m0_abs": mabs(m0_mask),
        "dm_all_rms": rms(full), "dm_all_abs": mabs(full),
        "dm_published_rms": rms(pub_mask), "dm_published_abs": mabs(pub_mask),
    }


def _solve(states, alpha: float, c_model: str):
    A = _design_matrix(states, alpha, c_model)
    y = np.array([s.mass_exp for s in states])
    support = np.abs(A).sum(axis=0)
    dead = [name for name, s in zip(_PARAM_NAMES, support) if s == 0.0]
    if dead:
        raise RankDeficient(
            f"no supporting state for parameter(s): {', '.join(dead)}"
        )
    p, *_ = np.linalg.lstsq(A, y, rcond=None)
    res = A @ p - y
    return p, res


def fit(dataset, alpha, c_model: str = "c0",
        scan_range: tuple[float, float] = (0.60, 0.72),
        scan_step: float = 0.001, objective: str = "dm_published_abs") -> FitResult:
    """Least-squares fit of the mass formula.

    With a numeric `alpha` the model is linear in the six parameters and one
    normal-equations solve suffices.  With alpha="scan" the objective (one
    of the diagnostic keys; the published tables correspond to the
    mean-absolute deviation excluding <33>) is minimised on a grid over
    scan_range with step scan_step, then refined by golden section to 1e-4;
    ties break toward smaller alpha.
    """
    states = sorted(dataset, key=lambda s: (s.j, s.m))
    if not states:
        raise ValueError("empty dataset")

    def result_at(a: float) -> FitResult:
        p, res = _solve(states, a, c_model)
        params = FitParams(*[float(v) for v in p], alpha=a, c_model=c_model)
        residuals = {(s.j, s.m): float(r) for s, r in zip(states, res)}
        diag = _metrics(states, res)
        diag["alpha"] = a
        diag["c_model"] = c_model
        diag["objective"] = objective
        return FitResult(params=params, residuals=residuals, diagnostics=diag)

    if alpha != "scan":
        return result_at(float(alpha))

    def obj(a: float) -> float:
        _, res = _solve(states, a, c_model)
        return _metrics(states, res)[objective]

    grid = np.arange(scan_range[0], scan_range[1] + 0.5 * scan_step, scan_step)
    vals = [obj(float(a)) for a in grid]
    i = int(np.argmin(vals))  # argmin takes the first (smallest alpha) on ties
    lo = float(grid[max(i - 1, 0)])
    hi = float(grid[min(i + 1, len(grid) - 1)])
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = obj(c), obj(d)
    while b - a > 1e-4:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = obj(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = obj(d)
    return result_at(round(0.5 * (a + b), 6))


def predict(p: FitParams, j: int, m: int, dataset=None,
            with_interval: bool = False, b_extra: dict | None = None):
    """Mass prediction at an unfitted (j, m).

    Plain call: mass_model(p, j, m).  For the <33> state with
    with_interval=True and a dataset supplying <30>/<32>, the linear
    L_z-ratio interpolation

        m33 = m30 + [l(alpha,3)/l(alpha,2)] (m32 - m30)

    is used instead, and the experimental errors are propagated through it;
    returns (value, propagated_error).
    """
    if with_interval and (j, m) == (3, 3):
        if dataset is None:
            raise ValueError("interval prediction for <33> needs a dataset")
        by = _states_by_jm(dataset)
        try:
            s30, s32 = by[(3, 0)], by[(3, 2)]
        except KeyError as e:
            raise ValueError("dataset must contain <30> and <32>") from e
        ratio = euler_eigenvalue(p.alpha, 3) / euler_eigenvalue(p.alpha, 2)
        val = s30.mass_exp + ratio * (s32.mass_exp - s30.mass_exp)
        e30 = s30.mass_err or 0.0
        e32 = s32.mass_err or 0.0
        err = math.hypot((1.0 - ratio) * e30, ratio * e32)
        return val, err
    return mass_model(p, j, m, b_extra=b_extra)


# ----------------------------------------------------------------------------
# Size estimates.
# ----------------------------------------------------------------------------


def _radius_prefactor(alpha: float, mc2: float, hbar_c: float) -> float:
    return (hbar_c / mc2) ** (1.0 - alpha) / gamma(1.0 + alpha)


def _octant_nodes(alpha: float, a: float, n: int, measure: str):
    if measure == "rl":
        return rl_nodes(alpha, a, n)
    if measure == "plain":
        xs, ws = np.polynomial.legendre.leggauss(n)
        return 0.5 * a * (xs + 1.0), 0.5 * a * ws
    raise ValueError("measure must be 'plain' or 'rl'")


def radius_box(sigma_mass: float, quarks: QuarkMasses, alpha: float,
               ctx: AlphaContext | None = None, n_nodes: int = 64,
               measure: str = "plain") -> tuple[float, float]:
    """(half-width a, <r>) in fm for the composite in a cubic box.

    The zero-point energy E0 = sigma - (2 m_d + m_c) c^2 fixes a through
    E0 = (3/2) m_c c^2 (hbar k0 / (m_c c a))^(2 alpha) with k0 the first
    cos zero; <r> is the ground-state expectation of the fractional radius
    operator over [0, a]^3 (ordinary volume element by default, which is
    the convention behind the published value; measure="rl" switches to the
    endpoint-anchored fractional measure).

    Equality with the constituent sum is flagged by (inf, inf); below it,
    NegativeZeroPoint is raised.
    """
    _check_alpha(alpha)
    hbar_c = ctx.hbar_c if ctx is not None else HBARC_MEV_FM
    mc2 = quarks.m_c_c2
    e0 = sigma_mass - (2.0 * quarks.m_d_c2 + quarks.m_c_c2)
    if e0 < 0:
        raise NegativeZeroPoint(
            f"sigma mass {sigma_mass:g} below constituent sum "
            f"{2 * quarks.m_d_c2 + quarks.m_c_c2:g}"
        )
    k0 = find_zeros("cos", alpha, 1, 8.0, xtol=1e-12)[0] * HALF_PI
    if e0 == 0.0:
        return math.inf, math.inf
    X = (2.0 * e0 / (3.0 * mc2)) ** (1.0 / (2.0 * alpha))
    a = hbar_c * k0 / (mc2 * X)
    u, w = _octant_nodes(alpha, a, n_nodes, measure)
    psi = frac_cos(alpha, k0 * u / a)
    W = w * psi * psi
    R = np.abs(u) ** (2.0 * alpha)
    G = R[:, None, None] + R[None, :, None] + R[None, None, :]
    num = float(np.einsum("i,j,k,ijk->", W, W, W, np.sqrt(G)))
    den = float(W.sum()) ** 3
    r_mean = _radius_prefactor(alpha, mc2, hbar_c) * num / den
    return a, r_mean


def radius_sphere(sigma_mass: float, quarks: QuarkMasses, alpha: float,
                  ctx: AlphaContext | None = None, n_nodes: int = 64,
                  measure: str = "plain") -> tuple[float, float]:
    """(r0, <r>) in fm for the composite in a spherical well.

    r0 comes from E0 = (1/2) m_c c^2 (hbar k_sph/(m_c c r0))^(2 alpha) with
    k_sph the first zero of the radial ground state; <r> integrates the
    radial ground state g over [0, r0]^3 like radius_box.  g depends on the
    coordinates only through rho = sum |x_i|^(2 alpha), so L_z g = J^2 g = 0
    holds by construction.
    """
    _check_alpha(alpha)
    hbar_c = ctx.hbar_c if ctx is not None else HBARC_MEV_FM
    mc2 = quarks.m_c_c2
    e0 = sigma_mass - (2.0 * quarks.m_d_c2 + quarks.m_c_c2)
    if e0 < 0:
        raise NegativeZeroPoint(
            f"sigma mass {sigma_mass:g} below constituent sum "
            f"{2 * quarks.m_d_c2 + quarks.m_c_c2:g}"
        )
    ground = radial_ground(3, alpha)
    k_sph = ground.first_zero
    if e0 == 0.0:
        return math.inf, math.inf
    X = (2.0 * e0 / mc2) ** (1.0 / (2.0 * alpha))
    r0 = hbar_c * k_sph / (mc2 * X)
    u, w = _octant_nodes(alpha, r0, n_nodes, measure)
    R = np.abs(u) ** (2.0 * alpha)
    G = R[:, None, None] + R[None, :, None] + R[None, None, :]
    scale = (k_sph / r0) ** (2.0 * alpha)
    P = ground.g_of_rho(scale * G)
    W3 = w[:, None, None] * w[None, :, None] * w[None, None, :]
    num = float((W3 * P * P * np.sqrt(G)).sum())
    den = float((W3 * P * P).sum())
    r_mean = _radius_prefactor(alpha, mc2, hbar_c) * num / den
    return r0, r_mean


# ----------------------------------------------------------------------------
# Published parameter sets and the mass table report.
# ----------------------------------------------------------------------------

# Published optimum parameter rows: alpha, c-model, m0c2, kappa, B1, B2, B3,
# delta_tau, printed dm_m0, printed dm_all.
TABLE2_ROWS = (
    FitParams(2439.33, 274.66, 108.25, 87.00, 263.69, -129.04, 2.0 / 3.0, "c0"),
    FitParams(2451.26, 263.83, 117.98, 93.39, 259.16, -124.48, 0.681, "c0"),
    FitParams(2452.67, 336.16, 119.79, 95.72, 270.19, -129.00, 0.647, "c1"),
    FitParams(2451.90, 367.41, 116.13, 98.37, 269.46, -124.39, 0.649, "c2"),
)
TABLE2_PRINTED_DM = ((5.68, 8.98), (1.86, 2.02), (1.14, 1.15), (0.73, 0.79))

# Published theoretical masses per parameter set, rows <jm> incl. the <50>
# prediction.
TABLE3_PRINTED = {
    (0, 0): (2439.33, 2451.26, 2452.67, 2451.90),
    (1, 0): (2988.66, 2978.94, 2977.12, 2980.78),
    (1, 1): (3096.92, 3096.92, 3096.92, 3096.92),
    (2, 0): (3426.89, 3417.80, 3417.15, 3413.65),
    (2, 1): (3513.89, 3511.19, 3512.87, 3512.03),
    (2, 2): (3554.00, 3555.85, 3554.68, 3555.26),
    (3, 0): (3772.35, 3773.92, 3770.17, 3770.41),
    (3, 1): (4036.04, 4033.08, 4040.37, 4039.87),
    (3, 2): (4157.60, 4157.02, 4158.39, 4158.30),
    (3, 3): (4263.01, 4264.98, 4260.08, 4260.42),
    (4, 0): (4406.07, 4413.80, 4414.36, 4415.22),
    (5, 0): (4937.06, 4959.54, 4957.54, 4969.07),
}

_TABLE3_SYMBOLS = {
    (0, 0): "Sigma_c0", (1, 0): "eta_c", (1, 1): "J/psi", (2, 0): "chi_c0",
    (2, 1): "chi_c1", (2, 2): "chi_c2", (3, 0): "psi(3770)",
    (3, 1): "psi(4040)", (3, 2): "psi(4160)", (3, 3): "Y(4260)",
    (4, 0): "psi(4415)", (5, 0): "X(4965)",
}


def _best_alpha_within_print(p: FitParams, printed: list[float],
                             jm_list) -> float:
    """Alpha near the printed value that best matches the printed mass
    column.  The +-0.003 window covers the observed mis-rounding of the
    published alpha figures (the 0.681 column was evidently computed at
    ~0.680, the 0.649 one at ~0.6496); within it every published column is
    matched to ~0.1 MeV."""
    best = (math.inf, p.alpha)
    for a in np.linspace(p.alpha - 0.003, p.alpha + 0.003, 241):
        q = replace(p, alpha=float(a))
        dev = max(abs(mass_model(q, j, m) - ref)
                  for (j, m), ref in zip(jm_list, printed))
        if dev < best[0]:
            best = (dev, float(a))
    return best[1]


def table3_report(param_rows=TABLE2_ROWS, dataset=None) -> list[dict]:
    """Mass table: for every <jm> (including the unobserved <50>) and every
    parameter row, the model mass, the deviation from experiment, and the
    deviation from the published theoretical value.

    The published table was evidently generated at more alpha digits than
    printed: at the printed 3-decimal alpha the c1/c2 and 0.681 columns
    drift by several MeV at high j.  Each row dict therefore also carries
    `m_th_refined` computed at the best alpha within +-0.0005 of the
    printed one (pure diagnostic; the plain m_th is the faithful
    evaluation).
    """
    if dataset is None:
        dataset = default_dataset()
    by_jm = _states_by_jm(dataset)
    jm_list = sorted(TABLE3_PRINTED.keys())
    refined_alphas = [
        _best_alpha_within_print(p, [TABLE3_PRINTED[jm][i] for jm in jm_list],
                                 jm_list)
        for i, p in enumerate(param_rows)
    ]
    rows = []
    for (j, m) in jm_list:
        row = {"j": j, "m": m, "symbol": _TABLE3_SYMBOLS.get((j, m), ""),
               "m_exp": by_jm[(j, m)].mass_exp if (j, m) in by_jm else None}
        for i, p in enumerate(param_rows):
            mth = mass_model(p, j, m)
            label = f"set{i}"
            row[f"{label}_m_th"] = mth
            row[f"{label}_delta_exp"] = (mth - row["m_exp"]
                                         if row["m_exp"] is not None else None)
            printed = TABLE3_PRINTED[(j, m)][i]
            row[f"{label}_printed"] = printed
            row[f"{label}_dev_printed"] = mth - printed
            refined = mass_model(replace(p, alpha=refined_alphas[i]), j, m)
            row[f"{label}_m_th_refined"] = refined
            row[f"{label}_dev_refined"] = refined - printed
        rows.append(row)
    return rows
