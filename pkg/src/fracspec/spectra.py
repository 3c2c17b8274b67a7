"""Bound-state machinery for the fractional wave equation: zeros of the
fractional trig functions, infinite-well eigenstates and energies in one and
N dimensions, the radial ground state, spherical-well energies, and the
equivalent-potential reconstruction.

Roots are reported on the (pi/2)-scaled axis used throughout the plots: the
scaled root x solves f(alpha, (pi/2) x) = 0, so at alpha = 1 the combined
cos/sin zeros sit at x = 1, 2, 3, ...  Physical wave numbers are the
unscaled values k0 = (pi/2) x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fraccalc import (
    AlphaContext,
    HALF_PI,
    _check_alpha,
    _table,
    certified_floor,
    frac_cos,
    frac_sin,
    rl_nodes,
)

__all__ = [
    "NoZeros",
    "CutoffTooSmall",
    "ZeroScan",
    "WellState",
    "RadialGround",
    "find_zeros",
    "well_states_1d",
    "well_energy_nd",
    "free_energy",
    "radial_ground",
    "spherical_ground_energy",
    "equivalent_potential",
    "eigenfunction_table",
]

SCAN_STEP = 0.01  # on the (pi/2)-scaled axis; root spacing there is >~ 0.5


class NoZeros(ArithmeticError):
    """No sign change found in the scanned domain (expected for alpha <= 1/2)."""


class CutoffTooSmall(ValueError):
    """Boltzmann tail of the excluded states exceeds the budget."""


@dataclass(frozen=True)
class ZeroScan:
    """Scaled positive roots plus a completeness flag (False when the
    function stopped crossing zero before `count` roots were found)."""

    roots: tuple
    complete: bool

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)

    def __getitem__(self, i):
        return self.roots[i]


def _scan_tol(alpha: float, beta: float, x_hi: float, base_tol: float) -> float:
    """Evaluation tolerance for a scan chunk ending at scaled x_hi: the
    user tolerance, floored by what is certifiable at that argument."""
    z = (HALF_PI * x_hi) ** (2.0 * alpha)
    floor = 4.0 * certified_floor(2.0 * alpha, beta, z)
    if not math.isfinite(floor):
        raise ValueError(
            f"scan limit x={x_hi:g} (scaled) is beyond the representable "
            f"amplitude range for alpha={alpha:g}"
        )
    return max(base_tol, floor)


def _refine(f, a: float, b: float, fa: float, fb: float, xtol: float) -> float:
    """Bisection with a secant polish on a sign-change bracket."""
    for _ in range(200):
        m = 0.5 * (a + b)
        if b - a <= xtol:
            break
        fm = f(m)
        if fm == 0.0:
            return m
        if fa * fm < 0.0:
            b, fb = m, fm
        else:
            a, fa = m, fm
    if fb != fa:
        s = b - fb * (b - a) / (fb - fa)
        if a <= s <= b:
            return s
    return 0.5 * (a + b)


def find_zeros(kind: str, alpha: float, count: int, x_max: float,
               step: float = SCAN_STEP, xtol: float = 1e-10,
               eval_tol: float = 1e-9) -> ZeroScan:
    """First `count` positive roots of frac_cos/frac_sin(alpha, (pi/2) x) on
    (0, x_max], on the scaled axis.

    Scans with `step`, brackets sign changes, refines to xtol.  Scanning
    proceeds in chunks and stops as soon as `count` roots are found.  Raises
    NoZeros when no sign change exists in the whole scanned domain (the
    alpha <= 1/2 regime); returns fewer roots with complete=False when the
    function stops crossing zero later on.
    """
    _check_alpha(alpha)
    if count < 1:
        raise ValueError("count must be >= 1")
    if kind not in ("cos", "sin"):
        raise ValueError("kind must be 'cos' or 'sin'")
    f = frac_cos if kind == "cos" else frac_sin
    beta = 1.0 if kind == "cos" else 1.0 + alpha
    roots: list[float] = []
    chunk = 400  # scan points per vector evaluation
    x0 = step
    prev_x = None
    prev_v = None
    while x0 <= x_max and len(roots) < count:
        xs = x0 + step * np.arange(chunk)
        xs = xs[xs <= x_max + 0.5 * step]
        if len(xs) == 0:
            break
        tol = _scan_tol(alpha, beta, float(xs[-1]), eval_tol)
        vs = f(alpha, HALF_PI * xs, tol)
        if prev_x is not None:
            xs = np.concatenate(([prev_x], xs))
            vs = np.concatenate(([prev_v], vs))
        idx = np.where(vs[:-1] * vs[1:] < 0.0)[0]
        for i in idx:
            if len(roots) >= count:
                break
            g = lambda x: float(f(alpha, HALF_PI * x, tol))
            roots.append(_refine(g, float(xs[i]), float(xs[i + 1]),
                                 float(vs[i]), float(vs[i + 1]), xtol))
        prev_x = float(xs[-1])
        prev_v = float(vs[-1])
        x0 = prev_x + step
    if not roots:
        raise NoZeros(
            f"frac_{kind}(alpha={alpha:g}) has no zero on (0, {x_max:g}] "
            f"(scaled axis); none exist for alpha <= 1/2"
        )
    return ZeroScan(roots=tuple(roots), complete=len(roots) >= count)


@dataclass(frozen=True)
class WellState:
    """One eigenstate of the 1D infinite well of half-width a (fm).

    k0 is the unscaled root of the free solution (cos root for even parity,
    sin root for odd); psi(x) = cos/sin(alpha, k0 x / a) vanishes at +-a.
    Energies are in MeV once the context carries MeV units.
    """

    alpha: float
    n: int
    parity: str
    k0: float
    a: float
    energy: float

    def psi(self, x):
        f = frac_cos if self.parity == "even" else frac_sin
        return f(self.alpha, self.k0 * np.asarray(x, float) / self.a)

    @property
    def k0_scaled(self) -> float:
        return self.k0 / HALF_PI


def _interleaved_roots(alpha: float, count: int, x_max: float,
                       eval_tol: float = 1e-9):
    """Combined, sorted cos/sin roots with parity labels (cos first at
    alpha near 1).  Returns (list of (k0_unscaled, parity), complete)."""
    want = count // 2 + 2
    try:
        rc = find_zeros("cos", alpha, want, x_max, eval_tol=eval_tol)
    except NoZeros:
        raise
    try:
        rs = find_zeros("sin", alpha, want, x_max, eval_tol=eval_tol)
        sin_roots = list(rs.roots)
    except NoZeros:
        sin_roots = []
    tagged = [(r * HALF_PI, "even") for r in rc.roots]
    tagged += [(r * HALF_PI, "odd") for r in sin_roots]
    tagged.sort()
    complete = len(tagged) >= count
    return tagged[:count], complete


def well_states_1d(alpha: float, count: int, a: float,
                   ctx: AlphaContext) -> list[WellState]:
    """Lowest `count` eigenstates of the infinite well on [-a, a].

    States alternate parity with increasing root location; the energy is
    e_n = (1/2) mc^2 (hbar/(mc a))^(2 alpha) |k0_n|^(2 alpha).
    Returns fewer states when the zero set is exhausted (finite for
    1/2 < alpha < 1); raises NoZeros when there are none at all.
    """
    if a <= 0:
        raise ValueError("half-width a must be positive")
    x_max = 2.0 * count + 20.0
    tagged, _ = _interleaved_roots(alpha, count, x_max)
    lam = ctx.hbar_c / (ctx.mc2 * a)
    out = []
    for n, (k0, parity) in enumerate(tagged):
        e = 0.5 * ctx.mc2 * (lam * k0) ** (2.0 * alpha)
        out.append(WellState(alpha=alpha, n=n, parity=parity, k0=k0, a=a,
                             energy=e))
    return out


def well_energy_nd(alpha: float, indices: list[int], half_widths: list[float],
                   ctx: AlphaContext) -> float:
    """Separable N-dimensional well energy
    (1/2) mc^2 (hbar/mc)^(2 alpha) sum_i |k0_{n_i}/a_i|^(2 alpha)."""
    if len(indices) != len(half_widths):
        raise ValueError("indices and half_widths must have equal length")
    nmax = max(indices)
    tagged, complete = _interleaved_roots(alpha, nmax + 1, 2.0 * (nmax + 1) + 20.0)
    if not complete:
        raise NoZeros(f"only {len(tagged)} well states exist at alpha={alpha:g}")
    lam = ctx.hbar_c / ctx.mc2
    total = 0.0
    for n, a in zip(indices, half_widths):
        if a <= 0:
            raise ValueError("half-widths must be positive")
        k0 = tagged[n][0]
        total += (lam * k0 / a) ** (2.0 * alpha)
    return 0.5 * ctx.mc2 * total


def free_energy(alpha: float, k: float, ctx: AlphaContext) -> float:
    """Free-particle dispersion E = (1/2) mc^2 (hbar|k|/(mc))^(2 alpha),
    k in 1/fm when the context is in MeV/fm units."""
    _check_alpha(alpha)
    return 0.5 * ctx.mc2 * (ctx.hbar_c * abs(k) / ctx.mc2) ** (2.0 * alpha)


# ----------------------------------------------------------------------------
# Radial ground state.
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class RadialGround:
    """Spherical free ground state g(N, alpha, z) = sum (-1)^n a_n z^(2 alpha n)
    with the recurrence a_j = a_{j-1} / ((N-1) j eta_1 + eta_j),
    eta_j = Gamma(1+2 alpha j)/Gamma(1+2 alpha (j-1)).

    first_zero is the unscaled first positive root (pi for N=3, alpha=1).
    """

    N: int
    alpha: float
    coeffs: tuple
    eta: tuple
    first_zero: float

    def g(self, z):
        """Evaluate g at (array of) unscaled argument z = |k| r."""
        w = np.asarray(z, float) ** (2.0 * self.alpha)
        signed = np.array(self.coeffs) * (-1.0) ** np.arange(len(self.coeffs))
        return np.polynomial.polynomial.polyval(w, signed)

    def g_of_rho(self, rho):
        """g as a function of rho = sum_i |k x_i|^(2 alpha) (Cartesian form)."""
        signed = np.array(self.coeffs) * (-1.0) ** np.arange(len(self.coeffs))
        return np.polynomial.polynomial.polyval(np.asarray(rho, float), signed)

    @property
    def first_zero_scaled(self) -> float:
        return self.first_zero / HALF_PI


def radial_ground(N: int, alpha: float, terms: int = 64,
                  scan_max_scaled: float = 20.0) -> RadialGround:
    """Radial ground-state series and its first zero for the N-dimensional
    spherical problem.  Raises NoZeros if no root lies in the scan range
    (0, scan_max_scaled] on the (pi/2)-scaled axis."""
    if N < 2:
        raise ValueError("N must be >= 2")
    _check_alpha(alpha)
    tab = _table(2.0 * alpha, 1.0)
    tab.extend(terms + 1)
    eta = tuple(tab.ratio[j - 1] for j in range(1, terms + 1))  # eta[j-1] = eta_j
    coeffs = [1.0]
    for j in range(1, terms + 1):
        coeffs.append(coeffs[-1] / ((N - 1) * j * eta[0] + eta[j - 1]))
    signed = np.array(coeffs) * (-1.0) ** np.arange(len(coeffs))

    def g(z):
        return np.polynomial.polynomial.polyval(
            np.asarray(z, float) ** (2.0 * alpha), signed)

    xs = np.arange(SCAN_STEP, scan_max_scaled + SCAN_STEP, SCAN_STEP) * HALF_PI
    vs = g(xs)
    idx = np.where(vs[:-1] * vs[1:] < 0.0)[0]
    if len(idx) == 0:
        raise NoZeros(
            f"radial ground state g(N={N}, alpha={alpha:g}) has no zero on "
            f"(0, {scan_max_scaled:g}] (scaled axis)"
        )
    i = idx[0]
    root = _refine(lambda z: float(g(z)), float(xs[i]), float(xs[i + 1]),
                   float(vs[i]), float(vs[i + 1]), 1e-12)
    return RadialGround(N=N, alpha=alpha, coeffs=tuple(coeffs), eta=eta,
                        first_zero=root)


def spherical_ground_energy(N: int, alpha: float, r0: float,
                            ctx: AlphaContext) -> float:
    """Ground-state energy of the infinite spherical well,
    e0 = (1/2) mc^2 (hbar k0_sph / (mc r0))^(2 alpha)."""
    if r0 <= 0:
        raise ValueError("r0 must be positive")
    k_sph = radial_ground(N, alpha).first_zero
    return 0.5 * ctx.mc2 * (ctx.hbar_c * k_sph / (ctx.mc2 * r0)) ** (2.0 * alpha)


# ----------------------------------------------------------------------------
# Equivalent potential of the ordinary Schroedinger equation.
# ----------------------------------------------------------------------------


def equivalent_potential(alpha: float, T: float, n_states: int, grid,
                         tail_budget: float = 1e-6):
    """V(x)/T of the ordinary-equation potential whose thermal density
    matches the fractional well's, on the dimensionless well [-1, 1]:

        V/T = -ln( sum_n psi_n^2 e^(-E_n/T) / sum_n e^(-E_n/T) ),

    shifted so the minimum over the grid is zero.  psi_n are normalised
    under the alpha-measure; energies use hbar = m = c = a = 1.

    The cutoff must satisfy exp(-E_last/T) < 1e-8; CutoffTooSmall is raised
    when the estimated tail weight exceeds tail_budget (default 1e-6).
    """
    _check_alpha(alpha)
    if T <= 0:
        raise ValueError("T must be positive")
    grid = np.asarray(grid, float)
    tagged, complete = _interleaved_roots(alpha, n_states + 1,
                                          2.0 * n_states + 30.0,
                                          eval_tol=1e-6)
    ks = [k for k, _ in tagged[:n_states]]
    parities = [p for _, p in tagged[:n_states]]
    energies = [0.5 * k ** (2.0 * alpha) for k in ks]
    weights = [math.exp(-e / T) for e in energies]
    # tail estimate: geometric continuation from the first excluded state
    if len(tagged) > n_states:
        e_next = 0.5 * tagged[n_states][0] ** (2.0 * alpha)
        w_next = math.exp(-e_next / T)
        ratio = w_next / weights[-1] if weights[-1] > 0 else 0.0
        tail = w_next / (1.0 - ratio) if ratio < 1.0 else math.inf
    else:
        # spectrum exhausted (finite zero set); treat the basis as complete
        tail = 0.0
        w_next = 0.0
    if weights[-1] > 1e-8 or tail > tail_budget:
        raise CutoffTooSmall(
            f"cutoff weight {weights[-1]:.2e} (tail ~{tail:.2e}) exceeds the "
            f"budget; raise n_states or lower T"
        )
    u, wq = rl_nodes(alpha, 1.0, 128)
    rho = np.zeros_like(grid)
    Z = 0.0
    for k, parity, wn in zip(ks, parities, weights):
        f = frac_cos if parity == "even" else frac_sin
        tol_n = max(1e-9, 1e-9 / max(wn, 1e-300))
        psi_q = f(alpha, k * u, tol_n)
        norm2 = 2.0 * float(np.dot(wq, psi_q * psi_q))
        psi_g = f(alpha, k * grid, tol_n)
        rho += wn * (psi_g * psi_g) / norm2
        Z += wn
    rho /= Z
    v = -np.log(rho)
    v -= v.min()
    return list(zip(grid.tolist(), v.tolist()))


def eigenfunction_table(states: list[WellState], xs) -> list[tuple]:
    """Rows (x, psi_0(x), psi_1(x), ...) for CSV emission."""
    xs = np.asarray(xs, float)
    cols = [st.psi(xs) for st in states]
    return [tuple([float(x)] + [float(c[i]) for c in cols])
            for i, x in enumerate(xs)]
