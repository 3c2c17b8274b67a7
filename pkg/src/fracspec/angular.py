"""Algebraic spectrum of the deformed rotation algebra: commutator-constant
models, generalized Euler-operator eigenvalues, and the L_z / J^2 spectra.

The generalized Euler operator has eigenvalues

    l(alpha, n) = Gamma(n alpha + 1) / (Gamma((n-1) alpha + 1) Gamma(alpha + 1)),
    l(alpha, 0) = 0,

which replace the integer angular-momentum projections; the Casimir is
J^2 = l (l + c) with the commutator constant c taken from one of three
successive approximations:

    c0 = 1
    c1(alpha) = 1 - 1/(Gamma(1-alpha) Gamma(1+alpha))   [= 1 - sin(pi a)/(pi a)]
    c2(j, alpha) = l(alpha, j+1) - l(alpha, j)           (written as a Gamma ratio)

The printed reference table embedded below is reproduced by these formulas
to <= 1e-4 in all columns except the two rightmost (c1/c2 at alpha = 0.65),
which do not follow from the formulas as printed; those columns are emitted
with a per-cell deviation instead of being forced.  (Direct evaluation shows
the printed cells match alpha = 0.68, not 0.65.)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .fraccalc import PoleError, _check_alpha, gamma, rgamma

__all__ = [
    "CModel",
    "commutator_c",
    "c_value",
    "euler_eigenvalue",
    "lz_eigenvalue",
    "j2_eigenvalue",
    "table1_report",
    "TABLE1_PRINTED",
]


@dataclass(frozen=True)
class CModel:
    """Commutator-constant model: variant 'c0', 'c1' or 'c2'; j is consumed
    by c2 only."""

    variant: str
    alpha: float = 1.0
    j: int = 0

    def __post_init__(self):
        if self.variant not in ("c0", "c1", "c2"):
            raise ValueError("variant must be 'c0', 'c1' or 'c2'")
        _check_alpha(self.alpha)
        if self.j < 0:
            raise ValueError("j must be >= 0")


def commutator_c(n: int, alpha: float) -> float:
    """Raw coordinate-momentum commutator bracket on the monomial set,

        c(n, alpha) = (1/Gamma(1+a)) (Gamma(1+na)/Gamma(1+(n-1)a)
                                      - Gamma(1+(n+1)a)/Gamma(1+na)).

    Evaluated exactly as printed (reciprocal gammas vanish at the poles, so
    n = 0 is finite); note the sign tension with c1 = +(1 - ...) at n = 0,
    which is deliberately left unreconciled.  Used for plotting the
    approximation ladder only.
    """
    _check_alpha(alpha)
    if n < 0:
        raise ValueError("n must be >= 0")
    t1 = gamma(1.0 + n * alpha) * rgamma(1.0 + (n - 1) * alpha)
    t2 = gamma(1.0 + (n + 1) * alpha) * rgamma(1.0 + n * alpha)
    return (t1 - t2) / gamma(1.0 + alpha)


def c_value(model: CModel) -> float:
    """Commutator constant for the given model.

    c1 at alpha = 1 is the Gamma(0)-pole limit, which the reciprocal-gamma
    form reaches directly (value 1); integer alpha >= 2 lies outside the
    supported alpha range and raises PoleError.
    """
    a = model.alpha
    if model.variant == "c0":
        return 1.0
    if model.variant == "c1":
        if a >= 2.0 and a == math.floor(a):
            raise PoleError(f"c1 undefined at integer alpha = {a:g}")
        return 1.0 - rgamma(1.0 - a) / gamma(1.0 + a)
    j = model.j
    if j < 1:
        raise ValueError("c2 requires j >= 1")
    return (gamma(1.0 + (j + 1) * a) / (gamma(1.0 + j * a) * gamma(1.0 + a))
            - gamma(1.0 + j * a) / (gamma(1.0 + (j - 1) * a) * gamma(1.0 + a)))


def euler_eigenvalue(alpha: float, n: int) -> float:
    """l(alpha, n): 0 for n = 0, else the Gamma-ratio above (units hbar)."""
    _check_alpha(alpha)
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 0.0
    return gamma(n * alpha + 1.0) / (gamma((n - 1) * alpha + 1.0)
                                     * gamma(alpha + 1.0))


def lz_eigenvalue(alpha: float, m: int, allow_negative: bool = False) -> float:
    """L_z eigenvalue (units hbar) for projection index m >= 0.

    Only m >= 0 is exposed by default (the spectra realise right-handed
    states only); negative m is available behind the flag and is the odd
    extension -l(alpha, |m|).
    """
    if m < 0:
        if not allow_negative:
            raise ValueError("negative m requires allow_negative=True")
        return -euler_eigenvalue(alpha, -m)
    return euler_eigenvalue(alpha, m)


def j2_eigenvalue(alpha: float, j: int, model: CModel) -> float:
    """J^2 eigenvalue l(alpha,j) (l(alpha,j) + c) in units hbar^2.

    For the c2 model the constant is evaluated at this j (the model's own
    j field is overridden), which collapses to l_j * l_{j+1}.
    """
    if j < 0:
        raise ValueError("j must be >= 0")
    lj = euler_eigenvalue(alpha, j)
    if lj == 0.0:
        return 0.0
    if model.variant == "c2":
        c = c_value(CModel("c2", alpha=alpha, j=j))
    else:
        c = c_value(CModel(model.variant, alpha=alpha, j=max(model.j, 1)))
    return lj * (lj + c)


# Printed reference eigenvalue table (units hbar), rows n = 0..6:
# L_z(2/3), L_z(0.68), J2_c0(1), J2_c0(2/3), J2_c0(0.68),
# J2_c1(0.65), J2_c2(j, 0.65).
TABLE1_PRINTED = {
    "lz_23": (0.0, 1.0, 1.460998, 1.860735, 2.222222, 2.556747, 2.870848),
    "lz_068": (0.0, 1.0, 1.478157, 1.894649, 2.272597, 2.623332, 2.953417),
    "j2c0_1": (0.0, 2.0, 6.0, 12.0, 20.0, 30.0, 42.0),
    "j2c0_23": (0.0, 2.0, 3.595515, 5.323069, 7.160493, 9.093704, 11.112618),
    "j2c0_068": (0.0, 2.0, 3.663108, 5.484346, 7.437298, 9.505205, 11.676094),
    "j2c1_065": (0.0, 1.604767, 3.078892, 4.735519, 6.539094, 8.468379,
                 10.508808),
    "j2c2_065": (0.0, 1.478157, 2.800590, 4.305776, 5.961779, 7.747796,
                 9.649033),
}


def table1_report(n_max: int = 6) -> list[dict]:
    """Eigenvalue table rows n = 0..n_max from the formulas.

    The columns with printed reference values carry `<col>_printed` and
    `<col>_dev` entries; the two rightmost columns (c1/c2 at 0.65) are
    reference prints known not to follow from the formulas and are reported
    with their deviations rather than matched.
    """
    rows = []
    for n in range(n_max + 1):
        row = {
            "n": n,
            "lz_1": lz_eigenvalue(1.0, n),
            "lz_23": lz_eigenvalue(2.0 / 3.0, n),
            "lz_068": lz_eigenvalue(0.68, n),
            "j2c0_1": j2_eigenvalue(1.0, n, CModel("c0")),
            "j2c0_23": j2_eigenvalue(2.0 / 3.0, n, CModel("c0")),
            "j2c0_068": j2_eigenvalue(0.68, n, CModel("c0")),
            "j2c1_065": j2_eigenvalue(0.65, n, CModel("c1", alpha=0.65)),
            "j2c2_065": j2_eigenvalue(0.65, n, CModel("c2", alpha=0.65, j=n)),
        }
        for col, ref in TABLE1_PRINTED.items():
            if n < len(ref):
                row[f"{col}_printed"] = ref[n]
                row[f"{col}_dev"] = row[col] - ref[n]
        rows.append(row)
    return rows
