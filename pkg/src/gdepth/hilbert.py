"""Hilbert-Samuel tables, binomial-basis polynomial fit, coefficients.

H(n) = colength of the n-th power; for n past the postulation number it
equals  P(n) = e0*C(n+d-1, d) - e1*C(n+d-2, d-1) + ... + (-1)^d * ed,
with integer coefficients.  The fit solves for the e_i exactly over the
rationals on the top d+1 table entries and then certifies the window:
the polynomial must reproduce a verification stretch of 2d+4 entries, or
the caller gets WindowUnstableError and the table is extended.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, List, Tuple

from .errors import NotPrimaryError, WindowUnstableError
from .fields import QQ


def binomial(x, k: int) -> Fraction:
    """C(x, k) for integer or rational x (possibly negative), k >= 0."""
    if k < 0:
        raise ValueError("negative lower index")
    num = Fraction(1)
    for i in range(k):
        num *= Fraction(x) - i
    den = 1
    for i in range(1, k + 1):
        den *= i
    return num / den


def hilbert_basis_value(e: List[int], d: int, n: int) -> int:
    """P(n) for coefficients e0..ed in the alternating binomial basis."""
    total = Fraction(0)
    for i, ei in enumerate(e):
        term = Fraction(ei) * binomial(n + d - 1 - i, d - i)
        total += term if i % 2 == 0 else -term
    if total.denominator != 1:
        raise ArithmeticError("non-integer polynomial value")
    return int(total)


@dataclass
class HilbertProfile:
    dimension: int
    table: List[int]
    coefficients: List[int]
    postulation: int
    fit_window: Tuple[int, int]
    verification_window: Tuple[int, int]

    @property
    def multiplicity(self) -> int:
        return self.coefficients[0]

    @property
    def e1(self) -> int:
        return self.coefficients[1] if len(self.coefficients) > 1 else 0

    def polynomial_value(self, n: int) -> int:
        return hilbert_basis_value(self.coefficients, self.dimension, n)

    def polynomial_str(self) -> str:
        d = self.dimension
        parts = []
        for i, ei in enumerate(self.coefficients):
            mag = abs(ei)
            negative = (ei < 0) ^ (i % 2 == 1)
            shift = d - 1 - i
            arg = "n" if shift == 0 else (f"n+{shift}" if shift > 0
                                          else f"n-{-shift}")
            piece = f"{mag}*C({arg}, {d - i})"
            if not parts:
                parts.append(piece if not negative else f"-{piece}")
            else:
                parts.append(("- " if negative else "+ ") + piece)
        return " ".join(parts)

    def first_differences(self) -> List[int]:
        return [self.table[n + 1] - self.table[n]
                for n in range(len(self.table) - 1)]

    def describe(self) -> dict:
        return {
            "table": list(self.table),
            "coefficients": list(self.coefficients),
            "postulation": self.postulation,
            "polynomial": self.polynomial_str(),
            "fit_window": list(self.fit_window),
            "verification_window": list(self.verification_window),
        }


def hilbert_table(ideal, n_max: int) -> List[int]:
    """[lambda(R/I^n) for n = 0..n_max]; powers are cached on the ideal."""
    return [ideal.power(n).colength() for n in range(n_max + 1)]


def fit_hilbert_polynomial(table: List[int], d: int) -> Tuple[List[int], int]:
    """Exact (e0..ed, postulation) fit; see the module docstring.

    Raises WindowUnstableError when the table tail is too short to carry
    a fit window of d+1 points plus a verification window of 2d+4
    points that all lie on one degree-d polynomial.
    """
    need = (d + 1) + (d + 3)
    top = len(table) - 1
    if top + 1 < need + 1:
        raise WindowUnstableError("table too short for a certified fit",
                                  needed=2 * max(top, 1))
    fit_points = list(range(top - d, top + 1))
    # solve sum_i (-1)^i e_i C(n+d-1-i, d-i) = H(n) on the fit points
    aug = []
    for n in fit_points:
        row = []
        for i in range(d + 1):
            c = binomial(n + d - 1 - i, d - i)
            row.append(c if i % 2 == 0 else -c)
        row.append(Fraction(table[n]))
        aug.append(row)
    e = _solve_square(aug, d + 1)
    coeffs = []
    for v in e:
        if v.denominator != 1:
            raise WindowUnstableError("fit produced non-integer coefficients",
                                      needed=2 * top)
        coeffs.append(int(v))
    verify_lo = top - need
    for n in range(verify_lo, top + 1):
        if hilbert_basis_value(coeffs, d, n) != table[n]:
            raise WindowUnstableError(
                f"fitted polynomial misses the table at n={n}",
                needed=2 * top)
    postulation = -1
    for n in range(verify_lo - 1, -1, -1):
        if hilbert_basis_value(coeffs, d, n) != table[n]:
            postulation = n
            break
    if coeffs[0] < 1:
        raise WindowUnstableError("nonpositive multiplicity in fit",
                                  needed=2 * top)
    return coeffs, postulation


def _solve_square(aug: List[List[Fraction]], n: int) -> List[Fraction]:
    """Solve an n x n rational system given as augmented rows."""
    rows = [list(r) for r in aug]
    for col in range(n):
        piv = next(i for i in range(col, len(rows)) if rows[i][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for i in range(len(rows)):
            if i != col and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[col])]
    return [rows[i][n] for i in range(n)]


def compute_profile(ideal, dimension: int, start: int = 0,
                    max_table: int = 80) -> HilbertProfile:
    """Table + fit with automatic doubling until the window certifies."""
    d = dimension
    n_max = start if start else 2 * d + 6
    while True:
        table = hilbert_table(ideal, n_max)
        for n in range(1, n_max):
            if table[n + 1] <= table[n]:
                raise NotPrimaryError(
                    "Hilbert-Samuel table is not strictly increasing; "
                    "the ideal cannot be m-primary")
        try:
            coeffs, postulation = fit_hilbert_polynomial(table, d)
        except WindowUnstableError:
            if n_max >= max_table:
                raise
            n_max = min(2 * n_max, max_table)
            continue
        top = len(table) - 1
        need = (d + 1) + (d + 3)
        return HilbertProfile(
            dimension=d, table=table, coefficients=coeffs,
            postulation=postulation, fit_window=(top - d, top),
            verification_window=(top - need, top))


def assoc_graded_h_function(profile: HilbertProfile) -> List[int]:
    """n -> lambda(I^n / I^{n+1}), the h-function of G(I)."""
    return profile.first_differences()


def h_vector(profile: HilbertProfile) -> List[int]:
    """Numerator coefficients of the Hilbert series of G(I):
    sum_n h(n) z^n * (1-z)^d, which is a polynomial once the table is
    past the postulation number."""
    d = profile.dimension
    g = profile.first_differences()
    # d-th alternating differences of the h-function
    out = []
    for i in range(len(g)):
        val = 0
        for k in range(d + 1):
            if 0 <= i - k < len(g):
                sign = -1 if k % 2 else 1
                val += sign * int(binomial(d, k)) * g[i - k]
        out.append(val)
    while out and out[-1] == 0:
        out.pop()
    return out


def eventual_degree(values: List[int], margin: int = 3) -> int:
    """Degree of the polynomial the sequence eventually agrees with.

    Certified by `margin` extra constant difference values at the tail;
    raises WindowUnstableError when the tail is too short.
    """
    seq = list(values)
    for k in range(13):
        tail = seq[-(margin + 1):]
        if len(tail) < margin + 1:
            break
        if all(x == 0 for x in tail):
            # k-th differences vanish at the tail: degree is k-1
            # (-1 means the sequence is eventually zero)
            return k - 1
        seq = [b - a for a, b in zip(seq, seq[1:])]
    raise WindowUnstableError("sequence differences did not stabilize",
                              needed=2 * len(values))
