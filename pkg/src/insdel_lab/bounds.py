"""Lower bounds on the tolerable insertion fraction for list-decodable
insdel codes, as functions of relative distance delta and list size L.

Two competing bounds are implemented:

* a piecewise-linear bound, evaluated either directly as a max of L linear
  terms or through its explicit piece decomposition;
* the prior quadratic bound of Hayashi and Yasunaga ("HY"), together with its
  admissible-region list-size formula.

All core evaluations are exact over ``fractions.Fraction``; the comparison
report additionally uses float64 for the square-root landmarks, with a
documented 1e-9 tolerance.  Floats passed as parameters are interpreted via
their shortest decimal representation, so 0.9 means 9/10, not the nearest
binary double.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence, Union

Exact = Union[int, str, Fraction]


def as_fraction(value: Exact | float) -> Fraction:
    """Coerce to an exact rational; floats go through their decimal repr."""
    if isinstance(value, float):
        return Fraction(str(value))
    if isinstance(value, Rational):
        return Fraction(value)
    return Fraction(str(value))


def _validate_delta(delta: Fraction) -> None:
    if not 0 < delta < 1:
        raise ValueError(f"relative distance must satisfy 0 < delta < 1, got {delta}")


def _validate_list_size(list_size: int) -> None:
    if not isinstance(list_size, int) or list_size < 2:
        raise ValueError(f"list size must be an integer >= 2, got {list_size!r}")


def insertion_bound(delta: Exact | float, list_size: int, x: Exact | float) -> Fraction:
    """Max-form evaluation of the piecewise-linear insertion bound at x.

    The value is max over r = 1..list_size of

        ((2*list_size - r + 1) / (list_size + 1)) * x
        - (list_size / r) * (1 - delta)

    for x in [1 - delta, 1].  In applications x = 1 - tau_del.
    """
    d = as_fraction(delta)
    _validate_delta(d)
    _validate_list_size(list_size)
    xf = as_fraction(x)
    if not 1 - d <= xf <= 1:
        raise ValueError(f"x={xf} outside domain [{1 - d}, 1]")
    big = list_size
    # The r-th term over the common denominator (L+1) * xd * r * cd has
    # numerator (2L-r+1) xn r cd - L cn (L+1) xd; terms are compared by
    # cross-multiplying the r-dependent denominators, keeping everything in
    # integer arithmetic until the single Fraction at the end.
    c = 1 - d
    xn, xd = xf.numerator, xf.denominator
    cn, cd = c.numerator, c.denominator
    shared = big * cn * (big + 1) * xd
    best_num = (2 * big) * xn * cd - shared
    best_r = 1
    for r in range(2, big + 1):
        num = (2 * big - r + 1) * xn * r * cd - shared
        if num * best_r > best_num * r:
            best_num, best_r = num, r
    return Fraction(best_num, (big + 1) * xd * cd * best_r)


@dataclass(frozen=True)
class LinearPiece:
    """One linear piece slope * x + intercept on the closed interval [lower, upper]."""

    lower: Fraction
    upper: Fraction
    slope: Fraction
    intercept: Fraction
    r: int

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise ValueError("piece interval is empty")

    def value(self, x: Fraction) -> Fraction:
        return self.slope * x + self.intercept


@dataclass(frozen=True)
class PiecewiseBound:
    """Piece decomposition of the insertion bound on [1 - delta, 1].

    Pieces are listed left to right, indexed by decreasing r from list_size
    down to r_min, where r_min is the least r whose linear term ever wins.
    Adjacent pieces agree at shared breakpoints (the function is continuous),
    and the value is 0 at x = 1 - delta and strictly positive beyond it.
    """

    delta: Fraction
    list_size: int
    r_min: int
    pieces: tuple[LinearPiece, ...]

    def __post_init__(self) -> None:
        if not self.pieces:
            raise ValueError("a piecewise bound needs at least one piece")
        if self.pieces[0].lower != 1 - self.delta or self.pieces[-1].upper != 1:
            raise ValueError("pieces must cover exactly [1 - delta, 1]")
        if len(self.pieces) != self.list_size - self.r_min + 1:
            raise ValueError("piece count must equal list_size - r_min + 1")
        for left, right in zip(self.pieces, self.pieces[1:]):
            if left.upper != right.lower:
                raise ValueError("pieces must tile the domain without gaps")
            if left.value(left.upper) != right.value(right.lower):
                raise ValueError("pieces must agree at shared breakpoints")

    def breakpoints(self) -> tuple[Fraction, ...]:
        """Interior breakpoints, left to right (empty for a single piece)."""
        return tuple(p.upper for p in self.pieces[:-1])

    def evaluate(self, x: Exact | float) -> Fraction:
        xf = as_fraction(x)
        if not self.pieces[0].lower <= xf <= 1:
            raise ValueError(f"x={xf} outside domain [{self.pieces[0].lower}, 1]")
        uppers = [p.upper for p in self.pieces]
        idx = min(bisect_right(uppers, xf), len(self.pieces) - 1)
        return self.pieces[idx].value(xf)


def insertion_bound_piecewise(delta: Exact | float, list_size: int) -> PiecewiseBound:
    """Explicit piece decomposition of the insertion bound.

    The r-th linear term wins on the interval between consecutive values of
    list_size*(list_size+1)/(r*(r+1)) * (1 - delta), clipped to [1 - delta, 1];
    r_min is the least r for which that threshold drops below 1.
    """
    d = as_fraction(delta)
    _validate_delta(d)
    _validate_list_size(list_size)
    big = list_size
    one_minus = 1 - d

    def threshold(r: int) -> Fraction:
        return Fraction(big * (big + 1), r * (r + 1)) * one_minus

    r_min = next(r for r in range(1, big + 1) if threshold(r) < 1)
    pieces = []
    for r in range(big, r_min - 1, -1):
        lower = threshold(r) if r < big else one_minus
        upper = Fraction(1) if r == r_min else threshold(r - 1)
        pieces.append(
            LinearPiece(
                lower=lower,
                upper=upper,
                slope=Fraction(2 * big - r + 1, big + 1),
                intercept=-Fraction(big, r) * one_minus,
                r=r,
            )
        )
    return PiecewiseBound(delta=d, list_size=big, r_min=r_min, pieces=tuple(pieces))


def unique_decoding_bound(delta: Exact | float, tau_del: Exact | float) -> Fraction:
    """Insertion fraction tolerated by unique decoding: delta - tau_del."""
    d = as_fraction(delta)
    _validate_delta(d)
    td = as_fraction(tau_del)
    if not 0 <= td < d:
        raise ValueError(f"need 0 <= tau_del < delta, got tau_del={td}, delta={d}")
    return d - td


def hy_quadratic1(delta: Exact | float, x: Exact | float) -> Fraction:
    """First HY comparison quadratic: x^2 / (1 - delta) - x."""
    d = as_fraction(delta)
    _validate_delta(d)
    xf = as_fraction(x)
    return xf * xf / (1 - d) - xf


def hy_quadratic2(delta: Exact | float, list_size: int, x: Exact | float) -> Fraction:
    """Second HY comparison quadratic; always strictly below the first one.

    ((L+1) x^2 - (L+1)(1-delta) x + (1-delta) - 1) / (L (1-delta) + 1).
    """
    d = as_fraction(delta)
    _validate_delta(d)
    _validate_list_size(list_size)
    xf = as_fraction(x)
    one_minus = 1 - d
    big = list_size
    numerator = (big + 1) * xf * xf - (big + 1) * one_minus * xf + one_minus - 1
    return numerator / (big * one_minus + 1)


def hy_list_size(
    delta: Exact | float, tau_ins: Exact | float, tau_del: Exact | float
) -> int | None:
    """List size guaranteed by the HY bound, or None outside its region.

    Applicable when tau_ins < (delta - tau_del)(1 - tau_del)/(1 - delta); the
    guaranteed list size is then

        floor(delta (1 + tau_ins) / ((delta - tau_del)(1 - tau_del) - (1 - delta) tau_ins)).
    """
    d = as_fraction(delta)
    _validate_delta(d)
    ti = as_fraction(tau_ins)
    td = as_fraction(tau_del)
    if ti < 0 or not 0 <= td < 1:
        raise ValueError("need tau_ins >= 0 and 0 <= tau_del < 1")
    if ti >= (d - td) * (1 - td) / (1 - d):
        return None
    return math.floor(d * (1 + ti) / ((d - td) * (1 - td) - (1 - d) * ti))


def hy_crossover_root(list_size: int) -> float:
    """Positive root beta2 of the crossover quadratic in (1 - delta).

    beta2 = (L-1) (-(L-3) + sqrt(L^2 + 18L + 17)) / (4 (3L + 1)).
    """
    _validate_list_size(list_size)
    big = list_size
    return (
        (big - 1)
        * (-(big - 3) + math.sqrt(big * big + 18 * big + 17))
        / (4 * (3 * big + 1))
    )


def hy_crossover_delta(list_size: int) -> float:
    """Least delta beyond which the piecewise bound beats the HY quadratic
    somewhere: max(2 / (L+1), 1 - beta2).

    The second argument of the max always dominates because
    beta2 < (L-1)/(L+1); the max is kept as a guard.
    """
    _validate_list_size(list_size)
    return max(2 / (list_size + 1), 1 - hy_crossover_root(list_size))


def hy_crossover_delta_closed_form(list_size: int) -> float:
    """Equivalent closed form of hy_crossover_delta:
    (L^2 + 8L + 7 - (L-1) sqrt(L^2 + 18L + 17)) / (4 (3L + 1))."""
    _validate_list_size(list_size)
    big = list_size
    root = math.sqrt(big * big + 18 * big + 17)
    return (big * big + 8 * big + 7 - (big - 1) * root) / (4 * (3 * big + 1))


@dataclass(frozen=True)
class ComparisonReport:
    """Where the piecewise-linear bound beats the HY quadratic.

    All tau_del quantities are channel deletion fractions; the comparison is
    carried out along x = 1 - tau_del.  ``interval`` is the open tau_del
    interval on which the piecewise bound is strictly larger, ``p2`` its upper
    endpoint paired with the bound's value there, and ``p1`` the crossing with
    the smallest tau_del (None if the advantage persists down to tau_del = 0).
    ``extra_crossings`` flags any further sign changes beyond the first
    advantage window.
    """

    delta: float
    list_size: int
    delta1: float
    beta2: float
    interval: tuple[float, float] | None = None
    p1: tuple[float, float] | None = None
    p2: tuple[float, float] | None = None
    extra_crossings: bool = False


def _float_positive_intervals(
    pieces: Sequence[LinearPiece],
    delta: Fraction,
    list_size: int,
    start_x: float,
) -> list[tuple[float, float]]:
    """Sub-intervals of [start_x, 1] where (piecewise bound) - (HY quadratic2) > 0.

    Per piece the difference is a concave quadratic, so each piece contributes
    at most one positive interval; adjacent contributions are merged.
    """
    one_minus = float(1 - delta)
    denom = list_size * one_minus + 1
    quad_a = (list_size + 1) / denom
    quad_b = -(list_size + 1) * one_minus / denom
    quad_c = (one_minus - 1) / denom

    found: list[tuple[float, float]] = []
    for piece in pieces:
        lo = max(float(piece.lower), start_x)
        hi = float(piece.upper)
        if hi <= lo:
            continue
        # difference = -quad_a x^2 + (slope - quad_b) x + (intercept - quad_c)
        a2 = -quad_a
        b2 = float(piece.slope) - quad_b
        c2 = float(piece.intercept) - quad_c
        disc = b2 * b2 - 4 * a2 * c2
        if disc <= 0:
            continue
        root = math.sqrt(disc)
        left = (-b2 + root) / (2 * a2)
        right = (-b2 - root) / (2 * a2)
        seg_lo, seg_hi = max(lo, left), min(hi, right)
        if seg_hi <= seg_lo:
            continue
        if found and seg_lo <= found[-1][1] + 1e-12:
            found[-1] = (found[-1][0], max(found[-1][1], seg_hi))
        else:
            found.append((seg_lo, seg_hi))
    return found


def comparison_report(delta: Exact | float, list_size: int) -> ComparisonReport:
    """Compare the piecewise-linear bound against the HY quadratic.

    Below the crossover distance delta1 no advantage window exists and only
    the crossover constants are reported.  Above it, the advantage window in
    tau_del opens at the first breakpoint of the piecewise bound and closes at
    the first crossing found by a per-piece quadratic sweep toward tau_del = 0.
    """
    d = as_fraction(delta)
    _validate_delta(d)
    _validate_list_size(list_size)
    beta2 = hy_crossover_root(list_size)
    delta1 = hy_crossover_delta(list_size)
    if abs(delta1 - hy_crossover_delta_closed_form(list_size)) > 1e-9:
        raise AssertionError("crossover delta closed forms disagree")
    base = ComparisonReport(
        delta=float(d), list_size=list_size, delta1=delta1, beta2=beta2
    )
    if float(d) <= delta1:
        return base

    one_minus = 1 - d
    breakpoint_x = Fraction(list_size + 1, list_size - 1) * one_minus
    p2 = (
        float(1 - breakpoint_x),
        float(Fraction(2, list_size - 1) * one_minus),
    )
    bound = insertion_bound_piecewise(d, list_size)
    windows = _float_positive_intervals(
        bound.pieces, d, list_size, start_x=float(breakpoint_x)
    )
    if not windows:
        # delta1 is a float threshold; just past it the window can be too thin
        # for float roots to resolve.  Report the landmarks only.
        return ComparisonReport(
            delta=float(d),
            list_size=list_size,
            delta1=delta1,
            beta2=beta2,
            p2=p2,
        )
    first_lo, first_hi = windows[0]
    upper_tau = float(1 - breakpoint_x)
    if first_hi >= 1 - 1e-12:
        interval = (0.0, upper_tau)
        p1 = None
    else:
        value_at_crossing = float(insertion_bound(d, list_size, as_fraction(first_hi)))
        interval = (1 - first_hi, upper_tau)
        p1 = (1 - first_hi, value_at_crossing)
    return ComparisonReport(
        delta=float(d),
        list_size=list_size,
        delta1=delta1,
        beta2=beta2,
        interval=interval,
        p1=p1,
        p2=p2,
        extra_crossings=len(windows) > 1,
    )
