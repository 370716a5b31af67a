"""Acceptance criteria for the whole library, runnable as one regression gate.

Each criterion is a standalone callable returning a CriterionResult; `run_all`
executes every one and prints a single pass/fail line per criterion.  The
same functions back the pytest acceptance suite and the `regress` CLI
subcommand, so both surfaces agree by construction.
"""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

from . import figures
from .bounds import (
    comparison_report,
    hy_crossover_delta,
    hy_crossover_delta_closed_form,
    hy_quadratic1,
    hy_quadratic2,
    insertion_bound,
    insertion_bound_piecewise,
)
from .codes import Code, helberg, helberg_weights, vt_binary, vt_qary
from .combinatorics import (
    alternating_binomial_sum,
    count_v_covers,
    elimination_row,
    elimination_tail_term,
    enumerate_v_covers,
    inclusion_exclusion_coefficient,
    signed_cover_sum,
)
from .verify import (
    check_ball_containment,
    check_bound_region,
    decoder_ball_matches_channel,
    list_decodable,
    min_levenshtein_distance,
    verdict_payload,
)
from .words import Word, all_words, words_up_to

RANDOM_CODE_SEED = 2024


@dataclass
class CriterionResult:
    number: int
    name: str
    ok: bool
    detail: str = ""
    skipped: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f" [{self.detail}]" if (not self.ok and self.detail) else ""
        skips = f" (skipped: {len(self.skipped)})" if self.skipped else ""
        return f"[{self.number:2d}] {status} {self.name}{extra}{skips} ({self.elapsed:.2f}s)"


def _fail(result: CriterionResult, detail: str) -> CriterionResult:
    result.ok = False
    result.detail = detail
    return result


def criterion_cover_oracle() -> CriterionResult:
    """Cover-count recursion equals brute-force enumeration for j <= 5."""
    res = CriterionResult(1, "cover counts: recursion matches enumeration (j <= 5)", True)
    for j in range(1, 6):
        for v in range(1, j + 1):
            for ell in range(1, comb(j, v) + 1):
                fast = count_v_covers(j, ell, v)
                slow = enumerate_v_covers(j, ell, v)
                if fast != slow:
                    return _fail(res, f"(j={j}, ell={ell}, v={v}): {fast} != {slow}")
    return res


def criterion_coefficient_closed_form() -> CriterionResult:
    """Signed cover sums collapse to the single-binomial closed form, j <= 9."""
    res = CriterionResult(2, "inclusion-exclusion coefficient closed form (j <= 9)", True)
    for j in range(2, 10):
        for v in range(1, j + 1):
            closed = inclusion_exclusion_coefficient(j, v)
            summed = signed_cover_sum(j, v)
            expected = (-1) ** (j - v) * comb(j - 1, v - 1)
            if not closed == summed == expected:
                return _fail(res, f"(j={j}, v={v}): {closed}, {summed}, {expected}")
    return res


def criterion_telescoping_sum() -> CriterionResult:
    """The alternating double-binomial sum equals 1 for all 1 <= v <= j <= 30."""
    res = CriterionResult(3, "alternating binomial sum telescopes to 1 (j <= 30)", True)
    for j in range(1, 31):
        for v in range(1, j + 1):
            value = alternating_binomial_sum(j, v)
            if value != 1:
                return _fail(res, f"(j={j}, v={v}): {value}")
    return res


def criterion_elimination_rows() -> CriterionResult:
    """Row invariants, tail closed form, sign pattern, and pair margins, L <= 12."""
    res = CriterionResult(4, "elimination rows: invariants, signs, margins (L <= 12)", True)
    for L in range(2, 13):
        for r in range(1, L + 1):
            row = elimination_row(L, r)  # constructor enforces r, -1, zero block
            for j in range(r + 2, L + 2):
                coeff = row.coefficient(j)
                if coeff == 0:
                    return _fail(res, f"(L={L}, r={r}, j={j}): unexpected zero")
                if ((j - r) % 2 == 0) != (coeff > 0):
                    return _fail(res, f"(L={L}, r={r}, j={j}): sign pattern broken")
                if r >= 2 and Fraction(coeff) != elimination_tail_term(r, j):
                    return _fail(res, f"(L={L}, r={r}, j={j}): tail closed form")
            if r >= 2:
                for j in range(r + 2, L + 1):
                    lhs = (j + 1) * abs(row.coefficient(j)) - abs(row.coefficient(j + 1))
                    rhs = comb(j - 3, r - 1) * (j - Fraction(r - 1, j - r - 1))
                    if Fraction(lhs) != rhs or rhs < 3:
                        return _fail(res, f"(L={L}, r={r}, j={j}): margin {lhs} vs {rhs}")
    return res


def criterion_bound_consistency() -> CriterionResult:
    """Max form and piece decomposition agree exactly on dense rational grids."""
    res = CriterionResult(
        5, "insertion bound: max form == pieces on 20x11 grid x 1000 points", True
    )
    for L in range(2, 13):
        for i in range(1, 21):
            delta = Fraction(i, 21)
            pieces = insertion_bound_piecewise(delta, L)
            threshold_r_min = next(
                r
                for r in range(1, L + 1)
                if Fraction(L * (L + 1), r * (r + 1)) * (1 - delta) < 1
            )
            if pieces.r_min != threshold_r_min or len(pieces.pieces) != L - threshold_r_min + 1:
                return _fail(res, f"(delta={delta}, L={L}): piece structure")
            step = delta / 999
            for k in range(1000):
                x = (1 - delta) + step * k
                direct = insertion_bound(delta, L, x)
                if direct != pieces.evaluate(x):
                    return _fail(res, f"(delta={delta}, L={L}, x={x}): mismatch")
                if x > 1 - delta and direct <= 0:
                    return _fail(res, f"(delta={delta}, L={L}, x={x}): not positive")
    return res


def criterion_hy_golden() -> CriterionResult:
    """Crossover constants and comparison landmarks match their closed forms."""
    res = CriterionResult(6, "HY comparison: crossover constants and landmarks", True)
    golden = (27 - math.sqrt(57)) / 28
    if abs(hy_crossover_delta(2) - golden) > 1e-9:
        return _fail(res, f"delta1(2) = {hy_crossover_delta(2)} vs {golden}")
    if abs(hy_crossover_delta_closed_form(2) - golden) > 1e-9:
        return _fail(res, "closed form delta1(2) off")

    report = comparison_report(Fraction(9, 10), 2)
    if report.p2 != (0.7, 0.2):
        return _fail(res, f"P2 = {report.p2}")
    c = 0.1
    alpha = (17 * c + 4 + math.sqrt(-143 * c * c - 188 * c + 124)) / 18
    if report.p1 is None or abs(report.p1[0] - (1 - alpha)) > 1e-6:
        return _fail(res, f"P1 = {report.p1} vs tau_d {1 - alpha}")
    if report.interval is None:
        return _fail(res, "advantage interval missing")
    lo, hi = report.interval
    if hi != 0.7 or abs(lo - (1 - alpha)) > 1e-6:
        return _fail(res, f"interval = {report.interval}")

    for L in (2, 3, 5, 10):
        for i in range(1, 50):
            for k in range(1, 50):
                delta = 1 - Fraction(i, 50)
                x = Fraction(k, 50)
                if not hy_quadratic2(delta, L, x) < hy_quadratic1(delta, x):
                    return _fail(res, f"phi2 >= phi1 at (L={L}, delta={delta}, x={x})")
    return res


def criterion_code_distances() -> CriterionResult:
    """Constructed codes reach their guaranteed minimum Levenshtein distances."""
    res = CriterionResult(7, "code families meet distance floors (VT, q-ary VT, Helberg)", True)
    for n in range(1, 11):
        for a in range(n + 1):
            code = vt_binary(n, a)
            if code.size < 2:
                continue
            d = min_levenshtein_distance(code)
            if d < 4:
                return _fail(res, f"VT_{a}({n}): distance {d} < 4")
    for n in range(1, 7):
        for a in range(n):
            for b in range(3):
                try:
                    code = vt_qary(n, 3, a, b)
                except ValueError:
                    continue  # empty residue class
                if code.size < 2:
                    continue
                d = min_levenshtein_distance(code)
                if d < 4:
                    return _fail(res, f"VT3 (n={n}, a={a}, b={b}): distance {d} < 4")
    for n in range(3, 9):
        modulus = helberg_weights(2, 2, n + 1)[n]
        for a in range(modulus):
            try:
                code = helberg(2, n, 2, a)
            except ValueError:
                continue  # empty residue class
            if code.size < 2:
                continue
            d = min_levenshtein_distance(code)
            if d < 6:
                return _fail(res, f"Helberg (n={n}, a={a}): distance {d} < 6")
    return res


def _random_binary_code(rng: random.Random, n: int, size: int) -> Code:
    picks = rng.sample(range(2**n), size)
    members = frozenset(
        Word(tuple((value >> (n - 1 - i)) & 1 for i in range(n)), 2) for value in picks
    )
    return Code(q=2, n=n, codewords=members)


def criterion_region_harness() -> CriterionResult:
    """Zero violations across the guaranteed region for VT and random codes."""
    res = CriterionResult(8, "bound region harness: zero violations (VT + 50 random)", True)
    subjects: list[tuple[str, Code]] = [
        ("VT_0(6)", vt_binary(6, 0)),
        ("VT_0(8)", vt_binary(8, 0)),
    ]
    rng = random.Random(RANDOM_CODE_SEED)
    for index in range(50):
        n = rng.choice([5, 6, 7])
        size = rng.randint(4, 16)
        subjects.append((f"random[{index}] (n={n}, |C|={size})", _random_binary_code(rng, n, size)))
    for label, code in subjects:
        for list_size in (2, 3):
            report = check_bound_region(code, list_size)
            for pair in report.skipped:
                res.skipped.append(f"{label} L={list_size} pair={pair}")
            if not report.ok:
                first = report.violations[0]
                return _fail(
                    res,
                    f"{label} L={list_size}: violation at "
                    f"(t_ins={first.t_ins}, t_del={first.t_del})",
                )
    return res


def criterion_ball_containment() -> CriterionResult:
    """Insdel balls sit inside the summed-radius Levenshtein ball (exhaustive)."""
    res = CriterionResult(9, "insdel balls contained in Levenshtein balls (|y| <= 3)", True)
    samples = list(words_up_to(2, 3))
    radii = [(a, b) for a in range(3) for b in range(3)]
    failures = check_ball_containment(samples, radii)
    if failures:
        y, a, b = failures[0]
        return _fail(res, f"containment fails at ({y.to_text() or 'empty'}, {a}, {b})")
    return res


def criterion_direction_equivalence() -> CriterionResult:
    """Channel-output view equals swapped-radii decoder-ball view (exhaustive)."""
    res = CriterionResult(10, "decoder-ball radius swap matches channel outputs (n <= 4)", True)
    for centre in words_up_to(2, 4):
        for t_ins in range(3):
            for t_del in range(min(2, len(centre)) + 1):
                if not decoder_ball_matches_channel(centre, t_ins, t_del):
                    return _fail(
                        res,
                        f"mismatch at centre={centre.to_text() or 'empty'}, "
                        f"t_ins={t_ins}, t_del={t_del}",
                    )
    return res


def criterion_determinism() -> CriterionResult:
    """CSV rows and verdicts are byte-identical across runs and worker counts."""
    res = CriterionResult(11, "determinism: CSV bytes and verdicts stable", True)
    table_args = (Fraction(9, 10), 2, 64)
    for maker in (
        lambda: figures.bound_table_rows(*table_args),
        lambda: figures.comparison_rows(*table_args),
        lambda: figures.bound_profile_rows(Fraction(9, 10), (2, 3, 5, 10), 64),
        lambda: figures.rate_region_rows(2, (Fraction(1, 10), Fraction(1, 4)), 64),
    ):
        first, second = maker(), maker()
        if "\n".join(first) != "\n".join(second):
            return _fail(res, "CSV rows differ across runs")
    code = vt_binary(6, 0)
    serial = json.dumps(
        verdict_payload(list_decodable(code, 1, 1, 2, want_witness=True, workers=1)),
        sort_keys=True,
    )
    for workers in (2, 3):
        other = json.dumps(
            verdict_payload(
                list_decodable(code, 1, 1, 2, want_witness=True, workers=workers)
            ),
            sort_keys=True,
        )
        if serial != other:
            return _fail(res, f"verdict differs at workers={workers}")
    # a non-decodable witness case: the full binary cube at radius 1
    cube = Code(q=2, n=3, codewords=frozenset(all_words(2, 3)))
    baseline = json.dumps(
        verdict_payload(list_decodable(cube, 1, 0, 1, want_witness=True, workers=1)),
        sort_keys=True,
    )
    again = json.dumps(
        verdict_payload(list_decodable(cube, 1, 0, 1, want_witness=True, workers=3)),
        sort_keys=True,
    )
    if baseline != again:
        return _fail(res, "witness verdict differs across worker counts")
    return res


ALL_CRITERIA: tuple[Callable[[], CriterionResult], ...] = (
    criterion_cover_oracle,
    criterion_coefficient_closed_form,
    criterion_telescoping_sum,
    criterion_elimination_rows,
    criterion_bound_consistency,
    criterion_hy_golden,
    criterion_code_distances,
    criterion_region_harness,
    criterion_ball_containment,
    criterion_direction_equivalence,
    criterion_determinism,
)


def run_all(echo: Callable[[str], None] = print) -> list[CriterionResult]:
    """Run every acceptance criterion, printing one line each; returns results."""
    results = []
    for criterion in ALL_CRITERIA:
        start = time.perf_counter()
        try:
            result = criterion()
        except Exception as exc:  # a crash is a failure, not an abort
            result = CriterionResult(
                len(results) + 1, criterion.__name__, False, detail=repr(exc)
            )
        result.elapsed = time.perf_counter() - start
        results.append(result)
        echo(result.line())
    passed = sum(r.ok for r in results)
    echo(f"{passed}/{len(results)} acceptance criteria passed")
    return results
