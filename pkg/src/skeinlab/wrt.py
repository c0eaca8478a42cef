"""Surgery invariants at the odd roots of unity, and their d-sweeps.

``wrt_invariant`` evaluates a surgery presentation by coloring every
surgery component with each color 0 .. d-1, weighting by the loop
values, summing the colored brackets, and scaling by eta^(1+n).  When
1+n is even the eta power is an exact field element and the whole
computation stays in CycloNum; odd powers force the 30-digit float
path.

The rest of the module materializes functions on the evaluation-point
family (one value per level and sign, poles recorded as exceptions) and
packages the cross-checks the test suite leans on: the torus pipeline
against its closed form, the recoloring identity, the Mobius function
of the dimension argument, and the 2x2 independence certificate.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

import cmath
import mpmath

from .algebra import (
    CycloNum,
    EvalPoint,
    cyclo_to_complex,
    delta_color,
    evaluate_at,
    principal_log_mobius,
)
from .bracket import colored_bracket
from .diagrams import (
    SurgeryPresentation,
    _signature,
    attach_meridian,
    borromean_fixture,
    linking_and_signature,
    unknot_fixture,
)
from .errors import (
    ColorRangeError,
    FramingError,
    NonzeroSignatureError,
    OddEtaPowerError,
    PoleError,
    SameParameterError,
)
from .recoupling import meridian_series, omega_data


def _thread_count() -> int:
    raw = os.environ.get("SKEINLAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def parallel_map(fn, items):
    """Order-preserving map over ``items``, threaded if SKEINLAB_THREADS > 1."""
    items = list(items)
    workers = _thread_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# -- the invariant -----------------------------------------------------------


def wrt_invariant(pres: SurgeryPresentation, p: EvalPoint, mode: str = "auto",
                  precision: int = 30):
    """Invariant of the surgered manifold with its residual colored link.

    Returns an exact CycloNum when the eta power 1+n is even (n = number
    of surgery components) and ``mode`` is "auto" or "exact"; otherwise
    a 30-digit mpmath complex.  Presentations must have zero-signature
    surgery linking and zero self-writhe on every surgery component
    (apply twist corrections first if not), and the residual colors must
    fit the level.
    """
    if mode not in ("auto", "exact", "float"):
        raise ValueError(f"unknown mode {mode!r}")
    link = pres.link
    surgery = tuple(pres.surgery_components)
    n = len(surgery)
    if link.n_components:
        mat, _ = linking_and_signature(link)
        sub = [[mat[i][j] for j in surgery] for i in surgery]
        sigma = _signature(sub)
        if sigma != 0:
            raise NonzeroSignatureError(
                f"surgery linking matrix has signature {sigma}"
            )
        for j in surgery:
            if mat[j][j] != 0:
                raise FramingError(
                    f"surgery component {j} has self-writhe {mat[j][j]}"
                )
    for j in sorted(pres.extra_colors):
        c = pres.extra_colors[j]
        if not 0 <= c <= 2 * p.d - 2:
            raise ColorRangeError(
                f"color {c} on component {j} outside 0..{2 * p.d - 2}"
            )
    even_power = (1 + n) % 2 == 0
    if mode == "exact" and not even_power:
        raise OddEtaPowerError(
            f"eta^{1 + n} is not exact; use float mode"
        )
    use_exact = even_power and mode != "float"

    loop_values = [evaluate_at(delta_color(c), p) for c in range(p.d)]
    colors = [0] * link.n_components
    for j, c in pres.extra_colors.items():
        colors[j] = c
    total = CycloNum.zero(p.d)
    for combo in product(range(p.d), repeat=n):
        weight = CycloNum.one(p.d)
        for j, c in zip(surgery, combo):
            colors[j] = c
            weight = weight * loop_values[c]
        total = total + weight * colored_bracket(link, colors, point=p)

    if use_exact:
        eta_sq = omega_data(p.d).eta_sq
        out = total
        for _ in range((1 + n) // 2):
            out = out * eta_sq
        return out
    om = omega_data(p.d, precision)
    digits = max(precision, 15)
    with mpmath.workdps(digits):
        return mpmath.mpf(om.eta) ** (1 + n) * cyclo_to_complex(total, digits)


@lru_cache(maxsize=None)
def _torus_presentation(a: int) -> SurgeryPresentation:
    """0-framed Borromean rings with an a-colored meridian on component 1."""
    return attach_meridian(borromean_fixture(), 1, a, name=f"torus+meridian({a})")


@lru_cache(maxsize=None)
def _s1xs2_presentation() -> SurgeryPresentation:
    return SurgeryPresentation(unknot_fixture(0), (0,), {}, name="s1xs2")


def torus_invariant(a: int, p: EvalPoint, mode: str = "auto",
                    precision: int = 30):
    """Invariant of the 3-torus with an a-colored core circle.

    Runs the full surgery pipeline; the closed form it must reproduce is
    meridian_series(a, p).
    """
    return wrt_invariant(_torus_presentation(a), p, mode, precision)


def recolor_check(p: EvalPoint) -> bool:
    """Do the 1- and (2d-2)-colored meridian series agree and equal 1?"""
    if p.d < 2:
        raise ValueError("recoloring needs d >= 2 so that 2d-2 >= 2")
    s1 = meridian_series(1, p)
    s2 = meridian_series(2 * p.d - 2, p)
    return s1 == s2 and s1.is_one()


def f_mobius(z) -> complex:
    """(pi*i - 3 log z)/(pi*i - log z), principal branch.

    Undefined on the closed negative real axis; f(1) = 1, and on the
    unit circle z = e^(i*t) with |t| < pi it is the real number
    (pi - 3t)/(pi - t).
    """
    return principal_log_mobius(z)


def independence_certificate(d1: int, d2: int) -> tuple[int, bool]:
    """2x2 determinant witnessing that ⟨empty⟩ and ⟨K2⟩ are not proportional.

    Rows are the exact (meridian_series(0), meridian_series(2)) values
    at levels d1 and d2; the determinant is d2 - d1, so any distinct
    pair of levels certifies independence.
    """
    if d1 == d2:
        raise SameParameterError(f"need two distinct levels, got {d1} twice")
    if d1 < 1 or d2 < 1:
        raise ValueError("levels must be >= 1")
    rows = []
    for d in (d1, d2):
        pt = EvalPoint(d, 1)
        empty = meridian_series(0, pt).as_rational()
        k2 = meridian_series(2, pt).as_rational()
        assert empty is not None and k2 is not None, "series values must be rational"
        rows.append((empty, k2))
    det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    det = Fraction(det)
    assert det.denominator == 1
    return int(det), det != 0


# -- functions on the parameter family ---------------------------------------


@dataclass(eq=False)
class GammaFunction:
    """A quantity tabulated over a window of levels, almost everywhere.

    ``values[d]`` is the (sign +, sign -) pair; levels where the
    quantity is undefined go to ``exceptions`` instead.  Two tabulations
    are equal when they share the window and agree at every level that
    is exceptional in neither.
    """

    quantity: str
    window: tuple[int, int]
    values: dict
    exceptions: frozenset = field(default_factory=frozenset)

    def __eq__(self, other):
        if not isinstance(other, GammaFunction):
            return NotImplemented
        if self.window != other.window:
            return False
        skip = self.exceptions | other.exceptions
        lo, hi = self.window
        return all(
            self.values[d] == other.values[d]
            for d in range(lo, hi + 1)
            if d not in skip
        )


GAMMA_QUANTITIES = ("empty", "k1", "k2", "ratio", "f")

_SERIES_COLOR = {"empty": 0, "k1": 1, "k2": 2}


def _gamma_value(quantity: str, d: int):
    if quantity in _SERIES_COLOR:
        a = _SERIES_COLOR[quantity]
        return tuple(meridian_series(a, EvalPoint(d, s)) for s in (1, -1))
    if quantity == "ratio":
        out = []
        for s in (1, -1):
            pt = EvalPoint(d, s)
            den = meridian_series(0, pt)
            if den.is_zero():
                raise PoleError(f"empty-diagram value vanishes at d={d}")
            out.append(meridian_series(2, pt) / den)
        return tuple(out)
    if quantity == "f":
        return tuple(
            f_mobius(cmath.exp(complex(0, s * cmath.pi / (2 * d + 1))))
            for s in (1, -1)
        )
    raise ValueError(f"unknown quantity {quantity!r}")


def gamma_tabulate(quantity: str, window: tuple[int, int]) -> GammaFunction:
    """Tabulate one named quantity over ``window`` = (lo, hi), both signs."""
    lo, hi = window
    if lo < 1 or hi < lo:
        raise ValueError(f"bad window {window}")

    def one(d):
        try:
            return d, _gamma_value(quantity, d)
        except PoleError:
            return d, None

    values = {}
    exceptions = set()
    for d, pair in parallel_map(one, range(lo, hi + 1)):
        if pair is None:
            exceptions.add(d)
        else:
            values[d] = pair
    return GammaFunction(quantity, (lo, hi), values, frozenset(exceptions))


# -- reporting ----------------------------------------------------------------


@dataclass
class InvariantReport:
    """Computed-vs-predicted rows for one presentation."""

    name: str
    rows: list

    def all_pass(self) -> bool:
        return all(r["status"] == "PASS" for r in self.rows)


def torus_report(a: int, d_values, mode: str = "auto",
                 precision: int = 30) -> InvariantReport:
    """Run the torus pipeline over levels and compare to the closed form."""
    rows = []
    for d in d_values:
        for sign in (1, -1):
            p = EvalPoint(d, sign)
            got = torus_invariant(a, p, mode, precision)
            want = meridian_series(a, p)
            if isinstance(got, CycloNum):
                ok = got == want
                diff = 0 if ok else abs(cyclo_to_complex(got - want, precision))
                row_mode = "exact"
            else:
                digits = max(precision, 15)
                with mpmath.workdps(digits):
                    diff = abs(got - cyclo_to_complex(want, digits))
                    ok = diff < mpmath.mpf(10) ** -9
                row_mode = "float"
            rows.append({
                "d": d,
                "sign": sign,
                "value": got,
                "prediction": want,
                "difference": diff,
                "mode": row_mode,
                "status": "PASS" if ok else "FAIL",
            })
    return InvariantReport(name=f"torus+meridian({a})", rows=rows)
