"""Named generating series for Dyck path statistics and chain counts.

Everything here expands exactly, with Fraction arithmetic on polynomial
coefficients.  Series that the rest of the package consumes are computed by
two independent routes (a functional equation and an explicit radical
expression) and the routes are compared coefficient by coefficient; a
mismatch raises instead of picking a side.

The statistic markers: q marks the statistic of the series at hand (valleys
for the valley series, a four-letter factor for the factor series, the duu
factor for the path system), and y marks valleys in the trivariate system.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import RouteMismatchError, SolveError
from .series import Poly, TruncatedSeries, check_degree_bound, solve_polynomial

# Numerator polynomials of the closed form for the length-3 chain series.
CHAINS3_P_COEFFS = (1, -13, 59, -100, 16, 64)
CHAINS3_Q_COEFFS = (1, -11, 39, -40, -22)


def _poly_x(coeffs, order: int, variables=()) -> TruncatedSeries:
    return TruncatedSeries.polynomial(coeffs, order=order, variables=variables)


@lru_cache(maxsize=None)
def _sqrt_1m4x(order: int) -> TruncatedSeries:
    return _poly_x([1, -4], order).sqrt()


def _require_match(a: TruncatedSeries, b: TruncatedSeries, what: str) -> None:
    n = min(a.order, b.order)
    for i in range(n + 1):
        if a.coeffs[i] != b.coeffs[i]:
            raise RouteMismatchError(
                f"{what}: routes disagree at x^{i}: {a.coeffs[i]} vs {b.coeffs[i]}"
            )


@lru_cache(maxsize=None)
def catalan_series(order: int) -> TruncatedSeries:
    """Dyck path counts by semilength, (1 - sqrt(1-4x)) / (2x)."""
    return (_poly_x([1], order + 1) - _sqrt_1m4x(order + 1)).shift_div_x() / 2


@lru_cache(maxsize=None)
def duu_marked_closed_form(order: int) -> TruncatedSeries:
    """Paths weighted q^(number of duu factors), from the radical expression."""
    variables = ("q",)
    q = Poly.variable("q", variables)
    work = order + 1
    radicand = _poly_x([1, -4, 4 - 4 * q], work, variables)
    numerator = _poly_x([1, -2 * (1 - q)], work, variables) - radicand.sqrt()
    return numerator.shift_div_x().div_monomial(2, "q")


@lru_cache(maxsize=None)
def duu_marked_system(order: int) -> tuple[TruncatedSeries, TruncatedSeries, TruncatedSeries]:
    """Fixed point of the path system with q marking duu factors.

    F counts all paths, G those starting with a peak, H those starting with
    a double rise.  Each round of substitution settles one more coefficient;
    the result is verified against the three equations and against the
    closed form for F.
    """
    variables = ("q",)
    q = Poly.variable("q", variables)
    F = G = H = TruncatedSeries.zero(0, variables)
    for _ in range(order + 1):
        S = 1 + G + H * q
        F, G, H = (
            (1 + F.shift_mul_x() * S).truncate(order),
            S.shift_mul_x().truncate(order),
            (F.shift_mul_x(2) * (S * S)).truncate(order),
        )
    S = 1 + G + H * q
    for name, lhs, rhs in (
        ("F", F, 1 + F.shift_mul_x() * S),
        ("G", G, S.shift_mul_x()),
        ("H", H, F.shift_mul_x(2) * (S * S)),
    ):
        if not (lhs == rhs):
            raise SolveError(f"path system fixed point violates the {name} equation")
    for s in (F, G, H):
        check_degree_bound(s)
    _require_match(F, duu_marked_closed_form(order), "duu-marked path series")
    return F, G, H


@lru_cache(maxsize=None)
def duu_valley_marked_system(
    order: int,
) -> tuple[TruncatedSeries, TruncatedSeries, TruncatedSeries]:
    """The path system refined by y marking valleys alongside q marking duu."""
    variables = ("q", "y")
    q = Poly.variable("q", variables)
    y = Poly.variable("y", variables)
    F = G = H = TruncatedSeries.zero(0, variables)
    for _ in range(order + 1):
        S = 1 + (G + H * q) * y
        F, G, H = (
            (1 + F.shift_mul_x() * S).truncate(order),
            S.shift_mul_x().truncate(order),
            (F.shift_mul_x(2) * (S * S)).truncate(order),
        )
    S = 1 + (G + H * q) * y
    for name, lhs, rhs in (
        ("F", F, 1 + F.shift_mul_x() * S),
        ("G", G, S.shift_mul_x()),
        ("H", H, F.shift_mul_x(2) * (S * S)),
    ):
        if not (lhs == rhs):
            raise SolveError(f"refined path system violates the {name} equation")
    for s in (F, G, H):
        check_degree_bound(s)
    F2, G2, H2 = duu_marked_system(order)
    _require_match(F.subs(y=1), F2, "refined system F at y=1")
    _require_match(G.subs(y=1), G2, "refined system G at y=1")
    _require_match(H.subs(y=1), H2, "refined system H at y=1")
    return F, G, H


@lru_cache(maxsize=None)
def valley_marked_series(order: int) -> TruncatedSeries:
    """Paths weighted q^(number of valleys)."""
    variables = ("q",)
    q = Poly.variable("q", variables)
    work = order + 1
    radicand = _poly_x([1, -2 * (1 + q), (1 - q) ** 2], work, variables)
    numerator = _poly_x([1, -(1 - q)], work, variables) - radicand.sqrt()
    return numerator.shift_div_x().div_monomial(2, "q")


def _solve_marked(coeff_lists, order: int) -> TruncatedSeries:
    variables = ("q",)
    coeffs = [_poly_x(c, order, variables) for c in coeff_lists]
    solution = solve_polynomial(coeffs, 1)
    check_degree_bound(solution)
    return solution


@lru_cache(maxsize=None)
def dduu_marked_series(order: int) -> TruncatedSeries:
    """Paths weighted q^(number of dduu factors)."""
    q = Poly.variable("q", ("q",))
    return _solve_marked(
        (
            [1, -(1 - q)],
            [-1, 2 * (1 - q), -(1 - q)],
            [0, q, 1 - q],
        ),
        order,
    )


@lru_cache(maxsize=None)
def dudu_marked_series(order: int) -> TruncatedSeries:
    """Paths weighted q^(number of dudu factors)."""
    q = Poly.variable("q", ("q",))
    return _solve_marked(
        (
            [1, 1 - q],
            [-1, -(1 - q), 1 - q],
            [0, 1],
        ),
        order,
    )


@lru_cache(maxsize=None)
def duuu_marked_series(order: int) -> TruncatedSeries:
    """Paths weighted q^(number of duuu factors)."""
    q = Poly.variable("q", ("q",))
    return _solve_marked(
        (
            [0, 1 - q],
            [1, -3 * (1 - q)],
            [-1, 3 * (1 - q)],
            [0, q],
        ),
        order,
    )


@lru_cache(maxsize=None)
def factor_count_series(
    order: int,
) -> tuple[TruncatedSeries, TruncatedSeries, TruncatedSeries]:
    """Total counts of dduu, dudu and duuu factors over all paths, by semilength.

    Each series is the q-derivative at q = 1 of the matching marked series,
    checked against its radical expression.
    """
    dduu = dduu_marked_series(order).derivative("q").subs(q=1)
    dudu = dudu_marked_series(order).derivative("q").subs(q=1)
    duuu = duuu_marked_series(order).derivative("q").subs(q=1)

    s = _sqrt_1m4x(order + 1)
    dduu_closed = (
        _poly_x([1, -5, 5], order + 1) - _poly_x([1, -3, 1], order + 1) * s
    ).shift_div_x() / (2 * s)
    dudu_closed = (_poly_x([1, -3], order) - _poly_x([1, -1], order) * _sqrt_1m4x(order)) / (
        2 * _sqrt_1m4x(order)
    )
    s2 = _sqrt_1m4x(order + 2)
    duuu_num = _poly_x([-1, 6, -9, 2], order + 2) + _poly_x([1, -4, 3], order + 2) * s2
    duuu_den = _poly_x([1, -4], order + 2) - s2
    duuu_closed = duuu_num.shift_div_x(2) / duuu_den.shift_div_x(1)

    _require_match(dduu, dduu_closed, "dduu factor counts")
    _require_match(dudu, dudu_closed, "dudu factor counts")
    _require_match(duuu, duuu_closed, "duuu factor counts")
    return dduu, dudu, duuu


@lru_cache(maxsize=None)
def ordered_valley_pairs_series(order: int) -> TruncatedSeries:
    """Sum of v(v-1) over paths, v the valley count (ordered distinct pairs)."""
    v = valley_marked_series(order)
    return v.derivative("q").derivative("q").subs(q=1)


@lru_cache(maxsize=None)
def ordered_valley_triples_series(order: int) -> TruncatedSeries:
    """Sum of v(v-1)(v-2) over paths, checked against its radical expression."""
    v = valley_marked_series(order)
    direct = v.derivative("q").derivative("q").derivative("q").subs(q=1)
    s = _sqrt_1m4x(order + 1)
    closed = (
        3
        * (
            _poly_x([1, -11, 40, -50, 10], order + 1)
            - _poly_x([1, -9, 24, -16], order + 1) * s
        ).shift_div_x()
        / (_poly_x([1, -8, 16], order + 1) * s)
    )
    _require_match(direct, closed, "ordered valley triples")
    return direct


@lru_cache(maxsize=None)
def disjoint_valley_duu_series(order: int) -> TruncatedSeries:
    """Counts of disjoint (valley, duu factor) pairs over all paths.

    Every duu factor starts with its own valley; subtracting the duu count
    from the mixed yq-derivative removes exactly those incestuous pairs.
    """
    F, _, _ = duu_valley_marked_system(order)
    mixed = F.derivative("y").derivative("q").subs(q=1, y=1)
    plain = F.derivative("q").subs(q=1, y=1)
    direct = mixed - plain

    s = _sqrt_1m4x(order + 1)
    closed = (
        _poly_x([-2, 15, -30, 10], order + 1) + _poly_x([2, -11, 12], order + 1) * s
    ).shift_div_x() / (2 * (_poly_x([1, -4], order + 1) * s))
    _require_match(direct, closed, "disjoint valley/duu pairs")
    return direct


@lru_cache(maxsize=None)
def sc2_series_from_derivatives(order: int) -> TruncatedSeries:
    """Length-2 chain counts assembled from statistic derivatives."""
    F, _, _ = duu_marked_system(order)
    duu_count = F.derivative("q").subs(q=1)
    return 2 * duu_count + ordered_valley_pairs_series(order)


@lru_cache(maxsize=None)
def sc2_series_closed_form(order: int) -> TruncatedSeries:
    s = _sqrt_1m4x(order)
    radical = _poly_x([1, -4], order) * s
    return (_poly_x([1, -6, 6], order) - radical) / (-radical)


def sc2_series(order: int) -> TruncatedSeries:
    """Length-2 saturated chain counts by semilength; both routes must agree."""
    direct = sc2_series_from_derivatives(order)
    _require_match(direct, sc2_series_closed_form(order), "length-2 chain series")
    return direct


@lru_cache(maxsize=None)
def sc3_series_from_derivatives(order: int) -> TruncatedSeries:
    """Length-3 chain counts assembled from statistic derivatives."""
    dduu, dudu, duuu = factor_count_series(order)
    return (
        2 * (dduu + dudu + duuu)
        + ordered_valley_triples_series(order)
        + 6 * disjoint_valley_duu_series(order)
    )


@lru_cache(maxsize=None)
def sc3_series_closed_form(order: int) -> TruncatedSeries:
    work = order + 1
    numerator = (
        _poly_x(CHAINS3_P_COEFFS, work)
        - _poly_x(CHAINS3_Q_COEFFS, work) * _sqrt_1m4x(work)
    )
    return numerator.shift_div_x() / (_poly_x([1, -4], work) ** 3)


def sc3_series(order: int) -> TruncatedSeries:
    """Length-3 saturated chain counts by semilength; both routes must agree."""
    direct = sc3_series_from_derivatives(order)
    _require_match(direct, sc3_series_closed_form(order), "length-3 chain series")
    return direct


def integer_coefficients(series: TruncatedSeries) -> list[int]:
    """Coefficients of a plain series as ints; raises if any is not integral."""
    out = []
    for c in series.coeffs:
        frac = Fraction(c)
        if frac.denominator != 1:
            raise ValueError(f"coefficient {frac} is not an integer")
        out.append(frac.numerator)
    return out
