"""Exact inequality and equality predicates over candidate tuples.

Each filter is a named polynomial in (lambda, g, nu) evaluated with exact
rational arithmetic: an inequality filter passes iff the value is >= 0, an
equality filter iff it is exactly 0.  Rational bounds are never rounded; a
bound like g <= (lambda^2 + 7 lambda - 102)/10 is stored with cleared
denominator as lambda^2 + 7 lambda - 10 g - 102 >= 0.

The constraint families:

* Castelnuovo's bound on the genus of a nondegenerate curve of degree d in
  projective s-space (here applied to curve sections, s = 4),
* the Livorni-Sommese inequalities for polarized smooth threefolds,
* the product and log-concavity restrictions on Cremona multidegrees,
* Le Barz's count of 4-secant lines of a smooth surface in P^5, which bounds
  the number of blown-up points of the reduction because a surface cut out by
  cubics has no 4-secants and every exceptional line contributes one,
* the pluridegree inequalities valid when the reduction is of log-general
  type,
* the equality systems characterizing the exceptional adjunction structures
  (scrolls, quadric/del Pezzo/Veronese fibrations, Mukai varieties, conic
  bundles).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping, Union

from .exactq import G, NU, Poly, poly
from .invariants import InvariantTable, ReductionTable, adjoint_power, pluridegrees
from .multidegree import Multidegree

Point = Mapping[str, int]

KIND_GE = "ge"
KIND_EQ = "eq"
KIND_CONDITIONAL = "conditional"

#: Guard relations for conditional filters.
_GUARD_OPS = {"eq": lambda v, b: v == b, "le": lambda v, b: v <= b}


@dataclass(frozen=True)
class Filter:
    """A pure, deterministic predicate on integer tuples.

    ``guard_unless`` lists (polynomial, relation, bound) conditions; when all
    of them hold at a tuple the filter is vacuous there (it applies only
    "unless" the guard situation occurs).
    """

    name: str
    kind: str
    expression: Poly
    provenance: str
    guard_unless: tuple[tuple[Poly, str, int], ...] = ()

    def value(self, point: Point) -> Fraction:
        return self.expression.eval_at(point)

    def applies(self, point: Point) -> bool:
        if not self.guard_unless:
            return True
        return not all(
            _GUARD_OPS[op](p.eval_at(point), bound) for p, op, bound in self.guard_unless
        )

    def passes(self, point: Point) -> bool:
        if not self.applies(point):
            return True
        v = self.value(point)
        return v == 0 if self.kind == KIND_EQ else v >= 0


@dataclass(frozen=True)
class SectionInvariants:
    """Surface data feeding the 4-secant count: K.H, K^2, c2, and the degree."""

    kappa: Union[Poly, Fraction, int]
    zeta: Union[Poly, Fraction, int]
    theta: Union[Poly, Fraction, int]
    degree: Union[Poly, Fraction, int]

    @classmethod
    def from_table(cls, table: InvariantTable) -> "SectionInvariants":
        return cls(table["KSHS"], table["KS2"], table["c2TS"], table["H3"])


def castelnuovo_bound(d: int, s: int) -> int:
    """Maximal genus of a nondegenerate degree-d curve in projective s-space.

    With m = floor((d-1)/(s-1)) and eps = d - 1 - m(s-1) the bound is
    C(m, 2)(s-1) + m*eps.  Degrees below 3 (or ambient dimension below 3) are
    rejected; small degrees with d < s simply give bound zero.
    """
    if s < 3:
        raise ValueError("curve ambient dimension must be at least 3")
    if d < 3:
        raise ValueError("curve degree must be at least 3")
    m, eps = divmod(d - 1, s - 1)
    return comb(m, 2) * (s - 1) + m * eps


def livorni_sommese_filters(table: InvariantTable) -> list[Filter]:
    """The four polarized-threefold inequalities, instantiated on a table."""
    e = table.entries
    chi_o, chi_mh = e["chi_O"], e["chi_mH"]
    exprs = [
        e["K3"] + 6 * e["K2H"] + 15 * e["KH2"] + 20 * e["H3"] - e["c3"]
        + 48 * chi_o - 6 * e["c2H"],
        e["KS2"] + 4 * e["KSHS"] + 6 * e["H3"] - e["c2TS"],
        2 * e["c2TS"] - e["c3"] + 2 * G - 2,
        -24 * chi_o + 3 * e["K2H"] + 15 * e["KH2"] + 2 * e["c2H"]
        + 20 * e["H3"] + e["c3"],
    ]
    return [
        Filter(
            name=f"livorni-sommese-{i}",
            kind=KIND_GE,
            expression=expr,
            provenance="Livorni-Sommese inequality for polarized smooth threefolds",
        )
        for i, expr in enumerate(exprs, start=1)
    ]


#: The essential multidegree inequalities, as (name, lhs indices, rhs indices).
_ESSENTIAL_PRODUCTS = (
    ("deg1*deg3>=deg4", (1, 3), (4,)),
    ("deg1*deg4>=deg5", (1, 4), (5,)),
    ("deg3^2>=deg2*deg4", (3, 3), (2, 4)),
    ("deg4^2>=deg3*deg5", (4, 4), (3, 5)),
    ("deg5^2>=deg4*deg6", (5, 5), (4, 6)),
)


def cremona_degree_filters(md: Multidegree) -> list[Filter]:
    """The five product/log-concavity constraints that cut the pair domain.

    Applying the full restriction family to the symbolic multidegree reduces
    to these five; they are emitted as exact polynomials in (lambda, g).
    """
    out = []
    for name, lhs, rhs in _ESSENTIAL_PRODUCTS:
        expr = poly(1)
        for i in lhs:
            expr = expr * poly(md[i])
        sub = poly(1)
        for i in rhs:
            sub = sub * poly(md[i])
        out.append(
            Filter(
                name=name,
                kind=KIND_GE,
                expression=expr - sub,
                provenance="product/log-concavity restriction on Cremona multidegrees",
            )
        )
    return out


def quadrisecant_poly(si: SectionInvariants) -> Poly:
    """Le Barz's 4-secant line count of a smooth surface in P^5 (line sum omitted)."""
    k, z, h, l = poly(si.kappa), poly(si.zeta), poly(si.theta), poly(si.degree)
    n24 = (
        3 * l**4
        - 36 * k * l**2
        - 6 * z * l**2
        + 6 * h * l**2
        - 90 * l**3
        + 78 * k**2
        + 30 * k * z
        + 3 * z**2
        - 30 * k * h
        - 6 * z * h
        + 3 * h**2
        + 612 * k * l
        + 116 * z * l
        - 100 * h * l
        + 855 * l**2
        - 1980 * k
        - 510 * z
        + 294 * h
        - 2466 * l
    )
    return n24 / 24


def lebarz_quadrisecant_count(si: SectionInvariants) -> Fraction:
    """Exact 4-secant count for numeric surface invariants."""
    return quadrisecant_poly(si).constant_value()


def lebarz_nu_bound(table: InvariantTable) -> Filter:
    """Upper bound on the number of blown-up points, as bound - nu >= 0.

    Instantiated on the base threefold table: its hyperplane surface is cut
    out by cubics, hence has no 4-secant lines, so the 4-secant polynomial
    equals the line correction sum, which is at least the number of
    exceptional lines.
    """
    bound = quadrisecant_poly(SectionInvariants.from_table(table))
    return Filter(
        name="four-secant-nu-bound",
        kind=KIND_GE,
        expression=bound - NU,
        provenance="Le Barz 4-secant count of the hyperplane surface section",
    )


def log_general_filters(rt: ReductionTable, d2_threshold: int = 3) -> list[Filter]:
    """All pluridegree inequalities valid for reductions of log-general type.

    ``d2_threshold`` selects the lower bound asserted for d2 (3 as stated in
    the adjunction-theory inequality list; 1 is the weaker variant, and both
    cut to the same survivors on the built-in pipelines).
    """
    if d2_threshold not in (1, 3):
        raise ValueError("d2 threshold must be 1 or 3")
    d0, d1, d2, d3 = pluridegrees(rt)
    chi_o, chi_mh = rt["chi_O"], rt["chi_mH"]
    chi_diff = chi_o - chi_mh
    src = "pluridegree inequality for reductions of log-general type"
    ladder_guard = ((d3, "eq", 1), (d2, "eq", 5), (d1, "le", 25))
    out = [
        Filter("d1>=1", KIND_GE, d1 - 1, src),
        Filter(f"d2>={d2_threshold}", KIND_GE, d2 - d2_threshold, src),
        Filter("d3>=1", KIND_GE, d3 - 1, src),
        Filter("d1^2>=d2*d0", KIND_GE, d1**2 - d2 * d0, src + " (Hodge type)"),
        Filter("d2^2>=d3*d1", KIND_GE, d2**2 - d3 * d1, src + " (Hodge type)"),
        Filter("d1^3>=d3*d0^2", KIND_GE, d1**3 - d3 * d0**2, src + " (Hodge type)"),
        Filter("d2^3>=d3^2*d0", KIND_GE, d2**3 - d3**2 * d0, src + " (Hodge type)"),
        Filter("5d1>=d0", KIND_GE, 5 * d1 - d0, src),
        Filter("5d2>=d1", KIND_GE, 5 * d2 - d1, src),
        Filter("5d3>=d2", KIND_GE, 5 * d3 - d2, src),
        Filter("4d1>=d0", KIND_CONDITIONAL, 4 * d1 - d0, src, ladder_guard),
        Filter("4d2>=d1", KIND_CONDITIONAL, 4 * d2 - d1, src, ladder_guard),
        Filter("4d3>=d2", KIND_CONDITIONAL, 4 * d3 - d2, src, ladder_guard),
        Filter("chi-window-low", KIND_GE, d2 - 2 * chi_diff + 6, src),
        # strict d2 < 9(chi(O) - chi(O(-H))) over the integers
        Filter("chi-window-high", KIND_GE, 9 * chi_diff - d2 - 1, src),
        Filter(
            "chi-sections",
            KIND_GE,
            3 * d2 + 2 * d1 - d0 + 12 * chi_diff - 32 * chi_o,
            src,
        ),
        Filter(
            "chi-linear",
            KIND_GE,
            2 * d3 + 7 * d2 + 12 * d1 - 3 * d0 + 30 * chi_o + 18 * chi_mh,
            src,
        ),
        Filter(
            "c3-genus",
            KIND_GE,
            24 * chi_diff + 2 * G - 2 - 2 * d2 - rt["c3"],
            src,
        ),
    ]
    return out


#: Names accepted by :func:`adjunction_case_system`.
ADJUNCTION_CASES = (
    "scroll-over-curve",
    "pre-reduction",
    "veronese-fibration",
    "mukai",
    "del-pezzo-fibration",
    "conic-bundle",
)


def adjunction_case_system(
    case: str, table: Union[InvariantTable, ReductionTable]
) -> list[Filter]:
    """Equality constraints defining the exceptional adjunction structures.

    ``scroll-over-curve`` and ``pre-reduction`` (scroll over a surface,
    quadric fibration over a curve, or del Pezzo variety) apply to the base
    table before any reduction exists; the remaining cases apply to a
    reduction table.
    """
    src = f"defining equalities of the {case} adjunction case"

    def eq(name: str, expr: Poly) -> Filter:
        return Filter(name, KIND_EQ, expr, src)

    if case == "scroll-over-curve":
        return [eq("scroll-over-curve:(K+3H)^3", adjoint_power(table, 1, 3, 3))]
    if case == "pre-reduction":
        return [eq("pre-reduction:(K+2H)^3", adjoint_power(table, 1, 2, 3))]
    if case == "veronese-fibration":
        return [
            eq("veronese:(2K+3H)^3", adjoint_power(table, 2, 3, 3)),
            eq("veronese:(2K+3H)^2H", adjoint_power(table, 2, 3, 2)),
        ]
    if case == "mukai":
        return [
            eq("mukai:K3+H3", table["K3"] + table["H3"]),
            eq("mukai:K2H-H3", table["K2H"] - table["H3"]),
            eq("mukai:KH2+H3", table["KH2"] + table["H3"]),
        ]
    d = pluridegrees(table)
    if case == "del-pezzo-fibration":
        return [eq("del-pezzo-fibration:d3", d[3]), eq("del-pezzo-fibration:d2", d[2])]
    if case == "conic-bundle":
        return [eq("conic-bundle:d3", d[3])]
    raise ValueError(f"unknown adjunction case {case!r}; known: {ADJUNCTION_CASES}")
