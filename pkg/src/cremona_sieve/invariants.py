"""Symbolic intersection-theory invariants of the base locus.

Everything here is a closed-form polynomial in the degree ``lambda`` and the
sectional genus ``g`` of the base locus (plus the number of blown-up points
``nu`` once a reduction enters).  The derivation follows the classical route:

* the Hilbert polynomial is interpolated in the binomial basis from the
  cohomology of the defining linear system,
* the Chern/Segre degrees of the tangent and normal bundles, the canonical
  powers and the hyperplane-surface invariants are the unique solution of a
  rational linear system assembled from Hirzebruch-Riemann-Roch, the
  sectional-genus relation, the double point formula for threefolds in P^6,
  the two normal-bundle ladders, and (in threefold mode) the two known
  projective degrees of the transformation,
* in fourfold mode the normal Segre degrees come instead from the known
  multidegree entries, and the whole threefold machinery is then applied to
  the general hyperplane section, whose normal bundle is the restricted one
  and whose Euler characteristics are first differences of the fourfold's.

Blow-up transformation rules turn a threefold table into the table of its
minimal reduction, with entries polynomial in (lambda, g, nu).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping, Union

from .config import MODE_FOURFOLD_P7, MODE_THREEFOLD_P6, TransformationConfig
from .exactq import (
    G,
    LAM,
    NU,
    Poly,
    binomial_poly,
    linear_system,
    poly,
    solve_linear_system,
)
from .multidegree import Multidegree, _comb0, projective_degrees, vanishing_threshold

#: Unknown order for the threefold system; fixed for deterministic elimination.
THREEFOLD_UNKNOWNS = (
    "KH2", "K2H", "K3",
    "c2H", "c3",
    "s1", "s2", "s3",
    "ts2", "ts3",
    "nc1H2", "nc2H", "nc3",
    "KSHS", "KS2", "c2TS",
)

THREEFOLD_ENTRIES = (
    "H3",
    "KH2", "K2H", "K3",
    "c1H2", "c2H", "c3",
    "s1", "s2", "s3",
    "ts1", "ts2", "ts3",
    "nc1H2", "nc2H", "nc3",
    "KSHS", "KS2", "c2TS",
    "chi_O", "chi_H", "chi_mH", "chi_m2H",
)

FOURFOLD_ENTRIES = ("H4", "KH3", "s1", "s2", "s3", "s4")

#: Entries of a reduction table; normal-bundle degrees are dropped because the
#: blow-down is not embedded anywhere.
REDUCTION_ENTRIES = (
    "H3",
    "KH2", "K2H", "K3",
    "c1H2", "c2H", "c3",
    "ts1", "ts2", "ts3",
    "KSHS", "KS2", "c2TS",
    "chi_O", "chi_H", "chi_mH", "chi_m2H",
)


@dataclass(frozen=True)
class HilbertPolynomial:
    """chi(O(t)) in the binomial basis C(t+dim, dim), ..., C(t, 0).

    The leading coefficient is the degree ``lambda`` and the second one is
    1 - lambda - g; the remaining coefficients are solved exactly from the
    interpolation constraints.
    """

    dim: int
    coefficients: tuple[Poly, ...]
    constraints: tuple[tuple[int, int], ...]
    poly: Poly

    def at(self, t: int) -> Poly:
        """Exact value at an integer twist, as a polynomial in lambda, g (and nu)."""
        return self.poly.subs({"t": t})

    def difference(self) -> "HilbertPolynomial":
        """First difference P(t) - P(t-1): the hyperplane section's polynomial.

        In the binomial basis this just drops the constant coefficient.
        """
        coeffs = self.coefficients[:-1]
        return HilbertPolynomial(
            dim=self.dim - 1,
            coefficients=coeffs,
            constraints=(),
            poly=_basis_poly(self.dim - 1, coeffs),
        )


def _basis_poly(dim: int, coefficients: tuple[Poly, ...]) -> Poly:
    out = Poly.zero()
    for j, c in enumerate(coefficients):
        b = dim - j
        out = out + c * binomial_poly(b, b)
    return out


def interpolation_constraints(cfg: TransformationConfig) -> list[tuple[int, int]]:
    """Exact evaluation constraints chi(k) for the base locus Hilbert polynomial.

    For k at or above the vanishing threshold, chi(O_B(k)) equals the dimension
    of the degree-k forms on P^n minus the defining system's sections: zero
    below degree delta1 and n+1 in degree delta1 itself.
    """
    k0 = vanishing_threshold(cfg)
    out = []
    for k in range(k0, cfg.delta1 + 1):
        sections = cfg.n + 1 if k == cfg.delta1 else 0
        out.append((k, comb(cfg.n + k, cfg.n) - sections))
    if len(out) != cfg.r - 1:
        raise ValueError(
            f"{len(out)} constraints for {cfg.r - 1} free Hilbert coefficients"
        )
    return out


def hilbert_polynomial(cfg: TransformationConfig) -> HilbertPolynomial:
    """Interpolate the base locus Hilbert polynomial in the binomial basis."""
    r = cfg.r
    constraints = interpolation_constraints(cfg)
    lead = [LAM, 1 - LAM - G]
    names = [f"a{b}" for b in range(r - 2, -1, -1)]
    equations = []
    for k, value in constraints:
        coeffs = {f"a{b}": comb(k + b, b) for b in range(r - 2, -1, -1)}
        rhs = poly(value) - LAM * comb(k + r, r) - (1 - LAM - G) * comb(k + r - 1, r - 1)
        equations.append((coeffs, rhs))
    solved = solve_linear_system(
        linear_system(names, equations, labels=[f"chi({k})={v}" for k, v in constraints])
    )
    coefficients = tuple(lead + [solved[name] for name in names])
    return HilbertPolynomial(
        dim=r,
        coefficients=coefficients,
        constraints=tuple(constraints),
        poly=_basis_poly(r, coefficients),
    )


def chi_values(hp: HilbertPolynomial) -> tuple[Poly, Poly, Poly, Poly]:
    """(chi(O), chi(O(H)), chi(O(-H)), chi(O(-2H))) as exact polynomials."""
    return (hp.at(0), hp.at(1), hp.at(-1), hp.at(-2))


class InvariantTable:
    """Named map from invariant symbols to exact polynomials.

    Threefold tables carry the full set of tangent/normal Chern and Segre
    degrees, canonical powers, hyperplane-surface invariants and Euler
    characteristics.  Fourfold tables carry the fourfold-level degrees plus
    the induced table of the general threefold hyperplane section in
    ``section``.  Tables are immutable once solved.
    """

    def __init__(
        self,
        mode: str,
        entries: Mapping[str, Poly],
        hilbert: HilbertPolynomial,
        section: "InvariantTable | None" = None,
    ):
        self.mode = mode
        self.entries = dict(entries)
        self.hilbert = hilbert
        self.section = section

    def __getitem__(self, name: str) -> Poly:
        return self.entries[name]

    def __contains__(self, name: str) -> bool:
        return name in self.entries

    def names(self) -> tuple[str, ...]:
        return tuple(self.entries)

    def at(self, lam: int, g: int) -> dict[str, Fraction]:
        point = {"lambda": lam, "g": g}
        return {name: p.eval_at(point) for name, p in self.entries.items()}


class ReductionTable:
    """Invariants of the minimal reduction, polynomial in (lambda, g, nu)."""

    def __init__(self, entries: Mapping[str, Poly], hilbert: HilbertPolynomial):
        self.entries = dict(entries)
        self.hilbert = hilbert

    def __getitem__(self, name: str) -> Poly:
        return self.entries[name]

    def __contains__(self, name: str) -> bool:
        return name in self.entries

    def names(self) -> tuple[str, ...]:
        return tuple(self.entries)

    def at(self, lam: int, g: int, nu: int) -> dict[str, Fraction]:
        point = {"lambda": lam, "g": g, "nu": nu}
        return {name: p.eval_at(point) for name, p in self.entries.items()}


def _projective_degree_equation(
    cfg: TransformationConfig, k: int, target: int
) -> tuple[dict[str, int], Poly]:
    """deg_{n-k} = target, rearranged to a row over the Segre unknowns s_i."""
    n, d1, r = cfg.n, cfg.delta1, cfg.r
    coeffs: dict[str, int] = {}
    for i in range(k, r):
        c = _comb0(n - k, i - k) * d1 ** (i - k)
        if c:
            coeffs[f"s{r - i}"] = -c
    rhs = poly(target - d1 ** (n - k)) + LAM * (_comb0(n - k, r - k) * d1 ** max(r - k, 0))
    return coeffs, rhs


def _solve_threefold_entries(
    ambient_n: int,
    chi_o: Poly,
    chi_h: Poly,
    chi_mh: Poly,
    cremona_cfg: TransformationConfig | None = None,
    segre_given: tuple[Poly, Poly, Poly] | None = None,
) -> dict[str, Poly]:
    """Assemble and solve the linear system for a smooth threefold in P^6.

    Exactly one of ``cremona_cfg`` (pin the Segre degrees through the known
    projective degrees deg_n = 1 and deg_{n-1} = delta2) and ``segre_given``
    (Segre degrees restricted from an ambient fourfold) must be supplied.
    """
    if (cremona_cfg is None) == (segre_given is None):
        raise ValueError("supply exactly one of cremona_cfg and segre_given")
    m = ambient_n + 1  # ambient Chern ladder coefficients C(m, j)
    c_1, c_2, c_3 = comb(m, 1), comb(m, 2), comb(m, 3)

    equations: list[tuple[dict[str, int], Poly]] = []
    labels: list[str] = []

    def add(label: str, coeffs: dict[str, int], rhs) -> None:
        equations.append((coeffs, poly(rhs)))
        labels.append(label)

    # 2g - 2 = (K + 2H) H^2 with H^3 = lambda.
    add("sectional-genus", {"KH2": 1}, 2 * G - 2 - 2 * LAM)
    # Riemann-Roch for chi(O(H)) - chi(O).
    add(
        "riemann-roch-chi-H",
        {"K2H": 1, "KH2": -3, "c2H": 1},
        (chi_h - chi_o) * 12 - 2 * LAM,
    )
    # Self-intersection (double point) formula for a threefold in P^6.
    add(
        "double-point-formula",
        {"K3": 1, "c3": -1, "c2H": -7, "KH2": 21, "K2H": 7},
        LAM**2 - 35 * LAM - chi_o * 48,
    )
    # Tangent Chern degrees from the normal Segre ladder; c1 H^2 = -K H^2.
    add("tangent-chern-1", {"s1": 1, "KH2": 1}, -c_1 * LAM)
    add("tangent-chern-2", {"c2H": 1, "s1": -c_1, "s2": -1}, c_2 * LAM)
    add("tangent-chern-3", {"c3": 1, "s1": -c_2, "s2": -c_1, "s3": -1}, c_3 * LAM)
    # Tangent Segre degrees via HRR: ts1 = K H^2 is substituted directly.
    add("tangent-segre-2", {"ts2": 1, "K2H": -1, "c2H": 1}, 0)
    add("tangent-segre-3", {"ts3": 1, "K3": -1, "c3": 1}, chi_o * 48)
    # Normal Chern degrees from the tangent Segre ladder (ts1 = KH2).
    add("normal-chern-1", {"nc1H2": 1, "KH2": -1}, c_1 * LAM)
    add("normal-chern-2", {"nc2H": 1, "KH2": -c_1, "ts2": -1}, c_2 * LAM)
    add("normal-chern-3", {"nc3": 1, "KH2": -c_2, "ts2": -c_1, "ts3": -1}, c_3 * LAM)
    # Either the two projective-degree equations or the restricted Segre classes.
    if cremona_cfg is not None:
        cfg = cremona_cfg
        coeffs, rhs = _projective_degree_equation(cfg, 0, 1)
        add(f"projective-degree-{cfg.n}", coeffs, rhs)
        coeffs, rhs = _projective_degree_equation(cfg, 1, cfg.delta2)
        add(f"projective-degree-{cfg.n - 1}", coeffs, rhs)
    else:
        add("normal-segre-2-restricted", {"s2": 1}, segre_given[1])
        add("normal-segre-3-restricted", {"s3": 1}, segre_given[2])
    # General hyperplane surface section S.
    add("surface-adjunction", {"KSHS": 1, "KH2": -1}, LAM)
    add("surface-chern", {"c2TS": 1, "c2H": -1, "KH2": -1}, LAM)
    add("surface-noether", {"KS2": 1, "c2TS": 1}, (chi_o - chi_mh) * 12)

    solved = solve_linear_system(linear_system(THREEFOLD_UNKNOWNS, equations, labels))
    if segre_given is not None and solved["s1"] != segre_given[0]:
        raise ValueError(
            "restricted s1 disagrees with the sectional-genus ladder: "
            f"{segre_given[0]} vs {solved['s1']}"
        )

    entries: dict[str, Poly] = {"H3": LAM}
    entries.update({name: solved[name] for name in ("KH2", "K2H", "K3")})
    entries["c1H2"] = -solved["KH2"]
    entries.update({name: solved[name] for name in ("c2H", "c3", "s1", "s2", "s3")})
    entries["ts1"] = solved["KH2"]
    entries.update({name: solved[name] for name in ("ts2", "ts3", "nc1H2", "nc2H", "nc3")})
    entries.update({name: solved[name] for name in ("KSHS", "KS2", "c2TS")})
    return entries


def solve_invariants(cfg: TransformationConfig) -> InvariantTable:
    """All invariant degrees of the base locus as polynomials in lambda, g."""
    hp = hilbert_polynomial(cfg)
    chis = chi_values(hp)
    if cfg.mode == MODE_THREEFOLD_P6:
        entries = _solve_threefold_entries(
            cfg.n, chis[0], chis[1], chis[2], cremona_cfg=cfg
        )
        entries["chi_O"], entries["chi_H"] = chis[0], chis[1]
        entries["chi_mH"], entries["chi_m2H"] = chis[2], chis[3]
        ordered = {name: entries[name] for name in THREEFOLD_ENTRIES}
        return InvariantTable(cfg.mode, ordered, hp)
    if cfg.mode == MODE_FOURFOLD_P7:
        return _solve_fourfold(cfg, hp)
    raise ValueError(f"unsupported mode {cfg.mode!r}")


def _solve_fourfold(cfg: TransformationConfig, hp: HilbertPolynomial) -> InvariantTable:
    # K H^3 from the sectional-genus relation 2g - 2 = (K + 3H) H^3.
    kh3 = 2 * G - 2 - 3 * LAM
    equations = []
    labels = []
    # c1(T) H^3 = (n+1) H^4 + s1 H^3 with c1 = -K.
    equations.append(({"s1": 1}, -kh3 - (cfg.n + 1) * LAM))
    labels.append("fourfold-chern-1")
    # The degrees deg_{n-k} for k = 0, 1, 2 are 1, delta2, delta2^2 because
    # the inverse's base locus has codimension >= 3.
    for k, target in ((2, cfg.delta2**2), (1, cfg.delta2), (0, 1)):
        coeffs, rhs = _projective_degree_equation(cfg, k, target)
        equations.append((coeffs, rhs))
        labels.append(f"projective-degree-{cfg.n - k}")
    solved = solve_linear_system(
        linear_system(("s1", "s2", "s3", "s4"), equations, labels)
    )

    entries = {
        "H4": LAM,
        "KH3": kh3,
        "s1": solved["s1"],
        "s2": solved["s2"],
        "s3": solved["s3"],
        "s4": solved["s4"],
    }

    # General hyperplane section: a threefold in P^6 whose normal bundle is
    # the restriction, with first-difference Euler characteristics.
    hp_section = hp.difference()
    sec_chis = chi_values(hp_section)
    sec_entries = _solve_threefold_entries(
        cfg.n - 1,
        sec_chis[0],
        sec_chis[1],
        sec_chis[2],
        segre_given=(solved["s1"], solved["s2"], solved["s3"]),
    )
    sec_entries["chi_O"], sec_entries["chi_H"] = sec_chis[0], sec_chis[1]
    sec_entries["chi_mH"], sec_entries["chi_m2H"] = sec_chis[2], sec_chis[3]
    section = InvariantTable(
        MODE_THREEFOLD_P6,
        {name: sec_entries[name] for name in THREEFOLD_ENTRIES},
        hp_section,
    )
    return InvariantTable(cfg.mode, entries, hp, section=section)


def multidegree_of(cfg: TransformationConfig, table: InvariantTable) -> Multidegree:
    """Symbolic multidegree computed from the table's Segre degrees."""
    segre = [table[f"s{i}"] for i in range(1, cfg.r + 1)]
    return projective_degrees(cfg, LAM, segre)


def reduction_table(base: InvariantTable, with_nu: bool = True) -> ReductionTable:
    """Blow-down transformation of a threefold table to its minimal reduction.

    Contracting nu disjoint exceptional planes changes the entries by the
    standard point blow-up rules; the Hilbert polynomial gains
    nu * (t^3 + 3t^2 + 2t)/6, so its values at t = 0, -1, -2 are unchanged.
    With ``with_nu`` false, nu is pinned to zero and the result equals the
    base table entry-for-entry.
    """
    if base.mode != MODE_THREEFOLD_P6:
        raise ValueError("reduction tables are defined for threefold tables only")
    nu = NU if with_nu else Poly.zero()
    e = base.entries
    chi_o = base.hilbert.at(0)
    out = {
        "H3": e["H3"] + nu,
        "KH2": e["KH2"] - 2 * nu,
        "K2H": e["K2H"] + 4 * nu,
        "K3": e["K3"] - 8 * nu,
        "c1H2": e["c1H2"] + 2 * nu,
        "c2H": e["c2H"],
        "c3": e["c3"] - 2 * nu,
        "KSHS": e["KSHS"] - nu,
        "KS2": e["KS2"] + nu,
        "c2TS": e["c2TS"] - nu,
    }
    out["ts1"] = out["KH2"]
    out["ts2"] = out["K2H"] - out["c2H"]
    out["ts3"] = out["K3"] + 48 * chi_o - out["c3"]
    correction = binomial_poly(2, 3)  # (t^3 + 3t^2 + 2t)/6
    hp_poly = base.hilbert.poly + nu * correction
    coeffs = list(base.hilbert.coefficients)
    # In the binomial basis, C(t+2, 3) = C(t+3, 3) - C(t+2, 2).
    coeffs[0] = coeffs[0] + nu
    coeffs[1] = coeffs[1] - nu
    hp = HilbertPolynomial(
        dim=base.hilbert.dim,
        coefficients=tuple(coeffs),
        constraints=base.hilbert.constraints,
        poly=hp_poly,
    )
    out["chi_O"], out["chi_H"] = hp.at(0), hp.at(1)
    out["chi_mH"], out["chi_m2H"] = hp.at(-1), hp.at(-2)
    ordered = {name: out[name] for name in REDUCTION_ENTRIES}
    return ReductionTable(ordered, hp)


def adjoint_power(
    table: Union[InvariantTable, ReductionTable], a: int, b: int, j: int
) -> Poly:
    """(a K + b H)^j * H^(3-j) expanded over the table's canonical powers."""
    if j not in (0, 1, 2, 3):
        raise ValueError(f"adjoint power index j = {j} must lie in 0..3")
    powers = (table["H3"], table["KH2"], table["K2H"], table["K3"])
    out = Poly.zero()
    for m in range(j + 1):
        out = out + powers[m] * (comb(j, m) * a**m * b ** (j - m))
    return out


def pluridegrees(
    table: Union[InvariantTable, ReductionTable]
) -> tuple[Poly, Poly, Poly, Poly]:
    """d_j = (K + H)^j * H^(3-j) for j = 0..3."""
    return tuple(adjoint_power(table, 1, 1, j) for j in range(4))
