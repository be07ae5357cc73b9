"""Projective degrees of Cremona transformations and admissibility checks.

The k-th projective degree of a birational self-map of P^n is the degree of
the preimage of a general linear subspace of codimension k; the full vector
(deg_0, ..., deg_n) is the multidegree of the graph.  For a transformation
whose base locus is smooth of dimension r, the degrees are expressed through
the Segre classes s_i of the normal bundle:

    deg_{n-k} = delta1^{n-k}
                - C(n-k, r-k) * delta1^{r-k} * deg(B)
                - sum_{i=k}^{r-1} C(n-k, i-k) * delta1^{i-k} * s_{r-i}

with out-of-range binomial coefficients read as zero.  Any multidegree must
satisfy the product bounds 1 <= deg_{i+j} <= deg_i * deg_j and the
log-concavity bounds deg_{i-1} * deg_{i+1} <= deg_i^2.

This module also enumerates the integer solutions of the dimension relation
(admissible types) and computes the cohomology vanishing threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .config import TransformationConfig, dimension_relation_holds
from .exactq import Poly, poly


def _comb0(n: int, k: int) -> int:
    """Binomial coefficient with C(n, k) = 0 outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class Multidegree:
    """Degrees deg_0 .. deg_n, symbolic (Poly) or integer entries."""

    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))

    @property
    def n(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, k: int):
        return self.entries[k]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def at(self, lam, g) -> "Multidegree":
        """Evaluate symbolic entries at integer (lambda, g)."""
        point = {"lambda": lam, "g": g}
        out = []
        for e in self.entries:
            if isinstance(e, Poly):
                v = e.eval_at(point)
                out.append(int(v) if v.denominator == 1 else v)
            else:
                out.append(e)
        return Multidegree(tuple(out))

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


def projective_degrees(
    cfg: TransformationConfig, deg, segre: Sequence
) -> Multidegree:
    """Multidegree of the transformation from the base locus degree and Segre classes.

    ``segre`` lists the normal-bundle Segre degrees s_1 .. s_r; entries may be
    polynomials or exact numbers.
    """
    n, d1, r = cfg.n, cfg.delta1, cfg.r
    if len(segre) < r:
        raise ValueError(f"need Segre degrees s_1..s_{r}, got {len(segre)}")
    degree = poly(deg)
    s = [poly(v) for v in segre]
    entries = []
    for k in range(n, -1, -1):  # produces deg_0 first
        acc = poly(d1 ** (n - k))
        acc = acc - degree * (_comb0(n - k, r - k) * d1 ** max(r - k, 0))
        for i in range(max(k, 0), r):
            c = _comb0(n - k, i - k)
            if c:
                acc = acc - s[r - i - 1] * (c * d1 ** (i - k))
        entries.append(acc)
    out = []
    for e in entries:
        if e.is_constant():
            v = e.constant_value()
            out.append(int(v) if v.denominator == 1 else v)
        else:
            out.append(e)
    return Multidegree(tuple(out))


def multidegree_admissible(md) -> list[str]:
    """All violated product / log-concavity constraints; empty means admissible.

    Expects integer entries (evaluate symbolic multidegrees first).
    """
    degs = list(md.entries if isinstance(md, Multidegree) else md)
    n = len(degs) - 1
    violations = []
    for i in range(n + 1):
        for j in range(i, n + 1 - i):
            dij = degs[i + j]
            if dij < 1:
                violations.append(f"deg_{i+j} = {dij} < 1")
                continue
            if dij > degs[i] * degs[j]:
                violations.append(
                    f"deg_{i}*deg_{j} = {degs[i] * degs[j]} < deg_{i+j} = {dij}"
                )
    for i in range(1, n):
        lhs = degs[i - 1] * degs[i + 1]
        if lhs > degs[i] ** 2:
            violations.append(
                f"deg_{i}^2 = {degs[i]**2} < deg_{i-1}*deg_{i+1} = {lhs}"
            )
    return violations


@dataclass(frozen=True, order=True)
class AdmissibleType:
    """An integer solution of the dimension relation within the stated bounds."""

    n: int
    delta1: int
    delta2: int
    dim_b: int
    dim_b_prime: int


def _type_if_admissible(n: int, delta1: int, delta2: int, r: int) -> AdmissibleType | None:
    if not (2 <= delta1 <= n and 2 <= delta2 <= n):
        return None
    if not (1 <= r <= n - 2):
        return None
    if n >= 6 and (delta1 > n - 1 or r > n - 3):
        return None
    if not dimension_relation_holds(n, delta1, delta2, r):
        return None
    # Dimension of the inverse's base locus from the mirror relation.
    num = n * (delta2 - 1) * delta1 - (delta2 + 1) * delta1 + 2
    den = delta1 * delta2 - 1
    r_prime, rem = divmod(num, den)
    if rem or not (1 <= r_prime <= n - 2):
        return None
    return AdmissibleType(n, delta1, delta2, r, r_prime)


def admissible_types(
    n: int | None = None,
    r: int | None = None,
    delta_bound: int = 32,
) -> list[AdmissibleType]:
    """Exhaustively enumerate admissible types with delta1, delta2 <= delta_bound.

    Either the ambient dimension ``n`` or the base locus dimension ``r`` may be
    fixed; with both free, r ranges over [1, delta_bound].  All divisibility is
    checked over the integers.
    """
    found = set()
    for d1 in range(2, delta_bound + 1):
        for d2 in range(2, delta_bound + 1):
            if r is not None and n is None:
                num = (d1 * d2 - 1) * r + (d1 + 1) * d2 - 2
                den = (d1 - 1) * d2
                n0, rem = divmod(num, den)
                if rem:
                    continue
                t = _type_if_admissible(n0, d1, d2, r)
                if t:
                    found.add(t)
            elif n is not None and r is None:
                num = n * (d1 - 1) * d2 - (d1 + 1) * d2 + 2
                den = d1 * d2 - 1
                r0, rem = divmod(num, den)
                if rem:
                    continue
                t = _type_if_admissible(n, d1, d2, r0)
                if t:
                    found.add(t)
            elif n is not None and r is not None:
                t = _type_if_admissible(n, d1, d2, r)
                if t:
                    found.add(t)
            else:
                for r0 in range(1, delta_bound + 1):
                    num = (d1 * d2 - 1) * r0 + (d1 + 1) * d2 - 2
                    den = (d1 - 1) * d2
                    n0, rem = divmod(num, den)
                    if rem:
                        continue
                    t = _type_if_admissible(n0, d1, d2, r0)
                    if t:
                        found.add(t)
    return sorted(found)


def vanishing_threshold(cfg: TransformationConfig) -> int:
    """Twist above which the base locus ideal sheaf has no higher cohomology."""
    return cfg.codim * cfg.delta1 - (cfg.n + 1)
