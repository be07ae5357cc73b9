"""Exact rational arithmetic: sparse multivariate polynomials and linear solving.

Every quantity in this package is either an integer, a ``fractions.Fraction``
(kept in lowest terms with positive denominator by the stdlib), or a sparse
polynomial over the rationals.  No floating point exists anywhere.

A polynomial is a map from exponent tuples to nonzero Fraction coefficients.
The variable set is global and ordered::

    lambda  g  nu  t

so an exponent tuple ``(2, 0, 1, 0)`` means lambda^2 * nu.  Working over a
fixed, ordered variable list makes structural equality coincide with
mathematical equality and makes printing, hashing and report output
deterministic.  The zero polynomial is the empty map.

Linear systems have exact rational coefficient matrices and polynomial
right-hand sides, so their (unique) solutions are again polynomials; they are
solved by exact Gaussian elimination with a smallest-bit-size pivot rule to
control coefficient growth.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Sequence, Union

Rational = Fraction

#: Global variable order; lexicographic term order is taken on this tuple.
VARIABLES = ("lambda", "g", "nu", "t")

_NVARS = len(VARIABLES)
_VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_ZERO_EXP = (0,) * _NVARS

Scalar = Union[int, Fraction]
PolyLike = Union["Poly", int, Fraction]


class Poly:
    """Sparse exact polynomial in the global variables.

    Instances are immutable after construction: arithmetic always returns new
    objects and ``terms`` must never be mutated.  They may be shared freely
    across threads.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Sequence[int], Scalar] | None = None):
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                key = tuple(exps)
                if len(key) != _NVARS:
                    raise ValueError(f"exponent tuple {key} must have length {_NVARS}")
                if any(e < 0 for e in key):
                    raise ValueError(f"negative exponent in {key}")
                c = Fraction(coeff)
                if c:
                    clean[key] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def const(cls, value: Scalar) -> "Poly":
        return cls({_ZERO_EXP: Fraction(value)})

    @classmethod
    def var(cls, name: str) -> "Poly":
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r}; known: {VARIABLES}")
        exps = [0] * _NVARS
        exps[_VAR_INDEX[name]] = 1
        return cls({tuple(exps): 1})

    @property
    def variables(self) -> tuple[str, ...]:
        return VARIABLES

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(other: PolyLike) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return None

    def __add__(self, other: PolyLike) -> "Poly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out = dict(self.terms)
        for exps, coeff in q.terms.items():
            out[exps] = out.get(exps, Fraction(0)) + coeff
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({exps: -c for exps, c in self.terms.items()})

    def __sub__(self, other: PolyLike) -> "Poly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other: PolyLike) -> "Poly":
        return -(self - other)

    def __mul__(self, other: PolyLike) -> "Poly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in q.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "Poly":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division of polynomial by zero")
        inv = Fraction(1, 1) / Fraction(other)
        return self * inv

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = Poly.const(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {_ZERO_EXP}

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"polynomial {self} is not constant")
        return self.terms[_ZERO_EXP]

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1 by convention."""
        if not self.terms:
            return -1
        return max(sum(exps) for exps in self.terms)

    def degree_in(self, name: str) -> int:
        i = _VAR_INDEX[name]
        if not self.terms:
            return -1
        return max(exps[i] for exps in self.terms)

    def coefficient(self, monomial: Mapping[str, int]) -> Fraction:
        """Coefficient of the given monomial, e.g. ``{"lambda": 2}``."""
        exps = [0] * _NVARS
        for name, e in monomial.items():
            exps[_VAR_INDEX[name]] = e
        return self.terms.get(tuple(exps), Fraction(0))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in descending lexicographic order on the global variables."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    # -- substitution -------------------------------------------------------

    def subs(self, assignment: Mapping[str, Union[Scalar, "Poly"]]) -> "Poly":
        """Substitution homomorphism; unassigned variables stay symbolic."""
        values: dict[int, Poly] = {}
        for name, val in assignment.items():
            coerced = self._coerce(val)
            if coerced is None:
                raise TypeError(f"cannot substitute {val!r} for {name}")
            values[_VAR_INDEX[name]] = coerced
        out = Poly.zero()
        for exps, coeff in self.terms.items():
            term = Poly.const(coeff)
            residual = [0] * _NVARS
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                if i in values:
                    term = term * values[i] ** e
                else:
                    residual[i] = e
            if any(residual):
                term = term * Poly({tuple(residual): 1})
            out = out + term
        return out

    def eval_at(self, point: Mapping[str, Scalar]) -> Fraction:
        """Full evaluation at a rational point (every used variable assigned)."""
        vals: list[Fraction | None] = [None] * _NVARS
        for name, v in point.items():
            vals[_VAR_INDEX[name]] = Fraction(v)
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                v = vals[i]
                if v is None:
                    raise ValueError(f"variable {VARIABLES[i]!r} not assigned")
                term *= v**e
            total += term
        return total

    # -- comparison / display ------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        # Normal form: descending lex terms, explicit signs, '^' for powers.
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exps, coeff in self.sorted_terms():
            mono = "*".join(
                f"{VARIABLES[i]}^{e}" if e > 1 else VARIABLES[i]
                for i, e in enumerate(exps)
                if e
            )
            mag = abs(coeff)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"


#: Shorthands used throughout the invariant formulas.
LAM = Poly.var("lambda")
G = Poly.var("g")
NU = Poly.var("nu")
T = Poly.var("t")

ONE = Poly.const(1)
ZERO = Poly.zero()


def poly(value: PolyLike) -> Poly:
    coerced = Poly._coerce(value)
    if coerced is None:
        raise TypeError(f"cannot coerce {value!r} to a polynomial")
    return coerced


def binomial_poly(shift: int, k: int) -> Poly:
    """The polynomial C(t + shift, k) = (t+shift)(t+shift-1)...(t+shift-k+1)/k!.

    For any integer t with t + shift >= 0 it agrees with the integer binomial
    coefficient; k must be non-negative.
    """
    if k < 0:
        raise ValueError("binomial_poly needs k >= 0")
    out = ONE
    for i in range(k):
        out = out * (T + (shift - i))
    return out / factorial(k)


def evaluate(p: Poly, assignment: Mapping[str, Union[Scalar, Poly]]) -> Poly:
    """Substitute values (rationals or polynomials) into ``p``.

    Partial assignments are legal; a full assignment yields a constant
    polynomial.
    """
    return p.subs(assignment)


class LinearSystemError(ValueError):
    """Raised when an exact linear system cannot be solved uniquely."""

    def __init__(self, message: str, rank_defect: int = 0):
        super().__init__(message)
        self.rank_defect = rank_defect


class SingularSystemError(LinearSystemError):
    pass


class InconsistentSystemError(LinearSystemError):
    pass


@dataclass(frozen=True)
class LinearSystem:
    """A x = b with rational matrix A and polynomial right-hand side b.

    Because A is rational, the unique solution (when it exists) is a tuple of
    polynomials in the right-hand side variables: those variables must be
    disjoint from the unknown names.  ``labels`` optionally names each
    equation for error reporting.
    """

    unknowns: tuple[str, ...]
    rows: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Poly, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        n = len(self.unknowns)
        if len(self.rows) != len(self.rhs):
            raise ValueError("one right-hand side per equation is required")
        for row in self.rows:
            if len(row) != n:
                raise ValueError("every row needs exactly one coefficient per unknown")
        if self.labels is not None and len(self.labels) != len(self.rows):
            raise ValueError("one label per equation is required")


def linear_system(
    unknowns: Sequence[str],
    equations: Iterable[tuple[Mapping[str, Scalar], PolyLike]],
    labels: Sequence[str] | None = None,
) -> LinearSystem:
    """Build a LinearSystem from sparse {unknown: coefficient} rows."""
    names = tuple(unknowns)
    index = {u: i for i, u in enumerate(names)}
    rows = []
    rhs = []
    for coeffs, b in equations:
        row = [Fraction(0)] * len(names)
        for u, c in coeffs.items():
            if u not in index:
                raise ValueError(f"coefficient on unknown name {u!r}")
            row[index[u]] = Fraction(c)
        rows.append(tuple(row))
        rhs.append(poly(b))
    return LinearSystem(names, tuple(rows), tuple(rhs), tuple(labels) if labels else None)


def _bit_size(x: Fraction) -> int:
    return abs(x.numerator).bit_length() + x.denominator.bit_length()


def solve_linear_system(system: LinearSystem) -> dict[str, Poly]:
    """Solve exactly by Gaussian elimination, returning {unknown: Poly}.

    The pivot in each column is the nonzero candidate of smallest total bit
    size (ties to the lowest row index), which keeps intermediate rational
    coefficients small.  Raises SingularSystemError or
    InconsistentSystemError, carrying the rank defect, when the system has no
    unique solution.  The returned solution is re-substituted into every
    original equation as a final identity check.
    """
    n = len(system.unknowns)
    m = len(system.rows)
    a = [list(row) for row in system.rows]
    b = list(system.rhs)
    labels = system.labels or tuple(f"equation {i}" for i in range(m))
    order = list(range(m))

    pivot_rows: list[int] = []
    pivot_cols: list[int] = []
    level = 0
    for col in range(n):
        candidates = [i for i in range(level, m) if a[order[i]][col] != 0]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: (_bit_size(a[order[i]][col]), i))
        order[level], order[best] = order[best], order[level]
        pr = order[level]
        pivot = a[pr][col]
        for i in range(level + 1, m):
            ri = order[i]
            factor = a[ri][col] / pivot
            if factor == 0:
                continue
            for c in range(col, n):
                a[ri][c] -= a[pr][c] * factor
            b[ri] = b[ri] - b[pr] * factor
        pivot_rows.append(pr)
        pivot_cols.append(col)
        level += 1

    rank = level
    defect = n - rank
    for i in range(rank, m):
        ri = order[i]
        if not b[ri].is_zero():
            raise InconsistentSystemError(
                f"inconsistent system: {labels[ri]!r} reduces to 0 = {b[ri]}",
                rank_defect=defect,
            )
    if rank < n:
        dependent = labels[order[rank]] if rank < m else "<missing equation>"
        raise SingularSystemError(
            f"singular system of rank {rank} in {n} unknowns "
            f"(defect {defect}); first dependent equation: {dependent!r}",
            rank_defect=defect,
        )

    solution: list[Poly | None] = [None] * n
    for k in range(rank - 1, -1, -1):
        pr = pivot_rows[k]
        col = pivot_cols[k]
        acc = b[pr]
        for c in range(col + 1, n):
            if a[pr][c] != 0:
                acc = acc - solution[c] * a[pr][c]
        solution[col] = acc / a[pr][col]

    result = {u: s for u, s in zip(system.unknowns, solution)}
    for row, rhs_poly, label in zip(system.rows, system.rhs, labels):
        residual = -rhs_poly
        for c, u in zip(row, system.unknowns):
            if c != 0:
                residual = residual + result[u] * c
        if not residual.is_zero():
            raise LinearSystemError(
                f"back-substitution failed on {label!r}: residual {residual}"
            )
    return result
