"""The exact-arithmetic substrate: polynomials over Q and linear solving.

Every number in this package is an exact rational and every symbolic
expression is a sparse polynomial in the global variables lambda, g, nu, t.
This script walks through the basic operations the rest of the engine is
built on.
"""

from fractions import Fraction

from cremona_sieve import (
    G,
    LAM,
    T,
    binomial_poly,
    evaluate,
    linear_system,
    solve_linear_system,
)

# Polynomials are built from the variable shorthands with ordinary operators.
p = LAM**2 - 455 * LAM + 194 * G + 3642
print("a typical invariant expression:", p)
print("its value at (lambda, g) = (14, 15):", p.eval_at({"lambda": 14, "g": 15}))

# Structural equality is mathematical equality: terms are kept in a canonical
# sparse form, so rearranged arithmetic compares equal.
assert (LAM + G) * (LAM - G) == LAM**2 - G**2

# Coefficients are exact fractions; nothing is ever rounded.
q = Fraction(1, 8) * LAM**4 - Fraction(453, 8) * LAM**2
print("rational coefficients survive verbatim:", q)

# The binomial basis C(t + shift, k) underlies every Hilbert polynomial.
print("C(t+3, 3) =", binomial_poly(3, 3))
print("C(5+3, 3) =", binomial_poly(3, 3).eval_at({"t": 5}), "= comb(8, 3)")

# Substitution is a homomorphism and may be partial.
h = LAM * T + G
print("substituting t = 3:", evaluate(h, {"t": 3}))
print("substituting t = lambda:", evaluate(h, {"t": LAM}))

# Linear systems have rational matrices and polynomial right-hand sides, so
# the solutions are again polynomials.  This is exactly the mechanism that
# solves the invariant tables.
system = linear_system(
    ["x", "y"],
    [
        ({"x": 2, "y": 1}, LAM + G),
        ({"x": 1, "y": -1}, 2 * LAM - G),
    ],
)
solution = solve_linear_system(system)
print("solved system:", {k: str(v) for k, v in solution.items()})
