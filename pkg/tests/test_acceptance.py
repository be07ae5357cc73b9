"""Acceptance suite: every criterion checked at exact equality (tolerance zero).

Run with ``pytest -s tests/test_acceptance.py`` to see the one-line verdict
printed per criterion.
"""

import functools
import random
from fractions import Fraction

from cremona_sieve.config import TransformationConfig
from cremona_sieve.exactq import (
    G,
    LAM,
    NU,
    Poly,
    T,
    binomial_poly,
    linear_system,
    solve_linear_system,
)
from cremona_sieve.filters import (
    castelnuovo_bound,
    cremona_degree_filters,
    lebarz_nu_bound,
    livorni_sommese_filters,
)
from cremona_sieve.invariants import (
    REDUCTION_ENTRIES,
    hilbert_polynomial,
    multidegree_of,
    pluridegrees,
    reduction_table,
    solve_invariants,
)
from cremona_sieve.multidegree import AdmissibleType, admissible_types
from cremona_sieve.classification_table import ROWS, verify_classification_table
from cremona_sieve.pipeline import builtin_pipeline, enumerate_candidates, run_pipeline

from test_invariants import P6_CLOSED_FORMS
from test_pipeline import PAIRS_27, PAIRS_33


def criterion(name):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"[acceptance] {name}: FAIL")
                raise
            print(f"[acceptance] {name}: PASS")

        return run

    return wrap


@criterion("symbolic identity suite (threefold in P^6)")
def test_symbolic_identity_suite():
    cfg = TransformationConfig.cubic_p6()
    table = solve_invariants(cfg)
    for name, expected in P6_CLOSED_FORMS.items():
        assert table[name] == expected, name
    hp = hilbert_polynomial(cfg)
    assert hp.poly == (
        LAM * binomial_poly(3, 3)
        + (-LAM - G + 1) * binomial_poly(2, 2)
        + (-6 * LAM + 4 * G + 45) * (T + 1)
        + (14 * LAM - 6 * G - 113)
    )
    md = multidegree_of(cfg, table)
    assert md.entries == (
        1, 3, 9, 27 - LAM, -7 * LAM + 2 * G + 79, 5, 1
    )


@criterion("symbolic identity suite (fourfold in P^7)")
def test_p7_symbolic_suite():
    cfg = TransformationConfig.cubo_cubic_p7()
    table = solve_invariants(cfg)
    section = table.section
    assert section["K2H"] == -39 * LAM + 14 * G + 328
    assert section["KS2"] == -42 * LAM + 18 * G + 324
    assert section["c2TS"] == -30 * LAM + 18 * G + 216
    md = multidegree_of(cfg, table)
    assert md.entries[1:7] == (3, 9, -LAM + 27, -7 * LAM + 2 * G + 79, 9, 3)


@criterion("4-secant bound expansions")
def test_lebarz_expansion_suite():
    table6 = solve_invariants(TransformationConfig.cubic_p6())
    bound6 = lebarz_nu_bound(table6).expression + NU
    assert bound6 == (
        Fraction(1, 8) * LAM**4
        + Fraction(3, 4) * LAM**3
        - 3 * LAM**2 * G
        - Fraction(453, 8) * LAM**2
        + 20 * LAM * G
        + 13 * G**2
        + Fraction(2835, 4) * LAM
        - 73 * G
        - 2894
    )
    table7 = solve_invariants(TransformationConfig.cubo_cubic_p7())
    bound7 = lebarz_nu_bound(table7.section).expression + NU
    assert bound7 == (
        Fraction(1, 8) * LAM**4
        + Fraction(3, 4) * LAM**3
        - 3 * LAM**2 * G
        - Fraction(445, 8) * LAM**2
        + 20 * LAM * G
        + 13 * G**2
        + Fraction(2815, 4) * LAM
        - 83 * G
        - 2873
    )


@criterion("count regression, cubic-p6")
def test_count_regression_cubic_p6():
    report = run_pipeline(builtin_pipeline("cubic-p6"))
    assert report.stage("pairs-domain").output_count == 889
    assert report.stage("surface-inequalities").output_count == 312
    assert report.stage("multidegree-inequalities").survivors == PAIRS_33
    assert report.stage("log-general:triples").output_count == 478
    assert report.stage("log-general:hodge").output_count == 18
    assert report.stage("log-general:inequalities").survivors == (
        (14, 15, 0),
        (18, 27, 0),
    )
    finalists = {tuple(f["tuple"]): f["branch"] for f in report.finalists}
    assert finalists == {(14, 15, 0): "log-general", (13, 12, 0): "conic-bundle"}
    for name in (
        "reduction-existence:scroll-over-curve",
        "reduction-existence:pre-reduction",
        "special:veronese-fibration",
        "special:mukai",
        "special:del-pezzo-fibration",
    ):
        assert report.stage(name).survivors == ()


@criterion("count regression, cubo-cubic-p7")
def test_count_regression_cubo_cubic_p7():
    report = run_pipeline(builtin_pipeline("cubo-cubic-p7"))
    assert report.stage("multidegree-inequalities").survivors == PAIRS_27
    assert report.stage("lebarz-triples").output_count == 859
    assert report.stage("log-general:filters").survivors == ((18, 28, 0),)
    rt = reduction_table(solve_invariants(TransformationConfig.cubo_cubic_p7()).section)
    point = {"lambda": 18, "g": 28, "nu": 0}
    assert [d.eval_at(point) for d in pluridegrees(rt)] == [18, 36, 72, 102]
    consistency = report.stage("log-general:consistency")
    assert consistency.survivors == ()
    assert consistency.exclusions == (
        ((18, 28, 0), ("pluridegree-proportionality",)),
    )
    (finalist,) = report.finalists
    assert finalist["tuple"] == [12, 10, 0]
    assert finalist["pluridegrees"] == [12, 6, 0, 0]
    assert finalist["checks"]["genus_base_curve"] == 0
    assert finalist["checks"]["deg_HC"] == 1
    assert finalist["checks"]["deg_fibre"] == 6


@criterion("Diophantine type solver")
def test_diophantine_type_solver():
    assert [(t.n, t.delta1, t.delta2) for t in admissible_types(r=3)] == [
        (5, 5, 5), (6, 3, 5), (8, 2, 5),
    ]
    assert admissible_types(n=7) == [AdmissibleType(7, 3, 3, 4, 4)]
    assert [(t.n, t.delta1, t.delta2) for t in admissible_types(r=1)] == [
        (3, 3, 3), (4, 2, 3),
    ]
    for kwargs in ({"r": 3}, {"r": 1}, {"n": 7}):
        assert admissible_types(delta_bound=32, **kwargs) == admissible_types(
            delta_bound=64, **kwargs
        )


@criterion("classification table verification")
def test_classification_table():
    results = verify_classification_table()
    assert len(results) == 13 == len(ROWS)
    for r in results:
        assert r["admissible"], r["row"]
    recomputed = {r["row"]: r for r in results if r["recomputed"] is not None}
    assert set(recomputed) == {"XI", "XII", "XIII"}
    assert all(r["matches"] for r in recomputed.values())
    assert recomputed["XI"]["recomputed"] == [1, 3, 9, 13, 11, 5, 1]
    assert recomputed["XII"]["recomputed"] == [1, 3, 9, 14, 12, 5, 1]
    assert recomputed["XIII"]["recomputed"] == [1, 3, 9, 15, 15, 9, 3, 1]


@criterion("property suite")
def test_property_suite():
    cfg = TransformationConfig.cubic_p6()
    table = solve_invariants(cfg)

    # Stage monotonicity and determinism under randomized order and schedules.
    filters = livorni_sommese_filters(table)
    domain = [(lam, g) for lam in range(3, 28) for g in range(0, castelnuovo_bound(lam, 4) + 1)]
    reference = enumerate_candidates("ref", domain, filters)
    rng = random.Random(20260810)
    for workers in (1, 2, 5):
        shuffled = domain[:]
        rng.shuffle(shuffled)
        perm = filters[:]
        rng.shuffle(perm)
        report = enumerate_candidates("ref", shuffled, perm, workers=workers)
        assert report.survivors == reference.survivors
        assert {t: set(v) for t, v in report.exclusions} == {
            t: set(v) for t, v in reference.exclusions
        }
    narrowed = enumerate_candidates(
        "ref", domain, filters + cremona_degree_filters(multidegree_of(cfg, table))
    )
    assert set(narrowed.survivors) < set(reference.survivors)

    # Reduction at nu = 0 is the identity entry-for-entry.
    rt = reduction_table(table)
    for name in REDUCTION_ENTRIES:
        assert rt[name].subs({"nu": 0}) == table[name], name

    # Back-substitution identity on a solved system.
    sys = linear_system(
        ["x", "y", "z"],
        [
            ({"x": 2, "y": 1, "z": -1}, LAM + G),
            ({"x": 1, "y": -3, "z": 2}, 4 * G - LAM),
            ({"x": 1, "y": 1, "z": 1}, LAM * G),
        ],
    )
    sol = solve_linear_system(sys)
    for coeffs, rhs in (
        ({"x": 2, "y": 1, "z": -1}, LAM + G),
        ({"x": 1, "y": -3, "z": 2}, 4 * G - LAM),
        ({"x": 1, "y": 1, "z": 1}, LAM * G),
    ):
        acc = Poly.zero()
        for name, c in coeffs.items():
            acc = acc + sol[name] * c
        assert acc == rhs

    # Evaluation homomorphism at sampled points.
    p = 3 * LAM**2 - G * NU + 7
    q = LAM * G - 2 * NU + Fraction(1, 3)
    for _ in range(25):
        point = {
            "lambda": Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
            "g": Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
            "nu": Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
        }
        assert (p * q).eval_at(point) == p.eval_at(point) * q.eval_at(point)
        assert (p + q).eval_at(point) == p.eval_at(point) + q.eval_at(point)
