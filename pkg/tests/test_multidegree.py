import pytest

from cremona_sieve.config import TransformationConfig
from cremona_sieve.exactq import G, LAM
from cremona_sieve.invariants import multidegree_of, solve_invariants
from cremona_sieve.multidegree import (
    AdmissibleType,
    Multidegree,
    admissible_types,
    multidegree_admissible,
    projective_degrees,
    vanishing_threshold,
)

P6 = TransformationConfig.cubic_p6()
P7 = TransformationConfig.cubo_cubic_p7()


class TestProjectiveDegrees:
    def test_p6_symbolic(self):
        md = multidegree_of(P6, solve_invariants(P6))
        assert md[0] == 1 and md[1] == 3 and md[2] == 9
        assert md[3] == 27 - LAM
        assert md[4] == -7 * LAM + 2 * G + 79
        assert md[5] == 5 and md[6] == 1

    def test_p6_evaluations(self):
        md = multidegree_of(P6, solve_invariants(P6))
        assert md.at(14, 15).entries == (1, 3, 9, 13, 11, 5, 1)
        assert md.at(13, 12).entries == (1, 3, 9, 14, 12, 5, 1)

    def test_p7_symbolic_and_point(self):
        md = multidegree_of(P7, solve_invariants(P7))
        assert md[1] == 3 and md[2] == 9
        assert md[3] == -LAM + 27
        assert md[4] == -7 * LAM + 2 * G + 79
        assert md[5] == 9 and md[6] == 3
        assert md[0] == 1 and md[7] == 1
        assert md.at(12, 10).entries == (1, 3, 9, 15, 15, 9, 3, 1)

    def test_boundary_entries_by_construction(self):
        # deg_0 = deg_n = 1 and deg_{n-1} = delta2 hold identically.
        for cfg in (P6, P7):
            md = multidegree_of(cfg, solve_invariants(cfg))
            assert md[0] == 1
            assert md[cfg.n] == 1
            assert md[cfg.n - 1] == cfg.delta2
            assert md[1] == cfg.delta1

    def test_needs_enough_segre_classes(self):
        with pytest.raises(ValueError):
            projective_degrees(P6, LAM, [LAM])


class TestAdmissibility:
    def test_admissible_sequences(self):
        assert multidegree_admissible(Multidegree((1, 3, 9, 14, 12, 5, 1))) == []
        assert multidegree_admissible(Multidegree((1, 2, 4, 3, 1))) == []
        assert multidegree_admissible(Multidegree((1, 2, 4, 8, 16, 19, 13, 5, 1))) == []

    def test_log_concavity_violation_reported(self):
        violations = multidegree_admissible(Multidegree((1, 3, 9, 27, 81, 5, 1)))
        assert any("deg_5^2 = 25" in v for v in violations)

    def test_positivity_violation_reported(self):
        assert multidegree_admissible(Multidegree((1, 3, 0, 3, 1)))

    def test_all_violations_reported_not_just_first(self):
        violations = multidegree_admissible(Multidegree((1, 1, 9, 1, 9, 1, 1)))
        assert len(violations) > 1


class TestAdmissibleTypes:
    def test_threefold_base_locus(self):
        types = admissible_types(r=3)
        assert [(t.n, t.delta1, t.delta2) for t in types] == [
            (5, 5, 5),
            (6, 3, 5),
            (8, 2, 5),
        ]

    def test_p7_forces_cubo_cubic_fourfold(self):
        types = admissible_types(n=7)
        assert types == [AdmissibleType(7, 3, 3, 4, 4)]

    def test_curve_base_locus(self):
        types = admissible_types(r=1)
        assert [(t.n, t.delta1, t.delta2) for t in types] == [(3, 3, 3), (4, 2, 3)]

    def test_stable_under_doubling_the_bound(self):
        for kwargs in ({"r": 3}, {"r": 1}, {"n": 7}):
            assert admissible_types(delta_bound=32, **kwargs) == admissible_types(
                delta_bound=64, **kwargs
            )

    def test_r3_solution_set_stable_from_bound_8(self):
        reference = admissible_types(r=3, delta_bound=32)
        for bound in (8, 12, 20):
            assert admissible_types(r=3, delta_bound=bound) == reference

    def test_types_satisfy_both_relations(self):
        for t in admissible_types(r=3) + admissible_types(r=1, delta_bound=16):
            lhs = t.n * (t.delta1 - 1) * t.delta2
            assert lhs == (t.delta1 * t.delta2 - 1) * t.dim_b + (t.delta1 + 1) * t.delta2 - 2
            lhs2 = t.n * (t.delta2 - 1) * t.delta1
            assert lhs2 == (t.delta1 * t.delta2 - 1) * t.dim_b_prime + (t.delta2 + 1) * t.delta1 - 2


class TestVanishingThreshold:
    def test_builtin_configs(self):
        assert vanishing_threshold(P6) == 2
        assert vanishing_threshold(P7) == 1

    def test_quadratic_p8(self):
        cfg = TransformationConfig(8, 2, 5, 3, "threefold-in-P6")
        assert vanishing_threshold(cfg) == 1
