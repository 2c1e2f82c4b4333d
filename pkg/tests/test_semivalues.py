from fractions import Fraction

import pytest

from legipower import (
    ChamberSpec,
    CountVector,
    Dominance,
    MulticamSpec,
    PlayerClass,
    UsSpec,
    WeightingVector,
    banzhaf,
    binomial,
    class_critical_vector,
    distinguishing_indices,
    evaluate,
    member_critical_vector,
    point_mass,
    shapley_shubik,
    weak_desirability,
)
from legipower.oracle import critical_vector, from_spec


@pytest.fixture(scope="module")
def us_vectors():
    spec = UsSpec()
    return {cls: class_critical_vector(spec, cls) for cls in spec.classes()}


class TestConstructors:
    def test_uniform_small(self):
        assert banzhaf(3).weights == (Fraction(1, 4),) * 3
        assert banzhaf(1).weights == (Fraction(1),)

    def test_efficient_small(self):
        assert shapley_shubik(3).weights == (Fraction(1, 3), Fraction(1, 6), Fraction(1, 3))
        assert shapley_shubik(2).weights == (Fraction(1, 2), Fraction(1, 2))

    def test_point_mass_small(self):
        assert point_mass(3, 2).weights == (Fraction(0), Fraction(1, 2), Fraction(0))
        assert point_mass(5, 5).weights == (0, 0, 0, 0, 1)

    def test_full_size_constructions(self):
        assert banzhaf(537).weight(1) == Fraction(1, 2 ** 536)
        assert shapley_shubik(537).weight(270) == Fraction(1, 537 * binomial(536, 269))
        assert point_mass(9, 6).weight(6) == Fraction(1, binomial(8, 5))

    def test_normalisation_enforced(self):
        with pytest.raises(ValueError):
            WeightingVector((Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)))

    def test_negative_weight_rejected(self):
        with pytest.raises(ValueError):
            WeightingVector((Fraction(3, 2), Fraction(0), Fraction(-1, 4)))

    def test_point_mass_bounds(self):
        with pytest.raises(ValueError):
            point_mass(3, 0)
        with pytest.raises(ValueError):
            point_mass(3, 4)

    def test_normalisation_identity_holds_for_constructors(self):
        for n in (1, 2, 3, 7, 12, 40):
            for w in (banzhaf(n), shapley_shubik(n), point_mass(n, (n + 1) // 2)):
                total = sum(w.weight(k) * binomial(n - 1, k - 1) for k in range(1, n + 1))
                assert total == 1


class TestEvaluate:
    def test_uniform_on_majority_counts(self):
        assert evaluate(banzhaf(3), CountVector({2: 2})) == Fraction(1, 2)

    def test_efficient_on_majority_counts(self):
        assert evaluate(shapley_shubik(3), CountVector({2: 2})) == Fraction(1, 3)

    def test_empty_vector(self):
        assert evaluate(banzhaf(3), CountVector()) == 0

    def test_support_violation(self):
        with pytest.raises(ValueError):
            evaluate(banzhaf(3), CountVector({4: 1}))


class TestWeakDesirability:
    def test_us_senator_vs_representative(self, us_vectors):
        rel = weak_desirability(us_vectors[PlayerClass.SENATOR],
                                us_vectors[PlayerClass.REPRESENTATIVE])
        assert rel.kind is Dominance.STRICTLY_ABOVE

    def test_us_senator_vs_vice_president(self, us_vectors):
        cs = us_vectors[PlayerClass.SENATOR]
        cv = us_vectors[PlayerClass.VICE_PRESIDENT]
        rel = weak_desirability(cs, cv)
        assert rel.kind is Dominance.WEAKLY_ABOVE
        assert all(cs[k] == cv[k] for k in range(270, 357))

    def test_us_vice_president_vs_representative(self, us_vectors):
        rel = weak_desirability(us_vectors[PlayerClass.VICE_PRESIDENT],
                                us_vectors[PlayerClass.REPRESENTATIVE])
        assert rel.kind is Dominance.INCOMPARABLE
        assert rel.witness == (270, 357)

    def test_mirror_relations(self, us_vectors):
        rel = weak_desirability(us_vectors[PlayerClass.REPRESENTATIVE],
                                us_vectors[PlayerClass.SENATOR])
        assert rel.kind is Dominance.STRICTLY_BELOW
        rel = weak_desirability(us_vectors[PlayerClass.VICE_PRESIDENT],
                                us_vectors[PlayerClass.SENATOR])
        assert rel.kind is Dominance.WEAKLY_BELOW

    def test_equal(self):
        vec = CountVector({3: 4, 4: 1})
        assert weak_desirability(vec, CountVector({3: 4, 4: 1})).kind is Dominance.EQUAL

    def test_witness_rejected_outside_incomparable(self):
        from legipower.semivalues import Relation

        with pytest.raises(ValueError):
            Relation(Dominance.EQUAL, (1, 2))


class TestDistinguishingIndices:
    def test_none_for_comparable_vectors(self):
        assert distinguishing_indices(CountVector({2: 2}), CountVector({2: 2}), 3) is None
        assert distinguishing_indices(CountVector({2: 3}), CountVector({2: 2}), 3) is None

    def test_us_vp_vs_representative(self, us_vectors):
        cv = us_vectors[PlayerClass.VICE_PRESIDENT]
        cr = us_vectors[PlayerClass.REPRESENTATIVE]
        pro, contra = distinguishing_indices(cv, cr, 537)
        assert pro.weight(270) > 0 and contra.weight(357) > 0
        assert evaluate(pro, cv) > evaluate(pro, cr)
        assert evaluate(contra, cv) < evaluate(contra, cr)

    def test_middle_case_bicameral_members(self):
        spec = MulticamSpec((ChamberSpec("small", 101, 51), ChamberSpec("large", 150, 76)))
        v_small = member_critical_vector(spec, "small")
        v_large = member_critical_vector(spec, "large")
        pro, contra = distinguishing_indices(v_large, v_small, 251)
        assert pro.weight(127) > 0
        assert contra.weight(129) > 0
        assert evaluate(pro, v_large) > evaluate(pro, v_small)
        assert evaluate(contra, v_large) < evaluate(contra, v_small)


def _oracle_game_catalog():
    specs = [
        MulticamSpec((ChamberSpec("a", 3, 2),)),
        MulticamSpec((ChamberSpec("a", 3, 2), ChamberSpec("b", 4, 3))),
        MulticamSpec((ChamberSpec("a", 4, 2), ChamberSpec("b", 5, 4))),
        MulticamSpec((ChamberSpec("a", 2, 1), ChamberSpec("b", 3, 3), ChamberSpec("c", 4, 2))),
        UsSpec(3, 4, 2, 3, 3, 4, True, True),
        UsSpec(4, 5, 3, 3, 4, 4, True, True),
        UsSpec(3, 4, 2, 2, 3, 3, True, False),
    ]
    return [from_spec(spec) for spec in specs]


class TestIndexProperties:
    def test_efficiency_of_the_marginal_index(self):
        # The per-size weights 1/(n*C(n-1,k-1)) make every game's values sum
        # to exactly 1; checked over the whole oracle catalog.
        for game in _oracle_game_catalog():
            w = shapley_shubik(game.n)
            total = sum(evaluate(w, critical_vector(game, p)) for p in game.players())
            assert total == 1, game.labels

    def test_uniform_index_counts_swings(self):
        for game in _oracle_game_catalog():
            w = banzhaf(game.n)
            for player in game.players():
                vec = critical_vector(game, player)
                assert evaluate(w, vec) * 2 ** (game.n - 1) == vec.total()

    def test_monotone_evaluation_under_dominance(self, us_vectors):
        # A coordinatewise-dominant critical vector never evaluates lower,
        # whatever the index.
        pairs = []
        for game in _oracle_game_catalog():
            players = game.players()
            vectors = [critical_vector(game, p) for p in players[:4]]
            pairs.extend(
                (vectors[i], vectors[j], game.n)
                for i in range(len(vectors))
                for j in range(len(vectors))
                if i != j
            )
        pairs.append((us_vectors[PlayerClass.PRESIDENT], us_vectors[PlayerClass.SENATOR], 537))
        pairs.append((us_vectors[PlayerClass.SENATOR], us_vectors[PlayerClass.VICE_PRESIDENT], 537))
        for ci, cj, n in pairs:
            rel = weak_desirability(ci, cj)
            if rel.kind not in (Dominance.STRICTLY_ABOVE, Dominance.WEAKLY_ABOVE, Dominance.EQUAL):
                continue
            for w in (banzhaf(n), shapley_shubik(n), point_mass(n, max(1, n // 2))):
                assert evaluate(w, ci) >= evaluate(w, cj)
