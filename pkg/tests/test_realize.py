import pytest

from surgerylab.invariants import (
    LaurentPoly,
    TorusKnot,
    alexander_from_torsion,
    torsion_from_changemaker,
    torus_alexander,
)
from surgerylab.lattices import (
    complement_basis,
    enumerate_changemakers,
    lattice_isomorphic,
    linear_plumbing_gram,
)
from surgerylab.realize import general_realization, identify_alexander, lens_realization_candidates
from surgerylab.slopes import neg_cf_expand


def unfiltered_search(p, q):
    # same search without the norm-profile shortcut
    weights = neg_cf_expand(p, q)
    target = linear_plumbing_gram(weights)
    return [
        s
        for s in enumerate_changemakers(p, len(weights) + 1)
        if lattice_isomorphic(complement_basis(s), target)
    ]


class TestLensFamily:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 7])
    def test_generic_n(self, n):
        rep = lens_realization_candidates(n)
        assert [c.sigma for c in rep.candidates] == [(1,) + (2,) * n]
        assert rep.candidates[0].label == str(TorusKnot(2 * n + 1, 2))
        assert rep.weights == [5] + [2] * (n - 1) and rep.ambient_dim == n + 1

    def test_n5(self):
        rep = lens_realization_candidates(5)
        by_sigma = {c.sigma: c for c in rep.candidates}
        assert set(by_sigma) == {(1, 2, 2, 2, 2, 2), (1, 1, 1, 1, 1, 4)}
        assert by_sigma[(1, 1, 1, 1, 1, 4)].label == "T_{5,4}"
        assert by_sigma[(1, 2, 2, 2, 2, 2)].label == "T_{11,2}"

    @pytest.mark.parametrize("n", range(1, 9))
    def test_candidates_are_sound(self, n):
        rep = lens_realization_candidates(n)
        target = linear_plumbing_gram([5] + [2] * (n - 1))
        for c in rep.candidates:
            assert sum(x * x for x in c.sigma) == 4 * n + 1
            assert lattice_isomorphic(complement_basis(c.sigma), target)
            assert c.genus == c.alexander.degree
            assert c.alexander == alexander_from_torsion(torsion_from_changemaker(c.sigma, 4 * n + 1))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_shortcut_changes_nothing(self, n):
        rep = lens_realization_candidates(n)
        assert [c.sigma for c in rep.candidates] == unfiltered_search(4 * n + 1, n)
        assert rep.examined == len(enumerate_changemakers(4 * n + 1, n + 1))

    def test_rejects_n0(self):
        with pytest.raises(ValueError):
            lens_realization_candidates(0)


class TestGeneral:
    def test_examples(self):
        rep = general_realization(9, 2)
        assert [c.sigma for c in rep.candidates] == [(1, 2, 2)]
        assert rep.candidates[0].label == "T_{5,2}"
        rep = general_realization(2, 1)
        assert [(c.sigma, c.genus, c.label) for c in rep.candidates] == [((1, 1), 0, "unknot")]

    @pytest.mark.parametrize("p,q", [(7, 2), (11, 3), (13, 3), (17, 5), (19, 7), (23, 4), (25, 7)])
    def test_shortcut_changes_nothing(self, p, q):
        assert [c.sigma for c in general_realization(p, q).candidates] == unfiltered_search(p, q)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            general_realization(9, 2, ambient_dim=5)

    def test_report_dict(self):
        d = general_realization(9, 2).to_dict()
        assert d["plumbing_weights"] == [5, 2] and d["ambient_dim"] == 3 and d["n"] is None
        assert d["candidates"][0]["alexander"] == [[2, 1], [1, -1], [0, 1], [-1, -1], [-2, 1]]


class TestIdentify:
    def test_torus_knots(self):
        for r, s in [(3, 2), (5, 2), (5, 3), (5, 4), (7, 3), (11, 2)]:
            K = TorusKnot(r, s)
            g = (r - 1) * (s - 1) // 2
            assert identify_alexander(torus_alexander(K), g) == str(K)

    def test_unidentified(self):
        assert identify_alexander(LaurentPoly({1: 2, 0: -3, -1: 2}), 1) == "unidentified"
