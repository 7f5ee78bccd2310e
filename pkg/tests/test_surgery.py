from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from surgerylab.invariants import TorusKnot, cable_genus
from surgerylab.slopes import DegeneracyLocus, LensRelation, LensSpace, Slope, lens_equiv
from surgerylab.surgery import (
    Lens,
    MonodromyClass,
    Reducible,
    SeifertFibered,
    SphericalType,
    Verdict,
    allowed_degeneracy_loci,
    characterizing_bound,
    characterizing_gate,
    cable_inequality_infeasible,
    classify_torus_surgery,
    exceptional_gate,
    satellite_slope_transfer,
    spherical_type,
)

RV, LV, NEITHER = MonodromyClass.RIGHT_VEERING, MonodromyClass.LEFT_VEERING, MonodromyClass.NEITHER


class TestClassify:
    def test_examples(self):
        res = classify_torus_surgery(TorusKnot(5, 2), Slope(13))
        assert res == SeifertFibered((5, 2, 3))
        assert res.spherical_type is SphericalType.ICOSAHEDRAL
        assert str(res) == "SFS(5,2,3)"
        res = classify_torus_surgery(TorusKnot(5, 4), Slope(21))
        assert res == Lens(LensSpace(21, 16)) and str(res) == "Lens L(21,16)"
        res = classify_torus_surgery(TorusKnot(3, 2), Slope(6))
        assert res == Reducible((LensSpace(3, 2), LensSpace(2, 1)))
        assert str(res) == "Reducible L(3,2)#L(2,1)"

    def test_non_integral_slopes(self):
        # p - q r s = 13 - 2 * 6 = 1
        assert classify_torus_surgery(TorusKnot(3, 2), Slope(13, 2)) == Lens(LensSpace(13, 8))
        assert classify_torus_surgery(TorusKnot(3, 2), Slope(7, 2)) == SeifertFibered((3, 2, 5))
        assert classify_torus_surgery(TorusKnot(3, 2), Slope(-1)) == SeifertFibered((3, 2, 7))

    def test_to_dict(self):
        assert classify_torus_surgery(TorusKnot(5, 2), Slope(13)).to_dict() == {
            "kind": "sfs",
            "base": [5, 2, 3],
            "spherical_type": "Icosahedral",
        }
        assert classify_torus_surgery(TorusKnot(5, 4), Slope(21)).to_dict() == {
            "kind": "lens",
            "lens": {"p": 21, "q": 16},
        }

    @pytest.mark.parametrize("n", range(1, 51))
    def test_two_strand_special_slopes(self, n):
        K = TorusKnot(2 * n + 1, 2)
        for t, expected in [
            (0, SeifertFibered((2 * n + 1, 2, 2))),
            (1, Lens(LensSpace(4 * n + 1, 4))),
            (2, Reducible((LensSpace(2 * n + 1, 2), LensSpace(2, 2 * n + 1)))),
            (3, Lens(LensSpace(4 * n + 3, 4))),
            (4, SeifertFibered((2 * n + 1, 2, 2))),
        ]:
            res = classify_torus_surgery(K, Slope(4 * n + t))
            assert res == expected
            if t in (0, 4):
                assert res.spherical_type is SphericalType.PRISM

    @given(st.integers(2, 9), st.integers(2, 9), st.integers(-200, 200), st.integers(1, 12))
    def test_cases_match_the_arithmetic(self, r, s, p, q):
        if r == s or gcd(r, s) != 1 or gcd(p, q) != 1:
            return
        K = TorusKnot(r, s)
        res = classify_torus_surgery(K, Slope(p, q))
        if isinstance(res, Lens):
            assert abs(p - q * r * s) == 1 and res.lens.p == abs(p)
        elif isinstance(res, SeifertFibered):
            assert res.base == (K.r, K.s, abs(p - q * r * s))
        else:
            assert (p, q) == (r * s, 1)

    def test_counter_pair(self):
        a = classify_torus_surgery(TorusKnot(5, 4), Slope(21))
        b = classify_torus_surgery(TorusKnot(11, 2), Slope(21))
        assert isinstance(a, Lens) and isinstance(b, Lens)
        assert lens_equiv(a.lens, b.lens) is LensRelation.ORIENT_PRESERVING


class TestSphericalType:
    @pytest.mark.parametrize(
        "triple,kind",
        [
            ((5, 2, 3), SphericalType.ICOSAHEDRAL),
            ((2, 3, 3), SphericalType.TETRAHEDRAL),
            ((4, 3, 2), SphericalType.OCTAHEDRAL),
            ((2, 2, 17), SphericalType.PRISM),
            ((1, 7, 9), SphericalType.CYCLIC),
            ((2, 3, 6), SphericalType.NOT_FINITE),
            ((2, 3, 7), SphericalType.NOT_FINITE),
            ((3, 3, 3), SphericalType.NOT_FINITE),
        ],
    )
    def test_table(self, triple, kind):
        assert spherical_type(triple) is kind

    def test_finite_iff_positive_euler_characteristic(self):
        for a in range(1, 12):
            for b in range(a, 12):
                for c in range(b, 12):
                    finite = Fraction(1, a) + Fraction(1, b) + Fraction(1, c) > 1
                    assert (spherical_type((a, b, c)) is not SphericalType.NOT_FINITE) == finite


class TestLoci:
    def test_examples(self):
        assert [d.m for d in allowed_degeneracy_loci(2, RV)] == [2, 3, 4, 5, 6]
        assert [d.m for d in allowed_degeneracy_loci(2, LV)] == [-6, -5, -4, -3, -2]
        assert [(d.m, d.n) for d in allowed_degeneracy_loci(1, NEITHER)] == [(1, 0), (2, 0)]

    def test_rejects_genus_zero(self):
        with pytest.raises(ValueError):
            allowed_degeneracy_loci(0, RV)


class TestGate:
    def test_examples(self):
        v = exceptional_gate(3, RV, Slope(14))
        assert v.verdict is Verdict.MUST_BE_HYPERBOLIC and v.min_delta == 4
        assert v.witness == DegeneracyLocus(10, 1)
        v = exceptional_gate(2, NEITHER, Slope(7, 3))
        assert v.verdict is Verdict.MUST_BE_HYPERBOLIC and v.min_delta == 3
        v = exceptional_gate(2, RV, Slope(5))
        assert v.verdict is Verdict.POSSIBLY_EXCEPTIONAL
        assert v.witness == DegeneracyLocus(5, 1) and v.min_delta == 0

    def test_lspace_refinement_only_at_4g(self):
        for g in range(1, 6):
            plain = exceptional_gate(g, RV, Slope(4 * g))
            flagged = exceptional_gate(g, RV, Slope(4 * g), small_sfs_lspace=True)
            assert plain.verdict is Verdict.POSSIBLY_EXCEPTIONAL
            assert flagged.verdict is Verdict.MUST_BE_HYPERBOLIC and flagged.lspace_refinement
            other = exceptional_gate(g, RV, Slope(4 * g - 1), small_sfs_lspace=True)
            assert other == exceptional_gate(g, RV, Slope(4 * g - 1))

    def test_lv_mirrors_rv(self):
        for g in range(1, 5):
            for p in range(-60, 61):
                for q in range(1, 5):
                    if gcd(p, q) != 1:
                        continue
                    a = exceptional_gate(g, RV, Slope(p, q))
                    b = exceptional_gate(g, LV, Slope(-p, q))
                    assert (a.verdict, a.min_delta) == (b.verdict, b.min_delta)

    def test_to_dict(self):
        assert exceptional_gate(3, RV, Slope(14)).to_dict() == {
            "verdict": "MustBeHyperbolic",
            "witness": "10/1",
            "min_delta": 4,
            "lspace_refinement": False,
        }


class TestCharacterizing:
    def test_bound(self):
        assert characterizing_bound(TorusKnot(5, 2)) == 12
        assert characterizing_bound(TorusKnot(3, 2)) == 8
        assert characterizing_bound(TorusKnot(11, 2)) == 24

    def test_gate(self):
        assert characterizing_gate(TorusKnot(5, 2), Slope(13))
        assert not characterizing_gate(TorusKnot(11, 2), Slope(21))
        assert characterizing_gate(TorusKnot(3, 2), Slope(8))
        assert not characterizing_gate(TorusKnot(3, 2), Slope(15, 2))
        assert characterizing_gate(TorusKnot(3, 2), Slope(17, 2))


class TestSatellite:
    def test_transfer(self):
        assert satellite_slope_transfer(Slope(7, 3), 2) == Slope(7, 12)
        assert satellite_slope_transfer(Slope(-5), 3) == Slope(-5, 9)

    @pytest.mark.parametrize("slope,w", [(Slope(6), 2), (Slope(9, 2), 3), (Slope(5), 1)])
    def test_rejects(self, slope, w):
        with pytest.raises(ValueError):
            satellite_slope_transfer(slope, w)


class TestCableInequality:
    def test_never_holds_for_nontrivial_companion(self):
        assert not cable_inequality_infeasible(0, 1, 1)
        assert not cable_inequality_infeasible(100, -100, 100)

    def test_matches_rational_evaluation(self):
        for h in range(0, 8):
            for nn in [n for n in range(-6, 7) if n]:
                for gl in range(0, 4):
                    lhs = 4 * h + 2 + Fraction(1, nn)
                    rhs = 4 * cable_genus(2 * h + 1, 2, gl) + 4
                    assert cable_inequality_infeasible(h, nn, gl) == (lhs >= rhs)

    def test_zero_nn(self):
        with pytest.raises(ValueError):
            cable_inequality_infeasible(1, 0, 1)
