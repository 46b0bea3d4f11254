import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frontal_helicoid import load_surface
from frontal_helicoid.minkowski import (CausalCharacter, DeltaMembership, causal_character,
                                        delta_membership, pseudo_dot, pseudo_dot2, pseudo_dot3,
                                        pseudo_wedge, vec2, vec3)

finite = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)
vectors3 = st.tuples(finite, finite, finite).map(np.array)


class TestInnerProducts:
    def test_signature(self):
        assert pseudo_dot3([1, 0, 0], [1, 0, 0]) == -1
        assert pseudo_dot3([0, 1, 0], [0, 1, 0]) == 1
        assert pseudo_dot2([1, 0], [1, 0]) == -1
        assert pseudo_dot2([0, 1], [0, 1]) == 1

    def test_dispatch_on_length(self):
        assert pseudo_dot([2, 3], [5, 7]) == -10 + 21
        assert pseudo_dot([2, 3, 1], [5, 7, 1]) == -10 + 21 + 1
        with pytest.raises(ValueError):
            pseudo_dot([1, 2, 3, 4], [1, 2, 3, 4])

    @given(st.floats(-5, 5), st.floats(-5, 5))
    def test_nu_mu_orthogonal(self, a, b):
        assert pseudo_dot2((a, b), (b, a)) == 0.0

    def test_lightcone_pair_example(self, ex51):
        f = ex51.lightcone_frame(0.3, 1.0)
        assert pseudo_dot3(f.lplus, f.lminus) == pytest.approx(-2.0, abs=1e-12)

    @given(vectors3, vectors3, vectors3, finite, finite)
    @settings(max_examples=200)
    def test_bilinear(self, x, y, z, a, b):
        lhs = pseudo_dot3(a * x + b * y, z)
        rhs = a * pseudo_dot3(x, z) + b * pseudo_dot3(y, z)
        scale = (abs(a) * np.abs(x) + abs(b) * np.abs(y)) @ np.abs(z)
        assert abs(lhs - rhs) <= 1e-12 * scale + 1e-300

    def test_constructors_reject_nonfinite(self):
        with pytest.raises(ValueError):
            vec3(1.0, np.nan, 0.0)
        with pytest.raises(ValueError):
            vec2(np.inf, 0.0)


class TestWedge:
    def test_basis(self):
        np.testing.assert_array_equal(pseudo_wedge([0, 1, 0], [0, 0, 1]), [-1, 0, 0])

    def test_self_wedge_vanishes(self, rng):
        x = rng.normal(size=3)
        np.testing.assert_array_equal(pseudo_wedge(x, x), np.zeros(3))

    @given(vectors3, vectors3)
    @settings(max_examples=200)
    def test_antisymmetric(self, x, y):
        np.testing.assert_allclose(pseudo_wedge(x, y), -pseudo_wedge(y, x), rtol=0, atol=1e-15)

    def test_orthogonal_to_factors(self, rng):
        for _ in range(100):
            x, y = rng.normal(size=(2, 3)) * rng.uniform(0.1, 10)
            w = pseudo_wedge(x, y)
            scale = np.abs(x).max() ** 2 * np.abs(y).max()
            assert abs(pseudo_dot3(w, x)) <= 1e-10 * scale
            assert abs(pseudo_dot3(w, y)) <= 1e-10 * np.abs(y).max() ** 2 * np.abs(x).max()


class TestCausalCharacter:
    @pytest.mark.parametrize("x, expected", [
        ((1, 1, 0), CausalCharacter.LIGHTLIKE),
        ((0, 0, 0), CausalCharacter.SPACELIKE),
        ((2, 1, 1), CausalCharacter.TIMELIKE),
        ((0, 1, 0), CausalCharacter.SPACELIKE),
        ((1, 0), CausalCharacter.TIMELIKE),
        ((1, -1), CausalCharacter.LIGHTLIKE),
    ])
    def test_examples(self, x, expected):
        assert causal_character(x) is expected

    def test_lightlike_is_scale_aware(self):
        assert causal_character((1e8, 1e8 + 1e-3, 0)) is CausalCharacter.LIGHTLIKE
        assert causal_character((1.0, 1.0 + 1e-3, 0)) is CausalCharacter.SPACELIKE


class TestDeltaMembership:
    @pytest.mark.parametrize("v, expected", [
        ((0, 1), DeltaMembership.S11),
        ((1, 0), DeltaMembership.H1),
        ((np.cosh(0.5), np.sinh(0.5)), DeltaMembership.H1),
        ((np.sinh(2.0), np.cosh(2.0)), DeltaMembership.S11),
        ((1, 1), DeltaMembership.NONE),
        ((2, 0), DeltaMembership.NONE),
    ])
    def test_examples(self, v, expected):
        assert delta_membership(v) is expected

    def test_sign_matches_delta(self):
        # <nu, nu> = -(a^2 - b^2): H1 iff delta = +1
        for name, member in [("example-5.1", DeltaMembership.H1),
                             ("example-5.2", DeltaMembership.S11)]:
            c = load_surface(name).curve
            for u in np.linspace(*c.domain, 7):
                assert delta_membership(c.values(u)[2:]) is member
