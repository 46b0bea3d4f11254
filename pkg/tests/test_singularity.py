import numpy as np
import pytest

from frontal_helicoid import HelicoidalSurface, LegendreCurve, load_spec, load_surface, validate
from frontal_helicoid.errors import NotSingularError
from frontal_helicoid.helicoid import Kind, SingularReason
from frontal_helicoid.singularity import (_ALLOWED, CuspType, _theorem_case, classify_cusp,
                                          classify_cuspidal_edge, classify_surface,
                                          det_identity_check, find_singular_points,
                                          profile_coeffs, profile_curve_jet,
                                          profile_derivatives, table_oracle_residual)
from frontal_helicoid.tolerance import DEFAULT_TOL

BZ, AX = SingularReason.BETA_ZERO, SingularReason.PROFILE_AXIS_ZERO


def make(x1, x2, a, b, domain=(-1.0, 1.2), lam=1.0, kind=1):
    c = LegendreCurve(x1, x2, a, b, domain)
    assert validate(c).ok
    return HelicoidalSurface(c, lam, kind)


def germ(i, j, c=1.0):
    """Derivatives 1..5 at 0 of t -> ((c t)^i, (c t)^j)."""
    d = np.zeros((5, 2))
    for col, p in enumerate((i, j)):
        if p <= 5:
            d[p - 1, col] = np.prod(np.arange(1, p + 1)) * c**p
    return d


class TestClassifyCusp:
    @pytest.mark.parametrize("ij, expected", [
        ((2, 3), CuspType.CUSP_23), ((2, 5), CuspType.CUSP_25),
        ((3, 4), CuspType.CUSP_34), ((3, 5), CuspType.CUSP_35),
        ((1, 2), CuspType.REGULAR),
        ((2, 4), CuspType.UNCLASSIFIED), ((3, 6), CuspType.UNCLASSIFIED),
        ((4, 5), CuspType.UNCLASSIFIED), ((2, 7), CuspType.UNCLASSIFIED),
    ])
    def test_model_germs(self, ij, expected):
        assert classify_cusp(germ(*ij)) is expected

    def test_listed_derivatives(self):
        assert classify_cusp([(0, 0), (2, 0), (0, 6), (0, 0), (0, 0)]) is CuspType.CUSP_23

    @pytest.mark.parametrize("ij", [(2, 3), (2, 5), (3, 4), (3, 5)])
    def test_invariant_under_linear_maps(self, ij, rng):
        expected = classify_cusp(germ(*ij))
        for _ in range(20):
            m = rng.normal(size=(2, 2))
            if abs(np.linalg.det(m)) < 0.1:
                continue
            d = germ(*ij, c=rng.uniform(0.3, 3.0)) @ m.T
            assert classify_cusp(d) is expected

    def test_k_nonzero_for_25(self):
        # t -> (t^2 + t^3, t^5 + t^3 ...) : gamma''' parallel to gamma'' with k != 0
        d = np.array([[0, 0], [2, 0], [6, 0], [0, 0], [0, 120]], float)
        assert classify_cusp(d) is CuspType.CUSP_25

    def test_bad_shape(self):
        with pytest.raises(ValueError):
            classify_cusp(np.zeros((4, 2)))

    def test_labels(self):
        assert CuspType.CUSP_25.edge_label == "(2,5)-cuspidal-edge"
        assert CuspType.CUSP_34.cusp_label == "(3,4)-cusp"
        assert CuspType.UNCLASSIFIED.edge_label == "unclassified"


class TestFindSingularPoints:
    @pytest.mark.parametrize("name, reasons", [
        ("example-5.1", {BZ}), ("example-5.2", {BZ}),
        ("type1-cusp23", {AX}), ("type2-cusp23", {AX}),
        ("type1-cusp34", {AX}), ("type1-cusp35", {BZ, AX}),
    ])
    def test_bundled(self, name, reasons):
        sweep = find_singular_points(load_surface(name))
        assert len(sweep.points) == 1 and sweep.suspects == []
        (p,) = sweep.points
        assert abs(p.u0) < 1e-10 and p.reasons == reasons

    def test_two_roots_sorted(self):
        s = make("u^2*cosh(u) - 2*u*sinh(u) + 1.75*cosh(u)",
                 "u^2*sinh(u) - 2*u*cosh(u) + 1.75*sinh(u)", "cosh(u)", "sinh(u)")
        us = [p.u0 for p in find_singular_points(s).points]
        np.testing.assert_allclose(us, [-0.5, 0.5], atol=1e-11)

    def test_tangent_root_is_only_suspected(self):
        s = make("u^2*cosh(u) - 2*u*sinh(u) + 2*cosh(u) - 2",
                 "u^2*sinh(u) - 2*u*cosh(u) + 2*sinh(u)", "cosh(u)", "sinh(u)")
        sweep = find_singular_points(s)
        assert sweep.points == []
        assert len(sweep.suspects) == 1 and abs(sweep.suspects[0].u) < 1e-9

    def test_regular_surface(self):
        s = make("sinh(u)", "cosh(u)", "sinh(u)", "cosh(u)")
        assert find_singular_points(s).points == []

    def test_grid_floor(self, ex51):
        with pytest.raises(ValueError):
            find_singular_points(ex51, grid_n=15)

    @pytest.mark.parametrize("n", [16, 101, 256, 1000])
    def test_grid_independent(self, ex52, n):
        (p,) = find_singular_points(ex52, grid_n=n).points
        assert abs(p.u0) < 1e-10


class TestProfile:
    def test_first_example_second_derivative(self, ex51):
        gx, gy = profile_curve_jet(ex51, 0.0, 5)
        assert (gx.value, gy.value) == (0.0, 0.0)
        assert (gx.derivative(1), gy.derivative(1)) == (0.0, 0.0)
        assert (gx.derivative(2), gy.derivative(2)) == pytest.approx((1.0, 0.0))

    def test_flat_screw_keeps_profile(self):
        s = make("0", "u^2 + 1", "1", "0")
        gx, gy = profile_curve_jet(s, 0.4, 4)
        np.testing.assert_allclose(gx.coeffs, [1.16, 0.8, 1, 0, 0])
        np.testing.assert_array_equal(gy.coeffs, 0)

    def test_first_example_coefficients(self, ex51):
        pc = profile_coeffs(ex51, 0.0)
        A, B = pc.first, pc.second
        assert (A[1], B[1], B[3], A[2]) == pytest.approx((1.0, 0.0, 0.0, 0.0))

    def test_second_example_coefficients(self, ex52):
        pc = profile_coeffs(ex52, 0.0)
        assert (pc.first[1], pc.second[1]) == pytest.approx((1.0, 0.0))
        np.testing.assert_allclose(profile_derivatives(ex52, 0.0)[1], [1.0, 0.0], atol=1e-15)

    def test_axis_forces_b2_zero(self):
        for name in ("type1-cusp23", "type1-cusp35", "example-5.1"):
            assert profile_coeffs(load_surface(name), 0.0).second[1] == pytest.approx(0, abs=1e-15)

    @pytest.mark.parametrize("name, points", [("example-5.1", (-1.3, 0.0, 0.7)),
                                              ("example-5.2", (-0.5, 0.0, 0.5))])
    def test_det_identity(self, name, points):
        s = load_surface(name)
        for u in points:
            assert det_identity_check(s, u) < 1e-8

    def test_table_matches_oracle(self, bundled, rng):
        for u in rng.uniform(*bundled.curve.domain, 25):
            assert table_oracle_residual(bundled, u).max() < 1e-8

    @pytest.mark.parametrize("lam", [1.0, 0.7, -2.0])
    def test_25_determinant_combination(self, lam):
        # at a (2,5) point on the axis: 3 det(g'', g5) - 10 det(g''', g4) = 60 delta a beta'^3 l / lam
        s = HelicoidalSurface(load_spec("example-5.1").curve(), lam, 1)
        d = profile_derivatives(s, 0.0)
        det = lambda p, q: p[0] * q[1] - p[1] * q[0]
        got = 3 * det(d[1], d[4]) - 10 * det(d[2], d[3])
        assert got == pytest.approx(60 / lam, rel=1e-12)


class TestClassifyCuspidalEdge:
    def test_first_example(self, ex51):
        r = classify_cuspidal_edge(ex51, 0.0)
        assert r.fast is r.oracle is CuspType.CUSP_25 and r.verified
        c = r.conditions
        assert (c["x2"], c["beta"], c["a"], c["beta_prime_l"]) == pytest.approx((0, 0, 1, 1), abs=1e-10)
        assert r.scope == "theorem" and r.case == "beta=0,axis!=0"

    def test_second_example(self, ex52):
        r = classify_cuspidal_edge(ex52, 0.0)
        assert r.fast is r.oracle is CuspType.CUSP_25
        c = r.conditions
        assert (c["x1"], c["beta"], c["b"], c["beta_prime_l"]) == pytest.approx((0, 0, 1, 1), abs=1e-10)

    @pytest.mark.parametrize("name, expected", [
        ("type1-cusp23", CuspType.CUSP_23), ("type1-cusp34", CuspType.CUSP_34),
        ("type1-cusp35", CuspType.CUSP_35), ("type2-cusp23", CuspType.CUSP_23),
        ("type2-cusp34", CuspType.CUSP_34), ("type2-cusp35", CuspType.CUSP_35),
        ("type1-offaxis", CuspType.CUSP_23),
    ])
    def test_derived_curves(self, name, expected):
        reports, suspects = classify_surface(load_surface(name))
        assert len(reports) == 1 and suspects == []
        assert reports[0].fast is reports[0].oracle is expected

    def test_off_axis_scope(self):
        r = classify_cuspidal_edge(load_surface("type1-offaxis"), 0.0)
        assert r.scope == "outside_theorem_scope" and r.case is None

    @pytest.mark.parametrize("kind, comps, case", [
        (1, ("sinh(u^2)/2", "(cosh(u^2) - 1)/2", "sinh(u^2)", "cosh(u^2)"), "beta=0,axis=0"),
        (1, ("(cosh(u^2) - 1)/2", "sinh(u^2)/2", "cosh(u^2)", "sinh(u^2)"), "beta=0,axis!=0"),
    ])
    def test_vanishing_l_is_unclassified(self, kind, comps, case):
        s = make(*comps, kind=kind)
        reports, _ = classify_surface(s)
        assert len(reports) == 1
        r = reports[0]
        assert r.case == case and r.fast is r.oracle is CuspType.UNCLASSIFIED
        assert abs(r.conditions["beta_prime_l"]) < 1e-10

    def test_regular_point_rejected(self, ex51):
        with pytest.raises(NotSingularError):
            classify_cuspidal_edge(ex51, 0.5)

    @pytest.mark.parametrize("eps", [1e-12, -3e-12, 8e-13])
    def test_stable_near_root(self, bundled, eps):
        (r0,) = classify_surface(bundled)[0]
        r = classify_cuspidal_edge(bundled, r0.u0 + eps)
        assert r.fast is r.oracle is r0.oracle

    def test_every_bundled_curve_agrees(self, bundled):
        reports, _ = classify_surface(bundled)
        assert reports and all(r.agree for r in reports)

    def test_case_exclusivity(self):
        values = {"beta": 0.0, "a": 0.0, "beta_prime_l": 0.0, "l": 1.0, "l_prime": 0.0}
        scales = dict.fromkeys(values, 1.0)
        for beta in (0.0, 1.0):
            for a in (0.0, 1.0):
                for bl in (0.0, 1.0):
                    for l in (0.0, 1.0):
                        for lp in (0.0, 1.0):
                            values.update(beta=beta, a=a, beta_prime_l=bl, l=l, l_prime=lp)
                            if beta and a:
                                with pytest.raises(NotSingularError):
                                    _theorem_case(values, scales, "a", DEFAULT_TOL)
                                continue
                            case, result = _theorem_case(values, scales, "a", DEFAULT_TOL)
                            assert result in _ALLOWED[case]

    def test_report_serializes(self, ex51):
        d = classify_cuspidal_edge(ex51, 0.0).to_dict()
        assert d["type"] == "(2,5)-cuspidal-edge" and d["reasons"] == ["beta_zero"]
        assert list(d["conditions"]) == sorted(d["conditions"])
