import math
import numpy as np
import pytest
from specfac import polynomials as poly
from specfac.graph import construct_family
from specfac.spectral import alpha_matrix, spectral_radius
from specfac.util import NoRealRootError, floor3half


alphas = [0, 0.25, 0.5, 0.6, 5 / 7, 0.75, 0.9]


def test_threshold():

    assert poly.f_threshold(0) == 20
    assert poly.f_threshold(0.5) == 20
    assert poly.f_threshold(0.6) == 25
    assert poly.f_threshold(5 / 7) == 25
    assert poly.f_threshold(0.9) == 73
    assert poly.f_threshold(0.75) == pytest.approx(31)
    with pytest.raises(ValueError):
        poly.f_threshold(1)


def test_phi_psi():

    np.testing.assert_allclose(poly.phi(20, 0).coeffs, [1, -16, -19, 32])
    np.testing.assert_allclose(poly.psi(20, 0).coeffs, [1, -14, -23, 104])
    assert poly.tau(20, 0) == pytest.approx(17.0066, abs=1e-3)

    for alpha in alphas:
        n0 = int(math.ceil(poly.f_threshold(alpha)))
        for n in [n0, n0 + 3, n0 + 10]:
            rho = spectral_radius(alpha_matrix(construct_family(1, n - 3, 2), alpha))
            assert poly.tau(n, alpha) == pytest.approx(rho, abs=1e-9)
            rho = spectral_radius(alpha_matrix(construct_family(2, n - 6, 4), alpha))
            assert poly.theta(n, alpha) == pytest.approx(rho, abs=1e-9)
            assert n - 3 < poly.tau(n, alpha) < n - 1

    with pytest.raises(ValueError):
        poly.tau(19, 0)
    assert poly.tau(10, 0, enforce_threshold=False) == pytest.approx(
        spectral_radius(alpha_matrix(construct_family(1, 7, 2), 0)), abs=1e-9
    )


def test_case2_quotients():

    assert poly.char_poly_B2(2, 6, 0).coeffs.tolist() == [1, -1, -8]
    assert poly.char_poly_B3(2, 7, 0).coeffs.tolist() == [1, -1, -10]
    assert poly.b2_root(2, 6, 0) == pytest.approx((1 + math.sqrt(33)) / 2)
    assert poly.b3_root(2, 7, 0) == pytest.approx((1 + math.sqrt(41)) / 2)

    for alpha in alphas:
        for s in range(1, 9):
            k = floor3half(s)
            rho = spectral_radius(alpha_matrix(construct_family(s, 0, k + 1), alpha))
            assert poly.b2_root(s, s + k + 1, alpha) == pytest.approx(rho, abs=1e-9)
            rho = spectral_radius(alpha_matrix(construct_family(s, 0, k + 2), alpha))
            assert poly.b3_root(s, s + k + 2, alpha) == pytest.approx(rho, abs=1e-9)

    with pytest.raises(ValueError):
        poly.char_poly_B2(2, 7, 0)


def test_b1():

    for alpha in alphas:
        for s in range(1, 7):
            k = floor3half(s)
            for n in [s + k + 3, s + k + 8, 30]:
                n1 = n - s - k - 1
                G = construct_family(s, n1, k + 1)
                w = poly.b1_eigenvalues(s, n, alpha)
                root = poly.largest_real_root(poly.char_poly_B1(s, n, alpha))
                rho = spectral_radius(alpha_matrix(G, alpha))
                assert w[-1] == pytest.approx(rho, abs=1e-9)
                assert root == pytest.approx(rho, abs=1e-9)
                eta2, lower, upper = poly.eta2_bounds(s, n, alpha)
                assert lower - 1e-9 <= eta2 <= upper + 1e-9

    with pytest.raises(ValueError):
        poly.b1_matrix(2, 7, 0)
    with pytest.raises(ValueError):
        poly.b1_matrix(0, 20, 0)


def test_difference_identities():

    xs = [-3.0, 0.0, 1.5, 10.0, 17.0]
    for alpha in [0, 0.5]:
        # odd s
        s, n = 3, 20
        diff = poly.char_poly_B1(s, n, alpha) - poly.phi(n, alpha)
        H = poly.H_poly(s, n, alpha)
        for x in xs:
            assert diff(x) == pytest.approx(-(s - 1) / 4 * H(x), abs=1e-8)
        # even s
        s, n = 4, 20
        diff = poly.char_poly_B1(s, n, alpha) - poly.psi(n, alpha)
        h = poly.h_poly(s, n, alpha)
        for x in xs:
            assert diff(x) == pytest.approx(-(s - 2) / 4 * h(x), abs=1e-8)

    np.testing.assert_allclose(
        (poly.char_poly_B1(3, 20, 0) - poly.phi(20, 0)).coeffs, [3, -10, 133]
    )
    np.testing.assert_allclose(
        (poly.char_poly_B1(4, 20, 0) - poly.psi(20, 0)).coeffs, [3, -17, 120]
    )
    assert poly.H_poly(3, 20, 0).coeffs[-1] == -266
    assert poly.h_poly(4, 20, 0).coeffs[-1] == -240


def test_auxiliary_values():

    for alpha in [0, 0.3, 0.5, 5 / 7]:
        assert poly.t1_value(9, alpha) == pytest.approx(456 - 544 * alpha)
        assert poly.t2_value(8, alpha) == pytest.approx(376 - 456 * alpha)
        assert poly.t3_value(9, alpha) == pytest.approx(552 - 648 * alpha)
        assert poly.t4_value(8, alpha) == pytest.approx(464 - 552 * alpha)
        assert poly.Omega_value(20, alpha) == pytest.approx(168 * alpha ** 2 - 808 * alpha + 580)
        for n in [20, 25, 40]:
            assert poly.Omega_value(n, alpha) == pytest.approx(poly.psi(n, alpha)(n - 3))

    # t-values are 4 f_B(n-3) at the tied orders
    for alpha in alphas:
        for s in range(1, 12):
            k = floor3half(s)
            t_b2 = poly.t1_value(s, alpha) if s % 2 else poly.t2_value(s, alpha)
            t_b3 = poly.t3_value(s, alpha) if s % 2 else poly.t4_value(s, alpha)
            n = s + k + 1
            assert t_b2 == pytest.approx(4 * poly.char_poly_B2(s, n, alpha)(n - 3))
            n = s + k + 2
            assert t_b3 == pytest.approx(4 * poly.char_poly_B3(s, n, alpha)(n - 3))

    assert poly.p_value(4, 20, 0) == pytest.approx(-1080)
    for s, n in [(4, 20), (6, 25), (8, 30)]:
        expected = -3 * n * n + (3 * s + 43) * n + 2.25 * s * s - 18 * s - 140
        assert poly.p_value(s, n, 0.5) == pytest.approx(expected)


def test_derivatives():

    assert poly.g2_value(3, 0) == pytest.approx(-90)
    assert poly.g4_value(4, 0) == pytest.approx(-102)

    for alpha in [0, 0.25, 0.5, 5 / 7]:
        for s in [3, 5, 7, 11]:
            n = 30
            dH = poly.H_poly(s, n, alpha).deriv()
            assert poly.g1_value(s, n, alpha) == pytest.approx(dH(n - 3))
            dh = poly.h_poly(s + 1, n, alpha).deriv()
            assert poly.g3_value(s + 1, n, alpha) == pytest.approx(dh(n - 5))

            # P and p are quadratic in n, a unit central difference is exact
            n_mid = (5 * s + 5) / 2
            slope = (poly.P_value(s, n_mid + 1, alpha) - poly.P_value(s, n_mid - 1, alpha)) / 2
            assert poly.g2_value(s, alpha) == pytest.approx(slope, abs=1e-8)
            s_even = s + 1
            n_mid = 5 * s_even / 2 + 3
            slope = (
                poly.p_value(s_even, n_mid + 1, alpha) - poly.p_value(s_even, n_mid - 1, alpha)
            ) / 2
            assert poly.g4_value(s_even, alpha) == pytest.approx(slope, abs=1e-8)

    # P(n) = H(n-3), Psi = f_B1(n-3)
    assert poly.P_value(3, 20, 0) == pytest.approx(poly.H_poly(3, 20, 0)(17))
    assert poly.Psi_value(3, 20, 0.8) == pytest.approx(poly.char_poly_B1(3, 20, 0.8)(17))
    assert poly.Phi_value(4, 20, 0.8) == pytest.approx(poly.char_poly_B1(4, 20, 0.8)(15))


def test_corollary():

    printed = poly.corollary_poly(20, as_printed=True)
    np.testing.assert_allclose(printed.coeffs, [4, -106, 660, -266])
    np.testing.assert_allclose(poly.corollary_poly(20).coeffs, [4, -106, 660, -272])
    for n in [20, 25, 30]:
        np.testing.assert_allclose(poly.corollary_poly(n).coeffs, 4 * poly.phi(n, 0.5).coeffs)
        assert poly.mu(n) == pytest.approx(poly.tau(n, 0.5), abs=1e-10)
        assert poly.mu(n, as_printed=True) != pytest.approx(poly.mu(n), abs=1e-10)
    with pytest.raises(ValueError):
        poly.mu(19)


def test_largest_real_root():

    assert poly.largest_real_root([1, -3, 2]) == pytest.approx(2)
    assert poly.largest_real_root(np.poly1d([1, -6, 11, -6])) == pytest.approx(3, abs=1e-12)
    assert poly.largest_real_root([2, 0, 0, -16]) == pytest.approx(2, abs=1e-12)
    # single real root
    assert poly.largest_real_root([1, 0, 1, 10]) == pytest.approx(-2, abs=1e-12)
    assert poly.largest_real_root([1, -6, 11, -6], bracket=(2.5, 3.5)) == pytest.approx(3)

    with pytest.warns(UserWarning):
        root = poly.largest_real_root([1, -6, 11, -6], bracket=(0, 1.5))
    assert root == pytest.approx(3, abs=1e-12)

    with pytest.raises(NoRealRootError):
        poly.largest_real_root([1, 0, 1])
    with pytest.raises(ValueError):
        poly.largest_real_root([1, 0, 0, 0, 1])


def test_multiple_roots():

    # triple roots, flat around the root
    for r in [1, 3, -2, 1.5]:
        p = np.poly1d([r, r, r], r=True)
        root = poly.largest_real_root(p)
        print(r, root)
        assert abs(root - r) <= 1e-12
    assert abs(poly.largest_real_root(2 * np.poly1d([1, 1, 1], r=True)) - 1) <= 1e-12

    # double root as the largest root: (x-2)²(x+1)
    assert abs(poly.largest_real_root([1, -3, 0, 4]) - 2) <= 1e-12
    # double root below a simple one: (x+1)²(x-2)
    assert abs(poly.largest_real_root([1, 0, -3, -2]) - 2) <= 1e-12


if __name__ == "__main__":
    test_threshold()
    test_phi_psi()
    test_case2_quotients()
    test_b1()
    test_difference_identities()
    test_auxiliary_values()
    test_derivatives()
    test_corollary()
    test_largest_real_root()
    test_multiple_roots()
