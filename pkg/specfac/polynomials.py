"""
Closed-form characteristic polynomials of the quotient matrices of K_s ∨ (K_{n1} ∪ i·K1), the
threshold cubics φ, ψ and the signless-Laplacian cubic, their largest roots, and the auxiliary
polynomials used to compare them.

Polynomials are :py:class:`numpy.poly1d` objects (highest degree first). Coefficients are
assembled from exact integer subterms such as ⌊3s/2⌋ and only then combined in double
precision.
"""

import math
import warnings
from fractions import Fraction
import numpy as np
from scipy.optimize import brentq
from specfac.util import TOL_ROOT, NoRealRootError, check_alpha, floor3half


def _rational(alpha):
    return Fraction(alpha).limit_denominator(10**9)


def f_threshold(alpha):
    """
    Order from which the spectral bound applies:
    20 on [0, 1/2], 25 on (1/2, 5/7], 7/(1-α)+3 on (5/7, 1).
    """
    check_alpha(alpha)
    a = _rational(alpha)
    if a <= Fraction(1, 2):
        return 20.0
    if a <= Fraction(5, 7):
        return 25.0
    return float(7 / (1 - a) + 3)


def _as_poly(poly):
    if isinstance(poly, np.poly1d):
        coeffs = poly.coeffs
    else:
        coeffs = np.atleast_1d(np.asarray(poly, dtype=np.float64))
    coeffs = np.trim_zeros(np.asarray(coeffs, dtype=np.float64), "f")
    if not np.all(np.isfinite(coeffs)):
        raise ValueError("Polynomial has non-finite coefficients.")
    return np.poly1d(coeffs)


def _largest_root_quadratic(a, b, c):
    disc = b * b - 4 * a * c
    if disc < 0:
        raise NoRealRootError("Quadratic has no real root (discriminant {:.6g})".format(disc))
    q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
    if q == 0:
        return 0.0
    return max(q / a, c / q)


def _vanishes(p, x):
    """p(x) is zero up to the rounding of evaluating its terms at x."""
    scale = float(np.sum(np.abs(p.coeffs) * np.abs(x) ** np.arange(p.order, -1, -1)))
    return abs(p(x)) <= 64 * np.finfo(np.float64).eps * max(scale, 1.0)


def _monotone_bracket(p):
    """
    Interval on which the monic cubic `p` is increasing and which contains its largest real
    root. A multiple root is returned directly as a float.
    """
    a = p.coeffs
    bound = 1.0 + float(np.max(np.abs(a[1:])))
    # critical points of x^3 + a1 x^2 + a2 x + a3
    disc = a[1] * a[1] - 3 * a[2]
    if abs(disc) <= 64 * np.finfo(np.float64).eps * max(a[1] * a[1], abs(3 * a[2]), 1.0):
        # triple root sits at the inflection point
        c = -a[1] / 3
        if _vanishes(p, c):
            return float(c)
    if disc <= 0:
        return -bound, bound
    c2 = (-a[1] + math.sqrt(disc)) / 3
    c1 = (-a[1] - math.sqrt(disc)) / 3
    if _vanishes(p, c2):
        # double root at the local minimum
        return float(c2)
    if p(c2) < 0:
        return c2, bound
    return -bound, c1


def largest_real_root(poly, bracket=None, tol=TOL_ROOT):
    """
    Largest real root of a quadratic or cubic.

    Parameters
    ----------
    poly : :py:class:`numpy.poly1d` or sequence
        Coefficients, highest degree first.
    bracket : tuple, optional
        Hint (lo, hi) for cubics. Used when p(lo) < 0 < p(hi) on the monotone branch holding
        the largest root, otherwise the global bracket is used.
    tol : float
        Absolute accuracy of the returned root.

    Raises
    ------
    NoRealRootError
        If the quadratic has a negative discriminant.
    """
    p = _as_poly(poly)
    if p.order == 2:
        return _largest_root_quadratic(*p.coeffs)
    if p.order != 3:
        raise ValueError("Expected a quadratic or cubic, got degree {}".format(p.order))
    p = np.poly1d(p.coeffs / p.coeffs[0])
    found = _monotone_bracket(p)
    if isinstance(found, float):
        return found
    lo, hi = found
    if bracket is not None:
        b_lo, b_hi = max(lo, bracket[0]), min(hi, bracket[1])
        if b_lo < b_hi and p(b_lo) < 0 < p(b_hi):
            lo, hi = b_lo, b_hi
        else:
            warnings.warn(
                "Sign test failed on bracket {}, falling back to [{:.6g}, {:.6g}]".format(
                    bracket, lo, hi
                )
            )
    f_lo, f_hi = p(lo), p(hi)
    if f_lo == 0:
        return float(lo)
    if f_hi == 0:
        return float(hi)
    if f_lo > 0 or f_hi < 0:
        raise NoRealRootError("No sign change on [{:.6g}, {:.6g}]".format(lo, hi))
    return float(brentq(p, lo, hi, xtol=tol / 4, maxiter=500))


""" Quotient matrices of K_s ∨ (K_{n1} ∪ i·K1) """


def _check_b1(s, n):
    if s < 1:
        raise ValueError("Need s >= 1, got {}".format(s))
    if n < s + floor3half(s) + 3:
        bound = s + floor3half(s) + 3
        raise ValueError("Need n >= s + ⌊3s/2⌋ + 3 = {}, got {}".format(bound, n))


def b1_matrix(s, n, alpha):
    """
    Quotient of A_α(K_s ∨ (K_{n1} ∪ (⌊3s/2⌋+1)K1)) with n1 = n - s - ⌊3s/2⌋ - 1,
    blocks ordered independent set, clique, hub.
    """
    alpha = check_alpha(alpha)
    _check_b1(s, n)
    k = floor3half(s)
    n1 = n - s - k - 1
    return np.array(
        [
            [alpha * s, 0.0, (1 - alpha) * s],
            [0.0, n1 - 1 + alpha * s, (1 - alpha) * s],
            [(1 - alpha) * (k + 1), (1 - alpha) * n1, alpha * n - alpha * s + s - 1],
        ]
    )


def b1_eigenvalues(s, n, alpha):
    """Ascending eigenvalues of B1, from its symmetrisation by the block sizes."""
    k = floor3half(s)
    root = np.sqrt(np.array([k + 1, n - s - k - 1, s], dtype=np.float64))
    B = b1_matrix(s, n, alpha)
    S = B * root[:, np.newaxis] / root[np.newaxis, :]
    return np.linalg.eigvalsh((S + S.T) / 2)


def eta2_bounds(s, n, alpha):
    """
    Middle eigenvalue η2 of B1 and the bounds αs <= η2 <= n + αs - s - ⌊3s/2⌋ - 2.

    Returns
    -------
    eta2, lower, upper : float
    """
    eta2 = float(b1_eigenvalues(s, n, alpha)[1])
    return eta2, alpha * s, n + alpha * s - s - floor3half(s) - 2


def char_poly_B1(s, n, alpha):
    """Characteristic polynomial f_B1 of :py:func:`b1_matrix`."""
    a = check_alpha(alpha)
    _check_b1(s, n)
    k = floor3half(s)
    c2 = -((a + 1) * n + a * s - k - 3)
    c1 = -(
        (a * n + s - 1) * k
        - a * n * n
        - (a * a + a) * s * n
        + (2 * a + 1) * n
        + (2 * a + 1) * s
        - 2
    )
    c0 = -((2 * a * a - 3 * a + 1) * k + 2 * a * a - 3 * a + 1) * s * s - (
        (a * a - 2 * a + 1) * k * k
        - ((2 * a * a - 2 * a + 1) * n - 3 * a * a + 5 * a - 3) * k
        + a * a * n * n
        - (3 * a * a - a + 1) * n
        + 2 * a * a
        - 2 * a
        + 2
    ) * s
    return np.poly1d([1.0, c2, c1, c0])


def _check_case2(s, n, extra):
    if s < 1:
        raise ValueError("Need s >= 1, got {}".format(s))
    expected = s + floor3half(s) + extra
    if n != expected:
        raise ValueError(
            "This quotient needs n = s + ⌊3s/2⌋ + {} = {}, got {}".format(extra, expected, n)
        )


def char_poly_B2(s, n, alpha):
    """f_B2 of K_s ∨ (⌊3s/2⌋+1)K1, n = s + ⌊3s/2⌋ + 1."""
    a = check_alpha(alpha)
    _check_case2(s, n, 1)
    k = floor3half(s)
    return np.poly1d([1.0, -(a * n + s - 1), (2 * a - 1) * s * k + a * s * s + a * s - s])


def char_poly_B3(s, n, alpha):
    """f_B3 of K_s ∨ (⌊3s/2⌋+2)K1, n = s + ⌊3s/2⌋ + 2."""
    a = check_alpha(alpha)
    _check_case2(s, n, 2)
    k = floor3half(s)
    return np.poly1d([1.0, -(a * n + s - 1), (2 * a - 1) * s * k + a * s * s + (3 * a - 2) * s])


def b2_root(s, n, alpha):
    """Closed form (αn+s-1+√Δ)/2 of the largest root of f_B2."""
    _, b, c = char_poly_B2(s, n, alpha).coeffs
    return (-b + math.sqrt(b * b - 4 * c)) / 2


def b3_root(s, n, alpha):
    """Closed form of the largest root of f_B3."""
    _, b, c = char_poly_B3(s, n, alpha).coeffs
    return (-b + math.sqrt(b * b - 4 * c)) / 2


""" Threshold cubics """


def phi(n, alpha):
    """φ(x); its largest root τ(n) is the spectral radius of K1 ∨ (K_{n-3} ∪ 2K1)."""
    a = check_alpha(alpha)
    return np.poly1d(
        [
            1.0,
            -((a + 1) * n + a - 4),
            a * n * n + (a * a - 2 * a - 1) * n - 2 * a + 1,
            -a * a * n * n + (5 * a * a - 3 * a + 2) * n - 10 * a * a + 15 * a - 8,
        ]
    )


def psi(n, alpha):
    """ψ(x); its largest root θ(n) is the spectral radius of K2 ∨ (K_{n-6} ∪ 4K1)."""
    a = check_alpha(alpha)
    return np.poly1d(
        [
            1.0,
            -((a + 1) * n + 2 * a - 6),
            a * n * n + (2 * a * a - 3 * a - 1) * n - 4 * a - 3,
            -2 * a * a * n * n + (18 * a * a - 14 * a + 8) * n - 72 * a * a + 118 * a - 56,
        ]
    )


def _check_threshold(n, alpha, enforce_threshold):
    if enforce_threshold and n < f_threshold(alpha):
        raise ValueError(
            "n={} below f(alpha)={:g} for alpha={}".format(n, f_threshold(alpha), alpha)
        )


def tau(n, alpha, enforce_threshold=True, tol=TOL_ROOT):
    """
    Largest root of φ, bracketed by (n-3, n-1).

    Parameters
    ----------
    n : int
        Order.
    alpha : float
        In [0, 1).
    enforce_threshold : bool
        Reject n < f(α). The identity τ(n) = ρ_α(K1 ∨ (K_{n-3} ∪ 2K1)) holds for every
        n >= 4, so grids below the threshold may switch this off.
    """
    _check_threshold(n, alpha, enforce_threshold)
    return largest_real_root(phi(n, alpha), bracket=(n - 3, n - 1), tol=tol)


def theta(n, alpha, enforce_threshold=True, tol=TOL_ROOT):
    """Largest root of ψ, bracketed by (n-5, n-1)."""
    _check_threshold(n, alpha, enforce_threshold)
    return largest_real_root(psi(n, alpha), bracket=(n - 5, n - 1), tol=tol)


# constant term of the signless-Laplacian cubic as printed, versus 4·φ at α=1/2
PRINTED_COROLLARY_SHIFT = 6


def corollary_poly(n, as_printed=False):
    """
    4x³ - (6n-14)x² + (2n²-7n)x - n² + 7n - 12, which equals 4φ(x) at α = 1/2.

    Parameters
    ----------
    as_printed : bool
        Return the published form whose constant term reads -n² + 7n - 6 instead.
    """
    c0 = -n * n + 7 * n - 12
    if as_printed:
        c0 += PRINTED_COROLLARY_SHIFT
    return np.poly1d([4.0, -(6 * n - 14), 2 * n * n - 7 * n, c0])


def mu(n, as_printed=False, tol=TOL_ROOT):
    """Largest root of :py:func:`corollary_poly`; 2μ(n) is the signless-Laplacian threshold."""
    if n < 20:
        raise ValueError("mu(n) needs n >= 20, got {}".format(n))
    return largest_real_root(corollary_poly(n, as_printed), bracket=(n - 3, n - 1), tol=tol)


""" Auxiliary polynomials """


def H_poly(s, n, alpha):
    """H(x) with f_B1 - φ = -(s-1)/4 · H for odd s."""
    a = alpha
    return np.poly1d(
        [
            4 * a - 6,
            -4 * a * a * n + 2 * a * n + 6 * s + 8 * a + 2,
            4 * a * a * n * n
            - (12 * a * a - 12 * a + 6) * s * n
            - (20 * a * a - 12 * a + 8) * n
            + (21 * a * a - 36 * a + 15) * s * s
            + (37 * a * a - 60 * a + 29) * s
            + 40 * a * a
            - 60 * a
            + 32,
        ]
    )


def h_poly(s, n, alpha):
    """h(x) with f_B1 - ψ = -(s-2)/4 · h for even s."""
    a = alpha
    return np.poly1d(
        [
            4 * a - 6,
            -4 * a * a * n + 2 * a * n + 6 * s + 8 * a + 10,
            4 * a * a * n * n
            - (12 * a * a - 12 * a + 6) * s * n
            - (36 * a * a - 28 * a + 16) * n
            + (21 * a * a - 36 * a + 15) * s * s
            + (68 * a * a - 114 * a + 52) * s
            + 144 * a * a
            - 236 * a
            + 112,
        ]
    )


def P_value(s, n, alpha):
    """P(n) = H(n-3)."""
    return float(H_poly(s, n, alpha)(n - 3))


def p_value(s, n, alpha):
    """p(n) = h(n-5)."""
    return float(h_poly(s, n, alpha)(n - 5))


def Psi_value(s, n, alpha):
    """Ψ(s, n) = f_B1(n-3)."""
    return float(char_poly_B1(s, n, alpha)(n - 3))


def Phi_value(s, n, alpha):
    """Φ(s, n) = f_B1(n-5)."""
    return float(char_poly_B1(s, n, alpha)(n - 5))


def Omega_value(n, alpha):
    """Ω(n) = ψ(n-3) = (2-2α)n² + (12α²-6α-10)n - 72α² + 112α - 20."""
    a = alpha
    return (2 - 2 * a) * n * n + (12 * a * a - 6 * a - 10) * n - 72 * a * a + 112 * a - 20


def g1_value(s, n, alpha):
    """H'(n-3)."""
    a = alpha
    return (-4 * a * a + 10 * a - 12) * n - 16 * a + 6 * s + 38


def g2_value(s, alpha):
    """dP/dn at n = (5s+5)/2."""
    a = alpha
    return (5 * s + 5) * (6 * a - 6) + (-12 * s * a * a + 12 * s * a - 8 * a * a - 10 * a + 30)


def g3_value(s, n, alpha):
    """h'(n-5)."""
    a = alpha
    return (-4 * a * a + 10 * a - 12) * n - 32 * a + 6 * s + 70


def g4_value(s, alpha):
    """dp/dn at n = 5s/2 + 3."""
    a = alpha
    return (5 * s + 6) * (6 * a - 6) + (-12 * s * a * a + 12 * s * a - 16 * a * a - 14 * a + 54)


def t1_value(s, alpha):
    """4·f_B2(n-3) at n = (5s+1)/2, odd s."""
    a = alpha
    return 9 * (1 - a) * s * s - 4 * (8 - 5 * a) * s + 5 * a + 15


def t2_value(s, alpha):
    """4·f_B2(n-3) at n = 5s/2 + 1, even s."""
    a = alpha
    return 9 * (1 - a) * s * s - 2 * (13 - 7 * a) * s + 8 * a + 8


def t3_value(s, alpha):
    """4·f_B3(n-3) at n = (5s+3)/2, odd s."""
    a = alpha
    return 9 * (1 - a) * s * s - 4 * (5 - 2 * a) * s + 9 * a + 3


def t4_value(s, alpha):
    """4·f_B3(n-3) at n = 5s/2 + 2, even s."""
    a = alpha
    return 9 * (1 - a) * s * s - 2 * (7 - a) * s + 8 * a
