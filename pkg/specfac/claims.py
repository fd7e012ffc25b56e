"""
Registry of sign claims on the auxiliary polynomials that compare the spectral radius of
K_s ∨ (K_{n1} ∪ i·K1) with τ(n). Each claim carries its parameter domain as a predicate, an
evaluator and the expected sign.
"""

import math
from collections import OrderedDict
from enum import Enum
from specfac import polynomials as poly
from specfac.util import floor3half


ALPHA_57 = 5 / 7


class Sign(Enum):
    POS = ">0"
    NEG = "<0"
    NONNEG = ">=0"
    NONPOS = "<=0"

    @staticmethod
    def values():
        return [sign.value for sign in Sign]

    def holds(self, value, tol=0.0):
        if self == Sign.POS:
            return value > 0
        if self == Sign.NEG:
            return value < 0
        if self == Sign.NONNEG:
            return value >= -tol
        return value <= tol


class Free:
    """Which parameters a claim ranges over."""

    S_N = "s,n"
    S = "s"
    N = "n"
    S_FIXED_N = "s->n"


class SignClaim(object):
    """
    Parameters
    ----------
    name : str
        Registry key, e.g. "P" or "t1".
    subcase : str
        Where the claim is used in the case analysis.
    sign : :py:class:`Sign`
    free : str
        One of the :py:class:`Free` values.
    domain : callable
        (alpha, s, n) -> bool.
    evaluate : callable
        (alpha, s, n) -> float.
    n_of_s : callable, optional
        For claims with n tied to s.
    description : str
    """

    def __init__(self, name, subcase, sign, free, domain, evaluate, n_of_s=None, description=""):
        self.name = name
        self.subcase = subcase
        self.sign = sign
        self.free = free
        self.domain = domain
        self.evaluate = evaluate
        self.n_of_s = n_of_s
        self.description = description

    def __repr__(self):
        return "SignClaim({}, {} {})".format(self.name, self.description, self.sign.value)


def _alpha_low(a):
    return 0 <= a <= ALPHA_57


def _alpha_high(a):
    return ALPHA_57 < a < 1


def _odd_chain_domain(a, s, n):
    return s >= 3 and s % 2 == 1 and n >= poly.f_threshold(a) and 2 * n >= 5 * s + 5


def _even_chain_domain(a, s, n):
    return s >= 4 and s % 2 == 0 and n >= poly.f_threshold(a) and 2 * n >= 5 * s + 6


def _case2_n(extra):
    def n_of_s(s):
        return s + floor3half(s) + extra

    return n_of_s


def _t_domain(parity):
    def domain(a, s, n):
        return s >= 1 and s % 2 == parity and n >= poly.f_threshold(a)

    return domain


def _eta2_gap(a, s, n):
    eta2, lower, upper = poly.eta2_bounds(s, n, a)
    return min(eta2 - lower, upper - eta2)


SIGN_CLAIMS = OrderedDict()


def _register(claim):
    SIGN_CLAIMS[claim.name] = claim


_register(
    SignClaim(
        "g1",
        "1.1.2.1",
        Sign.NEG,
        Free.S_N,
        lambda a, s, n: _alpha_low(a) and _odd_chain_domain(a, s, n),
        lambda a, s, n: poly.g1_value(s, n, a),
        description="H'(n-3)",
    )
)
_register(
    SignClaim(
        "H",
        "1.1.2",
        Sign.NEG,
        Free.S_N,
        lambda a, s, n: _alpha_low(a) and _odd_chain_domain(a, s, n),
        lambda a, s, n: float(
            poly.H_poly(s, n, a)(poly.tau(n, a)) - poly.H_poly(s, n, a)(n - 3)
        ),
        description="H(tau(n)) - H(n-3)",
    )
)
_register(
    SignClaim(
        "P",
        "1.1.2.1",
        Sign.NEG,
        Free.S_N,
        lambda a, s, n: _alpha_low(a) and _odd_chain_domain(a, s, n),
        lambda a, s, n: poly.P_value(s, n, a),
        description="P(n) = H(n-3)",
    )
)
_register(
    SignClaim(
        "g2",
        "1.1.2.1",
        Sign.NEG,
        Free.S,
        lambda a, s, n: _alpha_low(a) and s >= 3 and s % 2 == 1,
        lambda a, s, n: poly.g2_value(s, a),
        description="dP/dn at n=(5s+5)/2",
    )
)
_register(
    SignClaim(
        "Psi",
        "1.1.2.2",
        Sign.POS,
        Free.S_N,
        lambda a, s, n: _alpha_high(a) and _odd_chain_domain(a, s, n),
        lambda a, s, n: poly.Psi_value(s, n, a),
        description="f_B1(n-3)",
    )
)
_register(
    SignClaim(
        "g3",
        "1.2.2.1",
        Sign.NEG,
        Free.S_N,
        lambda a, s, n: _alpha_low(a) and _even_chain_domain(a, s, n),
        lambda a, s, n: poly.g3_value(s, n, a),
        description="h'(n-5)",
    )
)
_register(
    SignClaim(
        "h",
        "1.2.2",
        Sign.NEG,
        Free.S_N,
        lambda a, s, n: _alpha_low(a) and _even_chain_domain(a, s, n),
        lambda a, s, n: float(
            poly.h_poly(s, n, a)(poly.theta(n, a)) - poly.h_poly(s, n, a)(n - 5)
        ),
        description="h(theta(n)) - h(n-5)",
    )
)
_register(
    SignClaim(
        "p",
        "1.2.2.1",
        Sign.NEG,
        Free.S_N,
        lambda a, s, n: _alpha_low(a) and _even_chain_domain(a, s, n),
        lambda a, s, n: poly.p_value(s, n, a),
        description="p(n) = h(n-5)",
    )
)
_register(
    SignClaim(
        "g4",
        "1.2.2.1",
        Sign.NEG,
        Free.S,
        lambda a, s, n: _alpha_low(a) and s >= 10 and s % 2 == 0,
        lambda a, s, n: poly.g4_value(s, a),
        description="dp/dn at n=5s/2+3",
    )
)
_register(
    SignClaim(
        "Phi",
        "1.2.2.2",
        Sign.POS,
        Free.S_N,
        lambda a, s, n: _alpha_high(a) and _even_chain_domain(a, s, n),
        lambda a, s, n: poly.Phi_value(s, n, a),
        description="f_B1(n-5)",
    )
)
_register(
    SignClaim(
        "Omega",
        "1.2.1",
        Sign.POS,
        Free.N,
        lambda a, s, n: n >= poly.f_threshold(a),
        lambda a, s, n: poly.Omega_value(n, a),
        description="psi(n-3)",
    )
)
_register(
    SignClaim(
        "t1",
        "2.1.1",
        Sign.POS,
        Free.S_FIXED_N,
        _t_domain(1),
        lambda a, s, n: poly.t1_value(s, a),
        n_of_s=_case2_n(1),
        description="4 f_B2(n-3), odd s",
    )
)
_register(
    SignClaim(
        "t2",
        "2.1.2",
        Sign.POS,
        Free.S_FIXED_N,
        _t_domain(0),
        lambda a, s, n: poly.t2_value(s, a),
        n_of_s=_case2_n(1),
        description="4 f_B2(n-3), even s",
    )
)
_register(
    SignClaim(
        "t3",
        "2.2.1",
        Sign.POS,
        Free.S_FIXED_N,
        _t_domain(1),
        lambda a, s, n: poly.t3_value(s, a),
        n_of_s=_case2_n(2),
        description="4 f_B3(n-3), odd s",
    )
)
_register(
    SignClaim(
        "t4",
        "2.2.2",
        Sign.POS,
        Free.S_FIXED_N,
        _t_domain(0),
        lambda a, s, n: poly.t4_value(s, a),
        n_of_s=_case2_n(2),
        description="4 f_B3(n-3), even s",
    )
)
_register(
    SignClaim(
        "case2_B2",
        "2.1",
        Sign.POS,
        Free.S_FIXED_N,
        lambda a, s, n: s >= 1 and n >= poly.f_threshold(a),
        lambda a, s, n: (n - 3) - poly.b2_root(s, n, a),
        n_of_s=_case2_n(1),
        description="(n-3) - largest root of f_B2",
    )
)
_register(
    SignClaim(
        "case2_B3",
        "2.2",
        Sign.POS,
        Free.S_FIXED_N,
        lambda a, s, n: s >= 1 and n >= poly.f_threshold(a),
        lambda a, s, n: (n - 3) - poly.b3_root(s, n, a),
        n_of_s=_case2_n(2),
        description="(n-3) - largest root of f_B3",
    )
)
_register(
    SignClaim(
        "eta2",
        "1",
        Sign.NONNEG,
        Free.S_N,
        lambda a, s, n: s >= 1 and n >= s + floor3half(s) + 3,
        _eta2_gap,
        description="min(eta2 - alpha s, n + alpha s - s - floor(3s/2) - 2 - eta2)",
    )
)


class ClaimGrid(object):
    """
    Parameter grid for the sign claims.

    Parameters
    ----------
    alphas : tuple
        α values.
    n_span : int
        n runs from ⌈f(α)⌉ to ⌈f(α)⌉ + n_span.
    s_max : int
        Largest s for claims where n is tied to s or absent.
    eta2_s_max : int
        Largest s for the η2 claim, whose n range starts at s + ⌊3s/2⌋ + 3.
    """

    def __init__(
        self, alphas=(0.0, 0.25, 0.5, ALPHA_57, 0.75, 0.9), n_span=20, s_max=60, eta2_s_max=20
    ):
        self.alphas = tuple(float(a) for a in alphas)
        self.n_span = int(n_span)
        self.s_max = int(s_max)
        self.eta2_s_max = int(eta2_s_max)

    def to_dict(self):
        return {
            "alphas": list(self.alphas),
            "n_span": self.n_span,
            "s_max": self.s_max,
            "eta2_s_max": self.eta2_s_max,
        }


def claim_points(claim, grid):
    """
    Yield (alpha, s, n, in_domain) for every grid point a claim is tried on. Points with
    in_domain False are counted as skipped.
    """
    for a in grid.alphas:
        n0 = int(math.ceil(poly.f_threshold(a)))
        if claim.name == "eta2":
            for s in range(1, grid.eta2_s_max + 1):
                start = s + floor3half(s) + 3
                for n in range(start, start + grid.n_span + 1):
                    yield a, s, n, claim.domain(a, s, n)
        elif claim.free == Free.S_N:
            for n in range(n0, n0 + grid.n_span + 1):
                for s in range(1, (2 * n) // 5 + 1):
                    yield a, s, n, claim.domain(a, s, n)
        elif claim.free == Free.N:
            for n in range(n0, n0 + grid.n_span + 1):
                yield a, None, n, claim.domain(a, None, n)
        elif claim.free == Free.S:
            for s in range(1, grid.s_max + 1):
                yield a, s, None, claim.domain(a, s, None)
        else:
            for s in range(1, grid.s_max + 1):
                n = claim.n_of_s(s)
                yield a, s, n, claim.domain(a, s, n)
