import pytest
from specfac.claims import SIGN_CLAIMS, ClaimGrid, Free, Sign, claim_points
from specfac.util import floor3half


def test_registry():

    names = list(SIGN_CLAIMS)
    assert len(names) == 18
    for name in ["g1", "g2", "g3", "g4", "H", "h", "P", "p", "Psi", "Phi", "Omega", "eta2"]:
        assert name in names
    for name in ["t1", "t2", "t3", "t4", "case2_B2", "case2_B3"]:
        assert SIGN_CLAIMS[name].free == Free.S_FIXED_N
        assert SIGN_CLAIMS[name].sign == Sign.POS
    assert SIGN_CLAIMS["eta2"].sign == Sign.NONNEG


def test_points():

    grid = ClaimGrid()
    for name, claim in SIGN_CLAIMS.items():
        inside = [pt for pt in claim_points(claim, grid) if pt[3]]
        print(name, len(inside))
        assert len(inside) >= 100


def test_evaluate():

    t1 = SIGN_CLAIMS["t1"]
    n = t1.n_of_s(9)
    assert n == 9 + floor3half(9) + 1 == 23
    assert t1.domain(0, 9, n)
    assert t1.evaluate(0, 9, n) == pytest.approx(456)
    assert not t1.domain(0, 8, t1.n_of_s(8))

    P = SIGN_CLAIMS["P"]
    assert P.domain(0, 3, 20)
    assert not P.domain(0, 3, 19)
    assert not P.domain(0.8, 3, 40)
    assert P.evaluate(0, 3, 20) < 0

    Omega = SIGN_CLAIMS["Omega"]
    assert Omega.evaluate(0, None, 20) == pytest.approx(580)


def test_sign():

    assert Sign.POS.holds(1e-3) and not Sign.POS.holds(0)
    assert Sign.NEG.holds(-1) and not Sign.NEG.holds(0)
    assert Sign.NONNEG.holds(0) and Sign.NONNEG.holds(-1e-12, tol=1e-9)
    assert not Sign.NONNEG.holds(-1e-6, tol=1e-9)
    assert Sign.NONPOS.holds(1e-12, tol=1e-9)
    # tolerance only loosens the non-strict signs
    assert not Sign.POS.holds(0, tol=1e-9)
    assert Sign.values() == [">0", "<0", ">=0", "<=0"]


def test_grid_dict():

    grid = ClaimGrid(alphas=(0, 0.5), n_span=5, s_max=10, eta2_s_max=4)
    assert grid.to_dict() == {"alphas": [0.0, 0.5], "n_span": 5, "s_max": 10, "eta2_s_max": 4}
    points = list(claim_points(SIGN_CLAIMS["Omega"], grid))
    assert [(a, n) for a, _, n, _ in points] == [(a, n) for a in (0.0, 0.5) for n in range(20, 26)]


if __name__ == "__main__":
    test_registry()
    test_points()
    test_evaluate()
    test_sign()
    test_grid_dict()
