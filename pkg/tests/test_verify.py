import json
import pytest
from specfac import polynomials as poly
from specfac.canonical import are_isomorphic
from specfac.claims import ClaimGrid
from specfac.factor import has_factor_criterion
from specfac.families import FamilyOptions, build_family
from specfac.graph import construct_family
from specfac.io import graph6_decode, graph6_encode
from specfac.spectral import alpha_matrix, spectral_radius
from specfac.trees import t3_members
from specfac.verify import (
    F,
    HARNESSES,
    VerificationReport,
    check_sign_claims,
    family_shapes,
    quotient_grid,
    size_extremal_graph,
    verify_corollary3,
    verify_lemma3,
    verify_lemma4,
    verify_lemma_equivalence,
    verify_quotient_consistency,
    verify_spectral_chain,
    verify_t3_family,
    verify_theorem1,
    verify_theorem2,
)


def test_size_bound():

    assert [F(n) for n in range(5, 10)] == [5, 9, 12, 18, 23]
    assert F(20) == 155
    assert size_extremal_graph(20).m == F(20)
    for n in range(5, 12):
        assert size_extremal_graph(n).m == F(n)
    with pytest.raises(ValueError):
        F(4)


def test_theorem1():

    for n in [5, 6, 7]:
        report = verify_theorem1(n)
        print(report.summary())
        assert report.ok
        assert report.checked > 2
        assert report.skipped > 0
        extremal = graph6_encode(size_extremal_graph(n))
        assert report.witnesses["extremal"] == extremal
        assert len(report.witnesses["equality_cases"]) >= 1


def test_theorem2():

    report = verify_theorem2(0.0, n_list=[20], trials=200, seed=3)
    print(report.summary())
    assert report.ok
    checks = [r["params"]["check"] for r in report.records]
    assert checks.count("sharpness") == 1
    assert checks.count("family") == len(family_shapes(20))
    assert report.witnesses["G2_n20"] == graph6_encode(build_family(FamilyOptions.G2, 20))

    with pytest.raises(ValueError):
        verify_theorem2(0.6, n_list=[24], trials=10)


def test_family_shapes():

    shapes = family_shapes(8)
    assert (1, 5, 2) in shapes and (2, 0, 6) in shapes and (3, 0, 5) in shapes
    for s, n1, i in shapes:
        assert s + n1 + i == 8
        assert 2 * i > 3 * s


def test_corollary3():

    with pytest.warns(UserWarning):
        report = verify_corollary3()
    assert report.ok
    assert report.checked == 6
    assert len(report.notes) == 3


def test_sign_claims():

    report = check_sign_claims()
    print(report.summary())
    assert report.ok
    assert all(c >= 100 for c in report.params["points_per_claim"].values())

    report = check_sign_claims(ClaimGrid(alphas=(0.0,), n_span=3, s_max=12), names=["t1", "P"])
    assert report.ok
    assert set(report.params["points_per_claim"]) == {"t1", "P"}

    with pytest.raises(ValueError):
        check_sign_claims(names=["nope"])


def test_lemmas():

    report = verify_lemma_equivalence(max_n=6)
    assert report.ok
    assert report.checked == 6 + 1 + 1 + 2 + 6 + 21 + 112

    report = verify_quotient_consistency()
    assert report.ok
    b1 = [r for r in report.records if r["params"]["check"] == "B1_root"]
    assert len(b1) == len(quotient_grid()) >= 200

    assert verify_lemma3().ok
    report = verify_lemma4(trials=1000, seed=2)
    assert report.ok
    assert report.checked + report.skipped == 1000
    assert report.checked > 900
    # growth must exceed the margin, not just be positive
    assert not verify_lemma4(trials=20, seed=2, min_increase=100.0).ok
    assert verify_spectral_chain().ok


def test_t3_family():

    report = verify_t3_family(15)
    assert report.ok
    assert report.witnesses["member_10"] == graph6_encode(t3_members(10)[0])


def test_theorem1_order8():

    report = verify_theorem1(8)
    print(report.summary())
    assert report.ok
    assert F(8) == 18
    equality = [graph6_decode(g6) for g6 in report.witnesses["equality_cases"]]
    assert all(G.m == 18 for G in equality)
    assert any(are_isomorphic(construct_family(3, 0, 5), G) for G in equality)


def test_lemma_equivalence_order8():

    report = verify_lemma_equivalence(max_n=8)
    print(report.summary())
    assert report.ok
    # one class-count check per order plus one per graph
    assert report.checked == 8 + 1 + 1 + 2 + 6 + 21 + 112 + 853 + 11117


def test_sharpness_grid():

    for alpha in [0.0, 0.25, 0.5, 0.75]:
        orders = [n for n in [20, 25, 30] if n >= poly.f_threshold(alpha)]
        for n in orders:
            G2 = build_family(FamilyOptions.G2, n)
            rho = spectral_radius(alpha_matrix(G2, alpha))
            t = poly.tau(n, alpha)
            print(alpha, n, rho, t)
            assert abs(rho - t) < 1e-9
            has, witness = has_factor_criterion(G2)
            assert not has
            assert witness.subset == (0,) and witness.isolated == 2

        sampled = [n for n in orders if n >= 25]
        if sampled:
            report = verify_theorem2(alpha, n_list=sampled, trials=100, seed=5)
            assert report.ok
            checks = [r["params"]["check"] for r in report.records]
            assert checks.count("sharpness") == len(sampled)


def test_report_output(tmp_path):

    a = VerificationReport("demo", params={"x": 1}, tolerances={"eig": 1e-9})
    a.add_check({"n": 10}, 1, 1, True)
    a.add_check({"n": 9}, 1, 2, False, 1e-9)
    b = VerificationReport("demo")
    b.add_check({"n": 2}, 0, 0, True)
    b.skipped = 4
    a.merge(b).finish()

    assert [r["params"]["n"] for r in a.records] == [2, 9, 10]
    assert (a.checked, a.passed, a.failed, a.skipped) == (3, 2, 1, 4)
    assert not a.ok
    assert a.summary()["violations"][0]["params"] == {"n": 9}

    fp = tmp_path / "demo.jsonl"
    a.to_jsonl(fp)
    lines = [json.loads(line) for line in fp.read_text().splitlines()]
    assert len(lines) == 3 and lines[1]["pass"] is False

    fp = tmp_path / "summary.csv"
    a.to_csv(fp)
    a.to_csv(fp)
    rows = fp.read_text().splitlines()
    assert len(rows) == 3
    assert rows[0].startswith("harness,checked,passed,failed,skipped")

    assert not VerificationReport("empty").ok
    assert set(HARNESSES) == {
        "theorem1",
        "theorem2",
        "corollary3",
        "signclaims",
        "lemma-equivalence",
        "quotient",
        "lemma3",
        "lemma4",
        "chain",
        "t3family",
    }


if __name__ == "__main__":
    test_size_bound()
    test_theorem1()
    test_theorem2()
    test_family_shapes()
    test_corollary3()
    test_sign_claims()
    test_lemmas()
    test_t3_family()
    test_theorem1_order8()
    test_lemma_equivalence_order8()
    test_sharpness_grid()
