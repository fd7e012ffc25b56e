"""
Harnesses that check the size bound, the spectral bound and its supporting lemmas on concrete
graphs and parameter grids. Every harness returns a :py:class:`VerificationReport`; a failed
check is recorded and the run continues.
"""

import math
import time
import warnings
import networkx as nx
import numpy as np
import progressbar
from joblib import Parallel, delayed
from specfac import polynomials as poly
from specfac.canonical import are_isomorphic
from specfac.claims import SIGN_CLAIMS, ClaimGrid, claim_points
from specfac.enumeration import CONNECTED_COUNTS, enumerate_connected
from specfac.factor import (
    find_factor,
    has_factor_criterion,
    has_factor_independent,
    verify_certificate,
)
from specfac.families import FamilyOptions, build_family
from specfac.graph import (
    add_edge,
    complete,
    construct_family,
    from_networkx,
    non_edges,
    random_connected_graph,
)
from specfac.io import graph6_encode, write_csv, write_jsonl
from specfac.spectral import (
    alpha_matrix,
    eigen_self_check,
    family_partition,
    interlace_check,
    quotient_matrix,
    signless_laplacian,
    spectral_radius,
)
from specfac.trees import generate_13_trees, is_T3_member, spider, t3_members
from specfac.util import NEIGHBORHOOD_CAP, TOL_EIG, CapabilityError, floor3half, round_sig, to_json


SUMMARY_FIELDS = [
    "harness",
    "checked",
    "passed",
    "failed",
    "skipped",
    "wall_time",
    "params",
    "tolerances",
]


def _param_key(params):
    key = []
    for k in sorted(params):
        v = params[k]
        if isinstance(v, (bool, np.bool_)) or not isinstance(v, (int, float, np.number)):
            key.append((k, 1, 0.0, str(v)))
        else:
            key.append((k, 0, float(v), ""))
    return tuple(key)


class VerificationReport(object):
    """
    Outcome of one harness run.

    Every check is a record {harness, params, expected, observed, pass, tol}. Named graphs or
    parameters of interest go to `witnesses`, remarks that are not checks to `notes`.
    """

    def __init__(self, harness, params=None, tolerances=None):
        self.harness = harness
        self.params = dict(params or {})
        self.tolerances = dict(tolerances or {})
        self.records = []
        self.witnesses = {}
        self.notes = []
        self.skipped = 0
        self.wall_time = 0.0
        self._start = time.perf_counter()

    def add_check(self, params, expected, observed, passed, tol=None):
        self.records.append(
            {
                "harness": self.harness,
                "params": dict(params),
                "expected": expected,
                "observed": observed,
                "pass": bool(passed),
                "tol": tol,
            }
        )
        return bool(passed)

    @property
    def checked(self):
        return len(self.records)

    @property
    def passed(self):
        return sum(1 for r in self.records if r["pass"])

    @property
    def failed(self):
        return self.checked - self.passed

    @property
    def ok(self):
        return self.checked > 0 and self.failed == 0

    def violations(self):
        return [r for r in self.records if not r["pass"]]

    def finish(self):
        self.records.sort(key=lambda r: _param_key(r["params"]))
        self.wall_time = time.perf_counter() - self._start
        return self

    def merge(self, other):
        """Fold the records of `other` into this report, keeping parameter order."""
        self.records.extend(other.records)
        self.records.sort(key=lambda r: _param_key(r["params"]))
        self.skipped += other.skipped
        self.notes.extend(other.notes)
        for k, v in other.witnesses.items():
            self.witnesses.setdefault(k, v)
        self.wall_time += other.wall_time
        return self

    def summary(self):
        return round_sig(
            {
                "harness": self.harness,
                "params": self.params,
                "checked": self.checked,
                "passed": self.passed,
                "failed": self.failed,
                "skipped": self.skipped,
                "wall_time": self.wall_time,
                "tolerances": self.tolerances,
                "witnesses": self.witnesses,
                "notes": self.notes,
                "violations": self.violations()[:20],
            }
        )

    def to_jsonl(self, fp):
        write_jsonl(fp, self.records, append=True)

    def to_csv(self, fp):
        s = self.summary()
        row = {k: s[k] for k in SUMMARY_FIELDS}
        row["params"] = to_json(row["params"])
        row["tolerances"] = to_json(row["tolerances"])
        write_csv(fp, [row], SUMMARY_FIELDS)

    def __repr__(self):
        return "VerificationReport({}, checked={}, failed={})".format(
            self.harness, self.checked, self.failed
        )


def _fan_out(func, items, jobs=1, verbose=False):
    """Apply `func` to every item, in order, optionally over a joblib worker pool."""
    if jobs == 1:
        it = progressbar.ProgressBar()(items) if verbose else items
        return [func(x) for x in it]
    return Parallel(n_jobs=jobs, verbose=5 if verbose else 0)(delayed(func)(x) for x in items)


def _rho(G, alpha):
    return spectral_radius(alpha_matrix(G, alpha))


""" Size bound """


def F(n):
    """
    Largest edge count of a connected factor-free graph of order n: C(n-2, 2) + 2, except
    9 for n = 6 and 18 for n = 8.
    """
    if n < 5:
        raise ValueError("F(n) is defined for n >= 5, got {}".format(n))
    if n == 6:
        return 9
    if n == 8:
        return 18
    return math.comb(n - 2, 2) + 2


def size_extremal_graph(n):
    """Factor-free connected graph with F(n) edges."""
    if n == 6:
        return build_family(FamilyOptions.K2_JOIN_4K1)
    if n == 8:
        return build_family(FamilyOptions.K3_JOIN_5K1)
    return build_family(FamilyOptions.G2, n)


def _criterion_row(G):
    has, witness = has_factor_criterion(G)
    return G.m, has, None if witness is None else witness.to_dict()


def verify_theorem1(n, corpus=None, jobs=1, verbose=False):
    """
    Exhaustive check of the size bound at order `n`.

    Every connected graph with more than F(n) edges must pass the criterion. The factor-free
    graphs with exactly F(n) edges are collected as equality cases, and the largest edge count
    among factor-free graphs must be F(n) with the known extremal graph among the equality
    cases.

    Parameters
    ----------
    n : int
        Order, at least 5. Up to 9 with the built-in enumeration, larger with `corpus`.
    corpus : str or file-like, optional
        graph6 source of the connected graphs of order `n`.
    jobs : int
        Worker processes for the criterion.
    verbose : bool
        Print progress.
    """
    bound = F(n)
    report = VerificationReport("theorem1", params={"n": n, "F": bound})
    graphs = list(enumerate_connected(n, corpus=corpus, verbose=verbose))
    rows = _fan_out(_criterion_row, graphs, jobs=jobs, verbose=verbose)

    max_free = -1
    equality = []
    for G, (m, has, witness) in zip(graphs, rows):
        if not has:
            max_free = max(max_free, m)
            if m == bound:
                equality.append(G)
        if m > bound:
            report.add_check(
                {"n": n, "g6": graph6_encode(G), "m": m},
                True,
                {"has_factor": has, "witness": witness},
                has,
            )
        else:
            report.skipped += 1

    report.add_check(
        {"n": n, "check": "max_factor_free_edges"}, bound, max_free, max_free == bound
    )
    extremal = size_extremal_graph(n)
    found = any(are_isomorphic(extremal, G) for G in equality)
    report.add_check(
        {"n": n, "check": "extremal_witness"}, graph6_encode(extremal), found, found
    )
    report.witnesses["extremal"] = graph6_encode(extremal)
    report.witnesses["equality_cases"] = [graph6_encode(G) for G in equality]
    report.params["graphs"] = len(graphs)
    if verbose:
        print(
            "n={}: {} graphs, {} above F(n)={}, {} equality cases".format(
                n, len(graphs), report.checked - 2, bound, len(equality)
            )
        )
    return report.finish()


""" Spectral bound """


def _sample_chunk(n, alpha, threshold, p, count, seed):
    """Sample `count` connected G(n, p) graphs, criterion-check those above the threshold."""
    rng = np.random.default_rng(seed)
    rows = []
    below = 0
    for _ in range(count):
        G = random_connected_graph(n, p, rng)
        rho = _rho(G, alpha)
        if rho <= threshold:
            below += 1
            continue
        has, witness = has_factor_criterion(G)
        rows.append((graph6_encode(G), rho, has, None if witness is None else witness.to_dict()))
    return rows, below


def family_shapes(n):
    """(s, n1, i) of every factor-free shape K_s ∨ (K_{n1} ∪ i·K1) of order n, i > 3s/2."""
    out = []
    s = 1
    while s + floor3half(s) + 1 <= n:
        for i in range(floor3half(s) + 1, n - s + 1):
            out.append((s, n - s - i, i))
        s += 1
    return out


def verify_theorem2(
    alpha,
    n_list=None,
    trials=10000,
    seed=0,
    probs=(0.3, 0.5, 0.8, 0.95),
    tol=TOL_EIG,
    jobs=1,
    verbose=False,
):
    """
    Check the spectral bound at orders n >= f(α).

    Three parts per order: every factor-free family shape has ρ_α <= τ(n) with equality only
    for K1 ∨ (K_{n-3} ∪ 2K1); sampled connected graphs above τ(n) all pass the criterion; and
    K1 ∨ (K_{n-3} ∪ 2K1) attains τ(n) and fails the criterion with S = {hub}.

    Parameters
    ----------
    alpha : float
        In [0, 1).
    n_list : list, optional
        Orders, default ⌈f(α)⌉ and ⌈f(α)⌉+5, the second only while it stays <= 26.
    trials : int
        Random graphs per order, split evenly over `probs`.
    seed : int
        Base seed; each (order, probability) chunk gets its own stream.
    probs : tuple
        Edge probabilities of the sampler.
    tol : float
        Eigenvalue equality tolerance.
    jobs : int
        Worker processes for the sampled part.
    """
    f = poly.f_threshold(alpha)
    if n_list is None:
        n0 = int(math.ceil(f))
        n_list = [n0, n0 + 5] if n0 + 5 <= 26 else [n0]
    for n in n_list:
        if n < f:
            raise ValueError("n={} below f(alpha)={:g} for alpha={}".format(n, f, alpha))
        if n > NEIGHBORHOOD_CAP:
            raise CapabilityError(
                "Exact criterion limited to n <= {}, got {}".format(NEIGHBORHOOD_CAP, n)
            )

    report = VerificationReport(
        "theorem2",
        params={"alpha": alpha, "n_list": list(n_list), "trials": trials, "seed": seed},
        tolerances={"eig": tol},
    )
    per_prob = max(1, trials // len(probs))
    for n in n_list:
        t = poly.tau(n, alpha)

        # constructive
        for s, n1, i in family_shapes(n):
            rho = _rho(construct_family(s, n1, i), alpha)
            extremal = (s, n1, i) == (1, n - 3, 2)
            if extremal:
                passed = abs(rho - t) <= tol
            else:
                passed = rho < t - tol
            report.add_check(
                {"alpha": alpha, "n": n, "check": "family", "s": s, "n1": n1, "i": i},
                "= tau" if extremal else "< tau",
                {"rho": rho, "tau": t},
                passed,
                tol,
            )

        # sampled
        tasks = [(n, alpha, t, p, per_prob, [seed, n, k]) for k, p in enumerate(probs)]
        if jobs == 1:
            chunks = [_sample_chunk(*task) for task in tasks]
        else:
            chunks = Parallel(n_jobs=jobs)(delayed(_sample_chunk)(*task) for task in tasks)
        above = 0
        for rows, below in chunks:
            report.skipped += below
            for g6, rho, has, witness in rows:
                above += 1
                report.add_check(
                    {"alpha": alpha, "n": n, "check": "sampled", "g6": g6},
                    True,
                    {"rho": rho, "tau": t, "has_factor": has, "witness": witness},
                    has,
                )
        report.notes.append(
            "n={}: {} of {} samples above tau".format(n, above, per_prob * len(probs))
        )

        # sharpness
        G2 = build_family(FamilyOptions.G2, n)
        rho = _rho(G2, alpha)
        has, witness = has_factor_criterion(G2)
        sharp = (
            abs(rho - t) <= tol
            and not has
            and witness.subset == (0,)
            and witness.isolated == 2
        )
        report.add_check(
            {"alpha": alpha, "n": n, "check": "sharpness"},
            {"rho": t, "S": [0], "i": 2},
            {"rho": rho, "witness": None if witness is None else witness.to_dict()},
            sharp,
            tol,
        )
        report.witnesses["G2_n{}".format(n)] = graph6_encode(G2)
        if verbose:
            print("alpha={}, n={}: tau={:.12g}, {} samples above".format(alpha, n, t, above))
    return report.finish()


def verify_corollary3(n_list=(20, 25, 30), tol=TOL_EIG):
    """
    The signless-Laplacian threshold 2μ(n) against q(K1 ∨ (K_{n-3} ∪ 2K1)), and the
    corollary cubic against 4φ at α = 1/2.

    The published constant term -n² + 7n - 6 is not the one implied by φ; its effect on the
    threshold is reported in the notes with a warning.
    """
    report = VerificationReport(
        "corollary3", params={"n_list": list(n_list)}, tolerances={"eig": tol, "coeff": 1e-12}
    )
    for n in n_list:
        G2 = build_family(FamilyOptions.G2, n)
        q = spectral_radius(signless_laplacian(G2))
        m = poly.mu(n)
        report.add_check(
            {"n": n, "check": "2mu_equals_q"}, q, 2 * m, abs(2 * m - q) <= tol, tol
        )

        diff = np.max(
            np.abs(poly.corollary_poly(n).coeffs - 4 * poly.phi(n, 0.5).coeffs)
        )
        report.add_check(
            {"n": n, "check": "cubic_is_4phi"},
            0.0,
            float(diff),
            diff <= 1e-12 * max(1.0, float(n * n)),
            1e-12,
        )

        m_printed = poly.mu(n, as_printed=True)
        report.notes.append(
            "n={}: printed constant gives 2mu={:.15g}, q={:.15g}, off by {:.3g}".format(
                n, 2 * m_printed, q, 2 * m_printed - q
            )
        )
    warnings.warn(
        "Corollary cubic with constant -n^2+7n-6 does not match 4*phi at alpha=1/2; "
        "-n^2+7n-12 is used."
    )
    return report.finish()


def check_sign_claims(grid=None, names=None, tol=TOL_EIG, verbose=False):
    """
    Evaluate every registered sign claim on its grid points.

    Parameters
    ----------
    grid : :py:class:`~specfac.claims.ClaimGrid`, optional
    names : list, optional
        Subset of claim names, default all.
    tol : float
        Slack for the non-strict signs only.
    """
    grid = grid or ClaimGrid()
    names = list(SIGN_CLAIMS) if names is None else list(names)
    for name in names:
        if name not in SIGN_CLAIMS:
            raise ValueError("Unknown claim {}, options: {}".format(name, list(SIGN_CLAIMS)))
    report = VerificationReport(
        "signclaims", params={"grid": grid.to_dict(), "claims": names}, tolerances={"sign": tol}
    )
    counts = {}
    it = progressbar.ProgressBar()(names) if verbose else names
    for name in it:
        claim = SIGN_CLAIMS[name]
        counts[name] = 0
        for a, s, n, in_domain in claim_points(claim, grid):
            if not in_domain:
                report.skipped += 1
                continue
            params = {"claim": name, "subcase": claim.subcase, "alpha": a, "s": s, "n": n}
            try:
                value = float(claim.evaluate(a, s, n))
                passed = claim.sign.holds(value, tol)
            except ValueError as e:
                value, passed = str(e), False
            counts[name] += 1
            report.add_check(params, claim.sign.value, value, passed, tol)
    report.params["points_per_claim"] = counts
    return report.finish()


""" Lemmas """


def _dual_oracle_row(G):
    has_crit, witness = has_factor_criterion(G)
    cert = find_factor(G)
    has_search = cert is not None
    cert_ok = verify_certificate(G, cert) if has_search else True
    has_indep = has_factor_independent(G)
    return {
        "criterion": has_crit,
        "search": has_search,
        "independent": has_indep,
        "certificate_ok": cert_ok,
        "witness": None if witness is None else witness.to_dict(),
        "kinds": None if cert is None else [k.value for k in cert.kinds()],
    }


def verify_lemma_equivalence(max_n=8, jobs=1, verbose=False):
    """
    Criterion oracle against the decomposition search (and the independent-set form of the
    criterion) on every connected graph of order 1..max_n. Certificates are checked
    independently of the search that produced them.
    """
    report = VerificationReport("lemma-equivalence", params={"max_n": max_n})
    for n in range(1, max_n + 1):
        graphs = list(enumerate_connected(n))
        report.add_check(
            {"n": n, "check": "class_count"},
            CONNECTED_COUNTS[n],
            len(graphs),
            CONNECTED_COUNTS[n] == len(graphs),
        )
        rows = _fan_out(_dual_oracle_row, graphs, jobs=jobs, verbose=verbose)
        for G, row in zip(graphs, rows):
            agree = row["criterion"] == row["search"] == row["independent"]
            report.add_check(
                {"n": n, "g6": graph6_encode(G)},
                row["criterion"],
                row,
                agree and row["certificate_ok"],
            )
        if verbose:
            print("n={}: {} graphs".format(n, len(graphs)))
    return report.finish()


def quotient_grid(alphas=(0.0, 0.25, 0.5, 5 / 7, 0.75, 0.9), s_max=8, n_extra=4):
    """(s, n, α) points with n from s + ⌊3s/2⌋ + 3 to n_extra above it."""
    points = []
    for a in alphas:
        for s in range(1, s_max + 1):
            start = s + floor3half(s) + 3
            for n in range(start, start + n_extra + 1):
                points.append((s, n, a))
    return points


def verify_quotient_consistency(points=None, tol=TOL_EIG):
    """
    Largest roots of f_B1, f_B2, f_B3 against dense eigensolves of the graphs they come from,
    equitability of the natural partition, the η2 bounds and Cauchy interlacing on the
    clique-plus-hub principal submatrix.
    """
    points = quotient_grid() if points is None else list(points)
    report = VerificationReport(
        "quotient", params={"points": len(points)}, tolerances={"eig": tol}
    )
    case2_done = set()
    for s, n, a in points:
        k = floor3half(s)
        n1 = n - s - k - 1
        G = construct_family(s, n1, k + 1)
        M = alpha_matrix(G, a)
        rho = spectral_radius(M)
        root = poly.largest_real_root(poly.char_poly_B1(s, n, a))
        Q = quotient_matrix(G, a, family_partition(s, n1, k + 1))
        params = {"s": s, "n": n, "alpha": a}
        report.add_check(
            dict(params, check="B1_root"), rho, root, abs(rho - root) <= tol, tol
        )
        report.add_check(
            dict(params, check="B1_equitable"),
            True,
            {"equitable": Q.equitable, "max_deviation": Q.max_deviation},
            Q.equitable and abs(Q.spectral_radius() - rho) <= tol,
            tol,
        )
        eta2, lower, upper = poly.eta2_bounds(s, n, a)
        report.add_check(
            dict(params, check="eta2_bounds"),
            [lower, upper],
            eta2,
            lower - tol <= eta2 <= upper + tol,
            tol,
        )
        report.add_check(
            dict(params, check="interlacing"),
            True,
            True,
            interlace_check(M, range(s + n1)),
        )
        if (s, a) in case2_done:
            continue
        case2_done.add((s, a))
        for extra, root_fn in ((1, poly.b2_root), (2, poly.b3_root)):
            n2 = s + k + extra
            rho2 = _rho(construct_family(s, 0, k + extra), a)
            r2 = root_fn(s, n2, a)
            report.add_check(
                {"s": s, "n": n2, "alpha": a, "check": "B{}_root".format(extra + 1)},
                rho2,
                r2,
                abs(rho2 - r2) <= tol,
                tol,
            )
    return report.finish()


def verify_lemma3(n_max=30, alphas=(0.0, 0.25, 0.5, 0.75, 0.9), tol=1e-10):
    """ρ_α(K_n) = n - 1, plus the eigensolver self-check, for n <= n_max."""
    report = VerificationReport(
        "lemma3", params={"n_max": n_max, "alphas": list(alphas)}, tolerances={"eig": tol}
    )
    for a in alphas:
        for n in range(1, n_max + 1):
            M = alpha_matrix(complete(n), a)
            rho = spectral_radius(M)
            _, _, solver_ok = eigen_self_check(M)
            report.add_check(
                {"alpha": a, "n": n}, n - 1, rho, abs(rho - (n - 1)) <= tol and solver_ok, tol
            )
    return report.finish()


def verify_lemma4(
    trials=1000,
    seed=0,
    n_range=(5, 12),
    alphas=(0.0, 0.25, 0.5, 0.75, 0.9),
    min_increase=1e-12,
):
    """
    Adding an edge to a connected graph strictly increases ρ_α, on random graphs, random
    non-edges and random α. A check passes when ρ_α grows by more than `min_increase`.
    """
    report = VerificationReport(
        "lemma4",
        params={"trials": trials, "seed": seed, "n_range": list(n_range)},
        tolerances={"min_increase": min_increase},
    )
    rng = np.random.default_rng(seed)
    for t in range(trials):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        p = float(rng.uniform(0.2, 0.8))
        G = random_connected_graph(n, p, rng)
        missing = non_edges(G)
        if not missing:
            report.skipped += 1
            continue
        u, v = missing[int(rng.integers(len(missing)))]
        a = float(alphas[int(rng.integers(len(alphas)))])
        before = _rho(G, a)
        after = _rho(add_edge(G, u, v), a)
        report.add_check(
            {"trial": t, "n": n, "alpha": a, "g6": graph6_encode(G), "edge": [u, v]},
            "> rho(G)",
            {"before": before, "after": after},
            after - before > min_increase,
            min_increase,
        )
    return report.finish()


def verify_spectral_chain(alphas=(0.0, 0.25, 0.5, 0.75), n_list=None, n_span=10, tol=TOL_EIG):
    """
    n-3 < τ(n) < n-1, ρ_α(G2) = τ(n) and ρ_α(G3) = θ(n) < τ(n) for n >= f(α).

    Parameters
    ----------
    n_list : list, optional
        Orders, by default ⌈f(α)⌉ .. ⌈f(α)⌉ + n_span per α. Orders below f(α) are
        skipped.
    """
    report = VerificationReport(
        "chain", params={"alphas": list(alphas), "n_list": n_list}, tolerances={"eig": tol}
    )
    for a in alphas:
        f = poly.f_threshold(a)
        n0 = int(math.ceil(f))
        orders = range(n0, n0 + n_span + 1) if n_list is None else n_list
        for n in orders:
            if n < f:
                report.skipped += 1
                continue
            t = poly.tau(n, a)
            th = poly.theta(n, a)
            rho2 = _rho(build_family(FamilyOptions.G2, n), a)
            rho3 = _rho(build_family(FamilyOptions.G3, n), a)
            ok = (
                n - 3 < t < n - 1
                and abs(rho2 - t) <= tol
                and abs(rho3 - th) <= tol
                and th < t
            )
            report.add_check(
                {"alpha": a, "n": n},
                "n-3 < tau < n-1, rho(G2) = tau, rho(G3) = theta < tau",
                {"tau": t, "theta": th, "rho_G2": rho2, "rho_G3": rho3},
                ok,
                tol,
            )
    return report.finish()


def verify_t3_family(max_vertices=15, verbose=False):
    """
    Recognition of T3 members against generate-and-match over all trees up to
    `max_vertices`, the member orders and the uniqueness of the 10-vertex member.
    """
    report = VerificationReport("t3family", params={"max_vertices": max_vertices})
    member_sizes = []
    for size in range(1, max_vertices + 1):
        members = t3_members(size)
        if members:
            member_sizes.append(size)
        it = nx.nonisomorphic_trees(size) if size > 1 else [nx.empty_graph(1)]
        for T in it:
            G = from_networkx(T)
            recognised = is_T3_member(G)
            generated = any(are_isomorphic(G, M) for M in members)
            report.add_check(
                {"n": size, "g6": graph6_encode(G)},
                generated,
                recognised,
                recognised == generated,
            )
        if verbose:
            print("n={}: {} members".format(size, len(members)))

    expected_sizes = [s for s in (5, 10, 15) if s <= max_vertices]
    report.add_check(
        {"check": "member_sizes"}, expected_sizes, member_sizes, member_sizes == expected_sizes
    )
    if max_vertices >= 10:
        tens = t3_members(10)
        unique = len(tens) == 1 and are_isomorphic(tens[0], spider(3, 3))
        report.add_check(
            {"check": "unique_10_vertex_member"}, "spider(3, 3)", len(tens), unique
        )
        report.witnesses["member_10"] = graph6_encode(tens[0])
    for R in generate_13_trees(max(0, max_vertices // 5 - 1)):
        report.add_check(
            {"check": "13_tree_leaves", "g6": graph6_encode(R.graph)},
            len(R.internal()) + 2,
            len(R.leaves()),
            len(R.leaves()) == len(R.internal()) + 2,
        )
    return report.finish()


HARNESSES = {
    "theorem1": verify_theorem1,
    "theorem2": verify_theorem2,
    "corollary3": verify_corollary3,
    "signclaims": check_sign_claims,
    "lemma-equivalence": verify_lemma_equivalence,
    "quotient": verify_quotient_consistency,
    "lemma3": verify_lemma3,
    "lemma4": verify_lemma4,
    "chain": verify_spectral_chain,
    "t3family": verify_t3_family,
}
