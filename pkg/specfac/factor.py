"""
Existence of {P2, C3, P5, T3}-factors: the isolated-vertex criterion i(G-S) <= 3|S|/2 with a
violating-set witness, and an explicit decomposition search returning a checkable certificate.
"""

import itertools
from enum import Enum
import numpy as np
from networkx.algorithms.isomorphism import GraphMatcher
from specfac.graph import is_connected, make_graph
from specfac.trees import is_T3_member, t3_members
from specfac.util import (
    BLOCK_CAP,
    CRITERION_CAP,
    FACTOR_CAP,
    NEIGHBORHOOD_CAP,
    SEARCH_BUDGET,
    CapabilityError,
    InconclusiveSearchError,
)


class BlockKind(Enum):
    P2 = "P2"
    C3 = "C3"
    P5 = "P5"
    T3 = "T3"

    @staticmethod
    def values():
        return [kind.value for kind in BlockKind]


class CriterionStrategy(Enum):
    AUTO = "auto"
    SUBSETS = "subsets"
    NEIGHBORHOOD = "neighborhood"

    @staticmethod
    def values():
        return [strategy.value for strategy in CriterionStrategy]


# largest order for which "auto" scans subsets directly
AUTO_SUBSETS_MAX = 12


def _bits(mask):
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def _popcount(x):
    return bin(x).count("1")


class CriterionWitness(object):
    """
    Violating set S with i(G-S) isolated vertices, slack = i - 3|S|/2 > 0.
    """

    __slots__ = ("subset", "isolated")

    def __init__(self, subset, isolated):
        self.subset = tuple(sorted(int(v) for v in subset))
        self.isolated = int(isolated)

    @property
    def slack(self):
        return self.isolated - 1.5 * len(self.subset)

    def to_dict(self):
        return {"S": list(self.subset), "i": self.isolated, "slack": self.slack}

    def __eq__(self, other):
        if not isinstance(other, CriterionWitness):
            return NotImplemented
        return self.subset == other.subset and self.isolated == other.isolated

    def __repr__(self):
        return "CriterionWitness(S={}, i={}, slack={})".format(
            list(self.subset), self.isolated, self.slack
        )


def _size_bound(n):
    """Sizes s with 5s < 2n, the only ones where i(G-S) > 3s/2 is possible."""
    return range(0, (2 * n + 4) // 5)


def _isolated_mask(masks, S, n):
    iso = 0
    for v in range(n):
        if not (S >> v) & 1 and masks[v] & ~S == 0:
            iso |= 1 << v
    return iso


def _criterion_subsets(G):
    n, masks = G.n, G.masks
    degrees = G.degrees()
    for size in _size_bound(n):
        need = 3 * size // 2 + 1
        if sum(1 for d in degrees if d <= size) < need:
            continue
        # combinations come out in lexicographic order of sorted membership
        for S in itertools.combinations(range(n), size):
            S_mask = 0
            for v in S:
                S_mask |= 1 << v
            i = _popcount(_isolated_mask(masks, S_mask, n))
            if 2 * i > 3 * size:
                return CriterionWitness(S, i)
    return None


def _criterion_neighborhood(G):
    """
    At the minimum violating size s, every violating S equals N(I) for I the isolated vertices
    of G-S. Search the sets N(I) of independent sets of vertices of degree <= s, closing each
    I under isolation, and keep those of size exactly s.
    """
    n, masks = G.n, G.masks
    degrees = G.degrees()
    for size in _size_bound(n):
        need = 3 * size // 2 + 1
        cand = [v for v in range(n) if degrees[v] <= size]
        if len(cand) < need:
            continue
        found = []
        seen = {0}
        stack = [0]
        while stack:
            S = stack.pop()
            iso = _isolated_mask(masks, S, n)
            if _popcount(S) == size and _popcount(iso) >= need:
                found.append(S)
            for v in cand:
                if (S >> v) & 1 or (iso >> v) & 1:
                    continue
                S2 = S | masks[v]
                if S2 not in seen and _popcount(S2) <= size:
                    seen.add(S2)
                    stack.append(S2)
        if found:
            best = min(tuple(_bits(S)) for S in found)
            S_mask = sum(1 << v for v in best)
            return CriterionWitness(best, _popcount(_isolated_mask(masks, S_mask, n)))
    return None


def has_factor_criterion(G, strategy="auto"):
    """
    Decide factor existence by the criterion i(G-S) <= 3|S|/2 for every S ⊆ V(G).

    Parameters
    ----------
    G : :py:class:`~specfac.graph.Graph`
        Non-empty graph.
    strategy : str
        "subsets" scans S by increasing size (n <= 26), "neighborhood" searches only the
        neighbourhoods of independent sets (n <= 64), "auto" uses subsets up to n = 12. Both
        return the same witness.

    Returns
    -------
    has_factor : bool
    witness : :py:class:`CriterionWitness` or None
        A violating S of minimum size, lexicographically first among those, if any.
    """
    if G.n == 0:
        raise ValueError("Criterion needs a non-empty graph.")
    strategy = CriterionStrategy(strategy)
    if strategy == CriterionStrategy.AUTO:
        if G.n <= AUTO_SUBSETS_MAX:
            strategy = CriterionStrategy.SUBSETS
        else:
            strategy = CriterionStrategy.NEIGHBORHOOD
    if strategy == CriterionStrategy.SUBSETS:
        if G.n > CRITERION_CAP:
            raise CapabilityError(
                "Subset scan limited to n <= {}, use sampled mode".format(CRITERION_CAP)
            )
        witness = _criterion_subsets(G)
    else:
        if G.n > NEIGHBORHOOD_CAP:
            raise CapabilityError(
                "Exact criterion limited to n <= {}, use sampled mode".format(NEIGHBORHOOD_CAP)
            )
        witness = _criterion_neighborhood(G)
    return witness is None, witness


def has_factor_independent(G):
    """
    Independent-set form of the criterion: no factor iff some independent set I has
    2|I| > 3|N(I)|. Plain enumeration of independent sets, for cross-checking (n <= 26).
    """
    n, masks = G.n, G.masks
    if n == 0:
        raise ValueError("Criterion needs a non-empty graph.")
    if n > CRITERION_CAP:
        raise CapabilityError("Independent-set scan limited to n <= {}".format(CRITERION_CAP))

    def grow(start, size, blocked, nbrs):
        if size and 2 * size > 3 * _popcount(nbrs):
            return True
        for v in range(start, n):
            if not (blocked >> v) & 1:
                if grow(v + 1, size + 1, blocked | masks[v] | (1 << v), nbrs | masks[v]):
                    return True
        return False

    return not grow(0, 0, 0, 0)


def sample_violation(G, trials=10000, seed=0):
    """
    Randomised one-sided search for a violating set, for graphs above the exact caps.

    Half of the trials test uniform random subsets, the other half the neighbourhood of a
    random maximal independent set grown from low-degree vertices.

    Returns
    -------
    :py:class:`CriterionWitness` or None
        Smallest violating set found (size, then lexicographic). None is inconclusive.
    """
    rng = np.random.default_rng(seed)
    n, masks = G.n, G.masks
    degrees = np.array(G.degrees())
    sizes = list(_size_bound(n))
    best = None
    for t in range(trials):
        if t % 2 == 0:
            size = int(rng.choice(sizes))
            S = [int(v) for v in rng.choice(n, size=size, replace=False)]
            S_mask = sum(1 << v for v in S)
        else:
            order = np.argsort(degrees + rng.random(n))
            blocked = I_nbrs = 0
            limit = int(rng.integers(1, n + 1))
            for v in order[:limit]:
                v = int(v)
                if not (blocked >> v) & 1:
                    blocked |= masks[v] | (1 << v)
                    I_nbrs |= masks[v]
            S_mask = I_nbrs
        i = _popcount(_isolated_mask(masks, S_mask, n))
        size = _popcount(S_mask)
        if 2 * i > 3 * size:
            w = CriterionWitness(_bits(S_mask), i)
            if best is None or (len(w.subset), w.subset) < (len(best.subset), best.subset):
                best = w
    return best


""" Certificates """


class FactorBlock(object):
    """One component of a factor: its vertices, kind and spanning edges."""

    __slots__ = ("vertices", "kind", "edges")

    def __init__(self, vertices, kind, edges):
        self.vertices = tuple(sorted(int(v) for v in vertices))
        self.kind = BlockKind(kind)
        self.edges = tuple(sorted(tuple(sorted((int(u), int(v)))) for u, v in edges))

    def to_dict(self):
        return {
            "vertices": list(self.vertices),
            "kind": self.kind.value,
            "edges": [list(e) for e in self.edges],
        }

    def __repr__(self):
        return "FactorBlock({}, {})".format(self.kind.value, list(self.vertices))


class FactorCertificate(object):
    """Partition of V(G) into blocks, each spanned by an edge, triangle, P5 or T3 tree."""

    def __init__(self, blocks):
        self.blocks = [b if isinstance(b, FactorBlock) else FactorBlock(*b) for b in blocks]

    def kinds(self):
        return [b.kind for b in self.blocks]

    def to_dict(self):
        return {"blocks": [b.to_dict() for b in self.blocks]}

    def __repr__(self):
        return "FactorCertificate({})".format(self.blocks)


def _block_tree(vertices, edges):
    """Block relabelled 0..k-1 if `edges` form a spanning tree of `vertices`, else None."""
    if len(edges) != len(vertices) - 1:
        return None
    index = {v: i for i, v in enumerate(vertices)}
    H = make_graph(len(vertices), [(index[u], index[v]) for u, v in edges])
    if H.m != len(vertices) - 1 or not is_connected(H):
        return None
    return H


def verify_certificate(G, cert, return_reason=False):
    """
    Check a certificate against `G` without searching.

    Parameters
    ----------
    G : :py:class:`~specfac.graph.Graph`
    cert : :py:class:`FactorCertificate`
    return_reason : bool
        Also return a reason code ("ok" when valid).
    """

    def result(ok, reason):
        return (ok, reason) if return_reason else ok

    covered = [v for b in cert.blocks for v in b.vertices]
    if sorted(covered) != list(range(G.n)):
        return result(False, "not_partition")
    for b in cert.blocks:
        vs = list(b.vertices)
        vset = set(vs)
        if len(set(b.edges)) != len(b.edges):
            return result(False, "repeated_edge")
        for u, v in b.edges:
            if u not in vset or v not in vset:
                return result(False, "edge_outside_block")
            if not G.has_edge(u, v):
                return result(False, "missing_edge")
        size = len(vs)
        if b.kind == BlockKind.P2:
            if size != 2 or len(b.edges) != 1:
                return result(False, "bad_size")
        elif b.kind == BlockKind.C3:
            if size != 3:
                return result(False, "bad_size")
            if len(b.edges) != 3:
                return result(False, "not_triangle")
        elif b.kind == BlockKind.P5:
            if size != 5:
                return result(False, "bad_size")
            tree = _block_tree(vs, b.edges)
            if tree is None or max(tree.degrees()) > 2:
                return result(False, "not_spanning_path")
        else:
            if size < 5 or size % 5:
                return result(False, "bad_size")
            tree = _block_tree(vs, b.edges)
            if tree is None or not is_T3_member(tree):
                return result(False, "not_t3")
    return result(True, "ok")


""" Decomposition search """


def _hamiltonian_path(vertices, masks):
    """Edges of a path through all `vertices` in the induced subgraph, or None."""
    vmask = sum(1 << v for v in vertices)

    def extend(path, used):
        if len(path) == len(vertices):
            return path
        for u in _bits(masks[path[-1]] & vmask & ~used):
            out = extend(path + [u], used | (1 << u))
            if out:
                return out
        return None

    for start in vertices:
        path = extend([start], 1 << start)
        if path:
            return list(zip(path[:-1], path[1:]))
    return None


def _spanning_t3(vertices, G):
    """Edges of a spanning T3 member of the induced block, or None."""
    sub, labels = G.induced(vertices)
    host = sub.to_networkx()
    for member in t3_members(len(vertices)):
        matcher = GraphMatcher(host, member.to_networkx())
        mapping = next(matcher.subgraph_monomorphisms_iter(), None)
        if mapping is not None:
            inverse = {b: a for a, b in mapping.items()}
            return [(labels[inverse[a]], labels[inverse[b]]) for a, b in member.edges()]
    return None


def _connected_sets(root, rem, size, masks):
    """
    Connected vertex sets of `size` containing `root` inside `rem`, every other vertex larger
    than `root`, each produced once.
    """

    def extend(sub, ext, closed):
        if _popcount(sub) == size:
            yield sub
            return
        while ext:
            w = (ext & -ext).bit_length() - 1
            ext &= ~(1 << w)
            new_ext = ext | (masks[w] & rem & ~closed)
            yield from extend(sub | (1 << w), new_ext, closed | masks[w] | (1 << w))

    start = 1 << root
    yield from extend(start, masks[root] & rem, masks[root] | start)


def find_factor(G, block_cap=BLOCK_CAP, max_n=FACTOR_CAP, budget=SEARCH_BUDGET):
    """
    Exact search for a {P2, C3, P5, T3}-factor.

    The lowest uncovered vertex is placed in a block, trying T3 blocks of 5k vertices (largest
    first), then triangles, then edges. Failed sets of uncovered vertices are memoised.

    Parameters
    ----------
    G : :py:class:`~specfac.graph.Graph`
    block_cap : int
        Largest T3 block size, at least 5.
    max_n : int
        Largest order accepted.
    budget : int
        Maximum number of candidate blocks tried before giving up.

    Returns
    -------
    :py:class:`FactorCertificate` or None
        None iff no factor exists with blocks up to `block_cap`.
    """
    if block_cap < 5:
        raise ValueError("block_cap must be at least 5, got {}".format(block_cap))
    n, masks = G.n, G.masks
    if n == 0:
        raise ValueError("Decomposition search needs a non-empty graph.")
    if n > max_n:
        raise CapabilityError("find_factor limited to n <= {}, got {}".format(max_n, n))

    failed = set()
    shapes = {}
    tried = [0]

    def shape(block_mask):
        if block_mask not in shapes:
            vertices = _bits(block_mask)
            if len(vertices) == 5:
                edges = _hamiltonian_path(vertices, masks)
                shapes[block_mask] = None if edges is None else (BlockKind.P5, edges)
            else:
                edges = _spanning_t3(vertices, G)
                shapes[block_mask] = None if edges is None else (BlockKind.T3, edges)
        return shapes[block_mask]

    def candidates(v, rem):
        n_rem = _popcount(rem)
        for size in range(5 * (block_cap // 5), 4, -5):
            if size > n_rem:
                continue
            for block_mask in _connected_sets(v, rem, size, masks):
                found = shape(block_mask)
                if found is not None:
                    yield block_mask, found[0], found[1]
        nbrs = _bits(masks[v] & rem)
        for u, w in itertools.combinations(nbrs, 2):
            if (masks[u] >> w) & 1:
                yield (1 << v) | (1 << u) | (1 << w), BlockKind.C3, [(v, u), (v, w), (u, w)]
        for u in nbrs:
            yield (1 << v) | (1 << u), BlockKind.P2, [(v, u)]

    def solve(rem):
        if rem == 0:
            return []
        if rem in failed:
            return None
        for x in _bits(rem):
            if masks[x] & rem == 0:
                failed.add(rem)
                return None
        v = (rem & -rem).bit_length() - 1
        for block_mask, kind, edges in candidates(v, rem):
            tried[0] += 1
            if tried[0] > budget:
                raise InconclusiveSearchError(
                    "find_factor tried more than {} blocks".format(budget)
                )
            rest = solve(rem & ~block_mask)
            if rest is not None:
                return [FactorBlock(_bits(block_mask), kind, edges)] + rest
        failed.add(rem)
        return None

    blocks = solve((1 << n) - 1)
    if blocks is None:
        return None
    return FactorCertificate(blocks)
