import functools
import networkx as nx
from specfac.graph import Graph, from_networkx, is_connected, make_graph
from specfac.util import CapabilityError


MAX_INTERNAL = 8


class TreeSpec(object):
    """
    A graph known to be a tree, with role tags computed on demand.
    """

    __slots__ = ("graph",)

    def __init__(self, graph):
        if not isinstance(graph, Graph):
            raise ValueError("Expected a Graph, got {}".format(type(graph)))
        if graph.n < 1 or graph.m != graph.n - 1 or not is_connected(graph):
            raise ValueError("Not a tree: {}".format(graph))
        self.graph = graph

    @property
    def n(self):
        return self.graph.n

    def leaves(self):
        return [v for v in range(self.n) if self.graph.degree(v) == 1]

    def internal(self):
        """Vertices of degree 3."""
        return [v for v in range(self.n) if self.graph.degree(v) == 3]

    def roles(self):
        """Per-vertex tags: "leaf", "degree-2", "degree-3", ... ("isolated" for K1)."""
        tags = []
        for d in self.graph.degrees():
            if d == 0:
                tags.append("isolated")
            elif d == 1:
                tags.append("leaf")
            else:
                tags.append("degree-{}".format(d))
        return tags

    def is_13_tree(self):
        return self.n >= 2 and all(d in (1, 3) for d in self.graph.degrees())

    def __repr__(self):
        return "TreeSpec(n={}, leaves={})".format(self.n, len(self.leaves()))


def spider(legs, length):
    """Tree with `legs` paths of `length` edges from a common centre 0."""
    edges = []
    nxt = 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return make_graph(nxt, edges)


def _attach_leaves(core):
    """Give every vertex of a max-degree-3 tree pendant leaves up to degree 3."""
    n = core.n
    edges = core.edges()
    nxt = n
    for v in range(n):
        for _ in range(3 - core.degree(v)):
            edges.append((v, nxt))
            nxt += 1
    return make_graph(nxt, edges)


def _13_trees_with_internal(n_internal):
    if n_internal == 0:
        return [TreeSpec(make_graph(2, [(0, 1)]))]
    if n_internal == 1:
        return [TreeSpec(make_graph(4, [(0, 1), (0, 2), (0, 3)]))]
    out = []
    for core in nx.nonisomorphic_trees(n_internal):
        if max(d for _, d in core.degree()) > 3:
            continue
        out.append(TreeSpec(_attach_leaves(from_networkx(core))))
    return out


def generate_13_trees(max_internal):
    """
    One representative per isomorphism class of {1,3}-trees with at most `max_internal`
    vertices of degree 3.

    A {1,3}-tree with I >= 1 internal vertices is a tree of maximum degree 3 on those I
    vertices with leaves attached until every one has degree 3, so classes are generated from
    the non-isomorphic trees of order I.
    """
    if max_internal < 0:
        raise ValueError("max_internal must be non-negative.")
    if max_internal > MAX_INTERNAL:
        raise CapabilityError("generate_13_trees supports max_internal <= {}".format(MAX_INTERNAL))
    trees = []
    for n_internal in range(max_internal + 1):
        for R in _13_trees_with_internal(n_internal):
            assert len(R.leaves()) == n_internal + 2
            assert R.n == 2 * n_internal + 2
            trees.append(R)
    return trees


def expand_to_T3(R):
    """
    Subdivide every edge of the {1,3}-tree `R` once and hang a pendant edge on every leaf.

    Parameters
    ----------
    R : :py:class:`TreeSpec` or :py:class:`~specfac.graph.Graph`

    Returns
    -------
    :py:class:`TreeSpec` on |V(R)| + |E(R)| + |Leaf(R)| = 5I + 5 vertices.
    """
    if isinstance(R, Graph):
        R = TreeSpec(R)
    if not R.is_13_tree():
        raise ValueError("Input is not a {1,3}-tree.")
    G = R.graph
    edges = []
    nxt = G.n
    for u, v in G.edges():
        edges += [(u, nxt), (nxt, v)]
        nxt += 1
    for leaf in R.leaves():
        edges.append((leaf, nxt))
        nxt += 1
    return TreeSpec(make_graph(nxt, edges))


def is_T3_member(T):
    """
    Whether `T` is T_R for some {1,3}-tree R, by undoing the construction: strip the leaves,
    check that branch vertices are joined through exactly one degree-2 vertex, smooth those
    and check the result is a {1,3}-tree.
    """
    if isinstance(T, TreeSpec):
        T = T.graph
    n = T.n
    if n < 5 or n % 5 or T.m != n - 1 or not is_connected(T):
        return False
    deg = T.degrees()
    if max(deg) > 3:
        return False

    leaves = [v for v in range(n) if deg[v] == 1]
    leaf_set = set(leaves)
    for v in leaves:
        (u,) = T.neighbors(v)
        if deg[u] != 2 or len(T.neighbors(u) & leaf_set) != 1:
            return False

    # tree without the leaves
    core = [v for v in range(n) if v not in leaf_set]
    core_adj = {v: T.neighbors(v) - leaf_set for v in core}
    core_deg = {v: len(core_adj[v]) for v in core}
    branch = [v for v in core if core_deg[v] != 2]
    if any(core_deg[v] not in (1, 3) for v in branch):
        return False

    # walk from every branch vertex along degree-2 chains
    for b in branch:
        for nb in core_adj[b]:
            prev, cur, interior = b, nb, 0
            while core_deg[cur] == 2:
                interior += 1
                (nxt,) = core_adj[cur] - {prev}
                prev, cur = cur, nxt
            if interior != 1:
                return False
    return True


@functools.lru_cache(maxsize=None)
def t3_members(size):
    """All members of the T3 family on `size` vertices (`size` a multiple of 5)."""
    if size < 5 or size % 5:
        return ()
    n_internal = size // 5 - 1
    if n_internal > MAX_INTERNAL:
        raise CapabilityError("T3 members supported up to {} vertices".format(5 * MAX_INTERNAL + 5))
    return tuple(expand_to_T3(R).graph for R in _13_trees_with_internal(n_internal))
