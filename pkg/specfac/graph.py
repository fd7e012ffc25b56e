import numpy as np


class Graph(object):
    """
    Simple undirected graph on vertices 0..n-1, stored as per-vertex neighbour sets.

    Instances are immutable: constructors return new graphs, so a graph can be shared between
    workers freely. Two graphs compare equal when they have the same labelled edge set.
    """

    __slots__ = ("_n", "_adj", "_masks", "_m")

    def __init__(self, n, adj):
        """
        Parameters
        ----------
        n : int
            Number of vertices.
        adj : sequence of iterables
            `adj[v]` lists the neighbours of `v`. Must be symmetric and loop-free, use
            :py:func:`make_graph` to build a graph from an edge list with validation.
        """
        n = int(n)
        if n < 0:
            raise ValueError("Vertex count must be non-negative.")
        assert len(adj) == n
        adj = tuple(frozenset(int(u) for u in nbrs) for nbrs in adj)
        for v, nbrs in enumerate(adj):
            if v in nbrs:
                raise ValueError("Self-loop at vertex {}".format(v))
            for u in nbrs:
                if not 0 <= u < n:
                    raise ValueError("Vertex id {} out of range for n={}".format(u, n))
                if v not in adj[u]:
                    raise ValueError("Adjacency not symmetric for edge ({}, {})".format(v, u))
        self._n = n
        self._adj = adj
        self._masks = tuple(sum(1 << u for u in nbrs) for nbrs in adj)
        self._m = sum(len(nbrs) for nbrs in adj) // 2

    @property
    def n(self):
        return self._n

    @property
    def m(self):
        """Number of edges."""
        return self._m

    @property
    def adj(self):
        """Sorted neighbour tuples, one per vertex."""
        return tuple(tuple(sorted(nbrs)) for nbrs in self._adj)

    @property
    def masks(self):
        """Neighbourhoods as integer bitmasks, bit `u` of `masks[v]` set iff uv is an edge."""
        return self._masks

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def degrees(self):
        return [len(nbrs) for nbrs in self._adj]

    def has_edge(self, u, v):
        return v in self._adj[u]

    def edges(self):
        """Sorted list of edges (u, v) with u < v."""
        return [(u, v) for u in range(self._n) for v in sorted(self._adj[u]) if u < v]

    def adjacency_matrix(self):
        A = np.zeros((self._n, self._n), dtype=np.float64)
        for u, v in self.edges():
            A[u, v] = 1.0
            A[v, u] = 1.0
        return A

    def induced(self, vertices):
        """
        Induced subgraph on `vertices`, relabelled 0..k-1 in the given order.

        Returns
        -------
        sub : :py:class:`Graph`
        labels : list
            `labels[i]` is the vertex of this graph that became vertex `i`.
        """
        labels = list(vertices)
        index = {v: i for i, v in enumerate(labels)}
        if len(index) != len(labels):
            raise ValueError("Repeated vertex in induced subgraph request.")
        adj = [[index[u] for u in self._adj[v] if u in index] for v in labels]
        return Graph(len(labels), adj), labels

    def to_networkx(self):
        import networkx as nx

        H = nx.Graph()
        H.add_nodes_from(range(self._n))
        H.add_edges_from(self.edges())
        return H

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self):
        return hash((self._n, self._masks))

    def __repr__(self):
        return "Graph(n={}, m={})".format(self._n, self._m)


def make_graph(n, edges):
    """
    Build a graph from an edge list, duplicate edges collapsed.

    Parameters
    ----------
    n : int
        Number of vertices, labelled 0..n-1.
    edges : iterable of pairs
        Each pair (u, v) needs 0 <= u, v < n and u != v.
    """
    n = int(n)
    if n < 0:
        raise ValueError("Vertex count must be non-negative.")
    adj = [set() for _ in range(n)]
    for e in edges:
        u, v = (int(x) for x in e)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError("Edge ({}, {}) out of range for n={}".format(u, v, n))
        if u == v:
            raise ValueError("Self-loop ({}, {}) not allowed".format(u, v))
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def from_networkx(H):
    """Convert a networkx graph, vertices relabelled 0..n-1 in sorted order."""
    nodes = sorted(H.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return make_graph(len(nodes), [(index[u], index[v]) for u, v in H.edges()])


def empty_graph(n):
    """n·K1."""
    return Graph(n, [()] * n)


def complete(n):
    if n < 1:
        raise ValueError("Complete graph needs n >= 1.")
    return Graph(n, [[u for u in range(n) if u != v] for v in range(n)])


def path_graph(n):
    return make_graph(n, [(v, v + 1) for v in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise ValueError("Cycle needs n >= 3.")
    return make_graph(n, [(v, (v + 1) % n) for v in range(n)])


def star(leaves):
    """K_{1,leaves} with centre 0."""
    return make_graph(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def union(G, H):
    """Disjoint union, vertices of `H` shifted by `G.n`."""
    shift = G.n
    adj = [list(nbrs) for nbrs in G.adj] + [[u + shift for u in nbrs] for nbrs in H.adj]
    return Graph(G.n + H.n, adj)


def join(G, H):
    """Disjoint union plus every edge between `G` and `H`."""
    shift = G.n
    total = G.n + H.n
    adj = [list(nbrs) + list(range(shift, total)) for nbrs in G.adj]
    adj += [[u + shift for u in nbrs] + list(range(shift)) for nbrs in H.adj]
    return Graph(total, adj)


def construct_family(s, n1, i):
    """
    K_s ∨ (K_{n1} ∪ i·K1).

    Vertices are laid out hub block first (0..s-1), clique block second, independent block
    last. `n1 = 0` gives K_s ∨ i·K1, `s = 0` gives K_{n1} ∪ i·K1.
    """
    s, n1, i = int(s), int(n1), int(i)
    if min(s, n1, i) < 0:
        raise ValueError("Family parameters must be non-negative, got {}".format((s, n1, i)))
    if s + n1 + i == 0:
        raise ValueError("At least one of s, n1, i must be positive.")
    parts = []
    if n1 > 0:
        parts.append(complete(n1))
    if i > 0:
        parts.append(empty_graph(i))
    rest = parts[0]
    for part in parts[1:]:
        rest = union(rest, part)
    if s == 0:
        return rest
    return join(complete(s), rest)


def isolated_count(G, S=()):
    """
    i(G−S): number of vertices outside `S` whose neighbours all lie in `S`.
    """
    S = frozenset(int(v) for v in S)
    for v in S:
        if not 0 <= v < G.n:
            raise ValueError("Vertex {} not in graph of order {}".format(v, G.n))
    return sum(1 for v in range(G.n) if v not in S and G.neighbors(v) <= S)


def is_connected(G):
    if G.n == 0:
        return False
    masks = G.masks
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        v = 0
        f = frontier
        while f:
            if f & 1:
                reach |= masks[v]
            f >>= 1
            v += 1
        frontier = reach & ~seen
        seen |= frontier
    return seen == (1 << G.n) - 1


def non_edges(G):
    return [(u, v) for u in range(G.n) for v in range(u + 1, G.n) if not G.has_edge(u, v)]


def add_edge(G, u, v):
    """New graph with the edge uv added."""
    return make_graph(G.n, G.edges() + [(u, v)])


def random_connected_graph(n, p, rng=None, max_tries=10000):
    """
    Erdős–Rényi G(n, p) sample, resampled until connected.

    Parameters
    ----------
    n : int
        Order.
    p : float
        Edge probability in (0, 1].
    rng : :py:class:`numpy.random.Generator` or int, optional
        Random generator or seed.
    """
    if not 0 < p <= 1:
        raise ValueError("Edge probability must be in (0, 1], got {}".format(p))
    rng = np.random.default_rng(rng)
    iu = np.triu_indices(n, k=1)
    for _ in range(max_tries):
        keep = rng.random(len(iu[0])) < p
        G = make_graph(n, zip(iu[0][keep].tolist(), iu[1][keep].tolist()))
        if is_connected(G):
            return G
    raise RuntimeError("No connected sample after {} tries (n={}, p={})".format(max_tries, n, p))
