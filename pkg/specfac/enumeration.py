import functools
import itertools
import progressbar
from specfac.canonical import canonical_code, canonical_form
from specfac.graph import Graph, is_connected
from specfac.io import read_graph6_file
from specfac.util import ENUMERATION_CAP, CapabilityError


# connected graphs per order, OEIS A001349
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}

BRUTE_FORCE_MAX = 6


def _masks_connected(n, masks):
    seen = frontier = 1
    while frontier:
        reach = 0
        for v in range(n):
            if (frontier >> v) & 1:
                reach |= masks[v]
        frontier = reach & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def _graph_from_masks(n, masks):
    return Graph(n, [[u for u in range(n) if (m >> u) & 1] for m in masks])


def brute_force_connected(n):
    """
    One graph per isomorphism class of connected graphs on `n` vertices, by canonical
    bucketing of all 2^(n(n-1)/2) labelled graphs. Sorted by canonical code.
    """
    if n < 1:
        raise ValueError("Order must be positive, got {}".format(n))
    pairs = list(itertools.combinations(range(n), 2))
    buckets = {}
    for edge_set in range(1 << len(pairs)):
        masks = [0] * n
        for k, (u, v) in enumerate(pairs):
            if (edge_set >> k) & 1:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        if not _masks_connected(n, masks):
            continue
        code, _ = canonical_code(n, masks)
        if code not in buckets:
            buckets[code] = masks
    return [_graph_from_masks(n, buckets[code]) for code in sorted(buckets)]


def _accept_new_vertex(n, masks, new):
    """The new vertex must have minimum degree among the non-cut vertices of the child."""
    d_new = bin(masks[new]).count("1")
    full = (1 << n) - 1
    for u in range(n):
        if u == new or bin(masks[u]).count("1") >= d_new:
            continue
        # u has smaller degree: reject unless u is a cut vertex
        sub = [m & ~(1 << u) for m in masks]
        start = 0 if u != 0 else 1
        seen = frontier = 1 << start
        while frontier:
            reach = 0
            for v in range(n):
                if (frontier >> v) & 1:
                    reach |= sub[v]
            frontier = reach & ~seen & ~(1 << u)
            seen |= frontier
        if seen | (1 << u) == full:
            return False
    return True


def augment_connected(parents, verbose=False):
    """
    Connected graphs of order n+1 from one representative per class of order n: add a vertex
    joined to every non-empty subset, keep children whose new vertex is a minimum-degree
    non-cut vertex, deduplicate by canonical code.
    """
    parents = list(parents)
    if not parents:
        return []
    n = parents[0].n + 1
    new = n - 1
    buckets = {}
    it = progressbar.ProgressBar()(parents) if verbose else parents
    for H in it:
        base = list(H.masks)
        for T in range(1, 1 << new):
            masks = [m | (1 << new) if (T >> v) & 1 else m for v, m in enumerate(base)]
            masks.append(T)
            if not _accept_new_vertex(n, masks, new):
                continue
            code, _ = canonical_code(n, masks)
            if code not in buckets:
                buckets[code] = masks
    return [_graph_from_masks(n, buckets[code]) for code in sorted(buckets)]


@functools.lru_cache(maxsize=None)
def connected_classes(n, verbose=False):
    """Tuple of connected class representatives of order `n` (cached)."""
    if n < 1:
        raise ValueError("Order must be positive, got {}".format(n))
    if n > ENUMERATION_CAP:
        raise CapabilityError(
            "Built-in enumeration supports n <= {}; supply a graph6 corpus for n={}".format(
                ENUMERATION_CAP, n
            )
        )
    if n <= BRUTE_FORCE_MAX:
        graphs = brute_force_connected(n)
    else:
        graphs = augment_connected(connected_classes(n - 1), verbose=verbose)
    assert len(graphs) == CONNECTED_COUNTS[n], "enumeration count {} != {} for n={}".format(
        len(graphs), CONNECTED_COUNTS[n], n
    )
    if verbose:
        print("n={}: {} connected graphs".format(n, len(graphs)))
    return tuple(graphs)


def enumerate_connected(n, corpus=None, verbose=False):
    """
    Stream one graph per isomorphism class of connected graphs on `n` vertices.

    Parameters
    ----------
    n : int
        Order.
    corpus : str or path or file-like, optional
        graph6 file to draw graphs from instead of the built-in enumeration (required for
        n > 9). Disconnected graphs, other orders and isomorphic duplicates are dropped.
    verbose : bool
        Print progress.
    """
    if corpus is None:
        for G in connected_classes(n, verbose):
            yield G
        return
    seen = set()
    for G in read_graph6_file(corpus):
        if G.n != n or not is_connected(G):
            continue
        label = canonical_form(G)
        if label in seen:
            continue
        seen.add(label)
        yield G
