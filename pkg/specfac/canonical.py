"""
Canonical labelling of small graphs by partition refinement and individualisation.

The search refines an ordered vertex partition until it is equitable, individualises each
vertex of the first non-singleton cell in turn, and keeps the largest adjacency code among the
discrete leaves. Vertices of a cell that are twins of an already tried vertex are skipped: the
transposition of two twins is an automorphism fixing the partition, so both branches give the
same set of codes.
"""

from specfac.util import CANONICAL_CAP, CapabilityError


class CanonicalLabel(object):
    """Certificate of an unlabelled graph; equal labels iff the graphs are isomorphic."""

    __slots__ = ("bytes", "n")

    def __init__(self, n, code):
        n_bits = n * (n - 1) // 2
        self.n = n
        self.bytes = n.to_bytes(2, "big") + code.to_bytes(max(1, -(-n_bits // 8)), "big")

    def __eq__(self, other):
        if not isinstance(other, CanonicalLabel):
            return NotImplemented
        return self.bytes == other.bytes

    def __lt__(self, other):
        return self.bytes < other.bytes

    def __hash__(self):
        return hash(self.bytes)

    def __repr__(self):
        return "CanonicalLabel({})".format(self.bytes.hex())


def _popcount(x):
    return bin(x).count("1")


def _refine(cells, masks):
    while True:
        cell_masks = []
        for c in cells:
            cm = 0
            for v in c:
                cm |= 1 << v
            cell_masks.append(cm)
        new_cells = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            groups = {}
            for v in c:
                sig = tuple(_popcount(masks[v] & cm) for cm in cell_masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
            else:
                new_cells.append(c)
        cells = new_cells
        if not changed:
            return cells


def _code(order, masks):
    code = 0
    n = len(order)
    for i in range(n):
        mi = masks[order[i]]
        for j in range(i + 1, n):
            code = (code << 1) | ((mi >> order[j]) & 1)
    return code


def canonical_code(n, masks):
    """
    Largest adjacency code over the search leaves.

    Parameters
    ----------
    n : int
        Order of the graph.
    masks : sequence of int
        Neighbourhood bitmasks.

    Returns
    -------
    code : int
        Canonical code (upper triangle bits of the canonical ordering, row by row).
    order : list
        Vertex order attaining it; `order[i]` is the vertex placed at position `i`.
    """
    if n == 0:
        return 0, []
    by_degree = {}
    for v in range(n):
        by_degree.setdefault(_popcount(masks[v]), []).append(v)
    cells = _refine([by_degree[d] for d in sorted(by_degree)], masks)

    best = [-1, None]

    def search(cells):
        target = None
        for k, c in enumerate(cells):
            if len(c) > 1:
                target = k
                break
        if target is None:
            order = [c[0] for c in cells]
            code = _code(order, masks)
            if code > best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[target]
        tried = []
        for v in cell:
            mv = masks[v]
            twin = False
            for u in tried:
                if masks[u] & ~(1 << v) == mv & ~(1 << u):
                    twin = True
                    break
            if twin:
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(_refine(cells[:target] + [[v], rest] + cells[target + 1 :], masks))

    search(cells)
    return best[0], best[1]


def canonical_form(G, cap=CANONICAL_CAP):
    """
    Canonical label of `G`, invariant under relabelling.

    Parameters
    ----------
    G : :py:class:`~specfac.graph.Graph`
    cap : int
        Largest supported order.
    """
    if G.n > cap:
        raise CapabilityError("canonical_form supports n <= {}, got {}".format(cap, G.n))
    code, _ = canonical_code(G.n, G.masks)
    return CanonicalLabel(G.n, max(code, 0))


def canonical_order(G, cap=CANONICAL_CAP):
    """Vertex order realising the canonical label."""
    if G.n > cap:
        raise CapabilityError("canonical_form supports n <= {}, got {}".format(cap, G.n))
    return canonical_code(G.n, G.masks)[1]


def are_isomorphic(G, H, cap=CANONICAL_CAP):
    if G.n != H.n or G.m != H.m or sorted(G.degrees()) != sorted(H.degrees()):
        return False
    return canonical_form(G, cap) == canonical_form(H, cap)
