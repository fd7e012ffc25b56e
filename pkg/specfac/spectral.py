import numpy as np
from scipy import linalg
from specfac.util import (
    MAX_DIM,
    TOL_EIG,
    TOL_EQUITABLE,
    TOL_RESIDUAL,
    CapabilityError,
    NotEquitableError,
    check_alpha,
)


def alpha_matrix(G, alpha):
    """
    A_α(G) = αD(G) + (1-α)A(G).

    Parameters
    ----------
    G : :py:class:`~specfac.graph.Graph`
    alpha : float
        In [0, 1). α=0 gives the adjacency matrix, α=1/2 half the signless Laplacian.

    Returns
    -------
    M : :py:class:`~numpy.ndarray`
        Symmetric (n, n) float64 matrix.
    """
    alpha = check_alpha(alpha)
    M = (1 - alpha) * G.adjacency_matrix()
    M[np.diag_indices(G.n)] = alpha * np.array(G.degrees(), dtype=np.float64)
    return M


def signless_laplacian(G):
    """Q(G) = D(G) + A(G)."""
    M = G.adjacency_matrix()
    M[np.diag_indices(G.n)] = np.array(G.degrees(), dtype=np.float64)
    return M


def _check_matrix(M, max_dim=MAX_DIM):
    M = np.asarray(M, dtype=np.float64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("Expected a square matrix, got shape {}".format(M.shape))
    if M.shape[0] < 1:
        raise ValueError("Empty matrix.")
    if M.shape[0] > max_dim:
        raise CapabilityError("Dense eigensolver limited to dim <= {}".format(max_dim))
    if not np.all(np.isfinite(M)):
        raise ValueError("Matrix has non-finite entries.")
    if not np.array_equal(M, M.T):
        raise ValueError("Matrix is not symmetric.")
    return M


def spectrum(M, max_dim=MAX_DIM):
    """
    All eigenvalues in ascending order.

    Uses the LAPACK "ev" driver: Householder reduction to tridiagonal form followed by implicit
    QL/QR, deterministic for a given input.
    """
    M = _check_matrix(M, max_dim)
    return linalg.eigh(M, eigvals_only=True, driver="ev")


def spectral_radius(M, max_dim=MAX_DIM):
    """Largest eigenvalue of the symmetric matrix `M`."""
    return float(spectrum(M, max_dim)[-1])


def eigen_self_check(M, tol=TOL_RESIDUAL):
    """
    Consistency of the eigensolver on `M`.

    Returns
    -------
    trace_err : float
        |sum of eigenvalues - trace|.
    residual : float
        max over eigenpairs of ||Mv - λv||.
    ok : bool
        trace_err <= tol·n and residual <= tol·max(1, ||M||).
    """
    M = _check_matrix(M)
    w, V = linalg.eigh(M, driver="ev")
    trace_err = abs(float(np.sum(w)) - float(np.trace(M)))
    residual = float(np.max(np.linalg.norm(M @ V - V * w, axis=0)))
    scale = max(1.0, float(np.linalg.norm(M, ord=np.inf)))
    ok = trace_err <= tol * M.shape[0] and residual <= tol * scale
    return trace_err, residual, ok


def interlace_check(M, keep, tol=TOL_EIG):
    """
    Cauchy interlacing between `M` and its principal submatrix on the indices `keep`.

    With eigenvalues in decreasing order λ_1 >= ... >= λ_n of M and η_1 >= ... >= η_m of the
    submatrix, checks λ_i >= η_i >= λ_{i+n-m} for every i, up to `tol`·max(1, ||M||).
    """
    M = _check_matrix(M)
    keep = sorted(set(int(k) for k in keep))
    if not keep:
        raise ValueError("Index set `keep` must be non-empty.")
    n = M.shape[0]
    if keep[0] < 0 or keep[-1] >= n:
        raise ValueError("Index set `keep` out of range for dim {}".format(n))
    B = M[np.ix_(keep, keep)]
    lam = spectrum(M)[::-1]
    eta = spectrum(B)[::-1]
    m = len(keep)
    slack = tol * max(1.0, float(np.linalg.norm(M, ord=np.inf)))
    for i in range(m):
        if eta[i] > lam[i] + slack or eta[i] < lam[i + n - m] - slack:
            return False
    return True


class VertexPartition(object):
    """
    Ordered blocks of vertices. Validated against an order with :py:meth:`check`.
    """

    __slots__ = ("blocks",)

    def __init__(self, blocks):
        self.blocks = tuple(tuple(sorted(int(v) for v in b)) for b in blocks)
        if any(len(b) == 0 for b in self.blocks):
            raise ValueError("Partition blocks must be non-empty.")

    @property
    def sizes(self):
        return [len(b) for b in self.blocks]

    def check(self, n):
        members = [v for b in self.blocks for v in b]
        if len(members) != len(set(members)):
            raise ValueError("Partition blocks overlap.")
        if sorted(members) != list(range(n)):
            raise ValueError("Partition does not cover vertices 0..{}".format(n - 1))
        return self

    def __len__(self):
        return len(self.blocks)

    def __repr__(self):
        return "VertexPartition(sizes={})".format(self.sizes)


def family_partition(s, n1, i):
    """
    Natural partition of K_s ∨ (K_{n1} ∪ i·K1) as built by
    :py:func:`~specfac.graph.construct_family`: independent block, clique block, hub block.
    Empty blocks are dropped.
    """
    blocks = [
        range(s + n1, s + n1 + i),
        range(s, s + n1),
        range(0, s),
    ]
    return VertexPartition([b for b in blocks if len(b) > 0])


def one_block_partition(n):
    return VertexPartition([range(n)])


def singleton_partition(n):
    return VertexPartition([[v] for v in range(n)])


class QuotientMatrix(object):
    """
    Matrix of average block row sums q_ij of a symmetric matrix under a vertex partition.

    Attributes
    ----------
    entries : :py:class:`~numpy.ndarray`
        (k, k) quotient.
    sizes : list
        Block sizes.
    equitable : bool
        Whether every vertex of block i has row sum q_ij into block j.
    max_deviation : float
        Largest |row sum - q_ij| over vertices, zero for an exactly equitable partition.
    """

    def __init__(self, entries, sizes, equitable, max_deviation):
        self.entries = np.asarray(entries, dtype=np.float64)
        self.sizes = list(sizes)
        self.equitable = bool(equitable)
        self.max_deviation = float(max_deviation)

    @property
    def dim(self):
        return self.entries.shape[0]

    def symmetrized(self):
        """
        D^(1/2) Q D^(-1/2) with D the block sizes. Since n_i q_ij = n_j q_ji for a symmetric
        matrix, the result is symmetric and similar to Q.
        """
        root = np.sqrt(np.array(self.sizes, dtype=np.float64))
        S = self.entries * root[:, np.newaxis] / root[np.newaxis, :]
        return (S + S.T) / 2

    def eigenvalues(self):
        return spectrum(self.symmetrized())

    def spectral_radius(self):
        return float(self.eigenvalues()[-1])


def quotient_of_matrix(M, P, tol=TOL_EQUITABLE):
    """
    Quotient of a symmetric matrix under the partition `P`.
    """
    M = _check_matrix(M)
    P.check(M.shape[0])
    # row sums of every vertex into every block
    R = np.stack([M[:, list(b)].sum(axis=1) for b in P.blocks], axis=1)
    k = len(P)
    Q = np.zeros((k, k))
    deviation = 0.0
    for a, block in enumerate(P.blocks):
        rows = R[list(block)]
        Q[a] = rows.mean(axis=0)
        deviation = max(deviation, float(np.max(np.abs(rows - Q[a]))))
    return QuotientMatrix(Q, P.sizes, deviation <= tol, deviation)


def quotient_matrix(G, alpha, P, tol=TOL_EQUITABLE):
    """
    Quotient matrix of A_α(G) under the vertex partition `P`.

    Parameters
    ----------
    G : :py:class:`~specfac.graph.Graph`
    alpha : float
        In [0, 1).
    P : :py:class:`VertexPartition`
        Must partition the vertices of `G`.
    tol : float
        Equitability tolerance on per-vertex row sums.
    """
    return quotient_of_matrix(alpha_matrix(G, alpha), P, tol=tol)


def quotient_radius_check(G, alpha, P, tol=TOL_EIG):
    """
    Compare the spectral radius of the quotient with that of A_α(G).

    Returns
    -------
    rho_quotient : float
    rho_full : float
    equal : bool
        |rho_quotient - rho_full| <= tol.

    Raises
    ------
    NotEquitableError
        If `P` is not equitable for A_α(G).
    """
    Q = quotient_matrix(G, alpha, P)
    if not Q.equitable:
        raise NotEquitableError(
            "Partition not equitable (max row-sum deviation {:.3g})".format(Q.max_deviation)
        )
    rho_q = Q.spectral_radius()
    rho = spectral_radius(alpha_matrix(G, alpha))
    return rho_q, rho, abs(rho_q - rho) <= tol
