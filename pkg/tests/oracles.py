"""
Independent reference computations used only by the tests.

Nothing here calls into LAPACK's symmetric driver or into coronaqec, so it
can check both.
"""

import itertools
import math

import networkx as nx
import numpy as np


def jacobi_eigh(M, tol=1e-14, max_sweeps=100):
    """Cyclic Jacobi rotations. Returns eigenvalues descending and eigenvectors."""
    A = np.array(M, dtype=float)
    n = len(A)
    V = np.eye(n)
    scale = max(1.0, float(np.linalg.norm(A)))
    for _ in range(max_sweeps):
        off = math.sqrt(float(np.sum(np.triu(A, 1) ** 2)))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(A[p, q]) <= 1e-18 * scale:
                    continue
                theta = (A[q, q] - A[p, p]) / (2 * A[p, q])
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1))
                c = 1 / math.sqrt(t * t + 1)
                s = t * c
                for X in (A, V):
                    xp, xq = X[:, p].copy(), X[:, q].copy()
                    X[:, p], X[:, q] = c * xp - s * xq, s * xp + c * xq
                ap, aq = A[p, :].copy(), A[q, :].copy()
                A[p, :], A[q, :] = c * ap - s * aq, s * ap + c * aq
    w = np.diag(A)
    order = np.argsort(-w)
    return w[order], V[:, order]


def qec_by_projection(D):
    """QEC as the largest eigenvalue of P D P - s J/n with P = I - J/n.

    P D P kills 1; subtracting s J/n with s larger than ||D|| pushes the 1
    direction below everything else, so the top eigenvalue is the maximum
    over 1-perp.
    """
    D = np.asarray(D, dtype=float)
    n = len(D)
    J = np.ones((n, n)) / n
    P = np.eye(n) - J
    s = 1.0 + 2.0 * float(np.abs(D).sum())
    w, _ = jacobi_eigh(P @ D @ P - s * J)
    return float(w[0])


def bfs_distances_nx(G):
    g = nx.Graph()
    g.add_nodes_from(range(G.vertex_count))
    g.add_edges_from(G.edges)
    D = np.zeros((G.vertex_count, G.vertex_count))
    for s, lengths in nx.all_pairs_shortest_path_length(g):
        for t, d in lengths.items():
            D[s, t] = d
    return D


def isomorphic_brute_force(A, B):
    """Adjacency isomorphism by trying every permutation."""
    A, B = np.asarray(A), np.asarray(B)
    n = len(A)
    if B.shape != A.shape:
        return False
    for perm in itertools.permutations(range(n)):
        if np.array_equal(A[np.ix_(perm, perm)], B):
            return True
    return False


def kernel_meets_ones_perp(A, theta, tol=1e-7):
    """Brute force: null space of A - theta I projected against 1."""
    A = np.asarray(A, dtype=float)
    n = len(A)
    w, V = jacobi_eigh(A)
    E = V[:, np.abs(w - theta) <= tol]
    if E.shape[1] == 0:
        raise ValueError("theta not an eigenvalue")
    c = E.T @ np.ones(n)
    # intersection dimension = dim E - rank(c)
    return E.shape[1] - (1 if np.linalg.norm(c) > tol else 0) > 0


def psi_by_solve(A, lam):
    """psi_H(lam) evaluated with an explicit inverse of A + 2 + lam."""
    A = np.asarray(A, dtype=float)
    n = len(A)
    inv = np.linalg.inv(A + (2 + lam) * np.eye(n))
    return lam / (1 + lam * np.ones(n) @ inv @ np.ones(n))
