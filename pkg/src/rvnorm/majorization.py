"""Majorization, doubly stochastic transport and Birkhoff decomposition."""

from dataclasses import dataclass

import numpy as np

from .core_linalg import as_hermitian, eig_hermitian
from .errors import BadParameter, LengthMismatch, MatchingNotFound, NotMajorized

ZERO = 1e-12


def _scale(*vs):
    return max([1.0] + [float(np.max(np.abs(v))) for v in vs if len(v)])


def majorizes(x, y, tol=1e-12):
    """True when y is majorized by x."""
    x = np.sort(np.asarray(x, dtype=float))[::-1]
    y = np.sort(np.asarray(y, dtype=float))[::-1]
    if x.shape != y.shape:
        raise LengthMismatch(f"lengths differ: {x.size} vs {y.size}")
    eps = tol * _scale(x, y) * max(1, x.size)
    px, py = np.cumsum(x), np.cumsum(y)
    return bool(np.all(py[:-1] <= px[:-1] + eps) and abs(px[-1] - py[-1]) <= eps)


def check_doubly_stochastic(d, tol=1e-10):
    d = np.asarray(d, dtype=float)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise BadParameter("doubly stochastic matrix must be square")
    if np.any(d < -tol):
        raise BadParameter("doubly stochastic matrix has negative entries")
    if np.max(np.abs(d.sum(axis=0) - 1)) > tol or np.max(np.abs(d.sum(axis=1) - 1)) > tol:
        raise BadParameter("row or column sums differ from 1")
    return d


def _hlp_sorted_y(x, y):
    """D with y = D x, for y sorted nonincreasing and y majorized by x."""
    n = x.size
    order = np.argsort(-x, kind="stable")
    perm = np.zeros((n, n))
    perm[np.arange(n), order] = 1.0
    xs = x[order]
    if n == 1:
        return perm
    y1 = y[0]
    # smallest k with xs[k] <= y1, so xs[k] <= y1 <= xs[k-1]
    below = np.nonzero(xs <= y1)[0]
    k = int(below[0]) if below.size else n - 1
    if k == 0 or xs[0] == xs[k]:
        t = 1.0
    else:
        t = float(np.clip((y1 - xs[k]) / (xs[0] - xs[k]), 0.0, 1.0))
    T = np.eye(n)
    if k != 0:
        T[[0, k], [0, k]] = t
        T[0, k] = T[k, 0] = 1.0 - t
    tx = T @ xs
    inner = _hlp_sorted_y(tx[1:], y[1:])
    big = np.zeros((n, n))
    big[0, 0] = 1.0
    big[1:, 1:] = inner
    return big @ T @ perm


def hlp_transport(x, y):
    """Doubly stochastic D with D x = y, built from T-transforms."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise LengthMismatch(f"lengths differ: {x.size} vs {y.size}")
    if not majorizes(x, y, tol=1e-10):
        raise NotMajorized("y is not majorized by x")
    n = x.size
    order = np.argsort(-y, kind="stable")
    py = np.zeros((n, n))
    py[np.arange(n), order] = 1.0
    return py.T @ _hlp_sorted_y(x, y[order])


def _perfect_matching(support):
    """Row -> column perfect matching on a boolean support, by augmenting paths."""
    n = support.shape[0]
    match_col = [-1] * n
    adj = [np.nonzero(support[r])[0] for r in range(n)]

    def augment(r, seen):
        for c in adj[r]:
            if not seen[c]:
                seen[c] = True
                if match_col[c] == -1 or augment(match_col[c], seen):
                    match_col[c] = r
                    return True
        return False

    for r in range(n):
        if not augment(r, [False] * n):
            return None
    perm = np.empty(n, dtype=int)
    for c, r in enumerate(match_col):
        perm[r] = c
    return perm


@dataclass(frozen=True)
class BirkhoffDecomposition:
    permutations: tuple   # each a tuple p with P[i, p[i]] = 1
    weights: tuple

    def matrix(self):
        n = len(self.permutations[0])
        out = np.zeros((n, n))
        for p, w in zip(self.permutations, self.weights):
            out[np.arange(n), list(p)] += w
        return out

    def to_dict(self):
        return {"permutations": [list(map(int, p)) for p in self.permutations],
                "weights": [float(w) for w in self.weights]}


def birkhoff_decompose(d, tol=1e-10):
    """Convex combination of permutation matrices equal to D (greedy peeling)."""
    d = check_doubly_stochastic(d, tol)
    n = d.shape[0]
    r = np.where(d > ZERO, d, 0.0)
    perms, weights = [], []
    remaining = 1.0
    rows = np.arange(n)
    while remaining > tol:
        p = _perfect_matching(r > ZERO)
        if p is None:
            raise MatchingNotFound("no perfect matching on the remaining support")
        entries = r[rows, p]
        j = int(np.argmin(entries))
        mu = float(entries[j])
        r[rows, p] -= mu
        r[j, p[j]] = 0.0
        r[r <= ZERO] = 0.0
        perms.append(tuple(int(c) for c in p))
        weights.append(mu)
        remaining -= mu
        if len(perms) > n * n - n + 1:
            raise MatchingNotFound("too many peeling steps; input is not doubly stochastic")
    return BirkhoffDecomposition(tuple(perms), tuple(weights))


def schur_ostrowski_check(f, x, i, j, h=1e-5):
    """(x_i - x_j) (df/dx_i - df/dx_j) by central differences."""
    if i == j:
        raise BadParameter("indices must differ")
    x = np.asarray(x, dtype=float)

    def shifted(k, s):
        e = x.copy()
        e[k] += s
        return f(e)

    di = shifted(i, h) - shifted(i, -h)
    dj = shifted(j, h) - shifted(j, -h)
    return (x[i] - x[j]) * (di - dj) / (2 * h)


def sinkhorn(m, iterations=200, tol=1e-13, max_iterations=100000):
    """Alternate row and column normalization of a positive matrix.

    Runs at least ``iterations`` rounds, then continues until the row sums
    are within ``tol`` of 1 (nearly decomposable inputs converge slowly).
    """
    m = np.array(m, dtype=float)
    for k in range(max_iterations):
        m /= m.sum(axis=1, keepdims=True)
        m /= m.sum(axis=0, keepdims=True)
        if k + 1 >= iterations and np.max(np.abs(m.sum(axis=1) - 1)) <= tol:
            break
    return m


def random_doubly_stochastic(n, rng, iterations=200, sparsity=0.0):
    """Sinkhorn-scaled random positive matrix.

    With ``sparsity`` > 0 the support is a union of about (1 - sparsity) n
    random permutations. Such a support always carries a doubly stochastic
    matrix with the same zero pattern, so the scaling converges.
    """
    m = rng.random((n, n)) + 1e-3
    if sparsity > 0:
        keep = np.zeros((n, n), dtype=bool)
        for _ in range(max(1, round((1 - sparsity) * n))):
            keep[np.arange(n), rng.permutation(n)] = True
        m = m * keep
    return sinkhorn(m, iterations)


def random_majorized_pair(n, rng):
    """(x, y) with y majorized by x: y is a doubly stochastic image of x."""
    x = rng.normal(size=n) * rng.uniform(0.5, 3.0)
    y = random_doubly_stochastic(n, rng) @ x
    return x, y


def eigenvalue_majorization(a, b):
    """Ky Fan: lambda(A + B) is majorized by lambda(A) + lambda(B)."""
    ha, hb = as_hermitian(a), as_hermitian(b)
    la = eig_hermitian(ha).as_array()
    lb = eig_hermitian(hb).as_array()
    lab = eig_hermitian(ha.array + hb.array).as_array()
    return majorizes(la + lb, lab, tol=1e-10)
