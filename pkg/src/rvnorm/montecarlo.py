"""Seeded Monte Carlo estimates of E|<X, lambda>|^d."""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .distributions import rng_for
from .errors import BadParameter, MomentDoesNotExist

BLOCK = 1 << 16
MIN_SAMPLES = 1000


def default_seed():
    return int(os.environ.get("RVNORM_SEED", "20240611"))


@dataclass(frozen=True)
class McEstimate:
    mean: float
    stderr: float
    N: int
    seed: int


def _block_stats(spec, lam, d, seed, b, rows):
    # stream 0 is reserved for Distribution.sample, so blocks start at 1
    rng = rng_for(seed, b + 1)
    x = spec._draw(rng, rows * lam.size).reshape(rows, lam.size)
    v = np.abs(x @ lam) ** d
    m = float(v.mean())
    return rows, m, float(np.sum((v - m) ** 2))


def estimate(spec, lam, d, N, seed=None, workers=1):
    """Sample mean of |<X, lambda>|^d over N i.i.d. vectors.

    Samples are generated in fixed blocks keyed by (seed, block index), so the
    result does not depend on ``workers``.
    """
    lam = np.asarray(lam, dtype=float).ravel()
    if d < 1:
        raise BadParameter("d must be >= 1")
    if N < MIN_SAMPLES:
        raise BadParameter(f"need at least {MIN_SAMPLES} samples, got {N}")
    if not spec.moment_exists(d):
        raise MomentDoesNotExist(d, spec.family)
    if seed is None:
        seed = default_seed()
    N = int(N)
    sizes = [BLOCK] * (N // BLOCK) + ([N % BLOCK] if N % BLOCK else [])
    jobs = list(enumerate(sizes))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            stats = list(ex.map(lambda j: _block_stats(spec, lam, d, seed, *j), jobs))
    else:
        stats = [_block_stats(spec, lam, d, seed, b, r) for b, r in jobs]
    # ordered pairwise merge of (count, mean, M2)
    cnt, mean, m2 = 0, 0.0, 0.0
    for c, m, s in stats:
        tot = cnt + c
        delta = m - mean
        mean += delta * c / tot
        m2 += s + delta * delta * cnt * c / tot
        cnt = tot
    var = m2 / (cnt - 1)
    return McEstimate(mean, float(np.sqrt(var / cnt)), cnt, int(seed))
