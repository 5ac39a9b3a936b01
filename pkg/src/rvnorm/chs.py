"""Norms built on complete homogeneous symmetric polynomials."""

import math

import numpy as np

from . import hnorm
from .core_linalg import as_hermitian, as_matrix, char_poly, eig_hermitian, power_traces
from .cxnorm import MAX_TRACE_DEGREE
from .distributions import Gamma
from .errors import DegreeTooLarge
from .partitions import enumerate_partitions
from .symfun import BivariateSeries, TruncatedSeries, chs, chs_from_power_sums, chs_sequence


def chs_spec(d):
    """Gamma(1, (d!)^(-1/d)): its degree-d norm is h_d of the eigenvalues, to the 1/d."""
    return Gamma(1, math.factorial(int(d)) ** (-1.0 / d))


def _root(v, d):
    return hnorm.root(v, d, abs(v))


def chs_power_charpoly(a, d):
    """h_d(lambda(A)) as [x^d] of 1 / (x^n p_A(1/x))."""
    h = as_hermitian(a)
    d = hnorm.even_degree(d)
    c = char_poly(h)
    return TruncatedSeries(list(c[:d + 1]), d).recip()[d]


def chs_norm_charpoly(a, d):
    return _root(chs_power_charpoly(a, d), d)


def chs_norm_recursive(a, d):
    """h_k = (1/k) sum_i h_{k-i} tr(A^i)."""
    h = as_hermitian(a)
    d = hnorm.even_degree(d)
    return _root(chs_from_power_sums(power_traces(h, d), d)[d], d)


def chs_norm_eigen(a, d):
    d = hnorm.even_degree(d)
    return _root(chs(d, eig_hermitian(a).eigenvalues), d)


def pencil_det_series(z, D):
    """det(I - zZ - wZ*) as a bivariate series truncated at total degree D.

    Faddeev-LeVerrier on the pencil P = zZ + wZ*, with matrix coefficients
    stored per monomial: M_k = P M_{k-1} + c_{k-1} I, c_k = -tr(P M_k) / k,
    and det(I - P) = sum_k c_k.
    """
    zm = as_matrix(z)
    n = zm.n
    Z = zm.array
    Zs = Z.conj().T
    eye = np.eye(n, dtype=complex)
    jj, kk = np.indices((D + 1, D + 1))
    live = (jj + kk) <= D

    def pencil_times(m):
        out = np.zeros_like(m)
        out[1:, :] += np.einsum("ab,jkbc->jkac", Z, m[:-1, :])
        out[:, 1:] += np.einsum("ab,jkbc->jkac", Zs, m[:, :-1])
        out[~live] = 0
        return out

    c = [BivariateSeries.constant(1.0, D)]
    m = np.zeros((D + 1, D + 1, n, n), dtype=complex)
    for k in range(1, n + 1):
        m = pencil_times(m) + c[-1].c[:, :, None, None] * eye
        pm = pencil_times(m)
        c.append(BivariateSeries(-np.trace(pm, axis1=2, axis2=3) / k))
    total = c[0]
    for ck in c[1:]:
        total = total + ck
    return total


def chs_cpower_det_series(z, d):
    """C(d, d/2) |||Z|||_d^d = [z^{d/2} w^{d/2}] det(I - zZ - wZ*)^(-1)."""
    d = hnorm.even_degree(d)
    if d > MAX_TRACE_DEGREE:
        raise DegreeTooLarge(f"d must be <= {MAX_TRACE_DEGREE}, got {d}")
    return pencil_det_series(z, d).recip().coeff(d // 2, d // 2)


def chs_cnorm_det_series(z, d):
    v = chs_cpower_det_series(z, d)
    return _root(v.real / math.comb(int(d), int(d) // 2), d)


def chs_cpower_geometric(z, d):
    """Same coefficient from the geometric series sum_k (1 - det(I - P))^k."""
    d = hnorm.even_degree(d)
    det = pencil_det_series(z, d)
    u = 1.0 - det
    acc = BivariateSeries.constant(1.0, d)
    term = BivariateSeries.constant(1.0, d)
    for _ in range(d):
        term = term * u
        acc = acc + term
    return acc.coeff(d // 2, d // 2)


def hunter_coefficient(p, alpha):
    """c_pi = alpha! / ((alpha - r)! prod m_i!)."""
    r = p.length
    if r > alpha:
        return 0
    return math.factorial(alpha) // (math.factorial(alpha - r)
                                     * math.prod(math.factorial(m) for m in p.multiplicities.values()))


def generalized_hunter(x, d, alpha=1):
    """H_{d,alpha}(x) = sum over pi |- d with at most alpha parts of c_pi h_pi(x)."""
    h = chs_sequence(d, x)
    total = 0.0
    for p in enumerate_partitions(d):
        c = hunter_coefficient(p, alpha)
        if c:
            total += c * math.prod(h[k] for k in p.parts)
    return total


def generalized_hunter_recursive(x, d, alpha=1):
    """H_{d,alpha} = sum_i h_i H_{d-i,alpha-1}, with H_{d,0} = [d == 0]."""
    h = chs_sequence(d, x)
    row = [1.0] + [0.0] * d
    for _ in range(alpha):
        row = [sum(h[i] * row[k - i] for i in range(k + 1)) for k in range(d + 1)]
    return row[d]


def hunter_lower_constant(d):
    """1 / (2^{d/2} (d/2)!), the minimum of h_d on the unit sphere."""
    return 1.0 / (2 ** (d // 2) * math.factorial(d // 2))


def baston_gamma(p, n):
    """gamma_p = n^{-p} (C(n+2p-1, 2p) / n^p - 1/(2^p p!))."""
    return (math.comb(n + 2 * p - 1, 2 * p) / n ** p - 1.0 / (2 ** p * math.factorial(p))) / n ** p


def baston_lower(x, p):
    x = np.asarray(x, dtype=float)
    return (float(x @ x) ** p / (2 ** p * math.factorial(p))
            + baston_gamma(p, x.size) * float(np.sum(x)) ** (2 * p))


def equivalence_bounds(a, d):
    """(lower, value, upper) with the operator norm sandwich for the CHS norm."""
    h = as_hermitian(a)
    d = hnorm.even_degree(d)
    lam = eig_hermitian(h).as_array()
    op = float(np.max(np.abs(lam)))
    value = chs_norm_charpoly(h, d)
    lower = hunter_lower_constant(d) ** (1.0 / d) * op
    upper = math.comb(h.n + d - 1, d) ** (1.0 / d) * op
    return lower, value, upper


def parallelogram_defect(spec, d, a, b):
    """||A+B||^2 + ||A-B||^2 - 2(||A||^2 + ||B||^2); spec None means the CHS norm."""
    ha, hb = as_hermitian(a), as_hermitian(b)
    if spec is None:
        f = lambda m: chs_norm_charpoly(m, d)
    else:
        f = lambda m: hnorm.norm_value(m, spec, d)
    s = ha.array + hb.array
    t = ha.array - hb.array
    return f(s) ** 2 + f(t) ** 2 - 2 * (f(ha) ** 2 + f(hb) ** 2)
