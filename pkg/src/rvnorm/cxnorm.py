"""Norms on all square complex matrices obtained by complexification."""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate

from . import hnorm
from .core_linalg import HermitianMatrix, all_word_traces, as_matrix, frobenius
from .errors import BadParameter, DegreeTooLarge, OddDegree
from .hnorm import NormResult, float_cumulants, root
from .partitions import Partition, enumerate_partitions, star_placements, y_coeff

MAX_TRACE_DEGREE = 12


def central_binomial(d):
    """C(d, d/2) for real d, as Gamma(d+1) / Gamma(d/2+1)^2."""
    if float(d).is_integer() and int(d) % 2 == 0:
        return math.comb(int(d), int(d) // 2)
    return math.exp(math.lgamma(d + 1) - 2 * math.lgamma(d / 2 + 1))


@dataclass(frozen=True)
class TraceMonomialValue:
    partition: Partition
    value: complex

    @property
    def real(self):
        return self.value.real


def _check_degree(d):
    if d % 2:
        raise OddDegree(f"trace polynomials need even d, got {d}")
    if d > MAX_TRACE_DEGREE:
        raise DegreeTooLarge(f"d must be <= {MAX_TRACE_DEGREE}, got {d}")


@lru_cache(maxsize=None)
def _placements(parts):
    return star_placements(Partition(parts))


def _t_pi(traces, p):
    total = 0j
    for words in _placements(p.parts):
        term = 1 + 0j
        for w in words:
            term *= traces[w]
        total += term
    return total / math.comb(p.d, p.d // 2)


def t_pi(z, p):
    """Mean over star placements of prod_j tr(w_j(Z))."""
    _check_degree(p.d)
    traces = all_word_traces(z, max(p.parts))
    return TraceMonomialValue(p, _t_pi(traces, p))


def trace_poly_interior(z, spec, d):
    kappa = float_cumulants(spec, d)
    traces = all_word_traces(z, d)
    total, scale = 0.0, 0.0
    for p in enumerate_partitions(d):
        coef = float(y_coeff(p))
        for k in p.parts:
            coef *= kappa[k - 1]
        if coef == 0:
            continue
        term = coef * _t_pi(traces, p).real
        total += term
        scale += abs(term)
    return total, scale


def cnorm_trace_poly(z, spec, d):
    """sum_{pi |- d} y_pi kappa_pi T_pi(Z), to the power 1/d."""
    zm = as_matrix(z)
    d = hnorm.even_degree(d)
    _check_degree(d)
    total, scale = trace_poly_interior(zm, spec, d)
    return NormResult(root(total, d, scale), d, "trace_poly", n=zm.n)


def default_nodes(d):
    return int(4 * math.ceil(d) + 16)


def cnorm_quadrature(z, spec, d, nodes=None, samples=hnorm.DEFAULT_SAMPLES, seed=None):
    """Trapezoid rule on t -> ||e^{it} Z + e^{-it} Z*||^d over one period.

    Each node is evaluated deterministically when a closed form or the Bell
    route applies; otherwise by Monte Carlo with a common seed.
    """
    zm = as_matrix(z)
    a = zm.array
    if nodes is None:
        nodes = default_nodes(d)
    acc = []
    stochastic = False
    for k in range(nodes):
        t = 2 * math.pi * k / nodes
        e = complex(math.cos(t), math.sin(t))
        h = HermitianMatrix(e * a + np.conj(e) * a.conj().T)
        res = hnorm.norm_auto(h, spec, d, samples, seed)
        stochastic |= res.method == "monte_carlo"
        acc.append(res.value ** d)
    interior = math.fsum(acc) / nodes / central_binomial(d)
    method = "quadrature_mc" if stochastic else "quadrature"
    return NormResult(root(interior, d, interior), d, method, n=zm.n)


def cnorm_adaptive(z, spec, d, epsrel=1e-11):
    """Adaptive Gauss-Kronrod on half a period (the integrand has period pi).

    For non-even d the integrand has kinks where an eigenvalue of
    e^{it} Z + e^{-it} Z* crosses zero, so the trapezoid rule converges only
    algebraically there. Requires a deterministic norm for the law.
    """
    zm = as_matrix(z)
    a = zm.array

    def f(t):
        e = complex(math.cos(t), math.sin(t))
        h = HermitianMatrix(e * a + np.conj(e) * a.conj().T)
        res = hnorm.norm_closed_form(h, spec, d)
        if res is hnorm.UNSUPPORTED:
            raise BadParameter(f"no deterministic norm for {spec.family} at d={d}")
        return res.value ** d

    total, _ = integrate.quad(f, 0.0, math.pi, epsabs=0.0, epsrel=epsrel, limit=500)
    interior = total / math.pi / central_binomial(d)
    return NormResult(root(interior, d, interior), d, "adaptive_quadrature", n=zm.n)


def _has_closed_form(spec, d):
    return hnorm.norm_closed_form(np.zeros((1, 1)), spec, d) is not hnorm.UNSUPPORTED


def cnorm(z, spec, d, method="auto", nodes=None, samples=hnorm.DEFAULT_SAMPLES, seed=None):
    """Dispatch. Under auto: trace polynomial for even d <= 8, adaptive
    quadrature for other d when the law has a closed form, else trapezoid."""
    if method == "auto":
        if hnorm.is_even_int(d) and d <= 8:
            method = "trace"
        elif not hnorm.is_even_int(d) and _has_closed_form(spec, d):
            method = "adaptive"
        else:
            method = "quad"
    if method in ("trace", "trace_poly"):
        return cnorm_trace_poly(z, spec, d)
    if method == "adaptive":
        return cnorm_adaptive(z, spec, d)
    return cnorm_quadrature(z, spec, d, nodes, samples, seed)


def cnorm_value(z, spec, d):
    return cnorm(z, spec, d).value


def cnorm_d2(z, spec):
    """d = 2 shortcut: sigma^2 ||Z||_F^2 + mu^2 |tr Z|^2."""
    zm = as_matrix(z)
    mu, var = spec.mean, spec.variance
    return math.sqrt(var * frobenius(zm) ** 2 + mu * mu * abs(np.trace(zm.array)) ** 2)
