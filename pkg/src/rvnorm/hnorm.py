"""Random vector norms of Hermitian matrices, by several independent routes."""

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import montecarlo
from .core_linalg import as_hermitian, char_poly, eig_hermitian, frobenius, power_traces
from .distributions import Gamma, Normal, Pareto, SymmetricStable
from .errors import BadParameter, MomentDoesNotExist, NegativeInterior, OddDegree
from .partitions import MAX_DEGREE, enumerate_partitions, y_coeff
from .symfun import TruncatedSeries, bell_complete, kummer_1f1

METHODS = ("partition_sum", "bell", "mgf_coeff", "monte_carlo", "closed_form")
DEFAULT_SAMPLES = 200_000


@dataclass(frozen=True)
class NormResult:
    value: float
    d: float
    method: str
    stderr: float = None
    n: int = None

    def to_dict(self):
        return asdict(self)


class Unsupported:
    """Returned by norm_closed_form when no closed form applies."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __bool__(self):
        return False

    def __repr__(self):
        return "UNSUPPORTED"


UNSUPPORTED = Unsupported()


def is_even_int(d):
    return float(d).is_integer() and int(d) % 2 == 0 and int(d) >= 2


def even_degree(d, limit=MAX_DEGREE):
    if not float(d).is_integer():
        raise OddDegree(f"d must be an even integer, got {d}")
    d = int(d)
    if d % 2 or d < 2:
        raise OddDegree(f"d must be an even integer >= 2, got {d}")
    if d > limit:
        raise BadParameter(f"d must be <= {limit}, got {d}")
    return d


def root(interior, d, scale):
    """interior^(1/d) with the negativity guard."""
    if interior < -1e-9 * max(1.0, scale):
        raise NegativeInterior(f"d-th power came out negative: {interior!r}")
    return max(float(interior), 0.0) ** (1.0 / d)


def float_cumulants(spec, d):
    return [float(k) for k in spec.moments(d).cumulants]


def partition_sum_interior(p, kappa, d):
    """sum_{pi |- d} y_pi kappa_pi p_pi and the sum of absolute terms."""
    total, scale = 0.0, 0.0
    for part in enumerate_partitions(d):
        term = float(y_coeff(part))
        for k in part.parts:
            term *= kappa[k - 1] * p[k - 1]
        total += term
        scale += abs(term)
    return total, scale


def norm_partition_sum(a, spec, d):
    h = as_hermitian(a)
    d = even_degree(d)
    kappa = float_cumulants(spec, d)
    p = power_traces(h, d)
    total, scale = partition_sum_interior(p, kappa, d)
    return NormResult(root(total, d, scale), d, "partition_sum", n=h.n)


def norm_bell(a, spec, d):
    h = as_hermitian(a)
    d = even_degree(d)
    kappa = float_cumulants(spec, d)
    p = power_traces(h, d)
    xs = [kappa[k] * p[k] for k in range(d)]
    val = bell_complete(d, xs)
    scale = bell_complete(d, [abs(x) for x in xs])
    return NormResult(root(val, d, scale), d, "bell", n=h.n)


def norm_mgf_coeff(a, spec, d):
    h = as_hermitian(a)
    d = even_degree(d)
    m = TruncatedSeries([float(c) for c in spec.mgf_series(d).c])
    lam = eig_hermitian(h).eigenvalues
    prod = TruncatedSeries([1.0], d)
    for x in lam:
        prod = prod * m.scaled(x)
    val = math.factorial(d) * prod[d]
    absprod = TruncatedSeries([1.0], d)
    mabs = TruncatedSeries([abs(c) for c in m.c])
    for x in lam:
        absprod = absprod * mabs.scaled(abs(x))
    return NormResult(root(val, d, math.factorial(d) * absprod[d]), d, "mgf_coeff", n=h.n)


def norm_monte_carlo(a, spec, d, samples=DEFAULT_SAMPLES, seed=None, workers=1):
    h = as_hermitian(a)
    lam = eig_hermitian(h).as_array()
    est = montecarlo.estimate(spec, lam, d, samples, seed, workers)
    value = est.mean ** (1.0 / d)
    se = est.stderr * est.mean ** (1.0 / d - 1.0) / d if est.mean > 0 else 0.0
    return NormResult(value, d, "monte_carlo", stderr=se, n=h.n)


def _gamma_closed(h, spec, d):
    # d! beta^d [t^d] det(I - tA)^(-alpha), det(I - tA) = t^n p_A(1/t)
    c = char_poly(h)
    det = TruncatedSeries(list(c[:d + 1]), d)
    alpha = float(spec.alpha)
    ser = det.recip() if alpha == 1 else det.pow(-alpha)
    val = math.factorial(d) * float(spec.beta) ** d * ser[d]
    return root(val, d, abs(val))


def _pareto_closed(h, spec, d):
    # sum over k_1 + ... + k_n = d of multinomial(d; k) prod_i mu_{k_i} lambda_i^{k_i}
    mu = [float(m) for m in spec.moments(d).moments]
    lam = eig_hermitian(h).eigenvalues
    coeff = np.zeros(d + 1)
    coeff[0] = 1.0
    for x in lam:
        nxt = np.zeros(d + 1)
        for j in range(d + 1):
            if coeff[j] == 0:
                continue
            for k in range(d + 1 - j):
                nxt[j + k] += coeff[j] * math.comb(j + k, k) * mu[k] * x ** k
        coeff = nxt
    return root(coeff[d], d, abs(coeff[d]))


def norm_closed_form(a, spec, d):
    """Closed-form value, or UNSUPPORTED when none applies."""
    h = as_hermitian(a)
    if isinstance(spec, Normal):
        fro = frobenius(h)
        if fro == 0:
            return NormResult(0.0, d, "closed_form", n=h.n)
        mu, s = float(spec.mu), float(spec.sigma)
        tr = float(np.trace(h.array).real)
        z = -(mu * tr) ** 2 / (2 * s * s * fro * fro)
        inner = math.exp(math.lgamma((d + 1) / 2)) / math.sqrt(math.pi) * kummer_1f1(-d / 2, 0.5, z)
        return NormResult(math.sqrt(2) * s * fro * inner ** (1.0 / d), d, "closed_form", n=h.n)
    if isinstance(spec, SymmetricStable):
        if not 1 <= d < spec.alpha:
            raise MomentDoesNotExist(d, spec.family)
        a_ = float(spec.alpha)
        lam = eig_hermitian(h).as_array()
        schatten = float(np.sum(np.abs(lam) ** a_)) ** (1.0 / a_)
        val = float(spec.gamma) * spec.abs_moment_constant(d) ** (1.0 / d) * schatten
        return NormResult(val, d, "closed_form", n=h.n)
    if isinstance(spec, Pareto):
        if not is_even_int(d):
            return UNSUPPORTED
        if not d < spec.alpha:
            raise MomentDoesNotExist(int(d), spec.family)
        return NormResult(_pareto_closed(h, spec, int(d)), int(d), "closed_form", n=h.n)
    if isinstance(spec, Gamma):
        if not is_even_int(d) or int(d) > MAX_DEGREE:
            return UNSUPPORTED
        return NormResult(_gamma_closed(h, spec, int(d)), int(d), "closed_form", n=h.n)
    return UNSUPPORTED


def norm_auto(a, spec, d, samples=DEFAULT_SAMPLES, seed=None):
    res = norm_closed_form(a, spec, d)
    if res is not UNSUPPORTED:
        return res
    if is_even_int(d) and int(d) <= MAX_DEGREE:
        return norm_bell(a, spec, int(d))
    return norm_monte_carlo(a, spec, d, samples, seed)


def norm(a, spec, d, method="auto", samples=DEFAULT_SAMPLES, seed=None):
    """Dispatch by method name: auto, bell, partition, mgf, mc, closed."""
    if method == "auto":
        return norm_auto(a, spec, d, samples, seed)
    if method in ("bell",):
        return norm_bell(a, spec, d)
    if method in ("partition", "partition_sum"):
        return norm_partition_sum(a, spec, d)
    if method in ("mgf", "mgf_coeff"):
        return norm_mgf_coeff(a, spec, d)
    if method in ("mc", "monte_carlo"):
        return norm_monte_carlo(a, spec, d, samples, seed)
    if method in ("closed", "closed_form"):
        res = norm_closed_form(a, spec, d)
        if res is UNSUPPORTED:
            raise BadParameter(f"no closed form for {spec.family} at d={d}")
        return res
    raise BadParameter(f"unknown method {method!r}")


def norm_value(a, spec, d, samples=DEFAULT_SAMPLES, seed=None):
    """Norm value by the automatic route (deterministic whenever possible)."""
    return norm_auto(a, spec, d, samples, seed).value
