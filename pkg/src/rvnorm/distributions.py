"""Distribution families: moments, cumulants, absolute moments, MGF series
and seeded sampling."""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy import integrate

from .errors import BadParameter, MomentDoesNotExist
from .symfun import TruncatedSeries, kummer_1f1


def _is_exact(*xs):
    return all(isinstance(x, (int, Fraction)) and not isinstance(x, bool) for x in xs)


def _div(a, b):
    if _is_exact(a, b):
        return Fraction(a) / Fraction(b)
    return a / b


def rng_for(seed, stream=0):
    """Counter-based generator keyed by (seed, stream)."""
    ss = np.random.SeedSequence([int(seed) & 0xFFFFFFFFFFFFFFFF, int(stream)])
    return np.random.Generator(np.random.Philox(ss))


def moments_from_cumulants(kappa, D):
    """mu_0..mu_D from kappa_1..kappa_D by mu_r = sum_l C(r-1, l) mu_l kappa_{r-l}."""
    mu = [1]
    for r in range(1, D + 1):
        mu.append(sum(math.comb(r - 1, l) * mu[l] * kappa[r - l - 1] for l in range(r)))
    return mu


def cumulants_from_moments(mu, D):
    """kappa_1..kappa_D by inverting the same recursion."""
    kappa = []
    for r in range(1, D + 1):
        s = sum(math.comb(r - 1, l) * mu[l] * kappa[r - l - 1] for l in range(1, r))
        kappa.append(mu[r] - s)
    return kappa


@dataclass(frozen=True)
class MomentTable:
    order: int
    moments: tuple      # mu_0 .. mu_D
    cumulants: tuple    # kappa_1 .. kappa_D
    available: tuple    # availability of mu_0 .. mu_D

    def kappa(self, r):
        return self.cumulants[r - 1]

    def mu(self, k):
        return self.moments[k]


class Distribution:
    """Base class for a one-dimensional law with i.i.d. coordinates."""

    family = ""
    # integer moments of order k exist for k < max_order
    max_order = math.inf

    def params(self):
        return {}

    def moment_exists(self, k):
        return k < self.max_order

    # subclasses provide one of these two
    def _raw_moments(self, D):
        return None

    def _cumulants(self, D):
        return None

    def moments(self, D):
        if D < 1:
            raise BadParameter("order must be >= 1")
        for k in range(1, D + 1):
            if not self.moment_exists(k):
                raise MomentDoesNotExist(k, self.family)
        mu = self._raw_moments(D)
        if mu is not None:
            kappa = cumulants_from_moments(mu, D)
        else:
            kappa = self._cumulants(D)
            mu = moments_from_cumulants(kappa, D)
        return MomentTable(D, tuple(mu), tuple(kappa), (True,) * (D + 1))

    def cumulants(self, D):
        return self.moments(D).cumulants

    def mgf_series(self, D):
        """Truncated MGF: coefficients mu_k / k!."""
        mu = self.moments(D).moments if D >= 1 else (1,)
        return TruncatedSeries([_div(m, math.factorial(k)) for k, m in enumerate(mu)])

    @property
    def mean(self):
        return float(self.moments(1).mu(1))

    @property
    def variance(self):
        return float(self.moments(2).kappa(2))

    def is_centered(self, tol=1e-12):
        return abs(self.mean) <= tol

    def abs_moment(self, d):
        raise NotImplementedError

    def central_abs_moment(self, d):
        """E|X - EX|^d, used for standardized absolute moments."""
        raise NotImplementedError

    def _draw(self, rng, size):
        raise NotImplementedError

    def sample(self, n, seed):
        if n < 1:
            raise BadParameter("sample size must be >= 1")
        return self._draw(rng_for(seed), int(n))

    def describe(self):
        ps = ",".join(f"{k}={v}" for k, v in self.params().items())
        return f"{self.family}:{ps}" if ps else self.family

    def __repr__(self):
        return f"{type(self).__name__}({self.params()})"

    def __eq__(self, other):
        return type(self) is type(other) and self.params() == other.params()

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.params().items()))))


def _positive(name, v):
    if not v > 0:
        raise BadParameter(f"{name} must be positive, got {v}")


class Gamma(Distribution):
    family = "gamma"

    def __init__(self, alpha=1, beta=1):
        _positive("alpha", alpha)
        _positive("beta", beta)
        self.alpha, self.beta = alpha, beta

    def params(self):
        return {"alpha": self.alpha, "beta": self.beta}

    def _cumulants(self, D):
        return [self.alpha * self.beta ** r * math.factorial(r - 1) for r in range(1, D + 1)]

    def abs_moment(self, d):
        return float(self.beta) ** d * math.exp(math.lgamma(self.alpha + d) - math.lgamma(self.alpha))

    def central_abs_moment(self, d):
        a, b = float(self.alpha), float(self.beta)
        m = a * b
        f = lambda x: abs(x - m) ** d * x ** (a - 1) * math.exp(-x / b - math.lgamma(a) - a * math.log(b))
        return _quad_split(f, 0.0, math.inf, [m])

    def _draw(self, rng, size):
        return rng.standard_gamma(float(self.alpha), size) * float(self.beta)


class Exponential(Gamma):
    family = "exponential"

    def __init__(self):
        super().__init__(1, 1)

    def params(self):
        return {}

    def _draw(self, rng, size):
        return -np.log1p(-rng.random(size))


class Normal(Distribution):
    family = "normal"

    def __init__(self, mu=0, sigma=1):
        _positive("sigma", sigma)
        self.mu, self.sigma = mu, sigma

    def params(self):
        return {"mu": self.mu, "sigma": self.sigma}

    def _cumulants(self, D):
        k = [self.mu, self.sigma ** 2] + [0] * max(0, D - 2)
        return k[:D]

    def abs_moment(self, d):
        mu, s = float(self.mu), float(self.sigma)
        base = (math.sqrt(2.0) * s) ** d * math.exp(math.lgamma((d + 1) / 2)) / math.sqrt(math.pi)
        return base * kummer_1f1(-d / 2, 0.5, -mu * mu / (2 * s * s))

    def central_abs_moment(self, d):
        return Normal(0, self.sigma).abs_moment(d)

    def _draw(self, rng, size):
        # Box-Muller, both halves
        m = (size + 1) // 2
        u1 = 1.0 - rng.random(m)
        u2 = rng.random(m)
        r = np.sqrt(-2.0 * np.log(u1))
        z = np.concatenate([r * np.cos(2 * np.pi * u2), r * np.sin(2 * np.pi * u2)])[:size]
        return float(self.mu) + float(self.sigma) * z


class Poisson(Distribution):
    family = "poisson"

    def __init__(self, alpha=1):
        _positive("alpha", alpha)
        self.alpha = alpha

    def params(self):
        return {"alpha": self.alpha}

    def _cumulants(self, D):
        return [self.alpha] * D

    def _pmf_sum(self, g):
        a = float(self.alpha)
        total, k = 0.0, 0
        kmax = int(a + 40 * math.sqrt(a) + 200)
        for k in range(kmax):
            total += g(k) * math.exp(-a + k * math.log(a) - math.lgamma(k + 1))
        return total

    def abs_moment(self, d):
        return self._pmf_sum(lambda k: float(k) ** d)

    def central_abs_moment(self, d):
        a = float(self.alpha)
        return self._pmf_sum(lambda k: abs(k - a) ** d)

    def _draw(self, rng, size):
        return rng.poisson(float(self.alpha), size).astype(float)


class FiniteDiscrete(Distribution):
    family = "discrete"

    def __init__(self, values, probs):
        values, probs = tuple(values), tuple(probs)
        if len(values) != len(probs) or not values:
            raise BadParameter("values and probs must be non-empty and of equal length")
        if any(not p > 0 for p in probs):
            raise BadParameter("probabilities must be positive")
        if abs(float(sum(probs)) - 1.0) > 1e-12:
            raise BadParameter("probabilities must sum to 1")
        if len(set(values)) < 2:
            raise BadParameter("distribution is degenerate (one support point)")
        self.values, self.probs = values, probs

    def params(self):
        return {"values": self.values, "probs": self.probs}

    def _raw_moments(self, D):
        return [sum(p * v ** k for v, p in zip(self.values, self.probs)) for k in range(D + 1)]

    def abs_moment(self, d):
        return float(sum(float(p) * abs(float(v)) ** d for v, p in zip(self.values, self.probs)))

    def central_abs_moment(self, d):
        m = self.mean
        return float(sum(float(p) * abs(float(v) - m) ** d for v, p in zip(self.values, self.probs)))

    def _draw(self, rng, size):
        cdf = np.cumsum([float(p) for p in self.probs])
        cdf[-1] = 1.0
        idx = np.searchsorted(cdf, rng.random(size), side="right")
        return np.array([float(v) for v in self.values])[idx]


class Bernoulli(FiniteDiscrete):
    family = "bernoulli"

    def __init__(self, q):
        if not 0 < q < 1:
            raise BadParameter(f"q must lie in (0, 1), got {q}")
        super().__init__((0, 1), (1 - q, q))
        self.q = q

    def params(self):
        return {"q": self.q}


class Rademacher(FiniteDiscrete):
    family = "rademacher"

    def __init__(self):
        super().__init__((-1, 1), (Fraction(1, 2), Fraction(1, 2)))

    def params(self):
        return {}


class Uniform(Distribution):
    family = "uniform"

    def __init__(self, a=0, b=1):
        if not a < b:
            raise BadParameter(f"need a < b, got a={a}, b={b}")
        self.a, self.b = a, b

    def params(self):
        return {"a": self.a, "b": self.b}

    def _raw_moments(self, D):
        # mu_k = h_k(a, b) / (k + 1)
        a, b = self.a, self.b
        return [_div(sum(a ** j * b ** (k - j) for j in range(k + 1)), k + 1) for k in range(D + 1)]

    def abs_moment(self, d):
        a, b = float(self.a), float(self.b)
        if a >= 0:
            num = b ** (d + 1) - a ** (d + 1)
        elif b <= 0:
            num = (-a) ** (d + 1) - (-b) ** (d + 1)
        else:
            num = (-a) ** (d + 1) + b ** (d + 1)
        return num / ((d + 1) * (b - a))

    def central_abs_moment(self, d):
        h = (float(self.b) - float(self.a)) / 2
        return h ** d / (d + 1)

    def _draw(self, rng, size):
        a, b = float(self.a), float(self.b)
        return a + (b - a) * rng.random(size)


class Laplace(Distribution):
    family = "laplace"

    def __init__(self, mu=0, beta=1):
        _positive("beta", beta)
        self.mu, self.beta = mu, beta

    def params(self):
        return {"mu": self.mu, "beta": self.beta}

    def _cumulants(self, D):
        out = []
        for r in range(1, D + 1):
            if r == 1:
                out.append(self.mu)
            elif r % 2 == 0:
                out.append(2 * self.beta ** r * math.factorial(r - 1))
            else:
                out.append(0)
        return out

    def abs_moment(self, d):
        mu, b = float(self.mu), float(self.beta)
        if mu == 0:
            return b ** d * math.gamma(d + 1)
        f = lambda x: abs(x) ** d * math.exp(-abs(x - mu) / b) / (2 * b)
        return _quad_split(f, -math.inf, math.inf, sorted({0.0, mu}))

    def central_abs_moment(self, d):
        return float(self.beta) ** d * math.gamma(d + 1)

    def _draw(self, rng, size):
        u = rng.random(size) - 0.5
        return float(self.mu) - float(self.beta) * np.sign(u) * np.log1p(-2.0 * np.abs(u))


class Pareto(Distribution):
    family = "pareto"

    def __init__(self, alpha, xm=1):
        _positive("alpha", alpha)
        _positive("xm", xm)
        self.alpha, self.xm = alpha, xm
        self.max_order = alpha

    def params(self):
        return {"alpha": self.alpha, "xm": self.xm}

    def moment_exists(self, k):
        return k < self.alpha

    def _raw_moments(self, D):
        return [1] + [_div(self.alpha * self.xm ** k, self.alpha - k) for k in range(1, D + 1)]

    def abs_moment(self, d):
        if not d < self.alpha:
            raise MomentDoesNotExist(d, self.family)
        a, xm = float(self.alpha), float(self.xm)
        return a * xm ** d / (a - d)

    def central_abs_moment(self, d):
        if not d < self.alpha:
            raise MomentDoesNotExist(d, self.family)
        a, xm = float(self.alpha), float(self.xm)
        m = self.mean
        f = lambda x: abs(x - m) ** d * a * xm ** a / x ** (a + 1)
        return _quad_split(f, xm, math.inf, [m])

    @property
    def variance(self):
        if not self.alpha > 2:
            raise MomentDoesNotExist(2, self.family)
        return super().variance

    def _draw(self, rng, size):
        u = 1.0 - rng.random(size)
        return float(self.xm) * u ** (-1.0 / float(self.alpha))


class SymmetricStable(Distribution):
    """Symmetric alpha-stable law with characteristic function exp(-|gamma t|^alpha)."""

    family = "stable"

    def __init__(self, alpha, gamma=1):
        if not 1 < alpha < 2:
            raise BadParameter(f"stable alpha must lie in (1, 2), got {alpha}")
        _positive("gamma", gamma)
        self.alpha, self.gamma = alpha, gamma
        self.max_order = alpha

    def params(self):
        return {"alpha": self.alpha, "gamma": self.gamma}

    def moment_exists(self, k):
        return k < self.alpha

    def _raw_moments(self, D):
        return [1, 0][:D + 1]

    @property
    def mean(self):
        return 0.0

    @property
    def variance(self):
        raise MomentDoesNotExist(2, self.family)

    def abs_moment_constant(self, d):
        """E|Y|^d for the unit-scale law: 2 sin(d pi/2) G(d+1) / (a sin(d pi/a) G(d/a+1))."""
        a = float(self.alpha)
        if not 0 < d < a:
            raise MomentDoesNotExist(d, self.family)
        return (2 * math.sin(d * math.pi / 2) * math.gamma(d + 1)
                / (a * math.sin(d * math.pi / a) * math.gamma(d / a + 1)))

    def abs_moment(self, d):
        return float(self.gamma) ** d * self.abs_moment_constant(d)

    def central_abs_moment(self, d):
        return self.abs_moment(d)

    def _draw(self, rng, size):
        # Chambers-Mallows-Stuck, symmetric case
        a = float(self.alpha)
        u = np.pi * (rng.random(size) - 0.5)
        w = -np.log1p(-rng.random(size))
        x = np.sin(a * u) / np.cos(u) ** (1.0 / a) * (np.cos((1.0 - a) * u) / w) ** ((1.0 - a) / a)
        return float(self.gamma) * x


def _quad_split(f, lo, hi, points):
    pts = [lo] + [p for p in points if lo < p < hi] + [hi]
    total = 0.0
    for x0, x1 in zip(pts[:-1], pts[1:]):
        val, _ = integrate.quad(f, x0, x1, epsabs=0.0, epsrel=1e-10, limit=200)
        total += val
    return total


def standardized_abs_moment(spec, d):
    """E|X - mu|^d / sigma^d."""
    return spec.central_abs_moment(d) / spec.variance ** (d / 2)


FAMILIES = {
    "gamma": Gamma,
    "exponential": Exponential,
    "normal": Normal,
    "poisson": Poisson,
    "bernoulli": Bernoulli,
    "rademacher": Rademacher,
    "uniform": Uniform,
    "laplace": Laplace,
    "pareto": Pareto,
    "stable": SymmetricStable,
    "discrete": FiniteDiscrete,
}


def _number(text):
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        pass
    if "/" in text:
        return Fraction(text)
    return float(text)


def make_distribution(family, **params):
    """Build a distribution by family name.

    The stable family at alpha = 2 is the normal law with sigma = sqrt(2) gamma;
    alpha = 1 (Cauchy) has no absolute moment of order >= 1 and is rejected.
    """
    family = family.lower()
    if family == "stable":
        a = params.get("alpha")
        g = params.get("gamma", 1)
        if a == 2:
            return Normal(0, math.sqrt(2) * float(g))
        if a == 1:
            raise BadParameter("Cauchy (alpha = 1) has no finite moment of order >= 1")
    if family not in FAMILIES:
        raise BadParameter(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    try:
        return FAMILIES[family](**params)
    except TypeError as exc:
        raise BadParameter(f"bad parameters for {family}: {exc}") from None


def parse_distribution(text):
    """Parse ``family:key=value,key=value``.

    Numbers may be integers, decimals or fractions such as ``1/2``. The
    discrete family takes ``values`` and ``probs`` as ``;``-separated lists,
    e.g. ``discrete:values=-1;0;2,probs=1/4;1/2;1/4``.
    """
    family, _, rest = text.strip().partition(":")
    params = {}
    if rest.strip():
        for item in rest.split(","):
            key, eq, val = item.partition("=")
            if not eq:
                raise BadParameter(f"expected key=value, got {item!r}")
            key = key.strip()
            if ";" in val or key in ("values", "probs"):
                params[key] = tuple(_number(v) for v in val.split(";") if v.strip())
            else:
                params[key] = _number(val)
    return make_distribution(family, **params)
