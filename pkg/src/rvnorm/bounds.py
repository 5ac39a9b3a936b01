"""Norm comparisons, inequality checks and submultiplicativity scalars."""

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import chs, cxnorm, hnorm
from .core_linalg import as_hermitian, as_matrix, eig_hermitian, frobenius
from .cxnorm import central_binomial
from .distributions import Rademacher, standardized_abs_moment
from .errors import BadParameter, NotCentered


@dataclass(frozen=True)
class BoundReport:
    """left <= right (kind "le") or left == right (kind "eq") up to tol."""

    name: str
    left: float
    right: float
    slack: float
    passed: bool
    kind: str = "le"

    def to_dict(self):
        return asdict(self)

    def tsv(self):
        return f"{self.name}\t{self.left:.12g}\t{self.right:.12g}\t{self.slack:.3e}\t{'PASS' if self.passed else 'FAIL'}"


def report_le(name, left, right, tol, rel=True):
    slack = right - left
    eps = tol * (1 + abs(right)) if rel else tol
    return BoundReport(name, float(left), float(right), float(slack), bool(slack >= -eps))


def report_eq(name, left, right, tol):
    diff = abs(right - left)
    return BoundReport(name, float(left), float(right), float(-diff),
                       bool(diff <= tol * (1 + abs(right))), "eq")


def trace_lower_bound(z, spec, d, tol=1e-9):
    """|||Z||| >= (||I_n|| / n) |tr Z|."""
    zm = as_matrix(z)
    n = zm.n
    ident = hnorm.norm_value(np.eye(n), spec, d)
    left = ident / n * abs(np.trace(zm.array))
    right = cxnorm.cnorm_value(zm, spec, d)
    return report_le("trace_lower", left, right, tol)


def schatten_upper_bound(a, spec, d, tol=1e-9):
    """||A||^d <= n^{d-1} E|X|^d ||A||_{S_d}^d."""
    h = as_hermitian(a)
    lam = eig_hermitian(h).as_array()
    left = hnorm.norm_auto(h, spec, d).value ** d
    right = h.n ** (d - 1) * spec.abs_moment(d) * float(np.sum(np.abs(lam) ** d))
    return report_le("schatten_upper", left, right, tol)


def khintchine_constant(d):
    """(E|N|^d)^{1/d} for a standard normal N."""
    return math.sqrt(2) * (math.exp(math.lgamma((d + 1) / 2)) / math.sqrt(math.pi)) ** (1.0 / d)


def frobenius_sandwich(a, spec, d, tol=1e-9):
    """Checks for centered laws: ||A||_2 = sqrt(E X^2) ||A||_F and ||A||_2 <= ||A||_d.

    For Rademacher coordinates the Khintchine sandwich
    ||A||_F <= ||A||_d <= gamma_d ||A||_F is added.
    """
    if not spec.is_centered():
        raise NotCentered(f"{spec.family} has nonzero mean {spec.mean}")
    h = as_hermitian(a)
    fro = frobenius(h)
    n2 = hnorm.norm_value(h, spec, 2)
    nd = hnorm.norm_auto(h, spec, d).value
    out = [report_eq("centered_d2", n2, math.sqrt(spec.variance) * fro, tol),
           report_le("monotone_2_d", n2, nd, tol)]
    if isinstance(spec, Rademacher):
        out.append(report_le("khintchine_lower", fro, nd, tol))
        out.append(report_le("khintchine_upper", nd, khintchine_constant(d) * fro, tol))
    return out


def submult_scalar_d2(spec):
    """gamma with gamma^2 = (sigma^2 + mu^2) / sigma^4."""
    var = spec.variance
    if not var > 0:
        raise BadParameter("variance must be positive")
    return math.sqrt(var + spec.mean ** 2) / var


def d2_is_matrix_norm(spec):
    """Whether the unscaled degree-2 norm is submultiplicative for every n."""
    var, mu = spec.variance, spec.mean
    return 2 * var >= 1 + math.sqrt(1 + 4 * mu * mu)


def d2_ratio_formula(spec, n):
    var, mu = spec.variance, spec.mean
    return math.sqrt(1 - var / (var + mu * mu) * (2 * n - 3) / (n * (n - 1)))


def d2_ratio_computed(spec, n):
    """gamma |||A_n^2||| / (gamma |||A_n|||)^2 for A_n = J_n - I_n."""
    g = submult_scalar_d2(spec)
    a = np.ones((n, n)) - np.eye(n)
    return g * cxnorm.cnorm_d2(a @ a, spec) / (g * cxnorm.cnorm_d2(a, spec)) ** 2


def submult_report(norm_fn, z1, z2, scale=1.0, tol=1e-9, name="submultiplicative"):
    """scale N(Z1 Z2) <= scale N(Z1) * scale N(Z2)."""
    a1, a2 = as_matrix(z1).array, as_matrix(z2).array
    left = scale * norm_fn(a1 @ a2)
    right = scale * norm_fn(a1) * scale * norm_fn(a2)
    return report_le(name, left, right, tol)


def placeholder_mz_constant(d):
    """Non-normative stand-in (d-1)^{d/2} for the unknown upper
    Marcinkiewicz-Zygmund constant."""
    return max(1.0, (d - 1) ** (d / 2))


def submult_scalar_general(spec, d, b_d=None, eta=None, b_eta=None):
    """Scale gamma_d that makes gamma_d * gamma * |||.|||_d submultiplicative,
    gamma being the degree-2 scalar.

    d >= 2:  gamma_d = 2 (B_d mu~_d C(d, d/2) / 2)^{1/d}
    1 <= d < 2 (needs eta > 2):
        gamma_d = sqrt(2)/16 (64 C(d, d/2) (2 B_eta mu~_eta)^{2(2-d)/(eta-2)})^{1/d}
    mu~ is the standardized absolute moment. The default B values are the
    placeholder_mz_constant, not the optimal constants.
    """
    if d >= 2:
        bd = placeholder_mz_constant(d) if b_d is None else b_d
        return 2 * (0.5 * bd * standardized_abs_moment(spec, d) * central_binomial(d)) ** (1.0 / d)
    if eta is None or not eta > 2:
        raise BadParameter("1 <= d < 2 needs an exponent eta > 2")
    be = placeholder_mz_constant(eta) if b_eta is None else b_eta
    inner = 64 * central_binomial(d) * (2 * be * standardized_abs_moment(spec, eta)) ** (2 * (2 - d) / (eta - 2))
    return math.sqrt(2) / 16 * inner ** (1.0 / d)


def stable_submult_threshold(alpha, d):
    """Smallest gamma^d for which the symmetric stable norm is submultiplicative
    by the comparison with the Schatten alpha-norm."""
    return (alpha * (2 * math.pi ** 2) ** (1 - d) * central_binomial(d)
            * math.sin(d * math.pi / alpha) * math.gamma(d / alpha + 1)
            / (math.sin(d * math.pi / 2) * math.gamma(d + 1)))


def binomial_monotonicity(z, spec, p, q, tol=1e-8):
    """C(p,p/2)^{1/p} |||Z|||_p <= C(q,q/2)^{1/q} |||Z|||_q for 1 <= p <= q."""
    left = central_binomial(p) ** (1.0 / p) * cxnorm.cnorm_value(z, spec, p)
    right = central_binomial(q) ** (1.0 / q) * cxnorm.cnorm_value(z, spec, q)
    return report_le(f"binomial_monotone_{p}_{q}", left, right, tol)


def d2_lower_comparison(z, spec, d, tol=1e-8):
    """sqrt(2) C(d,d/2)^{-1/d} |||Z|||_2 <= |||Z|||_d."""
    left = math.sqrt(2) * central_binomial(d) ** (-1.0 / d) * cxnorm.cnorm_d2(z, spec)
    right = cxnorm.cnorm_value(z, spec, d)
    return report_le("d2_lower", left, right, tol)


def hunter_frobenius_lower(a, d, tol=1e-9):
    """(2^{d/2} (d/2)!)^{-1/d} ||A||_F <= ||A||_d for the CHS norm."""
    left = chs.hunter_lower_constant(d) ** (1.0 / d) * frobenius(a)
    right = chs.chs_norm_charpoly(a, d)
    return report_le("hunter_frobenius", left, right, tol)


def constants_sandwich(a, d, tol=1e-9):
    lower, value, upper = chs.equivalence_bounds(a, d)
    return [report_le("constants_lower", lower, value, tol),
            report_le("constants_upper", value, upper, tol)]
