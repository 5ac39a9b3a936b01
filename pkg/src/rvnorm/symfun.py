"""Symmetric functions and truncated power series."""

from fractions import Fraction
from itertools import permutations
from math import factorial, prod

import numpy as np

from .errors import BadParameter, DivisionByZeroConstantTerm


def power_sum(k, x):
    if k < 1:
        raise BadParameter("power sums need k >= 1")
    return sum(xi ** k for xi in x)


def chs_from_power_sums(p, d):
    """h_0..h_d from power sums p[0] = p_1, ..., p[d-1] = p_d (Newton-Girard)."""
    h = [1.0]
    for k in range(1, d + 1):
        h.append(sum(p[i - 1] * h[k - i] for i in range(1, k + 1)) / k)
    return h


def chs_sequence(d, x):
    p = [power_sum(k, x) for k in range(1, d + 1)]
    return chs_from_power_sums(p, d)


def chs(d, x):
    """Complete homogeneous symmetric polynomial h_d(x)."""
    if d < 0:
        raise BadParameter("degree must be >= 0")
    if d == 0:
        return 1.0
    return chs_sequence(d, x)[d]


def p_pi(parts, p):
    """prod_j p_{pi_j} given power sums p[k-1] = p_k."""
    return prod(p[k - 1] for k in parts)


def monomial_sym(parts, x):
    """m_pi(x): sum over distinct rearrangements of pi padded with zeros."""
    parts = tuple(parts)
    x = list(x)
    if len(parts) > len(x):
        return 0.0
    exps = parts + (0,) * (len(x) - len(parts))
    return sum(prod(xi ** e for xi, e in zip(x, alpha)) for alpha in set(permutations(exps)))


def bell_complete(ell, xs):
    """Complete Bell polynomial B_ell(x_1, ..., x_ell).

    B_ell = ell! [t^ell] exp(sum_j x_j t^j / j!).
    """
    if ell < 0:
        raise BadParameter("ell must be >= 0")
    if ell == 0:
        return 1
    if len(xs) < ell:
        raise BadParameter(f"need {ell} arguments, got {len(xs)}")
    exact = all(isinstance(v, (int, Fraction)) for v in xs[:ell])
    coeffs = [0] + [Fraction(xs[j - 1]) / factorial(j) if exact else xs[j - 1] / factorial(j)
                    for j in range(1, ell + 1)]
    e = TruncatedSeries(coeffs).exp()
    val = e[ell] * factorial(ell)
    if exact and isinstance(val, Fraction) and val.denominator == 1:
        return int(val)
    return val


class TruncatedSeries:
    """Formal power series c_0 + c_1 t + ... + c_D t^D, truncated at order D.

    Coefficients may be floats, complex numbers or Fractions.
    """

    def __init__(self, coeffs, order=None):
        c = list(coeffs)
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise BadParameter("order must be >= 0")
        c = c[:order + 1] + [0] * (order + 1 - len(c))
        self.c = c

    @property
    def order(self):
        return len(self.c) - 1

    def __getitem__(self, k):
        return self.c[k] if 0 <= k < len(self.c) else 0

    def __len__(self):
        return len(self.c)

    def __repr__(self):
        return f"TruncatedSeries({self.c!r})"

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries([other], self.order)

    def __add__(self, other):
        o = self._coerce(other)
        D = min(self.order, o.order) if isinstance(other, TruncatedSeries) else self.order
        return TruncatedSeries([self[k] + o[k] for k in range(D + 1)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-v for v in self.c])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([v * other for v in self.c])
        D = min(self.order, other.order)
        a, b = self.c, other.c
        return TruncatedSeries([sum(a[j] * b[k - j] for j in range(k + 1)) for k in range(D + 1)])

    __rmul__ = __mul__

    def scaled(self, s):
        """The series of f(s t)."""
        out = []
        sk = 1
        for v in self.c:
            out.append(v * sk)
            sk = sk * s
        return TruncatedSeries(out)

    def recip(self):
        a = self.c
        if a[0] == 0:
            raise DivisionByZeroConstantTerm("reciprocal needs a nonzero constant term")
        inv0 = Fraction(1) / a[0] if isinstance(a[0], (int, Fraction)) else 1 / a[0]
        b = [inv0]
        for k in range(1, len(a)):
            b.append(-inv0 * sum(a[j] * b[k - j] for j in range(1, k + 1)))
        return TruncatedSeries(b)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.recip()
        return TruncatedSeries([v / other for v in self.c])

    def exp(self):
        """exp via k c_k = sum_j j a_j c_{k-j}."""
        a = self.c
        if a[0] == 0:
            c0 = 1
        elif isinstance(a[0], complex):
            c0 = complex(np.exp(a[0]))
        else:
            c0 = float(np.exp(a[0]))
        c = [c0]
        for k in range(1, len(a)):
            c.append(sum(j * a[j] * c[k - j] for j in range(1, k + 1)) / k)
        return TruncatedSeries(c)

    def log(self):
        a = self.c
        if a[0] == 0:
            raise DivisionByZeroConstantTerm("log needs a nonzero constant term")
        if a[0] == 1:
            l0 = 0
        elif isinstance(a[0], complex) or a[0] < 0:
            l0 = complex(np.log(complex(a[0])))
        else:
            l0 = float(np.log(a[0]))
        l = [l0]
        for k in range(1, len(a)):
            s = sum(j * l[j] * a[k - j] for j in range(1, k))
            l.append((a[k] - s / k) / a[0])
        return TruncatedSeries(l)

    def pow(self, alpha):
        """self**alpha for real alpha; needs constant term 1."""
        if abs(self.c[0] - 1) > 1e-12:
            raise BadParameter("pow needs constant term 1")
        return (self.log() * alpha).exp()


class BivariateSeries:
    """Truncated series in two commuting symbols z, w (total degree <= D).

    Stored as a (D+1) x (D+1) complex array c[j, k] for z^j w^k; entries with
    j + k > D are kept at zero.
    """

    def __init__(self, c):
        c = np.array(c, dtype=complex)
        D = c.shape[0] - 1
        j, k = np.indices(c.shape)
        c[j + k > D] = 0
        self.c = c

    @classmethod
    def zeros(cls, D):
        return cls(np.zeros((D + 1, D + 1), dtype=complex))

    @classmethod
    def constant(cls, v, D):
        s = cls.zeros(D)
        s.c[0, 0] = v
        return s

    @property
    def order(self):
        return self.c.shape[0] - 1

    def __add__(self, other):
        if isinstance(other, BivariateSeries):
            return BivariateSeries(self.c + other.c)
        out = self.c.copy()
        out[0, 0] += other
        return BivariateSeries(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariateSeries(-self.c)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, BivariateSeries):
            return BivariateSeries(self.c * other)
        D = self.order
        out = np.zeros_like(self.c)
        for j in range(D + 1):
            for k in range(D + 1 - j):
                v = self.c[j, k]
                if v != 0:
                    out[j:, k:] += v * other.c[:D + 1 - j, :D + 1 - k]
        return BivariateSeries(out)

    __rmul__ = __mul__

    def recip(self):
        a = self.c
        if a[0, 0] == 0:
            raise DivisionByZeroConstantTerm("reciprocal needs a nonzero constant term")
        D = self.order
        b = np.zeros_like(a)
        inv0 = 1 / a[0, 0]
        b[0, 0] = inv0
        for s in range(1, D + 1):
            for j in range(s + 1):
                k = s - j
                acc = 0
                for jj in range(j + 1):
                    for kk in range(k + 1):
                        if jj == 0 and kk == 0:
                            continue
                        acc += a[jj, kk] * b[j - jj, k - kk]
                b[j, k] = -inv0 * acc
        return BivariateSeries(b)

    def coeff(self, j, k):
        return complex(self.c[j, k])


def kummer_1f1(a, b, z, rtol=1e-14, max_terms=100000):
    """Confluent hypergeometric 1F1(a; b; z) by direct series summation.

    For z < 0 with a not a nonpositive integer the Kummer transformation
    1F1(a; b; z) = e^z 1F1(b - a; b; -z) is applied first so that the
    summed terms share one sign.
    """
    if b <= 0 and float(b).is_integer():
        raise BadParameter(f"b must not be a nonpositive integer, got {b}")
    a_poly = a <= 0 and float(a).is_integer()
    if z < 0 and not a_poly:
        return float(np.exp(z)) * kummer_1f1(b - a, b, -z, rtol, max_terms)
    total = 1.0
    term = 1.0
    for k in range(max_terms):
        term *= (a + k) * z / ((b + k) * (k + 1))
        total += term
        if term == 0.0:
            return total
        if abs(term) <= rtol * abs(total) and k > abs(z):
            return total
    raise BadParameter("1F1 series did not converge")
