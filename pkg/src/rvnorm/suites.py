"""Property suites shared by the ``verify`` command and the test-suite."""

import math

import numpy as np

from . import bounds, chs, cxnorm, hnorm
from .bounds import BoundReport, report_eq, report_le
from .distributions import Exponential, Gamma, rng_for
from .majorization import (birkhoff_decompose, eigenvalue_majorization, hlp_transport,
                           majorizes, random_doubly_stochastic, random_majorized_pair)

SUITES = ("axioms", "schur", "bounds", "oracle", "chs-golden", "birkhoff")


def random_hermitian(rng, n, scale=1.0):
    x = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return scale * (x + x.conj().T) / 2


def random_complex(rng, n, scale=1.0):
    return scale * (rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))) / math.sqrt(2)


def random_unitary(rng, n):
    q, r = np.linalg.qr(random_complex(rng, n))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def _value(spec, d, samples, seed):
    """A norm function with fixed randomness, so it is an exact norm even by Monte Carlo."""
    return lambda m: hnorm.norm_auto(m, spec, d, samples, seed).value


def axioms(spec, d, trials=100, seed=0, samples=20000):
    rng = rng_for(seed, 101)
    f = _value(spec, d, samples, seed)
    rows = []
    for i in range(trials):
        n = int(rng.integers(1, 6))
        a = random_hermitian(rng, n)
        b = random_hermitian(rng, n)
        c = float(rng.normal() * 3)
        fa = f(a)
        rows.append(report_eq(f"homogeneity[{i}]", f(c * a), abs(c) * fa, 1e-10))
        rows.append(report_le(f"triangle[{i}]", f(a + b), fa + f(b), 1e-9))
        unit = a / np.linalg.norm(a)
        rows.append(report_le(f"positive[{i}]", 1e-6, f(unit), 0.0, rel=False))
        u = random_unitary(rng, n)
        rows.append(report_eq(f"unitary[{i}]", f(u.conj().T @ a @ u), fa, 1e-9))
        if hnorm.is_even_int(d) and d <= 8:
            rows.append(report_eq(f"restriction[{i}]", cxnorm.cnorm_value(a, spec, d), fa, 1e-9))
    return rows


def schur(spec, d, trials=100, seed=0, samples=20000):
    rng = rng_for(seed, 102)
    f = _value(spec, d, samples, seed)
    rows = []
    for i in range(trials):
        n = int(rng.integers(2, 6))
        x, y = random_majorized_pair(n, rng)
        rows.append(report_le(f"schur_convex[{i}]", f(np.diag(y)), f(np.diag(x)), 1e-9))
        a = random_hermitian(rng, n)
        b = random_hermitian(rng, n)
        ok = eigenvalue_majorization(a, b)
        rows.append(BoundReport(f"ky_fan[{i}]", 0.0, 0.0, 0.0, ok, "eq"))
    return rows


def bound_suite(spec, d, trials=50, seed=0):
    rng = rng_for(seed, 103)
    rows = []
    even = hnorm.is_even_int(d)
    for i in range(trials):
        n = int(rng.integers(1, 5))
        z = random_complex(rng, n)
        a = random_hermitian(rng, n)
        rows.append(_named(bounds.trace_lower_bound(z, spec, d), i))
        if spec.moment_exists(d):
            rows.append(_named(bounds.schatten_upper_bound(a, spec, d), i))
        if spec.is_centered() and d >= 2:
            rows.extend(_named(r, i) for r in bounds.frobenius_sandwich(a, spec, d))
        if even:
            rows.append(_named(bounds.d2_lower_comparison(z, spec, d), i))
            rows.extend(_named(r, i) for r in bounds.constants_sandwich(a, int(d)))
            rows.append(_named(bounds.hunter_frobenius_lower(a, int(d)), i))
        if even and d + 2 <= 8:
            rows.append(_named(bounds.binomial_monotonicity(z, spec, int(d), int(d) + 2), i))
    c = float(rng.normal()) + 1j * float(rng.normal())
    n = 3
    rows.append(report_eq("trace_lower_equality", *_trace_eq(c, n, spec, d), 1e-9))
    return rows


def _trace_eq(c, n, spec, d):
    r = bounds.trace_lower_bound(c * np.eye(n), spec, d)
    return r.left, r.right


def _named(r, i):
    return BoundReport(f"{r.name}[{i}]", r.left, r.right, r.slack, r.passed, r.kind)


def oracle(spec, d, trials=10, seed=0, samples=10 ** 6, k=4.0):
    rng = rng_for(seed, 104)
    rows = []
    for i in range(trials):
        n = int(rng.integers(1, 6))
        a = random_hermitian(rng, n)
        exact = hnorm.norm_value(a, spec, d)
        mc = hnorm.norm_monte_carlo(a, spec, d, samples, seed + i)
        diff = abs(mc.value - exact)
        # round-off floor for laws where |<X, lambda>| is almost surely constant
        band = k * mc.stderr + 1e-12 * exact
        rows.append(BoundReport(f"mc_vs_exact[{i}]", mc.value, exact, band - diff, diff <= band))
    return rows


FIBONACCI = np.array([[1.0, 1.0], [1.0, 0.0]])
CYCLIC3 = np.roll(np.eye(3), 1, axis=1)
JORDAN2 = np.array([[0.0, 1.0], [0.0, 0.0]])


def cospectral_pair():
    k = np.ones((3, 3)) - np.eye(3)
    z = np.zeros((3, 3))
    return np.block([[k, z], [z, k]]), np.block([[z, k], [k, z]])


def chs_golden():
    rows = []
    fib = {2: 2, 4: 5, 6: 13, 8: 34}
    for d, f in fib.items():
        rows.append(report_eq(f"fibonacci_d{d}", chs.chs_power_charpoly(FIBONACCI, d), f, 1e-10))
    cyc = {2: 1.5, 4: 1.5, 6: 29 / 20, 8: 99 / 70}
    for d, v in cyc.items():
        got = chs.chs_cpower_det_series(CYCLIC3, d).real / math.comb(d, d // 2)
        rows.append(report_eq(f"cyclic_shift_d{d}", got, v, 1e-9))
    for d in (2, 4, 6):
        got = chs.chs_cpower_det_series(JORDAN2, d).real / math.comb(d, d // 2)
        rows.append(report_eq(f"jordan_block_d{d}", got, 1 / math.comb(d, d // 2), 1e-9))
    a, b = cospectral_pair()
    spec = Gamma(1, 0.5)
    rows.append(report_eq("cospectral_A_d6", hnorm.norm_bell(a, spec, 6).value ** 6, 1350, 1e-9))
    rows.append(report_eq("cospectral_B_d6", hnorm.norm_bell(b, spec, 6).value ** 6, 1260, 1e-9))
    return rows


def birkhoff_suite(trials=100, seed=0):
    rng = rng_for(seed, 105)
    rows = []
    for i in range(trials):
        n = int(rng.integers(2, 9))
        dmat = random_doubly_stochastic(n, rng)
        dec = birkhoff_decompose(dmat)
        err = float(np.max(np.abs(dec.matrix() - dmat)))
        rows.append(report_le(f"birkhoff_reconstruct[{i}]", err, 1e-8, 0.0, rel=False))
        rows.append(report_le(f"birkhoff_terms[{i}]", len(dec.weights), n * n - n + 1, 0.0, rel=False))
        x, y = random_majorized_pair(n, rng)
        t = hlp_transport(x, y)
        err = float(np.max(np.abs(t @ x - y)))
        rows.append(report_le(f"hlp_transport[{i}]", err, 1e-9, 0.0, rel=False))
        ok = majorizes(x, y)
        rows.append(BoundReport(f"hlp_pair_majorized[{i}]", 0.0, 0.0, 0.0, ok, "eq"))
    return rows


def run_suite(name, spec=None, d=4, trials=None, seed=0):
    spec = Exponential() if spec is None else spec
    if name == "axioms":
        return axioms(spec, d, trials or 100, seed)
    if name == "schur":
        return schur(spec, d, trials or 100, seed)
    if name == "bounds":
        return bound_suite(spec, d, trials or 50, seed)
    if name == "oracle":
        return oracle(spec, d, trials or 10, seed)
    if name == "chs-golden":
        return chs_golden()
    if name == "birkhoff":
        return birkhoff_suite(trials or 100, seed)
    raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
