"""Dense complex matrices, Hermitian eigenvalues, characteristic polynomials
and trace words."""

import csv
import io
import json
from dataclasses import dataclass

import numpy as np

from .errors import BadParameter, NonConvergence

STAR = "z*"
PLAIN = "z"


class ComplexMatrix:
    """Square complex matrix with finite entries. The array is read-only."""

    def __init__(self, entries):
        a = np.array(entries, dtype=complex)
        if a.ndim == 0:
            a = a.reshape(1, 1)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise BadParameter(f"matrix must be square and non-empty, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise BadParameter("matrix has NaN or infinite entries")
        a.setflags(write=False)
        self._a = a

    @property
    def n(self):
        return self._a.shape[0]

    @property
    def array(self):
        return self._a

    def adjoint(self):
        return ComplexMatrix(self._a.conj().T)

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n})"


class HermitianMatrix(ComplexMatrix):
    """Hermitian matrix. Small asymmetries are removed by exact symmetrization."""

    def __init__(self, entries):
        super().__init__(entries)
        a = self._a
        defect = float(np.max(np.abs(a - a.conj().T)))
        scale = max(1.0, float(np.max(np.abs(a))))
        if defect > 1e-12 * scale:
            raise BadParameter(f"matrix is not Hermitian (defect {defect:.3e})")
        sym = (a + a.conj().T) / 2
        sym.setflags(write=False)
        self._a = sym
        self.defect = defect

    @property
    def is_real(self):
        return bool(np.all(self._a.imag == 0))


def as_matrix(z):
    if isinstance(z, ComplexMatrix):
        return z
    return ComplexMatrix(z)


def as_hermitian(a):
    if isinstance(a, HermitianMatrix):
        return a
    if isinstance(a, ComplexMatrix):
        return HermitianMatrix(a.array)
    return HermitianMatrix(a)


def frobenius(z):
    return float(np.linalg.norm(as_matrix(z).array))


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple
    residual: float

    def __iter__(self):
        return iter(self.eigenvalues)

    def as_array(self):
        return np.array(self.eigenvalues, dtype=float)


def _jacobi(a, tol, max_sweeps):
    """Cyclic complex Jacobi. Returns (diagonal, eigenvectors)."""
    a = np.array(a, dtype=complex)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = np.linalg.norm(a)
    if n == 1 or scale == 0.0:
        return a.diagonal().real.copy(), v
    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(a.diagonal()))
        if off <= tol * scale:
            return a.diagonal().real.copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r <= 1e-300 or r < 1e-18 * scale:
                    continue
                phase = apq / r
                app, aqq = a[p, p].real, a[q, q].real
                tau = (aqq - app) / (2.0 * r)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                # unitary acting on coordinates (p, q): phase removal then real rotation
                rot = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ rot
                a[idx, :] = rot.conj().T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                v[:, idx] = v[:, idx] @ rot
    raise NonConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")


def eig_hermitian(a, max_sweeps=30):
    """Eigenvalues of a Hermitian matrix in nonincreasing order."""
    h = as_hermitian(a)
    w, v = _jacobi(h.array, 1e-14, max_sweeps)
    order = np.argsort(-w, kind="stable")
    w = w[order]
    v = v[:, order]
    resid = np.linalg.norm(h.array @ v - v * w, axis=0)
    return Spectrum(tuple(float(x) for x in w), float(np.max(resid)) if len(w) else 0.0)


def char_poly(a):
    """Coefficients c_0..c_n of det(xI - A), highest degree first (c_0 = 1).

    Faddeev-LeVerrier: M_k = A M_{k-1} + c_{k-1} I, c_k = -tr(A M_k)/k.
    """
    z = as_matrix(a)
    arr = z.array
    n = z.n
    coeffs = [1.0 + 0j]
    m = np.zeros_like(arr)
    ident = np.eye(n, dtype=complex)
    for k in range(1, n + 1):
        m = arr @ m + coeffs[-1] * ident
        coeffs.append(-np.trace(arr @ m) / k)
    out = np.array(coeffs)
    if isinstance(z, HermitianMatrix) or np.max(np.abs(out.imag)) <= 1e-10:
        return out.real.copy()
    return out


def trace_word(z, word):
    """tr(w(Z)) where the letters of ``word`` are "z" or "z*"."""
    zm = as_matrix(z)
    arr = zm.array
    adj = arr.conj().T
    if len(word) == 0:
        raise BadParameter("word must have length >= 1")
    prod = None
    for letter in word:
        f = adj if letter == STAR else arr
        prod = f if prod is None else prod @ f
    return complex(np.trace(prod))


def all_word_traces(z, max_len):
    """Map every word of length 1..max_len to tr(w(Z)), sharing prefix products."""
    zm = as_matrix(z)
    factors = {PLAIN: zm.array, STAR: zm.array.conj().T}
    out = {}
    frontier = [((), np.eye(zm.n, dtype=complex))]
    for _ in range(max_len):
        nxt = []
        for word, prod in frontier:
            for letter in (PLAIN, STAR):
                w = word + (letter,)
                p = prod @ factors[letter]
                out[w] = complex(np.trace(p))
                nxt.append((w, p))
        frontier = nxt
    return out


def power_traces(a, d):
    """(tr A, tr A^2, ..., tr A^d) by repeated multiplication."""
    if d < 1:
        raise BadParameter("d must be >= 1")
    arr = as_matrix(a).array
    out = []
    p = np.eye(arr.shape[0], dtype=complex)
    for _ in range(d):
        p = p @ arr
        out.append(np.trace(p))
    out = np.array(out)
    if isinstance(a, HermitianMatrix) or np.max(np.abs(out.imag), initial=0.0) == 0.0:
        return out.real.copy()
    return out


def read_matrix(text):
    """Parse the JSON matrix format, or a real CSV, into a ComplexMatrix."""
    s = text.strip()
    if s.startswith("{"):
        obj = json.loads(s)
        n = int(obj["n"])
        entries = obj["entries"]
        if len(entries) != n * n:
            raise BadParameter(f"expected {n * n} entries, got {len(entries)}")
        flat = [complex(e[0], e[1]) if isinstance(e, (list, tuple)) else complex(e) for e in entries]
        return ComplexMatrix(np.array(flat).reshape(n, n))
    rows = [[float(x) for x in row] for row in csv.reader(io.StringIO(s)) if row]
    return ComplexMatrix(rows)


def matrix_to_json(z):
    arr = as_matrix(z).array
    return {"n": int(arr.shape[0]),
            "entries": [[float(x.real), float(x.imag)] for x in arr.ravel()]}
