"""Integer partitions with their centralizer and set-partition counts."""

from collections import Counter
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, prod

from .core_linalg import PLAIN, STAR
from .errors import OddDegree, OutOfRange

MAX_DEGREE = 32


class Partition:
    """A partition of d stored as nonincreasing parts."""

    __slots__ = ("parts", "_mult")

    def __init__(self, parts):
        p = tuple(int(x) for x in parts)
        if not p or any(x <= 0 for x in p):
            raise ValueError(f"parts must be positive integers: {parts!r}")
        if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"parts must be nonincreasing: {parts!r}")
        self.parts = p
        self._mult = Counter(p)

    @property
    def d(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    @property
    def multiplicities(self):
        """Dict i -> m_i for each part size present."""
        return dict(self._mult)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"


def _gen(d, largest):
    if d == 0:
        yield ()
        return
    for first in range(min(d, largest), 0, -1):
        for rest in _gen(d - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(d):
    return tuple(Partition(p) for p in _gen(d, d))


def enumerate_partitions(d):
    """All partitions of d in reverse-lexicographic order."""
    if not isinstance(d, int) or d < 1 or d > MAX_DEGREE:
        raise OutOfRange(f"d must be an integer in [1, {MAX_DEGREE}], got {d!r}")
    return list(_partitions_cached(d))


def z_coeff(p):
    """z_pi = prod_i i^{m_i} m_i!  (order of the centralizer of cycle type pi)."""
    return prod(i ** m * factorial(m) for i, m in p.multiplicities.items())


def y_coeff(p):
    """y_pi = d! / prod_i (i!)^{m_i} m_i!  (set partitions with block sizes pi)."""
    den = prod(factorial(i) ** m * factorial(m) for i, m in p.multiplicities.items())
    return factorial(p.d) // den


def star_placements(p):
    """Every way to mark d/2 of the d letter slots as adjoints.

    Returns tuples (w_1, ..., w_r) of words, w_j of length pi_j.
    """
    d = p.d
    if d % 2:
        raise OddDegree(f"star placements need even d, got {d}")
    out = []
    for stars in combinations(range(d), d // 2):
        marked = set(stars)
        letters = [STAR if k in marked else PLAIN for k in range(d)]
        words = []
        pos = 0
        for part in p.parts:
            words.append(tuple(letters[pos:pos + part]))
            pos += part
        out.append(tuple(words))
    assert len(out) == comb(d, d // 2)
    return out
