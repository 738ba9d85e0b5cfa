"""NSym in the complete homogeneous basis H.

Every operator here acts on :class:`LinComb` values keyed by compositions,
read as H-expansions. The immaculate basis is reached through
non-commutative Bernstein operators and a memoized transition cache.
"""

import threading
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import qsym
from .compositions import Composition, IntVector, comp, compositions_of, sort_to_partition
from .config import DegreeCapError, settings
from .kernel import ZERO, LinComb, apply_linear, lsum

ONE = LinComb.monomial(Composition())


def H(*parts):
    return LinComb.monomial(Composition(parts))


def h_mult(a, b):
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            out[k] = out.get(k, 0) + ca * cb
    return LinComb(out)


def left_H(m, x):
    """H_m * x with the conventions H_0 = 1 and H_{-r} = 0."""
    if m < 0:
        return ZERO
    if m == 0:
        return x
    return h_mult(H(m), x)


def _bounded_vectors(total, bounds):
    # all j with sum(j) == total and 0 <= j_i <= bounds[i]
    if not bounds:
        if total == 0:
            yield ()
        return
    rest_max = sum(bounds[1:])
    for j in range(max(0, total - rest_max), min(bounds[0], total) + 1):
        for tail_ in _bounded_vectors(total - j, bounds[1:]):
            yield (j,) + tail_


@lru_cache(maxsize=None)
def fperp_row_on_H(r, alpha):
    """F_r^perp H_alpha: subtract r cells from alpha in every possible way."""
    alpha = Composition(alpha)
    if r < 0:
        return ZERO
    out = {}
    for j in _bounded_vectors(r, alpha):
        k = comp(a - x for a, x in zip(alpha, j))
        out[k] = out.get(k, 0) + 1
    return LinComb(out)


@lru_cache(maxsize=None)
def fperp_col_on_H(r, alpha):
    """F_{1^r}^perp H_alpha: subtract one cell from r distinct parts."""
    alpha = Composition(alpha)
    if r < 0 or r > len(alpha):
        return ZERO
    out = {}
    for pos in combinations(range(len(alpha)), r):
        v = list(alpha)
        for p in pos:
            v[p] -= 1
        k = comp(v)
        out[k] = out.get(k, 0) + 1
    return LinComb(out)


def fperp_row(r, x):
    return apply_linear(lambda a: fperp_row_on_H(r, a), x)


def fperp_col(r, x):
    return apply_linear(lambda a: fperp_col_on_H(r, a), x)


def pairing(x, y):
    """<X, Y> with X an H-expansion and Y an M-expansion."""
    if len(x) > len(y):
        x, y = y, x
    return sum(c * y[k] for k, c in x.items())


def perp_generic(g, x):
    """G^perp X = sum_beta <X, G M_beta> H_beta, G given in the M basis."""
    out = []
    for n, xn in x.homogeneous_parts().items():
        for gamma, cg in g.items():
            d = gamma.size
            if d > n:
                continue
            for beta in compositions_of(n - d):
                c = pairing(xn, qsym.m_quasi_shuffle(gamma, beta))
                if c:
                    out.append(LinComb({beta: cg * c}))
    return lsum(out)


def bernstein_apply(m, x):
    """B_m x = sum_i (-1)^i H_{m+i} F_{1^i}^perp x."""
    if not x:
        return ZERO
    longest = max(len(k) for k in x)
    terms = []
    for i in range(longest + 1):
        if m + i < 0:
            continue
        t = fperp_col(i, x)
        if t:
            terms.append((-1) ** i * left_H(m + i, t))
    return lsum(terms)


@lru_cache(maxsize=None)
def immaculate_to_H(alpha):
    alpha = Composition(alpha)
    if not alpha:
        return ONE
    return bernstein_apply(alpha[0], immaculate_to_H(Composition(alpha[1:])))


@lru_cache(maxsize=None)
def immaculate_vector_to_H(v):
    """B_{v_1} ... B_{v_m}(1) for an arbitrary integer vector ``v``."""
    v = IntVector(v)
    if not v:
        return ONE
    return bernstein_apply(v[0], immaculate_vector_to_H(IntVector(v[1:])))


def Imm(*parts):
    return immaculate_to_H(Composition(parts))


def imm_combination_to_H(coords):
    return lsum(c * immaculate_to_H(a) for a, c in coords.items())


def _invert(rows, order):
    """Exact inverse of a square matrix given as {row_key: LinComb}.

    Sparse Gauss-Jordan over the rationals; no triangular order is assumed.
    """
    work = {a: {b: Fraction(c) for b, c in rows[a].items()} for a in order}
    inv = {a: {a: Fraction(1)} for a in order}
    pending = list(order)
    pivot_of = {}
    for col in order:
        candidates = [a for a in pending if work[a].get(col)]
        if not candidates:
            raise ArithmeticError(f"singular transition matrix at column {list(col)}")
        p = min(candidates, key=lambda a: (abs(work[a][col]) != 1, len(work[a])))
        pending.remove(p)
        pivot_of[col] = p
        piv = work[p][col]
        if piv != 1:
            work[p] = {k: v / piv for k, v in work[p].items()}
            inv[p] = {k: v / piv for k, v in inv[p].items()}
        for a in order:
            if a == p:
                continue
            f = work[a].get(col)
            if not f:
                continue
            for k, v in work[p].items():
                nv = work[a].get(k, 0) - f * v
                if nv:
                    work[a][k] = nv
                else:
                    work[a].pop(k, None)
            for k, v in inv[p].items():
                nv = inv[a].get(k, 0) - f * v
                if nv:
                    inv[a][k] = nv
                else:
                    inv[a].pop(k, None)
    # row pivot_of[col] of the reduced system now reads e_col
    result = {}
    for col in order:
        row = inv[pivot_of[col]]
        for k, v in row.items():
            if v.denominator != 1:
                raise ArithmeticError("transition inverse is not integral")
        result[col] = LinComb({k: int(v) for k, v in row.items()})
    return result


class TransitionCache:
    """Per-degree Imm <-> H transition matrices, built once per degree.

    ``imm_to_h(n)[alpha]`` is the H-expansion of Imm_alpha and
    ``h_to_imm(n)[beta]`` the Imm-coordinates of H_beta. Rows and columns are
    keyed by compositions; :func:`compositions_of` gives the matrix order.
    """

    def __init__(self, max_degree=None):
        self._max_degree = max_degree
        self._imm_to_h = {}
        self._h_to_imm = {}
        self._columns = {}
        self._lock = threading.Lock()

    @property
    def max_degree(self):
        return settings.max_degree if self._max_degree is None else self._max_degree

    @max_degree.setter
    def max_degree(self, value):
        self._max_degree = value

    def _check(self, n):
        if n > self.max_degree:
            raise DegreeCapError(n, self.max_degree)

    def imm_to_h(self, n):
        self._check(n)
        if n not in self._imm_to_h:
            self._build(n)
        return self._imm_to_h[n]

    def h_to_imm(self, n):
        self._check(n)
        if n not in self._h_to_imm:
            self._build(n)
        return self._h_to_imm[n]

    def imm_to_h_columns(self, n):
        """Transpose of :meth:`imm_to_h`: column beta as a LinComb over alpha."""
        rows = self.imm_to_h(n)
        if n not in self._columns:
            cols = {b: {} for b in compositions_of(n)}
            for a, row in rows.items():
                for b, c in row.items():
                    cols[b][a] = c
            self._columns[n] = {b: LinComb(t) for b, t in cols.items()}
        return self._columns[n]

    def _build(self, n):
        with self._lock:
            if n in self._h_to_imm:
                return
            order = compositions_of(n)
            rows = {a: immaculate_to_H(a) for a in order}
            inverse = _invert(rows, order)
            self._imm_to_h[n] = rows
            self._h_to_imm[n] = inverse

    def matrix(self, n, inverse=False):
        """Dense integer matrix in canonical order, as a list of lists."""
        order = compositions_of(n)
        table = self.h_to_imm(n) if inverse else self.imm_to_h(n)
        return [[table[a][b] for b in order] for a in order]


TRANSITIONS = TransitionCache()


def H_to_immaculate(x, cache=None):
    cache = TRANSITIONS if cache is None else cache
    out = {}
    for beta, c in x.items():
        for alpha, d in cache.h_to_imm(beta.size)[beta].items():
            out[alpha] = out.get(alpha, 0) + c * d
    return LinComb(out)


def chi(x):
    """Forgetful map to Sym, keyed by partitions in the h basis."""
    return apply_linear(lambda a: LinComb.monomial(sort_to_partition(a)), x)
