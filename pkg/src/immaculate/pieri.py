"""Signed multiplicity-free Pieri rules for immaculate functions.

The central object is ``Z(s, alpha)``: integer vectors beta recording how the
index of F_s^perp changes as it is commuted past each Bernstein operator of
``Imm_alpha = B_{alpha_1} ... B_{alpha_m}(1)``. Grouping these vectors by
``comp(alpha - beta)`` gives a signed expansion with cancellations; the
closed-form coefficient :func:`coeff` removes them.

``skew_fundamental`` offers three independent routes to F_s^perp Imm_alpha:

* ``"theorem"``: the closed-form coefficient on every candidate gamma;
* ``"z_enum"``: depth-first enumeration of ``Z(s, alpha)`` and signed grouping;
* ``"duality"``: the pairing <Imm_alpha, F_s * DImm_gamma> computed in QSym.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from . import nsym, qsym
from .compositions import (
    Composition,
    CompositionError,
    IntVector,
    comp,
    compositions_of,
    compositions_of_length,
    is_partition,
    sgn,
    tail,
)
from .kernel import ZERO, LinComb, terms_to_list

METHODS = ("theorem", "z_enum", "duality")


class NotAPartitionError(ValueError):
    pass


@dataclass(frozen=True)
class ZCandidate:
    s: int
    alpha: Composition
    beta: IntVector


@dataclass(frozen=True)
class A3Anchor:
    k: int  # 1-based
    r: int


@dataclass(frozen=True)
class PieriExpansion:
    s: int
    alpha: Composition
    terms: LinComb = field(default_factory=LinComb)
    method: str = "theorem"

    def violations(self):
        """Terms breaking the +-1 coefficient rule or the length window."""
        m = len(self.alpha)
        bad = []
        for gamma, c in self.terms.items():
            if c not in (1, -1) or len(gamma) not in (m - 1, m):
                bad.append((gamma, c))
            elif gamma.size != self.alpha.size - self.s:
                bad.append((gamma, c))
        return bad

    def to_dict(self):
        return {
            "op": "skew_fundamental",
            "s": self.s,
            "alpha": list(self.alpha),
            "method": self.method,
            "terms": terms_to_list(self.terms, int),
        }


def is_in_Z(s, alpha, beta):
    """Direct evaluation of conditions (Z1), (Z2) and (Z3) on ``beta``."""
    alpha, beta = Composition(alpha), IntVector(beta)
    m = len(alpha)
    if len(beta) != m:
        raise CompositionError(f"beta has length {len(beta)}, alpha has length {m}")
    # (Z1)
    acc = 0
    for i, b in enumerate(beta):
        acc += b
        if i < m - 1 and acc > s:
            return False
    if acc != s:
        return False
    # (Z2)
    diffs = [a - b for a, b in zip(alpha, beta)]
    if any(d < 0 for d in diffs) or diffs.count(0) > 1:
        return False
    # (Z3)
    used = 0
    for i, (a, b) in enumerate(zip(alpha, beta)):
        rem = s - used
        if a > rem:
            if not 0 <= b <= rem:
                return False
        elif a == rem:
            if b == a:
                if any(beta[i + 1:]):
                    return False
            elif b >= 0:
                return False
        elif b >= 0:
            return False
        used += b
    return True


def enumerate_Z(s, alpha):
    """All beta in Z(s, alpha), lexicographically ordered."""
    alpha = Composition(alpha)
    m = len(alpha)
    suffix = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] + alpha[i]
    out = []

    def dfs(i, rem, prefix):
        if i == m:
            if rem == 0:
                out.append(IntVector(prefix))
            return
        a = alpha[i]
        # future entries are bounded by their parts, so they sum to at most suffix[i+1]
        low = rem - suffix[i + 1]
        if a > rem:
            choices = range(max(0, low), rem + 1)
        else:
            choices = range(low, 0)
        for b in choices:
            dfs(i + 1, rem - b, prefix + [b])
        if a == rem:
            # (Z3b1): the part is consumed and everything after is zero
            out.append(IntVector(prefix + [a] + [0] * (m - i - 1)))

    dfs(0, s, [])
    return sorted(out)


def a3_anchor(alpha, gamma):
    """The indices (k, r) attached to a gamma one part shorter than alpha."""
    alpha, gamma = Composition(alpha), Composition(gamma)
    m = len(alpha)
    if len(gamma) != m - 1:
        raise CompositionError("anchor needs len(gamma) == len(alpha) - 1")
    k = m
    # 1-based: alpha_i == gamma_{i-1} for all k < i <= m
    while k > 1 and alpha[k - 1] == gamma[k - 2]:
        k -= 1
    r = k
    while r < m and alpha[r - 1] < alpha[r]:
        r += 1
    return A3Anchor(k, r)


def _a3_chain(alpha, gamma, anchor):
    k, r = anchor.k, anchor.r
    m = len(alpha)
    prefix = [alpha[i] - gamma[i] for i in range(k - 1)]
    chain = []
    for t in range(r - k + 1):
        steps = [alpha[p] - alpha[p + 1] for p in range(k - 1, k - 1 + t)]
        v = prefix + steps + [alpha[k - 1 + t]]
        chain.append(IntVector(v + [0] * (m - len(v))))
    return chain


def _check_sizes(s, alpha, gamma):
    if gamma.size != alpha.size - s:
        raise CompositionError(
            f"|gamma| = {gamma.size} but |alpha| - s = {alpha.size - s}"
        )


def enumerate_Z_gamma(s, alpha, gamma):
    """The vectors of Z(s, alpha) with comp(alpha - beta) == gamma, in closed form."""
    alpha, gamma = Composition(alpha), Composition(gamma)
    _check_sizes(s, alpha, gamma)
    m = len(alpha)
    if len(gamma) == m:
        beta = IntVector(a - g for a, g in zip(alpha, gamma))
        return [beta] if is_in_Z(s, alpha, beta) else []
    if len(gamma) == m - 1:
        chain = _a3_chain(alpha, gamma, a3_anchor(alpha, gamma))
        return chain if is_in_Z(s, alpha, chain[0]) else []
    return []


def coeff(s, alpha, gamma):
    """Coefficient of Imm_gamma in F_s^perp Imm_alpha; always -1, 0 or 1."""
    alpha, gamma = Composition(alpha), Composition(gamma)
    _check_sizes(s, alpha, gamma)
    m = len(alpha)
    if len(gamma) == m:
        beta = IntVector(a - g for a, g in zip(alpha, gamma))
        return sgn(beta) if is_in_Z(s, alpha, beta) else 0
    if len(gamma) == m - 1:
        anchor = a3_anchor(alpha, gamma)
        if (anchor.r - anchor.k) % 2:
            return 0
        first = _a3_chain(alpha, gamma, anchor)[0]
        if not is_in_Z(s, alpha, first):
            return 0
        return sgn(first[: anchor.k - 1])
    return 0


def _theorem_terms(s, alpha):
    n, m = alpha.size, len(alpha)
    out = {}
    for length in (m - 1, m):
        if length < 0:
            continue
        for gamma in compositions_of_length(n - s, length):
            c = coeff(s, alpha, gamma)
            if c:
                out[gamma] = c
    return LinComb(out)


def _z_enum_terms(s, alpha):
    out = {}
    for beta in enumerate_Z(s, alpha):
        gamma = comp(a - b for a, b in zip(alpha, beta))
        out[gamma] = out.get(gamma, 0) + sgn(beta)
    return LinComb(out)


@lru_cache(maxsize=None)
def _fs_times_dual_immaculate(s, gamma):
    return qsym.qsym_mult(qsym.F_to_M(Composition((s,))), qsym.dual_immaculate_to_M(gamma))


def _duality_terms(s, alpha):
    n = alpha.size
    nsym.TRANSITIONS.imm_to_h(n)  # fail early above the cap
    imm = nsym.immaculate_to_H(alpha)
    out = {}
    for gamma in compositions_of(n - s):
        c = nsym.pairing(imm, _fs_times_dual_immaculate(s, gamma))
        if c:
            out[gamma] = c
    return LinComb(out)


_ROUTES = {"theorem": _theorem_terms, "z_enum": _z_enum_terms, "duality": _duality_terms}


def skew_fundamental(s, alpha, method="theorem"):
    """F_s^perp Imm_alpha in the immaculate basis."""
    alpha = Composition(alpha)
    if s < 1:
        raise ValueError("s must be a positive integer")
    if method not in _ROUTES:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    if s > alpha.size:
        return PieriExpansion(s, alpha, ZERO, method)
    return PieriExpansion(s, alpha, _ROUTES[method](s, alpha), method)


def skew_pieri_raw(r, alpha):
    """The formal expansion sum over beta in Z^m with i - m <= beta_i <= alpha_i
    and |beta| = |alpha| - r. Keys are IntVectors and need not be compositions."""
    alpha = Composition(alpha)
    m = len(alpha)
    lows = [i - m for i in range(1, m + 1)]
    target = alpha.size - r
    suffix_lo = [0] * (m + 1)
    suffix_hi = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix_lo[i] = suffix_lo[i + 1] + lows[i]
        suffix_hi[i] = suffix_hi[i + 1] + alpha[i]
    out = {}

    def dfs(i, left, prefix):
        if i == m:
            if left == 0:
                out[IntVector(prefix)] = 1
            return
        lo = max(lows[i], left - suffix_hi[i + 1])
        hi = min(alpha[i], left - suffix_lo[i + 1])
        for b in range(lo, hi + 1):
            dfs(i + 1, left - b, prefix + [b])

    dfs(0, target, [])
    return LinComb(out)


def skew_fundamental_combination(s, coords, method="theorem"):
    """F_s^perp applied to an element given by immaculate coordinates."""
    if s == 0:
        return coords
    out = {}
    for alpha, c in coords.items():
        for gamma, d in skew_fundamental(s, alpha, method).terms.items():
            out[gamma] = out.get(gamma, 0) + c * d
    return LinComb(out)


def left_pieri(s, alpha, method="theorem"):
    """Immaculate coordinates of H_s * Imm_alpha.

    ``"theorem"`` composes H_s = sum_r B_{s+r} F_r^perp with the skew rule;
    ``"H"`` multiplies in the H basis and converts back.
    """
    alpha = Composition(alpha)
    if s < 1:
        raise ValueError("s must be a positive integer")
    if method == "H":
        return nsym.H_to_immaculate(nsym.h_mult(nsym.H(s), nsym.immaculate_to_H(alpha)))
    if method != "theorem":
        raise ValueError(f"unknown method {method!r}")
    out = {Composition((s,)) + alpha: 1}
    for r in range(1, alpha.size + 1):
        for gamma, c in skew_fundamental(r, alpha).terms.items():
            out[Composition((s + r,)) + gamma] = c
    return LinComb(out)


def dual_pieri(s, alpha, method="theorem"):
    """Dual immaculate coordinates of F_s * DImm_alpha.

    The coefficient of DImm_beta is the coefficient of Imm_alpha in
    F_s^perp Imm_beta. ``"oracle"`` multiplies in the M basis instead.
    """
    alpha = Composition(alpha)
    if s < 1:
        raise ValueError("s must be a positive integer")
    if method == "oracle":
        prod = qsym.qsym_mult(qsym.F_to_M(Composition((s,))), qsym.dual_immaculate_to_M(alpha))
        return qsym.M_to_dual_immaculate(prod)
    if method != "theorem":
        raise ValueError(f"unknown method {method!r}")
    n, m = alpha.size + s, len(alpha)
    out = {}
    for length in (m, m + 1):
        for beta in compositions_of_length(n, length):
            c = coeff(s, beta, alpha)
            if c:
                out[beta] = c
    return LinComb(out)


def transfer_check(r, s, alpha, beta):
    """Both sides of <Imm_alpha, F_s DImm_beta> = <H_r Imm_alpha, DImm_(s+r, beta)>."""
    alpha, beta = Composition(alpha), Composition(beta)
    if r < 1 or s < 0:
        raise ValueError("need r > 0 and s >= 0")
    if alpha.size != beta.size + s:
        raise CompositionError(f"|alpha| = {alpha.size} but |beta| + s = {beta.size + s}")
    dimm = qsym.dual_immaculate_to_M(beta)
    prod = dimm if s == 0 else qsym.qsym_mult(qsym.F_to_M(Composition((s,))), dimm)
    lhs = qsym.M_to_dual_immaculate(prod)[alpha]
    rhs = left_pieri(r, alpha)[Composition((s + r,)) + beta]
    return lhs, rhs


def partition_skew(s, lam):
    """F_s^perp Imm_lambda for a partition lambda; every coefficient is 0 or 1."""
    lam = Composition(lam)
    if not is_partition(lam):
        raise NotAPartitionError(
            f"{list(lam)} is not a partition; use skew_fundamental for compositions"
        )
    if s < 1:
        raise ValueError("s must be a positive integer")
    first = lam[0] if lam else 0
    if first < s:
        return PieriExpansion(s, lam, ZERO)
    if first == s:
        return PieriExpansion(s, lam, LinComb.monomial(tail(lam)))
    exp = skew_fundamental(s, lam)
    if any(c != 1 for c in exp.terms.values()):
        raise ArithmeticError(f"negative coefficient for the partition {list(lam)}")
    return exp
