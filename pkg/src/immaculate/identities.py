"""Operator identities between Bernstein operators B_m and F_r^perp.

Each function takes an H-expansion ``x`` and returns ``(lhs, rhs)``. Sums
over i >= something are finite on any fixed ``x`` because F_r^perp kills
everything of degree below r, so they are cut at ``deg(x)``.
"""

from .kernel import lsum
from .nsym import bernstein_apply, fperp_row, left_H


def _top(x):
    return max((k.size for k in x), default=0)


def _B(m, x):
    return bernstein_apply(m, x)


def _BF(i, r, x):
    # B_i F_r^perp x
    return _B(i, fperp_row(r, x))


def skew_past_bernstein(r, m, x):
    """F_r^perp B_m = sum_{j=0}^r B_{m-j} F_{r-j}^perp, any integer m."""
    lhs = fperp_row(r, _B(m, x))
    rhs = lsum(_BF(m - j, r - j, x) for j in range(r + 1))
    return lhs, rhs


def left_multiplication(m, x):
    """H_m x = sum_{r>=0} B_{m+r} F_r^perp x."""
    return left_H(m, x), lsum(_BF(m + r, r, x) for r in range(_top(x) + 1))


def resolution_of_identity(x):
    """sum_{i>=0} B_i F_i^perp = Id."""
    return x, lsum(_BF(i, i, x) for i in range(_top(x) + 1))


def vanishing_sum(s, x):
    """sum_{i>=-s} B_i F_{i+s}^perp = 0 for s > 0."""
    lhs = lsum(_BF(i, i + s, x) for i in range(-s, _top(x) + 1))
    return lhs, lhs - lhs


def bernstein_zero(x):
    """B_0 = Id - sum_{i>=1} B_i F_i^perp."""
    return _B(0, x), x - lsum(_BF(i, i, x) for i in range(1, _top(x) + 1))


def bernstein_negative(s, x):
    """B_{-s} = -sum_{i>-s} B_i F_{i+s}^perp for s > 0."""
    return _B(-s, x), -lsum(_BF(i, i + s, x) for i in range(-s + 1, _top(x) + 1))


def skew_bernstein_large_m(r, m, x):
    """The commutation rule restricted to m > r."""
    if not m > r:
        raise ValueError("needs m > r")
    return skew_past_bernstein(r, m, x)


def skew_bernstein_equal(m, x):
    """F_m^perp B_m = Id - sum_{i>=1} B_{m+i} F_{m+i}^perp for m > 0."""
    lhs = fperp_row(m, _B(m, x))
    return lhs, x - lsum(_BF(m + i, m + i, x) for i in range(1, _top(x) + 1))


def skew_bernstein_small_m(r, m, x):
    """F_r^perp B_m = -sum_{i>=1} B_{m+i} F_{r+i}^perp for 0 < m < r."""
    if not m < r:
        raise ValueError("needs m < r")
    lhs = fperp_row(r, _B(m, x))
    return lhs, -lsum(_BF(m + i, r + i, x) for i in range(1, _top(x) + 1))


IDENTITIES = {
    "skew_past_bernstein": skew_past_bernstein,
    "left_multiplication": left_multiplication,
    "resolution_of_identity": resolution_of_identity,
    "vanishing_sum": vanishing_sum,
    "bernstein_zero": bernstein_zero,
    "bernstein_negative": bernstein_negative,
    "skew_bernstein_large_m": skew_bernstein_large_m,
    "skew_bernstein_equal": skew_bernstein_equal,
    "skew_bernstein_small_m": skew_bernstein_small_m,
}


def parameter_grid(name, bound=4):
    """Integer parameter tuples for each identity, not counting ``x``."""
    rng = range(1, bound + 1)
    if name == "skew_past_bernstein":
        return [(r, m) for r in range(bound + 1) for m in range(-bound, bound + 1)]
    if name == "left_multiplication":
        return [(m,) for m in range(-bound, bound + 1)]
    if name in ("resolution_of_identity", "bernstein_zero"):
        return [()]
    if name in ("vanishing_sum", "bernstein_negative"):
        return [(s,) for s in rng]
    if name == "skew_bernstein_large_m":
        return [(r, m) for r in range(bound + 1) for m in rng if m > r]
    if name == "skew_bernstein_equal":
        return [(m,) for m in rng]
    if name == "skew_bernstein_small_m":
        return [(r, m) for r in range(bound + 1) for m in rng if m < r]
    raise KeyError(name)
