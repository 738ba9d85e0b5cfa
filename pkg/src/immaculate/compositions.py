"""Compositions, integer vectors and descent sets.

Compositions are tuples of positive integers. Two orders are used in this
package:

* the *canonical* enumeration order of :func:`compositions_of`, which is
  reverse lexicographic (``[n]`` first, ``[1]*n`` last) and indexes the rows
  and columns of every transition matrix;
* the *display* order of :func:`display_key`, graded by size and then
  lexicographic, which is the order terms are printed and serialised in.
  Within one degree it is exactly the reverse of the canonical order.
"""

from dataclasses import dataclass
from itertools import combinations

from .config import CompositionError, IncomparableError, settings


class Composition(tuple):
    """An immutable sequence of strictly positive integers."""

    __slots__ = ()

    def __new__(cls, parts=()):
        if isinstance(parts, Composition):
            return parts
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise CompositionError(f"part {p!r} is not an integer")
            if p < 1:
                raise CompositionError(f"parts must be positive, got {list(parts)}")
            if p > settings.part_cap:
                raise CompositionError(f"part {p} exceeds cap {settings.part_cap}")
        self = super().__new__(cls, parts)
        if sum(parts) > settings.part_cap:
            raise CompositionError(f"size {sum(parts)} exceeds cap {settings.part_cap}")
        return self

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def __repr__(self):
        return f"Composition({list(self)})"

    def __add__(self, other):
        # concatenation stays a composition when both sides are
        if isinstance(other, Composition):
            return Composition(tuple(self) + tuple(other))
        return tuple(self) + tuple(other)


class IntVector(tuple):
    """An immutable integer vector with entries of any sign."""

    __slots__ = ()

    def __new__(cls, entries=()):
        if isinstance(entries, IntVector):
            return entries
        entries = tuple(entries)
        for e in entries:
            if not isinstance(e, int) or isinstance(e, bool):
                raise CompositionError(f"entry {e!r} is not an integer")
        return super().__new__(cls, entries)

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def __repr__(self):
        return f"IntVector({list(self)})"


@dataclass(frozen=True)
class DescentSet:
    n: int
    elements: tuple

    def __post_init__(self):
        els = tuple(self.elements)
        if any(b <= a for a, b in zip(els, els[1:])):
            raise CompositionError(f"descent elements must increase: {els}")
        if els and (els[0] < 1 or els[-1] > self.n - 1):
            raise CompositionError(f"descents {els} not inside 1..{self.n - 1}")
        object.__setattr__(self, "elements", els)


def descent_set(alpha):
    alpha = Composition(alpha)
    sums, acc = [], 0
    for p in alpha[:-1]:
        acc += p
        sums.append(acc)
    return DescentSet(alpha.size, tuple(sums))


def subset_to_composition(d):
    if d.n == 0:
        return Composition()
    points = (0,) + d.elements + (d.n,)
    return Composition(b - a for a, b in zip(points, points[1:]))


def refines(alpha, beta):
    """True iff ``alpha <= beta`` in refinement order (D(beta) is inside D(alpha))."""
    alpha, beta = Composition(alpha), Composition(beta)
    if alpha.size != beta.size:
        raise IncomparableError(f"{list(alpha)} and {list(beta)} have different sizes")
    return set(descent_set(beta).elements) <= set(descent_set(alpha).elements)


def compositions_of(n):
    """All compositions of ``n`` in canonical (reverse lexicographic) order."""
    if n < 0:
        raise CompositionError("n must be non-negative")
    if n == 0:
        return [Composition()]
    out = []
    for first in range(n, 0, -1):
        for rest in compositions_of(n - first):
            out.append(Composition((first,) + rest))
    return out


def compositions_of_length(n, length):
    """Compositions of ``n`` with exactly ``length`` parts, lexicographic."""
    if length == 0:
        return [Composition()] if n == 0 else []
    if n < length:
        return []
    out = []
    for cuts in combinations(range(1, n), length - 1):
        points = (0,) + cuts + (n,)
        out.append(Composition(b - a for a, b in zip(points, points[1:])))
    return out


def refinements(alpha):
    """All beta with beta <= alpha, i.e. D(beta) containing D(alpha)."""
    alpha = Composition(alpha)
    n = alpha.size
    if n == 0:
        return [Composition()]
    fixed = set(descent_set(alpha).elements)
    free = [i for i in range(1, n) if i not in fixed]
    out = []
    for k in range(len(free) + 1):
        for extra in combinations(free, k):
            out.append(subset_to_composition(DescentSet(n, tuple(sorted(fixed | set(extra))))))
    return out


def partitions_of(n, largest=None):
    """Partitions of ``n`` as weakly decreasing compositions."""
    if largest is None:
        largest = n
    if n == 0:
        return [Composition()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append(Composition((first,) + rest))
    return out


def is_partition(alpha):
    return all(a >= b for a, b in zip(alpha, alpha[1:]))


def tail(alpha):
    if len(alpha) == 0:
        raise CompositionError("tail of the empty composition")
    return Composition(alpha[1:])


def comp(v):
    """Delete the zero entries of a non-negative vector."""
    v = tuple(v)
    if any(x < 0 for x in v):
        raise CompositionError(f"comp() of a vector with negative entries: {list(v)}")
    return Composition(x for x in v if x != 0)


def neg(v):
    return sum(1 for x in v if x < 0)


def sgn(v):
    return -1 if neg(v) % 2 else 1


def sort_to_partition(alpha):
    return Composition(sorted(alpha, reverse=True))


def display_key(key):
    return (sum(key), tuple(key))
