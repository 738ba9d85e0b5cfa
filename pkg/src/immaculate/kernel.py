"""Sparse formal linear combinations with exact integer coefficients."""

import json
from collections.abc import Mapping
from dataclasses import dataclass

from .compositions import Composition, IntVector, display_key
from .config import KeyKindError

ALGEBRA_OF_BASIS = {
    "H": "NSym",
    "Imm": "NSym",
    "M": "QSym",
    "F": "QSym",
    "DImm": "QSym",
    "h": "Sym",
}


def _kind(key):
    if isinstance(key, Composition):
        return Composition
    if isinstance(key, IntVector):
        return IntVector
    raise KeyKindError(f"unsupported key {key!r}")


class LinComb(Mapping):
    """Immutable map key -> nonzero int. Missing keys read as 0.

    Iteration follows :func:`display_key`, so printing is deterministic.
    """

    __slots__ = ("_terms", "_kind", "_hash")

    def __init__(self, terms=None):
        data = {}
        kind = None
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                k = _kind(key)
                if kind is None:
                    kind = k
                elif k is not kind:
                    raise KeyKindError("mixed key kinds in one linear combination")
                if not isinstance(c, int):
                    raise TypeError(f"coefficient {c!r} is not an integer")
                c = data.get(key, 0) + c
                if c:
                    data[key] = c
                else:
                    data.pop(key, None)
        self._terms = dict(sorted(data.items(), key=lambda kv: display_key(kv[0])))
        self._kind = kind if data else None
        self._hash = None

    @classmethod
    def monomial(cls, key, coeff=1):
        return cls({key: coeff})

    def __getitem__(self, key):
        return self._terms.get(key, 0)

    def __contains__(self, key):
        return key in self._terms

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        inner = ", ".join(f"{list(k)}: {c}" for k, c in self._terms.items())
        return f"LinComb({{{inner}}})"

    @property
    def kind(self):
        return self._kind

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __rmul__(self, c):
        if isinstance(c, int):
            return scale(c, self)
        return NotImplemented

    def __mul__(self, c):
        if isinstance(c, int):
            return scale(c, self)
        return NotImplemented

    def degrees(self):
        return sorted({sum(k) for k in self._terms})

    def homogeneous_parts(self):
        parts = {}
        for k, c in self._terms.items():
            parts.setdefault(sum(k), {})[k] = c
        return {d: LinComb(t) for d, t in sorted(parts.items())}


ZERO = LinComb()


def add(a, b):
    if a._kind is not None and b._kind is not None and a._kind is not b._kind:
        raise KeyKindError("cannot add linear combinations over different key kinds")
    data = dict(a._terms)
    for k, c in b._terms.items():
        data[k] = data.get(k, 0) + c
    return LinComb(data)


def scale(c, a):
    if c == 0:
        return ZERO
    return LinComb({k: c * v for k, v in a._terms.items()})


def lsum(combs):
    data = {}
    kind = None
    for a in combs:
        if a._kind is not None:
            if kind is not None and a._kind is not kind:
                raise KeyKindError("cannot add linear combinations over different key kinds")
            kind = a._kind
        for k, c in a._terms.items():
            data[k] = data.get(k, 0) + c
    return LinComb(data)


def apply_linear(f, a):
    """Linear extension of ``f: key -> LinComb`` evaluated on ``a``."""
    data = {}
    for k, c in a.items():
        for k2, c2 in f(k).items():
            data[k2] = data.get(k2, 0) + c * c2
    return LinComb(data)


@dataclass(frozen=True)
class BasisElement:
    """A linear combination tagged with its algebra and display basis."""

    basis: str
    value: LinComb

    def __post_init__(self):
        if self.basis not in ALGEBRA_OF_BASIS:
            raise ValueError(f"unknown basis {self.basis!r}")
        if self.value.kind is IntVector:
            raise KeyKindError("basis elements are indexed by compositions")

    @property
    def algebra(self):
        return ALGEBRA_OF_BASIS[self.basis]

    @property
    def degree(self):
        degs = self.value.degrees()
        if len(degs) == 1:
            return degs[0]
        return 0 if not degs else "mixed"

    def to_json(self):
        return json.dumps(self.to_dict())

    def to_dict(self):
        return {"basis": self.basis, "terms": terms_to_list(self.value, str)}

    @classmethod
    def from_dict(cls, d):
        return cls(d["basis"], terms_from_list(d["terms"], Composition))

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def terms_to_list(value, coeff_type=str):
    return [{"index": list(k), "coeff": coeff_type(c)} for k, c in value.items()]


def terms_from_list(terms, key_type=Composition):
    return LinComb((key_type(t["index"]), int(t["coeff"])) for t in terms)
