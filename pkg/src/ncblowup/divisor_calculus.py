"""Divisors on tau-orbits and the partition invariants of transversal objects.

Points are ``OrbitPoint(orbit, offset)``, standing for ``tau^offset p`` where
``p`` is the chosen representative of the orbit.  The curve itself is never
represented.
"""

from collections.abc import Mapping
from typing import NamedTuple


class NegativeCoefficient(ValueError):
    pass


class FiniteOrbitError(ValueError):
    pass


class OrbitPoint(NamedTuple):
    orbit: str
    offset: int

    def shift(self, k):
        return OrbitPoint(self.orbit, self.offset + k)


class Divisor(Mapping):
    """Finitely supported integer combination of orbit points.

    Zero coefficients are dropped, so two divisors are equal iff they agree
    at every point.
    """

    def __init__(self, coeffs=()):
        data = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for pt, c in items:
            pt = OrbitPoint(*pt)
            data[pt] = data.get(pt, 0) + c
        self._data = {pt: c for pt, c in data.items() if c}

    def __getitem__(self, pt):
        return self._data.get(OrbitPoint(*pt), 0)

    def __iter__(self):
        return iter(sorted(self._data))

    def __len__(self):
        return len(self._data)

    def __contains__(self, pt):
        return OrbitPoint(*pt) in self._data

    def __eq__(self, other):
        if isinstance(other, Divisor):
            return self._data == other._data
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._data.items()))

    def __repr__(self):
        inner = ", ".join(f"({p.orbit!r},{p.offset}): {c}" for p, c in self.items())
        return f"Divisor({{{inner}}})"

    def __add__(self, other):
        return Divisor(list(self.items()) + list(other.items()))

    def __sub__(self, other):
        return Divisor(list(self.items()) + [(p, -c) for p, c in other.items()])

    def degree(self):
        return sum(self._data.values())

    def orbits(self):
        return sorted({p.orbit for p in self._data})

    def restrict(self, orbit):
        return Divisor((p, c) for p, c in self._data.items() if p.orbit == orbit)

    def to_json(self):
        out = {}
        for p, c in self.items():
            out.setdefault(p.orbit, {})[str(p.offset)] = c
        return {"orbits": out}

    @classmethod
    def from_json(cls, obj):
        return cls(
            (OrbitPoint(o, int(k)), c)
            for o, coeffs in obj["orbits"].items()
            for k, c in coeffs.items()
        )


def point(orbit, offset=0):
    return Divisor({OrbitPoint(orbit, offset): 1})


def div_after_simple_quotient(d, q):
    """Divisor of the kernel of ``F -> O_q``: ``d - (q) + (tau^-1 q)``."""
    q = OrbitPoint(*q)
    return d - point(*q) + point(*q.shift(-1))


def div_after_pullback(d, q):
    """Divisor after the pullback move at ``q``: ``d - (q) + (tau q)``."""
    q = OrbitPoint(*q)
    return d - point(*q) + point(*q.shift(1))


class Move(NamedTuple):
    kind: str  # "quotient" or "pullback"
    source: OrbitPoint
    target: OrbitPoint


def normalize(d, orbit, infinite=True):
    """Concentrate the mass of ``d`` on ``orbit`` at offset 0.

    Positive offsets are walked down one step at a time by simple-quotient
    moves, negative offsets up by pullback moves, always moving a unit from
    the currently most extreme offset.  Returns ``(divisor, moves)``.
    """
    if not infinite:
        raise FiniteOrbitError("normalization is only defined on infinite orbits")
    for p, c in d.items():
        if p.orbit == orbit and c < 0:
            raise NegativeCoefficient(f"coefficient {c} at {p}")
    moves = []
    while True:
        live = [p for p in d if p.orbit == orbit and p.offset > 0]
        if not live:
            break
        q = max(live, key=lambda p: p.offset)
        d = div_after_simple_quotient(d, q)
        moves.append(Move("quotient", q, q.shift(-1)))
    while True:
        live = [p for p in d if p.orbit == orbit and p.offset < 0]
        if not live:
            break
        q = min(live, key=lambda p: p.offset)
        d = div_after_pullback(d, q)
        moves.append(Move("pullback", q, q.shift(1)))
    return d, moves


def is_normalized(d, orbit):
    return all(p.offset == 0 for p in d if p.orbit == orbit)


def replay(d, moves):
    """Apply a move log to ``d``."""
    for mv in moves:
        step = div_after_simple_quotient if mv.kind == "quotient" else div_after_pullback
        d = step(d, mv.source)
    return d


# Partitions are plain tuples of positive integers, weakly decreasing.

def check_partition(t):
    t = tuple(t)
    for x in t:
        if isinstance(x, bool) or not isinstance(x, int) or x <= 0:
            raise ValueError(f"partition parts must be positive integers: {t}")
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"partition must be weakly decreasing: {t}")
    return t


def as_partition(parts):
    """Sort and drop zero parts."""
    return tuple(sorted((x for x in parts if x), reverse=True))


def conjugate(t):
    t = check_partition(t)
    if not t:
        return ()
    return tuple(sum(1 for x in t if x >= j) for j in range(1, t[0] + 1))


def loewy_length(t):
    """Smallest ``l`` with ``m^l T = 0``; the largest part."""
    t = check_partition(t)
    return t[0] if t else 0


def strict_transform_T(t):
    """``m T``: every cyclic summand ``R/m^k`` becomes ``R/m^(k-1)``."""
    t = check_partition(t)
    return tuple(x - 1 for x in t if x > 1)


def pushforward_l_bound(l_before):
    """Upper bound on the Loewy length after pushing forward."""
    if l_before < 0:
        raise ValueError("Loewy length is a natural number")
    return l_before + 1


def row_vector(t, lo=-3, hi=2):
    """Completed module as a row vector: ``T`` at positions ``<= 0``, else 0."""
    t = check_partition(t)
    name = "T" if t else "0"
    cells = [name if i <= 0 else "0" for i in range(lo, hi + 1)]
    return "(... " + " ".join(cells) + " ...)"
