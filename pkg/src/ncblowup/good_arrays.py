"""Right ideals of the local model ring, indexed by good arrays.

A good array is a non-decreasing ``Z``-indexed sequence with entries in
``N u {inf}`` which is constant (finite) far to the left and infinite far to
the right.  Every ideal-theoretic operation below acts on the array alone.

The orbit size ``n`` is a positive integer or ``INF``.  Simple labels are
residues mod ``n`` when ``n`` is finite and plain integers otherwise.
"""

from collections import Counter
from dataclasses import dataclass
import math

INF = math.inf


class InfinityMismatch(ValueError):
    """The two arrays are infinite at different positions."""


class NotComparable(ValueError):
    """The second array is not pointwise >= the first."""


class InfiniteLength(ValueError):
    """The quotient has infinitely many composition factors."""


def _check_entry(x):
    if x == INF:
        return INF
    if isinstance(x, bool) or not isinstance(x, int) or x < 0:
        raise ValueError(f"good array entries must be natural numbers or inf, got {x!r}")
    return x


def check_orbit_size(n):
    if n == INF:
        return INF
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"orbit size must be a positive integer or inf, got {n!r}")
    return n


def label(q, n):
    """The simple label of position ``q`` for orbit size ``n``."""
    return q if n == INF else q % n


def congruent(q, l, n):
    return q == l if n == INF else (q - l) % n == 0


@dataclass(frozen=True)
class GoodArray:
    """Canonical good array.

    ``a[q] == base`` for ``q < lo``, ``a[q] == values[q - lo]`` inside the
    window and ``a[q] == INF`` for ``q >= inf_from``.  The constructor
    canonicalizes: leading entries equal to ``base`` and trailing infinite
    entries are dropped, so equal arrays compare equal.
    """

    base: int
    lo: int
    values: tuple = ()

    def __post_init__(self):
        base = _check_entry(self.base)
        if base == INF:
            raise ValueError("a good array is finite far to the left")
        vals = [_check_entry(v) for v in self.values]
        prev = base
        for v in vals:
            if v < prev:
                raise ValueError(f"good array must be non-decreasing: {prev} > {v}")
            prev = v
        lo = self.lo
        while vals and vals[-1] == INF:
            vals.pop()
        k = 0
        while k < len(vals) and vals[k] == base:
            k += 1
        object.__setattr__(self, "lo", lo + k)
        object.__setattr__(self, "values", tuple(vals[k:]))

    @classmethod
    def from_function(cls, lo, hi, fn, base):
        """Build from ``fn(q)`` on ``[lo, hi)``; ``INF`` from ``hi`` on."""
        return cls(base, lo, tuple(fn(q) for q in range(lo, hi)))

    @property
    def inf_from(self):
        """First position with an infinite entry."""
        return self.lo + len(self.values)

    def __getitem__(self, q):
        if q < self.lo:
            return self.base
        if q >= self.inf_from:
            return INF
        return self.values[q - self.lo]

    def jumps(self):
        """Positions ``q`` with ``a[q] != a[q+1]``, ascending."""
        return [q for q in range(self.lo - 1, self.inf_from) if self[q] != self[q + 1]]

    def window(self, other=None):
        """A range of positions outside of which nothing can change."""
        lo, hi = self.lo, self.inf_from
        if other is not None:
            lo, hi = min(lo, other.lo), max(hi, other.inf_from)
        return range(lo - 1, hi + 1)

    def __str__(self):
        inner = ",".join("inf" if v == INF else str(v) for v in self.values)
        return f"(..,{self.base}|{self.lo}:{inner}|inf@{self.inf_from},..)"

    def to_json(self):
        return {
            "base": self.base,
            "lo": self.lo,
            "values": list(self.values),
            "inf_from": self.inf_from,
        }

    @classmethod
    def from_json(cls, obj):
        """Inverse of :meth:`to_json`.

        ``"inf"`` strings are accepted as entries; when ``inf_from`` is given
        the window is padded with ``base`` entries or truncated to it.
        """
        values = [INF if v == "inf" else v for v in obj.get("values", [])]
        lo = obj["lo"]
        if "inf_from" in obj:
            stop = obj["inf_from"]
            if stop < lo:
                raise ValueError("inf_from must not precede lo")
            values = values[: stop - lo]
            values += [values[-1] if values else obj["base"]] * (stop - lo - len(values))
        return cls(obj["base"], lo, tuple(values))


def from_sequence(seq, start, base=None):
    """Array whose entries from position ``start`` on are ``seq``, then inf."""
    seq = [INF if v == "inf" else v for v in seq]
    if base is None:
        base = seq[0] if seq else 0
    return GoodArray(base, start, tuple(seq))


def leq(a, b):
    """``a <= b`` pointwise, i.e. the ideal of ``b`` is contained in that of ``a``."""
    if a.base > b.base:
        return False
    return all(a[q] <= b[q] for q in a.window(b))


def _pointwise(a, b, op):
    w = a.window(b)
    return GoodArray(op(a.base, b.base), w.start, tuple(op(a[q], b[q]) for q in w))


def inf(a, b):
    """Pointwise minimum: the array of the sum of the two ideals."""
    return _pointwise(a, b, min)


def sup(a, b):
    """Pointwise maximum: the array of the intersection of the two ideals."""
    return _pointwise(a, b, max)


def quotient_factors(a, b, n):
    """Composition factors of ``P_a / P_b`` as a ``Counter`` of labels."""
    n = check_orbit_size(n)
    if a.inf_from != b.inf_from:
        raise InfinityMismatch(
            f"infinite entries start at {a.inf_from} and {b.inf_from}"
        )
    if not leq(a, b):
        raise NotComparable("second array must dominate the first pointwise")
    if a.base != b.base:
        raise InfiniteLength("arrays differ at every position far to the left")
    out = Counter()
    for q in range(min(a.lo, b.lo), a.inf_from):
        d = b[q] - a[q]
        if d:
            out[label(q, n)] += d
    return out


def length(factors):
    return sum(factors.values())


def mul_maximal(a, l, n):
    """Array of ``P_a m_l``."""
    n = check_orbit_size(n)
    w = a.window()
    return GoodArray.from_function(
        w.start,
        w.stop,
        lambda q: min(a[q + 1], a[q] + 1) if congruent(q, l, n) else a[q],
        a.base,
    )


def radical(a):
    """Array of ``rad P_a``: every jump position is raised by one."""
    w = a.window()
    return GoodArray.from_function(
        w.start, w.stop, lambda q: a[q] + 1 if a[q] != a[q + 1] else a[q], a.base
    )


def top(a, n):
    """``P_a / rad P_a``: one simple per jump position."""
    n = check_orbit_size(n)
    return Counter(label(q, n) for q in a.jumps())


def projective(i, n):
    """Array of the indecomposable projective ``e_i C_p``."""
    n = check_orbit_size(n)
    if n == 1:
        raise ValueError("projectives are described by good arrays only for n >= 2")
    return GoodArray(0, label(i, n) + 1)


def colength_contributions(p, n):
    """Per-projective lengths of ``P_i / P_i m_0 m_-1 ... m_-p+1``.

    For infinite ``n`` only projectives with ``-p+1 <= i <= 0`` can move;
    the scan covers that window plus one guard slot on each side.
    """
    n = check_orbit_size(n)
    if n == 1:
        raise ValueError("n = 1 has no array model; use length_colength")
    indices = range(n) if n != INF else range(-p, 2)
    out = {}
    for i in indices:
        a = projective(i, n)
        b = a
        for l in range(0, -p, -1):
            b = mul_maximal(b, l, n)
        out[i] = length(quotient_factors(a, b, n))
    return out


def length_colength(p, n):
    """``dim C_p / m_0 m_-1 ... m_-p+1``, which equals ``p(p+1)/2``."""
    n = check_orbit_size(n)
    if p < 0:
        raise ValueError("p must be a natural number")
    if p == 0:
        return 0
    if n == 1:
        # gr R has Hilbert series 1/(1-s)^2, so dim m^k/m^(k+1) = k+1
        return sum(k + 1 for k in range(p))
    contrib = colength_contributions(p, n)
    if n == INF and (contrib[-p] or contrib[1]):
        raise RuntimeError("guard band reached; window too small")
    return sum(contrib.values())
