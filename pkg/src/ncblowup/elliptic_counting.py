"""Group-law counting of exceptional simple objects.

Points of the curve are elements of a finitely generated abelian group
``Z^k x Z/m_1 x ... x Z/m_t``, with the group law normalized so that three
collinear points sum to zero.  All counting depends only on the linear
relations between the marked points and ``tau``.
"""

from dataclasses import dataclass
from itertools import combinations, product
import logging

log = logging.getLogger(__name__)


class TooManyPoints(ValueError):
    pass


@dataclass(frozen=True)
class Group:
    rank: int
    torsion: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.rank < 0 or any(m < 2 for m in self.torsion):
            raise ValueError("torsion orders must be >= 2 and rank >= 0")

    def element(self, coords):
        """Element from a flat list: ``rank`` free coordinates, then residues."""
        coords = tuple(coords)
        if len(coords) != self.rank + len(self.torsion):
            raise ValueError(
                f"expected {self.rank + len(self.torsion)} coordinates, got {len(coords)}"
            )
        free = coords[: self.rank]
        tors = tuple(c % m for c, m in zip(coords[self.rank:], self.torsion))
        return GroupElement(free, tors, self.torsion)

    def zero(self):
        return self.element([0] * (self.rank + len(self.torsion)))


@dataclass(frozen=True)
class GroupElement:
    free: tuple
    tors: tuple = ()
    orders: tuple = ()

    def __add__(self, other):
        return GroupElement(
            tuple(x + y for x, y in zip(self.free, other.free)),
            tuple((x + y) % m for x, y, m in zip(self.tors, other.tors, self.orders)),
            self.orders,
        )

    def __neg__(self):
        return GroupElement(
            tuple(-x for x in self.free),
            tuple(-x % m for x, m in zip(self.tors, self.orders)),
            self.orders,
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        return GroupElement(
            tuple(k * x for x in self.free),
            tuple(k * x % m for x, m in zip(self.tors, self.orders)),
            self.orders,
        )

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.free) and not any(self.tors)

    def coords(self):
        return list(self.free) + list(self.tors)


def has_infinite_order(g):
    return any(g.free)


def element_sum(elems, zero):
    total = zero
    for g in elems:
        total = total + g
    return total


def tau_multiple(g, tau):
    """``j`` with ``g == j * tau``, or ``None``."""
    if not has_infinite_order(tau):
        raise ValueError("tau must have infinite order")
    k = next(i for i, x in enumerate(tau.free) if x)
    j, rem = divmod(g.free[k], tau.free[k])
    if rem:
        return None
    return j if (tau * j) == g else None


def same_orbit(p, q, tau):
    """``j`` with ``q == p + j * tau``, or ``None``."""
    return tau_multiple(q - p, tau)


@dataclass(frozen=True)
class CurveModel:
    group: Group
    tau: GroupElement
    points: tuple
    sigma_points: tuple | None = None

    def __post_init__(self):
        if not has_infinite_order(self.tau):
            raise ValueError("tau must have infinite order")
        if len(self.points) > 8:
            raise ValueError("at most 8 blowup points")

    @classmethod
    def from_json(cls, obj):
        g = Group(obj["rank"], tuple(obj.get("torsion", [])))
        sig = obj.get("sigma_points")
        return cls(
            g,
            g.element(obj["tau"]),
            tuple(g.element(p) for p in obj.get("points", [])),
            tuple(g.element(p) for p in sig) if sig is not None else None,
        )

    def to_json(self):
        out = {
            "rank": self.group.rank,
            "torsion": list(self.group.torsion),
            "tau": self.tau.coords(),
            "points": [p.coords() for p in self.points],
        }
        if self.sigma_points is not None:
            out["sigma_points"] = [p.coords() for p in self.sigma_points]
        return out


@dataclass(frozen=True)
class OrbitProfile:
    """Representatives, multiplicities ``z`` and the orbit index of each point."""

    reps: tuple
    z: tuple
    orbit_of: tuple

    @property
    def occupied(self):
        return sum(1 for x in self.z if x)


def orbit_profile(points, tau):
    """Group points into tau-orbits, first-seen point as representative."""
    reps, z, orbit_of = [], [], []
    for p in points:
        for idx, rep in enumerate(reps):
            if same_orbit(rep, p, tau) is not None:
                z[idx] += 1
                orbit_of.append(idx)
                break
        else:
            reps.append(p)
            z.append(1)
            orbit_of.append(len(reps) - 1)
    return OrbitProfile(tuple(reps), tuple(z), tuple(orbit_of))


def weighted_sum(y, reps, zero):
    total = zero
    for c, p in zip(y, reps):
        total = total + p * c
    return total


def vectors_below(z, n):
    """All ``y <= z`` componentwise with ``|y| == n``, in lexicographic order."""
    for y in product(*(range(c + 1) for c in z)):
        if sum(y) == n:
            yield y


def members_Hn_below(z, reps, n, tau):
    """``y <= z`` with ``|y| == n`` and ``N(y)`` in ``Z tau``."""
    if not reps:
        return []
    zero = reps[0] * 0
    return [
        y for y in vectors_below(z, n)
        if tau_multiple(weighted_sum(y, reps, zero), tau) is not None
    ]


def split_in_H3(y, h3):
    """A pair ``(y1, y2)`` from ``h3`` with ``y1 + y2 == y``, or ``None``."""
    h3set = set(h3)
    for y1 in h3:
        y2 = tuple(a - b for a, b in zip(y, y1))
        if min(y2) >= 0 and y2 in h3set:
            return y1, y2
    return None


@dataclass(frozen=True)
class ABCount:
    A: tuple
    H6: tuple
    B: tuple
    splits: dict

    def to_json(self):
        return {
            "A": [list(y) for y in self.A],
            "H6": [list(y) for y in self.H6],
            "B": [list(y) for y in self.B],
        }


def count_A_B(z, reps, tau):
    """The sets ``A_z`` and ``B_z`` with the decomposition found for each excluded ``y``."""
    if sum(z) > 6:
        log.warning("|z| = %d exceeds 6; counting anyway", sum(z))
    a = members_Hn_below(z, reps, 3, tau)
    h6 = members_Hn_below(z, reps, 6, tau)
    splits = {y: split_in_H3(y, a) for y in h6}
    b = [y for y in h6 if splits[y] is None]
    return ABCount(tuple(a), tuple(h6), tuple(b), splits)


def count_exceptional_simples(points, tau):
    """``n + |A_z| + |B_z| - O`` for at most six points."""
    n = len(points)
    if n > 6:
        raise TooManyPoints(f"the count is only known for n <= 6, got {n}")
    if n == 0:
        return 0
    prof = orbit_profile(points, tau)
    ab = count_A_B(prof.z, prof.reps, tau)
    return n + len(ab.A) + len(ab.B) - prof.occupied


def k0_rank_recursion(z, orbit):
    """One blowup step at ``orbit``: ``(z + e_orbit, adds_Z)``.

    The extra ``Z`` summand appears exactly when ``z`` already covers the
    orbit.
    """
    z = list(z)
    adds = z[orbit] >= 1
    z[orbit] += 1
    return tuple(z), adds


def k0_chain(points, tau):
    """Rank of ``K_0`` after all blowups, built one point at a time.

    Starts from ``z = 0`` and applies :func:`k0_rank_recursion` for the
    points in reverse order, then adds ``|A_z| + |B_z|`` for the final ``z``.
    Returns ``(rank, steps)``.
    """
    prof = orbit_profile(points, tau)
    z = tuple(0 for _ in prof.reps)
    steps = []
    extra = 0
    for j in reversed(range(len(points))):
        z, adds = k0_rank_recursion(z, prof.orbit_of[j])
        steps.append({"point": j, "orbit": prof.orbit_of[j], "z": list(z), "adds_Z": adds})
        extra += adds
    if z != prof.z:
        raise AssertionError("chain did not reach the orbit profile")
    if not points:
        return 0, steps
    ab = count_A_B(z, prof.reps, tau)
    return extra + len(ab.A) + len(ab.B), steps


@dataclass(frozen=True)
class GPReport:
    ok: bool
    failed: str | None = None
    subset: tuple | None = None
    note: str | None = None

    def to_json(self):
        return {
            "ok": self.ok,
            "failed": self.failed,
            "subset": list(self.subset) if self.subset is not None else None,
            "note": self.note,
        }


def general_position(points):
    """Distinct, no three summing to 0 (a line), no six summing to 0 (a conic).

    Subsets are reported 1-based.  The extra condition for eight points
    involves singular cubics and cannot be decided from group data.
    """
    n = len(points)
    if n > 8:
        raise ValueError("general position is defined for at most 8 points")
    for i, j in combinations(range(n), 2):
        if points[i] == points[j]:
            return GPReport(False, "distinct", (i + 1, j + 1))
    zero = points[0] * 0 if points else None
    for size, name in ((3, "line"), (6, "conic")):
        for sub in combinations(range(n), size):
            if element_sum((points[i] for i in sub), zero).is_zero():
                return GPReport(False, name, tuple(i + 1 for i in sub))
    note = "singular-cubic condition for n = 8 not checkable in this model" if n == 8 else None
    return GPReport(True, note=note)
