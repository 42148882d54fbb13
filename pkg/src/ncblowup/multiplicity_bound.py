"""Integral points in a ball/half-space intersection.

For a profile ``(e, r)`` with ``sum(r) == 3e`` and ``f = e - 1`` the ball is

    B = {a : sum a_i (a_i + 1) / 2 <= f (f + 3) / 2}

and the open half-space is ``H = {a : sum r_i a_i > e f}``.  An integral
point of ``B & H`` rules the profile out as the multiplicity data of a
simple object.  All decisions use integer arithmetic; halves are cleared by
doubling both sides of the ball inequality.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import logging
import math
import os

log = logging.getLogger(__name__)


class HypothesisViolated(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Profile:
    e: int
    r: tuple

    def __post_init__(self):
        r = tuple(sorted((x for x in self.r if x), reverse=True))
        if self.e < 1:
            raise ValueError("multiplicity must be positive")
        if any(x < 0 for x in r):
            raise ValueError("multiplicities must be natural numbers")
        if not r:
            raise ValueError("profile needs at least one nonzero multiplicity")
        object.__setattr__(self, "r", r)

    @property
    def m(self):
        return len(self.r)

    @property
    def on_cubic(self):
        """Whether ``sum(r) == 3e``, as for a curve of degree three."""
        return sum(self.r) == 3 * self.e

    def to_json(self):
        return {"e": self.e, "r": list(self.r)}


@dataclass(frozen=True)
class Witness:
    f: int
    a: tuple

    def to_json(self):
        return {"f": self.f, "a": list(self.a)}


def in_ball(a, f):
    return sum(x * (x + 1) for x in a) <= f * (f + 3)


def in_halfspace(a, r, e, f):
    return sum(ri * ai for ri, ai in zip(r, a)) >= e * f + 1


def is_witness(profile, w):
    return (
        len(w.a) == profile.m
        and in_ball(w.a, w.f)
        and in_halfspace(w.a, profile.r, profile.e, w.f)
    )


def check_inequality(e, f, r, a):
    """Evaluate ``e f >= sum r_i a_i`` on one instance.

    Raises :class:`HypothesisViolated` unless ``f < e`` and ``a`` lies in
    the ball.  Negative ``a_i`` are accepted: folding ``b -> -b - 1`` keeps
    the ball term and does not decrease the half-space term.
    """
    if len(r) != len(a):
        raise ValueError("r and a must have the same length")
    if f >= e:
        raise HypothesisViolated(f"need f < e, got f={f}, e={e}")
    if not in_ball(a, f):
        raise HypothesisViolated("sum a(a+1)/2 exceeds f(f+3)/2")
    return e * f >= sum(ri * ai for ri, ai in zip(r, a))


def fold_negative(b):
    """The map ``b_i -> -b_i - 1`` on negative entries."""
    return tuple(x if x >= 0 else -x - 1 for x in b)


def _ceil_sqrt(n):
    s = math.isqrt(n)
    return s if s * s == n else s + 1


def search_radius(f, m):
    """``1 + ceil(sqrt(f(f+3) + m/4))``: every ball point has ``|a_i|`` below it."""
    s = _ceil_sqrt(4 * f * (f + 3) + m)  # ceil(2 * sqrt(f(f+3) + m/4))
    return 1 + (s + 1) // 2


def _suffix_best(r, budget, radius):
    """``best[i][B]`` = max of ``sum_{j>=i} r_j a_j`` with doubled cost <= B."""
    m = len(r)
    best = [[0] * (budget + 1) for _ in range(m + 1)]
    for i in range(m - 1, -1, -1):
        nxt, row = best[i + 1], best[i]
        for b in range(budget + 1):
            top = 0
            for x in range(0, radius + 1):
                c = x * (x + 1)
                if c > b:
                    break
                top = max(top, r[i] * x + nxt[b - c])
            row[b] = top
    return best


def find_witness(profile):
    """Lexicographically smallest weakly decreasing witness, or ``None``.

    Restricting to weakly decreasing ``a`` loses nothing: the ball is
    permutation invariant and, ``r`` being weakly decreasing, sorting ``a``
    the same way cannot lower ``sum r_i a_i``.
    """
    r, e = profile.r, profile.e
    f = e - 1
    budget = f * (f + 3)
    need = e * f + 1
    radius = search_radius(f, profile.m)
    best = _suffix_best(r, budget, radius)
    m = len(r)
    a = [0] * m

    def dfs(i, spent, value, cap):
        if i == m:
            return value >= need
        if value + best[i][budget - spent] < need:
            return False
        for x in range(-radius, cap + 1):
            c = x * (x + 1)
            if spent + c > budget:
                continue
            a[i] = x
            if dfs(i + 1, spent + c, value + r[i] * x, x):
                return True
        return False

    if dfs(0, 0, 0, radius):
        return Witness(f, tuple(a))
    return None


def e_bound_holds(e, m):
    """``(e-1)(e+2) / ((e/3 + 7/6)^2 - 1/4) <= m`` in exact arithmetic."""
    e = Fraction(e)
    return (e - 1) * (e + 2) / ((e / 3 + Fraction(7, 6)) ** 2 - Fraction(1, 4)) <= m


def geometric_e_bound(m):
    """Largest ``e`` that the ball-diameter estimate leaves open for ``m``.

    The left side of the estimate tends to 9 from below, so for ``m >= 9``
    there is no bound and a ``ValueError`` is raised.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if m >= 9:
        raise ValueError(f"no finite multiplicity bound for m = {m} >= 9")
    e = 1
    while e_bound_holds(e + 1, m):
        e += 1
    return e


def partitions_exact(total, parts, largest=None):
    """Weakly decreasing tuples of ``parts`` positive integers summing to ``total``."""
    if largest is None:
        largest = total
    if parts == 0:
        if total == 0:
            yield ()
        return
    for x in range(min(largest, total - parts + 1), 0, -1):
        if x * parts < total:
            break
        for rest in partitions_exact(total - x, parts - 1, x):
            yield (x,) + rest


def candidate_profiles(m_max):
    """All profiles with at most ``m_max`` parts inside the multiplicity bound."""
    out = []
    for m in range(1, m_max + 1):
        for e in range(1, geometric_e_bound(m) + 1):
            for r in partitions_exact(3 * e, m):
                out.append(Profile(e, r))
    return sorted(out)


LINE_PROFILE = Profile(1, (1, 1, 1))


@dataclass(frozen=True)
class Verdict:
    profile: Profile
    witness: Witness | None
    e_bound: int
    reason: str

    @property
    def survives(self):
        return self.reason in ("no witness", "line module")

    def to_json(self):
        return {
            "profile": self.profile.to_json(),
            "witness": self.witness.to_json() if self.witness else None,
            "e_bound": self.e_bound,
            "reason": self.reason,
        }


def judge(profile):
    """Decide one candidate profile.

    For ``e == 1`` the ball forces ``a`` into ``{-1, 0}`` and gives nothing;
    multiplicity-one objects are line modules, whose only profile is
    ``(1, 1, 1)``.
    """
    bound = geometric_e_bound(profile.m)
    if profile.e == 1:
        reason = "line module" if profile == LINE_PROFILE else "not a line profile"
        return Verdict(profile, None, bound, reason)
    w = find_witness(profile)
    return Verdict(profile, w, bound, "witness" if w else "no witness")


def _workers():
    try:
        return max(1, int(os.environ.get("NCBLOWUP_THREADS", "1")))
    except ValueError:
        return 1


def survey(m_max, workers=None):
    """Verdicts on every candidate profile, sorted by ``(e, r)``."""
    profiles = candidate_profiles(m_max)
    workers = workers or _workers()
    log.info("judging %d profiles with %d worker(s)", len(profiles), workers)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            verdicts = list(pool.map(judge, profiles, chunksize=8))
    else:
        verdicts = [judge(p) for p in profiles]
    return sorted(verdicts, key=lambda v: v.profile)


def enumerate_survivors(m_max, workers=None):
    """Profiles with at most ``m_max`` parts that no witness rules out."""
    return [v.profile for v in survey(m_max, workers) if v.survives]
