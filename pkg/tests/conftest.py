import random

import pytest
from hypothesis import strategies as st

from ncblowup.elliptic_counting import Group, element_sum, has_infinite_order
from ncblowup.good_arrays import INF, GoodArray

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_good_array(rng, lo=-6, hi=6, top=6):
    base = rng.randint(0, 3)
    start = rng.randint(lo, hi)
    size = rng.randint(0, 8)
    vals = sorted(rng.randint(base, base + top) for _ in range(size))
    return GoodArray(base, start, tuple(vals))


@st.composite
def good_arrays(draw, base=None, max_len=7):
    b = draw(st.integers(0, 3)) if base is None else base
    start = draw(st.integers(-6, 4))
    steps = draw(st.lists(st.integers(0, 2), max_size=max_len))
    vals, cur = [], b
    for s in steps:
        cur += s
        vals.append(cur)
    return GoodArray(b, start, tuple(vals))


orbit_sizes = st.sampled_from([2, 3, 4, 5, 6, INF])


def random_configuration(rng, max_points=6):
    """Random group data with planted relations, ``tau = 3 sigma``.

    Returns ``(group, sigma, tau, points)``.
    """
    k = rng.randint(1, 3)
    tors = rng.choice([(), (), (2,), (3,)])
    g = Group(k, tors)

    def rnd():
        return g.element([rng.randint(-3, 3) for _ in range(k)] + [rng.randint(0, m - 1) for m in tors])

    sigma = rnd()
    while not has_infinite_order(sigma):
        sigma = rnd()
    tau = sigma * 3
    pts = []
    for _ in range(rng.randint(0, max_points)):
        c = rng.random()
        if pts and c < 0.3:
            pts.append(rng.choice(pts) + tau * rng.randint(-2, 2))
        elif len(pts) >= 2 and c < 0.6:
            a, b = rng.sample(pts, 2)
            pts.append(tau * rng.randint(-2, 2) - a - b)
        elif len(pts) >= 5 and c < 0.8:
            s = rng.sample(pts, 5)
            pts.append(tau * rng.randint(-3, 3) - element_sum(s, g.zero()))
        elif pts and c < 0.9:
            pts.append(tau * rng.randint(-2, 2) - rng.choice(pts) * 2)
        else:
            pts.append(rnd())
    return g, sigma, tau, pts


@pytest.fixture
def rng():
    return random.Random(20261016)
