from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import good_arrays, orbit_sizes
from ncblowup.good_arrays import (
    INF,
    GoodArray,
    InfiniteLength,
    InfinityMismatch,
    NotComparable,
    colength_contributions,
    from_sequence,
    inf,
    label,
    length,
    length_colength,
    leq,
    mul_maximal,
    projective,
    quotient_factors,
    radical,
    sup,
    top,
)

# (..,0,0,1,1,1,3,inf,..) with the first inf at position 2
EXAMPLE = from_sequence([0, 1, 1, 1, 3], -3)
SPAN = range(-40, 40)


def pointwise(a):
    return [a[q] for q in SPAN]


def zero_array(first_inf):
    return GoodArray(0, first_inf)


class TestCanonicalForm:
    def test_example_entries(self):
        assert [EXAMPLE[q] for q in range(-5, 4)] == [0, 0, 0, 1, 1, 1, 3, INF, INF]
        assert EXAMPLE.inf_from == 2
        assert EXAMPLE.lo == -2

    def test_padding_is_dropped(self):
        padded = GoodArray(0, -9, (0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 3, INF, INF))
        assert padded == EXAMPLE

    def test_rejects_decreasing(self):
        with pytest.raises(ValueError):
            GoodArray(0, 0, (2, 1))
        with pytest.raises(ValueError):
            GoodArray(3, 0, (1,))

    def test_rejects_infinite_base(self):
        with pytest.raises(ValueError):
            GoodArray(INF, 0)

    @given(good_arrays())
    def test_equality_is_pointwise(self, a):
        b = GoodArray(a.base, a.lo - 3, (a.base,) * 3 + a.values + (INF, INF))
        assert a == b
        assert pointwise(a) == pointwise(b)

    @given(good_arrays())
    def test_json_round_trip(self, a):
        assert GoodArray.from_json(a.to_json()) == a

    def test_json_accepts_inf_strings(self):
        doc = {"base": 0, "lo": -2, "values": [1, 1, 1, 3, "inf"], "inf_from": 2}
        assert GoodArray.from_json(doc) == EXAMPLE


class TestOrder:
    def test_reflexive(self):
        a = zero_array(1)
        assert leq(a, a)

    def test_pointwise(self):
        assert leq(zero_array(1), GoodArray(0, 0, (1,)))

    def test_projectives(self):
        # proj(0) is infinite from 1 on, proj(1) from 2 on
        assert leq(projective(1, 3), projective(0, 3))
        assert not leq(projective(0, 3), projective(1, 3))
        assert all(projective(1, 3)[q] <= projective(0, 3)[q] for q in SPAN)

    @given(good_arrays(), good_arrays())
    def test_matches_pointwise_oracle(self, a, b):
        assert leq(a, b) == all(x <= y for x, y in zip(pointwise(a), pointwise(b)))


class TestLattice:
    def test_idempotent_example(self):
        assert inf(EXAMPLE, EXAMPLE) == EXAMPLE
        assert sup(EXAMPLE, EXAMPLE) == EXAMPLE

    @pytest.mark.parametrize("n", [2, 3, INF])
    def test_sup_of_projectives(self, n):
        assert sup(projective(0, n), projective(1, n)) == projective(0, n)

    def test_inf_with_zero_array(self):
        z = zero_array(2)
        got = inf(EXAMPLE, z)
        assert pointwise(got) == [min(EXAMPLE[q], z[q]) for q in SPAN]
        assert got == z

    @given(good_arrays(), good_arrays())
    def test_pointwise_oracle(self, a, b):
        assert pointwise(inf(a, b)) == [min(x, y) for x, y in zip(pointwise(a), pointwise(b))]
        assert pointwise(sup(a, b)) == [max(x, y) for x, y in zip(pointwise(a), pointwise(b))]

    @given(good_arrays(), good_arrays(), good_arrays())
    def test_laws(self, a, b, c):
        assert inf(a, b) == inf(b, a) and sup(a, b) == sup(b, a)
        assert inf(inf(a, b), c) == inf(a, inf(b, c))
        assert sup(sup(a, b), c) == sup(a, sup(b, c))
        assert inf(a, sup(a, b)) == a and sup(a, inf(a, b)) == a
        assert leq(inf(a, b), a) and leq(a, sup(a, b))
        assert leq(a, b) == (inf(a, b) == a) == (sup(a, b) == b)

    @given(good_arrays(), good_arrays(), good_arrays())
    def test_order_is_partial(self, a, b, c):
        if leq(a, b) and leq(b, a):
            assert a == b
        if leq(a, b) and leq(b, c):
            assert leq(a, c)


class TestQuotientFactors:
    def test_same_array(self):
        assert quotient_factors(EXAMPLE, EXAMPLE, INF) == Counter()

    def test_single_jump(self):
        a = zero_array(1)
        b = GoodArray(0, 0, (1,))
        assert quotient_factors(a, b, INF) == Counter({0: 1})

    def test_labels_reduce_mod_n(self):
        a = zero_array(4)
        b = GoodArray(0, 0, (1, 2, 2, 3))
        # jumps of size 1,2,2,3 at q = 0,1,2,3
        assert quotient_factors(a, b, INF) == Counter({0: 1, 1: 2, 2: 2, 3: 3})
        assert quotient_factors(a, b, 3) == Counter({0: 4, 1: 2, 2: 2})

    def test_errors(self):
        with pytest.raises(InfinityMismatch):
            quotient_factors(zero_array(1), zero_array(2), INF)
        with pytest.raises(NotComparable):
            quotient_factors(GoodArray(0, 0, (1,)), zero_array(1), INF)
        with pytest.raises(InfiniteLength):
            quotient_factors(zero_array(1), GoodArray(1, 1), INF)

    @given(st.data(), orbit_sizes)
    def test_second_isomorphism(self, data, n):
        base = data.draw(st.integers(0, 2))
        a = data.draw(good_arrays(base=base))
        b = data.draw(good_arrays(base=base))
        if a.inf_from < b.inf_from:
            a, b = b, a
        lhs = quotient_factors(inf(a, b), a, n)
        rhs = quotient_factors(b, sup(a, b), n)
        assert lhs == rhs

    @given(st.data(), orbit_sizes)
    def test_length_additive(self, data, n):
        a = data.draw(good_arrays())
        extra_b = data.draw(st.lists(st.integers(0, 2), min_size=len(a.values), max_size=len(a.values)))
        extra_c = data.draw(st.lists(st.integers(0, 2), min_size=len(a.values), max_size=len(a.values)))
        b = _raise(a, extra_b)
        c = _raise(b, extra_c)
        assert b.inf_from == a.inf_from == c.inf_from
        ab, bc, ac = (quotient_factors(x, y, n) for x, y in ((a, b), (b, c), (a, c)))
        assert length(ac) == length(ab) + length(bc)
        assert ac == ab + bc


def _raise(a, bumps):
    """Add cumulative bumps inside the window; stays a good array with the same inf locus."""
    vals, acc = [], 0
    for v, d in zip(a.values, bumps):
        acc += d
        vals.append(v + acc)
    return GoodArray(a.base, a.lo, tuple(vals))


class TestMulMaximal:
    def test_flat_class_is_unchanged(self):
        a = GoodArray(0, 3, (1, 1, 1, 1))  # jumps at 2 and 6 only
        assert mul_maximal(a, 1, 2) == a

    def test_example(self):
        c = mul_maximal(EXAMPLE, 0, INF)
        assert c[0] == 2
        assert [c[q] for q in SPAN if q != 0] == [EXAMPLE[q] for q in SPAN if q != 0]

    @given(good_arrays(), st.integers(-8, 8), orbit_sizes)
    def test_formula(self, a, l, n):
        c = mul_maximal(a, l, n)
        for q in SPAN:
            hit = q == l if n == INF else (q - l) % n == 0
            assert c[q] == (min(a[q + 1], a[q] + 1) if hit else a[q])

    @given(good_arrays(), st.integers(-8, 8), orbit_sizes)
    def test_smaller_ideal_supported_on_l(self, a, l, n):
        c = mul_maximal(a, l, n)
        assert leq(a, c)
        f = quotient_factors(a, c, n)
        assert set(f) <= {label(l, n)}


class TestRadicalAndTop:
    def test_single_jump(self):
        a = GoodArray(2, 5, (2,))  # constant 2, infinite from 5
        r = radical(a)
        assert [r[q] for q in range(0, 7)] == [2, 2, 2, 2, 2, 3, INF]

    def test_example_radical(self):
        r = radical(EXAMPLE)
        bumped = {q for q in SPAN if r[q] != EXAMPLE[q]}
        assert bumped == {1, 0, -3}
        assert all(r[q] == EXAMPLE[q] + 1 for q in bumped)

    def test_example_top(self):
        assert top(EXAMPLE, INF) == Counter({1: 1, 0: 1, -3: 1})
        assert top(EXAMPLE, 3) == Counter({0: 2, 1: 1})

    @pytest.mark.parametrize("n", [2, 3, 7, INF])
    @pytest.mark.parametrize("i", [-4, 0, 1, 5])
    def test_top_of_projective(self, i, n):
        assert top(projective(i, n), n) == Counter({label(i, n): 1})

    @given(good_arrays(), orbit_sizes)
    def test_radical_is_intersection(self, a, n):
        r = radical(a)
        assert pointwise(r) == [max(a[q], min(a[q + 1], a[q] + 1)) for q in SPAN]
        joined = a
        for l in a.jumps():
            joined = sup(joined, mul_maximal(a, l, n))
        assert joined == r

    @given(good_arrays(), orbit_sizes)
    def test_top_is_quotient_by_radical(self, a, n):
        assert quotient_factors(a, radical(a), n) == top(a, n)


class TestProjective:
    def test_infinite_orbit(self):
        p = projective(0, INF)
        assert [p[q] for q in range(-3, 4)] == [0, 0, 0, 0, INF, INF, INF]

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_periodic(self, n):
        for i in range(-6, 6):
            assert projective(i + n, n) == projective(i, n)

    def test_rejects_fixed_point(self):
        with pytest.raises(ValueError):
            projective(0, 1)


class TestColength:
    @pytest.mark.parametrize("n", [1, 2, 3, 7, INF])
    def test_one_maximal_ideal(self, n):
        assert length_colength(1, n) == 1

    def test_reported_values(self):
        assert length_colength(4, 3) == 10
        assert length_colength(7, INF) == 28

    def test_empty_product(self):
        assert length_colength(0, 3) == 0

    def test_guard_band_is_silent(self):
        for p in range(1, 10):
            c = colength_contributions(p, INF)
            assert c[-p] == 0 and c[1] == 0
            assert [c[i] for i in range(-p + 1, 1)] == list(range(1, p + 1))

    @settings(max_examples=50)
    @given(st.integers(1, 12), st.sampled_from([1, 2, 3, 4, 5, 6, INF]))
    def test_formula(self, p, n):
        assert length_colength(p, n) == p * (p + 1) // 2

    @pytest.mark.parametrize("n", [2, 3, 5, INF])
    def test_uniserial_layers(self, n):
        # layer t of the exceptional curve: m_0...m_(1-t) / m_0...m_(-t) has length t+1
        for t in range(0, 10):
            assert length_colength(t + 1, n) - length_colength(t, n) == t + 1
