from itertools import product

import pytest
from hypothesis import given, strategies as st

from quivercone import DomainError, SetTuple, enumerate_settuples, expand, from_flag, height, leg_extend, loop_quiver, subselect, to_flag, weight
from quivercone.battery import dimension_vectors
from quivercone.settuples import flags_below, is_flag_type


def st1(s, d):
    return SetTuple((tuple(s),), (d,))


def test_weight():
    assert weight(SetTuple.full((2, 0, 3))) == (2, 0, 3)
    assert weight(SetTuple.empty((2, 3))) == (0, 0)
    assert weight(st1((2, 3), 3)) == (2,)


def test_height_examples():
    k = SetTuple.full((3, 2))
    for l in enumerate_settuples(weight(k)):
        assert height(k, l) == 0
    assert height(st1((2, 4), 4), st1((1, 2), 2)) == 3
    assert height(st1((2, 4), 4), st1((), 2)) == 0


def test_height_bound_mismatch():
    with pytest.raises(DomainError):
        height(st1((2, 4), 4), st1((1,), 3))


def test_subselect_examples():
    k = st1((2, 5, 6), 6)
    assert subselect(k, SetTuple.full((3,))) == k
    assert subselect(k, st1((1, 3), 3)) == st1((2, 6), 6)
    assert subselect(k, st1((), 3)) == st1((), 6)


def test_settuple_validation():
    with pytest.raises(DomainError):
        st1((3, 2), 3)
    with pytest.raises(DomainError):
        st1((4,), 3)


def test_to_flag_examples():
    ext = leg_extend(loop_quiver(1), (3,))
    assert to_flag(SetTuple.full((3,)), ext) == ext.hat
    assert to_flag(st1((), 3)) == ((0, 0, 0),)
    assert to_flag(st1((2, 3), 3)) == ((0, 1, 2),)
    assert to_flag(SetTuple.full((2, 1, 3))) == ((1, 2), (1,), (1, 2, 3))


def test_from_flag_examples():
    assert from_flag(((1, 2, 3),)) == SetTuple.full((3,))
    assert from_flag(((0, 0, 0),)) == st1((), 3)
    assert from_flag(((1, 1, 2),)) == st1((1, 3), 3)
    with pytest.raises(DomainError):
        from_flag(((0, 2, 2),))


def test_expand_examples():
    e = to_flag(st1((2, 3), 3))
    assert expand(e, to_flag(st1((2,), 2))) == to_flag(st1((3,), 3))
    hat = ((1, 2, 3),)
    f = ((0, 1, 1),)
    assert expand(hat, f) == f
    assert expand(e, ((1, 2),)) == e


def test_expand_rejects_bad_shapes():
    with pytest.raises(DomainError):
        expand(((0, 1, 2),), ((1, 2, 3),))
    with pytest.raises(DomainError):
        expand(((0, 1, 2),), ((2, 2),))


def test_enumeration_counts_and_order():
    assert list(enumerate_settuples((1,))) == [st1((), 1), st1((1,), 1)]
    assert len(list(enumerate_settuples((2,)))) == 4
    assert len(list(enumerate_settuples((1, 1)))) == 4
    assert len(set(enumerate_settuples((2, 1, 3)))) == 2 ** 6
    assert [k.sets[0] for k in enumerate_settuples((3,))][:5] == [(), (1,), (2,), (1, 2), (3,)]


def test_render():
    names = ("i", "j")
    assert SetTuple(((1, 2), (3,)), (2, 3)).render(names) == "{i: 1,2; j: 3}"
    assert SetTuple(((), (3,)), (2, 3)).render(names) == "{j: 3}"
    assert SetTuple.empty((2, 3)).render(names) == "∅"


SMALL_D = [d for n in (1, 2, 3) for d in dimension_vectors(n, 8) if sum(d) <= 8]


@pytest.mark.parametrize("d", [d for d in SMALL_D if sum(d) <= 8][::3])
def test_flag_round_trip_exhaustive(d):
    for k in enumerate_settuples(d):
        assert from_flag(to_flag(k)) == k
    hat = to_flag(SetTuple.full(d))
    flags = list(flags_below(hat))
    assert len(flags) == 2 ** sum(d)
    for e in flags:
        assert is_flag_type(e)
        assert to_flag(from_flag(e)) == e


@pytest.mark.parametrize("d", [d for d in SMALL_D if sum(d) <= 6])
def test_expansion_identity_and_height_bounds(d):
    for k in enumerate_settuples(d):
        w = weight(k)
        for l in enumerate_settuples(w):
            kl = subselect(k, l)
            assert expand(to_flag(k), to_flag(l)) == to_flag(kl)
            assert weight(kl) == weight(l)
            h = height(k, l)
            assert 0 <= h <= sum(len(ls) * (di - len(ks)) for ls, di, ks in zip(l.sets, d, k.sets))


@given(st.lists(st.integers(0, 5), min_size=1, max_size=3), st.data())
def test_complement_is_involution(d, data):
    ks = list(enumerate_settuples(d))
    k = data.draw(st.sampled_from(ks))
    c = k.complement()
    assert c.complement() == k
    assert tuple(a + b for a, b in zip(weight(k), weight(c))) == tuple(d)
