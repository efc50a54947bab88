import pytest
from hypothesis import given, settings

from sacts import act_isomorphic, brute_force_count, count_acts, enumerate_acts, theta
from sacts.core import MixedMonoids, coproduct, regular_act
from sacts.enumeration import act_key, canonical_act, iso_classes_by_search

from helpers import monoid, permuted_acts

# raw counts, pinned by brute_force_count (see test_frozen_counts_match_bruteforce)
RAW = {
    "trivial": [1, 1, 1, 1, 1],
    "S2": [1, 3, 10, 41, 196],
    "C2": [1, 2, 4, 10, 26],
}
# iso classes, pinned by pairwise isomorphism search for n <= 4
ISO = {
    "S2": [1, 2, 3, 5, 7, 11],
    "C2": [1, 2, 2, 3, 3, 4],
    "C3": [1, 1, 2, 2, 2, 3],
}


def test_trivial_monoid_has_one_act_per_size():
    assert count_acts(monoid("trivial"), 2) == 1


def test_single_theta_over_s2():
    acts = list(enumerate_acts(monoid("S2"), 1))
    assert len(acts) == 1 and acts[0] == theta(monoid("S2"))


def test_s2_size_two():
    m = monoid("S2")
    assert count_acts(m, 2) == brute_force_count(m, 2) == 3


@pytest.mark.parametrize("spec", sorted(RAW))
def test_frozen_counts_match_bruteforce(spec):
    m = monoid(spec)
    for n, expected in enumerate(RAW[spec], start=1):
        if n * m.size > 9:
            break
        assert brute_force_count(m, n) == expected
        assert count_acts(m, n) == expected


@pytest.mark.parametrize("spec", sorted(ISO))
def test_iso_counts(spec):
    m = monoid(spec)
    got = [count_acts(m, n, up_to_iso=True) for n in range(1, len(ISO[spec]) + 1)]
    assert got == ISO[spec]


def test_enumerated_tables_are_distinct_and_valid():
    from sacts import validate_act
    m = monoid("cyclic_monoid(2,1)")
    seen = set()
    for a in enumerate_acts(m, 4):
        validate_act(m, a.action)
        seen.add(a.action)
    assert len(seen) == count_acts(m, 4)


def test_revlex_order_gives_same_set():
    m = monoid("RZ2")
    lex = [a.action for a in enumerate_acts(m, 3)]
    rev = [a.action for a in enumerate_acts(m, 3, order="revlex")]
    assert sorted(lex) == sorted(rev) and len(lex) == len(set(lex))


@pytest.mark.parametrize("spec", ["S2", "C2", "cyclic_monoid(2,1)", "RZ2", "LZ2"])
def test_iso_partition_small(spec):
    m = monoid(spec)
    for n in range(1, 4):
        reps = list(enumerate_acts(m, n, up_to_iso=True))
        raw = list(enumerate_acts(m, n))
        classes = iso_classes_by_search(raw)
        assert len(classes) == len(reps)
        for r in raw:
            assert sum(act_isomorphic(r, x) for x in reps) == 1


def test_act_isomorphic_examples():
    m = monoid("S2")
    t2 = coproduct([theta(m), theta(m)])[0]
    assert act_isomorphic(t2, t2)
    assert not act_isomorphic(t2, regular_act(m))
    with pytest.raises(MixedMonoids):
        act_isomorphic(t2, theta(monoid("C2")))


@settings(max_examples=80, deadline=None)
@given(permuted_acts())
def test_canonical_key_is_a_complete_invariant(data):
    a, b, _ = data
    assert act_key(a) == act_key(b)
    assert act_isomorphic(a, b)
    c = canonical_act(a.monoid, a.size, act_key(a))
    assert act_isomorphic(a, c)
