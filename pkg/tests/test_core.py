from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from sacts import (
    Act, Hom, all_subacts, amalgam, coproduct, generated_subact, hom_queries, homomorphisms,
    lattice, parse_spec, rees_quotient, regular_act, theta, validate_act, validate_monoid,
)
from sacts.catalog import catalog
from sacts.core import (
    CompatibilityFails, EmptyGenerators, IdentityActionFails, IdentityLawFails, MixedMonoids,
    NotAssociative, NotClosed, NotProper, Subact, bits, homomorphisms_bruteforce, subact_as_act,
)
from sacts.enumeration import act_isomorphic
from sacts.predicates import decompose

from helpers import acts, act_with_subacts, monoid, small_acts

S2_TABLE = [[0, 1], [1, 1]]   # 0 is the identity "1", 1 is the zero "0"


def s2():
    return monoid("S2")


def labelled(act, names):
    return act.subact_by_labels(names)


def theta_sum(m, k):
    return coproduct([theta(m)] * k)[0]


# -- monoids -------------------------------------------------------------------------

def test_trivial_monoid():
    m = validate_monoid([[0]], 0)
    assert m.size == 1 and m.identity == 0


def test_s2_is_a_monoid():
    m = validate_monoid(S2_TABLE, 0, ["1", "0"])
    assert m.mul(1, 0) == 1 and m.mul(1, 1) == 1


def test_broken_identity_row():
    with pytest.raises(IdentityLawFails):
        validate_monoid([[1, 1], [1, 1]], 0)


def test_non_associative_table_reports_witness():
    # x*y = 1 - x on {0, 1, 2} with 2 as identity is not associative
    table = [[1, 1, 0], [0, 0, 1], [0, 1, 2]]
    with pytest.raises(NotAssociative) as exc:
        validate_monoid(table, 2)
    s, t, u = exc.value.witness
    assert table[table[s][t]][u] != table[s][table[t][u]]


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n),
    st.integers(0, n - 1))))
def test_validate_monoid_matches_axioms(args):
    n, table, e = args
    ident = all(table[e][s] == s and table[s][e] == s for s in range(n))
    assoc = all(table[table[s][t]][u] == table[s][table[t][u]] for s, t, u in product(range(n), repeat=3))
    try:
        validate_monoid(table, e)
        ok = True
    except (IdentityLawFails, NotAssociative):
        ok = False
    assert ok == (ident and assoc)


@pytest.mark.parametrize("spec", [str(s) for s in catalog()])
def test_catalog_monoids_validate(spec):
    m = parse_spec(spec).build()
    validate_monoid(m.table, m.identity)
    assert m.size <= 4 or spec.startswith("full_transformation")


def test_catalog_sizes():
    sizes = {str(s): s.build().size for s in catalog()}
    assert sizes["full_transformation(3)"] == 27
    assert sizes["full_transformation(2)"] == 4
    assert sizes["min_chain(3)"] == 4


# -- acts ----------------------------------------------------------------------------

@pytest.mark.parametrize("spec", [str(s) for s in catalog()])
def test_theta_valid_over_every_monoid(spec):
    m = parse_spec(spec).build()
    t = theta(m)
    assert validate_act(m, t.action) == t


def test_regular_s2_act():
    m = s2()
    a = validate_act(m, S2_TABLE)
    assert a.action == regular_act(m).action


def test_identity_must_act_trivially():
    with pytest.raises(IdentityActionFails):
        validate_act(s2(), [[1, 1], [1, 1]])


def test_compatibility_failure():
    # a*0 = b, b*0 = a breaks (a*0)*0 = a*(0*0)
    with pytest.raises(CompatibilityFails) as exc:
        validate_act(s2(), [[0, 1], [1, 0]])
    a, s, t = exc.value.witness
    assert a in (0, 1)


def test_generated_subact_examples():
    a = regular_act(s2())
    assert generated_subact(a, [1]).labels == ["0"]
    assert generated_subact(a, [0]).mask == a.full
    assert generated_subact(a, a.elements).mask == a.full
    with pytest.raises(EmptyGenerators):
        generated_subact(a, [])


def test_all_subacts_examples():
    m = s2()
    t2 = theta_sum(m, 2)
    assert [s.labels for s in all_subacts(t2)] == [["θ1"], ["θ2"], ["θ1", "θ2"]]
    assert [s.labels for s in all_subacts(regular_act(m))] == [["0"], ["1", "0"]]
    assert len(all_subacts(theta(m))) == 1


def test_make_subact_rejects_non_closed():
    a = regular_act(s2())
    with pytest.raises(NotClosed):
        a.subact_by_labels(["1"])


@settings(max_examples=60, deadline=None)
@given(act_with_subacts(2))
def test_union_and_intersection_closed(data):
    a, b, c = data
    L = lattice(a)
    assert (b | c) in L.subacts
    meet = b & c
    assert meet == 0 or meet in L.subacts


@settings(max_examples=60, deadline=None)
@given(acts(), st.data())
def test_generated_is_least_subact(a, data):
    L = lattice(a)
    gens = data.draw(st.sets(st.sampled_from(list(a.elements)), min_size=1))
    g = generated_subact(a, gens).mask
    mask = sum(1 << x for x in gens)
    containing = [s for s in L.subacts if s & mask == mask]
    inter = a.full
    for s in containing:
        inter &= s
    assert g == inter


@settings(max_examples=60, deadline=None)
@given(acts())
def test_lattice_union_closed_and_contains_cyclics(a):
    L = lattice(a)
    subs = set(L.subacts)
    assert all(x | y in subs for x in subs for y in subs)
    assert all(L.cyclic[x] & s == L.cyclic[x] for s in subs for x in bits(s))
    # brute force over every subset
    closed = [mask for mask in range(1, a.full + 1)
              if all(L.cyclic[x] & mask == L.cyclic[x] for x in bits(mask))]
    assert sorted(subs) == closed


# -- Rees quotients ----------------------------------------------------------------

def test_rees_s2_by_zero():
    a = regular_act(s2())
    q, pi = rees_quotient(a, labelled(a, ["0"]))
    assert q.size == 2 and pi.is_epi
    assert act_isomorphic(q, a)
    assert q.labels[-1] == "θ"


def test_rees_by_whole_is_theta():
    a = theta_sum(s2(), 2)
    q, pi = rees_quotient(a, a.whole())
    assert q.size == 1 and set(pi.map) == {0}


def test_rees_theta3():
    m = s2()
    a = theta_sum(m, 3)
    q, _ = rees_quotient(a, labelled(a, ["θ1", "θ2"]))
    assert q.labels == ("θ3", "θ")
    assert act_isomorphic(q, theta_sum(m, 2))


def test_rees_zero_label_stays_unique():
    m = s2()
    a, _ = coproduct([regular_act(m), theta(m)])
    q, _ = rees_quotient(a, labelled(a, ["0"]))
    assert len(set(q.labels)) == q.size


@settings(max_examples=60, deadline=None)
@given(act_with_subacts(1))
def test_rees_preimage_of_zero_is_b(data):
    a, b = data
    q, pi = rees_quotient(a, Subact(a, b))
    zero = q.size - 1
    assert pi.preimage(1 << zero).mask == b
    assert pi.is_epi and pi.is_equivariant()
    validate_act(q.monoid, q.action)


# -- coproducts and amalgams -------------------------------------------------------

def test_coproduct_thetas():
    m = s2()
    t2, inj = coproduct([theta(m), theta(m)])
    assert t2.size == 2 and t2.labels == ("θ1", "θ2")
    assert all(h.is_mono for h in inj)
    assert theta_sum(m, 3).size == 3


def test_coproduct_s2_theta_lattice():
    m = s2()
    a, _ = coproduct([regular_act(m), theta(m)])
    # bitset order: elements are 1, 0, θ
    assert [s.labels for s in all_subacts(a)] == [["0"], ["1", "0"], ["θ"], ["0", "θ"], ["1", "0", "θ"]]


def test_coproduct_mixed_monoids():
    with pytest.raises(MixedMonoids):
        coproduct([theta(s2()), theta(monoid("C2"))])


@settings(max_examples=40, deadline=None)
@given(acts())
def test_coproduct_of_components_rebuilds_act(a):
    pieces = [subact_as_act(c) for c in decompose(a)]
    rebuilt, _ = coproduct(pieces)
    assert act_isomorphic(rebuilt, a)


def test_amalgam_s2():
    a = regular_act(s2())
    am = amalgam(a, labelled(a, ["0"]))
    assert am.labels == ("0", "1_a", "1_b")
    assert am.action == ((0, 0), (1, 0), (2, 0))
    validate_act(am.monoid, am.action)


def test_amalgam_theta2():
    a = theta_sum(s2(), 2)
    am = amalgam(a, labelled(a, ["θ1"]))
    assert am.labels == ("θ1", "θ2_a", "θ2_b")
    assert act_isomorphic(am, theta_sum(s2(), 3))


def test_amalgam_needs_proper_subact():
    a = regular_act(s2())
    with pytest.raises(NotProper):
        amalgam(a, a.whole())


@settings(max_examples=40, deadline=None)
@given(act_with_subacts(1))
def test_amalgam_is_valid(data):
    a, b = data
    if b == a.full:
        return
    am = amalgam(a, Subact(a, b))
    validate_act(am.monoid, am.action)
    assert am.size == 2 * a.size - bin(b).count("1")


# -- homomorphisms -------------------------------------------------------------------

def test_homs_from_theta_are_fixed_points():
    m = s2()
    a, _ = coproduct([regular_act(m), theta(m)])
    homs = homomorphisms(theta(m), a)
    fixed = [x for x in a.elements if len(set(a.action[x])) == 1]
    assert sorted(h.map[0] for h in homs) == fixed


def test_s2_endomorphisms():
    a = regular_act(s2())
    homs = homomorphisms(a, a)
    assert [h.map for h in homs] == [(0, 1), (1, 1)]


def test_hom_queries():
    a = regular_act(s2())
    const = Hom(a, a, (1, 1))
    q = hom_queries(const)
    assert q["image"].labels == ["0"] and not q["is_epi"] and not q["is_mono"]
    _, pi = rees_quotient(a, labelled(a, ["0"]))
    assert hom_queries(pi)["is_epi"]
    assert const.restrict(labelled(a, ["0"])).map == (1,)


def test_preimage_may_be_empty():
    m = s2()
    a, inj = coproduct([theta(m), theta(m)])
    h = Hom(theta(m), a, (0,))
    assert h.preimage(labelled(a, ["θ2"])).is_empty


def _pairs(limit):
    pool = [x for x in small_acts(3) if x.monoid.size <= 4]
    for x in pool:
        for y in pool:
            if x.monoid == y.monoid and x.size * y.size <= limit:
                yield x, y


def test_homomorphisms_match_bruteforce():
    checked = 0
    for x, y in _pairs(12):
        fast = [h.map for h in homomorphisms(x, y)]
        slow = sorted(h.map for h in homomorphisms_bruteforce(x, y))
        assert fast == slow
        assert len(set(fast)) == len(fast)
        checked += 1
    assert checked > 100


@settings(max_examples=40, deadline=None)
@given(acts(3), acts(3))
def test_homs_are_equivariant(x, y):
    if x.monoid != y.monoid:
        with pytest.raises(MixedMonoids):
            homomorphisms(x, y)
        return
    assert all(h.is_equivariant() for h in homomorphisms(x, y))
