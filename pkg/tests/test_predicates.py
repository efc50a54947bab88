import pytest
from hypothesis import given, settings

from sacts import amalgam, coproduct, lattice, regular_act, theta
from sacts import predicates as P
from sacts.core import NotProper, Subact
from sacts.catalog import catalog

from helpers import acts, act_with_subacts, monoid


def s2_act():
    return regular_act(monoid("S2"))


def thetas(k, spec="S2"):
    return coproduct([theta(monoid(spec))] * k)[0]


def sub(act, *names):
    return act.subact_by_labels(names)


def s2_amalgam():
    a = s2_act()
    return amalgam(a, sub(a, "0"))


# -- superfluous / coessential / cover ----------------------------------------------

def test_superfluous_examples():
    t2 = thetas(2)
    v = P.is_superfluous(t2, sub(t2, "θ1"))
    assert not v and v.witness.labels == ["θ2"]
    a = s2_act()
    assert P.is_superfluous(a, sub(a, "0"))
    t = theta(monoid("S2"))
    assert P.is_superfluous(t, t.whole())


def test_coessential_examples():
    t2 = thetas(2)
    assert P.is_coessential(t2, sub(t2, "θ1"))
    am = s2_amalgam()
    v = P.is_coessential(am, sub(am, "0", "1_a"))
    assert not v and v.witness.labels == ["0", "1_b"]
    a = s2_act()
    assert P.is_coessential(a, sub(a, "0"))


def test_cover_examples():
    from sacts import Hom, rees_quotient
    a = s2_act()
    assert P.is_cover(Hom(a, a, (0, 1)))
    t2 = thetas(2)
    _, pi = rees_quotient(t2, t2.whole())
    v = P.is_cover(pi)
    assert not v and v.witness.labels == ["θ1"]
    b = sub(t2, "θ1")
    _, pi = rees_quotient(t2, b)
    assert bool(P.is_cover(pi)) == bool(P.is_coessential(t2, b))


@settings(max_examples=100, deadline=None)
@given(act_with_subacts(1))
def test_superfluous_implies_coessential(data):
    a, b = data
    if P.is_superfluous(a, b):
        assert P.is_coessential(a, b)


@settings(max_examples=100, deadline=None)
@given(act_with_subacts(1))
def test_superfluous_and_coessential_oracles(data):
    a, b = data
    assert bool(P.is_superfluous(a, b)) == P.is_superfluous_by_maximals(a, b)
    assert bool(P.is_coessential(a, b)) == bool(P.is_coessential_by_cover(a, b))


@settings(max_examples=60, deadline=None)
@given(act_with_subacts(1))
def test_failed_verdicts_carry_checkable_witness(data):
    a, b = data
    v = P.is_superfluous(a, b)
    if not v:
        c = v.witness
        assert c.is_proper and (b | c.mask) == a.full
    v = P.is_coessential(a, b)
    if not v:
        c = v.witness
        assert c.is_proper and c.mask & b and (b | c.mask) == a.full


def test_whole_act_superfluous_iff_simple():
    for a in [theta(monoid("S2")), s2_act(), thetas(2), regular_act(monoid("C2"))]:
        assert bool(P.is_superfluous(a, a.whole())) == bool(P.is_simple(a))


# -- hollow, co-uniform, decomposition ------------------------------------------------

def test_hollow_co_uniform_examples():
    t2 = thetas(2)
    assert P.is_co_uniform(t2) and not P.is_hollow(t2)
    am = s2_amalgam()
    assert not P.is_hollow(am) and P.is_indecomposable(am)
    assert P.is_hollow(s2_act())
    assert not P.is_co_uniform(thetas(3))


def test_decompose_examples():
    assert len(P.decompose(thetas(3))) == 3
    assert len(P.decompose(s2_amalgam())) == 1
    assert len(P.decompose(theta(monoid("S2")))) == 1


@settings(max_examples=100, deadline=None)
@given(acts())
def test_hollow_oracles(a):
    h = bool(P.is_hollow(a))
    assert h == P.is_hollow_by_decomposition(a) == P.is_hollow_by_locality(a)
    assert bool(P.is_co_uniform(a)) == P.is_co_uniform_by_cover(a)


@settings(max_examples=100, deadline=None)
@given(acts())
def test_components_partition_the_act(a):
    comps = [c.mask for c in P.decompose(a)]
    total = 0
    for c in comps:
        assert total & c == 0
        total |= c
        assert c in lattice(a).subacts
    assert total == a.full


# -- cyclicity --------------------------------------------------------------------------

def test_cyclicity_examples():
    c = P.cyclicity(s2_act())
    assert c["is_cyclic"] and c["is_locally_cyclic"] and not c["is_simple"]
    assert c["generators"] == [0]
    c = P.cyclicity(theta(monoid("S2")))
    assert c["is_cyclic"] and c["is_simple"]
    c = P.cyclicity(thetas(2))
    assert not (c["is_cyclic"] or c["is_locally_cyclic"] or c["is_simple"])


@settings(max_examples=100, deadline=None)
@given(acts())
def test_locally_cyclic_coincides_with_cyclic(a):
    assert bool(P.is_locally_cyclic(a)) == bool(P.is_cyclic(a))


# -- maximal subacts, radical, locality -------------------------------------------------

def test_radical_examples():
    r = P.radical(thetas(2))
    assert r.subset.is_empty and not r.is_whole
    assert [m.labels for m in r.maximals] == [["θ1"], ["θ2"]]
    a = s2_act()
    r = P.radical(a)
    assert r.subset.members == [1] and [m.labels for m in r.maximals] == [["0"]]
    t = theta(monoid("S2"))
    r = P.radical(t)
    assert r.is_whole and r.subset.mask == t.full and r.maximals == []


@settings(max_examples=100, deadline=None)
@given(acts())
def test_radical_is_union_of_superfluous(a):
    assert P.radical(a).subset.mask == P.radical_as_union(a).mask


def test_local_act_examples():
    assert P.is_local_act(s2_act())
    assert not P.is_local_act(thetas(2))
    assert not P.is_local_act(theta(monoid("S2")))


def test_local_monoid_examples():
    info = P.monoid_locality(monoid("S2"))
    assert P.is_local_monoid(monoid("S2")) and info["non_right_invertible"] == [1]
    info = P.monoid_locality(monoid("C2"))
    assert not P.is_local_monoid(monoid("C2")) and info["non_right_invertible"] == [] and info["is_group"]
    m = monoid("RZ2")
    info = P.monoid_locality(m)
    assert P.is_local_monoid(m)
    assert sorted(m.label(s) for s in info["non_right_invertible"]) == ["a", "b"]


@pytest.mark.parametrize("spec", [str(s) for s in catalog()])
def test_monoid_is_group_or_local(spec):
    m = monoid(spec)
    info = P.monoid_locality(m)
    if info["non_right_invertible"]:
        assert info["is_right_ideal"] and info["unique_maximal_right_ideal"]
    else:
        assert info["is_group"]


# -- uniserial, generating sets ------------------------------------------------------------

def test_uniserial_examples():
    from sacts.io import load_actfile
    from helpers import FIXTURES
    af = load_actfile(FIXTURES / "minchain3.json")
    assert P.is_uniserial(af.act)
    assert [s.labels for s in P._subacts(af.act)] == [["1"], ["1", "2"], ["1", "2", "3"]]
    v = P.is_uniserial(thetas(2))
    assert not v and [w.labels for w in v.witness] == [["θ1"], ["θ2"]]
    assert P.is_uniserial(theta(monoid("S2")))


@settings(max_examples=100, deadline=None)
@given(acts())
def test_uniserial_oracles(a):
    u = bool(P.is_uniserial(a))
    assert u == P.is_uniserial_by_hollow_subacts(a) == P.is_uniserial_by_two_generated(a)


def test_minimal_generating_sets_examples():
    assert P.minimal_generating_sets(s2_act()) == [[0]]
    assert P.minimal_generating_sets(thetas(2)) == [[0, 1]]
    assert P.minimal_generating_sets(theta(monoid("S2"))) == [[0]]


# -- supplements ----------------------------------------------------------------------------

def test_supplement_examples():
    t2 = thetas(2)
    assert P.is_supplement(t2, sub(t2, "θ1"), sub(t2, "θ2"))
    t3 = thetas(3)
    got = P.supplements_of(t3, sub(t3, "θ1", "θ2"))
    assert [c.labels for c in got] == [["θ3"]]
    a = s2_act()
    assert P.supplements_of(a, sub(a, "0"), P.STRICT) == []
    assert not P.is_supplemented(a, P.STRICT)
    # relaxed reading admits the whole act exactly when B is superfluous
    assert [c.labels for c in P.supplements_of(a, sub(a, "0"), P.RELAXED)] == [["1", "0"]]
    assert P.is_supplemented(a, P.RELAXED)


def test_supplement_needs_proper_subacts():
    a = s2_act()
    with pytest.raises(NotProper):
        P.is_supplement(a, a.whole(), sub(a, "0"))
    with pytest.raises(NotProper):
        P.is_supplement(a, sub(a, "0"), a.whole(), P.STRICT)


def test_simple_acts_are_supplemented_vacuously():
    t = theta(monoid("S2"))
    assert P.is_supplemented(t, P.STRICT) and P.is_supplemented(t, P.RELAXED)


def test_theta3_supplemented_both_readings():
    t3 = thetas(3)
    assert P.is_supplemented(t3, P.STRICT) and P.is_supplemented(t3, P.RELAXED)


@settings(max_examples=100, deadline=None)
@given(act_with_subacts(2))
def test_supplement_criterion_oracle(data):
    a, b, c = data
    L = lattice(a)
    if b == a.full or b | c != a.full:
        return
    assert bool(P.is_supplement(a, b, c, P.RELAXED)) == P.supplement_by_criterion(L, b, c)


# -- projectivity ----------------------------------------------------------------------------

def test_projective_examples():
    assert P.is_projective(s2_act())
    assert P.is_projective(theta(monoid("S2")))
    assert not P.is_projective(theta(monoid("C2")))
    assert P.is_projective(regular_act(monoid("C2")))


@settings(max_examples=60, deadline=None)
@given(acts(3))
def test_projective_oracle(a):
    assert bool(P.is_projective(a)) == P.is_projective_by_splitting(a)
