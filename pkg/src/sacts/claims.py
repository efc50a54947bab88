"""Registry of checkable statements about finite acts.

A claim check receives an :class:`Instance` and yields one outcome per checked
case: ``None`` when the statement holds there, or a :class:`Payload`
describing the counterexample.  Payloads carry ActFile-formatted acts and a
list of single-property checks that ``sacts check`` reproduces.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from .core import (
    Act, Hom, Monoid, Subact, bits, homomorphisms, lattice, popcount,
    rees_quotient_mask, subact_as_act,
)
from .io import actfile_dict
from . import predicates as P


class UnknownClaim(KeyError):
    pass


@dataclass
class Instance:
    monoid: Monoid
    act: Act | None = None
    mode: str | None = None
    # corpus acts over the same monoid, keyed by size, used as hom sources/targets
    probes: dict[int, list[Act]] = field(default_factory=dict)
    hom_cap: int = 20


class Payload:
    """Replayable counterexample description."""

    def __init__(self, detail: str):
        self.detail = detail
        self.acts: dict[str, dict] = {}
        self.checks: list[dict] = []

    def act(self, name: str, act: Act, subacts: dict | None = None, homs: dict | None = None) -> "Payload":
        self.acts[name] = actfile_dict(act, subacts, homs)
        return self

    def check(self, act: str, prop: str, expect: bool, subacts=(), hom=None, mode=None) -> "Payload":
        self.checks.append({"act": act, "property": prop, "subacts": list(subacts),
                            "hom": hom, "mode": mode, "expect": bool(expect)})
        return self

    def to_dict(self) -> dict:
        return {"detail": self.detail, "acts": self.acts, "checks": self.checks}


@dataclass(frozen=True)
class Claim:
    id: str
    scope: str            # "act" or "monoid"
    check: Callable[[Instance], Iterator[Payload | None]]
    statement: str
    mode_sensitive: bool = False
    open_question: bool = False
    # literal statements that break only at the simple-act boundary
    literal_edge: bool = False


REGISTRY: dict[str, Claim] = {}

# the free-cover splitting search for projectivity is exponential in the rank
SPLITTING_ORACLE_MAX = 3


def claim(cid, statement, scope="act", **flags):
    def deco(fn):
        REGISTRY[cid] = Claim(cid, scope, fn, statement, **flags)
        return fn
    return deco


def get_claims(ids) -> list[Claim]:
    if ids in (None, "all") or ids == ["all"]:
        return list(REGISTRY.values())
    out = []
    for i in ids:
        if i not in REGISTRY:
            raise UnknownClaim(i)
        out.append(REGISTRY[i])
    return out


# -- cached helpers ----------------------------------------------------------

@lru_cache(maxsize=65536)
def quotient(act: Act, mask: int) -> tuple[Act, Hom]:
    return rees_quotient_mask(act, mask)


def image_in_quotient(act: Act, c: int, b: int) -> int:
    """Mask of B/C inside A/C."""
    _, pi = quotient(act, c)
    return pi.image_mask(b)


@lru_cache(maxsize=262144)
def sup_in_quotient(act: Act, c: int, b: int) -> bool:
    q, _ = quotient(act, c)
    return P.is_superfluous_mask(lattice(q), image_in_quotient(act, c, b))


@lru_cache(maxsize=262144)
def coess_in_quotient(act: Act, c: int, b: int) -> bool:
    q, _ = quotient(act, c)
    return P.coessential_witness(lattice(q), image_in_quotient(act, c, b)) is None


def coessential_within(L, b: int, within: int) -> bool:
    for e in L.subacts:
        if e != within and e & within == e and e & b and e | b == within:
            return False
    return True


def sub_within(L, within: int) -> list[int]:
    return [x for x in L.subacts if x & within == x]


def rad_of_subact(act: Act, c: int) -> int:
    """Rad(C) for the subact C, as a mask of the parent act."""
    sub = subact_as_act(Subact(act, c))
    r = P.radical_mask(lattice(sub))
    members = bits(c)
    return sum(1 << members[i] for i in bits(r))


def probe_acts(inst: Instance, max_size: int) -> list[Act]:
    out = []
    for k in sorted(inst.probes):
        if k <= max_size:
            out.extend(inst.probes[k])
    return out


def homs_into(inst: Instance) -> list[Hom]:
    a = inst.act
    cap = inst.hom_cap // a.size
    out = []
    for x in probe_acts(inst, cap):
        out.extend(homomorphisms(x, a))
    return out


def homs_from(inst: Instance, epi_only=False) -> list[Hom]:
    a = inst.act
    cap = min(inst.hom_cap // a.size, a.size if epi_only else a.size)
    out = []
    for x in probe_acts(inst, cap):
        hs = homomorphisms(a, x)
        out.extend(h for h in hs if h.is_epi or not epi_only)
    return out


def _bad(ok: bool, make: Callable[[], Payload]) -> Payload | None:
    return None if ok else make()


def named(*masks):
    return {f"S{i}": m for i, m in enumerate(masks) if m}


# ==== Lemma 1.1 ===============================================================

@claim("L1.1", "If M is a maximal subact of A then A/M is finitely generated.")
def _l11(inst):
    a = inst.act
    for m in lattice(a).maximals:
        q, _ = quotient(a, m)
        ok = bool(P.minimal_generating_sets(q))
        yield _bad(ok, lambda: Payload("A/M not finitely generated").act("A", a, named(m))
                   .check("A", "maximal", True, ["S0"]))


# ==== Section 2 ===============================================================

@claim("L2.2", "B is coessential iff every proper C meeting B has C u B != A; "
                "and superfluous subacts are coessential.")
def _l22(inst):
    a = inst.act
    L = lattice(a)
    for b in L.subacts:
        by_def = P.is_coessential_by_cover(a, b).holds
        by_crit = P.coessential_witness(L, b) is None
        sup = P.is_superfluous_mask(L, b)
        ok = by_def == by_crit and (not sup or by_crit)
        yield _bad(ok, lambda: Payload(f"cover-coessential={by_def}, criterion={by_crit}, superfluous={sup}")
                   .act("A", a, named(b)).check("A", "coessential", by_def, ["S0"])
                   .check("A", "superfluous", sup, ["S0"]))


@claim("L2.3", "A coessential subact of an indecomposable act is superfluous.")
def _l23(inst):
    a = inst.act
    L = lattice(a)
    if len(P.component_masks(a)) != 1:
        return
    for b in L.subacts:
        if P.coessential_witness(L, b) is None:
            ok = P.is_superfluous_mask(L, b)
            yield _bad(ok, lambda: Payload("coessential but not superfluous in an indecomposable act")
                       .act("A", a, named(b)).check("A", "indecomposable", True)
                       .check("A", "coessential", True, ["S0"]).check("A", "superfluous", False, ["S0"]))


def _chains2(L):
    for b in L.subacts:
        for c in L.subacts:
            if c & b == c:
                yield c, b


@claim("L2.4(i)", "For C <= B <= A: B <<s A iff C <<s A and B/C <<s A/C.")
def _l24i(inst):
    a = inst.act
    L = lattice(a)
    for c, b in _chains2(L):
        lhs = P.is_superfluous_mask(L, b)
        rhs = P.is_superfluous_mask(L, c) and sup_in_quotient(a, c, b)
        yield _bad(lhs == rhs, lambda: Payload(f"B sup={lhs}, C sup and B/C sup={rhs}")
                   .act("A", a, named(b, c)).check("A", "superfluous", lhs, ["S0"]))


def _l24ii(inst, strict_sub: bool):
    a = inst.act
    L = lattice(a)
    for c, b in _chains2(L):
        if strict_sub and c == b:
            continue
        if P.is_superfluous_mask(L, c, within=b):
            ok = P.is_superfluous_mask(L, c)
            sub = subact_as_act(Subact(a, b))
            yield _bad(ok, lambda: Payload("C superfluous in B but not in A")
                       .act("A", a, named(b, c)).act("B", sub, {"C": _relabel(a, b, c)})
                       .check("B", "superfluous", True, ["C"]).check("A", "superfluous", False, ["S1"]))


def _relabel(act: Act, within: int, mask: int) -> int:
    members = bits(within)
    return sum(1 << i for i, x in enumerate(members) if mask >> x & 1)


@claim("L2.4(ii)", "For C < B <= A (C proper in B): C <<s B implies C <<s A.")
def _l24ii_proper(inst):
    yield from _l24ii(inst, True)


@claim("L2.4(ii)/literal", "For C <= B <= A: C <<s B implies C <<s A (including C = B).",
       literal_edge=True)
def _l24ii_literal(inst):
    yield from _l24ii(inst, False)


@claim("L2.4(iii)", "B <<s A iff every hom h: X -> A with Im h u B = A is onto "
                    "(X over subact inclusions and corpus probes).")
def _l24iii(inst):
    a = inst.act
    L = lattice(a)
    images = set(L.subacts)   # inclusions of subacts
    images.update(h.image_mask() for h in homs_into(inst))
    for b in L.subacts:
        lhs = P.is_superfluous_mask(L, b)
        bad = [im for im in images if im | b == L.full and im != L.full]
        rhs = not bad
        yield _bad(lhs == rhs, lambda: Payload(f"superfluous={lhs}, image test={rhs}")
                   .act("A", a, named(b)).check("A", "superfluous", lhs, ["S0"]))


@claim("L2.4(iv)", "For D <= C <= B <= A: B/D <<s A/D iff B/C <<s A/C and C/D <<s A/D.")
def _l24iv(inst):
    a = inst.act
    L = lattice(a)
    for c, b in _chains2(L):
        bc = sup_in_quotient(a, c, b)
        for d in sub_within(L, c):
            lhs = sup_in_quotient(a, d, b)
            rhs = bc and sup_in_quotient(a, d, c)
            yield _bad(lhs == rhs, lambda: Payload(f"B/D sup={lhs}, B/C and C/D sup={rhs}")
                       .act("A", a, named(b, c, d)))


@claim("L2.5(i)", "For C <= B <= A: C << B implies C << A.")
def _l25i(inst):
    a = inst.act
    L = lattice(a)
    for c, b in _chains2(L):
        if coessential_within(L, c, b):
            ok = P.coessential_witness(L, c) is None
            yield _bad(ok, lambda: Payload("C << B but not C << A").act("A", a, named(b, c))
                       .check("A", "coessential", False, ["S1"]))


@claim("L2.5(ii)", "For C <= B <= A: B << A implies C << A and B/C << A/C.")
def _l25ii(inst):
    a = inst.act
    L = lattice(a)
    for c, b in _chains2(L):
        if P.coessential_witness(L, b) is None:
            ok = P.coessential_witness(L, c) is None and coess_in_quotient(a, c, b)
            yield _bad(ok, lambda: Payload("B << A but C or B/C fails").act("A", a, named(b, c))
                       .check("A", "coessential", True, ["S0"]))


def _monos(inst):
    """Monomorphisms into the current act: subact inclusions, then corpus monos."""
    a = inst.act
    L = lattice(a)
    for x in L.subacts:
        yield Hom(subact_as_act(Subact(a, x)), a, tuple(bits(x)))
    for h in homs_into(inst):
        if h.is_mono:
            yield h


def _l25iii(inst, proper_only):
    a = inst.act
    La = lattice(a)
    for f in _monos(inst):
        Ls = lattice(f.source)
        for b in Ls.subacts:
            fb = f.image_mask(b)
            if P.coessential_witness(Ls, b) is None:
                ok = P.coessential_witness(La, fb) is None
                yield _bad(ok, lambda: Payload("B << X but f(B) not << A")
                           .act("X", f.source, named(b)).act("A", a, named(fb))
                           .check("X", "coessential", True, ["S0"]).check("A", "coessential", False, ["S0"]))
            if proper_only and b == Ls.full:
                continue
            if P.is_superfluous_mask(Ls, b):
                ok = P.is_superfluous_mask(La, fb)
                yield _bad(ok, lambda: Payload("B <<s X but f(B) not <<s A")
                           .act("X", f.source, named(b)).act("A", a, named(fb))
                           .check("X", "superfluous", True, ["S0"]).check("A", "superfluous", False, ["S0"]))


@claim("L2.5(iii)", "For a mono f: X -> A and B << X (B <<s X with B proper): f(B) << A (f(B) <<s A).")
def _l25iii_proper(inst):
    yield from _l25iii(inst, True)


@claim("L2.5(iii)/literal", "Mono transport of <<s including B = X.", literal_edge=True)
def _l25iii_literal(inst):
    yield from _l25iii(inst, False)


@claim("L2.6", "For proper B, C: B u C <<s A iff B <<s A and C <<s A.")
def _l26(inst):
    a = inst.act
    L = lattice(a)
    sup = {x: P.is_superfluous_mask(L, x) for x in L.subacts}
    for i, b in enumerate(L.proper):
        for c in L.proper[i:]:
            lhs = sup[b | c]
            rhs = sup[b] and sup[c]
            yield _bad(lhs == rhs, lambda: Payload(f"union sup={lhs}, both sup={rhs}")
                       .act("A", a, named(b, c)))


def _splits(comps):
    k = len(comps)
    for sel in range(1, 1 << (k - 1)):
        left = 0
        for i in range(k):
            if sel >> i & 1:
                left |= comps[i]
        yield left


@claim("L2.7", "For proper B_i < A_i: coprod B_i <<s coprod A_i iff each B_i <<s A_i; "
               "coprod B_i << coprod A_i implies each B_i << A_i.")
def _l27(inst):
    a = inst.act
    L = lattice(a)
    comps = P.component_masks(a)
    if len(comps) < 2:
        return
    for a1 in _splits(comps):
        a2 = L.full & ~a1
        for b1 in sub_within(L, a1):
            if b1 == a1:
                continue
            for b2 in sub_within(L, a2):
                if b2 == a2:
                    continue
                b = b1 | b2
                lhs = P.is_superfluous_mask(L, b)
                s1 = P.is_superfluous_mask(L, b1, within=a1)
                s2 = P.is_superfluous_mask(L, b2, within=a2)
                ok = lhs == (s1 and s2)
                if P.coessential_witness(L, b) is None:
                    ok = ok and coessential_within(L, b1, a1) and coessential_within(L, b2, a2)
                yield _bad(ok, lambda: Payload("coproduct lemma fails").act("A", a, named(a1, b1, b2)))


def _l27iii(inst, proper_only, relation):
    a = inst.act
    L = lattice(a)
    subs = L.subacts
    if relation == "superfluous":
        def rel(b, within):
            return P.is_superfluous_mask(L, b, within=within)
    else:
        def rel(b, within):
            return coessential_within(L, b, within)
    for i, a1 in enumerate(subs):
        for a2 in subs[i:]:
            u = a1 | a2
            for b1 in sub_within(L, a1):
                if proper_only and b1 == a1 or not rel(b1, a1):
                    continue
                for b2 in sub_within(L, a2):
                    if proper_only and b2 == a2 or not rel(b2, a2):
                        continue
                    ok = rel(b1 | b2, u)
                    yield _bad(ok, lambda: Payload(f"union of {relation} subacts is not {relation} in the union")
                               .act("A", a, named(a1, a2, b1, b2))
                               .act("U", subact_as_act(Subact(a, u)), {"B": _relabel(a, u, b1 | b2)})
                               .check("U", relation, False, ["B"]))


@claim("L2.7(iii)", "For subacts A_1, A_2 and proper B_i <<s A_i: B_1 u B_2 <<s A_1 u A_2.")
def _l27iii_proper(inst):
    yield from _l27iii(inst, True, "superfluous")


@claim("L2.7(iii)/coessential", "For subacts A_1, A_2 and proper B_i << A_i: B_1 u B_2 << A_1 u A_2.")
def _l27iii_coess(inst):
    yield from _l27iii(inst, True, "coessential")


@claim("L2.7(iii)/literal", "Finite-union part of the coproduct lemma for <<s including B_i = A_i.",
       literal_edge=True)
def _l27iii_literal(inst):
    yield from _l27iii(inst, False, "superfluous")


# ==== Section 3 ===============================================================

@claim("P3.2", "Every factor act of a hollow (co-uniform) act is hollow (co-uniform).")
def _p32(inst):
    a = inst.act
    L = lattice(a)
    hollow = P.hollow_witness(L) is None
    couni = P.co_uniform_witness(L) is None
    if not (hollow or couni):
        return
    epis = [quotient(a, b)[1] for b in L.subacts] + homs_from(inst, epi_only=True)
    for f in epis:
        Lc = lattice(f.target)
        if hollow:
            ok = P.hollow_witness(Lc) is None
            yield _bad(ok, lambda: Payload("factor of hollow act not hollow").act("A", a).act("C", f.target)
                       .check("A", "hollow", True).check("C", "hollow", False))
        if couni:
            ok = P.co_uniform_witness(Lc) is None
            yield _bad(ok, lambda: Payload("factor of co-uniform act not co-uniform").act("A", a)
                       .act("C", f.target).check("A", "co-uniform", True).check("C", "co-uniform", False))


@claim("P3.3", "Cyclic implies locally cyclic; locally cyclic implies hollow and indecomposable.")
def _p33(inst):
    a = inst.act
    L = lattice(a)
    cyc = P.is_cyclic_mask(L)
    lc = P.is_locally_cyclic_mask(L)
    ok = (not cyc or lc) and (not lc or (P.hollow_witness(L) is None and len(P.component_masks(a)) == 1))
    yield _bad(ok, lambda: Payload("cyclic/locally cyclic chain fails").act("A", a)
               .check("A", "locally-cyclic", lc).check("A", "hollow", P.hollow_witness(L) is None))


@claim("T3.4", "A is hollow iff A is indecomposable and co-uniform.")
def _t34(inst):
    a = inst.act
    L = lattice(a)
    hollow = P.hollow_witness(L) is None
    indec = len(P.component_masks(a)) == 1
    couni = P.co_uniform_witness(L) is None
    yield _bad(hollow == (indec and couni), lambda: Payload("hollow vs indecomposable co-uniform").act("A", a)
               .check("A", "hollow", hollow).check("A", "indecomposable", indec)
               .check("A", "co-uniform", couni))


@claim("P3.5", "A co-uniform act is indecomposable or a coproduct of two simple acts.")
def _p35(inst):
    a = inst.act
    L = lattice(a)
    if P.co_uniform_witness(L) is not None:
        return
    comps = P.component_masks(a)
    ok = len(comps) == 1 or (len(comps) == 2 and all(
        P.is_simple_mask(lattice(subact_as_act(Subact(a, c)))) for c in comps))
    yield _bad(ok, lambda: Payload("co-uniform decomposable act not two simple pieces").act("A", a)
               .check("A", "co-uniform", True).check("A", "indecomposable", False))


@claim("T3.6", "Uniserial iff every subact is hollow iff every subact generated by two elements is hollow.")
def _t36(inst):
    a = inst.act
    L = lattice(a)
    uni = P.uniserial_witness(L) is None
    every = all(P.hollow_witness(lattice(subact_as_act(Subact(a, x)))) is None for x in L.subacts)
    two = all(P.hollow_witness(lattice(subact_as_act(Subact(a, x)))) is None for x in P.two_generated_masks(L))
    yield _bad(uni == every == two, lambda: Payload(f"uniserial={uni}, all hollow={every}, 2-gen hollow={two}")
               .act("A", a).check("A", "uniserial", uni))


@claim("P3.7", "Indecomposable co-uniform (in particular hollow, finitely generated hollow) acts "
               "with a minimal generating set are cyclic.")
def _p37(inst):
    a = inst.act
    L = lattice(a)
    hollow = P.hollow_witness(L) is None
    ic = len(P.component_masks(a)) == 1 and P.co_uniform_witness(L) is None
    if not (hollow or ic):
        return
    gens = P.minimal_generating_sets(a)
    ok = P.is_cyclic_mask(L) and all(len(g) == 1 for g in gens)
    yield _bad(ok, lambda: Payload("hollow act with a minimal generating set is not cyclic").act("A", a)
               .check("A", "hollow", hollow).check("A", "cyclic", P.is_cyclic_mask(L)))


@claim("L3.8", "Every cover of a hollow act is indecomposable.")
def _l38(inst):
    d = inst.act
    L = lattice(d)
    indec = len(P.component_masks(d)) == 1
    covers = []
    for b in L.subacts:
        q, pi = quotient(d, b)
        covers.append(pi)
    covers.extend(homs_from(inst, epi_only=True))
    for f in covers:
        if P.hollow_witness(lattice(f.target)) is not None:
            continue
        if not P.is_cover(f).holds:
            continue
        yield _bad(indec, lambda: Payload("cover of a hollow act is decomposable")
                   .act("D", d, homs={"f": f}).act("A", f.target)
                   .check("D", "cover", True, hom="f").check("A", "hollow", True)
                   .check("D", "indecomposable", False))


# ==== Section 4 ===============================================================

@claim("L4.2", "Every cyclic act is simple or local.")
def _l42(inst):
    a = inst.act
    L = lattice(a)
    if not P.is_cyclic_mask(L):
        return
    ok = P.is_simple_mask(L) or len(L.maximals) == 1
    yield _bad(ok, lambda: Payload("cyclic act neither simple nor local").act("A", a)
               .check("A", "cyclic", True).check("A", "simple", False).check("A", "local", False))


@claim("R4.3", "Non-right-invertible elements are empty (group) or the unique maximal right ideal; "
               "right local and left local coincide.", scope="monoid")
def _r43(inst):
    m = inst.monoid
    info = P.monoid_locality(m)
    n = info["non_right_invertible"]
    ok = (not n) == info["is_group"]
    if n:
        ok = ok and info["is_right_ideal"] and info["unique_maximal_right_ideal"] \
            and info["non_left_invertible"] == n and info["unique_maximal_left_ideal"]
    else:
        ok = ok and len(info["maximal_right_ideals"]) == 0 and len(info["maximal_left_ideals"]) == 0
    ok = ok and P.is_local_monoid(m).holds == (not info["is_group"])
    yield _bad(ok, lambda: Payload(f"monoid locality fails: {info}"))


def _six_way(a: Act) -> list[bool]:
    L = lattice(a)
    mx = L.maximals
    local = len(mx) == 1
    hollow = P.hollow_witness(L) is None
    in_max = all(any(c & m == c for m in mx) for c in L.proper)
    greatest = [n for n in L.proper if all(c & n == c for c in L.proper)]
    return [
        hollow and bool(mx),
        P.is_cyclic_mask(L) and local,
        local,                        # finite acts are finitely generated
        in_max and local,
        any(P.is_superfluous_mask(L, n) for n in mx),
        bool(greatest) and P.is_superfluous_mask(L, greatest[0]),
    ]


@claim("T4.4", "hollow with Max != {} <=> cyclic local <=> f.g. local <=> proper subacts in maximals and "
               "local <=> some maximal subact superfluous <=> a greatest proper subact is superfluous.")
def _t44(inst):
    a = inst.act
    v = _six_way(a)
    yield _bad(len(set(v)) == 1, lambda: Payload(f"six-way verdicts {v}").act("A", a)
               .check("A", "hollow", P.hollow_witness(lattice(a)) is None)
               .check("A", "local", len(lattice(a).maximals) == 1))


@claim("L4.5", "If aS u C = A then C = A or some maximal M contains C and misses a.")
def _l45(inst):
    a = inst.act
    L = lattice(a)
    for x in a.elements:
        for c in L.subacts:
            if L.cyclic[x] | c != L.full or c == L.full:
                continue
            ok = any(c & m == c and not m >> x & 1 for m in L.maximals)
            yield _bad(ok, lambda: Payload(f"no maximal subact separates element {x}").act("A", a, named(c)))


@claim("P4.6", "Rad(A) equals the union of the superfluous subacts of A.")
def _p46(inst):
    a = inst.act
    L = lattice(a)
    r, u = P.radical_mask(L), P.radical_as_union_mask(L)
    yield _bad(r == u, lambda: Payload(f"Rad={bits(r)} union={bits(u)}").act("A", a))


def _c47(inst, nondegenerate):
    a = inst.act
    L = lattice(a)
    rad = P.radical_mask(L)
    for x in bits(rad):
        ok = P.is_superfluous_mask(L, L.cyclic[x])
        yield _bad(ok, lambda: Payload(f"element {x} of Rad(A) with aS not superfluous")
                   .act("A", a, named(L.cyclic[x])).check("A", "superfluous", False, ["S0"]))
    for f in _monos(inst):
        Ls = lattice(f.source)
        if nondegenerate and not Ls.maximals:
            continue
        img = f.image_mask(P.radical_mask(Ls))
        ok = img & rad == img
        yield _bad(ok, lambda: Payload("f(Rad X) not inside Rad A").act("X", f.source).act("A", a))
    # Rad(A) = A iff every finitely generated subact is superfluous
    lhs = rad == L.full
    rhs = all(P.is_superfluous_mask(L, x) for x in L.subacts)
    yield _bad(lhs == rhs, lambda: Payload(f"Rad=A {lhs} vs all subacts superfluous {rhs}").act("A", a))


@claim("C4.7", "a in Rad(A) gives aS <<s A; monos f: X -> A with Max(X) != {} map Rad(X) into Rad(A); "
               "Rad(A) = A iff all f.g. subacts are superfluous.")
def _c47_nd(inst):
    yield from _c47(inst, True)


@claim("C4.7/literal", "Corollary on the radical including simple sources (Rad(X) = X).", literal_edge=True)
def _c47_lit(inst):
    yield from _c47(inst, False)


@claim("C4.8", "Each non-cyclic hollow subact of A lies in Rad(A).")
def _c48(inst):
    a = inst.act
    L = lattice(a)
    rad = P.radical_mask(L)
    for b in L.subacts:
        Lb = lattice(subact_as_act(Subact(a, b)))
        if P.hollow_witness(Lb) is None and not P.is_cyclic_mask(Lb):
            yield _bad(b & rad == b, lambda: Payload("non-cyclic hollow subact outside Rad").act("A", a, named(b)))


@claim("T4.9", "Rad(A) <<s A iff every proper subact lies in a maximal subact.")
def _t49(inst):
    a = inst.act
    L = lattice(a)
    lhs = P.is_superfluous_mask(L, P.radical_mask(L))
    rhs = all(any(c & m == c for m in L.maximals) for c in L.proper)
    yield _bad(lhs == rhs, lambda: Payload(f"Rad superfluous={lhs}, proper in maximal={rhs}").act("A", a))


@claim("P4.10", "A is finitely generated iff A/Rad(A) is finitely generated and Rad(A) <<s A.")
def _p410(inst):
    a = inst.act
    L = lattice(a)
    rad = P.radical_mask(L)
    q, _ = quotient(a, rad)
    rhs = bool(P.minimal_generating_sets(q)) and P.is_superfluous_mask(L, rad)
    lhs = bool(P.minimal_generating_sets(a))
    yield _bad(lhs == rhs, lambda: Payload(f"f.g.={lhs}, quotient f.g. and Rad sup={rhs}").act("A", a))


# ==== Section 5 ===============================================================

def _supp_pairs(L, mode):
    cands = L.proper if mode == P.STRICT else L.subacts
    for b in L.proper:
        for c in cands:
            yield b, c


def _l52(inst, with_hypothesis):
    a = inst.act
    L = lattice(a)
    for b, c in _supp_pairs(L, inst.mode):
        if b | c != L.full:
            continue
        if with_hypothesis and not b & c:
            continue
        lhs = P.is_supplement_mask(L, b, c, inst.mode)
        rhs = P.supplement_by_criterion(L, b, c)
        yield _bad(lhs == rhs, lambda: Payload(f"supplement={lhs}, criterion={rhs}")
                   .act("A", a, named(b, c)).check("A", "supplement", lhs, ["S0", "S1"], mode=inst.mode))


@claim("L5.2", "If A = B u C and B n C != {}: C supplements B iff C n B = {} or C n B <<s C.",
       mode_sensitive=True, open_question=True)
def _l52_hyp(inst):
    yield from _l52(inst, True)


@claim("L5.2/nohyp", "If A = B u C: C supplements B iff C n B = {} or C n B <<s C.",
       mode_sensitive=True, open_question=True)
def _l52_nohyp(inst):
    yield from _l52(inst, False)


@claim("P5.3", "Every co-uniform act is supplemented.", mode_sensitive=True)
def _p53(inst):
    a = inst.act
    L = lattice(a)
    if P.co_uniform_witness(L) is not None:
        return
    b = P.supplemented_witness(L, inst.mode)
    yield _bad(b is None, lambda: Payload("co-uniform act with an unsupplemented proper subact")
               .act("A", a, named(b)).check("A", "co-uniform", True)
               .check("A", "supplemented", False, mode=inst.mode)
               .check("A", "has-supplement", False, ["S0"], mode=inst.mode))


def _proper_supplement_pairs(L, mode):
    for b, c in _supp_pairs(L, mode):
        if P.supplement_witness(L, b, c) is None:
            yield b, c


@claim("P5.4(i)", "If C supplements B and D u C = A for a subact D of B, C supplements D.",
       mode_sensitive=True, open_question=True)
def _p54i(inst):
    a = inst.act
    L = lattice(a)
    for b, c in _proper_supplement_pairs(L, inst.mode):
        for d in sub_within(L, b):
            if d | c == L.full:
                ok = P.supplement_witness(L, d, c) is None
                yield _bad(ok, lambda: Payload("C not a supplement of D").act("A", a, named(b, c, d))
                           .check("A", "supplement", True, ["S0", "S1"], mode=inst.mode).check("A", "supplement", False, ["S2", "S1"], mode=inst.mode))


@claim("P5.4(ii)", "A supplement in a finitely generated act is finitely generated.", mode_sensitive=True)
def _p54ii(inst):
    a = inst.act
    L = lattice(a)
    for b, c in _proper_supplement_pairs(L, inst.mode):
        ok = bool(P.minimal_generating_sets(subact_as_act(Subact(a, c))))
        yield _bad(ok, lambda: Payload("supplement not finitely generated").act("A", a, named(b, c)))


@claim("P5.4(iii)", "If C supplements B and E <= C with E <<s A then E <<s C.", mode_sensitive=True)
def _p54iii(inst):
    a = inst.act
    L = lattice(a)
    for b, c in _proper_supplement_pairs(L, inst.mode):
        for e in sub_within(L, c):
            if P.is_superfluous_mask(L, e):
                ok = P.is_superfluous_mask(L, e, within=c)
                yield _bad(ok, lambda: Payload("E <<s A but not E <<s C").act("A", a, named(b, c, e)))


@claim("P5.4(iv)", "If C supplements B and N <<s A then N n C <<s C.", mode_sensitive=True)
def _p54iv(inst):
    a = inst.act
    L = lattice(a)
    sups = [n for n in L.subacts if P.is_superfluous_mask(L, n)]
    for b, c in _proper_supplement_pairs(L, inst.mode):
        for n in sups:
            ok = P.is_superfluous_mask(L, n & c, within=c)
            yield _bad(ok, lambda: Payload("N n C not superfluous in C").act("A", a, named(b, c, n)))


@claim("P5.4(v)", "If C supplements B and N <<s A then C supplements N u B.", mode_sensitive=True)
def _p54v(inst):
    a = inst.act
    L = lattice(a)
    sups = [n for n in L.subacts if P.is_superfluous_mask(L, n)]
    for b, c in _proper_supplement_pairs(L, inst.mode):
        for n in sups:
            ok = (n | b) != L.full and P.supplement_witness(L, n | b, c) is None
            yield _bad(ok, lambda: Payload("C does not supplement N u B").act("A", a, named(b, c, n)))


def _p54vi(inst, nondegenerate):
    a = inst.act
    L = lattice(a)
    rad = P.radical_mask(L)
    for b, c in _proper_supplement_pairs(L, inst.mode):
        if nondegenerate and P.is_simple_mask(lattice(subact_as_act(Subact(a, c)))):
            continue
        rc = rad_of_subact(a, c)
        ok = rc == c & rad
        yield _bad(ok, lambda: Payload(f"Rad(C)={bits(rc)} but C n Rad(A)={bits(c & rad)}")
                   .act("A", a, named(b, c)).act("C", subact_as_act(Subact(a, c)))
                   .check("A", "supplement", True, ["S0", "S1"], mode=inst.mode).check("C", "simple", True))


@claim("P5.4(vi)", "If C (not simple) supplements B then Rad(C) = C n Rad(A).", mode_sensitive=True)
def _p54vi_nd(inst):
    yield from _p54vi(inst, True)


@claim("P5.4(vi)/literal", "If C supplements B then Rad(C) = C n Rad(A), simple C included.",
       mode_sensitive=True, literal_edge=True)
def _p54vi_lit(inst):
    yield from _p54vi(inst, False)


@claim("P5.5", "In a projective act P, a supplement C of B is projective or some epi f: P -> C has f(B) <<s C.",
       mode_sensitive=True)
def _p55(inst):
    a = inst.act
    L = lattice(a)
    if not P.is_projective(a).holds:
        return
    for b, c in _supp_pairs(L, inst.mode):
        if not P.is_supplement_mask(L, b, c, inst.mode):
            continue
        cact = subact_as_act(Subact(a, c))
        ok = P.is_projective(cact).holds
        if not ok:
            Lc = lattice(cact)
            for f in homomorphisms(a, cact):
                if f.is_epi and P.is_superfluous_mask(Lc, f.image_mask(b)):
                    ok = True
                    break
        yield _bad(ok, lambda: Payload("supplement in projective act fails").act("A", a, named(b, c))
                   .check("A", "projective", True).check("A", "supplement", True, ["S0", "S1"], mode=inst.mode))


@claim("T5.6", "If Rad(A) <<s A: A is a union of hollow subacts iff every proper B with A/B f.g. has a "
               "supplement iff every maximal subact has a supplement.", mode_sensitive=True)
def _t56(inst):
    a = inst.act
    L = lattice(a)
    if not P.is_superfluous_mask(L, P.radical_mask(L)):
        return
    hollow_union = 0
    for x in L.subacts:
        if P.hollow_witness(lattice(subact_as_act(Subact(a, x)))) is None:
            hollow_union |= x
    i = hollow_union == L.full
    ii = all(P.supplement_masks(L, b, inst.mode) for b in L.proper)
    iii = all(P.supplement_masks(L, m, inst.mode) for m in L.maximals)
    bad_m = next((m for m in L.maximals if not P.supplement_masks(L, m, inst.mode)), 0)
    yield _bad(i == ii == iii, lambda: Payload(f"union of hollow={i}, supplemented={ii}, maximals supplemented={iii}")
               .act("A", a, named(bad_m)).check("A", "supplemented", ii, mode=inst.mode)
               .check("A", "has-supplement", False, ["S0"], mode=inst.mode) if bad_m else
               Payload(f"union of hollow={i}, supplemented={ii}, maximals supplemented={iii}").act("A", a)
               .check("A", "supplemented", ii, mode=inst.mode))


# ==== implementation cross-checks ==============================================

@claim("ORACLES", "Definitional and characterization-based implementations agree.")
def _oracles(inst):
    yield from oracle_disagreements(inst.act)


def oracle_disagreements(a: Act) -> Iterator[Payload | None]:
    L = lattice(a)
    for b in L.subacts:
        s1 = P.is_superfluous_mask(L, b)
        s2 = P.is_superfluous_by_maximals(a, b)
        yield _bad(s1 == s2, lambda: Payload(f"superfluous def={s1} maximals={s2}").act("A", a, named(b)))
        c1 = P.coessential_witness(L, b) is None
        c2 = P.is_coessential_by_cover(a, b).holds
        yield _bad(c1 == c2, lambda: Payload(f"coessential crit={c1} cover={c2}").act("A", a, named(b)))
    h = P.hollow_witness(L) is None
    yield _bad(h == P.is_hollow_by_decomposition(a) == P.is_hollow_by_locality(a),
               lambda: Payload("hollow oracles disagree").act("A", a))
    yield _bad((P.co_uniform_witness(L) is None) == P.is_co_uniform_by_cover(a),
               lambda: Payload("co-uniform oracles disagree").act("A", a))
    u = P.uniserial_witness(L) is None
    yield _bad(u == P.is_uniserial_by_hollow_subacts(a) == P.is_uniserial_by_two_generated(a),
               lambda: Payload("uniserial oracles disagree").act("A", a))
    yield _bad(P.radical_mask(L) == P.radical_as_union_mask(L),
               lambda: Payload("radical vs union of superfluous").act("A", a))
    for b in L.proper:
        for c in L.subacts:
            if b | c == L.full:
                s = P.is_supplement_mask(L, b, c, P.RELAXED)
                k = P.supplement_by_criterion(L, b, c)
                yield _bad(s == k, lambda: Payload("supplement vs criterion").act("A", a, named(b, c)))
    if a.size <= SPLITTING_ORACLE_MAX:
        yield _bad(P.is_projective(a).holds == P.is_projective_by_splitting(a),
                   lambda: Payload("projective oracles disagree").act("A", a))
    yield _bad(P.is_locally_cyclic_mask(L) == P.is_cyclic_mask(L),
               lambda: Payload("locally cyclic but not cyclic").act("A", a))
