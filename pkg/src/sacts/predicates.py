"""Properties of acts and subacts.

Each property has a definitional check.  Where a characterization is available
it is implemented separately (``*_by_*`` functions) so the two can be compared.

Mask-level helpers (``*_mask``) take a :class:`~sacts.core.Lattice` and integer
bitsets; they are what the claim checks call in their inner loops.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Any

from .core import (
    Act, ActError, Hom, Monoid, NotProper, Subact, Subset, bits, coproduct,
    lattice, minimal_generators, popcount, rees_quotient_mask, regular_act,
    subact_as_act,
)

STRICT = "strict"
RELAXED = "relaxed"
MODES = (STRICT, RELAXED)


@dataclass(frozen=True)
class PropertyVerdict:
    holds: bool
    witness: Any = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class RadicalResult:
    subset: Subset
    is_whole: bool
    maximals: list[Subact] = field(default_factory=list)


def _mask(x) -> int:
    return x if isinstance(x, int) else x.mask


# -- superfluous / coessential ------------------------------------------------

def superfluous_witness(L, b: int, within: int | None = None) -> int | None:
    """A proper subact ``c`` of ``within`` with ``b | c == within``, else None.

    ``b == 0`` is the empty set, which is superfluous by convention.
    """
    if within is None:
        within = L.full
    for c in L.subacts:
        if c != within and c & within == c and b | c == within:
            return c
    return None


def is_superfluous_mask(L, b: int, within: int | None = None) -> bool:
    return superfluous_witness(L, b, within) is None


def is_superfluous(act: Act, b: Subact | int) -> PropertyVerdict:
    c = superfluous_witness(lattice(act), _mask(b))
    return PropertyVerdict(c is None, None if c is None else Subact(act, c))


def is_superfluous_by_maximals(act: Act, b: Subact | int) -> bool:
    """B is superfluous iff it lies in every maximal subact (finite acts)."""
    bm = _mask(b)
    return all(bm & m == bm for m in lattice(act).maximals)


def coessential_witness(L, b: int) -> int | None:
    for c in L.proper:
        if c & b and c | b == L.full:
            return c
    return None


def is_coessential(act: Act, b: Subact | int) -> PropertyVerdict:
    """Criterion form: every proper C meeting B has C | B proper."""
    c = coessential_witness(lattice(act), _mask(b))
    return PropertyVerdict(c is None, None if c is None else Subact(act, c))


def is_coessential_by_cover(act: Act, b: Subact | int) -> PropertyVerdict:
    """Definition: the Rees projection ``A -> A/B`` is a coessential epimorphism."""
    _, pi = rees_quotient_mask(act, _mask(b))
    return is_cover(pi)


def is_cover(f: Hom) -> PropertyVerdict:
    if not f.is_epi:
        return PropertyVerdict(False, "not epi")
    full = f.target.full
    for c in lattice(f.source).proper:
        if f.image_mask(c) == full:
            return PropertyVerdict(False, Subact(f.source, c))
    return PropertyVerdict(True)


# -- decomposition, cyclicity --------------------------------------------------

@lru_cache(maxsize=8192)
def component_masks(act: Act) -> tuple[int, ...]:
    parent = list(act.elements)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in act.elements:
        for x in act.action[a]:
            ra, rx = find(a), find(x)
            if ra != rx:
                parent[max(ra, rx)] = min(ra, rx)
    comps: dict[int, int] = {}
    for a in act.elements:
        r = find(a)
        comps[r] = comps.get(r, 0) | 1 << a
    return tuple(sorted(comps.values()))


def decompose(act: Act) -> list[Subact]:
    """Indecomposable components, ordered by bitset."""
    return [Subact(act, m) for m in component_masks(act)]


def is_indecomposable(act: Act) -> PropertyVerdict:
    comps = component_masks(act)
    if len(comps) == 1:
        return PropertyVerdict(True)
    return PropertyVerdict(False, [Subact(act, comps[0]), Subact(act, act.full & ~comps[0])])


def is_cyclic_mask(L) -> bool:
    return L.full in L.cyclic


def is_locally_cyclic_mask(L) -> bool:
    n = len(L.cyclic)
    for a in range(n):
        for b in range(a + 1, n):
            pair = 1 << a | 1 << b
            if not any(c & pair == pair for c in L.cyclic):
                return False
    return True


def is_simple_mask(L) -> bool:
    return len(L.subacts) == 1


def cyclicity(act: Act) -> dict:
    L = lattice(act)
    gens = [a for a in act.elements if L.cyclic[a] == L.full]
    return {
        "is_cyclic": bool(gens),
        "is_locally_cyclic": is_locally_cyclic_mask(L),
        "is_simple": is_simple_mask(L),
        "generators": gens,
    }


def is_cyclic(act: Act) -> PropertyVerdict:
    return PropertyVerdict(is_cyclic_mask(lattice(act)), None if is_cyclic_mask(lattice(act)) else minimal_generators(act))


def is_locally_cyclic(act: Act) -> PropertyVerdict:
    L = lattice(act)
    n = act.size
    for a in range(n):
        for b in range(a + 1, n):
            pair = 1 << a | 1 << b
            if not any(c & pair == pair for c in L.cyclic):
                return PropertyVerdict(False, (a, b))
    return PropertyVerdict(True)


def is_simple(act: Act) -> PropertyVerdict:
    L = lattice(act)
    return PropertyVerdict(is_simple_mask(L), None if is_simple_mask(L) else Subact(act, L.subacts[0]))


# -- hollow, co-uniform --------------------------------------------------------

def hollow_witness(L) -> tuple[int, int] | None:
    for b in L.proper:
        c = superfluous_witness(L, b)
        if c is not None:
            return b, c
    return None


def co_uniform_witness(L) -> tuple[int, int] | None:
    for b in L.proper:
        c = coessential_witness(L, b)
        if c is not None:
            return b, c
    return None


def _pair_verdict(act, w):
    if w is None:
        return PropertyVerdict(True)
    return PropertyVerdict(False, (Subact(act, w[0]), Subact(act, w[1])))


def is_hollow(act: Act) -> PropertyVerdict:
    """Every proper subact is superfluous; witness is (B, C) with B | C = A."""
    return _pair_verdict(act, hollow_witness(lattice(act)))


def is_co_uniform(act: Act) -> PropertyVerdict:
    return _pair_verdict(act, co_uniform_witness(lattice(act)))


def is_co_uniform_by_cover(act: Act) -> bool:
    return all(is_coessential_by_cover(act, b).holds for b in lattice(act).proper)


def is_hollow_by_decomposition(act: Act) -> bool:
    return len(component_masks(act)) == 1 and co_uniform_witness(lattice(act)) is None


def is_hollow_by_locality(act: Act) -> bool:
    L = lattice(act)
    return is_simple_mask(L) or (is_cyclic_mask(L) and len(L.maximals) == 1)


# -- maximal subacts, radical, locality ---------------------------------------

def maximal_subacts(act: Act) -> list[Subact]:
    return [Subact(act, m) for m in lattice(act).maximals]


def radical_mask(L) -> int:
    if not L.maximals:
        return L.full
    r = L.full
    for m in L.maximals:
        r &= m
    return r


def radical(act: Act) -> RadicalResult:
    L = lattice(act)
    return RadicalResult(Subset(act, radical_mask(L)), not L.maximals, maximal_subacts(act))


def radical_as_union_mask(L) -> int:
    out = 0
    for b in L.subacts:
        if is_superfluous_mask(L, b):
            out |= b
    return out


def radical_as_union(act: Act) -> Subset:
    return Subset(act, radical_as_union_mask(lattice(act)))


def is_local_act(act: Act) -> PropertyVerdict:
    mx = maximal_subacts(act)
    return PropertyVerdict(len(mx) == 1, None if len(mx) == 1 else mx)


def right_ideals(m: Monoid) -> list[int]:
    return list(lattice(regular_act(m)).subacts)


def monoid_locality(m: Monoid) -> dict:
    """Non-right-invertible elements and how they sit among the one-sided ideals."""
    one = m.identity
    els = list(m.elements)
    nri = [s for s in els if not any(m.table[s][t] == one for t in els)]
    nli = [s for s in els if not any(m.table[t][s] == one for t in els)]
    right_max = lattice(regular_act(m)).maximals
    # left ideals = subacts of S acting on itself from the left, i.e. of the
    # opposite monoid acting on the right
    opp = Monoid(tuple(tuple(m.table[t][s] for t in els) for s in els), one)
    left_max = lattice(regular_act(opp)).maximals
    n_mask = sum(1 << s for s in nri)
    is_group = all(any(m.table[s][t] == one for t in els) for s in els)
    return {
        "non_right_invertible": nri,
        "non_left_invertible": nli,
        "is_group": is_group,
        "maximal_right_ideals": [bits(x) for x in right_max],
        "maximal_left_ideals": [bits(x) for x in left_max],
        "unique_maximal_right_ideal": len(right_max) == 1 and right_max[0] == n_mask,
        "unique_maximal_left_ideal": len(left_max) == 1 and left_max[0] == n_mask,
        "is_right_ideal": all(m.table[s][t] in nri for s in nri for t in els),
    }


def is_local_monoid(m: Monoid) -> PropertyVerdict:
    info = monoid_locality(m)
    holds = bool(info["non_right_invertible"])
    return PropertyVerdict(holds, None if holds else "group")


# -- uniserial -----------------------------------------------------------------

def uniserial_witness(L) -> tuple[int, int] | None:
    subs = L.subacts
    for i, x in enumerate(subs):
        for y in subs[i + 1:]:
            if x & y != x and x & y != y:
                return x, y
    return None


def is_uniserial(act: Act) -> PropertyVerdict:
    return _pair_verdict(act, uniserial_witness(lattice(act)))


def is_uniserial_by_hollow_subacts(act: Act) -> bool:
    return all(is_hollow(subact_as_act(s)).holds for s in _subacts(act))


def is_uniserial_by_two_generated(act: Act) -> bool:
    L = lattice(act)
    masks = {L.cyclic[a] | L.cyclic[b] for a in act.elements for b in act.elements}
    return all(is_hollow(subact_as_act(Subact(act, x))).holds for x in masks)


def _subacts(act):
    return [Subact(act, m) for m in lattice(act).subacts]


# -- generating sets -------------------------------------------------------------

def minimal_generating_sets(act: Act) -> list[list[int]]:
    """Generating sets from which no element can be removed, ordered by bitset."""
    L = lattice(act)
    full = L.full
    out = []
    for x in range(1, full + 1):
        if L.generated(x) != full:
            continue
        if all(L.generated(x & ~(1 << a)) != full for a in bits(x)):
            out.append(bits(x))
    return out


# -- supplements -----------------------------------------------------------------

def _check_mode(mode):
    if mode not in MODES:
        raise ActError(f"unknown supplement reading {mode!r}")


def supplement_witness(L, b: int, c: int) -> int | None:
    """Failure witness for ``c`` supplementing ``b``: 0 if ``b | c`` is not
    everything, else a smaller subact ``d`` of ``c`` with ``b | d`` everything."""
    if b | c != L.full:
        return 0
    for d in L.subacts:
        if d != c and d & c == d and b | d == L.full:
            return d
    return None


def is_supplement_mask(L, b: int, c: int, mode: str = RELAXED) -> bool:
    if mode == STRICT and c == L.full:
        return False
    return supplement_witness(L, b, c) is None


def is_supplement(act: Act, b: Subact | int, c: Subact | int, mode: str = RELAXED) -> PropertyVerdict:
    _check_mode(mode)
    L = lattice(act)
    bm, cm = _mask(b), _mask(c)
    if bm == L.full:
        raise NotProper("B must be a proper subact")
    if mode == STRICT and cm == L.full:
        raise NotProper("strict reading requires a proper supplement")
    w = supplement_witness(L, bm, cm)
    if w is None:
        return PropertyVerdict(True)
    return PropertyVerdict(False, "B | C != A" if w == 0 else Subact(act, w))


def supplement_masks(L, b: int, mode: str = RELAXED) -> list[int]:
    cands = L.proper if mode == STRICT else L.subacts
    return [c for c in cands if supplement_witness(L, b, c) is None]


def supplements_of(act: Act, b: Subact | int, mode: str = RELAXED) -> list[Subact]:
    _check_mode(mode)
    bm = _mask(b)
    if bm == act.full:
        raise NotProper("B must be a proper subact")
    return [Subact(act, c) for c in supplement_masks(lattice(act), bm, mode)]


def supplemented_witness(L, mode: str = RELAXED) -> int | None:
    for b in L.proper:
        if not supplement_masks(L, b, mode):
            return b
    return None


def is_supplemented(act: Act, mode: str = RELAXED) -> PropertyVerdict:
    """Every proper subact has a supplement (vacuous for simple acts)."""
    _check_mode(mode)
    b = supplemented_witness(lattice(act), mode)
    return PropertyVerdict(b is None, None if b is None else Subact(act, b))


def supplement_by_criterion(L, b: int, c: int) -> bool:
    """Given ``b | c`` is everything: ``c`` supplements ``b`` iff ``c & b`` is
    empty or superfluous in ``c``."""
    meet = c & b
    return meet == 0 or is_superfluous_mask(L, meet, within=c)


# -- projectivity ----------------------------------------------------------------

@lru_cache(maxsize=256)
def _principal_acts(m: Monoid) -> tuple[Act, ...]:
    reg = regular_act(m)
    L = lattice(reg)
    seen = set()
    out = []
    for e in m.idempotents:
        mask = L.cyclic[e]
        if mask not in seen:
            seen.add(mask)
            out.append(subact_as_act(Subact(reg, mask)))
    return tuple(out)


def is_projective(act: Act) -> PropertyVerdict:
    """Every component is isomorphic to ``eS`` for an idempotent ``e``."""
    from .enumeration import act_isomorphic
    for comp in component_masks(act):
        piece = subact_as_act(Subact(act, comp))
        if not any(p.size == piece.size and act_isomorphic(p, piece) for p in _principal_acts(act.monoid)):
            return PropertyVerdict(False, Subact(act, comp))
    return PropertyVerdict(True)


def is_projective_by_splitting(act: Act) -> bool:
    """Projective iff the free cover ``F = coprod_{g in gens} S -> A`` splits."""
    gens = minimal_generators(act)
    m = act.monoid
    n = m.size
    free, _ = coproduct([regular_act(m)] * len(gens))
    cover = [act.action[g][s] for g in gens for s in range(n)]
    fibres = [[x for x in free.elements if cover[x] == g] for g in gens]
    for images in product(*fibres):
        sigma = [-1] * act.size
        ok = True
        for g, y in zip(gens, images):
            for s in range(n):
                a, v = act.action[g][s], free.action[y][s]
                if sigma[a] == -1:
                    sigma[a] = v
                elif sigma[a] != v:
                    ok = False
                    break
            if not ok:
                break
        if ok and all(cover[sigma[a]] == a for a in act.elements):
            return True
    return False


# -- generated subacts used by claim checks -------------------------------------

def two_generated_masks(L) -> set[int]:
    n = len(L.cyclic)
    return {L.cyclic[a] | L.cyclic[b] for a, b in combinations(range(n), 2)} | set(L.cyclic)


def is_finitely_generated(act: Act) -> bool:
    return bool(minimal_generating_sets(act))


__all__ = [n for n in dir() if n.startswith("is_")] + [
    "PropertyVerdict", "RadicalResult", "decompose", "cyclicity", "maximal_subacts",
    "radical", "radical_as_union", "minimal_generating_sets", "supplements_of",
    "monoid_locality", "STRICT", "RELAXED", "MODES", "popcount",
]
