"""Finite monoids, right acts, subacts and homomorphisms.

Subsets of an act are stored as integer bitsets: bit ``a`` is set when element
index ``a`` belongs to the subset.  Every subact is a union of cyclic subacts
``aS``, which is how the subact lattice is built.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence


class ActError(ValueError):
    """Base class for invalid algebraic input."""


class NotAssociative(ActError):
    def __init__(self, s, t, u):
        super().__init__(f"(s*t)*u != s*(t*u) for s={s}, t={t}, u={u}")
        self.witness = (s, t, u)


class IdentityLawFails(ActError):
    def __init__(self, s):
        super().__init__(f"identity law fails at element {s}")
        self.witness = s


class IdentityActionFails(ActError):
    def __init__(self, a):
        super().__init__(f"a*1 != a for act element {a}")
        self.witness = a


class CompatibilityFails(ActError):
    def __init__(self, a, s, t):
        super().__init__(f"(a*s)*t != a*(st) for a={a}, s={s}, t={t}")
        self.witness = (a, s, t)


class EmptyGenerators(ActError):
    pass


class MixedMonoids(ActError):
    pass


class NotProper(ActError):
    pass


class NotClosed(ActError):
    pass


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def to_mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _check_square(table, n):
    for row in table:
        if len(row) != n:
            raise ActError("table is not square")
        for x in row:
            if not 0 <= x < n:
                raise ActError(f"table entry {x} out of range")


@dataclass(frozen=True)
class Monoid:
    table: tuple[tuple[int, ...], ...]
    identity: int
    labels: tuple[str, ...] = field(default=(), compare=False)

    @property
    def size(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, s: int, t: int) -> int:
        return self.table[s][t]

    def label(self, s: int) -> str:
        return self.labels[s] if self.labels else str(s)

    def __repr__(self):
        return f"Monoid(size={self.size}, identity={self.identity})"

    @property
    def idempotents(self) -> list[int]:
        return [e for e in self.elements if self.table[e][e] == e]

    @property
    def generators(self) -> tuple[int, ...]:
        return _monoid_generators(self)


def validate_monoid(table: Sequence[Sequence[int]], identity: int,
                    labels: Sequence[str] | None = None) -> Monoid:
    n = len(table)
    if n == 0:
        raise ActError("monoid must be nonempty")
    _check_square(table, n)
    if not 0 <= identity < n:
        raise ActError("identity out of range")
    t = tuple(tuple(int(x) for x in row) for row in table)
    for s in range(n):
        if t[identity][s] != s or t[s][identity] != s:
            raise IdentityLawFails(s)
    for s, u, v in product(range(n), repeat=3):
        if t[t[s][u]][v] != t[s][t[u][v]]:
            raise NotAssociative(s, u, v)
    if labels is not None and len(labels) != n:
        raise ActError("wrong number of monoid labels")
    return Monoid(t, identity, tuple(labels) if labels else ())


@lru_cache(maxsize=None)
def _monoid_generators(m: Monoid) -> tuple[int, ...]:
    # irredundant: drop any element generated by the remaining ones
    gens = [s for s in m.elements if s != m.identity]
    i = len(gens) - 1
    while i >= 0:
        rest = gens[:i] + gens[i + 1:]
        if gens[i] in submonoid(m, rest):
            gens = rest
        i -= 1
    return tuple(gens)


def submonoid(m: Monoid, gens: Iterable[int]) -> set[int]:
    gens = list(gens)
    seen = {m.identity}
    frontier = [m.identity]
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                x = m.table[s][g]
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    return seen


@dataclass(frozen=True)
class Act:
    """Right act of ``monoid`` on ``range(size)``; ``action[a][s]`` is a*s."""

    monoid: Monoid
    action: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = field(default=(), compare=False)

    @property
    def size(self) -> int:
        return len(self.action)

    @property
    def elements(self) -> range:
        return range(len(self.action))

    @property
    def full(self) -> int:
        return (1 << len(self.action)) - 1

    def act(self, a: int, s: int) -> int:
        return self.action[a][s]

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def __repr__(self):
        return f"Act(size={self.size}, monoid_size={self.monoid.size})"

    def whole(self) -> "Subact":
        return Subact(self, self.full)

    def subact(self, elements: Iterable[int]) -> "Subact":
        return make_subact(self, to_mask(elements))

    def subact_by_labels(self, names: Iterable[str]) -> "Subact":
        index = {self.label(a): a for a in self.elements}
        return self.subact(index[x] for x in names)

    def cyclic_mask(self, a: int) -> int:
        return lattice(self).cyclic[a]


def validate_act(monoid: Monoid, action: Sequence[Sequence[int]],
                 labels: Sequence[str] | None = None) -> Act:
    m = len(action)
    if m == 0:
        raise ActError("act must be nonempty")
    n = monoid.size
    for row in action:
        if len(row) != n:
            raise ActError("action row has wrong length")
        for x in row:
            if not 0 <= x < m:
                raise ActError(f"action entry {x} out of range")
    act = tuple(tuple(int(x) for x in row) for row in action)
    e = monoid.identity
    for a in range(m):
        if act[a][e] != a:
            raise IdentityActionFails(a)
    tab = monoid.table
    for a in range(m):
        row = act[a]
        for s in range(n):
            r2 = act[row[s]]
            ts = tab[s]
            for t in range(n):
                if r2[t] != row[ts[t]]:
                    raise CompatibilityFails(a, s, t)
    if labels is not None and len(labels) != m:
        raise ActError("wrong number of act labels")
    return Act(monoid, act, tuple(labels) if labels else ())


def regular_act(monoid: Monoid) -> Act:
    """The monoid acting on itself by right multiplication."""
    return Act(monoid, monoid.table, monoid.labels)


def theta(monoid: Monoid, label: str = "θ") -> Act:
    """One-element act."""
    return Act(monoid, ((0,) * monoid.size,), (label,))


@dataclass(frozen=True)
class Lattice:
    cyclic: tuple[int, ...]
    subacts: tuple[int, ...]
    maximals: tuple[int, ...]
    full: int

    @property
    def proper(self) -> tuple[int, ...]:
        return self.subacts[:-1]

    def is_subact(self, mask: int) -> bool:
        return mask in self._index

    def generated(self, mask: int) -> int:
        out = 0
        for a in bits(mask):
            out |= self.cyclic[a]
        return out

    def __post_init__(self):
        object.__setattr__(self, "_index", frozenset(self.subacts))


@lru_cache(maxsize=8192)
def lattice(act: Act) -> Lattice:
    """Cyclic subacts, the full subact list and the maximal subacts of ``act``.

    Subacts are sorted by the integer value of their bitset, so the whole act
    comes last.
    """
    cyc = []
    for a in act.elements:
        mask = 0
        for x in act.action[a]:
            mask |= 1 << x
        cyc.append(mask)
    found: set[int] = set()
    for c in sorted(set(cyc)):
        found |= {c} | {x | c for x in found}
    subs = tuple(sorted(found))
    full = act.full
    proper = subs[:-1]
    maximals = []
    for m in proper:
        if not any(x != m and x & m == m for x in proper):
            maximals.append(m)
    return Lattice(tuple(cyc), subs, tuple(maximals), full)


@dataclass(frozen=True)
class Subset:
    """Possibly empty subset of an act (intersections, preimages, radicals)."""

    parent: Act
    mask: int

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def members(self) -> list[int]:
        return bits(self.mask)

    def to_subact(self) -> "Subact":
        return make_subact(self.parent, self.mask)

    def __len__(self):
        return popcount(self.mask)


@dataclass(frozen=True, order=False)
class Subact:
    parent: Act
    mask: int

    @property
    def members(self) -> list[int]:
        return bits(self.mask)

    @property
    def labels(self) -> list[str]:
        return [self.parent.label(a) for a in bits(self.mask)]

    @property
    def is_proper(self) -> bool:
        return self.mask != self.parent.full

    def __len__(self):
        return popcount(self.mask)

    def __contains__(self, a: int) -> bool:
        return bool(self.mask >> a & 1)

    def __le__(self, other: "Subact") -> bool:
        return self.mask & other.mask == self.mask

    def __lt__(self, other: "Subact") -> bool:
        return self <= other and self.mask != other.mask

    def __or__(self, other: "Subact") -> "Subact":
        return Subact(self.parent, self.mask | other.mask)

    def __and__(self, other: "Subact") -> Subset:
        return Subset(self.parent, self.mask & other.mask)

    def __repr__(self):
        return "{" + ", ".join(self.labels) + "}"

    def as_act(self) -> Act:
        return subact_as_act(self)


def make_subact(act: Act, mask: int) -> Subact:
    if mask == 0:
        raise ActError("subacts are nonempty")
    if mask & ~act.full:
        raise ActError("subset has elements outside the act")
    for a in bits(mask):
        if lattice(act).cyclic[a] & ~mask:
            raise NotClosed(f"subset not closed under the action at element {a}")
    return Subact(act, mask)


def generated_subact(act: Act, generators: Iterable[int]) -> Subact:
    gens = list(generators)
    if not gens:
        raise EmptyGenerators("need at least one generator")
    return Subact(act, lattice(act).generated(to_mask(gens)))


def all_subacts(act: Act) -> list[Subact]:
    return [Subact(act, m) for m in lattice(act).subacts]


def maximal_subact_masks(act: Act) -> tuple[int, ...]:
    return lattice(act).maximals


def _restrict_table(act: Act, members: list[int]) -> tuple[tuple[int, ...], ...]:
    pos = {a: i for i, a in enumerate(members)}
    return tuple(tuple(pos[x] for x in act.action[a]) for a in members)


def _subact_act(act: Act, mask: int) -> Act:
    members = bits(mask)
    labels = tuple(act.label(a) for a in members)
    return Act(act.monoid, _restricted(act, mask), labels)


@lru_cache(maxsize=8192)
def _restricted(act: Act, mask: int) -> tuple[tuple[int, ...], ...]:
    return _restrict_table(act, bits(mask))


def subact_as_act(b: Subact) -> Act:
    """The subact viewed as an act in its own right, members in parent order."""
    return _subact_act(b.parent, b.mask)


@dataclass(frozen=True)
class Hom:
    source: Act
    target: Act
    map: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.map[a]

    @property
    def is_epi(self) -> bool:
        return len(set(self.map)) == self.target.size

    @property
    def is_mono(self) -> bool:
        return len(set(self.map)) == self.source.size

    def image_mask(self, mask: int | None = None) -> int:
        if mask is None:
            mask = self.source.full
        out = 0
        for a in bits(mask):
            out |= 1 << self.map[a]
        return out

    @property
    def image(self) -> Subact:
        return Subact(self.target, self.image_mask())

    def preimage(self, t: Subact | int) -> Subset:
        tm = t.mask if isinstance(t, Subact) else t
        return Subset(self.source, to_mask(a for a in self.source.elements if tm >> self.map[a] & 1))

    def restrict(self, b: Subact) -> "Hom":
        members = b.members
        return Hom(subact_as_act(b), self.target, tuple(self.map[a] for a in members))

    def is_equivariant(self) -> bool:
        src, tgt = self.source, self.target
        return all(self.map[src.action[a][s]] == tgt.action[self.map[a]][s]
                   for a in src.elements for s in src.monoid.elements)


def hom_queries(h: Hom) -> dict:
    return {"is_epi": h.is_epi, "is_mono": h.is_mono, "image": h.image}


def inclusion(b: Subact) -> Hom:
    return Hom(subact_as_act(b), b.parent, tuple(b.members))


def _same_monoid(acts: Sequence[Act]):
    m = acts[0].monoid
    for a in acts[1:]:
        if a.monoid != m:
            raise MixedMonoids("acts are over different monoids")


def rees_quotient_mask(act: Act, mask: int) -> tuple[Act, Hom]:
    """Rees factor by an arbitrary closed subset; the empty set gives ``act`` back."""
    if mask == 0:
        return act, Hom(act, act, tuple(act.elements))
    survivors = [a for a in act.elements if not mask >> a & 1]
    zero = len(survivors)
    pos = {a: i for i, a in enumerate(survivors)}
    proj = tuple(pos.get(a, zero) for a in act.elements)
    action = [tuple(proj[x] for x in act.action[a]) for a in survivors]
    action.append((zero,) * act.monoid.size)
    kept = [act.label(a) for a in survivors]
    zlab = "θ"
    while zlab in kept:
        zlab += "'"
    labels = tuple(kept + [zlab])
    q = Act(act.monoid, tuple(action), labels)
    return q, Hom(act, q, proj)


def rees_quotient(act: Act, b: Subact) -> tuple[Act, Hom]:
    """``A/B``: survivors keep source order, the zero class ``θ`` comes last."""
    return rees_quotient_mask(act, b.mask)


def _coproduct_labels(acts: Sequence[Act]) -> tuple[str, ...]:
    labels = [a.label(x) for a in acts for x in a.elements]
    if len(set(labels)) == len(labels):
        return tuple(labels)
    out = []
    for i, a in enumerate(acts):
        for x in a.elements:
            lab = a.label(x)
            out.append(f"{lab}.{i + 1}" if lab[-1:].isdigit() else f"{lab}{i + 1}")
    return tuple(out)


def coproduct(acts: Sequence[Act]) -> tuple[Act, list[Hom]]:
    if not acts:
        raise ActError("coproduct of an empty family")
    _same_monoid(acts)
    action = []
    offsets = []
    off = 0
    for a in acts:
        offsets.append(off)
        action.extend(tuple(x + off for x in row) for row in a.action)
        off += a.size
    out = Act(acts[0].monoid, tuple(action), _coproduct_labels(acts))
    injections = [Hom(a, out, tuple(x + o for x in a.elements)) for a, o in zip(acts, offsets)]
    return out, injections


def amalgam(act: Act, b: Subact) -> Act:
    """Two copies of ``act`` glued along ``b``: shared B first, then copy a, then copy b."""
    if not b.is_proper:
        raise NotProper("amalgam needs a proper subact")
    shared = b.members
    rest = [a for a in act.elements if a not in b]
    index = {("", a): i for i, a in enumerate(shared)}
    for tag in ("a", "b"):
        for a in rest:
            index[(tag, a)] = len(index)

    def where(tag, x):
        return index[("", x)] if x in b else index[(tag, x)]

    action = [tuple(where("", x) for x in act.action[a]) for a in shared]
    labels = [act.label(a) for a in shared]
    for tag in ("a", "b"):
        for a in rest:
            action.append(tuple(where(tag, x) for x in act.action[a]))
            labels.append(f"{act.label(a)}_{tag}")
    return Act(act.monoid, tuple(action), tuple(labels))


def minimal_generators(act: Act) -> list[int]:
    """One element from each top cyclic class; the unique-size minimal generating set."""
    cyc = lattice(act).cyclic
    gens = []
    covered = 0
    # elements whose cyclic subact is not inside another strictly larger one
    for a in act.elements:
        if any(cyc[b] & cyc[a] == cyc[a] and cyc[b] != cyc[a] for b in act.elements):
            continue
        if cyc[a] & covered == cyc[a]:
            continue
        gens.append(a)
        covered |= cyc[a]
    return gens


def homomorphisms(source: Act, target: Act, method: str = "generators") -> list[Hom]:
    """All equivariant maps ``source -> target``, sorted by map tuple."""
    _same_monoid([source, target])
    if method == "brute":
        return homomorphisms_bruteforce(source, target)
    gens = minimal_generators(source)
    n = source.monoid.size
    out = []
    sa, ta = source.action, target.action
    for images in product(target.elements, repeat=len(gens)):
        f = [-1] * source.size
        ok = True
        for g, y in zip(gens, images):
            srow, trow = sa[g], ta[y]
            for s in range(n):
                x = srow[s]
                if f[x] == -1:
                    f[x] = trow[s]
                elif f[x] != trow[s]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(Hom(source, target, tuple(f)))
    out.sort(key=lambda h: h.map)
    return out


def homomorphisms_bruteforce(source: Act, target: Act) -> list[Hom]:
    _same_monoid([source, target])
    out = []
    for f in product(target.elements, repeat=source.size):
        h = Hom(source, target, f)
        if h.is_equivariant():
            out.append(h)
    return out
