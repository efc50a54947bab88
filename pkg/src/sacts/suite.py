"""Exhaustive claim runner over enumerated act corpora."""
from __future__ import annotations

import json
import os
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable

from . import predicates as P
from .catalog import MonoidSpec, catalog, parse_spec
from .claims import Instance, Payload, UnknownClaim, get_claims, REGISTRY
from .core import Act, Monoid, Subact, amalgam, coproduct, lattice, regular_act, theta
from .enumeration import act_key, canonical_act, enumerate_acts
from .io import actfile_dict

STRICTNESS = "strictness"


@dataclass
class SuiteConfig:
    specs: list[MonoidSpec] = field(default_factory=catalog)
    max_size: int = 6
    claims: list[str] | None = None      # None means every registered claim
    modes: tuple[str, ...] = (P.RELAXED,)
    up_to_iso: bool = True
    raw_max_size: int = 0                # additionally run ORACLES on raw acts up to this size
    hom_cap: int = 20
    keep_failures: int = 3
    cache: bool = True


@dataclass
class ClaimReport:
    claim: str
    mode: str | None
    statement: str
    gating: bool
    open_question: bool
    literal_edge: bool
    instances_checked: int = 0
    failures_total: int = 0
    failures: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    corpus: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures_total == 0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["elapsed"] = round(self.elapsed, 3)
        return d


def is_gating(claim, mode) -> bool:
    # strict-mode supplement runs belong to the supplement-properness question
    if claim.open_question or claim.literal_edge:
        return False
    return not (claim.mode_sensitive and mode == P.STRICT)


# -- corpus ------------------------------------------------------------------------

def _cache_dir() -> Path:
    return Path(os.environ.get("SACTS_CACHE", Path.home() / ".cache" / "sacts"))


def _cache_file(m: Monoid, n: int) -> Path:
    import hashlib
    h = hashlib.sha1(repr(m.table).encode()).hexdigest()[:16]
    return _cache_dir() / f"iso-{h}-{n}.json"


def iso_reps(m: Monoid, n: int, cache: bool = True) -> list[Act]:
    """One act per isomorphism class, ordered by canonical key."""
    path = _cache_file(m, n) if cache else None
    if path is not None and path.exists():
        try:
            keys = [tuple(k) for k in json.loads(path.read_text())]
            return [canonical_act(m, n, k) for k in keys]
        except (OSError, ValueError):
            pass
    keys = sorted({act_key(a) for a in enumerate_acts(m, n)})
    if path is not None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(keys))
        except OSError:
            pass
    return [canonical_act(m, n, k) for k in keys]


def corpus(m: Monoid, n: int, up_to_iso: bool = True, cache: bool = True) -> list[Act]:
    if up_to_iso:
        return iso_reps(m, n, cache)
    return list(enumerate_acts(m, n))


# -- runner --------------------------------------------------------------------------

def _corpus_descriptor(cfg: SuiteConfig) -> dict:
    return {"monoids": [str(s) for s in cfg.specs], "max_size": cfg.max_size,
            "up_to_iso": cfg.up_to_iso, "raw_oracle_max_size": cfg.raw_max_size,
            "hom_cap": cfg.hom_cap}


def resolve_claims(ids) -> list:
    if ids is None:
        return get_claims(None)
    ids = [i for i in ids if i != STRICTNESS]
    return get_claims(ids) if ids else []


def run_suite(specs: Iterable[MonoidSpec | str] | None = None, max_size: int = 6, claims=None,
              mode: str = P.RELAXED, up_to_iso: bool = True, **kw) -> list[ClaimReport]:
    """Run claims over the corpus; ``mode`` is ``strict``, ``relaxed`` or ``both``."""
    specs = catalog() if specs is None else [parse_spec(s) if isinstance(s, str) else s for s in specs]
    modes = P.MODES if mode == "both" else (mode,)
    if mode != "both":
        P._check_mode(mode)
    cfg = SuiteConfig(specs=specs, max_size=max_size, claims=claims, modes=modes, up_to_iso=up_to_iso, **kw)
    return run(cfg)


def run(cfg: SuiteConfig) -> list[ClaimReport]:
    selected = resolve_claims(cfg.claims)
    desc = _corpus_descriptor(cfg)
    reports: dict[tuple[str, str | None], ClaimReport] = {}
    jobs = []
    for c in selected:
        for md in (cfg.modes if c.mode_sensitive else (None,)):
            reports[c.id, md] = ClaimReport(c.id, md, c.statement, is_gating(c, md), c.open_question,
                                            c.literal_edge, corpus=desc)
            jobs.append((c, md))

    def record(c, md, inst, spec, n, ordinal):
        rep = reports[c.id, md]
        t = time.perf_counter()
        for out in c.check(inst):
            rep.instances_checked += 1
            if out is not None:
                rep.failures_total += 1
                if len(rep.failures) < cfg.keep_failures:
                    d = out.to_dict()
                    d.update(monoid=str(spec), size=n, ordinal=ordinal)
                    rep.failures.append(d)
        rep.elapsed += time.perf_counter() - t

    for spec in cfg.specs:
        m = spec.build()
        for c, md in jobs:
            if c.scope == "monoid":
                record(c, md, Instance(m, None, md), spec, 0, 0)
        acts = {n: corpus(m, n, cfg.up_to_iso, cfg.cache) for n in range(1, cfg.max_size + 1)}
        probes = acts if cfg.up_to_iso else {n: corpus(m, n, True, cfg.cache) for n in acts}
        for n in range(1, cfg.max_size + 1):
            for i, a in enumerate(acts[n]):
                for c, md in jobs:
                    if c.scope == "act":
                        record(c, md, Instance(m, a, md, probes, cfg.hom_cap), spec, n, i)
        if cfg.raw_max_size and ("ORACLES", None) in reports:
            c = REGISTRY["ORACLES"]
            for n in range(1, cfg.raw_max_size + 1):
                for i, a in enumerate(enumerate_acts(m, n)):
                    record(c, None, Instance(m, a), spec, -n, i)
    return [reports[k] for k in sorted(reports, key=lambda k: (k[0], k[1] or ""))]


def gating_failures(reports: list[ClaimReport]) -> list[ClaimReport]:
    return [r for r in reports if r.gating and not r.passed]


def dumps_reports(reports: list[ClaimReport], timing: bool = True) -> str:
    lines = []
    for r in reports:
        d = r.to_dict()
        if not timing:
            d.pop("elapsed")
        lines.append(json.dumps(d, ensure_ascii=False, sort_keys=True))
    return "\n".join(lines) + ("\n" if lines else "")


def write_reports(path, reports, timing: bool = True) -> None:
    Path(path).write_text(dumps_reports(reports, timing), encoding="utf-8")


# -- strictness of the implication chain ---------------------------------------------

def _coess_not_sup(a: Act):
    L = lattice(a)
    for b in L.subacts:
        if P.coessential_witness(L, b) is None and not P.is_superfluous_mask(L, b):
            return Payload("coessential but not superfluous").act("A", a, {"B": b}) \
                .check("A", "coessential", True, ["B"]).check("A", "superfluous", False, ["B"])
    return None


def _pair(p_name, p_fn, q_name, q_fn):
    """Witness finder for an act with property p but not q."""
    def find(a: Act):
        if p_fn(a) and not q_fn(a):
            return Payload(f"{p_name} but not {q_name}").act("A", a) \
                .check("A", p_name, True).check("A", q_name, False)
        return None
    return find


def _hollow(a):
    return P.hollow_witness(lattice(a)) is None


def _couni(a):
    return P.co_uniform_witness(lattice(a)) is None


def _indec(a):
    return len(P.component_masks(a)) == 1


def _supplemented_both(a):
    L = lattice(a)
    return all(P.supplemented_witness(L, md) is None for md in P.MODES)


def _supplemented_witness_both(a: Act):
    if _supplemented_both(a) and not _couni(a):
        p = Payload("supplemented (both readings) but not co-uniform").act("A", a)
        for md in P.MODES:
            p.check("A", "supplemented", True, mode=md)
        return p.check("A", "co-uniform", False)
    return None


def _lc(a):
    return P.is_locally_cyclic_mask(lattice(a))


def _cyc(a):
    return P.is_cyclic_mask(lattice(a))


STRICT_IMPLICATIONS = [
    ("coessential => superfluous", _coess_not_sup, None),
    ("co-uniform => hollow", _pair("co-uniform", _couni, "hollow", _hollow), None),
    ("indecomposable => hollow", _pair("indecomposable", _indec, "hollow", _hollow), None),
    ("supplemented => co-uniform", _supplemented_witness_both, None),
    ("hollow => locally cyclic", _pair("hollow", _hollow, "locally-cyclic", _lc),
     "no finite witness: a finite hollow act is finitely generated, hence cyclic"),
    ("locally cyclic => cyclic", _pair("locally-cyclic", _lc, "cyclic", _cyc),
     "no finite witness: in a finite locally cyclic act the elements lie in a common cyclic subact"),
]


def _named_witnesses(m: Monoid) -> dict[str, Payload]:
    """Textbook separating examples built directly over ``m``."""
    out = {}
    t = theta(m)
    t2, _ = coproduct([t, t])
    t3, _ = coproduct([t, t, t])
    out["coessential => superfluous"] = _coess_not_sup(t2)
    out["co-uniform => hollow"] = _pair("co-uniform", _couni, "hollow", _hollow)(t2)
    out["supplemented => co-uniform"] = _supplemented_witness_both(t3)
    reg = regular_act(m)
    L = lattice(reg)
    if len(L.subacts) > 1:
        am = amalgam(reg, Subact(reg, L.proper[0]))
        out["indecomposable => hollow"] = _pair("indecomposable", _indec, "hollow", _hollow)(am)
    return {k: v for k, v in out.items() if v is not None}


@dataclass
class StrictnessEntry:
    implication: str
    found: bool
    monoid: str | None = None
    size: int | None = None
    witness: dict | None = None
    named_witness: dict | None = None
    note: str | None = None


def strictness_witness_search(specs=None, max_size: int = 3, cache: bool = True) -> list[StrictnessEntry]:
    specs = catalog() if specs is None else [parse_spec(s) if isinstance(s, str) else s for s in specs]
    found: dict[str, StrictnessEntry] = {}
    named: dict[str, dict] = {}
    for spec in specs:
        m = spec.build()
        for k, p in _named_witnesses(m).items():
            named.setdefault(k, dict(p.to_dict(), monoid=str(spec)))
        for n in range(1, max_size + 1):
            for a in corpus(m, n, True, cache):
                for name, fn, _ in STRICT_IMPLICATIONS:
                    if name in found:
                        continue
                    w = fn(a)
                    if w is not None:
                        found[name] = StrictnessEntry(name, True, str(spec), n, w.to_dict())
    out = []
    for name, _, note in STRICT_IMPLICATIONS:
        e = found.get(name) or StrictnessEntry(name, False, note=note or "no witness in corpus")
        e.named_witness = named.get(name)
        out.append(e)
    return out


def strictness_report(entries: list[StrictnessEntry]) -> ClaimReport:
    """Fold the strictness search into a report line; a missing witness without a
    documented note counts as a failure."""
    rep = ClaimReport(STRICTNESS, None, "Each implication in the chain is strict or documented as "
                      "coinciding on finite acts.", True, False, False)
    for e in entries:
        rep.instances_checked += 1
        if not e.found and e.note in (None, "no witness in corpus"):
            rep.failures_total += 1
            rep.failures.append(asdict(e))
    rep.corpus = {"witnesses": [asdict(e) for e in entries]}
    return rep
