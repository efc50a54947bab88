"""Shared corpus and strategies for the test-suite."""
from functools import lru_cache
from pathlib import Path

from hypothesis import strategies as st

from sacts import Act, parse_spec
from sacts.suite import iso_reps

FIXTURES = Path(__file__).parent / "fixtures"

# small enough that every act of size <= 4 is cheap to check exhaustively
SMALL_SPECS = [
    "trivial", "S2", "C2", "C3", "cyclic_monoid(1,2)", "cyclic_monoid(2,1)",
    "zero_adjoined(cyclic_group(2))", "RZ2", "LZ2", "min_chain(2)", "T2",
]


@lru_cache(maxsize=None)
def monoid(spec: str):
    return parse_spec(spec).build()


@lru_cache(maxsize=None)
def small_acts(max_n: int = 4) -> tuple:
    out = []
    for spec in SMALL_SPECS:
        m = monoid(spec)
        for n in range(1, max_n + 1):
            out.extend(iso_reps(m, n))
    return tuple(out)


def relabel(act: Act, perm) -> Act:
    """Copy of ``act`` with element ``a`` renamed ``perm[a]``."""
    inv = [0] * act.size
    for a, p in enumerate(perm):
        inv[p] = a
    action = tuple(tuple(perm[x] for x in act.action[inv[i]]) for i in range(act.size))
    return Act(act.monoid, action)


def acts(max_n: int = 4):
    return st.sampled_from(small_acts(max_n))


@st.composite
def permuted_acts(draw, max_n: int = 4):
    a = draw(acts(max_n))
    perm = draw(st.permutations(range(a.size)))
    return a, relabel(a, perm), perm


@st.composite
def act_with_subacts(draw, k: int = 2, max_n: int = 4):
    from sacts import lattice
    a = draw(acts(max_n))
    subs = lattice(a).subacts
    return (a,) + tuple(draw(st.sampled_from(subs)) for _ in range(k))


def replay(payload: dict, workdir: Path) -> list[tuple[dict, int]]:
    """Run every check of a counterexample payload through ``sacts check``.

    Returns (check, exit code) pairs; a faithful replay gives exit 0 where the
    check expects True and 1 where it expects False.
    """
    import contextlib
    import io as _io
    import json

    from sacts.cli import main

    paths = {}
    for name, block in payload["acts"].items():
        p = workdir / f"{name}.json"
        p.write_text(json.dumps(block, ensure_ascii=False), encoding="utf-8")
        paths[name] = p
    out = []
    for chk in payload["checks"]:
        argv = ["check", str(paths[chk["act"]]), "--property", chk["property"]]
        for s in chk["subacts"]:
            argv += ["--subact", s]
        if chk["hom"]:
            argv += ["--hom", chk["hom"]]
        if chk["mode"]:
            argv += ["--mode", chk["mode"]]
        with contextlib.redirect_stdout(_io.StringIO()):
            out.append((chk, main(argv)))
    return out


def replay_agrees(payload: dict, workdir: Path) -> bool:
    return all(code == (0 if chk["expect"] else 1) for chk, code in replay(payload, workdir))
