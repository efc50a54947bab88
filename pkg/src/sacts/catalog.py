"""Named finite monoids used to build act corpora."""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from pathlib import Path

from .core import ActError, Monoid, validate_monoid


@dataclass(frozen=True)
class MonoidSpec:
    kind: str
    params: tuple = ()

    def __str__(self):
        if not self.params:
            return self.kind
        return f"{self.kind}({','.join(str(p) for p in self.params)})"

    def build(self) -> Monoid:
        return build_monoid(self)


def _cyclic_monoid(index: int, period: int):
    # a^0 .. a^(index+period-1), with a^(index+period) = a^index
    size = index + period

    def power(k):
        return k if k < size else index + (k - index) % period

    labels = ["1"] + [f"a^{k}" if k > 1 else "a" for k in range(1, size)]
    table = [[power(i + j) for j in range(size)] for i in range(size)]
    return table, 0, labels


def _zero_adjoined(base: Monoid):
    n = base.size
    table = [list(row) + [n] for row in base.table] + [[n] * (n + 1)]
    labels = [base.label(s) for s in base.elements] + ["0"]
    return table, base.identity, labels


def _band_with_identity(n: int, right: bool):
    # identity 0, then n zero-type elements: xy = y (right zero) or xy = x (left zero)
    size = n + 1
    table = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            if i == 0:
                table[i][j] = j
            elif j == 0:
                table[i][j] = i
            else:
                table[i][j] = j if right else i
    labels = ["1"] + [chr(ord("a") + k) for k in range(n)]
    return table, 0, labels


def _min_chain(n: int):
    # {1..n} under min with an adjoined identity ε above everything
    size = n + 1
    table = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            if i == 0:
                table[i][j] = j
            elif j == 0:
                table[i][j] = i
            else:
                table[i][j] = min(i, j)
    labels = ["ε"] + [str(k) for k in range(1, n + 1)]
    return table, 0, labels


def _full_transformation(n: int):
    if n > 3:
        raise ActError("full_transformation limited to n <= 3")
    maps = list(product(range(n), repeat=n))
    index = {f: i for i, f in enumerate(maps)}
    ident = tuple(range(n))
    # right action on points: x.(fg) = (x.f).g
    table = [[index[tuple(g[f[x]] for x in range(n))] for g in maps] for f in maps]
    labels = ["".join(str(v + 1) for v in f) for f in maps]
    return table, index[ident], labels


def build_monoid(spec: MonoidSpec) -> Monoid:
    k, p = spec.kind, spec.params
    if k == "trivial":
        table, e, labels = [[0]], 0, ["1"]
    elif k == "cyclic_group":
        table, e, labels = _cyclic_monoid(0, p[0])
    elif k == "cyclic_monoid":
        table, e, labels = _cyclic_monoid(p[0], p[1])
    elif k == "zero_adjoined":
        table, e, labels = _zero_adjoined(build_monoid(p[0]))
    elif k == "right_zero_identity":
        table, e, labels = _band_with_identity(p[0], right=True)
    elif k == "left_zero_identity":
        table, e, labels = _band_with_identity(p[0], right=False)
    elif k == "min_chain":
        table, e, labels = _min_chain(p[0])
    elif k == "full_transformation":
        table, e, labels = _full_transformation(p[0])
    elif k == "table":
        from .io import load_monoid
        return load_monoid(Path(p[0]))
    else:
        raise ActError(f"unknown monoid kind {k!r}")
    return validate_monoid(table, e, labels)


ALIASES = {
    "S2": "zero_adjoined(trivial)",
    "C2": "cyclic_group(2)",
    "C3": "cyclic_group(3)",
    "C4": "cyclic_group(4)",
    "T2": "full_transformation(2)",
    "T3": "full_transformation(3)",
    "RZ2": "right_zero_identity(2)",
    "LZ2": "left_zero_identity(2)",
}

_CALL = re.compile(r"^\s*([a-z_]+)\s*(?:\((.*)\))?\s*$")


def parse_spec(text: str) -> MonoidSpec:
    """Parse ``kind(arg, ...)``; nested specs are allowed for ``zero_adjoined``."""
    text = ALIASES.get(text.strip(), text.strip())
    m = _CALL.match(text)
    if not m:
        raise ActError(f"cannot parse monoid spec {text!r}")
    kind, args = m.group(1), m.group(2)
    if not args:
        return MonoidSpec(kind)
    if kind == "zero_adjoined":
        return MonoidSpec(kind, (parse_spec(args),))
    if kind == "table":
        return MonoidSpec(kind, (args.strip(),))
    return MonoidSpec(kind, tuple(int(x) for x in args.split(",")))


# Pairwise non-isomorphic; S2 doubles as cyclic_monoid(1,1) and min_chain(1).
DESK_CATALOG = [
    "trivial",
    "zero_adjoined(trivial)",
    "cyclic_group(2)",
    "cyclic_group(3)",
    "cyclic_group(4)",
    "cyclic_monoid(1,2)",
    "cyclic_monoid(2,1)",
    "cyclic_monoid(1,3)",
    "cyclic_monoid(2,2)",
    "cyclic_monoid(3,1)",
    "zero_adjoined(cyclic_group(2))",
    "zero_adjoined(cyclic_group(3))",
    "right_zero_identity(2)",
    "right_zero_identity(3)",
    "left_zero_identity(2)",
    "left_zero_identity(3)",
    "min_chain(2)",
    "min_chain(3)",
    "full_transformation(2)",
    "full_transformation(3)",
]


def catalog(max_monoid_size: int | None = None, include_t3: bool = True) -> list[MonoidSpec]:
    specs = [parse_spec(s) for s in DESK_CATALOG]
    if not include_t3:
        specs = [s for s in specs if str(s) != "full_transformation(3)"]
    if max_monoid_size is not None:
        specs = [s for s in specs if s.build().size <= max_monoid_size or s.kind == "full_transformation"]
    return specs
