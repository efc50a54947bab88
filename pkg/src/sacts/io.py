"""ActFile JSON format.

::

    {
      "monoid": {"elements": ["1", "0"], "identity": "1",
                 "table": [["1", "0"], ["0", "0"]]},
      "act": {"elements": ["1", "0"], "action": [["1", "0"], ["0", "0"]]},
      "subacts": {"I": ["0"]},
      "homs": {"f": {"target": {"elements": [...], "action": [...]},
                     "map": {"1": "...", "0": "..."}}}
    }

``monoid`` may also be a catalog spec string such as ``"S2"`` or
``"cyclic_monoid(2,1)"``.  Action rows follow act elements, columns follow
monoid elements.  ``subacts`` and ``homs`` are optional.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .core import Act, ActError, Hom, Monoid, Subact, validate_act, validate_monoid


class ActFileError(ActError):
    pass


@dataclass
class ActFile:
    monoid: Monoid
    act: Act
    subacts: dict[str, Subact] = field(default_factory=dict)
    homs: dict[str, Hom] = field(default_factory=dict)


def _index(labels, what):
    if len(set(labels)) != len(labels):
        raise ActFileError(f"duplicate {what} labels")
    return {str(x): i for i, x in enumerate(labels)}


def _lookup(index, label, what):
    try:
        return index[str(label)]
    except KeyError:
        raise ActFileError(f"unknown {what} label {label!r}") from None


def parse_monoid(block: Any) -> Monoid:
    if isinstance(block, str):
        from .catalog import parse_spec
        return parse_spec(block).build()
    try:
        labels = [str(x) for x in block["elements"]]
        idx = _index(labels, "monoid")
        table = [[_lookup(idx, x, "monoid") for x in row] for row in block["table"]]
        e = _lookup(idx, block["identity"], "monoid")
    except (KeyError, TypeError) as exc:
        raise ActFileError(f"malformed monoid block: {exc}") from None
    if len(table) != len(labels):
        raise ActFileError("monoid table has wrong number of rows")
    return validate_monoid(table, e, labels)


def parse_act(monoid: Monoid, block: Any) -> Act:
    try:
        labels = [str(x) for x in block["elements"]]
        rows = block["action"]
    except (KeyError, TypeError) as exc:
        raise ActFileError(f"malformed act block: {exc}") from None
    idx = _index(labels, "act")
    if len(rows) != len(labels):
        raise ActFileError("action table has wrong number of rows")
    action = [[_lookup(idx, x, "act") for x in row] for row in rows]
    return validate_act(monoid, action, labels)


def parse_actfile(data: dict) -> ActFile:
    if not isinstance(data, dict) or "monoid" not in data or "act" not in data:
        raise ActFileError("an ActFile needs 'monoid' and 'act' blocks")
    monoid = parse_monoid(data["monoid"])
    act = parse_act(monoid, data["act"])
    subacts = {}
    for name, members in (data.get("subacts") or {}).items():
        idx = {act.label(a): a for a in act.elements}
        try:
            subacts[name] = act.subact(_lookup(idx, x, "act") for x in members)
        except ActFileError:
            raise
        except ActError as exc:
            raise ActFileError(f"subact {name!r}: {exc}") from None
    homs = {}
    for name, spec in (data.get("homs") or {}).items():
        target = parse_act(monoid, spec["target"])
        tidx = {target.label(a): a for a in target.elements}
        mapping = spec["map"]
        f = tuple(_lookup(tidx, mapping[act.label(a)], "target") for a in act.elements)
        h = Hom(act, target, f)
        if not h.is_equivariant():
            raise ActFileError(f"hom {name!r} is not equivariant")
        homs[name] = h
    return ActFile(monoid, act, subacts, homs)


def load_actfile(path: str | Path) -> ActFile:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ActFileError(f"cannot read {path}: {exc}") from None
    return parse_actfile(data)


def load_monoid(path: str | Path) -> Monoid:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    return parse_monoid(data.get("monoid", data))


def monoid_block(m: Monoid) -> dict:
    return {
        "elements": [m.label(s) for s in m.elements],
        "identity": m.label(m.identity),
        "table": [[m.label(x) for x in row] for row in m.table],
    }


def act_block(act: Act) -> dict:
    return {
        "elements": [act.label(a) for a in act.elements],
        "action": [[act.label(x) for x in row] for row in act.action],
    }


def actfile_dict(act: Act, subacts: dict[str, Subact | int] | None = None,
                 homs: dict[str, Hom] | None = None) -> dict:
    out: dict[str, Any] = {"monoid": monoid_block(act.monoid), "act": act_block(act)}
    if subacts:
        out["subacts"] = {
            name: [act.label(a) for a in act.elements if (b if isinstance(b, int) else b.mask) >> a & 1]
            for name, b in subacts.items()
        }
    if homs:
        out["homs"] = {
            name: {"target": act_block(h.target),
                   "map": {act.label(a): h.target.label(h.map[a]) for a in act.elements}}
            for name, h in homs.items()
        }
    return out


def dumps(data: dict) -> str:
    return json.dumps(data, ensure_ascii=False, sort_keys=True)


def write_actfile(path: str | Path, act: Act, subacts=None, homs=None) -> None:
    Path(path).write_text(json.dumps(actfile_dict(act, subacts, homs), ensure_ascii=False, indent=2) + "\n",
                          encoding="utf-8")
