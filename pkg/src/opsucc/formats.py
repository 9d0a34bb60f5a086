"""JSON interchange for presentations.

Layout::

    {"name": ..., "symmetric": true,
     "generators": [{"id": "mu"}, ...],
     "s2_action": {"mu": [{"gen": "mu", "coeff": "-1"}]},
     "relations": [{"terms": [{"coeff": "1", "tree": ["mu", ["mu", 1, 2], 3]}, ...]}],
     "maps": {"Su(Lie)": {"dot": [{"gen": "mu<", "coeff": "1"}]}}}

Serialization sorts terms in basis order, so dumping a loaded file is stable.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping

from .linalg import FormalSum, format_rational, parse_rational
from .presentation import GeneratorMap, Presentation, PresentationError, require_valid
from .trees import S2Action, TreeError, sum_from_json, sum_to_json


class FormatError(PresentationError):
    pass


def presentation_to_json(p: Presentation) -> dict:
    out = {"name": p.name, "symmetric": p.symmetric,
           "generators": [{"id": g} for g in p.generators]}
    if p.symmetric:
        out["s2_action"] = {g: [{"gen": h, "coeff": format_rational(c)} for h, c in sorted(v.items())]
                            for g, v in p.action.items()}
    out["relations"] = [{"terms": sum_to_json(r)} for r in p.relations]
    if p.maps:
        out["maps"] = {k: f.to_json() for k, f in sorted(p.maps.items())}
    return out


def dumps(p: Presentation) -> str:
    return json.dumps(presentation_to_json(p), indent=2, ensure_ascii=False) + "\n"


def _require(obj: Mapping, key: str, kind):
    if key not in obj or not isinstance(obj[key], kind):
        raise FormatError(f"field {key!r} is missing or has the wrong type")
    return obj[key]


def presentation_from_json(obj: Mapping, validate: bool = True) -> Presentation:
    if not isinstance(obj, Mapping):
        raise FormatError("a presentation file holds a JSON object")
    name = _require(obj, "name", str)
    symmetric = _require(obj, "symmetric", bool)
    try:
        gens = tuple(g["id"] for g in _require(obj, "generators", list))
        action = None
        if symmetric:
            raw = _require(obj, "s2_action", dict)
            action = S2Action({g: FormalSum((d["gen"], parse_rational(str(d["coeff"]))) for d in terms)
                               for g, terms in raw.items()})
        elif "s2_action" in obj:
            raise FormatError("a nonsymmetric presentation has no s2_action")
        rels = tuple(sum_from_json(r["terms"]) for r in _require(obj, "relations", list))
        maps = {k: GeneratorMap.from_json(v) for k, v in obj.get("maps", {}).items()}
    except (KeyError, TypeError, ValueError, TreeError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"malformed presentation: {exc}") from None
    p = Presentation(name, symmetric, gens, action, rels, maps=maps)
    if validate:
        require_valid(p)
    return p


def loads(text: str, validate: bool = True) -> Presentation:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not JSON: {exc}") from None
    return presentation_from_json(obj, validate)


def load(path: str | Path, validate: bool = True) -> Presentation:
    return loads(Path(path).read_text(encoding="utf-8"), validate)


def map_from_json_text(text: str) -> GeneratorMap:
    try:
        obj = json.loads(text)
        if not isinstance(obj, Mapping):
            raise FormatError("a generator map file holds a JSON object")
        return GeneratorMap.from_json(obj)
    except FormatError:
        raise
    except (json.JSONDecodeError, AttributeError, KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed generator map: {exc}") from None
