"""Model and element files.

Model file (JSON)::

    {"generators": [{"name": "y1", "degree": 0, "weight": 0}, ...],
     "pairing": [["th1", "y1"], ["tht", "t"]],
     "fiber": [["tht", "t"]],
     "differential": {"ybar1": "z1"}}

Differential values and element files accept either term text or term records.
An element file is ``{"text": "..."}`` or ``{"terms": [...]}``, with an optional
``"cutoff"``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import AlgebraElement, Context, Generator, element_from_json
from .gerstenhaber import GerstenhaberModel
from .parse import parse


def _value(v, ctx: Context, cutoff=None) -> AlgebraElement:
    if isinstance(v, str):
        return parse(v, ctx, cutoff)
    if isinstance(v, list):
        return element_from_json(v, ctx, cutoff)
    if isinstance(v, dict):
        cutoff = v.get("cutoff", cutoff)
        if "text" in v:
            return parse(v["text"], ctx, cutoff)
        if "terms" in v:
            return element_from_json(v["terms"], ctx, cutoff)
    raise ValueError("element must be term text, a term list, or an object with 'text' or 'terms'")


def model_from_json(data: dict) -> GerstenhaberModel:
    for key in ("generators", "pairing"):
        if key not in data:
            raise ValueError(f"model file lacks {key!r}")
    ctx = Context([Generator.from_json(g) for g in data["generators"]])
    diff = {k: _value(v, ctx) for k, v in data.get("differential", {}).items()}
    return GerstenhaberModel(ctx, tuple(tuple(p) for p in data["pairing"]), diff,
                             tuple(tuple(p) for p in data.get("fiber", [])))


def load_model(path) -> GerstenhaberModel:
    return model_from_json(json.loads(Path(path).read_text()))


def load_element(path, ctx: Context, cutoff=None) -> AlgebraElement:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return parse(text.strip(), ctx, cutoff)
    return _value(data, ctx, cutoff)
