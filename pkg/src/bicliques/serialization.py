"""JSON readers and writers for instances, bicliques, solutions and families.

Instance: ``{"n": int, "weights": [[w, ...], ...]}`` with each ``w`` an
integer string, ``"p/q"`` or ``"inf"`` (bare JSON integers are accepted on
input). Biclique: ``{"u": [...], "v": [...]}``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .core import Biclique, BipartiteGraph, InstanceError, Weight, format_weight
from .matching import UnweightedBipartiteGraph


def instance_to_json(g: BipartiteGraph) -> dict[str, Any]:
    return {"n": g.n, "weights": [[format_weight(w) for w in row] for row in g.weights]}


def weights_to_json(flat: Sequence[Weight], n: int) -> dict[str, Any]:
    return {"n": n, "weights": [[format_weight(w) for w in flat[i * n:(i + 1) * n]] for i in range(n)]}


def instance_from_json(doc: dict[str, Any]) -> BipartiteGraph:
    try:
        n, rows = doc["n"], doc["weights"]
    except (KeyError, TypeError) as exc:
        raise InstanceError("instance needs 'n' and 'weights'") from exc
    g = BipartiteGraph(rows)
    if g.n != n:
        raise InstanceError(f"declared n={n} but weight matrix is {g.n} x {g.n}")
    return g


def unweighted_from_json(doc: dict[str, Any]) -> UnweightedBipartiteGraph:
    g = instance_from_json(doc)
    rows = []
    for row in g.weights:
        if any(w not in (0, 1) for w in row):
            raise InstanceError("unweighted instance must have 0/1 weights")
        rows.append([int(w) for w in row])
    return UnweightedBipartiteGraph(rows)


def unweighted_to_json(g: UnweightedBipartiteGraph) -> dict[str, Any]:
    return {"n": g.n, "weights": [[str(a) for a in row] for row in g.adjacency]}


def biclique_to_json(b: Biclique) -> dict[str, list[int]]:
    return {"u": list(b.u), "v": list(b.v)}


def biclique_from_json(doc: dict[str, Any]) -> Biclique:
    try:
        return Biclique(doc["u"], doc["v"])
    except (KeyError, TypeError) as exc:
        raise InstanceError("biclique needs 'u' and 'v' lists") from exc


def dumps(doc: Any) -> str:
    """Canonical rendering: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def load_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{path}: malformed JSON ({exc.msg})") from exc

