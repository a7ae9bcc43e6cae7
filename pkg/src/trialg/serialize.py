"""JSON persistence for structure constants.

Rationals are serialized as exact "p/q" strings (never floats), sparse
bracket keys as 0-based index strings with deterministic (lexicographic)
ordering, so a given object always produces byte-identical output. Unknown
fields are ignored on input for forward compatibility.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .linalg import Matrix
from .superlie import GradedConjugation, GradedSuperAlgebra
from .trisystem import TriAlgebra

SCHEMA = "trialg-1"


def _rat(s) -> Fraction:
    return Fraction(str(s))


def _fmt_rat(x: Fraction) -> str:
    return str(Fraction(x))


def trialgebra_to_dict(system: TriAlgebra) -> dict:
    bracket = {}
    for (i, j, k), entry in system.tensor.items():
        bracket[f"{i},{j},{k}"] = {str(l): _fmt_rat(c) for l, c in entry.items()}
    return {
        "schema": SCHEMA,
        "kind": "trialgebra",
        "name": system.name,
        "dim": system.dim,
        "basis": list(system.basis_labels),
        "bracket": bracket,
    }


def trialgebra_from_dict(data: dict) -> TriAlgebra:
    if data.get("kind") != "trialgebra":
        raise ValueError("not a trialgebra record")
    dim = int(data["dim"])
    tensor = {}
    for key, entry in data.get("bracket", {}).items():
        i, j, k = (int(p) for p in key.split(","))
        tensor[(i, j, k)] = {int(l): _rat(c) for l, c in entry.items()}
    basis = data.get("basis")
    return TriAlgebra(str(data.get("name", "imported")), dim, tensor, basis)


def _key_str(key) -> str:
    return f"{key[0]}:{key[1]}"


def _key_parse(s: str):
    d, i = s.split(":")
    return (int(d), int(i))


def superlie_to_dict(g: GradedSuperAlgebra, sigma: GradedConjugation | None = None) -> dict:
    bracket = {}
    for (k1, k2), entry in g.structure.items():
        bracket[f"{_key_str(k1)}|{_key_str(k2)}"] = {_key_str(k3): _fmt_rat(c) for k3, c in entry.items()}
    out = {
        "schema": SCHEMA,
        "kind": "superlie",
        "name": g.name,
        "components": {str(d): g.components[d] for d in g.DEGREES},
        "labels": {str(d): list(g.labels[d]) for d in g.DEGREES},
        "bracket": bracket,
    }
    if sigma is not None:
        out["conjugation"] = {
            str(d): [[_fmt_rat(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]
            for d, m in sigma.maps.items()
        }
    return out


def superlie_from_dict(data: dict) -> tuple[GradedSuperAlgebra, GradedConjugation | None]:
    if data.get("kind") != "superlie":
        raise ValueError("not a superlie record")
    components = {int(d): int(v) for d, v in data["components"].items()}
    structure = {}
    for key, entry in data.get("bracket", {}).items():
        s1, s2 = key.split("|")
        structure[(_key_parse(s1), _key_parse(s2))] = {
            _key_parse(k): _rat(c) for k, c in entry.items()
        }
    labels = {int(d): tuple(v) for d, v in data.get("labels", {}).items()} or None
    g = GradedSuperAlgebra(str(data.get("name", "imported")), components, structure, labels)
    sigma = None
    if "conjugation" in data:
        maps = {}
        for d, rows in data["conjugation"].items():
            maps[int(d)] = Matrix([[_rat(c) for c in row] for row in rows])
        sigma = GradedConjugation(maps)
    return g, sigma


def evaluator_params_to_dict(family: str, params: dict) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "evaluator",
        "family": family,
        "params": params,
    }


def dumps(data: dict) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def dump_path(data: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(data))


def load_path(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "kind" not in data:
        raise ValueError("malformed structure constants file")
    return data
