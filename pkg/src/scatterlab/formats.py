"""Shared on-disk formats.

Everything is JSON with canonically sorted lists, so fixture files diff
cleanly and repeated runs are byte-identical.  Structural validation happens
on load and raises :class:`ParseError`; semantic validity of a condition is
a separate gate (:func:`scatterlab.poset.validate_condition`).
"""

from __future__ import annotations

import json
from typing import Any

from .amalgam import InsertionLayout
from .errors import ParseError
from .generic import Goal, NbhdGoal, PointGoal, SpaceModel
from .poset import Condition
from .universe import PairFunction


def to_text(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _as_int_list(value: Any, what: str, ascending: bool = True) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise ParseError(f"{what} must be a list of integers, got {value!r}")
    if ascending and value != sorted(set(value)):
        raise ParseError(f"{what} must be strictly ascending, got {value}")
    return value


def _loads(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{what}: invalid JSON ({exc})") from exc


def dump_pair_function(f: PairFunction) -> str:
    entries = [
        [a, b, sorted(v)]
        for (a, b), v in sorted(f.values.items())
        if v
    ]
    return to_text({"kappa": f.kappa, "f": entries})


def load_pair_function(text: str) -> PairFunction:
    doc = _loads(text, "pair function")
    if not isinstance(doc, dict) or set(doc) != {"kappa", "f"}:
        raise ParseError("pair function document needs exactly the keys 'kappa' and 'f'")
    kappa = doc["kappa"]
    if not isinstance(kappa, int) or kappa < 1:
        raise ParseError(f"kappa must be a positive integer, got {kappa!r}")
    if not isinstance(doc["f"], list):
        raise ParseError("'f' must be a list of [alpha, beta, [gamma...]] triples")
    entries: dict[tuple[int, int], frozenset[int]] = {}
    last: tuple[int, int] | None = None
    for item in doc["f"]:
        if not (isinstance(item, list) and len(item) == 3):
            raise ParseError(f"malformed f entry {item!r}")
        a, b, gammas = item
        if not (isinstance(a, int) and isinstance(b, int) and a < b):
            raise ParseError(f"f entry needs alpha < beta, got {item!r}")
        if last is not None and (a, b) <= last:
            raise ParseError("f entries must be in ascending (alpha, beta) order")
        last = (a, b)
        entries[(a, b)] = frozenset(_as_int_list(gammas, f"f value at ({a},{b})"))
    try:
        return PairFunction.build(kappa, entries)
    except Exception as exc:
        raise ParseError(str(exc)) from exc


def dump_condition(p: Condition) -> str:
    return to_text(
        {
            "a": list(p.a),
            "h": [[xi, sorted(p.h[xi])] for xi in p.a],
            "i": [[x, y, sorted(v)] for (x, y), v in sorted(p.i.items())],
        }
    )


def load_condition(text: str) -> Condition:
    doc = _loads(text, "condition")
    if not isinstance(doc, dict) or set(doc) != {"a", "h", "i"}:
        raise ParseError("condition document needs exactly the keys 'a', 'h' and 'i'")
    a = _as_int_list(doc["a"], "'a'")
    h: dict[int, frozenset[int]] = {}
    if not isinstance(doc["h"], list):
        raise ParseError("'h' must be a list of [xi, [members...]] pairs")
    for item in doc["h"]:
        if not (isinstance(item, list) and len(item) == 2 and isinstance(item[0], int)):
            raise ParseError(f"malformed h entry {item!r}")
        if item[0] in h:
            raise ParseError(f"duplicate h entry at {item[0]}")
        h[item[0]] = frozenset(_as_int_list(item[1], f"h value at {item[0]}"))
    i: dict[tuple[int, int], frozenset[int]] = {}
    if not isinstance(doc["i"], list):
        raise ParseError("'i' must be a list of [xi, eta, [members...]] triples")
    for item in doc["i"]:
        if not (isinstance(item, list) and len(item) == 3 and isinstance(item[0], int) and isinstance(item[1], int)):
            raise ParseError(f"malformed i entry {item!r}")
        x, y, members = item
        if not x < y:
            raise ParseError(f"i entry needs xi < eta, got {item!r}")
        if (x, y) in i:
            raise ParseError(f"duplicate i entry at ({x},{y})")
        i[(x, y)] = frozenset(_as_int_list(members, f"i value at ({x},{y})"))
    return Condition(a, h, i)


def dump_space(space: SpaceModel) -> str:
    return to_text(
        {
            "kappa": space.kappa,
            "H": [[alpha, sorted(space.H[alpha])] for alpha in space.carrier],
            "i": [[x, y, sorted(v)] for (x, y), v in sorted(space.i.items())],
        }
    )


def load_space(text: str) -> SpaceModel:
    doc = _loads(text, "space")
    if not isinstance(doc, dict) or set(doc) != {"kappa", "H", "i"}:
        raise ParseError("space document needs exactly the keys 'kappa', 'H' and 'i'")
    kappa = doc["kappa"]
    if not isinstance(kappa, int) or kappa < 1:
        raise ParseError(f"kappa must be a positive integer, got {kappa!r}")
    H: dict[int, frozenset[int]] = {}
    if not isinstance(doc["H"], list):
        raise ParseError("'H' must be a list of [alpha, [members...]] pairs")
    for item in doc["H"]:
        if not (isinstance(item, list) and len(item) == 2 and isinstance(item[0], int)):
            raise ParseError(f"malformed H entry {item!r}")
        H[item[0]] = frozenset(_as_int_list(item[1], f"H value at {item[0]}"))
    if set(H) != set(range(kappa)):
        raise ParseError("'H' must list every carrier ordinal exactly once")
    i: dict[tuple[int, int], frozenset[int]] = {}
    if not isinstance(doc["i"], list):
        raise ParseError("'i' must be a list of [xi, eta, [members...]] triples")
    for item in doc["i"]:
        if not (isinstance(item, list) and len(item) == 3 and isinstance(item[0], int) and isinstance(item[1], int)):
            raise ParseError(f"malformed i entry {item!r}")
        x, y, members = item
        if not x < y:
            raise ParseError(f"i entry needs xi < eta, got {item!r}")
        i[(x, y)] = frozenset(_as_int_list(members, f"i value at ({x},{y})"))
    return SpaceModel(kappa, H, i)


def dump_schedule(goals: list[Goal]) -> str:
    out: list[dict] = []
    for goal in goals:
        if isinstance(goal, PointGoal):
            out.append({"point": goal.alpha})
        elif isinstance(goal, NbhdGoal):
            out.append({"nbhd": {"beta": goal.beta, "b": sorted(goal.b), "Z": sorted(goal.Z)}})
        else:
            raise ParseError(f"unknown goal {goal!r}")
    return to_text(out)


def load_schedule(text: str) -> list[Goal]:
    doc = _loads(text, "schedule")
    if not isinstance(doc, list):
        raise ParseError("schedule must be a list of goal entries")
    goals: list[Goal] = []
    for item in doc:
        if not isinstance(item, dict) or len(item) != 1:
            raise ParseError(f"malformed schedule entry {item!r}")
        if "point" in item:
            if not isinstance(item["point"], int):
                raise ParseError(f"point goal must be an integer, got {item!r}")
            goals.append(PointGoal(item["point"]))
        elif "nbhd" in item:
            body = item["nbhd"]
            if not isinstance(body, dict) or set(body) != {"beta", "b", "Z"}:
                raise ParseError(f"nbhd goal needs keys beta, b, Z: {item!r}")
            if not isinstance(body["beta"], int):
                raise ParseError(f"nbhd beta must be an integer: {item!r}")
            goals.append(
                NbhdGoal(
                    body["beta"],
                    frozenset(_as_int_list(body["b"], "nbhd b")),
                    frozenset(_as_int_list(body["Z"], "nbhd Z")),
                )
            )
        else:
            raise ParseError(f"schedule entry must be 'point' or 'nbhd': {item!r}")
    return goals


def dump_layout(layout: InsertionLayout) -> str:
    return to_text(
        {
            "S": sorted(layout.S),
            "E": sorted(layout.E),
            "F": sorted(layout.F),
            "Q": sorted(layout.Q),
            "gamma_pairs": [list(gp) for gp in layout.gamma_pairs],
        }
    )


def load_layout(text: str) -> InsertionLayout:
    doc = _loads(text, "layout")
    keys = {"S", "E", "F", "Q", "gamma_pairs"}
    if not isinstance(doc, dict) or set(doc) != keys:
        raise ParseError(f"layout document needs exactly the keys {sorted(keys)}")
    gp = doc["gamma_pairs"]
    if not isinstance(gp, list) or not all(
        isinstance(x, list) and len(x) == 2 and all(isinstance(g, int) for g in x) for x in gp
    ):
        raise ParseError("gamma_pairs must be a list of [g0, g1] integer pairs")
    return InsertionLayout(
        S=frozenset(_as_int_list(doc["S"], "S")),
        E=frozenset(_as_int_list(doc["E"], "E")),
        F=frozenset(_as_int_list(doc["F"], "F")),
        Q=frozenset(_as_int_list(doc["Q"], "Q")),
        gamma_pairs=tuple((x[0], x[1]) for x in gp),
    )
