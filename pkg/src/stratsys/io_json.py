"""JSON (de)serialization for quivers, representations, and system files.

Rationals travel as strings "p/q" (or "p" for integers).  Quiver and
representation payloads round-trip exactly.  Stratifying-system files name
standard modules symbolically so nobody hand-writes matrices:

    {"quiver": {"kronecker": {"m": 2}} | {"apq": {"p": 2, "q": 3}} | {...},
     "modules": [{"tauP": {"i": 1, "k": 3}}, {"tauI": {"i": 0, "k": 2}},
                 {"E_inf": 2}, {"E_zero": 1}, {"E_lambda": "1/2"},
                 {"S": 4}, {"rep": {...}}]}
"""

from __future__ import annotations

from typing import Any

from .apq import TUBE_INFTY, TUBE_ZERO, recognize_apq, tube_lambda
from .linalg import format_rational, parse_rational
from .modules import (ModuleRef, PREINJ, PREPROJ, TUBE, ref_plain,
                      ref_preinj, ref_preproj, ref_tube)
from .quiver import Quiver, kronecker
from .reps import Representation, make_rep, simple
from .systems import StratSystem


class InputError(ValueError):
    """Malformed input file; the message carries a location."""


def quiver_to_json(q: Quiver) -> dict:
    return q.to_json()


def quiver_from_json(data: Any, where: str = "quiver") -> Quiver:
    if not isinstance(data, dict):
        raise InputError(f"{where}: expected an object")
    if "kronecker" in data:
        spec = data["kronecker"]
        try:
            return kronecker(int(spec["m"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"{where}.kronecker: {exc}") from exc
    if "apq" in data:
        spec = data["apq"]
        try:
            from .quiver import canonical_apq
            return canonical_apq(int(spec["p"]), int(spec["q"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"{where}.apq: {exc}") from exc
    try:
        return Quiver.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{where}: {exc}") from exc


def rep_to_json(rep: Representation, inline_quiver: bool = True) -> dict:
    out: dict[str, Any] = {"dims": list(rep.dims)}
    if inline_quiver:
        out["quiver"] = rep.quiver.to_json()
    out["maps"] = {
        a.label: [[format_rational(x) for x in row] for row in rep.map(a.label).entries]
        for a in rep.quiver.arrows
    }
    return out


def rep_from_json(data: Any, quiver: Quiver | None = None, where: str = "rep") -> Representation:
    if not isinstance(data, dict):
        raise InputError(f"{where}: expected an object")
    if quiver is None:
        if "quiver" not in data:
            raise InputError(f"{where}: missing quiver")
        quiver = quiver_from_json(data["quiver"], where=f"{where}.quiver")
    if "dims" not in data:
        raise InputError(f"{where}: missing dims")
    dims = data["dims"]
    maps = {}
    for label, rows in (data.get("maps") or {}).items():
        try:
            maps[label] = [[parse_rational(x) for x in row] for row in rows]
        except (ValueError, TypeError) as exc:
            raise InputError(f"{where}.maps.{label}: {exc}") from exc
    try:
        return make_rep(quiver, dims, maps)
    except (ValueError, KeyError) as exc:
        raise InputError(f"{where}: {exc}") from exc


def module_ref_to_json(ref: ModuleRef) -> dict:
    if ref.kind == PREPROJ:
        return {"tauP": {"i": ref.vertex, "k": ref.power}}
    if ref.kind == PREINJ:
        return {"tauI": {"i": ref.vertex, "k": ref.power}}
    if ref.kind == TUBE:
        pt = ref.point
        if pt.tube.kind == "infty":
            base: dict[str, Any] = {"E_inf": pt.index}
        elif pt.tube.kind == "zero":
            base = {"E_zero": pt.index}
        else:
            base = {"E_lambda": format_rational(pt.tube.lam), "index": pt.index}
        if pt.level != 1:
            base["level"] = pt.level
        return base
    return {"rep": rep_to_json(ref.rep_obj, inline_quiver=False)}


def module_ref_from_json(data: Any, quiver: Quiver, where: str = "module") -> ModuleRef:
    if not isinstance(data, dict) or len([k for k in data if k not in ("level", "index")]) != 1:
        raise InputError(f"{where}: expected an object with one descriptor key")
    pq = recognize_apq(quiver)
    level = int(data.get("level", 1))
    if "tauP" in data:
        spec = data["tauP"]
        return ref_preproj(quiver, int(spec["i"]), int(spec.get("k", 0)))
    if "tauI" in data:
        spec = data["tauI"]
        return ref_preinj(quiver, int(spec["i"]), int(spec.get("k", 0)))
    if "S" in data:
        vertex = int(data["S"])
        if vertex not in quiver.vertices:
            raise InputError(f"{where}.S: unknown vertex {vertex}")
        return ref_plain(simple(quiver, vertex))
    if "rep" in data:
        return ref_plain(rep_from_json(data["rep"], quiver=quiver, where=f"{where}.rep"))
    for key, label_maker in (("E_inf", lambda: TUBE_INFTY),
                             ("E_zero", lambda: TUBE_ZERO),
                             ("E_lambda", None)):
        if key in data:
            if pq is None:
                raise InputError(f"{where}.{key}: tube modules need a canonical "
                                 "cycle quiver (apq)")
            p, q = pq
            if key == "E_lambda":
                label = tube_lambda(parse_rational(data[key]))
                index = int(data.get("index", 1))
            else:
                label = label_maker()
                index = int(data[key])
            try:
                return ref_tube(p, q, label, index, level)
            except ValueError as exc:
                raise InputError(f"{where}.{key}: {exc}") from exc
    raise InputError(f"{where}: unknown descriptor {sorted(data)}")


def system_to_json(s: StratSystem) -> dict:
    return {"quiver": s.quiver.to_json(),
            "modules": [module_ref_to_json(m) for m in s.modules]}


def system_from_json(data: Any, where: str = "system") -> StratSystem:
    if not isinstance(data, dict):
        raise InputError(f"{where}: expected an object")
    if "quiver" not in data:
        raise InputError(f"{where}: missing quiver")
    quiver = quiver_from_json(data["quiver"], where=f"{where}.quiver")
    modules = data.get("modules")
    if not isinstance(modules, list):
        raise InputError(f"{where}: missing module list")
    refs = [module_ref_from_json(m, quiver, where=f"{where}.modules[{k}]")
            for k, m in enumerate(modules)]
    return StratSystem(quiver, tuple(refs))
