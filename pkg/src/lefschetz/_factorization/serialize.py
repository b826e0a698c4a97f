"""JSON form of factorizations.

    {"surface": {"genus", "boundary", "marked"},
     "curves": {key: {"name", "kind", "data", "homology"?, "separation"?}},
     "letters": [{"curve": key, "power"}],
     "target": "identity" | "boundary_multitwist",
     "target_curves": [key, ...]}

Keys are sorted when dumping, so equal factorizations give byte-identical output.
"""

import json
from typing import Any

from pydantic import ValidationError

from lefschetz._braid.word import BraidWord
from lefschetz._factorization.curves import (
    BlockLoop,
    BoundaryParallel,
    ChainCurve,
    CurveKind,
    CurveSymbol,
    DerivedBand,
    Letter,
    SurfaceSignature,
    TwistFactorization,
)
from lefschetz._factorization.errors import FactorizationDecodeError


def _kind_data(kind: CurveKind) -> dict[str, Any]:
    match kind:
        case ChainCurve(index=index):
            return {"index": index}
        case DerivedBand(word=word):
            return word.to_json_dict()
        case BlockLoop(first=first, last=last, sheet=sheet):
            return {"first": first, "last": last, "sheet": sheet}
        case BoundaryParallel(component=component):
            return {"component": component}


def _curve_dict(curve: CurveSymbol) -> dict[str, Any]:
    entry: dict[str, Any] = {
        "name": curve.name,
        "kind": curve.kind.kind,
        "data": _kind_data(curve.kind),
    }
    if curve.homology_class is not None:
        entry["homology"] = list(curve.homology_class)
    if curve.separation is not None:
        entry["separation"] = curve.separation
    return entry


def to_json_dict(f: TwistFactorization) -> dict[str, Any]:
    return {
        "surface": f.ambient.model_dump(),
        "curves": {key: _curve_dict(curve) for key, curve in f.curves().items()},
        "letters": [
            {"curve": letter.curve.key, "power": letter.power} for letter in f.letters
        ],
        "target": f.target,
        "target_curves": [curve.key for curve in f.target_curves],
    }


def canonical_json(f: TwistFactorization) -> str:
    return json.dumps(to_json_dict(f), sort_keys=True, separators=(",", ":"))


def _decode_kind(kind: str, data: dict[str, Any]) -> CurveKind:
    match kind:
        case "chain":
            return ChainCurve(index=data["index"])
        case "derived_band":
            return DerivedBand(word=BraidWord.from_json_dict(data))
        case "block_loop":
            return BlockLoop(
                first=data["first"], last=data["last"], sheet=data["sheet"]
            )
        case "boundary_parallel":
            return BoundaryParallel(component=data["component"])
        case _:
            msg = f"Unknown curve kind '{kind}'."
            raise FactorizationDecodeError(msg)


def from_json_dict(data: dict[str, Any]) -> TwistFactorization:
    try:
        ambient = SurfaceSignature.model_validate(data["surface"])
        curves = {
            key: CurveSymbol(
                name=entry["name"],
                ambient=ambient,
                kind=_decode_kind(entry["kind"], entry["data"]),
                homology_class=(
                    tuple(entry["homology"]) if "homology" in entry else None
                ),
                separation=entry.get("separation"),
            )
            for key, entry in data["curves"].items()
        }
        letters = tuple(
            Letter(curve=curves[item["curve"]], power=item["power"])
            for item in data["letters"]
        )
        return TwistFactorization(
            ambient=ambient,
            letters=letters,
            target=data["target"],
            target_curves=tuple(curves[key] for key in data["target_curves"]),
        )
    except (KeyError, TypeError, ValidationError) as err:
        msg = f"Malformed factorization JSON: {err}"
        raise FactorizationDecodeError(msg) from None


def dumps(f: TwistFactorization, *, indent: int | None = 2) -> str:
    return json.dumps(to_json_dict(f), sort_keys=True, indent=indent)


def loads(text: str) -> TwistFactorization:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        msg = f"Factorization file is not valid JSON: {err}"
        raise FactorizationDecodeError(msg) from None
    return from_json_dict(data)
