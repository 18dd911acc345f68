"""Canonical JSON/CSV serialization shared by the CLI and the HTTP service.

JSON is emitted with sorted keys, compact separators and full-precision
(shortest round-trip) doubles, so that the CLI and the service produce
byte-identical payloads for the same logical inputs.  Angles cross this
boundary in degrees; everything internal stays in radians.
"""

from __future__ import annotations

import csv
import io
import json
import math

from .compactness import AssessReport, CompactnessReport, FloorCompactness
from .fields import ContourSet, Curve, ScalarField2D, SweepCurves
from .geometry import EnvelopeBreakdown, HouseParams, ratios_from_params, volume
from .optimize_floor import FixedFloorOptimum
from .optimize_volume import FixedVolumeOptimum


def to_json(obj) -> str:
    if isinstance(obj, ScalarField2D):
        return _field_json(obj)
    return json.dumps(jsonable(obj), sort_keys=True, separators=(",", ":"))


def _field_json(field: ScalarField2D) -> str:
    """Hand-assembled field payload.

    Byte-identical to json.dumps(jsonable(field), sort_keys=True,
    separators=(",", ":")) but measurably faster on large value matrices,
    which dominate the service's latency budget.
    """
    parts = ['{"marker":']
    if field.marker is None:
        parts.append("null")
    else:
        parts.append(json.dumps(
            {"x": float(field.marker.x), "y": float(field.marker.y),
             "value": float(field.marker.value)},
            sort_keys=True, separators=(",", ":"),
        ))
    rows = field.values.tolist()
    parts.append(',"values":[')
    parts.append(",".join("[" + ",".join(map(repr, row)) + "]" for row in rows))
    parts.append("],")
    for name, axis in (("x", field.x), ("y", field.y)):
        parts.append(
            f'"{name}":{{"name":{json.dumps(axis.name)},"unit":{json.dumps(axis.unit)},'
        )
        parts.append('"values":[' + ",".join(map(repr, axis.values.tolist())) + "]}")
        if name == "x":
            parts.append(",")
    parts.append("}")
    return "".join(parts)


def _floats(values) -> list:
    """ndarray (any depth) or iterable of floats -> nested Python float lists."""
    if hasattr(values, "tolist"):
        return values.tolist()
    return [float(v) for v in values]


def jsonable(obj):
    """Convert any barnopt value object into plain JSON-ready data."""
    if isinstance(obj, HouseParams):
        ratios = ratios_from_params(obj)
        return {
            "W": float(obj.width),
            "L": float(obj.length),
            "H": float(obj.height),
            "alpha_deg": math.degrees(obj.alpha),
            "r": float(ratios.r),
            "k": float(ratios.k),
            "F": float(obj.width * obj.length),
            "V": float(volume(obj)),
        }
    if isinstance(obj, EnvelopeBreakdown):
        return {
            "walls_long": float(obj.walls_long),
            "walls_short": float(obj.walls_short),
            "roof": float(obj.roof),
            "gables": float(obj.gables),
            "total": float(obj.total),
        }
    if isinstance(obj, FixedVolumeOptimum):
        return {
            "volume": float(obj.volume),
            "alpha_deg": math.degrees(obj.alpha),
            "r_min": float(obj.r_min),
            "k_min": float(obj.k_min),
            "W_min": float(obj.W_min),
            "L_min": float(obj.L_min),
            "H_min": float(obj.H_min),
            "S_min": float(obj.S_min),
        }
    if isinstance(obj, FixedFloorOptimum):
        return {
            "floor_area": float(obj.floor_area),
            "height": float(obj.height),
            "alpha_deg": math.degrees(obj.alpha),
            "W_min": float(obj.W_min),
            "L_min": float(obj.L_min),
            "S_min": float(obj.S_min),
            "cubic_residual": float(obj.cubic_residual),
            "single_real_root": bool(obj.single_real_root),
        }
    if isinstance(obj, CompactnessReport):
        return {
            "design": jsonable(obj.design),
            "S": float(obj.S),
            "V": float(obj.V),
            "S_min": float(obj.S_min),
            "ratio": float(obj.ratio),
            "headroom": float(obj.headroom),
            "optimum": jsonable(obj.optimum),
        }
    if isinstance(obj, FloorCompactness):
        return {
            "design": jsonable(obj.design),
            "S": float(obj.S),
            "ratio": float(obj.ratio),
            "headroom": float(obj.headroom),
            "optimum": jsonable(obj.optimum),
        }
    if isinstance(obj, AssessReport):
        return {
            "compactness": jsonable(obj.compactness),
            "fixed_floor": jsonable(obj.fixed_floor),
        }
    if isinstance(obj, ScalarField2D):
        return {
            "x": {"name": obj.x.name, "unit": obj.x.unit, "values": _floats(obj.x.values)},
            "y": {"name": obj.y.name, "unit": obj.y.unit, "values": _floats(obj.y.values)},
            "values": _floats(obj.values),
            "marker": None
            if obj.marker is None
            else {"x": float(obj.marker.x), "y": float(obj.marker.y), "value": float(obj.marker.value)},
        }
    if isinstance(obj, ContourSet):
        return {
            "levels": [float(v) for v in obj.levels],
            "polylines": [[_floats(poly) for poly in group] for group in obj.polylines],
        }
    if isinstance(obj, Curve):
        return {
            "x": {"name": obj.x.name, "unit": obj.x.unit, "values": _floats(obj.x.values)},
            "name": obj.name,
            "unit": obj.unit,
            "values": _floats(obj.values),
            "marker": None
            if obj.marker is None
            else {"x": float(obj.marker.x), "value": float(obj.marker.value)},
        }
    if isinstance(obj, SweepCurves):
        return {
            "volume": float(obj.volume),
            "alpha": {
                "name": obj.alpha.name,
                "unit": obj.alpha.unit,
                "values": _floats(obj.alpha.values),
            },
            "W_min": _floats(obj.W_min),
            "L_min": _floats(obj.L_min),
            "H_min": _floats(obj.H_min),
        }
    if isinstance(obj, dict):
        return {k: jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return float(obj)
    raise TypeError(f"cannot serialize {type(obj)!r}")


# --- CSV ------------------------------------------------------------------


def _csv_writer(buf):
    return csv.writer(buf, lineterminator="\n")


def field_csv(field: ScalarField2D) -> str:
    """Matrix CSV: header of x samples, each row prefixed by its y value."""
    buf = io.StringIO()
    writer = _csv_writer(buf)
    writer.writerow([f"{field.y.name}\\{field.x.name}"] + [repr(float(v)) for v in field.x.values])
    for y_val, row in zip(field.y.values, field.values):
        writer.writerow([repr(float(y_val))] + [repr(float(v)) for v in row])
    return buf.getvalue()


def curve_csv(curve: Curve) -> str:
    buf = io.StringIO()
    writer = _csv_writer(buf)
    writer.writerow([curve.x.name, curve.name])
    for x_val, value in zip(curve.x.values, curve.values):
        writer.writerow([repr(float(x_val)), repr(float(value))])
    return buf.getvalue()


def sweep_csv(curves: SweepCurves) -> str:
    buf = io.StringIO()
    writer = _csv_writer(buf)
    writer.writerow(["alpha_deg", "W_min", "L_min", "H_min"])
    for a, w, l, h in zip(curves.alpha.values, curves.W_min, curves.L_min, curves.H_min):
        writer.writerow([repr(float(a)), repr(float(w)), repr(float(l)), repr(float(h))])
    return buf.getvalue()


def contours_csv(contours: ContourSet) -> str:
    buf = io.StringIO()
    writer = _csv_writer(buf)
    writer.writerow(["level", "polyline", "r", "k"])
    for level, group in zip(contours.levels, contours.polylines):
        for idx, poly in enumerate(group):
            for x, y in poly:
                writer.writerow([repr(float(level)), idx, repr(float(x)), repr(float(y))])
    return buf.getvalue()
