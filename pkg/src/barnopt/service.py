"""Stateless HTTP JSON API over the library, for the design-explorer UI.

Success bodies are produced by the same serializer as the CLI's JSON output
and are byte-identical to it.  Query parameters are parsed strictly: unknown
names, missing values and non-numeric text all yield 400 with an ApiError
body {"code", "message", "field"}.  Codes: BAD_INPUT, OUT_OF_DOMAIN.
"""

from __future__ import annotations

import math

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import fields, serialize
from .compactness import assess
from .errors import InvalidParameterError, OutOfDomainError
from .geometry import HouseParams, ShapeRatios, params_from_ratios
from .optimize_floor import optimize_fixed_floor
from .optimize_volume import optimize_fixed_volume

#: Resolution cap over HTTP (the CLI allows up to 4096).
HTTP_RESOLUTION_MAX = 1024
LOCALHOST_ORIGIN_REGEX = r"https?://(localhost|127\.0\.0\.1)(:\d+)?"


class ApiError(Exception):
    def __init__(self, code: str, message: str, field: str | None = None):
        assert code in ("BAD_INPUT", "OUT_OF_DOMAIN")
        self.code = code
        self.message = message
        self.field = field
        super().__init__(message)


def _json_response(payload: str) -> Response:
    return Response(content=payload + "\n", media_type="application/json")


def _query(request: Request, required: tuple[str, ...], optional: dict[str, float]) -> dict:
    """Strictly parse query parameters as floats."""
    params = dict(request.query_params)
    allowed = set(required) | set(optional)
    for key in sorted(params):
        if key not in allowed:
            raise ApiError("BAD_INPUT", f"unknown query parameter {key!r}", field=key)
    out: dict[str, float] = {}
    for name in required:
        if name not in params:
            raise ApiError("BAD_INPUT", f"missing required parameter {name!r}", field=name)
        out[name] = _parse_float(name, params[name])
    for name, default in optional.items():
        out[name] = _parse_float(name, params[name]) if name in params else default
    return out


def _parse_float(name: str, raw: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise ApiError("BAD_INPUT", f"parameter {name!r} is not a number: {raw!r}", field=name)
    if math.isnan(value) or math.isinf(value):
        raise ApiError("BAD_INPUT", f"parameter {name!r} must be finite", field=name)
    return value


def _require_positive(name: str, value: float) -> float:
    if value <= 0.0:
        raise ApiError("BAD_INPUT", f"parameter {name!r} must be positive, got {value!r}", field=name)
    return value


def _check_resolution(value: float) -> int:
    res = int(value)
    if res != value or not 16 <= res <= HTTP_RESOLUTION_MAX:
        raise ApiError(
            "BAD_INPUT",
            f"parameter 'res' must be an integer in [16, {HTTP_RESOLUTION_MAX}], got {value!r}",
            field="res",
        )
    return res


def _translate(call, *args, **kwargs):
    """Run a library call, mapping its errors onto the API error model."""
    try:
        return call(*args, **kwargs)
    except OutOfDomainError as exc:
        raise ApiError("OUT_OF_DOMAIN", str(exc), field="alpha_deg")
    except InvalidParameterError as exc:
        raise ApiError("BAD_INPUT", str(exc), field=exc.field)
    except ValueError as exc:
        raise ApiError("BAD_INPUT", str(exc))


def create_app(cors_allow: list[str] | tuple[str, ...] = (), ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="barnopt", docs_url=None, redoc_url=None, openapi_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_allow),
        allow_origin_regex=LOCALHOST_ORIGIN_REGEX,
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiError)
    async def api_error_handler(request: Request, exc: ApiError):
        return JSONResponse(
            status_code=400,
            content={"code": exc.code, "message": exc.message, "field": exc.field},
        )

    @app.get("/api/v1/health")
    def health() -> Response:
        return _json_response('{"status":"ok"}')

    @app.get("/api/v1/optimize/volume")
    def optimize_volume_endpoint(request: Request) -> Response:
        q = _query(request, required=("V", "alpha_deg"), optional={})
        _require_positive("V", q["V"])
        opt = _translate(optimize_fixed_volume, q["V"], math.radians(q["alpha_deg"]))
        return _json_response(serialize.to_json(opt))

    @app.get("/api/v1/optimize/floor")
    def optimize_floor_endpoint(request: Request) -> Response:
        q = _query(request, required=("F", "H", "alpha_deg"), optional={})
        _require_positive("F", q["F"])
        _require_positive("H", q["H"])
        opt = _translate(optimize_fixed_floor, q["F"], q["H"], math.radians(q["alpha_deg"]))
        return _json_response(serialize.to_json(opt))

    @app.post("/api/v1/assess")
    async def assess_endpoint(request: Request) -> Response:
        try:
            body = await request.json()
        except Exception:
            raise ApiError("BAD_INPUT", "request body is not valid JSON", field="body")
        design = _design_from_body(body)
        report = _translate(assess, design)
        return _json_response(serialize.to_json(report))

    @app.get("/api/v1/fields/compactness")
    def compactness_field_endpoint(request: Request) -> Response:
        q = _query(
            request,
            required=("alpha_deg",),
            optional={
                "rmin": fields.DEFAULT_R_RANGE[0],
                "rmax": fields.DEFAULT_R_RANGE[1],
                "kmin": fields.DEFAULT_K_RANGE[0],
                "kmax": fields.DEFAULT_K_RANGE[1],
                "res": float(fields.DEFAULT_RESOLUTION),
            },
        )
        res = _check_resolution(q["res"])
        field = _translate(
            fields.compactness_field,
            math.radians(q["alpha_deg"]),
            (q["rmin"], q["rmax"]),
            (q["kmin"], q["kmax"]),
            res,
        )
        return _json_response(serialize.to_json(field))

    @app.get("/api/v1/fields/contours")
    def contours_endpoint(request: Request) -> Response:
        params = dict(request.query_params)
        levels_raw = params.pop("levels", None)
        q = _parse_contour_numeric(params)
        if levels_raw is None:
            levels = fields.DEFAULT_LEVELS
        else:
            try:
                levels = tuple(float(part) for part in levels_raw.split(",") if part.strip())
            except ValueError:
                raise ApiError("BAD_INPUT", f"bad levels list: {levels_raw!r}", field="levels")
        res = _check_resolution(q["res"])
        contours = _translate(
            fields.compactness_contours,
            math.radians(q["alpha_deg"]),
            levels,
            (q["rmin"], q["rmax"]),
            (q["kmin"], q["kmax"]),
            res,
        )
        return _json_response(serialize.to_json(contours))

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def _parse_contour_numeric(params: dict[str, str]) -> dict[str, float]:
    allowed = {
        "alpha_deg": None,
        "rmin": fields.DEFAULT_R_RANGE[0],
        "rmax": fields.DEFAULT_R_RANGE[1],
        "kmin": fields.DEFAULT_K_RANGE[0],
        "kmax": fields.DEFAULT_K_RANGE[1],
        "res": float(fields.DEFAULT_RESOLUTION),
    }
    for key in sorted(params):
        if key not in allowed:
            raise ApiError("BAD_INPUT", f"unknown query parameter {key!r}", field=key)
    if "alpha_deg" not in params:
        raise ApiError("BAD_INPUT", "missing required parameter 'alpha_deg'", field="alpha_deg")
    out = {}
    for name, default in allowed.items():
        if name in params:
            out[name] = _parse_float(name, params[name])
        else:
            out[name] = default
    return out


def _design_from_body(body) -> HouseParams:
    if not isinstance(body, dict):
        raise ApiError("BAD_INPUT", "request body must be a JSON object", field="body")
    keys = set(body)
    dimension_shape = {"W", "L", "H", "alpha_deg"}
    ratio_shape = {"r", "k", "V", "alpha_deg"}
    if keys == dimension_shape:
        vals = {k: _numeric_field(k, body[k]) for k in dimension_shape}
        for k in ("W", "L", "H"):
            _require_positive(k, vals[k])
        return _translate(
            HouseParams,
            width=vals["W"],
            length=vals["L"],
            height=vals["H"],
            alpha=math.radians(vals["alpha_deg"]),
        )
    if keys == ratio_shape:
        vals = {k: _numeric_field(k, body[k]) for k in ratio_shape}
        for k in ("r", "k", "V"):
            _require_positive(k, vals[k])
        ratios = _translate(ShapeRatios, r=vals["r"], k=vals["k"], alpha=math.radians(vals["alpha_deg"]))
        return _translate(params_from_ratios, ratios, vals["V"])
    raise ApiError(
        "BAD_INPUT",
        f"body must contain exactly {sorted(dimension_shape)} or {sorted(ratio_shape)}, "
        f"got {sorted(keys)}",
        field="body",
    )


def _numeric_field(name: str, value) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ApiError("BAD_INPUT", f"field {name!r} must be a number, got {value!r}", field=name)
    if math.isnan(value) or math.isinf(value):
        raise ApiError("BAD_INPUT", f"field {name!r} must be finite", field=name)
    return float(value)
