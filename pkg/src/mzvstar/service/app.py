"""FastAPI application wrapping the core package.

A long-running instance keeps the zeta cache warm across requests; every
response echoes the effective evaluator configuration for reproducibility.
"""

from __future__ import annotations

import time

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import AccuracyError, CapacityError, DomainError
from ..identities import IDENTITY_NAMES, example1_rows, run_suite, verify
from ..indices import Index
from ..numerics import PrecisionConfig, shared_evaluator
from ..regularize import reg_poly
from ..combinatorics import (
    bell_complete,
    bell_number,
    bell_partial,
    enum_restricted_partitions,
    enum_set_partitions,
    partition_shape_count,
    stirling_first_unsigned,
    stirling_second,
)
from .models import (
    BellRequest,
    BellResponse,
    CachePathRequest,
    CacheResponse,
    ConfigModel,
    EvalRequest,
    EvalResponse,
    HealthResponse,
    IdentityListResponse,
    PartitionEntry,
    PartitionsRequest,
    PartitionsResponse,
    RegCoefficient,
    RegRequest,
    RegResponse,
    ReportModel,
    SuiteRequest,
    SuiteResponse,
    TableRequest,
    TableResponse,
    VerifyRequest,
)

_ERROR_KINDS = {DomainError: "domain", CapacityError: "capacity", AccuracyError: "accuracy"}


def _config_from(model: ConfigModel | None) -> PrecisionConfig:
    model = model or ConfigModel()
    return PrecisionConfig(
        prec_bits=model.prec_bits,
        trunc=model.trunc,
        tail_order=model.tail_order,
        tolerance=model.tolerance,
        max_trunc=model.max_trunc,
    )


def _config_echo(config: PrecisionConfig) -> ConfigModel:
    return ConfigModel(**config.to_dict())


def _parse_index(raw) -> Index:
    if isinstance(raw, str):
        return Index.parse(raw)
    return Index(raw)


def _rational_args(texts: list[str]):
    from fractions import Fraction

    out = []
    for text in texts:
        try:
            out.append(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"cannot parse rational {text!r}") from exc
    return out


def create_app() -> FastAPI:
    app = FastAPI(
        title="mzvstar",
        version=__version__,
        description=(
            "Regularized multiple zeta and zeta-star values as polynomials in T, "
            "plus verification of their symmetric-sum identities. Index syntax is "
            "'k1,k2,...,kr' with the final entry governing convergence."
        ),
    )

    def _handler(kind: str):
        async def handle(request: Request, exc: Exception):
            return JSONResponse(status_code=422, content={"error": str(exc), "kind": kind})

        return handle

    for exc_type, kind in _ERROR_KINDS.items():
        app.add_exception_handler(exc_type, _handler(kind))

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.get("/config", response_model=ConfigModel)
    def default_config() -> ConfigModel:
        return _config_echo(PrecisionConfig())

    @app.get("/identities", response_model=IdentityListResponse)
    def identities() -> IdentityListResponse:
        return IdentityListResponse(identities=list(IDENTITY_NAMES))

    @app.post("/eval", response_model=EvalResponse)
    def eval_value(request: EvalRequest) -> EvalResponse:
        config = _config_from(request.config)
        ev = shared_evaluator(config)
        started = time.perf_counter()
        if request.kind == "zeta":
            index = _parse_index(request.index)
            if index.depth != 1:
                raise DomainError("kind 'zeta' takes a single exponent, e.g. index '3'")
            bounded = ev.zeta_single(index.parts[0])
        elif request.kind == "mzv":
            bounded = ev.mzv(_parse_index(request.index))
        else:
            bounded = ev.mzsv(_parse_index(request.index))
        return EvalResponse(
            kind=request.kind,
            index=str(_parse_index(request.index)),
            value=ev.format_value(bounded.value),
            bound=bounded.bound,
            seconds=time.perf_counter() - started,
            config=_config_echo(config),
        )

    @app.post("/reg", response_model=RegResponse)
    def reg(request: RegRequest) -> RegResponse:
        config = _config_from(request.config)
        ev = shared_evaluator(config)
        started = time.perf_counter()
        index = _parse_index(request.index)
        flavor = "sh" if request.flavor == "shuffle" else request.flavor
        if flavor in ("star-harm", "star-sh") and index.is_empty:
            raise DomainError("star flavors need a nonempty index")
        poly = reg_poly(index, flavor, request.series_order)
        numeric = ev.evaluate_poly(poly)
        coefficients = [
            RegCoefficient(
                power=n,
                symbolic=str(poly.coeff(n)),
                value=ev.format_value(numeric.value(n)),
                bound=numeric.bound(n),
            )
            for n in range(poly.degree + 1)
        ]
        return RegResponse(
            flavor=request.flavor,
            index=str(index),
            symbolic=poly.format(str),
            coefficients=coefficients,
            seconds=time.perf_counter() - started,
            config=_config_echo(config),
        )

    @app.post("/verify", response_model=ReportModel)
    def verify_identity(request: VerifyRequest) -> ReportModel:
        config = _config_from(request.config)
        ev = shared_evaluator(config)
        report = verify(request.identity, request.params, ev)
        return ReportModel.from_report(report)

    @app.post("/table", response_model=TableResponse)
    def table(request: TableRequest) -> TableResponse:
        config = _config_from(request.config)
        ev = shared_evaluator(config)
        started = time.perf_counter()
        rows = example1_rows(request.k_values, request.l_values, ev, request.tolerance)
        return TableResponse(
            rows=[ReportModel.from_report(r) for r in rows],
            passed=sum(1 for r in rows if r.passed),
            failed=sum(1 for r in rows if not r.passed),
            seconds=time.perf_counter() - started,
        )

    @app.post("/suite", response_model=SuiteResponse)
    def suite(request: SuiteRequest) -> SuiteResponse:
        config = _config_from(request.config)
        ev = shared_evaluator(config)
        result = run_suite(
            ev,
            max_weight=request.max_weight,
            max_depth=request.max_depth,
            k_values=request.k_values,
            l_values=request.l_values,
            jobs=max(1, request.jobs),
        )
        return SuiteResponse(
            passed=result.passed,
            failed=result.failed,
            seconds=result.seconds,
            reports=[ReportModel.from_report(r) for r in result.reports],
        )

    @app.post("/partitions", response_model=PartitionsResponse)
    def partitions(request: PartitionsRequest) -> PartitionsResponse:
        if (request.elements is None) == (request.size is None):
            raise DomainError("provide exactly one of 'elements' or 'size'")
        elements = request.elements if request.elements is not None else list(
            range(1, request.size + 1)
        )
        if request.not_inside is None:
            parts = enum_set_partitions(elements)
        else:
            parts = enum_restricted_partitions(elements, request.not_inside)
        return PartitionsResponse(
            count=len(parts),
            partitions=[PartitionEntry(blocks=p.to_lists(), text=str(p)) for p in parts],
        )

    @app.post("/bell", response_model=BellResponse)
    def bell(request: BellRequest) -> BellResponse:
        r = request.r
        if request.kind == "bell-number":
            value = bell_number(r)
        elif request.kind == "complete":
            xs = _rational_args(request.xs) if request.xs else None
            if xs is None:
                raise DomainError("'complete' needs xs, a list of rationals like '1', '1/2'")
            value = bell_complete(r, xs)
        elif request.kind == "partial":
            if request.k is None or request.xs is None:
                raise DomainError("'partial' needs k and xs")
            value = bell_partial(r, request.k, _rational_args(request.xs))
        elif request.kind == "stirling1":
            if request.k is None:
                raise DomainError("'stirling1' needs k")
            value = stirling_first_unsigned(r, request.k)
        elif request.kind == "stirling2":
            if request.k is None:
                raise DomainError("'stirling2' needs k")
            value = stirling_second(r, request.k)
        else:
            if request.k is None or request.shape is None:
                raise DomainError("'shape-count' needs k and shape")
            value = partition_shape_count(r, request.k, request.shape)
        return BellResponse(kind=request.kind, value=str(value))

    @app.post("/cache/save", response_model=CacheResponse)
    def cache_save(request: CachePathRequest) -> CacheResponse:
        ev = shared_evaluator(_config_from(request.config))
        return CacheResponse(entries=ev.save_cache(request.path), path=request.path)

    @app.post("/cache/load", response_model=CacheResponse)
    def cache_load(request: CachePathRequest) -> CacheResponse:
        ev = shared_evaluator(_config_from(request.config))
        return CacheResponse(entries=ev.load_cache(request.path), path=request.path)

    return app
