"""Command-line client for the evaluation and verification service.

Every subcommand builds a request, sends it through the HTTP API, and formats
the response.  Without --server the request runs against an in-process
application; with --server (or MZVSTAR_SERVER) it reaches a running instance,
whose zeta cache then stays warm across invocations.

Exit codes: 0 success, 1 verification failure, 2 usage/domain errors.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys

import httpx

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _canonical_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _config_payload(args) -> dict | None:
    fields: dict = {}
    if args.config_file:
        try:
            with open(args.config_file) as handle:
                fields.update(json.load(handle))
        except (OSError, ValueError) as exc:
            print(f"error (usage): cannot read config file: {exc}", file=sys.stderr)
            raise SystemExit(EXIT_USAGE)
    overrides = {
        "prec_bits": args.prec_bits,
        "trunc": args.trunc,
        "tail_order": args.tail_order,
        "tolerance": args.tol,
        "max_trunc": args.max_trunc,
    }
    fields.update({k: v for k, v in overrides.items() if v is not None})
    return fields or None


def _call(args, method: str, path: str, payload: dict | None = None):
    async def go():
        if args.server:
            async with httpx.AsyncClient(base_url=args.server, timeout=None) as client:
                response = await client.request(method, path, json=payload)
                return response.status_code, response.json()
        from .service.app import create_app

        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://mzvstar.internal", timeout=None
        ) as client:
            response = await client.request(method, path, json=payload)
            return response.status_code, response.json()

    try:
        return asyncio.run(go())
    except httpx.HTTPError as exc:
        print(f"error: cannot reach {args.server}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _bail(body) -> "SystemExit":
    if isinstance(body, dict):
        kind = body.get("kind", "request")
        message = body.get("error") or body.get("detail") or body
    else:
        kind, message = "request", body
    print(f"error ({kind}): {message}", file=sys.stderr)
    return SystemExit(EXIT_USAGE)


def _emit(args, body, text_lines) -> None:
    if args.json:
        print(_canonical_json(body))
    else:
        for line in text_lines:
            if line:
                print(line)


def _report_line(report: dict) -> str:
    status = "PASS" if report["pass"] else "FAIL"
    extent = "exact" if report["exact"] else (
        f"max dev {report['max_deviation']:.3e} ≤ {report['bound']:.3e}"
    )
    params = ", ".join(f"{k}={v}" for k, v in report["params"].items())
    notes = f"  [{'; '.join(report['notes'])}]" if report.get("notes") else ""
    return f"{status} {report['identity']}({params}): {extent} ({report['seconds']:.2f}s){notes}"


def _config_line(body) -> str:
    cfg = body.get("config")
    if not cfg:
        return ""
    return ("config: " + ", ".join(f"{k}={v}" for k, v in sorted(cfg.items())))


# -- subcommand handlers -------------------------------------------------------


def _cmd_eval(args) -> int:
    payload = {"kind": args.kind, "index": args.index, "config": _config_payload(args)}
    status, body = _call(args, "POST", "/eval", payload)
    if status != 200:
        raise _bail(body)
    _emit(args, body, [
        f"{body['kind']}({body['index']}) = {body['value']} ± {body['bound']:.3e}",
        f"elapsed: {body['seconds']:.3f}s",
        _config_line(body),
    ])
    return EXIT_OK


def _cmd_reg(args) -> int:
    payload = {
        "flavor": args.flavor,
        "index": args.index,
        "series_order": args.series_order,
        "config": _config_payload(args),
    }
    status, body = _call(args, "POST", "/reg", payload)
    if status != 200:
        raise _bail(body)
    lines = [f"{body['flavor']}({body['index']}; T) = {body['symbolic']}"]
    for coeff in body["coefficients"]:
        lines.append(
            f"  T^{coeff['power']}: {coeff['value']} ± {coeff['bound']:.3e}   ({coeff['symbolic']})"
        )
    lines.append(_config_line(body))
    _emit(args, body, lines)
    return EXIT_OK


def _verify_params(args) -> dict:
    params: dict = {}
    if args.index is not None:
        params["index"] = args.index
    for key in ("r", "k", "max_r"):
        value = getattr(args, key)
        if value is not None:
            params[key] = value
    if args.b is not None:
        try:
            params["b"] = [int(tok) for tok in args.b.split(",") if tok]
        except ValueError:
            print("error (usage): --b expects a comma-separated integer list", file=sys.stderr)
            raise SystemExit(EXIT_USAGE)
    if args.tolerance is not None:
        params["tolerance"] = args.tolerance
    return params


def _cmd_verify(args) -> int:
    payload = {
        "identity": args.identity,
        "params": _verify_params(args),
        "config": _config_payload(args),
    }
    status, body = _call(args, "POST", "/verify", payload)
    if status != 200:
        raise _bail(body)
    _emit(args, body, [_report_line(body)])
    return EXIT_OK if body["pass"] else EXIT_VERIFY_FAILED


def _cmd_table(args) -> int:
    payload = {
        "k_values": [int(tok) for tok in args.k.split(",")],
        "l_values": [int(tok) for tok in args.l.split(",")],
        "tolerance": args.tolerance,
        "config": _config_payload(args),
    }
    status, body = _call(args, "POST", "/table", payload)
    if status != 200:
        raise _bail(body)
    lines = [_report_line(row) for row in body["rows"]]
    lines.append(f"table: {body['passed']} passed, {body['failed']} failed in {body['seconds']:.1f}s")
    _emit(args, body, lines)
    return EXIT_OK if body["failed"] == 0 else EXIT_VERIFY_FAILED


def _cmd_suite(args) -> int:
    payload = {
        "max_weight": args.max_weight,
        "max_depth": args.max_depth,
        "jobs": args.jobs or 1,
        "config": _config_payload(args),
    }
    status, body = _call(args, "POST", "/suite", payload)
    if status != 200:
        raise _bail(body)
    lines = [_report_line(row) for row in body["reports"]]
    lines.append(f"suite: {body['passed']} passed, {body['failed']} failed in {body['seconds']:.1f}s")
    _emit(args, body, lines)
    return EXIT_OK if body["failed"] == 0 else EXIT_VERIFY_FAILED


def _cmd_partitions(args) -> int:
    payload: dict = {}
    if args.elements:
        payload["elements"] = [int(tok) for tok in args.elements.split(",")]
    if args.size is not None:
        payload["size"] = args.size
    if args.not_inside:
        payload["not_inside"] = [int(tok) for tok in args.not_inside.split(",")]
    status, body = _call(args, "POST", "/partitions", payload)
    if status != 200:
        raise _bail(body)
    lines = [entry["text"] for entry in body["partitions"]]
    lines.append(f"count: {body['count']}")
    _emit(args, body, lines)
    return EXIT_OK


def _cmd_bell(args) -> int:
    payload = {
        "kind": args.kind,
        "r": args.r,
        "k": args.k,
        "xs": args.xs.split(",") if args.xs else None,
        "shape": [int(tok) for tok in args.shape.split(",")] if args.shape else None,
    }
    status, body = _call(args, "POST", "/bell", payload)
    if status != 200:
        raise _bail(body)
    _emit(args, body, [body["value"]])
    return EXIT_OK


def _cmd_cache(args) -> int:
    path = "/cache/save" if args.action == "save" else "/cache/load"
    status, body = _call(args, "POST", path, {"path": args.path, "config": _config_payload(args)})
    if status != 200:
        raise _bail(body)
    _emit(args, body, [f"{args.action}: {body['entries']} entries at {body['path']}"])
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="info")
    return EXIT_OK


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mzvstar",
        description=(
            "Multiple zeta and zeta-star values, their regularization polynomials in T, "
            "and verification of the symmetric-sum identities. Indices are written "
            "'k1,k2,...,kr'; the FINAL entry must exceed 1 for convergence (so '1,2' "
            "converges while '2,1' diverges)."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec-bits", dest="prec_bits", type=int, help="working precision in bits (default 128)")
    common.add_argument("--trunc", type=int, help="series truncation cap N (default 100000)")
    common.add_argument("--tail-order", dest="tail_order", type=int, help="Euler-Maclaurin tail order (default 2)")
    common.add_argument("--tol", type=float, help="target tolerance for evaluated values (default 1e-9)")
    common.add_argument("--max-trunc", dest="max_trunc", type=int, help="escalation ceiling for the truncation cap")
    common.add_argument("--config", dest="config_file",
                        help="JSON file with evaluator settings; explicit flags win")
    common.add_argument("--jobs", type=int, help="parallel verification jobs (suite only)")
    common.add_argument("--json", action="store_true", help="emit canonical JSON instead of text")
    common.add_argument(
        "--server",
        default=os.environ.get("MZVSTAR_SERVER") or None,
        help="base URL of a running service (default: in-process; env MZVSTAR_SERVER)",
    )

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a zeta, mzv, or mzsv value")
    p.add_argument("kind", choices=["mzv", "mzsv", "zeta"])
    p.add_argument("index", help="index like '1,2' (or a single exponent for 'zeta')")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("reg", parents=[common], help="regularization polynomial of an index")
    p.add_argument("flavor", choices=["harm", "star-harm", "shuffle", "star-sh"])
    p.add_argument("index")
    p.add_argument("--series-order", dest="series_order", type=int,
                   help="conversion-series order override (must cover the T-degree)")
    p.set_defaults(handler=_cmd_reg)

    p = sub.add_parser("verify", parents=[common], help="verify one identity")
    p.add_argument("identity", help="identity name, e.g. theorem1, corollary1, lemma1")
    p.add_argument("--index", help="index parameter, e.g. '2,1,1,3'")
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--b", help="subset parameter as comma-separated integers")
    p.add_argument("--max-r", dest="max_r", type=int)
    p.add_argument("--tolerance", type=float, help="per-coefficient tolerance override")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("table", parents=[common], help="reproduce the three worked displays")
    p.add_argument("--k", default="2,3,4", help="comma-separated k values (default 2,3,4)")
    p.add_argument("--l", default="2,3", help="comma-separated l values (default 2,3)")
    p.add_argument("--tolerance", type=float)
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("suite", parents=[common], help="run the full verification matrix")
    p.add_argument("--max-weight", dest="max_weight", type=int, default=7)
    p.add_argument("--max-depth", dest="max_depth", type=int, default=4)
    p.set_defaults(handler=_cmd_suite)

    p = sub.add_parser("partitions", parents=[common], help="enumerate set partitions")
    p.add_argument("--elements", help="comma-separated elements, e.g. '1,2,3'")
    p.add_argument("--size", type=int, help="shorthand for elements 1..size")
    p.add_argument("--not-inside", dest="not_inside",
                   help="forbid blocks inside this comma-separated subset")
    p.set_defaults(handler=_cmd_partitions)

    p = sub.add_parser("bell", parents=[common], help="Bell/Stirling numbers and polynomials")
    p.add_argument("kind", choices=["partial", "complete", "stirling1", "stirling2", "shape-count", "bell-number"])
    p.add_argument("r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--xs", help="comma-separated rational arguments, e.g. '1,1/2,1/6'")
    p.add_argument("--shape", help="comma-separated block-size counts")
    p.set_defaults(handler=_cmd_bell)

    p = sub.add_parser("cache", parents=[common], help="save or load the evaluator cache")
    p.add_argument("action", choices=["save", "load"])
    p.add_argument("path")
    p.set_defaults(handler=_cmd_cache)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8717)
    p.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except SystemExit as exc:  # argparse usage errors and explicit bails
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except KeyboardInterrupt:
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
