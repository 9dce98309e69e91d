"""Command-line client for the algebra service.

By default the service app runs in-process; --server targets a remote
instance instead. Exit codes: 0 pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys


def make_client(server: str | None):
    if server:
        import httpx

        return httpx.Client(base_url=server, timeout=600.0)
    import warnings

    with warnings.catch_warnings():
        # the vendored test client chain warns about its own transport choice
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def algebra_payload(source: str) -> dict:
    """Catalog name or path to an algebra JSON file, as request fields."""
    if source.endswith(".json") or os.path.sep in source or os.path.exists(source):
        try:
            with open(source) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise SystemExit(f"cannot read algebra file {source!r}: {exc}")
        return {"algebra_json": data}
    return {"algebra": source}


def emit(args, payload, text_lines) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def report_lines(rep: dict) -> list[str]:
    status = "pass" if rep["passed"] else "FAIL"
    lines = [f"{rep['title']}: {status} ({rep['checks']} checks)"]
    for f in rep["failures"][:20]:
        lines.append(f"  failed: {f['where']}" + (f" [{f['detail']}]" if f["detail"] else ""))
    if len(rep["failures"]) > 20:
        lines.append(f"  ... {len(rep['failures']) - 20} more failures")
    return lines


def post(client, path: str, body: dict) -> dict | list:
    resp = client.post(path, json=body)
    if resp.status_code >= 400:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        raise SystemExit(f"error: {detail}")
    return resp.json()


def cmd_verify(args) -> int:
    client = make_client(args.server)
    body = algebra_payload(args.algebra) | {"variety": args.variety}
    rep = post(client, "/verify", body)
    emit(args, rep, report_lines(rep))
    return 0 if rep["passed"] else 1


def cmd_multiply(args) -> int:
    client = make_client(args.server)
    body = algebra_payload(args.algebra) | {
        "engine": args.engine,
        "m1": args.m1,
        "m2": args.m2,
    }
    result = post(client, "/multiply", body)
    emit(args, result, [result["pretty"]])
    return 0


def cmd_alternators(args) -> int:
    client = make_client(args.server)
    items = post(client, "/alternators", algebra_payload(args.algebra))
    lines = [f"{it['name']} = {it['pretty']}   (quotient image: {it['reduced_pretty']})" for it in items]
    emit(args, items, lines)
    return 0


def cmd_crosscheck(args) -> int:
    client = make_client(args.server)
    body = algebra_payload(args.algebra) | {"cap": args.cap, "jobs": args.jobs}
    rep = post(client, "/crosscheck", body)
    emit(args, rep, report_lines(rep))
    return 0 if rep["passed"] else 1


def cmd_quotient_table(args) -> int:
    client = make_client(args.server)
    body = algebra_payload(args.algebra) | {"cap": args.cap}
    entries = post(client, "/quotient-table", body)
    lines = [f"({e['left']}) ({e['right']}) = {e['pretty']}" for e in entries]
    emit(args, entries, lines)
    return 0


def cmd_octonion_verify(args) -> int:
    client = make_client(args.server)
    result = post(client, "/octonion-verify", {})
    lines = report_lines(result["chain"])
    found = result["isomorphism_found"]
    lines.append(
        "signed basis correspondence with the 7-dim catalog algebra: "
        + ("found " + str(result["mapping"]) if found else "NOT FOUND")
    )
    emit(args, result, lines)
    return 0 if result["chain"]["passed"] and found else 1


def cmd_identities(args) -> int:
    client = make_client(args.server)
    body = {"decompose_g": args.decompose_g}
    if args.order_seed is not None:
        body["order_seed"] = args.order_seed
    result = post(client, "/identities", body)
    lines = report_lines(result["bol_octonions"]) + report_lines(result["bol_lts"])
    lines.append(f"multilinear degree-4 space dimension: {result['full_space_dim']}")
    ok = result["bol_octonions"]["passed"] and result["bol_lts"]["passed"]
    if result["decomposition"] is not None:
        dec = result["decomposition"]
        verdict = "a combination" if dec["member"] else "NOT a combination"
        lines.append(
            f"g is {verdict} of permutations of f, the Akivis elements, "
            f"and the third-power consequences (span dim {dec['span_dim']})"
        )
        for entry in dec["coefficients"]:
            lines.append(
                f"  {entry['coefficient']:>8}  *  {entry['element']} at {entry['permutation']}"
            )
        ok = ok and dec["member"] and dec["recombined"]
    emit(args, result, lines)
    return 0 if ok else 1


def cmd_catalog_list(args) -> int:
    client = make_client(args.server)
    resp = client.get("/catalog")
    if resp.status_code >= 400:
        raise SystemExit(f"error: {resp.text}")
    entries = resp.json()
    lines = [f"{e['name']:12} dim {e['dim']:2}  basis {' '.join(e['labels'])}" for e in entries]
    emit(args, entries, lines)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="malcev", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, algebra=True):
        if algebra:
            p.add_argument("--algebra", required=True, help="catalog name or algebra JSON file")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--server", default=None, help="remote service URL (default: in-process)")
        p.add_argument("--jobs", type=int, default=1, help="parallel workers where supported")

    p = sub.add_parser("verify", help="check a variety identity on an algebra")
    common(p)
    p.add_argument("--variety", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("multiply", help="multiply two basis monomials in U(M)")
    common(p)
    p.add_argument("--engine", choices=("generic", "closedform", "quotient"), default="generic")
    p.add_argument("m1")
    p.add_argument("m2")
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("alternators", help="print the nonzero alternators and their quotient images")
    common(p)
    p.set_defaults(func=cmd_alternators)

    p = sub.add_parser("crosscheck", help="generic engine vs closed form on all pairs up to a degree cap")
    common(p)
    p.add_argument("--cap", type=int, default=3)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("quotient-table", help="print the alternative-quotient product table")
    common(p)
    p.add_argument("--cap", type=int, default=2)
    p.set_defaults(func=cmd_quotient_table)

    p = sub.add_parser("octonion-verify", help="run the octonion theorem verification chain")
    common(p, algebra=False)
    p.set_defaults(func=cmd_octonion_verify)

    p = sub.add_parser("identities", help="Bol identity suite and the degree-4 decomposition")
    common(p, algebra=False)
    p.add_argument("--decompose-g", action="store_true", dest="decompose_g")
    p.add_argument("--order-seed", type=int, default=None, dest="order_seed")
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("catalog-list", help="list the built-in algebras")
    common(p, algebra=False)
    p.set_defaults(func=cmd_catalog_list)

    p = sub.add_parser("serve", help="run the HTTP service under uvicorn")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 2
        raise


if __name__ == "__main__":
    sys.exit(main())
