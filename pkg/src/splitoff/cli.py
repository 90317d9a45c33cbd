"""Command-line entry point: ``splitoff <command> ...`` or ``python -m splitoff``.

Exit codes: 0 success, 1 internal check failed, 2 input or validation error,
3 resource limit hit.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import generators
from .convex_oracle import check_convex_combination, convex_decomposition
from .cubic78 import solve_cubic_seven_eighths
from .errors import DomainError, InvariantViolation, ResourceLimitError
from .formats import (
    certificate_to_json,
    decomposition_to_json,
    format_multigraph,
    input_hash,
    parse_multigraph,
    parse_solution,
)
from .half_integral import solve_half_integral
from .two_thirds import solve_two_thirds
from .verify import verify_certificate

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}") from None


def _two_thirds(path: str, args) -> dict:
    text = _read(path)
    g = parse_multigraph(text)
    if not g.has_edge(args.edge):
        raise DomainError(f"--edge {args.edge} out of range 0..{g.number_of_edges() - 1}")
    cert = solve_two_thirds(g, args.edge, verify_levels=args.verify_levels)
    return certificate_to_json(cert, g, input_hash(text))


def _half_integral(path: str, args) -> dict:
    text = _read(path)
    s = parse_solution(text)
    designated = None
    if args.edge:
        try:
            designated = tuple(int(t) for t in args.edge.split(","))
        except ValueError:
            raise DomainError(f"--edge expects 'u,v', got {args.edge!r}") from None
        if len(designated) != 2:
            raise DomainError(f"--edge expects 'u,v', got {args.edge!r}")
    cert = solve_half_integral(
        s, designated, best_edge=args.best_edge, allow_nonmetric=args.allow_nonmetric
    )
    return certificate_to_json(cert, None, input_hash(text))


def _convex(path: str, args) -> dict:
    text = _read(path)
    g = parse_multigraph(text)
    if not g.has_edge(args.edge):
        raise DomainError(f"--edge {args.edge} out of range 0..{g.number_of_edges() - 1}")
    comb = convex_decomposition(g, args.edge, limit=args.limit)
    return decomposition_to_json(comb, args.edge, check_convex_combination(g, args.edge, comb), input_hash(text))


def _cubic78(path: str, args) -> dict:
    text = _read(path)
    g = parse_multigraph(text)
    cert = solve_cubic_seven_eighths(g, try_all=args.try_all, limit=args.limit)
    return certificate_to_json(cert, g, input_hash(text))


def _run_one(job):
    func, path, args = job
    try:
        return EXIT_OK, func(path, args)
    except ResourceLimitError as exc:
        return EXIT_RESOURCE, f"{path}: {exc}"
    except DomainError as exc:
        return EXIT_INPUT, f"{path}: {exc}"
    except InvariantViolation as exc:
        return EXIT_INTERNAL, f"{path}: internal check failed: {exc}"


def _batch(args) -> int:
    jobs = [(args.handler, p, args) for p in args.files]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    status = max(code for code, _ in results)
    docs = []
    for code, payload in results:
        if code == EXIT_OK:
            docs.append(payload)
        else:
            print(f"error: {payload}", file=sys.stderr)
    if docs:
        out = docs[0] if len(args.files) == 1 else docs
        _emit(json.dumps(out, indent=2, sort_keys=True) + "\n", args.output)
    return status


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _generate(args) -> int:
    rng = random.Random(args.seed)
    if args.kind == "circulant":
        g = generators.circulant(args.n)
    elif args.kind == "doubled-cycle":
        g = generators.doubled_cycle(args.n)
    elif args.kind == "random-4reg4ec":
        g = generators.random_4reg4ec(args.n, rng)
    else:
        g = generators.random_cubic_3ec(args.n, rng)
    if args.costs == "random":
        lo = 0 if args.kind == "cubic" else -10
        g = generators.with_random_costs(g, rng, generators.rational_cost(lo, 10))
    _emit(format_multigraph(g), args.output)
    return EXIT_OK


def _verify(args) -> int:
    try:
        doc = json.loads(_read(args.certificate))
    except json.JSONDecodeError as exc:
        raise DomainError(f"certificate is not JSON: {exc}") from None
    docs = doc if isinstance(doc, list) else [doc]
    text = _read(args.input)
    report = [verify_certificate(d, text) for d in docs]
    valid = all(all(r.values()) for r in report)
    out = {"valid": valid, "checks": report[0] if len(report) == 1 else report}
    _emit(json.dumps(out, indent=2, sort_keys=True) + "\n", args.output)
    return EXIT_OK if valid else EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="splitoff", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def batch_opts(q):
        q.add_argument("files", nargs="+", help="input files; several files give a JSON array")
        q.add_argument("-o", "--output", help="write JSON here instead of stdout")
        q.add_argument("--jobs", type=int, default=1, help="worker processes for several files")

    q = sub.add_parser("two-thirds", help="2/3 c(G-e) subgraph of a 4-regular 4-edge-connected multigraph")
    batch_opts(q)
    q.add_argument("--edge", type=int, default=0, help="designated edge id (line order, from 0)")
    q.add_argument("--verify-levels", action="store_true", help="check every lifted level (slow)")
    q.set_defaults(func=_batch, handler=_two_thirds)

    q = sub.add_parser("half-integral", help="4/3 c^T x multisubgraph from a half-integral point")
    batch_opts(q)
    q.add_argument("--edge", help="designated pair 'u,v'")
    q.add_argument("--best-edge", action="store_true", help="try every designated edge, keep the best")
    q.add_argument("--allow-nonmetric", action="store_true")
    q.set_defaults(func=_batch, handler=_half_integral)

    q = sub.add_parser("convex", help="exact convex decomposition of 2/3 chi(E - e)")
    batch_opts(q)
    q.add_argument("--edge", type=int, default=0)
    q.add_argument("--limit", type=int, default=None, help="maximum number of vertices")
    q.set_defaults(func=_batch, handler=_convex)

    q = sub.add_parser("cubic78", help="7/8 c(G) multisubgraph of a cubic 3-edge-connected graph")
    batch_opts(q)
    q.add_argument("--try-all", action="store_true", help="try every qualifying 2-factor")
    q.add_argument("--limit", type=int, default=None, help="maximum number of vertices")
    q.set_defaults(func=_batch, handler=_cubic78)

    q = sub.add_parser("generate", help="write a generated graph file")
    q.add_argument("kind", choices=["circulant", "doubled-cycle", "random-4reg4ec", "cubic"])
    q.add_argument("n", type=int)
    q.add_argument("seed", type=int, nargs="?", default=0)
    q.add_argument("--costs", choices=["unit", "random"], default="unit")
    q.add_argument("-o", "--output")
    q.set_defaults(func=_generate)

    q = sub.add_parser("verify", help="re-check a certificate against its input file")
    q.add_argument("certificate")
    q.add_argument("input")
    q.add_argument("-o", "--output")
    q.set_defaults(func=_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
