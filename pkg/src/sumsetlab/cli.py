"""Command-line interface: a thin client over the service endpoints.

Every subcommand builds a JSON request, sends it to the service (in-process
by default, or a remote base URL via --server), and renders the response as
human-readable text or as a JSON envelope {command, ok, data} with --json.
File I/O stays on the client: point sets are read from --in files and
written to --out in the plain text format (one point per line, # comments).

Exit codes: 0 success/verified; 1 verification failure, with a
counterexample artifact written; 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys
import tempfile
from pathlib import Path
from typing import Any, Sequence

import httpx

from .lattice import LatticeSet
from .pointio import PointFormatError, dump_points, dumps_points, load_points

DEFAULT_ARTIFACT = "counterexample.json"

# Subcommands whose --out is a point-set file; all others write the JSON
# envelope to --out.
_POINT_OUTPUT = ("sumset", "compress", "family", "random-downset")


class UsageError(Exception):
    """Bad flag combination; maps to exit code 2."""


class ServiceClient:
    """Posts JSON payloads either in-process (ASGI) or to a remote server."""

    def __init__(self, server: str | None = None):
        self.server = server

    def _client(self) -> httpx.AsyncClient:
        if self.server:
            return httpx.AsyncClient(base_url=self.server, timeout=None)
        from .service.app import app

        return httpx.AsyncClient(
            transport=httpx.ASGITransport(app=app),
            base_url="http://sumsetlab.internal",
            timeout=None,
        )

    def post(self, path: str, payload: dict) -> tuple[int, dict]:
        return self.post_many([(path, payload)])[0]

    def post_many(
        self, calls: Sequence[tuple[str, dict]], jobs: int = 1
    ) -> list[tuple[int, dict]]:
        """Run calls concurrently (at most ``jobs`` in flight), results in call order."""

        async def run() -> list[tuple[int, dict]]:
            sem = asyncio.Semaphore(max(1, jobs))

            async def one(path: str, payload: dict) -> tuple[int, dict]:
                async with sem:
                    response = await client.post(path, json=payload)
                try:
                    body = response.json()
                except ValueError:
                    body = {"detail": response.text}
                return response.status_code, body

            async with self._client() as client:
                return list(await asyncio.gather(*(one(p, b) for p, b in calls)))

        return asyncio.run(run())


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sumsetlab",
        description="Exact sumset-growth computations on integer lattices.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--server",
        metavar="URL",
        help="base URL of a running service (default: run in-process)",
    )
    common.add_argument(
        "--json", action="store_true", help="print the JSON report envelope"
    )
    common.add_argument("--out", metavar="FILE", help="write the result to FILE")

    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name: str, help_: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_, parents=[common])

    p = cmd("sumset", "Minkowski sum of one set with itself or with a second set")
    p.add_argument("--in", dest="inputs", action="append", required=True,
                   metavar="FILE", help="point file; twice for A+B")

    p = cmd("compress", "iterated coordinate compression to a down-set")
    p.add_argument("--in", dest="inputs", action="append", required=True,
                   metavar="FILE")

    p = cmd("downset-check", "verify that a point set is a down-set")
    p.add_argument("--in", dest="inputs", action="append", required=True,
                   metavar="FILE")

    p = cmd("dim", "largest affine cube dimension inside the set")
    p.add_argument("--in", dest="inputs", action="append", required=True,
                   metavar="FILE")
    p.add_argument("--k", type=int, help="cap the search at this dimension")
    p.add_argument("--budget-ms", type=float, help="search budget in milliseconds")

    p = cmd("family", "generate a named family instance")
    p.add_argument("--family", required=True, metavar="KIND",
                   help="box | even | odd | cube | permutohedron | lehmer-box")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, default=0, help="side parameter (default 0)")

    p = cmd("predict", "closed-form |A| and |A+A| for a family instance")
    p.add_argument("--family", required=True, metavar="KIND",
                   help="box | even | odd | cube")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, default=0)

    p = cmd("check-bound", "verify the growth lower bounds on an instance")
    p.add_argument("--in", dest="inputs", action="append", metavar="FILE")
    p.add_argument("--family", metavar="KIND")
    p.add_argument("--d", type=int)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--budget-ms", type=float)

    p = cmd("blocks", "slice a down-set by its first k coordinates")
    p.add_argument("--in", dest="inputs", action="append", required=True,
                   metavar="FILE")
    p.add_argument("--k", type=int, required=True,
                   help="number of leading axes forming the slice set")

    p = cmd("fiber-check", "verify the slice inclusions and per-block bounds")
    p.add_argument("--in", dest="inputs", action="append", required=True,
                   metavar="FILE")
    p.add_argument("--k", type=int,
                   help="check only the first k axes (default: all subsets)")

    p = cmd("bm-check", "d-th-root superadditivity of |X+Y+{0,1}^d|")
    p.add_argument("--in", dest="inputs", action="append", required=True,
                   metavar="FILE", help="exactly two point files X and Y")

    p = cmd("certify", "exact rational certificate for one (k, d) or all")
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--all", action="store_true", help="certify every 0 <= k < d")
    p.add_argument("--max-d", type=int, default=25, help="with --all (default 25)")
    p.add_argument("--jobs", type=int, default=1, help="parallel requests with --all")

    p = cmd("minimize", "numeric search for the minimum grid ratio")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--restarts", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-6)

    p = cmd("lemma-check", "random monotone assignments through one family")
    p.add_argument("--family", required=True,
                   help="AI | SI | SI2 | SI3 | SI4 | SIavg | R")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--t", type=int, help="level parameter for SI4")
    p.add_argument("--n", type=int, default=100, help="number of assignments")
    p.add_argument("--seed", type=int, default=0)

    p = cmd("exceptional-pairs", "pairs (k, m) where the first mix turns positive")
    p.add_argument("--max-m", type=int, required=True)

    p = cmd("lehmer", "inversion-table image of all permutations of 1..d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--in", dest="inputs", action="append", metavar="FILE",
                   help="optional file of permutation vectors to encode")

    p = cmd("permutohedron-cube", "transposition cube inside permutation vectors")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--budget-ms", type=float)

    p = cmd("random-downset", "seeded random down-set containing {0,1}^d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True, help="volume target")
    p.add_argument("--seed", type=int, default=0)

    return parser


def _load_inputs(args: argparse.Namespace, expected: int | None) -> list[LatticeSet]:
    paths = getattr(args, "inputs", None) or []
    if expected is not None and len(paths) != expected:
        raise UsageError(
            f"{args.command} needs exactly {expected} --in file(s), got {len(paths)}"
        )
    sets = []
    for path in paths:
        report = load_points(path)
        if report.duplicate_count:
            print(
                f"warning: {path}: merged {report.duplicate_count} duplicate point(s)",
                file=sys.stderr,
            )
        sets.append(report.points)
    return sets


def _point_list(s: LatticeSet) -> list[list[int]]:
    return [list(p) for p in s.sorted_points()]


def _write_json_atomic(path: str, payload: dict) -> None:
    target = Path(path)
    fd, tmp = tempfile.mkstemp(
        dir=str(target.parent) or ".", prefix=target.name, suffix=".tmp"
    )
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, indent=2)
            handle.write("\n")
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# --- request builders: (path, payload) per subcommand -----------------------


def _build_request(args: argparse.Namespace) -> tuple[str, dict]:
    c = args.command
    if c == "sumset":
        sets = _load_inputs(args, None)
        if len(sets) not in (1, 2):
            raise UsageError("sumset needs one or two --in files")
        payload: dict[str, Any] = {"a": _point_list(sets[0])}
        if len(sets) == 2:
            payload["b"] = _point_list(sets[1])
        return "/sumset", payload
    if c == "compress":
        (a,) = _load_inputs(args, 1)
        return "/compress", {"points": _point_list(a)}
    if c == "downset-check":
        (a,) = _load_inputs(args, 1)
        return "/downset-check", {"points": _point_list(a)}
    if c == "dim":
        (a,) = _load_inputs(args, 1)
        return "/dim", {
            "points": _point_list(a),
            "k_max": args.k,
            "budget_ms": args.budget_ms,
        }
    if c == "family":
        return "/family", {"kind": args.family, "d": args.d, "n": args.n}
    if c == "predict":
        return "/predict", {"kind": args.family, "d": args.d, "n": args.n}
    if c == "check-bound":
        if args.inputs and args.family:
            raise UsageError("check-bound takes --in or --family, not both")
        if args.inputs:
            (a,) = _load_inputs(args, 1)
            return "/check-bound", {
                "points": _point_list(a),
                "budget_ms": args.budget_ms,
            }
        if not args.family or args.d is None:
            raise UsageError("check-bound needs --in FILE or --family KIND --d D")
        return "/check-bound", {
            "kind": args.family,
            "d": args.d,
            "n": args.n,
            "budget_ms": args.budget_ms,
        }
    if c == "blocks":
        (a,) = _load_inputs(args, 1)
        return "/blocks", {"points": _point_list(a), "axes": list(range(args.k))}
    if c == "fiber-check":
        (a,) = _load_inputs(args, 1)
        axes = list(range(args.k)) if args.k is not None else None
        return "/fiber-check", {"points": _point_list(a), "axes": axes}
    if c == "bm-check":
        x, y = _load_inputs(args, 2)
        return "/bm-check", {"x": _point_list(x), "y": _point_list(y)}
    if c == "certify":
        if args.k is None or args.d is None:
            raise UsageError("certify needs --k and --d (or --all)")
        return "/certify", {"k": args.k, "d": args.d}
    if c == "minimize":
        return "/minimize", {
            "k": args.k,
            "d": args.d,
            "restarts": args.restarts,
            "seed": args.seed,
            "tol": args.tol,
        }
    if c == "lemma-check":
        return "/lemma-check", {
            "family": args.family,
            "k": args.k,
            "d": args.d,
            "t": args.t,
            "count": args.n,
            "seed": args.seed,
        }
    if c == "exceptional-pairs":
        return "/exceptional-pairs", {"max_m": args.max_m}
    if c == "lehmer":
        sigmas = None
        if args.inputs:
            (perms,) = _load_inputs(args, 1)
            sigmas = _point_list(perms)
        return "/lehmer", {"d": args.d, "sigmas": sigmas}
    if c == "permutohedron-cube":
        return "/permutohedron-cube", {"d": args.d, "budget_ms": args.budget_ms}
    if c == "random-downset":
        return "/random-downset", {"d": args.d, "volume": args.n, "seed": args.seed}
    raise UsageError(f"unknown command {c!r}")


# --- verdict extraction ------------------------------------------------------

_CHECK_COMMANDS = {
    "downset-check": "ok",
    "check-bound": "ok",
    "fiber-check": "ok",
    "bm-check": "ok",
    "certify": "ok",
    "minimize": "meets_bound",
    "lemma-check": "ok",
    "lehmer": "matches_box",
    "permutohedron-cube": "ok",
}


def _verdict(command: str, data: dict) -> bool:
    key = _CHECK_COMMANDS.get(command)
    return True if key is None else bool(data[key])


# --- text renderers -----------------------------------------------------------


def _fmt_bool(flag: bool) -> str:
    return "yes" if flag else "no"


def _render(command: str, data: dict) -> list[str]:
    if command == "sumset":
        return [f"sumset: {data['size']} points"]
    if command == "compress":
        return [
            f"compressed: {data['size']} points, down-set: {_fmt_bool(data['down_set'])}",
            f"sumset size: {data['sumset_size_before']} before, "
            f"{data['sumset_size_after']} after",
        ]
    if command == "downset-check":
        lines = [f"down-set: {_fmt_bool(data['ok'])} ({data['size']} points)"]
        if data.get("violation"):
            v = data["violation"]
            if v.get("missing") is not None:
                lines.append(
                    f"violation: point {tuple(v['point'])} present, "
                    f"predecessor {tuple(v['missing'])} missing"
                )
            else:
                lines.append(f"violation: point {tuple(v['point'])} has a "
                             "negative coordinate")
        return lines
    if command == "dim":
        status = "certified" if data["certified"] else "incomplete (lower bound)"
        lines = [f"dimension: {data['dimension']} ({status})"]
        if data.get("witness"):
            w = data["witness"]
            lines.append(f"  base: {tuple(w['base'])}")
            for g in w["generators"]:
                lines.append(f"  generator: {tuple(g)}")
        return lines
    if command == "family":
        return [
            f"family {data['kind']} d={data['d']} n={data['n']}: "
            f"{data['size']} points"
        ]
    if command == "predict":
        lines = [
            f"predict {data['kind']} d={data['d']} n={data['n']}: "
            f"|A| = {data['size']}, |A+A| = {data['sumset_size']}"
        ]
        if data.get("limit"):
            lines.append(f"limiting ratio: {data['limit']}")
        return lines
    if command == "check-bound":
        eq = " (equality)" if data["equality"] else ""
        lines = [
            f"|A| = {data['size']}, |A+A| = {data['sumset_size']}",
            f"dimension: {data['dimension']} "
            + ("(certified)" if data["dimension_certified"] else "(lower bound only)"),
            f"growth constant: {data['growth']}",
            f"main bound: {data['main_bound']} -> "
            + ("holds" if data["main_ok"] else "VIOLATED")
            + f", slack {data['slack']}{eq}",
            f"sqrt2 bound: {data['root2_bound']:.4f} -> "
            + ("holds" if data["root2_ok"] else "VIOLATED"),
            f"error term: {data['error_term']} "
            f"(positive: {_fmt_bool(data['error_term_positive'])})",
        ]
        if data.get("predicted_match") is not None:
            lines.append(f"predicted counts match: {_fmt_bool(data['predicted_match'])}")
        lines.append(f"verdict: {'OK' if data['ok'] else 'FAIL'}")
        return lines
    if command == "blocks":
        lines = [
            f"axes {tuple(data['axes'])}: {data['size']} points in "
            f"{len(data['blocks'])} block(s), grid {data['grid_size']} points in "
            f"{len(data['grid_blocks'])} block(s)"
        ]
        for entry in data["blocks"]:
            lines.append(f"  pattern {tuple(entry['pattern'])}: {entry['size']} points")
        return lines
    if command == "fiber-check":
        lines = []
        for chk in data["checks"]:
            bound = (
                f", bound slack {chk['bound_slack']}"
                if chk.get("bound_slack") is not None
                else ""
            )
            lines.append(
                f"axes {tuple(chk['axes'])}: inclusions "
                f"{'ok' if chk['inclusions_ok'] else 'FAIL'}{bound}"
            )
            for f in chk["failures"]:
                lines.append(
                    f"  missing {tuple(f['missing'])} for patterns "
                    f"u={tuple(f['u'])}, v={tuple(f['v'])}"
                )
        lines.append(f"verdict: {'OK' if data['ok'] else 'FAIL'}")
        return lines
    if command == "bm-check":
        eq = " (equality)" if data["equality"] else ""
        return [
            f"|X| = {data['x_size']}, |Y| = {data['y_size']}, "
            f"|X+Y+cube| = {data['expanded_size']}",
            f"root inequality: {'holds' if data['ok'] else 'VIOLATED'}"
            f"{eq}, slack {data['slack']:.6g}",
        ]
    if command == "certify":
        mix = ", ".join(
            f"{f['weight']} x {f['family']}" + (f"(t={f['t']})" if f.get("t") else "")
            for f in data["families"]
        )
        return [
            f"certify k={data['k']} d={data['d']}: strategy {data['strategy']}",
            f"  mix: {mix}" + ("  (+ redistribution)" if data["redistributed"] else ""),
            f"  final vector: {' '.join(data['final_vector'])}",
            f"  target: {data['target']}",
            f"  verdict: {'OK' if data['ok'] else 'FAIL'}",
        ]
    if command == "minimize":
        exact = f" (exact {data['exact']})" if data.get("exact") else ""
        return [
            f"minimize k={data['k']} d={data['d']}: value {data['value']:.9g}{exact}",
            f"bound {data['bound']}: {'met' if data['meets_bound'] else 'UNDERSHOT'}",
        ]
    if command == "lemma-check":
        t = f" t={data['t']}" if data.get("t") is not None else ""
        return [
            f"lemma-check {data['family']}{t} k={data['k']} d={data['d']}: "
            f"{data['count']} assignments, {data['failures']} failure(s), "
            f"min slack {data['min_slack']}",
            f"verdict: {'OK' if data['ok'] else 'FAIL'}",
        ]
    if command == "exceptional-pairs":
        pairs = ", ".join(f"({k},{mm})" for k, mm in data["pairs"])
        return [f"exceptional pairs up to m={data['max_m']}: {pairs}"]
    if command == "lehmer":
        lines = [
            f"image of {data['d']}! permutations: {data['image_size']} points, "
            f"matches descending box: {_fmt_bool(data['matches_box'])}"
        ]
        if data.get("implied_growth"):
            lines.append(
                "supersets of the image inherit growth constant "
                f"{data['implied_growth']}"
            )
        if data.get("codes"):
            for code in data["codes"]:
                lines.append(f"  code: {tuple(code)}")
        return lines
    if command == "permutohedron-cube":
        lines = [
            f"d={data['d']}: witness of dimension {data['expected_k']} "
            f"{'valid' if data['witness_valid'] else 'INVALID'}"
        ]
        if data.get("max_dimension") is not None:
            certified = "certified" if data["max_dimension_certified"] else "lower bound"
            lines.append(
                f"max cube dimension over all vertices: {data['max_dimension']} "
                f"({certified})"
            )
        return lines
    if command == "random-downset":
        return [f"random down-set: {data['size']} points (d={data['d']})"]
    return [json.dumps(data)]


# --- certify --all -------------------------------------------------------------


def _run_certify_all(args: argparse.Namespace, client: ServiceClient) -> int:
    pairs = [(k, d) for d in range(1, args.max_d + 1) for k in range(d)]
    calls = [("/certify", {"k": k, "d": d}) for k, d in pairs]
    results = client.post_many(calls, jobs=args.jobs)
    envelope_data = []
    failures = []
    for (k, d), (status, body) in zip(pairs, results):
        if status != 200:
            raise UsageError(f"certify k={k} d={d}: {body.get('detail', body)}")
        envelope_data.append(body)
        if not body["ok"]:
            failures.append(body)
    ok = not failures
    envelope = {
        "command": "certify",
        "ok": ok,
        "data": {"max_d": args.max_d, "cases": len(pairs), "results": envelope_data},
    }
    if args.json:
        print(json.dumps(envelope, indent=2))
    else:
        by_d: dict[int, list[dict]] = {}
        for body in envelope_data:
            by_d.setdefault(body["d"], []).append(body)
        for d in sorted(by_d):
            verdicts = " ".join(
                f"k={body['k']}:{'OK' if body['ok'] else 'FAIL'}" for body in by_d[d]
            )
            print(f"d={d}: {verdicts}")
        print(
            f"certified {len(pairs) - len(failures)}/{len(pairs)} cases "
            f"up to d={args.max_d}: {'OK' if ok else 'FAIL'}"
        )
    if args.out:
        _write_json_atomic(args.out, envelope)
    if not ok:
        artifact = args.out or DEFAULT_ARTIFACT
        if not args.out:
            _write_json_atomic(artifact, envelope)
        print(f"counterexample written to {artifact}", file=sys.stderr)
        return 1
    return 0


# --- driver --------------------------------------------------------------------


def _run(args: argparse.Namespace) -> int:
    client = ServiceClient(server=args.server)
    if args.command == "certify" and getattr(args, "all", False):
        return _run_certify_all(args, client)
    path, payload = _build_request(args)
    status, data = client.post(path, payload)
    if status == 400 or status == 422:
        detail = data.get("detail", data)
        print(f"error: {detail}", file=sys.stderr)
        return 2
    if status != 200:
        print(f"error: service returned HTTP {status}: {data}", file=sys.stderr)
        return 2
    ok = _verdict(args.command, data)
    envelope = {"command": args.command, "ok": ok, "data": data}

    if args.command in _POINT_OUTPUT:
        points = LatticeSet(data["points"])
        header = " ".join(
            f"{key}={value}"
            for key, value in data.items()
            if key != "points" and not isinstance(value, (list, dict))
        )
        if args.out:
            dump_points(points, args.out, header=header or None)
        if args.json:
            print(json.dumps(envelope, indent=2))
        elif args.out:
            for line in _render(args.command, data):
                print(line)
        else:
            sys.stdout.write(dumps_points(points, header=header or None))
        return 0

    if args.json:
        print(json.dumps(envelope, indent=2))
    else:
        for line in _render(args.command, data):
            print(line)
    if args.out:
        _write_json_atomic(args.out, envelope)
    if not ok:
        artifact = args.out or DEFAULT_ARTIFACT
        if not args.out:
            _write_json_atomic(artifact, envelope)
        print(f"counterexample written to {artifact}", file=sys.stderr)
        return 1
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:  # argparse reports its own usage errors
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return _run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PointFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except httpx.HTTPError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
