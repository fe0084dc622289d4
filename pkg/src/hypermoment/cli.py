"""Command-line front end.

Every subcommand prints one JSON document::

    {"report": {"schema": ..., "command": ..., "inputs": ..., "status": ...,
                "result": ...},
     "wall_time_s": ...}

The ``report`` part is deterministic for identical inputs; the wall time
lives outside it and is dropped with ``--no-timing``.  Moments, counts and
other potentially large integers are rendered as decimal strings.

Exit codes: 0 success, 1 a verify check failed, 2 invalid input (unreadable
or malformed file, hypergraph invariant broken), 3 precondition or scope
violation raised by an engine.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import core
from .canon import canonical_key
from .census import census
from .core import FamilySpec, Hypergraph, HypergraphError, make_family
from .enumerate import FamilyQuery, enumerate_family
from .moments import moment_sequence
from .order import s_compare, sort_family
from .transform import (
    PathShiftResult,
    find_sites,
    reduce_to_extremal,
    spec_from_dict,
    spec_to_dict,
)
from .transform import apply as apply_transform
from .verify import SUITES, VerifyCaps, run_suite

SCHEMA = "hypermoment.report/1"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3


class InputError(Exception):
    """Raised for anything wrong with what the user handed in."""


# ---------------------------------------------------------------- input


def _read_source(src: str) -> str:
    if src == "-":
        return sys.stdin.read()
    try:
        return Path(src).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {src}: {exc.strerror}") from None


def load_hypergraph(src: str) -> Hypergraph:
    """JSON object or the plain text format, sniffed from the first character."""
    text = _read_source(src)
    try:
        if text.lstrip().startswith("{"):
            return core.from_json(text)
        return core.from_text(text)
    except HypergraphError as exc:
        raise InputError(f"{src}: {exc}") from None


def _load_json_arg(raw: str, what: str):
    """Inline JSON, or a path to a JSON file."""
    text = raw if raw.lstrip()[:1] in "{[" else _read_source(raw)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: invalid JSON: {exc}") from None


# --------------------------------------------------------------- output


def _hg(h: Hypergraph) -> dict:
    return core.to_dict(h)


def _seq(seq) -> list[list[str]]:
    return [[str(d), str(v)] for d, v in seq.entries]


def _strs(obj):
    """Render ints (but not bools) as decimal strings, recursively."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _strs(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_strs(v) for v in obj]
    return obj


# ------------------------------------------------------------- commands


def _family_spec(args) -> FamilySpec:
    graph = ()
    if args.family == "power":
        if not args.graph:
            raise InputError("--family power needs --graph")
        raw = _load_json_arg(args.graph, "--graph")
        try:
            graph = tuple((int(a), int(b)) for a, b in raw)
        except (TypeError, ValueError):
            raise InputError("--graph must be a list of vertex pairs") from None
    return FamilySpec(args.family, args.m, q=args.q, e=args.e, f=args.f, graph=graph)


def cmd_gen(args):
    spec = _family_spec(args)
    h = make_family(spec)
    inputs = {"family": spec.kind, "m": spec.m, "q": spec.q, "e": spec.e, "f": spec.f}
    if args.out:
        try:
            Path(args.out).write_text(core.to_json(h) + "\n")
        except OSError as exc:
            raise InputError(f"cannot write {args.out}: {exc.strerror}") from None
    return inputs, _hg(h)


def cmd_moments(args):
    h = load_hypergraph(args.file)
    seq = moment_sequence(h, args.dmax, cross_check=args.cross_check)
    return {"file": args.file, "dmax": seq.d_max}, {"m": h.m, "moments": _seq(seq)}


def cmd_census(args):
    h = load_hypergraph(args.file)
    return {"file": args.file}, {k: str(v) for k, v in census(h).items()}


def cmd_zagreb(args):
    h = load_hypergraph(args.file)
    degs = core.degrees(h)
    return {"file": args.file}, {
        "zagreb": str(core.zagreb(h)),
        "degrees": [str(degs[v]) for v in range(h.n)],
        "structure": str(core.structure_class(h)),
    }


def cmd_compare(args):
    h1, h2 = load_hypergraph(args.first), load_hypergraph(args.second)
    out = s_compare(h1, h2, args.dmax)
    return {"first": args.first, "second": args.second, "dmax": out.d_max}, {
        "relation": out.relation.value,
        "deciding_index": out.deciding_index,
        "d_max": out.d_max,
        "cross_size": out.cross_size,
        "first": _seq(out.first),
        "second": _seq(out.second),
    }


def _query(args) -> FamilyQuery:
    fam = args.family
    if args.binary:
        fam = {"hypertrees": "binary_hypertrees", "unicyclic": "unicyclic_binary"}.get(fam, fam)
    return FamilyQuery(fam, args.m, q=args.q, e=args.e, f=args.f)


def _query_inputs(fq: FamilyQuery) -> dict:
    return {"family": fq.family, "m": fq.m, "q": fq.q, "e": fq.e, "f": fq.f}


def cmd_enumerate(args):
    fq = _query(args)
    hs = enumerate_family(fq)
    members = [{"key": canonical_key(h).hex(), **_hg(h)} for h in hs]
    return _query_inputs(fq), {"count": str(len(hs)), "members": members}


def cmd_order(args):
    if args.files and args.family:
        raise InputError("give either input files or --family, not both")
    if args.files:
        hs = [load_hypergraph(f) for f in args.files]
        inputs = {"files": list(args.files)}
    elif args.family:
        fq = _query(args)
        hs = enumerate_family(fq)
        inputs = _query_inputs(fq)
    else:
        raise InputError("order needs input files or --family")
    dmax = args.dmax if args.dmax is not None else 3 * hs[0].m
    inputs["dmax"] = dmax
    blocks = sort_family(hs, dmax)
    out = []
    for block in blocks:
        out.append({
            "moments": _seq(moment_sequence(block[0], dmax)),
            "members": [{"key": canonical_key(h).hex(), **_hg(h)} for h in block],
        })
    return inputs, {"blocks": out, "block_count": str(len(out)), "member_count": str(len(hs))}


def _transform_result(res) -> dict:
    if isinstance(res, PathShiftResult):
        return {
            "split": _hg(res.split),
            "merged": _hg(res.merged),
            "p3_split": str(res.p3_split),
            "p3_merged": str(res.p3_merged),
            "holds": res.holds,
        }
    return {
        "kind": res.kind,
        "after": _hg(res.after),
        "quantity": res.quantity,
        "before_value": str(_quantity(res.before, res.quantity)),
        "after_value": str(_quantity(res.after, res.quantity)),
        "predicted_delta": str(res.predicted),
        "actual_delta": str(res.actual),
        "holds": res.holds,
    }


def _quantity(h: Hypergraph, quantity: str) -> int:
    return core.zagreb(h) if quantity == "zagreb" else census(h)["P3"]


def cmd_transform(args):
    chosen = [x for x in (args.spec, args.sites, args.reduce) if x]
    if len(chosen) != 1:
        raise InputError("transform needs exactly one of --spec, --sites or --reduce")
    h = load_hypergraph(args.file)
    if args.spec:
        raw = _load_json_arg(args.spec, "--spec")
        if not isinstance(raw, dict):
            raise InputError("--spec must be a JSON object")
        try:
            spec = spec_from_dict(raw)
        except (TypeError, ValueError) as exc:
            raise InputError(f"--spec: {exc}") from None
        res = apply_transform(h, spec)
        return {"file": args.file, "spec": spec_to_dict(spec)}, _transform_result(res)
    if args.sites:
        sites = [spec_to_dict(s) for s in find_sites(h, args.sites)]
        return {"file": args.file, "sites": args.sites}, {"count": str(len(sites)), "sites": _strs(sites)}
    trace = reduce_to_extremal(h, args.reduce)
    steps = [{
        "kind": s.kind,
        "spec": _strs(spec_to_dict(s.spec)),
        "quantity": s.quantity,
        "before": str(s.before),
        "after": str(s.after),
    } for s in trace]
    final = trace[-1].result if trace else h
    return {"file": args.file, "mode": args.reduce}, {"steps": steps, "final": _hg(final)}


def cmd_verify(args):
    caps = VerifyCaps()
    if args.caps:
        raw = _load_json_arg(args.caps, "--caps")
        if not isinstance(raw, dict):
            raise InputError("--caps must be a JSON object")
        try:
            caps = VerifyCaps.from_dict(raw)
        except (TypeError, ValueError) as exc:
            raise InputError(f"--caps: {exc}") from None
    checks = run_suite(args.suite, caps)
    rows = [{"name": c.name, "status": "pass" if c.passed else "fail", "detail": _strs(c.detail)} for c in checks]
    failed = sum(not c.passed for c in checks)
    result = {"checks": rows, "passed": str(len(checks) - failed), "failed": str(failed)}
    return {"suite": args.suite}, result


COMMANDS = {
    "gen": cmd_gen,
    "moments": cmd_moments,
    "census": cmd_census,
    "zagreb": cmd_zagreb,
    "compare": cmd_compare,
    "order": cmd_order,
    "enumerate": cmd_enumerate,
    "transform": cmd_transform,
    "verify": cmd_verify,
}


# ------------------------------------------------------------ rendering


def _render_text(report: dict) -> str:
    lines = [f"command: {report['command']}", f"status:  {report['status']}"]
    if "error" in report:
        lines.append(f"error:   {report['error']['kind']}: {report['error']['message']}")
        return "\n".join(lines) + "\n"
    result = report["result"]
    if report["command"] == "verify":
        width = max((len(c["name"]) for c in result["checks"]), default=0)
        lines += [f"  {c['name']:<{width}}  {c['status'].upper()}" for c in result["checks"]]
        lines.append(f"passed {result['passed']}, failed {result['failed']}")
    elif "moments" in result and "relation" not in result:
        lines += [f"  S_{d:<4} {v}" for d, v in result["moments"]]
    elif "relation" in result:
        lines.append(f"relation: {result['relation']} (deciding index {result['deciding_index']})")
        lines += [f"  S_{a[0]:<4} {a[1]:>24} {b[1]:>24}" for a, b in zip(result["first"], result["second"])]
    elif "blocks" in result:
        for i, b in enumerate(result["blocks"]):
            for h in b["members"]:
                lines.append(f"  {i:>4}  {h['edges']}")
    else:
        for k, v in result.items():
            lines.append(f"  {k:<16} {json.dumps(v)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- parser


def _add_family_flags(p, *, required: bool):
    p.add_argument("--m", type=int, required=required, help="edge cardinality")
    p.add_argument("--q", type=int, default=0, help="number of edges")
    p.add_argument("--e", type=int, default=0, help="girth (cycle length)")
    p.add_argument("--f", type=int, default=0, help="number of tree edges outside the cycle")


def build_parser() -> argparse.ArgumentParser:
    # output flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    common.add_argument("--no-timing", action="store_true", default=argparse.SUPPRESS,
                        help="omit the wall-time envelope field")
    parser = argparse.ArgumentParser(prog="hypermoment", description=__doc__.split("\n")[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    p = sub.add_parser("gen", help="build a named family member")
    p.add_argument("--family", required=True, choices=("hyperpath", "hyperstar", "hypercycle", "power", "F", "E"))
    _add_family_flags(p, required=True)
    p.add_argument("--graph", help="edge list of the base graph for --family power (JSON or file)")
    p.add_argument("--out", help="also write the hypergraph to this file")

    p = sub.add_parser("moments", help="spectral moments S_0..S_dmax")
    p.add_argument("file")
    p.add_argument("--dmax", type=int, default=None)
    p.add_argument("--cross-check", action="store_true", help="also run the general engine and compare")

    p = sub.add_parser("census", help="counts of P1, P2, P3 and S3")
    p.add_argument("file")

    p = sub.add_parser("zagreb", help="Zagreb index and degrees")
    p.add_argument("file")

    p = sub.add_parser("compare", help="S-order comparison of two hypergraphs")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--dmax", type=int, default=None)

    family_choices = ("hypertrees", "binary_hypertrees", "unicyclic", "unicyclic_binary", "unicyclic_all")
    p = sub.add_parser("order", help="sort files or an enumerated family in S-order")
    p.add_argument("files", nargs="*")
    p.add_argument("--family", choices=family_choices)
    _add_family_flags(p, required=False)
    p.add_argument("--binary", action="store_true")
    p.add_argument("--dmax", type=int, default=None)

    p = sub.add_parser("enumerate", help="list a family up to isomorphism")
    p.add_argument("--family", required=True, choices=family_choices)
    _add_family_flags(p, required=True)
    p.add_argument("--binary", action="store_true")

    p = sub.add_parser("transform", help="apply a transformation, list sites, or reduce")
    p.add_argument("file")
    p.add_argument("--spec", help="transformation spec (JSON or file)")
    p.add_argument("--sites", choices=("T1", "T2", "T3", "T4", "T5"))
    p.add_argument("--reduce", choices=("star-ward", "path-ward"))

    p = sub.add_parser("verify", help="rerun the ordering and transformation checks")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--caps", help="JSON object overriding the check sizes (JSON or file)")
    return parser


def _inputs_of(args) -> dict:
    skip = {"command", "format", "no_timing"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v not in (None, False)}


def run(args: argparse.Namespace) -> tuple[int, dict]:
    """Execute parsed arguments; returns (exit code, report)."""
    report = {"schema": SCHEMA, "command": args.command}
    try:
        inputs, result = COMMANDS[args.command](args)
    except InputError as exc:
        report.update(inputs=_inputs_of(args), status="error", error={"kind": "invalid_input", "message": str(exc)})
        return EXIT_INPUT, report
    except HypergraphError as exc:
        report.update(inputs=_inputs_of(args), status="error", error={"kind": "precondition", "message": str(exc)})
        return EXIT_PRECONDITION, report
    report["inputs"] = inputs
    code = EXIT_OK
    if args.command == "verify" and result["failed"] != "0":
        code = EXIT_FAILED
    report["status"] = "ok" if code == EXIT_OK else "failed"
    report["result"] = result
    return code, report


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    code, report = run(args)
    elapsed = time.perf_counter() - start
    if getattr(args, "format", "json") == "text":
        sys.stdout.write(_render_text(report))
    else:
        envelope = {"report": report}
        if not getattr(args, "no_timing", False):
            envelope["wall_time_s"] = round(elapsed, 6)
        sys.stdout.write(json.dumps(envelope, indent=2) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
