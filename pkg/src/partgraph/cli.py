"""Command-line entry point.

Exit status: 0 on success, 1 on usage or domain errors, 2 when a proved
structural property fails to hold (which means a bug).
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import _jit
from .atlas import DEFAULT_TEMPLATES, build_atlas, growth_profile, normalized_profile, ratio_payload
from .config import get_caps
from .errors import InvariantViolation, PartGraphError
from .graph import build_graph, export_graph
from .invariants import local_translation_check, monotonicity_check
from .motifs import TemplateRegistry, find_occurrences
from .overlay import partitions_up_to, verify_induced_embedding
from .partitions import Partition
from .thresholds import EXTREMAL_KINDS, extremal_threshold, motif_threshold

EXIT_OK, EXIT_ERROR, EXIT_VIOLATION = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _partition(text):
    try:
        return Partition.parse(text)
    except PartGraphError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonneg(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _common():
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("caps and execution")
    g.add_argument("--enum-cap", type=_positive, help="largest n for partition enumeration")
    g.add_argument("--graph-cap", type=_positive, help="largest n for graph construction")
    g.add_argument("--clique-cap", type=_positive, help="largest n for clique invariants")
    g.add_argument("--neighborhood-cap", type=_positive, help="largest neighbourhood for local clique search")
    g.add_argument("--verify-cap", type=_positive, help="largest source level for overlay certification")
    g.add_argument("--workers", type=_positive, help="threads for parallel kernels")
    g.add_argument("--out", type=Path, help="write output here instead of stdout")
    return p


def make_parser():
    common = _common()
    parser = _Parser(prog="partgraph", description="Partition graph overlays, motifs, thresholds and atlas.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", parents=[common], help="build G_n and export it")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--format", choices=("json", "dot"), default="json")

    p = sub.add_parser("invariants", parents=[common], help="extremal records and monotonicity over a range")
    p.add_argument("--from", dest="n_from", type=_positive, required=True)
    p.add_argument("--to", dest="n_to", type=_positive, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    verify = sub.add_parser("verify", help="certify overlay properties").add_subparsers(
        dest="what", required=True, parser_class=_Parser
    )
    p = verify.add_parser("overlay", parents=[common], help="translation is an induced embedding")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--tau", type=_partition)
    p.add_argument("--sweep", type=_nonneg, metavar="K", help="check every tau with |tau| <= K")
    p = verify.add_parser("local", parents=[common], help="degree and omega_loc do not drop under translation")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--tau", type=_partition, required=True)

    motif = sub.add_parser("motif", help="rooted motif search").add_subparsers(
        dest="what", required=True, parser_class=_Parser
    )
    p = motif.add_parser("find", parents=[common], help="list occurrences in G_n")
    p.add_argument("--template", required=True, help="built-in alias or template JSON path")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--limit", type=_nonneg)
    p = motif.add_parser("show", parents=[common], help="print a template definition")
    p.add_argument("--template", required=True)

    threshold = sub.add_parser("threshold", help="first-appearance scans").add_subparsers(
        dest="what", required=True, parser_class=_Parser
    )
    p = threshold.add_parser("motif", parents=[common])
    p.add_argument("--template", required=True)
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--verify-to", type=_positive)
    p = threshold.add_parser("extremal", parents=[common])
    p.add_argument("--kind", choices=EXTREMAL_KINDS, required=True)
    p.add_argument("--bound", type=_nonneg, required=True)
    p.add_argument("--max-n", type=_positive, required=True)

    p = sub.add_parser("atlas", parents=[common], help="per-level atlas with threshold table")
    p.add_argument("--from", dest="n_from", type=_positive, required=True)
    p.add_argument("--to", dest="n_to", type=_positive, required=True)
    p.add_argument("--templates", default=",".join(DEFAULT_TEMPLATES), help="comma-separated names or paths")
    p.add_argument("--csv", type=Path, help="also write the per-metric CSV companion here")

    p = sub.add_parser("profile", parents=[common], help="growth profile, optionally normalized")
    p.add_argument("--kind", required=True, help="vertices|edges|delta|omega|s|motif:<name>")
    p.add_argument("--over", help="denominator profile kind")
    p.add_argument("--from", dest="n_from", type=_positive, required=True)
    p.add_argument("--to", dest="n_to", type=_positive, required=True)
    return parser


def _caps(args):
    base = get_caps()
    overrides = {
        "enumeration": args.enum_cap,
        "graph": args.graph_cap,
        "clique_level": args.clique_cap,
        "neighborhood": args.neighborhood_cap,
        "verify": args.verify_cap,
    }
    return replace(base, **{k: v for k, v in overrides.items() if v is not None})


def _json(payload):
    return (json.dumps(payload, indent=2) + "\n").encode()


def _emit(data, args, stdout):
    if args.out is not None:
        args.out.write_bytes(data)
    else:
        stdout.write(data.decode())


def _range(args):
    if args.n_from > args.n_to:
        raise UsageError(f"--from {args.n_from} is greater than --to {args.n_to}")


def _cmd_build(args, caps, registry):
    return export_graph(build_graph(args.n, caps), args.format), EXIT_OK


def _cmd_invariants(args, caps, registry):
    _range(args)
    report = monotonicity_check(args.n_from, args.n_to, caps)
    status = EXIT_OK if report.passed else EXIT_VIOLATION
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "delta", "omega", "s", "delta_witness", "omega_witness"])
        for r in report.records:
            d = r.to_dict()
            w.writerow([d["n"], d["delta"], d["omega"], d["s"], d["delta_witness"], d["omega_witness"]])
        return buf.getvalue().encode(), status
    return _json(report.to_dict()), status


def _cmd_verify(args, caps, registry):
    if args.what == "local":
        report = local_translation_check(args.n, args.tau, caps)
        return _json(report.to_dict()), EXIT_OK if report.passed else EXIT_VIOLATION
    if args.tau is None and args.sweep is None:
        raise UsageError("verify overlay needs --tau or --sweep")
    taus = [] if args.tau is None else [args.tau]
    if args.sweep is not None:
        taus += [t for t in partitions_up_to(args.sweep) if t not in taus]
    reports = [verify_induced_embedding(args.n, tau, caps) for tau in taus]
    passed = all(r.passed for r in reports)
    if len(reports) == 1 and args.sweep is None:
        payload = reports[0].to_dict()
    else:
        payload = {"n": args.n, "passed": passed, "reports": [r.to_dict() for r in reports]}
    return _json(payload), EXIT_OK if passed else EXIT_VIOLATION


def _cmd_motif(args, caps, registry):
    template = registry.resolve(args.template)
    if args.what == "show":
        shape = getattr(template, "template", template)
        return _json(shape.to_dict()), EXIT_OK
    occs = find_occurrences(build_graph(args.n, caps), template, args.limit)
    payload = {
        "template": template.name,
        "n": args.n,
        "count": len(occs),
        "limit": args.limit,
        "occurrences": [o.to_dict() for o in occs],
    }
    return _json(payload), EXIT_OK


def _cmd_threshold(args, caps, registry):
    if args.what == "motif":
        result = motif_threshold(registry.resolve(args.template), args.max_n, args.verify_to, caps)
    else:
        result = extremal_threshold(args.kind, args.bound, args.max_n, caps)
    return _json(result.to_dict()), EXIT_OK


def _cmd_atlas(args, caps, registry):
    _range(args)
    names = [t for t in args.templates.split(",") if t]
    atlas = build_atlas(args.n_from, args.n_to, names, registry, caps)
    if args.csv is not None:
        args.csv.write_bytes(atlas.to_csv())
    return atlas.to_json(), EXIT_OK


def _cmd_profile(args, caps, registry):
    _range(args)
    ns = list(range(args.n_from, args.n_to + 1))
    if args.over:
        ratios = normalized_profile(args.kind, args.over, args.n_from, args.n_to, registry, caps)
        values = [ratio_payload(r) for r in ratios]
    else:
        values = growth_profile(args.kind, args.n_from, args.n_to, registry, caps)
    payload = {"kind": args.kind, "over": args.over, "n": ns, "values": values}
    return _json(payload), EXIT_OK


COMMANDS = {
    "build": _cmd_build,
    "invariants": _cmd_invariants,
    "verify": _cmd_verify,
    "motif": _cmd_motif,
    "threshold": _cmd_threshold,
    "atlas": _cmd_atlas,
    "profile": _cmd_profile,
}


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = make_parser().parse_args(argv)
        caps = _caps(args)
        if args.workers:
            _jit.set_workers(args.workers)
        data, status = COMMANDS[args.command](args, caps, TemplateRegistry())
        _emit(data, args, stdout)
        return status
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_ERROR
    except InvariantViolation as exc:
        stderr.write(f"partgraph: invariant violated: {exc}\n")
        return EXIT_VIOLATION
    except PartGraphError as exc:
        stderr.write(f"partgraph: {exc}\n")
        return EXIT_ERROR
    except OSError as exc:
        stderr.write(f"partgraph: {exc}\n")
        return EXIT_ERROR


def main():
    sys.exit(run())
