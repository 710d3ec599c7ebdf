"""``prime-weave`` command line tool.

Usage::

    prime-weave [--config FILE] [-v] <command> [flags]

Commands:

* ``gen`` - build a family graph, JSON or ``--dot``

* ``label`` - constructive labeling of a family graph, from flags or a generated graph on ``--stdin``

* ``verify`` - check a labeling, exit 1 when it is not a prime labeling

* ``solve`` - backtracking search, exit 1 unless a labeling is found

* ``count`` - number of prime labelings of a small graph

* ``scan`` - solve every small unicyclic graph, exit 1 on a counterexample

* ``pillai`` - search for a Pillai window

* ``check`` - run a constructive labeler and the verifier over a range of n, exit 1 on any failure

Pipeline::

    prime-weave gen --family hairy --n 4 --m 3 | prime-weave label --stdin --bundle | prime-weave verify --stdin

Exit codes: 0 success, 1 negative result, 2 usage, input or configuration errors.
"""

import argparse
import io
import json
import sys

from ..app import PrimeWeaveApp
from ..configure import ConfigurationError
from ..configure import Configurator
from ..errors import DomainError
from ..errors import GraphError
from ..graph.codec import parse_graph
from ..graph.codec import serialize_graph
from ..graph.codec import to_dot
from ..graph.families import Family
from ..graph.families import FamilySpec
from ..graph.families import build
from ..labelings.base import verify
from ..labelings.codec import parse_bundle
from ..labelings.codec import parse_labeling
from ..labelings.codec import serialize_bundle
from ..labelings.codec import serialize_labeling
from ..labelings.codec import serialize_report
from ..labelings.registry import check_family
from ..labelings.registry import label_family
from ..numth import find_pillai_run
from ..solver.count import count_labelings
from ..solver.scan import scan_conjecture
from ..solver.search import solve
from ..utils.dictutil import MergeError
from ..utils.dictutil import merge_dict
from . import defaultlogging


EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

PROG = "prime-weave"


class UsageError(Exception):
    """Bad command line. Message names the flag."""


class _Parser(argparse.ArgumentParser):
    """Raise instead of printing and exiting, so :py:func:`run` owns the streams."""

    def error(self, message):
        raise UsageError(message)


def _positive_int(text):
    value = _nonnegative_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, got {}".format(text))
    return value


def _nonnegative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got {!r}".format(text)) from None
    if value < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer, got {}".format(text))
    return value


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected seconds, got {!r}".format(text)) from None
    if value <= 0:
        raise argparse.ArgumentTypeError("expected a positive number of seconds, got {}".format(text))
    return value


def _add_family_flags(parser):
    parser.add_argument("--family", choices=[family.value for family in Family], help="Graph family")
    parser.add_argument("--n", type=_positive_int, help="Family size")
    parser.add_argument("--m", type=_positive_int, help="Pendants per cycle vertex (hairy) or path length (cyclepath)")
    parser.add_argument("--levels", type=_positive_int, help="Ternary levels for cps, 1 or 2")


def _add_graph_source_flags(parser):
    _add_family_flags(parser)
    parser.add_argument("--graph", metavar="FILE", help="Graph JSON file")
    parser.add_argument("--stdin", action="store_true", help="Read a graph or a bundle from standard input")


def create_parser():
    parser = _Parser(prog=PROG, description="Prime vertex labelings for unicyclic graph families")
    parser.add_argument("--config", metavar="FILE", help="YAML configuration file")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="More logging on standard error, repeat for debug")

    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    gen = commands.add_parser("gen", help="Build a family graph")
    _add_family_flags(gen)
    gen.add_argument("--dot", action="store_true", help="Emit DOT instead of JSON")

    label = commands.add_parser("label", help="Constructive labeling")
    _add_family_flags(label)
    label.add_argument("--stdin", action="store_true", help="Label the graph JSON on standard input, family taken from its family field")
    output = label.add_mutually_exclusive_group()
    output.add_argument("--bundle", action="store_true", help="Emit the graph together with the labels")
    output.add_argument("--dot", action="store_true", help="Emit DOT with labels as node captions")

    verifier = commands.add_parser("verify", help="Check a labeling")
    verifier.add_argument("--graph", metavar="FILE", help="Graph JSON file")
    verifier.add_argument("--labels", metavar="FILE", help="Labeling JSON file")
    verifier.add_argument("--stdin", action="store_true", help="Read a graph and labels bundle from standard input")

    solver = commands.add_parser("solve", help="Backtracking search")
    _add_graph_source_flags(solver)
    solver.add_argument("--max-nodes", type=_nonnegative_int, help="Node budget")
    solver.add_argument("--time-limit", type=_positive_float, help="Seconds")
    solver.add_argument("--stats", action="store_true", help="Include counters and elapsed time")
    solver.add_argument("--dot", action="store_true", help="Emit DOT of the found labeling")

    count = commands.add_parser("count", help="Count prime labelings of a small graph")
    _add_graph_source_flags(count)
    count.add_argument("--guard", type=_positive_int, help="Largest vertex count accepted")

    scan = commands.add_parser("scan", help="Solve every unicyclic graph up to --max-n vertices")
    scan.add_argument("--max-n", type=_positive_int, required=True)
    scan.add_argument("--max-nodes", type=_nonnegative_int, help="Node budget per graph")
    scan.add_argument("--time-limit", type=_positive_float, help="Seconds per graph")
    scan.add_argument("--jobs", type=_positive_int, help="Worker processes")
    scan.add_argument("--cap", type=_positive_int, help="Largest accepted --max-n")
    scan.add_argument("--output", metavar="FILE", help="Also write the report here")

    pillai = commands.add_parser("pillai", help="Find the first Pillai window of length m")
    pillai.add_argument("--m", type=_positive_int, required=True)
    pillai.add_argument("--limit", type=_positive_int, required=True, help="Largest window start to try")

    family_check = commands.add_parser("check", help="Verify a constructive labeler over a range of n")
    family_check.add_argument("--family", choices=[family.value for family in Family], required=True)
    family_check.add_argument("--from", dest="n_from", type=_positive_int, required=True)
    family_check.add_argument("--to", dest="n_to", type=_positive_int, required=True)
    family_check.add_argument("--m", type=_positive_int)
    family_check.add_argument("--levels", type=_positive_int)
    family_check.add_argument("--vertex-cap", type=_positive_int, help="Largest graph to build")

    return parser


def _limit_overrides(args):
    """Command line flags that override the ``limits`` configuration section. Unset flags are None and skipped."""
    return {
        "limits": {
            "max_nodes": getattr(args, "max_nodes", None),
            "time_limit": getattr(args, "time_limit", None),
            "jobs": getattr(args, "jobs", None),
            "enumeration_cap": getattr(args, "cap", None),
            "count_guard": getattr(args, "guard", None),
            "vertex_cap": getattr(args, "vertex_cap", None),
        }
    }


def setup_app(args):
    """Defaults, then the YAML file, then the flags."""
    app = PrimeWeaveApp()
    configurator = Configurator(app)
    config = Configurator.prepare_yaml_file(args.config) if args.config else {}
    try:
        merge_dict(config, _limit_overrides(args))
    except MergeError as e:
        raise ConfigurationError(str(e)) from e
    configurator.load_from_dict(config)
    return app


def _read_file(fname, flag):
    try:
        with io.open(fname, "rt") as f:
            return f.read()
    except OSError as e:
        raise UsageError("{}: {}".format(flag, e)) from e


def _parameter_error(e, args, n_flag="--n"):
    """Name the flag behind a family parameter error."""
    if e.param == "n":
        flag = n_flag
    elif e.param:
        flag = "--{}".format(e.param)
    else:
        flag = "--family {}".format(args.family)
    return UsageError("{}: {}".format(flag, e))


def _family_spec(args):
    if not args.family:
        raise UsageError("--family is required")
    if args.n is None:
        raise UsageError("--n is required")
    try:
        return FamilySpec(args.family, args.n, m=args.m, levels=args.levels)
    except GraphError as e:
        raise _parameter_error(e, args) from e


def _read_graph(args, stdin):
    """Graph and optional labels from exactly one of --family, --graph or --stdin."""
    sources = [flag for flag, given in (("--family", args.family), ("--graph", args.graph), ("--stdin", args.stdin)) if given]
    if len(sources) != 1:
        raise UsageError("give exactly one of --family, --graph or --stdin")

    if args.family:
        return build(_family_spec(args)), None

    if args.graph:
        text = _read_file(args.graph, "--graph")
        try:
            return parse_graph(text), None
        except DomainError as e:
            raise UsageError("--graph: {}".format(e)) from e

    try:
        return parse_bundle(stdin.read())
    except DomainError as e:
        raise UsageError("--stdin: {}".format(e)) from e


def _emit(stdout, payload):
    if not isinstance(payload, str):
        payload = json.dumps(payload)
    stdout.write(payload)
    if not payload.endswith("\n"):
        stdout.write("\n")


def cmd_gen(app, args, stdin, stdout):
    g = build(_family_spec(args))
    _emit(stdout, to_dot(g) if args.dot else serialize_graph(g))
    return EXIT_OK


def cmd_label(app, args, stdin, stdout):
    if args.stdin:
        if args.family:
            raise UsageError("--stdin takes the family from the graph, drop --family")
        try:
            g, _ = parse_bundle(stdin.read())
        except DomainError as e:
            raise UsageError("--stdin: {}".format(e)) from e
        if g.family is None:
            raise UsageError("--stdin: graph has no family field, only generated graphs can be labeled")
        labeling = app.labelers.for_spec(g.family)(g)
    else:
        g, labeling = label_family(_family_spec(args), app.labelers)

    if args.bundle:
        _emit(stdout, serialize_bundle(g, labeling))
    elif args.dot:
        _emit(stdout, to_dot(g, labeling))
    else:
        _emit(stdout, serialize_labeling(labeling))
    return EXIT_OK


def cmd_verify(app, args, stdin, stdout):
    if args.stdin:
        if args.graph or args.labels:
            raise UsageError("--stdin cannot be combined with --graph or --labels")
        try:
            g, labeling = parse_bundle(stdin.read())
        except DomainError as e:
            raise UsageError("--stdin: {}".format(e)) from e
        if labeling is None:
            raise UsageError("--stdin: bundle has no labels")
    else:
        if not (args.graph and args.labels):
            raise UsageError("give --graph and --labels, or --stdin")
        try:
            g = parse_graph(_read_file(args.graph, "--graph"))
        except DomainError as e:
            raise UsageError("--graph: {}".format(e)) from e
        try:
            labeling = parse_labeling(_read_file(args.labels, "--labels"))
        except DomainError as e:
            raise UsageError("--labels: {}".format(e)) from e

    report = verify(g, labeling)
    _emit(stdout, serialize_report(report))
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_solve(app, args, stdin, stdout):
    g, _ = _read_graph(args, stdin)
    stats = solve(g, app.limits.budget())
    if args.dot and stats.found:
        _emit(stdout, to_dot(g, stats.labeling))
    else:
        _emit(stdout, stats.to_dict(include_stats=args.stats))
    return EXIT_OK if stats.found else EXIT_NEGATIVE


def cmd_count(app, args, stdin, stdout):
    g, _ = _read_graph(args, stdin)
    _emit(stdout, {"count": count_labelings(g, guard=app.limits.count_guard)})
    return EXIT_OK


def cmd_scan(app, args, stdin, stdout):
    limits = app.limits
    report = scan_conjecture(args.max_n, budget=limits.budget(), jobs=limits.jobs, cap=limits.enumeration_cap, results_path=args.output)
    _emit(stdout, report.to_dict())
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_pillai(app, args, stdin, stdout):
    run = find_pillai_run(args.m, args.limit)
    if run is None:
        _emit(stdout, {"found": False})
    else:
        _emit(stdout, {"found": True, "start": run.start, "m": run.length})
    return EXIT_OK


def cmd_check(app, args, stdin, stdout):
    try:
        report = check_family(args.family, args.n_from, args.n_to, m=args.m, levels=args.levels, registry=app.labelers, vertex_cap=app.limits.vertex_cap)
    except GraphError as e:
        raise _parameter_error(e, args, n_flag="--from") from e
    _emit(stdout, report.to_dict())
    return EXIT_OK if report.ok else EXIT_NEGATIVE


COMMANDS = {
    "gen": cmd_gen,
    "label": cmd_label,
    "verify": cmd_verify,
    "solve": cmd_solve,
    "count": cmd_count,
    "scan": cmd_scan,
    "pillai": cmd_pillai,
    "check": cmd_check,
}


def run(argv=None, stdin=None, stdout=None, stderr=None, logging_=True):
    """Run one command.

    :param argv: Arguments without the program name, ``sys.argv[1:]`` when None

    :param logging_: Set up console logging. Tests turn this off.

    :return: Exit code
    """
    argv = sys.argv[1:] if argv is None else argv
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    def fail(message):
        stderr.write("{}: error: {}\n".format(PROG, message))
        return EXIT_USAGE

    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        stderr.write(parser.format_usage())
        return fail(e)
    except SystemExit as e:
        # --help
        return e.code or EXIT_OK

    try:
        if logging_:
            defaultlogging.setup_stderr_logging(args.verbose, stream=stderr)
        app = setup_app(args)
        if logging_ and app.config.get("logging"):
            Configurator.setup_logging(app.config["logging"])
        return COMMANDS[args.command](app, args, stdin, stdout)
    except UsageError as e:
        return fail(e)
    except ConfigurationError as e:
        return fail("--config: {}".format(e))
    except DomainError as e:
        return fail(e)


def main():
    sys.exit(run())
