# encoding=utf-8
"""
Command line front end

Every subcommand reads one diagram (two for ``product``) given as a path, ``-`` for
standard input, or ``fixture:<name>``. Analysis commands print a JSON report;
``op``, ``product``, ``closure`` and ``lift`` print a diagram so commands can be
chained::

    knotoid op --kind rot fixture:kinoshita | knotoid seq -

Exit status: 0 success, 1 invalid input, 2 usage error, 3 budget exhausted (the
report is still printed and marked partial).
"""
from __future__ import print_function, division
import argparse
import json
import logging
import sys
import time

from . import __version__
from .canon import digest
from .config import Budget
from .diagram import parse, ShortcutMap, MultiShortcutMap
from .errors import KnotoidGenericError, KnotoidBudgetError
from .fixtures import fixture_names, resolve_text
from .invariants import invariant_report
from .moves import explore, certify_heights
from .ops import involution, INVOLUTIONS, product, closure, OVER, UNDER, lift_cover


# Logger
log = logging.getLogger(__file__)

REPORT_SCHEMA = 1

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_PARTIAL = 3


class UsageError(KnotoidGenericError):
    """ Arguments are well formed but do not fit the input """


class _Context(object):
    """ Parsed arguments plus the streams a run reads and writes """
    def __init__(self, args, stdin, stdout):
        self.args = args
        self.stdin = stdin
        self.stdout = stdout
        # Input diagram and resolved budget, kept for partial reports
        self.kmap = None
        self.last_budget = None

    def read(self, ref, check=True):
        kmap = parse(resolve_text(ref, self.stdin))
        if check:
            kmap.require_valid()
        if self.kmap is None:
            self.kmap = kmap
        return kmap

    def budget(self, kmap):
        self.last_budget = Budget.for_map(kmap, self.args.config,
                                          max_crossings=self.args.budget_crossings,
                                          max_height=self.args.budget_height,
                                          max_states=self.args.budget_states,
                                          max_state_crossings=self.args.budget_state_crossings)
        return self.last_budget

    def report(self, kmap, body, budget=None, started=None):
        out = {
            "schema": REPORT_SCHEMA,
            "command": self.args.command,
            "input": {"source": self.args.input,
                      "digest": digest(kmap) if kmap.validate().valid else None},
        }
        if budget is not None:
            out["budget"] = budget.as_dict()
        if self.args.timing and started is not None:
            out["elapsed"] = round(time.time() - started, 3)
        out.update(body)
        return out


def _require_shortcut(kmap, command):
    if not isinstance(kmap, ShortcutMap) or isinstance(kmap, MultiShortcutMap):
        raise UsageError("{} needs a diagram with a single shortcut".format(command))


# --------------------
# Subcommands
# --------------------

def cmd_validate(ctx):
    kmap = ctx.read(ctx.args.input, check=False)
    report = kmap.validate()
    body = {"validation": report.as_dict()}
    return ctx.report(kmap, body), EXIT_OK if report.valid else EXIT_INVALID


def cmd_invariants(ctx):
    started = time.time()
    kmap = ctx.read(ctx.args.input)
    budget = ctx.budget(kmap)
    body = invariant_report(kmap, workers=ctx.args.workers, guard=budget.max_state_crossings)
    return ctx.report(kmap, body, started=started), EXIT_OK


def cmd_seq(ctx):
    kmap = ctx.read(ctx.args.input)
    _require_shortcut(kmap, "seq")
    body = {"seq": str(kmap.seq()), "height": kmap.height(),
            "algebraic_height": kmap.algebraic_height()}
    return ctx.report(kmap, body), EXIT_OK


def cmd_search(ctx):
    started = time.time()
    kmap = ctx.read(ctx.args.input)
    _require_shortcut(kmap, "search")
    budget = ctx.budget(kmap)
    result = explore(kmap, budget, debug=ctx.args.verbose)
    body = {"search": result.as_dict()}
    return ctx.report(kmap, body, budget, started), EXIT_PARTIAL if result.partial else EXIT_OK


def cmd_certify(ctx):
    started = time.time()
    kmap = ctx.read(ctx.args.input)
    if not isinstance(kmap, ShortcutMap):
        raise UsageError("certify needs a shortcut diagram")
    budget = ctx.budget(kmap)
    result = certify_heights(kmap, budget, debug=ctx.args.verbose, workers=ctx.args.workers)
    body = {"certify": result.as_dict()}
    status = EXIT_PARTIAL if result.search.partial and not result.exact else EXIT_OK
    return ctx.report(kmap, body, budget, started), status


def cmd_op(ctx):
    kmap = ctx.read(ctx.args.input)
    return involution(kmap, ctx.args.kind), EXIT_OK


def cmd_product(ctx):
    first = ctx.read(ctx.args.input)
    second = ctx.read(ctx.args.second)
    return product(first, second), EXIT_OK


def cmd_closure(ctx):
    kmap = ctx.read(ctx.args.input)
    _require_shortcut(kmap, "closure")
    return closure(kmap, ctx.args.mode), EXIT_OK


def cmd_lift(ctx):
    kmap = ctx.read(ctx.args.input)
    _require_shortcut(kmap, "lift")
    result = lift_cover(kmap, ctx.args.n, ctx.args.sheet)
    meta = {
        "n": result.n,
        "surviving": result.surviving,
        "stabilized": result.stabilized,
        "seqs": [str(result.seq(arc)) for arc in range(result.n)],
    }
    return result.lifted.copy(meta=meta), EXIT_OK


def cmd_fixtures(ctx):
    return {"schema": REPORT_SCHEMA, "command": "fixtures", "fixtures": fixture_names()}, EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "invariants": cmd_invariants,
    "seq": cmd_seq,
    "search": cmd_search,
    "certify": cmd_certify,
    "op": cmd_op,
    "product": cmd_product,
    "closure": cmd_closure,
    "lift": cmd_lift,
    "fixtures": cmd_fixtures,
}


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _non_negative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action="store_true", help="Verbose.")
    common.add_argument('-o', '--out', action="store", type=str, default=None, help="Write output to file.")
    common.add_argument('--config', action="store", type=str, default=None, help="JSON budget config file.")
    common.add_argument('--budget-crossings', action="store", type=_non_negative, default=None,
                        help="Most crossings a searched diagram may have.")
    common.add_argument('--budget-height', action="store", type=_non_negative, default=None,
                        help="Most shortcut intersections a searched diagram may have.")
    common.add_argument('--budget-states', action="store", type=_positive, default=None,
                        help="Most diagrams a search visits.")
    common.add_argument('--budget-state-crossings', action="store", type=_positive, default=None,
                        help="Most crossings a state sum is attempted on.")
    common.add_argument('--workers', action="store", type=_positive, default=1,
                        help="Processes for state sums.")
    common.add_argument('--timing', action="store_true", help="Add elapsed seconds to reports.")

    parser = argparse.ArgumentParser(prog="knotoid", description="Knotoid diagrams, invariants and heights")
    parser.add_argument('--version', action="version", version="%(prog)s {}".format(__version__))
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    for name, text in (("validate", "Check the map invariants of a diagram."),
                       ("invariants", "Report every invariant of a diagram."),
                       ("seq", "Sign sequence of a shortcut diagram."),
                       ("search", "Bounded search over move-equivalent diagrams."),
                       ("certify", "Certify signed heights.")):
        cmd = sub.add_parser(name, parents=[common], help=text)
        cmd.add_argument("input", help="Diagram file, - for stdin, or fixture:<name>.")

    cmd = sub.add_parser("op", parents=[common], help="Apply an involution.")
    cmd.add_argument('--kind', action="store", choices=INVOLUTIONS, required=True, help="Involution.")
    cmd.add_argument("input", help="Diagram file, - for stdin, or fixture:<name>.")

    cmd = sub.add_parser("product", parents=[common], help="Multiply two knotoid diagrams.")
    cmd.add_argument("input", help="First diagram.")
    cmd.add_argument("second", help="Second diagram.")

    cmd = sub.add_parser("closure", parents=[common], help="Close a shortcut diagram into a knot.")
    cmd.add_argument('--mode', action="store", choices=(OVER, UNDER), default=OVER, help="Closure mode.")
    cmd.add_argument("input", help="Diagram file, - for stdin, or fixture:<name>.")

    cmd = sub.add_parser("lift", parents=[common], help="Lift to a branched cover.")
    cmd.add_argument('--n', action="store", type=_positive, required=True, help="Cover degree.")
    cmd.add_argument('--sheet', action="store", type=_non_negative, default=0, help="Starting sheet.")
    cmd.add_argument("input", help="Diagram file, - for stdin, or fixture:<name>.")

    sub.add_parser("fixtures", parents=[common], help="List built-in fixtures.")
    return parser


def _emit(output, args, stdout):
    if isinstance(output, dict):
        text = json.dumps(output, sort_keys=True, indent=2)
    else:
        text = output.to_json(indent=2)
    if args.out:
        with open(args.out, "w") as fobj:
            fobj.write(text + "\n")
    else:
        stdout.write(text + "\n")


def _summary(output, status):
    if isinstance(output, dict):
        for key in ("seq", "index_polynomial", "validation"):
            if key in output:
                log.info("%s: %s", key, output[key])
    else:
        log.info("Diagram: %s", output)
    log.info("Exit status %s", status)


def run(argv=None, stdin=None, stdout=None, stderr=None):
    """ Run one command; returns the exit status """
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_USAGE

    ctx = _Context(args, stdin, stdout)
    try:
        output, status = COMMANDS[args.command](ctx)
    except UsageError as err:
        print("Error: {}".format(err), file=stderr)
        return EXIT_USAGE
    except KnotoidBudgetError as err:
        print("Error: {}".format(err), file=stderr)
        if ctx.kmap is not None:
            body = {"partial": True, "error": str(err)}
            _emit(ctx.report(ctx.kmap, body, ctx.last_budget), args, stdout)
        return EXIT_PARTIAL
    except (KnotoidGenericError, IOError) as err:
        print("Error: {}".format(err), file=stderr)
        return EXIT_INVALID
    _emit(output, args, stdout)
    if args.verbose:
        _summary(output, status)
    return status


def main(argv=None):
    args = sys.argv[1:] if argv is None else argv
    verbose = "-v" in args or "--verbose" in args
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING, stream=sys.stderr)
    sys.exit(run(args))


if __name__ == "__main__":
    main()
