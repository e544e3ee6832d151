"""
Command-line front end.

Every command prints one structured report (orjson, sorted keys) on standard
output; `--pretty` adds pandas tables after it. Logs go to standard error.
"""
import argparse
import logging
import sys
from dataclasses import dataclass

import orjson

from algebra_scripts.critical import (
    IDEAL,
    MODES,
    QUOTIENT,
    build_canonical,
    ideal_direct_sum,
    parse_spec,
    scaffold,
    stanley_decomposition,
    verify_partition,
)
from algebra_scripts.errors import AlgebraError, ParseError
from algebra_scripts.hilbert import hilbert_numerator_inclusion_exclusion, hilbert_series_numerator
from algebra_scripts.homological import betti_numbers, stanley_check, stanley_depth_witness
from algebra_scripts.lex import is_critical, is_lexsegment, is_universal_lexsegment, lex_ideal_of
from algebra_scripts.monomials import (
    check_exponent_cap,
    ideal_from_record,
    ideal_record,
    parse_ideal,
    relabel,
)
from algebra_scripts.settings import DEFAULT_SETTINGS
from algebra_scripts.stanleyize import stanleyize
from report_scripts.plots import write_hilbert_figure
from report_scripts.serialize import build_report, dumps
from report_scripts.sweep import SweepProcessor, save_frames, summarize
from report_scripts.tables import (
    betti_frame,
    decomposition_frame,
    hilbert_frame,
    ideal_frame,
    partition_frame,
    render,
)

LOG_FORMAT = '%(asctime)s %(name)s %(levelname)s %(message)s'
LOGGER = logging.getLogger("main")

CRITICAL_ACTIONS = ("build", "decompose", "verify")


@dataclass
class Outcome:
    """Exit code, the structured report and the optional rendered tables."""
    exit_code: int
    report: dict
    tables: str = None


class _ArgumentParser(argparse.ArgumentParser):
    """Turns usage errors into ParseError so they share exit code 1."""

    def error(self, message):
        raise ParseError(message)


def build_parser():
    common = _ArgumentParser(add_help=False)
    common.add_argument("--degree-ceiling", type=int, help="last degree the lex construction may reach (default 64)")
    common.add_argument("--prime", "--char", dest="prime", type=int,
                        help="characteristic of the field for Koszul ranks (default 32003)")
    common.add_argument("--node-budget", type=int, help="intervals one Stanley depth search may try")
    common.add_argument("--poset-cap", type=int, help="largest characteristic poset searched")
    common.add_argument("--lcm-cap", type=int, help="largest lcm lattice scanned")
    common.add_argument("--exponent-cap", type=int, help="largest exponent accepted on input (default 64)")
    common.add_argument("--pretty", action="store_true", help="print human tables after the report")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO logs, -vv for DEBUG")

    parser = _ArgumentParser(prog="main.py", description="Stanley depth, depth and lex ideals of monomial ideals.")
    commands = parser.add_subparsers(dest="command", required=True)

    def ideal_command(name, help_text):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("ideal", nargs="?", help='inline ideal "n=3; x1*x2, x3^2" or a JSON record')
        sub.add_argument("-i", "--input", metavar="filename", help="read the ideal from a file instead")
        return sub

    hilbert = ideal_command("hilbert", "Hilbert function values and series numerator of S/I")
    hilbert.add_argument("--degree", type=int, help="last degree listed (default deg N + 2)")
    hilbert.add_argument("--plot", metavar="filename", help="write an HTML figure of H(d) and its growth bound")
    ideal_command("lex", "the lex ideal with the Hilbert function of S/I")
    ideal_command("is-critical", "whether I^lex is universal lexsegment")
    sdepth = ideal_command("sdepth", "Stanley depth from the characteristic poset")
    sdepth.add_argument("--mode", choices=MODES, default=QUOTIENT)
    ideal_command("depth", "depth of S/I and of I over GF(p)")
    ideal_command("betti", "graded Betti numbers of I over GF(p)")
    ideal_command("stanleyize", "Stanley ideal with the depth and Hilbert function of a non-critical I")
    ideal_command("check", "Stanley's inequality for S/I and for I")

    critical = commands.add_parser("critical", parents=[common], help="canonical critical ideals")
    critical.add_argument("action", choices=CRITICAL_ACTIONS)
    critical.add_argument("--spec", required=True, help='"n=3; m1=x2; m2=x3"')
    critical.add_argument("--verify", action="store_true", help="check the decomposition is a partition")
    critical.add_argument("--permutation", help="1-based images of x1..xn, e.g. 2,1,3 (build only)")

    sweep = commands.add_parser("sweep", parents=[common], help="run the batch checks over generated families")
    sweep.add_argument("--max-n", type=int, default=3, help="largest n of the canonical family and Macaulay oracle")
    sweep.add_argument("--count", type=int, default=200, help="size of the random population")
    sweep.add_argument("--seed", type=int, default=0)
    sweep.add_argument("-o", "--output", metavar="filename", help="write frames as <stem>_<sweep>.csv or .parquet")
    return parser


def configure_logging(verbosity):
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def settings_from(args):
    return DEFAULT_SETTINGS.with_overrides(
        degree_ceiling=args.degree_ceiling,
        prime=args.prime,
        node_budget=args.node_budget,
        poset_cap=args.poset_cap,
        lcm_cap=args.lcm_cap,
        exponent_cap=args.exponent_cap,
    )


def read_ideal(args, settings):
    """Inline text, a file, or a JSON record ({"variables", "generators"})."""
    if args.input is not None:
        try:
            with open(args.input, 'r', encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            raise ParseError(f"Cannot read ideal from '{args.input}': {e.strerror}") from e
    elif args.ideal is not None:
        text = args.ideal
    else:
        raise ParseError("No ideal given: pass it inline or with --input.")
    if text.lstrip().startswith("{"):
        try:
            ideal = ideal_from_record(orjson.loads(text))
        except orjson.JSONDecodeError as e:
            raise ParseError(f"Invalid JSON ideal record: {e}") from e
    else:
        ideal = parse_ideal(text)
    check_exponent_cap(ideal, settings.exponent_cap)
    return ideal


def parse_permutation(text):
    try:
        return [int(p) for p in text.split(",")]
    except ValueError as e:
        raise ParseError(f"Permutation must be comma-separated integers, got '{text}'.") from e


def run_hilbert(args, settings):
    ideal = read_ideal(args, settings)
    hilbert = hilbert_series_numerator(ideal)
    last = hilbert.numerator_degree + 2 if args.degree is None else args.degree
    if last < 0:
        raise ParseError(f"--degree must be non-negative, got {last}.")
    result = {"ideal": ideal_record(ideal), "hilbert": hilbert.as_record(last)}
    if len(ideal) <= settings.inclusion_exclusion_limit:
        result["inclusion_exclusion_agrees"] = (
            hilbert_numerator_inclusion_exclusion(ideal, settings).numerator == hilbert.numerator)
    if args.plot is not None:
        write_hilbert_figure(hilbert.values(last), ideal.n, str(ideal), args.plot)
        result["plot"] = args.plot
    return result, {"generators": ideal_frame(ideal), "hilbert function": hilbert_frame(hilbert, last)}


def run_lex(args, settings):
    ideal = read_ideal(args, settings)
    lex = lex_ideal_of(ideal, settings)
    result = {
        "ideal": ideal_record(ideal),
        "lex": lex.as_record(),
        "lexsegment": is_lexsegment(lex.ideal),
        "universal_lexsegment": is_universal_lexsegment(lex.ideal),
    }
    return result, {"lex generators": ideal_frame(lex.ideal)}


def run_is_critical(args, settings):
    ideal = read_ideal(args, settings)
    lex = lex_ideal_of(ideal, settings)
    result = {"ideal": ideal_record(ideal), "critical": is_critical(ideal, settings), "lex": ideal_record(lex.ideal)}
    return result, {"lex generators": ideal_frame(lex.ideal)}


def run_sdepth(args, settings):
    ideal = read_ideal(args, settings)
    witness = stanley_depth_witness(ideal, args.mode, settings)
    result = {
        "ideal": ideal_record(ideal),
        "mode": args.mode,
        "sdepth": witness.value,
        # Stanley depth of a monomial ideal does not depend on the field
        "p-independent": True,
        "partition": witness.as_record(),
    }
    return result, {"interval partition": partition_frame(witness)}


def run_depth(args, settings):
    ideal = read_ideal(args, settings)
    table = betti_numbers(ideal, settings=settings)
    depth = ideal.n - table.projective_dimension
    result = {
        "ideal": ideal_record(ideal),
        "prime": settings.prime,
        "projective_dimension": table.projective_dimension,
        "depth_quotient": depth,
        "depth_ideal": depth + 1,
    }
    return result, {"betti numbers of I": betti_frame(table)}


def run_betti(args, settings):
    ideal = read_ideal(args, settings)
    table = betti_numbers(ideal, settings=settings)
    return {"ideal": ideal_record(ideal), "betti": table.as_record()}, {"betti numbers of I": betti_frame(table)}


def run_stanleyize(args, settings):
    ideal = read_ideal(args, settings)
    certificate = stanleyize(ideal, settings=settings)
    result = certificate.as_record()
    result["verified"] = certificate.verified
    return result, {"stanley ideal": ideal_frame(certificate.stanley_ideal), "J^lex": ideal_frame(certificate.j_lex)}


def run_check(args, settings):
    ideal = read_ideal(args, settings)
    return {"ideal": ideal_record(ideal), "check": stanley_check(ideal, settings=settings).as_record()}, {}


def run_critical(args, settings):
    spec = parse_spec(args.spec)
    ideal = build_canonical(spec)
    check_exponent_cap(ideal, settings.exponent_cap)
    result = {"spec": str(spec), "t": spec.t, "ideal": ideal_record(ideal)}
    frames = {"generators": ideal_frame(ideal)}
    if args.action == "build":
        if args.permutation is not None:
            relabelled = relabel(ideal, parse_permutation(args.permutation))
            result["relabelled"] = ideal_record(relabelled)
            frames["relabelled generators"] = ideal_frame(relabelled)
        return result, frames

    if args.action == "decompose":
        decomposition = stanley_decomposition(spec)
        result["decomposition"] = decomposition.as_record()
        result["scaffold"] = scaffold(spec).as_record()
        result["ideal_sdepth_lower_bound"] = ideal_direct_sum(spec).sdepth
        if args.verify:
            result["verification"] = verify_partition(decomposition, ideal).as_record()
        frames["stanley decomposition of S/I"] = decomposition_frame(decomposition)
        return result, frames

    direct_sum = ideal_direct_sum(spec)
    result["decomposition"] = direct_sum.as_record()
    result["verification"] = verify_partition(direct_sum, ideal).as_record()
    frames["stanley decomposition of I"] = decomposition_frame(direct_sum)
    return result, frames


def run_sweep(args, settings):
    processor = SweepProcessor(settings)
    frames = processor.process_all(max_n=args.max_n, count=args.count, seed=args.seed)
    result = {"max_n": args.max_n, "count": args.count, "seed": args.seed, "summary": summarize(frames)}
    if args.output is not None:
        result["outputs"] = save_frames(frames, args.output)
    return result, {}


def dispatch(args, settings):
    """Routes the parsed command to its handler."""
    if args.command == "hilbert":
        return run_hilbert(args, settings)
    elif args.command == "lex":
        return run_lex(args, settings)
    elif args.command == "is-critical":
        return run_is_critical(args, settings)
    elif args.command == "critical":
        return run_critical(args, settings)
    elif args.command == "sdepth":
        return run_sdepth(args, settings)
    elif args.command == "depth":
        return run_depth(args, settings)
    elif args.command == "betti":
        return run_betti(args, settings)
    elif args.command == "stanleyize":
        return run_stanleyize(args, settings)
    elif args.command == "check":
        return run_check(args, settings)
    return run_sweep(args, settings)


def run(argv):
    """
    Parses argv, runs one command and builds its report.

    Args:
        argv (list[str]): Arguments without the program name.

    Returns:
        Outcome: Exit code 0 with the result, or the error's exit code with an error report.
    """
    command, settings = None, DEFAULT_SETTINGS
    try:
        args = build_parser().parse_args(argv)
        command = args.command
        settings = settings_from(args)
        result, frames = dispatch(args, settings)
    except AlgebraError as e:
        LOGGER.error("%s: %s", type(e).__name__, e)
        error = {"error": {"type": type(e).__name__, "message": str(e), "exit_code": e.exit_code}}
        return Outcome(e.exit_code, build_report(command, error, settings))
    tables = render(frames) if args.pretty and frames else None
    return Outcome(0, build_report(command, result, settings), tables)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    verbosity = sum(2 if a == "-vv" else 1 for a in argv if a in ("-v", "-vv", "--verbose"))
    configure_logging(verbosity)
    outcome = run(argv)
    sys.stdout.write(dumps(outcome.report).decode("utf-8") + "\n")
    if outcome.tables:
        sys.stdout.write(outcome.tables + "\n")
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
