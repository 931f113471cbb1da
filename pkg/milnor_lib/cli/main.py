"""
Command line front end.

    milnor-links lk --braid "1 1" --strands 2
    milnor-links milnor --pd borromean.pd -k 3 --json
    milnor-links moves --pd hopf.pd --move CC:1
    milnor-links oracle --pd whitehead.pd -I 1122

Exit codes: 0 success, 1 usage error, 2 parse or validation error,
3 resource guard refusal.
"""

import argparse
import logging
import random
import sys

from ..core.braid import parse_braid
from ..core.config import Config
from ..core.errors import (DiagramError, InvariantError, MoveError, OracleBudgetError,
                           ResourceGuardError)
from ..core.moves import apply_move, format_move_spec, parse_move_spec, random_isotopy
from ..core.pd import read_pd_file
from ..invariants.linking import linking_matrix
from ..invariants.milnor import MilnorEngine, milnor_table
from ..invariants.oracle import oracle_mu
from .formatting import format_matrix, format_sequence, format_table, matrix_to_dict, to_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_GUARD = 3

# --random given without a count
RANDOM_FROM_CONFIG = object()


class UsageError(Exception):
    """Bad command line arguments."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def parse_sequence(text):
    """Read an index sequence: '1122' for one-digit indices, '1,12,3' otherwise."""
    text = text.strip()
    try:
        if ',' in text or ' ' in text:
            return tuple(int(t) for t in text.replace(',', ' ').split())
        return tuple(int(c) for c in text)
    except ValueError:
        raise UsageError(f"Sequence {text!r} is not a list of component indices") from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group(required=True)
    source.add_argument('--pd', metavar='PATH', help="File with a PD code")
    source.add_argument('--braid', metavar='TEXT', help="Braid word, e.g. \"1 -2 1\"")
    common.add_argument('--strands', type=int, metavar='N', help="Strand count for --braid")
    common.add_argument('--json', action='store_true', help="Machine readable output")
    common.add_argument('--config', metavar='PATH', help="JSON configuration file")
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help="More logging (-v info, -vv debug)")

    parser = _Parser(prog='milnor-links',
                     description="Linking numbers and Milnor invariants of link diagrams")
    commands = parser.add_subparsers(dest='command', metavar='COMMAND', parser_class=_Parser)
    commands.required = True

    commands.add_parser('lk', parents=[common], help="Linking matrix")

    milnor = commands.add_parser('milnor', parents=[common], help="Milnor invariant table")
    milnor.add_argument('-k', type=int, default=3, help="Maximum sequence length (default 3)")
    milnor.add_argument('--force', action='store_true', help="Ignore the resource guard")

    moves = commands.add_parser('moves', parents=[common], help="Apply local moves")
    moves.add_argument('--move', action='append', default=[], metavar='SPEC',
                       help="Move such as R1:3:+, R2:3,7, R3:2,5,9, CC:4, SCC:4, DELTA:1,2,3")
    moves.add_argument('--random', type=int, nargs='?', const=RANDOM_FROM_CONFIG, metavar='N',
                       help="Append N random Reidemeister moves (default: moves.random_length)")
    moves.add_argument('--seed', type=int, help="Seed for --random")
    moves.add_argument('-k', type=int, default=3, help="Length of the invariant summary")
    moves.add_argument('--force', action='store_true', help="Ignore the resource guard")

    oracle = commands.add_parser('oracle', parents=[common], help="Cross-check mu with the oracle")
    oracle.add_argument('-I', dest='sequence', required=True, type=parse_sequence,
                        help="Index sequence, e.g. 123 or 1,2,3")
    return parser


def load_diagram(args):
    if args.pd is not None:
        return read_pd_file(args.pd)[0]
    if args.strands is None:
        raise UsageError("--braid needs --strands")
    return parse_braid(args.braid, args.strands)


def cmd_lk(args, config, diagram):
    matrix = linking_matrix(diagram)
    if args.json:
        print(to_json(matrix_to_dict(matrix), config.output['json_indent']))
    else:
        print(format_matrix(matrix))
    return EXIT_OK


def cmd_milnor(args, config, diagram):
    if args.k < 2:
        raise UsageError(f"-k must be at least 2, got {args.k}")
    table = milnor_table(diagram, args.k, config, force=args.force)
    if args.json:
        print(to_json(table.to_dict(), config.output['json_indent']))
    else:
        print(format_table(table))
    return EXIT_OK


def _summary(diagram, k, config, force):
    table = milnor_table(diagram, k, config, force=force)
    return {"linking_matrix": matrix_to_dict(linking_matrix(diagram)),
            "milnor": table.to_dict()}, table


def cmd_moves(args, config, diagram):
    if args.k < 2:
        raise UsageError(f"-k must be at least 2, got {args.k}")
    specs = [parse_move_spec(text) for text in args.move]
    before, before_table = _summary(diagram, args.k, config, args.force)

    applied = []
    for spec in specs:
        diagram = apply_move(diagram, spec)
        applied.append(format_move_spec(spec))
    if args.random is not None:
        length = config.moves['random_length'] if args.random is RANDOM_FROM_CONFIG else args.random
        if length < 0:
            raise UsageError(f"--random needs a non-negative count, got {length}")
        rng = random.Random(args.seed)
        diagram, extra = random_isotopy(diagram, length, rng, config.moves['kinds'])
        applied.extend(format_move_spec(s) for s in extra)
    logger.info("Applied %d moves", len(applied))

    after, after_table = _summary(diagram, args.k, config, args.force)
    # mu itself may move by multiples of Delta; compare residues
    unchanged = before_table == after_table
    if args.json:
        print(to_json({"moves": applied, "pd": diagram.to_pd(), "before": before,
                       "after": after, "milnor_unchanged": unchanged},
                      config.output['json_indent']))
    else:
        print(f"Moves: {', '.join(applied) if applied else 'none'}")
        print(diagram.to_pd())
        for label, summary in (("before", before), ("after", after)):
            print(f"Linking matrix {label}: {summary['linking_matrix']['linking_matrix']}")
        print(f"Milnor table up to length {args.k}: {'unchanged' if unchanged else 'CHANGED'}")
        if not unchanged:
            print(format_table(after_table, nonzero_only=True))
    return EXIT_OK


def cmd_oracle(args, config, diagram):
    sequence = args.sequence
    main_value = MilnorEngine(diagram, config).mu(sequence)
    oracle_value = oracle_mu(diagram, sequence, config)
    match = main_value == oracle_value
    if not match:
        logger.error("Oracle disagrees on %s: main=%d oracle=%d", sequence, main_value, oracle_value)
    if args.json:
        print(to_json({"I": list(sequence), "main": main_value, "oracle": oracle_value,
                       "match": match}, config.output['json_indent']))
    else:
        print(f"mu({format_sequence(sequence)}): main={main_value} oracle={oracle_value} "
              f"{'MATCH' if match else 'MISMATCH'}")
    return EXIT_OK


COMMANDS = {'lk': cmd_lk, 'milnor': cmd_milnor, 'moves': cmd_moves, 'oracle': cmd_oracle}


def main(argv=None):
    """
    Run the command line interface.

    Args:
        argv (list, optional): Arguments, defaults to sys.argv[1:]

    Returns:
        int: Exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        return e.code or EXIT_OK

    logging.basicConfig(level=[logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)],
                        format='%(levelname)s %(name)s: %(message)s')
    config = Config()
    if args.config and not config.load_from_file(args.config):
        print(f"Could not load config file {args.config}", file=sys.stderr)
        return EXIT_USAGE

    try:
        diagram = load_diagram(args)
        logger.info("Loaded %r", diagram)
        return COMMANDS[args.command](args, config, diagram)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except ResourceGuardError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_GUARD
    except (DiagramError, MoveError, InvariantError, OracleBudgetError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == '__main__':
    sys.exit(main())
