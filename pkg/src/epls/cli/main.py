"""
Command-line entry point.
"""
import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from .. import __version__, configure_logging
from ..core.errors import EplsError
from ..core.report import jsonable
from ..refine.presets import PRESETS
from ..star.question import QUESTION_FAMILIES
from .commands import COMMANDS

logger = logging.getLogger(__name__)

PREDICATES = ['ep', 'star', 'transverse', 'lineblocks', 'three-halves', 'line-transitive',
              'rank', 'classify']
FAMILIES = ['affine', 'gscript', 'psl2', 'diffset', 'ag']


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help="Print the report as JSON.")
    common.add_argument('--verbose', action='store_true', help="Log at DEBUG level to stderr.")
    memory = argparse.ArgumentParser(add_help=False)
    memory.add_argument('--max-memory', type=int, default=None, metavar='N',
                        help="Bound on set-orbit sizes and refinement incidences.")

    parser = argparse.ArgumentParser(
        prog='epls', description="Extremely primitive groups and their linear spaces")
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest='command', required=True)

    construct = subparsers.add_parser('construct', parents=[common],
                                      help="Build a group or space of a family.")
    construct.add_argument('--family', choices=FAMILIES, required=True)
    for name in ('p', 'd', 't', 'e', 'q', 'n', 'mod'):
        construct.add_argument(f'--{name}', type=int, default=None)
    construct.add_argument('--set', default=None, help="Difference set, e.g. 0,1,3,9.")
    construct.add_argument('--out-group', default=None, metavar='PATH')
    construct.add_argument('--out-space', default=None, metavar='PATH')

    test = subparsers.add_parser('test', parents=[common], help="Run a predicate.")
    test.add_argument('--predicate', choices=PREDICATES, required=True)
    test.add_argument('--group', required=True, metavar='PATH')
    test.add_argument('--space', default=None, metavar='PATH')

    survey = subparsers.add_parser('survey', parents=[common],
                                   help="Compare the direct test with the arithmetic criterion.")
    survey.add_argument('--max-points', type=int, required=True)
    survey.add_argument('--jobs', type=int, default=1)
    survey.add_argument('--force', action='store_true', help="Allow surveys above the cap.")
    survey.add_argument('--out', default=None, metavar='PATH', help="JSONL output file.")

    ls = subparsers.add_parser('ls', parents=[common, memory],
                               help="Build LS(G) from a group file.")
    ls.add_argument('--group', required=True, metavar='PATH')
    ls.add_argument('--out', default=None, metavar='PATH')
    ls.add_argument('--stabilizers', action='store_true',
                    help="Append the stabilizer report of the line through 0.")

    for name, help_text in (('refine', "Refine a line-transitive space."),
                            ('roundtrip', "Extract the inner space and rebuild.")):
        sub = subparsers.add_parser(name, parents=[common, memory], help=help_text)
        sub.add_argument('--preset', choices=sorted(PRESETS), default=None)
        sub.add_argument('--group', default=None, metavar='PATH')
        sub.add_argument('--space', default=None, metavar='PATH')
        sub.add_argument('--line', default=None, help="Points of the line, e.g. 0,1,6,7.")
        sub.add_argument('--inner', default=None, metavar='PATH',
                         help="Inner space on 0..k-1, the i-th smallest line point being i.")
        if name == 'refine':
            sub.add_argument('--out', default=None, metavar='PATH')
        else:
            sub.add_argument('--refined', default=None, metavar='PATH')

    question = subparsers.add_parser('question', parents=[common],
                                     help="Search line-transitive non-transverse spaces.")
    question.add_argument('--max-points', type=int, required=True)
    question.add_argument('--max-orbits', type=int, default=1)
    question.add_argument('--families', nargs='+', choices=QUESTION_FAMILIES,
                          default=list(QUESTION_FAMILIES))
    return parser


def render(payload: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(jsonable(payload), indent=2, sort_keys=True)
    rows = []
    for key, value in payload.items():
        value = jsonable(value)
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        rows.append(f"{key}: {value}")
    return '\n'.join(rows)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging('DEBUG' if args.verbose else None)
    try:
        payload, code = COMMANDS[args.command](args)
    except EplsError as exc:
        logger.error("%s failed: %s", args.command, exc)
        payload, code = {'error': str(exc)}, 2
    except OSError as exc:
        payload, code = {'error': str(exc)}, 2
    # survey without --out streams JSONL on stdout
    stream = sys.stderr if args.command == 'survey' and args.out is None else sys.stdout
    print(render(payload, args.json), file=stream)
    return code


if __name__ == '__main__':
    raise SystemExit(main())
