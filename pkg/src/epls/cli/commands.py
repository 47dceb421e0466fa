"""
Handlers for the epls sub-commands.

Each handler takes the parsed arguments and returns (payload, exit code):
0 when the checked statement holds, 1 when it fails, 2 on errors.
"""
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from ..core.errors import ParameterError
from ..core.report import Verdict, verdict_record
from ..eprim.classify import UNCLASSIFIED, classify_pair
from ..eprim.predicates import is_extremely_primitive, is_three_halves_transitive
from ..eprim.survey import survey, write_jsonl
from ..families.affine import AffineParams, build_affine_group
from ..families.diffset import build_difference_set_space
from ..families.geometry import build_affine_geometry_lines
from ..families.gscript import build_gscript
from ..families.psl2 import build_psl2_dihedral_coset
from ..linspace.io import read_space, write_space
from ..linspace.space import LinearSpace, parameters
from ..perm.group import PermGroup
from ..perm.io import read_group, write_group
from ..refine.construction import construct_refinement, roundtrip_check
from ..refine.presets import PRESETS
from ..refine.report import refinement_report
from ..star.ls import build_ls
from ..star.pairs import GroupSpacePair, check_line_block_law, is_line_transitive, is_transverse
from ..star.property import has_property_star
from ..star.question import question_search, rank_three_check
from ..star.stabilizers import line_stabilizer_report

logger = logging.getLogger(__name__)

Result = Tuple[dict, int]


def parse_points(text: str) -> List[int]:
    """'0,1,3,9' -> [0, 1, 3, 9]"""
    try:
        return [int(x) for x in text.replace(' ', '').split(',') if x]
    except ValueError:
        raise ParameterError(f"expected comma-separated integers, got {text!r}")


def _need(args, family: str, *names: str):
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name) is None]
    if missing:
        raise ParameterError(f"family {family} needs {', '.join(missing)}")


def _space_block(space: LinearSpace) -> dict:
    return {'parameters': parameters(space).to_dict(),
            'line_sizes': {str(k): n for k, n in sorted(space.line_sizes().items())}}


def construct(args) -> Result:
    """Build one family member and write its group and space files."""
    group: Optional[PermGroup] = None
    space: Optional[LinearSpace] = None
    payload: Dict[str, object] = {'family': args.family}
    if args.family == 'affine':
        _need(args, 'affine', 'p', 'd', 't', 'e')
        params = AffineParams(args.p, args.d, args.t, args.e)
        group = build_affine_group(params)
        payload['params'] = params.to_dict()
    elif args.family == 'gscript':
        _need(args, 'gscript', 'p')
        group = build_gscript(args.p, args.d or 1)
        payload['params'] = {'p': args.p, 'd': args.d or 1}
    elif args.family == 'psl2':
        _need(args, 'psl2', 'q')
        group = build_psl2_dihedral_coset(args.q)
        payload['params'] = {'q': args.q}
    elif args.family == 'diffset':
        _need(args, 'diffset', 'mod', 'set')
        space, group = build_difference_set_space(args.mod, parse_points(args.set))
        payload['params'] = {'mod': args.mod, 'set': parse_points(args.set)}
    elif args.family == 'ag':
        _need(args, 'ag', 'p', 'n')
        space = build_affine_geometry_lines(args.p, args.d or 1, args.n)
        payload['params'] = {'p': args.p, 'd': args.d or 1, 'n': args.n}
    else:
        raise ParameterError(f"unknown family {args.family}")

    if group is not None:
        payload['degree'] = group.degree
        payload['order'] = group.order()
        if args.out_group:
            write_group(args.out_group, group)
    if space is not None:
        payload.update(_space_block(space))
        if args.out_space:
            write_space(args.out_space, space)
    return payload, 0


def _pair(group: PermGroup, space: Optional[LinearSpace], predicate: str) -> GroupSpacePair:
    if space is None:
        raise ParameterError(f"predicate {predicate} needs --space")
    return GroupSpacePair(space, group)


def run_test(args) -> Result:
    """Run one predicate on a group file and, when needed, a space file."""
    group = read_group(args.group)
    space = read_space(args.space) if args.space else None
    predicate = args.predicate
    if predicate == 'ep':
        verdict = is_extremely_primitive(group)
    elif predicate == 'star':
        verdict = has_property_star(group)
    elif predicate == 'three-halves':
        verdict = Verdict(is_three_halves_transitive(group))
    elif predicate == 'transverse':
        verdict = is_transverse(_pair(group, space, predicate))
    elif predicate == 'lineblocks':
        verdict = check_line_block_law(_pair(group, space, predicate))
    elif predicate == 'line-transitive':
        verdict = Verdict(is_line_transitive(_pair(group, space, predicate)))
    elif predicate == 'rank':
        verdict = rank_three_check(group, space)
    elif predicate == 'classify':
        if space is None:
            raise ParameterError("predicate classify needs --space")
        result = classify_pair(space, group)
        verdict = Verdict(result.case != UNCLASSIFIED, result.case, result)
    else:
        raise ParameterError(f"unknown predicate {predicate}")
    return verdict_record(predicate, Path(args.group).stem, verdict), 0 if verdict else 1


def run_survey(args) -> Result:
    """JSONL records to --out or stdout; nonzero exit on any disagreement."""
    report = survey(args.max_points, jobs=args.jobs, force=args.force)
    if args.out:
        with open(args.out, 'w') as stream:
            write_jsonl(report.records, stream)
    else:
        write_jsonl(report.records, sys.stdout)
    summary = report.summary()
    summary['disagreeing'] = [str(r.params) for r in report.disagreements()]
    return {'summary': summary}, 1 if report.disagreements() else 0


def ls(args) -> Result:
    """LS(G) of a group file, with the line stabilizer report on request."""
    group = read_group(args.group)
    space = build_ls(group, limit=args.max_memory)
    if args.out:
        write_space(args.out, space)
    payload = _space_block(space)
    if args.stabilizers:
        pair = GroupSpacePair(space, group)
        transverse = bool(is_transverse(pair))
        v = next(orb[0] for orb in group.point_stabilizer(0).orbits() if orb != (0,))
        payload['transverse'] = transverse
        payload['line_transitive'] = is_line_transitive(pair)
        payload['stabilizers'] = line_stabilizer_report(group, 0, v, transverse).to_dict()
    return payload, 0


def _refinement_inputs(args):
    if args.preset:
        return PRESETS[args.preset]()
    _need(args, 'file input', 'group', 'space', 'line', 'inner')
    pair = GroupSpacePair(read_space(args.space), read_group(args.group))
    return pair, tuple(parse_points(args.line)), read_space(args.inner)


def refine(args) -> Result:
    """Construct the refinement and report on it."""
    pair, ell, inner = _refinement_inputs(args)
    refined = construct_refinement(pair, ell, inner, limit=args.max_memory,
                                   max_incidences=args.max_memory)
    if args.out:
        write_space(args.out, refined)
    payload = refinement_report(refined, pair).to_dict()
    payload['line'] = list(ell)
    return payload, 0


def roundtrip(args) -> Result:
    """Extract the inner space on the line and rebuild; PASS iff the spaces agree."""
    pair, ell, inner = _refinement_inputs(args)
    if args.refined:
        refined = read_space(args.refined)
    else:
        refined = construct_refinement(pair, ell, inner, limit=args.max_memory,
                                       max_incidences=args.max_memory)
    ok = roundtrip_check(refined, pair, ell)
    return {'roundtrip': 'PASS' if ok else 'FAIL', 'line': list(ell)}, 0 if ok else 1


def question(args) -> Result:
    """Exit 1 when a space bearing on the question is not the plane of order 3."""
    hits = question_search(args.max_points, max_orbits=args.max_orbits, families=args.families)
    others = [hit for hit in hits if hit.bears_on_question and not hit.is_order_three_plane]
    if others:
        logger.warning("Found %d spaces other than the plane of order 3", len(others))
    return {'max_points': args.max_points, 'hits': [hit.to_dict() for hit in hits],
            'bearing_on_question': sum(hit.bears_on_question for hit in hits),
            'other_than_order_three_plane': len(others)}, 1 if others else 0


COMMANDS = {
    'construct': construct,
    'test': run_test,
    'survey': run_survey,
    'ls': ls,
    'refine': refine,
    'roundtrip': roundtrip,
    'question': question,
}
