"""
Brute-force survey of the soluble affine groups against the arithmetic
classification.
"""
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, List, Optional, TextIO, Tuple

from ..core.report import jsonable
from ..families.affine import AffineParams, build_affine_group
from ..gf.numtheory import divisors, prime_powers_up_to
from ..perm.blocks import rank_and_subdegrees
from ..safety.validator import ScaleValidator, enforce
from .predicates import (is_extremely_primitive, is_three_halves_transitive,
                         orbit_condition_equivalence, theorem1_predicate)

logger = logging.getLogger(__name__)


@dataclass
class SurveyRecord:
    """One surveyed (p, d, t, e)."""
    p: int
    d: int
    t: int
    e: int
    order: int
    ep_direct: bool
    ep_formula: bool
    reason: str
    subdegrees: Tuple[int, ...]
    three_halves: bool
    orbit_conditions: dict = field(default_factory=dict)
    orbit_conditions_agree: bool = True

    @property
    def params(self) -> AffineParams:
        return AffineParams(self.p, self.d, self.t, self.e)

    @property
    def agree(self) -> bool:
        return self.ep_direct == self.ep_formula

    def to_dict(self) -> dict:
        record = asdict(self)
        record['subdegrees'] = list(self.subdegrees)
        record['agree'] = self.agree
        return record


def survey_instances(max_points: int) -> List[AffineParams]:
    """Every (p, d, t, e) with p^d <= max_points, t | p^d - 1 and e | d, sorted."""
    instances = []
    for p, d in prime_powers_up_to(max_points):
        for t in divisors(p ** d - 1):
            for e in divisors(d):
                instances.append(AffineParams(p, d, t, e))
    return sorted(instances, key=lambda a: (a.p, a.d, a.t, a.e))


def survey_instance(params: AffineParams) -> SurveyRecord:
    group = build_affine_group(params)
    verdict = is_extremely_primitive(group)
    subdegrees = rank_and_subdegrees(group)
    prop = orbit_condition_equivalence(params)
    record = SurveyRecord(
        p=params.p, d=params.d, t=params.t, e=params.e,
        order=group.order(),
        ep_direct=verdict.holds,
        ep_formula=theorem1_predicate(params),
        reason=verdict.reason,
        subdegrees=subdegrees,
        three_halves=is_three_halves_transitive(group),
        orbit_conditions=prop.witness,
        orbit_conditions_agree=prop.holds,
    )
    if not record.agree:
        logger.error("Disagreement at %s: direct %s, formula %s",
                     params, record.ep_direct, record.ep_formula)
    return record


@dataclass
class SurveyReport:
    max_points: int
    records: List[SurveyRecord]

    def disagreements(self) -> List[SurveyRecord]:
        return [r for r in self.records if not r.agree or not r.orbit_conditions_agree]

    def extremely_primitive(self) -> List[SurveyRecord]:
        return [r for r in self.records if r.ep_direct]

    def invariant_violations(self) -> List[str]:
        """
        Structural facts every extremely primitive instance should satisfy:
        3/2-transitivity, and p^d - 1 = t(p^(d/e) - 1) whenever e >= 2.
        """
        problems = []
        for r in self.extremely_primitive():
            if not r.three_halves:
                problems.append(f"{r.params} is not 3/2-transitive")
            if r.e >= 2 and r.p ** r.d - 1 != r.t * (r.p ** (r.d // r.e) - 1):
                problems.append(f"{r.params} breaks p^d - 1 = t(p^(d/e) - 1)")
        return problems

    def summary(self) -> dict:
        return {
            'max_points': self.max_points,
            'instances': len(self.records),
            'extremely_primitive': len(self.extremely_primitive()),
            'disagreements': len(self.disagreements()),
            'invariant_violations': self.invariant_violations(),
        }


def survey(max_points: int, jobs: int = 1, force: bool = False) -> SurveyReport:
    """
    Survey every instance up to max_points points.

    Instances are independent; with jobs > 1 they run in worker processes and
    come back in (p, d, t, e) order.

    Raises:
        BoundExceededError: if max_points exceeds Config.SURVEY_MAX_POINTS without force
    """
    enforce(ScaleValidator().validate_survey(max_points, force), bound=max_points)
    instances = survey_instances(max_points)
    logger.info("Surveying %d instances up to %d points", len(instances), max_points)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(survey_instance, instances, chunksize=8))
    else:
        records = [survey_instance(params) for params in instances]
    report = SurveyReport(max_points, records)
    logger.info("Survey done: %s", report.summary())
    return report


def write_jsonl(records: Iterable[SurveyRecord], stream: TextIO):
    for record in records:
        stream.write(json.dumps(jsonable(record.to_dict()), sort_keys=True) + '\n')


def records_for(report: SurveyReport, d: Optional[int] = None,
                min_e: int = 1) -> List[SurveyRecord]:
    """Records filtered by field degree and least e."""
    return [r for r in report.records if (d is None or r.d == d) and r.e >= min_e]
