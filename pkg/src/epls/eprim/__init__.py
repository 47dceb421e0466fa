"""
Extreme primitivity, the affine classification predicates and the survey.
"""
from .predicates import (affine_extremely_primitive, is_extremely_primitive,
                         is_three_halves_transitive, orbit_condition_predicate,
                         orbit_condition_equivalence, theorem1_predicate)
from .survey import SurveyRecord, SurveyReport, survey, survey_instance, survey_instances, write_jsonl
from .classify import Classification, classify_pair
