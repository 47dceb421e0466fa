"""
Refinements of line-transitive linear spaces.
"""
from .construction import (check_refinement_scale, construct_refinement, extract_inner_space,
                           line_action, refinement_incidences, roundtrip_check)
from .report import RefinementReport, refinement_report
from .presets import PRESETS, ag_plane_preset, crosspairs_preset
