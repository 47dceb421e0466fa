"""
Property (*), the space LS(G), transversality and the line stabilizers.
"""
from .property import has_property_star, has_property_star_naive
from .ls import build_ls, lambda_line
from .pairs import GroupSpacePair, check_line_block_law, is_line_transitive, is_transverse
from .stabilizers import LineStabilizerReport, line_stabilizer_report
from .question import QUESTION_FAMILIES, QuestionHit, question_search, rank_three_check
