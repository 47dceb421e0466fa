"""
Linear spaces as values: validation, parameters, refinement and automorphisms.
"""
from .space import (LinearSpace, SpaceParams, group_preserves, is_automorphism, is_nontrivial,
                    is_refinement, is_regular, pairs_space, parameters, single_line_space,
                    validate)
from .io import format_space, parse_space, read_space, write_space
