"""
Constructors for the concrete groups and seed spaces, in canonical labelings.
"""
from .affine import (AffineParams, affine_complements, build_affine_group, frobenius,
                     multiplication, translation)
from .gscript import build_gscript, gscript_point
from .psl2 import (build_psl2_dihedral_coset, find_dihedral_pair, is_fermat_prime,
                   projective_line_group)
from .diffset import (build_difference_set_space, check_difference_set, multipliers,
                      singer_difference_set)
from .geometry import build_affine_geometry_lines
from .orbit_union import (PRIMITIVE_25_1_SEEDS, build_orbit_union_space,
                          coset_crosspairs_space, primitive_25_1)
