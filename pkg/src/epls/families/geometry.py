"""
Affine spaces AG(n, q) as linear spaces on canonical labels.
"""
import logging

import numpy as np

from ..core.errors import ParameterError
from ..gf.field import field_make
from ..linspace.space import LinearSpace, validate
from ..safety.validator import ScaleValidator, enforce

logger = logging.getLogger(__name__)


def build_affine_geometry_lines(p: int, m: int, n: int) -> LinearSpace:
    """
    Points and 1-dimensional affine subspaces of GF(q)^n, q = p^m.

    The vector (x_0, ..., x_{n-1}) is the point sum(label(x_i) * q^i). Lines
    have q points and there are q^(n-1) (q^n - 1)/(q - 1) of them.

    Raises:
        ParameterError: if n < 2
        BoundExceededError: if q^n exceeds Config.AG_MAX_POINTS or the
            incidence bound
    """
    if n < 2:
        raise ParameterError(f"an affine geometry with lines needs n >= 2, got {n}")
    ctx = field_make(p, m)
    q = ctx.order
    enforce(ScaleValidator().validate_geometry(q, n))
    v = q ** n
    add = np.array([[ctx.add_labels(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    mul = np.array([[ctx.mul_labels(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    places = q ** np.arange(n, dtype=np.int64)
    coords = (np.arange(v, dtype=np.int64)[:, None] // places) % q

    lines = []
    for direction in coords[1:]:
        # one direction per subspace: last nonzero coordinate 1
        nonzero = np.flatnonzero(direction)
        if direction[nonzero[-1]] != 1:
            continue
        span = mul[np.arange(q)[:, None], direction[None, :]]
        images = add[coords[:, None, :], span[None, :, :]]
        labels = np.sort(images @ places, axis=1)
        lines.extend(map(tuple, np.unique(labels, axis=0).tolist()))
    logger.info("AG(%d, %d): %d points, %d lines", n, q, v, len(lines))
    return validate(v, lines)
