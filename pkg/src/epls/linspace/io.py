"""
Space file format.

    space-file := "v" SP n NEWLINE { point { SP point } NEWLINE }

Points are 0-based; each line of the space is written sorted, lines in
lexicographic order, with a final newline. Parsing validates the space.
"""
from pathlib import Path
from typing import Union

from ..core.errors import FormatError
from .space import LinearSpace, validate


def format_space(space: LinearSpace) -> str:
    rows = [f"v {space.v}"]
    rows.extend(' '.join(map(str, line)) for line in space.lines)
    return '\n'.join(rows) + '\n'


def parse_space(text: str) -> LinearSpace:
    """
    Raises:
        FormatError: on a missing header or non-integer tokens
        LinearSpaceError: if the lines do not form a linear space
    """
    v = None
    lines = []
    for number, row in enumerate(text.splitlines(), start=1):
        stripped = row.strip()
        if not stripped or stripped.startswith('#'):
            continue
        tokens = stripped.split()
        if v is None:
            if len(tokens) != 2 or tokens[0] != 'v' or not tokens[1].isdigit():
                raise FormatError(f"expected 'v n' header, got {stripped!r}", number)
            v = int(tokens[1])
            continue
        if not all(t.isdigit() for t in tokens):
            raise FormatError(f"non-integer point in {stripped!r}", number)
        lines.append([int(t) for t in tokens])
    if v is None:
        raise FormatError("missing 'v n' header")
    return validate(v, lines)


def read_space(path: Union[str, Path]) -> LinearSpace:
    return parse_space(Path(path).read_text())


def write_space(path: Union[str, Path], space: LinearSpace):
    Path(path).write_text(format_space(space))
