"""
Group file format.

    group-file := header NEWLINE { generator NEWLINE }
    header     := "degree" SP n
    generator  := "()" | cycle { cycle }
    cycle      := "(" point { SP point } ")"

Points are 0-based decimal integers below n. The printer writes each cycle
starting at its least point, cycles ordered by that point, identity as "()",
one generator per line and a final newline, so print(parse(text)) == text for
printer output. The parser also accepts blank lines and lines starting with '#'.
"""
import re
from pathlib import Path
from typing import List, Union

from ..core.errors import EplsError, FormatError
from .group import PermGroup, group_from_generators
from .permutation import Permutation

CYCLE_RE = re.compile(r'\(\s*(\d+(?:\s+\d+)*)?\s*\)')
HEADER_RE = re.compile(r'^degree\s+(\d+)\s*$')


def format_permutation(g: Permutation) -> str:
    return str(g)


def parse_permutation(text: str, degree: int, line_number: int = None) -> Permutation:
    """Parse disjoint-cycle notation over 0..degree-1."""
    text = text.strip()
    pos = 0
    cycles = []
    while pos < len(text):
        match = CYCLE_RE.match(text, pos)
        if not match:
            raise FormatError(f"cannot parse cycle at {text[pos:]!r}", line_number)
        if match.group(1):
            cycles.append([int(x) for x in match.group(1).split()])
        pos = match.end()
        while pos < len(text) and text[pos] == ' ':
            pos += 1
    if not text:
        raise FormatError("empty generator", line_number)
    try:
        return Permutation.from_cycles(degree, cycles)
    except EplsError as e:
        raise FormatError(str(e), line_number)


def format_group(group: PermGroup) -> str:
    lines = [f"degree {group.degree}"]
    lines.extend(format_permutation(g) for g in group.generators)
    return '\n'.join(lines) + '\n'


def parse_group(text: str) -> PermGroup:
    """
    Raises:
        FormatError: on a bad header, a bad cycle, or no generators
    """
    rows = text.splitlines()
    gens: List[Permutation] = []
    degree = None
    for number, row in enumerate(rows, start=1):
        stripped = row.strip()
        if not stripped or stripped.startswith('#'):
            continue
        if degree is None:
            match = HEADER_RE.match(stripped)
            if not match or int(match.group(1)) < 1:
                raise FormatError(f"expected 'degree n' header, got {stripped!r}", number)
            degree = int(match.group(1))
            continue
        gens.append(parse_permutation(stripped, degree, number))
    if degree is None:
        raise FormatError("missing 'degree n' header")
    if not gens:
        raise FormatError("group file lists no generators")
    return group_from_generators(gens)


def read_group(path: Union[str, Path]) -> PermGroup:
    return parse_group(Path(path).read_text())


def write_group(path: Union[str, Path], group: PermGroup):
    Path(path).write_text(format_group(group))
