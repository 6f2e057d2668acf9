"""
This module contains the LinearCode class and the generator-matrix text format.

Classes:
    LinearCode: A binary (n, k) linear code given by a full-rank generator matrix.

Functions:
    parse_matrix(text): Parse the generator-matrix text format.
    load_matrix(path): Read a generator matrix file into a LinearCode.
    save_matrix(code, path): Write a LinearCode in the text format.

Matrix text format:
    Optional lines starting with '#'; then k lines of exactly n characters from
    {0, 1}. Lines are whitespace-trimmed and blank lines ignored. A comment
    '# n = <n>' gives the length when the matrix has no rows.

Attributes:
    logger (Logger): The logger object used for code-loading events.
"""

import re
from dataclasses import dataclass, replace
from functools import cached_property

from data.bit_vector import BinaryMatrix
from utility.errors import LengthMismatchError, MatrixFormatError, PreconditionError
from utility.gf2 import rank, reduce_by, reduced_basis
from utility.logger import setup_logger

logger = setup_logger('linear_code_log')

_LENGTH_COMMENT = re.compile(r'^#\s*n\s*=\s*(\d+)\s*$')


@dataclass(frozen=True)
class LinearCode:
    """
    Represents a binary linear code.

    Attributes:
        G (BinaryMatrix): k×n generator matrix of full row rank.
        name (str): Human readable descriptor, e.g. "RM(1,3)".
        cyclic (bool): The code is invariant under the cyclic shift.
        extended_of (int): Position of the overall parity bit, or None.
        transitive_invariant (bool): Caller-asserted transitive invariance.
    """
    G: BinaryMatrix
    name: str = ''
    cyclic: bool = False
    extended_of: int = None
    transitive_invariant: bool = False

    def __post_init__(self):
        if rank(self.G) != self.G.n_rows:
            raise PreconditionError(
                f"generator matrix of {self.name or 'code'} has dependent rows"
            )

    @property
    def n(self):
        return self.G.n_cols

    @property
    def k(self):
        return self.G.n_rows

    @property
    def rows(self):
        return self.G.row_bits

    @cached_property
    def echelon(self):
        """Fully reduced echelon basis, used for membership tests."""
        return reduced_basis(self.G.row_bits)

    def contains_bits(self, word):
        return reduce_by(self.echelon, word) == 0

    def contains(self, v):
        """
        Decide whether v is a codeword (rank test against the generator rows).

        Raises:
            LengthMismatchError: If v does not have n coordinates.
        """
        if v.length != self.n:
            raise LengthMismatchError(f"word of length {v.length} for a length-{self.n} code")
        return self.contains_bits(v.bits)

    def contains_code(self, other):
        """True iff every generator row of other is a codeword of this code."""
        return other.n == self.n and all(self.contains_bits(r) for r in other.rows)

    def with_tags(self, **tags):
        return replace(self, **tags)

    def describe(self):
        return f"{self.name or 'code'} ({self.n},{self.k})"

    def __str__(self):
        return self.describe()


def parse_matrix(text, name=''):
    """
    Parse the generator-matrix text format into a LinearCode.

    Raises:
        MatrixFormatError: On ragged rows, foreign characters or a missing length.
        PreconditionError: If the rows are linearly dependent.
    """
    lines = []
    n = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith('#'):
            match = _LENGTH_COMMENT.match(line)
            if match:
                n = int(match.group(1))
            continue
        lines.append(line)
    if lines:
        G = BinaryMatrix.from_strings(lines)
        if n is not None and n != G.n_cols:
            raise MatrixFormatError(f"header says n = {n} but rows have {G.n_cols} columns")
    elif n is not None:
        G = BinaryMatrix(n, ())
    else:
        raise MatrixFormatError("empty matrix without a '# n = <n>' header")
    return LinearCode(G, name=name)


def load_matrix(path):
    """
    Read a generator matrix file.

    Args:
        path (str): Path of the text file.

    Returns:
        LinearCode: The code, named after the file.
    """
    with open(path, 'r', encoding='utf-8') as handle:
        code = parse_matrix(handle.read(), name=str(path))
    logger.debug("Loaded %s from %s", code.describe(), path)
    return code


def format_matrix(code):
    header = [f"# {code.describe()}", f"# n = {code.n}"]
    return '\n'.join(header + code.G.to_strings()) + '\n'


def save_matrix(code, path):
    """Write code in the generator-matrix text format."""
    with open(path, 'w', encoding='utf-8') as handle:
        handle.write(format_matrix(code))
    logger.debug("Saved %s to %s", code.describe(), path)

# End of data/linear_code.py
