"""
This module contains the Permutation class and the permutation file format.

Classes:
    Permutation: A bijection on coordinate indices 0..n-1.

Functions:
    parse_permutations(text): Parse one permutation per line.
    load_permutations(path): Read a permutation file.
    save_permutations(perms, path): Write a permutation file.

File format:
    One permutation per line as whitespace-separated, 0-indexed images;
    blank lines and lines starting with '#' are ignored.
"""

from dataclasses import dataclass
from functools import cached_property

from data.bit_vector import BitVector
from utility.errors import LengthMismatchError, MatrixFormatError

_CHUNK = 8


@dataclass(frozen=True)
class Permutation:
    """
    Represents a coordinate permutation.

    Applying p moves coordinate i to coordinate mapping[i], so coordinate i of
    the result is coordinate p^-1(i) of the input.

    Attributes:
        mapping (tuple): Image of each coordinate.
    """
    mapping: tuple

    def __post_init__(self):
        mapping = tuple(int(i) for i in self.mapping)
        if sorted(mapping) != list(range(len(mapping))):
            raise ValueError(f"not a bijection on 0..{len(mapping) - 1}: {mapping}")
        object.__setattr__(self, 'mapping', mapping)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @property
    def n(self):
        return len(self.mapping)

    @cached_property
    def _tables(self):
        # tables[c][byte] is the image of byte placed at chunk c
        tables = []
        for start in range(0, self.n, _CHUNK):
            images = self.mapping[start:start + _CHUNK]
            table = [0] * (1 << len(images))
            for byte in range(1, len(table)):
                low = byte & -byte
                table[byte] = table[byte ^ low] | 1 << images[low.bit_length() - 1]
            tables.append(table)
        return tables

    def apply_bits(self, word):
        result = 0
        for table in self._tables:
            if not word:
                break
            result |= table[word & 0xFF]
            word >>= _CHUNK
        return result

    def apply(self, v):
        """
        Permute the coordinates of v.

        Raises:
            LengthMismatchError: If v does not have n coordinates.
        """
        if v.length != self.n:
            raise LengthMismatchError(f"word of length {v.length} for a permutation of {self.n}")
        return BitVector(self.n, self.apply_bits(v.bits))

    def compose(self, other):
        """Return self after other: first other, then self."""
        if other.n != self.n:
            raise LengthMismatchError(f"cannot compose permutations of {self.n} and {other.n}")
        return Permutation(tuple(self.mapping[j] for j in other.mapping))

    def inverse(self):
        inverse = [0] * self.n
        for i, j in enumerate(self.mapping):
            inverse[j] = i
        return Permutation(tuple(inverse))

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.mapping))

    def order(self):
        power, count = self, 1
        while not power.is_identity():
            power = self.compose(power)
            count += 1
        return count

    def to_line(self):
        return ' '.join(str(i) for i in self.mapping)

    def __str__(self):
        return self.to_line()


def parse_permutations(text):
    """
    Parse whitespace-separated image lists, one permutation per line.

    Raises:
        MatrixFormatError: On non-integers or non-bijections.
    """
    perms = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        try:
            perms.append(Permutation(tuple(int(tok) for tok in line.split())))
        except ValueError as e:
            raise MatrixFormatError(f"line {number}: {e}") from e
    return perms


def load_permutations(path):
    with open(path, 'r', encoding='utf-8') as handle:
        return parse_permutations(handle.read())


def save_permutations(perms, path):
    with open(path, 'w', encoding='utf-8') as handle:
        handle.write(''.join(p.to_line() + '\n' for p in perms))

# End of data/permutation.py
