"""
This module contains the packed GF(2) value types every other module works on.

Classes:
    BitVector: An immutable length-n binary word packed into a Python int.
    BinaryMatrix: An immutable row-major matrix of BitVector rows.

Bit i of the packed integer holds coordinate i. The text form lists coordinate
0 first, so "1100000" has support {0, 1}.
"""

from dataclasses import dataclass, field

import numpy as np

from utility.errors import LengthMismatchError, MatrixFormatError


@dataclass(frozen=True)
class BitVector:
    """
    A binary word of a fixed length.

    Attributes:
        length (int): Number of coordinates.
        bits (int): Packed coordinates; nothing is stored at positions >= length.
    """
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError(f"length must be nonnegative, got {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits {self.bits:#x} do not fit in length {self.length}")

    @classmethod
    def zeros(cls, length):
        return cls(length, 0)

    @classmethod
    def ones(cls, length):
        return cls(length, (1 << length) - 1)

    @classmethod
    def from_string(cls, text):
        """
        Parse a 0/1 string, coordinate 0 first.

        Raises:
            MatrixFormatError: If the string holds anything but 0 and 1.
        """
        text = text.strip()
        if any(c not in '01' for c in text):
            raise MatrixFormatError(f"not a binary word: {text!r}")
        bits = 0
        for i, c in enumerate(text):
            if c == '1':
                bits |= 1 << i
        return cls(len(text), bits)

    @classmethod
    def from_support(cls, length, support):
        bits = 0
        for i in support:
            if not 0 <= i < length:
                raise ValueError(f"coordinate {i} outside 0..{length - 1}")
            bits |= 1 << i
        return cls(length, bits)

    @classmethod
    def from_array(cls, values):
        values = np.asarray(values).astype(np.uint8) & 1
        return cls.from_support(len(values), np.flatnonzero(values).tolist())

    @property
    def weight(self):
        return self.bits.bit_count()

    @property
    def support(self):
        return frozenset(i for i in range(self.length) if self.bits >> i & 1)

    def bit(self, i):
        return self.bits >> i & 1

    def to_string(self):
        return ''.join('1' if self.bits >> i & 1 else '0' for i in range(self.length))

    def to_array(self):
        return np.array([self.bits >> i & 1 for i in range(self.length)], dtype=np.uint8)

    def _check(self, other):
        if self.length != other.length:
            raise LengthMismatchError(
                f"length mismatch: {self.length} vs {other.length}"
            )

    def __xor__(self, other):
        self._check(other)
        return BitVector(self.length, self.bits ^ other.bits)

    def __and__(self, other):
        self._check(other)
        return BitVector(self.length, self.bits & other.bits)

    def __or__(self, other):
        self._check(other)
        return BitVector(self.length, self.bits | other.bits)

    def __bool__(self):
        return self.bits != 0

    def __str__(self):
        return self.to_string()


@dataclass(frozen=True)
class BinaryMatrix:
    """
    A binary matrix stored as a tuple of BitVector rows.

    Attributes:
        n_cols (int): Number of columns; every row has this length.
        data (tuple): The rows.
    """
    n_cols: int
    data: tuple = ()
    row_bits: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        data = tuple(self.data)
        for row in data:
            if row.length != self.n_cols:
                raise LengthMismatchError(
                    f"row of length {row.length} in a matrix with {self.n_cols} columns"
                )
        object.__setattr__(self, 'data', data)
        object.__setattr__(self, 'row_bits', tuple(row.bits for row in data))

    @classmethod
    def from_bits(cls, n_cols, rows):
        return cls(n_cols, tuple(BitVector(n_cols, r) for r in rows))

    @classmethod
    def from_strings(cls, lines):
        """
        Build a matrix from 0/1 strings of equal length.

        Raises:
            MatrixFormatError: If the rows are ragged or not binary.
        """
        rows = [BitVector.from_string(line) for line in lines]
        if not rows:
            raise MatrixFormatError("matrix has no rows; give the length explicitly")
        n_cols = rows[0].length
        if any(r.length != n_cols for r in rows):
            raise MatrixFormatError("rows have different lengths")
        return cls(n_cols, tuple(rows))

    @classmethod
    def from_array(cls, array):
        array = np.atleast_2d(np.asarray(array))
        return cls(array.shape[1], tuple(BitVector.from_array(r) for r in array))

    @property
    def n_rows(self):
        return len(self.data)

    def to_array(self):
        if not self.data:
            return np.zeros((0, self.n_cols), dtype=np.uint8)
        return np.vstack([row.to_array() for row in self.data])

    def to_strings(self):
        return [row.to_string() for row in self.data]

    def __iter__(self):
        return iter(self.data)

    def __len__(self):
        return len(self.data)

    def __getitem__(self, index):
        return self.data[index]

# End of data/bit_vector.py
