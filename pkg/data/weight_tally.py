"""
This module contains the WeightTally class, the exact weight → count map used
for weight distributions, local weight distributions, only-odd-decomposable
counts and coset subdistributions.

Classes:
    WeightTally: Counts indexed by Hamming weight 0..n.
"""


class WeightTally:
    """
    Represents a tally of counts by Hamming weight.

    Absent weights count zero; zero counts are never stored, so two tallies
    are equal iff they have the same length and the same nonzero entries.
    Counts are Python ints and therefore exact at any magnitude.

    Attributes:
        n (int): Word length; valid weights are 0..n.
        counts (dict): Nonzero counts keyed by weight.
    """

    def __init__(self, n, counts=None):
        if n < 0:
            raise ValueError(f"length must be nonnegative, got {n}")
        self.n = n
        self.counts = {}
        for w, c in (counts or {}).items():
            self.add(int(w), int(c))

    def add(self, w, count=1):
        if not 0 <= w <= self.n:
            raise ValueError(f"weight {w} outside 0..{self.n}")
        total = self.counts.get(w, 0) + count
        if total < 0:
            raise ValueError(f"negative count at weight {w}")
        if total:
            self.counts[w] = total
        else:
            self.counts.pop(w, None)

    def __getitem__(self, w):
        return self.counts.get(w, 0)

    def weights(self):
        return sorted(self.counts)

    def items(self):
        return [(w, self.counts[w]) for w in self.weights()]

    def total(self):
        return sum(self.counts.values())

    def scaled(self, factor):
        return WeightTally(self.n, {w: c * factor for w, c in self.counts.items()})

    def restricted(self, predicate):
        """Return the tally restricted to weights satisfying predicate."""
        return WeightTally(self.n, {w: c for w, c in self.counts.items() if predicate(w)})

    def merge(self, other):
        """Elementwise sum of two tallies of the same length."""
        if other.n != self.n:
            raise ValueError(f"cannot merge tallies of length {self.n} and {other.n}")
        merged = WeightTally(self.n, self.counts)
        for w, c in other.counts.items():
            merged.add(w, c)
        return merged

    __add__ = merge

    def to_dict(self):
        """Serialize as {weight-string: count-string} for lossless JSON."""
        return {str(w): str(c) for w, c in self.items()}

    @classmethod
    def from_dict(cls, n, data):
        return cls(n, {int(w): int(c) for w, c in data.items()})

    def __eq__(self, other):
        if not isinstance(other, WeightTally):
            return NotImplemented
        return self.n == other.n and self.counts == other.counts

    def __repr__(self):
        return f"WeightTally(n={self.n}, {dict(self.items())})"

# End of data/weight_tally.py
