"""Sparse signed-integer vectors indexed by partition tuples.

Used for both the Schur basis and the complete homogeneous basis.  Zero
coefficients are never stored; canonical iteration order is decreasing
lexicographic on the partition keys.
"""

from __future__ import annotations

from .errors import ResourceLimitError

COEFF_LIMIT = 2 ** 63  # coefficients are kept within signed 64-bit range


class PartitionVector(dict):
    """partition tuple -> nonzero integer coefficient."""

    def __init__(self, data=()):
        super().__init__()
        items = data.items() if isinstance(data, dict) else data
        for key, coeff in items:
            self.add(key, coeff)

    def add(self, key, coeff):
        if coeff == 0:
            return
        total = self.get(key, 0) + coeff
        if total == 0:
            del self[key]
        else:
            if abs(total) >= COEFF_LIMIT:
                raise ResourceLimitError(f"coefficient at {key} exceeds 64-bit range")
            dict.__setitem__(self, key, total)

    def __add__(self, other):
        out = PartitionVector(self)
        for key, coeff in other.items():
            out.add(key, coeff)
        return out

    def __sub__(self, other):
        out = PartitionVector(self)
        for key, coeff in other.items():
            out.add(key, -coeff)
        return out

    def __neg__(self):
        return PartitionVector((key, -coeff) for key, coeff in self.items())

    def scaled(self, factor: int) -> "PartitionVector":
        return PartitionVector((key, factor * coeff) for key, coeff in self.items())

    def items_sorted(self):
        """Terms in decreasing lexicographic order of partition."""
        return sorted(self.items(), key=lambda kv: kv[0], reverse=True)

    def is_nonnegative(self) -> bool:
        return all(coeff > 0 for coeff in self.values())

    def is_nonpositive(self) -> bool:
        return all(coeff < 0 for coeff in self.values())


# The two bases share the representation; names document intent at call sites.
SchurVector = PartitionVector
HVector = PartitionVector
