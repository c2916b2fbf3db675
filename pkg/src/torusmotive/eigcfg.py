"""Eigenvalue coincidence patterns for a pair of matrices of rank ``r``.

Only the pattern of multiplicities matters downstream, so eigenvalues are
abstract labels ``0..p-1`` ordered by decreasing multiplicity.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import UnsupportedPartition, UnsupportedRank

MAX_RANK = 4


def partitions_of(r: int, largest: int | None = None) -> list[tuple[int, ...]]:
    """Partitions of ``r`` as descending tuples, lexicographically decreasing."""
    if largest is None:
        largest = r
    if r == 0:
        return [()]
    out = []
    for first in range(min(r, largest), 0, -1):
        for rest in partitions_of(r - first, first):
            out.append((first,) + rest)
    return out


@dataclass(frozen=True, order=True)
class Partition:
    """Multiplicity pattern stored as descending parts, e.g. ``(2, 1, 1)``.

    ``counts[i-1]`` is the number of eigenvalues appearing exactly ``i`` times.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if any(p <= 0 for p in parts):
            raise UnsupportedPartition(f"parts must be positive: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def rank(self) -> int:
        return sum(self.parts)

    @property
    def counts(self) -> tuple[int, ...]:
        r = self.rank
        return tuple(self.parts.count(i) for i in range(1, r + 1))

    @classmethod
    def from_counts(cls, counts) -> Partition:
        parts = []
        for i, e in enumerate(counts, start=1):
            parts.extend([i] * int(e))
        return cls(tuple(parts))

    @classmethod
    def parse(cls, spec: str) -> Partition:
        """Parse ``"2^1,1^2"`` (part ``2`` once, part ``1`` twice)."""
        spec = spec.strip().replace(" ", "")
        if not spec:
            raise UnsupportedPartition("empty partition spec")
        parts = []
        for item in spec.split(","):
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", item)
            if not m:
                raise UnsupportedPartition(f"cannot parse partition item {item!r}")
            size, times = int(m.group(1)), int(m.group(2) or 1)
            if size <= 0:
                raise UnsupportedPartition(f"part sizes must be positive in {spec!r}")
            parts.extend([size] * times)
        if not parts:
            raise UnsupportedPartition(f"empty partition {spec!r}")
        return cls(tuple(parts))

    def spec(self) -> str:
        return ",".join(f"{i}^{e}" for i, e in reversed(list(enumerate(self.counts, 1))) if e)

    def __str__(self) -> str:
        body = ",".join(f"{i}^{e}" if e > 1 else str(i)
                        for i, e in reversed(list(enumerate(self.counts, 1))) if e)
        return "{" + body + "}"


@dataclass(frozen=True, order=True)
class EigenConfig:
    """Multiplicities of the distinct eigenvalues of ``A`` and of ``B``."""

    a_mults: tuple[int, ...]
    b_mults: tuple[int, ...]

    def __post_init__(self):
        a = tuple(sorted((int(x) for x in self.a_mults), reverse=True))
        b = tuple(sorted((int(x) for x in self.b_mults), reverse=True))
        if sum(a) != sum(b):
            raise UnsupportedPartition(f"A and B patterns have different sizes: {a}, {b}")
        if any(x <= 0 for x in a + b):
            raise UnsupportedPartition("multiplicities must be positive")
        object.__setattr__(self, "a_mults", a)
        object.__setattr__(self, "b_mults", b)

    @property
    def rank(self) -> int:
        return sum(self.a_mults)

    @classmethod
    def from_partitions(cls, p1: Partition, p2: Partition) -> EigenConfig:
        return cls(p1.parts, p2.parts)

    @property
    def partitions(self) -> tuple[Partition, Partition]:
        return Partition(self.a_mults), Partition(self.b_mults)

    def __str__(self) -> str:
        return f"(({','.join(map(str, self.a_mults))}),({','.join(map(str, self.b_mults))}))"


def admissible(cfg: EigenConfig) -> bool:
    """Whether irreducible pairs with this pattern can exist at all."""
    r = cfg.rank
    if r == 1:
        return True  # a common eigenline is the whole space, not a proper subspace
    if cfg.a_mults[0] + cfg.b_mults[0] > r:
        return False
    if r == 4 and cfg.a_mults == (2, 2) and cfg.b_mults == (2, 2):
        return False
    return True


@lru_cache(maxsize=None)
def all_configs(r: int) -> tuple[EigenConfig, ...]:
    """Every canonical pattern pair of rank ``r``, admissible or not."""
    if r < 1 or r > MAX_RANK:
        raise UnsupportedRank(f"rank {r} outside 1..{MAX_RANK}")
    parts = sorted(partitions_of(r))
    return tuple(EigenConfig(a, b) for a, b in itertools.product(parts, parts))


def configs_for_rank(r: int) -> list[EigenConfig]:
    return [c for c in all_configs(r) if admissible(c)]


def _group_factorial(mults: tuple[int, ...]) -> int:
    out = 1
    for _, grp in itertools.groupby(mults):
        out *= math.factorial(len(list(grp)))
    return out


def symmetry_order(cfg: EigenConfig) -> int:
    return _group_factorial(cfg.a_mults) * _group_factorial(cfg.b_mults)


def label_permutations(mults: tuple[int, ...]):
    """All relabellings of ``range(len(mults))`` preserving multiplicity."""
    groups = []
    start = 0
    for _, grp in itertools.groupby(mults):
        size = len(list(grp))
        groups.append(list(range(start, start + size)))
        start += size
    for choice in itertools.product(*(itertools.permutations(g) for g in groups)):
        perm = {}
        for g, image in zip(groups, choice):
            perm.update(zip(g, image))
        yield tuple(perm[i] for i in range(len(mults)))
