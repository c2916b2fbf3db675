"""Types of reducible representations compatible with an eigenvalue pattern.

A type is an ordered list of levels (graded pieces of the semisimple
filtration); each level holds isotypic blocks carrying a dimension, a
multiplicity and the eigenvalue labels of both generators on one copy.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .eigcfg import MAX_RANK, EigenConfig, admissible, label_permutations, symmetry_order
from .errors import InvalidInput, UnsupportedRank


@dataclass(frozen=True, order=True)
class IsotypicBlock:
    dim: int
    mult: int
    evals_a: tuple[int, ...]
    evals_b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "evals_a", tuple(sorted(self.evals_a)))
        object.__setattr__(self, "evals_b", tuple(sorted(self.evals_b)))
        if len(self.evals_a) != self.dim or len(self.evals_b) != self.dim:
            raise InvalidInput(f"eigenvalue lists of {self} do not match dim {self.dim}")

    @property
    def signature(self) -> tuple:
        return (self.dim, self.evals_a, self.evals_b)

    def sub_config(self) -> EigenConfig:
        """Pattern of the irreducible piece carried by one copy of the block."""
        ca = Counter(self.evals_a).values()
        cb = Counter(self.evals_b).values()
        return EigenConfig(tuple(ca), tuple(cb))

    def relabel(self, pa, pb) -> IsotypicBlock:
        return IsotypicBlock(self.dim, self.mult,
                             tuple(pa[x] for x in self.evals_a),
                             tuple(pb[x] for x in self.evals_b))


def _sort_key(b: IsotypicBlock):
    return (b.dim, b.evals_a, b.evals_b, b.mult)


@dataclass(frozen=True)
class TypeDescriptor:
    levels: tuple[tuple[IsotypicBlock, ...], ...]

    def __post_init__(self):
        lv = tuple(tuple(sorted(level, key=_sort_key)) for level in self.levels)
        object.__setattr__(self, "levels", lv)

    @property
    def rank(self) -> int:
        return sum(b.dim * b.mult for level in self.levels for b in level)

    def shape(self) -> tuple:
        return tuple(tuple(sorted((b.dim, b.mult) for b in level)) for level in self.levels)

    def key(self) -> tuple:
        return tuple(tuple(_sort_key(b) for b in level) for level in self.levels)

    def relabel(self, pa, pb) -> TypeDescriptor:
        return TypeDescriptor(tuple(tuple(b.relabel(pa, pb) for b in level)
                                    for level in self.levels))

    def is_irreducible_shape(self) -> bool:
        return (len(self.levels) == 1 and len(self.levels[0]) == 1
                and self.levels[0][0].mult == 1)

    def validate(self, cfg: EigenConfig) -> None:
        if not self.levels or any(not level for level in self.levels):
            raise InvalidInput("every level of a type must be non-empty")
        ca, cb = Counter(), Counter()
        for level in self.levels:
            sigs = [b.signature for b in level]
            if len(set(sigs)) != len(sigs):
                raise InvalidInput("identical blocks in one level must be merged")
            for b in level:
                _check_block(b)
                for _ in range(b.mult):
                    ca.update(b.evals_a)
                    cb.update(b.evals_b)
        want_a = Counter({i: k for i, k in enumerate(cfg.a_mults)})
        want_b = Counter({i: k for i, k in enumerate(cfg.b_mults)})
        if ca != want_a or cb != want_b:
            raise InvalidInput(f"type eigenvalues do not match configuration {cfg}")

    def render(self) -> str:
        xi = ",".join("{" + ",".join(f"({b.dim},{b.mult})" for b in level) + "}"
                      for level in self.levels)

        def sig(side):
            out = []
            for level in self.levels:
                cells = []
                for b in level:
                    labels = b.evals_a if side == "A" else b.evals_b
                    mark = "e" if side == "A" else "f"
                    cell = "{" + ",".join(f"{mark}{x + 1}" for x in labels) + "}"
                    cells.extend([cell] * b.mult)
                out.append("{" + ",".join(cells) + "}")
            return "(" + ",".join(out) + ")"

        return f"xi=({xi}); sigma_A={sig('A')}; sigma_B={sig('B')}"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class TypeOrbit:
    representative: TypeDescriptor
    multiplicity: int


@dataclass(frozen=True)
class FlatBlock:
    block: IsotypicBlock
    level: int
    iso_index: int


def _check_block(b: IsotypicBlock) -> None:
    if b.dim == 1 and b.mult >= 3:
        raise InvalidInput("one-dimensional blocks of multiplicity >= 3 are not supported")
    if b.dim >= 2 and b.mult >= 2:
        raise InvalidInput("repeated blocks of dimension >= 2 are not supported")


def flatten(t: TypeDescriptor) -> list[FlatBlock]:
    """Expand every block into ``mult`` copies, level by level."""
    out = []
    for i, level in enumerate(t.levels):
        for j, b in enumerate(level):
            out.extend(FlatBlock(b, i, j) for _ in range(b.mult))
    return out


def _sub_multisets(pool: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    """Sub-multisets of the label pool (``pool[k]`` copies of label ``k``)."""
    def rec(k, left):
        if left == 0:
            yield ()
            return
        if k == len(pool):
            return
        for take in range(min(pool[k], left), -1, -1):
            for rest in rec(k + 1, left - take):
                yield (k,) * take + rest
    yield from rec(0, size)


def _consume(pool, labels, times):
    out = list(pool)
    for x in labels:
        out[x] -= times
    return tuple(out)


def _levels(pool_a, pool_b) -> Iterator[tuple[tuple[IsotypicBlock, ...], tuple, tuple]]:
    """Non-empty levels drawn from the pools, with the leftover pools."""
    left = sum(pool_a)
    cands = []
    for d in range(1, left + 1):
        for ea in _sub_multisets(pool_a, d):
            for eb in _sub_multisets(pool_b, d):
                cands.append((d, ea, eb))

    def rec(i, pa, pb, chosen):
        if i == len(cands):
            if chosen:
                yield tuple(chosen), pa, pb
            return
        yield from rec(i + 1, pa, pb, chosen)
        d, ea, eb = cands[i]
        max_mult = 2 if d == 1 else 1
        for mult in range(1, max_mult + 1):
            na, nb = _consume(pa, ea, mult), _consume(pb, eb, mult)
            if min(na, default=0) < 0 or min(nb, default=0) < 0:
                break
            chosen.append(IsotypicBlock(d, mult, ea, eb))
            yield from rec(i + 1, na, nb, chosen)
            chosen.pop()

    yield from rec(0, pool_a, pool_b, [])


def raw_types(cfg: EigenConfig) -> list[TypeDescriptor]:
    """All labelled types for ``cfg`` before quotienting by relabelling."""
    out = []

    def rec(pa, pb, levels):
        if sum(pa) == 0:
            t = TypeDescriptor(tuple(levels))
            if not t.is_irreducible_shape():
                out.append(t)
            return
        for level, na, nb in _levels(pa, pb):
            levels.append(level)
            rec(na, nb, levels)
            levels.pop()

    rec(tuple(cfg.a_mults), tuple(cfg.b_mults), [])
    return out


def canonical(t: TypeDescriptor, cfg: EigenConfig) -> TypeDescriptor:
    return min((t.relabel(pa, pb) for pa in label_permutations(cfg.a_mults)
                for pb in label_permutations(cfg.b_mults)), key=TypeDescriptor.key)


def orbit_multiplicity(t: TypeDescriptor, cfg: EigenConfig) -> int:
    images = {t.relabel(pa, pb).key() for pa in label_permutations(cfg.a_mults)
              for pb in label_permutations(cfg.b_mults)}
    return len(images)


def contributes(t: TypeDescriptor) -> bool:
    """False when the stratum is empty for structural reasons.

    That happens when some block of dimension >= 2 carries a pattern with
    no irreducible pairs, or when the completion variety is empty.
    """
    from .strata import m_tau_motive

    for level in t.levels:
        for b in level:
            if b.dim >= 2 and not admissible(b.sub_config()):
                return False
    return not m_tau_motive(t).is_zero()


def enumerate_types(cfg: EigenConfig, prune: bool = True) -> list[TypeOrbit]:
    """Relabelling orbits of reducible types, with their orbit sizes.

    With ``prune`` (the default) types whose stratum is empty are dropped;
    they contribute zero either way.
    """
    if cfg.rank > MAX_RANK:
        raise UnsupportedRank(f"rank {cfg.rank} outside 1..{MAX_RANK}")
    perms = [(pa, pb) for pa in label_permutations(cfg.a_mults)
             for pb in label_permutations(cfg.b_mults)]
    seen: set[tuple] = set()
    orbits = []
    for t in raw_types(cfg):
        if t.key() in seen:
            continue
        # every relabelling of a raw type is again a raw type, so each
        # orbit is expanded once and its members skipped afterwards
        images = {}
        for pa, pb in perms:
            img = t.relabel(pa, pb)
            images.setdefault(img.key(), img)
        seen.update(images)
        if prune and not contributes(t):
            continue
        rep = images[min(images)]
        orbits.append(TypeOrbit(rep, len(images)))
    orbits.sort(key=lambda o: (len(o.representative.levels), o.representative.shape(),
                               o.representative.key()))
    order = symmetry_order(cfg)
    for o in orbits:
        assert order % o.multiplicity == 0
    return orbits


def count_raw(cfg: EigenConfig, prune: bool = True) -> int:
    return sum(1 for t in raw_types(cfg) if not prune or contributes(t))

