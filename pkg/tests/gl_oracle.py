"""Independent brute-force oracle for small ranks over a prime field.

Fix ``A = diag`` with eigenvalue multiplicities ``a_mults`` and run over the
whole conjugacy class of semisimple ``B`` with multiplicities ``b_mults``
(as tuples of complementary eigenspaces). A pair is irreducible when no
proper nonzero subspace is invariant under both.

Subspaces of ``F_p^r`` are bit masks over the ``p^r`` vectors. ``U`` is
``B``-invariant iff it is the sum of its intersections with the eigenspaces
of ``B``, i.e. iff the dimensions of those intersections add up to
``dim U``. Counting works for any field; over ``F_p`` it measures
``[R_kappa^irr](p) / [orbit of A](p)`` as long as ``F_p``-irreducible and
absolutely irreducible agree (true unless the two patterns are both
``(2, 2)``-like, where Galois-conjugate splittings appear).
"""

from __future__ import annotations

import itertools
from functools import lru_cache


class _Space:
    def __init__(self, p: int, r: int):
        self.p, self.r, self.size = p, r, p ** r
        vecs = [self.decode(c) for c in range(self.size)]
        self.add = [[self.encode([(x + y) % p for x, y in zip(u, v)]) for v in vecs]
                    for u in vecs]

    def encode(self, v) -> int:
        return sum(x * self.p ** i for i, x in enumerate(v))

    def decode(self, c: int):
        return [(c // self.p ** i) % self.p for i in range(self.r)]

    def members(self, mask: int):
        return [c for c in range(self.size) if mask >> c & 1]

    def span_sum(self, m1: int, m2: int) -> int:
        out = 0
        for a in self.members(m1):
            row = self.add[a]
            for b in self.members(m2):
                out |= 1 << row[b]
        return out

    def dim(self, mask: int) -> int:
        n, d = bin(mask).count("1"), 0
        while n > 1:
            n //= self.p
            d += 1
        return d

    @lru_cache(maxsize=None)
    def subspaces(self, k: int, coords: tuple[int, ...]) -> list[int]:
        """All ``k``-dimensional subspaces supported on ``coords`` (row echelon form)."""
        p, n, out = self.p, len(coords), []
        for piv in itertools.combinations(range(n), k):
            free = [(i, c) for i, pc in enumerate(piv) for c in range(pc + 1, n) if c not in piv]
            for vals in itertools.product(range(p), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for i, pc in enumerate(piv):
                    rows[i][pc] = 1
                for (i, c), v in zip(free, vals):
                    rows[i][c] = v
                mask = 0
                for co in itertools.product(range(p), repeat=k):
                    full = [0] * self.r
                    for i, c in enumerate(coords):
                        full[c] = sum(co[j] * rows[j][i] for j in range(k)) % p
                    mask |= 1 << self.encode(full)
                out.append(mask)
        return out


def irreducible_in_class(p: int, a_mults, b_mults) -> tuple[int, int]:
    """``(size of the B class, number of B making (A, B) irreducible)``."""
    r = sum(a_mults)
    if sum(b_mults) != r:
        raise ValueError("patterns must have the same rank")
    sp = _Space(p, r)
    blocks, off = [], 0
    for k in a_mults:
        blocks.append(tuple(range(off, off + k)))
        off += k
    # A-invariant subspaces are sums of subspaces of its eigenspaces
    choices = [[m for d in range(len(c) + 1) for m in sp.subspaces(d, c)] for c in blocks]
    invariant = []
    for pick in itertools.product(*choices):
        mask = 1
        for x in pick:
            mask = sp.span_sum(mask, x)
        if 1 < bin(mask).count("1") < sp.size:
            invariant.append((mask, sp.dim(mask)))
    allr = tuple(range(r))
    spaces = {k: sp.subspaces(k, allr) for k in set(b_mults)}
    total = irr = 0

    def rec(i, acc, parts):
        nonlocal total, irr
        if i == len(b_mults):
            total += 1
            for u, du in invariant:
                if sum(sp.dim(u & w) for w in parts) == du:
                    return
            irr += 1
            return
        for w in spaces[b_mults[i]]:
            if acc & w != 1:
                continue
            nxt = sp.span_sum(acc, w) if i + 1 < len(b_mults) else acc
            rec(i + 1, nxt, parts + [w])

    rec(0, 1, [])
    return total, irr
