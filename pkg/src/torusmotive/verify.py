"""Verification suites: golden reference values and independent oracles.

Each criterion returns a :class:`Check`; a failing check carries a short
description of the first mismatches, never a silent pass.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from math import comb, gcd, lcm

from . import reference as ref
from .assembly import config_report, m_irr
from .counting import n_pi_closed, n_pi_enumerate, pair_count
from .eigcfg import Partition, admissible, configs_for_rank, partitions_of
from .errors import MotiveError, UnsupportedPartition
from .ffcheck import FfParams, compare
from .qpoly import MotivePoly, Q, gl_motive, q_power, sl_motive
from .strata import schubert_factor
from .total import stratum_22, total_motive

SUITES = ("paper", "oracle", "all")


@dataclass
class Check:
    key: str
    title: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tail = f" ({self.detail})" if self.detail else ""
        return f"{'PASS' if self.ok else 'FAIL'} [{self.key}] {self.title}{tail}"


def _summarize(bad: list[str], total: int, limit: int = 4) -> str:
    if not bad:
        return f"{total} checked"
    more = f", +{len(bad) - limit} more" if len(bad) > limit else ""
    return f"{len(bad)}/{total} mismatched: " + "; ".join(bad[:limit]) + more


def _coprime_pairs(lo: int, hi: int, ordered: bool = False):
    for n in range(lo, hi + 1):
        for m in range(lo, hi + 1):
            if gcd(n, m) == 1 and (ordered or n < m):
                yield n, m


def criterion_1() -> Check:
    r = config_report(ref.RANK2["config"])
    got = {"R_kappa": r.r_kappa, "R_red": r.r_red, "R_irr": r.r_irr, "M_irr": r.m_irr}
    bad = [f"{k}: {got[k]} != {ref.RANK2[k]}" for k in got if got[k] != ref.RANK2[k]]
    return Check("1", "rank 2 golden values", not bad, _summarize(bad, len(got)))


def criterion_2() -> Check:
    bad, total = [], 0
    for cfg, want in ref.RANK3.items():
        r = config_report(cfg)
        got = {"R_red": r.r_red, "R_kappa": r.r_kappa, "R_irr": r.r_irr, "M_irr": r.m_irr}
        for k, v in want.items():
            total += 1
            if got[k] != v:
                bad.append(f"{cfg} {k}")
        rows = Counter((s.m_tau, s.g_tau, s.irr_factor, s.multiplicity) for s in r.strata)
        total += 1
        if rows != Counter(ref.RANK3_ROWS[cfg]):
            bad.append(f"{cfg} type rows")
    n_rows = sum(len(v) for v in ref.RANK3_ROWS.values())
    return Check("2", f"rank 3 golden values and {n_rows} type rows", not bad,
                 _summarize(bad, total))


def criterion_3() -> Check:
    bad = []
    for cfg, want in ref.RANK4_R_IRR.items():
        got = config_report(cfg).r_irr
        if got != want:
            bad.append(f"{cfg}: difference {want - got}")
    return Check("3", "rank 4 per-configuration irreducible classes", not bad,
                 _summarize(bad, len(ref.RANK4_R_IRR), limit=2))


def criterion_4() -> Check:
    bad, pairs = [], list(_coprime_pairs(2, 9))
    for n, m in pairs:
        if m_irr(4, n, m) != ref.rank4_closed(n, m):
            bad.append(f"({n},{m})")
    return Check("4", "rank 4 closed form for coprime 2 <= n < m <= 9", not bad,
                 _summarize(bad, len(pairs), limit=6))


def criterion_5(hi: int = 12) -> Check:
    bad, total = [], 0
    for r in range(1, 5):
        parts = [Partition(p) for p in partitions_of(r)]
        for n in range(2, hi + 1):
            for a in range(r):
                for p in parts:
                    try:
                        closed = n_pi_closed(n, r, a, p)
                    except UnsupportedPartition:
                        continue
                    total += 1
                    if closed != n_pi_enumerate(n, r, a, p):
                        bad.append(f"N(n={n},r={r},a={a},{p})")
        for n, m in _coprime_pairs(2, hi, ordered=True):
            for p1 in parts:
                for p2 in parts:
                    e = pair_count(n, m, r, p1, p2, "enumerate")
                    vals = [e, pair_count(n, m, r, p1, p2, "multinomial")]
                    try:
                        vals.append(pair_count(n, m, r, p1, p2, "closed"))
                    except UnsupportedPartition:
                        pass
                    total += 1
                    if len(set(vals)) != 1:
                        bad.append(f"M(n={n},m={m},{p1},{p2})={vals}")
            d = Partition((1,) * r)
            total += 1
            if r * pair_count(n, m, r, d, d) != comb(n - 1, r - 1) * comb(m - 1, r - 1):
                bad.append(f"distinct-pair formula n={n},m={m},r={r}")
    return Check("5", "counting methods agree (closed, enumerate, multinomial)", not bad,
                 _summarize(bad, total))


CRITERION_6_TRIPLES = ((2, 3, 13), (3, 4, 13), (2, 5, 11))
SUPPLEMENTARY_TRIPLES = ((2, 5, 41), (1, 2, 5), (1, 3, 7), (2, 1, 13))


def _ff_check(triples, key: str, title: str) -> Check:
    bad = []
    for n, m, q in triples:
        valid = (q - 1) % lcm(2 * n, 2 * m) == 0
        rep = compare(FfParams(q, n, m, require_roots=False))
        if not rep.ok:
            d = rep.to_dict()
            note = "" if valid else ", roots of unity missing from F_q"
            bad.append(f"(n,m,q)=({n},{m},{q}) measured {tuple(d['measured'].values())}"
                       f" predicted {tuple(d['predicted'].values())}{note}")
    return Check(key, title, not bad, _summarize(bad, len(triples), limit=3))


def criterion_6() -> Check:
    return _ff_check(CRITERION_6_TRIPLES, "6", "finite-field brute force equals prediction")


def supplementary_ff() -> Check:
    return _ff_check(SUPPLEMENTARY_TRIPLES, "6+", "finite-field check on admissible fields")


def criterion_7(samples: int = 1000, seed: int = 7) -> Check:
    bad, total = [], 0
    for r in range(2, 5):
        pgl = sl_motive(r)
        for cfg in configs_for_rank(r):
            if not admissible(cfg):
                continue
            total += 1
            rep = config_report(cfg)
            if not (rep.r_kappa - rep.r_red).divmod(pgl)[1].is_zero():
                bad.append(str(cfg))
    rng = random.Random(seed)
    for _ in range(samples):
        a = MotivePoly(tuple(rng.randint(-20, 20) for _ in range(rng.randint(1, 8))))
        b = MotivePoly(tuple(rng.randint(-20, 20) for _ in range(rng.randint(1, 6))))
        if b.is_zero():
            continue
        total += 1
        if (a * b).exact_div(b) != a:
            bad.append(f"exact_div({a} * {b})")
    return Check("7", "divisibility by the projective group and exact division", not bad,
                 _summarize(bad, total))


DISPLAY_PAIRS = ((3, 5), (3, 7), (5, 7), (2, 3), (2, 5), (4, 5), (4, 7))


def criterion_8() -> Check:
    bad, total = [], 0
    for n, m in DISPLAY_PAIRS:
        total += 1
        try:
            shown = ref.stratum_22_display(n, m)
        except MotiveError as e:
            bad.append(f"display ({n},{m}): {e}")
            continue
        if shown != stratum_22(n, m):
            bad.append(f"display ({n},{m}) differs by {shown - stratum_22(n, m)}")
    total += 1
    if total_motive(2, 2, 3) != 2 * Q - 2:
        bad.append("total_motive(2,2,3)")
    for n, m in _coprime_pairs(1, 9):
        total += 1
        try:
            a, b = total_motive(4, n, m), total_motive(4, m, n)
        except MotiveError as e:
            bad.append(f"total_motive(4,{n},{m}): {type(e).__name__}")
            continue
        if a != b:
            bad.append(f"total_motive(4,{n},{m}) not symmetric")
    return Check("8", "total character variety assembly", not bad, _summarize(bad, total))


def criterion_9() -> Check:
    bad, total = [], 0
    for c in range(0, 6):
        for d in range(0, c + 1):
            total += 1
            if schubert_factor(c, d, 1) != q_power(c) - q_power(d):
                bad.append(f"m=1 c={c} d={d}")
    total += 2
    if not schubert_factor(1, 0, 2).is_zero():
        bad.append("m=2 c=1 d=0")
    if schubert_factor(2, 0, 2) != gl_motive(2):
        bad.append("m=2 c=2 d=0")
    return Check("9", "Schubert factor specializations", not bad, _summarize(bad, total))


def cli_example() -> Check:
    got = m_irr(3, 4, 5)
    ok = got == ref.CLI_RANK3_4_5 == ref.rank3_closed(4, 5)
    return Check("3.4.5", "rank 3 closed form at (n, m) = (4, 5)", ok, str(got))


GOLDEN = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_8, criterion_9, cli_example)
ORACLE = (criterion_5, criterion_6, supplementary_ff, criterion_7)


def run_suite(suite: str = "all") -> list[Check]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    fns = {"paper": GOLDEN, "oracle": ORACLE, "all": GOLDEN + ORACLE}[suite]
    return [fn() for fn in fns]

