"""Array kernels for the finite-field oracle.

Matrices of ``SL_2(F_q)`` are stored as rows ``(a, b, c, d)`` of an int64
array. Each kernel has a numba version and a numpy version with the same
signature; :func:`pick` returns whichever is active.
"""

from __future__ import annotations

import numpy as np

from ._accel import HAVE_NUMBA, njit


def sl2_elements(q: int) -> np.ndarray:
    """All of ``SL_2(F_q)`` in a fixed order, shape ``(q (q^2 - 1), 4)``."""
    inv = np.zeros(q, dtype=np.int64)
    inv[1:] = [pow(x, q - 2, q) for x in range(1, q)]
    # a != 0: d = (1 + b c) / a
    a, b, c = np.meshgrid(np.arange(1, q), np.arange(q), np.arange(q), indexing="ij")
    a, b, c = a.ravel(), b.ravel(), c.ravel()
    d = (1 + b * c) % q * inv[a] % q
    first = np.stack([a, b, c, d], axis=1)
    # a == 0: b c = -1, d free
    b2, d2 = np.meshgrid(np.arange(1, q), np.arange(q), indexing="ij")
    b2, d2 = b2.ravel(), d2.ravel()
    c2 = (q - inv[b2]) % q
    second = np.stack([np.zeros_like(b2), b2, c2, d2], axis=1)
    return np.ascontiguousarray(np.concatenate([first, second]).astype(np.int64))


def _power_np(mats: np.ndarray, e: int, q: int) -> np.ndarray:
    out = np.zeros_like(mats)
    out[:, 0] = 1
    out[:, 3] = 1
    base = mats.copy()
    while e:
        if e & 1:
            out = _mul_np(out, base, q)
        base = _mul_np(base, base, q)
        e >>= 1
    return out


def _mul_np(x: np.ndarray, y: np.ndarray, q: int) -> np.ndarray:
    a = (x[:, 0] * y[:, 0] + x[:, 1] * y[:, 2]) % q
    b = (x[:, 0] * y[:, 1] + x[:, 1] * y[:, 3]) % q
    c = (x[:, 2] * y[:, 0] + x[:, 3] * y[:, 2]) % q
    d = (x[:, 2] * y[:, 1] + x[:, 3] * y[:, 3]) % q
    return np.stack([a, b, c, d], axis=1)


def _power_py(mats, e, q):
    n = mats.shape[0]
    out = np.empty_like(mats)
    for i in range(n):
        ra, rb, rc, rd = 1, 0, 0, 1
        ba, bb, bc, bd = mats[i, 0], mats[i, 1], mats[i, 2], mats[i, 3]
        k = e
        while k > 0:
            if k & 1:
                ra, rb, rc, rd = ((ra * ba + rb * bc) % q, (ra * bb + rb * bd) % q,
                                  (rc * ba + rd * bc) % q, (rc * bb + rd * bd) % q)
            ba, bb, bc, bd = ((ba * ba + bb * bc) % q, (ba * bb + bb * bd) % q,
                              (bc * ba + bd * bc) % q, (bc * bb + bd * bd) % q)
            k >>= 1
        out[i, 0], out[i, 1], out[i, 2], out[i, 3] = ra, rb, rc, rd
    return out


def _masks_np(mats: np.ndarray, q: int) -> np.ndarray:
    """Bit ``t`` set iff projective point ``t`` is an eigenline.

    Points ``0..q-1`` are ``[1 : t]``; point ``q`` is ``[0 : 1]``.
    """
    t = np.arange(q, dtype=np.int64)
    a, b, c, d = (mats[:, k:k + 1] for k in range(4))
    # M (1, t) = (a + b t, c + d t) is parallel to (1, t)
    fixed = ((c + d * t) - t * (a + b * t)) % q == 0
    fixed = np.concatenate([fixed, (mats[:, 1:2] % q) == 0], axis=1)
    weights = np.left_shift(np.uint64(1), np.arange(q + 1, dtype=np.uint64))
    return (fixed.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)


def _masks_py(mats, q):
    n = mats.shape[0]
    out = np.zeros(n, dtype=np.uint64)
    for i in range(n):
        a, b, c, d = mats[i, 0], mats[i, 1], mats[i, 2], mats[i, 3]
        m = np.uint64(0)
        for t in range(q):
            if ((c + d * t) - t * (a + b * t)) % q == 0:
                m |= np.uint64(1) << np.uint64(t)
        if b % q == 0:
            m |= np.uint64(1) << np.uint64(q)
        out[i] = m
    return out


def _pairs_np(keys_a, masks_a, keys_b, masks_b, disjoint):
    """Pairs with equal key (and, if ``disjoint``, no shared eigenline)."""
    total = 0
    ua, ca = np.unique(np.stack([keys_a, masks_a.astype(np.int64)]), axis=1, return_counts=True)
    ub, cb = np.unique(np.stack([keys_b, masks_b.astype(np.int64)]), axis=1, return_counts=True)
    for key in np.intersect1d(ua[0], ub[0]):
        sa, sb = ua[0] == key, ub[0] == key
        if not disjoint:
            total += int(ca[sa].sum()) * int(cb[sb].sum())
            continue
        ma = ua[1][sa].astype(np.uint64)
        mb = ub[1][sb].astype(np.uint64)
        ok = (ma[:, None] & mb[None, :]) == 0
        total += int((ca[sa][:, None] * cb[sb][None, :] * ok).sum())
    return total


def _pairs_full_py(keys_a, masks_a, keys_b, masks_b, disjoint):
    total = 0
    for i in range(keys_a.shape[0]):
        if keys_a[i] < 0:
            continue
        for j in range(keys_b.shape[0]):
            if keys_a[i] == keys_b[j]:
                if not disjoint or (masks_a[i] & masks_b[j]) == 0:
                    total += 1
    return total


def _pairs_full_np(keys_a, masks_a, keys_b, masks_b, disjoint, chunk=512):
    total = 0
    live = keys_a >= 0
    keys_a, masks_a = keys_a[live], masks_a[live]
    for s in range(0, keys_a.shape[0], chunk):
        ka, ma = keys_a[s:s + chunk, None], masks_a[s:s + chunk, None]
        hit = ka == keys_b[None, :]
        if disjoint:
            hit &= (ma & masks_b[None, :]) == 0
        total += int(hit.sum())
    return total


_power_nb = njit(_power_py)
_masks_nb = njit(_masks_py)
_pairs_full_nb = njit(_pairs_full_py)


def pick(name: str):
    """Active implementation of ``power``, ``masks`` or ``pairs_full``."""
    table = {
        "power": (_power_nb, _power_np),
        "masks": (_masks_nb, _masks_np),
        "pairs_full": (_pairs_full_nb, _pairs_full_np),
    }
    fast, slow = table[name]
    return fast if HAVE_NUMBA and fast is not None else slow


def pairs_bucketed(keys_a, masks_a, keys_b, masks_b, disjoint):
    """Join through distinct (key, mask) values; negative keys are skipped."""
    la, lb = keys_a >= 0, keys_b >= 0
    return _pairs_np(keys_a[la], masks_a[la], keys_b[lb], masks_b[lb], disjoint)
