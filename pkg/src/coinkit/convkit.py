"""Exact convolution kernels.

Boolean convolution is done as an exact integer convolution followed by
thresholding.  Dense operands go through a radix-2 number-theoretic
transform modulo ``NTT_PRIME``; when one operand has only a handful of set
bits the product is formed by OR-ing shifted copies instead, which is the
same exact result with far less work.

The (min,+)-convolution kernels handle the binary case where the second
operand only holds 1 or ``INF``.  Finite entries of the first operand are
ranked (ties broken by index), split into rank buckets, and each bucket
mask is boolean-convolved with the support of the second operand.  For an
output index the first bucket that reaches it holds the minimum, which is
then found by scanning that bucket in rank order.
"""

import math
from functools import lru_cache

import numpy as np
from numba import njit

from .work import tally

# Top of the cost domain.  Two INF values still add without int64 overflow.
INF = (1 << 62) - 1

# 119 * 2**23 + 1 with primitive root 3: transforms up to 2**23 points, and
# every boolean-convolution coefficient is bounded by the shorter operand's
# length, so no coefficient can wrap.
NTT_PRIME = 998244353
NTT_ROOT = 3
NTT_MAX_LEN = 1 << 23

# Operands with at most this many set bits are convolved by shift-OR.
SPARSE_LIMIT = 64


def sat_add(a, b):
    """Saturating addition for cost arrays (INF absorbs)."""
    return np.minimum(np.asarray(a, dtype=np.int64) + b, INF)


@lru_cache(maxsize=None)
def _bitrev(n):
    bits = n.bit_length() - 1
    idx = np.arange(n, dtype=np.int64)
    rev = np.zeros(n, dtype=np.int64)
    for b in range(bits):
        rev |= ((idx >> b) & 1) << (bits - 1 - b)
    return rev


@lru_cache(maxsize=None)
def _twiddles(n, invert):
    """Stage twiddles for h = 1, 2, 4, ... concatenated (stage h starts at h - 1)."""
    flat = np.ones(max(n - 1, 1), dtype=np.int64)
    h = 1
    while h < n:
        w = pow(NTT_ROOT, (NTT_PRIME - 1) // (2 * h), NTT_PRIME)
        if invert:
            w = pow(w, NTT_PRIME - 2, NTT_PRIME)
        pows = np.ones(1, dtype=np.int64)
        while len(pows) < h:
            step = pow(w, len(pows), NTT_PRIME)
            pows = np.concatenate((pows, pows * step % NTT_PRIME))
        flat[h - 1:2 * h - 1] = pows
        h *= 2
    return flat


@njit(cache=True)
def _ntt_rows(a, rev, tw, scale):
    p = NTT_PRIME
    rows, n = a.shape
    for r in range(rows):
        row = a[r]
        for i in range(n):
            j = rev[i]
            if i < j:
                row[i], row[j] = row[j], row[i]
        h = 1
        while h < n:
            for start in range(0, n, 2 * h):
                for k in range(h):
                    x = row[start + k]
                    y = row[start + k + h] * tw[h - 1 + k] % p
                    row[start + k] = (x + y) % p
                    row[start + k + h] = (x - y + p) % p
            h *= 2
        if scale != 1:
            for i in range(n):
                row[i] = row[i] * scale % p


def ntt(a, invert=False):
    """Radix-2 NTT over the last axis (length must be a power of two)."""
    a = np.asarray(a, dtype=np.int64)
    n = a.shape[-1]
    if n & (n - 1):
        raise ValueError(f"NTT length {n} is not a power of two")
    if n > NTT_MAX_LEN:
        raise ValueError(f"NTT length {n} exceeds {NTT_MAX_LEN}")
    out = np.ascontiguousarray(a % NTT_PRIME).reshape(-1, n)
    scale = pow(n, NTT_PRIME - 2, NTT_PRIME) if invert else 1
    _ntt_rows(out, _bitrev(n), _twiddles(n, invert), scale)
    return out.reshape(a.shape)


def _ntt_counts(rows, b):
    """Exact integer convolution of each row of ``rows`` with ``b``."""
    out_len = rows.shape[-1] + len(b) - 1
    size = 1 << max(out_len - 1, 1).bit_length()
    fa = np.zeros(rows.shape[:-1] + (size,), dtype=np.int64)
    fa[..., : rows.shape[-1]] = rows
    fb = np.zeros(size, dtype=np.int64)
    fb[: len(b)] = b
    prod = ntt(fa) * ntt(fb) % NTT_PRIME
    return ntt(prod, invert=True)[..., :out_len]


def _bool_conv_rows(rows, b):
    """Boolean convolution of every row of a 2-D mask with the mask ``b``."""
    g, la = rows.shape
    out_len = la + len(b) - 1
    nz = np.flatnonzero(b)
    if len(nz) <= SPARSE_LIMIT:
        out = np.zeros((g, out_len), dtype=bool)
        for e in nz:
            out[:, e:e + la] |= rows
        return out
    return _ntt_counts(rows.astype(np.int64), b.astype(np.int64)) > 0


def _as_bool(a, name):
    arr = np.asarray(a)
    if arr.ndim != 1 or len(arr) == 0:
        raise ValueError(f"{name} must be a nonempty 1-D array")
    if arr.dtype != bool:
        if not np.isin(arr, (0, 1)).all():
            raise ValueError(f"{name} entries must be 0 or 1")
        arr = arr.astype(bool)
    return arr


def boolean_convolve(a, b, truncate_len=None, counter=None):
    """First ``truncate_len`` entries of the boolean convolution of ``a`` and ``b``.

    The full length ``len(a) + len(b) - 1`` is used when ``truncate_len``
    is omitted.
    """
    a = _as_bool(a, "a")
    b = _as_bool(b, "b")
    full = len(a) + len(b) - 1
    if truncate_len is None:
        truncate_len = full
    if truncate_len <= 0:
        raise ValueError("truncate_len must be positive")
    if truncate_len > full:
        raise ValueError(f"truncate_len {truncate_len} exceeds {full}")
    # only entries below truncate_len can reach the kept prefix
    a = a[:truncate_len]
    b = b[:truncate_len]
    if np.count_nonzero(a) < np.count_nonzero(b):
        a, b = b, a
    out = _bool_conv_rows(a[None, :], b)[0]
    tally(counter, len(out))
    res = np.zeros(truncate_len, dtype=bool)
    keep = min(truncate_len, len(out))
    res[:keep] = out[:keep]
    return res


def _check_binary(b):
    b = np.asarray(b, dtype=np.int64)
    if b.ndim != 1 or len(b) == 0:
        raise ValueError("b must be a nonempty 1-D array")
    if not ((b == 1) | (b == INF)).all():
        raise ValueError("binary operand entries must be 1 or INF")
    return b


def _check_costs(a):
    a = np.asarray(a, dtype=np.int64)
    if a.ndim != 1 or len(a) == 0:
        raise ValueError("a must be a nonempty 1-D array")
    if (a < 0).any():
        raise ValueError("cost entries must be nonnegative")
    return np.minimum(a, INF)


@njit(cache=True)
def _selected_sparse(a, bpos, lb, wanted, out):
    """Bucketed binary (min,+) kernel for a second operand with few finite entries.

    ``bpos`` lists the finite positions of the second operand (length ``lb``).
    Fills ``out`` and returns the work spent.
    """
    la = a.shape[0]
    r = 0
    for i in range(la):
        if a[i] != INF:
            r += 1
    if r == 0 or bpos.shape[0] == 0 or wanted.shape[0] == 0:
        return 0
    finite = np.empty(r, dtype=np.int64)
    r = 0
    for i in range(la):
        if a[i] != INF:
            finite[r] = i
            r += 1
    order = finite[np.argsort(a[finite], kind="mergesort")]

    tw = wanted.shape[0]
    buckets = int(np.sqrt(tw - 1)) + 1
    while buckets * buckets < tw:
        buckets += 1
    while (buckets - 1) * (buckets - 1) >= tw:
        buckets -= 1
    buckets = min(buckets, r)
    size = (r + buckets - 1) // buckets
    buckets = (r + size - 1) // size

    width = la + lb - 1
    hits = np.zeros((buckets, width), dtype=np.bool_)
    for rank in range(r):
        k = rank // size
        i = order[rank]
        for e in bpos:
            hits[k, i + e] = True
    bfin = np.zeros(lb, dtype=np.bool_)
    for e in bpos:
        bfin[e] = True

    work = buckets * width
    for w_idx in range(tw):
        w = wanted[w_idx]
        for k in range(buckets):
            if hits[k, w]:
                stop = min((k + 1) * size, r)
                for rank in range(k * size, stop):
                    i = order[rank]
                    e = w - i
                    work += 1
                    if 0 <= e < lb and bfin[e]:
                        out[w_idx] = a[i] + 1
                        break
                break
    return work


def _selected_dense(a, bmask, wanted, out, counter):
    finite = np.flatnonzero(a != INF)
    r = len(finite)
    if r == 0:
        return
    order = finite[np.argsort(a[finite], kind="stable")]
    buckets = min(math.isqrt(len(wanted) - 1) + 1, r)
    size = -(-r // buckets)
    buckets = -(-r // size)

    masks = np.zeros((buckets, len(a)), dtype=bool)
    masks[np.arange(r) // size, order] = True
    hits = _bool_conv_rows(masks, bmask)[:, wanted]
    tally(counter, buckets * (len(a) + len(bmask) - 1))

    reached = hits.any(axis=0)
    first = hits.argmax(axis=0)
    lb = len(bmask)
    for k in np.unique(first[reached]):
        sel = np.flatnonzero(reached & (first == k))
        members = order[k * size:(k + 1) * size]
        idx = wanted[sel, None] - members[None, :]
        ok = (idx >= 0) & (idx < lb)
        ok &= bmask[np.clip(idx, 0, lb - 1)]
        col = ok.argmax(axis=1)
        out[sel] = a[members[col]] + 1
        tally(counter, len(sel) * len(members))


def _selected(a, b, wanted, counter=None):
    """Core of the binary (min,+) kernel; ``wanted`` is an int64 index array."""
    out = np.full(len(wanted), INF, dtype=np.int64)
    if len(wanted) == 0:
        return out
    bmask = b != INF
    bpos = np.flatnonzero(bmask)
    if len(bpos) == 0:
        return out
    if len(bpos) <= SPARSE_LIMIT:
        tally(counter, _selected_sparse(a, bpos, len(b), wanted, out))
    else:
        _selected_dense(a, bmask, wanted, out, counter)
    return out


def minplus_binary_convolve(a, b, counter=None):
    """Full (min,+)-convolution of a cost array with a {1, INF} array.

    >>> minplus_binary_convolve([0, 2, 1], [1, INF, 1]).tolist()
    [1, 3, 1, 3, 2]
    """
    a = _check_costs(a)
    b = _check_binary(b)
    wanted = np.arange(len(a) + len(b) - 1, dtype=np.int64)
    return _selected(a, b, wanted, counter)


def minplus_binary_convolve_selected(a, b, wanted, counter=None):
    """Selected entries of ``minplus_binary_convolve(a, b)`` as ``{index: cost}``.

    Uses about sqrt(len(wanted)) rank buckets, so asking for few entries
    costs proportionally less than the full convolution.
    """
    a = _check_costs(a)
    b = _check_binary(b)
    last = len(a) + len(b) - 2
    wanted = [int(w) for w in wanted]
    for w in wanted:
        if w < 0 or w > last:
            raise IndexError(f"output index {w} outside [0, {last}]")
    if not wanted:
        return {}
    uniq = np.array(sorted(set(wanted)), dtype=np.int64)
    vals = _selected(a, b, uniq, counter)
    return {int(w): int(v) for w, v in zip(uniq, vals)}


def naive_minplus(a, b):
    """Quadratic (min,+)-convolution with saturating addition (test oracle)."""
    a = [min(int(x), INF) for x in a]
    b = [min(int(x), INF) for x in b]
    out = [INF] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == INF:
            continue
        for j, y in enumerate(b):
            if y != INF and x + y < out[i + j]:
                out[i + j] = x + y
    return out
