"""Minimum word break: fewest dictionary words that concatenate to each text prefix.

Words are grouped by scale ``q`` (lengths in ``[q, 2q-1]``) and each scale
gets a trie over its reversed words.  A maximal family of node-disjoint
downward paths, each holding exactly ``lam`` marked (word-end) nodes, lets a
query walk at most ``2 lam`` marked ancestors before it can hand the rest of
the root path to one selected-entry binary (min,+)-convolution per path.

For a unary alphabet this is exactly change-making, with the text length
as the target and the word lengths as coins.
"""

from dataclasses import dataclass, field

import numpy as np

from .convkit import INF, minplus_binary_convolve_selected
from .corekit import ValidationError
from .topk_dp import icbrt_ceil

ORACLE_BUDGET = 10 ** 7


@dataclass(frozen=True)
class WordBreakInstance:
    text: bytes
    words: tuple

    @property
    def n(self):
        return len(self.text)

    @property
    def m(self):
        return sum(len(w) for w in self.words)


def make_instance(text, words):
    """Validate and deduplicate; words must be nonempty byte strings."""
    if isinstance(text, str):
        text = text.encode()
    seen = []
    for w in words:
        if isinstance(w, str):
            w = w.encode()
        if not w:
            raise ValidationError("dictionary words must be nonempty")
        seen.append(bytes(w))
    return WordBreakInstance(bytes(text), tuple(sorted(set(seen))))


def parse_dictionary(data):
    """One word per line, bytes verbatim; a trailing newline is optional."""
    lines = data.split(b"\n")
    if lines and lines[-1] == b"":
        lines.pop()
    for k, w in enumerate(lines, 1):
        if not w:
            raise ValidationError(f"line {k}, column 1: empty word")
    return lines


@dataclass
class TriePath:
    top: int
    nodes: tuple          # top first, going down
    bvec: np.ndarray      # bvec[e] == 1 iff the root path node at depth q+e is marked


@dataclass
class ScaleTrie:
    q: int
    lam: int
    children: list = field(default_factory=list)
    depth: list = field(default_factory=list)
    parent: list = field(default_factory=list)
    marked: list = field(default_factory=list)
    lma: list = field(default_factory=list)      # nearest marked strict ancestor, -1 if none
    paths: list = field(default_factory=list)
    top_of: dict = field(default_factory=dict)   # node -> index into paths

    def _new(self, par, d):
        self.children.append({})
        self.depth.append(d)
        self.parent.append(par)
        self.marked.append(False)
        return len(self.children) - 1

    @property
    def marked_count(self):
        return sum(self.marked)


def build_scale_trie(words, q, lam):
    """Trie over reversed words with length in ``[q, 2q-1]`` plus its path family."""
    if q < 1 or q & (q - 1):
        raise ValueError("scale must be a power of two")
    if lam < 1:
        raise ValueError("lam must be positive")
    trie = ScaleTrie(q, lam)
    trie._new(-1, 0)
    for w in words:
        if not q <= len(w) <= 2 * q - 1:
            continue
        node = 0
        for c in reversed(w):
            nxt = trie.children[node].get(c)
            if nxt is None:
                nxt = trie._new(node, trie.depth[node] + 1)
                trie.children[node][c] = nxt
            node = nxt
        trie.marked[node] = True

    size = len(trie.children)
    # nodes are created after their parents, so index order is a preorder
    trie.lma = [-1] * size
    for v in range(1, size):
        p = trie.parent[v]
        trie.lma[v] = p if trie.marked[p] else trie.lma[p]

    # pend[v]: unassigned marked nodes on the chain hanging from v
    pend = [0] * size
    down = [-1] * size
    for v in range(size - 1, -1, -1):
        best, via = 0, -1
        for c in trie.children[v].values():
            if pend[c] > best:
                best, via = pend[c], c
        down[v] = via
        pend[v] = best + trie.marked[v]
        if trie.marked[v] and pend[v] == lam:
            nodes = [v]
            left = lam - 1
            w = v
            while left:
                w = down[w]
                nodes.append(w)
                left -= trie.marked[w]
            trie.top_of[v] = len(trie.paths)
            trie.paths.append(TriePath(v, tuple(nodes), _depth_indicator(trie, v)))
            pend[v] = 0
    return trie


def _depth_indicator(trie, top):
    q = trie.q
    bvec = np.full(q, INF, dtype=np.int64)
    w = top
    while w > 0:
        if trie.marked[w]:
            bvec[trie.depth[w] - q] = 1
        w = trie.parent[w]
    return bvec


def walk_steps(trie, v):
    """Marked nodes a query starting at node ``v`` visits before stopping."""
    w = v if trie.marked[v] else trie.lma[v]
    steps = 0
    while w > 0:
        steps += 1
        if w in trie.top_of:
            break
        w = trie.lma[w]
    return steps


def audit_scale_trie(trie):
    """Check the path family: disjoint, downward, exactly ``lam`` marked nodes each, walks bounded."""
    seen = set()
    for path in trie.paths:
        nodes = path.nodes
        if seen.intersection(nodes):
            raise AssertionError("paths overlap")
        seen.update(nodes)
        if sum(trie.marked[v] for v in nodes) != trie.lam:
            raise AssertionError("path does not hold exactly lam marked nodes")
        if not (trie.marked[nodes[0]] and trie.marked[nodes[-1]]):
            raise AssertionError("path must start and end at marked nodes")
        for a, b in zip(nodes, nodes[1:]):
            if trie.parent[b] != a:
                raise AssertionError("path is not a downward path")
    if len(trie.paths) * trie.lam > trie.marked_count:
        raise AssertionError("more path nodes than marked nodes")
    for v in range(len(trie.children)):
        if trie.marked[v] and not trie.q <= trie.depth[v] <= 2 * trie.q - 1:
            raise AssertionError("marked node outside the scale's depth range")
        if walk_steps(trie, v) > 2 * trie.lam:
            raise AssertionError(f"walk from node {v} exceeds {2 * trie.lam} marked steps")
    return True


def _deepest(trie, text, i):
    # descend with text[i-1], text[i-2], ... (0-based bytes)
    node = 0
    children = trie.children
    stop = max(i - (2 * trie.q - 1), 0)
    for p in range(i - 1, stop - 1, -1):
        nxt = children[node].get(text[p])
        if nxt is None:
            break
        node = nxt
    return node


def jump_query(trie, text, x, s_in, stats=None):
    """Costs contributed by this scale's words to positions ``x+1 .. x+q``.

    ``s_in[k]`` is the final prefix cost at position ``x - 2q + 1 + k``
    (INF for negative positions).  Returns an array of length ``q``; entries
    past the end of the text stay INF.
    """
    q = trie.q
    if x % q:
        raise ValueError("x must be a multiple of q")
    s_in = np.asarray(s_in, dtype=np.int64)
    if len(s_in) != 2 * q:
        raise ValueError("s_in must cover [x - 2q + 1, x]")
    base = x - 2 * q + 1
    out = np.full(q, INF, dtype=np.int64)
    requests = {}
    n = len(text)
    for i in range(x + 1, min(x + q, n) + 1):
        v = _deepest(trie, text, i)
        w = v if trie.marked[v] else trie.lma[v]
        best = INF
        steps = 0
        while w > 0:
            steps += 1
            val = s_in[i - trie.depth[w] - base]
            if val + 1 < best:
                best = val + 1
            k = trie.top_of.get(w)
            if k is not None:
                requests.setdefault(k, []).append(i)
                break
            w = trie.lma[w]
        if stats is not None:
            stats.note_walk(q, steps)
        out[i - x - 1] = best
    for k in sorted(requests):
        idx = requests[k]
        if stats is not None:
            stats.path_requests += len(idx)
        got = minplus_binary_convolve_selected(s_in, trie.paths[k].bvec, [i - x + q - 1 for i in idx])
        for i in idx:
            val = got[i - x + q - 1]
            if val < out[i - x - 1]:
                out[i - x - 1] = val
    return out


@dataclass
class WordBreakStats:
    """Instrumentation for a ``min_word_break`` run."""

    lam: dict = field(default_factory=dict)
    max_walk: dict = field(default_factory=dict)
    queries: int = 0
    path_requests: int = 0

    def note_walk(self, q, steps):
        if steps > self.max_walk.get(q, 0):
            self.max_walk[q] = steps

    def walks_bounded(self):
        return all(s <= 2 * self.lam[q] for q, s in self.max_walk.items())


def scales(words, n):
    """Powers of two ``q <= n`` whose length range ``[q, 2q-1]`` holds some word."""
    lengths = {len(w) for w in words}
    out = []
    q = 1
    while q <= n:
        if any(q <= L <= 2 * q - 1 for L in lengths):
            out.append(q)
        q *= 2
    return out


def min_word_break(inst, lam=None, stats=None, check_finality=False):
    """Prefix cost array ``S[0..n]`` (INF where a prefix cannot be covered).

    ``lam`` overrides the per-path marked-node count (default ``ceil(m^(1/3))``).
    With ``check_finality`` every window handed to a jump query is recorded
    and compared with the final array at the end.
    """
    text = inst.text
    n = len(text)
    s = np.full(n + 1, INF, dtype=np.int64)
    s[0] = 0
    if lam is None:
        lam = max(1, icbrt_ceil(inst.m))
    tries = [build_scale_trie(inst.words, q, lam) for q in scales(inst.words, n)]
    if stats is not None:
        for tr in tries:
            stats.lam[tr.q] = lam
    reads = []
    for x in range(n):
        for tr in tries:
            q = tr.q
            if x % q:
                continue
            lo = x - 2 * q + 1
            s_in = np.full(2 * q, INF, dtype=np.int64)
            start = max(lo, 0)
            s_in[start - lo:] = s[start:x + 1]
            if check_finality:
                reads.append((start, s_in[start - lo:].copy()))
            got = jump_query(tr, text, x, s_in, stats)
            hi = min(x + q, n)
            np.minimum(s[x + 1:hi + 1], got[:hi - x], out=s[x + 1:hi + 1])
            if stats is not None:
                stats.queries += 1
    if check_finality:
        for start, vals in reads:
            if not np.array_equal(s[start:start + len(vals)], vals):
                raise AssertionError(f"a jump query read a non-final entry near position {start}")
    return s


def naive_word_break(inst, budget=ORACLE_BUDGET):
    """Straightforward DP by comparing every word against every prefix end (test oracle)."""
    if inst.n * inst.m > budget:
        raise ValidationError(f"n*m = {inst.n * inst.m} exceeds the oracle budget {budget}")
    text = inst.text
    s = [INF] * (inst.n + 1)
    s[0] = 0
    for i in range(1, inst.n + 1):
        for w in inst.words:
            L = len(w)
            if L <= i and s[i - L] != INF and text[i - L:i] == w and s[i - L] + 1 < s[i]:
                s[i] = s[i - L] + 1
    return s
