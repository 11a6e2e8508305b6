"""Rooted ordered trees stored as 1-based parent arrays.

The root always has rank 1 and ``parent[1] = 0``; slot 0 is a reserved
dummy vertex.  A tree is *BFS-monotone* when ranks are assigned level by
level with the children of lower-ranked vertices preceding those of
higher-ranked ones; for a valid tree this is equivalent to
``parent[2] <= parent[3] <= ... <= parent[n]``, which is how the flag is
computed.  The bottom-up domination algorithm requires this order;
arbitrary trees are accepted here and canonicalized on demand.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .errors import (
    CycleDetected,
    DanglingParentRank,
    InvalidPrefix,
    MalformedHeader,
    MultipleRoots,
    SequenceEntryOutOfRange,
    TokenCountMismatch,
    WrongTotal,
)

__all__ = [
    "RootedTree",
    "DegreeSequence",
    "from_parent_array",
    "bfs_canonicalize",
    "from_pruefer",
    "from_lukasiewicz",
    "serialize",
    "parse",
    "lukasiewicz_of",
    "iter_lukasiewicz_sequences",
    "path_tree",
    "star_tree",
]


def _readonly(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class RootedTree:
    """Immutable rooted ordered tree.

    ``parent`` has length n+1 (slot 0 is the dummy vertex), children are
    stored CSR-style sorted ascending by rank, and ``depth`` caches the
    distance to the root.  ``orig_labels``, when present, maps each rank to
    the vertex label the tree carried before canonicalization (used by the
    Pruefer decoder).
    """

    n: int
    parent: np.ndarray
    child_start: np.ndarray
    child_list: np.ndarray
    depth: np.ndarray
    bfs_monotone: bool
    orig_labels: np.ndarray | None = field(default=None, compare=False)

    def children(self, v: int) -> np.ndarray:
        return self.child_list[self.child_start[v]:self.child_start[v + 1]]

    def is_leaf(self, v: int) -> bool:
        return self.child_start[v] == self.child_start[v + 1]

    def neighbors(self, v: int) -> list[int]:
        nbs = [int(c) for c in self.children(v)]
        if v != 1:
            nbs.append(int(self.parent[v]))
        return nbs

    def subtree_sizes(self) -> np.ndarray:
        """Size of the maximal subtree below every vertex."""
        size = np.ones(self.n + 1, np.int64)
        size[0] = 0
        order = K.bfs_order(self.child_start, self.child_list, self.n)
        for v in order[::-1]:
            if v != 1:
                size[self.parent[v]] += size[v]
        return size

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootedTree):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.parent, other.parent))

    def __hash__(self):
        return hash((self.n, self.parent.tobytes()))

    def __repr__(self):
        return f"RootedTree(n={self.n}, bfs_monotone={self.bfs_monotone})"


def _build(parent: np.ndarray, orig_labels: np.ndarray | None = None) -> RootedTree:
    """Derive caches from an already-validated parent array."""
    n = parent.shape[0] - 1
    counts = np.bincount(parent[2:], minlength=n + 1)
    child_start = np.zeros(n + 2, np.int64)
    child_start[1:] = np.cumsum(counts)
    # stable sort keeps children ascending within each parent block
    child_list = np.argsort(parent[2:], kind="stable").astype(np.int64) + 2
    depth, bad = K.depths(parent)
    if bad != -1:
        raise CycleDetected(f"parent chain through vertex {int(bad)} is cyclic")
    monotone = n <= 2 or bool(np.all(np.diff(parent[2:]) >= 0))
    return RootedTree(
        n=n,
        parent=_readonly(parent),
        child_start=_readonly(child_start),
        child_list=_readonly(child_list),
        depth=_readonly(depth),
        bfs_monotone=monotone,
        orig_labels=_readonly(orig_labels) if orig_labels is not None else None,
    )


def from_parent_array(raw) -> RootedTree:
    """Validate a parent-rank sequence (entry i is the parent of vertex i+1).

    Raises DanglingParentRank, MultipleRoots or CycleDetected on invalid
    input; ``raw[0]`` must be 0 (rank 1 is the root by convention).
    """
    arr = np.asarray(raw, dtype=np.int64).ravel()
    n = arr.shape[0]
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    if arr[0] != 0:
        raise ValueError("vertex 1 must be the root (first parent rank must be 0)")
    if np.any(arr < 0) or np.any(arr > n):
        bad = int(np.argmax((arr < 0) | (arr > n)))
        raise DanglingParentRank(
            f"parent rank {int(arr[bad])} of vertex {bad + 1} outside [0, {n}]"
        )
    if n > 1 and np.any(arr[1:] == 0):
        extra = int(np.argmax(arr[1:] == 0)) + 2
        raise MultipleRoots(f"vertex {extra} also has parent rank 0")
    parent = np.zeros(n + 1, np.int64)
    parent[1:] = arr
    return _build(parent)


def bfs_canonicalize(tree: RootedTree) -> tuple[RootedTree, np.ndarray]:
    """Relabel ranks level by level (parent-rank order, then child order).

    Returns the canonical tree together with the permutation ``perm`` where
    ``perm[old_rank] = new_rank`` (and ``perm[0] = 0``).  Idempotent: a
    BFS-monotone tree maps to itself under the identity permutation.
    """
    n = tree.n
    order = K.bfs_order(tree.child_start, tree.child_list, n)
    perm = np.zeros(n + 1, np.int64)
    perm[order] = np.arange(1, n + 1, dtype=np.int64)
    new_parent = np.zeros(n + 1, np.int64)
    new_parent[perm[1:]] = perm[tree.parent[1:]]
    orig = None
    if tree.orig_labels is not None:
        orig = np.zeros(n + 1, np.int64)
        orig[perm[1:]] = tree.orig_labels[1:]
    return _build(new_parent, orig), _readonly(perm)


def from_pruefer(seq, root: int) -> RootedTree:
    """Decode a Pruefer sequence, root the tree, and canonicalize ranks.

    ``seq`` has n-2 entries in [1, n] (empty for n = 2).  The original
    vertex labels survive in ``orig_labels``.
    """
    arr = np.asarray(seq, dtype=np.int64).ravel()
    n = arr.shape[0] + 2
    if np.any(arr < 1) or np.any(arr > n):
        bad = int(arr[np.argmax((arr < 1) | (arr > n))])
        raise SequenceEntryOutOfRange(f"entry {bad} outside [1, {n}]")
    if not 1 <= root <= n:
        raise SequenceEntryOutOfRange(f"root {root} outside [1, {n}]")
    eu, ev = K.pruefer_edges(arr, n)
    # CSR adjacency sorted ascending, both directions of every edge
    heads = np.concatenate([eu, ev])
    tails = np.concatenate([ev, eu])
    order = np.argsort(heads * np.int64(n + 1) + tails, kind="stable")
    adj_list = tails[order]
    adj_start = np.zeros(n + 2, np.int64)
    adj_start[1:] = np.cumsum(np.bincount(heads, minlength=n + 1))
    parent, orig = K.bfs_from_adjacency(adj_start, adj_list, root, n)
    return _build(parent, orig)


@dataclass(frozen=True)
class DegreeSequence:
    """Preorder outdegree sequence of an ordered rooted tree."""

    degs: np.ndarray

    @classmethod
    def validate(cls, seq) -> "DegreeSequence":
        degs = np.asarray(seq, dtype=np.int64).ravel()
        n = degs.shape[0]
        if n < 1:
            raise ValueError("empty degree sequence")
        if np.any(degs < 0):
            raise ValueError("outdegrees must be nonnegative")
        total = int(degs.sum())
        if total != n - 1:
            raise WrongTotal(f"degrees sum to {total}, expected {n - 1}")
        walk = np.cumsum(degs)
        short = walk[:-1] < np.arange(1, n)
        if np.any(short):
            k = int(np.argmax(short)) + 1
            raise InvalidPrefix(f"prefix of length {k} sums to {int(walk[k - 1])} < {k}")
        return cls(degs=_readonly(degs))

    def outdegree_tally(self) -> np.ndarray:
        """Count of vertices per outdegree value."""
        return np.bincount(self.degs)


def from_lukasiewicz(degs) -> RootedTree:
    """Ordered tree whose depth-first outdegrees are ``degs``, canonicalized."""
    ds = degs if isinstance(degs, DegreeSequence) else DegreeSequence.validate(degs)
    parent = K.lukasiewicz_parent(ds.degs)
    tree, _ = bfs_canonicalize(_build(parent))
    return tree


def lukasiewicz_of(tree: RootedTree) -> np.ndarray:
    """Preorder outdegree sequence (children visited in rank order)."""
    n = tree.n
    out = np.empty(n, np.int64)
    stack = [1]
    k = 0
    while stack:
        v = stack.pop()
        ch = tree.children(v)
        out[k] = ch.shape[0]
        k += 1
        stack.extend(int(c) for c in ch[::-1])
    return out


def serialize(tree: RootedTree) -> str:
    """Two-line text form: vertex count, then the n parent ranks."""
    return f"{tree.n}\n{' '.join(str(int(p)) for p in tree.parent[1:])}\n"


def parse(text: str) -> RootedTree:
    """Inverse of :func:`serialize`; raises MalformedHeader/TokenCountMismatch."""
    lines = text.split("\n")
    if not lines or not lines[0].strip():
        raise MalformedHeader("missing vertex count line")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise MalformedHeader(f"bad vertex count {lines[0].strip()!r}") from None
    if n < 1:
        raise MalformedHeader(f"vertex count {n} must be positive")
    body = " ".join(lines[1:]).split()
    if len(body) != n:
        raise TokenCountMismatch(f"expected {n} parent ranks, found {len(body)}")
    try:
        ranks = [int(t) for t in body]
    except ValueError as exc:
        raise TokenCountMismatch(f"non-integer parent rank: {exc}") from None
    return from_parent_array(ranks)


def iter_lukasiewicz_sequences(n: int):
    """Yield every valid preorder outdegree sequence of length n as a tuple.

    There are Catalan(n-1) of them, one per ordered rooted tree of order n.
    """
    if n < 1:
        return
    seq = [0] * n

    def rec(pos, open_slots, remaining):
        if pos == n:
            yield tuple(seq)
            return
        slots_after = n - pos - 1
        # d children keep the walk alive: open-1+d slots must cover the rest
        for d in range(remaining + 1):
            new_open = open_slots - 1 + d
            if new_open < (1 if pos < n - 1 else 0):
                continue
            if new_open > slots_after:
                continue
            if remaining - d > 0 and new_open == 0:
                continue
            seq[pos] = d
            yield from rec(pos + 1, new_open, remaining - d)

    yield from rec(0, 1, n - 1)


def path_tree(n: int) -> RootedTree:
    """Path on n vertices rooted at one end (already canonical)."""
    parent = np.arange(-1, n, dtype=np.int64)
    parent[0] = 0
    parent[1] = 0
    return _build(parent)


def star_tree(k: int) -> RootedTree:
    """Star with k leaves rooted at the center."""
    parent = np.zeros(k + 2, np.int64)
    parent[2:] = 1
    return _build(parent)
