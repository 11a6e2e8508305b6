"""Minimum paired domination on trees.

``gamma_pr_linear`` runs the O(n) bottom-up algorithm on a BFS-monotone
tree and reports the selected set, its pairing, the per-vertex B/F/R/P
labels, the R-count ``phi`` and ``gamma_pr``.  ``label_recursive`` computes
the same labels purely from children's labels, ``gamma_pr_bruteforce`` is
an independent exhaustive oracle for small trees, and ``build_fixtures``
constructs the standard variance-positivity tree family.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .errors import NotCanonical, SingleVertex, TooLarge
from .trees import RootedTree, bfs_canonicalize, from_lukasiewicz

__all__ = [
    "PDResult",
    "gamma_pr_linear",
    "label_recursive",
    "phi_from_labels",
    "gamma_from_labels",
    "verify_pd_set",
    "gamma_pr_bruteforce",
    "build_fixtures",
    "LABEL_CHARS",
]

LABEL_CHARS = np.array(["B", "F", "R", "P"])


def _labels_to_chars(codes: np.ndarray) -> np.ndarray:
    out = np.empty(codes.shape[0], dtype="<U1")
    out[0] = ""
    out[1:] = LABEL_CHARS[codes[1:]]
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class PDResult:
    """Output of the linear algorithm.

    ``pairing[v]`` is the partner rank of a selected vertex, 0 otherwise.
    ``labels`` holds one of 'B', 'F', 'R', 'P' per rank (index 0 unused).
    """

    in_pd_set: np.ndarray
    dom_by_child: np.ndarray
    pairing: np.ndarray
    labels: np.ndarray
    phi: int
    gamma_pr: int

    @property
    def members(self) -> list[int]:
        return [int(v) for v in np.flatnonzero(self.in_pd_set[1:]) + 1]

    @property
    def pairs(self) -> list[tuple[int, int]]:
        out = []
        for v in self.members:
            w = int(self.pairing[v])
            if v < w:
                out.append((v, w))
        return out

    @property
    def root_label(self) -> str:
        return str(self.labels[1])


def gamma_pr_linear(tree: RootedTree) -> PDResult:
    """Minimum paired dominating set of a BFS-monotone tree in O(n).

    Raises SingleVertex for n = 1 (the quantity is undefined there) and
    NotCanonical when ranks are not BFS-monotone; canonicalize first.
    """
    if tree.n == 1:
        raise SingleVertex("paired domination needs at least two vertices")
    if not tree.bfs_monotone:
        raise NotCanonical("ranks are not BFS-monotone; apply bfs_canonicalize")
    in_pd, dom, partner, codes = K.pd_algorithm(
        tree.parent, tree.child_start, tree.child_list
    )
    phi = int(np.count_nonzero(codes[1:] == K.LABEL_R))
    gamma = int(np.count_nonzero(in_pd[1:]))
    for a in (in_pd, dom, partner):
        a.flags.writeable = False
    return PDResult(
        in_pd_set=in_pd,
        dom_by_child=dom,
        pairing=partner,
        labels=_labels_to_chars(codes),
        phi=phi,
        gamma_pr=gamma,
    )


def label_recursive(tree: RootedTree) -> np.ndarray:
    """B/F/R/P labels from the bottom-up characterization.

    A vertex is P with an R-child, else R with a B-child, else F with a
    P-child, else B (leaves included).  Works on any valid tree, including
    a single vertex (labelled B).
    """
    order = np.argsort(tree.depth[1:], kind="stable")[::-1].astype(np.int64) + 1
    codes = K.recursive_labels(tree.parent, order)
    return _labels_to_chars(codes)


def phi_from_labels(labels) -> int:
    """Number of R-labelled vertices."""
    arr = np.asarray(labels)
    return int(np.count_nonzero(arr == "R"))


def gamma_from_labels(labels) -> int:
    """2*phi, plus 2 when the root is labelled B.

    For a single vertex the formula still evaluates (to 2) although the
    quantity itself is undefined there; a warning flags that case.
    """
    arr = np.asarray(labels)
    n = arr.shape[0] - 1
    if n == 1:
        warnings.warn(
            "gamma_pr is undefined for a single vertex; returning the formula value",
            stacklevel=2,
        )
    phi = phi_from_labels(arr)
    return 2 * phi + (2 if arr[1] == "B" else 0)


def verify_pd_set(tree: RootedTree, members, pairing) -> tuple[bool, str | None]:
    """Check that ``members`` with ``pairing`` is a valid paired dominating set.

    ``pairing`` may be a partner array (0 = unpaired) or a dict defined
    exactly on the members.  Returns ``(True, None)`` or ``(False, reason)``
    with reason one of OddMember, NotInvolution, PairNotAdjacent,
    NotDominating.
    """
    mem = {int(v) for v in members}
    if isinstance(pairing, dict):
        pmap = {int(k): int(v) for k, v in pairing.items()}
    else:
        arr = np.asarray(pairing)
        pmap = {v: int(arr[v]) for v in range(1, tree.n + 1) if arr[v] != 0}
    if len(mem) % 2 == 1:
        return False, "OddMember"
    if set(pmap) != mem:
        return False, "NotInvolution"
    for v, w in pmap.items():
        if w == v or w not in mem or pmap.get(w) != v:
            return False, "NotInvolution"
    for v, w in pmap.items():
        if tree.parent[v] != w and tree.parent[w] != v:
            return False, "PairNotAdjacent"
    covered = np.zeros(tree.n + 1, bool)
    for v in mem:
        covered[tree.parent[v]] = True
        covered[tree.children(v)] = True
    if not covered[1:].all():
        return False, "NotDominating"
    return True, None


def gamma_pr_bruteforce(tree: RootedTree) -> int:
    """Exact gamma_pr by ascending-cardinality subset search, 2 <= n <= 18.

    Independent of the linear algorithm: a subset qualifies when it
    dominates the tree and its induced forest has a perfect matching
    (greedy leaf elimination decides that on forests).
    """
    if tree.n == 1:
        raise SingleVertex("paired domination needs at least two vertices")
    if tree.n > 18:
        raise TooLarge(f"exhaustive search capped at 18 vertices, got {tree.n}")
    gamma = int(K.bruteforce_gamma(tree.parent, tree.child_start, tree.child_list))
    if gamma < 0:  # pragma: no cover - every tree with n >= 2 has a PD-set
        raise RuntimeError("no paired dominating set found")
    return gamma


def _leaves(k: int) -> list:
    return [[] for _ in range(k)]


def _nested_degrees(nested, out: list[int]) -> None:
    out.append(len(nested))
    for child in nested:
        _nested_degrees(child, out)


def _tree_from_nested(nested) -> RootedTree:
    degs: list[int] = []
    _nested_degrees(nested, degs)
    return from_lukasiewicz(degs)


def build_fixtures(d0: int) -> tuple[RootedTree, RootedTree, RootedTree, RootedTree, RootedTree]:
    """Fixture trees (tau0, t1, t2, tau1, tau2) parametrized by outdegree d0.

    tau0 is the height-3 tree whose four internal vertices (root, first and
    last root child, last grandchild of the last child) all have outdegree
    d0; any tree extending it below depth 3 keeps a P-labelled root.  t1
    and t2 share the same size but have paired domination numbers 4 and 6:
    both hang two outdegree-d0 branches off a binary fork, with the deeper
    d0-ary stars placed under different branches.  tau1 and tau2 graft t1
    and t2 onto the rightmost depth-3 leaf of tau0.
    """
    if d0 < 2:
        raise ValueError("d0 must be at least 2")

    def t1_nested():
        a = [_leaves(d0)] + _leaves(d0 - 1)  # first child carries the star
        b = _leaves(d0 - 1) + [_leaves(d0)]  # last child carries the star
        return [a, b]

    def t2_nested():
        a = _leaves(d0)
        b = [_leaves(d0)] + _leaves(d0 - 2) + [_leaves(d0)]
        return [a, b]

    def tau0_nested(attach=None):
        c1 = _leaves(d0)
        c3 = _leaves(d0)
        if attach is not None:
            c3[-1] = attach
        c2 = _leaves(d0 - 1) + [c3]
        return [c1] + _leaves(d0 - 2) + [c2]

    tau0 = _tree_from_nested(tau0_nested())
    t1 = _tree_from_nested(t1_nested())
    t2 = _tree_from_nested(t2_nested())
    tau1 = _tree_from_nested(tau0_nested(attach=t1_nested()))
    tau2 = _tree_from_nested(tau0_nested(attach=t2_nested()))
    return tau0, t1, t2, tau1, tau2
