"""Shared fixtures: the two worked-example trees and random-tree helpers."""

import numpy as np
import pytest

import pairdom as pd

# 15-vertex worked example: gamma_pr = 10, PD-set {1..8, 11, 12}
FIG1_PARENTS = [0, 1, 1, 1, 2, 3, 3, 3, 4, 5, 6, 7, 8, 12, 12]

# 19-vertex labelled example (ranks as drawn; not BFS-monotone)
FIG2_PARENTS = [0, 1, 1, 1, 2, 3, 3, 3, 4, 5, 6, 7, 8, 12, 12, 9, 9, 17, 10]
FIG2_LABELS = {
    1: "F", 2: "F", 3: "P", 4: "F", 5: "P", 6: "R", 7: "P", 8: "R", 9: "P",
    10: "R", 11: "B", 12: "R", 13: "B", 14: "B", 15: "B", 16: "B", 17: "R",
    18: "B", 19: "B",
}


@pytest.fixture(scope="session")
def fig1_tree():
    return pd.from_parent_array(FIG1_PARENTS)


@pytest.fixture(scope="session")
def fig2_tree():
    return pd.from_parent_array(FIG2_PARENTS)


def random_attachment_parents(gen: np.random.Generator, n: int) -> list[int]:
    """Random canonical-ish tree: each vertex picks a lower-ranked parent."""
    return [0] + [int(gen.integers(1, v)) for v in range(2, n + 1)]


def scramble(tree: pd.RootedTree, gen: np.random.Generator) -> pd.RootedTree:
    """Random rank relabelling fixing the root; same rooted shape."""
    n = tree.n
    perm = np.zeros(n + 1, np.int64)
    perm[1] = 1
    perm[2:] = gen.permutation(np.arange(2, n + 1))
    new_parent = np.zeros(n + 1, np.int64)
    new_parent[perm[1:]] = perm[tree.parent[1:]]
    return pd.from_parent_array(new_parent[1:])
