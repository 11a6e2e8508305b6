"""Linear algorithm, labelling rules, verifier, oracle, fixture trees."""

import numpy as np
import pytest

import pairdom as pd
from pairdom.errors import NotCanonical, SingleVertex, TooLarge

from conftest import FIG2_LABELS, random_attachment_parents, scramble


class TestWorkedExample:
    def test_gamma_and_members(self, fig1_tree):
        res = pd.gamma_pr_linear(fig1_tree)
        assert res.gamma_pr == 10
        assert res.members == [1, 2, 3, 4, 5, 6, 7, 8, 11, 12]

    def test_step_list_pairs(self, fig1_tree):
        # insertion order in the run: (7,12), (3,8), (6,11), (2,5), (1,4)
        res = pd.gamma_pr_linear(fig1_tree)
        assert set(res.pairs) == {(1, 4), (2, 5), (3, 8), (6, 11), (7, 12)}

    def test_pairing_is_matching(self, fig1_tree):
        res = pd.gamma_pr_linear(fig1_tree)
        for v in res.members:
            w = int(res.pairing[v])
            assert w != v and int(res.pairing[w]) == v
            assert fig1_tree.parent[v] == w or fig1_tree.parent[w] == v

    def test_labels_and_phi(self, fig1_tree):
        res = pd.gamma_pr_linear(fig1_tree)
        assert res.phi == 5
        assert res.root_label == "P"
        assert list(res.labels[1:]) == list(pd.label_recursive(fig1_tree)[1:])

    def test_verified(self, fig1_tree):
        res = pd.gamma_pr_linear(fig1_tree)
        assert pd.verify_pd_set(fig1_tree, res.members, res.pairing) == (True, None)


class TestLabelledExample:
    def test_recursive_labels(self, fig2_tree):
        labels = pd.label_recursive(fig2_tree)
        assert {v: labels[v] for v in range(1, 20)} == FIG2_LABELS
        assert pd.phi_from_labels(labels) == 5
        assert pd.gamma_from_labels(labels) == 10

    def test_algorithm_labels_through_canonicalization(self, fig2_tree):
        canon, perm = pd.bfs_canonicalize(fig2_tree)
        res = pd.gamma_pr_linear(canon)
        assert res.gamma_pr == 10 and res.phi == 5
        assert {v: res.labels[perm[v]] for v in range(1, 20)} == FIG2_LABELS


class TestSmallCases:
    def test_edge(self):
        res = pd.gamma_pr_linear(pd.path_tree(2))
        assert res.gamma_pr == 2 and res.members == [1, 2] and res.pairs == [(1, 2)]
        labels = pd.label_recursive(pd.path_tree(2))
        assert labels[2] == "B" and labels[1] == "R"

    def test_stars(self):
        for k in range(1, 8):
            res = pd.gamma_pr_linear(pd.star_tree(k))
            assert res.gamma_pr == 2

    def test_path_four_labels(self):
        labels = pd.label_recursive(pd.path_tree(4))
        assert list(labels[1:]) == ["F", "P", "R", "B"]
        assert pd.phi_from_labels(labels) == 1
        assert pd.gamma_from_labels(labels) == 2
        assert pd.gamma_pr_bruteforce(pd.path_tree(4)) == 2

    def test_single_vertex(self):
        one = pd.from_parent_array([0])
        with pytest.raises(SingleVertex):
            pd.gamma_pr_linear(one)
        with pytest.raises(SingleVertex):
            pd.gamma_pr_bruteforce(one)
        assert pd.label_recursive(one)[1] == "B"
        with pytest.warns(UserWarning):
            assert pd.gamma_from_labels(pd.label_recursive(one)) == 2

    def test_not_canonical_rejected(self):
        with pytest.raises(NotCanonical):
            pd.gamma_pr_linear(pd.from_parent_array([0, 1, 2, 1]))


class TestVerifier:
    def test_odd_member(self):
        assert pd.verify_pd_set(pd.path_tree(2), [1], {1: 2}) == (False, "OddMember")

    def test_pair_not_adjacent(self):
        star = pd.star_tree(3)
        ok, why = pd.verify_pd_set(star, [2, 3], {2: 3, 3: 2})
        assert (ok, why) == (False, "PairNotAdjacent")

    def test_not_involution(self):
        t = pd.path_tree(4)
        assert pd.verify_pd_set(t, [1, 2], {1: 2, 2: 3}) == (False, "NotInvolution")
        assert pd.verify_pd_set(t, [1, 2], {1: 1, 2: 2}) == (False, "NotInvolution")
        assert pd.verify_pd_set(t, [1, 2], {1: 2}) == (False, "NotInvolution")

    def test_not_dominating(self):
        t = pd.path_tree(6)
        ok, why = pd.verify_pd_set(t, [1, 2], {1: 2, 2: 1})
        assert (ok, why) == (False, "NotDominating")

    def test_accepts_dict_and_array(self, fig1_tree):
        res = pd.gamma_pr_linear(fig1_tree)
        as_dict = {v: int(res.pairing[v]) for v in res.members}
        assert pd.verify_pd_set(fig1_tree, res.members, as_dict) == (True, None)


class TestOracle:
    def test_worked_example(self, fig1_tree):
        assert pd.gamma_pr_bruteforce(fig1_tree) == 10

    def test_path_formula(self):
        # gamma_pr(P_n) == 2*ceil(n/4), rederived exhaustively
        for n in range(2, 13):
            assert pd.gamma_pr_bruteforce(pd.path_tree(n)) == 2 * ((n + 3) // 4)

    def test_p8_and_star(self):
        assert pd.gamma_pr_bruteforce(pd.path_tree(8)) == 4
        assert pd.gamma_pr_bruteforce(pd.star_tree(4)) == 2

    def test_too_large(self):
        with pytest.raises(TooLarge):
            pd.gamma_pr_bruteforce(pd.path_tree(19))


def _branches(tree):
    """Maximal subtrees under the root, as standalone RootedTrees."""
    out = []
    for c in tree.children(1):
        ranks = [int(c)]
        i = 0
        while i < len(ranks):
            ranks.extend(int(x) for x in tree.children(ranks[i]))
            i += 1
        index = {old: new for new, old in enumerate(ranks, start=1)}
        parents = [0] * len(ranks)
        for old in ranks[1:]:
            parents[index[old] - 1] = index[int(tree.parent[old])]
        out.append(pd.from_parent_array(parents))
    return out


class TestProperties:
    def test_equivalence_exhaustive_small(self):
        for n in range(2, 9):
            for seq in pd.iter_lukasiewicz_sequences(n):
                tree = pd.from_lukasiewicz(seq)
                res = pd.gamma_pr_linear(tree)
                labels = pd.label_recursive(tree)
                assert res.gamma_pr == pd.gamma_pr_bruteforce(tree)
                assert list(labels[1:]) == list(res.labels[1:])
                assert res.gamma_pr == pd.gamma_from_labels(labels)
                assert pd.verify_pd_set(tree, res.members, res.pairing)[0]

    def test_equivalence_random_scrambled(self):
        gen = np.random.default_rng(97)
        for trial in range(300):
            n = int(gen.integers(2, 15))
            tree = scramble(
                pd.from_parent_array(random_attachment_parents(gen, n)), gen
            )
            canon, _ = pd.bfs_canonicalize(tree)
            res = pd.gamma_pr_linear(canon)
            assert res.gamma_pr == pd.gamma_pr_bruteforce(tree)
            assert res.gamma_pr % 2 == 0 and res.gamma_pr >= 2
            assert list(pd.label_recursive(canon)[1:]) == list(res.labels[1:])

    def test_r_vertices_independent(self):
        gen = np.random.default_rng(13)
        for _ in range(200):
            tree = pd.from_parent_array(
                random_attachment_parents(gen, int(gen.integers(2, 60)))
            )
            labels = pd.label_recursive(tree)
            for v in range(2, tree.n + 1):
                assert not (labels[v] == "R" and labels[tree.parent[v]] == "R")

    def test_additivity_over_branches(self):
        gen = np.random.default_rng(29)
        trees = [
            pd.from_lukasiewicz(seq)
            for seq in pd.iter_lukasiewicz_sequences(7)
        ] + [
            pd.from_parent_array(random_attachment_parents(gen, int(gen.integers(2, 40))))
            for _ in range(100)
        ]
        for tree in trees:
            labels = pd.label_recursive(tree)
            phi = pd.phi_from_labels(labels)
            toll = 1 if labels[1] == "R" else 0
            branch_sum = sum(
                pd.phi_from_labels(pd.label_recursive(b)) for b in _branches(tree)
            )
            assert phi == branch_sum + toll

    def test_gamma_bounds(self):
        gen = np.random.default_rng(41)
        for _ in range(100):
            n = int(gen.integers(2, 200))
            tree = pd.from_parent_array(random_attachment_parents(gen, n))
            canon, _ = pd.bfs_canonicalize(tree)
            g = pd.gamma_pr_linear(canon).gamma_pr
            assert 2 <= g <= n and g % 2 == 0


class TestFixtures:
    @pytest.mark.parametrize("d0", [2, 3, 4])
    def test_shapes_and_gammas(self, d0):
        tau0, t1, t2, tau1, tau2 = pd.build_fixtures(d0)
        assert tau0.n == 1 + 4 * d0
        assert t1.n == t2.n == 3 + 4 * d0
        assert tau1.n == tau2.n == tau0.n + t1.n - 1
        assert pd.gamma_pr_linear(t1).gamma_pr == 4
        assert pd.gamma_pr_linear(t2).gamma_pr == 6

    @pytest.mark.parametrize("d0", [2, 3, 4])
    def test_tau_root_labels(self, d0):
        _, _, _, tau1, tau2 = pd.build_fixtures(d0)
        l1 = pd.label_recursive(tau1)[1]
        l2 = pd.label_recursive(tau2)[1]
        assert l1 == l2 == "P"

    @pytest.mark.parametrize("d0", [2, 3])
    def test_tau_pair_separates_gamma(self, d0):
        _, _, _, tau1, tau2 = pd.build_fixtures(d0)
        g1 = pd.gamma_pr_linear(tau1).gamma_pr
        g2 = pd.gamma_pr_linear(tau2).gamma_pr
        assert g1 != g2

    def test_tau0_internal_outdegrees(self):
        for d0 in (2, 3, 5):
            tau0, _, _, _, _ = pd.build_fixtures(d0)
            internal = [v for v in range(1, tau0.n + 1) if not tau0.is_leaf(v)]
            assert len(internal) == 4
            assert all(len(tau0.children(v)) == d0 for v in internal)
            assert int(tau0.depth[1:].max()) == 3

    def test_extension_keeps_root_p(self):
        # grafting anything below the depth-3 leaves never changes the root label
        gen = np.random.default_rng(7)
        for d0 in (2, 3):
            tau0, _, _, _, _ = pd.build_fixtures(d0)
            deep = [v for v in range(1, tau0.n + 1) if tau0.depth[v] == 3]
            for _ in range(20):
                parents = [int(p) for p in tau0.parent[1:]]
                n = tau0.n
                for leaf in deep:
                    hang = int(gen.integers(0, 4))
                    anchor = leaf
                    for _ in range(hang):
                        n += 1
                        parents.append(anchor)
                        anchor = n if gen.integers(2) else leaf
                ext = pd.from_parent_array(parents)
                assert pd.label_recursive(ext)[1] == "P"

    def test_d0_lower_bound(self):
        with pytest.raises(ValueError):
            pd.build_fixtures(1)
