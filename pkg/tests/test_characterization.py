import random
from itertools import combinations

import pytest

from vpg0.characterization import (C4PairWitness, CoC6Witness, NotCocomparabilityWitness,
                                   check_condition_i, classify_b0, diamond_classes,
                                   find_induced_co_c6, witness_is_valid)
from vpg0.core import Graph, Ordering, Poset, cocomparability_graph
from vpg0.errors import InvalidPoset, InvalidSigma
from vpg0.harness import (bfs_classes, brute_co_c6, brute_diamonds, enumerate_graphs, GenConfig,
                          gen_random_poset)

from conftest import complete, cycle, prism, wheel4


def random_graph(rng, n, density):
    labels = [str(i) for i in range(n)]
    return Graph(labels, [e for e in combinations(labels, 2) if rng.random() < density])


class TestDiamondClasses:
    def test_c4_all_singletons(self):
        assert diamond_classes(cycle("abcd")).classes == (("a",), ("b",), ("c",), ("d",))

    def test_sample_merges_only_i_and_h(self, sample_graph):
        dc = diamond_classes(sample_graph)
        assert [c for c in dc.classes if len(c) > 1] == [("h", "i")]

    def test_w4_hub_joins_everything(self):
        dc = diamond_classes(wheel4())
        assert dc.classes == (("a", "b", "c", "d", "u"),)

    def test_agrees_with_bfs_oracle(self):
        rng = random.Random(5)
        for _ in range(300):
            g = random_graph(rng, rng.randint(1, 9), rng.random())
            dc = diamond_classes(g)
            diagonals = [tuple(hubs) for _, hubs in brute_diamonds(g)]
            assert set(map(frozenset, dc.classes)) == bfs_classes(g.vertices, diagonals)

    def test_classes_refine_components(self):
        rng = random.Random(6)
        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 9), rng.random() * 0.6)
            comp = {v: k for k, c in enumerate(g.components()) for v in c}
            for cls in diamond_classes(g).classes:
                assert len({comp[v] for v in cls}) == 1


class TestConditionI:
    def test_w4_witness(self):
        w = check_condition_i(wheel4())
        assert w.c4 == ("a", "b", "c", "d")
        assert (w.u, w.v) == ("a", "c")
        assert w.diagonal_path == (("a", "u"), ("u", "c"))
        assert witness_is_valid(wheel4(), w)

    def test_sample_ok(self, sample_graph):
        assert check_condition_i(sample_graph) is None


class TestCoC6:
    def test_prism_found(self):
        assert set(find_induced_co_c6(prism())) == set("abcxyz")

    def test_sample_has_none(self, sample_graph):
        assert find_induced_co_c6(sample_graph) is None

    def test_agrees_with_brute_force(self):
        rng = random.Random(9)
        for _ in range(300):
            g = random_graph(rng, rng.randint(6, 9), 0.3 + 0.5 * rng.random())
            got = find_induced_co_c6(g)
            want = brute_co_c6(g)
            assert (got is None) == (not want)
            if got is not None:
                assert frozenset(got) in want


class TestClassify:
    def test_prism_rejected(self):
        c = classify_b0(prism())
        assert c.verdict == "no" and isinstance(c.witness, CoC6Witness)
        assert witness_is_valid(prism(), c.witness)

    def test_w4_rejected(self):
        c = classify_b0(wheel4())
        assert c.verdict == "no" and isinstance(c.witness, C4PairWitness)

    def test_c5_not_cocomparability(self):
        c = classify_b0(cycle("abcde"))
        assert c.verdict == "not-cocomparability"
        assert isinstance(c.witness, NotCocomparabilityWitness)
        assert witness_is_valid(cycle("abcde"), c.witness)

    def test_sample_accepted(self, sample_graph, sample_poset, sample_sigma):
        c = classify_b0(sample_graph, sample_poset, sample_sigma)
        assert c.accepted and c.sigma == sample_sigma and c.poset == sample_poset

    def test_wrong_poset_rejected(self, sample_graph):
        with pytest.raises(InvalidPoset):
            classify_b0(sample_graph, Poset(sample_graph.vertices))

    def test_non_extension_sigma_rejected(self, sample_graph, sample_poset):
        with pytest.raises(InvalidSigma):
            classify_b0(sample_graph, sample_poset, Ordering("jihgfedcba"))

    def test_sigma_alone_must_be_umbrella_free(self):
        g = Graph("abc", [("a", "c")])
        with pytest.raises(InvalidSigma):
            classify_b0(g, sigma=Ordering("abc"))
        c = classify_b0(g, sigma=Ordering("acb"))
        assert c.accepted and c.poset.less("a", "b") and c.poset.less("c", "b")

    def test_json_shape(self):
        out = classify_b0(wheel4()).to_json()
        assert out["verdict"] == "no"
        assert out["witness"] == {"type": "C4Pair", "c4": ["a", "b", "c", "d"], "pair": ["a", "c"],
                                  "diagonalPath": [["a", "u"], ["u", "c"]]}

    def test_witnesses_revalidate_on_small_graphs(self):
        for n in range(1, 7):
            for g in enumerate_graphs(n):
                c = classify_b0(g)
                if c.witness is not None:
                    assert witness_is_valid(g, c.witness)

    def test_tampered_witnesses_fail(self):
        w = check_condition_i(wheel4())
        bad = C4PairWitness(w.c4, w.u, w.v, (("a", "b"),))
        assert not witness_is_valid(wheel4(), bad)
        assert not witness_is_valid(complete("abcdef"), CoC6Witness(tuple("abcdef")))

    def test_cocomparability_inputs_never_report_not_cocomparability(self):
        for seed in range(100):
            g = cocomparability_graph(gen_random_poset(GenConfig(2 + seed % 12, 0.5, seed)))
            assert classify_b0(g).verdict in ("yes", "no")
