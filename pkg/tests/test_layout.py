from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vpg0.characterization import CoC6Witness, classify_b0
from vpg0.core import Graph, Ordering, cocomparability_graph, poset_from_covers
from vpg0.errors import InvalidSigma, ParseError, PinOrderMismatch
from vpg0.harness import GenConfig, enumerate_graphs, gen_interval_order, gen_random_poset
from vpg0.intervalrep import AnchoredIntervalRep, branch_representations
from vpg0.layout import (Drawing, Segment, draw_b0, drawing_from_json, drawing_to_json,
                         monotone_rescale, place)
from vpg0.minor import compute_bji
from vpg0.verify import segments_intersect, verify_drawing

from conftest import complete, cycle, prism

F = Fraction
H = F(1, 2)


def on_segment(s: Segment, x, y) -> bool:
    return s.xrange[0] <= x <= s.xrange[1] and s.yrange[0] <= y <= s.yrange[1]


class TestMonotoneRescale:
    def test_no_anchors_affine(self):
        arep = AnchoredIntervalRep(1, {"v": (F(0), F(1))}, {})
        assert monotone_rescale(arep, {}, (-H, H)) == {"v": (-H, H)}

    def test_no_anchors_single_point_goes_to_middle(self):
        arep = AnchoredIntervalRep(1, {"v": (F(3), F(3))}, {})
        assert monotone_rescale(arep, {}, (F(0), F(1))) == {"v": (H, H)}

    def test_identity(self):
        arep = AnchoredIntervalRep(1, {"v": (F(-1), F(3)), "w": (F(1), F(1))}, {0: F(0), 2: F(2)})
        assert monotone_rescale(arep, {0: F(0), 2: F(2)}, (F(-1), F(3))) == arep.intervals

    def test_sample_branch3(self, sample_graph, sample_poset, reference_decomposition):
        rep = branch_representations(sample_graph, sample_poset, reference_decomposition)[3]
        out = monotone_rescale(rep, {0: F(0), 2: F(2), 4: F(4)}, (-H, F(9, 2)))
        assert out == {"c": (-H, F(5, 2)), "e": (F(3, 2), F(9, 2))}

    def test_mismatched_pins(self):
        arep = AnchoredIntervalRep(1, {"v": (F(0), F(4))}, {0: F(1), 2: F(3)})
        with pytest.raises(PinOrderMismatch):
            monotone_rescale(arep, {0: F(2)}, (F(0), F(4)))
        with pytest.raises(PinOrderMismatch):
            monotone_rescale(arep, {0: F(2), 2: F(1)}, (F(0), F(4)))
        with pytest.raises(PinOrderMismatch):
            monotone_rescale(arep, {0: F(0), 2: F(2)}, (F(0), F(4)))

    @given(st.lists(st.fractions(-20, 20, max_denominator=8), min_size=1, max_size=12),
           st.lists(st.fractions(-20, 20, max_denominator=8), max_size=4, unique=True),
           st.data())
    def test_order_and_ties_preserved(self, values, anchors, data):
        anchors = sorted(anchors)
        ivs = {f"v{k}": (a, a) for k, a in enumerate(values)}
        pins = {2 * k: F(2 * k) for k in range(len(anchors))}
        lo = F(-1) - data.draw(st.integers(0, 3))
        hi = F(2 * len(anchors)) + data.draw(st.integers(0, 3))
        arep = AnchoredIntervalRep(1, ivs, dict(zip(pins, anchors)))
        out = monotone_rescale(arep, pins, (lo, hi))
        pts = values + anchors
        for a in pts:
            for b in pts:
                fa = out_of(out, arep, pins, a)
                fb = out_of(out, arep, pins, b)
                if a < b:
                    assert fa < fb
                elif a == b:
                    assert fa == fb
        for v, (a, _) in ivs.items():
            assert lo <= out[v][0] <= hi


def out_of(out, arep, pins, value):
    for v, (a, _) in arep.intervals.items():
        if a == value:
            return out[v][0]
    for j, p in arep.anchors.items():
        if p == value:
            return pins[j]
    raise KeyError(value)


class TestPlace:
    EXPECTED = {
        "a": ("H", 0, (H, F(7, 2))),
        "b": ("V", 1, (-H, F(5, 2))),
        "c": ("V", 3, (-H, F(5, 2))),
        "d": ("H", 2, (H, F(7, 2))),
        "e": ("V", 3, (F(3, 2), F(9, 2))),
        "f": ("H", 2, (F(5, 2), F(11, 2))),
        "g": ("H", 4, (F(5, 2), F(11, 2))),
        "h": ("V", 5, (F(3, 2), F(9, 2))),
        "i": ("V", 5, (F(3, 2), F(9, 2))),
        "j": ("H", 4, (F(9, 2), F(11, 2))),
    }

    def test_sample_coordinates_exact(self, sample_graph, sample_poset, reference_decomposition):
        ld = reference_decomposition
        d = place(ld, branch_representations(sample_graph, sample_poset, ld))
        for v, (dir_, at, span) in self.EXPECTED.items():
            s = d[v]
            assert (s.dir, s.at, (s.lo, s.hi)) == (dir_, at, span), v
        assert verify_drawing(d, sample_graph, sample_poset).ok

    def test_anchor_pinning(self, sample_graph, sample_poset, reference_decomposition):
        ld = reference_decomposition
        d = place(ld, branch_representations(sample_graph, sample_poset, ld))
        for a, b in ld.quotient.edges():
            o, e = (a, b) if a % 2 else (b, a)
            contact = set(compute_bji(sample_graph, ld, o, e) + compute_bji(sample_graph, ld, e, o))
            for s in d.segments:
                assert on_segment(s, o, e) == (s.vertex in contact)

    def test_single_clique(self):
        d = draw_b0(complete("xyz")).drawing
        for s in d.segments:
            assert (s.dir, s.at, s.lo, s.hi) == ("V", 1, F(-3, 4), F(-1, 4))

    def test_chain_poset_gives_disjoint_columns(self):
        p = poset_from_covers("abc", [("a", "b"), ("b", "c")])
        d = draw_b0(cocomparability_graph(p), p).drawing
        assert [d[v].at for v in "abc"] == [1, 3, 5]
        assert verify_drawing(d, cocomparability_graph(p), p).ok

    def test_c4_pattern(self):
        g = cycle("abcd")
        d = draw_b0(g).drawing
        assert d["a"].dir == d["c"].dir and d["b"].dir == d["d"].dir
        for u, v in g.edges():
            assert d[u].dir != d[v].dir
            assert segments_intersect(d[u], d[v])

    def test_rows_even_columns_odd_and_distinct_per_branch(self):
        for n in range(1, 7):
            for g in enumerate_graphs(n):
                r = draw_b0(g)
                if r.drawing is None:
                    continue
                lines = {}
                for s in r.drawing.segments:
                    assert s.at.denominator == 1
                    assert (s.at % 2 == 1) == (s.dir == "V")
                    lines.setdefault((s.dir, s.at), set()).add(r.drawing.branch[s.vertex])
                assert all(len(b) == 1 for b in lines.values())


class TestDrawB0:
    def test_path_p4(self):
        g = Graph("abcd", [("a", "b"), ("b", "c"), ("c", "d")])
        r = draw_b0(g)
        assert r.verdict == "yes"
        assert verify_drawing(r.drawing, g, r.classification.poset).ok

    def test_prism_witness(self):
        r = draw_b0(prism())
        assert r.drawing is None and isinstance(r.witness, CoC6Witness)

    def test_sample_with_given_order(self, sample_graph, sample_poset, sample_sigma):
        r = draw_b0(sample_graph, sample_poset, sample_sigma)
        assert r.drawing.vertices == sample_graph.vertices
        assert r.drawing.sigma == tuple(sample_sigma)
        assert verify_drawing(r.drawing, sample_graph, sample_poset).ok
        assert r.drawing["b"] == Segment("b", "V", F(1), -H, F(5, 2))

    def test_bad_sigma(self, sample_graph, sample_poset):
        with pytest.raises(InvalidSigma):
            draw_b0(sample_graph, sample_poset, Ordering("abcdefghij"[::-1]))

    def test_deterministic(self):
        g = cocomparability_graph(gen_interval_order(GenConfig(20, 0.2, 8)))
        assert drawing_to_json(draw_b0(g).drawing) == drawing_to_json(draw_b0(g).drawing)


class TestJson:
    def test_round_trip_is_byte_identical(self, sample_graph, sample_poset, sample_sigma):
        text = drawing_to_json(draw_b0(sample_graph, sample_poset, sample_sigma).drawing)
        assert drawing_to_json(drawing_from_json(text)) == text
        assert '"v":"b","dir":"V","at":"1/1","span":["-1/2","5/2"]' in text

    def test_round_trip_many(self):
        for seed in range(30):
            r = draw_b0(cocomparability_graph(gen_random_poset(GenConfig(10, 0.5, seed))))
            if r.drawing is not None:
                text = drawing_to_json(r.drawing)
                again = drawing_from_json(text)
                assert again == r.drawing
                assert drawing_to_json(again) == text

    @pytest.mark.parametrize("text", [
        "not json",
        "[]",
        '{"segments":[{"v":"a"}]}',
        '{"segments":[{"v":"a","dir":"X","at":"0/1","span":["0/1","1/1"]}]}',
        '{"segments":[{"v":"a","dir":"H","at":0,"span":["0/1","1/1"]}]}',
        '{"segments":[{"v":"a","dir":"H","at":"0/1","span":["1/1","0/1"]}]}',
        '{"segments":[{"v":"a","dir":"H","at":"1/0","span":["0/1","1/1"]}]}',
        '{"segments":[{"v":"a","dir":"H","at":"0/1","span":["0/1","1/1"]},'
        '{"v":"a","dir":"H","at":"0/1","span":["0/1","1/1"]}]}',
    ])
    def test_schema_errors(self, text):
        with pytest.raises(ParseError):
            drawing_from_json(text)


def test_segment_rejects_bad_input():
    with pytest.raises(ValueError):
        Segment("a", "D", F(0), F(0), F(1))
    with pytest.raises(ValueError):
        Segment("a", "H", F(0), F(2), F(1))
    with pytest.raises(ValueError):
        Drawing((Segment("a", "H", F(0), F(0), F(1)), Segment("a", "V", F(0), F(0), F(1))))
