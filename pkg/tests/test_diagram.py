"""Event words, validation, tracing, generators, and the text format."""

import pytest
from hypothesis import given, settings, strategies as st

from clasplab import (FrontDiagram, InvalidBraidLetter, InvalidDiagram,
                      ParseError, disjoint_union,
                      generate_negative_braid_closure, generate_torus4,
                      generate_trefoil, generate_unknot, lc, n_components,
                      parse, rc, serialize, stacked_union, trace_components,
                      validate, x)
from clasplab.fillability import random_script, run_script


class TestValidate:
    def test_minimal_unknot(self):
        assert validate(FrontDiagram([lc(1), rc(1)])).ok

    def test_empty_diagram(self):
        assert validate(FrontDiagram()).ok

    def test_right_cusp_out_of_range(self):
        report = validate(FrontDiagram([lc(1), rc(2)]))
        assert not report.ok
        assert report.violations[0].event_index == 2
        assert "right cusp" in report.violations[0].rule

    def test_unclosed_diagram(self):
        report = validate(FrontDiagram([lc(1)]))
        assert not report.ok
        assert "not closed" in report.violations[0].rule

    def test_crossing_needs_two_strands(self):
        report = validate(FrontDiagram([lc(1), x(2), rc(1)]))
        assert not report.ok
        assert report.violations[0].event_index == 2

    def test_strand_profile_steps(self, corpus):
        for d in corpus.values():
            counts = d.strand_counts()
            assert counts[0] == 0 and counts[-1] == 0
            for a, b in zip(counts, counts[1:]):
                assert b - a in (-2, 0, 2) and b >= 0

    def test_single_event_edits_are_flagged_or_fine(self, corpus):
        for d in corpus.values():
            for i in range(len(d)):
                edited = FrontDiagram(d.events[:i] + d.events[i + 1:])
                validate(edited)  # must never crash, any verdict is fine


class TestTrace:
    def test_unknot(self):
        t = trace_components(generate_unknot())
        assert t.n_components == 1
        assert t.cusp_tally(0) == (1, 1)

    def test_trefoil(self):
        t = trace_components(generate_trefoil())
        assert t.n_components == 1
        assert t.cusp_tally(0) == (2, 2)

    def test_two_component_unlink(self):
        d = FrontDiagram([lc(1), rc(1), lc(1), rc(1)])
        assert trace_components(d).n_components == 2

    def test_invalid_diagram_raises(self):
        with pytest.raises(InvalidDiagram):
            trace_components(FrontDiagram([rc(1)]))

    def test_cusp_tallies_balance(self, corpus, fillable_small):
        for d in list(corpus.values()) + fillable_small:
            t = trace_components(d)
            for comp in range(t.n_components):
                left, right = t.cusp_tally(comp)
                assert left == right


class TestGenerators:
    def test_unknot_word(self):
        assert generate_unknot().events == (lc(1), rc(1))

    def test_trefoil_word(self):
        d = generate_trefoil()
        assert d.events == (lc(1), lc(3), x(2), x(2), x(2), rc(3), rc(1))
        assert d.n_crossings == 3
        assert n_components(d) == 1

    def test_braid_closure_two_strands(self):
        d = generate_negative_braid_closure(2, [1, 1, 1])
        assert d.n_crossings == 3
        assert n_components(d) == 1

    def test_braid_closure_four_strands(self):
        d = generate_negative_braid_closure(4, [1, 2, 3] * 5)
        assert d.n_crossings == 15
        assert n_components(d) == 1

    def test_braid_letter_out_of_range(self):
        with pytest.raises(InvalidBraidLetter):
            generate_negative_braid_closure(2, [5])

    def test_braid_word_nonempty(self):
        with pytest.raises(InvalidBraidLetter):
            generate_negative_braid_closure(3, [])

    @pytest.mark.parametrize("n", range(11))
    def test_torus4_crossings_and_components(self, n):
        d = generate_torus4(n)
        assert validate(d).ok
        assert d.n_crossings == 3 * (2 * n + 5)
        assert n_components(d) == 1

    def test_unions(self):
        u = generate_unknot()
        assert n_components(disjoint_union(u, u)) == 2
        stacked = stacked_union(u, u, gap=2)
        assert validate(stacked).ok
        assert n_components(stacked) == 2


class TestTextFormat:
    def test_parse_unknot(self):
        assert parse("lc 1\nrc 1\n").events == generate_unknot().events

    def test_serialize_trefoil(self):
        assert serialize(generate_trefoil()) == \
            "lc 1\nlc 3\nx 2\nx 2\nx 2\nrc 3\nrc 1\n"

    def test_comments_and_blank_lines(self):
        text = "# a comment\n\nlc 1  # inline\nrc 1\n"
        assert parse(text).events == generate_unknot().events

    def test_zero_position_rejected(self):
        with pytest.raises(ParseError, match="1-based"):
            parse("x 0")

    def test_bad_kind_rejected(self):
        with pytest.raises(ParseError, match="kind"):
            parse("zz 1")

    def test_parse_error_carries_line(self):
        with pytest.raises(ParseError, match="line 3"):
            parse("lc 1\nrc 1\nx zero\n")

    def test_strict_mode(self):
        with pytest.raises(InvalidDiagram):
            parse("rc 1\n", strict=True)

    def test_round_trip_corpus(self, corpus, fillable_small):
        for d in list(corpus.values()) + fillable_small:
            assert parse(serialize(d)).events == d.events

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 10_000), st.integers(1, 14))
    def test_round_trip_random_fillable(self, seed, length):
        d = run_script(random_script(length, seed)).diagram
        assert parse(serialize(d)).events == d.events
