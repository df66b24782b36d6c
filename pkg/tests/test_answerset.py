import logging

import pytest

from prio_wfs.core.answerset import (
    analyse,
    answer_sets,
    priority_preserving,
    rebutted,
    skeptical,
)
from prio_wfs.core.errors import TooLarge
from prio_wfs.core.parser import load_program, parse_literal
from prio_wfs.core.program import EMPTY, LiteralSet

P0 = "b <- not -b.\na <- not -a.\n-a <- not a."
P1 = "n1: b <- not c.\nn2: -b <- not b.\nn2 < n1."
P2 = "n1: b <- not c, not -b.\nn2: -b <- not b.\nn2 < n1."
P3 = "n1: b <- not c.\nn2: c <- not b.\nn2 < n1."
PREFS = ["n2 < n1", "-(n1 < n2)"]


def literals(*texts: str) -> LiteralSet:
    return LiteralSet.of(parse_literal(t) for t in texts)


class TestAnswerSets:
    """Tests for answer set enumeration."""

    def test_p0(self):
        """Test both choices for a, sorted by rendering."""
        assert answer_sets(load_program(P0)) == [literals("-a", "b"), literals("a", "b")]

    def test_p1_single(self):
        """Test the self-defeating guess is rejected."""
        assert answer_sets(load_program(P1)) == [literals("b", *PREFS)]

    def test_even_cycle(self):
        """Test the four-rule cycle has two answer sets."""
        program = load_program("n1: b <- not a.\nn2: c <- not b.\nn3: d <- not c.\nn4: a <- not d.")
        assert answer_sets(program) == [literals("a", "c"), literals("b", "d")]

    def test_odd_loop(self):
        """Test a self-attacking rule leaves no answer set."""
        assert answer_sets(load_program("a <- not a.")) == []

    def test_strict_program(self):
        """Test a program without weak negation has its closure as unique answer set."""
        assert answer_sets(load_program("a.\nb <- a.")) == [literals("a", "b")]

    def test_inconsistent_strict_part_gives_lit(self):
        """Test Lit is the only answer set when the facts contradict."""
        (result,) = answer_sets(load_program("a.\n-a.\nb <- not c."))
        assert result.is_lit

    def test_too_large(self):
        """Test the guard on the number of guessable atoms."""
        program = load_program("n1: b <- not a.\nn2: c <- not b.\nn3: d <- not c.\nn4: a <- not d.")
        with pytest.raises(TooLarge) as exc_info:
            answer_sets(program, max_atoms=3)
        assert exc_info.value.atoms == 4
        assert exc_info.value.limit == 3

    def test_atom_with_both_polarities_has_three_guesses(self, caplog):
        """Test a guessable atom is left out or taken with either polarity."""
        caplog.set_level(logging.DEBUG, logger="prio_wfs.core.answerset")
        answer_sets(load_program(P0), max_atoms=1)
        assert "Checked 3 guesses over 1 atoms" in caplog.text

    def test_unreachable_weak_literals_not_guessed(self):
        """Test atoms that can never be derived do not count toward the guard."""
        text = "\n".join(f"p{i} <- not q{i}." for i in range(30))
        (result,) = answer_sets(load_program(text), max_atoms=1)
        assert len(result) == 30


class TestPriorityPreserving:
    """Tests for rebutted rules and the priority-preserving filter."""

    def test_rebutted(self):
        """Test rules applicable but defeated by the answer set."""
        program = load_program(P3)
        rules = rebutted(program, literals("c", *PREFS))
        assert [program.label(r) for r in rules] == ["n1"]

    def test_p1_preserves(self):
        """Test the answer set of P1 respects n2 < n1."""
        program = load_program(P1)
        assert priority_preserving(program, literals("b", *PREFS))

    @pytest.mark.parametrize(
        "text, kept, dropped",
        [(P2, "-b", "b"), (P3, "c", "b")],
    )
    def test_less_preferred_winner_rejected(self, text, kept, dropped):
        """Test only the answer set following n2 < n1 is priority preserving."""
        program = load_program(text)
        assert priority_preserving(program, literals(kept, *PREFS))
        assert not priority_preserving(program, literals(dropped, *PREFS))

    def test_mutual_preference(self):
        """Test neither self-preferring answer set is priority preserving."""
        program = load_program("n1: n2 < n1 <- not -(n2 < n1).\nn2: n1 < n2 <- not -(n1 < n2).")
        sets = answer_sets(program)
        assert len(sets) == 2
        assert not any(priority_preserving(program, a) for a in sets)

    def test_without_preferences_everything_preserves(self):
        """Test every answer set is priority preserving when < does not occur."""
        program = load_program(P0)
        assert all(priority_preserving(program, a) for a in answer_sets(program))


class TestSkeptical:
    """Tests for skeptical and analyse."""

    def test_intersection(self):
        """Test literals common to every set."""
        assert skeptical([literals("a", "b"), literals("-a", "b")]) == literals("b")

    def test_empty_family(self):
        """Test no answer sets means no skeptical conclusions."""
        assert skeptical([]) == EMPTY

    def test_analyse(self):
        """Test the combined report on P3."""
        report = analyse(load_program(P3))
        assert len(report.answer_sets) == 2
        assert report.pp_answer_sets == (literals("c", *PREFS),)
        assert report.skeptical == literals(*PREFS)
        assert report.skeptical_pp == literals("c", *PREFS)
        assert all(len(rules) == 1 for rules in report.rebutted.values())
