from prio_wfs.core.closure import (
    cl,
    cn,
    is_consistent,
    materialize_preference_axioms,
    reduct,
    undefeated,
)
from prio_wfs.core.parser import load_program
from prio_wfs.core.program import (
    LiteralSet,
    Rule,
    RuleName,
    complement,
    neg,
    pos,
    prefers,
)


class TestClosure:
    """Tests for cl and cn."""

    def test_horn_chaining(self):
        """Test forward chaining through positive preconditions."""
        rules = [Rule(pos("a")), Rule(pos("b"), {pos("a")}), Rule(pos("c"), {pos("a"), pos("b")})]
        assert cl(rules) == LiteralSet.of([pos("a"), pos("b"), pos("c")])

    def test_weak_body_ignored(self):
        """Test cl uses monotonic counterparts."""
        rules = [Rule(pos("a"), weak_body={pos("a")})]
        assert pos("a") in cl(rules)

    def test_unsupported_rule_does_not_fire(self):
        """Test a rule with an underivable precondition."""
        assert cl([Rule(pos("b"), {pos("a")})]) == LiteralSet()

    def test_complementary_pair_kept(self):
        """Test cl does not collapse on inconsistency."""
        closure = cl([Rule(pos("a")), Rule(neg("a"))])
        assert not closure.is_lit
        assert not closure.is_consistent
        assert not is_consistent(closure)

    def test_cn_collapses_to_lit(self):
        """Test cn returns Lit for an inconsistent closure."""
        program = load_program("a.\n-a.\nb <- not c.")
        closure = cn(program.rules, program.signature)
        assert closure.is_lit
        assert pos("c") in closure and neg("c") in closure

    def test_cn_consistent(self):
        """Test cn equals cl when consistent."""
        program = load_program("a.\nb <- a.")
        assert cn(program.rules, program.signature) == cl(program.rules)


class TestPreferenceAxioms:
    """Tests for the built-in transitivity and antisymmetry of <."""

    def test_antisymmetry(self):
        """Test n1 < n2 yields -(n2 < n1)."""
        closure = cl([Rule(prefers("n1", "n2"))])
        assert complement(prefers("n2", "n1")) in closure

    def test_transitivity_chain(self):
        """Test transitive consequences regardless of derivation order."""
        rules = [
            Rule(prefers("c", "d"), {pos("late")}),
            Rule(prefers("a", "b")),
            Rule(prefers("b", "c")),
            Rule(pos("late")),
        ]
        closure = cl(rules)
        assert prefers("a", "c") in closure
        assert prefers("a", "d") in closure
        assert prefers("b", "d") in closure
        assert complement(prefers("d", "a")) in closure

    def test_derived_preferences_feed_rules(self):
        """Test literals from the axioms trigger rules."""
        rules = [
            Rule(prefers("a", "b")),
            Rule(prefers("b", "c")),
            Rule(pos("ok"), {prefers("a", "c")}),
            Rule(pos("no"), {prefers("c", "a")}),
        ]
        closure = cl(rules)
        assert pos("ok") in closure
        assert pos("no") not in closure

    def test_cycle_is_inconsistent(self):
        """Test a preference cycle produces a complementary pair."""
        closure = cl([Rule(prefers("a", "b")), Rule(prefers("b", "a"))])
        assert not closure.is_consistent

    def test_axioms_can_be_switched_off(self):
        """Test plain Horn closure without built-in axioms."""
        closure = cl([Rule(prefers("a", "b"))], preference_axioms=False)
        assert closure == LiteralSet.of([prefers("a", "b")])

    def test_materialized_axioms_agree(self):
        """Test lazy axioms equal closure with materialized instances."""
        rules = [
            Rule(prefers("a", "b")),
            Rule(prefers("b", "c"), {pos("x")}),
            Rule(pos("x")),
            Rule(pos("y"), {prefers("a", "c")}),
        ]
        names = [RuleName(n) for n in "abc"]
        axioms = materialize_preference_axioms(names)
        assert len(axioms) == 3**3 + 3**2
        assert cl(rules) == cl(rules + axioms, preference_axioms=False)


class TestReduct:
    """Tests for reduct and undefeated."""

    def test_reduct_drops_defeated(self):
        """Test rules whose weak literals are in X are removed."""
        program = load_program("n1: b <- not c.\nn2: c <- not b.\na.")
        kept = reduct(program, LiteralSet.of([pos("c")]))
        assert [str(r.name) for r in kept if r.name] == ["n2"]
        assert len(kept) == 2

    def test_reduct_keeps_weak_body(self):
        """Test surviving rules keep their weak preconditions."""
        program = load_program("n1: b <- not c.")
        (rule,) = reduct(program, LiteralSet())
        assert rule.weak_body == frozenset({pos("c")})

    def test_reduct_of_lit(self):
        """Test Lit defeats every defeasible rule."""
        program = load_program("n1: b <- not c.\na.\nd <- a.")
        assert reduct(program, LiteralSet.lit(program.signature)) == program.strict_rules

    def test_undefeated_preserves_order(self):
        """Test undefeated keeps the input order."""
        program = load_program("x <- not y.\nz <- not w.\nq <- not y.")
        kept = undefeated(program.rules, LiteralSet.of([pos("w")]))
        assert [str(r.head) for r in kept] == ["x", "q"]
