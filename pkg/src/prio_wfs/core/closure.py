"""Forward chaining over the monotonic counterparts of rules.

``cl`` is the linear-time Horn closure: every rule keeps a counter of
unsatisfied positive preconditions, so one pass over the rule bodies is
enough. Complementary literals are treated as unrelated atoms here;
consistency is checked afterwards by ``cn``.

The transitivity and antisymmetry schemata for ``<`` are never
materialized. Whenever ``n1 < n2`` is derived, ``-(n2 < n1)`` and the
transitive consequences over the preferences derived so far are queued
like any other derived literal.
"""

from collections import defaultdict, deque
from typing import DefaultDict, Deque, Dict, Iterable, List, Set, Tuple

from .program import (
    Literal,
    LiteralSet,
    PrioritizedProgram,
    Pref,
    Rule,
    RuleName,
    Signature,
    defeats,
)


class _PreferenceIndex:
    def __init__(self) -> None:
        self.above: DefaultDict[RuleName, Set[RuleName]] = defaultdict(set)
        self.below: DefaultDict[RuleName, Set[RuleName]] = defaultdict(set)

    def add(self, pref: Pref) -> List[Literal]:
        left, right = pref.left, pref.right
        self.above[right].add(left)
        self.below[left].add(right)
        consequences = [Literal(Pref(right, left), strong_neg=True)]
        for better in tuple(self.above[left]):
            consequences.append(Literal(Pref(better, right)))
        for worse in tuple(self.below[right]):
            consequences.append(Literal(Pref(left, worse)))
        return consequences


def _forward_chain(rules: Iterable[Rule], preference_axioms: bool) -> Set[Literal]:
    rule_list = list(rules)
    missing: List[int] = []
    waiting: Dict[Literal, List[int]] = defaultdict(list)
    agenda: Deque[Literal] = deque()
    for index, rule in enumerate(rule_list):
        missing.append(len(rule.pos_body))
        if rule.pos_body:
            for lit in rule.pos_body:
                waiting[lit].append(index)
        else:
            agenda.append(rule.head)

    preferences = _PreferenceIndex()
    derived: Set[Literal] = set()
    while agenda:
        lit = agenda.popleft()
        if lit in derived:
            continue
        derived.add(lit)
        for index in waiting.get(lit, ()):
            missing[index] -= 1
            if missing[index] == 0:
                agenda.append(rule_list[index].head)
        if preference_axioms and not lit.strong_neg and isinstance(lit.atom, Pref):
            agenda.extend(preferences.add(lit.atom))
    return derived


def cl(rules: Iterable[Rule], preference_axioms: bool = True) -> LiteralSet:
    """Least set of literals closed under the monotonic counterparts of ``rules``."""
    return LiteralSet(frozenset(_forward_chain(rules, preference_axioms)))


def is_consistent(literals: LiteralSet) -> bool:
    return not literals.is_lit and literals.is_consistent


def cn(rules: Iterable[Rule], signature: Signature) -> LiteralSet:
    """``cl`` collapsed to Lit when it contains a complementary pair."""
    closure = cl(rules)
    if closure.is_consistent:
        return closure
    return LiteralSet.lit(signature)


def undefeated(rules: Iterable[Rule], literals: LiteralSet) -> Tuple[Rule, ...]:
    return tuple(rule for rule in rules if not defeats(literals, rule))


def reduct(program: PrioritizedProgram, literals: LiteralSet) -> Tuple[Rule, ...]:
    """The rules of ``program`` not defeated by ``literals``, in program order.

    Weak preconditions stay on the rules; every closure ignores them.
    """
    if literals.is_lit:
        return program.strict_rules
    return undefeated(program.rules, literals)


def materialize_preference_axioms(names: Iterable[RuleName]) -> List[Rule]:
    universe = sorted(set(names))
    axioms: List[Rule] = []
    for first in universe:
        for second in universe:
            preferred = Literal(Pref(first, second))
            axioms.append(Rule(Literal(Pref(second, first), strong_neg=True), {preferred}))
            for third in universe:
                axioms.append(
                    Rule(
                        Literal(Pref(first, third)),
                        {preferred, Literal(Pref(second, third))},
                    )
                )
    return axioms
