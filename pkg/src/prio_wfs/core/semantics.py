"""Fixpoint engines for the well-founded semantics and its prioritized variant.

All engines iterate a monotone operator from the empty set. ``wfs`` and
``wfs_star`` alternate the anti-monotone ``gamma`` with itself or with
``gamma_star``. ``wfs_pr`` iterates ``gamma_pr`` (the declarative engine) or
admits one safe rule at a time (the incremental engine); both reach the same
least fixpoint.
"""

import logging
import random
from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .closure import cl, cn, reduct
from .program import (
    EMPTY,
    LiteralSet,
    Pref,
    PrioritizedProgram,
    Rule,
    RuleName,
    defeats,
    seminormal_form,
)

logger = logging.getLogger(__name__)

DECLARATIVE = "declarative"
INCREMENTAL = "incremental"


@dataclass(frozen=True)
class TraceStep:
    conclusions: LiteralSet
    safe_rules: Tuple[Rule, ...] = ()
    new_safe_rules: Tuple[Rule, ...] = ()


@dataclass(frozen=True)
class SemanticsTrace:
    """Iterates S1, S2, ... of one engine run; the last step holds the fixpoint.

    Fixpoint traces grow strictly and end with the fixpoint repeated. The
    incremental wfs-pr engine records one step per admitted rule instead: a
    step may repeat the previous set when the admitted rule does not fire,
    and the last step is the fixpoint without a repetition.
    """

    semantics: str
    steps: Tuple[TraceStep, ...] = ()

    @property
    def final(self) -> LiteralSet:
        if not self.steps:
            return EMPTY
        return self.steps[-1].conclusions

    def __len__(self) -> int:
        return len(self.steps)


def gamma(program: PrioritizedProgram, literals: LiteralSet) -> LiteralSet:
    return cn(reduct(program, literals), program.signature)


def gamma_star(program: PrioritizedProgram, literals: LiteralSet) -> LiteralSet:
    return cl(reduct(program, literals))


def _alternate(
    program: PrioritizedProgram,
    semantics: str,
    inner: Callable[[PrioritizedProgram, LiteralSet], LiteralSet],
) -> SemanticsTrace:
    steps: List[TraceStep] = []
    current = EMPTY
    previous_rules: Tuple[Rule, ...] = ()
    while True:
        rules = reduct(program, inner(program, current))
        following = cn(rules, program.signature)
        seen = set(previous_rules)
        new_rules = tuple(r for r in rules if r not in seen)
        steps.append(TraceStep(following, rules, new_rules))
        logger.debug(f"{semantics} step {len(steps)}: {following}")
        if following == current:
            break
        current, previous_rules = following, rules
    return SemanticsTrace(semantics, tuple(steps))


def wfs(program: PrioritizedProgram) -> SemanticsTrace:
    """Least fixpoint of gamma applied twice."""
    return _alternate(program, "wfs", gamma)


def wfs_star(program: PrioritizedProgram) -> SemanticsTrace:
    """Least fixpoint of gamma after gamma_star."""
    return _alternate(program, "wfs-star", gamma_star)


def _preferred_over(literals: LiteralSet) -> Dict[RuleName, Set[RuleName]]:
    worse: Dict[RuleName, Set[RuleName]] = defaultdict(set)
    for lit in literals:
        if isinstance(lit.atom, Pref) and not lit.strong_neg:
            worse[lit.atom.left].add(lit.atom.right)
    return worse


def _dominated(
    program: PrioritizedProgram,
    rule: Rule,
    less_preferred: Iterable[RuleName],
    established: Iterable[Rule],
) -> Tuple[Rule, ...]:
    rivals = [
        program.naming[name]
        for name in less_preferred
        if name in program.naming and program.naming[name] != rule
    ]
    if not rivals:
        return ()
    applied = cl([*established, rule])
    return program.ordered(r for r in rivals if defeats(applied, r))


def dom(
    program: PrioritizedProgram,
    rule: Rule,
    literals: LiteralSet,
    established: Iterable[Rule],
) -> Tuple[Rule, ...]:
    """Rules known to be less preferred than ``rule`` that ``rule`` defeats
    when applied together with ``established``."""
    if rule.name is None:
        return ()
    worse = _preferred_over(literals).get(rule.name, ())
    return _dominated(program, rule, worse, established)


def _survives(rule: Rule, closure: LiteralSet, context: LiteralSet, coherence: bool) -> bool:
    for blocker in rule.weak_body:
        if blocker not in closure:
            continue
        if coherence and blocker.complement() in context:
            continue
        return False
    return True


class _SafetyCheck:
    """Shared state for deciding X-safeness of single rules."""

    def __init__(self, program: PrioritizedProgram, literals: LiteralSet, coherence: bool):
        self.program = program
        self.literals = literals
        self.coherence = coherence
        self.undefeated = reduct(program, literals)
        self.worse = _preferred_over(literals)
        self._base: Optional[LiteralSet] = None

    @property
    def base(self) -> LiteralSet:
        if self._base is None:
            self._base = cl(self.undefeated)
        return self._base

    def passes(self, rule: Rule, established: Sequence[Rule]) -> bool:
        if rule.is_strict:
            return True
        dominated: Tuple[Rule, ...] = ()
        if rule.name is not None and rule.name in self.worse:
            dominated = _dominated(self.program, rule, self.worse[rule.name], established)
        if dominated:
            removed = set(dominated)
            closure = cl(r for r in self.undefeated if r not in removed)
        else:
            closure = self.base
        return _survives(rule, closure, self.literals, self.coherence)


def safe_pr(
    program: PrioritizedProgram, literals: LiteralSet, coherence: bool = False
) -> Tuple[Rule, ...]:
    """Rules safe wrt. ``literals`` once their dominated rivals are set aside.

    Built inductively from the empty set; each round re-checks every rule
    against the rules established in the previous round.
    """
    check = _SafetyCheck(program, literals, coherence)
    established: Tuple[Rule, ...] = ()
    while True:
        following = tuple(r for r in program.rules if check.passes(r, established))
        if following == established:
            return established
        established = following


def gamma_pr(
    program: PrioritizedProgram, literals: LiteralSet, coherence: bool = False
) -> LiteralSet:
    return cn(safe_pr(program, literals, coherence), program.signature)


def _wfs_pr_declarative(program: PrioritizedProgram, coherence: bool) -> SemanticsTrace:
    steps: List[TraceStep] = []
    current = EMPTY
    previous: FrozenSet[Rule] = frozenset()
    while True:
        safe = safe_pr(program, current, coherence)
        following = cn(safe, program.signature)
        steps.append(TraceStep(following, safe, tuple(r for r in safe if r not in previous)))
        logger.debug(f"wfs-pr step {len(steps)}: {following}")
        if following == current:
            break
        current, previous = following, frozenset(safe)
    return SemanticsTrace("wfs-pr", tuple(steps))


def _wfs_pr_incremental(
    program: PrioritizedProgram, coherence: bool, rng: Optional[random.Random]
) -> SemanticsTrace:
    steps: List[TraceStep] = []
    current = EMPTY
    admitted: List[Rule] = []
    admitted_set: Set[Rule] = set()
    for _ in range(len(program)):
        check = _SafetyCheck(program, current, coherence)
        candidates = [r for r in check.undefeated if r not in admitted_set]
        if rng is not None:
            rng.shuffle(candidates)
        chosen = next((r for r in candidates if check.passes(r, admitted)), None)
        if chosen is None:
            break
        admitted.append(chosen)
        admitted_set.add(chosen)
        current = cn(admitted, program.signature)
        steps.append(TraceStep(current, tuple(admitted), (chosen,)))
        logger.debug(f"wfs-pr admitted {program.label(chosen)}: {current}")
    return SemanticsTrace("wfs-pr", tuple(steps))


def wfs_pr(
    program: PrioritizedProgram,
    engine: str = DECLARATIVE,
    coherence: bool = False,
    rng: Optional[random.Random] = None,
) -> SemanticsTrace:
    """Prioritized well-founded conclusions.

    Args:
        engine: ``"declarative"`` iterates ``gamma_pr``; ``"incremental"`` admits
            one safe rule per step, trying candidates in program order.
        coherence: a weak precondition ``not b`` also counts as satisfied when
            the complement of ``b`` is already concluded.
        rng: shuffles the candidate order of the incremental engine.
    """
    if engine == DECLARATIVE:
        trace = _wfs_pr_declarative(program, coherence)
    elif engine == INCREMENTAL:
        trace = _wfs_pr_incremental(program, coherence, rng)
    else:
        raise ValueError(f"Unknown engine: {engine}")
    logger.info(f"wfs-pr ({engine}) reached {trace.final} after {len(trace)} steps")
    return trace


@dataclass(frozen=True)
class Conflict:
    kind: str  # "I" or "II"
    first: Rule
    second: Rule

    def __str__(self) -> str:
        return f"type-{self.kind}: {self.first}  /  {self.second}"


def find_conflicts(
    program: PrioritizedProgram, context: Iterable[Rule] = ()
) -> List[Conflict]:
    """Type-I conflicts (complementary heads, at least one defeasible rule) and
    type-II conflicts wrt. ``context`` (each rule, added to the context,
    defeats the other)."""
    context = tuple(context)
    conflicts: List[Conflict] = []
    rules = program.rules
    base = cl(context)
    for i, first in enumerate(rules):
        for second in rules[i + 1 :]:
            if first.is_strict and second.is_strict:
                continue
            if first.head == second.head.complement():
                conflicts.append(Conflict("I", first, second))
            if first.is_strict or second.is_strict:
                continue
            if defeats(base, first) or defeats(base, second):
                continue
            if defeats(cl([*context, first]), second) and defeats(cl([*context, second]), first):
                conflicts.append(Conflict("II", first, second))
    return conflicts


def seminormalize(
    program: PrioritizedProgram, only_conflicting: bool = True
) -> PrioritizedProgram:
    """Replace rules by their seminormal form, turning type-I conflicts into
    type-II conflicts that preferences can settle."""
    if only_conflicting:
        targets: Set[Rule] = set()
        for conflict in find_conflicts(program):
            if conflict.kind == "I":
                targets.update(r for r in (conflict.first, conflict.second) if not r.is_strict)
    else:
        targets = set(program.rules)
    return PrioritizedProgram(
        tuple(seminormal_form(r) if r in targets else r for r in program.rules)
    )

