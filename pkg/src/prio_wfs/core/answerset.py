"""Brute-force answer sets and the priority-preserving filter.

Meant for checking the well-founded engines on small programs, not for
solving. The reduct of a program only depends on which weakly negated
literals a candidate contains, so the search guesses that part and lets
``gamma`` compute the rest.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Set, Tuple

from .closure import cl, reduct
from .errors import TooLarge
from .program import EMPTY, Atom, Literal, LiteralSet, PrioritizedProgram, Rule, defeats
from .semantics import dom, gamma

logger = logging.getLogger(__name__)

DEFAULT_MAX_ATOMS = 20


def _guess_pool(program: PrioritizedProgram) -> List[Literal]:
    reachable = cl(program.rules)
    pool = {
        lit for rule in program.rules for lit in rule.weak_body if lit in reachable
    }
    return sorted(pool, key=str)


def _choices(pool: Iterable[Literal]) -> List[Tuple[Literal, ...]]:
    by_atom: Dict[Atom, List[Literal]] = {}
    for lit in pool:
        by_atom.setdefault(lit.atom, []).append(lit)
    # per atom: neither polarity, or exactly one of those in the pool
    return [((),) + tuple((lit,) for lit in lits) for lits in by_atom.values()]


def answer_sets(
    program: PrioritizedProgram, max_atoms: int = DEFAULT_MAX_ATOMS
) -> List[LiteralSet]:
    """All X with X = gamma(X), sorted by rendering; Lit included when it is one.

    Each guessable atom is left out or guessed with one of its polarities in
    the pool, so up to ``3 ** max_atoms`` guesses are checked.

    Raises:
        TooLarge: more than ``max_atoms`` atoms occur in guessable literals.
    """
    signature = program.signature
    if not cl(program.strict_rules).is_consistent:
        # Lit is the only answer set: every candidate contains the strict closure
        return [LiteralSet.lit(signature)]

    pool = _guess_pool(program)
    choices = _choices(pool)
    if len(choices) > max_atoms:
        raise TooLarge(len(choices), max_atoms)

    weak = set(pool)
    found: Set[LiteralSet] = set()
    guesses = 0
    for combination in itertools.product(*choices):
        guesses += 1
        guess = LiteralSet.of(lit for part in combination for lit in part)
        candidate = gamma(program, guess)
        if candidate.is_lit:
            continue
        if {lit for lit in candidate if lit in weak} == guess.members:
            found.add(candidate)
    logger.debug(f"Checked {guesses} guesses over {len(choices)} atoms")
    result = sorted(found, key=lambda s: s.rendered())
    logger.info(f"Found {len(result)} answer sets")
    return result


def rebutted(program: PrioritizedProgram, answer_set: LiteralSet) -> Tuple[Rule, ...]:
    """Rules whose positive preconditions hold in ``answer_set`` but which it defeats."""
    return tuple(
        rule
        for rule in program.rules
        if rule.pos_body <= answer_set.members and defeats(answer_set, rule)
    )


def priority_preserving(program: PrioritizedProgram, answer_set: LiteralSet) -> bool:
    undefeated = reduct(program, answer_set)
    for rule in rebutted(program, answer_set):
        dominated = set(dom(program, rule, answer_set, undefeated))
        remaining = cl(r for r in undefeated if r not in dominated)
        if not defeats(remaining, rule):
            return False
    return True


def skeptical(sets: Iterable[LiteralSet]) -> LiteralSet:
    """Literals contained in every set; empty for an empty family."""
    family = list(sets)
    if not family:
        return EMPTY
    members = frozenset.intersection(*(s.members for s in family))
    return LiteralSet(members, is_lit=all(s.is_lit for s in family))


@dataclass(frozen=True)
class AnswerSetReport:
    answer_sets: Tuple[LiteralSet, ...] = ()
    pp_answer_sets: Tuple[LiteralSet, ...] = ()
    rebutted: Dict[LiteralSet, Tuple[Rule, ...]] = field(default_factory=dict)

    @property
    def skeptical(self) -> LiteralSet:
        return skeptical(self.answer_sets)

    @property
    def skeptical_pp(self) -> LiteralSet:
        return skeptical(self.pp_answer_sets)


def analyse(
    program: PrioritizedProgram, max_atoms: int = DEFAULT_MAX_ATOMS
) -> AnswerSetReport:
    sets = answer_sets(program, max_atoms)
    return AnswerSetReport(
        answer_sets=tuple(sets),
        pp_answer_sets=tuple(a for a in sets if priority_preserving(program, a)),
        rebutted={a: rebutted(program, a) for a in sets},
    )
