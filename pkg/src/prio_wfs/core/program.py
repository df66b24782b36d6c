"""Literals, rules and prioritized programs.

Every value here is immutable; sets of rules and literals are frozensets so
programs can be shared freely between engines.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple, Union

from .errors import DuplicateName, NameOnStrictRule


@dataclass(frozen=True, order=True)
class RuleName:
    functor: str
    args: Tuple[str, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.functor
        return f"{self.functor}({','.join(self.args)})"


@dataclass(frozen=True)
class Ordinary:
    predicate: str
    args: Tuple[str, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.predicate
        return f"{self.predicate}({','.join(self.args)})"


@dataclass(frozen=True)
class Pref:
    """``left < right``: the rule named ``left`` is preferred."""

    left: RuleName
    right: RuleName

    def __str__(self) -> str:
        return f"{self.left} < {self.right}"


Atom = Union[Ordinary, Pref]


@dataclass(frozen=True)
class Literal:
    atom: Atom
    strong_neg: bool = False
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash((self.atom, self.strong_neg)))

    def __hash__(self) -> int:
        return self._hash

    @property
    def is_pref(self) -> bool:
        return isinstance(self.atom, Pref)

    def complement(self) -> "Literal":
        return Literal(self.atom, not self.strong_neg)

    def __str__(self) -> str:
        if not self.strong_neg:
            return str(self.atom)
        if self.is_pref:
            return f"-({self.atom})"
        return f"-{self.atom}"


def pos(predicate: str, *args: str) -> Literal:
    return Literal(Ordinary(predicate, tuple(args)))


def neg(predicate: str, *args: str) -> Literal:
    return Literal(Ordinary(predicate, tuple(args)), strong_neg=True)


def prefers(left: Union[str, RuleName], right: Union[str, RuleName]) -> Literal:
    left_name = left if isinstance(left, RuleName) else RuleName(left)
    right_name = right if isinstance(right, RuleName) else RuleName(right)
    return Literal(Pref(left_name, right_name))


@dataclass(frozen=True)
class Rule:
    head: Literal
    pos_body: FrozenSet[Literal] = frozenset()
    weak_body: FrozenSet[Literal] = frozenset()
    name: Optional[RuleName] = None
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        # accept any iterable for the bodies
        object.__setattr__(self, "pos_body", frozenset(self.pos_body))
        object.__setattr__(self, "weak_body", frozenset(self.weak_body))
        object.__setattr__(
            self,
            "_hash",
            hash((self.head, self.pos_body, self.weak_body, self.name)),
        )

    def __hash__(self) -> int:
        return self._hash

    @property
    def is_strict(self) -> bool:
        return not self.weak_body

    def __str__(self) -> str:
        return format_rule(self)


def complement(literal: Literal) -> Literal:
    return literal.complement()


def mon(rule: Rule) -> Rule:
    """Monotonic counterpart: weak preconditions and the name are dropped."""
    if rule.is_strict and rule.name is None:
        return rule
    return Rule(rule.head, rule.pos_body)


def defeats(literals: Iterable[Literal], rule: Rule) -> bool:
    if not rule.weak_body:
        return False
    return any(b in literals for b in rule.weak_body)


def seminormal_form(rule: Rule) -> Rule:
    return Rule(
        rule.head,
        rule.pos_body,
        rule.weak_body | {rule.head.complement()},
        rule.name,
    )


def format_rule(rule: Rule) -> str:
    prefix = f"{rule.name}: " if rule.name is not None else ""
    body = [str(lit) for lit in sorted(rule.pos_body, key=str)]
    body += [f"not {lit}" for lit in sorted(rule.weak_body, key=str)]
    if not body:
        return f"{prefix}{rule.head}."
    return f"{prefix}{rule.head} <- {', '.join(body)}."


@dataclass(frozen=True)
class LiteralSet:
    members: FrozenSet[Literal] = frozenset()
    is_lit: bool = False

    @classmethod
    def of(cls, literals: Iterable[Literal]) -> "LiteralSet":
        return cls(frozenset(literals))

    @classmethod
    def lit(cls, signature: "Signature") -> "LiteralSet":
        return cls(signature.literals, is_lit=True)

    def __contains__(self, literal: object) -> bool:
        return literal in self.members

    def __iter__(self) -> Iterator[Literal]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __le__(self, other: "LiteralSet") -> bool:
        return self.members <= other.members

    def __lt__(self, other: "LiteralSet") -> bool:
        return self.members < other.members

    @property
    def is_consistent(self) -> bool:
        return not any(lit.complement() in self.members for lit in self.members)

    def rendered(self) -> List[str]:
        return sorted(str(lit) for lit in self.members)

    def __str__(self) -> str:
        if self.is_lit:
            return "Lit"
        if not self.members:
            return "∅"
        return "{" + ", ".join(self.rendered()) + "}"


EMPTY = LiteralSet()


@dataclass(frozen=True)
class Signature:
    atoms: FrozenSet[Atom]
    names: FrozenSet[RuleName]

    @cached_property
    def literals(self) -> FrozenSet[Literal]:
        """Both polarities of every atom, Pref atoms over all name pairs included."""
        atoms = set(self.atoms)
        atoms.update(Pref(left, right) for left in self.names for right in self.names)
        return frozenset(
            Literal(atom, polarity) for atom in atoms for polarity in (False, True)
        )


@dataclass(frozen=True)
class PrioritizedProgram:
    """A rule set together with its (partial, injective) naming function.

    Textually repeated rules collapse; rule order is kept for reproducible
    traces.
    """

    rules: Tuple[Rule, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rules", tuple(dict.fromkeys(self.rules)))
        self._check_naming()

    def _check_naming(self) -> None:
        seen: Dict[RuleName, Rule] = {}
        for rule in self.rules:
            if rule.name is None:
                continue
            if rule.is_strict:
                raise NameOnStrictRule(str(rule.name), format_rule(rule))
            other = seen.get(rule.name)
            if other is not None:
                raise DuplicateName(str(rule.name), format_rule(other), format_rule(rule))
            seen[rule.name] = rule

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    @cached_property
    def naming(self) -> Dict[RuleName, Rule]:
        return {rule.name: rule for rule in self.rules if rule.name is not None}

    @cached_property
    def position(self) -> Dict[Rule, int]:
        return {rule: index for index, rule in enumerate(self.rules)}

    @cached_property
    def named_rules(self) -> Tuple[Rule, ...]:
        return tuple(rule for rule in self.rules if rule.name is not None)

    @cached_property
    def strict_rules(self) -> Tuple[Rule, ...]:
        return tuple(rule for rule in self.rules if rule.is_strict)

    @cached_property
    def signature(self) -> Signature:
        atoms = set()
        names = set(self.naming)
        for rule in self.rules:
            for lit in (rule.head, *rule.pos_body, *rule.weak_body):
                atoms.add(lit.atom)
                if isinstance(lit.atom, Pref):
                    names.add(lit.atom.left)
                    names.add(lit.atom.right)
        return Signature(frozenset(atoms), frozenset(names))

    @property
    def names(self) -> FrozenSet[RuleName]:
        return self.signature.names

    @cached_property
    def has_preferences(self) -> bool:
        return any(isinstance(atom, Pref) for atom in self.signature.atoms)

    def rule_named(self, name: RuleName) -> Optional[Rule]:
        return self.naming.get(name)

    def ordered(self, rules: Iterable[Rule]) -> Tuple[Rule, ...]:
        return tuple(sorted(rules, key=lambda rule: self.position.get(rule, -1)))

    def label(self, rule: Rule) -> str:
        return str(rule.name) if rule.name is not None else format_rule(rule)

    def __str__(self) -> str:
        return format_program(self)


def format_program(program: PrioritizedProgram) -> str:
    return "\n".join(format_rule(rule) for rule in program.rules)
