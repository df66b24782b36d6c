import itertools
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple, Union

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedInput

from .errors import DuplicateName, NameOnStrictRule, ProgramSyntaxError, UnboundVariable
from .program import Literal, Ordinary, Pref, PrioritizedProgram, Rule, RuleName

logger = logging.getLogger(__name__)

GRAMMAR = r"""
program: statement*

?statement: rule
          | domain

domain: "#domain" IDENT ("," IDENT)* "."

rule: (name ":")? literal (ARROW body?)? "."

body: premise ("," premise)*

premise: literal          -> strong_premise
       | "not" literal    -> weak_premise

literal: atom             -> positive
       | "-" atom         -> negative

atom: IDENT args?                 -> ordinary
    | name "<" name               -> pref
    | "(" name "<" name ")"       -> pref

name: IDENT args?         -> name
    | VAR                 -> name_var

args: "(" arg ("," arg)* ")"

?arg: IDENT | VAR

ARROW: "<-" | "<="
IDENT: /[a-z0-9][A-Za-z0-9_']*/
VAR: /[A-Z][A-Za-z0-9_']*/
COMMENT: /%[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""

SEMINORMAL_ARROW = "<="


def is_variable(identifier: str) -> bool:
    return identifier[:1].isupper()


@dataclass(frozen=True)
class SchemaRule:
    """A rule as written: identifiers may still be variables.

    ``seminormal`` marks rules written with ``<=``; ``expand_seminormal``
    turns them into ordinary rules.
    """

    head: Literal
    pos_body: Tuple[Literal, ...] = ()
    weak_body: Tuple[Literal, ...] = ()
    name: Optional[RuleName] = None
    seminormal: bool = False
    line: int = field(default=0, compare=False)

    @property
    def is_strict(self) -> bool:
        return not self.weak_body and not self.seminormal

    def variables(self) -> Tuple[str, ...]:
        found: Dict[str, None] = {}
        for identifier in self._identifiers():
            if is_variable(identifier):
                found[identifier] = None
        return tuple(found)

    def constants(self) -> Set[str]:
        return {i for i in self._identifiers() if not is_variable(i)}

    def _identifiers(self) -> Iterable[str]:
        if self.name is not None:
            if self.name.args:
                yield from self.name.args
            elif is_variable(self.name.functor):
                yield self.name.functor
        for lit in (self.head, *self.pos_body, *self.weak_body):
            if isinstance(lit.atom, Pref):
                yield from _name_identifiers(lit.atom.left)
                yield from _name_identifiers(lit.atom.right)
            else:
                yield from lit.atom.args

    def substitute(self, binding: Dict[str, str]) -> Rule:
        schema = expand_seminormal(self)
        return Rule(
            _substitute_literal(schema.head, binding),
            [_substitute_literal(lit, binding) for lit in schema.pos_body],
            [_substitute_literal(lit, binding) for lit in schema.weak_body],
            _substitute_name(schema.name, binding) if schema.name is not None else None,
        )

    def __str__(self) -> str:
        prefix = f"{self.name}: " if self.name is not None else ""
        body = [str(lit) for lit in self.pos_body]
        body += [f"not {lit}" for lit in self.weak_body]
        arrow = SEMINORMAL_ARROW if self.seminormal else "<-"
        if not body:
            return f"{prefix}{self.head} {arrow} ." if self.seminormal else f"{prefix}{self.head}."
        return f"{prefix}{self.head} {arrow} {', '.join(body)}."


@dataclass(frozen=True)
class ParsedProgram:
    rules: Tuple[SchemaRule, ...]
    domain: FrozenSet[str] = frozenset()

    def constants(self) -> FrozenSet[str]:
        found: Set[str] = set(self.domain)
        for rule in self.rules:
            found.update(rule.constants())
        return frozenset(found)


def _name_identifiers(name: RuleName) -> Iterable[str]:
    if not name.args:
        # only a bare variable is a term, e.g. D1 in D1 < D2
        if is_variable(name.functor):
            yield name.functor
    else:
        yield from name.args


def _substitute_name(name: RuleName, binding: Dict[str, str]) -> RuleName:
    return RuleName(
        binding.get(name.functor, name.functor),
        tuple(binding.get(arg, arg) for arg in name.args),
    )


def _substitute_literal(literal: Literal, binding: Dict[str, str]) -> Literal:
    atom = literal.atom
    if isinstance(atom, Pref):
        new_atom: Union[Ordinary, Pref] = Pref(
            _substitute_name(atom.left, binding), _substitute_name(atom.right, binding)
        )
    else:
        new_atom = Ordinary(atom.predicate, tuple(binding.get(a, a) for a in atom.args))
    return Literal(new_atom, literal.strong_neg)


class ProgramTransformer(Transformer):
    def program(self, statements: list) -> ParsedProgram:
        rules = [s for s in statements if isinstance(s, SchemaRule)]
        domain: Set[str] = set()
        for statement in statements:
            if isinstance(statement, frozenset):
                domain.update(statement)
        return ParsedProgram(tuple(rules), frozenset(domain))

    def domain(self, constants: list) -> FrozenSet[str]:
        return frozenset(str(c) for c in constants)

    @v_args(meta=True)
    def rule(self, meta, children: list) -> SchemaRule:
        name: Optional[RuleName] = None
        arrow: Optional[str] = None
        pos_body: List[Literal] = []
        weak_body: List[Literal] = []
        head: Optional[Literal] = None
        for child in children:
            if isinstance(child, RuleName):
                name = child
            elif isinstance(child, Literal):
                head = child
            elif isinstance(child, Token) and child.type == "ARROW":
                arrow = str(child)
            elif isinstance(child, list):
                for weak, lit in child:
                    (weak_body if weak else pos_body).append(lit)
        assert head is not None
        return SchemaRule(
            head,
            tuple(dict.fromkeys(pos_body)),
            tuple(dict.fromkeys(weak_body)),
            name,
            seminormal=arrow == SEMINORMAL_ARROW,
            line=getattr(meta, "line", 0),
        )

    def body(self, premises: list) -> list:
        return list(premises)

    @v_args(inline=True)
    def strong_premise(self, literal: Literal) -> Tuple[bool, Literal]:
        return (False, literal)

    @v_args(inline=True)
    def weak_premise(self, literal: Literal) -> Tuple[bool, Literal]:
        return (True, literal)

    @v_args(inline=True)
    def positive(self, atom) -> Literal:
        return Literal(atom)

    @v_args(inline=True)
    def negative(self, atom) -> Literal:
        return Literal(atom, strong_neg=True)

    @v_args(inline=True)
    def ordinary(self, predicate: Token, args: Tuple[str, ...] = ()) -> Ordinary:
        return Ordinary(str(predicate), args)

    @v_args(inline=True)
    def pref(self, left: RuleName, right: RuleName) -> Pref:
        return Pref(left, right)

    @v_args(inline=True)
    def name(self, functor: Token, args: Tuple[str, ...] = ()) -> RuleName:
        return RuleName(str(functor), args)

    @v_args(inline=True)
    def name_var(self, variable: Token) -> RuleName:
        return RuleName(str(variable))

    def args(self, items: list) -> Tuple[str, ...]:
        return tuple(str(item) for item in items)


def _syntax_error(message: str, error: UnexpectedInput, text: str) -> ProgramSyntaxError:
    try:
        context = error.get_context(text)
    except (TypeError, IndexError):
        context = ""
    line = error.line if isinstance(error.line, int) and error.line > 0 else None
    column = error.column if isinstance(error.column, int) and error.column > 0 else None
    return ProgramSyntaxError(message, line, column, context)


_program_parser = Lark(GRAMMAR, start="program", parser="lalr", propagate_positions=True)
_literal_parser = Lark(GRAMMAR, start="literal", parser="lalr")
_transformer = ProgramTransformer()


class ProgramParser:
    """Reads program text or files into schema rules and ground programs."""

    def __init__(self, strict_names: str = "error"):
        self.strict_names = strict_names

    def parse_text(self, text: str) -> ParsedProgram:
        try:
            tree = _program_parser.parse(text)
        except UnexpectedInput as e:
            raise _syntax_error("Malformed rule", e, text) from e
        parsed = _transformer.transform(tree)
        rules = tuple(self._check_names(parsed.rules))
        logger.debug(f"Parsed {len(rules)} schema rules")
        return ParsedProgram(rules, parsed.domain)

    def parse_file(self, file_path: Union[str, Path]) -> ParsedProgram:
        file_path = Path(file_path)
        if not file_path.exists():
            raise FileNotFoundError(f"File not found: {file_path}")
        return self.parse_text(file_path.read_text(encoding="utf-8"))

    def load(
        self, text: str, extra_constants: Iterable[str] = ()
    ) -> PrioritizedProgram:
        parsed = self.parse_text(text)
        schemas = [expand_seminormal(rule) for rule in parsed.rules]
        return ground(schemas, parsed.constants() | set(extra_constants))

    def load_file(
        self, file_path: Union[str, Path], extra_constants: Iterable[str] = ()
    ) -> PrioritizedProgram:
        parsed = self.parse_file(file_path)
        schemas = [expand_seminormal(rule) for rule in parsed.rules]
        return ground(schemas, parsed.constants() | set(extra_constants))

    def _check_names(self, rules: Sequence[SchemaRule]) -> Iterable[SchemaRule]:
        owners: Dict[RuleName, SchemaRule] = {}
        for rule in rules:
            if rule.name is not None and rule.is_strict:
                if self.strict_names != "warn":
                    raise NameOnStrictRule(str(rule.name), str(rule))
                logger.warning(
                    f"Line {rule.line}: dropping name {rule.name} from strict rule"
                )
                rule = SchemaRule(rule.head, rule.pos_body, rule.weak_body, None, False, rule.line)
            if rule.name is not None:
                other = owners.get(rule.name)
                if other is not None and other != rule:
                    raise DuplicateName(str(rule.name), str(other), str(rule))
                owners[rule.name] = rule
            yield rule


def parse_program(text: str) -> List[SchemaRule]:
    return list(ProgramParser().parse_text(text).rules)


def parse_literal(text: str) -> Literal:
    try:
        tree = _literal_parser.parse(text)
    except UnexpectedInput as e:
        raise _syntax_error("Malformed literal", e, text) from e
    return _transformer.transform(tree)


def expand_seminormal(rule: SchemaRule) -> SchemaRule:
    """``c <= body`` becomes ``c <- body, not c'`` with c' the complement of c."""
    if not rule.seminormal:
        return rule
    blocker = rule.head.complement()
    weak_body = rule.weak_body if blocker in rule.weak_body else rule.weak_body + (blocker,)
    return SchemaRule(rule.head, rule.pos_body, weak_body, rule.name, False, rule.line)


def ground(schemas: Sequence[SchemaRule], constants: Iterable[str]) -> PrioritizedProgram:
    """Instantiate every schema over all combinations of ``constants``.

    The preference axioms are not generated here; the closure engine applies
    them on demand.
    """
    domain = sorted(set(constants))
    rules: List[Rule] = []
    for schema in schemas:
        variables = schema.variables()
        if not variables:
            rules.append(schema.substitute({}))
            continue
        if not domain:
            raise UnboundVariable(", ".join(variables), str(schema))
        for values in itertools.product(domain, repeat=len(variables)):
            rules.append(schema.substitute(dict(zip(variables, values))))
    program = PrioritizedProgram(tuple(rules))
    logger.debug(
        f"Grounded {len(schemas)} schemas into {len(program)} rules over {len(domain)} constants"
    )
    return program


def load_program(
    source: Union[str, Path],
    extra_constants: Iterable[str] = (),
    strict_names: str = "error",
) -> PrioritizedProgram:
    """Parse, expand and ground a program given as text or as a file path."""
    parser = ProgramParser(strict_names=strict_names)
    if isinstance(source, Path):
        return parser.load_file(source, extra_constants)
    return parser.load(source, extra_constants)
