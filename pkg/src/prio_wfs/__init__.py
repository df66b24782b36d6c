"""
prio-wfs: well-founded semantics for prioritized extended logic programs.

Rules may carry names, and preferences between named rules are ordinary
literals of the language, so they can be derived and defeated like any other
conclusion. Besides the prioritized semantics the package computes the
classical and strengthened well-founded conclusions and, for small programs,
answer sets.
"""

__version__ = "0.1.0"

from .core.answerset import AnswerSetReport, analyse, answer_sets, priority_preserving, rebutted
from .core.config import Engine, OutputFormat, RunConfig, Semantics
from .core.errors import (
    DuplicateName,
    NameOnStrictRule,
    ProgramError,
    ProgramSyntaxError,
    TooLarge,
    UnboundVariable,
)
from .core.parser import load_program, parse_literal, parse_program
from .core.program import Literal, LiteralSet, PrioritizedProgram, Rule, RuleName
from .core.semantics import SemanticsTrace, wfs, wfs_pr, wfs_star
from .core.solver import Solver

__all__ = [
    "AnswerSetReport",
    "DuplicateName",
    "Engine",
    "Literal",
    "LiteralSet",
    "NameOnStrictRule",
    "OutputFormat",
    "PrioritizedProgram",
    "ProgramError",
    "ProgramSyntaxError",
    "Rule",
    "RuleName",
    "RunConfig",
    "Semantics",
    "SemanticsTrace",
    "Solver",
    "TooLarge",
    "UnboundVariable",
    "analyse",
    "answer_sets",
    "load_program",
    "parse_literal",
    "parse_program",
    "priority_preserving",
    "rebutted",
    "wfs",
    "wfs_pr",
    "wfs_star",
]
