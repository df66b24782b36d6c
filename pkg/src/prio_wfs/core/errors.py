from typing import Optional


class ProgramError(Exception):
    """Base class for everything wrong with an input program."""


class ProgramSyntaxError(ProgramError):
    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        column: Optional[int] = None,
        context: str = "",
    ):
        self.line = line
        self.column = column
        self.context = context
        location = f" at line {line}, column {column}" if line is not None else ""
        detail = f"\n{context}" if context else ""
        super().__init__(f"{message}{location}{detail}")


class DuplicateName(ProgramError):
    def __init__(self, name: str, first: str, second: str):
        self.name = name
        super().__init__(f"Rule name {name} used for two rules: {first} / {second}")


class NameOnStrictRule(ProgramError):
    def __init__(self, name: str, rule: str):
        self.name = name
        super().__init__(f"Strict rule may not carry a name ({name}): {rule}")


class UnboundVariable(ProgramError):
    def __init__(self, variables: str, rule: str):
        self.variables = variables
        super().__init__(f"No constants to bind {variables} in: {rule}")


class TooLarge(ProgramError):
    def __init__(self, atoms: int, limit: int):
        self.atoms = atoms
        self.limit = limit
        super().__init__(
            f"Answer-set enumeration over {atoms} atoms exceeds the limit of {limit}"
        )
