import json
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Semantics(str, Enum):
    WFS = "wfs"
    WFS_STAR = "wfs-star"
    WFS_PR = "wfs-pr"
    ANSWER = "answer"
    PP_ANSWER = "pp-answer"
    DIFF = "diff"


class Engine(str, Enum):
    DECLARATIVE = "declarative"
    INCREMENTAL = "incremental"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


def load_mapping(path: Union[str, Path]) -> Dict[str, Any]:
    """Read a JSON or YAML document that must hold a mapping."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Configuration file not found: {path}")
    with open(path, encoding="utf-8") as f:
        if path.suffix.lower() in (".yml", ".yaml"):
            data = yaml.safe_load(f)
        else:
            data = json.load(f)
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ValueError(f"Expected a mapping in {path}")
    return data


class RunConfig(BaseModel):
    model_config = ConfigDict(use_enum_values=False, extra="forbid")

    input: Optional[Path] = Field(None, description="Program file")
    semantics: Semantics = Field(default=Semantics.WFS_PR, description="Semantics to compute")
    engine: Engine = Field(default=Engine.DECLARATIVE, description="wfs-pr engine")
    coherence: bool = Field(default=False, description="Coherent safeness test")
    trace: bool = Field(default=False, description="Report every iteration step")
    format: OutputFormat = Field(default=OutputFormat.TEXT, description="Output format")
    max_atoms: int = Field(default=20, ge=1, description="Answer-set enumeration guard")
    seminormal: bool = Field(default=False, description="Seminormalize conflicting rules")
    strict_names: str = Field(default="error", description="error or warn on named strict rules")
    output: Optional[Path] = Field(None, description="Write the JSON report here")

    @field_validator("strict_names")
    @classmethod
    def validate_strict_names(cls, v: str) -> str:
        if v not in ("error", "warn"):
            raise ValueError("strict_names must be 'error' or 'warn'")
        return v

    @model_validator(mode="after")
    def validate_combination(self) -> "RunConfig":
        if self.engine != Engine.DECLARATIVE and self.semantics != Semantics.WFS_PR:
            raise ValueError(f"--engine only applies to wfs-pr, not {self.semantics.value}")
        if self.coherence and self.semantics not in (Semantics.WFS_PR, Semantics.DIFF):
            raise ValueError(f"--coherence only applies to wfs-pr and diff, not {self.semantics.value}")
        return self

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "RunConfig":
        return cls(**load_mapping(path))

    def merged(self, overrides: Dict[str, Any]) -> "RunConfig":
        """Copy with every non-None override applied, validated again."""
        data = self.model_dump()
        data.update({k: v for k, v in overrides.items() if v is not None})
        return RunConfig(**data)


class Expectation(BaseModel):
    """Expected result of one run over a fixture."""

    semantics: Semantics
    engine: Engine = Engine.DECLARATIVE
    coherence: bool = False
    conclusions: Optional[List[str]] = None
    answer_sets: Optional[List[List[str]]] = None

    @model_validator(mode="after")
    def validate_target(self) -> "Expectation":
        if self.semantics == Semantics.DIFF:
            raise ValueError("diff runs have no fixed expectation")
        if self.semantics in (Semantics.ANSWER, Semantics.PP_ANSWER):
            if self.answer_sets is None:
                raise ValueError(f"{self.semantics.value} expectation needs answer_sets")
        elif self.conclusions is None:
            raise ValueError(f"{self.semantics.value} expectation needs conclusions")
        return self

    @property
    def label(self) -> str:
        parts = [self.semantics.value]
        if self.semantics == Semantics.WFS_PR:
            parts.append(self.engine.value)
        if self.coherence:
            parts.append("coherence")
        return "/".join(parts)


class FixtureSpec(BaseModel):
    description: str = ""
    seminormal: bool = False
    expectations: List[Expectation] = Field(default_factory=list)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "FixtureSpec":
        return cls(**load_mapping(path))
