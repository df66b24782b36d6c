from datetime import datetime
from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class TraceStepReport(BaseModel):
    step: int = Field(..., description="1-based iteration index")
    conclusions: List[str] = Field(default_factory=list)
    new_safe_rules: List[str] = Field(default_factory=list)


class InclusionCheck(BaseModel):
    smaller: str
    larger: str
    holds: bool
    missing: List[str] = Field(default_factory=list, description="Literals of smaller not in larger")


class SolveReport(BaseModel):
    semantics: str = Field(..., description="Semantics that produced the report")
    program: Optional[str] = None
    timestamp: str = Field(default_factory=lambda: datetime.now().isoformat())
    conclusions: List[str] = Field(default_factory=list)
    inconsistent: bool = False
    trace: List[TraceStepReport] = Field(default_factory=list)
    answer_sets: List[List[str]] = Field(default_factory=list)
    priority_preserving: List[List[str]] = Field(default_factory=list)
    rebutted: Dict[str, List[str]] = Field(default_factory=dict)
    comparison: Dict[str, List[str]] = Field(default_factory=dict)
    inclusions: List[InclusionCheck] = Field(default_factory=list)
    engines_agree: Optional[bool] = None

    @property
    def ok(self) -> bool:
        return all(check.holds for check in self.inclusions) and self.engines_agree is not False


class FixtureResult(BaseModel):
    name: str
    passed: bool
    checks: int = 0
    mismatches: List[str] = Field(default_factory=list)
