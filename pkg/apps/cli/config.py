from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from packages.sets import Naturals, SetDescriptor

Command = Literal[
    "count",
    "oracle",
    "verify-am",
    "growth",
    "bounds",
    "iterate",
    "schur",
    "construct-f",
    "be-check",
    "monotone",
]

NEEDS_PARTS = {"count", "oracle", "growth", "bounds", "iterate", "schur", "be-check", "monotone"}
NEEDS_LIMIT = {"count", "verify-am", "growth", "schur", "monotone"}


class RunConfig(BaseModel):
    """Everything a report depends on; embedded in every JSON report."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    command: Command
    set_a: Optional[SetDescriptor] = None
    set_m: Optional[SetDescriptor] = None
    base: Optional[int] = Field(default=None, ge=2)
    n_max: Optional[int] = Field(default=None, ge=1)
    n: Optional[int] = Field(default=None, ge=0)
    k: int = Field(default=1, ge=1)
    x_list: List[int] = Field(default_factory=list)
    rounds: int = Field(default=1, ge=1)
    start: int = Field(default=0, ge=0)
    strict: bool = False
    terms: int = Field(default=4, ge=1)
    bound: Optional[int] = Field(default=None, ge=1)
    path: Literal["auto", "generic", "ap", "oracle"] = "auto"
    search_bound: Literal["exact", "proof"] = "exact"
    cap: int = Field(default=10**6, ge=1)
    format: Literal["csv", "json"] = "csv"
    budget: int = Field(default=10**9, ge=1)
    jobs: int = Field(default=1, ge=1)
    deterministic: bool = False
    output_path: Optional[str] = None

    @model_validator(mode="after")
    def _check_command(self) -> RunConfig:
        if self.command == "verify-am":
            if self.set_a is not None or self.set_m is not None:
                raise ValueError("verify-am derives A and M from --base; drop --set-a/--set-m")
            if self.base is None:
                raise ValueError("verify-am needs --base")
        if self.command in NEEDS_PARTS and self.set_a is None:
            raise ValueError(f"{self.command} needs --set-a")
        if self.command in NEEDS_LIMIT and self.n_max is None:
            raise ValueError(f"{self.command} needs --n-max")
        if self.command == "bounds" and not self.x_list:
            raise ValueError("bounds needs at least one --x")
        if any(x < 1 for x in self.x_list):
            raise ValueError("--x values must be >= 1")
        if self.command == "oracle" and self.n is None and self.n_max is None:
            raise ValueError("oracle needs --n or --n-max")
        return self

    @property
    def parts(self) -> SetDescriptor:
        if self.set_a is None:
            raise ValueError(f"{self.command} has no part set")
        return self.set_a

    @property
    def mults(self) -> SetDescriptor:
        return self.set_m if self.set_m is not None else Naturals()

    def replayable(self) -> Dict[str, Any]:
        """The JSON form embedded in reports (output location left out)."""
        return self.model_dump(mode="json", exclude={"output_path"})
