"""CheckReport: the uniform verdict every check returns."""

from __future__ import annotations

from typing import Any, Literal, Sequence

from pydantic import BaseModel, Field, model_validator

from leibniz.kernel.fields import FieldContext, Scalar
from leibniz.kernel.tensors import Matrix


class Witness(BaseModel):
    condition: str
    indices: list[int] = Field(default_factory=list)  # 1-based basis indices
    residual: dict[str, str] = Field(default_factory=dict)  # nonzero coefficients


class CheckReport(BaseModel):
    status: Literal["holds", "fails"]
    subject: str
    witnesses: list[Witness] = Field(default_factory=list)
    details: dict[str, Any] = Field(default_factory=dict)
    derived_objects: dict[str, Any] | None = None

    @model_validator(mode="after")
    def _failure_has_witness(self) -> CheckReport:
        if self.status == "fails" and not self.witnesses:
            raise ValueError("a failing report must carry at least one witness")
        return self

    @property
    def holds(self) -> bool:
        return self.status == "holds"

    @classmethod
    def from_witnesses(cls, subject: str, witnesses: Sequence[Witness], **extra: Any) -> CheckReport:
        return cls(
            status="fails" if witnesses else "holds",
            subject=subject,
            witnesses=list(witnesses),
            **extra,
        )


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def residual_of_vector(field: FieldContext, vector: Sequence[Scalar]) -> dict[str, str]:
    return {str(k + 1): field.format(x) for k, x in enumerate(vector) if x}


def residual_of_entries(field: FieldContext, entries: Sequence[tuple[tuple, Scalar]]) -> dict[str, str]:
    return {",".join(str(i + 1) for i in index): field.format(x) for index, x in entries if x}


def witness(condition: str, indices: Sequence[int], residual: dict[str, str] | None = None) -> Witness:
    return Witness(condition=condition, indices=[i + 1 for i in indices], residual=residual or {})


def matrix_payload(m: Matrix) -> list[list[str]]:
    return [[m.field.format(x) for x in row] for row in m.entries]
