"""Pydantic models for parsed commands and emitted records."""

from typing import List, Literal, Optional

from pydantic import BaseModel, Field

OutputFormat = Literal["text", "csv", "jsonl"]


class Command(BaseModel):
    """One parsed invocation."""

    verb: str = Field(..., description="Verb such as lambda2, verify or scan")
    arguments: List[str] = Field(default_factory=list, description="Positional arguments")
    output_format: OutputFormat = Field(default="text", description="text, csv or jsonl")
    digits: int = Field(default=6, ge=1, description="Decimal digits after the point")
    quiet: bool = Field(default=False, description="Suppress banner and status lines")


class ConstantRecord(BaseModel):
    """An exact value and its rounded decimal."""

    verb: str = Field(..., description="Verb that produced the value")
    input: str = Field(..., description="Input expression as given")
    exact: str = Field(..., description="Exact value, ASCII surd form")
    decimal: str = Field(..., description="Correctly rounded decimal")
    witness_position: Optional[int] = Field(None, description="Period position attaining it")
    witness: Optional[str] = Field(None, description="Dominant kappa or note")
    expansion: Optional[str] = Field(None, description="Canonical continued fraction")


class PatternRecord(BaseModel):
    """One row of the prohibited-pattern table."""

    pattern: str
    kappa: str
    alpha_star_side: str
    alpha_side: str
    bound_exact: str
    bound_decimal: str
    printed: Optional[str] = None
    matches_printed: bool
    exceeds_lambda_inf: bool
    perturbations_checked: int


class JunctionRecord(BaseModel):
    """Kappa enclosures at one junction of a continuum family prefix."""

    index: int
    kappa4_low: str
    kappa4_high: str
    kappa4_dominates: bool
