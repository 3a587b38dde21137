"""Pydantic models for verification reports."""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class CheckResult(BaseModel):
    """Outcome of one checked instance."""

    name: str = Field(..., description="Instance label, e.g. 'k=3: 3A^2 > 8B^2'")
    passed: bool = Field(..., description="Whether the inequality or identity holds")
    detail: str = Field(default="", description="Exact or decimal evidence")
    value: Optional[str] = Field(None, description="Decimal rendering of the checked quantity")
    instance: Optional[str] = Field(
        None, description="Parameter instance the check belongs to, e.g. 'k=3'"
    )


class VerificationReport(BaseModel):
    """A named batch of checks plus free-form findings.

    Checks tagged with an ``instance`` are counted per instance in the summary;
    untagged checks are then shared by every instance.
    """

    name: str = Field(..., description="Verifier name")
    checks: List[CheckResult] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list, description="Findings that do not fail the run")

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def add(
        self,
        name: str,
        passed: bool,
        detail: str = "",
        value: Optional[str] = None,
        instance: Optional[str] = None,
    ) -> CheckResult:
        check = CheckResult(
            name=name, passed=bool(passed), detail=detail, value=value, instance=instance
        )
        self.checks.append(check)
        return check

    def instances(self) -> Dict[str, bool]:
        """Whether each tagged instance holds, shared checks included."""
        shared = all(check.passed for check in self.checks if check.instance is None)
        held: Dict[str, bool] = {}
        for check in self.checks:
            if check.instance is not None:
                held[check.instance] = held.get(check.instance, shared) and check.passed
        return held

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        grouped = self.instances()
        if grouped:
            return f"{status} {sum(grouped.values())}/{len(grouped)} instances"
        held = len(self.checks) - len(self.failures)
        return f"{status} {held}/{len(self.checks)} instances"
