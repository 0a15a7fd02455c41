"""Verification report records."""
from typing import Dict, List

from pydantic import BaseModel, Field

from sectio.config.constants import Verdict


class CheckOutcome(BaseModel):
    """Verdict of one check on one case."""
    case: str
    check: str
    verdict: Verdict
    detail: str = ""


class CaseReport(BaseModel):
    case: str
    outcomes: List[CheckOutcome] = Field(default_factory=list)


class VerificationReport(BaseModel):
    """All outcomes of a run, cases sorted by key."""
    cases: List[CaseReport] = Field(default_factory=list)

    @property
    def outcomes(self) -> List[CheckOutcome]:
        return [o for case in self.cases for o in case.outcomes]

    def summary(self) -> Dict[str, int]:
        counts = {v.value: 0 for v in Verdict}
        for o in self.outcomes:
            counts[o.verdict.value] += 1
        return counts

    def failures(self) -> List[CheckOutcome]:
        return [o for o in self.outcomes if o.verdict == Verdict.FAIL]

    @property
    def has_failures(self) -> bool:
        return bool(self.failures())

    @classmethod
    def merge(cls, cases: List[CaseReport]) -> "VerificationReport":
        return cls(cases=sorted(cases, key=lambda c: c.case))
