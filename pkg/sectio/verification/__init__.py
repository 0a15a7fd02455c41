from sectio.verification.checks import ALL_CHECKS, CheckContext, TheoremCheck
from sectio.verification.harness import verify_batch, verify_theorems
from sectio.verification.report import (CaseReport, CheckOutcome,
                                        VerificationReport)

__all__ = [
    "ALL_CHECKS",
    "CaseReport",
    "CheckContext",
    "CheckOutcome",
    "TheoremCheck",
    "VerificationReport",
    "verify_batch",
    "verify_theorems",
]
