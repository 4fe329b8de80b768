"""
Modelos de relatório do comando verify
"""

from typing import List, Optional

from pydantic import BaseModel


class CheckSummary(BaseModel):
    """Contagens de uma verificação sobre todas as tentativas"""
    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    first_failure_trial: Optional[int] = None
    first_failure: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.failed == 0


class VerificationReport(BaseModel):
    """Relatório consolidado da verificação"""
    passed: bool
    source: str
    trials: int
    seed: Optional[int] = None
    checks: List[CheckSummary] = []
    counterexample_trial: Optional[int] = None
    counterexample_path: Optional[str] = None
