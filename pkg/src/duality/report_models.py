"""
Modelos de relatório da verificação de dualidade
"""

from typing import List, Optional

from pydantic import BaseModel


class PairMismatch(BaseModel):
    """Par ou essencial sem correspondente no dual"""
    kind: str
    side: str
    indices: List[int]
    values: List[Optional[float]] = []


class DualityReport(BaseModel):
    """Resultado de check_dual_pairing"""
    passed: bool
    ambient_dim: int
    n_cells: int
    n_pairs: int
    n_essential: int
    mismatches: List[PairMismatch] = []
    message: Optional[str] = None


class DualityBatchReport(BaseModel):
    """Resultado do comando verify-duality sobre uma ou várias imagens"""
    passed: bool
    mode: str
    construction: str
    images: int
    failed: int
    reports: List[DualityReport] = []
    isomorphism_errors: List[str] = []
