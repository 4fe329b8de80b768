"""
Álgebra linear mínima sobre GF(2) com vetores em bitsets (int do Python)
"""

from typing import Dict, Iterable, List


class GF2Basis:
    """
    Base incremental de um subespaço de GF(2)^m

    Cada vetor da base é indexado pelo seu bit mais alto; inserir um
    vetor o reduz pelos pivôs existentes.
    """

    def __init__(self):
        self.pivots: Dict[int, int] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vector: int) -> int:
        """Resto de `vector` módulo a base"""
        while vector:
            top = vector.bit_length() - 1
            pivot = self.pivots.get(top)
            if pivot is None:
                return vector
            vector ^= pivot
        return 0

    def insert(self, vector: int) -> bool:
        """Insere o vetor; retorna True se ele aumentou o posto"""
        remainder = self.reduce(vector)
        if not remainder:
            return False
        self.pivots[remainder.bit_length() - 1] = remainder
        return True


def gf2_rank(vectors: Iterable[int]) -> int:
    """Posto sobre GF(2) de uma coleção de bitsets"""
    basis = GF2Basis()
    for vector in vectors:
        basis.insert(vector)
    return basis.rank


def to_bitset(positions: Iterable[int]) -> int:
    """Converte índices de linhas com 1 em um bitset"""
    bits = 0
    for position in positions:
        bits ^= 1 << int(position)
    return bits


def from_bitset(bits: int) -> List[int]:
    """Índices dos bits ligados, em ordem crescente"""
    positions = []
    while bits:
        low = bits & -bits
        positions.append(low.bit_length() - 1)
        bits ^= low
    return positions
