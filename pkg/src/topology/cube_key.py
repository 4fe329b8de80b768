"""
Identidade canônica de cubos elementares em coordenadas dobradas
"""

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Tuple


@dataclass(frozen=True, order=True)
class CubeKey:
    """
    Cubo elementar em coordenadas dobradas (estilo Khalimsky)

    Entrada par 2l representa o intervalo degenerado [l, l]; entrada
    ímpar 2l+1 representa [l, l+1]. A ordem lexicográfica das
    coordenadas é o desempate determinístico de todo o pipeline.
    """
    coords: Tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if any(c < 0 for c in coords):
            raise ValueError(f"Coordenadas dobradas devem ser não negativas: {coords}")
        object.__setattr__(self, 'coords', coords)

    @property
    def dim(self) -> int:
        """Dimensão do cubo = número de entradas ímpares"""
        return sum(c & 1 for c in self.coords)

    @property
    def ambient_dim(self) -> int:
        return len(self.coords)

    def is_face_of(self, other: 'CubeKey') -> bool:
        """τ ⪯ σ: cada coordenada é igual ou vizinha par (±1) de uma ímpar de σ"""
        if len(self.coords) != len(other.coords):
            return False
        for mine, theirs in zip(self.coords, other.coords):
            if mine == theirs:
                continue
            if theirs & 1 and abs(mine - theirs) == 1:
                continue
            return False
        return True

    def is_facet_of(self, other: 'CubeKey') -> bool:
        """τ ◁ σ: face de codimensão 1"""
        return self.dim == other.dim - 1 and self.is_face_of(other)

    def vertices(self) -> Iterator['CubeKey']:
        """Enumera os ≤ 2^d vértices do cubo"""
        choices = [(c,) if c % 2 == 0 else (c - 1, c + 1) for c in self.coords]
        for combo in product(*choices):
            yield CubeKey(combo)

    def facets(self) -> Iterator['CubeKey']:
        """Enumera as 2k facetas (sem identificação periódica)"""
        for axis, c in enumerate(self.coords):
            if c & 1:
                for neighbor in (c - 1, c + 1):
                    yield CubeKey(self.coords[:axis] + (neighbor,) + self.coords[axis + 1:])

    def shifted(self, offset: int = 1, modulus: Tuple[int, ...] = None) -> 'CubeKey':
        """Desloca todas as coordenadas (troca a paridade se offset for ímpar)"""
        coords = tuple(c + offset for c in self.coords)
        if modulus is not None:
            coords = tuple(c % m for c, m in zip(coords, modulus))
        return CubeKey(coords)

    def __str__(self) -> str:
        return '(' + ','.join(str(c) for c in self.coords) + ')'
