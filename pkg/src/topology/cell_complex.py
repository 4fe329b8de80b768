"""
Complexos celulares filtrados sobre Z/2

Armazenamento colunar: dimensões, valores e incidências de faceta em
formato CSR (facet_indptr / facet_indices), mais coordenadas dobradas
por célula quando a célula é um cubo elementar.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from utils.formatters import format_value
from .cube_key import CubeKey

logger = logging.getLogger(__name__)

Label = Optional[Union[CubeKey, str]]

KAPPA_TAG = 'kappa'
BOUNDARY_CLASS_TAG = 'boundary-class'


@dataclass(frozen=True)
class Cell:
    """Visão de uma célula: dimensão, facetas (índices), valor e rótulo"""
    dim: int
    facets: Tuple[int, ...]
    value: float
    label: Label = None


@dataclass(frozen=True)
class Violation:
    """Invariante violado por um complexo (dado, não exceção)"""
    kind: str
    cells: Tuple[int, ...]
    message: str


@dataclass(frozen=True, eq=False)
class FilteredComplex:
    """
    Complexo celular com função monótona (X, f)

    Células de cubos guardam suas coordenadas dobradas em `coords`;
    células simbólicas (κ, [∂]) têm linha -1 em `coords` e uma tag em `tags`.
    """
    dims: np.ndarray
    values: np.ndarray
    facet_indptr: np.ndarray
    facet_indices: np.ndarray
    ambient_dim: int
    coords: Optional[np.ndarray] = None
    tags: Mapping[int, str] = field(default_factory=dict)
    grid_shape: Optional[Tuple[int, ...]] = None
    periodic: bool = False
    construction: Optional[str] = None

    def __post_init__(self):
        for name, dtype in (('dims', np.int64), ('values', np.float64),
                            ('facet_indptr', np.int64), ('facet_indices', np.int64)):
            array = np.ascontiguousarray(getattr(self, name), dtype=dtype)
            array.setflags(write=False)
            object.__setattr__(self, name, array)
        if self.coords is not None:
            coords = np.ascontiguousarray(self.coords, dtype=np.int64).reshape(len(self.dims), -1)
            coords.setflags(write=False)
            object.__setattr__(self, 'coords', coords)
        object.__setattr__(self, 'tags', dict(self.tags))
        if self.grid_shape is not None:
            object.__setattr__(self, 'grid_shape', tuple(int(s) for s in self.grid_shape))
        if len(self.facet_indptr) != len(self.dims) + 1:
            raise ValueError("facet_indptr deve ter n_cells + 1 entradas")
        if len(self.values) != len(self.dims):
            raise ValueError("values e dims devem ter o mesmo tamanho")

    # --- acesso ---------------------------------------------------------

    @property
    def n_cells(self) -> int:
        return len(self.dims)

    def __len__(self) -> int:
        return self.n_cells

    @property
    def max_dim(self) -> int:
        return int(self.dims.max()) if self.n_cells else -1

    @property
    def facet_counts(self) -> np.ndarray:
        return np.diff(self.facet_indptr)

    def facets(self, index: int) -> Tuple[int, ...]:
        start, stop = self.facet_indptr[index], self.facet_indptr[index + 1]
        return tuple(int(i) for i in self.facet_indices[start:stop])

    def has_cube_labels(self) -> bool:
        """True se todas as células têm CubeKey"""
        return self.coords is not None and not self.tags and bool(np.all(self.coords >= 0))

    def cube_mask(self) -> np.ndarray:
        """Máscara das células rotuladas por CubeKey"""
        if self.coords is None:
            return np.zeros(self.n_cells, dtype=bool)
        return self.coords[:, 0] >= 0 if self.coords.shape[1] else np.ones(self.n_cells, dtype=bool)

    def label(self, index: int) -> Label:
        if index in self.tags:
            return self.tags[index]
        if self.coords is not None and self.coords.shape[1] and self.coords[index, 0] >= 0:
            return CubeKey(tuple(int(c) for c in self.coords[index]))
        return None

    def cell(self, index: int) -> Cell:
        return Cell(
            dim=int(self.dims[index]),
            facets=self.facets(index),
            value=float(self.values[index]),
            label=self.label(index),
        )

    @property
    def cells(self) -> List[Cell]:
        return [self.cell(i) for i in range(self.n_cells)]

    def index_of(self, label: Label) -> int:
        """Índice da célula com o rótulo dado (busca linear para tags)"""
        if isinstance(label, str):
            for index, tag in self.tags.items():
                if tag == label:
                    return index
            raise KeyError(label)
        if self.coords is None:
            raise KeyError(label)
        matches = np.flatnonzero(np.all(self.coords == np.asarray(label.coords), axis=1))
        if len(matches) == 0:
            raise KeyError(label)
        return int(matches[0])

    def cell_entries(self) -> np.ndarray:
        """Para cada entrada de facet_indices, o índice da célula dona"""
        return np.repeat(np.arange(self.n_cells, dtype=np.int64), self.facet_counts)

    # --- construção -----------------------------------------------------

    @classmethod
    def from_cells(cls, cells: Sequence[Cell], ambient_dim: Optional[int] = None,
                   **metadata) -> 'FilteredComplex':
        """Monta um complexo a partir de uma lista de Cell"""
        cells = list(cells)
        dims = np.array([c.dim for c in cells], dtype=np.int64)
        values = np.array([c.value for c in cells], dtype=np.float64)
        counts = np.array([len(c.facets) for c in cells], dtype=np.int64)
        indptr = np.concatenate([[0], np.cumsum(counts)]).astype(np.int64)
        indices = np.array([f for c in cells for f in c.facets], dtype=np.int64)

        key_dims = {c.label.ambient_dim for c in cells if isinstance(c.label, CubeKey)}
        if len(key_dims) > 1:
            raise ValueError(f"CubeKeys com dimensões ambientes diferentes: {sorted(key_dims)}")
        if ambient_dim is None:
            ambient_dim = key_dims.pop() if key_dims else (int(dims.max()) if len(dims) else 0)

        coords = None
        if any(isinstance(c.label, CubeKey) for c in cells):
            width = next(c.label.ambient_dim for c in cells if isinstance(c.label, CubeKey))
            coords = np.full((len(cells), width), -1, dtype=np.int64)
            for index, c in enumerate(cells):
                if isinstance(c.label, CubeKey):
                    coords[index] = c.label.coords
        tags = {i: c.label for i, c in enumerate(cells) if isinstance(c.label, str)}

        return cls(dims=dims, values=values, facet_indptr=indptr, facet_indices=indices,
                   ambient_dim=ambient_dim, coords=coords, tags=tags, **metadata)

    def __repr__(self) -> str:
        return (f"FilteredComplex(n_cells={self.n_cells}, ambient_dim={self.ambient_dim}, "
                f"construction={self.construction}, periodic={self.periodic})")


def validate(cx: FilteredComplex) -> List[Violation]:
    """
    Verifica os invariantes de complexo filtrado mod 2

    Returns:
        Lista de violações (vazia se tudo OK); cada uma nomeia as células
    """
    violations: List[Violation] = []
    n = cx.n_cells
    owners = cx.cell_entries()
    facets = cx.facet_indices

    out_of_range = (facets < 0) | (facets >= n)
    for entry in np.flatnonzero(out_of_range):
        violations.append(Violation(
            'facet_index', (int(owners[entry]),),
            f"Célula {owners[entry]} referencia faceta inexistente {facets[entry]}"
        ))
    if violations:
        return violations

    bad_dim = cx.dims[facets] != cx.dims[owners] - 1
    for entry in np.flatnonzero(bad_dim):
        cell, facet = int(owners[entry]), int(facets[entry])
        violations.append(Violation(
            'dimension', (cell, facet),
            f"Faceta {facet} (dim {cx.dims[facet]}) da célula {cell} (dim {cx.dims[cell]}) "
            f"não tem dimensão {cx.dims[cell] - 1}"
        ))

    pair_keys = owners * n + facets
    unique_keys, counts = np.unique(pair_keys, return_counts=True)
    for key in unique_keys[counts > 1]:
        cell, facet = divmod(int(key), n)
        violations.append(Violation(
            'duplicate_facet', (cell, facet),
            f"Faceta {facet} repetida na lista da célula {cell}"
        ))

    non_monotone = cx.values[facets] > cx.values[owners]
    for entry in np.flatnonzero(non_monotone):
        cell, facet = int(owners[entry]), int(facets[entry])
        violations.append(Violation(
            'monotonicity', (cell, facet),
            f"f(faceta {facet}) = {cx.values[facet]:g} > f(célula {cell}) = {cx.values[cell]:g}"
        ))

    # ∂∂ = 0 mod 2: cada "neta" aparece um número par de vezes
    grand_counts = cx.facet_counts[facets]
    grand_owners = np.repeat(owners, grand_counts)
    starts = cx.facet_indptr[facets]
    if grand_counts.sum():
        offsets = np.arange(grand_counts.sum()) - np.repeat(np.cumsum(grand_counts) - grand_counts, grand_counts)
        grand = cx.facet_indices[np.repeat(starts, grand_counts) + offsets]
        keys, parities = np.unique(grand_owners * n + grand, return_counts=True)
        for key in keys[parities % 2 == 1]:
            cell, face = divmod(int(key), n)
            violations.append(Violation(
                'boundary_of_boundary', (cell, face),
                f"∂∂ da célula {cell} contém a face {face} (incidência ímpar)"
            ))

    if violations:
        logger.debug(f"validate: {len(violations)} violações em {cx!r}")
    return violations


def euler_characteristic(cx: FilteredComplex) -> int:
    """χ = Σ (-1)^dim"""
    return int(np.sum(np.where(cx.dims % 2 == 0, 1, -1)))


def _format_label(label: Label) -> str:
    if label is None:
        return '-'
    return str(label)


def to_debug_text(cx: FilteredComplex) -> str:
    """Uma linha por célula: "idx dim value facet-idx-list label" """
    lines = []
    for index in range(cx.n_cells):
        facets = cx.facets(index)
        facet_text = ','.join(str(f) for f in facets) if facets else '-'
        lines.append(
            f"{index} {cx.dims[index]} {format_value(cx.values[index])} "
            f"{facet_text} {_format_label(cx.label(index))}"
        )
    return '\n'.join(lines) + '\n'


def _parse_label(text: str) -> Label:
    if text == '-':
        return None
    if text.startswith('(') and text.endswith(')'):
        return CubeKey(tuple(int(c) for c in text[1:-1].split(',') if c))
    return text


def from_debug_text(text: str, ambient_dim: Optional[int] = None) -> FilteredComplex:
    """Lê o formato de depuração de volta para um FilteredComplex"""
    cells = []
    for line_number, line in enumerate(text.strip().splitlines()):
        parts = line.split()
        if len(parts) != 5:
            raise ValueError(f"Linha {line_number + 1} malformada: {line!r}")
        index, dim, value, facet_text, label_text = parts
        if int(index) != line_number:
            raise ValueError(f"Índice fora de ordem na linha {line_number + 1}: {index}")
        facets = tuple(int(f) for f in facet_text.split(',')) if facet_text != '-' else ()
        cells.append(Cell(dim=int(dim), facets=facets, value=float(value), label=_parse_label(label_text)))
    return FilteredComplex.from_cells(cells, ambient_dim=ambient_dim)
