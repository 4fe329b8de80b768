"""
Testes para ordenação, matriz de bordo, redução, oráculo de postos e diagramas
"""

import sys
import unittest
from pathlib import Path

import numpy as np
from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.exceptions import CompatibilityError, OracleSizeError
from src.imaging.image_models import GrayscaleImage
from src.imaging.image_operations import negate, pad
from src.persistence import (
    BoundaryMatrix, Interval, Ordering, PersistenceDiagram, PersistencePairing,
    anti_transpose, boundary_matrix, compute_diagram, compute_persistence, diagram, diagrams_equal,
    inject_fault, rank_function, rank_pairing_oracle, reduce, sort_cells, submatrix_rank
)
from src.persistence.gf2 import GF2Basis, from_bitset, gf2_rank, to_bitset
from src.topology import Cell, Construction, FilteredComplex, build_complex, build_t_complex, build_v_complex
from src.verification.random_data import random_upper_triangular, trial_rng


def path_complex():
    return FilteredComplex.from_cells([
        Cell(0, (), 0.0, 'a'), Cell(0, (), 1.0, 'b'), Cell(1, (0, 1), 2.0, 'ab'),
    ])


def checkerboard():
    return GrayscaleImage.from_array([[0, 1], [1, 0]])


@st.composite
def small_images(draw):
    d = draw(st.integers(1, 2))
    dims = tuple(draw(st.integers(1, 4)) for _ in range(d))
    size = int(np.prod(dims))
    values = draw(st.lists(st.integers(0, 5), min_size=size, max_size=size))
    return GrayscaleImage(dims=dims, values=values)


class TestOrdering(unittest.TestCase):
    """Testes de ordenações compatíveis"""

    def test_sort_cells_tie_breaks(self):
        cx = build_v_complex(checkerboard())
        self.assertEqual(sort_cells(cx).perm.tolist(), [0, 8, 2, 6, 1, 3, 5, 7, 4])
        self.assertEqual(sort_cells(cx, descending_labels=True).perm.tolist(), [8, 0, 6, 2, 7, 5, 3, 1, 4])

    @settings(max_examples=30, deadline=None)
    @given(small_images(), st.sampled_from(list(Construction)))
    def test_diagram_independent_of_tie_break(self, img, construction):
        cx = build_complex(img, construction)
        dgms = []
        for descending in (False, True):
            ordering = sort_cells(cx, descending_labels=descending)
            dgms.append(diagram(reduce(boundary_matrix(cx, ordering), 'standard'), ordering, cx))
        self.assertEqual(dgms[0], dgms[1])

    def test_positions_invert_perm(self):
        ordering = sort_cells(build_v_complex(checkerboard()))
        self.assertEqual(ordering.perm[ordering.positions].tolist(), list(range(9)))

    def test_from_permutation_rejects_incompatible(self):
        cx = path_complex()
        self.assertEqual(Ordering.from_permutation(cx, [0, 1, 2]).perm.tolist(), [0, 1, 2])
        with self.assertRaises(CompatibilityError):
            Ordering.from_permutation(cx, [1, 0, 2])
        with self.assertRaises(CompatibilityError):
            Ordering.from_permutation(cx, [0, 2, 1])
        with self.assertRaises(CompatibilityError):
            Ordering.from_permutation(cx, [0, 1, 1])

    def test_sort_cells_rejects_non_monotone(self):
        cx = FilteredComplex.from_cells([Cell(0, (), 3.0), Cell(0, (), 0.0), Cell(1, (0, 1), 1.0)])
        with self.assertRaises(CompatibilityError):
            sort_cells(cx)


class TestBoundaryMatrix(unittest.TestCase):
    """Testes da matriz de bordo e da anti-transposta"""

    def test_path_matrix(self):
        cx = path_complex()
        D = boundary_matrix(cx, sort_cells(cx))
        self.assertEqual(D.columns, [[], [], [0, 1]])
        self.assertTrue(D.is_strictly_upper_triangular())
        self.assertEqual(D.dims.tolist(), [0, 0, 1])

    def test_anti_transpose(self):
        D = BoundaryMatrix.from_columns([[], [], [0, 1]])
        perp = anti_transpose(D)
        self.assertEqual(perp.columns, [[], [0], [0]])
        self.assertEqual(anti_transpose(perp), D)

        dense = np.zeros((4, 4), dtype=np.uint8)
        dense[0, 3] = dense[1, 2] = dense[0, 1] = 1
        perp = anti_transpose(BoundaryMatrix.from_dense(dense))
        self.assertEqual(perp.to_dense().tolist(), dense[::-1, ::-1].T.tolist())

    def test_with_flipped_entry(self):
        D = BoundaryMatrix.from_columns([[], [], [0, 1]])
        self.assertEqual(D.with_flipped_entry(0, 2).columns, [[], [], [1]])
        self.assertEqual(D.with_flipped_entry(0, 1).columns, [[], [0], [0, 1]])

    def test_gf2_helpers(self):
        self.assertEqual(from_bitset(to_bitset([0, 3, 5])), [0, 3, 5])
        self.assertEqual(gf2_rank([0b011, 0b110, 0b101]), 2)
        basis = GF2Basis()
        self.assertTrue(basis.insert(0b100))
        self.assertFalse(basis.insert(0b100))
        self.assertEqual(basis.reduce(0b110), 0b010)


class TestReduction(unittest.TestCase):
    """Testes de redução e do oráculo de postos"""

    def test_path_pairing(self):
        cx = path_complex()
        D = boundary_matrix(cx, sort_cells(cx))
        for method in ('standard', 'twist'):
            pairing = reduce(D, method)
            self.assertEqual(pairing.pairs, ((1, 2),))
            self.assertEqual(pairing.essential, (0,))
        self.assertEqual(rank_pairing_oracle(D), reduce(D))

    def test_rank_function(self):
        D = BoundaryMatrix.from_columns([[], [], [0, 1]])
        self.assertEqual(submatrix_rank(D, 0, 2), 1)
        self.assertEqual(submatrix_rank(D, 2, 2), 0)
        self.assertEqual(submatrix_rank(D, 3, 2), 0)
        self.assertEqual(submatrix_rank(D, 0, -1), 0)
        r = rank_function(D)
        self.assertEqual(r[1, 2], 1)
        self.assertEqual(int(r.sum()), 1)

    def test_unknown_method(self):
        with self.assertRaises(ValueError):
            reduce(BoundaryMatrix.from_columns([[]]), 'magic')

    def test_oracle_size_guard(self):
        D = boundary_matrix(build_v_complex(checkerboard()), sort_cells(build_v_complex(checkerboard())))
        with self.assertRaises(OracleSizeError):
            rank_pairing_oracle(D, max_cells=4, enforce=True)
        self.assertEqual(rank_pairing_oracle(D, max_cells=4, enforce=False), reduce(D))

    def test_pairing_consistency(self):
        pairing = PersistencePairing.from_pairs(4, [(1, 2)])
        self.assertEqual(pairing.essential, (0, 3))
        self.assertTrue(pairing.is_consistent(np.array([0, 0, 1, 1])))
        self.assertFalse(pairing.is_consistent(np.array([0, 1, 1, 1])))

    @settings(max_examples=40, deadline=None)
    @given(small_images(), st.sampled_from(list(Construction)))
    def test_reduction_matches_oracle(self, img, construction):
        cx = build_complex(img, construction)
        result = compute_persistence(cx)
        self.assertEqual(result.pairing, rank_pairing_oracle(result.matrix, enforce=False))
        self.assertEqual(reduce(result.matrix, 'standard'), reduce(result.matrix, 'twist'))
        self.assertTrue(result.pairing.is_consistent(result.matrix.dims))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 25), st.floats(0.05, 0.5), st.integers(0, 10_000))
    def test_random_matrices_match_oracle(self, size, density, seed):
        D = random_upper_triangular(size, density, trial_rng(seed, 0))
        self.assertEqual(reduce(D, 'standard'), rank_pairing_oracle(D))

    def test_inject_fault_changes_pairing(self):
        cx = build_v_complex(checkerboard())
        faulty = compute_persistence(cx, fault=True)
        clean = compute_persistence(cx)
        self.assertNotEqual(faulty.matrix, clean.matrix)
        self.assertNotEqual(faulty.pairing, rank_pairing_oracle(clean.matrix))
        self.assertNotEqual(faulty.diagram, clean.diagram)
        self.assertEqual((faulty.matrix.to_dense() != clean.matrix.to_dense()).sum(), 1)

    def test_inject_fault_without_edges(self):
        single = FilteredComplex.from_cells([Cell(0, (), 0.0)])
        ordering = sort_cells(single)
        D = boundary_matrix(single, ordering)
        self.assertEqual(inject_fault(D, ordering, single), D)

        pair = FilteredComplex.from_cells([Cell(0, (), 0.0), Cell(0, (), 1.0)])
        ordering = sort_cells(pair)
        faulty = inject_fault(boundary_matrix(pair, ordering), ordering, pair)
        self.assertEqual(faulty.to_dense().tolist(), [[0, 1], [0, 0]])


class TestPersistenceDiagram(unittest.TestCase):
    """Testes de diagramas e serialização"""

    def test_checkerboard_diagrams(self):
        img = checkerboard()
        self.assertEqual(compute_diagram(build_v_complex(img)),
                         PersistenceDiagram([(0, 0, None), (0, 0, 1)]))
        self.assertEqual(compute_diagram(build_t_complex(img)), PersistenceDiagram([(0, 0, None)]))

    def test_padded_negative_t_diagram(self):
        dgm = compute_diagram(build_t_complex(negate(pad(checkerboard(), 2))))
        self.assertEqual(dgm, PersistenceDiagram([(0, -2, None), (1, -2, 0), (1, -1, 0)]))

    def test_methods_agree_on_three_dimensions(self):
        img = GrayscaleImage.from_array([[[0, 3], [2, 1]], [[4, 0], [1, 2]]])
        for construction in Construction:
            cx = build_complex(img, construction)
            self.assertEqual(compute_diagram(cx, 'standard'), compute_diagram(cx, 'twist'))
            self.assertEqual(compute_diagram(cx).essential_counts(), {0: 1})

    def test_intervals_are_normalized(self):
        dgm = PersistenceDiagram([(0, -0.0, float('inf')), (1, 2, 2), (1, 3.0, 4.0)])
        self.assertEqual(dgm.intervals, (Interval(0, 0.0, None), Interval(1, 3.0, 4.0)))
        self.assertTrue(dgm.intervals[0].is_essential)
        self.assertIn((1, 3, 4), dgm)

    def test_multiset_operations(self):
        dgm = PersistenceDiagram([(0, 0, 1), (0, 0, 1), (1, 2, None)])
        self.assertEqual(dgm.count((0, 0, 1)), 2)
        self.assertEqual(len(dgm.remove((0, 0, 1))), 2)
        self.assertEqual(dgm.add((2, 5, None)).essential_counts(), {1: 1, 2: 1})
        self.assertEqual(dgm.degree(1), [Interval(1, 2.0, None)])
        self.assertEqual(len(dgm.finite()), 2)
        with self.assertRaises(KeyError):
            dgm.remove((0, 0, 2))

    def test_diagrams_equal_uses_multiplicity(self):
        a = PersistenceDiagram([(0, 0, 1), (0, 0, 1)])
        self.assertTrue(diagrams_equal(a, PersistenceDiagram([(0, 0, 1), (0, 0, 1)])))
        self.assertFalse(diagrams_equal(a, PersistenceDiagram([(0, 0, 1)])))

    def test_csv_format(self):
        dgm = PersistenceDiagram([(0, 0, None), (0, 0, 1), (1, -1.5, 0)])
        text = dgm.to_csv()
        self.assertEqual(text, "dim,birth,death\n0,0,1\n0,0,inf\n1,-1.5,0\n")
        self.assertEqual(PersistenceDiagram.from_csv(text), dgm)
        self.assertEqual(PersistenceDiagram.from_csv("dim,birth,death\n"), PersistenceDiagram())

    def test_csv_invalid(self):
        for text in ("a,b,c\n0,0,1\n", "dim,birth,death\n0,x,1\n", "dim,birth,death\n-1,0,1\n",
                     "dim,birth,death\n0,1,-inf\n", "dim,birth,death\n0,5,3\n"):
            with self.subTest(text=text):
                with self.assertRaises(ValueError):
                    PersistenceDiagram.from_csv(text)
        self.assertEqual(PersistenceDiagram.from_csv("dim,birth,death\n0,2,2\n"), PersistenceDiagram())

    def test_json_format(self):
        dgm = PersistenceDiagram([(0, 0, None), (1, -1.5, 0)])
        text = dgm.to_json()
        self.assertIn('null', text)
        self.assertEqual(PersistenceDiagram.from_json(text), dgm)

    def test_to_frame(self):
        frame = PersistenceDiagram([(0, 0, None), (0, 0, 1)]).to_frame()
        self.assertEqual(list(frame.columns), ['dim', 'birth', 'death'])
        self.assertTrue(np.isinf(frame['death'].iloc[1]))


if __name__ == '__main__':
    unittest.main()
