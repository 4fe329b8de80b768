"""
Testes para CubeKey, FilteredComplex, construções V/T e operações de complexo
"""

import sys
import unittest
from pathlib import Path

import numpy as np
from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.exceptions import NotClosedManifoldError, PreconditionError, UnsupportedComplexError
from src.imaging.image_models import GrayscaleImage
from src.imaging.image_operations import negate, pad
from src.topology import (
    BOUNDARY_CLASS_TAG, KAPPA_TAG, Cell, Construction, CubeKey, FilteredComplex,
    attach_top_cell, boundary_cells, build_complex, build_t_complex, build_v_complex,
    dualize, euler_characteristic, from_debug_text, quotient_boundary, to_debug_text,
    validate, vertex_maximum
)


@st.composite
def small_images(draw, max_d=3, max_side=3, min_side=1):
    d = draw(st.integers(1, max_d))
    dims = tuple(draw(st.integers(min_side, max_side)) for _ in range(d))
    size = int(np.prod(dims))
    values = draw(st.lists(st.integers(-4, 4), min_size=size, max_size=size))
    return GrayscaleImage(dims=dims, values=values)


def checkerboard():
    return GrayscaleImage.from_array([[0, 1], [1, 0]])


class TestCubeKey(unittest.TestCase):
    """Testes de identidade dos cubos em coordenadas dobradas"""

    def test_dim_counts_odd_entries(self):
        self.assertEqual(CubeKey((0, 2)).dim, 0)
        self.assertEqual(CubeKey((1, 2)).dim, 1)
        self.assertEqual(CubeKey((1, 3, 5)).dim, 3)

    def test_faces_and_facets(self):
        square = CubeKey((1, 1))
        self.assertTrue(CubeKey((0, 1)).is_facet_of(square))
        self.assertTrue(CubeKey((0, 0)).is_face_of(square))
        self.assertFalse(CubeKey((0, 0)).is_facet_of(square))
        self.assertFalse(CubeKey((3, 1)).is_face_of(square))
        self.assertEqual(sorted(square.facets()),
                         [CubeKey((0, 1)), CubeKey((1, 0)), CubeKey((1, 2)), CubeKey((2, 1))])
        self.assertEqual(len(list(CubeKey((1, 2, 3)).vertices())), 4)

    def test_ordering_is_lexicographic(self):
        keys = [CubeKey((1, 0)), CubeKey((0, 2)), CubeKey((0, 1))]
        self.assertEqual(sorted(keys), [CubeKey((0, 1)), CubeKey((0, 2)), CubeKey((1, 0))])

    def test_shifted_with_modulus(self):
        self.assertEqual(CubeKey((0, 3)).shifted(1, (4, 4)), CubeKey((1, 0)))
        self.assertEqual(CubeKey((1, 1)).shifted(-1, (4, 4)), CubeKey((0, 0)))

    def test_negative_coords_rejected(self):
        with self.assertRaises(ValueError):
            CubeKey((-1, 0))


class TestCubicalConstructions(unittest.TestCase):
    """Testes das construções V e T"""

    def test_v_checkerboard(self):
        cx = build_v_complex(checkerboard())
        self.assertEqual(cx.n_cells, 9)
        self.assertEqual(cx.values.tolist(), [0, 1, 1, 1, 1, 1, 1, 1, 0])
        self.assertEqual(cx.dims.tolist(), [0, 1, 0, 1, 2, 1, 0, 1, 0])
        self.assertEqual(cx.facets(4), (1, 3, 5, 7))
        self.assertEqual(cx.facets(1), (0, 2))
        self.assertEqual(cx.label(4), CubeKey((1, 1)))
        self.assertEqual(validate(cx), [])
        self.assertEqual(euler_characteristic(cx), 1)

    def test_t_checkerboard(self):
        cx = build_t_complex(checkerboard())
        self.assertEqual(cx.n_cells, 25)
        self.assertEqual(cx.grid_shape, (5, 5))
        value = {key: cx.values[cx.index_of(CubeKey(key))] for key in [(1, 1), (1, 3), (2, 2), (0, 0), (4, 4)]}
        self.assertEqual(value, {(1, 1): 0, (1, 3): 1, (2, 2): 0, (0, 0): 0, (4, 4): 0})
        self.assertEqual(validate(cx), [])
        self.assertEqual(euler_characteristic(cx), 1)

    def test_one_dimensional_values(self):
        img = GrayscaleImage.from_array([3, 1, 2])
        self.assertEqual(build_v_complex(img).values.tolist(), [3, 3, 1, 2, 2])
        self.assertEqual(build_t_complex(img).values.tolist(), [3, 3, 1, 1, 1, 2, 2])

    def test_periodic_shapes_and_wrap(self):
        img = checkerboard()
        v = build_v_complex(img, periodic=True)
        t = build_t_complex(img, periodic=True)
        self.assertEqual(v.n_cells, 16)
        self.assertEqual(t.n_cells, 16)
        self.assertTrue(v.periodic)
        # aresta (3, 0) liga o vértice (2, 0) ao (0, 0) pela identificação
        self.assertEqual(v.facets(v.index_of(CubeKey((3, 0)))), (0, 8))
        for cx in (v, t):
            self.assertEqual(validate(cx), [])
            self.assertEqual(euler_characteristic(cx), 0)

    def test_periodic_requires_two_voxels_per_axis(self):
        with self.assertRaises(PreconditionError):
            build_v_complex(GrayscaleImage.from_array([[1, 2]]), periodic=True)

    def test_build_complex_accepts_strings(self):
        img = checkerboard()
        self.assertEqual(build_complex(img, 'v').construction, 'V')
        self.assertEqual(build_complex(img, Construction.T).construction, 'T')
        self.assertIs(Construction.V.opposite, Construction.T)

    @settings(max_examples=40, deadline=None)
    @given(small_images())
    def test_constructions_are_valid_complexes(self, img):
        for construction in Construction:
            cx = build_complex(img, construction)
            self.assertEqual(validate(cx), [])
            self.assertEqual(euler_characteristic(cx), 1)
        v = build_v_complex(img)
        self.assertEqual(v.n_cells, int(np.prod([2 * n - 1 for n in img.dims])))
        self.assertEqual(build_t_complex(img).n_cells, int(np.prod([2 * n + 1 for n in img.dims])))

    @settings(max_examples=30, deadline=None)
    @given(small_images())
    def test_v_value_is_vertex_maximum(self, img):
        v = build_v_complex(img)
        for index in range(v.n_cells):
            self.assertEqual(v.values[index], vertex_maximum(img, v.label(index)))

    @settings(max_examples=30, deadline=None)
    @given(small_images(min_side=2))
    def test_periodic_complexes_are_valid(self, img):
        for construction in Construction:
            cx = build_complex(img, construction, periodic=True)
            self.assertEqual(cx.n_cells, int(np.prod([2 * n for n in img.dims])))
            self.assertEqual(validate(cx), [])


class TestFilteredComplex(unittest.TestCase):
    """Testes de FilteredComplex, validação e formato de depuração"""

    def test_from_cells_path(self):
        cx = FilteredComplex.from_cells([
            Cell(0, (), 0.0, 'a'), Cell(0, (), 1.0, 'b'), Cell(1, (0, 1), 2.0, 'ab'),
        ])
        self.assertEqual(cx.n_cells, 3)
        self.assertEqual(cx.ambient_dim, 1)
        self.assertEqual(cx.cell(2), Cell(1, (0, 1), 2.0, 'ab'))
        self.assertEqual(cx.index_of('b'), 1)
        self.assertFalse(cx.has_cube_labels())
        self.assertEqual(validate(cx), [])

    def test_validate_reports_each_kind(self):
        cases = {
            'facet_index': [Cell(0, (), 0.0), Cell(1, (0, 7), 1.0)],
            'dimension': [Cell(0, (), 0.0), Cell(0, (), 0.0), Cell(1, (0, 1), 1.0), Cell(1, (2,), 1.0)],
            'duplicate_facet': [Cell(0, (), 0.0), Cell(1, (0, 0), 1.0)],
            'monotonicity': [Cell(0, (), 5.0), Cell(0, (), 0.0), Cell(1, (0, 1), 1.0)],
            'boundary_of_boundary': [
                Cell(0, (), 0.0), Cell(0, (), 0.0), Cell(0, (), 0.0),
                Cell(1, (0, 1), 0.0), Cell(1, (1, 2), 0.0), Cell(1, (0, 2), 0.0),
                Cell(2, (3, 4), 0.0),
            ],
        }
        for kind, cells in cases.items():
            with self.subTest(kind=kind):
                violations = validate(FilteredComplex.from_cells(cells, ambient_dim=2))
                self.assertIn(kind, {v.kind for v in violations})

    def test_debug_text_round_trip(self):
        cx = attach_top_cell(build_v_complex(checkerboard()), 2.0)
        text = to_debug_text(cx)
        self.assertTrue(text.startswith("0 0 0 - (0,0)\n"))
        self.assertIn(f"9 2 2 1,3,5,7 {KAPPA_TAG}", text)
        parsed = from_debug_text(text)
        self.assertEqual(parsed.dims.tolist(), cx.dims.tolist())
        self.assertEqual(parsed.values.tolist(), cx.values.tolist())
        self.assertEqual([parsed.facets(i) for i in range(parsed.n_cells)],
                         [cx.facets(i) for i in range(cx.n_cells)])
        self.assertEqual(parsed.label(9), KAPPA_TAG)
        self.assertEqual(parsed.label(4), CubeKey((1, 1)))

    def test_debug_text_malformed(self):
        with self.assertRaises(ValueError):
            from_debug_text("0 0 0 -\n")
        with self.assertRaises(ValueError):
            from_debug_text("1 0 0 - -\n")


class TestComplexOperations(unittest.TestCase):
    """Testes de bordo, κ, quociente e dual"""

    def test_boundary_cells_of_box(self):
        img = GrayscaleImage.from_array(np.arange(9).reshape(3, 3))
        self.assertEqual(len(boundary_cells(build_v_complex(img))), 16)
        with self.assertRaises(UnsupportedComplexError):
            boundary_cells(build_v_complex(img, periodic=True))

    def test_attach_top_cell(self):
        cx = build_v_complex(checkerboard())
        capped = attach_top_cell(cx, 1.0)
        self.assertEqual(capped.n_cells, 10)
        self.assertEqual(capped.cell(9), Cell(2, (1, 3, 5, 7), 1.0, KAPPA_TAG))
        self.assertEqual(validate(capped), [])
        self.assertEqual(euler_characteristic(capped), 2)

    def test_attach_top_cell_preconditions(self):
        with self.assertRaises(PreconditionError):
            attach_top_cell(build_v_complex(checkerboard()), 0.5)
        with self.assertRaises(PreconditionError):
            attach_top_cell(build_v_complex(GrayscaleImage.from_array([[1, 2]])), 5.0)
        with self.assertRaises(UnsupportedComplexError):
            attach_top_cell(attach_top_cell(build_v_complex(checkerboard()), 1.0), 1.0)

    def test_quotient_boundary(self):
        prepared = negate(pad(checkerboard(), 2))
        cx = build_v_complex(prepared)
        quotient = quotient_boundary(cx, -2.0)
        self.assertEqual(quotient.n_cells, 26)
        self.assertEqual(quotient.label(25), BOUNDARY_CLASS_TAG)
        self.assertEqual(quotient.values[25], -2.0)
        self.assertEqual(validate(quotient), [])
        self.assertEqual(euler_characteristic(quotient), 2)
        # as arestas (1, 2) e (2, 1) tocam o bordo em um extremo
        self.assertIn(25, quotient.facets(quotient.index_of(CubeKey((1, 2)))))

    def test_quotient_boundary_preconditions(self):
        prepared = negate(pad(checkerboard(), 2))
        with self.assertRaises(PreconditionError):
            quotient_boundary(build_v_complex(prepared), -3.0)
        with self.assertRaises(PreconditionError):
            quotient_boundary(build_v_complex(checkerboard()), 0.0)

    def test_dualize_torus_is_involution(self):
        cx = build_t_complex(GrayscaleImage.from_array([[0, 3, 1], [2, 5, 4]]), periodic=True)
        dual = dualize(cx, 2)
        self.assertEqual(validate(dual), [])
        self.assertEqual(dual.dims.tolist(), (2 - cx.dims).tolist())
        self.assertEqual(dual.values.tolist(), (-cx.values).tolist())
        twice = dualize(dual, 2)
        self.assertEqual(twice.dims.tolist(), cx.dims.tolist())
        self.assertEqual(twice.values.tolist(), cx.values.tolist())
        self.assertEqual(twice.facet_indptr.tolist(), cx.facet_indptr.tolist())
        self.assertEqual(twice.facet_indices.tolist(), cx.facet_indices.tolist())

    def test_dualize_sphere_keeps_labels(self):
        capped = attach_top_cell(build_t_complex(checkerboard()), 2.0)
        dual = dualize(capped, 2)
        self.assertEqual(dual.label(capped.n_cells - 1), KAPPA_TAG)
        self.assertEqual(dual.dims[capped.n_cells - 1], 0)
        self.assertEqual(validate(dual), [])

    def test_dualize_requires_closed_manifold(self):
        with self.assertRaises(NotClosedManifoldError):
            dualize(build_v_complex(checkerboard()), 2)


if __name__ == '__main__':
    unittest.main()
