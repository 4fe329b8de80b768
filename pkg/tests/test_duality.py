"""
Testes para filtrações duais e correspondências de células (toro e esferas)
"""

import sys
import unittest
from pathlib import Path

import numpy as np
from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.duality import (
    DualityReport, check_dual_pairing, check_isomorphism, check_reversed_ordering,
    dual_matrix_identity, map_diagram_dual, shift_mapping, sphere_dual_errors,
    sphere_dual_pair, torus_dual_errors
)
from src.exceptions import PreconditionError
from src.imaging.image_models import GrayscaleImage
from src.imaging.image_operations import negate
from src.persistence import PersistenceDiagram, compute_diagram
from src.topology import BOUNDARY_CLASS_TAG, KAPPA_TAG, Construction, build_complex, dualize
from src.transform import choose_N


@st.composite
def images(draw, min_side=1):
    d = draw(st.integers(1, 2))
    dims = tuple(draw(st.integers(min_side, 3)) for _ in range(d))
    size = int(np.prod(dims))
    values = draw(st.lists(st.integers(0, 5), min_size=size, max_size=size))
    return GrayscaleImage(dims=dims, values=values)


def checkerboard():
    return GrayscaleImage.from_array([[0, 1], [1, 0]])


class TestMapDiagramDual(unittest.TestCase):
    """Testes do mapa de diagramas da filtração dual"""

    def test_maps_finite_and_essential(self):
        dgm = PersistenceDiagram([(0, 0, 1), (0, 0, None), (1, 2, 5)])
        self.assertEqual(map_diagram_dual(dgm, 2),
                         PersistenceDiagram([(1, -1, 0), (2, 0, None), (0, -5, -2)]))

    def test_is_involution_on_valid_diagrams(self):
        dgm = PersistenceDiagram([(0, 1, 3), (1, 0, None), (2, 4, None)])
        self.assertEqual(map_diagram_dual(map_diagram_dual(dgm, 2), 2), dgm)

    def test_rejects_out_of_range_degrees(self):
        with self.assertRaises(PreconditionError):
            map_diagram_dual(PersistenceDiagram([(2, 0, 1)]), 2)
        with self.assertRaises(PreconditionError):
            map_diagram_dual(PersistenceDiagram([(3, 0, None)]), 2)


class TestDualFiltrations(unittest.TestCase):
    """Testes do pareamento sob a ordem inversa"""

    def test_torus_pairing(self):
        for construction in Construction:
            cx = build_complex(checkerboard(), construction, periodic=True)
            report = check_dual_pairing(cx, 2)
            self.assertIsInstance(report, DualityReport)
            self.assertTrue(report.passed, report.mismatches)
            self.assertEqual(report.n_cells, 16)
            self.assertTrue(check_reversed_ordering(cx, 2))
            self.assertTrue(dual_matrix_identity(cx, 2))

    def test_sphere_pairing(self):
        img = checkerboard()
        for construction in Construction:
            capped, quotient = sphere_dual_pair(img, 2.0, construction)
            self.assertEqual(capped.label(capped.n_cells - 1), KAPPA_TAG)
            self.assertEqual(quotient.label(quotient.n_cells - 1), BOUNDARY_CLASS_TAG)
            self.assertTrue(check_dual_pairing(capped, 2).passed)
            self.assertTrue(dual_matrix_identity(capped, 2))

    def test_three_dimensional_torus(self):
        img = GrayscaleImage.from_array([[[0, 3], [2, 1]], [[4, 0], [1, 2]]])
        for construction in Construction:
            cx = build_complex(img, construction, periodic=True)
            self.assertTrue(check_dual_pairing(cx, 3).passed)

    def test_report_serializes(self):
        report = check_dual_pairing(build_complex(checkerboard(), 'T', periodic=True), 2)
        self.assertIn('"passed":true', report.model_dump_json())


class TestCellCorrespondences(unittest.TestCase):
    """Testes dos isomorfismos explícitos entre duais"""

    def test_torus_correspondence(self):
        for construction in Construction:
            self.assertEqual(torus_dual_errors(checkerboard(), construction), [])

    def test_sphere_correspondence(self):
        for construction in Construction:
            self.assertEqual(sphere_dual_errors(checkerboard(), 2.0, construction), [])

    def test_sphere_diagrams_are_dual(self):
        capped, quotient = sphere_dual_pair(checkerboard(), 2.0, Construction.T)
        self.assertEqual(compute_diagram(capped), PersistenceDiagram([(0, 0, None), (2, 2, None)]))
        self.assertEqual(map_diagram_dual(compute_diagram(capped), 2), compute_diagram(quotient))
        self.assertEqual(compute_diagram(quotient), PersistenceDiagram([(0, -2, None), (2, 0, None)]))

    def test_wrong_values_are_reported(self):
        img = checkerboard()
        other = GrayscaleImage.from_array([[0, 1], [1, 3]])
        source = dualize(build_complex(img, 'V', periodic=True), 2)
        target = build_complex(negate(other), 'T', periodic=True)
        errors = check_isomorphism(source, target, shift_mapping(source, target, 1, target.grid_shape))
        self.assertTrue(any('Valor' in e for e in errors))

    @settings(max_examples=25, deadline=None)
    @given(images(min_side=2), st.sampled_from(list(Construction)))
    def test_torus_duality_random(self, img, construction):
        self.assertEqual(torus_dual_errors(img, construction), [])
        cx = build_complex(img, construction, periodic=True)
        self.assertTrue(check_dual_pairing(cx, img.d).passed)
        self.assertEqual(map_diagram_dual(compute_diagram(cx), img.d),
                         compute_diagram(build_complex(negate(img), construction.opposite, periodic=True)))

    @settings(max_examples=25, deadline=None)
    @given(images(), st.sampled_from(list(Construction)))
    def test_sphere_duality_random(self, img, construction):
        N = choose_N(img)
        self.assertEqual(sphere_dual_errors(img, N, construction), [])
        capped, quotient = sphere_dual_pair(img, N, construction)
        self.assertTrue(check_dual_pairing(capped, img.d).passed)
        self.assertEqual(map_diagram_dual(compute_diagram(capped), img.d), compute_diagram(quotient))


if __name__ == '__main__':
    unittest.main()
