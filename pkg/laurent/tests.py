import sympy
from django.test import SimpleTestCase
from hypothesis import assume, given, settings as hypothesis_settings, strategies as st
from rest_framework import status
from rest_framework.test import APITestCase

from resolutions.construction import graft_coefficients, resolve, skein_tiles
from snakegraphs.exceptions import InexactDivision, ReservedLabel, UnlabeledGraph
from snakegraphs.graph import EmptySnakeGraph, build
from snakegraphs.overlap import Overlap
from surfaces.polygon import Triangulation, cluster_variable, resolve_crossing

from .identities import L, check_graft_identity, check_resolution_identity, y_monomial, y_variable
from .polynomial import ONE, ZERO, LaurentPoly

x, y = LaurentPoly.variable('x'), LaurentPoly.variable('y')


def var(name):
    return LaurentPoly.variable(name)


polys = st.dictionaries(
    keys=st.tuples(st.integers(-2, 2), st.integers(-2, 2)),
    values=st.integers(-4, 4),
    max_size=4,
).map(lambda terms: LaurentPoly({(('x', a), ('y', b)): c for (a, b), c in terms.items()}))

SQUARE = {'1:N': 'u', '1:E': 'v', '1:S': 'w', '1:W': 'z'}


class LaurentPolyTests(SimpleTestCase):
    def test_arithmetic(self):
        self.assertEqual((x + y) * (x - y), x ** 2 - y ** 2)
        self.assertEqual(x ** -1 * x, ONE)
        self.assertEqual(x - x, ZERO)
        self.assertEqual(2 * x + 1, x + x + ONE)
        self.assertEqual((x + 3 * y).variables, ('x', 'y'))

    def test_exact_division(self):
        self.assertEqual((x ** 2 - y ** 2).div_exact(x - y), x + y)
        self.assertEqual((x * y + x).div_exact(x), y + 1)
        self.assertEqual((x ** -2 - y ** 2).div_exact(x ** -1 - y), x ** -1 + y)
        self.assertEqual((x + x * y + x ** 2 + x ** 2 * y).div_exact(x ** 2 + x ** 2 * y), ONE + x ** -1)

    def test_inexact_division(self):
        with self.assertRaises(InexactDivision):
            (x + 1).div_exact(x + 2)
        with self.assertRaises(InexactDivision):
            (x + 1).div_exact(LaurentPoly.constant(2))
        with self.assertRaises(InexactDivision):
            (x + y).inverse()
        with self.assertRaises(InexactDivision):
            x.div_exact(ZERO)

    def test_text_form(self):
        self.assertEqual(str(x - 1), 'x - 1')
        self.assertEqual(str(ZERO), '0')
        self.assertEqual(str(var('x1_3') ** -1 * (var('x1_4') + var('y1_3'))), 'x1_3^-1*x1_4 + x1_3^-1*y1_3')

    def test_specialize(self):
        self.assertEqual((x + y).specialize(['x']), y + 1)
        self.assertEqual((x * y ** 2).specialize({'y': 3}), 9 * x)
        with self.assertRaises(InexactDivision):
            (x ** -1).specialize({'x': 2})

    def test_positivity(self):
        self.assertTrue((x + 2 * y).has_positive_coefficients())
        self.assertFalse((x - y).has_positive_coefficients())

    @hypothesis_settings(max_examples=50, deadline=None)
    @given(polys, polys)
    def test_products_agree_with_sympy(self, p, q):
        self.assertEqual(sympy.expand((p * q).to_sympy() - p.to_sympy() * q.to_sympy()), 0)
        self.assertEqual(LaurentPoly.from_sympy(p.to_sympy()), p)

    @hypothesis_settings(max_examples=50, deadline=None)
    @given(polys, polys, polys)
    def test_ring_laws(self, p, q, r):
        self.assertEqual(p * q, q * p)
        self.assertEqual((p * q) * r, p * (q * r))
        self.assertEqual(p * (q + r), p * q + p * r)
        self.assertEqual(p - p, ZERO)

    @hypothesis_settings(max_examples=50, deadline=None)
    @given(polys, polys)
    def test_division_undoes_multiplication(self, p, q):
        assume(q)
        self.assertEqual((p * q).div_exact(q), p)


class GraphPolynomialTests(SimpleTestCase):
    def test_single_tile(self):
        G = build('', ['x1'], SQUARE)
        expected = (var('u') * var('w') + var('v') * var('z') * var('y1')) * var('x1') ** -1
        self.assertEqual(L(G), expected)

    def test_single_edges(self):
        self.assertEqual(L(EmptySnakeGraph('b1_2')), var('b1_2'))
        self.assertEqual(L(EmptySnakeGraph('b1_2'), unit_labels={'b1_2'}), ONE)
        self.assertEqual(L(EmptySnakeGraph('x1_3')), var('x1_3'))

    def test_unit_labels_drop_out_of_the_weights(self):
        G = build('', ['x1'], {'1:S': 'a', '1:E': 'b', '1:N': 'c', '1:W': 'd'})
        self.assertEqual(L(G), (var('a') * var('c') + var('b') * var('d') * var('y1')) * var('x1') ** -1)
        self.assertEqual(L(G, unit_labels={'a', 'c'}), (ONE + var('b') * var('d') * var('y1')) * var('x1') ** -1)

    def test_disjoint_union_multiplies(self):
        G = build('', ['x1'], SQUARE)
        self.assertEqual(L([G, EmptySnakeGraph('x2_4')]), L(G) * var('x2_4'))

    def test_generated_labels_need_permission(self):
        with self.assertRaises(UnlabeledGraph):
            L(build('E'))
        self.assertTrue(L(build('E'), allow_generated=True).has_positive_coefficients())

    def test_y_variables(self):
        self.assertEqual(y_variable('x1_3'), 'y1_3')
        self.assertEqual(y_variable('t2'), 'yt2')
        self.assertEqual(y_monomial(['x1_3', 'x1_3']), var('y1_3') ** 2)

    def test_coefficient_variables_stay_distinct(self):
        with self.assertRaises(ReservedLabel):
            build('', ['y1'])
        with self.assertRaises(ReservedLabel):
            build('', ['x1'], {'1:N': 'yt2'})
        with self.assertRaises(ReservedLabel):
            L([build('', ['x1_3'], SQUARE), build('', ['1_3'], SQUARE)])
        with self.assertRaises(ReservedLabel):
            L(build('E', ['x1_3', '1_3']), allow_generated=True)

    def test_non_crossing_identity_is_trivial(self):
        G = build('E', ['p', 'q'], {'1:N': 'n1', '1:S': 's1', '1:W': 'w1', '1:E': 'm', '2:N': 'n2',
                                    '2:E': 'e2', '2:S': 's2'})
        check = check_resolution_identity(resolve(G, G, Overlap(1, 2, 1, 2)))
        self.assertTrue(check.ok)


class PentagonGraftingTests(SimpleTestCase):
    """Arcs (2,4) and (3,5) in the fan at vertex 1 share a triangle but no diagonal."""

    def setUp(self):
        self.T = Triangulation.of(5, [(1, 3), (1, 4)])
        self.crossing = resolve_crossing(self.T, (2, 4), (3, 5))

    def test_identity(self):
        g = self.crossing.construction
        self.assertTrue(self.crossing.is_grafting)
        self.assertEqual((g.s, g.case), (1, 2))
        self.assertEqual(graft_coefficients(g), ((), ('x1_4',)))
        check = check_graft_identity(g, unit_labels=self.T.polygon.boundary_labels)
        self.assertTrue(check.ok, check.as_dict())
        self.assertEqual(check.as_dict()['difference'], '0')

    def test_cluster_variables(self):
        def xv(a, b):
            return cluster_variable(self.T, (a, b))

        self.assertEqual(xv(2, 4), (var('x1_4') + var('y1_3')) * var('x1_3') ** -1)
        self.assertEqual(xv(3, 5), (ONE + var('x1_3') * var('y1_4')) * var('x1_4') ** -1)
        self.assertEqual(
            xv(2, 5),
            (var('x1_4') + var('y1_3') + var('x1_3') * var('y1_3') * var('y1_4')) * (var('x1_3') * var('x1_4')) ** -1,
        )
        self.assertEqual(xv(2, 4) * xv(3, 5), xv(2, 5) + var('y1_4'))


class HexagonResolutionTests(SimpleTestCase):
    """Arcs (2,5) and (3,6) in the fan at vertex 1 both cross (1,4)."""

    def setUp(self):
        self.T = Triangulation.of(6, [(1, 3), (1, 4), (1, 5)])
        self.crossing = resolve_crossing(self.T, (2, 5), (3, 6))
        self.res = self.crossing.construction

    def test_overlap(self):
        self.assertFalse(self.crossing.is_grafting)
        self.assertEqual(self.res.overlap, Overlap(2, 2, 1, 1))
        self.assertEqual([str(a) for a in self.crossing.arcs34], ['(2,6)', '(3,5)'])

    def test_identity(self):
        check = check_resolution_identity(self.res, unit_labels=self.T.polygon.boundary_labels)
        self.assertTrue(check.ok, check.as_dict())
        self.assertEqual(skein_tiles(self.res), ('x1_4', 'x1_5'))

    def test_wrong_coefficient_breaks_the_identity(self):
        units = self.T.polygon.boundary_labels
        self.assertFalse(check_resolution_identity(self.res, coefficient=(), unit_labels=units).ok)

    def test_skein_relation(self):
        def xv(a, b):
            return cluster_variable(self.T, (a, b))

        self.assertEqual(xv(2, 5) * xv(3, 6), xv(2, 6) * xv(3, 5) + var('y1_4') * var('y1_5'))


class LaurentApiTests(APITestCase):
    def test_polynomial(self):
        graph = {'steps': '', 'tile_labels': ['x1'], 'edge_labels': SQUARE}
        response = self.client.post('/api/laurent/polynomial/', {'graphs': [graph]}, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        expected = (var('u') * var('w') + var('v') * var('z') * var('y1')) * var('x1') ** -1
        self.assertEqual(response.data['laurent'], str(expected))
        self.assertTrue(response.data['positive'])

    def test_specialize(self):
        graph = {'steps': '', 'tile_labels': ['x1'], 'edge_labels': SQUARE}
        payload = {'graphs': [graph], 'specialize': ['u', 'v', 'w', 'z']}
        response = self.client.post('/api/laurent/polynomial/', payload, format='json')
        self.assertEqual(response.data['specialized'], str((ONE + var('y1')) * var('x1') ** -1))

    def test_generated_labels_are_rejected(self):
        response = self.client.post('/api/laurent/polynomial/', {'graphs': [{'steps': 'E'}]}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_check_identity_on_arcs(self):
        payload = {'n': 5, 'tri': '1-3,1-4', 'arcs': ['2,4', '3,5']}
        response = self.client.post('/api/laurent/check-identity/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['kind'], 'graft')
        self.assertTrue(response.data['ok'])

    def test_check_identity_rejects_parallel_arcs(self):
        payload = {'n': 5, 'tri': '1-3,1-4', 'arcs': ['2,4', '2,5']}
        response = self.client.post('/api/laurent/check-identity/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('arcs', response.data)
