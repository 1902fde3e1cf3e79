import numpy as np
from django.test import SimpleTestCase
from rest_framework import status
from rest_framework.test import APITestCase

from laurent.polynomial import ONE, LaurentPoly
from matchings.perfect import enumerate_matchings
from resolutions.bijection import BRANCH_34, TaggedMatching, phi, psi, verify_bijection
from snakegraphs.exceptions import ArcInTriangulation, InvalidArc, InvalidTriangulation, NotCrossing
from snakegraphs.graph import EdgeRef, EmptySnakeGraph, zigzag_runs
from snakegraphs.overlap import Overlap, crosses_initial_segment

from .oracle import (
    TropElement,
    all_triangulations,
    flip,
    flip_graph,
    flip_path,
    mutate,
    mutate_matrix,
    oracle_cluster_variable,
    principal_seed,
    trop_add,
)
from .polygon import (
    Arc,
    Fan,
    Polygon,
    Triangulation,
    arcs_cross,
    b_matrix,
    cluster_variable,
    crosses_initial_segment_geometric,
    crossing_identity,
    crossing_sequence,
    f_polynomial,
    fans,
    label,
    resolve_crossing,
    skein_relation,
    smooth,
    snake_graph,
)


def var(name):
    return LaurentPoly.variable(name)


PENTAGON = Triangulation.of(5, [(1, 3), (1, 4)])
HEXAGON_FAN = Triangulation.of(6, [(1, 3), (1, 4), (1, 5)])


class TriangulationTests(SimpleTestCase):
    def test_parse(self):
        self.assertEqual(Triangulation.parse(5, '1-3,1-4'), PENTAGON)
        self.assertEqual(Triangulation.parse(5, '1,3;1,4'), PENTAGON)
        self.assertIn((3, 1), PENTAGON)
        self.assertEqual(str(PENTAGON), '{(1,3), (1,4)}')

    def test_triangles_and_coloring(self):
        self.assertEqual(PENTAGON.triangles, ((1, 2, 3), (1, 3, 4), (1, 4, 5)))
        self.assertEqual(PENTAGON.coloring, {(1, 2, 3): 1, (1, 3, 4): -1, (1, 4, 5): 1})

    def test_labels(self):
        self.assertEqual(label(5, 3, 1), 'x1_3')
        self.assertEqual(label(5, 5, 1), 'b1_5')
        self.assertEqual(len(Polygon(6).diagonals), 9)
        self.assertEqual(Polygon(5).boundary_labels, {'b1_2', 'b2_3', 'b3_4', 'b4_5', 'b1_5'})

    def test_invalid_triangulations(self):
        with self.assertRaises(InvalidTriangulation):
            Polygon(4)
        with self.assertRaises(InvalidTriangulation):
            Triangulation.of(5, [(1, 3)])
        with self.assertRaises(InvalidTriangulation):
            Triangulation.of(5, [(1, 3), (2, 4)])
        with self.assertRaises(InvalidTriangulation):
            Triangulation.of(5, [(1, 2), (1, 3)])
        with self.assertRaises(InvalidArc):
            Arc.parse('2')

    def test_exchange_matrix(self):
        np.testing.assert_array_equal(b_matrix(PENTAGON), [[0, 1], [-1, 0]])
        B = b_matrix(HEXAGON_FAN)
        np.testing.assert_array_equal(B, -B.T)


class SnakeGraphOfArcTests(SimpleTestCase):
    def test_single_crossing(self):
        G = snake_graph(PENTAGON, (2, 4))
        self.assertEqual((G.steps, G.tile_labels, G.orientation), ('', ('x1_3',), -1))
        self.assertEqual(G.label_of(EdgeRef(1, 'N')), 'x1_4')
        self.assertEqual(G.label_of(EdgeRef(1, 'S')), 'b2_3')

    def test_two_crossings(self):
        G = snake_graph(PENTAGON, (2, 5))
        self.assertEqual((G.steps, G.tile_labels), ('E', ('x1_3', 'x1_4')))
        self.assertEqual(G.label_of(EdgeRef(2, 'S')), 'x1_3')
        self.assertEqual(G.label_of(EdgeRef(2, 'E')), 'b1_5')

    def test_arcs_without_tiles(self):
        self.assertEqual(snake_graph(PENTAGON, (1, 3)), EmptySnakeGraph('x1_3'))
        self.assertEqual(snake_graph(PENTAGON, (1, 2)), EmptySnakeGraph('b1_2'))

    def test_crossing_sequence(self):
        self.assertEqual(crossing_sequence(HEXAGON_FAN, (2, 6)), [(1, 3), (1, 4), (1, 5)])
        self.assertEqual(crossing_sequence(HEXAGON_FAN, (6, 2)), [(1, 5), (1, 4), (1, 3)])
        with self.assertRaises(ArcInTriangulation):
            crossing_sequence(PENTAGON, (1, 3))

    def test_fans_follow_zigzag_runs(self):
        self.assertEqual(fans(HEXAGON_FAN, (2, 6)), [Fan(1, 1, 3)])
        self.assertEqual(zigzag_runs(snake_graph(HEXAGON_FAN, (2, 6))), [(1, 3)])
        T = Triangulation.of(6, [(1, 3), (1, 4), (4, 6)])
        found = fans(T, (2, 5))
        self.assertEqual(found, [Fan(1, 1, 2), Fan(4, 2, 3)])
        self.assertEqual([(f.start, f.end) for f in found], zigzag_runs(snake_graph(T, (2, 5))))


class ClusterVariableTests(SimpleTestCase):
    def test_pentagon(self):
        self.assertEqual(cluster_variable(PENTAGON, (2, 4)), (var('x1_4') + var('y1_3')) * var('x1_3') ** -1)
        self.assertEqual(cluster_variable(PENTAGON, (1, 3)), var('x1_3'))
        self.assertEqual(cluster_variable(PENTAGON, (4, 5)), ONE)

    def test_f_polynomial(self):
        self.assertEqual(f_polynomial(PENTAGON, (2, 4)), ONE + var('y1_3'))
        self.assertEqual(f_polynomial(PENTAGON, (2, 5)), ONE + var('y1_3') + var('y1_3') * var('y1_4'))

    def test_skein_relation_for_grafting(self):
        def xv(a, b):
            return cluster_variable(PENTAGON, (a, b))

        self.assertEqual(xv(2, 4) * xv(3, 5), xv(2, 5) + var('y1_4'))


class OracleTests(SimpleTestCase):
    def test_tropical_sum(self):
        self.assertEqual(trop_add(TropElement((1, -2)), TropElement((0, 3))), TropElement((0, -2)))
        self.assertEqual(TropElement((1, -2)).positive_part(), TropElement((1, 0)))
        self.assertTrue((TropElement((2, 1)) * TropElement((-2, -1))).is_one())

    def test_matrix_mutation(self):
        B = np.array([[0, 1], [-1, 0]])
        np.testing.assert_array_equal(mutate_matrix(B, 0), [[0, -1], [1, 0]])
        np.testing.assert_array_equal(mutate_matrix(mutate_matrix(B, 1), 1), B)

    def test_principal_seed(self):
        seed = principal_seed(PENTAGON)
        self.assertEqual(seed.cluster, (var('x1_3'), var('x1_4')))
        self.assertEqual(seed.y_names, ('y1_3', 'y1_4'))
        self.assertEqual(seed.coeffs, (TropElement((1, 0)), TropElement((0, 1))))

    def test_seed_mutation(self):
        seed = mutate(principal_seed(PENTAGON), 1)
        self.assertEqual(seed.coeffs, (TropElement((-1, 0)), TropElement((1, 1))))
        self.assertEqual(seed.cluster[0], (var('x1_4') + var('y1_3')) * var('x1_3') ** -1)
        np.testing.assert_array_equal(seed.B, [[0, -1], [1, 0]])

    def test_mutation_is_an_involution(self):
        for T in (PENTAGON, HEXAGON_FAN, Triangulation.of(6, [(1, 3), (3, 5), (1, 5)])):
            seed = principal_seed(T)
            for k in range(1, seed.rank + 1):
                with self.subTest(tri=str(T), k=k):
                    self.assertEqual(mutate(mutate(seed, k), k), seed)
                    self.assertNotEqual(mutate(seed, k), seed)

    def test_flip(self):
        flipped, replacement = flip(PENTAGON, (1, 3))
        self.assertEqual(replacement, (2, 4))
        self.assertEqual(flipped.diagonals, ((1, 4), (2, 4)))
        with self.assertRaises(InvalidArc):
            flip(PENTAGON, (2, 4))

    def test_triangulation_counts(self):
        self.assertEqual(len(all_triangulations(5)), 5)
        self.assertEqual(len(all_triangulations(6)), 14)
        self.assertEqual(flip_graph(5).number_of_edges(), 5)

    def test_flip_path(self):
        self.assertEqual(flip_path(PENTAGON, (2, 4)), [(1, 3)])
        self.assertEqual(flip_path(PENTAGON, (2, 5)), [(1, 3), (1, 4)])
        self.assertEqual(flip_path(PENTAGON, (1, 3)), [])

    def test_mutation_agrees_with_snake_graphs(self):
        for diagonal in Polygon(5).diagonals:
            with self.subTest(arc=diagonal):
                self.assertEqual(oracle_cluster_variable(PENTAGON, diagonal), cluster_variable(PENTAGON, diagonal))


class CrossingArcTests(SimpleTestCase):
    def test_smoothing(self):
        self.assertTrue(arcs_cross((2, 4), (3, 5)))
        self.assertFalse(arcs_cross((2, 4), (2, 5)))
        self.assertEqual(smooth((2, 4), (3, 5), 5), ((Arc(2, 5), Arc(3, 4)), (Arc(2, 3), Arc(5, 4))))
        with self.assertRaises(NotCrossing):
            smooth((2, 4), (2, 5), 5)

    def test_smoothing_checks_the_polygon(self):
        with self.assertRaises(InvalidArc):
            smooth((1, 3), (2, 4), 4)
        with self.assertRaises(InvalidArc):
            smooth((2, 4), (3, 7), 6)
        with self.assertRaises(InvalidArc):
            smooth((1, 2), (2, 4), 5)

    def test_resolution_in_the_hexagon_fan(self):
        crossing = resolve_crossing(HEXAGON_FAN, (2, 5), (3, 6))
        self.assertFalse(crossing.is_grafting)
        self.assertEqual(crossing.overlap, Overlap(2, 2, 1, 1))
        G3, G4 = crossing.construction.pair34
        expected3, expected4 = snake_graph(HEXAGON_FAN, (2, 6)), snake_graph(HEXAGON_FAN, (3, 5))
        self.assertEqual((G3.steps, G3.tile_labels), (expected3.steps, expected3.tile_labels))
        self.assertEqual((G4.steps, G4.tile_labels), (expected4.steps, expected4.tile_labels))

    def test_grafting_in_the_pentagon(self):
        crossing = resolve_crossing(PENTAGON, (2, 4), (3, 5))
        self.assertTrue(crossing.is_grafting)
        self.assertEqual(crossing.graft_site, 1)
        self.assertEqual(crossing.construction.pair34[0].tile_labels, ('x1_3', 'x1_4'))

    def test_errors(self):
        with self.assertRaises(NotCrossing):
            resolve_crossing(PENTAGON, (2, 4), (2, 5))
        with self.assertRaises(ArcInTriangulation):
            resolve_crossing(PENTAGON, (1, 3), (2, 4))

    def test_initial_segment(self):
        self.assertTrue(crosses_initial_segment_geometric(HEXAGON_FAN, (2, 4), (3, 6)))
        self.assertTrue(crosses_initial_segment_geometric(PENTAGON, (3, 5), (4, 2)))
        self.assertFalse(crosses_initial_segment_geometric(PENTAGON, (3, 5), (2, 4)))
        self.assertFalse(crosses_initial_segment_geometric(PENTAGON, (1, 3), (2, 4)))
        self.assertTrue(crosses_initial_segment_geometric(HEXAGON_FAN, (2, 5), (3, 6)))

    def test_initial_segment_agrees_with_snake_graphs(self):
        for n in (5, 6, 7):
            for T in all_triangulations(n):
                free = [Arc(*d) for d in Polygon(n).diagonals if d not in T.diagonals]
                oriented = [gamma for arc in free for gamma in (arc, arc.reversed())]
                first_tiles = {gamma: snake_graph(T, gamma).tile_record(1) for gamma in oriented}
                for gamma1 in free:
                    G1 = snake_graph(T, gamma1)
                    for gamma2 in oriented:
                        if not arcs_cross(gamma1, gamma2):
                            continue
                        tile = first_tiles[gamma2]
                        with self.subTest(tri=str(T), gamma1=str(gamma1), gamma2=str(gamma2)):
                            self.assertEqual(crosses_initial_segment_geometric(T, gamma1, gamma2),
                                             crosses_initial_segment(G1, tile.west, tile.south, tile.label))

    def test_skein_relation(self):
        for T, gamma1, gamma2 in ((PENTAGON, (2, 4), (3, 5)), (HEXAGON_FAN, (2, 5), (3, 6))):
            with self.subTest(gamma1=gamma1, gamma2=gamma2):
                check = skein_relation(T, gamma1, gamma2)
                self.assertTrue(check.ok, check.as_dict())
                self.assertTrue(crossing_identity(T, resolve_crossing(T, gamma1, gamma2)).ok)

    def test_bijection_keeps_edge_weights(self):
        for T, gamma1, gamma2 in ((PENTAGON, (2, 4), (3, 5)), (HEXAGON_FAN, (2, 5), (3, 6))):
            with self.subTest(gamma1=gamma1, gamma2=gamma2):
                crossing = resolve_crossing(T, gamma1, gamma2)
                report = verify_bijection(crossing.construction, unit_labels=T.polygon.boundary_labels)
                self.assertTrue(report.ok, report.failures)

    def test_edge_weights_catch_a_scrambled_bijection(self):
        crossing = resolve_crossing(PENTAGON, (2, 4), (3, 5))
        construction = crossing.construction
        images = [
            phi(construction, P1, P2)
            for P1 in enumerate_matchings(snake_graph(PENTAGON, crossing.gamma1))
            for P2 in enumerate_matchings(snake_graph(PENTAGON, crossing.gamma2))
        ]
        a, b = [image for image in images if image.branch == BRANCH_34][:2]
        swap = {a: b, b: a}

        def scrambled_phi(c, P1, P2):
            image = phi(c, P1, P2)
            return swap.get(image, image)

        def scrambled_psi(c, branch, Pa, Pb):
            image = TaggedMatching(branch, (Pa, Pb))
            image = swap.get(image, image)
            return psi(c, image.branch, *image.matchings)

        report = verify_bijection(
            construction, scrambled_phi, scrambled_psi, unit_labels=PENTAGON.polygon.boundary_labels,
        )
        self.assertFalse(report.ok)
        self.assertTrue(any('x-weights disagree' in failure for failure in report.failures))


class SurfaceApiTests(APITestCase):
    def test_snake(self):
        payload = {'n': 5, 'tri': '1-3,1-4', 'arc': '2,5'}
        response = self.client.post('/api/surfaces/snake/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['graph']['steps'], 'E')
        self.assertEqual(response.data['crossed'], [[1, 3], [1, 4]])
        self.assertEqual(response.data['fans'], [{'vertex': 1, 'start': 1, 'end': 2}])

    def test_xvar(self):
        payload = {'n': 5, 'tri': '1-3,1-4', 'arc': '2,4'}
        response = self.client.post('/api/surfaces/xvar/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['x'], 'x1_3^-1*x1_4 + x1_3^-1*y1_3')
        self.assertEqual(response.data['f'], 'y1_3 + 1')

    def test_smooth(self):
        payload = {'n': 5, 'arc': '2,4', 'arc2': '3,5'}
        response = self.client.post('/api/surfaces/smooth/', payload, format='json')
        self.assertEqual(response.data, {'pair34': ['(2,5)', '(3,4)'], 'pair56': ['(2,3)', '(5,4)']})

    def test_smooth_with_triangulation(self):
        payload = {'n': 5, 'arc': '2,4', 'arc2': '3,5', 'tri': '1-3,1-4'}
        response = self.client.post('/api/surfaces/smooth/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['construction']['kind'], 'graft')

    def test_smooth_needs_crossing_arcs(self):
        payload = {'n': 5, 'arc': '2,4', 'arc2': '2,5'}
        response = self.client.post('/api/surfaces/smooth/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_smooth_rejects_arcs_outside_the_polygon(self):
        payload = {'n': 5, 'arc': '2,4', 'arc2': '3,7'}
        response = self.client.post('/api/surfaces/smooth/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_oracle(self):
        payload = {'n': 5, 'tri': '1-3,1-4', 'arc': '2,5'}
        response = self.client.post('/api/surfaces/oracle/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['flips'], [[1, 3], [1, 4]])
        self.assertTrue(response.data['agrees'])

    def test_invalid_triangulation(self):
        response = self.client.post('/api/surfaces/xvar/', {'n': 5, 'tri': '1-3', 'arc': '2,4'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('tri', response.data)

    def test_polygon_size_limit(self):
        response = self.client.post('/api/surfaces/xvar/', {'n': 11, 'tri': '', 'arc': '2,4'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
