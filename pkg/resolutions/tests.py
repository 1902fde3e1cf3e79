from collections import Counter

from django.test import SimpleTestCase
from rest_framework import status
from rest_framework.test import APITestCase

from matchings.perfect import count_matchings, enumerate_matchings
from snakegraphs.exceptions import BadEdgeChoice, BadGraftSite, InvalidOverlap, NotCrossing
from snakegraphs.graph import EdgeRef, EmptySnakeGraph, build
from snakegraphs.overlap import LABELED, Overlap, crosses, find_overlaps

from .bijection import BRANCH_34, BRANCH_56, TaggedMatching, phi, psi, verify_bijection
from .construction import (
    PROOF,
    closure_of_overlap,
    describe,
    graft,
    graft_coefficients,
    grafting_edge_is_minimal,
    resolve,
    skein_tiles,
)


def labeled(steps, prefix):
    return build(steps, [f"{prefix}{j}" for j in range(1, len(steps) + 2)])


def count(G):
    return count_matchings(G)


class ResolutionTests(SimpleTestCase):
    def setUp(self):
        self.G1 = labeled('NEEN', 'a')
        self.G2 = labeled('EE', 'b')
        self.res = resolve(self.G1, self.G2, Overlap(2, 4, 1, 3))

    def test_pieces(self):
        G3, G4 = self.res.pair34
        G5, G6 = self.res.pair56
        self.assertTrue(self.res.crossing)
        self.assertEqual((G3.steps, G3.tile_labels), ('NEE', ('a1', 'a2', 'a3', 'a4')))
        self.assertEqual((G4.steps, G4.tile_labels), ('EEN', ('b1', 'b2', 'b3', 'a5')))
        self.assertEqual((G5.source, G5.label), (EdgeRef(1, 'W'), 'e1W'))
        self.assertEqual((G6.source, G6.label), (EdgeRef(5, 'E'), 'e5E'))

    def test_tiles_are_conserved(self):
        G3, G4 = self.res.pair34
        self.assertEqual(Counter(G3.tile_labels + G4.tile_labels),
                         Counter(self.G1.tile_labels + self.G2.tile_labels))

    def test_matching_counts(self):
        G3, G4 = self.res.pair34
        G5, G6 = self.res.pair56
        self.assertEqual(count(self.G1) * count(self.G2), 50)
        self.assertEqual(count(G3) * count(G4) + count(G5) * count(G6), 7 * 7 + 1)

    def test_output_pair_overlaps_without_crossing(self):
        G3, G4 = self.res.pair34
        self.assertFalse(crosses(G3, G4, Overlap(2, 4, 1, 3)))

    def test_closure_and_skein(self):
        self.assertEqual(closure_of_overlap(self.G1, self.G2, self.res), ('a1', 'a2', 'a3', 'a4', 'a5'))
        self.assertEqual(self.res.forced1, (1, 5))
        self.assertTrue(set(skein_tiles(self.res)) >= {'a2', 'a3', 'a4'})

    def test_proof_convention_picks_the_other_edges(self):
        res = resolve(self.G1, self.G2, Overlap(2, 4, 1, 3), convention=PROOF)
        G5, G6 = res.pair56
        self.assertEqual(G5.source, EdgeRef(1, 'S'))
        self.assertEqual(G6.source, EdgeRef(5, 'N'))

    def test_auto_labels_glue_quietly(self):
        with self.assertNoLogs('snakegraphs.graph', 'WARNING'):
            resolve(build('NEEN'), build('EE'), Overlap(2, 4, 1, 3))
            graft(build('E'), build(''), 1)
        with self.assertNoLogs('snakegraphs.overlap', 'WARNING'):
            find_overlaps(build('NEEN'), build('EE'), LABELED)

    def test_no_crossing(self):
        G = labeled('EE', 'a')
        res = resolve(G, G, Overlap(1, 3, 1, 3))
        self.assertFalse(res.crossing)
        self.assertEqual(res.pair34, (G, G))
        self.assertEqual(closure_of_overlap(G, G, res), ())
        self.assertEqual(skein_tiles(res), ())
        with self.assertRaises(NotCrossing):
            resolve(G, G, Overlap(1, 3, 1, 3), strict=True)

    def test_invalid_overlap(self):
        with self.assertRaises(InvalidOverlap):
            resolve(labeled('EE', 'a'), labeled('N', 'b'), Overlap(1, 2, 1, 2))

    def test_describe(self):
        data = describe(self.res)
        self.assertEqual(data['kind'], 'resolution')
        self.assertEqual(data['overlap'], '2,4,1,3')
        self.assertEqual(data['pair56'], [{'edge': 'e1W'}, {'edge': 'e5E'}])


class GraftingTests(SimpleTestCase):
    def test_interior_site(self):
        G1, G2 = labeled('E', 'a'), labeled('', 'b')
        g = graft(G1, G2, 1)
        G3, G4 = g.pair34
        G5, G6 = g.pair56
        self.assertEqual(g.case, 1)
        self.assertEqual(g.delta3, EdgeRef(1, 'N'))
        self.assertEqual((G3.steps, G3.tile_labels), ('N', ('a1', 'b1')))
        self.assertEqual(G4.label, 'e2E')
        self.assertEqual(G5.label, 'e1W')
        self.assertEqual((G6.steps, G6.tile_labels), ('N', ('b1', 'a2')))
        self.assertEqual(count(G1) * count(G2), count(G3) * count(G4) + count(G5) * count(G6))

    def test_last_tile_site(self):
        g = graft(labeled('', 'a'), labeled('', 'b'), 1, 'east')
        self.assertEqual(g.case, 2)
        self.assertEqual(g.pair34[0].steps, 'E')
        self.assertEqual(g.pair34[1], EmptySnakeGraph('e1E'))
        self.assertEqual([G.label for G in g.pair56], ['e1S', 'e1N'])
        self.assertFalse(grafting_edge_is_minimal(g))
        self.assertEqual(graft_coefficients(g), ((), ('b1',)))

    def test_site_zero_reflects_the_first_graph(self):
        g = graft(labeled('E', 'a'), labeled('', 'b'), 0, 'N')
        self.assertTrue(g.reflected)
        self.assertEqual(g.s, 2)
        self.assertEqual(g.g1.tile_labels, ('a2', 'a1'))

    def test_errors(self):
        G1, G2 = labeled('E', 'a'), labeled('', 'b')
        with self.assertRaises(BadGraftSite):
            graft(G1, G2, 3)
        with self.assertRaises(BadEdgeChoice):
            graft(G1, G2, 1, 'E')
        with self.assertRaises(BadEdgeChoice):
            graft(G1, G2, 2)


class BijectionTests(SimpleTestCase):
    def test_grafting_on_the_last_tile(self):
        report = verify_bijection(graft(labeled('', 'a'), labeled('', 'b'), 1, 'E'))
        self.assertTrue(report.ok, report.failures)
        self.assertEqual((report.domain_size, report.image34, report.image56), (4, 3, 1))

    def test_grafting_inside(self):
        report = verify_bijection(graft(labeled('E', 'a'), labeled('', 'b'), 1))
        self.assertTrue(report.ok, report.failures)
        self.assertEqual((report.domain_size, report.image34, report.image56), (6, 3, 3))

    def test_crossing_in_one_tile(self):
        res = resolve(labeled('E', 'a'), labeled('N', 'b'), Overlap(2, 2, 1, 1))
        report = verify_bijection(res)
        self.assertTrue(report.ok, report.failures)
        self.assertEqual((report.domain_size, report.expected34, report.expected56), (9, 8, 1))

    def test_psi_rebuilds_the_second_pair_from_pinned_heights(self):
        res = resolve(labeled('E', 'a'), labeled('N', 'b'), Overlap(2, 2, 1, 1))
        G5, G6 = res.pair56
        for Pa in enumerate_matchings(G5):
            for Pb in enumerate_matchings(G6):
                P1, P2 = psi(res, BRANCH_56, Pa, Pb)
                self.assertEqual(phi(res, P1, P2), TaggedMatching(BRANCH_56, (Pa, Pb)))

    def test_phi_and_psi_are_inverse(self):
        g = graft(labeled('', 'a'), labeled('', 'b'), 1, 'E')
        for P1 in enumerate_matchings(g.g1):
            for P2 in enumerate_matchings(g.g2):
                image = phi(g, P1, P2)
                self.assertIn(image.branch, (BRANCH_34, BRANCH_56))
                self.assertEqual(psi(g, image.branch, *image.matchings), (P1, P2))

    def test_expected_sizes_on_a_longer_crossing(self):
        report = verify_bijection(resolve(labeled('NEEN', 'a'), labeled('EE', 'b'), Overlap(2, 4, 1, 3)))
        self.assertEqual((report.domain_size, report.expected34, report.expected56), (50, 49, 1))


class ResolutionApiTests(APITestCase):
    def test_resolve(self):
        payload = {'g1': {'steps': 'NEEN'}, 'g2': {'steps': 'EE'}, 'overlap': '2,4,1,3'}
        response = self.client.post('/api/resolutions/resolve/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertTrue(response.data['crossing'])
        self.assertEqual([G['steps'] for G in response.data['pair34']], ['NEE', 'EEN'])

    def test_graft_needs_a_site(self):
        payload = {'g1': {'steps': 'E'}, 'g2': {'steps': ''}, 'overlap': '1,1,1,1'}
        response = self.client.post('/api/resolutions/graft/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_graft(self):
        payload = {'g1': {'steps': ''}, 'g2': {'steps': ''}, 's': 1, 'edge': 'east'}
        response = self.client.post('/api/resolutions/graft/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['case'], 2)
        self.assertEqual(response.data['grafting_edge'], '1:E')

    def test_bad_site(self):
        payload = {'g1': {'steps': ''}, 'g2': {'steps': ''}, 's': 4}
        response = self.client.post('/api/resolutions/graft/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('construction', response.data)

    def test_verify(self):
        payload = {'g1': {'steps': ''}, 'g2': {'steps': ''}, 's': 1, 'edge': 'E'}
        response = self.client.post('/api/resolutions/verify/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertTrue(response.data['ok'])
        self.assertEqual(response.data['domain_size'], 4)
