from django.test import SimpleTestCase
from hypothesis import given, settings as hypothesis_settings, strategies as st
from rest_framework import status
from rest_framework.test import APITestCase

from snakegraphs.exceptions import AmbiguousCompletion, NoCompletion, NotAMatching
from snakegraphs.graph import EdgeRef, EmptySnakeGraph, build

from .perfect import (
    EDGE_MATCHING,
    PerfectMatching,
    boundary_matchings,
    complete_boundary,
    count_matchings,
    enumerate_matchings,
    enumerate_union,
    from_heights,
    height_monomial,
    heights,
    is_perfect_matching,
    weight_monomial,
)

words = st.text(alphabet='EN', max_size=6)


def matching(*edges):
    return PerfectMatching.of(EdgeRef.parse(e) for e in edges)


class CountTests(SimpleTestCase):
    def test_small_counts(self):
        expected = {'': 2, 'E': 3, 'N': 3, 'EN': 4, 'NE': 4, 'EE': 5, 'NN': 5, 'EEE': 8, 'ENE': 5, 'EEN': 7}
        for steps, count in expected.items():
            with self.subTest(steps=steps):
                self.assertEqual(len(enumerate_matchings(build(steps))), count)
                self.assertEqual(count_matchings(build(steps)), count)

    def test_single_edge(self):
        G = EmptySnakeGraph('b1_2')
        self.assertEqual(enumerate_matchings(G), [EDGE_MATCHING])
        self.assertEqual(count_matchings(G), 1)
        self.assertEqual(boundary_matchings(G), (EDGE_MATCHING, EDGE_MATCHING))

    def test_disjoint_union(self):
        self.assertEqual(len(enumerate_union([build(''), build('E'), EmptySnakeGraph('b1_2')])), 6)

    def test_straight_and_zigzag_counts_up_to_twelve_tiles(self):
        fibonacci = [2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377]
        for d in range(1, 13):
            straight, zigzag = build('E' * (d - 1)), build(('EN' * d)[:d - 1])
            with self.subTest(d=d):
                self.assertEqual(len(enumerate_matchings(straight)), fibonacci[d - 1])
                self.assertEqual(count_matchings(straight), fibonacci[d - 1])
                self.assertEqual(len(enumerate_matchings(zigzag)), d + 1)
                self.assertEqual(count_matchings(zigzag), d + 1)

    @hypothesis_settings(max_examples=40, deadline=None)
    @given(st.text(alphabet='EN', min_size=7, max_size=11))
    def test_recurrence_matches_enumeration_on_long_graphs(self, steps):
        G = build(steps)
        self.assertEqual(count_matchings(G), len(enumerate_matchings(G)))

    @given(words)
    def test_recurrence_matches_enumeration(self, steps):
        G = build(steps)
        self.assertEqual(count_matchings(G), len(enumerate_matchings(G)))

    @given(words)
    def test_every_enumerated_matching_is_perfect(self, steps):
        G = build(steps)
        for P in enumerate_matchings(G):
            self.assertTrue(is_perfect_matching(G, P.edges))


class BoundaryMatchingTests(SimpleTestCase):
    def test_two_tiles(self):
        minus, plus = boundary_matchings(build('E'))
        self.assertEqual(minus, matching('1:S', '1:N', '2:E'))
        self.assertEqual(plus, matching('1:W', '2:N', '2:S'))

    def test_single_tile_orientations(self):
        self.assertEqual(boundary_matchings(build(''))[0], matching('1:N', '1:S'))
        self.assertEqual(boundary_matchings(build('', orientation=1))[0], matching('1:E', '1:W'))

    @given(words)
    def test_exactly_two_boundary_matchings(self, steps):
        G = build(steps)
        boundary = set(G.boundary_edges)
        only = {P for P in enumerate_matchings(G) if set(P.edges) <= boundary}
        minus, plus = boundary_matchings(G)
        self.assertEqual(only, {minus, plus})
        self.assertEqual(set(minus.edges) | set(plus.edges), boundary)

    def test_completion(self):
        G = build('E')
        minus, plus = boundary_matchings(G)
        self.assertEqual(complete_boundary(G, ['1:S']), minus)
        self.assertEqual(complete_boundary(G, [EdgeRef(2, 'N')]), plus)
        with self.assertRaises(AmbiguousCompletion):
            complete_boundary(G, [])
        with self.assertRaises(NoCompletion):
            complete_boundary(G, ['1:E'])
        with self.assertRaises(NoCompletion):
            complete_boundary(G, ['1:S', '1:W'])


class HeightTests(SimpleTestCase):
    def test_heights_of_two_tiles(self):
        G = build('E')
        minus, plus = boundary_matchings(G)
        self.assertEqual(heights(G, minus), (0, 0))
        self.assertEqual(heights(G, plus), (1, 1))
        self.assertEqual(heights(G, matching('1:W', '1:E', '2:E')), (1, 0))

    def test_from_heights(self):
        G = build('E')
        self.assertEqual(from_heights(G, (1, 0)), matching('1:W', '1:E', '2:E'))
        self.assertIsNone(from_heights(G, (0, 1)))
        self.assertIsNone(from_heights(G, (0,)))
        self.assertEqual(from_heights(EmptySnakeGraph('b1_2'), ()), EDGE_MATCHING)

    @given(words)
    def test_maximal_matching_raises_every_tile(self, steps):
        G = build(steps)
        self.assertEqual(heights(G, boundary_matchings(G)[1]), (1,) * G.d)

    def test_height_and_weight_monomials(self):
        G = build('E')
        minus, plus = boundary_matchings(G)
        self.assertEqual(height_monomial(G, plus).as_dict(), {'t1': 1, 't2': 1})
        self.assertEqual(height_monomial(G, minus).as_dict(), {})
        self.assertEqual(weight_monomial(G, minus), (('e1N', 1), ('e1S', 1), ('e2E', 1)))
        self.assertEqual(weight_monomial(EmptySnakeGraph('b1_2'), EDGE_MATCHING), (('b1_2', 1),))
        self.assertEqual(weight_monomial(EmptySnakeGraph('b1_2'), EDGE_MATCHING, {'b1_2'}), ())
        self.assertEqual(weight_monomial(EmptySnakeGraph('x1_3'), EDGE_MATCHING), (('x1_3', 1),))

    def test_every_label_weighs_unless_declared_a_unit(self):
        G = build('', ['x'], {'1:S': 'a', '1:E': 'b', '1:N': 'c', '1:W': 'd'})
        found = {weight_monomial(G, P) for P in enumerate_matchings(G)}
        self.assertEqual(found, {(('a', 1), ('c', 1)), (('b', 1), ('d', 1))})
        found = {weight_monomial(G, P, frozenset({'b', 'c'})) for P in enumerate_matchings(G)}
        self.assertEqual(found, {(('a', 1),), (('d', 1),)})

    def test_rejects_non_matchings(self):
        G = build('E')
        self.assertFalse(is_perfect_matching(G, [EdgeRef(5, 'N')]))
        self.assertFalse(is_perfect_matching(G, [EdgeRef(1, 'N')]))
        with self.assertRaises(NotAMatching):
            heights(G, matching('1:N'))


class MatchingApiTests(APITestCase):
    def test_enumerate(self):
        response = self.client.post('/api/matchings/', {'graph': {'steps': 'E'}}, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['count'], 3)
        self.assertEqual(response.data['minimal'], ['1:N', '1:S', '2:E'])
        self.assertEqual(response.data['maximal'], ['1:W', '2:N', '2:S'])
        self.assertIn({'edges': ['1:E', '1:W', '2:E'], 'heights': [1, 0]}, response.data['matchings'])

    def test_count_only(self):
        response = self.client.post('/api/matchings/', {'graph': {'steps': 'EE'}, 'count_only': True}, format='json')
        self.assertEqual(response.data, {'count': 5})

    def test_invalid_graph(self):
        response = self.client.post('/api/matchings/', {'graph': {'steps': 'Q'}}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
