from django.test import SimpleTestCase
from hypothesis import given, settings as hypothesis_settings, strategies as st
from rest_framework import status
from rest_framework.test import APITestCase

from .exceptions import AliasLabelConflict, EmptySteps, InvalidOverlap, InvalidSteps, TileRangeError, UnknownEdge
from .graph import (
    EdgeRef,
    SignAssignment,
    TileRecord,
    assemble,
    build,
    from_dict,
    is_straight,
    is_zigzag,
    reflect,
    sign_assignments,
    sign_of,
    subgraph,
    to_dict,
    zigzag_runs,
)
from .overlap import LABELED, Overlap, crosses, crosses_initial_segment, find_overlaps
from .render import render

words = st.text(alphabet='EN', max_size=6)

SQUARE = {'1:N': 'n', '1:E': 'e', '1:S': 's', '1:W': 'w'}


class BuildTests(SimpleTestCase):
    def test_single_tile(self):
        G = build('')
        self.assertEqual(G.d, 1)
        self.assertEqual(len(G.edges), 4)
        self.assertEqual(G.interior_edges, ())

    def test_eight_tiles_have_seven_interior_edges(self):
        G = build('ENNEENE')
        self.assertEqual(G.d, 8)
        self.assertEqual(len(G.interior_edges), 7)
        self.assertEqual(len(G.edges), 25)

    def test_positions_follow_the_steps(self):
        self.assertEqual(build('EN').positions, ((0, 0), (1, 0), (1, 1)))

    def test_alias_normalizes_to_the_lower_tile(self):
        G = build('EN')
        self.assertEqual(G.canonical(EdgeRef(2, 'W')), EdgeRef(1, 'E'))
        self.assertEqual(G.canonical(EdgeRef(3, 'S')), EdgeRef(2, 'N'))
        self.assertEqual(G.canonical(EdgeRef(3, 'W')), EdgeRef(3, 'W'))

    def test_labels_are_kept_and_completed(self):
        G = build('E', ['a', 'c'], {'2:W': 'glue', '1:N': 'top'})
        self.assertEqual(G.label_of(EdgeRef(1, 'E')), 'glue')
        self.assertEqual(G.label_of(EdgeRef(1, 'N')), 'top')
        self.assertEqual(G.label_of(EdgeRef(2, 'E')), 'e2E')
        self.assertTrue(G.auto_labeled)

    def test_fully_labeled_graph_is_not_auto_labeled(self):
        self.assertFalse(build('', ['x'], SQUARE).auto_labeled)

    def test_errors(self):
        with self.assertRaises(InvalidSteps):
            build('XY')
        with self.assertRaises(InvalidSteps):
            build('E', ['a'])
        with self.assertRaises(EmptySteps):
            build('', [])
        with self.assertRaises(AliasLabelConflict):
            build('E', None, {'1:E': 'p', '2:W': 'q'})
        with self.assertRaises(UnknownEdge):
            build('E').canonical(EdgeRef(3, 'N'))
        with self.assertRaises(UnknownEdge):
            EdgeRef.parse('north of one')

    def test_dict_form_keeps_the_graph(self):
        G = build('NE', ['a', 'c', 'd'], {'1:N': 'p'}, orientation=1)
        self.assertEqual(from_dict(to_dict(G)), G)
        self.assertEqual(to_dict(from_dict({'edge': 'b1_2'})), {'edge': 'b1_2'})

    def test_labeled_glue_warns_on_disagreeing_sides(self):
        first = TileRecord('a', north='n1', east='k1', south='s1', west='w1')
        second = TileRecord('b', north='n2', east='e2', south='s2', west='k2')
        with self.assertLogs('snakegraphs.graph', 'WARNING') as logs:
            G = assemble('E', [first, second], -1)
        self.assertIn("'k1' and 'k2'", logs.output[0])
        self.assertEqual(G.label_of(EdgeRef(1, 'E')), 'k2')
        with self.assertNoLogs('snakegraphs.graph', 'WARNING'):
            assemble('E', [first, second], -1, auto_labeled=True)


class SignTests(SimpleTestCase):
    def test_single_tile(self):
        sa = SignAssignment(build(''), 1)
        self.assertEqual(sign_of(sa, EdgeRef(1, 'S')), 1)
        self.assertEqual(sign_of(sa, EdgeRef(1, 'E')), 1)
        self.assertEqual(sign_of(sa, EdgeRef(1, 'N')), -1)
        self.assertEqual(sign_of(sa, EdgeRef(1, 'W')), -1)

    def test_interior_edge_signs(self):
        self.assertEqual(build('E').interior_sign(1, 1), 1)
        self.assertEqual(build('N').interior_sign(1, 1), -1)

    def test_exactly_two_sign_functions(self):
        plus, minus = sign_assignments(build('ENE'))
        self.assertEqual((plus.seed, minus.seed), (1, -1))

    @given(words)
    def test_aliases_share_a_sign_and_seeds_negate(self, steps):
        G = build(steps)
        for seed in (1, -1):
            for j, step in enumerate(G.steps, start=1):
                lower = G.edge_sign(EdgeRef(j, step), seed)
                upper_face = 'W' if step == 'E' else 'S'
                self.assertEqual(G.tile_sign(j + 1, seed) * (1 if upper_face == 'S' else -1), lower)
        for edge in G.edges:
            self.assertEqual(G.edge_sign(edge, 1), -G.edge_sign(edge, -1))

    @given(words)
    def test_equal_consecutive_signs_mark_a_turn(self, steps):
        G = build(steps)
        for j in range(1, G.d - 1):
            self.assertEqual(G.interior_sign(j, 1) == G.interior_sign(j + 1, 1), G.steps[j - 1] != G.steps[j])

    @given(words)
    def test_sign_of_reads_the_assignment(self, steps):
        G = build(steps)
        for sa in sign_assignments(G):
            for edge in G.edges:
                self.assertEqual(sign_of(sa, edge), sa.sign(edge))
                self.assertEqual(sign_of(sa, edge), G.edge_sign(edge, sa.seed))
            tiles = range(1, G.d + 1)
            self.assertEqual([sa.tile_sign(j) for j in tiles], [G.tile_sign(j, sa.seed) for j in tiles])


class SubgraphAndReflectionTests(SimpleTestCase):
    def test_subgraph(self):
        G = build('ENE')
        self.assertEqual(subgraph(G, 2, 4).steps, 'NE')
        self.assertEqual(subgraph(G, 1, G.d), G)
        single = subgraph(G, 3, 3)
        self.assertEqual((single.d, single.tile_labels), (1, ('t3',)))
        self.assertEqual(single.label_of(EdgeRef(1, 'N')), G.label_of(EdgeRef(3, 'N')))

    def test_subgraph_range(self):
        with self.assertRaises(TileRangeError):
            subgraph(build('E'), 2, 1)
        with self.assertRaises(TileRangeError):
            subgraph(build('E'), 1, 3)

    @given(words, st.data())
    def test_subgraph_is_a_slice(self, steps, data):
        G = build(steps)
        i = data.draw(st.integers(1, G.d))
        j = data.draw(st.integers(i, G.d))
        sub = subgraph(G, i, j)
        self.assertEqual(sub.steps, G.steps[i - 1:j - 1])
        self.assertEqual(sub.tile_labels, G.tile_labels[i - 1:j])
        for k in range(1, sub.d + 1):
            self.assertEqual(sub.tile_record(k), G.tile_record(i + k - 1))
            self.assertEqual(sub.tile_sign(k), G.tile_sign(i + k - 1))
            for face in ('N', 'E', 'S', 'W'):
                self.assertEqual(sub.edge_sign(EdgeRef(k, face)), G.edge_sign(EdgeRef(i + k - 1, face)))

    @given(words)
    def test_whole_range_is_the_graph(self, steps):
        G = build(steps)
        self.assertEqual(subgraph(G, 1, G.d), G)

    def test_reflect_single_tile(self):
        G = reflect(build('', ['x'], SQUARE))
        self.assertEqual(G.tile_record(1).north, 'w')
        self.assertEqual(G.tile_record(1).east, 's')
        self.assertEqual(G.tile_record(1).south, 'e')
        self.assertEqual(G.tile_record(1).west, 'n')

    def test_reflect_steps(self):
        reflected = reflect(build('E'))
        self.assertEqual(reflected.steps, 'N')
        self.assertEqual(reflected.tile_labels, ('t2', 't1'))
        self.assertEqual(reflect(build('EEN')).steps, 'ENN')

    @given(words)
    def test_reflect_is_an_involution(self, steps):
        G = build(steps)
        self.assertEqual(reflect(reflect(G)), G)

    @given(words)
    def test_reflected_positions_mirror_across_the_antidiagonal(self, steps):
        G = build(steps)
        x_max, y_max = G.positions[-1]
        mirrored = sorted((y_max - y, x_max - x) for x, y in G.positions)
        self.assertEqual(sorted(reflect(G).positions), mirrored)


class ShapeTests(SimpleTestCase):
    def test_straight_and_zigzag(self):
        self.assertTrue(is_straight(build('EE')))
        self.assertFalse(is_zigzag(build('EE')))
        self.assertTrue(is_zigzag(build('ENE')))
        self.assertTrue(is_straight(build('E')) and is_zigzag(build('E')))

    def test_zigzag_runs(self):
        self.assertEqual(zigzag_runs(build('EEN')), [(1, 2), (2, 4)])
        self.assertEqual(zigzag_runs(build('')), [(1, 1)])
        self.assertEqual(zigzag_runs(build('ENEN')), [(1, 5)])

    @given(words)
    def test_straight_graphs_lie_on_a_line(self, steps):
        G = build(steps)
        xs, ys = {x for x, _ in G.positions}, {y for _, y in G.positions}
        self.assertEqual(is_straight(G), len(xs) == 1 or len(ys) == 1)

    @given(words)
    def test_zigzag_is_one_run(self, steps):
        G = build(steps)
        self.assertEqual(is_zigzag(G), zigzag_runs(G) == [(1, G.d)])
        if is_zigzag(G):
            for (x1, y1), (x2, y2) in zip(G.positions, G.positions[2:]):
                self.assertTrue(x1 != x2 and y1 != y2)

    @given(words)
    def test_zigzag_runs_chain_across_the_graph(self, steps):
        G = build(steps)
        runs = zigzag_runs(G)
        self.assertEqual((runs[0][0], runs[-1][1]), (1, G.d))
        for (_, end), (start, _) in zip(runs, runs[1:]):
            self.assertEqual(end, start)
        for i, j in runs:
            self.assertTrue(is_zigzag(subgraph(G, i, j)))


class OverlapTests(SimpleTestCase):
    def test_full_overlap_of_a_graph_with_itself(self):
        G = build('EE')
        self.assertIn(Overlap(1, 3, 1, 3), find_overlaps(G, G))
        self.assertFalse(crosses(G, G, Overlap(1, 3, 1, 3)))

    def test_steps_in_opposite_order(self):
        found = find_overlaps(build('EN'), build('NE'))
        self.assertIn(Overlap(1, 2, 2, 3), found)
        self.assertIn(Overlap(2, 3, 1, 2), found)

    def test_crossing_in_the_middle(self):
        self.assertTrue(crosses(build('NEEN'), build('EE'), Overlap(2, 4, 1, 3)))

    def test_single_tile_needs_matching_neighbourhoods(self):
        G1 = build('EE', ['a', 'k', 'c'])
        G2 = build('EN', ['x', 'k', 'z'])
        self.assertEqual(find_overlaps(G1, G2, LABELED), [])

    def test_invalid_overlaps(self):
        with self.assertRaises(InvalidOverlap):
            Overlap(1, 2, 1, 3)
        with self.assertRaises(InvalidOverlap):
            crosses(build('EE'), build('NN'), Overlap(1, 2, 1, 2))
        with self.assertRaises(InvalidOverlap):
            Overlap.parse('1,2,3')

    @hypothesis_settings(max_examples=60)
    @given(words, words)
    def test_overlaps_are_symmetric(self, steps1, steps2):
        G1, G2 = build(steps1), build(steps2)
        self.assertEqual({ov.swapped() for ov in find_overlaps(G1, G2)}, set(find_overlaps(G2, G1)))

    @hypothesis_settings(max_examples=60)
    @given(words, words)
    def test_crossing_does_not_depend_on_the_seed(self, steps1, steps2):
        G1, G2 = build(steps1), build(steps2)
        for ov in find_overlaps(G1, G2):
            self.assertEqual(crosses(G1, G2, ov, 1), crosses(G1, G2, ov, -1))

    def test_initial_segment(self):
        self.assertTrue(crosses_initial_segment(build('E', ['d', 'q']), 'd', 'dp', 'k'))
        self.assertTrue(crosses_initial_segment(build('E', ['q', 'dp']), 'd', 'dp', 'k'))
        self.assertFalse(crosses_initial_segment(build('E', ['p', 'q']), 'd', 'dp', 'k'))
        G = build('EEE', ['p', 'd', 'dp', 'r'], {'2:E': 'k'})
        self.assertTrue(crosses_initial_segment(G, 'd', 'dp', 'k'))


class RenderTests(SimpleTestCase):
    def test_single_tile_box(self):
        self.assertEqual(render(build('')), '+-+\n| |\n+-+')

    def test_ascii_l_shape(self):
        self.assertEqual(render(build('EN')), '  +-+\n  | |\n+-+-+\n| | |\n+-+-+')

    def test_svg_has_one_square_per_tile(self):
        drawing = render(build('EN'), 'svg')
        self.assertEqual(drawing.count('<rect'), 3)

    def test_legend(self):
        self.assertIn('tile 2: b', render(build('E', ['a', 'b']), legend=True))

    def test_unknown_format(self):
        with self.assertRaises(ValueError):
            render(build(''), 'png')


class GraphApiTests(APITestCase):
    def test_build(self):
        response = self.client.post('/api/snakegraphs/build/', {'steps': 'EN'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['d'], 3)
        self.assertEqual(len(response.data['edges']), 10)
        self.assertEqual(response.data['interior_edges'], ['1:E', '2:N'])

    def test_build_rejects_unknown_steps(self):
        response = self.client.post('/api/snakegraphs/build/', {'steps': 'EX'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('graph', response.data)

    def test_render(self):
        response = self.client.post('/api/snakegraphs/render/', {'graph': {'steps': ''}}, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['drawing'], '+-+\n| |\n+-+')

    def test_overlaps(self):
        payload = {'g1': {'steps': 'NEEN'}, 'g2': {'steps': 'EE'}}
        response = self.client.post('/api/snakegraphs/overlaps/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertIn({'overlap': '2,4,1,3', 'crossing': True}, response.data['overlaps'])

    def test_overlaps_need_tiles(self):
        payload = {'g1': {'edge': 'b1_2'}, 'g2': {'steps': 'EE'}}
        response = self.client.post('/api/snakegraphs/overlaps/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
