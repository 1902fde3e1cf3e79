"""
Perfect matchings of snake graphs.

Besides plain enumeration this module encodes a matching by its heights:
the 0/1 vector of tiles enclosed by the cycles of ``P`` xor ``P_minus``.
Every perfect matching is ``P_minus`` xor the boundaries of its enclosed
tiles, which makes the height vector a complete and compact coordinate.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from itertools import product

from snakegraphs.exceptions import AmbiguousCompletion, NoCompletion, NotAMatching, UnknownEdge
from snakegraphs.graph import SINGLE_EDGE, EdgeRef, EmptySnakeGraph

logger = logging.getLogger(__name__)

SW_FACES = ('S', 'W')
NE_FACES = ('N', 'E')


@dataclass(frozen=True)
class PerfectMatching:
    edges: tuple

    @classmethod
    def of(cls, edges):
        return cls(tuple(sorted(set(edges))))

    def __contains__(self, edge):
        return edge in self.edges

    def __iter__(self):
        return iter(self.edges)

    def __len__(self):
        return len(self.edges)

    def __str__(self):
        return '{' + ', '.join(str(e) for e in self.edges) + '}'


@dataclass(frozen=True)
class HeightMonomial:
    exponents: tuple

    def as_dict(self):
        return dict(self.exponents)


EDGE_MATCHING = PerfectMatching((SINGLE_EDGE,))


def _adjacency(G):
    adjacent = {v: [] for v in G.vertices}
    for edge in G.edges:
        u, v = G.vertices_of(edge)
        adjacent[u].append((edge, v))
        adjacent[v].append((edge, u))
    return adjacent


def enumerate_matchings(G):
    """All perfect matchings of G, sorted."""
    if isinstance(G, EmptySnakeGraph):
        return [EDGE_MATCHING]

    adjacent = _adjacency(G)
    order = G.vertices
    found = []

    def extend(covered, chosen):
        free = next((v for v in order if v not in covered), None)
        if free is None:
            found.append(PerfectMatching.of(chosen))
            return
        for edge, other in adjacent[free]:
            if other not in covered:
                extend(covered | {free, other}, chosen + [edge])

    extend(frozenset(), [])
    found.sort(key=lambda m: m.edges)
    logger.debug(f"{G}: {len(found)} perfect matchings")
    return found


def enumerate_union(graphs):
    return list(product(*(enumerate_matchings(G) for G in graphs)))


def is_perfect_matching(G, edges):
    if isinstance(G, EmptySnakeGraph):
        return set(edges) == {SINGLE_EDGE}
    try:
        edges = {G.canonical(e) for e in edges}
    except UnknownEdge:
        return False
    covered = Counter(v for e in edges for v in G.vertices_of(e))
    return len(covered) == len(G.vertices) and all(count == 1 for count in covered.values())


def boundary_matchings(G):
    """(P_minus, P_plus): the two matchings made of boundary edges only."""
    if isinstance(G, EmptySnakeGraph):
        return EDGE_MATCHING, EDGE_MATCHING
    minus, plus = [], []
    for edge in G.boundary_edges:
        sign = G.edge_sign(edge)
        if (edge.face in SW_FACES and sign == -1) or (edge.face in NE_FACES and sign == 1):
            minus.append(edge)
        else:
            plus.append(edge)
    return PerfectMatching.of(minus), PerfectMatching.of(plus)


def _enclosed(G, cycle_edges):
    """0/1 per tile: parity of cycle edges crossed by a ray from the tile centre to the east."""
    vertical = set()
    for edge in cycle_edges:
        (x1, y1), (x2, y2) = G.vertices_of(edge)
        if x1 == x2:
            vertical.add((x1, min(y1, y2)))
    flags = []
    for x, y in G.positions:
        crossings = sum(1 for (col, row) in vertical if row == y and col > x)
        flags.append(crossings % 2)
    return tuple(flags)


def _require_matching(G, P):
    if not is_perfect_matching(G, P.edges):
        raise NotAMatching(f"{P} is not a perfect matching of {G}")


def heights(G, P):
    """Height vector of P relative to P_minus."""
    if isinstance(G, EmptySnakeGraph):
        return ()
    _require_matching(G, P)
    minus, _ = boundary_matchings(G)
    return _enclosed(G, set(P.edges) ^ set(minus.edges))


def from_heights(G, values):
    """The perfect matching with the given heights, or None if there is none."""
    if isinstance(G, EmptySnakeGraph):
        return EDGE_MATCHING if not values else None
    if len(values) != G.d:
        return None
    edges = set(boundary_matchings(G)[0].edges)
    for j, value in enumerate(values, start=1):
        if value:
            edges ^= set(G.tile_edges(j))
    if not is_perfect_matching(G, edges):
        return None
    return PerfectMatching.of(edges)


def height_monomial(G, P, base=None):
    """Exponent of each tile label: number of cycles of base xor P enclosing that tile."""
    if isinstance(G, EmptySnakeGraph):
        return HeightMonomial(())
    base = base or boundary_matchings(G)[0]
    _require_matching(G, P)
    _require_matching(G, base)
    flags = _enclosed(G, set(P.edges) ^ set(base.edges))
    exponents = Counter()
    for label, flag in zip(G.tile_labels, flags):
        if flag:
            exponents[label] += 1
    return HeightMonomial(tuple(sorted(exponents.items())))


def weight_monomial(G, P, unit_labels=frozenset()):
    """Product of the edge labels of P; labels in ``unit_labels`` carry weight one."""
    if isinstance(G, EmptySnakeGraph):
        return () if G.label in unit_labels else ((G.label, 1),)
    _require_matching(G, P)
    weights = Counter(G.labels[e] for e in P.edges if G.labels[e] not in unit_labels)
    return tuple(sorted(weights.items()))


def complete_boundary(G, forced):
    """The boundary-only perfect matching containing every forced edge."""
    forced = {G.canonical(e if isinstance(e, EdgeRef) else EdgeRef.parse(e)) for e in forced}
    candidates = [P for P in boundary_matchings(G) if forced <= set(P.edges)]
    if not candidates:
        raise NoCompletion(f"No boundary matching of {G} contains {sorted(map(str, forced))}")
    if len(candidates) > 1:
        raise AmbiguousCompletion(f"Both boundary matchings of {G} contain {sorted(map(str, forced))}")
    return candidates[0]


def count_matchings(G):
    """
    Matching count by the sign-run recurrence: m_j = m_{j-1} + m_k with k the
    last index below j-1 whose interior edge has the opposite sign of e_{j-1}.
    """
    if isinstance(G, EmptySnakeGraph):
        return 1
    counts = [1, 2]
    for j in range(2, G.d + 1):
        target = -G.interior_sign(j - 1)
        k = next((k for k in range(j - 2, 0, -1) if G.interior_sign(k) == target), 0)
        counts.append(counts[j - 1] + counts[k])
    return counts[G.d]
