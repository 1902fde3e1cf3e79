"""
Triangulated polygons and the snake graphs of their arcs.

Vertices 1..n sit counterclockwise on a circle. A diagonal (a, b) with a < b
is labelled ``x{a}_{b}``; a boundary segment is labelled ``b{a}_{b}`` and
carries weight 1.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import networkx as nx
import numpy as np

from laurent.identities import IdentityCheck, L, check_graft_identity, check_resolution_identity, y_monomial
from laurent.polynomial import ONE, LaurentPoly
from resolutions.construction import graft, graft_coefficients, resolve, skein_tiles
from snakegraphs.exceptions import ArcInTriangulation, InvalidArc, InvalidTriangulation, NotCrossing
from snakegraphs.graph import EdgeRef, EmptySnakeGraph, build
from snakegraphs.overlap import Overlap

logger = logging.getLogger(__name__)

MIN_VERTICES = 5


@dataclass(frozen=True)
class Arc:
    """An oriented arc from vertex ``a`` to vertex ``b``."""
    a: int
    b: int

    @property
    def key(self):
        return (self.a, self.b) if self.a < self.b else (self.b, self.a)

    def reversed(self):
        return Arc(self.b, self.a)

    def __str__(self):
        return f"({self.a},{self.b})"

    @classmethod
    def parse(cls, text):
        try:
            a, b = (int(part) for part in str(text).replace('-', ',').split(','))
        except ValueError as e:
            raise InvalidArc(f"Arc must read 'a,b', got {text!r}") from e
        return cls(a, b)


def _as_arc(arc):
    return arc if isinstance(arc, Arc) else Arc(*arc)


def _on_boundary(n, a, b):
    return (b - a) % n in (1, n - 1)


@dataclass(frozen=True)
class Polygon:
    n: int

    def __post_init__(self):
        if self.n < MIN_VERTICES:
            raise InvalidTriangulation(f"Polygons need at least {MIN_VERTICES} vertices, got {self.n}")

    def is_boundary(self, a, b):
        return _on_boundary(self.n, a, b)

    def arc(self, a, b):
        if not (1 <= a <= self.n and 1 <= b <= self.n) or a == b:
            raise InvalidArc(f"({a},{b}) is not an arc of the {self.n}-gon")
        return Arc(a, b)

    @property
    def sides(self):
        return tuple(sorted(tuple(sorted((v, v % self.n + 1))) for v in range(1, self.n + 1)))

    @property
    def diagonals(self):
        return tuple((a, b) for a, b in combinations(range(1, self.n + 1), 2) if not self.is_boundary(a, b))

    @cached_property
    def boundary_labels(self):
        """Edge labels of weight one in the snake graphs of this polygon."""
        return frozenset(label(self.n, a, b) for a, b in self.sides)


def label(n, a, b):
    a, b = sorted((a, b))
    prefix = 'b' if Polygon(n).is_boundary(a, b) else 'x'
    return f"{prefix}{a}_{b}"


def arcs_cross(first, second):
    """Strict interleaving of endpoints."""
    a, b = _as_arc(first).key
    c, d = _as_arc(second).key
    return a < c < b < d or c < a < d < b


def _sides(triangle):
    u, v, w = triangle
    return {(u, v), (v, w), (u, w)}


def _third(triangle, side):
    return next(v for v in triangle if v not in side)


@dataclass(frozen=True)
class Triangulation:
    n: int
    diagonals: tuple

    @classmethod
    def of(cls, n, diagonals):
        polygon = Polygon(n)
        keys = set()
        for diagonal in diagonals:
            a, b = _as_arc(diagonal).key
            if not (1 <= a < b <= n) or polygon.is_boundary(a, b):
                raise InvalidTriangulation(f"({a},{b}) is not a diagonal of the {n}-gon")
            keys.add((a, b))
        if len(keys) != n - 3:
            raise InvalidTriangulation(f"A triangulation of the {n}-gon has {n - 3} diagonals, got {len(keys)}")
        for p, q in combinations(sorted(keys), 2):
            if arcs_cross(p, q):
                raise InvalidTriangulation(f"Diagonals {p} and {q} cross")
        return cls(n, tuple(sorted(keys)))

    @classmethod
    def parse(cls, n, text):
        """'1-3,1-4' or '1,3;1,4'."""
        text = str(text).strip()
        if ';' in text:
            pieces = text.split(';')
        elif '-' in text:
            pieces = text.split(',')
        else:
            pieces = [text] if text else []
        return cls.of(n, [Arc.parse(piece) for piece in pieces if piece.strip()])

    def __contains__(self, arc):
        return _as_arc(arc).key in self.diagonals

    def __str__(self):
        return '{' + ', '.join(f"({a},{b})" for a, b in self.diagonals) + '}'

    @cached_property
    def polygon(self):
        return Polygon(self.n)

    @cached_property
    def edges(self):
        return set(self.diagonals) | set(self.polygon.sides)

    @cached_property
    def triangles(self):
        return tuple(t for t in combinations(range(1, self.n + 1), 3) if _sides(t) <= self.edges)

    @cached_property
    def dual_tree(self):
        tree = nx.Graph()
        tree.add_nodes_from(self.triangles)
        for first, second in combinations(self.triangles, 2):
            shared = _sides(first) & _sides(second)
            if shared:
                tree.add_edge(first, second, diagonal=shared.pop())
        return tree

    @cached_property
    def coloring(self):
        """+1 / -1 by parity of dual-tree distance from the triangle on side (1, 2)."""
        root = next(t for t in self.triangles if (1, 2) in _sides(t))
        distances = nx.single_source_shortest_path_length(self.dual_tree, root)
        return {t: 1 if distances[t] % 2 == 0 else -1 for t in self.triangles}

    def triangles_on(self, diagonal):
        return tuple(t for t in self.triangles if diagonal in _sides(t))

    def label(self, a, b):
        return label(self.n, a, b)


def b_matrix(T):
    """Exchange matrix indexed by T.diagonals, summed over triangles."""
    index = {diagonal: i for i, diagonal in enumerate(T.diagonals)}
    B = np.zeros((len(index), len(index)), dtype=int)
    for u, v, w in T.triangles:
        for i, j in (((u, w), (v, w)), ((v, w), (u, v)), ((u, v), (u, w))):
            if i in index and j in index:
                B[index[i], index[j]] += 1
                B[index[j], index[i]] -= 1
    return B


def crossing_sequence(T, gamma):
    """Diagonals of T crossed by gamma, in order from gamma.a."""
    gamma = _as_arc(gamma)
    if gamma.key in T.diagonals:
        raise ArcInTriangulation(f"{gamma} belongs to the triangulation")
    a, b = gamma.key
    crossed = [d for d in T.diagonals if arcs_cross(d, gamma)]

    def distance(diagonal):
        p = next(v for v in diagonal if a < v < b)
        q = next(v for v in diagonal if v != p)
        return (p - a) % T.n + (a - q) % T.n

    ordered = sorted(crossed, key=distance)
    return ordered if gamma.a == a else ordered[::-1]


def arc_triangles(T, gamma):
    """Triangles gamma passes through, from the one at gamma.a to the one at gamma.b."""
    gamma = _as_arc(gamma)
    sequence = crossing_sequence(T, gamma)
    if not sequence:
        return ()
    first = next(t for t in T.triangles_on(sequence[0]) if gamma.a in t)
    middle = [next(t for t in T.triangles_on(sequence[j]) if sequence[j + 1] in _sides(t))
              for j in range(len(sequence) - 1)]
    last = next(t for t in T.triangles_on(sequence[-1]) if gamma.b in t)
    return (first, *middle, last)


def snake_graph(T, gamma):
    """The labeled snake graph of gamma; a single edge when gamma is in T or on the boundary."""
    gamma = _as_arc(gamma)
    n = T.n
    if gamma.key in T.diagonals or T.polygon.is_boundary(*gamma.key):
        return EmptySnakeGraph(label(n, *gamma.key))

    sequence = crossing_sequence(T, gamma)
    triangles = arc_triangles(T, gamma)

    def ccw(u, v, w):
        return (v - u) % n < (w - u) % n

    sw = gamma.a
    p, q = sequence[0]
    se, nw = (p, q) if ccw(sw, p, q) == (T.coloring[triangles[0]] == 1) else (q, p)
    steps, edge_labels = [], {}
    for j, diagonal in enumerate(sequence, start=1):
        ne = _third(triangles[j], diagonal)
        for face, (u, v) in (('S', (sw, se)), ('W', (sw, nw)), ('N', (nw, ne)), ('E', (se, ne))):
            edge_labels[EdgeRef(j, face)] = label(n, u, v)
        if j == len(sequence):
            break
        following = set(sequence[j])
        if following == {se, ne}:
            steps.append('N')
            sw, se, nw = nw, ne, se
        elif following == {nw, ne}:
            steps.append('E')
            sw, se, nw = se, nw, ne
        else:
            raise InvalidTriangulation(f"{sequence[j]} does not follow {diagonal} along {gamma}")

    G = build(''.join(steps), [label(n, *d) for d in sequence], edge_labels,
              orientation=-T.coloring[triangles[0]])
    logger.debug(f"Snake graph of {gamma} in {T}: {G.steps or '-'}")
    return G


def local_overlap(T, gamma1, gamma2):
    """
    (gamma2 oriented along gamma1, Overlap) for the common crossed diagonals,
    or (gamma2, None) when the arcs cross no common diagonal.
    """
    gamma1, gamma2 = _as_arc(gamma1), _as_arc(gamma2)
    first = crossing_sequence(T, gamma1)
    common = [d for d in first if d in crossing_sequence(T, gamma2)]
    if not common:
        return gamma2, None
    s = first.index(common[0]) + 1
    before = arc_triangles(T, gamma1)[s - 1]
    second = crossing_sequence(T, gamma2)
    if arc_triangles(T, gamma2)[second.index(common[0])] != before:
        gamma2 = gamma2.reversed()
        second = crossing_sequence(T, gamma2)
    s_prime = second.index(common[0]) + 1
    length = len(common)
    return gamma2, Overlap(s, s + length - 1, s_prime, s_prime + length - 1)


def smooth(gamma1, gamma2, n):
    """
    ((gamma3, gamma4), (gamma5, gamma6)) for oriented crossing arcs
    gamma1 = a1 -> b1 and gamma2 = a2 -> b2 of the n-gon.
    """
    gamma1, gamma2 = _as_arc(gamma1), _as_arc(gamma2)
    for gamma in (gamma1, gamma2):
        if not (1 <= gamma.a <= n and 1 <= gamma.b <= n) or gamma.a == gamma.b:
            raise InvalidArc(f"{gamma} is not an arc of the {n}-gon")
        if _on_boundary(n, gamma.a, gamma.b):
            raise InvalidArc(f"{gamma} is a boundary segment of the {n}-gon")
    if not arcs_cross(gamma1, gamma2):
        raise NotCrossing(f"{gamma1} and {gamma2} do not cross")
    a1, b1, a2, b2 = gamma1.a, gamma1.b, gamma2.a, gamma2.b
    pair34, pair56 = (Arc(a1, b2), Arc(a2, b1)), (Arc(a1, a2), Arc(b2, b1))
    if all(_on_boundary(n, arc.a, arc.b) for arc in pair34 + pair56):
        raise InvalidArc(f"Every smoothing of {gamma1} and {gamma2} is a boundary segment of the {n}-gon")
    return pair34, pair56


@dataclass(frozen=True)
class ArcCrossing:
    gamma1: Arc
    gamma2: Arc
    overlap: Overlap
    graft_site: int
    construction: object
    arcs34: tuple
    arcs56: tuple

    @property
    def is_grafting(self):
        return self.overlap is None


def resolve_crossing(T, gamma1, gamma2):
    """Orient two crossing arcs and build the resolution or grafting of their snake graphs."""
    gamma1, gamma2 = _as_arc(gamma1), _as_arc(gamma2)
    if not arcs_cross(gamma1, gamma2):
        raise NotCrossing(f"{gamma1} and {gamma2} do not cross")
    for gamma in (gamma1, gamma2):
        if gamma.key in T.diagonals:
            raise ArcInTriangulation(f"{gamma} belongs to the triangulation")

    gamma2, overlap = local_overlap(T, gamma1, gamma2)
    if overlap is not None:
        construction = resolve(snake_graph(T, gamma1), snake_graph(T, gamma2), overlap)
        arcs34, arcs56 = smooth(gamma1, gamma2, T.n)
        return ArcCrossing(gamma1, gamma2, overlap, None, construction, arcs34, arcs56)

    triangles1, triangles2 = arc_triangles(T, gamma1), arc_triangles(T, gamma2)
    common = [t for t in triangles1 if t in triangles2]
    if len(common) != 1:
        raise InvalidTriangulation(f"{gamma1} and {gamma2} share {len(common)} triangles and no diagonal")
    meeting = common[0]
    if meeting not in (triangles2[0], triangles2[-1]):
        gamma1, gamma2 = gamma2, gamma1
        triangles1, triangles2 = triangles2, triangles1
    if triangles2[0] != meeting:
        gamma2 = gamma2.reversed()
    s = triangles1.index(meeting)
    if s == 0:
        gamma1 = gamma1.reversed()
        s = len(triangles1) - 1

    arcs34, arcs56 = smooth(gamma1, gamma2, T.n)
    G1 = snake_graph(T, gamma1)
    choice = snake_graph(T, arcs34[0]).steps[s - 1] if s == G1.d else None
    construction = graft(G1, snake_graph(T, gamma2), s, choice)
    return ArcCrossing(gamma1, gamma2, None, s, construction, arcs34, arcs56)


def crossing_identity(T, crossing):
    """The Laurent identity of the resolution or grafting behind ``crossing``."""
    units = T.polygon.boundary_labels
    if crossing.is_grafting:
        return check_graft_identity(crossing.construction, unit_labels=units)
    return check_resolution_identity(crossing.construction, unit_labels=units)


def skein_relation(T, gamma1, gamma2):
    """x1 * x2 against y34 * x3 * x4 + y56 * x5 * x6 for two crossing arcs."""
    crossing = resolve_crossing(T, gamma1, gamma2)
    if crossing.is_grafting:
        tiles34, tiles56 = graft_coefficients(crossing.construction)
    else:
        tiles34, tiles56 = (), skein_tiles(crossing.construction)

    def product(arcs):
        return cluster_variable(T, arcs[0]) * cluster_variable(T, arcs[1])

    lhs = product((crossing.gamma1, crossing.gamma2))
    rhs = y_monomial(tiles34) * product(crossing.arcs34) + y_monomial(tiles56) * product(crossing.arcs56)
    return IdentityCheck(lhs, rhs)


def crossing_monomial(T, gamma):
    gamma = _as_arc(gamma)
    if gamma.key in T.diagonals or T.polygon.is_boundary(*gamma.key):
        return ONE
    return LaurentPoly.product_of(label(T.n, *d) for d in crossing_sequence(T, gamma))


def cluster_variable(T, gamma):
    """x_gamma expanded in the principal-coefficient seed of T."""
    gamma = _as_arc(gamma)
    if T.polygon.is_boundary(*gamma.key):
        return ONE
    if gamma.key in T.diagonals:
        return LaurentPoly.variable(label(T.n, *gamma.key))
    return L(snake_graph(T, gamma), unit_labels=T.polygon.boundary_labels)


def f_polynomial(T, gamma):
    """The y-polynomial left after setting every x-variable to 1."""
    numerator = cluster_variable(T, gamma) * crossing_monomial(T, gamma)
    return numerator.specialize([var for var in numerator.variables if var.startswith('x')])


@dataclass(frozen=True)
class Fan:
    vertex: int
    start: int
    end: int


def fans(T, gamma):
    """Maximal runs of consecutively crossed diagonals through one vertex, as 1-based tile ranges."""
    sequence = crossing_sequence(T, gamma)
    if not sequence:
        return []
    found, i = [], 1
    while True:
        shared = set(sequence[i - 1])
        j = i
        while j < len(sequence) and shared & set(sequence[j]):
            shared &= set(sequence[j])
            j += 1
        found.append(Fan(min(shared), i, j))
        if j >= len(sequence):
            return found
        i = j


def crosses_initial_segment_geometric(T, gamma1, gamma2):
    """
    Whether gamma1 crosses gamma2 between gamma2.a and the first diagonal k
    gamma2 crosses: gamma1 passes through the triangle gamma2 starts in and
    crosses a side of it at gamma2.a first or last, or crosses both of them.
    """
    gamma1, gamma2 = _as_arc(gamma1), _as_arc(gamma2)
    if gamma1.key in T.diagonals or gamma2.key in T.diagonals or not arcs_cross(gamma1, gamma2):
        return False
    start = arc_triangles(T, gamma2)[0]
    if start not in arc_triangles(T, gamma1):
        return False
    k = crossing_sequence(T, gamma2)[0]
    sides = _sides(start) - {k}
    crossed = crossing_sequence(T, gamma1)
    if crossed[0] in sides or crossed[-1] in sides:
        return True
    return sides <= set(crossed)
