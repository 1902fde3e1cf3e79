"""
Cluster variables by mutation, independent of snake graphs.

A seed starts from the principal-coefficient seed of a triangulation and is
mutated along a path of flips; coefficients live in the tropical semifield
as integer exponent vectors.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx
import numpy as np

from laurent.identities import y_variable
from laurent.polynomial import LaurentPoly
from snakegraphs.exceptions import InvalidArc, InvalidTriangulation, NoPath

from .polygon import Polygon, Triangulation, _as_arc, b_matrix, label

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TropElement:
    exponents: tuple

    def __mul__(self, other):
        return TropElement(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k):
        return TropElement(tuple(k * a for a in self.exponents))

    def inverse(self):
        return self ** -1

    def is_one(self):
        return not any(self.exponents)

    def positive_part(self):
        return TropElement(tuple(max(a, 0) for a in self.exponents))

    def negative_part(self):
        return TropElement(tuple(max(-a, 0) for a in self.exponents))

    def as_laurent(self, names):
        return LaurentPoly.monomial(dict(zip(names, self.exponents)))


def trop_add(a, b):
    return TropElement(tuple(min(x, y) for x, y in zip(a.exponents, b.exponents)))


@dataclass(frozen=True, eq=False)
class Seed:
    cluster: tuple
    coeffs: tuple
    B: np.ndarray
    y_names: tuple
    # diagonal at each position when the seed comes from a triangulation
    arcs: tuple = ()

    def __eq__(self, other):
        return (isinstance(other, Seed) and self.cluster == other.cluster and self.coeffs == other.coeffs
                and np.array_equal(self.B, other.B) and self.y_names == other.y_names)

    __hash__ = None

    @property
    def rank(self):
        return len(self.cluster)


def principal_seed(T):
    labels = [label(T.n, *d) for d in T.diagonals]
    size = len(labels)
    return Seed(
        cluster=tuple(LaurentPoly.variable(name) for name in labels),
        coeffs=tuple(TropElement(tuple(int(i == j) for j in range(size))) for i in range(size)),
        B=b_matrix(T),
        y_names=tuple(y_variable(name) for name in labels),
        arcs=T.diagonals,
    )


def mutate_matrix(B, k):
    positive, negative = np.maximum(B, 0), np.maximum(-B, 0)
    mutated = B + np.outer(positive[:, k], positive[k, :]) - np.outer(negative[:, k], negative[k, :])
    mutated[k, :] = -B[k, :]
    mutated[:, k] = -B[:, k]
    return mutated


def mutate(seed, k, new_arc=None):
    """Mutation in direction k (1-based)."""
    if not 1 <= k <= seed.rank:
        raise IndexError(f"Direction {k} outside 1..{seed.rank}")
    i = k - 1
    B = seed.B
    y_k = seed.coeffs[i]

    coeffs = []
    for j, y_j in enumerate(seed.coeffs):
        if j == i:
            coeffs.append(y_k.inverse())
            continue
        b = int(B[i, j])
        # y_j * y_k^[b]+ * (y_k (+) 1)^(-b)
        coeffs.append(y_j * y_k ** max(b, 0) * trop_add(y_k, TropElement((0,) * len(y_k.exponents))) ** -b)

    up = _cluster_product(seed.cluster, [max(int(B[j, i]), 0) for j in range(seed.rank)])
    down = _cluster_product(seed.cluster, [max(-int(B[j, i]), 0) for j in range(seed.rank)])
    exchange = (y_k.positive_part().as_laurent(seed.y_names) * up
                + y_k.negative_part().as_laurent(seed.y_names) * down)
    cluster = list(seed.cluster)
    cluster[i] = exchange.div_exact(seed.cluster[i])

    arcs = list(seed.arcs)
    if arcs and new_arc is not None:
        arcs[i] = new_arc
    return Seed(tuple(cluster), tuple(coeffs), mutate_matrix(B, i), seed.y_names, tuple(arcs))


def _cluster_product(cluster, exponents):
    result = LaurentPoly.constant(1)
    for x, exponent in zip(cluster, exponents):
        result = result * x ** exponent
    return result


def flip(T, tau):
    """Replace tau by the other diagonal of the quadrilateral around it."""
    key = _as_arc(tau).key
    if key not in T.diagonals:
        raise InvalidArc(f"{key} is not in {T}")
    first, second = T.triangles_on(key)
    u = next(v for v in first if v not in key)
    w = next(v for v in second if v not in key)
    replacement = tuple(sorted((u, w)))
    return Triangulation.of(T.n, [d for d in T.diagonals if d != key] + [replacement]), replacement


def _triangulate(vertices):
    if len(vertices) < 3:
        return [frozenset()]
    first, last = vertices[0], vertices[-1]
    found = []
    for i in range(1, len(vertices) - 1):
        apex = vertices[i]
        chords = set()
        if i > 1:
            chords.add((first, apex))
        if i < len(vertices) - 2:
            chords.add((apex, last))
        for left in _triangulate(vertices[:i + 1]):
            for right in _triangulate(vertices[i:]):
                found.append(left | right | chords)
    return found


@lru_cache(maxsize=None)
def all_triangulations(n):
    Polygon(n)
    found = {frozenset(t) for t in _triangulate(tuple(range(1, n + 1)))}
    return tuple(sorted((Triangulation.of(n, diagonals) for diagonals in found), key=lambda T: T.diagonals))


@lru_cache(maxsize=None)
def flip_graph(n):
    graph = nx.Graph()
    for T in all_triangulations(n):
        graph.add_node(T)
        for tau in T.diagonals:
            flipped, _ = flip(T, tau)
            graph.add_edge(T, flipped)
    logger.info(f"Flip graph of the {n}-gon: {graph.number_of_nodes()} triangulations")
    return graph


def flip_path(T, gamma, farthest=False):
    """
    Diagonals to flip, in order, so that gamma appears. The target is the
    nearest triangulation containing gamma, or the farthest one when
    ``farthest`` is set.
    """
    gamma = _as_arc(gamma)
    graph = flip_graph(T.n)
    distances = nx.single_source_shortest_path_length(graph, T)
    targets = sorted((distance, target.diagonals) for target, distance in distances.items() if gamma in target)
    if not targets:
        raise NoPath(f"No triangulation of the {T.n}-gon reachable from {T} contains {gamma}")
    target = Triangulation(T.n, targets[-1 if farthest else 0][1])
    route = nx.shortest_path(graph, T, target)
    return [next(d for d in a.diagonals if d not in b.diagonals) for a, b in zip(route, route[1:])]


def oracle_cluster_variable(T, gamma, path=None):
    """x_gamma by mutating the principal seed of T along a flip path."""
    gamma = _as_arc(gamma)
    polygon = Polygon(T.n)
    if polygon.is_boundary(*gamma.key):
        return LaurentPoly.constant(1)
    seed, current = principal_seed(T), T
    for tau in flip_path(T, gamma) if path is None else path:
        tau = _as_arc(tau).key
        if tau not in seed.arcs:
            raise InvalidTriangulation(f"{tau} is not in the current triangulation {current}")
        current, replacement = flip(current, tau)
        seed = mutate(seed, seed.arcs.index(tau) + 1, replacement)
    if gamma.key not in seed.arcs:
        raise NoPath(f"Flip path does not reach {gamma}")
    return seed.cluster[seed.arcs.index(gamma.key)]
