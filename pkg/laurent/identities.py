"""
Laurent polynomials of snake graphs and the resolution and grafting identities.

``L(G) = (1 / x(G)) * sum over P of x(P) y(P)`` where x(G) multiplies the tile
variables and y(P) is the height monomial of P relative to the minimal
matching. Labels are used as variable names; the y-variable of a tile
labelled ``x1_3`` is ``y1_3``. Edge labels listed in ``unit_labels`` (the
boundary segments of a polygon) carry weight one.
"""
import logging
from dataclasses import dataclass

from matchings.perfect import enumerate_matchings, height_monomial, weight_monomial
from resolutions.construction import graft_coefficients, skein_tiles
from snakegraphs.exceptions import ReservedLabel, UnlabeledGraph
from snakegraphs.graph import COEFFICIENT_PREFIX, EmptySnakeGraph, SnakeGraph

from .polynomial import ONE, LaurentPoly

logger = logging.getLogger(__name__)


def y_variable(label):
    return COEFFICIENT_PREFIX + (label[1:] if label.startswith('x') else label)


def y_monomial(labels):
    return LaurentPoly.product_of(y_variable(label) for label in labels)


def crossing_monomial(G):
    if isinstance(G, EmptySnakeGraph):
        return ONE
    return LaurentPoly.product_of(G.tile_labels)


def weight(G, P, unit_labels=frozenset()):
    x_part = LaurentPoly.monomial(dict(weight_monomial(G, P, unit_labels)))
    if isinstance(G, EmptySnakeGraph):
        return x_part
    heights = height_monomial(G, P).as_dict()
    y_part = LaurentPoly.monomial({y_variable(label): exp for label, exp in heights.items()})
    return x_part * y_part


def _require_labels(G):
    if G.auto_labeled:
        raise UnlabeledGraph(f"{G} carries generated labels; supply tile and edge labels")


def _require_distinct_coefficients(graphs):
    owners = {}
    for G in graphs:
        for label in G.tile_labels:
            other = owners.setdefault(y_variable(label), label)
            if other != label:
                raise ReservedLabel(f"Tiles {other!r} and {label!r} would share the variable {y_variable(label)!r}")


def laurent_of_graph(G, allow_generated=False, unit_labels=frozenset()):
    if isinstance(G, EmptySnakeGraph):
        return ONE if G.label in unit_labels else LaurentPoly.variable(G.label)
    if not allow_generated:
        _require_labels(G)
    _require_distinct_coefficients((G,))
    numerator = LaurentPoly()
    for P in enumerate_matchings(G):
        numerator = numerator + weight(G, P, unit_labels)
    return numerator.div_exact(crossing_monomial(G))


def L(graphs, allow_generated=False, unit_labels=frozenset()):
    """L of a graph or of a disjoint union given as an iterable of graphs."""
    if isinstance(graphs, (SnakeGraph, EmptySnakeGraph)):
        graphs = (graphs,)
    graphs = tuple(graphs)
    _require_distinct_coefficients(graphs)
    result = ONE
    for G in graphs:
        result = result * laurent_of_graph(G, allow_generated, unit_labels)
    return result


@dataclass(frozen=True)
class IdentityCheck:
    lhs: LaurentPoly
    rhs: LaurentPoly

    @property
    def ok(self):
        return self.lhs == self.rhs

    def __bool__(self):
        return self.ok

    def as_dict(self):
        return {'ok': self.ok, 'lhs': str(self.lhs), 'rhs': str(self.rhs), 'difference': str(self.lhs - self.rhs)}


def _second_graph(G2, seed):
    return G2 if isinstance(G2, EmptySnakeGraph) or G2.orientation == seed else G2.with_orientation(seed)


def check_resolution_identity(res, coefficient=None, allow_generated=False, unit_labels=frozenset()):
    """
    L(G1 u G2) = L(G3 u G4) + y * L(G5 u G6), with y the skein coefficient
    unless ``coefficient`` (tile labels) overrides it.
    """
    def value(graphs):
        return L(graphs, allow_generated, unit_labels)

    if not res.crossing:
        return IdentityCheck(value((res.g1, res.g2)), value(res.pair34))
    lhs = value((res.g1, _second_graph(res.g2, res.seed2)))
    labels = skein_tiles(res) if coefficient is None else tuple(coefficient)
    check = IdentityCheck(lhs, value(res.pair34) + y_monomial(labels) * value(res.pair56))
    if not check.ok:
        logger.warning(f"Resolution identity fails for overlap {res.overlap}")
    return check


def check_graft_identity(graft, coefficients=None, allow_generated=False, unit_labels=frozenset()):
    """L(G1 u G2) = y34 * L(G3 u G4) + y56 * L(G5 u G6)."""
    def value(graphs):
        return L(graphs, allow_generated, unit_labels)

    tiles34, tiles56 = graft_coefficients(graft) if coefficients is None else coefficients
    lhs = value((graft.g1, _second_graph(graft.g2, graft.seed2)))
    check = IdentityCheck(lhs, y_monomial(tiles34) * value(graft.pair34) + y_monomial(tiles56) * value(graft.pair56))
    if not check.ok:
        logger.warning(f"Grafting identity fails at s={graft.s}")
    return check
