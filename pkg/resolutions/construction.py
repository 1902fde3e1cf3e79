"""
Resolutions of crossing overlaps and resolutions of graftings.

Output graphs are glued from pieces of G1 and G2. Each piece carries the
tile signs it inherits (G1 tiles from G1's sign function, G2 tiles from the
sign function induced through the overlap, reflected tiles negated), and a
glued graph is only accepted when those signs alternate.
"""
import logging
from dataclasses import dataclass, field

from django.conf import settings

from snakegraphs.exceptions import BadEdgeChoice, BadGraftSite, MalformedGlue, NotCrossing
from snakegraphs.graph import (
    SWAP_STEP,
    EdgeRef,
    EmptySnakeGraph,
    assemble,
    reflect,
    reflect_steps,
    to_dict,
)
from snakegraphs.overlap import crosses, induced_seed, validate_overlap

logger = logging.getLogger(__name__)

PRINTED = 'printed'
PROOF = 'proof'


@dataclass(frozen=True)
class Segment:
    """Tiles start..end of input graph ``source`` (1 or 2), possibly reflected."""
    source: int
    start: int
    end: int
    reflected: bool = False

    def tiles(self):
        order = range(self.start, self.end + 1)
        return tuple(reversed(order)) if self.reflected else tuple(order)


@dataclass
class _Piece:
    records: list = field(default_factory=list)
    steps: str = ''
    signs: list = field(default_factory=list)
    segments: list = field(default_factory=list)


def _piece(G, source, i, j, seed):
    if i > j:
        return _Piece()
    return _Piece(
        records=[G.tile_record(k) for k in range(i, j + 1)],
        steps=G.steps[i - 1:j - 1],
        signs=[G.tile_sign(k, seed) for k in range(i, j + 1)],
        segments=[Segment(source, i, j)],
    )


def _reversed(piece):
    return _Piece(
        records=[r.reflected() for r in reversed(piece.records)],
        steps=reflect_steps(piece.steps),
        signs=[-sign for sign in reversed(piece.signs)],
        segments=[Segment(s.source, s.start, s.end, not s.reflected) for s in reversed(piece.segments)],
    )


def _join(first, step, second):
    if not first.records:
        return second
    if not second.records:
        return first
    return _Piece(
        records=first.records + second.records,
        steps=first.steps + step + second.steps,
        signs=first.signs + second.signs,
        segments=first.segments + second.segments,
    )


def _finish(piece, auto_labeled):
    if any(a != -b for a, b in zip(piece.signs, piece.signs[1:])):
        raise MalformedGlue(f"Glued pieces {piece.segments} do not alternate signs: {piece.signs}")
    return assemble(piece.steps, piece.records, piece.signs[0], auto_labeled)


def _edge(G, tile, faces, wanted_sign, seed):
    for face in faces:
        edge = EdgeRef(tile, face)
        if G.edge_sign(edge, seed) == wanted_sign:
            return EmptySnakeGraph(G.label_of(edge), source=G.canonical(edge))
    raise MalformedGlue(f"No edge of tile {tile} among {faces} has sign {wanted_sign}")


def current_convention():
    return getattr(settings, 'SNAKECALC', {}).get('SIGN_CONVENTION', PRINTED)


@dataclass(frozen=True)
class Resolution:
    g1: object
    g2: object
    overlap: object
    crossing: bool
    pair34: tuple
    pair56: tuple = ()
    parts5: tuple = ()
    parts6: tuple = ()
    # tiles outside the overlap that belong to neither G5 nor G6
    forced1: tuple = ()
    forced2: tuple = ()
    seed1: int = -1
    seed2: int = -1
    convention: str = PRINTED


def resolve(G1, G2, ov, convention=None, strict=False):
    """Res_G(G1, G2); G1 and G2 unchanged when they do not cross in ``ov``."""
    validate_overlap(G1, G2, ov)
    convention = convention or current_convention()
    seed1 = G1.orientation
    if not crosses(G1, G2, ov, seed1):
        if strict:
            raise NotCrossing(f"{G1} and {G2} do not cross in overlap {ov}")
        logger.debug(f"No crossing in {ov}; resolution is the input pair")
        return Resolution(G1, G2, ov, False, (G1, G2), seed1=seed1, convention=convention)

    seed2 = induced_seed(G1, ov, seed1)
    s, t, sp, tp = ov.s, ov.t, ov.s_prime, ov.t_prime
    d, dp = G1.d, G2.d
    auto = G1.auto_labeled or G2.auto_labeled

    def f1(j):
        return G1.interior_sign(j, seed1)

    def f2(j):
        return G2.interior_sign(j, seed2)

    if convention == PROOF:
        def same(a, b):
            return a == -b
    else:
        def same(a, b):
            return a == b

    forced1, forced2 = [], []

    g3 = _piece(G1, 1, 1, t, seed1)
    if tp < dp:
        g3 = _join(g3, G2.step(tp), _piece(G2, 2, tp + 1, dp, seed2))
    g4 = _piece(G2, 2, 1, tp, seed2)
    if t < d:
        g4 = _join(g4, G1.step(t), _piece(G1, 1, t + 1, d, seed1))

    if s > 1 and sp > 1:
        g5 = _join(_piece(G1, 1, 1, s - 1, seed1), SWAP_STEP[G1.step(s - 1)],
                   _reversed(_piece(G2, 2, 1, sp - 1, seed2)))
    elif sp == 1:
        k = next((k for k in range(s - 2, 0, -1) if same(f1(k), f1(s - 1))), 0)
        g5 = _piece(G1, 1, 1, k, seed1) if k else _edge(G1, 1, ('S', 'W'), f1(s - 1) if convention != PROOF else -f1(s - 1), seed1)
        forced1.extend(range(k + 1, s))
    else:
        k = next((k for k in range(sp - 2, 0, -1) if same(f2(k), f2(sp - 1))), 0)
        g5 = _reversed(_piece(G2, 2, 1, k, seed2)) if k else _edge(G2, 1, ('S', 'W'), f2(sp - 1) if convention != PROOF else -f2(sp - 1), seed2)
        forced2.extend(range(k + 1, sp))

    if t < d and tp < dp:
        g6 = _join(_reversed(_piece(G2, 2, tp + 1, dp, seed2)), SWAP_STEP[G1.step(t)],
                   _piece(G1, 1, t + 1, d, seed1))
    elif t == d:
        k = next((k for k in range(tp + 2, dp + 1) if same(f2(tp), f2(k - 1))), dp + 1)
        g6 = _reversed(_piece(G2, 2, k, dp, seed2)) if k <= dp else _edge(G2, dp, ('N', 'E'), f2(tp) if convention != PROOF else -f2(tp), seed2)
        forced2.extend(range(tp + 1, k))
    else:
        k = next((k for k in range(t + 2, d + 1) if same(f1(t), f1(k - 1))), d + 1)
        g6 = _piece(G1, 1, k, d, seed1) if k <= d else _edge(G1, d, ('N', 'E'), f1(t) if convention != PROOF else -f1(t), seed1)
        forced1.extend(range(t + 1, k))

    def finish(part):
        return part if isinstance(part, EmptySnakeGraph) else _finish(part, auto)

    def parts(part):
        return () if isinstance(part, EmptySnakeGraph) else tuple(part.segments)

    resolution = Resolution(
        G1, G2, ov, True,
        pair34=(finish(g3), finish(g4)),
        pair56=(finish(g5), finish(g6)),
        parts5=parts(g5),
        parts6=parts(g6),
        forced1=tuple(sorted(forced1)),
        forced2=tuple(sorted(forced2)),
        seed1=seed1,
        seed2=seed2,
        convention=convention,
    )
    logger.debug(f"Resolved {G1} x {G2} at {ov}: {[str(g) for g in resolution.pair34 + resolution.pair56]}")
    return resolution


def closure_of_overlap(G1, G2, res):
    """Tile labels of G1 u G2 (glued along the overlap) outside G5 u G6."""
    if not res.crossing:
        return ()
    ov = res.overlap
    labels = list(G1.tile_labels[ov.s - 1:ov.t])
    labels.extend(G1.tile_labels[k - 1] for k in res.forced1)
    labels.extend(G2.tile_labels[k - 1] for k in res.forced2)
    return tuple(sorted(labels))


def overlap_height(res):
    """Height of G1's overlap in every preimage of the second pair."""
    G1, G2, ov = res.g1, res.g2, res.overlap
    if ov.s > 1:
        return int(G1.interior_sign(ov.s - 1, res.seed1) == 1)
    if ov.t < G1.d:
        return int(G1.interior_sign(ov.t, res.seed1) == -1)
    if ov.s_prime > 1:
        return 1 - int(G2.interior_sign(ov.s_prime - 1, res.seed2) == 1)
    return 1 - int(G2.interior_sign(ov.t_prime, res.seed2) == -1)


def skein_tiles(res):
    """Tile labels whose y-variables form the coefficient of the second pair."""
    if not res.crossing:
        return ()
    G1, G2, ov = res.g1, res.g2, res.overlap
    labels = list(G1.tile_labels[ov.s - 1:ov.t])
    if overlap_height(res):
        labels.extend(G1.tile_labels[k - 1] for k in res.forced1)
    else:
        labels.extend(G2.tile_labels[k - 1] for k in res.forced2)
    return tuple(sorted(labels))


@dataclass(frozen=True)
class Grafting:
    g1: object
    g2: object
    s: int
    delta3: EdgeRef
    pair34: tuple
    pair56: tuple
    case: int
    k4: int = None
    k5: int = 0
    k6: int = None
    parts6: tuple = ()
    seed1: int = -1
    seed2: int = 1
    # sign of the grafting edge under G1's sign function
    delta3_sign: int = 1
    # G1 was reflected because the graft site was 0
    reflected: bool = False


def _normalize_choice(choice):
    if choice is None:
        return None
    choice = str(choice).strip().upper()
    return {'NORTH': 'N', 'EAST': 'E'}.get(choice, choice)


def graft(G1, G2, s, delta3_choice=None):
    """Graft_{s, delta3}(G1, G2)."""
    choice = _normalize_choice(delta3_choice)
    if not 0 <= s <= G1.d:
        raise BadGraftSite(f"Graft site {s} outside 0..{G1.d}")
    reflected = s == 0
    if reflected:
        G1 = reflect(G1)
        s = G1.d
    d, dp = G1.d, G2.d
    seed1 = G1.orientation
    seed2 = -G1.tile_sign(s, seed1)
    auto = G1.auto_labeled or G2.auto_labeled

    def f1(j):
        return G1.interior_sign(j, seed1)

    def f2(j):
        return G2.interior_sign(j, seed2)

    if s < d:
        step = G1.step(s)
        face = SWAP_STEP[step]
        if choice is not None and choice != face:
            raise BadEdgeChoice(f"At s={s} the grafting edge is forced to be the {face} side")
        fs = f1(s)
        g3 = _join(_piece(G1, 1, 1, s, seed1), face, _piece(G2, 2, 1, dp, seed2))
        k4 = next((k for k in range(s + 2, d + 1) if fs == -f1(k - 1)), d + 1)
        g4 = _piece(G1, 1, k4, d, seed1) if k4 <= d else _edge(G1, d, ('N', 'E'), -fs, seed1)
        k5 = next((k for k in range(s - 1, 0, -1) if f1(k) == -fs), 0)
        g5 = _piece(G1, 1, 1, k5, seed1) if k5 else _edge(G1, 1, ('S', 'W'), -fs, seed1)
        g6 = _join(_reversed(_piece(G2, 2, 1, dp, seed2)), face, _piece(G1, 1, s + 1, d, seed1))
        k6 = None
        case = 1
    else:
        if choice not in ('N', 'E'):
            raise BadEdgeChoice(f"At s=d the grafting edge must be north or east, got {delta3_choice!r}")
        face = choice
        fd = G1.edge_sign(EdgeRef(d, face), seed1)
        g3 = _join(_piece(G1, 1, 1, d, seed1), face, _piece(G2, 2, 1, dp, seed2))
        g4 = EmptySnakeGraph(G1.label_of(EdgeRef(d, face)), source=EdgeRef(d, face))
        k4 = None
        k5 = next((k for k in range(d - 1, 0, -1) if f1(k) == fd), 0)
        g5 = _piece(G1, 1, 1, k5, seed1) if k5 else _edge(G1, 1, ('S', 'W'), fd, seed1)
        k6 = next((k for k in range(2, dp + 1) if f2(k - 1) == fd), dp + 1)
        g6 = _reversed(_piece(G2, 2, k6, dp, seed2)) if k6 <= dp else _edge(G2, dp, ('N', 'E'), fd, seed2)
        case = 2

    def finish(part):
        return part if isinstance(part, EmptySnakeGraph) else _finish(part, auto)

    delta3 = EdgeRef(s, face)
    result = Grafting(
        G1, G2, s, delta3,
        pair34=(finish(g3), finish(g4)),
        pair56=(finish(g5), finish(g6)),
        case=case,
        k4=k4,
        k5=k5,
        k6=k6,
        parts6=() if isinstance(g6, EmptySnakeGraph) else tuple(g6.segments),
        seed1=seed1,
        seed2=seed2,
        delta3_sign=G1.edge_sign(delta3, seed1),
        reflected=reflected,
    )
    logger.debug(f"Grafted {G2} on {G1} at s={s} along {delta3}")
    return result


def grafting_edge_is_minimal(graft_result):
    return graft_result.delta3_sign == 1


def graft_forced_values(graft_result):
    """
    Heights every preimage of each branch must take outside the output
    graphs: ``{'pair34': (value, tiles of G1), 'pair56': ((value, G1 tiles), (value, G2 tiles))}``.
    """
    g = graft_result
    if g.case == 1:
        beta4 = 0 if g.delta3_sign == 1 else 1
        return {
            'pair34': (beta4, tuple(range(g.s + 1, g.k4))),
            'pair56': ((1 - beta4, tuple(range(g.k5 + 1, g.s + 1))), (0, ())),
        }
    high_on_g1 = int(g.delta3_sign == 1)
    return {
        'pair34': (0, ()),
        'pair56': ((high_on_g1, tuple(range(g.k5 + 1, g.s + 1))),
                   (1 - high_on_g1, tuple(range(1, g.k6)))),
    }


def graft_coefficients(graft_result):
    """(tiles34, tiles56): tile labels of the y-coefficients of the two pairs."""
    G1, G2 = graft_result.g1, graft_result.g2
    forced = graft_forced_values(graft_result)
    value34, tiles34 = forced['pair34']
    labels34 = tuple(G1.tile_labels[k - 1] for k in tiles34) if value34 else ()
    (value1, tiles1), (value2, tiles2) = forced['pair56']
    labels56 = []
    if value1:
        labels56.extend(G1.tile_labels[k - 1] for k in tiles1)
    if value2:
        labels56.extend(G2.tile_labels[k - 1] for k in tiles2)
    return tuple(sorted(labels34)), tuple(sorted(labels56))


def _pair(graphs):
    return [to_dict(G) for G in graphs]


def describe(construction):
    if isinstance(construction, Grafting):
        tiles34, tiles56 = graft_coefficients(construction)
        return {
            'kind': 'graft',
            's': construction.s,
            'case': construction.case,
            'grafting_edge': str(construction.delta3),
            'grafting_edge_is_minimal': grafting_edge_is_minimal(construction),
            'reflected': construction.reflected,
            'pair34': _pair(construction.pair34),
            'pair56': _pair(construction.pair56),
            'y34': list(tiles34),
            'y56': list(tiles56),
        }
    data = {
        'kind': 'resolution',
        'overlap': str(construction.overlap),
        'crossing': construction.crossing,
        'convention': construction.convention,
        'pair34': _pair(construction.pair34),
    }
    if construction.crossing:
        data.update({
            'pair56': _pair(construction.pair56),
            'closure': list(closure_of_overlap(construction.g1, construction.g2, construction)),
            'skein': list(skein_tiles(construction)),
        })
    return data
