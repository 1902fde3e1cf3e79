"""
The bijection between matchings of a crossing pair (or a grafting) and the
disjoint union of the matchings of its resolution.

Matchings are handled through their height vectors. The inputs use the sign
functions the construction glued with (G1's own, and the one induced on G2);
every output graph carries the sign of its first tile as its orientation, so
a tile keeps its height when it moves into an output graph.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field

from matchings.perfect import (
    EDGE_MATCHING,
    PerfectMatching,
    enumerate_matchings,
    from_heights,
    heights,
    weight_monomial,
)
from snakegraphs.exceptions import InternalBranchFailure
from snakegraphs.graph import EmptySnakeGraph, reflect, reflect_edge

from .construction import Grafting, Resolution, graft_coefficients, graft_forced_values, overlap_height

logger = logging.getLogger(__name__)

BRANCH_34 = '34'
BRANCH_56 = '56'


def _coords(G, P, seed=None):
    if isinstance(G, EmptySnakeGraph):
        return ()
    if seed is not None and seed != G.orientation:
        G = G.with_orientation(seed)
    return heights(G, P)


def _matching(G, values, seed=None):
    if isinstance(G, EmptySnakeGraph):
        return EDGE_MATCHING if not values else None
    if seed is not None and seed != G.orientation:
        G = G.with_orientation(seed)
    return from_heights(G, tuple(values))


def _require(*matchings):
    if any(P is None for P in matchings):
        raise InternalBranchFailure("Height vector does not define a perfect matching")
    return matchings


@dataclass(frozen=True)
class TaggedMatching:
    """An element of Match(G3 u G4) or Match(G5 u G6)."""
    branch: str
    matchings: tuple

    def __iter__(self):
        return iter((self.branch, self.matchings))


# Resolutions

def _split(res, x, xp, q):
    s, sp = res.overlap.s, res.overlap.s_prime
    return x[:s + q - 1] + xp[sp + q - 1:], xp[:sp + q - 1] + x[s + q - 1:]


def _first_agreement(a, a_start, b, b_start, length):
    return next((p for p in range(1, length + 1) if a[a_start + p - 2] == b[b_start + p - 2]), None)


def _part_values(parts, x, xp):
    values = {1: x, 2: xp}
    return tuple(values[seg.source][k - 1] for seg in parts for k in seg.tiles())


def phi_resolution(res, P1, P2):
    """Match(G1 u G2) -> Match(G3 u G4) u Match(G5 u G6)."""
    if not res.crossing:
        return TaggedMatching(BRANCH_34, (P1, P2))
    ov = res.overlap
    x = _coords(res.g1, P1, res.seed1)
    xp = _coords(res.g2, P2, res.seed2)
    G3, G4 = res.pair34

    agree = _first_agreement(x, ov.s, xp, ov.s_prime, ov.length)
    if agree is not None:
        a, b = _split(res, x, xp, agree)
        return TaggedMatching(BRANCH_34, _require(_matching(G3, a), _matching(G4, b)))

    for q in (ov.length, 0):
        a, b = _split(res, x, xp, q)
        P3, P4 = _matching(G3, a), _matching(G4, b)
        if P3 is not None and P4 is not None:
            return TaggedMatching(BRANCH_34, (P3, P4))

    high, low = x[ov.s - 1], xp[ov.s_prime - 1]
    if any(x[k - 1] != high for k in res.forced1) or any(xp[k - 1] != low for k in res.forced2):
        raise InternalBranchFailure(f"Forced tiles of {ov} disagree with the overlap heights")
    G5, G6 = res.pair56
    return TaggedMatching(BRANCH_56, _require(
        _matching(G5, _part_values(res.parts5, x, xp)),
        _matching(G6, _part_values(res.parts6, x, xp)),
    ))


def _resolution_preimage_34(res, y3, y4):
    """Undo the cut: the first candidate that is a matching pair of G1 u G2."""
    ov = res.overlap
    agree = _first_agreement(y3, ov.s, y4, ov.s_prime, ov.length)
    for q in ((agree,) if agree is not None else (ov.length, 0)):
        x = y3[:ov.s + q - 1] + y4[ov.s_prime + q - 1:]
        xp = y4[:ov.s_prime + q - 1] + y3[ov.s + q - 1:]
        P1, P2 = _matching(res.g1, x, res.seed1), _matching(res.g2, xp, res.seed2)
        if P1 is not None and P2 is not None:
            return P1, P2
    return None, None


def _resolution_preimage_56(res, y5, y6):
    """
    Put the heights of G5 and G6 back on the tiles they came from. The overlap
    and the forced tiles are pinned: c on G1, 1 - c on G2.
    """
    ov = res.overlap
    c = overlap_height(res)
    x, xp = [None] * res.g1.d, [None] * res.g2.d
    target = {1: x, 2: xp}
    values = iter(y5 + y6)
    for seg in res.parts5 + res.parts6:
        for k in seg.tiles():
            target[seg.source][k - 1] = next(values)
    for k in list(range(ov.s, ov.t + 1)) + list(res.forced1):
        x[k - 1] = c
    for k in list(range(ov.s_prime, ov.t_prime + 1)) + list(res.forced2):
        xp[k - 1] = 1 - c
    if None in x or None in xp:
        return None, None
    return _matching(res.g1, x, res.seed1), _matching(res.g2, xp, res.seed2)


def psi_resolution(res, branch, Pa, Pb):
    """Inverse of phi_resolution."""
    if not res.crossing:
        return Pa, Pb
    if branch == BRANCH_34:
        G3, G4 = res.pair34
        P1, P2 = _resolution_preimage_34(res, _coords(G3, Pa), _coords(G4, Pb))
    else:
        G5, G6 = res.pair56
        P1, P2 = _resolution_preimage_56(res, _coords(G5, Pa), _coords(G6, Pb))
    if P1 is None or P2 is None:
        raise InternalBranchFailure(f"No preimage for {branch} pair ({Pa}, {Pb}) in overlap {res.overlap}")
    return P1, P2


# Graftings

def _to_effective(g, P1):
    if not g.reflected:
        return P1
    original = reflect(g.g1)
    return PerfectMatching.of(reflect_edge(original, e) for e in P1)


def _to_original(g, P1):
    if not g.reflected:
        return P1
    return PerfectMatching.of(reflect_edge(g.g1, e) for e in P1)


def phi_graft(g, P1, P2):
    """
    P1 is a matching of the G1 that was passed to graft (before any
    reflection), P2 a matching of G2.
    """
    x = _coords(g.g1, _to_effective(g, P1), g.seed1)
    xp = _coords(g.g2, P2, g.seed2)
    G3, G4 = g.pair34
    G5, G6 = g.pair56
    forced = graft_forced_values(g)
    s, dp = g.s, g.g2.d

    if g.case == 1:
        beta4, tiles34 = forced['pair34']
        P3 = _matching(G3, x[:s] + xp)
        if P3 is not None and all(x[k - 1] == beta4 for k in tiles34):
            return TaggedMatching(BRANCH_34, _require(P3, _matching(G4, x[g.k4 - 1:])))
        x5, x6 = x[:g.k5], tuple(reversed(xp)) + x[s:]
    else:
        P3 = _matching(G3, x + xp)
        if P3 is not None:
            return TaggedMatching(BRANCH_34, (P3, EDGE_MATCHING))
        x5, x6 = x[:g.k5], tuple(reversed(xp[g.k6 - 1:]))

    (value1, tiles1), (value2, tiles2) = forced['pair56']
    if any(x[k - 1] != value1 for k in tiles1) or any(xp[k - 1] != value2 for k in tiles2):
        raise InternalBranchFailure(f"Forced tiles of the grafting at s={s} take the wrong heights")
    logger.debug(f"Grafting branch 56 with {dp} tiles of G2 reflected")
    return TaggedMatching(BRANCH_56, _require(_matching(G5, x5), _matching(G6, x6)))


def psi_graft(g, branch, Pa, Pb):
    """Inverse of phi_graft; P1 is returned on the G1 passed to graft."""
    forced = graft_forced_values(g)
    s, d, dp = g.s, g.g1.d, g.g2.d
    if branch == BRANCH_34:
        y3 = _coords(g.pair34[0], Pa)
        y4 = _coords(g.pair34[1], Pb)
        if g.case == 1:
            beta4, tiles34 = forced['pair34']
            x, xp = y3[:s] + (beta4,) * len(tiles34) + y4, y3[s:]
        else:
            x, xp = y3[:d], y3[d:]
    else:
        y5 = _coords(g.pair56[0], Pa)
        y6 = _coords(g.pair56[1], Pb)
        (value1, tiles1), (value2, tiles2) = forced['pair56']
        if g.case == 1:
            x, xp = y5 + (value1,) * len(tiles1) + y6[dp:], tuple(reversed(y6[:dp]))
        else:
            x, xp = y5 + (value1,) * len(tiles1), (value2,) * len(tiles2) + tuple(reversed(y6))
    P1, P2 = _require(_matching(g.g1, x, g.seed1), _matching(g.g2, xp, g.seed2))
    return _to_original(g, P1), P2


def phi(construction, P1, P2):
    if isinstance(construction, Grafting):
        return phi_graft(construction, P1, P2)
    return phi_resolution(construction, P1, P2)


def psi(construction, branch, Pa, Pb):
    if isinstance(construction, Grafting):
        return psi_graft(construction, branch, Pa, Pb)
    return psi_resolution(construction, branch, Pa, Pb)


# Verification

@dataclass
class BijectionReport:
    kind: str
    domain_size: int = 0
    image34: int = 0
    image56: int = 0
    expected34: int = 0
    expected56: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def as_dict(self):
        return {
            'kind': self.kind,
            'ok': self.ok,
            'domain_size': self.domain_size,
            'image34': self.image34,
            'image56': self.image56,
            'expected34': self.expected34,
            'expected56': self.expected56,
            'failures': list(self.failures),
        }


def _raised(values, provenance):
    return Counter(p for p, value in zip(provenance, values) if value)


def _resolution_y_check(res, P1, P2, image):
    """Raised tiles of the input pair against the output pair times the skein coefficient."""
    ov = res.overlap
    d, dp = res.g1.d, res.g2.d

    def norm(tile):
        source, k = tile
        if source == 2 and ov.s_prime <= k <= ov.t_prime:
            return 1, ov.s + k - ov.s_prime
        return tile

    before = _raised(_coords(res.g1, P1, res.seed1), [(1, k) for k in range(1, d + 1)])
    before += _raised(_coords(res.g2, P2, res.seed2), [(2, k) for k in range(1, dp + 1)])
    branch, (Pa, Pb) = image
    if branch == BRANCH_34:
        first = [(1, k) for k in range(1, ov.t + 1)] + [(2, k) for k in range(ov.t_prime + 1, dp + 1)]
        second = [(2, k) for k in range(1, ov.t_prime + 1)] + [(1, k) for k in range(ov.t + 1, d + 1)]
        Ga, Gb = res.pair34
        coefficient = Counter()
    else:
        first = [(seg.source, k) for seg in res.parts5 for k in seg.tiles()]
        second = [(seg.source, k) for seg in res.parts6 for k in seg.tiles()]
        Ga, Gb = res.pair56
        coefficient = Counter((1, k) for k in range(ov.s, ov.t + 1))
        if overlap_height(res):
            coefficient += Counter((1, k) for k in res.forced1)
        else:
            coefficient += Counter((2, k) for k in res.forced2)
    after = _raised(_coords(Ga, Pa), first) + _raised(_coords(Gb, Pb), second) + coefficient
    return Counter(map(norm, before.elements())) == Counter(map(norm, after.elements()))


def _graft_y_check(g, P1, P2, image):
    before = Counter()
    for G, P, seed in ((g.g1, _to_effective(g, P1), g.seed1), (g.g2, P2, g.seed2)):
        before += _raised(_coords(G, P, seed), G.tile_labels)
    branch, (Pa, Pb) = image
    tiles34, tiles56 = graft_coefficients(g)
    Ga, Gb = g.pair34 if branch == BRANCH_34 else g.pair56
    after = Counter(tiles34 if branch == BRANCH_34 else tiles56)
    for G, P in ((Ga, Pa), (Gb, Pb)):
        after += _raised(_coords(G, P), G.tile_labels)
    return before == after


def _inputs(construction, P1, P2):
    if isinstance(construction, Grafting):
        return (construction.g1, _to_effective(construction, P1)), (construction.g2, P2)
    return (construction.g1, P1), (construction.g2, P2)


def _x_check(construction, P1, P2, image, unit_labels):
    """
    Edge weights of the input pair equal those of the output pair times the
    tiles the output graphs drop.
    """
    branch, (Pa, Pb) = image
    outputs = construction.pair34 if branch == BRANCH_34 else construction.pair56
    before, after = Counter(), Counter()
    for G, P in _inputs(construction, P1, P2):
        before.update(dict(weight_monomial(G, P, unit_labels)))
        after.update(G.tile_labels)
    for G, P in zip(outputs, (Pa, Pb)):
        after.update(dict(weight_monomial(G, P, unit_labels)))
        before.update(G.tile_labels)
    return before == after


def verify_bijection(construction, phi=None, psi=None, unit_labels=None):
    """
    Exhaustively check that phi is a bijection onto the resolution, that psi
    inverts it, and that y-weights agree up to the branch coefficient.

    Edge weights are compared only when ``unit_labels`` is given, as the
    boundary sides of a triangulated polygon.
    """
    if isinstance(construction, Resolution):
        kind = 'resolution'
        phi = phi or phi_resolution
        psi = psi or psi_resolution
        domain1 = enumerate_matchings(construction.g1)
        y_check = _resolution_y_check if construction.crossing else None
    elif isinstance(construction, Grafting):
        kind = 'graft'
        phi = phi or phi_graft
        psi = psi or psi_graft
        g1 = reflect(construction.g1) if construction.reflected else construction.g1
        domain1 = enumerate_matchings(g1)
        y_check = _graft_y_check
    else:
        raise TypeError(f"Cannot verify {type(construction).__name__}")

    report = BijectionReport(kind)
    pair34 = construction.pair34
    pair56 = construction.pair56 or ()
    report.expected34 = len(enumerate_matchings(pair34[0])) * len(enumerate_matchings(pair34[1]))
    if pair56:
        report.expected56 = len(enumerate_matchings(pair56[0])) * len(enumerate_matchings(pair56[1]))

    images = set()
    for P1 in domain1:
        for P2 in enumerate_matchings(construction.g2):
            report.domain_size += 1
            try:
                image = phi(construction, P1, P2)
                back = psi(construction, image.branch, *image.matchings)
            except InternalBranchFailure as e:
                report.failures.append(f"{P1} x {P2}: {e}")
                continue
            if back != (P1, P2):
                report.failures.append(f"{P1} x {P2}: inverse returned {back[0]} x {back[1]}")
            if image in images:
                report.failures.append(f"{P1} x {P2}: image {image.branch} pair hit twice")
            images.add(image)
            if y_check is not None and not y_check(construction, P1, P2, image):
                report.failures.append(f"{P1} x {P2}: y-weights disagree in branch {image.branch}")
            if unit_labels is not None and not _x_check(construction, P1, P2, image, unit_labels):
                report.failures.append(f"{P1} x {P2}: x-weights disagree in branch {image.branch}")

    report.image34 = sum(1 for image in images if image.branch == BRANCH_34)
    report.image56 = sum(1 for image in images if image.branch == BRANCH_56)
    if (report.image34, report.image56) != (report.expected34, report.expected56):
        report.failures.append(
            f"Image sizes {report.image34}+{report.image56} differ from "
            f"{report.expected34}+{report.expected56}"
        )
    if report.failures:
        logger.warning(f"Bijection check for {kind} failed with {len(report.failures)} faults")
    return report
