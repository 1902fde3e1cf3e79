"""Overlaps of two snake graphs and the crossing test."""
import logging
from dataclasses import dataclass

from .exceptions import InvalidOverlap

logger = logging.getLogger(__name__)

SHAPE = 'shape'
LABELED = 'labeled'


@dataclass(frozen=True, order=True)
class Overlap:
    """G1[s,t] is isomorphic to G2[s_prime,t_prime]."""
    s: int
    t: int
    s_prime: int
    t_prime: int

    def __post_init__(self):
        if self.s > self.t or self.t - self.s != self.t_prime - self.s_prime or min(self.s, self.s_prime) < 1:
            raise InvalidOverlap(f"Intervals {self.s}..{self.t} and {self.s_prime}..{self.t_prime} do not match")

    def __str__(self):
        return f"{self.s},{self.t},{self.s_prime},{self.t_prime}"

    @property
    def length(self):
        return self.t - self.s + 1

    def swapped(self):
        return Overlap(self.s_prime, self.t_prime, self.s, self.t)

    @classmethod
    def parse(cls, text):
        try:
            s, t, s_prime, t_prime = (int(part) for part in str(text).split(','))
        except ValueError as e:
            raise InvalidOverlap(f"Overlap must read 's,t,s_prime,t_prime', got {text!r}") from e
        return cls(s, t, s_prime, t_prime)


def validate_overlap(G1, G2, ov):
    if ov.t > G1.d or ov.t_prime > G2.d:
        raise InvalidOverlap(f"Overlap {ov} leaves graphs with {G1.d} and {G2.d} tiles")
    if G1.steps[ov.s - 1:ov.t - 1] != G2.steps[ov.s_prime - 1:ov.t_prime - 1]:
        raise InvalidOverlap(f"Overlap {ov} joins subgraphs of different shape")


def induced_seed(G1, ov, seed=None):
    """Seed of the sign function on G2 that agrees with G1's on the overlap."""
    sign_at_s = G1.tile_sign(ov.s, seed)
    return sign_at_s if ov.s_prime % 2 == 1 else -sign_at_s


def _tiles_agree(G1, G2, k1, k2, mode):
    return mode == SHAPE or G1.tile_labels[k1 - 1] == G2.tile_labels[k2 - 1]


def _single_tile_allowed(G1, G2, k1, k2):
    if k1 in (1, G1.d) or k2 in (1, G2.d):
        return True
    straight1 = G1.steps[k1 - 2] == G1.steps[k1 - 1]
    straight2 = G2.steps[k2 - 2] == G2.steps[k2 - 1]
    return straight1 == straight2


def find_overlaps(G1, G2, mode=SHAPE):
    """All maximal overlaps, orientation preserving, sorted by anchor."""
    if mode not in (SHAPE, LABELED):
        raise ValueError(f"Unknown overlap mode {mode!r}")
    found = []
    for s in range(1, G1.d + 1):
        for s_prime in range(1, G2.d + 1):
            if not _tiles_agree(G1, G2, s, s_prime, mode):
                continue
            if (s > 1 and s_prime > 1 and G1.steps[s - 2] == G2.steps[s_prime - 2]
                    and _tiles_agree(G1, G2, s - 1, s_prime - 1, mode)):
                continue
            length = 1
            while (s + length <= G1.d and s_prime + length <= G2.d
                   and G1.steps[s + length - 2] == G2.steps[s_prime + length - 2]
                   and _tiles_agree(G1, G2, s + length, s_prime + length, mode)):
                length += 1
            if length == 1 and not _single_tile_allowed(G1, G2, s, s_prime):
                continue
            ov = Overlap(s, s + length - 1, s_prime, s_prime + length - 1)
            if mode == LABELED and not (G1.auto_labeled or G2.auto_labeled):
                _warn_on_label_mismatch(G1, G2, ov)
            found.append(ov)
    return found


def _warn_on_label_mismatch(G1, G2, ov):
    for offset in range(ov.length - 1):
        a = G1.label_of(G1.interior_edge(ov.s + offset))
        b = G2.label_of(G2.interior_edge(ov.s_prime + offset))
        if a != b:
            logger.warning(f"Label mismatch inside overlap {ov}: {a!r} vs {b!r}")


def crosses(G1, G2, ov, seed=1):
    """Whether G1 and G2 cross in the overlap ``ov``; independent of ``seed``."""
    validate_overlap(G1, G2, ov)
    seed2 = induced_seed(G1, ov, seed)

    def f1(j):
        return G1.interior_sign(j, seed)

    def f2(j):
        return G2.interior_sign(j, seed2)

    s, t, sp, tp = ov.s, ov.t, ov.s_prime, ov.t_prime
    d, dp = G1.d, G2.d
    if s > 1 and t < d and f1(s - 1) == -f1(t):
        return True
    if sp > 1 and tp < dp and f2(sp - 1) == -f2(tp):
        return True
    if s == 1 and t < d and sp > 1 and tp == dp and f1(t) == f2(sp - 1):
        return True
    if s > 1 and t == d and sp == 1 and tp < dp and f1(s - 1) == f2(tp):
        return True
    return False


def crosses_initial_segment(G1, delta, delta_prime, k):
    """
    Whether the arc of G1 crosses the initial segment of another arc whose
    first tile is labelled k with west side delta and south side delta_prime.
    """
    ends = (G1.tile_labels[0], G1.tile_labels[-1])
    if delta in ends or delta_prime in ends:
        return True
    pairs = ((delta, delta_prime), (delta_prime, delta))
    for j in range(1, G1.d):
        if (G1.tile_labels[j - 1], G1.tile_labels[j]) in pairs and G1.label_of(G1.interior_edge(j)) == k:
            return True
    return False
