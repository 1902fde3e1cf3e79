"""
Snake graphs on the unit lattice.

Tile 1 sits at the origin and every further tile is glued east or north of
its predecessor. Edges are addressed by ``EdgeRef(tile, face)``. The interior
edge between tiles j and j+1 is always stored on tile j, as (j, N) or (j, E)
depending on the step, so a graph with d tiles has exactly 3d+1 canonical
edges.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property

from .exceptions import (
    AliasLabelConflict,
    EmptySteps,
    InvalidSteps,
    MalformedGlue,
    ReservedLabel,
    TileRangeError,
    UnknownEdge,
)

logger = logging.getLogger(__name__)

FACES = ('N', 'E', 'S', 'W')
STEPS = ('E', 'N')
SWAP_STEP = {'E': 'N', 'N': 'E'}
# face of a tile before reflection -> face after reflection
REFLECTED_FACE = {'N': 'W', 'E': 'S', 'S': 'E', 'W': 'N'}
# y-variables of the Laurent polynomials are named with this prefix
COEFFICIENT_PREFIX = 'y'


@dataclass(frozen=True, order=True)
class EdgeRef:
    tile: int
    face: str

    def __str__(self):
        return f"{self.tile}:{self.face}"

    @classmethod
    def parse(cls, text):
        try:
            tile, face = str(text).split(':')
            return cls(int(tile), face.strip().upper())
        except ValueError as e:
            raise UnknownEdge(f"Malformed edge reference {text!r}, expected '<tile>:<face>'") from e


# The one edge of an EmptySnakeGraph.
SINGLE_EDGE = EdgeRef(0, '*')


@dataclass(frozen=True)
class TileRecord:
    label: str
    north: str
    east: str
    south: str
    west: str

    def face(self, face):
        return {'N': self.north, 'E': self.east, 'S': self.south, 'W': self.west}[face]

    def reflected(self):
        return TileRecord(self.label, north=self.west, east=self.south, south=self.east, west=self.north)


@dataclass(frozen=True)
class SnakeGraph:
    steps: str
    tile_labels: tuple
    edge_labels: tuple = ()
    # sign of tile 1 under the sign function that defines the minimal matching
    orientation: int = -1
    auto_labeled: bool = field(default=False, compare=False)

    def __str__(self):
        return f"SnakeGraph({self.steps or '-'}, d={self.d})"

    @property
    def d(self):
        return len(self.tile_labels)

    def step(self, j):
        return self.steps[j - 1]

    @cached_property
    def labels(self):
        return dict(self.edge_labels)

    @cached_property
    def positions(self):
        x, y = 0, 0
        points = [(0, 0)]
        for step in self.steps:
            if step == 'E':
                x += 1
            else:
                y += 1
            points.append((x, y))
        return tuple(points)

    def canonical(self, edge):
        if edge.face not in FACES or not 1 <= edge.tile <= self.d:
            raise UnknownEdge(f"No edge {edge} in a graph with {self.d} tiles")
        if edge.tile > 1:
            previous = self.steps[edge.tile - 2]
            if edge.face == 'S' and previous == 'N':
                return EdgeRef(edge.tile - 1, 'N')
            if edge.face == 'W' and previous == 'E':
                return EdgeRef(edge.tile - 1, 'E')
        return edge

    @cached_property
    def edges(self):
        found = {self.canonical(EdgeRef(j, face)) for j in range(1, self.d + 1) for face in FACES}
        return tuple(sorted(found))

    @cached_property
    def interior_edges(self):
        return tuple(EdgeRef(j, step) for j, step in enumerate(self.steps, start=1))

    @cached_property
    def boundary_edges(self):
        interior = set(self.interior_edges)
        return tuple(e for e in self.edges if e not in interior)

    def interior_edge(self, j):
        if not 1 <= j < self.d:
            raise TileRangeError(f"Interior edge e_{j} does not exist for d={self.d}")
        return EdgeRef(j, self.steps[j - 1])

    def tile_edges(self, j):
        return tuple(self.canonical(EdgeRef(j, face)) for face in FACES)

    def tile_sign(self, j, seed=None):
        seed = self.orientation if seed is None else seed
        return seed if j % 2 == 1 else -seed

    def interior_sign(self, j, seed=None):
        """Sign of e_j: the tile sign if step j is east, its negative if north."""
        sign = self.tile_sign(j, seed)
        return sign if self.steps[j - 1] == 'E' else -sign

    def edge_sign(self, edge, seed=None):
        edge = self.canonical(edge)
        sign = self.tile_sign(edge.tile, seed)
        return sign if edge.face in ('S', 'E') else -sign

    def label_of(self, edge):
        return self.labels[self.canonical(edge)]

    def vertices_of(self, edge):
        edge = self.canonical(edge)
        x, y = self.positions[edge.tile - 1]
        return {
            'N': ((x, y + 1), (x + 1, y + 1)),
            'E': ((x + 1, y), (x + 1, y + 1)),
            'S': ((x, y), (x + 1, y)),
            'W': ((x, y), (x, y + 1)),
        }[edge.face]

    @cached_property
    def vertices(self):
        return tuple(sorted({v for e in self.edges for v in self.vertices_of(e)}))

    def tile_record(self, j):
        return TileRecord(
            self.tile_labels[j - 1],
            north=self.label_of(EdgeRef(j, 'N')),
            east=self.label_of(EdgeRef(j, 'E')),
            south=self.label_of(EdgeRef(j, 'S')),
            west=self.label_of(EdgeRef(j, 'W')),
        )

    def with_orientation(self, orientation):
        return SnakeGraph(self.steps, self.tile_labels, self.edge_labels, orientation, self.auto_labeled)


@dataclass(frozen=True)
class EmptySnakeGraph:
    """A single weighted edge; its only perfect matching is the edge itself."""
    label: str
    source: EdgeRef = field(default=None, compare=False)

    steps = ''
    tile_labels = ()
    auto_labeled = False

    def __str__(self):
        return f"EmptySnakeGraph({self.label})"

    @property
    def d(self):
        return 0


@dataclass(frozen=True)
class SignAssignment:
    graph: SnakeGraph
    seed: int

    def tile_sign(self, j):
        return self.graph.tile_sign(j, self.seed)

    def sign(self, edge):
        return self.graph.edge_sign(edge, self.seed)


def default_edge_label(edge):
    return f"e{edge.tile}{edge.face}"


def _check_steps(steps):
    steps = (steps or '').strip().upper()
    unknown = sorted(set(steps) - set(STEPS))
    if unknown:
        raise InvalidSteps(f"Steps must be a word over E and N, got {''.join(unknown)!r}")
    return steps


def check_label(label):
    label = str(label)
    if label.startswith(COEFFICIENT_PREFIX):
        raise ReservedLabel(f"Label {label!r} starts with {COEFFICIENT_PREFIX!r}, which names coefficient variables")
    return label


def build(steps, tile_labels=None, edge_labels=None, orientation=-1):
    """
    Build a snake graph from a step word, tile labels and a partial edge
    labelling. Missing labels are filled with fresh symbols; aliases of an
    interior edge must agree.
    """
    steps = _check_steps(steps)
    if orientation not in (1, -1):
        raise InvalidSteps(f"Orientation must be +1 or -1, got {orientation}")
    auto = tile_labels is None
    if auto:
        tile_labels = tuple(f"t{j}" for j in range(1, len(steps) + 2))
    else:
        tile_labels = tuple(check_label(label) for label in tile_labels)
        if not tile_labels:
            raise EmptySteps("A snake graph needs at least one tile; use EmptySnakeGraph for a single edge")
        if len(tile_labels) != len(steps) + 1:
            raise InvalidSteps(f"{len(steps)} steps need {len(steps) + 1} tile labels, got {len(tile_labels)}")

    shape = SnakeGraph(steps, tile_labels, (), orientation)
    if len(set(shape.positions)) != shape.d:
        raise InvalidSteps("Two tiles share a lattice position")

    given = {}
    for key, label in (edge_labels or {}).items():
        ref = key if isinstance(key, EdgeRef) else EdgeRef.parse(key)
        edge = shape.canonical(ref)
        label = check_label(label)
        if edge in given and given[edge] != label:
            raise AliasLabelConflict(f"Edge {edge} labelled both {given[edge]!r} and {label!r}")
        given[edge] = label

    labels = tuple((e, given.get(e, default_edge_label(e))) for e in shape.edges)
    auto = auto or len(given) < len(shape.edges)
    logger.debug(f"Built snake graph {steps or '-'} with {shape.d} tiles")
    return SnakeGraph(steps, tile_labels, labels, orientation, auto)


def assemble(steps, records, orientation, auto_labeled=False):
    """
    Glue tile records along ``steps``. A glued edge takes the label of the
    later tile's south or west side.
    """
    records = list(records)
    if len(records) != len(steps) + 1:
        raise MalformedGlue(f"{len(steps)} steps cannot glue {len(records)} tiles")
    shape = SnakeGraph(steps, tuple(r.label for r in records), (), orientation)
    labels = {}
    for j, record in enumerate(records, start=1):
        for face in FACES:
            edge = shape.canonical(EdgeRef(j, face))
            label = record.face(face)
            if not auto_labeled and edge in labels and labels[edge] != label:
                logger.warning(f"Glue edge {edge} carries {labels[edge]!r} and {label!r}; keeping {label!r}")
            if edge not in labels or face in ('S', 'W'):
                labels[edge] = label
    return SnakeGraph(steps, shape.tile_labels, tuple(sorted(labels.items())), orientation, auto_labeled)


def sign_assignments(G):
    return SignAssignment(G, 1), SignAssignment(G, -1)


def sign_of(sa, edge):
    return sa.sign(edge)


def subgraph(G, i, j):
    """G[i,j]: tiles i..j with inherited labels and signs."""
    if not 1 <= i <= j <= G.d:
        raise TileRangeError(f"Cannot take tiles {i}..{j} of a graph with {G.d} tiles")
    records = [G.tile_record(k) for k in range(i, j + 1)]
    return assemble(G.steps[i - 1:j - 1], records, G.tile_sign(i), G.auto_labeled)


def reflect_steps(steps):
    return ''.join(SWAP_STEP[step] for step in reversed(steps))


def reflect(G):
    """Reverse the tile order and mirror the graph across an anti-diagonal."""
    records = [G.tile_record(k).reflected() for k in range(G.d, 0, -1)]
    return assemble(reflect_steps(G.steps), records, -G.tile_sign(G.d), G.auto_labeled)


def reflect_edge(G, edge):
    """Where ``edge`` of G lands in reflect(G)."""
    edge = G.canonical(edge)
    image = EdgeRef(G.d + 1 - edge.tile, REFLECTED_FACE[edge.face])
    return SnakeGraph(reflect_steps(G.steps), G.tile_labels[::-1]).canonical(image)


def is_straight(G):
    return len(set(G.steps)) <= 1


def is_zigzag(G):
    return all(a != b for a, b in zip(G.steps, G.steps[1:]))


def zigzag_runs(G):
    """Maximal tile intervals [i, j] on which G is a zigzag."""
    runs = []
    i = 1
    while True:
        j = i
        while j < G.d and (j == i or G.steps[j - 1] != G.steps[j - 2]):
            j += 1
        runs.append((i, j))
        if j >= G.d:
            return runs
        i = j


def to_dict(G):
    if isinstance(G, EmptySnakeGraph):
        return {'edge': G.label}
    return {
        'steps': G.steps,
        'tile_labels': list(G.tile_labels),
        'edge_labels': {str(e): label for e, label in G.edge_labels},
        'orientation': G.orientation,
    }


def from_dict(data):
    if 'edge' in data:
        return EmptySnakeGraph(check_label(data['edge']))
    return build(
        data.get('steps', ''),
        data.get('tile_labels'),
        data.get('edge_labels'),
        data.get('orientation', -1),
    )
