"""
Verification suites over exhaustive corpora of snake graphs and polygon
triangulations.

Each suite builds an ordered list of instances. An instance is a key and a
check; the check returns ``None`` when the instance passes and a JSON-ready
description of the problem otherwise. Instances may run on a thread pool,
but reports always aggregate in instance order.
"""
import json
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product

import numpy as np
from django.conf import settings
from django.db import DatabaseError

from matchings.perfect import boundary_matchings, count_matchings, enumerate_matchings
from resolutions.bijection import verify_bijection
from resolutions.construction import graft, resolve
from snakegraphs.exceptions import SnakeCalculusError
from snakegraphs.graph import EmptySnakeGraph, build, zigzag_runs
from snakegraphs.overlap import crosses, find_overlaps
from surfaces.oracle import all_triangulations, flip_path, oracle_cluster_variable
from surfaces.polygon import (
    Polygon,
    arcs_cross,
    cluster_variable,
    crossing_identity,
    crossing_sequence,
    fans,
    local_overlap,
    resolve_crossing,
    skein_relation,
    snake_graph,
)

from .models import RunReport

logger = logging.getLogger(__name__)

MIN_N = 5

BOUNDARY = 'boundary'
SIGNS = 'signs'
COUNTS = 'counts'
BIJECTION = 'bijection'
SURFACE = 'surface'
IDENTITIES = 'identities'
ORACLE = 'oracle'


@dataclass(frozen=True)
class Instance:
    key: str
    check: object

    def evaluate(self):
        try:
            return self.check()
        except SnakeCalculusError as e:
            return {'error': type(e).__name__, 'message': str(e)}


@dataclass
class SuiteReport:
    suite: str
    instance_count: int = 0
    passed: int = 0
    failed: int = 0
    counterexample: dict = None
    seed: int = None
    parameters: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def status(self):
        return 'passed' if not self.failed else 'failed'

    @property
    def ok(self):
        return not self.failed

    def as_dict(self, timing=False):
        data = {
            'suite': self.suite,
            'status': self.status,
            'instance_count': self.instance_count,
            'passed': self.passed,
            'failed': self.failed,
            'counterexample': self.counterexample,
            'seed': self.seed,
            'parameters': self.parameters,
        }
        if timing:
            data['wall_time'] = round(self.wall_time, 3)
        return data


def _workers(workers):
    if workers is None:
        workers = getattr(settings, 'SNAKECALC', {}).get('SUITE_WORKERS', 1)
    return max(1, int(workers))


def run_instances(suite, instances, parameters=None, seed=None, workers=None):
    """Evaluate instances and aggregate the outcome by instance order."""
    start = time.perf_counter()
    workers = _workers(workers)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(Instance.evaluate, instances))
    else:
        outcomes = [instance.evaluate() for instance in instances]

    report = SuiteReport(suite, seed=seed, parameters=dict(parameters or {}))
    for instance, problem in zip(instances, outcomes):
        report.instance_count += 1
        if problem is None:
            report.passed += 1
            continue
        report.failed += 1
        if report.counterexample is None:
            report.counterexample = {'instance': instance.key, 'problem': problem}
    report.wall_time = time.perf_counter() - start

    log = logger.info if report.ok else logger.warning
    log(f"Suite {suite}: {report.passed}/{report.instance_count} passed in {report.wall_time:.2f}s",
        extra={'suite': suite})
    return report


def persist(report):
    if not getattr(settings, 'SNAKECALC', {}).get('PERSIST_RUNS', True):
        return None
    try:
        return RunReport.objects.create(
            suite=report.suite,
            status=report.status,
            instance_count=report.instance_count,
            passed=report.passed,
            failed=report.failed,
            counterexample=json.dumps(report.counterexample, sort_keys=True) if report.counterexample else '',
            seed=report.seed,
            parameters=json.dumps(report.parameters, sort_keys=True),
            wall_time=report.wall_time,
        )
    except DatabaseError as e:
        logger.warning(f"Could not store run report for {report.suite}: {e}")
        return None


# Corpora

def step_words(d):
    return [''.join(word) for word in product('EN', repeat=d - 1)]


def shape(steps, prefix='t'):
    return build(steps, [f"{prefix}{j}" for j in range(1, len(steps) + 2)])


def shapes(max_d, prefix='t'):
    return [shape(word, prefix) for d in range(1, max_d + 1) for word in step_words(d)]


def triangulations(max_n):
    return [T for n in range(MIN_N, max_n + 1) for T in all_triangulations(n)]


def crossing_pairs(T):
    """Crossing diagonals, neither in T, in lexicographic order."""
    free = [d for d in Polygon(T.n).diagonals if d not in T.diagonals]
    return [(a, b) for a, b in combinations(free, 2) if arcs_cross(a, b)]


def same_graph(a, b):
    if isinstance(a, EmptySnakeGraph) or isinstance(b, EmptySnakeGraph):
        return isinstance(a, EmptySnakeGraph) and isinstance(b, EmptySnakeGraph) and a.label == b.label
    return (a.steps, a.tile_labels, a.edge_labels, a.orientation) == \
        (b.steps, b.tile_labels, b.edge_labels, b.orientation)


def _describe(G):
    return G.label if isinstance(G, EmptySnakeGraph) else f"{G.steps or '-'} {list(G.tile_labels)}"


# Matching suites

def _boundary_check(G):
    def check():
        boundary = set(G.boundary_edges)
        only = [P for P in enumerate_matchings(G) if set(P.edges) <= boundary]
        minus, plus = boundary_matchings(G)
        if sorted(only, key=lambda P: P.edges) != sorted((minus, plus), key=lambda P: P.edges):
            return {'boundary_only': [str(P) for P in only], 'minus': str(minus), 'plus': str(plus)}
        if set(minus.edges) & set(plus.edges) or set(minus.edges) | set(plus.edges) != boundary:
            return {'minus': str(minus), 'plus': str(plus)}
        return None
    return check


def boundary_suite(max_d=8, random_d=None, samples=500, seed=0, workers=None):
    """Exactly two matchings use boundary edges only; random words beyond ``max_d``."""
    random_d = max_d + 2 if random_d is None else random_d
    instances = [Instance(G.steps or '-', _boundary_check(G)) for G in shapes(max_d)]
    if random_d > max_d:
        rng = np.random.default_rng(seed)
        for _ in range(samples):
            d = int(rng.integers(max_d + 1, random_d + 1))
            word = ''.join(rng.choice(['E', 'N'], size=d - 1))
            instances.append(Instance(word, _boundary_check(shape(word))))
    parameters = {'max_d': max_d, 'random_d': random_d, 'samples': samples if random_d > max_d else 0}
    return run_instances(BOUNDARY, instances, parameters, seed, workers)


def _face_sign(G, tile, face, seed):
    sign = G.tile_sign(tile, seed)
    return sign if face in ('S', 'E') else -sign


def _signs_check(G):
    def check():
        for seed in (1, -1):
            for j, step in enumerate(G.steps, start=1):
                lower = _face_sign(G, j, step, seed)
                upper = _face_sign(G, j + 1, 'W' if step == 'E' else 'S', seed)
                if lower != upper:
                    return {'seed': seed, 'interior_edge': j, 'signs': [lower, upper]}
            for j in range(1, G.d - 1):
                equal = G.interior_sign(j, seed) == G.interior_sign(j + 1, seed)
                turns = G.steps[j - 1] != G.steps[j]
                if equal != turns:
                    return {'seed': seed, 'interior_edge': j, 'equal_signs': equal, 'turns': turns}
        return None
    return check


def signs_suite(max_d=8, workers=None):
    """Both sign functions agree on aliases; equal consecutive interior signs mark a turn."""
    instances = [Instance(G.steps or '-', _signs_check(G)) for G in shapes(max_d)]
    return run_instances(SIGNS, instances, {'max_d': max_d}, workers=workers)


HAND_COUNTS = {'': 2, 'E': 3, 'N': 3, 'EN': 4, 'NE': 4, 'EE': 5, 'NN': 5}


def _count_check(G, expected=None):
    def check():
        enumerated = len(enumerate_matchings(G))
        counted = count_matchings(G)
        if counted != enumerated or (expected is not None and enumerated != expected):
            return {'enumerated': enumerated, 'recurrence': counted, 'expected': expected}
        return None
    return check


def counts_suite(max_d=12, workers=None):
    instances = [Instance(f"hand:{word or '-'}", _count_check(shape(word), expected))
                 for word, expected in HAND_COUNTS.items()]
    instances.extend(Instance(G.steps or '-', _count_check(G)) for G in shapes(max_d))
    return run_instances(COUNTS, instances, {'max_d': max_d}, workers=workers)


def _bijection_check(build_construction):
    def check():
        report = verify_bijection(build_construction())
        if not report.ok:
            return {**report.as_dict(), 'failures': report.failures[:5]}
        return None
    return check


def bijection_instances(max_d):
    instances = []
    for G1, G2 in product(shapes(max_d, 'a'), shapes(max_d, 'b')):
        name = f"{G1.steps or '-'}|{G2.steps or '-'}"
        for ov in find_overlaps(G1, G2):
            if crosses(G1, G2, ov):
                instances.append(Instance(f"{name}@{ov}",
                                          _bijection_check(lambda G1=G1, G2=G2, ov=ov: resolve(G1, G2, ov))))
        for s in range(0, G1.d + 1):
            for choice in ('N', 'E') if s in (0, G1.d) else (None,):
                instances.append(Instance(f"{name}#{s}{choice or ''}", _bijection_check(
                    lambda G1=G1, G2=G2, s=s, choice=choice: graft(G1, G2, s, choice))))
    return instances


def bijection_suite(max_d=4, workers=None):
    """phi is total and invertible with matching counts on every crossing and grafting."""
    return run_instances(BIJECTION, bijection_instances(max_d), {'max_d': max_d}, workers=workers)


# Surface suites

def _crossing_check(T, gamma1, gamma2):
    def check():
        oriented, ov = local_overlap(T, gamma1, gamma2)
        if ov is not None:
            G1, G2 = snake_graph(T, gamma1), snake_graph(T, oriented)
            if crosses(G1, G2, ov) != arcs_cross(gamma1, gamma2):
                return {'overlap': str(ov), 'arcs_cross': arcs_cross(gamma1, gamma2)}
        if not arcs_cross(gamma1, gamma2):
            return None
        crossing = resolve_crossing(T, gamma1, gamma2)
        construction = crossing.construction
        for arcs, graphs in ((crossing.arcs34, construction.pair34), (crossing.arcs56, construction.pair56)):
            for arc, G in zip(arcs, graphs):
                expected = snake_graph(T, arc)
                if not same_graph(expected, G):
                    return {'arc': str(arc), 'smoothing': _describe(expected), 'construction': _describe(G)}
        return None
    return check


def _fan_check(T, gamma):
    def check():
        found = [(fan.start, fan.end) for fan in fans(T, gamma)]
        runs = zigzag_runs(snake_graph(T, gamma))
        return None if found == runs else {'fans': found, 'zigzag_runs': runs}
    return check


def surface_suite(max_n=7, workers=None):
    """Arc crossings against snake graph crossings, and smoothings against resolutions."""
    instances = []
    for T in triangulations(max_n):
        free = [d for d in Polygon(T.n).diagonals if d not in T.diagonals]
        for gamma in free:
            instances.append(Instance(f"{T.n}:{T}:fans{gamma}", _fan_check(T, gamma)))
        for gamma1, gamma2 in combinations(free, 2):
            if arcs_cross(gamma1, gamma2) or set(crossing_sequence(T, gamma1)) & set(crossing_sequence(T, gamma2)):
                instances.append(Instance(f"{T.n}:{T}:{gamma1}x{gamma2}", _crossing_check(T, gamma1, gamma2)))
    return run_instances(SURFACE, instances, {'max_n': max_n}, workers=workers)


def _identity_check(T, gamma1, gamma2):
    def check():
        crossing = resolve_crossing(T, gamma1, gamma2)
        identity = crossing_identity(T, crossing)
        if not identity.ok:
            return {'identity': identity.as_dict()}
        skein = skein_relation(T, gamma1, gamma2)
        if not skein.ok:
            return {'skein': {'lhs': str(skein.lhs), 'rhs': str(skein.rhs)}}
        report = verify_bijection(crossing.construction, unit_labels=T.polygon.boundary_labels)
        if not report.ok:
            return {'bijection': report.failures[:5]}
        return None
    return check


def identities_suite(max_n=7, workers=None):
    """Laurent identities of resolutions and graftings, and the skein relation of cluster variables."""
    instances = [Instance(f"{T.n}:{T}:{gamma1}x{gamma2}", _identity_check(T, gamma1, gamma2))
                 for T in triangulations(max_n) for gamma1, gamma2 in crossing_pairs(T)]
    return run_instances(IDENTITIES, instances, {'max_n': max_n}, workers=workers)


def _oracle_check(T, gamma, path_independence):
    def check():
        expected = oracle_cluster_variable(T, gamma)
        found = cluster_variable(T, gamma)
        if found != expected:
            return {'snake_graph': str(found), 'mutation': str(expected)}
        if not found.has_positive_coefficients():
            return {'negative_coefficient': str(found)}
        if path_independence:
            other = oracle_cluster_variable(T, gamma, flip_path(T, gamma, farthest=True))
            if other != expected:
                return {'nearest_path': str(expected), 'farthest_path': str(other)}
        return None
    return check


def oracle_suite(max_n=7, path_independence_n=7, workers=None):
    """Snake graph cluster variables against mutation from the principal seed."""
    instances = [Instance(f"{T.n}:{T}:{gamma}", _oracle_check(T, gamma, T.n <= path_independence_n))
                 for T in triangulations(max_n)
                 for gamma in Polygon(T.n).diagonals if gamma not in T.diagonals]
    parameters = {'max_n': max_n, 'path_independence_n': min(max_n, path_independence_n)}
    return run_instances(ORACLE, instances, parameters, workers=workers)


SUITES = {
    BOUNDARY: boundary_suite,
    SIGNS: signs_suite,
    COUNTS: counts_suite,
    BIJECTION: bijection_suite,
    SURFACE: surface_suite,
    IDENTITIES: identities_suite,
    ORACLE: oracle_suite,
}


def acceptance_suites(max_d=None, max_n=None, seed=0, workers=None):
    """The full acceptance set; ``max_d`` and ``max_n`` cap the corpus sizes."""
    def cap_d(default):
        return default if max_d is None else min(default, max_d)

    def cap_n(default):
        return default if max_n is None else min(default, max_n)

    return [
        boundary_suite(cap_d(8), random_d=cap_d(10), seed=seed, workers=workers),
        signs_suite(cap_d(8), workers=workers),
        counts_suite(cap_d(12), workers=workers),
        bijection_suite(cap_d(5), workers=workers),
        surface_suite(cap_n(8), workers=workers),
        identities_suite(cap_n(9), workers=workers),
        oracle_suite(cap_n(8), workers=workers),
    ]
