import json
import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from laurent.identities import L, check_graft_identity, check_resolution_identity
from matchings.perfect import PerfectMatching, count_matchings, enumerate_matchings, heights
from resolutions.bijection import phi, verify_bijection
from resolutions.construction import PRINTED, PROOF, describe, graft, resolve
from runs import suites
from snakegraphs.exceptions import SnakeCalculusError
from snakegraphs.graph import EdgeRef, build, from_dict, to_dict
from snakegraphs.overlap import LABELED, SHAPE, Overlap, crosses, find_overlaps
from snakegraphs.render import render
from surfaces.oracle import oracle_cluster_variable
from surfaces.polygon import (
    Arc,
    Triangulation,
    b_matrix,
    cluster_variable,
    f_polynomial,
    fans,
    resolve_crossing,
    skein_relation,
    smooth,
    snake_graph,
)

logger = logging.getLogger(__name__)

USAGE = 2
VERIFICATION_FAILED = 1

SUITE_FLAGS = (
    ('boundary', suites.BOUNDARY),
    ('signs', suites.SIGNS),
    ('counts', suites.COUNTS),
    ('bijection', suites.BIJECTION),
    ('surface', suites.SURFACE),
    ('identities', suites.IDENTITIES),
    ('oracle', suites.ORACLE),
)


def load_graph(value):
    """A JSON file holding a graph, or a step word ('-' for a single tile)."""
    if value is None:
        raise CommandError("A graph is required", returncode=USAGE)
    path = Path(value)
    if value.endswith('.json') or path.is_file():
        try:
            return from_dict(json.loads(path.read_text()))
        except (OSError, ValueError) as e:
            raise CommandError(f"Cannot read graph file {value}: {e}", returncode=USAGE)
    return build('' if value == '-' else value)


def parse_matching(text):
    return PerfectMatching.of(EdgeRef.parse(part) for part in text.split(',') if part.strip())


def parse_triangulation(n, text):
    return Triangulation.parse(n, text or '')


class Command(BaseCommand):
    help = 'Snake graph calculus: build, resolve, graft, verify and run suites'

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest='subcommand', required=True)

        gen = subparsers.add_parser('gen', help='Build a snake graph')
        gen.add_argument('--steps', required=True)
        gen.add_argument('--labels', '--tiles', dest='labels', default='auto',
                         help="'auto' or comma separated tile labels")
        gen.add_argument('--orientation', type=int, default=-1, choices=(-1, 1))

        render_parser = subparsers.add_parser('render', help='Draw a snake graph')
        render_parser.add_argument('--graph', required=True)
        render_parser.add_argument('--format', default='ascii', choices=('ascii', 'svg'))
        render_parser.add_argument('--legend', action='store_true')

        matchings = subparsers.add_parser('matchings', help='Enumerate perfect matchings')
        matchings.add_argument('--steps', dest='graph')
        matchings.add_argument('--graph', dest='graph')
        matchings.add_argument('--count-only', action='store_true')

        overlap = subparsers.add_parser('overlap', help='List overlaps and crossings')
        self._add_pair(overlap)
        overlap.add_argument('--mode', default=SHAPE, choices=(SHAPE, LABELED))
        overlap.add_argument('--labeled', dest='mode', action='store_const', const=LABELED, default=SHAPE)

        resolve_parser = subparsers.add_parser('resolve', help='Resolve a crossing overlap')
        self._add_pair(resolve_parser)
        resolve_parser.add_argument('--overlap', required=True, help='s,t,s_prime,t_prime')
        resolve_parser.add_argument('--convention', choices=(PRINTED, PROOF))

        graft_parser = subparsers.add_parser('graft', help='Graft G2 on G1')
        self._add_pair(graft_parser)
        self._add_site(graft_parser, required=True)

        phi_parser = subparsers.add_parser('phi', help='Image of a pair of matchings')
        self._add_construction(phi_parser)
        phi_parser.add_argument('--p1', '--m1', dest='p1', required=True, help="Edges of G1, e.g. '1:S,1:N'")
        phi_parser.add_argument('--p2', '--m2', dest='p2', required=True, help='Edges of G2')

        verify = subparsers.add_parser('verify-bijection', help='Check the matching bijection exhaustively')
        self._add_construction(verify)

        laurent = subparsers.add_parser('laurent', help='Laurent polynomial of labeled graphs')
        laurent.add_argument('--pair', nargs='+', required=True, help='Graph files of the disjoint union')
        laurent.add_argument('--allow-generated', action='store_true')

        identity = subparsers.add_parser('check-identity', help='Check a Laurent identity')
        identity.add_argument('--kind', choices=('resolution', 'graft'))
        self._add_construction(identity, required=False)
        identity.add_argument('--n', type=int, help='Polygon size for an arc pair')
        identity.add_argument('--tri', help="Triangulation, e.g. '1-3,1-4'")
        identity.add_argument('--arcs', nargs=2, help='Two crossing arcs, e.g. 2,4 3,5')
        identity.add_argument('--allow-generated', action='store_true')

        polygon = subparsers.add_parser('polygon', help='Arcs of a triangulated polygon')
        polygon.add_argument('action', choices=('snake', 'xvar', 'fpoly', 'smooth', 'skein', 'fans', 'bmatrix'))
        polygon.add_argument('--n', type=int, required=True)
        polygon.add_argument('--tri')
        polygon.add_argument('--arc')
        polygon.add_argument('--arc2')

        oracle = subparsers.add_parser('oracle', help='Cluster variables by mutation')
        oracle.add_argument('action', choices=('xvar', 'diff'))
        oracle.add_argument('--n', type=int, required=True)
        oracle.add_argument('--tri')
        oracle.add_argument('--arc')

        suite = subparsers.add_parser('suite', help='Run verification suites')
        for flag, _ in SUITE_FLAGS:
            suite.add_argument(f'--{flag}', action='store_true')
        suite.add_argument('--acceptance', '--paper-identities', dest='acceptance', action='store_true',
                           help='Run the full acceptance set')
        suite.add_argument('--max-d', type=int)
        suite.add_argument('--max-n', type=int)
        suite.add_argument('--seed', type=int, default=0)
        suite.add_argument('--workers', type=int)

        for subparser in subparsers.choices.values():
            subparser.add_argument('--json', action='store_true', help='Write JSON to stdout')

    def _add_pair(self, parser):
        parser.add_argument('--g1', required=True, help='Graph file or step word')
        parser.add_argument('--g2', required=True, help='Graph file or step word')

    def _add_site(self, parser, required):
        parser.add_argument('--s', type=int, required=required, help='Graft site')
        parser.add_argument('--edge', choices=('north', 'east', 'N', 'E'), help='Grafting edge at s=d')

    def _add_construction(self, parser, required=True):
        parser.add_argument('--g1', required=required)
        parser.add_argument('--g2', required=required)
        parser.add_argument('--overlap', help='s,t,s_prime,t_prime for a resolution')
        self._add_site(parser, required=False)

    def handle(self, *args, **options):
        handlers = {
            'gen': self.gen,
            'render': self.render,
            'matchings': self.matchings,
            'overlap': self.overlap,
            'resolve': self.resolve,
            'graft': self.graft,
            'phi': self.phi,
            'verify-bijection': self.verify_bijection,
            'laurent': self.laurent,
            'check-identity': self.check_identity,
            'polygon': self.polygon,
            'oracle': self.oracle,
            'suite': self.suite,
        }
        try:
            handlers[options['subcommand']](options)
        except SnakeCalculusError as e:
            logger.error(f"snakecalc {options['subcommand']} error: {str(e)}")
            raise CommandError(f"{type(e).__name__}: {e}", returncode=USAGE)

    def emit(self, options, data, text=None):
        if options['json'] or text is None:
            self.stdout.write(json.dumps(data, indent=2, sort_keys=True))
        else:
            self.stdout.write(text)

    def construction(self, options):
        G1, G2 = load_graph(options['g1']), load_graph(options['g2'])
        if options.get('overlap'):
            return resolve(G1, G2, Overlap.parse(options['overlap']), options.get('convention'))
        if options.get('s') is None:
            raise CommandError("Give --overlap for a resolution or --s for a grafting", returncode=USAGE)
        return graft(G1, G2, options['s'], options.get('edge'))

    def gen(self, options):
        tiles = None if options['labels'] == 'auto' else options['labels'].split(',')
        G = build(options['steps'], tiles, orientation=options['orientation'])
        self.emit(options, to_dict(G), f"{G.steps or '-'}: {G.d} tiles, {len(G.edges)} edges")

    def render(self, options):
        G = load_graph(options['graph'])
        drawing = render(G, options['format'], options['legend'])
        self.emit(options, {'format': options['format'], 'drawing': drawing}, drawing)

    def matchings(self, options):
        G = load_graph(options['graph'])
        if options['count_only']:
            count = count_matchings(G)
            self.emit(options, {'count': count}, str(count))
            return
        found = enumerate_matchings(G)
        rows = [{'edges': [str(e) for e in P], 'heights': list(heights(G, P))} for P in found]
        self.emit(options, {'count': len(found), 'matchings': rows}, '\n'.join(str(P) for P in found))

    def overlap(self, options):
        G1, G2 = load_graph(options['g1']), load_graph(options['g2'])
        rows = [{'overlap': str(ov), 'crossing': crosses(G1, G2, ov)} for ov in find_overlaps(G1, G2, options['mode'])]
        text = '\n'.join(f"{row['overlap']}{' crossing' if row['crossing'] else ''}" for row in rows)
        self.emit(options, {'overlaps': rows}, text or 'no overlaps')

    def resolve(self, options):
        self.emit(options, describe(self.construction(options)))

    def graft(self, options):
        self.emit(options, describe(self.construction(options)))

    def phi(self, options):
        construction = self.construction(options)
        image = phi(construction, parse_matching(options['p1']), parse_matching(options['p2']))
        data = {'branch': image.branch, 'matchings': [[str(e) for e in P] for P in image.matchings]}
        self.emit(options, data, f"{image.branch}: " + ' | '.join(str(P) for P in image.matchings))

    def verify_bijection(self, options):
        report = verify_bijection(self.construction(options))
        self.emit(options, report.as_dict(), f"{report.kind}: {'ok' if report.ok else 'FAILED'} "
                                              f"({report.domain_size} = {report.image34} + {report.image56})")
        if not report.ok:
            raise CommandError(f"Bijection check failed: {report.failures[0]}", returncode=VERIFICATION_FAILED)

    def laurent(self, options):
        value = L([load_graph(path) for path in options['pair']], options['allow_generated'])
        self.emit(options, {'laurent': str(value)}, str(value))

    def check_identity(self, options):
        units = frozenset()
        if options['n'] is not None:
            if not options['arcs']:
                raise CommandError("--arcs is required with --n", returncode=USAGE)
            T = parse_triangulation(options['n'], options['tri'])
            construction = resolve_crossing(T, *(Arc.parse(arc) for arc in options['arcs'])).construction
            units = T.polygon.boundary_labels
        else:
            construction = self.construction(options)
        kind = describe(construction)['kind']
        if options['kind'] and options['kind'] != kind:
            raise CommandError(f"The input gives a {kind}, not a {options['kind']}", returncode=USAGE)
        check_function = check_graft_identity if kind == 'graft' else check_resolution_identity
        check = check_function(construction, allow_generated=options['allow_generated'], unit_labels=units)
        self.emit_check(options, check, "Identity check failed")

    def emit_check(self, options, check, failure):
        self.emit(options, check.as_dict(), f"{'ok' if check.ok else 'FAILED'}\n{check.lhs}\n{check.rhs}")
        if not check.ok:
            raise CommandError(failure, returncode=VERIFICATION_FAILED)

    def polygon(self, options):
        n, action = options['n'], options['action']
        T = parse_triangulation(n, options['tri'])
        if action == 'bmatrix':
            matrix = b_matrix(T).tolist()
            self.emit(options, {'diagonals': [list(d) for d in T.diagonals], 'B': matrix},
                      '\n'.join(' '.join(f"{v:2d}" for v in row) for row in matrix))
            return
        if not options['arc']:
            raise CommandError(f"polygon {action} needs --arc", returncode=USAGE)
        gamma = Arc.parse(options['arc'])
        if action == 'snake':
            G = snake_graph(T, gamma)
            self.emit(options, to_dict(G), render(G) if G.d else G.label)
        elif action == 'xvar':
            value = cluster_variable(T, gamma)
            self.emit(options, {'arc': str(gamma), 'x': str(value)}, str(value))
        elif action == 'fpoly':
            value = f_polynomial(T, gamma)
            self.emit(options, {'arc': str(gamma), 'f': str(value)}, str(value))
        elif action == 'fans':
            rows = [{'vertex': f.vertex, 'start': f.start, 'end': f.end} for f in fans(T, gamma)]
            self.emit(options, {'fans': rows}, '\n'.join(f"{r['vertex']}: {r['start']}..{r['end']}" for r in rows))
        elif not options['arc2']:
            raise CommandError(f"polygon {action} needs --arc2", returncode=USAGE)
        elif action == 'skein':
            self.emit_check(options, skein_relation(T, gamma, Arc.parse(options['arc2'])), "Skein relation failed")
        else:
            pair34, pair56 = smooth(gamma, Arc.parse(options['arc2']), n)
            data = {'pair34': [str(a) for a in pair34], 'pair56': [str(a) for a in pair56]}
            self.emit(options, data, f"{data['pair34']} {data['pair56']}")

    def oracle(self, options):
        if options['action'] == 'diff':
            report = suites.oracle_suite(max_n=options['n'])
            self.report([report], options)
            return
        if not options['arc']:
            raise CommandError("oracle xvar needs --arc", returncode=USAGE)
        T = parse_triangulation(options['n'], options['tri'])
        value = oracle_cluster_variable(T, Arc.parse(options['arc']))
        self.emit(options, {'arc': options['arc'], 'x': str(value)}, str(value))

    def suite(self, options):
        selected = [name for flag, name in SUITE_FLAGS if options[flag]]
        if options['acceptance']:
            reports = suites.acceptance_suites(options['max_d'], options['max_n'], options['seed'], options['workers'])
        elif selected:
            reports = [self.run_suite(name, options) for name in selected]
        else:
            raise CommandError("Select at least one suite or --acceptance", returncode=USAGE)
        self.report(reports, options)

    def run_suite(self, name, options):
        kwargs = {'workers': options['workers']}
        if name in (suites.SURFACE, suites.IDENTITIES, suites.ORACLE):
            if options['max_n'] is not None:
                kwargs['max_n'] = options['max_n']
        elif options['max_d'] is not None:
            kwargs['max_d'] = options['max_d']
        if name == suites.BOUNDARY:
            kwargs['seed'] = options['seed']
        return suites.SUITES[name](**kwargs)

    def report(self, reports, options):
        for report in reports:
            suites.persist(report)
            if not options['json']:
                line = f"{report.suite}: {report.passed}/{report.instance_count} passed ({report.wall_time:.2f}s)"
                self.stdout.write(self.style.SUCCESS(line) if report.ok else self.style.ERROR(line))
        if options['json']:
            self.stdout.write(json.dumps([r.as_dict() for r in reports], indent=2, sort_keys=True))
        failed = [r.suite for r in reports if not r.ok]
        if failed:
            raise CommandError(f"Suites failed: {', '.join(failed)}", returncode=VERIFICATION_FAILED)
