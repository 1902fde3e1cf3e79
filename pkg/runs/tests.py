import json
import logging
from datetime import timedelta
from io import StringIO
from unittest.mock import patch

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import TestCase, override_settings
from django.utils import timezone
from hypothesis import given, strategies as st
from hypothesis.extra.django import TestCase as HypothesisTestCase
from rest_framework import status
from rest_framework.test import APITestCase

from snakegraphs.exceptions import InvalidSteps

from . import suites
from .filters import RunReportFilter
from .models import LogEntry, RunReport


def make_report(suite='signs', status='passed', instance_count=7, **kwargs):
    return RunReport.objects.create(suite=suite, status=status, instance_count=instance_count,
                                    passed=instance_count if status == 'passed' else 0,
                                    failed=0 if status == 'passed' else instance_count, **kwargs)


class RunReportModelTests(TestCase):
    def test_str(self):
        self.assertEqual(str(make_report()), 'signs - passed (7/7)')

    def test_json_fields(self):
        report = make_report(counterexample=json.dumps({'instance': 'EN'}), parameters=json.dumps({'max_d': 3}))
        self.assertEqual(report.counterexample_data, {'instance': 'EN'})
        self.assertEqual(report.parameters_data, {'max_d': 3})
        self.assertIsNone(make_report().counterexample_data)

    def test_database_log_handler(self):
        RunReport.objects.count()
        logging.getLogger('runs.suites').warning('Suite signs: 0/1 passed', extra={'suite': 'signs'})
        entry = LogEntry.objects.get(suite='signs')
        self.assertEqual(entry.level, 'WARNING')
        self.assertIn('0/1 passed', str(entry))


class SuiteTests(TestCase):
    def test_signs(self):
        report = suites.signs_suite(max_d=3)
        self.assertTrue(report.ok, report.counterexample)
        self.assertEqual(report.instance_count, 7)

    def test_counts(self):
        report = suites.counts_suite(max_d=4)
        self.assertTrue(report.ok, report.counterexample)
        self.assertEqual(report.instance_count, len(suites.HAND_COUNTS) + 15)

    def test_boundary_without_sampling(self):
        report = suites.boundary_suite(max_d=3, random_d=3)
        self.assertTrue(report.ok, report.counterexample)
        self.assertEqual(report.parameters, {'max_d': 3, 'random_d': 3, 'samples': 0})

    def test_boundary_with_sampling(self):
        report = suites.boundary_suite(max_d=2, random_d=4, samples=5, seed=1)
        self.assertTrue(report.ok, report.counterexample)
        self.assertEqual((report.instance_count, report.seed), (3 + 5, 1))

    def test_first_failure_is_the_counterexample(self):
        def broken():
            raise InvalidSteps('bad word')

        instances = [
            suites.Instance('fine', lambda: None),
            suites.Instance('first', lambda: {'found': 1}),
            suites.Instance('second', broken),
        ]
        report = suites.run_instances('custom', instances, workers=2)
        self.assertEqual((report.passed, report.failed, report.status), (1, 2, 'failed'))
        self.assertEqual(report.counterexample, {'instance': 'first', 'problem': {'found': 1}})

    def test_persist(self):
        report = suites.run_instances('custom', [suites.Instance('fine', lambda: None)], {'max_d': 1}, seed=4)
        stored = suites.persist(report)
        self.assertEqual((stored.suite, stored.status, stored.seed), ('custom', 'passed', 4))
        self.assertEqual(stored.parameters_data, {'max_d': 1})

    @override_settings(SNAKECALC={'PERSIST_RUNS': False})
    def test_persistence_can_be_switched_off(self):
        self.assertIsNone(suites.persist(suites.SuiteReport('custom')))
        self.assertEqual(RunReport.objects.count(), 0)


class RunApiTests(APITestCase):
    def setUp(self):
        self.passed = make_report()
        self.failed = make_report('counts', 'failed', 30, counterexample=json.dumps({'instance': 'hand:EN'}))

    def test_list(self):
        response = self.client.get('/api/runs/')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['count'], 2)

    def test_filters(self):
        self.assertEqual(self.client.get('/api/runs/', {'status': 'failed'}).data['count'], 1)
        self.assertEqual(self.client.get('/api/runs/', {'suite': 'SIG'}).data['count'], 1)
        self.assertEqual(self.client.get('/api/runs/', {'min_instances': 10}).data['runs'][0]['suite'], 'counts')

    def test_detail(self):
        response = self.client.get(f'/api/runs/{self.failed.id}/')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['counterexample'], {'instance': 'hand:EN'})

    def test_missing_run(self):
        response = self.client.get('/api/runs/9999/')
        self.assertEqual(response.status_code, status.HTTP_404_NOT_FOUND)
        self.assertEqual(response.data, {'error': 'Run not found'})


class RunFilterPropertyTests(HypothesisTestCase):
    @given(st.lists(st.integers(0, 40), max_size=5), st.integers(0, 40))
    def test_min_instances(self, counts, threshold):
        for count in counts:
            make_report(instance_count=count)
        found = RunReportFilter({'min_instances': threshold}, queryset=RunReport.objects.all()).qs
        self.assertEqual(found.count(), sum(1 for count in counts if count >= threshold))


class CleanupCommandTests(TestCase):
    def test_removes_old_reports_only(self):
        old, recent = make_report(), make_report('counts')
        RunReport.objects.filter(id=old.id).update(created_at=timezone.now() - timedelta(days=40))
        out = StringIO()
        call_command('cleanup_runs', '--days', '30', stdout=out)
        self.assertIn('Deleted 1 run reports', out.getvalue())
        self.assertEqual(list(RunReport.objects.values_list('id', flat=True)), [recent.id])


class SnakecalcCommandTests(TestCase):
    def run_command(self, *args):
        out = StringIO()
        call_command('snakecalc', *args, stdout=out)
        return out.getvalue().strip()

    def test_gen(self):
        self.assertEqual(self.run_command('gen', '--steps', 'EN'), 'EN: 3 tiles, 10 edges')

    def test_count_only(self):
        self.assertEqual(self.run_command('matchings', '--steps', 'EN', '--count-only'), '4')

    def test_domain_errors_are_usage_errors(self):
        with self.assertRaises(CommandError) as raised:
            self.run_command('gen', '--steps', 'XY')
        self.assertEqual(raised.exception.returncode, 2)

    def test_polygon_json(self):
        data = json.loads(self.run_command('polygon', 'xvar', '--n', '5', '--tri', '1-3,1-4', '--arc', '2,4', '--json'))
        self.assertEqual(data, {'arc': '(2,4)', 'x': 'x1_3^-1*x1_4 + x1_3^-1*y1_3'})

    def test_check_identity_on_arcs(self):
        output = self.run_command('check-identity', '--n', '5', '--tri', '1-3,1-4', '--arcs', '2,4', '3,5')
        self.assertTrue(output.startswith('ok'))

    def test_suite_is_persisted(self):
        output = self.run_command('suite', '--signs', '--max-d', '3')
        self.assertIn('signs: 7/7 passed', output)
        self.assertEqual(RunReport.objects.get(suite='signs').instance_count, 7)

    def test_suite_needs_a_selection(self):
        with self.assertRaises(CommandError) as raised:
            self.run_command('suite')
        self.assertEqual(raised.exception.returncode, 2)

    def test_gen_labels(self):
        auto = json.loads(self.run_command('gen', '--steps', 'EN', '--labels', 'auto', '--json'))
        self.assertEqual(auto['tile_labels'], ['t1', 't2', 't3'])
        given_labels = json.loads(self.run_command('gen', '--steps', 'EN', '--tiles', 'a,b,c', '--json'))
        self.assertEqual(given_labels['tile_labels'], ['a', 'b', 'c'])

    def test_overlap_labeled_flag(self):
        pair = ('overlap', '--g1', 'NEEN', '--g2', 'EE')
        self.assertEqual(self.run_command(*pair, '--labeled'), self.run_command(*pair, '--mode', 'labeled'))

    def test_phi_matching_options(self):
        construction = ('phi', '--g1', '-', '--g2', '-', '--s', '1', '--edge', 'E')
        output = self.run_command(*construction, '--p1', '1:N,1:S', '--p2', '1:N,1:S')
        self.assertEqual(output, self.run_command(*construction, '--m1', '1:N,1:S', '--m2', '1:N,1:S'))
        self.assertTrue(output.startswith(('34:', '56:')))

    def test_polygon_skein(self):
        output = self.run_command(
            'polygon', 'skein', '--n', '6', '--tri', '1-3,1-4,1-5', '--arc', '2,5', '--arc2', '3,6',
        )
        self.assertTrue(output.startswith('ok'))

    def test_polygon_smooth(self):
        data = json.loads(self.run_command(
            'polygon', 'smooth', '--n', '5', '--tri', '1-3,1-4', '--arc', '2,4', '--arc2', '3,5', '--json',
        ))
        self.assertEqual(data, {'pair34': ['(2,5)', '(3,4)'], 'pair56': ['(2,3)', '(5,4)']})
        with self.assertRaises(CommandError) as raised:
            self.run_command('polygon', 'smooth', '--n', '4', '--tri', '1-3', '--arc', '1,3', '--arc2', '2,4')
        self.assertEqual(raised.exception.returncode, 2)

    def test_acceptance_alias_runs_the_acceptance_set(self):
        small = [suites.signs_suite(max_d=2)]
        with patch.object(suites, 'acceptance_suites', return_value=small) as acceptance:
            output = self.run_command('suite', '--paper-identities', '--max-d', '2', '--max-n', '5')
        acceptance.assert_called_once_with(2, 5, 0, None)
        self.assertIn('signs: ', output)
        self.assertEqual(RunReport.objects.filter(suite='signs').count(), 1)
