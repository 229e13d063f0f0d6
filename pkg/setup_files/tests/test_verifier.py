import json
import os
import tempfile
import unittest

from sarcverify import CatalogError, ParameterError, Verifier
from sarcverify.cli import main

LONG_TESTS = os.environ.get('SARCVERIFY_LONG_TESTS') == '1'


def strip_timestamp(report):
    return {k: v for k, v in report.items() if k != 'timestamp'}


class TestVerifier(unittest.TestCase):

    def test_small_run(self):
        v = Verifier(n_min=5, n_max=6, degree_cap=500)
        report = v.verify()
        self.assertEqual(v.violations(), [])
        self.assertEqual(report['inconsistencies'], [])
        self.assertEqual(len(report['records']), 16)
        self.assertTrue(all(rec['degree'] <= 500 for rec in report['records']))
        self.assertTrue(all(rec['primitive'] for rec in report['records']))
        self.assertEqual(report['rejections'], [])
        self.assertIn('holds', v.conjecture_status())
        for rec in report['records']:
            self.assertEqual(sum(o['valency'] for o in rec['orbitals']), rec['degree'] - 1)
        df = v.df_actions()
        self.assertEqual(len(df), 16)
        self.assertIn('digraphs', df.columns)
        self.assertEqual(len(v.df_orbitals()), sum(len(rec['orbitals']) for rec in report['records']))

    def test_degree_cap_one(self):
        v = Verifier(n_min=5, n_max=5, degree_cap=1)
        report = v.verify()
        self.assertEqual(report['records'], [])
        self.assertEqual(report['summary']['digraphs_checked'], 0)
        self.assertIsNone(report['summary']['max_s_observed'])
        self.assertGreater(len(report['exclusions']), 0)
        self.assertEqual(v.conjecture_status(), 's <= 2 holds vacuously: no digraph checked')

    def test_non_maximal_affine_rejected(self):
        v = Verifier(n_min=7, n_max=7, group_types=['alt'], families=['c'])
        report = v.verify()
        self.assertEqual(len(report['records']), 1)
        rec = report['records'][0]
        self.assertEqual(rec['degree'], 120)
        self.assertEqual(rec['stabilizer_order'], 21)
        self.assertFalse(rec['primitive'])
        self.assertEqual(rec['bound_status'], 'excluded')
        self.assertEqual(len(report['rejections']), 1)
        self.assertEqual(report['rejections'][0]['reason'], 'coset action imprimitive')
        self.assertEqual(report['inconsistencies'], [])
        self.assertEqual(v.violations(), [])
        for o in rec['orbitals']:
            if o['digraph'] and o['degenerate'] is None:
                self.assertLessEqual(o['s_max'], 1)

    def test_deterministic_report(self):
        first = Verifier(n_min=5, n_max=5).verify()
        second = Verifier(n_min=5, n_max=5).verify()
        self.assertEqual(json.dumps(strip_timestamp(first), sort_keys=True),
                         json.dumps(strip_timestamp(second), sort_keys=True))

    def test_save_and_load(self):
        v = Verifier(n_min=5, n_max=5, families=['a', 'c'])
        v.verify()
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'report.json')
            v.save_report(path)
            v.save_tables(os.path.join(tmp, 'run'))
            self.assertTrue(os.path.exists(os.path.join(tmp, 'run_actions.csv')))
            self.assertTrue(os.path.exists(os.path.join(tmp, 'run_orbitals.csv')))
            other = Verifier(n_min=6, n_max=6, families=['a'])
            doc = other.load_report(path)
        self.assertEqual(doc['schema_version'], 1)
        self.assertIsNotNone(doc['timestamp'])
        self.assertEqual(other.n_range, [5])
        self.assertEqual(other.summary(), v.summary())

    def test_parameters(self):
        with self.assertRaises(ParameterError):
            Verifier(n_min=4)
        with self.assertRaises(ParameterError):
            Verifier(n_min=6, n_max=5)
        with self.assertRaises(ParameterError):
            Verifier(degree_cap=0)
        with self.assertRaises(ParameterError):
            Verifier(group_types=['cyclic'])
        with self.assertRaises(ParameterError):
            Verifier(families=['z'])
        with self.assertRaises(CatalogError):
            Verifier(catalog_path='/nonexistent/catalog.json')
        v = Verifier(families=['subsets', 'affine', 'a'])
        self.assertEqual(v.families, ['a', 'c'])
        self.assertEqual(v.catalog, [])

    @unittest.skipUnless(LONG_TESTS, 'set SARCVERIFY_LONG_TESTS=1 for the full run')
    def test_full_run(self):
        v = Verifier(n_min=5, n_max=9)
        report = v.verify()
        self.assertEqual(v.violations(), [])
        self.assertEqual(report['inconsistencies'], [])
        labels = {r['label'] for r in report['rejections']}
        self.assertIn('7:3 < A7', labels)
        self.assertIn('PSL(2,7) < A8', labels)


class TestCommandLine(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def path(self, name):
        return os.path.join(self.tmp.name, name)

    def read(self, name):
        with open(self.path(name)) as f:
            return json.load(f)

    def test_verify(self):
        code = main(['verify', '--n-min', '5', '--n-max', '5', '--out', self.path('r.json'),
                     '--tables', self.path('run')])
        self.assertEqual(code, 0)
        doc = self.read('r.json')
        self.assertEqual(doc['summary']['violations'], [])
        self.assertEqual(doc['parameters']['n_range'], [5])
        self.assertTrue(os.path.exists(self.path('run_actions.csv')))

    def test_verify_usage_errors(self):
        self.assertEqual(main(['verify', '--n-min', '4']), 2)
        self.assertEqual(main(['verify', '--catalog', self.path('missing.json')]), 2)

    def test_inspect_incomplete_family(self):
        self.assertEqual(main(['inspect', 'orbitals', '--family', 'subsets', '--m', '2']), 2)
        self.assertEqual(main(['inspect', 'orbitals', '--family', 'partitions', '--n', '6']), 2)
        self.assertEqual(main(['inspect', 'orbitals', '--family', 'affine']), 2)
        self.assertEqual(main(['inspect', 'action', '--family', 'affine', '--p', '2']), 2)
        self.assertEqual(main(['inspect', 'action', '--family', 'product', '--m', '5']), 2)
        self.assertEqual(main(['inspect', 'action', '--family', 'partitions', '--n', '6', '--m', '0']), 2)

    def test_inspect_orbitals(self):
        code = main(['inspect', 'orbitals', '--n', '5', '--group', 'sym', '--family', 'subsets', '--m', '2',
                     '--out', self.path('o.json')])
        self.assertEqual(code, 0)
        doc = self.read('o.json')
        self.assertEqual(doc['degree'], 10)
        self.assertEqual(sorted(o['valency'] for o in doc['orbitals']), [3, 6])
        self.assertTrue(all(o['pairing'] == 'self_paired' for o in doc['orbitals']))

    def test_inspect_smax(self):
        code = main(['inspect', 'smax', '--fixture', 'frobenius21', '--orbital', '0',
                     '--out', self.path('s.json'), '--export', self.path('edges.txt')])
        self.assertEqual(code, 0)
        doc = self.read('s.json')
        self.assertEqual(doc['result']['s_max'], 1)
        self.assertEqual(doc['orbital']['pairing'], 'paired_with:1')
        self.assertTrue(os.path.exists(self.path('edges.txt')))
        code = main(['inspect', 'smax', '--fixture', 'directed_cycle', '--method', 'brute_force', '--cap', '3',
                     '--out', self.path('c.json')])
        self.assertEqual(code, 0)
        self.assertEqual(self.read('c.json')['result']['label'], 'unbounded(3)')
        self.assertEqual(main(['inspect', 'smax', '--fixture', 'frobenius21', '--orbital', '5']), 2)

    def test_inspect_action(self):
        code = main(['inspect', 'action', '--n', '8', '--group', 'alt', '--family', 'affine', '--k', '3', '--p', '2',
                     '--out', self.path('a.json')])
        self.assertEqual(code, 0)
        doc = self.read('a.json')
        self.assertEqual(doc['degree'], 15)
        self.assertEqual(doc['stabilizer_order'], 1344)
        self.assertTrue(doc['primitive'])
        self.assertEqual(main(['inspect', 'action', '--catalog-entry', '3', '--out', self.path('b.json')]), 0)
        self.assertFalse(self.read('b.json')['primitive'])


if __name__ == '__main__':
    unittest.main()
