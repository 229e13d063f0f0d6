import json
import os
import tempfile
import unittest

from sarcverify import CatalogEntry, CatalogError, instantiate, load_catalog
from sarcverify.catalog import catalog_sha256


def write_catalog(directory, doc, name='catalog.json'):
    path = os.path.join(directory, name)
    with open(path, 'w') as f:
        if isinstance(doc, str):
            f.write(doc)
        else:
            json.dump(doc, f)
    return path


class TestLoad(unittest.TestCase):

    def test_seed_catalog(self):
        entries = load_catalog()
        self.assertEqual(len(entries), 7)
        self.assertEqual(entries[0].label, 'PSL(2,5) < A6')
        self.assertEqual(entries[0].family, 'almost_simple')
        self.assertEqual(len(catalog_sha256()), 64)

    def test_bad_files(self):
        good_entry = {'n': 6, 'group': 'alt', 'family': 'f', 'generators': ['(2 3 4 5 6)']}
        with tempfile.TemporaryDirectory() as d:
            cases = [
                '{"version": 1, "entries": [',
                {'version': 2, 'entries': [good_entry]},
                {'version': 1, 'entries': [dict(good_entry, generators=['(1 2 2)'])]},
                {'version': 1, 'entries': [dict(good_entry, generators=['(1 9)'])]},
                {'version': 1, 'entries': [dict(good_entry, group='cyclic')]},
                {'version': 1, 'entries': [{'group': 'alt'}]},
            ]
            for i, doc in enumerate(cases):
                with self.assertRaises(CatalogError):
                    load_catalog(write_catalog(d, doc, f'c{i}.json'))
            with self.assertRaises(CatalogError):
                load_catalog(os.path.join(d, 'missing.json'))
            entries = load_catalog(write_catalog(d, {'version': 1, 'entries': [good_entry]}))
            self.assertEqual(entries[0].family, 'almost_simple')


class TestInstantiate(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.entries = {e.label: e for e in load_catalog()}

    def test_psl25(self):
        inst = instantiate(self.entries['PSL(2,5) < A6'])
        self.assertTrue(inst.accepted)
        self.assertEqual(inst.action.degree, 6)
        self.assertEqual(inst.subgroup_order, 60)
        self.assertTrue(inst.action.induced.is_primitive())

    def test_pgl25(self):
        inst = instantiate(self.entries['PGL(2,5) < S6'])
        self.assertTrue(inst.accepted)
        self.assertEqual(inst.action.degree, 6)

    def test_psl32(self):
        inst = instantiate(self.entries['PSL(3,2) < A7'])
        self.assertTrue(inst.accepted)
        self.assertEqual(inst.subgroup_order, 168)
        self.assertEqual(inst.action.degree, 15)

    def test_frobenius_rejected(self):
        inst = instantiate(self.entries['7:3 < A7'])
        self.assertFalse(inst.accepted)
        self.assertEqual(inst.reason, 'coset action imprimitive')
        self.assertEqual(inst.action.degree, 120)
        self.assertFalse(inst.witness.is_trivial())
        record = inst.rejection_record()
        self.assertEqual(record['subgroup_order'], 21)
        self.assertEqual(len(record['witness']), inst.witness.block_count)

    def test_psl27_rejected(self):
        inst = instantiate(self.entries['PSL(2,7) < A8'])
        self.assertFalse(inst.accepted)
        self.assertEqual(inst.subgroup_order, 168)
        self.assertEqual(inst.action.degree, 120)

    def test_whole_group_rejected(self):
        entry = CatalogEntry(6, 'alt', 'almost_simple', ('(2 3 4 5 6)', '(1 2 3)'), 'A6 itself')
        inst = instantiate(entry)
        self.assertFalse(inst.accepted)
        self.assertEqual(inst.reason, 'subgroup not proper')
        self.assertIsNone(inst.action)

    def test_odd_generators_rejected(self):
        entry = CatalogEntry(5, 'alt', 'almost_simple', ('(1 2)',), 'a transposition')
        inst = instantiate(entry)
        self.assertFalse(inst.accepted)
        self.assertEqual(inst.reason, 'generators outside alt5')
        self.assertIsNone(inst.rejection_record()['witness'])


if __name__ == '__main__':
    unittest.main()
