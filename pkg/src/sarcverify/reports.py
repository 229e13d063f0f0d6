"""
Report assembly, persistence and tabular views of a verification run.
"""

import json
import logging
from datetime import datetime, timezone

import pandas as pd

from .verification import counted

logger = logging.getLogger(__name__)

REPORT_SCHEMA_VERSION = 1


def violations(self):
    """Counted digraphs of primitive actions with s_max > 2."""
    out = []
    for rec in self.records:
        if not rec['primitive']:
            continue
        for o in rec['orbitals']:
            if counted(o) and o['s_max'] > 2:
                out.append({'label': rec['label'], 'n': rec['n'], 'group_type': rec['group_type'],
                            'degree': rec['degree'], 'orbital_id': o['orbital_id'],
                            'valency': o['valency'], 's_max': o['s_max']})
    return out


def summary(self):
    digraphs = [o for rec in self.records if rec['primitive'] for o in rec['orbitals'] if counted(o)]
    s_values = [o['s_max'] for o in digraphs]
    return {'actions_checked': len(self.records),
            'primitive_actions': sum(rec['primitive'] for rec in self.records),
            'digraphs_checked': len(digraphs),
            'max_s_observed': max(s_values) if s_values else None,
            'violations': self.violations()}


def conjecture_status(self) -> str:
    s = self.summary()
    if s['violations']:
        return f"s <= 2 fails on {len(s['violations'])} digraphs"
    if s['digraphs_checked'] == 0:
        return 's <= 2 holds vacuously: no digraph checked'
    if s['max_s_observed'] == 2:
        return f"s <= 2 holds on {s['digraphs_checked']} digraphs, s = 2 attained"
    return f"s <= 2 holds on {s['digraphs_checked']} digraphs, largest s observed {s['max_s_observed']}"


def report(self):
    """
    The report as a JSON-ready dict. Two runs with the same parameters give the same
    document up to `timestamp`.
    """
    return {'schema_version': REPORT_SCHEMA_VERSION,
            'tool_version': self.tool_version,
            'timestamp': self.timestamp,
            'parameters': {'n_range': self.n_range, 'group_types': self.group_types,
                           'families': self.families, 'degree_cap': self.degree_cap,
                           's_cap': self.s_cap, 'oracle_budget': self.oracle_budget},
            'catalog_sha256': self.catalog_sha256,
            'records': self.records,
            'rejections': self.rejections,
            'exclusions': self.exclusions,
            'inconsistencies': self.inconsistencies,
            'summary': self.summary(),
            'conjecture_status': self.conjecture_status()}


def save_report(self, path):
    self.timestamp = datetime.now(timezone.utc).isoformat(timespec='seconds')
    with open(path, 'w') as f:
        json.dump(self.report(), f, indent=2, sort_keys=True)
    logger.info(f'report written to {path}')


def load_report(self, path):
    '''
    Reads a report written by save_report back into the Verifier.

    Attributes Initialized
    ---------- -----------
        records, rejections, exclusions, inconsistencies, the run parameters,
        catalog_sha256, timestamp
    '''
    with open(path) as f:
        doc = json.load(f)
    params = doc['parameters']
    self.n_range = params['n_range']
    self.group_types = params['group_types']
    self.families = params['families']
    self.degree_cap = params['degree_cap']
    self.s_cap = params['s_cap']
    self.oracle_budget = params['oracle_budget']
    self.catalog_sha256 = doc['catalog_sha256']
    self.timestamp = doc['timestamp']
    for key in ('records', 'rejections', 'exclusions', 'inconsistencies'):
        setattr(self, key, doc[key])
    return doc


def df_actions(self):
    cols = ['n', 'group_type', 'source', 'family', 'label', 'degree', 'stabilizer_order',
            'primitive', 'bound_status']
    df = pd.DataFrame(self.records, columns=cols + ['orbitals'])
    df['orbitals'] = df['orbitals'].apply(len)
    df['digraphs'] = [sum(counted(o) for o in rec['orbitals']) for rec in self.records]
    return df


def df_orbitals(self):
    rows = []
    for i, rec in enumerate(self.records):
        for o in rec['orbitals']:
            rows.append({'action': i, 'label': rec['label'], 'n': rec['n'], 'group_type': rec['group_type'],
                         'degree': rec['degree'], 'stabilizer_order': rec['stabilizer_order'],
                         'orbital_id': o['orbital_id'], 'valency': o['valency'], 'pairing': o['pairing'],
                         'degenerate': o['degenerate'], 's_max': o['s_max'], 'method': o['method'],
                         'divisibility_cap': o['divisibility_cap'], 'oracle_s_max': o['oracle_s_max']})
    return pd.DataFrame(rows)


def save_tables(self, prefix):
    self.df_actions().to_csv(f'{prefix}_actions.csv', index=False)
    self.df_orbitals().to_csv(f'{prefix}_orbitals.csv', index=False)
