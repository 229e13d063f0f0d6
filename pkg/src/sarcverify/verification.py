"""
The verification pipeline: one task per action, each task builds its action, its
orbital digraphs and their s_max, and returns plain dicts that the Verifier collects.
"""

import logging
from typing import Dict, List, Optional, Tuple

from joblib import Parallel, delayed, parallel_backend

from .catalog import CatalogEntry, instantiate
from .errors import CapacityError
from .maximal_actions import ActionSpec, enumerate_family_actions
from .orbital_operations import classify_degenerate, orbitals
from .sarc_operations import oracle_cap, s_max_bruteforce, s_max_criterion

logger = logging.getLogger(__name__)


def analyse_orbital(action, digraph, s_cap: int, oracle_budget: int) -> Tuple[Dict, List[Dict]]:
    """
    Summary of one orbital, with s_max for antisymmetric ones, and the disagreements
    found between the criterion, the brute-force oracle and the divisibility bound.
    """
    summary = digraph.summary()
    summary.update(digraph=digraph.is_digraph(), degenerate=classify_degenerate(digraph),
                   in_valency=digraph.in_valency(), s_max=None, s_label=None, method=None,
                   divisibility_cap=None, witness_arc_path=None, oracle_s_max=None, oracle_cap=None)
    issues = []
    if not digraph.is_digraph():
        return summary, issues
    res = s_max_criterion(action, digraph, cap=s_cap)
    summary.update(s_max=res.s_max, s_label=res.label, method=res.method,
                   divisibility_cap=res.divisibility_cap, witness_arc_path=res.witness_arc_path)
    if res.divisibility_cap is not None and res.s_max > res.divisibility_cap:
        issues.append({'orbital_id': digraph.orbital_id, 'kind': 'divisibility',
                       's_max': res.s_max, 'divisibility_cap': res.divisibility_cap})
    bf_cap = oracle_cap(digraph, s_cap, oracle_budget)
    if bf_cap >= 1:
        bf = s_max_bruteforce(action, digraph, cap=bf_cap, budget=oracle_budget)
        summary.update(oracle_s_max=bf.s_max, oracle_cap=bf_cap)
        if bf.s_max != min(res.s_max, bf_cap):
            issues.append({'orbital_id': digraph.orbital_id, 'kind': 'oracle',
                           'criterion': res.s_max, 'brute_force': bf.s_max, 'oracle_cap': bf_cap})
    return summary, issues


def analyse_action(action, meta: Dict, s_cap: int, oracle_budget: int) -> Dict:
    """Record of one action: degree, stabilizer order, primitivity and orbitals."""
    G = action.induced
    record = dict(meta)
    record['degree'] = G.degree
    record['stabilizer_order'] = G.stabilizer_orders([0])[0]
    primitive, blocks = G.is_primitive(witness=True)
    record['primitive'] = primitive
    record['witness'] = blocks.to_cycle_text() if blocks is not None else None
    summaries, issues = [], []
    for digraph in orbitals(action):
        s, i = analyse_orbital(action, digraph, s_cap, oracle_budget)
        summaries.append(s)
        issues += i
    record['orbitals'] = summaries
    record['inconsistencies'] = issues
    record['bound_status'] = bound_status(record)
    return record


def counted(orbital: Dict) -> bool:
    """Antisymmetric, not degenerate: the digraphs the s <= 2 bound is asserted on."""
    return orbital['digraph'] and orbital['degenerate'] is None


def bound_status(record: Dict) -> str:
    if not record['primitive']:
        return 'excluded'
    s_values = [o['s_max'] for o in record['orbitals'] if counted(o)]
    if any(s > 2 for s in s_values):
        return 'violated'
    if not s_values:
        return 'vacuous'
    return 'met_with_s2' if 2 in s_values else 'met_with_s1'


def run_task(task: Tuple[str, object], degree_cap: int, s_cap: int, oracle_budget: int) -> Dict:
    """
    Builds and analyses one action.

    Returns
    -------
        dict with 'record' (or None), 'rejection' (or None) and 'exclusion' (or None)
    """
    kind, item = task
    out = {'record': None, 'rejection': None, 'exclusion': None}
    try:
        if kind == 'family':
            spec: ActionSpec = item
            meta = spec.describe()
            meta['source'] = 'family'
            meta['label'] = str(spec.family)
            action = spec.build(cap=degree_cap)
        else:
            entry: CatalogEntry = item
            meta = {'n': entry.n, 'group_type': entry.group_type, 'family': entry.family,
                    'parameters': {}, 'source': 'catalog', 'label': entry.label}
            inst = instantiate(entry, cap=degree_cap)
            if not inst.accepted:
                out['rejection'] = inst.rejection_record()
            action = inst.action
            if action is None:
                return out
        out['record'] = analyse_action(action, meta, s_cap, oracle_budget)
        if out['rejection'] is None and not out['record']['primitive']:
            out['rejection'] = dict(meta, reason='coset action imprimitive', witness=out['record']['witness'])
    except CapacityError as e:
        logger.warning(f'{kind} action skipped: {e}')
        out['exclusion'] = {'task': kind, 'description': meta, 'cap_name': e.cap_name,
                            'cap': e.cap, 'required': e.required}
    return out


def build_tasks(self) -> List[Tuple[str, object]]:
    """Family specs within the degree cap, then catalog entries, in a fixed order."""
    tasks = []
    families = [f for f in self.families if f != 'catalog']
    for n in self.n_range:
        for group_type in self.group_types:
            specs, exclusions = enumerate_family_actions(n, group_type, families, self.degree_cap)
            tasks += [('family', spec) for spec in specs]
            self.exclusions += exclusions
    if 'catalog' in self.families:
        for entry in self.catalog:
            if entry.n in self.n_range and entry.group_type in self.group_types:
                tasks.append(('catalog', entry))
    return tasks


def verify(self, verbose: Optional[int] = None):
    """
    Runs every task and collects records, rejections, exclusions and inconsistencies.

    Tasks run in process when n_jobs is 1, otherwise in a loky pool; the order of
    the results is the order of the tasks either way.
    """
    verbose = self.verbose if verbose is None else verbose
    self.verbosity(function_name='verify',
                   dict_of_variables={'n_range': self.n_range, 'group_types': self.group_types,
                                      'families': self.families, 'degree_cap': self.degree_cap},
                   start=True, verbose=verbose)
    self.records, self.rejections, self.exclusions, self.inconsistencies = [], [], [], []
    tasks = self.build_tasks()
    logger.info(f'{len(tasks)} actions to analyse')
    if self.n_jobs == 1:
        results = [run_task(t, self.degree_cap, self.s_cap, self.oracle_budget) for t in tasks]
    else:
        with parallel_backend('loky'):
            results = Parallel(n_jobs=self.n_jobs)(delayed(run_task)(
                t, self.degree_cap, self.s_cap, self.oracle_budget) for t in tasks)
    for r in results:
        if r['record'] is not None:
            self.records.append(r['record'])
            for issue in r['record']['inconsistencies']:
                self.inconsistencies.append(dict(issue, label=r['record']['label'],
                                                 n=r['record']['n'], group_type=r['record']['group_type']))
        if r['rejection'] is not None:
            self.rejections.append(r['rejection'])
        if r['exclusion'] is not None:
            self.exclusions.append(r['exclusion'])
    if not self.records:
        logger.warning('no action was checked, the bound holds vacuously')
    self.verbosity(function_name='verify', start=False, verbose=verbose)
    return self.report()
