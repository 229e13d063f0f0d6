"""
The functions of this script initialize the run parameters and the catalog of the
Verifier object.
"""

import logging
from time import time
from typing import Optional, Sequence

from .caps import ORACLE_BUDGET, S_CAP, VERIFY_DEGREE_CAP
from .catalog import DEFAULT_CATALOG, catalog_sha256, load_catalog
from .errors import ParameterError
from .maximal_actions import FAMILY_LETTERS

logger = logging.getLogger(__name__)

FAMILY_ALIASES = {'subsets': 'a', 'partitions': 'b', 'affine': 'c', 'product': 'e', 'wreath': 'e'}


def normalize_families(families: Sequence[str]):
    out = []
    for f in families:
        f = f.strip()
        f = FAMILY_ALIASES.get(f, f)
        if f != 'catalog' and f not in FAMILY_LETTERS:
            raise ParameterError(f'unknown family {f!r}, expected letters a..f or catalog')
        if f not in out:
            out.append(f)
    return out


def init_run(self, n_min: int = 5, n_max: int = 9, group_types: Sequence[str] = ('alt', 'sym'),
             families: Sequence[str] = ('a', 'b', 'c', 'catalog'),
             degree_cap: int = VERIFY_DEGREE_CAP, s_cap: int = S_CAP,
             oracle_budget: int = ORACLE_BUDGET, n_jobs: int = 1):
    '''
    Stores the parameters of a verification run.

    Parameters
    ----------
        n_min, n_max : int, degrees of A_n and S_n, 5 <= n_min <= n_max
        group_types : subset of ('alt', 'sym')
        families : family letters ('a', 'b', 'c', 'e'), their names, and 'catalog'
        degree_cap : int, largest action degree built
        s_cap : int, largest s tested
        oracle_budget : int, largest number of s-arcs enumerated by the brute-force
            cross-check at one level
        n_jobs : int, number of loky workers (1 runs in process)

    Attributes Initialized
    ---------- -----------
        n_range, group_types, families, degree_cap, s_cap, oracle_budget, n_jobs
    '''
    if n_min < 5 or n_max < n_min:
        raise ParameterError(f'need 5 <= n_min <= n_max, got {n_min}..{n_max}')
    for name, value in (('degree_cap', degree_cap), ('s_cap', s_cap), ('oracle_budget', oracle_budget)):
        if value < 1:
            raise ParameterError(f'{name} must be positive, got {value}')
    for t in group_types:
        if t not in ('alt', 'sym'):
            raise ParameterError(f'unknown group type {t!r}')
    self.n_range = list(range(n_min, n_max + 1))
    self.group_types = list(group_types)
    self.families = normalize_families(families)
    self.degree_cap = degree_cap
    self.s_cap = s_cap
    self.oracle_budget = oracle_budget
    self.n_jobs = n_jobs


def init_catalog(self, path: Optional[str] = None):
    '''
    Loads the catalog and records its hash. A broken catalog raises CatalogError
    before any action is built.

    Attributes Initialized
    ---------- -----------
        catalog_path, catalog, catalog_sha256
    '''
    self.catalog_path = DEFAULT_CATALOG if path is None else path
    self.catalog = load_catalog(self.catalog_path)
    self.catalog_sha256 = catalog_sha256(self.catalog_path)


def verbosity(self, function_name, dict_of_variables=None, start=True, verbose=0):
    '''
    Chronometer of the main steps, reported through the logger.

    Parameters
    ----------
        function_name : str
        dict_of_variables : dict logged at DEBUG when the step starts
        start : bool, True when the step starts, False when it ends
        verbose : int, nothing is logged when 0
    '''
    if verbose > 0:
        if start:
            self.start_times[function_name] = time()
            logger.info(f'Starting {function_name} ...')
            if dict_of_variables is not None:
                for k, v in dict_of_variables.items():
                    logger.debug(f'\t {k}:{v}')
        else:
            start_time = self.start_times[function_name]
            logger.info(f'Done {function_name} in {time() - start_time:.2f}')
