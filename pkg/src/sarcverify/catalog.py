"""
Hand-seeded subgroups of A_n and S_n (the diagonal and almost simple shapes have no
constructor here). The catalog is a versioned JSON document; every entry is checked
when instantiated and non-maximal entries are rejected with a block system witness.
"""

import hashlib
import json
import logging
import os
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .block_operations import BlockSystem
from .coset_operations import GroupAction, coset_action
from .errors import CatalogError, MalformedCycleError, OutOfRangeError
from .maximal_actions import FAMILY_LETTERS, ambient_group
from .permgroup import PermGroup
from .permutations import parse_cycles

logger = logging.getLogger(__name__)

CATALOG_VERSION = 1
DEFAULT_CATALOG = os.path.join(os.path.dirname(__file__), 'data', 'catalog.json')


@dataclass(frozen=True)
class CatalogEntry:
    n: int
    group_type: str
    family: str
    generators: Tuple[str, ...]
    provenance: str
    label: str = ''

    def subgroup(self) -> PermGroup:
        gens = [parse_cycles(t, self.n) for t in self.generators]
        return PermGroup(gens, self.n)

    def describe(self) -> dict:
        return {'label': self.label, 'n': self.n, 'group_type': self.group_type,
                'family': self.family, 'generators': list(self.generators),
                'provenance': self.provenance}


@dataclass
class Instantiation:
    """
    Outcome of instantiate. `action` is None when the entry could not be turned into a
    coset action at all (generators outside G or subgroup equal to G).
    """
    entry: CatalogEntry
    accepted: bool
    reason: str = ''
    action: Optional[GroupAction] = None
    witness: Optional[BlockSystem] = None
    subgroup_order: Optional[int] = None

    def rejection_record(self) -> dict:
        rec = self.entry.describe()
        rec['reason'] = self.reason
        rec['subgroup_order'] = self.subgroup_order
        rec['witness'] = self.witness.to_cycle_text() if self.witness is not None else None
        return rec


def catalog_sha256(path: Optional[str] = None) -> str:
    path = DEFAULT_CATALOG if path is None else path
    with open(path, 'rb') as f:
        return hashlib.sha256(f.read()).hexdigest()


def _parse_entry(i, raw) -> CatalogEntry:
    try:
        n = int(raw['n'])
        group_type = raw['group']
        family = FAMILY_LETTERS.get(raw['family'], raw['family'])
        generators = tuple(raw['generators'])
        provenance = raw.get('provenance', '')
    except (KeyError, TypeError, ValueError) as e:
        raise CatalogError(f'entry {i}: missing or malformed field ({e})')
    if group_type not in ('alt', 'sym'):
        raise CatalogError(f'entry {i}: group must be alt or sym, got {group_type!r}')
    if not generators:
        raise CatalogError(f'entry {i}: no generators')
    for text in generators:
        try:
            parse_cycles(text, n)
        except (MalformedCycleError, OutOfRangeError) as e:
            raise CatalogError(f'entry {i}: generator {text!r} does not parse ({e})')
    return CatalogEntry(n, group_type, family, generators, provenance, raw.get('label', ''))


def load_catalog(path: Optional[str] = None) -> List[CatalogEntry]:
    """
    Reads a catalog file, the packaged seed catalog by default.

    Raises
    ------
        CatalogError : unreadable file, wrong version, malformed entry or
        unparseable generator.
    """
    path = DEFAULT_CATALOG if path is None else path
    try:
        with open(path) as f:
            doc = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise CatalogError(f'cannot read catalog {path}: {e}')
    if not isinstance(doc, dict) or doc.get('version') != CATALOG_VERSION:
        raise CatalogError(f'catalog {path} is not a version {CATALOG_VERSION} document')
    entries = [_parse_entry(i, raw) for i, raw in enumerate(doc.get('entries', []))]
    logger.info(f'loaded {len(entries)} catalog entries from {path}')
    return entries


def instantiate(entry: CatalogEntry, cap: Optional[int] = None) -> Instantiation:
    """
    Coset action of G = A_n or S_n on the subgroup generated by the entry.

    Returns
    -------
        Instantiation : accepted iff the subgroup lies in G, is proper and the
        coset action is primitive. An imprimitive coset action is still returned,
        with the block system as witness.

    Raises
    ------
        CapacityError : the index is above the cap.
    """
    G = ambient_group(entry.n, entry.group_type)
    H = entry.subgroup()
    if not G.is_subgroup(H):
        return Instantiation(entry, False, f'generators outside {entry.group_type}{entry.n}')
    if H.order() == G.order():
        return Instantiation(entry, False, 'subgroup not proper', subgroup_order=H.order())
    action = coset_action(G, H, cap=cap, name=entry.label or f'{entry.group_type}{entry.n} catalog')
    primitive, blocks = action.induced.is_primitive(witness=True)
    if not primitive:
        logger.info(f'catalog entry {entry.label} rejected: blocks of size {blocks.block_size}')
        return Instantiation(entry, False, 'coset action imprimitive', action=action,
                             witness=blocks, subgroup_order=H.order())
    return Instantiation(entry, True, action=action, subgroup_order=H.order())
