"""
Conjugacy classes of subgroups of a small permutation group by cyclic extension.

Elements are numbered by the rows of a lexicographically sorted image matrix (the
identity is element 0) and multiplied through a Cayley table; a subgroup is a boolean
mask over the elements. Every subgroup <U, g> is generated from a class
representative U and one more element g, so extending every representative by every
element, up to the skips below, reaches every class.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
import pandas as pd

from .caps import SUBGROUP_CAP
from .permutations import Permutation

logger = logging.getLogger(__name__)


class ElementTable:
    """
    Cayley table of a permutation group of order at most `cap`.

    table[i, j] is the index of E_i * E_j (E_i applied first), inverse[i] the index of
    E_i^{-1}.
    """

    def __init__(self, group, cap: Optional[int] = None):
        cap = SUBGROUP_CAP if cap is None else cap
        self.group = group
        rows = group.elements(cap=cap)
        rows = rows[np.lexsort(rows.T[::-1])]
        self.rows = rows
        self.size = len(rows)
        self.base = np.asarray(group.base() or [0], dtype=np.intp)
        weights = group.degree ** np.arange(len(self.base), dtype=object)
        self._radix = group.degree ** len(self.base) < 2 ** 62
        if self._radix:
            self._weights = weights.astype(np.int64)
            self._codes = rows[:, self.base].astype(np.int64) @ self._weights
            self._order = np.argsort(self._codes)
            self._sorted = self._codes[self._order]
        else:
            self._lookup = {r.tobytes(): i for i, r in enumerate(rows[:, self.base])}
        dtype = np.int16 if self.size < 2 ** 15 else np.int32
        self.table = np.empty((self.size, self.size), dtype=dtype)
        for i in range(self.size):
            self.table[i] = self.index(rows[:, rows[i, self.base]])
        self.inverse = np.argmax(self.table == 0, axis=1)
        logger.debug(f'Cayley table of order {self.size}')

    def index(self, base_images: np.ndarray) -> np.ndarray:
        """Element indices from the images of the base points, one element per row."""
        if self._radix:
            codes = base_images.astype(np.int64) @ self._weights
            return self._order[np.searchsorted(self._sorted, codes)]
        return np.array([self._lookup[r.tobytes()] for r in np.ascontiguousarray(base_images)])

    def permutation(self, i: int) -> Permutation:
        return Permutation._from_array(self.rows[i].copy())

    def closure(self, start: np.ndarray, gens: List[int]) -> np.ndarray:
        """Mask of the subgroup generated by the subgroup `start` (a mask) and gens."""
        members = start.copy()
        frontier = np.flatnonzero(members)
        gens = np.asarray(gens, dtype=np.intp)
        while len(frontier) and len(gens):
            prods = self.table[frontier][:, gens].ravel()
            new = np.unique(prods[~members[prods]])
            members[new] = True
            frontier = new
        return members

    def conjugates(self, mask: np.ndarray) -> np.ndarray:
        """Row g holds the sorted indices of g^-1 U g."""
        u = np.flatnonzero(mask)
        everyone = np.arange(self.size)
        left = self.table[self.inverse[:, None], u[None, :]]
        return np.sort(self.table[left, everyone[:, None]], axis=1)

    def cyclic(self, g: int) -> List[int]:
        powers = [0]
        x = g
        while x != 0:
            powers.append(int(x))
            x = self.table[x, g]
        return powers


@dataclass
class SubgroupClass:
    """
    A conjugacy class of subgroups: its representative as a mask over the element
    table, generators as element indices, the order and the number of conjugates.
    """
    class_id: int
    order: int
    length: int
    mask: np.ndarray = field(repr=False)
    generators: List[int]
    normalizer: np.ndarray = field(repr=False)

    def to_group(self, table: ElementTable):
        gens = [table.permutation(i) for i in self.generators]
        return table.group.__class__(gens, table.group.degree, known_order=self.order)


class SubgroupLattice:
    """
    Parameters
    ----------
        group : PermGroup of order at most cap
        cap : int, default SUBGROUP_CAP
    """

    def __init__(self, group, cap: Optional[int] = None):
        self.table = ElementTable(group, cap)
        self.classes: List[SubgroupClass] = []
        self._seen = set()
        self._enumerate()

    def _register(self, mask, gens) -> Optional[SubgroupClass]:
        key = np.flatnonzero(mask).astype(np.int64).tobytes()
        if key in self._seen:
            return None
        conj = self.table.conjugates(mask)
        keys = {row.tobytes() for row in conj.astype(np.int64)}
        self._seen |= keys
        own = np.flatnonzero(mask).astype(np.int64)
        normalizer = np.flatnonzero((conj == own[None, :]).all(axis=1))
        cls = SubgroupClass(len(self.classes), int(mask.sum()), len(keys), mask, list(gens), normalizer)
        self.classes.append(cls)
        return cls

    def _covered_by(self, cls: SubgroupClass, g: int) -> np.ndarray:
        """Elements h with <U, h> conjugate under N_G(U) to <U, g>."""
        T = self.table
        u = np.flatnonzero(cls.mask)
        powers = T.cyclic(g)
        # generators of <g>, each giving the same <U, h>, then the double cosets U h U
        same = [h for e, h in enumerate(powers) if e and np.gcd(e, len(powers)) == 1]
        double = np.unique(np.concatenate([T.table[T.table[u[:, None], h], u[None, :]].ravel() for h in same]))
        n = cls.normalizer
        moved = T.table[T.table[T.inverse[n][:, None], double[None, :]], n[:, None]]
        covered = np.zeros(T.size, dtype=bool)
        covered[moved.ravel()] = True
        return covered

    def _enumerate(self):
        T = self.table
        trivial = np.zeros(T.size, dtype=bool)
        trivial[0] = True
        self._register(trivial, [])
        i = 0
        while i < len(self.classes):
            cls = self.classes[i]
            i += 1
            covered = cls.mask.copy()
            for g in range(T.size):
                if covered[g]:
                    continue
                mask = T.closure(cls.mask, cls.generators + [g])
                self._register(mask, cls.generators + [g])
                covered |= self._covered_by(cls, g)
        self.classes.sort(key=lambda c: (c.order, c.class_id))
        for k, c in enumerate(self.classes):
            c.class_id = k
        logger.info(f'{len(self.classes)} classes of subgroups in a group of order {T.size}')

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame([{'class_id': c.class_id, 'order': c.order, 'length': c.length,
                              'index': self.table.size // c.order} for c in self.classes])


def subgroup_classes(group, cap: Optional[int] = None) -> SubgroupLattice:
    """
    Representatives of the conjugacy classes of subgroups, ordered by order.

    Raises
    ------
        CapacityError : |group| > cap.
    """
    return SubgroupLattice(group, cap)
