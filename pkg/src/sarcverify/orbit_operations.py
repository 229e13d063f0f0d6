"""
Orbits, stabilizers and suborbits. Orbits are the connected components of the
Schreier graph x -> g(x) over the generators.
"""

from typing import List, Optional, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import OutOfRangeError, ParameterError
from .permutations import Permutation, inverse


def orbit_labels(generators: Sequence[Permutation], degree: int) -> np.ndarray:
    """
    Component label of every point, the labels numbered by least point.
    """
    if not generators:
        return np.arange(degree)
    rows = np.tile(np.arange(degree), len(generators))
    cols = np.concatenate([g.images for g in generators])
    graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(degree, degree))
    _, labels = connected_components(graph, directed=False)
    # relabel so that the orbit of the least point comes first
    _, first = np.unique(labels, return_index=True)
    rank = np.empty(len(first), dtype=np.intp)
    rank[np.argsort(first)] = np.arange(len(first))
    return rank[labels]


def orbit_partition(generators: Sequence[Permutation], degree: int) -> List[List[int]]:
    labels = orbit_labels(generators, degree)
    parts = [[] for _ in range(int(labels.max()) + 1)]
    for x, lab in enumerate(labels.tolist()):
        parts[lab].append(x)
    return parts


def _check_point(self, point):
    if not 0 <= point < self.degree:
        raise OutOfRangeError(f'point {point} outside 0..{self.degree-1}')


def orbit(self, point: int) -> List[int]:
    _check_point(self, point)
    labels = orbit_labels(self.generators, self.degree)
    return np.flatnonzero(labels == labels[point]).tolist()


def orbits(self) -> List[List[int]]:
    return orbit_partition(self.generators, self.degree)


def is_transitive(self) -> bool:
    return len(self.orbit(0)) == self.degree


def tuple_stabilizer(self, points: Sequence[int]):
    """
    Pointwise stabilizer {g in G : g fixes every listed point}.

    Parameters
    ----------
        points : ordered list of distinct points

    Returns
    -------
        PermGroup
    """
    points = [int(x) for x in points]
    for x in points:
        _check_point(self, x)
    if len(set(points)) != len(points):
        raise ParameterError(f'repeated point in {points}')
    levels = self.chain_with_base(points)
    return self._from_chain(levels[len(points):])


def point_stabilizer(self, point: int):
    return self.tuple_stabilizer([point])


def suborbits(self, point: int = 0) -> List[List[int]]:
    """
    Orbits of the stabilizer of `point`, sorted by least point. The first one is {point}
    whenever the group is transitive.
    """
    stab = self.point_stabilizer(point)
    parts = orbit_partition(stab.generators, self.degree)
    k = next(i for i, part in enumerate(parts) if point in part)
    return [parts[k]] + parts[:k] + parts[k + 1:]


def rank(self) -> int:
    """
    Number of orbitals of a transitive group, the diagonal included.
    """
    return len(self.suborbits(0))


def alternating_part(self):
    """
    G ∩ A_n, generated by the Schreier generators of the kernel of the sign map.
    """
    odd = [g for g in self.generators if not g.is_even()]
    if not odd:
        return self
    t = odd[0]
    tinv = inverse(t)
    gens = []
    for g in self.generators:
        if g.is_even():
            gens += [g, t * g * tinv]
        else:
            gens += [g * tinv, t * g]
    return self.__class__(gens, self.degree, known_order=self.order() // 2)
