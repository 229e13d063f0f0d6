"""
Orbital digraphs of a transitive action. The non-diagonal orbitals are in bijection
with the nontrivial suborbits of the stabilizer of point 0: the orbital of (0, x) has
out-neighbourhood Γ+(v) = Δ^{u_v} where Δ is the suborbit of x and u_v maps 0 to v.
"""

import logging
from typing import List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from .coset_operations import GroupAction
from .errors import NotTransitiveError, OutOfRangeError

logger = logging.getLogger(__name__)


class OrbitalDigraph:
    """
    One non-diagonal orbital of a transitive action.

    Attributes
    ----------
        orbital_id : int, index among the non-diagonal orbitals, ordered by least
            point of the suborbit
        vertex_count : int
        representative_arc : (0, x) with x the least point of the suborbit
        out_neighbors : numpy.ndarray of shape (vertex_count, valency), sorted rows
        paired_id : id of the orbital holding the reversed arcs
    """

    def __init__(self, orbital_id: int, out_neighbors: np.ndarray, paired_id: int, suborbit: List[int]):
        self.orbital_id = orbital_id
        self.out_neighbors = out_neighbors
        self.vertex_count, self.valency = out_neighbors.shape
        self.paired_id = paired_id
        self.suborbit = list(suborbit)
        self.representative_arc = (0, int(suborbit[0]))

    def is_self_paired(self) -> bool:
        return self.paired_id == self.orbital_id

    def is_digraph(self) -> bool:
        """True iff the arc relation is antisymmetric."""
        return not self.is_self_paired()

    @property
    def pairing(self) -> str:
        return 'self_paired' if self.is_self_paired() else f'paired_with:{self.paired_id}'

    def arcs_array(self) -> np.ndarray:
        """All arcs, one (u, v) per row, sorted."""
        tails = np.repeat(np.arange(self.vertex_count), self.valency)
        return np.stack([tails, self.out_neighbors.ravel()], axis=1)

    def contains_arc(self, u: int, v: int) -> bool:
        if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
            raise OutOfRangeError(f'arc ({u}, {v}) outside 0..{self.vertex_count-1}')
        row = self.out_neighbors[u]
        i = int(np.searchsorted(row, v))
        return i < len(row) and int(row[i]) == v

    def in_valency(self) -> int:
        """Common in-valency; asserts it is constant."""
        counts = np.bincount(self.out_neighbors.ravel(), minlength=self.vertex_count)
        assert counts.min() == counts.max()
        return int(counts[0])

    def summary(self) -> dict:
        return {'orbital_id': self.orbital_id, 'vertex_count': self.vertex_count,
                'representative_arc': list(self.representative_arc), 'valency': self.valency,
                'pairing': self.pairing}

    def __str__(self):
        return (f'OrbitalDigraph {self.orbital_id}: {self.vertex_count} vertices, valency {self.valency}, '
                f'arc {self.representative_arc}, {self.pairing}')

    def __repr__(self):
        return self.__str__()


def _induced(action):
    return action.induced if isinstance(action, GroupAction) else action


def transversal_matrix(group) -> np.ndarray:
    """Row v holds the images of u_v, the transversal element carrying 0 to v."""
    top = group.chain_with_base([0])[0]
    return np.stack([top.transversal[v].images for v in range(group.degree)])


def orbitals(action: Union[GroupAction, 'PermGroup']) -> List[OrbitalDigraph]:
    """
    The non-diagonal orbitals of a transitive action.

    Parameters
    ----------
        action : GroupAction, or a PermGroup acting on its points

    Returns
    -------
        list of OrbitalDigraph, ordered by the least point of the suborbit
    """
    H = _induced(action)
    if not H.is_transitive():
        raise NotTransitiveError(f'orbitals need a transitive action, degree {H.degree}')
    if H.degree == 1:
        return []
    U = transversal_matrix(H)
    subs = H.suborbits(0)[1:]
    suborbit_of = np.empty(H.degree, dtype=np.intp)
    for i, sub in enumerate(subs):
        suborbit_of[sub] = i
    out = []
    for i, sub in enumerate(subs):
        neighbors = np.sort(U[:, np.asarray(sub)], axis=1)
        x = sub[0]
        # (x, 0) is carried to (0, u_x^{-1}(0))
        back = int(np.flatnonzero(U[x] == 0)[0])
        out.append(OrbitalDigraph(i, neighbors, int(suborbit_of[back]), sub))
    assert sum(d.valency for d in out) == H.degree - 1
    logger.debug(f'{len(out)} orbitals on {H.degree} points')
    return out


def orbital_table(digraphs: List[OrbitalDigraph]) -> pd.DataFrame:
    return pd.DataFrame([d.summary() for d in digraphs],
                        columns=['orbital_id', 'vertex_count', 'representative_arc', 'valency', 'pairing'])


def classify_degenerate(digraph: OrbitalDigraph) -> Optional[str]:
    """'directed_cycle' for valency 1, 'valency_two' for valency 2, None otherwise."""
    if digraph.valency == 1:
        return 'directed_cycle'
    if digraph.valency == 2:
        return 'valency_two'
    return None


def export_edge_list(digraph: OrbitalDigraph, path: str):
    arcs = digraph.arcs_array()
    with open(path, 'w') as f:
        f.write(f'vertices={digraph.vertex_count} valency={digraph.valency}\n')
        for u, v in arcs.tolist():
            f.write(f'{u} {v}\n')


def read_edge_list(path: str) -> Tuple[int, int, np.ndarray]:
    """
    Returns
    -------
        (vertex_count, valency, arcs) with arcs of shape (E, 2)
    """
    with open(path) as f:
        header = f.readline().split()
        fields = dict(item.split('=') for item in header)
        arcs = np.loadtxt(f, dtype=np.int64, ndmin=2)
    return int(fields['vertices']), int(fields['valency']), arcs.reshape(-1, 2)
