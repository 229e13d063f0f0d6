"""
Subgroup tests and intersections.

The default intersection walks the tree of base images of the smaller group H and
prunes a node as soon as no element of K agrees with it on the base points fixed so far.
K's chain is rebuilt with H's base as prefix so that the check at depth d is one
sifting step.
"""

import logging
from typing import Optional

from typing_extensions import Literal

from .caps import ENUMERATION_CAP
from .errors import CapacityError, IncompatibleDegreeError
from .permutations import Permutation
from .stabilizer_chain import sift_through

logger = logging.getLogger(__name__)


def is_subgroup(self, H) -> bool:
    """True iff every generator of H lies in self."""
    if H.degree != self.degree:
        raise IncompatibleDegreeError(f'degrees {H.degree} and {self.degree} differ')
    return all(self.contains(h) for h in H.generators)


def _group_from_elements(cls, degree, found):
    group = cls([], degree)
    gens = []
    for g in found:
        if not group.contains(g):
            gens.append(g)
            group = cls(gens, degree)
    return group


def _backtrack(H, K, cap):
    hlevels = H.chain
    klevels = K.chain_with_base(H.base())
    depth_max = len(hlevels)
    transversals = [[level.transversal[x] for x in level.orbit] for level in hlevels]

    group = H.__class__([], H.degree)
    gens = []
    visited = 0
    # (depth, partial product x_d ... x_0, its residue after K levels 0..d)
    stack = []
    for x in transversals[0][::-1]:
        stack.append((0, x, x))
    while stack:
        depth, partial, residue = stack.pop()
        visited += 1
        if visited > cap:
            raise CapacityError('ENUMERATION_CAP', cap, what='backtrack intersection')
        klevel = klevels[depth]
        beta = int(residue.images[klevel.base_point])
        if beta != klevel.base_point:
            uinv = klevel.inverse_of(beta)
            if uinv is None:
                continue
            residue = residue * uinv
        if depth + 1 < depth_max:
            for x in transversals[depth + 1][::-1]:
                stack.append((depth + 1, x * partial, x * residue))
            continue
        rest, d = sift_through(klevels, residue, start=depth + 1)
        if d == len(klevels) and rest.is_identity() and not group.contains(partial):
            gens.append(partial)
            group = H.__class__(gens, H.degree)
    logger.debug(f'backtrack intersection visited {visited} nodes, order {group.order()}')
    return group


def _brute_force(H, K, cap):
    rows = H.elements(cap=cap)
    found = (Permutation._from_array(row.copy()) for row in rows)
    return _group_from_elements(H.__class__, H.degree, (g for g in found if K.contains(g)))


def intersection(self, K,
                 method: Literal['backtrack', 'brute_force'] = 'backtrack',
                 cap: Optional[int] = None):
    """
    The subgroup {g : g in self and g in K}.

    Parameters
    ----------
        K : PermGroup of the same degree
        method : 'backtrack' (default) or 'brute_force'
            brute_force enumerates the smaller group and tests membership in the other.
        cap : int, default ENUMERATION_CAP
            backtrack: largest number of search nodes. brute_force: largest order
            of the smaller group.

    Returns
    -------
        PermGroup
    """
    if K.degree != self.degree:
        raise IncompatibleDegreeError(f'degrees {self.degree} and {K.degree} differ')
    cap = ENUMERATION_CAP if cap is None else cap
    H = self
    if K.order() < H.order():
        H, K = K, H
    if is_subgroup(K, H):
        return H
    if method == 'brute_force':
        return _brute_force(H, K, cap)
    return _backtrack(H, K, cap)
