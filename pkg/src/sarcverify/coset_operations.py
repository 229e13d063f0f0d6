"""
Group actions on labelled point sets and the action on right cosets.

A GroupAction keeps the abstract group (acting on n points), the ordered list of
labels and the induced permutation group on the label indices. Labels of a coset
action are the lexicographically least elements of the cosets Hg.
"""

import logging
from typing import Any, Callable, Dict, Hashable, List, Optional, Sequence

import numpy as np
from typing_extensions import Literal

from .caps import DEGREE_CAP
from .errors import CapacityError, NotSubgroupError
from .permutations import IMAGE_DTYPE, Permutation, identity

logger = logging.getLogger(__name__)

LabelKind = Literal['subset', 'partition', 'tuple', 'coset', 'point']


class GroupAction:
    """
    Action of a permutation group on a list of labels.

    Parameters
    ----------
        abstract_group : PermGroup acting on n points
        labels : list of hashable labels, the induced points in this order
        act : callable (label, Permutation) -> label, the right action on labels
        label_kind : 'subset', 'partition', 'tuple', 'coset' or 'point'
        name : short description used in reports
    """

    def __init__(self, abstract_group, labels: List[Hashable], act: Callable[[Any, Permutation], Any],
                 label_kind: LabelKind, name: str = '', known_order: Optional[int] = None):
        self.abstract_group = abstract_group
        self.labels = list(labels)
        self.label_kind = label_kind
        self.name = name
        self._act = act
        self._index: Dict[Hashable, int] = {lab: i for i, lab in enumerate(self.labels)}
        gens = [self.image(g) for g in abstract_group.generators]
        self.induced = abstract_group.__class__(gens, len(self.labels), known_order=known_order)

    @property
    def degree(self) -> int:
        return len(self.labels)

    def index_of(self, label) -> int:
        return self._index[label]

    def act(self, label, g: Permutation):
        return self._act(label, g)

    def image(self, g: Permutation) -> Permutation:
        """Induced permutation of an element of the abstract group."""
        images = np.fromiter((self._index[self._act(lab, g)] for lab in self.labels),
                             dtype=IMAGE_DTYPE, count=len(self.labels))
        return Permutation._from_array(images)

    def check_homomorphism(self) -> bool:
        gens = self.abstract_group.generators
        for a in gens:
            for b in gens:
                if self.image(a * b) != self.image(a) * self.image(b):
                    return False
        return True

    def stabilizer_order(self) -> int:
        return self.induced.point_stabilizer(0).order()

    def render_label(self, i: int) -> str:
        lab = self.labels[i]
        if self.label_kind == 'coset':
            return str(lab)
        if self.label_kind == 'partition':
            return '|'.join('{' + ','.join(str(x + 1) for x in block) + '}' for block in lab)
        if self.label_kind in ('subset', 'tuple'):
            return '(' + ','.join(str(x + 1) for x in lab) + ')'
        return str(lab)

    def __str__(self):
        s = f'GroupAction {self.name} ({self.label_kind})\n'
        s += f'abstract degree {self.abstract_group.degree}, order {self.abstract_group.order()}\n'
        s += f'induced degree {self.degree}, induced order {self.induced.order()}\n'
        return s

    def __repr__(self):
        return self.__str__()


class CosetCanonicalizer:
    """
    Maps an element g to the least element of its right coset Hg.

    H's chain is built on the base 0,1,...,n-1, so choosing at each level the
    transversal element that minimises the next base image yields the
    lexicographically least image table in the coset.
    """

    def __init__(self, H):
        self.levels = H.chain_with_base(range(H.degree))
        self.orbits = [np.array(level.orbit, dtype=np.intp) for level in self.levels]

    def __call__(self, g: Permutation) -> Permutation:
        x = g
        for level, orb in zip(self.levels, self.orbits):
            if len(orb) == 1:
                continue
            beta = int(orb[np.argmin(x.images[orb])])
            if beta != level.base_point:
                x = level.transversal[beta] * x
        return x


class _CosetAct:
    def __init__(self, canon: CosetCanonicalizer):
        self.canon = canon

    def __call__(self, rep: Permutation, g: Permutation) -> Permutation:
        return self.canon(rep * g)


def coset_action(G, H, cap: Optional[int] = None, name: str = '') -> GroupAction:
    """
    Action of G on the right cosets of H.

    Parameters
    ----------
        G, H : PermGroup with H <= G
        cap : int, default DEGREE_CAP
            largest index accepted.

    Returns
    -------
        GroupAction with label_kind 'coset'. Label 0 is the coset H itself and the
        labels are sorted by their image tables.
    """
    cap = DEGREE_CAP if cap is None else cap
    if H.degree != G.degree or not G.is_subgroup(H):
        raise NotSubgroupError('coset action needs H <= G')
    index = G.order() // H.order()
    if index > cap:
        raise CapacityError('DEGREE_CAP', cap, index, f'cosets of a subgroup of order {H.order()}')
    canon = CosetCanonicalizer(H)
    reps = [canon(identity(G.degree))]
    seen = {reps[0]}
    i = 0
    while i < len(reps):
        rep = reps[i]
        i += 1
        for g in G.generators:
            c = canon(rep * g)
            if c not in seen:
                seen.add(c)
                reps.append(c)
    assert len(reps) == index, f'found {len(reps)} cosets, expected {index}'
    reps.sort()
    logger.debug(f'coset action of degree {index}')
    return GroupAction(G, reps, _CosetAct(canon), 'coset', name=name)


def action_on_points(G, name: str = '') -> GroupAction:
    """The natural action, labels are the points themselves."""
    return GroupAction(G, list(range(G.degree)), _point_image, 'point', name=name, known_order=G.order())


def _point_image(x: int, g: Permutation) -> int:
    return int(g.images[x])
