"""
Deterministic Schreier-Sims with explicit transversals.

A chain is a list of ChainLevel objects. Level i holds the base point b_i, the strong
generators fixing b_0..b_{i-1}, the fundamental orbit of b_i under them and, for every
orbit point x, a transversal element u_x with b_i^{u_x} = x. The functions taking `self`
are assembled into PermGroup.
"""

import logging
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .caps import ENUMERATION_CAP
from .errors import CapacityError, IncompatibleDegreeError, OutOfRangeError
from .permutations import IMAGE_DTYPE, Permutation, identity, inverse

logger = logging.getLogger(__name__)


class ChainLevel:
    __slots__ = ('base_point', 'gens', 'orbit', 'transversal', '_inverses', 'checked')

    def __init__(self, base_point: int, degree: int):
        self.base_point = base_point
        self.gens: List[Permutation] = []
        self.orbit: List[int] = [base_point]
        self.transversal: Dict[int, Permutation] = {base_point: identity(degree)}
        self._inverses: Dict[int, Permutation] = {}
        # (orbit point, generator index) pairs whose Schreier generator already sifts
        self.checked = set()

    def inverse_of(self, x: int) -> Optional[Permutation]:
        u = self.transversal.get(x)
        if u is None:
            return None
        uinv = self._inverses.get(x)
        if uinv is None:
            uinv = inverse(u)
            self._inverses[x] = uinv
        return uinv

    def extend(self, new_gens: Sequence[Permutation]):
        """Adds new_gens to the level and closes the orbit."""
        self.gens.extend(new_gens)
        trans = self.transversal
        queue = []
        for x in list(self.orbit):
            ux = trans[x]
            for g in new_gens:
                y = int(g.images[x])
                if y not in trans:
                    trans[y] = ux * g
                    self.orbit.append(y)
                    queue.append(y)
        i = 0
        while i < len(queue):
            x = queue[i]
            i += 1
            ux = trans[x]
            for g in self.gens:
                y = int(g.images[x])
                if y not in trans:
                    trans[y] = ux * g
                    self.orbit.append(y)
                    queue.append(y)


def _first_moved_point(g: Permutation) -> int:
    return int(np.flatnonzero(g.images != np.arange(g.degree))[0])


def _dedupe(gens: Sequence[Permutation]) -> List[Permutation]:
    seen = set()
    out = []
    for g in gens:
        if g.is_identity() or g.key() in seen:
            continue
        seen.add(g.key())
        out.append(g)
    return out


def sift_through(levels: List[ChainLevel], g: Permutation, start=0) -> Tuple[Permutation, int]:
    """
    Strips g through levels[start:].

    Returns
    -------
        (residue, depth) : depth is the index of the level whose orbit does not contain
        the base image, or len(levels) when g went through every level.
    """
    h = g
    for depth in range(start, len(levels)):
        level = levels[depth]
        beta = int(h.images[level.base_point])
        if beta == level.base_point:
            continue
        uinv = level.inverse_of(beta)
        if uinv is None:
            return h, depth
        h = h * uinv
    return h, len(levels)


def levels_order(levels: Sequence[ChainLevel]) -> int:
    return prod(len(level.orbit) for level in levels)


def build_chain(generators: Sequence[Permutation],
                degree: int,
                base_prefix: Sequence[int] = (),
                known_order: Optional[int] = None) -> List[ChainLevel]:
    """
    Builds a base and strong generating set.

    Parameters
    ----------
        generators : list of Permutation of the same degree
        degree : int
        base_prefix : points forced at the start of the base, in this order. Levels
            whose point is fixed by the whole stabilizer stay in the chain with a
            trivial orbit.
        known_order : the order of the group when already known. The construction
            stops as soon as the product of the orbit lengths reaches it.

    Returns
    -------
        list of ChainLevel
    """
    for g in generators:
        if g.degree != degree:
            raise IncompatibleDegreeError(f'generator of degree {g.degree} in a group of degree {degree}')
    for b in base_prefix:
        if not 0 <= b < degree:
            raise OutOfRangeError(f'base point {b} outside 0..{degree-1}')
    gens = _dedupe(generators)
    base = list(base_prefix)
    for g in gens:
        if all(int(g.images[b]) == b for b in base):
            base.append(_first_moved_point(g))

    levels = [ChainLevel(b, degree) for b in base]
    for i, level in enumerate(levels):
        fixing = [g for g in gens if all(int(g.images[b]) == b for b in base[:i])]
        if fixing:
            level.extend(fixing)

    def complete():
        return known_order is not None and levels_order(levels) == known_order

    if complete():
        return levels

    i = len(levels) - 1
    while i >= 0:
        level = levels[i]
        found = None
        j = 0
        while found is None and j < len(level.orbit):
            beta = level.orbit[j]
            j += 1
            u_beta = level.transversal[beta]
            for gi, x in enumerate(level.gens):
                if (beta, gi) in level.checked:
                    continue
                level.checked.add((beta, gi))
                gamma = int(x.images[beta])
                u_gamma = level.transversal[gamma]
                ux = u_beta * x
                if np.array_equal(ux.images, u_gamma.images):
                    continue
                h = ux * level.inverse_of(gamma)
                residue, depth = sift_through(levels, h, start=i + 1)
                if depth < len(levels) or not residue.is_identity():
                    found = (residue, depth)
                    break
        if found is None:
            i -= 1
            continue
        residue, depth = found
        if depth == len(levels):
            levels.append(ChainLevel(_first_moved_point(residue), degree))
        for l in range(i + 1, depth + 1):
            levels[l].extend([residue])
        if complete():
            break
        i = depth
    return levels


"""
Methods of PermGroup built on the chain.
"""


def order(self) -> int:
    """
    Exact order, the product of the fundamental orbit lengths.
    """
    return levels_order(self.chain)


def base(self) -> List[int]:
    return [level.base_point for level in self.chain]


def strong_generators(self) -> List[Permutation]:
    gens = list(self.generators)
    for level in self.chain:
        gens.extend(level.gens)
    return _dedupe(gens)


def sift(self, p: Permutation) -> Tuple[Permutation, int]:
    if p.degree != self.degree:
        raise IncompatibleDegreeError(f'permutation of degree {p.degree}, group of degree {self.degree}')
    return sift_through(self.chain, p)


def contains(self, p: Permutation) -> bool:
    residue, depth = self.sift(p)
    return depth == len(self.chain) and residue.is_identity()


def chain_with_base(self, prefix: Sequence[int]) -> List[ChainLevel]:
    """
    Stabilizer chain of the group whose base starts with `prefix`.

    The current chain is reused when its base already starts with prefix; otherwise a
    new chain is built from the strong generators with the known order as stopping rule.
    Results are cached on the group.
    """
    prefix = tuple(int(x) for x in prefix)
    current = tuple(self.base()[:len(prefix)])
    if current == prefix:
        return self.chain
    if prefix in self._chain_cache:
        return self._chain_cache[prefix]
    levels = build_chain(self.strong_generators(), self.degree,
                         base_prefix=prefix, known_order=self.order())
    if len(self._chain_cache) >= 64:
        self._chain_cache.pop(next(iter(self._chain_cache)))
    self._chain_cache[prefix] = levels
    return levels


def stabilizer_orders(self, points: Sequence[int]) -> List[int]:
    """
    Orders of the pointwise stabilizers G_{p_0}, G_{p_0 p_1}, ... of every prefix.

    Repeated points are allowed: a repeated point does not shrink the stabilizer.

    Parameters
    ----------
        points : sequence of int

    Returns
    -------
        list of int, the i-th entry is |G_{p_0..p_i}|
    """
    distinct = []
    for x in points:
        if not 0 <= x < self.degree:
            raise OutOfRangeError(f'point {x} outside 0..{self.degree-1}')
        if x not in distinct:
            distinct.append(int(x))
    levels = self.chain_with_base(distinct)
    orders = []
    seen = 0
    marked = set()
    for x in points:
        if x not in marked:
            marked.add(x)
            seen += 1
        orders.append(levels_order(levels[seen:]))
    return orders


def elements(self, cap: Optional[int] = None) -> np.ndarray:
    """
    Every element of the group as one row of an image matrix.

    Parameters
    ----------
        cap : int, default ENUMERATION_CAP
            largest order accepted.

    Returns
    -------
        numpy.ndarray of shape (|G|, degree)
    """
    cap = ENUMERATION_CAP if cap is None else cap
    n = self.order()
    if n > cap:
        raise CapacityError('ENUMERATION_CAP', cap, n, 'element enumeration')
    rows = np.arange(self.degree, dtype=IMAGE_DTYPE)[None, :]
    for level in reversed(self.chain):
        trans = np.stack([level.transversal[x].images for x in level.orbit])
        # row s followed by u: u.images[s.images]
        rows = np.concatenate([u[rows] for u in trans], axis=0)
    return rows


def random_element(self, rng: Optional[np.random.Generator] = None) -> Permutation:
    rng = np.random.default_rng() if rng is None else rng
    g = identity(self.degree)
    for level in reversed(self.chain):
        x = level.orbit[int(rng.integers(len(level.orbit)))]
        g = g * level.transversal[x]
    return g
