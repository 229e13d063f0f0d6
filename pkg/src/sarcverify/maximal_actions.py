"""
Actions of A_n and S_n on the cosets of the maximal subgroups of the intransitive,
imprimitive, affine and wreath shapes, built either on structured labels (subsets,
partitions) or as coset actions.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from math import comb, factorial, prod
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy
from typing_extensions import Literal

from .caps import DEGREE_CAP
from .coset_operations import GroupAction, coset_action
from .errors import CapacityError, ParameterError
from .number_theory import is_prime
from .permgroup import PermGroup
from .permutations import IMAGE_DTYPE, Permutation, parse_cycles

logger = logging.getLogger(__name__)

GroupType = Literal['alt', 'sym']
FamilyTag = Literal['intransitive', 'imprimitive', 'affine', 'diagonal', 'wreath', 'almost_simple']

FAMILY_LETTERS = {'a': 'intransitive', 'b': 'imprimitive', 'c': 'affine',
                  'd': 'diagonal', 'e': 'wreath', 'f': 'almost_simple'}


@dataclass(frozen=True)
class ActionFamily:
    tag: str
    parameters: Tuple[Tuple[str, int], ...] = field(default_factory=tuple)

    def param(self, name: str) -> int:
        return dict(self.parameters)[name]

    def __str__(self):
        if not self.parameters:
            return self.tag
        return self.tag + '(' + ','.join(f'{k}={v}' for k, v in self.parameters) + ')'


def action_family(tag: str, n: int, **params) -> ActionFamily:
    """
    Validated family record.

    Parameters
    ----------
        tag : one of intransitive, imprimitive, affine, diagonal, wreath, almost_simple
        n : degree of the natural action
        params : m, k for intransitive/imprimitive/wreath; k, p for affine

    Returns
    -------
        ActionFamily
    """
    tag = FAMILY_LETTERS.get(tag, tag)
    if tag == 'intransitive':
        m, k = params['m'], params.get('k', n - params['m'])
        if m + k != n or not 1 <= m < k:
            raise ParameterError(f'intransitive family needs n = m + k with 1 <= m < k, got n={n}, m={m}, k={k}')
        params = {'m': m, 'k': k}
    elif tag == 'imprimitive':
        m, k = params['m'], params['k']
        if m * k != n or m < 2 or k < 2:
            raise ParameterError(f'imprimitive family needs n = mk with m, k > 1, got n={n}, m={m}, k={k}')
    elif tag == 'affine':
        k, p = params['k'], params['p']
        if not is_prime(p) or k < 1 or p ** k != n:
            raise ParameterError(f'affine family needs n = p^k with p prime, got n={n}, p={p}, k={k}')
    elif tag == 'wreath':
        m, k = params['m'], params['k']
        if m < 5 or k < 2 or m ** k != n:
            raise ParameterError(f'wreath family needs n = m^k with m >= 5 and k > 1, got n={n}, m={m}, k={k}')
    elif tag not in ('diagonal', 'almost_simple'):
        raise ParameterError(f'unknown family {tag}')
    return ActionFamily(tag, tuple(sorted(params.items())))


def _check_group_type(group_type):
    if group_type not in ('alt', 'sym'):
        raise ParameterError(f'group type must be alt or sym, got {group_type!r}')


def symmetric_group(n: int) -> PermGroup:
    if n < 1:
        raise ParameterError(f'degree must be positive, got {n}')
    if n == 1:
        return PermGroup([], 1)
    gens = [parse_cycles('(' + ' '.join(str(i) for i in range(1, n + 1)) + ')', n),
            parse_cycles('(1 2)', n)]
    return PermGroup(gens, n, known_order=factorial(n))


def alternating_group(n: int) -> PermGroup:
    if n < 1:
        raise ParameterError(f'degree must be positive, got {n}')
    if n < 3:
        return PermGroup([], n)
    first = 1 if n % 2 else 2
    gens = [parse_cycles('(' + ' '.join(str(i) for i in range(first, n + 1)) + ')', n),
            parse_cycles('(1 2 3)', n)]
    return PermGroup(gens, n, known_order=factorial(n) // 2)


def ambient_group(n: int, group_type: str) -> PermGroup:
    _check_group_type(group_type)
    return alternating_group(n) if group_type == 'alt' else symmetric_group(n)


def ambient_order(n: int, group_type: str) -> int:
    return factorial(n) // 2 if group_type == 'alt' else factorial(n)


def _subset_image(label, g: Permutation):
    return tuple(sorted(int(g.images[x]) for x in label))


def _partition_image(label, g: Permutation):
    return tuple(sorted(tuple(sorted(int(g.images[x]) for x in block)) for block in label))


def _partitions(points: Tuple[int, ...], m: int):
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    for others in combinations(rest, m - 1):
        block = (first,) + others
        remaining = tuple(x for x in rest if x not in others)
        for tail in _partitions(remaining, m):
            yield (block,) + tail


def subsets_action(n: int, m: int, group_type: str) -> GroupAction:
    """
    A_n or S_n on the m-subsets of {1..n}, 1 <= m < n - m.

    Labels are sorted 0-based tuples in lexicographic order, so label 0 is {1..m}.
    """
    _check_group_type(group_type)
    if not 1 <= m < n - m:
        raise ParameterError(f'subsets action needs 1 <= m < n - m, got n={n}, m={m}')
    G = ambient_group(n, group_type)
    labels = list(combinations(range(n), m))
    return GroupAction(G, labels, _subset_image, 'subset', name=f'{group_type}{n} on {m}-subsets')


def partition_action(n: int, m: int, k: int, group_type: str) -> GroupAction:
    """
    A_n or S_n on the partitions of {1..n} into k blocks of size m.
    """
    _check_group_type(group_type)
    if m * k != n or m < 2 or k < 2:
        raise ParameterError(f'partition action needs n = mk with m, k > 1, got n={n}, m={m}, k={k}')
    G = ambient_group(n, group_type)
    labels = list(_partitions(tuple(range(n)), m))
    assert len(labels) == factorial(n) // (factorial(m) ** k * factorial(k))
    return GroupAction(G, labels, _partition_image, 'partition',
                       name=f'{group_type}{n} on {k} blocks of size {m}')


def _vectors(k: int, p: int) -> np.ndarray:
    """All vectors of F_p^k, row i holding the base-p digits of i."""
    idx = np.arange(p ** k)
    return np.stack([(idx // p ** j) % p for j in range(k)], axis=1)


def _encode(vectors: np.ndarray, p: int) -> np.ndarray:
    return vectors @ (p ** np.arange(vectors.shape[1]))


def _matrix_order(M: np.ndarray, p: int, limit: int) -> int:
    eye = np.eye(len(M), dtype=np.int64)
    X = M.copy()
    for e in range(1, limit + 1):
        if np.array_equal(X, eye):
            return e
        X = (X @ M) % p
    return 0


def singer_cycle(k: int, p: int) -> np.ndarray:
    """
    Companion matrix of the first primitive polynomial of degree k over F_p in
    lexicographic order of the coefficients; its order is p^k - 1.
    """
    target = p ** k - 1
    for coeffs in np.ndindex(*([p] * k)):
        if coeffs[0] == 0:
            continue
        M = np.zeros((k, k), dtype=np.int64)
        M[1:, :-1] = np.eye(k - 1, dtype=np.int64)
        M[:, -1] = (-np.array(coeffs)) % p
        if _matrix_order(M, p, target) == target:
            return M
    raise ParameterError(f'no primitive polynomial of degree {k} over F_{p}')


def _linear_permutation(M: np.ndarray, vectors: np.ndarray, p: int) -> Permutation:
    images = _encode((vectors @ M.T) % p, p)
    return Permutation._from_array(images.astype(IMAGE_DTYPE))


def affine_order(k: int, p: int) -> int:
    q = p ** k
    return q * prod(q - p ** i for i in range(k))


def affine_subgroup(k: int, p: int) -> PermGroup:
    """
    AGL(k, p) acting on the p^k vectors of F_p^k, vector v numbered sum v_j p^j.

    Generated by the translation by e_1 and GL(k, p), itself generated by a Singer
    cycle and the transvection e_2 -> e_1 + e_2 (by a primitive scalar when k = 1).
    """
    if not is_prime(p):
        raise ParameterError(f'{p} is not prime')
    if k < 1:
        raise ParameterError(f'dimension must be positive, got {k}')
    n = p ** k
    vectors = _vectors(k, p)
    e1 = np.zeros(k, dtype=np.int64)
    e1[0] = 1
    gens = [Permutation._from_array(_encode((vectors + e1) % p, p).astype(IMAGE_DTYPE))]
    if k == 1:
        gens.append(_linear_permutation(np.array([[int(sympy.primitive_root(p))]]), vectors, p))
    else:
        transvection = np.eye(k, dtype=np.int64)
        transvection[0, 1] = 1
        gens.append(_linear_permutation(singer_cycle(k, p), vectors, p))
        gens.append(_linear_permutation(transvection, vectors, p))
    return PermGroup(gens, n, known_order=affine_order(k, p))


def _prime_power(n: int) -> Tuple[int, int]:
    f = sympy.factorint(n)
    if len(f) != 1:
        raise ParameterError(f'{n} is not a prime power')
    (p, k), = f.items()
    return k, p


def affine_stabilizer(n: int, group_type: str) -> PermGroup:
    """AGL(k, p) ∩ G for n = p^k."""
    k, p = _prime_power(n)
    H = affine_subgroup(k, p)
    return H.alternating_part() if group_type == 'alt' else H


def affine_action(n: int, group_type: str, cap: Optional[int] = None) -> GroupAction:
    """G on the cosets of AGL(k, p) ∩ G, n = p^k."""
    G = ambient_group(n, group_type)
    H = affine_stabilizer(n, group_type)
    return coset_action(G, H, cap=cap, name=f'{group_type}{n} on cosets of AGL∩G')


def wreath_subgroup(m: int, k: int, group_type: str) -> PermGroup:
    """
    S_m wr S_k in product action on the m^k tuples, intersected with A_{m^k} for alt.
    Tuple (x_0..x_{k-1}) is numbered sum x_j m^j.
    """
    _check_group_type(group_type)
    if m < 5 or k < 2:
        raise ParameterError(f'wreath product action needs m >= 5 and k >= 2, got m={m}, k={k}')
    tuples = _vectors(k, m)

    def from_tuples(new):
        return Permutation._from_array(_encode(new, m).astype(IMAGE_DTYPE))

    cycle = np.roll(np.arange(m), -1)
    swap = np.arange(m)
    swap[[0, 1]] = [1, 0]
    gens = []
    for sigma in (cycle, swap):
        new = tuples.copy()
        new[:, 0] = sigma[tuples[:, 0]]
        gens.append(from_tuples(new))
    gens.append(from_tuples(np.roll(tuples, 1, axis=1)))
    if k > 2:
        new = tuples.copy()
        new[:, [0, 1]] = tuples[:, [1, 0]]
        gens.append(from_tuples(new))
    W = PermGroup(gens, m ** k, known_order=factorial(m) ** k * factorial(k))
    return W.alternating_part() if group_type == 'alt' else W


def product_action(m: int, k: int, group_type: str, cap: Optional[int] = None) -> GroupAction:
    """
    G = A_{m^k} or S_{m^k} on the cosets of the wreath subgroup.

    The index is computed first; above the cap a CapacityError is raised carrying the
    wreath subgroup as its `subgroup` attribute.
    """
    cap = DEGREE_CAP if cap is None else cap
    W = wreath_subgroup(m, k, group_type)
    n = m ** k
    index = ambient_order(n, group_type) // W.order()
    if index > cap:
        err = CapacityError('DEGREE_CAP', cap, index, f'{group_type}{n} on cosets of S{m} wr S{k}')
        err.subgroup = W
        raise err
    return coset_action(ambient_group(n, group_type), W, cap=cap, name=f'{group_type}{n} product action')


@dataclass
class ActionSpec:
    """A constructible family action, described before it is built."""
    n: int
    group_type: str
    family: ActionFamily
    degree: int

    def build(self, cap: Optional[int] = None) -> GroupAction:
        tag = self.family.tag
        if tag == 'intransitive':
            return subsets_action(self.n, self.family.param('m'), self.group_type)
        if tag == 'imprimitive':
            return partition_action(self.n, self.family.param('m'), self.family.param('k'), self.group_type)
        if tag == 'affine':
            return affine_action(self.n, self.group_type, cap=cap)
        if tag == 'wreath':
            return product_action(self.family.param('m'), self.family.param('k'), self.group_type, cap=cap)
        raise ParameterError(f'family {tag} has no constructor')

    def describe(self) -> Dict:
        return {'n': self.n, 'group_type': self.group_type, 'family': self.family.tag,
                'parameters': dict(self.family.parameters), 'degree': self.degree}


def enumerate_family_actions(n: int, group_type: str, families: Sequence[str],
                             degree_cap: int) -> Tuple[List[ActionSpec], List[Dict]]:
    """
    Family actions of G = A_n or S_n for the given family letters or tags.

    Returns
    -------
        (specs, exclusions) : the specs with degree <= degree_cap, and a record for
        each action left out by the cap.
    """
    _check_group_type(group_type)
    tags = [FAMILY_LETTERS.get(f, f) for f in families]
    candidates = []
    if 'intransitive' in tags:
        for m in range(1, (n + 1) // 2):
            if m < n - m:
                candidates.append((action_family('intransitive', n, m=m), comb(n, m)))
    if 'imprimitive' in tags:
        for m in range(2, n // 2 + 1):
            if n % m == 0 and n // m >= 2:
                k = n // m
                degree = factorial(n) // (factorial(m) ** k * factorial(k))
                candidates.append((action_family('imprimitive', n, m=m, k=k), degree))
    if 'affine' in tags:
        f = sympy.factorint(n)
        if len(f) == 1:
            (p, k), = f.items()
            degree = ambient_order(n, group_type) // affine_stabilizer(n, group_type).order()
            candidates.append((action_family('affine', n, k=int(k), p=int(p)), degree))
    if 'wreath' in tags:
        for m in range(5, n):
            k = 2
            while m ** k < n:
                k += 1
            if m ** k == n:
                W = wreath_subgroup(m, k, group_type)
                candidates.append((action_family('wreath', n, m=m, k=k),
                                   ambient_order(n, group_type) // W.order()))
    specs, exclusions = [], []
    for fam, degree in candidates:
        if degree <= degree_cap:
            specs.append(ActionSpec(n, group_type, fam, degree))
        else:
            exclusions.append({'n': n, 'group_type': group_type, 'family': fam.tag,
                               'parameters': dict(fam.parameters), 'degree': degree,
                               'cap_name': 'degree_cap', 'cap': degree_cap})
    return specs, exclusions
