"""
Factorisations G = HK of permutation groups, decided by |H||K|/|H ∩ K| = |G|, the
search for homogeneous factorisations of a small group, and the projections of a
subgroup of a wreath product onto its coordinates.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Set

import numpy as np
from typing_extensions import Literal

from .caps import SUBGROUP_CAP
from .errors import IncompatibleDegreeError, NotSubgroupError, NotTransitiveError, ParameterError
from .number_theory import prime_set
from .permutations import IMAGE_DTYPE, Permutation, inverse
from .subgroup_lattice import subgroup_classes

logger = logging.getLogger(__name__)


@dataclass
class FactorizationResult:
    holds: bool
    order_G: int
    order_H: int
    order_K: int
    order_intersection: int

    @property
    def product_order(self) -> int:
        return self.order_H * self.order_K // self.order_intersection

    def to_dict(self) -> dict:
        return {'holds': self.holds, 'order_G': self.order_G, 'order_H': self.order_H,
                'order_K': self.order_K, 'order_intersection': self.order_intersection,
                'product_order': self.product_order}


def is_factorization(G, H, K, method: str = 'backtrack', cap: Optional[int] = None) -> FactorizationResult:
    """
    Whether G = HK.

    Parameters
    ----------
        G, H, K : PermGroup with H, K <= G
        method, cap : passed to the intersection

    Raises
    ------
        NotSubgroupError : H or K is not a subgroup of G.
        CapacityError : the intersection search exceeded its cap.
    """
    for X in (H, K):
        if X.degree != G.degree:
            raise IncompatibleDegreeError(f'degrees {X.degree} and {G.degree} differ')
        if not G.is_subgroup(X):
            raise NotSubgroupError('factor is not a subgroup of G')
    inter = H.intersection(K, method=method, cap=cap)
    result = FactorizationResult(False, G.order(), H.order(), K.order(), inter.order())
    result.holds = result.product_order == result.order_G
    return result


@dataclass
class HomogeneousFactorization:
    """
    G = AB with |A| = |B|. `evidence` is 'conjugate-in-G' when A and B come from the
    same class of subgroups of G and 'order-equal' otherwise; isomorphism of
    non-conjugate factors is not tested.
    """
    A: object
    B: object
    order: int
    index: int
    evidence: Literal['conjugate-in-G', 'order-equal']
    order_intersection: int


def homogeneous_factorizations(G, min_index: int = 3, cap: Optional[int] = None) -> List[HomogeneousFactorization]:
    """
    All factorisations G = AB with |A| = |B| and |G:A| >= min_index, up to conjugacy
    of each factor.

    G = AB holds iff G = AB^g for every g, so testing class representatives suffices.

    Raises
    ------
        CapacityError : |G| > cap (default SUBGROUP_CAP).
    """
    cap = SUBGROUP_CAP if cap is None else cap
    lattice = subgroup_classes(G, cap)
    table = lattice.table
    order = table.size
    found = []
    classes = lattice.classes
    for i, A in enumerate(classes):
        if order // A.order < min_index:
            continue
        for B in classes[i:]:
            if B.order != A.order:
                continue
            inter = int((A.mask & B.mask).sum())
            if A.order * B.order // inter != order:
                continue
            evidence = 'conjugate-in-G' if A is B else 'order-equal'
            found.append(HomogeneousFactorization(A.to_group(table), B.to_group(table), A.order,
                                                  order // A.order, evidence, inter))
    logger.info(f'{len(found)} homogeneous factorisations of a group of order {order} '
                f'with index >= {min_index}')
    return found


def verify_factorization_sampling(G, A, B, samples: int = 1000,
                                  rng: Optional[np.random.Generator] = None) -> bool:
    """
    Checks that random elements g of G decompose as ab: some representative a of the
    cosets a(A ∩ B) in A has a^-1 g in B.
    """
    rng = np.random.default_rng() if rng is None else rng
    inter = A.intersection(B)
    reps = []
    covered = set()
    inter_rows = inter.elements()
    for row in A.elements():
        a = Permutation._from_array(row.copy())
        if a.key() in covered:
            continue
        reps.append(inverse(a))
        for c in inter_rows:
            covered.add(Permutation._from_array(c[row]).key())
    for _ in range(samples):
        g = G.random_element(rng)
        if not any(B.contains(ainv * g) for ainv in reps):
            return False
    return True


@dataclass
class WreathContext:
    """Aligned blocks R_1..R_k: the j-th point of every block corresponds."""
    blocks: List[List[int]]

    def __post_init__(self):
        sizes = {len(b) for b in self.blocks}
        points = sorted(x for b in self.blocks for x in b)
        if len(sizes) != 1 or len(self.blocks) < 2 or points != list(range(len(points))):
            raise ParameterError('blocks must be at least two equal-size parts of 0..n-1')

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    @property
    def degree(self) -> int:
        return self.block_size * len(self.blocks)


@dataclass
class ProjectionReport:
    equal: bool
    kernel_order: int
    projection_orders: List[int]
    primes: Set[int]
    prime_containment: Optional[bool] = None
    projections: list = field(default_factory=list, repr=False)


def _block_permutation(g: Permutation, context: WreathContext) -> List[int]:
    where = {}
    for i, b in enumerate(context.blocks):
        for x in b:
            where[x] = i
    image = []
    for b in context.blocks:
        targets = {where[int(g.images[x])] for x in b}
        if len(targets) != 1:
            raise ParameterError(f'{g} does not preserve the blocks')
        image.append(targets.pop())
    return image


def wreath_projection_check(G_sub, context: WreathContext, T_order: Optional[int] = None) -> ProjectionReport:
    """
    Projections of G_sub ∩ M onto the blocks, M the pointwise block stabilizer.

    The kernel on the blocks is computed as a point stabilizer of the action on the
    points together with the blocks; each kernel generator is restricted to each block
    and read through the alignment.

    Parameters
    ----------
        G_sub : PermGroup preserving the blocks and transitive on them
        context : WreathContext
        T_order : optional order whose primes should all divide the projection order

    Raises
    ------
        NotTransitiveError : G_sub is not transitive on the blocks.
    """
    n, k, m = context.degree, len(context.blocks), context.block_size
    if G_sub.degree != n:
        raise IncompatibleDegreeError(f'group of degree {G_sub.degree}, blocks cover {n} points')
    combined = []
    for g in G_sub.generators:
        blocks_image = np.asarray(_block_permutation(g, context)) + n
        combined.append(Permutation._from_array(np.concatenate([g.images, blocks_image]).astype(IMAGE_DTYPE)))
    big = G_sub.__class__(combined, n + k, known_order=G_sub.order())
    if not big.orbit(n) == list(range(n, n + k)):
        raise NotTransitiveError('subgroup is not transitive on the blocks')
    kernel = big.tuple_stabilizer(range(n, n + k))
    kernel_gens = [g.images[:n] for g in kernel.generators]

    projections = []
    for b in context.blocks:
        position = {x: j for j, x in enumerate(b)}
        gens = [Permutation([position[int(img[x])] for x in b]) for img in kernel_gens]
        projections.append(G_sub.__class__(gens, m))
    first = projections[0]
    equal = all(P.order() == first.order() and first.is_subgroup(P) for P in projections[1:])
    primes = prime_set(first.order())
    report = ProjectionReport(equal, kernel.order(), [P.order() for P in projections], primes,
                              projections=projections)
    if T_order is not None:
        report.prime_containment = prime_set(T_order) <= primes
    return report
