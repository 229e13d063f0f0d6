from typing import List, Optional, Sequence

from .errors import IncompatibleDegreeError, ParameterError
from .permutations import Permutation, parse_cycles, render_cycles
from .stabilizer_chain import build_chain


class PermGroup:
    """
    Finitely generated permutation group with a stabilizer chain.

    The chain is built once, at construction, by deterministic Schreier-Sims; the
    group is read-only afterwards (chains rebuilt on other bases are cached).
    Methods come from the *_operations modules, in the manner of a mixin.
    """

    from .stabilizer_chain import \
        order,\
        base,\
        strong_generators,\
        sift,\
        contains,\
        chain_with_base,\
        stabilizer_orders,\
        elements,\
        random_element

    from .orbit_operations import \
        orbit,\
        orbits,\
        is_transitive,\
        point_stabilizer,\
        tuple_stabilizer,\
        suborbits,\
        rank,\
        alternating_part

    from .block_operations import \
        minimal_block,\
        is_primitive

    from .intersection_operations import \
        is_subgroup,\
        intersection

    def __init__(self, generators: Sequence[Permutation], degree: int,
                 known_order: Optional[int] = None, base_prefix: Sequence[int] = (), _chain=None):
        self.degree = degree
        self.generators: List[Permutation] = [g for g in generators if not g.is_identity()]
        self._chain_cache = {}
        if _chain is None:
            _chain = build_chain(self.generators, degree, base_prefix=base_prefix, known_order=known_order)
        self.chain = _chain

    def _from_chain(self, levels) -> 'PermGroup':
        """Group whose stabilizer chain is `levels`, e.g. a tail of this group's chain."""
        gens = list(levels[0].gens) if levels else []
        return self.__class__(gens, self.degree, _chain=list(levels))

    def is_trivial(self) -> bool:
        return not self.generators

    def generator_text(self) -> List[str]:
        return [render_cycles(g) for g in self.generators] or ['()']

    def __str__(self):
        s = f'PermGroup of degree {self.degree} and order {self.order()}\n'
        s += f'generators : {", ".join(self.generator_text())}\n'
        s += f'base : {[b + 1 for b in self.base()]}\n'
        return s

    def __repr__(self):
        return self.__str__()


def build_group(generators: Sequence[Permutation]) -> PermGroup:
    """
    Parameters
    ----------
        generators : non-empty list of Permutation of equal degree

    Returns
    -------
        PermGroup
    """
    generators = list(generators)
    if not generators:
        raise ParameterError('build_group needs at least one generator')
    degree = generators[0].degree
    for g in generators:
        if g.degree != degree:
            raise IncompatibleDegreeError(f'mixed degrees {degree} and {g.degree}')
    return PermGroup(generators, degree)


def group_from_cycles(texts: Sequence[str], degree: int) -> PermGroup:
    return build_group([parse_cycles(t, degree) for t in texts])


def trivial_group(degree: int) -> PermGroup:
    return PermGroup([], degree)


def intersection(H: PermGroup, K: PermGroup, **kwargs) -> PermGroup:
    return H.intersection(K, **kwargs)
