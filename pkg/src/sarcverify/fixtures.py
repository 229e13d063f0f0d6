"""
Small transitive actions with directed orbitals, used to exercise the s-arc machinery
on inputs that are not A_n or S_n actions.
"""

from typing import Callable, Dict

from .coset_operations import GroupAction, action_on_points
from .errors import ParameterError
from .permgroup import PermGroup, group_from_cycles
from .permutations import Permutation


def _cycle_text(n):
    return '(' + ' '.join(str(i) for i in range(1, n + 1)) + ')'


def directed_cycle(n: int = 5) -> GroupAction:
    """Z_n acting regularly, its orbitals are directed cycle unions."""
    if n < 3:
        raise ParameterError(f'directed cycle needs n >= 3, got {n}')
    return action_on_points(group_from_cycles([_cycle_text(n)], n), name=f'Z{n}')


def frobenius21() -> GroupAction:
    """x -> ax + b on F_7 with a a nonzero square; two paired orbitals of valency 3."""
    G = group_from_cycles(['(1 2 3 4 5 6 7)', '(2 3 5)(4 7 6)'], 7)
    return action_on_points(G, name='F21')


def dihedral(n: int = 5) -> GroupAction:
    if n < 3:
        raise ParameterError(f'dihedral action needs n >= 3, got {n}')
    reflection = Permutation([(-x) % n for x in range(n)])
    G = PermGroup([group_from_cycles([_cycle_text(n)], n).generators[0], reflection], n)
    return action_on_points(G, name=f'D{2 * n}')


def s3() -> GroupAction:
    return action_on_points(group_from_cycles(['(1 2 3)', '(1 2)'], 3), name='S3')


FIXTURES: Dict[str, Callable[[], GroupAction]] = {
    'directed_cycle': directed_cycle,
    'frobenius21': frobenius21,
    'dihedral': dihedral,
    's3': s3,
}


def fixture(name: str) -> GroupAction:
    if name not in FIXTURES:
        raise ParameterError(f'unknown fixture {name!r}, expected one of {sorted(FIXTURES)}')
    return FIXTURES[name]()
