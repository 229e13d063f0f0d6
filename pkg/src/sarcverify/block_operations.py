"""
Block systems and primitivity. The minimal block containing two points is the
union-find closure of the pair under the generators; a transitive group is primitive
iff the minimal block through the first point and a representative of every
nontrivial suborbit is the whole point set.
"""

from dataclasses import dataclass
from typing import List, Tuple, Union

from .errors import NotTransitiveError, OutOfRangeError


@dataclass(frozen=True)
class BlockSystem:
    block_map: Tuple[int, ...]
    block_count: int

    def blocks(self) -> List[List[int]]:
        out = [[] for _ in range(self.block_count)]
        for x, b in enumerate(self.block_map):
            out[b].append(x)
        return out

    @property
    def block_size(self) -> int:
        return len(self.block_map) // self.block_count

    def is_trivial(self) -> bool:
        return self.block_count in (1, len(self.block_map))

    def to_cycle_text(self) -> List[str]:
        return ['{' + ','.join(str(x + 1) for x in block) + '}' for block in self.blocks()]


def minimal_block(self, a: int, b: int) -> BlockSystem:
    """
    Finest block system in which a and b share a block.
    """
    n = self.degree
    for x in (a, b):
        if not 0 <= x < n:
            raise OutOfRangeError(f'point {x} outside 0..{n-1}')
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    images = [g.images.tolist() for g in self.generators]
    queue = []
    ra, rb = find(a), find(b)
    if ra != rb:
        parent[rb] = ra
        queue.append((a, b))
    while queue:
        x, y = queue.pop()
        for img in images:
            rx, ry = find(img[x]), find(img[y])
            if rx != ry:
                parent[ry] = rx
                queue.append((rx, ry))

    numbering = {}
    block_map = []
    for x in range(n):
        root = find(x)
        if root not in numbering:
            numbering[root] = len(numbering)
        block_map.append(numbering[root])
    return BlockSystem(tuple(block_map), len(numbering))


def is_primitive(self, witness=False) -> Union[bool, Tuple[bool, BlockSystem]]:
    """
    Primitivity test of a transitive group.

    Parameters
    ----------
        witness : bool
            if True, returns (primitive, block_system) where block_system is a
            nontrivial BlockSystem when the group is imprimitive and None otherwise.

    Returns
    -------
        bool, or (bool, BlockSystem or None)
    """
    if not self.is_transitive():
        raise NotTransitiveError(f'group of degree {self.degree} is not transitive')
    found = None
    if self.degree > 2:
        for sub in self.suborbits(0)[1:]:
            blocks = minimal_block(self, 0, sub[0])
            if blocks.block_count > 1:
                found = blocks
                break
    if witness:
        return found is None, found
    return found is None
