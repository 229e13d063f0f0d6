"""
Permutations of {0,...,n-1} stored as image tables.

Points are 0-based internally and 1-based in cycle text. Products follow the right
action convention used throughout the package: in p * q the permutation p is applied
first, so x ↦ q(p(x)), and the conjugate of p by g is g^-1 p g.
"""

import re
from math import gcd
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import IncompatibleDegreeError, MalformedCycleError, OutOfRangeError

_CYCLE_RE = re.compile(r'\(([^()]*)\)')
_CYCLE_TEXT_RE = re.compile(r'^\s*(\([^()]*\)\s*)+$')

IMAGE_DTYPE = np.int32


class Permutation:
    """
    Immutable bijection of {0,...,degree-1}.

    Parameters
    ----------
        images : sequence of int
            images[x] is the image of the point x.
    """

    __slots__ = ('_images', '_key')

    def __init__(self, images: Union[Sequence[int], np.ndarray]):
        arr = np.array(images, dtype=IMAGE_DTYPE)
        if arr.ndim != 1 or len(arr) == 0:
            raise MalformedCycleError('a permutation needs a non-empty one-dimensional image table')
        if not np.array_equal(np.sort(arr), np.arange(len(arr))):
            raise MalformedCycleError(f'images {arr.tolist()} are not a bijection of 0..{len(arr)-1}')
        arr.setflags(write=False)
        self._images = arr
        self._key = None

    @classmethod
    def _from_array(cls, arr: np.ndarray) -> 'Permutation':
        # trusted constructor, the caller guarantees a bijection
        p = cls.__new__(cls)
        if arr.dtype != IMAGE_DTYPE:
            arr = arr.astype(IMAGE_DTYPE)
        arr.setflags(write=False)
        p._images = arr
        p._key = None
        return p

    @property
    def images(self) -> np.ndarray:
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    def key(self) -> bytes:
        if self._key is None:
            self._key = self._images.tobytes()
        return self._key

    def __call__(self, x: int) -> int:
        if not 0 <= x < self.degree:
            raise OutOfRangeError(f'point {x} outside 0..{self.degree-1}')
        return int(self._images[x])

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        return compose(self, other)

    def __invert__(self) -> 'Permutation':
        return inverse(self)

    def __pow__(self, k: int) -> 'Permutation':
        if k < 0:
            return inverse(self) ** (-k)
        result = identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.degree == other.degree and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __lt__(self, other: 'Permutation') -> bool:
        return tuple(self._images.tolist()) < tuple(other._images.tolist())

    def is_identity(self) -> bool:
        return bool(np.array_equal(self._images, np.arange(self.degree)))

    def cycles(self, include_fixed=False) -> List[Tuple[int, ...]]:
        """
        Disjoint cycles (0-based), each starting at its least point, ordered by that point.
        """
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        images = self._images.tolist()
        for x in range(self.degree):
            if seen[x]:
                continue
            cycle = [x]
            seen[x] = True
            y = images[x]
            while y != x:
                cycle.append(y)
                seen[y] = True
                y = images[y]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    @property
    def support(self) -> List[int]:
        return np.flatnonzero(self._images != np.arange(self.degree)).tolist()

    def order(self) -> int:
        o = 1
        for c in self.cycles():
            o = o * len(c) // gcd(o, len(c))
        return o

    def sign(self) -> int:
        ncycles = len(self.cycles(include_fixed=True))
        return -1 if (self.degree - ncycles) % 2 else 1

    def is_even(self) -> bool:
        return self.sign() == 1

    def __str__(self) -> str:
        return render_cycles(self)

    def __repr__(self) -> str:
        return f'Permutation({render_cycles(self)}, degree={self.degree})'

    def __reduce__(self):
        return (Permutation, (self._images.tolist(),))


def identity(degree: int) -> Permutation:
    if degree < 1:
        raise OutOfRangeError(f'degree must be positive, got {degree}')
    return Permutation._from_array(np.arange(degree, dtype=IMAGE_DTYPE))


def parse_cycles(text: str, degree: int) -> Permutation:
    """
    Parses a product of disjoint cycles over the 1-based points 1..degree.

    Parameters
    ----------
        text : str
            e.g. "(1 2 3)(4 5)", "()" for the identity. Points inside a cycle are
            separated by whitespace or commas.
        degree : int
            number of points, never inferred from the text.

    Returns
    -------
        Permutation
    """
    if degree < 1:
        raise OutOfRangeError(f'degree must be positive, got {degree}')
    if not _CYCLE_TEXT_RE.match(text):
        raise MalformedCycleError(f'cannot parse cycle notation {text!r}')
    images = list(range(degree))
    used = set()
    for body in _CYCLE_RE.findall(text):
        tokens = [t for t in re.split(r'[\s,]+', body.strip()) if t]
        if not tokens:
            continue
        try:
            points = [int(t) for t in tokens]
        except ValueError:
            raise MalformedCycleError(f'non-integer point in {text!r}') from None
        for x in points:
            if x < 1 or x > degree:
                raise OutOfRangeError(f'point {x} outside 1..{degree} in {text!r}')
            if x in used:
                raise MalformedCycleError(f'point {x} repeated in {text!r}')
            used.add(x)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a - 1] = b - 1
    return Permutation._from_array(np.array(images, dtype=IMAGE_DTYPE))


def render_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return '()'
    return ''.join('(' + ' '.join(str(x + 1) for x in c) + ')' for c in cycles)


def _check_degrees(p: Permutation, q: Permutation):
    if p.degree != q.degree:
        raise IncompatibleDegreeError(f'degrees {p.degree} and {q.degree} differ')


def compose(p: Permutation, q: Permutation) -> Permutation:
    """x ↦ q(p(x))"""
    _check_degrees(p, q)
    return Permutation._from_array(q._images[p._images])


def inverse(p: Permutation) -> Permutation:
    inv = np.empty_like(p._images)
    inv[p._images] = np.arange(p.degree, dtype=IMAGE_DTYPE)
    return Permutation._from_array(inv)


def conjugate(p: Permutation, g: Permutation) -> Permutation:
    """g^-1 p g, i.e. the permutation sending g(x) to g(p(x))."""
    _check_degrees(p, g)
    return compose(compose(inverse(g), p), g)


def random_permutation(degree: int, rng: Optional[np.random.Generator] = None) -> Permutation:
    rng = np.random.default_rng() if rng is None else rng
    return Permutation._from_array(rng.permutation(degree).astype(IMAGE_DTYPE))


def parse_generators(texts: Sequence[str], degree: int) -> List[Permutation]:
    return [parse_cycles(t, degree) for t in texts]
