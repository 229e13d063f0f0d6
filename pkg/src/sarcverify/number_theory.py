"""
Exact arithmetic for the bounding arguments: p-parts, the Legendre bound on (n!)_p,
primitive prime divisors and the two r-part inequalities. Every comparison is done on
integer exponents, never in floating point.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Set, Tuple

import sympy

from .caps import ZSIGMONDY_BIT_CAP, ZSIGMONDY_SCAN_LIMIT
from .errors import CapacityError, ParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PPart:
    prime: int
    exponent: int

    @property
    def value(self) -> int:
        return self.prime ** self.exponent

    def __str__(self):
        return f'{self.prime}^{self.exponent}'


@dataclass(frozen=True)
class InequalityInstance:
    """
    r-parts entering the inequalities: |T|_r, |phi_1(G_uv ∩ M)|_r and |Out(T)|_r,
    with k the number of simple factors.
    """
    T_r: PPart
    r: int
    phi_r: PPart
    out_r: PPart
    k: int = 1

    def __post_init__(self):
        for part in (self.T_r, self.phi_r, self.out_r):
            if part.prime != self.r:
                raise ParameterError(f'{part} is not a power of r = {self.r}')


def is_prime(p: int) -> bool:
    return bool(sympy.isprime(p))


def _check_prime(p):
    if not is_prime(p):
        raise ParameterError(f'{p} is not prime')


def p_part(n: int, p: int) -> PPart:
    """
    Largest power of p dividing n.
    """
    if n < 1:
        raise ParameterError(f'p-part of {n} is undefined')
    _check_prime(p)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return PPart(p, e)


def prime_set(n: int) -> Set[int]:
    if n < 1:
        raise ParameterError(f'prime set of {n} is undefined')
    return set(sympy.primefactors(n))


def factorial_p_part(n: int, p: int) -> Tuple[PPart, bool]:
    """
    Legendre's formula for (n!)_p.

    Returns
    -------
        (PPart, bool) : the p-part of n! and whether its exponent is strictly
        smaller than n/(p-1).
    """
    if n < 1:
        raise ParameterError(f'n must be positive, got {n}')
    _check_prime(p)
    e = 0
    q = p
    while q <= n:
        e += n // q
        q *= p
    return PPart(p, e), e * (p - 1) < n


def _mobius(k: int) -> int:
    f = sympy.factorint(k)
    if any(v > 1 for v in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def cyclotomic_value(m: int, a: int) -> int:
    """Φ_m(a) as the product of (a^d - 1)^μ(m/d) over the divisors d of m."""
    num, den = 1, 1
    for d in sympy.divisors(m):
        mu = _mobius(m // d)
        if mu == 1:
            num *= a ** d - 1
        elif mu == -1:
            den *= a ** d - 1
    assert num % den == 0
    return num // den


def zsigmondy(a: int, m: int, bit_cap: Optional[int] = None, scan_limit: Optional[int] = None) -> Optional[int]:
    """
    Least primitive prime divisor of a^m - 1.

    The primitive prime divisors are the prime factors of Φ_m(a) that do not divide m,
    and each of them is 1 mod m. Candidates 1 + jm are tried by trial division first;
    a cofactor left after scan_limit candidates goes to sympy.factorint.

    Parameters
    ----------
        a, m : int, both at least 2
        bit_cap : int, default ZSIGMONDY_BIT_CAP
            largest bit length of a^m accepted.
        scan_limit : int, default ZSIGMONDY_SCAN_LIMIT

    Returns
    -------
        int or None : None in the exceptional cases (a, m) = (2, 6) and
        (2^e - 1, 2).
    """
    if a < 2 or m < 2:
        raise ParameterError(f'zsigmondy needs a >= 2 and m >= 2, got ({a}, {m})')
    bit_cap = ZSIGMONDY_BIT_CAP if bit_cap is None else bit_cap
    scan_limit = ZSIGMONDY_SCAN_LIMIT if scan_limit is None else scan_limit
    if m * (a.bit_length() - 1) > bit_cap or (a ** m).bit_length() > bit_cap:
        raise CapacityError('ZSIGMONDY_BIT_CAP', bit_cap, what=f'{a}^{m}')

    c = cyclotomic_value(m, a)
    for q in sympy.primefactors(m):
        while c % q == 0:
            c //= q
    if c == 1:
        return None

    r = 1
    for _ in range(scan_limit):
        r += m
        if r * r > c:
            return c
        if c % r == 0:
            # the least divisor of c above 1 in this progression is prime
            return r
    if is_prime(c):
        return c
    logger.debug(f'factorising cofactor of Φ_{m}({a}) with {c.bit_length()} bits')
    return min(sympy.factorint(c))


def lemma44_exponents(inst: InequalityInstance) -> Tuple[int, int]:
    """
    Exponents of r on both sides of |T|_r < r |phi_r|^2.
    """
    return inst.T_r.exponent, 1 + 2 * inst.phi_r.exponent


def lemma44_holds(inst: InequalityInstance) -> bool:
    left, right = lemma44_exponents(inst)
    return left < right


def lemma45_exponents(inst: InequalityInstance) -> Tuple[int, int]:
    """
    Exponents of |T|_r^{2k} < r^{k/(r-1)} |phi_r|^{3k} |Out(T)|_r, both multiplied
    by r - 1 so that they stay integers.
    """
    if inst.k < 2:
        raise ParameterError(f'k must be at least 2, got {inst.k}')
    k, r = inst.k, inst.r
    left = 2 * k * inst.T_r.exponent * (r - 1)
    right = k + 3 * k * inst.phi_r.exponent * (r - 1) + inst.out_r.exponent * (r - 1)
    return left, right


def lemma45_holds(inst: InequalityInstance) -> bool:
    left, right = lemma45_exponents(inst)
    return left < right
