"""Rational roots of integer univariate polynomials.

Root candidates come from the rational root theorem, so we need divisor
enumeration of (possibly large) leading and trailing coefficients: trial
division for small factors, Miller-Rabin plus Pollard's rho for the rest.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic witness set for n < 3.3 * 10^24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        x = rng.randrange(2, n)
        y = x
        c = rng.randrange(1, n)
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| (n must be nonzero)."""
    if n == 0:
        raise ValueError("cannot factor zero")
    n = abs(n)
    factors: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    if n == 1:
        return factors
    rng = random.Random(0xC0FFEE)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m, rng)
        stack.append(d)
        stack.append(m // d)
    return factors


def divisors(n: int) -> list[int]:
    """Positive divisors of |n|, ascending."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def rational_roots(coeffs: list[Fraction]) -> tuple[list[tuple[Fraction, int]], bool]:
    """Rational roots with multiplicities of a univariate polynomial.

    ``coeffs`` are ascending (constant first).  Returns (roots, complete)
    where complete means the polynomial splits into rational linear factors,
    i.e. multiplicities sum to the degree.
    """
    # clear denominators and content
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ic = [int(c * den) for c in coeffs]
    while ic and ic[-1] == 0:
        ic.pop()
    if not ic:
        raise ValueError("zero polynomial has every rational number as a root")
    g = 0
    for v in ic:
        g = math.gcd(g, v)
    ic = [v // g for v in ic]
    deg = len(ic) - 1
    if deg == 0:
        return [], True

    # strip x^k factor: root 0 with multiplicity k
    k = 0
    while ic[k] == 0:
        k += 1
    roots: list[tuple[Fraction, int]] = []
    if k:
        roots.append((Fraction(0), k))
        ic = ic[k:]

    if len(ic) > 1:
        lead, trail = ic[-1], ic[0]
        candidates = set()
        for p in divisors(trail):
            for q in divisors(lead):
                if math.gcd(p, q) == 1:
                    candidates.add(Fraction(p, q))
                    candidates.add(Fraction(-p, q))
        for r in sorted(candidates):
            mult = 0
            cur = ic
            while len(cur) > 1 and _eval_int_poly(cur, r) == 0:
                cur = _deflate(cur, r)
                mult += 1
            if mult:
                roots.append((r, mult))
                ic = cur
    total = sum(m for _, m in roots)
    return sorted(roots), total == deg


def _eval_int_poly(coeffs: list[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deflate(coeffs: list[int], root: Fraction) -> list[int]:
    """Synthetic division by (x - root); the caller guarantees exactness."""
    q: list[Fraction] = [Fraction(0)] * (len(coeffs) - 1)
    carry = Fraction(0)
    for i in range(len(coeffs) - 1, 0, -1):
        carry = Fraction(coeffs[i]) + carry * root
        q[i - 1] = carry
    den = 1
    for c in q:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(c * den) for c in q]
