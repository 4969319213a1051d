"""Sparse multivariate polynomials with exact rational coefficients.

Terms map exponent tuples to nonzero ``Fraction`` values.  Values are
immutable once built; every operation returns a fresh polynomial, so sharing
across threads is safe.  Variables are anonymous positions 0..nvars-1; names
exist only in the parser/printer.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from veroav.orders import GRLEX, MonomialOrder

Monomial = tuple[int, ...]


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial | None:
    """a / b, or None when b does not divide a."""
    q = []
    for x, y in zip(a, b):
        if x < y:
            return None
        q.append(x - y)
    return tuple(q)


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a: Monomial) -> int:
    return sum(a)


def iter_monomials(nvars: int, degree: int) -> Iterator[Monomial]:
    """All exponent tuples of the given total degree (unordered)."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    if nvars == 1:
        yield (degree,)
        return
    for e in range(degree + 1):
        for rest in iter_monomials(nvars - 1, degree - e):
            yield (e,) + rest


class Polynomial:
    """Immutable sparse polynomial over Q."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Fraction | int] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                if len(mono) != nvars:
                    raise ValueError(f"monomial {mono} has wrong arity for nvars={nvars}")
                c = Fraction(coeff)
                if c:
                    clean[tuple(mono)] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):  # pragma: no cover - guards immutability
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Polynomial":
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for {nvars} variables")
        mono = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {mono: Fraction(1)})

    @classmethod
    def monomial(cls, exps: Monomial, coeff=1) -> "Polynomial":
        return cls(len(exps), {tuple(exps): Fraction(coeff)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((mono_deg(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {mono_deg(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_degree(self) -> int:
        """Degree of a nonzero homogeneous polynomial."""
        degs = {mono_deg(m) for m in self.terms}
        if len(degs) != 1:
            raise ValueError("polynomial is zero or not homogeneous")
        return degs.pop()

    def coeff(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def leading_monomial(self, order: MonomialOrder = GRLEX) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return order.leading(self.terms)

    def sorted_terms(self, order: MonomialOrder = GRLEX, reverse: bool = True):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=reverse)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, Fraction(0)) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial(self.nvars, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        if len(self.terms) > len(other.terms):
            big, small = self.terms, other.terms
        else:
            big, small = other.terms, self.terms
        terms: dict[Monomial, Fraction] = {}
        for m2, c2 in small.items():
            for m1, c1 in big.items():
                m = mono_mul(m1, m2)
                s = terms.get(m, Fraction(0)) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        return Polynomial(self.nvars, terms)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial(self.nvars, {m: v * c for m, v in self.terms.items()})

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.nvars, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        from veroav.parsing import render_poly

        return f"Polynomial({self.nvars}, {render_poly(self)!r})"

    def _check(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different rings")

    # -- calculus and substitution ----------------------------------------

    def partial(self, i: int) -> "Polynomial":
        """Exact formal partial derivative with respect to variable i."""
        if not 0 <= i < self.nvars:
            raise ValueError(f"variable index {i} out of range")
        terms: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                dm = m[:i] + (e - 1,) + m[i + 1 :]
                terms[dm] = terms.get(dm, Fraction(0)) + c * e
        return Polynomial(self.nvars, {m: c for m, c in terms.items() if c})

    def gradient(self) -> list["Polynomial"]:
        return [self.partial(i) for i in range(self.nvars)]

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError("point has wrong length")
        vals = [Fraction(v) for v in point]
        total = Fraction(0)
        for m, c in self.terms.items():
            prod = c
            for v, e in zip(vals, m):
                if e:
                    prod *= v**e
            total += prod
        return total

    def substitute(self, assignment: Mapping[int, "Polynomial"]) -> "Polynomial":
        """Replace variables by polynomials (all in the same ring)."""
        result = Polynomial.zero(self.nvars)
        power_cache: dict[tuple[int, int], Polynomial] = {}
        for m, c in self.terms.items():
            term = Polynomial.constant(self.nvars, c)
            for i, e in enumerate(m):
                if not e:
                    continue
                if i in assignment:
                    key = (i, e)
                    if key not in power_cache:
                        power_cache[key] = assignment[i] ** e
                    term = term * power_cache[key]
                else:
                    term = term * Polynomial.monomial(
                        tuple(e if j == i else 0 for j in range(self.nvars))
                    )
            result = result + term
        return result

    def extend_vars(self, extra: int) -> "Polynomial":
        """Same polynomial viewed in a ring with ``extra`` new last variables."""
        pad = (0,) * extra
        return Polynomial(self.nvars + extra, {m + pad: c for m, c in self.terms.items()})

    def specialize(self, values: Mapping[int, Fraction | int]) -> "Polynomial":
        """Plug constants into some variables; the arity does not change."""
        terms: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            coeff = c
            new = list(m)
            for i, v in values.items():
                e = m[i]
                if e:
                    coeff *= Fraction(v) ** e
                new[i] = 0
            if coeff:
                key = tuple(new)
                s = terms.get(key, Fraction(0)) + coeff
                if s:
                    terms[key] = s
                else:
                    del terms[key]
        return Polynomial(self.nvars, terms)

    def drop_vars(self, keep: Sequence[int]) -> "Polynomial":
        """Project onto the listed variables; all others must be absent."""
        keep = list(keep)
        keep_set = set(keep)
        terms: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            if any(e and i not in keep_set for i, e in enumerate(m)):
                raise ValueError("polynomial involves a dropped variable")
            terms[tuple(m[i] for i in keep)] = c
        return Polynomial(len(keep), terms)

    # -- integer normal forms ---------------------------------------------

    def primitive_integer(self) -> "Polynomial":
        """Scale by a positive rational so coefficients are coprime integers."""
        if not self.terms:
            return self
        den_lcm = 1
        for c in self.terms.values():
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        nums = [int(c * den_lcm) for c in self.terms.values()]
        g = 0
        for v in nums:
            g = math.gcd(g, v)
        return self.scale(Fraction(den_lcm, g))

    def normalized_primitive(self, order: MonomialOrder = GRLEX) -> "Polynomial":
        """Primitive integer form with positive leading coefficient."""
        p = self.primitive_integer()
        if p.terms and p.terms[p.leading_monomial(order)] < 0:
            p = -p
        return p


def poly_sum(polys: Iterable[Polynomial], nvars: int) -> Polynomial:
    total = Polynomial.zero(nvars)
    for p in polys:
        total = total + p
    return total
