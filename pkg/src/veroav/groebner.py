"""Buchberger's algorithm over Q, with the ideal-theoretic helpers built on
top of it: normal forms, projective emptiness, Krull dimension, Hilbert
function values, and saturation by the irrelevant ideal.

The hot loop works on primitive integer coefficient dicts (content-stripped
after every reduction) rather than Fractions; rational arithmetic only
appears at the public boundary.  Pair management uses the Gebauer-Moeller
variant of the product and chain criteria with the normal selection strategy
(smallest lcm first).  A configurable degree cap turns runaway instances
into a diagnostic instead of silent looping.
"""

from __future__ import annotations

import heapq
import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from veroav.orders import GREVLEX, MonomialOrder
from veroav.polynomial import (
    Monomial,
    Polynomial,
    iter_monomials,
    mono_div,
    mono_lcm,
    mono_mul,
)

DEFAULT_DEGREE_CAP = 60


class DegreeCapExceeded(RuntimeError):
    """An S-polynomial exceeded the configured degree cap; the instance is
    beyond desk scale."""


class NonHomogeneousIdeal(ValueError):
    pass


def _degree_cap(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    return int(os.environ.get("VA_DEGREE_CAP", DEFAULT_DEGREE_CAP))


# ---------------------------------------------------------------------------
# integer engine


def _content(terms: dict[Monomial, int]) -> int:
    g = 0
    for c in terms.values():
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def _strip_content(terms: dict[Monomial, int]) -> dict[Monomial, int]:
    g = _content(terms)
    if g > 1:
        return {m: c // g for m, c in terms.items()}
    return terms


def _to_int_terms(p: Polynomial) -> dict[Monomial, int]:
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    return _strip_content({m: int(c * den) for m, c in p.terms.items()})


class _IPoly:
    """Primitive integer polynomial prepared for division."""

    __slots__ = ("terms", "lm", "lc", "tail", "degree")

    def __init__(self, terms: dict[Monomial, int], order: MonomialOrder):
        self.terms = terms
        self.lm = max(terms, key=order.key)
        lc = terms[self.lm]
        if lc < 0:
            terms = {m: -c for m, c in terms.items()}
            self.terms = terms
            lc = -lc
        self.lc = lc
        self.tail = [(m, c) for m, c in terms.items() if m != self.lm]
        self.degree = max(sum(m) for m in terms)


def _find_reducer(m: Monomial, reducers: Sequence[_IPoly]) -> _IPoly | None:
    for g in reducers:
        lm = g.lm
        for a, b in zip(m, lm):
            if a < b:
                break
        else:
            return g
    return None


def _normal_form_int(
    f: dict[Monomial, int],
    reducers: Sequence[_IPoly],
    order: MonomialOrder,
    track_scale: bool = True,
) -> tuple[dict[Monomial, int], int]:
    """Full normal form of f; returns (terms, scale) with value = terms/scale.

    With ``track_scale`` off the result is only meaningful up to a positive
    rational factor: intermediate content is stripped wholesale, which keeps
    coefficient growth down during basis building, where elements are made
    primitive anyway.
    """
    if not f:
        return {}, 1
    coeffs = dict(f)
    out: dict[Monomial, int] = {}
    scale = 1
    heap = [(order.neg_key(m), m) for m in coeffs]
    heapq.heapify(heap)
    steps = 0
    while heap:
        _, m = heapq.heappop(heap)
        c = coeffs.pop(m, 0)
        if not c:
            continue
        g = _find_reducer(m, reducers)
        if g is None:
            out[m] = c
            continue
        shift = mono_div(m, g.lm)
        q = math.gcd(c, g.lc)
        mult_all = g.lc // q
        mult_g = c // q
        if mult_all != 1:
            for k in coeffs:
                coeffs[k] *= mult_all
            for k in out:
                out[k] *= mult_all
            scale *= mult_all
        for mt, ct in g.tail:
            key = mono_mul(mt, shift)
            prev = coeffs.get(key)
            if prev is None:
                v = -mult_g * ct
                coeffs[key] = v
                heapq.heappush(heap, (order.neg_key(key), key))
            else:
                v = prev - mult_g * ct
                if v:
                    coeffs[key] = v
                else:
                    del coeffs[key]
        steps += 1
        if steps % 16 == 0 and scale > 1:
            g_all = math.gcd(_content(coeffs), _content(out))
            if not track_scale and g_all > 1:
                for k in coeffs:
                    coeffs[k] //= g_all
                for k in out:
                    out[k] //= g_all
                scale = 1
            else:
                g_all = math.gcd(scale, g_all)
                if g_all > 1:
                    for k in coeffs:
                        coeffs[k] //= g_all
                    for k in out:
                        out[k] //= g_all
                    scale //= g_all
    return out, scale


def _spoly_int(f: _IPoly, g: _IPoly) -> dict[Monomial, int]:
    L = mono_lcm(f.lm, g.lm)
    sf = mono_div(L, f.lm)
    sg = mono_div(L, g.lm)
    q = math.gcd(f.lc, g.lc)
    cf = g.lc // q
    cg = f.lc // q
    terms: dict[Monomial, int] = {}
    for m, c in f.terms.items():
        terms[mono_mul(m, sf)] = cf * c
    for m, c in g.terms.items():
        k = mono_mul(m, sg)
        v = terms.get(k, 0) - cg * c
        if v:
            terms[k] = v
        else:
            terms.pop(k, None)
    return terms


# ---------------------------------------------------------------------------
# Buchberger proper


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic generators, none of whose terms is
    divisible by another generator's leading monomial."""

    nvars: int
    generators: tuple[Polynomial, ...]
    order: MonomialOrder
    leading_monomials: tuple[Monomial, ...]
    reduced: bool = True

    def is_zero_ideal(self) -> bool:
        return not self.generators

    def is_unit_ideal(self) -> bool:
        return any(sum(lm) == 0 for lm in self.leading_monomials)

    def contains(self, p: Polynomial) -> bool:
        return normal_form(p, self).is_zero()


def _gm_update(
    basis: list[_IPoly],
    pairs: set[tuple[int, int]],
    new_index: int,
) -> set[tuple[int, int]]:
    """Gebauer-Moeller pair update: chain criterion on old pairs, then lcm
    minimalization and the product criterion on the new ones."""
    lm = [g.lm for g in basis]
    t = new_index
    lmt = lm[t]
    kept = set()
    for (i, j) in pairs:
        lcm_ij = mono_lcm(lm[i], lm[j])
        if (
            mono_div(lcm_ij, lmt) is None
            or lcm_ij == mono_lcm(lm[i], lmt)
            or lcm_ij == mono_lcm(lm[j], lmt)
        ):
            kept.add((i, j))
    by_lcm: dict[Monomial, list[int]] = {}
    for i in range(t):
        by_lcm.setdefault(mono_lcm(lm[i], lmt), []).append(i)
    minimal: list[Monomial] = []
    for L in sorted(by_lcm, key=sum):
        if all(mono_div(L, M) is None for M in minimal):
            minimal.append(L)
    for L in minimal:
        group = by_lcm[L]
        if any(mono_lcm(lm[i], lmt) == mono_mul(lm[i], lmt) for i in group):
            continue  # product criterion: coprime leading monomials
        kept.add((min(group), t))
    return kept


def buchberger(
    gens: Iterable[Polynomial],
    order: MonomialOrder = GREVLEX,
    degree_cap: int | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    polys = [g for g in gens if not g.is_zero()]
    if not polys:
        return GroebnerBasis(0, (), order, ())
    nvars = polys[0].nvars
    if any(p.nvars != nvars for p in polys):
        raise ValueError("generators live in different rings")
    cap = _degree_cap(degree_cap)

    basis: list[_IPoly] = []
    pairs: set[tuple[int, int]] = set()
    for p in sorted(polys, key=lambda q: (q.degree(), len(q.terms))):
        terms = _to_int_terms(p)
        reduced, _ = _normal_form_int(terms, basis, order, track_scale=False)
        if reduced:
            basis.append(_IPoly(_strip_content(reduced), order))
            pairs = _gm_update(basis, pairs, len(basis) - 1)

    while pairs:
        i, j = min(
            pairs,
            key=lambda p: (
                sum(mono_lcm(basis[p[0]].lm, basis[p[1]].lm)),
                order.key(mono_lcm(basis[p[0]].lm, basis[p[1]].lm)),
                p,
            ),
        )
        pairs.remove((i, j))
        lcm_deg = sum(mono_lcm(basis[i].lm, basis[j].lm))
        if lcm_deg > cap:
            raise DegreeCapExceeded(
                f"S-polynomial degree {lcm_deg} exceeds cap {cap}; "
                "set VA_DEGREE_CAP to raise the limit"
            )
        s = _strip_content(_spoly_int(basis[i], basis[j]))
        reduced, _ = _normal_form_int(s, basis, order, track_scale=False)
        if reduced:
            basis.append(_IPoly(_strip_content(reduced), order))
            pairs = _gm_update(basis, pairs, len(basis) - 1)

    return _reduce_basis(basis, nvars, order)


def _reduce_basis(
    basis: list[_IPoly], nvars: int, order: MonomialOrder
) -> GroebnerBasis:
    # minimalize: drop generators whose lm is divisible by another's
    basis_sorted = sorted(basis, key=lambda g: order.key(g.lm))
    minimal: list[_IPoly] = []
    for g in basis_sorted:
        if all(mono_div(g.lm, h.lm) is None for h in minimal):
            minimal.append(g)
    # interreduce tails
    final: list[Polynomial] = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        terms, _ = _normal_form_int(dict(g.terms), others, order, track_scale=False)
        terms = _strip_content(terms)
        lc = terms[max(terms, key=order.key)]
        final.append(Polynomial(nvars, {m: Fraction(c, lc) for m, c in terms.items()}))
    final.sort(key=lambda p: order.key(p.leading_monomial(order)), reverse=True)
    lms = tuple(p.leading_monomial(order) for p in final)
    return GroebnerBasis(nvars, tuple(final), order, lms)


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Unique remainder of p modulo the basis; zero iff p is in the ideal."""
    if gb.is_zero_ideal() or p.is_zero():
        return p
    if p.nvars != gb.nvars:
        raise ValueError("polynomial and basis live in different rings")
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    terms = {m: int(c * den) for m, c in p.terms.items()}
    reducers = [_IPoly(_to_int_terms(g), gb.order) for g in gb.generators]
    out, scale = _normal_form_int(terms, reducers, gb.order)
    total = den * scale
    return Polynomial(p.nvars, {m: Fraction(c, total) for m, c in out.items()})


# ---------------------------------------------------------------------------
# derived ideal computations


def _require_homogeneous(gb: GroebnerBasis) -> None:
    if any(not g.is_homogeneous() for g in gb.generators):
        raise NonHomogeneousIdeal("operation requires a homogeneous ideal")


def projective_empty(gb: GroebnerBasis) -> bool:
    """True iff the projective zero set is empty (over any field extension):
    every variable must have a pure power among the leading monomials."""
    _require_homogeneous(gb)
    if gb.is_zero_ideal():
        return False
    if gb.is_unit_ideal():
        return True
    for i in range(gb.nvars):
        if not any(
            lm[i] and all(e == 0 for k, e in enumerate(lm) if k != i)
            for lm in gb.leading_monomials
        ):
            return False
    return True


def krull_dim_quotient(gb: GroebnerBasis) -> int:
    """Affine Krull dimension of R/I, computed combinatorially from the
    leading-term ideal (largest variable subset meeting no leading support).
    Unit ideal gives -1; the projective dimension is this minus one."""
    if gb.is_zero_ideal():
        return gb.nvars if gb.nvars else 0
    if gb.is_unit_ideal():
        return -1
    n = gb.nvars
    supports = [frozenset(i for i, e in enumerate(lm) if e) for lm in gb.leading_monomials]
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            s = set(subset)
            if all(not sup <= s for sup in supports):
                return size
    return 0


def hilbert_value(gb: GroebnerBasis, degree: int) -> int:
    """Number of degree-``degree`` standard monomials of the leading-term
    ideal, i.e. dim_k (R/I)_degree for a homogeneous ideal."""
    if degree < 0:
        return 0
    if gb.is_zero_ideal():
        raise ValueError("zero ideal has no ambient variable count; use dim_graded")
    if gb.is_unit_ideal():
        return 0
    lms = gb.leading_monomials
    count = 0
    for m in iter_monomials(gb.nvars, degree):
        divisible = False
        for lm in lms:
            for a, b in zip(m, lm):
                if a < b:
                    break
            else:
                divisible = True
                break
        if not divisible:
            count += 1
    return count


def ideal_equal(a: GroebnerBasis, b: GroebnerBasis) -> bool:
    """Reduced bases in a common order are canonical, but the orders may
    differ, so fall back to mutual membership."""
    if a.order == b.order:
        return a.generators == b.generators
    return all(b.contains(g) for g in a.generators) and all(
        a.contains(g) for g in b.generators
    )


# ---------------------------------------------------------------------------
# elimination, colon and saturation


def _append_aux_var(p: Polynomial) -> Polynomial:
    return p.extend_vars(1)


def _eliminate_last_aux(
    gens_ext: Sequence[Polynomial], nvars: int, degree_cap: int | None
) -> list[Polynomial]:
    """GB in an order eliminating the auxiliary last variable, intersected
    with the original ring."""
    # move aux var to the front for the block order
    perm = (nvars,) + tuple(range(nvars))
    order = MonomialOrder("elim", elim_block=1, priority=perm)
    gb = buchberger(gens_ext, order, degree_cap)
    kept = []
    for g in gb.generators:
        if all(m[nvars] == 0 for m in g.terms):
            kept.append(g.drop_vars(list(range(nvars))))
    return kept


def saturate_by_variable(
    gens: Sequence[Polynomial], var: int, degree_cap: int | None = None
) -> list[Polynomial]:
    """Generators of (I : x_var^infinity) via the extra-variable trick."""
    if not gens:
        return []
    nvars = gens[0].nvars
    t = Polynomial.variable(nvars, nvars + 1)
    x_ext = Polynomial.variable(var, nvars + 1)
    one = Polynomial.constant(nvars + 1, 1)
    gens_ext = [_append_aux_var(g) for g in gens]
    gens_ext.append(one - t * x_ext)
    return _eliminate_last_aux(gens_ext, nvars, degree_cap)


def intersect_ideals(
    gens_a: Sequence[Polynomial], gens_b: Sequence[Polynomial], degree_cap: int | None = None
) -> list[Polynomial]:
    """I intersect J  =  (t*I + (1-t)*J) meet R."""
    if not gens_a or not gens_b:
        return []
    nvars = gens_a[0].nvars
    t = Polynomial.variable(nvars, nvars + 1)
    one = Polynomial.constant(nvars + 1, 1)
    gens_ext = [t * _append_aux_var(g) for g in gens_a]
    gens_ext += [(one - t) * _append_aux_var(g) for g in gens_b]
    return _eliminate_last_aux(gens_ext, nvars, degree_cap)


def saturate_irrelevant(
    gens: Sequence[Polynomial],
    order: MonomialOrder = GREVLEX,
    degree_cap: int | None = None,
) -> GroebnerBasis:
    """Groebner basis of (I : m^infinity), m the irrelevant maximal ideal,
    as the intersection of the per-variable saturations."""
    polys = [g for g in gens if not g.is_zero()]
    if not polys:
        return GroebnerBasis(0, (), order, ())
    if any(not p.is_homogeneous() for p in polys):
        raise NonHomogeneousIdeal("saturation by the irrelevant ideal needs homogeneous input")
    nvars = polys[0].nvars
    current: list[Polynomial] | None = None
    for var in range(nvars):
        sat = saturate_by_variable(polys, var, degree_cap)
        current = sat if current is None else intersect_ideals(current, sat, degree_cap)
    return buchberger(current or [], order, degree_cap)
