"""Monomial orders as flat integer sort keys.

A monomial is a tuple of exponents.  Each order turns a monomial into a flat
tuple of ints such that ``key(a) < key(b)`` iff ``a`` precedes ``b`` in the
order; max() over keys therefore picks the leading monomial.  Flat keys can
be negated componentwise, which the division algorithm's max-heap relies on.
"""

from __future__ import annotations

from dataclasses import dataclass


def _grevlex_key(m: tuple[int, ...]) -> tuple[int, ...]:
    return (sum(m), *(-e for e in reversed(m)))


def _grlex_key(m: tuple[int, ...]) -> tuple[int, ...]:
    return (sum(m), *m)


@dataclass(frozen=True)
class MonomialOrder:
    """A well-order on monomials compatible with multiplication.

    kind: "grevlex", "grlex", "lex" or "elim".  For "elim", the first
    ``elim_block`` variables (after applying ``priority``) are eliminated:
    any monomial involving them beats any monomial that does not.
    ``priority`` optionally permutes variables before comparison; it lists
    variable indices from most significant to least.
    """

    kind: str = "grevlex"
    elim_block: int = 0
    priority: tuple[int, ...] | None = None

    def key(self, m: tuple[int, ...]) -> tuple[int, ...]:
        if self.priority is not None:
            m = tuple(m[i] for i in self.priority)
        if self.kind == "grevlex":
            return _grevlex_key(m)
        if self.kind == "grlex":
            return _grlex_key(m)
        if self.kind == "lex":
            return m
        if self.kind == "elim":
            k = self.elim_block
            return _grevlex_key(m[:k]) + _grevlex_key(m[k:])
        raise ValueError(f"unknown monomial order kind: {self.kind!r}")

    def neg_key(self, m: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(-x for x in self.key(m))

    def leading(self, monomials) -> tuple[int, ...]:
        return max(monomials, key=self.key)


GREVLEX = MonomialOrder("grevlex")
GRLEX = MonomialOrder("grlex")
LEX = MonomialOrder("lex")


def elimination_first(k: int) -> MonomialOrder:
    """Order eliminating the first ``k`` variables."""
    return MonomialOrder("elim", elim_block=k)


def lex_eliminating_down_to_first(nvars: int) -> MonomialOrder:
    """Lex order with x_n > ... > x_1, so eliminants end up in x_1."""
    return MonomialOrder("lex", priority=tuple(range(nvars - 1, -1, -1)))
