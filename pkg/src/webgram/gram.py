"""Gram determinants of cell modules.

Two independent routes to the same determinant: the closed form (product
over poset edges of kappa raised to the number of bottom-to-top paths
through the edge) and the recursive block-diagonal form (one block per
predecessor weight, scaled by kappa).  Determinants are carried in
factored form (quantum-integer index -> exponent) and materialized into a
reduced rational function and a polynomial in delta on demand.
"""
from __future__ import annotations

from functools import cached_property, lru_cache

from .kappa import (KappaValue, factors_value, format_factors, strip_factors)
from .poset import build_poset
from .qarith import DeltaPoly, RatFunc, to_delta_poly
from .weights import Partition, Word, format_partition, omega, part, partition


class GramDeterminant:
    """A cell-module Gram determinant in factored and reduced forms.

    `kappa_powers` keeps the construction-order (kappa, exponent) pairs,
    one per poset edge; `factors` is the cancelled quantum-integer
    multiset; `value` and `delta_form` are computed lazily.  `empty` flags
    the zero-dimensional module, whose determinant is the empty product 1.
    """

    def __init__(self, kappa_powers: tuple[tuple[KappaValue, int], ...],
                 empty: bool = False):
        self.kappa_powers = kappa_powers
        self.empty = empty

    @cached_property
    def factors(self) -> dict[int, int]:
        counter: dict[int, int] = {}
        for kv, e in self.kappa_powers:
            for c, f in kv.factors:
                counter[c] = counter.get(c, 0) + f * e
        return {c: e for c, e in sorted(counter.items()) if e}

    @cached_property
    def value(self) -> RatFunc:
        return factors_value(self.factors)

    @cached_property
    def delta_form(self) -> DeltaPoly:
        return to_delta_poly(self.value.as_laurent())

    def factored_str(self) -> str:
        return format_factors(self.factors)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GramDeterminant):
            return NotImplemented
        return self.factors == other.factors

    def __str__(self) -> str:
        return self.factored_str()

    def __repr__(self) -> str:
        return f"GramDeterminant({self.factored_str()!r}, empty={self.empty})"


def gram_det_closed(x: Word, lam: Partition) -> GramDeterminant:
    """Closed-form Gram determinant of the cell module of (x, lam):
    product over poset edges of kappa^(paths through the edge)."""
    lam = partition(lam)
    poset = build_poset(x, lam)
    if lam not in poset.nodes:
        return GramDeterminant((), empty=True)
    return GramDeterminant(
        tuple((e.kappa, e.multiplicity) for e in poset.edges))


def predecessors(lam: Partition, letter: int, n: int) -> list[Partition]:
    """Partitions lam - mu over mu in Omega(letter), in sorted order."""
    out = []
    for mu in omega(letter, n):
        m = max(len(lam), len(mu))
        diff = [part(lam, i + 1) - mu[i] for i in range(m)]
        if min(diff) < 0 or any(a < b for a, b in zip(diff, diff[1:])):
            continue
        out.append(partition(diff))
    return sorted(set(out))


@lru_cache(maxsize=None)
def _dim(letters: tuple[int, ...], n: int, lam: Partition) -> int:
    if not letters:
        return 1 if lam == () else 0
    return sum(_dim(letters[:-1], n, prev)
               for prev in predecessors(lam, letters[-1], n))


@lru_cache(maxsize=None)
def _rec_factors(letters: tuple[int, ...], n: int, lam: Partition
                 ) -> tuple[tuple[int, int], ...] | None:
    """Factored recursive determinant; None when the module is empty."""
    if not letters:
        return () if lam == () else None
    head, last = letters[:-1], letters[-1]
    counter: dict[int, int] = {}
    reachable = False
    for prev in predecessors(lam, last, n):
        sub = _rec_factors(head, n, prev)
        if sub is None:
            continue
        reachable = True
        d = _dim(head, n, prev)
        for c, e in strip_factors(prev, lam):
            counter[c] = counter.get(c, 0) + e * d
        for c, e in sub:
            counter[c] = counter.get(c, 0) + e
    if not reachable:
        return None
    return tuple(sorted((c, e) for c, e in counter.items() if e))


def gram_det_recursive(x: Word, lam: Partition) -> RatFunc:
    """Gram determinant by the block-diagonal recursion
    det G(x, lam) = prod over predecessors lam' of
    kappa(lam' -> lam)^dim(x-hat, lam') * det G(x-hat, lam')."""
    lam = partition(lam)
    if sum(lam) != sum(x.letters):
        raise ValueError(
            f"target {format_partition(lam)} has size {sum(lam)}, "
            f"word {x} has size {sum(x.letters)}")
    factors = _rec_factors(x.letters, x.n, lam)
    if factors is None:
        return factors_value({})
    return factors_value(dict(factors))


def cell_dimension(x: Word, lam: Partition) -> int:
    """Number of paths from the empty partition to lam in the poset of x
    (0 when unreachable)."""
    lam = partition(lam)
    if sum(lam) != sum(x.letters):
        return 0
    return _dim(x.letters, x.n, lam)
