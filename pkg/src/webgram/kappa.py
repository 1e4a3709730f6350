"""Intersection forms kappa, in root form and vertical-strip form.

A kappa value is a product of quantum-integer ratios [c]/[c-1], one per
contributing root pair, with axial distances measured on the source
shape.  Values are kept both as a cancelled factored multiset
{index c: exponent} and as a reduced rational function.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .qarith import ONE, RatFunc, qint
from .weights import (MinusculeWeight, Partition, add_strip, axial_distance,
                      part, phi_set)


@dataclass(frozen=True)
class KappaValue:
    """An intersection form: factored product of quantum integers plus its
    reduced rational-function value.

    `factors` is a sorted tuple of (c, exponent) pairs, exponents nonzero,
    meaning the product of [c]^exponent.
    """

    factors: tuple[tuple[int, int], ...]
    value: RatFunc

    def is_one(self) -> bool:
        return not self.factors

    def __str__(self) -> str:
        return format_factors(dict(self.factors), sep="")

    def __mul__(self, other: KappaValue) -> KappaValue:
        c = dict(self.factors)
        for k, e in other.factors:
            c[k] = c.get(k, 0) + e
        return from_factors({k: e for k, e in c.items() if e})

    def __pow__(self, e: int) -> KappaValue:
        return from_factors({k: v * e for k, v in self.factors})


def format_factors(factors: dict[int, int], sep: str = " ") -> str:
    """Render a factored quantum-integer product, e.g. "[2][4]/[3]" with
    sep="" or "[2]^3 [3]^2 [5] [7]" with sep=" "."""
    if not factors:
        return "1"
    num = [(c, e) for c, e in sorted(factors.items()) if e > 0]
    den = [(c, -e) for c, e in sorted(factors.items()) if e < 0]
    out = sep.join(f"[{c}]" if e == 1 else f"[{c}]^{e}" for c, e in num)
    if not num:
        out = "1"
    for c, e in den:
        out += f"/[{c}]" if e == 1 else f"/[{c}]^{e}"
    return out


def factors_value(factors: dict[int, int]) -> RatFunc:
    """The reduced rational function of a factored product of [c]^e."""
    num = ONE
    den = ONE
    for c, e in factors.items():
        if e > 0:
            num = num * qint(c) ** e
        elif e < 0:
            den = den * qint(c) ** (-e)
    return RatFunc(num, den)


def from_factors(factors: dict[int, int]) -> KappaValue:
    clean = {c: e for c, e in sorted(factors.items()) if e}
    return KappaValue(tuple(clean.items()), factors_value(clean))


KAPPA_ONE = from_factors({})


@lru_cache(maxsize=None)
def strip_factors(src: Partition, dst: Partition) -> tuple[tuple[int, int], ...]:
    """Cancelled factored form of kappa from src to dst = src + vertical
    strip, as ((c, exponent), ...).

    One ratio [c]/[c-1] per pair i < j with no new box in row i and a new
    box in row j, with the axial distance c taken on the source shape.
    The target-shape reading of the strip-form statement would put [1]/[0]
    on valid edges, so the source shape is used throughout; it agrees with
    the root form on every edge.
    """
    rows = len(dst)
    if len(src) > rows or any(part(src, i) > part(dst, i) for i in range(1, rows + 1)):
        raise ValueError(f"{dst} does not contain {src}")
    new = [part(dst, i) - part(src, i) for i in range(1, rows + 1)]
    if any(v not in (0, 1) for v in new):
        raise ValueError(f"{dst} / {src} is not a vertical strip")
    counter: dict[int, int] = {}
    for j in range(1, rows + 1):
        if not new[j - 1]:
            continue
        for i in range(1, j):
            if new[i - 1]:
                continue
            c = axial_distance(src, i, j)
            if c <= 1:
                raise AssertionError(
                    f"axial distance {c} on edge {src} -> {dst}: invariant breach")
            counter[c] = counter.get(c, 0) + 1
            if c - 1 > 1:
                counter[c - 1] = counter.get(c - 1, 0) - 1
    return tuple(sorted((c, e) for c, e in counter.items() if e))


def kappa_strip_form(src: Partition, dst: Partition) -> KappaValue:
    """Intersection form for adding the vertical strip dst / src."""
    return from_factors(dict(strip_factors(src, dst)))


def kappa_root_form(lam: Partition, mu: MinusculeWeight) -> KappaValue:
    """Intersection form for the edge lam -> lam + mu, as a product over
    the root pairs of Phi(mu) of [c_ij]/[c_ij - 1] on the source shape."""
    if add_strip(lam, mu) is None:
        raise ValueError(f"{lam} + {mu} is not dominant")
    counter: dict[int, int] = {}
    for i, j in phi_set(mu):
        c = axial_distance(lam, i, j)
        if c <= 1:
            raise AssertionError(
                f"axial distance {c} at root ({i},{j}) on {lam}: invariant breach")
        counter[c] = counter.get(c, 0) + 1
        if c - 1 > 1:
            counter[c - 1] = counter.get(c - 1, 0) - 1
    return from_factors(counter)


def kappa_tl(m: int) -> KappaValue:
    """The Temperley-Lieb specialization [m+1]/[m] for capping a cell
    module with m through-strands (two-row shapes, box added to row 2)."""
    if m < 1:
        raise ValueError(f"through-strand count must be positive, got {m}")
    counter = {m + 1: 1}
    if m > 1:
        counter[m] = -1
    return from_factors(counter)
