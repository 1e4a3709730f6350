"""Path tableaux: enumeration, the row-semistandard bijection, and closed
dimension formulas for two- and three-row shapes.

A path records one minuscule step per letter of the word; its partial sums
must stay partitions.  The associated filling places the letter index t in
the boxes added at step t, giving a row-semistandard tableau (strictly
increasing along rows, weakly down columns).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .weights import (MinusculeWeight, Partition, Word, add_strip, omega,
                      part, partition)

Filling = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PathTableau:
    steps: tuple[MinusculeWeight, ...]
    shape: Partition

    def __post_init__(self):
        shape: Partition = ()
        for t, mu in enumerate(self.steps, start=1):
            nxt = add_strip(shape, mu)
            if nxt is None:
                raise ValueError(f"partial sum after step {t} is not dominant")
            shape = nxt
        if shape != self.shape:
            raise ValueError(f"steps sum to {shape}, not {self.shape}")


def enumerate_paths(x: Word, lam: Partition) -> list[PathTableau]:
    """All paths from the empty partition to lam through the poset of x,
    in lexicographic order of their step sequences (empty if unreachable)."""
    lam = partition(lam)
    if sum(lam) != sum(x.letters):
        return []
    moves = [omega(a, x.n) for a in x.letters]
    out: list[PathTableau] = []
    steps: list[MinusculeWeight] = []

    def fits(p: Partition) -> bool:
        return all(part(p, i + 1) <= part(lam, i + 1) for i in range(len(p)))

    def rec(t: int, shape: Partition):
        if t == len(moves):
            if shape == lam:
                out.append(PathTableau(tuple(steps), lam))
            return
        for mu in moves[t]:
            nxt = add_strip(shape, mu)
            if nxt is None or not fits(nxt):
                continue
            steps.append(mu)
            rec(t + 1, nxt)
            steps.pop()

    rec(0, ())
    return out


def to_row_ssyt(p: PathTableau) -> Filling:
    """The filling placing letter index t in the boxes added at step t."""
    rows: list[list[int]] = []
    for t, mu in enumerate(p.steps, start=1):
        for i, bit in enumerate(mu):
            if not bit:
                continue
            while len(rows) <= i:
                rows.append([])
            rows[i].append(t)
    return tuple(tuple(r) for r in rows)


def from_row_ssyt(filling: Filling, n: int, num_steps: int | None = None
                  ) -> PathTableau:
    """Inverse of to_row_ssyt; raises ValueError on a malformed filling."""
    rows = [tuple(r) for r in filling]
    if len(rows) > n:
        raise ValueError(f"filling has more than n={n} rows")
    k = num_steps if num_steps is not None else max(
        (max(r) for r in rows if r), default=0)
    steps = []
    for t in range(1, k + 1):
        mu = [0] * n
        for i, row in enumerate(rows):
            if row.count(t) > 1:
                raise ValueError(f"entry {t} repeated in row {i + 1}")
            if t in row:
                mu[i] = 1
        steps.append(tuple(mu))
    shape = partition([len(r) for r in rows])
    try:
        p = PathTableau(tuple(steps), shape)
    except ValueError as exc:
        raise ValueError(f"malformed filling {filling}: {exc}") from None
    if to_row_ssyt(p) != tuple(rows):
        raise ValueError(f"malformed filling {filling}")
    return p


def format_filling(f: Filling) -> str:
    """Rows joined by "/"; entries concatenated when all are single digits,
    comma-separated otherwise (e.g. "135/26")."""
    if all(e <= 9 for row in f for e in row):
        return "/".join("".join(str(e) for e in row) for row in f)
    return "/".join(",".join(str(e) for e in row) for row in f)


def dim_two_row(a: int, lam2: int) -> int:
    """Dimension C(a, lam2) - C(a, lam2 - 1) of the cell module of
    (1^a, (a - lam2, lam2))."""
    if not 0 <= 2 * lam2 <= a:
        raise ValueError(f"need 0 <= {lam2} <= {a}/2")
    return comb(a, lam2) - (comb(a, lam2 - 1) if lam2 >= 1 else 0)


def dim_three_row(a: int, lam1: int, lam2: int, lam3: int) -> int:
    """Hook-length dimension of the cell module of (1^a, lam) for a shape
    with at most three rows."""
    if (lam1, lam2, lam3) != tuple(sorted((lam1, lam2, lam3), reverse=True)) \
            or lam3 < 0 or lam1 + lam2 + lam3 != a:
        raise ValueError(f"({lam1},{lam2},{lam3}) is not a 3-row partition of {a}")
    num = factorial(a) * (lam1 - lam2 + 1) * (lam1 - lam3 + 2) * (lam2 - lam3 + 1)
    den = factorial(lam1 + 2) * factorial(lam2 + 1) * factorial(lam3)
    q, r = divmod(num, den)
    if r:
        raise AssertionError("hook-length formula did not divide exactly")
    return q
