"""Partitions, words, minuscule weights, dominance order and root sets.

Partitions are plain tuples of weakly decreasing positive integers with
trailing zeros trimmed; indexing formulas treat absent parts as 0.
Minuscule weights are 0/1 tuples of length n.  Root pairs (i, j) are
1-based with i < j.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

Partition = tuple[int, ...]
MinusculeWeight = tuple[int, ...]
RootPair = tuple[int, int]


def partition(parts) -> Partition:
    """Validate and canonicalize a partition (trim trailing zeros)."""
    p = tuple(int(v) for v in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for a, b in zip(p, p[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {parts}")
    if p and p[-1] < 0:
        raise ValueError(f"negative part in {parts}")
    return p


def is_partition(parts) -> bool:
    seq = list(parts)
    while seq and seq[-1] == 0:
        seq.pop()
    if any(v < 0 for v in seq):
        return False
    return all(a >= b for a, b in zip(seq, seq[1:]))


def size(p: Partition) -> int:
    return sum(p)


def part(p: Partition, i: int) -> int:
    """1-based part access; absent parts read 0."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def parse_partition(text: str) -> Partition:
    """Parse the canonical text form "(4,4,2,1)"; "()" is empty."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"partition must look like \"(4,2,1)\", got {text!r}")
    inner = s[1:-1].strip()
    if not inner:
        return ()
    try:
        parts = tuple(int(v.strip()) for v in inner.split(","))
    except ValueError:
        raise ValueError(f"bad partition {text!r}") from None
    return partition(parts)


def format_partition(p: Partition) -> str:
    return "(" + ",".join(str(v) for v in p) + ")"


@dataclass(frozen=True)
class Word:
    """An object word over the letters {1, ..., n-1}."""

    letters: tuple[int, ...]
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"rank n must be at least 2, got {self.n}")
        for a in self.letters:
            if not 0 < a < self.n:
                raise ValueError(f"letter {a} out of range for n={self.n}")

    @classmethod
    def parse(cls, text: str, n: int) -> Word:
        """Parse a digit string such as "32312" (empty string allowed)."""
        if not all(ch.isdigit() for ch in text):
            raise ValueError(f"word must be a digit string, got {text!r}")
        return cls(tuple(int(ch) for ch in text), n)

    def __str__(self) -> str:
        return "".join(str(a) for a in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)


def fundamental_weight(i: int, n: int) -> Partition:
    """The i-th fundamental weight (1^i) for rank n."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"fundamental weight index {i} out of range for n={n}")
    return (1,) * i


def weight_of_word(x: Word) -> Partition:
    """Sum of the fundamental weights of the letters (column sums)."""
    counts = [0] * x.n
    for a in x.letters:
        for i in range(a):
            counts[i] += 1
    return partition(counts)


def omega(a: int, n: int) -> list[MinusculeWeight]:
    """All 0/1 weight vectors of length n with exactly a ones, in
    lexicographic order."""
    if not 1 <= a <= n - 1:
        raise ValueError(f"omega index {a} out of range for n={n}")
    out = []
    for ones in combinations(range(n), a):
        mu = [0] * n
        for i in ones:
            mu[i] = 1
        out.append(tuple(mu))
    out.sort()
    return out


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """True iff lam <= mu in dominance order; different sizes are
    incomparable (returns False)."""
    if sum(lam) != sum(mu):
        return False
    total_l = total_m = 0
    for i in range(max(len(lam), len(mu))):
        total_l += part(lam, i + 1)
        total_m += part(mu, i + 1)
        if total_l > total_m:
            return False
    return True


def axial_distance(lam: Partition, i: int, j: int) -> int:
    """c_ij = lam_i - lam_j + j - i (1-based; absent parts read 0)."""
    if i < 1 or j < 1:
        raise ValueError("axial distance indices are 1-based")
    return part(lam, i) - part(lam, j) + j - i


def phi_set(mu: MinusculeWeight) -> set[RootPair]:
    """All pairs (i, j), i < j, with (mu_i, mu_j) = (0, 1)."""
    zeros = [i for i, v in enumerate(mu, start=1) if v == 0]
    ones = [j for j, v in enumerate(mu, start=1) if v == 1]
    if any(v not in (0, 1) for v in mu):
        raise ValueError(f"not a 0/1 weight: {mu}")
    return {(i, j) for i in zeros for j in ones if i < j}


def add_strip(lam: Partition, mu: MinusculeWeight) -> Partition | None:
    """lam + mu coordinate-wise if the result is a partition, else None."""
    m = max(len(lam), len(mu))
    out = [part(lam, i + 1) + (mu[i] if i < len(mu) else 0) for i in range(m)]
    if not is_partition(out):
        return None
    return partition(out)


def transpose(lam: Partition) -> Partition:
    """Conjugate partition (column heights)."""
    if not lam:
        return ()
    return tuple(sum(1 for v in lam if v >= c) for c in range(1, lam[0] + 1))


def partitions_of(total: int, max_rows: int | None = None,
                  max_part: int | None = None) -> list[Partition]:
    """All partitions of `total`, optionally bounded in rows and part size,
    in lexicographically decreasing order."""
    out: list[Partition] = []
    bound = total if max_part is None else min(max_part, total)

    def rec(remaining: int, largest: int, prefix: list[int]):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if max_rows is not None and len(prefix) == max_rows:
            return
        for v in range(min(largest, remaining), 0, -1):
            prefix.append(v)
            rec(remaining - v, v, prefix)
            prefix.pop()

    if total == 0:
        return [()]
    rec(total, bound, [])
    return out
