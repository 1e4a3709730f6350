"""Exact arithmetic for balanced quantum numbers.

Laurent polynomials in q over the integers, their field of fractions,
quantum integers/factorials/binomials, and conversion of symmetric
elements into polynomials in delta = [2] = q + q^-1.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


class LaurentPoly:
    """A Laurent polynomial in q with integer coefficients.

    Coefficients are stored as a map {exponent: coefficient} holding no
    zero coefficient; the zero polynomial is the empty map.  Instances
    are immutable.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: dict[int, int] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = int(v)
        self._c = c
        self._hash = None

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> LaurentPoly:
        return cls({0: n})

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> LaurentPoly:
        return cls({exp: coeff})

    # -- basic queries ---------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def is_one(self) -> bool:
        return self._c == {0: 1}

    def __bool__(self) -> bool:
        return bool(self._c)

    def degree(self) -> int:
        """Top exponent.  Raises on the zero polynomial."""
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def valuation(self) -> int:
        """Bottom exponent.  Raises on the zero polynomial."""
        if not self._c:
            raise ValueError("zero polynomial has no valuation")
        return min(self._c)

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def leading_coeff(self) -> int:
        return self._c[self.degree()]

    def content(self) -> int:
        """Gcd of all coefficients (0 for the zero polynomial)."""
        g = 0
        for v in self._c.values():
            g = gcd(g, v)
        return g

    def is_symmetric(self) -> bool:
        """True iff invariant under q <-> q^-1."""
        return all(self._c.get(-e) == v for e, v in self._c.items())

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            elif e in c:
                del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: -v for e, v in self._c.items()}
        out._hash = None
        return out

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return ZERO
            out = LaurentPoly.__new__(LaurentPoly)
            out._c = {e: v * other for e, v in self._c.items()}
            out._hash = None
            return out
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) > len(b):
            a, b = b, a
        c: dict[int, int] = {}
        for e1, v1 in a.items():
            for e2, v2 in b.items():
                e = e1 + e2
                w = c.get(e, 0) + v1 * v2
                if w:
                    c[e] = w
                elif e in c:
                    del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            raise ValueError("negative power of a LaurentPoly; use RatFunc")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by q^k."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e + k: v for e, v in self._c.items()}
        out._hash = None
        return out

    def bar(self) -> LaurentPoly:
        """Apply q -> q^-1."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {-e: v for e, v in self._c.items()}
        out._hash = None
        return out

    def divexact(self, other: LaurentPoly) -> LaurentPoly:
        """Exact division; raises ValueError if the division is inexact."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return ZERO
        rem = dict(self._c)
        dd = other.degree()
        dlead = other._c[dd]
        quot: dict[int, int] = {}
        # peel from the top; exponent bookkeeping handles Laurent shifts
        while rem:
            dn = max(rem)
            if dn - dd < min(rem) - other.valuation():
                raise ValueError("inexact Laurent polynomial division")
            lead = rem[dn]
            if lead % dlead:
                raise ValueError("inexact Laurent polynomial division")
            c = lead // dlead
            e = dn - dd
            quot[e] = c
            for e2, v2 in other._c.items():
                ee = e2 + e
                w = rem.get(ee, 0) - c * v2
                if w:
                    rem[ee] = w
                elif ee in rem:
                    del rem[ee]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = quot
        out._hash = None
        return out

    def evaluate(self, q0: Fraction | int) -> Fraction:
        """Exact substitution q := q0 (q0 nonzero)."""
        q0 = Fraction(q0)
        if q0 == 0:
            raise ZeroDivisionError("cannot evaluate a Laurent polynomial at q = 0")
        total = Fraction(0)
        for e, v in self._c.items():
            total += v * q0 ** e
        return total

    # -- comparisons & hashing --------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._c.items())))
        return self._hash

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        return _render(self._c, "q")

    def __repr__(self) -> str:
        return f"LaurentPoly({self._c!r})"


def _render(coeffs: dict[int, int], sym: str) -> str:
    """Terms "c*sym^e" in descending exponent; "sym^0" elided."""
    if not coeffs:
        return "0"
    parts = []
    for e in sorted(coeffs, reverse=True):
        v = coeffs[e]
        if e == 0:
            body = str(abs(v))
        else:
            power = sym if e == 1 else f"{sym}^{e}"
            body = power if abs(v) == 1 else f"{abs(v)}*{power}"
        if not parts:
            parts.append(body if v > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if v > 0 else f"- {body}")
    return " ".join(parts)


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
Q = LaurentPoly({1: 1})


# -- integer-coefficient gcd over Z[q] -------------------------------------

def _dense(p: LaurentPoly) -> tuple[int, list[int]]:
    """(valuation, dense coefficient list low-to-high)."""
    v, d = p.valuation(), p.degree()
    out = [0] * (d - v + 1)
    for e, c in p._c.items():
        out[e - v] = c
    return v, out


def _list_content(a: list[int]) -> int:
    g = 0
    for v in a:
        g = gcd(g, v)
    return g


def _list_primitive(a: list[int]) -> list[int]:
    g = _list_content(a)
    return [v // g for v in a]


def _list_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _list_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _list_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b (b nonzero, low-to-high lists)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        da, la = len(a) - 1, a[-1]
        a = [v * lb for v in a]
        for i, y in enumerate(b):
            a[da - db + i] -= la * y
        _list_trim(a)
    return a


def _gcd_z(a: list[int], b: list[int]) -> list[int]:
    """Gcd in Z[x] (including integer content) via the primitive PRS."""
    a, b = _list_trim(list(a)), _list_trim(list(b))
    if not a:
        return b
    if not b:
        return a
    ca, cb = _list_content(a), _list_content(b)
    cg = gcd(ca, cb)
    a, b = _list_primitive(a), _list_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _list_prem(a, b)
        a, b = b, _list_primitive(r) if r else []
    if a[-1] < 0:
        a = [-v for v in a]
    return [v * cg for v in a]


def laurent_gcd(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    """A gcd of p and r in Z[q, q^-1], normalized to valuation 0 and
    positive leading coefficient."""
    if p.is_zero():
        return _normalize_unit(r)
    if r.is_zero():
        return _normalize_unit(p)
    _, a = _dense(p)
    _, b = _dense(r)
    g = _gcd_z(a, b)
    return LaurentPoly({i: v for i, v in enumerate(g)})


def _normalize_unit(p: LaurentPoly) -> LaurentPoly:
    if p.is_zero():
        return ZERO
    q = p.shift(-p.valuation())
    return -q if q.leading_coeff() < 0 else q


class RatFunc:
    """A reduced rational function num/den in q over the integers.

    Canonical representative: den is an honest polynomial in q with
    nonzero constant term and positive top coefficient, num and den share
    no nonunit common factor, and the integer coefficients of num and den
    have gcd 1 jointly.  Equality is structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly | int, den: LaurentPoly | int = 1):
        if isinstance(num, int):
            num = LaurentPoly.from_int(num)
        if isinstance(den, int):
            den = LaurentPoly.from_int(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        vn, vd = num.valuation(), den.valuation()
        n0, d0 = num.shift(-vn), den.shift(-vd)
        g = laurent_gcd(n0, d0)
        if not g.is_one():
            n0 = n0.divexact(g)
            d0 = d0.divexact(g)
        if d0.leading_coeff() < 0:
            n0, d0 = -n0, -d0
        self.num = n0.shift(vn - vd)
        self.den = d0

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> RatFunc:
        out = cls.__new__(cls)
        out.num, out.den = num, den
        return out

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> RatFunc:
        return cls._raw(p, ONE)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_laurent(self) -> bool:
        """True iff the value is a Laurent polynomial."""
        return self.den.is_one()

    def as_laurent(self) -> LaurentPoly:
        if not self.den.is_one():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: RatFunc | LaurentPoly | int) -> RatFunc:
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other: RatFunc | LaurentPoly | int) -> RatFunc:
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: RatFunc | LaurentPoly | int) -> RatFunc:
        return (-self) + other

    def __mul__(self, other: RatFunc | LaurentPoly | int) -> RatFunc:
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: RatFunc | LaurentPoly | int) -> RatFunc:
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: RatFunc | LaurentPoly | int) -> RatFunc:
        return _as_ratfunc(other) / self

    def __pow__(self, k: int) -> RatFunc:
        if k < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RatFunc(self.den, self.num) ** (-k)
        out = RatFunc._raw(ONE, ONE)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def evaluate(self, q0: Fraction | int) -> Fraction:
        d = self.den.evaluate(q0)
        if d == 0:
            raise ZeroDivisionError(f"pole at q = {q0}")
        return self.num.evaluate(q0) / d

    # -- comparisons ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"


def _as_ratfunc(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, LaurentPoly):
        return RatFunc._raw(x, ONE)
    if isinstance(x, int):
        return RatFunc._raw(LaurentPoly.from_int(x), ONE)
    return NotImplemented


RF_ONE = RatFunc._raw(ONE, ONE)
RF_ZERO = RatFunc._raw(ZERO, ONE)


def rat(num: LaurentPoly | int, den: LaurentPoly | int = 1) -> RatFunc:
    """Reduced rational function num/den."""
    return RatFunc(num, den)


class DeltaPoly:
    """An integer polynomial in delta = [2] = q + q^-1.

    Stored as {exponent: coefficient} with non-negative exponents and no
    zero coefficients.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if e < 0:
                    raise ValueError("DeltaPoly exponents must be non-negative")
                if v:
                    c[int(e)] = int(v)
        self._c = c

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def to_laurent(self) -> LaurentPoly:
        """Substitute delta := q + q^-1."""
        delta = LaurentPoly({1: 1, -1: 1})
        total = ZERO
        for e, v in self._c.items():
            total = total + (delta ** e) * v
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DeltaPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._c.items())))

    def __str__(self) -> str:
        return _render(self._c, "d")

    def __repr__(self) -> str:
        return f"DeltaPoly({self._c!r})"


# -- quantum numbers ---------------------------------------------------------

@lru_cache(maxsize=None)
def qint(n: int) -> LaurentPoly:
    """Balanced quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    if n == 0:
        return ZERO
    if n < 0:
        return -qint(-n)
    return LaurentPoly({e: 1 for e in range(1 - n, n, 2)})


DELTA = qint(2)


@lru_cache(maxsize=None)
def qfact(n: int) -> LaurentPoly:
    """Quantum factorial [n]! = [n][n-1]...[1]; [0]! = 1."""
    if n < 0:
        raise ValueError(f"quantum factorial of negative integer {n}")
    if n == 0:
        return ONE
    return qfact(n - 1) * qint(n)


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> LaurentPoly:
    """Quantum binomial, as the exact product prod_{i=1..k} [n-k+i]/[i].

    Defined for any integer n and k >= 0; vanishes for 0 <= n < k.
    """
    if k < 0:
        raise ValueError(f"quantum binomial with negative lower index {k}")
    out = ONE
    for i in range(1, k + 1):
        out = (out * qint(n - k + i)).divexact(qint(i))
    return out


def to_delta_poly(p: LaurentPoly) -> DeltaPoly:
    """The unique integer polynomial in delta = q + q^-1 with value p.

    Requires p symmetric under q <-> q^-1.  Works by repeatedly peeling
    the top-degree term: subtract c * (q + q^-1)^d for the top term c*q^d.
    """
    if not p.is_symmetric():
        raise ValueError(f"not symmetric under q <-> q^-1: {p}")
    out: dict[int, int] = {}
    rem = p
    while not rem.is_zero():
        d = rem.degree()
        if d < 0:
            raise ValueError(f"residual after peeling: {rem}")
        c = rem.coeff(d)
        out[d] = c
        rem = rem - (DELTA ** d) * c
    return DeltaPoly(out)


def eval_rational(p: LaurentPoly | RatFunc, q0: Fraction | int) -> Fraction:
    """Exact substitution q := q0 into a Laurent polynomial or RatFunc."""
    return p.evaluate(Fraction(q0))
