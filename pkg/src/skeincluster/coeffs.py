"""Exact coefficient rings.

:class:`LaurentSA` is a sparse Laurent polynomial in ``s = q^(1/2)`` and
``a`` with arbitrary precision integer coefficients.  :class:`RationalSA`
is a reduced quotient of two of them; it is the ring in which q-integers
and the eigenvalues ``c_{lambda,mu}`` are inverted.

All values are immutable.
"""
from __future__ import annotations

import re
from math import gcd
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Tuple, Union

from sympy import ZZ
from sympy.polys.rings import ring

Exp = Tuple[int, int]

# Polynomial ring used only for gcd computations.
_POLY_RING, _S, _A = ring("s,a", ZZ)


class LaurentSA:
    """Laurent polynomial in ``s`` and ``a`` over the integers.

    Terms are stored as ``{(s_exp, a_exp): coeff}`` with no zero coefficients.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Exp, int], Iterable[Tuple[Exp, int]], int, None] = None):
        if terms is None:
            clean: Dict[Exp, int] = {}
        elif isinstance(terms, int):
            clean = {(0, 0): terms} if terms else {}
        else:
            items = terms.items() if isinstance(terms, Mapping) else terms
            clean = {}
            for (i, j), c in items:
                c = int(c)
                if c:
                    key = (int(i), int(j))
                    v = clean.get(key, 0) + c
                    if v:
                        clean[key] = v
                    else:
                        clean.pop(key, None)
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def _raw(cls, terms: Dict[Exp, int]) -> "LaurentSA":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, s_exp: int = 0, a_exp: int = 0, coeff: int = 1) -> "LaurentSA":
        return cls._raw({(s_exp, a_exp): coeff} if coeff else {})

    @classmethod
    def s(cls, k: int = 1) -> "LaurentSA":
        return cls.monomial(k, 0)

    @classmethod
    def q(cls, k: int = 1) -> "LaurentSA":
        """``q^k = s^(2k)``."""
        return cls.monomial(2 * k, 0)

    @classmethod
    def a(cls, k: int = 1) -> "LaurentSA":
        return cls.monomial(0, k)

    @classmethod
    def coerce(cls, x) -> "LaurentSA":
        if isinstance(x, LaurentSA):
            return x
        if isinstance(x, int):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentSA")

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> Dict[Exp, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """Units of the Laurent ring are signed monomials."""
        if len(self._terms) != 1:
            return False
        (c,) = self._terms.values()
        return c in (1, -1)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def constant(self) -> int:
        return self._terms.get((0, 0), 0)

    def involves_a(self) -> bool:
        return any(j for (_, j) in self._terms)

    def min_exponents(self) -> Exp:
        if not self._terms:
            return (0, 0)
        return (min(i for i, _ in self._terms), min(j for _, j in self._terms))

    def sorted_terms(self):
        return sorted(self._terms.items())

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        if isinstance(other, RationalSA):
            return NotImplemented
        other = LaurentSA.coerce(other)
        if not other._terms:
            return self
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return LaurentSA._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentSA":
        return LaurentSA._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, RationalSA):
            return NotImplemented
        return self + (-LaurentSA.coerce(other))

    def __rsub__(self, other):
        return LaurentSA.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, RationalSA):
            return NotImplemented
        other = LaurentSA.coerce(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return LaurentSA._raw({})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((bi, bj), bc), = b.items()
            return LaurentSA._raw({(i + bi, j + bj): c * bc for (i, j), c in a.items()})
        out: Dict[Exp, int] = {}
        for (i1, j1), c1 in a.items():
            for (i2, j2), c2 in b.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentSA._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentSA":
        if n < 0:
            return self.unit_inverse() ** (-n)
        result = LaurentSA(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        return RationalSA(self) / other

    def __rtruediv__(self, other):
        return RationalSA(LaurentSA.coerce(other), self)

    def unit_inverse(self) -> "LaurentSA":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit of the Laurent ring")
        ((i, j), c), = self._terms.items()
        return LaurentSA._raw({(-i, -j): c})

    def shift(self, ds: int, da: int = 0) -> "LaurentSA":
        return LaurentSA._raw({(i + ds, j + da): c for (i, j), c in self._terms.items()})

    # -- substitutions ------------------------------------------------
    def specialize_a(self) -> "LaurentSA":
        """Substitute ``a = s`` (that is ``a = q^(1/2)``)."""
        out: Dict[Exp, int] = {}
        for (i, j), c in self._terms.items():
            k = (i + j, 0)
            out[k] = out.get(k, 0) + c
        return LaurentSA._raw({k: c for k, c in out.items() if c})

    def bar(self) -> "LaurentSA":
        """The involution ``s -> 1/s, a -> 1/a``."""
        return LaurentSA._raw({(-i, -j): c for (i, j), c in self._terms.items()})

    def evaluate(self, s, a=1) -> Fraction:
        s, a = Fraction(s), Fraction(a)
        return sum((c * s ** i * a ** j for (i, j), c in self._terms.items()), Fraction(0))

    # -- comparison ---------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentSA(other)
        if isinstance(other, RationalSA):
            return other == self
        if not isinstance(other, LaurentSA):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- formatting / serialization -----------------------------------
    def __repr__(self) -> str:
        return f"LaurentSA({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self._terms.items()):
            mono = []
            if i:
                mono.append("s" if i == 1 else f"s^{i}")
            if j:
                mono.append("a" if j == 1 else f"a^{j}")
            body = "*".join(mono)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"terms": [[i, j, str(c)] for (i, j), c in sorted(self._terms.items())]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "LaurentSA":
        try:
            return cls(((int(i), int(j)), int(c)) for i, j, c in obj["terms"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed LaurentSA JSON: {obj!r}") from exc

    # -- polynomial-ring bridge ---------------------------------------
    def _to_poly(self):
        """Shift to an ordinary polynomial; returns ``(poly, (ds, da))``."""
        ms, ma = self.min_exponents()
        return _POLY_RING.from_dict({(i - ms, j - ma): c for (i, j), c in self._terms.items()}), (ms, ma)

    @classmethod
    def _from_poly(cls, p, shift: Exp = (0, 0)) -> "LaurentSA":
        ds, da = shift
        return cls._raw({(i + ds, j + da): int(c) for (i, j), c in p.items()})


def _laurent_gcd_reduce(n: LaurentSA, d: LaurentSA) -> Tuple[LaurentSA, LaurentSA]:
    """Cancel the gcd of ``n`` and ``d`` and normalize the denominator."""
    if d.is_monomial():
        ((ds, da), dc), = d.items()
        n = n.shift(-ds, -da)
        d = LaurentSA(dc)
        if dc < 0:
            n, d = -n, -d
        if dc not in (1, -1):
            g = gcd(_int_content(n), abs(dc))
            if g > 1:
                n = LaurentSA._raw({k: c // g for k, c in n.items()})
                d = LaurentSA(abs(dc) // g)
        return n, d
    pn, sn = n._to_poly()
    pd, sd = d._to_poly()
    _, cn, cd = pn.cofactors(pd)
    num = LaurentSA._from_poly(cn, sn)
    den = LaurentSA._from_poly(cd, sd)
    # Denominator normalization: minimal exponents zero, smallest term positive.
    ms, ma = den.min_exponents()
    num = num.shift(-ms, -ma)
    den = den.shift(-ms, -ma)
    if den.sorted_terms()[0][1] < 0:
        num, den = -num, -den
    return num, den


def _int_content(p: LaurentSA) -> int:
    g = 0
    for _, c in p.items():
        g = gcd(g, c)
    return g


@lru_cache(maxsize=200_000)
def _reduce_cached(n: LaurentSA, d: LaurentSA) -> Tuple[LaurentSA, LaurentSA]:
    return _laurent_gcd_reduce(n, d)


class RationalSA:
    """Reduced fraction ``num/den`` of Laurent polynomials in ``s`` and ``a``.

    Canonical form: no common factor, the denominator is an ordinary
    polynomial whose minimal ``s``- and ``a``-exponents are zero, and its
    lexicographically smallest term has a positive coefficient.  Equality is
    therefore structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num = LaurentSA.coerce(num)
        den = LaurentSA.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("RationalSA with zero denominator")
        if num.is_zero():
            num, den = LaurentSA(), LaurentSA(1)
        elif den != 1:
            num, den = _reduce_cached(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, key, value):
        raise AttributeError("RationalSA is immutable")

    @classmethod
    def _raw(cls, num: LaurentSA, den: LaurentSA) -> "RationalSA":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    @classmethod
    def coerce(cls, x) -> "RationalSA":
        if isinstance(x, RationalSA):
            return x
        return cls(x)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == 1

    def involves_a(self) -> bool:
        return self.num.involves_a() or self.den.involves_a()

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = RationalSA.coerce(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            if self.den == 1:
                return RationalSA._raw(self.num + other.num, self.den) if (self.num + other.num) else RationalSA()
            return RationalSA(self.num + other.num, self.den)
        if other.den == 1:
            return RationalSA._raw(self.num + other.num * self.den, self.den)
        if self.den == 1:
            return RationalSA._raw(self.num * other.den + other.num, other.den)
        return RationalSA(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalSA":
        return RationalSA._raw(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalSA.coerce(other))

    def __rsub__(self, other):
        return RationalSA.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, LaurentSA)):
            other = LaurentSA.coerce(other)
            if other.is_unit():
                return RationalSA._raw(self.num * other, self.den)
            return RationalSA(self.num * other, self.den)
        other = RationalSA.coerce(other)
        if self.is_zero() or other.is_zero():
            return RationalSA()
        if self.den == 1 and other.den == 1:
            return RationalSA._raw(self.num * other.num, self.den)
        return RationalSA(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def invert(self) -> "RationalSA":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in RationalSA")
        return RationalSA(self.den, self.num)

    def __truediv__(self, other):
        return self * RationalSA.coerce(other).invert()

    def __rtruediv__(self, other):
        return RationalSA.coerce(other) * self.invert()

    def __pow__(self, n: int) -> "RationalSA":
        if n < 0:
            return self.invert() ** (-n)
        return RationalSA(self.num ** n, self.den ** n)

    def reduce(self) -> "RationalSA":
        """Re-run canonicalization; idempotent on already canonical values."""
        return RationalSA(self.num, self.den)

    def specialize_a(self) -> "RationalSA":
        """Substitute ``a = s``; fails if the denominator vanishes."""
        den = self.den.specialize_a()
        if den.is_zero():
            raise ZeroDivisionError(f"denominator of {self} vanishes at a = q^(1/2)")
        return RationalSA(self.num.specialize_a(), den)

    def evaluate(self, s, a=1) -> Fraction:
        d = self.den.evaluate(s, a)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.evaluate(s, a) / d

    def cross_equal(self, other) -> bool:
        """Equality tested by cross multiplication ``a*d == c*b``."""
        other = RationalSA.coerce(other)
        return self.num * other.den == other.num * self.den

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, LaurentSA)):
            other = RationalSA(other)
        if not isinstance(other, RationalSA):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalSA({self})"

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj: Mapping) -> "RationalSA":
        if "terms" in obj:
            return cls(LaurentSA.from_json(obj))
        try:
            return cls(LaurentSA.from_json(obj["num"]), LaurentSA.from_json(obj["den"]))
        except KeyError as exc:
            raise ValueError(f"malformed RationalSA JSON: {obj!r}") from exc


Coeff = Union[int, LaurentSA, RationalSA]

ONE = RationalSA(1)
ZERO = RationalSA(0)


def q_integer(n: int) -> LaurentSA:
    """``[n]_q = 1 - q^(-n)``."""
    if n < 0:
        raise ValueError("q_integer expects n >= 0")
    return LaurentSA(1) - LaurentSA.q(-n)


def q_factorial(n: int) -> LaurentSA:
    if n < 0:
        raise ValueError("q_factorial expects n >= 0")
    out = LaurentSA(1)
    for k in range(1, n + 1):
        out = out * q_integer(k)
    return out


def z() -> LaurentSA:
    """``z = q^(1/2) - q^(-1/2)``."""
    return LaurentSA.s(1) - LaurentSA.s(-1)


def specialize_a(p: Coeff):
    """Substitute ``a = q^(1/2)`` in a Laurent or rational coefficient."""
    if isinstance(p, int):
        return LaurentSA(p)
    return p.specialize_a()


_TOKEN = re.compile(
    r"""\s*(?:
        (?P<int>\d+)
      | (?P<var>[qsa])(?:\s*\^\s*(?:\(\s*(?P<pexp>[+-]?\d+)(?:\s*/\s*(?P<pden>\d+))?\s*\)|(?P<bexp>[+-]?\d+)))?
      | (?P<op>[*·])
      | (?P<sign>[-+−])
    )""",
    re.VERBOSE,
)


def parse_monomial(expr: str) -> LaurentSA:
    """Parse a signed monomial such as ``-q^(1/2)``, ``2*a^(-1)*q^3``.

    Grammar: an optional sign, then factors separated by ``*`` or ``·``;
    factors are integers, ``q^(k/2)``, ``q^(k)``, ``q^k``, ``a^(k)``,
    ``s^(k)`` or a bare variable.
    """
    text = expr.strip()
    if not text:
        raise ValueError("empty expression")
    sign = 1
    coeff = 1
    s_exp = a_exp = 0
    pos = 0
    seen_factor = False
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {expr!r} at position {pos}")
        pos = m.end()
        if m.group("sign"):
            if seen_factor:
                raise ValueError(f"sign inside product in {expr!r}")
            if m.group("sign") != "+":
                sign = -sign
        elif m.group("op"):
            continue
        elif m.group("int"):
            coeff *= int(m.group("int"))
            seen_factor = True
        else:
            var = m.group("var")
            if m.group("pexp") is not None:
                num, den = int(m.group("pexp")), int(m.group("pden") or 1)
            elif m.group("bexp") is not None:
                num, den = int(m.group("bexp")), 1
            else:
                num, den = 1, 1
            if var == "q":
                if (2 * num) % den:
                    raise ValueError(f"q-exponent {num}/{den} is not a half-integer")
                s_exp += 2 * num // den
            else:
                if num % den:
                    raise ValueError(f"{var}-exponent must be an integer in {expr!r}")
                if var == "s":
                    s_exp += num // den
                else:
                    a_exp += num // den
            seen_factor = True
    if not seen_factor:
        raise ValueError(f"no factors in {expr!r}")
    return LaurentSA.monomial(s_exp, a_exp, sign * coeff)
