"""Truncated quantum torus of a lattice with a skew form.

Monomials ``e_v`` are indexed by lattice vectors and multiply by

    e_u * e_v = s^<u,v> e_{u+v},     <u,v> = u^T . gram . v,

so ``e_u e_v = q^<u,v> e_v e_u``.  Elements are finite sums of monomials with
:class:`~skeincluster.coeffs.RationalSA` coefficients, completed along a
grade functional and truncated at a fixed cutoff.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Sequence, Tuple

from skeincluster.coeffs import LaurentSA, RationalSA

Vec = Tuple[int, ...]


class ContractError(ValueError):
    """Raised when elements from incompatible tori are combined."""


@dataclass(frozen=True)
class SkewLattice:
    rank: int
    gram: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        if self.rank < 1 or len(gram) != self.rank or any(len(r) != self.rank for r in gram):
            raise ValueError("gram must be a rank x rank matrix")
        for i in range(self.rank):
            if gram[i][i]:
                raise ValueError("gram must have zero diagonal")
            for j in range(i):
                if gram[i][j] != -gram[j][i]:
                    raise ValueError("gram must be antisymmetric")

    @classmethod
    def standard(cls) -> "SkewLattice":
        """Rank two with ``<e_1, e_2> = 1``."""
        return cls(2, ((0, 1), (-1, 0)))

    def pairing(self, u: Sequence[int], v: Sequence[int]) -> int:
        g = self.gram
        total = 0
        for i, ui in enumerate(u):
            if ui:
                row = g[i]
                total += ui * sum(row[j] * vj for j, vj in enumerate(v) if vj)
        return total

    def basis(self, i: int) -> Vec:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def zero(self) -> Vec:
        return (0,) * self.rank


@dataclass(frozen=True)
class GradeFunctional:
    weights: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    def __call__(self, v: Sequence[int]) -> int:
        return sum(w * x for w, x in zip(self.weights, v))

    grade = __call__


def vadd(u: Sequence[int], v: Sequence[int]) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vscale(k: int, v: Sequence[int]) -> Vec:
    return tuple(k * a for a in v)


@dataclass(frozen=True, eq=False)
class QTElement:
    """Element of the completed quantum torus, truncated at ``cutoff``.

    Every stored vector has grade in ``[0, cutoff]``; zero coefficients are
    never stored.
    """

    lattice: SkewLattice
    weights: GradeFunctional
    cutoff: int
    terms: Mapping[Vec, RationalSA] = field(default_factory=dict)

    def __post_init__(self):
        clean: Dict[Vec, RationalSA] = {}
        for v, c in dict(self.terms).items():
            v = tuple(int(x) for x in v)
            if len(v) != self.lattice.rank:
                raise ContractError(f"vector {v} has wrong length for rank {self.lattice.rank}")
            c = RationalSA.coerce(c)
            if c.is_zero():
                continue
            g = self.weights(v)
            if g < 0:
                raise ContractError(f"term e_{v} has negative grade {g}")
            if g <= self.cutoff:
                clean[v] = c
        if len(self.weights.weights) != self.lattice.rank:
            raise ContractError("grade functional length must equal lattice rank")
        object.__setattr__(self, "terms", clean)

    # -- constructors -------------------------------------------------
    @classmethod
    def _raw(cls, lattice, weights, cutoff, terms) -> "QTElement":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "lattice", lattice)
        object.__setattr__(obj, "weights", weights)
        object.__setattr__(obj, "cutoff", cutoff)
        object.__setattr__(obj, "terms", terms)
        return obj

    @classmethod
    def zero(cls, lattice, weights, cutoff) -> "QTElement":
        return cls._raw(lattice, weights, cutoff, {})

    @classmethod
    def one(cls, lattice, weights, cutoff) -> "QTElement":
        return cls.monomial(lattice, weights, cutoff, lattice.zero(), 1)

    @classmethod
    def monomial(cls, lattice, weights, cutoff, v, coeff=1) -> "QTElement":
        return cls(lattice, weights, cutoff, {tuple(v): RationalSA.coerce(coeff)})

    def like(self, terms: Mapping[Vec, RationalSA]) -> "QTElement":
        return QTElement(self.lattice, self.weights, self.cutoff, terms)

    # -- inspection ---------------------------------------------------
    def grade(self, v: Sequence[int]) -> int:
        return self.weights(v)

    def coeff(self, v: Sequence[int]) -> RationalSA:
        return self.terms.get(tuple(v), RationalSA(0))

    def is_zero(self) -> bool:
        return not self.terms

    def graded_part(self, n: int) -> "QTElement":
        return QTElement._raw(self.lattice, self.weights, self.cutoff,
                              {v: c for v, c in self.terms.items() if self.weights(v) == n})

    def _check_compatible(self, other: "QTElement"):
        if (self.lattice != other.lattice or self.weights != other.weights
                or self.cutoff != other.cutoff):
            raise ContractError("quantum torus elements differ in lattice, grading or cutoff")

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, QTElement):
            other = self.one(self.lattice, self.weights, self.cutoff).scale(other)
        self._check_compatible(other)
        out = dict(self.terms)
        for v, c in other.terms.items():
            t = out.get(v)
            t = c if t is None else t + c
            if t.is_zero():
                out.pop(v, None)
            else:
                out[v] = t
        return QTElement._raw(self.lattice, self.weights, self.cutoff, out)

    __radd__ = __add__

    def __neg__(self) -> "QTElement":
        return QTElement._raw(self.lattice, self.weights, self.cutoff,
                              {v: -c for v, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "QTElement":
        c = RationalSA.coerce(c)
        if c.is_zero():
            return self.zero(self.lattice, self.weights, self.cutoff)
        return QTElement._raw(self.lattice, self.weights, self.cutoff,
                              {v: x * c for v, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, QTElement):
            return self.scale(other)
        return qt_mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> "QTElement":
        if n < 0:
            return qt_inverse(self) ** (-n)
        out = self.one(self.lattice, self.weights, self.cutoff)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, QTElement):
            return NotImplemented
        return (self.lattice == other.lattice and self.weights == other.weights
                and self.cutoff == other.cutoff and self.terms == other.terms)

    __hash__ = None

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (self.weights(kv[0]), kv[0]))

    def __repr__(self) -> str:
        if not self.terms:
            return "QTElement(0)"
        body = " + ".join(f"[{c}]e{list(v)}" for v, c in self.sorted_terms())
        return f"QTElement({body}; cutoff={self.cutoff})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for v, c in self.sorted_terms():
            if not any(v):
                parts.append(str(c))
            else:
                mono = "e(" + ",".join(map(str, v)) + ")"
                parts.append(mono if c == RationalSA(1) else f"({c})*{mono}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "rank": self.lattice.rank,
            "gram": [list(r) for r in self.lattice.gram],
            "cutoff": self.cutoff,
            "weights": list(self.weights.weights),
            "terms": [{"vec": list(v), "coeff": c.to_json()} for v, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "QTElement":
        lattice = SkewLattice(int(obj["rank"]), tuple(tuple(r) for r in obj["gram"]))
        weights = GradeFunctional(tuple(obj["weights"]))
        terms = {tuple(t["vec"]): RationalSA.from_json(t["coeff"]) for t in obj["terms"]}
        return cls(lattice, weights, int(obj["cutoff"]), terms)


def qt_mul(A: QTElement, B: QTElement) -> QTElement:
    """Product with the twisted monomial rule, dropping terms above the cutoff."""
    A._check_compatible(B)
    lat, w, N = A.lattice, A.weights, A.cutoff
    if not A.terms or not B.terms:
        return QTElement.zero(lat, w, N)
    bterms = [(v, c, w(v)) for v, c in B.terms.items()]
    buckets: Dict[Vec, list] = {}
    for u, cu in A.terms.items():
        gu = w(u)
        for v, cv, gv in bterms:
            if gu + gv > N:
                continue
            t = vadd(u, v)
            c = cu * cv
            k = lat.pairing(u, v)
            if k:
                c = c * LaurentSA.s(k)
            buckets.setdefault(t, []).append(c)
    out: Dict[Vec, RationalSA] = {}
    for t, cs in buckets.items():
        total = _sum_coeffs(cs)
        if not total.is_zero():
            out[t] = total
    return QTElement._raw(lat, w, N, out)


def _sum_coeffs(cs: Sequence[RationalSA]) -> RationalSA:
    """Sum rational coefficients, grouping equal denominators first."""
    if len(cs) == 1:
        return cs[0]
    by_den: Dict[LaurentSA, LaurentSA] = {}
    for c in cs:
        by_den[c.den] = by_den.get(c.den, LaurentSA()) + c.num
    total = RationalSA(0)
    for den, num in by_den.items():
        if not num.is_zero():
            total = total + RationalSA(num, den)
    return total


def truncate(A: QTElement, new_cutoff: int) -> QTElement:
    if new_cutoff > A.cutoff:
        raise ValueError("truncate cannot raise the cutoff")
    return QTElement(A.lattice, A.weights, new_cutoff,
                     {v: c for v, c in A.terms.items() if A.weights(v) <= new_cutoff})


def qt_inverse(A: QTElement) -> QTElement:
    """Two-sided inverse up to the cutoff.

    The grade-zero part must be a single monomial ``c e_w`` with ``c`` nonzero.
    """
    lat, w, N = A.lattice, A.weights, A.cutoff
    lead = [(v, c) for v, c in A.terms.items() if w(v) == 0]
    if len(lead) != 1:
        raise ZeroDivisionError("leading (grade zero) part is not a single invertible monomial")
    (v0, c0), = lead
    c0_inv = c0.invert()
    neg_v0 = vscale(-1, v0)
    lead_inv = QTElement._raw(lat, w, N, {neg_v0: c0_inv})
    # A = L (1 + X) with X of strictly positive grade.
    X = lead_inv * A - QTElement.one(lat, w, N)
    if any(w(v) <= 0 for v in X.terms):
        raise ZeroDivisionError("non-leading terms must have positive grade")
    series = QTElement.one(lat, w, N)
    power = QTElement.one(lat, w, N)
    minus_X = -X
    for _ in range(N):
        power = power * minus_X
        if power.is_zero():
            break
        series = series + power
    return series * lead_inv


def scale_along(A: QTElement, v: Sequence[int], factor) -> QTElement:
    """Multiply the ``e_{nv}`` term by ``factor^n``; other terms must be absent."""
    factor = RationalSA.coerce(factor)
    out = {}
    for u, c in A.terms.items():
        n = _multiple_of(u, v)
        if n is None:
            raise ValueError(f"term e_{u} is not a multiple of {tuple(v)}")
        out[u] = c * factor ** n
    return A.like(out)


def substitute_monomial(A: QTElement, v: Sequence[int], value) -> RationalSA:
    """Evaluate ``A`` under ``e_{nv} -> value^n``; every term must lie on the ray of ``v``."""
    value = RationalSA.coerce(value)
    total = RationalSA(0)
    for u, c in A.terms.items():
        n = _multiple_of(u, v)
        if n is None:
            raise ValueError(f"term e_{u} is not a multiple of {tuple(v)}")
        total = total + c * value ** n
    return total


def _multiple_of(u: Sequence[int], v: Sequence[int]) -> Optional[int]:
    n = None
    for a, b in zip(u, v):
        if b == 0:
            if a:
                return None
            continue
        if a % b:
            return None
        k = a // b
        if n is None:
            n = k
        elif n != k:
            return None
    return 0 if n is None else n


def commutator_power(lattice: SkewLattice, u: Sequence[int], v: Sequence[int]) -> int:
    """``k`` with ``e_u e_v = q^k e_v e_u``."""
    return lattice.pairing(u, v)
