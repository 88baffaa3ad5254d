"""The q-dilogarithm, its q-difference equation, the pentagon identity and
q-cluster conjugation.

Conventions: ``[n]_q = 1 - q^(-n)``, ``E_q(x) = sum_n x^n / [n]_q!``.  On
``Q_q[[x]]`` the operator ``l`` multiplies by ``x`` and ``m`` sends
``x^n -> q^(-n) x^n``; with these, ``l m = q m l`` and
``x d_x = 1 - m``, and ``E_q`` is the unique series with constant term 1
killed by ``1 - m - l``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Tuple

from skeincluster.coeffs import LaurentSA, RationalSA, q_factorial, q_integer
from skeincluster.qtorus import (
    GradeFunctional,
    QTElement,
    SkewLattice,
    qt_inverse,
    vscale,
)


@dataclass(frozen=True)
class QSeries1:
    """Truncated one-variable series ``sum_{n<=N} coeffs[n] x^n``."""

    coeffs: Tuple[RationalSA, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(RationalSA.coerce(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("QSeries1 needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def monomial(cls, n: int, order: int, coeff=1) -> "QSeries1":
        cs = [RationalSA(0)] * (order + 1)
        if n <= order:
            cs[n] = RationalSA.coerce(coeff)
        return cls(tuple(cs))

    def __add__(self, other: "QSeries1") -> "QSeries1":
        _same_order(self, other)
        return QSeries1(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "QSeries1":
        return QSeries1(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "QSeries1") -> "QSeries1":
        return self + (-other)

    def scale(self, c) -> "QSeries1":
        return QSeries1(tuple(x * c for x in self.coeffs))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [c.to_json() for c in self.coeffs]}


def _same_order(f: QSeries1, g: QSeries1):
    if f.order != g.order:
        raise ValueError("series truncated at different orders")


@lru_cache(maxsize=None)
def _inverse_factorial(n: int) -> RationalSA:
    return RationalSA(1, q_factorial(n))


def qdilog_coeffs(N: int) -> QSeries1:
    """Coefficients ``1/[n]_q!`` of ``E_q`` for ``n = 0..N``."""
    if N < 0:
        raise ValueError("truncation order must be nonnegative")
    return QSeries1(tuple(_inverse_factorial(n) for n in range(N + 1)))


def apply_l(f: QSeries1) -> QSeries1:
    """Multiplication by ``x``; the top coefficient falls off."""
    return QSeries1((RationalSA(0),) + f.coeffs[:-1])


def apply_m(f: QSeries1) -> QSeries1:
    """``x^n -> q^(-n) x^n``."""
    return QSeries1(tuple(c * LaurentSA.q(-n) for n, c in enumerate(f.coeffs)))


def q_derivative(f: QSeries1) -> QSeries1:
    """``x^n -> [n]_q x^(n-1)``; the top coefficient of the result is unknown and set to 0."""
    cs = [f.coeffs[n] * q_integer(n) for n in range(1, f.order + 1)]
    return QSeries1(tuple(cs) + (RationalSA(0),))


def difference_operator(f: QSeries1) -> QSeries1:
    """``(1 - m - l) f`` up to the truncation order."""
    return f - apply_m(f) - apply_l(f)


def check_difference_eq(f: QSeries1) -> bool:
    return difference_operator(f).is_zero()


def solve_difference_eq(N: int) -> QSeries1:
    """Solve ``(1 - m - l) f = 0`` with ``f_0 = 1`` degree by degree.

    Independent of :func:`qdilog_coeffs`: the degree-n equation reads
    ``(1 - q^(-n)) f_n = f_{n-1}`` and is solved by rational division.
    """
    cs = [RationalSA(1)]
    for n in range(1, N + 1):
        eigen = RationalSA(1) - RationalSA(LaurentSA.q(-n))
        cs.append(cs[-1] / eigen)
    return QSeries1(tuple(cs))


# -- transport into a quantum torus ------------------------------------------

def dilog_qt(
    v: Sequence[int],
    lattice: SkewLattice,
    weights: GradeFunctional,
    cutoff: int,
    scale=1,
) -> QTElement:
    """``E_q(scale * e_v) = sum_n scale^n e_{nv} / [n]_q!`` truncated at ``cutoff``.

    ``e_v^n = e_{nv}`` because the form is antisymmetric, so no self-twist
    correction appears.
    """
    v = tuple(v)
    g = weights(v)
    if g <= 0:
        raise ValueError(f"dilogarithm argument e_{v} must have positive grade, got {g}")
    scale = RationalSA.coerce(scale)
    terms = {}
    power = RationalSA(1)
    for n in range(cutoff // g + 1):
        terms[vscale(n, v)] = power * _inverse_factorial(n)
        power = power * scale
    return QTElement(lattice, weights, cutoff, terms)


def dilog_difference_residual(E: QTElement, v: Sequence[int], scale=1) -> QTElement:
    """``(1 - m_v - scale * l_v) E`` where ``l_v`` is left multiplication by
    ``e_v`` and ``m_v`` scales ``e_{nv}`` by ``q^(-n)``."""
    from skeincluster.qtorus import scale_along

    ev = QTElement.monomial(E.lattice, E.weights, E.cutoff, v, scale)
    return E - scale_along(E, v, LaurentSA.q(-1)) - ev * E


def standard_torus(pairing: int = 1, weights=(1, 1)) -> Tuple[SkewLattice, GradeFunctional]:
    """Rank-2 lattice with ``<x, y> = pairing`` and the given grading."""
    return SkewLattice(2, ((0, pairing), (-pairing, 0))), GradeFunctional(weights)


def pentagon_sides(N: int, pairing: int = 1) -> Tuple[QTElement, QTElement]:
    """Both sides of ``E(x)E(y) = E(y)E(-yx)E(x)`` to total grade ``N``.

    ``x = e_(1,0)``, ``y = e_(0,1)`` and ``<x, y> = pairing``, so
    ``xy = q^pairing yx``.  ``-yx`` is formed as a torus product (for
    ``pairing = 1`` it is ``-s^-1 e_(1,1)``), never entered by hand.
    """
    if N < 0:
        raise ValueError("degree must be nonnegative")
    lat, w = standard_torus(pairing)
    x_vec, y_vec = (1, 0), (0, 1)
    top = max(N, 2)
    minus_yx = -(QTElement.monomial(lat, w, top, y_vec) * QTElement.monomial(lat, w, top, x_vec))
    (mid_vec, mid_coeff), = minus_yx.terms.items()
    Ex = dilog_qt(x_vec, lat, w, N)
    Ey = dilog_qt(y_vec, lat, w, N)
    Emid = dilog_qt(mid_vec, lat, w, N, mid_coeff)
    return Ex * Ey, Ey * Emid * Ex


def pentagon_check(N: int, pairing: int = 1) -> bool:
    """Exact comparison of the two pentagon sides to total grade ``N``.

    With ``[n]_q = 1 - q^(-n)`` the identity holds for ``pairing = -1``
    (``xy = q^-1 yx``); for ``pairing = 1`` it already fails in grade 2.
    """
    lhs, rhs = pentagon_sides(N, pairing)
    return lhs == rhs


def cluster_conjugate(A: QTElement, v: Sequence[int], scale=1) -> QTElement:
    """``E(scale e_v) A E(scale e_v)^(-1)`` up to the cutoff of ``A``."""
    E = dilog_qt(v, A.lattice, A.weights, A.cutoff, scale)
    return E * A * qt_inverse(E)


def wavefunction(
    vs: Sequence[Sequence[int]],
    scales: Optional[Sequence] = None,
    lattice: Optional[SkewLattice] = None,
    weights: Optional[GradeFunctional] = None,
    cutoff: int = 0,
) -> QTElement:
    """Ordered product ``E(v_n) ... E(v_1)``; ``vs`` lists ``v_1`` first."""
    if scales is None:
        scales = [1] * len(vs)
    if len(scales) != len(vs):
        raise ValueError("one scale per class is required")
    if lattice is None or weights is None:
        raise ValueError("lattice and grade functional are required")
    out = QTElement.one(lattice, weights, cutoff)
    for v, sc in zip(vs, scales):
        out = dilog_qt(v, lattice, weights, cutoff, sc) * out
    return out
