"""Positive part of the HOMFLYPT skein of the solid torus in a partition basis.

The unknot-minus-meridian operator ``(unknot - m)`` is diagonal with
eigenvalue ``sign_conv * c_{lambda,0}`` on ``Q_lambda``, and the longitude
``l`` adds one box with weight ``eps * a^alpha * q^(beta * cn)``.  The
series ``E^gamma = 1 + ...`` killed by ``unknot - m - gamma * l`` is solved
degree by degree.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from skeincluster.coeffs import LaurentSA, RationalSA, z
from skeincluster.qdilog import QSeries1, qdilog_coeffs


class CalibrationError(RuntimeError):
    """The convention search did not single out one tuple."""


# -- partitions ------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Partition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def boxes(self) -> Iterator[Tuple[int, int]]:
        for row, length in enumerate(self.parts):
            for col in range(length):
                yield row, col

    def addable(self) -> List[Tuple["Partition", int]]:
        """Partitions with one more box, paired with that box's content."""
        out = []
        parts = list(self.parts)
        for row in range(len(parts) + 1):
            length = parts[row] if row < len(parts) else 0
            if row == 0 or parts[row - 1] > length:
                new = parts[:row] + [length + 1] + parts[row + 1:]
                out.append((Partition(tuple(new)), length - row))
        return out

    def sort_key(self):
        return (self.size, self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "()"


EMPTY = Partition(())


def partitions_of(n: int) -> List[Partition]:
    """All partitions of ``n`` in increasing lexicographic order."""
    if n < 0:
        return []

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in gen(rest - p, p):
                yield (p,) + tail

    return sorted(Partition(t) for t in gen(n, n))


def contents(lam: Partition) -> List[int]:
    """Box contents ``column - row`` (0-indexed), row by row."""
    return [col - row for row, col in lam.boxes()]


# -- eigenvalues -----------------------------------------------------------------

@lru_cache(maxsize=None)
def c_lambda_mu(lam: Partition, mu: Partition) -> LaurentSA:
    """``a^-1 (s^-1 - s) sum_lam q^-cn  -  a (s^-1 - s) sum_mu q^cn``."""
    d = LaurentSA.s(-1) - LaurentSA.s(1)
    left = LaurentSA(0)
    for c in contents(lam):
        left = left + LaurentSA.q(-c)
    right = LaurentSA(0)
    for c in contents(mu):
        right = right + LaurentSA.q(c)
    return LaurentSA.a(-1) * d * left - LaurentSA.a(1) * d * right


def unknot_value() -> RationalSA:
    """``(a - a^-1) / (s - s^-1)``."""
    return RationalSA(LaurentSA.a(1) - LaurentSA.a(-1), z())


def meridian_eigenvalue(lam: Partition, sign_conv: Optional[int] = None) -> RationalSA:
    if sign_conv is None:
        sign_conv = frozen_params().sign_conv
    return unknot_value() - RationalSA(c_lambda_mu(lam, EMPTY)) * sign_conv


def gz_nonvanishing(n: int) -> bool:
    """Every ``c_{lambda,mu}`` with ``0 < |lambda| + |mu| <= n`` is nonzero."""
    for total in range(1, n + 1):
        for k in range(total + 1):
            for lam in partitions_of(k):
                for mu in partitions_of(total - k):
                    if c_lambda_mu(lam, mu).is_zero():
                        return False
    return True


# -- convention parameters ---------------------------------------------------------

@dataclass(frozen=True)
class SkeinParams:
    """Meridian sign and longitude box weight ``eps * a^alpha * q^(beta * cn)``."""

    sign_conv: int = -1
    alpha: int = 0
    beta: int = 0
    eps: int = 1

    def box_weight(self, cn: int) -> LaurentSA:
        return LaurentSA.monomial(2 * self.beta * cn, self.alpha, self.eps)

    def to_json(self) -> dict:
        return {"sign_conv": self.sign_conv, "alpha": self.alpha, "beta": self.beta, "eps": self.eps}

    @classmethod
    def from_json(cls, obj: Mapping) -> "SkeinParams":
        return cls(int(obj["sign_conv"]), int(obj["alpha"]), int(obj["beta"]), int(obj["eps"]))


def frozen_params() -> SkeinParams:
    from skeincluster.calibration import load_calibration

    return load_calibration().skein


# -- series ----------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SkeinSeries:
    cutoff: int
    coeffs: Mapping[Partition, RationalSA] = field(default_factory=dict)
    gamma: Optional[LaurentSA] = None

    def __post_init__(self):
        clean = {}
        for lam, c in dict(self.coeffs).items():
            lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
            c = RationalSA.coerce(c)
            if lam.size <= self.cutoff and not c.is_zero():
                clean[lam] = c
        object.__setattr__(self, "coeffs", clean)

    def coeff(self, lam) -> RationalSA:
        lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
        return self.coeffs.get(lam, RationalSA(0))

    def graded_part(self, n: int) -> Dict[Partition, RationalSA]:
        return {lam: c for lam, c in self.coeffs.items() if lam.size == n}

    def __add__(self, other: "SkeinSeries") -> "SkeinSeries":
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, RationalSA(0)) + c
        return SkeinSeries(min(self.cutoff, other.cutoff), out)

    def __sub__(self, other: "SkeinSeries") -> "SkeinSeries":
        return self + other.scale(-1)

    def scale(self, c) -> "SkeinSeries":
        return SkeinSeries(self.cutoff, {lam: v * c for lam, v in self.coeffs.items()}, self.gamma)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkeinSeries):
            return NotImplemented
        return self.cutoff == other.cutoff and self.coeffs == other.coeffs

    def sorted_items(self) -> List[Tuple[Partition, RationalSA]]:
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())

    def to_json(self) -> dict:
        return {
            "cutoff": self.cutoff,
            "gamma": (self.gamma or LaurentSA(1)).to_json(),
            "coeffs": [{"partition": list(lam.parts), "coeff": c.to_json()} for lam, c in self.sorted_items()],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "SkeinSeries":
        coeffs = {Partition(tuple(e["partition"])): RationalSA.from_json(e["coeff"]) for e in obj["coeffs"]}
        return cls(int(obj["cutoff"]), coeffs, LaurentSA.from_json(obj["gamma"]))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def longitude_apply(S: SkeinSeries, params: Optional[SkeinParams] = None) -> SkeinSeries:
    """``Q_lam -> sum over added boxes of w(cn) Q_mu``; terms past the cutoff drop."""
    params = params or frozen_params()
    out: Dict[Partition, RationalSA] = {}
    for lam, c in S.coeffs.items():
        if lam.size + 1 > S.cutoff:
            continue
        for mu, cn in lam.addable():
            out[mu] = out.get(mu, RationalSA(0)) + c * params.box_weight(cn)
    return SkeinSeries(S.cutoff, out)


def meridian_apply(S: SkeinSeries, params: Optional[SkeinParams] = None) -> SkeinSeries:
    params = params or frozen_params()
    return SkeinSeries(S.cutoff, {lam: c * meridian_eigenvalue(lam, params.sign_conv)
                                  for lam, c in S.coeffs.items()})


def apply_dilog_operator(S: SkeinSeries, gamma, params: Optional[SkeinParams] = None) -> SkeinSeries:
    """``(unknot - m - gamma * l) S``."""
    params = params or frozen_params()
    gamma = LaurentSA.coerce(gamma)
    unknot = S.scale(unknot_value())
    return unknot - meridian_apply(S, params) - longitude_apply(S, params).scale(gamma)


def solve_E(gamma, N: int, params: Optional[SkeinParams] = None) -> SkeinSeries:
    """Degree-by-degree solution of ``(unknot - m - gamma l) E = 0`` with ``E_0 = 1``."""
    if N < 0:
        raise ValueError("cutoff must be nonnegative")
    params = params or frozen_params()
    gamma = LaurentSA.coerce(gamma)
    if not gamma.is_unit():
        raise ValueError(f"gamma must be a signed monomial, got {gamma}")
    coeffs: Dict[Partition, RationalSA] = {EMPTY: RationalSA(1)}
    layer = {EMPTY: RationalSA(1)}
    for n in range(1, N + 1):
        pushed: Dict[Partition, RationalSA] = {}
        for lam, c in layer.items():
            for mu, cn in lam.addable():
                pushed[mu] = pushed.get(mu, RationalSA(0)) + c * params.box_weight(cn)
        layer = {}
        for mu, v in pushed.items():
            eig = c_lambda_mu(mu, EMPTY) * params.sign_conv
            if eig.is_zero():
                raise ZeroDivisionError(f"vanishing eigenvalue at {mu}")
            layer[mu] = v * gamma / eig
        coeffs.update(layer)
    return SkeinSeries(N, coeffs, gamma)


# -- linking-skein specialization ----------------------------------------------------

def lk_weights(N: int, params: Optional[SkeinParams] = None) -> List[RationalSA]:
    """``g_0 = 1``, ``g_{n+1} = g_n / w(n)`` at ``a = q^(1/2)``."""
    params = params or frozen_params()
    g = [RationalSA(1)]
    for n in range(N):
        g.append(g[-1] / params.box_weight(n).specialize_a())
    return g


def lk_specialize(S: SkeinSeries, params: Optional[SkeinParams] = None) -> QSeries1:
    """``Q_(n) -> g_n x^n``, multi-row classes to 0, coefficients at ``a = q^(1/2)``."""
    g = lk_weights(S.cutoff, params)
    cs = [RationalSA(0)] * (S.cutoff + 1)
    for lam, c in S.coeffs.items():
        if len(lam) <= 1:
            cs[lam.size] = c.specialize_a() * g[lam.size]
    return QSeries1(tuple(cs))


# -- calibration -----------------------------------------------------------------

CALIBRATION_DEGREE = 5


def _condition_eigen(p: SkeinParams, N: int) -> bool:
    for n in range(1, N + 1):
        if meridian_eigenvalue(Partition((n,)), p.sign_conv).specialize_a() != RationalSA(LaurentSA.q(-n)):
            return False
    return True


def _condition_dilog(p: SkeinParams, N: int) -> bool:
    f = lk_specialize(solve_E(1, N, p), p)
    return f.coeffs == qdilog_coeffs(N).coeffs


def _condition_ladder(p: SkeinParams, N: int) -> bool:
    return all(x == RationalSA(1) for x in lk_weights(N, p))


def search_space() -> List[SkeinParams]:
    return [SkeinParams(sc, al, be, ep)
            for sc, al, be, ep in itertools.product((1, -1), (-1, 0, 1), (-1, 0, 1), (1, -1))]


def calibration_report(N: int = CALIBRATION_DEGREE) -> List[dict]:
    rows = []
    for p in search_space():
        rows.append({
            **p.to_json(),
            "eigen": _condition_eigen(p, N),
            "dilog": _condition_dilog(p, N),
            "ladder": _condition_ladder(p, N),
        })
    return rows


def calibrate(N: int = CALIBRATION_DEGREE) -> SkeinParams:
    """The unique tuple passing all three conditions; aborts otherwise.

    (i) one-row eigenvalues specialize to ``q^-n``; (ii) the specialized
    series equals ``E_q``; (iii) the one-row ladder specializes with
    ``g_n = 1``, i.e. ``l^n Q_0`` lands on ``x^n``.
    """
    rows = calibration_report(N)
    passing = [r for r in rows if r["eigen"] and r["dilog"] and r["ladder"]]
    if len(passing) != 1:
        raise CalibrationError(f"{len(passing)} passing tuples: {passing}")
    return SkeinParams.from_json(passing[0])
