"""Cubic planar graphs as combinatorial maps, with homology labels on edges.

Darts are ``0..2E-1``; ``alpha`` pairs darts into edges and ``sigma`` is the
counterclockwise successor of a dart around its vertex.  Faces are the
orbits of ``sigma . alpha``.

Each edge carries one oriented class in ``Z^{2g}``, in the basis
``(U_1..U_g, V_1..V_g)``.  The relation attached to a face is that the
labels of its boundary edges sum to zero.  The label of an edge is stored at
its smaller dart.
"""
from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, List, Mapping, Optional, Sequence, Tuple

from skeincluster.coeffs import LaurentSA
from skeincluster.qtorus import GradeFunctional, QTElement, SkewLattice, substitute_monomial

Vec = Tuple[int, ...]


class GraphError(ValueError):
    """Malformed map data or an illegal mutation."""


# -- homology classes ---------------------------------------------------------

def basis_class(g: int, kind: str, i: int) -> Vec:
    """``U_i`` or ``V_i`` (1-based) as a vector of length ``2g``."""
    if not 1 <= i <= g:
        raise ValueError(f"index {i} out of range for genus {g}")
    k = (i - 1) if kind == "U" else (g + i - 1)
    return tuple(1 if j == k else 0 for j in range(2 * g))


_CLASS_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*\*?\s*([UV])_?(\d+)\s*")


def parse_class(text: str, g: int) -> Vec:
    """Parse ``"U_1+U_2-V_2"`` (or ``"0"``) into a vector."""
    text = text.replace("−", "-").strip()
    vec = [0] * (2 * g)
    if text == "0":
        return tuple(vec)
    pos = 0
    while pos < len(text):
        m = _CLASS_TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse class {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        mult = int(m.group(2)) if m.group(2) else 1
        b = basis_class(g, m.group(3), int(m.group(4)))
        vec = [x + sign * mult * y for x, y in zip(vec, b)]
        pos = m.end()
    return tuple(vec)


def format_class(vec: Sequence[int]) -> str:
    g = len(vec) // 2
    parts = []
    for k, c in enumerate(vec):
        if not c:
            continue
        name = f"U_{k + 1}" if k < g else f"V_{k - g + 1}"
        mag = "" if abs(c) == 1 else str(abs(c))
        parts.append(("-" if c < 0 else "+") + mag + name)
    if not parts:
        return "0"
    out = "".join(parts)
    return out[1:] if out[0] == "+" else out


def _vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _vneg(u):
    return tuple(-a for a in u)


def integer_rank(rows: Iterable[Sequence[int]]) -> int:
    """Rank over Q by fraction-free elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank]
        for i in range(rank + 1, len(m)):
            if m[i][col]:
                f = m[i][col]
                m[i] = [p[col] * x - f * y for x, y in zip(m[i], p)]
        rank += 1
        if rank == len(m):
            break
    return rank


# -- combinatorial maps -------------------------------------------------------

def _orbits(perm: Sequence[int]) -> List[Tuple[int, ...]]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = perm[d]
        out.append(tuple(cyc))
    return out


@dataclass(frozen=True)
class CombinatorialMap:
    alpha: Tuple[int, ...]
    sigma: Tuple[int, ...]

    def __post_init__(self):
        alpha = tuple(int(x) for x in self.alpha)
        sigma = tuple(int(x) for x in self.sigma)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "sigma", sigma)
        n = len(alpha)
        if len(sigma) != n or n == 0 or n % 2:
            raise GraphError("alpha and sigma must be permutations of the same even size")
        if sorted(alpha) != list(range(n)) or sorted(sigma) != list(range(n)):
            raise GraphError("alpha and sigma must be permutations")
        for d in range(n):
            if alpha[d] == d or alpha[alpha[d]] != d:
                raise GraphError("alpha must be a fixed-point-free involution")

    @property
    def num_darts(self) -> int:
        return len(self.alpha)

    def edges(self) -> List[int]:
        """Edge ids are the representative (smaller) darts, in increasing order."""
        return [d for d in range(self.num_darts) if d < self.alpha[d]]

    def edge_rep(self, d: int) -> int:
        return min(d, self.alpha[d])

    def vertices(self) -> List[Tuple[int, ...]]:
        return _orbits(self.sigma)

    def vertex_of(self) -> List[int]:
        out = [0] * self.num_darts
        for i, cyc in enumerate(self.vertices()):
            for d in cyc:
                out[d] = i
        return out

    def face_permutation(self) -> Tuple[int, ...]:
        return tuple(self.sigma[self.alpha[d]] for d in range(self.num_darts))

    def faces(self) -> List[Tuple[int, ...]]:
        return _orbits(self.face_permutation())

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            d = stack.pop()
            for e in (self.alpha[d], self.sigma[d]):
                if e not in seen:
                    seen.add(e)
                    stack.append(e)
        return len(seen) == self.num_darts

    def euler_characteristic(self) -> int:
        return len(self.vertices()) - len(self.edges()) + len(self.faces())

    def is_cubic(self) -> bool:
        return all(len(v) == 3 for v in self.vertices())


# -- labelled graphs ----------------------------------------------------------

@dataclass(frozen=True)
class MutationStep:
    edge: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise GraphError("mutation sign must be +1 or -1")


@dataclass(frozen=True, eq=False)
class LabeledGraph:
    genus: int
    map: CombinatorialMap
    labels: Mapping[int, Vec] = field(default_factory=dict)

    def __post_init__(self):
        labels = {int(d): tuple(int(x) for x in v) for d, v in dict(self.labels).items()}
        edges = self.map.edges()
        if sorted(labels) != edges:
            raise GraphError("exactly one label per edge (at its representative dart) is required")
        if any(len(v) != 2 * self.genus for v in labels.values()):
            raise GraphError(f"labels must have length {2 * self.genus}")
        object.__setattr__(self, "labels", labels)

    # -- queries ------------------------------------------------------
    def edges(self) -> List[int]:
        return self.map.edges()

    def label(self, edge: int) -> Vec:
        try:
            return self.labels[self.map.edge_rep(edge)]
        except (KeyError, IndexError):
            raise GraphError(f"unknown edge id {edge}") from None

    def label_multiset(self) -> Counter:
        return Counter(self.labels.values())

    def find_edge(self, label) -> int:
        if isinstance(label, str):
            label = parse_class(label, self.genus)
        hits = [e for e, v in self.labels.items() if v == tuple(label)]
        if len(hits) != 1:
            raise GraphError(f"{len(hits)} edges carry label {format_class(label)}")
        return hits[0]

    def is_loop(self, edge: int) -> bool:
        vof = self.map.vertex_of()
        return vof[edge] == vof[self.map.alpha[edge]]

    def face_sums(self) -> List[Vec]:
        zero = (0,) * (2 * self.genus)
        out = []
        for face in self.map.faces():
            tot = zero
            for d in face:
                tot = _vadd(tot, self.labels[self.map.edge_rep(d)])
            out.append(tot)
        return out

    def label_rank(self) -> int:
        return integer_rank(self.labels.values())

    def invariant_violations(self) -> List[str]:
        errs = []
        m = self.map
        if not m.is_cubic():
            errs.append("not cubic")
        if not m.is_connected():
            errs.append("not connected")
        if m.euler_characteristic() != 2:
            errs.append(f"Euler characteristic {m.euler_characteristic()} != 2")
        if len(m.vertices()) != 2 * self.genus + 2:
            errs.append(f"{len(m.vertices())} vertices, expected {2 * self.genus + 2}")
        bad = [s for s in self.face_sums() if any(s)]
        if bad:
            errs.append(f"face relation fails: {[format_class(s) for s in bad]}")
        r = self.label_rank()
        if r != 2 * self.genus:
            errs.append(f"labels span rank {r}, expected {2 * self.genus}")
        return errs

    def check(self) -> "LabeledGraph":
        errs = self.invariant_violations()
        if errs:
            raise GraphError("; ".join(errs))
        return self

    # -- mutation -----------------------------------------------------
    def flip(self, step: MutationStep) -> "LabeledGraph":
        return flip(self, step)

    def flip_at(self, label, sign: int) -> "LabeledGraph":
        return flip(self, MutationStep(self.find_edge(label), sign))

    # -- serialization ------------------------------------------------
    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "darts": self.map.num_darts,
            "alpha": list(self.map.alpha),
            "sigma": list(self.map.sigma),
            "labels": [[d, list(v)] for d, v in sorted(self.labels.items())],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "LabeledGraph":
        try:
            g = int(obj["genus"])
            cmap = CombinatorialMap(tuple(obj["alpha"]), tuple(obj["sigma"]))
            if int(obj["darts"]) != cmap.num_darts:
                raise GraphError("dart count does not match permutations")
            labels = {int(d): tuple(v) for d, v in obj["labels"]}
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, GraphError):
                raise
            raise GraphError(f"malformed graph JSON: {exc}") from exc
        return cls(g, cmap, labels)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def describe(self) -> List[dict]:
        return [{"edge": e, "label": format_class(self.labels[e])} for e in self.edges()]


def flip(G: LabeledGraph, step: MutationStep) -> LabeledGraph:
    """Edge flip with the homology relabelling.

    At the endpoint ``A`` of the flipped edge the counterclockwise order is
    ``(e, e_1, e_2)`` and at ``B`` it is ``(e, e_3, e_4)``; so ``e_2, e_4``
    precede ``e``.  Afterwards one endpoint holds ``e_2, e_3`` and the other
    ``e_1, e_4``.  The new edge is labelled ``-e``; a positive flip adds
    ``e`` to ``e_1, e_3``, a negative flip to ``e_2, e_4``.
    """
    m = G.map
    d = m.edge_rep(step.edge) if 0 <= step.edge < m.num_darts else None
    if d is None or d not in G.labels:
        raise GraphError(f"unknown edge id {step.edge}")
    dp = m.alpha[d]
    if G.is_loop(d):
        raise GraphError(f"edge {d} is a loop and cannot be flipped")
    sigma = list(m.sigma)
    a1 = sigma[d]
    a2 = sigma[a1]
    b1 = sigma[dp]
    b2 = sigma[b1]
    sigma[d], sigma[a2], sigma[b1] = a2, b1, d
    sigma[dp], sigma[b2], sigma[a1] = b2, a1, dp
    e = G.labels[d]
    labels = dict(G.labels)
    labels[d] = _vneg(e)
    gaining = (a1, b1) if step.sign > 0 else (a2, b2)
    for x in gaining:
        r = m.edge_rep(x)
        labels[r] = _vadd(labels[r], e)
    out = LabeledGraph(G.genus, CombinatorialMap(m.alpha, tuple(sigma)), labels)
    errs = [x for x in out.invariant_violations() if x.startswith("face") or x.startswith("labels")]
    if errs:
        raise AssertionError(f"label invariants broken by flip (convention bug): {errs}")
    return out


# -- canonical form / isomorphism ----------------------------------------------

def canonical_form(G: LabeledGraph) -> tuple:
    """Minimal relabelled code over all root darts (orientation preserving)."""
    m = G.map
    n = m.num_darts
    best = None
    for root in range(n):
        order = {root: 0}
        queue = [root]
        i = 0
        while i < len(queue):
            x = queue[i]
            i += 1
            for y in (m.alpha[x], m.sigma[x]):
                if y not in order:
                    order[y] = len(queue)
                    queue.append(y)
        if len(queue) != n:
            raise GraphError("map is not connected")
        code = tuple(
            (order[m.sigma[x]], order[m.alpha[x]], G.labels[m.edge_rep(x)] if x < m.alpha[x]
             else _vneg(_vneg(G.labels[m.edge_rep(x)])))
            for x in queue
        )
        if best is None or code < best:
            best = code
    return (G.genus, best)


def is_isomorphic(G: LabeledGraph, H: LabeledGraph) -> bool:
    if G.genus != H.genus or G.map.num_darts != H.map.num_darts:
        return False
    if G.label_multiset() != H.label_multiset():
        return False
    return canonical_form(G) == canonical_form(H)


# -- necklace -------------------------------------------------------------------

# Orientation of the bigon labels: +1 puts +V_i on the edge facing the
# central face.  Frozen by `calibrate_necklace`.
NECKLACE_INNER_SIGN = -1


def necklace(g: int, inner_sign: Optional[int] = None) -> LabeledGraph:
    """Ring of ``g+1`` bigons joined by ``g+1`` string edges.

    Bigon ``i`` (``i < g``) has edges ``+-V_{i+1}``, the last bigon
    ``+-(V_1+..+V_g)``; the strings are ``U_1..U_g`` and ``-(U_1+..+U_g)``.
    The ring runs counterclockwise around the central face.
    """
    if g < 1:
        raise GraphError("necklace genus must be at least 1")
    tau = NECKLACE_INNER_SIGN if inner_sign is None else inner_sign
    k = g + 1
    U = [basis_class(g, "U", i) for i in range(1, g + 1)]
    V = [basis_class(g, "V", i) for i in range(1, g + 1)]
    sumU = tuple(sum(c) for c in zip(*U))
    sumV = tuple(sum(c) for c in zip(*V))
    # edges: inner_i = 3i, outer_i = 3i+1, string_i = 3i+2; dart 2*edge at the first endpoint
    # endpoints: inner/outer run L_i -> R_i, string runs R_i -> L_{i+1}
    def dart(edge, first):
        return 2 * edge + (0 if first else 1)

    sigma = [0] * (6 * k)
    labels = {}
    for i in range(k):
        inner, outer, string = 3 * i, 3 * i + 1, 3 * i + 2
        prev_string = 3 * ((i - 1) % k) + 2
        # counterclockwise at R_i: string, inner, outer
        cyc_R = (dart(string, True), dart(inner, False), dart(outer, False))
        # counterclockwise at L_i: inner, previous string, outer
        cyc_L = (dart(inner, True), dart(prev_string, False), dart(outer, True))
        for cyc in (cyc_R, cyc_L):
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                sigma[a] = b
        bead = V[i] if i < g else _vneg(sumV)
        labels[dart(inner, True)] = tuple(tau * x for x in bead)
        labels[dart(outer, True)] = tuple(-tau * x for x in bead)
        labels[dart(string, True)] = U[i] if i < g else _vneg(sumU)
    alpha = tuple(d ^ 1 for d in range(6 * k))
    return LabeledGraph(g, CombinatorialMap(alpha, tuple(sigma)), labels)


# Edge labels of the genus-2 graph obtained from the necklace by one negative
# flip at the string edge U_1 (the starting graph of the two pentagon paths).
ONE_FLIP_LABELS = ("U_1-V_2", "U_2", "V_1+V_2", "-V_1-V_2", "-U_1-U_2",
                   "-V_1", "U_1+V_1", "-U_1", "V_2")


def calibrate_necklace() -> List[int]:
    """Bigon orientations that satisfy the face relations and reproduce
    :data:`ONE_FLIP_LABELS` after a negative flip at ``U_1``."""
    target = Counter(parse_class(t, 2) for t in ONE_FLIP_LABELS)
    passing = []
    for tau in (1, -1):
        G = necklace(2, inner_sign=tau)
        if G.invariant_violations():
            continue
        H = G.flip_at("U_1", -1)
        if H.label_multiset() == target:
            passing.append(tau)
    return passing


# -- admissibility / composability ----------------------------------------------

def used_class(G: LabeledGraph, step: MutationStep) -> Vec:
    """The class ``sign * [e]`` of the mutation disk boundary."""
    return tuple(step.sign * x for x in G.label(step.edge))


def standard_weights(g: int) -> GradeFunctional:
    """Positive on every ``U_j``, zero on every ``V_j``."""
    return GradeFunctional((1,) * g + (0,) * g)


def admissible_check(g: int, steps: Sequence[MutationStep]) -> Tuple[bool, List[dict]]:
    G = necklace(g)
    ok = True
    report = []
    for i, step in enumerate(steps):
        cls = used_class(G, step)
        u = cls[:g]
        passed = all(c >= 0 for c in u) and any(c > 0 for c in u)
        ok = ok and passed
        report.append({"step": i, "edge": step.edge, "sign": step.sign,
                       "class": format_class(cls), "u_coeffs": list(u), "admissible": passed})
        G = G.flip(step)
    return ok, report


def composable_check(G0: LabeledGraph, steps: Sequence[MutationStep],
                     weights: GradeFunctional) -> Tuple[bool, List[dict]]:
    G = G0
    ok = True
    report = []
    for i, step in enumerate(steps):
        cls = used_class(G, step)
        grade = weights(cls)
        passed = grade > 0
        ok = ok and passed
        report.append({"step": i, "edge": step.edge, "sign": step.sign,
                       "class": format_class(cls), "grade": grade, "composable": passed})
        G = G.flip(step)
    return ok, report


# -- quantum torus of the surface -------------------------------------------------

def intersection_form(g: int, sign: Optional[int] = None) -> SkewLattice:
    """Form on ``(U_1..U_g, V_1..V_g)`` with ``<U_i, V_j> = sign * delta_ij``."""
    if g < 1:
        raise GraphError("genus must be at least 1")
    if sign is None:
        from skeincluster.calibration import load_calibration
        sign = load_calibration().form_sign
    n = 2 * g
    gram = [[0] * n for _ in range(n)]
    for i in range(g):
        gram[i][g + i] = sign
        gram[g + i][i] = -sign
    return SkewLattice(n, tuple(tuple(r) for r in gram))


def bigon_operator(G: LabeledGraph, face: int, which: int = 0,
                   weights: Optional[GradeFunctional] = None,
                   form_sign: Optional[int] = None) -> QTElement:
    """Linking-skein shadow ``q^(-1/2) + e_{[E_i]}`` of a bigon face operator."""
    faces = G.map.faces()
    if not 0 <= face < len(faces):
        raise GraphError(f"no face {face}")
    darts = faces[face]
    if len(darts) != 2:
        raise GraphError(f"face {face} has {len(darts)} sides, not a bigon")
    cls = G.labels[G.map.edge_rep(darts[which])]
    lattice = intersection_form(G.genus, form_sign)
    weights = weights or standard_weights(G.genus)
    grade = weights(cls)
    if grade < 0:
        raise GraphError(f"bigon class {format_class(cls)} has negative grade")
    cutoff = grade
    one = QTElement.one(lattice, weights, cutoff).scale(LaurentSA.s(-1))
    return one + QTElement.monomial(lattice, weights, cutoff, cls)


def bigon_faces(G: LabeledGraph) -> List[int]:
    return [i for i, f in enumerate(G.map.faces()) if len(f) == 2]


def bigon_annihilates(G: LabeledGraph, face: int, which: int = 0) -> bool:
    """The bigon operator vanishes under ``e_{[E_i]} -> -q^(-1/2)``."""
    A = bigon_operator(G, face, which)
    cls = G.labels[G.map.edge_rep(G.map.faces()[face][which])]
    return substitute_monomial(A, cls, -LaurentSA.s(-1)).is_zero()


# -- the two pentagon paths in genus 2 ---------------------------------------------

SHORT_PATH = ("U_2", "U_1-V_2")
LONG_PATH = ("U_1-V_2", "U_1+U_2-V_2", "U_2")
# Competing reading of the second long-path edge.
LONG_PATH_ALTERNATIVE = "U_1+U_2-V_1"

# Negative on every U_j: the used classes of the negative mutations below
# then all have positive grade.
FIVE_TERM_WEIGHTS = (-1, -1, 0, 0)


@dataclass(frozen=True, eq=False)
class FiveTermPaths:
    e0: Vec
    long_classes: Tuple[Vec, ...]
    short_classes: Tuple[Vec, ...]
    start: LabeledGraph
    long_end: LabeledGraph
    short_end: LabeledGraph
    e0_candidates: Tuple[Tuple[str, int], ...]
    long_second_reading: str

    def to_json(self) -> dict:
        return {
            "e0": format_class(self.e0),
            "long": [format_class(v) for v in self.long_classes],
            "short": [format_class(v) for v in self.short_classes],
            "final_labels": sorted(format_class(v) for v in self.long_end.labels.values()),
            "isomorphic": is_isomorphic(self.long_end, self.short_end),
            "e0_candidates": [[lab, sgn] for lab, sgn in self.e0_candidates],
            "long_second_edge": self.long_second_reading,
        }


def _run_negative(G: LabeledGraph, path: Sequence[str]) -> Tuple[LabeledGraph, List[Vec]]:
    used = []
    for lab in path:
        step = MutationStep(G.find_edge(lab), -1)
        used.append(used_class(G, step))
        G = G.flip(step)
    return G, used


def five_term_paths() -> FiveTermPaths:
    """Run both negative mutation paths from the necklace-adjacent graph.

    The start graph is the necklace flipped negatively at ``U_1``; every
    single flip of the necklace reproducing :data:`ONE_FLIP_LABELS` is
    recorded in ``e0_candidates``.
    """
    N = necklace(2)
    target = Counter(parse_class(t, 2) for t in ONE_FLIP_LABELS)
    candidates = []
    for e in N.edges():
        for sgn in (1, -1):
            if N.is_loop(e):
                continue
            if N.flip(MutationStep(e, sgn)).label_multiset() == target:
                candidates.append((format_class(N.label(e)), sgn))
    step0 = MutationStep(N.find_edge("U_1"), -1)
    e0 = used_class(N, step0)
    G = N.flip(step0)
    short_end, short = _run_negative(G, SHORT_PATH)
    # which reading of the second long edge exists in the graph after the first long flip
    G1 = G.flip_at(LONG_PATH[0], -1)
    present = [r for r in (LONG_PATH[1], LONG_PATH_ALTERNATIVE)
               if parse_class(r, 2) in G1.labels.values()]
    if present != [LONG_PATH[1]]:
        raise AssertionError(f"second long-path edge readings present: {present}")
    long_end, long = _run_negative(G, LONG_PATH)
    if not is_isomorphic(long_end, short_end):
        raise AssertionError("pentagon paths end in different labelled graphs")
    return FiveTermPaths(e0, tuple(long), tuple(short), G, long_end, short_end,
                         tuple(candidates), present[0])


def five_term_sides(cutoff: int, form_sign: Optional[int] = None, scale=None,
                    paths: Optional[FiveTermPaths] = None) -> Tuple[QTElement, QTElement]:
    """``E(e3)E(e2)E(e1)E(e0)`` and ``E(e'2)E(e'1)E(e0)`` to the given cutoff."""
    from skeincluster.qdilog import wavefunction

    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    if form_sign is None or scale is None:
        from skeincluster.calibration import load_calibration
        cal = load_calibration()
        form_sign = cal.form_sign if form_sign is None else form_sign
        scale = cal.negative_scale if scale is None else scale
    paths = paths or five_term_paths()
    lattice = intersection_form(2, form_sign)
    weights = GradeFunctional(FIVE_TERM_WEIGHTS)
    long_cls = [paths.e0, *paths.long_classes]
    short_cls = [paths.e0, *paths.short_classes]
    lhs = wavefunction(long_cls, [scale] * 4, lattice, weights, cutoff)
    rhs = wavefunction(short_cls, [scale] * 3, lattice, weights, cutoff)
    return lhs, rhs


def five_term_check(cutoff: int, form_sign: Optional[int] = None, scale=None) -> bool:
    lhs, rhs = five_term_sides(cutoff, form_sign, scale)
    return lhs == rhs


def torus_search_space() -> List[Tuple[int, LaurentSA]]:
    """Form sign times the signed half-powers ``+-q^(+-1/2)`` as mutation scale."""
    scales = [LaurentSA.s(1), -LaurentSA.s(1), LaurentSA.s(-1), -LaurentSA.s(-1)]
    return [(sign, sc) for sign in (1, -1) for sc in scales]


def calibrate_torus(cutoff: int = 4) -> List[Tuple[int, LaurentSA]]:
    paths = five_term_paths()
    out = []
    for sign, sc in torus_search_space():
        lhs, rhs = five_term_sides(cutoff, sign, sc, paths)
        if lhs == rhs:
            out.append((sign, sc))
    return out
