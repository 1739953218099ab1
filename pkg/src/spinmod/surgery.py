"""Surgery presentations as plumbing forests.

A plumbing forest is a framed link made of unknotted components (one per
vertex) clasped along signed Hopf links (one per edge), with no cycles.
On this class the colored invariant is determined by the Hopf-link matrix,
twists and quantum dimensions alone, which keeps every computation exact.

Handle slides leave the class and are therefore not forest operations;
the move set here is stabilization, blow-up/blow-down (the Fenn-Rourke
composite) and per-vertex orientation reversal, which generate enough
Kirby equivalences for machine verification.  Signatures are computed by
exact rational congruence, never by floating eigenvalues: eigenvalue sign
counts feed exponents of invertible numbers, where an off-by-one is
catastrophic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import structures


class ForestError(ValueError):
    """Malformed plumbing forest or illegal move."""


@dataclass(frozen=True)
class PlumbingForest:
    """Framed vertices and signed edges; immutable and validated."""

    framings: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        n = len(self.framings)
        seen_pairs = set()
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (u, v, sign) in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ForestError(f"edge ({u},{v}) out of range")
            if u >= v:
                raise ForestError("edges must be stored with u < v")
            if sign not in (1, -1):
                raise ForestError(f"edge sign must be +-1, got {sign}")
            if (u, v) in seen_pairs:
                raise ForestError(f"duplicate edge ({u},{v})")
            seen_pairs.add((u, v))
            ru, rv = find(u), find(v)
            if ru == rv:
                raise ForestError(f"edge ({u},{v}) creates a cycle")
            parent[ru] = rv

    @property
    def n(self) -> int:
        return len(self.framings)

    def neighbors(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex list of (neighbor, edge sign)."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for (u, v, sign) in self.edges:
            adj[u].append((v, sign))
            adj[v].append((u, sign))
        return tuple(tuple(a) for a in adj)

    def degree(self, v: int) -> int:
        return sum(1 for (u, w, _) in self.edges if u == v or w == v)

    def components(self) -> tuple[tuple[int, ...], ...]:
        """Vertex sets of the trees, each sorted, in order of least vertex."""
        adj = self.neighbors()
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            stack, comp = [start], []
            seen[start] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for (w, _) in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def linking_matrix(self) -> structures.LinkingMatrix:
        n = self.n
        mat = [[0] * n for _ in range(n)]
        for v, m in enumerate(self.framings):
            mat[v][v] = m
        for (u, v, sign) in self.edges:
            mat[u][v] = sign
            mat[v][u] = sign
        return tuple(tuple(row) for row in mat)


def forest(framings, edges=()) -> PlumbingForest:
    """Build a forest, normalizing edge orientation and order."""
    norm = []
    for (u, v, sign) in edges:
        if u > v:
            u, v = v, u
        norm.append((u, v, sign))
    return PlumbingForest(tuple(framings), tuple(sorted(norm)))


def chain(framings, signs=None) -> PlumbingForest:
    """A linear plumbing chain; lens spaces come from these."""
    framings = tuple(framings)
    if signs is None:
        signs = (1,) * (len(framings) - 1)
    edges = [(i, i + 1, signs[i]) for i in range(len(framings) - 1)]
    return forest(framings, edges)


@dataclass(frozen=True)
class SignaturePair:
    """Counts of positive/negative/zero eigenvalues; nullity = b_1 of the
    surgered manifold."""

    b_plus: int
    b_minus: int
    nullity: int

    @property
    def total(self) -> int:
        return self.b_plus + self.b_minus + self.nullity


def signature(mat: structures.LinkingMatrix) -> SignaturePair:
    """Exact inertia via symmetric elimination over the rationals.

    A zero diagonal with a nonzero off-diagonal entry is handled by the
    symmetric congruence row_i += row_j, which exposes a nonzero pivot
    (the hyperbolic block then contributes one eigenvalue of each sign).
    """
    n = len(mat)
    a = [[Fraction(mat[i][j]) for j in range(n)] for i in range(n)]
    live = list(range(n))
    b_plus = b_minus = 0
    while live:
        pivot = next((i for i in live if a[i][i] != 0), None)
        if pivot is None:
            pair = next(((i, j) for i in live for j in live
                         if i != j and a[i][j] != 0), None)
            if pair is None:
                return SignaturePair(b_plus, b_minus, len(live))
            i, j = pair
            for k in live:
                a[i][k] += a[j][k]
            for k in live:
                a[k][i] += a[k][j]
            continue
        p = a[pivot][pivot]
        if p > 0:
            b_plus += 1
        else:
            b_minus += 1
        live.remove(pivot)
        for r in live:
            f = a[r][pivot] / p
            if f:
                for c in live:
                    a[r][c] -= f * a[pivot][c]
        # column entries are no longer consulted for removed indices
    return SignaturePair(b_plus, b_minus, 0)


@dataclass(frozen=True)
class Move:
    """One of stabilize(sign) / blow_up(vertex, sign) / blow_down(vertex) /
    reverse(vertex)."""

    kind: str
    vertex: int = 0
    sign: int = 1


def stabilize(sign: int) -> Move:
    return Move("stabilize", 0, sign)


def blow_up(vertex: int, sign: int) -> Move:
    return Move("blow_up", vertex, sign)


def blow_down(vertex: int) -> Move:
    return Move("blow_down", vertex)


def reverse(vertex: int) -> Move:
    return Move("reverse", vertex)


def apply_move(f: PlumbingForest, move: Move) -> PlumbingForest:
    if move.kind == "stabilize":
        if move.sign not in (1, -1):
            raise ForestError("stabilization framing must be +-1")
        return PlumbingForest(f.framings + (move.sign,), f.edges)
    if move.kind == "blow_up":
        u, eps = move.vertex, move.sign
        if not 0 <= u < f.n:
            raise ForestError(f"no vertex {u}")
        if eps not in (1, -1):
            raise ForestError("blow-up framing must be +-1")
        w = f.n
        framings = list(f.framings)
        framings[u] += eps
        framings.append(eps)
        # blow-up is stabilize + slide, which links the new leaf with sign eps
        return forest(framings, f.edges + ((u, w, eps),))
    if move.kind == "blow_down":
        w = move.vertex
        if not 0 <= w < f.n:
            raise ForestError(f"no vertex {w}")
        if f.framings[w] not in (1, -1):
            raise ForestError("blow-down target must have framing +-1")
        incident = [(u, v, s) for (u, v, s) in f.edges if w in (u, v)]
        if len(incident) > 1:
            raise ForestError("blow-down target must be a leaf or isolated")
        eps = f.framings[w]
        framings = list(f.framings)
        if incident:
            (u, v, s) = incident[0]
            nb = u if v == w else v
            framings[nb] -= eps
        framings.pop(w)

        def reindex(x: int) -> int:
            return x if x < w else x - 1

        edges = [(reindex(u), reindex(v), s) for (u, v, s) in f.edges
                 if w not in (u, v)]
        return forest(framings, edges)
    if move.kind == "reverse":
        v = move.vertex
        if not 0 <= v < f.n:
            raise ForestError(f"no vertex {v}")
        edges = tuple((a, b, -s if v in (a, b) else s) for (a, b, s) in f.edges)
        return PlumbingForest(f.framings, edges)
    raise ForestError(f"unknown move kind {move.kind!r}")


def structure_transport(kind: str, f: PlumbingForest, move: Move,
                        element: tuple[int, ...], d: int) -> tuple[int, ...]:
    """Carry a structure vector through a forest move.

    Stabilization appends the forced coordinate, reversal negates one
    coordinate, and blow-up/blow-down transport is composed from the
    matrix-level primitives (stabilize + slide).  The result is valid for
    ``apply_move(f, move)``.
    """
    mat = f.linking_matrix()
    if move.kind == "stabilize":
        _, elem = structures.transport(kind, mat, ("stabilize", move.sign),
                                       element, d)
        return elem
    if move.kind == "reverse":
        _, elem = structures.transport(kind, mat, ("reverse", move.vertex),
                                       element, d)
        return elem
    if move.kind == "blow_up":
        u, eps, w = move.vertex, move.sign, f.n
        mat1, elem = structures.transport(kind, mat, ("stabilize", eps),
                                          element, d)
        _, elem = structures.transport(kind, mat1, ("slide", u, w, 1), elem, d)
        return elem
    if move.kind == "blow_down":
        w = move.vertex
        eps = f.framings[w]
        incident = [(u, v, s) for (u, v, s) in f.edges if w in (u, v)]
        elem = tuple(element)
        cur = mat
        if incident:
            (a, b, s) = incident[0]
            nb = a if b == w else b
            if s != eps:
                cur, elem = structures.transport(kind, cur, ("reverse", w),
                                                 elem, d)
            cur, elem = structures.transport(kind, cur, ("slide", nb, w, -1),
                                             elem, d)
        modulus = 2 * d if kind == "chern" else d
        forced = {"spin": d // 2, "coh": 0, "hom": None, "chern": None}[kind]
        if forced is not None and elem[w] % modulus != forced % modulus:
            raise structures.StructureError(
                f"blow-down leaves coordinate {elem[w]}, expected {forced}")
        if kind == "chern" and elem[w] % 2 != 1:
            raise structures.StructureError(
                "blow-down of a +-1 framed vertex needs an odd Chern coordinate")
        return elem[:w] + elem[w + 1:]
    raise ForestError(f"unknown move kind {move.kind!r}")
