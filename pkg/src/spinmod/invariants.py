"""Exact evaluation of colored and refined invariants on plumbing forests.

For a fixed coloring of a plumbing tree, the invariant factorizes over the
tree: rooted anywhere, it is

    qdim(color(root)) * prod_v twist(color(v))^framing(v)
                      * prod_(parent u, child v) S^(sign)[color(v)][color(u)] / qdim(color(u))

with S^(+) the Hopf matrix and S^(-) its dual-color twin; forests multiply
over trees.  Weighted sums over all colorings are evaluated by
leaf-to-root message passing in O(n |labels|^2) ring operations, pinned
against a brute-force sum over all colorings.

The unrefined invariant divides by F(U_+1(omega))^b+ F(U_-1(omega))^b-;
refined tables reuse exactly these unrefined denominators (the graded
denominators agree where nonzero, but the normalization is fixed once).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import structures
from .category import (CategoryData, Grading, KirbyColor, RefinableStructure,
                       default_primitive_root, grading, invertibles,
                       kirby_color, refinable_structures)
from .constructions import reduced_subcategory
from .cyclo import CycloNumber, gauss_sum
from .surgery import PlumbingForest, SignaturePair, signature


class InvariantError(ValueError):
    pass


class ZeroDimensionError(InvariantError):
    """A label with zero quantum dimension sits on an internal vertex."""


class NormalizationError(InvariantError):
    """A +-1-framed unknot evaluates to zero (category not modular, or
    corrupt data)."""


class RefinementError(InvariantError):
    """The category does not carry the requested refinable structure."""


class MooError(InvariantError):
    pass


@dataclass(frozen=True)
class InvariantValue:
    """An exact invariant with its complex shadow and normalization record."""

    exact: CycloNumber
    approx: complex
    b_plus: int
    b_minus: int
    denom_plus: CycloNumber
    denom_minus: CycloNumber

    @staticmethod
    def of(exact: CycloNumber, sig: SignaturePair,
           denom_plus: CycloNumber, denom_minus: CycloNumber) -> "InvariantValue":
        return InvariantValue(exact, exact.embed_complex(), sig.b_plus,
                              sig.b_minus, denom_plus, denom_minus)


@dataclass
class RefinedInvariantTable:
    """Per-structure invariant values; keys are exactly the structure set."""

    kind: str
    modulus: int
    entries: dict[tuple[int, ...], InvariantValue]

    def total(self) -> CycloNumber:
        values = list(self.entries.values())
        if not values:
            raise InvariantError("empty refined table has no total")
        acc = values[0].exact
        for v in values[1:]:
            acc = acc + v.exact
        return acc

    def multiset(self) -> tuple:
        """Order-free fingerprint of the exact values, for move invariance."""
        return tuple(sorted((v.exact.num, v.exact.den)
                            for v in self.entries.values()))


def _weight_vec(cat: CategoryData, w) -> tuple[tuple[CycloNumber, ...], tuple | None]:
    if hasattr(w, "weights") and hasattr(w, "cache_key"):
        return w.weights, w.cache_key()
    vec = tuple(w)
    if len(vec) != cat.size:
        raise InvariantError("weight vector length mismatch")
    return vec, None


def delta_weight(cat: CategoryData, label: int) -> KirbyColor:
    """Weight selecting a single color with coefficient one."""
    one, zero = cat.field.one, cat.field.zero
    weights = tuple(one if lam == label else zero for lam in range(cat.size))
    return KirbyColor("delta", label, weights)


class Evaluator:
    """Caches per-category data (twist powers, inverse dimensions, leaf
    messages, Kirby colors, gradings) across many forest evaluations.

    All evaluation methods are pure functions of (category, forest,
    weights); the caches are semantics-free memoization.
    """

    def __init__(self, cat: CategoryData):
        self.cat = cat
        self._theta_inv: list[CycloNumber | None] = [None] * cat.size
        self._theta_pow: dict[tuple[int, int], CycloNumber] = {}
        self._qdim_inv: list[CycloNumber | None] = [None] * cat.size
        self._qdim_inv_pow: dict[tuple[int, int], CycloNumber] = {}
        self._leaf_cache: dict[tuple, tuple[CycloNumber, ...]] = {}
        self._unknot_cache: dict[tuple, CycloNumber] = {}
        self._denoms: dict[int, CycloNumber] = {}
        self._denom_inv: dict[int, CycloNumber] = {}
        self._group = None
        self._refinables: list[RefinableStructure] | None = None
        self._gradings: dict[tuple[int, int], Grading] = {}
        self._colors: dict[tuple, KirbyColor] = {}
        self._supports: dict[tuple | int, tuple[int, ...]] = {}

    # -- cached atoms --------------------------------------------------------

    def theta_power(self, lam: int, m: int) -> CycloNumber:
        key = (lam, m)
        val = self._theta_pow.get(key)
        if val is None:
            if m >= 0:
                val = self.cat.twist[lam] ** m
            else:
                inv = self._theta_inv[lam]
                if inv is None:
                    inv = self.cat.twist[lam].invert()
                    self._theta_inv[lam] = inv
                val = inv ** (-m)
            self._theta_pow[key] = val
        return val

    def qdim_inv(self, lam: int) -> CycloNumber:
        val = self._qdim_inv[lam]
        if val is None:
            if self.cat.qdim[lam].is_zero():
                raise ZeroDimensionError(
                    f"label {lam} has zero quantum dimension on an internal vertex")
            val = self.cat.qdim[lam].invert()
            self._qdim_inv[lam] = val
        return val

    def _qdim_inv_power(self, lam: int, k: int) -> CycloNumber:
        if k == 0:
            return self.cat.field.one
        key = (lam, k)
        val = self._qdim_inv_pow.get(key)
        if val is None:
            val = self.qdim_inv(lam) ** k
            self._qdim_inv_pow[key] = val
        return val

    def _srow(self, lam: int, sign: int):
        if sign == 1:
            return self.cat.smat[lam]
        return self.cat.smat[self.cat.dual[lam]]

    def _support(self, vec, key) -> tuple[int, ...]:
        if key is not None:
            sup = self._supports.get(key)
            if sup is not None:
                return sup
        sup = tuple(lam for lam, w in enumerate(vec) if not w.is_zero())
        if key is not None:
            self._supports[key] = sup
        return sup

    # -- plain evaluation ----------------------------------------------------

    def unknot_value(self, framing: int, weight) -> CycloNumber:
        """Invariant of one framed unknot with a weighted color."""
        vec, key = _weight_vec(self.cat, weight)
        return self._unknot_pair(framing, vec, key)

    def _unknot_pair(self, framing: int, vec, key) -> CycloNumber:
        ck = None if key is None else (key, framing)
        if ck is not None and ck in self._unknot_cache:
            return self._unknot_cache[ck]
        total = self.cat.field.zero
        for lam in self._support(vec, key):
            total = total + vec[lam] * self.theta_power(lam, framing) \
                * self.cat.qdim[lam]
        if ck is not None:
            self._unknot_cache[ck] = total
        return total

    def eval_colored(self, forest: PlumbingForest, colors,
                     root: int | None = None) -> CycloNumber:
        """One fixed coloring, evaluated by the rooted product formula."""
        colors = tuple(colors)
        if len(colors) != forest.n:
            raise InvariantError("one color per vertex required")
        adj = forest.neighbors()
        total = self.cat.field.one
        for comp in forest.components():
            r = root if root is not None and root in comp else comp[0]
            total = total * self._colored_tree(forest, adj, comp, colors, r)
        return total

    def _colored_tree(self, forest, adj, comp, colors, root) -> CycloNumber:
        value = self.cat.qdim[colors[root]]
        stack = [(root, -1)]
        while stack:
            v, par = stack.pop()
            value = value * self.theta_power(colors[v], forest.framings[v])
            for (w, sign) in adj[v]:
                if w == par:
                    continue
                # edge (v parent, w child)
                value = value * self._srow(colors[w], sign)[colors[v]] \
                    * self.qdim_inv(colors[v])
                stack.append((w, v))
        return value

    def eval_weighted(self, forest: PlumbingForest, weights) -> CycloNumber:
        """Sum over all colorings of the per-vertex weights times the colored
        invariant, by message passing up each tree."""
        pairs = [_weight_vec(self.cat, w) for w in weights]
        if len(pairs) != forest.n:
            raise InvariantError("one weight per vertex required")
        adj = forest.neighbors()
        total = self.cat.field.one
        for comp in forest.components():
            total = total * self._tree_sum(forest, adj, comp, pairs)
        return total

    def _tree_sum(self, forest, adj, comp, pairs) -> CycloNumber:
        root = comp[0]
        if len(comp) == 1:
            vec, key = pairs[root]
            return self._unknot_pair(forest.framings[root], vec, key)
        n = self.cat.size
        parent = {root: -1}
        edge_sign = {}
        order = [root]
        stack = [root]
        while stack:
            v = stack.pop()
            for (w, sign) in adj[v]:
                if w == parent[v]:
                    continue
                parent[w] = v
                edge_sign[w] = sign
                order.append(w)
                stack.append(w)
        children: dict[int, list[int]] = {v: [] for v in comp}
        for v in order[1:]:
            children[parent[v]].append(v)
        msg: dict[int, list[CycloNumber]] = {}
        zero = self.cat.field.zero
        for v in reversed(order):
            vec, key = pairs[v]
            kids = children[v]
            if not kids and key is not None:
                ck = (key, forest.framings[v], edge_sign[v])
                cached = self._leaf_cache.get(ck)
                if cached is not None:
                    msg[v] = cached
                    continue
            fvec: list[CycloNumber | None] = [None] * n
            for lam in self._support(vec, key):
                f = vec[lam] * self.theta_power(lam, forest.framings[v])
                if kids:
                    f = f * self._qdim_inv_power(lam, len(kids))
                    for c in kids:
                        f = f * msg[c][lam]
                if not f.is_zero():
                    fvec[lam] = f
            if v == root:
                total = zero
                for lam in range(n):
                    if fvec[lam] is not None:
                        total = total + fvec[lam] * self.cat.qdim[lam]
                return total
            out = [zero] * n
            sign = edge_sign[v]
            for lam in range(n):
                f = fvec[lam]
                if f is None:
                    continue
                row = self._srow(lam, sign)
                for lp in range(n):
                    s = row[lp]
                    if not s.is_zero():
                        out[lp] = out[lp] + f * s
            out_t = tuple(out)
            msg[v] = out_t
            if not kids and key is not None:
                self._leaf_cache[(key, forest.framings[v], edge_sign[v])] = out_t
        raise AssertionError("unreachable")

    def brute_weighted(self, forest: PlumbingForest, weights) -> CycloNumber:
        """Oracle: direct sum over all colorings, no message passing."""
        pairs = [_weight_vec(self.cat, w) for w in weights]
        n = forest.n
        size = self.cat.size
        if size ** n > 1 << 22:
            raise InvariantError("brute-force coloring space too large")
        degree = [forest.degree(v) for v in range(n)]
        total = self.cat.field.zero
        for coloring in product(range(size), repeat=n):
            term = self.cat.field.one
            ok = True
            for v in range(n):
                lam = coloring[v]
                w = pairs[v][0][lam]
                if w.is_zero():
                    ok = False
                    break
                term = term * w * self.theta_power(lam, forest.framings[v])
                dv = degree[v]
                if dv == 0:
                    term = term * self.cat.qdim[lam]
                elif dv > 1:
                    term = term * self._qdim_inv_power(lam, dv - 1)
            if not ok:
                continue
            for (u, v, sign) in forest.edges:
                term = term * self._srow(coloring[u], sign)[coloring[v]]
            total = total + term
        return total

    # -- normalization -------------------------------------------------------

    def plain_color(self) -> KirbyColor:
        col = self._colors.get(("plain",))
        if col is None:
            col = kirby_color(self.cat, "plain")
            self._colors[("plain",)] = col
        return col

    def denominator(self, sign: int) -> CycloNumber:
        val = self._denoms.get(sign)
        if val is None:
            val = self.unknot_value(sign, self.plain_color())
            self._denoms[sign] = val
        return val

    def _denominator_inv(self, sign: int) -> CycloNumber:
        val = self._denom_inv.get(sign)
        if val is None:
            den = self.denominator(sign)
            if den.is_zero():
                raise NormalizationError(
                    "F(U_+-1(omega)) vanishes: category is not modular "
                    "or the data is corrupt")
            val = den.invert()
            self._denom_inv[sign] = val
        return val

    def normalize(self, raw: CycloNumber, sig: SignaturePair) -> InvariantValue:
        exact = raw
        if sig.b_plus:
            exact = exact * self._denominator_inv(1) ** sig.b_plus
        if sig.b_minus:
            exact = exact * self._denominator_inv(-1) ** sig.b_minus
        return InvariantValue.of(exact, sig, self.denominator(1),
                                 self.denominator(-1))

    # -- refinement plumbing ---------------------------------------------------

    def group(self):
        if self._group is None:
            self._group = invertibles(self.cat)
        return self._group

    def refinables(self) -> list[RefinableStructure]:
        if self._refinables is None:
            self._refinables = refinable_structures(self.cat, self.group())
        return self._refinables

    def find_structure(self, order: int, spin: bool | None) -> RefinableStructure:
        for s in self.refinables():
            if s.order != order or s.generator is None:
                continue
            if spin is None or s.is_spin == spin:
                return s
        wanted = {True: f"{order}-spin", False: f"non-spin {order}-refinable",
                  None: f"{order}-refinable"}[spin]
        raise RefinementError(f"category {self.cat.name} is not {wanted}")

    def structure_grading(self, order: int, spin: bool | None,
                          e_k: int = 1) -> Grading:
        key = (order, e_k, spin)
        grad = self._gradings.get(key)
        if grad is None:
            s = self.find_structure(order, spin)
            e_d = default_primitive_root(self.cat.field, order, e_k)
            grad = grading(self.cat, self.group(), s.generator, e_d)
            self._gradings[key] = grad
        return grad

    def graded_color(self, grad: Grading, u: int, e_k: int) -> KirbyColor:
        key = ("graded", grad.modulus, grad.generator, e_k, u)
        col = self._colors.get(key)
        if col is None:
            col = kirby_color(self.cat, "graded", u % grad.modulus, grad)
            self._colors[key] = col
        return col

    def dual_color(self, grad: Grading, v: int, e_k: int) -> KirbyColor:
        key = ("dual", grad.modulus, grad.generator, e_k, v)
        col = self._colors.get(key)
        if col is None:
            col = kirby_color(self.cat, "dual", v % grad.modulus, grad)
            self._colors[key] = col
        return col

    # -- invariants ------------------------------------------------------------

    def wrt(self, forest: PlumbingForest) -> InvariantValue:
        sig = signature(forest.linking_matrix())
        raw = self.eval_weighted(forest, [self.plain_color()] * forest.n)
        return self.normalize(raw, sig)

    def wrt_spin(self, forest: PlumbingForest, d: int,
                 e_k: int = 1) -> RefinedInvariantTable:
        grad = self.structure_grading(d, spin=True, e_k=e_k)
        mat = forest.linking_matrix()
        sig = signature(mat)
        sols = structures.spin_solutions(mat, d)
        entries = {}
        for s in sols.solutions:
            weights = [self.graded_color(grad, u, e_k) for u in s]
            raw = self.eval_weighted(forest, weights)
            entries[s] = self.normalize(raw, sig)
        return RefinedInvariantTable("spin", d, entries)

    def wrt_cohomology(self, forest: PlumbingForest, d: int,
                       e_k: int = 1) -> RefinedInvariantTable:
        grad = self.structure_grading(d, spin=False, e_k=e_k)
        mat = forest.linking_matrix()
        sig = signature(mat)
        classes = structures.cohomology_classes(mat, d)
        entries = {}
        for h in classes.solutions:
            weights = [self.graded_color(grad, u, e_k) for u in h]
            raw = self.eval_weighted(forest, weights)
            entries[h] = self.normalize(raw, sig)
        return RefinedInvariantTable("coh", d, entries)

    def wrt_homology(self, forest: PlumbingForest, d: int,
                     e_k: int = 1) -> RefinedInvariantTable:
        grad = self.structure_grading(d, spin=False, e_k=e_k)
        mat = forest.linking_matrix()
        sig = signature(mat)
        classes = structures.homology_classes(mat, d)
        scale = Fraction(1, d ** forest.n)
        entries = {}
        for rep in classes.classes:
            acc = self.cat.field.zero
            for shift in classes.subgroup:
                eps = tuple((a + b) % d for a, b in zip(rep, shift))
                weights = [self.dual_color(grad, v, e_k) for v in eps]
                acc = acc + self.eval_weighted(forest, weights)
            entries[rep] = self.normalize(acc.scale(scale), sig)
        return RefinedInvariantTable("hom", d, entries)

    def wrt_generalized_spin(self, forest: PlumbingForest,
                             generators: list[int],
                             e_k: int = 1) -> RefinedInvariantTable:
        """Refinement over a product of cyclic invertible subgroups.

        Each generator spans one cyclic factor; the factor contributes a
        characteristic-solution set when its generator has twist -1 and a
        kernel (cohomology) set otherwise.  Entries are indexed by the
        concatenation of the per-factor structure vectors, and their sum
        over the full product set equals the unrefined invariant.
        """
        group = self.group()
        mat = forest.linking_matrix()
        sig = signature(mat)
        factors = []
        one = self.cat.field.one
        for g in generators:
            if g not in group.elements:
                raise RefinementError(f"label {g} is not invertible")
            from .category import character_value
            if any(character_value(self.cat, g, h) != one
                   for h in group.elements):
                raise RefinementError(
                    f"generator {g} has nontrivial degree; the subgroup is "
                    "not refinable")
            order = group.element_orders[g]
            e_d = default_primitive_root(self.cat.field, order, e_k)
            grad = grading(self.cat, group, g, e_d)
            spin = self.cat.twist[g] == -self.cat.field.one
            sets = (structures.spin_solutions(mat, order).solutions if spin
                    else structures.cohomology_classes(mat, order).solutions)
            factors.append((grad, order, spin, sets))
        joint_cache: dict[tuple, KirbyColor] = {}

        def joint_color(residues: tuple[int, ...]) -> KirbyColor:
            col = joint_cache.get(residues)
            if col is None:
                zero = self.cat.field.zero
                weights = tuple(
                    self.cat.qdim[lam]
                    if all(f[0].degree[lam] == r
                           for f, r in zip(factors, residues)) else zero
                    for lam in range(self.cat.size))
                key = ("kv", residues,
                       tuple((f[0].modulus, f[0].generator) for f in factors),
                       e_k)
                col = KirbyColor("kv", 0, weights, key)
                joint_cache[residues] = col
            return col

        entries = {}
        for combo in product(*[f[3] for f in factors]):
            weights = [joint_color(tuple(vec[v] for vec in combo))
                       for v in range(forest.n)]
            raw = self.eval_weighted(forest, weights)
            key = tuple(x for vec in combo for x in vec)
            entries[key] = self.normalize(raw, sig)
        return RefinedInvariantTable("kv", 0, entries)

    def wrt_spinc(self, forest: PlumbingForest, d: int, e_k: int = 1,
                  override: bool = False,
                  factored: bool | None = None) -> RefinedInvariantTable:
        """Chern-vector refinement: needs a 2d-spin structure, d even
        (override releases the parity hypothesis for exploration only)."""
        if d % 2 and not override:
            raise RefinementError(
                "d must be even (pass override=True to explore odd d)")
        grad = self.structure_grading(2 * d, spin=True, e_k=e_k)
        mat = forest.linking_matrix()
        sig = signature(mat)
        chern = structures.chern_vectors(mat, d)
        two_d = 2 * d
        scale = Fraction((-1) ** forest.n, d ** forest.n)
        if factored is None:
            factored = len(chern.subgroup) > 512
        subgroup = (structures.image_subgroup_factored(mat, two_d, scale=2)
                    if factored else chern.subgroup)
        entries = {}
        for rep in chern.classes:
            acc = self.cat.field.zero
            for shift in subgroup:
                eps = tuple((a + b) % two_d for a, b in zip(rep, shift))
                weights = [self.dual_color(grad, v, e_k) for v in eps]
                acc = acc + self.eval_weighted(forest, weights)
            entries[rep] = self.normalize(acc.scale(scale), sig)
        return RefinedInvariantTable("spinc", d, entries)


# ---------------------------------------------------------------------------
# Gauss-sum invariants of the linking matrix


@dataclass(frozen=True)
class MooParams:
    """Murakami-Ohtsuki-Okada parameters: base modulus m and root xi, with
    an optional refinement (delta, alpha, congruence class)."""

    m: int
    xi: CycloNumber
    delta: int = 1
    alpha: int = 1
    g_residue: int | None = None


def _root_order(xi: CycloNumber, bound: int) -> int:
    cur = xi
    for k in range(1, bound + 1):
        if cur.is_one():
            return k
        cur = cur * xi
    raise MooError(f"xi is not a root of unity of order <= {bound}")


def _quadratic_sum(mat, vectors, xi: CycloNumber, order: int) -> CycloNumber:
    n = len(mat)
    counts: dict[int, int] = {}
    for vec in vectors:
        row_tot = 0
        for i in range(n):
            vi = vec[i]
            if vi:
                acc = 0
                mi = mat[i]
                for j in range(n):
                    acc += mi[j] * vec[j]
                row_tot += vi * acc
        e = row_tot % order
        counts[e] = counts.get(e, 0) + 1
    pows = [xi.field.one]
    for _ in range(order - 1):
        pows.append(pows[-1] * xi)
    total = xi.field.zero
    for e, c in counts.items():
        total = total + pows[e] * c
    return total


def moo(mat: structures.LinkingMatrix, m: int, xi: CycloNumber,
        sig: SignaturePair | None = None) -> InvariantValue:
    """Gauss-sum invariant: sum over (Z_m)^n of xi^(l L l), divided by the
    one-variable Gauss sum g and its conjugate to the signature powers."""
    if m < 1:
        raise MooError("m must be positive")
    bound = m if m % 2 else 2 * m
    if not (xi ** bound).is_one():
        raise MooError(f"xi^{bound} != 1: wrong root order for modulus {m}")
    order = _root_order(xi, bound)
    if sig is None:
        sig = signature(mat)
    n = len(mat)
    total = _quadratic_sum(mat, product(range(m), repeat=n), xi, order)
    g = gauss_sum(m, xi)
    gbar = g.conj()
    if g.is_zero() or gbar.is_zero():
        raise MooError("vanishing Gauss sum; invariant undefined")
    exact = total
    if sig.b_plus:
        exact = exact * g.invert() ** sig.b_plus
    if sig.b_minus:
        exact = exact * gbar.invert() ** sig.b_minus
    return InvariantValue.of(exact, sig, g, gbar)


def moo_refined(mat: structures.LinkingMatrix, params: MooParams,
                klass: tuple[int, ...],
                sig: SignaturePair | None = None) -> InvariantValue:
    """Refined Gauss-sum invariant over gamma = klass (mod delta), with
    gamma ranging over Z_(alpha delta m); the normalizing Gauss sum runs
    over the residue delta/2 (spin type) or 0 (cohomological type)."""
    m, xi, delta, alpha = params.m, params.xi, params.delta, params.alpha
    if m < 1 or delta < 1 or alpha < 1:
        raise MooError("m, delta, alpha must be positive")
    big = alpha * delta * m
    bound = big if (delta * m) % 2 else 2 * big
    if not (xi ** bound).is_one():
        raise MooError(f"xi^{bound} != 1: wrong root order for range Z_{big}")
    order = _root_order(xi, bound)
    n = len(mat)
    if len(klass) != n:
        raise MooError("congruence class has wrong length")
    klass = tuple(c % delta for c in klass)
    if sig is None:
        sig = signature(mat)
    steps = big // delta

    def gammas():
        for x in product(range(steps), repeat=n):
            yield tuple(klass[i] + delta * x[i] for i in range(n))

    total = _quadratic_sum(mat, gammas(), xi, order)
    g_res = params.g_residue
    if g_res is None:
        g_res = delta // 2 if delta % 2 == 0 else 0
    g = xi.field.zero
    for gamma in range(g_res % delta, big, delta):
        g = g + xi ** ((gamma * gamma) % order)
    gbar = g.conj()
    if g.is_zero() or gbar.is_zero():
        raise MooError("vanishing refined Gauss sum; invariant undefined")
    exact = total
    if sig.b_plus:
        exact = exact * g.invert() ** sig.b_plus
    if sig.b_minus:
        exact = exact * gbar.invert() ** sig.b_minus
    return InvariantValue.of(exact, sig, g, gbar)


# ---------------------------------------------------------------------------
# Decomposition into a reduced invariant and a Gauss-sum factor


@dataclass
class DecompositionData:
    """Everything needed to split the invariant over the reduced
    subcategory: tau_C(M) = tau_reduced(M) * moo(m, xi)(M)."""

    reduced: CategoryData
    m: int
    delta: int
    xi: CycloNumber
    eta: CycloNumber


def decomposition_data(cat: CategoryData) -> DecompositionData:
    """Extract (reduced category, m, xi) from category data alone.

    Requires a cyclic invertible group generated by t with deg(t) = delta
    dividing the order d and gcd(d/delta, delta) = 1.  The root is
    xi = eta <t>^delta with eta the self-braiding coefficient of t^delta,
    eta = twist(t^delta) / qdim(t^delta).
    """
    group = invertibles(cat)
    if group.generator is None:
        raise InvariantError("invertible group is not cyclic")
    t = group.generator
    grad = grading(cat, group)
    d = group.order
    delta = grad.degree[t]
    if delta == 0:
        delta = d
    if d % delta:
        raise InvariantError(f"deg(t) = {delta} does not divide |G| = {d}")
    m = d // delta
    if math.gcd(m, delta) != 1:
        raise InvariantError(
            f"gcd(m, delta) = gcd({m},{delta}) != 1: reduced decomposition "
            "does not apply")
    t_delta = group.power(t, delta)
    eta = cat.twist[t_delta] * cat.qdim[t_delta].invert()
    xi = eta * cat.qdim[t] ** delta
    reduced = reduced_subcategory(cat, grad, m)
    return DecompositionData(reduced=reduced, m=m, delta=delta, xi=xi, eta=eta)


def decomposition_check(cat: CategoryData, forest: PlumbingForest,
                        data: DecompositionData | None = None,
                        evaluator: Evaluator | None = None,
                        reduced_evaluator: Evaluator | None = None) -> dict:
    """Exact test of tau_C = tau_reduced * moo on one manifold; returns a
    witness record."""
    if data is None:
        data = decomposition_data(cat)
    ev = evaluator or Evaluator(cat)
    red_ev = reduced_evaluator or Evaluator(data.reduced)
    mat = forest.linking_matrix()
    sig = signature(mat)
    full = ev.wrt(forest)
    part = red_ev.wrt(forest)
    gauss = moo(mat, data.m, data.xi, sig)
    rhs = part.exact * cat.field.embed(gauss.exact) \
        if gauss.exact.field is not cat.field else part.exact * gauss.exact
    return {
        "equal": full.exact == rhs,
        "full": full,
        "reduced": part,
        "moo": gauss,
    }
