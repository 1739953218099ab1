"""Premodular and modular category data over a cyclotomic field.

A category is presented by purely numerical data on a finite label set:
duality involution, quantum dimensions, twists, the unnormalized matrix of
Hopf-link values, and fusion multiplicities.  That is exactly the data
that determines colored invariants of plumbing forests, and it is enough
to *decide* the premodular axioms, modularity (exact rank), transparency,
invertibility, gradings and refinability -- all in exact arithmetic.

Fusion multiplicities are part of the input data rather than derived:
they make invertibility detection, degree additivity and cocycle lifts
exact and decidable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclo import CycloField, CycloNumber


class MalformedCategoryError(ValueError):
    """Structural defect (shape mismatch, bad index) found before axiom checks."""


class GradingError(ValueError):
    """Character values incompatible with the requested cyclic grading."""


@dataclass(frozen=True)
class Label:
    index: int
    name: str


class CategoryData:
    """Numerical presentation of a premodular category.

    Label indices are dense ``0..size-1`` with ``0`` the unit object.
    ``smat[a][b]`` is the value of the (a,b)-colored 0-framed Hopf link
    with linking +1; ``fusion[a][b][c]`` the multiplicity of ``c`` in
    ``a (x) b``.  Instances are immutable by convention and safe to share.
    """

    __slots__ = ("name", "field", "labels", "dual", "qdim", "twist", "smat",
                 "fusion", "_channels")

    def __init__(self, name: str, field: CycloField, labels, dual, qdim,
                 twist, smat, fusion):
        self.name = name
        self.field = field
        self.labels = tuple(labels)
        self.dual = tuple(dual)
        self.qdim = tuple(qdim)
        self.twist = tuple(twist)
        self.smat = tuple(tuple(row) for row in smat)
        self.fusion = tuple(tuple(tuple(row) for row in plane)
                            for plane in fusion)
        self._channels: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {}
        self._validate_shapes()

    @property
    def size(self) -> int:
        return len(self.labels)

    def _validate_shapes(self) -> None:
        n = len(self.labels)
        if n == 0:
            raise MalformedCategoryError("empty label set")
        for i, lab in enumerate(self.labels):
            if lab.index != i:
                raise MalformedCategoryError("label indices must be dense 0..n-1")
        if len(self.dual) != n or sorted(self.dual) != list(range(n)):
            raise MalformedCategoryError("dual must be a permutation of labels")
        for seq, what in ((self.qdim, "qdim"), (self.twist, "twist")):
            if len(seq) != n:
                raise MalformedCategoryError(f"{what} has wrong length")
            for v in seq:
                if v.field is not self.field:
                    raise MalformedCategoryError(f"{what} entry in wrong field")
        if len(self.smat) != n or any(len(row) != n for row in self.smat):
            raise MalformedCategoryError("smat is not square of the right size")
        if (len(self.fusion) != n
                or any(len(p) != n for p in self.fusion)
                or any(len(r) != n for p in self.fusion for r in p)):
            raise MalformedCategoryError("fusion tensor has wrong shape")
        for p in self.fusion:
            for r in p:
                for v in r:
                    if not isinstance(v, int) or v < 0:
                        raise MalformedCategoryError(
                            "fusion multiplicities must be nonnegative integers")

    def fusion_channels(self, a: int, b: int) -> tuple[tuple[int, int], ...]:
        """Nonzero fusion channels of a (x) b as (label, multiplicity) pairs."""
        key = (a, b)
        chans = self._channels.get(key)
        if chans is None:
            chans = tuple((c, m) for c, m in enumerate(self.fusion[a][b]) if m)
            self._channels[key] = chans
        return chans

    def label_names(self) -> tuple[str, ...]:
        return tuple(lab.name for lab in self.labels)

    def __repr__(self) -> str:
        return f"CategoryData({self.name!r}, |labels|={self.size}, N={self.field.order})"


@dataclass
class AxiomReport:
    """Outcome of the premodular/modular axiom battery."""

    premodular: bool
    modular: bool
    transparent: tuple[int, ...]
    violations: list[str]
    global_dim: CycloNumber
    criterion_agreement: bool | None

    def summary(self) -> str:
        status = []
        status.append("premodular" if self.premodular else "NOT premodular")
        status.append("modular" if self.modular else "not modular")
        status.append(f"transparent={list(self.transparent)}")
        if self.violations:
            status.append(f"{len(self.violations)} violations")
        return ", ".join(status)


def check_axioms(cat: CategoryData) -> AxiomReport:
    """Verify the ribbon/fusion identities, transparency and exact modularity.

    ``premodular`` means every checkable identity holds exactly; ``modular``
    that the Hopf-link matrix has full rank over the field.  When the global
    dimension is nonzero, the report also records whether modularity agrees
    with the transparency criterion (no transparent object besides the unit).
    """
    n = cat.size
    one = cat.field.one
    violations: list[str] = []

    def complain(msg: str) -> None:
        violations.append(msg)

    dual, qdim, twist, smat = cat.dual, cat.qdim, cat.twist, cat.smat
    if dual[0] != 0:
        complain("dual(unit) != unit")
    for a in range(n):
        if dual[dual[a]] != a:
            complain(f"dual is not an involution at {a}")
        if qdim[a] != qdim[dual[a]]:
            complain(f"qdim({a}) != qdim(dual {a})")
        if twist[a] != twist[dual[a]]:
            complain(f"twist({a}) != twist(dual {a})")
    if qdim[0] != one:
        complain("qdim(unit) != 1")
    if twist[0] != one:
        complain("twist(unit) != 1")
    if smat[0][0] != one:
        complain("smat[0][0] != 1")
    for a in range(n):
        if smat[a][0] != qdim[a]:
            complain(f"smat[{a}][0] != qdim({a})")
        for b in range(a, n):
            if smat[a][b] != smat[b][a]:
                complain(f"smat not symmetric at ({a},{b})")
    for a in range(n):
        for b in range(n):
            expected = 1 if a == b else 0
            if cat.fusion[a][0][b] != expected or cat.fusion[0][a][b] != expected:
                complain(f"unit fusion fails at ({a},{b})")
            if cat.fusion[a][b][0] != (1 if b == dual[a] else 0):
                complain(f"duality channel fails at ({a},{b})")
    # Associativity of fusion multiplicities.
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    left = sum(cat.fusion[a][b][e] * cat.fusion[e][c][d]
                               for e in range(n))
                    right = sum(cat.fusion[b][c][e] * cat.fusion[a][e][d]
                                for e in range(n))
                    if left != right:
                        complain(f"fusion associativity fails at ({a},{b},{c};{d})")
    # Ribbon identity: twist(a) twist(b) smat[a][b] = sum_c N^c_ab twist(c) qdim(c).
    for a in range(n):
        for b in range(a, n):
            lhs = twist[a] * twist[b] * smat[a][b]
            rhs = cat.field.zero
            for c, mult in cat.fusion_channels(a, b):
                term = twist[c] * qdim[c]
                if mult != 1:
                    term = term * mult
                rhs = rhs + term
            if lhs != rhs:
                complain(f"ribbon identity fails at ({a},{b})")

    transparent = tuple(a for a in range(n)
                        if all(smat[a][b] == qdim[a] * qdim[b] for b in range(n)))

    modular = _rank(cat) == n
    global_dim = cat.field.zero
    for a in range(n):
        global_dim = global_dim + qdim[a] * qdim[a]
    agreement: bool | None = None
    if not global_dim.is_zero():
        agreement = modular == (transparent == (0,))

    return AxiomReport(
        premodular=not violations,
        modular=modular,
        transparent=transparent,
        violations=violations,
        global_dim=global_dim,
        criterion_agreement=agreement,
    )


def _rank(cat: CategoryData) -> int:
    """Exact rank of the Hopf-link matrix over the cyclotomic field."""
    n = cat.size
    rows = [list(row) for row in cat.smat]
    rank = 0
    for col in range(n):
        pivot = None
        for r in range(rank, n):
            if not rows[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].invert()
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(n):
            if r != rank and not rows[r][col].is_zero():
                f = rows[r][col]
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[rank])]
        rank += 1
        if rank == n:
            break
    return rank


@dataclass
class InvertibleGroup:
    """The finite abelian group of invertible labels, with its fusion table."""

    elements: tuple[int, ...]
    table: dict[tuple[int, int], int]
    order: int
    element_orders: dict[int, int]
    generator: int | None
    inverse: dict[int, int]

    @property
    def is_cyclic(self) -> bool:
        return self.generator is not None

    def power(self, g: int, k: int) -> int:
        k %= self.element_orders[g]
        result = 0
        for _ in range(k):
            result = self.table[(result, g)]
        return result


def invertibles(cat: CategoryData) -> InvertibleGroup:
    """Detect invertible labels from fusion: tensoring preserves simplicity
    and the dual is a two-sided inverse."""
    n = cat.size
    elems = []
    for g in range(n):
        if cat.fusion[g][cat.dual[g]][0] != 1:
            continue
        if all(sum(cat.fusion[g][lam]) == 1 for lam in range(n)):
            elems.append(g)
    table: dict[tuple[int, int], int] = {}
    for g in elems:
        for h in elems:
            chans = cat.fusion_channels(g, h)
            if len(chans) != 1 or chans[0][1] != 1:
                raise MalformedCategoryError(
                    f"invertible product {g}*{h} is not a single label")
            table[(g, h)] = chans[0][0]
    orders: dict[int, int] = {}
    for g in elems:
        k, cur = 1, g
        while cur != 0:
            cur = table[(cur, g)]
            k += 1
        orders[g] = k
    generator = None
    for g in elems:
        if orders[g] == len(elems):
            generator = g
            break
    inverse = {g: cat.dual[g] for g in elems}
    return InvertibleGroup(
        elements=tuple(elems),
        table=table,
        order=len(elems),
        element_orders=orders,
        generator=generator,
        inverse=inverse,
    )


def character_value(cat: CategoryData, lam: int, g: int,
                    _inv_cache: dict | None = None) -> CycloNumber:
    """Monodromy character chi_lam(g) = smat[lam][g] / (qdim(lam) qdim(g))."""
    denom = cat.qdim[lam] * cat.qdim[g]
    if _inv_cache is not None:
        inv = _inv_cache.get(denom)
        if inv is None:
            inv = denom.invert()
            _inv_cache[denom] = inv
    else:
        inv = denom.invert()
    return cat.smat[lam][g] * inv


def character_table(cat: CategoryData, group: InvertibleGroup
                    ) -> dict[tuple[int, int], CycloNumber]:
    """All character values chi_lam(g) for lam in the label set, g invertible."""
    cache: dict = {}
    return {(lam, g): character_value(cat, lam, g, cache)
            for lam in range(cat.size) for g in group.elements}


@dataclass
class Grading:
    """Z_d grading of the label set induced by a cyclic group of invertibles.

    ``degree[lam]`` is the discrete log of chi_lam(generator) in base
    ``e_d``; it is additive under fusion.  Dual Kirby colors depend on the
    choice of ``e_d``, so the root is an explicit, user-visible parameter.
    """

    modulus: int
    generator: int
    e_d: CycloNumber
    degree: tuple[int, ...]
    character_table: dict[tuple[int, int], CycloNumber]


def default_primitive_root(field: CycloField, d: int, k: int = 1) -> CycloNumber:
    """zeta_N^(k N/d): the default (k=1) primitive d-th root used for gradings."""
    if d < 1 or field.order % d != 0:
        raise GradingError(f"{d} does not divide the field order {field.order}")
    from math import gcd
    if gcd(k, d) != 1:
        raise GradingError(f"zeta_{d}^{k} is not primitive")
    return field.zeta(k * (field.order // d))


def grading(cat: CategoryData, group: InvertibleGroup,
            generator: int | None = None,
            e_d: CycloNumber | None = None) -> Grading:
    """Compute degrees with respect to a cyclic (sub)group of invertibles.

    Raises GradingError if the group is not cyclic (use ``character_table``
    directly in that case) or if some character value is not a power of
    ``e_d`` (corrupt data).
    """
    t = generator if generator is not None else group.generator
    if t is None:
        raise GradingError("group is not cyclic; no distinguished generator")
    if t not in group.elements:
        raise GradingError(f"label {t} is not invertible")
    d = group.element_orders[t]
    if e_d is None:
        e_d = default_primitive_root(cat.field, d)
    powers = {}
    cur = cat.field.one
    for k in range(d):
        powers[cur] = k
        cur = cur * e_d
    if not cur.is_one():
        raise GradingError("e_d is not a d-th root of unity")
    cache: dict = {}
    degree = []
    for lam in range(cat.size):
        chi = character_value(cat, lam, t, cache)
        k = powers.get(chi)
        if k is None:
            raise GradingError(
                f"character of label {lam} is not a power of e_d (corrupt data)")
        degree.append(k)
    subgroup = _cyclic_elements(group, t)
    chars = {(lam, g): character_value(cat, lam, g, cache)
             for lam in range(cat.size) for g in subgroup}
    return Grading(modulus=d, generator=t, e_d=e_d, degree=tuple(degree),
                   character_table=chars)


def _cyclic_elements(group: InvertibleGroup, t: int) -> tuple[int, ...]:
    elems = [0]
    cur = t
    while cur != 0:
        elems.append(cur)
        cur = group.table[(cur, t)]
    return tuple(elems)


@dataclass
class RefinableStructure:
    """A subgroup H of invertibles lying in the trivial-degree component.

    ``is_spin`` when some element of H has twist -1.  On such a subgroup
    the twists form an order <= 2 character (values +-1); for cyclic H the
    spin character corresponds to the residue ``order/2``.
    """

    elements: tuple[int, ...]
    order: int
    generator: int | None
    is_spin: bool
    twist_signs: dict[int, int]
    spin_residue: int

    @property
    def is_trivial(self) -> bool:
        return self.order == 1


def refinable_structures(cat: CategoryData,
                         group: InvertibleGroup | None = None
                         ) -> list[RefinableStructure]:
    """Enumerate subgroups H of the invertibles with trivial degree, i.e.
    trivial monodromy against every invertible, marked spin or non-spin."""
    if group is None:
        group = invertibles(cat)
    chars = character_table(cat, group)
    one = cat.field.one
    trivial_degree = [g for g in group.elements
                      if all(chars[(g, h)] == one for h in group.elements)]
    subgroups = _all_subgroups(group, trivial_degree)
    result = []
    for elems in subgroups:
        twist_signs: dict[int, int] = {}
        ok = True
        for h in elems:
            tw = cat.twist[h]
            if tw == one:
                twist_signs[h] = 1
            elif tw == -cat.field.one:
                twist_signs[h] = -1
            else:
                ok = False
                break
        if not ok:
            # Twists on a refinable subgroup must be +-1; anything else
            # signals corrupt data and the subgroup is skipped.
            continue
        is_spin = any(v == -1 for v in twist_signs.values())
        gen = _cyclic_generator(group, elems)
        order = len(elems)
        spin_residue = order // 2 if is_spin else 0
        result.append(RefinableStructure(
            elements=tuple(sorted(elems)),
            order=order,
            generator=gen,
            is_spin=is_spin,
            twist_signs=twist_signs,
            spin_residue=spin_residue,
        ))
    result.sort(key=lambda s: (s.order, s.elements))
    return result


def _all_subgroups(group: InvertibleGroup, pool: list[int]) -> list[tuple[int, ...]]:
    """All subgroups of the abelian group generated inside ``pool``."""
    from itertools import combinations
    seen: set[frozenset[int]] = set()
    seen.add(frozenset({0}))
    for size in range(1, len(pool) + 1):
        for gens in combinations(pool, size):
            closure = {0}
            frontier = list(gens)
            while frontier:
                g = frontier.pop()
                if g in closure:
                    continue
                closure.add(g)
                for h in list(closure):
                    for prod in (group.table[(g, h)], group.table[(h, g)]):
                        if prod not in closure:
                            frontier.append(prod)
            if all(x in pool or x == 0 for x in closure):
                seen.add(frozenset(closure))
    return sorted((tuple(sorted(s)) for s in seen), key=lambda s: (len(s), s))


def _cyclic_generator(group: InvertibleGroup, elems: tuple[int, ...] | set[int]
                      ) -> int | None:
    elems = set(elems)
    for g in sorted(elems):
        if group.element_orders.get(g, 0) == len(elems):
            return g
    return None


@dataclass
class KirbyColor:
    """A weight function on labels used to color surgery components.

    kinds: ``plain`` (all labels, weight qdim), ``graded`` (labels of one
    degree), ``dual`` (character-twisted weights e_d^(v deg) qdim).  The
    ``tag`` disambiguates colors built from different gradings or root
    conventions in evaluation caches.
    """

    kind: str
    parameter: int
    weights: tuple[CycloNumber, ...]
    tag: tuple = ()

    def cache_key(self) -> tuple:
        return (self.kind, self.parameter, self.tag)


def kirby_color(cat: CategoryData, kind: str, parameter: int = 0,
                grad: Grading | None = None) -> KirbyColor:
    if kind == "plain":
        return KirbyColor("plain", 0, tuple(cat.qdim))
    if grad is None:
        raise GradingError(f"{kind} Kirby color requires a grading")
    d = grad.modulus
    if not 0 <= parameter < d:
        raise ValueError(f"parameter {parameter} out of range [0,{d})")
    tag = (d, grad.generator, grad.e_d.num, grad.e_d.den)
    if kind == "graded":
        zero = cat.field.zero
        weights = tuple(cat.qdim[lam] if grad.degree[lam] == parameter else zero
                        for lam in range(cat.size))
        return KirbyColor("graded", parameter, weights, tag)
    if kind == "dual":
        e_pows = [cat.field.one]
        for _ in range(d - 1):
            e_pows.append(e_pows[-1] * grad.e_d)
        weights = tuple(e_pows[(parameter * grad.degree[lam]) % d] * cat.qdim[lam]
                        for lam in range(cat.size))
        return KirbyColor("dual", parameter, weights, tag)
    raise ValueError(f"unknown Kirby color kind {kind!r}")
