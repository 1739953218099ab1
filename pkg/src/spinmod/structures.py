"""Combinatorial structure sets on surgered manifolds.

For a linking matrix L these are, over Z_d (or Z_2d for Chern vectors):

- spin:  solutions of  L s = (d/2) diag(L)   (d even),
- coh:   solutions of  L h = 0               (classes in H^1),
- chern: {sigma : sigma_i = L_ii mod 2} / 2 Im L   in (Z_2d)^n,
- hom:   (Z_d)^n / Im L                            (classes in H_1).

Solution sets are computed by Smith-normal-form reduction; subgroups and
cosets by breadth-first closure over column generators.  Every solver has
a brute-force twin used for cross-validation: modular linear algebra is
the riskiest plumbing in the package, so nothing here is trusted without
an independent oracle.

Coset representatives are canonicalized by lexicographic minimality, so
structure sets compare as sorted lists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

LinkingMatrix = tuple[tuple[int, ...], ...]

# Full enumerations beyond this many candidates are refused with a clear
# error instead of silently grinding.
ENUMERATION_LIMIT = 1 << 24


class StructureError(ValueError):
    """Invalid structure vector, modulus, or oversized enumeration."""


def as_matrix(rows) -> LinkingMatrix:
    mat = tuple(tuple(int(v) for v in row) for row in rows)
    n = len(mat)
    for row in mat:
        if len(row) != n:
            raise StructureError("linking matrix must be square")
    for i in range(n):
        for j in range(i + 1, n):
            if mat[i][j] != mat[j][i]:
                raise StructureError("linking matrix must be symmetric")
    return mat


# ---------------------------------------------------------------------------
# Smith normal form


def smith_normal_form(mat) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """U, D, V with U @ mat @ V = D diagonal, U and V unimodular, and the
    diagonal entries nonnegative with d_i | d_(i+1)."""
    a = [list(map(int, row)) for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, c):
        # row_i += c * row_j
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]

    def add_col(i, j, c):
        for row in a:
            row[i] += c * row[j]
        for row in v:
            row[i] += c * row[j]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(m, n):
        # locate a minimal nonzero pivot in the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < best[0]):
                    best = (abs(a[i][j]), i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            swap_rows(t, bi)
        if bj != t:
            swap_cols(t, bj)
        while True:
            reduced = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, -q)
                    if a[i][t]:
                        swap_rows(t, i)
                        reduced = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        reduced = False
            if not reduced:
                continue
            # enforce divisibility of the rest of the block by the pivot
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        if a[t][t] < 0:
            negate_row(t)
        t += 1
    return u, a, v


def _mat_vec_mod(mat, vec, mod: int) -> tuple[int, ...]:
    return tuple(sum(r * x for r, x in zip(row, vec)) % mod for row in mat)


def solve_mod(mat, rhs, d: int) -> list[tuple[int, ...]]:
    """All x in (Z_d)^n with mat @ x = rhs (mod d), sorted lexicographically."""
    if d < 1:
        raise StructureError("modulus must be positive")
    m = len(mat)
    n = len(mat[0]) if m else 0
    u, dd, v = smith_normal_form(mat)
    c = _mat_vec_mod(u, rhs, d)
    per_coord: list[list[int]] = []
    for i in range(n):
        di = dd[i][i] % d if i < m else 0
        ci = c[i] if i < m else 0
        g = math.gcd(di, d)
        if ci % g:
            return []
        if g == d:
            # di = 0 mod d and ci = 0 mod d: the coordinate is free
            per_coord.append(list(range(d)))
            continue
        step = d // g
        y0 = (pow(di // g, -1, step) * ((ci // g) % step)) % step
        per_coord.append([(y0 + k * step) % d for k in range(g)])
    for i in range(n, m):
        if c[i] % d:
            return []
    sols = []
    for y in product(*per_coord):
        sols.append(_mat_vec_mod_cols(v, y, d))
    return sorted(set(sols))


def _mat_vec_mod_cols(mat, vec, mod: int) -> tuple[int, ...]:
    n = len(vec)
    return tuple(sum(mat[i][j] * vec[j] for j in range(n)) % mod
                 for i in range(len(mat)))


# ---------------------------------------------------------------------------
# Structure sets


@dataclass(frozen=True)
class SpinSolutionSet:
    modulus: int
    solutions: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.solutions)


@dataclass(frozen=True)
class CohomologyClassSet:
    modulus: int
    solutions: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.solutions)


@dataclass(frozen=True)
class ChernVectorSet:
    """Coset representatives in (Z_2d)^n together with the subgroup 2 Im L."""

    modulus: int
    classes: tuple[tuple[int, ...], ...]
    subgroup: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class HomologyClassSet:
    modulus: int
    classes: tuple[tuple[int, ...], ...]
    subgroup: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.classes)


def characteristic_rhs(mat: LinkingMatrix, d: int) -> tuple[int, ...]:
    return tuple((d // 2) * mat[i][i] % d for i in range(len(mat)))


def spin_solutions(mat: LinkingMatrix, d: int) -> SpinSolutionSet:
    """Solutions of L s = (d/2) diag(L) mod d; empty output is valid (the
    obstruction may not vanish for arbitrary matrices)."""
    if d < 2 or d % 2:
        raise StructureError("spin structures need an even modulus d >= 2")
    sols = solve_mod(mat, characteristic_rhs(mat, d), d)
    return SpinSolutionSet(d, tuple(sols))


def cohomology_classes(mat: LinkingMatrix, d: int) -> CohomologyClassSet:
    if d < 1:
        raise StructureError("modulus must be positive")
    sols = solve_mod(mat, (0,) * len(mat), d)
    return CohomologyClassSet(d, tuple(sols))


def _close_subgroup(gens: list[tuple[int, ...]], mod: int, n: int
                    ) -> tuple[tuple[int, ...], ...]:
    """Breadth-first closure of generators in (Z_mod)^n."""
    zero = (0,) * n
    seen = {zero}
    frontier = [zero]
    while frontier:
        cur = frontier.pop()
        for g in gens:
            nxt = tuple((c + x) % mod for c, x in zip(cur, g))
            if nxt not in seen:
                if len(seen) >= ENUMERATION_LIMIT:
                    raise StructureError("subgroup closure exceeds size limit")
                seen.add(nxt)
                frontier.append(nxt)
    return tuple(sorted(seen))


def image_subgroup(mat: LinkingMatrix, mod: int, scale: int = 1
                   ) -> tuple[tuple[int, ...], ...]:
    """The subgroup scale * Im(mat) of (Z_mod)^n, fully enumerated."""
    n = len(mat)
    gens = [tuple(scale * mat[i][j] % mod for i in range(n)) for j in range(n)]
    return _close_subgroup(gens, mod, n)


def image_subgroup_factored(mat: LinkingMatrix, mod: int, scale: int = 1
                            ) -> tuple[tuple[int, ...], ...]:
    """The subgroup scale * Im(mat) of (Z_mod)^n, enumerated without
    deduplication by running over independent cyclic generators obtained
    from the Smith normal form (scale*mat = U^-1 D V^-1, so the image is
    spanned by the columns of U^-1 D with known independent orders)."""
    n = len(mat)
    scaled = [[scale * v for v in row] for row in mat]
    u, dd, _ = smith_normal_form(scaled)
    u_inv_cols = _integer_inverse(u)
    gens = []
    for i in range(n):
        di = dd[i][i]
        order = mod // math.gcd(di, mod)
        if order > 1:
            gen = tuple(di * u_inv_cols[r][i] % mod for r in range(n))
            gens.append((gen, order))
    elements = []
    for exps in product(*[range(order) for (_, order) in gens]):
        vec = [0] * n
        for (gen, _), e in zip(gens, exps):
            if e:
                for r in range(n):
                    vec[r] += e * gen[r]
        elements.append(tuple(v % mod for v in vec))
    return tuple(sorted(elements))


def _integer_inverse(mat: list[list[int]]) -> list[list[int]]:
    """Exact inverse of a unimodular integer matrix, as integers."""
    from fractions import Fraction
    n = len(mat)
    a = [[Fraction(mat[i][j]) for j in range(n)]
         + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    out = [[a[i][n + j] for j in range(n)] for i in range(n)]
    for row in out:
        for v in row:
            if v.denominator != 1:
                raise StructureError("matrix is not unimodular")
    return [[int(v) for v in row] for row in out]


def chern_vectors(mat: LinkingMatrix, d: int) -> ChernVectorSet:
    """Lex-minimal representatives of {sigma = diag(L) mod 2} / 2 Im L."""
    if d < 1:
        raise StructureError("modulus must be positive")
    n = len(mat)
    if d ** n > ENUMERATION_LIMIT:
        raise StructureError("Chern enumeration exceeds size limit")
    two_d = 2 * d
    subgroup = image_subgroup(mat, two_d, scale=2)
    parity = tuple(mat[i][i] % 2 for i in range(n))
    seen: set[tuple[int, ...]] = set()
    classes = []
    for tau in product(range(d), repeat=n):
        sigma = tuple(parity[i] + 2 * tau[i] for i in range(n))
        if sigma in seen:
            continue
        classes.append(sigma)
        for s in subgroup:
            seen.add(tuple((x + y) % two_d for x, y in zip(sigma, s)))
    return ChernVectorSet(d, tuple(classes), subgroup)


def homology_classes(mat: LinkingMatrix, d: int) -> HomologyClassSet:
    """Lex-minimal representatives of (Z_d)^n / Im L."""
    if d < 1:
        raise StructureError("modulus must be positive")
    n = len(mat)
    if d ** n > ENUMERATION_LIMIT:
        raise StructureError("homology enumeration exceeds size limit")
    subgroup = image_subgroup(mat, d)
    seen: set[tuple[int, ...]] = set()
    classes = []
    for x in product(range(d), repeat=n):
        if x in seen:
            continue
        classes.append(x)
        for s in subgroup:
            seen.add(tuple((a + b) % d for a, b in zip(x, s)))
    return HomologyClassSet(d, tuple(classes), subgroup)


def coker_count(mat: LinkingMatrix, d: int) -> int:
    """|coker(L mod d)| from the Smith normal form, independent of the
    coset enumerations."""
    n = len(mat)
    _, dd, _ = smith_normal_form(mat)
    count = 1
    for i in range(n):
        count *= math.gcd(dd[i][i], d)
    return count


# ---------------------------------------------------------------------------
# Brute-force oracles


def brute_spin_solutions(mat: LinkingMatrix, d: int) -> tuple[tuple[int, ...], ...]:
    n = len(mat)
    _check_brute(d, n)
    rhs = characteristic_rhs(mat, d)
    return tuple(x for x in product(range(d), repeat=n)
                 if _mat_vec_mod(mat, x, d) == rhs)


def brute_cohomology_classes(mat: LinkingMatrix, d: int) -> tuple[tuple[int, ...], ...]:
    n = len(mat)
    _check_brute(d, n)
    zero = (0,) * n
    return tuple(x for x in product(range(d), repeat=n)
                 if _mat_vec_mod(mat, x, d) == zero)


def brute_chern_vectors(mat: LinkingMatrix, d: int) -> tuple[tuple[int, ...], ...]:
    """Independent enumeration: the subgroup 2 Im L is produced by running
    over all of (Z_d)^n rather than by closure."""
    n = len(mat)
    _check_brute(d, n)
    two_d = 2 * d
    sub = {tuple(2 * s % two_d for s in _mat_vec_mod(mat, x, d))
           for x in product(range(d), repeat=n)}
    parity = tuple(mat[i][i] % 2 for i in range(n))
    seen: set[tuple[int, ...]] = set()
    classes = []
    for tau in product(range(d), repeat=n):
        sigma = tuple(parity[i] + 2 * tau[i] for i in range(n))
        if sigma in seen:
            continue
        classes.append(sigma)
        for s in sub:
            seen.add(tuple((x + y) % two_d for x, y in zip(sigma, s)))
    return tuple(classes)


def brute_homology_classes(mat: LinkingMatrix, d: int) -> tuple[tuple[int, ...], ...]:
    n = len(mat)
    _check_brute(d, n)
    sub = {_mat_vec_mod(mat, x, d) for x in product(range(d), repeat=n)}
    seen: set[tuple[int, ...]] = set()
    classes = []
    for x in product(range(d), repeat=n):
        if x in seen:
            continue
        classes.append(x)
        for s in sub:
            seen.add(tuple((a + b) % d for a, b in zip(x, s)))
    return tuple(classes)


def _check_brute(d: int, n: int) -> None:
    if d ** n > ENUMERATION_LIMIT:
        raise StructureError(
            f"brute-force search space {d}^{n} exceeds {ENUMERATION_LIMIT}")


# ---------------------------------------------------------------------------
# Move transport at the matrix level

_SOLUTION_KINDS = {"spin", "coh"}
_COSET_KINDS = {"chern", "hom"}
KINDS = _SOLUTION_KINDS | _COSET_KINDS


def _validate_element(kind: str, mat: LinkingMatrix, elem, d: int) -> tuple[int, ...]:
    n = len(mat)
    modulus = 2 * d if kind == "chern" else d
    if len(elem) != n:
        raise StructureError(f"element has length {len(elem)}, expected {n}")
    e = tuple(x % modulus for x in elem)
    if kind == "spin":
        if d % 2:
            raise StructureError("spin transport needs even d")
        if _mat_vec_mod(mat, e, d) != characteristic_rhs(mat, d):
            raise StructureError("vector is not a characteristic solution")
    elif kind == "coh":
        if _mat_vec_mod(mat, e, d) != (0,) * n:
            raise StructureError("vector is not in the kernel")
    elif kind == "chern":
        for i in range(n):
            if (e[i] - mat[i][i]) % 2:
                raise StructureError("Chern vector parity mismatch")
    elif kind != "hom":
        raise StructureError(f"unknown structure kind {kind!r}")
    return e


def move_matrix(mat: LinkingMatrix, move) -> LinkingMatrix:
    """Image of the linking matrix under a matrix-level move."""
    n = len(mat)
    kind = move[0]
    if kind == "stabilize":
        sign = move[1]
        rows = [list(row) + [0] for row in mat]
        rows.append([0] * n + [sign])
        return tuple(tuple(r) for r in rows)
    if kind == "reverse":
        i = move[1]
        return tuple(tuple(-v if (r == i) != (c == i) else v
                           for c, v in enumerate(row))
                     for r, row in enumerate(mat))
    if kind == "slide":
        # slide component i along j: basis change e_i -> e_i + orient e_j
        _, i, j, orient = move
        rows = [list(row) for row in mat]
        new = [row[:] for row in rows]
        for k in range(n):
            new[i][k] = rows[i][k] + orient * rows[j][k]
        for k in range(n):
            new[k][i] = new[k][i] + orient * new[k][j]
        return tuple(tuple(r) for r in new)
    raise StructureError(f"unknown move {move!r}")


def transport(kind: str, mat: LinkingMatrix, move, elem, d: int
              ) -> tuple[LinkingMatrix, tuple[int, ...]]:
    """Carry a structure vector through a matrix-level move.

    Solution kinds (spin, coh) transform contragradiently under slides
    (the slid-over coordinate absorbs -orient * elem_i); coset kinds
    (chern, hom) transform covariantly (coordinate i gains
    +orient * elem_j).  Reversal negates one coordinate for every kind.
    """
    e = _validate_element(kind, mat, elem, d)
    modulus = 2 * d if kind == "chern" else d
    new_mat = move_matrix(mat, move)
    mkind = move[0]
    if mkind == "stabilize":
        sign = move[1]
        if kind == "spin":
            extra = d // 2
        elif kind == "chern":
            extra = sign % (2 * d)
        else:
            extra = 0
        return new_mat, e + (extra,)
    if mkind == "reverse":
        i = move[1]
        out = list(e)
        out[i] = (-out[i]) % modulus
        return new_mat, tuple(out)
    if mkind == "slide":
        _, i, j, orient = move
        out = list(e)
        if kind in _SOLUTION_KINDS:
            out[j] = (out[j] - orient * out[i]) % modulus
        else:
            out[i] = (out[i] + orient * out[j]) % modulus
        return new_mat, tuple(out)
    raise StructureError(f"unknown move {move!r}")
