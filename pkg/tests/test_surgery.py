"""Plumbing forests: linking matrices, exact signatures, moves, and
structure transport at the forest level."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from spinmod import structures
from spinmod.corpus import e8_forest, random_forest, random_move_sequence
from spinmod.surgery import (ForestError, SignaturePair, apply_move,
                             blow_down, blow_up, chain, forest, reverse,
                             signature, stabilize, structure_transport)


def test_linking_matrix_examples():
    assert forest([5]).linking_matrix() == ((5,),)
    hopf = forest([0, 0], [(0, 1, 1)])
    assert hopf.linking_matrix() == ((0, 1), (1, 0))
    tri = chain([1, 2, 3])
    assert tri.linking_matrix() == ((1, 1, 0), (1, 2, 1), (0, 1, 3))


def test_forest_validation():
    with pytest.raises(ForestError):
        forest([0, 0], [(0, 0, 1)])
    with pytest.raises(ForestError):
        forest([0, 0], [(0, 1, 1), (1, 0, -1)])
    with pytest.raises(ForestError):
        forest([0, 0, 0], [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    with pytest.raises(ForestError):
        forest([0, 0], [(0, 1, 2)])


def test_signature_examples():
    assert signature(((0, 1), (1, 0))) == SignaturePair(1, 1, 0)
    assert signature(((7,),)).b_plus == 1
    assert signature(((-2,),)).b_minus == 1
    assert signature(((0,),)).nullity == 1
    sig = signature(e8_forest().linking_matrix())
    assert (sig.b_plus, sig.b_minus, sig.nullity) == (8, 0, 0)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_signature_congruence_invariance(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    mat = [[0] * n for _ in range(n)]
    for i in range(n):
        mat[i][i] = rng.randint(-4, 4)
        for j in range(i + 1, n):
            v = rng.choice([0, 0, 1, -1, 2])
            mat[i][j] = mat[j][i] = v
    # random unimodular P as a product of elementary row additions
    p = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(6):
        i, j = rng.randrange(n), rng.randrange(n)
        if i != j:
            c = rng.choice([-2, -1, 1, 2])
            for k in range(n):
                p[i][k] += c * p[j][k]

    def matmul(a, b):
        return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)]

    pt = [[p[j][i] for j in range(n)] for i in range(n)]
    conj = matmul(matmul(pt, mat), p)
    assert signature(tuple(map(tuple, conj))) == signature(tuple(map(tuple, mat)))


def test_stabilize_is_block_diagonal():
    f = chain([2, 3])
    for eps in (1, -1):
        g = apply_move(f, stabilize(eps))
        mat = g.linking_matrix()
        assert mat[2][2] == eps
        assert mat[0][2] == mat[1][2] == 0
        assert tuple(tuple(row[:2]) for row in mat[:2]) == f.linking_matrix()


def test_blow_up_blow_down_roundtrip():
    f = forest([3, -1, 0], [(0, 1, -1)])
    for u in range(f.n):
        for eps in (1, -1):
            g = apply_move(f, blow_up(u, eps))
            assert g.framings[u] == f.framings[u] + eps
            assert g.framings[-1] == eps
            back = apply_move(g, blow_down(g.n - 1))
            assert back == f


def test_blow_down_of_isolated_vertex_is_destabilization():
    f = forest([2, 1])
    g = apply_move(f, blow_down(1))
    assert g == forest([2])


def test_blow_down_legality():
    with pytest.raises(ForestError):
        apply_move(forest([3]), blow_down(0))
    center = forest([1, 0, 0], [(0, 1, 1), (0, 2, 1)])
    with pytest.raises(ForestError):
        apply_move(center, blow_down(0))


def test_reverse_flips_incident_edge_signs():
    f = forest([0, 0, 0], [(0, 1, 1), (1, 2, -1)])
    g = apply_move(f, reverse(1))
    assert g.edges == ((0, 1, -1), (1, 2, 1))
    assert apply_move(g, reverse(1)) == f


def test_transport_examples():
    f = forest([2])
    # spin stabilization appends d/2
    s = structure_transport("spin", f, stabilize(1), (0,), 2)
    assert s == (0, 1)
    h = structure_transport("coh", f, stabilize(-1), (1,), 2)
    assert h == (1, 0)
    s2 = structure_transport("spin", forest([2, 1]), reverse(0), (0, 1), 2)
    assert s2 == (0, 1)
    hm = structure_transport("hom", forest([0]), reverse(0), (2,), 5)
    assert hm == (3,)


def _structure_set(kind, mat, d):
    if kind == "spin":
        return structures.spin_solutions(mat, d).solutions
    if kind == "coh":
        return structures.cohomology_classes(mat, d).solutions
    if kind == "chern":
        return structures.chern_vectors(mat, d).classes
    return structures.homology_classes(mat, d).classes


def _canonical_class(kind, mat, d, vec):
    """Lex-minimal representative of the class of vec (coset kinds)."""
    if kind in ("spin", "coh"):
        return vec
    if kind == "chern":
        sub = structures.image_subgroup(mat, 2 * d, scale=2)
        mod = 2 * d
    else:
        sub = structures.image_subgroup(mat, d)
        mod = d
    return min(tuple((a + b) % mod for a, b in zip(vec, s)) for s in sub)


@pytest.mark.parametrize("kind,d", [("spin", 2), ("spin", 4), ("coh", 2),
                                    ("coh", 3), ("chern", 2), ("hom", 3)])
def test_transport_is_a_structure_set_bijection(kind, d):
    rng = random.Random(hash((kind, d)) & 0xFFFF)
    for _ in range(12):
        f = random_forest(rng, max_vertices=4, max_framing=3)
        mat = f.linking_matrix()
        els = _structure_set(kind, mat, d)
        if not els:
            continue
        moves, g = random_move_sequence(rng, f, rng.randint(1, 4),
                                        max_vertices=6)
        mat2 = g.linking_matrix()
        out = []
        for e in els:
            cur, ff = e, f
            for mv in moves:
                cur = structure_transport(kind, ff, mv, cur, d)
                ff = apply_move(ff, mv)
            out.append(cur)
        target = _structure_set(kind, mat2, d)
        canon = sorted(_canonical_class(kind, mat2, d, e) for e in out)
        assert canon == sorted(target), (kind, d, f, moves)


def test_blow_down_with_opposite_edge_sign():
    # a +1-framed leaf attached by a -1 edge still blows down (lk^2 = 1)
    f = forest([3, 1], [(0, 1, -1)])
    g = apply_move(f, blow_down(1))
    assert g == forest([2])
    d = 2
    for s in structures.spin_solutions(f.linking_matrix(), d).solutions:
        out = structure_transport("spin", f, blow_down(1), s, d)
        assert out in structures.spin_solutions(g.linking_matrix(), d).solutions


def test_transport_roundtrip_on_structures():
    f = chain([2, 0, 3])
    d = 2
    sols = structures.spin_solutions(f.linking_matrix(), d).solutions
    for u in range(f.n):
        mv = blow_up(u, -1)
        g = apply_move(f, mv)
        down = blow_down(g.n - 1)
        for s in sols:
            there = structure_transport("spin", f, mv, s, d)
            back = structure_transport("spin", g, down, there, d)
            assert back == s
