"""Category data model: axiom battery, invertibles, gradings, refinable
structures, Kirby colors."""

import pytest

from spinmod.category import (GradingError, MalformedCategoryError,
                              character_table, check_axioms,
                              default_primitive_root, grading, invertibles,
                              kirby_color, refinable_structures)
from spinmod.constructions import (abelian_category, product_category,
                                   sl2_category, trivial_category)
from spinmod.cyclo import cyclo_field, make_root


def test_one_object_category_is_modular():
    rep = check_axioms(trivial_category())
    assert rep.premodular and rep.modular and rep.transparent == (0,)


def test_sl2_5_axioms():
    rep = check_axioms(sl2_category(5))
    assert rep.premodular and rep.modular
    assert rep.transparent == (0,)
    assert rep.criterion_agreement is True


def test_abelian_degenerate_is_all_transparent_not_modular():
    cat = abelian_category(3, cyclo_field(3).one)
    rep = check_axioms(cat)
    assert rep.premodular and not rep.modular
    assert rep.transparent == (0, 1, 2)


def test_abelian_zeta3_is_modular():
    rep = check_axioms(abelian_category(3, make_root(3, 1)))
    assert rep.premodular and rep.modular and rep.transparent == (0,)


def test_malformed_data_rejected_before_checking():
    cat = sl2_category(4)
    with pytest.raises(MalformedCategoryError):
        type(cat)(cat.name, cat.field, cat.labels, (0, 2, 1, 3), cat.qdim,
                  cat.twist, cat.smat, cat.fusion)
    with pytest.raises(MalformedCategoryError):
        type(cat)(cat.name, cat.field, cat.labels, cat.dual, cat.qdim[:-1],
                  cat.twist, cat.smat, cat.fusion)


def test_axiom_checker_flags_broken_twist():
    cat = sl2_category(5)
    bad_twist = list(cat.twist)
    bad_twist[1] = -bad_twist[1]
    broken = type(cat)(cat.name, cat.field, cat.labels, cat.dual, cat.qdim,
                       tuple(bad_twist), cat.smat, cat.fusion)
    rep = check_axioms(broken)
    assert not rep.premodular
    assert any("ribbon" in v for v in rep.violations)


def test_axiom_checker_flags_broken_hopf_row():
    cat = sl2_category(5)
    smat = [list(row) for row in cat.smat]
    smat[0][2] = smat[2][0] = cat.field.zero
    broken = type(cat)(cat.name, cat.field, cat.labels, cat.dual, cat.qdim,
                       cat.twist, smat, cat.fusion)
    rep = check_axioms(broken)
    assert not rep.premodular
    assert any("qdim" in v for v in rep.violations)


def test_invertibles_sl2():
    for r in (5, 8):
        cat = sl2_category(r)
        group = invertibles(cat)
        assert group.elements == (0, r - 2)
        assert group.order == 2
        assert group.generator == r - 2
        assert group.table[(r - 2, r - 2)] == 0


def test_invertibles_abelian_is_everything():
    cat = abelian_category(5, make_root(5, 1))
    group = invertibles(cat)
    assert group.elements == tuple(range(5))
    assert group.order == 5
    assert group.element_orders[1] == 5


def test_invertibles_of_product_is_klein_group():
    cat = product_category(sl2_category(4), sl2_category(6))
    group = invertibles(cat)
    assert group.order == 4
    assert group.generator is None
    orders = sorted(group.element_orders.values())
    assert orders == [1, 2, 2, 2]


def test_grading_sl2():
    for r, want in ((5, 1), (8, 0)):
        cat = sl2_category(r)
        group = invertibles(cat)
        grad = grading(cat, group)
        assert grad.modulus == 2
        assert grad.degree[0] == 0
        assert grad.degree[r - 2] == want
        assert grad.degree == tuple(i % 2 for i in range(r - 1))


def test_grading_degree_additivity():
    for cat in (sl2_category(7), abelian_category(4, make_root(8, 1))):
        grad = grading(cat, invertibles(cat))
        d = grad.modulus
        for a in range(cat.size):
            for b in range(cat.size):
                for c, mult in cat.fusion_channels(a, b):
                    assert (grad.degree[a] + grad.degree[b] - grad.degree[c]) % d == 0
        assert grad.degree[0] == 0
        for a in range(cat.size):
            assert (grad.degree[cat.dual[a]] + grad.degree[a]) % d == 0


def test_characters_are_roots_of_unity_of_dividing_order():
    cat = sl2_category(6)
    group = invertibles(cat)
    chars = character_table(cat, group)
    for (lam, g), chi in chars.items():
        assert (chi ** group.element_orders[g]).is_one()
    # multiplicativity on the group
    for g in group.elements:
        for h in group.elements:
            gh = group.table[(g, h)]
            assert chars[(g, 0)].is_one()
            for lam in range(cat.size):
                assert chars[(lam, gh)] == chars[(lam, g)] * chars[(lam, h)]


def test_grading_rejects_non_cyclic_group():
    cat = product_category(sl2_category(4), sl2_category(6))
    group = invertibles(cat)
    with pytest.raises(GradingError):
        grading(cat, group)


def test_refinable_structures_spin_pattern():
    ref8 = [s for s in refinable_structures(sl2_category(8)) if not s.is_trivial]
    assert len(ref8) == 1 and ref8[0].is_spin and ref8[0].order == 2
    assert ref8[0].spin_residue == 1
    ref6 = [s for s in refinable_structures(sl2_category(6)) if not s.is_trivial]
    assert len(ref6) == 1 and not ref6[0].is_spin
    ref5 = [s for s in refinable_structures(sl2_category(5)) if not s.is_trivial]
    assert ref5 == []


def test_qdim_of_generator_sign():
    # odd cyclic order forces qdim 1; order 2 allows a sign
    cat3 = abelian_category(3, make_root(3, 1))
    g3 = invertibles(cat3)
    assert cat3.qdim[g3.generator].is_one()
    for r in (5, 8):
        cat = sl2_category(r)
        t = invertibles(cat).generator
        assert cat.qdim[t].is_rational()
        assert cat.qdim[t].as_rational() in (1, -1)


def test_kirby_colors():
    cat = sl2_category(8)
    grad = grading(cat, invertibles(cat))
    plain = kirby_color(cat, "plain")
    assert plain.weights == cat.qdim
    graded1 = kirby_color(cat, "graded", 1, grad)
    for lam in range(cat.size):
        if lam % 2:
            assert graded1.weights[lam] == cat.qdim[lam]
        else:
            assert graded1.weights[lam].is_zero()
    total = [cat.field.zero] * cat.size
    for u in range(grad.modulus):
        w = kirby_color(cat, "graded", u, grad).weights
        total = [a + b for a, b in zip(total, w)]
    assert tuple(total) == plain.weights
    assert kirby_color(cat, "dual", 0, grad).weights == plain.weights
    with pytest.raises(ValueError):
        kirby_color(cat, "graded", 5, grad)


def test_default_primitive_root():
    f = cyclo_field(24)
    assert default_primitive_root(f, 2) == -f.one
    assert default_primitive_root(f, 3) == f.zeta(8)
    with pytest.raises(GradingError):
        default_primitive_root(f, 5)
    with pytest.raises(GradingError):
        default_primitive_root(f, 4, k=2)
