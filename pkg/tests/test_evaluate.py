import random
from fractions import Fraction

import pytest

from classinv import linalg
from classinv.diagrams import ArcDiagram, GroupKind, enumerate_basis
from classinv.dimensions import InvariantQuery, dim_invariants
from classinv.errors import ShapeError, SizeLimitError
from classinv.evaluate import (
    ArgumentTuple,
    FormSpec,
    check_invariance,
    evaluate_diagram_functional,
    evaluate_standard_monomial,
    evaluation_rank,
    form_algebra_basis,
    lie_invariant_dim,
    pfaffian,
    reflection,
    sample_group_element,
    _det_of_tuples,
)
from classinv.partitions import EMPTY_TABLEAU, Tableau
from classinv.rsk import Bitableau
from oracles import brute_det, brute_pfaffian

F = Fraction


def frac_rows(rows):
    return [[F(x) for x in row] for row in rows]


def test_pfaffian_normalization_and_blocks():
    assert pfaffian(frac_rows([[0, 1], [-1, 0]])) == 1
    block4 = frac_rows(
        [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
    )
    assert pfaffian(block4) == 1
    assert pfaffian([]) == 1


def test_pfaffian_squares_to_determinant():
    rng = random.Random(2)
    for order in (2, 4, 6):
        for _ in range(20):
            a = [[F(rng.randint(-3, 3)) for _ in range(order)] for _ in range(order)]
            skew = [[a[i][j] - a[j][i] for j in range(order)] for i in range(order)]
            value = pfaffian(skew)
            assert value == brute_pfaffian(skew)
            assert value**2 == linalg.det(skew)


def test_pfaffian_rejects_bad_input():
    with pytest.raises(ShapeError):
        pfaffian(frac_rows([[0, 1, 0], [-1, 0, 0], [0, 0, 0]]))
    with pytest.raises(ShapeError):
        pfaffian(frac_rows([[0, 1], [1, 0]]))


def test_form_specs():
    sym = FormSpec.symmetric_identity(3)
    assert sym.pairing((F(1), F(0), F(2)), (F(3), F(1), F(1))) == 5
    skew = FormSpec.skew_standard(1)
    assert skew.gram == ((F(0), F(1)), (F(-1), F(0)))
    with pytest.raises(ShapeError):
        FormSpec("symmetric", ((F(0), F(1)), (F(0), F(0))))
    with pytest.raises(ShapeError):
        FormSpec("skew", ((F(0), F(1)), (F(1), F(0))))
    degenerate = ((F(0), F(0)), (F(0), F(0)))
    with pytest.raises(ShapeError):
        FormSpec("symmetric", degenerate)


def test_form_algebra_dimensions():
    assert len(form_algebra_basis(FormSpec.symmetric_identity(3))) == 3
    assert len(form_algebra_basis(FormSpec.symmetric_identity(4))) == 6
    assert len(form_algebra_basis(FormSpec.skew_standard(2))) == 10


def test_cayley_transform_of_a_rotation_generator():
    # S = [[0,1],[-1,0]] is skew for the identity form; its Cayley image is
    # an exact rational rotation
    s = frac_rows([[0, 1], [-1, 0]])
    ident = linalg.identity(2)
    g = linalg.mat_mul(linalg.mat_sub(ident, s), linalg.inverse(linalg.mat_add(ident, s)))
    gtg = linalg.mat_mul(linalg.transpose(g), g)
    assert gtg == ident
    assert linalg.det(g) == 1


def test_sampled_elements_preserve_their_forms():
    rng = random.Random(11)
    for tag, n in [("so", 2), ("so", 3), ("o", 3), ("sp", 1), ("sp", 2)]:
        group = GroupKind(tag, n)
        form = FormSpec.for_group(group)
        gram = [list(row) for row in form.gram]
        for _ in range(5):
            g = sample_group_element(group, form, rng)
            lhs = linalg.mat_mul(linalg.mat_mul(linalg.transpose(g), gram), g)
            assert lhs == gram
            if tag in ("so", "sp"):
                assert linalg.det(g) == 1
    for _ in range(5):
        g = sample_group_element(GroupKind("sl", 3), FormSpec.none(), rng)
        assert linalg.det(g) == 1
        g = sample_group_element(GroupKind("gl", 3), FormSpec.none(), rng)
        assert linalg.det(g) != 0


def test_reflection_is_a_determinant_minus_one_isometry():
    form = FormSpec.symmetric_identity(3)
    r = reflection(form)
    gram = [list(row) for row in form.gram]
    assert linalg.mat_mul(linalg.mat_mul(linalg.transpose(r), gram), r) == gram
    assert linalg.det(r) == -1


def test_diagram_functional_simple_contractions():
    gl1 = GroupKind("gl", 1)
    diagram = ArcDiagram.build(2, [(1, 2)], p=1)
    args = ArgumentTuple(vectors=((F(1),),), covectors=((F(1),),))
    assert evaluate_diagram_functional(diagram, gl1, FormSpec.none(), args) == 1

    o1 = GroupKind("o", 1)
    arc = ArcDiagram.build(2, [(1, 2)])
    args = ArgumentTuple(vectors=((F(1),), (F(1),)))
    assert evaluate_diagram_functional(arc, o1, FormSpec.for_group(o1), args) == 1


def test_intro_functional_with_hyperedge_matches_its_product_form():
    # 15 slots, one order-3 hyperedge {1,3,7} and six contraction arcs
    group = GroupKind("so", 3)
    form = FormSpec.for_group(group)
    diagram = ArcDiagram.build(
        15,
        [(2, 5), (4, 13), (6, 12), (8, 15), (9, 14), (10, 11)],
        [(1, 3, 7)],
    )
    rng = random.Random(23)
    args = ArgumentTuple.random(3, 15, 0, rng)
    v = args.vectors
    expected = (
        _det_of_tuples([v[0], v[2], v[6]])
        * form.pairing(v[1], v[4])
        * form.pairing(v[3], v[12])
        * form.pairing(v[5], v[11])
        * form.pairing(v[7], v[14])
        * form.pairing(v[8], v[13])
        * form.pairing(v[9], v[10])
    )
    got = evaluate_diagram_functional(diagram, group, form, args)
    assert got == expected and got != 0


def test_diagram_functional_validates_input():
    group = GroupKind("o", 2)
    form = FormSpec.for_group(group)
    not_one_regular = ArcDiagram.build(2, [(1, 2), (1, 2)])
    with pytest.raises(ShapeError):
        evaluate_diagram_functional(
            not_one_regular, group, form, ArgumentTuple.random(2, 2, 0, 0)
        )
    arc = ArcDiagram.build(2, [(1, 2)])
    with pytest.raises(ShapeError):
        evaluate_diagram_functional(arc, group, form, ArgumentTuple.random(2, 5, 0, 0))


def test_standard_monomial_values():
    gl = GroupKind("gl", 2)
    pair = Bitableau(Tableau.from_rows([[1]]), Tableau.from_rows([[1]]))
    args = ArgumentTuple(vectors=((F(1), F(0)),), covectors=((F(1), F(0)),))
    assert evaluate_standard_monomial(pair, gl, FormSpec.none(), args) == 1

    o2 = GroupKind("o", 2)
    of = FormSpec.for_group(o2)
    args = ArgumentTuple(vectors=((F(1), F(2)), (F(3), F(5))))
    value = evaluate_standard_monomial(Tableau.from_rows([[1, 2]]), o2, of, args)
    assert value == 13  # b(v1, v2) with the identity form

    sp1 = GroupKind("sp", 1)
    spf = FormSpec.for_group(sp1)
    tab = Tableau.from_rows([[1], [2]])
    arc = ArcDiagram.build(2, [(1, 2)])
    args = ArgumentTuple.random(2, 2, 0, random.Random(5))
    assert evaluate_standard_monomial(tab, sp1, spf, args) == evaluate_diagram_functional(
        arc, sp1, spf, args
    )


def test_sl_monomial_with_determinant_columns():
    sl = GroupKind("sl", 2)
    rect = Tableau.from_rows([[1, 2], [3, 4]])
    args = ArgumentTuple.random(2, 0, 4, random.Random(9))
    value = evaluate_standard_monomial((rect, EMPTY_TABLEAU), sl, FormSpec.none(), args)
    expected = _det_of_tuples([args.covectors[0], args.covectors[2]]) * _det_of_tuples(
        [args.covectors[1], args.covectors[3]]
    )
    assert value == expected


def test_so_odd_tableau_monomial():
    group = GroupKind("so", 2)
    form = FormSpec.for_group(group)
    odd = Tableau.from_rows([[1, 3, 4], [2]])
    args = ArgumentTuple.random(2, 4, 0, random.Random(4))
    value = evaluate_standard_monomial(odd, group, form, args)
    expected = _det_of_tuples([args.vectors[0], args.vectors[1]]) * form.pairing(
        args.vectors[2], args.vectors[3]
    )
    assert value == expected
    with pytest.raises(ShapeError):
        evaluate_standard_monomial(Tableau.from_rows([[1, 2], [3]]), group, form, args)


def test_monomial_multidegree_scaling_law():
    rng = random.Random(31)
    cases = [
        (GroupKind("o", 2), Tableau.from_rows([[1, 2], [3, 4]])),
        (GroupKind("sp", 1), Tableau.from_rows([[1, 1], [2, 2]])),
        (GroupKind("so", 2), Tableau.from_rows([[1, 3, 4], [2]])),
    ]
    for group, tableau in cases:
        form = FormSpec.for_group(group)
        m = len(tableau.weight())
        weight = tableau.weight(m)
        args = ArgumentTuple.random(group.dim_v, m, 0, rng)
        base = evaluate_standard_monomial(tableau, group, form, args)
        for i in range(m):
            scaled = evaluate_standard_monomial(
                tableau, group, form, args.scaled(i, F(3))
            )
            assert scaled == F(3) ** weight[i] * base


def test_invariance_of_simple_functionals():
    gl = GroupKind("gl", 2)
    diagram = ArcDiagram.build(2, [(1, 2)], p=1)
    assert check_invariance(diagram, gl, FormSpec.none(), trials=5, tuples=2, seed=0)


def test_symplectic_functional_fails_under_a_scaling():
    # g doubling one basis vector is invertible but not symplectic; the
    # matching functional changes value
    sp1 = GroupKind("sp", 1)
    form = FormSpec.for_group(sp1)
    arc = ArcDiagram.build(2, [(1, 2)])
    args = ArgumentTuple(vectors=((F(1), F(0)), (F(0), F(1))))
    g = frac_rows([[2, 0], [0, 1]])
    base = evaluate_diagram_functional(arc, sp1, form, args)
    moved = evaluate_diagram_functional(arc, sp1, form, args.transformed(g))
    assert base == 1 and moved == 2


def test_so_hyperedge_functional_flips_sign_under_reflection():
    group = GroupKind("so", 2)
    form = FormSpec.for_group(group)
    diagram = ArcDiagram.build(2, [], [(1, 2)])
    assert check_invariance(diagram, group, form, trials=8, tuples=3, seed=1)
    refl = reflection(form)
    args = ArgumentTuple.random(2, 2, 0, random.Random(6))
    base = evaluate_diagram_functional(diagram, group, form, args)
    moved = evaluate_diagram_functional(diagram, group, form, args.transformed(refl))
    assert base == -moved and base != 0
    failed = check_invariance(
        diagram, group, form, trials=20, tuples=3, seed=2, sample_group=GroupKind("o", 2)
    )
    assert not failed and failed.witness is not None


def test_evaluation_rank_examples():
    group = GroupKind("so", 2)
    form = FormSpec.for_group(group)
    basis = enumerate_basis(group, (1, 1))
    assert len(basis) == 2
    assert evaluation_rank(basis, group, form, seed=3) == 2
    duplicated = [basis[0], basis[0]]
    assert evaluation_rank(duplicated, group, form, seed=3) == 1
    assert evaluation_rank([], group, form) == 0


def test_lie_oracle_examples():
    assert lie_invariant_dim(GroupKind("gl", 2), (2, 2)) == 2
    assert lie_invariant_dim(GroupKind("sp", 2), 4) == 3
    assert lie_invariant_dim(GroupKind("so", 3), 3) == 1
    assert lie_invariant_dim(GroupKind("gl", 2), (2, 1)) == 0
    assert lie_invariant_dim(GroupKind("o", 1), 3) == 0
    assert lie_invariant_dim(GroupKind("so", 1), 3) == 1


def test_lie_oracle_respects_the_cap():
    with pytest.raises(SizeLimitError):
        lie_invariant_dim(GroupKind("sp", 2), 8, limit=1000)


def test_lie_oracle_cap_env(monkeypatch):
    monkeypatch.setenv("CLASSINV_ORACLE_CAP", "3")
    with pytest.raises(SizeLimitError):
        lie_invariant_dim(GroupKind("o", 2), 2)
    monkeypatch.delenv("CLASSINV_ORACLE_CAP")
    assert lie_invariant_dim(GroupKind("o", 2), 2) == 1


def test_determinant_helper_against_brute_force():
    rng = random.Random(8)
    for _ in range(10):
        a = [[F(rng.randint(-4, 4)) for _ in range(3)] for _ in range(3)]
        assert linalg.det(a) == brute_det(a)
