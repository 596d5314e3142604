import os
import sys

sys.path.append(os.path.dirname(os.path.dirname(__file__)))

import itertools

import pytest

from errors import DegreeTooLarge, MissingGenerator, OutOfRange, ParseError, RepeatedEntry
from monodromy import (
    MonodromyRep,
    Permutation,
    canonical_rep,
    cyclic_rep,
    enumerate_reps,
    evaluate_word,
    parse_perm,
    rep_from_texts,
    validate_rep,
)


def test_parse_perm_cycle_notation():
    perm = parse_perm("(1 2 3)", 3)
    assert [perm(i) for i in (1, 2, 3)] == [2, 3, 1]
    assert str(perm) == "(1 2 3)"
    assert parse_perm("(1,3)(2)", 3) == Permutation.from_cycles([[1, 3]], 3)
    assert parse_perm("()", 4).is_identity()


def test_parse_perm_rejects_bad_input():
    with pytest.raises(OutOfRange):
        parse_perm("(1 4)", 3)
    with pytest.raises(RepeatedEntry):
        parse_perm("(1 2)(2 3)", 3)
    with pytest.raises(ParseError):
        parse_perm("1 2 3", 3)


def test_products_act_on_the_right():
    u = parse_perm("(1 2)", 3)
    v = parse_perm("(2 3)", 3)
    for x in (1, 2, 3):
        assert (u * v)(x) == v(u(x)), "x^(uv) should equal (x^u)^v"
    assert str(u * v) == "(1 3 2)"
    assert (u * v) ** 3 == Permutation.identity(3)
    assert (u * v).inverse() == v * u


def test_conjugate_relabels_points():
    perm = parse_perm("(1 2)", 3)
    relabel = parse_perm("(1 3)", 3)
    assert str(perm.conjugate(relabel)) == "(2 3)"


def test_cyclic_rep_classification(fan):
    for n in range(2, 8):
        classification = validate_rep(fan, cyclic_rep(fan, n))
        assert classification.valid, f"cyclic rep of degree {n} should satisfy the trefoil relation"
        assert classification.cyclic and classification.locally_cyclic and classification.regular


def test_trivial_meridian_is_rejected(fan):
    classification = validate_rep(fan, rep_from_texts(fan, {'m': '()', 'c': '(1 2)'}, 2))
    assert not classification.relations_ok
    assert not classification.valid


def test_irregular_rep_classification(fan):
    rep = rep_from_texts(fan, {'m': '(1 2)', 'c': '(2 3)'})
    assert rep.n == 3
    classification = validate_rep(fan, rep)
    assert classification.valid
    assert not classification.cyclic
    assert not classification.locally_cyclic
    assert not classification.regular


def test_locally_cyclic_rep(fan):
    rep = rep_from_texts(fan, {'m': '(1 2 3 4)', 'c': '(1 2)'})
    classification = validate_rep(fan, rep)
    assert classification.valid
    assert classification.locally_cyclic
    assert not classification.cyclic


def test_missing_generator(fan):
    with pytest.raises(MissingGenerator):
        rep_from_texts(fan, {'m': '(1 2)'})


def _brute_force_transitive(fan, n):
    perms = [Permutation(images) for images in itertools.permutations(range(n))]
    found = []
    for m, c in itertools.product(perms, repeat=2):
        rep = MonodromyRep(n, (('m', m), ('c', c)))
        if validate_rep(fan, rep).valid:
            found.append(rep)
    return found


@pytest.mark.parametrize("n", [2, 3, 4])
def test_enumeration_matches_brute_force(fan, n):
    expected = _brute_force_transitive(fan, n)
    listed = enumerate_reps(fan, n, up_to_conjugacy=False)
    assert sorted(item.rep.key() for item in listed) == sorted(rep.key() for rep in expected)

    classes = enumerate_reps(fan, n, up_to_conjugacy=True)
    assert len(classes) == len({canonical_rep(rep).key() for rep in expected})
    assert all(item.classification.valid for item in classes)


def test_degree_three_classes(fan):
    classes = enumerate_reps(fan, 3)
    assert [item.rep.describe() for item in classes] == ["m=(2 3) c=(1 2)", "m=(1 2 3) c=()"]
    assert len(enumerate_reps(fan, 3, up_to_conjugacy=False)) == 8
    assert len(enumerate_reps(fan, 2)) == 1


def test_enumeration_degree_bound(fan):
    with pytest.raises(DegreeTooLarge):
        enumerate_reps(fan, 3, max_degree=2)


def test_evaluate_word_on_relation(fan):
    rep = cyclic_rep(fan, 5)
    (relation,) = fan.relations
    assert evaluate_word(relation, rep).is_identity()


def test_small_locally_cyclic_reps_are_cyclic(fan):
    for n in (2, 3):
        for item in enumerate_reps(fan, n, up_to_conjugacy=False):
            if item.classification.locally_cyclic:
                assert item.classification.cyclic, f"{item.rep.describe()} is locally cyclic but not cyclic"


def test_irregular_degree_three_class(fan):
    irregular = [item for item in enumerate_reps(fan, 3) if not item.classification.cyclic]
    assert len(irregular) == 1
    assert irregular[0].rep['c'].cycle_type() == (2, 1)
