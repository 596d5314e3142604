import os
import sys

sys.path.append(os.path.dirname(os.path.dirname(__file__)))

import pytest

from config import MAX_COSETS
from cover_lift import lift
from errors import MultiComponentDomain, ValidationError
from fpgroups import (
    abelianization,
    canonical_relator,
    fingerprint,
    hom_count,
    match_sieradski,
    sieradski,
    tietze_simplify,
    todd_coxeter,
)
from monodromy import cyclic_rep, rep_from_texts
from pi1 import build_complex, cell_presentation, dual_presentation, spanning_tree


def test_base_complex_counts(base):
    complex_ = build_complex(base)
    assert complex_.counts() == {'vertices': 2, 'edges': 6, 'faces': 8, 'euler_characteristic': 4}
    assert len(complex_.marked_face_ids()) == 2
    assert len(spanning_tree(complex_)) == 1


def test_cyclic_complex_counts(cyclic_lift):
    complex_ = build_complex(cyclic_lift(3))
    assert complex_.counts() == {'vertices': 6, 'edges': 18, 'faces': 20, 'euler_characteristic': 8}
    assert len(spanning_tree(complex_, 'dfs')) == 5


def test_base_complement_is_the_trefoil_group(base):
    complex_ = build_complex(base)
    result = cell_presentation(complex_, complex_.marked_face_ids())
    pres = result.presentation
    assert pres.rank == 5
    assert all(gen.startswith('e') for gen in pres.generators)
    assert str(abelianization(pres)) == "[0]"
    assert tietze_simplify(pres).rank <= 2
    assert hom_count(pres, 2) == 2
    assert hom_count(pres, 3) == 12


def test_meridians_are_reported(base):
    complex_ = build_complex(base)
    result = cell_presentation(complex_, complex_.marked_face_ids())
    assert set(result.meridians) == {'A[1]', 'B[1]'}
    assert all(result.meridians.values()), "Punctured pole faces should leave a nontrivial loop"
    assert cell_presentation(complex_).meridians == {}


def test_puncturing_drops_at_most_one_relator(base):
    complex_ = build_complex(base)
    first, second = complex_.marked_face_ids()
    steps = [cell_presentation(complex_, punctured).presentation for punctured in ([], [first], [first, second])]
    for closed, opened in zip(steps, steps[1:]):
        assert opened.rank == closed.rank, "Puncturing adds no generators"
        assert len(closed.relators) - 1 <= len(opened.relators) <= len(closed.relators)


def test_only_marked_faces_can_be_punctured(base):
    complex_ = build_complex(base)
    marked = set(complex_.marked_face_ids())
    plain = next(face.id for face in complex_.faces if face.id not in marked)
    with pytest.raises(ValidationError) as excinfo:
        cell_presentation(complex_, [plain])
    assert "carry no marked point" in str(excinfo.value)


def test_closed_base_is_simply_connected(base):
    assert todd_coxeter(cell_presentation(build_complex(base)).presentation).order == 1


def test_double_cover_has_order_three(cyclic_lift):
    assert todd_coxeter(cell_presentation(build_complex(cyclic_lift(2))).presentation).order == 3


def test_irregular_cover_is_simply_connected(irregular_lift):
    pres = cell_presentation(build_complex(irregular_lift)).presentation
    assert todd_coxeter(pres).order == 1
    with pytest.raises(MultiComponentDomain):
        dual_presentation(irregular_lift)


@pytest.mark.parametrize("n, order, abelian", [(2, 3, "[3]"), (3, 8, "[2, 2]"), (4, 24, "[3]"), (5, 120, "[]")])
def test_dual_presentation_groups(cyclic_lift, n, order, abelian):
    pres = dual_presentation(cyclic_lift(n))
    assert pres.rank == n
    assert len(pres.relators) == 2 * n, "One relator per triplet"
    assert todd_coxeter(pres).order == order
    assert str(abelianization(pres)) == abelian


def test_dual_presentation_of_the_sixfold_cover_is_infinite(cyclic_lift):
    pres = dual_presentation(cyclic_lift(6))
    result = todd_coxeter(pres)
    assert not result.finite, "The default coset bound should be exceeded"
    assert str(result) == f"Exceeded({MAX_COSETS})"
    assert str(abelianization(pres)) == "[0, 0]"


@pytest.mark.parametrize("n", range(2, 13))
def test_cyclic_dual_is_sieradski(cyclic_lift, n):
    pres = dual_presentation(cyclic_lift(n))
    assert pres.name == f"banchoff_n{n}_dual"
    assert match_sieradski(pres) == n


def test_locally_cyclic_dual_relators(fan):
    diagram = lift(fan, rep_from_texts(fan, {'m': '(1 2 3 4)', 'c': '(1 2)'}))
    pres = dual_presentation(diagram)
    assert pres.generators == tuple(f"beta[1.{i}]#" for i in range(1, 5))
    expected = {(1, 1, -4), (2, 3, -1), (3, 4, -2), (4, 2, -3)}
    assert {canonical_relator(r) for r in pres.distinct().relators} == {canonical_relator(r) for r in expected}
    assert len(pres.distinct().relators) == 4
    assert todd_coxeter(pres).order == 24
    assert str(abelianization(pres)) != str(abelianization(dual_presentation(lift(fan, cyclic_rep(fan, 4))))), \
        "Z3 x| Z8 and SL2(Z3) have the same order but different abelianizations"


def test_cell_and_dual_agree(cyclic_lift):
    diagram = cyclic_lift(3)
    cell = cell_presentation(build_complex(diagram)).presentation
    dual = dual_presentation(diagram)
    assert todd_coxeter(cell).order == todd_coxeter(dual).order == 8
    assert str(abelianization(cell)) == str(abelianization(dual))


def test_tree_choice_does_not_change_the_group(cyclic_lift):
    complex_ = build_complex(cyclic_lift(3))
    bfs = cell_presentation(complex_, tree='bfs')
    dfs = cell_presentation(complex_, tree='dfs')
    assert len(bfs.tree) == len(dfs.tree) == 5
    assert bfs.presentation.rank == dfs.presentation.rank
    assert todd_coxeter(bfs.presentation).order == todd_coxeter(dfs.presentation).order
    assert str(abelianization(bfs.presentation)) == str(abelianization(dfs.presentation))


def test_unknown_tree_strategy(base):
    with pytest.raises(ValueError):
        spanning_tree(build_complex(base), 'kruskal')


def test_dual_fingerprint_matches_sieradski(cyclic_lift):
    assert fingerprint(dual_presentation(cyclic_lift(3)), degrees=(2, 3)) == fingerprint(sieradski(3), degrees=(2, 3))
