from fractions import Fraction

import pytest

from rookpart.combinat import standard_tableaux
from rookpart.diagram import (
    AlgebraElement,
    PartitionDiagram,
    diagram_product,
    enumerate_monoid,
    from_orbit,
)
from rookpart.linalg import ExactMatrix
from rookpart.rook import RookElement, generator
from rookpart.tensor import (
    TensorSpace,
    phi_diagram,
    phi_element,
    phi_orbit,
    psi_rook,
    schur_weyl_report,
)


def D(text, half=False):
    return PartitionDiagram.parse(text, half=half)


def test_phi_identity_diagram():
    space = TensorSpace(3, 1)
    assert phi_diagram(D("[[1,-1]]"), space) == ExactMatrix.identity(3)


def test_phi_swap_is_the_flip():
    space = TensorSpace(2, 2)
    mat = phi_diagram(D("[[1,-2],[2,-1]]"), space)
    idx = space.index
    for i in (1, 2):
        for j in (1, 2):
            assert mat[idx[(i, j)], idx[(j, i)]] == 1


def test_phi_full_block_projects_onto_diagonal():
    space = TensorSpace(3, 2)
    mat = phi_diagram(D("[[1,2,-1,-2]]"), space)
    for row, (i, j) in enumerate(space.basis):
        support = [c for c in range(space.dim) if mat[row, c]]
        if i == j:
            assert support == [space.index[(i, i)]]
        else:
            assert support == []


def test_phi_orbit_examples():
    space = TensorSpace(2, 1)
    assert phi_orbit(D("[[1,-1]]"), space) == ExactMatrix.identity(2)
    space2 = TensorSpace(2, 2)
    mat = phi_orbit(D("[[1,-2],[2,-1]]"), space2)
    idx = space2.index
    assert mat[idx[(1, 2)], idx[(2, 1)]] == 1
    assert mat[idx[(1, 1)], idx[(1, 1)]] == 0  # equal letters are excluded


def test_phi_orbit_kills_more_blocks_than_letters():
    space = TensorSpace(2, 2)
    assert phi_orbit(D("[[1],[2],[-1],[-2]]"), space) == ExactMatrix.zeros(4, 4)


def test_phi_orbit_matches_diagram_expansion():
    for n in (2, 3):
        space = TensorSpace(n, 2)
        for d in enumerate_monoid("A", 2):
            x = AlgebraElement.from_diagram(d, basis="orbit")
            assert phi_orbit(d, space) == phi_element(from_orbit(x), space)


def test_phi_is_multiplicative_on_a2():
    for n in (2, 3):
        space = TensorSpace(n, 2)
        diagrams = enumerate_monoid("A", 2)
        for d1 in diagrams:
            for d2 in diagrams:
                prod = diagram_product(
                    AlgebraElement.from_diagram(d1), AlgebraElement.from_diagram(d2)
                )
                assert phi_diagram(d1, space) * phi_diagram(d2, space) == phi_element(
                    prod, space
                )


def test_psi_examples():
    space = TensorSpace(2, 2)
    assert psi_rook(RookElement.identity(2), space) == ExactMatrix.identity(4)
    p1 = psi_rook(generator("P", 1, 2), space)
    assert p1[space.index[(1, 2)], space.index[(1, 2)]] == 0
    assert all(not p1[r, space.index[(1, 2)]] for r in range(4))
    flip = psi_rook(generator("s", 1, 2), TensorSpace(2, 1))
    assert flip == ExactMatrix([[0, 1], [1, 0]])


def test_psi_is_multiplicative():
    from rookpart.rook import enumerate_rook, rook_mul

    space = TensorSpace(2, 2)
    pool = enumerate_rook(2)
    for a in pool:
        for b in pool:
            assert psi_rook(a, space) * psi_rook(b, space) == psi_rook(
                rook_mul(a, b), space
            )


def test_actions_commute():
    n = 3
    for k in (1, 2, 3):
        space = TensorSpace(n, k)
        gens = [psi_rook(g, space) for g in (generator("s", 1, n), generator("s", 2, n), generator("P", 1, n))]
        for d in enumerate_monoid("I", k):
            mat = phi_diagram(d, space)
            for g in gens:
                assert mat * g == g * mat


def test_half_space_constraints():
    space = TensorSpace(3, 2, half=True)
    with pytest.raises(ValueError):
        phi_diagram(D("[[1,-1],[2,-2]]"), space)  # wrong size
    with pytest.raises(ValueError):
        phi_diagram(D("[[1,-3],[2,-2],[3,-1]]"), space)  # not a half diagram
    with pytest.raises(ValueError):
        psi_rook(RookElement.identity(3), space)  # rook side must shrink


def test_half_action_pins_hidden_slot():
    # the embedded identity-with-anchor acts as the identity
    space = TensorSpace(2, 1, half=True)
    ident = phi_diagram(PartitionDiagram.identity(2, half=True), space)
    assert ident == ExactMatrix.identity(2)
    # the all-in-one block fixes only the basis vector with the hidden letter
    mat = phi_diagram(D("[[1,2,-1,-2]]", half=True), space)
    assert mat.diagonal() == (Fraction(0), Fraction(1))


def test_bimodule_dimension_bookkeeping():
    n = 3
    from rookpart.bratteli import HALF, ihat

    for k in (1, 2, 3):
        graph = ihat(k)
        total = 0
        for mu in graph.vertices[graph.level_index(Fraction(k))]:
            mult = graph.count_paths((HALF, ()), (Fraction(k), mu))
            total += len(standard_tableaux(mu, n)) * mult
        assert total == n**k


def test_schur_weyl_reports():
    expected = {
        (2, 2, False): (0, 3),
        (3, 2, False): (0, 3),
        (2, 3, False): (6, 19),
        (3, 3, False): (0, 25),
        (2, 1, True): (0, 2),
        (3, 2, True): (0, 12),
    }
    for (n, k, half), (kernel, image) in expected.items():
        report = schur_weyl_report(n, k, half)
        assert report["ok"], report
        assert report["kernel_dim"] == kernel
        assert report["image_dim"] == image
        assert report["commutant_dim"] == image


def test_dimension_guard():
    with pytest.raises(ValueError):
        TensorSpace(3, 7)
