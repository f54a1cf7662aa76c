from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from rookpart.diagram import enumerate_monoid
from rookpart.linalg import (
    ExactMatrix,
    commutant_dimension,
    mat_mul,
    nullspace,
    rank,
    simultaneous_eigenspace,
    solve_unique,
)
from rookpart.rook import generator
from rookpart.seminormal import RookIrrep
from rookpart.tensor import TensorSpace, psi_rook

small_entries = st.integers(min_value=-4, max_value=4).map(Fraction)


def square_matrices(d):
    return st.lists(
        st.lists(small_entries, min_size=d, max_size=d), min_size=d, max_size=d
    ).map(ExactMatrix)


def test_mat_mul_identity_and_involution():
    ident = ExactMatrix.identity(2)
    assert mat_mul(ident, ident) == ident
    flip = ExactMatrix([[0, 1], [1, 0]])
    assert mat_mul(flip, flip) == ident


def test_mat_mul_seminormal_involution():
    # the matrix of the first transposition on the two-box module squares to 1
    irrep = RookIrrep((2,), 2)
    m = irrep.token_matrix(("s", 1))
    assert m * m == ExactMatrix.identity(irrep.dim)


def test_mat_mul_dimension_mismatch():
    with pytest.raises(ValueError):
        mat_mul(ExactMatrix([[1, 2]]), ExactMatrix([[1, 2]]))


def test_nullspace_trivial_cases():
    zero = ExactMatrix([[0, 0], [0, 0]])
    assert len(nullspace(zero)) == 2
    assert nullspace(ExactMatrix.identity(2)) == []


def test_nullspace_of_killed_orbit_elements():
    # at n=2 the orbit elements with three blocks act as zero on the 3-fold
    # tensor power, so the restricted action matrix annihilates everything
    from rookpart.tensor import phi_orbit

    space = TensorSpace(2, 3)
    killed = [d for d in enumerate_monoid("I", 3) if d.n_blocks() > 2]
    rows = []
    for d in killed:
        mat = phi_orbit(d, space)
        rows.append([v for row in mat.data for v in row])
    assert all(not any(row) for row in rows)
    m = ExactMatrix([[Fraction(0)] * len(killed)] * 4)  # any map factoring through 0
    assert len(nullspace(ExactMatrix(rows).transpose())) == len(killed)
    assert rank(ExactMatrix(rows)) == 0
    assert m.rows == 4


@given(st.lists(st.lists(small_entries, min_size=3, max_size=3), min_size=2, max_size=4))
def test_nullspace_vectors_are_in_the_kernel(rows):
    m = ExactMatrix(rows)
    basis = nullspace(m)
    assert len(basis) == m.cols - rank(m)
    for v in basis:
        assert all(x == 0 for x in m.apply(v))
        lead = next(x for x in v if x)
        assert lead == 1


def test_solve_unique():
    a = ExactMatrix([[1, 1], [1, -1], [2, 0]])
    assert solve_unique(a, [3, 1, 4]) == (Fraction(2), Fraction(1))
    with pytest.raises(ValueError):
        solve_unique(a, [3, 1, 5])
    with pytest.raises(ValueError):
        solve_unique(ExactMatrix([[1, 1]]), [1])


def test_commutant_of_identity_is_everything():
    assert commutant_dimension([ExactMatrix.identity(3)]) == 9


def test_commutant_of_full_matrix_algebra_is_scalars():
    basis = [
        ExactMatrix.from_entries(2, 2, {(i, j): 1}) for i in range(2) for j in range(2)
    ]
    assert commutant_dimension(basis) == 1


def test_commutant_of_rook_action_on_two_tensors():
    space = TensorSpace(2, 2)
    gens = [psi_rook(generator("s", 1, 2), space), psi_rook(generator("P", 1, 2), space)]
    assert commutant_dimension(gens) == 3


@settings(max_examples=25, deadline=None)
@given(square_matrices(3), square_matrices(3), square_matrices(3))
def test_commutant_dimension_is_conjugation_invariant(a, b, p):
    # make p invertible by shifting the diagonal until the rank is full
    d = 3
    shift = 0
    while rank(p) < d:
        shift += 1
        p = p + ExactMatrix.identity(d).scaled(shift)
    # inverse via solving p x = e_i
    cols = [solve_unique(p, [Fraction(int(i == j)) for i in range(d)]) for j in range(d)]
    p_inv = ExactMatrix(list(zip(*cols)))
    assert p * p_inv == ExactMatrix.identity(d)
    before = commutant_dimension([a, b])
    after = commutant_dimension([p * a * p_inv, p * b * p_inv])
    assert before == after


def test_simultaneous_eigenspace_identity_cases():
    ident = ExactMatrix.identity(3)
    assert len(simultaneous_eigenspace([ident], [1])) == 3
    assert simultaneous_eigenspace([ident], [0]) == []


def test_simultaneous_eigenspace_on_commuting_family():
    from rookpart.jm import build_m, build_m_tilde, predicted_eigenvalues
    from rookpart.bratteli import ihat, HALF
    from rookpart.tensor import phi_element

    # the branching path ((), (1), (1), (2)) picks a one-dimensional joint
    # eigenspace inside the 2x2 tensor square
    space = TensorSpace(2, 2)
    levels = [HALF, Fraction(1), Fraction(3, 2), Fraction(2)]
    ops = []
    for y in levels:
        ops.append(phi_element(build_m(y, 2), space))
        ops.append(phi_element(build_m_tilde(y, 2), space))
    graph = ihat(2)
    path = next(
        p
        for p in graph.enumerate_paths((HALF, ()), (Fraction(2), (2,)))
        if p.shapes == ((), (1,), (1,), (2,))
    )
    values = [v for pair in predicted_eigenvalues(path) for v in pair]
    basis = simultaneous_eigenspace(ops, values)
    assert len(basis) == 1


def test_simultaneous_eigenspace_dimensions_exhaust():
    from rookpart.jm import gt_decompose

    report = gt_decompose(2, 2)
    assert report["ok"]
    assert sum(e["dimension"] for e in report["entries"]) == 4
