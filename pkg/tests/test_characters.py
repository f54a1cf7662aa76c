import random

import pytest

from rookpart.characters import (
    check_frobenius,
    chi_star,
    chi_sym,
    cycle_type,
    kronecker_with_defining,
    mod_induce,
    mod_restrict,
    tensor_multiplicities,
)
from rookpart.combinat import f_lambda, partitions_upto
from rookpart.rook import RookElement, enumerate_rook, generator, rook_mul
from rookpart.seminormal import RookIrrep
from rookpart.tensor import TensorSpace, psi_rook


def test_cycle_type():
    assert cycle_type((2, 3, 1)) == (3,)
    assert cycle_type((1, 2, 3)) == (1, 1, 1)
    assert cycle_type((2, 1, 3)) == (2, 1)


def test_chi_sym_examples():
    assert chi_sym((1, 1), generator("s", 1, 2)) == -1
    assert chi_sym((2, 1), RookElement(3, (2, 3, 1))) == -1
    for lam in partitions_upto(4):
        if lam:
            assert chi_sym(lam, RookElement.identity(sum(lam))) == f_lambda(lam)


def test_chi_sym_needs_full_permutation():
    with pytest.raises(ValueError):
        chi_sym((2,), RookElement(2, (1, 0)))


def test_chi_star_trivial_and_defining():
    for n in range(1, 5):
        for sigma in enumerate_rook(n):
            assert chi_star((), sigma) == 1
            assert chi_star((1,), sigma) == len(sigma.fixed_points())


def test_chi_star_at_identity_is_dimension():
    for n in range(1, 5):
        ident = RookElement.identity(n)
        for lam in partitions_upto(n):
            assert chi_star(lam, ident) == RookIrrep(lam, n).dim


def test_chi_star_is_a_trace():
    # oracle: the literal trace of the seminormal module
    for n in range(1, 4):
        for lam in partitions_upto(n):
            irrep = RookIrrep(lam, n)
            for sigma in enumerate_rook(n):
                assert chi_star(lam, sigma) == irrep.rep_rook(sigma).trace()


def test_chi_star_constant_on_conjugacy_classes():
    rng = random.Random(3)
    for n in (3, 4):
        perms = [x for x in enumerate_rook(n) if x.is_permutation()]
        pool = enumerate_rook(n)
        for _ in range(30):
            sigma = rng.choice(pool)
            tau = rng.choice(perms)
            conj = rook_mul(rook_mul(tau, sigma), tau.transpose())
            for lam in partitions_upto(n):
                assert chi_star(lam, sigma) == chi_star(lam, conj)


def test_regular_representation_trace():
    for n in range(1, 4):
        ident = RookElement.identity(n)
        assert sum(chi_star(lam, ident) ** 2 for lam in partitions_upto(n)) == len(
            enumerate_rook(n)
        )


def test_kronecker_examples():
    assert kronecker_with_defining((), 3) == {(1,): 1}
    assert kronecker_with_defining((1,), 3) == {(1,): 1, (1, 1): 1, (2,): 1}
    assert kronecker_with_defining((2,), 3) == {
        (1, 1): 1,
        (2,): 1,
        (2, 1): 1,
        (3,): 1,
    }
    # two removable corners put the shape back twice
    assert kronecker_with_defining((2, 1), 4)[(2, 1)] == 2


def test_kronecker_full_shape_has_no_additions():
    out = kronecker_with_defining((2, 1), 3)
    assert all(sum(mu) == 3 for mu in out)


def test_mod_induce_restrict_examples():
    assert mod_induce({(): 1}, 3) == {(1,): 1}
    assert mod_restrict({(1,): 1}, 3) == {(): 1}
    with pytest.raises(ValueError):
        mod_induce({(3,): 1}, 3)


def test_tensor_identity_pointwise():
    # modified induction after the branching restriction equals tensoring
    # with the defining representation, shape by shape
    from rookpart.characters import branching_restrict

    n = 3
    for lam in partitions_upto(n):
        via_rules = mod_induce(branching_restrict({lam: 1}, n), n)
        kron = kronecker_with_defining(lam, n, verify=False)
        assert via_rules == kron


def test_iterated_induction_matches_tensor_power():
    # iterating (induce o restrict) from the trivial module reproduces the
    # decomposition of the k-fold tensor power of the defining module
    from rookpart.characters import branching_restrict

    n = 3
    for k in range(4):
        mult = {(): 1}
        for _ in range(k):
            mult = mod_induce(branching_restrict(mult, n), n)
        expected = tensor_multiplicities(n, k) if k else {(): 1}
        assert mult == expected


def test_check_frobenius_examples():
    assert check_frobenius((2,), (1,), 3)
    assert check_frobenius((1,), (1,), 3)
    assert check_frobenius((), (), 3)
    for lam in partitions_upto(3):
        for mu in partitions_upto(2):
            assert check_frobenius(lam, mu, 3)


def test_tensor_multiplicities_against_traces():
    # sanity: the solved multiplicities reproduce the tensor character
    n, k = 3, 3
    mult = tensor_multiplicities(n, k)
    space = TensorSpace(n, k)
    for sigma in enumerate_rook(n):
        lhs = psi_rook(sigma, space).trace()
        rhs = sum(m * chi_star(lam, sigma) for lam, m in mult.items())
        assert lhs == rhs


def test_kronecker_failure_reports_witness():
    # force a failure by lying about the multiset
    from rookpart import characters

    good = characters.defining_product_multiset((1,), 2)
    bad = dict(good)
    bad[(2,)] += 1
    ident = RookElement.identity(2)
    lhs = chi_star((1,), ident) * chi_star((1,), ident)
    rhs = sum(m * chi_star(mu, ident) for mu, m in bad.items())
    assert lhs != rhs


def test_pairing_rows_distinguish_shapes():
    # summing chi*_lam(sigma) chi*_mu(sigma^T) over the monoid gives a pairing
    # whose rows separate the shapes
    for n in (2, 3):
        shapes = partitions_upto(n)
        elements = enumerate_rook(n)
        gram = {
            lam: tuple(
                sum(
                    chi_star(lam, sigma) * chi_star(mu, sigma.transpose())
                    for sigma in elements
                )
                for mu in shapes
            )
            for lam in shapes
        }
        rows = list(gram.values())
        assert len(set(rows)) == len(rows)
