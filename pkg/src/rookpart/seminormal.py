"""Irreducible seminormal modules of the rook monoid algebra.

The module attached to a shape lam with at most n boxes has a basis indexed by
n-standard tableaux of shape lam.  Basis vectors are ordered by their
branching path read from the top level down, so restriction to the subalgebra
fixing the last letter splits into contiguous blocks.
"""

from __future__ import annotations

from fractions import Fraction

from .combinat import (
    Partition,
    check_partition,
    content,
    corner_set,
    is_standard_tableau,
    shape_key,
    standard_tableaux,
    tableau_entries,
    tableau_shape,
)
from .formal import FormalSum
from .linalg import ExactMatrix
from .rook import RookElement, factor_to_word, jm_x, jm_x_tilde


def _position(tab, entry) -> tuple[int, int]:
    for r, row in enumerate(tab, start=1):
        for c, e in enumerate(row, start=1):
            if e == entry:
                return (r, c)
    raise KeyError(entry)


def _swap_adjacent(tab, i):
    """Exchange the letters i and i+1 wherever they appear."""
    swap = {i: i + 1, i + 1: i}
    return tuple(tuple(swap.get(e, e) for e in row) for row in tab)


def act_si(lam: Partition, n: int, i: int, tab) -> FormalSum:
    """Action of the adjacent transposition s_i on a basis tableau.

    Four cases, depending on which of i, i+1 occur in the tableau; when both
    occur the coefficient is the inverse axial distance a = 1/(ct(i+1)-ct(i))
    and the off-diagonal term (1+a) is dropped if the swap is not standard.
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"s_{i} out of range for n={n}")
    entries = tableau_entries(tab)
    has_i, has_j = i in entries, (i + 1) in entries
    if has_i != has_j:
        return FormalSum.term(_swap_adjacent(tab, i))
    if not has_i:
        return FormalSum.term(tab)
    a = Fraction(1, content(_position(tab, i + 1)) - content(_position(tab, i)))
    out = FormalSum.term(tab, a)
    swapped = _swap_adjacent(tab, i)
    if is_standard_tableau(swapped):
        out = out + FormalSum.term(swapped, 1 + a)
    return out


def act_p1(lam: Partition, n: int, tab) -> FormalSum:
    """P_1 keeps a basis tableau iff the letter 1 does not occur in it."""
    if 1 in tableau_entries(tab):
        return FormalSum.zero()
    return FormalSum.term(tab)


def _path_sort_key(tab, n: int):
    """Branching path of the tableau, read from level n-1 down to level 0."""
    keys = []
    for m in range(n - 1, -1, -1):
        shape = tuple(
            count for count in (sum(1 for e in row if e <= m) for row in tab) if count
        )
        keys.append(shape_key(shape))
    return tuple(keys)


class RookIrrep:
    """Seminormal module for a shape with at most n boxes.

    Generator matrices are cached at construction; matrices of arbitrary
    monoid elements are obtained through their factorization into the
    generators s_i, P_1 and memoized.
    """

    def __init__(self, lam, n: int):
        lam = check_partition(lam)
        if sum(lam) > n:
            raise ValueError(f"shape {lam} does not fit in n={n}")
        self.lam = lam
        self.n = n
        self.basis = tuple(
            sorted(standard_tableaux(lam, n), key=lambda t: _path_sort_key(t, n))
        )
        self.index = {t: i for i, t in enumerate(self.basis)}
        self._tokens = {}
        for i in range(1, n):
            self._tokens[("s", i)] = self._matrix_of(lambda t, i=i: act_si(lam, n, i, t))
        self._tokens[("P1", 0)] = self._matrix_of(lambda t: act_p1(lam, n, t))
        self._elements: dict[RookElement, ExactMatrix] = {}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _matrix_of(self, act) -> ExactMatrix:
        cols = []
        for t in self.basis:
            image = act(t)
            col = [Fraction(0)] * self.dim
            for key, coeff in image.items():
                col[self.index[key]] = coeff
            cols.append(col)
        return ExactMatrix(list(zip(*cols)))

    def token_matrix(self, token) -> ExactMatrix:
        return self._tokens[token]

    def rep_rook(self, rho: RookElement) -> ExactMatrix:
        if rho.n != self.n:
            raise ValueError("size mismatch")
        cached = self._elements.get(rho)
        if cached is not None:
            return cached
        mat = ExactMatrix.identity(self.dim)
        for token in factor_to_word(rho):
            mat = mat * self._tokens[token]
        self._elements[rho] = mat
        return mat

    def rep(self, x) -> ExactMatrix:
        """Matrix of a monoid element or of a FormalSum of monoid elements."""
        if isinstance(x, RookElement):
            return self.rep_rook(x)
        out = ExactMatrix.zeros(self.dim, self.dim)
        for rho, coeff in x.items():
            out = out + self.rep_rook(rho).scaled(coeff)
        return out


def verify_jm_action(lam, n: int) -> dict:
    """Check that the commuting family acts diagonally with the stated spectrum.

    X_i reads off membership of i in the tableau, and the content family reads
    ct(box of i).  Returns a report with one row per (tableau, i); any
    mismatch lands in report["mismatches"].
    """
    irrep = RookIrrep(lam, n)
    rows = []
    mismatches = []
    for i in range(1, n + 1):
        mat_x = irrep.rep(jm_x(i, n))
        mat_t = irrep.rep(jm_x_tilde(i, n))
        if not mat_x.is_diagonal():
            mismatches.append(f"X_{i} not diagonal on {lam}")
        if not mat_t.is_diagonal():
            mismatches.append(f"X~_{i} not diagonal on {lam}")
        for j, tab in enumerate(irrep.basis):
            present = i in tableau_entries(tab)
            want_x = Fraction(1 if present else 0)
            want_t = Fraction(content(_position(tab, i))) if present else Fraction(0)
            got_x, got_t = mat_x[j, j], mat_t[j, j]
            rows.append(
                {
                    "lambda": lam,
                    "tableau": tab,
                    "i": i,
                    "x_eig": got_x,
                    "xtilde_eig": got_t,
                }
            )
            if got_x != want_x or got_t != want_t:
                mismatches.append(
                    f"{lam} {tab} i={i}: got ({got_x},{got_t}), want ({want_x},{want_t})"
                )
    return {"ok": not mismatches, "rows": rows, "mismatches": mismatches}


def _strip_last(tab, n):
    return tuple(row_ for row_ in (tuple(e for e in row if e != n) for row in tab) if row_)


def restriction_multiplicities(lam, n: int) -> list[Partition]:
    """Decompose the restriction to the subalgebra fixing the last letter.

    Splits the basis on whether n occurs, checks the generator matrices are
    block diagonal and that each block matches the smaller seminormal module
    under tableau relabelling, then returns the sorted multiset of shapes.
    """
    lam = check_partition(lam)
    if n == 1:
        return [s for s in corner_set(lam, "minus_eq") if sum(s) <= 0]
    irrep = RookIrrep(lam, n)
    groups: dict = {}
    for idx, tab in enumerate(irrep.basis):
        if n in tableau_entries(tab):
            key = tableau_shape(_strip_last(tab, n))
        else:
            key = lam
        groups.setdefault(key, []).append(idx)

    tokens = [("s", i) for i in range(1, n - 1)] + [("P1", 0)]
    for token in tokens:
        mat = irrep.token_matrix(token)
        member = {}
        for key, idxs in groups.items():
            for i in idxs:
                member[i] = key
        for r in range(irrep.dim):
            for c in range(irrep.dim):
                if mat[r, c] and member[r] != member[c]:
                    raise RuntimeError(
                        f"restriction of {lam} at n={n} is not block diagonal"
                    )

    for shape, idxs in sorted(groups.items(), key=lambda kv: shape_key(kv[0])):
        small = RookIrrep(shape, n - 1)
        if len(idxs) != small.dim:
            raise RuntimeError(f"block size mismatch for {shape}")
        relabel = [small.index[_strip_last(irrep.basis[i], n)] for i in idxs]
        for token in tokens:
            big = irrep.token_matrix(token)
            small_mat = small.token_matrix(token)
            for a, ia in enumerate(idxs):
                for b, ib in enumerate(idxs):
                    if big[ia, ib] != small_mat[relabel[a], relabel[b]]:
                        raise RuntimeError(
                            f"restriction block {shape} of {lam} differs from the "
                            f"seminormal module at n={n - 1}"
                        )

    expected = corner_set(lam, "minus_eq")
    got = sorted(groups, key=shape_key)
    expected = sorted((s for s in expected if sum(s) <= n - 1), key=shape_key)
    if got != expected:
        raise RuntimeError(f"restriction of {lam}: got {got}, expected {expected}")
    return got
