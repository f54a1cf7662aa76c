"""Exact actions on tensor powers of the defining representation.

The space with parameters (n, k) has basis indexed by tuples in {1..n}^k; the
half variant pins a hidden extra slot to the last basis vector and is acted on
by size-(k+1) half diagrams and by rook elements of size n-1.

Diagrams act on the right, rook elements on the left.  Diagram matrices are
stored row-convention (row = input index), which makes the diagram map
multiplicative; rook matrices are column-convention.  Since the rook
generators are symmetric matrices, the two actions commute as plain matrix
products.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product

from .diagram import AlgebraElement, PartitionDiagram, is_half
from .formal import FormalSum
from .linalg import ExactMatrix, commutant_dimension, sparse_rank_of_vectors
from .rook import RookElement, embed, enumerate_rook, generator
from .scalars import XiPoly

_DIM_GUARD = 729


class TensorSpace:
    """Basis bookkeeping for the k-fold tensor power of an n-dim space."""

    def __init__(self, n: int, k: int, half: bool = False):
        if n < 1 or k < 1:
            raise ValueError("n and k must be positive")
        if n**k > _DIM_GUARD:
            raise ValueError(f"dimension n^k = {n**k} exceeds the guard {_DIM_GUARD}")
        self.n = n
        self.k = k
        self.half = half
        self.basis = list(product(range(1, n + 1), repeat=k))
        self.index = {t: i for i, t in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def diagram_size(self) -> int:
        return self.k + 1 if self.half else self.k

    def __repr__(self):
        tag = "+1/2" if self.half else ""
        return f"TensorSpace(n={self.n}, k={self.k}{tag})"


def _check_diagram(d: PartitionDiagram, space: TensorSpace):
    if d.size != space.diagram_size():
        raise ValueError(f"diagram size {d.size} does not fit {space!r}")
    if space.half and not is_half(d):
        raise ValueError("half space needs diagrams joining the last column")


def _entries_from_assignments(d, space, injective: bool) -> dict:
    """Matrix entries of a diagram action from block-value assignments.

    Each nonzero entry corresponds to one assignment of values to blocks
    (all assignments for the diagram basis, injective ones for the orbit
    basis); on half spaces the block holding the hidden slot is pinned to n.
    """
    n, k = space.n, space.k
    blocks = d.blocks
    pinned = None
    if space.half:
        pinned = next(i for i, b in enumerate(blocks) if (k + 1) in b)
    free = [i for i in range(len(blocks)) if i != pinned]
    entries = {}
    if injective:
        pool = range(1, n + 1)
        choices = permutations([v for v in pool if pinned is None or v != n], len(free))
    else:
        choices = product(range(1, n + 1), repeat=len(free))
    for values in choices:
        assign = dict(zip(free, values))
        if pinned is not None:
            assign[pinned] = n
        value_of = {}
        for b_idx, b in enumerate(blocks):
            for v in b:
                value_of[v] = assign[b_idx]
        top = tuple(value_of[j] for j in range(1, k + 1))
        bottom = tuple(value_of[-j] for j in range(1, k + 1))
        entries[(space.index[top], space.index[bottom])] = Fraction(1)
    return entries


def phi_diagram(d: PartitionDiagram, space: TensorSpace) -> ExactMatrix:
    """Right action of a diagram-basis element (row convention)."""
    _check_diagram(d, space)
    return ExactMatrix.from_entries(
        space.dim, space.dim, _entries_from_assignments(d, space, injective=False)
    )


def phi_orbit(d: PartitionDiagram, space: TensorSpace) -> ExactMatrix:
    """Right action of an orbit-basis element: the strict-pattern matrix.

    Zero whenever the diagram has more than n blocks.
    """
    _check_diagram(d, space)
    return ExactMatrix.from_entries(
        space.dim, space.dim, _entries_from_assignments(d, space, injective=True)
    )


def _orbit_entry_dict(d: PartitionDiagram, space: TensorSpace) -> dict:
    _check_diagram(d, space)
    return _entries_from_assignments(d, space, injective=True)


def phi_element(a: AlgebraElement, space: TensorSpace) -> ExactMatrix:
    """Linear extension of the diagram action; xi coefficients evaluate at n."""
    single = phi_orbit if a.basis == "orbit" else phi_diagram
    out = ExactMatrix.zeros(space.dim, space.dim)
    for d, coeff in a.sum.items():
        if isinstance(coeff, XiPoly):
            coeff = coeff.subs(space.n)
        out = out + single(d, space).scaled(coeff)
    return out


def psi_rook(rho: RookElement, space: TensorSpace) -> ExactMatrix:
    """Diagonal left action of a rook element (column convention).

    On a half space, rho must have size n-1 and is embedded fixing the last
    basis vector.
    """
    if space.half:
        if rho.n != space.n - 1:
            raise ValueError(f"half space needs rook elements of size {space.n - 1}")
        rho = embed(rho, space.n)
    elif rho.n != space.n:
        raise ValueError("size mismatch")
    entries = {}
    for idx, tup in enumerate(space.basis):
        images = tuple(rho.image(i) for i in tup)
        if all(images):
            entries[(space.index[images], idx)] = Fraction(1)
    return ExactMatrix.from_entries(space.dim, space.dim, entries)


def psi_element(x: FormalSum, space: TensorSpace) -> ExactMatrix:
    out = ExactMatrix.zeros(space.dim, space.dim)
    for rho, coeff in x.items():
        out = out + psi_rook(rho, space).scaled(coeff)
    return out


def _rook_generators(n: int) -> list[RookElement]:
    return [generator("s", i, n) for i in range(1, n)] + [generator("P", 1, n)]


def schur_weyl_report(n: int, k: int, half: bool = False) -> dict:
    """Kernel, image and commutant bookkeeping for the two commuting actions.

    Checks that (a) the kernel of the diagram action, over the orbit basis, is
    spanned by the orbit elements with more than n blocks, (b) the image
    dimension equals the commutant dimension of the rook action, and (c)
    symmetrically, the rook image equals the commutant of the diagram action.
    """
    from .diagram import enumerate_monoid

    space = TensorSpace(n, k, half)
    diagrams = enumerate_monoid("I_half" if half else "I", k)
    rook_n = n - 1 if half else n

    rows = []
    expected_kernel = 0
    for d in diagrams:
        if d.n_blocks() > n:
            expected_kernel += 1
        rows.append(_orbit_entry_dict(d, space))
    flat = [
        {i * space.dim + j: v for (i, j), v in row.items()} for row in rows
    ]
    image_dim = sparse_rank_of_vectors(flat)
    kernel_dim = len(diagrams) - image_dim

    gens = [psi_rook(g, space) for g in _rook_generators(rook_n)]
    commutant_dim = commutant_dimension(gens)

    rook_elements = enumerate_rook(rook_n)
    psi_flat = []
    for rho in rook_elements:
        mat = psi_rook(rho, space)
        psi_flat.append(
            {
                i * space.dim + j: v
                for i, row in enumerate(mat.data)
                for j, v in enumerate(row)
                if v
            }
        )
    psi_image_dim = sparse_rank_of_vectors(psi_flat)
    phi_gens = [phi_diagram(d, space) for d in diagrams]
    phi_commutant_dim = commutant_dimension(phi_gens)

    ok = (
        kernel_dim == expected_kernel
        and image_dim == commutant_dim
        and psi_image_dim == phi_commutant_dim
    )
    return {
        "n": n,
        "k": k,
        "half": half,
        "kernel_dim": kernel_dim,
        "expected_kernel_dim": expected_kernel,
        "image_dim": image_dim,
        "commutant_dim": commutant_dim,
        "psi_image_dim": psi_image_dim,
        "phi_commutant_dim": phi_commutant_dim,
        "ok": ok,
    }
