"""Commuting element families of the totally propagating algebras.

For every half-integer level the module builds the central sums Z and Z~ in
the orbit basis, lifts them along the tower, and forms the differences M and
M~ whose joint spectrum labels the canonical basis of each irreducible by a
branching-graph path.

Tower lifting is the unital embedding that adds the block {k+1, (k+1)'} to
every diagram-basis term (followed by the plain subalgebra inclusion at the
half-to-integer steps).  The orbit-basis block-adding map is also an algebra
embedding, but it is not unital: lifting along it collapses the differences
M_y (for instance M at level 3/2 would vanish identically), so the unital
embedding is the one that matches the spectrum on tensor space.
"""

from __future__ import annotations

from fractions import Fraction

from .bratteli import HALF, GraphPath, ihat
from .combinat import content_sum, set_partitions, standard_tableaux
from .diagram import (
    AlgebraElement,
    PartitionDiagram,
    build_dp,
    build_dpcd,
    build_dtilde,
    enumerate_monoid,
    from_orbit,
    orbit_product_tppa,
    to_orbit,
)
from .linalg import simultaneous_eigenspace
from .rook import kappa, kappa_tilde
from .tensor import TensorSpace, phi_element, psi_element

_CENTRALITY_GUARD = Fraction(7, 2)


def as_level(t) -> Fraction:
    t = Fraction(t)
    if t <= 0 or t % HALF != 0:
        raise ValueError(f"not a positive half-integer level: {t}")
    return t


def is_half_level(t) -> bool:
    return as_level(t).denominator == 2


def level_size(t) -> int:
    """Number of columns of the diagrams living at level t."""
    t = as_level(t)
    return int(t) if t.denominator == 1 else int(t + HALF)


def zero_element(t) -> AlgebraElement:
    t = as_level(t)
    if t == HALF:
        t = Fraction(1)
    return AlgebraElement.zero(level_size(t), "orbit", half=is_half_level(t))


def identity_element(t) -> AlgebraElement:
    t = as_level(t)
    if t == HALF:
        t = Fraction(1)
    return AlgebraElement.one(level_size(t), "orbit", half=is_half_level(t))


def build_z(t) -> AlgebraElement:
    """Z at level t: the block-diagonal orbit elements weighted by their
    number of blocks (shifted by one at half levels); Z at level 1/2 is 1."""
    t = as_level(t)
    if t == HALF:
        return identity_element(Fraction(1))
    if t.denominator == 1:
        k = int(t)
        terms = [(build_dp(p), Fraction(len(p))) for p in set_partitions(k)]
        return AlgebraElement(k, "orbit", terms)
    k = int(t - HALF)
    terms = []
    for p in set_partitions(k + 1):
        if len(p) >= 2:
            terms.append((build_dp(p).with_half(True), Fraction(len(p) - 1)))
    return AlgebraElement(k + 1, "orbit", terms, half=True)


def build_z_tilde(t) -> AlgebraElement:
    """Z~ at level t: crossed-pair orbit elements summed over unordered block
    pairs; zero at levels 1/2, 1 and 3/2.

    The unordered reading is forced by the operator identity with the rook
    center on tensor space; the ordered one would double it.
    """
    t = as_level(t)
    if t in (HALF, Fraction(1), Fraction(3, 2)):
        return zero_element(t)
    if t.denominator == 1:
        k = int(t)
        terms = []
        for p in set_partitions(k, min_blocks=2):
            for i in range(len(p)):
                for j in range(i + 1, len(p)):
                    terms.append((build_dpcd(p, p[i], p[j]), Fraction(1)))
        return AlgebraElement(k, "orbit", terms)
    k = int(t - HALF)
    terms = []
    for p in set_partitions(k + 1, min_blocks=3):
        anchor = next(b for b in p if (k + 1) in b)
        rest = [b for b in p if b != anchor]
        for i in range(len(rest)):
            for j in range(i + 1, len(rest)):
                terms.append((build_dtilde(p, rest[i], rest[j]), Fraction(1)))
    return AlgebraElement(k + 1, "orbit", terms, half=True)


def _add_slot(a: AlgebraElement) -> AlgebraElement:
    """Unital embedding into the next half level: add the block {k+1,(k+1)'}
    to every diagram-basis term."""
    if a.half:
        raise ValueError("element already sits at a half level")
    k = a.size
    dia = from_orbit(a) if a.basis == "orbit" else a

    def lift(d):
        return PartitionDiagram(k + 1, d.blocks + ((k + 1, -(k + 1)),), half=True)

    lifted = AlgebraElement(k + 1, "diagram", dia.sum.map_keys(lift), half=True)
    return to_orbit(lifted) if a.basis == "orbit" else lifted


def tower_lift(a: AlgebraElement, target) -> AlgebraElement:
    """Lift an element along the tower to the target level."""
    target = as_level(target)
    cur = a.level
    if cur > target:
        raise ValueError("cannot lift downward")
    while cur < target:
        if a.half:
            a = AlgebraElement(a.size, a.basis, a.sum.map_keys(lambda d: d.with_half(False)))
        else:
            a = _add_slot(a)
        cur += HALF
    return a


def build_m(y, t) -> AlgebraElement:
    """M at position y inside the level-t algebra: M_{1/2} = 1 and otherwise
    the difference of consecutive lifted Z's."""
    y, t = as_level(y), as_level(t)
    if y > t:
        raise ValueError("y exceeds the ambient level")
    if y == HALF:
        return identity_element(t)
    return tower_lift(build_z(y), t) - tower_lift(build_z(y - HALF), t)


def build_m_tilde(y, t) -> AlgebraElement:
    y, t = as_level(y), as_level(t)
    if y > t:
        raise ValueError("y exceeds the ambient level")
    if y == HALF:
        return zero_element(t)
    return tower_lift(build_z_tilde(y), t) - tower_lift(build_z_tilde(y - HALF), t)


def _levels_upto(t) -> list[Fraction]:
    t = as_level(t)
    out = []
    cur = HALF
    while cur <= t:
        out.append(cur)
        cur += HALF
    return out


def _diagram_basis_elements(t) -> list[PartitionDiagram]:
    t = as_level(t)
    if t == HALF:
        t = Fraction(1)
    if t.denominator == 1:
        return enumerate_monoid("I", int(t))
    return enumerate_monoid("I_half", int(t - HALF))


def verify_centrality(t) -> dict:
    """Check Z and Z~ commute with the whole diagram basis of the level-t
    algebra and that all M, M~ up to t commute pairwise."""
    t = as_level(t)
    if t > _CENTRALITY_GUARD:
        raise ValueError(f"centrality guard is {_CENTRALITY_GUARD}")
    failures = []
    z, zt = build_z(t), build_z_tilde(t)
    diagrams = _diagram_basis_elements(t)
    for g in diagrams:
        go = to_orbit(AlgebraElement.from_diagram(g))
        for name, elem in (("Z", z), ("Z~", zt)):
            left = orbit_product_tppa(go, elem)
            right = orbit_product_tppa(elem, go)
            if left != right:
                failures.append(f"{name} at level {t} does not commute with {g}")
    family = []
    for y in _levels_upto(t):
        family.append((f"M_{y}", build_m(y, t)))
        family.append((f"M~_{y}", build_m_tilde(y, t)))
    for i in range(len(family)):
        for j in range(i + 1, len(family)):
            (na, a), (nb, b) = family[i], family[j]
            if orbit_product_tppa(a, b) != orbit_product_tppa(b, a):
                failures.append(f"{na} and {nb} do not commute at level {t}")
    return {
        "level": str(t),
        "diagram_count": len(diagrams),
        "ok": not failures,
        "failures": failures,
    }


def verify_operator_identity(n: int, t) -> dict:
    """Match the level-t central sums with the rook central sums on tensor
    space: Z against kappa and Z~ against kappa~, with the rook size dropping
    by one at half levels."""
    t = as_level(t)
    if t.denominator == 1:
        k = int(t)
        if n < k:
            raise ValueError("need n >= k")
        space = TensorSpace(n, k)
        rook_n = n
    else:
        k = int(t - HALF)
        if n < k + 1:
            raise ValueError("need n >= k+1 at a half level")
        space = TensorSpace(n, k, half=True)
        rook_n = n - 1
    failures = []
    pairs = [
        ("Z", build_z(t), kappa(rook_n)),
        ("Z~", build_z_tilde(t), kappa_tilde(rook_n)),
    ]
    for name, elem, rook_elem in pairs:
        lhs = phi_element(elem, space)
        rhs = psi_element(rook_elem, space)
        if lhs != rhs:
            bad = [
                (i, j)
                for i in range(space.dim)
                for j in range(space.dim)
                if lhs[i, j] != rhs[i, j]
            ][:5]
            failures.append(f"{name} at level {t}, n={n}: first diffs {bad}")
    return {"level": str(t), "n": n, "ok": not failures, "failures": failures}


def predicted_eigenvalues(path: GraphPath) -> list[tuple[Fraction, Fraction]]:
    """Predicted (M, M~) eigenvalue pairs along a branching path.

    At each step the M value is the size difference and the M~ value is the
    content-sum difference of consecutive shapes.  The bottom of the tower is
    special: M at 1/2 is the identity, and M at level 1 is the zero element
    (both Z's there are the identity), so its value is 0.
    """
    out = []
    for idx, y in enumerate(path.levels):
        if y == HALF:
            out.append((Fraction(1), Fraction(0)))
        elif y == 1:
            out.append((Fraction(0), Fraction(0)))
        else:
            prev, cur = path.shapes[idx - 1], path.shapes[idx]
            out.append(
                (
                    Fraction(sum(cur) - sum(prev)),
                    Fraction(content_sum(cur) - content_sum(prev)),
                )
            )
    return out


def gt_decompose(t, n: int) -> dict:
    """Simultaneous eigenspaces of the lifted M family on tensor space.

    For each branching path to level t the predicted eigenvalue tuple must cut
    out a space of dimension equal to the matching rook irreducible, the
    eigenspaces must exhaust the tensor space, and the tuples must be pairwise
    distinct.
    """
    t = as_level(t)
    rook_n = n
    if t.denominator == 1:
        k = int(t)
        if n < k:
            raise ValueError("need n >= level")
        space = TensorSpace(n, k)
    else:
        k = int(t - HALF)
        if n < k + 1:
            raise ValueError("need n >= level rounded up")
        space = TensorSpace(n, k, half=True)
        rook_n = n - 1
    graph = ihat(t)
    levels = _levels_upto(t)
    ops = []
    for y in levels:
        ops.append(phi_element(build_m(y, t), space))
        ops.append(phi_element(build_m_tilde(y, t), space))

    entries = []
    failures = []
    total = 0
    seen_tuples = {}
    for mu in graph.vertices[graph.level_index(t)]:
        for path in graph.enumerate_paths((HALF, ()), (t, mu)):
            predicted = predicted_eigenvalues(path)
            flat = [v for pair in predicted for v in pair]
            basis = simultaneous_eigenspace(ops, flat)
            expected_dim = len(standard_tableaux(mu, rook_n))
            total += len(basis)
            key = tuple(flat)
            if key in seen_tuples:
                failures.append(
                    f"paths {seen_tuples[key]} and {path.shapes} share a tuple"
                )
            seen_tuples[key] = path.shapes
            if len(basis) != expected_dim:
                failures.append(
                    f"path {path.shapes}: eigenspace dim {len(basis)} != {expected_dim}"
                )
            entries.append(
                {
                    "shape": mu,
                    "path": path,
                    "eigenvalues": predicted,
                    "dimension": len(basis),
                    "basis": basis,
                }
            )
    if total != space.dim:
        failures.append(f"eigenspaces cover {total} of {space.dim} dimensions")
    return {
        "level": str(t),
        "n": n,
        "entries": entries,
        "ok": not failures,
        "failures": failures,
    }
