"""Graded branching graphs and path counting.

Three families are built here:

* ``rook_tower(n)``: levels 0..n, level m holding all shapes of size <= m,
  with an edge when the lower shape is the upper one or removes one box;
* ``rhat(n, kmax)``: levels 1..kmax of nonempty shapes of size <= min(k, n);
  an upward step either adds a box or moves a box (remove one corner, add one
  box).  Move steps carry one parallel edge per removable corner, labelled by
  the intermediate shape, since each corner contributes its own multiplicity;
* ``ihat(tmax)``: half-integer levels 1/2, 1, 3/2, ... for the propagating
  tower, with the single starting vertex at level 1/2.

Paths record the traversed edge labels, so parallel edges stay distinguishable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinat import (
    Partition,
    box_difference,
    corner_set,
    move_steps,
    partitions_upto,
    shape_key,
    tableau_shape,
)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class GraphPath:
    levels: tuple[Fraction, ...]
    shapes: tuple[Partition, ...]
    vias: tuple[Partition | None, ...]  # one entry per step

    def __post_init__(self):
        if len(self.levels) != len(self.shapes) or len(self.vias) != max(
            len(self.shapes) - 1, 0
        ):
            raise ValueError("malformed path")


class GradedGraph:
    """Levels of shape lists plus labelled edges between consecutive levels."""

    def __init__(self, kind: str, levels, vertices, edges):
        self.kind = kind
        self.levels = tuple(Fraction(l) for l in levels)
        self.vertices = tuple(tuple(vs) for vs in vertices)
        # edges[i]: dict (u_idx at level i, v_idx at level i+1) -> tuple of labels
        self.edges = tuple(dict(e) for e in edges)
        if len(self.edges) != max(len(self.levels) - 1, 0):
            raise ValueError("need one edge dict per consecutive level pair")
        self._index = [
            {shape: i for i, shape in enumerate(vs)} for vs in self.vertices
        ]

    def level_index(self, level) -> int:
        level = Fraction(level)
        try:
            return self.levels.index(level)
        except ValueError:
            raise ValueError(f"no level {level} in graph") from None

    def vertex_index(self, level, shape: Partition) -> int:
        li = self.level_index(level)
        try:
            return self._index[li][tuple(shape)]
        except KeyError:
            raise ValueError(f"no vertex {shape} at level {level}") from None

    def multiplicity(self, level, shape_low, shape_high) -> int:
        li = self.level_index(level)
        u = self.vertex_index(level, shape_low)
        v = self.vertex_index(self.levels[li + 1], shape_high)
        return len(self.edges[li].get((u, v), ()))

    def is_simple(self) -> bool:
        return all(len(labels) == 1 for e in self.edges for labels in e.values())

    def count_paths(self, src, dst) -> int:
        """Number of paths, counting parallel edges separately."""
        (src_level, src_shape), (dst_level, dst_shape) = src, dst
        li = self.level_index(src_level)
        lj = self.level_index(dst_level)
        if lj < li:
            return 0
        counts = {self.vertex_index(src_level, src_shape): 1}
        for step in range(li, lj):
            nxt: dict[int, int] = {}
            for (u, v), labels in self.edges[step].items():
                if u in counts:
                    nxt[v] = nxt.get(v, 0) + counts[u] * len(labels)
            counts = nxt
        return counts.get(self.vertex_index(dst_level, dst_shape), 0)

    def enumerate_paths(self, src, dst, limit: int = 200_000) -> list[GraphPath]:
        """All labelled paths from src to dst; raises if more than ``limit``."""
        total = self.count_paths(src, dst)
        if total > limit:
            raise ValueError(f"{total} paths exceed the enumeration ceiling {limit}")
        (src_level, src_shape), (dst_level, dst_shape) = src, dst
        li = self.level_index(src_level)
        lj = self.level_index(dst_level)
        start = self.vertex_index(src_level, src_shape)
        goal = self.vertex_index(dst_level, dst_shape)
        out: list[GraphPath] = []

        def walk(step, u, shapes, vias):
            if step == lj:
                if u == goal:
                    out.append(
                        GraphPath(
                            tuple(self.levels[li : lj + 1]), tuple(shapes), tuple(vias)
                        )
                    )
                return
            for (uu, v), labels in sorted(self.edges[step].items()):
                if uu != u:
                    continue
                for label in labels:
                    walk(
                        step + 1,
                        v,
                        shapes + [self.vertices[step + 1][v]],
                        vias + [label],
                    )

        walk(li, start, [self.vertices[li][start]], [])
        return out

    def to_dot(self) -> str:
        lines = [f"graph {self.kind} {{", "  rankdir=TB;"]

        def node_id(li, shape):
            label = ",".join(map(str, shape)) if shape else "empty"
            return f'"L{self.levels[li]}|{label}"'

        for li, vs in enumerate(self.vertices):
            ordered = sorted(vs, key=shape_key)
            names = " ".join(node_id(li, s) for s in ordered)
            lines.append(f"  {{ rank=same; {names} }}")
        for li, e in enumerate(self.edges):
            for (u, v), labels in sorted(e.items()):
                attr = f" [label={len(labels)}]" if len(labels) > 1 else ""
                lines.append(
                    f"  {node_id(li, self.vertices[li][u])} -- "
                    f"{node_id(li + 1, self.vertices[li + 1][v])}{attr};"
                )
        lines.append("}")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "levels": [str(l) for l in self.levels],
            "vertices": [
                [",".join(map(str, s)) for s in vs] for vs in self.vertices
            ],
            "edges": [
                sorted([u, v, len(labels)] for (u, v), labels in e.items())
                for e in self.edges
            ],
        }


def rook_tower(n: int) -> GradedGraph:
    """Branching graph of the rook-monoid tower: level m holds all shapes of
    size <= m; a shape at level m+1 joins itself and its one-box removals."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    vertices = [sorted(partitions_upto(m), key=shape_key) for m in range(n + 1)]
    edges = []
    for m in range(n):
        lower = {s: i for i, s in enumerate(vertices[m])}
        e = {}
        for v_idx, lam in enumerate(vertices[m + 1]):
            for nu in corner_set(lam, "minus_eq"):
                if nu in lower:
                    e[(lower[nu], v_idx)] = (None,)
        edges.append(e)
    return GradedGraph("rook", range(n + 1), vertices, edges)


def rhat(n: int, kmax: int) -> GradedGraph:
    """Tensor-step graph: level k holds the nonempty shapes of size up to
    min(k, n); a step adds a box (label None) or moves a box (one labelled
    edge per removable corner)."""
    if n < 1 or kmax < 1:
        raise ValueError("n and kmax must be positive")
    vertices = [
        [s for s in sorted(partitions_upto(min(k, n)), key=shape_key) if s]
        for k in range(1, kmax + 1)
    ]
    edges = []
    for k in range(1, kmax):
        upper = {s: i for i, s in enumerate(vertices[k])}
        e = {}
        for u_idx, lam in enumerate(vertices[k - 1]):
            labels: dict[Partition, list] = {}
            for omega, mu in move_steps(lam):
                labels.setdefault(mu, []).append(omega)
            for mu in corner_set(lam, "plus_n", n):
                labels.setdefault(mu, []).append(None)
            for mu, ls in labels.items():
                if mu in upper:
                    e[(u_idx, upper[mu])] = tuple(ls)
        edges.append(e)
    return GradedGraph("rhat", range(1, kmax + 1), vertices, edges)


def ihat(tmax) -> GradedGraph:
    """Branching graph of the totally propagating tower, on half-integer levels.

    Level 1/2 is the single vertex (); an integer level k holds the nonempty
    shapes of size <= k and level k+1/2 holds all shapes of size <= k.  Going
    from k to k+1/2 keeps the shape or removes a box; going from k+1/2 to k+1
    adds a box.
    """
    tmax = Fraction(tmax)
    if tmax < HALF or tmax % HALF != 0:
        raise ValueError("tmax must be a positive half-integer")
    levels = []
    cur = HALF
    while cur <= tmax:
        levels.append(cur)
        cur += HALF
    vertices = []
    for lv in levels:
        if lv == HALF:
            vertices.append([()])
        elif lv.denominator == 1:
            vertices.append([s for s in sorted(partitions_upto(int(lv)), key=shape_key) if s])
        else:
            vertices.append(sorted(partitions_upto(int(lv - HALF)), key=shape_key))
    edges = []
    for idx in range(len(levels) - 1):
        low, high = levels[idx], levels[idx + 1]
        lower = vertices[idx]
        upper = {s: i for i, s in enumerate(vertices[idx + 1])}
        e = {}
        if low == HALF:
            e[(0, upper[(1,)])] = (None,)
        elif low.denominator == 1:
            for u_idx, mu in enumerate(lower):
                for nu in corner_set(mu, "minus_eq"):
                    if nu in upper:
                        e[(u_idx, upper[nu])] = (None,)
        else:
            bound = int(high)
            for u_idx, nu in enumerate(lower):
                for lam in corner_set(nu, "plus_n", bound):
                    if lam in upper:
                        e[(u_idx, upper[lam])] = (None,)
        edges.append(e)
    return GradedGraph("ihat", levels, vertices, edges)


def path_to_tableau(path: GraphPath):
    """Growth-sequence bijection for rook_tower paths starting at () level 0:
    when the shape grows at step m, entry m lands in the new box."""
    if path.levels[0] != 0 or path.shapes[0] != ():
        raise ValueError("path must start at the empty shape, level 0")
    rows: list[list[int]] = []
    for m in range(1, len(path.shapes)):
        prev, cur = path.shapes[m - 1], path.shapes[m]
        if prev == cur:
            continue
        r, c = box_difference(cur, prev)
        if r - 1 == len(rows):
            rows.append([m])
        elif len(rows[r - 1]) == c - 1:
            rows[r - 1].append(m)
        else:
            raise ValueError("malformed growth path")
    return tuple(tuple(row) for row in rows)


def tableau_to_path(tab, n: int) -> GraphPath:
    """Inverse of path_to_tableau for an n-standard tableau."""
    shapes = []
    for m in range(n + 1):
        sub = tuple(
            count for count in (sum(1 for e in row if e <= m) for row in tab) if count
        )
        shapes.append(sub)
    if shapes[-1] != tableau_shape(tab):
        raise ValueError("entries exceed n")
    return GraphPath(
        tuple(Fraction(m) for m in range(n + 1)),
        tuple(shapes),
        (None,) * n,
    )
