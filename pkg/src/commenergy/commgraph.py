"""Commuting graph on the non-central elements of a group, and its matrices."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .groups import FiniteGroup, GroupError, center

KINDS = ("A", "D", "L", "Q")


class AbelianGroupError(GroupError):
    """The commuting graph is only defined for non-abelian groups."""


@dataclass(frozen=True, eq=False)
class IntMatrix:
    data: np.ndarray = field(repr=False)
    kind: str

    def __post_init__(self):
        self.data.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    def trace(self) -> int:
        return int(np.trace(self.data))

    def rows(self) -> list[list[int]]:
        return [[int(v) for v in r] for r in self.data]

    def is_symmetric(self) -> bool:
        return bool((self.data == self.data.T).all())

    def permuted(self, perm) -> "IntMatrix":
        p = np.asarray(perm)
        return IntMatrix(self.data[np.ix_(p, p)].copy(), self.kind)


def int_matrix(rows, kind: str = "A") -> IntMatrix:
    return IntMatrix(np.array(rows, dtype=np.int64).reshape(len(rows), -1), kind)


@dataclass(frozen=True, eq=False)
class CommutingGraph:
    group: FiniteGroup = field(repr=False)
    vertices: tuple[int, ...]
    rows: tuple[int, ...] = field(repr=False)  # packed adjacency bitsets

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def neighbors(self, i: int) -> list[int]:
        r, out = self.rows[i], []
        while r:
            low = r & -r
            out.append(low.bit_length() - 1)
            r ^= low
        return out

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.vertex_count) for j in self.neighbors(i) if i < j]

    @cached_property
    def adjacency_array(self) -> np.ndarray:
        n = self.vertex_count
        a = np.zeros((n, n), dtype=np.int64)
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1
        return a

    def to_json_obj(self) -> dict:
        return {
            "vertices": [self.group.labels[v] for v in self.vertices],
            "edges": [list(e) for e in self.edges()],
        }

    def to_dot(self) -> str:
        lines = ["graph commuting {"]
        for i, v in enumerate(self.vertices):
            label = self.group.labels[v].replace('"', r"\"")
            lines.append(f'  v{i} [label="{label}"];')
        for i, j in self.edges():
            lines.append(f"  v{i} -- v{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _pack(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row.astype(np.uint8), bitorder="little").tobytes(), "little")


def commuting_graph(G: FiniteGroup) -> CommutingGraph:
    Z = set(center(G).indices)
    if len(Z) == G.order:
        raise AbelianGroupError(f"{G.name or 'group'} is abelian; its commuting graph is undefined")
    verts = np.array([g for g in range(G.order) if g not in Z])
    sub = G.commute[np.ix_(verts, verts)].copy()
    np.fill_diagonal(sub, False)
    return CommutingGraph(G, tuple(int(v) for v in verts), tuple(_pack(r) for r in sub))


def matrices(graph: CommutingGraph) -> tuple[IntMatrix, IntMatrix, IntMatrix, IntMatrix]:
    A = graph.adjacency_array.copy()
    D = np.diag(np.array(graph.degrees, dtype=np.int64))
    return IntMatrix(A, "A"), IntMatrix(D, "D"), IntMatrix(D - A, "L"), IntMatrix(D + A, "Q")


def components(graph: CommutingGraph) -> list[list[int]]:
    seen = 0
    out = []
    for start in range(graph.vertex_count):
        if seen >> start & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= graph.rows[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        members = []
        while comp:
            low = comp & -comp
            members.append(low.bit_length() - 1)
            comp ^= low
        out.append(members)
    return out


@dataclass(frozen=True)
class CliqueDecomposition:
    sizes: tuple[int, ...] | None  # descending; None when some component is not complete

    @property
    def present(self) -> bool:
        return self.sizes is not None

    def counts(self) -> dict[int, int]:
        return dict(sorted(Counter(self.sizes or ()).items(), reverse=True))

    def __str__(self) -> str:
        if self.sizes is None:
            return "not a clique union"
        return " + ".join(f"{c}K{s}" if c > 1 else f"K{s}" for s, c in self.counts().items())


def clique_decomposition(graph: CommutingGraph) -> CliqueDecomposition:
    sizes = []
    for comp in components(graph):
        s = len(comp)
        if any(graph.degrees[v] != s - 1 for v in comp):
            return CliqueDecomposition(None)
        sizes.append(s)
    return CliqueDecomposition(tuple(sorted(sizes, reverse=True)))


def clique_union_graph_matrix(sizes, kind: str = "A") -> IntMatrix:
    """Matrix of the disjoint union of complete graphs K_s, for testing."""
    n = sum(sizes)
    a = np.zeros((n, n), dtype=np.int64)
    off = 0
    for s in sizes:
        a[off:off + s, off:off + s] = 1
        off += s
    np.fill_diagonal(a, 0)
    d = np.diag(a.sum(axis=1))
    m = {"A": a, "D": d, "L": d - a, "Q": d + a}[kind]
    return IntMatrix(m, kind)
