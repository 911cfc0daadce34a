"""Immutable simple undirected graphs on dense ids 0..n-1.

Each graph keeps two views of its adjacency: sorted neighbor tuples for
iteration and integer bitmasks (bit ``u`` set in ``masks[v]`` iff uv is an
edge) for the set algebra the solvers do in their inner loops.

Vertex sets are plain ``frozenset``s of ids; any iterable of ids is accepted
where a set is expected.
"""

from __future__ import annotations

import io
import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Union

from domkit.errors import GraphError, ParseError

VertexSet = frozenset


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edge_count: int
    masks: tuple[int, ...] = field(repr=False, compare=False)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def closed_mask(self, v: int) -> int:
        return self.masks[v] | (1 << v)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def induced_components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by lowest vertex id."""
        seen = [False] * self.n
        comps = []
        for root in range(self.n):
            if seen[root]:
                continue
            seen[root] = True
            comp = [root]
            stack = [root]
            while stack:
                u = stack.pop()
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to 0..k-1 in ascending id order.

        Returns the subgraph and the list mapping new ids back to old ones.
        """
        old = sorted(set(vertices))
        new_id = {v: i for i, v in enumerate(old)}
        edges = [
            (new_id[u], new_id[w])
            for u in old
            for w in self.adjacency[u]
            if u < w and w in new_id
        ]
        return build_graph(len(old), edges), old


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph. Duplicate edges collapse; self-loops are rejected."""
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an id outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    adjacency = tuple(tuple(sorted(s)) for s in nbrs)
    masks = tuple(sum(1 << w for w in s) for s in nbrs)
    edge_count = sum(len(s) for s in nbrs) // 2
    return Graph(n=n, adjacency=adjacency, edge_count=edge_count, masks=masks)


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adjacency), default=0)


def _check_ids(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} is not in a graph on {g.n} vertices")
    return s


def to_mask(s: Iterable[int]) -> int:
    m = 0
    for v in s:
        m |= 1 << v
    return m


def from_mask(m: int) -> frozenset[int]:
    out = []
    v = 0
    while m:
        if m & 1:
            out.append(v)
        m >>= 1
        v += 1
    return frozenset(out)


def open_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """N(S): union of N(v) over v in S. May intersect S."""
    m = 0
    for v in _check_ids(g, s):
        m |= g.masks[v]
    return from_mask(m)


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    return undominated_vertex(g, s) is None


def undominated_vertex(g: Graph, s: Iterable[int]) -> int | None:
    """Lowest vertex with no member of ``s`` in its closed neighborhood, or None."""
    s = _check_ids(g, s)
    covered = 0
    for v in s:
        covered |= g.masks[v] | (1 << v)
    rest = g.full_mask & ~covered
    if not rest:
        return None
    return (rest & -rest).bit_length() - 1


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    s = _check_ids(g, s)
    m = to_mask(s)
    return all(not (g.masks[v] & m) for v in s)


# -- bipartiteness -----------------------------------------------------------


@dataclass(frozen=True)
class Bipartition:
    """A proper 2-coloring; ``color[v]`` is ``"A"`` or ``"B"``."""

    color: tuple[str, ...]

    @property
    def part_a(self) -> frozenset[int]:
        return frozenset(v for v, c in enumerate(self.color) if c == "A")

    @property
    def part_b(self) -> frozenset[int]:
        return frozenset(v for v, c in enumerate(self.color) if c == "B")

    def is_valid_for(self, g: Graph) -> bool:
        if len(self.color) != g.n or any(c not in ("A", "B") for c in self.color):
            return False
        return all(self.color[u] != self.color[v] for u, v in g.edges())

    @classmethod
    def from_parts(cls, n: int, part_a: Iterable[int]) -> "Bipartition":
        a = set(part_a)
        return cls(tuple("A" if v in a else "B" for v in range(n)))


@dataclass(frozen=True)
class OddCycle:
    """Witness of non-bipartiteness: consecutive vertices, closing edge implied."""

    cycle: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cycle)


def bipartition(g: Graph) -> Union[Bipartition, OddCycle]:
    """Canonical BFS 2-coloring, or an odd cycle if none exists.

    Components are processed by increasing lowest id and each component's
    lowest id is colored A, so the coloring depends only on the graph.
    """
    color: list[str | None] = [None] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if color[root] is not None:
            continue
        color[root] = "A"
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] is None:
                    color[w] = "B" if color[u] == "A" else "A"
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return OddCycle(_tree_cycle(u, w, parent, depth))
    return Bipartition(tuple(color))  # type: ignore[arg-type]


def _tree_cycle(u, w, parent, depth):
    # u and w share a color inside one BFS tree, so depth[u] == depth[w]
    # and the tree paths to their common ancestor plus uw form an odd cycle.
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        left.append(a)
        right.append(b)
    right.pop()  # common ancestor already ends `left`
    return tuple(left + right[::-1])


def is_bipartite(g: Graph) -> bool:
    return isinstance(bipartition(g), Bipartition)


# -- edge-list I/O -----------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: '#' comments, header ``n <count>``, then ``u v`` lines."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise ParseError(f"expected header 'n <count>', got {raw!r}", lineno)
            n = _parse_int(tokens[1], lineno, raw)
            if n < 0:
                raise ParseError(f"negative vertex count in {raw!r}", lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {raw!r}", lineno)
        u, v = (_parse_int(t, lineno, raw) for t in tokens)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range 0..{n - 1} in {raw!r}", lineno)
        if u == v:
            raise ParseError(f"self-loop in {raw!r}", lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("missing header 'n <count>'")
    return build_graph(n, edges)


def _parse_int(token, lineno, raw):
    if not token.isdigit():
        raise ParseError(f"not a nonnegative decimal integer: {token!r} in {raw!r}", lineno)
    return int(token)


def read_edge_list(source) -> Graph:
    """Read a graph from a path or a text stream."""
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    return parse_edge_list(source.read())


def format_edge_list(g: Graph) -> str:
    buf = io.StringIO()
    buf.write(f"n {g.n}\n")
    for u, v in g.edges():
        buf.write(f"{u} {v}\n")
    return buf.getvalue()


def write_edge_list(g: Graph, dest=None) -> str:
    """Serialize ``g``; also writes to ``dest`` (path or stream) when given."""
    text = format_edge_list(g)
    if dest is None:
        return text
    if isinstance(dest, (str, os.PathLike)):
        with open(dest, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        dest.write(text)
    return text


def parse_vertex_set(text: str, g: Graph | None = None) -> frozenset[int]:
    """Parse a dominating-set file: whitespace-separated vertex ids."""
    ids = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        for tok in line.split():
            v = _parse_int(tok, lineno, raw)
            if g is not None and v >= g.n:
                raise ParseError(f"vertex {v} out of range 0..{g.n - 1}", lineno)
            ids.append(v)
    return frozenset(ids)
