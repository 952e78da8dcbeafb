"""Graphs, orientations, the properness verifier and the path realizer."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    pass


class RealizationError(ValueError):
    """An in-degree sequence that no orientation of the path can produce."""


def edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``; the position of a
    pair in the tuple is its edge id.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False)
    index: dict = field(repr=False)
    inc: tuple[tuple[int, ...], ...] = field(repr=False, default=())  # edge ids aligned with adj

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        norm = []
        index = {}
        nbrs: list[list[int]] = [[] for _ in range(n)]
        inc: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            key = edge_key(u, v)
            if key in index:
                raise ValueError(f"parallel edge {key}")
            inc[u].append(len(norm))
            inc[v].append(len(norm))
            index[key] = len(norm)
            norm.append(key)
            nbrs[u].append(v)
            nbrs[v].append(u)
        return cls(n, tuple(norm), tuple(map(tuple, nbrs)), index, tuple(map(tuple, inc)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.index

    def edge_id(self, u: int, v: int) -> int:
        return self.index[edge_key(u, v)]

    def subgraph(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; also returns the new->old map."""
        old = list(vertices)
        new_of = {v: i for i, v in enumerate(old)}
        es = [(new_of[u], new_of[v]) for u, v in self.edges if u in new_of and v in new_of]
        return Graph.from_edges(len(old), es), old

    def edge_subgraph(self, edge_ids: Iterable[int]) -> tuple["Graph", list[int]]:
        old: list[int] = []
        new_of: dict[int, int] = {}
        es = []
        for i in edge_ids:
            u, v = self.edges[i]
            for x in (u, v):
                if x not in new_of:
                    new_of[x] = len(old)
                    old.append(x)
            es.append((new_of[u], new_of[v]))
        return Graph.from_edges(len(old), es), old


class Orientation:
    """Directions for (some of) the edges of a graph plus the induced in-degrees.

    ``head[i]`` is the head of edge ``i`` or ``-1`` while the edge is undirected,
    so the same class also serves as the partial orientation grown by the
    orienter.
    """

    __slots__ = ("graph", "head", "indegree", "directed")

    def __init__(self, graph: Graph):
        self.graph = graph
        self.head = [-1] * graph.m
        self.indegree = [0] * graph.n
        self.directed = 0

    def direct(self, tail: int, head: int) -> None:
        i = self.graph.edge_id(tail, head)
        old = self.head[i]
        if old == head:
            return
        if old == -1:
            self.directed += 1
        else:
            self.indegree[old] -= 1
        self.head[i] = head
        self.indegree[head] += 1

    def arc(self, i: int) -> tuple[int, int]:
        u, v = self.graph.edges[i]
        h = self.head[i]
        if h == -1:
            raise KeyError(f"edge {i} is undirected")
        return (u, v) if h == v else (v, u)

    def arcs(self) -> list[tuple[int, int]]:
        return [self.arc(i) for i in range(self.graph.m) if self.head[i] != -1]

    def is_complete(self) -> bool:
        return self.directed == self.graph.m

    # snapshot / rollback for the constrained local searches
    def snapshot(self) -> tuple[list[int], list[int], int]:
        return (self.head[:], self.indegree[:], self.directed)

    def rollback(self, snap: tuple[list[int], list[int], int]) -> None:
        head, indeg, directed = snap
        self.head[:] = head
        self.indegree[:] = indeg
        self.directed = directed

    @classmethod
    def from_arcs(cls, graph: Graph, arcs: Iterable[tuple[int, int]]) -> "Orientation":
        o = cls(graph)
        for t, h in arcs:
            if not graph.has_edge(t, h):
                raise KeyError(f"arc ({t}, {h}) is not an edge")
            if o.head[graph.edge_id(t, h)] != -1:
                raise ValueError(f"edge {edge_key(t, h)} directed twice")
            o.direct(t, h)
        return o


def max_indegree(o: Orientation) -> int:
    return max(o.indegree, default=0)


def improper_edges(o: Orientation) -> list[tuple[int, int]]:
    """Directed edges whose endpoints share an in-degree."""
    d = o.indegree
    return [
        (u, v)
        for (u, v), h in zip(o.graph.edges, o.head)
        if h != -1 and d[u] == d[v]
    ]


def is_proper(o: Orientation) -> bool:
    if not o.is_complete():
        raise ValueError("orientation does not direct every edge")
    d = o.indegree
    return all(d[u] != d[v] for u, v in o.graph.edges)


def delta_orientation(g: Graph) -> Orientation:
    """Proper orientation with maximum in-degree at most the maximum degree.

    Repeatedly takes a vertex of maximum degree in what is left, points all of
    its remaining edges at it and deletes it.  Each removed vertex ends with an
    in-degree equal to its degree at removal time, which is at least the final
    in-degree of any later neighbour.  Ties are impossible because a later
    neighbour loses the edge to the removed vertex.
    """
    import heapq

    deg = [len(a) for a in g.adj]
    alive = [True] * g.n
    heap = [(-deg[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    o = Orientation(g)
    while heap:
        negd, v = heapq.heappop(heap)
        if not alive[v] or -negd != deg[v]:
            continue
        alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                o.direct(w, v)
                deg[w] -= 1
                heapq.heappush(heap, (-deg[w], w))
    return o


def realize_path(indegrees: Sequence[int], endpoints_open: tuple[bool, bool] = (False, False)) -> list[bool]:
    """Arc directions for a path ``v1 .. vn`` with prescribed in-degrees.

    Returns one flag per edge ``(v_i, v_{i+1})``: ``True`` when the arc points to
    the higher index.  An open endpoint is one whose entry may be anything the
    path can give it; closed entries must be matched exactly.  Fully closed
    sequences are solved by left-to-right propagation; otherwise all assignments
    are tried and the lexicographically smallest match (``False < True``) wins.
    """
    seq = list(indegrees)
    n_edges = len(seq) - 1
    if n_edges < 1:
        raise RealizationError("a path needs at least two vertices")
    if any(x < 0 or x > 2 for x in seq):
        raise RealizationError(f"in-degree out of range in {seq}")
    if any(x > 1 for x in (seq[0], seq[-1])):
        raise RealizationError(f"endpoint in-degree above 1 in {seq}")

    if not any(endpoints_open):
        if sum(seq) != n_edges:
            raise RealizationError(f"in-degree sum {sum(seq)} != {n_edges} edges for {seq}")
        out = []
        carried = 0  # arcs into v_i coming from the left
        for i in range(n_edges):
            need = seq[i] - carried
            if need == 1:
                out.append(False)
                carried = 0
            elif need == 0:
                out.append(True)
                carried = 1
            else:
                raise RealizationError(f"infeasible at v{i + 1} in {seq}")
        if carried != seq[-1]:
            raise RealizationError(f"infeasible at v{len(seq)} in {seq}")
        return out

    if n_edges > 20:
        raise RealizationError("open-endpoint search limited to 20 edges")
    for bits in itertools.product((False, True), repeat=n_edges):
        got = _path_indegrees(bits)
        if got[1:-1] != seq[1:-1]:
            continue
        if (endpoints_open[0] or got[0] == seq[0]) and (endpoints_open[1] or got[-1] == seq[-1]):
            return list(bits)
    raise RealizationError(f"no orientation realizes {seq}")


def _path_indegrees(bits: Sequence[bool]) -> list[int]:
    d = [0] * (len(bits) + 1)
    for i, forward in enumerate(bits):
        d[i + 1 if forward else i] += 1
    return d


def path_indegrees(bits: Sequence[bool]) -> list[int]:
    """In-degree contributions of an oriented path (inverse of :func:`realize_path`)."""
    return _path_indegrees(bits)


# ---------------------------------------------------------------- text formats

def parse_graph(text: str) -> Graph:
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "p" and len(parts) == 3:
                if n is not None:
                    raise GraphFormatError(f"line {lineno}: duplicate header")
                n, m = int(parts[1]), int(parts[2])
            elif parts[0] == "e" and len(parts) == 3:
                if n is None:
                    raise GraphFormatError(f"line {lineno}: edge before header")
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise GraphFormatError(f"line {lineno}: cannot parse {raw!r}")
        except ValueError as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"line {lineno}: {exc}") from None
    if n is None:
        raise GraphFormatError("missing 'p <n> <m>' header")
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def format_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def format_orientation(o: Orientation) -> str:
    lines = [f"d {v} {d}" for v, d in enumerate(o.indegree)]
    lines.extend(f"a {t} {h}" for t, h in o.arcs())
    return "\n".join(lines) + "\n"


def parse_orientation(text: str, g: Graph) -> Orientation:
    """Read ``d``/``a`` lines; the ``d`` lines are ignored and recomputed from the arcs.

    Raises ``GraphFormatError`` if the arcs do not cover every edge exactly once.
    """
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "d" and len(parts) == 3:
            continue
        if parts[0] == "a" and len(parts) == 3:
            try:
                arcs.append((int(parts[1]), int(parts[2])))
            except ValueError:
                raise GraphFormatError(f"line {lineno}: cannot parse {raw!r}") from None
            continue
        raise GraphFormatError(f"line {lineno}: cannot parse {raw!r}")
    try:
        o = Orientation.from_arcs(g, arcs)
    except (KeyError, ValueError) as exc:
        raise GraphFormatError(str(exc)) from None
    if not o.is_complete():
        missing = [g.edges[i] for i in range(g.m) if o.head[i] == -1]
        raise GraphFormatError(f"orientation misses {len(missing)} edge(s), e.g. {missing[0]}")
    return o
