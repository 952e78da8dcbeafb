"""Outerplanar recognition, inner faces, weak dual trees and block trees."""
from __future__ import annotations

from bisect import bisect_left
from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .graph import Graph, edge_key


class NotOuterplanar(ValueError):
    pass


@dataclass
class Embedding:
    """Outerplanar embedding of one 2-connected block (global vertex ids)."""

    outer_cycle: list[int]
    inner_faces: list[list[int]]
    chords: set[tuple[int, int]]
    # (face, face, chord) for every chord
    dual_edges: list[tuple[int, int, tuple[int, int]]] = field(repr=False, default_factory=list)

    @cached_property
    def edge_faces(self) -> dict[tuple[int, int], list[int]]:
        """Edge key -> ids of the inner faces containing it (one or two)."""
        out: dict[tuple[int, int], list[int]] = defaultdict(list)
        for fid, f in enumerate(self.inner_faces):
            for i in range(len(f)):
                out[edge_key(f[i], f[i - 1])].append(fid)
        return dict(out)

    def faces_containing(self, v: int) -> list[int]:
        return [i for i, f in enumerate(self.inner_faces) if v in f]

    def to_text(self) -> str:
        lines = ["o " + " ".join(map(str, self.outer_cycle))]
        lines.extend("f " + " ".join(map(str, f)) for f in self.inner_faces)
        return "\n".join(lines) + "\n"


@dataclass
class DualTree:
    n_faces: int
    # (face, face, shared edge)
    edges: list[tuple[int, int, tuple[int, int]]]
    adj: list[list[tuple[int, tuple[int, int]]]] = field(repr=False)


@dataclass
class BlockDecomposition:
    blocks: list[list[int]]  # edge ids per block
    block_vertices: list[list[int]]
    cut_vertices: set[int]
    bridges: set[int]  # edge ids
    roots: list[int]  # root block of each component
    order: list[int]  # breadth-first block order over all components
    parent: dict[int, tuple[int, int]]  # block -> (parent block, shared cut vertex)

    def is_bridge_block(self, b: int) -> bool:
        return len(self.blocks[b]) == 1 and len(self.block_vertices[b]) == 2


@dataclass(frozen=True)
class GraphClass:
    is_outerplanar: bool
    is_2connected: bool
    is_bridgeless: bool
    is_tree_free: bool
    is_triangle_free: bool
    is_connected: bool = True

    def as_dict(self) -> dict:
        return {
            "outerplanar": self.is_outerplanar,
            "2connected": self.is_2connected,
            "bridgeless": self.is_bridgeless,
            "tree_free": self.is_tree_free,
            "triangle_free": self.is_triangle_free,
            "connected": self.is_connected,
        }


# ------------------------------------------------------------------ blocks

def decompose_blocks(g: Graph) -> BlockDecomposition:
    """Biconnected components by an iterative lowpoint search.

    Blocks are numbered by the discovery time of their first tree edge; each
    component is rooted at its lowest-numbered block and visited breadth
    first, children in ascending block id.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    raw_blocks: list[tuple[int, list[int]]] = []
    edge_stack: list[int] = []
    timer = 0
    adj_eids = g.inc

    for root in range(n):
        if disc[root] != -1 or not g.adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, 0)]  # vertex, parent edge, next neighbour index
        while stack:
            v, pe, i = stack[-1]
            nbrs = g.adj[v]
            if i < len(nbrs):
                stack[-1] = (v, pe, i + 1)
                w = nbrs[i]
                eid = adj_eids[v][i]
                if eid == pe:
                    continue
                if disc[w] == -1:
                    edge_stack.append(eid)
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, eid, 0))
                elif disc[w] < disc[v]:
                    edge_stack.append(eid)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if not stack:
                    break
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    comp = []
                    while True:
                        e = edge_stack.pop()
                        comp.append(e)
                        if e == pe:
                            break
                    raw_blocks.append((disc[v], comp))

    raw_blocks.sort(key=lambda t: t[0])
    blocks = [sorted(c) for _, c in raw_blocks]
    block_vertices = []
    vertex_blocks: dict[int, list[int]] = defaultdict(list)
    for b, comp in enumerate(blocks):
        vs = sorted({x for e in comp for x in g.edges[e]})
        block_vertices.append(vs)
        for v in vs:
            vertex_blocks[v].append(b)
    cut_vertices = {v for v, bs in vertex_blocks.items() if len(bs) > 1}
    bridges = {comp[0] for comp in blocks if len(comp) == 1}

    seen = [False] * len(blocks)
    roots, order, parent = [], [], {}
    # cycle blocks first, so a component is rooted at a bridge only if it is a tree
    for b0 in sorted(range(len(blocks)), key=lambda b: (len(blocks[b]) == 1, b)):
        if seen[b0]:
            continue
        roots.append(b0)
        seen[b0] = True
        queue = deque([b0])
        while queue:
            b = queue.popleft()
            order.append(b)
            for v in block_vertices[b]:
                if v not in cut_vertices:
                    continue
                for c in vertex_blocks[v]:
                    if not seen[c]:
                        seen[c] = True
                        parent[c] = (b, v)
                        queue.append(c)
    return BlockDecomposition(blocks, block_vertices, cut_vertices, bridges, roots, order, parent)


# ------------------------------------------------------------------ embedding

def embed_block(g: Graph, edge_ids: Iterable[int] | None = None) -> Embedding:
    """Outer cycle, inner faces and chords of a 2-connected outerplanar block.

    Degree-2 vertices are eliminated one at a time; each elimination closes a
    triangle of a virtual triangulation and adds the edge between the two
    neighbours if it is missing.  An edge lying on three triangles, or a stall
    with no degree-2 vertex, proves the block is not outerplanar.  Undoing the
    eliminations in reverse rebuilds the outer cycle, which must consist of
    real edges, with pairwise non-crossing chords, before faces are traced.
    """
    if edge_ids is None:
        edge_ids = range(g.m)
    real = [g.edges[i] for i in edge_ids]
    vertices = sorted({v for e in real for v in e})
    k = len(vertices)
    if k < 3:
        raise NotOuterplanar("a block needs at least three vertices")
    local = {v: i for i, v in enumerate(vertices)}
    nbr: list[set[int]] = [set() for _ in range(k)]
    for u, v in real:
        a, b = local[u], local[v]
        nbr[a].add(b)
        nbr[b].add(a)
    for i in range(k):
        if len(nbr[i]) < 2:
            raise NotOuterplanar(f"vertex {vertices[i]} has degree {len(nbr[i])}; block not 2-connected")
    count: dict[int, int] = defaultdict(int)  # triangles per edge, key min * k + max
    order = []  # (v, a, b): v was eliminated between a and b
    alive = [True] * k
    left = k
    stack = [i for i in range(k - 1, -1, -1) if len(nbr[i]) == 2]
    while left > 2:
        v = -1
        while stack:
            x = stack.pop()
            if alive[x] and len(nbr[x]) == 2:
                v = x
                break
        if v == -1:
            raise NotOuterplanar("no vertex of degree 2 left")
        a, b = nbr[v]
        alive[v] = False
        left -= 1
        order.append((v, a, b))
        nbr[a].discard(v)
        nbr[b].discard(v)
        if b not in nbr[a]:
            nbr[a].add(b)
            nbr[b].add(a)
        for key in (v * k + a if v < a else a * k + v, v * k + b if v < b else b * k + v,
                    a * k + b if a < b else b * k + a):
            c = count[key] = count[key] + 1
            if c > 2:
                x, y = divmod(key, k)
                raise NotOuterplanar(f"edge {edge_key(vertices[x], vertices[y])} would bound three faces")
        for x in (a, b):
            if len(nbr[x]) == 2:
                stack.append(x)

    # undo the eliminations on a circular list: v goes back between a and b
    nxt = [-1] * k
    prv = [-1] * k
    x, y = [i for i in range(k) if alive[i]]
    nxt[x] = prv[x] = y
    nxt[y] = prv[y] = x
    for v, a, b in reversed(order):
        if nxt[a] != b:
            a, b = b, a
        if nxt[a] != b:
            raise NotOuterplanar("eliminated vertex does not sit on the boundary")
        nxt[a] = prv[b] = v
        prv[v], nxt[v] = a, b
    cyc = [0]
    step = nxt if nxt[0] < prv[0] else prv
    cur = step[0]
    while cur != 0 and len(cyc) <= k:
        cyc.append(cur)
        cur = step[cur]
    if len(cyc) != k:
        raise NotOuterplanar("outer boundary is not Hamiltonian")
    cycle = [vertices[i] for i in cyc]

    pos = {v: i for i, v in enumerate(cycle)}
    chords = set()
    on_cycle = 0
    for u, v in real:
        gap = pos[u] - pos[v]
        if gap in (1, -1, k - 1, 1 - k):
            on_cycle += 1
        else:
            chords.add((u, v))
    if on_cycle != k:
        raise NotOuterplanar("outer boundary needs a missing edge")
    _check_noncrossing(chords, pos)
    faces, dual = _trace_faces(cycle, real, pos)
    return Embedding(cycle, faces, chords, dual)


def _check_noncrossing(chords: set[tuple[int, int]], pos: dict[int, int]) -> None:
    spans = sorted(
        ((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in chords),
        key=lambda s: (s[0], -s[1]),
    )
    stack: list[tuple[int, int]] = []
    for i, j in spans:
        while stack and stack[-1][1] <= i:
            stack.pop()
        if stack and j > stack[-1][1]:
            raise NotOuterplanar("chords cross")
        stack.append((i, j))


def _trace_faces(cycle, real, pos):
    """Trace inner faces with the rotation induced by the outer cycle order.

    Works on cycle positions; dart ``(p, q)`` has id ``off[p] + i`` where ``q``
    is the ``i``-th neighbour of ``p`` in rotation order.
    """
    n = len(cycle)
    rot: list[list[int]] = [[] for _ in range(n)]
    for u, v in real:
        p, q = pos[u], pos[v]
        rot[p].append((q - p) % n)
        rot[q].append((p - q) % n)
    off = [0] * (n + 1)
    for p in range(n):
        rot[p].sort()  # offsets (q - p) mod n, i.e. rotation order
        off[p + 1] = off[p] + len(rot[p])
    visited = bytearray(off[n])
    for p in range(n):  # darts of the outer face run against the cycle
        visited[off[p + 1] - 1] = 1  # offset n-1 is the cycle predecessor
    faces: list[list[int]] = []
    face_of = [0] * off[n]
    for p0 in range(n):
        for i0 in range(len(rot[p0])):
            if visited[off[p0] + i0]:
                continue
            fid = len(faces)
            face = []
            p, i = p0, i0
            while not visited[off[p] + i]:
                visited[off[p] + i] = 1
                face_of[off[p] + i] = fid
                face.append(cycle[p])
                q = (p + rot[p][i]) % n
                # predecessor of p in q's rotation
                j = bisect_left(rot[q], (p - q) % n) - 1
                p, i = q, j % len(rot[q])
            faces.append(face)
    dual = []
    for p in range(n):
        for i, o in enumerate(rot[p]):
            q = p + o
            if 2 <= o <= n - 2 and q < n:  # a chord, seen from its lower end
                j = bisect_left(rot[q], n - o)
                u, v = cycle[p], cycle[q]
                dual.append((face_of[off[p] + i], face_of[off[q] + j], edge_key(u, v)))
    return faces, dual


def dual_tree(e: Embedding) -> DualTree:
    adj: list[list[tuple[int, tuple[int, int]]]] = [[] for _ in e.inner_faces]
    for f, h, k in e.dual_edges:
        adj[f].append((h, k))
        adj[h].append((f, k))
    return DualTree(len(e.inner_faces), list(e.dual_edges), adj)


# ------------------------------------------------------------------ classes

def is_triangle_free(g: Graph) -> bool:
    sets = [set(a) for a in g.adj]
    for u, v in g.edges:
        a, b = (sets[u], sets[v]) if len(sets[u]) <= len(sets[v]) else (sets[v], sets[u])
        if any(w in b for w in a):
            return False
    return True


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def classify(g: Graph, bd: BlockDecomposition | None = None) -> GraphClass:
    bd = bd or decompose_blocks(g)
    outerplanar = True
    for b, comp in enumerate(bd.blocks):
        if len(bd.block_vertices[b]) < 3:
            continue
        try:
            embed_block(g, comp)
        except NotOuterplanar:
            outerplanar = False
            break
    connected = len(components(g)) <= 1
    two_connected = connected and g.n >= 3 and len(bd.blocks) == 1
    bridgeless = not bd.bridges
    # every component left after deleting the bridges must have >= 3 vertices
    in_cycle_block = [False] * g.n
    for b, vs in enumerate(bd.block_vertices):
        if len(vs) >= 3:
            for v in vs:
                in_cycle_block[v] = True
    tree_free = all(in_cycle_block)
    return GraphClass(outerplanar, two_connected, bridgeless, tree_free, is_triangle_free(g), connected)
