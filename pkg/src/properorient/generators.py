"""Instance generators: the tightness example, fans, random outerplanar graphs."""
from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .graph import Graph, edge_key


@dataclass(frozen=True)
class GenParams:
    seed: int = 0
    n_target: int = 50
    min_path: int = 3  # faces have length >= 4, so no triangles
    max_path: int = 8
    p_stop: float = 0.5  # geometric tail of the path-length draw
    fan_bias: float = 0.0  # chance per attachment of planting a fan
    max_fan_k: int = 4
    n_blocks: int = 1
    bridge_prob: float = 0.5  # tree-free composites only
    shuffle: bool = True


def gen_tightness() -> Graph:
    """C5 with a path of length 4 on every edge: 20 vertices, 25 edges."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    nxt = 5
    for i in range(5):
        x, y, z = nxt, nxt + 1, nxt + 2
        nxt += 3
        edges += [(i, x), (x, y), (y, z), (z, (i + 1) % 5)]
    return Graph.from_edges(nxt, edges)


@dataclass
class FanInstance:
    graph: Graph
    base_edge: tuple[int, int]  # (hub, a)
    hub: int
    base_face: tuple[int, ...]


def gen_fan(k: int, nested: int | None = None) -> FanInstance:
    """Base 4-cycle ``a=0, b=1, 2, 3``, then a k-fan around hub ``b`` on edge
    ``{b, a}``; optionally a second fan on the new edge ``{b, c}``."""
    if k < 0 or (nested is not None and nested < 0):
        raise ValueError("fan sizes must be non-negative")
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    nxt = 4
    hub = 1

    def add_fan(start: int, kk: int) -> int:
        nonlocal nxt
        prev = start
        for _ in range(kk):
            h, m = nxt, nxt + 1
            nxt += 2
            edges.extend([(hub, h), (h, m), (m, prev)])
            prev = h
        p1, p2, p3 = nxt, nxt + 1, nxt + 2
        nxt += 3
        edges.extend([(hub, p1), (p1, p2), (p2, p3), (p3, prev)])
        return p1

    c = add_fan(0, k)
    if nested is not None:
        add_fan(c, nested)
    return FanInstance(Graph.from_edges(nxt, edges), (hub, 0), hub, (0, 1, 2, 3))


def gen_quad_chain(k: int) -> FanInstance:
    """Like :func:`gen_fan` but the quadrilateral chain is left open."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    nxt, prev = 4, 0
    for _ in range(k):
        h, m = nxt, nxt + 1
        nxt += 2
        edges.extend([(1, h), (h, m), (m, prev)])
        prev = h
    return FanInstance(Graph.from_edges(nxt, edges), (1, 0), 1, (0, 1, 2, 3))


class _Builder:
    def __init__(self, rng: random.Random):
        self.rng = rng
        self.n = 0
        self.edges: list[tuple[int, int]] = []
        self.outer: list[tuple[int, int]] = []
        self.where: dict[tuple[int, int], int] = {}

    def new(self) -> int:
        self.n += 1
        return self.n - 1

    def _add_outer(self, u: int, v: int) -> None:
        k = edge_key(u, v)
        self.edges.append(k)
        self.where[k] = len(self.outer)
        self.outer.append(k)

    def _take(self, k: tuple[int, int]) -> None:
        i = self.where.pop(k)
        last = self.outer.pop()
        if i < len(self.outer):
            self.outer[i] = last
            self.where[last] = i

    def cycle(self, length: int) -> None:
        vs = [self.new() for _ in range(length)]
        for i in range(length):
            self._add_outer(vs[i], vs[(i + 1) % length])

    def attach(self, u: int, v: int, length: int) -> list[int]:
        """Attach a path of ``length`` edges from u to v; returns its vertices."""
        self._take(edge_key(u, v))
        path = [u] + [self.new() for _ in range(length - 1)] + [v]
        for x, y in zip(path, path[1:]):
            self._add_outer(x, y)
        return path

    def random_outer(self) -> tuple[int, int]:
        return self.outer[self.rng.randrange(len(self.outer))]


def _draw_length(rng: random.Random, p: GenParams) -> int:
    length = p.min_path
    while length < p.max_path and rng.random() >= p.p_stop:
        length += 1
    return length


def _plant_fan(b: _Builder, rng: random.Random, p: GenParams, budget: int) -> int:
    u, v = b.random_outer()
    hub, prev = (u, v) if rng.random() < 0.5 else (v, u)
    used = 0
    while True:
        k = rng.randint(0, p.max_fan_k)
        if used + 2 * k + 3 > budget:
            k = (budget - used - 3) // 2
            if k < 0:
                return used
        for _ in range(k):
            path = b.attach(hub, prev, 3)
            prev = path[1]
            used += 2
        path = b.attach(hub, prev, 4)
        used += 3
        prev = path[1]
        if rng.random() < 0.5:
            return used


def gen_random_2connected(p: GenParams) -> Graph:
    """Random triangle-free 2-connected outerplanar graph with about
    ``p.n_target`` vertices, grown by attaching paths to outer edges."""
    if p.n_target < 4:
        raise ValueError("n_target must be at least 4")
    rng = random.Random(p.seed)
    b = _Builder(rng)
    b.cycle(min(_draw_length(rng, p) + 1, p.n_target))
    while True:
        budget = p.n_target - b.n
        if budget < p.min_path - 1:
            break
        if p.fan_bias and rng.random() < p.fan_bias and budget >= 3:
            _plant_fan(b, rng, p, budget)
            continue
        length = min(_draw_length(rng, p), budget + 1)
        u, v = b.random_outer()
        b.attach(u, v, length)
    return _finish(b.n, b.edges, rng if p.shuffle else None)


def _finish(n: int, edges, rng: random.Random | None) -> Graph:
    if rng is not None:
        perm = list(range(n))
        rng.shuffle(perm)
        edges = [(perm[u], perm[v]) for u, v in edges]
    return Graph.from_edges(n, edges)


def gen_composite(p: GenParams, mode: str = "bridgeless") -> Graph:
    """Random tree of blocks glued at cut vertices, or in ``treefree`` mode
    at cut vertices and bridges.  Block 0 is ``gen_random_2connected(p)``."""
    if mode not in ("bridgeless", "treefree"):
        raise ValueError(f"unknown mode {mode!r}")
    first = gen_random_2connected(p)
    if p.n_blocks <= 1:
        return first
    rng = random.Random((p.seed << 1) ^ 0x5EED)
    n = first.n
    edges = list(first.edges)
    for i in range(1, p.n_blocks):
        q = replace(p, seed=rng.getrandbits(63), n_target=rng.randint(4, max(4, p.n_target)))
        blk = gen_random_2connected(q)
        host = rng.randrange(n)
        joint = rng.randrange(blk.n)
        if mode == "treefree" and rng.random() < p.bridge_prob:
            relabel = {v: n + v for v in range(blk.n)}
            edges.append((host, relabel[joint]))
            n += blk.n
        else:
            relabel = {}
            nxt = n
            for v in range(blk.n):
                if v == joint:
                    relabel[v] = host
                else:
                    relabel[v] = nxt
                    nxt += 1
            n = nxt
        edges += [(relabel[u], relabel[v]) for u, v in blk.edges]
    return _finish(n, edges, rng if p.shuffle else None)
