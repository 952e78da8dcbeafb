"""Proper orientations of triangle-free outerplanar graphs.

A 2-connected block is grown from a root face by attaching one path per
inner face, in breadth-first order of the weak dual tree.  Each attached path
is oriented from a small catalogue of path templates so that the in-degrees
already fixed never clash; the delicate configurations are *fans* (chains of
quadrilaterals around one hub closed by a pentagon) hanging off an edge whose
in-degree-2 end already sees an in-degree-3 vertex.  Those are oriented ahead
of the breadth-first order.  Blocks are then glued along cut vertices and
bridges.
"""
from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass, field

from . import templates as T
from .embed import (
    BlockDecomposition,
    Embedding,
    classify,
    decompose_blocks,
    dual_tree,
    embed_block,
)
from .graph import Graph, Orientation, delta_orientation, edge_key, realize_path
from .local import solve_local


class InvariantViolation(RuntimeError):
    pass


class ClassMismatch(ValueError):
    pass


# ------------------------------------------------------------------ plan

@dataclass
class Step:
    face: int
    shared: tuple[int, int]
    path: list[int]  # from shared[0] to shared[1] around the face, edge excluded

    def path_from(self, x: int) -> list[int]:
        if self.path[0] == x:
            return self.path
        if self.path[-1] == x:
            return self.path[::-1]
        raise InvariantViolation(f"vertex {x} is not an end of the path on {self.shared}")

    @property
    def length(self) -> int:
        return len(self.path) - 1


@dataclass
class ConstructionPlan:
    root_face: int
    root_cycle: list[int]
    steps: list[Step]
    child: dict[tuple[int, int], int]  # edge -> index of the step attaching to it

    def activity(self) -> dict[tuple[int, int], list[int]]:
        return {k: [i] for k, i in self.child.items()}


def build_plan(e: Embedding, root_face: int = 0, start: int | None = None) -> ConstructionPlan:
    """Breadth-first attachment order of the inner faces from ``root_face``.

    ``start`` rotates the root cycle so that it begins at that vertex.
    """
    tree = dual_tree(e)
    faces = e.inner_faces
    root = faces[root_face]
    if start is not None:
        i = root.index(start)
        root = root[i:] + root[:i]
    steps: list[Step] = []
    child: dict[tuple[int, int], int] = {}
    seen = [False] * len(faces)
    seen[root_face] = True
    queue = deque([root_face])
    while queue:
        f = queue.popleft()
        for h, key in sorted(tree.adj[f]):
            if seen[h]:
                continue
            seen[h] = True
            child[key] = len(steps)
            steps.append(Step(h, key, _face_path(faces[h], key)))
            queue.append(h)
    return ConstructionPlan(root_face, list(root), steps, child)


def _face_path(face: list[int], key: tuple[int, int]) -> list[int]:
    u, v = key
    n = len(face)
    i = face.index(u)
    if face[(i + 1) % n] == v:
        # walk backwards from u so that the edge (u, v) is not used
        return [face[(i - j) % n] for j in range(n)]
    return [face[(i + j) % n] for j in range(n)]


# ------------------------------------------------------------------ fans

@dataclass
class FanDescriptor:
    hub: int
    base_edge: tuple[int, int]  # (hub, a)
    k: int
    quad_steps: list[int]
    closing_step: int
    follow_on: "FanDescriptor | None" = None

    @property
    def a(self) -> int:
        return self.base_edge[1]


def fan_local_graph(k: int) -> tuple[list[tuple[int, int]], dict[str, int]]:
    """Canonical k-fan: ``a=0``, hub ``b=1``; edges listed face by face.

    Quad ``i`` is the path ``b, h_i, m_i, h_{i-1}`` (``h_0 = a``) and the
    closing pentagon is ``b, p1, p2, p3, h_k``.
    """
    names = {"a": 0, "b": 1}
    prev = 0
    nxt = 2
    edges = []
    for i in range(1, k + 1):
        h, m = nxt, nxt + 1
        nxt += 2
        names[f"h{i}"], names[f"m{i}"] = h, m
        edges += [(1, h), (h, m), (m, prev)]
        prev = h
    p1, p2, p3 = nxt, nxt + 1, nxt + 2
    names.update(p1=p1, p2=p2, p3=p3)
    edges += [(1, p1), (p1, p2), (p2, p3), (p3, prev)]
    return edges, names


@functools.lru_cache(maxsize=None)
def search_fan_pattern(k: int, variant: str) -> tuple[tuple[int, int], ...]:
    """Fan orientation found by exhaustive search over the fan's own edges.

    Constraints: the hub keeps in-degree 2 (no fan arc into it); ``a`` enters
    with in-degree 2 and receives exactly one fan arc, ending at 3; the
    pentagon vertex ``c = p1`` next to the hub ends at 1 (``normal``: the edge
    hub-c is a 1-2 edge) or receives both of its arcs (``added``: c waits at 2
    for the next fan, which lifts it to 3).  Everything proper, at most 3.
    The added picture must agree with the normal one on every edge not
    touching c.
    """
    edges, nm = fan_local_graph(k)
    a, b, c = nm["a"], nm["b"], nm["p1"]
    base = {a: 2, b: 2}
    contrib = {a: 1, b: 0}
    final = {}
    skip = []
    forced = {}
    if variant == "normal":
        contrib[c] = 1
    elif variant == "added":
        contrib[c] = 2
        final[c] = 3
        skip = [(b, c)]
        normal = search_fan_pattern(k, "normal")
        forced = {i: arc for i, arc in enumerate(normal) if c not in arc}
    else:
        raise ValueError(variant)
    sol = solve_local(edges, base=base, contrib=contrib, final=final, skip_pairs=skip, forced=forced)
    if sol is None:
        raise InvariantViolation(f"no {variant} orientation for a {k}-fan")
    return tuple(sol)


def fan_pattern(k: int, variant: str) -> list[tuple[int, int]]:
    """Closed form of :func:`search_fan_pattern` for any ``k``.

    Every quad vertex next to the hub ends at 3 and its partner at 0; the
    pentagon reads ``b -> p1 -> p2 <- p3 -> h_k`` (``p2 -> p1`` when added).
    """
    edges, nm = fan_local_graph(k)
    out = []
    for i in range(k):
        hub_e, hm, m_prev = edges[3 * i: 3 * i + 3]
        out += [hub_e, (hm[1], hm[0]), m_prev]
    bp1, p12, p23, p3h = edges[3 * k:]
    out += [bp1, p12 if variant == "normal" else (p12[1], p12[0]), (p23[1], p23[0]), p3h]
    return out


# ------------------------------------------------------------------ state

@dataclass
class Stats:
    cases: dict = field(default_factory=dict)

    def hit(self, name: str) -> None:
        self.cases[name] = self.cases.get(name, 0) + 1


class Orienter:
    """Incremental orientation state shared by all blocks of one graph."""

    def __init__(self, g: Graph, check: bool = False, cap: int = 3):
        self.g = g
        self.o = Orientation(g)
        self.d = self.o.indegree
        self.check = check
        self.cap = cap
        self.stats = Stats()
        self.cnt3 = [0] * g.n  # directed neighbours with in-degree 3
        self.adj_eids = g.inc
        self.plan: ConstructionPlan | None = None
        self.done: list[bool] = []
        self.touched: list[int] = []
        self._fan_memo: dict = {}

    # ---- primitive moves

    def direct(self, t: int, h: int) -> None:
        g, o, d = self.g, self.o, self.d
        i = g.index[edge_key(t, h)]
        if o.head[i] != -1:
            raise InvariantViolation(f"edge {edge_key(t, h)} directed twice")
        old = d[h]
        if old == 3:
            self.cnt3[t] += 1
        if d[t] == 3:
            self.cnt3[h] += 1
        o.direct(t, h)
        new = old + 1
        if old == 3 or new == 3:
            delta = 1 if new == 3 else -1
            head = o.head
            for w, eid in zip(g.adj[h], self.adj_eids[h]):
                if head[eid] != -1:
                    self.cnt3[w] += delta
        if self.check:
            self.touched += (t, h)

    def orient_path(self, path: list[int], seq: list[int]) -> None:
        if len(seq) != len(path):
            raise InvariantViolation(f"sequence {seq} does not fit path of {len(path)} vertices")
        for i, fwd in enumerate(realize_path(seq)):
            if fwd:
                self.direct(path[i], path[i + 1])
            else:
                self.direct(path[i + 1], path[i])

    def is_tm(self, v: int) -> bool:
        return self.d[v] == 2 and self.cnt3[v] > 0

    def child_step(self, u: int, v: int) -> int | None:
        s = self.plan.child.get(edge_key(u, v))
        if s is None or self.done[s]:
            return None
        return s

    def is_active(self, u: int, v: int) -> bool:
        return self.child_step(u, v) is not None

    def finish(self, s: int) -> None:
        if self.done[s]:
            raise InvariantViolation(f"face {self.plan.steps[s].face} attached twice")
        self.done[s] = True

    # ---- fans

    def detect_fan(self, e: tuple[int, int], hub: int) -> FanDescriptor | None:
        """Maximal chain of quadrilaterals around ``hub`` closed by a pentagon."""
        key = (edge_key(*e), hub)
        if key in self._fan_memo:
            return self._fan_memo[key]
        other = e[1] if e[0] == hub else e[0]
        quads = []
        cur = other
        fan = None
        while True:
            s = self.child_step(hub, cur)
            if s is None:
                break
            step = self.plan.steps[s]
            if step.length == 4:
                fan = FanDescriptor(hub, (hub, other), len(quads), quads, s)
                break
            if step.length != 3:
                break
            quads.append(s)
            cur = step.path_from(hub)[1]
        if fan is not None:
            c = self.plan.steps[fan.closing_step].path_from(hub)[1]
            fan.follow_on = self.detect_fan((hub, c), hub)
        self._fan_memo[key] = fan
        return fan

    def orient_fan(self, fan: FanDescriptor, variant: str) -> int:
        """Orient all faces of ``fan``; returns the pentagon vertex next to the hub."""
        hub, a = fan.hub, fan.a
        if self.d[hub] != 2 or self.d[a] != 2:
            raise InvariantViolation(
                f"fan at hub {hub}: expected in-degrees 2/2, got {self.d[hub]}/{self.d[a]}"
            )
        edges, nm = fan_local_graph(fan.k)
        local = {nm["a"]: a, nm["b"]: hub}
        prev = a
        for i, s in enumerate(fan.quad_steps, 1):
            p = self.plan.steps[s].path_from(hub)  # hub, h_i, m_i, h_{i-1}
            if p[3] != prev:
                raise InvariantViolation("fan quads are not chained")
            local[nm[f"h{i}"]], local[nm[f"m{i}"]] = p[1], p[2]
            prev = p[1]
        p = self.plan.steps[fan.closing_step].path_from(hub)
        local[nm["p1"]], local[nm["p2"]], local[nm["p3"]] = p[1], p[2], p[3]
        if p[4] != prev:
            raise InvariantViolation("fan pentagon does not close the chain")
        for t, h in fan_pattern(fan.k, variant):
            self.direct(local[t], local[h])
        for s in fan.quad_steps:
            self.finish(s)
        self.finish(fan.closing_step)
        self.stats.hit(f"fan-{variant}")
        return p[1]

    # ---- procedures

    def procedure_1(self, e: tuple[int, int], x: int) -> None:
        """Orient everything hanging off ``e`` whose trouble comes from ``x``."""
        limit = len(self.plan.steps) + 1
        while limit:
            limit -= 1
            y = e[1] if e[0] == x else e[0]
            s = self.child_step(x, y)
            if s is None:
                return
            fan = self.detect_fan((x, y), x)
            if fan is not None:
                c_next = self.plan.steps[fan.closing_step].path_from(x)[1]
                variant = "added" if fan.follow_on is not None else "normal"
                c = self.orient_fan(fan, variant)
                assert c == c_next
                e = (x, c)
                continue
            step = self.plan.steps[s]
            if self.d[y] != 1:
                raise InvariantViolation(
                    f"Procedure-1 on ({x},{y}) with plain path but d({y})={self.d[y]}"
                )
            p = step.path_from(x)
            c = p[1]
            if step.length == 4:
                raise InvariantViolation("length-4 path on a 1-2 edge must be a 0-fan")
            if self.detect_fan((x, c), x) is not None:
                if step.length < 5:
                    raise InvariantViolation("connectfan path shorter than 5 next to a fan")
                self.orient_path(p, T.connectfan_sequence(step.length))
                self.stats.hit("p1-connectfan")
            else:
                self.orient_path(p, T.base_sequence(step.length))
                self.stats.hit("p1-base")
            self.finish(s)
            e = (x, c)
        raise InvariantViolation("Procedure-1 recursion exceeded the number of faces")

    def procedure_2(self, s: int, a: int, b: int) -> None:
        """Length-3 path from trouble maker ``a`` to in-degree-3 ``b``."""
        step = self.plan.steps[s]
        p = step.path_from(a)
        _, u, w, _ = p
        if self.d[a] != 2 or self.d[b] < 3:
            raise InvariantViolation("Procedure-2 called outside its case")
        fan = self.detect_fan((w, u), w)
        if fan is not None and fan.k == 0:
            pent = self.plan.steps[fan.closing_step].path_from(w)
            pattern = _p2_zero_fan()
            local = [a, u, w, b] + pent[1:4]
            for t, h in pattern:
                self.direct(local[t], local[h])
            self.finish(s)
            self.finish(fan.closing_step)
            self.stats.hit("p2-zero-fan")
            return
        if fan is not None:
            quad = self.plan.steps[fan.quad_steps[0]].path_from(w)
            pattern = _p2_k_fan()
            local = [a, u, w, b] + quad[1:3]
            for t, h in pattern:
                self.direct(local[t], local[h])
            self.finish(s)
            self.finish(fan.quad_steps[0])
            self.stats.hit("p2-k-fan")
            return
        self.orient_path(p, T.base_sequence(3))
        self.finish(s)
        self.stats.hit("p2-plain")
        self.procedure_1((a, u), a)
        self.procedure_1((w, u), w)

    # ---- main loop

    def attach(self, s: int) -> None:
        step = self.plan.steps[s]
        u, v = step.shared
        d = self.d
        if d[u] == d[v]:
            raise InvariantViolation(f"shared edge {step.shared} is not proper")
        a, b = (u, v) if d[u] < d[v] else (v, u)
        p = step.path_from(a)
        length = step.length
        tm_a, tm_b = self.is_tm(a), self.is_tm(b)
        if tm_b:
            self._a3(s, p, a, b)
        elif tm_a:
            self._a4(s, p, a, b)
        elif length != 4:
            self._a1(s, p, a, b)
        else:
            self._a2(s, p, a, b)

    def _a1(self, s, p, a, b):
        da, db = self.d[a], self.d[b]
        length = len(p) - 1
        fwd_ok = da != 1 and db != 2  # a = v1, b = vn
        rev_ok = db != 1 and da != 2
        if da == 3 and fwd_ok:
            fwd = True
        elif db == 3 and rev_ok:
            fwd = False
        else:
            fwd = fwd_ok
        seq = T.base_sequence(length)
        self.orient_path(p if fwd else p[::-1], seq)
        self.finish(s)
        self.stats.hit("A1")

    def _a2(self, s, p, a, b):
        da, db = self.d[a], self.d[b]
        if (da, db) == (1, 2):
            self.orient_path(p, [0, 2, 1, 0, 1])
            self.stats.hit("A2-special")
        elif da != 1 and db != 1:
            self.orient_path(p, T.base_sequence(4, "a"))
            self.stats.hit("A2")
        else:
            self.orient_path(p, T.base_sequence(4, "b"))
            self.stats.hit("A2")
        self.finish(s)

    def _a3(self, s, p, a, b):
        if self.d[a] == 1:
            raise InvariantViolation(f"case A3 with d({a}) = 1 on edge ({a}, {b})")
        length = len(p) - 1
        c = p[-2]
        if self.detect_fan((b, c), b) is not None:
            # c, next to b, takes in-degree 2 now and 3 once the fan is oriented
            seq = T.base_sequence(length, "b")
            self.orient_path(p, seq)
            self.finish(s)
            self.stats.hit("A3-fan")
            self.procedure_1((b, c), b)
            return
        q = p[::-1]  # b = v1 so the 1 sits next to b
        seq = T.base_sequence(length, "a")
        self.orient_path(q, seq)
        self.finish(s)
        self.stats.hit("A3")
        self.procedure_1((b, q[1]), b)

    def _a4(self, s, p, a, b):
        length = len(p) - 1
        u = p[1]
        if self.detect_fan((a, u), a) is not None:
            self.orient_path(p, T.cf23_sequence(length))
            self.finish(s)
            self.stats.hit("A4-fan")
            self.procedure_1((a, u), a)
        elif length == 3:
            self.stats.hit("A4-p2")
            self.procedure_2(s, a, b)
        else:
            self.orient_path(p, T.cf23a_sequence(length))
            self.finish(s)
            self.stats.hit("A4")
            self.procedure_1((a, u), a)

    # ---- invariants

    def verify_step(self) -> None:
        """Local check around the vertices touched since the last call."""
        g, o, d = self.g, self.o, self.d
        head = o.head
        touched = set(self.touched)
        self.touched = []
        ring = set(touched)
        for v in touched:
            if d[v] > self.cap:
                raise InvariantViolation(f"vertex {v} has in-degree {d[v]}")
            for w, eid in zip(g.adj[v], self.adj_eids[v]):
                if head[eid] == -1:
                    continue
                ring.add(w)
                if d[w] == d[v]:
                    raise InvariantViolation(f"improper edge ({v}, {w}) at in-degree {d[v]}")
        for v in ring:
            if d[v] != 2:
                continue
            threes = ones = 0
            for w, eid in zip(g.adj[v], self.adj_eids[v]):
                if head[eid] == -1:
                    continue
                if d[w] == 3:
                    threes += 1
            if threes != self.cnt3[v]:
                raise InvariantViolation(f"stale in-degree-3 count at {v}")
            if not threes:
                continue
            for w, eid in zip(g.adj[v], self.adj_eids[v]):
                if head[eid] != -1 and d[w] == 1 and self.is_active(v, w):
                    ones += 1
                    raise InvariantViolation(
                        f"active 1-2 edge ({w}, {v}) on a 1-2-3 path"
                    )

    # ---- block driver

    def orient_block(
        self,
        emb: Embedding,
        root_face: int = 0,
        seed: int | None = None,
        seed_sequence=None,
    ) -> None:
        """Orient one 2-connected block given its embedding.

        Without a seed the root face gets the plain path orientation with both
        ends identified.  With ``seed`` the root face starts at that vertex and
        ``seed_sequence(length)`` gives its in-degree sequence.
        """
        plan = build_plan(emb, root_face, start=seed)
        self.plan = plan
        self.done = [False] * len(plan.steps)
        self._fan_memo = {}
        cyc = plan.root_cycle
        length = len(cyc)
        if seed_sequence is None:
            seq = T.base_sequence(length, "a")
        else:
            seq = seed_sequence(length)
        self.orient_path(cyc + [cyc[0]], seq)
        if self.check:
            self.verify_step()
        for s in range(len(plan.steps)):
            if self.done[s]:
                continue
            self.attach(s)
            if self.check:
                self.verify_step()
        self.plan = None


@functools.lru_cache(maxsize=None)
def _p2_zero_fan() -> tuple[tuple[int, int], ...]:
    # a=0, u=1, w=2, b=3; pentagon w - q1(4) - q2(5) - q3(6) - u
    edges = [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5), (5, 6), (6, 1)]
    return _p2_search(edges)


@functools.lru_cache(maxsize=None)
def _p2_k_fan() -> tuple[tuple[int, int], ...]:
    # a=0, u=1, w=2, b=3; first quad w - r1(4) - r2(5) - u
    edges = [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5), (5, 1)]
    return _p2_search(edges)


def _p2_search(edges) -> tuple[tuple[int, int], ...]:
    """P plus the adjoining fan face with no 1-2 edge and a, b unchanged."""

    def no_12(vals):
        return all({vals[x], vals[y]} != {1, 2} for x, y in edges)

    sol = solve_local(
        edges, base={0: 2, 3: 3}, contrib={0: 0, 3: 0}, accept=no_12
    )
    if sol is None:
        raise InvariantViolation("no orientation for the Procedure-2 picture")
    return tuple(sol)


# ------------------------------------------------------------------ drivers

def _embed_blocks(g: Graph, bd: BlockDecomposition) -> dict[int, Embedding]:
    return {
        b: embed_block(g, comp)
        for b, comp in enumerate(bd.blocks)
        if len(bd.block_vertices[b]) >= 3
    }


def _require(g: Graph, *flags: str) -> BlockDecomposition:
    bd = decompose_blocks(g)
    cls = classify(g, bd)
    missing = [f for f in flags if not getattr(cls, f)]
    if missing:
        raise ClassMismatch("input is not " + ", ".join(f.removeprefix("is_") for f in missing))
    return bd


def orient_block(g: Graph, emb: Embedding | None = None, check: bool = False) -> Orientation:
    """Proper orientation with maximum in-degree at most 3 of a triangle-free
    2-connected outerplanar graph."""
    if emb is None:
        _require(g, "is_2connected", "is_triangle_free")
        emb = embed_block(g)
    st = Orienter(g, check=check, cap=3)
    st.orient_block(emb)
    return st.o


def _seed_cut_vertex(st: "Orienter", v: int):
    """Root-face sequence for a child block hanging at cut vertex ``v``."""
    d = st.d[v]
    if d == 3:
        return "base", lambda length: T.base_sequence(length, "a")
    if d != 2:
        return "connectfan", T.connectfan_sequence
    near = {st.d[w] for w, eid in zip(st.g.adj[v], st.adj_eids[v]) if st.o.head[eid] != -1}
    if 4 not in near:
        return "in1", T.in1_sequence
    if 3 not in near:
        return "raise1", T.raise1_sequence
    raise InvariantViolation(f"cut vertex {v} at in-degree 2 sees both 3 and 4")


def _orient_composite(g: Graph, bd: BlockDecomposition, check: bool) -> Orienter:
    st = Orienter(g, check=check, cap=4)
    embs = _embed_blocks(g, bd)
    started: set[int] = set()  # vertices already inside an oriented cycle block
    pending: dict[int, int] = {}  # child end of a bridge -> its parent end
    for b in bd.order:
        if bd.is_bridge_block(b):
            u, v = g.edges[bd.blocks[b][0]]
            pv = bd.parent[b][1] if b in bd.parent else u
            pending[v if pv == u else u] = pv
            continue
        emb = embs[b]
        if b not in bd.parent:
            st.orient_block(emb)
            started.update(bd.block_vertices[b])
            continue
        v = bd.parent[b][1]
        root_face = min(emb.faces_containing(v))
        if v in pending:
            # the bridge is directed only now, so its child end is fixed at once
            a = pending.pop(v)
            st.direct(a, v)
            st.stats.hit("bridge")
            if st.d[a] == 1:
                seed = T.in1_sequence
                st.stats.hit("seed-bridge-in1")
            else:
                seed = T.connectfan_sequence
                st.stats.hit("seed-bridge-connectfan")
        else:
            name, seed = _seed_cut_vertex(st, v)
            st.stats.hit(f"seed-cut-{name}")
        st.orient_block(emb, root_face=root_face, seed=v, seed_sequence=seed)
        started.update(bd.block_vertices[b])
    for v, a in pending.items():  # bridges hanging off trees, outside the class
        st.direct(a, v)
    return st


def orient_bridgeless(g: Graph, check: bool = False) -> Orientation:
    """Proper 4-orientation of a triangle-free bridgeless outerplanar graph."""
    bd = _require(g, "is_outerplanar", "is_triangle_free", "is_bridgeless")
    return _orient_composite(g, bd, check).o


def orient_treefree(g: Graph, check: bool = False) -> Orientation:
    """Proper 4-orientation of a triangle-free tree-free outerplanar graph."""
    bd = _require(g, "is_outerplanar", "is_triangle_free", "is_tree_free")
    return _orient_composite(g, bd, check).o


MODES = ("2connected", "bridgeless", "treefree")


def orient_graph(g: Graph, mode: str = "auto", fallback: bool = False, check: bool = False):
    """Orient with the strongest applicable driver; returns (orientation, mode used).

    ``auto`` tries the 2-connected driver, then bridgeless, then tree-free.
    Out-of-class inputs raise ClassMismatch unless ``fallback`` allows the
    max-degree reference orienter.
    """
    if mode != "auto" and mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    bd = decompose_blocks(g)
    cls = classify(g, bd)
    base = cls.is_outerplanar and cls.is_triangle_free
    fits = {
        "2connected": base and cls.is_2connected,
        "bridgeless": base and cls.is_bridgeless,
        "treefree": base and cls.is_tree_free,
    }
    wanted = MODES if mode == "auto" else (mode,)
    for m in wanted:
        if not fits[m]:
            continue
        if m == "2connected":
            return orient_block(g, embed_block(g), check=check), m
        return _orient_composite(g, bd, check).o, m
    if fallback:
        return delta_orientation(g), "fallback-delta"
    flags = ", ".join(k for k, v in cls.as_dict().items() if not v)
    raise ClassMismatch(f"input is outside the {'/'.join(wanted)} class ({flags} failed)")
