"""Exact proper orientation number of small graphs by branch and bound."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, Orientation, is_proper, max_indegree


class BudgetExceeded(ValueError):
    pass


@dataclass
class ExactResult:
    pon: int
    witness: Orientation
    explored: int


def _edge_order(g: Graph) -> list[int]:
    """Edges grouped by a BFS vertex order so vertices close early."""
    seen = [False] * g.n
    order, taken = [], [False] * g.m
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        q = deque([s])
        while q:
            v = q.popleft()
            for w in g.adj[v]:
                i = g.edge_id(v, w)
                if not taken[i]:
                    taken[i] = True
                    order.append(i)
                if not seen[w]:
                    seen[w] = True
                    q.append(w)
    return order


def _search(g: Graph, k: int) -> tuple[list[int] | None, int]:
    """First proper orientation with max in-degree <= k, as a head per edge."""
    order = _edge_order(g)
    m = len(order)
    d = [0] * g.n
    rem = [g.degree(v) for v in range(g.n)]
    head = [-1] * g.m
    explored = 0

    def settled(v: int) -> bool:
        # v just lost its last undecided edge: compare with finished neighbours
        x = d[v]
        for w in g.adj[v]:
            if rem[w] == 0 and d[w] == x:
                return False
        return True

    def rec(i: int) -> bool:
        nonlocal explored
        explored += 1
        if i == m:
            return True
        e = order[i]
        u, v = g.edges[e]
        for t, h in ((u, v), (v, u)):
            if d[h] == k:
                continue
            d[h] += 1
            rem[u] -= 1
            rem[v] -= 1
            ok = (rem[u] or settled(u)) and (rem[v] or settled(v))
            if ok:
                head[e] = h
                if rec(i + 1):
                    return True
            d[h] -= 1
            rem[u] += 1
            rem[v] += 1
        head[e] = -1
        return False

    found = rec(0)
    return (list(head) if found else None), explored


def _check_budget(g: Graph, budget: int) -> None:
    if g.m > budget:
        raise BudgetExceeded(f"{g.m} edges exceeds the budget of {budget}")


def _witness(g: Graph, head: list[int]) -> Orientation:
    o = Orientation(g)
    for e, h in enumerate(head):
        u, v = g.edges[e]
        o.direct(u if h == v else v, h)
    return o


def decide_pon(g: Graph, k: int, budget: int = 26) -> tuple[bool, Orientation | None]:
    """Whether ``g`` has a proper orientation with maximum in-degree <= k."""
    _check_budget(g, budget)
    if k < 0:
        return False, None
    head, _ = _search(g, k)
    if head is None:
        return False, None
    return True, _witness(g, head)


def exact_pon(g: Graph, budget: int = 26) -> ExactResult:
    _check_budget(g, budget)
    lo, hi = bound_chain(g)
    total = 0
    for k in range(max(lo, 0), hi + 1):
        head, explored = _search(g, k)
        total += explored
        if head is not None:
            w = _witness(g, head)
            assert is_proper(w) and max_indegree(w) <= k
            return ExactResult(k, w, total)
    raise AssertionError("no proper orientation up to the maximum degree")


def clique_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    nbrs = [set(a) for a in g.adj]
    best = 1

    def grow(clique: int, cand: set[int]) -> None:
        nonlocal best
        if clique > best:
            best = clique
        while cand:
            if clique + len(cand) <= best:
                return
            v = cand.pop()
            grow(clique + 1, cand & nbrs[v])

    grow(0, set(range(g.n)))
    return best


def bound_chain(g: Graph) -> tuple[int, int]:
    """Lower bound from the clique number and upper bound from the max degree."""
    return clique_number(g) - 1, g.max_degree()
