"""Exhaustive search for orientations of a small set of new edges.

Used to reconstruct the fixed local pictures the orienter relies on (fan
orientations, the length-3 special cases) from the constraints they must
satisfy, and by the tests as an oracle for those pictures.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Callable, Iterable


def solve_local(
    edges: list[tuple[int, int]],
    base: dict[int, int] | None = None,
    contrib: dict[int, int] | None = None,
    final: dict[int, int] | None = None,
    outside: dict[int, Iterable[int]] | None = None,
    skip_pairs: Iterable[tuple[int, int]] = (),
    cap: int = 3,
    accept: Callable[[dict[int, int]], bool] | None = None,
    forced: dict[int, tuple[int, int]] | None = None,
) -> list[tuple[int, int]] | None:
    """Lexicographically first orientation of ``edges`` meeting the constraints.

    Each edge ``(u, v)`` tries ``u -> v`` before ``v -> u``.  ``base`` gives
    in-degrees from already directed edges, ``contrib`` pins how many local arcs
    a vertex receives, ``final`` overrides the value a vertex is compared with
    (for vertices whose in-degree will still rise), ``outside`` lists in-degrees
    of neighbours that are not part of the search.  All local edges must be
    proper except ``skip_pairs``; every value must be at most ``cap``.
    ``accept`` sees the final in-degree map of the local vertices; ``forced``
    pins the arc chosen for some edge indices.
    """
    forced = forced or {}
    base = base or {}
    contrib = contrib or {}
    final = final or {}
    outside = {v: list(ds) for v, ds in (outside or {}).items()}
    skip = {frozenset(p) for p in skip_pairs}
    remaining: dict[int, int] = defaultdict(int)
    nbrs: dict[int, list[int]] = defaultdict(list)
    for u, v in edges:
        remaining[u] += 1
        remaining[v] += 1
        nbrs[u].append(v)
        nbrs[v].append(u)
    got: dict[int, int] = defaultdict(int)
    done: set[int] = set()
    choice: list[tuple[int, int]] = []

    def value(v: int) -> int:
        return final.get(v, base.get(v, 0) + got[v])

    def feasible(v: int) -> bool:
        have = got[v]
        if base.get(v, 0) + have > cap:
            return False
        if v in contrib:
            need = contrib[v]
            if have > need or have + remaining[v] < need:
                return False
        return True

    def complete(v: int) -> bool:
        d = value(v)
        if d > cap or base.get(v, 0) + got[v] > cap:
            return False
        if any(d == x for x in outside.get(v, ())):
            return False
        for w in nbrs[v]:
            if w in done and frozenset((v, w)) not in skip and value(w) == d:
                return False
        return True

    def rec(i: int) -> bool:
        if i == len(edges):
            if accept is None:
                return True
            return accept({v: value(v) for v in nbrs})
        u, v = edges[i]
        options = (forced[i],) if i in forced else ((u, v), (v, u))
        for t, h in options:
            got[h] += 1
            remaining[u] -= 1
            remaining[v] -= 1
            ok = feasible(h) and feasible(t)
            newly = []
            if ok:
                for x in (u, v):
                    if remaining[x] == 0:
                        done.add(x)
                        newly.append(x)
                        if not complete(x):
                            ok = False
                            break
            if ok:
                choice.append((t, h))
                if rec(i + 1):
                    return True
                choice.pop()
            for x in newly:
                done.discard(x)
            got[h] -= 1
            remaining[u] += 1
            remaining[v] += 1
        return False

    return list(choice) if rec(0) else None
