"""Acceptance criteria, one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""
import functools
import time

from properorient import orienter as O
from properorient import templates as T
from properorient.cli import bench
from properorient.generators import GenParams, gen_composite, gen_random_2connected, gen_tightness
from properorient.graph import Graph, is_proper, max_indegree, path_indegrees
from properorient.oracle import bound_chain, decide_pon, exact_pon

RESULTS: list[str] = []


def report(n, name, ok, detail):
    line = f"criterion {n} {name}: {'PASS' if ok else 'FAIL'} ({detail})"
    RESULTS.append(line)
    print(line)
    return ok


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def run_checked(g, orient):
    """(proper, max in-degree, invariant error or None)"""
    try:
        o = orient(g, check=True)
    except O.InvariantViolation as e:
        return False, -1, str(e)
    return is_proper(o), max_indegree(o), None


@functools.lru_cache(maxsize=None)
def block_runs():
    out = []
    for i in range(1000):
        p = GenParams(seed=10_000 + i, n_target=4 + (i * 37) % 497, fan_bias=0.7 if i % 2 else 0.0)
        out.append(run_checked(gen_random_2connected(p), O.orient_block))
    return out


@functools.lru_cache(maxsize=None)
def composite_runs():
    out = {}
    for mode, orient in (("bridgeless", O.orient_bridgeless), ("treefree", O.orient_treefree)):
        rows = []
        for i in range(500):
            p = GenParams(
                seed=20_000 + i, n_target=4 + i % 37, n_blocks=2 + i % 15,
                fan_bias=0.5 if i % 2 else 0.0, bridge_prob=0.5,
            )
            rows.append(run_checked(gen_composite(p, mode), orient))
        out[mode] = rows
    return out


ORACLE_RUNS: list[tuple[int, int, int]] = []  # (lower bound, pon, upper bound)


def test_1_tightness():
    g = gen_tightness()
    t0 = time.perf_counter()
    r = exact_pon(g)
    no2 = not decide_pon(g, 2)[0]
    dt = time.perf_counter() - t0
    lo, hi = bound_chain(g)
    ORACLE_RUNS.append((lo, r.pon, hi))
    ok = r.pon == 3 and no2 and dt < 300
    assert report(1, "tightness", ok, f"pon={r.pon}, decide(2)={not no2}, {dt:.2f}s")


def test_2_two_connected_suite():
    runs = block_runs()
    bad = sum(1 for proper, mx, err in runs if err or not proper or mx > 3)
    assert report(2, "2-connected suite", bad == 0, f"{len(runs)} instances, {bad} failures")


def test_3_oracle_cross_check():
    checked = violations = 0
    seed = 0
    while checked < 200:
        seed += 1
        g = gen_random_2connected(GenParams(seed=seed, n_target=4 + seed % 10, fan_bias=0.5 * (seed % 2)))
        if g.m > 18:
            continue
        r = exact_pon(g)
        lo, hi = bound_chain(g)
        ORACLE_RUNS.append((lo, r.pon, hi))
        mine = max_indegree(O.orient_block(g))
        if r.pon > 3 or mine < r.pon:
            violations += 1
        checked += 1
    assert report(3, "oracle cross-check", violations == 0, f"{checked} instances, {violations} violations")


def test_4_composite_suites():
    runs = composite_runs()
    detail = []
    bad_total = 0
    for mode, rows in runs.items():
        bad = sum(1 for proper, mx, err in rows if err or not proper or mx > 4)
        bad_total += bad
        detail.append(f"{mode} {bad}/{len(rows)} failed")
    assert report(4, "bridgeless/tree-free suites", bad_total == 0, ", ".join(detail))


def test_5_templates():
    checked = bad = 0
    for t in T.CATALOG:
        for length in range(2, 51):
            if not t.admits(length):
                continue
            checked += 1
            seq = t.sequence(length)
            ok = path_indegrees(t.arcs(length)) == seq
            ok &= all(seq[i] != seq[i + 1] for i in range(1, length - 1))
            ok &= t.endpoint_contribution(length) == (seq[0], seq[-1])
            bad += not ok
    assert report(5, "templates", bad == 0, f"{checked} template/length pairs, {bad} bad")


def test_6_fans():
    from test_orienter import GOLDEN_FANS

    bad = 0
    for k in range(9):
        for variant in ("normal", "added"):
            edges, nm = O.fan_local_graph(k)
            d = {v: 0 for e in edges for v in e}
            d[nm["a"]] = d[nm["b"]] = 2
            for _, h in O.fan_pattern(k, variant):
                d[h] += 1
            a, b, c = nm["a"], nm["b"], nm["p1"]
            ok = d[a] == 3 and d[b] == 2
            if variant == "normal":
                ok &= d[c] == 1
            else:
                ok &= d[c] == 2
                d[c] = 3
            ok &= all(d[u] != d[v] for u, v in edges)
            ok &= tuple(O.fan_pattern(k, variant)) == O.search_fan_pattern(k, variant)
            bad += not ok
    golden = all(tuple(O.fan_pattern(*key)) == pat for key, pat in GOLDEN_FANS.items())
    assert report(6, "fans", bad == 0 and golden, f"k=0..8 x 2 variants, {bad} bad, golden stable={golden}")


def test_7_loop_invariants():
    errs = [err for _, _, err in block_runs() if err]
    for rows in composite_runs().values():
        errs += [err for _, _, err in rows if err]
    total = len(block_runs()) + sum(len(r) for r in composite_runs().values())
    first = f", first: {errs[0]}" if errs else ""
    assert report(7, "loop invariants", not errs, f"{total} checked runs, {len(errs)} violations{first}")


def test_8_linear_time():
    bench([1000], seeds=1)  # warm-up
    rows = bench([10**3, 10**4, 10**5], seeds=3, repeat=5) + bench([10**6], seeds=1, repeat=2)
    ratios = [rows[i + 1][1] / rows[i][1] for i in range(len(rows) - 1)]
    ok = all(r <= 15 for r in ratios)
    detail = ", ".join(f"n={n}: {t:.3f}s" for n, t in rows) + "; ratios " + ", ".join(f"{r:.1f}" for r in ratios)
    assert report(8, "linear time", ok, detail)


def test_9_oracle_sanity():
    vals = {
        "C5": exact_pon(cycle(5)).pon,
        "K2": exact_pon(Graph.from_edges(2, [(0, 1)])).pon,
        "C4": exact_pon(cycle(4)).pon,
    }
    ok = vals == {"C5": 2, "K2": 1, "C4": 2}
    for g in (cycle(5), cycle(4), Graph.from_edges(2, [(0, 1)])):
        lo, hi = bound_chain(g)
        ORACLE_RUNS.append((lo, exact_pon(g).pon, hi))
    chain = all(lo <= p <= hi for lo, p, hi in ORACLE_RUNS)
    assert report(9, "oracle sanity", ok and chain, f"{vals}, bound chain held on {len(ORACLE_RUNS)} runs: {chain}")


if __name__ == "__main__":
    import sys

    sys.path.insert(0, __file__.rsplit("/", 1)[0])
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
