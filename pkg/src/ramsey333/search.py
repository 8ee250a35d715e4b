"""Minimizing monochromatic triangle counts: local search and tiny exhaustive oracles.

`minimize` is restart hill climbing over single-edge recolorings.  Each step
scans every (edge, new color) move, applies the one with the steepest
decrease (ties broken by lowest edge ordinal, then color order), and tolerates
a bounded number of plateau moves per restart.  Everything is seeded and
deterministic: identical parameters give identical results.

`exhaustive_min` is the ground truth at toy sizes: depth-first over all
colorings with branch-and-bound, edges ordered so every triangle closes as
early as possible.  The first edge's color is fixed to blue; recoloring is a
bijection on the search space that permutes colors everywhere at once, so the
restriction loses no minima.

The seeded generator is Python's Mersenne Twister (random.Random); each edge
of a random coloring draws uniformly from the first k colors in edge-ordinal
order, and each restart of `minimize` draws a fresh 64-bit subseed from the
master stream.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from math import comb

import numpy as np

from .coloring import Color, EdgeColoring, bit_rows, edge_index, edge_list
from .errors import BudgetError

DEFAULT_STATE_BUDGET = 1 << 25
STATE_BUDGET_ENV = "RAMSEY333_EXHAUSTIVE_BUDGET"


@dataclass(frozen=True)
class SearchParams:
    n: int
    k: int
    seed: int
    restarts: int = 20
    steps_per_restart: int = 2000
    sideways_limit: int = 50

    def __post_init__(self):
        if self.k not in (2, 3):
            raise ValueError("k must be 2 or 3")
        if self.n < 1:
            raise ValueError("n must be positive")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must fit in 64 bits")
        if self.restarts < 1 or self.steps_per_restart < 1:
            raise ValueError("restarts and steps_per_restart must be positive")
        if self.sideways_limit < 0:
            raise ValueError("sideways_limit must be nonnegative")


@dataclass(frozen=True)
class SearchResult:
    best: EdgeColoring
    best_count: int
    trace: tuple[int, ...]  # best value reached in each restart
    evaluations: int  # candidate moves examined


def random_coloring(n: int, k: int, seed: int) -> EdgeColoring:
    """Uniform random coloring over the first k colors; bit-identical per (n, k, seed)."""
    if k not in (2, 3):
        raise ValueError("k must be 2 or 3")
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    return EdgeColoring(n, bytes(rng.randrange(k) for _ in range(comb(n, 2))))


def move_delta(c: EdgeColoring, edge: int, x: Color) -> int:
    """Change in total monochromatic count if `edge` is recolored to x.

    O(n) given the per-color bit rows: the triangles gained are the common
    x-neighbors of the endpoints, the triangles lost are the common
    current-color neighbors.
    """
    if not 0 <= edge < len(c.colors):
        raise ValueError(f"edge ordinal {edge} out of range")
    cur = c.colors[edge]
    x = Color(x)
    if x == cur:
        raise ValueError("recoloring an edge with its current color is a no-op")
    u, v = edge_list(c.n)[edge]
    rows = bit_rows(c)
    gain = (rows[x][u] & rows[x][v]).bit_count()
    loss = (rows[cur][u] & rows[cur][v]).bit_count()
    return gain - loss


_BIG = 1 << 30


def _climb(start: EdgeColoring, k: int, steps_cap: int, sideways_limit: int):
    """Steepest-descent hill climb with plateau walking, from one coloring.

    Returns (best count, best coloring, candidate evaluations).  The numpy
    state is per-color adjacency plus common-neighbor counts, so one scan
    prices all E*(k-1) moves at once.  Improving steps take the steepest
    decrease, ties broken by lowest edge ordinal then color order (np.argmin
    over the (edge, color)-major delta table is exactly that rule).  Plateau
    steps instead recolor the least recently modified edge with a zero-delta
    move; a plateau walk that reused the ordinal rule would bounce between
    two states forever, while the staleness rule keeps it moving.
    """
    n = start.n
    edges = np.array(edge_list(n), dtype=np.intp)
    if len(edges) == 0:
        return 0, start, 0
    us, vs = edges[:, 0], edges[:, 1]
    num_edges = len(edges)
    cur = np.frombuffer(start.colors, dtype=np.uint8).astype(np.intp)
    adj = np.zeros((3, n, n), dtype=np.int32)
    adj[cur, us, vs] = 1
    adj[cur, vs, us] = 1
    common = adj @ adj  # common[x][a][b] = number of common x-neighbors
    total = int(common[cur, us, vs].sum()) // 3

    best_count = total
    best = cur.copy()
    evals = 0
    sideways_used = 0
    edge_ids = np.arange(num_edges)
    last_touched = np.full(num_edges, -1, dtype=np.int64)

    for step in range(steps_cap):
        gains = common[:, us, vs]  # (3, E)
        delta = gains.T - gains[cur, edge_ids][:, None]  # (E, 3)
        delta[edge_ids, cur] = _BIG
        if k < 3:
            delta[:, k:] = _BIG
        evals += num_edges * (k - 1)
        flat = int(np.argmin(delta))
        d = int(delta.flat[flat])
        if d > 0:
            break
        if d == 0:
            if sideways_used >= sideways_limit:
                break
            sideways_used += 1
            staleness = np.where(delta == 0, last_touched[:, None], _BIG)
            flat = int(np.argmin(staleness))
        e, x = divmod(flat, 3)
        c0 = int(cur[e])
        u, v = int(us[e]), int(vs[e])
        adj[c0, u, v] = adj[c0, v, u] = 0
        adj[x, u, v] = adj[x, v, u] = 1
        common[c0] = adj[c0] @ adj[c0]
        common[x] = adj[x] @ adj[x]
        cur[e] = x
        last_touched[e] = step
        total += d
        if total < best_count:
            best_count = total
            best = cur.copy()

    return best_count, EdgeColoring(n, best.astype(np.uint8).tobytes()), evals


def minimize(p: SearchParams) -> SearchResult:
    """Restart hill climbing; returns the best coloring over all restarts.

    The incumbent is merged by (count, restart index), so the reported best
    is the earliest restart that achieved the lowest count.
    """
    master = random.Random(p.seed)
    subseeds = [master.getrandbits(64) for _ in range(p.restarts)]
    best: EdgeColoring | None = None
    best_count = _BIG
    trace = []
    evals = 0
    for r in range(p.restarts):
        start = random_coloring(p.n, p.k, subseeds[r])
        count, coloring, ev = _climb(start, p.k, p.steps_per_restart, p.sideways_limit)
        trace.append(count)
        evals += ev
        if count < best_count:
            best_count = count
            best = coloring
    assert best is not None
    return SearchResult(best, best_count, tuple(trace), evals)


def _state_budget() -> int:
    raw = os.environ.get(STATE_BUDGET_ENV)
    if raw is None:
        return DEFAULT_STATE_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise BudgetError(f"{STATE_BUDGET_ENV} must be an integer, got {raw!r}")
    if value < 1:
        raise BudgetError(f"{STATE_BUDGET_ENV} must be positive")
    return value


def exhaustive_min(n: int, k: int) -> tuple[int, EdgeColoring]:
    """Exact minimum total monochromatic count over all k-colorings of K_n.

    Depth-first with branch-and-bound over edges in column order ((0,1),
    (0,2), (1,2), (0,3), ...), colors in order B < R < Y, first edge fixed to
    blue.  Returns the minimum and the first witness in that search order.
    Refuses instances whose raw state count k^C(n,2) exceeds the budget
    (default 2^25, overridable via the RAMSEY333_EXHAUSTIVE_BUDGET variable).
    """
    if k not in (2, 3):
        raise ValueError("k must be 2 or 3")
    if n < 1:
        raise ValueError("n must be positive")
    budget = _state_budget()
    states = k ** comb(n, 2)
    if states > budget:
        raise BudgetError(
            f"{k}^C({n},2) = {states} colorings exceed the budget of {budget}"
        )

    # Column order: all edges into vertex v come right after K_{v} is done,
    # so each assignment closes its triangles immediately.
    order = [(u, v) for v in range(1, n) for u in range(v)]
    m = len(order)
    ordinals = [edge_index(u, v, n) for u, v in order]
    rows = [[0] * n for _ in range(3)]
    colors = bytearray(m)
    best_count = states + 1  # above any possible count
    best_colors = None

    def dfs(idx: int, count: int) -> None:
        nonlocal best_count, best_colors
        if idx == m:
            best_count = count
            best_colors = bytes(colors)
            return
        u, v = order[idx]
        for x in range(k) if idx else (0,):  # first edge pinned to blue
            closed = count + (rows[x][u] & rows[x][v]).bit_count()
            if closed >= best_count:
                continue
            colors[idx] = x
            bit_u, bit_v = 1 << v, 1 << u
            rows[x][u] |= bit_u
            rows[x][v] |= bit_v
            dfs(idx + 1, closed)
            rows[x][u] &= ~bit_u
            rows[x][v] &= ~bit_v

    dfs(0, 0)
    assert best_colors is not None
    by_ordinal = bytearray(m)
    for idx, o in enumerate(ordinals):
        by_ordinal[o] = best_colors[idx]
    return best_count, EdgeColoring(n, bytes(by_ordinal))
