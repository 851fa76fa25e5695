"""Exhaustive, symmetry-reduced backtracking search for SEDFs in small groups.

Subsets are filled one after another, each in increasing element-rank order,
so intra-subset permutations never appear.  Inter-subset permutations are cut
by requiring the subsets' first elements (their minima) to increase, and
translation symmetry by pinning the first element of D_1 to the identity in
normalized mode.  Three prunes, none of which can remove a solution:

* cross cap: a tally cell that already exceeds lambda can only grow;
* internal cap: T_j[g] <= k - c_g(D_j), where c_g counts internal differences
  of D_j equal to g, so any c_g above k - lambda is fatal;
* completion bound: one placement raises a fixed tally cell by at most one,
  so a cell needing more than the remaining placements is dead;
* freeze budget: an unused element below a new subset's first element can
  never be used again, and at most v - mk elements may stay unused, so the
  first-element loops stop once the skipped-element budget is spent.

A finished assignment with no cell above lambda is automatically constant
(per-subset totals are pinned at (m-1)k^2), but every recorded solution is
re-checked explicitly so the pruning-disabled mode has identical semantics.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from typing import Optional

from sedf.groups import AbelianGroup
from sedf.verifier import Family, make_family

FOUND = "FOUND"
EXHAUSTED_NONE = "EXHAUSTED_NONE"
BUDGET_EXCEEDED = "BUDGET_EXCEEDED"

DEFAULT_NODE_BUDGET = 100_000_000
DEFAULT_TIME_BUDGET = 600.0
DEFAULT_ORDER_CAP = 64


@dataclass
class SearchSpec:
    group: AbelianGroup
    m: int
    k: int
    lam: Optional[int] = field(default=None, init=False)
    node_budget: int = DEFAULT_NODE_BUDGET
    time_budget: float = DEFAULT_TIME_BUDGET

    def __post_init__(self) -> None:
        v = self.group.order
        if self.m < 2 or self.k < 1 or self.m * self.k > v:
            raise ValueError(
                f"need m >= 2, k >= 1, mk <= v; got v={v}, m={self.m}, k={self.k}"
            )
        num = (self.m - 1) * self.k * self.k
        if v > 1 and num % (v - 1) == 0:
            self.lam = num // (v - 1)


@dataclass
class SearchResult:
    status: str
    families: list[Family]
    nodes: int


def _run_search(
    factors: tuple[int, ...],
    m: int,
    k: int,
    lam: int,
    normalized: bool,
    prune: bool,
    node_budget: int,
    time_budget: float,
    forced_second: Optional[int],
) -> tuple[bool, list[tuple[tuple[int, ...], ...]], int]:
    """Core DFS.  Returns (aborted, solutions as rank tuples, nodes used)."""
    group = AbelianGroup(factors)
    v = group.order
    ranked = [group.unrank(r) for r in range(v)]
    sub = [
        [group.rank(group.subtract(ranked[x], ranked[y])) for y in range(v)]
        for x in range(v)
    ]

    sets: list[list[int]] = [[] for _ in range(m)]
    used = [False] * v
    tallies = [[0] * v for _ in range(m)]
    internal = [[0] * v for _ in range(m)]
    below = [[0] * max(lam, 1) for _ in range(m)]
    for row in below:
        row[0] = v - 1
    int_cap = k - lam  # c_g(D_j) above this caps some tally below lambda
    needed = m * k
    waste_budget = v - needed  # elements allowed to stay unused
    state = {"placed": 0, "nodes": 0, "aborted": False, "frozen": 0}
    deadline = time.monotonic() + time_budget
    solutions: list[tuple[tuple[int, ...], ...]] = []

    INT, CROSS = 0, 1

    def tick() -> bool:
        state["nodes"] += 1
        if state["nodes"] > node_budget:
            state["aborted"] = True
        elif (state["nodes"] & 4095) == 0 and time.monotonic() > deadline:
            state["aborted"] = True
        return not state["aborted"]

    def _undo(touched: list[tuple[int, int, int]]) -> None:
        for kind, i, d in reversed(touched):
            if kind == INT:
                internal[i][d] -= 1
            else:
                t = tallies[i]
                c = t[d] = t[d] - 1
                if c < lam:
                    below[i][c] += 1
                    if c + 1 < lam:
                        below[i][c + 1] -= 1

    def place(e: int, j: int) -> Optional[list[tuple[int, int, int]]]:
        """Tally/counter updates for element e entering set j; None on a cap hit."""
        touched: list[tuple[int, int, int]] = []
        row_e = sub[e]
        cj = internal[j]
        for x in sets[j]:
            for d in (row_e[x], sub[x][e]):
                c = cj[d] + 1
                if prune and c > int_cap:
                    _undo(touched)
                    return None
                cj[d] = c
                touched.append((INT, j, d))
        tj = tallies[j]
        bj = below[j]
        for i in range(j):
            ti, bi = tallies[i], below[i]
            for y in sets[i]:
                d = row_e[y]
                c = tj[d]
                if prune and c >= lam:
                    _undo(touched)
                    return None
                tj[d] = c + 1
                if c < lam:
                    bj[c] -= 1
                    if c + 1 < lam:
                        bj[c + 1] += 1
                touched.append((CROSS, j, d))
                d2 = sub[y][e]
                c2 = ti[d2]
                if prune and c2 >= lam:
                    _undo(touched)
                    return None
                ti[d2] = c2 + 1
                if c2 < lam:
                    bi[c2] -= 1
                    if c2 + 1 < lam:
                        bi[c2 + 1] += 1
                touched.append((CROSS, i, d2))
        used[e] = True
        sets[j].append(e)
        state["placed"] += 1
        return touched

    def unplace(e: int, j: int, touched: list[tuple[int, int, int]]) -> None:
        used[e] = False
        sets[j].pop()
        state["placed"] -= 1
        _undo(touched)

    def completion_blocked() -> bool:
        slots = needed - state["placed"]
        if slots >= lam:
            return False
        floor = lam - slots
        for row in below:
            for c in range(floor):
                if row[c]:
                    return True
        return False

    def record() -> None:
        for j in range(m):
            t = tallies[j]
            if t[0] != 0 or any(t[r] != lam for r in range(1, v)):
                return
        solutions.append(tuple(tuple(s) for s in sets))

    def descend(j: int, cnt: int) -> None:
        if state["aborted"]:
            return
        if cnt == k:
            if j == m - 1:
                record()
                return
            jj = j + 1
            need_after = (m - jj) * k - 1
            frozen = state["frozen"]
            skipped = 0
            for f in range(sets[j][0] + 1, v - need_after):
                if used[f]:
                    continue
                if frozen + skipped > waste_budget:
                    break
                if not tick():
                    return
                state["frozen"] = frozen + skipped
                touched = place(f, jj)
                if touched is not None:
                    if not (prune and completion_blocked()):
                        descend(jj, 1)
                    unplace(f, jj, touched)
                if state["aborted"]:
                    return
                skipped += 1
            state["frozen"] = frozen
            return
        lo = sets[j][-1] + 1
        hi = v - (k - cnt - 1)
        if j == 0 and cnt == 1 and forced_second is not None:
            lo, hi = forced_second, forced_second + 1
        for e in range(lo, hi):
            if used[e]:
                continue
            if not tick():
                return
            touched = place(e, j)
            if touched is not None:
                if not (prune and completion_blocked()):
                    descend(j, cnt + 1)
                unplace(e, j, touched)
            if state["aborted"]:
                return

    start_max = 1 if normalized else min(v - (needed - 1), waste_budget + 1)
    for f0 in range(start_max):
        if state["aborted"]:
            break
        if not tick():
            break
        state["frozen"] = f0  # everything below the family minimum stays unused
        touched = place(f0, 0)
        if touched is not None:
            descend(0, 1)
            unplace(f0, 0, touched)
    return state["aborted"], solutions, state["nodes"]


def _worker_count(workers: Optional[int]) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("SEDF_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _worker_entry(args) -> tuple[bool, list[tuple[tuple[int, ...], ...]], int]:
    return _run_search(*args)


def exhaustive_search(
    spec: SearchSpec,
    *,
    normalized: bool = True,
    prune: bool = True,
    workers: Optional[int] = None,
) -> SearchResult:
    """Search the whole (symmetry-reduced) space for one (m, k) in one group.

    EXHAUSTED_NONE certifies nonexistence up to the verified symmetries;
    BUDGET_EXCEEDED never does.  A non-integral derived lambda makes the spec
    vacuously unsatisfiable.  With more than one worker the branches on the
    second element of D_1 run in parallel (each with the full per-branch
    budget) and results are merged in branch order.
    """
    if spec.lam is None or spec.lam < 1:
        return SearchResult(EXHAUSTED_NONE, [], 0)
    group = spec.group
    v = group.order
    nproc = _worker_count(workers)
    base = (
        group.factors,
        spec.m,
        spec.k,
        spec.lam,
        normalized,
        prune,
        spec.node_budget,
        spec.time_budget,
    )
    if nproc > 1 and normalized and spec.k >= 2 and v > 2:
        import multiprocessing

        jobs = [base + (x,) for x in range(1, v)]
        with multiprocessing.Pool(processes=nproc) as pool:
            parts = pool.map(_worker_entry, jobs)
        aborted = any(p[0] for p in parts)
        raw = [sol for p in parts for sol in p[1]]
        nodes = sum(p[2] for p in parts)
    else:
        aborted, raw, nodes = _run_search(*base, None)
    raw.sort()
    families = [
        make_family(group, [[group.unrank(r) for r in s] for s in sol]) for sol in raw
    ]
    if aborted:
        return SearchResult(BUDGET_EXCEEDED, families, nodes)
    return SearchResult(FOUND if families else EXHAUSTED_NONE, families, nodes)


def search_all(
    group: AbelianGroup,
    *,
    order_cap: int = DEFAULT_ORDER_CAP,
    node_budget: int = DEFAULT_NODE_BUDGET,
    time_budget: float = DEFAULT_TIME_BUDGET,
    workers: Optional[int] = None,
) -> list[tuple[SearchSpec, SearchResult]]:
    """Run every (m, k) with m >= 2, k >= 1, mk <= v and integral lambda."""
    v = group.order
    if v > order_cap:
        raise ValueError(f"group order {v} exceeds the configured cap {order_cap}")
    out = []
    for m in range(2, v + 1):
        for k in range(1, v // m + 1):
            spec = SearchSpec(group, m, k, node_budget=node_budget, time_budget=time_budget)
            if spec.lam is None:
                continue
            out.append((spec, exhaustive_search(spec, workers=workers)))
    return out
