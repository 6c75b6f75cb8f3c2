"""Exhaustive branch and bound for scp, cp, S(n, m) and S'(n, m) on small graphs.

The search repeatedly takes the lexicographically smallest uncovered edge
and branches over every clique of still-uncovered edges that contains it
(larger cliques first, then lexicographic). The only pruning rule is the
admissible bound

* sigma:  cost + ceil(2 E_rem / (omega - 1))
* count:  cost + ceil(E_rem / C(omega, 2))

where omega is the largest usable clique size (the graph's clique number,
capped by ``clique_cap``). The incumbent starts as the partition into single
edges, so a witness always exists even when the node budget runs out.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from .design import Design
from .graphs import CliquePartition, Graph, brute_force_clique_number, complete_graph, complete_minus_clique

__all__ = [
    "SolverLimits",
    "SolverResult",
    "SolverCapExceeded",
    "Infeasible",
    "exact_scp",
    "exact_cp",
    "exact_S",
    "exact_S_prime",
    "DEFAULT_SOLVER_CAP",
    "CAP_ENV",
]

DEFAULT_SOLVER_CAP = 10
CAP_ENV = "PBDKIT_SOLVER_CAP"


class SolverCapExceeded(ValueError):
    pass


class Infeasible(ValueError):
    pass


def _default_cap():
    raw = os.environ.get(CAP_ENV)
    return int(raw) if raw else DEFAULT_SOLVER_CAP


@dataclass(frozen=True)
class SolverLimits:
    """``max_vertices`` defaults to $PBDKIT_SOLVER_CAP or 10. Larger graphs
    are accepted only with an explicit ``node_budget``."""

    max_vertices: int = field(default_factory=_default_cap)
    node_budget: int | None = None
    clique_cap: int | None = None
    all_optima: bool = False
    threads: int = 1


@dataclass
class SolverResult:
    optimum: int
    witness: object
    nodes_explored: int
    proved_optimal: bool
    objective: str
    all_witnesses: list | None = None


class _Search:
    def __init__(self, n, rows, objective, cap, budget, all_optima):
        self.n = n
        self.objective = objective
        self.cap = cap
        self.budget = budget
        self.all_optima = all_optima
        self.nodes = 0
        self.exhausted = False
        self.best = None
        self.best_cliques = None
        self.optima = []
        edges = sum(bin(r).count("1") for r in rows) // 2
        self.edges = edges
        self.rows = list(rows)

    def lower(self, cost, e_rem):
        w = self.cap
        if e_rem == 0:
            return cost
        if self.objective == "sigma":
            return cost + -(-2 * e_rem // (w - 1))
        return cost + -(-e_rem // comb(w, 2))

    def trivial(self):
        cliques = []
        for a in range(self.n):
            r = self.rows[a] >> (a + 1)
            b = a + 1
            while r:
                if r & 1:
                    cliques.append((a, b))
                r >>= 1
                b += 1
        value = 2 * len(cliques) if self.objective == "sigma" else len(cliques)
        return value, cliques

    def offer(self, value, cliques):
        if self.best is None or value < self.best:
            self.best = value
            self.best_cliques = list(cliques)
            self.optima = [tuple(sorted(cliques))]
        elif value == self.best and self.all_optima:
            key = tuple(sorted(cliques))
            if key not in self.optima:
                self.optima.append(key)

    def prunes(self, bound):
        if self.best is None:
            return False
        return bound > self.best if self.all_optima else bound >= self.best

    def branches(self, rows):
        """(u, v, cliques through uv) for the smallest uncovered edge."""
        u = next(i for i, r in enumerate(rows) if r)
        v = (rows[u] & -rows[u]).bit_length() - 1
        out = []
        limit = self.cap - 2

        def extend(chosen, cand):
            out.append(chosen)
            if len(chosen) == limit:
                return
            while cand:
                low = cand & -cand
                i = low.bit_length() - 1
                cand ^= low
                extend(chosen + (i,), cand & rows[i])

        extend((), rows[u] & rows[v])
        cliques = [tuple(sorted((u, v) + s)) for s in out]
        cliques.sort(key=lambda c: (-len(c), c))
        return cliques

    def apply(self, rows, clique):
        rows = list(rows)
        for a in clique:
            mask = 0
            for b in clique:
                if b != a:
                    mask |= 1 << b
            rows[a] &= ~mask
        return rows

    def cost_of(self, clique):
        return len(clique) if self.objective == "sigma" else 1

    def dfs(self, rows, cost, e_rem, chosen):
        if self.exhausted:
            return
        if e_rem == 0:
            self.offer(cost, chosen)
            return
        if self.prunes(self.lower(cost, e_rem)):
            return
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            self.exhausted = True
            return
        for c in self.branches(rows):
            chosen.append(c)
            self.dfs(self.apply(rows, c), cost + self.cost_of(c), e_rem - comb(len(c), 2), chosen)
            chosen.pop()
            if self.exhausted:
                return


def _rows_of(g: Graph):
    rows = [0] * g.n
    for a, b in g.edges:
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return rows


def _run_branch(args):
    n, rows, objective, cap, budget, all_optima, first = args
    s = _Search(n, rows, objective, cap, budget, all_optima)
    s.offer(*s.trivial())
    s.optima = [] if not all_optima else s.optima
    trivial_value = s.best
    rows2 = s.apply(rows, first)
    s.dfs(rows2, s.cost_of(first), s.edges - comb(len(first), 2), [first])
    improved = s.best < trivial_value or (all_optima and s.optima)
    return s.best, s.best_cliques, s.optima, s.nodes, s.exhausted, improved


def _solve(g: Graph, objective: str, limits: SolverLimits) -> SolverResult:
    if g.n > limits.max_vertices and limits.node_budget is None:
        raise SolverCapExceeded(
            f"{g.n} vertices exceeds the solver cap {limits.max_vertices}; pass a node budget to override"
        )
    rows = _rows_of(g)
    omega = brute_force_clique_number(g) if g.edges else 2
    cap = omega if limits.clique_cap is None else min(omega, limits.clique_cap)
    if limits.clique_cap is not None and limits.clique_cap < 2:
        raise Infeasible("clique cap below 2 cannot cover any edge")
    search = _Search(g.n, rows, objective, max(cap, 2), limits.node_budget, limits.all_optima)
    search.offer(*search.trivial())
    if not g.edges:
        return SolverResult(0, CliquePartition(), 0, True, objective, [CliquePartition()] if limits.all_optima else None)

    if limits.threads > 1:
        _solve_parallel(search, limits)
    else:
        search.dfs(rows, 0, search.edges, [])

    witness = CliquePartition(search.best_cliques)
    all_w = [CliquePartition(w) for w in sorted(search.optima)] if limits.all_optima else None
    return SolverResult(search.best, witness, search.nodes, not search.exhausted, objective, all_w)


def _solve_parallel(search: _Search, limits: SolverLimits):
    """Explore root branches in worker processes.

    Each branch is searched against the single-edge incumbent only, and
    results are merged in root-branch order, so the reported witness is the
    one a sequential run finds.
    """
    rows = search.rows
    firsts = search.branches(rows)
    jobs = [
        (search.n, rows, search.objective, search.cap, limits.node_budget, limits.all_optima, c) for c in firsts
    ]
    with ProcessPoolExecutor(max_workers=limits.threads) as pool:
        results = list(pool.map(_run_branch, jobs))
    search.nodes = 1 + sum(r[3] for r in results)
    search.exhausted = any(r[4] for r in results)
    for best, cliques, optima, _, _, improved in results:
        if not improved:
            continue
        if limits.all_optima:
            for w in optima:
                search.offer(best, list(w))
        else:
            search.offer(best, cliques)


def exact_scp(g: Graph, limits: SolverLimits | None = None) -> SolverResult:
    """Minimum sum of clique sizes over all clique partitions of ``g``."""
    return _solve(g, "sigma", limits or SolverLimits())


def exact_cp(g: Graph, limits: SolverLimits | None = None) -> SolverResult:
    """Minimum number of cliques in a clique partition of ``g``."""
    return _solve(g, "block_count", limits or SolverLimits())


def _with(limits, **changes):
    base = limits or SolverLimits()
    return SolverLimits(**{**base.__dict__, **changes})


def exact_S(n: int, m: int, limits: SolverLimits | None = None, exactly: bool = True) -> SolverResult:
    """Minimum sigma of a PBD on n points whose largest block has size m.

    With ``exactly`` the block ``{n-m, ..., n-1}`` is fixed (any PBD with a
    size-m block is isomorphic to one containing it) and the rest is a clique
    partition of K_n - K_m into cliques of size at most m. Without it, the
    largest block is only required to be at most m.
    """
    if not 2 <= m <= n:
        raise Infeasible(f"no PBD on {n} points has largest block {m}")
    if not exactly:
        res = _solve(complete_graph(n), "sigma", _with(limits, clique_cap=m))
        return _as_design(n, res, None)
    res = _solve(complete_minus_clique(n, m), "sigma", _with(limits, clique_cap=m))
    return _as_design(n, res, tuple(range(n - m, n)))


def exact_S_prime(n: int, m: int, limits: SolverLimits | None = None) -> SolverResult:
    """Minimum sigma of a PBD on n points with some block of size m."""
    if not 2 <= m <= n:
        raise Infeasible(f"no PBD on {n} points has a block of size {m}")
    res = _solve(complete_minus_clique(n, m), "sigma", _with(limits, clique_cap=None))
    return _as_design(n, res, tuple(range(n - m, n)))


def _as_design(n, res: SolverResult, block):
    extra = [block] if block else []
    offset = len(block) if block else 0

    def design(p):
        return Design(n, extra + list(p.cliques))

    return SolverResult(
        res.optimum + offset,
        design(res.witness),
        res.nodes_explored,
        res.proved_optimal,
        "sigma",
        [design(w) for w in res.all_witnesses] if res.all_witnesses is not None else None,
    )
