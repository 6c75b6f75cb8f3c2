"""Graph families and clique partitions.

Removed structures sit at canonical positions: the clique of K_n - K_m on
vertices ``n-m .. n-1``, the path ``0-1-...-(n-1)``, the cycle closing it with
``(n-1, 0)``, and the cocktail-party matching ``{0,1}, {2,3}, ...``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .design import ValidationReport, Violation

__all__ = [
    "Graph",
    "CliquePartition",
    "ExplicitFamilyUnsupported",
    "complete_graph",
    "complete_minus_clique",
    "complement_path",
    "complement_cycle",
    "cocktail_party",
    "explicit_graph",
    "graph_from_family",
    "validate_partition",
    "partition_sigma",
    "partition_valencies",
    "clique_number_closed_form",
    "brute_force_clique_number",
]


class ExplicitFamilyUnsupported(ValueError):
    pass


def _edge(a, b):
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset
    family: tuple = ("explicit",)

    def __post_init__(self):
        es = frozenset(_edge(int(a), int(b)) for a, b in self.edges)
        for a, b in es:
            if a == b or a < 0 or b >= self.n:
                raise ValueError(f"bad edge ({a}, {b}) for n={self.n}")
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "family", tuple(self.family))

    def has_edge(self, a: int, b: int) -> bool:
        return _edge(a, b) in self.edges

    def adjacency(self) -> list[set]:
        adj = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def sorted_edges(self) -> list[tuple]:
        return sorted(self.edges)

    def is_clique(self, vertices: Sequence[int]) -> bool:
        return all(_edge(a, b) in self.edges for a, b in combinations(vertices, 2))


@dataclass(frozen=True)
class CliquePartition:
    """Cliques as sorted vertex tuples, listed in canonical (sorted) order."""

    cliques: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "cliques", tuple(sorted(tuple(sorted(c)) for c in self.cliques)))

    def __len__(self):
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)


def _complement_of(n, removed, family):
    removed = {_edge(a, b) for a, b in removed}
    return Graph(n, frozenset(e for e in combinations(range(n), 2) if e not in removed), family)


def complete_graph(n: int) -> Graph:
    return complete_minus_clique(n, 0)


def complete_minus_clique(n: int, m: int) -> Graph:
    if not 0 <= m <= n:
        raise ValueError(f"0 <= m <= n required, got n={n}, m={m}")
    return _complement_of(n, combinations(range(n - m, n), 2), ("complete_minus_clique", n, m))


def complement_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("n >= 1 required")
    return _complement_of(n, [(i, i + 1) for i in range(n - 1)], ("complement_path", n))


def complement_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("n >= 3 required")
    return _complement_of(n, [(i, (i + 1) % n) for i in range(n)], ("complement_cycle", n))


def cocktail_party(n: int) -> Graph:
    """K_n minus the matching {0,1},{2,3},...; for odd n, vertex n-1 is unmatched."""
    if n < 1:
        raise ValueError("n >= 1 required")
    return _complement_of(n, [(i, i + 1) for i in range(0, n - 1, 2)], ("cocktail_party", n))


def explicit_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    return Graph(n, frozenset(tuple(e) for e in edges), ("explicit",))


_FAMILIES = {
    "complete_minus_clique": complete_minus_clique,
    "complement_path": complement_path,
    "complement_cycle": complement_cycle,
    "cocktail_party": cocktail_party,
}


def graph_from_family(name: str, *params: int) -> Graph:
    try:
        return _FAMILIES[name](*params)
    except KeyError:
        raise ValueError(f"unknown graph family {name!r}") from None


def validate_partition(g: Graph, p: CliquePartition | Iterable[Sequence[int]]) -> ValidationReport:
    cliques = [tuple(c) for c in (p.cliques if isinstance(p, CliquePartition) else p)]
    report = ValidationReport(is_nontrivial=True, is_near_pencil=False)
    counts = Counter()
    for i, c in enumerate(cliques):
        if len(c) < 2 or len(set(c)) != len(c) or min(c) < 0 or max(c) >= g.n:
            report.violations.append(Violation("StructuralViolation", c, f"clique {i} is malformed"))
            continue
        pairs = [_edge(a, b) for a, b in combinations(c, 2)]
        missing = [e for e in pairs if e not in g.edges]
        if missing:
            report.violations.append(Violation("NonCliqueBlock", c, f"non-edges {missing[:3]}"))
        counts.update(e for e in pairs if e in g.edges)
    for e in g.sorted_edges():
        k = counts.get(e, 0)
        if k == 0:
            report.violations.append(Violation("EdgeUncovered", e))
        elif k > 1:
            report.violations.append(Violation("EdgeDuplicated", e, f"covered {k} times"))
    return report


def partition_valencies(n: int, p: CliquePartition) -> list[int]:
    r = [0] * n
    for c in p.cliques:
        for x in c:
            r[x] += 1
    return r


def partition_sigma(p: CliquePartition | Iterable[Sequence[int]]) -> int:
    cliques = p.cliques if isinstance(p, CliquePartition) else list(p)
    total = sum(len(c) for c in cliques)
    if cliques:
        n = max(max(c) for c in cliques) + 1
        assert sum(partition_valencies(n, CliquePartition(cliques))) == total
    return total


def clique_number_closed_form(g: Graph) -> int:
    kind = g.family[0]
    if kind == "complete_minus_clique":
        n, m = g.family[1:]
        return n if m <= 1 else n - m + 1
    if kind == "complement_path" or kind == "cocktail_party":
        return (g.n + 1) // 2
    if kind == "complement_cycle":
        return g.n // 2
    raise ExplicitFamilyUnsupported(f"no closed form for family {g.family!r}")


def brute_force_clique_number(g: Graph) -> int:
    """Maximum clique size by simple branch and bound; intended for n <= ~30."""
    adj = g.adjacency()
    best = 1 if g.n else 0

    def grow(size, cand):
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        for v in sorted(cand):
            if size + len(cand) <= best:
                return
            grow(size + 1, cand & adj[v])
            cand = cand - {v}

    grow(0, set(range(g.n)))
    return best
