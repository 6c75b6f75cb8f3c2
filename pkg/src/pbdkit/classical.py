"""Generators for classical designs.

Indexing conventions (fixed so that outputs are canonical):

* AG(2, q): the point ``(x, y)`` over GF(q) has index ``x * q + y``.
  Parallel classes are listed by slope ``0, 1, ..., q-1`` (field element
  encodings) and then the vertical class.
* PG(2, q): points are homogeneous triples normalised so that the first
  nonzero coordinate is 1, indexed in lexicographic order of the triples.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from itertools import combinations

from .algebra import DEFAULT_FIELD_CAP, PrimePower, gf_construct
from .design import Design, Resolution, resolution_from_blocks, validate_pbd, verify_resolution

__all__ = [
    "EdgeColoring",
    "OddOrder",
    "TooFewClasses",
    "UnsupportedK",
    "CongruenceFailure",
    "SearchExhausted",
    "affine_plane",
    "projective_plane",
    "one_factorization",
    "proper_edge_coloring_complete",
    "resolvable_design",
    "augmented_affine_plane",
    "DEFAULT_KTS_SEARCH_CAP",
]

DEFAULT_KTS_SEARCH_CAP = 27
DEFAULT_KTS_NODE_BUDGET = 2_000_000


class OddOrder(ValueError):
    pass


class TooFewClasses(ValueError):
    pass


class UnsupportedK(ValueError):
    pass


class CongruenceFailure(ValueError):
    pass


class SearchExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class EdgeColoring:
    """A partition of the edges of K_v into matchings (some possibly empty)."""

    v: int
    classes: tuple

    def __post_init__(self):
        object.__setattr__(
            self,
            "classes",
            tuple(tuple(sorted(tuple(sorted(e)) for e in cls)) for cls in self.classes),
        )

    def is_proper(self) -> bool:
        edges = [e for cls in self.classes for e in cls]
        if sorted(edges) != list(combinations(range(self.v), 2)):
            return False
        for cls in self.classes:
            pts = [x for e in cls for x in e]
            if len(pts) != len(set(pts)):
                return False
        return True


def _field(q, cap):
    return gf_construct(q, cap=cap)


def affine_plane(q: int | PrimePower, cap: int = DEFAULT_FIELD_CAP) -> tuple[Design, Resolution]:
    F = _field(q, cap)
    q = F.q
    classes = []
    for s in range(q):
        cls = []
        for b in range(q):
            # y = s*x + b
            cls.append([x * q + F.add(F.mul(s, x), b) for x in range(q)])
        classes.append(cls)
    classes.append([[c * q + y for y in range(q)] for c in range(q)])
    d = Design(q * q, [b for cls in classes for b in cls])
    return d, resolution_from_blocks(d, classes)


def _pg_points(F):
    q = F.q
    pts = [(0, 0, 1)]
    pts += [(0, 1, z) for z in range(q)]
    pts += [(1, y, z) for y in range(q) for z in range(q)]
    return pts


def projective_plane(q: int | PrimePower, cap: int = DEFAULT_FIELD_CAP) -> Design:
    F = _field(q, cap)
    pts = _pg_points(F)
    mul, add = F.mul, F.add
    blocks = []
    for a, b, c in pts:
        blocks.append(
            [i for i, (x, y, z) in enumerate(pts) if add(add(mul(a, x), mul(b, y)), mul(c, z)) == 0]
        )
    return Design(len(pts), blocks)


def one_factorization(v: int) -> EdgeColoring:
    """Circle method: vertex v-1 is the hub, the rest rotate."""
    if v < 2 or v % 2:
        raise OddOrder(f"a 1-factorization of K_v needs even v >= 2, got {v}")
    m = v - 1
    classes = []
    for r in range(m):
        cls = [(r, m)]
        for i in range(1, v // 2):
            cls.append(((r + i) % m, (r - i) % m))
        classes.append(cls)
    return EdgeColoring(v, classes)


def proper_edge_coloring_complete(v: int, target_classes: int) -> EdgeColoring:
    """Proper edge colouring of K_v with exactly ``target_classes`` classes.

    Odd v: class i is the near-perfect matching ``{a, b}`` with
    ``a + b = 2i (mod v)``, which misses vertex i. Even v: a 1-factorization.
    Extra classes are empty.
    """
    if v < 0:
        raise ValueError("v must be non-negative")
    if v % 2:
        base = [
            [(a, b) for a, b in combinations(range(v), 2) if (a + b - 2 * i) % v == 0] for i in range(v)
        ]
    elif v == 0:
        base = []
    else:
        base = [list(c) for c in one_factorization(v).classes]
    if target_classes < len(base):
        raise TooFewClasses(f"K_{v} needs at least {len(base)} colours, asked for {target_classes}")
    return EdgeColoring(v, base + [[] for _ in range(target_classes - len(base))])


def _load_fixture(v):
    try:
        text = resources.files("pbdkit.data").joinpath(f"kts_{v}.json").read_text()
    except FileNotFoundError:
        return None
    doc = json.loads(text)
    return doc["classes"]


class _OrbitSearch:
    """Backtracking for a base parallel class whose translates under Z_t,
    together with orbits of transversal triples, resolve a (v, 3, 1) design.

    A point is ``(x, side)`` with ``x`` in Z_t, or ``None`` for a fixed point
    at infinity. Pairs fall into orbits under translation; every orbit must be
    used exactly once.
    """

    def __init__(self, t, sides, infinity, budget):
        self.t, self.sides, self.budget = t, sides, budget
        self.points = ([None] if infinity else []) + [(x, s) for s in range(sides) for x in range(t)]
        self.used = set()
        self.nodes = 0

    def key(self, a, b):
        if a is None or b is None:
            return ("inf", (b if a is None else a)[1])
        (x, s), (y, u) = a, b
        if s == u:
            d = (y - x) % self.t
            return ("pure", s, min(d, self.t - d))
        if s > u:
            (x, s), (y, u) = (y, u), (x, s)
        return ("mixed", s, u, (y - x) % self.t)

    def keys(self, a, b, c):
        ks = (self.key(a, b), self.key(a, c), self.key(b, c))
        if len(set(ks)) < 3 or self.used.intersection(ks):
            return None
        return ks

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchExhausted(f"no resolvable design found within {self.budget} nodes")

    def base_class(self, free, then):
        if not free:
            return then()
        self.tick()
        a, rest = free[0], free[1:]
        for i, b in enumerate(rest):
            for c in rest[i + 1:]:
                ks = self.keys(a, b, c)
                if ks is None:
                    continue
                self.used.update(ks)
                self.base.append((a, b, c))
                if self.base_class([w for w in rest if w != b and w != c], then):
                    return True
                self.base.pop()
                self.used.difference_update(ks)
        return False

    def transversals(self, count, found):
        if len(found) == count:
            self.trans = list(found)
            return True
        self.tick()
        last = found[-1] if found else (-1, -1)
        for a in range(self.t):
            for b in range(self.t):
                if (a, b) <= last:
                    continue
                ks = self.keys((0, 0), (a, 1), (b, 2))
                if ks is None:
                    continue
                self.used.update(ks)
                if self.transversals(count, found + [(a, b)]):
                    return True
                self.used.difference_update(ks)
        return False

    def run(self, n_transversals):
        self.base, self.trans = [], []
        return self.base_class(self.points, lambda: self.transversals(n_transversals, []))


def _kts_search(v, budget):
    """Resolvable (v, 3, 1) designs from two orbit-based searches.

    First Z_p acting on Z_p x {0,1,2} (v = 3p): one base class developed
    mod p plus (p-1)/2 parallel classes that are orbits of a transversal
    triple. Then, when t = (v-1)/2 is odd, a 1-rotational search on
    {inf} + Z_t x {0,1}: one base class developed mod t. Both are
    deterministic and share one node budget.
    """
    p, t = v // 3, (v - 1) // 2
    search = _OrbitSearch(p, 3, False, budget)
    if search.run((p - 1) // 2):
        idx = {(x, s): s * p + x for s in range(3) for x in range(p)}
        classes = [
            [sorted(idx[((x + i) % p, s)] for x, s in tri) for tri in search.base] for i in range(p)
        ]
        for a, b in search.trans:
            classes.append([sorted((idx[(i, 0)], idx[((a + i) % p, 1)], idx[((b + i) % p, 2)])) for i in range(p)])
        return classes
    spent = search.nodes
    if t % 2:
        search = _OrbitSearch(t, 2, True, budget - spent)
        if search.run(0):
            idx = {None: v - 1}
            idx.update({(x, s): s * t + x for s in range(2) for x in range(t)})

            def shift(pt, i):
                return None if pt is None else ((pt[0] + i) % t, pt[1])

            return [[sorted(idx[shift(pt, i)] for pt in tri) for tri in search.base] for i in range(t)]
    raise SearchExhausted(f"orbit searches found no resolvable ({v},3,1) design")


def resolvable_design(
    v: int,
    k: int,
    search_cap: int = DEFAULT_KTS_SEARCH_CAP,
    node_budget: int = DEFAULT_KTS_NODE_BUDGET,
) -> tuple[Design, Resolution]:
    """A resolvable (v, k, 1)-BIBD for k in {2, 3}."""
    if k not in (2, 3):
        raise UnsupportedK(f"resolvable designs are only built for k in {{2, 3}}, got k={k}")
    if v % k or (v - 1) % (k - 1):
        raise CongruenceFailure(f"(v={v}, k={k}) needs v = 0 mod {k} and v - 1 = 0 mod {k - 1}")
    if k == 2:
        classes = [list(c) for c in one_factorization(v).classes]
    else:
        classes = _load_fixture(v)
        if classes is None:
            if v > search_cap:
                raise SearchExhausted(f"v={v} exceeds the k=3 search cap {search_cap}")
            classes = _kts_search(v, node_budget)
    d = Design(v, [b for cls in classes for b in cls])
    res = resolution_from_blocks(d, classes)
    if not (validate_pbd(d).ok and verify_resolution(d, res)):
        raise AssertionError(f"resolvable ({v},{k},1) design failed validation")
    return d, res


def augmented_affine_plane(q: int | PrimePower, cap: int = DEFAULT_FIELD_CAP) -> Design:
    """AG(2, q) with a new point q**2 added to every block of the slope-0 class."""
    d, res = affine_plane(q, cap)
    extra = d.n
    grown = set(res.classes[0])
    blocks = [b + (extra,) if i in grown else b for i, b in enumerate(d.blocks)]
    return Design(d.n + 1, blocks)
