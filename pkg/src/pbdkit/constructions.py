"""Explicit PBDs and clique partitions with certified sigma values.

Every builder returns a :class:`ConstructionCertificate` whose object has
already been validated. ``kind == "equality"`` certificates meet their bound
exactly; ``kind == "upper"`` ones satisfy ``achieved_sigma <= claimed``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from math import isqrt

from .algebra import is_prime, next_prime_power_at_least
from .bounds import BoundValue, DomainError, HypothesisViolated, bound_C, fmt_fraction
from .classical import (
    UnsupportedK,
    augmented_affine_plane,
    affine_plane,
    projective_plane,
    proper_edge_coloring_complete,
    resolvable_design,
)
from .design import Design, sigma, validate_pbd
from .graphs import (
    CliquePartition,
    Graph,
    cocktail_party,
    complement_cycle,
    complement_path,
    complete_minus_clique,
    partition_sigma,
    validate_partition,
)
from .io import write_design, write_partition

__all__ = [
    "ConstructionCertificate",
    "near_pencil",
    "pbdC_equality",
    "thm24_tight",
    "trivial_knkm",
    "truncated_design_partition",
    "scp_upper_prime",
    "scp_upper_sqrt",
    "resolvable_cn_partition",
    "complement_path_partition",
    "complement_cycle_partition",
    "cocktail_party_partition",
    "write_certificate",
]


@dataclass
class ConstructionCertificate:
    object: Design | CliquePartition
    claimed_sigma_bound: BoundValue
    achieved_sigma: int
    construction: str
    parameters: dict
    kind: str = "upper"
    graph: Graph | None = None
    notes: dict = field(default_factory=dict)

    def validate(self):
        if isinstance(self.object, Design):
            return validate_pbd(self.object)
        return validate_partition(self.graph, self.object)

    def holds(self) -> bool:
        """Object is valid and its sigma relates to the claim as promised."""
        if not self.validate().ok:
            return False
        if self.kind == "equality":
            return self.achieved_sigma == self.claimed_sigma_bound.exact
        return self.achieved_sigma <= self.claimed_sigma_bound.exact

    def metadata(self) -> dict:
        return {
            "certificate": {
                "construction": self.construction,
                "parameters": dict(self.parameters),
                "kind": self.kind,
                "claimed_bound": fmt_fraction(self.claimed_sigma_bound.exact),
                "bound_source": self.claimed_sigma_bound.source,
                "achieved_sigma": self.achieved_sigma,
            }
        }


def _certify(cert: ConstructionCertificate) -> ConstructionCertificate:
    report = cert.validate()
    if not report.ok:
        raise AssertionError(f"{cert.construction} produced an invalid object:\n{report.summary()}")
    if not cert.holds():
        raise AssertionError(
            f"{cert.construction}: sigma {cert.achieved_sigma} breaks claim {cert.claimed_sigma_bound}"
        )
    return cert


def write_certificate(cert: ConstructionCertificate, path) -> None:
    if isinstance(cert.object, Design):
        write_design(cert.object, path, metadata=cert.metadata())
    else:
        write_partition(cert.graph, cert.object, path, metadata=cert.metadata())


# -- PBD constructions --------------------------------------------------------


def near_pencil(n: int) -> ConstructionCertificate:
    if n < 3:
        raise DomainError("n >= 3 required")
    d = Design(n, [tuple(range(n - 1))] + [(i, n - 1) for i in range(n - 1)])
    return _certify(
        ConstructionCertificate(d, BoundValue.of(3 * n - 3, "dBE"), sigma(d), "near-pencil", {"n": n}, "equality")
    )


def pbdC_equality(n: int, k: int) -> ConstructionCertificate:
    """PBD with block {0..k-1} meeting bound C with equality (k >= n/2).

    Colour class i of a proper edge colouring of K_{n-k} (on points k..n-1)
    is extended by point i of the big block; leftover pairs become 2-blocks.
    """
    if not (2 * k >= n and 2 <= k <= n - 1):
        raise DomainError(f"n/2 <= k <= n-1 required, got n={n}, k={k}")
    rest = n - k
    coloring = proper_edge_coloring_complete(rest, rest)
    blocks = [tuple(range(k))]
    covered = set()
    for i, cls in enumerate(coloring.classes):
        for a, b in cls:
            blocks.append((i, k + a, k + b))
            covered.update({(i, k + a), (i, k + b)})
    blocks += [(x, y) for x in range(k) for y in range(k, n) if (x, y) not in covered]
    d = Design(n, blocks)
    return _certify(
        ConstructionCertificate(d, bound_C(n, k), sigma(d), "pbdc", {"n": n, "k": k}, "equality")
    )


def thm24_tight(q: int) -> ConstructionCertificate:
    """Affine plane of order q with one parallel class extended by a new point."""
    d = augmented_affine_plane(q)
    n = d.n
    claim = BoundValue.of(n * (isqrt(n) + 1) - 1, "large-block-free")
    return _certify(ConstructionCertificate(d, claim, sigma(d), "thm24", {"q": q}, "equality"))


# -- clique partitions of K_n - K_m -------------------------------------------


def trivial_knkm(n: int, m: int) -> ConstructionCertificate:
    """One clique on vertices 0..n-m plus single edges to the rest of K_m."""
    if not 2 <= m <= n - 1:
        raise DomainError(f"2 <= m <= n-1 required, got n={n}, m={m}")
    big = tuple(range(n - m + 1))
    cliques = [big] + [(x, y) for y in range(n - m + 1, n) for x in range(n - m)]
    p = CliquePartition(cliques)
    claim = BoundValue.of((2 * m - 1) * (n - m) + 1, "knkm-upper")
    return _certify(
        ConstructionCertificate(
            p, claim, partition_sigma(p), "knkm-trivial", {"n": n, "m": m}, "upper", complete_minus_clique(n, m)
        )
    )


def _minus_H_graph(n, m, hbar: CliquePartition):
    if not hbar.cliques:
        return complete_minus_clique(n, m)
    off = n - m
    keep = {(off + a, off + b) for c in hbar.cliques for i, a in enumerate(c) for b in c[i + 1:]}
    edges = [
        (a, b)
        for a in range(n)
        for b in range(a + 1, n)
        if a < off or (a, b) in keep
    ]
    return Graph(n, frozenset(edges), ("explicit",))


def truncated_design_partition(
    n: int, m: int, base: Design, hbar_partition: CliquePartition | None = None
) -> ConstructionCertificate:
    """Clique partition of K_n - H from a (v, k, 1)-BIBD.

    The first block B1 keeps m points (vertices n-m..n-1, where H lives) and
    n-m points off B1 are kept (vertices 0..n-m-1); every other block,
    restricted to kept points, is a clique. ``hbar_partition`` partitions the
    complement of H on local vertices 0..m-1 (empty when H = K_m).
    """
    hbar = hbar_partition or CliquePartition()
    sizes = set(base.block_sizes)
    if len(sizes) != 1 or not validate_pbd(base).ok:
        raise HypothesisViolated("base must be a validated (v, k, 1)-BIBD")
    k, v = sizes.pop(), base.n
    if k < m:
        raise HypothesisViolated(f"block size k={k} is smaller than m={m}")
    if v - k < n - m:
        raise HypothesisViolated(f"v - k = {v - k} is smaller than n - m = {n - m}")
    if any(x >= m for c in hbar.cliques for x in c):
        raise HypothesisViolated("hbar_partition must live on vertices 0..m-1")
    b1 = base.blocks[0]
    label = {x: n - m + i for i, x in enumerate(b1[:m])}
    off_b1 = [x for x in range(v) if x not in set(b1)]
    label.update({x: i for i, x in enumerate(off_b1[: n - m])})
    cliques = []
    for b in base.blocks[1:]:
        c = [label[x] for x in b if x in label]
        if len(c) >= 2:
            cliques.append(c)
    cliques += [[n - m + x for x in c] for c in hbar.cliques]
    p = CliquePartition(cliques)
    r = (v - 1) // (k - 1)
    claim = BoundValue.of(n * r + partition_sigma(hbar) - m, "design-truncation")
    return _certify(
        ConstructionCertificate(
            p,
            claim,
            partition_sigma(p),
            "design-truncation",
            {"n": n, "m": m, "v": v, "k": k},
            "upper",
            _minus_H_graph(n, m, hbar),
        )
    )


def _next_prime_power_above(q):
    return next_prime_power_at_least(q + 1).q


def scp_upper_prime(n: int, m: int) -> ConstructionCertificate:
    """K_n - K_m from PG(2, q), q the least prime power >= m with q^2 >= n - m.

    Accepts m >= floor(sqrt n) rather than m >= sqrt n.
    """
    if not (isqrt(n) <= m <= n - 1 and m >= 2):
        raise DomainError(f"floor(sqrt n) <= m <= n-1 required, got n={n}, m={m}")
    q = next_prime_power_at_least(m).q
    while q * q < n - m:
        q = _next_prime_power_above(q)
    cert = truncated_design_partition(n, m, projective_plane(q))
    cert.construction = "knkm-prime"
    cert.parameters = {"n": n, "m": m, "q": q}
    cert.claimed_sigma_bound = BoundValue.of(n * (q + 1) - m, "knkm-prime")
    return _certify(cert)


def scp_upper_sqrt(n: int, m: int, hbar_partition: CliquePartition | None = None) -> ConstructionCertificate:
    """K_n - H for sqrt(n)/2 <= m <= sqrt(n) from PG(2, q), q the least prime
    power >= sqrt(n), raised if q < m - 1 or q^2 < n - m."""
    if not (m * m <= n <= 4 * m * m and m >= 2):
        raise DomainError(f"sqrt(n)/2 <= m <= sqrt(n) required, got n={n}, m={m}")
    q = next_prime_power_at_least(max(2, isqrt(n - 1) + 1)).q
    while q < m - 1 or q * q < n - m:
        q = _next_prime_power_above(q)
    hbar = hbar_partition or CliquePartition()
    cert = truncated_design_partition(n, m, projective_plane(q), hbar)
    cert.construction = "knkm-sqrt"
    cert.parameters = {"n": n, "m": m, "q": q}
    cert.claimed_sigma_bound = BoundValue.of(n * (q + 1) - m + partition_sigma(hbar), "knkm-sqrt")
    return _certify(cert)


def resolvable_cn_partition(n: int, m: int) -> ConstructionCertificate:
    """K_n - K_m for m < n/2 from a resolvable (v, k, 1) design, k = floor(n/m).

    Points beyond n-m are deleted; new vertex n-m+i joins every block of
    parallel class i. The new vertices form the removed clique.
    """
    if not (1 <= m and 2 * m < n):
        raise DomainError(f"1 <= m < n/2 required, got n={n}, m={m}")
    k = n // m
    if k not in (2, 3):
        raise UnsupportedK(
            f"k = floor(n/m) = {k}; only k in {{2, 3}} is supported (choose m with n/4 < m < n/2)"
        )
    v = n - m
    while v % k or (v - 1) % (k - 1):
        v += 1
    t = (v - 1) // (k - 1)
    if m > t:
        raise HypothesisViolated(f"need m <= t = {t} parallel classes, got m={m}")
    design, res = resolvable_design(v, k)
    keep = n - m
    cliques = []
    for i, cls in enumerate(res.classes):
        for idx in cls:
            c = [x for x in design.blocks[idx] if x < keep]
            if i < m:
                c.append(keep + i)
            if len(c) >= 2:
                cliques.append(c)
    p = CliquePartition(cliques)
    claim = BoundValue.of((n - m) * (v - 1) // (k - 1) + BoundValue.of(m * v, "").exact / k, "knkm-resolvable")
    return _certify(
        ConstructionCertificate(
            p,
            claim,
            partition_sigma(p),
            "knkm-resolvable",
            {"n": n, "m": m, "k": k, "v": v},
            "upper",
            complete_minus_clique(n, m),
        )
    )


# -- complements of paths and cycles, cocktail party graphs --------------------


@lru_cache(maxsize=None)
def _path_base_cases():
    text = resources.files("pbdkit.data").joinpath("complement_path_exact.json").read_text()
    doc = json.loads(text)
    return {int(n): (e["sigma"], tuple(tuple(c) for c in e["cliques"])) for n, e in doc["partitions"].items()}


BASE_CASE_MAX = 10


@lru_cache(maxsize=None)
def _comp_path(n: int) -> tuple[tuple, int]:
    """(cliques, claimed upper bound) for the complement of the path 0-1-...-(n-1)."""
    if n <= 1:
        return (), 0
    if n <= BASE_CASE_MAX:
        s, cliques = _path_base_cases()[n]
        return cliques, s
    d = isqrt(n)
    e = -(-n // d)
    q = isqrt(n - 1) + 1
    while not is_prime(q) or q < e:
        q += 1
    plane, _ = affine_plane(q)

    # grid point a_ij = (x=j, y=i) has index j*q + i; path positions snake
    # down column 0, up column 1, down column 2, ...
    def pos(i, j):
        return j * d + (i if j % 2 == 0 else d - 1 - i)

    where = {j * q + i: (i, j) for i in range(d) for j in range(e)}
    col_part, _ = _comp_path(d)
    row_part, _ = _comp_path(e)
    cliques = []
    for b in plane.blocks:
        cells = [where[x] for x in b if x in where]
        if len(cells) < 2:
            continue
        rows = {i for i, _ in cells}
        cols = {j for _, j in cells}
        if len(cols) == 1:
            j = cols.pop()
            cliques += [tuple(pos(t, j) for t in c) for c in col_part]
        elif len(rows) == 1 and rows & {0, d - 1}:
            i = rows.pop()
            cliques += [tuple(pos(i, t) for t in c) for c in row_part]
        else:
            cliques.append(tuple(pos(i, j) for i, j in cells))
    # consecutive row pairs that are not turns of the snake
    cliques += [(pos(0, j), pos(0, j + 1)) for j in range(0, e - 1, 2)]
    cliques += [(pos(d - 1, j), pos(d - 1, j + 1)) for j in range(1, e - 1, 2)]
    s_d, s_e = sum(map(len, col_part)), sum(map(len, row_part))
    claim = q * d * e - 2 * e + e * s_d + 2 * s_e + 2 * (e - 1)
    return _truncate(cliques, n), claim


def _truncate(cliques, n):
    out = []
    for c in cliques:
        c = tuple(sorted(x for x in c if x < n))
        if len(c) >= 2:
            out.append(c)
    return tuple(sorted(out))


def complement_path_partition(n: int) -> ConstructionCertificate:
    """Recursive partition of the complement of the path 0-1-...-(n-1).

    n <= 10 uses stored exact optima. Larger n takes d = floor(sqrt n),
    e = ceil(n/d) and the least prime q >= sqrt(n) with q >= e, keeps a d x e
    grid of AG(2, q), and replaces columns and the first and last rows by
    recursive partitions before deleting surplus path vertices.
    """
    if n < 2:
        raise DomainError("n >= 2 required")
    cliques, claim = _comp_path(n)
    p = CliquePartition(cliques)
    kind = "equality" if n <= BASE_CASE_MAX else "upper"
    return _certify(
        ConstructionCertificate(
            p,
            BoundValue.of(claim, "exact" if kind == "equality" else "path-recursion"),
            partition_sigma(p),
            "comp-path",
            {"n": n},
            kind,
            complement_path(n),
        )
    )


def complement_cycle_partition(n: int) -> ConstructionCertificate:
    """Path complement on 0..n-2 plus edges from vertex n-1 to 1..n-3."""
    if n < 4:
        raise DomainError("n >= 4 required")
    base = complement_path_partition(n - 1)
    p = CliquePartition(list(base.object.cliques) + [(u, n - 1) for u in range(1, n - 2)])
    claim = BoundValue.of(base.achieved_sigma + 2 * (n - 2), "path+edges")
    return _certify(
        ConstructionCertificate(p, claim, partition_sigma(p), "comp-cycle", {"n": n}, "upper", complement_cycle(n))
    )


def cocktail_party_partition(n: int) -> ConstructionCertificate:
    """Path complement on 0..n-1 plus the path edges {i, i+1}, i odd."""
    if n < 2:
        raise DomainError("n >= 2 required")
    base = complement_path_partition(n)
    p = CliquePartition(list(base.object.cliques) + [(i, i + 1) for i in range(1, n - 1, 2)])
    claim = BoundValue.of(base.achieved_sigma + 2 * (n // 2), "path+edges")
    return _certify(
        ConstructionCertificate(p, claim, partition_sigma(p), "cocktail", {"n": n}, "upper", cocktail_party(n))
    )
