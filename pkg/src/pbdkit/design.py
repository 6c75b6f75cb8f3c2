"""Pairwise balanced designs: the data model, validation and statistics."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "Design",
    "Resolution",
    "Violation",
    "ValidationReport",
    "validate_pbd",
    "sigma",
    "valencies",
    "verify_resolution",
    "resolution_from_blocks",
    "is_near_pencil",
]


@dataclass(frozen=True)
class Design:
    """Points ``0..n-1`` and a canonically ordered tuple of blocks.

    Blocks are stored sorted internally and lexicographically among
    themselves, so equality of two designs is equality of canonical forms.
    Structural defects (out-of-range points, repeated points, blocks with
    fewer than two points) raise ``ValueError`` at construction.
    """

    n: int
    blocks: tuple = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        canon = []
        for b in self.blocks:
            blk = tuple(sorted(int(x) for x in b))
            if len(blk) < 2:
                raise ValueError(f"block {list(b)} has fewer than 2 points")
            if len(set(blk)) != len(blk):
                raise ValueError(f"block {list(b)} repeats a point")
            if blk[0] < 0 or blk[-1] >= self.n:
                raise ValueError(f"block {list(b)} has a point outside 0..{self.n - 1}")
            canon.append(blk)
        object.__setattr__(self, "blocks", tuple(sorted(canon)))

    @property
    def block_sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    @property
    def max_block(self) -> int:
        return max(self.block_sizes, default=0)

    def __len__(self):
        return len(self.blocks)


@dataclass(frozen=True)
class Resolution:
    """Parallel classes as lists of block indices into a Design."""

    classes: tuple

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(tuple(c) for c in self.classes))


@dataclass(frozen=True)
class Violation:
    kind: str
    where: tuple
    detail: str = ""


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)
    is_nontrivial: bool = True
    is_near_pencil: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def summary(self, limit: int = 20) -> str:
        if self.ok:
            return "ok"
        lines = [f"{len(self.violations)} violation(s):"]
        for v in self.violations[:limit]:
            lines.append(f"  {v.kind} {v.where} {v.detail}".rstrip())
        if len(self.violations) > limit:
            lines.append(f"  ... {len(self.violations) - limit} more")
        return "\n".join(lines)


def _structural(n, blocks, what="block"):
    bad = []
    for i, b in enumerate(blocks):
        if len(b) < 2:
            bad.append(Violation("StructuralViolation", tuple(b), f"{what} {i} has fewer than 2 points"))
        elif len(set(b)) != len(b):
            bad.append(Violation("StructuralViolation", tuple(b), f"{what} {i} repeats a point"))
        elif min(b) < 0 or max(b) >= n:
            bad.append(Violation("StructuralViolation", tuple(b), f"{what} {i} leaves range 0..{n - 1}"))
    return bad


def pair_counts(blocks: Iterable[Sequence[int]]) -> Counter:
    counts = Counter()
    for b in blocks:
        counts.update(combinations(sorted(b), 2))
    return counts


def is_near_pencil(n: int, blocks: Sequence[Sequence[int]]) -> bool:
    sizes = sorted(len(b) for b in blocks)
    return n >= 3 and len(sizes) == n and sizes[-1] == n - 1 and all(s == 2 for s in sizes[:-1])


def validate_pbd(d: Design | tuple) -> ValidationReport:
    """Check that every pair of distinct points lies in exactly one block.

    Accepts a Design or a raw ``(n, blocks)`` pair, so that malformed blocks
    (which a Design refuses to hold) can still be reported.
    """
    n, blocks = (d.n, d.blocks) if isinstance(d, Design) else d
    blocks = [tuple(b) for b in blocks]
    report = ValidationReport()
    report.violations.extend(_structural(n, blocks))
    if report.violations:
        report.is_nontrivial = not any(len(set(b)) == n for b in blocks)
        return report
    counts = pair_counts(blocks)
    for pair in combinations(range(n), 2):
        c = counts.get(pair, 0)
        if c == 0:
            report.violations.append(Violation("CoverageMissing", pair))
        elif c > 1:
            report.violations.append(Violation("CoverageDuplicate", pair, f"covered {c} times"))
    report.is_nontrivial = not any(len(b) == n for b in blocks)
    report.is_near_pencil = report.ok and is_near_pencil(n, blocks)
    return report


def sigma(d: Design | Iterable[Sequence[int]]) -> int:
    """Sum of block sizes."""
    blocks = d.blocks if isinstance(d, Design) else d
    return sum(len(b) for b in blocks)


def valencies(d: Design) -> list[int]:
    """Number of blocks through each point; sums to ``sigma(d)``."""
    r = [0] * d.n
    for b in d.blocks:
        for x in b:
            r[x] += 1
    assert sum(r) == sigma(d)
    return r


def resolution_from_blocks(d: Design, classes: Iterable[Iterable[Sequence[int]]]) -> Resolution:
    """Express parallel classes given as point sets by block index into ``d``."""
    index = {b: i for i, b in enumerate(d.blocks)}
    return Resolution(tuple(sorted(index[tuple(sorted(b))] for b in cls)) for cls in classes)


def verify_resolution(d: Design, res: Resolution) -> bool:
    seen = [idx for cls in res.classes for idx in cls]
    if sorted(seen) != list(range(len(d.blocks))):
        return False
    everything = set(range(d.n))
    for cls in res.classes:
        pts = [x for idx in cls for x in d.blocks[idx]]
        if len(pts) != len(set(pts)) or set(pts) != everything:
            return False
    return True
