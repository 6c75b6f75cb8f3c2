"""Command-line front end.

Exit codes: 0 ok, 1 usage or unmet precondition, 2 parse or validation
failure, 3 solver budget (or size cap) exhausted.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import shutil
import sys
from collections import Counter
from fractions import Fraction
from pathlib import Path

from . import constructions as cons
from .algebra import CapExceeded, NotPrimePower
from .bounds import (
    DomainError,
    HypothesisViolated,
    best_sigma_lower,
    bound_A,
    bound_B,
    bound_C,
    cn_bounds,
    fmt_fraction,
    large_block_free_applies,
    large_block_free_lower,
    max_valency_lower,
    scp_knkm_bounds,
    scp_knkm_halfcase_exact,
    scp_knkm_small_m_lower,
    sigma_lower_dbe,
)
from .classical import (
    CongruenceFailure,
    SearchExhausted,
    UnsupportedK,
    affine_plane,
    projective_plane,
)
from .design import sigma, valencies, validate_pbd, verify_resolution
from .graphs import (
    cocktail_party,
    complement_cycle,
    complement_path,
    complete_graph,
    complete_minus_clique,
    partition_sigma,
    partition_valencies,
    validate_partition,
)
from .io import (
    DesignFormatError,
    document_kind,
    read_design,
    read_edge_coloring,
    read_metadata,
    read_partition,
    write_design,
    write_partition,
)
from .solver import SolverCapExceeded, SolverLimits, exact_cp, exact_S, exact_S_prime, exact_scp

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3

PRECONDITION_ERRORS = (
    DomainError,
    HypothesisViolated,
    NotPrimePower,
    CapExceeded,
    UnsupportedK,
    CongruenceFailure,
    SearchExhausted,
)

CATALOG_INDEX = "catalog.json"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _approx(x: Fraction) -> str:
    return f"{fmt_fraction(x)} (~{float(x):.6f})"


# -- builders shared by construct and catalog check ---------------------------

_CONSTRUCTIONS = {
    "near-pencil": (cons.near_pencil, ("n",)),
    "pbdc": (cons.pbdC_equality, ("n", "k")),
    "thm24": (cons.thm24_tight, ("q",)),
    "knkm-trivial": (cons.trivial_knkm, ("n", "m")),
    "knkm-prime": (cons.scp_upper_prime, ("n", "m")),
    "knkm-sqrt": (cons.scp_upper_sqrt, ("n", "m")),
    "knkm-resolvable": (cons.resolvable_cn_partition, ("n", "m")),
    "comp-path": (cons.complement_path_partition, ("n",)),
    "comp-cycle": (cons.complement_cycle_partition, ("n",)),
    "cocktail": (cons.cocktail_party_partition, ("n",)),
}


def _rebuild(tag: str, params: dict):
    """The object a (construction, parameters) pair names, or None if unknown."""
    if tag in ("plane-affine", "plane-projective"):
        q = params["q"]
        return affine_plane(q)[0] if tag == "plane-affine" else projective_plane(q)
    if tag in _CONSTRUCTIONS:
        fn, names = _CONSTRUCTIONS[tag]
        return fn(*(params[k] for k in names)).object
    return None


# -- plane --------------------------------------------------------------------


def cmd_plane(args) -> int:
    if args.kind == "affine":
        d, res = affine_plane(args.order, cap=args.cap)
    else:
        d, res = projective_plane(args.order, cap=args.cap), None
    print(f"n={d.n} blocks={len(d)} sigma={sigma(d)}" + (f" classes={len(res.classes)}" if res else ""))
    if args.out:
        meta = {"certificate": {"construction": f"plane-{args.kind}", "parameters": {"q": args.order}}}
        write_design(d, args.out, resolution=res, metadata=meta)
        print(f"wrote {args.out}")
    return EXIT_OK


# -- verify -------------------------------------------------------------------


def _design_equalities(d):
    n, s = d.n, sigma(d)
    out = []
    report = validate_pbd(d)
    if n >= 3 and report.is_nontrivial and s == sigma_lower_dbe(n).exact:
        out.append("dBE (sigma = 3n-3)")
    if n >= 3:
        mv = max_valency_lower(n)
        if mv.exact is not None and max(valencies(d)) == mv.exact:
            out.append(f"max-valency (r_max = {fmt_fraction(mv.exact)})")
    tau = d.max_block
    if 2 <= tau <= n - 1:
        for b in (bound_A(n, tau), bound_B(n, tau), bound_C(n, tau)):
            if s == b.exact:
                out.append(f"bound {b.source} at tau={tau}")
    if n >= 10 and large_block_free_applies(n, tau) and s == large_block_free_lower(n).exact:
        out.append("large-block-free (sigma = n(floor(sqrt n)+1)-1)")
    return report, out


def _histogram(vals):
    return " ".join(f"{r}:{c}" for r, c in sorted(Counter(vals).items()))


def cmd_verify(args) -> int:
    path = args.file
    kind = args.as_ or document_kind(path)
    if kind in ("pbd", "design"):
        d, res = read_design(path)
        report, eqs = _design_equalities(d)
        print(f"design n={d.n} blocks={len(d)} sigma={sigma(d)}")
        print(f"valency histogram {_histogram(valencies(d))}")
        if res is not None:
            res_ok = verify_resolution(d, res)
            print(f"resolution: {'ok' if res_ok else 'INVALID'} ({len(res.classes)} classes)")
            if not res_ok:
                return EXIT_INVALID
        if report.is_near_pencil:
            print("near-pencil")
        print(report.summary())
        if report.ok:
            for e in eqs:
                print(f"equality: {e}")
        return EXIT_OK if report.ok else EXIT_INVALID
    if kind == "partition":
        g, p, _ = read_partition(path)
        report = validate_partition(g, p)
        print(f"partition of {g.family[0]} n={g.n} cliques={len(p)} sigma={partition_sigma(p)}")
        print(f"valency histogram {_histogram(partition_valencies(g.n, p))}")
        print(report.summary())
        return EXIT_OK if report.ok else EXIT_INVALID
    c = read_edge_coloring(path)
    ok = c.is_proper()
    print(f"edge colouring v={c.v} classes={len(c.classes)}: {'proper' if ok else 'NOT proper'}")
    return EXIT_OK if ok else EXIT_INVALID


# -- bounds -------------------------------------------------------------------


def bounds_rows(n: int):
    """(tau, A, B, C, best, source) for tau = 2..n-1."""
    rows = []
    for tau in range(2, n):
        a, b, c = bound_A(n, tau), bound_B(n, tau), bound_C(n, tau)
        best, src = best_sigma_lower(n, tau)
        rows.append((tau, a.exact, b.exact, c.exact, best.exact, src))
    return rows


def cmd_bounds(args) -> int:
    n = args.n
    if n < 3:
        raise DomainError("n >= 3 required")
    if args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["tau", "A", "B", "C", "best", "source"])
        for tau, a, b, c, best, src in bounds_rows(n):
            w.writerow([tau, fmt_fraction(a), fmt_fraction(b), fmt_fraction(c), fmt_fraction(best), src])
        return EXIT_OK
    print(f"n = {n}")
    print(f"dBE lower: {fmt_fraction(sigma_lower_dbe(n).exact)}")
    mv = max_valency_lower(n)
    exact = fmt_fraction(mv.exact) if mv.exact is not None else "(1+sqrt(4n-3))/2, irrational"
    print(f"max-valency lower: {exact}, ceil {mv.ceil}")
    if n >= 10:
        print(f"large-block-free lower: {fmt_fraction(large_block_free_lower(n).exact)}")
    if args.tau is not None:
        t = args.tau
        for b in (bound_A(n, t), bound_B(n, t), bound_C(n, t)):
            print(f"bound {b.source}(tau={t}): {_approx(b.exact)}")
        best, src = best_sigma_lower(n, t)
        print(f"best: {_approx(best.exact)} from {src}")
    if args.m is not None:
        m = args.m
        lo, hi = scp_knkm_bounds(n, m)
        print(f"scp(K_{n}-K_{m}) lower: {_approx(lo.exact)}")
        print(f"scp(K_{n}-K_{m}) upper: {fmt_fraction(hi.exact)}")
        if 2 * m >= n and m >= 2:
            print(f"scp(K_{n}-K_{m}) exact (m >= n/2): {fmt_fraction(scp_knkm_halfcase_exact(n, m).exact)}")
        if 4 * m * m <= n:
            print(f"small-m lower (2m-1)n-m: {fmt_fraction(scp_knkm_small_m_lower(n, m).exact)}")
        if 0 < 2 * m < n:
            clo, chi = cn_bounds(n, m)
            print(f"m = cn leading terms: lower {_approx(clo.exact)}, upper {_approx(chi.exact)}")
    return EXIT_OK


# -- construct ----------------------------------------------------------------


def cmd_construct(args) -> int:
    fn, names = _CONSTRUCTIONS[args.what]
    missing = [k for k in names if getattr(args, k) is None]
    if missing:
        print(f"construct --what {args.what} needs {', '.join('--' + k for k in missing)}", file=sys.stderr)
        return EXIT_USAGE
    cert = fn(*(getattr(args, k) for k in names))
    claim = cert.claimed_sigma_bound.exact
    print(f"construction {cert.construction} {json.dumps(cert.parameters, sort_keys=True)}")
    print(f"sigma {cert.achieved_sigma}, claimed {cert.kind} bound {fmt_fraction(claim)}")
    print(f"equality: {'yes' if cert.achieved_sigma == claim else 'no'}")
    if args.what == "comp-path":
        print(f"sigma/n^1.5 ~ {cert.achieved_sigma / args.n ** 1.5:.6f}")
    if args.out:
        # keep the tag the catalog can rebuild from
        meta = cert.metadata()
        meta["certificate"]["construction"] = args.what
        meta["certificate"]["parameters"] = {k: getattr(args, k) for k in names}
        meta["certificate"]["details"] = dict(cert.parameters)
        if cert.graph is None:
            write_design(cert.object, args.out, metadata=meta)
        else:
            write_partition(cert.graph, cert.object, args.out, metadata=meta)
        print(f"wrote {args.out}")
    return EXIT_OK


# -- exact --------------------------------------------------------------------

_FAMILIES = {
    "knkm": lambda n, m: complete_minus_clique(n, m),
    "complete": lambda n, m: complete_graph(n),
    "comp-path": lambda n, m: complement_path(n),
    "comp-cycle": lambda n, m: complement_cycle(n),
    "cocktail": lambda n, m: cocktail_party(n),
}


def cmd_exact(args) -> int:
    kw = {"node_budget": args.budget, "threads": args.threads}
    if args.cap is not None:
        kw["max_vertices"] = args.cap
    limits = SolverLimits(**kw)
    obj = args.objective
    if obj in ("S", "Sprime") or args.family == "knkm":
        if args.m is None:
            print("--m is required", file=sys.stderr)
            return EXIT_USAGE
    try:
        if obj == "S":
            res = exact_S(args.n, args.m, limits, exactly=not args.at_most)
        elif obj == "Sprime":
            res = exact_S_prime(args.n, args.m, limits)
        else:
            g = _FAMILIES[args.family](args.n, args.m)
            res = (exact_scp if obj == "scp" else exact_cp)(g, limits)
    except SolverCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(f"optimum {res.optimum} ({res.objective})")
    print(f"proved_optimal {'yes' if res.proved_optimal else 'no'}")
    print(f"nodes {res.nodes_explored}")
    if args.out:
        meta = {"solver": {"nodes": res.nodes_explored, "budget": args.budget, "proved_optimal": res.proved_optimal}}
        if obj in ("S", "Sprime"):
            write_design(res.witness, args.out, metadata=meta)
        else:
            write_partition(g, res.witness, args.out, metadata=meta)
        print(f"witness {args.out}")
    if not res.proved_optimal:
        print("node budget exhausted; best found reported", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


# -- catalog ------------------------------------------------------------------


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _load_index(root: Path) -> list:
    idx = root / CATALOG_INDEX
    if not idx.exists():
        return []
    doc = json.loads(idx.read_text(encoding="utf-8"))
    return doc.get("entries", [])


def _save_index(root: Path, entries: list) -> None:
    doc = {"version": 1, "entries": sorted(entries, key=lambda e: e["path"])}
    (root / CATALOG_INDEX).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def _validate_file(path: Path):
    kind = document_kind(path)
    if kind == "design":
        d, res = read_design(path)
        ok = validate_pbd(d).ok and (res is None or verify_resolution(d, res))
        return kind, ok, d
    if kind == "partition":
        g, p, _ = read_partition(path)
        return kind, validate_partition(g, p).ok, p
    return kind, read_edge_coloring(path).is_proper(), None


def cmd_catalog(args) -> int:
    root = Path(args.dir)
    if not root.is_dir():
        print(f"error: {root} is not a directory", file=sys.stderr)
        return EXIT_USAGE
    entries = _load_index(root)
    if args.action == "list":
        for e in entries:
            print(f"{e['path']}\t{e['kind']}\t{json.dumps(e['parameters'], sort_keys=True)}\t{e['checksum'][:12]}")
        print(f"{len(entries)} entries")
        return EXIT_OK
    if args.action == "add":
        if not args.file:
            print("catalog add needs --file", file=sys.stderr)
            return EXIT_USAGE
        src = Path(args.file)
        kind, ok, _ = _validate_file(src)
        if not ok:
            print(f"error: {src} does not validate", file=sys.stderr)
            return EXIT_INVALID
        dest = root / src.name
        if src.resolve() != dest.resolve():
            shutil.copyfile(src, dest)
        cert = read_metadata(dest).get("certificate", {})
        entry = {
            "path": dest.name,
            "kind": kind,
            "construction": cert.get("construction"),
            "parameters": cert.get("parameters", {}),
            "checksum": _sha256(dest),
        }
        entries = [e for e in entries if e["path"] != dest.name] + [entry]
        _save_index(root, entries)
        print(f"added {dest.name} ({kind})")
        return EXIT_OK
    # check
    bad = 0
    for e in entries:
        path = root / e["path"]
        if not path.exists():
            print(f"MISSING {e['path']}")
            bad += 1
            continue
        if _sha256(path) != e["checksum"]:
            print(f"CHECKSUM MISMATCH {e['path']}")
            bad += 1
            continue
        try:
            _, ok, obj = _validate_file(path)
        except DesignFormatError as exc:
            print(f"UNREADABLE {e['path']}: {exc}")
            bad += 1
            continue
        if not ok:
            print(f"INVALID {e['path']}")
            bad += 1
            continue
        if e.get("construction"):
            rebuilt = _rebuild(e["construction"], e["parameters"])
            if rebuilt is not None and rebuilt != obj:
                print(f"NOT REPRODUCED {e['path']} by {e['construction']} {e['parameters']}")
                bad += 1
                continue
        print(f"ok {e['path']}")
    print(f"{len(entries)} entries, {bad} problem(s)")
    return EXIT_OK if bad == 0 else EXIT_INVALID


# -- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pbdkit", description="Pairwise balanced designs and clique partitions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("plane", help="write an affine or projective plane")
    s.add_argument("--kind", choices=["affine", "projective"], required=True)
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--cap", type=int, default=2**16, help="largest field order allowed")
    s.add_argument("--out")
    s.set_defaults(func=cmd_plane)

    s = sub.add_parser("verify", help="validate a design, partition or colouring file")
    s.add_argument("--file", required=True)
    s.add_argument("--as", dest="as_", choices=["pbd", "partition"])
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bounds", help="print lower and upper bounds")
    s.add_argument("--n", type=int, required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--m", type=int)
    g.add_argument("--tau", type=int)
    s.add_argument("--csv", action="store_true", help="one row per tau in 2..n-1")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("construct", help="run a construction and certify it")
    s.add_argument("--what", choices=sorted(_CONSTRUCTIONS), required=True)
    for name in ("n", "m", "k", "q"):
        s.add_argument(f"--{name}", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("exact", help="exhaustive solver")
    s.add_argument("--objective", choices=["scp", "cp", "S", "Sprime"], required=True)
    s.add_argument("--family", choices=sorted(_FAMILIES), default="knkm")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int)
    s.add_argument("--budget", type=int, help="node budget; also lifts the vertex cap")
    s.add_argument("--cap", type=int, help="vertex cap (overrides $PBDKIT_SOLVER_CAP)")
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--at-most", action="store_true", help="S with largest block at most m")
    s.add_argument("--out")
    s.set_defaults(func=cmd_exact)

    s = sub.add_parser("catalog", help="maintain a checksummed directory of objects")
    s.add_argument("action", choices=["list", "add", "check"])
    s.add_argument("--dir", required=True)
    s.add_argument("--file")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DesignFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (FileNotFoundError, IsADirectoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PRECONDITION_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
