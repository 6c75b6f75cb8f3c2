"""Acceptance criteria 1-12, one test each.

Run ``pytest tests/test_acceptance.py -v``; the terminal summary prints one
PASS/FAIL line per criterion. ``python3 tests/test_acceptance.py`` does the
same.
"""

import time
from fractions import Fraction
from math import isqrt
from pathlib import Path

from pbdkit.bounds import (
    best_sigma_lower,
    bound_B,
    bound_C,
    max_valency_lower,
    scp_knkm_bounds,
)
from pbdkit.classical import affine_plane, augmented_affine_plane, projective_plane, resolvable_design
from pbdkit.cli import main as cli_main
from pbdkit.constructions import (
    cocktail_party_partition,
    complement_cycle_partition,
    complement_path_partition,
    near_pencil,
    pbdC_equality,
    resolvable_cn_partition,
    scp_upper_prime,
    thm24_tight,
    trivial_knkm,
)
from pbdkit.design import sigma, valencies, validate_pbd
from pbdkit.graphs import complete_minus_clique, partition_sigma, validate_partition
from pbdkit.io import read_design, read_partition, write_design, write_partition
from pbdkit.solver import SolverLimits, exact_S, exact_S_prime, exact_scp

from oracles import bounds_abc, fmt, pair_multiset_ok, partition_ok, interval_source

GOLDEN = Path(__file__).parent / "golden" / "bounds_n21.csv"


def test_criterion_1():
    """min sigma over nontrivial PBDs on n points is 3n-3, only near-pencils."""
    start = time.perf_counter()
    for n in range(4, 9):
        values = {}
        for m in range(2, n):
            res = exact_S(n, m)
            assert res.proved_optimal
            values[m] = res.optimum
        assert min(values.values()) == 3 * n - 3
        # any other largest block size is strictly worse
        assert all(v > 3 * n - 3 for m, v in values.items() if m < n - 1)
        everything = exact_S(n, n - 1, SolverLimits(all_optima=True))
        assert everything.optimum == 3 * n - 3
        assert everything.all_witnesses
        for w in everything.all_witnesses:
            r = validate_pbd(w)
            assert r.ok and r.is_near_pencil and sigma(w) == 3 * n - 3
    assert time.perf_counter() - start < 600


def test_criterion_2():
    for q in (2, 3, 4, 5, 7, 8, 9):
        d = augmented_affine_plane(q)
        assert pair_multiset_ok(d.n, d.blocks) and validate_pbd(d).ok
        assert sigma(d) == (q * q + 1) * (q + 1) - 1
    assert sigma(augmented_affine_plane(3)) == 39


def test_criterion_3():
    for n in range(4, 41):
        for k in range(-(-n // 2), n):
            c = pbdC_equality(n, k)
            assert validate_pbd(c.object).ok and pair_multiset_ok(n, c.object.blocks)
            assert c.achieved_sigma == bound_C(n, k).exact
            # independent formula
            assert c.achieved_sigma == k - Fraction((n - k) * (n - 5 * k - 1), 2)


def test_criterion_4():
    for n in range(2, 10):
        for m in range(-(-n // 2), n + 1):
            if m < 2:
                continue
            res = exact_scp(complete_minus_clique(n, m))
            assert res.proved_optimal
            assert res.optimum == bound_C(n, m).exact - m
    assert exact_scp(complete_minus_clique(4, 2)).optimum == 7
    assert exact_scp(complete_minus_clique(6, 3)).optimum == 15


def _generated_pbds():
    out = []
    for q in (2, 3, 4, 5, 7, 8, 9):
        out.append(affine_plane(q)[0])
        out.append(projective_plane(q))
        out.append(augmented_affine_plane(q))
    for v, k in ((8, 2), (12, 2), (9, 3), (15, 3), (21, 3)):
        out.append(resolvable_design(v, k)[0])
    out += [near_pencil(n).object for n in range(3, 60)]
    out += [pbdC_equality(n, k).object for n in range(4, 24) for k in range(-(-n // 2), n)]
    out += [thm24_tight(q).object for q in (2, 3, 4, 5)]
    out += [exact_S(n, m).witness for n in range(4, 8) for m in range(2, n)]
    return out


def test_criterion_5():
    designs = _generated_pbds()
    assert len(designs) >= 200
    violations = 0
    for d in designs:
        r = validate_pbd(d)
        assert r.ok
        if not r.is_nontrivial:
            continue
        best, _ = best_sigma_lower(d.n, d.max_block)
        violations += sigma(d) < best.exact
        violations += len(d) < d.n
        violations += max(valencies(d)) < max_valency_lower(d.n).ceil
    assert violations == 0


def test_criterion_6():
    start = time.perf_counter()
    for n, m in ((50, 8), (100, 11), (200, 17)):
        c = scp_upper_prime(n, m)
        q = c.parameters["q"]
        assert partition_ok(n, c.graph.edges, c.object.cliques)
        assert c.achieved_sigma <= n * (q + 1) - m
        assert Fraction(c.achieved_sigma) >= scp_knkm_bounds(n, m)[0].exact
    assert time.perf_counter() - start < 60


def test_criterion_7():
    for n, m in ((20, 9), (40, 19), (60, 29)):
        c = resolvable_cn_partition(n, m)
        v = c.parameters["v"]
        assert c.parameters["k"] == 2
        assert partition_ok(n, c.graph.edges, c.object.cliques)
        new = set(range(n - m, n))
        assert all(len(new.intersection(cl)) <= 1 for cl in c.object.cliques)
        assert c.achieved_sigma <= (n - m) * (v - 1) + Fraction(m * v, 2)


def test_criterion_8():
    start = time.perf_counter()
    for n, limit in ((50, 2.0), (100, 2.0), (400, 1.7), (900, 1.7)):
        c = complement_path_partition(n)
        assert validate_partition(c.graph, c.object).ok
        s = c.achieved_sigma
        # s / n^1.5 <= limit  <=>  s^2 <= limit^2 n^3, done in exact rationals
        assert Fraction(s) ** 2 <= Fraction(limit) ** 2 * n**3
        assert s >= n * (isqrt(n) + 1) - 1 - 2 * (n - 1)
    assert time.perf_counter() - start < 60


def test_criterion_9():
    for n in range(2, 201):
        t = cocktail_party_partition(n)
        assert validate_partition(t.graph, t.object).ok
        assert t.achieved_sigma <= complement_path_partition(n).achieved_sigma + 2 * (n // 2)
        if n >= 4:
            c = complement_cycle_partition(n)
            assert validate_partition(c.graph, c.object).ok
            assert c.achieved_sigma <= complement_path_partition(n - 1).achieved_sigma + 2 * (n - 2)


def test_criterion_10(capsys):
    assert cli_main(["bounds", "--n", "21", "--csv"]) == 0
    out = capsys.readouterr().out
    assert out == GOLDEN.read_text()
    rows = {int(r.split(",")[0]): r.split(",") for r in out.splitlines()[1:]}
    assert len(rows) == 19
    assert rows[5][1] == rows[5][2] == "105"
    assert rows[10][2] == rows[10][3] == "175"
    for tau, row in rows.items():
        a, b, c = bounds_abc(21, tau)
        assert row[1:5] == [fmt(a), fmt(b), fmt(c), fmt(max(a, b, c))]
        assert row[5] == interval_source(21, tau)


def test_criterion_11():
    fano = projective_plane(2)
    assert max(valencies(fano)) == 3 == max_valency_lower(7).exact == max_valency_lower(7).ceil
    assert bound_B(7, 3).exact == 21 == exact_S_prime(7, 3).optimum


def test_criterion_12(tmp_path):
    for i, d in enumerate(_generated_pbds()):
        path = tmp_path / f"d{i}.json"
        write_design(d, path)
        back, _ = read_design(path)
        assert back == d and validate_pbd(back).ok
    for v, k in ((9, 3), (12, 2)):
        d, res = resolvable_design(v, k)
        write_design(d, tmp_path / "r.json", resolution=res)
        assert read_design(tmp_path / "r.json") == (d, res)
    certs = [complement_path_partition(n) for n in (10, 50, 100)]
    certs += [complement_cycle_partition(30), cocktail_party_partition(31), trivial_knkm(9, 4)]
    certs += [scp_upper_prime(50, 8), resolvable_cn_partition(20, 9)]
    for i, c in enumerate(certs):
        path = tmp_path / f"p{i}.json"
        write_partition(c.graph, c.object, path)
        g, p, _ = read_partition(path)
        assert g == c.graph and p == c.object and validate_partition(g, p).ok
        assert partition_sigma(p) == c.achieved_sigma
    for g in (complete_minus_clique(8, 4), complete_minus_clique(9, 5)):
        a, b = exact_scp(g), exact_scp(g)
        assert a.witness == b.witness and a.optimum == b.optimum
    a, b = exact_S(7, 3), exact_S(7, 3)
    assert a.witness == b.witness


if __name__ == "__main__":
    import pytest

    raise SystemExit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
