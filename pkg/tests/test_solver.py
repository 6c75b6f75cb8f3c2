import pytest
from hypothesis import given, settings, strategies as st

from pbdkit.bounds import best_sigma_lower, bound_B, bound_C, scp_knkm_halfcase_exact
from pbdkit.design import validate_pbd
from pbdkit.graphs import (
    complement_cycle,
    complement_path,
    complete_graph,
    complete_minus_clique,
    explicit_graph,
    partition_sigma,
    validate_partition,
)
from pbdkit.solver import (
    CAP_ENV,
    Infeasible,
    SolverCapExceeded,
    SolverLimits,
    exact_cp,
    exact_S,
    exact_S_prime,
    exact_scp,
)

from oracles import brute_scp


def _check(g, res, objective="sigma"):
    assert validate_partition(g, res.witness).ok
    value = partition_sigma(res.witness) if objective == "sigma" else len(res.witness)
    assert value == res.optimum


def test_examples_scp():
    for (n, m), v in {(4, 2): 7, (6, 3): 15}.items():
        g = complete_minus_clique(n, m)
        res = exact_scp(g)
        assert res.optimum == v and res.proved_optimal
        _check(g, res)
    res = exact_scp(explicit_graph(5, []))
    assert res.optimum == 0 and res.witness.cliques == ()


def test_examples_cp():
    assert exact_cp(complete_minus_clique(4, 2)).optimum == 3
    assert exact_cp(complement_cycle(5)).optimum == 5
    assert exact_cp(complete_graph(5)).optimum == 1


@pytest.mark.parametrize("n", range(4, 9))
def test_S_near_pencil(n):
    res = exact_S(n, n - 1)
    assert res.optimum == 3 * n - 3 and validate_pbd(res.witness).is_near_pencil


def test_S_examples():
    assert exact_S(7, 3).optimum == 21
    res = exact_S(4, 3)
    assert res.optimum == 9 and validate_pbd(res.witness).ok
    with pytest.raises(Infeasible):
        exact_S(4, 5)


def test_S_prime_examples():
    assert exact_S_prime(4, 2).optimum == 9 == bound_C(4, 2).exact
    assert exact_S_prime(7, 3).optimum == 21 == bound_B(7, 3).exact
    assert exact_S_prime(6, 3).optimum == 18 == bound_C(6, 3).exact


def test_S_prime_dominates_bounds():
    for n in range(3, 9):
        for m in range(2, n + 1):
            res = exact_S_prime(n, m)
            assert validate_pbd(res.witness).ok
            if m < n:
                assert res.optimum >= max(bound_B(n, m).exact, bound_C(n, m).exact)
                if 2 * m >= n:
                    assert res.optimum == bound_C(n, m).exact


def test_S_dominates_best_bound():
    for n in range(4, 9):
        for m in range(2, n):
            res = exact_S(n, m)
            assert res.witness.max_block == m
            assert res.optimum >= best_sigma_lower(n, m)[0].exact


def test_S_at_most_is_not_larger():
    for n, m in [(6, 3), (7, 3), (7, 4)]:
        assert exact_S(n, m, exactly=False).optimum <= exact_S(n, m).optimum


def test_halfcase_formula():
    for n in range(4, 10):
        for m in range((n + 1) // 2, n):
            assert exact_scp(complete_minus_clique(n, m)).optimum == scp_knkm_halfcase_exact(n, m).exact


def test_brute_force_agreement_small():
    for n in range(2, 7):
        for g in [complement_path(n), complete_graph(n)] + [complete_minus_clique(n, m) for m in range(2, n)]:
            assert exact_scp(g).optimum == brute_scp(n, g.edges)
            assert exact_cp(g).optimum == brute_scp(n, g.edges, "count")


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))))
def test_random_graphs_against_brute_force(data):
    n, pairs = data
    g = explicit_graph(n, [p for p in pairs if p[0] != p[1]])
    res = exact_scp(g)
    _check(g, res)
    assert res.optimum == brute_scp(n, g.edges)
    assert exact_cp(g).optimum == brute_scp(n, g.edges, "count")


def test_determinism_and_threads():
    g = complete_minus_clique(8, 4)
    a, b = exact_scp(g), exact_scp(g)
    assert a.witness == b.witness and a.nodes_explored == b.nodes_explored
    c = exact_scp(g, SolverLimits(threads=3))
    assert c.optimum == a.optimum and c.witness == a.witness
    opts = exact_scp(complete_minus_clique(5, 2), SolverLimits(all_optima=True))
    par = exact_scp(complete_minus_clique(5, 2), SolverLimits(all_optima=True, threads=2))
    assert opts.all_witnesses == par.all_witnesses and len(opts.all_witnesses) >= 1


def test_all_optima_are_optimal():
    g = complete_minus_clique(5, 2)
    res = exact_scp(g, SolverLimits(all_optima=True))
    for w in res.all_witnesses:
        assert validate_partition(g, w).ok and partition_sigma(w) == res.optimum


def test_cap_and_budget(monkeypatch):
    with pytest.raises(SolverCapExceeded):
        exact_scp(complement_path(30))
    res = exact_scp(complement_path(12), SolverLimits(node_budget=50))
    assert not res.proved_optimal
    assert validate_partition(complement_path(12), res.witness).ok
    monkeypatch.setenv(CAP_ENV, "5")
    with pytest.raises(SolverCapExceeded):
        exact_scp(complete_graph(6))
    assert exact_scp(complete_graph(6), SolverLimits(max_vertices=6)).optimum == 6
