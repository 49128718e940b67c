import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from incentive_games.belief_engine import envelope_from_samples
from incentive_games.lp_kernel import Polytope, enumerate_vertices
from incentive_games.matrix_games import (
    CostTable,
    IncentiveScheme,
    agent_value_curve,
    collect_xi,
    principal_value_curve,
    solve_g1,
    solve_g2,
    solve_g3,
    solve_g4,
)

# ---------------------------------------------------------------------------
# strategies
# ---------------------------------------------------------------------------

_entry = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False, width=32)


def _tables(n: int):
    shape = (2, 2, n, n)
    count = 4 * n * n
    return st.lists(_entry, min_size=count, max_size=count).map(
        lambda v: CostTable(
            cp=np.array(v[: 2 * n * n], dtype=float).reshape(2, n, n),
            ca=np.array(v[2 * n * n :], dtype=float).reshape(2, n, n),
        )
    )


_priors = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
_interior = st.floats(min_value=0.05, max_value=0.95, allow_nan=False)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def test_cost_table_shape_mismatch():
    with pytest.raises(ValueError):
        CostTable(cp=([[1.0, 2.0]], [[1.0], [2.0]]), ca=([[1.0, 2.0]], [[1.0, 2.0]]))
    with pytest.raises(ValueError):
        CostTable(cp=([[1.0]], [[1.0]]), ca=([[1.0, 2.0]], [[1.0, 2.0]]))


def test_cost_table_rejects_non_finite():
    with pytest.raises(ValueError):
        CostTable(cp=([[np.inf]], [[1.0]]), ca=([[1.0]], [[1.0]]))


def test_cost_table_matrices_are_read_only(table_a):
    with pytest.raises(ValueError):
        table_a.cp[0][0, 0] = 9.0


def test_scheme_validation():
    with pytest.raises(ValueError):
        IncentiveScheme(np.array([[0.5, 0.2], [0.4, 0.8]]))  # first column sums to 0.9
    with pytest.raises(ValueError):
        IncentiveScheme(np.array([[1.2, 0.0], [-0.2, 1.0]]))  # negative entry
    with pytest.raises(ValueError):
        IncentiveScheme(np.ones((3, 2, 2)) / 2.0)  # three states
    s = IncentiveScheme(np.array([[0.25, 1.0], [0.75, 0.0]]))
    assert not s.state_dependent
    assert np.array_equal(s.for_state(0), s.for_state(1))


# ---------------------------------------------------------------------------
# g1: full information
# ---------------------------------------------------------------------------


def test_g1_benchmark_a(table_a):
    r = solve_g1(table_a, 0.4)
    assert r.principal_cost == pytest.approx(1.0, abs=1e-8)
    assert r.agent_cost == pytest.approx(3.0, abs=1e-8)
    assert r.agent_actions == (1, 1)
    s1, s2 = r.scheme.for_state(0), r.scheme.for_state(1)
    assert s1[:, 0] == pytest.approx([0.5, 0.5], abs=1e-8)
    assert s1[:, 1] == pytest.approx([0.0, 1.0], abs=1e-8)
    assert s2[:, 0] == pytest.approx([0.0, 1.0], abs=1e-8)
    assert s2[:, 1] == pytest.approx([1.0, 0.0], abs=1e-8)
    r.check(table_a)


def test_g1_prior_only_reweights_states(table_a):
    low = solve_g1(table_a, 0.2)
    high = solve_g1(table_a, 0.8)
    assert low.per_state == high.per_state
    for r in (low, high):
        mu = r.belief
        expect = mu * r.per_state[0].principal_cost + (1 - mu) * r.per_state[1].principal_cost
        assert r.principal_cost == pytest.approx(expect, abs=1e-12)


@settings(max_examples=40, deadline=None, derandomize=True)
@given(_tables(2), _priors)
def test_g1_aligned_interests_reach_team_optimum(table, prior):
    aligned = CostTable(cp=table.cp, ca=table.cp)
    r = solve_g1(aligned, prior)
    want = prior * table.cp[0].min() + (1 - prior) * table.cp[1].min()
    assert r.principal_cost == pytest.approx(want, abs=1e-7)
    r.check(aligned)


def _g1_state_oracle(table: CostTable, state: int) -> float:
    """Independent route: enumerate each response polytope's vertices and
    evaluate the principal's cost directly."""
    m, n = table.m, table.n
    best = np.inf
    eq = np.zeros((n, m * n))
    for c in range(n):
        eq[c, c * m : (c + 1) * m] = 1.0
    for j in range(n):
        rows = []
        for l in range(n):
            if l == j:
                continue
            row = np.zeros(m * n)
            row[j * m : (j + 1) * m] = table.ca[state][:, j]
            row[l * m : (l + 1) * m] -= table.ca[state][:, l]
            rows.append(row)
        poly = Polytope(
            dim=m * n,
            constraint_matrix=np.array(rows),
            rhs=np.zeros(n - 1),
            equality_matrix=eq,
            equality_rhs=np.ones(n),
        )
        for v in enumerate_vertices(poly):
            gamma = v.reshape(n, m).T
            best = min(best, float(gamma[:, j] @ table.cp[state][:, j]))
    return best


@settings(max_examples=25, deadline=None, derandomize=True)
@given(_tables(2), _priors)
def test_g1_matches_vertex_enumeration_oracle(table, prior):
    r = solve_g1(table, prior)
    want = prior * _g1_state_oracle(table, 0) + (1 - prior) * _g1_state_oracle(table, 1)
    assert r.principal_cost == pytest.approx(want, abs=1e-7)


def test_g1_oracle_on_3x3():
    rng = np.random.default_rng(42)
    for _ in range(5):
        table = CostTable(cp=rng.uniform(-3, 3, (2, 3, 3)), ca=rng.uniform(-3, 3, (2, 3, 3)))
        r = solve_g1(table, 0.3)
        want = 0.3 * _g1_state_oracle(table, 0) + 0.7 * _g1_state_oracle(table, 1)
        assert r.principal_cost == pytest.approx(want, abs=1e-8)


# ---------------------------------------------------------------------------
# g2: one scheme across states
# ---------------------------------------------------------------------------


def test_g2_benchmark_a(table_a):
    r = solve_g2(table_a, 0.4)
    assert r.principal_cost == pytest.approx(2.6, abs=1e-8)
    assert r.agent_cost == pytest.approx(2.6, abs=1e-8)
    assert r.agent_actions == (0, 1)
    assert r.scheme.columns[:, 0] == pytest.approx([0.0, 1.0], abs=1e-8)
    assert r.scheme.columns[:, 1] == pytest.approx([1.0, 0.0], abs=1e-8)
    r.check(table_a)


def test_g2_benchmark_b(table_b):
    r = solve_g2(table_b, 0.75)
    assert r.principal_cost == pytest.approx(2.0, abs=1e-8)
    assert r.agent_cost == pytest.approx(2.0, abs=1e-8)
    r.check(table_b)


def test_g2_benchmark_b_curve_values(table_b):
    frozen = {0.0: 1.0, 0.25: 1.9875, 0.4: 2.58, 0.5: 2.975, 0.6: 2.6, 0.75: 2.0, 1.0: 1.0}
    for mu, want in frozen.items():
        assert solve_g2(table_b, mu).principal_cost == pytest.approx(want, abs=1e-8)


def test_g2_agent_cost_piecewise_on_a(table_a):
    for mu in np.linspace(0.0, 1.0, 21):
        want = 3.0 - mu if mu <= 0.5 else 2.0 + mu
        assert solve_g2(table_a, mu).agent_cost == pytest.approx(want, abs=1e-8)


@settings(max_examples=30, deadline=None, derandomize=True)
@given(_tables(2))
def test_g2_degenerate_beliefs_match_g1(table):
    g1 = solve_g1(table, 0.5)
    assert solve_g2(table, 1.0).principal_cost == pytest.approx(
        g1.per_state[0].principal_cost, abs=1e-7
    )
    assert solve_g2(table, 0.0).principal_cost == pytest.approx(
        g1.per_state[1].principal_cost, abs=1e-7
    )


@settings(max_examples=30, deadline=None, derandomize=True)
@given(_tables(2), _priors)
def test_g2_never_beats_g1(table, prior):
    assert solve_g1(table, prior).principal_cost <= solve_g2(table, prior).principal_cost + 1e-8


@settings(max_examples=25, deadline=None, derandomize=True)
@given(_tables(2), _priors)
def test_g2_report_check_passes(table, prior):
    # random tables can be near-singular, so allow looser best-response slack
    # than the benchmark default
    solve_g2(table, prior).check(table, br_tol=1e-6)


def test_g2_reruns_identically(table_a):
    first = solve_g2(table_a, 0.4)
    second = solve_g2(table_a, 0.4)
    assert first.principal_cost == second.principal_cost
    assert np.array_equal(first.scheme.columns, second.scheme.columns)


# ---------------------------------------------------------------------------
# value curves
# ---------------------------------------------------------------------------


def test_principal_curve_anchors_a(table_a):
    xs, vals = principal_value_curve(table_a, 2001)
    assert vals[0] == pytest.approx(1.0, abs=1e-8)
    assert vals[1000] == pytest.approx(3.0, abs=1e-8)
    assert vals[2000] == pytest.approx(1.0, abs=1e-8)


def test_curves_match_direct_solves(table_a, table_b):
    for table in (table_a, table_b):
        xs, jp = principal_value_curve(table, 201)
        _, ja = agent_value_curve(table, 201)
        for t in np.random.default_rng(3).choice(201, size=9, replace=False):
            r = solve_g2(table, xs[t])
            assert jp[t] == pytest.approx(r.principal_cost, abs=1e-9)
            assert ja[t] == pytest.approx(r.agent_cost, abs=1e-9)


def test_principal_curve_midpoint_concavity(table_a, table_b):
    for table in (table_a, table_b):
        _, vals = principal_value_curve(table, 401)
        interior = vals[1:-1]
        assert np.all(interior >= 0.5 * (vals[:-2] + vals[2:]) - 1e-8)


def test_curve_rejects_tiny_grid(table_a):
    with pytest.raises(ValueError):
        principal_value_curve(table_a, 1)


# ---------------------------------------------------------------------------
# candidate-scheme collection
# ---------------------------------------------------------------------------


def test_collect_xi_groups_on_a(table_a):
    xi = collect_xi(table_a)
    sizes = {g: len(mats) for g, mats in xi.groups.items()}
    assert sizes == {(0, 0): 1, (0, 1): 4, (1, 0): 3, (1, 1): 3}
    listed = [
        np.array([[0.0, 0.0], [1.0, 1.0]]),   # columns (0,1), (0,1)
        np.array([[0.0, 1.0], [1.0, 0.0]]),   # columns (0,1), (1,0)
        np.array([[0.5, 1.0], [0.5, 0.0]]),   # columns (0.5,0.5), (1,0)
    ]
    for want in listed:
        assert any(np.allclose(mat, want, atol=1e-9) for mat in xi.groups[(0, 1)])
    assert len(xi.unique) == 6
    for entry in xi.unique:
        assert entry.groups  # membership retained through deduplication


def test_collect_xi_dominant_column_empties_other_groups():
    # second agent action strictly dominant in both states, whatever the scheme
    table = CostTable(
        cp=([[1.0, 1.0], [1.0, 1.0]], [[1.0, 1.0], [1.0, 1.0]]),
        ca=([[5.0, 1.0], [5.0, 1.0]], [[4.0, 0.0], [4.0, 0.0]]),
    )
    xi = collect_xi(table)
    assert xi.groups[(1, 1)]
    assert not xi.groups[(0, 0)]
    assert not xi.groups[(0, 1)]
    assert not xi.groups[(1, 0)]


@settings(max_examples=20, deadline=None, derandomize=True)
@given(_tables(2))
def test_collect_xi_vertices_satisfy_their_constraints(table):
    xi = collect_xi(table)
    for (i, j), mats in xi.groups.items():
        for gamma in mats:
            for state, rec in ((0, i), (1, j)):
                cost_rec = gamma[:, rec] @ table.ca[state][:, rec]
                for l in range(table.n):
                    assert cost_rec <= gamma[:, l] @ table.ca[state][:, l] + 1e-7
            assert gamma.sum(axis=0) == pytest.approx([1.0, 1.0], abs=1e-9)


# ---------------------------------------------------------------------------
# g3: persuasion
# ---------------------------------------------------------------------------


def test_g3_a_reveals_nothing(table_a):
    r = solve_g3(table_a, 0.4)
    assert not r.revealing
    assert r.split.atoms == ((0.4, 1.0),)
    assert r.agent_cost == pytest.approx(2.6, abs=1e-8)
    assert r.principal_cost == pytest.approx(2.6, abs=1e-8)
    assert len(r.recommendation_distribution) == 1


def test_g3_a_sweep_piecewise(table_a):
    for mu in np.linspace(0.05, 0.95, 19):
        want = 3.0 - mu if mu <= 0.5 else 2.0 + mu
        assert solve_g3(table_a, mu).agent_cost == pytest.approx(want, abs=1e-8)


def test_g3_b_full_revelation(table_b):
    r = solve_g3(table_b, 0.75)
    assert r.revealing
    assert r.agent_cost == pytest.approx(1.75, abs=1e-8)
    assert r.principal_cost == pytest.approx(1.0, abs=1e-8)
    atoms = r.split.atoms
    assert len(atoms) == 2
    assert atoms[0][0] == pytest.approx(0.0, abs=1e-8)
    assert atoms[0][1] == pytest.approx(0.25, abs=1e-8)
    assert atoms[1][0] == pytest.approx(1.0, abs=1e-8)
    assert atoms[1][1] == pytest.approx(0.75, abs=1e-8)
    assert r.split.is_plausible(0.75, tol=1e-9)


def test_g3_b_low_prior_value_equals_g2(table_b):
    r = solve_g3(table_b, 0.3)
    assert r.agent_cost == pytest.approx(solve_g2(table_b, 0.3).agent_cost, abs=1e-8)


def test_g3_degenerate_prior_short_circuits(table_b):
    r = solve_g3(table_b, 1.0)
    g2 = solve_g2(table_b, 1.0)
    assert not r.revealing
    assert r.agent_cost == pytest.approx(g2.agent_cost, abs=1e-12)
    assert r.principal_cost == pytest.approx(g2.principal_cost, abs=1e-12)


def test_g3_value_is_envelope_of_agent_curve(table_a, table_b):
    for table in (table_a, table_b):
        xs, ja = agent_value_curve(table, 2001)
        lipschitz = np.max(np.abs(np.diff(ja))) * 2000
        tol = 2.0 * lipschitz / 2000
        for mu in (0.15, 0.3, 0.5, 0.75, 0.9):
            want, _ = envelope_from_samples(xs, ja, mu)
            assert solve_g3(table, mu).agent_cost == pytest.approx(want, abs=tol)


@settings(max_examples=15, deadline=None, derandomize=True)
@given(_tables(2), _interior)
def test_g3_properties_random(table, prior):
    g2 = solve_g2(table, prior)
    r = solve_g3(table, prior)
    assert r.agent_cost <= g2.agent_cost + 1e-8          # persuasion helps the sender
    assert r.principal_cost <= g2.principal_cost + 1e-8  # and cannot hurt the receiver
    assert r.split.is_plausible(prior, tol=1e-7)
    total = sum(w for _, w in r.split.atoms)
    assert total == pytest.approx(1.0, abs=1e-9)


# ---------------------------------------------------------------------------
# g4: costly acquisition
# ---------------------------------------------------------------------------


def test_g4_benchmark_b(table_b):
    r = solve_g4(table_b, 0.75, 2.0)
    assert r.total_cost == pytest.approx(1.8809428908692696, abs=1e-6)
    assert r.gross_cost == pytest.approx(1.6008263829787235, abs=1e-6)
    assert r.channel_cost == pytest.approx(0.2801165078905461, abs=1e-6)
    assert r.agent_cost == pytest.approx(1.899046808510639, abs=1e-6)
    atoms = r.split.atoms
    assert len(atoms) == 2
    assert atoms[0][0] == pytest.approx(0.0115, abs=1e-9)   # grid point
    assert atoms[1][0] == pytest.approx(0.834, abs=1e-9)
    assert r.total_cost == r.gross_cost + r.channel_cost    # exact identity
    assert r.split.is_plausible(0.75, tol=1e-9)


def test_g4_zero_kappa_is_full_information_chord(table_b):
    r = solve_g4(table_b, 0.75, 0.0)
    chord = 0.75 * solve_g2(table_b, 1.0).principal_cost + 0.25 * solve_g2(table_b, 0.0).principal_cost
    assert r.total_cost == pytest.approx(chord, abs=1e-8)
    assert r.channel_cost == pytest.approx(0.0, abs=1e-12)


def test_g4_huge_kappa_buys_nothing(table_b):
    r = solve_g4(table_b, 0.75, 1e6)
    assert r.total_cost == pytest.approx(solve_g2(table_b, 0.75).principal_cost, abs=1e-6)
    assert len(r.split.atoms) == 1


def test_g4_monotone_in_kappa(table_b):
    prev = -np.inf
    for kappa in (0.0, 0.5, 1.0, 2.0, 4.0, 1e6):
        total = solve_g4(table_b, 0.75, kappa).total_cost
        assert total >= prev - 1e-9
        prev = total


def test_g4_never_beats_free_information(table_a):
    for kappa in (0.1, 1.0, 3.0):
        r = solve_g4(table_a, 0.4, kappa)
        assert r.gross_cost >= solve_g1(table_a, 0.4).principal_cost - 1e-8
        assert r.total_cost <= solve_g2(table_a, 0.4).principal_cost + kappa * 1e-12 + 1e-8


def test_g4_input_validation(table_b):
    with pytest.raises(ValueError):
        solve_g4(table_b, 1.0, 1.0)
    with pytest.raises(ValueError):
        solve_g4(table_b, 0.5, -0.5)
    with pytest.raises(ValueError):
        solve_g4(table_b, 0.5, np.inf)
    with pytest.raises(ValueError):
        solve_g4(table_b, 0.5, 1.0, grid_size=2)
