"""Solvers for two-state matrix incentive-design games.

Four information regimes over the same cost data:

- g1: the principal observes the state and commits, per state, to a mixed
  reaction per agent action (full information).
- g2: the principal knows only a belief over the two states and commits to a
  single state-independent scheme (Bayesian asymmetry).
- g3: before playing g2, the agent commits to a signaling scheme about the
  state; solved as an obedience-constrained recommendation LP over the
  vertices of the g2 feasible polytopes (persuasion).
- g4: the principal buys information, paying kappa times the induced entropy
  reduction; solved by grid concavification of the g2 value net of the
  channel cost (costly acquisition).

Agent ties break in the principal's favor throughout (the weak-inequality
best-response constraints encode exactly that), and every reported scheme is
canonicalized to the lexicographically smallest optimal vertex so reruns are
reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from incentive_games.belief_engine import (
    PosteriorSplit,
    as_probability,
    envelope_from_samples,
    tilde_entropy,
)
from incentive_games.lp_kernel import (
    LinearProgram,
    Polytope,
    enumerate_vertices,
    lexicographic_argmin,
    solve_lp,
)

BEST_RESPONSE_TOL = 1e-8


class SolverError(RuntimeError):
    """An internal solver invariant failed (distinct from input validation)."""


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------


def _cost_pair(mats, name: str) -> tuple[np.ndarray, np.ndarray]:
    if len(mats) != 2:
        raise ValueError(f"{name} must hold one matrix per state")
    a = np.array(mats[0], dtype=float)
    b = np.array(mats[1], dtype=float)
    if a.ndim != 2 or a.shape != b.shape:
        raise ValueError(f"{name} matrices must share one m-by-n shape")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise ValueError(f"{name} entries must be finite")
    a.setflags(write=False)
    b.setflags(write=False)
    return a, b


@dataclass(frozen=True, eq=False)
class CostTable:
    """Per-state cost matrices: cp for the principal, ca for the agent.
    Rows are principal actions, columns agent actions.

    Instances hash by identity so derived vertex data can be memoized;
    the matrices are frozen read-only to keep that sound."""

    cp: tuple[np.ndarray, np.ndarray]
    ca: tuple[np.ndarray, np.ndarray]

    def __post_init__(self):
        cp = _cost_pair(self.cp, "cp")
        ca = _cost_pair(self.ca, "ca")
        if cp[0].shape != ca[0].shape:
            raise ValueError("cp and ca must share one m-by-n shape")
        object.__setattr__(self, "cp", cp)
        object.__setattr__(self, "ca", ca)

    @property
    def m(self) -> int:
        return self.cp[0].shape[0]

    @property
    def n(self) -> int:
        return self.cp[0].shape[1]


def _clean_columns(cols: np.ndarray) -> np.ndarray:
    cols = np.asarray(cols, dtype=float)
    if np.any(cols < -1e-10):
        raise ValueError("scheme columns must be nonnegative")
    cols = np.clip(cols, 0.0, None) + 0.0  # also normalizes -0.0
    sums = cols.sum(axis=-2)
    if np.any(np.abs(sums - 1.0) > 1e-10):
        raise ValueError("scheme columns must sum to 1")
    return cols


@dataclass(frozen=True)
class IncentiveScheme:
    """The principal's committed mixed reaction per agent action.

    `columns` has shape (m, n) for a state-independent scheme or (2, m, n)
    when the reaction may depend on the state."""

    columns: np.ndarray

    def __post_init__(self):
        cols = _clean_columns(self.columns)
        if cols.ndim == 3 and cols.shape[0] != 2:
            raise ValueError("state-indexed scheme needs exactly two states")
        if cols.ndim not in (2, 3):
            raise ValueError("columns must be (m, n) or (2, m, n)")
        object.__setattr__(self, "columns", cols)

    @property
    def state_dependent(self) -> bool:
        return self.columns.ndim == 3

    def for_state(self, k: int) -> np.ndarray:
        return self.columns[k] if self.state_dependent else self.columns


@dataclass(frozen=True)
class StateOutcome:
    agent_action: int
    principal_cost: float
    agent_cost: float


@dataclass(frozen=True)
class EquilibriumReport:
    scheme: IncentiveScheme
    agent_actions: tuple[int, int]
    principal_cost: float
    agent_cost: float
    per_state: tuple[StateOutcome, StateOutcome]
    belief: float

    def check(self, table: CostTable, tol: float = 1e-9, br_tol: float = BEST_RESPONSE_TOL) -> None:
        """Re-evaluate costs and best responses against the table."""
        mu = self.belief
        weights = (mu, 1.0 - mu)
        jp = ja = 0.0
        for k, w in enumerate(weights):
            gamma = self.scheme.for_state(k)
            j = self.agent_actions[k]
            ac = float(gamma[:, j] @ table.ca[k][:, j])
            pc = float(gamma[:, j] @ table.cp[k][:, j])
            for l in range(table.n):
                alt = float(gamma[:, l] @ table.ca[k][:, l])
                if alt < ac - br_tol:
                    raise AssertionError(
                        f"state {k}: action {l} beats committed response {j}"
                    )
            jp += w * pc
            ja += w * ac
        if abs(jp - self.principal_cost) > tol or abs(ja - self.agent_cost) > tol:
            raise AssertionError("reported costs do not match re-evaluation")


@dataclass(frozen=True)
class RecommendedScheme:
    group: tuple[int, int]
    scheme: np.ndarray
    prob_given_state: tuple[float, float]
    posterior: float


@dataclass(frozen=True)
class PersuasionReport:
    recommendation_distribution: tuple[RecommendedScheme, ...]
    split: PosteriorSplit
    principal_cost: float
    agent_cost: float
    prior: float

    @property
    def revealing(self) -> bool:
        return len(self.split.atoms) > 1


@dataclass(frozen=True)
class AcquisitionReport:
    split: PosteriorSplit
    gross_cost: float
    channel_cost: float
    total_cost: float
    agent_cost: float
    kappa: float
    prior: float
    grid_size: int


# ---------------------------------------------------------------------------
# constraint assembly
# ---------------------------------------------------------------------------


def _best_response_rows(table: CostTable, state: int, rec: int) -> np.ndarray:
    """Rows R with R x <= 0 making column `rec` a best response in `state`,
    over the flattened scheme x (columns stacked left to right)."""
    m, n = table.m, table.n
    ca = table.ca[state]
    rows = np.zeros((n - 1, m * n))
    r = 0
    for l in range(n):
        if l == rec:
            continue
        rows[r, rec * m : (rec + 1) * m] += ca[:, rec]
        rows[r, l * m : (l + 1) * m] -= ca[:, l]
        r += 1
    return rows


def _column_sum_equalities(m: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    eq = np.zeros((n, m * n))
    for c in range(n):
        eq[c, c * m : (c + 1) * m] = 1.0
    return eq, np.ones(n)


def _pair_polytope(table: CostTable, i: int, j: int) -> Polytope:
    """Feasible state-independent schemes inducing response i in state one
    and j in state two."""
    rows = np.vstack([
        _best_response_rows(table, 0, i),
        _best_response_rows(table, 1, j),
    ])
    eq, eqr = _column_sum_equalities(table.m, table.n)
    return Polytope(
        dim=table.m * table.n,
        constraint_matrix=rows,
        rhs=np.zeros(rows.shape[0]),
        equality_matrix=eq,
        equality_rhs=eqr,
    )


def _to_matrix(x: np.ndarray, m: int, n: int) -> np.ndarray:
    """Reshape a stacked-columns LP point into an (m, n) scheme, washing out
    solver residue: clip tiny negatives and rescale each column to sum to 1."""
    gamma = np.clip(x.reshape(n, m).T, 0.0, None) + 0.0
    sums = gamma.sum(axis=0)
    if np.any(sums < 0.5):
        raise SolverError("scheme column collapsed; LP solution is not a distribution")
    return gamma / sums


def _scheme_key(x: np.ndarray) -> tuple:
    return tuple(np.round(np.asarray(x).reshape(-1), 9) + 0.0)


# ---------------------------------------------------------------------------
# g1 and g2
# ---------------------------------------------------------------------------


def solve_g1(table: CostTable, prior) -> EquilibriumReport:
    """Full-information game: per state, the principal commits to the scheme
    minimizing its cost at the induced best response; costs aggregate under
    the prior."""
    mu = as_probability(prior)
    m, n = table.m, table.n
    eq, eqr = _column_sum_equalities(m, n)
    schemes = []
    outcomes = []
    for k in range(2):
        best = None
        for j in range(n):
            rows = _best_response_rows(table, k, j)
            c = np.zeros(m * n)
            c[j * m : (j + 1) * m] = table.cp[k][:, j]
            lp = LinearProgram(
                objective=c,
                constraint_matrix=rows,
                rhs=np.zeros(rows.shape[0]),
                equality_matrix=eq,
                equality_rhs=eqr,
            )
            sol = solve_lp(lp)
            if sol.optimal and (best is None or sol.value < best[0]):
                best = (sol.value, j, lp)
        if best is None:
            raise SolverError(f"no inducible agent response in state {k}")
        value, j, lp = best
        canon = lexicographic_argmin(lp)
        gamma = _to_matrix(canon.point, m, n)
        principal_cost = float(gamma[:, j] @ table.cp[k][:, j])
        agent_cost = float(gamma[:, j] @ table.ca[k][:, j])
        schemes.append(gamma)
        outcomes.append(StateOutcome(j, principal_cost, agent_cost))

    weights = (mu, 1.0 - mu)
    jp = sum(w * o.principal_cost for w, o in zip(weights, outcomes))
    ja = sum(w * o.agent_cost for w, o in zip(weights, outcomes))
    return EquilibriumReport(
        scheme=IncentiveScheme(np.stack(schemes)),
        agent_actions=(outcomes[0].agent_action, outcomes[1].agent_action),
        principal_cost=float(jp),
        agent_cost=float(ja),
        per_state=tuple(outcomes),
        belief=mu,
    )


def _pair_objective(table: CostTable, i: int, j: int, mu: float) -> np.ndarray:
    m = table.m
    c = np.zeros(m * table.n)
    c[i * m : (i + 1) * m] += mu * table.cp[0][:, i]
    c[j * m : (j + 1) * m] += (1.0 - mu) * table.cp[1][:, j]
    return c


def solve_g2(table: CostTable, belief) -> EquilibriumReport:
    """Bayesian game: one state-independent scheme; the response pair with
    the cheapest induced (feasible) scheme wins, first pair on ties."""
    mu = as_probability(belief)
    m, n = table.m, table.n
    best = None
    for i in range(n):
        for j in range(n):
            poly = _pair_polytope(table, i, j)
            lp = poly.lp(_pair_objective(table, i, j, mu))
            sol = solve_lp(lp)
            if sol.optimal and (best is None or sol.value < best[0]):
                best = (sol.value, (i, j), lp)
    if best is None:
        raise SolverError("no inducible response pair")
    value, (i, j), lp = best
    canon = lexicographic_argmin(lp)
    gamma = _to_matrix(canon.point, m, n)
    outcomes = []
    for k, rec in enumerate((i, j)):
        pc = float(gamma[:, rec] @ table.cp[k][:, rec])
        ac = float(gamma[:, rec] @ table.ca[k][:, rec])
        outcomes.append(StateOutcome(rec, pc, ac))
    jp = mu * outcomes[0].principal_cost + (1.0 - mu) * outcomes[1].principal_cost
    ja = mu * outcomes[0].agent_cost + (1.0 - mu) * outcomes[1].agent_cost
    return EquilibriumReport(
        scheme=IncentiveScheme(gamma),
        agent_actions=(i, j),
        principal_cost=float(jp),
        agent_cost=float(ja),
        per_state=tuple(outcomes),
        belief=mu,
    )


# ---------------------------------------------------------------------------
# vertex profiles and value curves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _PairProfile:
    group: tuple[int, int]
    schemes: tuple[np.ndarray, ...]       # lex-sorted vertex schemes
    principal: np.ndarray                 # (n_vertices, 2) per-state costs
    agent: np.ndarray                     # (n_vertices, 2)


@lru_cache(maxsize=128)
def _pair_profiles(table: CostTable) -> tuple[_PairProfile, ...]:
    profiles = []
    for i in range(table.n):
        for j in range(table.n):
            verts = enumerate_vertices(_pair_polytope(table, i, j))
            if not verts:
                continue
            verts = sorted(verts, key=_scheme_key)
            mats = [_to_matrix(v, table.m, table.n) for v in verts]
            p = np.array(
                [[g[:, i] @ table.cp[0][:, i], g[:, j] @ table.cp[1][:, j]] for g in mats]
            )
            a = np.array(
                [[g[:, i] @ table.ca[0][:, i], g[:, j] @ table.ca[1][:, j]] for g in mats]
            )
            profiles.append(_PairProfile((i, j), tuple(mats), p, a))
    if not profiles:
        raise SolverError("no inducible response pair")
    return tuple(profiles)


_TIE_TOL = 1e-12


def _curves_from_profiles(
    profiles: tuple[_PairProfile, ...], beliefs: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Principal and agent g2 value curves over a belief grid, replicating
    the solver's tie-breaks (first pair, then lex-smallest vertex)."""
    mu = beliefs[None, :]
    pair_vals = []
    pair_agent = []
    for prof in profiles:
        v = prof.principal[:, :1] @ mu + prof.principal[:, 1:] @ (1.0 - mu)
        vmin = v.min(axis=0)
        first = np.argmax(v <= vmin + _TIE_TOL, axis=0)     # lex-smallest vertex
        a = prof.agent[first, 0] * beliefs + prof.agent[first, 1] * (1.0 - beliefs)
        pair_vals.append(vmin)
        pair_agent.append(a)
    vals = np.vstack(pair_vals)
    agents = np.vstack(pair_agent)
    jp2 = vals.min(axis=0)
    chosen = np.argmax(vals <= jp2 + _TIE_TOL, axis=0)      # first pair in lex order
    ja2 = agents[chosen, np.arange(beliefs.shape[0])]
    return jp2, ja2


def principal_value_curve(table: CostTable, grid_size: int) -> tuple[np.ndarray, np.ndarray]:
    """Sampled belief -> g2 principal value. Piecewise affine and concave."""
    if grid_size < 2:
        raise ValueError("grid_size must be at least 2")
    beliefs = np.linspace(0.0, 1.0, grid_size)
    jp2, _ = _curves_from_profiles(_pair_profiles(table), beliefs)
    return beliefs, jp2


def agent_value_curve(table: CostTable, grid_size: int) -> tuple[np.ndarray, np.ndarray]:
    """Sampled belief -> g2 agent cost at the principal's chosen scheme."""
    if grid_size < 2:
        raise ValueError("grid_size must be at least 2")
    beliefs = np.linspace(0.0, 1.0, grid_size)
    _, ja2 = _curves_from_profiles(_pair_profiles(table), beliefs)
    return beliefs, ja2


# ---------------------------------------------------------------------------
# candidate-scheme collection (persuasion action set)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class XiEntry:
    scheme: np.ndarray
    groups: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class XiCollection:
    """Vertices of every response-pair polytope, grouped by pair, plus a
    deduplicated view that keeps group membership."""

    groups: dict[tuple[int, int], tuple[np.ndarray, ...]]
    unique: tuple[XiEntry, ...]


def collect_xi(table: CostTable) -> XiCollection:
    groups: dict[tuple[int, int], tuple[np.ndarray, ...]] = {}
    for i in range(table.n):
        for j in range(table.n):
            verts = enumerate_vertices(_pair_polytope(table, i, j))
            mats = sorted(
                (_to_matrix(v, table.m, table.n) for v in verts), key=_scheme_key
            )
            groups[(i, j)] = tuple(mats)
    seen: dict[tuple, list[tuple[int, int]]] = {}
    order: list[tuple] = []
    reps: dict[tuple, np.ndarray] = {}
    for g, mats in groups.items():
        for mat in mats:
            key = _scheme_key(mat)
            if key not in seen:
                seen[key] = []
                order.append(key)
                reps[key] = mat
            seen[key].append(g)
    unique = tuple(
        XiEntry(scheme=reps[k], groups=tuple(sorted(seen[k]))) for k in sorted(order)
    )
    return XiCollection(groups=groups, unique=unique)


# ---------------------------------------------------------------------------
# g3: agent-driven persuasion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Rec:
    group: tuple[int, int]
    scheme: np.ndarray
    principal: tuple[float, float]
    agent: tuple[float, float]


def _recommendations(table: CostTable) -> list[_Rec]:
    recs = []
    for prof in _pair_profiles(table):
        for g, p, a in zip(prof.schemes, prof.principal, prof.agent):
            recs.append(_Rec(prof.group, g, (float(p[0]), float(p[1])), (float(a[0]), float(a[1]))))
    return recs


def _pareto_minimal(points: list[tuple[float, float]]) -> list[int]:
    """Indices of profiles not strictly improved upon componentwise."""
    idx = []
    for i, (x, y) in enumerate(points):
        dominated = False
        for j, (u, v) in enumerate(points):
            if j == i:
                continue
            if u <= x and v <= y and (u < x - 1e-12 or v < y - 1e-12):
                dominated = True
                break
            if u == x and v == y and j < i:
                dominated = True               # exact duplicate: keep first only
                break
        if not dominated:
            idx.append(i)
    return idx


def _persuasion_lp(recs: list[_Rec], mu: float):
    """Reduced obedience LP. Returns (variables, lp, principal objective).

    Soundness of the reductions: a recommendation variable pi(r | state k) is
    forced to zero by the single obedience row against any deviation whose
    principal profile weakly dominates r's with a strict gap in state k (all
    row terms are nonnegative, so each must vanish); and an obedience row
    against a dominated deviation is implied by the dominating one. The full
    unreduced system is re-checked after solving.
    """
    pprofiles = [r.principal for r in recs]
    weights = (mu, 1.0 - mu)

    alive: list[tuple[int, int]] = []      # (rec index, state)
    for ri, r in enumerate(recs):
        for k in range(2):
            forced = False
            for d in recs:
                if (
                    d.principal[0] <= r.principal[0]
                    and d.principal[1] <= r.principal[1]
                    and d.principal[k] < r.principal[k] - 1e-9
                ):
                    forced = True
                    break
            if not forced:
                alive.append((ri, k))
    col_of = {key: t for t, key in enumerate(alive)}
    nv = len(alive)

    dev_idx = _pareto_minimal(pprofiles)
    rows = []
    alive_recs = sorted({ri for ri, _ in alive})
    for ri in alive_recs:
        r = recs[ri]
        for di in dev_idx:
            if di == ri:
                continue
            d = recs[di]
            row = np.zeros(nv)
            nonzero = False
            positive = False
            for k in range(2):
                key = (ri, k)
                if key in col_of:
                    coef = weights[k] * (r.principal[k] - d.principal[k])
                    row[col_of[key]] = coef
                    nonzero = nonzero or coef != 0.0
                    positive = positive or coef > 0.0
            if nonzero and positive:
                rows.append(row)

    eq = np.zeros((2, nv))
    for (ri, k), t in col_of.items():
        eq[k, t] = 1.0
    agent_obj = np.array([weights[k] * recs[ri].agent[k] for ri, k in alive])
    principal_obj = np.array([weights[k] * recs[ri].principal[k] for ri, k in alive])

    lp = LinearProgram(
        objective=agent_obj,
        constraint_matrix=np.vstack(rows) if rows else None,
        rhs=np.zeros(len(rows)) if rows else None,
        equality_matrix=eq,
        equality_rhs=np.ones(2),
    )
    return alive, lp, principal_obj


def _verify_obedience(recs: list[_Rec], mu: float, pi: np.ndarray, tol: float = 1e-8):
    """Check the full unreduced obedience system: for every recommendation r
    and every deviation d, switching must not profit the principal."""
    weights = (mu, 1.0 - mu)
    for ri, r in enumerate(recs):
        mass = pi[ri, 0] * weights[0] + pi[ri, 1] * weights[1]
        if mass <= 1e-12:
            continue
        base = pi[ri, 0] * weights[0] * r.principal[0] + pi[ri, 1] * weights[1] * r.principal[1]
        for d in recs:
            alt = pi[ri, 0] * weights[0] * d.principal[0] + pi[ri, 1] * weights[1] * d.principal[1]
            if base > alt + tol:
                raise SolverError("obedience violated in persuasion solution")
    for k in range(2):
        if abs(pi[:, k].sum() - 1.0) > tol:
            raise SolverError("recommendation conditionals do not normalize")


def _uninformative_report(g2: EquilibriumReport, prior: float) -> PersuasionReport:
    rec = RecommendedScheme(
        group=g2.agent_actions,
        scheme=g2.scheme.columns,
        prob_given_state=(1.0, 1.0),
        posterior=prior,
    )
    return PersuasionReport(
        recommendation_distribution=(rec,),
        split=PosteriorSplit(((prior, 1.0),)),
        principal_cost=g2.principal_cost,
        agent_cost=g2.agent_cost,
        prior=prior,
    )


def solve_g3(table: CostTable, prior) -> PersuasionReport:
    """Agent-optimal persuasion: the agent recommends candidate schemes to
    the principal subject to obedience; agent-optimal ties break toward the
    lower principal cost (stage-2 re-solve)."""
    mu = as_probability(prior)
    g2_here = solve_g2(table, mu)
    if mu <= 0.0 or mu >= 1.0:
        return _uninformative_report(g2_here, mu)

    recs = _recommendations(table)
    alive, lp, principal_obj = _persuasion_lp(recs, mu)
    sol = solve_lp(lp)
    if not sol.optimal:
        raise SolverError("persuasion LP did not solve")
    agent_value = float(sol.value)

    # stage 2: among agent-optimal policies, minimize the principal's cost
    stage2 = LinearProgram(
        objective=principal_obj,
        constraint_matrix=lp.constraint_matrix if lp.constraint_matrix.shape[0] else None,
        rhs=lp.rhs if lp.rhs.shape[0] else None,
        equality_matrix=np.vstack([lp.equality_matrix, lp.objective[None, :]]),
        equality_rhs=np.concatenate([lp.equality_rhs, [agent_value]]),
    )
    sol2 = solve_lp(stage2)
    if not sol2.optimal:
        raise SolverError("persuasion tie-break LP did not solve")
    principal_value = float(sol2.value)

    pi = np.zeros((len(recs), 2))
    for t, (ri, k) in enumerate(alive):
        pi[ri, k] = max(0.0, float(sol2.point[t]))
    _verify_obedience(recs, mu, pi)
    pi /= pi.sum(axis=0, keepdims=True)    # wash out solver residue (checked above)

    if (
        abs(agent_value - g2_here.agent_cost) <= 1e-9
        and abs(principal_value - g2_here.principal_cost) <= 1e-9
    ):
        return _uninformative_report(g2_here, mu)

    weights = (mu, 1.0 - mu)
    entries = []
    atoms = []
    for ri, r in enumerate(recs):
        marginal = pi[ri, 0] * weights[0] + pi[ri, 1] * weights[1]
        if marginal <= 1e-12:
            continue
        posterior = pi[ri, 0] * weights[0] / marginal
        entries.append(
            RecommendedScheme(
                group=r.group,
                scheme=r.scheme,
                prob_given_state=(float(pi[ri, 0]), float(pi[ri, 1])),
                posterior=float(posterior),
            )
        )
        atoms.append((float(posterior), float(marginal)))
    total = sum(w for _, w in atoms)
    atoms = [(p, w / total) for p, w in atoms]
    split = PosteriorSplit(tuple(atoms)).consolidated(tol=1e-9)
    return PersuasionReport(
        recommendation_distribution=tuple(entries),
        split=split,
        principal_cost=principal_value,
        agent_cost=agent_value,
        prior=mu,
    )


# ---------------------------------------------------------------------------
# g4: costly information acquisition
# ---------------------------------------------------------------------------


def solve_g4(table: CostTable, prior, kappa: float, grid_size: int = 2001) -> AcquisitionReport:
    """Grid concavification of the g2 value net of the entropy-reduction
    channel cost; the supporting split is the principal's optimal acquisition."""
    mu = as_probability(prior)
    if not (0.0 < mu < 1.0):
        raise ValueError("acquisition needs an interior prior; degenerate beliefs are a g2 problem")
    kappa = float(kappa)
    if not (np.isfinite(kappa) and kappa >= 0.0):
        raise ValueError("kappa must be finite and nonnegative")
    if grid_size < 3:
        raise ValueError("grid_size must be at least 3")

    beliefs, jp2 = principal_value_curve(table, grid_size)
    htilde = np.array([tilde_entropy(b, mu) for b in beliefs])
    g = jp2 - kappa * htilde
    value, atoms = envelope_from_samples(beliefs, g, mu)

    idx = [int(round(p * (grid_size - 1))) for p, _ in atoms]
    gross = sum(w * float(jp2[t]) for (_, w), t in zip(atoms, idx))
    channel = kappa * (1.0 - sum(w * float(htilde[t]) for (_, w), t in zip(atoms, idx)))
    total = float(value + kappa)
    agent = sum(w * solve_g2(table, p).agent_cost for p, w in atoms)
    return AcquisitionReport(
        split=PosteriorSplit(atoms),
        gross_cost=float(gross),
        channel_cost=float(channel),
        total_cost=total,
        agent_cost=float(agent),
        kappa=kappa,
        prior=mu,
        grid_size=grid_size,
    )
