"""When does the informed agent volunteer information?

In the persuasion variant the agent commits, before seeing the state, to a
signaling scheme that recommends an incentive scheme to the principal. The
principal obeys a recommendation only if it is incentive compatible given the
induced posterior, so the agent is solving: which spread of posteriors,
averaging to the prior, minimizes my own expected cost?

Two bundled benchmarks show the two possible answers. On table A the agent's
cost-of-belief curve is already convex, so no split helps and the agent stays
silent. On table B the curve has a concave kink: splitting the prior 0.75
into posteriors {0, 1} (weights 0.25 / 0.75) lowers the agent's cost from
2.0 to 1.75 and, incidentally, the principal's from 2.0 to 1.0 -- revealing
the state helps both sides.

Run: python3 demos/persuasion_split.py
"""

from incentive_games.matrix_games import solve_g2, solve_g3
from incentive_games.scenarios import load_scenario

for name in ("scenarioA", "scenarioB"):
    scenario = load_scenario(name)
    table, prior = scenario.table, scenario.prior
    silent = solve_g2(table, prior)
    persuaded = solve_g3(table, prior)

    print(f"{name}: prior P(state 1) = {prior}")
    print(f"  without persuasion: agent {silent.agent_cost:.4f}, principal {silent.principal_cost:.4f}")
    print(f"  with persuasion:    agent {persuaded.agent_cost:.4f}, principal {persuaded.principal_cost:.4f}")
    if not persuaded.revealing:
        print("  -> the agent reveals nothing; persuasion has no value here")
    else:
        print("  -> the agent splits the principal's belief:")
        for posterior, weight in persuaded.split.atoms:
            print(f"       posterior {posterior:.3f} with probability {weight:.3f}")
        print("     recommended schemes and the posteriors that justify them:")
        for rec in persuaded.recommendation_distribution:
            pair = tuple(a + 1 for a in rec.group)
            print(f"       induces actions {pair} at posterior {rec.posterior:.3f}")
    print()
