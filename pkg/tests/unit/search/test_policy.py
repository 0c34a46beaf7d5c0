"""Tests for the shared decision rules"""

import math

import pytest

from netmig.errors.planning import GoalUnreachable
from netmig.model.graph import MigrationGraph
from netmig.model.scenario import Goal
from netmig.model.technology import Technology
from netmig.search import policy as rules
from netmig.search.policy import MigrationStep, Policy, State, possible_migrations

IDS = ['ADSL_Copper_20', 'FTTCab_GPON_25', 'FTTCab_XGPON_50', 'FTTB_XGPON_100',
       'FTTB_UDWDM_100', 'FTTH_XGPON_100', 'FTTH_UDWDM_100']


@pytest.fixture()
def graph():
    technologies = [Technology.from_id(tech_id) for tech_id in IDS]
    edges = [(source, target) for source in IDS for target in IDS
             if source != target]
    return MigrationGraph(technologies, edges)


def targets(graph, tech_id, goal=Goal.FLEXIBLE, **kwargs):
    return [tech.id for tech in possible_migrations(graph.technology(tech_id),
                                                    graph, goal, **kwargs)]


def test_sorted_targets_without_downgrades(graph):
    """
    GIVEN a graph with every edge
    THEN targets are sorted by id, never lower the rate and respect the
         family rule
    """
    assert targets(graph, 'FTTCab_GPON_25') == [
        'FTTB_XGPON_100', 'FTTCab_XGPON_50', 'FTTH_XGPON_100']
    assert targets(graph, 'FTTCab_GPON_25', family_rule=False) == [
        'FTTB_UDWDM_100', 'FTTB_XGPON_100', 'FTTCab_XGPON_50',
        'FTTH_UDWDM_100', 'FTTH_XGPON_100']


def test_goal_absorbs(graph):
    """
    GIVEN a flexible goal
    THEN 100 Mbps technologies have no targets
    """
    assert targets(graph, 'FTTB_XGPON_100') == []
    assert targets(graph, 'FTTH_UDWDM_100', Goal.FIXED) == []


def test_fixed_goal_waypoints(graph):
    """
    GIVEN a fixed FTTH goal
    THEN FTTB at 100 Mbps may still move to FTTH, and non-FTTH 100 Mbps
         targets disappear when waypoints are forbidden
    """
    assert targets(graph, 'FTTB_XGPON_100', Goal.FIXED) == ['FTTH_XGPON_100']
    assert targets(graph, 'FTTCab_XGPON_50', Goal.FIXED) == [
        'FTTB_XGPON_100', 'FTTH_XGPON_100']
    assert targets(graph, 'FTTCab_XGPON_50', Goal.FIXED,
                   allow_waypoints=False) == ['FTTH_XGPON_100']


@pytest.mark.parametrize('value, incumbent, expected', [
    (2.0, 1.0, True),
    (1.0, 1.0, False),
    (1.0 + 1e-14, 1.0, False),
    (0.5, 1.0, False),
    (-1e9, -math.inf, True),
    (-math.inf, -math.inf, False),
])
def test_better(value, incumbent, expected):
    """
    GIVEN a candidate and the incumbent
    THEN only a clearly larger value wins
    """
    assert rules.better(value, incumbent) is expected


def test_select_keeps_first_on_ties():
    """
    GIVEN tied options
    THEN the earliest one is selected
    """
    assert rules.select([('stay', 5.0), ('a', 5.0), ('b', 5.0 * (1 + 1e-13))]) == (0, 5.0)
    assert rules.select([('stay', 1.0), ('a', 3.0), ('b', 3.0)]) == (1, 3.0)


def test_expectation(toy):
    """
    GIVEN churn with probability 0.1
    THEN chance values are weighted and minus infinity propagates
    """
    assert rules.expectation(toy, [10.0, 20.0]) == pytest.approx(11.0, rel=1e-12)
    assert rules.expectation(toy, [10.0, -math.inf]) == -math.inf


def test_option_cost(toy):
    """
    GIVEN the toy scenario
    THEN staying is free and migrations are discounted from the decision
         year unless taken at face value
    """
    adsl, pon2 = toy.technology('ADSL_Copper_20'), toy.technology('FTTB_XGPON_100')
    assert rules.option_cost(toy, 2019, adsl, adsl) == 0.0
    assert rules.option_cost(toy, 2019, adsl, pon2) == pytest.approx(320 / 1.1, rel=1e-12)
    face_value = toy.replace(discount_migration_capex=False)
    assert rules.option_cost(face_value, 2019, adsl, pon2) == 320.0


def test_check_goal_within_window(toy):
    """
    GIVEN a goal two migrations away
    THEN a one year window is refused and a two year window accepted
    """
    graph = MigrationGraph(toy.graph.technologies(),
                           [('ADSL_Copper_20', 'FTTCab_GPON_25'),
                            ('FTTCab_GPON_25', 'FTTB_XGPON_100')])
    with pytest.raises(GoalUnreachable):
        rules.check_goal(toy.replace(graph=graph, T_mig=1))
    rules.check_goal(toy.replace(graph=graph, T_mig=2))
    rules.check_goal(toy.replace(graph=graph, T_mig=1, goal_enforced=False))


def test_policy_order_and_migrations():
    """
    GIVEN actions inserted out of order
    THEN the policy iterates in state order and lists migrations
    """
    policy = Policy({State(2019, 'B', 0): 'B', (2018, 'A', 0): 'B'})
    assert [state for state, _ in policy] == [State(2018, 'A', 0), State(2019, 'B', 0)]
    assert policy.migrations() == {State(2018, 'A', 0): 'B'}
    assert len(policy) == 2


def test_follow_path(toy):
    """
    GIVEN a policy migrating to PON1 and then to PON2
    THEN the path lists both steps in the years they start operating
    """
    policy = Policy({State(2018, 'ADSL_Copper_20', 0): 'FTTCab_GPON_25',
                     State(2019, 'FTTCab_GPON_25', 0): 'FTTB_XGPON_100',
                     State(2019, 'FTTCab_GPON_25', 1): 'FTTCab_GPON_25'})
    assert rules.follow_path(toy, policy) == (
        MigrationStep(2019, 'FTTCab_GPON_25'), MigrationStep(2020, 'FTTB_XGPON_100'))


def test_make_result_refuses_infinite(toy):
    """
    GIVEN a root worth minus infinity
    THEN no result is made
    """
    with pytest.raises(GoalUnreachable):
        rules.make_result(toy, -math.inf, Policy(), 'memo')
