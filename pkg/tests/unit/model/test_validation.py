"""Tests for scenario validation"""

import pytest

from netmig import economics
from netmig.errors.planning import GoalUnreachable
from netmig.model.graph import MigrationGraph
from netmig.model.scenario import (ChurnModel, CostDataset, DemandMix,
                                   DemandProfile, Goal, PenetrationCurve, SubscriberClass,
                                   TariffTable)
from netmig.model.technology import Technology
from netmig.model.validation import goal_set, meets_goal, validate_scenario
from netmig.scenarios.bundle import default_bundle
from netmig.scenarios.loader import load_scenario


def codes(config):
    return sorted({violation.code for violation in validate_scenario(config)})


def test_toy_valid(toy):
    """
    GIVEN the toy scenario
    THEN it has no violations
    """
    assert validate_scenario(toy) == []


@pytest.mark.parametrize('changes, code', [
    ({'T_mig': 0}, 'HORIZON_EMPTY'),
    ({'T_NW': 2}, 'HORIZON_ORDER'),
    ({'discount_rate': -0.01}, 'NEGATIVE_DISCOUNT'),
    ({'start_technology': 'FTTH_HPON_100'}, 'UNKNOWN_START'),
    ({'churn': ChurnModel(rate=1.5)}, 'CHURN_RANGE'),
    ({'churn': ChurnModel(probability=-0.1)}, 'CHURN_RANGE'),
    ({'demands': DemandProfile({SubscriberClass.RESIDENTIAL: -5})},
     'NEGATIVE_DEMAND'),
    ({'demands': DemandProfile({SubscriberClass.RESIDENTIAL: 100,
                                SubscriberClass.BUSINESS: 3})}, 'DEMAND_MIX'),
])
def test_field_violations(toy_factory, changes, code):
    """
    GIVEN the toy scenario with one broken field
    THEN validation reports the matching code
    """
    assert code in codes(toy_factory(**changes))


def test_curve_violations(toy_factory):
    """
    GIVEN a curve that leaves [0, 1], decreases and stops early
    THEN each problem is reported
    """
    curve = PenetrationCurve(toy_factory().curve.label,
                             {2018: 0.5, 2019: 1.2, 2020: 0.4})
    assert codes(toy_factory(curve=curve)) == [
        'CURVE_DECREASING', 'CURVE_MISSING_YEAR', 'CURVE_RANGE']


def test_graph_violations(toy):
    """
    GIVEN edges that loop, lower the rate or name an unknown node
    THEN all three are reported
    """
    graph = (toy.graph.with_edge('FTTCab_GPON_25', 'FTTCab_GPON_25')
             .with_edge('FTTB_XGPON_100', 'FTTCab_GPON_25')
             .with_edge('FTTB_XGPON_100', 'FTTH_XGPON_100'))
    assert codes(toy.replace(graph=graph)) == [
        'RATE_DOWNGRADE_OR_FAMILY_RULE', 'SELF_EDGE', 'UNKNOWN_NODE']


def test_family_rule_switch(toy):
    """
    GIVEN an edge from a two-stage family to a single-stage 100 Mbps node
    THEN it is reported unless the family rule is switched off
    """
    technologies = toy.graph.technologies() + [Technology.from_id('FTTB_UDWDM_100')]
    graph = MigrationGraph(technologies, toy.graph.edges
                           + [('FTTCab_GPON_25', 'FTTB_UDWDM_100')])
    records = dict(toy.costs.records)
    records['FTTB_UDWDM_100'] = toy.costs.record('FTTB_XGPON_100')
    costs = CostDataset('toy', records, unit=toy.costs.unit)
    config = toy.replace(graph=graph, costs=costs)
    assert codes(config) == ['RATE_DOWNGRADE_OR_FAMILY_RULE']
    assert codes(config.replace(family_rule=False)) == []


def test_bad_technology(toy):
    """
    GIVEN technologies whose fields disagree with their ids or rates
    THEN BAD_TECHNOLOGY is reported
    """
    odd = Technology.from_id('FTTH_GPON_50')
    misnamed = Technology(id='FTTH_FAST_100', architecture=odd.architecture,
                          family=odd.family, data_rate=75, stages=3)
    graph = MigrationGraph(toy.graph.technologies() + [misnamed], toy.graph.edges)
    assert 'BAD_TECHNOLOGY' in codes(toy.replace(graph=graph))


def test_tariff_violations(toy):
    """
    GIVEN a negative tariff and a missing tariff
    THEN both are reported
    """
    tariffs = TariffTable({(SubscriberClass.RESIDENTIAL, 20): -3.6,
                           (SubscriberClass.RESIDENTIAL, 100): 13.2})
    assert codes(toy.replace(tariffs=tariffs)) == ['NEGATIVE_TARIFF',
                                                  'TARIFF_MISSING']


def test_its_below_minimum_rate(toy):
    """
    GIVEN ITS demand with a minimum served rate of 50 Mbps
    THEN missing ITS tariffs at lower rates are not violations
    """
    entries = dict(toy.tariffs.entries)
    entries[(SubscriberClass.ITS, 100)] = 60.0
    tariffs = TariffTable(entries,
                          min_rates={SubscriberClass.ITS: 50})
    config = toy.replace(tariffs=tariffs, demands=DemandProfile(
        {SubscriberClass.RESIDENTIAL: 100, SubscriberClass.ITS: 4},
        label=DemandMix.CONVERGED))
    assert validate_scenario(config) == []


def test_bundled_its_below_minimum_rate():
    """
    GIVEN the converged Munich scenario, starting on 20 Mbps ADSL with ITS demand
    WHEN it is validated and its starting revenue is computed
    THEN there is no violation and ITS base stations add no revenue on ADSL
    """
    config = load_scenario(default_bundle().scenario_path('munich_converged'))
    assert validate_scenario(config) == []
    assert config.start.data_rate < config.tariffs.min_rates[SubscriberClass.ITS]
    assert config.tariffs.arpu(SubscriberClass.ITS, config.start.data_rate) == 0.0
    counts = dict(config.demands.counts)
    counts[SubscriberClass.ITS] *= 100
    busier = config.replace(demands=DemandProfile(counts, config.demands.label))
    assert (economics.yearly_revenue(busier, config.start, config.T_start)
            == economics.yearly_revenue(config, config.start, config.T_start))


def test_costs(toy):
    """
    GIVEN a dataset without PON1 and with negative ADSL OPEX
    THEN COST_MISSING and NEGATIVE_COST are reported
    """
    costs = CostDataset('toy', {'FTTB_XGPON_100': toy.costs.record('FTTB_XGPON_100')},
                        unit=toy.costs.unit, adsl_opex_per_subscriber=-1.0)
    assert codes(toy.replace(costs=costs)) == ['COST_MISSING', 'NEGATIVE_COST']


def test_goal_sets(toy):
    """
    GIVEN the toy scenario
    THEN PON2 is the only flexible goal and no FTTH node exists
    """
    assert goal_set(toy) == {'FTTB_XGPON_100'}
    fixed = toy.replace(goal=Goal.FIXED)
    assert goal_set(fixed, strict=False) == set()
    assert codes(fixed) == ['GOAL_UNREACHABLE']
    assert codes(fixed.replace(goal_enforced=False)) == []
    with pytest.raises(GoalUnreachable):
        goal_set(fixed)


@pytest.mark.parametrize('name', ['munich_residential', 'munich_converged'])
def test_munich_goal_sets(name):
    """
    GIVEN a bundled scenario on the Munich graph
    WHEN the goal sets of both goals are computed
    THEN the FTTH nodes meet the fixed goal and every 100 Mbps node the flexible one
    """
    config = load_scenario(default_bundle().scenario_path(name))
    flexible = goal_set(config.replace(goal=Goal.FLEXIBLE))
    fixed = goal_set(config.replace(goal=Goal.FIXED))
    assert fixed == {'FTTH_XGPON_100', 'FTTH_UDWDM_100', 'FTTH_HPON_100'}
    assert flexible == fixed | {'FTTCab_XGPON_100', 'FTTB_XGPON_100',
                                'FTTB_UDWDM_100', 'FTTB_HPON_100'}
    assert fixed <= flexible


def test_goal_not_reachable(toy):
    """
    GIVEN a goal node with no incoming path from the start
    WHEN the strict goal set is requested
    THEN GoalUnreachable is raised
    """
    graph = MigrationGraph(toy.graph.technologies(),
                           [('ADSL_Copper_20', 'FTTCab_GPON_25')])
    with pytest.raises(GoalUnreachable):
        goal_set(toy.replace(graph=graph))


@pytest.mark.parametrize('tech_id, goal, expected', [
    ('FTTB_XGPON_100', Goal.FLEXIBLE, True),
    ('FTTB_XGPON_100', Goal.FIXED, False),
    ('FTTH_UDWDM_100', Goal.FIXED, True),
    ('FTTH_XGPON_50', Goal.FLEXIBLE, False),
])
def test_meets_goal(tech_id, goal, expected):
    """
    GIVEN a technology and a goal at 100 Mbps
    THEN membership follows rate and architecture
    """
    assert meets_goal(Technology.from_id(tech_id), goal, 100) is expected
