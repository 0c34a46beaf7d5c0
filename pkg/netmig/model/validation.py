#! /usr/bin/env python
"""Scenario validation and goal sets"""

from dataclasses import dataclass

import networkx as nx

from netmig.errors.planning import GoalUnreachable
from netmig.model.scenario import SUBSCRIBER_CLASSES, DemandMix, Goal
from netmig.model.technology import (DATA_RATES, Architecture, Family,
                                     family_restricted)


@dataclass(frozen=True)
class Violation:
    """One broken invariant"""
    code: str
    message: str

    def __str__(self):
        return f"{self.code}: {self.message}"


def meets_goal(tech, goal, goal_rate):
    """True when ``tech`` belongs to the goal set of ``goal``"""
    if tech.data_rate < goal_rate:
        return False
    return goal is Goal.FLEXIBLE or tech.architecture is Architecture.FTTH


def _horizon(config):
    if config.T_mig < 1:
        yield Violation('HORIZON_EMPTY',
                        f"migration window of {config.T_mig} years")
    if config.T_NW < config.T_mig:
        yield Violation('HORIZON_ORDER',
                        f"life-cycle of {config.T_NW} years is shorter than "
                        f"the {config.T_mig} year window")
    if config.discount_rate < 0:
        yield Violation('NEGATIVE_DISCOUNT',
                        f"discount rate {config.discount_rate}")


def _technologies(config):
    for tech in config.graph.technologies():
        if tech.id != tech.expected_id:
            yield Violation('BAD_TECHNOLOGY',
                            f"{tech.id} should be named {tech.expected_id}")
        if tech.data_rate <= 0:
            yield Violation('BAD_TECHNOLOGY', f"{tech.id} has no data rate")
        elif tech.data_rate not in DATA_RATES:
            yield Violation('BAD_TECHNOLOGY',
                            f"{tech.id} rate {tech.data_rate} is not one of "
                            f"{DATA_RATES}")
        copper = tech.family is Family.COPPER
        if tech.is_copper != copper or (tech.is_copper and tech.data_rate != 20):
            yield Violation('BAD_TECHNOLOGY',
                            f"{tech.id}: ADSL must be Copper at 20 Mbps")
        if tech.stages not in (1, 2):
            yield Violation('BAD_TECHNOLOGY',
                            f"{tech.id} has {tech.stages} remote node stages")


def _graph(config):
    graph = config.graph
    for node in graph.unknown_nodes():
        yield Violation('UNKNOWN_NODE', f"edge endpoint {node} is not declared")
    if config.start_technology not in graph:
        yield Violation('UNKNOWN_START',
                        f"start technology {config.start_technology} is not "
                        "in the graph")
    for source, target in graph.edges:
        if source == target:
            yield Violation('SELF_EDGE', f"{source} migrates to itself")
            continue
        if source not in graph or target not in graph:
            continue
        origin, destination = graph.technology(source), graph.technology(target)
        if destination.data_rate < origin.data_rate:
            yield Violation('RATE_DOWNGRADE_OR_FAMILY_RULE',
                            f"{source} -> {target} lowers the data rate")
        elif config.family_rule and family_restricted(origin, destination):
            yield Violation('RATE_DOWNGRADE_OR_FAMILY_RULE',
                            f"{source} -> {target} changes between single and "
                            "two stage families at 100 Mbps")


def _tariffs(config):
    tariffs = config.tariffs
    for (subscriber_class, rate), value in sorted(
            tariffs.entries.items(), key=lambda item: (item[0][0].value, item[0][1])):
        if value < 0:
            yield Violation('NEGATIVE_TARIFF',
                            f"{subscriber_class.value} at {rate} Mbps is {value}")
    rates = sorted({tech.data_rate for tech in config.graph.technologies()})
    for subscriber_class in SUBSCRIBER_CLASSES:
        if config.demands.count(subscriber_class) <= 0:
            continue
        for rate in rates:
            if (tariffs.serves(subscriber_class, rate)
                    and (subscriber_class, rate) not in tariffs.entries):
                yield Violation('TARIFF_MISSING',
                                f"no tariff for {subscriber_class.value} at "
                                f"{rate} Mbps")


def _curve(config):
    values = config.curve.values
    for year, fraction in values.items():
        if not 0.0 <= fraction <= 1.0:
            yield Violation('CURVE_RANGE', f"{year}: {fraction} is outside [0, 1]")
    years = sorted(values)
    for previous, current in zip(years, years[1:]):
        if values[current] < values[previous]:
            yield Violation('CURVE_DECREASING',
                            f"{current}: {values[current]} is below "
                            f"{previous}: {values[previous]}")
    for year in range(config.T_start, config.end_year + 1):
        if year not in values:
            yield Violation('CURVE_MISSING_YEAR', f"no penetration for {year}")


def _demands(config):
    demands = config.demands
    for subscriber_class, count in demands.counts.items():
        if count < 0:
            yield Violation('NEGATIVE_DEMAND',
                            f"{subscriber_class.value} demand is {count}")
    if demands.label is DemandMix.PURE_RESIDENTIAL and any(
            demands.count(item) > 0 for item in SUBSCRIBER_CLASSES[1:]):
        yield Violation('DEMAND_MIX',
                        "pure residential demand has business or ITS subscribers")


def _churn(config):
    churn = config.churn
    for name in ('rate', 'probability'):
        value = getattr(churn, name)
        if not 0.0 <= value <= 1.0:
            yield Violation('CHURN_RANGE', f"churn {name} {value} is outside [0, 1]")


def _costs(config):
    costs = config.costs
    if costs.adsl_opex_per_subscriber < 0:
        yield Violation('NEGATIVE_COST', "ADSL OPEX is negative")
    for tech_id, record in sorted(costs.records.items()):
        for name, value in record.amounts().items():
            if value < 0:
                yield Violation('NEGATIVE_COST', f"{tech_id} {name} is {value}")
    for tech in config.graph.technologies():
        if not tech.is_copper and tech.id not in costs.records:
            yield Violation('COST_MISSING', f"no cost record for {tech.id}")


def _goal(config):
    if not config.goal_enforced:
        return
    if not any(meets_goal(tech, config.goal, config.goal_rate)
               for tech in config.graph.technologies()):
        yield Violation('GOAL_UNREACHABLE',
                        f"no technology meets {config.goal.value} at "
                        f"{config.goal_rate} Mbps")


CHECKS = (_horizon, _technologies, _graph, _tariffs, _curve, _demands,
          _churn, _costs, _goal)


def validate_scenario(config):
    """
    Every violated invariant of ``config``; an empty list means valid.

    :param ScenarioConfig config: The scenario to check
    :return: list of :class:`Violation`
    """
    violations = []
    for check in CHECKS:
        violations.extend(check(config))
    return violations


def goal_set(config, strict=True):
    """
    Ids of the technologies that satisfy the scenario goal.

    :param ScenarioConfig config: A valid scenario
    :param bool strict: raise when the set is empty or unreachable
    :raises GoalUnreachable: in strict mode, when no goal node can be reached
    """
    goals = {tech.id for tech in config.graph.technologies()
             if meets_goal(tech, config.goal, config.goal_rate)}
    if not strict:
        return goals
    if not goals:
        raise GoalUnreachable(config.goal.value,
                              f"no technology provides {config.goal_rate} Mbps")
    reachable = nx.descendants(config.graph.digraph, config.start_technology)
    reachable.add(config.start_technology)
    if not goals & reachable:
        raise GoalUnreachable(config.goal.value,
                              f"no goal technology is reachable from "
                              f"{config.start_technology}")
    return goals
