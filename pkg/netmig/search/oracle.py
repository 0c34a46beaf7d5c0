#! /usr/bin/env python
"""
Brute-force verifier for small instances.

Churn never changes which migrations are possible, so the best contingency
policy takes the same action in both churn outcomes of a state and is the
best open-loop plan. The oracle enumerates every plan, and every churn
sequence of each plan, and values them with explicit cash flows.
"""

import itertools
import math
from dataclasses import dataclass
from typing import Tuple

from netmig import economics
from netmig.economics import CashFlow
from netmig.errors.planning import Disagreement, InstanceTooLarge
from netmig.search import policy as rules
from netmig.search.policy import Policy, State

DEFAULT_MAX_YEARS = 5
DEFAULT_MAX_TECHNOLOGIES = 4
AGREEMENT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class ChurnSequence:
    """One churn outcome per operating year after the start, with its probability"""
    bits: Tuple[int, ...]
    probability: float


def churn_sequences(length, churn):
    """Every sequence of ``length`` churn outcomes, no churn first"""
    outcomes = churn.outcomes()
    for combination in itertools.product(outcomes, repeat=length):
        probability = 1.0
        for _, weight in combination:
            probability *= weight
        yield ChurnSequence(tuple(gamma for gamma, _ in combination), probability)


def enumerate_plans(config):
    """
    Every open-loop plan as the technology operating in each year from
    ``T_start`` up to the year the plan closes. Stay comes first, then
    targets by id.
    """
    def extend(plan):
        year = config.T_start + len(plan) - 1
        tech = config.technology(plan[-1])
        for option in rules.candidates(config, tech):
            longer = plan + (option.id,)
            if rules.is_leaf(config, option, year + 1):
                yield longer
            else:
                yield from extend(longer)

    yield from extend((config.start_technology,))


def plan_flows(config, plan, bits):
    """Cash flows of ``plan`` under one churn sequence"""
    flows = [CashFlow(config.T_start,
                      economics.net_flow(config, config.start, config.T_start, 0))]
    closing = config.T_start + len(plan) - 1
    for offset, (previous, current) in enumerate(zip(plan, plan[1:])):
        year = config.T_start + offset
        if previous != current:
            cost = economics.migration_capex(config.technology(previous),
                                             config.technology(current),
                                             config.costs).total
            paid = year if config.discount_migration_capex else config.T_start
            flows.append(CashFlow(paid, -cost))
        flows.append(CashFlow(year + 1, economics.net_flow(
            config, config.technology(current), year + 1, bits[offset])))
    final = config.technology(plan[-1])
    for year in range(closing + 1, config.end_year + 1):
        flows.append(CashFlow(year, economics.net_flow(config, final, year, 0)))
    return flows


def plan_outcomes(config, plan):
    """(churn sequence, NPV) for every churn sequence of ``plan``"""
    return [(sequence, economics.npv(plan_flows(config, plan, sequence.bits), config))
            for sequence in churn_sequences(len(plan) - 1, config.churn)]


def plan_value(config, plan):
    """Expected NPV of ``plan``; -inf when it ends outside an enforced goal"""
    final = config.technology(plan[-1])
    if config.goal_enforced and not rules.meets_goal(final, config.goal,
                                                     config.goal_rate):
        return -math.inf
    return sum(sequence.probability * value
               for sequence, value in plan_outcomes(config, plan))


def _plan_policy(config, plan):
    actions = {}
    for offset, (current, target) in enumerate(zip(plan, plan[1:])):
        year = config.T_start + offset
        gammas = (0,) if offset == 0 else (0, 1)
        for gamma in gammas:
            actions[State(year, current, gamma)] = target
    return Policy(actions)


def oracle_best(config, max_years=DEFAULT_MAX_YEARS,
                max_technologies=DEFAULT_MAX_TECHNOLOGIES):
    """
    Exact optimum by exhaustive enumeration.

    :return: :class:`PlanResult` whose policy covers every state the best
             plan reaches
    :raises InstanceTooLarge: above ``max_years`` decision years or
                              ``max_technologies`` technologies
    """
    technologies = len(config.graph)
    if config.T_mig > max_years or technologies > max_technologies:
        raise InstanceTooLarge(config.T_mig, technologies, max_years,
                               max_technologies)
    rules.check_goal(config)
    best_plan, best_value = None, -math.inf
    for plan in enumerate_plans(config):
        value = plan_value(config, plan)
        if best_plan is None or rules.better(value, best_value):
            best_plan, best_value = plan, value
    return rules.make_result(config, best_value, _plan_policy(config, best_plan),
                             'oracle')


def compare_results(reference, others, tolerance=AGREEMENT_TOLERANCE):
    """
    :param PlanResult reference: The result the others must match
    :param others: iterable of PlanResult
    :raises Disagreement: listing each result whose NPV or path differs
    """
    rows = []
    for result in others:
        if not math.isclose(result.expected_npv, reference.expected_npv,
                            rel_tol=tolerance):
            rows.append(f"{result.evaluator}: expected NPV {result.expected_npv!r} "
                        f"!= {reference.evaluator} {reference.expected_npv!r}")
        if result.path != reference.path:
            rows.append(f"{result.evaluator}: path {list(result.path)} "
                        f"!= {reference.evaluator} {list(reference.path)}")
    if rows:
        raise Disagreement(rows)
