#! /usr/bin/env python
"""Expectimax values by dynamic programming over (year, technology, churn) states"""

from functools import lru_cache

from netmig.logging.logger import getLogger
from netmig.search import policy as rules
from netmig.search.policy import Policy, State


def evaluate_memoized(config):
    """
    Same values, policy and path as evaluating the full tree, computed
    once per state.

    :param ScenarioConfig config: A validated scenario
    :return: :class:`PlanResult`
    :raises GoalUnreachable: when an enforced goal cannot be reached
    """
    rules.check_goal(config)
    actions = {}

    @lru_cache(maxsize=None)
    def maximizer(year, tech_id, gamma):
        tech = config.technology(tech_id)
        scored = [(option, chance(year + 1, option.id))
                  for option in rules.candidates(config, tech)]
        value, target = rules.decide(config, year, tech, gamma, scored)
        actions[State(year, tech_id, gamma)] = target
        return value

    @lru_cache(maxsize=None)
    def chance(year, tech_id):
        tech = config.technology(tech_id)
        if rules.is_leaf(config, tech, year):
            values = [rules.leaf_value(config, tech, year, gamma)
                      for gamma, _ in config.churn.outcomes()]
        else:
            values = [maximizer(year, tech_id, gamma)
                      for gamma, _ in config.churn.outcomes()]
        return rules.expectation(config, values)

    value = maximizer(config.T_start, config.start_technology, 0)
    getLogger().debug(f"memoized search for {config.name}: "
                      f"{len(actions)} decision states")
    return rules.make_result(config, value, Policy(actions), 'memo')
