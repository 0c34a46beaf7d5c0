#! /usr/bin/env python
"""
Decision rules shared by every evaluator.

The tree evaluator and the memoized evaluator both value states through
:func:`decide`, :func:`expectation` and :func:`leaf_value`, so their floats
match bit for bit.
"""

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, NamedTuple, Optional, Tuple

import networkx as nx

from netmig import economics
from netmig.errors.planning import GoalUnreachable
from netmig.model.scenario import Goal
from netmig.model.technology import Architecture, family_restricted
from netmig.model.validation import goal_set, meets_goal

TIE_TOLERANCE = 1e-12


class MigrationStep(NamedTuple):
    """``technology`` starts operating in ``year``"""
    year: int
    technology: str


class State(NamedTuple):
    year: int
    technology: str
    gamma: int


@dataclass(frozen=True)
class Policy:
    """Target technology per decision state; target == technology means stay"""
    actions: Mapping[State, str] = field(default_factory=dict)

    def __post_init__(self):
        ordered = sorted((State(*key), value) for key, value in self.actions.items())
        object.__setattr__(self, 'actions', MappingProxyType(dict(ordered)))

    def action(self, year, technology, gamma):
        return self.actions[State(year, technology, gamma)]

    def migrations(self):
        """States whose action is a migration"""
        return {state: target for state, target in self.actions.items()
                if target != state.technology}

    def __len__(self):
        return len(self.actions)

    def __iter__(self):
        return iter(self.actions.items())


@dataclass(frozen=True)
class PlanResult:
    """
    Expected NPV, reported path and contingency policy of one run.

    The tree and memoized evaluators decide every reachable decision state.
    The oracle only fills ``policy`` for the states its best open-loop plan
    passes through, one per churn outcome and year.
    """
    expected_npv: float
    path: Tuple[MigrationStep, ...]
    policy: Policy
    goal_used: Goal
    scenario: str = ''
    curve: str = ''
    evaluator: str = ''
    labels: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'path', tuple(MigrationStep(*step)
                                               for step in self.path))
        object.__setattr__(self, 'labels', MappingProxyType(dict(self.labels)))

    @property
    def migrates(self):
        return bool(self.path)

    def display_name(self, tech_id):
        return self.labels.get(tech_id) or tech_id


def absorbs(config, tech):
    """True when reaching ``tech`` ends the search"""
    if tech.data_rate < config.goal_rate:
        return False
    return config.goal is Goal.FLEXIBLE or tech.architecture is Architecture.FTTH


def possible_migrations(tech, graph, goal, goal_rate=100, allow_waypoints=True,
                        family_rule=True):
    """
    Technologies ``tech`` may migrate to, ordered by id.

    Goal technologies absorb and have none. Under a fixed FTTH goal other
    technologies at the goal rate are waypoints, dropped when
    ``allow_waypoints`` is false.
    """
    if tech.data_rate >= goal_rate and (
            goal is Goal.FLEXIBLE or tech.architecture is Architecture.FTTH):
        return []
    targets = []
    for target in graph.successors(tech.id):
        if target.id == tech.id or target.data_rate < tech.data_rate:
            continue
        if family_rule and family_restricted(tech, target):
            continue
        if (not allow_waypoints and target.data_rate >= goal_rate
                and not meets_goal(target, goal, goal_rate)):
            continue
        targets.append(target)
    return targets


def candidates(config, tech):
    """Options at a decision state: stay first, then each migration target"""
    return [tech] + possible_migrations(tech, config.graph, config.goal,
                                        config.goal_rate,
                                        config.allow_waypoints,
                                        config.family_rule)


def option_cost(config, year, source, target):
    """Migration CAPEX charged by a decision taken in ``year``"""
    if source.id == target.id:
        return 0.0
    total = economics.migration_capex(source, target, config.costs).total
    if config.discount_migration_capex:
        return economics.present_value(total, year, config)
    return total


def is_leaf(config, tech, year):
    """True when a chance outcome at (``year``, ``tech``) ends the search"""
    return absorbs(config, tech) or year >= config.window_end


def leaf_value(config, tech, year, gamma):
    """Terminal utility; -inf for a leaf outside an enforced goal set"""
    if config.goal_enforced and not meets_goal(tech, config.goal, config.goal_rate):
        return -math.inf
    return economics.terminal_value(tech, year, config, gamma)


def expectation(config, values):
    """Probability weighted value of the churn outcomes, no churn first"""
    if any(value == -math.inf for value in values):
        return -math.inf
    return sum(probability * value
               for (_, probability), value in zip(config.churn.outcomes(), values))


def better(value, incumbent):
    """True when ``value`` beats ``incumbent`` by more than the tie tolerance"""
    if value <= incumbent:
        return False
    if incumbent == -math.inf:
        return True
    return not math.isclose(value, incumbent, rel_tol=TIE_TOLERANCE)


def select(scored):
    """
    Index and value of the best (option, value) pair; earlier entries win ties.
    """
    best_index, best_value = 0, scored[0][1]
    for index, (_, value) in enumerate(scored[1:], start=1):
        if better(value, best_value):
            best_index, best_value = index, value
    return best_index, best_value


def decide(config, year, tech, gamma, chance_values):
    """
    Value of a decision state and the chosen target id.

    :param chance_values: (target, expected value at year + 1) per candidate,
                          stay first
    """
    scored = [(target, value - option_cost(config, year, tech, target))
              for target, value in chance_values]
    index, best = select(scored)
    flow = economics.present_value(economics.net_flow(config, tech, year, gamma),
                                   year, config)
    return flow + best, scored[index][0].id


def check_goal(config):
    """
    :raises GoalUnreachable: when an enforced goal cannot be reached from the
                             start within the migration window
    """
    if not config.goal_enforced:
        return
    goals = goal_set(config)
    graph = config.graph
    allowed = {tech.id: {target.id for target in candidates(config, tech)[1:]}
               for tech in graph.technologies()}
    view = nx.subgraph_view(
        graph.digraph,
        filter_node=lambda node: node in graph,
        filter_edge=lambda source, target: target in allowed.get(source, ()))
    distances = nx.single_source_shortest_path_length(
        view, config.start_technology, cutoff=config.T_mig)
    if not goals & set(distances):
        raise GoalUnreachable(config.goal.value,
                              f"no goal technology within {config.T_mig} "
                              f"migrations of {config.start_technology}")


def follow_path(config, policy):
    """Migration steps along the no-churn branch of ``policy``"""
    steps = []
    tech = config.start_technology
    year = config.T_start
    while State(year, tech, 0) in policy.actions:
        target = policy.action(year, tech, 0)
        if target != tech:
            steps.append(MigrationStep(year + 1, target))
        if is_leaf(config, config.technology(target), year + 1):
            break
        tech, year = target, year + 1
    return tuple(steps)


def labels(config):
    return {tech.id: tech.label for tech in config.graph.technologies()
            if tech.label}


def make_result(config, value, policy, evaluator, curve_label: Optional[str] = None):
    if value == -math.inf:
        raise GoalUnreachable(config.goal.value,
                              "every policy ends outside the goal set")
    return PlanResult(expected_npv=value,
                      path=follow_path(config, policy),
                      policy=policy,
                      goal_used=config.goal,
                      scenario=config.name,
                      curve=curve_label or config.curve.label.value,
                      evaluator=evaluator,
                      labels=labels(config))
