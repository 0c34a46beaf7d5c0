#! /usr/bin/env python
"""Explicit Expectimax tree: build it top down, evaluate it bottom up"""

import math
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import List, Optional

from netmig.errors.planning import TreeTooLarge, Unevaluated
from netmig.logging.logger import getLogger
from netmig.search import policy as rules
from netmig.search.policy import Policy, State

DEFAULT_MAX_NODES = 10 ** 7


class NodeKind(Enum):
    MAXIMIZER = 'Maximizer'
    CHANCE = 'Chance'
    TERMINAL = 'Terminal'


@dataclass
class Node:
    """
    One node of the search tree.

    Maximizers decide at (year, tech, gamma); chance nodes sit at the year
    the chosen technology starts operating; terminals close a branch.
    """
    kind: NodeKind
    tech: str
    year: int
    gamma: int = 0
    children: List['Node'] = field(default_factory=list)
    value: Optional[float] = None
    chosen_child: Optional[int] = None

    def describe(self):
        kind = getattr(self.kind, "value", self.kind)
        return f"{kind}({self.year}, {self.tech}, gamma={self.gamma})"


def estimate_tree_size(config):
    """Number of nodes :func:`build_tree` would create"""

    @lru_cache(maxsize=None)
    def maximizer(year, tech_id):
        tech = config.technology(tech_id)
        return 1 + sum(chance(year + 1, option.id)
                       for option in rules.candidates(config, tech))

    @lru_cache(maxsize=None)
    def chance(year, tech_id):
        if rules.is_leaf(config, config.technology(tech_id), year):
            return 3
        return 1 + 2 * maximizer(year, tech_id)

    return maximizer(config.T_start, config.start_technology)


def build_tree(config, max_nodes=DEFAULT_MAX_NODES):
    """
    Build the search tree rooted at the start technology.

    :param ScenarioConfig config: A validated scenario
    :param int max_nodes: Refuse trees larger than this
    :raises TreeTooLarge: when the estimated size exceeds ``max_nodes``
    :raises GoalUnreachable: when an enforced goal cannot be reached
    """
    rules.check_goal(config)
    estimate = estimate_tree_size(config)
    getLogger().debug(f"search tree for {config.name}: {estimate} nodes")
    if max_nodes is not None and estimate > max_nodes:
        raise TreeTooLarge(estimate, max_nodes)
    return _maximizer(config, config.T_start, config.start, 0)


def _maximizer(config, year, tech, gamma):
    node = Node(NodeKind.MAXIMIZER, tech.id, year, gamma)
    for option in rules.candidates(config, tech):
        node.children.append(_chance(config, year + 1, option))
    return node


def _chance(config, year, tech):
    node = Node(NodeKind.CHANCE, tech.id, year)
    leaf = rules.is_leaf(config, tech, year)
    for gamma, _ in config.churn.outcomes():
        if leaf:
            node.children.append(Node(NodeKind.TERMINAL, tech.id, year, gamma))
        else:
            node.children.append(_maximizer(config, year, tech, gamma))
    return node


def tree_stats(root):
    """Node count per kind"""
    counts = Counter()
    stack = [root]
    while stack:
        node = stack.pop()
        counts[node.kind] += 1
        stack.extend(node.children)
    return {kind: counts[kind] for kind in NodeKind}


def _evaluate(node, config, actions):
    if node.kind is NodeKind.TERMINAL:
        if node.children:
            raise Unevaluated(node.describe(), "terminal node has children")
        node.value = rules.leaf_value(config, config.technology(node.tech),
                                      node.year, node.gamma)
    elif node.kind is NodeKind.CHANCE:
        if len(node.children) != 2:
            raise Unevaluated(node.describe(), "chance node needs two children")
        values = [_evaluate(child, config, actions) for child in node.children]
        node.value = rules.expectation(config, values)
    elif node.kind is NodeKind.MAXIMIZER:
        if not node.children:
            raise Unevaluated(node.describe(), "maximizer has no options")
        if node.children[0].tech != node.tech:
            raise Unevaluated(node.describe(), "first option must be to stay")
        tech = config.technology(node.tech)
        scored = [(config.technology(child.tech),
                   _evaluate(child, config, actions))
                  for child in node.children]
        node.value, target = rules.decide(config, node.year, tech, node.gamma,
                                          scored)
        node.chosen_child = next(index for index, child in enumerate(node.children)
                                 if child.tech == target)
        actions[State(node.year, node.tech, node.gamma)] = target
    else:
        raise Unevaluated(node.describe(), "unknown node kind")
    return node.value


def evaluate(root, config):
    """
    Evaluate a tree built by :func:`build_tree`, filling every node value.

    :return: :class:`PlanResult` with the root value as expected NPV
    :raises Unevaluated: when the tree is malformed
    """
    if root is None or root.kind is not NodeKind.MAXIMIZER:
        raise Unevaluated(getattr(root, 'kind', None), "root must be a maximizer")
    actions = {}
    value = _evaluate(root, config, actions)
    if value is None or math.isnan(value):
        raise Unevaluated(root.describe(), "root has no value")
    return rules.make_result(config, value, Policy(actions), 'tree')
