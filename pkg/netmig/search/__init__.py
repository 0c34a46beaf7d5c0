#! /usr/bin/env python
"""Expectimax search over migration decisions"""

from netmig.search.memo import evaluate_memoized
from netmig.search.oracle import oracle_best
from netmig.search.policy import (MigrationStep, PlanResult, Policy,
                                  possible_migrations)
from netmig.search.tree import Node, NodeKind, build_tree, evaluate

__all__ = ['MigrationStep', 'Node', 'NodeKind', 'PlanResult', 'Policy',
           'build_tree', 'evaluate', 'evaluate_memoized', 'oracle_best',
           'possible_migrations']
