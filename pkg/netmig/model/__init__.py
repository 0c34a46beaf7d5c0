#! /usr/bin/env python
"""Domain types shared by the economics and search modules"""

from netmig.model.graph import MigrationGraph
from netmig.model.scenario import (ChurnModel, CostDataset, CostRecord,
                                   CostUnit, CurveLabel, DemandMix,
                                   DemandProfile, Goal, OpexMode,
                                   PenetrationCurve, ScenarioConfig,
                                   SubscriberClass, TariffTable)
from netmig.model.technology import Architecture, Family, Technology
from netmig.model.validation import Violation, goal_set, validate_scenario

__all__ = ['Architecture', 'ChurnModel', 'CostDataset', 'CostRecord',
           'CostUnit', 'CurveLabel', 'DemandMix', 'DemandProfile', 'Family',
           'Goal', 'MigrationGraph', 'OpexMode', 'PenetrationCurve',
           'ScenarioConfig', 'SubscriberClass', 'TariffTable', 'Technology',
           'Violation', 'goal_set', 'validate_scenario']
