"""Shared scenario builders"""

import pytest

from netmig.model.graph import MigrationGraph
from netmig.model.scenario import (ChurnModel, CostDataset, CostRecord,
                                   CostUnit, CurveLabel, DemandProfile,
                                   PenetrationCurve, ScenarioConfig,
                                   SubscriberClass, TariffTable)
from netmig.model.technology import Technology

ADSL = 'ADSL_Copper_20'
PON1 = 'FTTCab_GPON_25'
PON2 = 'FTTB_XGPON_100'

TOY_CURVE = {2018: 0.05, 2019: 0.06, 2020: 0.15, 2021: 0.25, 2022: 0.30,
             2023: 0.3373}


def toy_technologies():
    return [Technology.from_id(ADSL, label='ADSL'),
            Technology.from_id(PON1, stages=2, label='PON1'),
            Technology.from_id(PON2, stages=2, label='PON2')]


def toy_costs():
    return CostDataset(
        name='toy',
        unit=CostUnit.ABSOLUTE,
        records={
            PON1: CostRecord(civil_works=100.0, central_office=60.0,
                             remote_nodes=20.0, buildings=20.0),
            PON2: CostRecord(civil_works=160.0, central_office=80.0,
                             remote_nodes=40.0, buildings=40.0,
                             rent=1.5, energy=1.2, fault_management=0.9,
                             marketing=0.44, operations=0.4),
        })


def make_toy(**changes):
    """The three-technology teaching scenario, with optional field changes"""
    config = ScenarioConfig(
        name='toy',
        start_technology=ADSL,
        graph=MigrationGraph(toy_technologies(),
                             [(ADSL, PON1), (ADSL, PON2), (PON1, PON2)]),
        tariffs=TariffTable({(SubscriberClass.RESIDENTIAL, 20): 3.6,
                             (SubscriberClass.RESIDENTIAL, 25): 7.2,
                             (SubscriberClass.RESIDENTIAL, 100): 13.2}),
        curve=PenetrationCurve(CurveLabel.CUSTOM, TOY_CURVE),
        demands=DemandProfile({SubscriberClass.RESIDENTIAL: 100}),
        churn=ChurnModel(rate=0.1, probability=0.1),
        costs=toy_costs(),
        T_start=2018, T_mig=3, T_NW=5)
    return config.replace(**changes) if changes else config


@pytest.fixture()
def toy():
    return make_toy()


@pytest.fixture()
def toy_factory():
    """Build toy variants: ``toy_factory(discount_rate=0.0)``"""
    return make_toy
