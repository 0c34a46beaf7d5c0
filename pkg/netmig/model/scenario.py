#! /usr/bin/env python
"""Scenario inputs: demand, tariffs, penetration, churn, costs and horizon"""

import dataclasses
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Mapping, Optional, Tuple

from netmig.errors.planning import CostMissing, TariffMissing
from netmig.model.graph import MigrationGraph


def _frozen(mapping):
    return MappingProxyType(dict(mapping))


class SubscriberClass(Enum):
    RESIDENTIAL = 'Residential'
    BUSINESS = 'Business'
    ITS = 'ITS'


SUBSCRIBER_CLASSES = (SubscriberClass.RESIDENTIAL, SubscriberClass.BUSINESS,
                      SubscriberClass.ITS)


class CurveLabel(Enum):
    CONSERVATIVE = 'Conservative'
    REALISTIC = 'Realistic'
    AGGRESSIVE = 'Aggressive'
    CUSTOM = 'Custom'


class DemandMix(Enum):
    PURE_RESIDENTIAL = 'PureResidential'
    CONVERGED = 'Converged'


class Goal(Enum):
    FLEXIBLE = 'FlexibleFTTx'
    FIXED = 'FixedFTTH'


class CostUnit(Enum):
    PER_SUBSCRIBER = 'per_subscriber'
    ABSOLUTE = 'absolute'


class OpexMode(Enum):
    TABLE = 'table'
    PERCENTAGE = 'percentage'


@dataclass(frozen=True)
class TariffTable:
    """
    Yearly ARPU per (subscriber class, data rate).

    A class is not served below its entry in ``min_rates`` and earns nothing
    there.
    """
    entries: Mapping[Tuple[SubscriberClass, int], float]
    min_rates: Mapping[SubscriberClass, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'entries', _frozen(self.entries))
        object.__setattr__(self, 'min_rates', _frozen(self.min_rates))

    def serves(self, subscriber_class, rate):
        return rate >= self.min_rates.get(subscriber_class, 0)

    def arpu(self, subscriber_class, rate):
        """
        ARPU for a class at a rate; 0 when the class is not served there.

        :raises TariffMissing: when a served class has no entry
        """
        if not self.serves(subscriber_class, rate):
            return 0.0
        try:
            return self.entries[(subscriber_class, rate)]
        except KeyError:
            raise TariffMissing(subscriber_class.value, rate) from None

    def scaled(self, factor, subscriber_class=None, rate=None):
        """A copy with matching entries multiplied by ``factor``"""
        entries = {key: (value * factor
                         if (subscriber_class in (None, key[0])
                             and rate in (None, key[1])) else value)
                   for key, value in self.entries.items()}
        return TariffTable(entries, self.min_rates)


@dataclass(frozen=True)
class PenetrationCurve:
    """Fraction of the total demand connected in each year"""
    label: CurveLabel
    values: Mapping[int, float]

    def __post_init__(self):
        object.__setattr__(self, 'values', _frozen(sorted(self.values.items())))

    def at(self, year):
        return self.values[year]

    @property
    def years(self):
        return tuple(self.values)


@dataclass(frozen=True)
class DemandProfile:
    """Potential subscribers per class"""
    counts: Mapping[SubscriberClass, int]
    label: DemandMix = DemandMix.PURE_RESIDENTIAL

    def __post_init__(self):
        object.__setattr__(self, 'counts', _frozen(self.counts))

    def count(self, subscriber_class):
        return self.counts.get(subscriber_class, 0)

    @property
    def total(self):
        return sum(self.count(item) for item in SUBSCRIBER_CLASSES)


@dataclass(frozen=True)
class ChurnModel:
    """Yearly churn: with probability ``probability`` a fraction ``rate`` stops paying"""
    rate: float = 0.1
    probability: float = 0.1
    its_exempt: bool = True

    @classmethod
    def steady_state(cls, enter_probability, leave_probability, rate=0.1,
                     its_exempt=True):
        """
        Churn model from a two-state Markov chain.

        :param enter_probability: chance a churn-free year is followed by churn
        :param leave_probability: chance a churn year is followed by none
        """
        total = enter_probability + leave_probability
        if total <= 0:
            raise ValueError("the chain needs at least one transition")
        return cls(rate=rate, probability=enter_probability / total,
                   its_exempt=its_exempt)

    def outcomes(self):
        """(gamma, probability) pairs, no churn first"""
        return ((0, 1.0 - self.probability), (1, self.probability))

    def factor(self, gamma):
        return (1.0 - self.rate) ** gamma


CAPEX_CATEGORIES = ('civil_works', 'fiber', 'central_office', 'remote_nodes',
                    'buildings')
OPEX_CATEGORIES = ('rent', 'energy', 'fault_management', 'marketing',
                   'operations')


@dataclass(frozen=True)
class CostRecord:
    """CAPEX categories and yearly OPEX categories of one technology"""
    civil_works: float = 0.0
    fiber: float = 0.0
    central_office: float = 0.0
    remote_nodes: float = 0.0
    buildings: float = 0.0
    rent: float = 0.0
    energy: float = 0.0
    fault_management: float = 0.0
    marketing: float = 0.0
    operations: float = 0.0
    provenance: str = 'published'
    assumed: bool = False

    @property
    def equipment(self):
        return self.fiber + self.central_office + self.remote_nodes + self.buildings

    @property
    def capex(self):
        return self.civil_works + self.equipment

    @property
    def opex_per_subscriber(self):
        return (self.rent + self.energy + self.fault_management
                + self.marketing + self.operations)

    def amounts(self):
        """Every category name with its value"""
        return {name: getattr(self, name)
                for name in CAPEX_CATEGORIES + OPEX_CATEGORIES}

    def scaled(self, capex_factor=1.0, opex_factor=1.0):
        changes = {name: getattr(self, name) * capex_factor
                   for name in CAPEX_CATEGORIES}
        changes.update({name: getattr(self, name) * opex_factor
                        for name in OPEX_CATEGORIES})
        return dataclasses.replace(self, **changes)


@dataclass(frozen=True)
class CostDataset:
    """
    Cost records keyed by technology id.

    CAPEX is per subscriber passed or absolute, as ``unit`` says. Table OPEX
    is always per connected subscriber and per year.
    """
    name: str
    records: Mapping[str, CostRecord]
    unit: CostUnit = CostUnit.PER_SUBSCRIBER
    opex_mode: OpexMode = OpexMode.TABLE
    adsl_opex_per_subscriber: float = 0.25
    provenance: str = ''

    def __post_init__(self):
        object.__setattr__(self, 'records', _frozen(self.records))

    def record(self, tech_id):
        """
        :raises CostMissing: when the dataset has no record for ``tech_id``
        """
        try:
            return self.records[tech_id]
        except KeyError:
            raise CostMissing(tech_id, self.name) from None

    def to_absolute(self, total_demand):
        """CAPEX multiplied by the number of subscribers passed"""
        if self.unit is CostUnit.ABSOLUTE:
            return self
        records = {key: record.scaled(capex_factor=total_demand)
                   for key, record in self.records.items()}
        return dataclasses.replace(self, records=records,
                                   unit=CostUnit.ABSOLUTE)

    def with_opex_mode(self, mode):
        return dataclasses.replace(self, opex_mode=OpexMode(mode))

    def scaled(self, factor):
        """Every CAPEX and OPEX entry, ADSL OPEX included, times ``factor``"""
        records = {key: record.scaled(factor, factor)
                   for key, record in self.records.items()}
        return dataclasses.replace(
            self, records=records,
            adsl_opex_per_subscriber=self.adsl_opex_per_subscriber * factor)


@dataclass(frozen=True)
class ScenarioConfig:
    """
    Everything one planning run needs.

    Per-subscriber cost datasets are converted to absolute C.U. on
    construction using the total demand.
    """
    start_technology: str
    graph: MigrationGraph
    tariffs: TariffTable
    curve: PenetrationCurve
    demands: DemandProfile
    churn: ChurnModel
    costs: CostDataset
    T_start: int
    T_mig: int
    T_NW: int
    discount_rate: float = 0.10
    goal: Goal = Goal.FLEXIBLE
    goal_rate: int = 100
    goal_enforced: bool = True
    allow_waypoints: bool = True
    discount_migration_capex: bool = True
    family_rule: bool = True
    name: str = 'scenario'
    per_subscriber_costs: Optional[CostDataset] = field(default=None,
                                                       compare=False,
                                                       repr=False)

    def __post_init__(self):
        if self.costs.unit is CostUnit.PER_SUBSCRIBER:
            object.__setattr__(self, 'per_subscriber_costs', self.costs)
            object.__setattr__(self, 'costs',
                               self.costs.to_absolute(self.demands.total))

    @property
    def window_end(self):
        """Last year a newly adopted technology can start operating"""
        return self.T_start + self.T_mig

    @property
    def end_year(self):
        return self.T_start + self.T_NW

    def technology(self, tech_id):
        return self.graph.technology(tech_id)

    @property
    def start(self):
        return self.graph.technology(self.start_technology)

    def replace(self, **changes):
        """
        A copy with ``changes`` applied. Changing the demand re-derives
        absolute costs from the per-subscriber dataset.
        """
        if 'costs' in changes:
            changes.setdefault('per_subscriber_costs', None)
        elif 'demands' in changes and self.per_subscriber_costs is not None:
            changes['costs'] = self.per_subscriber_costs
            changes['per_subscriber_costs'] = None
        return dataclasses.replace(self, **changes)
