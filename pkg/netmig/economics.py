#! /usr/bin/env python
"""
Monetary formulas: churned revenue, discounting, NPV, migration CAPEX and OPEX.

All amounts are in cost units (C.U.). Absolute CAPEX comes from the scenario's
cost dataset, which the scenario converts on construction.
"""

from dataclasses import dataclass

from netmig.model.scenario import SUBSCRIBER_CLASSES, OpexMode, SubscriberClass

PERCENTAGE_EQUIPMENT_SHARE = 0.1
PERCENTAGE_CIVIL_SHARE = 0.01


@dataclass(frozen=True)
class CashFlow:
    """Net cash flow of one year; inflows are positive"""
    year: int
    amount: float


@dataclass(frozen=True)
class MigrationCost:
    """CAPEX of moving from one technology to another"""
    from_id: str
    to_id: str
    civil_delta: float
    equip_delta: float
    civil_gate: int
    equip_gate: int

    @property
    def total(self):
        return self.civil_gate * self.civil_delta + self.equip_gate * self.equip_delta


def connected_subscribers(config, year, subscriber_class=None):
    """Subscribers connected in ``year``, for one class or all of them"""
    if subscriber_class is None:
        demand = config.demands.total
    else:
        demand = config.demands.count(subscriber_class)
    return config.curve.at(year) * demand


def yearly_revenue(config, tech, year, gamma=0):
    """
    Revenue of one year at ``tech``'s data rate.

    A churn year (``gamma`` = 1) keeps a ``1 - c`` share of the paying
    subscribers; ITS base stations keep paying when the churn model exempts
    them.

    :raises TariffMissing: when a demanded class has no tariff at the rate
    """
    total = 0.0
    for subscriber_class in SUBSCRIBER_CLASSES:
        demand = config.demands.count(subscriber_class)
        if demand <= 0:
            continue
        arpu = config.tariffs.arpu(subscriber_class, tech.data_rate)
        factor = config.churn.factor(gamma)
        if subscriber_class is SubscriberClass.ITS and config.churn.its_exempt:
            factor = 1.0
        total += factor * connected_subscribers(config, year, subscriber_class) * arpu
    return total


def present_value(amount, year, config):
    """``amount`` received in ``year`` valued at ``T_start``"""
    return amount / (1.0 + config.discount_rate) ** (year - config.T_start)


def npv(flows, config):
    """Net present value of a list of :class:`CashFlow`"""
    return sum(present_value(flow.amount, flow.year, config) for flow in flows)


def migration_capex(source, target, costs):
    """
    CAPEX of migrating from ``source`` to ``target``.

    Civil works are paid only when the architecture changes, equipment only
    when the data rate changes; each delta is clamped at zero. Leaving copper
    costs the full CAPEX of the target.

    :raises CostMissing: when either optical technology has no cost record
    """
    new = costs.record(target.id)
    if source.is_copper:
        return MigrationCost(source.id, target.id, new.civil_works,
                             new.equipment, 1, 1)
    old = costs.record(source.id)
    return MigrationCost(
        source.id, target.id,
        civil_delta=max(0.0, new.civil_works - old.civil_works),
        equip_delta=max(0.0, new.equipment - old.equipment),
        civil_gate=int(source.architecture is not target.architecture),
        equip_gate=int(source.data_rate != target.data_rate))


def opex(tech, year, config):
    """
    Yearly OPEX of running ``tech``.

    Table mode charges the category total per connected subscriber. The
    percentage model charges 10% of equipment plus 1% of civil-works CAPEX
    every year. Copper always costs the ADSL rate per connected subscriber.

    :raises CostMissing: when ``tech`` has no cost record
    """
    costs = config.costs
    if tech.is_copper:
        return costs.adsl_opex_per_subscriber * connected_subscribers(config, year)
    record = costs.record(tech.id)
    if costs.opex_mode is OpexMode.PERCENTAGE:
        return (PERCENTAGE_EQUIPMENT_SHARE * record.equipment
                + PERCENTAGE_CIVIL_SHARE * record.civil_works)
    return record.opex_per_subscriber * connected_subscribers(config, year)


def net_flow(config, tech, year, gamma=0):
    return yearly_revenue(config, tech, year, gamma) - opex(tech, year, config)


def terminal_value(tech, year, config, gamma=0):
    """
    Discounted net flows of staying on ``tech`` from ``year`` to the end of
    the life-cycle. ``gamma`` applies to ``year`` only; later years assume
    no churn.
    """
    total = 0.0
    for current in range(year, config.end_year + 1):
        outcome = gamma if current == year else 0
        total += present_value(net_flow(config, tech, current, outcome),
                               current, config)
    return total


def migration_matrix(config):
    """:class:`MigrationCost` for every declared edge, ordered by (from, to)"""
    graph = config.graph
    return [migration_capex(graph.technology(source), graph.technology(target),
                            config.costs)
            for source, target in graph.edges
            if source in graph and target in graph]
