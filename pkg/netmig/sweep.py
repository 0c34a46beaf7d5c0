#! /usr/bin/env python
"""Sensitivity sweeps: one plan per parameter value and penetration curve"""

import dataclasses
import math
import os
from dataclasses import dataclass
from typing import Tuple

from netmig.errors.planning import ScenarioIOError, ValidationFailed
from netmig.model.scenario import Goal, OpexMode
from netmig.model.validation import Violation, validate_scenario
from netmig.scenarios.bundle import default_bundle
from netmig.scenarios.loader import load_costs, load_curve

PARAMETERS = ('cost_dataset', 'opex_model', 'churn_probability', 'churn_rate',
              'discount_rate', 'curve', 'cost_scale', 'arpu_scale', 'goal')
NUMERIC_PARAMETERS = ('churn_probability', 'churn_rate', 'discount_rate',
                      'cost_scale', 'arpu_scale')
CURVES = ('conservative', 'realistic', 'aggressive')
GOALS = {'flexible': Goal.FLEXIBLE, 'fixed': Goal.FIXED}
TREND_TOLERANCE = 1e-9


def _invalid(message):
    return ValidationFailed([Violation('SWEEP_SPEC', message)], source='sweep')


@dataclass(frozen=True)
class SweepSpec:
    """What to vary, over which values, for which scenario"""
    parameter: str
    values: Tuple
    base_scenario: str
    curves: Tuple[str, ...] = CURVES

    def __post_init__(self):
        if self.parameter not in PARAMETERS:
            raise _invalid(f"unknown parameter {self.parameter!r}; "
                           f"use one of {', '.join(PARAMETERS)}")
        if not self.values:
            raise _invalid("a sweep needs at least one value")
        object.__setattr__(self, 'values', tuple(self._coerce(value)
                                                 for value in self.values))
        if self.parameter == 'curve':
            object.__setattr__(self, 'curves', (None,))
        else:
            for curve in self.curves:
                self._curve_label(curve)

    def _curve_label(self, value):
        if str(value).lower() not in CURVES:
            raise _invalid(f"unknown curve {value!r}")
        return str(value).lower()

    def _coerce(self, value):
        if self.parameter in NUMERIC_PARAMETERS:
            try:
                number = float(value)
            except (TypeError, ValueError):
                raise _invalid(f"{self.parameter} value {value!r} is not a number") from None
            if not math.isfinite(number):
                raise _invalid(f"{self.parameter} value {value!r} is not finite")
            return number
        if self.parameter == 'opex_model':
            try:
                return OpexMode(str(value).lower()).value
            except ValueError:
                raise _invalid(f"unknown OPEX model {value!r}") from None
        if self.parameter == 'goal':
            if str(value).lower() not in GOALS:
                raise _invalid(f"unknown goal {value!r}")
            return str(value).lower()
        if self.parameter == 'curve':
            return self._curve_label(value)
        return str(value)


def with_curve(config, label, bundle=None):
    bundle = bundle or default_bundle()
    return config.replace(curve=load_curve(bundle.curve_ref(label), bundle=bundle))


def with_goal(config, name):
    return config.replace(goal=GOALS[name])


def with_cost_dataset(config, name, bundle=None, base_dir='.'):
    """
    Costs named like ``BSG`` (matched to the demand mix), a bundled ref or a
    .json path.

    :raises ScenarioIOError: when the bundle has no such dataset for the mix
    """
    bundle = bundle or default_bundle()
    if name.endswith('.json') or '/' in name:
        ref = name
    else:
        try:
            ref = bundle.cost_ref(name, config.demands.label)
        except KeyError:
            raise ScenarioIOError(name, f"no {name} cost dataset for "
                                        f"{config.demands.label.value} demand") from None
    return config.replace(costs=load_costs(ref, base_dir, bundle))


def apply(config, parameter, value, bundle=None, base_dir='.'):
    """A copy of ``config`` with one parameter set"""
    if parameter == 'cost_dataset':
        return with_cost_dataset(config, value, bundle, base_dir)
    if parameter == 'opex_model':
        return config.replace(costs=config.costs.with_opex_mode(value))
    if parameter == 'churn_probability':
        return config.replace(churn=_churn(config, probability=value))
    if parameter == 'churn_rate':
        return config.replace(churn=_churn(config, rate=value))
    if parameter == 'discount_rate':
        return config.replace(discount_rate=value)
    if parameter == 'curve':
        return with_curve(config, value, bundle)
    if parameter == 'cost_scale':
        return config.replace(costs=config.costs.scaled(value))
    if parameter == 'arpu_scale':
        return config.replace(tariffs=config.tariffs.scaled(value))
    if parameter == 'goal':
        return with_goal(config, value)
    raise _invalid(f"unknown parameter {parameter!r}")


def _churn(config, **changes):
    return dataclasses.replace(config.churn, **changes)


def trend(values):
    """Direction of a sequence of NPVs ordered by the swept parameter"""
    steps = [(a, b) for a, b in zip(values, values[1:])
             if not math.isclose(a, b, rel_tol=TREND_TOLERANCE)]
    if not steps:
        return 'constant'
    if all(b < a for a, b in steps):
        return 'non-increasing'
    if all(b > a for a, b in steps):
        return 'non-decreasing'
    return 'mixed'


def run_sweep(spec, config, planner, bundle=None):
    """
    Plan every (curve, value) combination.

    :param SweepSpec spec: The sweep
    :param ScenarioConfig config: The loaded base scenario
    :param planner: callable taking a ScenarioConfig, returning a PlanResult
    :return: (rows, trends); rows are (parameter, value, PlanResult) and
             trends are (parameter, curve, trend) for numeric parameters
    """
    base_dir = os.path.dirname(os.path.realpath(spec.base_scenario))
    rows, trends = [], []
    for curve in spec.curves:
        base = config if curve is None else with_curve(config, curve, bundle)
        results = []
        for value in spec.values:
            variant = apply(base, spec.parameter, value, bundle, base_dir)
            violations = validate_scenario(variant)
            if violations:
                raise ValidationFailed(violations,
                                       source=f"{spec.parameter}={value}")
            result = planner(variant)
            results.append((value, result))
            rows.append((spec.parameter, value, result))
        if spec.parameter in NUMERIC_PARAMETERS:
            ordered = [result.expected_npv for _, result in
                       sorted(results, key=lambda item: item[0])]
            trends.append((spec.parameter, results[0][1].curve, trend(ordered)))
    return rows, trends
