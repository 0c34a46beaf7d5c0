#! /usr/bin/env python
"""Sub-command implementations; each returns a process exit code"""

import os

from netmig import economics
from netmig.errors.planning import (InstanceTooLarge, TreeTooLarge,
                                    ValidationFailed)
from netmig.logging.logger import getLogger
from netmig.model.scenario import Goal
from netmig.scenarios import writer
from netmig.scenarios.bundle import default_bundle
from netmig.scenarios.loader import load_scenario
from netmig.search.memo import evaluate_memoized
from netmig.search.oracle import compare_results, oracle_best
from netmig.search.tree import build_tree, evaluate
from netmig.sweep import (CURVES, SweepSpec, run_sweep, with_cost_dataset,
                          with_curve, with_goal)


def resolve_scenario(name):
    """A scenario path as given, or the path of a bundled scenario name"""
    if os.path.exists(name):
        return name
    bundle = default_bundle()
    bundled = os.path.splitext(os.path.basename(name))[0]
    if bundled in bundle.names('scenarios'):
        return bundle.scenario_path(bundled)
    return name


def planner(options):
    """The evaluator selected by the options, as a callable on a scenario"""
    def plan(config):
        if options.naive_tree:
            return evaluate(build_tree(config, options.max_nodes), config)
        return evaluate_memoized(config)
    return plan


def _load(options):
    path = resolve_scenario(options.scenario)
    config = load_scenario(path)
    getLogger().info(f"loaded {config.name} from {path}")
    return path, config


def cmd_plan(options):
    """Plan one scenario, with optional curve, goal, cost and OPEX overrides"""
    path, config = _load(options)
    base_dir = os.path.dirname(os.path.realpath(path))
    if options.curve:
        config = with_curve(config, options.curve)
    if options.goal:
        config = with_goal(config, options.goal)
    if options.cost_dataset:
        config = with_cost_dataset(config, options.cost_dataset, base_dir=base_dir)
    if options.opex_model:
        config = config.replace(costs=config.costs.with_opex_mode(options.opex_model))
    result = planner(options)(config)
    getLogger().info(f"{config.name}: expected NPV {result.expected_npv!r}")
    writer.write_result(result, options.output, options.out)
    return 0


def cmd_compare(options):
    """Both goal policies over the three bundled penetration curves"""
    _, config = _load(options)
    plan = planner(options)
    rows, gaps = [], []
    for curve in CURVES:
        variant = with_curve(config, curve)
        flexible = plan(variant.replace(goal=Goal.FLEXIBLE))
        fixed = plan(variant.replace(goal=Goal.FIXED))
        rows.extend([flexible, fixed])
        scale = abs(flexible.expected_npv)
        gap = 0.0 if scale == 0 else (flexible.expected_npv - fixed.expected_npv) / scale
        gaps.append((flexible.curve, gap))
    writer.write_comparison(rows, gaps, options.output, options.out)
    return 0


def cmd_sweep(options):
    """One plan per swept value and curve, with a trend report"""
    path, config = _load(options)
    curves = tuple(item for item in (options.curves or ','.join(CURVES)).split(',') if item)
    spec = SweepSpec(parameter=options.parameter,
                     values=tuple(item for item in options.values.split(',') if item),
                     base_scenario=path,
                     curves=curves)
    rows, trends = run_sweep(spec, config, planner(options))
    fmt = options.output if options.output_given else 'csv'
    writer.write_sweep(rows, trends, fmt, options.out)
    return 0


def cmd_verify(options):
    """Cross-check the tree, the memoized evaluator and the oracle"""
    _, config = _load(options)
    log = getLogger()
    results = []
    try:
        results.append(evaluate(build_tree(config, options.max_nodes), config))
    except TreeTooLarge as error:
        log.warning(f"skipping the tree evaluator: {error.message}")
    memo = evaluate_memoized(config)
    results.append(memo)
    refused = None
    try:
        results.append(oracle_best(config, options.oracle_max_years,
                                   options.oracle_max_technologies))
    except InstanceTooLarge as error:
        refused = error
    writer.write_verification(results, options.output, options.out)
    compare_results(memo, [result for result in results if result is not memo])
    if refused is not None:
        raise refused
    return 0


def cmd_validate(options):
    """Report every violation of a scenario"""
    path = resolve_scenario(options.scenario)
    try:
        config = load_scenario(path)
    except ValidationFailed as error:
        writer.emit(''.join(f"{violation}\n" for violation in error.violations),
                    options.out)
        return error.exit_code
    writer.emit(f"{config.name}: valid\n", options.out)
    return 0


def cmd_matrix(options):
    """Migration CAPEX of every edge"""
    _, config = _load(options)
    writer.write_matrix(economics.migration_matrix(config), options.output,
                        options.out)
    return 0
