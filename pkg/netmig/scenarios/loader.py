#! /usr/bin/env python
"""
Read scenario documents.

Scenarios are UTF-8 JSON. Money and fractions are decimal strings (plain
numbers are accepted too). Parts of a scenario can live in other files:
``graph_ref``, ``tariffs_ref``, ``curve_ref`` and ``costs_ref`` take either a
path ending in ``.json`` (relative to the scenario) or a bundled reference
such as ``costs/oase_converged``.
"""

import json
import math
import os
from decimal import Decimal, InvalidOperation

from netmig.errors.planning import (ScenarioIOError, ScenarioParseError,
                                    ValidationFailed)
from netmig.logging.logger import getLogger
from netmig.model.graph import MigrationGraph
from netmig.model.scenario import (CAPEX_CATEGORIES, OPEX_CATEGORIES,
                                   ChurnModel, CostDataset, CostRecord,
                                   CostUnit, CurveLabel, DemandMix,
                                   DemandProfile, Goal, OpexMode,
                                   PenetrationCurve, ScenarioConfig,
                                   SubscriberClass, TariffTable)
from netmig.model.technology import Architecture, Family, Technology
from netmig.model.validation import Violation, validate_scenario
from netmig.scenarios.bundle import default_bundle


class _Reader():
    """Typed access to one JSON document with errors pointing at the file"""

    def __init__(self, path):
        self.path = str(path)

    def fail(self, reason):
        raise ScenarioParseError(self.path, reason)

    def require(self, document, key, where=''):
        if not isinstance(document, dict):
            self.fail(f"{where or 'document'} must be an object")
        if key not in document:
            self.fail(f"missing key {where + '.' if where else ''}{key}")
        return document[key]

    def number(self, value, where):
        if isinstance(value, bool) or not isinstance(value, (int, float, str)):
            self.fail(f"{where} must be a number or decimal string")
        try:
            number = float(Decimal(value) if isinstance(value, str) else value)
        except InvalidOperation:
            self.fail(f"{where}: {value!r} is not a decimal number")
        if not math.isfinite(number):
            self.fail(f"{where}: {value!r} is not finite")
        return number

    def integer(self, value, where):
        if isinstance(value, bool):
            self.fail(f"{where} must be an integer")
        try:
            return int(value)
        except (TypeError, ValueError):
            self.fail(f"{where}: {value!r} is not an integer")

    def flag(self, value, where):
        if not isinstance(value, bool):
            self.fail(f"{where} must be true or false")
        return value

    def enum(self, kind, value, where):
        try:
            return kind(value)
        except ValueError:
            choices = ', '.join(item.value for item in kind)
            self.fail(f"{where}: {value!r} is not one of {choices}")


def read_document(path):
    """
    Parse a JSON file.

    :raises ScenarioIOError: when the file cannot be read
    :raises ScenarioParseError: when it is not JSON, with line and column
    """
    try:
        with open(path, 'r', encoding='utf-8') as handle:
            text = handle.read()
    except (OSError, UnicodeDecodeError) as error:
        raise ScenarioIOError(path, getattr(error, 'strerror', None) or error) from error
    try:
        document = json.loads(text)
    except json.JSONDecodeError as error:
        raise ScenarioParseError(path, error.msg, error.lineno, error.colno) from error
    getLogger().debug(f"read {path}")
    return document


def resolve_ref(ref, base_dir, bundle=None):
    """Path of a reference: a ``.json`` path or a bundled ``kind/name``"""
    if ref.endswith('.json'):
        return os.path.join(base_dir, ref)
    bundle = bundle or default_bundle()
    try:
        return bundle.resolve(ref)
    except KeyError:
        raise ScenarioIOError(ref, "no such bundled dataset") from None


def parse_technologies(reader, items):
    if not isinstance(items, list):
        reader.fail("technologies must be a list")
    technologies = []
    for index, item in enumerate(items):
        where = f"technologies[{index}]"
        tech_id = reader.require(item, 'id', where)
        stages = reader.integer(item.get('stages', 1), f"{where}.stages")
        label = item.get('label')
        provenance = item.get('provenance', 'published')
        if {'architecture', 'family', 'data_rate'} <= set(item):
            technologies.append(Technology(
                id=tech_id,
                architecture=reader.enum(Architecture, item['architecture'],
                                         f"{where}.architecture"),
                family=reader.enum(Family, item['family'], f"{where}.family"),
                data_rate=reader.integer(item['data_rate'], f"{where}.data_rate"),
                stages=stages, label=label, provenance=provenance))
            continue
        try:
            technologies.append(Technology.from_id(tech_id, stages, label,
                                                   provenance))
        except ValueError as error:
            reader.fail(f"{where}: {error}")
    return technologies


def parse_edges(reader, items):
    if not isinstance(items, list):
        reader.fail("edges must be a list")
    edges = []
    for index, item in enumerate(items):
        if isinstance(item, dict):
            item = [reader.require(item, 'from', f"edges[{index}]"),
                    reader.require(item, 'to', f"edges[{index}]")]
        if not (isinstance(item, list) and len(item) == 2
                and all(isinstance(end, str) for end in item)):
            reader.fail(f"edges[{index}] must be a [from, to] pair of ids")
        edges.append(tuple(item))
    return edges


def parse_tariffs(reader, document):
    entries = {}
    for index, item in enumerate(reader.require(document, 'entries', 'tariffs')):
        where = f"tariffs.entries[{index}]"
        subscriber_class = reader.enum(SubscriberClass,
                                       reader.require(item, 'class', where),
                                       f"{where}.class")
        rate = reader.integer(reader.require(item, 'rate', where), f"{where}.rate")
        entries[(subscriber_class, rate)] = reader.number(
            reader.require(item, 'arpu', where), f"{where}.arpu")
    min_rates = {reader.enum(SubscriberClass, key, 'tariffs.min_rates'):
                 reader.integer(value, f"tariffs.min_rates.{key}")
                 for key, value in (document.get('min_rates') or {}).items()}
    return TariffTable(entries, min_rates)


def parse_curve(reader, document):
    if not isinstance(document, dict):
        reader.fail("curve must be an object")
    label = reader.enum(CurveLabel, document.get('label', 'Custom'), 'curve.label')
    values = reader.require(document, 'values', 'curve')
    if not isinstance(values, dict):
        reader.fail("curve.values must map years to fractions")
    return PenetrationCurve(label, {
        reader.integer(year, 'curve year'): reader.number(value, f"curve.{year}")
        for year, value in values.items()})


def parse_demands(reader, document):
    counts = reader.require(document, 'counts', 'demands')
    if not isinstance(counts, dict):
        reader.fail("demands.counts must be an object")
    return DemandProfile(
        counts={reader.enum(SubscriberClass, key, 'demands.counts'):
                reader.integer(value, f"demands.counts.{key}")
                for key, value in counts.items()},
        label=reader.enum(DemandMix, document.get('label', 'PureResidential'),
                          'demands.label'))


def parse_churn(reader, document):
    if not isinstance(document, dict):
        reader.fail("churn must be an object")
    return ChurnModel(
        rate=reader.number(document.get('rate', '0.1'), 'churn.rate'),
        probability=reader.number(document.get('probability', '0.1'),
                                  'churn.probability'),
        its_exempt=reader.flag(document.get('its_exempt', True),
                               'churn.its_exempt'))


def parse_costs(reader, document):
    records = {}
    raw_records = reader.require(document, 'records', 'costs')
    if not isinstance(raw_records, dict):
        reader.fail("costs.records must map technology ids to records")
    for tech_id, item in raw_records.items():
        where = f"costs.records.{tech_id}"
        if not isinstance(item, dict):
            reader.fail(f"{where} must be an object")
        values = {}
        for group, names in (('capex', CAPEX_CATEGORIES), ('opex', OPEX_CATEGORIES)):
            section = item.get(group) or {}
            if not isinstance(section, dict):
                reader.fail(f"{where}.{group} must map categories to amounts")
            for name in names:
                values[name] = reader.number(section.get(name, 0), f"{where}.{group}.{name}")
        records[tech_id] = CostRecord(
            provenance=item.get('provenance', 'published'),
            assumed=reader.flag(item.get('assumed', False), f"{where}.assumed"),
            **values)
    return CostDataset(
        name=document.get('name', 'costs'),
        records=records,
        unit=reader.enum(CostUnit, document.get('unit', 'per_subscriber'),
                         'costs.unit'),
        opex_mode=reader.enum(OpexMode, document.get('opex_mode', 'table'),
                              'costs.opex_mode'),
        adsl_opex_per_subscriber=reader.number(
            document.get('adsl_opex_per_subscriber', '0.25'),
            'costs.adsl_opex_per_subscriber'),
        provenance=document.get('provenance', ''))


def _section(reader, document, key, base_dir, bundle):
    """Inline section ``key`` or the document behind ``key_ref``"""
    ref = document.get(f"{key}_ref")
    if ref is None:
        return reader, reader.require(document, key)
    path = resolve_ref(ref, base_dir, bundle)
    getLogger().debug(f"{reader.path}: {key}_ref {ref} -> {path}")
    return _Reader(path), read_document(path)


def load_costs(ref, base_dir='.', bundle=None):
    """A cost dataset from a ``.json`` path or a bundled reference"""
    path = resolve_ref(ref, base_dir, bundle)
    return parse_costs(_Reader(path), read_document(path))


def load_curve(ref, base_dir='.', bundle=None):
    """A penetration curve from a ``.json`` path or a bundled reference"""
    path = resolve_ref(ref, base_dir, bundle)
    return parse_curve(_Reader(path), read_document(path))


def _duplicates(technologies):
    seen = set()
    for tech in technologies:
        if tech.id in seen:
            yield Violation('DUPLICATE_TECHNOLOGY', f"{tech.id} is declared twice")
        seen.add(tech.id)


def parse_scenario(document, path='<scenario>', bundle=None):
    """
    Build a scenario from a parsed document and run validation.

    :raises ScenarioParseError: when the document does not follow the schema
    :raises ValidationFailed: listing every violated invariant
    """
    reader = _Reader(path)
    if not isinstance(document, dict):
        reader.fail("scenario must be an object")
    base_dir = os.path.dirname(os.path.realpath(path)) if os.path.exists(str(path)) else '.'

    graph_reader, graph_document = reader, document
    if 'graph_ref' in document:
        graph_reader, graph_document = _section(reader, document, 'graph', base_dir, bundle)
    technologies = parse_technologies(
        graph_reader, graph_reader.require(graph_document, 'technologies'))
    edges = parse_edges(graph_reader, graph_document.get('edges', []))
    if graph_document is not document:
        edges += parse_edges(reader, document.get('edges', []))

    horizon = reader.require(document, 'horizon')
    config = ScenarioConfig(
        name=document.get('name', os.path.splitext(os.path.basename(str(path)))[0]),
        start_technology=reader.require(document, 'start_technology'),
        graph=MigrationGraph(technologies, edges),
        tariffs=parse_tariffs(*_section(reader, document, 'tariffs', base_dir, bundle)),
        curve=parse_curve(*_section(reader, document, 'curve', base_dir, bundle)),
        demands=parse_demands(reader, reader.require(document, 'demands')),
        churn=parse_churn(reader, document.get('churn', {})),
        costs=parse_costs(*_section(reader, document, 'costs', base_dir, bundle)),
        T_start=reader.integer(reader.require(horizon, 'T_start', 'horizon'), 'horizon.T_start'),
        T_mig=reader.integer(reader.require(horizon, 'T_mig', 'horizon'), 'horizon.T_mig'),
        T_NW=reader.integer(reader.require(horizon, 'T_NW', 'horizon'), 'horizon.T_NW'),
        discount_rate=reader.number(document.get('discount_rate', '0.10'), 'discount_rate'),
        goal=reader.enum(Goal, document.get('goal', 'FlexibleFTTx'), 'goal'),
        goal_rate=reader.integer(document.get('goal_rate', 100), 'goal_rate'),
        goal_enforced=reader.flag(document.get('goal_enforced', True), 'goal_enforced'),
        allow_waypoints=reader.flag(document.get('allow_waypoints', True), 'allow_waypoints'),
        discount_migration_capex=reader.flag(
            document.get('discount_migration_capex', True), 'discount_migration_capex'),
        family_rule=reader.flag(document.get('family_rule', True), 'family_rule'))

    violations = list(_duplicates(technologies)) + validate_scenario(config)
    if violations:
        raise ValidationFailed(violations, source=str(path))
    return config


def load_scenario(path, bundle=None):
    """
    Load, resolve and validate a scenario file.

    :param path: Path of the JSON scenario
    :param bundle: DatasetBundle used for bundled references
    :raises ScenarioIOError: when a file cannot be read
    :raises ScenarioParseError: when a document is malformed
    :raises ValidationFailed: listing every violation
    """
    return parse_scenario(read_document(path), path, bundle)
