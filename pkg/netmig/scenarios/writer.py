#! /usr/bin/env python
"""
Serialize plan results, comparisons and sweeps.

Formats: ``json`` (full policy, round-trips through :func:`load_result`),
``csv`` and ``table`` (the layout of published migration tables).
"""

import csv
import io
import json
import sys

from netmig.errors.planning import ScenarioIOError, ScenarioParseError
from netmig.model.scenario import Goal
from netmig.search.policy import MigrationStep, PlanResult, Policy, State

FORMATS = ('json', 'csv', 'table')
NO_MIGRATIONS = 'No Migrations'
TABLE_HEADER = ('Penetration Curve', 'FTTx Migration Path',
                'Net Present Value [C.U.]')


def format_money(value):
    return f"{value:.2f}"


def format_path(result):
    """``2019: PON1 / 2020: PON2`` or ``No Migrations``"""
    if not result.path:
        return NO_MIGRATIONS
    return ' / '.join(f"{step.year}: {result.display_name(step.technology)}"
                      for step in result.path)


def result_to_dict(result):
    return {
        'scenario': result.scenario,
        'curve': result.curve,
        'goal': result.goal_used.value,
        'evaluator': result.evaluator,
        'expected_npv': repr(result.expected_npv),
        'path': [{'year': step.year, 'technology': step.technology}
                 for step in result.path],
        'policy': [{'year': state.year, 'technology': state.technology,
                    'gamma': state.gamma, 'action': target}
                   for state, target in result.policy],
        'labels': dict(result.labels),
    }


def result_from_dict(document):
    return PlanResult(
        expected_npv=float(document['expected_npv']),
        path=[MigrationStep(item['year'], item['technology'])
              for item in document['path']],
        policy=Policy({State(item['year'], item['technology'], item['gamma']):
                       item['action'] for item in document['policy']}),
        goal_used=Goal(document['goal']),
        scenario=document.get('scenario', ''),
        curve=document.get('curve', ''),
        evaluator=document.get('evaluator', ''),
        labels=document.get('labels', {}))


def render_table(header, rows):
    """Pipe separated text table with padded columns"""
    cells = [list(header)] + [[str(cell) for cell in row] for row in rows]
    widths = [max(len(row[index]) for row in cells) for index in range(len(header))]
    lines = [' | '.join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
             for row in cells]
    lines.insert(1, '-+-'.join('-' * width for width in widths))
    return '\n'.join(lines) + '\n'


def render_csv(header, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def render_result(result, fmt):
    if fmt == 'json':
        return json.dumps(result_to_dict(result), indent=2, sort_keys=True) + '\n'
    if fmt == 'csv':
        rows = [('step', step.year, step.technology, '') for step in result.path]
        rows.append(('summary', '', format_path(result), repr(result.expected_npv)))
        return render_csv(('record', 'year', 'technology', 'expected_npv'), rows)
    if fmt == 'table':
        return render_table(TABLE_HEADER, [(result.curve, format_path(result),
                                            format_money(result.expected_npv))])
    raise ValueError(f"unknown format {fmt!r}; use one of {FORMATS}")


def emit(text, path=None):
    """
    Write ``text`` to ``path``, or to stdout when no path is given.

    :raises ScenarioIOError: when the file cannot be written
    """
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, 'w', encoding='utf-8', newline='') as handle:
            handle.write(text)
    except OSError as error:
        raise ScenarioIOError(path, error.strerror or error) from error


def write_result(result, fmt='table', path=None):
    """
    :param PlanResult result: An evaluated result
    :param str fmt: json, csv or table
    :param path: Output file; stdout when None
    """
    emit(render_result(result, fmt), path)


def load_result(path):
    """
    Read a result written in json format.

    :raises ScenarioIOError: when the file cannot be read
    :raises ScenarioParseError: when it is not a result document
    """
    try:
        with open(path, 'r', encoding='utf-8') as handle:
            document = json.load(handle)
    except OSError as error:
        raise ScenarioIOError(path, error.strerror or error) from error
    except json.JSONDecodeError as error:
        raise ScenarioParseError(path, error.msg, error.lineno, error.colno) from error
    try:
        return result_from_dict(document)
    except (KeyError, TypeError, ValueError) as error:
        raise ScenarioParseError(path, f"not a result document: {error}") from error


COMPARISON_HEADER = ('curve', 'goal', 'path', 'expected_npv')


def write_comparison(rows, gaps, fmt='table', path=None):
    """
    :param rows: PlanResult per (curve, goal), curve-major
    :param gaps: (curve, relative gap) per curve
    """
    if fmt == 'json':
        text = json.dumps({'results': [result_to_dict(row) for row in rows],
                           'gaps': [{'curve': curve, 'relative_gap': repr(gap)}
                                    for curve, gap in gaps]},
                          indent=2, sort_keys=True) + '\n'
    elif fmt == 'csv':
        body = [('plan', row.curve, row.goal_used.value, format_path(row),
                 repr(row.expected_npv)) for row in rows]
        body += [('gap', curve, '', '', repr(gap)) for curve, gap in gaps]
        text = render_csv(('record',) + COMPARISON_HEADER, body)
    elif fmt == 'table':
        text = render_table(('Penetration Curve', 'Goal', 'FTTx Migration Path',
                             'Net Present Value [C.U.]'),
                            [(row.curve, row.goal_used.value, format_path(row),
                              format_money(row.expected_npv)) for row in rows])
        text += '\n' + render_table(('Penetration Curve', 'Relative NPV gap'),
                                    [(curve, f"{gap:.2%}") for curve, gap in gaps])
    else:
        raise ValueError(f"unknown format {fmt!r}; use one of {FORMATS}")
    emit(text, path)


SWEEP_HEADER = ('record', 'parameter', 'value', 'curve', 'path',
                'expected_npv', 'trend')


def write_sweep(rows, trends, fmt='csv', path=None):
    """
    :param rows: (parameter, value, PlanResult) in sweep order
    :param trends: (parameter, curve, trend) per curve
    """
    if fmt == 'json':
        text = json.dumps({
            'results': [dict(result_to_dict(result), parameter=parameter,
                             value=str(value)) for parameter, value, result in rows],
            'trends': [{'parameter': parameter, 'curve': curve, 'trend': trend}
                       for parameter, curve, trend in trends]},
            indent=2, sort_keys=True) + '\n'
    elif fmt == 'csv':
        body = [('plan', parameter, value, result.curve, format_path(result),
                 repr(result.expected_npv), '') for parameter, value, result in rows]
        body += [('trend', parameter, '', curve, '', '', trend)
                 for parameter, curve, trend in trends]
        text = render_csv(SWEEP_HEADER, body)
    elif fmt == 'table':
        text = render_table(('Parameter', 'Value') + TABLE_HEADER,
                            [(parameter, value, result.curve, format_path(result),
                              format_money(result.expected_npv))
                             for parameter, value, result in rows])
        if trends:
            text += '\n' + render_table(('Parameter', 'Penetration Curve', 'Trend'),
                                        trends)
    else:
        raise ValueError(f"unknown format {fmt!r}; use one of {FORMATS}")
    emit(text, path)


def _generic(header, rows, fmt, path):
    if fmt == 'json':
        text = json.dumps([dict(zip(header, row)) for row in rows],
                          indent=2, sort_keys=True) + '\n'
    elif fmt == 'csv':
        text = render_csv(header, rows)
    elif fmt == 'table':
        text = render_table(header, rows)
    else:
        raise ValueError(f"unknown format {fmt!r}; use one of {FORMATS}")
    emit(text, path)


def write_verification(results, fmt='table', path=None):
    """One row per evaluator result"""
    rows = [(result.evaluator, format_path(result), repr(result.expected_npv))
            for result in results]
    _generic(('evaluator', 'path', 'expected_npv'), rows, fmt, path)


def write_matrix(costs, fmt='table', path=None):
    """One row per :class:`MigrationCost`"""
    rows = [(cost.from_id, cost.to_id, repr(cost.civil_delta),
             repr(cost.equip_delta), cost.civil_gate, cost.equip_gate,
             repr(cost.total)) for cost in costs]
    _generic(('from', 'to', 'civil_delta', 'equip_delta', 'civil_gate',
              'equip_gate', 'total'), rows, fmt, path)
