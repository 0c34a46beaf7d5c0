#! /usr/bin/env python
"""Tests for result serialization"""

import json

import pytest

from netmig.economics import migration_matrix
from netmig.errors.planning import ScenarioIOError, ScenarioParseError
from netmig.model.scenario import Goal
from netmig.scenarios import writer
from netmig.search.memo import evaluate_memoized
from netmig.search.policy import PlanResult, Policy


@pytest.fixture()
def toy_result(toy):
    return evaluate_memoized(toy)


@pytest.fixture()
def idle_result():
    return PlanResult(expected_npv=12.5, path=(), policy=Policy({}),
                      goal_used=Goal.FIXED, scenario='idle', curve='Realistic')


def test_format_path_uses_labels(toy_result):
    """
    GIVEN the toy optimum
    WHEN its path is formatted
    THEN labels replace technology ids
    """
    assert writer.format_path(toy_result) == '2019: PON1 / 2020: PON2'


def test_format_path_without_migrations(idle_result):
    """
    GIVEN a result that never migrates
    WHEN its path is formatted
    THEN it reads No Migrations
    """
    assert writer.format_path(idle_result) == 'No Migrations'


def test_table_layout(toy_result, capsys):
    """
    GIVEN the toy optimum
    WHEN it is written as a table to stdout
    THEN the header, a rule and one row appear
    """
    writer.write_result(toy_result, 'table')
    lines = capsys.readouterr().out.splitlines()
    assert [cell.strip() for cell in lines[0].split('|')] == list(writer.TABLE_HEADER)
    assert set(lines[1]) <= {'-', '+'}
    assert [cell.strip() for cell in lines[2].split('|')] == [
        'Custom', '2019: PON1 / 2020: PON2',
        writer.format_money(toy_result.expected_npv)]
    assert len(lines) == 3


def test_csv_layout(toy_result):
    """
    GIVEN the toy optimum
    WHEN it is rendered as csv
    THEN each step is a row and the summary keeps the full precision NPV
    """
    lines = writer.render_result(toy_result, 'csv').splitlines()
    assert lines == [
        'record,year,technology,expected_npv',
        'step,2019,FTTCab_GPON_25,',
        'step,2020,FTTB_XGPON_100,',
        f"summary,,2019: PON1 / 2020: PON2,{toy_result.expected_npv!r}",
    ]


def test_json_reloads(toy_result, tmp_path):
    """
    GIVEN the toy optimum written as json
    WHEN the file is read back
    THEN the result is identical, policy included
    """
    target = tmp_path / 'result.json'
    writer.write_result(toy_result, 'json', str(target))
    assert json.loads(target.read_text())['path'][0] == {
        'year': 2019, 'technology': 'FTTCab_GPON_25'}
    assert writer.load_result(str(target)) == toy_result


def test_load_result_rejects_other_documents(tmp_path):
    """
    GIVEN a json file that is not a result
    WHEN it is loaded as one
    THEN a parse error is raised
    """
    target = tmp_path / 'other.json'
    target.write_text('{"expected_npv": "1.0"}')
    with pytest.raises(ScenarioParseError):
        writer.load_result(str(target))


def test_unknown_format(toy_result):
    """
    GIVEN a format name that does not exist
    WHEN a result is rendered
    THEN ValueError lists the choices
    """
    with pytest.raises(ValueError, match='xml'):
        writer.render_result(toy_result, 'xml')


def test_emit_unwritable(tmp_path):
    """
    GIVEN an output path inside a missing directory
    WHEN text is emitted
    THEN an IO error is raised
    """
    with pytest.raises(ScenarioIOError) as error:
        writer.emit('text\n', str(tmp_path / 'missing' / 'out.txt'))
    assert error.value.exit_code == 2


def test_matrix_csv(toy, capsys):
    """
    GIVEN the toy scenario
    WHEN its migration matrix is written as csv
    THEN every edge has its gated CAPEX, leaving ADSL paying the full target
    """
    writer.write_matrix(migration_matrix(toy), 'csv')
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 'from,to,civil_delta,equip_delta,civil_gate,equip_gate,total'
    assert lines[1:] == [
        'ADSL_Copper_20,FTTB_XGPON_100,160.0,160.0,1,1,320.0',
        'ADSL_Copper_20,FTTCab_GPON_25,100.0,100.0,1,1,200.0',
        'FTTCab_GPON_25,FTTB_XGPON_100,60.0,60.0,1,1,120.0',
    ]


def test_sweep_csv(toy_result, idle_result, capsys):
    """
    GIVEN two sweep rows and a trend
    WHEN the sweep is written as csv
    THEN plan rows come first and trend rows last
    """
    rows = [('discount_rate', 0.05, toy_result), ('discount_rate', 0.1, idle_result)]
    writer.write_sweep(rows, [('discount_rate', 'Custom', 'non-increasing')])
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == ','.join(writer.SWEEP_HEADER)
    assert lines[1].startswith('plan,discount_rate,0.05,Custom,2019: PON1 / 2020: PON2,')
    assert lines[2] == 'plan,discount_rate,0.1,Realistic,No Migrations,12.5,'
    assert lines[3] == 'trend,discount_rate,,Custom,,,non-increasing'


def test_comparison_json(toy_result, idle_result, capsys):
    """
    GIVEN a flexible and a fixed result for one curve
    WHEN the comparison is written as json
    THEN both results and the relative gap are present
    """
    writer.write_comparison([toy_result, idle_result], [('Custom', 0.25)], 'json')
    document = json.loads(capsys.readouterr().out)
    assert [item['goal'] for item in document['results']] == [
        'FlexibleFTTx', Goal.FIXED.value]
    assert document['gaps'] == [{'curve': 'Custom', 'relative_gap': '0.25'}]
