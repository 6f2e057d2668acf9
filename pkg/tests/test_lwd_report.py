import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import json
import pytest
from data.lwd_report import CheckResult, LwdReport, RelationReport, load_report
from data.published_lwd import (
    PUBLISHED_LWD, canonical_text, checksum_ok, get_published, published_ids,
)
from data.weight_tally import WeightTally
from utility.errors import MatrixFormatError


def test_tally_drops_zero_counts():
    tally = WeightTally(7, {3: 7, 4: 0})
    assert tally.weights() == [3]
    assert tally[4] == 0
    assert tally == WeightTally(7, {3: 7})
    assert tally != WeightTally(8, {3: 7})


def test_tally_rejects_bad_weights():
    with pytest.raises(ValueError):
        WeightTally(4, {5: 1})
    with pytest.raises(ValueError):
        WeightTally(4, {2: -1})


def test_tally_merge_scale_restrict():
    a = WeightTally(7, {3: 7, 4: 2})
    b = WeightTally(7, {4: 5, 7: 1})
    assert (a + b).items() == [(3, 7), (4, 7), (7, 1)]
    assert a.scaled(3)[3] == 21
    assert (a + b).restricted(lambda w: w < 7).total() == 14
    with pytest.raises(ValueError):
        a.merge(WeightTally(8))


def test_report_json_keeps_large_counts_exact():
    huge = 1_481_008_226_366_914_560 * 1000
    report = LwdReport('rm-127-64', 127, 64, 'published',
                       {'L': WeightTally(127, {60: huge}), 'N': WeightTally(127)},
                       [CheckResult('identity', True, 'ok')], duration_ms=12)
    data = json.loads(report.to_json())
    assert data['L'] == {'60': str(huge)}
    assert data['N'] == {}
    assert data['checks'] == [{'name': 'identity', 'pass': True, 'detail': 'ok'}]
    assert LwdReport.from_json(report.to_json()) == report


def test_report_json_omits_absent_tallies():
    data = LwdReport('x', 4, 2, 'brute', {'L': WeightTally(4, {1: 1})}).to_dict()
    assert 'A' not in data and 'N' not in data and 'checks' not in data
    assert data['L'] == {'1': '1'}


@pytest.mark.parametrize("text", [
    'not json',
    '[1, 2]',
    '{"k": 2}',
    '{"n": 4, "L": {"9": "1"}}',
    '{"n": 4, "L": {"1": "one"}}',
])
def test_report_json_rejects_malformed_input(text):
    with pytest.raises(MatrixFormatError):
        LwdReport.from_json(text)


def test_load_report(tmp_path):
    path = tmp_path / 'report.json'
    report = LwdReport('toy', 4, 2, 'brute', {'L': WeightTally(4, {1: 1, 3: 1})})
    path.write_text(report.to_json(), encoding='utf-8')
    assert load_report(path).tallies['L'] == WeightTally(4, {1: 1, 3: 1})


def test_relation_report_nesting():
    child = RelationReport('inner')
    child.add('w=3', 7, 7)
    parent = RelationReport('outer', children=[child])
    assert parent.passed
    child.add('w=4', 7, 6)
    assert not parent.passed
    assert [(name, e.label) for name, e in parent.failures()] == [('inner', 'w=4')]
    checks = parent.to_checks()
    assert len(checks) == 1 and not checks[0].passed
    assert 'w=4: expected 7, got 6' in checks[0].detail


def test_published_columns():
    assert published_ids() == ['bch-127-36', 'bch-127-43', 'bch-127-50', 'rm-127-64']
    assert get_published('bch-127-36')[31] == 2_667
    assert get_published('bch-127-36')[32] == 8_001
    assert get_published('bch-127-50')[27] == 40_894
    assert get_published('rm-127-64')[16] == 82_677
    assert get_published('rm-127-64')[60] == 1_481_008_226_366_914_560
    with pytest.raises(KeyError):
        get_published('bch-127-99')


def test_published_checksum():
    assert checksum_ok()
    assert canonical_text().startswith('bch-127-36 31 2667\n')


def test_published_checksum_detects_a_changed_digit(mocker):
    corrupted = {key: dict(column) for key, column in PUBLISHED_LWD.items()}
    corrupted['bch-127-43'][32] += 10
    mocker.patch.dict('data.published_lwd.PUBLISHED_LWD', corrupted)
    assert not checksum_ok()


if __name__ == "__main__":
    pytest.main()
