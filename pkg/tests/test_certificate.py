from src.orekit.certificate import cited, combine, failed, passed


def test_status_and_truthiness():
    assert passed('a')
    assert cited('b', 'see argument')
    assert not failed('c', 'x != y')
    assert failed('c').failed
    assert not cited('b').passed


def test_details_are_kept():
    assert passed('rank', rank=6).details == {'rank': 6}


def test_combine_reports_first_failure():
    parts = [passed('one', 'w1'), failed('two', 'bad'), failed('three', 'worse')]
    result = combine('all', parts)
    assert result.failed
    assert result.witness == 'two: bad'
    assert result.details['first_failure'] is parts[1]
    assert result.details['parts'] == parts


def test_combine_joins_witnesses_on_success():
    result = combine('all', [passed('one', 'w1'), cited('two', 'w2'), passed('three')])
    assert result.passed
    assert result.witness == 'w1; w2'


def test_combine_empty():
    result = combine('nothing', [])
    assert result.passed
    assert result.witness is None
