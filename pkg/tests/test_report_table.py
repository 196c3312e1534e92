from src.orekit.report_table import columns_to_rows, table_to_text


def test_basic_table():
    data = {
        'check': ['centrality', 'filtration'],
        'status': ['pass', 'fail'],
    }
    expected = (
        "| check      | status |\n"
        "|------------|--------|\n"
        "| centrality | pass   |\n"
        "| filtration | fail   |\n"
    )
    assert table_to_text(data) == expected


def test_missing_values_render_empty():
    data = {
        'check': ['Phi injective'],
        'witness': [None],
    }
    expected = (
        "| check         | witness |\n"
        "|---------------|---------|\n"
        "| Phi injective |         |\n"
    )
    assert table_to_text(data) == expected


def test_pipes_in_cells_are_escaped():
    text = table_to_text({'witness': ['a|b']})
    assert text.splitlines()[2] == '| a\\|b    |'


def test_empty_table():
    assert table_to_text({}) == ''
    assert table_to_text({'check': []}) == ''


def test_columns_to_rows_pads_short_columns():
    rows = columns_to_rows({'a': [1, 2], 'b': [3]})
    assert rows == [{'a': 1, 'b': 3}, {'a': 2, 'b': None}]
