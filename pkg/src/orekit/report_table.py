from typing import Any, Dict, List, Sequence, Text


def columns_to_rows(data: Dict[str, List[Any]]) -> List[Dict[str, Any]]:
    """
    Transform column-based table data to row-based format.

    Args:
        data: Dictionary with columns as keys and value lists

    Returns:
        List of dictionaries, each representing a row
    """
    if not data:
        return []

    num_rows = max(len(values) for values in data.values())

    rows = []
    for i in range(num_rows):
        row = {}
        for col_name, col_values in data.items():
            row[col_name] = col_values[i] if i < len(col_values) else None
        rows.append(row)

    return rows


def _cell(value: Any) -> str:
    # a pipe inside a witness would split the cell
    return '' if value is None else str(value).replace('|', '\\|')


def calculate_column_widths(headers: Sequence[str], rows: List[Dict[str, Any]]) -> Dict[str, int]:
    """Width of each column including one space of padding on both sides."""
    widths = {header: len(header) for header in headers}

    for row in rows:
        for header in headers:
            widths[header] = max(widths[header], len(_cell(row.get(header))))

    return {k: v + 2 for k, v in widths.items()}


def format_row(row: Dict[str, Any], headers: Sequence[str], widths: Dict[str, int]) -> str:
    cells = []
    for header in headers:
        value = _cell(row.get(header))
        padding = widths[header] - len(value)
        cells.append(f" {value}{' ' * (padding - 1)}")
    return f"|{'|'.join(cells)}|"


def create_separator(headers: Sequence[str], widths: Dict[str, int]) -> str:
    return '|' + '|'.join('-' * widths[header] for header in headers) + '|'


def table_to_text(data: Dict[str, List[Any]]) -> Text:
    """
    Render column-based data as a pipe table.

    Args:
        data: Column name -> column values, in display order

    Returns:
        The table with a header row and a separator row, or '' for no rows
    """
    headers = list(data.keys())
    rows = columns_to_rows(data)
    if not rows:
        return ''

    widths = calculate_column_widths(headers, rows)
    header_row = format_row(dict(zip(headers, headers)), headers, widths)
    separator_row = create_separator(headers, widths)
    data_rows = [format_row(row, headers, widths) for row in rows]

    return '\n'.join([header_row, separator_row] + data_rows) + '\n'
