"""
Text and JSON rendering for the command line front end.
"""

import json


def matrix_to_dict(matrix):
    """JSON form of a LinkingMatrix: invariant part and writhes kept apart."""
    return {"components": matrix.size,
            "linking_matrix": matrix.off_diagonal().tolist(),
            "writhe": matrix.writhes()}


def format_matrix(matrix):
    """
    Render a linking matrix, the diagonal shown as a dot.

    Returns:
        str: One line per component
    """
    values = matrix.off_diagonal()
    width = max([len(str(v)) for v in values.flatten()] + [1]) + 1
    lines = []
    for i in range(matrix.size):
        cells = ["·".rjust(width) if i == j else str(values[i, j]).rjust(width)
                 for j in range(matrix.size)]
        lines.append("".join(cells))
    return "\n".join(lines)


def format_sequence(sequence):
    separator = "," if max(sequence) > 9 else ""
    return separator.join(str(i) for i in sequence)


def format_residue(value, modulus):
    """'v mod d', or the exact integer when d == 0."""
    return f"{value} mod {modulus}" if modulus else str(value)


def format_table(table, nonzero_only=False):
    """
    Render a MilnorTable, one line per sequence.

    Args:
        table (MilnorTable): Table to render
        nonzero_only (bool): Skip entries whose mu is 0

    Returns:
        str: Table text with a summary line
    """
    first = table.first_nonvanishing()
    lines = [f"Milnor invariants up to length {table.k} "
             f"(first non-vanishing length: {first if first is not None else 'none'})"]
    for sequence, entry in table.entries.items():
        if nonzero_only and not entry.mu:
            continue
        flag = "  exact" if entry.exact else ""
        lines.append(f"  mu_bar({format_sequence(sequence)}) = "
                     f"{format_residue(entry.mu_bar, entry.delta)}{flag}")
    return "\n".join(lines)


def to_json(data, indent=2):
    return json.dumps(data, indent=indent, sort_keys=False)
