"""Exact rank of sparse integer matrices by fraction-free elimination."""
from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {k: v // g for k, v in row.items()}


def integer_rank(rows: Iterable[Mapping[int, int]]) -> int:
    """Rank over Q of the matrix whose rows are given as {column: nonzero int}.

    Rows are reduced against pivots keyed by leading column; each combination
    ``a*row - b*pivot`` stays integral and rows are divided by their content
    to keep entries small.
    """
    pivots: dict[int, dict[int, int]] = {}
    for r in rows:
        row = {k: v for k, v in r.items() if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = _primitive(row)
                break
            a, b = piv[lead], row[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * v for k, v in row.items()}
            for k, v in piv.items():
                w = new.get(k, 0) - b * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            row = _primitive(new) if new else new
    return len(pivots)
