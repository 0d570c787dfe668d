"""Exact linear algebra over the rationals.

Row reduction is done on integer-rescaled rows (rescaling a row changes
neither rank nor kernel), with gcd normalization to keep entries small.
Kernel bases come out of a reduced echelon form in a fixed column order,
so "the first nullspace vector" is well defined and reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def row_to_int(row) -> list[int]:
    """Rescale a rational row to integers and divide out the content."""
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    out = [int(x * den) if isinstance(x, Fraction) else int(x) * den for x in row]
    g = 0
    for x in out:
        g = gcd(g, x)
    if g > 1:
        out = [x // g for x in out]
    return out


def echelon_int(rows) -> tuple[list[list[int]], list[int]]:
    """Integer echelon form; returns (rows, pivot column per row)."""
    work: list[list[int]] = []
    pivots: list[int] = []
    for raw in rows:
        row = row_to_int(raw)
        for prow, pcol in zip(work, pivots):
            if row[pcol]:
                a, b = prow[pcol], row[pcol]
                row = [a * x - b * y for x, y in zip(row, prow)]
                g = 0
                for x in row:
                    g = gcd(g, x)
                if g > 1:
                    row = [x // g for x in row]
        for col, x in enumerate(row):
            if x:
                # keep rows sorted by pivot column
                at = sum(1 for p in pivots if p < col)
                work.insert(at, row)
                pivots.insert(at, col)
                break
    return work, pivots


def rank(rows) -> int:
    return len(echelon_int(rows)[0])


def nullspace(rows, ncols: int) -> list[list[Fraction]]:
    """Kernel basis of the row span, one vector per free column, in
    ascending free-column order.  Vectors are normalized with leading
    coefficient 1."""
    work, pivots = echelon_int(rows)
    # back-substitution to reduced form, over Fractions
    reduced = [[Fraction(x) for x in row] for row in work]
    for i in range(len(reduced) - 1, -1, -1):
        lead = reduced[i][pivots[i]]
        reduced[i] = [x / lead for x in reduced[i]]
        for j in range(i):
            c = reduced[j][pivots[i]]
            if c:
                reduced[j] = [x - c * y for x, y in zip(reduced[j], reduced[i])]
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, pcol in zip(reduced, pivots):
            vec[pcol] = -row[free]
        basis.append(vec)
    return basis


def _sparse_row_to_int(row: dict) -> dict:
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    out = {}
    g = 0
    for k, v in row.items():
        iv = int(v * den) if isinstance(v, Fraction) else int(v) * den
        if iv:
            out[k] = iv
            g = gcd(g, iv)
    if g > 1:
        out = {k: v // g for k, v in out.items()}
    return out


def sparse_echelon(rows) -> dict:
    """Echelon form of sparse integer-scaled rows; returns a map from
    pivot key to its gcd-reduced row."""
    pivots: dict = {}
    for raw in rows:
        row = _sparse_row_to_int(raw)
        while row:
            p = min(row)
            prow = pivots.get(p)
            if prow is None:
                pivots[p] = row
                break
            a, b = prow[p], row[p]
            new = {}
            g = 0
            for k in row.keys() | prow.keys():
                v = a * row.get(k, 0) - b * prow.get(k, 0)
                if v:
                    new[k] = v
                    g = gcd(g, v)
            if g > 1:
                new = {k: v // g for k, v in new.items()}
            row = new
    return pivots


def rank_of_sparse(vecs) -> int:
    """Rank of a family of sparse vectors (dicts key -> coefficient)."""
    return len(sparse_echelon(vecs))


def sparse_nullspace(rows, columns) -> list[dict]:
    """Kernel basis for sparse constraint rows over the given column
    keys (which must be sorted in their natural order), one vector per
    free column in ascending order, each normalized with coefficient 1
    on its free column."""
    pivots = sparse_echelon(rows)
    # back-substitute so every pivot row touches no other pivot column
    reduced: dict = {}
    for p in sorted(pivots, reverse=True):
        row = {k: Fraction(v) for k, v in pivots[p].items()}
        for k in [k for k in row if k != p and k in reduced]:
            c = row.pop(k)
            for kk, vv in reduced[k].items():
                if kk != k:
                    nv = row.get(kk, 0) - c * vv
                    if nv:
                        row[kk] = nv
                    else:
                        row.pop(kk, None)
        lead = row[p]
        reduced[p] = {k: v / lead for k, v in row.items() if k != p}
    basis = []
    for free in columns:
        if free in reduced:
            continue
        vec = {free: Fraction(1)}
        for p, rest in reduced.items():
            if free in rest:
                vec[p] = -rest[free]
        basis.append(vec)
    return basis
