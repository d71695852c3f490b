# algebra/linalg.py
"""
Exact Sparse Linear Algebra

Thin helpers over sympy's DomainMatrix for the oracle resolution: kernels,
reduced row echelon bases and pivot selection, all exact over QQ or GF(p).
Vectors are dicts {column index: nonzero domain element}.

Project: Koszul Toolkit
License: MIT
"""
from __future__ import annotations

from typing import Any, Dict, List, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

SparseVector = Dict[int, Any]


def _matrix(rows: Dict[int, SparseVector], shape: Tuple[int, int], domain: Any) -> DomainMatrix:
    clean = {}
    for i, row in rows.items():
        kept = {j: v for j, v in row.items() if not domain.is_zero(v)}
        if kept:
            clean[i] = kept
    return DomainMatrix(clean, shape, domain)


def _sparse_rows(matrix: DomainMatrix) -> Dict[int, SparseVector]:
    rep = matrix.to_sparse().rep
    return {i: dict(row) for i, row in rep.items() if row}


def row_echelon(vectors: Sequence[SparseVector], ncols: int, domain: Any) -> List[SparseVector]:
    """Nonzero rows of the reduced row echelon form of the stacked vectors."""
    if not vectors or ncols == 0:
        return []
    rref, pivots = _matrix(dict(enumerate(vectors)), (len(vectors), ncols), domain).rref()
    rows = _sparse_rows(rref)
    return [rows[i] for i in range(len(pivots)) if i in rows]


def kernel_basis(columns: Sequence[SparseVector], nrows: int, domain: Any) -> List[SparseVector]:
    """
    Basis of {c : Σ c_j·columns[j] = 0} in reduced echelon form, as vectors over
    column indices. `columns[j]` maps row index → entry.
    """
    ncols = len(columns)
    if ncols == 0:
        return []
    rows: Dict[int, SparseVector] = {}
    for j, col in enumerate(columns):
        for i, v in col.items():
            rows.setdefault(i, {})[j] = v
    if not any(not domain.is_zero(v) for row in rows.values() for v in row.values()):
        return [{j: domain.one} for j in range(ncols)]
    null = _matrix(rows, (max(nrows, 1), ncols), domain).nullspace()
    basis = list(_sparse_rows(null).values())
    return row_echelon(basis, ncols, domain)


def pivot_columns(columns: Sequence[SparseVector], nrows: int, domain: Any) -> Tuple[int, ...]:
    """Indices of columns that are not combinations of earlier columns."""
    if not columns or nrows == 0:
        return ()
    rows: Dict[int, SparseVector] = {}
    for j, col in enumerate(columns):
        for i, v in col.items():
            rows.setdefault(i, {})[j] = v
    _, pivots = _matrix(rows, (nrows, len(columns)), domain).rref()
    return tuple(pivots)
