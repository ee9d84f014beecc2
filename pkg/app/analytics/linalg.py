"""
Exact linear algebra over QQ or Q(theta, d, r)

Thin wrappers over sympy's DomainMatrix. Matrices are passed around as
plain lists of rows of domain elements; empty shapes are handled here
because DomainMatrix does not accept every zero-size case.
"""
from typing import Any, List, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

Row = List[Any]


def domain_matrix(rows: Sequence[Sequence[Any]], ncols: int, domain) -> DomainMatrix:
    data = [[domain.convert(x) for x in row] for row in rows]
    return DomainMatrix(data, (len(data), ncols), domain)


def _entries(matrix: DomainMatrix) -> List[Row]:
    nrows, ncols = matrix.shape
    return [[matrix[i, j].element for j in range(ncols)] for i in range(nrows)]


def row_reduce(rows: Sequence[Sequence[Any]], ncols: int, domain) -> Tuple[List[Row], Tuple[int, ...]]:
    """Reduced row echelon form; returns only the non-zero rows and the pivot columns"""
    if not rows or ncols == 0:
        return [], ()
    reduced, pivots = domain_matrix(rows, ncols, domain).rref()
    return _entries(reduced)[:len(pivots)], tuple(pivots)


def rank(rows: Sequence[Sequence[Any]], ncols: int, domain) -> int:
    return len(row_reduce(rows, ncols, domain)[1])


def nullspace(rows: Sequence[Sequence[Any]], ncols: int, domain) -> List[Row]:
    """
    Basis of {x : rows . x = 0} in canonical form.

    The basis is itself returned in reduced echelon form, so every vector's
    first non-zero entry (in column order) is 1 and the result does not
    depend on how elimination proceeded.
    """
    if ncols == 0:
        return []
    reduced, pivots = row_reduce(rows, ncols, domain)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vec = [domain.zero] * ncols
        vec[f] = domain.one
        for i, col in enumerate(pivots):
            vec[col] = -reduced[i][f]
        basis.append(vec)
    canonical, _ = row_reduce(basis, ncols, domain)
    return canonical


def determinant(rows: Sequence[Sequence[Any]], domain) -> Any:
    n = len(rows)
    if n == 0:
        return domain.one
    return domain_matrix(rows, n, domain).det()


def in_span(vector: Sequence[Any], rows: Sequence[Sequence[Any]], ncols: int, domain) -> bool:
    """Whether vector is a linear combination of rows"""
    if not any(vector):
        return True
    return rank(list(rows) + [vector], ncols, domain) == rank(rows, ncols, domain)


def mat_vec(rows: Sequence[Sequence[Any]], vector: Sequence[Any], domain) -> Row:
    out = []
    for row in rows:
        acc = domain.zero
        for a, b in zip(row, vector):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out
