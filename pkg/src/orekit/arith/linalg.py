"""
Exact linear algebra over any field whose elements support + - * / and == 0
(Fraction, prime-field RatFunc constants, RatFunc).
"""

from typing import Any, Callable, Dict, Hashable, List, Optional, Sequence, TypeVar

T = TypeVar('T')
Vector = Dict[Hashable, Any]
Matrix = List[List[Any]]


def _is_zero(value: Any) -> bool:
    return value == 0


class EchelonBasis:
    """
    Incrementally maintained row-echelon basis of sparse vectors.

    Each stored row has a pivot entry equal to 1 and is zero at the pivots of
    all rows inserted before it; new vectors are reduced in insertion order.
    """

    def __init__(self, pivot_key: Optional[Callable[[Hashable], Any]] = None) -> None:
        self._pivot_key = pivot_key
        self._rows: List[tuple] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, vector: Vector) -> Vector:
        """Remainder of `vector` after eliminating every stored pivot."""
        v = {k: c for k, c in vector.items() if not _is_zero(c)}
        for pivot, row in self._rows:
            c = v.get(pivot)
            if c is None:
                continue
            for k, r in row.items():
                value = v.get(k, 0) - c * r
                if _is_zero(value):
                    v.pop(k, None)
                else:
                    v[k] = value
        return v

    def contains(self, vector: Vector) -> bool:
        return not self.reduce(vector)

    def insert(self, vector: Vector) -> bool:
        """Add `vector` to the span; True when the rank grew."""
        v = self.reduce(vector)
        if not v:
            return False
        pivot = min(v, key=self._pivot_key) if self._pivot_key else next(iter(v))
        lead = v[pivot]
        row = {k: c / lead for k, c in v.items()}
        self._rows.append((pivot, row))
        return True


def rank(vectors: Sequence[Vector]) -> int:
    basis = EchelonBasis()
    for v in vectors:
        basis.insert(v)
    return basis.rank


def determinant(matrix: Matrix) -> Any:
    """Determinant by Gaussian elimination with exact division."""
    n = len(matrix)
    if n == 0:
        return 1
    if any(len(row) != n for row in matrix):
        raise ValueError('determinant of a non-square matrix')
    rows = [list(row) for row in matrix]
    det = rows[0][0] * 0 + 1
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if not _is_zero(rows[r][col])), None)
        if pivot_row is None:
            return det * 0
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            det = -det
        pivot = rows[col][col]
        det = det * pivot
        for r in range(col + 1, n):
            factor = rows[r][col] / pivot
            if _is_zero(factor):
                continue
            for c in range(col, n):
                rows[r][c] = rows[r][c] - factor * rows[col][c]
    return det


def minor(matrix: Matrix, row: int, col: int) -> Matrix:
    return [[v for j, v in enumerate(r) if j != col] for i, r in enumerate(matrix) if i != row]


def adjugate(matrix: Matrix) -> Matrix:
    """Classical adjoint: adj(M)[j][i] = (-1)^(i+j) det(minor(M, i, j))."""
    n = len(matrix)
    if n == 1:
        return [[matrix[0][0] * 0 + 1]]
    adj: Matrix = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            cofactor = determinant(minor(matrix, i, j))
            adj[j][i] = cofactor if (i + j) % 2 == 0 else -cofactor
    return adj


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    inner = len(b)
    return [
        [sum((a[i][k] * b[k][j] for k in range(1, inner)), a[i][0] * b[0][j]) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def mat_vec(a: Matrix, v: Sequence[Any]) -> List[Any]:
    return [sum((row[k] * v[k] for k in range(1, len(v))), row[0] * v[0]) for row in a]
