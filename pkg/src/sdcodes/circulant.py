"""Circulant, reverse-circulant and symmetric-circulant matrices over a ring.

A lambda-circulant shifts each row one step right, multiplying the entries
that wrap around by the unit lambda; the reverse kind shifts left and
multiplies the wrapping tail instead.  Matrices are dense tuples of ring
elements; every order used by the constructions is tiny (n <= 17).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .errors import BadLambda, BadShape, RingMismatch
from .rings import RingElement, RingId, is_unit, one, parse_vector, ring_add, ring_mul, zero


class CirculantKind(Enum):
    CIRCULANT = "circulant"
    REVERSE = "reverse"
    SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class RingMatrix:
    ring: RingId
    rows: int
    cols: int
    entries: tuple[tuple[RingElement, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise BadShape("entry grid does not match declared shape")
        for row in self.entries:
            for e in row:
                if e.ring is not self.ring:
                    raise RingMismatch("matrix entry from a different ring")

    def __getitem__(self, ij: tuple[int, int]) -> RingElement:
        return self.entries[ij[0]][ij[1]]

    def row(self, i: int) -> tuple[RingElement, ...]:
        return self.entries[i]


def matrix(ring: RingId, entries: Iterable[Iterable[RingElement]]) -> RingMatrix:
    grid = tuple(tuple(r) for r in entries)
    return RingMatrix(ring, len(grid), len(grid[0]) if grid else 0, grid)


def identity(ring: RingId, n: int) -> RingMatrix:
    o, z = one(ring), zero(ring)
    return matrix(ring, [[o if i == j else z for j in range(n)] for i in range(n)])


def zero_matrix(ring: RingId, rows: int, cols: int | None = None) -> RingMatrix:
    z = zero(ring)
    cols = rows if cols is None else cols
    return matrix(ring, [[z] * cols for _ in range(rows)])


def back_diagonal(ring: RingId, n: int) -> RingMatrix:
    """The anti-identity permutation matrix R."""
    o, z = one(ring), zero(ring)
    return matrix(ring, [[o if i + j == n - 1 else z for j in range(n)] for i in range(n)])


@dataclass(frozen=True)
class CirculantSpec:
    ring: RingId
    n: int
    kind: CirculantKind
    first_row: tuple[RingElement, ...]
    lam: RingElement = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.lam is None:
            object.__setattr__(self, "lam", one(self.ring))


def symmetric_free_count(n: int) -> int:
    """Number of free first-row entries of a symmetric circulant of order n."""
    return n // 2 + 1 if n % 2 == 0 else (n + 1) // 2


def expand_symmetric_row(row: Sequence[RingElement], n: int) -> tuple[RingElement, ...]:
    """Complete a compressed first row via a_i = a_{n+2-i} (1-based)."""
    free = symmetric_free_count(n)
    if len(row) == n:
        for i in range(1, n):  # 0-based i corresponds to a_{i+1}
            if row[i] != row[n - i]:
                raise BadShape("full first row is not symmetric (a_i != a_{n+2-i})")
        return tuple(row)
    if len(row) != free:
        raise BadShape(f"symmetric first row needs {free} or {n} entries, got {len(row)}")
    full = list(row) + [row[n - i] for i in range(free, n)]
    return tuple(full)


def build(spec: CirculantSpec) -> RingMatrix:
    """Materialize the n x n matrix described by a CirculantSpec."""
    ring, n, lam = spec.ring, spec.n, spec.lam
    if lam.ring is not ring:
        raise RingMismatch("lambda from a different ring")
    if not is_unit(lam):
        raise BadLambda(f"lambda {lam} is not a unit")
    row = spec.first_row
    if spec.kind is CirculantKind.SYMMETRIC:
        if lam.bits != 1:
            raise BadLambda("symmetric circulants are plain (lambda = 1)")
        row = expand_symmetric_row(row, n)
    elif len(row) != n:
        raise BadShape(f"first row has {len(row)} entries, expected {n}")
    for e in row:
        if e.ring is not ring:
            raise RingMismatch("first-row entry from a different ring")

    grid = []
    for i in range(n):
        out = []
        for j in range(n):
            if spec.kind is CirculantKind.REVERSE:
                e = row[(i + j) % n]
                wrapped = i + j >= n
            else:
                e = row[(j - i) % n]
                wrapped = j < i
            out.append(ring_mul(lam, e) if wrapped and lam.bits != 1 else e)
        grid.append(out)
    return matrix(ring, grid)


def circulant(ring: RingId, first_row: str | Sequence[RingElement], lam: RingElement | None = None) -> RingMatrix:
    row = parse_vector(first_row, ring) if isinstance(first_row, str) else tuple(first_row)
    return build(CirculantSpec(ring, len(row), CirculantKind.CIRCULANT, row, lam))


def reverse_circulant(ring: RingId, first_row: str | Sequence[RingElement], lam: RingElement | None = None) -> RingMatrix:
    row = parse_vector(first_row, ring) if isinstance(first_row, str) else tuple(first_row)
    return build(CirculantSpec(ring, len(row), CirculantKind.REVERSE, row, lam))


def symmetric_circulant(ring: RingId, first_row: str | Sequence[RingElement], n: int | None = None) -> RingMatrix:
    """Symmetric circulant from a full or compressed first row."""
    row = parse_vector(first_row, ring) if isinstance(first_row, str) else tuple(first_row)
    if n is None:
        n = len(row)  # compressed input needs n to be passed explicitly
    return build(CirculantSpec(ring, n, CirculantKind.SYMMETRIC, row))


def _conformable(a: RingMatrix, b: RingMatrix, op: str) -> None:
    if a.ring is not b.ring:
        raise RingMismatch(f"{op} across rings")


def mat_add(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    _conformable(a, b, "add")
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise BadShape("matrix addition shape mismatch")
    return matrix(a.ring, [
        [ring_add(a[i, j], b[i, j]) for j in range(a.cols)] for i in range(a.rows)
    ])


def mat_mul(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    _conformable(a, b, "multiply")
    if a.cols != b.rows:
        raise BadShape("matrix product shape mismatch")
    z = zero(a.ring)
    grid = []
    for i in range(a.rows):
        arow = a.entries[i]
        out = []
        for j in range(b.cols):
            acc = z
            for k in range(a.cols):
                acc = ring_add(acc, ring_mul(arow[k], b[k, j]))
            out.append(acc)
        grid.append(out)
    return matrix(a.ring, grid)


def mat_transpose(a: RingMatrix) -> RingMatrix:
    return matrix(a.ring, [[a[i, j] for i in range(a.rows)] for j in range(a.cols)])


def is_zero(a: RingMatrix) -> bool:
    return all(e.bits == 0 for row in a.entries for e in row)


def is_identity(a: RingMatrix) -> bool:
    if a.rows != a.cols:
        raise BadShape("identity test needs a square matrix")
    return all(
        a[i, j].bits == (1 if i == j else 0) for i in range(a.rows) for j in range(a.cols)
    )


def commutes(a: RingMatrix, b: RingMatrix) -> bool:
    """AB + BA == 0, i.e. AB == BA in characteristic 2."""
    if a.rows != a.cols or b.rows != b.cols or a.rows != b.rows:
        raise BadShape("commutation test needs equal square matrices")
    return is_zero(mat_add(mat_mul(a, b), mat_mul(b, a)))


def is_circulant_matrix(a: RingMatrix, lam: RingElement | None = None) -> bool:
    if a.rows != a.cols:
        return False
    lam = one(a.ring) if lam is None else lam
    expected = build(CirculantSpec(a.ring, a.rows, CirculantKind.CIRCULANT, a.row(0), lam))
    return a == expected


def is_reverse_circulant_matrix(a: RingMatrix, lam: RingElement | None = None) -> bool:
    if a.rows != a.cols:
        return False
    lam = one(a.ring) if lam is None else lam
    expected = build(CirculantSpec(a.ring, a.rows, CirculantKind.REVERSE, a.row(0), lam))
    return a == expected


def is_symmetric(a: RingMatrix) -> bool:
    return a.rows == a.cols and all(
        a[i, j] == a[j, i] for i in range(a.rows) for j in range(i + 1, a.cols)
    )
