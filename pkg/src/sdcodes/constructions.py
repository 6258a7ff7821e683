"""Generator-matrix constructions for self-dual codes over the three rings.

Every construction returns [ I_2n | M ] and checks its algebraic
precondition by explicit matrix arithmetic before assembling; a failed
check raises NotSelfDualCondition rather than returning a bad generator.
All identities are stated in characteristic 2, so -I and -B^T read as
I and B^T.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TextIO

from .circulant import (
    CirculantKind,
    CirculantSpec,
    RingMatrix,
    build,
    commutes,
    identity,
    is_circulant_matrix,
    is_identity,
    is_reverse_circulant_matrix,
    is_symmetric,
    is_zero,
    mat_add,
    mat_mul,
    mat_transpose,
    matrix,
)
from .errors import BadEncoding, BadShape, NotSelfDualCondition
from .rings import RingElement, RingId, encode_vector, is_unit, one, parse_vector


@dataclass(frozen=True)
class RingGenerator:
    """A k x m generator matrix over a ring, usually in block form [I | M]."""

    ring: RingId
    k: int
    m: int
    matrix: RingMatrix

    def rows(self) -> tuple[tuple[RingElement, ...], ...]:
        return self.matrix.entries


def generator(mat: RingMatrix) -> RingGenerator:
    return RingGenerator(mat.ring, mat.rows, mat.cols, mat)


def gram(g: RingGenerator) -> RingMatrix:
    """G * G^T over the ring."""
    return mat_mul(g.matrix, mat_transpose(g.matrix))


def is_self_dual_generator(g: RingGenerator) -> bool:
    """G generates a self-dual code iff G*G^T = 0 and the shape is [k | 2k]."""
    return g.m == 2 * g.k and is_zero(gram(g))


def _hstack(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    return matrix(a.ring, [ra + rb for ra, rb in zip(a.entries, b.entries)])


def _blocks(tl: RingMatrix, tr: RingMatrix, bl: RingMatrix, br: RingMatrix) -> RingMatrix:
    top = [r1 + r2 for r1, r2 in zip(tl.entries, tr.entries)]
    bot = [r1 + r2 for r1, r2 in zip(bl.entries, br.entries)]
    return matrix(tl.ring, top + bot)


def _with_identity(m: RingMatrix) -> RingGenerator:
    return generator(_hstack(identity(m.ring, m.rows), m))


def _square_same(*mats: RingMatrix) -> int:
    n = mats[0].rows
    for m in mats:
        if m.rows != m.cols or m.rows != n:
            raise BadShape("constructions need equal square blocks")
    return n


def four_circulant(a: RingMatrix, b: RingMatrix) -> RingGenerator:
    """Classical construction ( I | A B / B^T A^T ) needing AA^T + BB^T = I."""
    n = _square_same(a, b)
    if not (is_circulant_matrix(a) and is_circulant_matrix(b)):
        raise BadShape("four_circulant needs circulant A and B")
    at, bt = mat_transpose(a), mat_transpose(b)
    if not is_identity(mat_add(mat_mul(a, at), mat_mul(b, bt))):
        raise NotSelfDualCondition("AA^T + BB^T != I")
    return _with_identity(_blocks(a, b, bt, at))


def modified_four_circulant(lam: RingElement, a: RingMatrix, b: RingMatrix) -> RingGenerator:
    """Variant ( I | A B / B A ) with lambda-circulant A, lambda-reverse B."""
    n = _square_same(a, b)
    if not is_unit(lam):
        raise NotSelfDualCondition("lambda is not a unit")
    if not is_circulant_matrix(a, lam):
        raise BadShape("A is not lambda-circulant")
    if not is_reverse_circulant_matrix(b, lam):
        raise BadShape("B is not lambda-reverse-circulant")
    if not is_identity(mat_add(mat_mul(a, mat_transpose(a)), mat_mul(b, mat_transpose(b)))):
        raise NotSelfDualCondition("AA^T + BB^T != I")
    return _with_identity(_blocks(a, b, b, a))


def generalized_four_circulant(a: RingMatrix, b: RingMatrix, c: RingMatrix) -> RingGenerator:
    """Generalized form ( I | A B+C / B^T+C A^T ).

    Needs AA^T + BB^T + C^2 = I and AC = CA, with A, B circulant and C
    reverse-circulant.
    """
    n = _square_same(a, b, c)
    if not (is_circulant_matrix(a) and is_circulant_matrix(b)):
        raise BadShape("A and B must be circulant")
    if not is_reverse_circulant_matrix(c):
        raise BadShape("C must be reverse-circulant")
    at, bt = mat_transpose(a), mat_transpose(b)
    cond = mat_add(mat_add(mat_mul(a, at), mat_mul(b, bt)), mat_mul(c, c))
    if not is_identity(cond):
        raise NotSelfDualCondition("AA^T + BB^T + C^2 != I")
    if not commutes(a, c):
        raise NotSelfDualCondition("AC != CA")
    return _with_identity(_blocks(a, mat_add(b, c), mat_add(bt, c), at))


def symmetric_variant(a: RingMatrix, b: RingMatrix, c: RingMatrix) -> RingGenerator:
    """Symmetric-A variant ( I | A B+C / B^T+C A ) with A^2 + BB^T + C^2 = I."""
    n = _square_same(a, b, c)
    if not (is_circulant_matrix(a) and is_symmetric(a)):
        raise BadShape("A must be a symmetric circulant")
    if not is_circulant_matrix(b):
        raise BadShape("B must be circulant")
    if not is_reverse_circulant_matrix(c):
        raise BadShape("C must be reverse-circulant")
    bt = mat_transpose(b)
    cond = mat_add(mat_add(mat_mul(a, a), mat_mul(b, bt)), mat_mul(c, c))
    if not is_identity(cond):
        raise NotSelfDualCondition("A^2 + BB^T + C^2 != I")
    return _with_identity(_blocks(a, mat_add(b, c), mat_add(bt, c), a))


def czero_perturb(base: RingGenerator, c: RingMatrix) -> RingGenerator:
    """Perturb a four-circulant generator by a reverse-circulant C with C^2 = 0.

    The base blocks A and B are read back out of the generator, so base must
    come from four_circulant().
    """
    n2 = base.k
    if n2 % 2 or base.m != 2 * n2:
        raise BadShape("base generator is not [I_2n | M]")
    n = n2 // 2
    e = base.matrix.entries
    a = matrix(base.ring, [row[n2 : n2 + n] for row in e[:n]])
    b = matrix(base.ring, [row[n2 + n :] for row in e[:n]])
    bl = matrix(base.ring, [row[n2 : n2 + n] for row in e[n:]])
    br = matrix(base.ring, [row[n2 + n :] for row in e[n:]])
    if bl != mat_transpose(b) or br != mat_transpose(a):
        raise BadShape("base generator lacks four-circulant block structure")
    if c.rows != n or c.cols != n or c.ring is not base.ring:
        raise BadShape("C does not conform to the base blocks")
    if not is_reverse_circulant_matrix(c):
        raise BadShape("C must be reverse-circulant")
    if not is_zero(mat_mul(c, c)):
        raise NotSelfDualCondition("C^2 != 0")
    if not commutes(a, c):
        raise NotSelfDualCondition("AC != CA")
    bt = mat_transpose(b)
    return _with_identity(_blocks(a, mat_add(b, c), mat_add(bt, c), mat_transpose(a)))


METHODS = ("four", "modified", "general", "symmetric", "czero")


def build_from_rows(
    ring: RingId,
    n: int,
    method: str,
    r_a: str | None = None,
    r_b: str | None = None,
    r_c: str | None = None,
    lam: str | None = None,
    force: bool = False,
) -> RingGenerator:
    """Assemble a construction from encoded first rows (the config record).

    With force=True the block matrix is assembled without the self-duality
    precondition (exploratory use; callers should re-check G G^T).
    """
    if method not in METHODS:
        raise BadEncoding(f"unknown method {method!r}")

    def need(name: str, text: str | None) -> tuple[RingElement, ...]:
        if text is None:
            raise BadEncoding(f"method {method!r} requires --{name}")
        return parse_vector(text, ring)

    lam_el = parse_vector(lam, ring)[0] if lam is not None else one(ring)
    if method == "four":
        a = build(CirculantSpec(ring, n, CirculantKind.CIRCULANT, need("ra", r_a)))
        b = build(CirculantSpec(ring, n, CirculantKind.CIRCULANT, need("rb", r_b)))
        if force:
            return _with_identity(_blocks(a, b, mat_transpose(b), mat_transpose(a)))
        return four_circulant(a, b)
    if method == "modified":
        a = build(CirculantSpec(ring, n, CirculantKind.CIRCULANT, need("ra", r_a), lam_el))
        b = build(CirculantSpec(ring, n, CirculantKind.REVERSE, need("rb", r_b), lam_el))
        if force:
            return _with_identity(_blocks(a, b, b, a))
        return modified_four_circulant(lam_el, a, b)
    if method == "symmetric":
        a = build(CirculantSpec(ring, n, CirculantKind.SYMMETRIC, need("ra", r_a)))
        b = build(CirculantSpec(ring, n, CirculantKind.CIRCULANT, need("rb", r_b)))
        c = build(CirculantSpec(ring, n, CirculantKind.REVERSE, need("rc", r_c)))
        if force:
            bt = mat_transpose(b)
            return _with_identity(_blocks(a, mat_add(b, c), mat_add(bt, c), a))
        return symmetric_variant(a, b, c)
    # general and czero share the block shape
    a = build(CirculantSpec(ring, n, CirculantKind.CIRCULANT, need("ra", r_a)))
    b = build(CirculantSpec(ring, n, CirculantKind.CIRCULANT, need("rb", r_b)))
    c = build(CirculantSpec(ring, n, CirculantKind.REVERSE, need("rc", r_c)))
    if force:
        bt = mat_transpose(b)
        return _with_identity(_blocks(a, mat_add(b, c), mat_add(bt, c), mat_transpose(a)))
    if method == "general":
        return generalized_four_circulant(a, b, c)
    return czero_perturb(four_circulant(a, b), c)


def write_ring_generator(fh: TextIO, g: RingGenerator) -> None:
    """Text format: 'ring <name> <k> <m>' then one encoded row per line."""
    fh.write(f"ring {g.ring.value} {g.k} {g.m}\n")
    for row in g.rows():
        fh.write(encode_vector(row) + "\n")


def read_ring_generator(fh: TextIO) -> RingGenerator:
    header = fh.readline().split()
    if len(header) != 4 or header[0] != "ring":
        raise BadEncoding("not a ring generator file")
    ring = RingId.parse(header[1])
    k, m = int(header[2]), int(header[3])
    rows = []
    for _ in range(k):
        line = fh.readline().strip()
        row = parse_vector(line, ring)
        if len(row) != m:
            raise BadShape(f"row has {len(row)} entries, expected {m}")
        rows.append(row)
    return generator(matrix(ring, rows))
