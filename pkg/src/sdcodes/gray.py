"""Gray maps onto binary and intermediate alphabets.

All four maps act blockwise on whole vectors: a vector over the source
alphabet decomposes into two coefficient vectors (a, b) and the image is
the concatenation of the two blocks, never an interleaving.
"""

from __future__ import annotations

from typing import Sequence

from .errors import BadRing
from .rings import RingElement, RingId, ring_mul

Bits = list[int]


def _check_ring(v: Sequence[RingElement], ring: RingId, op: str) -> None:
    for e in v:
        if e.ring is not ring:
            raise BadRing(f"{op} expects {ring.value} entries, got {e.ring.value}")


def psi_f4(v: Sequence[RingElement]) -> Bits:
    """a*w + b*wbar -> (a | b) with a, b binary blocks.

    Entries must be u-free (the F4 subring of F4+uF4, or plain F2).
    """
    a: Bits = []
    b: Bits = []
    for e in v:
        if e.ring is RingId.F2U or e.bits & 0b1010:
            raise BadRing("psi_f4 requires u-free entries")
        c1 = e.bits & 1
        cw = (e.bits >> 2) & 1
        a.append(cw ^ c1)
        b.append(c1)
    return a + b


def phi_f2u(v: Sequence[RingElement]) -> Bits:
    """a + b*u -> (b | a+b) with a, b binary blocks."""
    _check_ring(v, RingId.F2U, "phi_f2u")
    a = [e.bits & 1 for e in v]
    b = [(e.bits >> 1) & 1 for e in v]
    return b + [x ^ y for x, y in zip(a, b)]


def psi_f4u(v: Sequence[RingElement]) -> list[RingElement]:
    """a*w + b*wbar -> (a | b) with a, b blocks over F2+uF2."""
    _check_ring(v, RingId.F4U, "psi_f4u")
    a: list[RingElement] = []
    b: list[RingElement] = []
    for e in v:
        c1 = e.bits & 1
        cu = (e.bits >> 1) & 1
        cw = (e.bits >> 2) & 1
        cuw = (e.bits >> 3) & 1
        a.append(RingElement(RingId.F2U, ((cuw ^ cu) << 1) | (cw ^ c1)))
        b.append(RingElement(RingId.F2U, (cu << 1) | c1))
    return a + b


def phi_f4u(v: Sequence[RingElement]) -> list[RingElement]:
    """a + b*u -> (b | a+b) with a, b blocks over F4 (u-free F4+uF4)."""
    _check_ring(v, RingId.F4U, "phi_f4u")
    a: list[RingElement] = []
    b: list[RingElement] = []
    for e in v:
        av = ((e.bits >> 2) & 1) << 2 | (e.bits & 1)
        bv = ((e.bits >> 3) & 1) << 2 | ((e.bits >> 1) & 1)
        a.append(RingElement(RingId.F4U, av))
        b.append(RingElement(RingId.F4U, bv))
    return b + [RingElement(RingId.F4U, x.bits ^ y.bits) for x, y in zip(a, b)]


def to_binary(v: Sequence[RingElement]) -> Bits:
    """Canonical binary image: identity, phi, or phi o psi by ring."""
    if not v:
        return []
    ring = v[0].ring
    if ring is RingId.F2:
        _check_ring(v, RingId.F2, "to_binary")
        return [e.bits for e in v]
    if ring is RingId.F2U:
        return phi_f2u(v)
    return phi_f2u(psi_f4u(v))


def psi_f4u_generator(g):
    """F2+uF2 image of an F4+uF4 generator's row space.

    Each row r is mapped together with w*r so the images span psi(C) as an
    F2+uF2 module; the result has twice the rows and twice the columns.
    """
    from .circulant import matrix
    from .constructions import generator

    if g.ring is not RingId.F4U:
        raise BadRing("psi_f4u_generator expects an F4+uF4 generator")
    w = RingElement(RingId.F4U, 0b0100)
    rows = []
    for r in g.rows():
        rows.append(psi_f4u(r))
        rows.append(psi_f4u([ring_mul(w, e) for e in r]))
    return generator(matrix(RingId.F2U, rows))
