"""Exact arithmetic and text encodings for F2, F2+uF2 and F4+uF4.

All three alphabets live inside the 16-element ring F2[w,u]/(u^2, w^2+w+1).
An element is stored as a 4-bit integer over the ordered basis {uw, w, u, 1}:
bit 3 = coefficient of u*w, bit 2 = w, bit 1 = u, bit 0 = 1.  With that
layout the stored integer coincides with the hexadecimal table encoding.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import BadEncoding, BadRing, RingMismatch


class RingId(Enum):
    F2 = "f2"
    F2U = "f2u"
    F4U = "f4u"

    @property
    def mask(self) -> int:
        """Admissible coefficient bits for this alphabet."""
        return _MASK[self]

    @property
    def size(self) -> int:
        return {RingId.F2: 2, RingId.F2U: 4, RingId.F4U: 16}[self]

    @property
    def binary_image_len(self) -> int:
        """Length of the binary Gray image of a single element."""
        return {RingId.F2: 1, RingId.F2U: 2, RingId.F4U: 4}[self]

    @classmethod
    def parse(cls, name: str) -> "RingId":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise BadEncoding(f"unknown ring name {name!r}") from None


_MASK = {RingId.F2: 0b0001, RingId.F2U: 0b0011, RingId.F4U: 0b1111}


def _f4_mul(p: int, q: int) -> int:
    # 2-bit F4 elements: bit1 = w coefficient, bit0 = 1 coefficient; w^2 = w+1.
    p1, p0 = p >> 1, p & 1
    q1, q0 = q >> 1, q & 1
    r1 = (p1 & q0) ^ (p0 & q1) ^ (p1 & q1)
    r0 = (p0 & q0) ^ (p1 & q1)
    return (r1 << 1) | r0


def _bits_mul(x: int, y: int) -> int:
    # Split as a + b*u with a, b in F4; (a+bu)(c+du) = ac + (ad+bc)u.
    xa = ((x >> 1) & 2) | (x & 1)
    xb = ((x >> 2) & 2) | ((x >> 1) & 1)
    ya = ((y >> 1) & 2) | (y & 1)
    yb = ((y >> 2) & 2) | ((y >> 1) & 1)
    pa = _f4_mul(xa, ya)
    pb = _f4_mul(xa, yb) ^ _f4_mul(xb, ya)
    return ((pb & 2) << 2) | ((pa & 2) << 1) | ((pb & 1) << 1) | (pa & 1)


_MUL = tuple(tuple(_bits_mul(x, y) for y in range(16)) for x in range(16))


def _lee(bits: int) -> int:
    # Hamming weight of the length-4 image (b1, a1+b1(?), ...) -- see gray.py;
    # here derived directly from the u-adic and w-adic coordinate formulas.
    c1 = bits & 1
    cu = (bits >> 1) & 1
    cw = (bits >> 2) & 1
    cuw = (bits >> 3) & 1
    return (cuw ^ cu) + cu + (cw ^ c1 ^ cuw ^ cu) + (c1 ^ cu)


_LEE = tuple(_lee(b) for b in range(16))

_HEX = "0123456789ABCDEF"
_SHORT = {"0": 0, "1": 1, "u": 2, "3": 3}
_SHORT_INV = {v: k for k, v in _SHORT.items()}


@dataclass(frozen=True)
class RingElement:
    """An element of one of the three alphabets; immutable."""

    ring: RingId
    bits: int

    def __post_init__(self) -> None:
        if self.bits & ~self.ring.mask:
            raise BadRing(
                f"coefficients {self.bits:04b} not admissible in {self.ring.value}"
            )

    def __add__(self, other: "RingElement") -> "RingElement":
        return ring_add(self, other)

    def __mul__(self, other: "RingElement") -> "RingElement":
        return ring_mul(self, other)

    def __str__(self) -> str:
        if self.ring is RingId.F2U:
            return encode_short(self)
        return encode_hex(self)

    def is_zero(self) -> bool:
        return self.bits == 0


def element(ring: RingId, bits: int) -> RingElement:
    return RingElement(ring, bits)


def zero(ring: RingId) -> RingElement:
    return RingElement(ring, 0)


def one(ring: RingId) -> RingElement:
    return RingElement(ring, 1)


def elements(ring: RingId):
    """Iterate every element of the ring."""
    for b in range(16):
        if b & ~ring.mask == 0:
            yield RingElement(ring, b)


def ring_add(a: RingElement, b: RingElement) -> RingElement:
    if a.ring is not b.ring:
        raise RingMismatch(f"{a.ring.value} + {b.ring.value}")
    return RingElement(a.ring, a.bits ^ b.bits)


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    if a.ring is not b.ring:
        raise RingMismatch(f"{a.ring.value} * {b.ring.value}")
    return RingElement(a.ring, _MUL[a.bits][b.bits])


def is_unit(a: RingElement) -> bool:
    """True iff a is invertible, i.e. nonzero modulo the ideal <u>."""
    return a.bits & 0b0101 != 0


def lee_weight(a: RingElement) -> int:
    """Hamming weight of the full binary Gray image of a."""
    if a.ring is RingId.F2:
        return a.bits
    if a.ring is RingId.F2U:
        c1 = a.bits & 1
        cu = (a.bits >> 1) & 1
        return cu + (c1 ^ cu)
    return _LEE[a.bits]


def decode_hex(c: str, ring: RingId = RingId.F4U) -> RingElement:
    """Hex digit -> element over the ordered basis {uw, w, u, 1}."""
    idx = _HEX.find(c.upper()) if len(c) == 1 else -1
    if idx < 0:
        raise BadEncoding(f"not a hex digit: {c!r}")
    if idx & ~ring.mask:
        raise BadEncoding(f"hex digit {c!r} not admissible in {ring.value}")
    return RingElement(ring, idx)


def encode_hex(a: RingElement) -> str:
    return _HEX[a.bits]


def decode_short(c: str, ring: RingId = RingId.F2U) -> RingElement:
    """F2+uF2 shorthand: 0 -> 0, 1 -> 1, u -> u, 3 -> 1+u."""
    if c not in _SHORT:
        raise BadEncoding(f"not an F2+uF2 symbol: {c!r}")
    bits = _SHORT[c]
    if bits & ~ring.mask:
        raise BadEncoding(f"symbol {c!r} not admissible in {ring.value}")
    return RingElement(ring, bits)


def encode_short(a: RingElement) -> str:
    if a.ring is not RingId.F2U:
        raise BadRing("shorthand encoding is defined for F2+uF2 only")
    return _SHORT_INV[a.bits]


def decode_symbol(c: str, ring: RingId) -> RingElement:
    """One table symbol in the ring's canonical alphabet."""
    if ring is RingId.F4U:
        return decode_hex(c, ring)
    if ring is RingId.F2U:
        return decode_short(c, ring)
    if c == "0":
        return RingElement(ring, 0)
    if c == "1":
        return RingElement(ring, 1)
    raise BadEncoding(f"not an F2 symbol: {c!r}")


def encode_symbol(a: RingElement) -> str:
    if a.ring is RingId.F2U:
        return encode_short(a)
    return encode_hex(a)


def parse_vector(text: str, ring: RingId) -> tuple[RingElement, ...]:
    """Parse a vector in either table style.

    Accepts unseparated digit strings ("1110100", "31u011...") and
    comma-separated tuples ("(0,u,3,0)", "1, 3, 0"); parentheses and
    whitespace are ignored.
    """
    body = text.strip().strip("()").strip()
    if "," in body:
        tokens = [t.strip() for t in body.split(",")]
    else:
        tokens = [c for c in body if not c.isspace()]
    if not tokens or any(not t for t in tokens):
        raise BadEncoding(f"cannot parse vector {text!r}")
    return tuple(decode_symbol(t, ring) for t in tokens)


def encode_vector(entries, sep: str = "") -> str:
    return sep.join(encode_symbol(e) for e in entries)
