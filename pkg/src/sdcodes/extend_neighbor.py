"""Length n -> n+2 ring extension and the binary neighbor construction.

The extension prepends two coordinates: the new first row is [1, 0 | X] and
every old row r becomes [y, c*y | r] with y = <r, X>.  A neighbor replaces a
self-dual code C by <{c in C : <x, c> = 0}, x> for an even-weight seed
x outside C; the two codes meet in codimension 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bincode import PackedBinaryCode, bits_to_int, is_self_dual
from .circulant import matrix
from .constructions import RingGenerator, generator, is_self_dual_generator
from .errors import (
    BadExtensionVector,
    BadShape,
    BadUnit,
    NotANeighborSeed,
    NotSelfDualCondition,
    NotSelfOrthogonal,
)
from .rings import RingElement, is_unit, one, ring_add, ring_mul, zero


@dataclass(frozen=True)
class ExtensionSpec:
    c: RingElement
    x: tuple[RingElement, ...]


def inner(u: Sequence[RingElement], v: Sequence[RingElement]) -> RingElement:
    if len(u) != len(v):
        raise BadShape("inner product of unequal lengths")
    acc = zero(u[0].ring)
    for a, b in zip(u, v):
        acc = ring_add(acc, ring_mul(a, b))
    return acc


def extend(g: RingGenerator, spec: ExtensionSpec) -> RingGenerator:
    """Extend a self-dual ring generator by two coordinates."""
    c, x = spec.c, spec.x
    if c.ring is not g.ring or any(e.ring is not g.ring for e in x):
        raise BadShape("extension data from a different ring")
    if len(x) != g.m:
        raise BadShape(f"X has length {len(x)}, generator has {g.m} columns")
    if not (is_unit(c) and ring_mul(c, c) == one(g.ring)):
        raise BadUnit(f"c = {c} is not a unit with c^2 = 1")
    if inner(x, x) != one(g.ring):
        raise BadExtensionVector("<X, X> != 1")
    if not is_self_dual_generator(g):
        raise NotSelfDualCondition("extension base must satisfy G G^T = 0")
    o, z = one(g.ring), zero(g.ring)
    rows = [(o, z) + tuple(x)]
    for r in g.rows():
        y = inner(r, x)
        rows.append((y, ring_mul(c, y)) + tuple(r))
    return generator(matrix(g.ring, rows))


def neighbor(code: PackedBinaryCode, x: int | Sequence[int]) -> PackedBinaryCode:
    """Self-dual neighbor of a binary self-dual code through seed x."""
    if not isinstance(x, int):
        if len(x) != code.n:
            raise BadShape(f"seed length {len(x)} != {code.n}")
        x = bits_to_int(x)
    elif x >> code.n:
        raise BadShape(f"seed does not fit in {code.n} columns")
    if not is_self_dual(code):
        raise NotSelfDualCondition("neighbor base must be a self-dual [2k, k] code")
    if x.bit_count() & 1:
        raise NotSelfOrthogonal("seed must have even weight")
    odd = [i for i, r in enumerate(code.rows) if (r & x).bit_count() & 1]
    if not odd:
        # orthogonal to all of C = C-perp means x already lies in C
        raise NotANeighborSeed("seed lies in the code")
    pivot = code.rows[odd[0]]
    rows = [r ^ pivot if i in odd[1:] else r for i, r in enumerate(code.rows) if i != odd[0]]
    rows.append(x)
    return PackedBinaryCode(code.n, code.k, tuple(rows))


def suffix_seed(n: int, suffix: Sequence[int]) -> int:
    """Seed with the first n/2 coordinates zero and the given tail bits."""
    if len(suffix) != n - n // 2:
        raise BadShape(f"suffix needs {n - n // 2} bits for length {n}")
    return bits_to_int([0] * (n // 2) + list(suffix))
