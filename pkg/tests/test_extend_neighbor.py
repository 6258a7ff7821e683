import pytest

from sdcodes.bincode import (
    contains,
    from_ring_generator,
    is_self_dual,
    packed_code,
    weight_distribution,
)
from sdcodes.circulant import identity, zero_matrix
from sdcodes.constructions import build_from_rows, four_circulant, is_self_dual_generator
from sdcodes.errors import (
    BadExtensionVector,
    BadShape,
    BadUnit,
    NotANeighborSeed,
    NotSelfOrthogonal,
)
from sdcodes.extend_neighbor import ExtensionSpec, extend, inner, neighbor, suffix_seed
from sdcodes.rings import RingElement, RingId, elements, one, zero

F2, F2U, F4U = RingId.F2, RingId.F2U, RingId.F4U
RINGS = [F2, F2U, F4U]


def square_one_units(ring):
    return [
        c
        for c in elements(ring)
        if c.bits & 0b0101 and (c * c) == one(ring)
    ]


def trivial_base(ring, n):
    return four_circulant(identity(ring, n), zero_matrix(ring, n))


def test_trivial_extension_self_dual():
    for ring in RINGS:
        g = trivial_base(ring, 2)
        x = (one(ring),) + tuple(zero(ring) for _ in range(g.m - 1))
        ext = extend(g, ExtensionSpec(one(ring), x))
        assert (ext.k, ext.m) == (g.k + 1, g.m + 2)
        assert is_self_dual_generator(ext)


def test_square_one_unit_sets():
    assert [c.bits for c in square_one_units(F2)] == [0b01]
    assert sorted(c.bits for c in square_one_units(F2U)) == [0b01, 0b11]
    assert sorted(c.bits for c in square_one_units(F4U)) == [0b0001, 0b0011, 0b1001, 0b1011]


@pytest.mark.parametrize("ring", RINGS)
def test_extension_fuzz(rng, ring):
    pool = list(elements(ring))
    units = square_one_units(ring)
    done = 0
    while done < 170:
        n = rng.choice([2, 3, 4, 6])
        g = trivial_base(ring, n)
        x = tuple(rng.choice(pool) for _ in range(g.m))
        if inner(x, x) != one(ring):
            continue
        c = rng.choice(units)
        ext = extend(g, ExtensionSpec(c, x))
        assert is_self_dual_generator(ext)
        done += 1


def test_extend_over_f2_matches_direct_gram_check(rng):
    g = build_from_rows(F2, 7, "czero", "1000000", "0000000", "1110100")
    pool = list(elements(F2))
    for _ in range(40):
        x = tuple(rng.choice(pool) for _ in range(g.m))
        if inner(x, x) != one(F2):
            continue
        ext = extend(g, ExtensionSpec(one(F2), x))
        assert is_self_dual_generator(ext)
        b = from_ring_generator(ext)
        assert is_self_dual(b) and b.n == 30


def test_extension_rejects_bad_inputs():
    g = trivial_base(F2U, 2)
    good_x = (one(F2U),) + tuple(zero(F2U) for _ in range(g.m - 1))
    u = RingElement(F2U, 0b10)
    with pytest.raises(BadUnit):
        extend(g, ExtensionSpec(u, good_x))
    bad_x = tuple(zero(F2U) for _ in range(g.m))
    with pytest.raises(BadExtensionVector):
        extend(g, ExtensionSpec(one(F2U), bad_x))
    with pytest.raises(BadShape):
        extend(g, ExtensionSpec(one(F2U), good_x[:-1]))


def brute_words(code):
    words = set()
    for m in range(1 << code.k):
        w = 0
        for j in range(code.k):
            if (m >> j) & 1:
                w ^= code.rows[j]
        words.add(w)
    return words


def test_neighbor_small_example():
    # C = {0000, 1100, 0011, 1111}, x = 0110: brute-force oracle gives
    # <x>-perp within C = {0000, 1111}, so D = {0000, 0110, 1001, 1111}
    code = packed_code(4, [0b0011, 0b1100])
    x = 0b0110
    ortho = {w for w in brute_words(code) if (w & x).bit_count() % 2 == 0}
    assert ortho == {0b0000, 0b1111}
    d = neighbor(code, x)
    assert brute_words(d) == {0b0000, 0b0110, 0b1001, 0b1111}
    assert is_self_dual(d)


def random_self_dual_code(rng, k):
    n = 2 * k
    code = packed_code(n, [(1 << i) | (1 << (k + i)) for i in range(k)])
    for _ in range(4):
        for _ in range(200):
            x = rng.getrandbits(n)
            if x.bit_count() % 2 == 0 and not contains(code, x):
                code = neighbor(code, x)
                break
    return code


def intersection_dim(a, b):
    words = brute_words(a) & brute_words(b)
    assert len(words) & (len(words) - 1) == 0
    return len(words).bit_length() - 1


def test_neighbor_properties(rng):
    done = 0
    while done < 100:
        k = rng.choice([2, 3, 4, 5, 6, 7, 8])
        code = random_self_dual_code(rng, k)
        x = rng.getrandbits(code.n)
        if x.bit_count() % 2 or contains(code, x):
            continue
        d = neighbor(code, x)
        assert is_self_dual(d)
        assert contains(d, x)
        assert d.rows != code.rows
        assert intersection_dim(d, code) == k - 1
        done += 1


def test_neighbor_chain(rng):
    code = random_self_dual_code(rng, 5)
    x = next(
        x
        for x in iter(lambda: rng.getrandbits(code.n), None)
        if x.bit_count() % 2 == 0 and not contains(code, x)
    )
    mid = neighbor(code, x)
    xp = next(r for r in code.rows if not contains(mid, r))
    far = neighbor(mid, xp)
    assert intersection_dim(far, mid) == mid.k - 1


def test_neighbor_rejects_bad_seeds():
    code = packed_code(4, [0b0011, 0b1100])
    with pytest.raises(NotANeighborSeed):
        neighbor(code, 0b1111)
    with pytest.raises(NotSelfOrthogonal):
        neighbor(code, 0b0111)
    with pytest.raises(BadShape):
        neighbor(code, [0, 1, 1])


def test_suffix_seed():
    s = suffix_seed(8, [1, 0, 1, 0])
    assert s == (1 << 4) | (1 << 6)
    with pytest.raises(BadShape):
        suffix_seed(8, [1, 0])


def test_neighbor_weight_distribution_changes(rng):
    # a neighbor is a different code; its distribution may differ
    code = random_self_dual_code(rng, 6)
    wd = weight_distribution(code)
    assert wd.total() == 1 << 6
