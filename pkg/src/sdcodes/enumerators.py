"""Weight-enumerator families at lengths 40, 64, 68 and parameter extraction.

Extremal Type I distributions at these lengths are pinned down by one or two
integer parameters: A_8 = 125 + 16b at length 40; A_12 = 1312 + 16b at
length 64 with A_14 = 22016 - 64b (family 1) or 23040 - 64b (family 2);
A_12 = 442 + 4b at length 68 with A_14 = 10864 - 8b (family 1) or
14960 - 8b - 256g (family 2).  All divisions must be exact.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from importlib import resources

from .bincode import WeightDistribution
from .errors import UnknownEnumerator

EXTREMAL_DISTANCE = {40: 8, 64: 12, 68: 12}

W40 = "W40"
W64_1 = "W64_1"
W64_2 = "W64_2"
W68_1 = "W68_1"
W68_2 = "W68_2"


@dataclass(frozen=True)
class EnumeratorParams:
    length: int
    family: str
    beta: int
    gamma: int | None = None

    def key(self) -> tuple[int, str, int, int | None]:
        return (self.length, self.family, self.beta, self.gamma)

    def __str__(self) -> str:
        if self.gamma is None:
            return f"{self.family} beta={self.beta}"
        return f"{self.family} beta={self.beta} gamma={self.gamma}"


def _exact_div(num: int, den: int, what: str) -> int:
    if num % den:
        raise UnknownEnumerator(f"{what} = {num} is not divisible by {den}")
    return num // den


def extract_params(n: int, dist: WeightDistribution, d: int) -> EnumeratorParams:
    """Map a measured distribution to (family, beta[, gamma])."""
    if n not in EXTREMAL_DISTANCE:
        raise UnknownEnumerator(f"no enumerator family at length {n}")
    if d != EXTREMAL_DISTANCE[n]:
        raise UnknownEnumerator(
            f"length-{n} families need d = {EXTREMAL_DISTANCE[n]}, measured d = {d}"
        )
    if n == 40:
        beta = _exact_div(dist[8] - 125, 16, "A_8 - 125")
        if not 0 <= beta <= 10:
            raise UnknownEnumerator(f"beta = {beta} outside [0, 10]")
        return EnumeratorParams(40, W40, beta)
    if n == 64:
        beta = _exact_div(dist[12] - 1312, 16, "A_12 - 1312")
        m1 = dist[14] == 22016 - 64 * beta
        m2 = dist[14] == 23040 - 64 * beta
        if m1 and m2:
            raise UnknownEnumerator("A_14 matches both length-64 families")
        if m1:
            return EnumeratorParams(64, W64_1, beta)
        if m2:
            return EnumeratorParams(64, W64_2, beta)
        raise UnknownEnumerator(f"A_14 = {dist[14]} matches neither length-64 family")
    beta = _exact_div(dist[12] - 442, 4, "A_12 - 442")
    if dist[14] == 10864 - 8 * beta:
        if not 104 <= beta <= 1358:
            warnings.warn(f"W68_1 beta = {beta} outside the stated range [104, 1358]")
        return EnumeratorParams(68, W68_1, beta)
    gamma = _exact_div(14960 - 8 * beta - dist[14], 256, "14960 - 8b - A_14")
    if not 0 <= gamma <= 9:
        raise UnknownEnumerator(f"gamma = {gamma} outside [0, 9]")
    return EnumeratorParams(68, W68_2, beta, gamma)


def synthesize_counts(params: EnumeratorParams) -> dict[int, int]:
    """The leading counts implied by the family formulas (round-trip check)."""
    b = params.beta
    if params.family == W40:
        return {8: 125 + 16 * b, 10: 1664 - 64 * b}
    if params.family == W64_1:
        return {12: 1312 + 16 * b, 14: 22016 - 64 * b}
    if params.family == W64_2:
        return {12: 1312 + 16 * b, 14: 23040 - 64 * b}
    if params.family == W68_1:
        return {12: 442 + 4 * b, 14: 10864 - 8 * b}
    g = params.gamma or 0
    return {12: 442 + 4 * b, 14: 14960 - 8 * b - 256 * g}


def _load_registry() -> dict:
    text = resources.files("sdcodes").joinpath("registry.json").read_text("utf-8")
    return json.loads(text)


def registry_entries() -> list[dict]:
    return _load_registry()["entries"]


def registry_ranges() -> list[dict]:
    return _load_registry()["unresolved_ranges"]


def known_params_registry() -> set[tuple[int, str, int, int | None]]:
    """All parameter sets the registry lists explicitly (known or new-in-paper)."""
    return {
        (e["length"], e["family"], e["beta"], e.get("gamma"))
        for e in registry_entries()
    }


def classify_params(params: EnumeratorParams) -> str:
    """One of 'known', 'new-in-paper', 'unresolved-range', 'novel'."""
    for e in registry_entries():
        if (e["length"], e["family"], e["beta"], e.get("gamma")) == params.key():
            return e["status"]
    for r in registry_ranges():
        if (
            r["length"] == params.length
            and r["family"] == params.family
            and r.get("gamma") == params.gamma
            and r["beta_min"] <= params.beta <= r["beta_max"]
        ):
            return "unresolved-range"
    return "novel"
