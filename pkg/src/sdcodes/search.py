"""Seeded randomized / exhaustive search over construction inputs.

Candidate rows for trial t are derived from a keyed blake2b digest of
(seed, t), so any trial can be replayed or scheduled independently; the
emitted record stream is identical for any worker count because records
are re-serialized in trial order and dedupe runs on that ordered stream.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .bincode import (
    from_ring_generator,
    has_nonzero_weight_below,
    weight_distribution,
)
from .circulant import symmetric_free_count
from .constructions import METHODS, build_from_rows
from .enumerators import EnumeratorParams, classify_params, extract_params
from .errors import BadConfig, CodesError, UnknownEnumerator
from .rings import RingElement, RingId, encode_vector

EXHAUSTIVE_GUARD_BITS = 28
SCHEMA_VERSION = 1

_ROW_SLOTS = {
    "four": ("r_a", "r_b"),
    "modified": ("r_a", "r_b"),
    "general": ("r_a", "r_b", "r_c"),
    "symmetric": ("r_a", "r_b", "r_c"),
    "czero": ("r_a", "r_b", "r_c"),
}


@dataclass(frozen=True)
class SearchConfig:
    ring: RingId
    n: int
    method: str
    mode: str = "random"
    trials: int = 0
    seed: int = 0
    lam: str | None = None
    r_a: str | None = None
    r_b: str | None = None
    r_c: str | None = None
    min_d: int = 0
    dedupe: str = "by-weight-distribution"
    budget: int = 34

    @classmethod
    def from_dict(cls, raw: dict) -> "SearchConfig":
        data = dict(raw)
        try:
            ring = RingId.parse(data.pop("ring"))
        except KeyError:
            raise BadConfig("config needs a 'ring' field") from None
        try:
            cfg = cls(ring=ring, **data)
        except TypeError as exc:
            raise BadConfig(f"bad config field: {exc}") from None
        cfg.validate()
        return cfg

    @classmethod
    def from_toml(cls, path: str) -> "SearchConfig":
        try:
            import tomllib  # type: ignore[import-not-found]
        except ModuleNotFoundError:
            import tomli as tomllib
        with open(path, "rb") as fh:
            return cls.from_dict(tomllib.load(fh))

    def validate(self) -> None:
        if self.method not in METHODS:
            raise BadConfig(f"unknown method {self.method!r}")
        if self.mode not in ("random", "exhaustive"):
            raise BadConfig(f"unknown mode {self.mode!r}")
        if self.dedupe not in ("by-weight-distribution", "none"):
            raise BadConfig(f"unknown dedupe {self.dedupe!r}")
        if self.n < 1 or self.trials < 0 or self.min_d < 0:
            raise BadConfig("n, trials, min_d must be non-negative (n >= 1)")
        if self.method == "modified" and self.ring is RingId.F2 and self.lam not in (None, "1"):
            raise BadConfig("lambda over F2 can only be 1")
        if self.method == "czero" and (self.r_a is None or self.r_b is None):
            raise BadConfig("czero search needs fixed r_a and r_b")
        if self.mode == "exhaustive" and self.free_space_bits() > EXHAUSTIVE_GUARD_BITS:
            raise BadConfig(
                f"exhaustive space is 2^{self.free_space_bits()} > 2^{EXHAUSTIVE_GUARD_BITS}"
            )

    def free_slots(self) -> tuple[str, ...]:
        fixed = {"r_a": self.r_a, "r_b": self.r_b, "r_c": self.r_c}
        return tuple(s for s in _ROW_SLOTS[self.method] if fixed[s] is None)

    def slot_symbols(self, slot: str) -> int:
        if slot == "r_a" and self.method == "symmetric":
            return symmetric_free_count(self.n)
        return self.n

    def bits_per_symbol(self) -> int:
        return {RingId.F2: 1, RingId.F2U: 2, RingId.F4U: 4}[self.ring]

    def free_space_bits(self) -> int:
        return self.bits_per_symbol() * sum(self.slot_symbols(s) for s in self.free_slots())

    def total_trials(self) -> int:
        if self.mode == "exhaustive":
            return 1 << self.free_space_bits()
        return self.trials


@dataclass
class SearchStats:
    trials: int = 0
    skipped_precondition: int = 0
    skipped_distance: int = 0
    deduped: int = 0
    emitted: int = 0

    def as_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass(frozen=True)
class ResultRecord:
    config: dict
    trial: int
    seed: int
    rows: dict
    n: int
    k: int
    d: int
    family: str | None
    beta: int | None
    gamma: int | None
    novelty: str | None
    distribution: tuple[tuple[int, int], ...]
    timestamp: str | None = None

    def to_json(self) -> str:
        payload = {
            "schema": SCHEMA_VERSION,
            "config": self.config,
            "trial": self.trial,
            "seed": self.seed,
            "rows": self.rows,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "family": self.family,
            "beta": self.beta,
            "gamma": self.gamma,
            "novelty": self.novelty,
            "weight_distribution": [list(p) for p in self.distribution],
            "timestamp": self.timestamp,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def dedupe_key(record: ResultRecord) -> tuple:
    """Discovery-class key: same (n, k, d, distribution), not code equivalence."""
    return (record.n, record.k, record.d, record.distribution)


def _derive_symbols(seed: int, trial: int, count: int, bits: int) -> list[int]:
    """Counter-based stream: symbol i of trial t depends only on (seed, t, i)."""
    out: list[int] = []
    block = 0
    while len(out) < count:
        h = hashlib.blake2b(
            trial.to_bytes(8, "little") + block.to_bytes(4, "little"),
            key=seed.to_bytes(8, "little", signed=False),
            digest_size=64,
        ).digest()
        out.extend(b & ((1 << bits) - 1) for b in h)
        block += 1
    return out[:count]


def _index_symbols(index: int, count: int, bits: int) -> list[int]:
    mask = (1 << bits) - 1
    return [(index >> (bits * i)) & mask for i in range(count)]


def _candidate_rows(cfg: SearchConfig, trial: int) -> dict[str, str]:
    rows = {"r_a": cfg.r_a, "r_b": cfg.r_b, "r_c": cfg.r_c}
    slots = cfg.free_slots()
    counts = [cfg.slot_symbols(s) for s in slots]
    bits = cfg.bits_per_symbol()
    if cfg.mode == "exhaustive":
        symbols = _index_symbols(trial, sum(counts), bits)
    else:
        symbols = _derive_symbols(cfg.seed, trial, sum(counts), bits)
    pos = 0
    for slot, cnt in zip(slots, counts):
        elems = [RingElement(cfg.ring, b) for b in symbols[pos : pos + cnt]]
        rows[slot] = encode_vector(elems)
        pos += cnt
    return rows


def _evaluate(cfg: SearchConfig, trial: int):
    """-> ('skip-pre' | 'skip-dist' | record-payload tuple)."""
    rows = _candidate_rows(cfg, trial)
    try:
        gen = build_from_rows(
            cfg.ring, cfg.n, cfg.method, rows["r_a"], rows["r_b"], rows["r_c"], cfg.lam
        )
    except CodesError:
        return "skip-pre", rows, None, None, None
    code = from_ring_generator(gen)
    if cfg.min_d and has_nonzero_weight_below(code, cfg.min_d):
        return "skip-dist", rows, None, None, None
    dist = weight_distribution(code, budget=cfg.budget)
    d = dist.min_distance()
    if cfg.min_d and d < cfg.min_d:
        return "skip-dist", rows, None, None, None
    try:
        params: EnumeratorParams | None = extract_params(code.n, dist, d)
    except UnknownEnumerator:
        params = None
    return "hit", rows, code, dist, params


def _record_from(cfg: SearchConfig, trial: int, rows, code, dist, params) -> ResultRecord:
    cfg_echo = {
        "ring": cfg.ring.value,
        "n": cfg.n,
        "method": cfg.method,
        "mode": cfg.mode,
        "lambda": cfg.lam,
        "min_d": cfg.min_d,
        "dedupe": cfg.dedupe,
        "budget": cfg.budget,
    }
    return ResultRecord(
        config=cfg_echo,
        trial=trial,
        seed=cfg.seed,
        rows={k: v for k, v in rows.items() if v is not None},
        n=code.n,
        k=code.k,
        d=dist.min_distance(),
        family=params.family if params else None,
        beta=params.beta if params else None,
        gamma=params.gamma if params else None,
        novelty=classify_params(params) if params else None,
        distribution=tuple(dist.nonzero_pairs()),
    )


def run_search(
    cfg: SearchConfig,
    stats: SearchStats | None = None,
    threads: int = 1,
    window: int = 64,
) -> Iterator[ResultRecord]:
    """Yield ResultRecords in trial order; same (config, seed) => same stream."""
    cfg.validate()
    stats = stats if stats is not None else SearchStats()
    total = cfg.total_trials()
    stats.trials = total
    seen: set = set()

    def emit(trial, outcome):
        kind, rows, code, dist, params = outcome
        if kind == "skip-pre":
            stats.skipped_precondition += 1
            return None
        if kind == "skip-dist":
            stats.skipped_distance += 1
            return None
        record = _record_from(cfg, trial, rows, code, dist, params)
        if cfg.dedupe == "by-weight-distribution":
            key = dedupe_key(record)
            if key in seen:
                stats.deduped += 1
                return None
            seen.add(key)
        stats.emitted += 1
        return record

    if threads <= 1:
        for trial in range(total):
            record = emit(trial, _evaluate(cfg, trial))
            if record is not None:
                yield record
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for start in range(0, total, window):
            trials = range(start, min(start + window, total))
            outcomes = list(pool.map(lambda t: _evaluate(cfg, t), trials))
            for trial, outcome in zip(trials, outcomes):
                record = emit(trial, outcome)
                if record is not None:
                    yield record
