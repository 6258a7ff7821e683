import json

import pytest

from sdcodes.bincode import from_ring_generator, weight_distribution
from sdcodes.constructions import build_from_rows
from sdcodes.errors import BadConfig
from sdcodes.rings import RingId
from sdcodes.search import (
    SearchConfig,
    SearchStats,
    dedupe_key,
    run_search,
)

F2 = RingId.F2


def czero_cfg(**kw):
    base = dict(
        ring=F2,
        n=7,
        method="czero",
        mode="exhaustive",
        r_a="1000000",
        r_b="0000000",
        min_d=6,
        dedupe="none",
    )
    base.update(kw)
    return SearchConfig(**base)


def test_exhaustive_czero_finds_example():
    stats = SearchStats()
    records = list(run_search(czero_cfg(), stats=stats))
    assert stats.trials == 128
    assert stats.trials == (
        stats.skipped_precondition + stats.skipped_distance + stats.deduped + stats.emitted
    )
    found = [r for r in records if r.rows["r_c"] == "1110100"]
    assert found and found[0].d == 6
    for r in records:
        assert r.d >= 6 and (r.n, r.k) == (28, 14)


def test_dedupe_collapses_equal_distributions():
    stats = SearchStats()
    deduped = list(run_search(czero_cfg(dedupe="by-weight-distribution"), stats=stats))
    assert stats.deduped > 0
    keys = [dedupe_key(r) for r in deduped]
    assert len(keys) == len(set(keys))


def test_trials_zero_empty_stream():
    cfg = SearchConfig(ring=F2, n=10, method="four", mode="random", trials=0, seed=1)
    stats = SearchStats()
    assert list(run_search(cfg, stats=stats)) == []
    assert stats.trials == 0


def test_random_four_circulant_betas_in_range():
    cfg = SearchConfig(
        ring=F2, n=10, method="four", mode="random", trials=3000, seed=11, min_d=8
    )
    stats = SearchStats()
    records = list(run_search(cfg, stats=stats))
    assert stats.emitted > 0
    for r in records:
        assert r.family == "W40" and 0 <= r.beta <= 10


def test_replay_determinism_across_threads():
    cfg = SearchConfig(
        ring=F2, n=10, method="four", mode="random", trials=400, seed=7, min_d=8
    )
    outs = []
    for threads in (1, 2, 3):
        lines = [r.to_json() for r in run_search(cfg, threads=threads)]
        outs.append("\n".join(lines))
    assert outs[0] == outs[1] == outs[2]
    again = "\n".join(r.to_json() for r in run_search(cfg, threads=2))
    assert again == outs[0]


def test_records_reverify():
    cfg = czero_cfg(dedupe="by-weight-distribution")
    for r in run_search(cfg):
        gen = build_from_rows(
            RingId.parse(r.config["ring"]),
            r.config["n"],
            r.config["method"],
            r.rows.get("r_a"),
            r.rows.get("r_b"),
            r.rows.get("r_c"),
            r.config.get("lambda"),
        )
        code = from_ring_generator(gen)
        assert (code.n, code.k) == (r.n, r.k)
        wd = weight_distribution(code)
        assert wd.min_distance() == r.d
        assert tuple(wd.nonzero_pairs()) == r.distribution


def test_record_json_schema():
    (first, *_) = list(run_search(czero_cfg()))
    payload = json.loads(first.to_json())
    assert payload["schema"] == 1
    assert payload["timestamp"] is None
    assert payload["weight_distribution"][0] == [0, 1]


def test_exhaustive_guard():
    cfg = SearchConfig(ring=RingId.F2U, n=8, method="general", mode="exhaustive")
    assert cfg.free_space_bits() == 48
    with pytest.raises(BadConfig):
        cfg.validate()


def test_bad_configs_rejected():
    with pytest.raises(BadConfig):
        SearchConfig(ring=F2, n=7, method="czero", mode="random", trials=5).validate()
    with pytest.raises(BadConfig):
        SearchConfig(ring=F2, n=7, method="four", mode="sideways").validate()
    with pytest.raises(BadConfig):
        SearchConfig.from_dict({"n": 7, "method": "four"})
    with pytest.raises(BadConfig):
        SearchConfig.from_dict({"ring": "f2", "n": 7, "method": "four", "bogus": 1})


def test_from_toml(tmp_path):
    path = tmp_path / "cfg.toml"
    path.write_text(
        'ring = "f2"\nn = 7\nmethod = "czero"\nmode = "exhaustive"\n'
        'r_a = "1000000"\nr_b = "0000000"\nmin_d = 6\ndedupe = "none"\n'
    )
    cfg = SearchConfig.from_toml(str(path))
    assert cfg.n == 7 and cfg.method == "czero" and cfg.mode == "exhaustive"
