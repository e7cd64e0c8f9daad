import json

import pytest

from packsyz.cache import cache_key, load_character, store_character
from packsyz.config import DEFAULT, Config
from packsyz.equivariant import clear_memo, homology_character
from packsyz.verify import SUITES, run_suite


@pytest.mark.parametrize("kwargs", [
    {"max_simplices": 0}, {"max_oracle_entries": -1}, {"threads": 0}, {"output_format": "xml"},
])
def test_invalid_config(kwargs):
    with pytest.raises(ValueError):
        Config(**kwargs)


def test_from_mapping_rejects_unknown_keys():
    assert Config.from_mapping({"threads": 2}).threads == 2
    with pytest.raises(ValueError, match="colour"):
        Config.from_mapping({"colour": 1})


def test_load_roundtrip(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps(Config(max_simplices=7, output_format="json").to_dict()))
    cfg = Config.load(path)
    assert cfg.max_simplices == 7 and cfg.output_format == "json"


def test_env_overrides_file_value(monkeypatch):
    cfg = Config(cache_dir="/from/file")
    assert cfg.with_env() == cfg
    monkeypatch.setenv("PACKSYZ_CACHE_DIR", "/from/env")
    assert cfg.with_env().cache_dir == "/from/env"
    assert DEFAULT.cache_path() is None


def test_cache_key_depends_on_every_field():
    keys = {cache_key((3, 3), (1, 1), 1), cache_key((3, 3), (1, 1), 0),
            cache_key((3, 2), (1, 1), 1), cache_key((3, 3), (1, 2), 1)}
    assert len(keys) == 4


def test_cache_roundtrip(tmp_path):
    chi = homology_character((3, 3), (1, 1), 1)
    assert load_character(tmp_path, (3, 3), (1, 1), 1) is None
    store_character(tmp_path, (3, 3), (1, 1), 1, chi)
    assert load_character(tmp_path, (3, 3), (1, 1), 1) == chi
    assert not list(tmp_path.glob("*.tmp"))


@pytest.mark.parametrize("payload", ["{not json", json.dumps({"version": "old"}), json.dumps([1, 2])])
def test_bad_cache_entry_is_a_miss(tmp_path, payload):
    (tmp_path / f"{cache_key((2, 2), (1, 1), 0)}.json").write_text(payload)
    assert load_character(tmp_path, (2, 2), (1, 1), 0) is None
    clear_memo()
    cfg = Config(cache_dir=str(tmp_path))
    assert homology_character((2, 2), (1, 1), 0, cfg) == homology_character((2, 2), (1, 1), 0)
    assert load_character(tmp_path, (2, 2), (1, 1), 0) is not None


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nonsense")


def test_all_runs_every_suite(monkeypatch):
    from packsyz.verify import Check
    for name in list(SUITES):
        monkeypatch.setitem(SUITES, name, lambda config, name=name: [Check(name, True)])
    assert [c.name for c in run_suite("all")] == list(SUITES)
