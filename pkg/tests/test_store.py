import json
from fractions import Fraction as Fr

import pytest

from curvecount.store import (CensusCacheRecord, SchemaError, bundled_sigma_abc, cache_dir, dumps,
                              elliptic_records, genus2_records, loads, parse_sigma_abc, read_records,
                              write_records)


def test_round_trip_elliptic(tmp_path):
    recs = elliptic_records(5)
    path = tmp_path / "g1.jsonl"
    write_records(path, recs)
    back = read_records(path)
    assert sorted(back, key=CensusCacheRecord.sort_key) == sorted(recs, key=CensusCacheRecord.sort_key)
    assert sum(r.weight for r in back) == 5


@pytest.mark.parametrize("q", (2, 3))
def test_round_trip_genus2(q):
    recs = genus2_records(q)
    text = dumps(recs)
    assert dumps(loads(text)) == text
    assert sum(r.weight for r in loads(text)) == q ** 3


def test_output_is_deterministic():
    assert dumps(elliptic_records(7)) == dumps(list(reversed(elliptic_records(7))))


def test_key_order_and_fractions():
    r = CensusCacheRecord("g1", (3, 1, (0, 1)), (0, 0, 0, 1, 0), (4,), Fr(1, 2), {"j": 0})
    obj = json.loads(r.to_json())
    assert list(obj) == ["schema", "kind", "field", "model", "counts", "weight", "invariants"]
    assert obj["weight"] == "1/2"


def test_schema_mismatch():
    line = elliptic_records(2)[0].to_json().replace('"schema":1', '"schema":99')
    with pytest.raises(SchemaError) as exc:
        loads(line)
    assert exc.value.found == 99


def test_unknown_kind():
    with pytest.raises(ValueError):
        CensusCacheRecord("g7", (2, 1, (0, 1)), (), (), Fr(1))


def test_cache_dir_env(tmp_path, monkeypatch):
    monkeypatch.setenv("MODULI_CACHE_DIR", str(tmp_path / "c"))
    assert cache_dir() == tmp_path / "c"
    assert cache_dir().is_dir()


def test_sigma_abc_parsing():
    table = parse_sigma_abc("# comment\n2 11 5 2 313\n\n3 11 5 2 -458243\n")
    assert table == {(2, 11, 5, 2): 313, (3, 11, 5, 2): -458243}
    with pytest.raises(ValueError):
        parse_sigma_abc("2 1 5 2 3")
    with pytest.raises(ValueError):
        parse_sigma_abc("2 11 5 2 1\n2 11 5 2 2")
    assert len(bundled_sigma_abc()) == 4
