import json

from irrec.memo import CountTable, DiskCache

HEADER = DiskCache.HEADER


def test_count_table_symmetric_key():
    t = CountTable("t")
    t.put(1, (1, 3, 2), 5)
    assert t.get(1, (3, 2, 1)) == 5
    u = CountTable("u", symmetric=False)
    u.put(0, (1, 2), 7)
    assert u.get(0, (2, 1)) is None


def test_disk_cache_roundtrip(tmp_path):
    c = DiskCache(tmp_path)
    assert c.get(["a", 1]) is None
    c.put(["a", 1], {"x": 2})
    assert c.get(["a", 1]) == {"x": 2}
    files = list(tmp_path.rglob("*.json"))
    assert len(files) == 1
    text = files[0].read_text()
    assert text.startswith(HEADER)


def test_disk_cache_rejects_bad_header(tmp_path):
    c = DiskCache(tmp_path)
    c.put("k", 1)
    f = next(tmp_path.rglob("*.json"))
    f.write_text("OTHER\n" + json.dumps({"key": "k", "value": 1}))
    assert c.get("k") is None


def test_disk_cache_disabled_without_root(monkeypatch):
    monkeypatch.delenv("IRREC_CACHE_DIR", raising=False)
    c = DiskCache()
    c.put("k", 1)
    assert c.get("k") is None


def test_oracle_uses_cache(tmp_path, monkeypatch):
    from irrec.oracle import dessins_brute
    monkeypatch.setenv("IRREC_CACHE_DIR", str(tmp_path))
    first = dessins_brute((2, 2))
    assert list(tmp_path.rglob("*.json"))
    assert dessins_brute((2, 2)) == first
