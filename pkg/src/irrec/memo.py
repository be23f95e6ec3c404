"""Memo tables keyed by genus and a partition."""
import hashlib
import json
import os


class CountTable:
    """Map ``(g, mu)`` to a value, with ``mu`` stored sorted in decreasing order.

    Writes are idempotent: a key is only ever assigned its final value, so
    under the GIL concurrent readers see either nothing or that value.
    Duplicate concurrent computations of one key produce identical values.
    """

    __slots__ = ("name", "_data", "symmetric")

    def __init__(self, name, symmetric=True):
        self.name = name
        self.symmetric = symmetric
        self._data = {}

    def key(self, g, mu):
        mu = tuple(mu)
        return (g, tuple(sorted(mu, reverse=True)) if self.symmetric else mu)

    def get(self, g, mu):
        return self._data.get(self.key(g, mu))

    def put(self, g, mu, value):
        self._data.setdefault(self.key(g, mu), value)
        return value

    def __len__(self):
        return len(self._data)

    def clear(self):
        self._data.clear()

    def items(self):
        return self._data.items()


class DiskCache:
    r"""
    Optional content-addressed cache in ``$IRREC_CACHE_DIR``.

    Each entry is a file named by the SHA-256 of the canonical JSON of its
    key; the file holds the header ``IRREC1\n`` followed by canonical JSON of
    ``{"key": ..., "value": ...}``.  Entries with another header, or whose
    stored key differs, are ignored.  Without the environment variable every
    lookup misses and nothing is written.
    """

    HEADER = "IRREC1\n"

    def __init__(self, root=None):
        self.root = root if root is not None else os.environ.get("IRREC_CACHE_DIR")

    @staticmethod
    def canonical(obj):
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))

    def _path(self, key):
        digest = hashlib.sha256(self.canonical(key).encode()).hexdigest()
        return os.path.join(self.root, digest[:2], digest + ".json")

    def get(self, key):
        if not self.root:
            return None
        try:
            with open(self._path(key), encoding="utf-8") as fh:
                text = fh.read()
        except OSError:
            return None
        if not text.startswith(self.HEADER):
            return None
        try:
            record = json.loads(text[len(self.HEADER):])
        except ValueError:
            return None
        if self.canonical(record.get("key")) != self.canonical(key):
            return None
        return record.get("value")

    def put(self, key, value):
        if not self.root:
            return value
        path = self._path(key)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        tmp = "%s.%d.tmp" % (path, os.getpid())
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(self.HEADER + self.canonical({"key": key, "value": value}))
        os.replace(tmp, path)
        return value
