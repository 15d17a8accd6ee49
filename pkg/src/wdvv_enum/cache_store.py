"""Persistent storage of computed invariants.

The cache is a plain text file: a header line ``wdvv-enum-cache v1`` followed
by one record per line, ``;``-separated, sorted for diff stability.  Open
records carry the degree, the alpha and beta multi-indices, and the boundary
point count; closed records carry the degree and the multiplicity vector.
Values are exact rationals serialized as ``numerator/denominator``::

    wdvv-enum-cache v1
    closed;d=2;m=1,1,1,1,1;1/1
    open;d=7;a=2,2,2,2,2,2,2,2,2,2;b=;k=0;-6672/1

Saving is atomic (write to a temporary file, then rename), so concurrent
writers can at worst lose each other's additions, never tear the file.
"""

from __future__ import annotations

import os
import tempfile
from typing import Dict, Tuple

from .core_index import RAT, CanonicalKey

HEADER = "wdvv-enum-cache v1"


class CacheError(Exception):
    """Raised on a malformed or version-incompatible cache file."""


class MemoStore:
    """In-memory map from canonical keys to exact values.

    Shared by the open and closed engines.  Insertion is first-write-wins;
    since all values are deterministic, duplicate concurrent computation of a
    key is benign.
    """

    def __init__(self) -> None:
        self.open: Dict[CanonicalKey, object] = {}
        self.closed: Dict[Tuple[int, tuple], object] = {}

    def put_open(self, key: CanonicalKey, value) -> object:
        return self.open.setdefault(key, value)

    def put_closed(self, key: Tuple[int, tuple], value) -> object:
        return self.closed.setdefault(key, value)

    def __len__(self) -> int:
        return len(self.open) + len(self.closed)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MemoStore):
            return NotImplemented
        return self.open == other.open and self.closed == other.closed


def _format_entries(entries: tuple) -> str:
    return ",".join(str(x) for x in entries)


def _parse_entries(text: str) -> tuple:
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def _format_value(value) -> str:
    v = RAT(value)
    return f"{v.numerator}/{v.denominator}"


def _parse_value(text: str):
    num, _, den = text.partition("/")
    return RAT(int(num), int(den))


def _format_record(kind: str, key, value) -> str:
    if kind == "open":
        d, alpha, beta, k = key
        return (
            f"open;d={d};a={_format_entries(alpha)};"
            f"b={_format_entries(beta)};k={k};{_format_value(value)}"
        )
    d, m = key
    return f"closed;d={d};m={_format_entries(m)};{_format_value(value)}"


def _parse_field(field: str, name: str, lineno: int) -> str:
    prefix = name + "="
    if not field.startswith(prefix):
        raise CacheError(f"line {lineno}: expected field '{name}', got {field!r}")
    return field[len(prefix):]


def _parse_record(line: str, lineno: int, store: MemoStore) -> None:
    parts = line.split(";")
    try:
        if parts[0] == "open":
            if len(parts) != 6:
                raise ValueError("wrong field count")
            d = int(_parse_field(parts[1], "d", lineno))
            alpha = _parse_entries(_parse_field(parts[2], "a", lineno))
            beta = _parse_entries(_parse_field(parts[3], "b", lineno))
            k = int(_parse_field(parts[4], "k", lineno))
            store.put_open(CanonicalKey(d, alpha, beta, k), _parse_value(parts[5]))
        elif parts[0] == "closed":
            if len(parts) != 4:
                raise ValueError("wrong field count")
            d = int(_parse_field(parts[1], "d", lineno))
            m = _parse_entries(_parse_field(parts[2], "m", lineno))
            store.put_closed((d, m), _parse_value(parts[3]))
        else:
            raise ValueError(f"unknown record kind {parts[0]!r}")
    except CacheError:
        raise
    except (ValueError, IndexError, ZeroDivisionError) as exc:
        raise CacheError(f"line {lineno}: malformed record {line!r}: {exc}") from exc


def load_store(path) -> MemoStore:
    """Load a cache file; an absent file yields an empty store."""
    store = MemoStore()
    try:
        with open(path, "r", encoding="ascii") as fh:
            lines = fh.read().splitlines()
    except FileNotFoundError:
        return store
    if not lines:
        return store
    if lines[0] != HEADER:
        raise CacheError(
            f"line 1: unsupported cache header {lines[0]!r} (expected {HEADER!r})"
        )
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        _parse_record(line, lineno, store)
    return store


def save_store(store: MemoStore, path) -> None:
    """Atomically write the store to path, records sorted for diff stability."""
    lines = [HEADER]
    records = [
        _format_record("closed", key, value) for key, value in store.closed.items()
    ] + [_format_record("open", key, value) for key, value in store.open.items()]
    lines.extend(sorted(records))
    body = "\n".join(lines) + "\n"
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".cache-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="ascii") as fh:
            fh.write(body)
        os.replace(tmp_path, path)
    except BaseException:
        try:
            os.unlink(tmp_path)
        except OSError:
            pass
        raise
