"""Cache file format: round trips, atomicity, error reporting."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wdvv_enum.cache_store import (
    HEADER,
    CacheError,
    MemoStore,
    load_store,
    save_store,
)
from wdvv_enum.core_index import RAT, CanonicalKey


def test_absent_file_yields_empty_store(tmp_path):
    store = load_store(tmp_path / "missing.txt")
    assert len(store) == 0


def test_empty_file_yields_empty_store(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("")
    assert len(load_store(path)) == 0


def test_published_record_round_trip(tmp_path):
    path = tmp_path / "cache.txt"
    path.write_text(
        HEADER + "\nopen;d=7;a=2,2,2,2,2,2,2,2,2,2;b=;k=0;-6672/1\n"
    )
    store = load_store(path)
    key = CanonicalKey(7, (2,) * 10, (), 0)
    assert store.open[key] == -6672


def test_version_mismatch(tmp_path):
    path = tmp_path / "cache.txt"
    path.write_text("wdvv-enum-cache v2\n")
    with pytest.raises(CacheError, match="line 1"):
        load_store(path)


@pytest.mark.parametrize("line", [
    "open;d=7;a=2;b=;k=0",            # missing value
    "open;d=x;a=;b=;k=0;1/1",         # bad integer
    "closed;d=1;m=1;1/0",             # zero denominator
    "mystery;d=1;1/1",                # unknown kind
    "closed;m=1;d=1;1/1",             # wrong field order
])
def test_malformed_records_report_line_number(tmp_path, line):
    path = tmp_path / "cache.txt"
    path.write_text(HEADER + "\n" + line + "\n")
    with pytest.raises(CacheError, match="line 2"):
        load_store(path)


def test_save_is_idempotent_and_sorted(tmp_path):
    store = MemoStore()
    store.put_open(CanonicalKey(7, (2,) * 10, (), 0), RAT(-6672))
    store.put_open(CanonicalKey(1, (), (), 0), RAT(1))
    store.put_closed((3, (1, 1)), RAT(10))
    path = tmp_path / "cache.txt"
    save_store(store, path)
    first = path.read_bytes()
    save_store(load_store(path), path)
    assert path.read_bytes() == first
    lines = first.decode().splitlines()
    assert lines[0] == HEADER
    assert lines[1:] == sorted(lines[1:])


def test_save_leaves_no_temp_files(tmp_path):
    path = tmp_path / "cache.txt"
    save_store(MemoStore(), path)
    assert [p.name for p in tmp_path.iterdir()] == ["cache.txt"]


def test_put_is_first_write_wins():
    store = MemoStore()
    key = CanonicalKey(1, (), (), 0)
    assert store.put_open(key, RAT(1)) == 1
    assert store.put_open(key, RAT(5)) == 1
    assert store.open[key] == 1


open_keys = st.builds(
    CanonicalKey,
    st.integers(0, 12),
    st.lists(st.integers(-1, 9), max_size=6).map(tuple),
    st.lists(st.integers(0, 6), max_size=4).map(tuple),
    st.integers(0, 15),
)
rationals = st.builds(
    RAT, st.integers(-10**12, 10**12), st.integers(1, 10**6)
)


@given(
    st.dictionaries(open_keys, rationals, max_size=8),
    st.dictionaries(
        st.tuples(st.integers(0, 9), st.lists(st.integers(-1, 9), max_size=6).map(tuple)),
        rationals, max_size=8,
    ),
)
def test_load_save_round_trip(tmp_path_factory, open_map, closed_map):
    store = MemoStore()
    for key, value in open_map.items():
        store.put_open(key, value)
    for key, value in closed_map.items():
        store.put_closed(key, value)
    path = tmp_path_factory.mktemp("cache") / "cache.txt"
    save_store(store, path)
    assert load_store(path) == store
