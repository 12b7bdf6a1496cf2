import random
from collections import defaultdict

import pytest
from hypothesis import given
from hypothesis import strategies as st

from proplist import DuplicateNameError, HashPropertyList, NotFoundError, pack_name
from proplist.hashing import WordPair, midsquare_hash, midsquare_trace


def oracle_hash(a, b, table_size):
    """Independent big-integer route: 64-bit binary string, centre 32 chars."""
    c = a * b
    c_bits = format(c, "064b")
    d = (int(c_bits[:32], 2) + int(c_bits[32:], 2)) % 2**32
    e_bits = format(d * d, "064b")
    return int(e_bits[16:48], 2) % table_size


def oracle_pack(name):
    padded = name + b"\0" * (-len(name) % 4)
    chunks = [padded[i:i + 4] for i in range(0, len(padded), 4)]
    a = b = 0
    for k, chunk in enumerate(chunks):
        word = chunk[0] | chunk[1] << 8 | chunk[2] << 16 | chunk[3] << 24
        if k % 2 == 0:
            a ^= word
        else:
            b ^= word
    return a, b


class TestPackName:
    def test_single_chunk(self):
        assert pack_name(bytes([0x41, 0x42, 0x43, 0x44])) == WordPair(0x44434241, 0)

    def test_two_chunks(self):
        assert pack_name(b"AAAABBBB") == WordPair(0x41414141, 0x42424242)

    def test_three_chunks(self):
        want = (0x41414141 ^ 0x43434343, 0x42424242)
        assert want == (0x02020202, 0x42424242)
        assert pack_name(b"AAAABBBBCCCC") == want

    def test_short_name_zero_padded(self):
        assert pack_name(b"A") == (0x41, 0)

    @given(st.binary(min_size=1, max_size=32))
    def test_matches_oracle(self, name):
        assert tuple(pack_name(name)) == oracle_pack(name)


class TestMidSquare:
    def test_zero(self):
        t = midsquare_trace((0, 0), 64)
        assert (t.c, t.d, t.e, t.centre, t.index) == (0, 0, 0, 0, 0)

    def test_0x100(self):
        t = midsquare_trace((0x100, 0x100), 2**32)
        assert (t.c, t.d, t.e) == (0x10000, 0x10000, 0x100000000)
        assert t.centre == 0x10000
        assert midsquare_hash((0x100, 0x100), 64) == 0x10000 % 64

    def test_small_product(self):
        t = midsquare_trace((3, 5), 64)
        assert (t.c, t.d, t.e, t.centre) == (15, 15, 225, 0)

    def test_fold_wraps(self):
        t = midsquare_trace((0xFFFFFFFF, 0xFFFFFFFF), 64)
        assert t.c == 0xFFFFFFFE00000001
        assert t.d == (0xFFFFFFFE + 1) & 0xFFFFFFFF

    @given(st.integers(0, 2**32 - 1), st.integers(0, 2**32 - 1),
           st.sampled_from([1, 2, 64, 1024, 2**32]))
    def test_matches_oracle(self, a, b, m):
        assert midsquare_hash((a, b), m) == oracle_hash(a, b, m)
        assert midsquare_trace((a, b), m).index == oracle_hash(a, b, m)

    def test_rejects_non_power_of_two(self):
        with pytest.raises(ValueError):
            midsquare_trace((1, 1), 48)
        with pytest.raises(ValueError):
            HashPropertyList(table_size=100)
        with pytest.raises(ValueError):
            HashPropertyList(table_size=8, probe_limit=9)


def colliding_names(count, table_size=64, seed=0):
    """``count`` names sharing one home bucket, found with the oracle hash."""
    rng = random.Random(seed)
    groups = defaultdict(list)
    while True:
        name = bytes(rng.choice(b"abcdefghijklmnop") for _ in range(rng.randint(1, 12)))
        home = oracle_hash(*oracle_pack(name), table_size)
        if name not in groups[home]:
            groups[home].append(name)
            if len(groups[home]) == count:
                return home, groups[home]


def test_insert_lands_in_home():
    h = HashPropertyList()
    h.insert(b"key", b"v")
    home = h.home_index(b"key")
    assert h.bucket_state(home) == "occupied"
    assert sum(h.bucket_state(i) == "occupied" for i in range(64)) == 1


def test_collision_moves_to_next_bucket():
    home, (x, y) = colliding_names(2)
    h = HashPropertyList()
    h.insert(x, b"1")
    h.insert(y, b"2")
    assert h.names[home] == x
    assert h.names[(home + 1) % 64] == y


def test_probe_limit_then_overflow():
    k = 8
    home, names = colliding_names(k + 1, seed=1)
    h = HashPropertyList(probe_limit=k)
    for n in names:
        h.insert(n, n)
    assert [h.names[(home + j) % 64] for j in range(k)] == names[:k]
    assert h.overflow_names(home) == [names[k]]
    for n in names:
        assert h.lookup(n) == n
    h.reset_counters()
    with pytest.raises(NotFoundError):
        h.lookup(b"definitely-absent-name")
    assert h.probes <= k


def test_tombstone_keeps_chain():
    home, (x, y, z) = colliding_names(3, seed=2)
    h = HashPropertyList()
    h.insert(x, b"1")
    h.insert(y, b"2")
    h.remove(x)
    assert h.bucket_state(home) == "tombstone"
    assert h.lookup(y) == b"2"
    h.insert(z, b"3")
    assert h.names[home] == z
    assert h.lookup(y) == b"2"


def test_overflow_remove():
    home, names = colliding_names(4, seed=3)
    h = HashPropertyList(table_size=64, probe_limit=2)
    for n in names:
        h.insert(n, n)
    assert h.overflow_names(home) == names[2:]
    assert h.remove(names[2]) == names[2]
    assert h.overflow_names(home) == [names[3]]
    h.remove(names[0])
    # a freed probe slot must not hide the overflow entry
    assert h.lookup(names[3]) == names[3]
    with pytest.raises(DuplicateNameError):
        h.insert(names[3], b"dup")
    assert h.size() == 2


def test_overflow_visits_counted():
    home, names = colliding_names(3, seed=4)
    h = HashPropertyList(probe_limit=1)
    for n in names:
        h.insert(n, n)
    h.reset_counters()
    h.lookup(names[2])
    assert h.probes == 1
    assert h.overflow_visits == 2


def test_determinism():
    rng = random.Random(11)
    for _ in range(200):
        a, b = rng.getrandbits(32), rng.getrandbits(32)
        assert midsquare_hash((a, b), 64) == midsquare_hash((a, b), 64)
