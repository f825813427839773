import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lsbxor.bitcodec import (
    as_bits,
    bits_to_bytes,
    byte_to_reversed_bits,
    bytes_to_bits,
    interleave,
    reversed_bits_to_byte,
    split_odd_even,
)
from lsbxor.errors import MalformedBlockError, MalformedSharesError

from conftest import reversed_bits_oracle

bit_lists = st.lists(st.integers(0, 1), max_size=300)


@pytest.mark.parametrize(
    "b, bits",
    [
        (73, [1, 0, 0, 1, 0, 0, 1, 0]),
        (0, [0] * 8),
        (67, [1, 1, 0, 0, 0, 0, 1, 0]),
    ],
)
def test_byte_to_reversed_bits(b, bits):
    assert byte_to_reversed_bits(b).tolist() == bits
    assert reversed_bits_to_byte(bits) == b


def test_reversed_bits_matches_string_oracle_for_every_byte():
    for b in range(256):
        assert byte_to_reversed_bits(b).tolist() == reversed_bits_oracle(b)
        assert reversed_bits_to_byte(byte_to_reversed_bits(b)) == b


def test_lsb_comes_first():
    assert byte_to_reversed_bits(1)[0] == 1
    assert byte_to_reversed_bits(128)[7] == 1


@pytest.mark.parametrize("bad", [[], [1] * 7, [0] * 9])
def test_reversed_bits_to_byte_rejects_wrong_length(bad):
    with pytest.raises(MalformedBlockError):
        reversed_bits_to_byte(bad)


def test_byte_out_of_range():
    with pytest.raises(ValueError):
        byte_to_reversed_bits(256)


def test_non_binary_values_rejected():
    with pytest.raises(ValueError):
        as_bits([0, 2, 1])


@pytest.mark.parametrize(
    "s, odd, even",
    [
        ([1, 0, 0, 1, 0, 0, 1, 0], [1, 0, 0, 1], [0, 1, 0, 0]),
        ([], [], []),
        ([1, 1, 0, 0, 0, 0, 1, 0], [1, 0, 0, 1], [1, 0, 0, 0]),
    ],
)
def test_split_and_interleave_examples(s, odd, even):
    o, e = split_odd_even(s)
    assert (o.tolist(), e.tolist()) == (odd, even)
    assert interleave(odd, even).tolist() == s


@pytest.mark.parametrize("odd, even", [([1], [0, 1]), ([1, 1, 1], [0])])
def test_interleave_rejects_bad_lengths(odd, even):
    with pytest.raises(MalformedSharesError):
        interleave(odd, even)


@given(bit_lists)
def test_split_matches_alternate_take(s):
    odd, even = split_odd_even(s)
    assert odd.tolist() == [s[i] for i in range(0, len(s), 2)]
    assert even.tolist() == [s[i] for i in range(1, len(s), 2)]
    assert odd.size - even.size in (0, 1)
    assert interleave(odd, even).tolist() == s


@given(st.binary(max_size=64))
def test_multibyte_stream_is_concatenation_of_bytes(data):
    bits = bytes_to_bits(data)
    expected = [bit for b in data for bit in reversed_bits_oracle(b)]
    assert bits.tolist() == expected
    assert bits_to_bytes(bits) == data
    # each byte has an even bit count, so the global split is the per-byte split
    odd, even = split_odd_even(bits)
    per_byte = [split_odd_even(reversed_bits_oracle(b)) for b in data]
    assert odd.tolist() == [x for o, _ in per_byte for x in o.tolist()]
    assert even.tolist() == [x for _, e in per_byte for x in e.tolist()]


def test_bits_to_bytes_requires_whole_bytes():
    with pytest.raises(MalformedBlockError):
        bits_to_bytes(np.ones(12, dtype=np.uint8))
