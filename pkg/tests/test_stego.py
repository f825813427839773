import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lsbxor import GrayImage
from lsbxor.bitcodec import byte_to_reversed_bits, bytes_to_bits, reversed_bits_to_byte
from lsbxor.errors import CapacityError, ShareMismatchError
from lsbxor.sharing import split_image
from lsbxor.stego import (
    capacity_bits,
    detect_shares,
    embed_bits,
    embed_bits_direct,
    embed_shares,
    extract_bits,
    replace_lsbs,
    xor_lsbs,
)

from conftest import TABLE1_KEY, TABLE3_STEGO, direct_embed_oracle, random_image


@pytest.mark.parametrize("w, h, cap", [(100, 100, 10000), (1, 1, 1), (3, 5, 15)])
def test_capacity(w, h, cap):
    assert capacity_bits(GrayImage(w, h, np.zeros(w * h))) == cap


class TestWorkedExample:
    """Hiding the letter "I" in the first row of the key image."""

    msg = byte_to_reversed_bits(73)

    def test_key_shares(self, table1_key):
        shares = split_image(table1_key)
        assert [format(v, "08b") for v in shares.share1[:4]] == [
            "10100010", "10011110", "10011100", "10011010",
        ]
        assert [format(v, "08b") for v in shares.share2[:4]] == [
            "10100001", "10011100", "10011001", "10100001",
        ]

    def test_xor_columns(self, table1_key):
        shares = split_image(table1_key)
        assert (shares.share1[:4] & 1).tolist() == [0, 0, 0, 0]
        assert (shares.share2[:4] & 1).tolist() == [1, 0, 1, 1]
        assert xor_lsbs(shares.share1, [1, 0, 0, 1]).tolist() == [1, 0, 0, 1]
        assert xor_lsbs(shares.share2, [0, 1, 0, 0]).tolist() == [1, 1, 1, 1]

    def test_replaced_shares(self, table1_key):
        shares = split_image(table1_key)
        s1 = replace_lsbs(shares.share1, [1, 0, 0, 1])
        s2 = replace_lsbs(shares.share2, [1, 1, 1, 1])
        assert s1[:4].tolist() == [163, 158, 156, 155]
        # the printed binary for the fourth value is garbled; 161 is the arithmetic result
        assert s2[:4].tolist() == [161, 157, 153, 161]
        assert s1[4] == 168 and s2[4] == 173
        out = embed_shares(shares, self.msg)
        assert out.share1.tolist() == s1.tolist()
        assert out.share2.tolist() == s2.tolist()

    def test_stego_row(self, table1_key):
        assert embed_bits(table1_key, self.msg).pixels.tolist() == TABLE3_STEGO

    def test_detector(self, table1_key):
        stego = GrayImage(10, 1, TABLE3_STEGO)
        m1, m2 = detect_shares(split_image(table1_key), split_image(stego), 8)
        assert m1.tolist() == [1, 0, 0, 1]
        assert m2.tolist() == [0, 1, 0, 0]
        bits = extract_bits(table1_key, stego, 8)
        assert bits.tolist() == [1, 0, 0, 1, 0, 0, 1, 0]
        assert chr(reversed_bits_to_byte(bits)) == "I"

    def test_detector_on_eight_pixel_prefix(self):
        key = GrayImage(8, 1, TABLE1_KEY[:8])
        stego = GrayImage(8, 1, TABLE3_STEGO[:8])
        assert reversed_bits_to_byte(extract_bits(key, stego, 8)) == 73


def test_empty_message_is_noop(rng):
    key = random_image(rng, 9)
    assert embed_bits(key, []) == key


def test_zero_key_copies_message():
    key = GrayImage(8, 1, [0] * 8)
    assert embed_bits(key, [1] * 8).pixels.tolist() == [1] * 8


def test_extract_from_unmodified_image_is_zero(rng):
    key = random_image(rng, 12)
    assert not extract_bits(key, key, key.size).any()


def test_computer_round_trip(rng):
    key = random_image(rng, 16, min_side=8)
    msg = bytes_to_bits(b"Computer")
    stego = embed_bits(key, msg)
    assert stego.pixels.tolist() == direct_embed_oracle(key.pixels.tolist(), msg.tolist())
    assert extract_bits(key, stego, msg.size).tolist() == msg.tolist()


def test_capacity_exceeded():
    key = GrayImage(3, 1, [1, 2, 3])
    with pytest.raises(CapacityError) as exc:
        embed_bits(key, [1, 0, 1, 0])
    assert exc.value.required == 4 and exc.value.available == 3
    with pytest.raises(CapacityError):
        extract_bits(key, key, 4)


def test_dimension_mismatch():
    a = GrayImage(4, 1, [1, 2, 3, 4])
    b = GrayImage(2, 2, [1, 2, 3, 4])
    with pytest.raises(ShareMismatchError):
        extract_bits(a, b, 2)


@st.composite
def key_and_message(draw):
    w = draw(st.integers(1, 24))
    h = draw(st.integers(1, 24))
    px = draw(st.lists(st.integers(0, 255), min_size=w * h, max_size=w * h))
    msg = draw(st.lists(st.integers(0, 1), max_size=w * h))
    return GrayImage(w, h, px), msg


@settings(max_examples=200)
@given(key_and_message())
def test_embed_properties(case):
    key, msg = case
    stego = embed_bits(key, msg)
    assert stego.shape == key.shape
    assert stego.pixels.tolist() == direct_embed_oracle(key.pixels.tolist(), msg)
    assert stego == embed_bits_direct(key, msg)
    delta = stego.pixels.astype(int) - key.pixels.astype(int)
    assert np.abs(delta).max(initial=0) <= 1
    assert np.array_equal(stego.pixels >> 1, key.pixels >> 1)
    assert np.array_equal(stego.pixels[len(msg):], key.pixels[len(msg):])
    assert np.count_nonzero(delta) <= len(msg)
    assert extract_bits(key, stego, len(msg)).tolist() == msg
