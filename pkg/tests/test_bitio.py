from hypothesis import given, strategies as st
import pytest

from apfc.bitio import BitSink, BitSource, Payload
from apfc.errors import CorruptStreamError, UsageError


def test_write_msb_first():
    sink = BitSink().write_bits(0b101, 3)
    assert sink.getvalue() == bytes([0b10100000])
    assert sink.bit_position == 3


def test_write_zero_width_is_identity():
    sink = BitSink().write_bits(0, 0)
    assert sink.getvalue() == b""
    assert sink.bit_position == 0


def test_eight_single_bits_fill_a_byte():
    sink = BitSink()
    for _ in range(8):
        sink.write_bits(1, 1)
    assert sink.getvalue() == b"\xff"
    assert sink.bit_position == 8


@pytest.mark.parametrize("value,width", [(0, 65), (0, -1), (4, 2), (-1, 3)])
def test_write_rejects_bad_arguments(value, width):
    with pytest.raises(UsageError):
        BitSink().write_bits(value, width)


def test_peek():
    assert BitSource(bytes([0b10110000])).peek_bits(3) == 0b101


def test_peek_zero_fills_past_limit():
    src = BitSource(bytes([0b10000000]), limit=1)
    assert src.peek_bits(4) == 0b1000
    assert src.cursor == 0


def test_peek_after_advance():
    src = BitSource(bytes([0b10110000]))
    src.advance(2)
    assert src.peek_bits(2) == 0b11


def test_peek_zero_fills_bits_still_in_buffer():
    # limit cuts inside a byte whose trailing bits are set
    src = BitSource(b"\xff", limit=3)
    assert src.peek_bits(8) == 0b11100000


def test_advance():
    src = BitSource(b"\x00")
    assert src.advance(5).cursor == 5
    assert src.advance(0).cursor == 5


def test_advance_past_limit():
    src = BitSource(b"\x00", limit=3)
    src.advance(3)
    with pytest.raises(CorruptStreamError):
        src.advance(1)


pairs = st.lists(
    st.integers(0, 64).flatmap(lambda w: st.tuples(st.integers(0, (1 << w) - 1), st.just(w))),
    max_size=40)


@given(pairs)
def test_roundtrip(items):
    sink = BitSink()
    for value, width in items:
        sink.write_bits(value, width)
    assert len(sink.getvalue()) == (sink.bit_position + 7) // 8
    src = sink.payload().source()
    assert [src.read_bits(w) for _, w in items] == [v for v, _ in items]
    assert src.remaining == 0


@given(st.integers(0, 32).flatmap(lambda w: st.tuples(st.integers(0, (1 << w) - 1), st.just(w))),
       st.integers(0, 32).flatmap(lambda w: st.tuples(st.integers(0, (1 << w) - 1), st.just(w))))
def test_split_write_equals_joined_write(first, second):
    (v1, w1), (v2, w2) = first, second
    split = BitSink().write_bits(v1, w1).write_bits(v2, w2)
    joined = BitSink().write_bits((v1 << w2) | v2, w1 + w2)
    assert split.getvalue() == joined.getvalue()


def test_payload_bitstring():
    p = Payload.from_bitstring("0110")
    assert p == Payload(b"\x60", 4)
    assert p.to_bitstring() == "0110"
