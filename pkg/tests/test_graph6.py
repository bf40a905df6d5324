import pytest
from hypothesis import given, settings, strategies as st

from wlbound.errors import InvalidGraph6
from wlbound.graph6 import decode_record, encode_record, load_graph6
from wlbound.graphs import Graph


def test_hand_decoded_k4():
    # 'C' -> n=4; '~' -> 111111: all six upper-triangle bits set
    g = decode_record(b"C~")
    assert g.node_count == 4
    assert g.edges == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def test_hand_decoded_star():
    # 'D' -> n=5; bits 0000001111(00): only column j=4 set -> K_{1,4}
    g = decode_record(b"D?{")
    assert g.edges == ((0, 4), (1, 4), (2, 4), (3, 4))


def test_roundtrip_identity_examples():
    for rec in (b"D?{", b"C~", b"A_", b"@"):
        assert encode_record(decode_record(rec)) == rec


def test_header_stripping_and_lines():
    graphs = load_graph6(b">>graph6<<C~\nD?{\n\n")
    assert [g.node_count for g in graphs] == [4, 5]


def test_bad_byte_and_truncation():
    with pytest.raises(InvalidGraph6):
        decode_record(b"C\x19", line=3)
    with pytest.raises(InvalidGraph6):
        decode_record(b"E?")  # n=6 needs 3 body bytes
    with pytest.raises(InvalidGraph6):
        decode_record(b"C~~")  # extra byte
    try:
        load_graph6(b"C~\nC\x02\n")
    except InvalidGraph6 as exc:
        assert exc.line == 2


def test_long_size_prefix():
    g = Graph(63, ())
    rec = encode_record(g)
    assert rec[0] == 126
    assert decode_record(rec).node_count == 63


@given(st.integers(min_value=0, max_value=12), st.integers(min_value=0))
@settings(max_examples=200)
def test_encode_decode_roundtrip_property(n, seed):
    import random
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < 0.5]
    g = Graph(n, tuple(edges))
    rec = encode_record(g)
    back = decode_record(rec)
    assert back.node_count == g.node_count
    assert back.edges == g.edges
    assert encode_record(back) == rec
