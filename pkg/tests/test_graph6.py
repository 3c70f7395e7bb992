"""graph6 codec: hand-packed values, networkx cross-checks, roundtrips."""

import io
import json
import random

import networkx as nx
import pytest

from slmatch import (
    Graph6ParseError,
    InputError,
    ParseFailure,
    build_graph,
    complete_graph,
    decode_graph6,
    empty_graph,
    encode_graph6,
    extremal_h,
    read_edge_list,
    read_stream,
)
from slmatch.generate import edge_mask_to_graph
from slmatch.graph6 import write_jsonl


def test_decode_hand_packed_values():
    assert decode_graph6("C~") == complete_graph(4)
    assert decode_graph6("Bg") == build_graph(3, [(0, 1), (1, 2)])
    assert decode_graph6("@") == empty_graph(1)


def test_encode_hand_packed_values():
    assert encode_graph6(complete_graph(4)) == "C~"
    assert encode_graph6(build_graph(3, [(0, 1), (1, 2)])) == "Bg"
    assert encode_graph6(empty_graph(1)) == "@"


def test_star_roundtrip_degree_sequence():
    line = encode_graph6(extremal_h(4))
    back = decode_graph6(line)
    assert sorted(back.degrees(), reverse=True) == [3, 1, 1, 1]
    assert back == extremal_h(4)


def test_decode_rejects_bytes_outside_range():
    with pytest.raises(Graph6ParseError) as err:
        decode_graph6("C" + chr(30))
    assert err.value.offset == 1
    with pytest.raises(Graph6ParseError):
        decode_graph6(chr(127))
    with pytest.raises(Graph6ParseError):
        decode_graph6("")


def test_decode_rejects_length_mismatch():
    with pytest.raises(Graph6ParseError):
        decode_graph6("C~~")  # one byte too many for n=4
    with pytest.raises(Graph6ParseError):
        decode_graph6("C")  # missing adjacency byte


def test_decode_rejects_huge_order_marker():
    with pytest.raises(Graph6ParseError):
        decode_graph6("~~~~~~~~")


def test_encoded_length_formula():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 70)
        G = edge_mask_to_graph(n, rng.getrandbits(n * (n - 1) // 2))
        line = encode_graph6(G)
        header = 1 if n <= 62 else 4
        assert len(line) == header + (n * (n - 1) // 2 + 5) // 6


def test_roundtrip_random_graphs():
    rng = random.Random(1234)
    for _ in range(10_000):
        n = rng.randint(1, 70)
        G = edge_mask_to_graph(n, rng.getrandbits(n * (n - 1) // 2))
        assert decode_graph6(encode_graph6(G)) == G


def test_roundtrip_extended_size_boundary():
    for n in (62, 63, 64):
        rng = random.Random(n)
        G = edge_mask_to_graph(n, rng.getrandbits(n * (n - 1) // 2))
        line = encode_graph6(G)
        assert line.startswith("~") == (n > 62)
        assert decode_graph6(line) == G


def test_codec_agrees_with_networkx():
    rng = random.Random(77)
    for _ in range(300):
        n = rng.randint(1, 70)
        G = edge_mask_to_graph(n, rng.getrandbits(n * (n - 1) // 2))
        line = encode_graph6(G)
        nx_graph = nx.from_graph6_bytes(line.encode("ascii"))
        assert nx_graph.number_of_nodes() == n
        assert {tuple(sorted(e)) for e in nx_graph.edges()} == set(G.edges())
        assert nx.to_graph6_bytes(nx_graph, header=False).strip().decode("ascii") == line


def test_read_stream_mixed_lines():
    lines = [">>graph6<<", "", "C~", "Bg", "??garbage!", " @ "]
    items = list(read_stream(lines))
    assert items[0] == complete_graph(4)
    assert items[1] == build_graph(3, [(0, 1), (1, 2)])
    assert isinstance(items[2], ParseFailure)
    assert items[2].line_number == 5
    assert items[3] == empty_graph(1)


def test_read_stream_header_inline():
    items = list(read_stream([">>graph6<<C~"]))
    assert items == [complete_graph(4)]


def test_read_edge_list():
    text = ["3 2", "0 1", " 1  2 "]
    assert read_edge_list(text) == build_graph(3, [(0, 1), (1, 2)])
    with pytest.raises(InputError):
        read_edge_list(["3 2", "0 1"])  # count mismatch
    with pytest.raises(InputError):
        read_edge_list([])
    with pytest.raises(InputError):
        read_edge_list(["3 1", "0 x"])


def test_write_jsonl():
    sink = io.StringIO()
    assert write_jsonl(sink, [{"a": 1}, {"b": [1, 2]}]) == 2
    lines = sink.getvalue().splitlines()
    assert json.loads(lines[0]) == {"a": 1}
    assert json.loads(lines[1]) == {"b": [1, 2]}
