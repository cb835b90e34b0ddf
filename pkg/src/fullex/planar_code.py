"""Binary planar_code interchange format.

Layout: the ASCII header ``>>planar_code<<`` once per file, then for each
graph one byte with the vertex count n (n <= 255) followed, for every
vertex 1..n, by its neighbors in rotation order as 1-based bytes and a
terminating 0 byte.  Writing then reading is byte-identical.
"""

from __future__ import annotations

from typing import BinaryIO, Iterable, Iterator

from .graphs import PlaneCubicGraph, from_rotation

HEADER = b">>planar_code<<"


class PlanarCodeError(ValueError):
    pass


def encode_graph(g: PlaneCubicGraph) -> bytes:
    out = bytearray([g.n])
    for v in range(g.n):
        out.extend(w + 1 for w in g.rot[v])
        out.append(0)
    return bytes(out)


def write_graphs(fh: BinaryIO, graphs: Iterable[PlaneCubicGraph]) -> int:
    fh.write(HEADER)
    count = 0
    for g in graphs:
        if g.n > 255:
            raise PlanarCodeError(f"{g.n} vertices exceed the one-byte limit")
        fh.write(encode_graph(g))
        count += 1
    return count


def write_file(path, graphs: Iterable[PlaneCubicGraph]) -> int:
    with open(path, "wb") as fh:
        return write_graphs(fh, graphs)


def read_graphs(data: bytes) -> Iterator[PlaneCubicGraph]:
    if not data.startswith(HEADER):
        raise PlanarCodeError("missing >>planar_code<< header")
    pos = len(HEADER)
    while pos < len(data):
        n = data[pos]
        pos += 1
        if n == 0:
            raise PlanarCodeError("graph with zero vertices")
        rot = []
        for v in range(n):
            nbrs = []
            while True:
                if pos >= len(data):
                    raise PlanarCodeError("truncated planar_code record")
                b = data[pos]
                pos += 1
                if b == 0:
                    break
                nbrs.append(b - 1)
            rot.append(tuple(nbrs))
        yield from_rotation(n, rot)


def read_file(path) -> list[PlaneCubicGraph]:
    with open(path, "rb") as fh:
        return list(read_graphs(fh.read()))
