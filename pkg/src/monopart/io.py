"""Text formats for colourings (certificates live in :mod:`monopart.certificate`).

A colouring file starts with ``n <N>``; line ``i + 1`` (for ``i = 1..N-1``)
holds ``N - i`` characters from ``R``/``B``, character ``j`` giving the colour
of the pair ``(i, i + j)`` with vertices numbered from 1.
"""

from __future__ import annotations

from monopart.certificate import format_certificate, parse_certificate
from monopart.errors import FormatError
from monopart.families import family_from_directory, read_edges_file, write_edges_file
from monopart.graph import ColoredCompleteGraph


def format_coloring(g: ColoredCompleteGraph) -> str:
    lines = [f"n {g.n}"]
    for i in range(g.n - 1):
        row = g.red[i] >> (i + 1)
        lines.append("".join("R" if row >> j & 1 else "B" for j in range(g.n - 1 - i)))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> ColoredCompleteGraph:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise FormatError("empty colouring file", 1)
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n" or not head[1].isdigit() or int(head[1]) < 1:
        raise FormatError("expected 'n <N>' with N >= 1", 1)
    n = int(head[1])
    if len(lines) != n:
        raise FormatError(f"expected {n} lines for n={n}, found {len(lines)}", min(len(lines), n) + 1)
    red = [0] * n
    for i in range(n - 1):
        row = lines[i + 1].strip()
        if len(row) != n - 1 - i:
            raise FormatError(f"expected {n - 1 - i} characters, found {len(row)}", i + 2)
        for j, ch in enumerate(row):
            if ch == "R":
                v = i + 1 + j
                red[i] |= 1 << v
                red[v] |= 1 << i
            elif ch != "B":
                raise FormatError(f"unexpected character {ch!r} (only R and B)", i + 2)
    return ColoredCompleteGraph(n, red)


def read_coloring(path) -> ColoredCompleteGraph:
    with open(path) as fh:
        return parse_coloring(fh.read())


def write_coloring(path, g: ColoredCompleteGraph):
    with open(path, "w") as fh:
        fh.write(format_coloring(g))


def read_certificate(path):
    with open(path) as fh:
        return parse_certificate(fh.read())


def write_certificate(path, cert):
    with open(path, "w") as fh:
        fh.write(format_certificate(cert))


__all__ = [
    "format_coloring", "parse_coloring", "read_coloring", "write_coloring",
    "format_certificate", "parse_certificate", "read_certificate", "write_certificate",
    "family_from_directory", "read_edges_file", "write_edges_file",
]
