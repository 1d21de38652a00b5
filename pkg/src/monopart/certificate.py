"""Partition certificates and their independent verification.

A certificate lists pieces; piece ``p`` claims that ``mapping[i]`` (a host
vertex) is the image of vertex ``i`` of ``family.member(len(mapping))`` and
that every member edge lands on a host edge of ``color``. Verification only
uses the coloured host and the families, never the code that produced the
certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from monopart.errors import FormatError, MonopartError
from monopart.graph import BLUE, RED, Color, ColoredCompleteGraph


@dataclass(frozen=True)
class CertPiece:
    color: Color
    family: str
    mapping: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(self.mapping))

    @property
    def n(self) -> int:
        return len(self.mapping)


@dataclass
class PartitionCertificate:
    host_n: int
    pieces: list[CertPiece]
    notes: dict = field(default_factory=dict, compare=False)

    @property
    def piece_count(self) -> int:
        return len(self.pieces)

    def size_multiset(self) -> list[int]:
        return sorted(p.n for p in self.pieces)


@dataclass(frozen=True)
class Violation:
    kind: str  # disjointness, coverage, bijection, color, family, header
    pieces: tuple[int, ...]
    message: str

    def __str__(self):
        ids = ",".join(str(p) for p in self.pieces)
        return f"{self.kind}" + (f" [pieces {ids}]" if ids else "") + f": {self.message}"


@dataclass
class Verdict:
    violations: list[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


def verify_certificate(g: ColoredCompleteGraph, fam1, fam2, cert: PartitionCertificate) -> Verdict:
    """Check a certificate against the host colouring and both families.

    Red pieces must come from ``fam1`` and blue pieces from ``fam2``. Pieces
    are numbered from 1 in messages, as in the text format.
    """
    out: list[Violation] = []
    n = g.n
    if cert.host_n != n:
        out.append(Violation("header", (), f"certificate is for n={cert.host_n}, host has n={n}"))
    owner: dict[int, int] = {}
    for pid, piece in enumerate(cert.pieces, start=1):
        fam = fam1 if piece.color is RED else fam2 if piece.color is BLUE else None
        if fam is None:
            out.append(Violation("color", (pid,), f"unknown colour {piece.color!r}"))
            continue
        if piece.family != fam.name:
            out.append(Violation("family", (pid,), f"{piece.color.name.lower()} piece names family "
                                                   f"{piece.family!r}, expected {fam.name!r}"))
            continue
        m = piece.n
        bad_range = [h for h in piece.mapping if not 0 <= h < n]
        if m == 0 or bad_range:
            out.append(Violation("bijection", (pid,), "empty piece" if m == 0 else f"host vertex {bad_range[0] + 1} out of range"))
            continue
        if len(set(piece.mapping)) != m:
            out.append(Violation("bijection", (pid,), "two family vertices share a host vertex"))
        for h in piece.mapping:
            if h in owner and owner[h] != pid:
                out.append(Violation("disjointness", (owner[h], pid), f"host vertex {h + 1} is used twice"))
            else:
                owner[h] = pid
        try:
            member = fam.member(m)
        except MonopartError as exc:
            out.append(Violation("family", (pid,), str(exc)))
            continue
        adj = g.adj(piece.color)
        for u, v in sorted(member.edges):
            a, b = piece.mapping[u], piece.mapping[v]
            if a != b and not adj[a] >> b & 1:
                out.append(Violation("color", (pid,), f"member edge {u + 1}-{v + 1} lands on host pair "
                                                      f"{a + 1}-{b + 1} of colour {g.color(a, b)}"))
                break
    missing = [v for v in range(n) if v not in owner]
    if missing:
        shown = ", ".join(str(v + 1) for v in missing[:10])
        out.append(Violation("coverage", (), f"{len(missing)} host vertices uncovered: {shown}"))
    return Verdict(out)


def format_certificate(cert: PartitionCertificate) -> str:
    lines = [f"certificate n={cert.host_n} pieces={len(cert.pieces)}"]
    for pid, p in enumerate(cert.pieces, start=1):
        lines.append(f"piece {pid} color={p.color.value} family={p.family} n={p.n}")
        lines.append("map " + " ".join(f"{i + 1}:{h + 1}" for i, h in enumerate(p.mapping)))
    return "\n".join(lines) + "\n"


def _field(token, key, lineno):
    if not token.startswith(key + "="):
        raise FormatError(f"expected {key}=...", lineno)
    return token[len(key) + 1:]


def _int(text, what, lineno):
    if not text.isdigit():
        raise FormatError(f"{what} must be a nonnegative integer, got {text!r}", lineno)
    return int(text)


def parse_certificate(text: str) -> PartitionCertificate:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise FormatError("empty certificate", 1)
    head = lines[0].split()
    if len(head) != 3 or head[0] != "certificate":
        raise FormatError("expected 'certificate n=<N> pieces=<P>'", 1)
    host_n = _int(_field(head[1], "n", 1), "n", 1)
    count = _int(_field(head[2], "pieces", 1), "pieces", 1)
    if len(lines) != 1 + 2 * count:
        raise FormatError(f"expected {1 + 2 * count} lines for {count} pieces, found {len(lines)}", len(lines))
    pieces = []
    for p in range(count):
        ln = 2 + 2 * p
        tok = lines[ln - 1].split()
        if len(tok) != 5 or tok[0] != "piece":
            raise FormatError("expected 'piece <id> color=<R|B> family=<name> n=<m>'", ln)
        if _int(tok[1], "piece id", ln) != p + 1:
            raise FormatError(f"piece ids must run 1..{count} in order", ln)
        color_text = _field(tok[2], "color", ln)
        if color_text not in ("R", "B"):
            raise FormatError(f"colour must be R or B, got {color_text!r}", ln)
        family = _field(tok[3], "family", ln)
        m = _int(_field(tok[4], "n", ln), "n", ln)
        mtok = lines[ln].split()
        if not mtok or mtok[0] != "map":
            raise FormatError("expected 'map <i>:<h> ...'", ln + 1)
        if len(mtok) - 1 != m:
            raise FormatError(f"map lists {len(mtok) - 1} pairs for n={m}", ln + 1)
        mapping = [None] * m
        for pair in mtok[1:]:
            left, sep, right = pair.partition(":")
            if not sep:
                raise FormatError(f"bad map entry {pair!r}", ln + 1)
            i = _int(left, "family vertex", ln + 1)
            h = _int(right, "host vertex", ln + 1)
            if not 1 <= i <= m:
                raise FormatError(f"family vertex {i} outside 1..{m}", ln + 1)
            if mapping[i - 1] is not None:
                raise FormatError(f"family vertex {i} mapped twice", ln + 1)
            if h < 1:
                raise FormatError("host vertices are numbered from 1", ln + 1)
            mapping[i - 1] = h - 1
        pieces.append(CertPiece(Color(color_text), family, tuple(mapping)))
    return PartitionCertificate(host_n, pieces)
