"""Edge colorings of complete graphs, circulant or explicit, plus file I/O.

A coloring assigns one of the colors 1..C to every edge of K_n.  Two
representations are supported:

* circulant: vertices are the elements of a finite field and the color of
  {u, v} depends only on the difference v - u.  Stored as per-color
  connection sets (each closed under negation, so the coloring is
  symmetric).
* explicit: one byte per edge in a flat upper-triangular buffer.

The text file format is line oriented and version tagged::

    ramsey-coloring v1
    n=<N> colors=<C> repr=<circulant|explicit>

followed, for circulant colorings, by ``field=<p>[^<k> poly=<c0,...,ck>]``
and one ``color <i>: d1 d2 ...`` line per color (ascending canonical
encodings), or, for explicit colorings, by n-1 lines where line i lists
the colors of the edges {i, i+1} .. {i, n-1}.  Writing is canonical, so a
save/load round trip is byte exact.
"""

from __future__ import annotations

import re
from bisect import bisect_right
from hashlib import sha256
from pathlib import Path

from .field import FieldSpec
from .residues import CosetPartition, negation_closed

HEADER = "ramsey-coloring v1"
MAX_VERTICES = 1 << 15
MAX_COLORS = 255


class FormatError(ValueError):
    """Raised for malformed or inconsistent coloring files."""


class EdgeColoring:
    """Base interface: a symmetric C-coloring of the edges of K_n."""

    n: int
    num_colors: int

    @property
    def is_circulant(self) -> bool:
        raise NotImplementedError

    def edge_color(self, u: int, v: int) -> int:
        """Color of the edge {u, v}; symmetric, O(1)."""
        raise NotImplementedError

    def to_explicit(self) -> "ExplicitColoring":
        raise NotImplementedError

    def neighbor_rows(self, color: int) -> list[int]:
        """Per-vertex adjacency bitmasks of one color class (bit v of row u
        is set iff {u, v} has that color)."""
        raise NotImplementedError

    def _check_pair(self, u: int, v: int) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"vertex out of range for n={self.n}")
        if u == v:
            raise ValueError("self-edges do not exist")

    def _check_color(self, color: int) -> None:
        if not 1 <= color <= self.num_colors:
            raise ValueError(f"color {color} out of range 1..{self.num_colors}")


class CirculantColoring(EdgeColoring):
    """Cayley coloring: edge {u, v} is colored by the class of v - u."""

    def __init__(self, field: FieldSpec, connection_sets):
        n = field.order
        sets = tuple(tuple(sorted(set(map(int, s)))) for s in connection_sets)
        if not 1 <= len(sets) <= MAX_COLORS:
            raise ValueError(f"need between 1 and {MAX_COLORS} colors")
        diff_color = bytearray(n)
        covered = 0
        for ci, s in enumerate(sets, 1):
            for d in s:
                if not 1 <= d < n:
                    raise ValueError(f"connection value {d} is not a nonzero element")
                if field.neg(d) not in s:
                    raise ValueError(
                        f"connection set for color {ci} is not closed under negation "
                        f"({d} present, {field.neg(d)} missing)")
                if diff_color[d]:
                    raise ValueError(f"difference {d} covered by more than one color")
                diff_color[d] = ci
                covered += 1
        if covered != n - 1:
            raise ValueError("connection sets do not cover all nonzero differences")
        self.n = n
        self.num_colors = len(sets)
        self.field = field
        self.connection_sets = sets
        self._diff_color = bytes(diff_color)

    @property
    def is_circulant(self) -> bool:
        return True

    def edge_color(self, u: int, v: int) -> int:
        self._check_pair(u, v)
        return self._diff_color[self.field.sub(v, u)]

    def neighbor_rows(self, color: int) -> list[int]:
        self._check_color(color)
        n = self.n
        conn = self.connection_sets[color - 1]
        if self.field.degree == 1:
            base = 0
            for d in conn:
                base |= 1 << d
            mask = (1 << n) - 1
            return [((base << u) | (base >> (n - u))) & mask if u else base
                    for u in range(n)]
        add = self.field.add
        rows = [0] * n
        for d in conn:
            for u in range(n):
                rows[u] |= 1 << add(u, d)
        return rows

    def to_explicit(self) -> "ExplicitColoring":
        n = self.n
        dc = self._diff_color
        if self.field.degree == 1:
            # row u lists differences 1 .. n-1-u in order
            tri = b"".join(dc[1:n - u] for u in range(n - 1))
        else:
            sub = self.field.sub
            tri = bytes(dc[sub(v, u)] for u in range(n - 1) for v in range(u + 1, n))
        return ExplicitColoring(n, self.num_colors, tri)


class ExplicitColoring(EdgeColoring):
    """Upper-triangular byte array of edge colors."""

    def __init__(self, n: int, num_colors: int, tri):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in [1, {MAX_VERTICES}]")
        if not 1 <= num_colors <= MAX_COLORS:
            raise ValueError(f"need between 1 and {MAX_COLORS} colors")
        tri = bytes(tri)
        if len(tri) != n * (n - 1) // 2:
            raise ValueError(f"expected {n * (n - 1) // 2} edge entries, got {len(tri)}")
        for b in set(tri):
            if not 1 <= b <= num_colors:
                raise ValueError(f"color {b} out of range 1..{num_colors}")
        self.n = n
        self.num_colors = num_colors
        self._tri = tri
        # _row_start[u] = buffer offset of the row for vertex u
        starts = []
        pos = 0
        for u in range(n):
            starts.append(pos)
            pos += n - 1 - u
        self._row_start = starts

    @classmethod
    def from_function(cls, n: int, num_colors: int, fn) -> "ExplicitColoring":
        tri = bytes(fn(u, v) for u in range(n - 1) for v in range(u + 1, n))
        return cls(n, num_colors, tri)

    @property
    def is_circulant(self) -> bool:
        return False

    def edge_color(self, u: int, v: int) -> int:
        self._check_pair(u, v)
        if u > v:
            u, v = v, u
        return self._tri[self._row_start[u] + v - u - 1]

    def neighbor_rows(self, color: int) -> list[int]:
        self._check_color(color)
        rows = [0] * self.n
        tri = self._tri
        starts = self._row_start
        i = tri.find(color)
        while i >= 0:
            u = bisect_right(starts, i) - 1
            v = i - starts[u] + u + 1
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            i = tri.find(color, i + 1)
        return rows

    def to_explicit(self) -> "ExplicitColoring":
        return self


def build_cayley_coloring(partition: CosetPartition) -> CirculantColoring:
    """Color K_n over the field by coset membership of the vertex difference.

    Edge {u, v} gets color 1 + (coset index of v - u); requires -1 to be a
    residue so the choice of difference direction does not matter.
    """
    if not negation_closed(partition):
        raise ValueError(
            "-1 is not an m-th power residue, so edge colors would depend on "
            "the direction of differencing")
    return CirculantColoring(partition.field, partition.cosets)


def edge_color(coloring: EdgeColoring, u: int, v: int) -> int:
    return coloring.edge_color(u, v)


def to_explicit(coloring: EdgeColoring) -> ExplicitColoring:
    return coloring.to_explicit()


# -- serialization --------------------------------------------------------

_META_RE = re.compile(r"^n=(\d+) colors=(\d+) repr=(circulant|explicit)$")
_FIELD_RE = re.compile(r"^field=(\d+)(?:\^(\d+) poly=(\d+(?:,\d+)*))?$")


def dumps_coloring(coloring: EdgeColoring) -> str:
    """Canonical text form of a coloring (the unit the digest is taken over)."""
    kind = "circulant" if coloring.is_circulant else "explicit"
    lines = [HEADER, f"n={coloring.n} colors={coloring.num_colors} repr={kind}"]
    if coloring.is_circulant:
        f = coloring.field
        if f.degree == 1:
            lines.append(f"field={f.characteristic}")
        else:
            poly = ",".join(str(c) for c in f.modulus_poly)
            lines.append(f"field={f.characteristic}^{f.degree} poly={poly}")
        for i, s in enumerate(coloring.connection_sets, 1):
            lines.append(f"color {i}:" + "".join(f" {d}" for d in s))
    else:
        tri = coloring._tri
        starts = coloring._row_start
        n = coloring.n
        for u in range(n - 1):
            row = tri[starts[u]:starts[u] + n - 1 - u]
            lines.append(" ".join(str(b) for b in row))
    return "\n".join(lines) + "\n"


def loads_coloring(text: str) -> EdgeColoring:
    lines = text.splitlines()
    if not lines or lines[0] != HEADER:
        raise FormatError(f"missing or unsupported header (expected {HEADER!r})")
    if len(lines) < 2:
        raise FormatError("truncated file: no size line")
    meta = _META_RE.match(lines[1])
    if not meta:
        raise FormatError(f"malformed size line: {lines[1]!r}")
    n, num_colors, kind = int(meta.group(1)), int(meta.group(2)), meta.group(3)
    body = lines[2:]
    try:
        if kind == "circulant":
            return _parse_circulant(n, num_colors, body)
        return _parse_explicit(n, num_colors, body)
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def _parse_circulant(n: int, num_colors: int, body: list[str]) -> CirculantColoring:
    if not body:
        raise FormatError("missing field line")
    fm = _FIELD_RE.match(body[0])
    if not fm:
        raise FormatError(f"malformed field line: {body[0]!r}")
    p = int(fm.group(1))
    if fm.group(2) is None:
        spec = FieldSpec(p)
    else:
        k = int(fm.group(2))
        poly = tuple(int(c) for c in fm.group(3).split(","))
        spec = FieldSpec(p, k, poly)
    if spec.order != n:
        raise FormatError(f"field order {spec.order} does not match n={n}")
    color_lines = body[1:]
    if len(color_lines) != num_colors:
        raise FormatError(f"expected {num_colors} color lines, got {len(color_lines)}")
    sets = []
    for i, line in enumerate(color_lines, 1):
        prefix = f"color {i}:"
        if not line.startswith(prefix):
            raise FormatError(f"expected {prefix!r}, got {line!r}")
        sets.append([int(tok) for tok in line[len(prefix):].split()])
    return CirculantColoring(spec, sets)


def _parse_explicit(n: int, num_colors: int, body: list[str]) -> ExplicitColoring:
    if len(body) != n - 1:
        raise FormatError(f"expected {n - 1} row lines, got {len(body)}")
    tri = bytearray()
    for u, line in enumerate(body):
        row = line.split()
        if len(row) != n - 1 - u:
            raise FormatError(f"row {u} should list {n - 1 - u} colors, got {len(row)}")
        for tok in row:
            c = int(tok)
            if not 1 <= c <= num_colors:
                raise FormatError(f"color out of range: {c}")
            tri.append(c)
    return ExplicitColoring(n, num_colors, bytes(tri))


def save_coloring(coloring: EdgeColoring, destination) -> None:
    Path(destination).write_bytes(dumps_coloring(coloring).encode("ascii"))


def load_coloring(source) -> EdgeColoring:
    try:
        raw = Path(source).read_bytes()
    except OSError as exc:
        raise FormatError(f"cannot read {source}: {exc}") from exc
    try:
        return loads_coloring(raw.decode("ascii"))
    except UnicodeDecodeError as exc:
        raise FormatError("coloring files are ASCII text") from exc


def coloring_digest(coloring: EdgeColoring) -> str:
    """SHA-256 of the canonical file bytes; ties certificates to colorings."""
    return sha256(dumps_coloring(coloring).encode("ascii")).hexdigest()
