"""Triple-copy block composition of witness colorings.

Given a witness T on nT vertices in r+2 colors (no triangle in colors 1
or 2, no K_{k_i} in color i+2) and a witness G on nG vertices in r colors
(no K_{k_i} in color i), the composed coloring H lives on 3*nT + nG
vertices and uses r+3 colors.  H consists of three recolored copies of T
on the diagonal, three cross blocks between the copies, constant-color
strips joining every G vertex to each copy, and a copy of G with all its
colors shifted up by 3:

    copy 1          A
    copy 2          D  B
    copy 3          E  F  C
    G part          1  2  3  G+3

Each block maps T's colors 1 and 2 through a fixed permutation pattern
and shifts every color >= 3 up by one; cross blocks also color the
same-index vertex pairs (the block "diagonal") with a fixed constant.
The pattern is chosen so colors 1..3 stay triangle-free and so the
positions of every color >= 4 are identical in all six blocks, which
pins any high-colored clique of H back into a single copy of T.

If both inputs verify against their targets, H verifies against
(3, 3, 3, k_1, ..., k_r), giving the bound
R(3,3,3,k_1,...,k_r) >= 3*(nT+1) + (nG+1) - 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import MAX_COLORS, MAX_VERTICES, EdgeColoring, ExplicitColoring
from . import verify as verify_mod


class CompositionError(ValueError):
    """An input failed validation: it contains a forbidden monochromatic clique."""

    def __init__(self, which: str, color: int, clique: tuple[int, ...]):
        self.which = which
        self.color = color
        self.clique = clique
        super().__init__(
            f"{which} input is not a valid witness: color {color} contains the "
            f"clique {','.join(map(str, clique))}")


@dataclass(frozen=True)
class BlockMap:
    """How one block recolors T: a diagonal constant, images of colors 1
    and 2, and the uniform +1 shift for colors >= 3."""

    diag: int
    color1: int
    color2: int

    def apply(self, c: int) -> int:
        if c == 1:
            return self.color1
        if c == 2:
            return self.color2
        return c + 1


@dataclass(frozen=True)
class BlockPlan:
    """Placement and color maps for the six T-derived blocks.

    ``diagonal[i]`` recolors copy i+1; ``cross`` maps (row copy, column
    copy) positions to their block; ``strip_colors`` are the constant
    colors of the G-to-copy edges.
    """

    diagonal: tuple[BlockMap, BlockMap, BlockMap]
    cross: tuple[tuple[tuple[int, int], BlockMap], ...]
    strip_colors: tuple[int, int, int] = (1, 2, 3)


# The one configuration (up to renaming) whose colors 1..3 stay triangle-free.
CHUNG_PLAN = BlockPlan(
    diagonal=(BlockMap(0, 2, 3), BlockMap(0, 3, 1), BlockMap(0, 1, 2)),
    cross=(((2, 1), BlockMap(3, 2, 1)),
           ((3, 1), BlockMap(2, 1, 3)),
           ((3, 2), BlockMap(1, 3, 2))),
)


@dataclass(frozen=True)
class CompositionInput:
    """A (3,3,k1,...,kr) witness T, a (k1,...,kr) witness G, and the targets."""

    t_witness: EdgeColoring
    g_witness: EdgeColoring
    targets: tuple[int, ...]

    def __post_init__(self):
        targets = tuple(int(k) for k in self.targets)
        object.__setattr__(self, "targets", targets)
        r = len(targets)
        if r < 1:
            raise ValueError("need at least one clique target")
        if any(k < 3 for k in targets):
            raise ValueError("clique targets must be >= 3")
        if self.t_witness.num_colors != r + 2:
            raise ValueError(
                f"T must use {r + 2} colors for {r} targets, has {self.t_witness.num_colors}")
        if self.g_witness.num_colors != r:
            raise ValueError(
                f"G must use {r} colors for {r} targets, has {self.g_witness.num_colors}")
        if r + 3 > MAX_COLORS:
            raise ValueError("composed coloring would exceed the color limit")
        if 3 * self.t_witness.n + self.g_witness.n > MAX_VERTICES:
            raise ValueError("composed coloring would exceed the vertex limit")


def chung_compose(comp: CompositionInput, validate: bool = True, *,
                  workers: int = 1) -> ExplicitColoring:
    """Assemble the composed witness H (always explicit).

    With validate set (the default), both inputs are first verified
    against their intended targets; composing from an invalid witness
    silently produces garbage bounds, so opting out is only sensible for
    pre-certified inputs.
    """
    T, G, targets = comp.t_witness, comp.g_witness, comp.targets
    if validate:
        report = verify_mod.verify_witness(T, (3, 3) + targets, workers=workers)
        if not report.passed:
            color = next(i for i, c in enumerate(report.cliques, 1) if c is not None)
            raise CompositionError("T", color, report.cliques[color - 1])
        report = verify_mod.verify_witness(G, targets, workers=workers)
        if not report.passed:
            color = next(i for i, c in enumerate(report.cliques, 1) if c is not None)
            raise CompositionError("G", color, report.cliques[color - 1])

    nT, nG = T.n, G.n
    n = 3 * nT + nG
    tE = T.to_explicit()
    gE = G.to_explicit()
    plan = CHUNG_PLAN

    row_start = []
    pos = 0
    for u in range(n):
        row_start.append(pos)
        pos += n - 1 - u
    tri = bytearray(pos)

    def put(u: int, v: int, c: int) -> None:
        if u > v:
            u, v = v, u
        tri[row_start[u] + v - u - 1] = c

    for copy, bm in enumerate(plan.diagonal):
        base = copy * nT
        for i in range(nT):
            for j in range(i + 1, nT):
                put(base + i, base + j, bm.apply(tE.edge_color(i, j)))

    for (row_copy, col_copy), bm in plan.cross:
        rb = (row_copy - 1) * nT
        cb = (col_copy - 1) * nT
        for i in range(nT):
            for j in range(nT):
                c = bm.diag if i == j else bm.apply(tE.edge_color(i, j))
                put(rb + i, cb + j, c)

    gbase = 3 * nT
    for gi in range(nG):
        for copy in range(3):
            strip = plan.strip_colors[copy]
            base = copy * nT
            for i in range(nT):
                put(base + i, gbase + gi, strip)

    for i in range(nG):
        for j in range(i + 1, nG):
            put(gbase + i, gbase + j, gE.edge_color(i, j) + 3)

    return ExplicitColoring(n, len(targets) + 3, bytes(tri))


def bound_value(M: int, R: int) -> int:
    """Lower bound 3*M + R - 3 implied by composing witnesses of sizes
    M-1 and R-1 (M, R being the bounds the inputs certify)."""
    if M < 2 or R < 2:
        raise ValueError("input bounds must be >= 2")
    return 3 * M + R - 3
