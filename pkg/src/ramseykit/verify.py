"""Exhaustive monochromatic-clique search and certificate production.

This is the brute-force referee for the whole package: it works on any
edge coloring, knows nothing about residues or block composition, and
every clique it reports is re-checked pairwise before being returned.

Candidate sets are int bitmasks (bit v = vertex v), searched in static
ascending vertex order with the usual branch-and-bound prune on
|candidates| < vertices still needed.  For circulant colorings an
optional symmetry mode roots the search at vertex 0: translating any
clique by the negation of its least vertex yields a clique through 0 of
the same color, so existence (and the lexicographically least clique)
are unaffected.
"""

from __future__ import annotations

from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass
from pathlib import Path

from .coloring import EdgeColoring, FormatError, coloring_digest

CERT_HEADER = "ramsey-certificate v1"


def _dfs(rows: list[int], cand: int, need: int, prefix: list[int], stats: list[int]):
    stats[0] += 1
    while cand:
        if cand.bit_count() < need:
            return None
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        if need == 1:
            prefix.append(v)
            return prefix
        nxt = cand & rows[v]
        if nxt.bit_count() >= need - 1:
            prefix.append(v)
            if _dfs(rows, nxt, need - 1, prefix, stats) is not None:
                return prefix
            prefix.pop()
    return None


def _search_roots(rows: list[int], k: int, roots) -> tuple[tuple[int, ...] | None, int]:
    """Least k-clique whose minimum vertex is in roots (ascending), plus
    the number of search nodes visited."""
    stats = [0]
    for r in roots:
        cand = (rows[r] >> (r + 1)) << (r + 1)
        if cand.bit_count() < k - 1:
            continue
        found = _dfs(rows, cand, k - 1, [r], stats)
        if found is not None:
            return tuple(found), stats[0]
    return None, stats[0]


def _clique_worker(args):
    return _search_roots(*args)


def _recheck_clique(coloring: EdgeColoring, color: int, clique) -> None:
    # Self-check, always on: never report a clique without re-validating it.
    for i, u in enumerate(clique):
        for v in clique[i + 1:]:
            if coloring.edge_color(u, v) != color:
                raise AssertionError(
                    f"reported clique {clique} fails recheck on edge ({u}, {v})")


def _resolve_symmetry(coloring: EdgeColoring, symmetry: bool | None) -> bool:
    if symmetry is None:
        return coloring.is_circulant
    if symmetry and not coloring.is_circulant:
        raise ValueError("symmetry mode is only valid for circulant colorings")
    return symmetry


def _find(coloring: EdgeColoring, color: int, k: int, symmetry: bool | None,
          workers: int, deterministic: bool) -> tuple[tuple[int, ...] | None, int]:
    coloring._check_color(color)
    if not 2 <= k <= coloring.n:
        raise ValueError(f"clique size {k} out of range 2..{coloring.n}")
    rooted = _resolve_symmetry(coloring, symmetry)
    rows = coloring.neighbor_rows(color)
    roots = (0,) if rooted else range(coloring.n)

    if workers <= 1 or len(roots) < 2 * workers:
        clique, nodes = _search_roots(rows, k, roots)
    else:
        tasks = [(rows, k, tuple(roots[w::workers])) for w in range(workers)]
        nodes = 0
        if deterministic:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                found = []
                for clique_w, nodes_w in pool.map(_clique_worker, tasks):
                    nodes += nodes_w
                    if clique_w is not None:
                        found.append(clique_w)
            clique = min(found) if found else None
        else:
            # Existence-first: take any clique as soon as one arrives.
            clique = None
            with ProcessPoolExecutor(max_workers=workers) as pool:
                pending = {pool.submit(_clique_worker, t) for t in tasks}
                while pending:
                    done, pending = wait(pending, return_when=FIRST_COMPLETED)
                    for fut in done:
                        clique_w, nodes_w = fut.result()
                        nodes += nodes_w
                        if clique_w is not None and clique is None:
                            clique = clique_w
                    if clique is not None:
                        for fut in pending:
                            fut.cancel()
                        break

    if clique is not None:
        _recheck_clique(coloring, color, clique)
    return clique, nodes


def find_mono_clique(coloring: EdgeColoring, color: int, k: int, *,
                     symmetry: bool | None = None, workers: int = 1,
                     deterministic: bool = True) -> tuple[int, ...] | None:
    """Exhaustive search for a k-clique in one color class.

    Returns None iff no such clique exists.  In deterministic mode the
    returned clique is the lexicographically least, independent of the
    worker count; otherwise any valid clique may be returned.  symmetry
    None means "root at 0 when the coloring is circulant".
    """
    clique, _ = _find(coloring, color, k, symmetry, workers, deterministic)
    return clique


@dataclass(frozen=True)
class VerificationReport:
    """Per-color outcome of checking a coloring against clique targets."""

    targets: tuple[int, ...]
    cliques: tuple[tuple[int, ...] | None, ...]
    nodes: int
    deterministic: bool = True

    @property
    def passed(self) -> bool:
        return all(c is None for c in self.cliques)

    def summary(self) -> str:
        parts = []
        for i, (k, c) in enumerate(zip(self.targets, self.cliques), 1):
            parts.append(f"color {i}: no K_{k}" if c is None
                         else f"color {i}: K_{k} at {','.join(map(str, c))}")
        return "; ".join(parts)


def verify_witness(coloring: EdgeColoring, targets, *, symmetry: bool | None = None,
                   workers: int = 1, deterministic: bool = True) -> VerificationReport:
    """Check that color i contains no K_{targets[i]}, for every color."""
    targets = tuple(int(k) for k in targets)
    if len(targets) != coloring.num_colors:
        raise ValueError(
            f"{len(targets)} targets for {coloring.num_colors} colors")
    if any(k < 2 for k in targets):
        raise ValueError("clique targets must be >= 2")
    cliques = []
    nodes = 0
    for color, k in enumerate(targets, 1):
        if k > coloring.n:
            cliques.append(None)  # K_k cannot fit at all
            continue
        clique, n_nodes = _find(coloring, color, k, symmetry, workers, deterministic)
        nodes += n_nodes
        cliques.append(clique)
    return VerificationReport(targets, tuple(cliques), nodes,
                              deterministic=(workers <= 1 or deterministic))


@dataclass(frozen=True)
class RamseyCertificate:
    """Re-checkable record tying a verification verdict to a coloring digest.

    A passing certificate for targets (k1, ..., kC) on n vertices asserts
    R(k1, ..., kC) >= n + 1.
    """

    targets: tuple[int, ...]
    n: int
    passed: bool
    coloring_sha: str
    clique_color: int | None = None
    clique: tuple[int, ...] | None = None

    @property
    def bound(self) -> int | None:
        return self.n + 1 if self.passed else None

    def statement(self) -> str:
        ks = ",".join(map(str, self.targets))
        return f"R({ks})>={self.n + 1}"

    def to_text(self) -> str:
        lines = [CERT_HEADER,
                 "targets=" + ",".join(map(str, self.targets)),
                 f"n={self.n}",
                 f"verdict={'pass' if self.passed else 'fail'}"]
        if self.passed:
            lines.append(f"bound={self.statement()}")
        else:
            lines.append(f"clique={self.clique_color}:" + ",".join(map(str, self.clique)))
        lines.append(f"coloring-sha={self.coloring_sha}")
        return "\n".join(lines) + "\n"


def certify(coloring: EdgeColoring, targets, out=None, *, symmetry: bool | None = None,
            workers: int = 1, deterministic: bool = True) -> RamseyCertificate:
    """Verify a coloring and (optionally) write the certificate file."""
    report = verify_witness(coloring, targets, symmetry=symmetry, workers=workers,
                            deterministic=deterministic)
    if report.passed:
        cert = RamseyCertificate(report.targets, coloring.n, True, coloring_digest(coloring))
    else:
        color = next(i for i, c in enumerate(report.cliques, 1) if c is not None)
        cert = RamseyCertificate(report.targets, coloring.n, False, coloring_digest(coloring),
                                 clique_color=color, clique=report.cliques[color - 1])
    if out is not None:
        Path(out).write_text(cert.to_text(), encoding="ascii")
    return cert


def read_certificate(source) -> RamseyCertificate:
    """Parse a certificate file back into a RamseyCertificate."""
    lines = Path(source).read_text(encoding="ascii").splitlines()
    if not lines or lines[0] != CERT_HEADER:
        raise FormatError(f"missing or unsupported certificate header "
                          f"(expected {CERT_HEADER!r})")
    fields = {}
    for line in lines[1:]:
        key, _, value = line.partition("=")
        fields[key] = value
    try:
        targets = tuple(int(k) for k in fields["targets"].split(","))
        passed = fields["verdict"] == "pass"
        clique_color = clique = None
        if not passed:
            color_part, _, verts = fields["clique"].partition(":")
            clique_color = int(color_part)
            clique = tuple(int(v) for v in verts.split(","))
        return RamseyCertificate(targets, int(fields["n"]), passed, fields["coloring-sha"],
                                 clique_color=clique_color, clique=clique)
    except (KeyError, ValueError) as exc:
        raise FormatError(f"malformed certificate: {exc}") from exc
