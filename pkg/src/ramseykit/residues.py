"""m-th power residue cosets and the normalized monochromatic-clique search.

The nonzero elements of a finite field split into the m cosets of the
subgroup of m-th powers whenever m divides the group order.  A Cayley
coloring built from those cosets contains a monochromatic K_t exactly
when a "normalized" witness exists: a set {1, B1, ..., B_{t-2}} whose
elements, elements minus one, and pairwise differences all lie in the
residue subgroup.  (Translate the clique so one vertex is 0, then scale
by the inverse of another; both operations map the difference set of a
clique into the coset containing 1.)  This module searches for such
witnesses directly, which is dramatically cheaper than clique search on
the full coloring.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .field import FieldSpec, multiplicative_generator

_NO_LABEL = 255


class CosetPartition:
    """The m cosets of the m-th power residues of a field's nonzero elements.

    ``cosets[0]`` is the residue subgroup itself (the coset containing 1);
    ``cosets[i]`` is g^i times it, where g is the least multiplicative
    generator.  With that labeling, multiplying elements of cosets i and j
    always lands in coset (i + j) mod m.
    """

    __slots__ = ("field", "m", "cosets", "_labels")

    def __init__(self, field: FieldSpec, m: int, cosets, labels: bytes):
        self.field = field
        self.m = m
        self.cosets = cosets
        self._labels = labels

    def __getstate__(self):
        return self.field, self.m, self.cosets, self._labels

    def __setstate__(self, state):
        self.field, self.m, self.cosets, self._labels = state

    def __eq__(self, other):
        if not isinstance(other, CosetPartition):
            return NotImplemented
        return (self.field, self.m, self.cosets) == (other.field, other.m, other.cosets)

    def __repr__(self):
        return f"CosetPartition({self.field}, m={self.m})"

    @property
    def residues(self) -> tuple[int, ...]:
        return self.cosets[0]

    def coset_of(self, x: int) -> int:
        """0-based coset label of a nonzero element."""
        label = self._labels[x]
        if label == _NO_LABEL:
            raise ValueError(f"{x} is not a nonzero field element")
        return label

    def is_residue(self, x: int) -> bool:
        return self._labels[x] == 0


def power_cosets(field: FieldSpec, m: int) -> CosetPartition:
    """Partition the nonzero elements into the m cosets of the m-th powers."""
    n = field.order
    if not 2 <= m <= 254:
        raise ValueError("m must be in [2, 254]")
    if (n - 1) % m:
        raise ValueError(f"{m} does not divide {n - 1} = |{field}*|")

    if field.degree == 1:
        residues = sorted({pow(x, m, n) for x in range(1, n)})
    else:
        residues = sorted({field.pow(x, m) for x in range(1, n)})
    if len(residues) != (n - 1) // m:
        raise AssertionError("residue subgroup has unexpected size")

    labels = bytearray([_NO_LABEL]) * n
    for x in residues:
        labels[x] = 0
    cosets = [tuple(residues)]
    g = multiplicative_generator(field)
    shift = 1
    for i in range(1, m):
        shift = field.mul(shift, g)
        coset = sorted(field.mul(shift, h) for h in residues)
        for y in coset:
            if labels[y] != _NO_LABEL:
                raise AssertionError("coset translates overlap; generator is wrong")
            labels[y] = i
        cosets.append(tuple(coset))
    return CosetPartition(field, m, tuple(cosets), bytes(labels))


def negation_closed(partition: CosetPartition) -> bool:
    """True iff -1 lies in the residue subgroup.

    Always true for odd m; for even m it depends on the field (e.g. for
    m = 2 and prime p it holds exactly when p = 1 mod 4).  When false,
    coloring edges by the coset of the vertex difference is ill-defined.
    """
    return partition.is_residue(partition.field.neg(1))


def sieve(partition: CosetPartition) -> list[int]:
    """Residues R != 1 with R - 1 also a residue, ascending.

    These are the only possible members of a normalized witness: each
    witness element B must itself be a residue (difference from vertex 0)
    and B - 1 must be one too (difference from vertex 1).
    """
    f = partition.field
    labels = partition._labels
    return [r for r in partition.cosets[0] if r != 1 and labels[f.sub(r, 1)] == 0]


@dataclass(frozen=True)
class NormalizedWitness:
    """A set {1, B1, ..., B_{t-2}} certifying a monochromatic K_t.

    Adding the vertex 0 gives a t-clique of the Cayley coloring whose
    pairwise differences all lie in the residue subgroup.
    """

    t: int
    elements: tuple[int, ...]

    def __post_init__(self):
        if self.t < 3:
            raise ValueError("witness clique size must be >= 3")
        if len(self.elements) != self.t - 1:
            raise ValueError("witness must contain t - 1 elements")
        if 1 not in self.elements:
            raise ValueError("witness must contain 1")
        if len(set(self.elements)) != len(self.elements) or 0 in self.elements:
            raise ValueError("witness elements must be distinct and nonzero")

    def vertices(self) -> tuple[int, ...]:
        """The monochromatic clique this witness describes."""
        return (0,) + tuple(sorted(self.elements))


def _subset_search(field: FieldSpec, labels: bytes, sv: tuple[int, ...], need: int,
                   first_indices) -> tuple[int, ...] | None:
    """Least `need`-subset of sv, first element restricted to first_indices,
    with every pairwise difference in coset 0.  Lexicographic by element."""
    n_sv = len(sv)
    if field.degree == 1:
        p = field.characteristic

        def diff_ok(x, chosen):
            for y in chosen:
                if labels[(x - y) % p]:
                    return False
            return True
    else:
        fsub = field.sub

        def diff_ok(x, chosen):
            for y in chosen:
                if labels[fsub(x, y)]:
                    return False
            return True

    def extend(start: int, chosen: list[int]):
        rem = need - len(chosen)
        if rem == 0:
            return tuple(chosen)
        for i in range(start, n_sv - rem + 1):
            x = sv[i]
            if diff_ok(x, chosen):
                chosen.append(x)
                found = extend(i + 1, chosen)
                if found is not None:
                    return found
                chosen.pop()
        return None

    for i in first_indices:
        if i > n_sv - need:
            continue
        found = extend(i + 1, [sv[i]])
        if found is not None:
            return found
    return None


def _subset_worker(args):
    return _subset_search(*args)


def find_normalized_clique(partition: CosetPartition, t: int,
                           workers: int = 1) -> NormalizedWitness | None:
    """Search for a normalized monochromatic-K_t witness.

    Returns the lexicographically least witness (under the canonical
    element order) or None if the Cayley coloring built from this
    partition contains no monochromatic K_t in any color.  Subsets are
    enumerated in ascending lexicographic order over the sieved residue
    list, and the result is independent of the worker count.
    """
    if t < 3:
        raise ValueError("clique size t must be >= 3")
    if not negation_closed(partition):
        raise ValueError(
            "-1 is not an m-th power residue: the coset coloring is ill-defined "
            "and the normalized search does not apply")
    sv = tuple(sieve(partition))
    need = t - 2
    n_first = len(sv) - need + 1
    if n_first <= 0:
        return None

    if workers <= 1 or n_first < 2 * workers:
        found = _subset_search(partition.field, partition._labels, sv, need, range(n_first))
    else:
        tasks = [(partition.field, partition._labels, sv, need, tuple(range(w, n_first, workers)))
                 for w in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [r for r in pool.map(_subset_worker, tasks) if r is not None]
        found = min(results) if results else None

    if found is None:
        return None
    witness = NormalizedWitness(t, (1,) + found)
    _check_witness(partition, witness)
    return witness


def _check_witness(partition: CosetPartition, witness: NormalizedWitness) -> None:
    # Internal re-validation, always on: every element, element - 1, and
    # pairwise difference must be a residue.
    f = partition.field
    elems = witness.elements
    for x in elems:
        if not partition.is_residue(x):
            raise AssertionError(f"witness element {x} is not a residue")
        if x != 1 and not partition.is_residue(f.sub(x, 1)):
            raise AssertionError(f"witness element {x} - 1 is not a residue")
    for i, x in enumerate(elems):
        for y in elems[i + 1:]:
            if not partition.is_residue(f.sub(y, x)):
                raise AssertionError(f"witness difference {y} - {x} is not a residue")
