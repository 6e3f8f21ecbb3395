"""Independent brute-force oracles used to cross-check the package."""

from itertools import combinations


def brute_mono_clique(coloring, color, k):
    """Least k-clique of one color by direct enumeration over all k-subsets."""
    for cand in combinations(range(coloring.n), k):
        if all(coloring.edge_color(u, v) == color for u, v in combinations(cand, 2)):
            return cand
    return None


def brute_has_mono_clique(coloring, k):
    """True iff some color contains a k-clique (enumeration oracle)."""
    for cand in combinations(range(coloring.n), k):
        colors = {coloring.edge_color(u, v) for u, v in combinations(cand, 2)}
        if len(colors) == 1:
            return True
    return False


def trial_division_primes(lo, hi):
    out = []
    for n in range(max(lo, 2), hi + 1):
        if all(n % d for d in range(2, int(n**0.5) + 1)):
            out.append(n)
    return out


def multiplicative_order(spec, a):
    """Order of a in the multiplicative group, by repeated multiplication."""
    assert a != 0
    x = a
    order = 1
    while x != 1:
        x = spec.mul(x, a)
        order += 1
    return order
