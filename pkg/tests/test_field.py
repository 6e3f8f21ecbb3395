"""Field arithmetic, canonical moduli, and admissible order enumeration."""

import pytest

from ramseykit.field import (
    FieldSpec,
    admissible_orders,
    canonical_modulus,
    is_prime,
    make_field,
    multiplicative_generator,
)

from helpers import multiplicative_order, trial_division_primes


def test_is_prime_matches_trial_division():
    reference = set(trial_division_primes(2, 2000))
    for n in range(2000):
        assert is_prime(n) == (n in reference), n


def test_admissible_orders_primes_mod3():
    orders = [s.order for s in admissible_orders(3, 2, 20, prime_only=True)]
    # oracle: direct enumeration of primes p with 3 | p - 1
    expected = [p for p in trial_division_primes(2, 20) if (p - 1) % 3 == 0]
    assert expected == [7, 13, 19]
    assert orders == expected


def test_admissible_orders_includes_241():
    assert (241 - 1) % 3 == 0
    assert [s.order for s in admissible_orders(3, 241, 241, prime_only=True)] == [241]


def test_admissible_orders_empty():
    assert admissible_orders(2, 2, 2, prime_only=True) == []


def test_admissible_orders_prime_powers():
    orders = [s.order for s in admissible_orders(3, 2, 20)]
    assert orders == [4, 7, 13, 16, 19]
    gf16 = admissible_orders(3, 16, 16)[0]
    assert (gf16.characteristic, gf16.degree) == (2, 4)


@pytest.mark.parametrize("m,lo,hi", [(2, 2, 200), (3, 2, 200), (4, 2, 120), (6, 2, 300)])
def test_admissible_orders_divisibility(m, lo, hi):
    for spec in admissible_orders(m, lo, hi):
        assert (spec.order - 1) % m == 0


def test_make_field_prime():
    f = make_field(5)
    assert (f.characteristic, f.degree, f.order) == (5, 1, 5)
    assert f.modulus_poly is None


def test_make_field_rejects_bad_args():
    with pytest.raises(ValueError):
        make_field(4)
    with pytest.raises(ValueError):
        make_field(5, 0)


def test_canonical_modulus_gf16():
    # oracle: mark every product of lower-degree monic polynomials over Z_2
    # as reducible; the least remaining degree-4 encoding must win.
    def mul_bits(a, b):
        out = 0
        while b:
            if b & 1:
                out ^= a
            a <<= 1
            b >>= 1
        return out

    reducible = set()
    for d1 in (1, 2, 3):
        d2 = 4 - d1
        for a in range(1 << d1, 1 << (d1 + 1)):
            for b in range(1 << d2, 1 << (d2 + 1)):
                reducible.add(mul_bits(a, b))
    least = min(f for f in range(1 << 4, 1 << 5) if f not in reducible)
    assert least == 0b10011  # x^4 + x + 1
    assert canonical_modulus(2, 4) == (1, 1, 0, 0, 1)
    assert make_field(2, 4).modulus_poly == (1, 1, 0, 0, 1)


def test_field_spec_rejects_reducible_modulus():
    with pytest.raises(ValueError, match="reducible"):
        FieldSpec(2, 4, (1, 0, 0, 0, 1))  # x^4 + 1 = (x + 1)^4
    with pytest.raises(ValueError):
        FieldSpec(2, 4, (1, 1, 0, 0, 2))  # not monic over Z_2
    with pytest.raises(ValueError):
        FieldSpec(5, 1, (1, 1))  # prime fields take no modulus


def test_prime_field_ops():
    f = make_field(7)
    assert f.inv(3) == 5  # 3 * 5 = 15 = 1 mod 7
    assert f.mul(4, 1) == 4
    assert f.add(5, 4) == 2
    assert f.sub(2, 5) == 4
    assert f.pow(3, 6) == 1
    with pytest.raises(ValueError):
        f.inv(0)


def test_gf16_reduction():
    f = make_field(2, 4)
    x3 = f.element([0, 0, 0, 1])
    x = f.element([0, 1])
    assert f.mul(x3, x) == f.element([1, 1])  # x^4 = x + 1 under the modulus
    assert f.coeffs(f.mul(x3, x)) == (1, 1, 0, 0)


def _all_fields_up_to(limit):
    """Every field of order <= limit: all primes plus all prime powers."""
    specs = [make_field(p) for p in trial_division_primes(2, limit)]
    for p in trial_division_primes(2, int(limit**0.5) + 1):
        k = 2
        while p**k <= limit:
            specs.append(make_field(p, k))
            k += 1
    return sorted(specs, key=lambda s: s.order)


def test_inv_is_involutive_all_orders_up_to_256():
    for spec in _all_fields_up_to(256):
        for a in range(1, spec.order):
            inv = spec.inv(a)
            assert spec.mul(a, inv) == 1
            assert spec.inv(inv) == a


def test_multiplicative_group_cyclic_all_orders_up_to_256():
    for spec in _all_fields_up_to(256):
        g = multiplicative_generator(spec)
        assert multiplicative_order(spec, g) == spec.order - 1


@pytest.mark.parametrize("spec", [make_field(61), make_field(2, 6), make_field(3, 3),
                                  make_field(7, 2)])
def test_distributivity_exhaustive(spec):
    n = spec.order
    assert n <= 64
    for a in range(n):
        for b in range(n):
            ab = spec.mul(a, b)
            for c in range(n):
                assert spec.mul(a, spec.add(b, c)) == spec.add(ab, spec.mul(a, c))


def test_pow_square_and_multiply_agrees_with_repeated_mul():
    spec = make_field(3, 2)
    for a in range(spec.order):
        acc = 1
        for e in range(10):
            assert spec.pow(a, e) == acc
            acc = spec.mul(acc, a)


def test_element_encoding_round_trip():
    spec = make_field(5, 3)
    for a in (0, 1, 7, 124):
        assert spec.element(spec.coeffs(a)) == a
    with pytest.raises(ValueError):
        spec.coeffs(125)
    with pytest.raises(ValueError):
        spec.element([5, 0, 0])
