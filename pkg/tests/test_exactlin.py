import numpy as np
import pytest

from permsym.errors import InputError
from permsym.exactlin import (
    BUILTIN_BINARY_MODULUS,
    FieldSpec,
    binary_field,
    field_create,
    field_inv,
    mat_gauss,
    mat_rank,
    poly_mod,
    poly_mul,
    prime_field,
)

PRIMES_TO_101 = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                 59, 61, 67, 71, 73, 79, 83, 89, 97, 101]


def test_prime_field_basics():
    F = prime_field(3)
    assert F.add(1, 2) == 0
    assert F.mul(2, 2) == 1
    assert F.neg(1) == 2


def test_binary_field_cube_of_x():
    # GF(8) with modulus x^3 + x + 1: x * x * x = x + 1
    F = binary_field(3)
    x = 0b010
    assert F.mul(F.mul(x, x), x) == 0b011


def test_non_prime_rejected():
    with pytest.raises(InputError, match="not prime"):
        prime_field(4)


def test_reducible_modulus_names_divisor():
    # x^4 + 1 = (x+1)^4 over F_2
    with pytest.raises(InputError, match="reducible.*x\\+1"):
        binary_field(4, 0b10001)


def test_field_create_from_spec():
    F = field_create(FieldSpec(kind="prime", p=5))
    assert F.mul(2, 3) == 1
    G = field_create(FieldSpec(kind="binary", m=2))
    assert G.mul(0b10, 0b10) == 0b11  # x^2 = x + 1 under x^2+x+1
    with pytest.raises(InputError):
        field_create(FieldSpec(kind="ternary"))


def test_inverse_examples():
    assert field_inv(prime_field(5), 2) == 3
    assert field_inv(prime_field(7), 1) == 1
    with pytest.raises(InputError, match="zero"):
        field_inv(prime_field(5), 0)


def test_gf8_inverse_of_x_against_table_oracle():
    # independent oracle: full multiplication table from raw polynomial ops
    mod = BUILTIN_BINARY_MODULUS[3]
    table = {(a, b): poly_mod(poly_mul(a, b), mod) for a in range(8) for b in range(8)}
    inverses = {a: b for (a, b), v in table.items() if v == 1}
    assert inverses[0b010] == 0b101  # x -> x^2 + 1
    F = binary_field(3)
    for a in range(1, 8):
        assert F.inv(a) == inverses[a]


def test_inverse_property_all_elements():
    for p in PRIMES_TO_101:
        F = prime_field(p)
        for a in range(1, p):
            assert F.mul(a, F.inv(a)) == 1
    for m in (1, 2, 3, 4, 5):
        F = binary_field(m, 0b10011 if m == 4 else None)
        for a in range(1, F.order):
            assert F.mul(a, F.inv(a)) == 1


def test_gauss_identity_and_zero():
    F2 = prime_field(2)
    res = mat_gauss(np.eye(3, dtype=np.int64), F2)
    assert res.rank == 3 and res.nullspace.shape[0] == 0
    F3 = prime_field(3)
    res = mat_gauss(np.zeros((2, 2), dtype=np.int64), F3)
    assert res.rank == 0 and res.nullspace.shape[0] == 2


def test_gauss_all_ones_hand_oracle():
    # 3x3 all-ones over F_3 row-reduces by hand to a single nonzero row
    F3 = prime_field(3)
    res = mat_gauss(np.ones((3, 3), dtype=np.int64), F3)
    assert res.rank == 1
    assert res.nullspace.shape[0] == 2
    assert np.array_equal(res.rref[0], [1, 1, 1])
    assert not res.rref[1:].any()


@pytest.mark.parametrize("seed", range(8))
def test_gauss_properties_random(seed):
    rng = np.random.default_rng(seed)
    p = [2, 3, 5, 7][seed % 4]
    F = prime_field(p)
    a = rng.integers(0, p, size=(rng.integers(1, 10), rng.integers(1, 10))).astype(np.int64)
    res = mat_gauss(a, F)
    assert res.rank + res.nullspace.shape[0] == a.shape[1]
    assert mat_rank(a, F) == mat_rank(a.T, F)
    for v in res.nullspace:
        assert not (a @ v % p).any()


def test_gauss_binary_field():
    F = binary_field(2)
    a = np.array([[0b10, 0b11], [0b11, 0b01]], dtype=np.int64)
    res = mat_gauss(a, F)
    assert res.rank + res.nullspace.shape[0] == 2
    for v in res.nullspace:
        # check M v = 0 with field arithmetic
        for row in a:
            acc = 0
            for entry, x in zip(row, v):
                acc = F.add(acc, F.mul(int(entry), int(x)))
            assert acc == 0
    assert mat_rank(a, F) == mat_rank(a.T, F)


def test_empty_matrix_allowed():
    F = prime_field(5)
    res = mat_gauss(np.zeros((0, 4), dtype=np.int64), F)
    assert res.rank == 0 and res.nullspace.shape[0] == 4
