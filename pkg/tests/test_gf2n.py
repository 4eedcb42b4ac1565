"""GF(2^n) log/antilog arithmetic."""

import pytest

from nsqs import DEFAULT_PRIMITIVE_POLYS, Gf2nField, InvalidFieldError


@pytest.mark.parametrize("n", sorted(DEFAULT_PRIMITIVE_POLYS))
def test_default_polys_build(n):
    field = Gf2nField(n)
    assert field.order == (1 << n) - 1
    # exp table hits every nonzero element exactly once
    assert sorted(field.exp_table) == list(range(1, 1 << n))


def test_log_exp_inverse():
    field = Gf2nField(5)
    for i in range(field.order):
        assert field.log(field.exp(i)) == i
    for x in range(1, 32):
        assert field.exp(field.log(x)) == x


def test_non_primitive_modulus_rejected():
    # x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5, not 15
    with pytest.raises(InvalidFieldError):
        Gf2nField(4, 0b11111)


def test_reducible_modulus_rejected():
    with pytest.raises(InvalidFieldError):
        Gf2nField(4, 0b10101)  # x^4 + x^2 + 1 = (x^2 + x + 1)^2


def test_wrong_degree_rejected():
    with pytest.raises(InvalidFieldError):
        Gf2nField(4, 0b1011)


def test_mul_properties():
    field = Gf2nField(4)
    for a in range(16):
        assert field.mul(a, 1) == a
        assert field.mul(a, 0) == 0
        for b in range(16):
            assert field.mul(a, b) == field.mul(b, a)
    # spot-check associativity and distributivity
    for a in (3, 7, 11):
        for b in (2, 9, 14):
            for c in (5, 6, 13):
                assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
                assert field.mul(a, field.add(b, c)) == field.add(
                    field.mul(a, b), field.mul(a, c)
                )


def test_add_is_xor():
    field = Gf2nField(3)
    assert field.add(0b101, 0b011) == 0b110


def test_bool32_poly_is_default():
    assert DEFAULT_PRIMITIVE_POLYS[5] == 0b100101  # x^5 + x^2 + 1


def test_log_of_zero_rejected():
    field = Gf2nField(3)
    with pytest.raises(InvalidFieldError):
        field.log(0)
