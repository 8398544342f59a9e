from hallzero.algebra import (
    H0Element,
    canonical_key,
    constant_term,
    f_inverse,
    f_map,
    h0_multiply,
)
from hallzero.degeneration import leq_deg, partitions_of
from hallzero.oracle import hall_number
from hallzero.partitions import ZERO, Partition, parse_partition

P = parse_partition

U = H0Element.basis


def partitions_up_to(n):
    return [p for w in range(n + 1) for p in partitions_of(w)]


class TestH0Element:
    def test_zero_coefficients_dropped(self):
        assert H0Element({P("(2)"): 0}) == H0Element()
        assert H0Element([(P("(2)"), 1), (P("(2)"), -1)]).is_zero()

    def test_arithmetic(self):
        x = U(P("(2)")) + U(P("(1,1)"))
        assert x.coefficient(P("(2)")) == 1
        assert (x - x).is_zero()
        assert 2 * x == x + x
        assert (-x) + x == H0Element()

    def test_mixed_weights_allowed(self):
        x = U(P("(2)")) + U(P("(3,1)"))
        assert {p.weight for p in x.support()} == {2, 4}

    def test_str(self):
        assert str(H0Element()) == "0"
        assert str(U(P("(2)"))) == "u(2)"
        assert str(U(P("(4,1)")) - U(P("(3,1^2)"))) == "u(4,1) - u(3,1^2)"
        assert str(3 * U(P("(1)"))) == "3*u(1)"
        assert str(-2 * U(P("(1)"))) == "-2*u(1)"

    def test_canonical_term_order(self):
        x = U(P("(1^5)")) + U(P("(3,2)")) + U(P("(2)"))
        assert [str(p) for p, _ in x.items()] == ["(2)", "(3,2)", "(1^5)"]

    def test_canonical_key_matches_enumeration(self):
        for n in range(8):
            elements = partitions_of(n)
            assert sorted(elements, key=canonical_key) == elements

    def test_json_terms(self):
        x = U(P("(4,1)")) - U(P("(3,1^2)"))
        assert x.to_json_terms() == [
            {"partition": "(4,1)", "coeff": 1},
            {"partition": "(3,1^2)", "coeff": -1},
        ]


class TestFMap:
    def test_all_ones_is_a_single_term(self):
        for n in range(7):
            ones = Partition((1,) * n)
            assert f_map(ones) == U(ones)

    def test_expansion_of_3_2(self):
        assert f_map(P("(3,2)")) == H0Element(
            {
                P("(1^5)"): 1,
                P("(2,1^3)"): 1,
                P("(2^2,1)"): 1,
                P("(3,1^2)"): 1,
                P("(3,2)"): 1,
            }
        )

    def test_expansion_of_4_1(self):
        assert f_map(P("(4,1)")) == H0Element(
            {
                P("(1^5)"): 1,
                P("(2,1^3)"): 1,
                P("(2^2,1)"): 1,
                P("(3,1^2)"): 1,
                P("(3,2)"): 1,
                P("(4,1)"): 1,
            }
        )


class TestFInverse:
    def test_weight_two(self):
        assert f_inverse(U(P("(1^2)"))) == U(P("(1^2)"))
        assert f_inverse(U(P("(2)"))) == U(P("(2)")) - U(P("(1^2)"))

    def test_inverse_pair(self):
        for p in partitions_up_to(6):
            assert f_inverse(f_map(p)) == U(p)

    def test_zero(self):
        assert f_inverse(H0Element()).is_zero()

    def test_mixed_weights(self):
        x = f_map(P("(2)")) + f_map(P("(2,1)"))
        assert f_inverse(x) == U(P("(2)")) + U(P("(2,1)"))


class TestConstantTerm:
    def test_step_one(self):
        a, b = P("(1^3)"), P("(1^2)")
        for g in ["(1^5)", "(2,1^3)", "(2^2,1)"]:
            assert constant_term(a, b, P(g)) == 1

    def test_step_two(self):
        a, b = P("(1^3)"), P("(2)")
        assert constant_term(a, b, P("(3,1^2)")) == 1
        assert constant_term(a, b, P("(2,1^3)")) == 0

    def test_step_three(self):
        a, b = P("(2,1)"), P("(1^2)")
        assert constant_term(a, b, P("(2,1^3)")) == 0
        assert constant_term(a, b, P("(2^2,1)")) == 0
        assert constant_term(a, b, P("(3,1^2)")) == 1
        assert constant_term(a, b, P("(3,2)")) == 1

    def test_step_four(self):
        a, b = P("(2,1)"), P("(2)")
        assert constant_term(a, b, P("(2^2,1)")) == 0
        assert constant_term(a, b, P("(3,2)")) == 0
        assert constant_term(a, b, P("(4,1)")) == 1
        assert constant_term(a, b, P("(3,1^2)")) == -1

    def test_weight_mismatch_is_zero(self):
        assert constant_term(P("(2)"), P("(1)"), P("(2)")) == 0

    def test_support_lies_above_generic_extension(self):
        for a in partitions_up_to(6):
            for b in partitions_up_to(6):
                if a.weight + b.weight > 6:
                    continue
                product = h0_multiply(U(a), U(b))
                for g, coeff in product.items():
                    assert coeff != 0
                    assert leq_deg(a + b, g)


class TestMultiply:
    def test_known_product(self):
        got = h0_multiply(U(P("(2,1)")), U(P("(2)")))
        assert got == U(P("(4,1)")) - U(P("(3,1^2)"))

    def test_unit(self):
        one = U(ZERO)
        x = U(P("(2,1)")) + 3 * U(P("(1)"))
        assert h0_multiply(one, x) == x
        assert h0_multiply(x, one) == x

    def test_grouped_factors_reproduce_embedding(self):
        lhs = h0_multiply(
            U(P("(2,1)")) + U(P("(1^3)")), U(P("(1^2)")) + U(P("(2)"))
        )
        assert lhs == f_map(P("(4,1)"))

    def test_multiplicativity_of_embedding(self):
        for a in partitions_up_to(5):
            for b in partitions_up_to(5):
                if a.weight + b.weight > 5:
                    continue
                assert h0_multiply(f_map(a), f_map(b)) == f_map(a + b)

    def test_associative_on_basis(self):
        parts = partitions_up_to(4)
        for a in parts:
            for b in parts:
                for c in parts:
                    if a.weight + b.weight + c.weight > 6:
                        continue
                    left = h0_multiply(h0_multiply(U(a), U(b)), U(c))
                    right = h0_multiply(U(a), h0_multiply(U(b), U(c)))
                    assert left == right

    def test_bilinear(self):
        a, b, c = U(P("(2)")), U(P("(1,1)")), U(P("(1)"))
        assert h0_multiply(a + b, c) == h0_multiply(a, c) + h0_multiply(b, c)
        assert h0_multiply(c, a + b) == h0_multiply(c, a) + h0_multiply(c, b)

    def test_ones_factors_against_oracle(self):
        for n in range(5):
            for m in range(5 - n):
                a = Partition((1,) * n)
                b = Partition((1,) * m)
                for g in partitions_of(n + m):
                    value = constant_term(a, b, g)
                    assert value in (0, 1)
                    assert (value == 1) == (hall_number(g, a, b, 2) > 0)
