import pytest

from trideal.counting import (
    binomial,
    franel,
    lhs_sum,
    red_distinct_count,
    red_prefix_sum,
    red_set_count,
    rhs_sum,
    vandermonde_inner,
)

# Frozen from the brute-force enumeration oracle (see test_enumeration).
SEQUENCE = [1, 3, 15, 93, 639, 4653]
FRANEL = [1, 2, 10, 56, 346]


def pascal_triangle(rows):
    """Independent cross-check: binomials by the additive recurrence only."""
    triangle = [[1]]
    for n in range(1, rows + 1):
        prev = triangle[-1]
        triangle.append(
            [1] + [prev[k - 1] + prev[k] for k in range(1, n)] + [1]
        )
    return triangle


class TestBinomial:
    def test_values(self):
        assert binomial(4, 2) == 6
        assert binomial(0, 0) == 1
        assert binomial(5, 7) == 0
        assert binomial(5, -1) == 0

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)

    def test_matches_pascal_triangle(self):
        triangle = pascal_triangle(30)
        for n in range(31):
            for k in range(n + 1):
                assert binomial(n, k) == triangle[n][k]

    def test_symmetry(self):
        for n in range(31):
            for k in range(n + 1):
                assert binomial(n, k) == binomial(n, n - k)


class TestFranel:
    def test_small_values(self):
        assert [franel(n) for n in range(5)] == FRANEL

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            franel(-2)


class TestIdentity:
    def test_sequence_values(self):
        assert [lhs_sum(n) for n in range(6)] == SEQUENCE
        assert [rhs_sum(n) for n in range(6)] == SEQUENCE

    def test_sides_agree_up_to_30(self):
        for n in range(31):
            assert lhs_sum(n) == rhs_sum(n)

    def test_values_are_exact_beyond_machine_words(self):
        value = rhs_sum(60)
        assert value == lhs_sum(60)
        assert value > 2 ** 64

    def test_consistency_with_bucket_counts(self):
        for n in range(21):
            assert sum(red_distinct_count(n, k) for k in range(n + 1)) == rhs_sum(n)
            assert sum(binomial(n, k) * franel(k) for k in range(n + 1)) == lhs_sum(n)


class TestBucketCounts:
    def test_red_set_count_at_n2(self):
        assert red_set_count(2, 0) == 1
        assert red_set_count(2, 1) == 4
        assert red_set_count(2, 2) == 6

    def test_red_distinct_count_at_n2(self):
        assert red_distinct_count(2, 0) == 1
        assert red_distinct_count(2, 1) == 8
        assert red_distinct_count(2, 2) == 6

    @pytest.mark.parametrize("fn", [red_set_count, red_distinct_count])
    def test_k_out_of_range_rejected(self, fn):
        with pytest.raises(ValueError):
            fn(2, 3)
        with pytest.raises(ValueError):
            fn(2, -1)


class TestVandermonde:
    def test_examples(self):
        assert vandermonde_inner(2, 1) == 6
        assert vandermonde_inner(0, 0) == 1
        assert vandermonde_inner(3, 3) == 20

    def test_inner_sum_is_central_binomial_for_every_a(self):
        for k in range(13):
            for a in range(k + 1):
                assert vandermonde_inner(k, a) == binomial(2 * k, k)

    def test_outer_convolution_collapses(self):
        for n in range(13):
            for k in range(n + 1):
                total = sum(
                    binomial(k, a) * binomial(n - k, n - k - a) for a in range(k + 1)
                )
                assert total == binomial(n, k)

    def test_a_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            vandermonde_inner(2, 3)


class TestPrefixSum:
    def test_values(self):
        assert [red_prefix_sum(n) for n in range(4)] == [1, 3, 11, 45]

    def test_definition(self):
        for n in range(10):
            assert red_prefix_sum(n) == sum(red_set_count(n, k) for k in range(n + 1))
