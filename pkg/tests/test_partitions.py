from fractions import Fraction

import pytest

from symquartic.partitions import PARTITIONS_4, is_partition, partitions_of, w_grid


class TestPartitions:
    def test_canonical_degree_four_order(self):
        assert PARTITIONS_4 == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
        assert partitions_of(4) == PARTITIONS_4

    def test_partition_numbers(self):
        expected = {0: 1, 1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11, 7: 15}
        for k, count in expected.items():
            assert len(partitions_of(k)) == count

    def test_reverse_lexicographic(self):
        for k in range(1, 8):
            parts = partitions_of(k)
            assert parts == tuple(sorted(parts, reverse=True))
            assert all(sum(p) == k for p in parts)

    def test_negative_raises(self):
        with pytest.raises(ValueError):
            partitions_of(-1)

    def test_is_partition(self):
        assert is_partition((3, 1))
        assert is_partition(())
        assert not is_partition((1, 3))
        assert not is_partition((2, 0))


class TestWGrid:
    def test_grid_contents(self):
        grid = w_grid(4, 2)
        assert len(grid) == 5
        for w in grid:
            assert sum(w) == 1
            assert all(x * 4 == int(x * 4) for x in w)

    def test_includes_endpoints(self):
        grid = w_grid(5, 2)
        assert (Fraction(0), Fraction(1)) in grid
        assert (Fraction(1), Fraction(0)) in grid
        assert (Fraction(2, 5), Fraction(3, 5)) in grid
