import math

import pytest

from howecorr.partitions import Partition, partitions_of
from howecorr.symmetric import border_strip_removals, sn_character_value


def hook_length_degree(shape) -> int:
    """Independent degree formula: n! over the product of hook lengths."""
    shape = Partition(shape)
    conj = shape.conjugate()
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hooks *= (row - j) + (conj[j] - i) - 1
    return math.factorial(shape.size) // hooks


def sn_centralizer_order(cycle_type) -> int:
    out = 1
    for part in set(cycle_type):
        m = list(cycle_type).count(part)
        out *= part**m * math.factorial(m)
    return out


class TestBorderStrips:
    def test_single_row(self):
        assert border_strip_removals(Partition((3,)), 3) == [(Partition(()), 0)]

    def test_hook_choices(self):
        # removing 3 cells from (2,2): the strip spans both rows, height 1
        assert border_strip_removals(Partition((2, 2)), 3) == [(Partition((1,)), 1)]

    def test_no_removal(self):
        assert border_strip_removals(Partition((2, 2)), 4) == []


class TestCharacterValues:
    def test_pinned(self):
        assert sn_character_value(Partition((2, 1)), Partition((1, 1, 1))) == 2
        assert sn_character_value(Partition((1, 1, 1)), Partition((3,))) == 1

    def test_trivial_character(self):
        for n in range(1, 7):
            for cls in partitions_of(n):
                assert sn_character_value(Partition((n,)), cls) == 1

    def test_sign_character(self):
        for n in range(1, 7):
            sign_label = Partition((1,) * n)
            for cls in partitions_of(n):
                assert sn_character_value(sign_label, cls) == (-1) ** (n - len(cls))

    def test_degrees_match_hook_lengths(self):
        for n in range(1, 7):
            identity = Partition((1,) * n)
            for shape in partitions_of(n):
                assert sn_character_value(shape, identity) == hook_length_degree(shape)

    def test_column_orthogonality(self):
        for n in range(1, 6):
            classes = partitions_of(n)
            shapes = partitions_of(n)
            for c1 in classes:
                for c2 in classes:
                    total = sum(
                        sn_character_value(s, c1) * sn_character_value(s, c2)
                        for s in shapes
                    )
                    want = sn_centralizer_order(c1) if c1 == c2 else 0
                    assert total == want

    def test_norm_mismatch(self):
        with pytest.raises(ValueError):
            sn_character_value(Partition((2,)), Partition((3,)))
