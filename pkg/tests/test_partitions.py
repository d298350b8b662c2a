import pytest

from howecorr.partitions import (
    Bipartition,
    Partition,
    bipartition,
    bipartition_dominance_leq,
    bipartitions_of,
    conjugate,
    dominance_leq,
    horizontal_strip_additions,
    partitions_of,
    swap_components,
    swap_conjugate,
    vertical_strip_additions,
)


def P(*parts):
    return Partition(parts)


class TestPartition:
    def test_trims_zeros(self):
        assert Partition((3, 1, 0, 0)) == (3, 1)

    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            Partition((2, -1))

    def test_part_past_end_is_zero(self):
        assert P(3, 1).part(5) == 0

    def test_size(self):
        assert P().size == 0
        assert P(4, 2, 1).size == 7

    def test_contains(self):
        assert P(3, 2).contains(P(2, 2))
        assert not P(3, 2).contains(P(1, 1, 1))


class TestEnumeration:
    def test_partitions_of_small(self):
        assert partitions_of(0) == [P()]
        assert partitions_of(1) == [P(1)]

    def test_partitions_of_five_decreasing_lex(self):
        assert partitions_of(5) == [
            P(5),
            P(4, 1),
            P(3, 2),
            P(3, 1, 1),
            P(2, 2, 1),
            P(2, 1, 1, 1),
            P(1, 1, 1, 1, 1),
        ]

    def test_partition_counts(self):
        # p(n) for n = 0..9
        counts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
        for n, c in enumerate(counts):
            assert len(partitions_of(n)) == c

    def test_bipartitions_of_small(self):
        assert bipartitions_of(0) == [bipartition((), ())]
        assert bipartitions_of(1) == [bipartition((1,), ()), bipartition((), (1,))]

    def test_bipartitions_of_two_order(self):
        assert bipartitions_of(2) == [
            bipartition((2,), ()),
            bipartition((1, 1), ()),
            bipartition((1,), (1,)),
            bipartition((), (2,)),
            bipartition((), (1, 1)),
        ]

    def test_bipartition_counts(self):
        for n in range(9):
            want = sum(
                len(partitions_of(a)) * len(partitions_of(n - a))
                for a in range(n + 1)
            )
            got = bipartitions_of(n)
            assert len(got) == want
            assert len(set(got)) == want


class TestConjugate:
    def test_examples(self):
        assert conjugate(()) == P()
        assert conjugate((3, 1)) == P(2, 1, 1)
        assert conjugate((2, 2)) == P(2, 2)

    def test_involution(self):
        for n in range(7):
            for p in partitions_of(n):
                assert p.conjugate().conjugate() == p


class TestStrips:
    def test_horizontal_examples(self):
        assert horizontal_strip_additions(P(), 2) == [P(2)]
        assert horizontal_strip_additions(P(1), 1) == [P(2), P(1, 1)]
        assert horizontal_strip_additions(P(2, 1), 2) == [
            P(4, 1),
            P(3, 2),
            P(3, 1, 1),
            P(2, 2, 1),
        ]

    def test_vertical_examples(self):
        assert vertical_strip_additions(P(), 2) == [P(1, 1)]
        assert vertical_strip_additions(P(1), 1) == [P(2), P(1, 1)]
        assert vertical_strip_additions(P(2), 2) == [P(3, 1), P(2, 1, 1)]

    def test_zero_strip_is_identity(self):
        assert horizontal_strip_additions(P(3, 1), 0) == [P(3, 1)]
        assert vertical_strip_additions(P(3, 1), 0) == [P(3, 1)]

    def test_conjugate_duality(self):
        for n in range(6):
            for p in partitions_of(n):
                for s in range(4):
                    vert = set(vertical_strip_additions(p, s))
                    dual = {
                        lam.conjugate()
                        for lam in horizontal_strip_additions(p.conjugate(), s)
                    }
                    assert vert == dual

    def test_no_duplicates_and_containment(self):
        for n in range(6):
            for p in partitions_of(n):
                for s in range(4):
                    for op in (horizontal_strip_additions, vertical_strip_additions):
                        out = op(p, s)
                        assert len(out) == len(set(out))
                        for lam in out:
                            assert lam.size == p.size + s
                            assert lam.contains(p)

    def test_horizontal_strip_condition(self):
        # interleaving: p_i between lam_i and lam_{i+1}
        for lam in horizontal_strip_additions(P(3, 2, 2), 3):
            for i in range(len(lam)):
                assert lam.part(i + 1) <= P(3, 2, 2).part(i) <= lam.part(i)


class TestDominance:
    def test_examples(self):
        assert dominance_leq((1, 1, 1, 1), (4,))
        assert dominance_leq((2, 2), (3, 1))
        assert not dominance_leq((3, 1), (2, 2))

    def test_rejects_unequal_norms(self):
        with pytest.raises(ValueError):
            dominance_leq((2,), (1,))

    def test_partial_order_axioms(self):
        parts = partitions_of(6)
        for a in parts:
            assert dominance_leq(a, a)
            for b in parts:
                if dominance_leq(a, b) and dominance_leq(b, a):
                    assert a == b

    def test_bipartition_order_is_padded_concatenation(self):
        for x in bipartitions_of(3):
            for y in bipartitions_of(3):
                ax = list(x.alpha) + [0] * (3 - len(x.alpha))
                bx = list(x.beta) + [0] * (3 - len(x.beta))
                ay = list(y.alpha) + [0] * (3 - len(y.alpha))
                by = list(y.beta) + [0] * (3 - len(y.beta))
                cx, cy = ax + bx, ay + by
                want = all(
                    sum(cx[: i + 1]) <= sum(cy[: i + 1]) for i in range(6)
                )
                assert bipartition_dominance_leq(x, y) == want


class TestBipartitionHelpers:
    def test_swaps(self):
        bp = bipartition((2, 1), (3,))
        assert swap_components(bp) == bipartition((3,), (2, 1))
        assert swap_conjugate(bp) == bipartition((1, 1, 1), (2, 1))

    def test_size(self):
        assert bipartition((2, 1), (3,)).size == 6

    def test_named_fields(self):
        bp = Bipartition(P(2), P(1))
        assert bp.alpha == P(2) and bp.beta == P(1)
