"""Exact character theory of the hyperoctahedral groups W_n.

W_n is the group of signed permutations of {1, ..., n} (the Weyl group of
type B_n), of order 2^n n!.  Conjugacy classes are signed cycle types: a
pair of partitions (positive cycle type, negative cycle type) of total size
n.  Irreducible characters are indexed by bipartitions (alpha, beta) of n,
realised here by the classical construction

    chi_(alpha, beta) = Ind from W_a x W_b of
        (chi_alpha pulled back through W_a -> S_a)
        tensor (chi_beta pulled back through W_b -> S_b, twisted by the
                sign-change linear character of W_b),

with a = |alpha|, b = |beta|.

This module is deliberately brute force and self-certifying; it is the
oracle against which the strip combinatorics elsewhere in the package is
checked.  Conjugacy classes are found by enumerating all 2^n n! elements
and the class sizes must agree with the analytic centralizer-order formula,
otherwise the computation aborts.  Character tables are certified
orthonormal before they are returned.  Everything is exact: values are
integers, inner products are `fractions.Fraction`.

The price is the rank bound: nothing here is meant to run past
``ORACLE_BOUND`` (default 6, |W_6| = 46080).
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, NamedTuple

from .errors import InternalCheckError, RankBoundError
from .partitions import Bipartition, Partition, bipartitions_of
from .symmetric import sn_character_value

#: Largest rank the brute-force machinery will accept.  May be raised by the
#: caller, at the cost of an exponential blow-up.
ORACLE_BOUND = 6

#: The four linear characters of W_n, n >= 2.
LINEAR_CHARACTERS = ("trivial", "sign_changes", "permutation_sign", "coxeter_sign")


def _check_rank(n: int) -> None:
    if n < 0:
        raise ValueError("rank must be nonnegative")
    if n > ORACLE_BOUND:
        raise RankBoundError(
            f"rank {n} exceeds the oracle bound {ORACLE_BOUND}; "
            "raise howecorr.hyperoctahedral.ORACLE_BOUND to force it"
        )


class SignedCycleType(NamedTuple):
    """Conjugacy class label of W_n: positive and negative cycle types."""

    positive: Partition
    negative: Partition

    @property
    def size(self) -> int:
        return self.positive.size + self.negative.size


def group_order(n: int) -> int:
    return 2**n * factorial(n)


def _part_centralizer(p: Partition) -> int:
    z = 1
    for part, mult in Counter(p).items():
        z *= (2 * part) ** mult * factorial(mult)
    return z


def centralizer_order(label: SignedCycleType) -> int:
    """Order of the centralizer of an element of signed cycle type ``label``,
    by the wreath-product formula: a product over cycle lengths i of
    (2i)^(multiplicity) * multiplicity!, separately for each sign."""
    return _part_centralizer(label.positive) * _part_centralizer(label.negative)


def signed_permutations(n: int) -> Iterator[tuple]:
    """All elements of W_n in window notation: tuples w with w[i] = +-sigma(i+1)."""
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield tuple(s * v for s, v in zip(signs, perm))


def signed_cycle_type(window: tuple) -> SignedCycleType:
    """Signed cycle type of an element in window notation.  A cycle of the
    underlying permutation is positive or negative according to the product
    of the signs picked up along it."""
    n = len(window)
    seen = [False] * n
    pos, neg = [], []
    for start in range(n):
        if seen[start]:
            continue
        length, sign, j = 0, 1, start
        while not seen[j]:
            seen[j] = True
            v = window[j]
            if v < 0:
                sign = -sign
            j = abs(v) - 1
            length += 1
        (pos if sign > 0 else neg).append(length)
    return SignedCycleType(
        Partition(sorted(pos, reverse=True)), Partition(sorted(neg, reverse=True))
    )


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple:
    """Pairs (label, class size) in canonical label order.

    Class sizes are computed twice, by exhaustive enumeration and by the
    analytic centralizer-order formula; any disagreement aborts.
    """
    counts = Counter(signed_cycle_type(w) for w in signed_permutations(n))
    expected = [
        SignedCycleType(bp.alpha, bp.beta) for bp in bipartitions_of(n)
    ]
    if set(counts) != set(expected):
        raise InternalCheckError(
            f"W_{n}: enumerated class labels do not match the bipartitions of {n}"
        )
    order = group_order(n)
    out = []
    for label in expected:
        analytic = order // centralizer_order(label)
        if counts[label] != analytic:
            raise InternalCheckError(
                f"W_{n}: class size of {label} disagrees between enumeration "
                f"({counts[label]}) and the centralizer formula ({analytic})"
            )
        out.append((label, analytic))
    return tuple(out)


def conjugacy_classes(n: int) -> dict:
    """Conjugacy classes of W_n as an ordered mapping label -> class size."""
    _check_rank(n)
    return dict(_classes(n))


def identity_class(n: int) -> SignedCycleType:
    return SignedCycleType(Partition([1] * n), Partition())


@dataclass(frozen=True)
class ClassFunction:
    """An exact class function on W_n, one value per conjugacy class.

    Values are integers or `Fraction`s.  Instances are treated as immutable;
    arithmetic returns new objects.
    """

    rank: int
    values: dict

    def __post_init__(self):
        have = set(self.values)
        want = {label for label, _ in _classes(self.rank)}
        if have != want:
            raise ValueError(
                f"class function on W_{self.rank} must assign a value to every class"
            )

    def at(self, label: SignedCycleType):
        return self.values[label]

    def degree(self):
        return self.values[identity_class(self.rank)]

    def _same_rank(self, other):
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} != {other.rank}")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._same_rank(other)
        return ClassFunction(
            self.rank, {c: v + other.values[c] for c, v in self.values.items()}
        )

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._same_rank(other)
        return ClassFunction(
            self.rank, {c: v - other.values[c] for c, v in self.values.items()}
        )

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        """Pointwise product (tensor product of representations)."""
        self._same_rank(other)
        return ClassFunction(
            self.rank, {c: v * other.values[c] for c, v in self.values.items()}
        )

    def scaled(self, c) -> "ClassFunction":
        return ClassFunction(self.rank, {k: c * v for k, v in self.values.items()})

    def inner(self, other: "ClassFunction") -> Fraction:
        """Exact inner product (1/|W_n|) sum |class| f g.  All characters
        of W_n are integer valued, so no conjugation is involved."""
        self._same_rank(other)
        total = 0
        for label, size in _classes(self.rank):
            total += size * self.values[label] * other.values[label]
        return Fraction(total) / group_order(self.rank)

    def tensor(self, other: "ClassFunction") -> "ProductClassFunction":
        vals = {}
        for c1, v1 in self.values.items():
            for c2, v2 in other.values.items():
                vals[(c1, c2)] = v1 * v2
        return ProductClassFunction((self.rank, other.rank), vals)


@dataclass(frozen=True)
class ProductClassFunction:
    """A class function on a product W_a x W_b, indexed by label pairs."""

    ranks: tuple
    values: dict

    def __post_init__(self):
        a, b = self.ranks
        want = {
            (l1, l2)
            for l1, _ in _classes(a)
            for l2, _ in _classes(b)
        }
        if set(self.values) != want:
            raise ValueError(
                f"product class function on W_{a} x W_{b} has wrong support"
            )

    def at(self, pair):
        return self.values[pair]

    def __add__(self, other: "ProductClassFunction") -> "ProductClassFunction":
        if self.ranks != other.ranks:
            raise ValueError(f"rank mismatch: {self.ranks} != {other.ranks}")
        return ProductClassFunction(
            self.ranks, {c: v + other.values[c] for c, v in self.values.items()}
        )

    def inner(self, other: "ProductClassFunction") -> Fraction:
        if self.ranks != other.ranks:
            raise ValueError(f"rank mismatch: {self.ranks} != {other.ranks}")
        a, b = self.ranks
        total = 0
        for (l1, s1) in _classes(a):
            for (l2, s2) in _classes(b):
                pair = (l1, l2)
                total += s1 * s2 * self.values[pair] * other.values[pair]
        return Fraction(total) / (group_order(a) * group_order(b))


def tensor(f: ClassFunction, g: ClassFunction) -> ProductClassFunction:
    """Outer tensor product, a class function on W_a x W_b."""
    return f.tensor(g)


def _merge(p: Partition, q: Partition) -> Partition:
    return Partition(sorted(tuple(p) + tuple(q), reverse=True))


def _fuse(l1: SignedCycleType, l2: SignedCycleType) -> SignedCycleType:
    return SignedCycleType(
        _merge(l1.positive, l2.positive), _merge(l1.negative, l2.negative)
    )


@lru_cache(maxsize=None)
def _fusion_groups(a: int, b: int) -> dict:
    """For the embedding W_a x W_b <= W_{a+b}: big class label ->
    list of product class labels fusing into it.  Fusion concatenates the
    positive cycle types and the negative cycle types."""
    groups = {}
    for l1, _ in _classes(a):
        for l2, _ in _classes(b):
            groups.setdefault(_fuse(l1, l2), []).append((l1, l2))
    return groups


def induce_class_function(f: ProductClassFunction, n: int | None = None) -> ClassFunction:
    """Induction from W_a x W_b to W_n, a + b = n, by the standard class
    sum formula: the induced value on a class C is

        |W_n| / (|W_a x W_b| |C|) * sum over fused-in classes D of |D| f(D).
    """
    a, b = f.ranks
    if n is None:
        n = a + b
    if a + b != n:
        raise ValueError(f"cannot induce from W_{a} x W_{b} to W_{n}")
    _check_rank(n)
    sizes_a = dict(_classes(a))
    sizes_b = dict(_classes(b))
    groups = _fusion_groups(a, b)
    sub_order = group_order(a) * group_order(b)
    big_order = group_order(n)
    values = {}
    for label, csize in _classes(n):
        acc = 0
        for l1, l2 in groups.get(label, ()):
            acc += sizes_a[l1] * sizes_b[l2] * f.values[(l1, l2)]
        v = Fraction(big_order * acc, sub_order * csize)
        values[label] = int(v) if v.denominator == 1 else v
    return ClassFunction(n, values)


def restrict_class_function(f: ClassFunction, a: int, b: int) -> ProductClassFunction:
    """Restriction of a class function on W_{a+b} to W_a x W_b (pullback
    along class fusion)."""
    if a + b != f.rank:
        raise ValueError(f"cannot restrict W_{f.rank} to W_{a} x W_{b}")
    values = {}
    for l1, _ in _classes(a):
        for l2, _ in _classes(b):
            values[(l1, l2)] = f.values[_fuse(l1, l2)]
    return ProductClassFunction((a, b), values)


def linear_character(n: int, which: str) -> ClassFunction:
    """One of the four linear characters of W_n.

    On a class with cycle types (pi, nu):

    * ``trivial``          -> 1
    * ``sign_changes``     -> (-1)^(number of negative cycles)
    * ``permutation_sign`` -> sign of the underlying permutation
    * ``coxeter_sign``     -> their product, the determinant character
    """
    _check_rank(n)
    if which not in LINEAR_CHARACTERS:
        raise ValueError(f"unknown linear character {which!r}")
    values = {}
    for label, _ in _classes(n):
        lp, ln = len(label.positive), len(label.negative)
        if which == "trivial":
            v = 1
        elif which == "sign_changes":
            v = (-1) ** ln
        elif which == "permutation_sign":
            v = (-1) ** (n - lp - ln)
        else:
            v = (-1) ** (n - lp)
        values[label] = v
    return ClassFunction(n, values)


def _sn_pullback_value(label: Partition, cls: SignedCycleType) -> int:
    """Value at ``cls`` of chi_label composed with W_m -> S_m; the image
    has cycle type the merge of positive and negative cycle types."""
    return sn_character_value(label, _merge(cls.positive, cls.negative))


def _irreducible_seed(alpha: Partition, beta: Partition) -> ProductClassFunction:
    """The character of W_a x W_b whose induction is chi_(alpha, beta)."""
    a, b = alpha.size, beta.size
    values = {}
    for l1, _ in _classes(a):
        v1 = _sn_pullback_value(alpha, l1)
        for l2, _ in _classes(b):
            v2 = _sn_pullback_value(beta, l2) * (-1) ** len(l2.negative)
            values[(l1, l2)] = v1 * v2
    return ProductClassFunction((a, b), values)


@dataclass(frozen=True)
class CharacterTable:
    """Certified character table of W_n.

    ``labels`` fixes the row order (canonical bipartition order); classes
    come in the canonical class order.  Construction via
    :func:`build_character_table` is the only supported entry point.
    """

    rank: int
    labels: tuple
    irreducibles: dict
    class_sizes: dict

    def character(self, label: Bipartition) -> ClassFunction:
        return self.irreducibles[label]

    def degree(self, label: Bipartition) -> int:
        return self.irreducibles[label].degree()

    def class_labels(self) -> list:
        return list(self.class_sizes)

    def to_json_dict(self) -> dict:
        classes = self.class_labels()
        return {
            "rank": self.rank,
            "group_order": group_order(self.rank),
            "class_labels": [
                [list(c.positive), list(c.negative)] for c in classes
            ],
            "class_sizes": [self.class_sizes[c] for c in classes],
            "irreducible_labels": [
                [list(bp.alpha), list(bp.beta)] for bp in self.labels
            ],
            "values": [
                [self.irreducibles[bp].values[c] for c in classes]
                for bp in self.labels
            ],
        }


@lru_cache(maxsize=None)
def build_character_table(n: int) -> CharacterTable:
    """Build and certify the character table of W_n.

    Every irreducible is induced from the two-partition construction, checked
    to be integer valued, and the full table is certified orthonormal with
    respect to the exact inner product.  A failed certification raises
    :class:`InternalCheckError` rather than returning a bad table.
    """
    _check_rank(n)
    labels = tuple(bipartitions_of(n))
    irreducibles = {}
    for bp in labels:
        chi = induce_class_function(_irreducible_seed(bp.alpha, bp.beta), n)
        bad = [v for v in chi.values.values() if not isinstance(v, int)]
        if bad:
            raise InternalCheckError(
                f"W_{n}: character {bp} has non-integral values {bad[:3]}"
            )
        irreducibles[bp] = chi
    order = group_order(n)
    sizes = dict(_classes(n))
    chis = [irreducibles[bp] for bp in labels]
    for i, x in enumerate(chis):
        for j in range(i, len(chis)):
            y = chis[j]
            total = sum(
                size * x.values[c] * y.values[c] for c, size in sizes.items()
            )
            if total != (order if i == j else 0):
                raise InternalCheckError(
                    f"W_{n}: orthonormality fails at ({labels[i]}, {labels[j]})"
                )
    return CharacterTable(n, labels, irreducibles, sizes)


def decompose(f: ClassFunction) -> dict:
    """Multiplicities of ``f`` against the irreducibles of W_n, in canonical
    label order, zeros omitted.  Raises if any inner product is non-integral
    (``f`` is then not a virtual character)."""
    table = build_character_table(f.rank)
    out = {}
    for bp in table.labels:
        ip = f.inner(table.irreducibles[bp])
        if ip.denominator != 1:
            raise ValueError(
                f"not a virtual character: <f, chi_{bp}> = {ip}"
            )
        m = int(ip)
        if m:
            out[bp] = m
    return out


@lru_cache(maxsize=None)
def _tensor_label_map(n: int, which: str) -> dict:
    table = build_character_table(n)
    lin = linear_character(n, which)
    mapping = {}
    for bp in table.labels:
        product = table.irreducibles[bp] * lin
        mults = decompose(product)
        if list(mults.values()) != [1]:
            raise InternalCheckError(
                f"W_{n}: tensoring {bp} with {which} is not irreducible: {mults}"
            )
        mapping[bp] = next(iter(mults))
    return mapping


def tensor_label_map(n: int, which: str) -> dict:
    """Label permutation induced on Irr(W_n) by tensoring with a linear
    character, computed by decomposing the actual pointwise products."""
    _check_rank(n)
    if which not in LINEAR_CHARACTERS:
        raise ValueError(f"unknown linear character {which!r}")
    return dict(_tensor_label_map(n, which))
