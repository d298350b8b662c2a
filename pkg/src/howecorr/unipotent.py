"""The correspondence between unipotent Harish-Chandra series of a unitary
dual pair, computed at the level of Weyl group characters.

Fix a series index k (the cuspidal unipotent representation lives on a group
of Witt index ``witt_index_of_cuspidal(k)``) and two tower contexts with Witt
indices m, m'.  The restriction of the Weil character couples the series of
k on one side with the series of k' = ``theta_cuspidal(k, parity')`` on the
other, and the coupling decomposes over Irr(W_r) x Irr(W_r') with
r = m - m(k), r' = m' - m(k'):

    sum over l = 0 .. min(r, r'), chi in Irr(W_l) of
        Ind(chi x 1) tensor Ind(sgn chi x 1)          (first kind)
    sum over l, chi of
        Ind(chi x sgn) tensor Ind(sgn chi x 1)        (second kind)

where the first kind applies when k is odd or k = k' = 0 and the second kind
otherwise.  Everything here expands these sums combinatorially through the
Pieri rules; no group is ever enumerated.  The brute-force oracle in
:mod:`howecorr.hyperoctahedral` recomputes the same tables independently and
the two must agree (see :mod:`howecorr.verify`).

Which linear character plays "sgn" is a convention; both the determinant
character (``coxeter_sign``, the default) and the sign-change character
(``sign_changes``) are supported, threaded through as ``convention``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, NamedTuple

from .errors import NonUniqueExtremeError
from .partitions import (
    Bipartition,
    Partition,
    bipartition_dominance_leq,
    bipartitions_of,
    horizontal_strip_additions,
    swap_components,
    swap_conjugate,
    vertical_strip_additions,
)

DEFAULT_SGN_CONVENTION = "coxeter_sign"
SGN_CONVENTIONS = ("coxeter_sign", "sign_changes")


def triangular(k: int) -> int:
    return k * (k + 1) // 2


def witt_index_of_cuspidal(k: int) -> int:
    """Witt index of the unitary group carrying the k-th cuspidal unipotent
    representation, which has dimension k(k+1)/2."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return triangular(k) // 2


def theta_cuspidal(k: int, target_dim_parity: int) -> int:
    """First-occurrence index of the k-th cuspidal unipotent representation
    in the tower of the given dimension parity.

    For k >= 1 exactly one of k - 1, k + 1 has triangular number of the
    required parity (their triangular numbers differ by the odd number
    2k + 1); k = 0 goes to 0 in the even tower and to 1 in the odd tower.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if target_dim_parity not in (0, 1):
        raise ValueError("parity must be 0 or 1")
    if k == 0:
        return target_dim_parity
    candidates = [kp for kp in (k - 1, k + 1) if triangular(kp) % 2 == target_dim_parity]
    if len(candidates) != 1:
        raise RuntimeError(f"parity rule failed at k={k}")  # unreachable
    return candidates[0]


ThetaRule = Callable[[int, int], int]


def _is_odd_prime_power(q: int) -> bool:
    if q < 3 or q % 2 == 0:
        return False
    p = 3
    while p * p <= q:
        if q % p == 0:
            break
        p += 2
    else:
        return True  # q itself is prime
    while q % p == 0:
        q //= p
    return q == 1


@dataclass(frozen=True)
class TowerContext:
    """A member of a Witt tower of unitary groups: Witt index m and the
    parity of the underlying dimension n = 2m + parity.  The field size q is
    optional; only its parity-of-nothing matters for the combinatorics, but
    it must be an odd prime power when given."""

    witt_index: int
    dim_parity: int
    q: int | None = None

    def __post_init__(self):
        if self.witt_index < 0:
            raise ValueError("Witt index must be nonnegative")
        if self.dim_parity not in (0, 1):
            raise ValueError("dimension parity must be 0 or 1")
        if self.q is not None and not _is_odd_prime_power(self.q):
            raise ValueError(f"q = {self.q} is not an odd prime power")

    @property
    def dimension(self) -> int:
        return 2 * self.witt_index + self.dim_parity


class SeriesLabel(NamedTuple):
    """A member of the unipotent Harish-Chandra series attached to k:
    a bipartition of r = m - m(k) labelling a character of W_r."""

    k: int
    char_label: Bipartition


def sgn_twist(bp: Bipartition, convention: str = DEFAULT_SGN_CONVENTION) -> Bipartition:
    """Label of (sgn tensor chi_bp).  Tensoring with the sign-change
    character swaps the components; with the determinant character it swaps
    and conjugates.  Certified against the oracle's tensor_label_map."""
    if convention == "sign_changes":
        return swap_components(bp)
    if convention == "coxeter_sign":
        return swap_conjugate(bp)
    raise ValueError(f"unknown sgn convention {convention!r}")


def pieri_induction(
    bp: Bipartition, s: int, second: str, convention: str = DEFAULT_SGN_CONVENTION
) -> list:
    """Labels in Ind from W_l x W_s to W_{l+s} of (chi_bp tensor 1) or
    (chi_bp tensor sgn), each with multiplicity one.

    Tensoring with the trivial character adds horizontal strips to the first
    component (Pieri); with sgn the strip goes to the second component,
    vertical for the determinant convention and horizontal for the
    sign-change convention.
    """
    alpha, beta = Partition(bp.alpha), Partition(bp.beta)
    if second == "trivial":
        return [Bipartition(lam, beta) for lam in horizontal_strip_additions(alpha, s)]
    if second != "sgn":
        raise ValueError(f"second factor must be 'trivial' or 'sgn', got {second!r}")
    if convention == "coxeter_sign":
        additions = vertical_strip_additions(beta, s)
    elif convention == "sign_changes":
        additions = horizontal_strip_additions(beta, s)
    else:
        raise ValueError(f"unknown sgn convention {convention!r}")
    return [Bipartition(alpha, mu) for mu in additions]


@dataclass(frozen=True)
class MultiplicityTable:
    """The coupling table of one pair of unipotent series.

    Rows are labelled by Irr(W_r) for the k-series on the first group,
    columns by Irr(W_r') for the k'-series on the second; ``entries`` holds
    the nonzero multiplicities.  A table below the first occurrence of the
    partner cuspidal (m' < m(k')) is empty: no columns, no entries,
    ``formula`` is None.
    """

    m: int
    m_prime: int
    k: int
    k_prime: int
    formula: str | None
    convention: str
    row_labels: tuple
    col_labels: tuple
    entries: dict

    @property
    def is_zero(self) -> bool:
        return self.formula is None

    def entry(self, row: Bipartition, col: Bipartition) -> int:
        return self.entries.get((row, col), 0)

    def row(self, label: Bipartition) -> list:
        if label not in self.row_labels:
            raise ValueError(f"{label} is not a row label of this table")
        return [
            (col, self.entries[(label, col)])
            for col in self.col_labels
            if (label, col) in self.entries
        ]

    def to_json_dict(self) -> dict:
        idx_r = {bp: i for i, bp in enumerate(self.row_labels)}
        idx_c = {bp: j for j, bp in enumerate(self.col_labels)}
        cells = sorted(
            (idx_r[r], idx_c[c], m) for (r, c), m in self.entries.items()
        )
        return {
            "m": self.m,
            "m_prime": self.m_prime,
            "k": self.k,
            "k_prime": self.k_prime,
            "formula": self.formula,
            "sgn_convention": self.convention,
            "row_labels": [[list(bp.alpha), list(bp.beta)] for bp in self.row_labels],
            "col_labels": [[list(bp.alpha), list(bp.beta)] for bp in self.col_labels],
            "entries": [[i, j, m] for i, j, m in cells],
        }

    def to_text(self) -> str:
        if self.is_zero:
            return (
                f"omega[m={self.m}, m'={self.m_prime}, k={self.k}]: zero "
                f"(below first occurrence: m' < {witt_index_of_cuspidal(self.k_prime)} = m({self.k_prime}))"
            )
        head = (
            f"omega[m={self.m}, m'={self.m_prime}, k={self.k} -> k'={self.k_prime}] "
            f"({self.formula}, sgn={self.convention})"
        )
        cols = [_label_str(c) for c in self.col_labels]
        rows = [_label_str(r) for r in self.row_labels]
        width = max([len(s) for s in cols + rows] + [3]) + 1
        lines = [head, "".rjust(width) + "".join(c.rjust(width) for c in cols)]
        for r, rname in zip(self.row_labels, rows):
            cells = [
                str(self.entries.get((r, c), ".")).rjust(width) for c in self.col_labels
            ]
            lines.append(rname.rjust(width) + "".join(cells))
        return "\n".join(lines)


def _label_str(bp: Bipartition) -> str:
    a = ",".join(map(str, bp.alpha)) or "-"
    b = ",".join(map(str, bp.beta)) or "-"
    return f"{a}|{b}"


def _validate_series(ctx: TowerContext, k: int) -> int:
    """The k-series lives in the tower of parity T(k) mod 2; return r."""
    if triangular(k) % 2 != ctx.dim_parity:
        raise ValueError(
            f"series k={k} does not live in a tower of dimension parity {ctx.dim_parity}"
        )
    r = ctx.witt_index - witt_index_of_cuspidal(k)
    if r < 0:
        raise ValueError(
            f"Witt index {ctx.witt_index} is below the cuspidal support m({k}) = "
            f"{witt_index_of_cuspidal(k)}; the k={k} series is empty there"
        )
    return r


@lru_cache(maxsize=None)
def _omega_cached(m, parity, m_prime, parity_prime, k, convention):
    return _omega_impl(m, parity, m_prime, parity_prime, k, convention, theta_cuspidal)


def _omega_impl(m, parity, m_prime, parity_prime, k, convention, theta_rule):
    ctx = TowerContext(m, parity)
    r = _validate_series(ctx, k)
    k_prime = theta_rule(k, parity_prime)
    if triangular(k_prime) % 2 != parity_prime:
        raise ValueError(
            f"theta rule sent k={k} to k'={k_prime}, which does not live in "
            f"a tower of dimension parity {parity_prime}"
        )
    r_prime = m_prime - witt_index_of_cuspidal(k_prime)
    row_labels = tuple(bipartitions_of(r))
    if r_prime < 0:
        return MultiplicityTable(
            m, m_prime, k, k_prime, None, convention, row_labels, (), {}
        )
    first_kind = k % 2 == 1 or (k == 0 and k_prime == 0)
    second = "trivial" if first_kind else "sgn"
    entries = {}
    for l in range(min(r, r_prime) + 1):
        for chi in bipartitions_of(l):
            rows = pieri_induction(chi, r - l, second, convention)
            cols = pieri_induction(sgn_twist(chi, convention), r_prime - l, "trivial", convention)
            for row in rows:
                for col in cols:
                    key = (row, col)
                    entries[key] = entries.get(key, 0) + 1
    return MultiplicityTable(
        m,
        m_prime,
        k,
        k_prime,
        "first-kind" if first_kind else "second-kind",
        convention,
        row_labels,
        tuple(bipartitions_of(r_prime)),
        entries,
    )


def omega_unipotent(
    ctx: TowerContext,
    ctx_prime: TowerContext,
    k: int,
    *,
    convention: str = DEFAULT_SGN_CONVENTION,
    theta_rule: ThetaRule | None = None,
) -> MultiplicityTable:
    """Decomposition of the Weil character coupling between the k-series on
    ``ctx`` and its partner series on ``ctx_prime``.

    The partner index k' is computed by ``theta_rule`` (default
    :func:`theta_cuspidal`); an alternative rule may be injected, e.g. to
    test a different first-occurrence table.  Requires m >= m(k); returns an
    empty table when m' < m(k').
    """
    if convention not in SGN_CONVENTIONS:
        raise ValueError(f"unknown sgn convention {convention!r}")
    args = (ctx.witt_index, ctx.dim_parity, ctx_prime.witt_index, ctx_prime.dim_parity, k)
    if theta_rule is None:
        return _omega_cached(*args, convention)
    return _omega_impl(*args, convention, theta_rule)


def theta_images(
    pi: SeriesLabel,
    ctx: TowerContext,
    ctx_prime: TowerContext,
    *,
    convention: str = DEFAULT_SGN_CONVENTION,
    theta_rule: ThetaRule | None = None,
) -> list:
    """Image of one series member under the correspondence: the labelled
    columns of its table row, with multiplicities, in canonical column
    order.  Empty below the partner's first occurrence."""
    table = omega_unipotent(ctx, ctx_prime, pi.k, convention=convention, theta_rule=theta_rule)
    r = ctx.witt_index - witt_index_of_cuspidal(pi.k)
    if pi.char_label.size != r:
        raise ValueError(
            f"label {pi.char_label} has size {pi.char_label.size}, expected r = {r}"
        )
    label = Bipartition(Partition(pi.char_label.alpha), Partition(pi.char_label.beta))
    if table.is_zero:
        return []
    return [
        (SeriesLabel(table.k_prime, col), mult) for col, mult in table.row(label)
    ]


PartialOrder = Callable[[Bipartition, Bipartition], bool]


def extremal_images(
    pi: SeriesLabel,
    ctx: TowerContext,
    ctx_prime: TowerContext,
    *,
    convention: str = DEFAULT_SGN_CONVENTION,
    order: PartialOrder = bipartition_dominance_leq,
    theta_rule: ThetaRule | None = None,
) -> tuple:
    """The least and greatest image labels under the configured partial
    order (default: dominance on the padded concatenation).

    Raises ValueError on an empty image set, and
    :class:`NonUniqueExtremeError` with the offending antichain if the order
    fails to produce a unique least or greatest element.
    """
    images = theta_images(pi, ctx, ctx_prime, convention=convention, theta_rule=theta_rule)
    if not images:
        raise ValueError(f"image of {pi} is empty (below first occurrence)")
    labels = [sl.char_label for sl, _ in images]
    k_prime = images[0][0].k
    least = [x for x in labels if all(order(x, y) for y in labels)]
    greatest = [x for x in labels if all(order(y, x) for y in labels)]
    if len(least) != 1:
        minimal = [
            x for x in labels if not any(order(y, x) and y != x for y in labels)
        ]
        raise NonUniqueExtremeError(
            f"no unique minimum among images of {pi}: minimal antichain {minimal}",
            antichain=minimal,
        )
    if len(greatest) != 1:
        maximal = [
            x for x in labels if not any(order(x, y) and y != x for y in labels)
        ]
        raise NonUniqueExtremeError(
            f"no unique maximum among images of {pi}: maximal antichain {maximal}",
            antichain=maximal,
        )
    return SeriesLabel(k_prime, least[0]), SeriesLabel(k_prime, greatest[0])
