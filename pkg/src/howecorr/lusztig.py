"""Reduction of the correspondence to the unipotent case: semisimple
bookkeeping, cuspidal-support transport, and the assembled decomposition.

A semisimple class of a unitary group over F_q is described by its
eigenvalues in the algebraic closure.  Working with a fixed ambient modulus
M = q^(2d) - 1, an eigenvalue is an exponent e (the eigenvalue is g^e for a
generator g of the order-M cyclic group) and rationality groups exponents
into orbits of e -> -q e mod M.  A :class:`SemisimpleDescriptor` is a list
of such orbits with multiplicities.

The centralizer of such a class inside U_n splits as a product of one group
per orbit; the eigenvalue-1 block is again a unitary group and carries the
unipotent part of the correspondence, while the remaining factors transport
untouched between the two members of a dual pair ("hash" factors below, the
part of the centralizer away from eigenvalue 1).  This module never
instantiates those factors; it tracks kinds, degrees and ranks, and reduces
every question to the tables of :mod:`howecorr.unipotent`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import InternalCheckError
from .unipotent import (
    DEFAULT_SGN_CONVENTION,
    MultiplicityTable,
    SeriesLabel,
    TowerContext,
    _is_odd_prime_power,
    omega_unipotent,
    theta_cuspidal,
    triangular,
    witt_index_of_cuspidal,
)


def _valid_modulus(q: int, modulus: int) -> bool:
    m = q * q - 1
    while m < modulus:
        m = (m + 1) * q * q - 1
    return m == modulus


@dataclass(frozen=True)
class EigenvalueOrbit:
    """An orbit of eigenvalue exponents under e -> -q e mod M, with a
    multiplicity.  The orbit size is the degree of the eigenvalue over the
    fixed field; the orbits of 1 and -1 are the singletons {0} and {M/2}."""

    q: int
    modulus: int
    exponents: frozenset
    multiplicity: int = 1

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("orbit multiplicity must be positive")
        if not self.exponents:
            raise ValueError("orbit must contain at least one exponent")
        for e in self.exponents:
            if not 0 <= e < self.modulus:
                raise ValueError(f"exponent {e} not reduced mod {self.modulus}")
            if (-self.q * e) % self.modulus not in self.exponents:
                raise ValueError(f"exponent set {set(self.exponents)} is not closed")

    @property
    def size(self) -> int:
        return len(self.exponents)

    @property
    def is_one(self) -> bool:
        return self.exponents == frozenset({0})

    @property
    def is_minus_one(self) -> bool:
        return self.modulus % 2 == 0 and self.exponents == frozenset({self.modulus // 2})

    def with_multiplicity(self, multiplicity: int) -> "EigenvalueOrbit":
        return EigenvalueOrbit(self.q, self.modulus, self.exponents, multiplicity)


def orbit_closure(q: int, modulus: int, exponent: int, multiplicity: int = 1) -> EigenvalueOrbit:
    """Close a single exponent under e -> -q e mod M.

    ``modulus`` must be q^(2d) - 1 for some ambient degree d >= 1.  The zero
    eigenvalue has no exponent and is not representable (semisimple classes
    of a unitary group are invertible)."""
    if exponent is None:
        raise ValueError("the zero eigenvalue has no exponent")
    if not _is_odd_prime_power(q):
        raise ValueError(f"q = {q} is not an odd prime power")
    if modulus < 2 or not _valid_modulus(q, modulus):
        raise ValueError(f"modulus {modulus} is not q^2d - 1 for q = {q}")
    exps = set()
    e = exponent % modulus
    while e not in exps:
        exps.add(e)
        e = (-q * e) % modulus
    return EigenvalueOrbit(q, modulus, frozenset(exps), multiplicity)


def _orbit_sort_key(orbit: EigenvalueOrbit):
    return (not orbit.is_one, orbit.size, sorted(orbit.exponents))


@dataclass(frozen=True)
class SemisimpleDescriptor:
    """A semisimple class given by disjoint eigenvalue orbits with
    multiplicities.  The ambient dimension it can live in is
    ``dimension`` = sum of orbit size times multiplicity."""

    q: int
    modulus: int
    orbits: tuple

    def __post_init__(self):
        seen = set()
        for orbit in self.orbits:
            if orbit.q != self.q or orbit.modulus != self.modulus:
                raise ValueError("orbit and descriptor disagree on q or modulus")
            if seen & orbit.exponents:
                raise ValueError("orbits must be pairwise disjoint")
            seen |= orbit.exponents
        object.__setattr__(
            self, "orbits", tuple(sorted(self.orbits, key=_orbit_sort_key))
        )

    @property
    def dimension(self) -> int:
        return sum(o.size * o.multiplicity for o in self.orbits)

    @property
    def unit_multiplicity(self) -> int:
        """Multiplicity of the eigenvalue 1."""
        for o in self.orbits:
            if o.is_one:
                return o.multiplicity
        return 0

    @property
    def non_unit_orbits(self) -> tuple:
        return tuple(o for o in self.orbits if not o.is_one)

    @property
    def non_unit_dimension(self) -> int:
        return sum(o.size * o.multiplicity for o in self.non_unit_orbits)

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "modulus": self.modulus,
            "orbits": [
                {"exponents": sorted(o.exponents), "multiplicity": o.multiplicity}
                for o in self.orbits
            ],
        }


def trivial_descriptor(q: int, n: int, modulus: int | None = None) -> SemisimpleDescriptor:
    """The identity class in dimension n: eigenvalue 1 with multiplicity n."""
    if modulus is None:
        modulus = q * q - 1
    orbits = ()
    if n:
        orbits = (orbit_closure(q, modulus, 0, n),)
    return SemisimpleDescriptor(q, modulus, orbits)


@dataclass(frozen=True)
class CentralizerFactor:
    """One factor of the centralizer away from eigenvalue 1: a general
    linear or unitary group of degree ``size`` over the extension of degree
    ``field_degree``.  Odd orbits give unitary factors (the orbits of 1 and
    -1 in particular), even orbits give linear ones."""

    kind: str
    size: int
    field_degree: int

    def __post_init__(self):
        if self.kind not in ("unitary", "linear"):
            raise ValueError(f"unknown factor kind {self.kind!r}")

    @property
    def rank_contribution(self) -> int:
        return self.size * self.field_degree

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "size": self.size, "field_degree": self.field_degree}


class CentralizerDecomposition(NamedTuple):
    """Result of :func:`centralizer_decomposition`: the factors away from
    eigenvalue 1, the unitary block on the 1-eigenspace as a tower context,
    and the Witt-index drop l from the ambient group to that block."""

    factors: tuple
    unipotent_block: TowerContext
    l: int


def _factor_of(orbit: EigenvalueOrbit) -> CentralizerFactor:
    kind = "unitary" if orbit.size % 2 == 1 else "linear"
    return CentralizerFactor(kind, orbit.multiplicity, orbit.size)


def centralizer_decomposition(
    s: SemisimpleDescriptor, ctx: TowerContext
) -> CentralizerDecomposition:
    """Split the centralizer of ``s`` inside the group of ``ctx``.

    Rank bookkeeping: the orbit degrees times multiplicities must add up to
    the ambient dimension 2m + parity.  The 1-eigenspace has dimension nu_1
    and Witt index floor(nu_1 / 2); the drop is l = m - floor(nu_1 / 2).
    """
    n = ctx.dimension
    if s.dimension != n:
        raise ValueError(
            f"descriptor has dimension {s.dimension}, ambient group needs {n}"
        )
    nu1 = s.unit_multiplicity
    factors = tuple(_factor_of(o) for o in s.non_unit_orbits)
    conserved = sum(f.rank_contribution for f in factors) + nu1
    if conserved != n:
        raise InternalCheckError(
            f"rank conservation failed: {conserved} != {n}"
        )
    if ctx.q is not None and ctx.q != s.q:
        raise ValueError(f"descriptor is over q = {s.q}, the group over q = {ctx.q}")
    block = TowerContext(nu1 // 2, nu1 % 2, ctx.q)
    return CentralizerDecomposition(factors, block, ctx.witt_index - nu1 // 2)


def match_semisimple(
    s: SemisimpleDescriptor, ctx: TowerContext, ctx_prime: TowerContext
) -> SemisimpleDescriptor:
    """The partner class on the other side of the dual pair: identical away
    from eigenvalue 1, with the 1-multiplicity adjusted to fill the partner
    dimension.  Fails if the partner group is too small to hold the
    non-unit part."""
    if s.dimension != ctx.dimension:
        raise ValueError(
            f"descriptor has dimension {s.dimension}, ambient group needs {ctx.dimension}"
        )
    n_prime = ctx_prime.dimension
    carried = s.non_unit_dimension
    if carried > n_prime:
        raise ValueError(
            f"non-unit eigenvalues span {carried} dimensions, more than the "
            f"partner dimension {n_prime}"
        )
    orbits = list(s.non_unit_orbits)
    nu1 = n_prime - carried
    if nu1:
        orbits.append(orbit_closure(s.q, s.modulus, 0, nu1))
    return SemisimpleDescriptor(s.q, s.modulus, tuple(orbits))


@dataclass(frozen=True)
class LusztigCoordinates:
    """Coordinates of a series member through the reduction: one opaque
    unipotent label per centralizer factor away from eigenvalue 1 (a
    partition for a linear factor, a cuspidal index plus bipartition for a
    unitary one), the series label of the reduced unipotent block, and the
    index drop l.  Moving in and out of coordinates is a relabelling; no
    character computation is involved."""

    hash_part_label: tuple
    unipotent_part: SeriesLabel
    reduction_l: int


def coordinates_in(member, dec: CentralizerDecomposition) -> LusztigCoordinates:
    """Split an ambient series label (hash labels, reduced series label)
    into reduction coordinates for the decomposition ``dec``."""
    hash_labels, unipotent = member
    hash_labels = tuple(hash_labels)
    if len(hash_labels) != len(dec.factors):
        raise ValueError(
            f"{len(hash_labels)} factor labels given, centralizer has "
            f"{len(dec.factors)} factors away from eigenvalue 1"
        )
    return LusztigCoordinates(hash_labels, unipotent, dec.l)


def coordinates_out(coords: LusztigCoordinates, dec: CentralizerDecomposition):
    """Inverse of :func:`coordinates_in`; together they are the identity on
    labels."""
    if len(coords.hash_part_label) != len(dec.factors):
        raise ValueError(
            f"{len(coords.hash_part_label)} factor labels given, centralizer "
            f"has {len(dec.factors)} factors away from eigenvalue 1"
        )
    if coords.reduction_l != dec.l:
        raise ValueError(
            f"coordinates carry drop {coords.reduction_l}, decomposition has {dec.l}"
        )
    return (coords.hash_part_label, coords.unipotent_part)


TRIVIAL_GL_LABEL = "1"


@dataclass(frozen=True)
class GLCuspidal:
    """A cuspidal datum on a general linear factor of a Levi: an opaque
    label and the factor size t.  The label "1" is reserved for the trivial
    character of GL_1, the entries that transport adds and removes."""

    size: int
    label: str

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("GL factor size must be positive")
        if self.label == TRIVIAL_GL_LABEL and self.size != 1:
            raise ValueError("the trivial cuspidal lives on GL_1 only")

    @property
    def is_trivial(self) -> bool:
        return self.label == TRIVIAL_GL_LABEL and self.size == 1

    def to_json_dict(self) -> dict:
        return {"size": self.size, "label": self.label}


TRIVIAL_GL = GLCuspidal(1, TRIVIAL_GL_LABEL)


@dataclass(frozen=True)
class UnipotentCuspidal:
    """The k-th cuspidal unipotent representation as the cuspidal datum on
    the unitary factor; its first occurrence data is computable."""

    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be nonnegative")

    def to_json_dict(self) -> dict:
        return {"unipotent": True, "k": self.k}


@dataclass(frozen=True)
class GenericCuspidal:
    """An opaque cuspidal datum on the unitary factor.  Its first
    occurrence index in the partner tower cannot be computed from the label
    alone, so it travels with the datum; ``partner_label`` names its
    first-occurrence image (defaults to a derived tag)."""

    label: str
    first_occurrence: int
    partner_label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.first_occurrence < 0:
            raise ValueError("first occurrence index must be nonnegative")

    def to_json_dict(self) -> dict:
        return {
            "unipotent": False,
            "label": self.label,
            "first_occurrence": self.first_occurrence,
        }


def _sorted_entries(entries) -> tuple:
    return tuple(sorted(entries, key=lambda e: (e.size, e.label)))


@dataclass(frozen=True)
class CuspidalSupport:
    """A cuspidal support (L, rho) in flattened form: the multiset of GL
    cuspidal entries and the cuspidal datum phi on the unitary factor."""

    entries: tuple
    phi: object

    def __post_init__(self):
        object.__setattr__(self, "entries", _sorted_entries(self.entries))

    @property
    def gl_size(self) -> int:
        return sum(e.size for e in self.entries)

    @property
    def trivial_count(self) -> int:
        return sum(1 for e in self.entries if e.is_trivial)

    def to_json_dict(self) -> dict:
        return {
            "entries": [e.to_json_dict() for e in self.entries],
            "phi": self.phi.to_json_dict(),
        }


def _first_occurrence_of_phi(phi, ctx: TowerContext, ctx_prime: TowerContext) -> int:
    if isinstance(phi, UnipotentCuspidal):
        return witt_index_of_cuspidal(theta_cuspidal(phi.k, ctx_prime.dim_parity))
    return phi.first_occurrence


def _transported_phi(phi, home_witt: int, ctx_prime: TowerContext):
    if isinstance(phi, UnipotentCuspidal):
        return UnipotentCuspidal(theta_cuspidal(phi.k, ctx_prime.dim_parity))
    label = phi.partner_label or f"theta({phi.label})"
    return GenericCuspidal(label, home_witt, partner_label=phi.label)


def transport_support(
    support: CuspidalSupport, ctx: TowerContext, ctx_prime: TowerContext
) -> CuspidalSupport | None:
    """Carry a cuspidal support across the dual pair.

    Below the first occurrence of phi the image is zero (None).  Otherwise
    the GL multiset is preserved and padded with trivial GL_1 entries up to
    the partner torus size, or, when the partner is smaller, trivial entries
    are removed; removing more trivial entries than are present is
    inconsistent input and raises."""
    m, m_prime = ctx.witt_index, ctx_prime.witt_index
    t = support.gl_size
    if t > m:
        raise ValueError(f"GL part of size {t} does not fit in Witt index {m}")
    if isinstance(support.phi, UnipotentCuspidal):
        home = m - t
        if home != witt_index_of_cuspidal(support.phi.k):
            raise ValueError(
                f"cuspidal unipotent k={support.phi.k} lives at Witt index "
                f"{witt_index_of_cuspidal(support.phi.k)}, not {home}"
            )
    first = _first_occurrence_of_phi(support.phi, ctx, ctx_prime)
    if m_prime < first:
        return None
    t_prime = m_prime - first
    phi_prime = _transported_phi(support.phi, m - t, ctx_prime)
    if t_prime >= t:
        entries = support.entries + (TRIVIAL_GL,) * (t_prime - t)
        return CuspidalSupport(entries, phi_prime)
    needed = t - t_prime
    if support.trivial_count < needed:
        raise ValueError(
            f"no partner support exists: transport must remove {needed} trivial "
            f"GL_1 entries but only {support.trivial_count} are present"
        )
    entries = list(support.entries)
    for _ in range(needed):
        entries.remove(TRIVIAL_GL)
    return CuspidalSupport(tuple(entries), phi_prime)


@dataclass(frozen=True)
class CuspidalPair:
    """A Harish-Chandra series: the multiset of GL cuspidal entries with
    trivial GL_1 entries listed explicitly, the cuspidal unipotent index k
    of the unitary part in reduced coordinates, and the semisimple class of
    the whole series.  The torus rank is the count of trivial entries."""

    gl_part: tuple
    base_k: int
    semisimple: SemisimpleDescriptor

    def __post_init__(self):
        if self.base_k < 0:
            raise ValueError("base k must be nonnegative")
        object.__setattr__(self, "gl_part", _sorted_entries(self.gl_part))

    @property
    def torus_rank(self) -> int:
        return sum(1 for e in self.gl_part if e.is_trivial)

    @property
    def nontrivial_part(self) -> tuple:
        return tuple(e for e in self.gl_part if not e.is_trivial)

    @property
    def gl_size(self) -> int:
        return sum(e.size for e in self.gl_part)

    def to_json_dict(self) -> dict:
        return {
            "gl_part": [e.to_json_dict() for e in self.gl_part],
            "torus_rank": self.torus_rank,
            "base_k": self.base_k,
            "semisimple": self.semisimple.to_json_dict(),
        }


@dataclass(frozen=True)
class _PairGeometry:
    n: int
    nu1: int
    drop: int           # l = m - floor(nu1 / 2)
    b_rank: int         # r = m - l - m(k) = torus_rank
    carried: int        # non-unit dimensions, all orbits
    carried_phi: int    # non-unit dimensions belonging to the unitary part


def _pair_geometry(pair: CuspidalPair, ctx: TowerContext) -> _PairGeometry:
    n = ctx.dimension
    s = pair.semisimple
    if s.dimension != n:
        raise ValueError(
            f"descriptor has dimension {s.dimension}, ambient group needs {n}"
        )
    nu1 = s.unit_multiplicity
    expected = 2 * pair.torus_rank + triangular(pair.base_k)
    if nu1 != expected:
        raise ValueError(
            f"eigenvalue-1 multiplicity {nu1} is inconsistent with torus rank "
            f"{pair.torus_rank} and base k = {pair.base_k} (needs {expected})"
        )
    if pair.gl_size > ctx.witt_index:
        raise ValueError(
            f"GL part of size {pair.gl_size} does not fit in Witt index {ctx.witt_index}"
        )
    carried = s.non_unit_dimension
    gl_carried = 2 * sum(e.size for e in pair.nontrivial_part)
    if carried < gl_carried:
        raise ValueError(
            "descriptor carries fewer non-unit dimensions than the nontrivial "
            f"GL entries require ({carried} < {gl_carried})"
        )
    drop = ctx.witt_index - nu1 // 2
    return _PairGeometry(n, nu1, drop, pair.torus_rank, carried, carried - gl_carried)


def transport_series(
    pair: CuspidalPair, ctx: TowerContext, ctx_prime: TowerContext
) -> CuspidalPair | None:
    """Transport a series across the dual pair in reduced coordinates.

    The nontrivial GL entries and the non-unit eigenvalue data move
    verbatim; the unitary part goes to its first occurrence and the torus
    rank absorbs the difference.  None below the first occurrence; raises
    when shrinking would need to remove nontrivial entries."""
    geo = _pair_geometry(pair, ctx)
    p_prime = ctx_prime.dim_parity
    reduced_parity = (p_prime + geo.carried) % 2
    k_prime = theta_cuspidal(pair.base_k, reduced_parity)
    first_num = geo.carried_phi + triangular(k_prime) - p_prime
    if first_num % 2:
        raise InternalCheckError("first occurrence index is not integral")
    first = first_num // 2
    if ctx_prime.witt_index < first:
        return None
    t = pair.gl_size
    t_prime = ctx_prime.witt_index - first
    nontrivial = t - pair.torus_rank
    if t_prime < nontrivial:
        raise ValueError(
            f"no partner series exists: transport must remove "
            f"{t - t_prime} trivial GL_1 entries but only {pair.torus_rank} are present"
        )
    gl_part = pair.nontrivial_part + (TRIVIAL_GL,) * (t_prime - nontrivial)
    s_prime = match_semisimple(pair.semisimple, ctx, ctx_prime)
    return CuspidalPair(gl_part, k_prime, s_prime)


def weyl_of_cuspidal_pair(pair: CuspidalPair, ctx: TowerContext) -> tuple:
    """Shape of the relative Weyl group of the series: the factors of the
    centralizer away from eigenvalue 1 (symbolic, never instantiated) and
    the type-B rank r = m - l - m(k)."""
    geo = _pair_geometry(pair, ctx)
    dec = centralizer_decomposition(pair.semisimple, ctx)
    r = ctx.witt_index - geo.drop - witt_index_of_cuspidal(pair.base_k)
    if r != pair.torus_rank:
        raise InternalCheckError(
            f"type-B rank {r} disagrees with the torus rank {pair.torus_rank}"
        )
    return dec.factors, r


@dataclass(frozen=True)
class OmegaFullDecomposition:
    """The decomposition of the full coupling for one pair of series: the
    factors away from eigenvalue 1 pair diagonally (each label with itself;
    all Weyl-level characters here are rational, so the pairing involution
    is the identity), tensored with the unipotent table of the reduced
    contexts."""

    hash_descriptor: tuple
    pairing: str
    l: int
    l_prime: int
    unipotent_table: MultiplicityTable

    def contains(self, member, member_prime) -> bool:
        """Membership test for a pair of labels.  Each label is a pair
        (hash label, bipartition); hash labels are opaque and must match
        exactly, the bipartitions must be linked by the table."""
        h, u = member
        h_prime, u_prime = member_prime
        return h == h_prime and self.unipotent_table.entry(u, u_prime) > 0

    def to_json_dict(self) -> dict:
        return {
            "hash_descriptor": [f.to_json_dict() for f in self.hash_descriptor],
            "pairing": self.pairing,
            "l": self.l,
            "l_prime": self.l_prime,
            "unipotent_table": self.unipotent_table.to_json_dict(),
        }


def omega_full(
    pair: CuspidalPair,
    ctx: TowerContext,
    ctx_prime: TowerContext,
    *,
    convention: str = DEFAULT_SGN_CONVENTION,
) -> OmegaFullDecomposition:
    """Assemble the coupling for an arbitrary series: transport the series,
    split both centralizers, check that the factors away from eigenvalue 1
    agree, and delegate the rest to the unipotent table of the reduced
    contexts (Witt indices m - l and m' - l')."""
    transported = transport_series(pair, ctx, ctx_prime)
    if transported is None:
        raise ValueError(
            "the series has zero image here (below the first occurrence); "
            "no decomposition exists"
        )
    dec = centralizer_decomposition(pair.semisimple, ctx)
    dec_prime = centralizer_decomposition(transported.semisimple, ctx_prime)
    if dec.factors != dec_prime.factors:
        raise InternalCheckError(
            "transported series has different factors away from eigenvalue 1"
        )
    table = omega_unipotent(
        dec.unipotent_block, dec_prime.unipotent_block, pair.base_k, convention=convention
    )
    if table.k_prime != transported.base_k:
        raise InternalCheckError(
            f"reduced table pairs k={pair.base_k} with k'={table.k_prime}, but "
            f"transport produced k'={transported.base_k}"
        )
    return OmegaFullDecomposition(dec.factors, "diagonal", dec.l, dec_prime.l, table)
