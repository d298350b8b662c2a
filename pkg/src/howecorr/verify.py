"""Cross-checks between the combinatorial formulas and the brute-force
character-theory oracle, plus the structural laws of the reduction layer.

Every function returns a :class:`CheckResult` instead of raising on
mathematical disagreement, so a driver can report all failures in one run;
genuine usage errors (bad ranks, malformed descriptors) still raise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NonUniqueExtremeError
from .hyperoctahedral import (
    build_character_table,
    decompose,
    group_order,
    identity_class,
    induce_class_function,
    linear_character,
    tensor,
)
from .lusztig import (
    TRIVIAL_GL,
    CuspidalPair,
    CuspidalSupport,
    GLCuspidal,
    GenericCuspidal,
    SemisimpleDescriptor,
    UnipotentCuspidal,
    centralizer_decomposition,
    coordinates_in,
    coordinates_out,
    match_semisimple,
    omega_full,
    orbit_closure,
    transport_series,
    transport_support,
    trivial_descriptor,
)
from .partitions import Partition, bipartition, bipartitions_of
from .unipotent import (
    DEFAULT_SGN_CONVENTION,
    SGN_CONVENTIONS,
    SeriesLabel,
    TowerContext,
    extremal_images,
    omega_unipotent,
    pieri_induction,
    sgn_twist,
    theta_cuspidal,
    theta_images,
    triangular,
    witt_index_of_cuspidal,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def _ok(name, detail) -> CheckResult:
    return CheckResult(name, True, detail)


def _fail(name, detail) -> CheckResult:
    return CheckResult(name, False, detail)


# ---------------------------------------------------------------------------
# induction: Pieri rule vs explicit induced class functions


def check_induction(max_rank: int = 5) -> CheckResult:
    """Compare pieri_induction against decompose(induce(seed)) for every
    chi in Irr(W_l), every split l + s = r <= max_rank, and both choices of
    the second factor (trivial, and sgn in both conventions)."""
    name = "induction-oracle equivalence"
    compared = 0
    for r in range(max_rank + 1):
        for l in range(r + 1):
            s = r - l
            table_l = build_character_table(l)
            for chi in bipartitions_of(l):
                f = table_l.character(chi)
                cases = [("trivial", DEFAULT_SGN_CONVENTION)]
                cases += [("sgn", conv) for conv in SGN_CONVENTIONS]
                for second, conv in cases:
                    which = "trivial" if second == "trivial" else conv
                    seed = tensor(f, linear_character(s, which))
                    got = decompose(induce_class_function(seed))
                    want = {bp: 1 for bp in pieri_induction(chi, s, second, conv)}
                    if got != want:
                        return _fail(
                            name,
                            f"Ind(chi_{chi} x {which}) to W_{r}: rule gives "
                            f"{want}, oracle gives {got}",
                        )
                    compared += 1
    return _ok(name, f"{compared} induced characters matched (rank <= {max_rank})")


# ---------------------------------------------------------------------------
# character tables: orthogonality and class-size certification


def check_character_tables(max_rank: int = 6) -> CheckResult:
    """Row and column orthogonality, integrality, and the two class-size
    routes.  Row orthogonality and the size cross-check already run inside
    build_character_table; the column relations are re-verified here."""
    name = "character-table certification"
    for n in range(max_rank + 1):
        table = build_character_table(n)
        order = group_order(n)
        if sum(table.class_sizes.values()) != order:
            return _fail(name, f"W_{n}: class sizes do not sum to {order}")
        classes = table.class_labels()
        chars = [table.character(bp) for bp in table.labels]
        for i, c in enumerate(classes):
            for c2 in classes[i:]:
                total = sum(f.at(c) * f.at(c2) for f in chars)
                want = order // table.class_sizes[c] if c == c2 else 0
                if total != want:
                    return _fail(
                        name, f"W_{n}: column orthogonality fails at {c}, {c2}"
                    )
    return _ok(name, f"tables W_0..W_{max_rank} certified both ways")


# ---------------------------------------------------------------------------
# omega: combinatorial tables vs oracle inner products


def _decompose_product(f) -> dict:
    """Multiplicity of chi_pi x chi_pi' in a product class function, for
    all label pairs, by exact inner products (two-step contraction)."""
    a, b = f.ranks
    ta, tb = build_character_table(a), build_character_table(b)
    classes_a, classes_b = ta.class_labels(), tb.class_labels()
    half = {}
    for ca in classes_a:
        for bp in tb.labels:
            g = tb.character(bp)
            half[(ca, bp)] = sum(
                tb.class_sizes[cb] * f.at((ca, cb)) * g.at(cb) for cb in classes_b
            )
    denom = group_order(a) * group_order(b)
    out = {}
    for bp_a in ta.labels:
        g = ta.character(bp_a)
        for bp_b in tb.labels:
            total = sum(
                ta.class_sizes[ca] * g.at(ca) * half[(ca, bp_b)] for ca in classes_a
            )
            mult = Fraction(total, denom)
            if mult.denominator != 1:
                raise ValueError("product class function is not a character")
            if mult:
                out[(bp_a, bp_b)] = int(mult)
    return out


@lru_cache(maxsize=None)
def _oracle_omega(r: int, r_prime: int, first_kind: bool, convention: str):
    """Oracle-side coupling: sum over l and chi in Irr(W_l) of the tensor
    product of honestly induced class functions, then decomposed into
    irreducible pairs.  Depends only on (r, r', formula kind, convention)."""
    total = None
    for l in range(min(r, r_prime) + 1):
        table_l = build_character_table(l)
        sgn_l = linear_character(l, convention)
        second = linear_character(
            r - l, "trivial" if first_kind else convention
        )
        one = linear_character(r_prime - l, "trivial")
        for chi in bipartitions_of(l):
            f = table_l.character(chi)
            left = induce_class_function(tensor(f, second))
            right = induce_class_function(tensor(f * sgn_l, one))
            term = tensor(left, right)
            total = term if total is None else total + term
    return _decompose_product(total), total


def _series_contexts(k: int, k_prime: int, r: int, r_prime: int):
    ctx = TowerContext(witt_index_of_cuspidal(k) + r, triangular(k) % 2)
    ctx_p = TowerContext(
        witt_index_of_cuspidal(k_prime) + r_prime, triangular(k_prime) % 2
    )
    return ctx, ctx_p


def check_omega(
    max_b_rank: int = 4, k_max: int = 3, convention: str = DEFAULT_SGN_CONVENTION
) -> CheckResult:
    """Entrywise equality of omega_unipotent with the oracle decomposition,
    plus the degree identity, over all k <= k_max, both partner parities,
    and all b-ranks r, r' <= max_b_rank."""
    name = "omega-oracle equivalence"
    tables = 0
    for k in range(k_max + 1):
        for parity_prime in (0, 1):
            k_prime = theta_cuspidal(k, parity_prime)
            first_kind = k % 2 == 1 or (k == 0 and k_prime == 0)
            for r in range(max_b_rank + 1):
                for r_prime in range(max_b_rank + 1):
                    ctx, ctx_p = _series_contexts(k, k_prime, r, r_prime)
                    got = omega_unipotent(ctx, ctx_p, k, convention=convention)
                    want, product = _oracle_omega(r, r_prime, first_kind, convention)
                    if dict(got.entries) != want:
                        return _fail(
                            name,
                            f"entry mismatch at k={k}, parity'={parity_prime}, "
                            f"r={r}, r'={r_prime}",
                        )
                    t_r = build_character_table(r)
                    t_rp = build_character_table(r_prime)
                    degree = sum(
                        mult * t_r.degree(a) * t_rp.degree(b)
                        for (a, b), mult in got.entries.items()
                    )
                    ident = (identity_class(r), identity_class(r_prime))
                    if degree != product.at(ident):
                        return _fail(
                            name,
                            f"degree identity fails at k={k}, r={r}, r'={r_prime}",
                        )
                    tables += 1
    return _ok(
        name,
        f"{tables} tables equal the oracle entrywise "
        f"(k <= {k_max}, b-rank <= {max_b_rank}, {convention})",
    )


# ---------------------------------------------------------------------------
# zero law and row persistence


def check_zero_law(k_max: int = 4) -> CheckResult:
    """omega_unipotent is empty exactly when m' < m(k'); theta_images is
    empty there as well."""
    name = "first-occurrence zero law"
    checked = 0
    for k in range(k_max + 1):
        for parity_prime in (0, 1):
            k_prime = theta_cuspidal(k, parity_prime)
            first = witt_index_of_cuspidal(k_prime)
            ctx = TowerContext(witt_index_of_cuspidal(k) + 2, triangular(k) % 2)
            for m_prime in range(first + 3):
                ctx_p = TowerContext(m_prime, parity_prime)
                table = omega_unipotent(ctx, ctx_p, k)
                if table.is_zero != (m_prime < first):
                    return _fail(
                        name, f"k={k}, m'={m_prime}: zero iff m' < {first} violated"
                    )
                pi = SeriesLabel(k, bipartition((2,), ()))
                images = theta_images(pi, ctx, ctx_p)
                if (m_prime < first) and images:
                    return _fail(
                        name, f"k={k}, m'={m_prime}: images below first occurrence"
                    )
                checked += 1
    return _ok(name, f"{checked} (k, m') pairs obey the zero law (k <= {k_max})")


def _row_nonempty_predicate(table):
    """Closed-form nonemptiness of a row, from strip-removal minimality:
    the smallest usable chi removes a maximal strip from the row label."""
    r = table.m - witt_index_of_cuspidal(table.k)
    r_prime = table.m_prime - witt_index_of_cuspidal(table.k_prime)
    need = r - r_prime

    def predicate(bp):
        if need <= 0:
            return True
        if table.formula == "first-kind":
            return Partition(bp.alpha).part(0) >= need
        if table.convention == "coxeter_sign":
            return len(Partition(bp.beta)) >= need
        return Partition(bp.beta).part(0) >= need

    return predicate


def check_row_persistence(
    max_b_rank: int = 4, k_max: int = 3, convention: str = DEFAULT_SGN_CONVENTION
) -> CheckResult:
    """Rows of a nonzero table are nonempty exactly as the strip-removal
    bound predicts; in particular every row is nonempty once r' >= r.  (The
    unconditional version of the second statement is false: see the red
    acceptance check and the notes in the test suite.)"""
    name = "row-nonemptiness characterization"
    rows = 0
    for k in range(k_max + 1):
        for parity_prime in (0, 1):
            k_prime = theta_cuspidal(k, parity_prime)
            for r in range(max_b_rank + 1):
                for r_prime in range(max_b_rank + 1):
                    ctx, ctx_p = _series_contexts(k, k_prime, r, r_prime)
                    table = omega_unipotent(ctx, ctx_p, k, convention=convention)
                    predicate = _row_nonempty_predicate(table)
                    for bp in table.row_labels:
                        nonempty = bool(table.row(bp))
                        if nonempty != predicate(bp):
                            return _fail(
                                name,
                                f"k={k}, r={r}, r'={r_prime}, row {bp}: "
                                f"nonempty={nonempty}, predicted={predicate(bp)}",
                            )
                        rows += 1
    return _ok(name, f"{rows} rows match the strip-removal bound")


# ---------------------------------------------------------------------------
# extremal images


def check_extremal(max_b_rank: int = 4, k_max: int = 3) -> CheckResult:
    """Unique minimum and maximum in every nonempty image set, under the
    configured order, for both sgn conventions."""
    name = "extremal uniqueness"
    checked = 0
    for convention in SGN_CONVENTIONS:
        for k in range(k_max + 1):
            for parity_prime in (0, 1):
                k_prime = theta_cuspidal(k, parity_prime)
                for r in range(max_b_rank + 1):
                    for r_prime in range(max_b_rank + 1):
                        ctx, ctx_p = _series_contexts(k, k_prime, r, r_prime)
                        table = omega_unipotent(ctx, ctx_p, k, convention=convention)
                        for bp in table.row_labels:
                            if not table.row(bp):
                                continue
                            pi = SeriesLabel(k, bp)
                            try:
                                lo, hi = extremal_images(
                                    pi, ctx, ctx_p, convention=convention
                                )
                            except NonUniqueExtremeError as err:
                                return _fail(
                                    name,
                                    f"antichain at k={k}, r={r}, r'={r_prime}, "
                                    f"row {bp}: {err.antichain}",
                                )
                            checked += 1
    return _ok(name, f"{checked} image sets have unique extremes (both conventions)")


# ---------------------------------------------------------------------------
# randomized semisimple bookkeeping


def random_descriptor(rng: random.Random, max_dim: int = 8) -> SemisimpleDescriptor:
    q = rng.choice((3, 5))
    degree = rng.choice((1, 2))
    modulus = q ** (2 * degree) - 1
    n = rng.randint(1, max_dim)
    remaining = n
    orbits = {}
    while remaining:
        orbit = orbit_closure(q, modulus, rng.randrange(modulus))
        if orbit.size > remaining:
            orbit = orbit_closure(q, modulus, 0)
        mult = rng.randint(1, remaining // orbit.size)
        key = orbit.exponents
        if key in orbits:
            orbits[key] = orbits[key].with_multiplicity(orbits[key].multiplicity + mult)
        else:
            orbits[key] = orbit.with_multiplicity(mult)
        remaining -= orbit.size * mult
    return SemisimpleDescriptor(q, modulus, tuple(orbits.values()))


def check_centralizers(count: int = 200, seed: int = 20260825) -> CheckResult:
    """Randomized descriptors: rank conservation, unitary classification of
    the +-1 orbits, and factor equality after match_semisimple."""
    name = "centralizer bookkeeping"
    rng = random.Random(seed)
    for trial in range(count):
        s = random_descriptor(rng)
        n = s.dimension
        ctx = TowerContext(n // 2, n % 2, s.q)
        factors, block, l = centralizer_decomposition(s, ctx)
        conserved = sum(f.rank_contribution for f in factors) + block.dimension
        if conserved != n:
            return _fail(name, f"trial {trial}: rank sum {conserved} != {n}")
        if l != ctx.witt_index - block.witt_index:
            return _fail(name, f"trial {trial}: drop l miscomputed")
        for orbit, factor in zip(s.non_unit_orbits, factors):
            if orbit.is_minus_one and factor.kind != "unitary":
                return _fail(name, f"trial {trial}: -1 orbit not unitary")
        n_prime = s.non_unit_dimension + rng.randint(0, 6)
        ctx_p = TowerContext(n_prime // 2, n_prime % 2, s.q)
        s_prime = match_semisimple(s, ctx, ctx_p)
        if s_prime.dimension != n_prime:
            return _fail(name, f"trial {trial}: matched dimension wrong")
        got = centralizer_decomposition(s_prime, ctx_p).factors
        if got != factors:
            return _fail(name, f"trial {trial}: factor lists differ after match")
    return _ok(name, f"{count} random descriptors verified (seed {seed})")


# ---------------------------------------------------------------------------
# reduction and transport


def _unipotent_pair(k: int, r: int, extra_minus_one: int = 0, q: int = 3):
    """A cuspidal pair in a tower sized so that the reduced block has
    b-rank r; optionally with a -1-eigenvalue block of the given size."""
    nu1 = 2 * r + triangular(k)
    n = nu1 + extra_minus_one
    modulus = q * q - 1
    orbits = []
    if nu1:
        orbits.append(orbit_closure(q, modulus, 0, nu1))
    if extra_minus_one:
        orbits.append(orbit_closure(q, modulus, modulus // 2, extra_minus_one))
    s = SemisimpleDescriptor(q, modulus, tuple(orbits))
    ctx = TowerContext(n // 2, n % 2, q)
    return CuspidalPair((TRIVIAL_GL,) * r, k, s), ctx


def check_reduction_consistency(max_b_rank: int = 3, k_max: int = 2) -> CheckResult:
    """omega_full over a trivial semisimple class must reproduce
    omega_unipotent byte for byte."""
    import json

    name = "reduction consistency"
    compared = 0
    for k in range(k_max + 1):
        for parity_prime in (0, 1):
            k_prime = theta_cuspidal(k, parity_prime)
            for r in range(max_b_rank + 1):
                for r_prime in range(max_b_rank + 1):
                    pair, ctx = _unipotent_pair(k, r)
                    m_prime = witt_index_of_cuspidal(k_prime) + r_prime
                    ctx_p = TowerContext(m_prime, parity_prime, 3)
                    full = omega_full(pair, ctx, ctx_p)
                    direct = omega_unipotent(ctx, ctx_p, k)
                    if full.hash_descriptor or full.l or full.l_prime:
                        return _fail(name, f"k={k}, r={r}: nonempty hash part")
                    a = json.dumps(full.unipotent_table.to_json_dict(), sort_keys=True)
                    b = json.dumps(direct.to_json_dict(), sort_keys=True)
                    if a != b:
                        return _fail(
                            name, f"k={k}, r={r}, r'={r_prime}: tables differ"
                        )
                    compared += 1
    return _ok(name, f"{compared} tables byte-identical to omega_unipotent")


def check_membership(max_b_rank: int = 3) -> CheckResult:
    """Full-correspondence membership agrees with table linkage,
    exhaustively over all label pairs at drop l <= 1."""
    name = "membership bijection"
    checked = 0
    hash_labels = {0: [()], 1: [("2",), ("1,1",)]}
    for extra in (0, 2):
        l = extra // 2
        for k in (0, 1):
            for r in range(max_b_rank + 1):
                for r_prime in range(max_b_rank + 1):
                    pair, ctx = _unipotent_pair(k, r, extra_minus_one=extra)
                    k_prime = theta_cuspidal(k, (ctx.dim_parity + extra) % 2)
                    nu1_p = 2 * r_prime + triangular(k_prime)
                    n_prime = nu1_p + extra
                    ctx_p = TowerContext(n_prime // 2, n_prime % 2, 3)
                    full = omega_full(pair, ctx, ctx_p)
                    table = full.unipotent_table
                    for h in hash_labels[l]:
                        for h_p in hash_labels[l]:
                            for u in table.row_labels:
                                linked = {c for c, _ in table.row(u)}
                                for u_p in table.col_labels:
                                    member = full.contains((h, u), (h_p, u_p))
                                    expected = h == h_p and u_p in linked
                                    if member != expected:
                                        return _fail(
                                            name,
                                            f"l={l}, k={k}, r={r}, r'={r_prime}: "
                                            f"({h},{u}) vs ({h_p},{u_p})",
                                        )
                                    checked += 1
    return _ok(name, f"{checked} label pairs agree with table linkage (l <= 1)")


def check_transport() -> CheckResult:
    """Support and series transport: growth padding, verbatim nontrivial
    blocks, round trips, the zero case, and the underflow error."""
    name = "transport laws"
    sigma = GLCuspidal(2, "rho")
    phi = GenericCuspidal("phi", first_occurrence=1, partner_label="phi'")
    sup = CuspidalSupport((sigma, TRIVIAL_GL), phi)
    ctx, ctx_p = TowerContext(4, 0), TowerContext(5, 1)
    out = transport_support(sup, ctx, ctx_p)
    if out is None or out.phi.label != "phi'":
        return _fail(name, "growth transport lost the anchor")
    if tuple(e for e in out.entries if not e.is_trivial) != (sigma,):
        return _fail(name, "nontrivial block not verbatim")
    if out.trivial_count != 2:
        return _fail(name, f"expected 2 trivial entries, got {out.trivial_count}")
    if transport_support(out, ctx_p, ctx) != sup:
        return _fail(name, "grow-then-shrink round trip broken")
    if transport_support(
        CuspidalSupport((), UnipotentCuspidal(2)), TowerContext(1, 1), TowerContext(2, 0)
    ) is not None:
        return _fail(name, "image below first occurrence not zero")
    try:
        transport_support(
            CuspidalSupport((GLCuspidal(1, "st"),), GenericCuspidal("phi", 0)),
            TowerContext(1, 0),
            TowerContext(0, 1),
        )
        return _fail(name, "underflow did not raise")
    except ValueError:
        pass
    pair, ctx = _unipotent_pair(1, 2, extra_minus_one=2)
    ctx_p = TowerContext(ctx.witt_index + 2, 1 - ctx.dim_parity, 3)
    moved = transport_series(pair, ctx, ctx_p)
    if moved is None or transport_series(moved, ctx_p, ctx) != pair:
        return _fail(name, "series round trip broken")
    coords = coordinates_in(
        (("1,1",), SeriesLabel(1, bipartition((1,), ()))),
        centralizer_decomposition(pair.semisimple, ctx),
    )
    back = coordinates_out(coords, centralizer_decomposition(pair.semisimple, ctx))
    if back != (("1,1",), SeriesLabel(1, bipartition((1,), ()))):
        return _fail(name, "coordinate relabelling not the identity")
    return _ok(name, "padding, verbatim blocks, round trips, zero and underflow")


def check_pinned_table() -> CheckResult:
    """The hand-expanded (m, m', k) = (1, 1, 0) table."""
    name = "pinned (1,1,0) table"
    table = omega_unipotent(TowerContext(1, 0), TowerContext(1, 0), 0)
    triv, sgn = bipartition((1,), ()), bipartition((), (1,))
    want = {(triv, triv): 1, (triv, sgn): 1, (sgn, triv): 1}
    if dict(table.entries) != want:
        return _fail(name, f"got {table.entries}")
    return _ok(name, "exactly (triv,triv), (triv,sgn), (sgn,triv), each once")


# ---------------------------------------------------------------------------
# driver


def run_verification(max_rank: int = 3, seed: int = 20260825) -> list:
    """The full suite at a size budget set by max_rank (tables and
    induction use it directly; the quadratic sweeps are capped lower)."""
    if not 1 <= max_rank <= 6:
        raise ValueError("max_rank must be between 1 and 6")
    b_rank = min(max_rank, 4)
    return [
        check_induction(max_rank),
        check_character_tables(max_rank),
        check_omega(min(b_rank, 3)),
        check_zero_law(),
        check_row_persistence(min(b_rank, 3)),
        check_extremal(b_rank),
        check_centralizers(count=60, seed=seed),
        check_reduction_consistency(min(b_rank, 2)),
        check_membership(min(b_rank, 2)),
        check_transport(),
        check_pinned_table(),
    ]
