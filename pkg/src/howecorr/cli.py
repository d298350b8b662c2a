"""Command-line front end.

One subcommand per library entry point: ``omega`` prints a multiplicity
table, ``theta`` the image of one series label, ``extremal`` the least and
greatest image, ``centralizer`` a semisimple centralizer decomposition,
``transport`` a cuspidal support across the pair, ``omega-full`` the full
decomposition, and ``verify`` runs the oracle-equivalence suite.

Exit codes: 0 on success, 1 on validation errors (bad flags or
mathematically inconsistent input, one-line diagnostic on stderr), 2 when
an internal cross-check fails; internal failures are never swallowed.

Mini-grammars: partitions are comma-separated parts ("3,1"; "-" or ""
for the empty partition); orbit lists are comma-separated
``exponent^multiplicity`` tokens ("0^3,4^2", "^1" may be omitted); GL
parts are comma-separated ``size:label`` tokens ("1:1,2:rho") where the
label ``1`` is reserved for the trivial cuspidal on GL_1.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InternalCheckError, NonUniqueExtremeError
from .lusztig import (
    CuspidalPair,
    CuspidalSupport,
    GLCuspidal,
    GenericCuspidal,
    SemisimpleDescriptor,
    UnipotentCuspidal,
    centralizer_decomposition,
    omega_full,
    orbit_closure,
    transport_support,
)
from .partitions import Partition, Bipartition
from .unipotent import (
    DEFAULT_SGN_CONVENTION,
    SGN_CONVENTIONS,
    SeriesLabel,
    TowerContext,
    extremal_images,
    omega_unipotent,
    theta_images,
    triangular,
)
from .verify import run_verification


class _Parser(argparse.ArgumentParser):
    # validation failures must exit 1, not argparse's default 2
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "-"):
        return Partition(())
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"bad partition {text!r}: expected comma-separated parts")
    return Partition(parts)


def parse_orbits(q: int, modulus: int, text: str) -> SemisimpleDescriptor:
    orbits = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        exp, _, mult = token.partition("^")
        try:
            exponent = int(exp)
            multiplicity = int(mult) if mult else 1
        except ValueError:
            raise ValueError(
                f"bad orbit token {token!r}: expected exponent^multiplicity"
            )
        orbits.append(orbit_closure(q, modulus, exponent, multiplicity))
    return SemisimpleDescriptor(q, modulus, tuple(orbits))


def parse_gl_part(text: str) -> tuple:
    entries = []
    text = text.strip()
    if text in ("", "-"):
        return ()
    for token in text.split(","):
        size, sep, label = token.strip().partition(":")
        if not sep:
            raise ValueError(f"bad GL token {token!r}: expected size:label")
        try:
            entries.append(GLCuspidal(int(size), label))
        except ValueError as err:
            raise ValueError(f"bad GL token {token!r}: {err}")
    return tuple(entries)


def _bp_json(bp: Bipartition) -> dict:
    return {"alpha": list(bp.alpha), "beta": list(bp.beta)}


def _label_text(bp: Bipartition) -> str:
    def side(p):
        return ",".join(str(x) for x in p) if p else "-"

    return f"{side(bp.alpha)}|{side(bp.beta)}"


def _contexts(args) -> tuple:
    parity = args.parity
    if parity is None:
        parity = triangular(args.k) % 2
    parity_p = args.parity_p
    if parity_p is None:
        parity_p = triangular(args.k) % 2
    return TowerContext(args.m, parity), TowerContext(args.mp, parity_p)


def _cmd_omega(args):
    ctx, ctx_p = _contexts(args)
    table = omega_unipotent(ctx, ctx_p, args.k, convention=args.convention)
    return table.to_json_dict(), table.to_text(), 0


def _pi_of(args) -> SeriesLabel:
    return SeriesLabel(
        args.k, Bipartition(parse_partition(args.alpha), parse_partition(args.beta))
    )


def _cmd_theta(args):
    ctx, ctx_p = _contexts(args)
    pi = _pi_of(args)
    images = theta_images(pi, ctx, ctx_p, convention=args.convention)
    k_prime = omega_unipotent(ctx, ctx_p, args.k, convention=args.convention).k_prime
    payload = {
        "pi": {"k": pi.k, **_bp_json(pi.char_label)},
        "k_prime": k_prime,
        "zero": not images,
        "images": [
            {"k": lbl.k, **_bp_json(lbl.char_label), "multiplicity": mult}
            for lbl, mult in images
        ],
    }
    if not images:
        return payload, "zero", 0
    lines = [
        f"k'={lbl.k}  {_label_text(lbl.char_label)}  x{mult}" for lbl, mult in images
    ]
    return payload, "\n".join(lines), 0


def _cmd_extremal(args):
    ctx, ctx_p = _contexts(args)
    pi = _pi_of(args)
    if not theta_images(pi, ctx, ctx_p, convention=args.convention):
        return {"zero": True}, "zero", 0
    lo, hi = extremal_images(pi, ctx, ctx_p, convention=args.convention)
    payload = {
        "zero": False,
        "min": {"k": lo.k, **_bp_json(lo.char_label)},
        "max": {"k": hi.k, **_bp_json(hi.char_label)},
    }
    text = (
        f"min  k'={lo.k}  {_label_text(lo.char_label)}\n"
        f"max  k'={hi.k}  {_label_text(hi.char_label)}"
    )
    return payload, text, 0


def _cmd_centralizer(args):
    modulus = args.modulus if args.modulus else args.q * args.q - 1
    s = parse_orbits(args.q, modulus, args.orbits)
    if s.dimension != args.n:
        raise ValueError(f"orbits span dimension {s.dimension}, group has {args.n}")
    ctx = TowerContext(args.n // 2, args.n % 2, args.q)
    factors, block, l = centralizer_decomposition(s, ctx)
    payload = {
        "semisimple": s.to_json_dict(),
        "factors": [f.to_json_dict() for f in factors],
        "unipotent_block": {
            "dimension": block.dimension,
            "witt_index": block.witt_index,
            "dim_parity": block.dim_parity,
        },
        "l": l,
    }
    lines = [
        f"{f.kind} of degree {f.size} over the degree-{f.field_degree} extension"
        for f in factors
    ] or ["no factors away from eigenvalue 1"]
    lines.append(
        f"eigenvalue-1 block: dimension {block.dimension} "
        f"(witt index {block.witt_index}, parity {block.dim_parity})"
    )
    lines.append(f"l = {l}")
    return payload, "\n".join(lines), 0


def _support_of(args) -> CuspidalSupport:
    entries = parse_gl_part(args.support)
    if args.phi_k is not None:
        phi = UnipotentCuspidal(args.phi_k)
    else:
        if args.phi is None or args.first_occurrence is None:
            raise ValueError(
                "anchor required: either --phi-k, or --phi with --first-occurrence"
            )
        phi = GenericCuspidal(args.phi, args.first_occurrence, args.partner_label)
    return CuspidalSupport(entries, phi)


def _cmd_transport(args):
    support = _support_of(args)
    parity = args.parity
    if parity is None:
        parity = triangular(args.phi_k) % 2 if args.phi_k is not None else 0
    parity_p = args.parity_p if args.parity_p is not None else 0
    out = transport_support(
        support, TowerContext(args.m, parity), TowerContext(args.mp, parity_p)
    )
    if out is None:
        return {"zero": True}, "zero", 0
    payload = {"zero": False, "support": out.to_json_dict()}
    gl = ", ".join(f"{e.size}:{e.label}" for e in out.entries) or "-"
    if isinstance(out.phi, UnipotentCuspidal):
        anchor = f"cuspidal unipotent k={out.phi.k}"
    else:
        anchor = f"cuspidal {out.phi.label!r} (first occurrence {out.phi.first_occurrence})"
    return payload, f"GL part: {gl}\nanchor: {anchor}", 0


def _cmd_omega_full(args):
    modulus = args.modulus if args.modulus else args.q * args.q - 1
    s = parse_orbits(args.q, modulus, args.orbits)
    pair = CuspidalPair(parse_gl_part(args.pair), args.base_k, s)
    parity = s.dimension - 2 * args.m
    if parity not in (0, 1):
        raise ValueError(
            f"descriptor dimension {s.dimension} does not fit witt index {args.m}"
        )
    parity_p = args.parity_p if args.parity_p is not None else 0
    ctx = TowerContext(args.m, parity, args.q)
    ctx_p = TowerContext(args.mp, parity_p, args.q)
    full = omega_full(pair, ctx, ctx_p, convention=args.convention)
    lines = [
        f"factors away from eigenvalue 1: "
        + (
            ", ".join(
                f"{f.kind}(degree {f.size}, field degree {f.field_degree})"
                for f in full.hash_descriptor
            )
            or "none"
        ),
        f"pairing: {full.pairing}",
        f"l = {full.l}, l' = {full.l_prime}",
        full.unipotent_table.to_text(),
    ]
    return full.to_json_dict(), "\n".join(lines), 0


def _cmd_verify(args):
    results = run_verification(max_rank=args.max_rank, seed=args.seed)
    payload = [
        {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
    ]
    lines = [r.line() for r in results]
    if all(r.passed for r in results):
        lines.append("all properties passed")
        return payload, "\n".join(lines), 0
    lines.append("PROPERTY FAILURES, see lines above")
    return payload, "\n".join(lines), 2


def _add_format_flags(p):
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="machine-readable output")
    fmt.add_argument("--text", action="store_true", help="aligned text (default)")


def _add_series_flags(p, with_label):
    p.add_argument("--m", type=int, required=True, help="witt index of the first group")
    p.add_argument("--mp", type=int, required=True, help="witt index of the second")
    p.add_argument("--k", type=int, required=True, help="cuspidal unipotent index")
    p.add_argument(
        "--parity",
        type=int,
        choices=(0, 1),
        default=None,
        help="dimension parity of the first tower (default: forced by k)",
    )
    p.add_argument(
        "--parity-p",
        type=int,
        choices=(0, 1),
        default=None,
        dest="parity_p",
        help="dimension parity of the second tower (default: same as the first)",
    )
    p.add_argument(
        "--convention",
        choices=SGN_CONVENTIONS,
        default=DEFAULT_SGN_CONVENTION,
        help="which linear character plays the role of sgn",
    )
    if with_label:
        p.add_argument("--alpha", required=True, help="first component of the label")
        p.add_argument("--beta", required=True, help="second component of the label")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="howecorr", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("omega", help="multiplicity table of a pair of series")
    _add_series_flags(p, with_label=False)
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_omega)

    p = sub.add_parser("theta", help="image of one series label")
    _add_series_flags(p, with_label=True)
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_theta)

    p = sub.add_parser("extremal", help="least and greatest image of a label")
    _add_series_flags(p, with_label=True)
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_extremal)

    p = sub.add_parser("centralizer", help="centralizer of a semisimple class")
    p.add_argument("--q", type=int, required=True, help="odd prime power")
    p.add_argument("--n", type=int, required=True, help="ambient dimension")
    p.add_argument("--orbits", required=True, help="exponent^multiplicity,...")
    p.add_argument("--modulus", type=int, default=None, help="default q^2-1")
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_centralizer)

    p = sub.add_parser("transport", help="carry a cuspidal support across the pair")
    p.add_argument("--support", required=True, help="GL part, size:label,...")
    p.add_argument("--phi-k", type=int, default=None, dest="phi_k",
                   help="anchor is the k-th cuspidal unipotent")
    p.add_argument("--phi", default=None, help="opaque anchor label")
    p.add_argument("--first-occurrence", type=int, default=None,
                   dest="first_occurrence",
                   help="partner witt index where the anchor first occurs")
    p.add_argument("--partner-label", default=None, dest="partner_label",
                   help="name of the transported anchor")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mp", type=int, required=True)
    p.add_argument("--parity", type=int, choices=(0, 1), default=None)
    p.add_argument("--parity-p", type=int, choices=(0, 1), default=None,
                   dest="parity_p")
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_transport)

    p = sub.add_parser("omega-full", help="decomposition for an arbitrary series")
    p.add_argument("--pair", required=True,
                   help="GL part of the cuspidal pair, size:label,...")
    p.add_argument("--base-k", type=int, required=True, dest="base_k")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--orbits", required=True, help="exponent^multiplicity,...")
    p.add_argument("--modulus", type=int, default=None)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mp", type=int, required=True)
    p.add_argument("--parity-p", type=int, choices=(0, 1), default=None,
                   dest="parity_p")
    p.add_argument("--convention", choices=SGN_CONVENTIONS,
                   default=DEFAULT_SGN_CONVENTION)
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_omega_full)

    p = sub.add_parser("verify", help="run the oracle-equivalence suite")
    p.add_argument("--max-rank", type=int, default=3, dest="max_rank")
    p.add_argument("--seed", type=int, default=20260825)
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload, text, code = args.handler(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (InternalCheckError, NonUniqueExtremeError) as err:
        print(f"internal check failed: {err}", file=sys.stderr)
        return 2
    print(json.dumps(payload, indent=2, sort_keys=True) if args.json else text)
    return code


if __name__ == "__main__":
    sys.exit(main())
