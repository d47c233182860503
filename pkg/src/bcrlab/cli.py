"""Command-line interface: stable JSON in, stable JSON out.

Exit codes: 0 success, 1 resource bound exceeded, 2 validation failure.
Errors are emitted as one JSON object on stderr.  All randomness takes an
explicit --seed (default 42) so runs are reproducible.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction


def _emit(data, out_path=None):
    text = json.dumps(data, indent=2, sort_keys=True, default=_jsonable)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _jsonable(value):
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    raise TypeError(f"not serializable: {type(value)!r}")


def _fail(message, code):
    json.dump({"error": message}, sys.stderr)
    sys.stderr.write("\n")
    return code


class ValidationError(RuntimeError):
    pass


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read {path}: {exc}")


def _frac_dict(f: Fraction) -> dict:
    return {"num": f.numerator, "den": f.denominator}


# -- subcommands ---------------------------------------------------------------


def cmd_diagrams_enumerate(args):
    from .diagrams import canonical_form, enumerate_connected
    from .diagrams.enumerate import ResourceBoundError

    try:
        classes = enumerate_connected(args.k)
    except ResourceBoundError as exc:
        raise ResourceBoundExceeded(str(exc))
    oriented = 0
    for d in classes:
        cf = canonical_form(d)
        oriented += 1 if (d.n_internal == 0 or cf.sign == 0) else 2
    _emit(
        {
            "k": args.k,
            "count": len(classes),
            "count_up_to_orientation": len(classes),
            "count_oriented": oriented,
            "classes": [d.to_json_dict() for d in classes],
        },
        args.out,
    )


def cmd_diagrams_weight(args):
    from .algebra import weight_w
    from .diagrams import JacobiDiagram, degree2_table

    if args.diagram:
        data = _load_json(args.diagram)
        d = JacobiDiagram.from_json_dict(data)
        errors = d.validate()
        if errors:
            raise ValidationError("; ".join(errors))
        _emit({"weight": _frac_dict(weight_w(d))}, args.out)
        return
    table = {
        name: _frac_dict(weight_w(d)) for name, d in degree2_table().items()
    }
    _emit({"k": 2, "weights": table}, args.out)


def cmd_algebra_quotient_dim(args):
    from .algebra import quotient_dimension
    from .diagrams.enumerate import ResourceBoundError

    try:
        dim = quotient_dimension(args.k)
    except ResourceBoundError as exc:
        raise ResourceBoundExceeded(str(exc))
    _emit({"k": args.k, "dim": dim}, args.out)


def cmd_algebra_relations(args):
    from .algebra import relation_vectors
    from .diagrams.enumerate import ResourceBoundError

    try:
        rels = relation_vectors(args.k)
    except ResourceBoundError as exc:
        raise ResourceBoundExceeded(str(exc))
    _emit(
        {
            "k": args.k,
            "count": len(rels.relations),
            "dropped": rels.dropped,
            "relations": rels.to_json_list(),
        },
        args.out,
    )


def cmd_alexander(args):
    from .ribbon import RibbonPresentation, alexander_polynomial

    p = RibbonPresentation.from_json_dict(_load_json(args.presentation))
    errors = p.validate()
    if errors:
        raise ValidationError("; ".join(errors))
    delta = alexander_polynomial(p)
    _emit({"alexander": delta.to_json_dict()}, args.out)


def cmd_alpha(args):
    from .ribbon import RibbonPresentation, alpha_coefficients

    p = RibbonPresentation.from_json_dict(_load_json(args.presentation))
    errors = p.validate()
    if errors:
        raise ValidationError("; ".join(errors))
    coeffs = alpha_coefficients(p, args.order)
    _emit(
        {
            "order": args.order,
            "alpha": {str(j + 2): _frac_dict(c) for j, c in enumerate(coeffs)},
        },
        args.out,
    )


def _parse_invariant(name: str):
    from .ribbon import alexander_polynomial, alpha

    if name == "alexander":
        raise ValidationError(
            "schemes need a rational-valued invariant; use alpha:<j> "
            "(the alexander polynomial itself is not scalar)"
        )
    if name.startswith("alpha:"):
        j = int(name.split(":", 1)[1])
        if j < 2:
            raise ValidationError("alpha index must be at least 2")
        return lambda p: alpha(p, j)
    raise ValidationError(f"unknown invariant {name!r} (expected alpha:<j>)")


def cmd_scheme_eval(args):
    from .schemes import MarkedPresentation, evaluate_marked

    mp = MarkedPresentation.from_json_dict(_load_json(args.marked))
    errors = mp.validate()
    if errors:
        raise ValidationError("; ".join(errors))
    inv = _parse_invariant(args.invariant)
    value = evaluate_marked(inv, mp)
    _emit(
        {"invariant": args.invariant, "value": _frac_dict(value)},
        args.out,
    )


def cmd_chordmap(args):
    from .chordmap import SingularDiskError, chord_diagram_of, pairing_value
    from .schemes import MarkedPresentation

    mp = MarkedPresentation.from_json_dict(_load_json(args.marked))
    try:
        d = chord_diagram_of(mp)
        value = pairing_value(mp)
    except SingularDiskError as exc:
        raise ValidationError(str(exc))
    _emit(
        {"diagram": d.to_json_dict(), "pairing_value": _frac_dict(value)},
        args.out,
    )


def cmd_mc(args):
    from .mc.config import MCConfig

    cfg = MCConfig(
        samples=int(float(args.samples)),
        seed=args.seed,
        batches=args.batches,
        cutoff=args.cutoff,
        antithetic=args.antithetic,
    )
    if args.mode == "linking":
        from .mc.linking import hopf_pair, linking_estimate

        a, b = hopf_pair(args.n + 2)
        est = linking_estimate(a, b, cfg)
    elif args.mode == "phi-diff":
        from .mc.phidiff import phi_difference_estimate

        if args.n != 3:
            raise ValidationError("phi-diff is implemented for n = 3")
        est = phi_difference_estimate(k=args.k, j=args.j, eps=args.eps, cfg=cfg)
    elif args.mode == "z2":
        from .mc.embeddings import StandardPlane, wheel_embedding
        from .mc.z2 import z2_estimate

        if args.n != 3:
            raise ValidationError("z2 is implemented for n = 3")
        if args.embedding == "plane":
            emb = StandardPlane()
        elif args.embedding == "wheel":
            emb = wheel_embedding(2, args.eps)
        else:
            raise ValidationError(f"unknown embedding {args.embedding!r}")
        est = z2_estimate(emb, cfg)
    else:
        raise ValidationError(f"unknown mc mode {args.mode!r}")
    _emit(est.to_json_dict(), args.out)


class ResourceBoundExceeded(RuntimeError):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bcrlab",
        description=(
            "Diagram algebra, ribbon-presentation invariants, and Monte Carlo "
            "configuration-space integrals for long n-knots."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diagrams", help="diagram enumeration and weights")
    dsub = p.add_subparsers(dest="subcommand", required=True)
    pe = dsub.add_parser("enumerate", help="list degree-k classes")
    pe.add_argument("--k", type=int, required=True)
    pe.add_argument("--out")
    pe.set_defaults(func=cmd_diagrams_enumerate)
    pw = dsub.add_parser("weight", help="weight of a diagram (or the degree-2 table)")
    pw.add_argument("--diagram", help="diagram JSON file")
    pw.add_argument("--out")
    pw.set_defaults(func=cmd_diagrams_weight)

    p = sub.add_parser("algebra", help="relations and the quotient")
    asub = p.add_subparsers(dest="subcommand", required=True)
    pq = asub.add_parser("quotient-dim")
    pq.add_argument("--k", type=int, required=True)
    pq.add_argument("--out")
    pq.set_defaults(func=cmd_algebra_quotient_dim)
    pr = asub.add_parser("relations")
    pr.add_argument("--k", type=int, required=True)
    pr.add_argument("--out")
    pr.set_defaults(func=cmd_algebra_relations)

    p = sub.add_parser("alexander", help="normalized Alexander polynomial")
    p.add_argument("--presentation", required=True, help="presentation JSON file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("alpha", help="log-series coefficients")
    p.add_argument("--presentation", required=True)
    p.add_argument("--order", type=int, default=6)
    p.add_argument("--out")
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("scheme", help="scheme evaluation")
    ssub = p.add_subparsers(dest="subcommand", required=True)
    pe = ssub.add_parser("eval")
    pe.add_argument("--marked", required=True, help="marked presentation JSON file")
    pe.add_argument("--invariant", required=True, help="alpha:<j>")
    pe.add_argument("--out")
    pe.set_defaults(func=cmd_scheme_eval)

    p = sub.add_parser("chordmap", help="chord diagram of a marked presentation")
    p.add_argument("--marked", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_chordmap)

    p = sub.add_parser("mc", help="Monte Carlo integrals")
    p.add_argument("mode", choices=["linking", "phi-diff", "z2"])
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--eps", type=float, default=0.1)
    p.add_argument("--samples", default="1e6")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--batches", type=int, default=20)
    p.add_argument("--cutoff", type=float, default=1e-9)
    p.add_argument("--antithetic", action="store_true")
    p.add_argument("--embedding", default="wheel", choices=["wheel", "plane"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_mc)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad flags, matching the validation code
        return int(exc.code or 0)
    try:
        args.func(args)
    except ResourceBoundExceeded as exc:
        return _fail(str(exc), 1)
    except (ValidationError, ValueError) as exc:
        return _fail(str(exc), 2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
