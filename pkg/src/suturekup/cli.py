"""Command-line front end; deterministic text output, exit code 0 on success."""

from __future__ import annotations

import argparse
import os
import sys

from .abelian import abelianize
from .diagram import presentation, random_datum, validate
from .files import (
    detect_input,
    load_diagram,
    load_presentation,
    load_representation,
)
from .hopf import ExteriorAlgebra, verify_axioms
from .kuperberg import EvaluationOptions, Representation, evaluate_z, evaluate_z_twisted
from .laurent import normalize_unit
from .numberfield import QQ
from .torsion import crosscheck, twisted_alexander_knot, twisted_torsion
from .words import parse_word

SEED_ENV = "SUTURE_KUP_SEED"


def _parse_hopf(spec: str) -> int:
    kind, _, dim = spec.partition(":")
    if kind != "exterior" or not dim.isdigit():
        raise SystemExit(f"unsupported Hopf algebra {spec!r}; use exterior:N")
    return int(dim)


def _load_presentation_any(path):
    kind = detect_input(path)
    if kind == "diagram":
        D = load_diagram(path)
        report = validate(D)
        if not report.valid:
            raise SystemExit("invalid diagram: " + "; ".join(report.errors))
        return presentation(D)
    return load_presentation(path)


def cmd_validate(args) -> int:
    D = load_diagram(args.diagram)
    report = validate(D)
    if report.valid:
        print("valid")
        return 0
    for message in report.errors:
        print(f"error: {message}")
    return 1


def cmd_presentation(args) -> int:
    pres = _load_presentation_any(args.input)
    names = pres.generator_names()
    print("generators: " + " ".join(names))
    print(f"closed_count: {pres.closed_count}")
    for j, rel in enumerate(pres.relators):
        print(f"relator {j + 1}: {rel.format(names)}")
    return 0


def cmd_homology(args) -> int:
    pres = _load_presentation_any(args.input)
    amap = abelianize(pres.num_generators, pres.relators)
    names = pres.generator_names()
    print(f"rank: {amap.rank}")
    print("torsion: " + (" ".join(str(t) for t in amap.torsion) if amap.torsion else "none"))
    for name, img in zip(names, amap.gen_images):
        print(f"{name} -> ({', '.join(str(x) for x in img)})")
    return 0


def cmd_alexander(args) -> int:
    pres = _load_presentation_any(args.input)
    result = twisted_torsion(pres)
    print(result.normalized)
    return 0


def cmd_twisted_alexander(args) -> int:
    pres = _load_presentation_any(args.input)
    rep_file = load_representation(args.representation)
    if rep_file.meridian is None:
        raise SystemExit("representation file must name a meridian word")
    names = pres.generator_names()
    matrices = rep_file.matrices_for(names)
    meridian = parse_word(rep_file.meridian, names)
    result = twisted_alexander_knot(pres, matrices, meridian,
                                    rep_file.dimension, rep_file.field)
    print(f"torsion: {normalize_unit(result.torsion)}")
    print(f"boundary_factor: {normalize_unit(result.boundary_factor)}")
    if result.exact:
        print(f"quotient: {normalize_unit(result.quotient)}")
    else:
        print("quotient: not exact")
    return 0


def _representation_args(args, pres):
    n = _parse_hopf(args.hopf)
    names = pres.generator_names()
    if args.rep:
        rep_file = load_representation(args.rep)
        if rep_file.dimension != n:
            raise SystemExit("representation dimension does not match --hopf")
        return n, rep_file.field, rep_file.matrices_for(names)
    return n, QQ, None


def cmd_kuperberg(args) -> int:
    D = load_diagram(args.diagram)
    report = validate(D)
    if not report.valid:
        raise SystemExit("invalid diagram: " + "; ".join(report.errors))
    pres = presentation(D)
    n, field, matrices = _representation_args(args, pres)
    opts = EvaluationOptions(homology_orientation_sign=args.sign, threads=args.threads)
    if args.twisted:
        value = evaluate_z_twisted(D, n, matrices, opts, field)
    else:
        if matrices is None:
            rep = Representation.trivial(pres.num_generators, n, field)
        else:
            rep = Representation(field, n, matrices)
        H = ExteriorAlgebra(n, field)
        value = evaluate_z(D, H, rep, opts)
    print(value)
    return 0


def cmd_crosscheck(args) -> int:
    n = _parse_hopf(args.hopf)
    opts = EvaluationOptions(threads=args.threads)
    failures = 0
    if args.random:
        base = int(os.environ.get(SEED_ENV, "0"))
        for k in range(args.random):
            seed = base + k
            D = random_datum(seed, d=1 + k % 2, l=k % 3, max_crossings=4)
            report = crosscheck(D, n, twisted=bool(args.twisted), opts=opts)
            status = "PASS" if report.passed else "FAIL"
            print(f"seed {seed}: {status}")
            failures += not report.passed
        return 1 if failures else 0
    D = load_diagram(args.diagram)
    vreport = validate(D)
    if not vreport.valid:
        raise SystemExit("invalid diagram: " + "; ".join(vreport.errors))
    pres = presentation(D)
    matrices = None
    field = QQ
    if args.rep:
        rep_file = load_representation(args.rep)
        if rep_file.dimension != n:
            raise SystemExit("representation dimension does not match --hopf")
        field = rep_file.field
        matrices = rep_file.matrices_for(pres.generator_names())
    report = crosscheck(D, n, matrices, twisted=bool(args.twisted),
                        field=field, opts=opts)
    print("PASS" if report.passed else "FAIL")
    print(f"Z = {report.z_value}")
    print(f"det = {report.det_value}")
    return 0 if report.passed else 1


def cmd_axioms(args) -> int:
    n = _parse_hopf(args.hopf)
    report = verify_axioms(ExteriorAlgebra(n))
    for line in report.lines():
        print(line)
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="suturekup",
        description="Twisted Kuperberg invariants and twisted torsion from "
                    "combinatorial Heegaard data, over exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a diagram file")
    p.add_argument("diagram")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("presentation", help="print the induced group presentation")
    p.add_argument("input")
    p.set_defaults(func=cmd_presentation)

    p = sub.add_parser("homology", help="free abelianization of the group")
    p.add_argument("input")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("alexander",
                       help="normalized n=1 trivial-representation torsion")
    p.add_argument("input")
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("twisted-alexander",
                       help="twisted torsion, boundary factor and quotient")
    p.add_argument("input")
    p.add_argument("representation")
    p.set_defaults(func=cmd_twisted_alexander)

    p = sub.add_parser("kuperberg", help="evaluate the invariant on a diagram")
    p.add_argument("diagram")
    p.add_argument("--hopf", required=True, help="exterior:N")
    p.add_argument("--rep", help="representation file")
    p.add_argument("--twisted", action="store_true")
    p.add_argument("--sign", type=int, default=1, choices=(1, -1),
                   help="homology orientation sign")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_kuperberg)

    p = sub.add_parser("crosscheck",
                       help="compare the invariant with the Fox determinant")
    p.add_argument("diagram", nargs="?")
    p.add_argument("--hopf", required=True, help="exterior:N")
    p.add_argument("--rep", help="representation file")
    p.add_argument("--twisted", action="store_true")
    p.add_argument("--random", type=int, default=0, metavar="N",
                   help=f"run N seeded random data (seed base from ${SEED_ENV})")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("axioms", help="verify the Hopf superalgebra axioms")
    p.add_argument("--hopf", required=True, help="exterior:N")
    p.set_defaults(func=cmd_axioms)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "crosscheck" and not args.random and not args.diagram:
        parser.error("crosscheck needs a diagram file or --random N")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
