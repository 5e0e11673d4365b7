"""Command-line interface."""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from pathlib import Path

from .builders import (build_cdn, build_dual_group_algebra, build_group_algebra, build_h16, build_h32,
                       build_dual_hopf, build_taft, cyclic_group, symmetric_group_3)
from .classify import extract_group_datum
from .errors import (DomainError, DualChevalleyRequired, HopfQuiverError, InternalError,
                     NonSplitError, NotApplicableError)
from .field import DEFAULT_MAX_CYCLOTOMIC, FieldSpec, parse_rational, root_of_unity
from .fileformat import canonical_json, dumps, load
from .fusion import fusion_table, require_dual_chevalley
from .hopf import HopfAlgebra
from .quiver import build_link_quiver, quiver_verdict, to_dot
from .report import analyze, render, summary_line

EXIT_OK, EXIT_INPUT, EXIT_AXIOM, EXIT_NON_SPLIT, EXIT_DUAL_CHEVALLEY = 0, 1, 2, 3, 4
EXIT_NOT_APPLICABLE, EXIT_INTERNAL = 5, 6


def parse_scalar(text: str, field: FieldSpec):
    """Rational "p/q", "i", "-i", or "zeta^k" / "-zeta^k" in Q(zeta_m)."""
    t = text.strip().replace(" ", "")
    sign = 1
    if t.startswith("-") and not re.fullmatch(r"-\d+(/\d+)?", t):
        sign, t = -1, t[1:]
    if t == "i":
        if field.cyclotomic_order % 4:
            raise DomainError(f"i is not in Q(zeta_{field.cyclotomic_order})")
        return root_of_unity(field, field.cyclotomic_order // 4) * sign
    m = re.fullmatch(r"zeta(?:\^(-?\d+))?", t)
    if m:
        return root_of_unity(field, int(m.group(1) or 1)) * sign
    return field(parse_rational(t)) * sign


def _group(spec: str):
    m = re.fullmatch(r"[ZC](\d+)", spec)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise DomainError("cyclic group order must be positive")
        return cyclic_group(n), n
    if spec.upper() == "S3":
        return symmetric_group_3(), 1
    raise DomainError(f"unknown group {spec!r}; use Z<n> or S3")


def _demo(args):
    name = args.name
    if name == "taft":
        if args.n is None or args.d is None:
            raise DomainError("taft needs --n and --d")
        m = args.m if args.m is not None else (args.d if args.d >= 3 else 1)
        field = FieldSpec(m)
        return build_taft(args.n, args.d, parse_scalar(args.mu, field), parse_scalar(args.q, field))
    if name in ("group", "dualgroup"):
        (table, names), exponent = _group(args.group)
        if name == "group":
            field = FieldSpec(args.m or 1)
            return build_group_algebra(table, names, field, name=f"k{args.group}")
        field = FieldSpec(args.m or exponent)
        return build_dual_group_algebra(table, names, field, name=f"dual_k{args.group}")
    if name == "cdn":
        if args.n is None or args.d is None:
            raise DomainError("cdn needs --n and --d")
        return build_cdn(args.n, args.d)
    if name == "h16":
        return build_h16()
    if name == "h32":
        return build_h32(Fraction(args.lam))
    raise DomainError(f"unknown demo {name!r}")


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_validate(args) -> int:
    c = load(args.path, args.max_cyclotomic)
    report = c.validate_hopf() if isinstance(c, HopfAlgebra) else c.validate_coalgebra()
    if report.valid:
        print("valid")
        return EXIT_OK
    for v in report.violations:
        print(v)
    return EXIT_AXIOM


def cmd_analyze(args) -> int:
    c = load(args.path, args.max_cyclotomic)
    report, dot = analyze(c, timings=args.timings)
    if args.report:
        _write(args.report, render(report))
    if args.dot:
        _write(args.dot, dot)
    simples = report["simples"]
    print(f"{c.name}: dim {c.dim}, coradical filtration {report['coradical_filtration']}")
    print("simples: " + ", ".join(f"{l} (r={r})" for l, r in zip(simples["labels"], simples["ranks"])))
    print(f"arrows: {sum(map(sum, report['quiver']['arrows']))}")
    if report.get("group_datum"):
        g = report["group_datum"]
        print(f"group datum: n={g['n']} d={g['d']} mu {g['mu_class']}")
    print(summary_line(report))
    return EXIT_OK


def cmd_quiver(args) -> int:
    c = load(args.path, args.max_cyclotomic)
    q = build_link_quiver(c)
    if args.dot:
        _write(args.dot, to_dot(q, name=c.name))
    else:
        sys.stdout.write(canonical_json(q.to_json()))
    return EXIT_OK


def cmd_fusion(args) -> int:
    c = load(args.path, args.max_cyclotomic)
    if not isinstance(c, HopfAlgebra):
        raise DualChevalleyRequired("input has no Hopf structure")
    _write(args.out, canonical_json(fusion_table(c).to_json()))
    return EXIT_OK


def cmd_verdict(args) -> int:
    c = load(args.path, args.max_cyclotomic)
    if not isinstance(c, HopfAlgebra):
        raise DualChevalleyRequired("input has no Hopf structure")
    require_dual_chevalley(c)
    v = quiver_verdict(build_link_quiver(c), c.is_cosemisimple())
    _write(args.out, canonical_json(v.to_json()))
    print(v.summary)
    return EXIT_OK


def cmd_datum(args) -> int:
    c = load(args.path, args.max_cyclotomic)
    if not isinstance(c, HopfAlgebra):
        raise DualChevalleyRequired("input has no Hopf structure")
    _write(args.out, canonical_json(extract_group_datum(c).to_json()))
    return EXIT_OK


def cmd_demo(args) -> int:
    built = _demo(args)
    if args.dual:
        if not isinstance(built, HopfAlgebra):
            raise DomainError("only Hopf algebras can be dualized")
        built = build_dual_hopf(built)
    _write(args.out, dumps(built))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfquiver",
                                description="Link quivers and corepresentation type of finite-dimensional Hopf algebras.")
    p.add_argument("--max-cyclotomic", type=int, default=DEFAULT_MAX_CYCLOTOMIC,
                   help="largest accepted cyclotomic order")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check the coalgebra or Hopf axioms")
    s.add_argument("path")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("analyze", help="run the full pipeline")
    s.add_argument("path")
    s.add_argument("--report", help="write the JSON report here ('-' for stdout)")
    s.add_argument("--dot", help="write the link quiver in DOT format here")
    s.add_argument("--timings", action="store_true", help="include per-stage timings in the report")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("quiver", help="print the link quiver")
    s.add_argument("path")
    s.add_argument("--dot", help="write DOT here ('-' for stdout) instead of JSON")
    s.set_defaults(func=cmd_quiver)

    for name, func, text in (("fusion", cmd_fusion, "print the fusion table"),
                             ("verdict", cmd_verdict, "decide the corepresentation type"),
                             ("datum", cmd_datum, "extract the group datum in finite type")):
        s = sub.add_parser(name, help=text)
        s.add_argument("path")
        s.add_argument("--out", help="output file (default stdout)")
        s.set_defaults(func=func)

    s = sub.add_parser("demo", help="write a builder fixture")
    s.add_argument("name", choices=["taft", "group", "dualgroup", "cdn", "h16", "h32"])
    s.add_argument("--n", type=int)
    s.add_argument("--d", type=int)
    s.add_argument("--mu", default="0")
    s.add_argument("--q", default="-1", help="rational, i, -i or zeta^k")
    s.add_argument("--m", type=int, help="cyclotomic order of the field")
    s.add_argument("--group", default="Z2", help="Z<n> or S3")
    s.add_argument("--lambda", dest="lam", default="1", help="parameter of the 32-dimensional example")
    s.add_argument("--dual", action="store_true", help="emit the dual Hopf algebra instead")
    s.add_argument("--out", help="output file (default stdout)")
    s.set_defaults(func=cmd_demo)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NonSplitError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return EXIT_NON_SPLIT
    except DualChevalleyRequired as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return EXIT_DUAL_CHEVALLEY
    except NotApplicableError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return EXIT_NOT_APPLICABLE
    except DomainError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InternalError, HopfQuiverError) as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
