"""Command-line interface.

Exit codes: 0 success, 1 rejected input or usage error, 2 internal
cross-check failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import core
from .errors import HypothesisError, OreRegularityError, PureFieldError, ReducibleError
from .newton import (
    IntPolynomial,
    build_polygon,
    is_separable_mod_p,
    is_x_power_mod_p,
    lattice_count,
    ore_index_valuation,
    residual_polynomial,
)
from .verify import shifted_polynomial, sweep

EXIT_OK, EXIT_INVALID, EXIT_CHECK = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _integer(text: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}") from None


def _result_dict(value: core.FactoredInteger, decimal: bool) -> dict:
    return {
        "sign": value.sign,
        "factors": [[p, e] for p, e in value.factors],
        "decimal": str(value.value()) if decimal else None,
    }


def _record(command, n, a, status="ok", result=None, witness=None) -> dict:
    return {
        "command": command,
        "n": str(n),
        "a": str(a),
        "status": status,
        "result": result,
        "witness": witness,
    }


def _emit(obj, as_json: bool, text: str) -> None:
    print(json.dumps(obj) if as_json else text)


def _rejection(command, n, a, exc, as_json) -> int:
    if isinstance(exc, ReducibleError):
        rec = _record(command, n, a, "reducible")
        text = f"error: x^{n} - ({a}) is reducible over Q"
    elif isinstance(exc, HypothesisError):
        rec = _record(command, n, a, "hypothesis_violation",
                      witness={"prime": exc.prime, "reason": "hypothesis_violation"})
        text = f"error: hypothesis violated at p={exc.prime} (v_p(a) = {exc.valuation})"
    else:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if as_json:
        print(json.dumps(rec))
    else:
        print(text, file=sys.stderr)
    return EXIT_INVALID


def _oracle_mismatch(f: core.ValidatedPureField) -> str | None:
    """Recompute the index valuations through Newton polygons; describe any disagreement."""
    for d in f.p_data:
        if d.r < 0:
            continue
        ore = ore_index_valuation(shifted_polynomial(d.p, d.s, f.a), d.p)
        if d.cofactor * ore != core.index_p_valuation(d.p, d.s, d.cofactor, d.r):
            return f"index valuation mismatch at p={d.p}"
    g = IntPolynomial.x_n_minus_a(f.n, f.a)
    for (q, t), m in zip(f.a_factors, f.q_gcds):
        if ore_index_valuation(g, q) != core.index_q_valuation(f.n, t, m):
            return f"index valuation mismatch at q={q}"
    disc, index = core.discriminant(f), core.theta_index(f)
    if disc.value() * index.value() ** 2 != core.power_basis_discriminant(f.n, f.a):
        return "global relation fails"
    return None


def _cmd_field(args, which: str) -> int:
    n, a = args.n, args.a
    try:
        f = core.validate(n, a)
    except PureFieldError as exc:
        return _rejection(which, n, a, exc, args.json)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.check:
        try:
            problem = _oracle_mismatch(f)
        except OreRegularityError as exc:
            _emit(_record(which, n, a, "ore_regularity_failure",
                          witness={"prime": exc.prime, "reason": "ore_regularity_failure"}),
                  args.json, f"error: Ore regularity fails at p={exc.prime}")
            return EXIT_CHECK
        if problem:
            print(f"error: cross-check failed: {problem}", file=sys.stderr)
            return EXIT_CHECK
    value = core.discriminant(f) if which == "disc" else core.theta_index(f)
    text = value.format(signed=(which == "disc"))
    if args.decimal:
        text += f" = {value.value()}"
    _emit(_record(which, n, a, result=_result_dict(value, args.decimal)), args.json, text)
    return EXIT_OK


def cmd_disc(args) -> int:
    return _cmd_field(args, "disc")


def cmd_index(args) -> int:
    return _cmd_field(args, "index")


def cmd_monogenic(args) -> int:
    n, a = args.n, args.a
    try:
        yes, witness = core.monogenic(n, a)
    except PureFieldError as exc:
        return _rejection("monogenic", n, a, exc, args.json)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if yes:
        text = "yes"
    elif witness.reason == "a_not_squarefree":
        text = f"no, a not squarefree ({witness.prime}^2 | a)"
    else:
        text = f"no, p={witness.prime} ({witness.prime}^2 | a^{witness.prime - 1} - 1)"
    rec = _record("monogenic", n, a, result={"monogenic": yes},
                  witness=witness.to_dict() if witness else None)
    _emit(rec, args.json, text)
    return EXIT_OK


def parse_polynomial_spec(spec: str) -> IntPolynomial:
    """``xn-a:<n>:<a>``, ``shifted:<p>:<s>:<a>`` or coefficients ``c_0,...,c_n``."""
    parts = spec.split(":")
    if parts[0] == "xn-a" and len(parts) == 3:
        n, a = int(parts[1]), int(parts[2])
        if n < 1:
            raise ValueError("degree must be positive")
        return IntPolynomial.x_n_minus_a(n, a)
    if parts[0] == "shifted" and len(parts) == 4:
        return shifted_polynomial(int(parts[1]), int(parts[2]), int(parts[3]))
    if len(parts) == 1:
        return IntPolynomial(tuple(int(c) for c in spec.split(",")))
    raise ValueError(f"unrecognised polynomial spec {spec!r}")


def cmd_polygon(args) -> int:
    p = args.p
    try:
        g = parse_polynomial_spec(args.spec)
        poly = build_polygon(g, p)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID

    regular = is_x_power_mod_p(g, p)
    edges = []
    for edge in poly.edges:
        item = {
            "start": list(edge.start),
            "end": list(edge.end),
            "slope": f"{edge.slope.numerator}/{edge.slope.denominator}",
            "length": edge.length,
            "e": edge.denominator,
            "residual": None,
            "separable": None,
        }
        if edge.slope > 0:
            T = residual_polynomial(g, p, edge)
            item["residual"] = str(T)
            item["residual_coefficients"] = list(T.coefficients)
            item["separable"] = is_separable_mod_p(T)
        edges.append(item)
    count = lattice_count(poly) if regular else None
    out = {
        "command": "polygon",
        "prime": p,
        "polynomial": [str(c) for c in g.coefficients],
        "vertices": [list(v) for v in poly.vertices],
        "edges": edges,
        "eisenstein": poly.is_eisenstein(),
        "lattice_count": count,
        "ore_regular": regular and all(e["separable"] for e in edges),
        "status": "ok",
    }
    if args.json:
        print(json.dumps(out))
        return EXIT_OK
    print(f"g = {g}")
    print(f"p = {p}")
    print("vertices: " + ",".join(f"({x},{y})" for x, y in poly.vertices))
    for item in edges:
        line = f"edge {tuple(item['start'])}-{tuple(item['end'])}: slope {item['slope']}, length {item['length']}, e {item['e']}"
        if item["residual"] is not None:
            flag = "separable" if item["separable"] else "NOT separable"
            line += f", T = {item['residual']} ({flag})"
        print(line)
    if poly.is_eisenstein():
        print("Eisenstein")
    print(f"count {count if count is not None else 'n/a (g is not x^n mod p)'}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n_max < 2 or args.a_max < 2:
        raise UsageError("verify needs n_max >= 2 and a_max >= 2")
    report = sweep(args.n_max, args.a_max, workers=args.workers)
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        print(f"pairs {report.pairs}, validated {report.validated}, "
              f"reducible {report.skipped_reducible}, hypothesis {report.skipped_hypothesis}")
        print(f"checks passed {report.checks_passed}, polygons {report.polygons_checked}, "
              f"failures {len(report.failures)}, {report.wall_time:.2f}s")
        for fail in report.failures:
            print("FAIL " + json.dumps(fail))
    return EXIT_OK if report.ok else EXIT_CHECK


def table_rows(degree: int, a_min: int, a_max: int) -> list[dict]:
    """Discriminants for validating a in [a_min, a_max]; each row is cross-checked."""
    rows = []
    for a in range(a_min, a_max + 1):
        if a == 0:
            continue
        try:
            f = core.validate(degree, a)
        except PureFieldError:
            continue
        disc = core.discriminant(f)
        index = core.theta_index(f)
        if disc.value() * index.value() ** 2 != core.power_basis_discriminant(degree, a):
            raise AssertionError(f"global relation fails for n={degree}, a={a}")
        if degree == 8 and abs(a) > 1 and all(t == 1 for _, t in f.a_factors):
            if core.octic_table(a) != disc:
                raise AssertionError(f"octic case split disagrees for a={a}")
        residue, modulus = core.residue_class(f)
        rows.append({"a": str(a), "class": f"{residue} mod {modulus}", "disc": disc.format(),
                     "result": _result_dict(disc, False)})
    return rows


def cmd_table(args) -> int:
    if args.degree < 2:
        raise UsageError("degree must be at least 2")
    try:
        rows = table_rows(args.degree, args.a_min, args.a_max)
    except AssertionError as exc:
        print(f"error: cross-check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    if args.format == "json":
        print(json.dumps({"command": "table", "degree": args.degree, "rows": rows}))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["a", "class", "disc"])
        for row in rows:
            writer.writerow([row["a"], row["class"], row["disc"]])
        sys.stdout.write(buf.getvalue())
    else:
        width = max([len(r["a"]) for r in rows] + [1])
        cwidth = max([len(r["class"]) for r in rows] + [5])
        for row in rows:
            print(f"{row['a']:>{width}}  {row['class']:<{cwidth}}  {row['disc']}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="purefield", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, func, helptext in (
        ("disc", cmd_disc, "field discriminant d_K"),
        ("index", cmd_index, "index [A_K : Z[theta]]"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("n", type=_integer)
        sp.add_argument("a", type=_integer)
        sp.add_argument("--decimal", action="store_true", help="also print the exact decimal value")
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--check", action="store_true",
                        help="recompute through Newton polygons and compare")
        sp.set_defaults(func=func)

    sp = sub.add_parser("monogenic", help="is 1, theta, ..., theta^(n-1) an integral basis")
    sp.add_argument("n", type=_integer)
    sp.add_argument("a", type=_integer)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_monogenic)

    sp = sub.add_parser("polygon", help="p-adic Newton polygon of a polynomial")
    sp.add_argument("p", type=_integer)
    sp.add_argument("spec", help="xn-a:<n>:<a> | shifted:<p>:<s>:<a> | c_0,...,c_n")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_polygon)

    sp = sub.add_parser("verify", help="sweep all small (n, a) and cross-check both routes")
    sp.add_argument("n_max", type=_integer)
    sp.add_argument("a_max", type=_integer)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--workers", type=int, default=None)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("table", help="discriminants over a range of a")
    sp.add_argument("degree", type=_integer)
    sp.add_argument("a_min", type=_integer)
    sp.add_argument("a_max", type=_integer)
    sp.add_argument("--format", choices=("text", "csv", "json"), default="text")
    sp.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
