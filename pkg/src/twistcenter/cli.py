"""Command line front end.

Exit status: 0 success, 1 usage error, 2 domain error (bad l, bad rank,
weight out of range), 3 selftest found an unexplained mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import center as C
from .cartan import TwistedType, parse_type
from .errors import DomainError, TwistCenterError
from .pbw import PartitionTable, par
from .roots import real_roots_upto, render_vector
from .selftest import run_all

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_SELFTEST = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _eta(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"weight must look like c0,c1,...,cn, got {text!r}") from None


def _check_eta(t: TwistedType, eta: tuple[int, ...]) -> tuple[int, ...]:
    if len(eta) != len(t.index_set):
        raise DomainError(f"weight {eta} needs {len(t.index_set)} coordinates for {t}")
    if any(c < 0 for c in eta):
        raise DomainError(f"weight {eta} has a negative coordinate")
    return eta


# each command returns (payload, table); table is (header, rows) or None


def cmd_info(t, args):
    payload = {
        "type": t.name,
        "family": t.family.value,
        "n": t.n,
        "ntilde": t.ntilde,
        "k": t.k,
        "I": list(t.index_set),
        "matrix": [list(row) for row in t.cartan],
        "d": list(t.d),
        "r": list(t.marks),
        "delta": render_vector(t.marks),
        "edges": [
            {"ends": [e.i, e.j], "mult": e.mult, "arrow": e.arrow} for e in t.diagram.edges
        ],
    }
    rows = [[i, t.d[i], t.marks[i], " ".join(map(str, t.cartan[i]))] for i in t.index_set]
    return payload, (["i", "d", "r", "matrix_row"], rows)


def cmd_roots(t, args):
    cat = real_roots_upto(t, args.ddeg)
    roots = [{"name": render_vector(a.v), **row} for a, row in zip(cat.reals, cat.to_json())]
    payload = {"type": t.name, "ddeg": args.ddeg, "count": len(roots), "roots": roots}
    rows = [[r["name"], ",".join(map(str, r["coords"])), r["ddeg"], r["d_alpha"]] for r in roots]
    return payload, (["root", "coords", "ddeg", "d_alpha"], rows)


def cmd_par(t, args):
    eta = _check_eta(t, args.eta)
    cat = real_roots_upto(t, eta[0])
    value = par(t, eta, cat)
    return {"type": t.name, "eta": list(eta), "par": value}, None


def _dethr_rows(t, l, rmax):
    out = []
    for r in range(1, rmax + 1):
        h = C.det_hr(t, r, l)
        out.append(
            {
                "r": r,
                "table_mult": h.table_mult,
                "formula_mult": h.formula_mult,
                "discrepancy": h.discrepancy,
                "product": str(h.product),
            }
        )
    return out


def _write_log(path, entries):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            for d in entries:
                fh.write(json.dumps(d.to_json(), sort_keys=True) + "\n")


def cmd_dethr(t, args):
    rows = _dethr_rows(t, args.l, args.rmax)
    _write_log(args.log, C.det_hr_discrepancies(t, args.l, args.rmax))
    payload = {"type": t.name, "l": args.l, "rmax": args.rmax, "rows": rows}
    table = [[x["r"], x["table_mult"], x["formula_mult"], int(x["discrepancy"]), x["product"]] for x in rows]
    return payload, (["r", "table_mult", "formula_mult", "discrepancy", "product"], table)


def cmd_mult(t, args):
    eta = _check_eta(t, args.eta)
    cat = real_roots_upto(t, eta[0])
    table = PartitionTable(cat, eta)
    hc = C.highest_coeff_mult(t, eta, args.l, cat, table=table)
    zb = C.ziz_bound(t, eta, args.l, cat, table=table)
    payload = {
        "type": t.name,
        "l": args.l,
        "eta": list(eta),
        "highest_coeff_mult": hc,
        "ziz_bound": zb,
        "ziz_bound_existing_slots": C.ziz_bound(t, eta, args.l, cat, table=table, printed_slots=False),
        "discrepancy_excess": C.discrepancy_excess(t, eta, args.l, cat, table=table),
        "graded_center_dim": C.graded_center_dim(t, args.l, eta, cat),
    }
    return payload, None


def cmd_jsets(t, args):
    js = C.jsets(t, args.l, args.rmax)
    rows = [[r, i] for r, i in js.jsecond]
    return js.to_json(), (["r", "i_star"], rows)


def cmd_star(t, args):
    s = C.star_coeffs(t, args.r, args.l)
    rows = [[i, str(c)] for i, c in sorted(s.coeffs.items())]
    return s.to_json(), (["i", "coeff"], rows)


def cmd_center(t, args):
    cat = C.center_generators(t, args.l, args.ddeg)
    _write_log(args.log, cat.log)
    rows = [[g.tag, ",".join(map(str, g.weight)), json.dumps(g.params, sort_keys=True)] for g in cat.generators]
    return cat.to_json(), (["tag", "weight", "params"], rows)


def _render(payload, table, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True)
    if table is None:
        items = [[k, v if isinstance(v, (int, str)) else json.dumps(v, sort_keys=True)] for k, v in payload.items()]
        table = (["key", "value"], items)
    header, rows = table
    if fmt == "tsv":
        return "\n".join("\t".join(map(str, r)) for r in [header, *rows])
    cells = [[str(c) for c in r] for r in [header, *rows]]
    widths = [max(len(r[j]) for r in cells) for j in range(len(header))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="twistcenter", description="Center of twisted affine quantum algebras at odd roots of 1.")
    p.add_argument("--format", choices=("json", "tsv", "text"), default="json")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def typed(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("type", help='type specifier such as "A4_2", "D3_2", "E6_2", "D4_3"')
        sp.add_argument("--format", choices=("json", "tsv", "text"), default=argparse.SUPPRESS)
        sp.set_defaults(fn=fn)
        return sp

    typed("info", cmd_info, "Cartan matrix, symmetrizer and null root")
    sp = typed("roots", cmd_roots, "positive real roots up to a δ-degree")
    sp.add_argument("--ddeg", type=int, required=True)
    sp = typed("par", cmd_par, "number of PBW monomials of weight η")
    sp.add_argument("--eta", type=_eta, required=True)
    sp = typed("dethr", cmd_dethr, "ε-multiplicity of det H^r, case table vs product formula")
    sp.add_argument("-l", type=int, required=True)
    sp.add_argument("--rmax", type=int, required=True)
    sp.add_argument("--log", help="write discrepancies as JSON lines to this file")
    sp = typed("mult", cmd_mult, "highest-coefficient multiplicity and the J bound")
    sp.add_argument("-l", type=int, required=True)
    sp.add_argument("--eta", type=_eta, required=True)
    sp = typed("jsets", cmd_jsets, "the index set J''")
    sp.add_argument("-l", type=int, required=True)
    sp.add_argument("--rmax", type=int, required=True)
    sp = typed("star", cmd_star, "coefficients of the extra central element E*")
    sp.add_argument("-l", type=int, required=True)
    sp.add_argument("-r", type=int, required=True)
    sp = typed("center", cmd_center, "generator catalog of the center and the relation P_Z")
    sp.add_argument("-l", type=int, required=True)
    sp.add_argument("--ddeg", type=int, required=True)
    sp.add_argument("--log", help="write discrepancies as JSON lines to this file")
    sp = sub.add_parser("selftest", help="run the acceptance grid")
    sp.add_argument("--format", choices=("json", "tsv", "text"), default=argparse.SUPPRESS)
    sp.set_defaults(fn=None)
    return p


def _selftest(fmt: str) -> tuple[str, int]:
    results = run_all()
    failed = [r for r in results if not r.passed]
    payload = {
        "passed": not failed,
        "checks": [r.to_json() for r in results],
        "flagged": [item for r in results for item in r.flagged],
    }
    rows = [[r.name, "PASS" if r.passed else "FAIL", r.checked, len(r.failures), len(r.flagged)] for r in results]
    text = _render(payload, (["check", "status", "checked", "failures", "flagged"], rows), fmt)
    if fmt != "json" and payload["flagged"]:
        # flagged items are explained by the det H^r discrepancy, listed apart from failures
        lines = [json.dumps(item, sort_keys=True) for item in payload["flagged"]]
        text += "\n\nflagged (det H^r case table vs product formula):\n" + "\n".join(lines)
    return text, EXIT_SELFTEST if failed else EXIT_OK


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "selftest":
            text, code = _selftest(args.format)
            print(text)
            return code
        t = parse_type(args.type)
        if hasattr(args, "l"):
            C.check_order(t, args.l)
        payload, table = args.fn(t, args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except TwistCenterError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_SELFTEST
    print(_render(payload, table, args.format))
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
