"""Command-line interface.

Exit status is 0 on success (or a matching verification), 2 when a
verification reports a mismatch, and 1 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import harness
from .constructions import join_layout, nns, nns_layout, ns_layout, ns_m, s_join, v_join
from .fileformat import ParseError, format_hypergraph, read_hypergraph
from .hypergraph import complete_hypergraph, degree_profile, fig2a, fig3
from .linalg import DEFAULT_TOL, adjacency_matrix, eigenvalues

GENERATORS = {"fig3": fig3, "fig2a": fig2a}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--tol", type=float, default=None, help="override the default tolerance")


def _add_instance(p: argparse.ArgumentParser, prefix: str = "") -> None:
    p.add_argument(f"--{prefix}input", metavar="FILE", help="hypergraph file ('-' for stdin)")
    p.add_argument(f"--{prefix}gen", choices=["complete", *GENERATORS], help="built-in generator")
    p.add_argument(f"--{prefix}n", type=int, help="vertex count for --gen complete")
    p.add_argument(f"--{prefix}k", type=int, help="edge size for --gen complete")


def _instance(args, prefix: str = "", required: bool = True):
    path = getattr(args, f"{prefix}input")
    gen = getattr(args, f"{prefix}gen")
    if path and gen:
        raise UsageError(f"give either --{prefix}input or --{prefix}gen, not both")
    if path:
        return read_hypergraph(path)
    if gen == "complete":
        n, k = getattr(args, f"{prefix}n"), getattr(args, f"{prefix}k")
        if n is None or k is None:
            raise UsageError(f"--{prefix}gen complete needs --{prefix}n and --{prefix}k")
        return complete_hypergraph(n, k)
    if gen:
        return GENERATORS[gen]()
    if required:
        raise UsageError(f"missing --{prefix}input or --{prefix}gen")
    return None


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        json.dump(payload, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _spectrum(h, args, exact: bool = True, charpoly: bool = False):
    tol = args.tol if args.tol is not None else DEFAULT_TOL
    return eigenvalues(adjacency_matrix(h), tol=tol, exact=exact, with_charpoly=charpoly)


def _fmt(x: float) -> str:
    return f"{x:.10g}" if abs(x) > 5e-11 else "0"


# -- subcommands -----------------------------------------------------------------

def cmd_gen(args) -> int:
    if args.family == "complete":
        if args.n is None or args.k is None:
            raise UsageError("gen complete needs --n and --k")
        h = complete_hypergraph(args.n, args.k)
    else:
        h = GENERATORS[args.family]()
    sys.stdout.write(format_hypergraph(h))
    return 0


def cmd_construct(args) -> int:
    h = read_hypergraph(args.input)
    if args.op == "ns":
        out, layout = ns_m(h, args.m), ns_layout(h.n, args.m)
    elif args.op == "nns":
        out, layout = nns(h), nns_layout(h.n)
    else:
        if not args.second:
            raise UsageError(f"construct {args.op} needs --second FILE")
        h2 = read_hypergraph(args.second)
        fn = v_join if args.op == "vjoin" else s_join
        out, layout = fn(h, h2), join_layout(h.n, h2.n)
    sys.stdout.write(format_hypergraph(out, layout.header_lines()))
    return 0


def cmd_spectrum(args) -> int:
    h = read_hypergraph(args.file)
    spec = _spectrum(h, args, exact=True, charpoly=args.exact)
    lines = [f"{_fmt(v)} (x{m})" for v, m in spec.multiplicities]
    if args.exact:
        lines.append(f"det {spec.det}")
        lines.append(f"charpoly {spec.charpoly}")
    _emit(args, spec.to_dict(), "\n".join(lines))
    return 0


def cmd_energy(args) -> int:
    h = read_hypergraph(args.file)
    spec = _spectrum(h, args, exact=False)
    _emit(args, {"energy": spec.energy, "energy_bound": spec.energy_bound}, f"{spec.energy:.10f}")
    return 0


def cmd_invariants(args) -> int:
    h = read_hypergraph(args.file)
    prof = degree_profile(h)
    spec = _spectrum(h, args)
    payload = {
        "n": h.n,
        "k": h.k,
        "edges": h.num_edges,
        "degrees": list(prof.degrees),
        "regular_degree": prof.regular_degree,
        "energy": spec.energy,
        "nullity": spec.nullity,
        "spectral_radius": spec.spectral_radius,
        "det": str(spec.det),
    }
    text = "\n".join(f"{key} {value}" for key, value in payload.items())
    _emit(args, payload, text)
    return 0


def cmd_verify(args) -> int:
    h = _instance(args)
    second = _instance(args, "second_", required=False)
    report = harness.verify(args.theorem_id, h, m=args.m, second=second, tol=args.tol)
    lines = [f"{report.theorem_id}: {report.verdict}", f"instance {report.instance}"]
    if report.formula_value is not None:
        lines.append(f"formula {report.formula_value:.10f}  oracle {report.oracle_value:.10f}")
    if report.max_abs_deviation is not None:
        lines.append(f"max deviation {report.max_abs_deviation:.3e} (tol {report.tolerance:g})")
    for name, v in report.exact_fields.items():
        lines.append(f"{name}: formula {v['formula']} oracle {v['oracle']}")
    if report.matrix_identity is not None:
        lines.append(f"block matrix identity {'holds' if report.matrix_identity else 'FAILS'}")
    if report.diff:
        lines.append(f"diff {report.diff}")
    lines.extend(f"note: {n}" for n in report.notes)
    _emit(args, report.to_dict(), "\n".join(lines))
    return 2 if report.verdict == "mismatch" else 0


def cmd_search(args) -> int:
    factor = read_hypergraph(args.factor) if args.factor else None
    cat = harness.search_cospectral(args.n, args.k, args.r, args.require_nonisomorphic, args.cap, factor)
    lines = [f"{cat.count} hypergraphs, {len(cat.classes)} char-poly classes, {len(cat.pairs)} pairs"]
    for p in cat.pairs:
        kind = "isomorphic" if p.isomorphic else "non-isomorphic"
        lines.append(f"{kind} pair, join products cospectral: {p.products_verified}")
        lines.append(f"  {[list(e) for e in p.first.edges]}")
        lines.append(f"  {[list(e) for e in p.second.edges]}")
    _emit(args, cat.to_dict(), "\n".join(lines))
    return 0 if all(p.products_verified for p in cat.pairs) else 2


def cmd_singular(args) -> int:
    base = read_hypergraph(args.base)
    members = harness.singular_family(base, args.m_max)
    payload = {
        "members": [
            {"construction": f.descriptor, "order": f.order, "nullity": f.nullity, "lower_bound": f.lower_bound}
            for f in members
        ]
    }
    text = "\n".join(f"{f.descriptor}: order {f.order}, nullity {f.nullity} (>= {f.lower_bound})" for f in members)
    _emit(args, payload, text)
    return 0 if all(f.nullity >= f.lower_bound for f in members) else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="write a built-in hypergraph")
    p.add_argument("family", choices=["complete", *GENERATORS])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("construct", help="apply a splitting or join operation")
    p.add_argument("op", choices=["ns", "nns", "vjoin", "sjoin"])
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--second", metavar="FILE", help="right-hand factor for joins")
    p.add_argument("--m", type=int, default=1, help="copy count for ns")
    p.set_defaults(func=cmd_construct)

    for name, func, help_ in (
        ("spectrum", cmd_spectrum, "adjacency eigenvalues with multiplicities"),
        ("energy", cmd_energy, "adjacency energy"),
        ("invariants", cmd_invariants, "degrees, energy, nullity, radius, determinant"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", metavar="FILE")
        if name == "spectrum":
            p.add_argument("--exact", action="store_true", help="also print det and characteristic polynomial")
        _add_common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="check a closed form against the eigensolver")
    p.add_argument("theorem_id", choices=harness.THEOREM_IDS)
    _add_instance(p)
    _add_instance(p, "second_")
    p.add_argument("--m", type=int, default=1)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search-cospectral", help="mine cospectral regular hypergraphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--require-nonisomorphic", action="store_true")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--factor", metavar="FILE", help="join factor (default K_k^k)")
    _add_common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("singular-family", help="singular hypergraphs built from a base")
    p.add_argument("--base", required=True, metavar="FILE")
    p.add_argument("--m-max", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_singular)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"hyperspec: {exc}", file=sys.stderr)
        return 1
    except (UsageError, ValueError, KeyError, OSError) as exc:
        print(f"hyperspec: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
