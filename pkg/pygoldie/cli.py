"""
Command-line interface.

    pygoldie rank "1/2,2,3/2,1"
    pygoldie poly "[3,2,4,1]"
    pygoldie kl 3 "[1,2,3]" "[3,2,1]"
    pygoldie verify one 4
    pygoldie onedim input.json
    pygoldie cells 3

Exit codes: 0 ok, 1 usage or parse error, 2 domain precondition,
3 internal consistency, 4 verification failure, 5 numeric failure.
"""

import os
import sys
import json
import argparse
import dataclasses

from . import rs
from . import verify
from . import onedim
from .symgroup import Permutation
from .weights import Weight
from .tableaux import Tableau
from .kl import KLStore
from .goldie import Goldie
from .errors import SizeError, DomainError, ConsistencyError, NumericFailure, TableauEmissionError

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_DOMAIN = 2
EXIT_CONSISTENCY = 3
EXIT_VERIFY = 4
EXIT_NUMERIC = 5

DEFAULT_CACHE_DIR = os.path.join("~", ".cache", "goldie")


class ParseError(ValueError):
    pass


@dataclasses.dataclass
class Config:
    cache_dir: str = DEFAULT_CACHE_DIR
    n_guard: int = KLStore.N_GUARD
    strict: bool = False
    tol: float = 1e-9
    json_output: bool = False
    workers: int = 1

    @classmethod
    def from_args(cls, args, environ=None):
        """
        Defaults, then the GOLDIE_CACHE_DIR environment variable, then flags.
        """
        environ = os.environ if environ is None else environ
        cache_dir = args.cache_dir or environ.get("GOLDIE_CACHE_DIR") or cls.cache_dir
        return cls(
            cache_dir=os.path.expanduser(cache_dir),
            n_guard=cls.n_guard if args.n_guard is None else args.n_guard,
            strict=args.strict,
            tol=cls.tol if args.tol is None else args.tol,
            json_output=args.json,
            workers=args.workers,
        )

    def model(self):
        store = KLStore(self.cache_dir, self.n_guard, self.workers)
        return Goldie(store=store, strict=self.strict)


def _load_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid JSON {text!r}: {e}")


def parse_weight(text):
    """
    Weight from CSV ("1/2,2,3/2") or a JSON list.
    """
    text = text.strip()
    if text.startswith("["):
        coords = _load_json(text)
    else:
        coords = [c.strip() for c in text.split(",")]
    try:
        return Weight([str(c) for c in coords])
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise ParseError(f"Invalid weight {text!r}: {e}")


def parse_permutation(text):
    data = _load_json(text)
    try:
        return Permutation(data)
    except (ValueError, TypeError) as e:
        raise ParseError(f"Invalid permutation {text!r}: {e}")


def parse_tableau(text):
    data = _load_json(text)
    try:
        return Tableau.from_json(data)
    except (KeyError, ValueError, TypeError) as e:
        raise ParseError(f"Invalid tableau {text!r}: {e}")


def _read_json_arg(text):
    if os.path.exists(text):
        with open(text, "r", encoding="utf-8") as fh:
            text = fh.read()
    return _load_json(text)


def _emit(cfg, doc, lines):
    if cfg.json_output:
        print(json.dumps(doc, indent=2))
    else:
        for line in lines:
            print(line)


def cmd_rank(cfg, args):
    alpha = parse_weight(args.weight)
    report = cfg.model().goldie_rank(alpha)
    lines = [f"alpha = {', '.join(alpha.to_json())}"]
    for f in report.factors:
        lines.append(f"  coset {f.rep}: positions {list(f.positions)}, shape {f.shape.to_json()}, rank {f.rank}")
        lines.append(f"    w = {f.w.to_json()}, p_w = {f.polynomial.render()}")
    lines.append(f"Goldie rank: {report.total}")
    lines.append(f"completely prime: {'yes' if report.completely_prime else 'no'}")
    if report.induced is not None:
        lines.append(f"induced from Levi {report.induced['levi']}, dim F = {report.induced['dim_F']}")
    _emit(cfg, report.to_json(), lines)
    return EXIT_OK


def cmd_poly(cfg, args):
    model = cfg.model()
    data = _load_json(args.target)
    if isinstance(data, dict):
        Q = parse_tableau(args.target)
        w = rs.cell_rep_of_tableau(Q) if Q.is_standard() and Q.pyramid.is_left_justified() else None
        p = model.goldie_poly_of_tableau(Q)
    else:
        w = parse_permutation(args.target)
        p = model.goldie_poly_bform(w)
        w = rs.minimal_cell_rep(w)
    doc = {"w": w.to_json(), "poly": p.render(), "terms": p.to_json()}
    _emit(cfg, doc, [p.render()])
    return EXIT_OK


def cmd_kl(cfg, args):
    store = KLStore(cfg.cache_dir, cfg.n_guard, cfg.workers)
    table = store.table(args.n)
    if (args.x is None) != (args.y is None):
        raise ParseError("kl needs both x and y, or neither")
    if args.x is not None:
        x, y = parse_permutation(args.x), parse_permutation(args.y)
        p = table.poly(x, y)
        _emit(cfg, {"x": x.to_json(), "y": y.to_json(), "p": list(p)}, [p.render()])
        return EXIT_OK
    doc, lines = [], []
    for (x, y), p in table.items():
        doc.append({"x": x.to_json(), "y": y.to_json(), "p": list(p)})
        lines.append(f"P[{x.to_json()}, {y.to_json()}] = {p.render()}")
    _emit(cfg, {"n": args.n, "provenance": table.provenance, "entries": doc}, lines)
    return EXIT_OK


def cmd_verify(cfg, args):
    result = verify.run_suite(cfg.model(), args.suite, args.n)
    status = "pass" if result["passed"] else "FAIL"
    lines = [f"{args.suite} N={args.n}: {status} ({result['checked']} checks, {len(result['failures'])} failures)"]
    lines += [json.dumps(f) for f in result["failures"]]
    _emit(cfg, result, lines)
    return EXIT_OK if result["passed"] else EXIT_VERIFY


def cmd_onedim(cfg, args):
    try:
        inp = onedim.StupInput.from_json(_read_json_arg(args.input))
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(f"Invalid onedim input: {e}")
    solution = onedim.stup_solve(inp, tol=cfg.tol)
    doc = {"solution": solution.to_json(), "tableau": None}
    lines = [f"row {i}: {[complex(z) for z in row]} (residual {r:.2e})"
             for i, (row, r) in enumerate(zip(solution.rows, solution.residuals), start=1)]
    try:
        A = onedim.connected_tableau_of(solution)
        doc["tableau"] = A.to_json()
        lines.append(f"tableau (rows bottom up): {A.to_json()['rows_bottom_up']}")
    except TableauEmissionError as e:
        print(f"no tableau emitted: {e}", file=sys.stderr)
    _emit(cfg, doc, lines)
    return EXIT_OK


def cmd_cells(cfg, args):
    model = cfg.model()
    doc, lines = [], []
    for cell in rs.left_cells(args.n):
        p = model.goldie_poly_bform(cell.minimal)
        doc.append({
            "Q": cell.Q.to_json(),
            "minimal": cell.minimal.to_json(),
            "size": len(cell.members),
            "poly": p.render(),
        })
        rows = [[int(x) for x in row] for row in cell.Q.rows_bottom_up()]
        lines.append(f"{rows}: w = {cell.minimal.to_json()}, |cell| = {len(cell.members)}, p = {p.render()}")
    _emit(cfg, doc, lines)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="pygoldie", description="Goldie ranks of primitive ideals in U(gl_N).")
    parser.add_argument("--cache-dir", default=None, help="KL cache directory (default ~/.cache/goldie)")
    parser.add_argument("--n-guard", type=int, default=None, help="largest N for KL tables")
    parser.add_argument("--strict", action="store_true", help="reject permutations that are not minimal in their cell")
    parser.add_argument("--tol", type=float, default=None, help="residual tolerance of the onedim solver")
    parser.add_argument("--json", action="store_true", help="print a single JSON document")
    parser.add_argument("--workers", type=int, default=1, help="worker threads for the KL build")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="Goldie rank of U/I(alpha)")
    p.add_argument("weight", help="CSV of rationals or JSON list")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("poly", help="Goldie rank polynomial of a left cell")
    p.add_argument("target", help="permutation as a JSON list, or a standard tableau as JSON")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("kl", help="Kazhdan-Lusztig polynomials of S_N")
    p.add_argument("n", type=int)
    p.add_argument("x", nargs="?", default=None)
    p.add_argument("y", nargs="?", default=None)
    p.set_defaults(func=cmd_kl)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(verify.SUITES))
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("onedim", help="solve for a one-dimensional module")
    p.add_argument("input", help="JSON file or inline JSON")
    p.set_defaults(func=cmd_onedim)

    p = sub.add_parser("cells", help="left cells of S_N with their Goldie rank polynomials")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_cells)
    return parser


def main(argv=None, environ=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_PARSE
    cfg = Config.from_args(args, environ)
    try:
        return args.func(cfg, args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, SizeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConsistencyError as e:
        print(f"internal consistency failure: {e}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except NumericFailure as e:
        print(f"numeric failure: {e}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
