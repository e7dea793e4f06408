"""Command-line front end: ``schubcalc <subcommand> [flags]``.

Exit status is 0 on success, 2 on invalid input (including unknown flags)
and 3 on an internal error.  ``SCHUBERT_SEED`` seeds the randomized
ideal-membership sampler used for ranks above 3.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from typing import Sequence

from . import __version__
from .formal import eta_formal, formal_to_json, theta_formal
from .locus import dumps as locus_dumps
from .locus import emit_locus, evaluate_locus, render_locus
from .mpoly import DivisionError, MPoly
from .nilcox import FidelityError, double_schubert
from .polyring import eta_poly, theta_poly
from .schubops import geometrize, ideal_equal
from .shapes import Shape, parse_shape
from .split import SplitProblem, split_terms
from .transition import TreeDepthError, stanley_coeffs, transition_tree
from .verify import SUITES, run_suite
from .weyl import BOX, SignedPermutation, ValidationError, parse_perm

EXIT_OK, EXIT_INVALID, EXIT_INTERNAL = 0, 2, 3

_GROUP = {"A": "A", "B": "C", "C": "C", "D": "D"}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # one-line diagnostic, exit 2
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _seed() -> int:
    raw = os.environ.get("SCHUBERT_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise ValidationError(f"SCHUBERT_SEED must be an integer, got {raw!r}") from None


def _index(text: str) -> int:
    t = text.strip().lower()
    if t in ("box", "b", "□"):
        return BOX
    try:
        return int(t)
    except ValueError:
        raise ValidationError(f"not an index: {text!r}") from None


def _seq(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    parts = [p for p in text.replace(" ", ",").split(",") if p]
    if not parts:
        raise ValidationError("empty sequence")
    return tuple(_index(p) for p in parts)


def _perm(args) -> SignedPermutation:
    if args.w is None:
        raise ValidationError("--w is required")
    return parse_perm(args.w, _GROUP[args.type])


def _shape(args, typed: bool = False) -> Shape:
    if args.shape is None:
        raise ValidationError("--shape is required")
    k = _index(args.k) if args.k is not None else 0
    tag = args.type_tag if typed else 0
    if typed and tag is None:
        lam = parse_shape(args.shape, k)
        tag = 1 if _k(k) > 0 and _k(k) in lam.parts else 0
    return parse_shape(args.shape, k, tag or 0, typed=typed)


def _k(k: int) -> int:
    return 0 if k == BOX else k


def _require_format(args, allowed: Sequence[str]) -> None:
    if args.format not in allowed:
        raise ValidationError(f"--format {args.format} is not available for {args.command}; use one of {', '.join(allowed)}")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


# -- factored LaTeX ------------------------------------------------------------------


def _linear_candidates(f: MPoly) -> list[MPoly]:
    vs = f.variables()
    out = []
    for i, a in enumerate(vs):
        for b in vs[i + 1 :]:
            out.append(MPoly.var(a) - MPoly.var(b))
            out.append(MPoly.var(a) + MPoly.var(b))
    out.extend(MPoly.var(a) for a in vs)
    return out


def factor_linear(f: MPoly) -> tuple[MPoly, list[MPoly]]:
    """Split off factors v, v - u and v + u by trial division; returns (cofactor, factors)."""
    factors: list[MPoly] = []
    if not f:
        return f, factors
    progress = True
    while progress and f.variables():
        progress = False
        for g in _linear_candidates(f):
            try:
                q = f.exact_div(g)
            except DivisionError:
                continue
            if q * g == f:
                factors.append(g)
                f = q
                progress = True
                break
    return f, factors


def latex_factored(f: MPoly) -> str:
    """TeX with linear factors pulled out, e.g. (y_1-z_1)(y_1-z_2)(y_2-z_1)."""
    rest, factors = factor_linear(f)
    if not factors:
        return f.render(latex=True)
    body = "".join(f"({g.render(latex=True)})" if len(g.terms) > 1 else g.render(latex=True) for g in sorted(factors, key=str))
    if not rest.variables():
        c = rest.constant_term()
        if c == 1:
            return body
        if c == -1:
            return "-" + body
        return f"{rest.render(latex=True)}\\,{body}"
    return f"({rest.render(latex=True)})" + body


# -- subcommands -------------------------------------------------------------------------


def _poly_out(args, f: MPoly, meta: dict, latex: str | None = None) -> str:
    if args.format == "json":
        body = formal_to_json(f) if meta.get("formal") else f.to_json()
        return _dump({**meta, "poly": body})
    if args.format == "latex":
        return latex if latex is not None else f.render(latex=True)
    return str(f)


def cmd_schubert(args) -> str:
    _require_format(args, ("text", "json", "latex"))
    w = _perm(args)
    f = double_schubert(w, args.type, x_count=args.xvars)
    meta = {"command": "schubert", "type": args.type, "w": w.to_json(), "xvars": args.xvars}
    return _poly_out(args, f, meta, latex_factored(f) if args.format == "latex" else None)


def cmd_theta(args) -> str:
    _require_format(args, ("text", "json", "latex"))
    lam = _shape(args)
    f = theta_formal(lam) if args.formal else theta_poly(lam, args.xvars)
    meta = {"command": "theta", "shape": lam.to_json(), "formal": args.formal, "xvars": args.xvars}
    return _poly_out(args, f, meta)


def cmd_eta(args) -> str:
    _require_format(args, ("text", "json", "latex"))
    lam = _shape(args, typed=True)
    f = eta_formal(lam) if args.formal else eta_poly(lam, args.xvars)
    meta = {"command": "eta", "shape": {**lam.to_json(), "typed": True}, "formal": args.formal, "xvars": args.xvars}
    return _poly_out(args, f, meta)


def _tree_k(args) -> int:
    if args.type == "A":
        return 0
    if args.k is None:
        raise ValidationError("--k is required for type B/C/D trees")
    return _index(args.k)


def cmd_tree(args) -> str:
    _require_format(args, ("text", "json", "dot"))
    tree = transition_tree(_perm(args), args.type, _tree_k(args))
    if args.format == "json":
        return tree.dumps()
    if args.format == "dot":
        return tree.to_dot()
    lines = []

    def walk(node, depth: int) -> None:
        label = str(node.element)
        if node.is_leaf():
            from .transition import leaf_shape

            label += "  [" + " ".join(map(str, leaf_shape(node.element, tree.kind, tree.k).parts)) + "]"
        lines.append("  " * depth + label)
        for c in node.children:
            walk(c, depth + 1)

    walk(tree.root, 0)
    return "\n".join(lines)


def _shape_text(s: Shape) -> str:
    txt = "(" + ",".join(map(str, s.parts)) + ")"
    return txt + (f"^{s.type_tag}" if s.type_tag else "")


def cmd_coeffs(args) -> str:
    _require_format(args, ("text", "json"))
    coeffs = stanley_coeffs(_perm(args), args.type, _tree_k(args))
    rows = sorted(coeffs.items(), key=lambda kv: (kv[0].parts, kv[0].type_tag))
    if args.format == "json":
        return _dump({"command": "coeffs", "coeffs": [{"shape": s.to_json(), "count": c} for s, c in rows]})
    return "\n".join(f"{c}  {_shape_text(s)}" for s, c in rows)


def _problem(args) -> SplitProblem:
    a, b = _seq(args.a), _seq(args.b)
    if a is None or b is None:
        raise ValidationError("--a and --b are required")
    return SplitProblem(_perm(args), a, b, args.type)


def cmd_split(args) -> str:
    _require_format(args, ("text", "json"))
    prob = _problem(args)
    rows = [(c, shapes) for c, shapes, _ in split_terms(prob) if c]
    if args.format == "json":
        return _dump(
            {
                "command": "split",
                "terms": [{"coeff": c, "shapes": [s.to_json() for s in shapes]} for c, shapes in rows],
            }
        )
    return "\n".join(f"{c}  " + " ".join(_shape_text(s) for s in shapes) for c, shapes in rows)


def cmd_locus(args) -> str:
    _require_format(args, ("text", "json", "latex"))
    prob = _problem(args)
    top = max(_k(v) for v in prob.a_seq + prob.b_seq)
    n = args.n if args.n is not None else max(prob.w.support_rank, top + 1)
    f = emit_locus(prob.w, args.type, n, prob.a_seq, prob.b_seq)
    out = locus_dumps(f) if args.format == "json" else render_locus(f, args.form)
    if args.check:
        lhs = evaluate_locus(f)
        rhs = geometrize(double_schubert(prob.w, args.type), args.type, n)
        ok = ideal_equal(lhs, rhs, args.type, n, seed=_seed())
        if not ok:
            raise RuntimeError("locus formula does not match the geometrized Schubert polynomial")
        if args.format != "json":
            out += "\n% checked against the geometrized double Schubert polynomial"
    return out


def cmd_verify(args) -> str:
    _require_format(args, ("text", "json"))
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = [run_suite(name, args.n, _seed()) for name in names]
    args._failed = any(not r.passed for r in results)
    if args.format == "json":
        return _dump([r.to_json() for r in results])
    return "\n".join(r.line() for r in results)


COMMANDS = {
    "schubert": cmd_schubert,
    "theta": cmd_theta,
    "eta": cmd_eta,
    "tree": cmd_tree,
    "coeffs": cmd_coeffs,
    "split": cmd_split,
    "locus": cmd_locus,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="schubcalc", description="Double Schubert polynomials, theta/eta polynomials and degeneracy loci.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, fmt: Sequence[str] = ("text", "json", "latex")):
        sp.add_argument("--format", default="text", choices=list(fmt))
        sp.add_argument("--out", help="write output to this file instead of stdout")

    def typed(sp, default="C"):
        sp.add_argument("--type", default=default, choices=["A", "B", "C", "D"], type=str.upper)

    sp = sub.add_parser("schubert", help="double Schubert polynomial of w")
    typed(sp)
    sp.add_argument("--w", required=True, help='one-line notation, e.g. "3,-1,2"')
    sp.add_argument("--xvars", type=int, default=None, help="explicit x-variables (default: power sums)")
    common(sp)

    for name in ("theta", "eta"):
        sp = sub.add_parser(name, help=f"{name} polynomial of a k-strict shape")
        sp.add_argument("--k", default="0")
        sp.add_argument("--shape", required=True, help='parts, e.g. "3,1,1"')
        sp.add_argument("--formal", action="store_true", help="expand in the formal symbols")
        sp.add_argument("--xvars", type=int, default=None)
        if name == "eta":
            sp.add_argument("--type-tag", dest="type_tag", type=int, choices=[0, 1, 2], default=None)
        common(sp)

    sp = sub.add_parser("tree", help="transition tree")
    typed(sp)
    sp.add_argument("--w", required=True)
    sp.add_argument("--k", default=None)
    common(sp, ("text", "json", "dot"))

    sp = sub.add_parser("coeffs", help="Stanley coefficients from the transition tree")
    typed(sp)
    sp.add_argument("--w", required=True)
    sp.add_argument("--k", default=None)
    common(sp, ("text", "json"))

    sp = sub.add_parser("split", help="splitting coefficients")
    typed(sp)
    sp.add_argument("--w", required=True)
    sp.add_argument("--a", required=True, help='csv, "box" allowed first in type D')
    sp.add_argument("--b", required=True)
    common(sp, ("text", "json"))

    sp = sub.add_parser("locus", help="degeneracy locus formula")
    typed(sp)
    sp.add_argument("--w", required=True)
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--n", type=int, default=None, help="rank of the ambient bundle (default: support + 1)")
    sp.add_argument("--form", default="difference", choices=["difference", "quotient"])
    sp.add_argument("--check", action="store_true", help="verify against the geometrized polynomial")
    common(sp, ("text", "json", "latex"))

    sp = sub.add_parser("verify", help="run self-check suites")
    sp.add_argument("--suite", default="all", choices=["all", *SUITES])
    sp.add_argument("--n", type=int, default=None)
    common(sp, ("text", "json"))
    return p


_VALUE_FLAGS = ("--w", "--a", "--b", "--shape")


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--w -2,1`` into ``--w=-2,1`` so argparse does not read a flag."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            elif nxt.startswith("-") and nxt[1:2].isdigit():
                out.append(f"{tok}={nxt}")
            else:
                out.extend([tok, nxt])
        else:
            out.append(tok)
    return out


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = _glue_negative_values(sys.argv[1:] if argv is None else list(argv))
    try:
        with contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_INVALID
    args._failed = False
    if args.command == "locus" and args.format == "text":
        args.format = "latex"
    try:
        text = COMMANDS[args.command](args)
    except (ValidationError, FidelityError) as e:
        print(f"schubcalc: error: {e}", file=stderr)
        return EXIT_INVALID
    except (TreeDepthError, DivisionError, RuntimeError, AssertionError, ArithmeticError) as e:
        print(f"schubcalc: internal error: {type(e).__name__}: {e}", file=stderr)
        return EXIT_INTERNAL
    except ValueError as e:
        print(f"schubcalc: error: {e}", file=stderr)
        return EXIT_INVALID
    except Exception as e:  # pragma: no cover - last resort
        print(f"schubcalc: internal error: {type(e).__name__}: {e}", file=stderr)
        return EXIT_INTERNAL
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=stdout)
    return EXIT_INTERNAL if args._failed else EXIT_OK


def main() -> None:
    sys.exit(run())
