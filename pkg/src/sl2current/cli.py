"""Command-line front end.

Exit codes: 0 on success, 1 when a verification or reconstruction fails,
2 on invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import filtration as F
from . import gradedchar as G
from . import modulelab as ML
from . import suites
from .qseries import WindowError, format_series
from .sl2char import NotACharacter

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

ALIASES = {"global": "weyl-global", "local": "weyl-local", "wedge": "wedge-w1"}


class InputError(ValueError):
    pass


def parse_window(text: str) -> G.Window:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise InputError(f"bad window {text!r}; expected lo:hi") from None
    if lo > hi:
        raise InputError(f"bad window {text!r}; lo must not exceed hi")
    return lo, hi


def parse_factor(text: str) -> tuple[str, int]:
    name, _, lam = text.partition(":")
    name = ALIASES.get(name, name)
    if name not in G.FAMILIES:
        raise InputError(f"unknown family {name!r}")
    try:
        value = int(lam)
    except ValueError:
        raise InputError(f"bad highest weight in {text!r}") from None
    return name, _check_lambda(value)


def _check_lambda(lam: int, cap: int = 40) -> int:
    if lam < 0 or lam > cap:
        raise InputError(f"lambda must lie in 0..{cap}, got {lam}")
    return lam


# -- rendering --------------------------------------------------------------------

def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def render_char(chi: G.GradedChar, fmt: str) -> str:
    if fmt == "json":
        return _dump_json(chi.to_json())
    if fmt == "csv":
        return chi.to_csv().rstrip("\n")
    lines = [f"window {chi.lo}:{chi.hi}"]
    lines += [f"V({lam}): {format_series(f)}" for lam, f in sorted(chi.terms.items(), reverse=True)]
    return "\n".join(lines)


def render_mult(fm: F.FiltMultiplicity, ok: bool, fmt: str) -> str:
    if fmt == "json":
        data = fm.to_json()
        data["window"] = {"lo": fm.window[0], "hi": fm.window[1]}
        data["reconstructs"] = ok
        return _dump_json(data)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["weight", "exponent", "coefficient"])
        for mu, f in sorted(fm.mults.items()):
            for k, c in sorted(f.terms().items()):
                w.writerow([mu, k, c])
        return buf.getvalue().rstrip("\n")
    lines = [f"basis {fm.basis.value}, window {fm.window[0]}:{fm.window[1]}"]
    for mu, f in fm.mults.items():
        tail = "" if f.exact else f" + O(u^{f.hi + 1})"
        lines.append(f"[{mu}]: {format_series(f)}{tail}")
    lines.append(f"certified_nonneg: {str(fm.certified_nonneg).lower()}")
    lines.append(f"reconstructs: {str(ok).lower()}")
    return "\n".join(lines)


def render_module(M: ML.Realization, d_safe: int, fmt: str) -> str:
    rep = ML.report(M, d_safe)
    if fmt == "json":
        return _dump_json(rep)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "weight", "dim"])
        for b in rep["blocks"]:
            w.writerow([b["degree"], b["weight"], b["dim"]])
        return buf.getvalue().rstrip("\n")
    lines = [f"{M.kind.value}({M.lam}) truncated at degree {M.D}, total dim {M.size()}"]
    for d in range(M.D + 1):
        row = {mu: len(labs) for (dd, mu), labs in M.blocks.items() if dd == d}
        if row:
            cells = " ".join(f"{mu}:{n}" for mu, n in sorted(row.items(), reverse=True))
            lines.append(f"degree {d}: {cells}")
    lines.append(render_char(ML.graded_char_of(M, d_safe), "pretty"))
    return "\n".join(lines)


# -- commands ---------------------------------------------------------------------

def _family_char(name: str, lam: int, window: G.Window | None) -> G.GradedChar:
    return G.FAMILIES[name](lam, window)


def cmd_char(args) -> int:
    lam = _check_lambda(args.lam)
    window = parse_window(args.window) if args.window else None
    print(render_char(_family_char(args.family, lam, window), args.format))
    return EXIT_OK


def _natural_lo(name: str, lam: int) -> int:
    # lowest exponent actually present in the family's character
    chi = _family_char(name, lam, None)
    return min((f.support()[0] for f in chi.terms.values()), default=0)


def _decompose_input(args) -> G.GradedChar:
    window = parse_window(args.window) if args.window else None
    if args.input is not None:
        try:
            raw = sys.stdin.read() if args.input == "-" else open(args.input).read()
            chi = G.GradedChar.from_json(json.loads(raw))
        except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed character input: {exc}") from None
        return chi.restrict(window) if window else chi
    if args.tensor:
        (n1, l1), (n2, l2) = (parse_factor(t) for t in args.tensor)
        d1, d2 = _natural_lo(n1, l1), _natural_lo(n2, l2)
        if window is None:
            window = (d1 + d2, 24)
        lo, hi = window
        a = _family_char(n1, l1, (d1, hi - d2))
        b = _family_char(n2, l2, (d2, hi - d1))
        return G.gchar_tensor(a, b).restrict(window)
    if args.dual:
        name, lam = parse_factor(args.dual)
        chi = _family_char(name, lam, None)
        if not chi.exact:
            raise InputError("only finite-dimensional characters can be dualized")
        dual = G.gchar_dual(chi)
        return dual.restrict(window) if window else dual
    raise InputError("give one of --tensor, --dual or --input")


def cmd_decompose(args) -> int:
    chi = _decompose_input(args)
    basis = F.Basis(args.basis)
    fm = F.peel(chi, basis)
    ok = fm.reconstruct(fm.window) == chi
    print(render_mult(fm, ok, args.format))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_module(args) -> int:
    caps = ML.Caps(lam=args.lambda_cap, trunc=args.trunc_cap, basis=args.basis_cap)
    M = ML.build(args.kind, args.lam, args.trunc, caps)
    d_safe = args.trunc if args.d_safe is None else args.d_safe
    if not 0 <= d_safe <= args.trunc:
        raise InputError("--d-safe must lie in 0..trunc")
    print(render_module(M, d_safe, args.format))
    if args.matrix:
        gen, r = args.matrix[0], int(args.matrix[1])
        if gen not in ("x", "y", "h"):
            raise InputError(f"unknown generator {gen!r}")
        fam = ML.act(M, gen, r)
        for key, mat in sorted(fam.maps.items()):
            if mat.rows and mat.cols:
                print(f"# {gen}(x)t^{r}: block {key} -> {mat.target}, {mat.rows}x{mat.cols}")
                print(mat.dump())
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.lambda_max < 1 or args.trunc < 1:
        raise InputError("--lambda-max and --trunc must be positive")
    if args.lambda_max > ML.DEFAULT_CAPS.lam or args.trunc > ML.DEFAULT_CAPS.trunc:
        raise InputError("--lambda-max or --trunc exceeds the default caps")
    failed = 0
    for check in suites.suite(args.suite, args.lambda_max, args.trunc):
        try:
            ok = check.run()
        except (WindowError, NotACharacter, ML.NoHeadroom) as exc:
            ok = False
            print(f"  error: {exc}")
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} {check.name}: {check.identity}")
    return EXIT_FAIL if failed else EXIT_OK


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sl2current",
                                description="Graded characters of sl2[t]-modules.")
    sub = p.add_subparsers(dest="command", required=True)
    fmt = dict(choices=("json", "csv", "pretty"), default="json")

    c = sub.add_parser("char", help="graded character of a named family")
    c.add_argument("family", choices=sorted(G.FAMILIES))
    c.add_argument("lam", type=int)
    c.add_argument("--window", metavar="LO:HI")
    c.add_argument("--format", **fmt)
    c.set_defaults(func=cmd_char)

    d = sub.add_parser("decompose", help="filtration multiplicities of a character")
    src = d.add_mutually_exclusive_group(required=True)
    src.add_argument("--tensor", nargs=2, metavar="FAMILY:LAM")
    src.add_argument("--dual", metavar="FAMILY:LAM")
    src.add_argument("--input", metavar="FILE", help="GradedChar JSON, '-' for stdin")
    d.add_argument("--basis", choices=[b.value for b in F.Basis], default="global")
    d.add_argument("--window", metavar="LO:HI")
    d.add_argument("--format", **fmt)
    d.set_defaults(func=cmd_decompose)

    m = sub.add_parser("module", help="build a truncated realization")
    m.add_argument("kind", choices=[k.value for k in ML.Kind])
    m.add_argument("lam", type=int)
    m.add_argument("--trunc", type=int, required=True)
    m.add_argument("--d-safe", type=int)
    m.add_argument("--matrix", nargs=2, metavar=("GEN", "R"))
    m.add_argument("--lambda-cap", type=int, default=ML.DEFAULT_CAPS.lam)
    m.add_argument("--trunc-cap", type=int, default=ML.DEFAULT_CAPS.trunc)
    m.add_argument("--basis-cap", type=int, default=ML.DEFAULT_CAPS.basis)
    m.add_argument("--format", **fmt)
    m.set_defaults(func=cmd_module)

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("suite", choices=suites.SUITES)
    v.add_argument("--lambda-max", type=int, default=4)
    v.add_argument("--trunc", type=int, default=8)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # let "--window -4:10" through; argparse would read -4:10 as an option
    for i in range(len(argv) - 1):
        if argv[i] == "--window":
            argv[i:i + 2] = [f"--window={argv[i + 1]}", ""]
    argv = [a for a in argv if a != ""]
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, WindowError, NotACharacter, ML.CapExceeded, ML.NoHeadroom, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
