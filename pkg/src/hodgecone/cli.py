"""Command-line front end.

Exit status: 0 on success, 1 on an input error, 2 when an assumption
the result depends on fails (a structured report is still written).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .cone_kernels import model_kernel
from .errors import HodgeconeError, InsufficientTruncation, SpectralDataError
from .indicial import FAMILIES, check_hypothesis_0notindroot, indicial_set
from .riesz import TopologyInput, nu_ker, riesz_interval, sobolev_exponents
from .spectral_data import (CrossSection, circle_preset, load_cross_section, sphere_jmax_for_radius,
                            sphere_preset)
from .torsion import assemble_log_det_expansion, load_ledger, spectral_convergence_demo

EXIT_OK, EXIT_INPUT, EXIT_HYPOTHESIS = 0, 1, 2


class InputError(Exception):
    pass


# ---------------------------------------------------------------- cross-section sources

def _cross_section(args, radius) -> CrossSection:
    if bool(args.preset) == bool(args.input):
        raise InputError("give exactly one of --preset and --input")
    if args.input:
        try:
            return load_cross_section(Path(args.input).read_text())
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
    name, _, params = args.preset.partition(":")
    fields = [p for p in params.split(",") if p]
    try:
        if name == "sphere":
            n = int(fields[0])
            jmax = int(fields[1]) if len(fields) > 1 else sphere_jmax_for_radius(float(radius) + 2)
            return sphere_preset(n, jmax)
        if name == "circle":
            length = float(fields[0]) if fields else 2 * math.pi
            jmax = int(fields[1]) if len(fields) > 1 else max(8, math.ceil(float(radius)) * 4)
            return circle_preset(length, jmax)
    except (IndexError, ValueError):
        raise InputError(f"malformed preset {args.preset!r}; use sphere:N[,jmax] or circle:L[,jmax]") from None
    raise InputError(f"unknown preset {name!r}")


def _check_q(cs: CrossSection, q: int) -> None:
    if not 0 <= q <= cs.n:
        raise InputError(f"q = {q} out of range 0..{cs.n}")


def _tri(value: str):
    return {"yes": True, "no": False, "unknown": None}[value]


def _topology(args) -> TopologyInput:
    try:
        return TopologyInput(_tri(args.e_injective_low), _tri(args.e_injective_high),
                             args.kernel_dim, args.kernel_decay, args.n0)
    except ValueError as exc:
        raise InputError(str(exc)) from None


# ---------------------------------------------------------------- rendering

def _default(x):
    if isinstance(x, Fraction):
        return {"exact": str(x), "decimal": float(x)}
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _json(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, default=_default, allow_nan=False) + "\n"


def _csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _text(doc, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for key in sorted(doc):
        val = doc[key]
        if isinstance(val, dict) and not {"exact", "decimal"} >= set(val):
            lines.append(f"{pad}{key}:")
            lines.append(_text(val, indent + 1))
        elif isinstance(val, dict):
            lines.append(f"{pad}{key}: {val['exact']}")
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{pad}{key}:")
            for item in val:
                lines.append(f"{pad}  - " + ", ".join(f"{k}={_short(item[k])}" for k in sorted(item)))
        else:
            lines.append(f"{pad}{key}: {_short(val)}")
    return "\n".join(lines)


def _short(v):
    if isinstance(v, dict) and "exact" in v:
        return v["exact"]
    if isinstance(v, list):
        return "[" + ", ".join(str(_short(x)) for x in v) + "]"
    return v


def _render(doc: dict, fmt: str, rows: list[dict] | None = None) -> str:
    if fmt == "json":
        return _json(doc)
    if fmt == "csv":
        if rows is None:
            raise InputError("csv output is only available for tabular reports")
        return _csv(rows)
    return _text(json.loads(_json(doc))) + "\n"


# ---------------------------------------------------------------- commands

def _set_values(iset, family):
    out = []
    for r in iset.family(family):
        v = r.to_dict()
        out.append({"value": v["value"], "exact": v["value_exact"], "mult": v["mult"]})
    return out


def cmd_indicial(args):
    radius = Fraction(args.radius) if args.radius is not None else None
    cs = _cross_section(args, radius if radius is not None else 8)
    _check_q(cs, args.q)
    if radius is None:
        radius = Fraction(cs.n, 2) + 6
    iset = indicial_set(cs, args.q, radius)
    hyp = check_hypothesis_0notindroot(cs, args.q)
    doc = {
        "command": "indicial",
        "n": cs.n,
        "q": args.q,
        "radius": float(radius),
        "families": {f: _set_values(iset, f) for f in FAMILIES},
        "merged": [m.to_dict() for m in iset.merged()],
        "nu0": hyp.nu0,
        "hypothesis_0_not_root": hyp.to_dict(),
    }
    rows = [{"family": r.family, "value": float(r.value), "multiplicity": r.multiplicity,
             "sign": r.sign, "alpha2": str(r.radicand_addend)} for r in iset.roots]
    return doc, rows, EXIT_OK if hyp.passed else EXIT_HYPOTHESIS


def cmd_riesz(args):
    radius = args.radius if args.radius is not None else 10.0
    cs = _cross_section(args, radius)
    _check_q(cs, args.q)
    rep = riesz_interval(cs, args.q, _topology(args))
    doc = {"command": "riesz", **rep.to_json()}
    rows = None
    return doc, rows, EXIT_OK if rep.hypothesis_ok else EXIT_HYPOTHESIS


def cmd_kernel(args):
    radius = args.radius if args.radius is not None else 6.0
    # the tail estimate needs roots past the summation radius
    cs = _cross_section(args, 2 * radius + 12)
    _check_q(cs, args.q)
    res = model_kernel(cs, args.q, args.kappa, args.kappa_prime, radius, args.tol)
    doc = {"command": "kernel", "n": cs.n, "tolerance": args.tol, **res.to_json()}
    return doc, res.rows(), EXIT_OK


def cmd_torsion_assemble(args):
    if not args.input:
        raise InputError("torsion assemble needs --input LEDGER.json")
    try:
        text = Path(args.input).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
    ledger = load_ledger(text)
    exp = assemble_log_det_expansion(ledger, args.epsilon)
    doc = {"command": "torsion assemble", "n": ledger.n, **exp.to_json()}
    rows = [{"q": q, **v} for q, v in sorted(exp.per_degree.items())]
    return doc, rows, EXIT_OK


def cmd_torsion_demo(args):
    eps = [float(e) for e in args.epsilons.split(",")]
    table = spectral_convergence_demo(args.slope, eps, args.k, args.h)
    mono = table.monotone()
    doc = {
        "command": "torsion demo",
        "slope": table.slope,
        "grid_step": args.h,
        "modes": [{"l": l, "j": j, "multiplicity": 2 * l + 1, "monotone": bool(m)}
                  for (l, j), m in zip(table.modes, mono)],
        "smallest_nonconstant": [float(x) for x in table.smallest_nonconstant],
        "rows": table.rows(),
    }
    return doc, table.rows(), EXIT_OK


def cmd_sobolev(args):
    nu0_value = nuk = None
    if args.preset or args.input:
        cs = _cross_section(args, 10.0)
        _check_q(cs, args.q)
        if cs.n != args.n:
            raise InputError(f"--n {args.n} does not match the cross-section (n = {cs.n})")
        hyp = check_hypothesis_0notindroot(cs, args.q)
        nu0_value = hyp.nu0
        if hyp.passed:
            nuk = nu_ker(nu0_value, _topology(args))
    try:
        s = sobolev_exponents(args.n, nu0_value, nuk)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    doc = {"command": "sobolev", "n": args.n, **s.to_json()}
    failed = any(a.status == "fail" for a in s.assumptions)
    return doc, None, EXIT_HYPOTHESIS if failed else EXIT_OK


# ---------------------------------------------------------------- parser

def _source_flags(p):
    p.add_argument("--preset", help="sphere:N[,jmax] (round S^(N-1)) or circle:L[,jmax]")
    p.add_argument("--input", help="cross-section JSON file (ledger JSON for torsion assemble)")
    p.add_argument("--q", type=int, default=0, help="form degree")
    p.add_argument("--radius", type=float, help="truncation radius for indicial roots")


def _topology_flags(p):
    p.add_argument("--kernel-dim", type=int, default=0)
    p.add_argument("--kernel-decay", type=float)
    p.add_argument("--e-injective-low", choices=("yes", "no", "unknown"), default="unknown",
                   help="injectivity of H^(q+1)(M, dM) -> H^(q+1)(M)")
    p.add_argument("--e-injective-high", choices=("yes", "no", "unknown"), default="unknown",
                   help="injectivity of H^(n-q+1)(M, dM) -> H^(n-q+1)(M)")
    p.add_argument("--n0", type=float, default=math.inf, help="order of asymptotic conicity")


def _output_flags(p, default="json"):
    p.add_argument("--format", choices=("json", "text", "csv"), default=default)
    p.add_argument("--out", help="output path (default: standard output)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hodgecone", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("indicial", help="indicial root families and nu0")
    _source_flags(p)
    _output_flags(p)
    p.set_defaults(func=cmd_indicial)

    p = sub.add_parser("riesz", help="L^p interval of the Riesz transform on q-forms")
    _source_flags(p)
    _topology_flags(p)
    _output_flags(p)
    p.set_defaults(func=cmd_riesz)

    p = sub.add_parser("kernel", help="model resolvent kernel, mode by mode")
    _source_flags(p)
    p.add_argument("--kappa", type=float, required=True)
    p.add_argument("--kappa-prime", type=float, required=True)
    p.add_argument("--tol", type=float, help="fail if the tail bound exceeds this")
    _output_flags(p)
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("torsion", help="conic degeneration of analytic torsion")
    tsub = p.add_subparsers(dest="torsion_command", required=True)
    t = tsub.add_parser("assemble", help="assemble log det and log T from a ledger")
    t.add_argument("--input", required=True, help="ledger JSON")
    t.add_argument("--epsilon", type=float, required=True)
    _output_flags(t)
    t.set_defaults(func=cmd_torsion_assemble, preset=None)
    t = tsub.add_parser("demo", help="spectral convergence of the glued n = 3 family")
    t.add_argument("--slope", type=float, default=0.8, help="cone slope a in (0, 1]")
    t.add_argument("--epsilons", default="0.2,0.1,0.05,0.025")
    t.add_argument("--k", type=int, default=5, help="number of tracked eigenvalues")
    t.add_argument("--h", type=float, default=1e-3, help="coarsest grid step")
    _output_flags(t, default="csv")
    t.set_defaults(func=cmd_torsion_demo)

    p = sub.add_parser("sobolev", help="Sobolev exponents 2n/(n+2), 2n/(n-2) with hypothesis audit")
    p.add_argument("--n", type=int, required=True)
    _source_flags(p)
    _topology_flags(p)
    _output_flags(p)
    p.set_defaults(func=cmd_sobolev)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, rows, code = args.func(args)
        text = _render(doc, args.format, rows)
    except (InputError, SpectralDataError, InsufficientTruncation, HodgeconeError,
            ValueError, ArithmeticError) as exc:
        print(f"hodgecone: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
