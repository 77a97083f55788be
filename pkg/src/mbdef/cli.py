"""Command-line entry point. Exit codes: 0 pass, 1 a check failed, 2 bad input."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import commands
from .config import Config
from .errors import MBDefError
from .files import load_element, load_model
from .report import GoldenResult, RunReport, emit, golden_compare


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mbdef", description="Exact checks for critical-value deformation computations.")
    p.add_argument("--config", help="JSON file with default settings")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=["json", "table"], default=None)
        return sp

    sp = add("universal-phic", "universal critical value Phi_c")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-weight", type=int, default=None)
    sp.add_argument("--dim-y", type=int, default=None)
    sp.add_argument("--no-oracle", action="store_true", help="skip the closed-form series comparison")

    sp = add("mc-check", "Maurer-Cartan residual of an element in a model")
    sp.add_argument("--model", required=True)
    sp.add_argument("--element", required=True)
    sp.add_argument("--cutoff", type=int, default=None)

    sp = add("chi-check", "L-infinity morphism condition for chi at random or given points")
    sp.add_argument("--model", default=None, help="model file (default: two-coordinate chart with two odd parameters)")
    sp.add_argument("--eta", default=None)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--samples", type=int, default=None)
    sp.add_argument("--cutoff", type=int, default=None)

    sp = add("clifford", "Clifford algebra, spinor and matrix factorization checks")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--check", default="all", choices=["all", "mul", "spinor", "thom", "resolution", "koszul"])
    sp.add_argument("--max-degree", type=int, default=None)

    sp = add("hh-ua1", "Hochschild cohomology of the truncated a^1 algebra")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-weight", type=int, default=None)

    sp = add("koszul", "homology of the local critical resolution")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--max-degree", type=int, default=None)

    sp = add("scaling", "degeneration family checks for the universal path")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-weight", type=int, default=None)

    sp = add("ideal-check", "critical-locus ideal checks for the universal path")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-weight", type=int, default=None)
    sp.add_argument("--perturb", default=None, help="term added to t_c (negative control)")

    sp = add("golden", "compare stored reports")
    sp.add_argument("--name", default="all", choices=["all", *sorted(commands.GOLDEN)])
    sp.add_argument("--golden-dir", default="golden")
    sp.add_argument("--bless", action="store_true")
    return p


def _pick(v, default):
    return default if v is None else v


def run(args, cfg: Config):
    c = args.command
    if c == "universal-phic":
        return commands.universal_phic(args.n, _pick(args.max_weight, cfg.max_weight), args.dim_y,
                                       oracle=not args.no_oracle)
    if c == "mc-check":
        model = load_model(args.model)
        elem = load_element(args.element, model.context, _pick(args.cutoff, cfg.cutoff))
        _check_field(elem, cfg)
        return commands.mc_check_report(model, elem)
    if c == "chi-check":
        model = load_model(args.model) if args.model else commands.default_chi_model()
        cutoff = _pick(args.cutoff, cfg.cutoff)
        eta = load_element(args.eta, model.context, cutoff) if args.eta else None
        return commands.chi_check_report(model, eta, _pick(args.seed, cfg.seed), _pick(args.samples, cfg.samples),
                                         cutoff)
    if c == "clifford":
        if cfg.field == "QQ" and args.check in ("all", "spinor", "thom") and args.rank >= 2:
            raise ValueError("spinor constructions need the field QQ(i)")
        return commands.clifford_report(args.rank, args.check, _pick(args.max_degree, cfg.max_degree))
    if c == "hh-ua1":
        return commands.hh_ua1_report(args.n, _pick(args.max_weight, cfg.max_weight))
    if c == "koszul":
        return commands.koszul_report(args.rank, _pick(args.max_degree, cfg.max_degree))
    if c == "scaling":
        return commands.scaling_report(args.n, _pick(args.max_weight, cfg.max_weight))
    if c == "ideal-check":
        return commands.ideal_report(args.n, _pick(args.max_weight, cfg.max_weight), args.perturb)
    if c == "golden":
        names = sorted(commands.GOLDEN) if args.name == "all" else [args.name]
        results = [golden_compare(commands.GOLDEN[n](), Path(args.golden_dir) / f"{n}.json", args.bless)
                   for n in names]
        rep = RunReport("golden", {"names": names, "bless": args.bless})
        rep.outputs["results"] = [r.to_json() for r in results]
        rep.checks.update({r.path: r.passed for r in results})
        return rep
    raise ValueError(f"unknown command {c}")


def _check_field(elem, cfg: Config):
    from .coeffs import is_real

    if cfg.field == "QQ" and not all(is_real(c) for c in elem.terms.values()):
        raise ValueError("element has Gaussian coefficients but the field is QQ")


def main(argv=None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    try:
        cfg = Config.load(args.config) if args.config else Config()
        rep = run(args, cfg)
    except (MBDefError, ValueError, KeyError, OSError, json.JSONDecodeError) as e:
        print(f"mbdef: error: {e}", file=sys.stderr)
        return 2
    sys.stdout.write(emit(rep, args.format or cfg.format))
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
