"""Command-line interface.

Every subcommand prints one JSON document on stdout and, unless ``--quiet``,
a one-line summary on stderr.  Exit codes: 0 success, 2 usage error, 3 domain
error (violated precondition), 4 size gate or exhausted sampling budget.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict
from typing import Any, Sequence

from . import bounds, cyccut, generators, spectral
from .errors import CECError, DomainError, ResourceError
from .graph import degree_profile, girth, is_connected
from .io import format_edge_list, read_edge_list, write_edge_list

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_RESOURCE, EXIT_DEFECT = 0, 2, 3, 4, 1


class UsageError(Exception):
    pass


def _round(obj: Any) -> Any:
    """Floats to 12 significant digits; non-finite floats become null."""
    if isinstance(obj, float):
        return float(f"{obj:.12g}") if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    return obj


def _emit(doc: dict, summary: str, args) -> None:
    print(json.dumps(_round(doc)))
    if not args.quiet:
        print(summary, file=sys.stderr)


def parse_edges(text: str) -> list[tuple[int, int]]:
    """Parse ``"u1-v1,u2-v2,..."``."""
    out = []
    for item in filter(None, (s.strip() for s in text.split(","))):
        try:
            u, v = item.split("-")
            out.append((int(u), int(v)))
        except ValueError:
            raise UsageError(f"bad edge {item!r}; expected 'u-v'") from None
    return out


# ---------------------------------------------------------------------------

def cmd_generate(args) -> None:
    fam = args.family
    params = list(args.params)
    kwargs: dict[str, Any] = {}
    if fam == "k3t-plus":
        kwargs["inner_edges"] = parse_edges(args.inner or "")
    elif fam == "random-regular":
        kwargs.update(girth_min=args.girth_min, seed=args.seed, max_tries=args.max_tries)
    elif args.inner:
        raise UsageError("--inner only applies to k3t-plus")
    try:
        built = generators.FAMILIES[fam](*params, **kwargs)
    except TypeError as exc:
        raise UsageError(f"wrong parameters for {fam}: {exc}") from None
    G, labels = built if fam == "example48" else (built, None)
    provenance = {"family": fam, "params": params,
                  "seed": args.seed if fam == "random-regular" else None}
    if fam == "random-regular":
        provenance["algorithm"] = generators.RANDOM_REGULAR_ALGORITHM
        provenance["girth_min"] = args.girth_min
    if fam == "k3t-plus":
        provenance["inner"] = [list(e) for e in kwargs["inner_edges"]]
    doc: dict[str, Any] = {"family": fam, "params": params, "n": G.n, "m": G.m,
                           "provenance": provenance}
    if args.output:
        write_edge_list(G, args.output, provenance)
        doc["file"] = args.output
    else:
        doc["edge_list"] = format_edge_list(G, provenance)
    if args.labels:
        if labels is None:
            raise UsageError("--labels only applies to example48")
        with open(args.labels, "w") as fh:
            json.dump(labels.as_dict(), fh)
        doc["labels_file"] = args.labels
        doc["labels"] = labels.as_dict()
    _emit(doc, f"generated {fam} n={G.n} m={G.m}", args)


def analysis_report(G, provenance, tol: float) -> dict:
    prof = degree_profile(G)
    g = girth(G)
    spec = spectral.spectrum(G, tol)
    return {
        "n": G.n,
        "m": G.m,
        "degree_profile": asdict(prof),
        "girth": g if g is not None else "acyclic",
        "connected": is_connected(G),
        "two_edge_connected": cyccut.is_two_edge_connected(G),
        "lambda2": spec.lambda2,
        "lambda_abs": spec.lambda_abs,
        "spectrum_extremes": {"head": spec.head(), "tail": spec.tail()},
        "tol": tol,
        "generator_provenance": provenance,
    }


def cmd_analyze(args) -> None:
    G, prov = read_edge_list(args.file)
    doc = analysis_report(G, prov, args.tol)
    _emit(doc, f"n={G.n} m={G.m} girth={doc['girth']} lambda2={doc['lambda2']}", args)


def certify_report_dict(rep: bounds.CertifyReport) -> dict:
    cond = None
    if rep.condition is not None:
        c = rep.condition
        cond = {"branch": c.branch, "lhs": c.lhs, "rhs": c.rhs, "holds": c.holds}
    return {
        "d": rep.d,
        "g": rep.g,
        "lambda2": rep.lambda2,
        "condition": cond,
        "lower_bound": rep.lower_bound,
        "upper_bound": rep.upper_bound,
        "witness_cycle": rep.witness_cycle,
        "upper_witness": [list(e) for e in rep.upper_witness] if rep.upper_witness else None,
        "verdict": rep.verdict,
        "value": rep.value,
        "notes": rep.notes,
    }


def cmd_certify(args) -> None:
    G, _ = read_edge_list(args.file)
    extra = [parse_edges(args.edges)] if args.edges else []
    rep = bounds.certify(G, extra)
    _emit(certify_report_dict(rep),
          f"verdict {rep.verdict} lower={rep.lower_bound} upper={rep.upper_bound}", args)


def cmd_oracle(args) -> None:
    G, _ = read_edge_list(args.file)
    if args.min_side is not None:
        res = cyccut.size_cut_oracle(G, args.min_side, max_n=args.max_n)
    else:
        res = cyccut.cec_oracle(G, max_n=args.max_n)
    _emit(res.as_dict(), f"{res.status} {res.value if res.value is not None else ''}".strip(), args)


def cmd_cut_check(args) -> None:
    G, _ = read_edge_list(args.file)
    chk = cyccut.validate_cyclic_cut(G, parse_edges(args.edges))
    doc = {"valid": chk.valid, "size": chk.size,
           "components": [{k: c[k] for k in ("size", "edges", "has_cycle")} for c in chk.components]}
    _emit(doc, f"{'valid' if chk.valid else 'invalid'} cyclic cut of size {chk.size}", args)


def cmd_find_cycle(args) -> None:
    G, _ = read_edge_list(args.file)
    found = cyccut.find_separating_girth_cycle(G)
    doc = {"cycle": found.cycle, "cut": found.cut.as_dict(),
           "candidates_tried": found.candidates_tried}
    _emit(doc, f"separating cycle {found.cycle} cut size {found.cut.size}", args)


def cmd_bound(args) -> None:
    kind = args.kind
    if kind == "moore":
        res = bounds.moore_bound(args.d, args.g)
        doc = {"d": res.d, "g": res.g, "r": res.r, "value": res.value}
        summary = f"n0({args.d}, {args.g}) = {res.value}"
    elif kind == "prop22":
        val = bounds.prop22_lower(int(args.d), args.lam, args.g, args.k)
        doc = {"d": int(args.d), "lambda": args.lam, "g": args.g, "k": args.k, "value": val}
        summary = f"size-{args.k} cut >= {val}"
    elif kind == "epsilon":
        ea = bounds.epsilon_analysis(int(args.d), args.g)
        doc = asdict(ea)
        summary = f"epsilon* = {ea.epsilon_star}"
    else:
        v = bounds.spectral_condition(int(args.d), args.g, args.lam)
        doc = asdict(v)
        summary = f"condition {'holds' if v.holds is True else 'does not hold'}"
    _emit(doc, summary, args)


def cmd_mixing_test(args) -> None:
    G, _ = read_edge_list(args.file)
    rep = spectral.mixing_fuzz(G, args.trials, args.seed)
    _emit(asdict(rep), f"{rep.failures} failures in {rep.trials} trials", args)


# ---------------------------------------------------------------------------

def _add_globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--tol", type=float, default=d(spectral.DEFAULT_TOL),
                   help="eigensolver tolerance (default 1e-8)")
    p.add_argument("--seed", type=int, default=d(0), help="random seed (default 0)")
    p.add_argument("-q", "--quiet", action="store_true", default=d(False),
                   help="suppress the stderr summary")
    p.add_argument("--max-n", type=int, default=d(cyccut.DEFAULT_MAX_N),
                   help="largest vertex count for exhaustive oracles (default 20)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cec", description="Cyclic edge-connectivity: exact values, bounds, certificates.")
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        _add_globals(p, suppress=True)
        p.set_defaults(func=func)
        return p

    p = add("generate", cmd_generate, "write a named graph family as an edge list")
    p.add_argument("family", choices=sorted(generators.FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--output")
    p.add_argument("--labels", help="write example48 vertex labels as JSON")
    p.add_argument("--inner", help="k3t-plus inner edges, e.g. '0-1,1-2'")
    p.add_argument("--girth-min", type=int, default=3)
    p.add_argument("--max-tries", type=int, default=10_000)

    p = add("analyze", cmd_analyze, "structural and spectral summary")
    p.add_argument("file")

    p = add("certify", cmd_certify, "spectral lower bound vs constructive upper bound")
    p.add_argument("file")
    p.add_argument("--edges", help="extra candidate cyclic cut, e.g. '16-24,17-25'")

    p = add("oracle", cmd_oracle, "exact CEC (or size-k cut) by exhaustive search")
    p.add_argument("file")
    p.add_argument("--min-side", type=int, help="minimum component size instead of cyclicity")

    p = add("cut-check", cmd_cut_check, "check whether an edge set is a cyclic cut")
    p.add_argument("file")
    p.add_argument("--edges", required=True)

    p = add("find-cycle", cmd_find_cycle, "girth cycle whose boundary is a cyclic cut")
    p.add_argument("file")

    p = add("bound", cmd_bound, "evaluate a closed-form bound")
    p.add_argument("kind", choices=["moore", "prop22", "epsilon", "condition"])
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=float, default=0.0)
    p.add_argument("--k", type=int, default=1)

    p = add("mixing-test", cmd_mixing_test, "fuzz the mixing inequality")
    p.add_argument("file")
    p.add_argument("--trials", type=int, default=1000)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        args.func(args)
    except (UsageError, OSError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CECError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        if not args.quiet:
            print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        if isinstance(exc, ResourceError):
            return EXIT_RESOURCE
        return EXIT_DOMAIN if isinstance(exc, DomainError) else EXIT_DEFECT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
