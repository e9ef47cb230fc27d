"""Command-line front end.

    monogp info FILE
    monogp classify FILE
    monogp stable FILE
    monogp quadratic FILE [--dot]
    monogp nakayama (FILE | --kupisch 2,3,3)
    monogp verify [--seed N] [--count K] [--quadratic | --nakayama] [--jobs J]
    monogp gen [--seed N] [generator flags]

Every command accepts ``--json``.  Exit status: 0 ok, 1 verify found a
disagreement, 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import classify as cl
from .algebra import build_algebra
from .errors import MonomialError, OracleInconsistency
from .fuzz import GenConfig, generate
from .nakayama import kupisch_presentation, nakayama_data, validate_kupisch
from .oracle import gp_oracle
from .presentation import ParseError, format_presentation, parse_file
from .quadratic import gorenstein_report, relation_quiver


class UsageError(Exception):
    pass


class Printer:
    """Path labels, either space separated or with names run together."""

    def __init__(self, quiver, compact):
        if compact and any(len(str(a)) != 1 for a in quiver.arrow_names):
            raise UsageError("--paths-as-arrows needs single-character arrow names")
        self.compact = compact

    def __call__(self, p):
        if self.compact and p.arrows:
            return "".join(str(a) for a in p.arrows)
        return p.label()


def _load(args):
    if getattr(args, "kupisch", None):
        try:
            c = [int(x) for x in args.kupisch.replace(",", " ").split()]
        except ValueError:
            raise UsageError("--kupisch expects a list of integers")
        return kupisch_presentation(validate_kupisch(c))
    if not args.file:
        raise UsageError("a presentation file is required")
    try:
        return parse_file(args.file)
    except ParseError as e:
        raise UsageError("%s:%d:%d: %s" % (args.file, e.line, e.column, e.message))
    except OSError as e:
        raise UsageError(str(e))


def _dim_vector(dv):
    return {str(v): n for v, n in dv.items()}


def _fmt_dims(dv):
    return "(" + ", ".join("%s:%d" % (v, n) for v, n in dv.items()) + ")"


def _header(A, show):
    return {
        "dimension": A.dimension,
        "basis_size": len(A.basis),
        "relations_F": [show(r) for r in A.F],
    }


def _perfect_json(C, show):
    return [
        {
            "path": show(e.perfect_path),
            "cycle": [show(x) for x in e.cycle.paths],
            "dim_vector": _dim_vector(e.dim_vector),
            "top": str(e.top_vertex),
            "syzygy": show(e.syzygy),
        }
        for e in C.entries
    ]


def _print_perfect(C, show, out):
    out.append("perfect paths: %d" % len(C))
    for e in C.entries:
        out.append(
            "  %s  cycle [%s]  top %s  dims %s  syzygy %s"
            % (
                show(e.perfect_path),
                ", ".join(show(x) for x in e.cycle.paths),
                e.top_vertex,
                _fmt_dims(e.dim_vector),
                show(e.syzygy),
            )
        )


def cmd_info(A, show, args):
    Q = A.quiver
    data = {
        "vertices": [str(v) for v in Q.vertices],
        "arrows": [{"name": str(a), "source": str(s), "target": str(t)} for a, s, t in Q.arrows],
        **_header(A, show),
        "basis": [show(p) for p in A.basis],
    }
    if args.json:
        return data
    return [
        "vertices: " + " ".join(data["vertices"]),
        "arrows: " + ", ".join("%s: %s -> %s" % (a, s, t) for a, s, t in Q.arrows),
        "relations F: " + ("; ".join(data["relations_F"]) or "none"),
        "dimension: %d" % A.dimension,
        "basis: " + "; ".join(data["basis"]),
    ]


def cmd_classify(A, show, args):
    C = cl.perfect_paths(A)
    verdicts = [(p, cl.is_gp_cyclic(A, p)) for p in A.nontrivial_basis()]
    if args.json:
        return {
            **_header(A, show),
            "perfect_paths": _perfect_json(C, show),
            "verdicts": [{"path": show(p), "verdict": str(v)} for p, v in verdicts],
        }
    out = ["dimension: %d" % A.dimension]
    _print_perfect(C, show, out)
    gnp = [show(p) for p, v in verdicts if v is cl.Verdict.GORENSTEIN_NON_PROJECTIVE]
    out.append("non-projective Gorenstein-projective Ap: " + ("; ".join(gnp) or "none"))
    return out


def cmd_stable(A, show, args):
    C = cl.perfect_paths(A)
    overlaps = cl.find_overlaps(A)
    shape = cl.stable_category_shape(A)
    if args.json:
        return {
            **_header(A, show),
            "perfect_paths": _perfect_json(C, show),
            "overlaps": [
                {
                    "kind": o.kind,
                    "p": show(o.p),
                    "q": show(o.q),
                    "factor": show(o.factor),
                    "witness": show(o.witness),
                }
                for o in overlaps
            ],
            "stable": {"cycle_lengths": list(shape.cycle_lengths), "semisimple": shape.semisimple},
        }
    out = []
    _print_perfect(C, show, out)
    out.append("overlaps: %d" % len(overlaps))
    for o in overlaps:
        out.append(
            "  %s  p=%s q=%s factor %s witness %s"
            % (o.kind, show(o.p), show(o.q), show(o.factor), show(o.witness))
        )
    lengths = ", ".join(str(n) for n in shape.cycle_lengths) or "none"
    if shape.semisimple:
        prod = " x ".join("T_%d" % n for n in shape.cycle_lengths) or "0"
        out.append("stable category: %s (cycle lengths %s)" % (prod, lengths))
    else:
        out.append("stable category: not described by cycle lengths alone (cycle lengths %s)" % lengths)
    return out


def yn(flag):
    return "yes" if flag else "no"


def cmd_quadratic(A, show, args):
    R = relation_quiver(A)
    rep = gorenstein_report(A)
    if args.dot:
        return R.to_dot()
    if args.json:
        return {
            **_header(A, show),
            "relation_quiver": {
                "vertices": [str(v) for v in R.vertices],
                "edges": [[str(a), str(b)] for a, b in R.edges],
                "components": [
                    {
                        "vertices": [str(v) for v in c.vertices],
                        "kind": str(c.kind),
                        "longest_path_length": c.longest_path_length,
                    }
                    for c in R.components
                ],
            },
            "gorenstein": {
                "verdict": rep.gorenstein,
                "bound": rep.gorenstein_bound,
                "cm_free": rep.cm_free,
                "finite_gldim": rep.finite_global_dimension,
            },
        }
    out = ["relation quiver components:"]
    for c in R.components:
        extra = "" if c.longest_path_length is None else ", longest path %d" % c.longest_path_length
        out.append("  {%s}: %s%s" % (" ".join(str(v) for v in c.vertices), c.kind, extra))
    out.append("Gorenstein: %s" % yn(rep.gorenstein))
    if rep.gorenstein:
        out.append("self-injective dimension at most: %d" % rep.gorenstein_bound)
    out.append("CM-free: %s" % yn(rep.cm_free))
    out.append("finite global dimension: %s" % yn(rep.finite_global_dimension))
    return out


def cmd_nakayama(A, show, args):
    N = nakayama_data(A)
    C = cl.perfect_paths(A)
    nak = {
        "c": list(N.c),
        "theta": list(N.theta),
        "black": sorted(N.black),
        "theta_cyclically_black": sorted(N.theta_cyclically_black),
    }
    if args.json:
        return {**_header(A, show), "nakayama": nak, "perfect_paths": _perfect_json(C, show)}
    out = [
        "cycle order: " + " ".join(str(v) for v in N.labels),
        "Kupisch series c: " + " ".join(map(str, N.c)),
        "theta: " + " ".join(map(str, N.theta)),
        "black: " + (" ".join(map(str, nak["black"])) or "none"),
        "theta-cyclically black: " + (" ".join(map(str, nak["theta_cyclically_black"])) or "none"),
    ]
    _print_perfect(C, show, out)
    return out


def _gen_config(args, seed):
    return GenConfig(
        seed=seed,
        max_vertices=args.max_vertices,
        max_arrows=args.max_arrows,
        max_relation_length=args.max_relation_length,
        max_relations=args.max_relations,
        quadratic_only=args.quadratic,
        nakayama_only=args.nakayama,
        no_sources_sinks=args.no_sources_sinks,
        max_dimension=args.max_dimension,
    )


def verify_one(cfg):
    """Classifier against oracle on every nonzero nontrivial path of one algebra."""
    A = build_algebra(generate(cfg))
    bad = []
    paths = A.nontrivial_basis()
    for p in paths:
        want = cl.is_gp_cyclic(A, p)
        try:
            got = str(gp_oracle(A, p))
        except OracleInconsistency as e:
            got = "inconsistent: %s" % e
        if got != str(want):
            bad.append({"seed": cfg.seed, "path": p.label(), "classifier": str(want), "oracle": got})
    return len(paths), bad


def cmd_verify(args):
    cfgs = [_gen_config(args, args.seed + i) for i in range(args.count)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            results = list(ex.map(verify_one, cfgs, chunksize=8))
    else:
        results = [verify_one(c) for c in cfgs]
    npaths = sum(n for n, _ in results)
    bad = [m for _, b in results for m in b]
    if args.json:
        out = {"seed": args.seed, "count": args.count, "paths_checked": npaths, "mismatches": bad}
    else:
        out = ["algebras checked: %d" % args.count, "paths checked: %d" % npaths, "mismatches: %d" % len(bad)]
        for m in bad:
            out.append("  seed %(seed)d path %(path)s: classifier %(classifier)s, oracle %(oracle)s" % m)
    return out, (1 if bad else 0)


def cmd_gen(args):
    pres = generate(_gen_config(args, args.seed))
    if args.json:
        Q = pres.quiver
        return {
            "vertices": [str(v) for v in Q.vertices],
            "arrows": [{"name": str(a), "source": str(s), "target": str(t)} for a, s, t in Q.arrows],
            "relations": [[str(a) for a in g.arrows] for g in pres.generators],
        }
    return format_presentation(pres)


def _add_gen_flags(p, count_default=None):
    p.add_argument("--seed", type=int, default=0)
    if count_default is not None:
        p.add_argument("--count", type=int, default=count_default)
        p.add_argument("--jobs", type=int, default=1, help="worker processes")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--quadratic", action="store_true", help="length-2 relations only")
    kind.add_argument("--nakayama", action="store_true", help="Kupisch series on a basic cycle")
    p.add_argument("--max-vertices", type=int, default=4)
    p.add_argument("--max-arrows", type=int, default=6)
    p.add_argument("--max-relation-length", type=int, default=4)
    p.add_argument("--max-relations", type=int, default=6)
    p.add_argument("--no-sources-sinks", action="store_true")
    p.add_argument("--max-dimension", type=int, default=60 if count_default is not None else None)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    files = argparse.ArgumentParser(add_help=False, parents=[common])
    files.add_argument("--dot", action="store_true", help="print the relation quiver as a DOT graph")
    files.add_argument(
        "--paths-as-arrows", action="store_true", help="print paths as run-together arrow names"
    )

    parser = argparse.ArgumentParser(
        prog="monogp", description="Gorenstein-projective modules over monomial algebras"
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("info", "dimension, minimal relations and basis"),
        ("classify", "perfect paths and Gorenstein-projective path modules"),
        ("stable", "overlaps and the shape of the stable category"),
        ("quadratic", "relation quiver and Gorenstein report"),
    ]:
        p = sub.add_parser(name, parents=[files], help=help_)
        p.add_argument("file")
    p = sub.add_parser("nakayama", parents=[files], help="theta map and black vertices")
    p.add_argument("file", nargs="?")
    p.add_argument("--kupisch", metavar="LIST", help="Kupisch series such as 2,3,3")
    p = sub.add_parser("verify", parents=[common], help="classifier against the module oracle")
    _add_gen_flags(p, count_default=100)
    p = sub.add_parser("gen", parents=[common], help="print a random presentation")
    _add_gen_flags(p)
    return parser


FILE_COMMANDS = {
    "info": cmd_info,
    "classify": cmd_classify,
    "stable": cmd_stable,
    "quadratic": cmd_quadratic,
    "nakayama": cmd_nakayama,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    code = 0
    try:
        if args.command in FILE_COMMANDS:
            if args.command == "nakayama" and args.file and args.kupisch:
                raise UsageError("give either a file or --kupisch, not both")
            pres = _load(args)
            A = build_algebra(pres)
            show = Printer(A.quiver, args.paths_as_arrows)
            if args.dot and args.command != "quadratic":
                result = relation_quiver(A).to_dot()
            else:
                result = FILE_COMMANDS[args.command](A, show, args)
        elif args.command == "verify":
            if args.count < 0 or args.jobs < 1:
                raise UsageError("--count must be >= 0 and --jobs >= 1")
            result, code = cmd_verify(args)
        else:
            result = cmd_gen(args)
    except (UsageError, MonomialError) as e:
        print("monogp: error: %s" % e, file=stderr)
        return 2
    if isinstance(result, dict):
        stdout.write(json.dumps(result, indent=2) + "\n")
    elif isinstance(result, str):
        stdout.write(result)
    else:
        stdout.write("\n".join(result) + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
