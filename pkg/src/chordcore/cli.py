"""Command-line interface: ``chordcore <subcommand> [input | --fixture NAME] ...``.

Exit status is 0 on success, 1 when a checked property fails (a rejected
certificate, a failing sweep), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import kernels
from .chordal import is_chordal, random_chordal, random_forest
from .complex import SimplicialComplex, independence_complex, parse_facets
from .dismantle import DismantleCertificate, NotChordalError, core, decide, verify_certificate
from .explorer import catalog_to_dict, fixture, paper_fixtures, s0_wedge_check, taut_catalog
from .graph import Graph, format_edge_list, matching_graph, parse_edge_list
from .homology import FaceBudgetExceeded, HomotopySignature, reduced_betti, wedge_decomposition, wedge_via_simplicial
from .treemodel import (
    RootedTreeModel,
    clique_tree,
    find_tr_good_pair,
    format_tree_model,
    is_tr_good,
    parse_tree_model,
    tree_model_violation,
)

FORMATS = {".edges": "edges", ".facets": "facets", ".tree": "tree"}


class UsageError(Exception):
    pass


def _emit(args: argparse.Namespace, payload: Any, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _parse_policy(spec: str) -> int | None:
    if spec == "lex":
        return None
    if spec.startswith("seed:"):
        try:
            return int(spec[5:])
        except ValueError:
            pass
    raise UsageError(f"bad policy {spec!r}; use 'lex' or 'seed:<n>'")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _input_format(args: argparse.Namespace, path: str) -> str:
    if args.format:
        return args.format
    fmt = FORMATS.get(Path(path).suffix)
    if fmt is None:
        return "edges"
    return fmt


def _load_graph(args: argparse.Namespace) -> Graph:
    if args.fixture:
        try:
            return fixture(args.fixture)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    if not args.input:
        raise UsageError("give an input file or --fixture NAME")
    fmt = _input_format(args, args.input)
    if fmt != "edges":
        raise UsageError(f"expected a graph (.edges), got format {fmt!r}")
    return parse_edge_list(_read_text(args.input))


def _graph_json(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.edges()]}


def _signature_json(sig: HomotopySignature) -> dict:
    return {
        "kind": sig.kind,
        "label": sig.label(),
        "betti_minus1": sig.reduced(-1),
        "betti": list(sig.betti_nonneg),
    }


# -- subcommands ---------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> int:
    G = _load_graph(args)
    chordal = is_chordal(G)
    _emit(args, {"chordal": chordal, "n": G.n, "m": G.m}, "chordal" if chordal else "not chordal")
    return 0


def cmd_decide(args: argparse.Namespace) -> int:
    G = _load_graph(args)
    report = decide(G, _parse_policy(args.policy), oracle=args.oracle, unsafe=args.unsafe)
    data = report.to_dict(timings=args.timings)
    lines = [f"chordal: {report.chordal}", f"classification: {report.classification}"]
    if report.k is not None:
        lines.append(f"k: {report.k} (S^{report.k - 1})")
    if report.dismantlable is not None:
        lines.append(f"dismantlable: {report.dismantlable} (non-chordal input, no topological claim)")
    if report.certificate is not None:
        lines.append(f"steps: {len(report.certificate.steps)}, core vertices: {report.certificate.core.n}")
    if report.betti is not None:
        lines.append(f"betti (dim -1): {report.betti_minus1}, betti (dim >= 0): {report.betti}")
    if args.timings:
        lines.append(f"elapsed_ms: {data['elapsed_ms']}")
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_core(args: argparse.Namespace) -> int:
    G = _load_graph(args)
    if not args.unsafe and not is_chordal(G):
        raise UsageError("input is not chordal; pass --unsafe to dismantle anyway")
    cert = core(G, _parse_policy(args.policy))
    lines = [f"remove {s.removed} (witness {s.witness})" for s in cert.steps]
    lines.append(f"core: vertices {list(cert.core_labels)} edges {cert.core_edges()}")
    _emit(args, cert.to_dict(), "\n".join(lines))
    return 0


def cmd_certify(args: argparse.Namespace) -> int:
    G = _load_graph(args)
    try:
        data = json.loads(_read_text(args.cert))
        cert = DismantleCertificate.from_dict(data, G)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed certificate: {exc}") from None
    check = verify_certificate(G, cert)
    payload = {"valid": check.ok, "bad_step": check.bad_step, "reason": check.reason}
    text = "certificate valid" if check.ok else f"certificate invalid at step {check.bad_step}: {check.reason}"
    _emit(args, payload, text)
    return 0 if check.ok else 1


def cmd_betti(args: argparse.Namespace) -> int:
    if args.input and not args.fixture and _input_format(args, args.input) == "facets":
        K: SimplicialComplex = parse_facets(_read_text(args.input))
    else:
        K = independence_complex(_load_graph(args))
    sig = reduced_betti(K, field=args.field)
    _emit(args, _signature_json(sig), sig.label())
    return 0


def cmd_wedge(args: argparse.Namespace) -> int:
    G = _load_graph(args)
    try:
        if args.vertex is None:
            sig = wedge_decomposition(G)
        else:
            sig = wedge_via_simplicial(G, args.vertex)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, _signature_json(sig), sig.label())
    return 0


def cmd_treemodel(args: argparse.Namespace) -> int:
    G = _load_graph(args)
    if args.check:
        T = parse_tree_model(_read_text(args.check))
        problem = tree_model_violation(T, G)
        _emit(args, {"valid": problem is None, "reason": problem}, problem or "valid tree model")
        return 0 if problem is None else 1
    try:
        T = clique_tree(G)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"bags": [sorted(b) for b in T.bags], "tree_edges": [list(e) for e in T.tree_edges]}
    _emit(args, payload, format_tree_model(T).rstrip("\n"))
    return 0


def cmd_trgood(args: argparse.Namespace) -> int:
    G = _load_graph(args)
    T = parse_tree_model(_read_text(args.model)) if args.model else clique_tree(G)
    problem = tree_model_violation(T, G)
    if problem:
        raise UsageError(f"tree model invalid: {problem}")
    if not 0 <= args.root < T.size:
        raise UsageError(f"root must be a node index in [0, {T.size})")
    rooted = RootedTreeModel(T, args.root)
    try:
        x, y = find_tr_good_pair(G, rooted)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    verified = is_tr_good(rooted, G, x, y)
    _emit(args, {"x": x, "y": y, "verified": verified}, f"pair ({x}, {y}) verified={verified}")
    return 0 if verified else 1


def cmd_gen(args: argparse.Namespace) -> int:
    import random

    seed = args.seed if args.seed is not None else 0
    if args.kind == "chordal":
        G, T = random_chordal(args.n, args.fill, seed)
        if args.model_out:
            Path(args.model_out).write_text(format_tree_model(T))
    elif args.kind == "forest":
        G = random_forest(args.n, random.Random(seed))
    elif args.kind == "matching":
        G = matching_graph(args.k)
    else:
        if not args.name:
            raise UsageError(f"gen fixture needs a name: {', '.join(sorted(paper_fixtures()))}")
        try:
            G = fixture(args.name)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    _emit(args, _graph_json(G), format_edge_list(G).rstrip("\n"))
    return 0


def cmd_explore(args: argparse.Namespace) -> int:
    if args.n_max > 8:
        raise UsageError("--n-max must be at most 8")
    if args.s0:
        found = s0_wedge_check(args.n_max)
        payload = {str(m): [_graph_json(G) for G in gs] for m, gs in found.items()}
        text = "\n".join(f"m={m}: {[(G.n, G.m) for G in gs]}" for m, gs in found.items())
        _emit(args, payload, text)
        return 0
    catalog = taut_catalog(args.n_max)
    rows = catalog_to_dict(catalog)
    text = "\n".join(f"{r['signature']}: {r['classes']} classes, {r['labeled']} labeled" for r in rows)
    _emit(args, rows, text)
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    from .sweeps import PARALLEL_SUITES, SUITES

    names = args.suites or list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {unknown}; known: {', '.join(SUITES)}")
    results = []
    for name in names:
        kwargs = {"jobs": args.jobs} if name in PARALLEL_SUITES else {}
        if args.seed is not None and name not in ("taut", "performance"):
            kwargs["seed"] = args.seed
        res = SUITES[name](**kwargs)
        results.append(res)
        if not args.json:
            print(res.line(), flush=True)
    if args.json:
        print(json.dumps([r.to_dict() for r in results], indent=2, sort_keys=True))
    return 0 if all(r.ok for r in results) else 1


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized commands")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    common.add_argument("--unsafe", action="store_true", help="dismantle non-chordal input (no topological claim)")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("input", nargs="?", help="input file (.edges, .facets, .tree) or '-' for stdin")
    source.add_argument("--fixture", help="use a built-in fixture graph instead of a file")
    source.add_argument("--format", choices=sorted(set(FORMATS.values())), help="override format detection")

    parser = argparse.ArgumentParser(prog="chordcore", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({kernels.BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_: str, with_source: bool = True) -> argparse.ArgumentParser:
        parents = [common, source] if with_source else [common]
        p = sub.add_parser(name, parents=parents, help=help_)
        p.set_defaults(func=func)
        return p

    add("check", cmd_check, "chordality test")
    p = add("decide", cmd_decide, "contractibility / sphere decision with certificate")
    p.add_argument("--policy", default="lex", help="'lex' (default) or 'seed:<n>'")
    p.add_argument("--oracle", action="store_true", help="also compute reduced Betti numbers")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings (output no longer byte-stable)")
    p = add("core", cmd_core, "dismantling certificate and core")
    p.add_argument("--policy", default="lex")
    p = add("certify", cmd_certify, "verify a certificate produced by 'core --json'")
    p.add_argument("--cert", required=True, help="certificate JSON file")
    p = add("betti", cmd_betti, "reduced Betti numbers of Ind(G) or of a facet list")
    p.add_argument("--field", type=int, default=2, help="prime field characteristic")
    p = add("wedge", cmd_wedge, "homotopy signature by peeling recursion")
    p.add_argument("--vertex", type=int, default=None, help="split over the neighbors of this simplicial vertex")
    p = add("treemodel", cmd_treemodel, "emit the clique tree, or validate a model with --check")
    p.add_argument("--check", metavar="MODEL", help="tree-model file to validate against the graph")
    p = add("trgood", cmd_trgood, "rooted good pair for a chosen root node")
    p.add_argument("--root", type=int, default=0)
    p.add_argument("--model", help="tree-model file (default: clique tree)")
    p = add("gen", cmd_gen, "generate graphs", with_source=False)
    p.add_argument("kind", choices=["chordal", "forest", "matching", "fixture"])
    p.add_argument("name", nargs="?", help="fixture name for 'gen fixture'")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--fill", type=float, default=0.5)
    p.add_argument("--model-out", help="write the witness tree model here (chordal only)")
    p = add("explore", cmd_explore, "catalog of taut chordal graphs by signature", with_source=False)
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--s0", action="store_true", help="only wedges of 0-spheres")
    p = add("sweep", cmd_sweep, "run verification suites", with_source=False)
    p.add_argument("suites", nargs="*", help="suite names (default: all)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotChordalError as exc:
        print(f"error: {exc} (use --unsafe)", file=sys.stderr)
        return 2
    except (UsageError, ValueError, FaceBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


run = main


if __name__ == "__main__":
    sys.exit(main())
