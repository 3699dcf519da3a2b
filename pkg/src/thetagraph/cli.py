"""Command-line interface: ``thetagraph <verb> [options]``.

Exit status is 0 on success, 1 when a verification fails (a JSON witness is
still written) and 2 on usage or capacity errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from .digraph import CapacityError, PropertyViolation, isomorphic_small, tensor_product
from .finring import DEFAULT_CAP, RingAxiomError, parse_ring, theta_graph
from .gf import automorphisms, field_of_order
from .subspace import Matrix
from . import theta_matrix as tm

VERBS = ("build", "stats", "verify", "hamilton", "clique", "dominate", "tensor-check", "automorphism")


class UsageError(ValueError):
    pass


def _common(p, selector=True):
    if selector:
        p.add_argument("--ring", help="ring descriptor: zmod:N, matrix:N:Q, product:D1,D2")
        p.add_argument("--n", type=int, help="matrix size n")
        p.add_argument("--q", type=int, help="field order q (prime power)")
    p.add_argument("--format", choices=("json", "dot", "text"), default="json")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--cap", type=int, default=None, help="vertex/element cap")
    p.add_argument("--seed", type=int, default=None, help="reserved; all algorithms are deterministic")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thetagraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)
    _common(sub.add_parser("build", help="emit Θ(R) or Θ(M_n(F_q))"))
    _common(sub.add_parser("stats", help="vertex/arc counts and degree histogram"))
    v = sub.add_parser("verify", help="run a verification")
    v.add_argument("check", choices=("characterization", "degrees", "model", "closure"))
    _common(v)
    _common(sub.add_parser("hamilton", help="Hamiltonian cycle or path avoiding [0], [1]"))
    _common(sub.add_parser("clique", help="largest directed clique"))
    _common(sub.add_parser("dominate", help="dominating set construction"))
    t = sub.add_parser("tensor-check", help="check Θ(L)×Θ(R) ≅ Θ(target)")
    t.add_argument("--left", required=True)
    t.add_argument("--right", required=True)
    t.add_argument("--target", required=True)
    _common(t, selector=False)
    a = sub.add_parser("automorphism", help="induced or exotic automorphism")
    a.add_argument("--matrix", help="rows separated by ';', entries by ',' (default identity)")
    a.add_argument("--sigma", type=int, default=0, help="Frobenius power")
    a.add_argument("--exotic", help="line permutation for n = 2, e.g. 1,0,2")
    _common(a)
    return parser


def _matrix_selector(args):
    if args.ring:
        raise UsageError("this command takes --n and --q, not --ring")
    if args.n is None or args.q is None:
        raise UsageError("--n and --q are required")
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    F = field_of_order(args.q)
    cap = args.cap or tm.DEFAULT_VERTEX_CAP
    return tm.build(args.n, F, cap=cap)


def _label_json(x):
    if isinstance(x, tm.PairVertex):
        return x.to_json()
    return json.loads(json.dumps(x))


def _label_text(x):
    if isinstance(x, (tm.PairVertex, str)):
        return str(x) if isinstance(x, str) else repr(x)
    return json.dumps(x)


def _graph_for(args):
    if args.ring:
        if args.n is not None or args.q is not None:
            raise UsageError("give either --ring or --n/--q")
        R = parse_ring(args.ring, cap=args.cap or DEFAULT_CAP)
        return theta_graph(R), None
    T = _matrix_selector(args)
    return T.graph, T


def _emit(args, payload, text=None):
    if args.format == "text" and text is not None:
        out = text
    elif isinstance(payload, str):
        out = payload
    else:
        out = json.dumps(payload) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def cmd_build(args):
    G, _ = _graph_for(args)
    if args.format == "dot":
        _emit(args, G.to_dot(label_text=_label_text))
    else:
        data = G.to_json(_label_json)
        text = "\n".join(f"{u} -> {v}" for u, v in G.arcs()) + "\n"
        _emit(args, data, text)
    return 0


def cmd_stats(args):
    G, T = _graph_for(args)
    hist = Counter(G.outdegree(v) for v in range(G.n))
    data = {
        "vertices": G.n,
        "arcs": G.arc_count(),
        "loops": sum(G.has_loop(v) for v in range(G.n)),
        "outdegree_histogram": [[d, hist[d]] for d in sorted(hist, reverse=True)],
    }
    if T is not None:
        data["vertex_formula"] = tm.vertex_count_formula(T.n, T.field.q)
    text = "\n".join(f"{k}: {v}" for k, v in data.items()) + "\n"
    _emit(args, data, text)
    return 0


def _verify_degrees(T):
    G, n, q = T.graph, T.n, T.field.q
    for v, pv in enumerate(T.vertices):
        want = tm.degree_formula(n, pv.W.dim, q)
        if G.outdegree(v) != want or G.indegree(v) != want:
            return {"pass": False, "witness": {"vertex": v, "out": G.outdegree(v),
                                                 "in": G.indegree(v), "expected": want}}
    return {"pass": True, "witness": None}


def _verify_model(T):
    from .finring import ring_matrix
    R = ring_matrix(T.n, T.field)
    iso = isomorphic_small(T.graph, theta_graph(R))
    return {"pass": iso is not None, "witness": None if iso is not None else {"reason": "no isomorphism"}}


def _verify_closure(T):
    from .digraph import members
    G = T.graph
    for v in range(G.n):
        x = 1 << v
        for name, cl in (("cl_t", G.cl_t_mask), ("cl_s", G.cl_s_mask)):
            c = cl(x)
            if c & x != x or cl(c) != c:
                return {"pass": False, "witness": {"operator": name, "vertex": v, "closure": members(c)}}
    return {"pass": True, "witness": None}


def cmd_verify(args):
    T = _matrix_selector(args)
    if args.check == "characterization":
        report = tm.verify_characterization(T.graph, T.n, T.field.q)
    elif args.check == "degrees":
        report = {"degrees": _verify_degrees(T)}
    elif args.check == "model":
        report = {"model": _verify_model(T)}
    else:
        report = {"closure": _verify_closure(T)}
    ok = all(r["pass"] for r in report.values())
    text = "\n".join(f"{k}: {'pass' if r['pass'] else 'FAIL'}" for k, r in report.items()) + "\n"
    _emit(args, report, text)
    return 0 if ok else 1


def cmd_hamilton(args):
    T = _matrix_selector(args)
    kind, seq = tm.hamiltonian(T.n, T.field)
    ids = T.ids(seq)
    inner = [v for v in range(len(T)) if v not in (T.zero_vertex, T.one_vertex)]
    ok, msg = tm.validate_walk(T.graph, ids, kind == "cycle", inner)
    if not ok:
        _emit(args, {"pass": False, "witness": msg})
        return 1
    _emit(args, ids, f"{kind} of {len(ids)} vertices\n" + " ".join(map(str, ids)) + "\n")
    return 0


def cmd_clique(args):
    T = _matrix_selector(args)
    size, dims = tm.max_directed_clique(T.n, T.field.q)
    U = T.by_dim[dims[0]][0]
    K = tm.clique_K(U, T)
    data = {"formula_size": size, "witness_dims": list(dims), "witness": list(K.members),
            "witness_is_clique": tm.is_directed_clique(T.graph, K.members)}
    if len(T) <= 400:
        best, _ = tm.maximum_directed_cliques(T.graph)
        data["exhaustive_size"] = best
    ok = data["witness_is_clique"] and len(K.members) == size and data.get("exhaustive_size", size) == size
    _emit(args, data, "\n".join(f"{k}: {v}" for k, v in data.items()) + "\n")
    return 0 if ok else 1


def cmd_dominate(args):
    T = _matrix_selector(args)
    if T.n < 2:
        raise UsageError("domination constructions need n >= 2")
    rep = tm.domination_report(T)
    _emit(args, rep, "\n".join(f"{k}: {v}" for k, v in rep.items()) + "\n")
    return 0 if rep["pass"] else 1


def cmd_tensor(args):
    cap = args.cap or DEFAULT_CAP
    L, Rr, Tg = (parse_ring(d, cap=cap) for d in (args.left, args.right, args.target))
    prod = tensor_product(theta_graph(L), theta_graph(Rr))
    target = theta_graph(Tg)
    iso = isomorphic_small(prod, target)
    data = {"left": L.descriptor, "right": Rr.descriptor, "target": Tg.descriptor,
            "isomorphic": iso is not None, "mapping": iso}
    _emit(args, data, f"isomorphic: {iso is not None}\n")
    return 0 if iso is not None else 1


def _parse_matrix(text, F, n):
    rows = [[int(x) for x in r.split(",")] for r in text.split(";")]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise UsageError(f"--matrix must be {n}x{n}")
    return Matrix.from_rows(F, rows)


def cmd_automorphism(args):
    T = _matrix_selector(args)
    if args.exotic is not None:
        pi = [int(x) for x in args.exotic.split(",")]
        if T.n != 2:
            raise UsageError("--exotic requires n = 2")
        perm = tm.exotic_automorphism_n2(pi, T)
        search = tm.find_inducing_pair(perm, T)
        data = {"permutation": perm, "automorphism": True,
                "induced": search.induced_by is not None,
                "pairs_checked": search.pairs_checked, "distinct_induced_maps": search.distinct_maps}
    else:
        F = T.field
        A = _parse_matrix(args.matrix, F, T.n) if args.matrix else Matrix.identity(F, T.n)
        sigmas = automorphisms(F)
        if not 0 <= args.sigma < len(sigmas):
            raise UsageError(f"--sigma must be in [0, {len(sigmas)})")
        perm = tm.induced_automorphism(A, sigmas[args.sigma], T)
        data = {"permutation": perm, "automorphism": True, "induced": True}
    _emit(args, data, " ".join(map(str, data["permutation"])) + "\n")
    return 0


COMMANDS = {
    "build": cmd_build,
    "stats": cmd_stats,
    "verify": cmd_verify,
    "hamilton": cmd_hamilton,
    "clique": cmd_clique,
    "dominate": cmd_dominate,
    "tensor-check": cmd_tensor,
    "automorphism": cmd_automorphism,
}


def run(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.verb](args)
    except (UsageError, CapacityError, OverflowError, RingAxiomError, PropertyViolation, ValueError) as exc:
        print(f"thetagraph: error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
