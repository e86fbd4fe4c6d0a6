"""Command-line front end.

Subcommands wrap the library over the JSON diagram format; outputs are JSON
(or DOT for ``dot``), byte-identical across runs for identical inputs.  Exit
codes: 0 success, 1 semantic failure (a required positive verdict came out
negative), 2 parse or format error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .acyclicity import classify
from .chain import compare_molec_nu, is_steiner, is_strong_steiner, is_unital_basis, linearize
from .constructions import dual, gray, join, suspension
from .core import FormatError, MINUS, PLUS, StructureError, augment, is_oriented_thin
from .flows import layerings, orderings, ordering_of
from .io import dump_diagram, load_diagram, subset_to_list, to_dot, witness_to_dict
from .molecule import is_atom, is_regular_directed_complex, recognise
from .omegacat import enumerate_cells

SIGN = {"-": MINUS, "+": PLUS, "both": None}


def _emit(data, args) -> None:
    text = json.dumps(data, sort_keys=True, indent=2 if getattr(args, "pretty", False) else None)
    print(text)


def _write_diagram(P, args) -> None:
    out = getattr(args, "output", None)
    text = dump_diagram(P, path=out, pretty=getattr(args, "pretty", False))
    if out is None:
        print(text)


def cmd_validate(args) -> int:
    P = load_diagram(args.file)
    rdc = is_regular_directed_complex(P)
    thin = is_oriented_thin(augment(P))
    _emit(
        {
            "ogposet": True,
            "dim": P.dim,
            "elements": P.size,
            "regular_directed_complex": rdc,
            "oriented_thin_augmented": thin,
        },
        args,
    )
    return 0 if rdc and thin else 1


def cmd_classify(args) -> int:
    P = load_diagram(args.file)
    _emit(classify(P), args)
    return 0


def cmd_boundary(args) -> int:
    P = load_diagram(args.file)
    U = P.whole().boundary(args.dim, SIGN[args.sign])
    _emit({"dim": args.dim, "sign": args.sign, "elements": subset_to_list(U)}, args)
    if args.output:
        sub, _ = U.extract()
        dump_diagram(sub, path=args.output)
    return 0


def cmd_layerings(args) -> int:
    P = load_diagram(args.file)
    try:
        found = layerings(P, args.k)
    except (StructureError, ValueError) as exc:
        _emit({"error": str(exc)}, args)
        return 1
    _emit(
        {
            "k": args.k,
            "count": len(found),
            "layerings": [[subset_to_list(layer) for layer in l.layers] for l in found],
            "orderings": [[list(x) for x in ordering_of(l)] for l in found],
        },
        args,
    )
    return 0


def cmd_orderings(args) -> int:
    P = load_diagram(args.file)
    try:
        found = orderings(P, args.k)
    except (StructureError, ValueError) as exc:
        _emit({"error": str(exc)}, args)
        return 1
    _emit({"k": args.k, "count": len(found), "orderings": [[list(x) for x in o] for o in found]}, args)
    return 0


def cmd_molecule(args) -> int:
    P = load_diagram(args.file)
    w = recognise(P)
    _emit(
        {
            "molecule": w is not None,
            "atom": is_atom(P) if w is not None else False,
            "witness": witness_to_dict(w) if w is not None else None,
        },
        args,
    )
    return 0 if w is not None else 1


def _binary(args, op) -> int:
    from .molecule import as_molecule, paste

    P = load_diagram(args.a)
    Q = load_diagram(args.b)
    if op == "paste":
        U, V = recognise(P), recognise(Q)
        if U is None or V is None:
            _emit({"error": "paste needs two molecules"}, args)
            return 1
        try:
            R = paste(as_molecule(P), as_molecule(Q), args.k).poset
        except (StructureError, ValueError) as exc:
            _emit({"error": str(exc)}, args)
            return 1
    elif op == "gray":
        R = gray(P, Q)
    else:
        R = join(P, Q)
    _write_diagram(R, args)
    return 0


def cmd_paste(args) -> int:
    return _binary(args, "paste")


def cmd_gray(args) -> int:
    return _binary(args, "gray")


def cmd_join(args) -> int:
    return _binary(args, "join")


def cmd_susp(args) -> int:
    _write_diagram(suspension(load_diagram(args.a)), args)
    return 0


def cmd_dual(args) -> int:
    P = load_diagram(args.a)
    dims = [int(tok) for tok in args.dims.split(",") if tok] if args.dims else list(range(1, max(P.dim, 0) + 1))
    _write_diagram(dual(P, dims), args)
    return 0


def cmd_cells(args) -> int:
    P = load_diagram(args.file)
    cs = enumerate_cells(P, args.max_dim, bound=args.bound)
    data = {
        "complete": cs.complete,
        "mode": cs.mode,
        "counts": {str(d): n for d, n in sorted(cs.by_dim().items())},
    }
    if args.shapes:
        data["cells"] = [
            {"dim": c.dim, "elements": [[x.dim, x.index] for x in c.shape.poset], "image": [list(c.map(x)) for x in c.shape.poset]}
            for c in cs.cells
        ]
    _emit(data, args)
    return 0


def cmd_chain(args) -> int:
    P = load_diagram(args.file)
    try:
        C = linearize(P)
    except StructureError as exc:
        _emit({"error": str(exc)}, args)
        return 1
    data = C.to_json()
    data["unital_basis"] = is_unital_basis(C)
    data["steiner"] = is_steiner(C)
    data["strong_steiner"] = is_strong_steiner(C)
    _emit(data, args)
    return 0


def cmd_compare_nu(args) -> int:
    P = load_diagram(args.file)
    report = compare_molec_nu(P, args.max_dim, bound=args.bound)
    _emit(report, args)
    return 0 if report["isomorphic"] else 1


def cmd_dot(args) -> int:
    P = load_diagram(args.file)
    text = to_dot(P, args.graph)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rdcx", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--pretty", action="store_true", help="indent JSON output")
        return p

    p = add("validate", cmd_validate, help="structure, regularity, and thinness checks")
    p.add_argument("file")

    p = add("classify", cmd_classify, help="acyclicity classification with certificates")
    p.add_argument("file")

    p = add("boundary", cmd_boundary, help="graded boundary of the whole diagram")
    p.add_argument("file")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--sign", choices=list(SIGN), default="both")
    p.add_argument("-o", "--output")

    p = add("layerings", cmd_layerings, help="all k-layerings of a molecule")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)

    p = add("orderings", cmd_orderings, help="all k-orderings of a molecule")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)

    p = add("molecule", cmd_molecule, help="recognition with witness dump")
    p.add_argument("file")

    p = add("paste", cmd_paste, help="pasting of two molecules at level k")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", "--output")

    p = add("gray", cmd_gray, help="Gray product")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("-o", "--output")

    p = add("join", cmd_join, help="join")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("-o", "--output")

    p = add("susp", cmd_susp, help="suspension")
    p.add_argument("a")
    p.add_argument("-o", "--output")

    p = add("dual", cmd_dual, help="dual at a set of dimensions (default: all)")
    p.add_argument("a")
    p.add_argument("--dims", help="comma-separated positive dimensions, e.g. 1,3")
    p.add_argument("-o", "--output")

    p = add("cells", cmd_cells, help="enumerate cells of the molecule omega-category")
    p.add_argument("file")
    p.add_argument("--max-dim", type=int, required=True)
    p.add_argument("--bound", type=int)
    p.add_argument("--shapes", action="store_true")

    p = add("chain", cmd_chain, help="linearisation with Steiner verdicts")
    p.add_argument("file")

    p = add("compare-nu", cmd_compare_nu, help="compare molecules over P with globular tables")
    p.add_argument("file")
    p.add_argument("--max-dim", type=int, required=True)
    p.add_argument("--bound", type=int)

    p = add("dot", cmd_dot, help="DOT export: hasse | flow:K | maxflow:K | extflow:K")
    p.add_argument("file")
    p.add_argument("--graph", required=True)
    p.add_argument("-o", "--output")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (FormatError, OSError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    except (StructureError, ValueError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
