"""The acyclicity hierarchy and its classifier.

Four conditions, in decreasing strength: acyclic (oriented Hasse diagram has
no directed cycle), strongly dimension-wise acyclic (all extended flow graphs
acyclic), dimension-wise acyclic (all flow graphs acyclic), and
frame-acyclic (every submolecule's maximal flow graph at its own frame
dimension is acyclic).  Every molecule of dimension at most 3 is
frame-acyclic; the classifier uses that bound but can also run the
submolecule check directly.
"""

from __future__ import annotations

from typing import Optional

from .core import OgPoset, _as_subset, oriented_hasse
from .flows import extended_flow_graph, flow_graph, frame_dim, max_flow_graph
from .molecule import _recognise, is_regular_directed_complex, submolecules


def is_acyclic(P) -> bool:
    U = _as_subset(P)
    sub, _ = U.extract()
    return oriented_hasse(sub).is_acyclic()


def is_dw_acyclic(P) -> bool:
    U = _as_subset(P)
    return all(flow_graph(U, k).is_acyclic() for k in range(-1, U.dim + 1))


def is_strongly_dw_acyclic(P) -> bool:
    U = _as_subset(P)
    return all(extended_flow_graph(U, k).is_acyclic() for k in range(-1, U.dim + 1))


def is_frame_acyclic(X, exhaustive: bool = False) -> bool:
    """Frame-acyclicity of a molecule.

    Dimension <= 3 short-circuits to True; ``exhaustive`` forces the direct
    check over all submolecules regardless of dimension.
    """
    U = _as_subset(X)
    if _recognise(U.poset, U.mask) is None:
        raise ValueError("frame-acyclicity is defined for molecules")
    if U.dim <= 3 and not exhaustive:
        return True
    for V in submolecules(U):
        if not max_flow_graph(V, frame_dim(V)).is_acyclic():
            return False
    return True


def has_frame_acyclic_molecules(P: OgPoset, search_bound: Optional[int] = None) -> str:
    """Semi-decision: 'yes', 'no', or 'unknown'.

    Positive criteria: dimension <= 3, an acyclic poset, or a dimension-wise
    acyclic regular directed complex.  Otherwise a bounded search over closed
    molecule subsets looks for a counterexample; the universal statement over
    all morphisms is not finitely checkable, hence 'unknown' when nothing is
    found.
    """
    if P.dim <= 3:
        return "yes"
    if is_acyclic(P):
        return "yes"
    if is_dw_acyclic(P) and is_regular_directed_complex(P):
        return "yes"
    bound = search_bound if search_bound is not None else P.size
    for x in P:
        cl = P.under(x)
        if len(cl) <= bound and _recognise(P, cl.mask) is not None:
            if not is_frame_acyclic(cl, exhaustive=True):
                return "no"
    return "unknown"


def _cycle_json(cycle) -> list:
    return [[x.dim, x.index] for x in cycle]


def classify(P: OgPoset) -> dict:
    """Strongest satisfied acyclicity class, with certificates and stats.

    The certificates list one concrete cycle for each failed graph; stats
    record vertex/edge counts per level.
    """
    U = _as_subset(P)
    certificates = []
    stats = {"flow": {}, "extflow": {}}

    hasse = oriented_hasse(P if isinstance(P, OgPoset) else U.extract()[0])
    hasse_cycle = hasse.find_cycle()
    acyclic = hasse_cycle is None
    if hasse_cycle is not None:
        certificates.append({"graph": "hasse", "cycle": _cycle_json(hasse_cycle)})

    strongly_dw = True
    dw = True
    for k in range(-1, U.dim + 1):
        g = extended_flow_graph(U, k)
        cyc = g.find_cycle()
        stats["extflow"][str(k)] = {
            "vertices": len(g.vertices),
            "edges": len(g.edges),
            "acyclic": cyc is None,
        }
        if cyc is not None and strongly_dw:
            strongly_dw = False
            certificates.append({"graph": "extflow", "k": k, "cycle": _cycle_json(cyc)})
        f = flow_graph(U, k)
        fcyc = f.find_cycle()
        stats["flow"][str(k)] = {
            "vertices": len(f.vertices),
            "edges": len(f.edges),
            "acyclic": fcyc is None,
        }
        if fcyc is not None and dw:
            dw = False
            certificates.append({"graph": "flow", "k": k, "cycle": _cycle_json(fcyc)})

    frame = has_frame_acyclic_molecules(P)
    if P.dim <= 3:
        frame_reason = "dim<=3"
    elif acyclic:
        frame_reason = "acyclic"
    elif dw and frame == "yes":
        frame_reason = "dimension-wise acyclic regular directed complex"
    elif frame == "no":
        frame_reason = "counterexample found"
    else:
        frame_reason = "no criterion applies"

    if acyclic:
        strongest = "acyclic"
    elif strongly_dw:
        strongest = "strongly-dw-acyclic"
    elif dw:
        strongest = "dw-acyclic"
    elif frame == "yes":
        strongest = "frame-acyclic"
    else:
        strongest = "frame-" + frame

    return {
        "class": strongest,
        "acyclic": acyclic,
        "strongly_dw": strongly_dw,
        "dw": dw,
        "frame": frame,
        "frame_reason": frame_reason,
        "certificates": certificates,
        "stats": stats,
    }
