#!/usr/bin/env python3
"""Timings for the largest witnesses: group build, clique route, exact route, float oracle."""

import argparse
import time

from commenergy.commgraph import commuting_graph, matrices
from commenergy.energies import graph_energy_report
from commenergy.groups import build, parse_descriptor
from commenergy.spectra import float_eigensolve

DEFAULT = ["psl2:k=2", "sl23", "s4", "gl2:p=5,n=1", "psl2:k=3", "hanakiV:p=3,n=2"]


def timed(fn):
    t = time.perf_counter()
    val = fn()
    return val, time.perf_counter() - t


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("groups", nargs="*", default=DEFAULT)
    ap.add_argument("--no-float", action="store_true")
    args = ap.parse_args()
    print(f"{'group':<20} {'|v|':>5} {'build':>7} {'clique':>7} {'exact':>7} {'float':>7}  E")
    for desc in args.groups:
        G, t_build = timed(lambda: build(parse_descriptor(desc)))
        graph = commuting_graph(G)
        try:
            _, t_clique = timed(lambda: graph_energy_report(graph, route="clique"))
            clique = f"{t_clique:7.2f}"
        except ValueError:
            clique = f"{'-':>7}"
        rep, t_exact = timed(lambda: graph_energy_report(graph, route="exact"))
        flt = f"{'-':>7}"
        if not args.no_float:
            A = matrices(graph)[0]
            _, t_float = timed(lambda: float_eigensolve(A))
            flt = f"{t_float:7.2f}"
        print(f"{desc:<20} {graph.vertex_count:>5} {t_build:7.2f} {clique} {t_exact:7.2f} {flt}  {rep.energy}")


if __name__ == "__main__":
    main()
