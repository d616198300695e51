"""Energy, Laplacian energy and signless Laplacian energy of commuting graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .commgraph import CommutingGraph, clique_decomposition, commuting_graph, matrices
from .groups import FiniteGroup
from .spectra import (
    ExactSpectrum,
    IsolatedRoot,
    clique_union_spectrum,
    exact_spectrum,
    frac_str,
)

DEFAULT_TOLERANCE = 1e-9


def as_fraction(x) -> Fraction:
    """Exact rational from int, Fraction, float or a decimal string."""
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


@dataclass(frozen=True)
class ExactOrInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty interval")

    @classmethod
    def exact_value(cls, x) -> "ExactOrInterval":
        x = Fraction(x)
        return cls(x, x)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Fraction:
        if not self.is_exact:
            raise ValueError("value is only known up to an interval")
        return self.lo

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def encloses(self, other: "ExactOrInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def disjoint(self, other: "ExactOrInterval") -> bool:
        return self.hi < other.lo or other.hi < self.lo

    def __float__(self) -> float:
        return float(self.midpoint)

    def __str__(self) -> str:
        if self.is_exact:
            return frac_str(self.lo)
        return f"{float(self.midpoint):.12f} ± {float(self.width / 2):.1e}"

    def csv(self) -> str:
        return frac_str(self.lo) if self.is_exact else f"{frac_str(self.lo)}..{frac_str(self.hi)}"

    def to_json_obj(self) -> dict:
        if self.is_exact:
            return {"exact": frac_str(self.lo)}
        return {"lo": frac_str(self.lo), "hi": frac_str(self.hi)}


def mean_degree(graph: CommutingGraph) -> Fraction:
    if graph.vertex_count == 0:
        raise ValueError("empty graph has no mean degree")
    return Fraction(2 * graph.edge_count, graph.vertex_count)


def _abs_sum(S: ExactSpectrum, shift: Fraction, tolerance) -> ExactOrInterval:
    """Enclosure of sum(mult * |value - shift|)."""
    irr = sum(m for v, m in S.entries if isinstance(v, IsolatedRoot))
    w = as_fraction(tolerance) / irr if irr else None
    lo = hi = Fraction(0)
    for v, m in S.entries:
        if isinstance(v, int):
            d = abs(v - shift)
            lo += m * d
            hi += m * d
            continue
        r = v.refine(w).excluding(shift)
        a, b = abs(r.lo - shift), abs(r.hi - shift)
        lo += m * min(a, b)
        hi += m * max(a, b)
    return ExactOrInterval(lo, hi)


def _check_kind(S: ExactSpectrum, kind: str) -> None:
    if S.kind != kind:
        raise ValueError(f"expected a {kind} spectrum, got {S.kind}")


def energy(S: ExactSpectrum, tolerance=DEFAULT_TOLERANCE) -> ExactOrInterval:
    _check_kind(S, "adjacency")
    return _abs_sum(S, Fraction(0), tolerance)


def laplacian_energy(S: ExactSpectrum, dbar, tolerance=DEFAULT_TOLERANCE) -> ExactOrInterval:
    _check_kind(S, "laplacian")
    return _abs_sum(S, Fraction(dbar), tolerance)


def signless_energy(S: ExactSpectrum, dbar, tolerance=DEFAULT_TOLERANCE) -> ExactOrInterval:
    _check_kind(S, "signless")
    return _abs_sum(S, Fraction(dbar), tolerance)


@dataclass(frozen=True)
class EnergyReport:
    energy: ExactOrInterval
    laplacian_energy: ExactOrInterval
    signless_energy: ExactOrInterval
    mean_degree: Fraction
    vertices: int
    edges: int
    route: str = "exact"
    spectra: Optional[tuple[ExactSpectrum, ExactSpectrum, ExactSpectrum]] = field(default=None, repr=False, compare=False)

    def triple(self) -> tuple[ExactOrInterval, ExactOrInterval, ExactOrInterval]:
        return self.energy, self.laplacian_energy, self.signless_energy

    def to_json_obj(self) -> dict:
        return {
            "E": self.energy.to_json_obj(),
            "LE": self.laplacian_energy.to_json_obj(),
            "LEplus": self.signless_energy.to_json_obj(),
            "meanDegree": frac_str(self.mean_degree),
            "vertices": self.vertices,
            "edges": self.edges,
        }


def report_from_spectra(graph: CommutingGraph, spectra, tolerance=DEFAULT_TOLERANCE, route: str = "exact") -> EnergyReport:
    SA, SL, SQ = spectra
    d = mean_degree(graph)
    return EnergyReport(
        energy(SA, tolerance),
        laplacian_energy(SL, d, tolerance),
        signless_energy(SQ, d, tolerance),
        d,
        graph.vertex_count,
        graph.edge_count,
        route,
        (SA, SL, SQ),
    )


def graph_energy_report(graph: CommutingGraph, tolerance=DEFAULT_TOLERANCE, route: str = "auto") -> EnergyReport:
    """route: 'auto' (clique closed form when available), 'clique' or 'exact'."""
    if route not in ("auto", "clique", "exact"):
        raise ValueError(f"unknown route {route!r}")
    if route != "exact":
        dec = clique_decomposition(graph)
        if dec.present:
            spectra = tuple(clique_union_spectrum(dec.sizes, k) for k in ("A", "L", "Q"))
            return report_from_spectra(graph, spectra, tolerance, "clique")
        if route == "clique":
            raise ValueError("graph is not a disjoint union of cliques")
    A, _, L, Q = matrices(graph)
    spectra = tuple(exact_spectrum(M) for M in (A, L, Q))
    return report_from_spectra(graph, spectra, tolerance, "exact")


def energy_report(G: FiniteGroup, tolerance=DEFAULT_TOLERANCE, route: str = "auto") -> EnergyReport:
    return graph_energy_report(commuting_graph(G), tolerance, route)
