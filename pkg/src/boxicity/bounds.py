"""Exact auxiliary solvers and the boxicity bound calculators.

The two exact solvers (minimum edge clique cover, chromatic number) are
branch-and-bound routines meant for desk-scale graphs; every calculator below
works from the graph itself (focal-vertex counts are always recomputed, never
taken from a family descriptor).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import CapacityError, SelfCheckError
from .generators import mycielski
from .graphs import Graph, complement, focal_vertices, graph6_encode, is_clique
from .engine import (
    DEFAULT_COMPLEMENT_EDGE_CAP,
    Verdict,
    _minimum_cover,
    exact_boxicity,
    matching_lower_bound,
)
from .intervals import maximal_cliques

#: Edge cap for the exact edge-clique-cover solver.
DEFAULT_CLIQUE_COVER_EDGE_CAP = 40

#: Vertex cap for the exact chromatic number solver.
DEFAULT_CHROMATIC_MAX_N = 16


@dataclass(frozen=True)
class CliqueCover:
    """A family of cliques of ``host`` covering all of its edges."""

    host: Graph
    cliques: tuple[tuple[int, ...], ...]


def verify_clique_cover(host: Graph, cover: CliqueCover) -> Verdict:
    if cover.host != host:
        return Verdict(False, "cover host differs from the given graph")
    for i, clique in enumerate(cover.cliques):
        if not is_clique(host, clique):
            return Verdict(False, f"set {i} is not a clique")
    covered = set()
    for clique in cover.cliques:
        cs = sorted(clique)
        for a in range(len(cs)):
            for b in range(a + 1, len(cs)):
                covered.add((cs[a], cs[b]))
    for e in host.edges():
        if e not in covered:
            return Verdict(False, f"edge {e[0]}-{e[1]} is covered by no clique")
    return Verdict(True)


def edge_clique_cover(
    g: Graph, max_edges: int = DEFAULT_CLIQUE_COVER_EDGE_CAP
) -> tuple[int, CliqueCover]:
    """Minimum number of cliques covering all edges, with a witness cover.

    Any clique extends to a maximal one covering at least the same edges, so
    the exact search is a minimum set cover over the maximal cliques. Edgeless
    graphs have cover number 0.
    """
    edges = g.edges()
    if len(edges) > max_edges:
        raise CapacityError(
            f"graph has {len(edges)} edges, over the edge-clique-cover cap "
            f"{max_edges}"
        )
    if not edges:
        return 0, CliqueCover(g, ())
    pos = {e: i for i, e in enumerate(edges)}
    cliques = maximal_cliques(g)
    sets = []
    for clique in cliques:
        mask = 0
        for a in range(len(clique)):
            for b in range(a + 1, len(clique)):
                mask |= 1 << pos[(clique[a], clique[b])]
        sets.append(mask)
    chosen, _ = _minimum_cover((1 << len(edges)) - 1, sets)
    cover = CliqueCover(g, tuple(sorted(cliques[i] for i in chosen)))
    return len(chosen), cover


def chromatic_number(g: Graph, max_n: int = DEFAULT_CHROMATIC_MAX_N) -> int:
    """Exact chromatic number by iterative-deepening k-coloring.

    Vertices are branched in descending degree order; a new color may only be
    opened by the first vertex to use it, which kills color-permutation
    symmetry.
    """
    if g.n > max_n:
        raise CapacityError(
            f"graph has {g.n} vertices, over the chromatic-number cap {max_n}"
        )
    if g.num_edges() == 0:
        return 1
    order = sorted(range(g.n), key=lambda v: (-g.adj[v].bit_count(), v))

    def colorable(k: int) -> bool:
        colors = [-1] * g.n

        def assign(i: int, used: int) -> bool:
            if i == g.n:
                return True
            v = order[i]
            forbidden = 0
            row = g.adj[v]
            for u in range(g.n):
                if row >> u & 1 and colors[u] >= 0:
                    forbidden |= 1 << colors[u]
            for c in range(min(used + 1, k)):
                if forbidden >> c & 1:
                    continue
                colors[v] = c
                if assign(i + 1, max(used, c + 1)):
                    return True
                colors[v] = -1
            return False

        return assign(0, 0)

    k = 2
    while not colorable(k):
        k += 1
    return k


def mycielski_kn_boxicity(n: int) -> int:
    """Boxicity of the Mycielski graph of the complete graph on n vertices.

    Half of n rounded up, plus one more when n is even. The n = 1 graph
    degenerates to an edge plus an isolated vertex with boxicity 1.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n == 1:
        return 1
    return (n + 1) // 2 + (1 if n % 2 == 0 else 0)


def _focal_count(g: Graph) -> int:
    """Focal vertices of g, with the complement-side reading asserted equal."""
    focal = focal_vertices(g)
    comp_isolated = {v for v in range(g.n) if complement(g).adj[v] == 0}
    if focal != comp_isolated:
        raise SelfCheckError("focal vertices differ from complement-isolated ones")
    return len(focal)


def mycielski_lower_bound(
    g: Graph,
    r: int = 2,
    max_complement_edges: int = DEFAULT_COMPLEMENT_EDGE_CAP,
) -> int:
    """Lower bound for the boxicity of the generalized Mycielski graph of g:
    boxicity of g plus half the focal-vertex count rounded up. Valid for
    every r >= 2."""
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    box = exact_boxicity(g, max_complement_edges).value
    return box + (_focal_count(g) + 1) // 2


def even_focal_surcharge(l: int) -> int:
    """The +1 term of the Mycielski upper bound; it applies unless the focal
    count is odd or zero. Shared by the calculator and the survey checks so
    the condition cannot drift."""
    return 0 if (l == 0 or l % 2 == 1) else 1


def mycielski_upper_bound(
    g: Graph, max_cover_edges: int = DEFAULT_CLIQUE_COVER_EDGE_CAP
) -> int:
    """Upper bound for the boxicity of the Mycielski graph of g: the edge
    clique cover number of the complement, plus half the focal-vertex count
    rounded up, plus one more only when that count is even and positive."""
    theta, _ = edge_clique_cover(complement(g), max_cover_edges)
    l = _focal_count(g)
    return theta + (l + 1) // 2 + even_focal_surcharge(l)


@dataclass(frozen=True)
class MultipartiteMycielskiBounds:
    lower: int
    upper: int
    exact: int | None


def multipartite_mycielski_bounds(parts: Iterable[int]) -> MultipartiteMycielskiBounds:
    """Closed-form bounds for the boxicity of the Mycielski graph of a
    complete multipartite graph; the value is exact when the number of
    singleton parts is odd or zero."""
    sizes = list(parts)
    if not sizes:
        raise ValueError("need at least one part")
    for p in sizes:
        if p < 1:
            raise ValueError(f"part sizes must be positive, got {p}")
    k = len(sizes)
    l = sum(1 for p in sizes if p == 1)
    lower = (2 * k - l + 1) // 2
    upper = min(k, lower + 1)
    exact = lower if (l == 0 or l % 2 == 1) else None
    return MultipartiteMycielskiBounds(lower, upper, exact)


@dataclass(frozen=True)
class ChromaticBoxicityCheck:
    """Instantiation of the boxicity-chromatic inequality on one graph:
    writing boxicity as n/2 - s with s >= 0, the chromatic number must be at
    least n/(2s+2)."""

    ok: bool
    n: int
    box: int
    chi: int
    s: Fraction
    required_chi: Fraction


def chromatic_boxicity_check(
    g: Graph,
    max_complement_edges: int = DEFAULT_COMPLEMENT_EDGE_CAP,
    max_chromatic_n: int = DEFAULT_CHROMATIC_MAX_N,
) -> ChromaticBoxicityCheck:
    box = exact_boxicity(g, max_complement_edges).value
    chi = chromatic_number(g, max_chromatic_n)
    s = Fraction(g.n, 2) - box
    if s < 0:
        raise SelfCheckError(
            f"boxicity {box} exceeds n/2 for n={g.n}; the engine is broken"
        )
    required = Fraction(g.n) / (2 * s + 2)
    return ChromaticBoxicityCheck(chi >= required, g.n, box, chi, s, required)


@dataclass(frozen=True)
class BoundsReport:
    """Bounds on the boxicity of the Mycielski graph of the reported graph.

    ``lower`` and ``upper`` hold (value, source-tag) pairs; ``exact`` is only
    filled when an exact engine run was requested and feasible.
    """

    graph6: str
    lower: tuple[tuple[int, str], ...]
    upper: tuple[tuple[int, str], ...]
    exact: int | None

    def __post_init__(self) -> None:
        if self.lower and self.upper:
            lo = max(v for v, _ in self.lower)
            hi = min(v for v, _ in self.upper)
            if lo > hi:
                raise SelfCheckError(
                    f"bounds crossed for {self.graph6}: max lower {lo} > min upper {hi}"
                )
            if self.exact is not None and not lo <= self.exact <= hi:
                raise SelfCheckError(
                    f"exact value {self.exact} outside [{lo}, {hi}] for {self.graph6}"
                )


def compute_bounds_report(
    g: Graph,
    r: int = 2,
    include_exact: bool = False,
    max_complement_edges: int = DEFAULT_COMPLEMENT_EDGE_CAP,
) -> BoundsReport:
    """All applicable bounds on the boxicity of the r-copy Mycielski graph
    of g, cross-validated (crossed bounds raise, signalling a bug)."""
    myc, _ = mycielski(g, r)
    lower = [
        (mycielski_lower_bound(g, r, max_complement_edges), "cor3.6"),
        (matching_lower_bound(myc), "lemma3.3"),
    ]
    upper = []
    if r == 2:
        upper.append((mycielski_upper_bound(g), "thm4.2"))
    upper.append((myc.n // 2, "roberts-floor-n/2"))
    chi_myc = None
    if r == 2:
        chi_myc = chromatic_number(g) + 1
    elif myc.n <= DEFAULT_CHROMATIC_MAX_N:
        chi_myc = chromatic_number(myc)
    if chi_myc is not None:
        # box = n/2 - s and chi >= n/(2s+2) rearrange to
        # box <= n/2 - n/(2 chi) + 1.
        bound = Fraction(myc.n, 2) - Fraction(myc.n, 2 * chi_myc) + 1
        upper.append((int(bound), "thm1.1"))
    exact = None
    if include_exact:
        exact = exact_boxicity(myc, max_complement_edges).value
    return BoundsReport(graph6_encode(g), tuple(lower), tuple(upper), exact)
