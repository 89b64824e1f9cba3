"""Explicit cointerval edge coverings for Mycielski graphs.

These constructions rebuild, as verifiable certificates, the covers that
establish the known boxicity values for Mycielski graphs of complete graphs
and the clique-cover-based upper bound for Mycielski graphs in general. Every
returned cover is verified before it leaves this module; a verification
failure here means a library bug, not a bad input, and raises hard.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import SelfCheckError
from .bounds import CliqueCover, verify_clique_cover
from .engine import CointervalCover, EdgeSet, verify_cointerval_cover
from .generators import MycielskiLayout, complete_graph, mycielski
from .graphs import Graph, complement, focal_vertices


def _induced_edges(host: Graph, verts: set[int]) -> set[tuple[int, int]]:
    """Host edges with both endpoints in ``verts``."""
    return {
        (u, v)
        for u, v in combinations(sorted(verts), 2)
        if host.adj[u] >> v & 1
    }


def _apex_cover_part(
    host: Graph, layout: MycielskiLayout, base_vertices: list[int]
) -> EdgeSet:
    """The one part containing the apex: induced on the apex, the second copy
    of the last listed base vertex, and the first copies of all of them."""
    verts = {layout.apex, layout.copy(2, base_vertices[-1])}
    verts |= {layout.copy(1, v) for v in base_vertices}
    return EdgeSet.of(host.n, _induced_edges(host, verts))


def _pair_cover_part(
    host: Graph,
    layout: MycielskiLayout,
    first_pair: tuple[int, int],
    second_copy_of: list[int],
) -> EdgeSet:
    """A part induced on two first-copy vertices plus a block of second
    copies."""
    verts = {layout.copy(1, first_pair[0]), layout.copy(1, first_pair[1])}
    verts |= {layout.copy(2, v) for v in second_copy_of}
    return EdgeSet.of(host.n, _induced_edges(host, verts))


def _matching_pair_parts(
    host: Graph,
    layout: MycielskiLayout,
    base_vertices: list[int],
) -> list[EdgeSet]:
    """The pair parts over consecutive base vertices (1st & 2nd, 3rd & 4th,
    ...), plus a wrap-around part over the last two when the count is even."""
    l = len(base_vertices)
    parts = []
    for i in range(1, (l + 1) // 2):
        pair = (base_vertices[2 * i - 2], base_vertices[2 * i - 1])
        parts.append(_pair_cover_part(host, layout, pair, base_vertices))
    if l >= 2 and l % 2 == 0:
        pair = (base_vertices[l - 2], base_vertices[l - 1])
        parts.append(_pair_cover_part(host, layout, pair, base_vertices))
    return parts


def complete_mycielski_cover(n: int) -> CointervalCover:
    """Cointerval edge covering of the complement of the Mycielski graph of
    the complete graph on n vertices.

    Uses half the vertex count rounded up many parts when n is odd and one
    more when n is even, matching the known exact boxicity.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    myc, layout = mycielski(complete_graph(n), 2)
    host = complement(myc)
    base = list(range(n))
    parts = [_apex_cover_part(host, layout, base)]
    parts += _matching_pair_parts(host, layout, base)
    cover = CointervalCover(host, tuple(parts))
    verdict = verify_cointerval_cover(myc, cover)
    if not verdict:
        raise SelfCheckError(f"complete-graph cover failed to verify: {verdict.reason}")
    return cover


@dataclass(frozen=True)
class ConstructionPlan:
    """Ingredients for the clique-cover-based Mycielski cover: the base graph,
    the Mycielski vertex layout, an edge clique cover of the complement of the
    base, and the base's focal vertices in ascending id order.

    Every base vertex lies in a cover clique or is focal (focal vertices are
    exactly the isolated vertices of the complement).
    """

    base: Graph
    layout: MycielskiLayout
    clique_cover: CliqueCover
    focal: tuple[int, ...]


def construction_plan(g: Graph, cover: CliqueCover) -> ConstructionPlan:
    verdict = verify_clique_cover(complement(g), cover)
    if not verdict:
        raise ValueError(f"clique cover does not verify: {verdict.reason}")
    focal = tuple(sorted(focal_vertices(g)))
    placed = set(focal)
    for clique in cover.cliques:
        placed |= set(clique)
    if placed != set(range(g.n)):
        raise SelfCheckError(
            "cover cliques plus focal vertices do not exhaust the vertex set"
        )
    _, layout = mycielski(g, 2)
    return ConstructionPlan(g, layout, cover, focal)


def mycielski_cover(g: Graph, cover: CliqueCover) -> CointervalCover:
    """Cointerval edge covering of the complement of the Mycielski graph of g,
    built from an edge clique cover of the complement of g.

    One part per cover clique (the clique's first copies joined with all
    second copies and the apex, stripped of the cross and outside-pair edges),
    plus the matching-style parts over the focal vertices. The part count is
    at most the cover size plus half the focal count rounded up, plus one more
    only when the focal count is even and positive.
    """
    plan = construction_plan(g, cover)
    layout = plan.layout
    myc, _ = mycielski(g, 2)
    host = complement(myc)
    everyone = set(range(g.n))

    parts = []
    for clique in plan.clique_cover.cliques:
        inside = set(clique)
        outside = everyone - inside
        verts = {layout.copy(1, v) for v in inside}
        verts |= {layout.copy(2, v) for v in everyone}
        verts.add(layout.apex)
        edges = _induced_edges(host, verts)
        dropped = {
            _norm(layout.copy(2, x), layout.copy(2, y))
            for x in outside
            for y in outside
            if x < y
        }
        dropped |= {
            _norm(layout.copy(1, x), layout.copy(2, y))
            for x in inside
            for y in outside
        }
        parts.append(EdgeSet.of(host.n, edges - dropped))

    focal = list(plan.focal)
    if focal:
        parts.append(_apex_cover_part(host, layout, focal))
        parts += _matching_pair_parts(host, layout, focal)

    built = CointervalCover(host, tuple(parts))
    verdict = verify_cointerval_cover(myc, built)
    if not verdict:
        raise SelfCheckError(
            f"clique-cover-based Mycielski cover failed to verify: {verdict.reason}"
        )
    return built


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)
