"""Interval and cointerval graph recognition with explicit representations.

Recognition follows the clique-ordering characterization: a graph is interval
iff its maximal cliques admit a linear order in which the cliques containing
any fixed vertex are consecutive. The witness order doubles as the interval
representation (vertex -> [first clique index, last clique index]).

``chordal_at_free_oracle`` is a deliberately independent second implementation
(perfect elimination ordering + brute-force asteroidal-triple search) used to
cross-check the recognizer in tests; it shares no code with the clique route.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError, NotIntervalError
from .graphs import Graph, complement, components_from_masks

#: Cap on the number of maximal cliques enumerated per call.
MAX_CLIQUES = 4096


def _bit_list(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _maximal_cliques_masks(adj: tuple[int, ...], within: int, cap: int) -> list[int]:
    """Bron-Kerbosch with pivoting, restricted to the vertex mask ``within``."""
    cliques: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            cliques.append(r)
            if len(cliques) > cap:
                raise CapacityError(
                    f"maximal clique count exceeds cap {cap} (MAX_CLIQUES)"
                )
            return
        px = p | x
        best_v = -1
        best_cover = -1
        scan = px
        while scan:
            low = scan & -scan
            scan ^= low
            v = low.bit_length() - 1
            cover = (p & adj[v]).bit_count()
            if cover > best_cover:
                best_cover = cover
                best_v = v
        cand = p & ~adj[best_v]
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            expand(r | low, p & adj[v], x & adj[v])
            p ^= low
            x |= low

    expand(0, within, 0)
    return cliques


def maximal_cliques(g: Graph, cap: int = MAX_CLIQUES) -> list[tuple[int, ...]]:
    """All maximal cliques, each sorted internally, listed lexicographically."""
    masks = _maximal_cliques_masks(g.adj, (1 << g.n) - 1, cap)
    return sorted(tuple(_bit_list(m)) for m in masks)


def _consecutive_order(clique_masks: list[int]) -> list[int] | None:
    """First clique order (by index, lexicographic exploration) in which every
    vertex's cliques are consecutive, or None if no such order exists."""
    k = len(clique_masks)
    if k <= 1:
        return list(range(k))
    order: list[int] = []

    def extend(used: int, seen: int, prev: int) -> bool:
        if len(order) == k:
            return True
        for i in range(k):
            if used >> i & 1:
                continue
            c = clique_masks[i]
            if c & seen & ~prev:
                continue  # would reopen a vertex whose clique run already closed
            order.append(i)
            if extend(used | 1 << i, seen | c, c):
                return True
            order.pop()
        return False

    return order if extend(0, 0, 0) else None


def _component_clique_orders(
    adj: tuple[int, ...], n: int, cap: int
) -> list[list[int]] | None:
    """Ordered maximal-clique masks per component (components by smallest
    vertex), or None when some component has no consecutive arrangement."""
    result = []
    for comp in components_from_masks(n, adj):
        cliques = _maximal_cliques_masks(adj, comp, cap)
        # Interval graphs are chordal, and chordal graphs have at most as many
        # maximal cliques as vertices: more cliques means a safe early reject.
        if len(cliques) > comp.bit_count():
            return None
        cliques.sort(key=_bit_list)
        order = _consecutive_order(cliques)
        if order is None:
            return None
        result.append([cliques[i] for i in order])
    return result


def _is_interval_masks(n: int, adj: tuple[int, ...], cap: int = MAX_CLIQUES) -> bool:
    return _component_clique_orders(adj, n, cap) is not None


@dataclass(frozen=True)
class RecognitionResult:
    """Outcome of interval recognition.

    On success ``clique_order`` is a witness: a linear order of all maximal
    cliques satisfying the consecutiveness condition. On failure ``reason``
    carries a short note.
    """

    interval: bool
    clique_order: tuple[tuple[int, ...], ...] | None = None
    reason: str | None = None

    @property
    def verdict(self) -> str:
        return "interval" if self.interval else "not-interval"


def is_interval(g: Graph, cap: int = MAX_CLIQUES) -> RecognitionResult:
    """Decide intervality; deterministic, certificate-producing.

    The witness is assembled per connected component (components in order of
    smallest vertex, each component's clique permutations explored in
    lexicographic order, first valid one kept).
    """
    ordered = _component_clique_orders(g.adj, g.n, cap)
    if ordered is None:
        return RecognitionResult(False, reason="no consecutive clique ordering")
    witness = tuple(
        tuple(_bit_list(m)) for comp_order in ordered for m in comp_order
    )
    return RecognitionResult(True, clique_order=witness)


@dataclass(frozen=True)
class IntervalRep:
    """Closed integer intervals, one per vertex; their intersection graph is
    the represented graph."""

    intervals: tuple[tuple[int, int], ...]

    def to_text(self) -> str:
        return "".join(f"{v} {lo} {hi}\n" for v, (lo, hi) in enumerate(self.intervals))


def interval_representation(g: Graph, cap: int = MAX_CLIQUES) -> IntervalRep:
    """Interval representation from the witness clique order.

    Components are laid out left to right on disjoint integer ranges with a
    one-slot gap between consecutive components; within a component, vertex v
    maps to [first index, last index] of the cliques containing it.
    """
    ordered = _component_clique_orders(g.adj, g.n, cap)
    if ordered is None:
        raise NotIntervalError("graph is not interval, no representation exists")
    lo = [-1] * g.n
    hi = [-1] * g.n
    offset = 0
    for comp_order in ordered:
        for idx, cmask in enumerate(comp_order):
            for v in _bit_list(cmask):
                if lo[v] < 0:
                    lo[v] = offset + idx
                hi[v] = offset + idx
        offset += len(comp_order) + 1
    return IntervalRep(tuple(zip(lo, hi)))


def is_cointerval(g: Graph, cap: int = MAX_CLIQUES) -> bool:
    """True iff the complement is an interval graph."""
    return is_interval(complement(g), cap).interval


def chordal_at_free_oracle(g: Graph) -> bool:
    """Independent recognizer: chordal (via maximum-cardinality search) and
    free of asteroidal triples (brute force over vertex triples)."""
    return _is_chordal(g) and not _has_asteroidal_triple(g)


def _is_chordal(g: Graph) -> bool:
    n = g.n
    weight = [0] * n
    numbered = 0
    peo_pos = [0] * n  # elimination position; higher = eliminated later
    for step in range(n, 0, -1):
        v = max(
            (u for u in range(n) if not numbered >> u & 1),
            key=lambda u: (weight[u], -u),
        )
        numbered |= 1 << v
        peo_pos[v] = step
        row = g.adj[v] & ~numbered
        for u in _bit_list(row):
            weight[u] += 1
    # Verify the elimination property: the later-eliminated neighbors of each
    # vertex must form a clique, which reduces to checking them all against
    # the one eliminated soonest.
    for v in range(n):
        later = [u for u in _bit_list(g.adj[v]) if peo_pos[u] > peo_pos[v]]
        if not later:
            continue
        u = min(later, key=lambda w: peo_pos[w])
        for w in later:
            if w != u and not g.adj[u] >> w & 1:
                return False
    return True


def _reachable_avoiding(g: Graph, src: int, dst: int, avoid: int) -> bool:
    if (avoid >> src & 1) or (avoid >> dst & 1):
        return False
    seen = 1 << src
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bit_list(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen & ~avoid
        if nxt >> dst & 1:
            return True
        seen |= nxt
        frontier = nxt
    return False


def _has_asteroidal_triple(g: Graph) -> bool:
    n = g.n
    for a in range(n):
        for b in range(a + 1, n):
            if g.adj[a] >> b & 1:
                continue
            for c in range(b + 1, n):
                if (g.adj[a] >> c | g.adj[b] >> c) & 1:
                    continue
                if (
                    _reachable_avoiding(g, a, b, g.adj[c] | 1 << c)
                    and _reachable_avoiding(g, a, c, g.adj[b] | 1 << b)
                    and _reachable_avoiding(g, b, c, g.adj[a] | 1 << a)
                ):
                    return True
    return False
