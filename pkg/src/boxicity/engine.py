"""Exact boxicity via minimum cointerval edge coverings of the complement.

The boxicity of g equals the minimum number of cointerval spanning subgraphs
of the complement of g whose edge sets jointly cover every complement edge;
the minimizing family is a checkable certificate, and reading each part's
complement as an interval representation turns the certificate into boxes
whose intersection graph is g.

Search architecture
-------------------
``maximal_cointerval_family`` scans the subsets of the host's edge set.
Cointervality is not monotone under adding or removing edges, so partial
subsets cannot be pruned on cointervality itself; instead the scan walks an
include-first binary decision tree over edges and prunes on two exact grounds:

* a pair of chosen vertex-disjoint edges whose potential cross edges are all
  decided out can never be repaired, and every completion then contains an
  induced pair of independent edges, which no cointerval graph contains;
* a branch whose remaining potential edge set is contained in an
  already-found maximal subset cannot contribute a new maximal subset.

Include-first order guarantees every superset of a subset is visited first,
so a surviving cointerval leaf is inclusion-maximal. The result is exactly
the brute-force family (asserted against a plain subset scan in the tests),
just reached faster. Minimum set cover over the family is branch and bound:
branch on the uncovered edge lying in the fewest family members, bound by the
ceiling of uncovered count over best single-set coverage. Family order,
branch order and tie-breaks are lexicographic on edge lists, and the returned
certificate is the first optimal cover in that order.

Certificate text format (bit-exact): line 1 ``host <graph6>``, line 2
``parts <k>``, then k lines each holding a space-separated sorted list of
edges ``u-v`` with u < v, parts sorted lexicographically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapacityError, SelfCheckError
from .graphs import (
    Graph,
    complement,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    subgraph_distance,
)
from .intervals import _bit_list, _is_interval_masks, interval_representation

#: Default cap on complement edge count for the exact engine
#: (CLI flag ``--max-complement-edges``).
DEFAULT_COMPLEMENT_EDGE_CAP = 24

#: Largest vertex count for which the matching lower bound search is exact;
#: above it a greedy extension is used (still a valid lower bound).
MATCHING_EXACT_MAX_N = 14


@dataclass(frozen=True)
class EdgeSet:
    """A set of edges of a host graph, denoting the spanning subgraph
    (all host vertices, these edges)."""

    host_n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if not (0 <= u < v < self.host_n):
                raise ValueError(f"edge ({u},{v}) invalid for host_n={self.host_n}")

    @classmethod
    def of(cls, host_n: int, pairs: Iterable[tuple[int, int]]) -> EdgeSet:
        norm = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        return cls(host_n, frozenset(norm))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def _part_key(part: EdgeSet) -> list[tuple[int, int]]:
    return part.sorted_edges()


@dataclass(frozen=True)
class CointervalCover:
    """A family of cointerval spanning subgraphs of ``host`` covering its
    edges; host is the complement of the graph whose boxicity is certified.

    Parts are normalized to lexicographic order of their edge lists.
    """

    host: Graph
    parts: tuple[EdgeSet, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(sorted(self.parts, key=_part_key)))


@dataclass(frozen=True)
class BoxRep:
    """Per-vertex boxes: ``dimension`` closed integer intervals per vertex."""

    dimension: int
    boxes: tuple[tuple[tuple[int, int], ...], ...]


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class BoxicityResult:
    value: int
    certificate: CointervalCover
    box_rep: BoxRep
    nodes_explored: int
    family_size: int


def _spanning_complement_masks(host_n: int, edges: Iterable[tuple[int, int]]):
    """Adjacency masks of the complement of the spanning subgraph (V, edges)."""
    rows = [0] * host_n
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    full = (1 << host_n) - 1
    return tuple(full & ~rows[v] & ~(1 << v) for v in range(host_n))


def _is_cointerval_edge_list(host_n: int, pairs: Sequence[tuple[int, int]]) -> bool:
    """Cointervality of the spanning subgraph on the listed edges.

    Isolated vertices become focal in the complement and never affect
    intervality, so the test runs on the support vertices only.
    """
    sup = 0
    for u, v in pairs:
        sup |= (1 << u) | (1 << v)
    t = sup.bit_count()
    if t <= 3:
        return True
    verts = _bit_list(sup)
    pos = {v: i for i, v in enumerate(verts)}
    rows = [0] * t
    for u, v in pairs:
        rows[pos[u]] |= 1 << pos[v]
        rows[pos[v]] |= 1 << pos[u]
    full = (1 << t) - 1
    comp = tuple(full & ~rows[i] & ~(1 << i) for i in range(t))
    return _is_interval_masks(t, comp)


def _maximal_cointerval_masks(
    host_n: int, edges: list[tuple[int, int]]
) -> tuple[list[int], int]:
    """All inclusion-maximal cointerval subsets of ``edges``.

    Returns bitmasks indexed by position in ``edges`` plus the node count of
    the scan. See the module docstring for the pruning argument.
    """
    m = len(edges)
    # Most-conflicted edges first: deciding them early lets both prunes bite.
    disjoint_count = [0] * m
    for i in range(m):
        a, b = edges[i]
        for j in range(i + 1, m):
            c, d = edges[j]
            if a != c and a != d and b != c and b != d:
                disjoint_count[i] += 1
                disjoint_count[j] += 1
    perm = sorted(range(m), key=lambda i: (-disjoint_count[i], edges[i]))
    internal = [edges[i] for i in perm]
    slot = {e: p for p, e in enumerate(internal)}

    disj = [0] * m
    cross_req: dict[tuple[int, int], int] = {}
    for i in range(m):
        a, b = internal[i]
        for j in range(i + 1, m):
            c, d = internal[j]
            if a == c or a == d or b == c or b == d:
                continue
            disj[i] |= 1 << j
            disj[j] |= 1 << i
            mask = 0
            for x, y in ((a, c), (a, d), (b, c), (b, d)):
                p = slot.get((x, y) if x < y else (y, x))
                if p is not None:
                    mask |= 1 << p
            cross_req[(i, j)] = mask

    suffix = [((1 << m) - 1) >> i << i for i in range(m)] + [0]
    found: list[int] = []  # maximal masks, kept sorted by popcount descending
    found_sizes: list[int] = []
    nodes = 0

    def covered(mask: int) -> bool:
        size = mask.bit_count()
        for fsize, f in zip(found_sizes, found):
            if fsize < size:
                return False
            if mask & ~f == 0:
                return True
        return False

    def rec(idx: int, chosen: int, clauses: list[int]) -> None:
        nonlocal nodes
        nodes += 1
        if covered(chosen | suffix[idx]):
            return
        if idx == m:
            # Alive clauses cannot reach a leaf: the branch filters drop them
            # as satisfied or prune the branch as unrepairable.
            pairs = [internal[p] for p in _bit_list(chosen)]
            if _is_cointerval_edge_list(host_n, pairs):
                size = chosen.bit_count()
                at = 0
                while at < len(found) and found_sizes[at] >= size:
                    at += 1
                found.insert(at, chosen)
                found_sizes.insert(at, size)
            return
        bit = 1 << idx
        future = suffix[idx + 1]

        new_chosen = chosen | bit
        ok = True
        new_clauses = []
        for c in clauses:
            if c & new_chosen:
                continue
            if c & future == 0:
                ok = False
                break
            new_clauses.append(c)
        if ok:
            partners = disj[idx] & chosen
            while partners:
                low = partners & -partners
                partners ^= low
                j = low.bit_length() - 1
                c = cross_req[(j, idx)]
                if c & new_chosen:
                    continue
                if c & future == 0:
                    ok = False
                    break
                new_clauses.append(c)
            if ok:
                rec(idx + 1, new_chosen, new_clauses)

        for c in clauses:
            if c & future == 0:
                return  # losing this edge leaves an unrepairable constraint
        rec(idx + 1, chosen, clauses)

    rec(0, 0, [])

    lex_pos = {e: i for i, e in enumerate(edges)}
    out = []
    for mask in found:
        lex_mask = 0
        for p in _bit_list(mask):
            lex_mask |= 1 << lex_pos[internal[p]]
        out.append(lex_mask)
    return out, nodes


def _maximal_cointerval_family_masks(host: Graph, cap: int) -> tuple[list[int], int]:
    edges = host.edges()
    if len(edges) > cap:
        raise CapacityError(
            f"host has {len(edges)} edges, over the cap {cap} "
            f"(--max-complement-edges)"
        )
    if not edges:
        return [0], 0
    return _maximal_cointerval_masks(host.n, edges)


def maximal_cointerval_family(
    host: Graph, cap: int = DEFAULT_COMPLEMENT_EDGE_CAP
) -> list[EdgeSet]:
    """All inclusion-maximal cointerval edge subsets of the host graph,
    ordered lexicographically by sorted edge list."""
    family, _ = _maximal_cointerval_family_masks(host, cap)
    edges = host.edges()
    out = [EdgeSet.of(host.n, (edges[p] for p in _bit_list(mask))) for mask in family]
    out.sort(key=_part_key)
    return out


def _minimum_cover(universe: int, sets: list[int]) -> tuple[list[int], int]:
    """Exact minimum cover of the universe bits by the given set masks.

    Returns chosen set indices (first optimal cover in deterministic branch
    order) and the node count. Branches on the uncovered element contained in
    the fewest sets, sets tried in list order.
    """
    if universe == 0:
        return [], 0
    total = 0
    for s in sets:
        total |= s
    if universe & ~total:
        raise SelfCheckError("set cover universe has an uncoverable element")
    nodes = 0
    elem_sets = {
        e: [i for i, s in enumerate(sets) if s >> e & 1] for e in _bit_list(universe)
    }

    def pick_element(cov: int) -> int:
        best = -1
        best_count = 1 << 30
        rest = universe & ~cov
        while rest:
            low = rest & -rest
            rest ^= low
            e = low.bit_length() - 1
            c = len(elem_sets[e])
            if c < best_count:
                best_count = c
                best = e
        return best

    def lower_bound(cov: int) -> int:
        rem = (universe & ~cov).bit_count()
        if rem == 0:
            return 0
        mx = max((s & universe & ~cov).bit_count() for s in sets)
        return -(-rem // mx)

    cov = 0
    best_len = 0
    while cov & universe != universe:  # greedy upper bound
        i = max(
            range(len(sets)),
            key=lambda i: ((sets[i] & universe & ~cov).bit_count(), -i),
        )
        cov |= sets[i]
        best_len += 1

    def improve(cov: int, count: int) -> None:
        nonlocal best_len, nodes
        nodes += 1
        if cov & universe == universe:
            if count < best_len:
                best_len = count
            return
        if count + lower_bound(cov) >= best_len:
            return
        for i in elem_sets[pick_element(cov)]:
            improve(cov | sets[i], count + 1)

    improve(0, 0)

    chosen: list[int] = []

    def first(cov: int, count: int) -> bool:
        nonlocal nodes
        nodes += 1
        if cov & universe == universe:
            return True
        if count + lower_bound(cov) > best_len:
            return False
        for i in elem_sets[pick_element(cov)]:
            chosen.append(i)
            if first(cov | sets[i], count + 1):
                return True
            chosen.pop()
        return False

    if not first(0, 0):
        raise SelfCheckError("optimal cover size was found but no cover")
    return chosen, nodes


def exact_boxicity(
    g: Graph, max_complement_edges: int = DEFAULT_COMPLEMENT_EDGE_CAP
) -> BoxicityResult:
    """Exact boxicity with a verified cointerval-cover certificate and a
    verified box representation. Complete graphs have boxicity 0.

    Restricting the cover search to inclusion-maximal cointerval subsets is
    lossless: any part of a cover stays cointerval when replaced by a maximal
    superset from the family, and the union only grows.
    """
    host = complement(g)
    edges = host.edges()
    if not edges:
        cover = CointervalCover(host, ())
        rep = _cover_to_box_rep(g, cover)
        _self_check(g, cover, rep, 0)
        return BoxicityResult(0, cover, rep, 0, 0)
    family, scan_nodes = _maximal_cointerval_family_masks(host, max_complement_edges)
    # Family in lexicographic order of edge lists; masks index the lex edge list.
    family.sort(key=lambda mask: [edges[p] for p in _bit_list(mask)])
    universe = (1 << len(edges)) - 1
    chosen, cover_nodes = _minimum_cover(universe, family)
    parts = tuple(
        EdgeSet.of(host.n, (edges[p] for p in _bit_list(family[i]))) for i in chosen
    )
    cover = CointervalCover(host, parts)
    rep = _cover_to_box_rep(g, cover)
    _self_check(g, cover, rep, len(parts))
    return BoxicityResult(len(parts), cover, rep, scan_nodes + cover_nodes, len(family))


def _self_check(g: Graph, cover: CointervalCover, rep: BoxRep, value: int) -> None:
    verdict = verify_cointerval_cover(g, cover)
    if not verdict:
        raise SelfCheckError(f"engine certificate failed verification: {verdict.reason}")
    if len(cover.parts) != value:
        raise SelfCheckError("engine certificate part count mismatch")
    box_verdict = verify_box_representation(g, rep)
    if not box_verdict:
        raise SelfCheckError(
            f"engine box representation failed verification: {box_verdict.reason}"
        )
    if rep.dimension != max(value, 1):
        raise SelfCheckError("engine box representation dimension mismatch")


def verify_cointerval_cover(g: Graph, cover: CointervalCover) -> Verdict:
    """Check the three certificate invariants: parts within the host's edges,
    every part cointerval as a spanning subgraph, and full edge coverage."""
    host = complement(g)
    if cover.host != host:
        raise ValueError("cover host is not the complement of the given graph")
    host_edges = set(host.edges())
    seen: set[tuple[int, int]] = set()
    for i, part in enumerate(cover.parts):
        if part.host_n != host.n:
            return Verdict(False, f"part {i} has host_n {part.host_n}, want {host.n}")
        for e in part.sorted_edges():
            if e not in host_edges:
                return Verdict(False, f"part {i} contains non-host edge {e[0]}-{e[1]}")
        if not _is_cointerval_edge_list(host.n, list(part.edges)):
            return Verdict(False, f"part {i} is not cointerval")
        seen |= part.edges
    for e in sorted(host_edges):
        if e not in seen:
            return Verdict(False, f"host edge {e[0]}-{e[1]} is covered by no part")
    return Verdict(True)


def _cover_to_box_rep(g: Graph, cover: CointervalCover) -> BoxRep:
    if not cover.parts:
        return BoxRep(1, tuple(((0, 0),) for _ in range(g.n)))
    dims = []
    for part in cover.parts:
        comp_masks = _spanning_complement_masks(cover.host.n, part.edges)
        rep = interval_representation(Graph(cover.host.n, comp_masks))
        dims.append(rep.intervals)
    boxes = tuple(tuple(dim[v] for dim in dims) for v in range(g.n))
    return BoxRep(len(cover.parts), boxes)


def cover_to_box_representation(g: Graph, cover: CointervalCover) -> BoxRep:
    """Turn a verified cover into boxes: coordinate j of vertex v is v's
    interval in the interval representation of the complement of part j."""
    verdict = verify_cointerval_cover(g, cover)
    if not verdict:
        raise ValueError(f"cover does not verify: {verdict.reason}")
    return _cover_to_box_rep(g, cover)


def verify_box_representation(g: Graph, rep: BoxRep) -> Verdict:
    """Accept iff per-coordinate interval intersection matches adjacency for
    every vertex pair."""
    if len(rep.boxes) != g.n:
        return Verdict(False, f"{len(rep.boxes)} boxes for {g.n} vertices")
    for v, box in enumerate(rep.boxes):
        if len(box) != rep.dimension:
            return Verdict(False, f"box of vertex {v} has wrong dimension")
        for lo, hi in box:
            if lo > hi:
                return Verdict(False, f"vertex {v} has an empty interval")
    if rep.dimension == 0 and complement(g).num_edges() > 0:
        return Verdict(False, "dimension 0 can only represent a complete graph")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            meets = all(
                max(alo, blo) <= min(ahi, bhi)
                for (alo, ahi), (blo, bhi) in zip(rep.boxes[u], rep.boxes[v])
            )
            if meets != g.has_edge(u, v):
                want = "adjacent" if g.has_edge(u, v) else "non-adjacent"
                return Verdict(False, f"boxes of {u} and {v} disagree with {want} pair")
    return Verdict(True)


# ---------------------------------------------------------------------------
# Lower bounds
# ---------------------------------------------------------------------------

def matching_lower_bound(g: Graph) -> int:
    """Lower bound from an induced matching structure in the complement.

    Finds the largest k such that disjoint vertex sets {a_1..a_k} and
    {b_1..b_k} exist whose cross edges in the complement are exactly the
    matching a_i b_i (edges inside either set are unconstrained), and returns
    the ceiling of k/2. Exact for graphs up to MATCHING_EXACT_MAX_N vertices,
    greedy above (still a valid lower bound).
    """
    value, _ = matching_bound_detail(g)
    return value


def matching_bound_detail(g: Graph) -> tuple[int, str]:
    """Matching lower bound plus how it was obtained: "exact" or "heuristic".

    Oriented complement edges (a, b) are mutually compatible when their
    endpoints are disjoint and neither cross pair a-d, c-b is a complement
    edge; the largest structure is a maximum clique of the compatibility
    relation.
    """
    comp = complement(g)
    comp_edges = comp.edges()
    if not comp_edges:
        return 0, "exact"
    oriented: list[tuple[int, int]] = []
    for u, v in comp_edges:
        oriented.append((u, v))
        oriented.append((v, u))
    k = len(oriented)
    compat = [0] * k
    for i in range(k):
        a, b = oriented[i]
        for j in range(i + 1, k):
            c, d = oriented[j]
            if a == c or a == d or b == c or b == d:
                continue
            if comp.adj[a] >> d & 1 or comp.adj[c] >> b & 1:
                continue
            compat[i] |= 1 << j
            compat[j] |= 1 << i
    if g.n <= MATCHING_EXACT_MAX_N:
        best = _max_clique(compat)
        return (best + 1) // 2, "exact"
    chosen = 0
    count = 0
    for i in range(k):
        if chosen & ~compat[i] == 0:
            chosen |= 1 << i
            count += 1
    return (count + 1) // 2, "heuristic"


def _max_clique(adj: list[int]) -> int:
    """Maximum clique size by branch and bound with a greedy coloring bound."""
    best = 0

    def expand(cand: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if not cand:
            return
        # Greedy coloring of the candidates; a clique needs distinct colors,
        # so size + color is an upper bound for branches at that vertex.
        ordered: list[tuple[int, int]] = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                ordered.append((v, color))
                avail &= ~adj[v]
                avail ^= low
                rest ^= low
        for v, color in reversed(ordered):
            if size + color <= best:
                return
            expand(cand & adj[v], size + 1)
            cand &= ~(1 << v)

    expand((1 << len(adj)) - 1, 0)
    return best


def pair_lower_bound(
    g: Graph,
    h1: Iterable[int],
    h2: Iterable[int],
    max_complement_edges: int = DEFAULT_COMPLEMENT_EDGE_CAP,
) -> int:
    """Additive lower bound from two complement-induced subgraphs at
    complement distance at least 2: boxicity of g is at least the sum of the
    boxicities of the complements of those induced subgraphs."""
    s1 = sorted(set(h1))
    s2 = sorted(set(h2))
    if not s1 or not s2:
        raise ValueError("both vertex sets must be nonempty")
    if set(s1) & set(s2):
        raise ValueError("vertex sets must be disjoint")
    comp = complement(g)
    d = subgraph_distance(comp, s1, s2)
    if d < 2:
        raise ValueError(
            f"complement distance between the sets is {d}, need at least 2"
        )
    total = 0
    for s in (s1, s2):
        sub = induced_subgraph(comp, s)
        total += exact_boxicity(complement(sub), max_complement_edges).value
    return total


# ---------------------------------------------------------------------------
# Certificate text format
# ---------------------------------------------------------------------------

def format_cover(cover: CointervalCover) -> str:
    lines = [f"host {graph6_encode(cover.host)}", f"parts {len(cover.parts)}"]
    for part in cover.parts:
        lines.append(" ".join(f"{u}-{v}" for u, v in part.sorted_edges()))
    return "\n".join(lines) + "\n"


def parse_cover(text: str) -> CointervalCover:
    lines = text.splitlines()
    if (
        len(lines) < 2
        or not lines[0].startswith("host ")
        or not lines[1].startswith("parts ")
    ):
        raise ValueError("certificate must start with 'host <graph6>' and 'parts <k>'")
    host = graph6_decode(lines[0][len("host "):].strip())
    try:
        k = int(lines[1][len("parts "):])
    except ValueError:
        raise ValueError("bad part count line") from None
    if k < 0 or len(lines) < 2 + k:
        raise ValueError(f"certificate promises {k} parts but has {len(lines) - 2}")
    if any(line.strip() for line in lines[2 + k:]):
        raise ValueError(f"unexpected content after the {k} part lines")
    parts = []
    for i in range(k):
        pairs = []
        for token in lines[2 + i].split():
            try:
                u, v = token.split("-")
                pairs.append((int(u), int(v)))
            except ValueError:
                raise ValueError(f"bad edge token {token!r} in part {i}") from None
        parts.append(EdgeSet.of(host.n, pairs))
    return CointervalCover(host, tuple(parts))
