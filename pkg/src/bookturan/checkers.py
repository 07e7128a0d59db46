"""Decision procedures for the defining predicates: clique containment,
generalized-book containment, exact colorability, chromatic number,
color-criticality, and the candidacy predicate combining them.

Containment is ordinary subgraph containment (not induced): the pages of an
embedded book may be adjacent to each other in the host.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, _bits, remove_edge


@dataclass(frozen=True)
class BookWitness:
    """An embedded book: clique induces K_r, every page sees the whole clique."""

    clique: frozenset[int]
    pages: frozenset[int]


@dataclass(frozen=True)
class ColoringWitness:
    """Proper coloring; classes[v] is the color of vertex v (colors 0..c-1)."""

    classes: tuple[int, ...]

    def color_count(self) -> int:
        return max(self.classes) + 1 if self.classes else 0


def greedy_clique(g: Graph) -> list[int]:
    """Deterministic greedy clique (max degree first, ties by label)."""
    n = g.order
    if n == 0:
        return []
    rows = g.rows
    order = sorted(range(n), key=lambda v: (-rows[v].bit_count(), v))
    v0 = order[0]
    clique = [v0]
    cand = rows[v0]
    while cand:
        u = min(_bits(cand), key=lambda w: (-(rows[w] & cand).bit_count(), w))
        clique.append(u)
        cand &= rows[u]
    return sorted(clique)


def _twin_quotient(rows: tuple[int, ...]):
    """Collapse interchangeable vertices for clique search.

    First merge vertices with equal open neighbourhoods (a clique can use at
    most one of them), then merge the representatives with equal closed
    neighbourhoods (a clique can use all of them).  Returns the quotient
    node member-lists, their weights, and the quotient adjacency masks.
    """
    n = len(rows)
    by_open: dict[int, list[int]] = {}
    for v in range(n):
        by_open.setdefault(rows[v], []).append(v)
    reps = sorted(cls[0] for cls in by_open.values())
    by_closed: dict[int, list[int]] = {}
    for v in reps:
        by_closed.setdefault(rows[v] | 1 << v, []).append(v)
    nodes = sorted(by_closed.values())
    t = len(nodes)
    adj = [0] * t
    for i in range(t):
        for j in range(i + 1, t):
            if rows[nodes[i][0]] >> nodes[j][0] & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    weights = [len(members) for members in nodes]
    return nodes, weights, adj


def contains_clique(g: Graph, r: int) -> frozenset[int] | None:
    """Some r-clique's vertex set, or None; deterministic branch order."""
    if r < 1:
        raise ValueError(f"clique size must be >= 1, got {r}")
    n = g.order
    if r > n:
        return None
    nodes, weights, adj = _twin_quotient(g.rows)
    t = len(nodes)
    suffix = [0] * (t + 1)
    for i in range(t - 1, -1, -1):
        suffix[i] = suffix[i + 1] + weights[i]

    def dfs(start: int, chosen: list[int], weight: int, cand: int) -> list[int] | None:
        if weight >= r:
            return chosen
        for i in range(start, t):
            if not cand >> i & 1:
                continue
            if weight + suffix[i] < r:
                return None
            res = dfs(i + 1, chosen + [i], weight + weights[i], cand & adj[i])
            if res is not None:
                return res
        return None

    found = dfs(0, [], 0, (1 << t) - 1)
    if found is None:
        return None
    out: list[int] = []
    need = r
    for i in found:
        take = min(weights[i], need)
        out.extend(nodes[i][:take])
        need -= take
    return frozenset(out)


def _clique_common(rows: tuple[int, ...], r: int, k: int):
    """First r-clique (ascending label order) with >= k common neighbours."""
    n = len(rows)

    def rec(last: int, depth: int, clique: list[int], common: int):
        if depth == r:
            if common.bit_count() >= k:
                pages = []
                for w in _bits(common):
                    pages.append(w)
                    if len(pages) == k:
                        break
                return clique, pages
            return None
        cand = common if depth else (1 << n) - 1
        for v in _bits(cand):
            if v <= last:
                continue
            nxt = common & rows[v] if depth else rows[v]
            need_more = r - depth - 1
            if need_more > 0 and nxt.bit_count() < need_more:
                continue
            res = rec(v, depth + 1, clique + [v], nxt)
            if res is not None:
                return res
        return None

    return rec(-1, 0, [], 0)


def contains_generalized_book(g: Graph, r: int, k: int) -> BookWitness | None:
    """Witness of an embedded book with spine size r and k pages, or None.

    Containment is decided by the clique/common-neighbourhood pattern: a book
    embeds iff some r-clique has at least k common outside neighbours.
    """
    if r < 2:
        raise ValueError(f"book spine needs r >= 2, got {r}")
    if k < 1:
        raise ValueError(f"book needs k >= 1 pages, got {k}")
    found = _clique_common(g.rows, r, k)
    if found is None:
        return None
    clique, pages = found
    return BookWitness(frozenset(clique), frozenset(pages))


def contains_subgraph(host: Graph, pattern: Graph) -> dict[int, int] | None:
    """Generic backtracking subgraph embedding (pattern edges must map to
    host edges; pattern non-edges are unconstrained).  Cross-validation
    oracle for the specialized book checker; not meant to be fast.
    """
    hn, pn = host.order, pattern.order
    if pn > hn:
        return None
    prows, hrows = pattern.rows, host.rows
    order = sorted(range(pn), key=lambda v: (-prows[v].bit_count(), v))
    assignment: dict[int, int] = {}
    used = 0

    def rec(idx: int) -> bool:
        nonlocal used
        if idx == pn:
            return True
        a = order[idx]
        req = prows[a]
        for h in range(hn):
            if used >> h & 1:
                continue
            if hrows[h].bit_count() < req.bit_count():
                continue
            ok = True
            for b in _bits(req):
                if b in assignment and not hrows[h] >> assignment[b] & 1:
                    ok = False
                    break
            if ok:
                assignment[a] = h
                used |= 1 << h
                if rec(idx + 1):
                    return True
                del assignment[a]
                used &= ~(1 << h)
        return False

    return dict(assignment) if rec(0) else None


def is_r_colorable(g: Graph, r: int) -> ColoringWitness | None:
    """A proper r-coloring, or None.  Exact backtracking, saturation-first
    vertex order (ties by degree then label), one fresh color allowed per
    step, and a greedy clique pre-colored to break color symmetry.
    """
    if r < 1:
        raise ValueError(f"color count must be >= 1, got {r}")
    n = g.order
    if n == 0:
        return ColoringWitness(())
    rows = g.rows
    clique = greedy_clique(g)
    if len(clique) > r:
        return None

    colors = [-1] * n
    nbr_count = [[0] * r for _ in range(n)]  # per-vertex color multiplicities
    nbr_mask = [0] * n

    def assign(v: int, c: int) -> None:
        colors[v] = c
        for u in _bits(rows[v]):
            nbr_count[u][c] += 1
            if nbr_count[u][c] == 1:
                nbr_mask[u] |= 1 << c

    def unassign(v: int, c: int) -> None:
        colors[v] = -1
        for u in _bits(rows[v]):
            nbr_count[u][c] -= 1
            if nbr_count[u][c] == 0:
                nbr_mask[u] &= ~(1 << c)

    for i, v in enumerate(clique):
        assign(v, i)
    max_used = len(clique)
    uncolored = [v for v in range(n) if colors[v] == -1]

    def backtrack(max_used: int) -> bool:
        best_v = -1
        best_key = None
        for v in uncolored:
            if colors[v] != -1:
                continue
            key = (nbr_mask[v].bit_count(), rows[v].bit_count(), -v)
            if best_key is None or key > best_key:
                best_key = key
                best_v = v
        if best_v == -1:
            return True
        limit = min(r, max_used + 1)
        avail = ~nbr_mask[best_v] & ((1 << limit) - 1)
        for c in _bits(avail):
            assign(best_v, c)
            if backtrack(max(max_used, c + 1)):
                return True
            unassign(best_v, c)
        return False

    if backtrack(max_used):
        return ColoringWitness(tuple(colors))
    return None


def chromatic_number(g: Graph) -> int:
    """Least c such that g is c-colorable; 0 for the empty graph."""
    if g.order == 0:
        return 0
    c = max(1, len(greedy_clique(g)))
    while is_r_colorable(g, c) is None:
        c += 1
    return c


def is_color_critical(g: Graph) -> bool:
    """Whether deleting some single edge lowers the chromatic number."""
    if g.edge_count() == 0:
        raise ValueError("color-criticality is defined on graphs with edges")
    chi = chromatic_number(g)
    for u, v in g.edges():
        if is_r_colorable(remove_edge(g, u, v), chi - 1) is not None:
            return True
    return False


def is_nonpartite_book_free(g: Graph, r: int, k: int) -> bool:
    """The candidacy predicate: not r-colorable and no embedded book."""
    if r < 3:
        raise ValueError(f"need r >= 3, got {r}")
    if contains_generalized_book(g, r, k) is not None:
        return False
    return is_r_colorable(g, r) is None
