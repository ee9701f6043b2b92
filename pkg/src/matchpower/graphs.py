"""Finite simple graphs, named families, and matching combinatorics.

Vertices are dense indices 0..n-1; labels are display-only strings. All
values are immutable and all operations pure, so concurrent use needs no
coordination.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError, EdgeListParseError, InvalidParameterError

AIM_EDGE_CAP = 16


@dataclass(frozen=True)
class Graph:
    """Simple graph given by symmetric adjacency sets.

    Invariants (checked on construction): adjacency is symmetric, has no
    loops, and every neighbor index is < n_vertices.
    """

    n_vertices: int
    adjacency: tuple[frozenset[int], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        n = self.n_vertices
        if n < 0 or len(self.adjacency) != n:
            raise InvalidParameterError("adjacency length must equal n_vertices")
        if self.labels and len(self.labels) != n:
            raise InvalidParameterError("labels length must equal n_vertices")
        for i, nbrs in enumerate(self.adjacency):
            if i in nbrs:
                raise InvalidParameterError(f"loop at vertex {i}")
            for j in nbrs:
                if not 0 <= j < n:
                    raise InvalidParameterError(f"neighbor {j} out of range")
                if i not in self.adjacency[j]:
                    raise InvalidParameterError("adjacency is not symmetric")

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted (u, v) pairs with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n_vertices)
                for v in sorted(self.adjacency[u]) if u < v]

    def n_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else f"v{v}"

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def adjacency_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << j for j in a) for a in self.adjacency)

    def same_structure(self, other: "Graph") -> bool:
        """Equality of vertex count and adjacency, ignoring labels."""
        return (self.n_vertices == other.n_vertices
                and self.adjacency == other.adjacency)


def from_edges(n: int, edges, labels=None) -> Graph:
    """Graph on vertices 0..n-1 with the given (u, v) edges."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise InvalidParameterError(f"loop edge ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj),
                 tuple(labels) if labels else ())


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------


def path(n: int) -> Graph:
    """Path on n vertices x1..xn."""
    if n < 1:
        raise InvalidParameterError("path needs n >= 1")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)],
                      [f"x{i + 1}" for i in range(n)])


def cycle(n: int) -> Graph:
    """Cycle on n vertices: the path x1..xn closed by the edge x1-xn."""
    if n < 3:
        raise InvalidParameterError("cycle needs n >= 3")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)],
                      [f"x{i + 1}" for i in range(n)])


def whisker(g: Graph) -> Graph:
    """Attach one pendant vertex y_i to every vertex x_i of g."""
    n = g.n_vertices
    edges = g.edges() + [(i, n + i) for i in range(n)]
    labels = [g.label(i) for i in range(n)] + [f"y{i + 1}" for i in range(n)]
    return from_edges(2 * n, edges, labels)


def multi_whiskered_path(m: int, r) -> Graph:
    """Path x1..xm with r_i pendant vertices attached at x_i."""
    r = list(r)
    if m < 1 or len(r) != m or any(ri < 1 for ri in r):
        raise InvalidParameterError("need m >= 1 and m positive multiplicities")
    edges = [(i, i + 1) for i in range(m - 1)]
    labels = [f"x{i + 1}" for i in range(m)]
    nxt = m
    for i, ri in enumerate(r):
        for j in range(ri):
            edges.append((i, nxt))
            labels.append(f"y{i + 1}_{j + 1}")
            nxt += 1
    return from_edges(nxt, edges, labels)


def multi_whiskered_cycle(m: int, r: int) -> Graph:
    """Cycle x1..xm, whiskers y_j at x_j for j >= 2, r pendants z_k at x1."""
    if m < 3 or r < 1:
        raise InvalidParameterError("need m >= 3 and r >= 1")
    edges = [(i, i + 1) for i in range(m - 1)] + [(0, m - 1)]
    labels = [f"x{i + 1}" for i in range(m)]
    nxt = m
    for j in range(2, m + 1):
        edges.append((j - 1, nxt))
        labels.append(f"y{j}")
        nxt += 1
    for k in range(r):
        edges.append((0, nxt))
        labels.append(f"z{k + 1}")
        nxt += 1
    return from_edges(nxt, edges, labels)


def parse_edge_list(text: str) -> Graph:
    """Graph from "u v" lines; '#' starts a comment, duplicates collapse.

    Vertices are the mentioned tokens in sorted order.
    """
    pairs = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(f"expected two tokens, got {len(tokens)}",
                                     line_no)
        u, v = tokens
        if u == v:
            raise EdgeListParseError(f"loop edge {u!r} {u!r}", line_no)
        pairs.append((u, v))
    names = sorted({t for pair in pairs for t in pair})
    index = {name: i for i, name in enumerate(names)}
    edges = {(min(index[u], index[v]), max(index[u], index[v]))
             for u, v in pairs}
    return from_edges(len(names), sorted(edges), names)


def delete_vertices(g: Graph, w) -> Graph:
    """Induced subgraph on V(g) minus w; surviving labels are retained."""
    w = set(w)
    for v in w:
        if not 0 <= v < g.n_vertices:
            raise InvalidParameterError(f"unknown vertex {v}")
    keep = [v for v in range(g.n_vertices) if v not in w]
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges()
             if u not in w and v not in w]
    return from_edges(len(keep), edges, [g.label(v) for v in keep])


# ---------------------------------------------------------------------------
# matchings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Matching:
    """Set of pairwise vertex-disjoint edges, stored as sorted (u, v) pairs."""

    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if not u < v:
                raise InvalidParameterError("matching edges must be (u, v) with u < v")
            if u in seen or v in seen:
                raise InvalidParameterError("matching edges share a vertex")
            seen.update((u, v))

    def size(self) -> int:
        return len(self.edges)

    def support_mask(self) -> int:
        mask = 0
        for u, v in self.edges:
            mask |= (1 << u) | (1 << v)
        return mask

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def k_matching_edge_sets(edges: list[tuple[int, int]], k: int):
    """All k-subsets of the given edges that are pairwise disjoint.

    Backtracking over the (sorted) edge order with a used-vertex mask;
    output in lexicographic order of sorted edge lists.
    """
    edges = sorted(edges)
    out: list[tuple[tuple[int, int], ...]] = []
    acc: list[tuple[int, int]] = []

    def rec(start: int, used: int):
        if len(acc) == k:
            out.append(tuple(acc))
            return
        need = k - len(acc)
        for i in range(start, len(edges) - need + 1):
            u, v = edges[i]
            bits = (1 << u) | (1 << v)
            if used & bits:
                continue
            acc.append(edges[i])
            rec(i + 1, used | bits)
            acc.pop()

    if k >= 0:
        rec(0, 0)
    return out


def k_matching_supports(edges: list[tuple[int, int]], k: int) -> list[int]:
    """Distinct union-of-endpoints masks of the k-matchings, sorted."""
    masks = set()
    for mset in k_matching_edge_sets(edges, k):
        mask = 0
        for u, v in mset:
            mask |= (1 << u) | (1 << v)
        masks.add(mask)
    return sorted(masks)


def enumerate_k_matchings(g: Graph, k: int) -> list[Matching]:
    """All matchings of g of size exactly k, in canonical order."""
    if k < 0:
        raise InvalidParameterError("k must be nonnegative")
    return [Matching(frozenset(es)) for es in k_matching_edge_sets(g.edges(), k)]


def _max_matching_size(adj_masks: tuple[int, ...], alive: int,
                       memo: dict[int, int]) -> int:
    cached = memo.get(alive)
    if cached is not None:
        return cached
    v = -1
    rest = alive
    while rest:
        bit = rest & -rest
        cand = bit.bit_length() - 1
        if adj_masks[cand] & alive:
            v = cand
            break
        rest ^= bit
    if v < 0:
        memo[alive] = 0
        return 0
    best = _max_matching_size(adj_masks, alive ^ (1 << v), memo)
    nbrs = adj_masks[v] & alive
    while nbrs:
        bit = nbrs & -nbrs
        u = bit.bit_length() - 1
        best = max(best, 1 + _max_matching_size(
            adj_masks, alive & ~((1 << v) | (1 << u)), memo))
        nbrs ^= bit
    memo[alive] = best
    return best


def matching_number(g: Graph) -> int:
    """Maximum size of a matching in g."""
    return _max_matching_size(g.adjacency_masks(),
                              (1 << g.n_vertices) - 1, {})


def induced_matching_number(g: Graph) -> int:
    """Maximum size of a matching that is an induced subgraph of g."""
    edges = g.edges()
    adj = g.adjacency_masks()
    closed = [adj[u] | adj[v] | (1 << u) | (1 << v) for u, v in edges]
    ebits = [(1 << u) | (1 << v) for u, v in edges]
    best = 0

    def rec(start: int, forbidden: int, count: int):
        nonlocal best
        best = max(best, count)
        for i in range(start, len(edges)):
            if forbidden & ebits[i]:
                continue
            rec(i + 1, forbidden | closed[i], count + 1)

    rec(0, 0, 0)
    return best


# ---------------------------------------------------------------------------
# admissible matchings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AdmissibleWitness:
    """Block partition certifying that a matching is k-admissible."""

    blocks: tuple[frozenset[tuple[int, int]], ...]

    def matching(self) -> Matching:
        return Matching(frozenset(e for b in self.blocks for e in b))


def _has_gap_violation(g: Graph, e: tuple[int, int], f: tuple[int, int]) -> bool:
    """True when the disjoint matched edges e, f do NOT form a gap in g."""
    adj = g.adjacency
    fbits = set(f)
    return bool((adj[e[0]] | adj[e[1]]) & fbits)


def _induces_forest(g: Graph, vertices: set[int]) -> bool:
    sub = [(u, v) for u, v in g.edges() if u in vertices and v in vertices]
    parent = {v: v for v in vertices}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in sub:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def _non_gap_components(g: Graph, edge_list: list[tuple[int, int]]):
    """Partition matched edges into components of the non-gap relation."""
    m = len(edge_list)
    parent = list(range(m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(m):
        for j in range(i + 1, m):
            if _has_gap_violation(g, edge_list[i], edge_list[j]):
                parent[find(i)] = find(j)
    groups: dict[int, list[tuple[int, int]]] = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(edge_list[i])
    return sorted(groups.values())


def check_admissible_witness(g: Graph, witness: AdmissibleWitness, k: int) -> bool:
    """Validate a witness independently of how it was found.

    Checks: blocks nonempty and edge-disjoint, the union is a matching of g,
    cross-block pairs are gaps, every block induces a forest, and the number
    of blocks r satisfies |M| <= r + k - 1 (the block-size sequence is then
    k-admissible).
    """
    blocks = witness.blocks
    if not blocks or any(not b for b in blocks):
        return False
    all_edges: list[tuple[int, int]] = []
    for b in blocks:
        for e in b:
            if e in all_edges:
                return False
            all_edges.append(e)
    used = set()
    for u, v in all_edges:
        if not g.has_edge(u, v) or u in used or v in used:
            return False
        used.update((u, v))
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            for e in blocks[i]:
                for f in blocks[j]:
                    if _has_gap_violation(g, e, f):
                        return False
    for b in blocks:
        if not _induces_forest(g, {x for e in b for x in e}):
            return False
    return len(all_edges) <= len(blocks) + k - 1


def admissible_matching_number(g: Graph, k: int):
    """Largest size of a k-admissible matching, with a block witness.

    The finest legal block structure groups matched edges by the non-gap
    relation, and coarsening can only break the per-block forest condition
    or lower the block count, so it suffices to test that structure.
    Returns (0, None) when no k-admissible matching exists.
    """
    if g.n_edges() > AIM_EDGE_CAP:
        raise CapExceededError(
            f"admissible matching search is limited to {AIM_EDGE_CAP} edges")
    nu = matching_number(g)
    if not 1 <= k <= nu:
        raise InvalidParameterError(f"k must be within 1..{nu}")
    for size in range(nu, 0, -1):
        for eset in k_matching_edge_sets(g.edges(), size):
            comps = _non_gap_components(g, list(eset))
            if size > len(comps) + k - 1:
                continue
            if all(_induces_forest(g, {x for e in c for x in e}) for c in comps):
                witness = AdmissibleWitness(tuple(frozenset(c) for c in comps))
                return size, witness
    return 0, None


# ---------------------------------------------------------------------------
# family descriptors (CLI-facing)
# ---------------------------------------------------------------------------


def _parse_forest_spec(spec: str) -> Graph:
    """Forest from "a-b,b-c,d" (bare tokens are isolated vertices)."""
    pairs = []
    singles = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part:
            u, _, v = part.partition("-")
            if not u or not v or u == v:
                raise InvalidParameterError(f"bad forest edge {part!r}")
            pairs.append((u, v))
        else:
            singles.append(part)
    names = sorted({t for pair in pairs for t in pair} | set(singles))
    if not names:
        raise InvalidParameterError("forest spec names no vertices")
    index = {name: i for i, name in enumerate(names)}
    edges = sorted({(min(index[u], index[v]), max(index[u], index[v]))
                    for u, v in pairs})
    t = from_edges(len(names), edges, names)
    if not _induces_forest(t, set(range(t.n_vertices))):
        raise InvalidParameterError("forest spec contains a cycle")
    return t


def from_descriptor(desc: str) -> Graph:
    """Build a family graph from a descriptor string.

    Supported forms: path:N, cycle:N, wpath:M, wcycle:M, mwcycle:M:R,
    mwpath:M:r1,...,rM, cmforest:<a-b,b-c,...>.
    """
    head, _, rest = desc.partition(":")
    try:
        if head == "path":
            return path(int(rest))
        if head == "cycle":
            return cycle(int(rest))
        if head == "wpath":
            return whisker(path(int(rest)))
        if head == "wcycle":
            return whisker(cycle(int(rest)))
        if head == "mwcycle":
            m_s, _, r_s = rest.partition(":")
            return multi_whiskered_cycle(int(m_s), int(r_s))
        if head == "mwpath":
            m_s, _, r_s = rest.partition(":")
            return multi_whiskered_path(int(m_s),
                                        [int(x) for x in r_s.split(",")])
        if head == "cmforest":
            return whisker(_parse_forest_spec(rest))
    except ValueError as exc:
        raise InvalidParameterError(f"bad descriptor {desc!r}: {exc}") from exc
    raise InvalidParameterError(f"unknown family {head!r}")


def _canonical_form(g: Graph) -> tuple:
    """Smallest edge encoding over all vertex relabelings (tiny n only)."""
    from itertools import permutations

    edges = g.edges()
    best = None
    for perm in permutations(range(g.n_vertices)):
        enc = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v]))
                           for u, v in edges))
        if best is None or enc < best:
            best = enc
    return (g.n_vertices, best)


def forests_up_to_iso(max_vertices: int) -> list[Graph]:
    """All isomorphism-distinct forests on 1..max_vertices vertices."""
    from itertools import combinations

    out = []
    for n in range(1, max_vertices + 1):
        all_pairs = list(combinations(range(n), 2))
        seen = set()
        for bits in range(1 << len(all_pairs)):
            edges = [all_pairs[i] for i in range(len(all_pairs))
                     if (bits >> i) & 1]
            if len(edges) >= n:
                continue
            g = from_edges(n, edges)
            if not _induces_forest(g, set(range(n))):
                continue
            key = _canonical_form(g)
            if key in seen:
                continue
            seen.add(key)
            out.append(g)
    return out
