"""Square-free monomial ideals and the matching-power constructions.

Generator supports are bitmasks over a fixed ambient variable set (n <= 64).
The unit ideal is a single empty-support generator; the zero ideal has no
generators. Canonical generator order is (degree, mask value).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import InvalidParameterError
from .graphs import Graph, k_matching_supports, matching_number

MAX_AMBIENT = 64


def _popcount(x: int) -> int:
    return bin(x).count("1")


def mask_of(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def indices_of(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if (mask >> i) & 1]


@dataclass(frozen=True)
class SqfMonomial:
    """Square-free monomial: a set of variable indices in an ambient ring."""

    ambient_n: int
    mask: int

    def __post_init__(self):
        if not 0 <= self.ambient_n <= MAX_AMBIENT:
            raise InvalidParameterError(f"ambient size must be 0..{MAX_AMBIENT}")
        if self.mask >> self.ambient_n:
            raise InvalidParameterError("support outside the ambient variables")

    @classmethod
    def from_indices(cls, ambient_n: int, indices) -> "SqfMonomial":
        return cls(ambient_n, mask_of(indices))

    def degree(self) -> int:
        return _popcount(self.mask)

    def support(self) -> list[int]:
        return indices_of(self.mask)


@dataclass(frozen=True)
class SqfIdeal:
    """Square-free monomial ideal by its minimal generator masks.

    gens is an antichain under support inclusion, sorted canonically.
    Construct through make_ideal/minimalize unless the input is already
    canonical.
    """

    ambient_n: int
    gens: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.ambient_n <= MAX_AMBIENT:
            raise InvalidParameterError(f"ambient size must be 0..{MAX_AMBIENT}")
        for g in self.gens:
            if g >> self.ambient_n:
                raise InvalidParameterError("generator outside ambient variables")
        canon = tuple(sorted(set(self.gens), key=lambda g: (_popcount(g), g)))
        if canon != self.gens:
            raise InvalidParameterError("generators not in canonical order")
        for a in self.gens:
            for b in self.gens:
                if a != b and a & ~b == 0:
                    raise InvalidParameterError("generators are not an antichain")

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == (0,)

    def is_proper_nonzero(self) -> bool:
        return bool(self.gens) and not self.is_unit()

    def n_gens(self) -> int:
        return len(self.gens)

    def degrees(self) -> list[int]:
        return [_popcount(g) for g in self.gens]

    def contains(self, m: SqfMonomial) -> bool:
        """Membership of a square-free monomial: some generator divides it."""
        return any(g & ~m.mask == 0 for g in self.gens)

    def monomials(self) -> list[SqfMonomial]:
        return [SqfMonomial(self.ambient_n, g) for g in self.gens]

    def to_json_dict(self) -> dict:
        return {"ambient": self.ambient_n,
                "gens": [indices_of(g) for g in self.gens]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "SqfIdeal":
        return make_ideal(data["ambient"], [mask_of(g) for g in data["gens"]])


def make_ideal(ambient_n: int, masks) -> SqfIdeal:
    """Ideal generated by the given support masks, minimalized."""
    masks = sorted(set(masks), key=lambda g: (_popcount(g), g))
    kept: list[int] = []
    for g in masks:
        if not any(h & ~g == 0 for h in kept):
            kept.append(g)
    return SqfIdeal(ambient_n, tuple(kept))


def zero_ideal(ambient_n: int) -> SqfIdeal:
    return SqfIdeal(ambient_n, ())


def unit_ideal(ambient_n: int) -> SqfIdeal:
    return SqfIdeal(ambient_n, (0,))


def minimalize(monomials) -> SqfIdeal:
    """Antichain reduction of a list of SqfMonomial (all same ambient)."""
    monomials = list(monomials)
    if not monomials:
        return zero_ideal(0)
    ambients = {m.ambient_n for m in monomials}
    if len(ambients) != 1:
        raise InvalidParameterError("mixed ambient sizes")
    return make_ideal(ambients.pop(), [m.mask for m in monomials])


# ---------------------------------------------------------------------------
# edge ideals and matching powers
# ---------------------------------------------------------------------------


def edge_ideal(g: Graph) -> SqfIdeal:
    """One degree-2 generator per edge of g."""
    return make_ideal(g.n_vertices,
                      [(1 << u) | (1 << v) for u, v in g.edges()])


def power_of_edges(ambient_n: int, edges, k: int) -> SqfIdeal:
    """Matching power of an explicit edge list, embedded in ambient_n vars.

    Used wherever a rewired or induced subgraph must live in the original
    ambient ring.
    """
    if k < 0:
        raise InvalidParameterError("k must be nonnegative")
    if k == 0:
        return unit_ideal(ambient_n)
    return make_ideal(ambient_n, k_matching_supports(list(edges), k))


def sqf_power(g: Graph, k: int) -> SqfIdeal:
    """Ideal generated by the supports of the k-matchings of g.

    k = 0 gives the unit ideal, k = 1 the edge ideal, and the result is the
    zero ideal exactly when k exceeds the matching number.
    """
    return power_of_edges(g.n_vertices, g.edges(), k)


def sqf_power_bruteforce(g: Graph, k: int) -> SqfIdeal:
    """Independent oracle: square-free members of the minimal generators of

    the ordinary k-th power, computed by expanding k-fold products of edge
    generators. Exponential; intended for graphs with few edges.
    """
    if k == 0:
        return unit_ideal(g.n_vertices)
    edge_vecs = []
    for u, v in g.edges():
        vec = [0] * g.n_vertices
        vec[u] = vec[v] = 1
        edge_vecs.append(tuple(vec))
    products = set()
    for combo in combinations_with_replacement(edge_vecs, k):
        total = [0] * g.n_vertices
        for vec in combo:
            for i, e in enumerate(vec):
                total[i] += e
        products.add(tuple(total))

    def divides(a, b):
        return all(x <= y for x, y in zip(a, b))

    minimal = [p for p in products
               if not any(q != p and divides(q, p) for q in products)]
    sqfree = [p for p in minimal if all(e <= 1 for e in p)]
    return make_ideal(g.n_vertices,
                      [mask_of(i for i, e in enumerate(p) if e) for p in sqfree])


# ---------------------------------------------------------------------------
# ideal arithmetic
# ---------------------------------------------------------------------------


def _require_same_ambient(a_n: int, b_n: int):
    if a_n != b_n:
        raise InvalidParameterError("mixed ambient sizes")


def colon(ideal: SqfIdeal, m: SqfMonomial) -> SqfIdeal:
    """(I : m) for square-free I and m: drop supp(m) from each generator."""
    _require_same_ambient(ideal.ambient_n, m.ambient_n)
    return make_ideal(ideal.ambient_n, [g & ~m.mask for g in ideal.gens])


def add(a: SqfIdeal, b: SqfIdeal) -> SqfIdeal:
    """Ideal sum: minimalize the concatenated generators."""
    _require_same_ambient(a.ambient_n, b.ambient_n)
    return make_ideal(a.ambient_n, a.gens + b.gens)


def scale(ideal: SqfIdeal, m: SqfMonomial) -> SqfIdeal:
    """m * I in the square-free world: union supp(m) into each generator."""
    _require_same_ambient(ideal.ambient_n, m.ambient_n)
    return make_ideal(ideal.ambient_n, [g | m.mask for g in ideal.gens])


def vars_ideal(ambient_n: int, vertices) -> SqfIdeal:
    """Ideal generated by single variables."""
    return make_ideal(ambient_n, [1 << v for v in vertices])


def equals(a: SqfIdeal, b: SqfIdeal) -> bool:
    _require_same_ambient(a.ambient_n, b.ambient_n)
    return a.gens == b.gens


# ---------------------------------------------------------------------------
# colon identities for matching powers
# ---------------------------------------------------------------------------


def _edges_avoiding(g: Graph, banned: set[int]) -> list[tuple[int, int]]:
    return [(u, v) for u, v in g.edges() if u not in banned and v not in banned]


def colon_identity_edge(g: Graph, k: int, x: int, y: int):
    """Both sides of the matching-power colon by an edge product x*y.

    The right side rewires each remaining neighbor u of x to the remaining
    neighbors of y and sums the (k-1)-st powers. The decomposition needs the
    colon vertex to keep a neighbor besides the edge partner, so the roles
    of x and y are swapped when necessary; if the edge is an isolated
    component the right side degenerates to a single deletion power.
    """
    if not g.has_edge(x, y):
        raise InvalidParameterError("x, y must span an edge")
    nu = matching_number(g)
    if not 2 <= k <= nu:
        raise InvalidParameterError(f"k must be within 2..{nu}")
    n = g.n_vertices
    left = colon(sqf_power(g, k), SqfMonomial.from_indices(n, [x, y]))
    if not g.adjacency[x] - {y} and g.adjacency[y] - {x}:
        x, y = y, x
    us = sorted(g.adjacency[x] - {y})
    vs = sorted(g.adjacency[y] - {x})
    base = _edges_avoiding(g, {x, y})
    if not us:
        right = power_of_edges(n, base, k - 1)
    else:
        right = zero_ideal(n)
        for u in us:
            rewired = base + [(min(u, v), max(u, v)) for v in vs if v != u]
            right = add(right, power_of_edges(n, rewired, k - 1))
    return left, right


def colon_identity_vertex(g: Graph, k: int, x: int):
    """Both sides of the matching-power colon by a single vertex variable."""
    nu = matching_number(g)
    if not 2 <= k <= nu:
        raise InvalidParameterError(f"k must be within 2..{nu}")
    n = g.n_vertices
    left = colon(sqf_power(g, k), SqfMonomial.from_indices(n, [x]))
    right = zero_ideal(n)
    for y in sorted(g.adjacency[x]):
        part = power_of_edges(n, _edges_avoiding(g, {x, y}), k - 1)
        right = add(right, scale(part, SqfMonomial.from_indices(n, [y])))
    closed = set(g.adjacency[x]) | {x}
    right = add(right, power_of_edges(n, _edges_avoiding(g, closed), k))
    return left, right


def colon_identity_star(g: Graph, k: int, x: int):
    """Both sides of ((I + <x*y over neighbors y>) : x)."""
    nu = matching_number(g)
    if not 1 <= k <= nu:
        raise InvalidParameterError(f"k must be within 1..{nu}")
    n = g.n_vertices
    nbrs = sorted(g.adjacency[x])
    star = make_ideal(n, [(1 << x) | (1 << y) for y in nbrs])
    left = colon(add(sqf_power(g, k), star), SqfMonomial.from_indices(n, [x]))
    closed = set(nbrs) | {x}
    right = add(power_of_edges(n, _edges_avoiding(g, closed), k),
                vars_ideal(n, nbrs))
    return left, right


def deletion_identity(g: Graph, k: int, x: int):
    """Both sides of I(G)^[k] + <x> = I(G minus x)^[k] + <x>."""
    n = g.n_vertices
    xi = vars_ideal(n, [x])
    left = add(sqf_power(g, k), xi)
    right = add(power_of_edges(n, _edges_avoiding(g, {x}), k), xi)
    return left, right
