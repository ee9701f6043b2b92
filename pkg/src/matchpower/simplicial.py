"""Simplicial complexes and exact reduced homology over a field.

Homology is computed from the augmented oriented chain complex with the
boundary convention that dropping the j-th smallest vertex carries sign
(-1)^(j+1). Ranks are exact: sparse elimination over GF(p), or rational
arithmetic for characteristic 0. Every homology call cross-checks that
consecutive boundary maps compose to zero and that the alternating sums of
homology dimensions and face counts agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._kernels import backend, rational
from .errors import ConsistencyCheckError, InvalidParameterError
from .ideals import SqfIdeal, indices_of, mask_of


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 (exact rationals) or an odd prime."""

    characteristic: int = 32003

    def __post_init__(self):
        c = self.characteristic
        if c == 0:
            return
        if c == 2 or not _is_prime(c):
            raise InvalidParameterError("characteristic must be 0 or an odd prime")


DEFAULT_FIELD = FieldSpec(32003)
RATIONAL_FIELD = FieldSpec(0)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology dimensions, indexed from homological degree -1.

    dims[t] is the dimension of the reduced homology in degree t - 1, for
    t = 0 .. dim(complex) + 1. The void complex has an empty profile.
    """

    dims: tuple[int, ...]
    field_char: int

    def __post_init__(self):
        if any(d < 0 for d in self.dims):
            raise InvalidParameterError("homology dimensions must be >= 0")

    def reduced(self, degree: int) -> int:
        """Dimension of reduced homology in homological degree `degree`."""
        t = degree + 1
        if 0 <= t < len(self.dims):
            return self.dims[t]
        return 0

    def is_trivial(self) -> bool:
        return not any(self.dims)


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex given by its facets over an explicit vertex set.

    The void complex (no faces) and the irrelevant complex (only the empty
    face) are distinct: the former has no facets, the latter a single empty
    facet.
    """

    vertex_set: frozenset[int]
    facets: tuple[frozenset[int], ...]

    def __post_init__(self):
        for f in self.facets:
            if not f <= self.vertex_set:
                raise InvalidParameterError("facet outside the vertex set")
        for a in self.facets:
            for b in self.facets:
                if a != b and a <= b:
                    raise InvalidParameterError("facets must form an antichain")
        canon = tuple(sorted(self.facets, key=lambda f: (len(f), sorted(f))))
        if canon != self.facets:
            raise InvalidParameterError("facets not in canonical order")

    def is_void(self) -> bool:
        return not self.facets

    def is_irrelevant(self) -> bool:
        return self.facets == (frozenset(),)

    def dim(self) -> int:
        """Dimension; the void and irrelevant complexes both give -1 here

        (callers distinguish them via is_void)."""
        if self.is_void():
            return -1
        return max(len(f) for f in self.facets) - 1

    def facet_masks(self) -> list[int]:
        return [mask_of(f) for f in self.facets]

    def to_json_dict(self) -> dict:
        return {"vertices": sorted(self.vertex_set),
                "facets": [sorted(f) for f in self.facets]}


def complex_from_facets(vertices, facets) -> SimplicialComplex:
    """Antichain-reduce and canonically order the given facets."""
    facets = [frozenset(f) for f in facets]
    kept = []
    for f in facets:
        if not any(f < g for g in facets) and f not in kept:
            kept.append(f)
    kept.sort(key=lambda f: (len(f), sorted(f)))
    return SimplicialComplex(frozenset(vertices), tuple(kept))


def void_complex(vertices=()) -> SimplicialComplex:
    return SimplicialComplex(frozenset(vertices), ())


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def facet_complex(ideal: SqfIdeal) -> SimplicialComplex:
    """Complex whose facets are the generator supports; vertex set is their

    union. The zero ideal gives the void complex."""
    if ideal.is_unit():
        raise InvalidParameterError("facet complex of the unit ideal")
    verts: set[int] = set()
    for g in ideal.gens:
        verts.update(indices_of(g))
    return complex_from_facets(verts, [frozenset(indices_of(g))
                                       for g in ideal.gens])


def stanley_reisner_complex(ideal: SqfIdeal, ambient_n: int | None = None
                            ) -> SimplicialComplex:
    """Complex of all subsets whose monomial is outside the ideal."""
    if ideal.is_unit():
        raise InvalidParameterError("Stanley-Reisner complex of the unit ideal")
    n = ideal.ambient_n if ambient_n is None else ambient_n
    universe = (1 << n) - 1
    if ideal.is_zero():
        return complex_from_facets(range(n), [frozenset(range(n))])
    levels = backend.sr_faces(list(ideal.gens), universe)
    all_faces = {m for level in levels for m in level}
    facets = []
    for m in all_faces:
        if not any((m | (1 << v)) in all_faces
                   for v in range(n) if not (m >> v) & 1):
            facets.append(frozenset(indices_of(m)))
    return complex_from_facets(range(n), facets)


def induced_subcomplex(d: SimplicialComplex, u) -> SimplicialComplex:
    """Subcomplex on u: the facets of d that fit inside u."""
    u = frozenset(u)
    if not u <= d.vertex_set:
        raise InvalidParameterError("u must be a subset of the vertex set")
    return SimplicialComplex(u, tuple(f for f in d.facets if f <= u))


def complement_complex(d: SimplicialComplex, u) -> SimplicialComplex:
    """Complex with facets u - F over facets F of d, antichain-reduced."""
    u = frozenset(u)
    for f in d.facets:
        if not f <= u:
            raise InvalidParameterError("every facet must lie inside u")
    if d.is_void():
        return void_complex(u)
    return complex_from_facets(u, [u - f for f in d.facets])


# ---------------------------------------------------------------------------
# homology
# ---------------------------------------------------------------------------


def _chain_data_for_levels(levels, field: FieldSpec, check: bool):
    if field.characteristic == 0:
        return rational.chain_data_q(levels, check)
    return backend.chain_data(levels, field.characteristic, check)


def _dims_from_chain(counts, ranks) -> list[int]:
    dims = []
    for t in range(len(counts)):
        nxt = ranks[t + 1] if t + 1 < len(ranks) else 0
        d = counts[t] - ranks[t] - nxt
        if d < 0:
            raise ConsistencyCheckError("negative homology dimension")
        dims.append(d)
    if (sum(d if t % 2 == 0 else -d for t, d in enumerate(dims))
            != sum(c if t % 2 == 0 else -c for t, c in enumerate(counts))):
        raise ConsistencyCheckError(
            "homology alternating sum disagrees with the face counts")
    return dims


def cover_profile(facet_masks: list[int], field: FieldSpec,
                  check: bool = True) -> list[int]:
    """Homology dims (indexed from degree -1) of the complex with the given

    facets; trailing zeros are kept so the length matches dim + 2."""
    levels = backend.cover_faces(facet_masks)
    if not levels:
        return []
    counts, ranks = _chain_data_for_levels(levels, field, check)
    return _dims_from_chain(counts, ranks)


def sr_profile(gen_masks: list[int], universe: int, field: FieldSpec,
               check: bool = True) -> list[int]:
    """Homology dims of the complex of subsets of `universe` containing no

    generator support."""
    levels = backend.sr_faces(gen_masks, universe)
    if not levels:
        return []
    counts, ranks = _chain_data_for_levels(levels, field, check)
    return _dims_from_chain(counts, ranks)


def reduced_homology(d: SimplicialComplex,
                     field: FieldSpec = DEFAULT_FIELD) -> HomologyProfile:
    """Reduced homology of d over the field; the void complex is all zeros."""
    if d.is_void():
        return HomologyProfile((), field.characteristic)
    dims = cover_profile(d.facet_masks(), field)
    return HomologyProfile(tuple(dims), field.characteristic)


def exact_rank(rows, field: FieldSpec = DEFAULT_FIELD) -> int:
    """Rank of a dense integer matrix (list of rows) over the field."""
    cols: dict[int, list[tuple[int, int]]] = {}
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v:
                cols.setdefault(j, []).append((i, v))
    col_list = [cols[j] for j in sorted(cols)]
    if field.characteristic == 0:
        return rational.rank_of_columns_q(col_list)
    return backend.rank_of_columns(col_list, field.characteristic)
