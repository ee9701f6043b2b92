"""Graded Betti tables of square-free ideals and derived invariants.

Three independent routes produce the same table:

* ``betti_hochster`` sums homology of induced Stanley-Reisner subcomplexes
  over vertex subsets.
* ``betti_facet_formula`` sums homology of complement complexes of induced
  facet subcomplexes.
* ``betti_taylor_oracle`` reads multigraded strands of the simplex-shaped
  resolution on the generators (small generator counts only).

Both subset routes only visit subsets that are unions of generator
supports: on any other subset the relevant complex is a cone (some vertex
lies in every facet, or in no generator, respectively), hence acyclic.
The first two routes additionally restrict each sum over a subset to the
subset's overlap components, whose homology multiplies together; component
profiles are memoized per ideal. These shortcuts are validated wholesale by
the route-equivalence test suite.

Depth comes from the projective dimension over the polynomial ring
(depth + pd = ambient size); the projective dimension of the quotient is
one more than the top nonzero homological index of the ideal's table.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ._kernels import backend, rational
from .errors import CapExceededError, ConsistencyCheckError, InvalidParameterError
from .ideals import SqfIdeal, indices_of
from .simplicial import DEFAULT_FIELD, FieldSpec, cover_profile, sr_profile

BETTI_AMBIENT_CAP = 18


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers of an ideal: entries (i, j, beta) with beta > 0."""

    ambient_n: int
    entries: tuple[tuple[int, int, int], ...]
    field_char: int

    def __post_init__(self):
        if list(self.entries) != sorted(self.entries):
            raise InvalidParameterError("entries not sorted")
        for i, j, b in self.entries:
            if i < 0 or b <= 0 or i > self.ambient_n:
                raise InvalidParameterError(f"bad entry {(i, j, b)}")

    def get(self, i: int, j: int) -> int:
        for ii, jj, b in self.entries:
            if (ii, jj) == (i, j):
                return b
        return 0

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(i, j): b for i, j, b in self.entries}

    def max_homological_index(self) -> int:
        return max(i for i, _, _ in self.entries)

    def max_shift(self) -> int:
        return max(j - i for i, j, _ in self.entries)

    def generator_degrees(self) -> list[int]:
        return sorted(j for i, j, b in self.entries if i == 0 for _ in range(b))

    def csv_rows(self) -> list[str]:
        return ["i,j,beta"] + [f"{i},{j},{b}" for i, j, b in self.entries]

    def diagram(self) -> str:
        """Text diagram with rows j - i and columns i."""
        imax = self.max_homological_index()
        shifts = sorted({j - i for i, j, _ in self.entries})
        lookup = self.as_dict()
        width = max(len(str(b)) for _, _, b in self.entries)
        width = max(width, len(str(imax)), 1) + 2
        lines = [" " * 6 + "".join(str(i).rjust(width) for i in range(imax + 1))]
        for s in range(shifts[0], shifts[-1] + 1):
            row = [str(s).rjust(4) + ": "]
            for i in range(imax + 1):
                b = lookup.get((i, i + s), 0)
                row.append((str(b) if b else ".").rjust(width))
            lines.append("".join(row))
        return "\n".join(lines)


def _table_from_dict(ambient_n: int, data: dict[tuple[int, int], int],
                     char: int) -> BettiTable:
    entries = tuple(sorted((i, j, b) for (i, j), b in data.items() if b))
    return BettiTable(ambient_n, entries, char)


def _require_proper_nonzero(ideal: SqfIdeal):
    if ideal.is_zero() or ideal.is_unit():
        raise InvalidParameterError("need a proper nonzero ideal")


def _check_cap(ideal: SqfIdeal, max_n: int | None):
    cap = BETTI_AMBIENT_CAP if max_n is None else max_n
    if ideal.ambient_n > cap:
        raise CapExceededError(
            f"Betti computation capped at {cap} variables "
            f"(got {ideal.ambient_n}); raise the cap explicitly to proceed")


def union_closure(gens) -> list[int]:
    """All unions of nonempty subsets of the given masks, sorted."""
    seen = {0}
    for g in gens:
        seen |= {s | g for s in seen}
    seen.discard(0)
    return sorted(seen)


def _trim(xs) -> list[int]:
    xs = list(xs)
    while xs and not xs[-1]:
        xs.pop()
    return xs


def _polymul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


# ---------------------------------------------------------------------------
# routes
# ---------------------------------------------------------------------------


def betti_hochster(ideal: SqfIdeal, field: FieldSpec = DEFAULT_FIELD,
                   check: bool = True, max_n: int | None = None) -> BettiTable:
    """Betti table via homology of induced Stanley-Reisner subcomplexes.

    For a subset W of the variables, the degree-W strand contributes
    dim of reduced homology in degree |W| - p - 2 to beta_(p, |W|).
    """
    _require_proper_nonzero(ideal)
    _check_cap(ideal, max_n)
    gens = list(ideal.gens)
    memo: dict[int, list[int]] = {}
    table: dict[tuple[int, int], int] = {}
    for w in union_closure(gens):
        prof = [1]
        for comp in backend.filter_split(gens, w):
            cp = memo.get(comp)
            if cp is None:
                comp_gens = [g for g in gens if g & ~comp == 0]
                cp = _trim(sr_profile(comp_gens, comp, field, check))
                memo[comp] = cp
            prof = _polymul(prof, cp)
            if not prof:
                break
        if not prof:
            continue
        q = _popcount(w)
        for t, d in enumerate(prof):
            if d:
                p = q - 1 - t
                if p < 0:
                    raise ConsistencyCheckError("homology above top dimension")
                table[(p, q)] = table.get((p, q), 0) + d
    return _table_from_dict(ideal.ambient_n, table, field.characteristic)


def betti_facet_formula(ideal: SqfIdeal, field: FieldSpec = DEFAULT_FIELD,
                        check: bool = True, max_n: int | None = None) -> BettiTable:
    """Betti table via complement complexes of induced facet subcomplexes.

    For a subset U carrying at least one generator support, the facets of
    the induced subcomplex are complemented inside U and the homology in
    degree p - 1 contributes to beta_(p, |U|).
    """
    _require_proper_nonzero(ideal)
    _check_cap(ideal, max_n)
    gens = list(ideal.gens)
    table: dict[tuple[int, int], int] = {}
    for u in union_closure(gens):
        facets = [u & ~g for g in gens if g & ~u == 0]
        prof = cover_profile(facets, field, check)
        q = _popcount(u)
        for t, d in enumerate(prof):
            if d:
                table[(t, q)] = table.get((t, q), 0) + d
    return _table_from_dict(ideal.ambient_n, table, field.characteristic)


TAYLOR_GEN_CAP = 12


def betti_taylor_oracle(ideal: SqfIdeal, field: FieldSpec = DEFAULT_FIELD,
                        check: bool = True) -> BettiTable:
    """Betti table from multidegree strands over subsets of the generators.

    In the strand of a multidegree, the chain group at homological level l
    is spanned by the l-subsets of generators whose union is exactly that
    multidegree, and boundary summands that drop the union are discarded.
    Refuses more than 12 generators (oracle scale only).
    """
    _require_proper_nonzero(ideal)
    gens = list(ideal.gens)
    ngens = len(gens)
    if ngens > TAYLOR_GEN_CAP:
        raise CapExceededError(
            f"the resolution oracle is limited to {TAYLOR_GEN_CAP} generators")
    nsub = 1 << ngens
    lcm = [0] * nsub
    for s in range(1, nsub):
        low = s & -s
        lcm[s] = lcm[s ^ low] | gens[low.bit_length() - 1]
    strata: dict[int, dict[int, list[int]]] = {}
    for s in range(1, nsub):
        strata.setdefault(lcm[s], {}).setdefault(_popcount(s), []).append(s)

    def strand_rank(cols):
        if field.characteristic == 0:
            return rational.rank_of_columns_q(cols)
        return backend.rank_of_columns(cols, field.characteristic)

    table: dict[tuple[int, int], int] = {}
    for alpha, levels in sorted(strata.items()):
        q = _popcount(alpha)
        maxlev = max(levels)
        index = {lev: {s: i for i, s in enumerate(sorted(sets))}
                 for lev, sets in levels.items()}
        cols_by_level: dict[int, list] = {}
        ranks: dict[int, int] = {}
        for lev in range(1, maxlev + 1):
            if lev not in levels:
                continue
            rows = index.get(lev - 1, {})
            cols = []
            for s in sorted(levels[lev]):
                col = []
                sign = 1
                rest = s
                while rest:
                    bit = rest & -rest
                    face = s ^ bit
                    if lcm[face] == alpha:
                        col.append((rows[face], sign))
                    sign = -sign
                    rest ^= bit
                cols.append(col)
            if check and (lev - 1) in cols_by_level:
                prev = cols_by_level[lev - 1]
                for col in cols:
                    acc: dict[int, int] = {}
                    for r, c in col:
                        for r2, c2 in prev[r]:
                            acc[r2] = acc.get(r2, 0) + c * c2
                    if any(acc.values()):
                        raise ConsistencyCheckError("strand boundary squared nonzero")
            cols_by_level[lev] = cols
            ranks[lev] = strand_rank(cols)
        for lev, sets in levels.items():
            beta_q = len(sets) - ranks.get(lev, 0) - ranks.get(lev + 1, 0)
            if beta_q < 0:
                raise ConsistencyCheckError("negative strand homology")
            if beta_q:
                key = (lev - 1, q)
                table[key] = table.get(key, 0) + beta_q
    return _table_from_dict(ideal.ambient_n, table, field.characteristic)


_ROUTES = {
    "hochster": betti_hochster,
    "facet": betti_facet_formula,
    "taylor": betti_taylor_oracle,
}


@lru_cache(maxsize=4096)
def _betti_cached(ideal: SqfIdeal, field: FieldSpec, route: str,
                  max_n: int | None) -> BettiTable:
    fn = _ROUTES[route]
    if route == "taylor":
        return fn(ideal, field)
    return fn(ideal, field, max_n=max_n)


def betti_table(ideal: SqfIdeal, field: FieldSpec = DEFAULT_FIELD,
                route: str = "hochster", max_n: int | None = None) -> BettiTable:
    """Cached Betti table of a proper nonzero ideal."""
    if route not in _ROUTES:
        raise InvalidParameterError(f"unknown route {route!r}")
    return _betti_cached(ideal, field, route, max_n)


def assert_route_agreement(ideal: SqfIdeal, field: FieldSpec = DEFAULT_FIELD,
                           max_n: int | None = None) -> BettiTable:
    """Compute the table by every applicable route and require equality."""
    hoch = betti_table(ideal, field, "hochster", max_n)
    facet = betti_table(ideal, field, "facet", max_n)
    if hoch.entries != facet.entries:
        raise ConsistencyCheckError(
            f"facet route disagrees with subset route on {ideal.to_json_dict()}")
    if ideal.n_gens() <= TAYLOR_GEN_CAP:
        taylor = betti_table(ideal, field, "taylor", max_n)
        if hoch.entries != taylor.entries:
            raise ConsistencyCheckError(
                f"resolution oracle disagrees on {ideal.to_json_dict()}")
    return hoch


# ---------------------------------------------------------------------------
# derived invariants
# ---------------------------------------------------------------------------


def regularity(ideal: SqfIdeal, field: FieldSpec = DEFAULT_FIELD,
               route: str = "hochster", max_n: int | None = None) -> int:
    """max(j - i) over nonzero table entries; the zero ideal gives 1."""
    if ideal.is_unit():
        raise InvalidParameterError("regularity of the unit ideal")
    if ideal.is_zero():
        return 1
    return betti_table(ideal, field, route, max_n).max_shift()


def pd_quotient(ideal: SqfIdeal, field: FieldSpec = DEFAULT_FIELD,
                route: str = "hochster", max_n: int | None = None) -> int:
    """Projective dimension of the quotient ring."""
    if ideal.is_unit():
        raise InvalidParameterError("projective dimension of the zero ring")
    if ideal.is_zero():
        return 0
    return 1 + betti_table(ideal, field, route, max_n).max_homological_index()


def depth_quotient(ideal: SqfIdeal, field: FieldSpec = DEFAULT_FIELD,
                   route: str = "hochster", max_n: int | None = None) -> int:
    return ideal.ambient_n - pd_quotient(ideal, field, route, max_n)


def _transversal_lower_bound(gens: list[int]) -> int:
    used = 0
    count = 0
    for g in gens:
        if not g & used:
            used |= g
            count += 1
    return count


def _min_transversal(gens: list[int]) -> int:
    """Smallest vertex set meeting every generator support (exact search)."""
    best = [len(gens)]

    def rec(remaining: list[int], count: int):
        if not remaining:
            best[0] = min(best[0], count)
            return
        if count + _transversal_lower_bound(remaining) >= best[0]:
            return
        g = min(remaining, key=_popcount)
        for v in indices_of(g):
            rec([h for h in remaining if not (h >> v) & 1], count + 1)

    rec(sorted(gens, key=_popcount), 0)
    return best[0]


def krull_dim_quotient(ideal: SqfIdeal) -> int:
    """Largest size of a variable subset containing no generator support."""
    if ideal.is_unit():
        raise InvalidParameterError("dimension of the zero ring")
    if ideal.is_zero():
        return ideal.ambient_n
    return ideal.ambient_n - _min_transversal(list(ideal.gens))


def is_cohen_macaulay(ideal: SqfIdeal, field: FieldSpec = DEFAULT_FIELD,
                      route: str = "hochster", max_n: int | None = None) -> bool:
    if ideal.is_unit():
        raise InvalidParameterError("Cohen-Macaulayness of the zero ring")
    if ideal.is_zero():
        return True
    return (depth_quotient(ideal, field, route, max_n)
            == krull_dim_quotient(ideal))


def has_linear_resolution(ideal: SqfIdeal, field: FieldSpec = DEFAULT_FIELD,
                          route: str = "hochster", max_n: int | None = None) -> bool:
    """Whether regularity equals the common generator degree."""
    _require_proper_nonzero(ideal)
    degrees = set(ideal.degrees())
    if len(degrees) != 1:
        raise InvalidParameterError("generators have mixed degrees")
    return regularity(ideal, field, route, max_n) == degrees.pop()


@dataclass(frozen=True)
class InvariantBundle:
    """Derived invariants of a quotient by a square-free ideal.

    linear_resolution is None when the generators have mixed degrees (the
    notion does not apply) or the ideal is zero.
    """

    ambient_n: int
    reg: int
    pd_quotient: int
    depth_quotient: int
    krull_dim_quotient: int
    is_cm: bool
    linear_resolution: bool | None

    def __post_init__(self):
        if self.depth_quotient + self.pd_quotient != self.ambient_n:
            raise ConsistencyCheckError("depth + pd must equal ambient size")
        if self.depth_quotient > self.krull_dim_quotient:
            raise ConsistencyCheckError("depth exceeds dimension")
        if self.is_cm != (self.depth_quotient == self.krull_dim_quotient):
            raise ConsistencyCheckError("CM flag inconsistent")

    def to_json_dict(self) -> dict:
        return {
            "ambient": self.ambient_n,
            "reg": self.reg,
            "pd": self.pd_quotient,
            "depth": self.depth_quotient,
            "dim": self.krull_dim_quotient,
            "cohen_macaulay": self.is_cm,
            "linear_resolution": self.linear_resolution,
        }


def invariant_bundle(ideal: SqfIdeal, field: FieldSpec = DEFAULT_FIELD,
                     route: str = "hochster", max_n: int | None = None
                     ) -> InvariantBundle:
    if ideal.is_unit():
        raise InvalidParameterError("invariants of the zero ring")
    n = ideal.ambient_n
    if ideal.is_zero():
        return InvariantBundle(n, 1, 0, n, n, True, None)
    reg = regularity(ideal, field, route, max_n)
    pd = pd_quotient(ideal, field, route, max_n)
    dim = krull_dim_quotient(ideal)
    depth = n - pd
    linres: bool | None = None
    if len(set(ideal.degrees())) == 1:
        linres = reg == ideal.degrees()[0]
    return InvariantBundle(n, reg, pd, depth, dim, depth == dim, linres)
