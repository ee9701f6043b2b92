"""Randomized identity and property suites.

Each suite draws seeded random instances, checks an algebraic identity or
inequality, and reports reproducer data for any failure. The suites back
both the test suite and the `identities` CLI subcommand.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import graphs as gr
from . import homalg as ha
from . import ideals as idl
from .errors import InvalidParameterError
from .simplicial import DEFAULT_FIELD, FieldSpec


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, repro: dict):
        self.cases += 1
        if not ok:
            self.failures.append(repro)

    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {"name": self.name, "cases": self.cases,
                "failures": self.failures}


def _random_graph(rng: random.Random, max_n: int = 10,
                  min_edges: int = 1) -> gr.Graph:
    while True:
        n = rng.randint(2, max_n)
        prob = rng.choice((0.2, 0.3, 0.45))
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < prob]
        if len(edges) >= min_edges:
            return gr.from_edges(n, edges)


def _random_ideal(rng: random.Random, max_n: int = 8) -> idl.SqfIdeal:
    n = rng.randint(2, max_n)
    gens = set()
    for _ in range(rng.randint(1, 6)):
        deg = rng.randint(1, min(4, n))
        gens.add(idl.mask_of(rng.sample(range(n), deg)))
    return idl.make_ideal(n, gens)


def _graph_repro(g: gr.Graph, **extra) -> dict:
    return {"n": g.n_vertices, "edges": g.edges(), **extra}


# ---------------------------------------------------------------------------
# ideal-level identities
# ---------------------------------------------------------------------------


def suite_power_bruteforce(trials: int, seed: int) -> SuiteResult:
    """Matching powers agree with square-free minimal generators of the

    ordinary power, expanded by brute force (small edge counts)."""
    res = SuiteResult("power-vs-bruteforce")
    rng = random.Random(seed)
    while res.cases < trials:
        g = _random_graph(rng, max_n=6)
        if g.n_edges() > 6:
            continue
        nu = gr.matching_number(g)
        for k in range(0, nu + 2):
            ok = idl.equals(idl.sqf_power(g, k), idl.sqf_power_bruteforce(g, k))
            res.record(ok, _graph_repro(g, k=k))
    return res


def suite_colon_edge(trials: int, seed: int) -> SuiteResult:
    res = SuiteResult("colon-by-edge")
    # pinned regression: the 4-path at k=2 colons down to its end pair
    l, r = idl.colon_identity_edge(gr.path(4), 2, 1, 2)
    res.record(idl.equals(l, r) and l.gens == (0b1001,),
               {"pinned": "path4-k2-middle-edge"})
    rng = random.Random(seed)
    while res.cases < trials:
        g = _random_graph(rng, max_n=10)
        nu = gr.matching_number(g)
        if nu < 2:
            continue
        x, y = rng.choice(g.edges())
        k = rng.randint(2, nu)
        l, r = idl.colon_identity_edge(g, k, x, y)
        res.record(idl.equals(l, r), _graph_repro(g, k=k, edge=(x, y)))
    return res


def suite_colon_vertex(trials: int, seed: int) -> SuiteResult:
    res = SuiteResult("colon-by-vertex")
    rng = random.Random(seed)
    while res.cases < trials:
        g = _random_graph(rng, max_n=10)
        nu = gr.matching_number(g)
        if nu < 2:
            continue
        x = rng.randrange(g.n_vertices)
        k = rng.randint(2, nu)
        l, r = idl.colon_identity_vertex(g, k, x)
        res.record(idl.equals(l, r), _graph_repro(g, k=k, vertex=x))
    return res


def suite_colon_star(trials: int, seed: int) -> SuiteResult:
    res = SuiteResult("colon-by-vertex-star")
    rng = random.Random(seed)
    while res.cases < trials:
        g = _random_graph(rng, max_n=10)
        nu = gr.matching_number(g)
        if nu < 1:
            continue
        x = rng.randrange(g.n_vertices)
        k = rng.randint(1, nu)
        l, r = idl.colon_identity_star(g, k, x)
        res.record(idl.equals(l, r), _graph_repro(g, k=k, vertex=x))
    return res


def suite_vertex_deletion(trials: int, seed: int) -> SuiteResult:
    """I(G)^[k] + <x> agrees with the deletion power plus <x>."""
    res = SuiteResult("vertex-deletion")
    rng = random.Random(seed)
    while res.cases < trials:
        g = _random_graph(rng, max_n=10)
        nu = gr.matching_number(g)
        if nu < 1:
            continue
        x = rng.randrange(g.n_vertices)
        k = rng.randint(1, nu)
        l, r = idl.deletion_identity(g, k, x)
        res.record(idl.equals(l, r), _graph_repro(g, k=k, vertex=x))
    return res


def suite_second_power_union(trials: int, seed: int) -> SuiteResult:
    """At k = 2 the colon by an edge is the edge ideal of a single rewired

    graph: delete both endpoints and join all remaining neighbors of one
    endpoint to all remaining neighbors of the other."""
    res = SuiteResult("second-power-colon-union")
    rng = random.Random(seed)
    while res.cases < trials:
        g = _random_graph(rng, max_n=10)
        if gr.matching_number(g) < 2:
            continue
        x, y = rng.choice(g.edges())
        n = g.n_vertices
        left = idl.colon(idl.sqf_power(g, 2),
                         idl.SqfMonomial.from_indices(n, [x, y]))
        rewired = [(u, v) for u, v in g.edges() if x not in (u, v) and y not in (u, v)]
        for a in g.adjacency[x]:
            for b in g.adjacency[y]:
                if a != b and a not in (x, y) and b not in (x, y):
                    rewired.append((min(a, b), max(a, b)))
        right = idl.power_of_edges(n, rewired, 1)
        res.record(idl.equals(left, right), _graph_repro(g, edge=(x, y)))
    return res


def suite_comma_exchange(trials: int, seed: int) -> SuiteResult:
    """((I + <x_1..x_{r-1}>) : x_r) = (I : x_r) + <x_1..x_{r-1}>."""
    res = SuiteResult("colon-sum-exchange")
    rng = random.Random(seed)
    while res.cases < trials:
        ideal = _random_ideal(rng)
        n = ideal.ambient_n
        r = rng.randint(1, min(4, n))
        vs = rng.sample(range(n), r)
        front, last = vs[:-1], vs[-1]
        lhs = idl.colon(idl.add(ideal, idl.vars_ideal(n, front)),
                        idl.SqfMonomial.from_indices(n, [last]))
        rhs = idl.add(idl.colon(ideal, idl.SqfMonomial.from_indices(n, [last])),
                      idl.vars_ideal(n, front))
        res.record(idl.equals(lhs, rhs),
                   {"ideal": ideal.to_json_dict(), "vars": vs})
    return res


# ---------------------------------------------------------------------------
# regularity / depth lemmas
# ---------------------------------------------------------------------------


def _shift_ideal(ideal: idl.SqfIdeal, offset: int, ambient: int) -> idl.SqfIdeal:
    return idl.make_ideal(ambient, [g << offset for g in ideal.gens])


def _embed(ideal: idl.SqfIdeal, ambient: int) -> idl.SqfIdeal:
    return idl.make_ideal(ambient, ideal.gens)


def suite_disjoint_sum(trials: int, seed: int,
                       field: FieldSpec = DEFAULT_FIELD) -> SuiteResult:
    """Regularity adds minus one, and depth adds, across disjoint variables."""
    res = SuiteResult("disjoint-variable-sums")
    rng = random.Random(seed)
    while res.cases < trials:
        a = _random_ideal(rng, max_n=5)
        b = _random_ideal(rng, max_n=5)
        if a.is_unit() or b.is_unit():
            continue
        n = a.ambient_n + b.ambient_n
        joined = idl.add(_embed(a, n), _shift_ideal(b, a.ambient_n, n))
        reg_ok = (ha.regularity(joined, field)
                  == ha.regularity(a, field) + ha.regularity(b, field) - 1)
        depth_ok = (ha.depth_quotient(joined, field)
                    == ha.depth_quotient(a, field) + ha.depth_quotient(b, field))
        res.record(reg_ok and depth_ok,
                   {"a": a.to_json_dict(), "b": b.to_json_dict()})
    return res


def suite_extra_variables(trials: int, seed: int,
                          field: FieldSpec = DEFAULT_FIELD) -> SuiteResult:
    """Adding generators x_{m+1}..x_r in a larger ring shifts depth by n - r."""
    res = SuiteResult("extra-variables-depth")
    rng = random.Random(seed)
    while res.cases < trials:
        j = _random_ideal(rng, max_n=5)
        if j.is_unit():
            continue
        m = j.ambient_n
        extra = rng.randint(0, 3)
        pad = rng.randint(0, 3)
        n = m + extra + pad
        big = idl.add(_embed(j, n), idl.vars_ideal(n, range(m, m + extra)))
        ok = (ha.depth_quotient(big, field)
              == ha.depth_quotient(j, field) + pad)
        res.record(ok, {"ideal": j.to_json_dict(), "extra": extra, "pad": pad})
    return res


def suite_reg_colon_bounds(trials: int, seed: int,
                           field: FieldSpec = DEFAULT_FIELD) -> SuiteResult:
    """reg(I + <x>) <= reg(I), reg(I : x) <= reg(I), and the colon/sum

    upper bound reg(I) <= max(reg(I:m) + deg m, reg(I + <m>))."""
    res = SuiteResult("regularity-colon-bounds")
    rng = random.Random(seed)
    while res.cases < trials:
        ideal = _random_ideal(rng)
        if ideal.is_unit() or ideal.is_zero():
            continue
        n = ideal.ambient_n
        reg = ha.regularity(ideal, field)
        x = rng.randrange(n)
        xm = idl.SqfMonomial.from_indices(n, [x])
        plus = idl.add(ideal, idl.vars_ideal(n, [x]))
        ok = ha.regularity(plus, field) <= reg
        col = idl.colon(ideal, xm)
        if not col.is_unit():
            ok = ok and ha.regularity(col, field) <= reg
        deg = rng.randint(1, min(3, n))
        m = idl.SqfMonomial.from_indices(n, rng.sample(range(n), deg))
        colm = idl.colon(ideal, m)
        summ = idl.add(ideal, idl.make_ideal(n, [m.mask]))
        bound = []
        if not colm.is_unit():
            bound.append(ha.regularity(colm, field) + deg)
        if not summ.is_unit():
            bound.append(ha.regularity(summ, field))
        if bound:
            ok = ok and reg <= max(bound)
        res.record(ok, {"ideal": ideal.to_json_dict(), "x": x,
                        "m": m.support()})
    return res


def suite_depth_membership(trials: int, seed: int,
                           field: FieldSpec = DEFAULT_FIELD) -> SuiteResult:
    """depth(R/I) sits among the depths after adding or coloning a monomial."""
    res = SuiteResult("depth-colon-membership")
    rng = random.Random(seed)
    while res.cases < trials:
        ideal = _random_ideal(rng)
        if ideal.is_unit() or ideal.is_zero():
            continue
        n = ideal.ambient_n
        deg = rng.randint(1, min(3, n))
        f = idl.SqfMonomial.from_indices(n, rng.sample(range(n), deg))
        d = ha.depth_quotient(ideal, field)
        plus = idl.add(ideal, idl.make_ideal(n, [f.mask]))
        d_plus = ha.depth_quotient(plus, field)
        col = idl.colon(ideal, f)
        repro = {"ideal": ideal.to_json_dict(), "f": f.support()}
        if col.is_unit():
            # f lies in the ideal, so adding it changes nothing
            res.record(d == d_plus, repro)
            continue
        d_col = ha.depth_quotient(col, field)
        ok = (d in (d_plus, d_col)) and d >= min(d_plus, d_col)
        if not ideal.contains(f):
            ok = ok and d <= d_col
        res.record(ok, repro)
    return res


def suite_top_power_depth(trials: int, seed: int,
                          field: FieldSpec = DEFAULT_FIELD) -> SuiteResult:
    """depth of the quotient by the highest matching power is 2 nu - 1,

    plus one free variable per isolated vertex."""
    res = SuiteResult("top-power-depth")
    rng = random.Random(seed)
    while res.cases < trials:
        g = _random_graph(rng, max_n=8)
        nu = gr.matching_number(g)
        if nu < 1:
            continue
        isolated = sum(1 for v in range(g.n_vertices) if g.degree(v) == 0)
        top = idl.sqf_power(g, nu)
        ok = ha.depth_quotient(top, field) == 2 * nu - 1 + isolated
        res.record(ok, _graph_repro(g, nu=nu))
    return res


def suite_reg_induced_monotone(trials: int, seed: int,
                               field: FieldSpec = DEFAULT_FIELD) -> SuiteResult:
    """Regularity of powers never drops when passing to an induced subgraph."""
    res = SuiteResult("regularity-induced-monotone")
    rng = random.Random(seed)
    while res.cases < trials:
        g = _random_graph(rng, max_n=8)
        nu = gr.matching_number(g)
        if nu < 1:
            continue
        k = rng.randint(1, nu)
        drop = rng.sample(range(g.n_vertices),
                          rng.randint(1, g.n_vertices - 1))
        h = gr.delete_vertices(g, drop)
        big = idl.sqf_power(g, k)
        small = idl.sqf_power(h, k)
        ok = ha.regularity(small, field) <= ha.regularity(big, field)
        res.record(ok, _graph_repro(g, k=k, dropped=sorted(drop)))
    return res


def suite_route_agreement(trials: int, seed: int,
                          field: FieldSpec = DEFAULT_FIELD) -> SuiteResult:
    """The independent Betti routes agree entrywise on random ideals."""
    res = SuiteResult("betti-route-agreement")
    rng = random.Random(seed)
    while res.cases < trials:
        ideal = _random_ideal(rng, max_n=7)
        if not ideal.is_proper_nonzero():
            continue
        try:
            ha.assert_route_agreement(ideal, field)
            res.record(True, {})
        except Exception:
            res.record(False, {"ideal": ideal.to_json_dict()})
    return res


ALL_SUITES = {
    "power-vs-bruteforce": suite_power_bruteforce,
    "colon-by-edge": suite_colon_edge,
    "colon-by-vertex": suite_colon_vertex,
    "colon-by-vertex-star": suite_colon_star,
    "vertex-deletion": suite_vertex_deletion,
    "second-power-colon-union": suite_second_power_union,
    "colon-sum-exchange": suite_comma_exchange,
    "disjoint-variable-sums": suite_disjoint_sum,
    "extra-variables-depth": suite_extra_variables,
    "regularity-colon-bounds": suite_reg_colon_bounds,
    "depth-colon-membership": suite_depth_membership,
    "top-power-depth": suite_top_power_depth,
    "regularity-induced-monotone": suite_reg_induced_monotone,
    "betti-route-agreement": suite_route_agreement,
}


def run_suites(trials: int = 200, seed: int = 0,
               names=None, per_suite_trials=None) -> list[SuiteResult]:
    """Run the named suites (all by default) at the given trial count.

    per_suite_trials overrides the count for specific expensive suites.
    """
    chosen = list(ALL_SUITES) if names is None else list(names)
    out = []
    for name in chosen:
        fn = ALL_SUITES.get(name)
        if fn is None:
            raise InvalidParameterError(f"unknown suite {name!r}")
        count = (per_suite_trials or {}).get(name, trials)
        out.append(fn(count, seed))
    return out
