"""Complex constructions and exact reduced homology."""

import random

import pytest

from matchpower import graphs as gr
from matchpower import ideals as idl
from matchpower import simplicial as sc
from matchpower.errors import InvalidParameterError


def test_field_spec():
    sc.FieldSpec(0)
    sc.FieldSpec(32003)
    sc.FieldSpec(101)
    for bad in (1, 2, 4, 32004):
        with pytest.raises(InvalidParameterError):
            sc.FieldSpec(bad)


def test_facet_complex():
    d = sc.facet_complex(idl.edge_ideal(gr.path(3)))
    assert d.to_json_dict() == {"vertices": [0, 1, 2],
                                "facets": [[0, 1], [1, 2]]}
    big = sc.facet_complex(idl.sqf_power(gr.cycle(13), 2))
    assert {len(f) for f in big.facets} == {4}
    assert len(big.facets) == 65
    assert sc.facet_complex(idl.zero_ideal(4)).is_void()
    with pytest.raises(InvalidParameterError):
        sc.facet_complex(idl.unit_ideal(3))


def test_stanley_reisner_complex():
    five = sc.stanley_reisner_complex(idl.edge_ideal(gr.cycle(5)))
    assert [sorted(f) for f in five.facets] == [[0, 2], [0, 3], [1, 3],
                                                [1, 4], [2, 4]]
    full = sc.stanley_reisner_complex(idl.zero_ideal(4))
    assert full.facets == (frozenset({0, 1, 2, 3}),)
    pts = sc.stanley_reisner_complex(idl.edge_ideal(gr.path(2)))
    assert [sorted(f) for f in pts.facets] == [[0], [1]]
    with pytest.raises(InvalidParameterError):
        sc.stanley_reisner_complex(idl.unit_ideal(2))


def test_induced_subcomplex():
    d = sc.facet_complex(idl.sqf_power(gr.cycle(13), 2))
    assert sc.induced_subcomplex(d, d.vertex_set) == d
    assert sc.induced_subcomplex(d, set()).is_void()
    # no generator support on six spread-out cycle vertices
    u = d.vertex_set - {3, 4, 6, 7, 9, 10, 12}
    assert sc.induced_subcomplex(d, u).is_void()
    with pytest.raises(InvalidParameterError):
        sc.induced_subcomplex(d, {99})


def test_complement_complex():
    u = frozenset({0, 1, 2})
    d = sc.complex_from_facets(u, [u])
    c = sc.complement_complex(d, u)
    assert c.is_irrelevant()
    d = sc.complex_from_facets(u, [{0, 1}, {1, 2}])
    c = sc.complement_complex(d, u)
    assert [sorted(f) for f in c.facets] == [[0], [2]]
    with pytest.raises(InvalidParameterError):
        sc.complement_complex(d, {0, 1})


def test_complement_complex_contains_example_face():
    # the complement of the 13-cycle pair complex keeps the face that
    # avoids one specific generator
    d = sc.facet_complex(idl.sqf_power(gr.cycle(13), 2))
    c = sc.complement_complex(d, d.vertex_set)
    face = frozenset({4, 6, 7, 9, 10, 12})
    assert any(face <= f for f in c.facets)


def test_reduced_homology_conventions():
    tri = sc.complex_from_facets(range(3), [{0, 1}, {0, 2}, {1, 2}])
    prof = sc.reduced_homology(tri)
    assert prof.dims == (0, 0, 1)
    assert prof.reduced(1) == 1 and prof.reduced(0) == 0
    simplex = sc.complex_from_facets(range(4), [{0, 1, 2, 3}])
    assert sc.reduced_homology(simplex).is_trivial()
    pts = sc.complex_from_facets(range(2), [{0}, {1}])
    assert sc.reduced_homology(pts).dims == (0, 1)
    assert sc.reduced_homology(sc.void_complex({0, 1})).dims == ()
    irr = sc.complex_from_facets(range(2), [frozenset()])
    assert sc.reduced_homology(irr).dims == (1,)


def test_homology_cone_is_trivial():
    rng = random.Random(41)
    for _ in range(30):
        n = rng.randint(2, 7)
        facets = [set(rng.sample(range(n), rng.randint(1, n)))
                  for _ in range(rng.randint(1, 6))]
        apex = n
        coned = [f | {apex} for f in facets]
        d = sc.complex_from_facets(range(n + 1), coned)
        assert sc.reduced_homology(d).is_trivial()


def test_homology_char_independence_on_corpus():
    ideals = [idl.edge_ideal(gr.cycle(5)),
              idl.sqf_power(gr.path(6), 2),
              idl.sqf_power(gr.whisker(gr.path(3)), 2)]
    for ideal in ideals:
        d = sc.facet_complex(ideal)
        c0 = sc.reduced_homology(d, sc.RATIONAL_FIELD)
        cp = sc.reduced_homology(d, sc.DEFAULT_FIELD)
        assert c0.dims == cp.dims


def test_complement_involution_on_spanning_antichains():
    rng = random.Random(42)
    done = 0
    while done < 30:
        n = rng.randint(3, 8)
        u = frozenset(range(n))
        size = rng.randint(1, n - 1)
        facets = {frozenset(rng.sample(range(n), size))
                  for _ in range(rng.randint(2, 6))}
        d = sc.complex_from_facets(u, facets)
        if len(d.facets) != len(facets):
            continue  # reduction dropped one; complement would not invert
        c = sc.complement_complex(d, u)
        if len(c.facets) != len(facets):
            continue
        back = sc.complement_complex(c, u)
        assert back == d
        done += 1


def test_sphere_homology():
    # boundary of the (k+1)-simplex is a k-sphere
    for k in (1, 2, 3):
        verts = range(k + 2)
        facets = [set(verts) - {v} for v in verts]
        d = sc.complex_from_facets(verts, facets)
        prof = sc.reduced_homology(d)
        assert prof.reduced(k) == 1
        assert sum(prof.dims) == 1


def test_exact_rank():
    assert sc.exact_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert sc.exact_rank([[0, 0], [0, 0]]) == 0
    assert sc.exact_rank([[1, 0], [-1, 1], [0, -1]]) == 2
    assert sc.exact_rank([[2, 4], [1, 2]], sc.RATIONAL_FIELD) == 1


def test_profile_rejects_negative():
    with pytest.raises(InvalidParameterError):
        sc.HomologyProfile((1, -1), 0)
