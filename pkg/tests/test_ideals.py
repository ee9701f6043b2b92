"""Square-free ideal algebra and the matching-power identities."""

import pytest

from matchpower import graphs as gr
from matchpower import ideals as idl
from matchpower import identities as ident
from matchpower.errors import InvalidParameterError


def mono(n, *vs):
    return idl.SqfMonomial.from_indices(n, vs)


def test_edge_ideal_examples():
    p3 = idl.edge_ideal(gr.path(3))
    assert p3.to_json_dict() == {"ambient": 3, "gens": [[0, 1], [1, 2]]}
    assert idl.edge_ideal(gr.cycle(3)).n_gens() == 3
    assert idl.edge_ideal(gr.from_edges(4, [])).is_zero()


def test_sqf_power_examples():
    p4 = gr.path(4)
    assert idl.sqf_power(p4, 2).gens == (0b1111,)
    assert idl.sqf_power(gr.cycle(5), 3).is_zero()
    assert idl.equals(idl.sqf_power(p4, 1), idl.edge_ideal(p4))
    assert idl.sqf_power(p4, 0).is_unit()
    # all generators have degree exactly 2k
    for g in (gr.cycle(6), gr.whisker(gr.path(3))):
        nu = gr.matching_number(g)
        for k in range(1, nu + 1):
            assert set(idl.sqf_power(g, k).degrees()) == {2 * k}


def test_power_zero_iff_above_matching_number():
    for g in (gr.path(5), gr.cycle(6), gr.whisker(gr.path(2))):
        nu = gr.matching_number(g)
        for k in range(0, nu + 3):
            assert idl.sqf_power(g, k).is_zero() == (k > nu)


def test_minimalize():
    xy = mono(3, 0, 1)
    xyz = mono(3, 0, 1, 2)
    assert idl.minimalize([xy, xyz]).gens == (xy.mask,)
    assert idl.minimalize([]).is_zero()
    yz = mono(3, 1, 2)
    assert idl.minimalize([xy, yz, xy]).n_gens() == 2
    with pytest.raises(InvalidParameterError):
        idl.minimalize([mono(3, 0), mono(4, 0)])


def test_canonical_form_rejected_when_not_minimal():
    with pytest.raises(InvalidParameterError):
        idl.SqfIdeal(3, (0b011, 0b111))
    with pytest.raises(InvalidParameterError):
        idl.SqfIdeal(3, (0b110, 0b011))  # out of order


def test_colon():
    princ = idl.sqf_power(gr.path(4), 2)
    assert idl.colon(princ, mono(4, 1, 2)).gens == (0b1001,)
    # coloning by a variable outside every generator keeps the ideal
    box = idl.make_ideal(4, [0b0011])
    assert idl.equals(idl.colon(box, mono(4, 3)), box)
    assert idl.colon(idl.zero_ideal(3), mono(3, 1)).is_zero()


def test_add():
    n = 3
    xy = idl.make_ideal(n, [0b011])
    x = idl.make_ideal(n, [0b001])
    assert idl.equals(idl.add(xy, x), x)
    assert idl.equals(idl.add(xy, idl.zero_ideal(n)), xy)
    both = idl.add(idl.make_ideal(n, [0b011]), idl.make_ideal(n, [0b110]))
    assert both.n_gens() == 2
    with pytest.raises(InvalidParameterError):
        idl.add(xy, idl.make_ideal(4, [0b11]))


def test_equals_and_determinism():
    a = idl.sqf_power(gr.cycle(4), 2)
    b = idl.sqf_power(gr.cycle(4), 2)
    assert idl.equals(a, b)
    assert a.gens == (0b1111,)
    assert not idl.equals(idl.make_ideal(3, [0b011, 0b110]),
                          idl.make_ideal(3, [0b011]))


def test_unit_vs_zero_distinct():
    assert idl.unit_ideal(3) != idl.zero_ideal(3)
    assert idl.unit_ideal(3).is_unit()
    assert not idl.unit_ideal(3).is_zero()


def test_membership():
    ideal = idl.edge_ideal(gr.path(3))
    assert ideal.contains(mono(3, 0, 1))
    assert ideal.contains(mono(3, 0, 1, 2))
    assert not ideal.contains(mono(3, 0, 2))


def test_json_roundtrip():
    ideal = idl.sqf_power(gr.cycle(5), 2)
    again = idl.SqfIdeal.from_json_dict(ideal.to_json_dict())
    assert idl.equals(ideal, again)


def test_colon_identity_edge_examples():
    left, right = idl.colon_identity_edge(gr.path(4), 2, 1, 2)
    assert idl.equals(left, right)
    assert left.gens == (0b1001,)
    # cycles colon down to a rewired cycle two shorter
    c7 = gr.cycle(7)
    left, right = idl.colon_identity_edge(c7, 2, 0, 1)
    assert idl.equals(left, right)
    rewired = [(u, v) for u, v in c7.edges() if 0 not in (u, v) and 1 not in (u, v)]
    rewired.append((2, 6))
    assert idl.equals(left, idl.power_of_edges(7, rewired, 1))
    with pytest.raises(InvalidParameterError):
        idl.colon_identity_edge(gr.path(4), 2, 0, 2)


def test_colon_identity_vertex_examples():
    left, right = idl.colon_identity_vertex(gr.path(5), 2, 2)
    assert idl.equals(left, right)
    left, right = idl.colon_identity_vertex(gr.cycle(5), 2, 0)
    assert idl.equals(left, right)
    # isolated vertex: both sides are the power itself
    g = gr.from_edges(5, [(0, 1), (2, 3)])
    left, right = idl.colon_identity_vertex(g, 2, 4)
    assert idl.equals(left, right)
    assert idl.equals(left, idl.sqf_power(g, 2))


def test_colon_identity_star_examples():
    left, right = idl.colon_identity_star(gr.path(5), 2, 2)
    assert idl.equals(left, right)
    # near the path's end the star colon leaves a shorter path plus variables
    left, right = idl.colon_identity_star(gr.path(7), 2, 5)
    assert idl.equals(left, right)
    expect = idl.add(idl.power_of_edges(7, gr.path(4).edges(), 2),
                     idl.vars_ideal(7, [4, 6]))
    assert idl.equals(right, expect)
    # degree-zero colon vertex reduces to the plain power
    g = gr.from_edges(5, [(0, 1), (2, 3)])
    left, right = idl.colon_identity_star(g, 2, 4)
    assert idl.equals(left, right)
    assert idl.equals(left, idl.sqf_power(g, 2))


def test_bruteforce_power_crosscheck():
    result = ident.suite_power_bruteforce(trials=80, seed=4)
    assert result.ok(), result.failures[:3]


def test_randomized_identity_suites():
    for name in ("colon-by-edge", "colon-by-vertex", "colon-by-vertex-star",
                 "vertex-deletion", "second-power-colon-union",
                 "colon-sum-exchange"):
        result = ident.ALL_SUITES[name](60, 11)
        assert result.ok(), (name, result.failures[:3])
