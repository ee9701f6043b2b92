"""Backend parity and exact-rank correctness."""

import random

import pytest

from matchpower._kernels import backend, pure, rational
from matchpower.errors import ConsistencyCheckError


def dense_rank_modp(cols, nrows, p):
    """Textbook dense elimination, used as the rank oracle."""
    a = [[0] * len(cols) for _ in range(nrows)]
    for c, col in enumerate(cols):
        for r, v in col:
            a[r][c] = v % p
    rank = 0
    row = 0
    for c in range(len(cols)):
        piv = next((r for r in range(row, nrows) if a[r][c] % p), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = pow(a[row][c], p - 2, p)
        a[row] = [(x * inv) % p for x in a[row]]
        for r in range(nrows):
            if r != row and a[r][c]:
                f = a[r][c]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[row])]
        row += 1
        rank += 1
    return rank


def random_columns(rng, ncols, nrows, maxnz=6):
    cols = []
    for _ in range(ncols):
        rows = rng.sample(range(nrows), rng.randint(0, min(maxnz, nrows)))
        cols.append([(r, rng.randint(-5, 5)) for r in rows])
    return cols


@pytest.mark.parametrize("p", [101, 32003])
def test_rank_against_dense_oracle(p):
    rng = random.Random(5)
    for _ in range(150):
        ncols = rng.randint(1, 20)
        nrows = rng.randint(1, 20)
        cols = random_columns(rng, ncols, nrows)
        expected = dense_rank_modp(cols, nrows, p)
        assert pure.rank_of_columns(cols, p) == expected
        assert backend.rank_of_columns(cols, p) == expected


def test_rational_rank_matches_modp_on_unimodularish():
    rng = random.Random(9)
    for _ in range(60):
        cols = random_columns(rng, rng.randint(1, 15), rng.randint(1, 15),
                              maxnz=4)
        # entries are tiny, so a 5-digit prime sees the rational rank
        assert rational.rank_of_columns_q(cols) == \
            pure.rank_of_columns(cols, 32003)


def test_enumeration_parity_random():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(2, 9)
        universe = (1 << n) - 1
        gens = sorted({sum(1 << v for v in rng.sample(range(n),
                                                      rng.randint(1, min(4, n))))
                       for _ in range(rng.randint(1, 8))})
        a = pure.sr_faces(gens, universe)
        b = backend.sr_faces(gens, universe)
        assert [list(map(int, lv)) for lv in a] == \
            [list(map(int, lv)) for lv in b]
        a = pure.cover_faces(gens)
        b = backend.cover_faces(gens)
        assert [list(map(int, lv)) for lv in a] == \
            [list(map(int, lv)) for lv in b]
        w = rng.getrandbits(n)
        assert list(pure.filter_split(gens, w)) == \
            list(backend.filter_split(gens, w))


def test_chain_data_parity_random():
    rng = random.Random(13)
    for _ in range(120):
        n = rng.randint(2, 8)
        gens = sorted({sum(1 << v for v in rng.sample(range(n),
                                                      rng.randint(1, min(3, n))))
                       for _ in range(rng.randint(1, 6))})
        levels = pure.cover_faces(gens)
        got_pure = pure.chain_data(levels, 32003)
        got_comp = backend.chain_data(levels, 32003)
        assert (list(got_pure[0]), list(got_pure[1])) == \
            (list(got_comp[0]), list(got_comp[1]))
        counts_q, ranks_q = rational.chain_data_q(levels)
        assert list(ranks_q) == list(got_pure[1])


def test_sr_faces_conventions():
    # a zero generator forbids everything: void
    assert pure.sr_faces([0], 0b111) == []
    assert backend.sr_faces([0], 0b111) == []
    # no way to extend past the generators
    levels = pure.sr_faces([0b11], 0b11)
    assert levels == [[0], [1, 2]]


def test_cover_faces_conventions():
    assert pure.cover_faces([]) == []
    assert backend.cover_faces([]) == []
    # single empty facet: the empty face only
    assert [list(lv) for lv in pure.cover_faces([0])] == [[0]]
    assert [list(map(int, lv)) for lv in backend.cover_faces([0])] == [[0]]


def test_malformed_levels_rejected():
    # a fabricated non-complex: {a,b} present without the face {b}
    levels = [[0], [1], [3]]
    with pytest.raises((ConsistencyCheckError, KeyError)):
        pure.chain_data(levels, 101)
    with pytest.raises(ConsistencyCheckError):
        backend.chain_data(levels, 101)


def test_pure_backend_end_to_end():
    """The fallback backend gives the same invariants (fresh interpreter)."""
    import os
    import subprocess
    import sys

    code = ("from matchpower import graphs, ideals, homalg\n"
            "from matchpower._kernels import backend_name\n"
            "ideal = ideals.sqf_power(graphs.cycle(7), 2)\n"
            "print(backend_name(), homalg.regularity(ideal),"
            " homalg.depth_quotient(ideal))\n")
    env = dict(os.environ, MATCHPOWER_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["pure", "5", "4"]


def test_filter_split_components():
    gens = [0b0011, 0b0110, 0b11000]
    assert list(pure.filter_split(gens, 0b11111)) == [0b0111, 0b11000]
    assert list(backend.filter_split(gens, 0b11111)) == [0b0111, 0b11000]
    assert list(pure.filter_split(gens, 0b00111)) == [0b0111]
    assert list(backend.filter_split(gens, 0b110)) == [0b110]
