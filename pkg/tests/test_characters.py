from itertools import combinations, combinations_with_replacement, product
from math import comb

import pytest

from veroschur.characters import (NotACharacter, SchurExpansion, WeightTable,
                                  char_sym_sym, char_tensor_sym, char_wedge_sym,
                                  complexity, is_dominant, monomials, orbit_size,
                                  schur_character, schur_decompose,
                                  tensor_with_sym, total_multiplicity)
from veroschur.config import CapExceeded, RunConfig
from veroschur.partitions import gl_dimension, partitions_of
from veroschur.tableaux import kostka


def brute_tensor_table(p, d, n):
    """Oracle: enumerate ordered tuples of degree-d exponent vectors."""
    table = {}
    for tup in product(monomials(d, n), repeat=p):
        w = tuple(sum(v) for v in zip(*tup))
        if is_dominant(w):
            table[w] = table.get(w, 0) + 1
    return table


def brute_wedge_table(p, d, n):
    table = {}
    for tup in combinations(monomials(d, n), p):
        w = tuple(sum(v) for v in zip(*tup))
        if is_dominant(w):
            table[w] = table.get(w, 0) + 1
    return table


def brute_sym_table(p, d, n):
    table = {}
    for tup in combinations_with_replacement(monomials(d, n), p):
        w = tuple(sum(v) for v in zip(*tup))
        if is_dominant(w):
            table[w] = table.get(w, 0) + 1
    return table


def test_monomial_order():
    assert monomials(2, 2) == ((2, 0), (1, 1), (0, 2))
    ms = monomials(3, 3)
    assert ms == tuple(sorted(ms, reverse=True))
    assert len(ms) == comb(3 + 2, 2)


def test_char_tensor_examples():
    t = char_tensor_sym(2, 1, 2)
    assert t.entries == {(1, 1): 2, (2, 0): 1}
    t = char_tensor_sym(2, 2, 2)
    assert t.entries == {(4, 0): 1, (3, 1): 2, (2, 2): 3}


@pytest.mark.parametrize("p,d,n", [(2, 2, 2), (3, 2, 2), (2, 3, 3), (3, 2, 3)])
def test_char_tables_against_brute_force(p, d, n):
    assert char_tensor_sym(p, d, n).entries == brute_tensor_table(p, d, n)
    assert char_wedge_sym(p, d, n).entries == brute_wedge_table(p, d, n)
    assert char_sym_sym(p, d, n).entries == brute_sym_table(p, d, n)


def test_char_dimensions():
    for p, d, n in [(2, 2, 2), (3, 2, 3), (2, 4, 3)]:
        dim_s = comb(d + n - 1, n - 1)
        assert char_tensor_sym(p, d, n).dimension() == dim_s ** p
        assert char_wedge_sym(p, d, n).dimension() == comb(dim_s, p)
        assert char_sym_sym(p, d, n).dimension() == comb(dim_s + p - 1, p)


def test_wedge_beyond_dimension_empty():
    assert char_wedge_sym(4, 1, 2).entries == {}  # dim Sym^1 C^2 = 2 < 4


def test_schur_decompose_examples():
    assert schur_decompose(char_sym_sym(1, 3, 2)).terms == {(3,): 1}
    assert schur_decompose(char_tensor_sym(2, 2, 2)).terms == \
        {(4,): 1, (3, 1): 1, (2, 2): 1}
    assert schur_decompose(char_wedge_sym(2, 2, 2)).terms == {(3, 1): 1}
    assert schur_decompose(char_sym_sym(2, 2, 2)).terms == {(4,): 1, (2, 2): 1}


def test_tensor_square_closed_form():
    from veroschur.partitions import normalize
    for d in (1, 2, 3, 5, 8):
        e = schur_decompose(char_tensor_sym(2, d, 2))
        assert e.terms == {normalize((2 * d - a, a)): 1 for a in range(d + 1)}
        assert total_multiplicity(e) == complexity(e) == d + 1


def test_kostka_consistency():
    for p in (2, 3, 4):
        for d in (1, 2, 3, 4, 5):
            e = schur_decompose(char_tensor_sym(p, d, p))
            for lam in partitions_of(p * d, max_parts=p):
                assert e.multiplicity(lam) == kostka(lam, (d,) * p)


def test_support_is_bounded_length():
    for p in (2, 3, 4):
        for d in (1, 2, 3, 4, 5):
            e = schur_decompose(char_tensor_sym(p, d, p + 1))
            expected = {lam for lam in partitions_of(p * d, max_parts=p)}
            assert set(e.terms) == expected


def test_functorial_sum_p2():
    # tensor square = sym + wedge on the nose
    for d in (2, 3, 4):
        t = char_tensor_sym(2, d, 2)
        s = char_sym_sym(2, d, 2)
        w = char_wedge_sym(2, d, 2)
        assert t.sub(s).entries == w.entries


def test_functorial_sum_p3():
    # tensor cube = sym + wedge + two copies of the mixed functor
    for d in (2, 3, 4):
        t = char_tensor_sym(3, d, 3)
        s = char_sym_sym(3, d, 3)
        w = char_wedge_sym(3, d, 3)
        mixed2 = t.sub(s).sub(w)
        assert all(v % 2 == 0 for v in mixed2.entries.values())
        mixed = WeightTable(3, 3 * d,
                            {k: v // 2 for k, v in mixed2.entries.items()})
        e = schur_decompose(mixed)
        assert all(c > 0 for c in e.terms.values())
        nt = total_multiplicity(schur_decompose(t))
        ns = total_multiplicity(schur_decompose(s))
        nw = total_multiplicity(schur_decompose(w))
        assert nt == ns + nw + 2 * total_multiplicity(e)


def test_schur_decompose_rejects_non_characters():
    # highest weight (2,0) without its (1,1) weight space
    bad = WeightTable(2, 2, {(2, 0): 1})
    with pytest.raises(NotACharacter):
        schur_decompose(bad)


def test_schur_character_matches_kostka():
    t = schur_character((3, 1), 3)
    for mu in partitions_of(4, max_parts=3):
        assert t.get(mu + (0,) * (3 - len(mu))) == kostka((3, 1), mu)


def test_tensor_with_sym():
    e = SchurExpansion(2, 3, {(3,): 1})
    assert tensor_with_sym(e, 3).terms == {(6,): 1, (5, 1): 1, (4, 2): 1,
                                           (3, 3): 1}
    assert tensor_with_sym(e, 0).terms == e.terms
    e2 = SchurExpansion(2, 4, {(3, 1): 1})
    # (4,1) and (3,2) survive at n=2, the length-3 strip result is cut
    assert tensor_with_sym(e2, 1).terms == {(4, 1): 1, (3, 2): 1}


def test_tensor_with_sym_truncation():
    e = SchurExpansion(2, 4, {(3, 1): 1})
    out = tensor_with_sym(e, 1)
    assert set(out.terms) == {(4, 1), (3, 2)}


def test_dimension_conservation_via_pieri():
    base = schur_decompose(char_tensor_sym(2, 3, 2)).with_n(3)
    out = tensor_with_sym(base, 2)
    dim_s = comb(3 + 2, 2) ** 2 * comb(2 + 2, 2)
    assert out.dimension() == dim_s


def test_orbit_size():
    assert orbit_size((2, 1, 0)) == 6
    assert orbit_size((1, 1, 0)) == 3
    assert orbit_size((2, 2, 2)) == 1


def test_caps_are_loud():
    tiny = RunConfig(max_table_entries=5)
    with pytest.raises(CapExceeded):
        char_tensor_sym(3, 4, 3, tiny)


def test_weight_table_validation():
    with pytest.raises(ValueError):
        WeightTable(2, 4, {(1, 3): 1})  # not dominant
    with pytest.raises(ValueError):
        WeightTable(2, 4, {(2, 1): 1})  # wrong degree
    with pytest.raises(ValueError):
        SchurExpansion(2, 4, {(1, 1, 1, 1): 1})  # too long


def test_expansion_dimension():
    e = schur_decompose(char_tensor_sym(3, 2, 3))
    assert e.dimension() == comb(2 + 2, 2) ** 3
    assert e.dimension() == sum(c * gl_dimension(lam, 3)
                                for lam, c in e.terms.items())
