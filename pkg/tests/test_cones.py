from fractions import Fraction

import pytest

from veroschur.characters import (char_tensor_sym, complexity, schur_decompose,
                                  total_multiplicity)
from veroschur.cones import (content_cone_section,
                             content_points_as_matrices, enumerate_slice,
                             fit_leading_coefficient, lattice_count,
                             max_multiplicity, max_multiplicity_report,
                             moment_map, shape_cone_section)
from veroschur.config import CapExceeded, RunConfig
from veroschur.partitions import count_partitions, normalize, partitions_of
from veroschur.tableaux import kostka, matrix_to_tableau


def test_shape_cone_small():
    cone = shape_cone_section(2)
    assert cone.ambient_dim == 1
    assert cone.upper_bounds == (Fraction(1),)
    assert [lattice_count(cone, d) for d in (0, 1, 2, 5)] == [1, 2, 3, 6]


def test_content_cone_small():
    cone = content_cone_section(2)
    assert cone.ambient_dim == 1
    assert [lattice_count(cone, d) for d in (0, 1, 2, 5)] == [1, 2, 3, 6]


def test_level_zero_is_origin():
    for p in (1, 2, 3, 4):
        assert lattice_count(shape_cone_section(p), 0) == 1
        assert lattice_count(content_cone_section(p), 0) == 1


def test_interior_points_are_strict():
    for p in (1, 2, 3, 4, 5):
        for cone in (shape_cone_section(p), content_cone_section(p)):
            slacks = cone.evaluate(cone.interior_point)
            assert all(s > 0 for s in slacks), cone.label


def test_unbounded_system_rejected():
    from veroschur.cones import _certify
    with pytest.raises(ValueError, match="unbounded"):
        _certify("open ray", 1, [((Fraction(1),), Fraction(0))], (Fraction(1),))


def test_duality_with_characters():
    for p in (1, 2, 3):
        shapes = shape_cone_section(p)
        contents = content_cone_section(p)
        for d in (1, 2, 3, 4):
            e = schur_decompose(char_tensor_sym(p, d, p))
            assert lattice_count(shapes, d) == complexity(e) \
                == count_partitions(p * d, p)
            assert lattice_count(contents, d) == total_multiplicity(e)


def test_moment_map_examples():
    from veroschur.tableaux import RowContentMatrix
    sup = RowContentMatrix.from_offdiag(3, 2, (0, 0, 0))
    assert moment_map(sup) == (2, 2, 2)
    single = RowContentMatrix.from_offdiag(2, 2, (2,))
    assert moment_map(single) == (0, 2)


def test_moment_map_matches_tableau_shape():
    for p, d in [(2, 3), (3, 2)]:
        for m in content_points_as_matrices(p, d):
            image = moment_map(m)
            shape = matrix_to_tableau(m).shape
            assert image[:-1] == tuple(shape[1:]) + (0,) * (p - len(shape))
            assert image[-1] == d


def test_moment_fibers_are_kostka():
    for p in (2, 3):
        for d in (1, 2, 3, 4, 5):
            fibers = {}
            for m in content_points_as_matrices(p, d):
                key = moment_map(m)
                fibers[key] = fibers.get(key, 0) + 1
            shape_points = {pt + (d,)
                            for pt in enumerate_slice(shape_cone_section(p), d)}
            assert set(fibers) == shape_points
            for key, size in fibers.items():
                lam = normalize((p * d - sum(key[:-1]),) + key[:-1])
                assert size == kostka(lam, (d,) * p)


def test_few_short_shapes():
    # the share of level-d shape points with an empty last row shrinks
    for p in (2, 3):
        cone = shape_cone_section(p)
        fractions = []
        for d in (2, 4, 6, 8):
            pts = list(enumerate_slice(cone, d))
            short = sum(1 for pt in pts if pt and pt[-1] == 0)
            fractions.append(Fraction(short, len(pts)))
        assert all(a > b for a, b in zip(fractions, fractions[1:]))


def brute_max_kostka(p, d):
    best = 0
    for lam in partitions_of(p * d, max_parts=p):
        best = max(best, kostka(lam, (d,) * p))
    return best


def test_max_multiplicity():
    assert max_multiplicity(2, 7) == 1
    assert max_multiplicity(1, 3) == 1
    assert max_multiplicity(3, 0) == 1
    # exhaustive cross-check, including the box-constant bound
    for p in (2, 3):
        for d in (1, 2, 3):
            rep = max_multiplicity_report(p, d)
            assert rep.value == brute_max_kostka(p, d)
            assert rep.bound_ok
    rep = max_multiplicity_report(3, 2)
    assert rep.value == 3 and rep.argmax == (4, 2)
    rep4 = max_multiplicity_report(4, 2)
    assert rep4.value == brute_max_kostka(4, 2) == 8
    assert rep4.box_constant == 1 and rep4.bound_ok
    assert max_multiplicity_report(5, 1).skipped is not None


def test_enumeration_node_cap():
    tiny = RunConfig(max_enum_nodes=3)
    with pytest.raises(CapExceeded):
        lattice_count(content_cone_section(3), 4, tiny)


def test_fit_exact_polynomials():
    fit = fit_leading_coefficient([(d, d + 1) for d in range(1, 8)], 1)
    assert fit.estimate == 1 and fit.relative_change == 0
    fit = fit_leading_coefficient([(d, 7) for d in (1, 3, 9)], 0)
    assert fit.estimate == 7
    fit = fit_leading_coefficient([(d, 2 * d ** 3 - d + 5)
                                   for d in (2, 4, 6, 8, 10)], 3)
    assert fit.estimate == 2 and fit.relative_change == 0


def test_fit_requires_enough_samples():
    with pytest.raises(ValueError):
        fit_leading_coefficient([(1, 1), (2, 2)], 1)
    with pytest.raises(ValueError):
        fit_leading_coefficient([(1, 1), (1, 2), (2, 2)], 1)


def test_fit_content_cone_converges():
    cone = content_cone_section(3)
    samples = [(d, lattice_count(cone, d)) for d in range(4, 25, 4)]
    fit = fit_leading_coefficient(samples, 3)
    assert fit.estimate > 0
    wide = fit_leading_coefficient(samples[:5], 3)
    assert fit.relative_change <= wide.relative_change


def test_cone_labels():
    assert shape_cone_section(3).label == "shapes(p=3)"
    assert content_cone_section(3).label == "contents(p=3)"
