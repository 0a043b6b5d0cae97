import pytest

from regquot.errors import SemanticError, WindowTooSmall
from regquot.morava import (
    build_scenario,
    kn_algebra,
    kn_cohomology,
    kn_form,
    kn_homology,
    kn_opposite_form_agrees,
    minimum_window,
    obstruction_degree_consistent,
)


def test_odd_p_rank_one():
    sc = build_scenario(3, 1)
    assert sc.window == 6
    assert sc.spec.is_regular
    pres = kn_homology(sc)
    assert pres.kind == "exterior"
    assert pres.display == "Lambda(a0)"
    assert pres.generators == (("a0", 1),)


def test_odd_p_rank_two_degrees():
    sc = build_scenario(3, 2)
    pres = kn_homology(sc)
    assert pres.kind == "exterior"
    assert pres.generators == (("a0", 1), ("a1", 5))


def test_p5_rank_two_degrees():
    sc = build_scenario(5, 2)
    pres = kn_homology(sc)
    assert pres.kind == "exterior"
    assert pres.generators == (("a0", 1), ("a1", 9))
    assert pres.display == "Lambda(a0, a1)"


def test_p2_height_one_twisted_square():
    sc = build_scenario(2, 1)
    pres, cl = kn_algebra(sc)
    assert pres.kind == "clifford"
    assert pres.display == "T(a0)/(a0^2 - v1*1)"
    a0 = cl.generator(0)
    assert a0 * a0 == cl.scalar(sc.ring.var("v1"))


def test_p2_height_two_shape():
    sc = build_scenario(2, 2)
    pres, cl = kn_algebra(sc)
    assert pres.display == "Lambda(a0) (x) T(a1)/(a1^2 - v2*1)"
    a0, a1 = cl.generator(0), cl.generator(1)
    assert (a0 * a0).is_zero()
    assert a1 * a1 == cl.scalar(sc.ring.var("v2"))


def test_p2_height_three_shape():
    sc = build_scenario(2, 3)
    pres, cl = kn_algebra(sc)
    assert pres.display == "Lambda(a0, a1) (x) T(a2)/(a2^2 - v3*1)"
    a2 = cl.generator(2)
    assert a2 * a2 == cl.scalar(sc.ring.var("v3"))
    for i in range(2):
        gi = cl.generator(i)
        assert (gi * gi).is_zero()


def test_form_single_entry_at_p2():
    sc = build_scenario(2, 2)
    form = kn_form(sc)
    assert form.entry(1, 1) == sc.ring.var("v2")
    assert form.entry(0, 0).is_zero()
    assert form.entry(0, 1).is_zero()
    assert form.is_diagonal()


def test_form_vanishes_at_odd_p():
    sc = build_scenario(3, 2)
    assert kn_form(sc).is_zero()


def test_opposite_form_agrees():
    for p, n in [(2, 1), (2, 2), (3, 2)]:
        assert kn_opposite_form_agrees(build_scenario(p, n))


def test_cohomology_height_one():
    sc = build_scenario(2, 1)
    pres = kn_cohomology(sc)
    assert pres.display == "Lambda(Q0)"
    assert pres.generators == (("Q0", -1),)


def test_window_too_small():
    with pytest.raises(WindowTooSmall):
        build_scenario(2, 2, window=6)
    assert minimum_window(2, 2) == 8


def test_bad_parameters():
    with pytest.raises(SemanticError):
        build_scenario(4, 1)
    with pytest.raises(SemanticError):
        build_scenario(2, 0)


def test_obstruction_degree_arithmetic():
    for n in (1, 2, 3):
        sc = build_scenario(2, n)
        assert obstruction_degree_consistent(sc)
        assert sc.spec.is_regular
