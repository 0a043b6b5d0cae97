import random

import pytest

from regquot.errors import (
    ConditionIIFails,
    EmptySequence,
    NonHomogeneous,
    NotVerifiedRegular,
    WindowOverflow,
)
from regquot.ideals import (
    HomogeneousIdeal,
    KoszulComplex,
    ModuleEntry,
    check_condition_ii,
    check_regular_sequence,
    decompose_conormal,
    tor,
    tor1_equals_intersection_over_product,
)
from regquot.ring import GradedRing, Generator
from regquot.scalars import BaseRing


@pytest.fixture
def f2_xy():
    return GradedRing(
        BaseRing.prime_field(2), [Generator("x", 2), Generator("y", 2)], degree_window=8
    )


@pytest.fixture
def zloc_laurent():
    return GradedRing(
        BaseRing.integers_localized(2),
        [Generator("v1", 2, invertible=True)],
        degree_window=4,
        laurent_window=2,
    )


@pytest.fixture
def z_plain():
    return GradedRing(BaseRing.integers(), [], degree_window=4)


@pytest.fixture
def z_v1():
    # degree-zero polynomial generator; exponents capped by the window
    return GradedRing(BaseRing.integers(), [Generator("v1", 0)], degree_window=8)


def test_regular_pair(f2_xy):
    x, y = f2_xy.var("x"), f2_xy.var("y")
    rep = check_regular_sequence(f2_xy, [x, y])
    assert rep.regular
    assert rep.first_failure is None


def test_repeated_generator_fails_at_two(f2_xy):
    x = f2_xy.var("x")
    rep = check_regular_sequence(f2_xy, [x, x])
    assert not rep.regular
    assert rep.first_failure == 2
    assert rep.failure_degree == 0


def test_zero_entry_fails_immediately(f2_xy):
    rep = check_regular_sequence(f2_xy, [f2_xy.zero()])
    assert not rep.regular
    assert rep.first_failure == 1


def test_integer_multiples_fail(z_plain):
    four = z_plain.constant(4)
    six = z_plain.constant(6)
    rep = check_regular_sequence(z_plain, [four, six])
    assert not rep.regular
    assert rep.first_failure == 2


def test_two_regular_in_local_laurent(zloc_laurent):
    two = zloc_laurent.constant(2)
    rep = check_regular_sequence(zloc_laurent, [two])
    assert rep.regular


def test_empty_sequence_rejected(f2_xy):
    with pytest.raises(EmptySequence):
        check_regular_sequence(f2_xy, [])


def test_inhomogeneous_rejected(f2_xy):
    with pytest.raises(NonHomogeneous):
        check_regular_sequence(f2_xy, [f2_xy.var("x") + f2_xy.one()])


def test_koszul_slices_and_differential(f2_xy):
    x, y = f2_xy.var("x"), f2_xy.var("y")
    cx = KoszulComplex(f2_xy, [x, y])
    assert len(cx.chain_slice(0, 2)) == 2
    assert len(cx.chain_slice(1, 2)) == 2
    assert cx.chain_slice(2, 2) == []
    rows, truncated = cx.differential_rows(1, 2)
    assert not truncated
    # target basis is [(0,1)=y, (1,0)=x]; source is [({0},1), ({1},1)]
    assert rows == [[0, 1], [1, 0]]
    for q in (2, 4, 6, 8):
        cx.validate_squares(q)


def test_tor0_is_quotient_ring(f2_xy):
    x = f2_xy.var("x")
    rep = tor(f2_xy, [x], [x], 0)
    for q in (0, 2, 4, 6, 8):
        assert rep.entry(q).dimension_over(2) == 1


def test_tor1_of_repeated_principal_ideal(f2_xy):
    x = f2_xy.var("x")
    rep = tor(f2_xy, [x], [x], 1)
    assert rep.entry(0).is_zero()
    for q in (2, 4, 6, 8):
        assert rep.entry(q).dimension_over(2) == 1


def test_tor_above_length_vanishes(f2_xy):
    x = f2_xy.var("x")
    rep = tor(f2_xy, [x], [x], 2)
    assert rep.entries == {}


def test_tor_requires_verified_regular(f2_xy):
    x = f2_xy.var("x")
    with pytest.raises(NotVerifiedRegular):
        tor(f2_xy, [x, x], [x], 1)


def test_tor_integer_prime_powers(z_plain):
    eight = z_plain.constant(8)
    sixteen = z_plain.constant(16)
    t0 = tor(z_plain, [eight], [sixteen], 0)
    assert t0.entry(0) == ModuleEntry(0, (8,))
    t1 = tor(z_plain, [eight], [sixteen], 1)
    assert t1.entry(0) == ModuleEntry(0, (8,))


def test_tor_local_laurent_quotient(zloc_laurent):
    two = zloc_laurent.constant(2)
    t0 = tor(zloc_laurent, [two], [two], 0)
    t1 = tor(zloc_laurent, [two], [two], 1)
    for q in (-4, -2, 0, 2, 4):
        assert t0.entry(q) == ModuleEntry(0, (2,))
        assert t1.entry(q) == ModuleEntry(0, (2,))


def test_tor_window_truncation_is_reported(z_v1):
    v1 = z_v1.var("v1")
    two = z_v1.constant(2)
    with pytest.raises(WindowOverflow):
        tor(z_v1, [v1 - two], [two], 1)


def test_tor1_matches_intersection_over_product(f2_xy, z_plain, z_v1):
    x, y = f2_xy.var("x"), f2_xy.var("y")
    assert tor1_equals_intersection_over_product(f2_xy, [x], [x])
    assert tor1_equals_intersection_over_product(f2_xy, [x], [y])
    eight = z_plain.constant(8)
    nine = z_plain.constant(9)
    sixteen = z_plain.constant(16)
    assert tor1_equals_intersection_over_product(z_plain, [eight], [nine])
    assert tor1_equals_intersection_over_product(z_plain, [eight], [sixteen])
    v1, two = z_v1.var("v1"), z_v1.constant(2)
    assert tor1_equals_intersection_over_product(z_v1, [two], [v1 - two])


def test_condition_ii_examples(f2_xy, z_plain, z_v1):
    x, y = f2_xy.var("x"), f2_xy.var("y")
    assert check_condition_ii(f2_xy, [[x], [y]]) == [True]
    two = z_plain.constant(2)
    assert check_condition_ii(z_plain, [[two], [two]]) == [False]
    eight, nine = z_plain.constant(8), z_plain.constant(9)
    assert check_condition_ii(z_plain, [[eight], [nine]]) == [True]
    v1 = z_v1.var("v1")
    assert check_condition_ii(z_v1, [[z_v1.constant(2)], [v1 - 2]]) == [True]


def test_condition_ii_three_ideals(f2_xy):
    x, y = f2_xy.var("x"), f2_xy.var("y")
    res = check_condition_ii(f2_xy, [[x], [y], [x + y]])
    assert res == [True, False]


def test_condition_ii_needs_ideals(f2_xy):
    with pytest.raises(EmptySequence):
        check_condition_ii(f2_xy, [])
    with pytest.raises(EmptySequence):
        check_condition_ii(f2_xy, [[], [f2_xy.var("x")]])


def test_decompose_two_variables(f2_xy):
    x, y = f2_xy.var("x"), f2_xy.var("y")
    dec = decompose_conormal(f2_xy, [[x], [y]])
    assert dec.verified
    top = dec.degrees[2]
    assert top.module == ModuleEntry(0, (2, 2))
    assert top.summands == [ModuleEntry(0, (2,)), ModuleEntry(0, (2,))]
    assert top.verified
    assert dec.degrees[4].module.is_zero()


def test_decompose_integer_polynomial(z_v1):
    v1, two = z_v1.var("v1"), z_v1.constant(2)
    dec = decompose_conormal(z_v1, [[two], [v1 - two]], window=6)
    assert dec.verified
    rec = dec.degrees[0]
    assert rec.module == ModuleEntry(0, (2, 2))
    assert rec.summands == [ModuleEntry(0, (2,)), ModuleEntry(0, (2,))]


def test_decompose_requires_condition_ii(z_plain):
    two = z_plain.constant(2)
    with pytest.raises(ConditionIIFails):
        decompose_conormal(z_plain, [[two], [two]])


def test_ideal_validation(f2_xy):
    with pytest.raises(EmptySequence):
        HomogeneousIdeal(f2_xy, [])
    ideal = HomogeneousIdeal(f2_xy, [f2_xy.var("x")])
    assert len(ideal.generators) == 1


def test_regular_pairs_satisfy_condition_ii(f2_xy):
    rng = random.Random(20260823)
    found = 0
    for _ in range(12):
        f = sum(m for m in f2_xy.degree_basis(2) if rng.random() < 0.5)
        g = sum(m for m in f2_xy.degree_basis(4) if rng.random() < 0.5)
        if f == 0 or g == 0:
            continue
        rep = check_regular_sequence(f2_xy, [f, g], window=6)
        if rep.regular:
            found += 1
            assert check_condition_ii(f2_xy, [[f], [g]], window=6) == [True]
            assert tor1_equals_intersection_over_product(
                f2_xy, [f], [g], window=6
            )
    assert found >= 3
