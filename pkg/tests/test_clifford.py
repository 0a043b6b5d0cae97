import random

import pytest

from regquot.clifford import (
    AlgebraMap,
    BruteForceModel,
    CliffordAlgebra,
    ScalarCoefficients,
    TensorAlgebra,
    antipode,
    augmentation,
    brute_force_presentation,
    homology_presentation,
    induced_algebra_map,
    orthogonal_split,
    presentation_of,
    tau,
)
from regquot.conormal import ProductToken, QuotientRingSpec
from regquot.errors import (
    BoundTooSmall,
    MixedAlgebras,
    MixedCoefficients,
    NotCompatible,
    NotExterior,
    NotInIdeal,
)
from regquot.ring import GradedRing, Generator, QuotientRing
from regquot.scalars import BaseRing


@pytest.fixture
def z_ring():
    return GradedRing(BaseRing.integers(), [], degree_window=4)


@pytest.fixture
def k1_setup():
    ring = GradedRing(
        BaseRing.integers_localized(2),
        [Generator("v1", 2, invertible=True)],
        degree_window=6,
    )
    two = ring.constant(2)
    spec = QuotientRingSpec(ring, [two], [ProductToken(two, ring.var("v1"))])
    pres, cl = homology_presentation(spec)
    return ring, spec, pres, cl


@pytest.fixture
def f2_xy():
    return GradedRing(
        BaseRing.prime_field(2), [Generator("x", 2), Generator("y", 2)], degree_window=8
    )


def test_k1_square_is_v1(k1_setup):
    ring, spec, pres, cl = k1_setup
    a0 = cl.generator(0)
    assert a0 * a0 == cl.scalar(ring.var("v1"))
    assert not cl.is_exterior()


def test_k1_presentation_shape(k1_setup):
    ring, spec, pres, cl = k1_setup
    assert pres.kind == "clifford"
    assert pres.generators == (("a0", 1),)
    assert pres.relations == ("a0^2 - v1*1",)
    assert pres.display == "T(a0)/(a0^2 - v1*1)"
    assert pres.warnings == ()


def test_odd_primary_presentation_is_exterior():
    ring = GradedRing(
        BaseRing.integers_localized(3),
        [Generator("v1", 4, invertible=True)],
        degree_window=6,
    )
    spec = QuotientRingSpec(ring, [ring.constant(3)])
    pres, cl = homology_presentation(spec)
    assert pres.kind == "exterior"
    assert pres.display == "Lambda(a0)"
    assert pres.relations == ("a0^2",)
    a0 = cl.generator(0)
    assert (a0 * a0).is_zero()


def test_anticommute_over_integers():
    cl = CliffordAlgebra.from_scalars(BaseRing.integers(), [0, 0])
    a0, a1 = cl.generator(0), cl.generator(1)
    assert a1 * a0 == -(a0 * a1)
    assert (a0 * a0).is_zero()
    assert cl.is_exterior()


def test_unit_times_conjugate(k1_setup):
    ring, spec, pres, cl = k1_setup
    a0 = cl.generator(0)
    v1 = ring.var("v1")
    # (1 + a0)(1 - a0) = 1 - a0^2 = 1 - v1, and -1 folds to 1 mod 2
    prod = (cl.one() + a0) * (cl.one() - a0)
    assert prod == cl.scalar(ring.constant(1) + v1)


def test_phi_sends_sequence_entries_to_generators(f2_xy):
    x, y = f2_xy.var("x"), f2_xy.var("y")
    spec = QuotientRingSpec(f2_xy, [x, y])
    pres, cl = homology_presentation(spec)
    assert cl.phi(x) == cl.generator(0)
    assert cl.phi(y) == cl.generator(1)
    # the cross term x*y lands in I^2, so only the linear part survives
    assert cl.phi(x + x * y) == cl.generator(0)
    with pytest.raises(NotInIdeal):
        cl.phi(f2_xy.one())


def test_phi_with_unit_coefficient(k1_setup):
    ring, spec, pres, cl = k1_setup
    c = ring.constant(1) + ring.var("v1")
    val = cl.phi(ring.constant(2) + ring.constant(2) * ring.var("v1"))
    assert val == cl.generator(0) * c


def test_degrees_in_graded_mode(k1_setup):
    ring, spec, pres, cl = k1_setup
    a0 = cl.generator(0)
    assert a0.degree() == 1
    assert (a0 * ring.var("v1")).degree() == 3
    assert cl.scalar(ring.var("v1")).degree() == 2
    assert cl.word_degree((0,)) == 1


def test_antipode_involution_and_automorphism(k1_setup):
    ring, spec, pres, cl = k1_setup
    a0 = cl.generator(0)
    u = cl.one() + a0
    v = cl.scalar(ring.var("v1")) + a0
    assert antipode(a0) == -a0
    assert antipode(antipode(u)) == u
    assert antipode(u * v) == antipode(u) * antipode(v)


def test_antipode_sign_per_word_length():
    cl = CliffordAlgebra.from_scalars(BaseRing.integers(), [0, 0, 0])
    for w in cl.basis_words():
        u = cl.element({w: 1})
        expect = cl.element({w: -1 if len(w) % 2 else 1})
        assert antipode(u) == expect


def test_augmentation_requires_zero_form(k1_setup):
    ring, spec, pres, cl = k1_setup
    ext = CliffordAlgebra.from_scalars(BaseRing.prime_field(2), [0, 0])
    u = ext.one() + ext.generator(0) + ext.generator(0) * ext.generator(1)
    assert augmentation(u) == 1
    with pytest.raises(NotExterior):
        augmentation(cl.one())


def test_scalar_diagonal_mode():
    cl = CliffordAlgebra.from_scalars(BaseRing.prime_field(3), [1, 2])
    a0, a1 = cl.generator(0), cl.generator(1)
    assert a0 * a0 == cl.scalar(1)
    assert a1 * a1 == cl.scalar(2)
    assert (a0 * a1 + a1 * a0).is_zero()


def test_cross_terms_enter_products():
    cl = CliffordAlgebra.from_scalars(BaseRing.integers(), [0, 0], cross={(0, 1): 5})
    a0, a1 = cl.generator(0), cl.generator(1)
    assert a0 * a1 + a1 * a0 == cl.scalar(5)
    assert a1 * a0 == -(a0 * a1) + cl.scalar(5)


def test_basis_words_rank_two():
    cl = CliffordAlgebra.from_scalars(BaseRing.integers(), [0, 0])
    assert cl.basis_words() == [(), (0,), (1,), (0, 1)]


def test_mixed_algebras_guard():
    cl1 = CliffordAlgebra.from_scalars(BaseRing.integers(), [0])
    cl2 = CliffordAlgebra.from_scalars(BaseRing.integers(), [1])
    with pytest.raises(MixedAlgebras):
        cl1.generator(0) + cl2.generator(0)


def test_element_repr():
    cl = CliffordAlgebra.from_scalars(BaseRing.integers(), [0, 0])
    u = cl.one() + cl.generator(0) * 3
    assert repr(u) == "1 + 3*a0"
    assert repr(cl.zero()) == "0"


def test_tensor_product_signs():
    ext = CliffordAlgebra.from_scalars(BaseRing.integers(), [0])
    tp = TensorAlgebra(ext, ext)
    a = ext.generator(0)
    left = tp.pure(a, ext.one())
    right = tp.pure(ext.one(), a)
    both = tp.pure(a, a)
    assert left * right == both
    # moving a over a picks up the Koszul sign
    assert right * left == -both
    assert tau(left) == right
    assert tau(both) == -both


def test_tensor_mixed_coefficients_guard():
    cl1 = CliffordAlgebra.from_scalars(BaseRing.integers(), [0])
    cl2 = CliffordAlgebra.from_scalars(BaseRing.prime_field(2), [0])
    with pytest.raises(MixedCoefficients):
        TensorAlgebra(cl1, cl2)


def test_orthogonal_split_is_algebra_iso():
    cl = CliffordAlgebra.from_scalars(BaseRing.integers(), [2, 0, 3])
    tp, split = orthogonal_split(cl, 1)
    words = cl.basis_words()
    images = [split(cl.element({w: 1})) for w in words]
    # bijective on the basis
    assert len({tuple(sorted(img.terms)) for img in images}) == len(words)
    for u in words:
        for v in words:
            eu = cl.element({u: 1})
            ev = cl.element({v: 1})
            assert split(eu) * split(ev) == split(eu * ev)


def test_orthogonal_split_rejects_cross_terms():
    cl = CliffordAlgebra.from_scalars(BaseRing.integers(), [0, 0], cross={(0, 1): 1})
    with pytest.raises(NotCompatible):
        orthogonal_split(cl, 1)


def test_induced_map_multiplies_by_two(z_ring):
    spec_big = QuotientRingSpec(z_ring, [z_ring.constant(16)])
    spec_small = QuotientRingSpec(z_ring, [z_ring.constant(8)])
    k4 = QuotientRing(z_ring, (z_ring.constant(4),))
    _, cl_big = homology_presentation(spec_big, k4)
    _, cl_small = homology_presentation(spec_small, k4)
    fmap = induced_algebra_map(cl_big, cl_small)
    assert fmap.apply(cl_big.generator(0)) == cl_small.generator(0) * 2


def test_induced_map_vanishes_mod_two(z_ring):
    spec_big = QuotientRingSpec(z_ring, [z_ring.constant(16)])
    spec_small = QuotientRingSpec(z_ring, [z_ring.constant(8)])
    k2 = QuotientRing(z_ring, (z_ring.constant(2),))
    _, cl_big = homology_presentation(spec_big, k2)
    _, cl_small = homology_presentation(spec_small, k2)
    fmap = induced_algebra_map(cl_big, cl_small)
    assert fmap.apply(cl_big.generator(0)).is_zero()


def test_algebra_map_rejects_bad_images():
    src = CliffordAlgebra.from_scalars(BaseRing.integers(), [1])
    tgt = CliffordAlgebra.from_scalars(BaseRing.integers(), [0])
    with pytest.raises(NotCompatible):
        AlgebraMap(src, tgt, [tgt.generator(0)])


def test_brute_force_basis_and_products():
    pres, model = brute_force_presentation(
        2, [[0, 0], [0, 0]], base=BaseRing.prime_field(2)
    )
    assert pres.kind == "exterior"
    assert pres.display == "Lambda(a0, a1)"
    assert model.basis() == [(), (0,), (1,), (0, 1)]
    assert model.product((0,), (1,)) == {(0, 1): 1}
    # the sign of the swap is invisible mod 2
    assert model.product((1,), (0,)) == {(0, 1): 1}


def test_brute_force_integer_products():
    pres, model = brute_force_presentation(
        2, [[2, 0], [0, 3]], base=BaseRing.integers()
    )
    assert pres.kind == "clifford"
    assert model.product((0,), (0,)) == {(): 2}
    assert model.product((1,), (0,)) == {(0, 1): -1}


def test_brute_force_matches_engine():
    rng = random.Random(20260823)
    bases = [BaseRing.prime_field(2), BaseRing.prime_field(3), BaseRing.integers()]
    for trial in range(6):
        base = bases[trial % 3]
        n = 1 + trial % 3
        matrix = [[rng.randrange(-3, 4) for _ in range(n)] for _ in range(n)]
        cross = {
            (i, j): matrix[i][j] + matrix[j][i]
            for i in range(n)
            for j in range(i + 1, n)
        }
        cl = CliffordAlgebra.from_scalars(
            base, [matrix[i][i] for i in range(n)], cross=cross
        )
        _, model = brute_force_presentation(n, matrix, base=base)
        for w1 in cl.basis_words():
            for w2 in cl.basis_words():
                assert cl.word_product(w1, w2) == model.product(w1, w2)


def test_brute_force_bound_too_small():
    model = BruteForceModel(
        ScalarCoefficients(BaseRing.integers()),
        [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
        word_bound=2,
    )
    with pytest.raises(BoundTooSmall):
        model.normal_form({(2, 1, 0): 1})


def test_mixed_presentation_display():
    cl = CliffordAlgebra.from_scalars(BaseRing.prime_field(2), [0, 1])
    pres = presentation_of(cl)
    assert pres.display == "Lambda(a0) (x) T(a1)/(a1^2 - 1*1)"
    assert pres.relations == ("a0^2", "a1^2 - 1*1", "a0*a1 + a1*a0")


def test_lift_only_warning_for_unverified_sequence(f2_xy):
    x = f2_xy.var("x")
    spec = QuotientRingSpec(f2_xy, [x, x])
    pres, cl = homology_presentation(spec)
    assert not spec.is_regular
    assert any("lift only" in w for w in pres.warnings)
