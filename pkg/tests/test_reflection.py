import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxverify import linalg
from coxverify import reflection as refl
from coxverify.errors import CoxeterInputError
from helpers import all_words, cayley_distances, group, vec


def test_reflect_simple_examples():
    a2 = group("A2")
    assert refl.reflect_simple(a2, 1, vec(a2, 0, 1)) == vec(a2, 1, 1)
    assert refl.reflect_simple(a2, 1, vec(a2, 1, 0)) == vec(a2, -1, 0)
    affa1 = group("affA1")
    assert refl.reflect_simple(affa1, 1, vec(affa1, 0, 1)) == vec(affa1, 2, 1)
    with pytest.raises(CoxeterInputError):
        refl.reflect_simple(a2, 3, vec(a2, 1, 0))


@settings(max_examples=40, deadline=None)
@given(coords=st.lists(st.integers(-8, 8), min_size=3, max_size=3),
       i=st.integers(1, 3))
def test_reflection_is_involution(coords, i):
    ctx = group("affC2")
    v = vec(ctx, *coords)
    assert refl.reflect_simple(ctx, i, refl.reflect_simple(ctx, i, v)) == v


def test_word_to_element_examples():
    a2 = group("A2")
    ident = refl.word_to_element(a2, ())
    assert ident.is_identity()
    # s1 s2 s1 is the reflection in alpha1+alpha2: it sends alpha2 to -alpha1
    e = refl.word_to_element(a2, (1, 2, 1))
    assert linalg.mat_vec(e.mat, vec(a2, 0, 1)) == vec(a2, -1, 0)
    assert linalg.mat_vec(e.mat, vec(a2, 1, 1)) == vec(a2, -1, -1)
    for ctx in (a2, group("B2")):
        for i in range(1, ctx.n + 1):
            assert refl.word_to_element(ctx, (i, i)).is_identity()


def test_element_inverse_consistency():
    ctx = group("tri334")
    e = refl.word_to_element(ctx, (1, 2, 3, 1, 2))
    assert linalg.mat_mul(e.mat, e.inv) == linalg.identity(ctx.field, ctx.n)
    lazy = refl.Element(ctx, e.mat)  # no inverse provided: Gaussian elimination
    assert lazy.inv == e.inv


def test_positive_root_vector_classification():
    a2 = group("A2")
    assert refl.is_positive_root_vector(a2, vec(a2, 1, 0))
    assert not refl.is_positive_root_vector(a2, vec(a2, -1, -1))
    affa1 = group("affA1")
    assert refl.is_positive_root_vector(affa1, vec(affa1, 3, 2))
    with pytest.raises(CoxeterInputError):
        refl.is_positive_root_vector(a2, vec(a2, 1, -1))
    with pytest.raises(CoxeterInputError):
        refl.is_positive_root_vector(a2, vec(a2, 0, 0))


def test_reflection_sequence_examples():
    a2 = group("A2")
    steps = refl.reflection_sequence(a2, (1, 2, 1))
    assert [s.root for s in steps] == [vec(a2, 1, 0), vec(a2, 1, 1), vec(a2, 0, 1)]
    assert not any(s.flipped for s in steps)
    affa1 = group("affA1")
    steps = refl.reflection_sequence(affa1, (1, 2, 1, 2))
    assert [s.root for s in steps] == [
        vec(affa1, 1, 0), vec(affa1, 2, 1), vec(affa1, 3, 2), vec(affa1, 4, 3)]
    steps = refl.reflection_sequence(a2, (1, 1))
    assert steps[0].root == steps[1].root == vec(a2, 1, 0)
    assert not steps[0].flipped and steps[1].flipped


def test_is_reduced_examples():
    a2 = group("A2")
    assert refl.is_reduced(a2, (1, 2, 1))
    assert not refl.is_reduced(a2, (1, 2, 1, 2))
    assert refl.is_reduced(group("affA1"), (1, 2, 1, 2, 1, 2))
    for ctx in (a2, group("B2")):
        assert not refl.is_reduced(ctx, (1, 1))
    assert refl.is_reduced(a2, ())


def test_length_examples():
    a2 = group("A2")
    assert refl.length(a2, refl.identity_element(a2)) == 0
    assert refl.length(a2, refl.word_to_element(a2, (1, 2, 1, 2))) == 2
    affa1 = group("affA1")
    assert refl.length(affa1, refl.word_to_element(affa1, (1, 2) * 5)) == 10


def test_reduced_word_of_is_reduced_and_correct():
    ctx = group("H3")
    e = refl.word_to_element(ctx, (1, 2, 3, 2, 1, 2, 3))
    word = refl.reduced_word_of(ctx, e)
    assert len(word) == refl.length(ctx, e)
    assert refl.is_reduced(ctx, word)
    assert refl.word_to_element(ctx, word) == e


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_length_and_reducedness_against_cayley_oracle(name):
    ctx = group(name)
    dist = cayley_distances(ctx)
    for word in all_words(ctx, 6):
        mat = refl.word_matrix(ctx, word)
        expected_len = dist[mat]
        e = refl.word_to_element(ctx, word)
        assert refl.length(ctx, e) == expected_len
        assert refl.is_reduced(ctx, word) == (expected_len == len(word))


@pytest.mark.parametrize("name,max_len", [
    ("A2", 8), ("B2", 8), ("G2", 8), ("affA1", 8),   # rank 2, full bound
    ("A3", 8), ("affA2", 8),                          # rank 3, rational field
    ("tri334", 5), ("affC2", 5),                      # costlier fields, shorter
])
def test_reducedness_routes_agree(name, max_len):
    ctx = group(name)
    for word in all_words(ctx, max_len):
        assert refl.is_reduced(ctx, word) == \
            refl.is_reduced_by_reflection_sequence(ctx, word)


def test_is_inversion_examples():
    a2 = group("A2")
    s1 = refl.word_to_element(a2, (1,))
    assert refl.is_inversion(a2, s1, vec(a2, 1, 0))
    assert not refl.is_inversion(a2, s1, vec(a2, 0, 1))
    with pytest.raises(CoxeterInputError):
        refl.is_inversion(a2, s1, vec(a2, -1, 0))


@pytest.mark.parametrize("name", ["A2", "B2", "affA1"])
def test_inversions_match_odd_parity_rule(name):
    ctx = group(name)
    census = refl.positive_roots_up_to_depth(ctx, 8)
    for word in all_words(ctx, 6):
        counts = {}
        for step in refl.reflection_sequence(ctx, word):
            counts[step.root] = counts.get(step.root, 0) + 1
        e = refl.word_to_element(ctx, word)
        for root in set(census) | set(counts):
            odd = counts.get(root, 0) % 2 == 1
            assert refl.is_inversion(ctx, e, root) == odd, (word, root)


def test_root_image_is_root_of_conjugate_reflection():
    # w alpha_t = +-alpha_{w t w^-1}, checked by matrix conjugation
    rng = random.Random(7)
    for name in ("A3", "B2", "affA2", "tri334"):
        ctx = group(name)
        roots = refl.positive_roots_up_to_depth(ctx, 3)
        for _ in range(25):
            word = tuple(rng.randint(1, ctx.n) for _ in range(rng.randint(0, 6)))
            e = refl.word_to_element(ctx, word)
            t_root = roots[rng.randrange(len(roots))]
            image = linalg.mat_vec(e.mat, t_root)
            if not refl.is_positive_root_vector(ctx, image):
                image = linalg.vec_neg(image)
            conjugated = linalg.mat_mul(
                linalg.mat_mul(e.mat, refl.root_reflection_matrix(ctx, t_root)), e.inv)
            assert refl.root_reflection_matrix(ctx, image) == conjugated


def test_b_preservation_random_words():
    rng = random.Random(99)
    for name in ("A2", "H3", "affG2", "tri334"):
        ctx = group(name)
        for _ in range(40):
            word = tuple(rng.randint(1, ctx.n) for _ in range(rng.randint(1, 14)))
            mat = refl.word_matrix(ctx, word)
            gram = linalg.mat_mul(linalg.mat_mul(linalg.transpose(mat), ctx.bilinear), mat)
            assert gram == ctx.bilinear


def test_demazure_product_examples():
    a2 = group("A2")
    w0 = refl.longest_element(a2)
    assert refl.demazure_product(a2, (1, 2, 1)) == w0
    assert refl.demazure_product(a2, (1, 2, 1, 2)) == w0
    for i in (1, 2):
        assert refl.demazure_product(a2, (i, i)) == refl.word_to_element(a2, (i,))
    # reduced words reproduce their plain product
    affa1 = group("affA1")
    word = (1, 2, 1, 2, 1)
    assert refl.demazure_product(affa1, word) == refl.word_to_element(affa1, word)


def test_demazure_absorption_and_commutation():
    ctx = group("infpath")  # edge {1,2} infinite, edge {2,3}; 1 and 3 commute
    rng = random.Random(5)
    for _ in range(30):
        word = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 7)))
        for i in range(1, 4):
            assert refl.demazure_product(ctx, (i, i) + word) == \
                refl.demazure_product(ctx, (i,) + word)
        # m_13 = 2: the corresponding degenerate-Hecke steps commute
        assert refl.demazure_product(ctx, (1, 3) + word) == \
            refl.demazure_product(ctx, (3, 1) + word)


def test_demazure_left_and_right_routes_agree():
    rng = random.Random(17)
    for name in ("A2", "B2", "affA2"):
        ctx = group(name)
        for _ in range(40):
            word = tuple(rng.randint(1, ctx.n) for _ in range(rng.randint(0, 8)))
            via_right = refl.identity_element(ctx)
            for x in word:
                via_right = refl.demazure_extend_right(ctx, via_right, x)
            assert refl.demazure_product(ctx, word) == via_right


@settings(max_examples=50, deadline=None)
@given(word=st.lists(st.integers(1, 3), max_size=10).map(tuple))
def test_length_bounded_by_word_length(word):
    ctx = group("affC2")
    e = refl.word_to_element(ctx, word)
    ell = refl.length(ctx, e)
    assert ell <= len(word)
    assert (ell == len(word)) == refl.is_reduced(ctx, word)


def test_positive_roots_census_counts():
    # finite groups have finitely many positive roots: A2 3, B2 4, G2 6, H3 15
    for name, count in (("A2", 3), ("B2", 4), ("G2", 6), ("H3", 15)):
        ctx = group(name)
        assert len(refl.positive_roots_up_to_depth(ctx, 30)) == count
    # the affine group keeps producing roots
    affa1 = group("affA1")
    assert len(refl.positive_roots_up_to_depth(affa1, 8)) == 2 + 2 * 8


def test_longest_element_lengths():
    for name, ell in (("A1", 1), ("A2", 3), ("B2", 4), ("G2", 6), ("A3", 6), ("H3", 15)):
        ctx = group(name)
        w0 = refl.longest_element(ctx)
        assert refl.length(ctx, w0) == ell
        assert refl.left_descents(ctx, w0) == tuple(range(1, ctx.n + 1))
