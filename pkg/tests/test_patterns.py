from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from bperm.core import (
    DihedralSymmetry,
    Permutation,
    SignedPermutation,
    mirror_of_window,
    rank_word,
    signed_permutations,
)
from bperm.patterns import (
    PatternTooLargeError,
    classical_avoiders,
    classical_contains,
    count_global_occurrences,
    delete_window_entry,
    format_pattern_set,
    gav,
    gav_count,
    global_basis,
    global_contains,
    parse_signed_patterns,
    parse_unsigned_patterns,
    rc_reduce,
    symmetry_class_counts,
    unsigned_contains,
    word_contains,
)
from bperm import fixtures


def contains_oracle(word, pattern):
    """Exhaustive subsequence search: the independent containment oracle."""
    for subset in combinations(word, len(pattern)):
        if rank_word(subset) == tuple(pattern):
            return True
    return False


def signed_contains_oracle(window, pattern):
    k = len(pattern)
    for positions in combinations(range(len(window)), k):
        values = [window[i] for i in positions]
        if any((v > 0) != (p > 0) for v, p in zip(values, pattern)):
            continue
        if rank_word([abs(v) for v in values]) == tuple(abs(p) for p in pattern):
            return True
    return False


@st.composite
def word_and_pattern(draw):
    n = draw(st.integers(min_value=0, max_value=7))
    k = draw(st.integers(min_value=1, max_value=4))
    word = draw(st.permutations(range(1, n + 1)))
    pattern = draw(st.permutations(range(1, k + 1)))
    return tuple(word), tuple(pattern)


@st.composite
def window_and_signed_pattern(draw):
    n = draw(st.integers(min_value=0, max_value=5))
    k = draw(st.integers(min_value=1, max_value=3))
    values = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    window = tuple(s * v for s, v in zip(signs, values))
    pvalues = draw(st.permutations(range(1, k + 1)))
    psigns = draw(st.lists(st.sampled_from((1, -1)), min_size=k, max_size=k))
    pattern = tuple(s * v for s, v in zip(psigns, pvalues))
    return window, pattern


class TestUnsignedContains:
    def test_examples(self):
        assert unsigned_contains(Permutation((4, 2, 3, 1)), Permutation((3, 2, 1)))
        assert not unsigned_contains(Permutation((3, 4, 1, 2)), Permutation((3, 2, 1)))

    @given(v=st.permutations(range(1, 7)))
    def test_self_containment(self, v):
        p = Permutation(tuple(v))
        assert unsigned_contains(p, p)

    @given(pair=word_and_pattern())
    @settings(max_examples=300)
    def test_matches_oracle(self, pair):
        word, pattern = pair
        assert word_contains(word, pattern) == contains_oracle(word, pattern)


class TestClassicalContains:
    def test_examples(self):
        w = SignedPermutation((-2, 1, 3, -4))
        assert classical_contains(w, SignedPermutation((-1, -2)))
        assert classical_contains(w, SignedPermutation((1, -2)))
        assert not classical_contains(SignedPermutation((1, 2, 3)), SignedPermutation((-1,)))

    @given(pair=window_and_signed_pattern())
    @settings(max_examples=300)
    def test_matches_oracle(self, pair):
        window, pattern = pair
        assert classical_contains(
            SignedPermutation(window), SignedPermutation(pattern)
        ) == signed_contains_oracle(window, pattern)


class TestGlobalContains:
    def test_running_example_contains_all_of_s3(self):
        w = SignedPermutation((-2, 1, 3, -4))
        for word in permutations((1, 2, 3)):
            assert global_contains(w, Permutation(word))

    def test_running_example_avoids_2143(self):
        assert not global_contains(SignedPermutation((-2, 1, 3, -4)), Permutation((2, 1, 4, 3)))

    def test_singleton(self):
        assert global_contains(SignedPermutation((1,)), Permutation((1, 2)))

    def test_every_element_contains_1(self):
        for w in signed_permutations(3):
            assert global_contains(w, Permutation((1,)))

    def test_agrees_with_iota_transport_exhaustive(self):
        # All elements of size <= 3 against every pattern up to the mirror length.
        for n in range(1, 4):
            patterns = [
                Permutation(word)
                for k in range(1, 2 * n + 1)
                for word in permutations(range(1, k + 1))
            ]
            for w in signed_permutations(n):
                image = w.iota()
                for p in patterns:
                    assert global_contains(w, p) == unsigned_contains(image, p)

    @given(data=st.data())
    @settings(max_examples=150, deadline=None)
    def test_agrees_with_iota_transport_sampled_at_4(self, data):
        values = data.draw(st.permutations(range(1, 5)))
        signs = data.draw(st.lists(st.sampled_from((1, -1)), min_size=4, max_size=4))
        w = SignedPermutation(tuple(s * v for s, v in zip(signs, values)))
        k = data.draw(st.integers(min_value=1, max_value=8))
        p = Permutation(tuple(data.draw(st.permutations(range(1, k + 1)))))
        assert global_contains(w, p) == unsigned_contains(w.iota(), p)

    def test_monotone_in_pattern_containment(self):
        # If p is contained in q, avoiding p is harder than avoiding q.
        smaller = [Permutation(w) for k in (2, 3) for w in permutations(range(1, k + 1))]
        larger = [Permutation(w) for k in (3, 4) for w in permutations(range(1, k + 1))]
        classes = {q: set(gav(3, [q])) for q in smaller + larger}
        for p in smaller:
            for q in larger:
                if p.size < q.size and unsigned_contains(q, p):
                    assert classes[p] <= classes[q]


class TestOccurrenceCounting:
    def test_counts_all_subsets(self):
        w = SignedPermutation((1,))
        assert count_global_occurrences(w, Permutation((1,))) == 2

    def test_monotone_count(self):
        w = SignedPermutation.identity(2)  # mirror word -2,-1,1,2
        assert count_global_occurrences(w, Permutation((1, 2))) == 6

    def test_zero_when_avoided(self):
        w = SignedPermutation((-2, 1, 3, -4))
        assert count_global_occurrences(w, Permutation((2, 1, 4, 3))) == 0


class TestGav:
    def test_gav_132_at_size_two(self):
        avoiders = list(gav(2, [Permutation((1, 3, 2))]))
        assert {w.window for w in avoiders} == {(1, 2), (1, -2), (-1, -2), (-2, -1)}
        assert gav_count(2, [Permutation((1, 3, 2))]) == 4

    def test_gav_321_count(self):
        assert gav_count(3, [Permutation((3, 2, 1))]) == 20

    def test_gav_monotone_empty(self):
        assert list(gav(1, parse_unsigned_patterns("1,2;2,1"))) == []

    def test_streams_in_lexicographic_order(self):
        windows = [w.window for w in gav(3, [Permutation((3, 2, 1))])]
        assert windows == sorted(windows)

    def test_gav_of_nothing_is_whole_group(self):
        assert gav_count(3, []) == 48


class TestClassicalAvoiders:
    def test_positive_windows_only(self):
        avoiders = list(classical_avoiders(1, [SignedPermutation((-1,))]))
        assert [w.window for w in avoiders] == [(1,)]

    def test_empty_pattern_set(self):
        assert sum(1 for _ in classical_avoiders(2, [])) == 8

    def test_vexillary_classical_equals_global(self):
        lhs = {w.window for w in classical_avoiders(4, fixtures.VEXILLARY_CLASSICAL)}
        rhs = {w.window for w in gav(4, fixtures.VEXILLARY_GLOBAL)}
        assert lhs == rhs


class TestDeleteEntry:
    def test_reranks_and_keeps_signs(self):
        assert delete_window_entry((-2, 1, 3, -4), 2) == (-2, 1, -3)
        assert delete_window_entry((3, -1, 2), 0) == (-1, 2)

    @given(pair=window_and_signed_pattern())
    def test_deletion_is_classically_contained(self, pair):
        window, _ = pair
        for j in range(len(window)):
            smaller = delete_window_entry(window, j)
            assert signed_contains_oracle(window, smaller)


class TestGlobalBasis:
    def test_vexillary_basis_matches_published_list(self):
        basis = global_basis(fixtures.VEXILLARY_GLOBAL)
        assert set(basis) == set(fixtures.VEXILLARY_CLASSICAL)

    def test_boolean_basis_matches_published_list(self):
        basis = global_basis(fixtures.BOOLEAN_GLOBAL)
        assert set(basis) == set(fixtures.BOOLEAN_CLASSICAL)

    def test_free_basis_matches_published_list(self):
        basis = global_basis(fixtures.FREE_GLOBAL)
        assert set(basis) == set(fixtures.FREE_CLASSICAL)

    def test_smooth_bc_basis_matches_published_list(self):
        basis = global_basis(fixtures.SMOOTH_BC_GLOBAL)
        assert set(basis) == set(fixtures.SMOOTH_BC_CLASSICAL)

    def test_output_sorted_by_size_then_window(self):
        basis = global_basis(fixtures.BOOLEAN_GLOBAL)
        keys = [(q.size, q.window) for q in basis]
        assert keys == sorted(keys)

    def test_basis_is_antichain(self):
        for patterns in (fixtures.VEXILLARY_GLOBAL, fixtures.FREE_GLOBAL):
            basis = global_basis(patterns)
            for a in basis:
                for b in basis:
                    if a != b:
                        assert not classical_contains(a, b)

    def test_basis_members_globally_contain_a_pattern(self):
        basis = global_basis(fixtures.BOOLEAN_GLOBAL)
        for q in basis:
            assert any(
                contains_oracle(mirror_of_window(q.window), p.oneline)
                for p in fixtures.BOOLEAN_GLOBAL
            )

    def test_avoidance_classes_agree_for_every_featured_set(self):
        featured = [
            fixtures.VEXILLARY_GLOBAL,
            fixtures.BOOLEAN_GLOBAL,
            fixtures.FREE_GLOBAL,
            fixtures.SMOOTH_BC_GLOBAL,
            parse_unsigned_patterns("1,3,2"),
        ]
        for patterns in featured:
            basis = global_basis(patterns)
            for n in range(6):
                assert {w.window for w in gav(n, patterns)} == {
                    w.window for w in classical_avoiders(n, basis)
                }

    @given(data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_avoidance_classes_agree_for_random_sets(self, data):
        count = data.draw(st.integers(min_value=1, max_value=3))
        patterns = []
        for _ in range(count):
            k = data.draw(st.integers(min_value=2, max_value=4))
            patterns.append(Permutation(tuple(data.draw(st.permutations(range(1, k + 1))))))
        basis = global_basis(patterns)
        for n in range(4):
            assert {w.window for w in gav(n, patterns)} == {
                w.window for w in classical_avoiders(n, basis)
            }

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            global_basis([])

    def test_size_cap(self):
        with pytest.raises(PatternTooLargeError):
            global_basis([Permutation(tuple(range(1, 10)))])


class TestSymmetries:
    def test_symmetry_class_counts_equal(self):
        pats = [Permutation((1, 3, 2))]
        for symmetry in DihedralSymmetry:
            left, right = symmetry_class_counts(pats, symmetry, 3)
            assert left == right

    def test_complement_of_12(self):
        left, right = symmetry_class_counts(
            [Permutation((1, 2))], DihedralSymmetry.COMPLEMENT, 2
        )
        assert (left, right) == (1, 1)

    def test_all_s3_s4_patterns_all_symmetries(self):
        patterns = [Permutation(p) for p in permutations((1, 2, 3))]
        patterns += [Permutation(p) for p in permutations((1, 2, 3, 4))]
        for n in range(1, 5):
            for p in patterns:
                base = gav_count(n, [p])
                for symmetry in DihedralSymmetry:
                    assert gav_count(n, [p.apply_symmetry(symmetry)]) == base

    def test_rc_identified_sets_have_equal_classes(self):
        # 123 and its rc are literally equal; 132's rc is 213.
        p132 = Permutation((1, 3, 2))
        p213 = Permutation((2, 1, 3))
        for n in range(4):
            assert {w.window for w in gav(n, [p132])} == {
                w.window for w in gav(n, [p213, p132])
            }


class TestRcReduce:
    def test_drops_rc_partner(self):
        reduced = rc_reduce(parse_unsigned_patterns("2,3,1;3,1,2"))
        assert reduced == {Permutation((2, 3, 1))}

    def test_rc_invariant_pattern_kept(self):
        reduced = rc_reduce([Permutation((3, 2, 1))])
        assert reduced == {Permutation((3, 2, 1))}

    def test_mixed_set(self):
        reduced = rc_reduce(parse_unsigned_patterns("1,3,2;2,1,3;3,2,1"))
        assert reduced == {Permutation((1, 3, 2)), Permutation((3, 2, 1))}

    def test_reduction_preserves_avoidance_class(self):
        patterns = parse_unsigned_patterns("2,3,1;3,1,2;2,1,4,3")
        reduced = rc_reduce(patterns)
        for n in range(5):
            assert {w.window for w in gav(n, patterns)} == {
                w.window for w in gav(n, reduced)
            }


class TestTextGrammar:
    def test_parse_unsigned(self):
        pats = parse_unsigned_patterns("3,4,1,2;4,2,3,1")
        assert [p.oneline for p in pats] == [(3, 4, 1, 2), (4, 2, 3, 1)]

    def test_parse_signed(self):
        pats = parse_signed_patterns("-2,1;-1,-2")
        assert [q.window for q in pats] == [(-2, 1), (-1, -2)]

    def test_format_round_trip(self):
        text = "-2,1;-1,-2"
        assert format_pattern_set(parse_signed_patterns(text)) == text
