import math
import random
from itertools import combinations

import pytest

from supersat.core import binom, build_b_family, level_words, sigma
from supersat.counting import count_k_chains
from supersat.scd import scd_bracketing, scd_inductive
from supersat.bounds import (
    added_row_level,
    binomial_identity_holds,
    bound_report,
    build_extremal_family,
    colex_smallest,
    min_max_yz,
    min_max_yz_exhaustive,
    min_max_yz_minimizer,
    min_max_yz_verification,
    n_permutations_enumerate,
    n_permutations_factorial,
    n_permutations_ratio,
    supersat_bound,
    tight_x_max,
    yz,
)


def random_chain(rng, n, k):
    levels = sorted(rng.sample(range(n + 1), k))
    pool = list(range(n))
    rng.shuffle(pool)
    word = 0
    taken = 0
    chain = []
    for lvl in levels:
        while taken < lvl:
            word |= 1 << pool[taken]
            taken += 1
        chain.append(word)
    return tuple(chain)


def test_supersat_bound_values():
    assert supersat_bound(4, 2, 1) == 3
    assert supersat_bound(4, 3, 2) == 12
    for n in range(2, 9):
        for k in range(2, n + 2):
            assert supersat_bound(n, k, 0) == 0
    # the bound stays a valid statement past the tightness range
    assert supersat_bound(4, 2, 100) == 300


def test_supersat_bound_validation():
    with pytest.raises(ValueError):
        supersat_bound(4, 1, 1)
    with pytest.raises(ValueError):
        supersat_bound(4, 6, 1)
    with pytest.raises(ValueError):
        supersat_bound(4, 2, -1)


def test_tight_x_max_values():
    assert tight_x_max(4, 2) == binom(4, 3) == 4
    assert tight_x_max(4, 3) == binom(4, 1) == 4
    assert tight_x_max(5, 2) == binom(5, 3) == 10


def test_added_row_alternates_around_middle():
    assert [added_row_level(8, k) for k in (2, 3, 4, 5)] == [5, 3, 6, 2]
    assert [added_row_level(7, k) for k in (2, 3, 4)] == [4, 2, 5]


def test_factorial_form_by_exhaustive_permutation_count():
    dec = scd_inductive(4)
    assert n_permutations_enumerate(dec, (0b0001, 0b0011)) == 8
    assert n_permutations_factorial(4, (1, 2)) == 8
    assert n_permutations_ratio(4, (1, 2)) == math.factorial(4) // max(2, 3) == 8


def test_three_level_chain_in_two_element_lattice():
    # brute force over both permutations of [2]: only the identity keeps
    # (empty, {1}, {1,2}) on one chain
    value = n_permutations_enumerate(scd_inductive(2), (0b00, 0b01, 0b11))
    assert value == 1
    assert n_permutations_factorial(2, (0, 1, 2)) == 1
    assert n_permutations_ratio(2, (0, 1, 2)) == 1


def test_single_set_chain_counts_every_permutation():
    for n in (2, 3, 4):
        dec = scd_inductive(n)
        assert n_permutations_enumerate(dec, (0,)) == math.factorial(n)
        assert n_permutations_factorial(n, (0,)) == math.factorial(n)


def test_full_span_chain():
    assert n_permutations_ratio(3, (0, 3)) == 6
    assert n_permutations_factorial(3, (0, 3)) == 6
    assert n_permutations_enumerate(scd_inductive(3), (0, 0b111)) == 6


def test_symmetric_tuple_has_equal_products():
    y, z = yz(6, (2, 3, 4))
    assert y == z == 12
    assert n_permutations_ratio(6, (2, 3, 4)) == math.factorial(6) // 12 == 60
    assert n_permutations_factorial(6, (2, 3, 4)) == 60


def test_enumerate_rejects_non_chains():
    with pytest.raises(ValueError):
        n_permutations_enumerate(scd_inductive(4), (0b0001, 0b0010))
    with pytest.raises(ValueError):
        n_permutations_enumerate(scd_inductive(3), ())
    with pytest.raises(ValueError):
        n_permutations_enumerate(scd_bracketing(8), (0b1, 0b11))


def test_ratio_equals_factorial_everywhere():
    for n in range(1, 10):
        for k in range(1, min(6, n + 2)):
            for levels in combinations(range(n + 1), k):
                assert n_permutations_factorial(n, levels) == n_permutations_ratio(n, levels)


def test_closed_forms_match_enumeration_on_random_chains():
    rng = random.Random(23)
    for n, samples in ((4, 40), (5, 40), (7, 12)):
        decs = (scd_inductive(n), scd_bracketing(n))
        for k in range(1, 5):
            for _ in range(samples):
                chain = random_chain(rng, n, k)
                levels = tuple(w.bit_count() for w in chain)
                values = {n_permutations_enumerate(dec, chain) for dec in decs}
                values.add(n_permutations_factorial(n, levels))
                values.add(n_permutations_ratio(n, levels))
                assert len(values) == 1, (n, chain, values)


def test_yz_products():
    assert yz(4, (1, 2)) == (2, 3)
    assert yz(6, (1, 2, 4)) == yz(6, (1, 3, 4)) == (12, 30)
    for n in (3, 5, 8):
        assert yz(n, (0, n)) == (1, 1)


def test_yz_depends_only_on_base_and_difference_multiset():
    for n in range(2, 9):
        groups = {}
        for k in range(2, 5):
            for levels in combinations(range(n + 1), k):
                diffs = tuple(sorted(b - a for a, b in zip(levels, levels[1:])))
                key = (levels[0], diffs)
                assert groups.setdefault(key, yz(n, levels)) == yz(n, levels)


def test_binomial_identity():
    assert binomial_identity_holds(1, 1, 2)
    assert binomial_identity_holds(0, 0, 0)
    assert all(
        binomial_identity_holds(a, i, j)
        for a in range(21)
        for i in range(21 - a)
        for j in range(21 - a - i)
    )
    with pytest.raises(ValueError):
        binomial_identity_holds(-1, 0, 0)


def test_min_max_yz_closed_form():
    assert min_max_yz(4, 2) == 3
    assert min_max_yz_minimizer(4, 2) == (2, 3)
    assert max(yz(4, (2, 3))) == 3
    assert min_max_yz(5, 3) == 12
    assert min_max_yz_minimizer(5, 3) == (2, 3, 4)
    assert max(yz(5, (2, 3, 4))) == 12
    for n in range(1, 13):
        for k in range(2, n + 2):
            assert supersat_bound(n, k, 1) == min_max_yz(n, k)


def test_closed_form_is_sharp_off_full_span_tuples():
    # the closed form is the minimum of max{y,z} over every tuple avoiding
    # the full 0..n span and is attained at the predicted minimizer; tuples
    # containing both 0 and n can drop below it
    for n in range(1, 13):
        for k in range(2, min(5, n + 2)):
            report = min_max_yz_verification(n, k)
            assert report.predicted_attains, (n, k)
            assert report.span_free_confirmed, (n, k)
            assert all(t[0] == 0 and t[-1] == n for t in report.below_closed_form), (n, k)


def test_full_span_pair_dips_below_closed_form():
    exhaustive_min, argmin = min_max_yz_exhaustive(4, 2)
    assert (exhaustive_min, argmin) == (1, (0, 4))
    report = min_max_yz_verification(4, 2)
    assert not report.confirmed
    assert report.below_closed_form == ((0, 4),)


def test_reduction_of_a_large_difference_strictly_decreases():
    for n in range(2, 11):
        for k in range(2, 5):
            for levels in combinations(range(n + 1), k):
                diffs = sorted(b - a for a, b in zip(levels, levels[1:]))
                if diffs[-1] < 2:
                    continue
                last_big = [levels[0]]
                for d in diffs:
                    last_big.append(last_big[-1] + d)
                assert yz(n, last_big) == yz(n, levels)
                if last_big[-2] > 0:
                    reduced = tuple(last_big[:-1]) + (last_big[-2] + 1,)
                    assert yz(n, reduced)[0] < yz(n, last_big)[0]
                first_big = [levels[0]]
                for d in reversed(diffs):
                    first_big.append(first_big[-1] + d)
                assert yz(n, first_big) == yz(n, levels)
                if first_big[1] < n:
                    raised = (first_big[1] - 1,) + tuple(first_big[1:])
                    assert yz(n, raised)[1] < yz(n, first_big)[1]


def test_extremal_family_small_cases():
    fam = build_extremal_family(4, 2, 1)
    assert set(fam.words()) == set(build_b_family(4, 1).words()) | {0b0111}
    assert count_k_chains(fam, 2) == supersat_bound(4, 2, 1) == 3

    fam = build_extremal_family(4, 3, 1)
    levels = sorted(w.bit_count() for w in fam.words())
    assert fam.size() == 11 and levels.count(1) == 1
    assert set(levels) == {1, 2, 3}
    assert count_k_chains(fam, 3) == 6


def test_extremal_family_x_zero_recovers_middle_rows():
    for n in range(2, 10):
        for k in range(2, min(5, n + 2)):
            fam = build_extremal_family(n, k, 0)
            assert fam.size() == sigma(n, k - 1)
            assert count_k_chains(fam, k) == 0


def test_extremal_family_rejects_oversized_surplus():
    with pytest.raises(ValueError):
        build_extremal_family(4, 2, 5)
    with pytest.raises(ValueError):
        build_extremal_family(4, 2, -1)


def test_extremal_family_attains_bound():
    for n in range(1, 9):
        for k in range(2, min(5, n + 2)):
            for x in {0, 1, tight_x_max(n, k)}:
                fam = build_extremal_family(n, k, x)
                assert fam.size() == sigma(n, k - 1) + x
                assert count_k_chains(fam, k) == supersat_bound(n, k, x)


def test_extremal_count_is_selector_invariant():
    rng = random.Random(31)

    def scattered(n, lvl, count):
        return rng.sample(list(level_words(n, lvl)), count)

    for n, k in ((5, 2), (6, 3), (7, 4)):
        x = min(2, tight_x_max(n, k))
        a = count_k_chains(build_extremal_family(n, k, x), k)
        b = count_k_chains(build_extremal_family(n, k, x, selector=scattered), k)
        assert a == b


def test_extremal_family_selector_validation():
    with pytest.raises(ValueError):
        build_extremal_family(4, 2, 2, selector=lambda n, lvl, c: [0b0111])
    with pytest.raises(ValueError):
        build_extremal_family(4, 2, 1, selector=lambda n, lvl, c: [0b0011])


def test_colex_selector_is_sorted_prefix():
    words = colex_smallest(5, 2, 4)
    assert words == sorted(words)
    assert all(w.bit_count() == 2 for w in words)
    with pytest.raises(ValueError):
        colex_smallest(4, 2, 7)


def test_bound_report_payload():
    report = bound_report(4, 2, 1)
    assert report.to_payload() == {
        "n": 4,
        "k": 2,
        "x": 1,
        "sigma": 6,
        "bound": 3,
        "tight_x_max": 4,
    }
    achieved = bound_report(4, 2, 1, achieved=3)
    assert achieved.to_payload()["achieved"] == 3
