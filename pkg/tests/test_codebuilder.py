from fractions import Fraction
import random

from hypothesis import given, settings, strategies as st
import numpy as np
import pytest

from apfc.codebuilder import (canonical_assign, fixed_length_code, gilbert_moore_code, kraft_sum,
                              shannon_code, shannon_lengths)
from apfc.errors import UsageError
from apfc.model import FrequencyTable, SmoothedDistribution, derive_params, smoothed_distribution, ceil_log2

from helpers import brute_shannon_length, doubling_bits, is_prefix_free

F = Fraction


def dist(*probs):
    return SmoothedDistribution.from_fractions([F(p) for p in probs])


@pytest.mark.parametrize("sigma,words", [
    (4, ["00", "01", "10", "11"]),
    (3, ["00", "01", "10"]),
    (2, ["0", "1"]),
])
def test_fixed_length_code(sigma, words):
    code = fixed_length_code(sigma)
    assert code.codewords() == words
    assert code.max_length == len(words[0])


@pytest.mark.parametrize("probs,lengths", [
    (["1/2", "1/4", "1/4"], [1, 2, 2]),
    (["15/16", "1/16"], [1, 4]),
    (["1/3", "1/3", "1/3"], [2, 2, 2]),
    (["1", "0"], None),
])
def test_shannon_lengths(probs, lengths):
    d = dist(*probs)
    if lengths is None:
        with pytest.raises(UsageError):
            shannon_lengths(d)
    else:
        assert shannon_lengths(d) == lengths


def test_shannon_length_clamped_for_certain_symbol():
    assert shannon_lengths(SmoothedDistribution((5,), 5)) == [1]


@pytest.mark.parametrize("lengths,words", [
    ([1, 2, 2], ["0", "10", "11"]),
    ([1, 4], ["0", "1000"]),
    ([2, 2, 2, 2], ["00", "01", "10", "11"]),
    ([3, 1, 3, 2], ["110", "0", "111", "10"]),
])
def test_canonical_assign(lengths, words):
    assert canonical_assign(lengths).codewords() == words


def test_canonical_rejects_kraft_violation():
    with pytest.raises(AssertionError):
        canonical_assign([1, 1, 1])


@pytest.mark.parametrize("probs,words", [
    (["1/2", "1/2"], ["01", "11"]),
    (["1/4", "1/2", "1/4"], ["001", "10", "111"]),
    (["1/4"] * 4, ["001", "011", "101", "111"]),
    (["5/6", "1/6"], ["01", "1110"]),
])
def test_gilbert_moore(probs, words):
    code = gilbert_moore_code(dist(*probs))
    assert code.codewords() == words
    assert is_prefix_free(words)
    assert words == sorted(words)


def gm_by_doubling(d: SmoothedDistribution):
    words = []
    cum = 0
    for num in d.numerators:
        l = brute_shannon_length(num, d.denominator) + 1
        words.append(doubling_bits(2 * cum + num, 2 * d.denominator, l))
        cum += num
    return words


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(1, 10 ** 6), min_size=2, max_size=300))
def test_codes_against_brute_force(nums):
    d = SmoothedDistribution(tuple(nums), sum(nums))
    lengths = shannon_lengths(d)
    assert lengths == [brute_shannon_length(x, d.denominator) for x in nums]
    assert kraft_sum(lengths) <= 1
    s = shannon_code(d)
    assert is_prefix_free(s.codewords())
    assert [len(w) for w in s.codewords()] == lengths
    gm = gilbert_moore_code(d)
    words = gm.codewords()
    assert words == gm_by_doubling(d)
    assert is_prefix_free(words)
    # alphabetic: binary fractions strictly increase with the symbol
    fracs = [F(int(w, 2), 2 ** len(w)) for w in words]
    assert all(a < b for a, b in zip(fracs, fracs[1:]))


def test_prefix_free_large_alphabets():
    rng = random.Random(7)
    for sigma in (512, 1024):
        nums = tuple(rng.randint(1, 10 ** 4) for _ in range(sigma))
        d = SmoothedDistribution(nums, sum(nums))
        assert is_prefix_free(shannon_code(d).codewords())
        assert is_prefix_free(gilbert_moore_code(d).codewords())


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 64), st.integers(2, 10 ** 6), st.data())
def test_length_cap_on_smoothed_distributions(sigma, n, data):
    params = derive_params(sigma, n)
    if params.b > n:
        n = params.b
    k = data.draw(st.integers(1, max(1, n // params.b)))
    total = k * params.b
    hot = data.draw(st.integers(0, sigma - 1))
    counts = np.zeros(sigma, dtype=np.int64)
    counts[hot] = total  # most skewed state: all other symbols at the floor
    d = smoothed_distribution(FrequencyTable(sigma, counts, total), params, k)
    cap = ceil_log2(sigma * params.L)
    assert max(shannon_lengths(d)) <= cap
    assert gilbert_moore_code(d).max_length <= cap + 1


def test_canonical_is_deterministic():
    lengths = [3, 3, 2, 4, 4, 2]
    assert canonical_assign(lengths) == canonical_assign(list(lengths))
