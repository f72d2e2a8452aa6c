"""Closed formulas for interval sizes, rank counts, cover counts and Möbius values.

Every function here is a pure integer formula with a strict validity domain;
each one is paired in the test suite with the brute-force poset engine.  All
divisions are exact and checked.
"""

from __future__ import annotations

import math

from .errors import ArgumentOutOfRangeError
from .words import DyckWord, RunForm, factors


def _exact_div(numerator: int, denominator: int) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(f"non-exact division: {numerator} / {denominator}")
    return quotient


def _require_shape(a: int, b: int, h: int) -> None:
    if not (1 <= a <= b) or h < 0:
        raise ArgumentOutOfRangeError(
            f"two-peak parameters need 1 <= a <= b and h >= 0, got ({a}, {b}, {h})"
        )


def narayana(n: int, k: int) -> int:
    """Number of Dyck words of semilength n with exactly k peaks.

    Total convention: out-of-range arguments give 0, except narayana(0, 0) = 1.
    """
    if n == 0 and k == 0:
        return 1
    if n < 1 or k < 1 or k > n:
        return 0
    return _exact_div(math.comb(n, k) * math.comb(n, k - 1), n)


def staircase_rank_count(n: int, k: int) -> int:
    """Number of semilength-k elements below the n-peak staircase."""
    if n < 1 or not 1 <= k <= n:
        raise ArgumentOutOfRangeError(f"need 1 <= k <= n, got (n, k) = ({n}, {k})")
    return sum(narayana(k, m) for m in range(max(1, 2 * k - n), k + 1))


def staircase_interval_size(n: int) -> int:
    """Total number of elements of the initial interval under the n-peak staircase."""
    if n < 1:
        raise ArgumentOutOfRangeError("need n >= 1")
    return sum(staircase_rank_count(n, k) for k in range(1, n + 1))


def embeddable_in_staircase(rf: RunForm, n: int) -> bool:
    """True iff the run form's string embeds in (UD)^n: alpha+beta-n <= m <= n."""
    return rf.alpha + rf.beta - n <= rf.m <= n


def phi0(a: int, b: int) -> int:
    """Two-peak words below the flat two-peak word with parameters (a, b):
    a(a+1)(3b-a+1)/6.  Also the number of squares in an a x b grid."""
    _require_shape(a, b, 0)
    return _exact_div(a * (a + 1) * (3 * b - a + 1), 6)


def phih(a: int, b: int, h: int) -> int:
    """Two-peak words below the elevated two-peak word: phi0(a, b) + h*a*b."""
    _require_shape(a, b, h)
    return phi0(a, b) + h * a * b


def two_peak_interval_size(a: int, b: int, h: int) -> int:
    """Size of the initial interval under the (a, b, h) two-peak word.

    Two-peak elements given by phih, plus the b+h single-peak elements
    (one pyramid per height 1..b+h).
    """
    _require_shape(a, b, h)
    return phih(a, b, h) + b + h


def two_peak_rank_count(a: int, b: int, h: int, r: int) -> int:
    """Number of semilength-r elements under the (a, b, h) two-peak word.

    Sum over the first-valley depth i of the admissible third-run lengths,
    plus one single-peak element whenever r <= b+h.  Defined for every
    r >= 1 (r = 1 counts just the minimum UD; above a+b+h the count is 0).
    """
    _require_shape(a, b, h)
    if r < 1:
        raise ArgumentOutOfRangeError("rank must be >= 1")
    total = 1 if r <= b + h else 0
    for i in range(max(1, r - b - h), min(a, r - 1) + 1):
        term = min(b, r - i) - max(1, r - a - h) + 1
        if term > 0:
            total += term
    return total


def two_peak_rank_count_h0(a: int, b: int, r: int) -> int:
    """Flat-case rank count via m = min(r-1, a, a+b-r+1): C(m+1, 2) + [r <= b]."""
    _require_shape(a, b, 0)
    if not 2 <= r <= a + b:
        raise ArgumentOutOfRangeError(f"need 2 <= r <= a + b, got r = {r}")
    m = min(r - 1, a, a + b - r + 1)
    return math.comb(m + 1, 2) + (1 if r <= b else 0)


def delta_class(i: int, j: int, k: int) -> int:
    """How many words a two-peak word with parameters (i, j, k) covers: 1 to 4.

    One cover always exists; widening the first valley (i >= 2), widening the
    second peak (j >= 2) and lowering the elevation (k >= 1) each contribute
    one more distinct covered word.
    """
    if i < 1 or j < 1 or k < 0:
        raise ArgumentOutOfRangeError(f"need i, j >= 1 and k >= 0, got ({i}, {j}, {k})")
    return 1 + (i >= 2) + (j >= 2) + (k >= 1)


def delta_histogram_closed(a: int, b: int) -> dict[int, int]:
    """Cover-count histogram of the initial interval under the flat (a, b) word.

    Classes 1..4 only; the minimum UD (which covers nothing) is excluded.
    """
    _require_shape(a, b, 0)
    quartic = (
        (a - 1) ** 2 * (b - 1)
        - (a + b - 2) * math.comb(a, 2)
        + _exact_div(a * (a - 1) * (2 * a - 1), 6)
    )
    return {1: b, 2: 2 * a + b - 3, 3: (a - 1) * (2 * b - 3), 4: quartic}


def s1_two_peak_h0(a: int, b: int) -> int:
    """Hasse edges of the initial interval under the flat (a, b) two-peak word:
    -(2a^3 - 6a^2 b + a - 3b + 3)/3."""
    _require_shape(a, b, 0)
    return _exact_div(-(2 * a**3 - 6 * a**2 * b + a - 3 * b + 3), 3)


def mobius_pyramid(n: int) -> int:
    """Möbius value of the single-chain interval below the n-step pyramid."""
    if n < 1:
        raise ArgumentOutOfRangeError("need n >= 1")
    if n == 1:
        return 1
    return -1 if n == 2 else 0


def mobius_two_peak(a: int, b: int, h: int) -> int:
    """Möbius value of the initial interval under the (a, b, h) two-peak word.

    Arguments with a > b are normalized by swapping: reversing a word is an
    automorphism of the pattern order and sends the (a, b, h) word to the
    (b, a, h) one.  Zero as soon as max(h, b - a) > 1, otherwise +-1 or +-2.
    """
    if a < 1 or b < 1 or h < 0:
        raise ArgumentOutOfRangeError(
            f"two-peak parameters need a, b >= 1 and h >= 0, got ({a}, {b}, {h})"
        )
    if a > b:
        a, b = b, a
    if max(h, b - a) > 1:
        return 0
    if b == a + 1:
        return -1 if h == 1 else 1
    if h == 1:
        return 2 if a >= 2 else 1
    return -2 if a >= 2 else -1


def mobius_staircase_rank2(n: int) -> int:
    """mu between the (n-1)-peak and (n+1)-peak staircases: C(n, 2)."""
    if n < 2:
        raise ArgumentOutOfRangeError("need n >= 2")
    return math.comb(n, 2)


def mobius_elevated_staircase_rank2(n: int) -> int:
    """mu between the elevated staircases of semilengths n and n+2: n^2.

    This is the maximum Möbius value over rank-2 intervals with bottom
    semilength n.
    """
    if n < 1:
        raise ArgumentOutOfRangeError("need n >= 1")
    return n * n


def cover_count_formula(word: DyckWord) -> int:
    """Number of words covering `word`: 1 + n^2 - sum of pairwise factor products."""
    if word.semilength < 1:
        raise ArgumentOutOfRangeError("poset elements have semilength >= 1")
    f = factors(word)
    n = word.semilength
    pairwise = _exact_div(n * n - sum(x * x for x in f), 2)
    return 1 + n * n - pairwise
