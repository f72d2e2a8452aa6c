"""Dyck words: parsing, statistics, pattern containment, generation, named shapes.

A Dyck word is a balanced string over the step alphabet {U, D} in which every
prefix has at least as many U steps as D steps.  Words are kept in canonical
uppercase text form; every value in this module is immutable and every
operation is a pure function, so everything is safe to share across workers.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import (
    ArgumentOutOfRangeError,
    InvalidCharacterError,
    InvalidShapeParametersError,
    LimitExceededError,
    PrefixViolationError,
    UnbalancedError,
)

#: Largest semilength that generation-backed operations accept without an
#: explicit override (Catalan(14) is about 2.7M words).
DEFAULT_GENERATION_CEILING = 14

_STEP_ALIASES = {
    "U": "U",
    "u": "U",
    "(": "U",
    "D": "D",
    "d": "D",
    ")": "D",
}

# 'D' < 'U' in ASCII, so raw string comparison would order D first.  Translating
# U -> '0', D -> '1' makes ordinary string comparison lexicographic with U < D.
_LEX_TRANSLATION = str.maketrans("UD", "01")


def lex_text(text: str) -> str:
    """Translate a step string into a form whose natural order is U < D."""
    return text.translate(_LEX_TRANSLATION)


def _check_steps(text: str) -> None:
    for pos, step in enumerate(text):
        if step not in ("U", "D"):
            raise InvalidCharacterError(f"invalid step {step!r} at position {pos}")
    ups = text.count("U")
    downs = len(text) - ups
    if ups != downs:
        raise UnbalancedError(f"unbalanced word: {ups} U steps vs {downs} D steps")
    height = 0
    for pos, step in enumerate(text):
        height += 1 if step == "U" else -1
        if height < 0:
            raise PrefixViolationError(
                f"prefix ending at position {pos} has more D than U"
            )


class DyckWord:
    """Immutable canonical Dyck word; equality and hashing are by step text.

    The empty word is representable (generators need it) but is not a poset
    element: the pattern poset's minimum is UD, and the poset operations
    reject semilength-zero input.
    """

    __slots__ = ("_text",)

    def __init__(self, text: str) -> None:
        _check_steps(text)
        self._text = text

    @classmethod
    def _wrap(cls, text: str) -> "DyckWord":
        # Fast path for step strings that are valid by construction.
        word = object.__new__(cls)
        word._text = text
        return word

    @property
    def text(self) -> str:
        return self._text

    @property
    def semilength(self) -> int:
        return len(self._text) // 2

    def to_json_dict(self) -> dict:
        return {"word": self._text, "semilength": self.semilength}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DyckWord) and self._text == other._text

    def __hash__(self) -> int:
        return hash(self._text)

    def __repr__(self) -> str:
        return f"DyckWord({self._text!r})"

    def __str__(self) -> str:
        return self._text


EMPTY_WORD = DyckWord("")


def parse_word(text: str) -> DyckWord:
    """Parse user input into a DyckWord.

    Input is case-insensitive and the parenthesis aliases "(" / ")" are
    accepted for U / D; output is always canonical uppercase UD.  The empty
    string is rejected because parsed words are meant for the poset, whose
    minimum is UD.
    """
    if not text:
        raise InvalidCharacterError("empty input: expected a nonempty U/D step string")
    steps = []
    for pos, raw in enumerate(text):
        step = _STEP_ALIASES.get(raw)
        if step is None:
            raise InvalidCharacterError(f"invalid step {raw!r} at position {pos}")
        steps.append(step)
    return DyckWord("".join(steps))


def lex_key(word: DyckWord) -> tuple[int, str]:
    """Sort key ordering words by semilength, then lexicographically (U < D)."""
    return (len(word.text), lex_text(word.text))


def contains(pattern: DyckWord, word: DyckWord) -> bool:
    """True iff `pattern` occurs in `word` as a (scattered) subsequence.

    Greedy leftmost matching: scan `word` once and consume the next unmatched
    step of `pattern` whenever it appears.  For subsequence containment the
    greedy scan succeeds exactly when some occurrence exists.
    """
    p = pattern.text
    q = word.text
    if len(p) > len(q):
        return False
    if not p:
        return True
    i = 0
    last = len(p) - 1
    for step in q:
        if step == p[i]:
            if i == last:
                return True
            i += 1
    return False


@dataclass(frozen=True)
class RunForm:
    """Alternating run decomposition U^a1 D^b1 ... U^am D^bm of a step string."""

    runs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for up, down in self.runs:
            if up < 1 or down < 1:
                raise ArgumentOutOfRangeError("run lengths must be positive")

    @property
    def m(self) -> int:
        """Number of (ascent, descent) pairs; the peak count for Dyck words."""
        return len(self.runs)

    @property
    def alpha(self) -> int:
        """Total number of U steps."""
        return sum(up for up, _ in self.runs)

    @property
    def beta(self) -> int:
        """Total number of D steps."""
        return sum(down for _, down in self.runs)

    def to_text(self) -> str:
        return "".join("U" * up + "D" * down for up, down in self.runs)

    def to_word(self) -> DyckWord:
        """Reconstruct the word; raises if the runs do not form a Dyck word."""
        return DyckWord(self.to_text())


def runs(word: DyckWord) -> RunForm:
    """Decompose a word into maximal alternating U-runs and D-runs."""
    text = word.text
    pairs = []
    i = 0
    n = len(text)
    while i < n:
        j = i
        while j < n and text[j] == "U":
            j += 1
        k = j
        while k < n and text[k] == "D":
            k += 1
        pairs.append((j - i, k - j))
        i = k
    return RunForm(tuple(pairs))


class WordStats(NamedTuple):
    semilength: int
    peaks: int
    ascents: int
    height: int


def statistics(word: DyckWord) -> WordStats:
    """Semilength, peak count, ascent count and height (max prefix U-surplus)."""
    text = word.text
    ascents = 0
    height = 0
    best = 0
    prev = "D"
    for step in text:
        if step == "U":
            height += 1
            if prev == "D":
                ascents += 1
            if height > best:
                best = height
        else:
            height -= 1
        prev = step
    return WordStats(len(text) // 2, text.count("UD"), ascents, best)


def factors(word: DyckWord) -> tuple[int, ...]:
    """Semilengths of the maximal blocks between consecutive returns to the axis."""
    out = []
    height = 0
    start = 0
    for pos, step in enumerate(word.text):
        height += 1 if step == "U" else -1
        if height == 0:
            out.append((pos + 1 - start) // 2)
            start = pos + 1
    return tuple(out)


def catalan(n: int) -> int:
    if n < 0:
        raise ArgumentOutOfRangeError("catalan index must be nonnegative")
    return math.comb(2 * n, n) // (n + 1)


def check_generation_limit(semilength: int, limit: int | None) -> None:
    """Raise LimitExceededError when `semilength` is above the active ceiling."""
    ceiling = DEFAULT_GENERATION_CEILING if limit is None else limit
    if semilength > ceiling:
        raise LimitExceededError(
            f"semilength {semilength} exceeds the generation ceiling {ceiling}; "
            "pass an explicit limit to override"
        )


@functools.lru_cache(maxsize=None)
def _all_words(semilength: int) -> tuple[DyckWord, ...]:
    if semilength == 0:
        return (EMPTY_WORD,)
    texts: list[str] = []
    steps: list[str] = []

    def extend(ups: int, downs: int) -> None:
        if ups == semilength and downs == semilength:
            texts.append("".join(steps))
            return
        if ups < semilength:
            steps.append("U")
            extend(ups + 1, downs)
            steps.pop()
        if downs < ups:
            steps.append("D")
            extend(ups, downs + 1)
            steps.pop()

    extend(0, 0)
    return tuple(DyckWord._wrap(t) for t in texts)


def generate_all(semilength: int, limit: int | None = None) -> tuple[DyckWord, ...]:
    """All Dyck words of the given semilength, in lexicographic order (U < D).

    The result has exactly Catalan(semilength) entries.  Requests above the
    ceiling raise LimitExceededError unless `limit` is raised explicitly.
    """
    if semilength < 0:
        raise ArgumentOutOfRangeError("semilength must be nonnegative")
    check_generation_limit(semilength, limit)
    return _all_words(semilength)


def iter_all_upto(max_semilength: int, limit: int | None = None) -> Iterator[DyckWord]:
    """Words of semilength 1..max_semilength, rank by rank."""
    for n in range(1, max_semilength + 1):
        yield from generate_all(n, limit)


def staircase(n: int) -> DyckWord:
    """(UD)^n, the n-peak sawtooth.  The poset minimum is staircase(1) = UD."""
    if n < 1:
        raise InvalidShapeParametersError("staircase needs n >= 1")
    return DyckWord._wrap("UD" * n)


def pyramid(n: int) -> DyckWord:
    """U^n D^n, the single-peak word."""
    if n < 1:
        raise InvalidShapeParametersError("pyramid needs n >= 1")
    return DyckWord._wrap("U" * n + "D" * n)


def two_peak(a: int, b: int, h: int = 0) -> DyckWord:
    """U^(a+h) D^a U^b D^(b+h), the generic two-peak word with elevation h."""
    if a < 1 or b < 1 or h < 0:
        raise InvalidShapeParametersError("two_peak needs a >= 1, b >= 1 and h >= 0")
    return DyckWord._wrap("U" * (a + h) + "D" * a + "U" * b + "D" * (b + h))


def elevated_staircase(n: int) -> DyckWord:
    """U (UD)^(n-1) D, the staircase raised one level; semilength n."""
    if n < 1:
        raise InvalidShapeParametersError("elevated_staircase needs n >= 1")
    return DyckWord._wrap("U" + "UD" * (n - 1) + "D")


@dataclass(frozen=True)
class TwoPeakShape:
    """Normalized two-peak parameters (a, b, h) with 1 <= a <= b and h >= 0."""

    a: int
    b: int
    h: int = 0

    def __post_init__(self) -> None:
        if not (1 <= self.a <= self.b) or self.h < 0:
            raise InvalidShapeParametersError("need 1 <= a <= b and h >= 0")

    @property
    def semilength(self) -> int:
        return self.a + self.b + self.h

    def word(self) -> DyckWord:
        return two_peak(self.a, self.b, self.h)
