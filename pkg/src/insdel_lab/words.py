"""Words over finite integer alphabets: LCS, Levenshtein distance, insdel balls.

Distances here count insertions and deletions only.  A substitution is not an
atomic edit; it costs one deletion plus one insertion.  Consequently the
distance between two words of equal length is always even.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

DEFAULT_BALL_CAP = 10_000_000


class AlphabetMismatchError(ValueError):
    """Two words drawn from different alphabets were combined."""


class BallSizeError(RuntimeError):
    """A requested ball enumeration would exceed the configured size cap."""

    def __init__(self, estimate: int, cap: int):
        super().__init__(
            f"estimated ball size {estimate} exceeds cap {cap}; "
            "raise the cap or use the membership predicate instead"
        )
        self.estimate = estimate
        self.cap = cap


@dataclass(frozen=True)
class Word:
    """Immutable sequence of symbols drawn from {0, ..., q-1}."""

    symbols: tuple[int, ...]
    q: int

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError(f"alphabet size must be at least 2, got {self.q}")
        for s in self.symbols:
            if not isinstance(s, int) or not 0 <= s < self.q:
                raise ValueError(f"symbol {s!r} outside alphabet of size {self.q}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def to_text(self) -> str:
        """Comma-separated decimal symbols; the empty word is the empty string."""
        return ",".join(str(s) for s in self.symbols)

    @classmethod
    def from_text(cls, text: str, q: int) -> "Word":
        text = text.strip()
        if not text:
            return cls((), q)
        return cls(tuple(int(part) for part in text.split(",")), q)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Shortlex order: by length, then lexicographically."""
        return (len(self.symbols), self.symbols)


def word(symbols: Iterable[int], q: int) -> Word:
    """Convenience constructor accepting any iterable of symbols."""
    return Word(tuple(symbols), q)


def all_words(q: int, length: int) -> Iterator[Word]:
    """All q-ary words of exactly the given length, in lexicographic order."""
    for symbols in itertools.product(range(q), repeat=length):
        yield Word(symbols, q)


def words_up_to(q: int, max_length: int) -> Iterator[Word]:
    """All q-ary words of length 0..max_length, in shortlex order."""
    for length in range(max_length + 1):
        yield from all_words(q, length)


def _require_same_alphabet(a: Word, b: Word) -> None:
    if a.q != b.q:
        raise AlphabetMismatchError(f"alphabet sizes differ: {a.q} vs {b.q}")


def lcs_length(a: Word, b: Word) -> int:
    """Length of a longest common subsequence, by the standard quadratic DP."""
    _require_same_alphabet(a, b)
    s, t = a.symbols, b.symbols
    if len(s) < len(t):
        s, t = t, s
    prev = [0] * (len(t) + 1)
    for x in s:
        curr = [0]
        for j, y in enumerate(t, start=1):
            curr.append(prev[j - 1] + 1 if x == y else max(prev[j], curr[-1]))
        prev = curr
    return prev[-1]


def levenshtein_distance(a: Word, b: Word) -> int:
    """Minimum number of insertions plus deletions transforming `a` into `b`.

    Equals len(a) + len(b) - 2 * lcs_length(a, b): an optimal transformation
    deletes everything outside a longest common subsequence and inserts the
    rest.
    """
    return len(a) + len(b) - 2 * lcs_length(a, b)


@dataclass(frozen=True)
class InsdelPair:
    """An (insertion count, deletion count) budget or cost."""

    insertions: int
    deletions: int

    def __post_init__(self) -> None:
        if self.insertions < 0 or self.deletions < 0:
            raise ValueError("insertion/deletion counts must be nonnegative")

    @property
    def total(self) -> int:
        return self.insertions + self.deletions

    def within(self, t_ins: int, t_del: int) -> bool:
        return self.insertions <= t_ins and self.deletions <= t_del


def minimal_insdel_pair(a: Word, b: Word) -> InsdelPair:
    """Componentwise-minimal (insertions, deletions) transforming `a` into `b`.

    Any transformation using i insertions and d deletions has i >= len(b) - lcs
    and d >= len(a) - lcs, and that pair is achieved by keeping a longest
    common subsequence, so the minimum is attained in both coordinates at once.
    """
    ell = lcs_length(a, b)
    return InsdelPair(insertions=len(b) - ell, deletions=len(a) - ell)


def in_insdel_ball(target: Word, centre: Word, t_ins: int, t_del: int) -> bool:
    """True iff `target` is reachable from `centre` within the given budgets.

    Lazy membership test: O(len(target) * len(centre)) time, no enumeration.
    """
    _require_same_alphabet(target, centre)
    return minimal_insdel_pair(centre, target).within(t_ins, t_del)


def insertion_ball_size(length: int, t_ins: int, q: int) -> int:
    """Exact size of the radius-t_ins insertion ball around any length-`length` word.

    The count of supersequences reachable by exactly i insertions is
    sum_j C(length+i, j) (q-1)^j for j = 0..i, independent of the centre word;
    summing over i = 0..t_ins gives the ball size (lengths are disjoint).
    """
    if length < 0 or t_ins < 0 or q < 2:
        raise ValueError("need length >= 0, t_ins >= 0, q >= 2")
    return sum(
        sum(comb(length + i, j) * (q - 1) ** j for j in range(i + 1))
        for i in range(t_ins + 1)
    )


def insdel_ball_size_bound(length: int, t_ins: int, t_del: int, q: int) -> int:
    """Upper bound on the insdel ball size used for cap checks before enumerating."""
    dels = sum(comb(length, j) for j in range(min(t_del, length) + 1))
    return dels * insertion_ball_size(length, t_ins, q)


def _subsequences(symbols: tuple[int, ...], t_del: int) -> set[tuple[int, ...]]:
    """All distinct subsequences obtained by deleting at most t_del positions."""
    n = len(symbols)
    seen: set[tuple[int, ...]] = set()
    for dels in range(min(t_del, n) + 1):
        for keep in itertools.combinations(range(n), n - dels):
            seen.add(tuple(symbols[i] for i in keep))
    return seen


def _supersequences(base: set[tuple[int, ...]], t_ins: int, q: int) -> set[tuple[int, ...]]:
    """Everything reachable from `base` by at most t_ins single-symbol insertions."""
    out = set(base)
    frontier = set(base)
    for _ in range(t_ins):
        grown: set[tuple[int, ...]] = set()
        for w in frontier:
            for i in range(len(w) + 1):
                head, tail = w[:i], w[i:]
                for s in range(q):
                    grown.add(head + (s,) + tail)
        frontier = grown - out
        out |= frontier
    return out


def insdel_ball(x: Word, t_ins: int, t_del: int, cap: int = DEFAULT_BALL_CAP) -> set[Word]:
    """All words reachable from `x` by at most t_ins insertions and t_del deletions.

    Enumeration applies deletions first, then insertions; every reachable word
    arises this way because a longest common subsequence witnesses a
    delete-then-insert transformation of the same cost.  Fails fast with
    BallSizeError when the predicted size exceeds `cap`.
    """
    if t_ins < 0 or t_del < 0:
        raise ValueError("radii must be nonnegative")
    if t_del > len(x):
        raise ValueError(f"deletion radius {t_del} exceeds word length {len(x)}")
    estimate = insdel_ball_size_bound(len(x), t_ins, t_del, x.q)
    if estimate > cap:
        raise BallSizeError(estimate, cap)
    reached = _supersequences(_subsequences(x.symbols, t_del), t_ins, x.q)
    return {Word(symbols, x.q) for symbols in reached}


def levenshtein_ball(x: Word, distance: int, cap: int = DEFAULT_BALL_CAP) -> set[Word]:
    """All words within the given Levenshtein distance of `x`.

    Equals the union of insdel balls over budget splits t_ins + t_del <= distance;
    only the maximal splits (distance - j, j) need enumerating.
    """
    if distance < 0:
        raise ValueError("distance must be nonnegative")
    splits = [(distance - j, j) for j in range(min(distance, len(x)) + 1)]
    estimate = sum(insdel_ball_size_bound(len(x), ti, td, x.q) for ti, td in splits)
    if estimate > cap:
        raise BallSizeError(estimate, cap)
    ball: set[Word] = set()
    for t_ins, t_del in splits:
        ball |= insdel_ball(x, t_ins, t_del, cap=cap)
    return ball
