"""Words over a finite alphabet and dense-rank pattern containment.

A word is a finite sequence of letters from {1, ..., d}.  Two sequences are
order-isomorphic when they compare the same position-by-position under dense
ranking: equal letters share a rank and the next larger letter takes the next
consecutive rank.  A pattern is a word that is a fixed point of dense ranking,
i.e. its letters are exactly {1, ..., m} for some m; such words are also
called preferential arrangements, and the number of them of length k is the
k-th ordered Bell number.

A word contains a pattern when some subsequence of the word is
order-isomorphic to it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Optional, Sequence

__all__ = [
    "Word",
    "Pattern",
    "LetterPermutation",
    "dense_rank",
    "contains_pattern",
    "contains_pattern_bruteforce",
    "find_embedding",
    "enumerate_preferential_arrangements",
    "fubini",
    "relabel_canonical",
    "apply_letter_permutation",
]

# All-subsequences cross-check oracle is quadratic-to-exponential; keep it on
# a short leash so nobody feeds it a long word by accident.
BRUTEFORCE_MAX_WORD = 10

# enumerate_preferential_arrangements(k) has fubini(k) results (541 at k=5,
# 545835 at k=8); refuse anything larger.
MAX_PATTERN_LENGTH = 8


def _letters_from_text(text: str) -> tuple[int, ...]:
    if "," in text:
        try:
            letters = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(
                f"malformed word {text!r}: expected comma-separated integers"
            ) from None
    elif text == "":
        letters = ()
    else:
        if not text.isdigit():
            raise ValueError(f"malformed word {text!r}: expected digits or comma-separated integers")
        letters = tuple(int(ch) for ch in text)
    if any(v < 1 for v in letters):
        raise ValueError(f"malformed word {text!r}: letters must be positive")
    return letters


def _letters_to_text(letters: Sequence[int], alphabet_size: int) -> str:
    # Digit string for d <= 9, comma-separated beyond; the two forms round-trip
    # through parse().
    if alphabet_size <= 9:
        return "".join(str(v) for v in letters)
    return ",".join(str(v) for v in letters)


@dataclass(frozen=True, slots=True)
class Word:
    """A word over the alphabet {1, ..., alphabet_size}.

    >>> Word.parse("5371473").letters
    (5, 3, 7, 1, 4, 7, 3)
    >>> str(Word((1, 2, 1), 2))
    '121'
    """

    letters: tuple[int, ...]
    alphabet_size: int

    def __post_init__(self) -> None:
        if self.alphabet_size < 1:
            raise ValueError("alphabet_size must be at least 1")
        for v in self.letters:
            if not 1 <= v <= self.alphabet_size:
                raise ValueError(f"letter {v} outside alphabet 1..{self.alphabet_size}")

    @classmethod
    def parse(cls, text: str, alphabet_size: Optional[int] = None) -> "Word":
        """Build a word from its digit-string (d <= 9) or comma-separated form."""
        letters = _letters_from_text(text)
        if alphabet_size is None:
            alphabet_size = max(letters, default=1)
        return cls(letters, alphabet_size)

    @classmethod
    def from_letters(cls, letters: Sequence[int], alphabet_size: Optional[int] = None) -> "Word":
        letters = tuple(letters)
        if alphabet_size is None:
            alphabet_size = max(letters, default=1)
        return cls(letters, alphabet_size)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return _letters_to_text(self.letters, self.alphabet_size)

    def prefix(self, length: int) -> "Word":
        return Word(self.letters[:length], self.alphabet_size)


@dataclass(frozen=True, slots=True)
class Pattern:
    """A dense-rank canonical word: its letters are exactly {1, ..., m}.

    Construction rejects non-canonical sequences, so every Pattern in
    circulation satisfies dense_rank(p) == p.

    >>> Pattern.parse("121").letters
    (1, 2, 1)
    >>> Pattern.parse("131")
    Traceback (most recent call last):
        ...
    ValueError: '131' is not dense-rank canonical
    """

    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        used = set(self.letters)
        if used and used != set(range(1, max(used) + 1)):
            text = "".join(str(v) for v in self.letters)
            raise ValueError(f"{text!r} is not dense-rank canonical")

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        return cls(_letters_from_text(text))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(str(v) for v in self.letters) if self.letters else ""

    def rank_count(self) -> int:
        """Number of distinct ranks used."""
        return max(self.letters, default=0)

    def as_word(self) -> Word:
        return Word(self.letters, max(self.letters, default=1))


@dataclass(frozen=True, slots=True)
class LetterPermutation:
    """A bijection on {1, ..., d}; images[v - 1] is the image of letter v."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, d: int) -> "LetterPermutation":
        return cls(tuple(range(1, d + 1)))

    def __call__(self, letter: int) -> int:
        return self.images[letter - 1]

    @property
    def degree(self) -> int:
        return len(self.images)


def dense_rank(word: Word) -> Pattern:
    """The dense-rank image of a word: equal letters share a rank, the next
    larger letter takes the next consecutive rank.

    >>> str(dense_rank(Word.parse("571")))
    '231'
    >>> str(dense_rank(Word.parse("373")))
    '121'
    """
    return Pattern(_dense_rank_tuple(word.letters))


def _dense_rank_tuple(letters: Sequence[int]) -> tuple[int, ...]:
    rank = {v: i + 1 for i, v in enumerate(sorted(set(letters)))}
    return tuple(rank[v] for v in letters)


def _find_embedding(letters: Sequence[int], pattern: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Backtracking search over pattern positions, carrying the partial
    assignment of pattern ranks to concrete letter values.  Returns the first
    witness found (indices are 0-based) or None.
    """
    n = len(letters)
    k = len(pattern)
    assign: dict[int, int] = {}
    picked: list[int] = []

    def extend(start: int, pos: int) -> bool:
        if pos == k:
            return True
        if n - start < k - pos:  # not enough letters left
            return False
        r = pattern[pos]
        bound = n - (k - pos) + 1
        fixed = assign.get(r)
        for i in range(start, bound):
            v = letters[i]
            if fixed is not None:
                if v != fixed:
                    continue
                picked.append(i)
                if extend(i + 1, pos + 1):
                    return True
                picked.pop()
            else:
                consistent = True
                for r2, v2 in assign.items():
                    if v2 == v or (r2 < r) != (v2 < v):
                        consistent = False
                        break
                if not consistent:
                    continue
                assign[r] = v
                picked.append(i)
                if extend(i + 1, pos + 1):
                    return True
                picked.pop()
                del assign[r]
        return False

    if extend(0, 0):
        return tuple(picked)
    return None


def find_embedding(word: Word, pattern: Pattern) -> Optional[tuple[int, ...]]:
    """A witness embedding of the pattern into the word, as a strictly
    increasing tuple of 0-based indices whose subsequence dense-ranks to the
    pattern; None when the word does not contain the pattern.
    """
    return _find_embedding(word.letters, pattern.letters)


def contains_pattern(word: Word, pattern: Pattern) -> bool:
    """Whether some subsequence of the word is order-isomorphic to the pattern.

    >>> contains_pattern(Word.parse("5371473"), Pattern.parse("231"))
    True
    >>> contains_pattern(Word.parse("111111"), Pattern.parse("123"))
    False
    """
    return _find_embedding(word.letters, pattern.letters) is not None


def contains_pattern_bruteforce(word: Word, pattern: Pattern) -> bool:
    """Containment decided by scanning every length-k subsequence.

    Cross-check oracle for the backtracking search; only sensible for short
    words, so words longer than BRUTEFORCE_MAX_WORD are rejected.
    """
    if len(word) > BRUTEFORCE_MAX_WORD:
        raise ValueError(f"brute-force containment capped at |word| <= {BRUTEFORCE_MAX_WORD}")
    k = len(pattern)
    if k > len(word):
        return False
    target = pattern.letters
    for idxs in combinations(range(len(word)), k):
        if _dense_rank_tuple([word.letters[i] for i in idxs]) == target:
            return True
    return False


@lru_cache(maxsize=None)
def fubini(k: int) -> int:
    """Ordered Bell number: preferential arrangements of length k.

    >>> [fubini(k) for k in range(6)]
    [1, 1, 3, 13, 75, 541]
    """
    if k < 0:
        raise ValueError("fubini is defined for k >= 0")
    if k == 0:
        return 1
    return sum(math.comb(k, j) * fubini(k - j) for j in range(1, k + 1))


def _grow_arrangements(
    prefix: list[int], max_used: int, missing: set[int], k: int, out: list[tuple[int, ...]]
) -> None:
    # missing holds the values in 1..max_used not yet used; a leaf is canonical
    # exactly when it is empty.
    if len(prefix) == k:
        if not missing:
            out.append(tuple(prefix))
        return
    remaining = k - len(prefix) - 1
    for v in range(1, k + 1):
        if v <= max_used:
            was_missing = v in missing
            if len(missing) - was_missing > remaining:
                continue
            if was_missing:
                missing.discard(v)
            prefix.append(v)
            _grow_arrangements(prefix, max_used, missing, k, out)
            prefix.pop()
            if was_missing:
                missing.add(v)
        else:
            # Jumping to v opens the gap max_used+1..v-1, which the remaining
            # positions must still be able to fill; larger v only widens it.
            opened = set(range(max_used + 1, v))
            if len(missing) + len(opened) > remaining:
                break
            missing |= opened
            prefix.append(v)
            _grow_arrangements(prefix, v, missing, k, out)
            prefix.pop()
            missing -= opened


@lru_cache(maxsize=None)
def _arrangement_tuples(k: int) -> tuple[tuple[int, ...], ...]:
    out: list[tuple[int, ...]] = []
    _grow_arrangements([], 0, set(), k, out)
    return tuple(out)


def enumerate_preferential_arrangements(k: int) -> list[Pattern]:
    """All canonical patterns of length k, in lexicographic order.

    >>> [str(p) for p in enumerate_preferential_arrangements(2)]
    ['11', '12', '21']
    """
    if k < 1:
        raise ValueError("pattern length must be at least 1")
    if k > MAX_PATTERN_LENGTH:
        raise ValueError(
            f"refusing to enumerate fubini({k}) = {fubini(k)} patterns"
            f" (cap is k <= {MAX_PATTERN_LENGTH})"
        )
    return [Pattern(t) for t in _arrangement_tuples(k)]


def relabel_canonical(word: Word) -> Word:
    """Rename letters so first occurrences appear in increasing order.

    Two words are letter-isomorphic exactly when their canonical forms are
    equal.  The repetition structure is preserved; unlike dense_rank, the
    relative order of letter values is not.

    >>> str(relabel_canonical(Word.parse("2123212")))
    '1213121'
    """
    if not word.letters:
        raise ValueError("relabel_canonical requires a non-empty word")
    renaming: dict[int, int] = {}
    for v in word.letters:
        if v not in renaming:
            renaming[v] = len(renaming) + 1
    return Word(tuple(renaming[v] for v in word.letters), word.alphabet_size)


def apply_letter_permutation(word: Word, sigma: LetterPermutation) -> Word:
    """Pointwise relabeling of the word's letters by a bijection on its alphabet."""
    if sigma.degree != word.alphabet_size:
        raise ValueError(
            f"permutation degree {sigma.degree} does not match alphabet size {word.alphabet_size}"
        )
    return Word(tuple(sigma.images[v - 1] for v in word.letters), word.alphabet_size)


def all_letter_permutations(d: int) -> Iterator[LetterPermutation]:
    """All d! bijections on {1, ..., d}."""
    for images in permutations(range(1, d + 1)):
        yield LetterPermutation(images)
