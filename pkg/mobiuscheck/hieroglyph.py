# -*- coding: utf-8 -*-
"""Hieroglyphs: cyclic words of length 2n in which each of n letters occurs twice.

A :class:`Hieroglyph` stores one linear representative of the cyclic word.
Letters are indexed by order of first occurrence in that representative;
matrices built from a hieroglyph use the same indexing.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from string import ascii_lowercase
from typing import Dict, Iterable, List, Tuple

import numpy as np

from .errors import (
    EmptyToken,
    NotDoubleOccurrence,
    OddLength,
    SameLetter,
    UnknownLetter,
)
from .gf2 import SymMatrixGF2

_SEPARATORS = re.compile(r"[\s,]")
_SPLIT = re.compile(r"\s*,\s*|\s+")


@dataclass(frozen=True)
class Hieroglyph:
    word: Tuple[str, ...]
    n: int = field(init=False, compare=False)
    letters: Tuple[str, ...] = field(init=False, compare=False, repr=False)
    positions: Dict[str, Tuple[int, int]] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        word = tuple(self.word)
        if len(word) % 2:
            raise OddLength("Word has odd length {}.".format(len(word)), length=len(word))
        counts = Counter(word)
        bad = sorted(letter for letter, count in counts.items() if count != 2)
        if bad:
            raise NotDoubleOccurrence(
                "Letters must occur exactly twice: {}.".format(
                    ", ".join("{}x{}".format(letter, counts[letter]) for letter in bad)
                ),
                letters=bad,
            )
        positions = {}
        letters = []
        for index, letter in enumerate(word):
            if letter in positions:
                positions[letter] = (positions[letter][0], index)
            else:
                positions[letter] = (index, None)
                letters.append(letter)
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "n", len(letters))
        object.__setattr__(self, "letters", tuple(letters))
        object.__setattr__(self, "positions", positions)

    def __str__(self):
        return format_tokens(self.word)

    def __len__(self):
        return len(self.word)

    def index(self, letter: str) -> int:
        """Index of ``letter`` in first-occurrence order."""
        self._require(letter)
        return self.letters.index(letter)

    def _require(self, *letters):
        for letter in letters:
            if letter not in self.positions:
                raise UnknownLetter("Unknown letter {!r}.".format(letter), letter=letter)

    def rotated(self, shift: int) -> "Hieroglyph":
        if not self.word:
            return self
        shift %= len(self.word)
        return Hieroglyph(self.word[shift:] + self.word[:shift])

    def reflected(self) -> "Hieroglyph":
        return Hieroglyph(self.word[::-1])

    def relabeled(self, mapping: Dict[str, str]) -> "Hieroglyph":
        return Hieroglyph(tuple(mapping[letter] for letter in self.word))

    def interlacement_rows(self) -> Tuple[int, ...]:
        """Interlacement rows as bitsets, in first-occurrence order.

        A letter interlaces exactly the letters occurring once between its two
        occurrences, i.e. the odd-parity letters of that stretch, which is the
        XOR of two prefix bitsets.
        """
        index = {letter: i for i, letter in enumerate(self.letters)}
        rows = [0] * self.n
        opened = {}
        prefix = 0
        for letter in self.word:
            i = index[letter]
            if i in opened:
                rows[i] = prefix ^ opened.pop(i)
                prefix ^= 1 << i
            else:
                prefix ^= 1 << i
                opened[i] = prefix
        return tuple(rows)

    def endpoints(self) -> Tuple[np.ndarray, np.ndarray]:
        """First and second positions of each letter, in first-occurrence order."""
        first = np.array([self.positions[letter][0] for letter in self.letters], dtype=np.int64)
        second = np.array([self.positions[letter][1] for letter in self.letters], dtype=np.int64)
        return first, second


@dataclass(frozen=True, order=True)
class CanonicalKey:
    word: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.word) // 2

    def tokens(self) -> Tuple[str, ...]:
        return tuple(enumeration_token(i, self.n) for i in self.word)

    def to_hieroglyph(self) -> Hieroglyph:
        return Hieroglyph(self.tokens())

    def __str__(self):
        return format_tokens(self.tokens())


def enumeration_token(i: int, n: int) -> str:
    """The ``i``-th token of the fixed enumeration alphabet for ``n`` letters."""
    if n <= len(ascii_lowercase):
        return ascii_lowercase[i]
    return "x{}".format(i)


def format_tokens(tokens: Iterable[str]) -> str:
    tokens = list(tokens)
    if all(len(token) == 1 for token in tokens):
        return "".join(tokens)
    return " ".join(tokens)


def parse_word(text: str) -> Hieroglyph:
    """Parse a word from text.

    Without separators every character is a letter; otherwise tokens are
    separated by whitespace and/or commas.
    """
    text = text.strip()
    if not text:
        return Hieroglyph(())
    if _SEPARATORS.search(text):
        tokens = _SPLIT.split(text)
        if any(token == "" for token in tokens):
            raise EmptyToken("Empty token in {!r}.".format(text))
    else:
        tokens = list(text)
    return Hieroglyph(tuple(tokens))


def _relabel(sequence: Iterable[int]) -> Tuple[int, ...]:
    mapping = {}
    return tuple(mapping.setdefault(x, len(mapping)) for x in sequence)


def canonical_form(hieroglyph: Hieroglyph) -> CanonicalKey:
    """Least relabeled sequence over all rotations and both orientations."""
    index = {letter: i for i, letter in enumerate(hieroglyph.letters)}
    forward = [index[letter] for letter in hieroglyph.word]
    backward = forward[::-1]
    best = tuple(forward)
    for sequence in (forward, backward):
        for shift in range(len(sequence)):
            candidate = _relabel(sequence[shift:] + sequence[:shift])
            if candidate < best:
                best = candidate
    return CanonicalKey(_relabel(best))


def delete_letters(hieroglyph: Hieroglyph, letters: Iterable[str]) -> Hieroglyph:
    letters = set(letters)
    hieroglyph._require(*sorted(letters))
    return Hieroglyph(tuple(letter for letter in hieroglyph.word if letter not in letters))


def keep_letters(hieroglyph: Hieroglyph, letters: Iterable[str]) -> Hieroglyph:
    """Delete every letter except ``letters``."""
    letters = set(letters)
    hieroglyph._require(*sorted(letters))
    return Hieroglyph(tuple(letter for letter in hieroglyph.word if letter in letters))


def interlaces(hieroglyph: Hieroglyph, a: str, b: str) -> bool:
    hieroglyph._require(a, b)
    if a == b:
        raise SameLetter("A letter does not interlace itself ({!r}).".format(a), letter=a)
    a1, a2 = hieroglyph.positions[a]
    b1, b2 = hieroglyph.positions[b]
    return (a1 < b1 < a2) != (a1 < b2 < a2)


def interlacement_matrix(hieroglyph: Hieroglyph) -> SymMatrixGF2:
    return SymMatrixGF2(hieroglyph.n, hieroglyph.interlacement_rows())


def interlacement_degrees(hieroglyph: Hieroglyph, chunk_rows: int) -> np.ndarray:
    """Number of letters each letter interlaces, computed block by block.

    Every pair is compared once per block, so time is quadratic in the word
    length while memory stays at ``chunk_rows * n`` booleans.
    """
    first, second = hieroglyph.endpoints()
    degrees = np.zeros(hieroglyph.n, dtype=np.int64)
    for start in range(0, hieroglyph.n, chunk_rows):
        lo = first[start:start + chunk_rows, None]
        hi = second[start:start + chunk_rows, None]
        inside_first = (first[None, :] > lo) & (first[None, :] < hi)
        inside_second = (second[None, :] > lo) & (second[None, :] < hi)
        degrees[start:start + chunk_rows] = np.count_nonzero(inside_first ^ inside_second, axis=1)
    return degrees


def clique_word(m: int) -> Hieroglyph:
    """The hieroglyph a1 a2 ... am a1 a2 ... am."""
    tokens: List[str] = [enumeration_token(i, m) for i in range(m)]
    return Hieroglyph(tuple(tokens + tokens))
