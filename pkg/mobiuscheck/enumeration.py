# -*- coding: utf-8 -*-
"""Exhaustive generation of hieroglyphs and the realizability census."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import prod
from string import ascii_lowercase
from typing import Iterator, List, Optional

from . import workers
from .config import config
from .errors import VerificationError, check_bound
from .hieroglyph import CanonicalKey, Hieroglyph, canonical_form
from .mobius import is_weakly_realizable
from .ribbon import oracle_weak_realizability

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Census:
    n: int
    total_matchings: int
    classes: int
    realizable_classes: int
    per_class: Optional[List[dict]] = field(default=None, compare=False)

    def as_dict(self):
        result = {
            "n": self.n,
            "total_matchings": self.total_matchings,
            "classes": self.classes,
            "realizable_classes": self.realizable_classes,
        }
        if self.per_class is not None:
            result["per_class"] = self.per_class
        return result

    def as_table(self):
        header = "n\ttotal_matchings\tclasses\trealizable_classes"
        row = "{}\t{}\t{}\t{}".format(
            self.n, self.total_matchings, self.classes, self.realizable_classes
        )
        return header + "\n" + row + "\n"


def double_factorial(n: int) -> int:
    """(2n - 1)!!, the number of perfect matchings of 2n points."""
    return prod(range(1, 2 * n, 2))


def _matchings(slots: List[Optional[int]], letter: int) -> Iterator[List[Optional[int]]]:
    try:
        first = slots.index(None)
    except ValueError:
        yield slots
        return
    slots[first] = letter
    for partner in range(first + 1, len(slots)):
        if slots[partner] is None:
            slots[partner] = letter
            yield from _matchings(slots, letter + 1)
            slots[partner] = None
    slots[first] = None


def _words(n: int, first_partner: Optional[int] = None) -> Iterator[Hieroglyph]:
    if n == 0:
        yield Hieroglyph(())
        return
    partners = range(1, 2 * n) if first_partner is None else (first_partner,)
    for partner in partners:
        slots: List[Optional[int]] = [None] * (2 * n)
        slots[0] = slots[partner] = 0
        for filled in _matchings(slots, 1):
            yield Hieroglyph(tuple(ascii_lowercase[i] for i in filled))


def enumerate_words(n: int) -> Iterator[Hieroglyph]:
    """Every double-occurrence word of length 2n, letters named by first occurrence."""
    check_bound("n", n, config.get("ENUMERATE_MAX_N"))
    return _words(n)


def _branch_keys(n: int, partner: Optional[int]) -> List[CanonicalKey]:
    return list({canonical_form(word) for word in _words(n, partner)})


def enumerate_classes(n: int) -> List[CanonicalKey]:
    """Canonical keys of all hieroglyphs with n letters, sorted."""
    check_bound("n", n, config.get("CLASSES_MAX_N"))
    if n == 0:
        return [canonical_form(Hieroglyph(()))]
    keys = set()
    for branch in workers.run_partitioned(
        _branch_keys, [(n, partner) for partner in range(1, 2 * n)]
    ):
        keys.update(branch)
    return sorted(keys)


def census(n: int, include_classes: bool = False) -> Census:
    """Count classes and weakly realizable classes, checking each against the oracle."""
    keys = enumerate_classes(n)
    realizable = 0
    per_class = [] if include_classes else None
    for key in keys:
        hieroglyph = key.to_hieroglyph()
        fast = is_weakly_realizable(hieroglyph)
        oracle = oracle_weak_realizability(hieroglyph)
        if fast != oracle.realizable:
            raise VerificationError(
                "Checker and oracle disagree on {}.".format(key), word=str(key)
            )
        realizable += fast
        if per_class is not None:
            per_class.append({"word": str(key), "realizable": fast})
    logger.info("n={}: {} classes, {} weakly realizable".format(n, len(keys), realizable))
    return Census(n, double_factorial(n), len(keys), realizable, per_class)
