# -*- coding: utf-8 -*-
"""Weak realizability of hieroglyphs on the Moebius band.

A hieroglyph is weakly realizable exactly when its interlacement graph is a
clique together with isolated vertices. Equivalently no three letters induce
``abcacb`` and no four letters induce ``ababcdcd``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import FrozenSet, NamedTuple, Optional, Tuple

from .config import config
from .errors import InputError, VerificationError
from .hieroglyph import (
    Hieroglyph,
    canonical_form,
    clique_word,
    delete_letters,
    interlacement_degrees,
    keep_letters,
    parse_word,
)

logger = logging.getLogger(__name__)

TRIPLE_PATTERN = "abcacb"
QUADRUPLE_PATTERN = "ababcdcd"
PATTERN_KEYS = {
    TRIPLE_PATTERN: canonical_form(parse_word(TRIPLE_PATTERN)),
    QUADRUPLE_PATTERN: canonical_form(parse_word(QUADRUPLE_PATTERN)),
}


class Variant(Enum):
    REALIZABLE = "Realizable"
    NOT_REALIZABLE = "NotRealizable"


@dataclass(frozen=True)
class Certificate:
    variant: Variant
    red: FrozenSet[str] = frozenset()
    blue: FrozenSet[str] = frozenset()
    witness_letters: Tuple[str, ...] = ()
    pattern: Optional[str] = None

    @property
    def realizable(self) -> bool:
        return self.variant is Variant.REALIZABLE

    def as_dict(self, order=None):
        """JSON-ready form; colored letters follow ``order``, or sort by name without it."""
        if self.realizable:
            key = None
            if order is not None:
                key = {letter: i for i, letter in enumerate(order)}.__getitem__
            return {
                "variant": self.variant.value,
                "red": sorted(self.red, key=key),
                "blue": sorted(self.blue, key=key),
            }
        return {
            "variant": self.variant.value,
            "witness": {"letters": list(self.witness_letters), "pattern": self.pattern},
        }

    @classmethod
    def from_dict(cls, data) -> "Certificate":
        try:
            variant = Variant(data["variant"])
            if variant is Variant.REALIZABLE:
                return cls(variant, red=frozenset(data["red"]), blue=frozenset(data["blue"]))
            witness = data["witness"]
            return cls(
                variant,
                witness_letters=tuple(witness["letters"]),
                pattern=witness["pattern"],
            )
        except (KeyError, TypeError, ValueError) as e:
            raise InputError("Malformed certificate: {}".format(e))


class Reduction(NamedTuple):
    core: Hieroglyph
    removed: FrozenSet[str]
    is_canonical_clique: bool


def is_weakly_realizable(hieroglyph: Hieroglyph) -> bool:
    """Quadratic test: every non-isolated letter interlaces all other non-isolated ones."""
    degrees = interlacement_degrees(hieroglyph, config.get("CHUNK_ROWS"))
    active = degrees[degrees > 0]
    return bool((active == active.size - 1).all())


def validate_certificate(hieroglyph: Hieroglyph, certificate: Certificate) -> bool:
    letters = set(hieroglyph.letters)
    if certificate.realizable:
        red, blue = set(certificate.red), set(certificate.blue)
        if red | blue != letters or red & blue:
            return False
        # red letters form a clique, blue letters interlace nothing
        index = {letter: i for i, letter in enumerate(hieroglyph.letters)}
        red_mask = sum(1 << index[letter] for letter in red)
        return all(
            row == (red_mask & ~(1 << i) if (red_mask >> i) & 1 else 0)
            for i, row in enumerate(hieroglyph.interlacement_rows())
        )

    chosen = certificate.witness_letters
    if certificate.pattern not in PATTERN_KEYS or len(set(chosen)) != len(chosen):
        return False
    if not set(chosen) <= letters:
        return False
    return canonical_form(keep_letters(hieroglyph, chosen)) == PATTERN_KEYS[certificate.pattern]


def certify(hieroglyph: Hieroglyph) -> Certificate:
    """Red/blue coloring if realizable, otherwise a forbidden sub-hieroglyph."""
    letters = hieroglyph.letters
    rows = hieroglyph.interlacement_rows()
    active = 0
    for i, row in enumerate(rows):
        if row:
            active |= 1 << i

    pair = None
    for a, row in enumerate(rows):
        if row:
            missing = active & ~row & ~(1 << a)
            if missing:
                pair = a, _lowest(missing)
                break

    if pair is None:
        red = frozenset(letters[i] for i in range(hieroglyph.n) if rows[i])
        certificate = Certificate(
            Variant.REALIZABLE, red=red, blue=frozenset(letters) - red
        )
    else:
        a, c = pair
        common = rows[a] & rows[c]
        if common:
            chosen, pattern = (a, _lowest(common), c), TRIPLE_PATTERN
        else:
            b = _lowest(rows[a] & ~rows[c])
            d = _lowest(rows[c] & ~rows[a])
            if (rows[b] >> d) & 1:
                chosen, pattern = (a, b, d), TRIPLE_PATTERN
            else:
                chosen, pattern = (a, b, c, d), QUADRUPLE_PATTERN
        logger.debug(
            "Non-interlacing pair {}, {}; witness {} ({})".format(
                letters[a], letters[c], [letters[i] for i in chosen], pattern
            )
        )
        certificate = Certificate(
            Variant.NOT_REALIZABLE,
            witness_letters=tuple(letters[i] for i in sorted(chosen)),
            pattern=pattern,
        )

    if not validate_certificate(hieroglyph, certificate):
        raise VerificationError("Certificate for {} failed validation.".format(hieroglyph))
    return certificate


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def check_condition4(hieroglyph: Hieroglyph) -> bool:
    """No three letters induce abcacb and no four letters induce ababcdcd."""
    if hieroglyph.n > config.get("CONDITION4_WARN_N"):
        logger.warning(
            "check_condition4 scans all 3- and 4-subsets of {} letters; this is slow.".format(
                hieroglyph.n
            )
        )
    for size, pattern in ((3, TRIPLE_PATTERN), (4, QUADRUPLE_PATTERN)):
        key = PATTERN_KEYS[pattern]
        for chosen in combinations(hieroglyph.letters, size):
            if canonical_form(keep_letters(hieroglyph, chosen)) == key:
                logger.debug("{} induces {}".format(chosen, pattern))
                return False
    return True


def reduce_condition3(hieroglyph: Hieroglyph) -> Reduction:
    """Delete every letter interlacing nothing and test for a1...am a1...am.

    Letters that interlace nothing keep interlacing nothing after deletions,
    so one batch deletion reaches the same core as any sequential order.
    """
    rows = hieroglyph.interlacement_rows()
    removed = frozenset(hieroglyph.letters[i] for i, row in enumerate(rows) if not row)
    core = delete_letters(hieroglyph, removed)
    is_clique = canonical_form(core) == canonical_form(clique_word(core.n))
    return Reduction(core, removed, is_clique)
