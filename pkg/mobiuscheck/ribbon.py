# -*- coding: utf-8 -*-
"""Ribbon disks: a hieroglyph with a twist bit per letter.

The crossing matrix of a ribbon disk has the interlacement matrix off the
diagonal and the twist bits on it. A ribbon disk cuts out of a disk with m
Moebius bands iff that matrix has GF(2) rank at most m.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Tuple

from . import workers
from .config import config
from .errors import DimensionTooLarge, InputError, MalformedTwists, check_bound
from .gf2 import SymMatrixGF2, min_rank_over_diagonal, rank_gf2, rank_of_rows
from .hieroglyph import Hieroglyph, interlacement_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RibbonDisk:
    base: Hieroglyph
    twists: Tuple[int, ...]

    def __post_init__(self):
        twists = tuple(self.twists)
        if len(twists) != self.base.n:
            raise MalformedTwists(
                "Expected {} twist bits, got {}.".format(self.base.n, len(twists))
            )
        if any(bit not in (0, 1) for bit in twists):
            raise MalformedTwists("Twist bits must be 0 or 1.")
        object.__setattr__(self, "twists", twists)

    @classmethod
    def untwisted(cls, base: Hieroglyph) -> "RibbonDisk":
        return cls(base, (0,) * base.n)


@dataclass(frozen=True)
class SurfaceSummary:
    euler_characteristic: int
    boundary_components: int
    orientable: bool

    @property
    def genus(self) -> int:
        """Orientable genus, or the number of cross-caps if non-orientable."""
        deficit = 2 - self.euler_characteristic - self.boundary_components
        return deficit // 2 if self.orientable else deficit

    def as_dict(self):
        return {
            "euler_characteristic": self.euler_characteristic,
            "boundary_components": self.boundary_components,
            "orientable": self.orientable,
            "genus": self.genus,
        }


class OracleResult(NamedTuple):
    realizable: bool
    twists: Optional[Tuple[int, ...]]


def parse_twists(text: str, n: int) -> Tuple[int, ...]:
    """Parse a 0/1 string of length ``n``, indexed by first occurrence."""
    text = text.strip()
    if len(text) != n or any(char not in "01" for char in text):
        raise MalformedTwists(
            "Twists must be a string of {} characters 0/1, got {!r}.".format(n, text)
        )
    return tuple(int(char) for char in text)


def format_twists(twists: Sequence[int]) -> str:
    return "".join(str(bit) for bit in twists)


def crossing_matrix(disk: RibbonDisk) -> SymMatrixGF2:
    return interlacement_matrix(disk.base).with_diagonal(disk.twists)


def min_mobius_bands(disk: RibbonDisk) -> int:
    return rank_gf2(crossing_matrix(disk))


def _twist_bits(index: int, n: int) -> Tuple[int, ...]:
    # lexicographic order on (t0, t1, ..., tn-1)
    return tuple((index >> (n - 1 - i)) & 1 for i in range(n))


def _sweep_twists(rows: Tuple[int, ...], n: int, start: int, stop: int) -> Optional[Tuple[int, ...]]:
    for index in range(start, stop):
        twists = _twist_bits(index, n)
        if rank_of_rows(row | (bit << i) for i, (row, bit) in enumerate(zip(rows, twists))) <= 1:
            return twists
    return None


def oracle_weak_realizability(hieroglyph: Hieroglyph) -> OracleResult:
    """Try all 2**n twistings; realizable iff some crossing matrix has rank <= 1.

    Returns the lexicographically least achieving twist vector.
    """
    n = hieroglyph.n
    check_bound("letters", n, config.get("ORACLE_MAX_N"), DimensionTooLarge)
    rows = hieroglyph.interlacement_rows()
    ranges = workers.split_range(1 << n, config.get("WORKERS") * 4)
    logger.info("Checking {:,} twistings of {}...".format(1 << n, hieroglyph))
    for twists in workers.run_partitioned(
        _sweep_twists, [(rows, n, lo, hi) for lo, hi in ranges]
    ):
        if twists is not None:
            return OracleResult(True, twists)
    return OracleResult(False, None)


def realizable_on_m_bands(hieroglyph: Hieroglyph, m: int) -> bool:
    """Some ribbon disk of the hieroglyph cuts out of a disk with m Moebius bands."""
    if m < 0:
        raise InputError("Number of Moebius bands must be non-negative, got {}.".format(m))
    return min_rank_over_diagonal(interlacement_matrix(hieroglyph)).rank <= m


def surface_summary(disk: RibbonDisk) -> SurfaceSummary:
    """Count boundary components by tracing the boundary of the ribbon surface.

    Attachment arc ``p`` has endpoints ``2p`` (left) and ``2p + 1`` (right) in
    circle order. Gaps of the disk join ``2p + 1`` to ``2(p + 1)``. An
    untwisted ribbon on arcs p < q joins left of p to right of q and right of
    p to left of q; a twisted one joins left to left and right to right.
    """
    word = disk.base.word
    size = 2 * len(word)
    gap = [0] * size
    side = [0] * size
    for p in range(len(word)):
        right, next_left = 2 * p + 1, (2 * p + 2) % size
        gap[right], gap[next_left] = next_left, right
    for letter, twist in zip(disk.base.letters, disk.twists):
        p, q = disk.base.positions[letter]
        if twist:
            pairs = ((2 * p, 2 * q), (2 * p + 1, 2 * q + 1))
        else:
            pairs = ((2 * p, 2 * q + 1), (2 * p + 1, 2 * q))
        for x, y in pairs:
            side[x], side[y] = y, x

    if not word:
        boundary = 1
    else:
        boundary = 0
        seen = [False] * size
        for start in range(size):
            if seen[start]:
                continue
            boundary += 1
            point = start
            while not seen[point]:
                seen[point] = True
                point = gap[point]
                seen[point] = True
                point = side[point]

    return SurfaceSummary(
        euler_characteristic=1 - disk.base.n,
        boundary_components=boundary,
        orientable=not any(disk.twists),
    )
