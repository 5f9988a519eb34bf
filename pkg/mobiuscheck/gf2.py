# -*- coding: utf-8 -*-
"""Symmetric matrices over GF(2) with a free diagonal.

Rows are stored as Python ints used as bitsets: bit ``j`` of ``rows[i]`` is
the entry in row ``i``, column ``j``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from . import workers
from .config import config
from .errors import (
    AsymmetricMatrix,
    DimensionTooLarge,
    MalformedMatrix,
    VerificationError,
    check_bound,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SymMatrixGF2:
    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise MalformedMatrix(
                "Expected {} rows, got {}.".format(self.n, len(self.rows))
            )
        limit = 1 << self.n
        for i, row in enumerate(self.rows):
            if row < 0 or row >= limit:
                raise MalformedMatrix("Row {} has entries outside the matrix.".format(i))
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.entry(i, j) != self.entry(j, i):
                    raise AsymmetricMatrix(
                        "Matrix is not symmetric at ({}, {}).".format(i, j), row=i, column=j
                    )

    @classmethod
    def zero(cls, n: int) -> "SymMatrixGF2":
        return cls(n, (0,) * n)

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "SymMatrixGF2":
        n = len(entries)
        rows = []
        for i, line in enumerate(entries):
            if len(line) != n:
                raise MalformedMatrix("Row {} has length {}, expected {}.".format(i, len(line), n))
            rows.append(_pack_row(line, i))
        return cls(n, tuple(rows))

    @classmethod
    def from_array(cls, array: np.ndarray) -> "SymMatrixGF2":
        array = np.asarray(array)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise MalformedMatrix("Expected a square matrix, got shape {}.".format(array.shape))
        return cls.from_lists(array.astype(int).tolist())

    @classmethod
    def from_text(cls, text: str) -> "SymMatrixGF2":
        """Parse one row per line, 0/1 entries separated by single spaces."""
        entries = []
        for number, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line:
                continue
            try:
                entries.append([int(token) for token in line.split(" ")])
            except ValueError:
                raise MalformedMatrix("Line {} is not a row of 0/1 entries.".format(number))
        return cls.from_lists(entries)

    def to_text(self) -> str:
        return "".join(
            " ".join(str(bit) for bit in self.row_bits(i)) + "\n" for i in range(self.n)
        )

    def to_array(self) -> np.ndarray:
        return np.array([self.row_bits(i) for i in range(self.n)], dtype=np.uint8).reshape(
            self.n, self.n
        )

    def to_lists(self) -> List[List[int]]:
        return [list(self.row_bits(i)) for i in range(self.n)]

    def row_bits(self, i: int) -> Tuple[int, ...]:
        row = self.rows[i]
        return tuple((row >> j) & 1 for j in range(self.n))

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.entry(i, i) for i in range(self.n))

    def off_diagonal_rows(self) -> Tuple[int, ...]:
        return tuple(row & ~(1 << i) for i, row in enumerate(self.rows))

    def with_diagonal(self, diagonal: Sequence[int]) -> "SymMatrixGF2":
        if len(diagonal) != self.n:
            raise MalformedMatrix(
                "Diagonal has length {}, expected {}.".format(len(diagonal), self.n)
            )
        return SymMatrixGF2(
            self.n,
            tuple(
                (row & ~(1 << i)) | ((diagonal[i] & 1) << i)
                for i, row in enumerate(self.rows)
            ),
        )

    def permuted(self, permutation: Sequence[int]) -> "SymMatrixGF2":
        """Simultaneous row/column permutation; new index ``k`` is old ``permutation[k]``."""
        if sorted(permutation) != list(range(self.n)):
            raise MalformedMatrix("Not a permutation of range({}).".format(self.n))
        return self.submatrix(permutation)

    def submatrix(self, indices: Sequence[int]) -> "SymMatrixGF2":
        """Principal submatrix on ``indices``, in the given order."""
        rows = []
        for old_i in indices:
            row = 0
            for new_j, old_j in enumerate(indices):
                row |= self.entry(old_i, old_j) << new_j
            rows.append(row)
        return SymMatrixGF2(len(indices), tuple(rows))

    def is_zero(self) -> bool:
        return not any(self.rows)


def _pack_row(bits: Iterable[int], index: int = 0) -> int:
    row = 0
    for j, bit in enumerate(bits):
        if bit not in (0, 1):
            raise MalformedMatrix("Row {} holds {!r}, expected 0 or 1.".format(index, bit))
        row |= bit << j
    return row


def rank_of_rows(rows: Iterable[int]) -> int:
    basis = {}
    for row in rows:
        while row:
            pivot = row.bit_length() - 1
            if pivot not in basis:
                basis[pivot] = row
                break
            row ^= basis[pivot]
    return len(basis)


def rank_gf2(matrix) -> int:
    """Rank over GF(2), i.e. the dimension of the row space.

    Accepts a :class:`SymMatrixGF2`, a numpy array or any sequence of 0/1
    rows (not necessarily square or symmetric).
    """
    if isinstance(matrix, SymMatrixGF2):
        return rank_of_rows(matrix.rows)
    rows = np.asarray(matrix, dtype=np.uint8)
    if rows.size == 0:
        return 0
    if rows.ndim != 2:
        raise MalformedMatrix("Expected a two-dimensional matrix.")
    return rank_of_rows(_pack_row(line.tolist(), i) for i, line in enumerate(rows))


# ------------------------------------------------------------------ rank <= 1


@dataclass(frozen=True)
class PQWitness:
    kind: str
    indices: Tuple[int, ...]

    def matches(self, matrix: SymMatrixGF2) -> bool:
        e = matrix.entry
        if self.kind == "P" and len(self.indices) == 3:
            i, j, k = self.indices
            return e(i, j) == 1 and e(i, k) == 1 and e(j, k) == 0
        if self.kind == "Q" and len(self.indices) == 4:
            i, j, k, l = self.indices
            return (
                e(i, j) == 1
                and e(k, l) == 1
                and e(i, k) == e(i, l) == e(j, k) == e(j, l) == 0
            )
        return False

    def as_dict(self):
        return {"kind": self.kind, "indices": list(self.indices)}


@dataclass(frozen=True)
class BlockForm:
    permutation: Tuple[int, ...]
    diagonal: Tuple[int, ...]
    block_size: int

    def apply(self, matrix: SymMatrixGF2) -> SymMatrixGF2:
        return matrix.with_diagonal(self.diagonal).permuted(self.permutation)

    def matches(self, matrix: SymMatrixGF2) -> bool:
        image = self.apply(matrix)
        block = (1 << self.block_size) - 1
        return all(
            row == (block if i < self.block_size else 0) for i, row in enumerate(image.rows)
        )

    def as_dict(self):
        return {
            "permutation": list(self.permutation),
            "diagonal": list(self.diagonal),
            "block_size": self.block_size,
        }


class MinRank(NamedTuple):
    rank: int
    diagonal: Tuple[int, ...]


# off-diagonal patterns with the diagonal left at zero
P_PATTERN = SymMatrixGF2.from_lists([[0, 1, 1], [1, 0, 0], [1, 0, 0]])
Q_PATTERN = SymMatrixGF2.from_lists(
    [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
)


def _bits(mask: int, n: int) -> Tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(n))


def rank_le1_with_diagonal(matrix: SymMatrixGF2) -> Optional[Tuple[int, ...]]:
    """Return a diagonal giving rank <= 1, if there is one.

    Such a diagonal exists exactly when the off-diagonal support is a clique
    plus isolated vertices; it is 1 on the clique and 0 elsewhere.
    """
    off = matrix.off_diagonal_rows()
    clique = 0
    for i, row in enumerate(off):
        if row:
            clique |= 1 << i
    for i, row in enumerate(off):
        if row and row | (1 << i) != clique:
            return None
    diagonal = _bits(clique, matrix.n)
    if rank_gf2(matrix.with_diagonal(diagonal)) > 1:
        raise VerificationError("Clique diagonal does not reach rank <= 1.")
    return diagonal


def block_form(matrix: SymMatrixGF2) -> Optional[BlockForm]:
    diagonal = rank_le1_with_diagonal(matrix)
    if diagonal is None:
        return None
    inside = [i for i in range(matrix.n) if diagonal[i]]
    outside = [i for i in range(matrix.n) if not diagonal[i]]
    form = BlockForm(tuple(inside + outside), diagonal, len(inside))
    if not form.matches(matrix):
        raise VerificationError("Block form does not reproduce the matrix.")
    return form


def find_pq_witness(matrix: SymMatrixGF2) -> Optional[PQWitness]:
    """Search every 3-subset for P, then every 4-subset for Q; first match wins."""
    off = matrix.off_diagonal_rows()

    def adj(i, j):
        return (off[i] >> j) & 1

    witness = None
    for i, j, k in combinations(range(matrix.n), 3):
        for centre, x, y in ((i, j, k), (j, i, k), (k, i, j)):
            if adj(centre, x) and adj(centre, y) and not adj(x, y):
                witness = PQWitness("P", (centre, x, y))
                break
        if witness:
            break

    if witness is None:
        for i, j, k, l in combinations(range(matrix.n), 4):
            for a, b, c, d in ((i, j, k, l), (i, k, j, l), (i, l, j, k)):
                if (
                    adj(a, b)
                    and adj(c, d)
                    and not (adj(a, c) or adj(a, d) or adj(b, c) or adj(b, d))
                ):
                    witness = PQWitness("Q", (a, b, c, d))
                    break
            if witness:
                break

    if witness is not None and not witness.matches(matrix):
        raise VerificationError("Witness {} does not match.".format(witness))
    return witness


def extreme_rows_obstruct_rank1(matrix: SymMatrixGF2) -> bool:
    """True if, for every diagonal, the first and last rows are nonzero and distinct.

    Two nonzero distinct rows over GF(2) already span a plane, so such a
    matrix can never be brought to rank <= 1.
    """
    if matrix.n < 2:
        return False
    for mask in range(1 << matrix.n):
        rows = matrix.with_diagonal(_bits(mask, matrix.n)).rows
        first, last = rows[0], rows[-1]
        if not first or not last or first == last:
            return False
    return True


# ------------------------------------------------------------------ free diagonal


def _sweep_diagonals(rows: Tuple[int, ...], n: int, start: int, stop: int) -> Tuple[int, Tuple[int, ...]]:
    """Best (rank, diagonal) over Gray-code indices ``start..stop-1``."""
    work = list(rows)
    gray = start ^ (start >> 1)
    for i in range(n):
        work[i] = (work[i] & ~(1 << i)) | (((gray >> i) & 1) << i)

    best = None
    for g in range(start, stop):
        rank = rank_of_rows(work)
        if best is None or rank <= best[0]:
            candidate = (rank, _bits(gray, n))
            if best is None or candidate < best:
                best = candidate
        if g + 1 < stop:
            flip = ((g + 1) & -(g + 1)).bit_length() - 1
            work[flip] ^= 1 << flip
            gray ^= 1 << flip
    return best


def min_rank_over_diagonal(matrix: SymMatrixGF2) -> MinRank:
    """Exact least rank reachable by changing diagonal entries.

    The R <= 1 cases are decided structurally; everything else is a full
    sweep over all 2**n diagonals, ties broken by the lexicographically least
    diagonal.
    """
    n = matrix.n
    off = matrix.off_diagonal_rows()
    if not any(off):
        return MinRank(0, (0,) * n)

    diagonal = rank_le1_with_diagonal(matrix)
    if diagonal is not None:
        return MinRank(1, diagonal)

    check_bound("matrix dimension", n, config.get("BRUTE_FORCE_MAX_DIM"), DimensionTooLarge)

    total = 1 << n
    ranges = workers.split_range(total, config.get("WORKERS") * 4)
    logger.info("Sweeping {:,} diagonals of a {}x{} matrix...".format(total, n, n))
    results = workers.run_partitioned(
        _sweep_diagonals, [(off, n, lo, hi) for lo, hi in ranges]
    )
    rank, best_diagonal = min(results)

    if rank_gf2(matrix.with_diagonal(best_diagonal)) != rank:
        raise VerificationError("Achieving diagonal does not reproduce rank {}.".format(rank))
    return MinRank(rank, best_diagonal)
