"""Linear algebra over GF(2) with rows stored as int bitmasks.

Used to solve the region incidence system: which sign-flip patterns are
realizable as a symmetric difference of region supports.
"""

from __future__ import annotations

import dataclasses
from itertools import combinations
from typing import Iterable, Iterator, Sequence


def popcount(x: int) -> int:
    return x.bit_count()


@dataclasses.dataclass(frozen=True)
class Gf2System:
    """Row space of a set of GF(2) vectors of a fixed length.

    ``pivots[k]`` is the pivot column of ``reduced[k]``; ``combos[k]`` is the
    bitmask (over original row indices) whose XOR yields ``reduced[k]``, so
    solutions can be reported in terms of the input rows.
    """

    ncols: int
    reduced: tuple[int, ...]
    pivots: tuple[int, ...]
    combos: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.reduced)

    def solve(self, target: int) -> int | None:
        """Bitmask of input rows XORing to ``target``, or None."""
        residue = target
        combo = 0
        for row, piv, cmb in zip(self.reduced, self.pivots, self.combos):
            if (residue >> piv) & 1:
                residue ^= row
                combo ^= cmb
        return combo if residue == 0 else None

    def contains(self, target: int) -> bool:
        return self.solve(target) is not None


def row_reduce(rows: Sequence[int], ncols: int) -> Gf2System:
    reduced: list[int] = []
    pivots: list[int] = []
    combos: list[int] = []
    for idx, row in enumerate(rows):
        combo = 1 << idx
        for r, piv, cmb in zip(reduced, pivots, combos):
            if (row >> piv) & 1:
                row ^= r
                combo ^= cmb
        if row:
            reduced.append(row)
            pivots.append(row.bit_length() - 1)
            combos.append(combo)
    return Gf2System(ncols, tuple(reduced), tuple(pivots), tuple(combos))


def nullspace_basis(rows: Sequence[int], count: int) -> list[int]:
    """Basis of {combinations of the given rows that XOR to zero}, as
    bitmasks over row indices."""
    # Reduce the transposed relation: track combos, keep those whose row
    # image vanishes.  Equivalent to kernel of the row-selection map.
    reduced: list[int] = []
    pivots: list[int] = []
    combos: list[int] = []
    basis: list[int] = []
    for idx in range(count):
        row = rows[idx]
        combo = 1 << idx
        for r, piv, cmb in zip(reduced, pivots, combos):
            if row and (row >> piv) & 1:
                row ^= r
                combo ^= cmb
        if row:
            reduced.append(row)
            pivots.append(row.bit_length() - 1)
            combos.append(combo)
        else:
            basis.append(combo)
    return basis


def solution_coset(
    rows: Sequence[int], count: int, target: int
) -> Iterator[int]:
    """All row-selection bitmasks XORing to ``target`` (empty if none)."""
    system = row_reduce(rows, max(r.bit_length() for r in rows) if rows else 0)
    particular = system.solve(target)
    if particular is None:
        return
    basis = nullspace_basis(rows, count)
    for k in range(len(basis) + 1):
        for combo in combinations(basis, k):
            out = particular
            for b in combo:
                out ^= b
            yield out


def min_weight_solution(
    rows: Sequence[int], count: int, target: int
) -> int | None:
    best: int | None = None
    for sol in solution_coset(rows, count, target):
        if best is None or popcount(sol) < popcount(best):
            best = sol
    return best


def solution_of_weight(
    rows: Sequence[int], count: int, target: int, weight: int
) -> int | None:
    for sol in solution_coset(rows, count, target):
        if popcount(sol) == weight:
            return sol
    return None


def select_bits(mask: int) -> list[int]:
    return [k for k in range(mask.bit_length()) if (mask >> k) & 1]


def span_size(rows: Iterable[int]) -> int:
    rows = list(rows)
    return 1 << row_reduce(rows, max((r.bit_length() for r in rows), default=0)).rank
