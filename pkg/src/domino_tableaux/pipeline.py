"""Annealing a tableau down to an orbit partition, and the special-shape
projection.

The main map takes the insertion tableau of a signed permutation and moves
through admissible open cycles — either coloring, hole and corner in rows of
odd length for type C or even length for type B, shape strictly lowered in
dominance order — until the shape is an orbit partition.  The resulting
partition labels the nilpotent orbit attached to the element; the tableau
parametrizes its orbital variety.  Move order does not affect the result
(tested, not assumed); a deterministic preference keeps traces reproducible.

The special-shape projection instead walks open native-coloring cycles in
either direction from the recording tableau until the shape is special, and
checks that exactly one special tableau is reachable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cycles import Coloring, Cycle, all_cycles, move_through
from .partitions import (
    Partition,
    dominates,
    is_orbit_partition,
    is_special,
    partitions_of,
)
from .signed_perm import SignedPerm
from .tableau import DominoTableau


class PipelineStallError(RuntimeError):
    """Shape is not an orbit partition yet no admissible move exists."""


@dataclass(frozen=True)
class AnnealStep:
    cycle: Cycle
    coloring: Coloring
    shape_before: Partition
    shape_after: Partition


@dataclass(frozen=True)
class OrbitalResult:
    tableau: DominoTableau
    orbit: Partition
    trace: tuple[AnnealStep, ...]


def _row_length(shape: Partition, row: int) -> int:
    return shape[row - 1] if 1 <= row <= len(shape) else 0


def _wanted_parity(lie_type: str) -> int:
    # holes and corners must sit in odd-length rows for C, even-length for B
    return 1 if lie_type == "C" else 0


def candidate_moves(tableau: DominoTableau) -> list[tuple[Cycle, Partition]]:
    """Admissible lowering moves: open cycle, row-parity test on hole and
    corner against the pre-move shape, and strictly smaller shape."""
    shape = tableau.shape()
    parity = _wanted_parity(tableau.lie_type)
    out = []
    for coloring in (Coloring.NATIVE, Coloring.TYPE_D):
        for cy in all_cycles(tableau, coloring):
            if not cy.open or not cy.down:
                continue
            if _row_length(shape, cy.hole[0]) % 2 != parity:
                continue
            if _row_length(shape, cy.corner[0]) % 2 != parity:
                continue
            moved = move_through(tableau, cy)
            new_shape = moved.shape()
            if new_shape == shape or not dominates(shape, new_shape):
                continue  # pragma: no cover - down cycles always lower
            out.append((cy, new_shape))
    return out


def _preferred(moves: list[tuple[Cycle, Partition]]) -> tuple[Cycle, Partition]:
    """Dominance-maximal target shape (lex-greatest among incomparables);
    ties broken by smallest label, then native coloring first."""
    maximal = [
        m
        for m in moves
        if not any(o[1] != m[1] and dominates(o[1], m[1]) for o in moves)
    ]
    top = max(m[1] for m in maximal)
    tied = [m for m in maximal if m[1] == top]
    return min(
        tied,
        key=lambda m: (min(m[0].labels), m[0].coloring is Coloring.TYPE_D),
    )


def orbital_tableau(tableau: DominoTableau) -> OrbitalResult:
    """Anneal until the shape is an orbit partition; deterministic trace."""
    bound = sum(1 for _ in partitions_of(sum(tableau.shape()))) + 1
    trace: list[AnnealStep] = []
    current = tableau
    for _ in range(bound):
        shape = current.shape()
        if is_orbit_partition(shape, current.lie_type):
            return OrbitalResult(current, shape, tuple(trace))
        moves = candidate_moves(current)
        if not moves:
            raise PipelineStallError(
                f"no admissible move at shape {shape} ({current.lie_type})"
            )
        cycle, new_shape = _preferred(moves)
        current = move_through(current, cycle)
        trace.append(AnnealStep(cycle, cycle.coloring, shape, new_shape))
    raise PipelineStallError("annealing exceeded the partition-count bound")


def orbit_of(w: SignedPerm, lie_type: str) -> Partition:
    from .insertion import rs

    return orbital_tableau(rs(w, lie_type).left).orbit


@lru_cache(maxsize=65536)
def _special_reachable(tableau: DominoTableau) -> frozenset[DominoTableau]:
    """Special-shape tableaux reachable through open native cycles (both
    directions), not walking past the first special shape found."""
    if is_special(tableau.shape(), tableau.lie_type):
        return frozenset([tableau])
    out: set[DominoTableau] = set()
    for cy in all_cycles(tableau, Coloring.NATIVE):
        if cy.open:
            out |= _special_reachable(move_through(tableau, cy))
    return frozenset(out)


def special_projection(tableau: DominoTableau) -> DominoTableau:
    """The unique special-shape tableau reachable via open native cycles."""
    if is_special(tableau.shape(), tableau.lie_type):
        return tableau
    found = _special_reachable(tableau)
    if len(found) != 1:
        raise RuntimeError(
            f"special projection not unique: reached {len(found)} tableaux"
        )
    return next(iter(found))
