"""Cycle moves on domino tableaux.

A coloring declares every other diagonal of cells "fixed"; each domino covers
exactly one fixed cell.  A cycle is an inclusion-minimal nonempty set of
dominoes that can be simultaneously re-tiled — every domino keeping its own
fixed cell — so that the whole tableau stays standard.  Moving through an
open cycle trades one boundary cell of the shape (the hole) for another (the
corner); moving through a closed cycle permutes dominoes inside the same
shape.  Labels that admit no such re-tiling at all count as closed
single-label cycles whose move is the identity.

The reference engine enumerates every legal re-tiling of the full tableau
and extracts minimal changed sets; a second, independently structured
wavefront engine is provided for cross-checking.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .insertion import TableauPair, make_pair
from .tableau import (
    Cell,
    DominoTableau,
    TableauError,
    core_cells,
    is_young,
    make_tableau,
)


class Coloring(enum.Enum):
    """NATIVE fixes cells with odd row+column sum; TYPE_D fixes the others."""

    NATIVE = "native"
    TYPE_D = "typeD"

    @property
    def fixed_parity(self) -> int:
        return 1 if self is Coloring.NATIVE else 0


def coloring_from_name(name: str) -> Coloring:
    for c in Coloring:
        if c.value == name:
            return c
    raise ValueError(f"unknown coloring {name!r}; expected 'native' or 'typeD'")


def is_fixed(cell: Cell, coloring: Coloring) -> bool:
    return (cell[0] + cell[1]) % 2 == coloring.fixed_parity


def fixed_cell(cells: Sequence[Cell], coloring: Coloring) -> Cell:
    a, b = cells
    return a if is_fixed(a, coloring) else b


def _block_id(cell: Cell, coloring: Coloring) -> tuple[int, int]:
    # 2x2 blocks pairing rows {1,2}, {3,4}, ...; the column pairing is
    # phased so every block's top-left corner is a variable square of the
    # coloring, which makes boxedness constant along each cycle.
    r, c = cell
    if coloring is Coloring.NATIVE:
        return ((r + 1) // 2, (c + 1) // 2)
    return ((r + 1) // 2, c // 2)


def is_boxed(cells: Sequence[Cell], coloring: Coloring) -> bool:
    a, b = cells
    return _block_id(a, coloring) == _block_id(b, coloring)


@dataclass(frozen=True)
class Cycle:
    labels: tuple[int, ...]
    coloring: Coloring
    open: bool
    hole: Cell | None
    corner: Cell | None
    down: bool | None
    boxed: bool


def _candidate_positions(
    tableau: DominoTableau, coloring: Coloring
) -> list[list[tuple[Cell, Cell]]]:
    core = set(core_cells(tableau.lie_type))
    options = []
    for d in tableau.dominoes:
        f = fixed_cell(d.cells, coloring)
        cand = []
        for nb in ((f[0] - 1, f[1]), (f[0] + 1, f[1]), (f[0], f[1] - 1), (f[0], f[1] + 1)):
            if nb[0] < 1 or nb[1] < 1 or nb in core:
                continue
            cand.append(tuple(sorted((f, nb))))
        options.append(cand)
    return options


@lru_cache(maxsize=65536)
def _retilings(
    tableau: DominoTableau, coloring: Coloring
) -> tuple[tuple[tuple[int, tuple[Cell, Cell]], ...], ...]:
    """Every standard re-tiling keeping each domino on its fixed cell."""
    options = _candidate_positions(tableau, coloring)
    labels = [d.label for d in tableau.dominoes]
    core = frozenset(core_cells(tableau.lie_type))
    results: list[tuple[tuple[int, tuple[Cell, Cell]], ...]] = []
    chosen: list[tuple[int, tuple[Cell, Cell]]] = []

    def walk(idx: int, used: frozenset[Cell]) -> None:
        if idx == len(labels):
            results.append(tuple(chosen))
            return
        for cells in options[idx]:
            if cells[0] in used or cells[1] in used:
                continue
            grown = used | {cells[0], cells[1]}
            if not is_young(grown):
                continue
            chosen.append((labels[idx], cells))
            walk(idx + 1, grown)
            chosen.pop()

    walk(0, core)
    return tuple(results)


def _changed_labels(
    tableau: DominoTableau, assignment: Iterable[tuple[int, tuple[Cell, Cell]]]
) -> frozenset[int]:
    original = {d.label: d.cells for d in tableau.dominoes}
    return frozenset(lbl for lbl, cells in assignment if cells != original[lbl])


@lru_cache(maxsize=65536)
def _atoms(tableau: DominoTableau, coloring: Coloring) -> tuple[frozenset[int], ...]:
    changed = [_changed_labels(tableau, a) for a in _retilings(tableau, coloring)]
    if frozenset() not in changed:
        raise RuntimeError("search lost the identity re-tiling")  # pragma: no cover
    nonempty = {ch for ch in changed if ch}
    atoms = [ch for ch in nonempty if not any(other < ch for other in nonempty)]
    for i, a in enumerate(atoms):
        for b in atoms[i + 1 :]:
            if a & b:
                raise RuntimeError(f"overlapping minimal move sets {set(a)} and {set(b)}")
    return tuple(sorted(atoms, key=min))


def _move_assignment(
    tableau: DominoTableau, coloring: Coloring, labels: frozenset[int]
) -> dict[int, tuple[Cell, Cell]]:
    matches = [
        a for a in _retilings(tableau, coloring) if _changed_labels(tableau, a) == labels
    ]
    if len(matches) != 1:
        raise RuntimeError(
            f"expected exactly one re-tiling moving {sorted(labels)}, found {len(matches)}"
        )
    return dict(matches[0])


def _classify(tableau: DominoTableau, coloring: Coloring, labels: frozenset[int]) -> Cycle:
    boxed = is_boxed(tableau.domino(min(labels)).cells, coloring)
    atoms = _atoms(tableau, coloring)
    if labels not in atoms:
        # a label no re-tiling can move: closed, move is the identity
        return Cycle(tuple(sorted(labels)), coloring, False, None, None, None, boxed)
    assignment = _move_assignment(tableau, coloring, labels)
    old_cells = tableau.cells()
    new_cells = set(core_cells(tableau.lie_type))
    for d in tableau.dominoes:
        new_cells.update(assignment.get(d.label, d.cells))
    if new_cells == set(old_cells):
        return Cycle(tuple(sorted(labels)), coloring, False, None, None, None, boxed)
    holes = set(old_cells) - new_cells
    corners = new_cells - set(old_cells)
    if len(holes) != 1 or len(corners) != 1:
        raise RuntimeError(f"open move must trade single cells, got {holes} / {corners}")
    hole, corner = holes.pop(), corners.pop()
    return Cycle(
        tuple(sorted(labels)), coloring, True, hole, corner, corner[0] > hole[0], boxed
    )


def cycle_of(tableau: DominoTableau, label: int, coloring: Coloring) -> Cycle:
    if not tableau.has_label(label):
        raise KeyError(f"no domino labeled {label}")
    for atom in _atoms(tableau, coloring):
        if label in atom:
            return _classify(tableau, coloring, atom)
    return _classify(tableau, coloring, frozenset([label]))


def all_cycles(tableau: DominoTableau, coloring: Coloring) -> tuple[Cycle, ...]:
    """Each cycle once; they partition the labels."""
    atoms = _atoms(tableau, coloring)
    out = [_classify(tableau, coloring, atom) for atom in atoms]
    in_atoms = set().union(*atoms) if atoms else set()
    for d in tableau.dominoes:
        if d.label not in in_atoms:
            out.append(_classify(tableau, coloring, frozenset([d.label])))
    return tuple(sorted(out, key=lambda cy: cy.labels))


def move_through(tableau: DominoTableau, cycle: Cycle) -> DominoTableau:
    return move_through_set(tableau, [cycle])


def move_through_set(tableau: DominoTableau, cycles: Iterable[Cycle]) -> DominoTableau:
    """Apply label-disjoint cycles simultaneously (order cannot matter)."""
    cycles = list(cycles)
    taken: set[int] = set()
    for cy in cycles:
        if taken & set(cy.labels):
            raise TableauError("cycles overlap")
        taken.update(cy.labels)
    if not taken:
        return tableau
    colorings = {cy.coloring for cy in cycles}
    if len(colorings) != 1:
        raise TableauError("cannot mix colorings in one simultaneous move")
    coloring = colorings.pop()
    atoms = set(_atoms(tableau, coloring))
    moving: set[int] = set()
    for cy in cycles:
        labels = frozenset(cy.labels)
        if labels in atoms:
            moving.update(labels)
        elif len(labels) == 1 and not any(labels & a for a in atoms):
            continue  # frozen label, identity move
        else:
            raise TableauError(f"{sorted(labels)} is not a cycle of this tableau")
    if not moving:
        return tableau
    assignment = _move_assignment(tableau, coloring, frozenset(moving))
    dominoes = [(d.label, assignment.get(d.label, d.cells)) for d in tableau.dominoes]
    return make_tableau(tableau.lie_type, dominoes, require_contiguous=False)


def _boundary(cycles: Iterable[Cycle]) -> tuple[set[Cell], set[Cell]]:
    holes = {cy.hole for cy in cycles if cy.open}
    corners = {cy.corner for cy in cycles if cy.open}
    return holes, corners  # type: ignore[return-value]


def _cycle_at_square(
    tableau: DominoTableau, coloring: Coloring, square: Cell, taken: list[Cycle]
) -> Cycle | None:
    got = [
        cy
        for cy in all_cycles(tableau, coloring)
        if cy.open and square in (cy.hole, cy.corner) and cy not in taken
    ]
    if len(got) > 1:
        raise TableauError(
            f"extended cycle closure ambiguous at square {square}: {len(got)} matches"
        )
    return got[0] if got else None


def extended_cycle(
    pair: TableauPair, label: int, coloring: Coloring
) -> tuple[tuple[Cycle, ...], tuple[Cycle, ...]]:
    """Smallest shape-balanced closure of the right tableau's cycle of label.

    Returns (cycles of the right tableau, cycles of the left tableau); each
    side's simultaneous move produces the same shape on both sides.  When no
    balanced closure exists -- some hole or corner square of one side cannot
    be matched by any open cycle of the other -- both sides come back empty
    and the induced move is the identity: on such a pair every choice other
    than moving nothing would leave the two shapes unequal.
    """
    seed = cycle_of(pair.right, label, coloring)
    right_cycles = [seed]
    left_cycles: list[Cycle] = []
    if not seed.open:
        return tuple(right_cycles), ()
    for _ in range(2 * len(pair.right.dominoes) + 2):
        rholes, rcorners = _boundary(right_cycles)
        lholes, lcorners = _boundary(left_cycles)
        missing_left = (rholes - lholes) | (rcorners - lcorners)
        missing_right = (lholes - rholes) | (lcorners - rcorners)
        if not missing_left and not missing_right:
            return tuple(right_cycles), tuple(left_cycles)
        if missing_left:
            square = min(missing_left)
            found = _cycle_at_square(pair.left, coloring, square, left_cycles)
            if found is None:
                return (), ()
            left_cycles.append(found)
        else:
            square = min(missing_right)
            found = _cycle_at_square(pair.right, coloring, square, right_cycles)
            if found is None:
                return (), ()
            right_cycles.append(found)
    raise TableauError("extended cycle closure did not stabilize")  # pragma: no cover


def move_through_extended(pair: TableauPair, label: int, coloring: Coloring) -> TableauPair:
    right_cycles, left_cycles = extended_cycle(pair, label, coloring)
    right = move_through_set(pair.right, right_cycles)
    left = move_through_set(pair.left, left_cycles)
    if left.shape() != right.shape():
        raise RuntimeError(
            f"extended move left shapes unequal: {left.shape()} vs {right.shape()}"
        )
    return make_pair(left, right)


# --- independent wavefront engine, used as a cross-check in the test suite ---


def _wave_solutions(
    tableau: DominoTableau, coloring: Coloring, wave: frozenset[int], target: int
) -> list[tuple[frozenset[int], dict[int, tuple[Cell, Cell]]]]:
    """Re-tilings that move the target and touch only wave labels.

    Labels outside the wave are pinned at their original cells; each result
    is (changed labels, full assignment) and is globally standard.
    """
    options = _candidate_positions(tableau, coloring)
    order = [d.label for d in tableau.dominoes]
    original = {d.label: d.cells for d in tableau.dominoes}
    todo = [lbl for lbl in order if lbl in wave]
    pinned: set[Cell] = set()
    for d in tableau.dominoes:
        if d.label not in wave:
            pinned.update(d.cells)
    found: list[tuple[frozenset[int], dict[int, tuple[Cell, Cell]]]] = []
    picks: dict[int, tuple[Cell, Cell]] = {}

    def standard_with_picks() -> bool:
        grown = set(core_cells(tableau.lie_type))
        for lbl in order:
            grown.update(picks.get(lbl, original[lbl]))
            if not is_young(grown):
                return False
        return True

    def walk(idx: int, used: set[Cell]) -> None:
        if idx == len(todo):
            if picks[target] != original[target] and standard_with_picks():
                assignment = {lbl: picks.get(lbl, original[lbl]) for lbl in order}
                changed = frozenset(l for l in wave if picks[l] != original[l])
                found.append((changed, assignment))
            return
        lbl = todo[idx]
        for cells in options[order.index(lbl)]:
            if any(c in used or c in pinned for c in cells):
                continue
            picks[lbl] = cells
            walk(idx + 1, used | set(cells))
            del picks[lbl]

    walk(0, set())
    return found


def local_move_through(
    tableau: DominoTableau, label: int, coloring: Coloring
) -> DominoTableau:
    """Wavefront re-implementation of the cycle move for one label.

    Starts from the label alone and widens the set of dominoes allowed to
    move until a standard re-tiling moving the label exists; the smallest
    changed set is applied.  Returns the tableau unchanged when the label
    turns out to be frozen.
    """
    all_labels = frozenset(tableau.labels())
    options = _candidate_positions(tableau, coloring)
    order = [d.label for d in tableau.dominoes]
    wave = frozenset([label])
    while True:
        sols = _wave_solutions(tableau, coloring, wave, label)
        minimal = [
            (ch, asg) for ch, asg in sols if not any(other < ch for other, _ in sols)
        ]
        if minimal:
            if len(minimal) != 1:
                raise RuntimeError("wavefront found competing minimal moves")
            _, assignment = minimal[0]
            dominoes = [(lbl, assignment[lbl]) for lbl in order]
            return make_tableau(tableau.lie_type, dominoes, require_contiguous=False)
        if wave == all_labels:
            return tableau  # frozen
        territory: set[Cell] = set()
        for d in tableau.dominoes:
            if d.label in wave:
                territory.update(d.cells)
                for cells in options[order.index(d.label)]:
                    territory.update(cells)
        near = {
            d.label
            for d in tableau.dominoes
            if any(
                abs(cr - tr) <= 1 and abs(cc - tc) <= 1
                for cr, cc in d.cells
                for tr, tc in territory
            )
        }
        grown = wave | near
        wave = all_labels if grown == wave else frozenset(grown)
