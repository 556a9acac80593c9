"""Standard domino tableaux of types B and C.

Cells are (row, column) pairs, 1-based, row 1 at the top.  A type-B tableau
owns an extra unlabeled core cell at (1,1) that takes part in every shape
computation; type C has no core.  Standardness means: for every label k, the
core together with all dominoes labeled <= k fills a Young diagram.

Tableaux are immutable values; "mutating" helpers return new objects.
Labels are normally 1..m, but helpers that rebuild tableaux mid-algorithm
may carry a tableau whose label set has gaps (still standard in the prefix
sense); construction makes that explicit via require_contiguous.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .partitions import Partition, check_group_type

Cell = tuple[int, int]


class TableauError(ValueError):
    pass


def core_cells(lie_type: str) -> tuple[Cell, ...]:
    check_group_type(lie_type)
    return ((1, 1),) if lie_type == "B" else ()


def _adjacent(a: Cell, b: Cell) -> bool:
    return abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1


@dataclass(frozen=True)
class Domino:
    label: int
    cells: tuple[Cell, Cell]  # sorted row-major

    @property
    def horizontal(self) -> bool:
        return self.cells[0][0] == self.cells[1][0]


def make_domino(label: int, cells: Iterable[Cell]) -> Domino:
    cs = tuple(sorted((int(r), int(c)) for r, c in cells))
    if label < 1:
        raise TableauError(f"domino label must be positive, got {label}")
    if len(cs) != 2:
        raise TableauError(f"domino {label} needs exactly two cells, got {cs}")
    if any(r < 1 or c < 1 for r, c in cs):
        raise TableauError(f"domino {label} has out-of-quadrant cells {cs}")
    if not _adjacent(*cs):
        raise TableauError(f"domino {label} cells {cs} do not share an edge")
    return Domino(label, cs)  # type: ignore[arg-type]


def is_young(cells: frozenset[Cell] | set[Cell]) -> bool:
    """Is the cell set the diagram of a partition?"""
    for r, c in cells:
        if r > 1 and (r - 1, c) not in cells:
            return False
        if c > 1 and (r, c - 1) not in cells:
            return False
    return True


def shape_of_cells(cells: Iterable[Cell]) -> Partition:
    rows: dict[int, int] = {}
    for r, _ in cells:
        rows[r] = rows.get(r, 0) + 1
    return tuple(rows[r] for r in sorted(rows))


@dataclass(frozen=True)
class DominoTableau:
    lie_type: str
    dominoes: tuple[Domino, ...]  # ascending labels

    def labels(self) -> tuple[int, ...]:
        return tuple(d.label for d in self.dominoes)

    def domino(self, label: int) -> Domino:
        for d in self.dominoes:
            if d.label == label:
                return d
        raise KeyError(f"no domino labeled {label}")

    def has_label(self, label: int) -> bool:
        return any(d.label == label for d in self.dominoes)

    def cells(self) -> frozenset[Cell]:
        out = set(core_cells(self.lie_type))
        for d in self.dominoes:
            out.update(d.cells)
        return frozenset(out)

    def cell_owner(self) -> dict[Cell, int]:
        """Map of cell -> label, with 0 for the type-B core."""
        out: dict[Cell, int] = {c: 0 for c in core_cells(self.lie_type)}
        for d in self.dominoes:
            for c in d.cells:
                out[c] = d.label
        return out

    def prefix_cells(self, label_bound: int) -> set[Cell]:
        """Core plus all cells of dominoes labeled <= label_bound."""
        out = set(core_cells(self.lie_type))
        for d in self.dominoes:
            if d.label <= label_bound:
                out.update(d.cells)
        return out

    def shape(self) -> Partition:
        return shape_of_cells(self.cells())

    def sub_shape(self, label_bound: int) -> Partition:
        return shape_of_cells(self.prefix_cells(label_bound))


def validate(tableau: DominoTableau, require_contiguous: bool = True) -> tuple[bool, str]:
    """Check all invariants; returns (ok, diagnostic)."""
    try:
        check_group_type(tableau.lie_type)
    except ValueError as exc:
        return False, str(exc)
    seen: dict[Cell, int] = {c: 0 for c in core_cells(tableau.lie_type)}
    labels = []
    for d in tableau.dominoes:
        try:
            make_domino(d.label, d.cells)
        except TableauError as exc:
            return False, str(exc)
        labels.append(d.label)
        for c in d.cells:
            if c in seen:
                who = "the core" if seen[c] == 0 else f"domino {seen[c]}"
                return False, f"cell {c} of domino {d.label} overlaps {who}"
            seen[c] = d.label
    if labels != sorted(labels) or len(set(labels)) != len(labels):
        return False, f"labels not strictly increasing: {labels}"
    if require_contiguous and labels != list(range(1, len(labels) + 1)):
        return False, f"labels must be 1..{len(labels)}, got {labels}"
    grown = set(core_cells(tableau.lie_type))
    if not is_young(grown) and grown:
        return False, "core is misplaced"  # pragma: no cover
    for d in tableau.dominoes:
        grown.update(d.cells)
        if not is_young(grown):
            return False, f"cells up to label {d.label} do not form a Young diagram"
    return True, "ok"


def make_tableau(
    lie_type: str,
    dominoes: Iterable[Domino | tuple],
    require_contiguous: bool = True,
) -> DominoTableau:
    ds = []
    for d in dominoes:
        if isinstance(d, Domino):
            ds.append(make_domino(d.label, d.cells))
        else:
            label, cells = d
            ds.append(make_domino(label, cells))
    ds.sort(key=lambda d: d.label)
    t = DominoTableau(lie_type, tuple(ds))
    ok, why = validate(t, require_contiguous=require_contiguous)
    if not ok:
        raise TableauError(why)
    return t


def replace_cells(
    tableau: DominoTableau,
    moves: Mapping[int, Iterable[Cell]],
    require_contiguous: bool = True,
) -> DominoTableau:
    """New tableau with the given labels relocated."""
    ds = []
    for d in tableau.dominoes:
        if d.label in moves:
            ds.append(make_domino(d.label, moves[d.label]))
        else:
            ds.append(d)
    return make_tableau(tableau.lie_type, ds, require_contiguous=require_contiguous)


def render(tableau: DominoTableau) -> str:
    """ASCII grid; every cell prints its domino's label, the core prints 0."""
    owner = tableau.cell_owner()
    if not owner:
        return "(empty)"
    nrows = max(r for r, _ in owner)
    ncols = max(c for _, c in owner)
    width = max(len(str(v)) for v in owner.values())
    lines = []
    for r in range(1, nrows + 1):
        row = []
        for c in range(1, ncols + 1):
            row.append(str(owner[(r, c)]).rjust(width) if (r, c) in owner else " " * width)
        lines.append(" ".join(row).rstrip())
    return "\n".join(lines)


def to_json_dict(tableau: DominoTableau) -> dict:
    return {
        "type": tableau.lie_type,
        "dominoes": [
            {"label": d.label, "cells": [list(c) for c in d.cells]} for d in tableau.dominoes
        ],
    }


def from_json_dict(doc: dict, require_contiguous: bool = True) -> DominoTableau:
    if not isinstance(doc, dict) or "type" not in doc or "dominoes" not in doc:
        raise TableauError(f"malformed tableau document: {doc!r}")
    ds = []
    for entry in doc["dominoes"]:
        try:
            cells = [(int(r), int(c)) for r, c in entry["cells"]]
            ds.append((int(entry["label"]), cells))
        except (KeyError, TypeError, ValueError) as exc:
            raise TableauError(f"malformed domino entry {entry!r}") from exc
    return make_tableau(doc["type"], ds, require_contiguous=require_contiguous)


def serialize(tableau: DominoTableau) -> str:
    return json.dumps(to_json_dict(tableau), sort_keys=True)


def deserialize(text: str) -> DominoTableau:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableauError(f"not valid JSON: {exc}") from exc
    return from_json_dict(doc)
