"""Domino insertion and the Robinson-Schensted map for signed permutations.

Inserting a signed value v into a tableau places a domino labeled |v|
(horizontal entering row 1 for v > 0, vertical entering column 1 for v < 0)
after removing every domino with a larger label, then re-inserts those
larger labels in increasing order: a domino whose old cells are untouched
stays; one whose cells are fully covered slides to the end of the next row
(next column when vertical); one covered on a single cell twists around its
surviving cell.  The map w -> (insertion tableau, recording tableau) is a
bijection onto same-shape standard pairs, and the inverse is recovered by
running the bumping backwards while tracking the two-cell region by which
the growing prefix differs from the shrinking one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .signed_perm import SignedPerm, as_signed_perm
from .tableau import (
    Cell,
    Domino,
    DominoTableau,
    TableauError,
    core_cells,
    from_json_dict,
    make_domino,
    make_tableau,
    to_json_dict,
)


@dataclass(frozen=True)
class TableauPair:
    left: DominoTableau
    right: DominoTableau


def make_pair(left: DominoTableau, right: DominoTableau) -> TableauPair:
    if left.lie_type != right.lie_type:
        raise TableauError("pair mixes tableau types")
    if left.shape() != right.shape():
        raise TableauError(f"pair shapes differ: {left.shape()} vs {right.shape()}")
    if left.labels() != right.labels():
        raise TableauError("pair label sets differ")
    return TableauPair(left, right)


def _row_len(cells: set[Cell], row: int) -> int:
    return sum(1 for r, _ in cells if r == row)


def _col_len(cells: set[Cell], col: int) -> int:
    return sum(1 for _, c in cells if c == col)


def _initial_cells(current: set[Cell], value: int) -> tuple[Cell, Cell]:
    if value > 0:
        length = _row_len(current, 1)
        return ((1, length + 1), (1, length + 2))
    length = _col_len(current, 1)
    return ((length + 1, 1), (length + 2, 1))


def _reinsert(current: set[Cell], d: Domino) -> tuple[Cell, Cell]:
    c1, c2 = d.cells
    covered1, covered2 = c1 in current, c2 in current
    if not covered1 and not covered2:
        return d.cells
    if d.horizontal:
        row, col = c1
        if covered1 and covered2:
            length = _row_len(current, row + 1)
            return ((row + 1, length + 1), (row + 1, length + 2))
        if covered1:
            return ((row, col + 1), (row + 1, col + 1))
        raise TableauError(f"domino {d.label}: right cell covered but left free")
    row, col = c1
    if covered1 and covered2:
        length = _col_len(current, col + 1)
        return ((length + 1, col + 1), (length + 2, col + 1))
    if covered1:
        return ((row + 1, col), (row + 1, col + 1))
    raise TableauError(f"domino {d.label}: bottom cell covered but top free")


def insert_letter(tableau: DominoTableau, value: int) -> DominoTableau:
    """Insert one signed value; dominoes with smaller labels never move."""
    label = abs(value)
    if label == 0:
        raise TableauError("cannot insert 0")
    if tableau.has_label(label):
        raise TableauError(f"label {label} already present")
    smaller = [d for d in tableau.dominoes if d.label < label]
    larger = [d for d in tableau.dominoes if d.label > label]
    current: set[Cell] = set(core_cells(tableau.lie_type))
    for d in smaller:
        current.update(d.cells)
    placed = {label: _initial_cells(current, value)}
    current.update(placed[label])
    for d in larger:
        cells = _reinsert(current, d)
        placed[d.label] = cells
        current.update(cells)
    dominoes = smaller + [make_domino(lbl, placed[lbl]) for lbl in placed]
    return make_tableau(tableau.lie_type, dominoes, require_contiguous=False)


def rs(w: SignedPerm, lie_type: str) -> TableauPair:
    """The full correspondence: insertion tableau and recording tableau."""
    w = as_signed_perm(w)
    left = make_tableau(lie_type, [])
    recording = []
    for step, value in enumerate(w, start=1):
        grown = insert_letter(left, value)
        diff = grown.cells() - left.cells()
        recording.append(make_domino(step, diff))
        left = grown
    right = make_tableau(lie_type, recording)
    return make_pair(left, right)


def _reverse_step(
    lie_type: str, work: dict[int, tuple[Cell, Cell]], delta: set[Cell]
) -> tuple[int, dict[int, tuple[Cell, Cell]]]:
    """Undo one insertion given the recording domino's cells; returns the
    extracted signed value and the positions before that insertion."""
    region = set(delta)
    out = dict(work)
    for k in sorted(work, reverse=True):
        new = work[k]
        meet = region & set(new)
        if not meet:
            continue
        horizontal = new[0][0] == new[1][0]
        if len(meet) == 2:
            if horizontal and new[0][0] == 1:
                del out[k]
                return k, out
            if not horizontal and new[0][1] == 1:
                del out[k]
                return -k, out
            prefix = set(core_cells(lie_type))
            for lbl, cells in work.items():
                if lbl < k:
                    prefix.update(cells)
            if horizontal:
                row = new[0][0]
                length = _row_len(prefix, row - 1)
                if length < 2:
                    raise TableauError(f"no room to unslide domino {k}")
                old = ((row - 1, length - 1), (row - 1, length))
            else:
                col = new[0][1]
                length = _col_len(prefix, col - 1)
                if length < 2:
                    raise TableauError(f"no room to unslide domino {k}")
                old = ((length - 1, col - 1), (length, col - 1))
        else:
            (mr, mc) = next(iter(meet))
            (r, c) = new[0]
            if not horizontal:
                # came from a horizontal domino twisting around its right cell
                if (mr, mc) != (r + 1, c) or c < 2:
                    raise TableauError(f"inconsistent region at domino {k}")
                old = ((r, c - 1), (r, c))
            else:
                # came from a vertical domino twisting around its bottom cell
                if (mr, mc) != (r, c + 1) or r < 2:
                    raise TableauError(f"inconsistent region at domino {k}")
                old = ((r - 1, c), (r, c))
        out[k] = old
        region = (region | set(old)) - set(new)
        if len(region) != 2:
            raise TableauError(f"region lost track at domino {k}")
    raise TableauError("recording domino does not trace back to an insertion")


def rs_inverse(pair: TableauPair) -> SignedPerm:
    """The inverse correspondence; rs(rs_inverse(p)) == p."""
    count = len(pair.right.dominoes)
    work = {d.label: d.cells for d in pair.left.dominoes}
    values = []
    for step in range(count, 0, -1):
        delta = set(pair.right.domino(step).cells)
        value, work = _reverse_step(pair.left.lie_type, work, delta)
        values.append(value)
    if work:
        raise TableauError("labels left over after unwinding")
    values.reverse()
    return as_signed_perm(values)


def pair_to_json_dict(pair: TableauPair) -> dict:
    return {"left": to_json_dict(pair.left), "right": to_json_dict(pair.right)}


def pair_from_json_dict(doc: dict) -> TableauPair:
    if not isinstance(doc, dict) or "left" not in doc or "right" not in doc:
        raise TableauError(f"malformed pair document: {doc!r}")
    return make_pair(from_json_dict(doc["left"]), from_json_dict(doc["right"]))


def pair_serialize(pair: TableauPair) -> str:
    return json.dumps(pair_to_json_dict(pair), sort_keys=True)


def pair_deserialize(text: str) -> TableauPair:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableauError(f"not valid JSON: {exc}") from exc
    return pair_from_json_dict(doc)
