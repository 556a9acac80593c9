"""Descent-set invariants and wall-crossing operators.

Three operators move between elements (or same-shape tableau pairs) while
preserving the cell data probed by the annealing pipeline:

* ``wall_cross_equal_length`` acts on group elements through a pair of
  adjacent swap generators, exactly one of which is a right descent;
* ``wall_cross_unequal_length`` acts on tableau pairs whose first two
  dominoes sit in one of the small shapes where crossing the wall between
  the sign-change root and its neighbor is single-valued;
* ``wall_cross_type_d`` is the analogue steered by the opposite-parity
  coloring, with its own small-shape domains.

Every operator either returns a value or raises OperatorUndefinedError
carrying a domain report.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cycles import Coloring, move_through_extended
from .insertion import TableauPair, make_pair
from .signed_perm import (
    SignedPerm,
    apply_generator,
    inverse,
    right_descents,
)
from .tableau import DominoTableau, make_domino, make_tableau, validate


@dataclass(frozen=True)
class OperatorDomainReport:
    defined: bool
    case: str | None
    reason: str

    def to_json_dict(self) -> dict:
        return {"defined": self.defined, "case": self.case, "reason": self.reason}


class OperatorUndefinedError(ValueError):
    def __init__(self, report: OperatorDomainReport):
        super().__init__(report.reason)
        self.report = report


def tau(w: SignedPerm, side: str = "left") -> frozenset[int]:
    """Descent-set invariant; the left side is the one attached to varieties."""
    if side == "left":
        return right_descents(inverse(w))
    if side == "right":
        return right_descents(w)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def equal_length_domain(w: SignedPerm, i: int, j: int) -> OperatorDomainReport:
    if not (i >= 2 and j >= 2 and abs(i - j) == 1):
        return OperatorDomainReport(
            False, None, f"indices {i},{j} are not adjacent swap generators"
        )
    if max(i, j) > len(w):
        return OperatorDomainReport(False, None, f"index {max(i, j)} exceeds rank {len(w)}")
    rd = right_descents(w)
    if (i in rd) == (j in rd):
        both = "both" if i in rd else "neither"
        return OperatorDomainReport(
            False, None, f"{both} of {i},{j} are right descents of {w}"
        )
    return OperatorDomainReport(True, f"descent {{{i if i in rd else j}}}", "ok")


def wall_cross_equal_length(w: SignedPerm, i: int, j: int) -> SignedPerm:
    """Move across the wall between two adjacent equal-length simple roots.

    The image is the unique neighbor w*s_i or w*s_j whose descent pattern on
    {i, j} is the opposite one.
    """
    report = equal_length_domain(w, i, j)
    if not report.defined:
        raise OperatorUndefinedError(report)
    rd = right_descents(w)
    absent = i if i not in rd else j
    present = j if absent == i else i
    images = []
    for gen in (i, j):
        cand = apply_generator(w, gen)
        crd = right_descents(cand)
        if absent in crd and present not in crd:
            images.append(cand)
    if len(images) != 1:
        raise RuntimeError(
            f"wall crossing through {{{i},{j}}} not single-valued at {w}: {images}"
        )
    return images[0]


def _swap_in_box(tableau: DominoTableau, a: int, b: int) -> DominoTableau:
    """Transpose two dominoes jointly filling a 2x2 box."""
    da, db = tableau.domino(a), tableau.domino(b)
    cells = set(da.cells) | set(db.cells)
    rows = {r for r, _ in cells}
    cols = {c for _, c in cells}
    if not (len(cells) == 4 and len(rows) == 2 and len(cols) == 2):
        raise RuntimeError(f"dominoes {a} and {b} do not fill a 2x2 box: {sorted(cells)}")
    r0, c0 = min(rows), min(cols)
    if da.horizontal:
        layouts = [
            {a: ((r0, c0), (r0 + 1, c0)), b: ((r0, c0 + 1), (r0 + 1, c0 + 1))},
            {a: ((r0, c0 + 1), (r0 + 1, c0 + 1)), b: ((r0, c0), (r0 + 1, c0))},
        ]
    else:
        layouts = [
            {a: ((r0, c0), (r0, c0 + 1)), b: ((r0 + 1, c0), (r0 + 1, c0 + 1))},
            {a: ((r0 + 1, c0), (r0 + 1, c0 + 1)), b: ((r0, c0), (r0, c0 + 1))},
        ]
    good = []
    for layout in layouts:
        candidate = DominoTableau(
            tableau.lie_type,
            tuple(
                make_domino(d.label, layout.get(d.label, d.cells))
                for d in tableau.dominoes
            ),
        )
        if validate(candidate, require_contiguous=False)[0]:
            good.append(candidate)
    if len(good) != 1:
        raise RuntimeError(
            f"box transposition of {a},{b} admits {len(good)} standard layouts"
        )
    return good[0]


def _swap_positions(tableau: DominoTableau, a: int, b: int) -> DominoTableau:
    """Interchange the cell sets of two dominoes outright."""
    da, db = tableau.domino(a), tableau.domino(b)
    dominoes = [
        (d.label, db.cells if d.label == a else da.cells if d.label == b else d.cells)
        for d in tableau.dominoes
    ]
    return make_tableau(tableau.lie_type, dominoes)


def unequal_length_domain(pair: TableauPair) -> OperatorDomainReport:
    if len(pair.right.dominoes) < 2:
        return OperatorDomainReport(False, None, "needs at least two dominoes")
    head = pair.right.sub_shape(2)
    if pair.right.lie_type == "C":
        wanted = {(3, 1): "(3,1)", (2, 2): "(2,2)"}
    else:
        wanted = {(3, 2): "(3,2)", (3, 1, 1): "(3,1,1)"}
    if head in wanted:
        return OperatorDomainReport(True, wanted[head], "ok")
    return OperatorDomainReport(
        False, None, f"first two dominoes fill {head}, not one of {sorted(wanted.values())}"
    )


def wall_cross_unequal_length(pair: TableauPair) -> TableauPair:
    """Cross the wall between the sign-change root and its swap neighbor.

    On the flat two-domino head shapes the right tableau's 1- and 2-dominoes
    are rearranged directly; on the others an extended cycle move of the
    2-domino under the native coloring happens first.
    """
    report = unequal_length_domain(pair)
    if not report.defined:
        raise OperatorUndefinedError(report)
    if pair.right.lie_type == "C":
        if report.case == "(3,1)":
            moved = move_through_extended(pair, 2, Coloring.NATIVE)
            return make_pair(moved.left, _swap_in_box(moved.right, 1, 2))
        # (2,2): the left tableau is untouched, object identity preserved
        return make_pair(pair.left, _swap_in_box(pair.right, 1, 2))
    if report.case == "(3,2)":
        moved = move_through_extended(pair, 2, Coloring.NATIVE)
        return make_pair(moved.left, _swap_positions(moved.right, 1, 2))
    return make_pair(pair.left, _swap_positions(pair.right, 1, 2))


def type_d_domain(pair: TableauPair) -> OperatorDomainReport:
    right = pair.right
    if right.lie_type == "C":
        if len(right.dominoes) < 4:
            return OperatorDomainReport(False, None, "needs at least four dominoes")
        head = right.sub_shape(4)
        if head != (4, 3, 1):
            return OperatorDomainReport(
                False, None, f"first four dominoes fill {head}, not (4,3,1)"
            )
        if right.domino(2).horizontal:
            return OperatorDomainReport(
                False, None, "2-domino must be vertical in column 1"
            )
        return OperatorDomainReport(True, "(4,3,1)", "ok")
    if len(right.dominoes) < 3:
        return OperatorDomainReport(False, None, "needs at least three dominoes")
    head = right.sub_shape(3)
    if head != (4, 2, 1):
        return OperatorDomainReport(
            False, None, f"first three dominoes fill {head}, not (4,2,1)"
        )
    return OperatorDomainReport(True, "(4,2,1)", "ok")


def wall_cross_type_d(pair: TableauPair) -> TableauPair:
    """The opposite-parity analogue acting through the fourth (type C) or
    third (type B) domino's extended cycle."""
    report = type_d_domain(pair)
    if not report.defined:
        raise OperatorUndefinedError(report)
    if pair.right.lie_type == "C":
        moved = move_through_extended(pair, 4, Coloring.TYPE_D)
        return make_pair(moved.left, _swap_in_box(moved.right, 2, 4))
    moved = move_through_extended(pair, 3, Coloring.TYPE_D)
    return make_pair(moved.left, _swap_in_box(moved.right, 2, 3))
