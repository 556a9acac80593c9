"""Exhaustive generators and brute-force cross-checks.

Everything here is deliberately implemented from first principles (shape
chains rather than cell-level standardness, direct group arithmetic) so it
can serve as an independent oracle for the other modules.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

from .cycles import Coloring, all_cycles, cycle_of, move_through
from .insertion import rs, rs_inverse
from .operators import (
    equal_length_domain,
    tau,
    type_d_domain,
    unequal_length_domain,
    wall_cross_equal_length,
    wall_cross_type_d,
    wall_cross_unequal_length,
)
from .partitions import (
    Partition,
    as_partition,
    check_group_type,
    dominates,
    is_orbit_partition,
    partitions_of,
)
from .pipeline import orbital_tableau
from .signed_perm import (
    SignedPerm,
    compose,
    enumerate_group,
    format_perm,
    identity,
    inverse,
)
from .tableau import DominoTableau, make_tableau, serialize

DEFAULT_SEED = 112358

SUITE_NAMES = (
    "rs-bijection",
    "involution-criterion",
    "inverse-transpose",
    "cycle-involution",
    "operator-cell-compat",
    "pipeline-confluence",
    "counting-identities",
    "surjectivity",
)


# ---------------------------------------------------------------------------
# standard domino tableaux by backtracking over shape chains


def _core_shape(lie_type: str) -> Partition:
    return (1,) if lie_type == "B" else ()


def _removals(shape: Partition, lie_type: str):
    """Ways to delete the top-labeled domino: (new_shape, cells)."""
    rows = len(shape)
    for r in range(1, rows + 1):
        length = shape[r - 1]
        below = shape[r] if r < rows else 0
        # last two cells of row r
        if length >= 2 and length - 2 >= below:
            if not (lie_type == "B" and r == 1 and length - 2 < 1):
                new = shape[: r - 1] + (length - 2,) + shape[r:]
                yield as_partition(new), ((r, length - 1), (r, length))
        # bottom two cells of a column: rows r, r+1 of equal length
        if r < rows and shape[r] == length:
            lower = shape[r + 1] if r + 1 < rows else 0
            if length - 1 >= lower and not (lie_type == "B" and r == 1 and length == 1):
                new = shape[: r - 1] + (length - 1, length - 1) + shape[r + 1 :]
                yield as_partition(new), ((r, length), (r + 1, length))


def _check_shape(shape, lie_type: str) -> Partition:
    check_group_type(lie_type)
    shape = as_partition(shape)
    if sum(shape) % 2 != (1 if lie_type == "B" else 0):
        raise ValueError(f"size {sum(shape)} has the wrong parity for type {lie_type}")
    return shape


@lru_cache(maxsize=None)
def _count_chains(shape: Partition, lie_type: str) -> int:
    if shape == _core_shape(lie_type):
        return 1
    return sum(_count_chains(new, lie_type) for new, _ in _removals(shape, lie_type))


def count_sdt(shape, lie_type: str) -> int:
    """Number of standard domino tilings of the given shape."""
    return _count_chains(_check_shape(shape, lie_type), lie_type)


def all_sdt(shape, lie_type: str) -> list[DominoTableau]:
    """Every standard domino tableau of the given shape, built by removing
    the highest-labeled domino and recursing."""
    shape = _check_shape(shape, lie_type)

    def build(current: Partition, label: int):
        if current == _core_shape(lie_type):
            yield []
            return
        for new, cells in _removals(current, lie_type):
            for rest in build(new, label - 1):
                yield rest + [(label, cells)]

    total = (sum(shape) - len(_core_shape(lie_type))) // 2
    return [make_tableau(lie_type, layout) for layout in build(shape, total)]


# ---------------------------------------------------------------------------
# verification suites


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    lie_type: str
    n: int
    instances: int
    failures: tuple[str, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "type": self.lie_type,
            "n": self.n,
            "instances": self.instances,
            "failures": list(self.failures),
            "passed": self.passed,
        }


def _group_shapes(n: int, lie_type: str):
    return partitions_of(2 * n + (1 if lie_type == "B" else 0))


def _suite_rs_bijection(n, lie_type, report):
    for w in enumerate_group(n):
        report["instances"] += 1
        back = rs_inverse(rs(w, lie_type))
        if back != w:
            report["failures"].append(
                f"w={format_perm(w)} round-tripped to {format_perm(back)}"
            )


def _suite_counting_identities(n, lie_type, report):
    report["instances"] += 1
    total = sum(count_sdt(shape, lie_type) ** 2 for shape in _group_shapes(n, lie_type))
    expected = 2**n * math.factorial(n)
    if total != expected:
        report["failures"].append(f"sum of squared counts {total} != {expected}")


def _suite_involution_criterion(n, lie_type, report):
    e = identity(n)
    involutions = 0
    for w in enumerate_group(n):
        report["instances"] += 1
        is_invol = compose(w, w) == e
        involutions += is_invol
        pair = rs(w, lie_type)
        if is_invol != (pair.left == pair.right):
            report["failures"].append(
                f"w={format_perm(w)}: involution={is_invol} but tableau "
                f"equality={pair.left == pair.right}"
            )
    total = sum(count_sdt(shape, lie_type) for shape in _group_shapes(n, lie_type))
    if involutions != total:
        report["failures"].append(f"{involutions} involutions vs {total} tableaux")


def _suite_inverse_transpose(n, lie_type, report):
    for w in enumerate_group(n):
        report["instances"] += 1
        if rs(inverse(w), lie_type).left != rs(w, lie_type).right:
            report["failures"].append(f"w={format_perm(w)}")


def _left_tableaux(n, lie_type):
    return {rs(w, lie_type).left for w in enumerate_group(n)}


def _suite_cycle_involution(n, lie_type, report):
    for tab in sorted(_left_tableaux(n, lie_type), key=lambda t: serialize(t)):
        for coloring in Coloring:
            cycles = all_cycles(tab, coloring)
            seen: set[int] = set()
            for cy in cycles:
                seen.update(cy.labels)
            if seen != set(tab.labels()) or sum(len(c.labels) for c in cycles) != len(
                seen
            ):
                report["failures"].append(
                    f"{serialize(tab)} {coloring.value}: labels not partitioned"
                )
                continue
            for cy in cycles:
                report["instances"] += 1
                moved = move_through(tab, cy)
                if cy.open:
                    lost = tab.cells() - moved.cells()
                    gained = moved.cells() - tab.cells()
                    if lost != {cy.hole} or gained != {cy.corner}:
                        report["failures"].append(
                            f"{serialize(tab)} {coloring.value} {cy.labels}: "
                            f"open move changed cells {lost}/{gained}"
                        )
                elif moved.shape() != tab.shape():
                    report["failures"].append(
                        f"{serialize(tab)} {coloring.value} {cy.labels}: "
                        "closed move changed shape"
                    )
                again = move_through(
                    moved, cycle_of(moved, min(cy.labels), coloring)
                )
                if again != tab:
                    report["failures"].append(
                        f"{serialize(tab)} {coloring.value} {cy.labels}: "
                        "double move is not the identity"
                    )


def _admissible(tab: DominoTableau):
    """Open cycles lowering the shape with hole and corner in rows of the
    admissible parity (re-derived here, not taken from the annealer)."""
    shape = tab.shape()
    want = 1 if tab.lie_type == "C" else 0

    def row_len(r):
        return shape[r - 1] if r <= len(shape) else 0

    for coloring in Coloring:
        for cy in all_cycles(tab, coloring):
            if not cy.open:
                continue
            if row_len(cy.hole[0]) % 2 != want or row_len(cy.corner[0]) % 2 != want:
                continue
            moved = move_through(tab, cy)
            if moved.shape() != shape and dominates(shape, moved.shape()):
                yield moved


@lru_cache(maxsize=None)
def _terminals(tab: DominoTableau) -> frozenset[DominoTableau]:
    if is_orbit_partition(tab.shape(), tab.lie_type):
        return frozenset([tab])
    out: set[DominoTableau] = set()
    for moved in _admissible(tab):
        out |= _terminals(moved)
    return frozenset(out)


def _suite_pipeline_confluence(n, lie_type, report, seed=DEFAULT_SEED, sample=None):
    tableaux = sorted(_left_tableaux(n, lie_type), key=lambda t: serialize(t))
    if sample is not None and len(tableaux) > sample:
        tableaux = random.Random(seed).sample(tableaux, sample)
    for tab in tableaux:
        report["instances"] += 1
        ends = _terminals(tab)
        if len(ends) != 1:
            report["failures"].append(
                f"{serialize(tab)}: {len(ends)} distinct terminal tableaux"
            )
        elif next(iter(ends)) != orbital_tableau(tab).tableau:
            report["failures"].append(
                f"{serialize(tab)}: canonical run disagrees with exploration"
            )


def _suite_operator_cell_compat(n, lie_type, report):
    for w in enumerate_group(n):
        target = orbital_tableau(rs(w, lie_type).left).tableau
        for i in range(2, n):
            if equal_length_domain(w, i, i + 1).defined:
                report["instances"] += 1
                image = wall_cross_equal_length(w, i, i + 1)
                got = orbital_tableau(rs(image, lie_type).left).tableau
                if got != target:
                    report["failures"].append(
                        f"equal-length({i},{i + 1}) moved w={format_perm(w)} "
                        "off its annealed tableau"
                    )
        pair = rs(w, lie_type)
        for name, domain, apply in (
            ("unequal-length", unequal_length_domain, wall_cross_unequal_length),
            ("type-d", type_d_domain, wall_cross_type_d),
        ):
            if not domain(pair).defined:
                continue
            report["instances"] += 1
            out = apply(pair)
            if rs(rs_inverse(out), lie_type) != out:
                report["failures"].append(
                    f"{name} output at w={format_perm(w)} is not an insertion image"
                )
                continue
            if orbital_tableau(out.left).tableau != target:
                report["failures"].append(
                    f"{name} moved w={format_perm(w)} off its annealed tableau"
                )


def _suite_surjectivity(n, lie_type, report):
    fibers: dict[DominoTableau, int] = {}
    for w in enumerate_group(n):
        report["instances"] += 1
        out = orbital_tableau(rs(w, lie_type).left).tableau
        fibers[out] = fibers.get(out, 0) + 1
    expected: set[DominoTableau] = set()
    for shape in _group_shapes(n, lie_type):
        if is_orbit_partition(shape, lie_type):
            expected.update(all_sdt(shape, lie_type))
    if set(fibers) != expected:
        missing = len(expected - set(fibers))
        extra = len(set(fibers) - expected)
        report["failures"].append(
            f"image mismatch: {missing} unreached tableaux, {extra} unexpected"
        )
    if len(fibers) != len(expected):
        report["failures"].append(
            f"{len(fibers)} fibers for {len(expected)} target tableaux"
        )


_SUITES = {
    "rs-bijection": _suite_rs_bijection,
    "involution-criterion": _suite_involution_criterion,
    "inverse-transpose": _suite_inverse_transpose,
    "cycle-involution": _suite_cycle_involution,
    "operator-cell-compat": _suite_operator_cell_compat,
    "pipeline-confluence": _suite_pipeline_confluence,
    "counting-identities": _suite_counting_identities,
    "surjectivity": _suite_surjectivity,
}


def verify_suite(
    name: str,
    n: int,
    lie_type: str,
    seed: int = DEFAULT_SEED,
    sample: int | None = None,
) -> VerificationReport:
    """Run one named exhaustive check and report instances and failures."""
    check_group_type(lie_type)
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    if n < 1:
        raise ValueError("n must be at least 1")
    state = {"instances": 0, "failures": []}
    if name == "pipeline-confluence":
        _SUITES[name](n, lie_type, state, seed=seed, sample=sample)
    else:
        _SUITES[name](n, lie_type, state)
    return VerificationReport(
        suite=name,
        lie_type=lie_type,
        n=n,
        instances=state["instances"],
        failures=tuple(state["failures"]),
    )


# ---------------------------------------------------------------------------
# bounded-depth signature separating annealed classes


def tau_signature(w: SignedPerm, depth: int, lie_type: str):
    """Descent data plus, recursively, the signatures of all operator
    images, canonicalized as nested tuples for equality comparison."""
    n = len(w)
    head = tuple(sorted(tau(w, "left")))
    if depth <= 0:
        return (head,)
    branches = []
    for i in range(2, n):
        if equal_length_domain(w, i, i + 1).defined:
            image = wall_cross_equal_length(w, i, i + 1)
            branches.append((f"equal-length-{i}", tau_signature(image, depth - 1, lie_type)))
        else:
            branches.append((f"equal-length-{i}", None))
    pair = rs(w, lie_type)
    for name, domain, apply in (
        ("unequal-length", unequal_length_domain, wall_cross_unequal_length),
        ("type-d", type_d_domain, wall_cross_type_d),
    ):
        if domain(pair).defined:
            image_w = rs_inverse(apply(pair))
            branches.append((name, tau_signature(image_w, depth - 1, lie_type)))
        else:
            branches.append((name, None))
    return (head, tuple(branches))
