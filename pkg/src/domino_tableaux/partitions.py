"""Partitions with dominance order, orbit-partition tests, collapse and duality.

A partition is stored as a tuple of weakly decreasing positive integers;
trailing zeros are never kept.  The two group types "B" and "C" select which
parity class of parts is constrained when a partition labels a nilpotent
orbit of the corresponding classical Lie algebra.
"""

from __future__ import annotations

from typing import Iterable, Iterator

Partition = tuple[int, ...]

TYPE_B = "B"
TYPE_C = "C"
GROUP_TYPES = (TYPE_B, TYPE_C)


def check_group_type(group_type: str) -> str:
    if group_type not in GROUP_TYPES:
        raise ValueError(f"unknown group type {group_type!r}; expected 'B' or 'C'")
    return group_type


def as_partition(parts: Iterable[int]) -> Partition:
    """Normalize a sequence into a partition, dropping trailing zeros."""
    seq = list(parts)
    while seq and seq[-1] == 0:
        seq.pop()
    for a, b in zip(seq, seq[1:]):
        if a < b:
            raise ValueError(f"parts not weakly decreasing: {seq}")
    if seq and seq[-1] < 0:
        raise ValueError(f"negative part in {seq}")
    if any(p <= 0 for p in seq):
        raise ValueError(f"zero part inside {seq}")
    return tuple(seq)


def parse_partition(text: str) -> Partition:
    """Parse the bracket format, e.g. "[3,1]" or "[]"."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"partition must look like [3,1]; got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    return as_partition(int(tok) for tok in body.split(","))


def format_partition(lam: Partition) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


def dominates(lam: Partition, mu: Partition) -> bool:
    """True if every prefix sum of lam is >= the matching prefix sum of mu.

    Only defined for partitions of equal size.
    """
    if sum(lam) != sum(mu):
        raise ValueError(
            f"dominance needs equal sizes: |{format_partition(lam)}| != |{format_partition(mu)}|"
        )
    total_l = total_m = 0
    for k in range(max(len(lam), len(mu))):
        total_l += lam[k] if k < len(lam) else 0
        total_m += mu[k] if k < len(mu) else 0
        if total_l < total_m:
            return False
    return True


def transpose(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, largest part first, in descending lex order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    cap = n if max_part is None else min(max_part, n)
    for first in range(cap, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def _bad_parity(group_type: str) -> int:
    # Which residue of a part value must come with even multiplicity:
    # type C constrains odd parts, type B constrains even parts.
    return 1 if group_type == TYPE_C else 0


def is_orbit_partition(lam: Partition, group_type: str) -> bool:
    """Whether lam labels a nilpotent orbit for the given group type."""
    check_group_type(group_type)
    bad = _bad_parity(group_type)
    return all(lam.count(v) % 2 == 0 for v in set(lam) if v % 2 == bad)


def orbit_collapse(lam: Partition, group_type: str) -> Partition:
    """The dominance-greatest orbit partition dominated by lam.

    Computed by repeatedly moving one box down from the last row of the
    largest offending part value; validated elsewhere against brute force.
    """
    check_group_type(group_type)
    if group_type == TYPE_C and sum(lam) % 2 == 1:
        raise ValueError("no C-type orbit partition has odd size")
    bad = _bad_parity(group_type)
    parts = list(lam)
    for _ in range(sum(lam) ** 2 + 1):
        offenders = [v for v in set(parts) if v % 2 == bad and parts.count(v) % 2 == 1]
        if not offenders:
            return as_partition(parts)
        v = max(offenders)
        i = max(idx for idx, p in enumerate(parts) if p == v)
        parts[i] -= 1
        # Re-add the box at the first later row that stays weakly decreasing.
        j = i + 1
        while j < len(parts) and parts[j] + 1 > parts[j - 1]:
            j += 1
        if j == len(parts):
            parts.append(1)
        else:
            parts[j] += 1
    raise RuntimeError(f"collapse did not terminate on {lam}")  # pragma: no cover


def orbit_dual(lam: Partition, group_type: str) -> Partition:
    """Order-reversing duality on orbit partitions: transpose, then collapse."""
    if not is_orbit_partition(lam, group_type):
        raise ValueError(f"{format_partition(lam)} is not a {group_type}-type orbit partition")
    return orbit_collapse(transpose(lam), group_type)


def is_special(lam: Partition, group_type: str) -> bool:
    """True for orbit partitions fixed by the square of the duality."""
    lam = as_partition(lam)
    if not is_orbit_partition(lam, group_type):
        return False
    return orbit_dual(orbit_dual(lam, group_type), group_type) == lam
