"""Mackey bi-tableaux: restriction of standard modules at the class level.

A tableau assigns to each segment [x, y] of an ordered multisegment a row
(a_1, e_1) ... (a_k, e_k) with x = a_k < ... < a_1 <= y and strictly
increasing slot labels 1 <= e_1 < ... < e_k <= s.  Row entries cut the
segment into pieces [a_j, a_{j-1} - 1] (a_0 = y + 1) distributed over the
s slots; summing over rows gives one term of the restriction.

Whether a tableau contributes to the reciprocal character is decided by
per-bucket counting (never by materializing a matching): for every value
pair (a, e), the shifted demand entries must not outnumber the plain
supply entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Optional, Sequence

from .errors import InvalidSegment, NoConnection
from .multiseg import Multisegment, OrderedMultisegment, Segment

Entry = tuple[int, int]  # (a, e) pair


@dataclass(frozen=True)
class MackeyRow:
    """One row of a tableau: the chain chosen for a single segment."""

    entries: tuple[Entry, ...]
    segment: Segment

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class MackeyTableau:
    rows: tuple[MackeyRow, ...]
    s: int

    def ordering(self) -> OrderedMultisegment:
        return OrderedMultisegment(r.segment for r in self.rows)

    def __str__(self) -> str:
        return " ".join(
            "(" + "".join(f"({a},{e})" for a, e in r.entries) + ")" for r in self.rows
        )


@dataclass(frozen=True)
class RestrictionTerm:
    """One summand of the s-fold restriction: a tuple of multisegment parts."""

    parts: tuple[Multisegment, ...]

    def __str__(self) -> str:
        return " | ".join(str(p) for p in self.parts)


def enumerate_rows(x: int, y: int, s: int) -> list[tuple[Entry, ...]]:
    """All rows for the segment [x, y] with s slots.

    Count: sum over k of C(y-x, k-1) * C(s, k).
    """
    if x > y:
        raise InvalidSegment(f"segment [{x},{y}] has x > y")
    rows: list[tuple[Entry, ...]] = []
    inner = range(x + 1, y + 1)
    for k in range(1, min(y - x + 1, s) + 1):
        for extra in combinations(inner, k - 1):
            achain = tuple(sorted(extra, reverse=True)) + (x,)
            for echain in combinations(range(1, s + 1), k):
                rows.append(tuple(zip(achain, echain)))
    return rows


def enumerate_tableaux(m_ord: OrderedMultisegment, s: int) -> Iterator[MackeyTableau]:
    """Row-major product of the per-segment row sets."""
    rowsets = [
        [MackeyRow(entries, seg) for entries in enumerate_rows(seg.a, seg.b, s)]
        for seg in m_ord
    ]
    for combo in product(*rowsets):
        yield MackeyTableau(tuple(combo), s)


def tableau_parts(q: MackeyTableau) -> tuple[Multisegment, ...]:
    """The s multisegment parts cut out by a tableau."""
    parts: list[dict[Segment, int]] = [dict() for _ in range(q.s)]
    for row in q.rows:
        prev_a = row.segment.b + 1
        for a, e in row.entries:
            seg = Segment(a, prev_a - 1)
            bucket = parts[e - 1]
            bucket[seg] = bucket.get(seg, 0) + 1
            prev_a = a
    return tuple(Multisegment(p) for p in parts)


def mackey_restriction(m_ord: OrderedMultisegment, s: int) -> dict[RestrictionTerm, int]:
    """Multiset of restriction terms, one per tableau."""
    out: dict[RestrictionTerm, int] = {}
    for q in enumerate_tableaux(m_ord, s):
        term = RestrictionTerm(tableau_parts(q))
        out[term] = out.get(term, 0) + 1
    return out


def _supply_demand(q: MackeyTableau, ends: Sequence[int]):
    """Per-bucket (a, e) counts: plain entries vs shifted entries.

    Demand collects the shifted pairs (a_{j-1}, e_j) for j >= 2 together
    with (y_i + 1, e_1) for rows whose own end differs from the end
    labelled by their first slot.
    """
    supply: dict[Entry, int] = {}
    demand: dict[Entry, int] = {}
    for row in q.rows:
        y = row.segment.b
        prev_a = y + 1
        for j, (a, e) in enumerate(row.entries, start=1):
            supply[(a, e)] = supply.get((a, e), 0) + 1
            if j >= 2 or y != ends[e - 1]:
                demand[(prev_a, e)] = demand.get((prev_a, e), 0) + 1
            prev_a = a
    return supply, demand


def in_K0(q: MackeyTableau, ends: Sequence[int]) -> bool:
    """Gate: every row end is bounded by the end labelled by its first slot."""
    return all(row.segment.b <= ends[row.entries[0][1] - 1] for row in q.rows)


def mackey_connection_exists(q: MackeyTableau, ends: Sequence[int]) -> bool:
    """Count-domination criterion for the existence of a connection.

    Tableaux outside the gate are rejected outright; contributing
    tableaux always pass it.
    """
    if not in_K0(q, ends):
        return False
    supply, demand = _supply_demand(q, ends)
    return all(c <= supply.get(key, 0) for key, c in demand.items())


def theta_of_mackey(q: MackeyTableau, ends: Sequence[int]) -> Multisegment:
    """Target multisegment of a connected tableau, via per-bucket surplus."""
    if not mackey_connection_exists(q, ends):
        raise NoConnection(f"tableau {q} admits no connection")
    supply, demand = _supply_demand(q, ends)
    acc: dict[Segment, int] = {}
    for (a, e), c in supply.items():
        surplus = c - demand.get((a, e), 0)
        if surplus:
            seg = Segment(a, ends[e - 1])
            acc[seg] = acc.get(seg, 0) + surplus
    return Multisegment(acc)


def theta_via_connection(q: MackeyTableau, ends: Sequence[int]) -> Multisegment:
    """Same target computed by materializing an explicit injection.

    Demands are assigned greedily bucket by bucket; the survivors
    (entries not hit by the injection) contribute [a, end(e)].  Kept as
    an independent cross-check of the surplus route.
    """
    if not mackey_connection_exists(q, ends):
        raise NoConnection(f"tableau {q} admits no connection")
    buckets: dict[Entry, list[tuple[int, int]]] = {}
    demands: list[Entry] = []
    for i, row in enumerate(q.rows):
        y = row.segment.b
        prev_a = y + 1
        for j, (a, e) in enumerate(row.entries, start=1):
            buckets.setdefault((a, e), []).append((i, j))
            if j >= 2 or y != ends[e - 1]:
                demands.append((prev_a, e))
            prev_a = a
    taken: set[tuple[int, int]] = set()
    for key in demands:
        target = next(ix for ix in buckets[key] if ix not in taken)
        taken.add(target)
    acc: dict[Segment, int] = {}
    for i, row in enumerate(q.rows):
        for j, (a, e) in enumerate(row.entries, start=1):
            if (i, j) in taken:
                continue
            seg = Segment(a, ends[e - 1])
            acc[seg] = acc.get(seg, 0) + 1
    return Multisegment(acc)


def connected_tableaux(
    m_ord: OrderedMultisegment, ends: Optional[Sequence[int]] = None
) -> Iterator[tuple[MackeyTableau, Multisegment]]:
    """All connected tableaux of the full-slot family, with their targets."""
    if ends is None:
        ends = m_ord.multiset().ends()
    for q in enumerate_tableaux(m_ord, len(ends)):
        if mackey_connection_exists(q, ends):
            yield q, theta_of_mackey(q, ends)
