"""Dominant bi-tableaux and the reciprocal multiplicity matrix.

Two tableau families live here.  The A-flavor draws its entries from the
begin/end alphabets of the host multisegment and carries the statistics
(t, <-t) whose surplus vector names a target multisegment; counting the
dominant tableaux per target fills one row of the matrix A.  The J-flavor
has rows (a_1, y) (a_2, b_2) ... with unbounded ends; its finite slice
with entries in the begin/end sets supports the dominant-connection test
and the transfer map onto Mackey tableaux.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Literal, Optional

from .checked import guard
from .errors import NotInJ0
from .mackey import MackeyRow, MackeyTableau
from .multiseg import Multisegment, OrderedMultisegment, Segment

Pair = tuple[int, int]  # (a, b) pair


@dataclass(frozen=True)
class DomRow:
    entries: tuple[Pair, ...]
    segment: Segment

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class DomTableau:
    rows: tuple[DomRow, ...]
    flavor: Literal["A", "J"]

    def ordering(self) -> OrderedMultisegment:
        return OrderedMultisegment(r.segment for r in self.rows)

    def __str__(self) -> str:
        return " ".join(
            "(" + "".join(f"({a},{b})" for a, b in r.entries) + ")" for r in self.rows
        )


@dataclass
class AMatrixRow:
    """One row of the reciprocal multiplicity matrix: source -> {target: count}."""

    source: Multisegment
    entries: dict[Multisegment, int]

    def __getitem__(self, n: Multisegment) -> int:
        return self.entries.get(n, 0)


# -- A-flavor ----------------------------------------------------------------


def enumerate_A(m: Multisegment) -> Iterator[DomTableau]:
    """All bi-tableaux over the begin/end alphabets of m.

    Row chains for a segment [x, y]: begins x = a_k < ... < a_1 <= y and
    ends y <= b_1 < ... < b_k, all drawn from the values occurring in m.
    """
    begins = m.begins()
    ends = m.ends()
    rowsets = []
    for seg in m.admissible_ordering():
        x, y = seg.a, seg.b
        inner = [v for v in begins if x < v <= y]
        upper = [v for v in ends if v >= y]
        rows = []
        for k in range(1, min(len(inner) + 1, len(upper)) + 1):
            for extra in combinations(inner, k - 1):
                achain = tuple(sorted(extra, reverse=True)) + (x,)
                for bchain in combinations(upper, k):
                    rows.append(DomRow(tuple(zip(achain, sorted(bchain))), seg))
        rowsets.append(rows)
    for combo in product(*rowsets):
        yield DomTableau(tuple(combo), "A")


def statistics_vectors(q: DomTableau) -> tuple[dict[Segment, int], dict[Pair, int]]:
    """Full (t, <-t) statistics of an A-flavor tableau.

    t counts plain entries per segment value; <-t counts shifted pairs
    (a_{j-1}, b_j) with a_0 = y_i + 1, restricted to rows below the end
    in question.  Shifted pairs may leave the entry alphabets; they are
    counted regardless.
    """
    t: dict[Segment, int] = {}
    tl: dict[Pair, int] = {}
    for row in q.rows:
        y = row.segment.b
        prev_a = y + 1
        for a, b in row.entries:
            seg = Segment(a, b)
            t[seg] = t.get(seg, 0) + 1
            if y < b:
                tl[(prev_a, b)] = tl.get((prev_a, b), 0) + 1
            prev_a = a
    return t, tl


def statistics(q: DomTableau, delta: Segment) -> tuple[int, int]:
    """(t, <-t) of a single segment value."""
    if q.flavor != "A":
        raise ValueError("statistics are defined for A-flavor tableaux")
    t, tl = statistics_vectors(q)
    return t.get(delta, 0), tl.get((delta.a, delta.b), 0)


def _surplus_target(q: DomTableau) -> Optional[Multisegment]:
    """Target multisegment t - <-t of a tableau, or None if not dominant."""
    t, tl = statistics_vectors(q)
    acc: dict[Segment, int] = {s: c for s, c in t.items()}
    for (a, b), c in tl.items():
        # shifted pairs always satisfy a <= b: a <= y_i + 1 <= b on rows
        # where they are counted
        seg = Segment(a, b)
        acc[seg] = acc.get(seg, 0) - c
    if any(c < 0 for c in acc.values()):
        return None
    return Multisegment({s: c for s, c in acc.items() if c > 0})


def a_matrix_row(m: Multisegment) -> AMatrixRow:
    """Reciprocal multiplicities of one source, by dominant tableau counting."""
    entries: dict[Multisegment, int] = {}
    for q in enumerate_A(m):
        n = _surplus_target(q)
        if n is not None:
            entries[n] = guard(entries.get(n, 0) + 1)
    return AMatrixRow(m, entries)


# -- J-flavor ----------------------------------------------------------------


def _j_rows(seg: Segment, apool: list[int], bpool: list[int]) -> list[DomRow]:
    """Rows over [x, y] with begins in apool, ends in bpool.

    Chains: x = a_k < ... < a_1 <= y + 1 and y = b_1 < ... < b_k.  The
    leading begin may be the phantom y + 1 only when that value occurs
    in apool.
    """
    x, y = seg.a, seg.b
    inner = [v for v in apool if x < v <= y + 1]
    upper = [v for v in bpool if v > y]
    rows = []
    for k in range(1, min(len(inner), len(upper)) + 2):
        for extra in combinations(inner, k - 1):
            achain = tuple(sorted(extra, reverse=True)) + (x,)
            for bextra in combinations(upper, k - 1):
                bchain = (y,) + tuple(sorted(bextra))
                rows.append(DomRow(tuple(zip(achain, bchain)), seg))
    return rows


def enumerate_J00(m_ord: OrderedMultisegment) -> Iterator[DomTableau]:
    """The finite slice of the J-family with entries in the begin/end sets."""
    m = m_ord.multiset()
    apool = m.begins()
    bpool = m.ends()
    rowsets = [_j_rows(seg, apool, bpool) for seg in m_ord]
    for combo in product(*rowsets):
        yield DomTableau(tuple(combo), "J")


def _j_supply_demand(q: DomTableau):
    """Segment-valued buckets: plain entries vs shifted pairs.

    Leading entries with a_1 = y + 1 supply nothing (their segment is
    degenerate); shifted pairs are genuine segments for j >= 2.
    """
    supply: dict[Segment, int] = {}
    demand: dict[Segment, int] = {}
    for row in q.rows:
        prev_a = None
        for j, (a, b) in enumerate(row.entries, start=1):
            if a <= b:
                seg = Segment(a, b)
                supply[seg] = supply.get(seg, 0) + 1
            if j >= 2:
                seg = Segment(prev_a, b)
                demand[seg] = demand.get(seg, 0) + 1
            prev_a = a
    return supply, demand


def j_connection_exists(q: DomTableau) -> bool:
    supply, demand = _j_supply_demand(q)
    return all(c <= supply.get(seg, 0) for seg, c in demand.items())


def theta_of_J(q: DomTableau) -> Multisegment:
    supply, demand = _j_supply_demand(q)
    acc: dict[Segment, int] = {}
    for seg, c in supply.items():
        surplus = c - demand.get(seg, 0)
        if surplus:
            acc[seg] = surplus
    return Multisegment(acc)


def enumerate_J_dominant(
    m_ord: OrderedMultisegment,
) -> list[tuple[DomTableau, Multisegment]]:
    """Tableaux of the finite J-slice that admit a dominant connection."""
    out = []
    for q in enumerate_J00(m_ord):
        if j_connection_exists(q):
            out.append((q, theta_of_J(q)))
    return out


# -- transfer between the J and Mackey families --------------------------------


def transfer(m: Multisegment, p: DomTableau) -> MackeyTableau:
    """Relabel ends by their index in E(m); drop phantom leading begins."""
    ends = m.ends()
    eidx = {d: i + 1 for i, d in enumerate(ends)}
    rows = []
    for row in p.rows:
        y = row.segment.b
        entries = []
        for a, b in row.entries:
            if b not in eidx:
                raise NotInJ0(f"end entry {b} outside end set {ends}")
            entries.append((a, eidx[b]))
        if row.entries[0][0] == y + 1:
            entries = entries[1:]
        rows.append(MackeyRow(tuple(entries), row.segment))
    return MackeyTableau(tuple(rows), len(ends))


def transfer_inverse(m: Multisegment, q: MackeyTableau) -> DomTableau:
    """Relabel slots back to ends; reinsert the phantom begin where it was dropped."""
    ends = m.ends()
    rows = []
    for row in q.rows:
        y = row.segment.b
        entries = [(a, ends[e - 1]) for a, e in row.entries]
        if y < ends[row.entries[0][1] - 1]:
            entries = [(y + 1, y)] + entries
        rows.append(DomRow(tuple(entries), row.segment))
    return DomTableau(tuple(rows), "J")
