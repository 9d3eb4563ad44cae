"""Independent oracles and the exhaustive sweep driver.

The shuffle character is the designated brute force: it expands a
standard module's full weight character as the shuffle product of its
segment words, and reads reciprocal multiplicities off indicator-word
coefficients.  The checks compare it, the three tableau routes, and the
product route for q-characters against each other over exhaustive
families of multisegments.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator, Optional

from . import domtab, mackey
from .charring import SegLaurentPoly, SegMonomial
from .checked import guard
from .errors import CapExceeded, NonDivisible
from .multiseg import Multisegment, Segment, SupportVector, Word
from .qchar import dominant_qchar

ROUTE_NAMES = ("a-tableau", "mackey", "j-dominant", "product", "shuffle")


@dataclass(frozen=True)
class SweepConfig:
    max_height: int = 5
    window: tuple[int, int] = (-2, 2)
    ranks: tuple[int, ...] = (1, 2, 3)
    routes: tuple[str, ...] = ROUTE_NAMES
    start_index: int = 0
    shuffle_cap: int = 8

    def __post_init__(self):
        # a reversed window is allowed and denotes the empty family
        if self.max_height < 1:
            raise ValueError("max_height must be >= 1")
        for r in self.routes:
            if r not in ROUTE_NAMES:
                raise ValueError(f"unknown route {r!r}; choose from {ROUTE_NAMES}")


@dataclass
class Discrepancy:
    m: Multisegment
    route_a: str
    route_b: str
    detail: str

    def __str__(self) -> str:
        return f"{self.m}: {self.route_a} vs {self.route_b}: {self.detail}"


@dataclass
class SweepReport:
    multisegments: int = 0
    comparisons: int = 0
    discrepancies: list[Discrepancy] = field(default_factory=list)
    elapsed: float = 0.0
    route_seconds: dict[str, float] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.discrepancies


# -- shuffle oracle ------------------------------------------------------------


def _shuffle_in(acc: dict[Word, int], word: Word) -> dict[Word, int]:
    """Shuffle one more word into a weighted set of words."""
    out: dict[Word, int] = {}
    n2 = len(word)
    for w1, c in acc.items():
        n1 = len(w1)
        total = n1 + n2
        for pos in combinations(range(total), n1):
            merged = [0] * total
            it1 = iter(w1)
            posset = set(pos)
            i2 = 0
            for t in range(total):
                if t in posset:
                    merged[t] = next(it1)
                else:
                    merged[t] = word[i2]
                    i2 += 1
            key = tuple(merged)
            out[key] = out.get(key, 0) + c
    return out


def shuffle_character(m: Multisegment, cap: int = 8) -> dict[Word, int]:
    """Full weight character of the standard module of m, word by word.

    Shuffle product of the descending letter words of the segments,
    counted with interleaving multiplicity.
    """
    if m.height > cap:
        raise CapExceeded(f"height {m.height} exceeds shuffle cap {cap}")
    acc: dict[Word, int] = {(): 1}
    for seg in sorted(m, key=lambda s: (s.b, s.a)):
        word = tuple(range(seg.b, seg.a - 1, -1))
        for _ in range(m[seg]):
            acc = _shuffle_in(acc, word)
    return {w: guard(c) for w, c in acc.items()}


def a_via_shuffle(m: Multisegment, n: Multisegment, cap: int = 8) -> int:
    """Reciprocal multiplicity of n in the standard module of m, by brute force."""
    w, r = n.indicator_word()
    c = shuffle_character(m, cap).get(w, 0)
    if c % r != 0:
        raise NonDivisible(
            f"coefficient {c} of {n} in character of {m} not divisible by {r}"
        )
    return c // r


def multisegments_with_support(beta: SupportVector) -> Iterator[Multisegment]:
    """All multisegments with a given support vector.

    These are the complete candidate set for nonzero reciprocal
    multiplicities of a source with that support.
    """
    seen: set[Multisegment] = set()

    def peel(supp: dict[int, int]) -> Iterator[dict[Segment, int]]:
        if not supp:
            yield {}
            return
        a0 = min(supp)
        c = a0
        while True:
            rest = dict(supp)
            for i in range(a0, c + 1):
                rest[i] -= 1
                if rest[i] == 0:
                    del rest[i]
            for tail in peel(rest):
                out = dict(tail)
                seg = Segment(a0, c)
                out[seg] = out.get(seg, 0) + 1
                yield out
            if supp.get(c + 1, 0) > 0:
                c += 1
            else:
                break

    for mult in peel({i: c for i, c in beta.items()}):
        m = Multisegment(mult)
        if m not in seen:
            seen.add(m)
            yield m


# -- tableau routes to the reciprocal row --------------------------------------


def a_row_via_tableaux(m: Multisegment) -> dict[Multisegment, int]:
    return dict(domtab.a_matrix_row(m).entries)


def a_row_via_mackey(m: Multisegment, ordering=None) -> dict[Multisegment, int]:
    if ordering is None:
        ordering = m.admissible_ordering()
    ends = m.ends()
    out: dict[Multisegment, int] = {}
    for _, target in mackey.connected_tableaux(ordering, ends):
        out[target] = guard(out.get(target, 0) + 1)
    return out


def a_row_via_jdominant(m: Multisegment, ordering=None) -> dict[Multisegment, int]:
    if ordering is None:
        ordering = m.admissible_ordering()
    out: dict[Multisegment, int] = {}
    for _, target in domtab.enumerate_J_dominant(ordering):
        out[target] = guard(out.get(target, 0) + 1)
    return out


def reciprocal_character(m: Multisegment) -> SegLaurentPoly:
    """Reciprocal character of the standard module of m, as a polynomial."""
    return SegLaurentPoly(
        {SegMonomial.of_multisegment(n): c for n, c in a_row_via_tableaux(m).items()}
    )


# -- theorem-level checks --------------------------------------------------------


def check_theorem_A(m: Multisegment, n: int) -> Optional[Discrepancy]:
    """Reciprocal character pushed through the rank collapse vs dominant character."""
    lhs = reciprocal_character(m).project_pN(n)
    rhs = dominant_qchar(m, n)
    if lhs == rhs:
        return None
    return Discrepancy(
        m,
        "a-tableau",
        "product",
        f"rank {n}: projected reciprocal {lhs} != dominant {rhs}",
    )


def check_bijection(m: Multisegment) -> Optional[Discrepancy]:
    """Transfer must match the connected J-family onto the connected Mackey family."""
    ordering = m.admissible_ordering()
    ends = m.ends()
    jfam = domtab.enumerate_J_dominant(ordering)
    kfam = {q: t for q, t in mackey.connected_tableaux(ordering, ends)}
    if len(jfam) != len(kfam):
        return Discrepancy(
            m, "j-dominant", "mackey", f"family sizes {len(jfam)} != {len(kfam)}"
        )
    seen = set()
    for p, target in jfam:
        q = domtab.transfer(m, p)
        if q in seen:
            return Discrepancy(m, "j-dominant", "mackey", f"transfer not injective at {p}")
        seen.add(q)
        if q not in kfam:
            return Discrepancy(
                m, "j-dominant", "mackey", f"transfer image {q} not connected"
            )
        if kfam[q] != target:
            return Discrepancy(
                m,
                "j-dominant",
                "mackey",
                f"theta mismatch at {p}: {target} vs {kfam[q]}",
            )
    return None


# -- sweep -----------------------------------------------------------------------


def enumerate_multisegments(
    max_height: int, window: tuple[int, int]
) -> Iterator[Multisegment]:
    """Nonzero multisegments with endpoints in the window, height at most the cap.

    Ordered by height, then lexicographically in the canonical segment
    order (end, begin); deterministic and resumable by index.
    """
    lo, hi = window
    alphabet = [
        Segment(a, b)
        for b in range(lo, hi + 1)
        for a in range(lo, b + 1)
        if b - a + 1 <= max_height
    ]
    alphabet.sort(key=lambda s: (s.b, s.a))

    def grow(idx: int, budget: int, acc: list) -> Iterator[Multisegment]:
        if idx == len(alphabet):
            if acc:
                yield Multisegment(acc)
            return
        seg = alphabet[idx]
        top = budget // seg.length
        for k in range(top + 1):
            acc.append((seg, k))
            yield from grow(idx + 1, budget - k * seg.length, acc)
            acc.pop()

    # each multiset arises from exactly one multiplicity vector, so no dedup
    for height in range(1, max_height + 1):
        for m in grow(0, height, []):
            if m.height == height:
                yield m


def _compare_rows(
    m: Multisegment,
    config: SweepConfig,
    report: SweepReport,
    sink: Optional[Callable[[dict], None]],
) -> None:
    rows: dict[str, dict[Multisegment, int]] = {}
    for route in config.routes:
        t0 = time.perf_counter()
        if route == "a-tableau":
            rows[route] = a_row_via_tableaux(m)
        elif route == "mackey":
            rows[route] = a_row_via_mackey(m)
        elif route == "j-dominant":
            rows[route] = a_row_via_jdominant(m)
        elif route == "shuffle" and m.height <= config.shuffle_cap:
            row: dict[Multisegment, int] = {}
            for n in multisegments_with_support(m.support()):
                c = a_via_shuffle(m, n, config.shuffle_cap)
                if c:
                    row[n] = c
            rows[route] = row
        report.route_seconds[route] = report.route_seconds.get(route, 0.0) + (
            time.perf_counter() - t0
        )
    baseline = next((r for r in config.routes if r in rows), None)
    if baseline is None:
        return
    for route in config.routes:
        if route == baseline or route not in rows:
            continue
        equal = rows[route] == rows[baseline]
        report.comparisons += 1
        if not equal:
            diff = {
                str(n): (rows[baseline].get(n, 0), rows[route].get(n, 0))
                for n in set(rows[baseline]) | set(rows[route])
                if rows[baseline].get(n, 0) != rows[route].get(n, 0)
            }
            report.discrepancies.append(
                Discrepancy(m, baseline, route, f"row mismatch {diff}")
            )
        if sink is not None:
            sink(
                {
                    "m": str(m),
                    "n": None,
                    "route_a": baseline,
                    "route_b": route,
                    "equal": equal,
                }
            )


def sweep(
    config: SweepConfig, sink: Optional[Callable[[dict], None]] = None
) -> SweepReport:
    """Run the selected route comparisons over the configured family."""
    report = SweepReport()
    t_start = time.perf_counter()
    for index, m in enumerate(enumerate_multisegments(config.max_height, config.window)):
        if index < config.start_index:
            continue
        report.multisegments += 1
        _compare_rows(m, config, report, sink)
        if "product" in config.routes:
            for n in config.ranks:
                t0 = time.perf_counter()
                disc = check_theorem_A(m, n)
                report.route_seconds["product"] = report.route_seconds.get(
                    "product", 0.0
                ) + (time.perf_counter() - t0)
                report.comparisons += 1
                if disc is not None:
                    report.discrepancies.append(disc)
                if sink is not None:
                    sink(
                        {
                            "m": str(m),
                            "n": n,
                            "route_a": "a-tableau",
                            "route_b": "product",
                            "equal": disc is None,
                        }
                    )
        if {"mackey", "j-dominant"} <= set(config.routes):
            disc = check_bijection(m)
            report.comparisons += 1
            if disc is not None:
                report.discrepancies.append(disc)
            if sink is not None:
                sink(
                    {
                        "m": str(m),
                        "n": None,
                        "route_a": "j-dominant",
                        "route_b": "mackey",
                        "equal": disc is None,
                    }
                )
    report.elapsed = time.perf_counter() - t_start
    return report
