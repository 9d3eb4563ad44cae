"""q-characters of standard modules at rank bound N.

Fundamental characters come from the explicit column-chain sum; standard
characters are their products after the rank collapse (length N+1
segments contribute the factor 1, longer ones the factor 0).  The
independent bitableau route sums over per-segment chain words whose
produced segments all fit the rank, then applies the same collapse; both
routes land in Laurent polynomials over length <= N segment variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .charring import SegLaurentPoly, SegMonomial
from .errors import RankExceeded
from .multiseg import Multisegment, Segment


@dataclass(frozen=True)
class FundamentalSpec:
    """Fundamental module parameters: level, spectral exponent, rank bound.

    Integral spectra only: p and level are parity-linked through the
    segment dictionary [x, y] <-> Y(y-x+1, v^(x+y)), so p + level must
    be odd.
    """

    level: int
    power: int
    rank: int

    def __post_init__(self):
        if self.level < 1:
            raise ValueError(f"level {self.level} must be positive")
        if self.level > self.rank:
            raise RankExceeded(f"level {self.level} exceeds rank {self.rank}")
        if (self.power + self.level) % 2 == 0:
            raise ValueError(
                f"off-lattice spectrum: power {self.power} and level "
                f"{self.level} must have odd sum"
            )

    @classmethod
    def of_segment(cls, seg: Segment, rank: int) -> "FundamentalSpec":
        return cls(seg.length, seg.a + seg.b, rank)

    def segment(self) -> Segment:
        return Segment((self.power - self.level + 1) // 2,
                       (self.power + self.level - 1) // 2)


def _y_var(level: int, power: int, rank: int) -> Segment | None:
    """Segment variable of Y(level, v^power); None for the collapsed levels 0, N+1."""
    if level == 0 or level == rank + 1:
        return None
    return Segment((power - level + 1) // 2, (power + level - 1) // 2)


def fundamental_qchar(spec: FundamentalSpec) -> SegLaurentPoly:
    """Character of a fundamental module, as a sum over column chains.

    Sum over 1 <= c_1 < ... < c_l <= N+1 of
    prod_m Y(c_m, v^(p+l+c_m-2m)) * Y(c_m - 1, v^(p+l+c_m-2m+1))^-1,
    with levels 0 and N+1 collapsed to 1.  Has C(N+1, l) terms.
    """
    l, p, n = spec.level, spec.power, spec.rank
    terms: dict[SegMonomial, int] = {}
    for cs in combinations(range(1, n + 2), l):
        exps: dict[Segment, int] = {}
        for m, c in enumerate(cs, start=1):
            pw = p + l + c - 2 * m
            pos = _y_var(c, pw, n)
            if pos is not None:
                exps[pos] = exps.get(pos, 0) + 1
            neg = _y_var(c - 1, pw + 1, n)
            if neg is not None:
                exps[neg] = exps.get(neg, 0) - 1
        mono = SegMonomial(exps)
        terms[mono] = terms.get(mono, 0) + 1
    return SegLaurentPoly(terms)


def standard_qchar(m: Multisegment, n: int) -> SegLaurentPoly:
    """Product of fundamental characters over the segments of m.

    Segments of length N+1 contribute the factor 1; longer segments
    collapse the whole character to 0.
    """
    if n < 1:
        raise ValueError(f"rank {n} must be positive")
    out = SegLaurentPoly.one()
    for seg in sorted(m, key=lambda s: (s.b, s.a)):
        if seg.length > n + 1:
            return SegLaurentPoly.zero()
        if seg.length == n + 1:
            continue
        factor = fundamental_qchar(FundamentalSpec.of_segment(seg, n))
        for _ in range(m[seg]):
            out = out * factor
    return out


def _capped_words(x: int, y: int, n: int) -> list[tuple[tuple[int, int], ...]]:
    """Chain words (a_j, b_j) over [x, y] whose produced segments fit the rank.

    Chains x = a_k < ... < a_1 <= y+1, y = b_1 < ... < b_k, pruned by
    b_j - a_j <= n; every larger gap dies under the rank restriction, so
    the pruned family is exactly the surviving one.
    """
    words: list[tuple[tuple[int, int], ...]] = []

    def grow(chain: list[tuple[int, int]]) -> None:
        a_last, b_last = chain[-1]
        if a_last == x:
            words.append(tuple(chain))
        for a in range(x, a_last):
            for b in range(b_last + 1, a + n + 1):
                chain.append((a, b))
                grow(chain)
                chain.pop()

    for a1 in range(x, y + 2):
        if y - a1 <= n:
            grow([(a1, y)])
    return words


def _row_qchar(seg: Segment, n: int) -> SegLaurentPoly:
    """Single-segment character via capped chain words."""
    terms: dict[SegMonomial, int] = {}
    for word in _capped_words(seg.a, seg.b, n):
        exps: dict[Segment, int] = {}
        prev_a = None
        for j, (a, b) in enumerate(word, start=1):
            if a <= b and b - a < n:  # length n+1 collapses to 1
                s = Segment(a, b)
                exps[s] = exps.get(s, 0) + 1
            if j >= 2 and b - prev_a < n:
                s = Segment(prev_a, b)
                exps[s] = exps.get(s, 0) - 1
            prev_a = a
        mono = SegMonomial(exps)
        terms[mono] = terms.get(mono, 0) + 1
    return SegLaurentPoly(terms)


def chi_N_via_tableaux(m: Multisegment, n: int) -> SegLaurentPoly:
    """Rank-N character summed over bitableaux instead of multiplied out.

    Per-row chain sums multiply exactly because chain monomials are
    leading-term dominant, so the rank restriction commutes with the
    product.
    """
    if n < 1:
        raise ValueError(f"rank {n} must be positive")
    out = SegLaurentPoly.one()
    for seg in sorted(m, key=lambda s: (s.b, s.a)):
        factor = _row_qchar(seg, n)
        for _ in range(m[seg]):
            out = out * factor
    return out


def dominant_qchar(m: Multisegment, n: int) -> SegLaurentPoly:
    """Dominant part of the rank-N standard character."""
    return standard_qchar(m, n).dominant_part()
