"""Segments, multisegments and their support combinatorics.

A segment is an integer interval [a, b] with a <= b.  A multisegment is a
finite multiset of segments; it is the index object for everything else in
this package (standard modules, q-characters, tableau families).  This
module also owns the text and JSON wire formats for multisegments.
"""

from __future__ import annotations

import json
import re
from math import factorial
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional

from .checked import guard
from .errors import InvalidSegment, ParseError, ZeroMultisegment


class _SegmentBase(NamedTuple):
    a: int
    b: int


class Segment(_SegmentBase):
    """Integer interval [a, b], a <= b."""

    __slots__ = ()

    def __new__(cls, a: int, b: int) -> "Segment":
        if a > b:
            raise InvalidSegment(f"segment [{a},{b}] has a > b")
        return super().__new__(cls, a, b)

    @property
    def length(self) -> int:
        return self.b - self.a + 1

    def __str__(self) -> str:
        return f"[{self.a},{self.b}]"

    def __repr__(self) -> str:
        return f"Segment({self.a}, {self.b})"


# Letters of words are plain integers i (standing for the formal symbol
# alpha_i); a word is a tuple of letters.
Word = tuple[int, ...]


class SupportVector:
    """Finitely supported integer vector indexed by letters alpha_i.

    Canonical sparse form: no zero entries are stored.
    """

    __slots__ = ("_coeff",)

    def __init__(self, coeff: Optional[Mapping[int, int]] = None):
        self._coeff = {i: c for i, c in (coeff or {}).items() if c != 0}

    def __getitem__(self, i: int) -> int:
        return self._coeff.get(i, 0)

    def items(self):
        return self._coeff.items()

    def indices(self):
        return self._coeff.keys()

    @property
    def height(self) -> int:
        return sum(self._coeff.values())

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._coeff.values())

    def __add__(self, other: "SupportVector") -> "SupportVector":
        out = dict(self._coeff)
        for i, c in other._coeff.items():
            out[i] = out.get(i, 0) + c
        return SupportVector(out)

    def __sub__(self, other: "SupportVector") -> "SupportVector":
        out = dict(self._coeff)
        for i, c in other._coeff.items():
            out[i] = out.get(i, 0) - c
        return SupportVector(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, SupportVector) and self._coeff == other._coeff

    def __hash__(self) -> int:
        return hash(frozenset(self._coeff.items()))

    def __bool__(self) -> bool:
        return bool(self._coeff)

    def __str__(self) -> str:
        if not self._coeff:
            return "0"
        parts = []
        for i in sorted(self._coeff):
            c = self._coeff[i]
            parts.append(f"a{i}" if c == 1 else f"{c}*a{i}")
        return "+".join(parts)

    def __repr__(self) -> str:
        return f"SupportVector({dict(sorted(self._coeff.items()))})"


_TERM_RE = re.compile(r"^(?:(\d+)\*)?\[(-?\d+),(-?\d+)\]$")


class Multisegment:
    """Finite multiset of segments with strictly positive multiplicities."""

    __slots__ = ("_mult", "_hash")

    def __init__(self, mult=None):
        acc: dict[Segment, int] = {}
        if mult is not None:
            items = mult.items() if isinstance(mult, Mapping) else mult
            for seg, k in items:
                if not isinstance(seg, Segment):
                    seg = Segment(*seg)
                if k < 0:
                    raise ValueError(f"negative multiplicity {k} for {seg}")
                if k:
                    acc[seg] = acc.get(seg, 0) + k
        self._mult = acc
        self._hash = hash(frozenset(acc.items()))

    # -- basic structure ---------------------------------------------------

    @property
    def mult(self) -> Mapping[Segment, int]:
        return self._mult

    def __contains__(self, seg: Segment) -> bool:
        return seg in self._mult

    def __getitem__(self, seg: Segment) -> int:
        return self._mult.get(seg, 0)

    def __iter__(self) -> Iterator[Segment]:
        return iter(self._mult)

    def items(self):
        return self._mult.items()

    def __bool__(self) -> bool:
        return bool(self._mult)

    def __len__(self) -> int:
        """Number of segments counted with multiplicity."""
        return sum(self._mult.values())

    def __eq__(self, other) -> bool:
        return isinstance(other, Multisegment) and self._mult == other._mult

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: "Multisegment") -> "Multisegment":
        out = dict(self._mult)
        for seg, k in other.items():
            out[seg] = out.get(seg, 0) + k
        return Multisegment(out)

    @property
    def height(self) -> int:
        return sum(k * seg.length for seg, k in self._mult.items())

    # -- support statistics ------------------------------------------------

    def support(self) -> SupportVector:
        acc: dict[int, int] = {}
        for seg, k in self._mult.items():
            for i in range(seg.a, seg.b + 1):
                acc[i] = acc.get(i, 0) + k
        return SupportVector(acc)

    def delta(self) -> SupportVector:
        acc: dict[int, int] = {}
        for seg, k in self._mult.items():
            acc[seg.a] = acc.get(seg.a, 0) + k
        return SupportVector(acc)

    def eps(self) -> SupportVector:
        acc: dict[int, int] = {}
        for seg, k in self._mult.items():
            acc[seg.b] = acc.get(seg.b, 0) + k
        return SupportVector(acc)

    def delta_eps(self) -> tuple[SupportVector, SupportVector]:
        return self.delta(), self.eps()

    def begins(self) -> list[int]:
        """Sorted set D of begin points."""
        return sorted({seg.a for seg in self._mult})

    def ends(self) -> list[int]:
        """Sorted set E of end points."""
        return sorted({seg.b for seg in self._mult})

    def end_block(self, d: int) -> "Multisegment":
        """Sub-multisegment of segments ending at d."""
        return Multisegment({seg: k for seg, k in self._mult.items() if seg.b == d})

    # -- spherical structure -----------------------------------------------

    def spherical_closure(self) -> "Multisegment":
        """The unique spherical multisegment with the same support.

        Greedy chain peeling: repeatedly extract the longest segment
        [a*, b*] with b* the current maximum of the support and a*
        minimal with the support positive on all of [a*, b*].
        """
        supp = {i: c for i, c in self.support().items()}
        out: dict[Segment, int] = {}
        while supp:
            b = max(supp)
            a = b
            while supp.get(a - 1, 0) > 0:
                a -= 1
            seg = Segment(a, b)
            out[seg] = out.get(seg, 0) + 1
            for i in range(a, b + 1):
                supp[i] -= 1
                if supp[i] == 0:
                    del supp[i]
        return Multisegment(out)

    def is_spherical(self) -> bool:
        """No segment of the multiset precedes another."""
        segs = list(self._mult)
        return not any(
            s.a < t.a <= s.b + 1 < t.b + 1 for s in segs for t in segs
        )

    def right_aligned_test(self) -> Optional[tuple[int, "Multisegment"]]:
        """Detect whether the spherical closure is right-aligned.

        Succeeds exactly when some end b makes delta - eps'_b
        non-negative, in which case the aligned multisegment is
        recovered from that difference without building the closure.
        """
        if not self._mult:
            raise ZeroMultisegment("right-aligned test needs a nonzero multisegment")
        d = self.delta()
        e = self.eps()
        for b in self.ends():
            shifted = SupportVector({i + 1: c for i, c in e.items() if i != b})
            diff = d - shifted
            if diff.is_nonnegative():
                aligned = Multisegment({Segment(a, b): c for a, c in diff.items()})
                return b, aligned
        return None

    # -- indicator words ----------------------------------------------------

    def indicator_word(self) -> tuple[Word, int]:
        """Concatenated descending block words and their normalization.

        The word runs over the end blocks in ascending end order, each
        contributing the descending word of its support.  The returned
        integer is the product of factorials of maximal constant run
        lengths; it divides every multiplicity this word detects.
        """
        letters: list[int] = []
        for d in self.ends():
            blk = self.end_block(d).support()
            for i in sorted(blk.indices(), reverse=True):
                letters.extend([i] * blk[i])
        w = tuple(letters)
        r = 1
        i = 0
        while i < len(w):
            j = i
            while j < len(w) and w[j] == w[i]:
                j += 1
            r = guard(r * factorial(j - i))
            i = j
        return w, r

    # -- orderings -----------------------------------------------------------

    def admissible_ordering(self) -> "OrderedMultisegment":
        """Canonical admissible ordering: sort by (end, begin) ascending."""
        segs: list[Segment] = []
        for seg in sorted(self._mult, key=lambda s: (s.b, s.a)):
            segs.extend([seg] * self._mult[seg])
        return OrderedMultisegment(segs)

    # -- wire formats --------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "Multisegment":
        """Parse the grammar ``term ("+" term)*`` with term ``[k*][a,b]``."""
        compact = re.sub(r"\s+", "", text)
        if compact in ("", "0"):
            return cls()
        acc: dict[Segment, int] = {}
        for term in compact.split("+"):
            m = _TERM_RE.match(term)
            if m is None:
                raise ParseError(f"bad multisegment term {term!r}")
            k = int(m.group(1)) if m.group(1) else 1
            if k < 1:
                raise ParseError(f"multiplicity must be >= 1 in {term!r}")
            a, b = int(m.group(2)), int(m.group(3))
            if a > b:
                raise ParseError(f"segment [{a},{b}] has a > b")
            seg = Segment(a, b)
            acc[seg] = acc.get(seg, 0) + k
        return cls(acc)

    def __str__(self) -> str:
        if not self._mult:
            return "0"
        parts = []
        for seg in sorted(self._mult, key=lambda s: (s.b, s.a)):
            k = self._mult[seg]
            parts.append(str(seg) if k == 1 else f"{k}*{seg}")
        return "+".join(parts)

    def __repr__(self) -> str:
        return f"Multisegment.parse({str(self)!r})"

    def to_json_obj(self) -> dict:
        return {
            "segments": [
                {"a": seg.a, "b": seg.b, "mult": self._mult[seg]}
                for seg in sorted(self._mult, key=lambda s: (s.b, s.a))
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Multisegment":
        try:
            return cls({Segment(e["a"], e["b"]): e["mult"] for e in obj["segments"]})
        except (KeyError, TypeError, InvalidSegment) as exc:
            raise ParseError(f"bad multisegment JSON: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "Multisegment":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from exc
        return cls.from_json_obj(obj)


class OrderedMultisegment:
    """A sequence of segments, i.e. one chosen ordering of a multisegment."""

    __slots__ = ("segs",)

    def __init__(self, segs: Iterable[Segment]):
        self.segs = tuple(
            s if isinstance(s, Segment) else Segment(*s) for s in segs
        )

    def multiset(self) -> Multisegment:
        return Multisegment((s, 1) for s in self.segs)

    def is_admissible(self) -> bool:
        """Grouped by end point, with group ends strictly increasing."""
        seen_ends: list[int] = []
        for s in self.segs:
            if seen_ends and s.b == seen_ends[-1]:
                continue
            if seen_ends and s.b <= seen_ends[-1]:
                return False
            seen_ends.append(s.b)
        return True

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segs)

    def __len__(self) -> int:
        return len(self.segs)

    def __eq__(self, other) -> bool:
        return isinstance(other, OrderedMultisegment) and self.segs == other.segs

    def __hash__(self) -> int:
        return hash(self.segs)

    def __str__(self) -> str:
        return "".join(str(s) for s in self.segs) if self.segs else "()"

    def __repr__(self) -> str:
        return f"OrderedMultisegment({list(self.segs)!r})"


def descending_word(beta: SupportVector) -> Word:
    """The unique descending word with content beta."""
    letters: list[int] = []
    for i in sorted(beta.indices(), reverse=True):
        letters.extend([i] * beta[i])
    return tuple(letters)
