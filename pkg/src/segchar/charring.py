"""Exact sparse Laurent polynomials in segment variables.

Monomials map segments to nonzero integer exponents; polynomials map
monomials to nonzero integer coefficients.  Everything is immutable and
kept in canonical sparse form.  The module also provides the rank-N
projection (length N+1 variables collapse to 1, longer ones to 0) and
the dictionary into Drinfeld variables Y(l, v^p).
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping, Optional

from .checked import guard
from .errors import RankExceeded
from .multiseg import Multisegment, Segment

# Canonical variable order inside a monomial, and the base of the
# lexicographic term order.
def _seg_key(seg: Segment) -> tuple[int, int, int]:
    return (seg.length, seg.b, seg.a)


class SegMonomial:
    """Laurent monomial: finitely many segment variables with nonzero exponents."""

    __slots__ = ("_exps", "_key", "_hash")

    def __init__(self, exps: Optional[Mapping[Segment, int] | Iterable] = None):
        acc: dict[Segment, int] = {}
        if exps is not None:
            items = exps.items() if isinstance(exps, Mapping) else exps
            for seg, e in items:
                if not isinstance(seg, Segment):
                    seg = Segment(*seg)
                if e:
                    acc[seg] = acc.get(seg, 0) + e
        acc = {s: e for s, e in acc.items() if e != 0}
        self._exps = acc
        self._key = frozenset(acc.items())
        self._hash = hash(self._key)

    @classmethod
    def variable(cls, seg: Segment, exp: int = 1) -> "SegMonomial":
        return cls({seg: exp})

    @classmethod
    def of_multisegment(cls, m: Multisegment) -> "SegMonomial":
        return cls(dict(m.items()))

    def items(self):
        return self._exps.items()

    def __getitem__(self, seg: Segment) -> int:
        return self._exps.get(seg, 0)

    def __len__(self) -> int:
        return len(self._exps)

    def __bool__(self) -> bool:
        return bool(self._exps)

    def __eq__(self, other) -> bool:
        return isinstance(other, SegMonomial) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "SegMonomial") -> "SegMonomial":
        out = dict(self._exps)
        for seg, e in other._exps.items():
            out[seg] = out.get(seg, 0) + e
        return SegMonomial(out)

    def is_dominant(self) -> bool:
        return all(e > 0 for e in self._exps.values())

    @property
    def degree(self) -> int:
        """Maximal segment length occurring; 0 for the empty monomial."""
        return max((s.length for s in self._exps), default=0)

    def to_multisegment(self) -> Multisegment:
        """Read a dominant monomial as a multisegment."""
        if not self.is_dominant():
            raise ValueError(f"monomial {self} is not dominant")
        return Multisegment(dict(self._exps))

    def sort_key(self):
        return tuple(sorted((_seg_key(s), e) for s, e in self._exps.items()))

    def __str__(self) -> str:
        if not self._exps:
            return "1"
        parts = []
        for seg in sorted(self._exps, key=_seg_key):
            e = self._exps[seg]
            parts.append(f"e{seg}" if e == 1 else f"e{seg}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"SegMonomial({{{', '.join(f'{s!r}: {e}' for s, e in sorted(self._exps.items()))}}})"


class SegLaurentPoly:
    """Integer Laurent polynomial in segment variables, canonical sparse form."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[SegMonomial, int] | Iterable] = None):
        acc: dict[SegMonomial, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for mono, c in items:
                if c:
                    acc[mono] = acc.get(mono, 0) + c
        self._terms = {m: guard(c) for m, c in acc.items() if c != 0}

    @classmethod
    def zero(cls) -> "SegLaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "SegLaurentPoly":
        return cls({SegMonomial(): 1})

    @classmethod
    def constant(cls, c: int) -> "SegLaurentPoly":
        return cls({SegMonomial(): c})

    @classmethod
    def monomial(cls, mono: SegMonomial, coeff: int = 1) -> "SegLaurentPoly":
        return cls({mono: coeff})

    def items(self):
        return self._terms.items()

    def coeff(self, mono: SegMonomial) -> int:
        return self._terms.get(mono, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, SegLaurentPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "SegLaurentPoly") -> "SegLaurentPoly":
        out = dict(self._terms)
        for mono, c in other._terms.items():
            out[mono] = out.get(mono, 0) + c
        return SegLaurentPoly(out)

    def __neg__(self) -> "SegLaurentPoly":
        return SegLaurentPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "SegLaurentPoly") -> "SegLaurentPoly":
        return self + (-other)

    def __mul__(self, other: "SegLaurentPoly") -> "SegLaurentPoly":
        out: dict[SegMonomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mm = m1 * m2
                out[mm] = out.get(mm, 0) + c1 * c2
        return SegLaurentPoly(out)

    def __pow__(self, k: int) -> "SegLaurentPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = SegLaurentPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- truncations ---------------------------------------------------------

    def dominant_part(self) -> "SegLaurentPoly":
        """Keep the terms whose monomial has all exponents >= 0."""
        return SegLaurentPoly(
            {m: c for m, c in self._terms.items() if m.is_dominant()}
        )

    def project_pN(self, n: int) -> "SegLaurentPoly":
        """Collapse by rank: length > n+1 kills the term, length n+1 maps to 1."""
        out: dict[SegMonomial, int] = {}
        for mono, c in self._terms.items():
            dead = False
            kept: dict[Segment, int] = {}
            for seg, e in mono.items():
                if seg.length > n + 1:
                    dead = True
                    break
                if seg.length == n + 1:
                    continue
                kept[seg] = e
            if dead:
                continue
            mm = SegMonomial(kept)
            out[mm] = out.get(mm, 0) + c
        return SegLaurentPoly(out)

    def to_drinfeld(self, n: int) -> "DrinfeldPoly":
        """Rewrite in Drinfeld variables: [x,y] -> Y(y-x+1, v^(x+y))."""
        out: dict[DrinfeldMonomial, int] = {}
        for mono, c in self._terms.items():
            vars: dict[tuple[int, int], int] = {}
            for seg, e in mono.items():
                if seg.length > n:
                    raise RankExceeded(
                        f"variable {seg} has length {seg.length} > rank {n}"
                    )
                vars[(seg.length, seg.a + seg.b)] = e
            dm = DrinfeldMonomial(vars, n)
            out[dm] = out.get(dm, 0) + c
        return DrinfeldPoly(out, n)

    # -- rendering -----------------------------------------------------------

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            parts.append(str(c) if not mono else f"{c} * {mono}")
        return "  +  ".join(parts)

    def __repr__(self) -> str:
        return f"<SegLaurentPoly {self}>"

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {
                    "coeff": c,
                    "monomial": [
                        {"a": s.a, "b": s.b, "exp": e}
                        for s, e in sorted(mono.items(), key=lambda kv: _seg_key(kv[0]))
                    ],
                }
                for mono, c in self.sorted_terms()
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SegLaurentPoly":
        terms: dict[SegMonomial, int] = {}
        for t in obj["terms"]:
            mono = SegMonomial(
                {Segment(v["a"], v["b"]): v["exp"] for v in t["monomial"]}
            )
            terms[mono] = terms.get(mono, 0) + t["coeff"]
        return cls(terms)


class DrinfeldMonomial:
    """Monomial in variables Y(l, v^p), with 1 <= l <= N."""

    __slots__ = ("_exps", "rank", "_hash")

    def __init__(self, exps: Mapping[tuple[int, int], int], rank: int):
        acc = {}
        for (l, p), e in exps.items():
            if not 1 <= l <= rank:
                raise RankExceeded(f"level {l} outside 1..{rank}")
            if e:
                acc[(l, p)] = e
        self._exps = acc
        self.rank = rank
        self._hash = hash(frozenset(acc.items()))

    def items(self):
        return self._exps.items()

    def __bool__(self) -> bool:
        return bool(self._exps)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DrinfeldMonomial)
            and self._exps == other._exps
        )

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self):
        return tuple(sorted(((l, p), e) for (l, p), e in self._exps.items()))

    def __str__(self) -> str:
        if not self._exps:
            return "1"
        parts = []
        for (l, p) in sorted(self._exps):
            e = self._exps[(l, p)]
            parts.append(f"Y({l},{p})" if e == 1 else f"Y({l},{p})^{e}")
        return "*".join(parts)


class DrinfeldPoly:
    """Laurent polynomial in Drinfeld variables; rendering companion."""

    __slots__ = ("_terms", "rank")

    def __init__(self, terms: Mapping[DrinfeldMonomial, int], rank: int):
        self._terms = {m: guard(c) for m, c in terms.items() if c != 0}
        self.rank = rank

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, DrinfeldPoly) and self._terms == other._terms

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            parts.append(str(c) if not mono else f"{c} * {mono}")
        return "  +  ".join(parts)

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {
                    "coeff": c,
                    "monomial": [
                        {"l": l, "p": p, "exp": e}
                        for (l, p), e in sorted(mono.items())
                    ],
                }
                for mono, c in self.sorted_terms()
            ]
        }


# Thin functional aliases matching the operation names used elsewhere.

def poly_mul(f: SegLaurentPoly, g: SegLaurentPoly) -> SegLaurentPoly:
    return f * g


def dominant_part(f: SegLaurentPoly) -> SegLaurentPoly:
    return f.dominant_part()


def project_pN(f: SegLaurentPoly, n: int) -> SegLaurentPoly:
    return f.project_pN(n)


def to_drinfeld(f: SegLaurentPoly, n: int) -> DrinfeldPoly:
    return f.to_drinfeld(n)
