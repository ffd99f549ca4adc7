"""Sparse integer linear combinations of Schur functions.

A ``SchurSum`` maps partitions to nonzero integer coefficients. Besides
the ring operations it carries the two operators the h3[hn] recurrence is
built from: ``odot``, the bilinear product that adds indexing partitions
componentwise (s_mu odot s_lam = s_{mu+lam}), and ``project``, which keeps
only the terms indexed by partitions with at most k parts. Coefficients
are ordinary Python integers, so all arithmetic is exact.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from functools import cache

from .partition import Partition


@cache
def ssyt_count(lam: Partition, k: int) -> int:
    """Number of semistandard tableaux of shape ``lam`` with entries <= k.

    Equals the Schur polynomial s_lam evaluated at k ones. Computed by the
    Weyl product formula, prod_{i<j} (lam_i - lam_j + j - i) / (j - i)
    over 1 <= i < j <= k, which is exact in integer arithmetic.
    """
    if len(lam) > k:
        return 0
    num = 1
    den = 1
    for i in range(k):
        for j in range(i + 1, k):
            num *= lam.part(i) - lam.part(j) + j - i
            den *= j - i
    quotient, remainder = divmod(num, den)
    if remainder:
        raise AssertionError(f"Weyl product for {lam!r}, k={k} is not integral")
    return quotient


class SchurSum:
    """Integer linear combination of Schur functions, stored sparsely.

    The zero sum has no terms; the constant 1 is the empty partition with
    coefficient 1. Instances are immutable: every operation returns a new
    sum, so values can be shared freely (including across threads).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        data: dict[Partition, int] = {}
        for lam, coeff in items:
            if not isinstance(lam, Partition):
                lam = Partition(lam)
            merged = data.get(lam, 0) + coeff
            if merged:
                data[lam] = merged
            else:
                data.pop(lam, None)
        self._terms = data

    @classmethod
    def _wrap(cls, terms: dict[Partition, int]) -> "SchurSum":
        # Internal constructor; terms must be canonical and zero-free.
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls) -> "SchurSum":
        return cls._wrap({})

    @classmethod
    def one(cls) -> "SchurSum":
        return cls._wrap({Partition(): 1})

    def coeff(self, lam) -> int:
        """Coefficient of s_lam, zero if absent."""
        if not isinstance(lam, Partition):
            lam = Partition(lam)
        return self._terms.get(lam, 0)

    def terms(self) -> list[tuple[Partition, int]]:
        """Terms as (partition, coefficient) pairs, descending lex order."""
        return sorted(self._terms.items(), key=lambda item: item[0], reverse=True)

    def support(self) -> set[Partition]:
        return set(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurSum):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "SchurSum") -> "SchurSum":
        if not isinstance(other, SchurSum):
            return NotImplemented
        out = dict(self._terms)
        for lam, c in other._terms.items():
            merged = out.get(lam, 0) + c
            if merged:
                out[lam] = merged
            else:
                del out[lam]
        return SchurSum._wrap(out)

    def __neg__(self) -> "SchurSum":
        return SchurSum._wrap({lam: -c for lam, c in self._terms.items()})

    def __sub__(self, other: "SchurSum") -> "SchurSum":
        if not isinstance(other, SchurSum):
            return NotImplemented
        out = dict(self._terms)
        for lam, c in other._terms.items():
            merged = out.get(lam, 0) - c
            if merged:
                out[lam] = merged
            else:
                del out[lam]
        return SchurSum._wrap(out)

    def __mul__(self, scalar: int) -> "SchurSum":
        if not isinstance(scalar, int):
            return NotImplemented
        if scalar == 0:
            return SchurSum.zero()
        return SchurSum._wrap({lam: scalar * c for lam, c in self._terms.items()})

    __rmul__ = __mul__

    def odot(self, other: "SchurSum") -> "SchurSum":
        """Bilinear product adding the indexing partitions componentwise."""
        out: dict[Partition, int] = {}
        for lam, c in self._terms.items():
            for mu, d in other._terms.items():
                nu = lam + mu
                merged = out.get(nu, 0) + c * d
                if merged:
                    out[nu] = merged
                else:
                    del out[nu]
        return SchurSum._wrap(out)

    def project(self, k: int) -> "SchurSum":
        """Keep only the terms indexed by partitions with at most k parts."""
        return SchurSum._wrap({lam: c for lam, c in self._terms.items() if len(lam) <= k})

    def is_schur_positive(self) -> bool:
        """True when every stored coefficient is positive (zero sum included)."""
        return all(c > 0 for c in self._terms.values())

    def eval_at_ones(self, k: int) -> int:
        """Exact value after substituting 1 for each of k variables."""
        if k < 1:
            raise ValueError("k must be positive")
        return sum(c * ssyt_count(lam, k) for lam, c in self._terms.items())

    def json_terms(self) -> list[dict]:
        """Terms in the wire format: [{"lambda": [...], "coeff": n}, ...]."""
        return [{"lambda": list(lam), "coeff": c} for lam, c in self.terms()]

    @classmethod
    def from_json_terms(cls, items: Iterable[Mapping]) -> "SchurSum":
        return cls((tuple(item["lambda"]), item["coeff"]) for item in items)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        rendered = []
        for lam, c in self.terms():
            magnitude = abs(c)
            if lam:
                body = "s[%s]" % ",".join(map(str, lam))
                text = body if magnitude == 1 else f"{magnitude}*{body}"
            else:
                text = str(magnitude)
            if not rendered:
                rendered.append(text if c > 0 else "-" + text)
            else:
                rendered.append(("+ " if c > 0 else "- ") + text)
        return " ".join(rendered)

    def __repr__(self) -> str:
        return f"<SchurSum {self}>"


def s(*parts: int) -> SchurSum:
    """The single Schur function with the given index, coefficient 1."""
    return SchurSum._wrap({Partition(parts): 1})
