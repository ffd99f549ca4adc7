"""Brute-force plethysm h_m[h_n] from first principles.

Expands h_m[h_n] as an honest polynomial in k variables: every multiset
of m monomials of degree n contributes the product monomial once. The
result is converted to the Schur basis by peeling leading terms, which is
valid because the Schur-to-monomial transition is unitriangular: the
lexicographically greatest exponent vector of s_lam in k >= len(lam)
variables is lam itself (padded with zeros), with coefficient 1.

Everything here is deliberately independent of the closed formula and the
recurrence modules, so agreement between the three is meaningful.
"""

from __future__ import annotations

from functools import cache
from math import comb

from .partition import Partition
from .schur import SchurSum

DEFAULT_BUDGET = 50_000_000

_PEEL_CAP = 1_000_000


class BudgetExceededError(RuntimeError):
    """A brute-force expansion would enumerate too many multisets."""

    def __init__(self, required: int, budget: int, what: str) -> None:
        super().__init__(f"{what} needs {required} multisets, budget is {budget}")
        self.required = required
        self.budget = budget


class MonomialPoly:
    """Sparse polynomial in k variables with exact integer coefficients.

    Terms map dense exponent tuples of length k to nonzero coefficients.
    Treated as immutable by every function in this module.
    """

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: dict[tuple[int, ...], int]) -> None:
        if k < 1:
            raise ValueError("k must be positive")
        self.k = k
        self.terms = {e: c for e, c in terms.items() if c}
        for e in self.terms:
            if len(e) != k:
                raise ValueError(f"exponent vector {e} does not have length {k}")

    def coeff(self, exps: tuple[int, ...]) -> int:
        return self.terms.get(tuple(exps), 0)

    def total(self) -> int:
        """Sum of all coefficients, i.e. the value at all-ones."""
        return sum(self.terms.values())

    def permute_vars(self, perm: tuple[int, ...]) -> "MonomialPoly":
        """Apply a permutation of the variables; position i takes exponent perm[i]."""
        return MonomialPoly(self.k, {tuple(e[p] for p in perm): c for e, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialPoly):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __repr__(self) -> str:
        return f"<MonomialPoly k={self.k} with {len(self.terms)} terms>"


def monomials_of_degree(degree: int, k: int) -> list[tuple[int, ...]]:
    """All exponent vectors of the given total degree, descending lex order."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(degree - first, k - 1):
            out.append((first,) + rest)
    return out


def plethysm_hh_monomial(m: int, n: int, k: int, budget: int | None = DEFAULT_BUDGET) -> MonomialPoly:
    """h_m[h_n] as a polynomial in k variables, by multiset enumeration.

    Walks all multisets of m degree-n monomials as nondecreasing index
    sequences over the ordered monomial list and accumulates the exponent
    sum of each. Exponent vectors are packed into single integers (base
    m*n + 1, which no accumulated exponent can reach), so the inner loop
    is plain integer addition; keys are unpacked at the end.

    Raises BudgetExceededError up front when the multiset count
    C(M + m - 1, m), M = C(n + k - 1, k - 1), exceeds the budget.
    """
    if m < 1:
        raise ValueError("m must be positive")
    vectors = monomials_of_degree(n, k)
    count = comb(len(vectors) + m - 1, m)
    if budget is not None and count > budget:
        raise BudgetExceededError(count, budget, f"h{m}[h{n}] in {k} variables")

    base = m * n + 1
    packed = []
    for vec in vectors:
        code = 0
        for e in reversed(vec):
            code = code * base + e
        packed.append(code)

    last = len(packed)
    accum: dict[int, int] = {}

    def walk(start: int, remaining: int, partial: int) -> None:
        if remaining == 1:
            get = accum.get
            for j in range(start, last):
                key = partial + packed[j]
                accum[key] = get(key, 0) + 1
            return
        for j in range(start, last):
            walk(j, remaining - 1, partial + packed[j])

    walk(0, m, 0)

    terms: dict[tuple[int, ...], int] = {}
    for code, c in accum.items():
        exps = []
        for _ in range(k):
            code, e = divmod(code, base)
            exps.append(e)
        terms[tuple(exps)] = c
    return MonomialPoly(k, terms)


@cache
def _ssyt_exponents(lam: Partition, k: int) -> dict[tuple[int, ...], int]:
    # Content vectors of all SSYT of shape lam with entries in 1..k,
    # with multiplicities. Callers must not mutate the returned dict.
    if not lam:
        return {(0,) * k: 1}
    rows = list(lam)
    nrows = len(rows)
    grid = [[0] * width for width in rows]
    content = [0] * k
    out: dict[tuple[int, ...], int] = {}

    def fill(r: int, c: int) -> None:
        if r == nrows:
            key = tuple(content)
            out[key] = out.get(key, 0) + 1
            return
        nr, nc = (r, c + 1) if c + 1 < rows[r] else (r + 1, 0)
        lowest = 1
        if c > 0:
            lowest = grid[r][c - 1]  # rows weakly increase
        if r > 0:
            lowest = max(lowest, grid[r - 1][c] + 1)  # columns strictly increase
        for value in range(lowest, k + 1):
            grid[r][c] = value
            content[value - 1] += 1
            fill(nr, nc)
            content[value - 1] -= 1

    fill(0, 0)
    return out


def clear_schur_poly_cache() -> None:
    """Drop memoized tableau enumerations (used to benchmark cold starts)."""
    _ssyt_exponents.cache_clear()


def schur_poly(lam, k: int) -> MonomialPoly:
    """The Schur polynomial s_lam in k variables, by SSYT enumeration.

    The lex-greatest exponent is lam padded to length k, coefficient 1.
    """
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    if len(lam) > k:
        raise ValueError(f"shape has {len(lam)} rows, only {k} variables")
    return MonomialPoly(k, dict(_ssyt_exponents(lam, k)))


def monomial_to_schur(poly: MonomialPoly, max_peels: int = _PEEL_CAP) -> SchurSum:
    """Expand a symmetric polynomial in the Schur basis by leading-term peeling.

    Repeatedly take the lexicographically greatest remaining exponent
    vector; for symmetric input it is weakly decreasing and names the
    leading Schur shape, whose coefficient is then subtracted off. Each
    peel cancels its leading term exactly (Schur polynomials are monic in
    the lex order), so the leading exponent strictly decreases and the
    loop terminates. A leading exponent that is not weakly decreasing
    proves the input was not symmetric and raises ValueError; max_peels
    caps the loop as a backstop.
    """
    work = dict(poly.terms)
    k = poly.k
    found: dict[Partition, int] = {}
    peels = 0
    previous = None
    while work:
        peels += 1
        if peels > max_peels:
            raise ValueError(f"gave up after {max_peels} peels; input is likely not symmetric")
        lead = max(work)
        if previous is not None and not lead < previous:
            raise AssertionError("leading exponent failed to decrease")
        if any(lead[i] < lead[i + 1] for i in range(k - 1)):
            raise ValueError(
                f"not symmetric: leading exponent {lead} is not weakly decreasing"
            )
        previous = lead
        c = work[lead]
        lam = Partition._unchecked(tuple(e for e in lead if e))
        found[lam] = c
        for exps, mult in _ssyt_exponents(lam, k).items():
            remaining = work.get(exps, 0) - c * mult
            if remaining:
                work[exps] = remaining
            else:
                work.pop(exps, None)
    return SchurSum._wrap(found)


def plethysm_oracle(m: int, n: int, k: int | None = None, budget: int | None = DEFAULT_BUDGET) -> SchurSum:
    """Schur expansion of h_m[h_n], computed from first principles.

    k defaults to m: every Schur constituent of h_m[h_n] has at most m
    rows, so m variables already separate all constituents. Pass a larger
    k when the result will be combined with plethysms whose constituents
    have more rows.
    """
    if k is None:
        k = m
    return monomial_to_schur(plethysm_hh_monomial(m, n, k, budget=budget))


def foulkes_difference(m: int, n: int, budget: int | None = DEFAULT_BUDGET) -> SchurSum:
    """h_n[h_m] minus h_m[h_n], both computed in max(m, n) variables."""
    k = max(m, n)
    return plethysm_oracle(n, m, k=k, budget=budget) - plethysm_oracle(m, n, k=k, budget=budget)
