"""
Exact sparse multivariate polynomials over the integers, divided-difference
operators, and the weak-order recursion for Schubert and Grothendieck
polynomials.

A polynomial is a finite map from exponent vectors (tuples of length nvars)
to nonzero integer coefficients.  All arithmetic is exact; the divided
difference is computed by subtract-swap-and-divide, with an inexactness
check guarding every division.
"""
from __future__ import annotations

import heapq
from typing import Dict, Iterator, Tuple

from . import perms

# Counts divided-difference applications; used to verify that a warm cache
# never recomputes polynomials.
OPERATOR_APPLICATIONS = 0


class Poly:
    """Immutable exact sparse polynomial in nvars variables."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: Dict[tuple, int], nvars: int):
        for expo, coeff in terms.items():
            if coeff == 0:
                raise ValueError(f"zero coefficient stored at {expo}")
            if len(expo) != nvars or any(e < 0 for e in expo):
                raise ValueError(f"bad exponent vector {expo} for nvars={nvars}")
        self.terms = dict(terms)
        self.nvars = nvars

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls({}, nvars)

    @classmethod
    def monomial(cls, expo: tuple, nvars: int, coeff: int = 1) -> "Poly":
        if coeff == 0:
            return cls.zero(nvars)
        return cls({tuple(expo): coeff}, nvars)

    @classmethod
    def one(cls, nvars: int) -> "Poly":
        return cls.monomial((0,) * nvars, nvars)

    @classmethod
    def variable(cls, j: int, nvars: int) -> "Poly":
        """The variable x_j (1-based)."""
        expo = tuple(1 if k == j else 0 for k in range(1, nvars + 1))
        return cls.monomial(expo, nvars)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            c = out.get(expo, 0) + coeff
            if c:
                out[expo] = c
            else:
                out.pop(expo, None)
        return Poly(out, self.nvars)

    def __neg__(self) -> "Poly":
        return Poly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        out: Dict[tuple, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = out.get(e, 0) + c1 * c2
                if c:
                    out[e] = c
                else:
                    out.pop(e, None)
        return Poly(out, self.nvars)

    def swap_vars(self, j: int) -> "Poly":
        """Exchange x_j and x_{j+1} (1-based j)."""
        out = {}
        for expo, coeff in self.terms.items():
            e = list(expo)
            e[j - 1], e[j] = e[j], e[j - 1]
            out[tuple(e)] = coeff
        return Poly(out, self.nvars)

    def support(self) -> frozenset:
        return frozenset(self.terms)

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(sum(e) for e in self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            raise ValueError("min degree of the zero polynomial is undefined")
        return min(sum(e) for e in self.terms)

    def graded_component(self, d: int) -> "Poly":
        return Poly({e: c for e, c in self.terms.items() if sum(e) == d}, self.nvars)

    def top_component(self) -> "Poly":
        return self.graded_component(self.degree())

    def lowest_component(self) -> "Poly":
        return self.graded_component(self.min_degree())

    def principal_specialization(self) -> int:
        """Evaluate at x_1 = ... = x_n = 1, i.e. sum all coefficients."""
        return sum(self.terms.values())

    def leading_exponent(self) -> tuple:
        """Maximal exponent under the canonical term order (x_n weighs most)."""
        if not self.terms:
            raise ValueError("leading exponent of the zero polynomial is undefined")
        return max(self.terms, key=term_key)

    def sorted_terms(self) -> Iterator[Tuple[tuple, int]]:
        for expo in sorted(self.terms, key=term_key):
            yield expo, self.terms[expo]

    def to_text(self) -> str:
        """Canonical text form: `coeff:e1,...,en` joined by `;`."""
        return ";".join(
            f"{coeff}:" + ",".join(str(e) for e in expo)
            for expo, coeff in self.sorted_terms()
        )

    @classmethod
    def from_text(cls, text: str, nvars: int) -> "Poly":
        terms: Dict[tuple, int] = {}
        if text:
            for chunk in text.split(";"):
                coeff_part, expo_part = chunk.split(":")
                expo = tuple(int(e) for e in expo_part.split(","))
                terms[expo] = int(coeff_part)
        return cls(terms, nvars)

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r}, nvars={self.nvars})"


def term_key(expo: tuple) -> tuple:
    """Sort key for the canonical term order: compare the exponent of x_n
    first, then x_{n-1}, and so on.  This is a term order with
    x_1 < x_2 < ... < x_n."""
    return expo[::-1]


def divided_difference(f: Poly, j: int) -> Poly:
    """The operator (f - s_j.f) / (x_j - x_{j+1}), computed exactly.

    The numerator is antisymmetric in x_j, x_{j+1}, so the division is always
    exact; an inexact division aborts loudly (it would indicate a bug).
    """
    global OPERATOR_APPLICATIONS
    OPERATOR_APPLICATIONS += 1
    if not 1 <= j <= f.nvars - 1:
        raise ValueError(f"operator index {j} out of range for nvars={f.nvars}")
    numerator = f - f.swap_vars(j)
    return Poly(_exact_divide(numerator.terms, j - 1, f.nvars), f.nvars)


def isobaric_divided_difference(f: Poly, j: int) -> Poly:
    """The operator f -> divided_difference((1 - x_{j+1}) f, j)."""
    one_minus_x = Poly.one(f.nvars) - Poly.variable(j + 1, f.nvars)
    return divided_difference(one_minus_x * f, j)


def _exact_divide(terms: Dict[tuple, int], j0: int, nvars: int) -> Dict[tuple, int]:
    """Divide by (x_{j0+1} - x_{j0+2}) (0-based column j0), raising on any
    nonzero remainder.

    Works through the terms in decreasing order of (exponent of x_j, rest),
    peeling off one quotient term at a time; each peel pushes a single
    correction term that is strictly smaller in that order.
    """
    heap = []
    for expo, coeff in terms.items():
        heapq.heappush(heap, (_div_key(expo, j0), expo, coeff))
    quotient: Dict[tuple, int] = {}
    while heap:
        key, expo, coeff = heapq.heappop(heap)
        while heap and heap[0][1] == expo:
            coeff += heapq.heappop(heap)[2]
        if coeff == 0:
            continue
        if expo[j0] == 0:
            raise ArithmeticError(
                f"inexact division by x_{j0 + 1} - x_{j0 + 2}: remainder term {expo}"
            )
        q = list(expo)
        q[j0] -= 1
        q = tuple(q)
        quotient[q] = quotient.get(q, 0) + coeff
        rest = list(q)
        rest[j0 + 1] += 1
        rest = tuple(rest)
        heapq.heappush(heap, (_div_key(rest, j0), rest, coeff))
    return {e: c for e, c in quotient.items() if c}


def _div_key(expo: tuple, j0: int) -> tuple:
    # Max-order on (expo[j0], expo), negated for heapq's min-heap.
    return (-expo[j0],) + tuple(-e for e in expo)


def staircase_monomial(n: int) -> Poly:
    """x_1^{n-1} x_2^{n-2} ... x_{n-1}, the w_0 base case."""
    return Poly.monomial(tuple(range(n - 1, -1, -1)), n)


class PolynomialTable:
    """Memoized Schubert ("S") or Grothendieck ("G") polynomials for all of
    S_n.  Built in one sweep descending from w_0 through the weak order;
    read-only afterwards."""

    def __init__(self, n: int, flavor: str, polys: Dict[tuple, Poly]):
        if flavor not in ("S", "G"):
            raise ValueError(f"unknown flavor {flavor!r}")
        self.n = n
        self.flavor = flavor
        self.polys = polys

    def __getitem__(self, w: tuple) -> Poly:
        return self.polys[w]

    def __contains__(self, w: tuple) -> bool:
        return w in self.polys

    def __len__(self) -> int:
        return len(self.polys)

    def items(self):
        return self.polys.items()


def build_table(n: int, flavor: str) -> PolynomialTable:
    """Compute the full table for S_n.

    Every w != w_0 has an ascent j; its parent w.s_j is longer, so processing
    permutations in decreasing length order finds each parent already done.
    """
    operator = divided_difference if flavor == "S" else isobaric_divided_difference
    polys: Dict[tuple, Poly] = {perms.longest_element(n): staircase_monomial(n)}
    by_length = sorted(perms.all_perms(n), key=perms.length, reverse=True)
    for w in by_length[1:]:
        j = perms.ascents(w)[0]
        parent = perms.apply_s(w, j)
        polys[w] = operator(polys[parent], j)
    return PolynomialTable(n, flavor, polys)


def schubert(w: tuple, table: PolynomialTable) -> Poly:
    """The Schubert polynomial of w, looked up from a flavor-"S" table."""
    if table.flavor != "S":
        raise ValueError("schubert lookup requires a flavor-S table")
    return table[w]


def grothendieck(w: tuple, table: PolynomialTable) -> Poly:
    """The Grothendieck polynomial of w, looked up from a flavor-"G" table."""
    if table.flavor != "G":
        raise ValueError("grothendieck lookup requires a flavor-G table")
    return table[w]
