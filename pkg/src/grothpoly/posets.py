"""
Componentwise-order posets on integer vectors, Moebius functions, the
support poset of a Grothendieck polynomial, and the conjecture checkers
that live on it.
"""
from __future__ import annotations

import itertools
from typing import Dict, FrozenSet, Optional, Set, Tuple

from . import perms
from .poly import Poly, term_key
from .verdicts import Verdict

# Adjoined minimum element: a distinguished sentinel, deliberately not the
# zero vector (which is a legitimate element for w = identity).
BOTTOM = "0^"


def componentwise_leq(alpha: tuple, beta: tuple) -> bool:
    if len(alpha) != len(beta):
        raise ValueError(f"length mismatch: {alpha} vs {beta}")
    return all(a <= b for a, b in zip(alpha, beta))


class VectorPoset:
    """A finite set of integer vectors of uniform length under componentwise
    order, optionally with an adjoined bottom below everything."""

    def __init__(self, elements, n: int, has_bottom: bool = False):
        elements = frozenset(tuple(e) for e in elements)
        for e in elements:
            if len(e) != n:
                raise ValueError(f"element {e} does not have length {n}")
        self.elements = elements
        self.n = n
        self.has_bottom = has_bottom

    def leq(self, a, b) -> bool:
        if a == BOTTOM:
            return True
        if b == BOTTOM:
            return a == BOTTOM
        return componentwise_leq(a, b)

    def covers(self) -> Set[Tuple[tuple, tuple]]:
        """Hasse relation among the vector elements (the bottom is excluded;
        its covers are the minimal vectors)."""
        els = sorted(self.elements, key=lambda v: (sum(v), term_key(v)))
        result = set()
        for a in els:
            for b in els:
                if a == b or not componentwise_leq(a, b):
                    continue
                if any(
                    c != a and c != b
                    and componentwise_leq(a, c)
                    and componentwise_leq(c, b)
                    for c in els
                ):
                    continue
                result.add((a, b))
        return result

    def maximal_elements(self) -> FrozenSet[tuple]:
        return frozenset(
            a
            for a in self.elements
            if not any(b != a and componentwise_leq(a, b) for b in self.elements)
        )

    def hasse_text(self) -> str:
        """Line-oriented export `vector -> vector` of the Hasse covers."""
        lines = [
            ",".join(map(str, a)) + " -> " + ",".join(map(str, b))
            for (a, b) in self.covers()
        ]
        return "\n".join(sorted(lines))


def mobius(P: VectorPoset) -> Dict[object, int]:
    """The table mu(0^, q) for every q, via the defining recursion processed
    along a linear extension (degree, then term order)."""
    if not P.has_bottom:
        raise ValueError("mobius requires a poset with an adjoined bottom")
    table: Dict[object, int] = {BOTTOM: 1}
    order = sorted(P.elements, key=lambda v: (sum(v), term_key(v)))
    for q in order:
        below = sum(table[r] for r in table if r == BOTTOM or P.leq(r, q))
        # table holds exactly the already-processed elements, all of which
        # precede q in the linear extension, so this sums over 0^ <= r < q.
        table[q] = -below
    return table


def build_Pw(w: tuple, groth: Poly) -> VectorPoset:
    """All integer vectors sandwiched between some support exponent of the
    Grothendieck polynomial and the weight of the closed Rothe diagram, with
    an adjoined bottom."""
    n = len(w)
    bound = perms.weight(perms.upper_closure(perms.rothe_diagram(w)))
    supp = groth.support()
    elements = set()
    for candidate in itertools.product(*(range(b + 1) for b in bound)):
        if any(componentwise_leq(alpha, candidate) for alpha in supp):
            elements.add(candidate)
    return VectorPoset(elements, n, has_bottom=True)


def check_conjecture_1(w: tuple, groth: Poly) -> Verdict:
    """Every support exponent below the top degree has a strict upper bound
    in the support; equivalently every maximal support element has full
    degree."""
    deg = groth.degree()
    supp_poset = VectorPoset(groth.support(), len(w))
    for alpha in supp_poset.maximal_elements():
        if sum(alpha) < deg:
            return Verdict(False, witness=alpha, detail="maximal below top degree")
    return Verdict(True)


def check_conjecture_2(w: tuple, groth: Poly) -> Verdict:
    """Every support exponent below the top degree has an upper bound in the
    support exactly one degree higher."""
    deg = groth.degree()
    by_degree: Dict[int, list] = {}
    for alpha in groth.support():
        by_degree.setdefault(sum(alpha), []).append(alpha)
    for d, level in sorted(by_degree.items()):
        if d == deg:
            continue
        above = by_degree.get(d + 1, [])
        for alpha in level:
            if not any(componentwise_leq(alpha, beta) for beta in above):
                return Verdict(False, witness=alpha, detail="no cover one degree up")
    return Verdict(True)


def check_conjecture_3(w: tuple, groth: Poly) -> Verdict:
    """The support is closed under componentwise intervals: for alpha <= gamma
    in the support, every integer vector in the box [alpha, gamma] is in the
    support.

    It suffices to check boxes whose top is a maximal support element: any
    interval [alpha, gamma] is contained in [alpha, m] for a maximal m >= gamma.
    """
    supp = groth.support()
    maxima = VectorPoset(supp, len(w)).maximal_elements()
    for alpha in supp:
        for m in maxima:
            if not componentwise_leq(alpha, m):
                continue
            for beta in itertools.product(
                *(range(a, b + 1) for a, b in zip(alpha, m))
            ):
                if beta not in supp:
                    return Verdict(
                        False, witness=beta, detail=f"missing in box [{alpha}, {m}]"
                    )
    return Verdict(True)


def check_conjecture_coeff(w: tuple, groth: Poly) -> Verdict:
    """For each top-degree support exponent beta, the coefficients over
    {alpha in supp : alpha <= beta} sum to 1."""
    for beta in groth.top_component().support():
        total = sum(
            c for alpha, c in groth.terms.items() if componentwise_leq(alpha, beta)
        )
        if total != 1:
            return Verdict(False, witness=beta, detail=f"coefficient sum {total}")
    return Verdict(True)


def check_conjecture_mobius(w: tuple, groth: Poly) -> Verdict:
    """On zero-one permutations, the Grothendieck coefficients equal the
    negated Moebius values of the support poset with bottom."""
    if not perms.is_zero_one(w):
        raise ValueError(
            f"{w} is not zero-one; the Moebius conjecture does not apply"
        )
    P = build_Pw(w, groth)
    mu = mobius(P)
    for alpha in P.elements:
        expected = -mu[alpha]
        actual = groth.terms.get(alpha, 0)
        if actual != expected:
            return Verdict(
                False,
                witness=alpha,
                detail=f"coefficient {actual} != -mu = {expected}",
            )
    return Verdict(True)
