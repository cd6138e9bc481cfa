"""Cohomology of symmetric products Sym^n(C) of a smooth genus-g curve.

Two independent routes to the Betti numbers are implemented and cross-checked
against each other in the test suite:

* the closed form  B_r = sum_j binom(2g, r - 2j)  for r <= n, extended to
  r > n by Poincare duality B_r = B_{2n-r};
* the generating series (1 + tx)^{2g} / ((1 - t)(1 - tx^2)), whose t^n
  coefficient is the Poincare polynomial of Sym^n(C), expanded with the exact
  truncated-series arithmetic of :mod:`multiproj.exactalg`.

Genus 0 is special: Sym^n(P^1) = P^n, so its Betti numbers come from the
projective-space rule (1 in each even degree) rather than the series, which is
stated for g >= 1.  (The series gives the same answer at g = 0; the tests
check that agreement as a bonus, but the library routes g = 0 explicitly.)

The module also carries the two total-dimension counts whose comparison shows
why the tensor-factorization classification of products of projective spaces
has no genus >= 1 analogue: for n >= 2 the cohomology of Sym^n(C) is strictly
smaller than the n-th symmetric power of H*(C) (as ungraded vector spaces),
so Sym^n of the cohomology is not the cohomology of Sym^n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .exactalg import TruncatedBiseries, binom, geometric_sum


@dataclass(frozen=True)
class PoincarePolynomial:
    """Betti numbers B_0..B_{2n} of a compact space of complex dimension n.

    Validates the three structural facts every space here satisfies:
    connectedness (B_0 = 1), nonnegativity, and Poincare duality.
    """

    betti: tuple[int, ...]
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("half-dimension n must be nonnegative")
        if len(self.betti) != 2 * self.n + 1:
            raise ValueError(
                f"need 2n+1 = {2 * self.n + 1} Betti numbers, got {len(self.betti)}"
            )
        if any(b < 0 for b in self.betti):
            raise ValueError("Betti numbers must be nonnegative")
        if self.betti[0] != 1:
            raise ValueError(f"B_0 must be 1 (connected space), got {self.betti[0]}")
        for r, b in enumerate(self.betti):
            if b != self.betti[2 * self.n - r]:
                raise ValueError(
                    f"duality violated: B_{r} = {b} but "
                    f"B_{2 * self.n - r} = {self.betti[2 * self.n - r]}"
                )

    def total(self) -> int:
        """Total dimension of cohomology (sum of all Betti numbers)."""
        return sum(self.betti)

    def __str__(self) -> str:
        """Pretty form like ``1 + 2x + 2x^2 + 2x^3 + x^4`` (zero terms skipped)."""
        pieces = []
        for r, b in enumerate(self.betti):
            if b == 0:
                continue
            if r == 0:
                pieces.append(str(b))
            else:
                var = "x" if r == 1 else f"x^{r}"
                pieces.append(var if b == 1 else f"{b}{var}")
        return " + ".join(pieces)


class DimRelation(enum.Enum):
    """Trichotomy flag for the dimension comparison."""

    EQUAL = "EQUAL"
    STRICTLY_LESS = "STRICTLY_LESS"
    STRICTLY_GREATER = "STRICTLY_GREATER"


@dataclass(frozen=True)
class DimensionComparison:
    """dim H*(Sym^n C) vs dim Sym^n(H*(C)), with the comparison spelled out."""

    g: int
    n: int
    total_dim: int
    sym_dim: int
    relation: DimRelation


def _check_genus(g: int) -> None:
    if g < 0:
        raise ValueError(f"genus must be nonnegative, got {g}")


def betti_closed(g: int, n: int, r: int) -> int:
    """r-th Betti number of Sym^n(C) for a genus-g curve, g >= 1, closed form.

    For r <= n this is sum_{j >= 0} binom(2g, r - 2j); for r > n it is
    B_{2n-r} by duality.
    """
    _check_genus(g)
    if g == 0:
        raise ValueError(
            "betti_closed is stated for genus >= 1; use poincare_genus_zero"
        )
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if not 0 <= r <= 2 * n:
        raise ValueError(f"degree r must lie in [0, {2 * n}], got {r}")
    if r > n:
        r = 2 * n - r
    return sum(binom(2 * g, r - 2 * j) for j in range(r // 2 + 1))


def poincare_via_series(g: int, n: int) -> PoincarePolynomial:
    """Poincare polynomial of Sym^n(C), genus g >= 1, by series expansion.

    Expands (1 + tx)^{2g} / ((1 - t)(1 - tx^2)) with t truncated at n and
    reads off the t^n coefficient.
    """
    _check_genus(g)
    if g == 0:
        raise ValueError(
            "the generating series is stated for genus >= 1; "
            "use poincare_genus_zero"
        )
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    one = TruncatedBiseries.one(n)
    t = TruncatedBiseries.term(n, 1, 0)
    tx = TruncatedBiseries.term(n, 1, 1)
    tx2 = TruncatedBiseries.term(n, 1, 2)
    series = (one + tx) ** (2 * g) * geometric_sum(t) * geometric_sum(tx2)
    row = series.coefficient(n)
    if len(row) != 2 * n + 1:
        raise AssertionError(
            f"series gave x-degree {len(row) - 1} at t^{n}, expected {2 * n}"
        )
    return PoincarePolynomial(betti=row, n=n)


def poincare_genus_zero(n: int) -> PoincarePolynomial:
    """Poincare polynomial of Sym^n(P^1) = P^n: one class in each even degree."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return PoincarePolynomial(
        betti=tuple(1 - r % 2 for r in range(2 * n + 1)), n=n
    )


def poincare_polynomial(g: int, n: int) -> PoincarePolynomial:
    """Route to the right formula by genus (series for g >= 1, P^n rule at 0)."""
    _check_genus(g)
    if g == 0:
        return poincare_genus_zero(n)
    return poincare_via_series(g, n)


def total_dim_cohomology(g: int, n: int) -> int:
    """dim H*(Sym^n C, C) = sum_{i=0}^{min(n,2g)} binom(2g, i) * (n+1-i)."""
    _check_genus(g)
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if g == 0:
        return n + 1
    return sum(binom(2 * g, i) * (n + 1 - i) for i in range(min(n, 2 * g) + 1))


def dim_sym_of_cohomology(g: int, n: int) -> int:
    """dim Sym^n(H*(C, C)) = binom(2g + n + 1, n), H*(C) ungraded of dim 2g+2."""
    _check_genus(g)
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return binom(2 * g + n + 1, n)


def genus_obstruction_report(g: int, n: int) -> DimensionComparison:
    """Compare dim H*(Sym^n C) with dim Sym^n(H*(C)) for n >= 2.

    At genus 0 the two agree (both n+1) -- the coincidence behind the sl(2)
    classification of products of projective spaces.  For g >= 1 the left side
    is strictly smaller, which is exactly why that method has no higher-genus
    analogue.  The relation is computed by comparison, not asserted.
    """
    _check_genus(g)
    if n < 2:
        raise ValueError(
            f"comparison needs n >= 2 (both sides coincide at n = 1), got {n}"
        )
    total = total_dim_cohomology(g, n)
    sym = dim_sym_of_cohomology(g, n)
    if total == sym:
        rel = DimRelation.EQUAL
    elif total < sym:
        rel = DimRelation.STRICTLY_LESS
    else:
        rel = DimRelation.STRICTLY_GREATER
    return DimensionComparison(g=g, n=n, total_dim=total, sym_dim=sym, relation=rel)
