"""The character ring of finite-dimensional sl(2,C)-modules.

A finite-dimensional sl(2,C)-module decomposes into one-dimensional
eigenspaces of H with integer eigenvalues (weights).  The character records
that eigenvalue multiset as a Laurent polynomial in q: the coefficient of q^k
is the dimension of the weight-k eigenspace.  Under this dictionary

* direct sum of modules  = sum of characters,
* tensor product         = product of characters,
* dimension              = value at q = 1.

The (n+1)-dimensional irreducible Sym^n(C^2) has character
q^n + q^(n-2) + ... + q^(-n), and the labels n >= 0 enumerate all
irreducibles.  Besides the classical Clebsch-Gordan decomposition (a tensor
product written as a direct sum) this module implements the inverse of the
tensor construction itself: recovering the factors of a product of
irreducibles.  A tensor product of nontrivial irreducibles over a simple Lie
algebra determines its factors up to reordering, so the recovery is well
posed; we search exhaustively and verify uniqueness as we go.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .exactalg import LaurentPoly


class FactorizationError(ValueError):
    """No factorization into nontrivial irreducibles exists."""


@dataclass(frozen=True)
class Character:
    """Character of a finite-dimensional sl(2,C)-module.

    Valid characters are palindromic (weight k and -k have equal multiplicity)
    with nonnegative coefficients; both are checked at construction.  Genuine
    module characters additionally have weight multiplicities that decrease
    outward on each parity class; that stronger condition is exactly what
    :func:`clebsch_gordan_decompose` certifies.
    """

    poly: LaurentPoly

    def __post_init__(self):
        for exp, c in self.poly.terms():
            if c < 0:
                raise ValueError(
                    f"not a character: negative coefficient {c} at q^{exp}"
                )
            if self.poly.coefficient(-exp) != c:
                raise ValueError(
                    f"not a character: coefficient at q^{exp} ({c}) differs "
                    f"from q^{-exp} ({self.poly.coefficient(-exp)})"
                )

    @property
    def dimension(self) -> int:
        return self.poly.evaluate_at_one()

    @property
    def top_degree(self) -> int:
        """Highest weight occurring (the q-degree)."""
        return self.poly.degree

    def coefficient(self, k: int) -> int:
        return self.poly.coefficient(k)

    def __mul__(self, other: "Character") -> "Character":
        # Product of palindromic nonnegative polynomials is again one.
        return Character(self.poly * other.poly)

    def __str__(self) -> str:
        return str(self.poly)


@dataclass(frozen=True)
class IrrepMultiset:
    """Multiset of irreducible labels, canonically sorted descending.

    Label n stands for the (n+1)-dimensional irreducible; a multiset is called
    nontrivial when it contains no label 0.
    """

    labels: tuple[int, ...]

    def __post_init__(self):
        for lab in self.labels:
            if lab < 0:
                raise ValueError(f"irreducible labels are nonnegative, got {lab}")
        object.__setattr__(self, "labels", tuple(sorted(self.labels, reverse=True)))

    def counts(self) -> list[tuple[int, int]]:
        """(label, multiplicity) pairs, labels descending."""
        out: list[tuple[int, int]] = []
        for lab in self.labels:
            if out and out[-1][0] == lab:
                out[-1] = (lab, out[-1][1] + 1)
            else:
                out.append((lab, 1))
        return out

    def total(self) -> int:
        return sum(self.labels)

    def __str__(self) -> str:
        """Canonical text form: descending labels, ``^mult`` for repeats.

        {3, 1, 1} prints as ``3,1^2``.
        """
        return ",".join(
            f"{lab}^{mult}" if mult > 1 else str(lab)
            for lab, mult in self.counts()
        )

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels)

    def __len__(self) -> int:
        return len(self.labels)


@lru_cache(maxsize=None)
def irrep_character(n: int) -> Character:
    """Character q^n + q^(n-2) + ... + q^(-n) of the irreducible with label n."""
    if n < 0:
        raise ValueError(f"irreducible labels are nonnegative, got {n}")
    return Character(LaurentPoly({k: 1 for k in range(-n, n + 1, 2)}))


def tensor_character(factors: Sequence[Character]) -> Character:
    """Character of the tensor product of the given modules."""
    if not factors:
        raise ValueError("tensor_character needs at least one factor")
    out = factors[0]
    for c in factors[1:]:
        out = out * c
    return out


def clebsch_gordan_decompose(c: Character) -> IrrepMultiset:
    """Write a character as a direct sum of irreducibles (with multiplicity).

    The multiplicity of label k is coeff(q^k) - coeff(q^(k+2)): every
    irreducible with label >= k+2 contributes one to both weight spaces, and
    the irreducible with label k contributes only to the first.  A negative
    difference means the input is not the character of any module.
    """
    labels: list[int] = []
    top = c.top_degree if c.poly else -1
    for k in range(top, -1, -1):
        mult = c.coefficient(k) - c.coefficient(k + 2)
        if mult < 0:
            raise ValueError(
                f"not a module character: multiplicity of label {k} "
                f"would be {mult}"
            )
        labels.extend([k] * mult)
    return IrrepMultiset(tuple(labels))


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n as descending tuples, in decreasing lexicographic order."""
    if n < 0:
        raise ValueError(f"cannot partition a negative integer: {n}")
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partition_list(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(partitions(n))


@lru_cache(maxsize=None)
def _labels_character(labels: tuple[int, ...]) -> Character:
    return tensor_character([irrep_character(lab) for lab in labels])


def factor_tensor_of_irreps(c: Character) -> IrrepMultiset:
    """Recover the unique factorization of c into nontrivial irreducibles.

    Unique tensor factorization guarantees at most one multiset
    {n_1, ..., n_r} of positive labels with irrep(n_1) x ... x irrep(n_r) = c.
    The search space is small: the labels form a partition of the top degree N
    of c, and only partitions with dimension product (n_i + 1) equal to dim(c)
    can match.  Candidates are enumerated exhaustively, so a second match
    would be caught (and would disprove uniqueness itself).
    """
    if c.dimension <= 1:
        raise FactorizationError(
            "not a tensor of nontrivial irreducibles: dimension "
            f"{c.dimension} < 2"
        )
    top = c.top_degree
    dim = c.dimension
    matches = []
    for candidate in _partition_list(top):
        prod = 1
        for part in candidate:
            prod *= part + 1
        if prod != dim:
            continue
        if _labels_character(candidate) == c:
            matches.append(candidate)
    if not matches:
        raise FactorizationError(
            f"not a tensor of nontrivial irreducibles: {c}"
        )
    if len(matches) > 1:
        raise RuntimeError(
            "tensor factorization is not unique "
            f"({matches!r}); this contradicts unique factorization"
        )
    return IrrepMultiset(matches[0])
