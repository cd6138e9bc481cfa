"""Explicit matrix realization of the sl(2,C)-action on H*(P^n, C).

Cup product with the Kaehler class, its adjoint, and the degree-weighting
operator turn the cohomology of complex projective space into an sl(2)-module:
Y acts as the Lefschetz operator (raising cohomological degree by 2, i.e.
lowering the weight by 2), X as its adjoint, and H weights H^{2p} by n - 2p.
Odd cohomology of P^n vanishes, so the basis e_0, ..., e_n indexes the even
degrees only.

The normalization here fixes Y e_p = e_{p+1}; the commutation relation
[X, Y] = H together with X e_0 = 0 then forces X e_p = p(n - p + 1) e_{p-1}
(the adjoint under any Kaehler metric differs from this only by a rescaling of
the basis, which the bracket relations cannot see).

All matrices carry exact Fraction entries.  Bracket verification, character
extraction, Kuenneth tensor products and the irreducibility test (kernel of X
plus the Y-orbit of a highest-weight vector) are all exact; ranks and kernels
come from fraction-free Gaussian elimination over the integers.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .exactalg import LaurentPoly
from .sl2rep import Character


class RatMatrix:
    """Sparse matrix with exact Fraction entries, immutable by convention."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(
        self,
        nrows: int,
        ncols: int,
        entries: Mapping[tuple[int, int], Fraction | int] | None = None,
    ):
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        rows: list[dict[int, Fraction]] = [{} for _ in range(nrows)]
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < nrows and 0 <= j < ncols):
                    raise ValueError(f"entry ({i}, {j}) outside {nrows}x{ncols}")
                v = Fraction(v)
                if v:
                    rows[i][j] = v
        self.nrows = nrows
        self.ncols = ncols
        self._rows = rows

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RatMatrix":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def diagonal(cls, values: Sequence[Fraction | int]) -> "RatMatrix":
        n = len(values)
        return cls(n, n, {(i, i): v for i, v in enumerate(values)})

    def entry(self, i: int, j: int) -> Fraction:
        return self._rows[i].get(j, Fraction(0))

    def row_items(self, i: int) -> list[tuple[int, Fraction]]:
        return sorted(self._rows[i].items())

    def is_zero(self) -> bool:
        return all(not row for row in self._rows)

    def max_abs_entry(self) -> Fraction:
        best = Fraction(0)
        for row in self._rows:
            for v in row.values():
                if abs(v) > best:
                    best = abs(v)
        return best

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (
            self.nrows == other.nrows
            and self.ncols == other.ncols
            and self._rows == other._rows
        )

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_shape(other)
        out = RatMatrix(self.nrows, self.ncols)
        for i in range(self.nrows):
            row = dict(self._rows[i])
            for j, v in other._rows[i].items():
                s = row.get(j, Fraction(0)) + v
                if s:
                    row[j] = s
                else:
                    row.pop(j, None)
            out._rows[i] = row
        return out

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + other.scale(-1)

    def scale(self, factor: Fraction | int) -> "RatMatrix":
        factor = Fraction(factor)
        out = RatMatrix(self.nrows, self.ncols)
        if factor:
            for i in range(self.nrows):
                out._rows[i] = {j: factor * v for j, v in self._rows[i].items()}
        return out

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.ncols != other.nrows:
            raise ValueError(
                f"cannot multiply {self.nrows}x{self.ncols} by "
                f"{other.nrows}x{other.ncols}"
            )
        out = RatMatrix(self.nrows, other.ncols)
        for i in range(self.nrows):
            acc: dict[int, Fraction] = {}
            for k, a in self._rows[i].items():
                for j, b in other._rows[k].items():
                    s = acc.get(j, Fraction(0)) + a * b
                    if s:
                        acc[j] = s
                    else:
                        acc.pop(j, None)
            out._rows[i] = acc
        return out

    def apply(self, vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Sparse matrix-vector product (vec maps index -> coefficient)."""
        out: dict[int, Fraction] = {}
        for i, row in enumerate(self._rows):
            s = Fraction(0)
            for j, a in row.items():
                c = vec.get(j)
                if c is not None:
                    s += a * c
            if s:
                out[i] = s
        return out

    def kron(self, other: "RatMatrix") -> "RatMatrix":
        """Kronecker product; index (i, j) of the factors maps to i*other_dim + j."""
        out = RatMatrix(self.nrows * other.nrows, self.ncols * other.ncols)
        for i in range(self.nrows):
            for j, a in self._rows[i].items():
                for k in range(other.nrows):
                    row = out._rows[i * other.nrows + k]
                    for l, b in other._rows[k].items():
                        row[j * other.ncols + l] = a * b
        return out

    def __repr__(self) -> str:
        nnz = sum(len(r) for r in self._rows)
        return f"<RatMatrix {self.nrows}x{self.ncols}, {nnz} nonzero>"

    def _check_shape(self, other: "RatMatrix") -> None:
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError(
                f"shape mismatch: {self.nrows}x{self.ncols} vs "
                f"{other.nrows}x{other.ncols}"
            )


def _rank(rows: list[list[int]], ncols: int) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    rows = [list(r) for r in rows]
    m = len(rows)
    rank = 0
    prev = 1
    col = 0
    while rank < m and col < ncols:
        piv = next((i for i in range(rank, m) if rows[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pivot_row = rows[rank]
        p = pivot_row[col]
        for i in range(rank + 1, m):
            ri = rows[i]
            f = ri[col]
            for j in range(col + 1, ncols):
                ri[j] = (p * ri[j] - f * pivot_row[j]) // prev
            ri[col] = 0
        prev = p
        rank += 1
        col += 1
    return rank


def _nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel, via reduced row echelon form over Q."""
    rows = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    basis = []
    pivot_set = set(pivots)
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for i, col in enumerate(pivots):
            vec[col] = -rows[i][free]
        basis.append(vec)
    return basis


@dataclass(frozen=True)
class Sl2MatrixModule:
    """A concrete sl(2,C)-module: exact matrices X, Y, H on a weight basis.

    H is diagonal with the integer basis weights; X and Y shift weights by +2
    and -2.  Those structural facts are enforced here.  The bracket relations
    themselves are deliberately NOT enforced, so that broken modules can be
    built and fed to :func:`verify_brackets` (whose failures are data).
    """

    dim: int
    X: RatMatrix
    Y: RatMatrix
    H: RatMatrix
    basis_weights: tuple[int, ...]

    def __post_init__(self):
        d = self.dim
        if d < 1:
            raise ValueError("module dimension must be positive")
        if len(self.basis_weights) != d:
            raise ValueError("basis_weights length must equal dim")
        for m in (self.X, self.Y, self.H):
            if m.nrows != d or m.ncols != d:
                raise ValueError("operator matrices must be dim x dim")
        w = self.basis_weights
        for i in range(d):
            for j, v in self.H.row_items(i):
                if i != j:
                    raise ValueError(f"H must be diagonal; found H[{i},{j}] = {v}")
            if self.H.entry(i, i) != w[i]:
                raise ValueError(
                    f"H[{i},{i}] = {self.H.entry(i, i)} != weight {w[i]}"
                )
        for i in range(d):
            for j, _ in self.X.row_items(i):
                if w[i] != w[j] + 2:
                    raise ValueError(
                        f"X[{i},{j}] nonzero but weights {w[i]} != {w[j]} + 2"
                    )
            for j, _ in self.Y.row_items(i):
                if w[i] != w[j] - 2:
                    raise ValueError(
                        f"Y[{i},{j}] nonzero but weights {w[i]} != {w[j]} - 2"
                    )


def build_cohomology_module(n: int) -> Sl2MatrixModule:
    """The sl(2)-module H*(P^n, C) on the basis e_p = generator of H^{2p}.

    H e_p = (n - 2p) e_p, Y e_p = e_{p+1} (cup with the Kaehler class),
    X e_p = p(n - p + 1) e_{p-1}.
    """
    if n < 0:
        raise ValueError(f"projective space dimension must be nonnegative, got {n}")
    weights = tuple(n - 2 * p for p in range(n + 1))
    d = n + 1
    y = RatMatrix(d, d, {(p + 1, p): 1 for p in range(n)})
    x = RatMatrix(d, d, {(p - 1, p): p * (n - p + 1) for p in range(1, n + 1)})
    h = RatMatrix.diagonal(weights)
    return Sl2MatrixModule(dim=d, X=x, Y=y, H=h, basis_weights=weights)


@dataclass(frozen=True)
class RelationCheck:
    """Exact pass/fail for one bracket relation."""

    relation: str
    passed: bool
    max_abs_discrepancy_numerator: int

    def to_json_dict(self) -> dict:
        return {
            "relation": self.relation,
            "pass": self.passed,
            "max_abs_discrepancy_numerator": self.max_abs_discrepancy_numerator,
        }


@dataclass(frozen=True)
class BracketReport:
    checks: tuple[RelationCheck, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> str:
        return json.dumps([c.to_json_dict() for c in self.checks])


def verify_brackets(m: Sl2MatrixModule) -> BracketReport:
    """Check [X,Y]=H, [H,X]=2X, [H,Y]=-2Y as exact matrix identities."""
    cases = (
        ("XY-YX=H", m.X @ m.Y - m.Y @ m.X, m.H),
        ("HX-XH=2X", m.H @ m.X - m.X @ m.H, m.X.scale(2)),
        ("HY-YH=-2Y", m.H @ m.Y - m.Y @ m.H, m.Y.scale(-2)),
    )
    checks = []
    for name, lhs, rhs in cases:
        gap = (lhs - rhs).max_abs_entry()
        checks.append(RelationCheck(name, gap == 0, gap.numerator))
    return BracketReport(tuple(checks))


def tensor_modules(a: Sl2MatrixModule, b: Sl2MatrixModule) -> Sl2MatrixModule:
    """Kuenneth tensor product, operators acting by the Leibniz rule.

    X, Y, H each become op (x) 1 + 1 (x) op, so the weights add and the
    bracket relations are preserved.
    """
    ia = RatMatrix.identity(a.dim)
    ib = RatMatrix.identity(b.dim)
    weights = tuple(
        wa + wb for wa in a.basis_weights for wb in b.basis_weights
    )
    return Sl2MatrixModule(
        dim=a.dim * b.dim,
        X=a.X.kron(ib) + ia.kron(b.X),
        Y=a.Y.kron(ib) + ia.kron(b.Y),
        H=a.H.kron(ib) + ia.kron(b.H),
        basis_weights=weights,
    )


def module_character(m: Sl2MatrixModule) -> Character:
    """Character read off the H-eigenvalue multiset."""
    counts: dict[int, int] = {}
    for w in m.basis_weights:
        counts[w] = counts.get(w, 0) + 1
    return Character(LaurentPoly(counts))


def _weight_indices(m: Sl2MatrixModule) -> dict[int, list[int]]:
    spaces: dict[int, list[int]] = {}
    for i, w in enumerate(m.basis_weights):
        spaces.setdefault(w, []).append(i)
    return spaces


def _x_block(
    m: Sl2MatrixModule, spaces: dict[int, list[int]], w: int
) -> tuple[list[list[Fraction]], list[int]]:
    """X restricted to the weight-w space, as rows over the weight-(w+2) basis."""
    cols = spaces[w]
    rows_idx = spaces.get(w + 2, [])
    block = [[m.X.entry(r, c) for c in cols] for r in rows_idx]
    return block, cols


def _block_nullity(block: list[list[Fraction]], ncols: int) -> int:
    int_rows = []
    for row in block:
        if any(row):
            scale = math.lcm(*(v.denominator for v in row))
            int_rows.append([int(v * scale) for v in row])
    return ncols - _rank(int_rows, ncols)


def highest_weight_multiplicities(m: Sl2MatrixModule) -> dict[int, int]:
    """Count independent highest-weight vectors (kernel of X) per weight.

    For a module satisfying the bracket relations these counts are the
    multiplicities of the Clebsch-Gordan decomposition.
    """
    spaces = _weight_indices(m)
    out: dict[int, int] = {}
    for w in sorted(spaces, reverse=True):
        block, cols = _x_block(m, spaces, w)
        nullity = _block_nullity(block, len(cols))
        if nullity:
            out[w] = nullity
    return out


def is_irreducible(m: Sl2MatrixModule) -> bool:
    """Irreducibility test: one highest-weight line whose Y-orbit spans.

    X preserves the weight grading (weight w -> w + 2), so its kernel splits
    across the weight spaces and can be collected blockwise; the scan aborts
    as soon as a second kernel dimension shows up.
    """
    spaces = _weight_indices(m)
    total = 0
    hw_weight = None
    for w in sorted(spaces, reverse=True):
        block, cols = _x_block(m, spaces, w)
        nullity = _block_nullity(block, len(cols))
        if nullity:
            total += nullity
            hw_weight = w
            if total > 1:
                return False
    if total != 1 or hw_weight is None:
        return False
    block, cols = _x_block(m, spaces, hw_weight)
    kernel = _nullspace(block, len(cols))
    vec = {cols[i]: v for i, v in enumerate(kernel[0]) if v}
    # Successive Y-images live in strictly decreasing weight eigenspaces, so
    # the nonzero ones are automatically linearly independent: the orbit spans
    # exactly when all dim of them are nonzero.
    count = 0
    while vec and count <= m.dim:
        count += 1
        vec = m.Y.apply(vec)
    return count == m.dim
