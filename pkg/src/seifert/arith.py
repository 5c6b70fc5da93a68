"""Exact integer primitives: fractions reduced modulo 1 and Smith normal form.

Everything here is plain arbitrary-precision integer arithmetic. The rest of
the package builds its invariants on these two tools, so both are written for
determinism first: the same input always yields the identical output object.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import ValidityError, ZeroDenominator


@dataclass(frozen=True)
class ReducedFraction:
    """A fraction num/den with gcd(num, den) = 1 and den >= 1."""

    num: int
    den: int

    def __post_init__(self):
        if self.den < 1:
            raise ValidityError(f"denominator must be positive, got {self.den}")
        if gcd(self.num, self.den) != 1:
            raise ValidityError(f"{self.num}/{self.den} is not reduced")

    def __str__(self):
        return f"{self.num}/{self.den}"


def reduce_mod1(num: int, den: int) -> ReducedFraction:
    """Return the unique reduced fraction in [0, 1) congruent to num/den.

    Adding any integer multiple of the denominator to the numerator does not
    change the result. Raises ZeroDenominator when den = 0.
    """
    if den == 0:
        raise ZeroDenominator("fraction with denominator 0")
    if den < 0:
        num, den = -num, -den
    num %= den
    g = gcd(num, den)
    return ReducedFraction(num // g, den // g)


@dataclass(frozen=True)
class IntMatrix:
    """An integer matrix stored row-major as a flat tuple."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValidityError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValidityError(
                f"{self.rows}x{self.cols} matrix needs "
                f"{self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValidityError("ragged rows")
        flat = tuple(int(x) for r in rows for x in r)
        return cls(len(rows), ncols, flat)

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def to_rows(self):
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]


def _pick_pivot(a, t, nr, nc):
    # Smallest absolute value wins, ties broken by row-major position.
    best = None
    where = None
    for i in range(t, nr):
        row = a[i]
        for j in range(t, nc):
            v = row[j]
            if v != 0 and (best is None or abs(v) < best):
                best = abs(v)
                where = (i, j)
                if best == 1:
                    return where
    return where


def smith_normal_form(m: IntMatrix):
    """Diagonalize m over the integers by row and column operations.

    Returns (invariant_factors, free_rank_defect): the invariant factors are
    positive integers d1 | d2 | ... | dk with k the rank of m over the
    rationals (factors equal to 1 are retained), and free_rank_defect is
    cols - k, the free rank of the cokernel when columns index generators.
    """
    nr, nc = m.rows, m.cols
    a = m.to_rows()
    t = 0
    limit = min(nr, nc)
    while t < limit:
        piv = _pick_pivot(a, t, nr, nc)
        if piv is None:
            break
        pi, pj = piv
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            again = False
            for i in range(t + 1, nr):
                if a[i][t] == 0:
                    continue
                q = a[i][t] // a[t][t]
                if q:
                    at = a[t]
                    ai = a[i]
                    for j in range(t, nc):
                        ai[j] -= q * at[j]
                if a[i][t] != 0:
                    a[t], a[i] = a[i], a[t]
                    again = True
            if again:
                continue
            for j in range(t + 1, nc):
                if a[t][j] == 0:
                    continue
                q = a[t][j] // a[t][t]
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j] != 0:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                    again = True
            if not again:
                break
        t += 1
    diag = [abs(a[i][i]) for i in range(t)]
    # Repair the divisibility chain with gcd/lcm swaps; products are
    # preserved, so the factor product still equals |det| for square
    # full-rank input.
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            di, dj = diag[i], diag[j]
            if dj % di != 0:
                g = gcd(di, dj)
                diag[i], diag[j] = g, di * dj // g
    return tuple(diag), nc - len(diag)
