"""Exact linear algebra over Z, Q and GF(2) on sparse dict rows.

Rows are ``dict[int, int]`` (column -> nonzero entry).  Nothing here uses
floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Row = dict


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _axpy(y: Row, a, x: Row) -> Row:
    """y + a*x, pruning zeros (returns a new dict)."""
    out = dict(y)
    for k, v in x.items():
        s = out.get(k, 0) + a * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _lin(a, x: Row, b, y: Row) -> Row:
    out = {k: a * v for k, v in x.items()} if a else {}
    for k, v in y.items():
        s = out.get(k, 0) + b * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return {k: v for k, v in out.items() if v}


def as_row(vec: Sequence) -> Row:
    return {k: v for k, v in enumerate(vec) if v}


def densify(row: Row, ncols: int) -> list:
    out = [0] * ncols
    for k, v in row.items():
        out[k] = v
    return out


class IntegerEchelon:
    """Incrementally maintained integer echelon basis (row lattice).

    ``finish()`` returns the row-style Hermite normal form: pivots positive,
    entries above each pivot reduced into ``[0, pivot)``.
    """

    def __init__(self) -> None:
        self.pivots: dict[int, Row] = {}

    def add(self, row: Row) -> bool:
        """Insert a row; True when the lattice rank grew."""
        r = {k: v for k, v in row.items() if v}
        while r:
            c = min(r)
            p = self.pivots.get(c)
            if p is None:
                if r[c] < 0:
                    r = {k: -v for k, v in r.items()}
                self.pivots[c] = r
                return True
            a, b = p[c], r[c]
            if b % a == 0:
                r = _axpy(r, -(b // a), p)
                continue
            g, s, t = _xgcd(a, b)
            new_p = _lin(s, p, t, r)
            r = _lin(a // g, r, -(b // g), p)
            if new_p[c] < 0:
                new_p = {k: -v for k, v in new_p.items()}
            self.pivots[c] = new_p
        return False

    def reduce(self, row: Row) -> Row:
        """Remainder of ``row`` after subtracting lattice multiples along pivots."""
        r = {k: v for k, v in row.items() if v}
        for c in sorted(self.pivots):
            v = r.get(c)
            if v:
                p = self.pivots[c]
                q = v // p[c]
                if q:
                    r = _axpy(r, -q, p)
        return r

    def contains(self, row: Row) -> bool:
        r = self.reduce(row)
        return not r

    def finish(self) -> list[Row]:
        cols = sorted(self.pivots)
        for idx, c in enumerate(cols):
            p = self.pivots[c]
            for c2 in cols[:idx]:
                other = self.pivots[c2]
                v = other.get(c)
                if v:
                    q = v // p[c]
                    if q:
                        self.pivots[c2] = _axpy(other, -q, p)
        return [self.pivots[c] for c in cols]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def hermite_normal_form(rows: Iterable[Row]) -> list[Row]:
    ech = IntegerEchelon()
    for r in rows:
        ech.add(r)
    return ech.finish()


def rref_rational(rows: Iterable[Row]) -> tuple[list[Row], list[int]]:
    """Reduced row echelon form over Q (Fraction entries)."""
    piv: dict[int, Row] = {}
    for row in rows:
        r = {k: Fraction(v) for k, v in row.items() if v}
        for c in sorted(piv):
            v = r.get(c)
            if v:
                r = _axpy(r, -v, piv[c])
        if not r:
            continue
        c = min(r)
        lead = r[c]
        r = {k: v / lead for k, v in r.items()}
        for c2, p in list(piv.items()):
            v = p.get(c)
            if v:
                piv[c2] = _axpy(p, -v, r)
        piv[c] = r
    cols = sorted(piv)
    return [piv[c] for c in cols], cols


def rational_rank(rows: Iterable[Row]) -> int:
    return len(rref_rational(rows)[0])


def nullspace_rational(rows: Sequence[Row], ncols: int) -> list[Row]:
    """Basis of {v in Q^ncols : row . v = 0 for every row}."""
    rref, pivs = rref_rational(rows)
    pivset = set(pivs)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = {free: Fraction(1)}
        for r, c in zip(rref, pivs):
            x = r.get(free)
            if x:
                v[c] = -x
        basis.append(v)
    return basis


def clear_denominators(row: Row) -> Row:
    from math import lcm

    den = 1
    for v in row.values():
        den = lcm(den, Fraction(v).denominator)
    return {k: int(Fraction(v) * den) for k, v in row.items()}


def integer_kernel(rows: Sequence[Row], ncols: int) -> list[Row]:
    """Saturated Z-basis of {v in Z^ncols : row . v = 0}.

    Row-reduces the transpose augmented by an identity block; identity parts
    of rows whose matrix part vanishes are the unimodular kernel rows.
    """
    m = len(rows)
    aug: list[Row] = [dict() for _ in range(ncols)]
    for i, row in enumerate(rows):
        for k, v in row.items():
            if v:
                aug[k][i] = v
    for k in range(ncols):
        aug[k][m + k] = 1
    hnf = hermite_normal_form(aug)
    out = []
    for r in hnf:
        if min(r) >= m:
            out.append({k - m: v for k, v in r.items()})
    return out


def saturation(rows: Sequence[Row], ncols: int) -> list[Row]:
    """HNF of (span_Q rows) intersected with Z^ncols."""
    comp = [clear_denominators(v) for v in nullspace_rational(list(rows), ncols)]
    if not comp:
        return [{k: 1} for k in range(ncols)]
    return hermite_normal_form(integer_kernel(comp, ncols))


@dataclass(frozen=True)
class GradedSubspace:
    """A sublattice of the degree-``d`` monomial coordinates of OPol_n.

    ``basis`` holds the rows of its Hermite normal form, coordinates indexed
    by :func:`oddspringer.skew.monomials_of_degree` order.
    """

    n: int
    d: int
    ncols: int
    basis: tuple[tuple[tuple[int, int], ...], ...]

    @classmethod
    def from_rows(cls, n: int, d: int, ncols: int, rows: Iterable[Row]) -> GradedSubspace:
        hnf = hermite_normal_form(rows)
        return cls(n, d, ncols, tuple(tuple(sorted(r.items())) for r in hnf))

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def rows(self) -> list[Row]:
        return [dict(r) for r in self.basis]

    def dense(self) -> list[list[int]]:
        return [densify(r, self.ncols) for r in self.rows()]

    def rational_basis(self) -> list[Row]:
        return rref_rational(self.rows())[0]

    def contains(self, row: Row) -> bool:
        ech = IntegerEchelon()
        for r in self.rows():
            ech.pivots[min(r)] = r
        return ech.contains(row)

    def contains_rational(self, row: Row) -> bool:
        base = self.rows()
        return rational_rank(base + [row]) == rational_rank(base)

    def is_saturated(self) -> bool:
        return hermite_normal_form(self.rows()) == saturation(self.rows(), self.ncols)

    def same_rational_span(self, other: GradedSubspace) -> bool:
        return self.rational_basis() == other.rational_basis()


# -- GF(2) ----------------------------------------------------------------------

class GF2Echelon:
    """Row space over GF(2) with rows encoded as Python int bitmasks."""

    def __init__(self) -> None:
        self.rows: dict[int, int] = {}  # leading bit -> row

    def reduce(self, mask: int) -> int:
        while mask:
            top = mask.bit_length() - 1
            p = self.rows.get(top)
            if p is None:
                return mask
            mask ^= p
        return 0

    def add(self, mask: int) -> bool:
        r = self.reduce(mask)
        if r:
            self.rows[r.bit_length() - 1] = r
            return True
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


def gf2_rank(masks: Iterable[int]) -> int:
    ech = GF2Echelon()
    for m in masks:
        ech.add(m)
    return ech.rank


class RationalEchelon:
    """Incremental reduced row echelon form over Q; the pivot of a row is its
    smallest column."""

    def __init__(self) -> None:
        self.pivots: dict[int, Row] = {}

    def reduce(self, row: Row) -> Row:
        r = {k: Fraction(v) for k, v in row.items() if v}
        for c in [c for c in r if c in self.pivots]:
            v = r.get(c)
            if v:
                r = _axpy(r, -v, self.pivots[c])
        return r

    def add(self, row: Row) -> bool:
        r = self.reduce(row)
        if not r:
            return False
        c = min(r)
        lead = r[c]
        r = {k: v / lead for k, v in r.items()}
        for c2, p in self.pivots.items():
            v = p.get(c)
            if v:
                self.pivots[c2] = _axpy(p, -v, r)
        self.pivots[c] = r
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)
