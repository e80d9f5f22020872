"""Specht modules of H_{-1}(n) on standard tableaux and their match with the
top graded piece of OH(X^lambda)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial

import numpy as np

from .linalg import RationalEchelon, Row, rref_rational
from .operators import apply_word, canonical_reduced_word, hecke_word, length
from .operators import T as hecke_T
from .report import CheckRecord, record
from .skew import Monomial, SkewPoly, format_monomial, format_poly
from .springer import Partition, as_partition, quotient
from .symmetric import odd_partial_elementary


# -- tableaux -------------------------------------------------------------------

@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = [len(r) for r in rows]
        if any(a < b for a, b in zip(shape, shape[1:])) or not all(shape):
            raise ValueError(f"rows {rows} do not form a partition shape")
        entries = sorted(e for r in rows for e in r)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError(f"entries of {rows} are not 1..n")

    @classmethod
    def row_filled(cls, lam) -> Tableau:
        """t^lambda: 1..n filled row by row."""
        lam = as_partition(lam)
        rows, k = [], 1
        for p in lam.parts:
            rows.append(tuple(range(k, k + p)))
            k += p
        return cls(tuple(rows))

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def row_of(self, j: int) -> int:
        for a, r in enumerate(self.rows, start=1):
            if j in r:
                return a
        raise ValueError(f"{j} not in tableau")

    def is_row_standard(self) -> bool:
        return all(all(x < y for x, y in zip(r, r[1:])) for r in self.rows)

    def first_column_descent(self) -> tuple[int, int] | None:
        """First node (a, b) (1-based) whose entry exceeds the entry below it."""
        for a in range(len(self.rows) - 1):
            for b in range(len(self.rows[a + 1])):
                if self.rows[a][b] > self.rows[a + 1][b]:
                    return a + 1, b + 1
        return None

    def is_standard(self) -> bool:
        return self.is_row_standard() and self.first_column_descent() is None

    def permute(self, w) -> Tableau:
        """w(t): replace every entry k by w(k)."""
        return Tableau(tuple(tuple(w[e - 1] for e in r) for r in self.rows))

    def swap(self, i: int) -> Tableau:
        return Tableau(tuple(tuple(i + 1 if e == i else i if e == i + 1 else e for e in r) for r in self.rows))

    def row_sorted(self) -> Tableau:
        return Tableau(tuple(tuple(sorted(r)) for r in self.rows))

    def reading_word(self) -> tuple[int, ...]:
        return tuple(e for r in self.rows for e in r)

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def standard_tableaux(lam) -> list[Tableau]:
    """All standard tableaux, ordered lexicographically by row reading word."""
    lam = as_partition(lam)
    n = lam.n
    out = []

    def place(k: int, rows: list[list[int]]) -> None:
        if k > n:
            out.append(Tableau(tuple(tuple(r) for r in rows)))
            return
        for a in range(lam.height):
            if len(rows[a]) < lam.parts[a] and (a == 0 or len(rows[a - 1]) > len(rows[a])):
                rows[a].append(k)
                place(k + 1, rows)
                rows[a].pop()

    place(1, [[] for _ in range(lam.height)])
    out.sort(key=Tableau.reading_word)
    return out


def row_standard_tableaux(lam) -> list[Tableau]:
    """All row-standard tableaux, ordered by row reading word."""
    lam = as_partition(lam)
    out = []

    def fill(rest: tuple[int, ...], a: int, rows: list[tuple[int, ...]]) -> None:
        if a == lam.height:
            out.append(Tableau(tuple(rows)))
            return
        for row in combinations(rest, lam.parts[a]):
            fill(tuple(v for v in rest if v not in row), a + 1, rows + [row])

    fill(tuple(range(1, lam.n + 1)), 0, [])
    out.sort(key=Tableau.reading_word)
    return out


def hook_length_count(lam) -> int:
    lam = as_partition(lam)
    conj = lam.conjugate().parts
    prod = 1
    for a, p in enumerate(lam.parts):
        for b in range(p):
            prod *= (p - b - 1) + (conj[b] - a - 1) + 1
    return factorial(lam.n) // prod


def tableau_to_monomial(t: Tableau) -> Monomial:
    if not t.is_row_standard():
        raise ValueError("tableau must be row standard")
    e = [0] * t.n
    for a, r in enumerate(t.rows):
        for j in r:
            e[j - 1] = a
    return tuple(e)


def m_lambda(lam) -> Monomial:
    return tableau_to_monomial(Tableau.row_filled(lam))


# -- Garnir belts -------------------------------------------------------------

def garnir_nodes(lam) -> list[tuple[int, int]]:
    lam = as_partition(lam)
    return [(a, b) for a in range(1, lam.height) for b in range(1, lam.part(a + 1) + 1)]


def garnir_belt(lam, node: tuple[int, int]) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    lam = as_partition(lam)
    a, b = node
    if node not in garnir_nodes(lam):
        raise ValueError(f"{node} is not a Garnir node of {lam}")
    A = [(a, f) for f in range(b, lam.part(a) + 1)]
    B = [(a + 1, g) for g in range(1, b + 1)]
    return A, B


def belt_fillings(t: Tableau, node: tuple[int, int]) -> list[Tableau]:
    """Row-standard tableaux obtained from t by redistributing the belt
    entries; these are the w(t) for minimal coset representatives w."""
    A, B = garnir_belt(t.shape, node)
    vals = sorted(t.rows[a - 1][b - 1] for a, b in A + B)
    out = []
    for top in combinations(vals, len(A)):
        bottom = [v for v in vals if v not in top]
        rows = [list(r) for r in t.rows]
        for (a, b), v in zip(A, top):
            rows[a - 1][b - 1] = v
        for (a, b), v in zip(B, bottom):
            rows[a - 1][b - 1] = v
        out.append(Tableau(tuple(tuple(r) for r in rows)).row_sorted())
    return out


def _perm_between(src: Tableau, dst: Tableau) -> tuple[int, ...]:
    """The permutation w with w(src) = dst."""
    w = [0] * src.n
    for r1, r2 in zip(src.rows, dst.rows):
        for x, y in zip(r1, r2):
            w[x - 1] = y
    return tuple(w)


# -- Specht module --------------------------------------------------------------

class SpechtModule:
    """S^lambda_{-1} presented as the row-standard tableau module modulo the
    submodule generated by the Garnir relations on v_{t^lambda}.

    On row-standard tableaux T_i acts by
    same row: v_t;  i in an earlier row than i+1: -v_{s_i t};
    i+1 in an earlier row: v_{s_i t} + 2 v_t.
    Standard tableaux are shown to give a basis of the quotient; every other
    row-standard tableau is rewritten through an exact rational echelon form
    of the relation submodule.
    """

    def __init__(self, lam) -> None:
        self.partition = as_partition(lam)
        self.n = self.partition.n
        self.tableaux = standard_tableaux(self.partition)
        self.index = {t: k for k, t in enumerate(self.tableaux)}
        std = set(self.tableaux)
        rowstd = row_standard_tableaux(self.partition)
        # non-standard columns first so that they become the pivots
        order = [t for t in rowstd if t not in std] + self.tableaux
        self.columns = {t: k for k, t in enumerate(order)}
        self.order = order
        self.relations = RationalEchelon()
        self._build_relations()

    def _raw_act(self, i: int, t: Tableau) -> dict[Tableau, int]:
        ri, rj = t.row_of(i), t.row_of(i + 1)
        if ri == rj:
            return {t: 1}
        s = t.swap(i)
        if ri < rj:
            return {s: -1}
        return {s: 1, t: 2}

    def _act_vector(self, i: int, vec: Row) -> Row:
        out: dict[int, Fraction] = {}
        for c, v in vec.items():
            for u, w in self._raw_act(i, self.order[c]).items():
                k = self.columns[u]
                out[k] = out.get(k, 0) + v * w
        return {k: v for k, v in out.items() if v}

    def _build_relations(self) -> None:
        t0 = Tableau.row_filled(self.partition)
        queue = []
        for node in garnir_nodes(self.partition):
            vec: Row = {}
            for u in belt_fillings(t0, node):
                k = self.columns[u]
                vec[k] = vec.get(k, 0) + 1
            queue.append(vec)
        while queue:
            vec = queue.pop()
            if self.relations.add(vec):
                queue.extend(self._act_vector(i, vec) for i in range(1, self.n))
        nstd = len(self.order) - len(self.tableaux)
        bad = [c for c in self.relations.pivots if c >= nstd]
        missing = [c for c in range(nstd) if c not in self.relations.pivots]
        if bad or missing:
            raise ArithmeticError(
                f"standard tableaux are not a basis of the Specht quotient for {self.partition}")
        self._nstd = nstd

    @property
    def dimension(self) -> int:
        return len(self.tableaux)

    def straighten(self, t: Tableau) -> dict[Tableau, int]:
        """Coordinates of v_t (t any tableau, rows sorted first) over standard tableaux."""
        t = t.row_sorted()
        c = self.columns[t]
        if c >= self._nstd:
            return {t: 1}
        out = {}
        for k, v in self.relations.pivots[c].items():
            if k != c:
                if v.denominator != 1:
                    raise ArithmeticError(f"non-integral straightening of {t.to_list()}")
                out[self.order[k]] = -int(v)
        return out

    def act(self, i: int, t: Tableau) -> dict[Tableau, int]:
        out: dict[Tableau, int] = {}
        for u, w in self._raw_act(i, t).items():
            for v, c in self.straighten(u).items():
                out[v] = out.get(v, 0) + w * c
        return {v: c for v, c in out.items() if c}

    def matrix(self, i: int) -> np.ndarray:
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"generator index {i} out of range 1..{self.n - 1}")
        k = self.dimension
        mat = np.zeros((k, k), dtype=object)
        for col, t in enumerate(self.tableaux):
            for v, c in self.act(i, t).items():
                mat[self.index[v], col] = c
        return mat


def specht_matrix(i: int, lam) -> np.ndarray:
    return SpechtModule(lam).matrix(i)


def hecke_presentation_failures(mats: dict[int, np.ndarray]) -> dict[str, str | None]:
    fails: dict[str, str | None] = {"quadratic": None, "far_commutation": None, "braid": None}
    if not mats:
        return fails
    k = next(iter(mats.values())).shape[0]
    ident = np.identity(k, dtype=object)
    for i, Ti in mats.items():
        if fails["quadratic"] is None and not np.array_equal(Ti.dot(Ti), 2 * Ti - ident):
            fails["quadratic"] = f"i={i}"
        for j, Tj in mats.items():
            if j > i + 1 and fails["far_commutation"] is None and not np.array_equal(Ti.dot(Tj), Tj.dot(Ti)):
                fails["far_commutation"] = f"i={i} j={j}"
        if i + 1 in mats and fails["braid"] is None:
            Tj = mats[i + 1]
            if not np.array_equal(Ti.dot(Tj).dot(Ti), Tj.dot(Ti).dot(Tj)):
                fails["braid"] = f"i={i}"
    return fails


def specht_relation_check(lam) -> list[CheckRecord]:
    lam = as_partition(lam)
    S = SpechtModule(lam)
    mats = {i: S.matrix(i) for i in range(1, lam.n)}
    info = {"partition": str(lam)}
    return [record(f"specht_{rid}", ce is None, n=lam.n, counterexample=ce, detail=info)
            for rid, ce in hecke_presentation_failures(mats).items()]


# -- Garnir elements in OH(X^lambda) ------------------------------------------------

def hecke_element(w, p: SkewPoly) -> SkewPoly:
    """T_w(p) via the canonical reduced word of w."""
    return apply_word(hecke_word(canonical_reduced_word(w)), p)


def garnir_element(lam, node: tuple[int, int], signed: bool = True) -> SkewPoly:
    """Sum over minimal coset representatives w of (+-1) T_w(m^lambda)."""
    lam = as_partition(lam)
    t0 = Tableau.row_filled(lam)
    m = SkewPoly.monomial(m_lambda(lam))
    out = SkewPoly.zero(lam.n)
    for u in belt_fillings(t0, node):
        w = _perm_between(t0, u)
        term = hecke_element(w, m)
        if signed and length(w) & 1:
            term = -term
        out = out + term
    return out


def bottom_corner_factored(lam) -> SkewPoly:
    """prefix * e_{lambda_m}^{A u B} for the Garnir node (m-1, lambda_m)."""
    lam = as_partition(lam)
    m = lam.height
    if m < 2:
        raise ValueError("need at least two rows")
    n = lam.n
    expo = list(m_lambda(lam))
    start = n - lam.part(m)
    for j in range(start, n):
        expo[j] = m - 2
    belt = tuple(range(n - lam.part(m - 1), n + 1))
    return SkewPoly.monomial(tuple(expo)) * odd_partial_elementary(lam.part(m), belt, n)


def relation_check(lam) -> list[CheckRecord]:
    """Row relations and every Garnir relation on m^lambda inside OH(X^lambda)."""
    lam = as_partition(lam)
    n = lam.n
    Q = quotient(lam)
    t0 = Tableau.row_filled(lam)
    m = SkewPoly.monomial(m_lambda(lam))
    target = Q.normal_form(m)
    info = {"partition": str(lam)}
    ce = None
    for i in range(1, n):
        if t0.row_of(i) == t0.row_of(i + 1) and Q.normal_form(hecke_T(i, m)) != target:
            ce = f"T_{i}(m^lambda) != m^lambda"
            break
    out = [record("row_relations", ce is None, n=n, counterexample=ce, detail=info)]
    ce = None
    nodes = garnir_nodes(lam)
    for node in nodes:
        g = garnir_element(lam, node)
        nf = Q.normal_form(g)
        if nf:
            ce = f"node {node}: residue {format_poly(SkewPoly(n, nf))}"
            break
    out.append(record("garnir_relations", ce is None, n=n, counterexample=ce,
                      detail=dict(info, nodes=len(nodes))))
    return out


# -- the intertwiner -------------------------------------------------------------

@dataclass
class IntertwinerResult:
    partition: Partition
    dimension: int
    matrix: list[list[Fraction]] | None
    signs: list[int] | None
    status: str
    reason: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        data = {"partition": str(self.partition), "dim": self.dimension, "status": self.status}
        if self.signs is not None:
            data["matrix"] = [{"index": k, "sign": s} for k, s in enumerate(self.signs)]
        if self.reason:
            data["reason"] = self.reason
        return data


def intertwiner(lam) -> IntertwinerResult:
    """Solve U S_i = Q_i U on the top degree with U(v_{t^lambda}) = m^lambda."""
    lam = as_partition(lam)
    Q = quotient(lam)
    S = SpechtModule(lam)
    top = Q.top_degree
    qbasis = Q.basis_in_degree(top)
    f, q = S.dimension, len(qbasis)
    if f != q:
        return IntertwinerResult(lam, q, None, None, "fail", f"dimensions differ: {f} tableaux vs {q} monomials")
    smats = [S.matrix(i) for i in range(1, lam.n)]
    qmats = [Q.hecke_matrix(i, top) for i in range(1, lam.n)]
    # unknown U[r][c] sits at column r*f + c
    nvar = q * f
    rows = []
    for Sm, Qm in zip(smats, qmats):
        for r in range(q):
            for c in range(f):
                row: dict[int, int] = {}
                for k in range(f):
                    if Sm[k, c]:
                        row[r * f + k] = row.get(r * f + k, 0) + Sm[k, c]
                for k in range(q):
                    if Qm[r, k]:
                        row[k * f + c] = row.get(k * f + c, 0) - Qm[r, k]
                row = {kk: v for kk, v in row.items() if v}
                if row:
                    rows.append(row)
    anchor_col = S.index[Tableau.row_filled(lam)]
    anchor_row = Q.degrees[top].index[m_lambda(lam)]
    for r in range(q):
        row = {r * f + anchor_col: 1}
        row[nvar] = -1 if r == anchor_row else 0
        rows.append({k: v for k, v in row.items() if v})
    rref, pivots = rref_rational(rows)
    if nvar in pivots:
        return IntertwinerResult(lam, q, None, None, "fail", "no intertwiner with the anchoring condition")
    if len(pivots) != nvar:
        return IntertwinerResult(lam, q, None, None, "fail", "intertwiner not unique")
    U = [[Fraction(0)] * f for _ in range(q)]
    for r, c in zip(rref, pivots):
        U[c // f][c % f] = -r.get(nvar, Fraction(0))
    signs = []
    reason = ""
    for c, t in enumerate(S.tableaux):
        col = [U[r][c] for r in range(q)]
        nz = [r for r in range(q) if col[r]]
        target = Q.degrees[top].index.get(tableau_to_monomial(t))
        if len(nz) != 1 or nz[0] != target or abs(col[nz[0]]) != 1:
            reason = f"column for {t.to_list()} is not +-m^t"
            break
        signs.append(int(col[nz[0]]))
    status = "pass" if not reason else "fail"
    return IntertwinerResult(lam, q, U, signs if not reason else None, status, reason)
