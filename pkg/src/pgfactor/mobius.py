"""Structural Mobius evaluation of the factorization count.

In an abelian p-group only the elementary abelian subgroups carry a nonzero
Mobius value (Hall: mu = (-1)^n p^C(n,2) for rank n, else 0), and all of them
sit inside the socle.  So the inversion sum collapses to a walk over the
subspaces of the socle: for each subspace, type the quotient by its lift via
an integer Smith normal form and weight the squared subgroup count of that
quotient with the Hall value.  The per-dimension tallies of quotient types
(the census) are themselves a checkable invariant: for distinct exponents
they match the maximal-subgroup classification p^2 / p / 1 exactly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, product

from .formulas import _subgroup_count_value
from .grouptype import GroupType, normalize


class InvalidSubspace(ValueError):
    """Subspace incompatible with the group it is applied to."""


def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of an n-dimensional space over F_p."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    num = 1
    den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (k - i) - 1
    q, r = divmod(num, den)
    assert r == 0
    return q


@dataclass(frozen=True)
class Subspace:
    """Canonical subspace of F_p^ambient: rows form a reduced row-echelon basis.

    Pivots are 1 with zeros above and below, pivot columns strictly increase,
    so equal subspaces have identical representations.
    """

    ambient: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.rows)


def enumerate_subspaces(r: int, k: int, p: int) -> list[Subspace]:
    """All k-dimensional subspaces of F_p^r, each via its canonical basis.

    Deterministic: the result is sorted lexicographically by basis rows.
    The count always equals gaussian_binomial(r, k, p).
    """
    if not 0 <= k <= r:
        raise ValueError(f"need 0 <= k <= r, got k={k}, r={r}")
    if k == 0:
        return [Subspace(r, ())]
    out = []
    for pivots in combinations(range(r), k):
        pivot_set = set(pivots)
        # free slots: to the right of the row's pivot, in non-pivot columns
        free = [
            (i, j)
            for i in range(k)
            for j in range(pivots[i] + 1, r)
            if j not in pivot_set
        ]
        for values in product(range(p), repeat=len(free)):
            rows = [[0] * r for _ in range(k)]
            for i, c in enumerate(pivots):
                rows[i][c] = 1
            for (i, j), v in zip(free, values):
                rows[i][j] = v
            out.append(Subspace(r, tuple(tuple(row) for row in rows)))
    out.sort(key=lambda s: s.rows)
    return out


def smith_normal_form(matrix) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix.

    Returns min(m, n) nonnegative entries d1 | d2 | ... with zeros last.
    Elimination pivots on the minimal nonzero absolute value; everything is
    exact integer arithmetic (inputs here are tiny, at most 3 x 6).
    """
    a = [[int(x) for x in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    size = min(m, n)
    diag = []
    t = 0
    while t < size:
        # locate minimal nonzero |entry| in the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        a[t], a[bi] = a[bi], a[t]
        for row in a:
            row[t], row[bj] = row[bj], row[t]
        piv = a[t][t]
        dirty = False
        for i in range(t + 1, m):
            if a[i][t]:
                q = a[i][t] // piv
                for j in range(t, n):
                    a[i][j] -= q * a[t][j]
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            if a[t][j]:
                q = a[t][j] // piv
                for i in range(t, m):
                    a[i][j] -= q * a[i][t]
                if a[t][j]:
                    dirty = True
        if dirty:
            continue
        # pivot must divide the rest of the block for the divisibility chain
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % piv:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(t, n):
                a[t][j] += a[offender][j]
            continue
        diag.append(abs(piv))
        t += 1
    diag.extend([0] * (size - len(diag)))
    return diag


def hall_mobius(t: GroupType, p: int) -> int:
    """Mobius value mu(1, G) of a p-group of type ``t``.

    Zero unless the group is elementary abelian of rank n, in which case it
    is (-1)^n * p^(n(n-1)/2).  The trivial group gives 1.
    """
    if not t.is_elementary_abelian:
        return 0
    n = t.rank
    return (-1) ** n * p ** (n * (n - 1) // 2)


def _p_valuation(d: int, p: int) -> int:
    v = 0
    while d % p == 0:
        d //= p
        v += 1
    return v


def quotient_type(t: GroupType, subspace: Subspace, p: int) -> GroupType:
    """Type of G / E^ where E^ is the lift of a socle subspace E.

    Socle coordinate j lifts to p^(e_j - 1) times the j-th cyclic generator.
    The quotient is the cokernel of the integer matrix whose columns are the
    relation vectors p^(e_j) e_j together with the lifted basis vectors; its
    type is read off the p-valuations of the Smith normal form diagonal.
    One uniform algorithm covers every coincidence pattern among exponents.
    """
    r = t.rank
    if subspace.ambient != r or subspace.dim > r:
        raise InvalidSubspace(
            f"subspace of F_p^{subspace.ambient} (dim {subspace.dim}) "
            f"does not fit a rank-{r} group"
        )
    if r == 0:
        return GroupType((0, 0, 0))
    exps = t.exponents[:r]
    cols = []
    for j in range(r):
        col = [0] * r
        col[j] = p ** exps[j]
        cols.append(col)
    for row in subspace.rows:
        cols.append([row[j] * p ** (exps[j] - 1) for j in range(r)])
    matrix = [[cols[c][i] for c in range(len(cols))] for i in range(r)]
    diag = smith_normal_form(matrix)
    vals = sorted((_p_valuation(d, p) for d in diag if d), reverse=True)
    vals += [0] * (3 - len(vals))
    return GroupType(tuple(vals[:3]))


@dataclass(frozen=True)
class QuotientCensus:
    """Tally of quotient types over all socle subspaces of one dimension."""

    k: int
    entries: tuple[tuple[GroupType, int], ...]

    def as_dict(self) -> dict[GroupType, int]:
        return dict(self.entries)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.entries)


def _census_entries(counter: Counter) -> tuple[tuple[GroupType, int], ...]:
    return tuple(sorted(counter.items(), key=lambda item: item[0], reverse=True))


def quotient_type_census(t: GroupType, k: int, p: int) -> QuotientCensus:
    """Count quotient types over every k-dimensional socle subspace (rank-3 t)."""
    if t.rank != 3:
        raise ValueError(f"census requires a rank-3 type, got {t}")
    if k not in (1, 2):
        raise ValueError(f"census dimension must be 1 or 2, got {k}")
    counter = Counter(
        quotient_type(t, s, p) for s in enumerate_subspaces(3, k, p)
    )
    return QuotientCensus(k, _census_entries(counter))


def reference_census(t: GroupType, k: int, p: int) -> QuotientCensus:
    """Expected census from the maximal-subgroup classification.

    Quotients by order-p subgroups: p^2 drop the smallest exponent, p the
    middle one, 1 the largest; by order-p^2 subgroups: complementarily.
    When exponents coincide the classified types merge under normalization.
    """
    if t.rank != 3:
        raise ValueError(f"census requires a rank-3 type, got {t}")
    e1, e2, e3 = t.exponents
    if k == 1:
        parts = [
            (normalize((e1, e2, e3 - 1)), p * p),
            (normalize((e1, e2 - 1, e3)), p),
            (normalize((e1 - 1, e2, e3)), 1),
        ]
    elif k == 2:
        parts = [
            (normalize((e1, e2 - 1, e3 - 1)), p * p),
            (normalize((e1 - 1, e2, e3 - 1)), p),
            (normalize((e1 - 1, e2 - 1, e3)), 1),
        ]
    else:
        raise ValueError(f"census dimension must be 1 or 2, got {k}")
    counter = Counter()
    for gt, count in parts:
        counter[gt] += count
    return QuotientCensus(k, _census_entries(counter))


def factorization_count_mobius(t: GroupType, p: int) -> int:
    """Factorization count as the Mobius-weighted sum over socle subspaces.

    Sums |L(G/E^)|^2 * mu(E) over all subspaces E of F_p^rank, where mu(E)
    depends only on dim E.  This recomputes the closed form structurally and
    must agree with it exactly.
    """
    r = t.rank
    total = 0
    count_cache: dict[GroupType, int] = {}
    for k in range(r + 1):
        weight = (-1) ** k * p ** (k * (k - 1) // 2)
        for subspace in enumerate_subspaces(r, k, p):
            qt = quotient_type(t, subspace, p)
            count = count_cache.get(qt)
            if count is None:
                count = _subgroup_count_value(qt, p)
                count_cache[qt] = count
            total += count * count * weight
    return total
