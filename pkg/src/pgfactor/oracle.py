"""Brute-force ground truth on explicit groups.

Builds the full element table of Z_{p^e1} x Z_{p^e2} x Z_{p^e3}, enumerates
every subgroup by join closure (seed with all cyclic subgroups, close under
pairwise sum), and checks the structural claims the fast routes rely on:
lattice Mobius values against the elementary-abelian closed form, and both
inversion identities against a direct count of factorizations.

Subgroups are membership bitmasks over the element index space, so meets,
joins and containment run on word-parallel integer ops.  This is a desk-scale
verification tool; a configurable order cap keeps accidental huge inputs out.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .grouptype import GroupType, normalize
from .mobius import hall_mobius

DEFAULT_MAX_ORDER = 4096


class GroupTooLarge(RuntimeError):
    """Requested group order exceeds the configured enumeration cap."""


class NotComparable(ValueError):
    """Mobius value requested for subgroups not related by containment."""


class ConcreteGroup:
    """Explicit abelian p-group with a deterministic lexicographic element index."""

    def __init__(self, gtype: GroupType, p: int, max_order: int = DEFAULT_MAX_ORDER):
        order = gtype.order(p)
        if order > max_order:
            raise GroupTooLarge(
                f"group of type {gtype} at p={p} has order {order} > cap {max_order}"
            )
        self.gtype = gtype
        self.p = p
        self.moduli = tuple(p**e for e in gtype)
        self.order = order
        self.elements = list(product(*(range(m) for m in self.moduli)))
        self.index = {e: i for i, e in enumerate(self.elements)}
        # exponent of each element: least k with p^k * x = 0
        self.elem_exp = [
            max(
                (e - _val(a, p, e) for a, e in zip(vec, gtype) if e > 0),
                default=0,
            )
            for vec in self.elements
        ]

    def add(self, i: int, j: int) -> int:
        a = self.elements[i]
        b = self.elements[j]
        return self.index[tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))]


def _val(a: int, p: int, cap: int) -> int:
    """p-adic valuation of a mod p^cap (zero counts as cap)."""
    if a == 0:
        return cap
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def build_group(t: GroupType, p: int, max_order: int = DEFAULT_MAX_ORDER) -> ConcreteGroup:
    return ConcreteGroup(t, p, max_order)


@dataclass(frozen=True)
class SubgroupSet:
    """One subgroup: membership bitmask over element indices plus a generator list."""

    id: int
    members: int
    order: int
    gens: tuple[int, ...]


@dataclass
class Lattice:
    """All subgroups of a ConcreteGroup with the containment order precomputed.

    ``below[i]`` / ``above[i]`` are bitmasks over subgroup ids.  Ids are
    assigned after sorting by (order, membership bitmask), so they are stable
    across runs; id 0 is the trivial subgroup and the last id is the group.
    """

    subgroups: list[SubgroupSet]
    below: list[int]
    above: list[int]
    _mobius_memo: dict = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.subgroups)

    @property
    def bottom(self) -> SubgroupSet:
        return self.subgroups[0]

    @property
    def top(self) -> SubgroupSet:
        return self.subgroups[-1]

    def leq(self, i: int, j: int) -> bool:
        return bool((self.above[i] >> j) & 1)


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _cyclic_subgroup(g: ConcreteGroup, x: int) -> tuple[int, list[int]]:
    mask = 1
    members = [0]
    cur = x
    while cur != 0:
        mask |= 1 << cur
        members.append(cur)
        cur = g.add(cur, x)
    return mask, members


def _extend_by_generator(g: ConcreteGroup, mask: int, members: list[int], gen: int):
    """Close a subgroup under one extra generator: union of translated copies."""
    base_mask = mask
    base = list(members)
    cur = gen
    while not (base_mask >> cur) & 1:
        for s in base:
            t = g.add(s, cur)
            if not (mask >> t) & 1:
                mask |= 1 << t
                members.append(t)
        cur = g.add(cur, gen)
    return mask, members


def all_subgroups(g: ConcreteGroup) -> Lattice:
    """Enumerate every subgroup by join closure over the cyclic seeds.

    For each pair the join's order is known up front (|A||B| / |A & B|), so
    an existing subgroup of that order containing A | B *is* the join; only
    genuinely new subgroups ever get materialized element by element.
    """
    seen = set()
    masks: list[int] = []
    orders: list[int] = []
    member_lists: list[list[int]] = []
    gens: list[tuple[int, ...]] = []
    by_order: dict[int, list[int]] = {}

    def register(mask, members, gen_tuple):
        seen.add(mask)
        masks.append(mask)
        orders.append(len(members))
        member_lists.append(members)
        gens.append(gen_tuple)
        by_order.setdefault(len(members), []).append(mask)

    for x in range(g.order):
        mask, members = _cyclic_subgroup(g, x)
        if mask not in seen:
            register(mask, members, (x,) if x else ())

    i = 1
    while i < len(masks):
        mi, oi = masks[i], orders[i]
        for j in range(i):
            mj, oj = masks[j], orders[j]
            union = mi | mj
            if union == mi or union == mj:
                continue
            target = oi * oj // (mi & mj).bit_count()
            found = False
            for candidate in by_order.get(target, ()):
                if union & ~candidate == 0:
                    found = True
                    break
            if found:
                continue
            big, small = (i, j) if oi >= oj else (j, i)
            mask = masks[big]
            members = list(member_lists[big])
            used = []
            for gen in gens[small]:
                if not (mask >> gen) & 1:
                    mask, members = _extend_by_generator(g, mask, members, gen)
                    used.append(gen)
            register(mask, members, gens[big] + tuple(used))
        i += 1

    order_ids = sorted(range(len(masks)), key=lambda k: (orders[k], masks[k]))
    subgroups = [
        SubgroupSet(new_id, masks[k], orders[k], gens[k])
        for new_id, k in enumerate(order_ids)
    ]
    n = len(subgroups)
    below = [0] * n
    above = [0] * n
    for a in range(n):
        ma = subgroups[a].members
        below[a] |= 1 << a
        above[a] |= 1 << a
        for b in range(a + 1, n):
            if ma & ~subgroups[b].members == 0:
                below[b] |= 1 << a
                above[a] |= 1 << b
    return Lattice(subgroups, below, above)


def subgroup_type(g: ConcreteGroup, H: SubgroupSet) -> GroupType:
    """Isomorphism type of a subgroup from its order census.

    Counting members killed by each power of p gives the conjugate partition
    (the k-th difference of log_p counts is the number of cyclic factors of
    exponent >= k); conjugating back yields the type.
    """
    max_e = g.gtype[0]
    tally = [0] * (max_e + 1)
    for idx in _iter_bits(H.members):
        tally[g.elem_exp[idx]] += 1
    cumulative = 0
    logs = []
    for k in range(max_e + 1):
        cumulative += tally[k]
        logs.append(_exact_log(cumulative, g.p))
    conjugate = [logs[k] - logs[k - 1] for k in range(1, max_e + 1)]
    exps = [sum(1 for c in conjugate if c >= i) for i in range(1, 4)]
    return normalize(exps)


def _exact_log(n: int, p: int) -> int:
    e = 0
    while n > 1:
        n, r = divmod(n, p)
        assert r == 0, "subgroup order is not a p-power"
        e += 1
    return e


def quotient_type_mod(g: ConcreteGroup, H: SubgroupSet) -> GroupType:
    """Isomorphism type of G/H, via the same census applied to cosets."""
    max_e = g.gtype[0]
    hmask = H.members
    logs = []
    for k in range(max_e + 1):
        killed = 0
        pk = g.p**k
        for idx in range(g.order):
            vec = g.elements[idx]
            image = g.index[tuple((a * pk) % m for a, m in zip(vec, g.moduli))]
            if (hmask >> image) & 1:
                killed += 1
        logs.append(_exact_log(killed // H.order, g.p))
    conjugate = [logs[k] - logs[k - 1] for k in range(1, max_e + 1)]
    exps = [sum(1 for c in conjugate if c >= i) for i in range(1, 4)]
    return normalize(exps)


def count_factorizations(g: ConcreteGroup, lattice: Lattice) -> int:
    """Number of ordered pairs (H, K) with H + K = G.

    Uses the exact size identity |H + K| = |H| |K| / |H & K| (the sum of two
    subgroups is a subgroup here), so each pair is one AND plus a popcount.
    Internally cross-checks the ordered count against the unordered one.
    """
    subs = lattice.subgroups
    n = g.order
    total = 0
    unordered = 0
    diagonal = 0
    for i, a in enumerate(subs):
        for j in range(i, len(subs)):
            b = subs[j]
            if a.order * b.order == n * (a.members & b.members).bit_count():
                if i == j:
                    diagonal += 1
                    total += 1
                else:
                    total += 2
                unordered += 1
    assert total == 2 * unordered - diagonal
    return total


def interval_size(lattice: Lattice, H: SubgroupSet) -> int:
    """Number of subgroups K with H <= K <= G."""
    return lattice.above[H.id].bit_count()


def mobius_interval(lattice: Lattice, H: SubgroupSet, K: SubgroupSet) -> int:
    """Lattice Mobius value mu(H, K), memoized.

    Defined by mu(H, H) = 1 and sum of mu(H, L) over H <= L <= K vanishing
    for H < K.
    """
    if not lattice.leq(H.id, K.id):
        raise NotComparable(f"subgroup {H.id} is not contained in subgroup {K.id}")
    memo = lattice._mobius_memo
    subs = lattice.subgroups

    def mu(h: int, k: int) -> int:
        if h == k:
            return 1
        key = (h, k)
        cached = memo.get(key)
        if cached is not None:
            return cached
        acc = 0
        for mid in _iter_bits(lattice.above[h] & lattice.below[k]):
            if mid != k:
                acc += mu(h, mid)
        memo[key] = -acc
        return -acc

    return mu(H.id, K.id)


def _mobius_to_top(lattice: Lattice) -> list[int]:
    """mu(H, G) for every H at once, by the dual recursion over supersets.

    Equivalent to mobius_interval(lattice, H, top) but linear in the number
    of comparable pairs; the test suite checks the two against each other.
    """
    n = len(lattice.subgroups)
    mu = [0] * n
    mu[n - 1] = 1
    for h in range(n - 2, -1, -1):
        acc = 0
        for k in _iter_bits(lattice.above[h]):
            if k != h:
                acc += mu[k]
        mu[h] = -acc
    return mu


@dataclass
class CheckResult:
    name: str
    status: str
    expected: str
    actual: str


@dataclass
class VerificationReport:
    """Pass/fail record for one (type, p) instance across named checks."""

    gtype: GroupType
    p: int
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, expected, actual) -> bool:
        ok = expected == actual
        self.checks.append(
            CheckResult(name, "pass" if ok else "fail", str(expected), str(actual))
        )
        return ok

    @property
    def overall(self) -> bool:
        return all(c.status == "pass" for c in self.checks)


def verify_hall(g: ConcreteGroup, lattice: Lattice) -> VerificationReport:
    """Check mu(1, H) against the elementary-abelian closed form for every H.

    Non-elementary subgroups must give 0; elementary abelian ones of rank n
    must give (-1)^n p^(n(n-1)/2).  Mismatches are listed individually.
    """
    report = VerificationReport(g.gtype, g.p)
    bottom = lattice.bottom
    mismatches = 0
    for H in lattice.subgroups:
        expected = hall_mobius(subgroup_type(g, H), g.p)
        actual = mobius_interval(lattice, bottom, H)
        if expected != actual:
            mismatches += 1
            report.add(f"hall[id={H.id}]", expected, actual)
    report.add("hall_mismatches", 0, mismatches)
    return report


def verify_inversion_forms(g: ConcreteGroup, lattice: Lattice) -> VerificationReport:
    """Check both Mobius-inversion expressions against the direct count.

    S1 sums |L(H)|^2 mu(H, G); S2 sums |[H, G]|^2 mu(1, H) with mu taken
    from the closed form; both must equal the brute-force factorization
    count.
    """
    report = VerificationReport(g.gtype, g.p)
    mu_top = _mobius_to_top(lattice)
    s1 = 0
    s2 = 0
    for H in lattice.subgroups:
        s1 += lattice.below[H.id].bit_count() ** 2 * mu_top[H.id]
        s2 += interval_size(lattice, H) ** 2 * hall_mobius(subgroup_type(g, H), g.p)
    direct = count_factorizations(g, lattice)
    report.add("inversion_sum_subgroup_counts", direct, s1)
    report.add("inversion_sum_quotient_counts", direct, s2)
    return report
