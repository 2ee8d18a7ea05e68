import pytest

from pgfactor.formulas import factorization_count, subgroup_count
from pgfactor.grouptype import GroupType
from pgfactor.mobius import hall_mobius
from pgfactor.oracle import (
    GroupTooLarge,
    NotComparable,
    _mobius_to_top,
    all_subgroups,
    build_group,
    count_factorizations,
    interval_size,
    mobius_interval,
    quotient_type_mod,
    subgroup_type,
    verify_hall,
    verify_inversion_forms,
)


def test_build_group_sizes():
    assert build_group(GroupType((1, 1, 0)), 2).order == 4
    assert build_group(GroupType((3, 2, 1)), 2).order == 64
    assert build_group(GroupType((0, 0, 0)), 5).order == 1


def test_build_group_identity_first():
    g = build_group(GroupType((2, 1, 0)), 3)
    assert g.elements[0] == (0, 0, 0)
    assert g.index[(0, 0, 0)] == 0


def test_build_group_cap():
    with pytest.raises(GroupTooLarge):
        build_group(GroupType((2, 2, 2)), 5, max_order=4096)
    # explicit override admits it in principle (not built here: too big to enumerate fast)
    assert build_group(GroupType((2, 2, 2)), 3, max_order=729).order == 729


def test_all_subgroups_klein_four():
    g = build_group(GroupType((1, 1, 0)), 2)
    assert len(all_subgroups(g)) == 5


def test_all_subgroups_cyclic_chain():
    g = build_group(GroupType((2, 0, 0)), 2)
    lat = all_subgroups(g)
    assert len(lat) == 3
    assert [s.order for s in lat.subgroups] == [1, 2, 4]


def test_all_subgroups_64():
    g = build_group(GroupType((3, 2, 1)), 2)
    assert len(all_subgroups(g)) == 81


@pytest.mark.parametrize("exps,p", [((2, 1, 0), 2), ((1, 1, 1), 2), ((2, 1, 1), 2), ((1, 1, 0), 3)])
def test_lattice_closed_under_meet_and_join(exps, p, lattice_cache):
    g, lat = lattice_cache(exps, p)
    masks = {s.members for s in lat.subgroups}
    order_of = {s.members: s.order for s in lat.subgroups}
    for a in lat.subgroups:
        for b in lat.subgroups:
            meet = a.members & b.members
            assert meet in masks
            target = a.order * b.order // order_of[meet]
            join_candidates = [
                m for m in masks if order_of[m] == target and (a.members | b.members) & ~m == 0
            ]
            assert len(join_candidates) == 1


def test_lattice_ids_sorted_and_bounded(lattice_cache):
    g, lat = lattice_cache((2, 2, 1), 2)
    orders = [s.order for s in lat.subgroups]
    assert orders == sorted(orders)
    assert lat.bottom.order == 1
    assert lat.top.order == g.order
    assert all(s.id == i for i, s in enumerate(lat.subgroups))


def test_subgroup_type_whole_socle_trivial(lattice_cache):
    g, lat = lattice_cache((3, 2, 1), 2)
    assert subgroup_type(g, lat.top) == GroupType((3, 2, 1))
    assert subgroup_type(g, lat.bottom) == GroupType((0, 0, 0))
    socle = [s for s in lat.subgroups if s.order == 8 and subgroup_type(g, s) == GroupType((1, 1, 1))]
    assert len(socle) == 1  # the unique elementary abelian subgroup of order p^3


def test_subgroup_type_census_consistency(lattice_cache):
    # every subgroup's own subgroup count must match the closed form
    g, lat = lattice_cache((2, 2, 1), 2)
    for H in lat.subgroups:
        t = subgroup_type(g, H)
        assert lat.below[H.id].bit_count() == subgroup_count(t, g.p).value


def test_count_factorizations_klein_four(lattice_cache):
    g, lat = lattice_cache((1, 1, 0), 2)
    # 9 ordered pairs involving the whole group plus 6 ordered pairs of
    # distinct lines: p^2 + 3p + 5 at p = 2
    assert count_factorizations(g, lat) == 15


def test_count_factorizations_cyclic(lattice_cache):
    g, lat = lattice_cache((3, 0, 0), 2)
    assert count_factorizations(g, lat) == 7


def test_count_factorizations_64(lattice_cache):
    g, lat = lattice_cache((3, 2, 1), 2)
    assert count_factorizations(g, lat) == 1635


def test_count_factorizations_ordered_pairs_definition(lattice_cache):
    # independent re-count with an explicit double loop over ordered pairs
    g, lat = lattice_cache((2, 1, 0), 3)
    subs = lat.subgroups
    direct = sum(
        1
        for a in subs
        for b in subs
        if a.order * b.order == g.order * (a.members & b.members).bit_count()
    )
    assert direct == count_factorizations(g, lat)


def test_interval_size(lattice_cache):
    g, lat = lattice_cache((3, 2, 1), 2)
    assert interval_size(lat, lat.top) == 1
    assert interval_size(lat, lat.bottom) == len(lat)
    (socle,) = [
        s for s in lat.subgroups if s.order == 8 and subgroup_type(g, s) == GroupType((1, 1, 1))
    ]
    assert interval_size(lat, socle) == subgroup_count(GroupType((2, 1, 0)), 2).value


def test_mobius_interval_reflexive_and_chain(lattice_cache):
    g, lat = lattice_cache((2, 0, 0), 3)
    b, mid, top = lat.subgroups
    assert mobius_interval(lat, b, b) == 1
    assert mobius_interval(lat, b, mid) == -1
    assert mobius_interval(lat, b, top) == 0  # chain of length 2


def test_mobius_interval_socle(lattice_cache):
    g, lat = lattice_cache((3, 2, 1), 2)
    (socle,) = [
        s for s in lat.subgroups if s.order == 8 and subgroup_type(g, s) == GroupType((1, 1, 1))
    ]
    assert mobius_interval(lat, lat.bottom, socle) == -8


def test_mobius_interval_not_comparable(lattice_cache):
    g, lat = lattice_cache((1, 1, 0), 2)
    lines = [s for s in lat.subgroups if s.order == 2]
    with pytest.raises(NotComparable):
        mobius_interval(lat, lines[0], lines[1])


def test_mobius_to_top_matches_recursive(lattice_cache):
    g, lat = lattice_cache((2, 2, 1), 2)
    mu = _mobius_to_top(lat)
    for H in lat.subgroups:
        assert mu[H.id] == mobius_interval(lat, H, lat.top)


@pytest.mark.parametrize(
    "exps,p",
    [((3, 2, 1), 2), ((1, 1, 0), 2), ((1, 1, 1), 3), ((2, 0, 0), 2), ((3, 0, 0), 3), ((2, 2, 1), 2)],
)
def test_verify_hall_passes(exps, p, lattice_cache):
    g, lat = lattice_cache(exps, p)
    report = verify_hall(g, lat)
    assert report.overall, [c for c in report.checks if c.status == "fail"]


def test_hall_values_spotchecks(lattice_cache):
    g, lat = lattice_cache((1, 1, 0), 2)
    assert mobius_interval(lat, lat.bottom, lat.top) == 2  # (-1)^2 * 2^1
    g, lat = lattice_cache((2, 0, 0), 2)
    assert mobius_interval(lat, lat.bottom, lat.top) == 0  # not elementary abelian


@pytest.mark.parametrize(
    "exps,p,expected",
    [((1, 1, 0), 2, 15), ((3, 0, 0), 2, 7), ((3, 2, 1), 2, 1635)],
)
def test_verify_inversion_forms(exps, p, expected, lattice_cache):
    g, lat = lattice_cache(exps, p)
    report = verify_inversion_forms(g, lat)
    assert report.overall
    assert count_factorizations(g, lat) == expected


@pytest.mark.parametrize("exps,p", [((3, 2, 1), 2), ((2, 2, 1), 3), ((1, 1, 1), 3)])
def test_mobius_duality_through_quotients(exps, p, lattice_cache):
    # mu(H, G) must equal the closed-form Mobius value of the quotient type
    g, lat = lattice_cache(exps, p)
    mu = _mobius_to_top(lat)
    for H in lat.subgroups:
        assert mu[H.id] == hall_mobius(quotient_type_mod(g, H), p)


def test_quotient_type_mod_spotchecks(lattice_cache):
    g, lat = lattice_cache((3, 2, 1), 2)
    assert quotient_type_mod(g, lat.bottom) == GroupType((3, 2, 1))
    assert quotient_type_mod(g, lat.top) == GroupType((0, 0, 0))
    (socle,) = [
        s for s in lat.subgroups if s.order == 8 and subgroup_type(g, s) == GroupType((1, 1, 1))
    ]
    assert quotient_type_mod(g, socle) == GroupType((2, 1, 0))


@pytest.mark.parametrize("exps,p", [((2, 2, 2), 2), ((3, 1, 1), 2), ((2, 1, 1), 3)])
def test_lattice_size_matches_closed_form(exps, p, lattice_cache):
    g, lat = lattice_cache(exps, p)
    assert len(lat) == subgroup_count(GroupType(exps), p).value


@pytest.mark.parametrize("exps,p", [((2, 2, 2), 2), ((3, 1, 1), 2), ((2, 1, 1), 3)])
def test_factorizations_match_closed_form(exps, p, lattice_cache):
    g, lat = lattice_cache(exps, p)
    assert count_factorizations(g, lat) == factorization_count(GroupType(exps), p).value
