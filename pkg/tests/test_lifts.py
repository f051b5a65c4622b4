"""Lift-profile rule table, star orbits, stratum bookkeeping."""

from collections import namedtuple

from modk3.errors import IncompleteCatalog, OutOfRange
from modk3.generate import EnumerationConstraints, enumerate_classes
from modk3.hypermap import canonical_code, cusp_widths, subgroup_type
from modk3.lifts import (
    face_orbit_count, lift_count, lift_profile, star_orbit_count, totals,
)
from modk3.torsion import expand_classes

Rec = namedtuple("Rec", "e2 e3 genus tf_code canonical_code")


def rec_of(h, tf_h):
    t = subgroup_type(h)
    return Rec(t.e2, t.e3, t.g, canonical_code(tf_h).hex(),
               canonical_code(h).hex())


def tf_classes(n):
    return enumerate_classes(EnumerationConstraints(index=n, torsion_free=True,
                                                    genus_filter=0))


def stratum(n):
    """All records over the torsion-free classes of index n."""
    out = []
    for h in tf_classes(n):
        for _, sub in expand_classes(h):
            out.append(rec_of(sub, h))
    return out


def by_widths(n, widths):
    picks = [h for h in tf_classes(n) if cusp_widths(h) == widths]
    assert len(picks) == 1
    return picks[0]


def test_star_orbit_examples():
    assert star_orbit_count(rec_of(h := by_widths(12, (3, 3, 3, 3)), h), 0, 2) == 2
    assert star_orbit_count(rec_of(h := by_widths(6, (2, 2, 2)), h), 1, 3) == 2
    assert star_orbit_count(rec_of(h := by_widths(6, (4, 1, 1)), h), 1, 3) == 3


def test_star_orbits_index_twelve_row():
    want = {(3, 3, 3, 3): 2, (4, 4, 2, 2): 4, (5, 5, 1, 1): 5,
            (6, 3, 2, 1): 7, (8, 2, 1, 1): 5, (9, 1, 1, 1): 3}
    for h in tf_classes(12):
        assert star_orbit_count(rec_of(h, h), 0, 2) == want[cusp_widths(h)]


def test_lift_profile_examples():
    h = by_widths(12, (9, 1, 1, 1))
    assert lift_profile(rec_of(h, h))[:2] == (3, 1)
    # H1 is the k=1, e3=1 torsion class
    h411 = by_widths(6, (4, 1, 1))
    for _, sub in expand_classes(h411):
        t = subgroup_type(sub)
        if (t.e2, t.e3) == (0, 1):
            assert lift_profile(rec_of(sub, h411))[:2] == (2, 1)
        if t.e2 > 0:
            assert lift_profile(rec_of(sub, h411))[:2] == (0, 1)


def test_lift_profile_k24():
    h = tf_classes(24)[0]
    profile = lift_profile(rec_of(h, h))
    assert profile[:2] == (1, 0) and profile.note is None
    # torsion over an index-24 class still yields exactly one lift
    for _, sub in expand_classes(h):
        t = subgroup_type(sub)
        p = lift_profile(rec_of(sub, h))
        assert p.one_to_one + p.two_to_one == 1
        if t.e2 == 0 and t.e3 > 0:
            assert p.note is not None


def test_k2_e3_one_face_orbits():
    # all four (e2=0, e3=1) classes over index 12 have exactly 3 face orbits
    seen = 0
    for h in tf_classes(12):
        for _, sub in expand_classes(h):
            t = subgroup_type(sub)
            if (t.e2, t.e3) == (0, 1):
                r = rec_of(sub, h)
                assert face_orbit_count(r) == 3
                assert lift_profile(r)[:2] == (3, 1)
                seen += 1
    assert seen == 4


def test_stratum_six():
    recs = stratum(6)
    assert len(recs) == 6
    assert sum(lift_count(r) for r in recs) == 14
    profiles = sorted(lift_profile(r)[:2] for r in recs)
    assert profiles == [(0, 1), (0, 1), (1, 1), (2, 1), (2, 1), (3, 1)]


def test_stratum_twelve():
    recs = stratum(12)
    assert len(recs) == 28
    assert sum(lift_count(r) for r in recs) == 69
    assert sum(lift_profile(r).one_to_one for r in recs) == 41
    assert sum(lift_profile(r).two_to_one for r in recs) == 28


def test_out_of_range():
    h = tf_classes(6)[0]
    good = rec_of(h, h)
    try:
        lift_profile(good._replace(genus=1))
        assert False
    except OutOfRange:
        pass
    try:
        lift_profile(good._replace(tf_code=bytes([30]).hex()))
        assert False
    except OutOfRange:
        pass


def test_totals_rejects_foreign_records():
    h = tf_classes(6)[0]
    bad = rec_of(h, h)._replace(tf_code=bytes([30]).hex())
    try:
        totals([bad])
        assert False
    except IncompleteCatalog:
        pass


def test_totals_rejects_missing_expansions():
    recs = stratum(6)
    try:
        totals(recs[:-1])
        assert False
    except IncompleteCatalog:
        pass
    try:
        totals(recs)       # complete at 6 but the 12-stratum is absent
        assert False
    except IncompleteCatalog:
        pass
