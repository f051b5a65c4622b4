"""Counting SL(2,Z) lift classes realized by K3 surfaces.

The per-record rule table keys on k = (torsion-free index) / 6 and the
torsion signature (e2, e3).  Lifts are counted, never materialized as
matrix groups; star configurations are face subsets up to automorphism.

Records are duck-typed: anything with e2, e3, genus, tf_code and
canonical_code (codes as hex strings) works, so this module does not
depend on the catalog layer.
"""

from collections import namedtuple

from .errors import IncompleteCatalog, OutOfRange
from .generate import EnumerationConstraints, enumerate_classes
from .hypermap import automorphism_group, canonical_code, from_code
from .torsion import expand_classes

LiftProfile = namedtuple("LiftProfile", "one_to_one two_to_one note")
LiftProfile.__new__.__defaults__ = (None,)

TotalsSummary = namedtuple(
    "TotalsSummary",
    "classes_by_index lifts_by_index total_classes total_lifts "
    "bijective_classes multi_classes multi_lifts")


def _decode(rec):
    return from_code(bytes.fromhex(rec.canonical_code))


def _tf_index(rec):
    return bytes.fromhex(rec.tf_code)[0]


def star_orbit_count(rec, parity, max_size):
    """Aut-orbits of face subsets with size <= max_size, size = parity mod 2.

    These are the inequivalent ways to place *-fibres on a torsion-free
    dessin; parity comes from 12 | (6k + 6 * #stars).
    """
    assert rec.e2 == 0 and rec.e3 == 0, "star placement lives on tf dessins"
    aut = automorphism_group(_decode(rec))
    nfaces = len(aut.faces)
    reps = 0
    for bits in range(1 << nfaces):
        subset = [i for i in range(nfaces) if bits >> i & 1]
        if len(subset) > max_size or len(subset) % 2 != parity:
            continue
        orbit_min = min(tuple(sorted(fa[i] for i in subset))
                        for fa in aut.face_action)
        if orbit_min == tuple(subset):
            reps += 1
    return reps


def face_orbit_count(rec):
    """Number of Aut-orbits of single faces of the record's own dessin."""
    aut = automorphism_group(_decode(rec))
    return sum(1 for i in range(len(aut.faces))
               if min(fa[i] for fa in aut.face_action) == i)


def lift_profile(rec):
    """(1:1 count, 2:1 count, note) of K3-realized lift classes."""
    if rec.genus > 0:
        raise OutOfRange(f"genus {rec.genus} group is never a K3 monodromy group")
    k6 = _tf_index(rec)
    if k6 > 24:
        raise OutOfRange(f"torsion-free index {k6} exceeds the K3 bound 24")
    assert k6 % 6 == 0, f"torsion-free index {k6} is not a multiple of 6"
    k = k6 // 6

    if rec.e2 > 0:
        # the unique lift is the full preimage (2-torsion forces -I)
        return LiftProfile(0, 1)
    if k == 4:
        note = None if rec.e3 == 0 else "kind not pinned down for e3 > 0"
        return LiftProfile(1, 0, note)
    if rec.e3 == 0:
        stars = star_orbit_count(rec, parity=k % 2, max_size=(24 - 6 * k) // 6)
        return LiftProfile(stars, 1)
    if k == 1:
        return LiftProfile({1: 2, 2: 1}[rec.e3], 1)
    if k == 2:
        if rec.e3 == 1:
            orbits = face_orbit_count(rec)
            assert orbits == 3, f"expected 3 face orbits, found {orbits}"
            return LiftProfile(orbits, 1)
        return LiftProfile({2: 1, 3: 0}[rec.e3], 1)
    assert k == 3
    return LiftProfile(1 if rec.e3 == 1 else 0, 1)


def lift_count(rec):
    """Total lift classes of one record, preferring stored counts."""
    one = getattr(rec, "lift_one_to_one", None)
    two = getattr(rec, "lift_two_to_one", None)
    if one is None or two is None:
        profile = lift_profile(rec)
        one, two = profile.one_to_one, profile.two_to_one
    return one + two


_TF_EXPANSION_COUNTS = {}


def _tf_expansion_counts(n):
    """{tf code hex: number of classes over it} for torsion-free index n."""
    if n not in _TF_EXPANSION_COUNTS:
        counts = {}
        for h in enumerate_classes(EnumerationConstraints(
                index=n, torsion_free=True, genus_filter=0)):
            counts[canonical_code(h).hex()] = len(expand_classes(h))
        _TF_EXPANSION_COUNTS[n] = counts
    return _TF_EXPANSION_COUNTS[n]


def totals(catalog):
    """Stratum and global lift totals over a complete K catalog.

    Completeness is re-derived, not trusted: every torsion-free class of
    index 6..24 is re-enumerated and its expansion count compared against
    the records present.
    """
    by_tf = {}
    for rec in catalog:
        if _tf_index(rec) not in (6, 12, 18, 24):
            raise IncompleteCatalog(
                f"record {rec.canonical_code[:8]}... retracts to index "
                f"{_tf_index(rec)}, outside 6..24")
        by_tf.setdefault(rec.tf_code, []).append(rec)

    for n in (6, 12, 18, 24):
        counts = _tf_expansion_counts(n)
        for code, want in counts.items():
            have = len(by_tf.get(code, ()))
            if have != want:
                raise IncompleteCatalog(
                    f"tf class {code[:8]}... at index {n} has {have} of "
                    f"{want} expansion records")
        stray = {c for c in by_tf if bytes.fromhex(c)[0] == n} - set(counts)
        if stray:
            raise IncompleteCatalog(
                f"{len(stray)} records at tf index {n} reference unknown tf classes")

    classes_by_index = {}
    lifts_by_index = {}
    bijective = multi_classes = multi_lifts = 0
    for rec in catalog:
        n = _tf_index(rec)
        count = lift_count(rec)
        classes_by_index[n] = classes_by_index.get(n, 0) + 1
        lifts_by_index[n] = lifts_by_index.get(n, 0) + count
        if count == 1:
            bijective += 1
        else:
            multi_classes += 1
            multi_lifts += count
    return TotalsSummary(classes_by_index, lifts_by_index,
                         sum(classes_by_index.values()),
                         sum(lifts_by_index.values()),
                         bijective, multi_classes, multi_lifts)
