"""Persistent catalog records, JSONL round trip, reports, DOT export.

One JSON object per line, fields in a fixed order, values all derivable
from the canonical code -- the rest of the record is denormalized for
grep-ability and is cross-checked on read.  IDs are human-facing:
cusp-width partition plus a letter counting classes with that partition
in canonical-code order ("4,1,1-A").
"""

import json
from dataclasses import dataclass, field, replace

from .errors import NotTransitive, OrderViolation, ParseError, ValidationError
from .generate import EnumerationConstraints, enumerate_classes
from .hypermap import (
    automorphism_group, canonical_code, cusp_widths, cycles, from_code,
    loop_count, subgroup_type, validate,
)
from .lifts import lift_profile, totals
from .torsion import burnside_count, expand_classes, tf_retract

FIELDS = ("id", "canonical_code", "index", "genus", "h", "e2", "e3",
          "cusp_widths", "aut_order", "loop_count", "tf_code", "assignment",
          "lift_one_to_one", "lift_two_to_one")


@dataclass
class DessinRecord:
    id: str
    canonical_code: str
    index: int
    genus: int
    h: int
    e2: int
    e3: int
    cusp_widths: list
    aut_order: int
    loop_count: int
    tf_code: str
    assignment: dict
    lift_one_to_one: int = None
    lift_two_to_one: int = None
    extra: dict = field(default_factory=dict)    # lax-mode passthrough


def record_from_hypermap(h, tf_code=None):
    """Build an (id-less) record; tf_code is computed unless supplied."""
    t = subgroup_type(h)
    if tf_code is None:
        tf_code = canonical_code(tf_retract(h)).hex()
    return DessinRecord(
        id=None,
        canonical_code=canonical_code(h).hex(),
        index=t.n, genus=t.g, h=t.h, e2=t.e2, e3=t.e3,
        cusp_widths=list(cusp_widths(h)),
        aut_order=automorphism_group(h).order,
        loop_count=loop_count(h),
        tf_code=tf_code,
        assignment={"white": t.e3, "black": t.e2})


def _letters(i):
    """0 -> A, 25 -> Z, 26 -> AA, ... (bijective base 26)."""
    out = ""
    i += 1
    while i:
        i, r = divmod(i - 1, 26)
        out = chr(ord("A") + r) + out
    return out


def assign_ids(records):
    """Sort by canonical code and hand out partition-plus-letter ids."""
    records.sort(key=lambda r: r.canonical_code)
    counter = {}
    for rec in records:
        label = ",".join(str(w) for w in rec.cusp_widths)
        counter[label] = counter.get(label, 0) + 1
        rec.id = f"{label}-{_letters(counter[label] - 1)}"
    return records


# ----------------------------------------------------------------- JSONL io

def record_to_json(rec):
    obj = {name: getattr(rec, name) for name in FIELDS}
    obj.update(rec.extra)
    return json.dumps(obj, separators=(",", ":"))


_INT_FIELDS = ("index", "genus", "h", "e2", "e3", "aut_order", "loop_count")


def _parse_record(obj, lineno, strict):
    if not isinstance(obj, dict):
        raise ParseError(f"line {lineno}: record is not a JSON object")
    unknown = [k for k in obj if k not in FIELDS]
    if unknown and strict:
        raise ParseError(f"line {lineno}: unknown field {unknown[0]!r}")
    missing = [k for k in FIELDS if k not in obj]
    if missing:
        raise ParseError(f"line {lineno}: missing field {missing[0]!r}")

    def want(name, ok, desc):
        if not ok:
            raise ParseError(f"line {lineno}: field {name!r} is not {desc}")

    for name in _INT_FIELDS:
        want(name, isinstance(obj[name], int) and not isinstance(obj[name], bool),
             "an integer")
    for name in ("id", "canonical_code", "tf_code"):
        want(name, isinstance(obj[name], str), "a string")
    want("cusp_widths", isinstance(obj["cusp_widths"], list)
         and all(isinstance(w, int) and not isinstance(w, bool)
                 for w in obj["cusp_widths"]), "a list of integers")
    want("assignment", isinstance(obj["assignment"], dict)
         and sorted(obj["assignment"]) == ["black", "white"]
         and all(isinstance(v, int) and not isinstance(v, bool)
                 for v in obj["assignment"].values()),
         "a {white, black} count object")
    for name in ("lift_one_to_one", "lift_two_to_one"):
        v = obj[name]
        want(name, v is None or (isinstance(v, int) and not isinstance(v, bool)),
             "an integer or null")
    return DessinRecord(**{name: obj[name] for name in FIELDS},
                        extra={k: obj[k] for k in unknown})


def validate_record(rec):
    """Cross-check every derived field against the canonical code."""
    def bad(msg):
        raise ValidationError(f"record {rec.id or rec.canonical_code[:8]}: {msg}")

    try:
        code = bytes.fromhex(rec.canonical_code)
    except ValueError:
        bad("canonical_code is not hex")
    if not code or len(code) != 1 + 2 * code[0]:
        bad(f"canonical_code length {len(code)} does not fit its index byte")
    if code[0] != rec.index:
        bad(f"code says index {code[0]}, record says {rec.index}")
    try:
        h = validate(from_code(code))
    except (OrderViolation, NotTransitive) as exc:
        bad(f"code does not decode to a dessin ({exc})")
    t = subgroup_type(h)
    if (t.n, t.g, t.h, t.e2, t.e3) != (rec.index, rec.genus, rec.h, rec.e2, rec.e3):
        bad(f"type mismatch: code gives {tuple(t)}")
    if list(cusp_widths(h)) != list(rec.cusp_widths):
        bad("cusp widths do not match the code")
    if automorphism_group(h).order != rec.aut_order:
        bad("aut_order does not match the code")
    if loop_count(h) != rec.loop_count:
        bad("loop_count does not match the code")
    if (rec.index - rec.e2) % 2 or (rec.index - rec.e3) % 3:
        bad("torsion congruences violated")
    try:
        tf_code = bytes.fromhex(rec.tf_code)
    except ValueError:
        bad("tf_code is not hex")
    if not tf_code or rec.index + 3 * rec.e2 + 2 * rec.e3 != tf_code[0]:
        bad(f"index identity fails: {rec.index} + 3*{rec.e2} + 2*{rec.e3} "
            f"!= tf index")
    if canonical_code(tf_retract(h)) != tf_code:
        bad("tf_code is not the retraction's canonical code")
    if rec.assignment != {"white": rec.e3, "black": rec.e2}:
        bad("assignment counts disagree with (e3, e2)")
    for name in ("lift_one_to_one", "lift_two_to_one"):
        v = getattr(rec, name)
        if v is not None and v < 0:
            bad(f"{name} is negative")
    if rec.lift_two_to_one is not None and rec.lift_two_to_one > 1:
        bad("lift_two_to_one exceeds 1 (the full preimage is unique)")
    return rec


def read_records(path, strict=True):
    """Parse a JSONL catalog; strict mode rejects unknown fields."""
    records = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"line {lineno}: invalid JSON ({exc.msg})")
            rec = _parse_record(obj, lineno, strict)
            try:
                validate_record(rec)
            except ValidationError as exc:
                raise ValidationError(f"line {lineno}: {exc}")
            records.append(rec)
    return records


def write_records(path, records):
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(record_to_json(rec) + "\n")


# ------------------------------------------------------------ catalog build

def enumerate_records(constraints):
    records = [record_from_hypermap(h) for h in enumerate_classes(constraints)]
    return assign_ids(records)


def expand_records(tf_records):
    """K-stratum records over torsion-free inputs (which must be tf, genus 0)."""
    out = []
    for rec in tf_records:
        if rec.e2 or rec.e3 or rec.genus:
            raise ValidationError(
                f"record {rec.id}: expansion input must be torsion-free genus 0")
        h = from_code(bytes.fromhex(rec.canonical_code))
        for _, sub in expand_classes(h):
            out.append(record_from_hypermap(sub, tf_code=rec.canonical_code))
    return assign_ids(out)


def add_lift_fields(records):
    for rec in records:
        profile = lift_profile(rec)
        rec.lift_one_to_one = profile.one_to_one
        rec.lift_two_to_one = profile.two_to_one
    return records


_FULL_CATALOG = []


def full_catalog():
    """The complete K catalog with lift counts, memoized per process."""
    if not _FULL_CATALOG:
        records = []
        for n in (6, 12, 18, 24):
            tf = enumerate_records(EnumerationConstraints(
                index=n, torsion_free=True, genus_filter=0))
            records.extend(add_lift_fields(expand_records(tf)))
        _FULL_CATALOG.extend(assign_ids(records))
    return [replace(rec) for rec in _FULL_CATALOG]


# ------------------------------------------------------------------ reports

def group_label(elements):
    """Name the automorphism group from its elements (tiny orders only)."""
    order = len(elements)
    if order in (1, 2, 3):
        return ("trivial", "Z/2", "Z/3")[order - 1]

    def element_order(psi):
        k, acc = 1, psi
        ident = tuple(range(len(psi)))
        while acc != ident:
            acc = tuple(psi[x] for x in acc)
            k += 1
        return k

    orders = sorted(element_order(psi) for psi in elements)
    if order == 4:
        return "Z/4" if 4 in orders else "Z/2xZ/2"
    if order == 6:
        return "Z/6" if 6 in orders else "S3"
    if order == 12 and max(orders) == 3:
        return "A4"
    return f"order-{order}"


def _tf_index_of(rec):
    return bytes.fromhex(rec.tf_code)[0]


def _partition(rec):
    return ",".join(str(w) for w in rec.cusp_widths)


def _lift_pair(rec):
    if rec.lift_one_to_one is None or rec.lift_two_to_one is None:
        p = lift_profile(rec)
        return p.one_to_one, p.two_to_one
    return rec.lift_one_to_one, rec.lift_two_to_one


def report_tf_counts(records):
    """Class and subgroup counts of the torsion-free records per index."""
    rows = {}
    for rec in records:
        if rec.e2 == 0 and rec.e3 == 0 and rec.genus == 0:
            classes, rooted = rows.get(rec.index, (0, 0))
            rows[rec.index] = (classes + 1, rooted + rec.index // rec.aut_order)
    lines = ["index  classes  subgroups"]
    for n in sorted(rows):
        classes, rooted = rows[n]
        lines.append(f"{n:5d}  {classes:7d}  {rooted:9d}")
    return lines


def report_k6(records):
    """Every class retracting to index 6, with its lift counts."""
    rows = [r for r in records if _tf_index_of(r) == 6]
    rows.sort(key=lambda r: r.canonical_code)
    lines = ["id       type (n;g,h,e2,e3)   widths   1:1  2:1"]
    for r in rows:
        one, two = _lift_pair(r)
        t = f"({r.index};{r.genus},{r.h},{r.e2},{r.e3})"
        lines.append(f"{r.id:8s} {t:20s} {_partition(r):8s} {one:3d}  {two:3d}")
    total = sum(sum(_lift_pair(r)) for r in rows)
    lines.append(f"classes {len(rows)}  lifts {total}")
    return lines


def report_k12(records):
    """Torsion-class and lift counts per index-12 partition."""
    strata = {}
    for rec in records:
        if _tf_index_of(rec) == 12:
            strata.setdefault(rec.tf_code, []).append(rec)
    lines = ["partition  aut loops  e2>0 e3=1 e3=2 e3=3   1:1  2:1"]
    col = [0] * 6
    order = sorted(strata, key=lambda c: [r for r in strata[c]
                                          if r.canonical_code == c][0].cusp_widths)
    for code in order:
        group = strata[code]
        tf = next(r for r in group if r.canonical_code == code)
        e2pos = sum(1 for r in group if r.e2 > 0)
        e3c = {k: sum(1 for r in group if r.e2 == 0 and r.e3 == k)
               for k in (1, 2, 3)}
        one = sum(_lift_pair(r)[0] for r in group)
        two = sum(_lift_pair(r)[1] for r in group)
        col = [c + v for c, v in
               zip(col, (e2pos, e3c[1], e3c[2], e3c[3], one, two))]
        lines.append(f"{_partition(tf):10s} {tf.aut_order:3d} {tf.loop_count:5d}"
                     f"  {e2pos:4d} {e3c[1]:4d} {e3c[2]:4d} {e3c[3]:4d}"
                     f"  {one:4d} {two:4d}")
    lines.append(f"{'totals':10s} {'':3s} {'':5s}  {col[0]:4d} {col[1]:4d}"
                 f" {col[2]:4d} {col[3]:4d}  {col[4]:4d} {col[5]:4d}")
    return lines


def report_k18(records):
    """Class counts per index-18 partition bucketed by torsion signature."""
    strata = {}
    for rec in records:
        if _tf_index_of(rec) == 18:
            strata.setdefault(rec.tf_code, []).append(rec)
    buckets = {}
    for code, group in strata.items():
        tf = next(r for r in group if r.canonical_code == code)
        key = _partition(tf)
        b = buckets.setdefault(key, [0, 0, 0, 0])
        b[0] += 1
        b[1] += sum(1 for r in group if r.e2 > 0)
        b[2] += sum(1 for r in group if r.e2 == 0 and r.e3 == 1)
        b[3] += sum(1 for r in group if r.e2 == 0 and r.e3 >= 2)
    lines = ["partition       tf  e2>0  e3=1  e3>=2"]
    tot = [0, 0, 0, 0]
    for key in sorted(buckets, key=lambda k: [int(x) for x in k.split(",")]):
        b = buckets[key]
        tot = [a + x for a, x in zip(tot, b)]
        lines.append(f"{key:14s} {b[0]:3d} {b[1]:5d} {b[2]:5d} {b[3]:6d}")
    lines.append(f"{'totals':14s} {tot[0]:3d} {tot[1]:5d} {tot[2]:5d} {tot[3]:6d}")
    return lines


def report_k24(records):
    """Index-24 tf graphs by loop count and symmetry, with Burnside factors."""
    rows = {}
    for rec in records:
        if _tf_index_of(rec) != 24 or rec.e2 or rec.e3:
            continue
        h = from_code(bytes.fromhex(rec.canonical_code))
        aut = automorphism_group(h)
        label = "any" if rec.loop_count == 0 else group_label(aut.elements)
        mult = burnside_count(aut.loop_action, 3)
        key = (rec.loop_count, label)
        count, seen_mult = rows.get(key, (0, mult))
        assert seen_mult == mult, "one symmetry bucket, two mult factors"
        rows[key] = (count + 1, mult)
    lines = ["loops  symmetry  graphs  mult  classes"]
    total = 0
    for loops_, label in sorted(rows, key=lambda k: (k[0], -rows[k][1])):
        count, mult = rows[(loops_, label)]
        total += count * mult
        lines.append(f"{loops_:5d}  {label:8s}  {count:6d}  {mult:4d}  {count * mult:7d}")
    lines.append(f"stratum total {total}")
    return lines


def report_k24sym(records):
    """The loopy symmetric index-24 tf dessins with their partitions."""
    picks = []
    for rec in records:
        if (_tf_index_of(rec) == 24 and rec.e2 == 0 and rec.e3 == 0
                and rec.loop_count > 0 and rec.aut_order > 1):
            h = from_code(bytes.fromhex(rec.canonical_code))
            label = group_label(automorphism_group(h).elements)
            picks.append((rec, label))
    lines = ["symmetry  loops  partition"]
    order = {"Z/2": 0, "Z/3": 1, "Z/2xZ/2": 2, "Z/4": 3}
    picks.sort(key=lambda p: (order.get(p[1], 9), p[0].loop_count,
                              p[0].cusp_widths))
    for rec, label in picks:
        lines.append(f"{label:8s}  {rec.loop_count:5d}  {_partition(rec)}")
    lines.append(f"total {len(picks)}")
    return lines


def report_totals(records):
    summary = totals(records)
    lines = ["stratum  classes  lifts"]
    for n in (6, 12, 18, 24):
        lines.append(f"{n:7d}  {summary.classes_by_index.get(n, 0):7d}"
                     f"  {summary.lifts_by_index.get(n, 0):5d}")
    lines.append(f"total classes {summary.total_classes}")
    lines.append(f"total lifts {summary.total_lifts}")
    lines.append(f"bijective {summary.bijective_classes}")
    lines.append(f"multi-lift classes {summary.multi_classes} "
                 f"carrying {summary.multi_lifts} lifts")
    return lines


REPORTS = {"tf-counts": report_tf_counts, "k6": report_k6, "k12": report_k12,
           "k18": report_k18, "k24": report_k24, "k24sym": report_k24sym,
           "totals": report_totals}


# ---------------------------------------------------------------- dot export

def export_dot(records, rec_id):
    """DOT source for one record's dessin (white circles, black discs)."""
    matches = [r for r in records if r.id == rec_id]
    if not matches:
        raise ValidationError(f"no record with id {rec_id!r}")
    rec = matches[0]
    h = from_code(bytes.fromhex(rec.canonical_code))
    width_of = {}
    for face in cycles(h.phi()):
        for e in face:
            width_of[e] = len(face)
    lines = [f'graph "{rec.id}" {{',
             f'  label="{rec.id}  widths=({_partition(rec)})";']
    white_of = {}
    for i, cyc in enumerate(cycles(h.sigma)):
        lines.append(f"  w{i} [shape=circle];")
        for e in cyc:
            white_of[e] = i
    black_of = {}
    for i, cyc in enumerate(cycles(h.alpha)):
        lines.append(f"  b{i} [shape=circle, style=filled, fillcolor=black];")
        for e in cyc:
            black_of[e] = i
    for e in range(h.n):
        lines.append(f'  w{white_of[e]} -- b{black_of[e]} '
                     f'[label="{width_of[e]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -------------------------------------------------------------- deep verify

def verify_records(records, samples=1000):
    """Re-derive every record and run the matrix-level spot checks.

    Raises ValidationError on the first failure; returns a summary line.
    """
    import random

    from .hypermap import cycle_type
    from .slwords import coset_action, eval_word, random_sl2, word_of_matrix

    for rec in records:
        validate_record(rec)
        code = bytes.fromhex(rec.canonical_code)
        h = from_code(code)
        if canonical_code(h) != code:
            raise ValidationError(f"record {rec.id}: code is not canonical")
        perm_s, perm_t = coset_action(h)
        e2 = sum(1 for e in range(h.n) if perm_s[e] == e)
        e3 = sum(1 for e in range(h.n) if h.sigma[e] == e)
        if (e2, e3) != (rec.e2, rec.e3):
            raise ValidationError(f"record {rec.id}: torsion statistics "
                                  f"disagree with the coset action")
        if list(cycle_type(perm_t)) != list(rec.cusp_widths):
            raise ValidationError(f"record {rec.id}: translation cycle type "
                                  f"disagrees with cusp widths")

    rng = random.Random(20)
    for _ in range(samples):
        m = random_sl2(rng)
        word, sign = word_of_matrix(m)
        got = eval_word(word)
        if (got.a, got.b, got.c, got.d) != (sign * m.a, sign * m.b,
                                            sign * m.c, sign * m.d):
            raise ValidationError(f"word round trip failed on {m}")
    return f"verified {len(records)} records and {samples} matrix samples"
