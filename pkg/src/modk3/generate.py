"""Exhaustive enumeration of dessins up to isomorphism.

Two independent generators live here:

* enumerate_classes -- a backtracking search over partially built
  (sigma, alpha) pairs.  Fresh edge labels are always the smallest unused
  integer, so every isomorphism class at index n is reached exactly
  n / |Aut| times (once per root orbit); duplicates are squashed through
  canonical codes.
* brute_force_oracle -- for each involution cycle type, fix one alpha and
  run over every sigma of order dividing 3, keeping transitive pairs.
  Much slower, no shared machinery, used to cross-check the search.
"""

from dataclasses import dataclass

from .errors import ResourceBound
from .hypermap import (
    Hypermap, automorphism_group, canonical_code, from_code, subgroup_type,
)

ORACLE_MAX = 12


@dataclass(frozen=True)
class EnumerationConstraints:
    index: int | None = None
    genus_filter: int | None = None
    torsion_free: bool = False
    max_index: int | None = None


def _search(n, torsion_free, emit):
    """Backtrack over canonically labeled partial (sigma, alpha) pairs.

    Invariant: labels 0..m-1 are introduced, labels grow by discovery, and
    the smallest introduced edge with an open slot is settled next --
    alpha first, then its sigma cycle.  Every leaf is connected because a
    fresh label is only ever attached to an introduced one.
    """
    sigma = [-1] * n
    alpha = [-1] * n

    def grow(m):
        p = -1
        for e in range(m):
            if alpha[e] < 0 or sigma[e] < 0:
                p = e
                break
        if p < 0:
            if m == n:
                emit(sigma, alpha)
            return

        if alpha[p] < 0:
            if not torsion_free:
                alpha[p] = p
                grow(m)
                alpha[p] = -1
            for q in range(p + 1, m):
                if alpha[q] < 0:
                    alpha[p] = q
                    alpha[q] = p
                    grow(m)
                    alpha[p] = alpha[q] = -1
            if m < n:
                alpha[p] = m
                alpha[m] = p
                grow(m + 1)
                alpha[p] = alpha[m] = -1
            return

        # close the sigma cycle at p: fixed point or a full 3-cycle (p x y)
        if not torsion_free:
            sigma[p] = p
            grow(m)
            sigma[p] = -1
        free = [e for e in range(m) if sigma[e] < 0 and e != p]
        for x in free:
            for y in free:
                if y != x:
                    sigma[p], sigma[x], sigma[y] = x, y, p
                    grow(m)
                    sigma[p] = sigma[x] = sigma[y] = -1
        if m < n:
            for x in free:
                sigma[p], sigma[x], sigma[m] = x, m, p
                grow(m + 1)
                sigma[p] = sigma[x] = sigma[m] = -1
                sigma[p], sigma[m], sigma[x] = m, x, p
                grow(m + 1)
                sigma[p] = sigma[x] = sigma[m] = -1
        if m + 1 < n:
            sigma[p], sigma[m], sigma[m + 1] = m, m + 1, p
            grow(m + 2)
            sigma[p] = sigma[m] = sigma[m + 1] = -1

    grow(1)


def _classes_at(n, genus_filter, torsion_free):
    """Canonical codes (and leaf tallies) of all classes at one index."""
    found = {}
    leaves = [0]

    def emit(sigma, alpha):
        h = Hypermap(sigma, alpha)
        if genus_filter is not None and subgroup_type(h).g != genus_filter:
            return
        leaves[0] += 1
        code = canonical_code(h)
        if code not in found:
            found[code] = None

    _search(n, torsion_free, emit)
    return sorted(found), leaves[0]


def enumerate_classes(constraints):
    """All conjugacy classes meeting the constraints, as sorted Hypermaps.

    Exactly one of index / max_index must be set; max_index walks every
    index from 1 up and concatenates.
    """
    c = constraints
    if (c.index is None) == (c.max_index is None):
        raise ValueError("set exactly one of index and max_index")
    indices = [c.index] if c.index is not None else range(1, c.max_index + 1)
    out = []
    for n in indices:
        if c.torsion_free and n % 6 != 0:
            continue
        codes, _ = _classes_at(n, c.genus_filter, c.torsion_free)
        out.extend(from_code(code) for code in codes)
    return out


def rooted_count(classes):
    """Number of rooted dessins (= subgroups, not classes): sum of n/|Aut|."""
    assert len({h.n for h in classes}) <= 1, "classes must share one index"
    total = 0
    for h in classes:
        total += h.n // automorphism_group(h).order
    return total


def search_leaf_count(constraints):
    """Leaves the backtracker emits; must equal rooted_count of the classes.

    Each subgroup is built exactly once (fresh labels are forced), so this
    tally double-checks the search against the automorphism bookkeeping.
    """
    c = constraints
    if c.index is None or c.max_index is not None:
        raise ValueError("search_leaf_count wants a single index")
    if c.torsion_free and c.index % 6 != 0:
        return 0
    _, leaves = _classes_at(c.index, c.genus_filter, c.torsion_free)
    return leaves


def _order3_perms(n, allow_fixed):
    """Yield every permutation of 0..n-1 with sigma^3 = id, as a list."""
    images = [-1] * n

    def rec(done):
        if done == n:
            yield images
            return
        p = images.index(-1)
        if allow_fixed:
            images[p] = p
            yield from rec(done + 1)
            images[p] = -1
        free = [e for e in range(p + 1, n) if images[e] < 0]
        for i, x in enumerate(free):
            for y in free[:i] + free[i + 1:]:
                images[p], images[x], images[y] = x, y, p
                yield from rec(done + 3)
                images[p] = images[x] = images[y] = -1

    yield from rec(0)


def _is_transitive(n, sigma, alpha):
    seen = [False] * n
    seen[0] = True
    todo = [0]
    count = 1
    while todo:
        e = todo.pop()
        for f in (sigma[e], alpha[e]):
            if not seen[f]:
                seen[f] = True
                count += 1
                todo.append(f)
    return count == n


def brute_force_oracle(n, genus_filter=None, torsion_free=False):
    """Classes at index n by brute force; canonical codes, sorted.

    For each number of 2-cycles in alpha, one representative involution is
    fixed (conjugating sigma by a relabeling moves any alpha to it) and
    every order-dividing-3 sigma runs through.  Honest but exponential;
    refuses n > ORACLE_MAX.
    """
    if n > ORACLE_MAX:
        raise ResourceBound(f"oracle stops at index {ORACLE_MAX}, asked for {n}")
    found = {}
    for two_cycles in range(n // 2 + 1):
        e2 = n - 2 * two_cycles
        if torsion_free and e2 > 0:
            continue
        alpha = list(range(n))
        for i in range(two_cycles):
            alpha[2 * i], alpha[2 * i + 1] = 2 * i + 1, 2 * i
        for sigma in _order3_perms(n, allow_fixed=not torsion_free):
            if not _is_transitive(n, sigma, alpha):
                continue
            h = Hypermap(sigma, alpha)
            if genus_filter is not None and subgroup_type(h).g != genus_filter:
                continue
            code = canonical_code(h)
            if code not in found:
                found[code] = None
    return sorted(found)
