"""Surgery between torsion and torsion-free dessins.

A width-1 face (loop) of a torsion-free dessin hangs off one sigma
3-cycle.  Cutting it off in one of two ways introduces an elliptic fixed
point; gluing gadgets back on removes them:

* White: delete the loop edge and its alpha partner, leaving the third
  edge of the 3-cycle as a sigma fixed point (order-3 torsion, 2 edges).
* Black: delete the whole 3-cycle, leaving the attachment's alpha partner
  as an alpha fixed point (order-2 torsion, 3 edges).

The inverse direction (tf_retract) plants a 2-edge gadget at every sigma
fixed point and a 3-edge gadget at every alpha fixed point.  Expanding a
torsion-free class means choosing Keep/White/Black per loop up to the
automorphism action on loops.
"""

import itertools
from collections import Counter, namedtuple

from .errors import DegenerateSubstitution, NotTransitive
from .hypermap import Hypermap, automorphism_group, validate

KEEP = "keep"
WHITE = "white"
BLACK = "black"

LoopSite = namedtuple("LoopSite", "fixed_edge partner attach attach_partner")


def loops(h):
    """LoopSites of all width-1 faces, ascending by fixed edge.

    The j-th site here is the j-th point of automorphism_group's
    loop_action -- both walk faces by smallest edge.
    """
    phi = h.phi()
    out = []
    for e in range(h.n):
        if phi[e] != e:
            continue
        partner = h.alpha[e]
        attach = h.sigma[e]
        # the loop must hang off a genuine 3-cycle: (e, attach, partner)
        assert partner != e and h.sigma[attach] == partner, \
            f"loop at edge {e} is not trivalent (torsion input?)"
        assert attach not in (e, partner)
        out.append(LoopSite(e, partner, attach, h.alpha[attach]))
    return out


def substitute(h_tf, assignment):
    """Apply one Keep/White/Black choice per loop, all at once.

    Deletion sets of distinct loops are disjoint (they sit in distinct
    sigma cycles), so simultaneous application equals any sequential
    order.  Raises DegenerateSubstitution when nothing survives or the
    survivors fall apart.
    """
    sites = loops(h_tf)
    assert len(assignment) == len(sites), "one choice per loop"
    dead = set()
    sigma_fix = set()
    alpha_fix = set()
    for site, choice in zip(sites, assignment):
        if choice == KEEP:
            continue
        if choice == WHITE:
            dead.update((site.fixed_edge, site.partner))
            sigma_fix.add(site.attach)
        elif choice == BLACK:
            dead.update((site.fixed_edge, site.partner, site.attach))
            alpha_fix.add(site.attach_partner)
        else:
            raise ValueError(f"unknown substitution {choice!r}")

    survivors = [e for e in range(h_tf.n) if e not in dead]
    if not survivors:
        raise DegenerateSubstitution("every edge was deleted")
    new = {e: i for i, e in enumerate(survivors)}
    sigma = [new[e] if e in sigma_fix else new[h_tf.sigma[e]] for e in survivors]
    alpha = [new[e] if e in alpha_fix else new[h_tf.alpha[e]] for e in survivors]
    result = Hypermap(sigma, alpha)
    try:
        validate(result)
    except NotTransitive:
        raise DegenerateSubstitution("substituted dessin is disconnected")
    return result


def tf_retract(h):
    """Plant gadgets at every fixed point; the unique tf dessin over h.

    Inverse to substitute: tf_retract(substitute(h_tf, a)) is isomorphic
    to h_tf for every valid assignment a.
    """
    sigma = list(h.sigma)
    alpha = list(h.alpha)
    sigma_fixed = [e for e in range(h.n) if sigma[e] == e]
    alpha_fixed = [e for e in range(h.n) if alpha[e] == e]
    n = h.n + 2 * len(sigma_fixed) + 3 * len(alpha_fixed)
    sigma.extend(range(h.n, n))
    alpha.extend(range(h.n, n))
    m = h.n
    for x in sigma_fixed:
        u, v = m, m + 1
        m += 2
        sigma[x], sigma[v], sigma[u] = v, u, x      # 3-cycle (x v u)
        alpha[u], alpha[v] = v, u                   # loop edge is u
    for y in alpha_fixed:
        a, e, p = m, m + 1, m + 2
        m += 3
        sigma[e], sigma[a], sigma[p] = a, p, e      # 3-cycle (e a p)
        alpha[e], alpha[p] = p, e                   # loop edge is e
        alpha[y], alpha[a] = a, y
    return validate(Hypermap(sigma, alpha))


def expand_classes(h_tf):
    """All torsion classes over one tf class: (assignment, dessin) pairs.

    One representative per Aut-orbit of valid assignments (the tuple that
    compares least within its orbit), all-Keep first.  Degenerate
    assignments are dropped.  The Aut action on loops is free on every
    dessin in range -- asserted, not assumed.
    """
    aut = automorphism_group(h_tf)
    L = len(aut.loops)
    for la in aut.loop_action[1:]:
        assert all(la[j] != j for j in range(L)), \
            "automorphism fixes a loop; expansion bookkeeping would break"

    out = []
    for a in itertools.product((KEEP, WHITE, BLACK), repeat=L):
        images = []
        for la in aut.loop_action:
            b = [None] * L
            for j in range(L):
                b[la[j]] = a[j]
            images.append(tuple(b))
        if a != min(images):
            continue
        try:
            out.append((a, substitute(h_tf, a)))
        except DegenerateSubstitution:
            pass
    return out


def burnside_count(loop_action, options_per_loop, restriction=None):
    """Orbits of per-loop option assignments under the given action.

    Plain Burnside: average of options^(#cycles) over the group.  With a
    restriction, only assignments passing restriction(counts) are counted,
    where counts is a Counter mapping option index -> number of loops
    carrying it; the restriction must depend on those counts alone (so it
    is automatically invariant).
    """
    group_order = len(loop_action)
    L = len(loop_action[0]) if loop_action else 0
    total = 0
    for la in loop_action:
        seen = [False] * L
        cycs = []
        for j in range(L):
            if seen[j]:
                continue
            size = 0
            k = j
            while not seen[k]:
                seen[k] = True
                size += 1
                k = la[k]
            cycs.append(size)
        if restriction is None:
            total += options_per_loop ** len(cycs)
            continue
        for choice in itertools.product(range(options_per_loop), repeat=len(cycs)):
            counts = Counter()
            for opt, size in zip(choice, cycs):
                counts[opt] += size
            if restriction(counts):
                total += 1
    assert total % group_order == 0, "Burnside sum must divide evenly"
    return total // group_order
