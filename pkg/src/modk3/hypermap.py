"""Hypermaps (dessins) for the modular group.

A hypermap is a pair of permutations of the edge set {0..n-1}: sigma of
order dividing 3 (white vertices) and alpha of order dividing 2 (black
vertices), together generating a transitive group.  The face permutation is

    phi(e) = sigma(alpha(e))        # apply alpha, then sigma

and its cycle lengths are the cusp widths; width-1 faces are loops.  The
surgery code in torsion.py is written against this same convention, so it
must not be changed in isolation.

Permutations are tuples of images: p[i] is the image of i.
"""

from collections import namedtuple
from fractions import Fraction

from .errors import NotTransitive, OrderViolation


# ------------------------------------------------------------- permutations

def identity_perm(n):
    return tuple(range(n))


def compose(p, q):
    """(p*q)(x) = p(q(x)) -- q acts first."""
    return tuple(p[q[x]] for x in range(len(p)))


def inverse(p):
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def cycles(p):
    """Cycles of p, each starting at its smallest point, ordered by that point."""
    seen = [False] * len(p)
    out = []
    for x in range(len(p)):
        if seen[x]:
            continue
        cyc = [x]
        seen[x] = True
        y = p[x]
        while y != x:
            seen[y] = True
            cyc.append(y)
            y = p[y]
        out.append(tuple(cyc))
    return out


def cycle_type(p):
    """Descending multiset of cycle lengths."""
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def fixed_points(p):
    return [x for x in range(len(p)) if p[x] == x]


def perm_from_cycles(n, *cycs):
    """Permutation of 0..n-1 from cycle notation; omitted points are fixed."""
    images = list(range(n))
    for cyc in cycs:
        for i, x in enumerate(cyc):
            images[x] = cyc[(i + 1) % len(cyc)]
    return tuple(images)


# ----------------------------------------------------------------- hypermap

class Hypermap:
    """Immutable (sigma, alpha) pair; run validate() before trusting one."""

    __slots__ = ("n", "sigma", "alpha")

    def __init__(self, sigma, alpha):
        object.__setattr__(self, "sigma", tuple(sigma))
        object.__setattr__(self, "alpha", tuple(alpha))
        object.__setattr__(self, "n", len(self.sigma))

    def __setattr__(self, name, value):
        raise AttributeError("Hypermap is immutable")

    def phi(self):
        """Face permutation phi(e) = sigma(alpha(e))."""
        return tuple(self.sigma[self.alpha[e]] for e in range(self.n))

    def faces(self):
        return cycles(self.phi())

    def __eq__(self, other):
        return (isinstance(other, Hypermap)
                and self.sigma == other.sigma and self.alpha == other.alpha)

    def __hash__(self):
        return hash((self.sigma, self.alpha))

    def __repr__(self):
        return f"Hypermap(n={self.n}, sigma={self.sigma}, alpha={self.alpha})"


def validate(h):
    """Return h if sigma^3 = alpha^2 = id and the action is transitive."""
    n = h.n
    if len(h.alpha) != n:
        raise OrderViolation(f"sigma moves {n} points but alpha moves {len(h.alpha)}")
    if sorted(h.sigma) != list(range(n)) or sorted(h.alpha) != list(range(n)):
        raise OrderViolation("sigma and alpha must be permutations of 0..n-1")
    for e in range(n):
        if h.sigma[h.sigma[h.sigma[e]]] != e:
            raise OrderViolation(f"sigma^3 != id at edge {e}")
        if h.alpha[h.alpha[e]] != e:
            raise OrderViolation(f"alpha^2 != id at edge {e}")
    seen = [False] * n
    seen[0] = True
    todo = [0]
    count = 1
    while todo:
        e = todo.pop()
        for f in (h.sigma[e], h.alpha[e]):
            if not seen[f]:
                seen[f] = True
                count += 1
                todo.append(f)
    if count != n:
        raise NotTransitive(f"dessin splits: {count} of {n} edges reachable from edge 0")
    return h


SubgroupType = namedtuple("SubgroupType", "n g h e2 e3")


def subgroup_type(h):
    """Type (n; g, h, e2, e3) of the subgroup matching h.

    e2/e3 count alpha/sigma fixed points, h counts faces, and the genus
    comes out of Riemann-Hurwitz: g = 1 + n/12 - e2/4 - e3/3 - h/2.
    """
    n = h.n
    e2 = len(fixed_points(h.alpha))
    e3 = len(fixed_points(h.sigma))
    faces = h.faces()
    g = 1 + Fraction(n, 12) - Fraction(e2, 4) - Fraction(e3, 3) - Fraction(len(faces), 2)
    assert g.denominator == 1 and g >= 0, f"Riemann-Hurwitz broke: g = {g}"
    return SubgroupType(n, int(g), len(faces), e2, e3)


def cusp_widths(h):
    """Descending cycle lengths of the face permutation; they sum to n."""
    return tuple(sorted((len(f) for f in h.faces()), reverse=True))


def loop_count(h):
    """Number of width-1 faces."""
    phi = h.phi()
    return sum(1 for e in range(h.n) if phi[e] == e)


# ------------------------------------------------------------ canonical code

def canonical_code(h):
    """Relabel-invariant byte code; two hypermaps are isomorphic iff equal.

    For each root, relabel by breadth-first discovery (sigma image first,
    then alpha image), serialize (n, sigma, alpha) as bytes, and keep the
    lexicographic minimum over all n roots.
    """
    n, sigma, alpha = h.n, h.sigma, h.alpha
    best = None
    for root in range(n):
        new = [-1] * n                       # old label -> new label
        order = [root]                       # old labels in discovery order
        new[root] = 0
        head = 0
        while head < len(order):
            e = order[head]
            head += 1
            for f in (sigma[e], alpha[e]):
                if new[f] < 0:
                    new[f] = len(order)
                    order.append(f)
        code = bytearray([n])
        for img in (sigma, alpha):
            buf = [0] * n
            for e in range(n):
                buf[new[e]] = new[img[e]]
            code.extend(buf)
        code = bytes(code)
        if best is None or code < best:
            best = code
    return best


def from_code(code):
    """Rebuild the hypermap serialized by canonical_code."""
    n = code[0]
    assert len(code) == 1 + 2 * n, f"code length {len(code)} does not fit n={n}"
    return Hypermap(code[1:1 + n], code[1 + n:])


def relabel(h, p):
    """Conjugate both permutations by p (edge e becomes p[e])."""
    n = h.n
    sigma = [0] * n
    alpha = [0] * n
    for e in range(n):
        sigma[p[e]] = p[h.sigma[e]]
        alpha[p[e]] = p[h.alpha[e]]
    return Hypermap(sigma, alpha)


# ------------------------------------------------------------- automorphisms

AutomorphismGroup = namedtuple(
    "AutomorphismGroup", "order elements faces face_action loops loop_action")


def _extend_map(h, t):
    """Grow 0 -> t into a permutation commuting with sigma and alpha, or None."""
    n, sigma, alpha = h.n, h.sigma, h.alpha
    psi = [-1] * n
    psi[0] = t
    todo = [0]
    while todo:
        e = todo.pop()
        for src, img in ((sigma[e], sigma[psi[e]]), (alpha[e], alpha[psi[e]])):
            if psi[src] < 0:
                psi[src] = img
                todo.append(src)
            elif psi[src] != img:
                return None
    if len(set(psi)) != n:
        return None
    return tuple(psi)


def automorphism_group(h):
    """All psi with psi*sigma = sigma*psi and psi*alpha = alpha*psi.

    Transitivity pins psi once psi(0) is chosen, so the n candidates are
    tried directly.  The induced actions on faces and on loops (width-1
    faces, in ascending edge order -- the same order torsion.loops uses)
    come along for the ride.
    """
    els = []
    for t in range(h.n):
        psi = _extend_map(h, t)
        if psi is not None:
            els.append(psi)
    assert els and els[0] == identity_perm(h.n)
    assert h.n % len(els) == 0, "|Aut| must divide n on a transitive action"

    faces = cycles(h.phi())
    face_of = {}
    for i, face in enumerate(faces):
        for e in face:
            face_of[e] = i
    face_action = [tuple(face_of[psi[face[0]]] for face in faces) for psi in els]
    loops = tuple(i for i, f in enumerate(faces) if len(f) == 1)
    loop_pos = {fi: j for j, fi in enumerate(loops)}
    loop_action = [tuple(loop_pos[fa[fi]] for fi in loops) for fa in face_action]
    return AutomorphismGroup(len(els), tuple(els), tuple(faces),
                             tuple(face_action), loops, tuple(loop_action))


def white_vertex_types(h):
    """Type a|b|c of every trivalent white vertex.

    The widths of the three faces met at the vertex are read in sigma
    order and normalized to the lexicographically largest rotation, which
    always lands in the shape a >= b >= c or a > c > b.  Keyed by the
    sigma 3-cycle (smallest edge first).
    """
    faces = cycles(h.phi())
    width_of = {}
    for face in faces:
        for e in face:
            width_of[e] = len(face)
    out = {}
    for cyc in cycles(h.sigma):
        if len(cyc) != 3:
            continue
        trip = tuple(width_of[e] for e in cyc)
        out[cyc] = max(trip, trip[1:] + trip[:1], trip[2:] + trip[:2])
    return out
