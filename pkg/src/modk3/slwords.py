"""Matrix-level verification layer: words in S and T, coset actions.

Everything here exists to check the combinatorics against the group
theory: a dessin's permutation pair must reproduce membership, torsion
counts and cusp data when matrices are pushed through it.
"""

from collections import namedtuple

from .hypermap import compose, identity_perm, inverse

_Mat2Base = namedtuple("Mat2Base", "a b c d")


class Mat2(_Mat2Base):
    """2x2 integer matrix of determinant 1 (checked at construction)."""

    def __new__(cls, a, b, c, d):
        if a * d - b * c != 1:
            raise ValueError(f"determinant is {a * d - b * c}, not 1")
        return super().__new__(cls, a, b, c, d)

    def __mul__(self, other):
        return Mat2(self.a * other.a + self.b * other.c,
                    self.a * other.b + self.b * other.d,
                    self.c * other.a + self.d * other.c,
                    self.c * other.b + self.d * other.d)

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def inv(self):
        return Mat2(self.d, -self.b, -self.c, self.a)

    def __repr__(self):
        return f"Mat2({self.a}, {self.b}, {self.c}, {self.d})"


I2 = Mat2(1, 0, 0, 1)
S = Mat2(0, -1, 1, 0)
T = Mat2(1, 1, 0, 1)
T_INV = T.inv()

_LETTER = {"S": S, "T": T, "T^-1": T_INV}


def eval_word(word):
    """Left-to-right product of the letters' matrices."""
    m = I2
    for letter in word:
        m = m * _LETTER[letter]
    return m


def word_of_matrix(m):
    """Decompose m: returns (word, sign) with eval_word(word) == sign * m.

    Euclidean reduction: while c != 0, strip T^q (q = a // c) and one S,
    which flips the running sign because S^-1 = -S; the tail is then
    +-T^k.  No normal form is promised, only sign-correct evaluation.
    """
    a, b, c, d = m
    word = []
    sign = 1
    while c != 0:
        q = a // c
        word.extend(["T" if q > 0 else "T^-1"] * abs(q))
        word.append("S")
        sign = -sign
        a, b, c, d = -c, -d, a - q * c, b - q * d
    # upper triangular with determinant 1: a = d = +-1, m = a * T^(a*b)
    k = a * b
    word.extend(["T" if k > 0 else "T^-1"] * abs(k))
    return word, sign * a


def coset_action(h):
    """(perm_S, perm_T) of the edge action with S -> alpha, ST -> sigma.

    perm_T = perm_S^-1 o perm_U where U = ST acts as sigma; with our
    composition order that is e -> alpha(sigma(e)).  Its cycle type is the
    cusp-width partition (conjugate of the face permutation).
    """
    perm_T = compose(inverse(h.alpha), h.sigma)
    return h.alpha, perm_T


def word_perm(h, word):
    """Permutation of the word's matrix on edges (homomorphism order)."""
    perm_s, perm_t = coset_action(h)
    letters = {"S": perm_s, "T": perm_t, "T^-1": inverse(perm_t)}
    acc = identity_perm(h.n)
    for letter in word:
        acc = compose(acc, letters[letter])
    return acc


def is_member(h, root, m):
    """Is the image of m in the subgroup attached to (h, root)?

    Works at the PSL level: the sign of the word decomposition is ignored.
    """
    word, _ = word_of_matrix(m)
    return word_perm(h, word)[root] == root


def member_sign(h, root, m):
    """(membership, sign): the sign lets SL-level callers track -I."""
    word, sign = word_of_matrix(m)
    return word_perm(h, word)[root] == root, sign


def random_sl2(rng, bound=1000):
    """Pseudo-random determinant-1 matrix with entries up to ~bound^2."""
    while True:
        a = rng.randint(-bound, bound)
        c = rng.randint(-bound, bound)
        if a == 0 and c == 0:
            continue
        # solve a*d - b*c = 1 by the extended Euclidean algorithm
        old_r, r = a, c
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r != 0:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        if old_r < 0:
            old_r, old_s, old_t = -old_r, -old_s, -old_t
        if old_r != 1:        # a and c must be coprime
            continue
        d, b = old_s, -old_t
        shift = rng.randint(-bound, bound)
        return Mat2(a, b + shift * a, c, d + shift * c)
