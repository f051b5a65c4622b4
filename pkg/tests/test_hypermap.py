"""Permutation plumbing, type invariants, canonical codes, automorphisms."""

import random

from modk3.errors import NotTransitive, OrderViolation
from modk3.hypermap import (
    Hypermap, automorphism_group, canonical_code, compose, cusp_widths,
    cycle_type, cycles, fixed_points, from_code, identity_perm, inverse,
    loop_count, perm_from_cycles, relabel, subgroup_type, validate,
    white_vertex_types,
)

# Hand-built reference dessins -------------------------------------------
#
# FULL: the one-edge dessin of the full group, type (1; 0, 1, 1, 1).
# W411: torsion-free index 6 with cusp widths (4, 1, 1).
# H1:   (4; 0, 2, 0, 1) -- one order-3 fixed point, widths (3, 1).
# H2:   (2; 0, 1, 0, 2) -- two order-3 fixed points, width (2,).

FULL = Hypermap((0,), (0,))
W411 = Hypermap(perm_from_cycles(6, (0, 2, 1), (3, 5, 4)),
                perm_from_cycles(6, (1, 2), (0, 3), (4, 5)))
H1 = Hypermap(perm_from_cycles(4, (1, 2, 3)),
              perm_from_cycles(4, (0, 1), (2, 3)))
H2 = Hypermap((0, 1), (1, 0))

MODELS = [FULL, W411, H1, H2]


def a4_regular():
    """Index-12 dessin with widths (3,3,3,3): A4 acting on itself."""
    pts = [(a, b, c, d) for a in range(4) for b in range(4) for c in range(4)
           for d in range(4) if len({a, b, c, d}) == 4]
    even = [p for p in pts if sum(1 for i in range(4) for j in range(i + 1, 4)
                                  if p[i] > p[j]) % 2 == 0]
    assert len(even) == 12
    idx = {p: i for i, p in enumerate(even)}
    u = (1, 2, 0, 3)   # 3-cycle on the first three letters
    v = (1, 0, 3, 2)   # double transposition
    mult = lambda g, x: tuple(x[g[i]] for i in range(4))
    sigma = tuple(idx[mult(p, u)] for p in even)
    alpha = tuple(idx[mult(p, v)] for p in even)
    return validate(Hypermap(sigma, alpha))


def test_perm_helpers():
    p = perm_from_cycles(5, (0, 1, 2), (3, 4))
    assert p == (1, 2, 0, 4, 3)
    assert compose(p, inverse(p)) == identity_perm(5)
    q = perm_from_cycles(5, (0, 3))
    # compose(p, q) applies q first
    assert compose(p, q)[0] == p[3]
    assert cycles(p) == [(0, 1, 2), (3, 4)]
    assert cycle_type(p) == (3, 2)
    assert fixed_points(perm_from_cycles(4, (1, 2))) == [0, 3]


def test_validate_rejects_bad_orders():
    try:
        validate(Hypermap((1, 0), (0, 1)))   # sigma is an involution
        assert False
    except OrderViolation:
        pass
    try:
        validate(Hypermap((0, 0), (0, 1)))   # not even a permutation
        assert False
    except OrderViolation:
        pass
    try:
        validate(Hypermap((0, 1, 2), (1, 0)))  # size mismatch
        assert False
    except OrderViolation:
        pass


def test_validate_rejects_disconnected():
    try:
        validate(Hypermap((0, 1), (0, 1)))
        assert False
    except NotTransitive:
        pass


def test_model_types():
    for h in MODELS:
        validate(h)
    assert subgroup_type(FULL) == (1, 0, 1, 1, 1)
    assert subgroup_type(W411) == (6, 0, 3, 0, 0)
    assert subgroup_type(H1) == (4, 0, 2, 0, 1)
    assert subgroup_type(H2) == (2, 0, 1, 0, 2)
    assert cusp_widths(W411) == (4, 1, 1)
    assert cusp_widths(H1) == (3, 1)
    assert cusp_widths(H2) == (2,)
    assert loop_count(W411) == 2
    assert loop_count(H2) == 0
    a4 = a4_regular()
    assert subgroup_type(a4) == (12, 0, 4, 0, 0)
    assert cusp_widths(a4) == (3, 3, 3, 3)


def test_widths_sum_to_index():
    for h in MODELS + [a4_regular()]:
        assert sum(cusp_widths(h)) == h.n


def test_phi_convention():
    # phi applies alpha first: on W411 edge 0 goes to alpha 3 then sigma 5
    assert W411.phi()[0] == 5
    assert W411.phi() == compose(W411.sigma, W411.alpha)


def test_canonical_code_shape():
    for h in MODELS:
        code = canonical_code(h)
        assert code[0] == h.n
        assert len(code) == 1 + 2 * h.n


def test_code_round_trip():
    for h in MODELS + [a4_regular()]:
        code = canonical_code(h)
        back = from_code(code)
        validate(back)
        assert canonical_code(back) == code
        assert subgroup_type(back) == subgroup_type(h)


def test_code_is_relabel_invariant():
    rng = random.Random(7)
    for h in MODELS + [a4_regular()]:
        code = canonical_code(h)
        widths = cusp_widths(h)
        for _ in range(40):
            p = list(range(h.n))
            rng.shuffle(p)
            moved = relabel(h, tuple(p))
            validate(moved)
            assert canonical_code(moved) == code
            assert cusp_widths(moved) == widths
            assert subgroup_type(moved) == subgroup_type(h)


def test_codes_separate_the_models():
    codes = {canonical_code(h) for h in MODELS}
    assert len(codes) == len(MODELS)


def test_automorphism_groups():
    assert automorphism_group(FULL).order == 1
    assert automorphism_group(H1).order == 1
    assert automorphism_group(H2).order == 2
    aut = automorphism_group(W411)
    assert aut.order == 2
    assert aut.elements[0] == identity_perm(6)
    # regular action: the full right-multiplication group survives
    assert automorphism_group(a4_regular()).order == 12


def test_automorphism_elements_commute_with_both():
    for h in MODELS + [a4_regular()]:
        aut = automorphism_group(h)
        assert h.n % aut.order == 0
        for psi in aut.elements:
            assert compose(psi, h.sigma) == compose(h.sigma, psi)
            assert compose(psi, h.alpha) == compose(h.alpha, psi)


def test_loop_action():
    aut = automorphism_group(W411)
    assert aut.loops == tuple(i for i, f in enumerate(aut.faces) if len(f) == 1)
    assert len(aut.loops) == 2
    # the nontrivial automorphism must swap the two loops
    assert aut.loop_action[0] == (0, 1)
    assert aut.loop_action[1] == (1, 0)


def test_face_action_is_consistent():
    rng = random.Random(3)
    for h in MODELS + [a4_regular()]:
        aut = automorphism_group(h)
        for psi, fa in zip(aut.elements, aut.face_action):
            for i, face in enumerate(aut.faces):
                for e in face:
                    assert psi[e] in aut.faces[fa[i]]
            assert sorted(fa) == list(range(len(aut.faces)))
        if aut.loops:
            for la in aut.loop_action:
                assert sorted(la) == list(range(len(aut.loops)))
        rng.shuffle(list(aut.elements))  # order should not matter for checks


def test_white_vertex_types():
    # both trivalent vertices of W411 read (4, 4, 1)
    types = white_vertex_types(W411)
    assert len(types) == 2
    assert set(types.values()) == {(4, 4, 1)}
    # all four vertices of the (3,3,3,3) dessin read (3, 3, 3)
    types = white_vertex_types(a4_regular())
    assert len(types) == 4
    assert set(types.values()) == {(3, 3, 3)}
    # no trivalent vertices at all on the one-edge dessin
    assert white_vertex_types(FULL) == {}


def test_white_vertex_type_shape():
    # normalization lands in "a >= b >= c or a > c > b"
    for h in MODELS + [a4_regular()]:
        for trip in white_vertex_types(h).values():
            a, b, c = trip
            assert (a >= b >= c) or (a > c > b)
