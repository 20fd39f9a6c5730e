import pytest
from hypothesis import given, settings

from conftest import nonzero, small
from g2so4 import g2
from g2so4.cayley import act, generic_element, is_automorphism
from g2so4.g2 import (
    ALPHA, ALPHA_BETA, BETA, NEG_ALPHA, POSITIVE_ROOTS, SUPPORTED_ROOTS,
    THREE_ALPHA_BETA, THREE_ALPHA_TWO_BETA, TWO_ALPHA_BETA, Root,
)
from g2so4.matrix import identity
from g2so4.ratfunc import DomainError, sym
from g2so4.symmetric import INVOLUTIONS

s, t, l1, l2 = sym("s"), sym("t"), sym("l1"), sym("l2")


def test_root_names_roundtrip():
    for r in SUPPORTED_ROOTS + POSITIVE_ROOTS:
        assert Root.parse(r.name) == r
    assert -ALPHA == NEG_ALPHA
    assert [r.height for r in POSITIVE_ROOTS] == sorted(r.height for r in POSITIVE_ROOTS)


def test_torus_examples():
    assert g2.torus_embed(1, 1).mat.is_identity()
    assert g2.torus_embed(s, t / s).mat.diagonal() == (
        1, s * s / t, t / (s * s), 1, t / s, s, 1 / s, s / t)
    assert g2.torus_embed(-1, -1).mat == INVOLUTIONS[1]
    with pytest.raises(DomainError):
        g2.torus_embed(0, s)


def test_u_beta_action():
    c = generic_element("c")
    x1, x2, x3, x4, y1, y2, y3, y4 = c.coords()
    img = act(g2.root_unipotent(BETA, t).mat, c).coords()
    assert img == (x1, x2, x3 - t * y4, x4, y1 + t * x2, y2, y3, y4)


def test_u_top_root_action():
    c = generic_element("c")
    x1, x2, x3, x4, y1, y2, y3, y4 = c.coords()
    img = act(g2.root_unipotent(THREE_ALPHA_TWO_BETA, t).mat, c).coords()
    assert img == (x1, x2, x3, x4, y1 - t * y3, y2 - t * y4, y3, y4)


def test_root_maps_match_coordinate_formulas():
    for r in SUPPORTED_ROOTS:
        if r == NEG_ALPHA:
            continue
        assert g2.explicit_root_matrix(r, t) == g2.root_unipotent(r, t).mat, r.name


def test_zero_parameter_is_identity():
    assert g2.root_unipotent(ALPHA, 0).mat.is_identity()


def test_unsupported_root():
    with pytest.raises(g2.UnsupportedGenerator):
        g2.root_unipotent(-ALPHA_BETA, t)


@pytest.mark.parametrize("root", SUPPORTED_ROOTS, ids=lambda r: r.name)
def test_root_maps_are_automorphisms(root):
    assert is_automorphism(g2.root_unipotent(root, t).mat)


@pytest.mark.parametrize("root", SUPPORTED_ROOTS, ids=lambda r: r.name)
def test_one_parameter_additivity(root):
    u = lambda c: g2.root_unipotent(root, c).mat
    assert u(s) * u(t) == u(s + t)
    assert u(s) * u(-s) == identity()


@settings(max_examples=30)
@given(small, small)
def test_additivity_at_rational_points(a, b):
    for root in SUPPORTED_ROOTS:
        u = lambda c: g2.root_unipotent(root, c).mat
        assert u(a) * u(b) == u(a + b)


def test_weyl_representatives():
    na, nb = g2.n_alpha().mat, g2.n_beta().mat
    assert na * na == g2.torus_embed(-1, -1).mat
    assert nb * nb == g2.torus_embed(1, -1).mat
    assert g2.weyl_rep("").mat.is_identity()
    assert na == g2.explicit_n_alpha() and nb == g2.explicit_n_beta()
    for m in (na, nb, g2.longest_element().mat):
        assert is_automorphism(m)


def test_enumerate_weyl():
    elts = g2.enumerate_weyl()
    assert len(elts) == 12
    for i, a in enumerate(elts):
        for b in elts[i + 1:]:
            assert not g2.equal_mod_torus(a.mat, b.mat)
    involutions = [w for w in elts if w.is_involution and g2.in_order2_torus(w.square)]
    assert len(involutions) == 7


def test_torus_normalised_by_weyl():
    g = g2.torus_embed(l1, l2).mat
    na, nb = g2.n_alpha().mat, g2.n_beta().mat
    assert na * g * na.inverse() == g2.torus_embed(l2, l1).mat
    assert nb * g * nb.inverse() == g2.torus_embed(l1, l1 / l2).mat


@pytest.mark.parametrize("w, root, image", [
    ("a", BETA, THREE_ALPHA_BETA),
    ("b", THREE_ALPHA_BETA, THREE_ALPHA_TWO_BETA),
    ("a", THREE_ALPHA_TWO_BETA, THREE_ALPHA_TWO_BETA),
])
def test_root_action_examples(w, root, image):
    got, factor = g2.root_action(w, root)
    assert got == image and factor in (1, -1)


def test_root_action_matches_torus_characters():
    # independent route: the conjugated root map must scale by the reflected character
    for w in ("a", "b"):
        for r in POSITIVE_ROOTS:
            image, _ = g2.root_action(w, r)
            a, b = r
            reflected = Root(-a + 3 * b, b) if w == "a" else Root(a, a - b)
            assert image == reflected


def test_commutator_examples():
    x, y = sym("x"), sym("y")
    ua, u2 = g2.root_unipotent(ALPHA, x), g2.root_unipotent(TWO_ALPHA_BETA, y)
    factors, ok = g2.decompose_unipotent(g2.commutator(ua, u2).mat)
    nonzero_f = [(r, p) for r, p in factors if not p.is_zero()]
    assert ok and len(nonzero_f) == 1
    root, p = nonzero_f[0]
    assert root == THREE_ALPHA_BETA and p in (3 * x * y, -3 * x * y)
    ub, top = g2.root_unipotent(BETA, x), g2.root_unipotent(THREE_ALPHA_TWO_BETA, y)
    assert g2.commutator(ub, top).mat.is_identity()
    assert g2.commutator(ua, ua).mat.is_identity()


def test_check_relations_structure():
    results = g2.check_relations()
    assert len(results) == 15
    assert not [r for r in results if r.status == "mismatch"]
    listed = {rc.pair for rc in results if rc.claimed}
    assert listed == set(g2.CLAIMED_RELATIONS)
    for rc in results:
        if not rc.claimed:
            assert rc.status == "exact" and not rc.realized


@pytest.mark.parametrize("root, expected", [
    (TWO_ALPHA_BETA, (1, 0)), (ALPHA_BETA, (0, 1)), (THREE_ALPHA_BETA, (2, -1)),
])
def test_torus_scaling_examples(root, expected):
    assert g2.torus_scaling(root) == expected


def test_torus_scaling_is_a_character():
    for r in POSITIVE_ROOTS:
        assert g2.torus_scaling(r) == g2.root_exponents(r)
    for a in POSITIVE_ROOTS:
        for b in POSITIVE_ROOTS:
            if a + b in POSITIVE_ROOTS:
                pa, pb = g2.torus_scaling(a), g2.torus_scaling(b)
                assert g2.torus_scaling(a + b) == (pa[0] + pb[0], pa[1] + pb[1])


@settings(max_examples=50)
@given(nonzero, nonzero, nonzero, nonzero)
def test_torus_is_a_homomorphism(a, b, c, d):
    assert g2.torus_embed(a, b).mat * g2.torus_embed(c, d).mat == g2.torus_embed(a * c, b * d).mat
