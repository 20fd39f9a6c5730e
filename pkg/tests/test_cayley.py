from hypothesis import given, settings, strategies as st

from conftest import small
from g2so4 import cayley as ca
from g2so4.g2 import beta_derivation, neg_beta_derivation, root_unipotent, torus_embed, ALPHA
from g2so4.matrix import Matrix, diag, identity, zeros
from g2so4.ratfunc import ONE, sym

M, E = ca.Mat2, ca.CayleyElt
Z, I = M.zero(), M.eye()


def basis(name):
    return ca.BASIS[ca.BASIS_NAMES.index(name)]


def test_unit():
    c = ca.generic_element("c")
    assert ca.cayley_mul(ca.UNIT, c) == c
    assert ca.cayley_mul(c, ca.UNIT) == c


def test_multiplication_examples():
    assert ca.cayley_mul(E(Z, I), E(Z, I)) == E(I, Z)
    e11 = E(M.of(1, 0, 0, 0), Z)
    assert ca.cayley_mul(e11, e11) == e11


def test_conjugation_examples():
    assert ca.cayley_conj(ca.UNIT) == ca.UNIT
    c = ca.generic_element("c")
    assert ca.cayley_conj(ca.cayley_conj(c)) == c
    e12 = M.of(0, 1, 0, 0)
    assert ca.cayley_conj(E(e12, Z)) == E(-e12, Z)


def test_norm_and_pairing_examples():
    assert ca.norm(ca.UNIT) == ONE
    assert ca.norm(E(Z, I)) == -ONE
    c = ca.generic_element("c")
    assert ca.pairing(c, ca.UNIT) == ca.trace(c)
    assert c + ca.cayley_conj(c) == ca.UNIT.scale(ca.trace(c))


def test_pairing_is_trace_of_product_with_conjugate():
    c, d = ca.generic_element("c"), ca.generic_element("d")
    assert ca.pairing(c, d) == ca.trace(ca.cayley_mul(c, ca.cayley_conj(d)))


def test_norm_multiplicative_symbolic():
    c, d = ca.generic_element("c"), ca.generic_element("d")
    assert ca.norm(ca.cayley_mul(c, d)) == ca.norm(c) * ca.norm(d)


def test_l_map():
    a, c = ca.generic_element("a"), ca.generic_element("c")
    assert ca.l_map(a, a, c).is_zero()
    d_beta = ca.linear_map_to_matrix8(lambda x: ca.l_map(basis("e12"), basis("e31"), x))
    assert d_beta == beta_derivation()
    d_neg = ca.linear_map_to_matrix8(lambda x: ca.l_map(basis("e42"), -basis("e21"), x))
    assert d_neg == neg_beta_derivation()


def test_linear_map_to_matrix():
    assert ca.linear_map_to_matrix8(lambda c: c) == identity()
    l1, l2 = sym("l1"), sym("l2")
    # gamma acts on (x|y) as (s x s^-1 | y ...); read it directly off the basis
    g = torus_embed(l1, l2).mat
    assert g == diag(1, l1 / l2, l2 / l1, 1, l2, l1, 1 / l1, 1 / l2)
    assert g.substitute({"l1": sym("s"), "l2": sym("t") / sym("s")}) == diag(
        1, sym("s") ** 2 / sym("t"), sym("t") / sym("s") ** 2, 1, sym("t") / sym("s"), sym("s"),
        1 / sym("s"), sym("s") / sym("t"))


def test_d_beta_rank_two():
    assert beta_derivation().rank() == 2


def test_automorphism_predicate():
    assert ca.is_automorphism(identity())
    assert ca.is_automorphism(root_unipotent(ALPHA, sym("t")).mat)
    assert not ca.is_automorphism(identity() * 2)
    assert not ca.is_automorphism(diag(1, -1, 1, -1, 1, -1, 1, -1))


def test_derivation_predicate():
    assert ca.is_derivation(zeros())
    assert ca.is_derivation(beta_derivation())
    assert not ca.is_derivation(identity())


def test_gram_matrix_nondegenerate():
    gram = Matrix([[ca.pairing(a, b) for b in ca.BASIS] for a in ca.BASIS])
    assert not gram.det().is_zero()


elements = st.lists(small, min_size=8, max_size=8).map(E.from_coords)


@settings(max_examples=200)
@given(elements, elements)
def test_norm_multiplicative(c, d):
    assert ca.norm(ca.cayley_mul(c, d)) == ca.norm(c) * ca.norm(d)


@settings(max_examples=100)
@given(elements, elements)
def test_conjugation_reverses_products(c, d):
    assert ca.cayley_conj(ca.cayley_mul(c, d)) == ca.cayley_mul(ca.cayley_conj(d), ca.cayley_conj(c))


@settings(max_examples=100)
@given(elements, elements)
def test_alternative_laws(c, d):
    assert ca.cayley_mul(ca.cayley_mul(c, c), d) == ca.cayley_mul(c, ca.cayley_mul(c, d))
    assert ca.cayley_mul(ca.cayley_mul(d, c), c) == ca.cayley_mul(d, ca.cayley_mul(c, c))
