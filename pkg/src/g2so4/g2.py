"""Generators of G2 inside GL8: torus, root maps, Weyl representatives.

Roots are integer pairs ``(a, b)`` meaning ``a*alpha + b*beta``.  Every group
element is an 8x8 matrix acting on Cayley coordinates (see ``cayley``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from . import cayley as ca
from .cayley import BASIS, CayleyElt, Mat2
from .matrix import Matrix, diag, identity
from .ratfunc import ONE, DomainError, RatFunc, as_ratfunc, sym

__all__ = [
    "Root", "ALPHA", "BETA", "ALPHA_BETA", "TWO_ALPHA_BETA", "THREE_ALPHA_BETA",
    "THREE_ALPHA_TWO_BETA", "NEG_ALPHA", "NEG_BETA", "POSITIVE_ROOTS",
    "SUPPORTED_ROOTS", "UnsupportedGenerator", "ConsistencyError", "GroupElt",
    "torus_embed", "root_unipotent", "root_vector", "beta_derivation",
    "neg_beta_derivation", "n_alpha", "n_beta", "weyl_rep", "longest_element",
    "WeylElement", "enumerate_weyl", "equal_mod_torus", "ORDER2_TORUS",
    "in_order2_torus", "root_action", "commutator", "decompose_unipotent",
    "CLAIMED_RELATIONS", "RelationCheck", "check_relations", "torus_scaling",
    "root_exponents", "torus_lie", "word_name", "identity_elt",
    "explicit_root_matrix", "explicit_n_alpha", "explicit_n_beta",
]


class Root(NamedTuple):
    a: int
    b: int

    @property
    def name(self) -> str:
        def term(k, s):
            if k == 0:
                return ""
            if k == 1:
                return s
            if k == -1:
                return "-" + s
            return f"{k}{s}"
        parts = [p for p in (term(self.a, "alpha"), term(self.b, "beta")) if p]
        return "+".join(parts).replace("+-", "-") or "0"

    def __neg__(self) -> "Root":
        return Root(-self.a, -self.b)

    def __add__(self, o) -> "Root":
        return Root(self.a + o[0], self.b + o[1])

    @property
    def height(self) -> int:
        return self.a + self.b

    @classmethod
    def parse(cls, text: str) -> "Root":
        for r in SUPPORTED_ROOTS + tuple(-r for r in POSITIVE_ROOTS[2:]):
            if r.name == text.replace(" ", ""):
                return r
        raise ValueError(f"unknown root {text!r}")

    def __str__(self) -> str:
        return self.name


ALPHA = Root(1, 0)
BETA = Root(0, 1)
ALPHA_BETA = Root(1, 1)
TWO_ALPHA_BETA = Root(2, 1)
THREE_ALPHA_BETA = Root(3, 1)
THREE_ALPHA_TWO_BETA = Root(3, 2)
NEG_ALPHA = -ALPHA
NEG_BETA = -BETA

# height order, which is also the evaluation order used for decompositions
POSITIVE_ROOTS = (ALPHA, BETA, ALPHA_BETA, TWO_ALPHA_BETA, THREE_ALPHA_BETA, THREE_ALPHA_TWO_BETA)
SUPPORTED_ROOTS = POSITIVE_ROOTS + (NEG_ALPHA, NEG_BETA)


class UnsupportedGenerator(ValueError):
    """Requested a root map with no explicit matrix formula."""


class ConsistencyError(RuntimeError):
    """An internal identity that should hold by construction did not."""


@dataclass(frozen=True)
class GroupElt:
    """A matrix together with a readable word recording how it was built."""

    mat: Matrix
    word: str = "?"

    def __mul__(self, other: "GroupElt") -> "GroupElt":
        if self.word == "e":
            return other
        if other.word == "e":
            return self
        return GroupElt(self.mat * other.mat, f"{self.word}*{other.word}")

    def inverse(self) -> "GroupElt":
        return GroupElt(self.mat.inverse(), f"({self.word})^-1")

    def conj(self, other: "GroupElt") -> "GroupElt":
        """self * other * self^-1."""
        return self * other * self.inverse()

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupElt) and self.mat == other.mat

    def __hash__(self) -> int:
        return hash(self.mat)


def identity_elt() -> GroupElt:
    return GroupElt(identity(8), "e")


def torus_embed(l1, l2) -> GroupElt:
    l1, l2 = as_ratfunc(l1), as_ratfunc(l2)
    if l1.is_zero() or l2.is_zero():
        raise DomainError("torus parameters must be nonzero")
    m = diag(1, l1 / l2, l2 / l1, 1, l2, l1, l1.inverse(), l2.inverse())
    return GroupElt(m, f"gamma({l1}, {l2})")


# -- root maps --------------------------------------------------------------

_PAR = "par_0"  # template parameter; substituted away before returning


def _V(t) -> Mat2:
    return Mat2.of(1, t, 0, 1)


def _Vbar(t) -> Mat2:
    return Mat2.of(1, 0, t, 1)


def _int(g: Mat2, x: Mat2) -> Mat2:
    return g @ x @ g.inverse()


def _u_alpha(t):
    return ca.linear_map_to_matrix8(lambda c: CayleyElt(_int(_V(t), c.x), c.y @ _V(-t)))


def _u_neg_alpha(t):
    return ca.linear_map_to_matrix8(lambda c: CayleyElt(_int(_Vbar(t), c.x), c.y @ _Vbar(-t)))


# The element pairs defining the beta and -beta root vectors.
_W0 = BASIS[4]            # e12
_X0 = BASIS[2]            # e31
_W0P = BASIS[7]           # e42
_X0P = BASIS[1].scale(-1)  # -e21


def beta_derivation() -> Matrix:
    return ca.linear_map_to_matrix8(lambda c: ca.l_map(_W0, _X0, c))


def neg_beta_derivation() -> Matrix:
    return ca.linear_map_to_matrix8(lambda c: ca.l_map(_W0P, _X0P, c))


def _u_l(w, x, t):
    return ca.linear_map_to_matrix8(lambda c: c + ca.l_map(w, x, c.scale(t)))


@lru_cache(maxsize=None)
def _template(root: Root) -> Matrix:
    t = sym(_PAR)
    if root == ALPHA:
        return _u_alpha(t)
    if root == NEG_ALPHA:
        return _u_neg_alpha(t)
    if root == BETA:
        return _u_l(_W0, _X0, t)
    if root == NEG_BETA:
        return _u_l(_W0P, _X0P, t)
    na, nb = n_alpha().mat, n_beta().mat
    # Each remaining map is pulled back from a simpler one by a Weyl representative:
    #   n_a u_{3a+b}(t) n_a^-1 = u_b(t),      n_b u_{a+b}(t) n_b^-1 = u_a(-t),
    #   n_a u_{2a+b}(t) n_a^-1 = u_{a+b}(-t), n_b u_{3a+2b}(t) n_b^-1 = u_{3a+b}(-t).
    if root == THREE_ALPHA_BETA:
        return na.inverse() * _template(BETA) * na
    if root == ALPHA_BETA:
        return nb.inverse() * _at(ALPHA, -t) * nb
    if root == TWO_ALPHA_BETA:
        return na.inverse() * _at(ALPHA_BETA, -t) * na
    if root == THREE_ALPHA_TWO_BETA:
        return nb.inverse() * _at(THREE_ALPHA_BETA, -t) * nb
    raise UnsupportedGenerator(f"no one-parameter map for root {Root(*root).name}")


def _at(root: Root, t) -> Matrix:
    return _template(root).substitute({_PAR: as_ratfunc(t)})


def root_unipotent(root, t) -> GroupElt:
    root = Root(*root)
    if root not in SUPPORTED_ROOTS:
        raise UnsupportedGenerator(f"no one-parameter map for root {root.name}")
    t = as_ratfunc(t)
    return GroupElt(_at(root, t), f"u[{root.name}]({t})")


def root_vector(root) -> Matrix:
    """Derivative at 0 of the root map (the coefficient of the parameter)."""
    m = _template(Root(*root))
    rows = []
    for r in m.rows:
        rows.append(tuple(RatFunc(e.num.coeff(_PAR, 1), canonical=True) for e in r))
    return Matrix(rows)


def torus_lie() -> tuple:
    """Tangent vectors of the torus along l1 and along l2 at (1, 1)."""
    return (diag(0, 1, -1, 0, 0, 1, -1, 0), diag(0, -1, 1, 0, 1, 0, 0, -1))


# -- Weyl group -------------------------------------------------------------

@lru_cache(maxsize=None)
def n_alpha() -> GroupElt:
    m = _u_alpha(ONE) * _u_neg_alpha(-ONE) * _u_alpha(ONE)
    return GroupElt(m, "n_a")


@lru_cache(maxsize=None)
def n_beta() -> GroupElt:
    one = ONE
    m = _u_l(_W0, _X0, one) * _u_l(_W0P, _X0P, -one) * _u_l(_W0, _X0, one)
    return GroupElt(m, "n_b")


def _word(w) -> str:
    if isinstance(w, str):
        w = w.replace("w_", "").replace(" ", "").replace("*", "").replace(".", "")
    out = "".join(w)
    if set(out) - {"a", "b"}:
        raise ValueError(f"Weyl word must use generators 'a' and 'b': {w!r}")
    return out


def word_name(w) -> str:
    w = _word(w)
    return "e" if not w else "".join(f"w_{c}" for c in w)


@lru_cache(maxsize=None)
def _weyl_mat(word: str) -> Matrix:
    m = identity(8)
    for c in word:
        m = m * (n_alpha().mat if c == "a" else n_beta().mat)
    return m


def weyl_rep(w) -> GroupElt:
    """Product of n_alpha / n_beta in word order ('a' for w_alpha, 'b' for w_beta)."""
    word = _word(w)
    return GroupElt(_weyl_mat(word), word_name(word))


@lru_cache(maxsize=None)
def longest_element() -> GroupElt:
    s = Mat2.of(0, -1, 1, 0)
    m = ca.linear_map_to_matrix8(lambda c: CayleyElt(_int(s, c.x), _int(s, c.y)))
    return GroupElt(m, "w_G")


def equal_mod_torus(g: Matrix, h: Matrix) -> bool:
    return (g * h.inverse()).is_diagonal()


ORDER2_TORUS = tuple(torus_embed(a, b).mat for a, b in ((1, 1), (-1, -1), (1, -1), (-1, 1)))


def in_order2_torus(m: Matrix) -> bool:
    return m in ORDER2_TORUS


@dataclass(frozen=True)
class WeylElement:
    word: str
    mat: Matrix
    square: Matrix

    @property
    def name(self) -> str:
        return word_name(self.word)

    @property
    def is_involution(self) -> bool:
        return bool(self.word) and self.square.is_diagonal()


@lru_cache(maxsize=None)
def enumerate_weyl() -> tuple:
    """Breadth-first enumeration of N(T)/T from the two simple reflections."""
    found: list = []
    frontier = [""]
    while frontier:
        nxt = []
        for word in frontier:
            m = _weyl_mat(word)
            if any(equal_mod_torus(m, f.mat) for f in found):
                continue
            found.append(WeylElement(word, m, m * m))
            nxt.extend((word + "a", word + "b"))
        frontier = nxt
    return tuple(found)


def _signature(root: Root) -> tuple:
    """First nonzero entry (row-major) of the root vector."""
    X = root_vector(root)
    for i, j, e in X.entries():
        if not e.is_zero():
            return i, j, e
    raise ConsistencyError(f"zero root vector for {root.name}")


def _match_one_parameter(m: Matrix, t: RatFunc):
    """Find (root, c) with m == u_root(c t), c a nonzero constant."""
    for root in SUPPORTED_ROOTS:
        i, j, x = _signature(root)
        c = m[i, j] / (x * t)
        if c.is_zero() or not c.is_constant():
            continue
        if _at(root, c * t) == m:
            return root, c.constant_value()
    return None


def root_action(w, root) -> tuple:
    """(delta, c) with n_w u_root(t) n_w^-1 = u_delta(c t), checked symbolically."""
    t = sym("t")
    n = weyl_rep(w).mat
    m = n * _at(Root(*root), t) * n.inverse()
    hit = _match_one_parameter(m, t)
    if hit is None:
        raise ConsistencyError(f"conjugate of u[{Root(*root).name}] by {word_name(w)} "
                               "is not a supported one-parameter element")
    return hit


# -- commutators ------------------------------------------------------------

def commutator(g, h):
    """[g, h] = g^-1 h^-1 g h for matrices or group elements."""
    if isinstance(g, GroupElt):
        return GroupElt(commutator(g.mat, h.mat), f"[{g.word}, {h.word}]")
    return g.inverse() * h.inverse() * g * h


def decompose_unipotent(m: Matrix, roots=POSITIVE_ROOTS) -> tuple:
    """Write m as an ordered product of u_root(p) over ``roots``.

    Parameters are read off a signature entry of each root vector and the
    factor is peeled from the left.  Returns ``(factors, ok)`` where ``ok``
    says whether the remainder is the identity.
    """
    factors = []
    for root in roots:
        i, j, x = _signature(root)
        p = m[i, j] / x
        factors.append((root, p))
        if not p.is_zero():
            m = _at(root, -p) * m
    return tuple(factors), m.is_identity()


def _claim(*terms):
    # terms: (root, coefficient, power of x, power of y)
    return tuple(terms)


# Commutator relations [u_r1(x), u_r2(y)] as usually tabulated; pairs absent
# from this table are claimed to commute.
CLAIMED_RELATIONS = {
    (ALPHA, BETA): _claim((ALPHA_BETA, -1, 1, 1), (TWO_ALPHA_BETA, -1, 2, 1),
                          (THREE_ALPHA_BETA, 1, 3, 1), (THREE_ALPHA_TWO_BETA, -2, 3, 2)),
    (ALPHA, ALPHA_BETA): _claim((TWO_ALPHA_BETA, -2, 1, 1), (THREE_ALPHA_BETA, 3, 2, 1),
                                (THREE_ALPHA_TWO_BETA, 3, 1, 2)),
    (ALPHA, TWO_ALPHA_BETA): _claim((THREE_ALPHA_BETA, 3, 1, 1)),
    (BETA, THREE_ALPHA_BETA): _claim((THREE_ALPHA_TWO_BETA, 1, 1, 1)),
    (ALPHA_BETA, TWO_ALPHA_BETA): _claim((THREE_ALPHA_TWO_BETA, 3, 1, 1)),
}


@dataclass(frozen=True)
class RelationCheck:
    pair: tuple
    status: str            # "exact", "sign" or "mismatch"
    realized: tuple        # ((root, RatFunc), ...) nonzero factors
    claimed: tuple         # ((root, RatFunc), ...)
    sign_flips: tuple = ()  # roots whose parameter has the opposite sign

    def describe(self) -> str:
        fmt = lambda fs: " ".join(f"u[{r.name}]({p})" for r, p in fs) or "e"
        return (f"[u[{self.pair[0].name}](x), u[{self.pair[1].name}](y)] = {fmt(self.realized)}"
                f" ; tabulated {fmt(self.claimed)} ; {self.status}")


def _claimed_params(pair) -> tuple:
    x, y = sym("x"), sym("y")
    return tuple((r, as_ratfunc(c) * x ** px * y ** py)
                 for r, c, px, py in CLAIMED_RELATIONS.get(pair, ()))


def check_pair(r1: Root, r2: Root) -> RelationCheck:
    x, y = sym("x"), sym("y")
    comm = commutator(_at(r1, x), _at(r2, y))
    factors, ok = decompose_unipotent(comm)
    realized = tuple((r, p) for r, p in factors if not p.is_zero())
    claimed = _claimed_params((r1, r2))
    if not ok or [r for r, _ in realized] != [r for r, _ in claimed]:
        return RelationCheck((r1, r2), "mismatch", realized, claimed)
    flips = []
    for (r, p), (_, q) in zip(realized, claimed):
        if p == q:
            continue
        if p == -q:
            flips.append(r)
        else:
            return RelationCheck((r1, r2), "mismatch", realized, claimed)
    return RelationCheck((r1, r2), "sign" if flips else "exact", realized, claimed, tuple(flips))


def check_relations() -> tuple:
    """Check every ordered pair of distinct positive roots (height order)."""
    out = []
    for i, r1 in enumerate(POSITIVE_ROOTS):
        for r2 in POSITIVE_ROOTS[i + 1:]:
            out.append(check_pair(r1, r2))
    return tuple(out)


# -- torus action -------------------------------------------------------------

def root_exponents(root) -> tuple:
    """Exponents (p, q) of the root character l1^p l2^q from alpha=(1,-1), beta=(-1,2)."""
    a, b = root
    return (a - b, -a + 2 * b)


def torus_scaling(root) -> tuple:
    """Exponents read from the conjugation gamma(l1,l2) u(c) gamma^-1 = u(l1^p l2^q c)."""
    root = Root(*root)
    l1, l2, c = sym("l1"), sym("l2"), sym("c")
    g = torus_embed(l1, l2).mat
    m = g * _at(root, c) * g.inverse()
    i, j, x = _signature(root)
    ratio = m[i, j] / (x * c)
    if not (ratio.num.is_monomial() and ratio.den.is_monomial()):
        raise ConsistencyError(f"torus does not scale u[{root.name}] by a character")
    (nm, ncoef), = ratio.num.terms.items()
    (dm, _), = ratio.den.terms.items()
    if ncoef != 1:
        raise ConsistencyError(f"torus scaling of u[{root.name}] has coefficient {ncoef}")
    e = dict(nm)
    for v, k in dm:
        e[v] = e.get(v, 0) - k
    p, q = e.get("l1", 0), e.get("l2", 0)
    if _at(root, c * l1 ** p * l2 ** q) != m:
        raise ConsistencyError(f"torus conjugate of u[{root.name}] is not a rescaling")
    return (p, q)


# -- explicit coordinate formulas (independent of the constructions above) ----------

def _explicit(root: Root, t: RatFunc):
    def f(v):
        x1, x2, x3, x4, y1, y2, y3, y4 = v
        if root == ALPHA:
            return (x1 + t * x3, x2 + t * (x4 - x1) - t * t * x3, x3, x4 - t * x3,
                    y1, y2 - t * y1, y3, y4 - t * y3)
        if root == BETA:
            return (x1, x2, x3 - t * y4, x4, y1 + t * x2, y2, y3, y4)
        if root == NEG_BETA:
            return (x1, x2 + t * y1, x3, x4, y1, y2, y3, y4 - t * x3)
        if root == THREE_ALPHA_BETA:
            return (x1, x2 - t * y3, x3, x4, y1, y2 - t * x3, y3, y4)
        if root == ALPHA_BETA:
            return (x1 + t * y4, x2, x3 + t * y3, x4 - t * y4,
                    y1 + t * (x4 - x1) - t * t * y4, y2 + t * x2, y3, y4)
        if root == TWO_ALPHA_BETA:
            return (x1 - t * y3, x2 + t * y4, x3, x4 + t * y3,
                    y1 - t * x3, y2 + t * (x4 - x1) + t * t * y3, y3, y4)
        if root == THREE_ALPHA_TWO_BETA:
            return (x1, x2, x3, x4, y1 - t * y3, y2 - t * y4, y3, y4)
        raise UnsupportedGenerator(f"no explicit formula for {root.name}")
    return f


def explicit_root_matrix(root, t) -> Matrix:
    """Matrix of a root map written directly from its coordinate formula."""
    f = _explicit(Root(*root), as_ratfunc(t))
    return ca.linear_map_to_matrix8(lambda c: CayleyElt.from_coords(f(c.coords())))


def explicit_n_beta() -> Matrix:
    return ca.linear_map_to_matrix8(lambda c: CayleyElt.from_coords(
        (lambda x1, x2, x3, x4, y1, y2, y3, y4: (x1, -y1, -y4, x4, x2, y2, y3, x3))(*c.coords())))


def explicit_n_alpha() -> Matrix:
    s = Mat2.of(0, -1, 1, 0)
    return ca.linear_map_to_matrix8(lambda c: CayleyElt(_int(s, c.x), c.y @ s))
