"""The split Cayley algebra M2 + M2 and its 8x8 matrix realization.

An element is a pair ``(x | y)`` of 2x2 matrices.  Coordinates follow the
fixed basis order e11, e21, e31, e41, e12, e22, e32, e42, which is the order
``x1, x2, x3, x4, y1, y2, y3, y4`` with ``x = [[x1, x2], [x3, x4]]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import Matrix
from .ratfunc import ZERO, RatFunc, as_ratfunc, fresh_names, sym

__all__ = [
    "Mat2",
    "CayleyElt",
    "BASIS",
    "BASIS_NAMES",
    "UNIT",
    "cayley_mul",
    "cayley_conj",
    "norm",
    "trace",
    "pairing",
    "l_map",
    "linear_map_to_matrix8",
    "act",
    "generic_element",
    "automorphism_defect",
    "is_automorphism",
    "derivation_defect",
    "is_derivation",
]


@dataclass(frozen=True)
class Mat2:
    a: RatFunc
    b: RatFunc
    c: RatFunc
    d: RatFunc

    @classmethod
    def of(cls, a, b, c, d) -> "Mat2":
        return cls(as_ratfunc(a), as_ratfunc(b), as_ratfunc(c), as_ratfunc(d))

    @classmethod
    def zero(cls) -> "Mat2":
        return cls(ZERO, ZERO, ZERO, ZERO)

    @classmethod
    def eye(cls) -> "Mat2":
        return cls.of(1, 0, 0, 1)

    def __add__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                    self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def scale(self, k) -> "Mat2":
        k = as_ratfunc(k)
        return Mat2(self.a * k, self.b * k, self.c * k, self.d * k)

    def adj(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a)

    def det(self) -> RatFunc:
        return self.a * self.d - self.b * self.c

    def tr(self) -> RatFunc:
        return self.a + self.d

    def inverse(self) -> "Mat2":
        return self.adj().scale(self.det().inverse())

    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class CayleyElt:
    x: Mat2
    y: Mat2

    @classmethod
    def from_coords(cls, coords) -> "CayleyElt":
        c = [as_ratfunc(v) for v in coords]
        if len(c) != 8:
            raise ValueError("a Cayley element has 8 coordinates")
        return cls(Mat2(*c[:4]), Mat2(*c[4:]))

    def coords(self) -> tuple:
        return self.x.entries() + self.y.entries()

    def __add__(self, o: "CayleyElt") -> "CayleyElt":
        return CayleyElt(self.x + o.x, self.y + o.y)

    def __sub__(self, o: "CayleyElt") -> "CayleyElt":
        return CayleyElt(self.x - o.x, self.y - o.y)

    def __neg__(self) -> "CayleyElt":
        return CayleyElt(-self.x, -self.y)

    def scale(self, k) -> "CayleyElt":
        return CayleyElt(self.x.scale(k), self.y.scale(k))

    def __mul__(self, o: "CayleyElt") -> "CayleyElt":
        return cayley_mul(self, o)

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.coords())


def _unit(j: int) -> CayleyElt:
    return CayleyElt.from_coords([1 if i == j else 0 for i in range(8)])


BASIS_NAMES = ("e11", "e21", "e31", "e41", "e12", "e22", "e32", "e42")
BASIS = tuple(_unit(j) for j in range(8))
UNIT = CayleyElt(Mat2.eye(), Mat2.zero())


def cayley_mul(p: CayleyElt, q: CayleyElt) -> CayleyElt:
    """(x|y)(x'|y') = (x x' + adj(y') y | y' x + y adj(x'))."""
    return CayleyElt(p.x @ q.x + q.y.adj() @ p.y, q.y @ p.x + p.y @ q.x.adj())


def cayley_conj(c: CayleyElt) -> CayleyElt:
    return CayleyElt(c.x.adj(), -c.y)


def norm(c: CayleyElt) -> RatFunc:
    return c.x.det() - c.y.det()


def trace(c: CayleyElt) -> RatFunc:
    """The scalar k with c + conj(c) = k e."""
    return c.x.tr()


def pairing(c: CayleyElt, d: CayleyElt) -> RatFunc:
    """Polar form of the norm: N(c+d) - N(c) - N(d)."""
    return norm(c + d) - norm(c) - norm(d)


def l_map(a: CayleyElt, b: CayleyElt, c: CayleyElt) -> CayleyElt:
    return b.scale(pairing(c, a)) - a.scale(pairing(c, b))


def linear_map_to_matrix8(f) -> Matrix:
    """Matrix of a linear map; column j holds the coordinates of f(BASIS[j])."""
    return Matrix.from_columns([f(e).coords() for e in BASIS])


def act(g: Matrix, c: CayleyElt) -> CayleyElt:
    return CayleyElt.from_coords(g.apply(c.coords()))


def generic_element(prefix: str = "p", avoid=frozenset()) -> CayleyElt:
    return CayleyElt.from_coords([sym(n) for n in fresh_names(prefix, 8, avoid)])


def _generic_pair(g: Matrix):
    avoid = g.variables()
    return generic_element("p", avoid), generic_element("q", avoid)


def automorphism_defect(g: Matrix) -> tuple:
    """Coordinates of g(cd) - g(c)g(d) for generic c, d, followed by g(e) - e."""
    c, d = _generic_pair(g)
    lhs = act(g, cayley_mul(c, d))
    rhs = cayley_mul(act(g, c), act(g, d))
    return (lhs - rhs).coords() + (act(g, UNIT) - UNIT).coords()


def is_automorphism(g: Matrix) -> bool:
    """Exact symbolic test that g is an algebra automorphism fixing e."""
    if not (act(g, UNIT) - UNIT).is_zero():
        return False
    return all(v.is_zero() for v in automorphism_defect(g))


def derivation_defect(D: Matrix) -> tuple:
    c, d = _generic_pair(D)
    lhs = act(D, cayley_mul(c, d))
    rhs = cayley_mul(act(D, c), d) + cayley_mul(c, act(D, d))
    return (lhs - rhs).coords()


def is_derivation(D: Matrix) -> bool:
    return all(v.is_zero() for v in derivation_defect(D))
