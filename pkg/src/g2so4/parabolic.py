"""Standard parabolics B, P_alpha, P_beta: patterns, Levi cells, radicals, modular characters."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .g2 import (
    ALPHA, ALPHA_BETA, BETA, NEG_ALPHA, NEG_BETA, POSITIVE_ROOTS, THREE_ALPHA_BETA,
    THREE_ALPHA_TWO_BETA, TWO_ALPHA_BETA, GroupElt, Root, decompose_unipotent,
    identity_elt, n_alpha, n_beta, root_exponents, root_unipotent, torus_embed,
    torus_scaling,
)
from .matrix import Matrix
from .ratfunc import DomainError, as_ratfunc, sym, symbols

__all__ = [
    "ParabolicData", "BOREL", "P_ALPHA", "P_BETA", "PARABOLICS", "levi_cell",
    "CELL_DISPLAYS", "generic_levi", "LEVI_PATTERN", "parabolic_pattern",
    "in_pattern", "off_pattern", "generic_unipotent", "bracket",
    "modular_character", "modular_character_by_conjugation", "root_sum",
]


@dataclass(frozen=True)
class ParabolicData:
    name: str
    levi_roots: tuple
    radical_roots: tuple


BOREL = ParabolicData("B", (), POSITIVE_ROOTS)
P_ALPHA = ParabolicData("P_alpha", (ALPHA, NEG_ALPHA),
                        (BETA, ALPHA_BETA, TWO_ALPHA_BETA, THREE_ALPHA_BETA, THREE_ALPHA_TWO_BETA))
P_BETA = ParabolicData("P_beta", (BETA, NEG_BETA),
                       (ALPHA, ALPHA_BETA, TWO_ALPHA_BETA, THREE_ALPHA_BETA, THREE_ALPHA_TWO_BETA))
PARABOLICS = {p.name: p for p in (BOREL, P_ALPHA, P_BETA)}


def _product(elts) -> GroupElt:
    out = identity_elt()
    for g in elts:
        out = out * g
    return out


def levi_cell(cell: str, s=None, t=None, b=None, x=None, simple: Root = BETA) -> GroupElt:
    """One of the two Bruhat cells of the Levi of the maximal parabolic containing ``simple``.

    small: gamma(t, s) u(b) u_-(x);  big: u(b) gamma(t, s) u_-(x) n.
    Omitted parameters default to the symbols s, t, b, x.
    """
    s, t, b, x = (sym(n) if v is None else as_ratfunc(v)
                  for n, v in zip("stbx", (s, t, b, x)))
    if s.is_zero() or t.is_zero():
        raise DomainError("Bruhat cell parameters s, t must be nonzero")
    simple = Root(*simple)
    if simple not in (ALPHA, BETA):
        raise ValueError("the Levi cells are built for a simple root")
    n = n_beta() if simple == BETA else n_alpha()
    torus = torus_embed(t, s)
    up, down = root_unipotent(simple, b), root_unipotent(-simple, x)
    if cell == "small":
        return torus * up * down
    if cell == "big":
        return up * torus * down * n
    raise ValueError(f"unknown cell {cell!r}")


def _displays():
    s, t, b, x = symbols("s t b x")
    z = 0
    small = Matrix([
        [1, z, z, z, z, z, z, z],
        [z, t / s, z, z, t * x / s, z, z, z],
        [z, z, b * s * x / t + s / t, z, z, z, z, -b * s / t],
        [z, z, z, 1, z, z, z, z],
        [z, b * s, z, z, b * s * x + s, z, z, z],
        [z, z, z, z, z, t, z, z],
        [z, z, z, z, z, z, 1 / t, z],
        [z, z, -x / s, z, z, z, z, 1 / s],
    ])
    big = Matrix([
        [1, z, z, z, z, z, z, z],
        [z, t * x / s, z, z, -t / s, z, z, z],
        [z, z, -b / s, z, z, z, z, -b * x / s - s / t],
        [z, z, z, 1, z, z, z, z],
        [z, b * t * x / s + s, z, z, -b * t / s, z, z, z],
        [z, z, z, z, z, t, z, z],
        [z, z, z, z, z, z, 1 / t, z],
        [z, z, 1 / s, z, z, z, z, x / s],
    ])
    return {"small": small, "big": big}


# The two Levi cells as printed for P_beta, in the variables s, t, b, x.
CELL_DISPLAYS = _displays()


def generic_levi() -> Matrix:
    """Generic element of the Levi of P_beta in the nine-slot block form."""
    a, b, c, d, T, u, v, w, X = symbols("a b c d T u v w X")
    z = 0
    return Matrix([
        [1, z, z, z, z, z, z, z],
        [z, T, z, z, a, z, z, z],
        [z, z, u, z, z, z, z, b],
        [z, z, z, 1, z, z, z, z],
        [z, c, z, z, v, z, z, z],
        [z, z, z, z, z, w, z, z],
        [z, z, z, z, z, z, 1 / w, z],
        [z, z, d, z, z, z, z, X],
    ])


LEVI_PATTERN = generic_levi().support()


def in_pattern(m: Matrix, pattern) -> bool:
    return all(e.is_zero() for i, j, e in m.entries() if (i, j) not in pattern)


def off_pattern(m: Matrix, pattern) -> tuple:
    """Nonzero entries outside ``pattern`` as ((i, j), value)."""
    return tuple(((i, j), e) for i, j, e in m.entries() if (i, j) not in pattern and not e.is_zero())


def generic_unipotent(P: ParabolicData, coords=None) -> GroupElt:
    """Ordered product of root maps over the radical roots of P (height order)."""
    roots = P.radical_roots
    if coords is None:
        coords = [sym(f"r{i + 1}") if i < 4 else sym("r_5") for i in range(len(roots))]
    if len(coords) != len(roots):
        raise ValueError(f"{P.name} radical needs {len(roots)} coordinates")
    return _product(root_unipotent(r, c) for r, c in zip(roots, coords))


def bracket(r1, r2, r3, r4) -> GroupElt:
    """u_alpha(r1) u_{alpha+beta}(r2) u_{3alpha+beta}(r3) u_{3alpha+2beta}(r4)."""
    roots = (ALPHA, ALPHA_BETA, THREE_ALPHA_BETA, THREE_ALPHA_TWO_BETA)
    return _product(root_unipotent(r, c) for r, c in zip(roots, (r1, r2, r3, r4)))


def _levi_generic(P: ParabolicData) -> list:
    """Matrices whose supports cover the Levi of P."""
    if P is BOREL or P.name == "B":
        return [torus_embed(sym("l1"), sym("l2")).mat]
    simple = P.levi_roots[0]
    return [levi_cell("small", simple=simple).mat, levi_cell("big", simple=simple).mat]


@lru_cache(maxsize=None)
def parabolic_pattern(name: str) -> frozenset:
    """Union of supports of (generic Levi cell) x (generic radical element)."""
    P = PARABOLICS[name]
    u = generic_unipotent(P).mat
    out = frozenset()
    for m in _levi_generic(P):
        out |= (m * u).support()
    if name == "P_beta":
        out |= LEVI_PATTERN
    return out


def modular_character(P: ParabolicData) -> tuple:
    """Exponents (p, q) of the modular character, as the sum of radical root characters."""
    p = q = 0
    for r in P.radical_roots:
        a, b = torus_scaling(r)
        p, q = p + a, q + b
    return (p, q)


def modular_character_by_conjugation(P: ParabolicData) -> tuple:
    """Independent route: conjugate a generic radical element by the torus,
    read each coordinate's scaling and multiply them (the action is diagonal
    in these coordinates, so this is its determinant)."""
    l1, l2 = sym("l1"), sym("l2")
    coords = [sym(f"k_{i}") for i in range(len(P.radical_roots))]
    g = torus_embed(l1, l2).mat
    m = g * generic_unipotent(P, coords).mat * g.inverse()
    factors, ok = decompose_unipotent(m, P.radical_roots)
    if not ok:
        raise ArithmeticError(f"torus conjugate of the {P.name} radical did not decompose")
    det = as_ratfunc(1)
    for (root, value), k in zip(factors, coords):
        det = det * (value / k)
    num, den = det.num, det.den
    if not (num.is_monomial() and den.is_monomial()):
        raise ArithmeticError("radical action is not a torus character")
    (nm, c), = num.terms.items()
    (dm, _), = den.terms.items()
    e = dict(nm)
    for v, k in dm:
        e[v] = e.get(v, 0) - k
    if c != 1 or set(e) - {"l1", "l2"}:
        raise ArithmeticError(f"unexpected radical determinant {det}")
    return (e.get("l1", 0), e.get("l2", 0))


def root_sum(roots) -> tuple:
    """Sum of abstract root characters, from alpha=(1,-1), beta=(-1,2)."""
    p = q = 0
    for r in roots:
        a, b = root_exponents(r)
        p, q = p + a, q + b
    return (p, q)
