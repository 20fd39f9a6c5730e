"""Exact multivariate polynomials and rational functions over Q.

Polynomials are sparse: a dict from monomials to ``gmpy2.mpq`` coefficients,
where a monomial is a name-sorted tuple of ``(variable, exponent)`` pairs.
Rational functions are kept in a canonical form (numerator and denominator
coprime, denominator monic in graded-lex order), so two values are equal as
rational functions exactly when their representations compare equal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from gmpy2 import mpq
from sympy.polys.domains import QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyRing

__all__ = [
    "REGISTRY",
    "DomainError",
    "ContractViolation",
    "Poly",
    "RatFunc",
    "LinearSystem",
    "LinearSolution",
    "as_ratfunc",
    "sym",
    "symbols",
    "fresh_names",
    "normalize",
    "substitute",
    "solve_linear",
]

# Named parameters used throughout the package.  Generated names always carry
# an underscore and therefore never collide with these.
REGISTRY = (
    "s", "t", "x", "y", "b", "m", "n", "r1", "r2", "r3", "r4", "l1", "l2",
    "a", "c", "d", "T", "u", "v", "w", "X",
)
_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9]*(_[0-9]+)?$")


class DomainError(ArithmeticError):
    """Zero denominator or division by zero."""


class ContractViolation(ValueError):
    """Input outside an operation's contract (e.g. a nonlinear equation)."""


Monomial = tuple  # tuple[tuple[str, int], ...]
ONE_MONO: Monomial = ()


@lru_cache(maxsize=1 << 16)
def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_div(a: Monomial, b: Monomial) -> Monomial:
    d = dict(a)
    for v, e in b:
        r = d.get(v, 0) - e
        if r < 0:
            raise ArithmeticError("monomial does not divide")
        if r:
            d[v] = r
        else:
            del d[v]
    return tuple(sorted(d.items()))


def _mono_key(m: Monomial):
    return (sum(e for _, e in m), m)


def _coef(value) -> mpq:
    if isinstance(value, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(value, (int, Fraction, Rational)):
        return mpq(value)
    if type(value).__name__ == "mpq" or type(value).__name__ == "mpz":
        return mpq(value)
    raise TypeError(f"not an exact rational: {value!r}")


def _fmt_coef(c: mpq) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _fmt_mono(m: Monomial) -> str:
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)


class Poly:
    """Sparse multivariate polynomial with rational coefficients.

    Treat instances as immutable; ``terms`` never holds a zero coefficient.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict | None = None):
        self.terms = terms if terms is not None else {}
        self._hash = None

    @classmethod
    def const(cls, c) -> "Poly":
        c = _coef(c)
        return cls({ONE_MONO: c} if c else {})

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({((name, 1),): mpq(1)})

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and ONE_MONO in self.terms)

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get(ONE_MONO) == 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> mpq:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(ONE_MONO, mpq(0))

    # -- structure --------------------------------------------------------
    def variables(self) -> frozenset:
        return frozenset(v for m in self.terms for v, _ in m)

    def degree(self, var: str | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e for _, e in m) for m in self.terms)
        return max(dict(m).get(var, 0) for m in self.terms)

    def lead(self):
        m = max(self.terms, key=_mono_key)
        return m, self.terms[m]

    def coeff(self, var: str, k: int) -> "Poly":
        """Coefficient of ``var**k``, as a polynomial in the other variables."""
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            if d.get(var, 0) == k:
                d.pop(var, None)
                out[tuple(sorted(d.items()))] = c
        return Poly(out)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "Poly") -> "Poly":
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            r = out.get(m, 0) + c
            if r:
                out[m] = r
            else:
                out.pop(m, None)
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.terms or not other.terms:
            return Poly()
        if len(other.terms) == 1 and ONE_MONO in other.terms:
            return self.scale(other.terms[ONE_MONO])
        if len(self.terms) == 1 and ONE_MONO in self.terms:
            return other.scale(self.terms[ONE_MONO])
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                r = out.get(m, 0) + c1 * c2
                if r:
                    out[m] = r
                else:
                    out.pop(m, None)
        return Poly(out)

    def scale(self, c) -> "Poly":
        c = _coef(c)
        if not c:
            return Poly()
        if c == 1:
            return self
        return Poly({m: v * c for m, v in self.terms.items()})

    def mul_mono(self, mono: Monomial) -> "Poly":
        return Poly({_mono_mul(m, mono): c for m, c in self.terms.items()})

    def div_mono(self, mono: Monomial) -> "Poly":
        return Poly({_mono_div(m, mono): c for m, c in self.terms.items()})

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (-sum(e for _, e in m), m)):
            c = self.terms[m]
            if not m:
                body = _fmt_coef(abs(c))
            elif abs(c) == 1:
                body = _fmt_mono(m)
            else:
                body = f"{_fmt_coef(abs(c))}*{_fmt_mono(m)}"
            parts.append(("-" if c < 0 else "+", body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__


# -- gcd backend ------------------------------------------------------------

@lru_cache(maxsize=256)
def _ring(names: tuple) -> PolyRing:
    return PolyRing(names, QQ, lex)


def _to_ring(p: Poly, ring: PolyRing, index: dict):
    n = len(index)
    data = {}
    for m, c in p.terms.items():
        ev = [0] * n
        for v, e in m:
            ev[index[v]] = e
        data[tuple(ev)] = QQ.convert(c)
    return ring.from_dict(data)


def _from_ring(f, names: tuple) -> Poly:
    out = {}
    for ev, c in f.items():
        m = tuple((names[i], e) for i, e in enumerate(ev) if e)
        out[m] = mpq(c)
    return Poly(out)


def _cancel(num: Poly, den: Poly) -> tuple:
    """Remove the gcd of ``num`` and ``den`` (``den`` non-constant)."""
    if den.is_monomial():
        (dm, _), = den.terms.items()
        common = dict(dm)
        for m in num.terms:
            md = dict(m)
            for v in list(common):
                e = min(common[v], md.get(v, 0))
                if e:
                    common[v] = e
                else:
                    del common[v]
            if not common:
                break
        if common:
            g = tuple(sorted(common.items()))
            num, den = num.div_mono(g), den.div_mono(g)
        return num, den
    names = tuple(sorted(num.variables() | den.variables()))
    ring = _ring(names)
    index = {v: i for i, v in enumerate(names)}
    _, cf, cg = _to_ring(num, ring, index).cofactors(_to_ring(den, ring, index))
    return _from_ring(cf, names), _from_ring(cg, names)


def _canonical(num: Poly, den: Poly) -> tuple:
    if den.is_zero():
        raise DomainError("zero denominator")
    if num.is_zero():
        return Poly(), Poly.const(1)
    if den.is_constant():
        c = den.constant_value()
        return (num if c == 1 else num.scale(1 / c)), Poly.const(1)
    num, den = _cancel(num, den)
    if den.is_constant():
        c = den.constant_value()
        return num.scale(1 / c), Poly.const(1)
    _, lc = den.lead()
    if lc != 1:
        inv = 1 / lc
        num, den = num.scale(inv), den.scale(inv)
    return num, den


# -- rational functions -------------------------------------------------------

class RatFunc:
    """Element of Q(vars) in canonical form.  Immutable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly | None = None, *, canonical: bool = False):
        if den is None:
            den = Poly.const(1)
        if not canonical:
            num, den = _canonical(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num.terms

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        c = self.num.constant_value()
        return Fraction(int(c.numerator), int(c.denominator))

    def variables(self) -> frozenset:
        return self.num.variables() | self.den.variables()

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other) -> "RatFunc":
        other = as_ratfunc(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den.is_one() and other.den.is_one():
            return RatFunc(self.num + other.num, self.den, canonical=True)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, canonical=True)

    def __sub__(self, other) -> "RatFunc":
        return self + (-as_ratfunc(other))

    def __rsub__(self, other) -> "RatFunc":
        return as_ratfunc(other) - self

    def __mul__(self, other) -> "RatFunc":
        other = as_ratfunc(other)
        if self.is_zero() or other.is_zero():
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return RatFunc(self.num * other.num, self.den, canonical=True)
        if other.is_constant():
            return RatFunc(self.num.scale(other.num.constant_value()), self.den, canonical=True)
        if self.is_constant():
            return RatFunc(other.num.scale(self.num.constant_value()), other.den, canonical=True)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise DomainError("division by zero")
        num, den = self.den, self.num
        _, lc = den.lead()
        if lc != 1:
            num, den = num.scale(1 / lc), den.scale(1 / lc)
        return RatFunc(num, den, canonical=True)

    def __truediv__(self, other) -> "RatFunc":
        return self * as_ratfunc(other).inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return as_ratfunc(other) * self.inverse()

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return ONE
        return RatFunc(self.num ** n, self.den ** n, canonical=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            try:
                other = as_ratfunc(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        n = str(self.num)
        if len(self.num.terms) > 1 or "/" in n:
            n = f"({n})"
        d = str(self.den)
        if len(self.den.terms) > 1 or not self.den.is_monomial() or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


ZERO = RatFunc(Poly(), canonical=True)
ONE = RatFunc(Poly.const(1), canonical=True)


def as_ratfunc(value) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, Poly):
        return RatFunc(value, canonical=True)
    if isinstance(value, str):
        return sym(value)
    c = _coef(value)
    return RatFunc(Poly.const(c), canonical=True)


def sym(name: str) -> RatFunc:
    if not _NAME_RE.match(name):
        raise ValueError(f"bad variable name {name!r}")
    return RatFunc(Poly.var(name), canonical=True)


def symbols(names: str) -> tuple:
    return tuple(sym(n) for n in names.replace(",", " ").split())


def fresh_names(prefix: str, count: int, avoid=frozenset()) -> tuple:
    """``count`` generated names ``prefix_0, prefix_1, ...`` not in ``avoid``.

    Generated names contain an underscore, so they never clash with
    ``REGISTRY``.  If any of them is in ``avoid`` the prefix is extended.
    """
    while True:
        names = tuple(f"{prefix}_{i}" for i in range(count))
        if not (set(names) & set(avoid)):
            return names
        prefix += "z"


def normalize(num, den=1) -> RatFunc:
    """Canonical form of ``num/den``; raises DomainError if ``den`` is 0."""
    num, den = as_ratfunc(num), as_ratfunc(den)
    return num / den


# -- substitution -------------------------------------------------------------

def _subs_poly(p: Poly, vals: dict) -> tuple:
    """Substitute into a polynomial; returns ``(numerator, denominator)`` polys."""
    bound = {v: vals[v] for v in p.variables() if v in vals}
    if not bound:
        return p, Poly.const(1)
    top = {v: 0 for v in bound}
    for m in p.terms:
        for v, e in m:
            if v in top and e > top[v]:
                top[v] = e
    cache: dict = {}

    def power(poly: Poly, v: str, k: int, tag: str) -> Poly:
        key = (v, k, tag)
        if key not in cache:
            cache[key] = poly ** k
        return cache[key]

    common = Poly.const(1)
    for v, r in bound.items():
        if not r.den.is_one():
            common = common * power(r.den, v, top[v], "d")
    out = Poly()
    for m, c in p.terms.items():
        term = Poly({(): c})
        free = []
        d = dict(m)
        for v, r in bound.items():
            e = d.pop(v, 0)
            if e:
                term = term * power(r.num, v, e, "n")
            if not r.den.is_one() and top[v] - e:
                term = term * power(r.den, v, top[v] - e, "d")
        free = tuple(sorted(d.items()))
        if free:
            term = term.mul_mono(free)
        out = out + term
    return out, common


def substitute(r, bindings: dict) -> RatFunc:
    """Simultaneous substitution of variables by rational functions."""
    r = as_ratfunc(r)
    vals = {k: as_ratfunc(v) for k, v in bindings.items()}
    n1, d1 = _subs_poly(r.num, vals)
    n2, d2 = _subs_poly(r.den, vals)
    denominator = d1 * n2
    if denominator.is_zero():
        raise DomainError(f"denominator of {r} vanishes under substitution")
    return RatFunc(n1 * d2, denominator)


# -- linear systems -------------------------------------------------------------

@dataclass(frozen=True)
class LinearSolution:
    consistent: bool
    pivots: dict = field(default_factory=dict)      # unknown -> RatFunc
    free: tuple = ()
    conditions: tuple = ()                          # RatFuncs assumed nonzero

    @property
    def dimension(self) -> int:
        return len(self.free) if self.consistent else -1

    def value(self, unknown: str) -> RatFunc:
        if unknown in self.pivots:
            return self.pivots[unknown]
        if unknown in self.free:
            return sym(unknown)
        raise KeyError(unknown)

    def assignment(self) -> dict:
        out = {u: sym(u) for u in self.free}
        out.update(self.pivots)
        return out


@dataclass(frozen=True)
class LinearSystem:
    equations: tuple
    unknowns: tuple

    @property
    def parameters(self) -> frozenset:
        names = set()
        for e in self.equations:
            names |= as_ratfunc(e).variables()
        return frozenset(names) - set(self.unknowns)

    def solve(self) -> LinearSolution:
        return solve_linear(self)


def _linear_row(eq, unknowns: tuple) -> tuple:
    r = as_ratfunc(eq)
    uset = set(unknowns)
    if r.den.variables() & uset:
        raise ContractViolation(f"unknown in a denominator: {r}")
    coeffs: dict = {}
    const = {}
    for m, c in r.num.terms.items():
        hit = [(v, e) for v, e in m if v in uset]
        if not hit:
            const[m] = c
            continue
        if len(hit) > 1 or hit[0][1] != 1:
            raise ContractViolation(f"equation is not affine in the unknowns: {r}")
        v = hit[0][0]
        rest = tuple(p for p in m if p[0] != v)
        coeffs.setdefault(v, {})[rest] = c
    den = RatFunc(r.den, canonical=True)
    row = {v: RatFunc(Poly(t), canonical=True) / den for v, t in coeffs.items()}
    return row, RatFunc(Poly(const), canonical=True) / den


def _pivot_cost(c: RatFunc):
    return (0 if c.is_constant() else 1, c.num.degree() + c.den.degree(), len(c.num.terms))


def solve_linear(system: LinearSystem) -> LinearSolution:
    """Gaussian elimination over the field of rational functions in the parameters.

    Non-constant pivots are recorded in ``conditions`` (assumed nonvanishing).
    """
    unknowns = tuple(system.unknowns)
    order = {u: i for i, u in enumerate(unknowns)}
    rows = []
    for eq in system.equations:
        row, const = _linear_row(eq, unknowns)
        if row or not const.is_zero():
            rows.append((row, const))
    pivots: dict = {}
    conditions = []
    while rows:
        # cheapest pivot overall; ties broken by unknown order for determinism
        best = None
        for idx, (row, const) in enumerate(rows):
            if not row:
                if not const.is_zero():
                    return LinearSolution(False, conditions=tuple(conditions))
                continue
            for v, c in row.items():
                key = (_pivot_cost(c), order[v], idx)
                if best is None or key < best[0]:
                    best = (key, idx, v)
        if best is None:
            break
        _, idx, v = best
        row, const = rows.pop(idx)
        c = row[v]
        if not c.is_constant():
            conditions.append(c)
        # v = -(const + sum_{w != v} row[w] w) / c
        expr_row = {w: -(k / c) for w, k in row.items() if w != v}
        expr_const = -(const / c)
        new_rows = []
        for r2, c2 in rows:
            if v in r2:
                f = r2[v]
                merged = {w: k for w, k in r2.items() if w != v}
                for w, k in expr_row.items():
                    val = merged.get(w, ZERO) + f * k
                    if val.is_zero():
                        merged.pop(w, None)
                    else:
                        merged[w] = val
                c2 = c2 + f * expr_const
                r2 = merged
            if r2 or not c2.is_zero():
                new_rows.append((r2, c2))
            elif not c2.is_zero():
                return LinearSolution(False, conditions=tuple(conditions))
        rows = new_rows
        for p, (prow, pconst) in list(pivots.items()):
            if v in prow:
                f = prow[v]
                merged = {w: k for w, k in prow.items() if w != v}
                for w, k in expr_row.items():
                    val = merged.get(w, ZERO) + f * k
                    if val.is_zero():
                        merged.pop(w, None)
                    else:
                        merged[w] = val
                pivots[p] = (merged, pconst + f * expr_const)
        pivots[v] = (expr_row, expr_const)
    free = tuple(u for u in unknowns if u not in pivots)
    exprs = {}
    for v, (prow, pconst) in pivots.items():
        e = pconst
        for w, k in prow.items():
            e = e + k * sym(w)
        exprs[v] = e
    exprs = {u: exprs[u] for u in unknowns if u in exprs}
    return LinearSolution(True, exprs, free, tuple(conditions))
