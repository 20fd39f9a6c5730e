"""Dense square matrices over the rational-function field."""

from __future__ import annotations

from .ratfunc import ONE, ZERO, DomainError, RatFunc, as_ratfunc, substitute

__all__ = ["Matrix", "identity", "zeros", "diag"]


class Matrix:
    """Immutable n x n matrix of RatFunc entries (row-major tuples)."""

    __slots__ = ("rows", "n", "_hash")

    def __init__(self, rows):
        rows = tuple(tuple(as_ratfunc(e) for e in r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.rows = rows
        self.n = n
        self._hash = None

    @classmethod
    def _raw(cls, rows) -> "Matrix":
        m = cls.__new__(cls)
        m.rows = rows
        m.n = len(rows)
        m._hash = None
        return m

    @classmethod
    def from_columns(cls, cols) -> "Matrix":
        cols = [[as_ratfunc(e) for e in c] for c in cols]
        return cls(tuple(tuple(c[i] for c in cols) for i in range(len(cols))))

    def __getitem__(self, ij) -> RatFunc:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def entries(self):
        for i, r in enumerate(self.rows):
            for j, e in enumerate(r):
                yield i, j, e

    # -- arithmetic -------------------------------------------------------
    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            c = as_ratfunc(other)
            return Matrix._raw(tuple(tuple(e * c for e in r) for r in self.rows))
        n = self.n
        cols = [[(k, other.rows[k][j]) for k in range(n) if not other.rows[k][j].is_zero()]
                for j in range(n)]
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                acc = ZERO
                for k, b in col:
                    a = r[k]
                    if not a.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return Matrix._raw(tuple(out))

    def __rmul__(self, c) -> "Matrix":
        return self * c

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix._raw(tuple(tuple(a + b for a, b in zip(r1, r2))
                                 for r1, r2 in zip(self.rows, other.rows)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix._raw(tuple(tuple(a - b for a, b in zip(r1, r2))
                                 for r1, r2 in zip(self.rows, other.rows)))

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self.rows))

    def apply(self, vec) -> tuple:
        vec = [as_ratfunc(v) for v in vec]
        out = []
        for r in self.rows:
            acc = ZERO
            for a, v in zip(r, vec):
                if not a.is_zero() and not v.is_zero():
                    acc = acc + a * v
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix._raw(tuple(zip(*self.rows)))

    def inverse(self) -> "Matrix":
        if self.is_diagonal():
            return Matrix._raw(tuple(
                tuple(self.rows[i][i].inverse() if i == j else ZERO for j in range(self.n))
                for i in range(self.n)))
        n = self.n
        a = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = None
            for r in range(col, n):
                e = a[r][col]
                if not e.is_zero() and (piv is None or (e.is_constant() and not a[piv][col].is_constant())):
                    piv = r
                    if e.is_constant():
                        break
            if piv is None:
                raise DomainError("matrix is singular")
            a[col], a[piv] = a[piv], a[col]
            inv = a[col][col].inverse()
            a[col] = [e * inv for e in a[col]]
            for r in range(n):
                f = a[r][col]
                if r != col and not f.is_zero():
                    a[r] = [x - f * y if not y.is_zero() else x for x, y in zip(a[r], a[col])]
        return Matrix._raw(tuple(tuple(r[n:]) for r in a))

    def det(self) -> RatFunc:
        n = self.n
        a = [list(r) for r in self.rows]
        sign = ONE
        result = ONE
        for col in range(n):
            piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
            if piv is None:
                return ZERO
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                sign = -sign
            p = a[col][col]
            result = result * p
            for r in range(col + 1, n):
                f = a[r][col]
                if not f.is_zero():
                    f = f / p
                    a[r] = [x - f * y if not y.is_zero() else x for x, y in zip(a[r], a[col])]
        return sign * result

    def rank(self) -> int:
        a = [list(r) for r in self.rows]
        rank = 0
        for col in range(self.n):
            piv = next((r for r in range(rank, self.n) if not a[r][col].is_zero()), None)
            if piv is None:
                continue
            a[rank], a[piv] = a[piv], a[rank]
            p = a[rank][col]
            for r in range(rank + 1, self.n):
                f = a[r][col]
                if not f.is_zero():
                    f = f / p
                    a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
            rank += 1
        return rank

    def substitute(self, bindings: dict) -> "Matrix":
        return Matrix._raw(tuple(tuple(substitute(e, bindings) if not e.is_constant() else e
                                       for e in r) for r in self.rows))

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return all(e.is_zero() for r in self.rows for e in r)

    def is_identity(self) -> bool:
        return all((e.is_one() if i == j else e.is_zero()) for i, j, e in self.entries())

    def is_diagonal(self) -> bool:
        return all(e.is_zero() for i, j, e in self.entries() if i != j)

    def diagonal(self) -> tuple:
        return tuple(self.rows[i][i] for i in range(self.n))

    def support(self) -> frozenset:
        return frozenset((i, j) for i, j, e in self.entries() if not e.is_zero())

    def variables(self) -> frozenset:
        out = frozenset()
        for r in self.rows:
            for e in r:
                if not e.is_constant():
                    out |= e.variables()
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __str__(self) -> str:
        return "[" + ",\n ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.rows) + "]"

    def __repr__(self) -> str:
        return f"Matrix({self.n}x{self.n})"


def zeros(n: int = 8) -> Matrix:
    return Matrix._raw(tuple(tuple(ZERO for _ in range(n)) for _ in range(n)))


def identity(n: int = 8) -> Matrix:
    return Matrix._raw(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))


def diag(*entries) -> Matrix:
    entries = [as_ratfunc(e) for e in entries]
    n = len(entries)
    return Matrix._raw(tuple(tuple(entries[i] if i == j else ZERO for j in range(n))
                             for i in range(n)))
