"""Matrices over the free (group-)algebra with exact Gaussian-rational
coefficients.

Words are tuples of (letter, +1|-1); adjacent inverse pairs cancel on
concatenation, so declared-invertible generators behave as group-likes
while plain generators never meet an inverse.  An AlgebraElement is a
square matrix of such polynomials; constant matrices (empty words) embed
exact rational matrix algebras.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import QI, QI_ONE, QI_ZERO, _as_qi

EMPTY_WORD = ()


def _reduce_word(word):
    out = []
    for letter, exp in word:
        if out and out[-1][0] == letter and out[-1][1] == -exp:
            out.pop()
        else:
            out.append((letter, exp))
    return tuple(out)


class NCPoly:
    """Noncommutative polynomial: dict word -> QI coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for w, c in terms.items():
                c = c if isinstance(c, QI) else _as_qi(c)
                if not c.is_zero():
                    self.terms[w] = c

    @staticmethod
    def const(c) -> "NCPoly":
        return NCPoly({EMPTY_WORD: _as_qi(c)})

    @staticmethod
    def gen(letter: str, exp: int = 1) -> "NCPoly":
        return NCPoly({((letter, exp),): QI_ONE})

    def __add__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = terms.get(w, QI_ZERO) + c
            if s.is_zero():
                terms.pop(w, None)
            else:
                terms[w] = s
        return NCPoly(terms)

    def __neg__(self):
        return NCPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QI)):
            c0 = _as_qi(other)
            return NCPoly({w: c * c0 for w, c in self.terms.items()})
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = _reduce_word(w1 + w2)
                s = terms.get(w, QI_ZERO) + c1 * c2
                if s.is_zero():
                    terms.pop(w, None)
                else:
                    terms[w] = s
        return NCPoly(terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QI)):
            return self * other
        return NotImplemented

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return (self - other).is_zero()

    def key(self):
        return tuple(sorted((w, c.key()) for w, c in self.terms.items()))

    def subs(self, env):
        """Evaluate letters from env: letter -> complex (scalars only)."""
        total = 0j
        for w, c in self.terms.items():
            val = complex(c)
            for letter, exp in w:
                val *= env[letter] ** exp
            total += val
        return total

    def __repr__(self):
        if not self.terms:
            return "NCPoly(0)"
        def wstr(w):
            return "*".join(l if e == 1 else f"{l}^-1" for l, e in w) or "1"
        return " + ".join(f"{c!r}.{wstr(w)}" for w, c in sorted(self.terms.items()))


class AlgebraElement:
    """Square matrix over NCPoly; the working coordinate algebra."""

    __slots__ = ("size", "entries")

    def __init__(self, size: int, entries=None):
        self.size = size
        if entries is None:
            entries = [[NCPoly() for _ in range(size)] for _ in range(size)]
        self.entries = entries

    # -- constructors ------------------------------------------------
    @staticmethod
    def zero(size: int) -> "AlgebraElement":
        return AlgebraElement(size)

    @staticmethod
    def identity(size: int) -> "AlgebraElement":
        a = AlgebraElement(size)
        for i in range(size):
            a.entries[i][i] = NCPoly.const(1)
        return a

    @staticmethod
    def from_rational(rows) -> "AlgebraElement":
        size = len(rows)
        a = AlgebraElement(size)
        for i in range(size):
            for j in range(size):
                v = rows[i][j]
                if not isinstance(v, QI):
                    v = QI(v)
                if not v.is_zero():
                    a.entries[i][j] = NCPoly.const(v)
        return a

    @staticmethod
    def elementary(size: int, i: int, j: int) -> "AlgebraElement":
        a = AlgebraElement(size)
        a.entries[i][j] = NCPoly.const(1)
        return a

    @staticmethod
    def scalar_gen(letter: str, exp: int = 1, size: int = 1) -> "AlgebraElement":
        a = AlgebraElement(size)
        for i in range(size):
            a.entries[i][i] = NCPoly.gen(letter, exp)
        return a

    @staticmethod
    def diag(polys) -> "AlgebraElement":
        size = len(polys)
        a = AlgebraElement(size)
        for i, p in enumerate(polys):
            a.entries[i][i] = p
        return a

    # -- arithmetic ----------------------------------------------------
    def _check(self, other):
        if self.size != other.size:
            raise ValueError("matrix size mismatch")

    def __add__(self, other):
        self._check(other)
        return AlgebraElement(self.size, [
            [self.entries[i][j] + other.entries[i][j] for j in range(self.size)]
            for i in range(self.size)])

    def __neg__(self):
        return AlgebraElement(self.size, [
            [-self.entries[i][j] for j in range(self.size)]
            for i in range(self.size)])

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other):
        self._check(other)
        n = self.size
        out = AlgebraElement(n)
        for i in range(n):
            row = self.entries[i]
            for j in range(n):
                acc = NCPoly()
                for k in range(n):
                    if row[k].is_zero() or other.entries[k][j].is_zero():
                        continue
                    acc = acc + row[k] * other.entries[k][j]
                out.entries[i][j] = acc
        return out

    def scale(self, c):
        return AlgebraElement(self.size, [
            [self.entries[i][j] * c for j in range(self.size)]
            for i in range(self.size)])

    def trace(self) -> NCPoly:
        acc = NCPoly()
        for i in range(self.size):
            acc = acc + self.entries[i][i]
        return acc

    def is_zero(self):
        return all(p.is_zero() for row in self.entries for p in row)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.size == other.size and (self - other).is_zero()

    def key(self):
        return (self.size,
                tuple(tuple(p.key() for p in row) for row in self.entries))

    def subs(self, env):
        """Numeric evaluation; returns a nested list of complex."""
        return [[self.entries[i][j].subs(env) for j in range(self.size)]
                for i in range(self.size)]

    def __repr__(self):
        return f"AlgebraElement({self.size}x{self.size})"


def rational_inverse(a: AlgebraElement) -> AlgebraElement:
    """Exact inverse of a constant (word-free) matrix, by Gauss-Jordan."""
    n = a.size
    M = [[None] * (2 * n) for _ in range(n)]
    for i in range(n):
        for j in range(n):
            p = a.entries[i][j]
            for w in p.terms:
                if w != EMPTY_WORD:
                    raise ValueError("rational_inverse needs a constant matrix")
            M[i][j] = p.terms.get(EMPTY_WORD, QI_ZERO)
        for j in range(n):
            M[i][n + j] = QI_ONE if i == j else QI_ZERO
    for col in range(n):
        piv = next((r for r in range(col, n) if not M[r][col].is_zero()), None)
        if piv is None:
            raise ValueError("matrix not invertible")
        M[col], M[piv] = M[piv], M[col]
        inv = QI_ONE / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and not M[r][col].is_zero():
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    out = AlgebraElement(n)
    for i in range(n):
        for j in range(n):
            if not M[i][n + j].is_zero():
                out.entries[i][j] = NCPoly.const(M[i][n + j])
    return out
