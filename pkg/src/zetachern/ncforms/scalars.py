"""Exact coefficient arithmetic for the symbolic form calculus.

Coefficients are Gaussian rationals (QI) times integer powers of the
symbolic unit sqrt(pi).  The second unit sqrt(2*pi*i) never needs its own
slot: with the branch pinned to e^{i*pi/4} sqrt(2*pi) one has

    sqrt(2*i)     = 1 + i            (Gaussian rational),
    sqrt(2*pi*i)  = (1 + i) sqrt(pi),
    1/sqrt(2*pi*i) = (1 - i)/2 * sqrt(pi)^(-1),

so every normalization constant in the calculus lives in QI[sqpi, 1/sqpi].
Conversion to floating complex happens only at module boundaries.
"""

from __future__ import annotations

import math
from fractions import Fraction


class QI:
    """Gaussian rational a + b*i with exact Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, other):
        other = _as_qi(other)
        return QI(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return QI(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-_as_qi(other))

    def __rsub__(self, other):
        return _as_qi(other) + (-self)

    def __mul__(self, other):
        other = _as_qi(other)
        return QI(self.re * other.re - self.im * other.im,
                  self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_qi(other)
        n2 = other.re * other.re + other.im * other.im
        if n2 == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return QI((self.re * other.re + self.im * other.im) / n2,
                  (self.im * other.re - self.re * other.im) / n2)

    def conj(self):
        return QI(self.re, -self.im)

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __eq__(self, other):
        try:
            other = _as_qi(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self):
        if self.im == 0:
            return f"QI({self.re})"
        return f"QI({self.re}, {self.im})"

    def key(self):
        return (self.re.numerator, self.re.denominator,
                self.im.numerator, self.im.denominator)


def _as_qi(x) -> QI:
    if isinstance(x, QI):
        return x
    if isinstance(x, (int, Fraction)):
        return QI(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to QI")


QI_ZERO = QI(0)
QI_ONE = QI(1)
SQRT_2I = QI(1, 1)          # sqrt(2i) with the pinned branch


class Coeff:
    """Finite sum over e of (Gaussian rational)_e * sqrt(pi)^e.

    The sqrt(pi)-exponent e is an integer; e = 2 means pi, e = -1 means
    1/sqrt(pi).  Sums keep distinct exponents separate so products of
    Gamma factors and 1/sqrt(2*pi*i) normalizations stay exact.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=None):
        # parts: dict exponent -> QI, zero entries dropped
        self.parts = {}
        if parts:
            for e, c in parts.items():
                c = _as_qi(c) if not isinstance(c, QI) else c
                if not c.is_zero():
                    self.parts[e] = c

    @staticmethod
    def of(x, e: int = 0) -> "Coeff":
        return Coeff({e: _as_qi(x)})

    def __add__(self, other):
        other = _as_coeff(other)
        parts = dict(self.parts)
        for e, c in other.parts.items():
            s = parts.get(e, QI_ZERO) + c
            if s.is_zero():
                parts.pop(e, None)
            else:
                parts[e] = s
        return Coeff(parts)

    __radd__ = __add__

    def __neg__(self):
        return Coeff({e: -c for e, c in self.parts.items()})

    def __sub__(self, other):
        return self + (-_as_coeff(other))

    def __mul__(self, other):
        other = _as_coeff(other)
        parts = {}
        for e1, c1 in self.parts.items():
            for e2, c2 in other.parts.items():
                e = e1 + e2
                s = parts.get(e, QI_ZERO) + c1 * c2
                if s.is_zero():
                    parts.pop(e, None)
                else:
                    parts[e] = s
        return Coeff(parts)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_coeff(other)
        if len(other.parts) != 1:
            raise ValueError("can only divide by a single sqrt(pi)-monomial")
        (e2, c2), = other.parts.items()
        return Coeff({e1 - e2: c1 / c2 for e1, c1 in self.parts.items()})

    def is_zero(self):
        return not self.parts

    def __eq__(self, other):
        try:
            other = _as_coeff(other)
        except TypeError:
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(self.key())

    def __complex__(self):
        sp = math.sqrt(math.pi)
        return sum(complex(c) * sp ** e for e, c in self.parts.items()) or 0j

    def key(self):
        return tuple(sorted((e, c.key()) for e, c in self.parts.items()))

    def __repr__(self):
        if not self.parts:
            return "Coeff(0)"
        bits = [f"{c!r}*sqpi^{e}" if e else f"{c!r}" for e, c in sorted(self.parts.items())]
        return "Coeff(" + " + ".join(bits) + ")"


def _as_coeff(x) -> Coeff:
    if isinstance(x, Coeff):
        return x
    if isinstance(x, (int, Fraction, QI)):
        return Coeff.of(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Coeff")


COEFF_ZERO = Coeff()
COEFF_ONE = Coeff.of(1)
SQRT_PI = Coeff.of(1, e=1)
SQRT_2PI_I = Coeff.of(SQRT_2I, e=1)                 # (1+i) sqrt(pi)
INV_SQRT_2PI_I = Coeff.of(QI(Fraction(1, 2), Fraction(-1, 2)), e=-1)


def gamma_exact(n2: int) -> Coeff:
    """Gamma(n2/2) as an exact Coeff, for positive integer n2.

    Integer argument gives a factorial; half-integer gives
    sqrt(pi) * (2m)! / (4^m m!) for argument m + 1/2.
    """
    if n2 <= 0:
        raise ValueError("gamma_exact needs a positive half-integer argument")
    if n2 % 2 == 0:
        return Coeff.of(math.factorial(n2 // 2 - 1))
    m = (n2 - 1) // 2
    return Coeff.of(Fraction(math.factorial(2 * m), 4 ** m * math.factorial(m)), e=1)


def gamma_one_plus_half(n: int) -> Coeff:
    """Gamma(1 + n/2), exact."""
    return gamma_exact(n + 2)
