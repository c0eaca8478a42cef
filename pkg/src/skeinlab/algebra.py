"""Exact arithmetic for the Kauffman bracket variable A.

Three layers, all with rational (never floating) coefficients:

* ``LaurentPoly`` -- sparse Laurent polynomials in A over Q, stored as a
  map ``exponent -> Fraction``.
* ``RatFunc`` -- quotients of Laurent polynomials kept in a canonical
  reduced form, so equality is plain field-by-field comparison.
* ``CycloNum`` -- residues modulo the 2(2d+1)-th cyclotomic polynomial,
  i.e. exact elements of Q(zeta) for zeta = exp(i*pi/(2d+1)).  The two
  evaluation points of level d differ by zeta -> 1/zeta and therefore
  share a single field.

``evaluate_at`` is the ring homomorphism A -> zeta^{sign}; it is the only
bridge from symbolic objects to cyclotomic ones, and ``cyclo_to_complex``
is the only bridge onward to floating point (via mpmath, at a requested
number of digits).

Conventions: the quantum integer is ``[n] = (A^{2n}-A^{-2n})/(A^2-A^{-2})``
and the loop weight of color n is ``delta_color(n) = (-1)^n [n+1]``.
"""

from __future__ import annotations

import cmath
import functools
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import BranchCutError, PoleError, ZeroDenominatorError

Rat = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class LaurentPoly:
    """A sparse Laurent polynomial in one variable A over Q.

    >>> A = LaurentPoly.gen()
    >>> print(A**2 + 2 - A**-2)
    A^2 + 2 - A^-2
    >>> print(quantum_integer(2) * quantum_integer(2))
    A^4 + 2 + A^-4
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean: dict[int, Fraction] = {}
        if terms:
            for e, c in terms.items():
                c = _as_fraction(c)
                if c:
                    clean[int(e)] = c
        self._terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def gen() -> "LaurentPoly":
        """The variable A itself."""
        return LaurentPoly({1: 1})

    @staticmethod
    def monomial(exponent: int, coeff=1) -> "LaurentPoly":
        return LaurentPoly({exponent: coeff})

    @staticmethod
    def const(c) -> "LaurentPoly":
        return LaurentPoly({0: c})

    # -- inspection --------------------------------------------------------

    def items(self):
        return self._terms.items()

    def coefficient(self, exponent: int) -> Fraction:
        return self._terms.get(exponent, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {0: Fraction(1)}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def mirror(self) -> "LaurentPoly":
        """The image under A -> A^{-1}."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = out
        res._hash = None
        return res

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = {e: -c for e, c in self._terms.items()}
        res._hash = None
        return res

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, Fraction] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = out
        res._hash = None
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only defined for monomials")
            ((e, c),) = self._terms.items()
            return LaurentPoly({e * n: Fraction(1, 1) / c ** (-n)})
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "LaurentPoly"):
        """Division with remainder, treating both operands as ordinary
        polynomials after factoring out their lowest monomials.

        The remainder is zero exactly when ``other`` divides ``self`` in
        the Laurent ring.
        """
        other = _coerce_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("Laurent polynomial division by zero")
        if self.is_zero():
            return LaurentPoly.zero(), LaurentPoly.zero()
        sa = self.min_exponent()
        sb = other.min_exponent()
        rem = {e - sa: c for e, c in self._terms.items()}
        den = {e - sb: c for e, c in other._terms.items()}
        deg_d = max(den)
        lc_d = den[deg_d]
        quo: dict[int, Fraction] = {}
        while rem:
            deg_r = max(rem)
            if deg_r < deg_d:
                break
            q = rem[deg_r] / lc_d
            k = deg_r - deg_d
            quo[k] = quo.get(k, Fraction(0)) + q
            for e, c in den.items():
                t = e + k
                s = rem.get(t, Fraction(0)) - q * c
                if s:
                    rem[t] = s
                else:
                    rem.pop(t, None)
        shift = sa - sb
        return (
            LaurentPoly({e + shift: c for e, c in quo.items()}),
            LaurentPoly({e + sa: c for e, c in rem.items()}),
        )

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def scale(self, c) -> "LaurentPoly":
        c = _as_fraction(c)
        return LaurentPoly({e: k * c for e, k in self._terms.items()})

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- presentation --------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "A" if e == 1 else f"A^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def to_json_dict(self) -> dict:
        """Exponent -> coefficient map with string keys/values."""
        return {str(e): str(self._terms[e]) for e in sorted(self._terms, reverse=True)}

    @staticmethod
    def from_json_dict(data: dict) -> "LaurentPoly":
        return LaurentPoly({int(e): Fraction(v) for e, v in data.items()})


def _coerce_poly(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.const(x)
    return NotImplemented


def poly_gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Monic gcd in Q[A] of the ordinary-polynomial parts of f and g.

    Monomial unit factors are irrelevant: the result always has nonzero
    constant term and leading coefficient one.
    """
    if f.is_zero():
        return _shifted_monic(g)
    if g.is_zero():
        return _shifted_monic(f)
    a = _shifted_monic(f)
    b = _shifted_monic(g)
    # Exact-division fast paths cover the common structured cases cheaply.
    if (a % b).is_zero():
        return b
    if (b % a).is_zero():
        return a
    while not b.is_zero():
        a, b = b, a % b
        if not b.is_zero():
            b = _shifted_monic(b)
    return _shifted_monic(a)


def _shifted_monic(f: LaurentPoly) -> LaurentPoly:
    if f.is_zero():
        return f
    shift = -f.min_exponent()
    lead = f.coefficient(f.max_exponent())
    return LaurentPoly({e + shift: c / lead for e, c in f.items()})


@functools.lru_cache(maxsize=None)
def quantum_integer(n: int) -> LaurentPoly:
    """[n] = (A^{2n} - A^{-2n}) / (A^2 - A^{-2}), as a Laurent polynomial.

    >>> print(quantum_integer(2))
    A^2 + A^-2
    >>> print(quantum_integer(0))
    0
    """
    if n < 0:
        raise ValueError("quantum integers are indexed by n >= 0")
    return LaurentPoly({2 * n - 2 - 4 * k: 1 for k in range(n)})


@functools.lru_cache(maxsize=None)
def delta_color(n: int) -> LaurentPoly:
    """Loop weight of an n-colored unknot: (-1)^n [n+1]."""
    q = quantum_integer(n + 1)
    return q if n % 2 == 0 else -q


def loop_weight() -> LaurentPoly:
    """delta = -A^2 - A^{-2}, the weight of a plain closed loop."""
    return LaurentPoly({2: -1, -2: -1})


class RatFunc:
    """A quotient of Laurent polynomials in canonical reduced form.

    The denominator is normalized to an ordinary polynomial with nonzero
    constant term and leading coefficient one; monomial units are folded
    into the numerator.  Two equal rational functions therefore have
    identical fields.

    >>> print(RatFunc(quantum_integer(4), quantum_integer(2)))
    (A^4 + A^-4)
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _coerce_poly(num)
        den = LaurentPoly.one() if den is None else _coerce_poly(den)
        if den.is_zero():
            raise ZeroDenominatorError("rational function with denominator 0")
        if num.is_zero():
            object.__setattr__(self, "num", LaurentPoly.zero())
            object.__setattr__(self, "den", LaurentPoly.one())
            return
        a = num.min_exponent()
        b = den.min_exponent()
        n_poly = LaurentPoly({e - a: c for e, c in num.items()})
        d_poly = LaurentPoly({e - b: c for e, c in den.items()})
        g = poly_gcd(n_poly, d_poly)
        if not g.is_one():
            n_poly //= g
            d_poly //= g
        lead = d_poly.coefficient(d_poly.max_exponent())
        if lead != 1:
            n_poly = n_poly.scale(Fraction(1) / lead)
            d_poly = d_poly.scale(Fraction(1) / lead)
        object.__setattr__(self, "num", LaurentPoly({e + a - b: c for e, c in n_poly.items()}))
        object.__setattr__(self, "den", d_poly)

    def __setattr__(self, *_):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def zero() -> "RatFunc":
        return RatFunc(LaurentPoly.zero())

    @staticmethod
    def one() -> "RatFunc":
        return RatFunc(LaurentPoly.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def as_polynomial(self) -> LaurentPoly:
        if not self.den.is_one():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def __add__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce_rat(other) + (-self)

    def __mul__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDenominatorError("division of rational functions by zero")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce_rat(other) / self

    def __eq__(self, other) -> bool:
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc{self}"


def _coerce_rat(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, LaurentPoly):
        return RatFunc(x)
    if isinstance(x, (int, Fraction)):
        return RatFunc(LaurentPoly.const(x))
    return NotImplemented


def ratfunc_canonical(num: LaurentPoly, den: LaurentPoly) -> RatFunc:
    """num/den in lowest terms with the normalized denominator."""
    return RatFunc(num, den)


@dataclass(frozen=True)
class EvalPoint:
    """An evaluation point A = exp(sign * i*pi/(2d+1)) of the bracket variable.

    d >= 1 indexes the level; sign is +1 or -1.  The two signs of one
    level share the cyclotomic field and are swapped by conjugation.
    """

    d: int
    sign: int = 1

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("level d must be >= 1")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def order(self) -> int:
        """Order of the root of unity: 2(2d+1)."""
        return 2 * (2 * self.d + 1)

    def conjugate(self) -> "EvalPoint":
        return EvalPoint(self.d, -self.sign)

    def __str__(self) -> str:
        return f"(d={self.d}, sign={'+' if self.sign > 0 else '-'})"


# -- the cyclotomic field of level d ----------------------------------------


@functools.lru_cache(maxsize=None)
def _cyclotomic_int_poly(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    # Divide x^n - 1 by the cyclotomic polynomials of the proper divisors.
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            den = _cyclotomic_int_poly(d)
            num = _int_poly_exact_div(num, den)
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


def _int_poly_exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c == 0:
            continue
        assert c % den[-1] == 0
        q = c // den[-1]
        out[k] = q
        for j, dj in enumerate(den):
            num[k + j] -= q * dj
    assert not any(num)
    return out


@functools.lru_cache(maxsize=None)
def _field_data(d: int):
    """Modulus and power-reduction rows for the level-d field.

    Returns (degree m, rows) where rows[k] is x^k reduced modulo the
    2(2d+1)-th cyclotomic polynomial, for 0 <= k < 2(2d+1).  Because
    zeta^{2(2d+1)} = 1 every power of zeta is covered by reducing the
    exponent first.
    """
    n = 2 * (2 * d + 1)
    mod = _cyclotomic_int_poly(n)
    m = len(mod) - 1
    rows: list[tuple[Fraction, ...]] = []
    cur = [Fraction(0)] * m
    cur[0] = Fraction(1)
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by x, reduce the overflow with x^m = -(mod[:-1])
        top = cur[m - 1]
        cur = [Fraction(0)] + cur[:-1]
        if top:
            for j in range(m):
                if mod[j]:
                    cur[j] -= top * mod[j]
    return m, tuple(rows)


def field_degree(d: int) -> int:
    """Degree over Q of the cyclotomic field used at level d.

    This is Euler's phi of 2(2d+1); it equals 2d exactly when 2d+1 is
    prime and is smaller otherwise.
    """
    return _field_data(d)[0]


@dataclass(frozen=True)
class CycloNum:
    """An exact element of Q(zeta), zeta = exp(i*pi/(2d+1)).

    Stored as the coefficient tuple of the canonical residue modulo the
    2(2d+1)-th cyclotomic polynomial, so equality of values is equality
    of tuples.
    """

    d: int
    coeffs: tuple[Fraction, ...]

    @staticmethod
    def from_rational(d: int, value) -> "CycloNum":
        m = _field_data(d)[0]
        vec = [Fraction(0)] * m
        vec[0] = _as_fraction(value)
        return CycloNum(d, tuple(vec))

    @staticmethod
    def zero(d: int) -> "CycloNum":
        return CycloNum.from_rational(d, 0)

    @staticmethod
    def one(d: int) -> "CycloNum":
        return CycloNum.from_rational(d, 1)

    @staticmethod
    def root_power(d: int, k: int) -> "CycloNum":
        """zeta^k as a field element (k may be negative)."""
        m, rows = _field_data(d)
        return CycloNum(d, rows[k % (2 * (2 * d + 1))])

    def _check(self, other: "CycloNum"):
        if self.d != other.d:
            raise ValueError("cannot mix cyclotomic numbers of different levels")

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def as_rational(self):
        """The value as a Fraction if it is rational, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check(other)
        return CycloNum(self.d, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.d, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check(other)
        m, rows = _field_data(self.d)
        prod = [Fraction(0)] * (2 * m - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    prod[i + j] += a * b
        out = list(prod[:m])
        for k in range(m, 2 * m - 1):
            c = prod[k]
            if c:
                row = rows[k]
                for j in range(m):
                    if row[j]:
                        out[j] += c * row[j]
        return CycloNum(self.d, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        m, _ = _field_data(self.d)
        mod = [Fraction(c) for c in _cyclotomic_int_poly(2 * (2 * self.d + 1))]
        # extended Euclid over Q[x]: s*self + t*mod = 1
        r0, r1 = mod, list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            r1, top1 = _trim(r1)
            if top1 < 0:
                raise ArithmeticError("element not invertible; modulus not squarefree?")
            if top1 == 0:
                inv = Fraction(1) / r1[0]
                vec = [c * inv for c in s1] + [Fraction(0)] * m
                return CycloNum(self.d, tuple(vec[:m]))
            q, r = _rat_poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _rat_poly_sub(s0, _rat_poly_mul(q, s1))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def conjugate(self) -> "CycloNum":
        """The image under zeta -> 1/zeta (complex conjugation)."""
        n = 2 * (2 * self.d + 1)
        _, rows = _field_data(self.d)
        out = None
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            row = rows[(-j) % n]
            term = tuple(c * x for x in row)
            out = term if out is None else tuple(a + b for a, b in zip(out, term))
        if out is None:
            return CycloNum.zero(self.d)
        return CycloNum(self.d, out)

    def _coerce(self, x):
        if isinstance(x, CycloNum):
            return x
        if isinstance(x, (int, Fraction)):
            return CycloNum.from_rational(self.d, x)
        return NotImplemented

    def __str__(self) -> str:
        r = self.as_rational()
        if r is not None:
            return str(r)
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "z" if e == 1 else f"z^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts) + f" [z = exp(i*pi/{2 * self.d + 1})]"

    def __repr__(self) -> str:
        return f"CycloNum(d={self.d}, {self})"


def _trim(p: list[Fraction]):
    while p and not p[-1]:
        p.pop()
    return p, len(p) - 1


def _rat_poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    db = len(b) - 1
    lc = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 1)
    while True:
        a, da = _trim(a)
        if da < db:
            break
        f = a[-1] / lc
        q[da - db] = f
        for j in range(db + 1):
            a[da - db + j] -= f * b[j]
    return q, a


def _rat_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1 if a and b else 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return out


def _rat_poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


# -- evaluation --------------------------------------------------------------


def evaluate_at(value, point: EvalPoint) -> CycloNum:
    """Apply the homomorphism A -> zeta^{sign} exactly.

    Accepts LaurentPoly, RatFunc (raising PoleError when its denominator
    vanishes at the point), CycloNum (returned unchanged after a level
    check), and plain rationals.
    """
    if isinstance(value, CycloNum):
        if value.d != point.d:
            raise ValueError("cyclotomic number from a different level")
        return value
    if isinstance(value, (int, Fraction)):
        return CycloNum.from_rational(point.d, value)
    if isinstance(value, RatFunc):
        den = evaluate_at(value.den, point)
        if den.is_zero():
            raise PoleError(f"denominator {value.den} vanishes at {point}")
        return evaluate_at(value.num, point) / den
    if not isinstance(value, LaurentPoly):
        raise TypeError(f"cannot evaluate {type(value).__name__}")
    d = point.d
    n = 2 * (2 * d + 1)
    m, rows = _field_data(d)
    acc = [Fraction(0)] * m
    for e, c in value.items():
        row = rows[(point.sign * e) % n]
        for j in range(m):
            if row[j]:
                acc[j] += c * row[j]
    return CycloNum(d, tuple(acc))


def cyclo_to_complex(x: CycloNum, precision: int = 30) -> mpmath.mpc:
    """Embed a cyclotomic number into C with zeta = exp(i*pi/(2d+1)).

    ``precision`` is the working number of significant digits (>= 15).
    """
    if precision < 15:
        raise ValueError("precision below 15 digits is not supported")
    with mpmath.workdps(precision):
        n = 2 * x.d + 1
        acc = mpmath.mpc(0)
        for j, c in enumerate(x.coeffs):
            if c:
                acc += (mpmath.mpf(c.numerator) / c.denominator) * mpmath.expjpi(
                    mpmath.mpf(j) / n
                )
        return acc


def principal_log_mobius(z):
    """(pi*i - 3 log z) / (pi*i - log z) with the principal logarithm.

    Defined on the plane slit along the closed negative real axis; points
    on the slit raise BranchCutError.
    """
    z = complex(z)
    if z.imag == 0 and z.real <= 0:
        raise BranchCutError(f"z = {z} lies on the closed negative real axis")
    log_z = cmath.log(z)
    ipi = complex(0, cmath.pi)
    return (ipi - 3 * log_z) / (ipi - log_z)
