"""Exact coefficient arithmetic: Laurent polynomials, rational functions in q,
cyclotomic fields Q(zeta_n), and root-of-unity bookkeeping.

Every scalar here is immutable and exact (arbitrary precision rationals, no
floats). Equality is coefficient-wise on canonical forms:

* ``LaurentPoly`` stores exponent -> nonzero Fraction,
* ``RationalFunction`` is reduced with a monic denominator whose lowest
  exponent is zero,
* ``CyclotomicScalar`` is always reduced mod the n-th cyclotomic polynomial.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import FourDividesOrderError, SkeinError

# ---------------------------------------------------------------------------
# small univariate helpers over Fraction, dense ascending coefficient lists


def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_add(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _poly_trim(out)


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = 1 / b[-1]
    while len(a) >= len(b):
        coeff = a[-1] * inv_lead
        deg = len(a) - len(b)
        q[deg] = coeff
        for i, y in enumerate(b):
            a[deg + i] -= coeff * y
        _poly_trim(a)
        if not a:
            break
    return _poly_trim(q), a


def _poly_gcd(a, b):
    a, b = list(a), list(b)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _poly_ext_gcd(a, b):
    """Return (g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_add(s0, [-c for c in _poly_mul(q, s1)])
        t0, t1 = t1, _poly_add(t0, [-c for c in _poly_mul(q, t1)])
    if r0:
        lead = r0[-1]
        r0 = [c / lead for c in r0]
        s0 = [c / lead for c in s0]
        t0 = [c / lead for c in t0]
    return r0, s0, t0


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _frac_parse(s) -> Fraction:
    return Fraction(s)


# ---------------------------------------------------------------------------


class LaurentPoly:
    """Element of Z[q, q^-1] with rational coefficients: exponent -> coeff."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                c = Fraction(c)
                if c:
                    c0 = t.get(e)
                    c = c if c0 is None else c0 + c
                    if c:
                        t[int(e)] = c
                    elif e in t:
                        del t[e]
        self.terms = t

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def from_fraction(cls, c):
        return cls({0: Fraction(c)})

    @classmethod
    def q_power(cls, e, coeff=1):
        return cls({int(e): Fraction(coeff)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.from_fraction(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.from_fraction(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.from_fraction(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return LaurentPoly()
            r = LaurentPoly.__new__(LaurentPoly)
            r.terms = {e: x * c for e, x in self.terms.items()}
            return r
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = out
        return r

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a Laurent polynomial; invert units explicitly")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def min_exp(self):
        return min(self.terms) if self.terms else 0

    def max_exp(self):
        return max(self.terms) if self.terms else 0

    def shifted(self, k):
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = {e + k: c for e, c in self.terms.items()}
        return r

    def as_poly(self):
        """Dense ascending coefficients of q^(-min_exp) * self."""
        if not self.terms:
            return [], 0
        lo = self.min_exp()
        out = [Fraction(0)] * (self.max_exp() - lo + 1)
        for e, c in self.terms.items():
            out[e - lo] = c
        return out, lo

    @classmethod
    def from_poly(cls, coeffs, shift=0):
        return cls({i + shift: c for i, c in enumerate(coeffs) if c})

    def evaluate(self, x: Fraction) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            total += c * (Fraction(x) ** e)
        return total

    def to_json(self):
        return {"terms": [[e, _frac_str(c)] for e, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, data):
        return cls({int(e): _frac_parse(c) for e, c in data["terms"]})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = _frac_str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{_frac_str(mag)}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPoly({self})"


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    pa, _ = a.as_poly()
    pb, _ = b.as_poly()
    return LaurentPoly.from_poly(_poly_gcd(pa, pb))


def laurent_exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """a / b when b divides a exactly (up to a monomial unit)."""
    pa, la = a.as_poly()
    pb, lb = b.as_poly()
    q, r = _poly_divmod(pa, pb)
    if r:
        raise SkeinError("inexact Laurent division")
    return LaurentPoly.from_poly(q, la - lb)


class RationalFunction:
    """Element of Q(q), reduced, denominator monic with lowest exponent 0."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = LaurentPoly.from_fraction(num)
        if den is None:
            den = LaurentPoly.one()
        elif isinstance(den, (int, Fraction)):
            den = LaurentPoly.from_fraction(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = self._normalize(num, den)

    @staticmethod
    def _normalize(num: LaurentPoly, den: LaurentPoly):
        if not num:
            return LaurentPoly.zero(), LaurentPoly.one()
        pn, ln = num.as_poly()
        pd, ld = den.as_poly()
        g = _poly_gcd(pn, pd)
        if len(g) > 1:
            pn, _ = _poly_divmod(pn, g)
            pd, _ = _poly_divmod(pd, g)
        lead = pd[-1]
        if lead != 1:
            pn = [c / lead for c in pn]
            pd = [c / lead for c in pd]
        # push the monomial mismatch into the numerator
        return LaurentPoly.from_poly(pn, ln - ld), LaurentPoly.from_poly(pd)

    @classmethod
    def from_laurent(cls, p):
        return cls(p)

    def is_laurent(self):
        return self.den == LaurentPoly.one()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RationalFunction(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = RationalFunction.__new__(RationalFunction)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RationalFunction(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RationalFunction(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RationalFunction(other)
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def inv(self):
        if not self.num:
            raise ZeroDivisionError("inverting zero")
        return RationalFunction(self.den, self.num)

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        out = RationalFunction(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def to_json(self):
        if self.is_laurent():
            return {"num": self.num.to_json()}
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data):
        num = LaurentPoly.from_json(data["num"])
        den = LaurentPoly.from_json(data["den"]) if "den" in data else None
        return cls(num, den)

    def __str__(self):
        if self.is_laurent():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"


# ---------------------------------------------------------------------------
# cyclotomic fields

_CYCLO_CACHE: dict[int, tuple[int, list[Fraction], list[list[Fraction]]]] = {}


def cyclotomic_polynomial(n: int) -> list[Fraction]:
    """Ascending coefficients of Phi_n over Q."""
    if n == 1:
        return [Fraction(-1), Fraction(1)]
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]  # q^n - 1
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not r
            poly = q
    return poly


def _cyclo_data(n: int):
    data = _CYCLO_CACHE.get(n)
    if data is None:
        phi_n = cyclotomic_polynomial(n)
        deg = len(phi_n) - 1
        # rows[j] = coefficients of x^(deg + j) reduced mod Phi_n
        rows = []
        cur = [-c for c in phi_n[:-1]]  # x^deg = -(lower part), Phi monic
        rows.append(list(cur))
        for _ in range(deg - 1):
            nxt = [Fraction(0)] + cur[:-1]
            top = cur[-1]
            if top:
                for i in range(deg):
                    nxt[i] += top * rows[0][i]
            cur = nxt
            rows.append(list(cur))
        data = (deg, phi_n, rows)
        _CYCLO_CACHE[n] = data
    return data


class CyclotomicScalar:
    """Element of Q[q]/(Phi_n(q)), coefficients in the power basis 1..q^(phi(n)-1)."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        deg, _, _ = _cyclo_data(n)
        c = [Fraction(x) for x in coeffs]
        if len(c) > deg:
            raise ValueError("coefficient vector longer than phi(n)")
        c += [Fraction(0)] * (deg - len(c))
        self.n = n
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls, n):
        return cls(n, [])

    @classmethod
    def one(cls, n):
        return cls(n, [1])

    @classmethod
    def from_fraction(cls, n, c):
        return cls(n, [Fraction(c)])

    @classmethod
    def zeta_power(cls, n, e):
        deg, phi_n, _ = _cyclo_data(n)
        e %= n
        dense = [Fraction(0)] * (e + 1)
        dense[e] = Fraction(1)
        _, r = _poly_divmod(dense, phi_n)
        return cls(n, r)

    def _check(self, other):
        if self.n != other.n:
            raise SkeinError("mixing cyclotomic fields of different order")

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicScalar.from_fraction(self.n, other)
        if not isinstance(other, CyclotomicScalar):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicScalar.from_fraction(self.n, other)
        self._check(other)
        return CyclotomicScalar(self.n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar(self.n, [-a for a in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicScalar.from_fraction(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return CyclotomicScalar(self.n, [a * c for a in self.coeffs])
        self._check(other)
        deg, _, rows = _cyclo_data(self.n)
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        out = prod[:deg]
        for k in range(deg, 2 * deg - 1):
            c = prod[k]
            if c:
                row = rows[k - deg]
                for i in range(deg):
                    out[i] += c * row[i]
        return CyclotomicScalar(self.n, out)

    __rmul__ = __mul__

    def inv(self):
        if not self:
            raise ZeroDivisionError("inverting zero cyclotomic scalar")
        _, phi_n, _ = _cyclo_data(self.n)
        a = _poly_trim(list(self.coeffs))
        g, u, _ = _poly_ext_gcd(a, phi_n)
        if len(g) != 1:
            raise SkeinError("non-invertible element; Phi_n should be irreducible")
        inv = [c / g[0] for c in u]
        _, r = _poly_divmod(inv, phi_n)
        return CyclotomicScalar(self.n, r)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicScalar.from_fraction(self.n, other)
        return self * other.inv()

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        out = CyclotomicScalar.one(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def as_fraction(self):
        """The rational value, when the element is rational; None otherwise."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def to_json(self):
        return {"n": self.n, "coeffs": [_frac_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["n"]), [_frac_parse(c) for c in data["coeffs"]])

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                body = _frac_str(abs(c))
            else:
                var = "z" if e == 1 else f"z^{e}"
                body = var if abs(c) == 1 else f"{_frac_str(abs(c))}*{var}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"CyclotomicScalar(n={self.n}, {self})"


# ---------------------------------------------------------------------------
# root-of-unity bookkeeping


class RootSpec:
    """(n, m, epsilon) for a primitive n-th root of unity, 4 not dividing n."""

    __slots__ = ("n", "m", "epsilon")

    def __init__(self, n, m, epsilon):
        self.n = n
        self.m = m
        self.epsilon = epsilon

    def __eq__(self, other):
        return isinstance(other, RootSpec) and (self.n, self.m, self.epsilon) == (
            other.n,
            other.m,
            other.epsilon,
        )

    def __repr__(self):
        return f"RootSpec(n={self.n}, m={self.m}, epsilon={self.epsilon:+d})"


def root_spec(n: int) -> RootSpec:
    if n < 1:
        raise ValueError("order must be a positive integer")
    if n % 4 == 0:
        raise FourDividesOrderError(f"four divides order {n}")
    m = n // math.gcd(n, 2)
    zeta_pow = CyclotomicScalar.zeta_power(n, (m * m) % n)
    eps = zeta_pow.as_fraction()
    if eps not in (Fraction(1), Fraction(-1)):
        raise SkeinError(f"epsilon is not a sign for n={n}; got {zeta_pow}")
    return RootSpec(n, m, 1 if eps == 1 else -1)


def specialize(p: LaurentPoly, spec: RootSpec) -> CyclotomicScalar:
    """Ring homomorphism q -> zeta_n, image reduced mod Phi_n."""
    out = CyclotomicScalar.zero(spec.n)
    for e, c in p.terms.items():
        out = out + CyclotomicScalar.zeta_power(spec.n, e) * c
    return out


def cyclotomic_invert(x: CyclotomicScalar) -> CyclotomicScalar:
    return x.inv()


# ---------------------------------------------------------------------------
# coefficient fields


class CoeffField:
    """Factory/tag object for one exact coefficient field.

    Scalars themselves carry the arithmetic through operator overloading;
    the field supplies constants, inversion, parsing and JSON forms.
    """

    tag: str

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_fraction(self, c):
        raise NotImplementedError

    def from_int(self, c):
        return self.from_fraction(Fraction(c))

    def q_power(self, e):
        raise NotImplementedError

    def delta(self):
        """Value of a trivial circle, -q^2 - q^-2."""
        return -(self.q_power(2) + self.q_power(-2))

    def inv(self, x):
        raise NotImplementedError

    def scalar_to_json(self, x):
        raise NotImplementedError

    def scalar_from_json(self, data):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, CoeffField) and self.tag == other.tag

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return f"CoeffField({self.tag})"


class Rationals(CoeffField):
    """Plain rationals; optionally with q pinned to +1 or -1 (epsilon algebras)."""

    def __init__(self, q_value=None):
        if q_value is not None:
            q_value = Fraction(q_value)
            if q_value not in (Fraction(1), Fraction(-1)):
                raise ValueError("rational field only supports q = +1 or -1")
        self.q_value = q_value
        self.tag = "rationals" if q_value is None else f"rationals(q={q_value})"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_fraction(self, c):
        return Fraction(c)

    def q_power(self, e):
        if self.q_value is None:
            raise SkeinError("this rational field has no value for q")
        return self.q_value**e

    def inv(self, x):
        return 1 / Fraction(x)

    def scalar_to_json(self, x):
        return _frac_str(Fraction(x))

    def scalar_from_json(self, data):
        return _frac_parse(data)


class GenericQ(CoeffField):
    """The field Q(q) of rational functions in the bracket variable."""

    def __init__(self):
        self.tag = "generic"

    def zero(self):
        return RationalFunction(0)

    def one(self):
        return RationalFunction(1)

    def from_fraction(self, c):
        return RationalFunction(c)

    def q_power(self, e):
        return RationalFunction(LaurentPoly.q_power(e))

    def inv(self, x):
        return x.inv()

    def scalar_to_json(self, x):
        return x.to_json()

    def scalar_from_json(self, data):
        return RationalFunction.from_json(data)


class ZetaField(CoeffField):
    """Q(zeta_n) with q acting as zeta_n; order must not be divisible by 4."""

    def __init__(self, n):
        self.spec = root_spec(n)
        self.n = n
        self.tag = f"zeta:{n}"

    def zero(self):
        return CyclotomicScalar.zero(self.n)

    def one(self):
        return CyclotomicScalar.one(self.n)

    def from_fraction(self, c):
        return CyclotomicScalar.from_fraction(self.n, c)

    def q_power(self, e):
        return CyclotomicScalar.zeta_power(self.n, e)

    def inv(self, x):
        return x.inv()

    def scalar_to_json(self, x):
        return x.to_json()

    def scalar_from_json(self, data):
        return CyclotomicScalar.from_json(data)


def field_from_tag(tag: str) -> CoeffField:
    if tag in ("generic", "q"):
        return GenericQ()
    if tag == "rationals":
        return Rationals()
    if tag.startswith("rationals(q="):
        return Rationals(Fraction(tag[len("rationals(q=") : -1]))
    if tag.startswith("zeta:"):
        return ZetaField(int(tag.split(":", 1)[1]))
    raise ValueError(f"unknown coefficient field tag {tag!r}")


def specialize_scalar(x, field: CoeffField):
    """Map a generic-q scalar (RationalFunction/LaurentPoly) into ``field``."""
    if isinstance(x, LaurentPoly):
        x = RationalFunction(x)
    if isinstance(field, GenericQ):
        return x
    num = field.zero()
    for e, c in x.num.terms.items():
        num = num + field.q_power(e) * c
    den = field.zero()
    for e, c in x.den.terms.items():
        den = den + field.q_power(e) * c
    if not den:
        raise ZeroDivisionError("denominator vanishes under specialization")
    return num * field.inv(den)
