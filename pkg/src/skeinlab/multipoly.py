"""Multivariate polynomials over an exact field, with lex and degrevlex orders.

Terms are stored as a dict from exponent tuples to nonzero scalars. The
monomial order is context, not part of the value: order functions return a
sort key, largest key = leading term.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SkeinError


def lex_key(exps):
    return exps


def degrevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


ORDERS = {"lex": lex_key, "degrevlex": degrevlex_key}


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class MultiPoly:
    """Polynomial in named variables with exact coefficients."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=None):
        self.vars = tuple(variables)
        self.terms = {}
        n = len(self.vars)
        if terms:
            for exps, c in (terms.items() if isinstance(terms, dict) else terms):
                if c:
                    exps = tuple(int(e) for e in exps)
                    if len(exps) != n:
                        raise SkeinError("exponent vector length mismatch")
                    cur = self.terms.get(exps)
                    c = c if cur is None else cur + c
                    if c:
                        self.terms[exps] = c
                    elif exps in self.terms:
                        del self.terms[exps]

    @classmethod
    def zero(cls, variables):
        return cls(variables)

    @classmethod
    def constant(cls, variables, c):
        c = Fraction(c) if isinstance(c, int) else c
        return cls(variables, {tuple(0 for _ in variables): c})

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        idx = variables.index(name)
        exps = tuple(1 if i == idx else 0 for i in range(len(variables)))
        return cls(variables, {exps: Fraction(1)})

    def _check(self, other):
        if self.vars != other.vars:
            raise SkeinError("mixing polynomials in different variable contexts")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.vars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        r = MultiPoly(self.vars)
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = MultiPoly(self.vars)
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly(self.vars)
            r = MultiPoly(self.vars)
            r.terms = {e: c * other for e, c in self.terms.items()}
            return r
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = monomial_mul(e1, e2)
                s = out.get(e)
                p = c1 * c2
                s = p if s is None else s + p
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        r = MultiPoly(self.vars)
        r.terms = out
        return r

    __rmul__ = __mul__

    def scale(self, c):
        if not c:
            return MultiPoly(self.vars)
        r = MultiPoly(self.vars)
        r.terms = {e: v * c for e, v in self.terms.items()}
        return r

    def __pow__(self, k):
        out = MultiPoly.constant(self.vars, Fraction(1))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def leading(self, key):
        if not self.terms:
            raise SkeinError("zero polynomial has no leading term")
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def evaluate(self, values):
        """values: dict var -> scalar; full evaluation."""
        total = 0
        for e, c in self.terms.items():
            term = c
            for name, exp in zip(self.vars, e):
                if exp:
                    term = term * (values[name] ** exp)
            total = term if total == 0 else total + term
        return total if total != 0 else Fraction(0)

    def to_json(self):
        def cstr(c):
            return f"{c.numerator}/{c.denominator}" if c.denominator != 1 else str(c.numerator)

        return {"terms": [[list(e), cstr(c)] for e, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, variables, data):
        return cls(variables, {tuple(e): Fraction(c) for e, c in data["terms"]})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=degrevlex_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v for v, k in zip(self.vars, e) if k
            )
            mag = abs(c)
            ms = str(mag) if mag.denominator == 1 else f"({mag})"
            if mono:
                body = mono if mag == 1 else f"{ms}*{mono}"
            else:
                body = ms
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out

    def __repr__(self):
        return f"MultiPoly({self})"
