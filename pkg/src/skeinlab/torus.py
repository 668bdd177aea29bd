"""The Kauffman bracket skein algebra of the torus on its threaded curve basis.

Basis labels are unoriented slopes (p,q) up to sign, normalized to p > 0 or
(p = 0, q >= 0). The label (p,q) with d = gcd(p,q) stands for the d-th
first-type Chebyshev threading of the primitive (p/d, q/d) curve; the key
(0,0) is the class of the empty link, which is the unit. Multiplication is
the product-to-sum rule

    (p,q) * (r,s) = q^(ps-qr) (p+r, q+s) + q^(qr-ps) (p-r, q-s)

with (0,0) on the right-hand side meaning 2 * (empty). The rule is validated
against the diagrammatic solid-torus action, never assumed.
"""

from __future__ import annotations

from fractions import Fraction

from .coeffs import CoeffField, Rationals, RootSpec, ZetaField
from .errors import FieldMismatchError, SkeinError


def normalize_label(p: int, q: int) -> tuple[int, int]:
    if p < 0 or (p == 0 and q < 0):
        return (-p, -q)
    return (p, q)


class TorusSkein:
    """Finite combination of threaded (p,q) basis classes over a field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CoeffField, coeffs=None):
        self.field = field
        self.coeffs = {}
        if coeffs:
            for label, v in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                if v:
                    label = normalize_label(*label)
                    cur = self.coeffs.get(label)
                    v = v if cur is None else cur + v
                    if v:
                        self.coeffs[label] = v
                    elif label in self.coeffs:
                        del self.coeffs[label]

    @classmethod
    def zero(cls, field):
        return cls(field)

    @classmethod
    def empty(cls, field):
        """The empty link, the unit of the algebra."""
        return cls(field, {(0, 0): field.one()})

    @classmethod
    def curve(cls, field, p, q, coeff=None):
        return cls(field, {(p, q): field.one() if coeff is None else coeff})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TorusSkein):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        r = TorusSkein(self.field)
        r.coeffs = out
        return r

    def __neg__(self):
        r = TorusSkein(self.field)
        r.coeffs = {k: -v for k, v in self.coeffs.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        if not scalar:
            return TorusSkein(self.field)
        r = TorusSkein(self.field)
        r.coeffs = {k: v * scalar for k, v in self.coeffs.items()}
        return r

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatchError(
                f"mixed coefficient fields {self.field.tag} and {other.field.tag}"
            )

    def items(self):
        return sorted(self.coeffs.items())

    def to_json(self):
        return {
            "field": self.field.tag,
            "terms": [[p, q, self.field.scalar_to_json(v)] for (p, q), v in self.items()],
        }

    @classmethod
    def from_json(cls, data, field=None):
        from .coeffs import field_from_tag

        fld = field if field is not None else field_from_tag(data["field"])
        return cls(fld, {(int(p), int(q)): fld.scalar_from_json(v) for p, q, v in data["terms"]})

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (p, q), v in self.items():
            name = "empty" if (p, q) == (0, 0) else f"({p},{q})"
            parts.append(f"({v})*{name}")
        return " + ".join(parts)

    def __repr__(self):
        return f"TorusSkein({self})"


def torus_mul(a: TorusSkein, b: TorusSkein) -> TorusSkein:
    """Bilinear extension of the product-to-sum rule; q is the field's unit."""
    a._check(b)
    field = a.field
    out = TorusSkein.zero(field)
    acc: dict[tuple[int, int], object] = {}

    def put(label, v):
        label = normalize_label(*label)
        cur = acc.get(label)
        acc[label] = v if cur is None else cur + v

    for (p, q), ca in a.coeffs.items():
        for (r, s), cb in b.coeffs.items():
            c = ca * cb
            if (p, q) == (0, 0):
                put((r, s), c)
                continue
            if (r, s) == (0, 0):
                put((p, q), c)
                continue
            det = p * s - q * r
            for label, coeff in (
                ((p + r, q + s), field.q_power(det) * c),
                ((p - r, q - s), field.q_power(-det) * c),
            ):
                if label == (0, 0):
                    put((0, 0), coeff * 2)  # T_d at d=0 is the constant 2
                else:
                    put(label, coeff)
    out.coeffs = {k: v for k, v in acc.items() if v}
    return out


def commutator(a: TorusSkein, b: TorusSkein) -> TorusSkein:
    return torus_mul(a, b) - torus_mul(b, a)


def thread_torus(a: TorusSkein, spec: RootSpec) -> TorusSkein:
    """tau_m: the epsilon algebra into the center of the zeta_n algebra.

    Labels scale by m (Chebyshev composition T_m . T_d = T_{md}); rational
    coefficients embed into Q(zeta_n), with the scalar epsilon going to
    zeta^(m^2), which is the same number.
    """
    if not isinstance(a.field, Rationals):
        raise SkeinError("threading input must live over the epsilon algebra (rationals)")
    if a.field.q_value is not None and a.field.q_value != Fraction(spec.epsilon):
        raise SkeinError("input epsilon does not match the root spec")
    target = ZetaField(spec.n)
    out = TorusSkein.zero(target)
    m = spec.m
    out.coeffs = {
        ((0, 0) if lab == (0, 0) else normalize_label(lab[0] * m, lab[1] * m)): target.from_fraction(v)
        for lab, v in a.coeffs.items()
        if v
    }
    return out


def is_central(a: TorusSkein, bound: int) -> bool:
    """Commutes with every normalized (r,s), |r|,|s| <= bound?"""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    field = a.field
    for r in range(0, bound + 1):
        s_range = range(0, bound + 1) if r == 0 else range(-bound, bound + 1)
        for s in s_range:
            if (r, s) == (0, 0):
                continue
            if commutator(a, TorusSkein.curve(field, r, s)):
                return False
    return True
