"""Genus-1 Heegaard computation of skein modules of lens spaces.

L(p,q) is two solid tori H and B glued so that the B-side meridian maps to
the (p,q) curve on the boundary of H. The skein module of the glued manifold
is the tensor product of the two solid-torus modules over the torus algebra,
computed here as a literal truncated quotient:

    span{ z_H^i (x) z_B^j } / < act(g, z_H^i) (x) z_B^j
                               - z_H^i (x) act(g', z_B^j) >

where g runs over an algebra generating set in H-boundary coordinates and
g' is the same curve in B-boundary coordinates (the gluing matrix transport).
Middle linearity for products of generators follows from the generator
relations inside the truncation, so the quotient needs nothing else. The
generator set is the gluing image of {meridian, longitude, (1,1)}, which
keeps the B-side actions trivial; the (1,1) generator is redundant whenever
q^2 - q^-2 is invertible and is dropped then to keep diagrams small.

A reported dimension is accepted only when truncations N, N+1, N+2 agree;
non-stabilized results are returned flagged, never silently truncated.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .coeffs import (
    CoeffField,
    GenericQ,
    LaurentPoly,
    RationalFunction,
    Rationals,
    laurent_exact_div,
    laurent_gcd,
)
from .diagrams import AnnulusSkein
from .errors import SkeinError, StabilizationError
from .solidtorus import act
from .torus import TorusSkein, normalize_label


class GluingMatrix:
    """Columns are the images of the B-side meridian and longitude."""

    __slots__ = ("meridian", "longitude")

    def __init__(self, meridian, longitude):
        p, q = meridian
        r, s = longitude
        det = p * s - q * r
        if abs(det) != 1:
            raise SkeinError(f"gluing matrix has determinant {det}")
        self.meridian = (p, q)
        self.longitude = (r, s)

    @classmethod
    def lens(cls, p, q):
        """Standard gluing for L(p, q): the B-meridian goes to the (p, q) curve."""
        p, q = normalize_label(p, q)
        if math.gcd(p, q) != 1:
            raise SkeinError("lens parameters must be coprime")
        g, x, y = _ext_gcd(p, q)
        assert g == 1
        # p*s - q*r = 1 with (r, s) = (-y, x)
        return cls((p, q), (-y, x))

    def __repr__(self):
        return f"GluingMatrix(meridian->{self.meridian}, longitude->{self.longitude})"


def _ext_gcd(a, b):
    """g, x, y with a*x + b*y = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


class LensReport:
    __slots__ = ("p", "q", "field_tag", "truncation", "dimension", "stabilized", "basis", "dims")

    def __init__(self, p, q, field_tag, truncation, dimension, stabilized, basis, dims):
        self.p = p
        self.q = q
        self.field_tag = field_tag
        self.truncation = truncation
        self.dimension = dimension
        self.stabilized = stabilized
        self.basis = basis  # surviving (i, j) classes of z_H^i (x) z_B^j
        self.dims = dims

    def to_json(self):
        return {
            "p": self.p,
            "q": self.q,
            "field": self.field_tag,
            "truncation": self.truncation,
            "dimension": self.dimension,
            "stabilized": self.stabilized,
            "basis": [f"zH^{i}*zB^{j}" for i, j in self.basis],
            "dims_by_truncation": {str(n): d for n, d in sorted(self.dims.items())},
        }

    def __repr__(self):
        flag = "stable" if self.stabilized else "NOT STABLE"
        return f"LensReport(L({self.p},{self.q}), {self.field_tag}, dim={self.dimension}, {flag})"


class _PairEchelon:
    """Row space over basis pairs (i, j), pivoting on the largest pair.

    Over the generic field the rows are cleared to Laurent polynomials and
    eliminated fraction-free (cross-multiplication plus content stripping);
    rational-function division would swamp the computation with gcd work.
    Other fields eliminate by ordinary division.
    """

    def __init__(self, field):
        self.field = field
        self.fraction_free = isinstance(field, GenericQ)
        self.pivots = {}

    def _clear(self, row):
        den = LaurentPoly.one()
        for v in row.values():
            if isinstance(v, RationalFunction) and not v.is_laurent():
                den = den * laurent_exact_div(v.den, laurent_gcd(den, v.den))
        out = {}
        for k, v in row.items():
            if isinstance(v, RationalFunction):
                num = v.num * laurent_exact_div(den, v.den)
            else:
                num = v * den
            if num:
                out[k] = num
        return out

    def _strip(self, row):
        # monomial and rational content only; polynomial gcds cost more than
        # they save on these structured systems
        shift = min(v.min_exp() for v in row.values())
        num_gcd = 0
        den_lcm = 1
        for v in row.values():
            for c in v.terms.values():
                num_gcd = math.gcd(num_gcd, c.numerator)
                den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        scale = Fraction(den_lcm, num_gcd or 1)
        if shift or scale != 1:
            row = {k: v.shifted(-shift) * scale for k, v in row.items()}
        return row

    def insert(self, row: dict) -> bool:
        if self.fraction_free:
            row = self._clear(row)
            while row:
                lead = max(row)
                piv = self.pivots.get(lead)
                if piv is None:
                    self.pivots[lead] = self._strip(row)
                    return True
                if len(piv) == 1:
                    # singleton pivot: dropping the key spans the same ray
                    del row[lead]
                    continue
                a, b = piv[lead], row[lead]
                new = {}
                for k, v in row.items():
                    w = piv.get(k)
                    nv = v * a - w * b if w is not None else v * a
                    if nv:
                        new[k] = nv
                for k, w in piv.items():
                    if k not in row:
                        nv = -(w * b)
                        if nv:
                            new[k] = nv
                row = self._strip(new) if new else new
            return False
        while row:
            lead = max(row)
            piv = self.pivots.get(lead)
            if piv is None:
                c = self.field.inv(row[lead])
                self.pivots[lead] = {k: v * c for k, v in row.items()}
                return True
            factor = row[lead]
            new = {}
            for k, v in row.items():
                w = piv.get(k)
                nv = v - w * factor if w is not None else v
                if nv:
                    new[k] = nv
            for k, w in piv.items():
                if k not in row:
                    nv = -(w * factor)
                    if nv:
                        new[k] = nv
            row = new
        return False

    def rank(self):
        return len(self.pivots)


def _generator_pairs(gluing: GluingMatrix, field: CoeffField):
    """(H-label, B-label) generator pairs for the middle-linearity relations."""
    p, q = gluing.meridian
    r, s = gluing.longitude
    pairs = [
        (normalize_label(p, q), (0, 1)),
        (normalize_label(r, s), (1, 0)),
    ]
    need_cross = False
    if isinstance(field, Rationals):
        need_cross = True  # q = +-1 makes q^2 - q^-2 vanish
    else:
        try:
            field.inv(field.q_power(2) - field.q_power(-2))
        except ZeroDivisionError:
            need_cross = True
    if need_cross:
        # (1,1) is a polynomial in meridian and longitude otherwise, so its
        # middle relations are implied; include it only when that fails
        pairs.append((normalize_label(p + r, q + s), (1, 1)))
    return pairs


def _truncated_dim(gluing: GluingMatrix, field: CoeffField, bound: int, cache=None):
    """Dimension of the image of the (bound x bound) window in the padded
    truncated quotient.

    Relations are assembled on a window enlarged by the maximal degree growth
    of the generators, then each window class z_H^i (x) z_B^j is reduced
    against them. Working on the padded window matters: a class at the very
    corner of a bare truncation keeps none of its relations and would survive
    as a stable artifact; every relation touching the inner window fits
    inside the padded one, so the image dimension is honest.
    """
    gens = _generator_pairs(gluing, field)
    growth = max(
        [1]
        + [abs(g_h[0]) for g_h, _ in gens]
        + [abs(g_b[0]) for _, g_b in gens]
    )
    padded = bound + growth
    ech = _PairEchelon(field)
    acted_h = {}
    acted_b = {}
    for g_h, g_b in gens:
        skein_h = TorusSkein.curve(field, *g_h)
        skein_b = TorusSkein.curve(field, *g_b)
        for i in range(padded + 1):
            if (g_h, i) not in acted_h:
                acted_h[(g_h, i)] = act(skein_h, AnnulusSkein.z_power(field, i), cache)
            if (g_b, i) not in acted_b:
                acted_b[(g_b, i)] = act(skein_b, AnnulusSkein.z_power(field, i), cache)
    rows = []
    for g_h, g_b in gens:
        for i in range(padded + 1):
            left = acted_h[(g_h, i)]
            if left.degree() > padded:
                continue
            for j in range(padded + 1):
                right = acted_b[(g_b, j)]
                if right.degree() > padded:
                    continue
                row = {}
                for d, c in left.coeffs.items():
                    row[(d, j)] = c
                for d, c in right.coeffs.items():
                    key = (i, d)
                    cur = row.get(key)
                    nv = -c if cur is None else cur - c
                    if nv:
                        row[key] = nv
                    elif key in row:
                        del row[key]
                if row:
                    rows.append(row)
    # sparse rows first: singleton pivots make later eliminations cheap
    rows.sort(key=len)
    for row in rows:
        ech.insert(row)
    dim = 0
    basis = []
    one = field.one()
    for i in range(bound + 1):
        for j in range(bound + 1):
            if ech.insert({(i, j): one}):
                dim += 1
                basis.append((i, j))
    return dim, sorted(basis)


def lens_module(p: int, q: int, field: CoeffField, truncation: int | None = None, cache=None) -> LensReport:
    """Skein module of L(p,q) (or S^1 x S^2 for (0,1)) by truncated saturation."""
    gluing = GluingMatrix.lens(p, q)
    N = truncation if truncation is not None else max(abs(p) + 2, 4)
    dims = {}
    basis_at_n = None
    for M in (N, N + 1, N + 2):
        dim, basis = _truncated_dim(gluing, field, M, cache)
        dims[M] = dim
        if M == N:
            basis_at_n = basis
    stable = len(set(dims.values())) == 1
    return LensReport(p, q, field.tag, N, dims[N], stable, basis_at_n, dims)


def dim_K_q(p: int, q: int, max_truncation: int | None = None, cache=None) -> int:
    """Stabilized dimension over Q(q); raises if stabilization is not reached."""
    field = GenericQ()
    start = max(abs(p) + 2, 4)
    limit = max_truncation if max_truncation is not None else 2 * abs(p) + 12
    dims_seen = {}
    N = start
    while N <= limit:
        report = lens_module(p, q, field, N, cache)
        dims_seen.update(report.dims)
        if report.stabilized:
            return report.dimension
        N += 1
    raise StabilizationError(f"L({p},{q}) did not stabilize by truncation {limit}", dims_seen)
