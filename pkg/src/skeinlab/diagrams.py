"""Framed link diagrams in the disk and the annulus, and their Kauffman
bracket evaluation.

Diagrams are planar-diagram (PD) codes: each crossing is a 4-tuple of arc
labels listed counterclockwise starting from the incoming under-strand.
The crossing relation resolves as

    <crossing> = q * <A-smoothing> + q^-1 * <B-smoothing>

where the A-smoothing joins PD positions (0,1) and (2,3), the B-smoothing
joins (0,3) and (1,2), and every trivial circle contributes -q^2 - q^-2.
With these choices a positive curl carries the factor -q^3.

Annulus diagrams carry per-arc winding marks (signed crossings with a fixed
radial ray). Only the parity of the total mark of a closed component matters:
a resolved component is core-parallel exactly when its parity is odd, since
embedded circles in the annulus have winding -1, 0 or 1.

The production evaluator resolves crossings recursively with memoization on
canonicalized diagrams and factors out curls and crossing-free circles as it
goes. The exhaustive state sum lives in ``skeinlab.oracle`` and is used only
to cross-check this engine.
"""

from __future__ import annotations

from fractions import Fraction

from .coeffs import CoeffField
from .errors import DiagramError

DISK = "disk"
ANNULUS = "annulus"


class FramedDiagram:
    """PD-coded framed link diagram in the disk or annulus."""

    __slots__ = ("surface", "crossings", "free_loops", "free_cores", "winding_marks")

    def __init__(self, surface, crossings=(), free_loops=0, free_cores=0, winding_marks=None):
        if surface not in (DISK, ANNULUS):
            raise DiagramError(f"unknown surface {surface!r}")
        self.surface = surface
        self.crossings = tuple(tuple(int(a) for a in c) for c in crossings)
        self.free_loops = int(free_loops)
        self.free_cores = int(free_cores)
        self.winding_marks = {int(k): int(v) for k, v in (winding_marks or {}).items()}
        self.validate()

    def validate(self):
        counts = {}
        for c in self.crossings:
            if len(c) != 4:
                raise DiagramError(f"crossing {c} is not a 4-tuple")
            for a in c:
                counts[a] = counts.get(a, 0) + 1
        for a, k in counts.items():
            if k != 2:
                raise DiagramError(f"arc {a} appears {k} times, expected 2")
        if self.free_loops < 0 or self.free_cores < 0:
            raise DiagramError("negative free component count")
        if self.surface == DISK:
            if self.free_cores:
                raise DiagramError("disk diagram cannot contain core circles")
            if self.winding_marks:
                raise DiagramError("disk diagram cannot carry winding marks")
        else:
            for a in self.winding_marks:
                if a not in counts:
                    raise DiagramError(f"winding mark on unknown arc {a}")

    def arcs(self):
        out = set()
        for c in self.crossings:
            out.update(c)
        return out

    def to_json(self):
        data = {
            "surface": self.surface,
            "crossings": [list(c) for c in self.crossings],
            "free_loops": self.free_loops,
        }
        if self.surface == ANNULUS:
            data["free_cores"] = self.free_cores
            data["winding_marks"] = {str(k): v for k, v in sorted(self.winding_marks.items())}
        return data

    @classmethod
    def from_json(cls, data):
        return cls(
            data["surface"],
            [tuple(c) for c in data.get("crossings", [])],
            data.get("free_loops", 0),
            data.get("free_cores", 0),
            {int(k): v for k, v in data.get("winding_marks", {}).items()},
        )

    def __repr__(self):
        return (
            f"FramedDiagram({self.surface}, crossings={list(self.crossings)}, "
            f"free_loops={self.free_loops}, free_cores={self.free_cores})"
        )


class AnnulusSkein:
    """Finite sum sum_k c_k z^k over a coefficient field; z^0 is the empty link."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CoeffField, coeffs=None):
        self.field = field
        self.coeffs = {}
        if coeffs:
            for k, v in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                if v:
                    k = int(k)
                    if k < 0:
                        raise ValueError("negative core power")
                    cur = self.coeffs.get(k)
                    v = v if cur is None else cur + v
                    if v:
                        self.coeffs[k] = v
                    elif k in self.coeffs:
                        del self.coeffs[k]

    @classmethod
    def zero(cls, field):
        return cls(field)

    @classmethod
    def one(cls, field):
        return cls(field, {0: field.one()})

    @classmethod
    def z_power(cls, field, k, coeff=None):
        return cls(field, {k: field.one() if coeff is None else coeff})

    def degree(self):
        return max(self.coeffs) if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, AnnulusSkein):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        r = AnnulusSkein(self.field)
        r.coeffs = out
        return r

    def __neg__(self):
        r = AnnulusSkein(self.field)
        r.coeffs = {k: -v for k, v in self.coeffs.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        if not scalar:
            return AnnulusSkein(self.field)
        r = AnnulusSkein(self.field)
        r.coeffs = {k: v * scalar for k, v in self.coeffs.items()}
        return r

    def shift(self, j):
        """Multiply by z^j."""
        r = AnnulusSkein(self.field)
        r.coeffs = {k + j: v for k, v in self.coeffs.items()}
        return r

    def mul(self, other):
        """Product in the solid-torus skein algebra (polynomials in z)."""
        out = AnnulusSkein(self.field)
        acc = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                k = k1 + k2
                s = acc.get(k)
                p = v1 * v2
                acc[k] = p if s is None else s + p
        out.coeffs = {k: v for k, v in acc.items() if v}
        return out

    def items(self):
        return sorted(self.coeffs.items())

    def to_json(self):
        return {
            "field": self.field.tag,
            "terms": [[k, self.field.scalar_to_json(v)] for k, v in self.items()],
        }

    @classmethod
    def from_json(cls, data, field=None):
        from .coeffs import field_from_tag

        fld = field if field is not None else field_from_tag(data["field"])
        return cls(fld, {int(k): fld.scalar_from_json(v) for k, v in data["terms"]})

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, v in self.items():
            zs = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            parts.append(f"({v}){'*' if zs else ''}{zs}")
        return " + ".join(parts)

    def __repr__(self):
        return f"AnnulusSkein({self})"


# ---------------------------------------------------------------------------
# bracket evaluation


def _canonical(crossings, parity):
    """Hashable key invariant under arc relabeling.

    Arcs are relabeled by first appearance, crossings re-sorted, iterated to a
    fixpoint (bounded rounds). Tuples are normalized under the rotation
    (a,b,c,d) ~ (c,d,a,b), which reads the same crossing from the other
    under-strand end. Only the parity of each arc's winding mark enters.
    """
    cr = [min(c, (c[2], c[3], c[0], c[1])) for c in crossings]
    par = parity
    for _ in range(4):
        first = {}
        for t in cr:
            for a in t:
                if a not in first:
                    first[a] = len(first)
        relabeled = []
        for t in cr:
            u = (first[t[0]], first[t[1]], first[t[2]], first[t[3]])
            relabeled.append(min(u, (u[2], u[3], u[0], u[1])))
        new_par = {first[a]: p & 1 for a, p in par.items()}
        new_cr = sorted(relabeled)
        if new_cr == cr and new_par == par:
            break
        cr, par = new_cr, new_par
    return (tuple(cr), tuple(sorted(new_par.items())))


_ADJACENT_LOOPS = ((0, 1, 2, 3, 3), (1, 2, 3, 0, -3), (2, 3, 0, 1, 3), (3, 0, 1, 2, -3))
# (i, j, k, l, kink_exponent): positions (i,j) joined by one arc form a curl,
# the strand continues through positions (k,l); exponent of q in -q^(+-3).


class _Evaluator:
    """One bracket evaluation: memoized recursive smoothing."""

    def __init__(self, field: CoeffField):
        self.field = field
        self.memo = {}
        self.q = field.q_power(1)
        self.qi = field.q_power(-1)
        self.delta = field.delta()

    def run(self, diagram: FramedDiagram) -> AnnulusSkein:
        diagram.validate()
        parity = {}
        for a in diagram.arcs():
            parity[a] = (diagram.winding_marks.get(a, 0) & 1) if diagram.surface == ANNULUS else 0
        value = self._eval(list(diagram.crossings), parity)
        scalar = self.delta**diagram.free_loops if diagram.free_loops else self.field.one()
        return value.scale(scalar).shift(diagram.free_cores) if diagram.free_cores or diagram.free_loops else value

    # -- simplification -----------------------------------------------------

    def _simplify(self, crossings, parity):
        """Strip removable curls and crossing-free circles.

        Returns (crossings, parity, scalar_factor, z_shift).
        """
        factor = self.field.one()
        zshift = 0
        changed = True
        while changed:
            changed = False
            for idx, c in enumerate(crossings):
                for i, j, k, l, exp in _ADJACENT_LOOPS:
                    if c[i] == c[j]:
                        loop = c[i]
                        if parity[loop] & 1:
                            continue  # curl wraps the core, not removable
                        u, v = c[k], c[l]
                        factor = factor * (-self.field.q_power(exp))
                        del crossings[idx]
                        if u == v:
                            p = (parity[u] + parity[loop]) & 1
                            if p:
                                zshift += 1
                            else:
                                factor = factor * self.delta
                            del parity[u]
                            del parity[loop]
                        else:
                            crossings[:] = [
                                tuple(u if a == v else a for a in cc) for cc in crossings
                            ]
                            parity[u] = (parity[u] + parity[v] + parity[loop]) & 1
                            del parity[v]
                            del parity[loop]
                        changed = True
                        break
                if changed:
                    break
        return crossings, parity, factor, zshift

    # -- smoothing ----------------------------------------------------------

    def _join(self, crossings, parity, x, y):
        """Join two arc ends; returns extra (factor, zshift) from closed circles."""
        if x == y:
            if parity[x] & 1:
                del parity[x]
                return None, 1
            del parity[x]
            return self.delta, 0
        parity[x] = (parity[x] + parity[y]) & 1
        del parity[y]
        for i, cc in enumerate(crossings):
            if y in cc:
                crossings[i] = tuple(x if a == y else a for a in cc)
        return None, 0

    def _child(self, crossings, parity, c, pairs):
        cr = list(crossings)
        pa = dict(parity)
        factor = self.field.one()
        zshift = 0
        ends = list(c)
        for i, j in pairs:
            x, y = ends[i], ends[j]
            f, z = self._join(cr, pa, x, y)
            if f is not None:
                factor = factor * f
            zshift += z
            if x != y:
                ends = [x if a == y else a for a in ends]
        return cr, pa, factor, zshift

    def _eval(self, crossings, parity) -> AnnulusSkein:
        crossings, parity, factor, zshift = self._simplify(list(crossings), dict(parity))
        if not crossings:
            out = AnnulusSkein.z_power(self.field, zshift, factor)
            # leftover arcs without crossings are closed circles
            for a, p in parity.items():
                if p & 1:
                    out = out.shift(1)
                else:
                    out = out.scale(self.delta)
            return out
        key = _canonical(crossings, parity)
        cached = self.memo.get(key)
        if cached is None:
            # resolve in list order: constructors emit crossings so that
            # consecutive entries are geometrically local (one core of the
            # band, or one braid letter, at a time), which keeps the set of
            # reachable partial diagrams small
            c = crossings[0]
            rest = crossings[1:]
            ca, pa, fa, za = self._child(rest, parity, c, ((0, 1), (2, 3)))
            va = self._eval(ca, pa).scale(self.q * fa).shift(za)
            cb, pb, fb, zb = self._child(rest, parity, c, ((0, 3), (1, 2)))
            vb = self._eval(cb, pb).scale(self.qi * fb).shift(zb)
            cached = va + vb
            self.memo[key] = cached
        return cached.scale(factor).shift(zshift) if zshift or factor != self.field.one() else cached


def bracket_annulus(diagram: FramedDiagram, field: CoeffField) -> AnnulusSkein:
    """Fully resolve an annulus diagram into sum c_k z^k."""
    if diagram.surface != ANNULUS:
        raise DiagramError("bracket_annulus expects an annulus diagram")
    return _Evaluator(field).run(diagram)


def bracket_disk(diagram: FramedDiagram, field: CoeffField):
    """Value of a disk diagram as a multiple of the empty skein."""
    if diagram.surface != DISK:
        raise DiagramError("bracket_disk expects a disk diagram")
    value = _Evaluator(field).run(diagram)
    assert all(k == 0 for k in value.coeffs), "disk diagram produced core circles"
    return value.coeffs.get(0, field.zero())


# ---------------------------------------------------------------------------
# torus boundary curves pushed into the solid torus
#
# The (p,q) curve on the boundary torus is parametrized by
#     theta(t) = p t (mod 1),   x(t) = cos(2 pi q t),   y(t) = sin(2 pi q t)
# and projected to the annulus coordinates (theta, x); y is the over/under
# level. A strand is drawn over when its y is negative. Cores sit at
# x_i = cos(2 pi s_i) with s_i slightly below 1/4, so each meridional wrap of
# the curve crosses every core twice. All event times are exact rationals.


def _sin_sign(u: Fraction) -> int:
    u = u - (u.numerator // u.denominator)  # u mod 1 in [0,1)
    if u == 0 or 2 * u == 1:
        raise DiagramError("degenerate event in curve construction")
    return 1 if 2 * u < 1 else -1


def _next_safe_prime(p, q, k):
    bad = 2 * max(1, abs(p)) * max(1, abs(q)) * (k + 1)
    n = max(11, abs(p) + abs(q) + k + 3)
    while True:
        n += 1
        if all(n % d for d in range(2, int(n**0.5) + 1)):
            if bad % n:
                return n


def _ring_with_cores(q_sign: int, k: int) -> FramedDiagram:
    """Meridian loop around k parallel core circles, 2k crossings."""
    if k == 0:
        return FramedDiagram(ANNULUS, free_loops=1)
    # ring arcs r_0..r_{2k-1}; over iff y < 0, inbound half has y > 0 for q=+1
    # core i arcs: short_i (between its two crossings), long_i (wraps, mark 1)
    ring = [("r", j) for j in range(2 * k)]
    short = [("s", i) for i in range(1, k + 1)]
    long_ = [("l", i) for i in range(1, k + 1)]
    crossings = []
    # inbound pass: cores k, k-1, .., 1 at ring arcs r_0..r_{k-1} boundaries;
    # ring arc r_j runs from the j-th crossing to the (j+1)-th.
    seq = []  # (core index, curve_y_sign)
    for i in range(k, 0, -1):
        seq.append((i, q_sign))
    for i in range(1, k + 1):
        seq.append((i, -q_sign))
    for j, (i, ysign) in enumerate(seq):
        ring_in = ring[j - 1]
        ring_out = ring[j]
        inbound = j < k
        core_in = long_[i - 1] if inbound else short[i - 1]
        core_out = short[i - 1] if inbound else long_[i - 1]
        if ysign < 0:
            # curve over, core under: v_under = (1,0), v_over = (0, dx)
            dx = -1 if inbound else 1
            cross = dx  # cross(v_u, v_o) = dx
            b, d = (ring_out, ring_in) if cross < 0 else (ring_in, ring_out)
            crossings.append((i, (core_in, b, core_out, d)))
        else:
            # curve under, core over: v_u = (0, dx), v_o = (1, 0)
            dx = -1 if inbound else 1
            cross = -dx
            b, d = (core_out, core_in) if cross < 0 else (core_in, core_out)
            crossings.append((i, (ring_in, b, ring_out, d)))
    crossings = [c for _, c in sorted(crossings, key=lambda e: e[0])]
    names = {}

    def nm(a):
        if a not in names:
            names[a] = len(names)
        return names[a]

    pd = [tuple(nm(a) for a in c) for c in crossings]
    marks = {nm(a): 1 for a in long_}
    return FramedDiagram(ANNULUS, pd, free_loops=0, free_cores=0, winding_marks=marks)


def pushed_curve_with_cores(p: int, q: int, cores: int) -> FramedDiagram:
    """Annulus diagram of the (p,q) boundary curve pushed in, stacked with
    ``cores`` parallel copies of the core circle.

    The label must be primitive; p may be 0 only for the meridian (0,+-1).
    """
    import math

    if (p, q) == (0, 0):
        raise DiagramError("(0,0) is not a curve")
    if math.gcd(abs(p), abs(q)) != 1:
        raise DiagramError("non-primitive boundary curve")
    if p < 0:
        p, q = -p, -q
    k = cores
    if p == 0:
        return _ring_with_cores(1 if q > 0 else -1, k)
    if q == 0 or k == 0 and p == 1:
        # no self crossings and either no dips or nothing to cross
        if q == 0:
            return FramedDiagram(ANNULUS, free_cores=k + 1)
        return FramedDiagram(ANNULUS, free_cores=1)

    P = _next_safe_prime(p, q, k)
    s = [Fraction(1, 4) - Fraction(i, P * (k + 1)) for i in range(1, k + 1)]
    theta_ray = Fraction(1, 2 * P * P * (k + 2) * (abs(q) + 1) * (p + 1))

    events = []  # (t, kind, payload)
    pair_seen = set()
    pair_id = 0
    for a in range(1, p):
        for n in range(0, 2 * abs(q)):
            t1 = Fraction(n, 2 * q) - Fraction(a, 2 * p)
            t1 -= t1.numerator // t1.denominator
            t2 = t1 + Fraction(a, p)
            t2 -= t2.numerator // t2.denominator
            key = frozenset((t1, t2))
            if key in pair_seen:
                continue
            pair_seen.add(key)
            events.append((t1, "self", pair_id))
            events.append((t2, "self", pair_id))
            pair_id += 1
    for i in range(1, k + 1):
        for sign in (1, -1):
            for j in range(0, abs(q)):
                t = Fraction(sign, 1) * s[i - 1] / q + Fraction(j, q)
                t -= t.numerator // t.denominator
                events.append((t, "core", i))

    events.sort(key=lambda e: e[0])
    times = [e[0] for e in events]
    if len(set(times)) != len(times):
        raise DiagramError("coincident events in curve construction")
    ne = len(events)

    # curve arcs between consecutive events; arc j runs event j -> event j+1
    def curve_mark(ta, tb):
        # number of integer points of p*t - theta_ray in (p*ta, p*tb)
        fa = p * ta - theta_ray
        fb = p * tb - theta_ray
        return (fb.numerator // fb.denominator) - (fa.numerator // fa.denominator)

    curve_arcs = []
    for j in range(ne):
        ta = times[j]
        tb = times[(j + 1) % ne] if j + 1 < ne else times[0] + 1
        curve_arcs.append((("c", j), curve_mark(ta, tb)))

    marks = {}
    for name, mk in curve_arcs:
        marks[name] = mk

    def curve_in(j):
        return curve_arcs[(j - 1) % ne][0]

    def curve_out(j):
        return curve_arcs[j][0]

    # core arcs
    core_events = {i: [] for i in range(1, k + 1)}
    for j, (t, kind, payload) in enumerate(events):
        if kind == "core":
            ang = p * t
            ang -= ang.numerator // ang.denominator
            core_events[payload].append((ang, j))
    core_in = {}
    core_out = {}
    for i, evs in core_events.items():
        evs.sort()
        m = len(evs)
        for idx, (ang, j) in enumerate(evs):
            nxt_ang = evs[(idx + 1) % m][0]
            name = ("k", i, idx)
            lo, hi = ang, (nxt_ang if idx + 1 < m else nxt_ang + 1)
            r = theta_ray
            count = 0
            # ray at angle theta_ray (mod 1) inside (lo, hi)?
            x = r
            while x <= hi:
                if x > lo:
                    count += 1
                x += 1
            marks[name] = count
            core_out[j] = name
            core_in[evs[(idx + 1) % m][1]] = name

    tagged = []  # (sort_key, pd_tuple); cores inner-to-outer first, braid last
    pair_partner = {}
    for j, (t, kind, payload) in enumerate(events):
        if kind == "self":
            if payload in pair_partner:
                j1 = pair_partner[payload]
                j2 = j
                t1, t2 = times[j1], times[j2]
                ss1 = _sin_sign(q * t1)
                ss2 = _sin_sign(q * t2)
                assert ss1 == -ss2
                # over iff y < 0 iff sin sign < 0
                ju, jo = (j1, j2) if ss1 > 0 else (j2, j1)
                dx_u = -q * _sin_sign(q * times[ju])  # sign of dx/dt
                dx_o = -q * _sin_sign(q * times[jo])
                cross = dx_o - dx_u  # sign of p*(dx_o - dx_u)
                a_arc = curve_in(ju)
                c_arc = curve_out(ju)
                if cross < 0:
                    b_arc, d_arc = curve_out(jo), curve_in(jo)
                else:
                    b_arc, d_arc = curve_in(jo), curve_out(jo)
                tagged.append(((1, 0, t), (a_arc, b_arc, c_arc, d_arc)))
            else:
                pair_partner[payload] = j
        else:
            ss = _sin_sign(q * t)
            dx = -q * ss
            if ss < 0:
                # curve over, core under: v_u = (1,0), v_o = (p, dx); cross = dx
                a_arc, c_arc = core_in[j], core_out[j]
                if dx < 0:
                    b_arc, d_arc = curve_out(j), curve_in(j)
                else:
                    b_arc, d_arc = curve_in(j), curve_out(j)
            else:
                # curve under, core over: v_u = (p, dx), v_o = (1,0); cross = -dx
                a_arc, c_arc = curve_in(j), curve_out(j)
                if -dx < 0:
                    b_arc, d_arc = core_out[j], core_in[j]
                else:
                    b_arc, d_arc = core_in[j], core_out[j]
            tagged.append(((0, payload, t), (a_arc, b_arc, c_arc, d_arc)))

    crossings = [c for _, c in sorted(tagged, key=lambda e: e[0])]
    expected = (p - 1) * abs(q) + 2 * abs(q) * k
    assert len(crossings) == expected, (len(crossings), expected)

    names = {}

    def nm(a):
        if a not in names:
            names[a] = len(names)
        return names[a]

    pd = [tuple(nm(a) for a in c) for c in crossings]
    int_marks = {nm(a): m for a, m in marks.items() if a in names}
    return FramedDiagram(ANNULUS, pd, winding_marks=int_marks)


def torus_boundary_push(p: int, q: int) -> FramedDiagram:
    """The (p,q) torus-boundary curve pushed into the solid torus,
    blackboard framed, as a closed braid diagram."""
    return pushed_curve_with_cores(p, q, 0)
