"""Action of the torus skein algebra on the solid torus.

The action of a primitive boundary slope (p,q) on the z^k basis is computed
by diagram resolution: push the curve into a boundary collar, stack it with
k parallel cores, evaluate the bracket, and rescale by the surface-framing
normalization (-q^3)^(-q) for p >= 1. The normalization accounts for the
difference between the blackboard framing of the flattened closed-braid
projection and the framing the curve inherits from the boundary torus; it is
what makes the diagrammatic action a module over the product-to-sum algebra
(checked exhaustively by the cross-validation suite, see acceptance item 6).

Non-primitive labels (dp, dq) act as T_d of the primitive action. Columns
are computed over generic q once, cached on disk (atomic rename, safe for
concurrent writers), and specialized into other coefficient fields on demand.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
import tempfile

from .coeffs import CoeffField, GenericQ, specialize_scalar
from .diagrams import AnnulusSkein, bracket_annulus, pushed_curve_with_cores
from .errors import DiagramError

_GENERIC = GenericQ()


def cache_dir() -> str:
    return os.environ.get("SKEINLAB_CACHE", os.path.join(os.getcwd(), ".skeinlab_cache"))


class ActionMatrix:
    """Exact action of a primitive (p,q) slope on z^0..z^N."""

    __slots__ = ("curve", "degree_in", "field", "columns")

    def __init__(self, curve, degree_in, field, columns):
        self.curve = curve
        self.degree_in = degree_in
        self.field = field
        self.columns = columns  # list of AnnulusSkein, index k

    def entries(self):
        """Rectangular matrix rows 0..N+|p|, columns 0..N."""
        p = abs(self.curve[0])
        rows = self.degree_in + p + 1
        out = [[self.field.zero() for _ in range(self.degree_in + 1)] for _ in range(rows)]
        for k, col in enumerate(self.columns):
            for deg, c in col.coeffs.items():
                out[deg][k] = c
        return out

    def to_json(self):
        body = {
            "curve": list(self.curve),
            "degree_in": self.degree_in,
            "field": self.field.tag,
            "columns": [col.to_json()["terms"] for col in self.columns],
        }
        digest = hashlib.sha256(
            json.dumps(body, sort_keys=True, separators=(",", ":")).encode()
        ).hexdigest()
        body["content_hash"] = digest
        return body

    @classmethod
    def from_json(cls, data, field):
        cols = [
            AnnulusSkein(field, {int(k): field.scalar_from_json(v) for k, v in terms})
            for terms in data["columns"]
        ]
        return cls(tuple(data["curve"]), data["degree_in"], field, cols)


class ActionCache:
    """Generic-q action columns, in memory and on disk."""

    def __init__(self, directory=None):
        self.directory = directory
        self._mem: dict[tuple[int, int], list[AnnulusSkein]] = {}

    def _dir(self):
        return self.directory or cache_dir()

    def _path(self, p, q):
        return os.path.join(self._dir(), f"action_{p}_{q}_generic.json")

    def _load(self, p, q):
        cols = self._mem.get((p, q))
        if cols is None:
            cols = []
            path = self._path(p, q)
            if os.path.exists(path):
                try:
                    with open(path) as fh:
                        data = json.load(fh)
                    cols = ActionMatrix.from_json(data, _GENERIC).columns
                except (ValueError, KeyError, OSError):
                    cols = []
            self._mem[(p, q)] = cols
        return cols

    def _store(self, p, q, cols):
        self._mem[(p, q)] = cols
        directory = self._dir()
        os.makedirs(directory, exist_ok=True)
        data = ActionMatrix((p, q), len(cols) - 1, _GENERIC, cols).to_json()
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(data, fh, sort_keys=True, separators=(",", ":"))
        os.replace(tmp, self._path(p, q))

    def columns(self, p, q, upto):
        """Generic-q action columns of the primitive (p,q) for k = 0..upto."""
        if math.gcd(abs(p), abs(q)) != 1:
            raise DiagramError("action matrix requires a primitive curve")
        cols = self._load(p, q)
        if len(cols) <= upto:
            cols = list(cols)
            framing = _GENERIC.one()
            if p != 0 and q != 0:
                framing = (-_GENERIC.q_power(3)) ** (-q)
            for k in range(len(cols), upto + 1):
                value = bracket_annulus(pushed_curve_with_cores(p, q, k), _GENERIC)
                cols.append(value.scale(framing))
            self._store(p, q, cols)
        return cols


_DEFAULT_CACHE = ActionCache()


def action_matrix(p: int, q: int, N: int, field: CoeffField, cache=None) -> ActionMatrix:
    """Action of the primitive boundary curve (p,q) on z^0..z^N."""
    cache = cache or _DEFAULT_CACHE
    cols = cache.columns(p, q, N)[: N + 1]
    if not isinstance(field, GenericQ):
        cols = [
            AnnulusSkein(field, {k: specialize_scalar(v, field) for k, v in col.coeffs.items()})
            for col in cols
        ]
    return ActionMatrix((p, q), N, field, cols)


def _apply_primitive(p, q, v: AnnulusSkein, cache) -> AnnulusSkein:
    field = v.field
    if not v:
        return v
    cols = cache.columns(p, q, v.degree())
    out = AnnulusSkein.zero(field)
    for k, c in v.coeffs.items():
        col = cols[k]
        if not isinstance(field, GenericQ):
            col = AnnulusSkein(field, {d: specialize_scalar(x, field) for d, x in col.coeffs.items()})
        out = out + col.scale(c)
    return out


def act(a, v: AnnulusSkein, cache=None) -> AnnulusSkein:
    """Module action of a torus skein on a solid-torus skein.

    Non-primitive labels expand through the Chebyshev recursion
    w_{j+1} = M w_j - w_{j-1} applied to vectors, so only primitive action
    matrices are ever taken from the diagram engine.
    """
    from .torus import TorusSkein

    if not isinstance(a, TorusSkein):
        raise TypeError("act expects a TorusSkein")
    if a.field != v.field:
        # allow acting with rational-coefficient skein on any field? no: strict.
        raise DiagramError(
            f"field mismatch: skein over {a.field.tag}, module over {v.field.tag}"
        )
    cache = cache or _DEFAULT_CACHE
    out = AnnulusSkein.zero(v.field)
    for (p, q), coeff in a.coeffs.items():
        if (p, q) == (0, 0):
            out = out + v.scale(coeff)
            continue
        d = math.gcd(abs(p), abs(q))
        p0, q0 = p // d, q // d
        if d == 1:
            out = out + _apply_primitive(p0, q0, v, cache).scale(coeff)
        else:
            w_prev = v.scale(v.field.from_int(2))  # T_0(M) v
            w_cur = _apply_primitive(p0, q0, v, cache)  # T_1(M) v
            for _ in range(d - 1):
                w_next = _apply_primitive(p0, q0, w_cur, cache) - w_prev
                w_prev, w_cur = w_cur, w_next
            out = out + w_cur.scale(coeff)
    return out
