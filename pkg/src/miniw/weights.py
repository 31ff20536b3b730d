"""Weights of the affinization and their projections.

An AffineWeight packs the finite part (as values on the chosen Cartan
basis, h^f first then x), the level <lambda, K>, and the delta-coefficient
<lambda, D>.  TWeight is the projection used to organize reduced modules:
the restriction to h^f together with the eigenvalue of x + D.
"""

from dataclasses import dataclass
from fractions import Fraction

from .algebra import build_algebra, dual_coxeter
from .errors import LevelMismatchError
from .linalg import invert_dense

Q = Fraction


@dataclass(frozen=True)
class AffineWeight:
    h_part: tuple
    level: Fraction
    delta: Fraction

    def __add__(self, other):
        return AffineWeight(tuple(a + b for a, b in
                                  zip(self.h_part, other.h_part)),
                            self.level + other.level,
                            self.delta + other.delta)

    def __sub__(self, other):
        return AffineWeight(tuple(a - b for a, b in
                                  zip(self.h_part, other.h_part)),
                            self.level - other.level,
                            self.delta - other.delta)

    def scale(self, c):
        c = Q(c)
        return AffineWeight(tuple(c * a for a in self.h_part),
                            c * self.level, c * self.delta)


@dataclass(frozen=True)
class TWeight:
    hf_part: tuple
    dW: Fraction


def make_weight(data, hf=None, x=Q(0), level=Q(0), delta=Q(0)):
    hf = tuple(Q(v) for v in (hf or ()))
    if len(hf) != len(data.hf):
        raise ValueError("expected %d h^f values" % len(data.hf))
    return AffineWeight(hf + (Q(x),), Q(level), Q(delta))


def zero_weight(data):
    return make_weight(data, [0] * len(data.hf))


_CTX = {}


class _Ctx:
    """Per-algebra caches: Cartan gram, theta coords, simple roots."""

    def __init__(self, data):
        self.data = data
        n = len(data.cartan)
        self.gram = [[data.form[i][j] for j in data.cartan]
                     for i in data.cartan]
        self.gram_inv = invert_dense(self.gram)
        self.theta = data.theta()
        pos = [data.roots[i] for i in data.positive_roots]
        simples = []
        for a in pos:
            if not any(self._root_sum(b, c) == a
                       for b in pos for c in pos):
                simples.append(a)
        # stable order: lexicographic on the value tuples
        self.simples = sorted(set(simples))
        m = [[s[i] for s in self.simples] for i in range(n)]
        if len(self.simples) != n:
            raise ValueError("simple roots do not span the Cartan dual")
        self.simple_inv = invert_dense(m)

    @staticmethod
    def _root_sum(b, c):
        return tuple(x + y for x, y in zip(b, c))

    def pair(self, v1, v2):
        n = len(v1)
        return sum(v1[i] * self.gram_inv[i][j] * v2[j]
                   for i in range(n) for j in range(n))

    def simple_coords(self, values):
        n = len(values)
        return tuple(sum(self.simple_inv[i][j] * values[j] for j in range(n))
                     for i in range(n))


def _ctx(data):
    c = _CTX.get(data.name)
    if c is None:
        c = _CTX[data.name] = _Ctx(data)
    return c


def finite_pair(data, v1, v2):
    """Invariant pairing of two finite weights given by Cartan values."""
    return _ctx(data).pair(tuple(v1), tuple(v2))


def form2(data, w1, w2):
    """(w1|w2) on the affinized weight space: (delta|Lambda_0) = 1."""
    return (finite_pair(data, w1.h_part, w2.h_part)
            + w1.level * w2.delta + w2.level * w1.delta)


def rho(data):
    """Half the signed sum of positive roots, lifted to level h^vee."""
    n = len(data.cartan)
    acc = [Q(0)] * n
    for i in data.positive_roots:
        s = -1 if data.parity[i] else 1
        for t in range(n):
            acc[t] += s * Q(data.roots[i][t], 2)
    neg = {tuple(-v for v in data.roots[i]) for i in data.positive_roots}
    # sanity: the set of roots is symmetric
    assert neg == {data.roots[i] for i in range(data.dim)
                   if data.grade[i] < 0}
    return AffineWeight(tuple(acc), dual_coxeter(data), Q(0))


def alpha0(data):
    """delta - theta as an affine weight."""
    th = _ctx(data).theta
    return AffineWeight(tuple(-v for v in th), Q(0), Q(1))


def alpha0_pairing(data, lam):
    """<lambda, alpha_0^vee> = level - (finite part | theta)."""
    return lam.level - finite_pair(data, lam.h_part, _ctx(data).theta)


def casimir_eigenvalue(data, lam):
    """(lambda | lambda + 2 rho) on the affinized weight space."""
    r = rho(data)
    shifted = lam + r + r
    return form2(data, lam, shifted)


def dW_of(data, lam):
    """Eigenvalue of x + D: (finite|theta)/2 + delta-coefficient."""
    return finite_pair(data, lam.h_part, _ctx(data).theta) / 2 + lam.delta


def project_xi(data, lam):
    """Restrict to h^f and record the x + D eigenvalue."""
    nhf = len(data.hf)
    return TWeight(tuple(lam.h_part[:nhf]), dW_of(data, lam))


def decompose_drop(data, diff):
    """Coordinates (a, b_1..b_r) of an affine weight in the basis
    {alpha_0} + finite simple roots, or None if the level is nonzero."""
    if diff.level != 0:
        return None
    a = diff.delta
    ctx = _ctx(data)
    shifted = tuple(v + a * t for v, t in zip(diff.h_part, ctx.theta))
    return (a,) + ctx.simple_coords(shifted)


def leq(data, mu, lam):
    """mu <= lambda: the difference is a nonnegative-integer combination
    of alpha_0 and the finite simple roots."""
    if mu.level != lam.level:
        raise LevelMismatchError(
            "cannot compare weights at levels %s and %s"
            % (mu.level, lam.level))
    coords = decompose_drop(data, lam - mu)
    if coords is None:
        return False
    return all(c.denominator == 1 and c >= 0 for c in coords)


def simple_roots(data):
    """Finite simple roots as value tuples on the Cartan basis."""
    return tuple(_ctx(data).simples)


def simple_coords(data, values):
    """Coordinates of a finite weight in the simple-root basis."""
    return _ctx(data).simple_coords(tuple(values))


def finite_height(data, values):
    """Sum of absolute values of simple-root coordinates (window metric)."""
    coords = _ctx(data).simple_coords(tuple(values))
    return sum(abs(c) for c in coords)


def root_height(data, values):
    """Signed sum of simple-root coordinates (PBW ordering key)."""
    coords = _ctx(data).simple_coords(tuple(values))
    return sum(coords)


def parse_weight_spec(data, text):
    """Parse 'k=1/3; hf=[1,-2]; x=0; delta=0' into an AffineWeight.

    Omitted fields default to zero.  hf expects one value per h^f basis
    vector, in basis order.
    """
    fields = {"k": Q(0), "x": Q(0), "delta": Q(0),
              "hf": [Q(0)] * len(data.hf)}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise ValueError("bad weight component %r" % chunk)
        key, _, val = chunk.partition("=")
        key = key.strip()
        val = val.strip()
        if key == "hf":
            if not (val.startswith("[") and val.endswith("]")):
                raise ValueError("hf expects a bracketed list")
            inner = val[1:-1].strip()
            vals = [Q(v.strip()) for v in inner.split(",")] if inner else []
            if len(vals) != len(data.hf):
                raise ValueError("expected %d h^f values, got %d"
                                 % (len(data.hf), len(vals)))
            fields["hf"] = vals
        elif key in ("k", "x", "delta"):
            fields[key] = Q(val)
        else:
            raise ValueError("unknown weight field %r" % key)
    return make_weight(data, hf=fields["hf"], x=fields["x"],
                       level=fields["k"], delta=fields["delta"])
