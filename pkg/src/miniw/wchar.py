"""Reduced-side graded data.

Highest weights on the reduced side are pairs (values on h^f, s0), obtained
from an affine weight by the Casimir shift.  Graded characters of the free
modules come from one bosonic family per h^f element and per the lowest
root vector, plus one family per grade -1/2 element (parity inherited);
all families start at positive degree, so every series has constant term 1.
Irreducible characters on a window are predicted by triangular inversion of
contravariant-form ranks against module dimensions over the linkage set.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from . import verma as V
from . import weights as W
from .algebra import dual_coxeter, superdimension
from .errors import (CriticalLevelError, LevelMismatchError,
                     WindowTooSmallError)

Q = Fraction


@dataclass(frozen=True)
class WHighestWeight:
    hf_values: tuple
    s0: Fraction


def phi_map(data, lam, k):
    """Reduced highest weight of an affine weight at level k."""
    k = Q(k)
    if lam.level != k:
        raise LevelMismatchError(
            "weight has level %s, expected %s" % (lam.level, k))
    hf = tuple(lam.h_part[:len(data.hf)])
    s0 = (W.casimir_eigenvalue(data, lam)
          - 2 * (k + dual_coxeter(data)) * W.dW_of(data, lam))
    return WHighestWeight(hf, s0)


@dataclass(frozen=True)
class WGenerator:
    """One free generator mode: label, degree drop, h^f drop, parity."""
    label: str
    degree: Fraction
    hf_drop: tuple
    fermionic: bool


def w_generators(data, max_level):
    """Free generator modes of the negative half up to a degree bound.

    One bosonic family sits over the lowest root vector (degrees 1,2,...),
    one family per grade -1/2 element (degrees 1/2, 3/2, ...; parity of the
    element), and one bosonic family per h^f element (degrees 1,2,...).
    """
    out = []
    nhf = len(data.hf)
    N = Q(max_level)
    zero = (Q(0),) * nhf
    d = Q(1)
    while d <= N:
        out.append(WGenerator("%s(%s)" % (data.labels[data.theta_minus],
                                          1 - d), d, zero, False))
        d += 1
    for i in data.half_minus:
        drop = tuple(-Q(v) for v in data.roots[i][:nhf])
        fer = data.parity[i] == 1
        d = Q(1, 2)
        while d <= N:
            out.append(WGenerator("%s(%s)" % (data.labels[i], Q(1, 2) - d),
                                  d, drop, fer))
            d += 1
    for h in data.hf:
        d = Q(1)
        while d <= N:
            out.append(WGenerator("%s(%s)" % (data.labels[h], -d),
                                  d, zero, False))
            d += 1
    return out


def _degree_grid(data, max_level):
    step = Q(1, 2) if data.half_minus else Q(1)
    N = Q(max_level)
    out = []
    d = Q(0)
    while d <= N:
        out.append(d)
        d += step
    return out


def _apply_gen(ser, gen, grid):
    """Multiply a {degree: {hf_drop: count}} series by one generator family."""
    d = gen.degree
    w = gen.hf_drop
    top = grid[-1]
    out = {off: dict(m) for off, m in ser.items()}
    if gen.fermionic:
        for off, m in ser.items():
            off2 = off + d
            if off2 > top:
                continue
            tgt = out.setdefault(off2, {})
            for hf, c in m.items():
                key = tuple(a + b for a, b in zip(hf, w))
                tgt[key] = tgt.get(key, 0) + c
        return out
    for off in grid:
        src = off - d
        if src < 0:
            continue
        m = out.get(src)
        if not m:
            continue
        tgt = out.setdefault(off, {})
        for hf, c in m.items():
            key = tuple(a + b for a, b in zip(hf, w))
            tgt[key] = tgt.get(key, 0) + c
    return out


def w_verma_character(data, max_level):
    """Graded dimensions {degree: {hf_drop: count}} of the free module."""
    grid = _degree_grid(data, max_level)
    nhf = len(data.hf)
    ser = {Q(0): {(Q(0),) * nhf: 1}}
    for gen in w_generators(data, max_level):
        ser = _apply_gen(ser, gen, grid)
    return ser


def series_total(ser, off):
    """Total count at one degree of a refined series."""
    return sum(ser.get(Q(off), {}).values())


def central_charge(data, k):
    k = Q(k)
    hv = dual_coxeter(data)
    if k + hv == 0:
        raise CriticalLevelError("level %s is critical (-h^vee)" % k)
    return k * superdimension(data) / (k + hv) - 6 * k + hv - 4


def s0_eigenvalue_check(data, lam, k, m):
    """Casimir-identity prediction for s0 at chain level m vs. phi's value."""
    k = Q(k)
    if lam.level != k:
        raise LevelMismatchError(
            "weight has level %s, expected %s" % (lam.level, k))
    predicted = (W.casimir_eigenvalue(data, lam)
                 - 2 * (k + dual_coxeter(data)) * (W.dW_of(data, lam) - Q(m)))
    return predicted, phi_map(data, lam, k).s0


# ---------------------------------------------------------------------------
# irreducible characters on a window

def _fraction_sqrt(x):
    if x < 0:
        return None
    rn, rd = isqrt(x.numerator), isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Q(rn, rd)
    return None


def _bgrid(dws, budget):
    if not dws:
        yield ()
        return
    b = 0
    while b * dws[0] <= budget:
        for rest in _bgrid(dws[1:], budget - b * dws[0]):
            yield (b,) + rest
        b += 1


def _linked_candidates(data, lam, window, max_level):
    """Weights below lam with equal Casimir eigenvalue emitting within the
    degree bound, as (a, b, mu) drop coordinates along {alpha_0, simples}."""
    simples = W.simple_roots(data)
    theta = data.theta()
    theta_c = W.simple_coords(data, theta)
    dws = [W.finite_pair(data, s, theta) / 2 for s in simples]
    a0 = W.alpha0(data)
    rho = W.rho(data)
    cas0 = W.casimir_eigenvalue(data, lam)
    out = []
    for bs in _bgrid(dws, Q(max_level)):
        vals = [Q(0)] * len(lam.h_part)
        for b, s in zip(bs, simples):
            for t, v in enumerate(s):
                vals[t] += b * v
        mu0 = lam - W.AffineWeight(tuple(vals), Q(0), Q(0))
        # Casimir along mu0 - a*alpha_0 is quadratic: 2a^2 - 2a(alpha_0|mu0+rho)
        # + cas(mu0) - cas0 = 0
        lin = W.form2(data, a0, mu0 + rho)
        const = W.casimir_eigenvalue(data, mu0) - cas0
        disc = _fraction_sqrt(lin * lin - 2 * const)
        if disc is None:
            continue
        for root in {(lin + disc) / 2, (lin - disc) / 2}:
            if root.denominator != 1 or root < 0:
                continue
            a = int(root)
            if a > window.depth:
                raise WindowTooSmallError(
                    "linked weight at chain depth %d exceeds window depth %d"
                    % (a, window.depth))
            ht = sum(abs(b - a * tc) for b, tc in zip(bs, theta_c))
            if ht > window.height:
                raise WindowTooSmallError(
                    "linked weight at finite height %s exceeds window "
                    "height %d" % (ht, window.height))
            out.append((a, bs, mu0 - a0.scale(a)))
    return out


def simple_w_character(data, lam, k, window, max_level=3):
    """Predicted graded character of the reduced irreducible, with the
    multiplicity report from triangular inversion.

    Returns (series, multiplicities): series maps degree offsets below the
    image of lam to {hf_drop: count}; multiplicities maps drop coordinates
    (a, b) to the integer coefficient of the module at lam - a alpha_0 -
    sum b_i alpha_i.  When the alpha_0-pairing of lam is a nonnegative
    integer the series must cancel to zero on the window, and this is
    asserted.
    """
    k = Q(k)
    if lam.level != k:
        raise LevelMismatchError(
            "weight has level %s, expected %s" % (lam.level, k))
    N = Q(max_level)
    simples = W.simple_roots(data)
    theta = data.theta()
    dws = [W.finite_pair(data, s, theta) / 2 for s in simples]
    nhf = len(data.hf)
    cands = _linked_candidates(data, lam, window, N)
    cands.sort(key=lambda t: (t[0] + sum(t[1]), t[1]))
    mults = {}
    order = []
    for a, bs, mu in cands:
        val = V.gram_rank(data, lam, mu)[1]
        for a2, bs2, mu2 in order:
            c2 = mults.get((a2, bs2), 0)
            if c2 and W.leq(data, mu, mu2):
                val -= c2 * V.get_module(data, mu2).dim_weight(mu)
        mults[(a, bs)] = val
        order.append((a, bs, mu))
    wv = w_verma_character(data, N)
    pred = {}
    for (a, bs), c in mults.items():
        if not c:
            continue
        shift_dw = sum(b * d for b, d in zip(bs, dws))
        shift_hf = tuple(sum(Q(b) * s[t] for b, s in zip(bs, simples))
                         for t in range(nhf))
        for off, m in wv.items():
            off2 = off + shift_dw
            if off2 > N:
                continue
            tgt = pred.setdefault(off2, {})
            for hf, cnt in m.items():
                key = tuple(h + s for h, s in zip(hf, shift_hf))
                new = tgt.get(key, 0) + c * cnt
                if new:
                    tgt[key] = new
                else:
                    tgt.pop(key, None)
    pred = {off: m for off, m in pred.items() if m}
    p = W.alpha0_pairing(data, lam)
    if p.denominator == 1 and p >= 0:
        assert not pred, ("vanishing clause: pairing %s is a nonnegative "
                          "integer but the series does not cancel" % p)
    return pred, mults
