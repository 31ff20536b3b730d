"""Free-field factor spaces for the reduction complex.

Two families are attached to the good grading of the nilpotent:

* neutral fields, one per half-step positive root, pairing against each
  other one mode below zero (the twist pushes the contraction from
  m + n = 0 to m + n = -1) and carrying the parity of the root itself;

* charge ghosts, a lowering/raising pair per positive root, with parity
  reversed relative to the root, so even roots contribute fermionic
  ghosts and odd roots bosonic ones.

Both spaces act on normal-ordered words with Fraction coefficients; the
straightening is the same shape as for the enveloping algebra but the
brackets here are scalars, so no recursion through new operators occurs.
"""

from fractions import Fraction

from . import weights as W
from .algebra import neutral_pairing
from .enumeration import Enumerator, Factor

Q = Fraction

GH = 0   # charge -1, transforms like the root
CO = 1   # charge +1, transforms like minus the root


class NeutralSpace:
    """Vacuum module of the twisted neutral pairs."""

    def __init__(self, data):
        self.data = data
        self.half = data.half_plus
        self.gram = neutral_pairing(data).gram
        self.parity = tuple(data.parity[i] for i in self.half)
        self._cache = {}

    @staticmethod
    def _key(n, a):
        return (-n, a)

    def apply(self, a, n, word):
        """Field a at mode n on a normal-ordered word; {word: coeff}."""
        key = (a, n, word)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = self._apply(a, n, word)
        return hit

    def _apply(self, a, n, word):
        creator = n <= -1
        if not word:
            return {((n, a),): Q(1)} if creator else {}
        m0, b0 = word[0]
        if creator:
            kn, kh = self._key(n, a), self._key(m0, b0)
            if kn < kh:
                return {((n, a),) + word: Q(1)}
            if kn == kh:
                if self.parity[a]:
                    return {}       # odd square; same-mode pairing is zero
                return {((n, a),) + word: Q(1)}
        out = {}
        sign = -1 if (self.parity[a] and self.parity[b0]) else 1
        for w2, c2 in self.apply(a, n, word[1:]).items():
            _accum(out, self.apply(b0, m0, w2), sign * c2)
        if n + m0 == -1:
            g = self.gram[a][b0]
            if g:
                _accum(out, {word[1:]: Q(1)}, g)
        return out

    def word_weight(self, word):
        return _word_weight(self.data, ((self.half[a], n) for n, a in word))


class ChargedSpace:
    """Vacuum module of the charge ghosts.

    Word entries are (kind, n, a): kind GH or CO, mode n, positive-root
    position a.  GH creators sit at n <= -1, CO creators at n <= 0; the
    only nonzero contraction is GH against CO of the same root at
    opposite modes.
    """

    def __init__(self, data):
        self.data = data
        self.pos = data.positive_roots
        self.parity = tuple((data.parity[i] + 1) % 2 for i in self.pos)
        self._cache = {}

    @staticmethod
    def _key(kind, n, a):
        return (kind, -n, a)

    def is_creator(self, kind, n):
        return n <= -1 if kind == GH else n <= 0

    def apply(self, kind, a, n, word):
        key = (kind, a, n, word)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = self._apply(kind, a, n, word)
        return hit

    def _contraction(self, kind, a, n, kindh, b, m):
        if a != b or n + m != 0 or kind == kindh:
            return Q(0)
        if kind == GH:
            return Q(1)
        return Q(1) if self.parity[a] else Q(-1)

    def _apply(self, kind, a, n, word):
        creator = self.is_creator(kind, n)
        if not word:
            return {((kind, n, a),): Q(1)} if creator else {}
        kindh, m0, b0 = word[0]
        if creator:
            kn = self._key(kind, n, a)
            kh = self._key(kindh, m0, b0)
            if kn < kh:
                return {((kind, n, a),) + word: Q(1)}
            if kn == kh:
                if self.parity[a]:
                    return {}
                return {((kind, n, a),) + word: Q(1)}
        out = {}
        sign = -1 if (self.parity[a] and self.parity[b0]) else 1
        for w2, c2 in self.apply(kind, a, n, word[1:]).items():
            _accum(out, self.apply(kindh, b0, m0, w2), sign * c2)
        c = self._contraction(kind, a, n, kindh, b0, m0)
        if c:
            _accum(out, {word[1:]: Q(1)}, c)
        return out

    def word_weight(self, word):
        gens = []
        for kind, n, a in word:
            gens.append((self.pos[a], n, -1 if kind == CO else 1))
        return _word_weight_signed(self.data, gens)

    @staticmethod
    def charge(word):
        return sum(1 if kind == CO else -1 for kind, n, a in word)


def _accum(target, source, scale):
    if scale == 0:
        return
    for w, c in source.items():
        v = target.get(w, 0) + scale * c
        if v == 0:
            target.pop(w, None)
        else:
            target[w] = v


def _word_weight(data, gens):
    return _word_weight_signed(data, ((i, n, 1) for i, n in gens))


def _word_weight_signed(data, gens):
    nh = len(data.cartan)
    vals = [Q(0)] * nh
    delta = Q(0)
    for i, n, s in gens:
        delta += n
        for t in range(nh):
            vals[t] += s * data.roots[i][t]
    return W.AffineWeight(tuple(vals), Q(0), delta)


_NEUTRAL = {}
_CHARGED = {}


def neutral_space(data):
    sp = _NEUTRAL.get(data.name)
    if sp is None:
        sp = _NEUTRAL[data.name] = NeutralSpace(data)
    return sp


def charged_space(data):
    sp = _CHARGED.get(data.name)
    if sp is None:
        sp = _CHARGED[data.name] = ChargedSpace(data)
    return sp


def _neutral_pool(data, depth):
    half = data.half_plus
    factors = []
    for n in range(-depth, 0):
        for a, i in enumerate(half):
            coords = tuple(-c for c in W.simple_coords(data, data.roots[i]))
            fer = data.parity[i] == 1
            factors.append(Factor((n, a), -n, coords, 1 if fer else None))
    factors.sort(key=lambda f: NeutralSpace._key(*f.tag))
    return factors


def _charged_pool(data, depth):
    pos = data.positive_roots
    factors = []
    for a, i in enumerate(pos):
        rc = W.simple_coords(data, data.roots[i])
        fer = data.parity[i] == 0     # ghost parity is reversed
        cap = 1 if fer else None
        for n in range(-depth, 0):
            factors.append(Factor((GH, n, a), -n,
                                  tuple(-c for c in rc), cap))
        for n in range(-depth, 1):
            factors.append(Factor((CO, n, a), -n, tuple(rc), cap))
    factors.sort(key=lambda f: ChargedSpace._key(*f.tag))
    return factors


def fock_character(data, space, window):
    """Graded dimensions of a ghost or neutral vacuum module.

    space is 'neutral' or 'charged'.  Keys are weights relative to the
    vacuum; the charged character is refined by ghost degree, with keys
    (weight, degree).
    """
    if space == "neutral":
        pool = _neutral_pool(data, window.depth)
    elif space == "charged":
        pool = _charged_pool(data, window.depth)
    else:
        raise ValueError("space must be 'neutral' or 'charged'")
    enum = Enumerator(pool)
    simples = W.simple_roots(data)
    r = len(simples)
    nh = len(data.cartan)
    out = {}
    for d in range(window.depth + 1):
        for cvec in _signed_box(r, window.height):
            words = enum.words(d, cvec)
            if not words:
                continue
            vals = [Q(0)] * nh
            for c, s in zip(cvec, simples):
                for t in range(nh):
                    vals[t] -= c * s[t]
            wt = W.AffineWeight(tuple(vals), Q(0), Q(-d))
            if space == "neutral":
                out[wt] = len(words)
                continue
            for word in words:
                ch = sum(1 if k == CO else -1 for k, n, a in word)
                key = (wt, ch)
                out[key] = out.get(key, 0) + 1
    return out


def _signed_box(r, height):
    if r == 0:
        yield ()
        return
    for c in range(-height, height + 1):
        for rest in _signed_box(r - 1, height - abs(c)):
            yield (c,) + rest
