"""Highest-weight modules over the affinization, in exact arithmetic.

A Verma module is realized on its PBW basis: words in the negative-mode
(and negative-root zero-mode) generators, kept in a fixed normal order.
Operators act by recursive straightening against the structure constants;
every coefficient is a Fraction, so ranks of contravariant Gram matrices
are exact and quotient (simple) modules are represented by explicit
pivot-word bases with projection along the form radical.

Weight bookkeeping is always recomputed from word content — no shift is
ever assumed — which keeps twisted actions and annihilation paths honest.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import weights as W
from .enumeration import Enumerator, Factor
from .errors import NotStabilizedError, WindowOverflowError
from .linalg import dense_rref, sparse_rank

Q = Fraction


@dataclass(frozen=True)
class TruncationWindow:
    """Bounds for weight enumeration.

    depth: max delta-coefficient of lambda - mu;
    height: max sum of |simple-root coordinates| of the finite part;
    chain: number of alpha_0 steps kept below the top of a per-xi complex.
    """
    depth: int
    height: int
    chain: int = 0


class VermaModule:
    """M(lambda) for a built algebra; lambda carries its own level."""

    def __init__(self, data, lam):
        self.data = data
        self.lam = lam
        self.k = lam.level
        self._simples = W.simple_roots(data)
        self._rc = {}    # idx -> simple-root coords of its root
        self._ht = {}    # idx -> signed height (0 on the Cartan)
        for i in range(data.dim):
            coords = W.simple_coords(data, data.roots[i])
            self._rc[i] = coords
            self._ht[i] = sum(coords)
        self._apply_cache = {}
        self._basis_cache = {}
        self._enum_cache = {}
        self._gram_cache = {}
        self._reduce_cache = {}
        # creators: negative modes for everything, mode 0 for negative roots
        self._neg_roots = tuple(i for i in range(data.dim)
                                if data.grade[i] < 0)
        self._cartan_set = set(data.cartan)
        self._lam_vals = {h: lam.h_part[t]
                          for t, h in enumerate(data.cartan)}

    # -- normal order -------------------------------------------------------

    def _key(self, m, idx):
        return (-m, self._ht[idx], idx)

    def _is_creator(self, m, idx):
        if m < 0:
            return True
        return m == 0 and self.data.grade[idx] < 0

    # -- straightening ------------------------------------------------------

    def apply_gen(self, idx, m, word):
        """u_idx(m) applied to a normal-ordered word; {word: coeff}."""
        key = (idx, m, word)
        hit = self._apply_cache.get(key)
        if hit is not None:
            return hit
        out = self._apply_gen(idx, m, word)
        self._apply_cache[key] = out
        return out

    def _apply_gen(self, idx, m, word):
        data = self.data
        creator = self._is_creator(m, idx)
        if not word:
            if creator:
                return {((m, idx),): Q(1)}
            if m == 0 and idx in self._cartan_set:
                v = self._lam_vals[idx]
                return {(): v} if v else {}
            return {}
        n, j = word[0]
        if creator:
            ka, kb = self._key(m, idx), self._key(n, j)
            if ka < kb:
                return {((m, idx),) + word: Q(1)}
            if ka == kb:
                if data.parity[idx] == 0:
                    return {((m, idx),) + word: Q(1)}
                # odd square: u(m)^2 = [u,u](2m)/2 acting further in
                out = {}
                br = data.bracket.get((idx, idx), {})
                for c, coeff in br.items():
                    self._accum(out, self.apply_gen(c, 2 * m, word[1:]),
                                coeff / 2)
                return out
        # commute past the leading factor, plus the bracket term
        out = {}
        sign = -1 if (data.parity[idx] and data.parity[j]) else 1
        deeper = self.apply_gen(idx, m, word[1:])
        for w2, c2 in deeper.items():
            self._accum(out, self.apply_gen(j, n, w2), sign * c2)
        br = data.bracket.get((idx, j), {})
        for c, coeff in br.items():
            self._accum(out, self.apply_gen(c, m + n, word[1:]), coeff)
        if m + n == 0 and m != 0:
            central = m * data.form[idx][j] * self.k
            if central:
                self._accum(out, {word[1:]: Q(1)}, central)
        return out

    @staticmethod
    def _accum(target, source, scale):
        if scale == 0:
            return
        for w, c in source.items():
            v = target.get(w, 0) + scale * c
            if v == 0:
                target.pop(w, None)
            else:
                target[w] = v

    def apply_elem(self, coeffs, m, vec):
        """Element given as {basis index: coeff} at mode m, on {word: c}."""
        out = {}
        for w, cw in vec.items():
            for idx, cu in coeffs.items():
                self._accum(out, self.apply_gen(idx, m, w), cw * cu)
        return out

    # -- weights ------------------------------------------------------------

    def weight_of_word(self, word):
        delta = self.lam.delta
        vals = list(self.lam.h_part)
        for m, idx in word:
            delta += m
            for t, v in enumerate(self.data.roots[idx]):
                vals[t] += v
        return W.AffineWeight(tuple(vals), self.k, delta)

    # -- basis enumeration ----------------------------------------------------

    def _enumerator(self, depth):
        e = self._enum_cache.get(depth)
        if e is None:
            factors = []
            for m in range(-depth, 1):
                for idx in range(self.data.dim):
                    if not self._is_creator(m, idx):
                        continue
                    fer = self.data.parity[idx] == 1
                    factors.append(Factor(
                        (m, idx), -m,
                        tuple(-c for c in self._rc[idx]),
                        1 if fer else None))
            factors.sort(key=lambda f: self._key(*f.tag))
            e = Enumerator(factors)
            self._enum_cache[depth] = e
        return e

    def basis(self, mu):
        """Normal-ordered words of weight mu (exact, complete)."""
        key = (mu.h_part, mu.delta)
        hit = self._basis_cache.get(key)
        if hit is not None:
            return hit
        diff = self.lam - mu
        words = ()
        if diff.level == 0 and diff.delta.denominator == 1:
            d = int(diff.delta)
            coords = W.simple_coords(data=self.data, values=diff.h_part)
            if d >= 0 and all(c.denominator == 1 for c in coords):
                words = tuple(self._enumerator(d).words(d, coords))
        self._basis_cache[key] = words
        return words

    def dim_weight(self, mu):
        return len(self.basis(mu))

    # -- contravariant form ---------------------------------------------------

    def transpose_word_action(self, word, vec):
        """Apply t(word) = t(last)...t(first) to vec, factor by factor."""
        for m, idx in word:
            vec = self.apply_elem(self.data.transpose[idx], -m, vec)
            if not vec:
                return {}
        return vec

    def gram(self, mu):
        key = (mu.h_part, mu.delta)
        hit = self._gram_cache.get(key)
        if hit is not None:
            return hit
        words = self.basis(mu)
        rows = []
        for wi in words:
            row = []
            for wj in words:
                res = self.transpose_word_action(wi, {wj: Q(1)})
                row.append(res.get((), Q(0)))
            rows.append(row)
        self._gram_cache[key] = (words, rows)
        return words, rows

    def gram_rank(self, mu):
        words, rows = self.gram(mu)
        sparse = [{j: v for j, v in enumerate(r) if v} for r in rows]
        return len(words), sparse_rank(sparse)

    def reduce_data(self, mu):
        """Pivot words and radical projection for the simple quotient."""
        key = (mu.h_part, mu.delta)
        hit = self._reduce_cache.get(key)
        if hit is not None:
            return hit
        words, rows = self.gram(mu)
        rref, pivots = dense_rref(rows)
        index = {w: i for i, w in enumerate(words)}
        free = [c for c in range(len(words)) if c not in pivots]
        data = (words, index, tuple(pivots), free, rref)
        self._reduce_cache[key] = data
        return data

    def project_simple(self, mu, vec):
        """Project {word: coeff} at weight mu onto the pivot-word basis."""
        words, index, pivots, free, rref = self.reduce_data(mu)
        if not vec:
            return {}
        out = {}
        for r, p in enumerate(pivots):
            c = vec.get(words[p], Q(0))
            for f in free:
                vf = vec.get(words[f])
                if vf:
                    c += rref[r][f] * vf
            if c:
                out[words[p]] = c
        return out


_MODULES = {}


def get_module(data, lam):
    key = (data.name, lam)
    mod = _MODULES.get(key)
    if mod is None:
        mod = _MODULES[key] = VermaModule(data, lam)
    return mod


class ModuleBackend:
    """Uniform view of M(lambda) or L(lambda) for complex assembly."""

    def __init__(self, data, lam, simple=False):
        self.data = data
        self.lam = lam
        self.simple = simple
        self.M = get_module(data, lam)

    def basis(self, mu):
        if not self.simple:
            return self.M.basis(mu)
        words, index, pivots, free, rref = self.M.reduce_data(mu)
        return tuple(words[p] for p in pivots)

    def dim_weight(self, mu):
        return len(self.basis(mu))

    def act(self, coeffs, m, word):
        """Generator (coeff dict) at mode m on a single basis word.

        The result is weight-homogeneous, so for the simple quotient it
        can be projected along the radical at its own weight.
        """
        vec = self.M.apply_elem(coeffs, m, {word: Q(1)})
        if self.simple and vec:
            w0 = next(iter(vec))
            vec = self.M.project_simple(self.M.weight_of_word(w0), vec)
        return vec


# ---------------------------------------------------------------------------
# public operations

def verma_basis(data, lam, window):
    """PBW words of M(lambda), bucketed by weight, within the window."""
    mod = get_module(data, lam)
    out = {}
    for mu in window_weights(data, lam, window):
        words = mod.basis(mu)
        if words:
            out[mu] = words
    return out


def window_weights(data, lam, window):
    """All weights lambda - (a alpha_0 + sum b_i alpha_i) inside the window."""
    a0 = W.alpha0(data)
    simples = W.simple_roots(data)
    theta_coords = W.simple_coords(data, data.theta())
    out = []

    def rec(prefix, i):
        if i == len(simples):
            out.append(tuple(prefix))
            return
        b = 0
        while True:
            cand = prefix + [b]
            # crude height bound: |b - a*theta_i| can still shrink later,
            # so only stop once b alone exceeds every allowance
            if b > window.height + window.depth * max(theta_coords):
                break
            rec(cand, i + 1)
            b += 1

    rec([], 0)
    weights = []
    for a in range(window.depth + 1):
        for bs in out:
            mu = lam - a0.scale(a)
            for b, s in zip(bs, simples):
                mu = W.AffineWeight(
                    tuple(v - b * sv for v, sv in zip(mu.h_part, s)),
                    mu.level, mu.delta)
            diff = lam - mu
            if W.finite_height(data, diff.h_part) <= window.height:
                weights.append(mu)
    return weights


def act(data, lam, u, m, vec, window=None):
    """Action of u(m) on {word: coeff} in M(lambda); windowed if given."""
    mod = get_module(data, lam)
    if isinstance(u, int):
        u = {u: Q(1)}
    out = {}
    for w, c in vec.items():
        mod._accum(out, mod.apply_elem(u, m, {w: Q(1)}), c)
    if window is not None:
        for w in out:
            mu = mod.weight_of_word(w)
            diff = lam - mu
            if diff.delta > window.depth or \
                    W.finite_height(data, diff.h_part) > window.height:
                raise WindowOverflowError(
                    "result weight outside window: %s" % (mu,))
    return out


def gram_rank(data, lam, mu):
    """(dim M(lambda)^mu, dim L(lambda)^mu) via the contravariant form."""
    mod = get_module(data, lam)
    return mod.gram_rank(mu)


def char_module(data, lam, which, window, dual=False):
    """Weight multiplicities of M(lambda) or L(lambda) on the window.

    The contragredient dual has the same character, so `dual` only records
    intent; the returned dictionary is identical either way.
    """
    assert which in ("verma", "simple")
    mod = get_module(data, lam)
    out = {}
    for mu in window_weights(data, lam, window):
        if which == "verma":
            d = mod.dim_weight(mu)
        else:
            d = mod.gram_rank(mu)[1]
        if d:
            out[mu] = d
    return out


# ---------------------------------------------------------------------------
# the rank-one toy complex: homology of (f + 1) on sl2-modules

def sl2_f_homology(a, which="verma", depth=8):
    """(dim H_0, dim H_1) of f+1 on a finite sl2 highest-weight module.

    which: 'verma', 'simple', or 'dual_verma'; a is the highest weight
    <a, alpha^vee>.  Windowed at three consecutive depths; raises
    NotStabilizedError if the counts keep moving.
    """
    a = Q(a)
    integral = a.denominator == 1 and a >= 0

    def dims(N):
        if which == "simple" and integral:
            top = int(a)
            cols = list(range(0, min(N, top) + 1))
            rows = set()
            mat = []
            for m in cols:
                col = {m: Q(1)}
                if m + 1 <= top:
                    col[m + 1] = Q(1)
                rows.update(col)
                mat.append(col)
            nrows = len(rows)
        elif which in ("verma", "simple"):
            cols = list(range(N + 1))
            mat = [{m: Q(1), m + 1: Q(1)} for m in cols]
            nrows = N + 2
        elif which == "dual_verma":
            cols = list(range(N + 1))
            mat = []
            for m in cols:
                col = {m: Q(1)}
                c = (m + 1) * (a - m)
                if c != 0:
                    col[m + 1] = c
                mat.append(col)
            nrows = N + 2
        else:
            raise ValueError("which must be verma, simple or dual_verma")
        # columns are the images of the degree-1 basis; exact ranks
        rank = sparse_rank([{j: col.get(i, 0) for j, col in enumerate(mat)
                             if col.get(i)} for i in range(nrows)])
        h0 = nrows - rank
        h1 = len(cols) - rank
        return (h0, h1)

    got = [dims(N) for N in (depth, depth + 1, depth + 2)]
    # accept when the two enlargements agree
    if got[1] == got[2]:
        return got[2]
    raise NotStabilizedError(
        "f-homology kept changing with the window: %s" % (got,))


# ---------------------------------------------------------------------------
# zero-mode complex along the alpha_0 chain

def zero_mode_cohomology(data, lam, which="verma", chain_length=6):
    """(dim H^0, dim H^-1) of the reduced complex at the top t-weight.

    The relevant weight spaces V^{lambda - m alpha_0} are at most
    one-dimensional (spanned by u_theta(-1)^m), so the complex collapses
    to a bidiagonal map s_m -> chain_m + chain_{m+1}; ranks are exact and
    windowing is only in the chain direction.
    """
    assert which in ("verma", "simple")
    mod = get_module(data, lam)
    a0 = W.alpha0(data)

    def chain_dim(m):
        mu = lam - a0.scale(m)
        if which == "verma":
            d = mod.dim_weight(mu)
        else:
            d = mod.gram_rank(mu)[1]
        assert d <= 1, "alpha_0 chain weight space unexpectedly large"
        return d

    top = chain_length + 3
    alive = [chain_dim(m) for m in range(top + 2)]
    # the chain must be an initial segment of ones
    first_zero = len(alive)
    for m, d in enumerate(alive):
        if d == 0:
            first_zero = m
            break
    assert all(d == 0 for d in alive[first_zero:]), \
        "alpha_0 chain is not an initial segment"

    def dims(L):
        cols = [m for m in range(L + 1) if alive[m]]
        rows = [m for m in range(L + 2) if alive[m]]
        mat = []
        for m in cols:
            col = {m: Q(1)}
            if m + 1 < len(alive) and alive[m + 1] and m + 1 <= L + 1:
                col[m + 1] = Q(1)
            mat.append(col)
        rank = sparse_rank([{j: col.get(i, 0) for j, col in enumerate(mat)
                             if col.get(i)} for i in rows])
        return (len(rows) - rank, len(cols) - rank)

    got = [dims(L) for L in (chain_length, chain_length + 1,
                             chain_length + 2)]
    if got[1] == got[2]:
        return got[2]
    raise NotStabilizedError(
        "zero-mode cohomology kept changing with the chain window: %s"
        % (got,))
