"""Reduction complex over a truncation window.

The chain space is the tensor product of a highest-weight module, the
neutral pair vacuum module, and the charge-ghost vacuum module.  States are
triples of normal-ordered words, graded by total affine weight and by ghost
degree (#annihilator-type minus #field-type ghost modes).  The odd
differential acts state-by-state through the straightening routines of the
three factors, so nilpotency can be checked exactly without ever forming a
matrix, and weight-block matrices are assembled only where ranks are needed.

The differential splits into a weight-preserving part and a part shifting
the weight by alpha_0 = delta - theta.  Restricting to a fixed t-weight
(h^f values plus the x + D eigenvalue) therefore yields, inside the window,
a finite complex supported on a string of weights eta, eta - alpha_0, ...;
truncating that string after `chain` steps gives a subcomplex because the
differential never moves down the string.  Cohomology dimensions on the
truncated string are reported together with a stabilization flag obtained
by enlarging the string twice and comparing.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import fock as F
from . import weights as W
from .enumeration import Enumerator, Factor
from .errors import NilpotencyError, WindowOverflowError
from .linalg import SparseRationalMatrix, solve_dense, sparse_rank
from .verma import ModuleBackend, TruncationWindow

Q = Fraction


@dataclass(frozen=True)
class ChainState:
    """One basis state of the tensor-product complex.

    verma:   ((mode, basis-index), ...) module word
    neutral: ((mode, half-root position), ...) neutral-pair word
    charged: ((kind, mode, positive-root position), ...) ghost word
    weight:  total affine weight of the state
    degree:  ghost degree (charge of the charged word)
    """
    verma: tuple
    neutral: tuple
    charged: tuple
    weight: W.AffineWeight
    degree: int


@dataclass(frozen=True)
class DifferentialBlock:
    """Matrix of the differential out of one (weight, degree) block.

    Rows are split by target weight: `rows_same` lists the states at the
    source weight (weight-preserving part), `rows_shift` the states at
    source weight + alpha_0 (shifting part).  `matrix` stacks the two row
    groups in that order.
    """
    cols: tuple
    rows_same: tuple
    rows_shift: tuple
    matrix: SparseRationalMatrix

    def entry(self, i, j):
        return self.matrix.rows[i].get(j, Q(0))


@dataclass(frozen=True)
class CurrentBlock:
    """Matrix of a dressed current between two weight blocks."""
    cols: tuple
    rows: tuple
    matrix: SparseRationalMatrix


@dataclass(frozen=True)
class NilpotencyReport:
    algebra: str
    which: str
    weights_checked: int
    states_checked: int
    max_residual: Fraction
    boundary_skipped: tuple
    ok: bool


def _add(target, key, val):
    if not val:
        return
    new = target.get(key, Q(0)) + val
    if new:
        target[key] = new
    else:
        target.pop(key, None)


def _merge(target, source, scale):
    if not scale:
        return
    for k, v in source.items():
        _add(target, k, scale * v)


class ReductionComplex:
    """C(V) for V = M(lambda) or its simple quotient, one algebra."""

    def __init__(self, data, lam, which="verma"):
        if which not in ("verma", "simple"):
            raise ValueError("which must be 'verma' or 'simple'")
        self.data = data
        self.lam = lam
        self.which = which
        self.backend = ModuleBackend(data, lam, simple=(which == "simple"))
        self.M = self.backend.M
        self.ne = F.neutral_space(data)
        self.ch = F.charged_space(data)
        self.pos = data.positive_roots
        self.nhalf = len(data.half_plus)
        self.theta_pos = self.nhalf          # position of theta in self.pos
        self.u_par = data.parity
        self.ne_par = self.ne.parity
        self.gh_par = self.ch.parity
        self._rc = {i: W.simple_coords(data, data.roots[i])
                    for i in range(data.dim)}
        self._pos_c = [self._rc[i] for i in self.pos]
        # chi-bar evaluated on the top root vector (the only grade-1 root)
        self.chi_theta = data.chi_bar(data.theta_plus)
        # ghost cubic term: ordered pairs of half-root positions summing to
        # theta, with coefficient -1/2 ([u_a, u_b] | u_{-theta})
        self.cubic = []
        theta = data.theta()
        for a in range(self.nhalf):
            ia = self.pos[a]
            for b in range(self.nhalf):
                ib = self.pos[b]
                s = tuple(x + y for x, y in
                          zip(data.roots[ia], data.roots[ib]))
                if s != theta:
                    continue
                br = data.bracket.get((ia, ib), {})
                coeff = sum(c * data.form[j][data.theta_minus]
                            for j, c in br.items())
                if coeff:
                    self.cubic.append((a, b, Q(-coeff, 2)))
        # index of u_{-gamma} for each positive-root position gamma
        self.neg_of = []
        for ig in self.pos:
            target = tuple(-v for v in data.roots[ig])
            js = [j for j in range(data.dim)
                  if data.grade[j] < 0 and data.roots[j] == target]
            assert len(js) == 1
            self.neg_of.append(js[0])
        self._enum_cache = {}
        self._basis_cache = {}
        self._pivot_cache = {}
        self._d_cache = {}

    # -- bases ----------------------------------------------------------------

    def _joint(self, depth):
        """Enumerator over module, neutral and ghost creators jointly."""
        e = self._enum_cache.get(depth)
        if e is not None:
            return e
        data = self.data
        vf = []
        for m in range(-depth, 1):
            for idx in range(data.dim):
                if not self.M._is_creator(m, idx):
                    continue
                vf.append(Factor(("v", m, idx), -m,
                                 tuple(-c for c in self._rc[idx]),
                                 1 if data.parity[idx] else None))
        vf.sort(key=lambda f: self.M._key(f.tag[1], f.tag[2]))
        nf = []
        for n in range(-depth, 0):
            for a in range(self.nhalf):
                nf.append(Factor(("n", n, a), -n,
                                 tuple(-c for c in self._pos_c[a]),
                                 1 if self.ne_par[a] else None))
        nf.sort(key=lambda f: F.NeutralSpace._key(f.tag[1], f.tag[2]))
        cf = []
        for a in range(len(self.pos)):
            cap = 1 if self.gh_par[a] else None
            for n in range(-depth, 0):
                cf.append(Factor(("g", n, a), -n,
                                 tuple(-c for c in self._pos_c[a]), cap))
            for n in range(-depth, 1):
                cf.append(Factor(("c", n, a), -n, self._pos_c[a], cap))
        cf.sort(key=lambda f: F.ChargedSpace._key(
            F.GH if f.tag[0] == "g" else F.CO, f.tag[1], f.tag[2]))
        e = Enumerator(vf + nf + cf)
        self._enum_cache[depth] = e
        return e

    def _vkeep(self, vw):
        """Module words kept in the simple quotient (pivot words)."""
        mu = self.M.weight_of_word(vw)
        key = (mu.h_part, mu.delta)
        keep = self._pivot_cache.get(key)
        if keep is None:
            keep = self._pivot_cache[key] = frozenset(self.backend.basis(mu))
        return vw in keep

    def basis_raw(self, eta):
        """All state triples of total weight eta, as raw word tuples."""
        key = (eta.h_part, eta.delta)
        hit = self._basis_cache.get(key)
        if hit is not None:
            return hit
        diff = self.lam - eta
        states = ()
        if diff.level == 0 and diff.delta.denominator == 1:
            d = int(diff.delta)
            coords = W.simple_coords(self.data, diff.h_part)
            if d >= 0 and all(c.denominator == 1 for c in coords):
                out = []
                for w in self._joint(d).words(d, coords):
                    vw, nw, cw = [], [], []
                    for t0, m, x in w:
                        if t0 == "v":
                            vw.append((m, x))
                        elif t0 == "n":
                            nw.append((m, x))
                        elif t0 == "g":
                            cw.append((F.GH, m, x))
                        else:
                            cw.append((F.CO, m, x))
                    vw = tuple(vw)
                    if self.which == "simple" and vw and not self._vkeep(vw):
                        continue
                    out.append((vw, tuple(nw), tuple(cw)))
                states = tuple(out)
        self._basis_cache[key] = states
        return states

    def state_weight(self, st):
        vw, nw, cw = st
        return (self.M.weight_of_word(vw) + self.ne.word_weight(nw)
                + self.ch.word_weight(cw))

    def chain_state(self, st):
        return ChainState(st[0], st[1], st[2], self.state_weight(st),
                          F.ChargedSpace.charge(st[2]))

    # -- factor operators with crossing signs ----------------------------------

    def _pv(self, vw):
        return sum(self.u_par[i] for _, i in vw) & 1

    def _pn(self, nw):
        return sum(self.ne_par[a] for _, a in nw) & 1

    def _op_u(self, idx, m, vec):
        out = {}
        for (vw, nw, cw), c in vec.items():
            for vw2, c2 in self.backend.act({idx: Q(1)}, m, vw).items():
                _add(out, (vw2, nw, cw), c * c2)
        return out

    def _op_ne(self, a, n, vec):
        out = {}
        for (vw, nw, cw), c in vec.items():
            if self.ne_par[a] and self._pv(vw):
                c = -c
            for nw2, c2 in self.ne.apply(a, n, nw).items():
                _add(out, (vw, nw2, cw), c * c2)
        return out

    def _op_ch(self, kind, a, n, vec):
        out = {}
        for (vw, nw, cw), c in vec.items():
            if self.gh_par[a] and ((self._pv(vw) + self._pn(nw)) & 1):
                c = -c
            for cw2, c2 in self.ch.apply(kind, a, n, cw).items():
                _add(out, (vw, nw, cw2), c * c2)
        return out

    # -- the differential -------------------------------------------------------

    def d_state(self, st, part="full"):
        """Differential of one state; `part` in {full, standard, chi}."""
        if part == "full":
            out = dict(self.d_state(st, "standard"))
            _merge(out, self.d_state(st, "chi"), Q(1))
            return out
        key = (st, part)
        hit = self._d_cache.get(key)
        if hit is None:
            hit = self._d_cache[key] = self._d_state(st, part)
        return hit

    def _d_state(self, st, part):
        vw, nw, cw = st
        std = part == "standard"
        dv = sum(-m for m, _ in vw)
        dne = max((-n for n, _ in nw), default=0)
        gh_modes = {}
        co_modes = {}
        for kind, n, a in cw:
            which = gh_modes if kind == F.GH else co_modes
            which.setdefault(a, set()).add(-n)
        base = {st: Q(1)}
        out = {}
        for a, i in enumerate(self.pos):
            sgn = Q(-1) if self.u_par[i] else Q(1)
            if std:
                # current part: u_alpha(-n) against the dual ghost at mode n;
                # n <= 0 creates the ghost, n >= 1 must contract an existing
                # field ghost of the same root
                for n in sorted(set(range(-dv, 1)) | gh_modes.get(a, set())):
                    t = self._op_ch(F.CO, a, n, base)
                    if t:
                        _merge(out, self._op_u(i, -n, t), sgn)
            if a < self.nhalf:
                ns = set()
                if std:
                    ns |= gh_modes.get(a, set())
                else:
                    ns |= set(range(1 - dne, 1))
                for n in sorted(ns):
                    t = self._op_ch(F.CO, a, n, base)
                    if t:
                        _merge(out, self._op_ne(a, -n, t), sgn)
        if not std and self.chi_theta:
            _merge(out, self._op_ch(F.CO, self.theta_pos, 1, base),
                   self.chi_theta)
        if std and self.cubic:
            thm = co_modes.get(self.theta_pos, set())
            mm = max(thm, default=-1)
            for a, b, coeff in self.cubic:
                ka = max(gh_modes.get(a, ()), default=0)
                kb = max(gh_modes.get(b, ()), default=0)
                for k in range(-kb - mm, ka + 1):
                    if k > 0 and k not in gh_modes.get(a, ()):
                        continue
                    for l in range(-ka - mm, kb + 1):
                        if l > 0 and l not in gh_modes.get(b, ()):
                            continue
                        m = -k - l
                        if m > -1 and m not in thm:
                            continue
                        t = self._op_ch(F.GH, self.theta_pos, m, base)
                        if not t:
                            continue
                        t = self._op_ch(F.CO, b, l, t)
                        if not t:
                            continue
                        _merge(out, self._op_ch(F.CO, a, k, t), coeff)
        return out


_COMPLEXES = {}


def get_complex(data, lam, which="verma"):
    key = (data.name, lam, which)
    cx = _COMPLEXES.get(key)
    if cx is None:
        cx = _COMPLEXES[key] = ReductionComplex(data, lam, which)
    return cx


def _check_window(data, lam, eta, window):
    if window is None:
        return
    diff = lam - eta
    if diff.level != 0:
        raise WindowOverflowError("weight is not below the highest weight")
    if diff.delta < 0 or diff.delta > window.depth:
        raise WindowOverflowError(
            "delta-depth %s outside window depth %d"
            % (diff.delta, window.depth))
    if W.finite_height(data, diff.h_part) > window.height:
        raise WindowOverflowError(
            "finite height exceeds window height %d" % window.height)


# ---------------------------------------------------------------------------
# public operations

def complex_basis(data, lam, which, eta, degree=None, window=None):
    """Chain states of total weight eta (optionally one ghost degree)."""
    _check_window(data, lam, eta, window)
    cx = get_complex(data, lam, which)
    out = [cx.chain_state(st) for st in cx.basis_raw(eta)]
    if degree is not None:
        out = [s for s in out if s.degree == degree]
    return out


def differential(data, lam, which, eta, degree, window=None):
    """Differential out of the (eta, degree) block as an exact matrix."""
    _check_window(data, lam, eta, window)
    cx = get_complex(data, lam, which)
    cols = [st for st in cx.basis_raw(eta)
            if F.ChargedSpace.charge(st[2]) == degree]
    up = eta + W.alpha0(data)
    rows_same = [st for st in cx.basis_raw(eta)
                 if F.ChargedSpace.charge(st[2]) == degree + 1]
    rows_shift = [st for st in cx.basis_raw(up)
                  if F.ChargedSpace.charge(st[2]) == degree + 1]
    index = {s: r for r, s in enumerate(rows_same)}
    for s in rows_shift:
        index[s] = len(index)
    mat = SparseRationalMatrix(len(index), len(cols))
    for c, st in enumerate(cols):
        for t, v in cx.d_state(st).items():
            r = index.get(t)
            assert r is not None, "image state outside the two target blocks"
            mat.add_entry(r, c, v)
    return DifferentialBlock(
        cols=tuple(cx.chain_state(s) for s in cols),
        rows_same=tuple(cx.chain_state(s) for s in rows_same),
        rows_shift=tuple(cx.chain_state(s) for s in rows_shift),
        matrix=mat)


def _window_etas(data, lam, window):
    """Weights lam - a*alpha_0 - sum b_i alpha_i inside the window."""
    simples = W.simple_roots(data)
    theta_c = W.simple_coords(data, data.theta())
    a0 = W.alpha0(data)
    out = []
    for a in range(window.depth + 1):
        caps = [window.height + int(a * tc) for tc in theta_c]
        grid = [()]
        for cap in caps:
            grid = [g + (v,) for g in grid for v in range(cap + 1)]
        for bs in grid:
            ht = sum(abs(b - a * tc) for b, tc in zip(bs, theta_c))
            if ht > window.height:
                continue
            vals = [Q(0)] * len(lam.h_part)
            for b, s in zip(bs, simples):
                for t, v in enumerate(s):
                    vals[t] += b * v
            drop = W.AffineWeight(tuple(vals), Q(0), Q(0)) + a0.scale(a)
            out.append(lam - drop)
    return out


def verify_nilpotency(data, lam, which="verma", window=None):
    """Check d^2 = 0 and the split identities state-by-state, exactly.

    Because the differential is applied through straightening (never through
    a truncated matrix), each identity is tested in the full module: there
    are no boundary weights to skip, and any nonzero residual is fatal.
    """
    if window is None:
        window = TruncationWindow(2, 4)
    cx = get_complex(data, lam, which)
    weights = 0
    states = 0

    def dd(st, p1, p2):
        acc = {}
        for t, c in cx.d_state(st, p1).items():
            _merge(acc, cx.d_state(t, p2), c)
        return acc

    for eta in _window_etas(data, lam, window):
        sts = cx.basis_raw(eta)
        if not sts:
            continue
        weights += 1
        for st in sts:
            states += 1
            full = dd(st, "full", "full")
            chi2 = dd(st, "chi", "chi")
            std2 = dd(st, "standard", "standard")
            mixed = dd(st, "chi", "standard")
            _merge(mixed, dd(st, "standard", "chi"), Q(1))
            for name, res in (("d^2", full), ("(d^chi)^2", chi2),
                              ("(d^st)^2", std2), ("{d^chi,d^st}", mixed)):
                if res:
                    bad = max(abs(v) for v in res.values())
                    raise NilpotencyError(
                        "%s != 0 on %s (max residual %s)" % (name, st, bad))
    return NilpotencyReport(
        algebra=data.name, which=which, weights_checked=weights,
        states_checked=states, max_residual=Q(0), boundary_skipped=(),
        ok=True)


# -- per-t-weight cohomology --------------------------------------------------

def _solve_b(data, lam, xi):
    """Simple-root coordinates of the top weight drop for a t-weight.

    `xi` is either an absolute TWeight or a rational x+D offset below the
    highest weight (h^f values unchanged).  Returns None when the t-weight
    is not reachable by a nonnegative integral drop.
    """
    top = W.project_xi(data, lam)
    if isinstance(xi, W.TWeight):
        hf_drop = tuple(a - b for a, b in zip(top.hf_part, xi.hf_part))
        dw_drop = top.dW - xi.dW
    else:
        hf_drop = (Q(0),) * len(data.hf)
        dw_drop = Q(xi)
    simples = W.simple_roots(data)
    theta = data.theta()
    rows = []
    rhs = []
    for t in range(len(data.hf)):
        rows.append([s[t] for s in simples])
        rhs.append(hf_drop[t])
    rows.append([W.finite_pair(data, s, theta) / 2 for s in simples])
    rhs.append(dw_drop)
    try:
        b = solve_dense(rows, rhs)
    except ValueError:
        return None
    if any(x.denominator != 1 or x < 0 for x in b):
        return None
    return tuple(b)


def _string_eta(data, lam, b, m):
    simples = W.simple_roots(data)
    vals = [Q(0)] * len(lam.h_part)
    for bi, s in enumerate(b):
        for t, v in enumerate(simples[bi]):
            vals[t] += s * v
    drop = W.AffineWeight(tuple(vals), Q(0), Q(0))
    return lam - drop - W.alpha0(data).scale(m)


def _string_height(data, b, m):
    theta_c = W.simple_coords(data, data.theta())
    return sum(abs(bi - m * tc) for bi, tc in zip(b, theta_c))


def chain_window(data, lam, xi, chain):
    """Smallest window holding the alpha_0-string for this t-weight."""
    b = _solve_b(data, lam, xi)
    depth = chain + 2
    if b is None:
        return TruncationWindow(depth, 0, chain)
    height = max(_string_height(data, b, m) for m in range(depth + 1))
    return TruncationWindow(depth, int(height), chain)


def _string_dims(cx, b, length):
    by_deg = {}
    for m in range(length + 1):
        eta = _string_eta(cx.data, cx.lam, b, m)
        for st in cx.basis_raw(eta):
            by_deg.setdefault(F.ChargedSpace.charge(st[2]), []).append(st)
    index = {i: {st: r for r, st in enumerate(sts)}
             for i, sts in by_deg.items()}
    ranks = {}
    for i, cols in by_deg.items():
        rows = index.get(i + 1, {})
        mrows = [dict() for _ in range(len(rows))]
        for c, st in enumerate(cols):
            for t, v in cx.d_state(st).items():
                r = rows.get(t)
                assert r is not None, "chain truncation is not a subcomplex"
                _add(mrows[r], c, v)
        ranks[i] = sparse_rank(mrows) if mrows else 0
    return {i: len(cols) - ranks.get(i, 0) - ranks.get(i - 1, 0)
            for i, cols in by_deg.items()}


def cohomology_dims(data, lam, which, xi, window):
    """Windowed cohomology dimensions at one t-weight.

    Returns {degree: (dimension, stabilized)} where the dimension is taken
    on the longest of three nested chain truncations and the flag records
    agreement between the two enlargements.  An unreachable t-weight gives
    an empty map.
    """
    b = _solve_b(data, lam, xi)
    if b is None:
        return {}
    chain = window.chain
    if chain < 1:
        raise ValueError("window.chain must be at least 1")
    if window.depth < chain + 2:
        raise WindowOverflowError(
            "window depth %d cannot hold chain %d plus enlargements"
            % (window.depth, chain))
    need = max(_string_height(data, b, m) for m in range(chain + 3))
    if window.height < need:
        raise WindowOverflowError(
            "window height %d below required %s" % (window.height, need))
    cx = get_complex(data, lam, which)
    got = [_string_dims(cx, b, length)
           for length in (chain, chain + 1, chain + 2)]
    dw_offset = sum(bi * W.finite_pair(data, s, data.theta()) / 2
                    for bi, s in zip(b, W.simple_roots(data)))
    out = {}
    for i in sorted(got[2]):
        dim = got[2][i]
        stab = got[1].get(i, 0) == dim
        if stab and Q(abs(i), 2) > dw_offset:
            assert dim == 0, "degree bound violated at ghost degree %d" % i
        out[i] = (dim, stab)
    return out


# -- dressed currents ---------------------------------------------------------

def j_current(data, lam, which, v, n, eta, window=None):
    """Matrix of the dressed current of v at mode n on one weight block.

    v must lie in the nonpositive part of the gradation; the current is
    v(n) plus the ghost bilinear sum((-1)^p(gamma) ([v,u_beta]|u_{-gamma})
    :psi_gamma psi^beta:(n)) with annihilating modes ordered to the right.
    """
    if isinstance(v, str):
        v = data.labels.index(v)
    if data.grade[v] > 0:
        raise ValueError("current requires an element of nonpositive grade")
    _check_window(data, lam, eta, window)
    cx = get_complex(data, lam, which)
    src = cx.basis_raw(eta)
    tgt_eta = eta + W.AffineWeight(data.roots[v], Q(0), Q(n))
    tgt = cx.basis_raw(tgt_eta)
    tidx = {st: r for r, st in enumerate(tgt)}
    pairs = []
    for g in range(len(cx.pos)):
        sgn = Q(-1) if data.parity[cx.pos[g]] else Q(1)
        for bpos in range(len(cx.pos)):
            br = data.bracket.get((v, cx.pos[bpos]), {})
            coeff = sum(c * data.form[j][cx.neg_of[g]]
                        for j, c in br.items())
            if coeff:
                pairs.append((g, bpos, sgn * coeff))
    mat = SparseRationalMatrix(len(tgt), len(src))
    for c, st in enumerate(src):
        base = {st: Q(1)}
        acc = cx._op_u(v, n, base)
        gh_modes = {}
        co_modes = {}
        for kind, mode, a in st[2]:
            which_d = gh_modes if kind == F.GH else co_modes
            which_d.setdefault(a, set()).add(-mode)
        for g, bpos, val in pairs:
            gm = gh_modes.get(bpos, set())
            cm = co_modes.get(g, set())
            js = set()
            if n <= -1:
                js |= set(range(n, 0))
            js |= {n - l for l in gm if n - l <= -1}
            js |= {j for j in cm if n - j <= 0 or (n - j) in gm}
            for j in sorted(js):
                l = n - j
                if l >= 1:
                    t = cx._op_ch(F.CO, bpos, l, base)
                    if t:
                        _merge(acc, cx._op_ch(F.GH, g, j, t), val)
                else:
                    t = cx._op_ch(F.GH, g, j, base)
                    if t:
                        swap = (Q(-1) if cx.gh_par[g] and cx.gh_par[bpos]
                                else Q(1))
                        _merge(acc, cx._op_ch(F.CO, bpos, l, t), val * swap)
        for t, cv in acc.items():
            r = tidx.get(t)
            assert r is not None, "current image outside the target block"
            mat.add_entry(r, c, cv)
    return CurrentBlock(cols=tuple(cx.chain_state(s) for s in src),
                        rows=tuple(cx.chain_state(s) for s in tgt),
                        matrix=mat)
