"""Finite-dimensional basic Lie superalgebras with a short Z/2-graded root
system, realized by exact rational matrices.

Each supported algebra g carries a grading g = g(-1) + g(-1/2) + g(0) +
g(1/2) + g(1) by the adjoint action of a semisimple element x, with the
extreme pieces one-dimensional: g(1) = C u_theta and g(-1) = C f.  The
invariant form is normalized so that (theta|theta) = 2, and every positive
root vector u_alpha is paired to a partner u_{-alpha} with
(u_alpha|u_{-alpha}) = 1.

All structure constants are derived at build time from the matrix
realization; nothing is tabulated by hand.  Realization parameters live in
data/algebras.json so they can be versioned independently of the code.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import gcd

from .errors import (NotInCentralizerError, SingularGramError,
                     UnsupportedAlgebraError)
from .linalg import dense_rref, invert_dense, kernel_basis

Q = Fraction

SUPPORTED = ("sl2", "sl3", "spo21", "sl21")


# ---------------------------------------------------------------------------
# matrix helpers (tuples of tuples of Fraction)

def _zero(n):
    return tuple(tuple(Q(0) for _ in range(n)) for _ in range(n))


def _eij(n, i, j, c=1):
    return tuple(tuple(Q(c) if (r, s) == (i, j) else Q(0) for s in range(n))
                 for r in range(n))


def _madd(a, b, ca=1, cb=1):
    return tuple(tuple(ca * x + cb * y for x, y in zip(ra, rb))
                 for ra, rb in zip(a, b))


def _mmul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][l] * b[l][j] for l in range(n))
                       for j in range(n)) for i in range(n))


def _mscale(a, c):
    return tuple(tuple(c * x for x in row) for row in a)


def _supertrace(a, sig):
    return sum((-1 if sig[i] else 1) * a[i][i] for i in range(len(a)))


def _mat_parity(a, sig):
    """0/1 parity of a homogeneous matrix, or None if mixed/zero."""
    seen = set()
    for i, row in enumerate(a):
        for j, v in enumerate(row):
            if v != 0:
                seen.add((sig[i] + sig[j]) % 2)
    if len(seen) == 1:
        return seen.pop()
    return None


def _super_bracket(a, b, pa, pb):
    ab = _mmul(a, b)
    ba = _mmul(b, a)
    sign = -1 if (pa and pb) else 1
    return _madd(ab, ba, 1, -sign)


# ---------------------------------------------------------------------------
# the algebra container

@dataclass(frozen=True)
class SuperalgebraData:
    """Immutable structure-constant package for one supported algebra.

    Fields referring to basis elements use integer indices into `labels`.
    `bracket[(i, j)]` maps k -> coefficient of basis[k] in [u_i, u_j]
    (including the supersymmetry convention [u,v] = uv - (-1)^{p p'} vu).
    `roots[i]` gives the root of u_i as a tuple of values on the Cartan
    basis (`cartan` lists those indices, h^f first, then x).
    """

    name: str
    labels: tuple
    parity: tuple
    grade: tuple
    bracket: dict
    form: tuple
    transpose: dict
    roots: tuple
    cartan: tuple
    hf: tuple
    x_index: int
    theta_plus: int
    theta_minus: int
    half_plus: tuple
    half_minus: tuple
    triple_e: dict
    triple_x: dict
    triple_f: dict

    # -- elementary queries -------------------------------------------------

    @property
    def dim(self):
        return len(self.labels)

    @property
    def positive_roots(self):
        """Indices of the grade > 0 root vectors (Delta_{>0} order)."""
        return self.half_plus + (self.theta_plus,)

    def bracket_vec(self, u, v):
        """Bracket of two coefficient dicts {index: coeff}."""
        out = {}
        for i, ci in u.items():
            if ci == 0:
                continue
            for j, cj in v.items():
                if cj == 0:
                    continue
                for k, c in self.bracket.get((i, j), {}).items():
                    val = out.get(k, 0) + ci * cj * c
                    if val == 0:
                        out.pop(k, None)
                    else:
                        out[k] = val
        return out

    def form_vec(self, u, v):
        return sum(ci * cj * self.form[i][j]
                   for i, ci in u.items() for j, cj in v.items())

    def chi_bar(self, u):
        """chi-bar(u) = (f|u); accepts an index or a coefficient dict."""
        if isinstance(u, int):
            u = {u: Q(1)}
        return self.form_vec(self.triple_f, u)

    def parity_of_vec(self, u):
        ps = {self.parity[i] for i, c in u.items() if c != 0}
        if len(ps) != 1:
            raise ValueError("non-homogeneous element")
        return ps.pop()

    def centralizes_f(self, u):
        if isinstance(u, int):
            u = {u: Q(1)}
        return not self.bracket_vec(u, self.triple_f)

    def theta(self):
        """theta as a tuple of values on the Cartan basis."""
        return self.roots[self.theta_plus]


@dataclass(frozen=True)
class NeutralPairing:
    """Restriction of chi-bar([.,.]) to the grade-1/2 root vectors.

    `gram[a][b]` = chi-bar([u_a, u_b]) over `basis_half` (indices into the
    parent algebra's basis); `dual_basis[b]` holds the coefficients of the
    dual vector u^b over the same index set.
    """

    basis_half: tuple
    gram: tuple
    dual_basis: tuple


# ---------------------------------------------------------------------------
# realization builders

def _load_registry():
    with resources.files("miniw.data").joinpath("algebras.json").open() as fh:
        return json.load(fh)


def _q(s):
    return Q(s) if not isinstance(s, list) else Q(s[0], s[1])


def _coords_solver(basis_mats):
    """Return a function expressing a matrix in span(basis_mats), exactly."""
    n = len(basis_mats[0])
    cols = [[m[i][j] for m in basis_mats] for i in range(n) for j in range(n)]
    # cols is (n^2) x dim; find dim independent rows (positions) and invert
    rref, pivots = dense_rref(cols)
    dim = len(basis_mats)
    pivot_rows = []
    used = set()
    for r in range(len(cols)):
        # greedily collect rows that keep the collection full-rank
        trial = pivot_rows + [cols[r]]
        _, p = dense_rref(trial)
        if len(p) > len(pivot_rows):
            pivot_rows.append(cols[r])
            used.add(r)
            if len(pivot_rows) == dim:
                break
    if len(pivot_rows) < dim:
        raise ValueError("basis matrices are dependent")
    positions = sorted(used)
    inv = invert_dense(pivot_rows)

    def express(mat):
        flat = [mat[i][j] for i in range(n) for j in range(n)]
        rhs = [flat[p] for p in positions]
        coeffs = [sum(inv[i][j] * rhs[j] for j in range(dim))
                  for i in range(dim)]
        # verify the matrix really lies in the span
        for p in range(n * n):
            if sum(coeffs[k] * cols[p][k] for k in range(dim)) != flat[p]:
                raise ValueError("matrix outside spanned subalgebra")
        return coeffs

    return express


def _build_sl(name, n_even, n_odd):
    """sl(m|n) (or sl(m) when n = 0) with theta = eps_1 - eps_m."""
    n = n_even + n_odd
    sig = tuple([0] * n_even + [1] * n_odd)
    c_form = Q(1)  # (u|v) = str(uv) already gives (theta|theta) = 2 here

    x_mat = _madd(_eij(n, 0, 0, Q(1, 2)), _eij(n, n_even - 1, n_even - 1),
                  1, Q(-1, 2))

    def grade_of(i, j):
        return x_mat[i][i] - x_mat[j][j]

    # root vectors, graded
    pos_half, neg_half, pos_one, neg_one = [], [], [], []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            g = grade_of(i, j)
            sigma = c_form * _supertrace(_mmul(_eij(n, i, j), _eij(n, j, i)),
                                         sig)
            entry = (i, j, sigma)
            if g == 1:
                pos_one.append(entry)
            elif g == Q(1, 2):
                pos_half.append(entry)
            elif g == Q(-1, 2):
                neg_half.append(entry)
            elif g == -1:
                neg_one.append(entry)
            elif g != 0:
                raise ValueError("unexpected grade in realization")
    assert len(pos_one) == len(neg_one) == 1

    # Cartan: h^f = {diag: theta(h) = 0, str(h) = 0}, then x
    # diag entries as unknowns; theta(h) = h_0 - h_{m-1}
    rows = [[Q(1) if k == 0 else (Q(-1) if k == n_even - 1 else Q(0))
             for k in range(n)],
            [Q(-1) if sig[k] else Q(1) for k in range(n)]]
    hf_vecs = kernel_basis(rows)
    hf_mats = []
    for vec in hf_vecs:
        scale = 1
        for v in vec:
            scale = scale * v.denominator // gcd(scale, v.denominator)
        hf_mats.append(tuple(tuple(vec[i] * scale if i == j else Q(0)
                                   for j in range(n)) for i in range(n)))

    def mk(i, j, c=1):
        return _eij(n, i, j, c)

    basis_mats, labels, grades = [], [], []
    # order: f, g(-1/2), h^f, x, g(+1/2), u_theta
    i, j, sg = neg_one[0]
    # partner scaling lives on the negative side so (u_a|u_{-a}) = 1
    ip, jp, sp = pos_one[0]
    basis_mats.append(mk(jp, ip, 1 / sp))
    labels.append("f")
    grades.append(Q(-1))
    for (i, j, s) in pos_half:
        basis_mats.append(mk(j, i, 1 / s))
        labels.append("u[-(e%d-e%d)]" % (i + 1, j + 1))
        grades.append(Q(-1, 2))
    for idx, m in enumerate(hf_mats):
        basis_mats.append(m)
        labels.append("hf%d" % (idx + 1))
        grades.append(Q(0))
    basis_mats.append(x_mat)
    labels.append("x")
    grades.append(Q(0))
    for (i, j, s) in pos_half:
        basis_mats.append(mk(i, j))
        labels.append("u[e%d-e%d]" % (i + 1, j + 1))
        grades.append(Q(1, 2))
    basis_mats.append(mk(ip, jp))
    labels.append("e_root")
    grades.append(Q(1))

    transpose_mats = [tuple(tuple(m[j][i] for j in range(n)) for i in range(n))
                      for m in basis_mats]
    return basis_mats, labels, grades, sig, c_form, transpose_mats


def _build_from_matrices(entry):
    """Realization read verbatim from the data file (used for spo21)."""
    n = entry["size"]
    sig = tuple(entry["parity_signature"])
    c_form = _q(entry["form_scale"])
    basis_mats = []
    for mat in entry["basis"]:
        basis_mats.append(tuple(tuple(_q(v) for v in row) for row in mat))
    labels = list(entry["labels"])
    grades = [_q(g) for g in entry["grades"]]
    transpose_mats = []
    for coeffs in entry["transpose"]:
        m = _zero(n)
        for k, c in coeffs.items():
            m = _madd(m, basis_mats[int(k)], 1, _q(c))
        transpose_mats.append(m)
    return basis_mats, labels, grades, sig, c_form, transpose_mats


@lru_cache(maxsize=None)
def build_algebra(name):
    """Construct the full structure-constant package for a supported algebra.

    Raises UnsupportedAlgebraError for anything outside {sl2, sl3, spo21,
    sl21}; in particular the rank-(1|1)-type algebra sl22 is rejected since
    its minimal reduction requires a quotient construction outside the scope
    of this package.
    """
    registry = _load_registry()["algebras"]
    if name == "sl22":
        raise UnsupportedAlgebraError(
            "sl22 is excluded: the bilinear form degenerates on the ideal "
            "and the minimal reduction needs a quotient construction this "
            "package does not implement; supported: %s" % (SUPPORTED,))
    if name not in registry:
        raise UnsupportedAlgebraError(
            "unknown algebra %r; supported: %s" % (name, SUPPORTED))
    entry = registry[name]
    if entry["type"] == "sl":
        built = _build_sl(name, entry["even"], entry["odd"])
    else:
        built = _build_from_matrices(entry)
    basis_mats, labels, grades, sig, c_form, transpose_mats = built

    dim = len(basis_mats)
    express = _coords_solver(basis_mats)
    parity = []
    for m in basis_mats:
        p = _mat_parity(m, sig)
        if p is None:
            raise ValueError("basis element of mixed parity")
        parity.append(p)
    parity = tuple(parity)

    bracket = {}
    for i in range(dim):
        for j in range(dim):
            b = _super_bracket(basis_mats[i], basis_mats[j],
                               parity[i], parity[j])
            coeffs = express(b)
            entry_ij = {k: c for k, c in enumerate(coeffs) if c != 0}
            if entry_ij:
                bracket[(i, j)] = entry_ij

    form = tuple(tuple(c_form * _supertrace(_mmul(basis_mats[i],
                                                  basis_mats[j]), sig)
                       for j in range(dim)) for i in range(dim))

    transpose = {}
    for i in range(dim):
        coeffs = express(transpose_mats[i])
        transpose[i] = {k: c for k, c in enumerate(coeffs) if c != 0}

    x_index = labels.index("x")
    hf = tuple(i for i, l in enumerate(labels) if l.startswith("hf"))
    cartan = hf + (x_index,)
    theta_plus = labels.index("e_root")
    theta_minus = labels.index("f")
    half_plus = tuple(i for i in range(dim) if grades[i] == Q(1, 2))
    half_minus = tuple(i for i in range(dim) if grades[i] == Q(-1, 2))

    roots = []
    for i in range(dim):
        vals = []
        for h in cartan:
            br = bracket.get((h, i), {})
            if not br:
                vals.append(Q(0))
            else:
                if set(br) != {i}:
                    raise ValueError("basis not a root decomposition")
                vals.append(br[i])
        roots.append(tuple(vals))
    roots = tuple(roots)

    # distinguished sl2-type triple: f is a basis vector, e = u_theta / 2
    triple_f = {theta_minus: Q(1)}
    triple_e = {theta_plus: Q(1, 2)}
    ef = bracket[(theta_plus, theta_minus)]
    triple_x = {k: c / 2 for k, c in ef.items()}
    data = SuperalgebraData(
        name=name, labels=tuple(labels), parity=parity, grade=tuple(grades),
        bracket=bracket, form=form, transpose=transpose, roots=roots,
        cartan=cartan, hf=hf, x_index=x_index, theta_plus=theta_plus,
        theta_minus=theta_minus, half_plus=half_plus, half_minus=half_minus,
        triple_e=triple_e, triple_x=triple_x, triple_f=triple_f)

    # cheap sanity: (theta|theta) = 2 and [x, e] = e
    assert _pair_theta(data, data.theta()) == 2
    assert data.bracket_vec(triple_x, triple_e) == triple_e
    return data


def _pair_theta(data, theta_vals):
    """(theta|theta) via the Cartan gram."""
    gram = [[data.form[i][j] for j in data.cartan] for i in data.cartan]
    inv = invert_dense(gram)
    vals = list(theta_vals)
    return sum(vals[i] * inv[i][j] * vals[j]
               for i in range(len(vals)) for j in range(len(vals)))


# ---------------------------------------------------------------------------
# derived quantities

def superdimension(data):
    """dim g_even - dim g_odd."""
    return sum(1 if p == 0 else -1 for p in data.parity)


def dual_coxeter(data):
    """h^vee from the Casimir acting on the adjoint representation.

    Uses the supertrace-contracted Casimir sum_i (-1)^{p_i} a_i a^i with
    (a_i | a^j) = delta_ij; its eigenvalue on u_theta is 2 h^vee under the
    (theta|theta) = 2 normalization.
    """
    dim = data.dim
    dual = invert_dense([list(row) for row in data.form])
    u = {data.theta_plus: Q(1)}
    total = {}
    for i in range(dim):
        ai = {i: Q(1)}
        adual = {l: dual[l][i] for l in range(dim) if dual[l][i] != 0}
        inner = data.bracket_vec(adual, u)
        outer = data.bracket_vec(ai, inner)
        s = -1 if data.parity[i] else 1
        for k, c in outer.items():
            total[k] = total.get(k, 0) + s * c
    total = {k: c for k, c in total.items() if c != 0}
    if set(total) != {data.theta_plus}:
        raise ValueError("Casimir did not act diagonally on u_theta")
    return total[data.theta_plus] / 2


def neutral_pairing(data):
    """Pairing <u|v> = chi-bar([u,v]) on the grade-1/2 root vectors."""
    half = data.half_plus
    gram = tuple(tuple(data.chi_bar(data.bracket_vec({a: Q(1)}, {b: Q(1)}))
                       for b in half) for a in half)
    try:
        inv = invert_dense([list(r) for r in gram])
    except ValueError:
        raise SingularGramError(
            "neutral pairing on g(1/2) is singular for %s" % data.name)
    dual = tuple(tuple(inv[i][j] for i in range(len(half)))
                 for j in range(len(half)))
    # dual[b] = coefficients of u^b over basis_half: <u_a | u^b> = delta
    return NeutralPairing(basis_half=half, gram=gram, dual_basis=dual)


def natural_cocycle(data, k, u, m, v, n):
    """Two-cocycle value on (u t^m, v t^n) for u, v in the centralizer of f.

    Evaluates m * delta_{m,n} * ((k + h^vee)(u|v)
    - 1/2 str_{g0}(ad u ad v)), which vanishes unless both elements sit in
    the grade-0 part of the centralizer.
    """
    if isinstance(u, int):
        u = {u: Q(1)}
    if isinstance(v, int):
        v = {v: Q(1)}
    for w in (u, v):
        if not data.centralizes_f(w):
            raise NotInCentralizerError(
                "element does not centralize f: %r" % (w,))
    if m != n:
        return Q(0)
    hv = dual_coxeter(data)
    g0 = [i for i in range(data.dim) if data.grade[i] == 0]
    tr = Q(0)
    for w in g0:
        inner = data.bracket_vec(v, {w: Q(1)})
        outer = data.bracket_vec(u, inner)
        s = -1 if data.parity[w] else 1
        tr += s * outer.get(w, Q(0))
    return m * ((Q(k) + hv) * data.form_vec(u, v) - tr / 2)
