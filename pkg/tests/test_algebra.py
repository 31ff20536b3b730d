"""Structure constants, invariant form, and derived scalars."""

from fractions import Fraction as Q

import pytest

import miniw.weights as W
from miniw.algebra import (build_algebra, dual_coxeter, natural_cocycle,
                           neutral_pairing, superdimension)
from miniw.errors import NotInCentralizerError, UnsupportedAlgebraError

ALL = ("sl2", "sl3", "spo21", "sl21")


@pytest.fixture(params=ALL, scope="module")
def data(request):
    return build_algebra(request.param)


def test_unknown_algebra_rejected():
    with pytest.raises(UnsupportedAlgebraError):
        build_algebra("g2")


def test_super_jacobi(data):
    n = data.dim
    units = [{i: Q(1)} for i in range(n)]
    for i in range(n):
        for j in range(n):
            bij = data.bracket_vec(units[i], units[j])
            sgn = -1 if (data.parity[i] and data.parity[j]) else 1
            for k in range(n):
                left = data.bracket_vec(bij, units[k])
                right = dict(data.bracket_vec(
                    units[i], data.bracket_vec(units[j], units[k])))
                for m, c in data.bracket_vec(
                        units[j],
                        data.bracket_vec(units[i], units[k])).items():
                    right[m] = right.get(m, Q(0)) - sgn * c
                assert all(left.get(m, 0) == right.get(m, 0)
                           for m in set(left) | set(right)), (i, j, k)


def test_form_invariant_supersymmetric_graded(data):
    n = data.dim
    units = [{i: Q(1)} for i in range(n)]
    for i in range(n):
        for j in range(n):
            sgn = -1 if (data.parity[i] and data.parity[j]) else 1
            assert data.form[i][j] == sgn * data.form[j][i]
            if data.grade[i] + data.grade[j] != 0:
                assert data.form[i][j] == 0
            for k in range(n):
                assert data.form_vec(data.bracket_vec(units[i], units[j]),
                                     units[k]) == \
                    data.form_vec(units[i],
                                  data.bracket_vec(units[j], units[k]))


def test_gradation_shape(data):
    assert set(data.grade) <= {Q(-1), Q(-1, 2), Q(0), Q(1, 2), Q(1)}
    assert [i for i in range(data.dim) if data.grade[i] == 1] == \
        [data.theta_plus]
    assert [i for i in range(data.dim) if data.grade[i] == -1] == \
        [data.theta_minus]
    assert {i for i in range(data.dim) if data.grade[i] == 0} == \
        set(data.cartan)
    assert len(data.half_plus) == len(data.half_minus)
    theta = data.theta()
    assert W.finite_pair(data, theta, theta) == 2


def test_root_vector_pairing_normalized(data):
    for a in data.positive_roots:
        partner = [b for b in range(data.dim)
                   if data.roots[b] == tuple(-r for r in data.roots[a])
                   and data.grade[b] == -data.grade[a]]
        assert len(partner) == 1
        assert data.form[a][partner[0]] == 1


def test_triple_brackets(data):
    # stored normalization: [x, e] = e, [x, f] = -f, [e, f] = x, so that
    # (2e, 2x, f) is a classical sl2-triple and (f | u_theta) = 1
    e, f, x = data.triple_e, data.triple_f, data.triple_x
    assert data.bracket_vec(x, e) == e
    assert data.bracket_vec(x, f) == {i: -c for i, c in f.items()}
    assert data.bracket_vec(e, f) == x
    assert data.form_vec(e, f) == Q(1, 2)
    assert data.chi_bar(data.theta_plus) == 1


def test_scalar_invariants():
    assert {n: dual_coxeter(build_algebra(n)) for n in ALL} == \
        {"sl2": 2, "sl3": 3, "spo21": Q(3, 2), "sl21": 1}
    assert {n: superdimension(build_algebra(n)) for n in ALL} == \
        {"sl2": 3, "sl3": 8, "spo21": 1, "sl21": 0}


def test_neutral_pairing_inverse(data):
    if not data.half_plus:
        pytest.skip("no half-step roots")
    pairing = neutral_pairing(data)
    nh = len(pairing.basis_half)
    for b in range(nh):
        for a in range(nh):
            got = sum(pairing.gram[a][c] * pairing.dual_basis[b][c]
                      for c in range(nh))
            assert got == (1 if a == b else 0)


def test_cocycle_centralizer_guard(data):
    with pytest.raises(NotInCentralizerError):
        natural_cocycle(data, Q(1), data.theta_plus, 1, data.theta_minus, 1)


def test_cocycle_mode_structure(data):
    f = data.theta_minus
    assert natural_cocycle(data, Q(1), f, 1, f, 2) == 0
    one = natural_cocycle(data, Q(1), f, 1, f, 1)
    three = natural_cocycle(data, Q(1), f, 3, f, 3)
    assert three == 3 * one
