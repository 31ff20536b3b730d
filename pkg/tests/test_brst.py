"""The reduction complex: differential, cohomology, dressed currents."""

from fractions import Fraction as Q

import pytest

import miniw.weights as W
from miniw.acceptance import boundary_weight, generic_weight
from miniw.algebra import build_algebra
from miniw.brst import (chain_window, cohomology_dims, complex_basis,
                        differential, j_current, verify_nilpotency)
from miniw.errors import WindowOverflowError
from miniw.verma import TruncationWindow


def test_top_block_is_the_vacuum():
    data = build_algebra("sl2")
    lam = generic_weight(data)
    states = complex_basis(data, lam, "verma", lam)
    assert len(states) == 1
    st = states[0]
    assert st.verma == () and st.neutral == () and st.charged == ()
    assert st.degree == 0 and st.weight == lam


def test_first_chain_block_two_term_map():
    # one ghost-degree -1 state below the top, mapping with coefficient 1
    # into each of the two degree-0 states (the weight-preserving and the
    # chain-shifting row)
    data = build_algebra("sl2")
    lam = generic_weight(data)
    eta = lam - W.alpha0(data)
    blk = differential(data, lam, "verma", eta, -1)
    assert len(blk.cols) == 1
    assert len(blk.rows_same) == 1 and len(blk.rows_shift) == 1
    assert blk.entry(0, 0) == 1 and blk.entry(1, 0) == 1
    assert blk.rows_same[0].weight == eta
    assert blk.rows_shift[0].weight == eta + W.alpha0(data)


def test_differential_row_split_is_exhaustive():
    data = build_algebra("spo21")
    lam = generic_weight(data)
    a0 = W.alpha0(data)
    for drop in (1, 2):
        eta = lam - a0.scale(drop)
        for deg in (-1, 0):
            blk = differential(data, lam, "verma", eta, deg)
            for st in blk.rows_same:
                assert st.weight == eta and st.degree == deg + 1
            for st in blk.rows_shift:
                assert st.weight == eta + a0 and st.degree == deg + 1


@pytest.mark.parametrize("name,depth", [("sl2", 2), ("spo21", 1)])
def test_nilpotency_quick(name, depth):
    data = build_algebra(name)
    rep = verify_nilpotency(data, generic_weight(data), "verma",
                            TruncationWindow(depth, 2 * depth))
    assert rep.ok and rep.max_residual == 0
    assert rep.states_checked > 0 and rep.boundary_skipped == ()


def test_nilpotency_simple_backend():
    data = build_algebra("sl2")
    rep = verify_nilpotency(data, boundary_weight(data), "simple",
                            TruncationWindow(2, 4))
    assert rep.ok


def test_cohomology_verma_first_levels():
    data = build_algebra("sl2")
    lam = generic_weight(data)
    for m, want in ((Q(0), 1), (Q(1), 1), (Q(2), 2)):
        dims = cohomology_dims(data, lam, "verma", m,
                               chain_window(data, lam, m, 4))
        assert dims[0] == (want, True)
        for deg, (d, stab) in dims.items():
            if deg != 0:
                assert d == 0 and stab


def test_cohomology_unreachable_t_weight():
    data = build_algebra("sl2")
    lam = generic_weight(data)
    assert cohomology_dims(data, lam, "verma", Q(1, 3),
                           TruncationWindow(5, 5, 3)) == {}


def test_cohomology_window_guards():
    data = build_algebra("sl2")
    lam = generic_weight(data)
    with pytest.raises(ValueError):
        cohomology_dims(data, lam, "verma", Q(0),
                        TruncationWindow(4, 4, 0))
    with pytest.raises(WindowOverflowError):
        cohomology_dims(data, lam, "verma", Q(0),
                        TruncationWindow(3, 4, 3))
    with pytest.raises(WindowOverflowError):
        cohomology_dims(data, lam, "verma", Q(2),
                        TruncationWindow(5, 1, 3))


def test_simple_quotient_degenerate_vanishes():
    data = build_algebra("sl2")
    lam0 = boundary_weight(data)
    dims = cohomology_dims(data, lam0, "simple", Q(0),
                           chain_window(data, lam0, Q(0), 3))
    for deg, (d, stab) in dims.items():
        assert d == 0 and stab


# -- dressed currents ---------------------------------------------------------

def test_current_requires_nonpositive_grade():
    data = build_algebra("sl2")
    lam = generic_weight(data)
    with pytest.raises(ValueError):
        j_current(data, lam, "verma", data.theta_plus, 0, lam)


def test_cartan_current_on_vacuum_line():
    data = build_algebra("sl21")
    lam = generic_weight(data)
    blk = j_current(data, lam, "verma", data.hf[0], 0, lam)
    assert len(blk.cols) == len(blk.rows) == 1
    assert blk.matrix.rows[0].get(0) == lam.h_part[0]


def test_cartan_current_diagonal_with_neutral_correction():
    # The dressed current of h only carries the module and charged-ghost
    # bilinears, so on a state with neutral content the eigenvalue is the
    # block weight plus the (ungauged) neutral weight.
    data = build_algebra("sl21")
    lam = generic_weight(data)
    hpos = data.hf[0]
    s0 = W.AffineWeight(W.simple_roots(data)[0], Q(0), Q(0))
    eta = lam - W.alpha0(data) - s0
    blk = j_current(data, lam, "verma", hpos, 0, eta)
    n = len(blk.cols)
    assert len(blk.rows) == n
    for c, st in enumerate(blk.cols):
        expect = eta.h_part[0]
        for _, a in st.neutral:
            expect -= data.roots[data.half_plus[a]][0]
        for r in range(n):
            assert blk.matrix.rows[r].get(c, Q(0)) == \
                (expect if r == c else Q(0))


def test_lowering_current_shifts_energy():
    data = build_algebra("sl21")
    lam = generic_weight(data)
    eta = lam - W.alpha0(data)
    for n in (0, 1, 2):
        blk = j_current(data, lam, "verma", data.theta_minus, n, eta)
        for st in blk.rows:
            assert W.dW_of(data, st.weight) - W.dW_of(data, eta) == n - 1
