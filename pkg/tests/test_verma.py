"""Highest-weight modules: PBW bases, contravariant form, toy complexes."""

from fractions import Fraction as Q

import pytest

import miniw.weights as W
from miniw.acceptance import boundary_weight, generic_weight
from miniw.algebra import build_algebra
from miniw.errors import WindowOverflowError
from miniw.verma import (TruncationWindow, act, char_module, gram_rank,
                         sl2_f_homology, verma_basis, zero_mode_cohomology)


def _brute_verma_dims(data, window):
    """Independent PBW census: multisets over creation modes with caps.

    Height is filtered only at the leaves because drops can cancel (a
    raising root vector at a negative mode pulls the finite part back
    up).  Zero-mode creators cost no depth, so their multiplicity is
    bounded through the height budget instead.
    """
    creators = []
    for i in range(data.dim):
        odd = data.parity[i] == 1
        start = 0 if data.grade[i] < 0 else 1
        for n in range(start, window.depth + 1):
            creators.append((i, -n, odd))
    free_cap = window.height + 2 * window.depth
    counts = {}

    def rec(pos, depth_used, drop):
        if pos == len(creators):
            if W.finite_height(data, drop) <= window.height:
                key = (Q(depth_used), W.simple_coords(data, tuple(drop)))
                counts[key] = counts.get(key, 0) + 1
            return
        i, m, odd = creators[pos]
        cap = 1 if odd else (window.depth if m else free_cap)
        for mult in range(cap + 1):
            cost = mult * -m
            if depth_used + cost > window.depth:
                break
            rec(pos + 1, depth_used + cost,
                [d - mult * r for d, r in zip(drop, data.roots[i])])

    rec(0, 0, [Q(0)] * len(data.cartan))
    return {k: v for k, v in counts.items() if v}


@pytest.mark.parametrize("name", ["sl2", "spo21", "sl21"])
def test_basis_census_matches_brute_force(name):
    data = build_algebra(name)
    lam = generic_weight(data)
    win = TruncationWindow(2, 3)
    got = {}
    for mu, words in verma_basis(data, lam, win).items():
        diff = lam - mu
        key = (diff.delta, W.simple_coords(data, diff.h_part))
        got[key] = len(words)
    assert got == _brute_verma_dims(data, win)


def test_depth_two_zero_drop_dimension():
    # sl2 at delta-drop 2 with no root drop, all six words: h(-2),
    # h(-1)^2, e(-1)f(-1), e(-2)f(0), e(-1)h(-1)f(0), e(-1)^2 f(0)^2
    data = build_algebra("sl2")
    lam = generic_weight(data)
    table = verma_basis(data, lam, TruncationWindow(2, 4))
    mu = lam - W.AffineWeight((Q(0),), Q(0), Q(2))
    assert len(table[mu]) == 6


def test_gram_rank_detects_singular_vector():
    data = build_algebra("sl2")
    a0 = W.alpha0(data)

    lam = generic_weight(data)
    assert gram_rank(data, lam, lam - a0) == (1, 1)

    lam0 = boundary_weight(data)
    assert gram_rank(data, lam0, lam0 - a0) == (1, 0)
    assert gram_rank(data, lam0, lam0) == (1, 1)


def test_char_module_simple_vs_verma():
    data = build_algebra("sl2")
    lam0 = boundary_weight(data)
    win = TruncationWindow(2, 4)
    full = char_module(data, lam0, "verma", win)
    red = char_module(data, lam0, "simple", win)
    assert all(red.get(mu, 0) <= d for mu, d in full.items())
    assert sum(red.values()) < sum(full.values())


def test_windowed_action_overflow():
    data = build_algebra("sl2")
    lam = generic_weight(data)
    win = TruncationWindow(1, 2)
    with pytest.raises(WindowOverflowError):
        act(data, lam, data.theta_minus, -2, {(): Q(1)}, window=win)


def test_rank_one_homology_table():
    assert sl2_f_homology(0, "verma") == (1, 0)
    assert sl2_f_homology(Q(1, 2), "verma") == (1, 0)
    for a in (0, 1, 2):
        assert sl2_f_homology(a, "simple") == (0, 0)
    for a in (Q(1, 2), Q(-3, 2)):
        assert sl2_f_homology(a, "simple") == (1, 0)
    # contragredient Verma modules keep a single survivor for every weight
    for a in (Q(1, 2), 2):
        assert sl2_f_homology(a, "dual_verma") == (1, 0)


def test_zero_mode_cohomology_cases():
    for name in ("sl2", "sl21"):
        data = build_algebra(name)
        assert zero_mode_cohomology(data, generic_weight(data)) == (1, 0)
        assert zero_mode_cohomology(data, boundary_weight(data),
                                    "simple") == (0, 0)
        # a generic weight has no singular vectors: the simple quotient
        # keeps the whole chain and the count agrees with the Verma case
        assert zero_mode_cohomology(data, generic_weight(data),
                                    "simple") == (1, 0)
