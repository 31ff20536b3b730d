"""Ghost and neutral free-field spaces: relations and graded counts."""

import itertools
from fractions import Fraction as Q

import miniw.weights as W
from miniw.algebra import build_algebra, neutral_pairing
from miniw.fock import CO, GH, charged_space, fock_character, neutral_space
from miniw.verma import TruncationWindow


def test_neutral_twisted_contraction():
    data = build_algebra("sl21")
    sp = neutral_space(data)
    gram = neutral_pairing(data).gram
    nh = len(data.half_plus)
    for a in range(nh):
        for b in range(nh):
            # annihilator at 0 meets creator at -1: the twisted pairing
            got = sp.apply(a, 0, ((-1, b),))
            assert got.get((), 0) == gram[a][b]
    # odd generators square to zero
    for a in range(nh):
        w = sp.apply(a, -1, ())
        assert all(sp.apply(a, -1, word) == {} for word in w)


def test_neutral_reordering_sign():
    data = build_algebra("sl21")
    sp = neutral_space(data)
    # apply two distinct odd creators in both orders
    w01 = sp.apply(0, -1, ((-1, 1),))
    w10 = sp.apply(1, -1, ((-1, 0),))
    (word0, c0), = w01.items()
    (word1, c1), = w10.items()
    assert word0 == word1
    assert c0 == -c1


def test_charged_contraction_and_caps():
    data = build_algebra("sl2")
    sp = charged_space(data)
    # sl2: one even positive root, so its ghosts are fermionic
    assert sp.parity == (1,)
    vac_gh = sp.apply(GH, 0, -1, ())
    assert vac_gh == {((GH, -1, 0),): Q(1)}
    # annihilate straight back
    assert sp.apply(CO, 0, 1, ((GH, -1, 0),)).get((), 0) == 1
    # fermionic cap
    assert sp.apply(GH, 0, -1, ((GH, -1, 0),)) == {}
    # CO creates at mode 0
    assert ((CO, 0, 0),) in sp.apply(CO, 0, 0, ())
    # GH at 0 annihilates the vacuum but not the CO(0) state
    assert sp.apply(GH, 0, 0, ()) == {}
    assert sp.apply(GH, 0, 0, ((CO, 0, 0),)).get((), 0) != 0


def test_charged_word_weight_signs():
    data = build_algebra("sl2")
    sp = charged_space(data)
    theta = data.roots[data.theta_plus]
    wgh = sp.word_weight(((GH, -1, 0),))
    wco = sp.word_weight(((CO, 0, 0),))
    assert wgh.h_part == theta and wgh.delta == -1
    assert wco.h_part == tuple(-v for v in theta) and wco.delta == 0


def _brute_charged_count(data, depth, height):
    """Independent census of charged words by brute-force subsets."""
    pos = data.positive_roots
    modes = []
    for a, i in enumerate(pos):
        if data.parity[i] != 0:
            continue  # bosonic ghosts would need multiplicities
        for n in range(-depth, 0):
            modes.append((GH, n, a))
        for n in range(-depth, 1):
            modes.append((CO, n, a))
    counts = {}
    for r in range(len(modes) + 1):
        for combo in itertools.combinations(modes, r):
            d = -sum(n for _, n, _ in combo)
            if d > depth:
                continue
            drop = [Q(0)] * len(data.cartan)
            for kind, n, a in combo:
                s = -1 if kind == CO else 1
                for t, v in enumerate(data.roots[pos[a]]):
                    drop[t] += s * v
            if W.finite_height(data, drop) > height:
                continue
            ch = sum(1 if k == CO else -1 for k, n, a in combo)
            wt = W.AffineWeight(tuple(drop), Q(0), Q(-d))
            counts[(wt, ch)] = counts.get((wt, ch), 0) + 1
    return counts


def test_charged_character_matches_brute_force():
    for name in ("sl2", "sl3"):
        data = build_algebra(name)
        if any(data.parity[i] for i in data.positive_roots):
            continue
        win = TruncationWindow(2, 2)
        got = fock_character(data, "charged", win)
        want = _brute_charged_count(data, 2, 2)
        assert got == want


def test_neutral_character_small():
    data = build_algebra("spo21")
    win = TruncationWindow(3, 3)
    got = fock_character(data, "neutral", win)
    # one odd neutral field: at most one quantum per negative mode, so the
    # count at depth d is the number of partitions of d into distinct parts
    by_depth = {}
    for wt, c in got.items():
        by_depth[-wt.delta] = by_depth.get(-wt.delta, 0) + c
    assert by_depth == {0: 1, 1: 1, 2: 1, 3: 2}
