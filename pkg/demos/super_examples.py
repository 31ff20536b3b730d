"""The two superalgebra cases: half-integer gradings and odd generators.

spo21 carries one odd half-step root, sl21 a pair of them; both reduced
sides therefore mix free bosons with free fermions and their characters
live on a half-integer energy grid.

Run:  python3 demos/super_examples.py
"""

from fractions import Fraction as Q

from miniw.algebra import build_algebra, dual_coxeter, superdimension
from miniw.brst import chain_window, cohomology_dims, verify_nilpotency
from miniw.verma import TruncationWindow
from miniw.wchar import central_charge, series_total, w_verma_character
from miniw.acceptance import generic_weight

for name in ("spo21", "sl21"):
    data = build_algebra(name)
    print("== %s ==" % name)
    print("dimension %d, superdimension %d, dual Coxeter number %s"
          % (data.dim, superdimension(data), dual_coxeter(data)))
    print("central charge at level 1: %s" % central_charge(data, 1))

    wv = w_verma_character(data, 3)
    grid = [Q(m, 2) for m in range(7)]
    print("free reduced-module series on the half-integer grid:")
    print("  " + "  ".join("q^%s:%d" % (m, series_total(wv, m))
                           for m in grid))

    lam = generic_weight(data)
    rep = verify_nilpotency(data, lam, "verma", TruncationWindow(1, 2))
    print("nilpotency on a depth-1 window: %d states, %s"
          % (rep.states_checked, "OK" if rep.ok else "BROKEN"))
    print()

# the spo21 cohomology matches its free series, fermionic steps included
data = build_algebra("spo21")
lam = generic_weight(data)
wv = w_verma_character(data, 2)
print("spo21 cohomology against the free series, offsets 0..2 by halves:")
for i in range(5):
    m = Q(i, 2)
    dims = cohomology_dims(data, lam, "verma", m,
                           chain_window(data, lam, m, 4))
    got, stab = dims.get(0, (0, True))
    print("  offset %-4s predicted %d  computed %d  stabilized %s"
          % (m, series_total(wv, m), got, stab))
