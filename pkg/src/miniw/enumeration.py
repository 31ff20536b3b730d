"""Exhaustive enumeration of creation-operator monomials hitting an exact
weight target.

A factor is anything with a nonnegative integer delta-depth and a finite
drop vector expressed in simple-root coordinates (positive entries descend,
negative entries climb).  Words are multisets of factors subject to
max-multiplicity constraints (1 for fermionic factors).  The enumerator
walks factors in a fixed order with budget pruning; because every climbing
factor costs at least one unit of depth, the search space for a fixed
target is finite and the result is exact — no boundary states are missed.
"""

from fractions import Fraction

Q = Fraction


class Factor:
    __slots__ = ("tag", "depth", "coords", "max_mult")

    def __init__(self, tag, depth, coords, max_mult=None):
        self.tag = tag                  # opaque handle returned to caller
        self.depth = depth              # integer >= 0
        self.coords = tuple(coords)     # finite drop, simple-root coords
        self.max_mult = max_mult        # None = unbounded (bosonic)

    def __repr__(self):
        return "Factor(%r, d=%s, c=%s)" % (self.tag, self.depth, self.coords)


class Enumerator:
    """Enumerates multiplicity vectors over a fixed factor list."""

    def __init__(self, factors):
        self.factors = list(factors)
        n = len(self.factors[0].coords) if self.factors else 0
        self.ncoords = n
        # suffix climb/descent rates per coordinate and unit of depth
        self.suffix_climb = []
        self.suffix_desc = []          # entry None = unbounded (depth-0)
        climb = [Q(0)] * n
        desc = [Q(0)] * n
        acc_c, acc_d = [list(climb)], [list(desc)]
        for f in reversed(self.factors):
            climb = list(climb)
            desc = list(desc)
            for j, c in enumerate(f.coords):
                if c < 0 and f.depth > 0:
                    climb[j] = max(climb[j], -c / f.depth)
                if c > 0:
                    if f.depth == 0:
                        desc[j] = None
                    elif desc[j] is not None:
                        desc[j] = max(desc[j], c / f.depth)
            acc_c.append(list(climb))
            acc_d.append(list(desc))
        self.suffix_climb = acc_c[::-1]
        self.suffix_desc = acc_d[::-1]
        self._memo = {}

    def _feasible(self, i, depth, coords):
        if depth < 0:
            return False
        climb = self.suffix_climb[i]
        desc = self.suffix_desc[i]
        for j, c in enumerate(coords):
            if c < 0 and -c > depth * climb[j]:
                return False
            if c > 0 and desc[j] is not None and c > depth * desc[j]:
                return False
        return True

    def enumerate(self, depth, coords):
        """All multiplicity vectors with total drop exactly (depth, coords).

        Returns a list of tuples of (factor_index, multiplicity) pairs.
        """
        coords = tuple(coords)
        return self._rec(0, depth, coords)

    def _rec(self, i, depth, coords):
        key = (i, depth, coords)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if not self._feasible(i, depth, coords):
            self._memo[key] = []
            return []
        if i == len(self.factors):
            out = [()] if depth == 0 and not any(coords) else []
            self._memo[key] = out
            return out
        f = self.factors[i]
        # multiplicity cap from the depth budget and from the descent need
        cap = None
        if f.depth > 0:
            cap = depth // f.depth
        for j, c in enumerate(f.coords):
            if c > 0:
                climb_rest = self.suffix_climb[i + 1][j]
                room = coords[j] + depth * climb_rest
                this = int(room / c) if room >= 0 else 0
                cap = this if cap is None else min(cap, this)
        if f.max_mult is not None:
            cap = f.max_mult if cap is None else min(cap, f.max_mult)
        if cap is None:
            raise ValueError("unbounded factor with no descent: %r" % (f,))
        out = []
        for mult in range(cap + 1):
            rest_depth = depth - mult * f.depth
            rest = tuple(c - mult * fc for c, fc in zip(coords, f.coords))
            for tail in self._rec(i + 1, rest_depth, rest):
                out.append((((i, mult),) + tail) if mult else tail)
        self._memo[key] = out
        return out

    def words(self, depth, coords):
        """Like enumerate(), but expands tags with multiplicities."""
        res = []
        for mv in self.enumerate(depth, coords):
            word = []
            for i, mult in mv:
                word.extend([self.factors[i].tag] * mult)
            res.append(tuple(word))
        return res
