"""Matroid oracles on a dense integer ground set.

A matroid here is an immutable independence oracle over elements 0..n-1.
Loops (elements in no independent singleton) are first-class: restriction
and contraction return oracles over the *original* index space with removed
elements turned into loops, which keeps labeled-vertex bookkeeping in joins
uniform.

Rank defaults to greedy growth of an independent subset, which is exact for
matroids; structured families override it with closed forms.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import InputError, PreconditionError


def _as_idset(S, n, what="element set"):
    """Normalize an iterable of element ids to a frozenset, range-checked."""
    ids = frozenset(S)
    for e in ids:
        if not isinstance(e, int) or isinstance(e, bool) or not 0 <= e < n:
            raise InputError(f"{what}: id {e!r} out of range 0..{n - 1}")
    return ids


class Matroid:
    """Independence/rank oracle over ground set {0, .., n-1}."""

    def __init__(self, n):
        if n < 0:
            raise InputError(f"ground size must be nonnegative, got {n}")
        self.n = n
        self._full_rank = None

    # -- subclass surface -------------------------------------------------

    def _indep(self, ids):
        """Independence of a validated frozenset of ids."""
        raise NotImplementedError

    # -- public oracle ----------------------------------------------------

    def is_independent(self, S):
        return self._indep(_as_idset(S, self.n))

    def rank(self, A=None):
        """Size of a maximal independent subset of A (the ground set if None).

        Greedy in ascending id order; exact because all maximal independent
        subsets of a set share their size.
        """
        ids = range(self.n) if A is None else sorted(_as_idset(A, self.n))
        if A is None and self._full_rank is not None:
            return self._full_rank
        picked = set()
        for e in ids:
            picked.add(e)
            if not self._indep(frozenset(picked)):
                picked.discard(e)
        r = len(picked)
        if A is None:
            self._full_rank = r
        return r

    def is_loop(self, e):
        return not self.is_independent((e,))

    def loops(self):
        return [e for e in range(self.n) if not self._indep(frozenset((e,)))]

    def non_loops(self):
        return [e for e in range(self.n) if self._indep(frozenset((e,)))]

    # -- minors (single-step, chainable) ----------------------------------

    def restrict(self, keep):
        """Oracle for M restricted to ``keep``; discarded elements become loops."""
        return _Restriction(self, _as_idset(keep, self.n, "restriction set"))

    def contract_link(self, v):
        """Oracle for the link of non-loop v: S independent iff v not in S and
        S + v independent in M.  v itself becomes a loop of the result."""
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InputError(f"element {v!r} out of range")
        if not self._indep(frozenset((v,))):
            raise PreconditionError(f"cannot contract loop {v}")
        return _Contraction(self, v)

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n})"


class _Restriction(Matroid):
    def __init__(self, parent, keep):
        super().__init__(parent.n)
        self.parent = parent
        self.keep = keep

    def _indep(self, ids):
        return ids <= self.keep and self.parent._indep(ids)


class _Contraction(Matroid):
    def __init__(self, parent, v):
        super().__init__(parent.n)
        self.parent = parent
        self.v = v

    def _indep(self, ids):
        return self.v not in ids and self.parent._indep(ids | {self.v})

    def rank(self, A=None):
        ids = frozenset(range(self.n)) if A is None else _as_idset(A, self.n)
        return self.parent.rank(ids | {self.v}) - 1


class UniformMatroid(Matroid):
    """U(r, n): every set of at most r elements is independent."""

    def __init__(self, r, n):
        super().__init__(n)
        if r < 0 or r > n:
            raise InputError(f"uniform rank must satisfy 0 <= r <= n, got r={r}, n={n}")
        self.r = r

    def _indep(self, ids):
        return len(ids) <= self.r

    def rank(self, A=None):
        k = self.n if A is None else len(_as_idset(A, self.n))
        return min(k, self.r)

    def __repr__(self):
        return f"UniformMatroid({self.r}, {self.n})"


class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph; ground elements are edge indices.

    Self-loop edges are loops of the matroid; parallel edges are permitted.
    """

    def __init__(self, num_vertices, edges):
        super().__init__(len(edges))
        if num_vertices < 0:
            raise InputError("vertex count must be nonnegative")
        self.num_vertices = num_vertices
        self.edges = []
        for u, v in edges:
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise InputError(f"edge ({u},{v}) has endpoint outside 0..{num_vertices - 1}")
            self.edges.append((u, v))

    def _merge_count(self, ids):
        # union-find; number of successful merges = rank of the edge set
        parent = {}

        def find(x):
            root = x
            while parent.get(root, root) != root:
                root = parent[root]
            while parent.get(x, x) != root:
                parent[x], x = root, parent[x]
            return root

        merges = 0
        for e in sorted(ids):
            u, v = self.edges[e]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                merges += 1
        return merges

    def _indep(self, ids):
        return self._merge_count(ids) == len(ids)

    def rank(self, A=None):
        ids = frozenset(range(self.n)) if A is None else _as_idset(A, self.n)
        return self._merge_count(ids)


class PartitionMatroid(Matroid):
    """Disjoint blocks with capacities; a set is independent iff it meets
    every block in at most its capacity."""

    def __init__(self, blocks, capacities):
        seen = set()
        flat = []
        for blk in blocks:
            for e in blk:
                if e in seen:
                    raise InputError(f"element {e} appears in two blocks")
                seen.add(e)
                flat.append(e)
        if seen != set(range(len(flat))):
            raise InputError("blocks must partition a contiguous range 0..n-1")
        if len(capacities) != len(blocks):
            raise InputError("one capacity per block required")
        if any(c < 0 for c in capacities):
            raise InputError("capacities must be nonnegative")
        super().__init__(len(flat))
        self.blocks = [frozenset(blk) for blk in blocks]
        self.capacities = list(capacities)
        self._block_of = {e: i for i, blk in enumerate(self.blocks) for e in blk}

    def _indep(self, ids):
        counts = {}
        for e in ids:
            i = self._block_of[e]
            counts[i] = counts.get(i, 0) + 1
            if counts[i] > self.capacities[i]:
                return False
        return True

    def rank(self, A=None):
        ids = frozenset(range(self.n)) if A is None else _as_idset(A, self.n)
        return sum(
            min(len(ids & blk), cap) for blk, cap in zip(self.blocks, self.capacities)
        )


def colourful_matroid(r, d):
    """Partition matroid with d+1 colour classes of r elements, capacity 1.

    Its independence complex is the colourful complex on r(d+1) vertices:
    rank d+1, and the transversals give exactly r pairwise disjoint bases.
    """
    if r < 1 or d < 0:
        raise InputError(f"need r >= 1 and d >= 0, got r={r}, d={d}")
    blocks = [list(range(c * r, (c + 1) * r)) for c in range(d + 1)]
    return PartitionMatroid(blocks, [1] * (d + 1))


def _scale_to_int(col):
    """Clear denominators of a rational column; scaling preserves dependence."""
    den = 1
    for x in col:
        den = den * x.denominator // gcd(den, x.denominator)
    return [int(x * den) for x in col]


class LinearMatroid(Matroid):
    """Columns of a matrix over Q (field=None) or GF(p) (field=p, p prime).

    Independence is decided by exact elimination: fraction-free with big
    integers over Q, modular over GF(p).  Zero columns are loops.
    """

    def __init__(self, columns, field=None):
        super().__init__(len(columns))
        if field is not None and (field < 2 or any(field % q == 0 for q in range(2, field) if q * q <= field)):
            raise InputError(f"field must be None (rationals) or a prime, got {field}")
        self.field = field
        if not columns:
            self.height = 0
            self.columns = []
            return
        self.height = len(columns[0])
        cols = []
        for col in columns:
            if len(col) != self.height:
                raise InputError("all columns must have the same height")
            if field is None:
                cols.append(_scale_to_int([Fraction(x) for x in col]))
            else:
                cols.append([int(x) % field for x in col])
        self.columns = cols

    def _column_rank(self, ids):
        cols = [list(self.columns[e]) for e in sorted(ids)]
        if self.field is not None:
            return _rank_mod_p([list(c) for c in cols], self.height, self.field)
        return _rank_fraction_free(cols, self.height)

    def _indep(self, ids):
        return self._column_rank(ids) == len(ids)

    def rank(self, A=None):
        ids = frozenset(range(self.n)) if A is None else _as_idset(A, self.n)
        return self._column_rank(ids)


def _rank_mod_p(cols, height, p):
    rows = [[col[i] % p for col in cols] for i in range(height)]
    rank = 0
    for c in range(len(cols)):
        piv = next((i for i in range(rank, height) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        for i in range(rank + 1, height):
            f = rows[i][c]
            if f:
                m = f * inv % p
                rows[i] = [(a - m * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _rank_fraction_free(cols, height):
    """Bareiss elimination on integer columns; division-free pivoting, exact."""
    rows = [[col[i] for col in cols] for i in range(height)]
    w = len(cols)
    rank = 0
    prev = 1
    for c in range(w):
        piv = next((i for i in range(rank, height) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(rank + 1, height):
            ri = rows[i]
            f = ri[c]
            # one-step Bareiss update: entries stay integral, divide by prior pivot
            rows[i] = [(pr[c] * a - f * b) // prev for a, b in zip(ri, pr)]
        prev = pr[c]
        rank += 1
    return rank


class ExplicitMatroid(Matroid):
    """Matroid given by its list of maximal independent sets (bases).

    Construction does not re-check the exchange axiom; run
    :func:`validate_matroid` on untrusted input first.
    """

    def __init__(self, n, maximal_sets):
        super().__init__(n)
        sets = [_as_idset(s, n, "maximal set") for s in maximal_sets]
        if not sets:
            sets = [frozenset()]
        # drop entries dominated by another listed set; they add nothing
        self.maximal_sets = [
            s for s in sets if not any(s < t for t in sets)
        ]
        # dedupe, deterministic order
        self.maximal_sets = sorted(set(self.maximal_sets), key=sorted)

    def _indep(self, ids):
        return any(ids <= b for b in self.maximal_sets)

    def rank(self, A=None):
        ids = frozenset(range(self.n)) if A is None else _as_idset(A, self.n)
        return max(len(ids & b) for b in self.maximal_sets)


def validate_matroid(n, maximal_sets):
    """Check the exchange axiom on the down-closure of ``maximal_sets``.

    Returns (True, None) or (False, (I, J)) where I, J are independent,
    |I| < |J|, and no x in J - I keeps I + x independent.  Exhaustive, so
    only meant for small ground sets.
    """
    sets = [_as_idset(s, n, "maximal set") for s in maximal_sets]
    if not sets:
        sets = [frozenset()]
    family = set()
    for s in sets:
        for k in range(len(s) + 1):
            family.update(frozenset(c) for c in combinations(sorted(s), k))
    by_size = {}
    for s in family:
        by_size.setdefault(len(s), []).append(s)
    sizes = sorted(by_size)
    for si in sizes:
        for sj in sizes:
            if si >= sj:
                continue
            for smaller in by_size[si]:
                for larger in by_size[sj]:
                    if not any(smaller | {x} in family for x in larger - smaller):
                        return False, (smaller, larger)
    return True, None


def explicit_from(M):
    """Re-express any matroid oracle as an ExplicitMatroid (small grounds only)."""
    bases = []
    r = M.rank()
    for c in combinations(range(M.n), r):
        if M.is_independent(c):
            bases.append(frozenset(c))
    return ExplicitMatroid(M.n, bases)
