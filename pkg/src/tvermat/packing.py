"""Disjoint base packings and independent-set covers via matroid union.

The workhorse is a breadth-first augmenting-path search in the exchange
digraph: maintain k pairwise disjoint independent sets, and per augmentation
grow their total size by one.  Sources are uncovered elements; following an
arc x -> y (y in part i, y in the fundamental circuit of x w.r.t. part i)
means "swap x into part i, y out"; a sink is an element insertable into some
part outright.  Applying a BFS-shortest path keeps all swaps simultaneously
valid.  When no augmenting path exists, the set of reachable elements is an
exact Edmonds-style certificate of maximality.
"""

from collections import deque
from dataclasses import dataclass, field

from .errors import InputError
from .matroids import Matroid, _as_idset


@dataclass
class BasePacking:
    """Pairwise disjoint bases of one matroid."""

    bases: list  # list of frozensets
    matroid: Matroid = field(repr=False, default=None)

    def __len__(self):
        return len(self.bases)

    def check(self):
        """Re-verify disjointness and independence; raises on violation."""
        seen = set()
        for b in self.bases:
            if seen & b:
                raise RuntimeError("packing violates disjointness")
            seen |= b
            if not self.matroid.is_independent(b):
                raise RuntimeError("packed set is dependent")
        full = self.matroid.rank()
        if any(len(b) != full for b in self.bases):
            raise RuntimeError("packed set is not a basis")
        return True


@dataclass
class PackingCertificate:
    """Witness set A with k*rank(A) + |E - A| < k*rank(E): no k disjoint bases."""

    witness: frozenset
    k: int

    def check(self, M):
        A = self.witness
        lhs = self.k * M.rank(A) + (M.n - len(A))
        rhs = self.k * M.rank()
        if lhs >= rhs:
            raise RuntimeError(
                f"invalid certificate: {self.k}*rank(A)+|E-A| = {lhs} >= {rhs}"
            )
        return True


@dataclass
class CoverCertificate:
    """Witness A' <= A with m*rank(A') < |A'|: A is no union of m independent sets."""

    witness: frozenset
    m: int

    def check(self, M):
        if self.m * M.rank(self.witness) >= len(self.witness):
            raise RuntimeError("invalid cover certificate")
        return True


def _fundamental_circuit(M, part, x):
    """Elements y of the independent set ``part`` with part - y + x independent.

    Assumes part + x is dependent; the circuit of x is {x} plus exactly these y.
    """
    base = frozenset(part)
    return [y for y in sorted(part) if M._indep((base - {y}) | {x})]


def _augment(M, parts, universe):
    """One BFS augmentation over the exchange digraph.

    parts: list of disjoint independent sets (mutated on success).
    universe: elements allowed to participate (sources drawn from here).
    Returns (True, None) after growing total size by one, or
    (False, reached) with the reachable element set when no path exists.
    """
    covered = {}
    for i, part in enumerate(parts):
        for e in part:
            covered[e] = i
    sources = [e for e in sorted(universe) if e not in covered]

    parent = {}  # element -> (predecessor element, part the element leaves)
    reached = set()
    queue = deque()
    for e in sources:
        reached.add(e)
        queue.append(e)

    while queue:
        x = queue.popleft()
        # sink test: some part accepts x directly (fixed part order => determinism)
        for i, part in enumerate(parts):
            if x in part:
                continue
            if M._indep(frozenset(part) | {x}):
                # unwind: insert x into part i, then replay the recorded swaps
                parts[i].add(x)
                cur = x
                while cur in parent:
                    prev, j = parent[cur]
                    parts[j].discard(cur)
                    parts[j].add(prev)
                    cur = prev
                seen = set()
                for p in parts:
                    if seen & p or not M._indep(frozenset(p)):
                        raise RuntimeError("augmentation produced an invalid family")
                    seen |= p
                return True, None
        for i, part in enumerate(parts):
            if x in part:
                continue
            for y in _fundamental_circuit(M, part, x):
                if y not in reached:
                    reached.add(y)
                    parent[y] = (x, i)
                    queue.append(y)
    return False, frozenset(reached)


def pack_k_bases(M, k, warm_start=None):
    """k pairwise disjoint bases of M, or a PackingCertificate that none exist.

    ``warm_start`` may carry disjoint independent sets to resume from (they
    are re-checked).  Oracle-call count is polynomial in n*k per augmentation.
    """
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    full = M.rank()
    parts = [set() for _ in range(k)]
    if warm_start is not None:
        for i, s in enumerate(warm_start[:k]):
            parts[i] = set(s)
        seen = set()
        for part in parts:
            if seen & part or not M._indep(frozenset(part)):
                raise InputError("warm start is not a disjoint independent family")
            seen |= part
    target = k * full
    universe = range(M.n)
    while sum(len(p) for p in parts) < target:
        ok, reached = _augment(M, parts, universe)
        if not ok:
            cert = PackingCertificate(reached, k)
            cert.check(M)
            return cert
    packing = BasePacking([frozenset(p) for p in parts], M)
    packing.check()
    return packing


def max_disjoint_bases(M):
    """(b, packing, certificate) with b = b(M) maximal.

    The packing holds b disjoint bases; the certificate proves b+1 are
    impossible.  Rank-0 matroids return b = 0 with no certificate (degenerate:
    the empty set is the unique basis).
    """
    if M.rank() == 0:
        return 0, BasePacking([], M), None
    k = 1
    packing = pack_k_bases(M, 1)
    while True:
        nxt = pack_k_bases(M, k + 1, warm_start=[set(b) for b in packing.bases])
        if isinstance(nxt, PackingCertificate):
            return k, packing, nxt
        packing = nxt
        k += 1


def pack_into_independent(M, A, m):
    """Partition A into at most m disjoint independent sets, or certify failure.

    Success returns a list of nonempty frozensets with union exactly A.
    Failure returns a CoverCertificate A' <= A with m*rank(A') < |A'|.
    """
    if m < 1:
        raise InputError(f"m must be positive, got {m}")
    A = _as_idset(A, M.n, "cover target")
    parts = [set() for _ in range(m)]
    while sum(len(p) for p in parts) < len(A):
        ok, reached = _augment(M, parts, A)
        if not ok:
            cert = CoverCertificate(reached, m)
            cert.check(M)
            return cert
    cover = [frozenset(p) for p in parts if p]
    union = frozenset().union(*cover) if cover else frozenset()
    assert union == A
    return cover


def partition_almost_equal(b, k):
    """Split {1..b} into k contiguous index blocks, sizes within floor/ceil of b/k.

    Larger blocks come first; deterministic.
    """
    if b < 0 or k < 1:
        raise InputError(f"need b >= 0 and k >= 1, got b={b}, k={k}")
    q, r = divmod(b, k)
    out = []
    start = 1
    for i in range(k):
        size = q + 1 if i < r else q
        out.append(list(range(start, start + size)))
        start += size
    return out
