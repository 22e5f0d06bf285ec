"""Exact reduced rational homology and the connectivity verifiers built on it.

Boundary matrices are sparse with entries +-1; ranks are computed over a large
prime field first (a sound *vanishing* certificate: the mod-p defect bounds
the rational Betti number from above, and Betti numbers are nonnegative) and
confirmed with exact division-free integer elimination before any
nonvanishing is reported.  Wrong Betti numbers would manufacture false
counterexamples, so the exact route is never skipped when it matters.
"""

from dataclasses import dataclass, field
from heapq import heapify, heappop, heappush
from math import gcd

from .errors import HypothesisViolation, InputError, PreconditionError
from .complexes import DEFAULT_FACE_CAP, matroid_deleted_join
from .packing import max_disjoint_bases, pack_into_independent, partition_almost_equal

FILTER_PRIME = (1 << 31) - 1  # Mersenne prime; mod-p ranks as a pre-filter


@dataclass
class SparseIntMatrix:
    """Column-major sparse integer matrix; columns hold (row, entry) pairs."""

    nrows: int
    ncols: int
    cols: list

    def column(self, j):
        return self.cols[j]

    def multiply_columns(self, other):
        """Compose self @ other symbolically; used to test boundary-of-boundary = 0."""
        out = []
        for col in other.cols:
            acc = {}
            for r, v in col:
                for rr, vv in self.cols[r]:
                    acc[rr] = acc.get(rr, 0) + v * vv
            out.append([(r, v) for r, v in sorted(acc.items()) if v])
        return SparseIntMatrix(self.nrows, other.ncols, out)

    def triplets(self):
        for j, col in enumerate(self.cols):
            for r, v in col:
                yield r, j, v


def boundary_matrix(X, i):
    """Simplicial boundary from i-faces to (i-1)-faces.

    Vertices of each face are in increasing encoded order; omitting position j
    contributes sign (-1)^j.  i = 0 gives the augmentation onto the empty face.
    """
    if i < 0:
        raise InputError(f"boundary dimension must be >= 0, got {i}")
    if not X._materialized_to(i):
        raise PreconditionError(f"faces at dimension {i} not materialized")
    faces_i = X.faces(i)
    if i == 0:
        return SparseIntMatrix(1, len(faces_i), [[(0, 1)] for _ in faces_i])
    rows = {f: idx for idx, f in enumerate(X.faces(i - 1))}
    cols = []
    for face in faces_i:
        entries = []
        for j in range(len(face)):
            sub = face[:j] + face[j + 1 :]
            entries.append((rows[sub], -1 if j % 2 else 1))
        cols.append(sorted(entries))
    return SparseIntMatrix(len(rows), len(faces_i), cols)


def _reduce_rows(rows, combine):
    """Leading-column reduction on sparse rows (dicts col -> value).

    Rows are bucketed by leading (minimum) column; each pivot clears its
    column from the cohabiting rows, whose new leading columns are strictly
    larger, so columns are processed once, in ascending (canonical) order.
    Pivot choice within a bucket: fewest entries, first among ties.
    """
    buckets = {}
    for r in rows:
        if r:
            buckets.setdefault(min(r), []).append(r)
    heap = sorted(buckets)
    heapify(heap)
    rank = 0
    while heap:
        c = heappop(heap)
        group = buckets.pop(c, None)
        if not group:
            continue
        pi = min(range(len(group)), key=lambda i: len(group[i]))
        pivot = group[pi]
        rank += 1
        for idx, r in enumerate(group):
            if idx == pi:
                continue
            nr = combine(pivot, r, c)
            if nr:
                mc = min(nr)
                if mc not in buckets:
                    heappush(heap, mc)
                    buckets[mc] = []
                buckets[mc].append(nr)
    return rank


def _rank_sparse_mod_p(cols, p):
    """Rank of a sparse integer matrix mod p; the elimination runs on the
    input columns as rows (rank is transpose-invariant)."""

    def combine(pivot, r, c):
        m = r[c] * pow(pivot[c], p - 2, p) % p
        nr = dict(r)
        for col, v in pivot.items():
            nv = (nr.get(col, 0) - m * v) % p
            if nv:
                nr[col] = nv
            else:
                nr.pop(col, None)
        return nr

    rows = []
    for col in cols:
        row = {r: v % p for r, v in col if v % p}
        if row:
            rows.append(row)
    return _reduce_rows(rows, combine)


def _rank_sparse_exact(cols):
    """Exact rank over Q: integer rows, division-free combination with gcd
    normalization to keep entries small."""

    def combine(pivot, r, c):
        a, b = pivot[c], r[c]
        g = gcd(a, b)
        ca, cb = a // g, b // g
        nr = {col: ca * v for col, v in r.items()}
        for col, v in pivot.items():
            nv = nr.get(col, 0) - cb * v
            if nv:
                nr[col] = nv
            else:
                nr.pop(col, None)
        if nr:
            gg = 0
            for v in nr.values():
                gg = gcd(gg, v)
            if gg > 1:
                nr = {col: v // gg for col, v in nr.items()}
        return nr

    rows = []
    for col in cols:
        row = {r: v for r, v in col if v}
        if row:
            rows.append(row)
    return _reduce_rows(rows, combine)


@dataclass
class BettiVector:
    """Reduced rational Betti numbers beta_0..beta_D (augmented chain complex)."""

    betti: tuple
    up_to: int
    f_vector: tuple
    exact_confirmations: int = 0

    def __iter__(self):
        return iter(self.betti)

    def __getitem__(self, i):
        return self.betti[i]


def betti_reduced(X, up_to, exact_only=False):
    """Reduced Betti numbers of X through degree ``up_to``.

    Requires materialization through dimension up_to+1 (the image of the next
    boundary map).  Mod-p ranks certify zeros outright; any apparent
    nonvanishing is recomputed with exact integer elimination.
    """
    if up_to < 0:
        raise InputError(f"up_to must be >= 0, got {up_to}")
    if not X._materialized_to(up_to + 1):
        raise PreconditionError(
            f"betti through {up_to} needs faces at dimension {up_to + 1}"
        )
    f = [len(X.faces(d)) for d in range(up_to + 2)]
    matrices = {}

    def cols_of(i):
        if i not in matrices:
            matrices[i] = boundary_matrix(X, i) if f[i] else None
        return matrices[i]

    def rank_of(i, exact):
        mat = cols_of(i)
        if mat is None or not mat.ncols:
            return 0
        if exact:
            return _rank_sparse_exact(mat.cols)
        return _rank_sparse_mod_p(mat.cols, FILTER_PRIME)

    ranks = [rank_of(i, exact_only) for i in range(up_to + 2)]
    betti = [f[i] - ranks[i] - ranks[i + 1] for i in range(up_to + 1)]
    confirmations = 0
    if not exact_only:
        exact_rank = {}
        for i in range(up_to + 1):
            if betti[i] > 0:
                for j in (i, i + 1):
                    if j not in exact_rank:
                        exact_rank[j] = rank_of(j, True)
                        confirmations += 1
                betti[i] = f[i] - exact_rank[i] - exact_rank[i + 1]
    if any(b < 0 for b in betti):
        raise RuntimeError("negative Betti number: rank computation inconsistent")
    return BettiVector(tuple(betti), up_to, tuple(f[: up_to + 1]),
                       exact_confirmations=confirmations)


@dataclass
class ConnectivityReport:
    """Outcome of a homological c-connectivity check."""

    bound: int
    verified: bool
    vanishing: tuple  # flags for degrees 0..bound
    first_nonvanishing: int | None
    f_vector: tuple
    num_faces: int
    betti_checked: tuple
    exact_confirmations: int = 0
    note: str = ""
    context: dict = field(default_factory=dict)

    def to_payload(self):
        out = {
            "bound": self.bound,
            "verified": self.verified,
            "vanishing": list(self.vanishing),
            "first_nonvanishing": self.first_nonvanishing,
            "f_vector": [1, *self.f_vector],
            "num_faces": self.num_faces,
            "betti_checked": list(self.betti_checked),
            "exact_confirmations": self.exact_confirmations,
        }
        if self.note:
            out["note"] = self.note
        if self.context:
            out["context"] = dict(self.context)
        return out


def homologically_connected(X, c):
    """Check the homological shadow of c-connectedness: reduced Betti numbers
    vanish through degree c, on a nonempty complex.

    c = -1 asks for nonemptiness only.  This is a necessary consequence of
    topological c-connectivity, hence a valid falsification test; it does not
    check the homotopy-level converse.
    """
    if c < -1:
        raise InputError(f"connectivity bound must be >= -1, got {c}")
    nonempty = bool(X.faces(0))
    fvec = X.f_vector()
    nfaces = X.num_faces()
    if c == -1:
        return ConnectivityReport(
            bound=c,
            verified=nonempty,
            vanishing=(),
            first_nonvanishing=None,
            f_vector=fvec,
            num_faces=nfaces,
            betti_checked=(),
            note="" if nonempty else "complex is empty",
        )
    if not nonempty:
        return ConnectivityReport(
            bound=c, verified=False, vanishing=tuple(False for _ in range(c + 1)),
            first_nonvanishing=0, f_vector=fvec, num_faces=nfaces,
            betti_checked=(), note="complex is empty",
        )
    bv = betti_reduced(X, c)
    flags = tuple(b == 0 for b in bv.betti)
    first_bad = next((i for i, ok in enumerate(flags) if not ok), None)
    return ConnectivityReport(
        bound=c,
        verified=all(flags),
        vanishing=flags,
        first_nonvanishing=first_bad,
        f_vector=fvec,
        num_faces=nfaces,
        betti_checked=bv.betti,
        exact_confirmations=bv.exact_confirmations,
    )


def _ceil_div(a, b):
    return -(-a // b)


def verify_claim(matroids, sets, m, cap=DEFAULT_FACE_CAP):
    """Verify the deleted-join connectivity bound for matroids M_1..M_k and
    pairwise disjoint sets A_1..A_k, each a union of at most m independent
    sets of its matroid.

    Hypotheses are validated first (disjointness; coverability via the union
    algorithm, raising HypothesisViolation with an exact certificate).  The
    bound is c = ceil(sum |A_i| / (m+1)) - 2; the deleted join is materialized
    through dimension c+1 and checked homologically.
    """
    matroids = list(matroids)
    sets = [frozenset(A) for A in sets]
    if len(matroids) != len(sets) or not matroids:
        raise InputError("need one set per matroid")
    if m < 1:
        raise InputError(f"m must be positive, got {m}")
    used = set()
    for A in sets:
        if used & A:
            raise HypothesisViolation(
                "sets are not pairwise disjoint", certificate=sorted(used & A)
            )
        used |= A
    for M, A in zip(matroids, sets):
        res = pack_into_independent(M, A, m)
        if not isinstance(res, list):
            raise HypothesisViolation(
                f"a set is not a union of {m} independent sets",
                certificate=res,
            )
    total = sum(len(A) for A in sets)
    c = _ceil_div(total, m + 1) - 2
    context = {"k": len(matroids), "m": m, "total": total}
    if c < -1:
        rep = ConnectivityReport(
            bound=c, verified=True, vanishing=(), first_nonvanishing=None,
            f_vector=(), num_faces=0, betti_checked=(),
            note="bound below -1 is vacuous", context=context,
        )
        return rep
    Y = matroid_deleted_join(matroids, max(c + 1, 0), cap)
    rep = homologically_connected(Y, c)
    rep.context.update(context)
    return rep


def verify_corollary(M, k, cap=DEFAULT_FACE_CAP):
    """Verify the packing-derived connectivity bound for the k-fold deleted join.

    Computes b = b(M), partitions the packed bases into k almost equal groups
    (sizes within floor/ceil of b/k), and checks the floor of
    b*rank/(ceil(b/k)+1) - 2; "connectivity >= x" for real x means i-connected
    for every integer i <= x, so flooring is the faithful integer reading.
    """
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    b, packing, _ = max_disjoint_bases(M)
    rho = M.rank()
    context = {"b": b, "rank": rho, "k": k}
    if b == 0:
        rep = ConnectivityReport(
            bound=-2, verified=True, vanishing=(), first_nonvanishing=None,
            f_vector=(), num_faces=0, betti_checked=(),
            note="rank-0 matroid: bound is vacuous", context=context,
        )
        return rep
    groups = partition_almost_equal(b, k)
    unions = [
        frozenset().union(*(packing.bases[j - 1] for j in grp)) if grp else frozenset()
        for grp in groups
    ]
    m = _ceil_div(b, k)
    # hypothesis re-check: each union splits into at most m independent sets
    for A in unions:
        res = pack_into_independent(M, A, m)
        if not isinstance(res, list):
            raise RuntimeError("base packing failed its own coverability re-check")
    c = (b * rho) // (m + 1) - 2
    context["m"] = m
    if c < -1:
        rep = ConnectivityReport(
            bound=c, verified=True, vanishing=(), first_nonvanishing=None,
            f_vector=(), num_faces=0, betti_checked=(),
            note="bound below -1 is vacuous", context=context,
        )
        return rep
    Y = matroid_deleted_join([M] * k, max(c + 1, 0), cap)
    rep = homologically_connected(Y, c)
    rep.context.update(context)
    return rep


@dataclass
class ConjectureRecord:
    """Evidence row for the deleted-join connectivity conjecture."""

    b: int
    rank: int
    k: int
    target: int
    verified: bool
    report: ConnectivityReport


def conjecture_scan(M, k, cap=DEFAULT_FACE_CAP):
    """Check whether the k-fold deleted join is (k*rank - 2)-connected and
    record it together with b(M); accumulating such records over a matroid
    family is the evidence-gathering mode for the conjectured threshold."""
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    rho = M.rank()
    b, _, _ = max_disjoint_bases(M)
    c = k * rho - 2
    if c < -1:
        rep = ConnectivityReport(
            bound=c, verified=True, vanishing=(), first_nonvanishing=None,
            f_vector=(), num_faces=0, betti_checked=(),
            note="bound below -1 is vacuous",
        )
    else:
        Y = matroid_deleted_join([M] * k, max(c + 1, 0), cap)
        rep = homologically_connected(Y, c)
    rep.context.update({"b": b, "rank": rho, "k": k, "target": c})
    return ConjectureRecord(b=b, rank=rho, k=k, target=c, verified=rep.verified,
                            report=rep)


def conjecture_scan_batch(matroids, k, cap=DEFAULT_FACE_CAP):
    """Run conjecture_scan over an iterable of (name, matroid) pairs."""
    return [(name, conjecture_scan(M, k, cap)) for name, M in matroids]
